#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace krorb {

// An invariant violation in a decomposition tree, with the path of the
// offending node ("root.fixed[1].reps[0]", ...).
struct TreeError : std::runtime_error {
  int node_id;
  std::string path;

  TreeError(const std::string& message, int node_id, std::string path)
      : std::runtime_error(message), node_id(node_id), path(std::move(path)) {}
};

enum class Surface { Disk, Cylinder };

// A rooted decorated tree describing a function on the disk or cylinder up
// to the data the orbit recursion needs. Leaves are non-degenerate extremum
// disks (E) or the far boundary circle of a cylinder (B). An atom is a
// critical level together with its saturated neighborhood; it carries the
// symmetry order m, one representative per orbit of freely-permuted child
// components (each standing for m copies) and the invariant children. The
// component containing the reference boundary is implicit in the parent
// edge. Nodes live in an arena; ids are preorder indices.
struct DecompositionTree {
  enum class NodeKind { Extremum, Boundary, Atom };

  struct Node {
    NodeKind kind = NodeKind::Extremum;
    int m = 0;                // Atom only, >= 1
    std::vector<int> reps;    // Atom: orbit representatives, empty iff m == 1
    std::vector<int> fixed;   // Atom: invariant children; size <= 1 when m >= 2
    std::size_t offset = 0;   // byte offset in source text, 0 for built trees
  };

  Surface surface = Surface::Disk;
  std::vector<Node> nodes;
  int root = -1;

  const Node& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }

  // Appends a node and returns its id, for building trees in code.
  int add_extremum();
  int add_boundary();
  int add_atom(int m, std::vector<int> reps, std::vector<int> fixed);
};

// "root", "root.reps[0].fixed[1]", ...
std::string node_path(const DecompositionTree& tree, int id);

// Parses the tree grammar (whitespace-insensitive):
//
//   top  := "(disk" node ")" | "(cyl" node ")"
//   node := "(E)" | "(B)" | "(A" NAT "reps" "[" node* "]" "fixed" "[" node* "]" ")"
//
// All invariants are validated; violations surface as positioned ParseErrors.
DecompositionTree parse_tree(std::string_view text);

// Canonical text in the grammar above; parses back to an equal tree.
std::string render_tree(const DecompositionTree& tree);

// Checks the structural invariants:
//   - atom multiplicity m >= 1, with reps empty iff m == 1;
//   - at most one fixed child when m >= 2;
//   - B exactly once on a cylinder, never on a disk, never under a rep edge.
// Throws TreeError naming the offending node path.
void validate(const DecompositionTree& tree);

}  // namespace krorb
