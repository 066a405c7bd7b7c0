#include "krorb/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "krorb/realization.hpp"
#include "krorb/rng.hpp"

namespace krorb {

namespace {

GroupExpr node_group(const DecompositionTree& t, int id) {
  const auto& n = t.node(id);
  if (n.kind != DecompositionTree::NodeKind::Atom) return GroupExpr::trivial();
  if (n.m == 1) {
    GroupExpr acc = GroupExpr::z();
    for (auto it = n.fixed.rbegin(); it != n.fixed.rend(); ++it)
      acc = GroupExpr::product(node_group(t, *it), std::move(acc));
    return acc;
  }
  GroupExpr reps = node_group(t, n.reps.back());
  for (auto it = std::next(n.reps.rbegin()); it != n.reps.rend(); ++it)
    reps = GroupExpr::product(node_group(t, *it), std::move(reps));
  GroupExpr w = GroupExpr::wreath(std::move(reps), n.m);
  if (n.fixed.empty()) return w;
  return GroupExpr::product(std::move(w), node_group(t, n.fixed[0]));
}

int node_orbits(const DecompositionTree& t, int id) {
  const auto& n = t.node(id);
  if (n.kind != DecompositionTree::NodeKind::Atom) return 0;
  int total = 1;
  for (int r : n.reps) total += node_orbits(t, r);
  for (int f : n.fixed) total += node_orbits(t, f);
  return total;
}

}  // namespace

GroupExpr stabilizer_group(const DecompositionTree& tree) {
  validate(tree);
  return node_group(tree, tree.root);
}

int orbit_count_recursive(const DecompositionTree& tree) {
  validate(tree);
  return node_orbits(tree, tree.root);
}

std::vector<EdgePermutation> rotation_generators(const DecompositionTree& tree,
                                                 const KRGraph& graph) {
  // Each edge is the parent edge of its child vertex, so permuting child
  // vertices by instance path permutes edges.
  std::map<std::vector<std::pair<int, int>>, int> vertex_at;
  auto key = [](const std::vector<KRGraph::Step>& path) {
    std::vector<std::pair<int, int>> k;
    k.reserve(path.size());
    for (const auto& s : path) k.emplace_back(s.node, s.copy);
    return k;
  };
  for (const auto& v : graph.vertices) vertex_at[key(v.path)] = v.id;

  std::vector<EdgePermutation> gens;
  for (const auto& v : graph.vertices) {
    if (v.kind != KRGraph::VertexKind::Atom) continue;
    const auto& atom = tree.node(v.path.back().node);
    if (atom.m < 2) continue;
    const std::set<int> rep_nodes(atom.reps.begin(), atom.reps.end());

    EdgePermutation perm;
    perm.image.resize(graph.edges.size());
    std::iota(perm.image.begin(), perm.image.end(), 0);
    const std::size_t depth = v.path.size();
    for (const auto& w : graph.vertices) {
      if (w.path.size() <= depth) continue;
      if (!std::equal(v.path.begin(), v.path.end(), w.path.begin())) continue;
      if (!rep_nodes.count(w.path[depth].node)) continue;
      auto target = key(w.path);
      target[depth].second = (target[depth].second + 1) % atom.m;
      perm.image[graph.parent_edge[w.id]] = graph.parent_edge[vertex_at.at(target)];
    }
    gens.push_back(std::move(perm));
  }
  return gens;
}

std::vector<std::vector<int>> edge_orbits(const KRGraph& graph,
                                          const std::vector<EdgePermutation>& generators) {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(graph.edges.size(), 0);
  for (int e0 : internal_edges(graph)) {
    if (seen[e0]) continue;
    std::vector<int> orbit{e0};
    seen[e0] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const int e = orbit[head];
      for (const auto& g : generators) {
        const int img = g.image[e];
        if (!seen[img]) {
          seen[img] = 1;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string VerificationReport::text_block() const {
  std::string out;
  out += "tree: " + tree_text + "\n";
  out += "group: " + group_word + "\n";
  out += "beta1: " + std::to_string(beta1) + "\n";
  out += "orbits_bruteforce: " + std::to_string(orbits_bruteforce) + "\n";
  out += "orbits_recursive: " + std::to_string(orbits_recursive) + "\n";
  out += std::string("pass: ") + (pass ? "true" : "false") + "\n";
  out += "elapsed_us: " + std::to_string(elapsed.count()) + "\n";
  return out;
}

std::string VerificationReport::record_line() const {
  std::string out = pass ? "PASS" : "FAIL";
  out += "\t" + std::to_string(beta1);
  out += "\t" + std::to_string(orbits_bruteforce);
  out += "\t" + std::to_string(orbits_recursive);
  out += "\t" + std::to_string(elapsed.count());
  out += "\t" + group_word;
  out += "\t" + tree_text;
  return out;
}

VerificationReport verify_tree(const DecompositionTree& tree) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.tree_text = render_tree(tree);
  const GroupExpr g = stabilizer_group(tree);
  r.group_word = render(g);
  r.beta1 = beta1(g);
  const KRGraph graph = build_kr_graph(tree);
  r.orbits_bruteforce =
      static_cast<int>(edge_orbits(graph, rotation_generators(tree, graph)).size());
  r.orbits_recursive = orbit_count_recursive(tree);
  r.pass = r.beta1 == r.orbits_bruteforce && r.beta1 == r.orbits_recursive;
  r.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  return r;
}

namespace {

class TreeGen {
 public:
  TreeGen(int max_depth, int max_children, int max_m, std::uint64_t seed)
      : max_depth_(std::max(1, max_depth)),
        max_children_(std::max(1, max_children)),
        max_m_(std::max(1, max_m)),
        rng_(seed) {}

  DecompositionTree gen() {
    DecompositionTree t;
    t.surface = draw_int(rng_, 0, 1) ? Surface::Cylinder : Surface::Disk;
    t.root = gen_node(t, 1, t.surface == Surface::Cylinder);
    return t;
  }

 private:
  // carries_b: this subtree must contain the single B, reachable through
  // fixed children only.
  int gen_node(DecompositionTree& t, int depth, bool carries_b) {
    const bool at_bottom = depth >= max_depth_;
    // Leaf probability grows with depth.
    const bool leaf = at_bottom || draw_int(rng_, 1, max_depth_) <= depth;
    if (leaf) {
      if (carries_b) return t.add_boundary();
      switch (draw_int(rng_, 0, 2)) {
        case 0:
          return t.add_atom(1, {}, {});  // degenerate extremum
        default:
          return t.add_extremum();
      }
    }
    const int m = static_cast<int>(draw_int(rng_, 1, max_m_));
    std::vector<int> reps;
    std::vector<int> fixed;
    if (m == 1) {
      const int nfixed =
          static_cast<int>(draw_int(rng_, carries_b ? 1 : 0, max_children_));
      const int b_slot = carries_b ? static_cast<int>(draw_int(rng_, 0, nfixed - 1)) : -1;
      for (int i = 0; i < nfixed; ++i) fixed.push_back(gen_node(t, depth + 1, i == b_slot));
    } else {
      const int nreps = static_cast<int>(draw_int(rng_, 1, max_children_));
      for (int i = 0; i < nreps; ++i) reps.push_back(gen_node(t, depth + 1, false));
      if (carries_b)
        fixed.push_back(gen_node(t, depth + 1, true));
      else if (draw_int(rng_, 0, 1))
        fixed.push_back(gen_node(t, depth + 1, false));
    }
    return t.add_atom(m, std::move(reps), std::move(fixed));
  }

  int max_depth_;
  int max_children_;
  int max_m_;
  std::mt19937_64 rng_;
};

}  // namespace

DecompositionTree random_tree(int max_depth, int max_children, int max_m, std::uint64_t seed) {
  return TreeGen(max_depth, max_children, max_m, seed).gen();
}

}  // namespace krorb
