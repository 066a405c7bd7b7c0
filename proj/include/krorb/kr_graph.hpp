#pragma once

#include <string>
#include <vector>

#include "krorb/decomposition.hpp"

namespace krorb {

// The Kronrod-Reeb graph expanded from a decomposition tree. One root vertex
// stands for the reference boundary; every atom becomes one vertex joined to
// its parent by one edge; rep subtrees are instantiated once per copy index
// 0..m-1, fixed subtrees once. Always a tree: |edges| = |vertices| - 1.
//
// A vertex is external iff it has degree 1 and is an extremum or boundary
// vertex; root and atom vertices are internal whatever their degree. An edge
// is external iff incident to an external vertex.
struct KRGraph {
  enum class VertexKind { Root, Atom, Extremum, Boundary };
  enum class EdgeClass { Internal, External };

  // One step of an instance path: which tree node, and which rep copy
  // (always 0 for fixed children and for the root node).
  struct Step {
    int node = -1;
    int copy = 0;
    friend bool operator==(const Step&, const Step&) = default;
  };

  struct Vertex {
    int id = -1;
    VertexKind kind = VertexKind::Root;
    std::vector<Step> path;  // instance path from the root; empty for the root vertex
  };

  struct Edge {
    int id = -1;
    int parent = -1;  // vertex nearer the root
    int child = -1;
    EdgeClass cls = EdgeClass::Internal;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<int> degree;       // per vertex
  std::vector<int> parent_edge;  // per vertex; -1 for the root

  bool internal_vertex(int id) const {
    const VertexKind k = vertices[static_cast<std::size_t>(id)].kind;
    return !(degree[static_cast<std::size_t>(id)] == 1 &&
             (k == VertexKind::Extremum || k == VertexKind::Boundary));
  }
};

// Expands a valid tree. Deterministic: ids are assigned in depth-first
// order, rep copies in copy order, reps before fixed children.
KRGraph build_kr_graph(const DecompositionTree& tree);

// Ids of the edges whose both endpoints are internal, ascending.
std::vector<int> internal_edges(const KRGraph& graph);

// DOT text: vertex kinds as labels, internal edges solid, external dashed,
// everything ordered by id. Byte-identical across runs for equal input.
std::string export_dot(const KRGraph& graph);

}  // namespace krorb
