#include "krorb/kr_graph.hpp"

namespace krorb {

namespace {

class Builder {
 public:
  explicit Builder(const DecompositionTree& tree) : tree_(tree) {}

  KRGraph build() {
    g_.vertices.push_back({0, KRGraph::VertexKind::Root, {}});
    g_.parent_edge.push_back(-1);
    expand(tree_.root, 0, {}, 0);
    g_.degree.assign(g_.vertices.size(), 0);
    for (const auto& e : g_.edges) {
      ++g_.degree[static_cast<std::size_t>(e.parent)];
      ++g_.degree[static_cast<std::size_t>(e.child)];
    }
    for (auto& e : g_.edges)
      e.cls = g_.internal_vertex(e.parent) && g_.internal_vertex(e.child)
                  ? KRGraph::EdgeClass::Internal
                  : KRGraph::EdgeClass::External;
    return std::move(g_);
  }

 private:
  void expand(int node_id, int parent_vertex, std::vector<KRGraph::Step> path, int copy) {
    path.push_back({node_id, copy});
    const auto& n = tree_.node(node_id);
    KRGraph::VertexKind kind;
    switch (n.kind) {
      case DecompositionTree::NodeKind::Extremum:
        kind = KRGraph::VertexKind::Extremum;
        break;
      case DecompositionTree::NodeKind::Boundary:
        kind = KRGraph::VertexKind::Boundary;
        break;
      default:
        kind = KRGraph::VertexKind::Atom;
        break;
    }
    const int v = static_cast<int>(g_.vertices.size());
    g_.vertices.push_back({v, kind, path});
    const int e = static_cast<int>(g_.edges.size());
    g_.edges.push_back({e, parent_vertex, v, KRGraph::EdgeClass::Internal});
    g_.parent_edge.push_back(e);
    if (n.kind == DecompositionTree::NodeKind::Atom) {
      for (int r : n.reps)
        for (int j = 0; j < n.m; ++j) expand(r, v, path, j);
      for (int f : n.fixed) expand(f, v, path, 0);
    }
  }

  const DecompositionTree& tree_;
  KRGraph g_;
};

const char* kind_label(KRGraph::VertexKind k) {
  switch (k) {
    case KRGraph::VertexKind::Root:
      return "root";
    case KRGraph::VertexKind::Atom:
      return "atom";
    case KRGraph::VertexKind::Extremum:
      return "ext";
    case KRGraph::VertexKind::Boundary:
      return "boundary";
  }
  return "?";
}

}  // namespace

KRGraph build_kr_graph(const DecompositionTree& tree) { return Builder(tree).build(); }

std::vector<int> internal_edges(const KRGraph& graph) {
  std::vector<int> out;
  for (const auto& e : graph.edges)
    if (e.cls == KRGraph::EdgeClass::Internal) out.push_back(e.id);
  return out;
}

std::string export_dot(const KRGraph& graph) {
  std::string out = "graph kr {\n  node [shape=circle];\n";
  for (const auto& v : graph.vertices)
    out += "  v" + std::to_string(v.id) + " [label=\"" + kind_label(v.kind) + "\"];\n";
  for (const auto& e : graph.edges) {
    out += "  v" + std::to_string(e.parent) + " -- v" + std::to_string(e.child);
    out += e.cls == KRGraph::EdgeClass::Internal ? " [style=solid" : " [style=dashed";
    out += ",label=\"e" + std::to_string(e.id) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace krorb
