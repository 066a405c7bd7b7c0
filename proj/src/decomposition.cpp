#include "krorb/decomposition.hpp"

#include <cctype>

#include "krorb/realization.hpp"

namespace krorb {

int DecompositionTree::add_extremum() {
  nodes.push_back({NodeKind::Extremum, 0, {}, {}, 0});
  return static_cast<int>(nodes.size()) - 1;
}

int DecompositionTree::add_boundary() {
  nodes.push_back({NodeKind::Boundary, 0, {}, {}, 0});
  return static_cast<int>(nodes.size()) - 1;
}

int DecompositionTree::add_atom(int m, std::vector<int> reps, std::vector<int> fixed) {
  nodes.push_back({NodeKind::Atom, m, std::move(reps), std::move(fixed), 0});
  return static_cast<int>(nodes.size()) - 1;
}

namespace {

struct PathEntry {
  int parent;
  bool via_rep;
  int slot;
};

// parent/slot bookkeeping for every node, derived on demand.
std::vector<PathEntry> parent_map(const DecompositionTree& t) {
  std::vector<PathEntry> up(t.nodes.size(), {-1, false, 0});
  for (int id = 0; id < static_cast<int>(t.nodes.size()); ++id) {
    const auto& n = t.node(id);
    if (n.kind != DecompositionTree::NodeKind::Atom) continue;
    for (std::size_t i = 0; i < n.reps.size(); ++i) up[n.reps[i]] = {id, true, static_cast<int>(i)};
    for (std::size_t i = 0; i < n.fixed.size(); ++i) up[n.fixed[i]] = {id, false, static_cast<int>(i)};
  }
  return up;
}

}  // namespace

std::string node_path(const DecompositionTree& tree, int id) {
  const auto up = parent_map(tree);
  std::vector<std::string> parts;
  int cur = id;
  while (cur != tree.root && cur >= 0) {
    const PathEntry& e = up[cur];
    parts.push_back(std::string(e.via_rep ? "reps[" : "fixed[") + std::to_string(e.slot) + "]");
    cur = e.parent;
  }
  std::string out = "root";
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out += "." + *it;
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : s_(text) {}

  DecompositionTree parse() {
    skip_ws();
    expect('(', "expected '('");
    const std::string word = read_word();
    if (word == "disk")
      tree_.surface = Surface::Disk;
    else if (word == "cyl")
      tree_.surface = Surface::Cylinder;
    else
      fail(word_at_, "expected 'disk' or 'cyl'");
    tree_.root = parse_node();
    skip_ws();
    expect(')', "expected ')'");
    skip_ws();
    if (i_ < s_.size()) fail(i_, "unexpected trailing input");
    return std::move(tree_);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) {
    auto [line, col] = position_of(s_, at);
    throw ParseError(message, at, line, col);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char c, const std::string& message) {
    if (i_ >= s_.size() || s_[i_] != c) fail(i_, message);
    ++i_;
  }

  std::string read_word() {
    skip_ws();
    word_at_ = i_;
    std::string w;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) w += s_[i_++];
    if (w.empty()) fail(i_, "expected a word");
    return w;
  }

  int read_nat() {
    skip_ws();
    const std::size_t at = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail(i_, "expected a number");
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1000000) fail(at, "atom multiplicity too large");
      ++i_;
    }
    if (v == 0) fail(at, "atom multiplicity must be >= 1");
    return static_cast<int>(v);
  }

  std::vector<int> parse_node_list() {
    skip_ws();
    expect('[', "expected '['");
    std::vector<int> ids;
    for (;;) {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        return ids;
      }
      ids.push_back(parse_node());
    }
  }

  int parse_node() {
    skip_ws();
    const std::size_t at = i_;
    expect('(', "expected '('");
    const std::string word = read_word();
    // Reserve the slot first so ids come out in preorder.
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    auto finish = [&](DecompositionTree::Node n) {
      n.offset = at;
      tree_.nodes[id] = std::move(n);
      skip_ws();
      expect(')', "expected ')'");
      return id;
    };
    if (word == "E") return finish({DecompositionTree::NodeKind::Extremum, 0, {}, {}, 0});
    if (word == "B") return finish({DecompositionTree::NodeKind::Boundary, 0, {}, {}, 0});
    if (word != "A") fail(word_at_, "expected 'E', 'B' or 'A'");
    const int m = read_nat();
    if (read_word() != "reps") fail(word_at_, "expected 'reps'");
    std::vector<int> reps = parse_node_list();
    if (read_word() != "fixed") fail(word_at_, "expected 'fixed'");
    std::vector<int> fixed = parse_node_list();
    return finish({DecompositionTree::NodeKind::Atom, m, std::move(reps), std::move(fixed), 0});
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t word_at_ = 0;
  DecompositionTree tree_;
};

void check_invariants(const DecompositionTree& t) {
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size()))
    throw TreeError("tree has no root", -1, "root");
  using Kind = DecompositionTree::NodeKind;

  std::vector<int> boundary_ids;

  // Walk from the root tracking whether any ancestor edge is a rep edge.
  struct Item {
    int id;
    bool under_rep;
  };
  std::vector<Item> stack{{t.root, false}};
  while (!stack.empty()) {
    const auto [id, under_rep] = stack.back();
    stack.pop_back();
    const auto& n = t.node(id);
    switch (n.kind) {
      case Kind::Extremum:
        break;
      case Kind::Boundary:
        if (t.surface != Surface::Cylinder)
          throw TreeError("B outside cylinder", id, node_path(t, id));
        if (under_rep) throw TreeError("B inside reps", id, node_path(t, id));
        boundary_ids.push_back(id);
        break;
      case Kind::Atom:
        if (n.m < 1) throw TreeError("atom multiplicity must be >= 1", id, node_path(t, id));
        if (n.m == 1 && !n.reps.empty())
          throw TreeError("reps nonempty requires m >= 2", id, node_path(t, id));
        if (n.m >= 2 && n.reps.empty())
          throw TreeError("m >= 2 requires nonempty reps", id, node_path(t, id));
        if (n.m >= 2 && n.fixed.size() > 1)
          throw TreeError("|fixed| > 1 with m >= 2", id, node_path(t, id));
        // Children are pushed reversed so the walk pops them in document
        // order; the "second B" complaint then names the later one.
        for (auto it = n.fixed.rbegin(); it != n.fixed.rend(); ++it)
          stack.push_back({*it, under_rep});
        for (auto it = n.reps.rbegin(); it != n.reps.rend(); ++it) stack.push_back({*it, true});
        break;
    }
  }

  if (t.surface == Surface::Cylinder && boundary_ids.empty())
    throw TreeError("cylinder requires exactly one B", t.root, node_path(t, t.root));
  if (boundary_ids.size() > 1)
    throw TreeError("cylinder requires exactly one B", boundary_ids[1],
                    node_path(t, boundary_ids[1]));
}

void render_node(const DecompositionTree& t, int id, std::string& out) {
  const auto& n = t.node(id);
  switch (n.kind) {
    case DecompositionTree::NodeKind::Extremum:
      out += "(E)";
      return;
    case DecompositionTree::NodeKind::Boundary:
      out += "(B)";
      return;
    case DecompositionTree::NodeKind::Atom: {
      out += "(A " + std::to_string(n.m) + " reps [";
      for (std::size_t i = 0; i < n.reps.size(); ++i) {
        if (i) out += ' ';
        render_node(t, n.reps[i], out);
      }
      out += "] fixed [";
      for (std::size_t i = 0; i < n.fixed.size(); ++i) {
        if (i) out += ' ';
        render_node(t, n.fixed[i], out);
      }
      out += "])";
      return;
    }
  }
}

}  // namespace

DecompositionTree parse_tree(std::string_view text) {
  DecompositionTree t = TreeParser(text).parse();
  try {
    check_invariants(t);
  } catch (const TreeError& e) {
    const std::size_t at = e.node_id >= 0 ? t.node(e.node_id).offset : 0;
    auto [line, col] = position_of(text, at);
    throw ParseError(e.what(), at, line, col);
  }
  return t;
}

std::string render_tree(const DecompositionTree& tree) {
  std::string out = tree.surface == Surface::Disk ? "(disk " : "(cyl ";
  render_node(tree, tree.root, out);
  out += ")";
  return out;
}

void validate(const DecompositionTree& tree) { check_invariants(tree); }

}  // namespace krorb
