#pragma once

// Test-only deterministic generators and tree surgery helpers.

#include <random>
#include <utility>
#include <vector>

#include "krorb/decomposition.hpp"
#include "krorb/group.hpp"
#include "krorb/rng.hpp"

namespace krorb::testgen {

// Random word of depth <= max_depth. Draw order is fixed so a seeded engine
// replays the same word.
inline GroupExpr random_expr(std::mt19937_64& rng, int max_depth) {
  if (max_depth <= 0) return draw_int(rng, 0, 1) ? GroupExpr::z() : GroupExpr::trivial();
  switch (draw_int(rng, 0, 3)) {
    case 0:
      return GroupExpr::trivial();
    case 1:
      return GroupExpr::z();
    case 2: {
      GroupExpr l = random_expr(rng, max_depth - 1);
      GroupExpr r = random_expr(rng, max_depth - 1);
      return GroupExpr::product(std::move(l), std::move(r));
    }
    default: {
      GroupExpr b = random_expr(rng, max_depth - 1);
      return GroupExpr::wreath(std::move(b), static_cast<int>(draw_int(rng, 1, 4)));
    }
  }
}

// Copies the subtree of src rooted at src_id into dst's arena; returns the
// id of the copy.
inline int graft(DecompositionTree& dst, const DecompositionTree& src, int src_id) {
  const DecompositionTree::Node& n = src.node(src_id);
  switch (n.kind) {
    case DecompositionTree::NodeKind::Extremum:
      return dst.add_extremum();
    case DecompositionTree::NodeKind::Boundary:
      return dst.add_boundary();
    default: {
      std::vector<int> reps;
      std::vector<int> fixed;
      for (int c : n.reps) reps.push_back(graft(dst, src, c));
      for (int c : n.fixed) fixed.push_back(graft(dst, src, c));
      return dst.add_atom(n.m, std::move(reps), std::move(fixed));
    }
  }
}

// Random subtree that never contains a boundary leaf, built into t's arena;
// returns its root id. Safe to place under any rep or fixed slot of a disk.
inline int random_disk_node(DecompositionTree& t, std::mt19937_64& rng, int depth) {
  if (depth <= 0 || draw_int(rng, 0, 2) == 0)
    return draw_int(rng, 0, 2) == 0 ? t.add_atom(1, {}, {}) : t.add_extremum();
  const int m = static_cast<int>(draw_int(rng, 1, 3));
  std::vector<int> reps;
  std::vector<int> fixed;
  if (m == 1) {
    const int k = static_cast<int>(draw_int(rng, 0, 3));
    for (int i = 0; i < k; ++i) fixed.push_back(random_disk_node(t, rng, depth - 1));
  } else {
    const int c = static_cast<int>(draw_int(rng, 1, 2));
    for (int i = 0; i < c; ++i) reps.push_back(random_disk_node(t, rng, depth - 1));
    if (draw_int(rng, 0, 1)) fixed.push_back(random_disk_node(t, rng, depth - 1));
  }
  return t.add_atom(m, std::move(reps), std::move(fixed));
}

}  // namespace krorb::testgen
