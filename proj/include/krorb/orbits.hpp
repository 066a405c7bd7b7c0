#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "krorb/group.hpp"
#include "krorb/kr_graph.hpp"

namespace krorb {

// A bijection on edge ids preserving incidence structure and vertex kinds.
struct EdgePermutation {
  std::vector<int> image;  // image[edge_id]
};

// The group of f-preserving diffeomorphisms isotopic to the identity rel the
// reference boundary, modulo isotopy, as a realization word. Structural
// recursion over the tree:
//   leaf                        -> 1
//   atom m == 1, fixed F1..Fa   -> G(F1) x ... x G(Fa) x Z
//   atom m >= 2, reps R1..Rc    -> (G(R1) x ... x G(Rc)) wr_m Z
//   atom m >= 2, fixed X1       -> ((...) wr_m Z) x G(X1)
// Products come out right-nested; the raw word is not normalized.
GroupExpr stabilizer_group(const DecompositionTree& tree);

// One generator per expanded atom instance with m >= 2: it advances the copy
// index of every rep-copy subtree of that instance by 1 mod m and fixes all
// other edges. A nested atom contributes one generator per instance.
std::vector<EdgePermutation> rotation_generators(const DecompositionTree& tree,
                                                 const KRGraph& graph);

// Orbits of the internal edges under the group generated by the given
// permutations, by breadth-first closure over generator images (the full
// permutation group is never materialized). Each orbit is sorted; orbits are
// ordered by smallest member.
std::vector<std::vector<int>> edge_orbits(const KRGraph& graph,
                                          const std::vector<EdgePermutation>& generators);

// Orbit count straight from the recursion: leaves contribute 0, every atom
// contributes the counts of its reps (once each) and fixed children plus 1.
int orbit_count_recursive(const DecompositionTree& tree);

// Outcome of the dual computation on one tree. pass iff all three counts
// agree; a failure is an implementation bug, so the tree text rides along as
// a replay reproducer.
struct VerificationReport {
  int beta1 = 0;
  int orbits_bruteforce = 0;
  int orbits_recursive = 0;
  std::string group_word;
  bool pass = false;
  std::chrono::microseconds elapsed{0};
  std::string tree_text;

  // "key: value" lines.
  std::string text_block() const;
  // One tab-separated line: PASS|FAIL, beta1, orbits_bruteforce,
  // orbits_recursive, elapsed_us, group word, tree text.
  std::string record_line() const;
};

VerificationReport verify_tree(const DecompositionTree& tree);

// Deterministic pseudo-random valid tree; same seed, same tree. The surface
// is drawn from the seed, and a cylinder routes its single B down fixed
// children only.
DecompositionTree random_tree(int max_depth, int max_children, int max_m, std::uint64_t seed);

}  // namespace krorb
