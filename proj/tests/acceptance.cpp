// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "krorb/decomposition.hpp"
#include "krorb/group.hpp"
#include "krorb/kr_graph.hpp"
#include "krorb/orbits.hpp"
#include "krorb/realization.hpp"
#include "krorb/rng.hpp"

using namespace krorb;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " " << detail
            << "\n";
  if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// (beta1, orbit count) for the three one-edge instances, both orbit paths,
// each under a millisecond.
void criterion1() {
  struct Case {
    const char* text;
    int expected;
  };
  const Case cases[] = {
      {"(disk (E))", 0},
      {"(disk (A 1 reps [] fixed []))", 1},
      {"(cyl (B))", 0},
  };
  bool ok = true;
  std::string times;
  for (const Case& c : cases) {
    const Clock::time_point t0 = Clock::now();
    const VerificationReport r = verify_tree(parse_tree(c.text));
    const double ms = ms_since(t0);
    ok = ok && r.beta1 == c.expected && r.orbits_bruteforce == c.expected &&
         r.orbits_recursive == c.expected && r.pass && ms < 1.0;
    if (!times.empty()) times += "/";
    times += std::to_string(ms).substr(0, 5);
  }
  report(1, ok, "base cases give (beta1, orbits) = (0,0), (1,1), (0,0) in " + times + " ms");
}

// 500 random trees, depth <= 5 and at most 40 edges: the group's beta1, the
// brute-force orbit count and the recursive count agree on every one.
void criterion2() {
  const Clock::time_point t0 = Clock::now();
  std::mt19937_64 master(20240817);
  int accepted = 0;
  int agreements = 0;
  std::size_t max_edges = 0;
  while (accepted < 500) {
    const DecompositionTree t = random_tree(5, 3, 3, master());
    const KRGraph g = build_kr_graph(t);
    if (g.edges.size() > 40) continue;
    ++accepted;
    max_edges = std::max(max_edges, g.edges.size());
    const VerificationReport r = verify_tree(t);
    if (r.pass) ++agreements;
  }
  const double ms = ms_since(t0);
  const bool ok = agreements == 500 && ms < 10000.0;
  report(2, ok,
         std::to_string(agreements) + "/500 trees agree on all three counts (max " +
             std::to_string(max_edges) + " edges, " + std::to_string(ms).substr(0, 6) + " ms)");
}

// The beta1 recursion laws for invariant-children atoms and for rotated
// atoms with and without a fixed child.
void criterion3() {
  std::mt19937_64 rng(314159);
  int case1 = 0;
  for (int i = 0; i < 100; ++i) {
    DecompositionTree t;
    t.surface = Surface::Disk;
    const int k = static_cast<int>(draw_int(rng, 0, 3));
    std::vector<int> fixed;
    int child_sum = 0;
    for (int j = 0; j < k; ++j) {
      DecompositionTree child;
      child.surface = Surface::Disk;
      child.root = testgen::random_disk_node(child, rng, 3);
      child_sum += beta1(stabilizer_group(child));
      fixed.push_back(testgen::graft(t, child, child.root));
    }
    t.root = t.add_atom(1, {}, fixed);
    if (beta1(stabilizer_group(t)) == child_sum + 1) ++case1;
  }

  int case2 = 0;
  for (int i = 0; i < 100; ++i) {
    const bool with_fixed = i % 2 == 1;
    DecompositionTree t;
    t.surface = Surface::Disk;
    const int m = static_cast<int>(draw_int(rng, 2, 4));
    const int c = static_cast<int>(draw_int(rng, 1, 3));
    std::vector<int> reps;
    int rep_sum = 0;
    for (int j = 0; j < c; ++j) {
      DecompositionTree child;
      child.surface = Surface::Disk;
      child.root = testgen::random_disk_node(child, rng, 3);
      rep_sum += beta1(stabilizer_group(child));
      reps.push_back(testgen::graft(t, child, child.root));
    }
    std::vector<int> fixed;
    int fixed_beta = 0;
    if (with_fixed) {
      DecompositionTree child;
      child.surface = Surface::Disk;
      child.root = testgen::random_disk_node(child, rng, 3);
      fixed_beta = beta1(stabilizer_group(child));
      fixed.push_back(testgen::graft(t, child, child.root));
    }
    t.root = t.add_atom(m, reps, fixed);
    const GroupExpr g = stabilizer_group(t);

    bool shape_ok;
    if (with_fixed) {
      shape_ok = g.kind() == GroupExpr::Kind::Product &&
                 g.left().kind() == GroupExpr::Kind::Wreath && g.left().arity() == m;
    } else {
      shape_ok = g.kind() == GroupExpr::Kind::Wreath && g.arity() == m;
    }
    if (shape_ok && beta1(g) == rep_sum + 1 + fixed_beta) ++case2;
  }

  report(3, case1 == 100 && case2 == 100,
         "beta1 recursion laws hold on " + std::to_string(case1) + "/100 invariant atoms and " +
             std::to_string(case2) + "/100 rotated atoms");
}

// Associativity, identity and inverse on 1000 random triples for each of 10
// random words of depth <= 4.
void criterion4() {
  const Clock::time_point t0 = Clock::now();
  std::mt19937_64 expr_rng(271828);
  bool ok = true;
  for (int i = 0; i < 10; ++i) {
    const GroupExpr e = testgen::random_expr(expr_rng, 4);
    const Element id = identity(e);
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(i));
    for (int k = 0; k < 1000; ++k) {
      const Element g = random_element(e, 9, rng);
      const Element h = random_element(e, 9, rng);
      const Element f = random_element(e, 9, rng);
      ok = ok &&
           multiply(e, multiply(e, g, h), f) == multiply(e, g, multiply(e, h, f)) &&
           multiply(e, id, g) == g && multiply(e, g, id) == g &&
           multiply(e, g, inverse(e, g)) == id;
      if (!ok) break;
    }
    if (!ok) break;
  }
  const double ms = ms_since(t0);
  report(4, ok && ms < 5000.0,
         "group laws hold on 10 words x 1000 triples (" + std::to_string(ms).substr(0, 6) +
             " ms)");
}

// Executable witnesses for the center/commutator statements: abelianize is a
// homomorphism, its kernel is the structural commutator predicate, and the
// center generators are central with full-rank abelian images.
void criterion5() {
  std::mt19937_64 expr_rng(271828);  // same 10 words as criterion 4
  bool hom_ok = true;
  bool kernel_ok = true;
  bool center_ok = true;
  for (int i = 0; i < 10; ++i) {
    const GroupExpr e = testgen::random_expr(expr_rng, 4);
    const std::size_t width = static_cast<std::size_t>(beta1(e));
    const IntVector zero(width, 0);
    std::mt19937_64 rng(2000 + static_cast<std::uint64_t>(i));

    for (int k = 0; k < 1000; ++k) {
      const Element g = random_element(e, 9, rng);
      const Element h = random_element(e, 9, rng);
      IntVector sum = abelianize(e, g);
      const IntVector bh = abelianize(e, h);
      for (std::size_t j = 0; j < width; ++j) sum[j] += bh[j];
      hom_ok = hom_ok && abelianize(e, multiply(e, g, h)) == sum;
      kernel_ok = kernel_ok && in_commutator_subgroup(e, g) == (abelianize(e, g) == zero);
    }
    for (int k = 0; k < 200; ++k) {
      Element prod = identity(e);
      const int count = static_cast<int>(draw_int(rng, 1, 5));
      for (int j = 0; j < count; ++j) {
        const Element a = random_element(e, 9, rng);
        const Element b = random_element(e, 9, rng);
        prod = multiply(e, prod, commutator(e, a, b));
      }
      kernel_ok = kernel_ok && in_commutator_subgroup(e, prod) && abelianize(e, prod) == zero;
    }

    const std::vector<Element> gens = center_generators(e);
    center_ok = center_ok && gens.size() == width;
    std::vector<IntVector> images;
    for (const Element& c : gens) {
      center_ok = center_ok && is_central_sampled(e, c, 200, 3000 + static_cast<std::uint64_t>(i));
      images.push_back(abelianize(e, c));
    }
    center_ok = center_ok && rational_rank(images) == static_cast<int>(width);
  }
  report(5, hom_ok && kernel_ok && center_ok,
         std::string("abelianization is a homomorphism with kernel the commutator ") +
             "subgroup; centers have beta1 generators of full rank");
}

// Parser round trip, beta1 invariance under normalize, and the worked
// normalization chain at beta1 = 2.
void criterion6() {
  std::mt19937_64 rng(602214);
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    const GroupExpr e = testgen::random_expr(rng, 6);
    ok = ok && parse_realization(render(e)) == e && beta1(normalize(e)) == beta1(e);
  }
  const char* chain[] = {"(1 wr_3 Z) x Z", "Z x (1 wr_3 Z)", "Z x Z", "1 x Z x Z"};
  for (const char* word : chain) {
    const GroupExpr e = parse_realization(word);
    ok = ok && beta1(e) == 2 && beta1(normalize(e)) == 2;
  }
  report(6, ok, "round trip and beta1-preserving normalize on 500 words, chain stays at 2");
}

// Arbitrary bytes are always answered with a value or a positioned error.
void criterion7() {
  std::mt19937_64 rng(998877);
  const std::string word_seed = "(1 wr_3 Z) x Z wr_2 Z";
  const std::string tree_seed = "(cyl (A 2 reps [(E) (A 1 reps [] fixed [])] fixed [(B)]))";
  int survived = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    if (i % 2 == 0) {
      const int len = static_cast<int>(draw_int(rng, 0, 64));
      for (int k = 0; k < len; ++k) s += static_cast<char>(draw_int(rng, 0, 255));
    } else {
      s = i % 4 == 1 ? word_seed : tree_seed;
      const int edits = static_cast<int>(draw_int(rng, 1, 4));
      for (int k = 0; k < edits; ++k)
        s[static_cast<std::size_t>(draw_int(rng, 0, static_cast<std::int64_t>(s.size()) - 1))] =
            static_cast<char>(draw_int(rng, 0, 255));
    }
    bool clean = true;
    try {
      (void)parse_realization(s);
    } catch (const ParseError&) {
    } catch (...) {
      clean = false;
    }
    try {
      (void)parse_tree(s);
    } catch (const ParseError&) {
    } catch (...) {
      clean = false;
    }
    if (clean) ++survived;
  }
  report(7, survived == 10000,
         std::to_string(survived) + "/10000 byte strings answered without a crash");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  return failures == 0 ? 0 : 1;
}
