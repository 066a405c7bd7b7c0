#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "generators.hpp"
#include "krorb/decomposition.hpp"
#include "krorb/realization.hpp"

using namespace krorb;

namespace {

std::string reject_message(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "parsed";
}

std::string reject_at(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const ParseError& e) {
    return std::to_string(e.line) + ":" + std::to_string(e.col);
  }
  return "parsed";
}

}  // namespace

TEST_CASE("parse the base instances") {
  const DecompositionTree disk_e = parse_tree("(disk (E))");
  CHECK(disk_e.surface == Surface::Disk);
  CHECK(disk_e.node(disk_e.root).kind == DecompositionTree::NodeKind::Extremum);

  const DecompositionTree deg = parse_tree("(disk (A 1 reps [] fixed []))");
  const DecompositionTree::Node& root = deg.node(deg.root);
  CHECK(root.kind == DecompositionTree::NodeKind::Atom);
  CHECK(root.m == 1);
  CHECK(root.reps.empty());
  CHECK(root.fixed.empty());

  const DecompositionTree cyl = parse_tree("(cyl (B))");
  CHECK(cyl.surface == Surface::Cylinder);
  CHECK(cyl.node(cyl.root).kind == DecompositionTree::NodeKind::Boundary);
}

TEST_CASE("parse nested atoms with preorder ids") {
  const DecompositionTree t = parse_tree("(disk (A 3 reps [(E)] fixed [(A 1 reps [] fixed [])]))");
  const DecompositionTree::Node& root = t.node(t.root);
  CHECK(root.m == 3);
  REQUIRE(root.reps.size() == 1);
  REQUIRE(root.fixed.size() == 1);
  CHECK(t.node(root.reps[0]).kind == DecompositionTree::NodeKind::Extremum);
  CHECK(t.node(root.fixed[0]).kind == DecompositionTree::NodeKind::Atom);
  CHECK(t.root == 0);
  CHECK(root.reps[0] == 1);
  CHECK(root.fixed[0] == 2);
}

TEST_CASE("whitespace-insensitive tree grammar") {
  CHECK(render_tree(parse_tree("(disk(A 2 reps[(E)(E)]fixed[]))")) ==
        "(disk (A 2 reps [(E) (E)] fixed []))");
  CHECK(render_tree(parse_tree(" ( cyl\n ( A 1 reps [ ] fixed [ ( B ) ] ) ) ")) ==
        "(cyl (A 1 reps [] fixed [(B)]))");
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 200; ++i) {
    DecompositionTree t;
    t.surface = Surface::Disk;
    t.root = testgen::random_disk_node(t, rng, 4);
    validate(t);
    const std::string text = render_tree(t);
    CHECK(render_tree(parse_tree(text)) == text);
  }
}

TEST_CASE("syntax rejections") {
  CHECK(reject_message("(torus (E))") == "expected 'disk' or 'cyl'");
  CHECK(reject_message("(disk (Q))") == "expected 'E', 'B' or 'A'");
  CHECK(reject_message("(disk (A 0 reps [] fixed []))") == "atom multiplicity must be >= 1");
  CHECK(reject_message("(disk (A 2 resp [] fixed []))") == "expected 'reps'");
  CHECK(reject_message("(disk (A 1 reps [] fix []))") == "expected 'fixed'");
  CHECK(reject_message("(disk (A 2 [] fixed []))") == "expected a word");
  CHECK(reject_message("(disk (E)) tail") == "unexpected trailing input");
  CHECK(reject_message("(disk (E)") == "expected ')'");
  CHECK(reject_message("(disk (A x reps [] fixed []))") == "expected a number");
  CHECK(reject_message("") == "expected '('");
  CHECK(reject_at("(torus (E))") == "1:2");
}

TEST_CASE("invariant rejections are positioned at the offending node") {
  CHECK(reject_message("(disk (A 1 reps [(E)] fixed []))") == "reps nonempty requires m >= 2");
  CHECK(reject_message("(disk (A 2 reps [] fixed [(E)]))") == "m >= 2 requires nonempty reps");
  CHECK(reject_message("(disk (A 2 reps [(E)] fixed [(E) (E)]))") == "|fixed| > 1 with m >= 2");
  CHECK(reject_message("(disk (B))") == "B outside cylinder");
  CHECK(reject_message("(cyl (A 2 reps [(B)] fixed [(E)]))") == "B inside reps");
  CHECK(reject_message("(cyl (E))") == "cylinder requires exactly one B");
  CHECK(reject_message("(cyl (A 1 reps [] fixed [(B) (B)]))") ==
        "cylinder requires exactly one B");
  // The second B is the offending node.
  CHECK(reject_at("(cyl (A 1 reps [] fixed [(B) (B)]))") == "1:30");
  CHECK(reject_at("(disk (A 1 reps [] fixed [(B)]))") == "1:27");
}

TEST_CASE("boundary may sit anywhere along fixed chains") {
  CHECK_NOTHROW(parse_tree("(cyl (A 1 reps [] fixed [(A 1 reps [] fixed [(B)]) (E)]))"));
  CHECK_NOTHROW(parse_tree("(cyl (A 2 reps [(E)] fixed [(A 1 reps [] fixed [(B)])]))"));
  // A boundary below a rep edge is rejected even when nested deeper.
  CHECK(reject_message("(cyl (A 2 reps [(A 1 reps [] fixed [(B)])] fixed []))") ==
        "B inside reps");
}

TEST_CASE("validate works on built trees") {
  DecompositionTree t;
  t.surface = Surface::Disk;
  const int leaf = t.add_extremum();
  t.root = t.add_atom(2, {leaf}, {});
  CHECK_NOTHROW(validate(t));

  DecompositionTree bad;
  bad.surface = Surface::Disk;
  const int b = bad.add_boundary();
  bad.root = bad.add_atom(1, {}, {b});
  CHECK_THROWS_AS(validate(bad), TreeError);
  try {
    validate(bad);
  } catch (const TreeError& e) {
    CHECK(e.node_id == b);
    CHECK(e.path == "root.fixed[0]");
    CHECK(std::string(e.what()) == "B outside cylinder");
  }
}

TEST_CASE("node_path spells the route from the root") {
  const DecompositionTree t =
      parse_tree("(disk (A 2 reps [(A 1 reps [] fixed [(E) (E)])] fixed [(E)]))");
  const DecompositionTree::Node& root = t.node(t.root);
  CHECK(node_path(t, t.root) == "root");
  CHECK(node_path(t, root.reps[0]) == "root.reps[0]");
  CHECK(node_path(t, root.fixed[0]) == "root.fixed[0]");
  const DecompositionTree::Node& inner = t.node(root.reps[0]);
  CHECK(node_path(t, inner.fixed[1]) == "root.reps[0].fixed[1]");
}

TEST_CASE("arbitrary bytes never crash the tree parser") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 2000; ++i) {
    const int len = static_cast<int>(draw_int(rng, 0, 48));
    std::string s;
    for (int k = 0; k < len; ++k) s += static_cast<char>(draw_int(rng, 0, 255));
    try {
      (void)parse_tree(s);
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.col >= 1);
    }
  }
}
