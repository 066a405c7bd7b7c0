#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace krorb {

// Thrown when an Element is combined under a word it does not conform to.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A word over the alphabet {1, Z, x, wr_n} naming a group built from the
// trivial group by direct products and by wreath products with Z (the
// cyclic-shift action on n coordinates). Immutable; copies share structure.
class GroupExpr {
 public:
  enum class Kind { Trivial, Z, Product, Wreath };

  GroupExpr();  // trivial group

  static GroupExpr trivial();
  static GroupExpr z();
  static GroupExpr product(GroupExpr left, GroupExpr right);
  static GroupExpr wreath(GroupExpr base, int arity);  // arity >= 1

  Kind kind() const;
  const GroupExpr& left() const;   // Product
  const GroupExpr& right() const;  // Product
  const GroupExpr& base() const;   // Wreath
  int arity() const;               // Wreath

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);
  friend bool operator!=(const GroupExpr& a, const GroupExpr& b) { return !(a == b); }

  struct Node;

 private:
  explicit GroupExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct GroupExpr::Node {
  Kind kind = Kind::Trivial;
  int arity = 0;                // Wreath only
  std::vector<GroupExpr> kids;  // Product: {left, right}; Wreath: {base}
};

inline GroupExpr::Kind GroupExpr::kind() const { return node_->kind; }

// A value of the group named by a GroupExpr. The shape mirrors the word:
// unit for Trivial, an integer for Z, a pair for Product, and an n-tuple of
// base elements plus an integer shift for Wreath. Shifts are stored
// unreduced; coordinate indexing reduces mod n at access time.
class Element {
 public:
  enum class Kind { Unit, Int, Pair, Wreath };

  Element();  // unit

  static Element unit();
  static Element integer(std::int64_t value);
  static Element pair(Element first, Element second);
  static Element wreath(std::vector<Element> coords, std::int64_t shift);

  Kind kind() const;
  std::int64_t value() const;  // Int
  std::int64_t shift() const;  // Wreath
  const Element& first() const;
  const Element& second() const;
  const std::vector<Element>& coords() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  struct Node;

 private:
  explicit Element(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Element::Node {
  Kind kind = Kind::Unit;
  std::int64_t scalar = 0;    // Int value or Wreath shift
  std::vector<Element> kids;  // Pair: {first, second}; Wreath: coords
};

inline Element::Kind Element::kind() const { return node_->kind; }

// Image of the abelianization map; length always equals beta1 of the word.
using IntVector = std::vector<std::int64_t>;

// Number of Z symbols in the word (each wreath node spells one Z).
int beta1(const GroupExpr& expr);

// True iff g has exactly the shape of expr, recursively.
bool conforms(const GroupExpr& expr, const Element& g);

Element identity(const GroupExpr& expr);

// Group product. For a wreath node the convention is
//   (a, k) * (b, p) = (sigma_p(a) . b, k + p),  sigma_p(a)_i = a_{(i+p) mod n},
// with "." the coordinatewise base product. Products multiply componentwise,
// Z adds, Trivial is the unit. Throws ShapeError on a mismatched element.
Element multiply(const GroupExpr& expr, const Element& g, const Element& h);

Element inverse(const GroupExpr& expr, const Element& g);

// g * h * g^-1 * h^-1
Element commutator(const GroupExpr& expr, const Element& g, const Element& h);

// Pseudo-random element with every integer slot uniform in
// [-magnitude_bound, magnitude_bound]. Slots are drawn left to right,
// coordinates before shift, so a seed replays to the same element.
Element random_element(const GroupExpr& expr, std::int64_t magnitude_bound, std::mt19937_64& rng);
Element random_element(const GroupExpr& expr, std::int64_t magnitude_bound, std::uint64_t seed);

// Canonical quotient map onto Z^beta1: Trivial -> (), Z k -> (k), Product
// concatenates, Wreath (a, k) -> abelianize(a_0 * ... * a_{n-1}) ++ (k).
// A homomorphism into the additive group of IntVector.
IntVector abelianize(const GroupExpr& expr, const Element& g);

// Membership in the commutator subgroup, decided structurally: shift zero at
// every wreath node and the ordered coordinate product in the commutator
// subgroup of the base. Agrees with abelianize(g) == 0 on every element.
bool in_commutator_subgroup(const GroupExpr& expr, const Element& g);

// Exactly beta1(expr) elements generating a central subgroup: 1 for each Z
// leaf, diagonal tuples of base generators and the shift-by-n element for
// each wreath node, embedded through products with identities.
std::vector<Element> center_generators(const GroupExpr& expr);

// One-sided sampled centrality check: false means definitely not central.
bool is_central_sampled(const GroupExpr& expr, const Element& g, int trials, std::uint64_t seed);

// Rank over the rationals of the row span, by fraction-free (Bareiss)
// elimination on exact integers. Rows must share one length.
int rational_rank(const std::vector<IntVector>& rows);

std::string to_string(const Element& g);

}  // namespace krorb
