#include "krorb/group.hpp"

#include <algorithm>
#include <utility>

#include "krorb/rng.hpp"

namespace krorb {

namespace {

std::shared_ptr<const GroupExpr::Node> make_expr_node(GroupExpr::Kind kind, int arity,
                                                      std::vector<GroupExpr> kids) {
  auto n = std::make_shared<GroupExpr::Node>();
  n->kind = kind;
  n->arity = arity;
  n->kids = std::move(kids);
  return n;
}

std::shared_ptr<const Element::Node> make_elem_node(Element::Kind kind, std::int64_t scalar,
                                                    std::vector<Element> kids) {
  auto n = std::make_shared<Element::Node>();
  n->kind = kind;
  n->scalar = scalar;
  n->kids = std::move(kids);
  return n;
}

const std::shared_ptr<const GroupExpr::Node>& trivial_node() {
  static const std::shared_ptr<const GroupExpr::Node> n =
      make_expr_node(GroupExpr::Kind::Trivial, 0, {});
  return n;
}

const std::shared_ptr<const GroupExpr::Node>& z_node() {
  static const std::shared_ptr<const GroupExpr::Node> n = make_expr_node(GroupExpr::Kind::Z, 0, {});
  return n;
}

const std::shared_ptr<const Element::Node>& unit_node() {
  static const std::shared_ptr<const Element::Node> n = make_elem_node(Element::Kind::Unit, 0, {});
  return n;
}

int mod_index(std::int64_t v, int n) {
  const std::int64_t r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

GroupExpr::GroupExpr() : node_(trivial_node()) {}

GroupExpr GroupExpr::trivial() { return GroupExpr(trivial_node()); }

GroupExpr GroupExpr::z() { return GroupExpr(z_node()); }

GroupExpr GroupExpr::product(GroupExpr left, GroupExpr right) {
  return GroupExpr(make_expr_node(Kind::Product, 0, {std::move(left), std::move(right)}));
}

GroupExpr GroupExpr::wreath(GroupExpr base, int arity) {
  if (arity < 1) throw std::invalid_argument("wreath arity must be >= 1");
  return GroupExpr(make_expr_node(Kind::Wreath, arity, {std::move(base)}));
}

const GroupExpr& GroupExpr::left() const { return node_->kids[0]; }
const GroupExpr& GroupExpr::right() const { return node_->kids[1]; }
const GroupExpr& GroupExpr::base() const { return node_->kids[0]; }
int GroupExpr::arity() const { return node_->arity; }

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupExpr::Kind::Trivial:
    case GroupExpr::Kind::Z:
      return true;
    case GroupExpr::Kind::Product:
      return a.left() == b.left() && a.right() == b.right();
    case GroupExpr::Kind::Wreath:
      return a.arity() == b.arity() && a.base() == b.base();
  }
  return false;
}

Element::Element() : node_(unit_node()) {}

Element Element::unit() { return Element(unit_node()); }

Element Element::integer(std::int64_t value) {
  return Element(make_elem_node(Kind::Int, value, {}));
}

Element Element::pair(Element first, Element second) {
  return Element(make_elem_node(Kind::Pair, 0, {std::move(first), std::move(second)}));
}

Element Element::wreath(std::vector<Element> coords, std::int64_t shift) {
  return Element(make_elem_node(Kind::Wreath, shift, std::move(coords)));
}

std::int64_t Element::value() const { return node_->scalar; }
std::int64_t Element::shift() const { return node_->scalar; }
const Element& Element::first() const { return node_->kids[0]; }
const Element& Element::second() const { return node_->kids[1]; }
const std::vector<Element>& Element::coords() const { return node_->kids; }

bool operator==(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Element::Kind::Unit:
      return true;
    case Element::Kind::Int:
      return a.value() == b.value();
    case Element::Kind::Pair:
      return a.first() == b.first() && a.second() == b.second();
    case Element::Kind::Wreath: {
      if (a.shift() != b.shift()) return false;
      const auto& ca = a.coords();
      const auto& cb = b.coords();
      if (ca.size() != cb.size()) return false;
      for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
      return true;
    }
  }
  return false;
}

int beta1(const GroupExpr& expr) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return 0;
    case GroupExpr::Kind::Z:
      return 1;
    case GroupExpr::Kind::Product:
      return beta1(expr.left()) + beta1(expr.right());
    case GroupExpr::Kind::Wreath:
      return beta1(expr.base()) + 1;
  }
  return 0;
}

bool conforms(const GroupExpr& expr, const Element& g) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return g.kind() == Element::Kind::Unit;
    case GroupExpr::Kind::Z:
      return g.kind() == Element::Kind::Int;
    case GroupExpr::Kind::Product:
      return g.kind() == Element::Kind::Pair && conforms(expr.left(), g.first()) &&
             conforms(expr.right(), g.second());
    case GroupExpr::Kind::Wreath: {
      if (g.kind() != Element::Kind::Wreath) return false;
      if (g.coords().size() != static_cast<std::size_t>(expr.arity())) return false;
      for (const Element& c : g.coords())
        if (!conforms(expr.base(), c)) return false;
      return true;
    }
  }
  return false;
}

namespace {

void require_shape(const GroupExpr& expr, const Element& g, const char* op) {
  if (!conforms(expr, g))
    throw ShapeError(std::string(op) + ": element does not conform to the group word");
}

// Unchecked recursions; the public entry points verify shapes once.

Element mul_rec(const GroupExpr& expr, const Element& g, const Element& h) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return Element::unit();
    case GroupExpr::Kind::Z:
      return Element::integer(g.value() + h.value());
    case GroupExpr::Kind::Product:
      return Element::pair(mul_rec(expr.left(), g.first(), h.first()),
                           mul_rec(expr.right(), g.second(), h.second()));
    case GroupExpr::Kind::Wreath: {
      const int n = expr.arity();
      const std::int64_t p = h.shift();
      std::vector<Element> out;
      out.reserve(n);
      for (int i = 0; i < n; ++i)
        out.push_back(mul_rec(expr.base(), g.coords()[mod_index(i + p, n)], h.coords()[i]));
      return Element::wreath(std::move(out), g.shift() + p);
    }
  }
  return Element::unit();
}

Element inv_rec(const GroupExpr& expr, const Element& g) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return Element::unit();
    case GroupExpr::Kind::Z:
      return Element::integer(-g.value());
    case GroupExpr::Kind::Product:
      return Element::pair(inv_rec(expr.left(), g.first()), inv_rec(expr.right(), g.second()));
    case GroupExpr::Kind::Wreath: {
      // (a, k)^-1 = (b, -k) with b_i = a_{(i-k) mod n}^-1.
      const int n = expr.arity();
      const std::int64_t k = g.shift();
      std::vector<Element> out;
      out.reserve(n);
      for (int i = 0; i < n; ++i)
        out.push_back(inv_rec(expr.base(), g.coords()[mod_index(i - k, n)]));
      return Element::wreath(std::move(out), -k);
    }
  }
  return Element::unit();
}

Element coord_product(const GroupExpr& base, const std::vector<Element>& coords) {
  Element acc = coords[0];
  for (std::size_t i = 1; i < coords.size(); ++i) acc = mul_rec(base, acc, coords[i]);
  return acc;
}

void abelianize_rec(const GroupExpr& expr, const Element& g, IntVector& out) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return;
    case GroupExpr::Kind::Z:
      out.push_back(g.value());
      return;
    case GroupExpr::Kind::Product:
      abelianize_rec(expr.left(), g.first(), out);
      abelianize_rec(expr.right(), g.second(), out);
      return;
    case GroupExpr::Kind::Wreath:
      abelianize_rec(expr.base(), coord_product(expr.base(), g.coords()), out);
      out.push_back(g.shift());
      return;
  }
}

bool in_commutator_rec(const GroupExpr& expr, const Element& g) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return true;
    case GroupExpr::Kind::Z:
      return g.value() == 0;
    case GroupExpr::Kind::Product:
      return in_commutator_rec(expr.left(), g.first()) &&
             in_commutator_rec(expr.right(), g.second());
    case GroupExpr::Kind::Wreath:
      return g.shift() == 0 &&
             in_commutator_rec(expr.base(), coord_product(expr.base(), g.coords()));
  }
  return false;
}

Element random_rec(const GroupExpr& expr, std::int64_t bound, std::mt19937_64& rng) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return Element::unit();
    case GroupExpr::Kind::Z:
      return Element::integer(draw_int(rng, -bound, bound));
    case GroupExpr::Kind::Product: {
      Element a = random_rec(expr.left(), bound, rng);
      Element b = random_rec(expr.right(), bound, rng);
      return Element::pair(std::move(a), std::move(b));
    }
    case GroupExpr::Kind::Wreath: {
      const int n = expr.arity();
      std::vector<Element> coords;
      coords.reserve(n);
      for (int i = 0; i < n; ++i) coords.push_back(random_rec(expr.base(), bound, rng));
      return Element::wreath(std::move(coords), draw_int(rng, -bound, bound));
    }
  }
  return Element::unit();
}

}  // namespace

Element identity(const GroupExpr& expr) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return Element::unit();
    case GroupExpr::Kind::Z:
      return Element::integer(0);
    case GroupExpr::Kind::Product:
      return Element::pair(identity(expr.left()), identity(expr.right()));
    case GroupExpr::Kind::Wreath:
      return Element::wreath(std::vector<Element>(expr.arity(), identity(expr.base())), 0);
  }
  return Element::unit();
}

Element multiply(const GroupExpr& expr, const Element& g, const Element& h) {
  require_shape(expr, g, "multiply");
  require_shape(expr, h, "multiply");
  return mul_rec(expr, g, h);
}

Element inverse(const GroupExpr& expr, const Element& g) {
  require_shape(expr, g, "inverse");
  return inv_rec(expr, g);
}

Element commutator(const GroupExpr& expr, const Element& g, const Element& h) {
  require_shape(expr, g, "commutator");
  require_shape(expr, h, "commutator");
  Element gh = mul_rec(expr, g, h);
  Element gi = inv_rec(expr, g);
  Element hi = inv_rec(expr, h);
  return mul_rec(expr, mul_rec(expr, gh, gi), hi);
}

Element random_element(const GroupExpr& expr, std::int64_t magnitude_bound, std::mt19937_64& rng) {
  if (magnitude_bound < 1) throw std::invalid_argument("magnitude_bound must be >= 1");
  return random_rec(expr, magnitude_bound, rng);
}

Element random_element(const GroupExpr& expr, std::int64_t magnitude_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(expr, magnitude_bound, rng);
}

IntVector abelianize(const GroupExpr& expr, const Element& g) {
  require_shape(expr, g, "abelianize");
  IntVector out;
  out.reserve(beta1(expr));
  abelianize_rec(expr, g, out);
  return out;
}

bool in_commutator_subgroup(const GroupExpr& expr, const Element& g) {
  require_shape(expr, g, "in_commutator_subgroup");
  return in_commutator_rec(expr, g);
}

std::vector<Element> center_generators(const GroupExpr& expr) {
  switch (expr.kind()) {
    case GroupExpr::Kind::Trivial:
      return {};
    case GroupExpr::Kind::Z:
      return {Element::integer(1)};
    case GroupExpr::Kind::Product: {
      std::vector<Element> out;
      for (const Element& c : center_generators(expr.left()))
        out.push_back(Element::pair(c, identity(expr.right())));
      for (const Element& c : center_generators(expr.right()))
        out.push_back(Element::pair(identity(expr.left()), c));
      return out;
    }
    case GroupExpr::Kind::Wreath: {
      const int n = expr.arity();
      std::vector<Element> out;
      for (const Element& c : center_generators(expr.base()))
        out.push_back(Element::wreath(std::vector<Element>(n, c), 0));
      out.push_back(Element::wreath(std::vector<Element>(n, identity(expr.base())), n));
      return out;
    }
  }
  return {};
}

bool is_central_sampled(const GroupExpr& expr, const Element& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  require_shape(expr, g, "is_central_sampled");
  std::mt19937_64 rng(seed);
  const Element id = identity(expr);
  for (int t = 0; t < trials; ++t) {
    Element h = random_rec(expr, 8, rng);
    if (!(commutator(expr, g, h) == id)) return false;
  }
  return true;
}

int rational_rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t nc = rows[0].size();
  for (const IntVector& r : rows)
    if (r.size() != nc) throw std::invalid_argument("rational_rank: ragged rows");

  using wide = __int128;
  std::vector<std::vector<wide>> m(rows.size(), std::vector<wide>(nc));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nc; ++j) m[i][j] = rows[i][j];

  // Bareiss: every intermediate entry is a minor of the input, and the
  // division by the previous pivot is exact.
  std::size_t rank = 0;
  wide prev = 1;
  for (std::size_t col = 0; col < nc && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < nc; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::string to_string(const Element& g) {
  switch (g.kind()) {
    case Element::Kind::Unit:
      return "e";
    case Element::Kind::Int:
      return std::to_string(g.value());
    case Element::Kind::Pair:
      return "(" + to_string(g.first()) + "," + to_string(g.second()) + ")";
    case Element::Kind::Wreath: {
      std::string s = "((";
      for (std::size_t i = 0; i < g.coords().size(); ++i) {
        if (i) s += ",";
        s += to_string(g.coords()[i]);
      }
      s += ")," + std::to_string(g.shift()) + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace krorb
