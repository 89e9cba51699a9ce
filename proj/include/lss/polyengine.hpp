#pragma once

// Exact multivariate polynomials over x_1..x_n, y_1..y_n with the lexicographic
// order induced by a vertex ranking, plus division, S-polynomials and
// Buchberger's algorithm.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lss/errors.hpp"

namespace lss {

using Rational = boost::multiprecision::cpp_rational;

/// Exact coefficient field: the operations the engine relies on.
template <class T>
concept Field = std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  T(0);
  T(1);
};

enum class Ordering { Less, Equal, Greater };

/// Total order on the 2n variables x_1..x_n, y_1..y_n.
///
/// Variable indices are fixed: x_v has index v-1 and y_v has index n+v-1.
/// The order is given by a ranking of the vertices (largest first); the x
/// block always precedes the y block and both blocks follow the same ranking.
class VariableOrder {
 public:
  static VariableOrder natural(int n) {
    std::vector<int> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 1);
    return from_ranking(std::move(ranking));
  }

  /// `ranking[0]` is the vertex whose variables are largest.
  static VariableOrder from_ranking(std::vector<int> ranking) {
    const int n = static_cast<int>(ranking.size());
    if (n < 1) throw InvalidArgument("variable order needs at least one vertex");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : ranking) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("vertex ranking is not a permutation of 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
    VariableOrder ord;
    ord.n_ = n;
    ord.sequence_.reserve(2 * ranking.size());
    for (int v : ranking) ord.sequence_.push_back(v - 1);
    for (int v : ranking) ord.sequence_.push_back(n + v - 1);
    ord.natural_ = std::is_sorted(ranking.begin(), ranking.end());
    return ord;
  }

  int vertex_count() const { return n_; }
  std::size_t variable_count() const { return sequence_.size(); }
  bool is_natural() const { return natural_; }

  /// Variable indices from largest to smallest.
  std::span<const int> sequence() const { return sequence_; }

  int x(int v) const { return v - 1; }
  int y(int v) const { return n_ + v - 1; }

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;

 private:
  VariableOrder() = default;
  int n_ = 0;
  std::vector<int> sequence_;
  bool natural_ = true;
};

/// Exponent vector over the 2n variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t variables, int index, Exponent power = 1) {
    Monomial m(variables);
    m.exps_.at(static_cast<std::size_t>(index)) = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }
  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_square_free() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    check_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    check_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    check_size(other);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
  }

  Monomial operator*(const Monomial& other) const {
    check_size(other);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
  }

  /// Exact quotient; `other` must divide this monomial.
  Monomial operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_size(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) throw DimensionError("monomial length mismatch");
  }

  std::vector<Exponent> exps_;
};

inline Ordering lex_compare(const Monomial& a, const Monomial& b, const VariableOrder& ord) {
  if (a.size() != ord.variable_count() || b.size() != ord.variable_count())
    throw DimensionError("monomial length does not match the variable order");
  if (ord.is_natural()) {
    auto ea = a.exponents();
    auto eb = b.exponents();
    auto [ia, ib] = std::mismatch(ea.begin(), ea.end(), eb.begin());
    if (ia == ea.end()) return Ordering::Equal;
    return *ia < *ib ? Ordering::Less : Ordering::Greater;
  }
  for (int v : ord.sequence()) {
    const auto i = static_cast<std::size_t>(v);
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

/// "x1*x2^2*y3"; the monomial 1 renders as "1".
inline std::string to_string(const Monomial& m, int n) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    const int idx = static_cast<int>(i);
    out += idx < n ? "x" + std::to_string(idx + 1) : "y" + std::to_string(idx - n + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Sparse polynomial whose terms are kept strictly descending in its order.
template <Field Coeff = Rational>
class Polynomial {
 public:
  struct Term {
    Coeff coeff;
    Monomial monomial;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(std::shared_ptr<const VariableOrder> order) : order_(std::move(order)) {
    if (!order_) throw InvalidArgument("polynomial needs a variable order");
  }

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::shared_ptr<const VariableOrder> order, std::vector<Term> terms) {
    Polynomial p(std::move(order));
    for (const auto& t : terms)
      if (t.monomial.size() != p.order_->variable_count())
        throw DimensionError("term length does not match the variable order");
    const VariableOrder& ord = *p.order_;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return lex_compare(a.monomial, b.monomial, ord) == Ordering::Greater;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == Coeff(0)) p.terms_.pop_back();
      } else if (t.coeff != Coeff(0)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const VariableOrder& order() const { return *order_; }
  const std::shared_ptr<const VariableOrder>& order_ptr() const { return order_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Coeff& leading_coefficient() const { return leading_term().coeff; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r(*this);
    const Coeff lc = leading_coefficient();
    for (auto& t : r.terms_) t.coeff /= lc;
    return r;
  }

  /// c * m * this
  Polynomial scaled(const Coeff& c, const Monomial& m) const {
    Polynomial r(order_);
    if (c == Coeff(0)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.monomial * m});
    return r;
  }

  /// this -= c * m * g, by a single merge pass.
  void subtract_scaled(const Coeff& c, const Monomial& m, const Polynomial& g) {
    check_order(g);
    const VariableOrder& ord = *order_;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    std::optional<Monomial> shifted;
    while (j != g.terms_.end()) {
      if (!shifted) shifted = j->monomial * m;
      if (i == terms_.end()) {
        out.push_back({-(j->coeff * c), std::move(*shifted)});
        shifted.reset();
        ++j;
        continue;
      }
      switch (lex_compare(i->monomial, *shifted, ord)) {
        case Ordering::Greater:
          out.push_back(std::move(*i));
          ++i;
          break;
        case Ordering::Less:
          out.push_back({-(j->coeff * c), std::move(*shifted)});
          shifted.reset();
          ++j;
          break;
        case Ordering::Equal: {
          Coeff sum = i->coeff - j->coeff * c;
          if (sum != Coeff(0)) out.push_back({std::move(sum), std::move(i->monomial)});
          shifted.reset();
          ++i;
          ++j;
          break;
        }
      }
    }
    for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
    terms_ = std::move(out);
  }

  /// Appends a term smaller than every current term.
  void push_back_smallest(Term t) { terms_.push_back(std::move(t)); }

  /// Removes and returns the leading term.
  Term pop_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r.subtract_scaled(Coeff(-1), Monomial(a.order_->variable_count()), b);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r.subtract_scaled(Coeff(1), Monomial(a.order_->variable_count()), b);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.order_);
    for (const auto& t : b.terms_) r.subtract_scaled(-t.coeff, t.monomial, a);
    return r;
  }
  friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
    return p.scaled(c, Monomial(p.order_->variable_count()));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.order_ == *b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_order(const Polynomial& g) const {
    if (order_ != g.order_ && !(*order_ == *g.order_))
      throw InvalidArgument("polynomials use different variable orders");
  }

  std::shared_ptr<const VariableOrder> order_;
  std::vector<Term> terms_;
};

/// Factory for polynomials sharing one variable order.
template <Field Coeff = Rational>
class PolynomialRing {
 public:
  explicit PolynomialRing(VariableOrder order)
      : order_(std::make_shared<const VariableOrder>(std::move(order))) {}
  explicit PolynomialRing(int n) : PolynomialRing(VariableOrder::natural(n)) {}

  const std::shared_ptr<const VariableOrder>& order() const { return order_; }
  int vertex_count() const { return order_->vertex_count(); }

  Polynomial<Coeff> zero() const { return Polynomial<Coeff>(order_); }
  Polynomial<Coeff> constant(const Coeff& c) const { return term(c, Monomial(order_->variable_count())); }
  Polynomial<Coeff> term(const Coeff& c, Monomial m) const {
    return Polynomial<Coeff>::from_terms(order_, {{c, std::move(m)}});
  }
  Polynomial<Coeff> x(int v) const { return variable(order_->x(checked(v))); }
  Polynomial<Coeff> y(int v) const { return variable(order_->y(checked(v))); }

  Monomial x_monomial(int v) const { return Monomial::variable(order_->variable_count(), order_->x(checked(v))); }
  Monomial y_monomial(int v) const { return Monomial::variable(order_->variable_count(), order_->y(checked(v))); }
  Monomial one() const { return Monomial(order_->variable_count()); }

 private:
  int checked(int v) const {
    if (v < 1 || v > order_->vertex_count()) throw BadVertex("vertex " + std::to_string(v) + " out of range");
    return v;
  }
  Polynomial<Coeff> variable(int index) const {
    return term(Coeff(1), Monomial::variable(order_->variable_count(), index));
  }

  std::shared_ptr<const VariableOrder> order_;
};

/// Canonical text form: descending terms, rational coefficients, x<k>/y<k>.
template <Field Coeff>
std::string to_string(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  const int n = p.order().vertex_count();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < Coeff(0);
    const Coeff magnitude = negative ? Coeff(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      out << magnitude;
    } else {
      if (magnitude != Coeff(1)) out << magnitude << '*';
      out << to_string(t.monomial, n);
    }
  }
  return out.str();
}

template <Field Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
  return os << to_string(p);
}

namespace detail {

template <Field Coeff>
void check_same_order(const Polynomial<Coeff>& f, std::span<const Polynomial<Coeff>> gs) {
  for (const auto& g : gs)
    if (!(g.order() == f.order())) throw InvalidArgument("polynomials use different variable orders");
}

template <Field Coeff>
void check_nonzero(std::span<const Polynomial<Coeff>> gs) {
  for (const auto& g : gs)
    if (g.is_zero()) throw InvalidArgument("divisor list contains the zero polynomial");
}

}  // namespace detail

template <Field Coeff>
Polynomial<Coeff> spoly(const Polynomial<Coeff>& f, const Polynomial<Coeff>& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
  if (!(f.order() == g.order())) throw InvalidArgument("polynomials use different variable orders");
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<Coeff> s = f.scaled(Coeff(1) / f.leading_coefficient(), l / f.leading_monomial());
  s.subtract_scaled(Coeff(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
  return s;
}

template <Field Coeff>
struct Division {
  Polynomial<Coeff> remainder;
  std::vector<Polynomial<Coeff>> quotients;
};

/// Multivariate division. At every step the first divisor (in list order)
/// whose leading monomial divides the current leading monomial is used.
template <Field Coeff>
Division<Coeff> reduce(const Polynomial<Coeff>& f, std::span<const Polynomial<Coeff>> divisors) {
  detail::check_nonzero(divisors);
  detail::check_same_order(f, divisors);
  Division<Coeff> out{Polynomial<Coeff>(f.order_ptr()), {}};
  out.quotients.assign(divisors.size(), Polynomial<Coeff>(f.order_ptr()));
  Polynomial<Coeff> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k].leading_monomial().divides(lt.monomial)) ++k;
    if (k == divisors.size()) {
      out.remainder.push_back_smallest(p.pop_leading());
      continue;
    }
    const auto& g = divisors[k];
    Coeff c = lt.coeff / g.leading_coefficient();
    Monomial m = lt.monomial / g.leading_monomial();
    out.quotients[k].push_back_smallest({c, m});
    p.subtract_scaled(c, m, g);
  }
  return out;
}

template <Field Coeff>
Division<Coeff> reduce(const Polynomial<Coeff>& f, const std::vector<Polynomial<Coeff>>& divisors) {
  return reduce(f, std::span<const Polynomial<Coeff>>(divisors));
}

/// Remainder of `reduce` without tracking quotients.
template <Field Coeff>
Polynomial<Coeff> normal_form(const Polynomial<Coeff>& f, std::span<const Polynomial<Coeff>> divisors) {
  detail::check_nonzero(divisors);
  detail::check_same_order(f, divisors);
  Polynomial<Coeff> rem(f.order_ptr());
  Polynomial<Coeff> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    auto it = std::find_if(divisors.begin(), divisors.end(),
                           [&](const auto& g) { return g.leading_monomial().divides(lt.monomial); });
    if (it == divisors.end()) {
      rem.push_back_smallest(p.pop_leading());
      continue;
    }
    Coeff c = lt.coeff / it->leading_coefficient();
    Monomial m = lt.monomial / it->leading_monomial();
    p.subtract_scaled(c, m, *it);
  }
  return rem;
}

template <Field Coeff>
Polynomial<Coeff> normal_form(const Polynomial<Coeff>& f, const std::vector<Polynomial<Coeff>>& divisors) {
  return normal_form(f, std::span<const Polynomial<Coeff>>(divisors));
}

/// Buchberger's algorithm. Pairs are processed smallest lcm first (ties by
/// generator insertion index); pairs with coprime leading monomials are
/// skipped. New generators are appended monic, in the order they are found.
template <Field Coeff>
std::vector<Polynomial<Coeff>> buchberger(std::span<const Polynomial<Coeff>> generators) {
  std::vector<Polynomial<Coeff>> basis;
  for (const auto& f : generators) {
    if (f.is_zero()) throw InvalidArgument("generator list contains the zero polynomial");
    if (!basis.empty() && !(f.order() == basis.front().order()))
      throw InvalidArgument("polynomials use different variable orders");
    basis.push_back(f);
  }
  if (basis.empty()) return basis;
  const VariableOrder& ord = basis.front().order();

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto before = [&ord](const Pair& a, const Pair& b) {
    switch (lex_compare(a.lcm, b.lcm, ord)) {
      case Ordering::Less: return true;
      case Ordering::Greater: return false;
      case Ordering::Equal: break;
    }
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };
  std::set<Pair, decltype(before)> pending(before);
  auto add_pairs_for = [&](std::size_t j) {
    const Monomial& lj = basis[j].leading_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = basis[i].leading_monomial();
      if (li.coprime(lj)) continue;
      pending.insert(Pair{li.lcm(lj), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    const Pair pair = *pending.begin();
    pending.erase(pending.begin());
    Polynomial<Coeff> r = normal_form(spoly(basis[pair.i], basis[pair.j]), std::span<const Polynomial<Coeff>>(basis));
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return basis;
}

template <Field Coeff>
std::vector<Polynomial<Coeff>> buchberger(const std::vector<Polynomial<Coeff>>& generators) {
  return buchberger(std::span<const Polynomial<Coeff>>(generators));
}

/// Reduced Gröbner basis of the ideal generated by the Gröbner basis `basis`,
/// sorted by leading monomial, descending.
template <Field Coeff>
std::vector<Polynomial<Coeff>> reduce_basis(std::span<const Polynomial<Coeff>> basis) {
  std::vector<Polynomial<Coeff>> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) continue;
    const Monomial& lm = basis[k].leading_monomial();
    bool redundant = false;
    for (std::size_t other = 0; other < basis.size() && !redundant; ++other) {
      if (other == k || basis[other].is_zero()) continue;
      const Monomial& lo = basis[other].leading_monomial();
      // among equal leading monomials the earliest element survives
      if (lo.divides(lm) && (lo != lm || other < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k].monic());
  }

  std::vector<Polynomial<Coeff>> reduced;
  reduced.reserve(minimal.size());
  std::vector<Polynomial<Coeff>> others;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    others.clear();
    for (std::size_t other = 0; other < minimal.size(); ++other)
      if (other != k) others.push_back(minimal[other]);
    reduced.push_back(normal_form(minimal[k], std::span<const Polynomial<Coeff>>(others)));
  }
  if (!reduced.empty()) {
    const VariableOrder& ord = reduced.front().order();
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return lex_compare(a.leading_monomial(), b.leading_monomial(), ord) == Ordering::Greater;
    });
  }
  return reduced;
}

template <Field Coeff>
std::vector<Polynomial<Coeff>> reduce_basis(const std::vector<Polynomial<Coeff>>& basis) {
  return reduce_basis(std::span<const Polynomial<Coeff>>(basis));
}

/// Minimal monomial generators of a monomial ideal, descending.
struct MonomialIdealGens {
  std::vector<Monomial> gens;
};

/// Divisibility antichain of the given monomials, sorted descending.
inline MonomialIdealGens minimalize(std::vector<Monomial> monomials, const VariableOrder& ord) {
  std::sort(monomials.begin(), monomials.end(), [&](const Monomial& a, const Monomial& b) {
    return lex_compare(a, b, ord) == Ordering::Greater;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  MonomialIdealGens out;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    bool redundant = false;
    for (std::size_t other = 0; other < monomials.size() && !redundant; ++other)
      redundant = other != k && monomials[other].divides(monomials[k]);
    if (!redundant) out.gens.push_back(monomials[k]);
  }
  return out;
}

template <Field Coeff>
MonomialIdealGens initial_gens(std::span<const Polynomial<Coeff>> basis) {
  if (basis.empty()) return {};
  std::vector<Monomial> lms;
  for (const auto& g : basis) {
    if (g.is_zero()) throw InvalidArgument("basis contains the zero polynomial");
    lms.push_back(g.leading_monomial());
  }
  return minimalize(std::move(lms), basis.front().order());
}

template <Field Coeff>
MonomialIdealGens initial_gens(const std::vector<Polynomial<Coeff>>& basis) {
  return initial_gens(std::span<const Polynomial<Coeff>>(basis));
}

}  // namespace lss
