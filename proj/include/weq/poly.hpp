#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weq/lambda.hpp"
#include "weq/types.hpp"

namespace weq {

/// Graded lexicographic order, largest first. X^2 > XY > Y^2 > X > Y > 1.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const
  {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in Z[X_1..X_n]. Terms are kept in graded lexicographic
/// order (largest first) and no zero coefficient is ever stored, so two
/// polynomials are equal iff their term maps are equal.
class MultiPoly {
public:
  using Terms = std::map<Exponent, Integer, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : n_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Integer& c)
  {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MultiPoly monomial(Exponent e, const Integer& c = 1)
  {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i)
  {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const
  {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Largest term in graded lexicographic order; polynomial must be nonzero.
  const std::pair<const Exponent, Integer>& leading() const
  {
    if (terms_.empty()) throw std::domain_error("MultiPoly::leading: zero polynomial");
    return *terms_.begin();
  }

  std::uint64_t total_degree() const { return terms_.empty() ? 0 : degree(terms_.begin()->first); }

  void add_term(const Exponent& e, const Integer& c)
  {
    require_same_size(e.size(), n_, "MultiPoly::add_term");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& q)
  {
    require_same_size(n_, q.n_, "MultiPoly::+");
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& q)
  {
    require_same_size(n_, q.n_, "MultiPoly::-");
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly operator-() const
  {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q)
  {
    require_same_size(p.n_, q.n_, "MultiPoly::*");
    MultiPoly r(p.n_);
    Exponent e(p.n_);
    for (const auto& [a, ca] : p.terms_) {
      for (const auto& [b, cb] : q.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  /// Multiplies by X^shift.
  MultiPoly shifted(const Exponent& shift) const
  {
    require_same_size(shift.size(), n_, "MultiPoly::shifted");
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < n_; ++i) f[i] += shift[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
  }

  /// Divides by X^mu; every term must be divisible.
  MultiPoly unshifted(const Exponent& mu) const
  {
    require_same_size(mu.size(), n_, "MultiPoly::unshifted");
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
      if (!divides(mu, e)) throw std::domain_error("MultiPoly::unshifted: term not divisible");
      Exponent f = e;
      for (std::size_t i = 0; i < n_; ++i) f[i] -= mu[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
  }

  MultiPoly pow(unsigned k) const
  {
    MultiPoly r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
  std::size_t n_;
  Terms terms_;
};

/// Sparse polynomial in Z[x].
class UniPoly {
public:
  using Terms = std::map<std::uint64_t, Integer>;

  UniPoly() = default;

  static UniPoly monomial(std::uint64_t d, const Integer& c = 1)
  {
    UniPoly p;
    p.add_term(d, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Integer coefficient(std::uint64_t d) const
  {
    auto it = terms_.find(d);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(std::uint64_t d, const Integer& c)
  {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  UniPoly& operator+=(const UniPoly& q)
  {
    for (const auto& [d, c] : q.terms_) add_term(d, c);
    return *this;
  }

  UniPoly& operator-=(const UniPoly& q)
  {
    for (const auto& [d, c] : q.terms_) add_term(d, -c);
    return *this;
  }

  UniPoly operator-() const
  {
    UniPoly r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
  }

  friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
  friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q)
  {
    UniPoly r;
    for (const auto& [a, ca] : p.terms_)
      for (const auto& [b, cb] : q.terms_) r.add_term(a + b, ca * cb);
    return r;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  Terms terms_;
};

/// Omega_gamma: X_i -> x^{gamma_i}. A ring homomorphism Z[X] -> Z[x].
template <class Vec>
UniPoly evaluate(const MultiPoly& p, const Vec& gamma)
{
  require_same_size(gamma.size(), p.nvars(), "evaluate");
  UniPoly r;
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<std::uint64_t>(e[i]) * gamma[i];
    r.add_term(d, c);
  }
  return r;
}

/// P(w) = sum_i (w_i + 1) x^i; letters are shifted to the digits 1..k so the
/// length of w is recoverable from P(w).
template <class WordT>
UniPoly word_poly(const WordT& w)
{
  UniPoly p;
  for (std::size_t i = 0; i < w.size(); ++i) p.add_term(i, Integer(w[i]) + 1);
  return p;
}

/// The pure difference binomial X^{lambda+} - X^{lambda-}. Irreducible because
/// lambda has coprime coefficients.
class Binomial {
public:
  explicit Binomial(LambdaVector lambda) : lambda_(std::move(lambda)) {}

  /// X^a - X^b, up to sign. Rejects reducible binomials: a and b must have
  /// disjoint supports and a - b coprime coefficients.
  static Binomial from_exponents(const Exponent& a, const Exponent& b)
  {
    require_same_size(a.size(), b.size(), "Binomial::from_exponents");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0 && b[i] != 0)
        throw std::invalid_argument("Binomial: X^a - X^b has a monomial factor");
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      g = std::gcd(g, static_cast<std::int64_t>(a[i]) + static_cast<std::int64_t>(b[i]));
    if (g == 0) throw std::invalid_argument("Binomial: X^a - X^a is zero");
    if (g != 1) throw std::invalid_argument("Binomial: exponent difference not coprime, reducible");
    return Binomial(LambdaVector::difference(a, b));
  }

  const LambdaVector& lambda() const { return lambda_; }
  std::size_t nvars() const { return lambda_.size(); }

  MultiPoly poly() const
  {
    MultiPoly p = MultiPoly::monomial(lambda_.positive());
    p -= MultiPoly::monomial(lambda_.negative());
    return p;
  }

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
  friend bool operator==(const Binomial&, const Binomial&) = default;

private:
  LambdaVector lambda_;
};

namespace detail {

// Total order on monomials compatible with multiplication in which
// X^{lambda+} > X^{lambda-}: compare lambda-weight, then lexicographically.
struct LambdaWeightGreater {
  const LambdaVector* lambda;
  bool operator()(const Exponent& a, const Exponent& b) const
  {
    const auto wa = weight(a), wb = weight(b);
    if (wa != wb) return wa > wb;
    return a > b;
  }
  std::int64_t weight(const Exponent& e) const
  {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += (*lambda)[i] * static_cast<std::int64_t>(e[i]);
    return w;
  }
};

} // namespace detail

/*
 * Exact division by X^{lambda+} - X^{lambda-}.
 *
 * Rewrites c X^m -> c X^{m - lambda+ + lambda-} whenever X^{lambda+} | X^m,
 * processing terms from largest to smallest in the lambda-weight order. Each
 * rewrite lowers the weight by |lambda|^2, so a term moved to the remainder is
 * never produced again. A nonzero multiple s*b always has the term
 * max(s) X^{lambda+} uncancelled, so b | p iff the remainder is zero.
 */
inline std::optional<MultiPoly> divide_by_binomial(const MultiPoly& p, const Binomial& b)
{
  require_same_size(p.nvars(), b.nvars(), "divide_by_binomial");
  const LambdaVector& lambda = b.lambda();
  const Exponent lead = lambda.positive();
  const Exponent trail = lambda.negative();
  const std::size_t n = p.nvars();

  std::map<Exponent, Integer, detail::LambdaWeightGreater> work(detail::LambdaWeightGreater{&lambda});
  for (const auto& [e, c] : p.terms()) work.emplace(e, c);

  MultiPoly quotient(n);
  while (!work.empty()) {
    auto top = work.begin();
    if (!divides(lead, top->first)) return std::nullopt;
    Exponent q = top->first;
    for (std::size_t i = 0; i < n; ++i) q[i] -= lead[i];
    const Integer c = top->second;
    work.erase(top);
    quotient.add_term(q, c);
    for (std::size_t i = 0; i < n; ++i) q[i] += trail[i];
    auto [it, fresh] = work.try_emplace(q, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  }
  return quotient;
}

/// Support exponents of p minimal under the componentwise order, in term order.
inline std::vector<Exponent> minimal_monomials(const MultiPoly& p)
{
  if (p.is_zero()) throw std::domain_error("minimal_monomials: zero polynomial");
  std::vector<Exponent> support;
  for (const auto& [e, c] : p.terms()) support.push_back(e);
  std::vector<Exponent> out;
  for (const auto& a : support) {
    bool minimal = true;
    for (const auto& b : support)
      if (&a != &b && divides(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// Componentwise minimum of the support: the largest monomial dividing p.
inline Exponent monomial_content(const MultiPoly& p)
{
  if (p.is_zero()) throw std::domain_error("monomial_content: zero polynomial");
  Exponent mu = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::min(mu[i], e[i]);
  return mu;
}

struct BinomialFactor {
  Binomial binomial;
  unsigned multiplicity = 0;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

/// sign * X^content * prod(binomial^multiplicity) * residual.
struct BinomialFactorization {
  int sign = 1;
  Exponent content;
  std::vector<BinomialFactor> factors;
  MultiPoly residual;

  MultiPoly expand() const
  {
    MultiPoly r = residual.shifted(content);
    for (const auto& f : factors) r *= f.binomial.poly().pow(f.multiplicity);
    return sign < 0 ? -r : r;
  }

  /// Factors whose lambda has both a positive and a negative part.
  std::size_t mixed_factor_count() const
  {
    return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const auto& f) {
      return f.binomial.lambda().is_mixed();
    }));
  }
};

/// Candidate normals: coprime directions of pairwise support differences.
inline std::vector<LambdaVector> binomial_candidates(const MultiPoly& p)
{
  std::set<LambdaVector> seen;
  std::vector<Exponent> support;
  for (const auto& [e, c] : p.terms()) support.push_back(e);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      seen.insert(LambdaVector::difference(support[i], support[j]));
  return {seen.rbegin(), seen.rend()};
}

/*
 * Extracts the monomial content and every irreducible binomial divisor with
 * its multiplicity.
 *
 * If X^{lambda+} - X^{lambda-} divides p then p vanishes on N(lambda), and
 * grouping the terms of p by their class modulo lambda shows some two support
 * exponents differ by a multiple of lambda. So the pairwise differences of
 * the support of p are a complete candidate set. Factors are listed in
 * decreasing lexicographic order of lambda; the residual has a positive
 * leading coefficient.
 */
inline BinomialFactorization binomial_factors(const MultiPoly& p)
{
  if (p.is_zero()) throw std::domain_error("binomial_factors: zero polynomial");
  BinomialFactorization f;
  f.content = monomial_content(p);
  MultiPoly rest = p.unshifted(f.content);

  for (const auto& lambda : binomial_candidates(rest)) {
    Binomial b(lambda);
    unsigned mult = 0;
    while (rest.size() > 1) {
      auto q = divide_by_binomial(rest, b);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult) f.factors.push_back({b, mult});
  }
  if (rest.leading().second < 0) {
    f.sign = -1;
    rest = -rest;
  }
  f.residual = std::move(rest);
  return f;
}

} // namespace weq
