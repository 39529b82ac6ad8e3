#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "weq/poly.hpp"
#include "weq/words.hpp"

namespace weq {

/// (S_{E,x_1}, ..., S_{E,x_n}).
struct SVector {
  std::vector<MultiPoly> components;

  std::size_t size() const { return components.size(); }
  const MultiPoly& operator[](std::size_t j) const { return components[j]; }
  bool is_zero() const
  {
    return std::all_of(components.begin(), components.end(), [](const MultiPoly& p) { return p.is_zero(); });
  }

  friend bool operator==(const SVector&, const SVector&) = default;
};

/// (P(h(x_1)), ..., P(h(x_n))) together with the length type of h.
struct PVector {
  std::vector<UniPoly> components;
  LengthType lengths;
};

namespace detail {

// Adds sign * (prefix monomial) to out[x] for every occurrence of an unknown
// in `side`, the prefix monomial being the product of X_y over the preceding
// unknowns y.
inline void accumulate_prefixes(const Word& side, int sign, std::size_t n, std::vector<MultiPoly>& out)
{
  Exponent prefix(n, 0);
  for (auto x : side) {
    out[x].add_term(prefix, sign);
    ++prefix[x];
  }
}

} // namespace detail

/// The whole S-vector in one left-to-right scan per side.
inline SVector s_vector(const Equation& e)
{
  SVector s;
  s.components.assign(e.n, MultiPoly(e.n));
  detail::accumulate_prefixes(e.left, +1, e.n, s.components);
  detail::accumulate_prefixes(e.right, -1, e.n, s.components);
  return s;
}

inline MultiPoly s_poly(const Equation& e, std::size_t j)
{
  if (j >= e.n) throw std::out_of_range("s_poly: unknown index " + std::to_string(j));
  return s_vector(e).components[j];
}

inline std::vector<UniPoly> s_vector_eval(const SVector& s, const LengthType& beta)
{
  std::vector<UniPoly> out;
  out.reserve(s.size());
  for (const auto& p : s.components) out.push_back(evaluate(p, beta));
  return out;
}

inline std::vector<UniPoly> s_vector_eval(const Equation& e, const LengthType& beta)
{
  require_same_size(beta.size(), e.n, "s_vector_eval");
  return s_vector_eval(s_vector(e), beta);
}

inline PVector p_vector(const Morphism& h)
{
  PVector p;
  p.lengths = h.length_type();
  for (const auto& w : h.images()) p.components.push_back(word_poly(w));
  return p;
}

/// S_E(L(h)) . P(h) = 0 in Z[x]. Equivalent to h(u) = h(v) because the dot
/// product telescopes to P(h(u)) - P(h(v)) and P is injective on words.
inline bool check_solution_poly(const Equation& e, const Morphism& h)
{
  require_same_size(h.domain_size(), e.n, "check_solution_poly");
  const PVector p = p_vector(h);
  const auto s = s_vector_eval(e, p.lengths);
  UniPoly dot;
  for (std::size_t j = 0; j < e.n; ++j) dot += s[j] * p.components[j];
  return dot.is_zero();
}

inline MultiPoly t_det(const SVector& s, const SVector& s2, std::size_t j, std::size_t k)
{
  require_same_size(s.size(), s2.size(), "t_det");
  if (j >= s.size() || k >= s.size()) throw std::out_of_range("t_det: index out of range");
  return s[j] * s2[k] - s2[j] * s[k];
}

/// t_{jk}^{E,E'} = S_{E,x_j} S_{E',x_k} - S_{E',x_j} S_{E,x_k}.
inline MultiPoly t_det(const Equation& e, const Equation& e2, std::size_t j, std::size_t k)
{
  require_same_size(e.n, e2.n, "t_det");
  return t_det(s_vector(e), s_vector(e2), j, k);
}

/// S_E . (X_1 - 1, ..., X_n - 1); zero iff E is balanced, otherwise the
/// difference of the two full side products.
inline MultiPoly balanced_residual(const Equation& e)
{
  const SVector s = s_vector(e);
  MultiPoly r(e.n);
  for (std::size_t j = 0; j < e.n; ++j)
    r += s[j] * (MultiPoly::variable(e.n, j) - MultiPoly::constant(e.n, 1));
  return r;
}

inline bool is_balanced(const Equation& e)
{
  std::vector<long> count(e.n, 0);
  for (auto x : e.left) ++count[x];
  for (auto x : e.right) --count[x];
  return std::all_of(count.begin(), count.end(), [](long c) { return c == 0; });
}

/// Erases x_k from both sides and shifts the later unknowns down.
inline Equation delta_k(const Equation& e, std::size_t k)
{
  if (k >= e.n) throw std::out_of_range("delta_k: unknown index " + std::to_string(k));
  auto strip = [k](const Word& w) {
    Word r;
    for (auto x : w)
      if (x != k) r.push_back(x > k ? x - 1 : x);
    return r;
  };
  return Equation(strip(e.left), strip(e.right), e.n - 1);
}

} // namespace weq
