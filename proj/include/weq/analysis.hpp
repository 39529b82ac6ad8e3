#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weq/encode.hpp"
#include "weq/poly.hpp"
#include "weq/text.hpp"
#include "weq/words.hpp"

namespace weq {

/// Factorization of one nonzero determinant t_{jk}^{E,E'}.
struct PairFactorization {
  std::size_t j = 0;
  std::size_t k = 0;
  MultiPoly determinant;
  BinomialFactorization factorization;
};

/// A binomial factor of the primary determinant read as a length constraint.
struct HyperplaneCandidate {
  LambdaVector lambda;
  unsigned multiplicity = 1;
  /// lambda has a positive and a negative part, so N(lambda) contains
  /// nonerasing length types. Otherwise only erasing solutions can lie on it.
  bool mixed = false;
  /// The binomial divides every nonzero determinant, as it must for the
  /// normal of a common rank n-1 solution.
  bool divides_all = false;
  /// For lambda = e_k: the erased unknown, and whether delta_k of both
  /// equations is trivial (necessary for an erasing rank n-1 solution).
  std::optional<std::size_t> erased_unknown;
  bool delta_trivial = false;

  std::string constraint() const { return length_constraint(lambda); }
};

struct HyperplaneReport {
  enum class Status { Ok, AllDeterminantsZero };

  Status status = Status::Ok;
  std::size_t unknowns = 0;
  std::vector<PairFactorization> pairs; ///< every j < k with t_{jk} != 0
  std::vector<HyperplaneCandidate> hyperplanes;

  /// The lexicographically first nonzero pair.
  const PairFactorization& primary() const
  {
    if (pairs.empty()) throw std::logic_error("HyperplaneReport: no nonzero determinant");
    return pairs.front();
  }

  /// Constraints 2|h(x)|+|h(y)|=|h(z)| for the mixed candidates.
  std::vector<std::string> constraints() const
  {
    std::vector<std::string> out;
    for (const auto& h : hyperplanes)
      if (h.mixed) out.push_back(h.constraint());
    return out;
  }

  std::vector<LambdaVector> mixed_normals() const
  {
    std::vector<LambdaVector> out;
    for (const auto& h : hyperplanes)
      if (h.mixed) out.push_back(h.lambda);
    return out;
  }
};

/// All nonzero t_{jk}, j < k, in lexicographic order of (j, k).
inline std::vector<std::pair<std::pair<std::size_t, std::size_t>, MultiPoly>> nonzero_determinants(
    const Equation& e, const Equation& e2)
{
  require_same_size(e.n, e2.n, "nonzero_determinants");
  const SVector s = s_vector(e), s2 = s_vector(e2);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, MultiPoly>> out;
  for (std::size_t j = 0; j < e.n; ++j)
    for (std::size_t k = j + 1; k < e.n; ++k) {
      MultiPoly t = t_det(s, s2, j, k);
      if (!t.is_zero()) out.push_back({{j, k}, std::move(t)});
    }
  return out;
}

inline HyperplaneReport solution_hyperplanes(const Equation& e, const Equation& e2)
{
  HyperplaneReport r;
  r.unknowns = e.n;
  for (auto& [jk, t] : nonzero_determinants(e, e2)) {
    PairFactorization pf{jk.first, jk.second, t, binomial_factors(t)};
    r.pairs.push_back(std::move(pf));
  }
  if (r.pairs.empty()) {
    r.status = HyperplaneReport::Status::AllDeterminantsZero;
    return r;
  }
  for (const auto& f : r.primary().factorization.factors) {
    HyperplaneCandidate c;
    c.lambda = f.binomial.lambda();
    c.multiplicity = f.multiplicity;
    c.mixed = c.lambda.is_mixed();
    c.divides_all = std::all_of(r.pairs.begin() + 1, r.pairs.end(), [&](const PairFactorization& p) {
      return divide_by_binomial(p.determinant, f.binomial).has_value();
    });
    const auto& l = c.lambda.entries();
    if (std::count(l.begin(), l.end(), 0) + 1 == static_cast<std::ptrdiff_t>(l.size()) && !c.mixed) {
      const auto k = static_cast<std::size_t>(std::find_if(l.begin(), l.end(), [](auto v) { return v != 0; }) - l.begin());
      c.erased_unknown = k;
      c.delta_trivial = delta_k(e, k).trivial() && delta_k(e2, k).trivial();
    }
    r.hyperplanes.push_back(std::move(c));
  }
  return r;
}

/*
 * For balanced E1, E2 in three unknowns, (t23, t31, t12) = t (X-1, Y-1, Z-1).
 * Each nonzero component is divided exactly by its X_i - 1 and the quotients
 * must agree; a disagreement is a bug, not an input error.
 */
inline MultiPoly cofactor_3vars(const Equation& e1, const Equation& e2)
{
  if (e1.n != 3 || e2.n != 3) throw std::invalid_argument("cofactor_3vars: equations must have 3 unknowns");
  if (!is_balanced(e1) || !is_balanced(e2)) throw std::invalid_argument("cofactor_3vars: equations must be balanced");
  const SVector s1 = s_vector(e1), s2 = s_vector(e2);
  const MultiPoly cross[3] = {t_det(s1, s2, 1, 2), t_det(s1, s2, 2, 0), t_det(s1, s2, 0, 1)};
  std::optional<MultiPoly> t;
  bool any_zero = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (cross[i].is_zero()) {
      any_zero = true;
      continue;
    }
    std::vector<std::int64_t> unit(3, 0);
    unit[i] = 1;
    auto q = divide_by_binomial(cross[i], Binomial(LambdaVector(unit)));
    if (!q) throw std::logic_error("cofactor_3vars: component not divisible by X_i - 1");
    if (t && *t != *q) throw std::logic_error("cofactor_3vars: inconsistent cofactors");
    t = std::move(*q);
  }
  if (!t) return MultiPoly(3);
  if (any_zero) throw std::logic_error("cofactor_3vars: zero and nonzero components");
  return *t;
}

struct MinimalCount {
  std::size_t count = 0; ///< minimal monomials of t_{jk}
  std::size_t upper = 0; ///< 2(|E|_{x_j} + |E|_{x_k})
  std::size_t lower = 0; ///< mixed binomial factors + 1

  bool holds() const { return lower <= count && count <= upper; }
};

inline MinimalCount minimal_count_bounds(const Equation& e, const Equation& e2, std::size_t j, std::size_t k)
{
  const MultiPoly t = t_det(e, e2, j, k);
  if (t.is_zero()) throw std::domain_error("minimal_count_bounds: t_jk is zero");
  MinimalCount m;
  m.count = minimal_monomials(t).size();
  m.upper = 2 * (e.occurrences(static_cast<Letter>(j)) + e.occurrences(static_cast<Letter>(k)));
  m.lower = binomial_factors(t).mixed_factor_count() + 1;
  return m;
}

struct PairBound {
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t bound = 0;
};

/// Upper bounds on the number of pairwise linearly nonequivalent rank n-1
/// common solutions (pair form) or on the size of a strongly independent
/// system (system form).
struct BoundReport {
  /// False if E = E' or every t_{jk} vanishes; the pair bounds are then empty.
  bool independent = true;
  std::size_t sum_bound = 0;
  std::vector<PairBound> pair_bounds;
  std::size_t best = 0;

  std::optional<PairBound> best_pair() const
  {
    if (pair_bounds.empty()) return std::nullopt;
    return *std::min_element(pair_bounds.begin(), pair_bounds.end(),
                             [](const PairBound& a, const PairBound& b) { return a.bound < b.bound; });
  }
};

namespace detail {

inline BoundReport make_bounds(const Equation& e, const Equation& e2, std::size_t offset)
{
  require_same_size(e.n, e2.n, "bounds");
  BoundReport r;
  r.sum_bound = e.size() + e2.size() + offset;
  r.best = r.sum_bound;
  if (e == e2) {
    r.independent = false;
    return r;
  }
  for (const auto& [jk, t] : nonzero_determinants(e, e2)) {
    const std::size_t b =
        2 * (e.occurrences(static_cast<Letter>(jk.first)) + e.occurrences(static_cast<Letter>(jk.second))) + offset;
    r.pair_bounds.push_back({jk.first, jk.second, b});
    r.best = std::min(r.best, b);
  }
  r.independent = !r.pair_bounds.empty();
  return r;
}

} // namespace detail

/// m <= |E| + |E'| and m <= 2(|E|_{x_k} + |E|_{x_l}) for every k < l with t_{kl} != 0.
inline BoundReport bounds(const Equation& e, const Equation& e2) { return detail::make_bounds(e, e2, 0); }

/// Bounds on the size of a strongly independent system from its first two
/// equations: +2, or +1 when the system has a solution of rank n-1.
inline BoundReport system_bounds(const EqSystem& t, bool has_rank_n1_solution = false)
{
  if (t.size() < 2) throw std::invalid_argument("system_bounds: need at least two equations");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) throw std::invalid_argument("system_bounds: equations must be pairwise distinct");
  return detail::make_bounds(t[0], t[1], has_rank_n1_solution ? 1 : 2);
}

} // namespace weq
