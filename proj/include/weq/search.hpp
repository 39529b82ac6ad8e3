#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "weq/analysis.hpp"
#include "weq/encode.hpp"
#include "weq/principal.hpp"
#include "weq/random.hpp"
#include "weq/words.hpp"

namespace weq {

struct SearchConfig {
  std::size_t max_total_image_length = 8;
  std::size_t alphabet_size = 2;
  bool allow_erasing = true;
  /// Refuse searches that would test more candidate morphisms than this.
  std::uint64_t max_candidates = 100'000'000;
  unsigned threads = 1;
};

/// Rank n-1 solutions sharing one space Gamma_h = N(normal).
struct SolutionClass {
  LambdaVector normal;
  std::vector<std::size_t> members;
  bool erasing = false;
};

struct SolutionCatalog {
  std::size_t unknowns = 0;
  std::vector<Morphism> solutions;
  std::vector<std::size_t> ranks;
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  std::vector<SolutionClass> classes;
  std::uint64_t candidates = 0;

  std::size_t erasing_classes() const
  {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const SolutionClass& c) { return c.erasing; }));
  }
};

namespace detail {

// Length types with total t in lexicographic order, restricted to those that
// satisfy the length equation |h(u)| = |h(v)| of every equation.
inline std::vector<LengthType> admissible_length_types(const EqSystem& t, const SearchConfig& cfg)
{
  const std::size_t n = t.unknowns();
  std::vector<std::vector<long>> diffs;
  for (const auto& e : t) {
    std::vector<long> d(n, 0);
    for (auto x : e.left) ++d[x];
    for (auto x : e.right) --d[x];
    diffs.push_back(std::move(d));
  }
  std::vector<LengthType> out;
  LengthType cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (i + 1 == n) {
      cur[i] = remaining;
      if (!cfg.allow_erasing && remaining == 0) return;
      for (const auto& d : diffs) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += d[j] * static_cast<long>(cur[j]);
        if (s != 0) return;
      }
      out.push_back(cur);
      return;
    }
    for (std::size_t v = cfg.allow_erasing ? 0 : 1; v <= remaining; ++v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  for (std::size_t total = 0; total <= cfg.max_total_image_length; ++total) {
    if (n == 0) break;
    rec(rec, 0, total);
  }
  return out;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// All morphisms of length type `l` in lexicographic order of the concatenated
// images, filtered by `t`.
inline std::vector<Morphism> solutions_of_type(const EqSystem& t, const LengthType& l, std::size_t alphabet)
{
  std::vector<Morphism> out;
  std::size_t total = 0;
  for (auto v : l) total += v;
  if (alphabet == 0 && total > 0) return out;
  Word flat(total, 0);
  while (true) {
    std::vector<Word> im;
    im.reserve(l.size());
    std::size_t pos = 0;
    for (auto len : l) {
      im.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos), flat.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
    Morphism h(std::move(im), alphabet);
    if (is_solution(h, t)) out.push_back(std::move(h));
    // Odometer, last position fastest.
    std::size_t i = total;
    while (i > 0) {
      --i;
      if (++flat[i] < alphabet) break;
      flat[i] = 0;
      if (i == 0) return out;
    }
    if (total == 0) return out;
  }
}

} // namespace detail

/// Number of candidate morphisms enumerate_solutions would test.
inline std::uint64_t search_space_size(const EqSystem& t, const SearchConfig& cfg)
{
  std::uint64_t count = 0;
  for (const auto& l : detail::admissible_length_types(t, cfg)) {
    std::uint64_t total = 0;
    for (auto v : l) total += v;
    const std::uint64_t c = detail::saturating_pow(cfg.alphabet_size, total);
    count = (UINT64_MAX - count < c) ? UINT64_MAX : count + c;
  }
  return count;
}

/*
 * Every solution of T with total image length <= cfg.max_total_image_length
 * over cfg.alphabet_size letters, ordered by total length, then length type,
 * then lexicographically. Rank n-1 solutions are grouped into linear
 * equivalence classes (same normal vector), in order of first appearance.
 * Parallel runs split the work by length type and merge in serial order.
 */
inline SolutionCatalog enumerate_solutions(const EqSystem& t, const SearchConfig& cfg = {})
{
  const std::size_t n = t.unknowns();
  SolutionCatalog cat;
  cat.unknowns = n;
  cat.candidates = search_space_size(t, cfg);
  if (cat.candidates > cfg.max_candidates)
    throw std::length_error("enumerate_solutions: search space of " + std::to_string(cat.candidates) +
                            " morphisms exceeds the limit of " + std::to_string(cfg.max_candidates));

  const auto types = detail::admissible_length_types(t, cfg);
  std::vector<std::vector<Morphism>> per_type(types.size());
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < types.size(); ++i) per_type[i] = detail::solutions_of_type(t, types[i], cfg.alphabet_size);
  }
  else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < types.size(); i += threads)
          per_type[i] = detail::solutions_of_type(t, types[i], cfg.alphabet_size);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::map<LambdaVector, std::size_t> class_of;
  for (auto& bucket : per_type) {
    for (auto& h : bucket) {
      const std::size_t idx = cat.solutions.size();
      const std::size_t r = rank(h);
      cat.ranks.push_back(r);
      cat.by_rank[r].push_back(idx);
      if (n > 0 && r + 1 == n) {
        LambdaVector normal = gamma_normal(h);
        auto [it, fresh] = class_of.try_emplace(normal, cat.classes.size());
        if (fresh) cat.classes.push_back({normal, {}, !normal.is_mixed()});
        cat.classes[it->second].members.push_back(idx);
      }
      cat.solutions.push_back(std::move(h));
    }
  }
  return cat;
}

struct BoundVerification {
  enum class Status { Verified, Violation, NotIndependent };

  Status status = Status::Verified;
  BoundReport bounds;
  std::size_t classes = 0;
  std::size_t erasing_classes = 0;
  std::vector<LambdaVector> class_normals;
  /// Normals of nonerasing classes whose binomial fails to divide some t_{jk}.
  std::vector<LambdaVector> unexplained;
  std::optional<Equation> equation;
  std::optional<Equation> equation2;
  std::optional<Morphism> counterexample;
  std::string message;
};

/*
 * Counts linear equivalence classes of rank n-1 common solutions of E and E'
 * within the search bounds and checks them against min(|E|+|E'|, best pair
 * bound). Also checks that every nonerasing class normal is a binomial factor
 * of every nonzero determinant. Pairs that are identical, have only zero
 * determinants, or have two erasing classes (which forces E and E' to be
 * equivalent) are reported as not independent.
 */
inline BoundVerification verify_bounds(const Equation& e, const Equation& e2, const SearchConfig& cfg = {})
{
  BoundVerification v;
  v.equation = e;
  v.equation2 = e2;
  v.bounds = bounds(e, e2);
  if (e.trivial() || e2.trivial() || !v.bounds.independent) {
    v.status = BoundVerification::Status::NotIndependent;
    v.message = e == e2 ? "identical equations" : "not independent: some equation is trivial or every t_jk is zero";
    return v;
  }
  const SolutionCatalog cat = enumerate_solutions(EqSystem{e, e2}, cfg);
  v.classes = cat.classes.size();
  v.erasing_classes = cat.erasing_classes();
  for (const auto& c : cat.classes) v.class_normals.push_back(c.normal);
  if (v.erasing_classes >= 2) {
    v.status = BoundVerification::Status::NotIndependent;
    v.message = "two erasing classes: the equations are equivalent";
    return v;
  }

  const auto dets = nonzero_determinants(e, e2);
  for (const auto& c : cat.classes) {
    if (c.erasing) continue;
    const Binomial b(c.normal);
    for (const auto& [jk, t] : dets) {
      if (!divide_by_binomial(t, b)) {
        v.unexplained.push_back(c.normal);
        if (!v.counterexample) v.counterexample = cat.solutions[c.members.front()];
        break;
      }
    }
  }
  const std::size_t limit = std::min(v.bounds.sum_bound, v.bounds.best);
  if (v.classes > limit) {
    v.status = BoundVerification::Status::Violation;
    v.message = std::to_string(v.classes) + " classes exceed the bound " + std::to_string(limit);
    if (!v.counterexample) v.counterexample = cat.solutions[cat.classes.back().members.front()];
  }
  else if (!v.unexplained.empty()) {
    v.status = BoundVerification::Status::Violation;
    v.message = "class normal " + render(v.unexplained.front()) + " does not divide every determinant";
  }
  else {
    v.message = std::to_string(v.classes) + " classes within the bound " + std::to_string(limit);
  }
  return v;
}

struct EncodingFuzzConfig {
  std::size_t cases = 10000;
  std::size_t max_unknowns = 4;
  std::size_t max_equation_size = 10;
  std::size_t max_alphabet = 3;
  std::size_t max_image_length = 6;
  std::uint64_t seed = 1;
};

struct EncodingVerification {
  std::size_t cases = 0;
  std::size_t solutions = 0;  ///< cases where h solves E
  std::size_t balanced = 0;   ///< cases with a balanced E
  std::size_t discrepancies = 0;
  std::size_t balance_discrepancies = 0;
  std::optional<std::pair<Equation, Morphism>> counterexample;
};

/// One fuzz instance: half random pairs, half equations planted for h.
inline std::pair<Equation, Morphism> random_encoding_case(Rng& rng, const EncodingFuzzConfig& cfg)
{
  const std::size_t n = detail::uniform(rng, 1, cfg.max_unknowns);
  const std::size_t k = detail::uniform(rng, 1, cfg.max_alphabet);
  if (detail::uniform(rng, 0, 1) == 0)
    return {random_equation(rng, n, cfg.max_equation_size), random_morphism(rng, n, k, cfg.max_image_length)};
  Morphism h = structured_morphism(rng, n, k, cfg.max_image_length);
  if (auto e = plant_equation(rng, h, cfg.max_equation_size)) return {*e, h};
  return {random_equation(rng, n, cfg.max_equation_size), h};
}

/// Compares the polynomial solution check with direct word comparison, and
/// the balanced residual with Parikh balance, on random instances.
inline EncodingVerification verify_encoding(const EncodingFuzzConfig& cfg = {})
{
  Rng rng(cfg.seed);
  EncodingVerification r;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    auto [e, h] = random_encoding_case(rng, cfg);
    ++r.cases;
    const bool word = is_solution(h, e);
    const bool poly = check_solution_poly(e, h);
    const bool bal = is_balanced(e);
    r.solutions += word;
    r.balanced += bal;
    bool bad = false;
    if (word != poly) {
      ++r.discrepancies;
      bad = true;
    }
    if (bal != balanced_residual(e).is_zero()) {
      ++r.balance_discrepancies;
      bad = true;
    }
    if (bad && !r.counterexample) r.counterexample = {e, h};
  }
  return r;
}

/*
 * Bounded check of strong independence: for each i, a solution of rank n-1
 * of T without E_i that does not solve E_i, searched within `cfg`. A missing
 * witness only means none exists within the bounds.
 */
inline std::vector<std::optional<Morphism>> bounded_independence_witnesses(const EqSystem& t,
                                                                           const SearchConfig& cfg = {})
{
  std::vector<std::optional<Morphism>> out;
  const std::size_t n = t.unknowns();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Equation> rest;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) rest.push_back(t[j]);
    if (rest.empty()) rest.push_back(Equation({}, {}, n));
    const SolutionCatalog cat = enumerate_solutions(EqSystem(rest), cfg);
    std::optional<Morphism> witness;
    for (std::size_t idx = 0; idx < cat.solutions.size() && !witness; ++idx)
      if (cat.ranks[idx] + 1 == n && !is_solution(cat.solutions[idx], t[i])) witness = cat.solutions[idx];
    out.push_back(std::move(witness));
  }
  return out;
}

} // namespace weq
