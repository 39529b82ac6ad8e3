#pragma once

// Random instances for fuzzing: equations, morphisms, planted solutions and
// products of binomials.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "weq/lambda.hpp"
#include "weq/poly.hpp"
#include "weq/words.hpp"

namespace weq {

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace detail

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t length)
{
  Word w(length);
  for (auto& a : w) a = static_cast<Letter>(detail::uniform(rng, 0, alphabet - 1));
  return w;
}

/// Random equation with |E| <= max_size over n unknowns.
inline Equation random_equation(Rng& rng, std::size_t n, std::size_t max_size)
{
  const std::size_t total = detail::uniform(rng, 0, max_size);
  const std::size_t left = detail::uniform(rng, 0, total);
  return Equation(random_word(rng, n, left), random_word(rng, n, total - left), n);
}

/// Random balanced equation: the right side is a shuffle of the left.
/// Trivial shuffles are redrawn a bounded number of times.
inline Equation random_balanced_equation(Rng& rng, std::size_t n, std::size_t max_side)
{
  Word l, r;
  for (int attempt = 0; attempt < 16; ++attempt) {
    l = random_word(rng, n, detail::uniform(rng, 1, max_side));
    r = l;
    std::shuffle(r.begin(), r.end(), rng);
    if (l != r) break;
  }
  return Equation(std::move(l), std::move(r), n);
}

inline Morphism random_morphism(Rng& rng, std::size_t n, std::size_t alphabet, std::size_t max_image,
                                bool allow_erasing = true)
{
  std::vector<Word> im(n);
  for (auto& w : im) w = random_word(rng, alphabet, detail::uniform(rng, allow_erasing ? 0 : 1, max_image));
  return Morphism(std::move(im), alphabet);
}

/// Images are concatenations of one or two short base words, which makes
/// nontrivial solutions common.
inline Morphism structured_morphism(Rng& rng, std::size_t n, std::size_t alphabet, std::size_t max_image,
                                    bool allow_erasing = true)
{
  const std::size_t bases = detail::uniform(rng, 1, 2);
  std::vector<Word> base(bases);
  for (auto& b : base) b = random_word(rng, alphabet, detail::uniform(rng, 1, std::min<std::size_t>(3, max_image)));
  std::vector<Word> im(n);
  for (auto& w : im) {
    const std::size_t parts = detail::uniform(rng, allow_erasing ? 0 : 1, 3);
    for (std::size_t i = 0; i < parts; ++i) {
      const Word& b = base[detail::uniform(rng, 0, bases - 1)];
      if (w.size() + b.size() > max_image) break;
      w.insert(w.end(), b.begin(), b.end());
    }
    if (w.empty() && !allow_erasing) w = base.front();
  }
  return Morphism(std::move(im), alphabet);
}

/*
 * Randomized depth-first search for a word v != u over the unknowns with
 * h(v) = h(u) and |v| <= max_len. Erased unknowns may be inserted anywhere.
 */
inline std::optional<Word> find_other_side(Rng& rng, const Morphism& h, const Word& u, std::size_t max_len,
                                           std::size_t budget = 4000)
{
  const Word target = apply(h, u);
  const std::size_t n = h.domain_size();
  std::vector<Letter> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Letter>(i);
  Word v;
  std::size_t visited = 0;

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (++visited > budget) return false;
    if (pos == target.size() && v != u && !v.empty()) return true;
    if (v.size() >= max_len) return false;
    std::vector<Letter> local = order;
    std::shuffle(local.begin(), local.end(), rng);
    for (auto x : local) {
      const Word& im = h.image(x);
      if (im.empty()) {
        // Inserting erased unknowns forever is pointless; allow them rarely.
        if (detail::uniform(rng, 0, 3) != 0) continue;
      }
      else if (pos + im.size() > target.size() || !std::equal(im.begin(), im.end(), target.begin() + static_cast<std::ptrdiff_t>(pos))) {
        continue;
      }
      v.push_back(x);
      if (self(self, pos + im.size())) return true;
      v.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0)) return v;
  return std::nullopt;
}

/// An equation (u, v) with u != v solved by h, |u| + |v| <= max_size.
inline std::optional<Equation> plant_equation(Rng& rng, const Morphism& h, std::size_t max_size)
{
  if (max_size < 2) return std::nullopt;
  const std::size_t n = h.domain_size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t lu = detail::uniform(rng, 1, max_size - 1);
    Word u = random_word(rng, n, lu);
    if (auto v = find_other_side(rng, h, u, max_size - lu)) {
      if (detail::uniform(rng, 0, 1)) return Equation(std::move(u), std::move(*v), n);
      return Equation(std::move(*v), std::move(u), n);
    }
  }
  return std::nullopt;
}

/// Random coprime lambda with entries in [-max_entry, max_entry]; mixed
/// (both signs present) on request.
inline LambdaVector random_lambda(Rng& rng, std::size_t n, std::int64_t max_entry, bool mixed)
{
  std::uniform_int_distribution<std::int64_t> d(-max_entry, max_entry);
  while (true) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = d(rng);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    LambdaVector l(std::move(v));
    if (mixed && !l.is_mixed()) continue;
    return l;
  }
}

/// Sum of distinct monomials with coefficients +-1.
inline MultiPoly random_unit_poly(Rng& rng, std::size_t n, std::size_t max_terms, std::uint32_t max_exp)
{
  MultiPoly p(n);
  std::size_t available = 1;
  for (std::size_t i = 0; i < n && available < max_terms; ++i) available *= max_exp + 1;
  const std::size_t terms = detail::uniform(rng, 1, std::min(max_terms, available));
  std::set<Exponent> used;
  while (used.size() < terms) {
    Exponent e(n);
    for (auto& x : e) x = static_cast<std::uint32_t>(detail::uniform(rng, 0, max_exp));
    if (used.insert(e).second) p.add_term(e, detail::uniform(rng, 0, 1) ? 1 : -1);
  }
  return p;
}

} // namespace weq
