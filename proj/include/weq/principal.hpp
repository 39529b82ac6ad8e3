#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weq/words.hpp"

namespace weq {

/// One elementary substitution of the reduction.
struct ReductionStep {
  enum class Kind {
    Erase,  ///< h(target) is empty; target is deleted from the system.
    Prefix, ///< target -> source target; h(target) loses the prefix h(source).
    Merge,  ///< target -> source; |h(source)| = |h(target)|.
  };
  Kind kind;
  Letter target;
  Letter source = 0;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct PrincipalDecomposition {
  Morphism g;     ///< principal solution, letters named by first use
  Morphism theta; ///< non-erasing, alp(g) -> original target alphabet
  std::vector<ReductionStep> trace;
};

inline bool is_trivial(const EqSystem& t) { return t.trivial(); }

namespace detail {

inline Word substitute(const Word& w, Letter target, const Word& replacement)
{
  Word r;
  r.reserve(w.size() + replacement.size());
  for (auto x : w) {
    if (x == target)
      r.insert(r.end(), replacement.begin(), replacement.end());
    else
      r.push_back(x);
  }
  return r;
}

// Drops the common prefix and the common suffix of the two sides.
inline void cancel_common_affixes(Word& u, Word& v)
{
  auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  const auto k = static_cast<std::ptrdiff_t>(iu - u.begin());
  u.erase(u.begin(), u.begin() + k);
  v.erase(v.begin(), v.begin() + k);
  auto [ru, rv] = std::mismatch(u.rbegin(), u.rend(), v.rbegin(), v.rend());
  const auto s = static_cast<std::ptrdiff_t>(ru - u.rbegin());
  u.resize(u.size() - static_cast<std::size_t>(s));
  v.resize(v.size() - static_cast<std::size_t>(s));
}

} // namespace detail

/*
 * Writes a solution h of T as h = theta o g with g principal.
 *
 * Erased unknowns are removed first. Then, while some equation (u, v) is
 * nontrivial, take the first position where its sides differ, with x on the
 * left and y on the right:
 *   |h(x)| < |h(y)|:  y -> xy and h(y) := h(x)^{-1} h(y)
 *   |h(x)| > |h(y)|:  x -> yx and h(x) := h(y)^{-1} h(x)
 *   |h(x)| = |h(y)|:  y -> x (then h(x) = h(y))
 * Common prefixes and suffixes are cancelled after each substitution,
 * which does not change the solution set. Each step lowers
 * |alp(T)| + sum |h(x)|. Once the system is trivial the remaining unknowns
 * become the letters of g, and g is recovered by undoing the substitutions
 * in reverse. All decisions depend on L(h) only.
 */
inline PrincipalDecomposition principal_decompose(const Morphism& h, const EqSystem& t)
{
  const std::size_t n = t.unknowns();
  require_same_size(h.domain_size(), n, "principal_decompose");
  if (!is_solution(h, t)) throw std::invalid_argument("principal_decompose: h is not a solution of T");

  PrincipalDecomposition out;
  std::vector<Word> cur(h.images());
  std::vector<bool> alive(n, true);
  std::vector<std::pair<Word, Word>> eqs;
  for (const auto& e : t) eqs.emplace_back(e.left, e.right);

  auto remove_everywhere = [&](Letter x, const Word& replacement) {
    for (auto& [u, v] : eqs) {
      u = detail::substitute(u, x, replacement);
      v = detail::substitute(v, x, replacement);
      detail::cancel_common_affixes(u, v);
    }
  };

  for (Letter x = 0; x < n; ++x) {
    if (cur[x].empty()) {
      alive[x] = false;
      out.trace.push_back({ReductionStep::Kind::Erase, x, 0});
      remove_everywhere(x, {});
    }
  }
  for (auto& [u, v] : eqs) detail::cancel_common_affixes(u, v);

  auto measure = [&] {
    std::size_t m = 0;
    for (Letter x = 0; x < n; ++x)
      if (alive[x]) m += 1 + cur[x].size();
    return m;
  };

  std::size_t last = measure();
  while (true) {
    auto it = std::find_if(eqs.begin(), eqs.end(), [](const auto& e) { return e.first != e.second; });
    if (it == eqs.end()) break;
    const Word& u = it->first;
    const Word& v = it->second;
    // Affixes are cancelled, and a non-erasing solution cannot have one side
    // a proper prefix of the other.
    if (u.empty() || v.empty()) throw std::logic_error("principal_decompose: side became a proper prefix");
    const Letter x = u.front();
    const Letter y = v.front();
    const std::size_t lx = cur[x].size(), ly = cur[y].size();
    if (lx < ly) {
      cur[y].erase(cur[y].begin(), cur[y].begin() + static_cast<std::ptrdiff_t>(lx));
      out.trace.push_back({ReductionStep::Kind::Prefix, y, x});
      remove_everywhere(y, Word{x, y});
    }
    else if (lx > ly) {
      cur[x].erase(cur[x].begin(), cur[x].begin() + static_cast<std::ptrdiff_t>(ly));
      out.trace.push_back({ReductionStep::Kind::Prefix, x, y});
      remove_everywhere(x, Word{y, x});
    }
    else {
      alive[y] = false;
      out.trace.push_back({ReductionStep::Kind::Merge, y, x});
      remove_everywhere(y, Word{x});
    }
    const std::size_t now = measure();
    if (now >= last) throw std::logic_error("principal_decompose: termination measure did not decrease");
    last = now;
  }

  // Trivial system: every surviving unknown is its own letter.
  std::vector<Word> g(n);
  std::vector<Word> theta_images;
  for (Letter x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    g[x] = {static_cast<Letter>(theta_images.size())};
    theta_images.push_back(cur[x]);
  }
  for (auto step = out.trace.rbegin(); step != out.trace.rend(); ++step) {
    switch (step->kind) {
    case ReductionStep::Kind::Erase:
      g[step->target].clear();
      break;
    case ReductionStep::Kind::Prefix: {
      Word w = g[step->source];
      w.insert(w.end(), g[step->target].begin(), g[step->target].end());
      g[step->target] = std::move(w);
      break;
    }
    case ReductionStep::Kind::Merge:
      g[step->target] = g[step->source];
      break;
    }
  }

  auto [canon, to_old] = canonical_renaming(Morphism(std::move(g), theta_images.size()));
  std::vector<Word> theta;
  theta.reserve(to_old.size());
  for (auto old : to_old) theta.push_back(std::move(theta_images[old]));
  out.g = std::move(canon);
  out.theta = Morphism(std::move(theta), h.target_size());

  if (compose(out.theta, out.g) != h) throw std::logic_error("principal_decompose: theta o g != h");
  return out;
}

} // namespace weq
