#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weq/lambda.hpp"
#include "weq/linalg.hpp"
#include "weq/types.hpp"

namespace weq {

/// Index of a letter in an alphabet (unknowns or target letters), 0-based.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

namespace detail {

inline void check_word(const Word& w, std::size_t alphabet, const char* what)
{
  for (auto a : w)
    if (a >= alphabet)
      throw std::out_of_range(std::string(what) + ": letter " + std::to_string(a) +
                              " outside alphabet of size " + std::to_string(alphabet));
}

} // namespace detail

/// A word equation (left, right) over the unknowns x_0..x_{n-1}.
struct Equation {
  Word left;
  Word right;
  std::size_t n = 0;

  Equation() = default;
  Equation(Word l, Word r, std::size_t unknowns) : left(std::move(l)), right(std::move(r)), n(unknowns)
  {
    detail::check_word(left, n, "Equation");
    detail::check_word(right, n, "Equation");
  }

  /// |E| = |left| + |right|.
  std::size_t size() const { return left.size() + right.size(); }

  /// |E|_x, occurrences of x on both sides.
  std::size_t occurrences(Letter x) const
  {
    return static_cast<std::size_t>(std::count(left.begin(), left.end(), x) +
                                     std::count(right.begin(), right.end(), x));
  }

  bool trivial() const { return left == right; }

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// A nonempty finite system of equations sharing the same unknowns.
class EqSystem {
public:
  explicit EqSystem(std::vector<Equation> eqs) : eqs_(std::move(eqs))
  {
    if (eqs_.empty()) throw std::invalid_argument("EqSystem: empty system");
    for (const auto& e : eqs_) require_same_size(e.n, eqs_.front().n, "EqSystem");
  }
  EqSystem(std::initializer_list<Equation> eqs) : EqSystem(std::vector<Equation>(eqs)) {}

  std::size_t unknowns() const { return eqs_.front().n; }
  std::size_t size() const { return eqs_.size(); }
  const std::vector<Equation>& equations() const { return eqs_; }
  const Equation& operator[](std::size_t i) const { return eqs_[i]; }

  bool trivial() const
  {
    return std::all_of(eqs_.begin(), eqs_.end(), [](const Equation& e) { return e.trivial(); });
  }

  /// alp(T): the unknowns that occur somewhere in the system.
  std::set<Letter> alphabet() const
  {
    std::set<Letter> s;
    for (const auto& e : eqs_) {
      s.insert(e.left.begin(), e.left.end());
      s.insert(e.right.begin(), e.right.end());
    }
    return s;
  }

  auto begin() const { return eqs_.begin(); }
  auto end() const { return eqs_.end(); }

private:
  std::vector<Equation> eqs_;
};

/// A morphism from {x_0..x_{domain-1}}* to {a_0..a_{target-1}}*, given by the images of the letters.
class Morphism {
public:
  Morphism() = default;
  Morphism(std::vector<Word> images, std::size_t target_size)
      : images_(std::move(images)), target_(target_size)
  {
    for (const auto& w : images_) detail::check_word(w, target_, "Morphism");
  }

  static Morphism identity(std::size_t n)
  {
    std::vector<Word> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = {static_cast<Letter>(i)};
    return Morphism(std::move(im), n);
  }

  std::size_t domain_size() const { return images_.size(); }
  std::size_t target_size() const { return target_; }
  const Word& image(Letter x) const { return images_.at(x); }
  const std::vector<Word>& images() const { return images_; }

  LengthType length_type() const
  {
    LengthType l(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) l[i] = images_[i].size();
    return l;
  }

  std::size_t total_length() const
  {
    std::size_t s = 0;
    for (const auto& w : images_) s += w.size();
    return s;
  }

  bool erasing() const
  {
    return std::any_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
  }

  /// alp(h): letters occurring in some image.
  std::set<Letter> alphabet() const
  {
    std::set<Letter> s;
    for (const auto& w : images_) s.insert(w.begin(), w.end());
    return s;
  }

  /// Each image is a single letter and distinct letters have distinct images.
  bool is_renaming() const
  {
    std::set<Letter> seen;
    for (const auto& w : images_)
      if (w.size() != 1 || !seen.insert(w[0]).second) return false;
    return true;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

private:
  std::vector<Word> images_;
  std::size_t target_ = 0;
};

/// Row i, column j: |h(x_j)|_{a_i}.
struct GammaMatrix {
  std::size_t unknowns = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  IntMatrix to_integer() const
  {
    IntMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
  }

  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;
};

inline Word apply(const Morphism& h, const Word& w)
{
  detail::check_word(w, h.domain_size(), "apply");
  Word out;
  for (auto x : w) {
    const auto& im = h.image(x);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

/// f o g: first g, then f.
inline Morphism compose(const Morphism& f, const Morphism& g)
{
  require_same_size(f.domain_size(), g.target_size(), "compose");
  std::vector<Word> im;
  im.reserve(g.domain_size());
  for (const auto& w : g.images()) im.push_back(apply(f, w));
  return Morphism(std::move(im), f.target_size());
}

inline bool is_solution(const Morphism& h, const Equation& e)
{
  require_same_size(h.domain_size(), e.n, "is_solution");
  return apply(h, e.left) == apply(h, e.right);
}

inline bool is_solution(const Morphism& h, const EqSystem& t)
{
  require_same_size(h.domain_size(), t.unknowns(), "is_solution");
  return std::all_of(t.begin(), t.end(), [&](const Equation& e) { return is_solution(h, e); });
}

inline GammaMatrix gamma_matrix(const Morphism& h)
{
  GammaMatrix g;
  g.unknowns = h.domain_size();
  g.rows.assign(h.target_size(), std::vector<std::uint64_t>(h.domain_size(), 0));
  for (std::size_t j = 0; j < h.domain_size(); ++j)
    for (auto a : h.image(static_cast<Letter>(j))) ++g.rows[a][j];
  return g;
}

/// Dimension of the span of the Parikh vectors over Q.
inline std::size_t rank(const Morphism& h) { return matrix_rank(gamma_matrix(h).to_integer()); }

inline bool linear_equivalent(const Morphism& h, const Morphism& g)
{
  require_same_size(h.domain_size(), g.domain_size(), "linear_equivalent");
  auto a = gamma_matrix(h).to_integer();
  auto b = gamma_matrix(g).to_integer();
  // Empty row sets (empty target alphabet) span the zero space.
  if (a.empty()) a.push_back(IntRow(h.domain_size(), 0));
  if (b.empty()) b.push_back(IntRow(g.domain_size(), 0));
  return same_row_space(a, b);
}

/// Normal vector of the hyperplane Gamma_h; requires rank(h) = n - 1.
inline LambdaVector gamma_normal(const Morphism& h)
{
  const std::size_t n = h.domain_size();
  if (n == 0) throw std::invalid_argument("gamma_normal: no unknowns");
  IntMatrix echelon = bareiss_echelon(gamma_matrix(h).to_integer());
  if (echelon.size() != n - 1)
    throw std::invalid_argument("gamma_normal: rank is " + std::to_string(echelon.size()) +
                                ", expected " + std::to_string(n - 1));
  IntRow v = cofactor_normal(echelon);
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  std::vector<std::int64_t> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer q = v[i] / g;
    if (abs(q) > Integer(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("gamma_normal: normal vector entry out of range");
    entries[i] = static_cast<std::int64_t>(q);
  }
  return LambdaVector(std::move(entries));
}

/// Letter-power endomorphism a_i -> a_i^{alpha_i} of a k-letter alphabet.
inline Morphism theta_alpha(std::span<const std::uint64_t> alpha, std::size_t k)
{
  require_same_size(alpha.size(), k, "theta_alpha");
  std::vector<Word> im(k);
  for (std::size_t i = 0; i < k; ++i) im[i].assign(alpha[i], static_cast<Letter>(i));
  return Morphism(std::move(im), k);
}

inline Morphism theta_alpha(const std::vector<std::uint64_t>& alpha)
{
  return theta_alpha(std::span<const std::uint64_t>(alpha), alpha.size());
}

/// Renames the letters of h to 0, 1, ... by first occurrence in h(x_1)h(x_2)...,
/// dropping letters that do not occur. Returns the renamed morphism and the
/// map new letter -> old letter.
inline std::pair<Morphism, std::vector<Letter>> canonical_renaming(const Morphism& h)
{
  std::map<Letter, Letter> to_new;
  std::vector<Letter> to_old;
  std::vector<Word> im;
  im.reserve(h.domain_size());
  for (const auto& w : h.images()) {
    Word r;
    r.reserve(w.size());
    for (auto a : w) {
      auto [it, fresh] = to_new.try_emplace(a, static_cast<Letter>(to_old.size()));
      if (fresh) to_old.push_back(a);
      r.push_back(it->second);
    }
    im.push_back(std::move(r));
  }
  return {Morphism(std::move(im), to_old.size()), std::move(to_old)};
}

/// Equal up to a bijective renaming of the letters that occur.
inline bool renaming_equivalent(const Morphism& h, const Morphism& g)
{
  if (h.domain_size() != g.domain_size()) return false;
  return canonical_renaming(h).first.images() == canonical_renaming(g).first.images();
}

} // namespace weq
