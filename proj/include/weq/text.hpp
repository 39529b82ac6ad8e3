#pragma once

// Text formats: equations `xyxz = zxyx`, morphism bindings `x = ab`, and
// canonical polynomial rendering `X^4*Y - X^3*Y - X^2*Z + X*Z`.
//
// Unknowns are named x, y, z, x₄, x₅, ... (also accepted: x1.., x_4);
// polynomial variables X, Y, Z, X₄, ... in the same way. Target letters are
// a..z by alphabetical index, `eps` (or ε) is the empty word.

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weq/lambda.hpp"
#include "weq/poly.hpp"
#include "weq/words.hpp"

namespace weq {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string subscript(std::size_t v)
{
  std::string digits = std::to_string(v);
  std::string out;
  for (char d : digits) {
    out += '\xE2';
    out += '\x82';
    out += static_cast<char>(0x80 + (d - '0'));
  }
  return out;
}

inline std::string indexed_name(char base, std::size_t index)
{
  static constexpr char small[] = {'x', 'y', 'z'};
  if (index < 3) {
    char c = small[index];
    return std::string(1, std::isupper(static_cast<unsigned char>(base)) ? static_cast<char>(std::toupper(c)) : c);
  }
  return std::string(1, base) + subscript(index + 1);
}

inline bool is_subscript_at(std::string_view s, std::size_t p)
{
  return p + 2 < s.size() + 0 && static_cast<unsigned char>(s[p]) == 0xE2 &&
         static_cast<unsigned char>(s[p + 1]) == 0x82 && static_cast<unsigned char>(s[p + 2]) >= 0x80 &&
         static_cast<unsigned char>(s[p + 2]) <= 0x89;
}

inline bool is_epsilon_at(std::string_view s, std::size_t p, std::size_t* len)
{
  if (s.substr(p, 3) == "eps") {
    *len = 3;
    return true;
  }
  if (s.substr(p, 2) == "\xCE\xB5") { // ε
    *len = 2;
    return true;
  }
  return false;
}

// Reads an indexed variable name (x/y/z family, case given by `base`) at s[p].
// Returns the 0-based index and advances p.
inline std::optional<std::size_t> read_variable(std::string_view s, std::size_t& p, char base)
{
  const bool upper = std::isupper(static_cast<unsigned char>(base));
  auto lower = [&](char c) { return upper ? static_cast<char>(std::toupper(c)) : c; };
  if (p >= s.size()) return std::nullopt;
  const char c = s[p];
  if (c == lower('y')) {
    ++p;
    return 1;
  }
  if (c == lower('z')) {
    ++p;
    return 2;
  }
  if (c != base) return std::nullopt;
  std::size_t q = p + 1;
  std::size_t value = 0;
  bool has_index = false;
  if (q < s.size() && s[q] == '_') ++q;
  if (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) value = value * 10 + (s[q++] - '0');
    has_index = true;
  }
  else if (is_subscript_at(s, q)) {
    while (is_subscript_at(s, q)) {
      value = value * 10 + (static_cast<unsigned char>(s[q + 2]) - 0x80);
      q += 3;
    }
    has_index = true;
  }
  else if (q != p + 1) {
    throw ParseError("expected an index after '" + std::string(1, base) + "_'");
  }
  if (has_index && value == 0) throw ParseError("variable indices start at 1");
  p = q;
  return has_index ? value - 1 : 0;
}

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits into records on newlines and ';', dropping `#` comments and blanks.
inline std::vector<std::string> split_records(std::string_view text)
{
  std::vector<std::string> out;
  std::string cur;
  bool comment = false;
  auto flush = [&] {
    auto t = trim(cur);
    if (!t.empty()) out.emplace_back(t);
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      flush();
    }
    else if (comment) {
      continue;
    }
    else if (c == '#') {
      comment = true;
    }
    else if (c == ';') {
      flush();
    }
    else {
      cur += c;
    }
  }
  flush();
  return out;
}

} // namespace detail

inline std::string unknown_name(std::size_t i) { return detail::indexed_name('x', i); }
inline std::string variable_name(std::size_t i) { return detail::indexed_name('X', i); }

/// Lowercase a..z for small indices; uppercase for the letters of principal solutions.
inline std::string letter_name(Letter a, bool upper = false)
{
  if (a < 26) return std::string(1, static_cast<char>((upper ? 'A' : 'a') + a));
  return std::string(upper ? "A" : "a") + detail::subscript(a + 1);
}

inline std::string render_unknowns(const Word& w)
{
  if (w.empty()) return "ε";
  std::string s;
  for (auto x : w) s += unknown_name(x);
  return s;
}

inline std::string render_word(const Word& w, bool upper = false)
{
  if (w.empty()) return "eps";
  std::string s;
  for (auto a : w) s += letter_name(a, upper);
  return s;
}

inline std::string render(const Equation& e)
{
  return render_unknowns(e.left) + " = " + render_unknowns(e.right);
}

inline std::string render(const Morphism& h, bool upper = false)
{
  std::string s;
  for (std::size_t i = 0; i < h.domain_size(); ++i) {
    if (i) s += '\n';
    s += unknown_name(i) + " = " + render_word(h.image(static_cast<Letter>(i)), upper);
  }
  return s;
}

/// Compact one-line form `x↦ab, y↦ba`.
inline std::string render_inline(const Morphism& h, bool upper = false, bool letter_domain = false)
{
  std::string s;
  for (std::size_t i = 0; i < h.domain_size(); ++i) {
    if (i) s += ", ";
    s += letter_domain ? letter_name(static_cast<Letter>(i), true) : unknown_name(i);
    s += "↦" + render_word(h.image(static_cast<Letter>(i)), upper);
  }
  return s;
}

inline std::string render_monomial(const Exponent& e)
{
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variable_name(i);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

/// Like render_monomial, but the empty monomial is "1".
inline std::string render_monomial_or_one(const Exponent& e)
{
  std::string s = render_monomial(e);
  return s.empty() ? "1" : s;
}

/// Canonical rendering, terms in decreasing graded lexicographic order.
inline std::string render(const MultiPoly& p)
{
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    const std::string m = render_monomial(e);
    if (m.empty())
      s += a.str();
    else if (a == 1)
      s += m;
    else
      s += a.str() + '*' + m;
  }
  return s;
}

/// Ascending powers of x, e.g. `1 + 2*x + x^2`.
inline std::string render(const UniPoly& p)
{
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string m = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (m.empty())
      s += a.str();
    else if (a == 1)
      s += m;
    else
      s += a.str() + '*' + m;
  }
  return s;
}

inline std::string render(const LambdaVector& l)
{
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(l[i]);
  }
  return s + ")";
}

inline std::string render_exponent(const Exponent& e)
{
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

/// Length constraint lambda . L(h) = 0 written with nonnegative coefficients,
/// e.g. (2,1,-1) -> `2|h(x)|+|h(y)|=|h(z)|`.
inline std::string length_constraint(const LambdaVector& l)
{
  auto side = [&](int sign) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::int64_t v = sign * l[i];
      if (v <= 0) continue;
      if (!s.empty()) s += '+';
      if (v > 1) s += std::to_string(v);
      s += "|h(" + unknown_name(i) + ")|";
    }
    return s.empty() ? std::string("0") : s;
  };
  return side(1) + "=" + side(-1);
}

// ---------------------------------------------------------------------------
// Parsing

/// Parses a side of an equation; returns the unknowns and raises `max_index`.
inline Word parse_unknowns(std::string_view s, std::size_t& max_index)
{
  Word w;
  s = detail::trim(s);
  std::size_t eps_len = 0;
  if (detail::is_epsilon_at(s, 0, &eps_len) && detail::trim(s.substr(eps_len)).empty()) return w;
  std::size_t p = 0;
  while (p < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[p]))) {
      ++p;
      continue;
    }
    auto v = detail::read_variable(s, p, 'x');
    if (!v) throw ParseError("unexpected character '" + std::string(1, s[p]) + "' in equation side \"" + std::string(s) + "\"");
    w.push_back(static_cast<Letter>(*v));
    max_index = std::max(max_index, *v + 1);
  }
  return w;
}

/// Equations `u = v`, one per record. The number of unknowns is the largest
/// index used, or `min_unknowns` if larger.
inline EqSystem parse_system(std::string_view text, std::size_t min_unknowns = 0)
{
  std::vector<std::pair<Word, Word>> sides;
  std::size_t n = min_unknowns;
  for (const auto& rec : detail::split_records(text)) {
    auto eq = rec.find('=');
    if (eq == std::string::npos || rec.find('=', eq + 1) != std::string::npos)
      throw ParseError("expected exactly one '=' in \"" + rec + "\"");
    Word l = parse_unknowns(std::string_view(rec).substr(0, eq), n);
    Word r = parse_unknowns(std::string_view(rec).substr(eq + 1), n);
    sides.emplace_back(std::move(l), std::move(r));
  }
  if (sides.empty()) throw ParseError("no equations given");
  std::vector<Equation> eqs;
  for (auto& [l, r] : sides) eqs.emplace_back(std::move(l), std::move(r), n);
  return EqSystem(std::move(eqs));
}

inline Equation parse_equation(std::string_view text, std::size_t min_unknowns = 0)
{
  EqSystem t = parse_system(text, min_unknowns);
  if (t.size() != 1) throw ParseError("expected a single equation");
  return t[0];
}

/// Bindings `x = ab`, one per record. Every unknown up to the largest bound
/// one must be bound. The target alphabet is a..(largest letter used), or
/// `min_target` letters if larger.
inline Morphism parse_morphism(std::string_view text, std::size_t min_unknowns = 0, std::size_t min_target = 0)
{
  std::vector<std::optional<Word>> images;
  std::size_t target = min_target;
  for (const auto& rec : detail::split_records(text)) {
    auto eq = rec.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'x = word' in \"" + rec + "\"");
    std::string_view name = detail::trim(std::string_view(rec).substr(0, eq));
    std::size_t p = 0;
    auto idx = detail::read_variable(name, p, 'x');
    if (!idx || p != name.size()) throw ParseError("bad unknown name \"" + std::string(name) + "\"");
    std::string_view img = detail::trim(std::string_view(rec).substr(eq + 1));
    Word w;
    std::size_t eps_len = 0;
    if (!(detail::is_epsilon_at(img, 0, &eps_len) && eps_len == img.size())) {
      for (char c : img) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < 'a' || c > 'z') throw ParseError("bad letter '" + std::string(1, c) + "' in image \"" + std::string(img) + "\"");
        w.push_back(static_cast<Letter>(c - 'a'));
        target = std::max<std::size_t>(target, static_cast<std::size_t>(c - 'a') + 1);
      }
    }
    if (images.size() <= *idx) images.resize(*idx + 1);
    if (images[*idx]) throw ParseError("unknown " + unknown_name(*idx) + " bound twice");
    images[*idx] = std::move(w);
  }
  if (images.size() < min_unknowns) images.resize(min_unknowns);
  std::vector<Word> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("unknown " + unknown_name(i) + " has no binding");
    out.push_back(std::move(*images[i]));
  }
  return Morphism(std::move(out), target);
}

/// Parses `3*X^2*Y - Z + 1` style input. The variable count is the largest
/// index used, or `min_vars` if larger.
inline MultiPoly parse_poly(std::string_view text, std::size_t min_vars = 0)
{
  struct Term {
    Integer coef;
    std::vector<std::pair<std::size_t, std::uint32_t>> powers;
  };
  std::vector<Term> terms;
  std::size_t n = min_vars;
  std::string_view s = text;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  auto read_uint = [&](std::string& digits) {
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) digits += s[p++];
  };
  skip();
  if (p == s.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (p == s.size()) break;
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
      skip();
    }
    else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(p));
    }
    first = false;
    Term t{Integer(sign), {}};
    bool any = false;
    while (true) {
      skip();
      if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
        std::string digits;
        read_uint(digits);
        t.coef *= Integer(digits);
        any = true;
      }
      else {
        auto v = detail::read_variable(s, p, 'X');
        if (!v) break;
        std::uint32_t e = 1;
        skip();
        if (p < s.size() && s[p] == '^') {
          ++p;
          skip();
          std::string digits;
          read_uint(digits);
          if (digits.empty()) throw ParseError("expected exponent after '^'");
          e = static_cast<std::uint32_t>(std::stoul(digits));
        }
        t.powers.emplace_back(*v, e);
        n = std::max(n, *v + 1);
        any = true;
      }
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        continue;
      }
      // Juxtaposition `XYZ` is accepted as a product.
      if (p < s.size() && (s[p] == 'X' || s[p] == 'Y' || s[p] == 'Z')) continue;
      break;
    }
    if (!any) throw ParseError("expected a term at offset " + std::to_string(p));
    terms.push_back(std::move(t));
  }
  MultiPoly out(n);
  for (const auto& t : terms) {
    Exponent e(n, 0);
    for (auto [v, k] : t.powers) e[v] += k;
    out.add_term(e, t.coef);
  }
  return out;
}

} // namespace weq
