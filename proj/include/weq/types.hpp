#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weq {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial X^alpha, one entry per variable.
using Exponent = std::vector<std::uint32_t>;

/// |h(x_1)|, ..., |h(x_n)|.
using LengthType = std::vector<std::uint64_t>;

inline std::uint64_t degree(const Exponent& e)
{
  std::uint64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

inline bool divides(const Exponent& a, const Exponent& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what)
{
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

} // namespace weq
