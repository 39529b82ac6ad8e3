#pragma once

#include <string_view>

#include "weq/weq.hpp"

namespace testing_helpers {

inline weq::Equation eq(std::string_view s, std::size_t n = 0) { return weq::parse_equation(s, n); }
inline weq::EqSystem sys(std::string_view s, std::size_t n = 0) { return weq::parse_system(s, n); }
inline weq::Morphism morph(std::string_view s, std::size_t n = 0, std::size_t k = 0)
{
  return weq::parse_morphism(s, n, k);
}
inline weq::MultiPoly poly(std::string_view s, std::size_t n = 0) { return weq::parse_poly(s, n); }

} // namespace testing_helpers
