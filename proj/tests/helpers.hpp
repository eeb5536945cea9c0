#pragma once

#include "superalg/algebra.hpp"

#include <initializer_list>
#include <string>

namespace test_support {

using superalg::Element;
using superalg::RatMatrix;
using superalg::Rational;

inline RatMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<superalg::Index>(rows.size());
  const auto c = r ? static_cast<superalg::Index>(rows.begin()->size()) : 0;
  RatMatrix m(r, c);
  superalg::Index i = 0;
  for (const auto& row : rows) {
    superalg::Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline superalg::RatVector vec(std::initializer_list<long> values) {
  superalg::RatVector v(static_cast<superalg::Index>(values.size()));
  superalg::Index i = 0;
  for (long x : values) v(i++) = Rational(x);
  return v;
}

inline Element el(const superalg::SuperAlgebra& a, const std::string& text) {
  return superalg::parse_element(a, text);
}

}  // namespace test_support
