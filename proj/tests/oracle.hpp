#pragma once

// Reference arithmetic for the tests: a 128-bit fraction type and textbook
// Gauss-Jordan elimination, sharing no code with the library.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  i128 num = 0;
  i128 den = 1;

  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(i128 n, i128 d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool zero() const { return num == 0; }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }

  std::string str() const {
    auto s = [](i128 v) {
      if (v == 0) return std::string("0");
      const bool neg = v < 0;
      if (neg) v = -v;
      std::string out;
      while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      return neg ? "-" + out : out;
    };
    return den == 1 ? s(num) : s(num) + "/" + s(den);
  }
};

using Mat = std::vector<std::vector<Frac>>;

struct Reduced {
  Mat rows;                 // nonzero rows of the RREF
  std::vector<int> pivots;  // pivot column per row
};

/// Gauss-Jordan elimination, scanning columns left to right.
inline Reduced gauss_jordan(Mat m) {
  Reduced out;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Frac lead = m[r][c];
    for (auto& x : m[r]) x = x / lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].zero()) continue;
      const Frac f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<std::size_t>(r));
  out.rows = std::move(m);
  return out;
}

inline int rank(const Mat& m) { return static_cast<int>(gauss_jordan(m).pivots.size()); }

/// One vector per free column, in column order, with a 1 in that column.
inline std::vector<std::vector<Frac>> nullspace(const Mat& m, int cols) {
  const Reduced red = gauss_jordan(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Frac>> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Frac> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      v[static_cast<std::size_t>(red.pivots[i])] = Frac(0) - red.rows[i][static_cast<std::size_t>(f)];
    out.push_back(std::move(v));
  }
  return out;
}

/// Random integer matrix with entries in [-lo, lo]; about a third of the
/// entries are forced to zero so that rank deficiency is common.
inline Mat random_matrix(std::mt19937& rng, int rows, int cols, int lo) {
  std::uniform_int_distribution<int> entry(-lo, lo);
  std::uniform_int_distribution<int> sparsity(0, 2);
  Mat m(static_cast<std::size_t>(rows), std::vector<Frac>(static_cast<std::size_t>(cols)));
  for (auto& row : m)
    for (auto& x : row) x = sparsity(rng) == 0 ? Frac(0) : Frac(entry(rng));
  return m;
}

}  // namespace oracle
