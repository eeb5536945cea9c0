#include "superalg/derivations.hpp"

#include "superalg/linalg.hpp"

namespace superalg {

namespace {

bool allowed(const SuperAlgebra& a, Parity s, Index row, Index col) {
  return a.parity(row) == a.parity(col) + s;
}

/// Signs (left, right) in D[a,b] = l [Da,b] + r [a,Db].
std::pair<Rational, Rational> rule_signs(const SuperAlgebra& a, Parity s, Index i, Index j) {
  if (a.kind() == Kind::lie_super) return {Rational(1), super_sign(s, a.parity(i))};
  return {super_sign(s, a.parity(j)), Rational(1)};
}

}  // namespace

RatVector flatten(const RatMatrix& m) {
  RatVector v(m.size());
  Index k = 0;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(k++) = m(r, c);
  return v;
}

namespace {

RatMatrix unflatten(const RatVector& v, Index d) {
  RatMatrix m(d, d);
  Index k = 0;
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) m(r, c) = v(k++);
  return m;
}

}  // namespace

DerivationCheck is_superderivation(const SuperAlgebra& a, const SuperDerivation& d) {
  const Index n = a.dim();
  if (d.matrix.rows() != n || d.matrix.cols() != n) throw DimensionMismatch("derivation matrix has wrong shape");
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (!is_zero(d.matrix(r, c)) && !allowed(a, d.parity, r, c))
        throw BlockStructureError("entry (" + a.label(r) + "," + a.label(c) + ") breaks the " +
                                  std::string(to_string(d.parity)) + " block structure");
  DerivationCheck out;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto [ls, rs] = rule_signs(a, d.parity, i, j);
      const Element ei = a.basis_vector(i), ej = a.basis_vector(j);
      Element r = ls * bracket(a, d.matrix.col(i), ej) + rs * bracket(a, ei, d.matrix.col(j)) -
                  d.matrix * a.product_vector(i, j);
      if (!is_zero(r)) {
        out.ok = false;
        out.violations.push_back({i, j, std::move(r)});
      }
    }
  return out;
}

DerivationSpace derivation_space(const SuperAlgebra& a, Parity parity) {
  const Index n = a.dim();
  // unknown[r * n + c] = column of entry (r, c) in the system, or -1.
  std::vector<Index> unknown(static_cast<std::size_t>(n * n), -1);
  std::vector<std::pair<Index, Index>> entries;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (allowed(a, parity, r, c)) {
        unknown[static_cast<std::size_t>(r * n + c)] = static_cast<Index>(entries.size());
        entries.emplace_back(r, c);
      }
  const Index nu = static_cast<Index>(entries.size());
  auto col_of = [&](Index r, Index c) { return unknown[static_cast<std::size_t>(r * n + c)]; };

  std::vector<RatVector> rows;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto [ls, rs] = rule_signs(a, parity, i, j);
      std::vector<RatVector> eq(static_cast<std::size_t>(n), RatVector::Zero(nu));
      // D([e_i, e_j]) = sum_k c_k D(e_k): unknown (r, k) adds c_k to coordinate r.
      for (const auto& p : a.product(i, j))
        for (Index r = 0; r < n; ++r)
          if (Index u = col_of(r, p.index); u >= 0) eq[static_cast<std::size_t>(r)](u) += p.coeff;
      // - ls [D e_i, e_j]: unknown (r, i) contributes -ls [e_r, e_j].
      for (Index r = 0; r < n; ++r) {
        const Index u = col_of(r, i);
        if (u < 0) continue;
        for (const auto& p : a.product(r, j)) eq[static_cast<std::size_t>(p.index)](u) -= ls * p.coeff;
      }
      // - rs [e_i, D e_j]: unknown (r, j) contributes -rs [e_i, e_r].
      for (Index r = 0; r < n; ++r) {
        const Index u = col_of(r, j);
        if (u < 0) continue;
        for (const auto& p : a.product(i, r)) eq[static_cast<std::size_t>(p.index)](u) -= rs * p.coeff;
      }
      for (auto& row : eq)
        if (!is_zero(row)) rows.push_back(std::move(row));
    }

  RatMatrix system(static_cast<Index>(rows.size()), nu);
  for (std::size_t k = 0; k < rows.size(); ++k) system.row(static_cast<Index>(k)) = rows[k].transpose();

  DerivationSpace out;
  out.parity = parity;
  for (const auto& v : nullspace(system)) {
    SuperDerivation d{parity, RatMatrix::Zero(n, n)};
    for (Index u = 0; u < nu; ++u) d.matrix(entries[static_cast<std::size_t>(u)].first, entries[static_cast<std::size_t>(u)].second) = v(u);
    out.basis.push_back(std::move(d));
  }
  return out;
}

RatMatrix inner_operator(const SuperAlgebra& a, Index basis_index) {
  return multiplication_matrix(a, a.basis_vector(basis_index),
                               a.kind() == Kind::lie_super ? Side::left : Side::right);
}

DerivationSpace inner_space(const SuperAlgebra& a, Parity parity) {
  const Index n = a.dim();
  std::vector<Index> members;
  for (Index i = 0; i < n; ++i)
    if (a.parity(i) == parity) members.push_back(i);
  RatMatrix ops(static_cast<Index>(members.size()), n * n);
  for (std::size_t k = 0; k < members.size(); ++k) ops.row(static_cast<Index>(k)) = flatten(inner_operator(a, members[k])).transpose();
  const auto e = rref(ops);
  DerivationSpace out;
  out.parity = parity;
  for (Index r = 0; r < e.rank(); ++r) out.basis.push_back({parity, unflatten(e.reduced.row(r).transpose(), n)});
  return out;
}

SuperDerivation super_commutator(const SuperDerivation& d1, const SuperDerivation& d2) {
  return {d1.parity + d2.parity, RatMatrix(d1.matrix * d2.matrix - super_sign(d1.parity, d2.parity) * d2.matrix * d1.matrix)};
}

namespace {

InnerExpression express(const SuperAlgebra& a, const DerivationSpace& der, Index& inner_rank, bool& all_inner) {
  InnerExpression ex;
  std::vector<RatVector> ops;
  for (Index i = 0; i < a.dim(); ++i)
    if (a.parity(i) == der.parity) {
      ex.operators.push_back(a.label(i));
      ops.push_back(flatten(inner_operator(a, i)));
    }
  RatMatrix stacked(static_cast<Index>(ops.size()), a.dim() * a.dim());
  for (std::size_t k = 0; k < ops.size(); ++k) stacked.row(static_cast<Index>(k)) = ops[k].transpose();
  inner_rank = rank(stacked);
  for (const auto& d : der.basis) {
    auto coeffs = span_contains(ops, flatten(d.matrix));
    if (!coeffs) all_inner = false;
    ex.coefficients.push_back(std::move(coeffs));
  }
  return ex;
}

}  // namespace

InnernessReport innerness_report(const SuperAlgebra& a) {
  InnernessReport r;
  r.der_even = derivation_space(a, Parity::even);
  r.der_odd = derivation_space(a, Parity::odd);
  r.all_inner = true;
  r.expression_even = express(a, r.der_even, r.dim_inner_even, r.all_inner);
  r.expression_odd = express(a, r.der_odd, r.dim_inner_odd, r.all_inner);
  r.dim_der_even = r.der_even.dim();
  r.dim_der_odd = r.der_odd.dim();
  r.outer_even = r.dim_der_even - r.dim_inner_even;
  r.outer_odd = r.dim_der_odd - r.dim_inner_odd;
  return r;
}

}  // namespace superalg
