#pragma once

#include "superalg/algebra.hpp"

#include <optional>
#include <vector>

namespace superalg {

/// Parity-homogeneous endomorphism; column j is the image of basis vector j.
struct SuperDerivation {
  Parity parity = Parity::even;
  RatMatrix matrix;
};

struct DerivationSpace {
  Parity parity = Parity::even;
  std::vector<SuperDerivation> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }
};

struct DerivationCheck {
  bool ok = true;
  std::vector<PairIssue> violations;
};

/// Checks the kind's product rule on every ordered basis pair:
///   lie_super:     D[a,b] = [Da,b] + (-1)^(|D||a|) [a,Db]
///   leibniz_super: D[a,b] = (-1)^(|D||b|) [Da,b] + [a,Db]
/// A violation's residual is the right-hand side minus D[a,b]. Throws
/// BlockStructureError when the matrix does not have the parity's block shape.
DerivationCheck is_superderivation(const SuperAlgebra& a, const SuperDerivation& d);

/// Solution space of the product rule for endomorphisms of the given parity.
/// Unknowns are the allowed matrix entries in row-major order; equations are
/// ordered by basis pair (i, j) and then output coordinate. The basis is the
/// canonical nullspace of that system.
DerivationSpace derivation_space(const SuperAlgebra& a, Parity parity);

/// Multiplication operator that serves as inner superderivation: ad_x for
/// lie_super, R_x for leibniz_super.
RatMatrix inner_operator(const SuperAlgebra& a, Index basis_index);

/// Span of the inner operators of all basis vectors of the given parity, in
/// canonical (row-reduced) form.
DerivationSpace inner_space(const SuperAlgebra& a, Parity parity);

/// Super-commutator D1 D2 - (-1)^(|D1||D2|) D2 D1.
SuperDerivation super_commutator(const SuperDerivation& d1, const SuperDerivation& d2);

struct InnerExpression {
  /// Labels of the basis vectors whose operators are used, in basis order.
  std::vector<std::string> operators;
  /// One entry per derivation basis member; nullopt when it is outer.
  std::vector<std::optional<RatVector>> coefficients;
};

struct InnernessReport {
  Index dim_der_even = 0;
  Index dim_der_odd = 0;
  Index dim_inner_even = 0;
  Index dim_inner_odd = 0;
  Index outer_even = 0;
  Index outer_odd = 0;
  bool all_inner = false;
  DerivationSpace der_even, der_odd;
  InnerExpression expression_even, expression_odd;
};

InnernessReport innerness_report(const SuperAlgebra& a);

/// Row-major flattening used for span tests between operators.
RatVector flatten(const RatMatrix& m);

}  // namespace superalg
