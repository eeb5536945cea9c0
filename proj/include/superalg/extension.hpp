#pragma once

#include "superalg/families.hpp"
#include "superalg/invariants.hpp"

#include <string>
#include <vector>

namespace superalg {

/// Action of one torus element t on the nilradical: left(:, j) = [t, e_j],
/// right(:, j) = [e_j, t].
struct TorusAction {
  std::string label;
  RatMatrix left;
  RatMatrix right;
};

/// Data of a solvable extension t + n. Torus labels are even and are placed
/// after the even nilradical labels.
struct ExtensionSpec {
  SuperAlgebra nilradical;
  std::vector<TorusAction> torus;
  /// Products among torus elements; empty means [t, t'] = 0.
  std::vector<BracketEntry> torus_brackets;
};

/// Lie spec from left actions; the right actions are set to -left.
ExtensionSpec lie_extension_spec(SuperAlgebra nilradical, const std::vector<std::string>& labels,
                                 const std::vector<RatMatrix>& left_actions);

class IdentityViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Throws InvalidSpec for malformed actions (shape, parity blocks, right != -left
/// for Lie specs, label clashes) and IdentityViolation when the resulting law
/// fails validation. Only validated algebras are returned.
SuperAlgebra semidirect_extension(const ExtensionSpec& spec);

/// True iff the diagonals of the (diagonal) left actions are linearly
/// independent. Throws NonDiagonalAction otherwise.
bool nil_independence_check(const ExtensionSpec& spec);

struct NilradicalVerdict {
  bool is_ideal = false;
  bool is_nilpotent = false;
  bool complement_acts_non_nilpotently = false;
  bool contains_derived = false;
  bool verdict = false;
  Index codimension = 0;
  /// Complement basis labels whose operator restricted to the candidate is nilpotent.
  std::vector<std::string> nilpotent_directions;
};

/// Checks that `candidate` is a nilpotent two-sided ideal containing [A, A]
/// on which every complement basis vector acts non-nilpotently (ad for
/// lie_super, R for leibniz_super).
NilradicalVerdict nilradical_verdict(const SuperAlgebra& a, const Subspace& candidate);

/// The span of the given labels.
Subspace span_of_labels(const SuperAlgebra& a, const std::vector<std::string>& labels);

/// The diagonal torus that turns the nilradical of a solvable family into the
/// family itself (SL, SN, SLP or SNP).
ExtensionSpec standard_torus_spec(Family solvable_family, std::span<const Index> even, std::span<const Index> odd);

/// Leibniz template over NP(even | odd): the torus t1, t_{j+2}, t'_{j+1} acts
/// on the right as in SNP, while the left actions are
///   [t1, x1] = (b1 - 1) x1,  [t_{j+2}, x] = (b_{j+2} - 1) x on even block j,
///   [t'_{j+1}, y] = (b'_{j+1} - 1) y on odd block j.
/// `b` holds b1..b_{k+1} and `b_prime` holds b'_1..b'_p. With `filiform` the
/// nilradical is LP^{n,m} (even = {n}, odd = {m}) and the labels are t1, t2, t3.
ExtensionSpec leibniz_torus_template(std::span<const Index> even, std::span<const Index> odd,
                                     const std::vector<Rational>& b, const std::vector<Rational>& b_prime,
                                     bool filiform);

/// Parameter vectors (b followed by b') in {0,1}^(k+1+p) for which
/// leibniz_torus_template yields a valid extension, in lexicographic order.
std::vector<std::vector<int>> sweep_leibniz_template(std::span<const Index> even, std::span<const Index> odd,
                                                     bool filiform);

}  // namespace superalg
