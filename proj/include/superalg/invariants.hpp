#pragma once

#include "superalg/algebra.hpp"

#include <optional>
#include <vector>

namespace superalg {

/// Subspace of an algebra, stored as the reduced row echelon basis of its
/// span so equal subspaces compare equal entrywise. Holds a non-owning
/// pointer to the ambient algebra, which must outlive it.
class Subspace {
 public:
  Subspace(const SuperAlgebra& ambient, const std::vector<Element>& spanning);

  static Subspace whole(const SuperAlgebra& a);
  static Subspace zero(const SuperAlgebra& a);
  static Subspace even_part(const SuperAlgebra& a);
  static Subspace odd_part(const SuperAlgebra& a);

  const SuperAlgebra& ambient() const { return *ambient_; }
  Index dim() const { return basis_.rows(); }
  /// One basis vector per row.
  const RatMatrix& basis() const { return basis_; }
  std::vector<Element> vectors() const;
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  const SuperAlgebra* ambient_;
  RatMatrix basis_;
  std::vector<Index> pivots_;
};

/// span{[s, t] : s in basis(S), t in basis(T)}
Subspace product_space(const SuperAlgebra& a, const Subspace& s, const Subspace& t);

enum class SeriesKind { descending_central, derived, graded_even, graded_odd };

/// C^0 > C^1 > ... until stabilisation. The returned chain is strictly
/// decreasing; the stable term appears once.
std::vector<Subspace> series(const SuperAlgebra& a, SeriesKind which);

struct SuperNilindex {
  Index p;
  Index q;
};

struct Classification {
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<SuperNilindex> nilindex;
};

Classification classify(const SuperAlgebra& a);

/// {x : [L, x] = 0}
Subspace right_annihilator(const SuperAlgebra& a);

struct CharacteristicSequence {
  std::vector<Index> even_part;
  std::vector<Index> odd_part;
  std::optional<Element> even_witness;
  std::optional<Element> odd_witness;
  /// True when the default candidate set was used: the result is then only a
  /// lexicographic lower bound of the true invariant.
  bool lower_bound = false;
};

/// Lexicographic maxima of the Jordan profiles of ad_x (lie_super) or R_x
/// (leibniz_super) on the even and on the odd part, over even candidates x
/// outside [L0, L0]. The two maxima are taken independently.
CharacteristicSequence characteristic_sequence(const SuperAlgebra& a,
                                               const std::optional<std::vector<Element>>& candidates = std::nullopt);

/// dim(A) - dim(C^1(A)), the minimal number of generators of a nilpotent algebra.
Index generator_count(const SuperAlgebra& a);

}  // namespace superalg
