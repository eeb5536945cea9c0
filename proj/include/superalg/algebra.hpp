#pragma once

#include "superalg/errors.hpp"
#include "superalg/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superalg {

enum class Parity { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<int>(a) == static_cast<int>(b) ? Parity::even : Parity::odd;
}

/// (-1)^(|a||b|)
inline Rational super_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? Rational(-1) : Rational(1);
}

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

enum class Kind { lie_super, leibniz_super };

std::string_view to_string(Kind k);
Kind parse_kind(std::string_view text);

enum class Side { left, right };

/// Coordinates over the combined basis (even labels first, then odd).
using Element = RatVector;

struct Term {
  std::string label;
  Rational coeff;
};
using LinearCombination = std::vector<Term>;

struct BracketEntry {
  std::string left;
  std::string right;
  LinearCombination result;
};

/// Finite-dimensional Z2-graded algebra given by structure constants.
/// Construction only checks the labels; grading and the kind identity are
/// checked by validate().
class SuperAlgebra {
 public:
  struct Product {
    Index index;
    Rational coeff;
  };

  SuperAlgebra(Kind kind, std::vector<std::string> even_labels, std::vector<std::string> odd_labels,
               const std::vector<BracketEntry>& table, std::string name = {});

  /// For lie_super: completes each [a,b] whose mirror [b,a] is missing by super
  /// skew-symmetry. A pair given both ways inconsistently throws ValidationError.
  static SuperAlgebra with_skew_completion(Kind kind, std::vector<std::string> even_labels,
                                           std::vector<std::string> odd_labels,
                                           std::vector<BracketEntry> table, std::string name = {});

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Index dim() const { return static_cast<Index>(labels_.size()); }
  Index even_dim() const { return static_cast<Index>(even_.size()); }
  Index odd_dim() const { return static_cast<Index>(odd_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& even_labels() const { return even_; }
  const std::vector<std::string>& odd_labels() const { return odd_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }

  Parity parity(Index i) const { return i < even_dim() ? Parity::even : Parity::odd; }
  bool has_label(std::string_view label) const;
  Index index_of(std::string_view label) const;

  /// Nonzero part of [e_i, e_j].
  const std::vector<Product>& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  Element product_vector(Index i, Index j) const;

  Element zero() const { return Element::Zero(dim()); }
  Element basis_vector(Index i) const;
  Element basis_vector(std::string_view label) const { return basis_vector(index_of(label)); }
  Element element(const LinearCombination& terms) const;
  LinearCombination terms(const Element& v) const;

  /// Every nonzero [e_i, e_j] in (i, j) lexicographic order.
  std::vector<BracketEntry> table_entries() const;

 private:
  Kind kind_;
  std::string name_;
  std::vector<std::string> even_, odd_, labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Product>> table_;
};

/// Bilinear extension of the bracket table.
Element bracket(const SuperAlgebra& a, const Element& u, const Element& v);

/// Parity of a homogeneous element; nullopt when it has both components.
/// The zero element reports even.
std::optional<Parity> parity_of(const SuperAlgebra& a, const Element& v);

/// Matrix of y -> [x, y] (left) or y -> [y, x] (right) in the combined basis.
RatMatrix multiplication_matrix(const SuperAlgebra& a, const Element& x, Side side);

struct PairIssue {
  Index left;
  Index right;
  Element residual;
};

struct TripleIssue {
  Index x, y, z;
  Element residual;
};

struct ValidationReport {
  std::vector<PairIssue> grading;
  std::vector<PairIssue> skew;
  std::vector<TripleIssue> identity;

  bool ok() const { return grading.empty() && skew.empty() && identity.empty(); }
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : Error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks grading, and over all ordered basis triples the identity of
/// `identity` (default: the algebra's own kind). lie_super also checks super
/// skew-symmetry on all basis pairs.
ValidationReport validate(const SuperAlgebra& a, std::optional<Kind> identity = std::nullopt);

/// Parity-preserving change of basis. `even` / `odd` list the new labels and
/// their images P(label) written in the old basis. The result carries the law
/// P^-1 [P u, P v].
struct BasisChange {
  std::vector<std::pair<std::string, LinearCombination>> even;
  std::vector<std::pair<std::string, LinearCombination>> odd;
};

SuperAlgebra change_of_basis(const SuperAlgebra& a, const BasisChange& map);

/// True iff both algebras have identical bracket tables. Throws BasisMismatch
/// when kinds or label lists differ.
bool equal_laws(const SuperAlgebra& a, const SuperAlgebra& b);

/// Parses "x1", "2*x1 - 1/2*y3 + x2".
Element parse_element(const SuperAlgebra& a, std::string_view text);
LinearCombination parse_linear_combination(std::string_view text);

std::string format_element(const SuperAlgebra& a, const Element& v);

}  // namespace superalg
