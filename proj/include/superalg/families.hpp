#pragma once

// Constructors for the model filiform / model nilpotent Lie and Leibniz
// superalgebras and their maximal solvable extensions.
//
// Block data follows the usual characteristic-sequence notation:
// (n_1, ..., n_k, 1 | m_1, ..., m_p) is passed as even_blocks = {n_1..n_k}
// and odd_blocks = {m_1..m_p}; the trailing 1 (the generator x1) is implicit.
// Labels: x1..xN, then torus t1.. and tp1.. (t'), odd y1..yM. The filiform
// families SL / SLP keep the three torus labels t1, t2, t3.

#include "superalg/algebra.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace superalg {

enum class Family { L, SL, N, SN, LP, SLP, NP, SNP };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);
bool is_solvable_family(Family f);
Kind family_kind(Family f);
/// The nilpotent family a solvable family extends (SL -> L, ...); identity on nilpotent ones.
Family nilradical_family(Family f);

/// L^{n,m} (solvable = false) or SL^{n,m}. Requires n >= 3, m >= 2.
SuperAlgebra model_filiform_lie(Index n, Index m, bool solvable);

/// N(n_1..n_k, 1 | m_1..m_p) or SN(...). Requires k, p >= 1 and positive blocks.
SuperAlgebra model_nilpotent_lie(std::span<const Index> even_blocks, std::span<const Index> odd_blocks,
                                 bool solvable);

/// LP^{n,m} or SLP^{n,m}. Requires n >= 3, m >= 2.
SuperAlgebra filiform_leibniz(Index n, Index m, bool solvable);

/// NP(...) or SNP(...).
SuperAlgebra model_nilpotent_leibniz(std::span<const Index> even_blocks, std::span<const Index> odd_blocks,
                                     bool solvable);

/// Dispatch used by the CLI. Filiform families take one even and one odd
/// value (n and m); model-nilpotent families take the block lists.
SuperAlgebra make_family(Family f, std::span<const Index> even, std::span<const Index> odd);

struct Presentation {
  SuperAlgebra algebra;
  /// Images of the canonical family's labels, written in the z-basis.
  BasisChange to_canonical;
};

/// The z-basis law of SL (family = SL, even = {n}, odd = {m}) or of SN, and
/// the map t1 = z1 + 2 z2 + ..., t_i = z_i, t'_i = z'_i that carries it to
/// the canonical family.
Presentation z_basis_presentation(Family family, std::span<const Index> even, std::span<const Index> odd);

/// Labels of the torus added by a solvable family, in basis order.
std::vector<std::string> torus_labels(Family f, std::span<const Index> even, std::span<const Index> odd);

}  // namespace superalg
