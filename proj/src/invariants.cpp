#include "superalg/invariants.hpp"

#include "superalg/linalg.hpp"

#include <algorithm>

namespace superalg {

Subspace::Subspace(const SuperAlgebra& ambient, const std::vector<Element>& spanning) : ambient_(&ambient) {
  RatMatrix rows(static_cast<Index>(spanning.size()), ambient.dim());
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != ambient.dim()) throw DimensionMismatch("subspace vector has wrong length");
    rows.row(static_cast<Index>(i)) = spanning[i].transpose();
  }
  auto e = rref(rows);
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::whole(const SuperAlgebra& a) {
  std::vector<Element> b;
  for (Index i = 0; i < a.dim(); ++i) b.push_back(a.basis_vector(i));
  return Subspace(a, b);
}

Subspace Subspace::zero(const SuperAlgebra& a) { return Subspace(a, {}); }

Subspace Subspace::even_part(const SuperAlgebra& a) {
  std::vector<Element> b;
  for (Index i = 0; i < a.even_dim(); ++i) b.push_back(a.basis_vector(i));
  return Subspace(a, b);
}

Subspace Subspace::odd_part(const SuperAlgebra& a) {
  std::vector<Element> b;
  for (Index i = a.even_dim(); i < a.dim(); ++i) b.push_back(a.basis_vector(i));
  return Subspace(a, b);
}

std::vector<Element> Subspace::vectors() const {
  std::vector<Element> out;
  for (Index i = 0; i < dim(); ++i) out.push_back(basis_.row(i).transpose());
  return out;
}

bool Subspace::contains(const Element& v) const {
  // Reduce v against the echelon rows: pivot columns carry a 1 and zeros elsewhere.
  if (v.size() != ambient_->dim()) throw DimensionMismatch("subspace membership: wrong vector length");
  Element r = v;
  for (Index i = 0; i < dim(); ++i) {
    const Rational c = r(pivots_[static_cast<std::size_t>(i)]);
    if (!is_zero(c)) r -= c * basis_.row(i).transpose();
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("subspaces of different algebras");
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(Element(other.basis_.row(i).transpose()))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw AmbientMismatch("subspaces of different algebras");
  return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace product_space(const SuperAlgebra& a, const Subspace& s, const Subspace& t) {
  if (&s.ambient() != &a || &t.ambient() != &a) throw AmbientMismatch("product_space: subspace of another algebra");
  std::vector<Element> span;
  for (const auto& u : s.vectors())
    for (const auto& v : t.vectors()) {
      Element w = bracket(a, u, v);
      if (!is_zero(w)) span.push_back(std::move(w));
    }
  return Subspace(a, span);
}

std::vector<Subspace> series(const SuperAlgebra& a, SeriesKind which) {
  const Subspace whole = Subspace::whole(a);
  const Subspace even = Subspace::even_part(a);
  std::vector<Subspace> chain;
  switch (which) {
    case SeriesKind::descending_central:
    case SeriesKind::derived:
      chain.push_back(whole);
      break;
    case SeriesKind::graded_even:
      chain.push_back(even);
      break;
    case SeriesKind::graded_odd:
      chain.push_back(Subspace::odd_part(a));
      break;
  }
  for (Index step = 0; step <= a.dim(); ++step) {
    const Subspace& cur = chain.back();
    if (cur.dim() == 0) break;
    Subspace next = [&] {
      switch (which) {
        case SeriesKind::descending_central:
          return product_space(a, cur, whole);
        case SeriesKind::derived:
          return product_space(a, cur, cur);
        default:
          return a.kind() == Kind::lie_super ? product_space(a, even, cur) : product_space(a, cur, even);
      }
    }();
    if (next == cur) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Classification classify(const SuperAlgebra& a) {
  Classification c;
  c.is_nilpotent = series(a, SeriesKind::descending_central).back().dim() == 0;
  c.is_solvable = series(a, SeriesKind::derived).back().dim() == 0;
  if (c.is_nilpotent) {
    const auto even = series(a, SeriesKind::graded_even);
    const auto odd = series(a, SeriesKind::graded_odd);
    c.nilindex = SuperNilindex{static_cast<Index>(even.size()) - 1, static_cast<Index>(odd.size()) - 1};
  }
  return c;
}

Subspace right_annihilator(const SuperAlgebra& a) {
  const Index d = a.dim();
  RatMatrix stacked(d * d, d);
  for (Index i = 0; i < d; ++i) stacked.middleRows(i * d, d) = multiplication_matrix(a, a.basis_vector(i), Side::left);
  return Subspace(a, nullspace(stacked));
}

namespace {

void require_nilpotent(const SuperAlgebra& a) {
  if (series(a, SeriesKind::descending_central).back().dim() != 0)
    throw NotNilpotent("algebra is not nilpotent");
}

}  // namespace

CharacteristicSequence characteristic_sequence(const SuperAlgebra& a,
                                               const std::optional<std::vector<Element>>& candidates) {
  require_nilpotent(a);
  const Subspace even = Subspace::even_part(a);
  const Subspace derived_even = product_space(a, even, even);

  CharacteristicSequence out;
  std::vector<Element> pool;
  if (candidates) {
    for (const auto& x : *candidates) {
      if (x.size() != a.dim()) throw DimensionMismatch("candidate has wrong length");
      if (is_zero(x) || parity_of(a, x) != Parity::even) throw ParityViolation("candidate is not a nonzero even element");
      if (derived_even.contains(x)) throw InDerivedSubalgebra("candidate lies in [L0, L0]");
    }
    pool = *candidates;
  } else {
    out.lower_bound = true;
    std::vector<Element> generators;
    for (Index i = 0; i < a.even_dim(); ++i)
      if (!derived_even.contains(a.basis_vector(i))) generators.push_back(a.basis_vector(i));
    pool = generators;
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = i + 1; j < generators.size(); ++j) pool.push_back(generators[i] + generators[j]);
  }

  const Side side = a.kind() == Kind::lie_super ? Side::left : Side::right;
  const Index ne = a.even_dim(), no = a.odd_dim();
  for (const auto& x : pool) {
    const RatMatrix m = multiplication_matrix(a, x, side);
    const auto even_blocks = nilpotent_jordan_blocks(m.topLeftCorner(ne, ne));
    const auto odd_blocks = nilpotent_jordan_blocks(m.bottomRightCorner(no, no));
    if (!out.even_witness || out.even_part < even_blocks) {
      out.even_part = even_blocks;
      out.even_witness = x;
    }
    if (!out.odd_witness || out.odd_part < odd_blocks) {
      out.odd_part = odd_blocks;
      out.odd_witness = x;
    }
  }
  return out;
}

Index generator_count(const SuperAlgebra& a) {
  const auto lcs = series(a, SeriesKind::descending_central);
  if (lcs.back().dim() != 0) throw NotNilpotent("generator count needs a nilpotent algebra");
  return a.dim() - (lcs.size() > 1 ? lcs[1].dim() : 0);
}

}  // namespace superalg
