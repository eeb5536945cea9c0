#include "superalg/extension.hpp"

#include "superalg/linalg.hpp"

#include <set>

namespace superalg {

ExtensionSpec lie_extension_spec(SuperAlgebra nilradical, const std::vector<std::string>& labels,
                                 const std::vector<RatMatrix>& left_actions) {
  if (labels.size() != left_actions.size()) throw InvalidSpec("one left action per torus label is required");
  ExtensionSpec spec{std::move(nilradical), {}, {}};
  for (std::size_t i = 0; i < labels.size(); ++i)
    spec.torus.push_back({labels[i], left_actions[i], RatMatrix(-left_actions[i])});
  return spec;
}

namespace {

void check_action(const SuperAlgebra& n, const std::string& label, const RatMatrix& m, const char* side) {
  if (m.rows() != n.dim() || m.cols() != n.dim())
    throw InvalidSpec(std::string(side) + " action of " + label + " has the wrong shape");
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c)) && n.parity(r) != n.parity(c))
        throw InvalidSpec(std::string(side) + " action of " + label + " does not preserve parity");
}

void check_spec(const ExtensionSpec& spec) {
  const SuperAlgebra& n = spec.nilradical;
  std::set<std::string> seen;
  for (const auto& t : spec.torus) {
    if (n.has_label(t.label) || !seen.insert(t.label).second)
      throw InvalidSpec("torus label '" + t.label + "' is not fresh");
    check_action(n, t.label, t.left, "left");
    check_action(n, t.label, t.right, "right");
    if (n.kind() == Kind::lie_super && t.right != RatMatrix(-t.left))
      throw InvalidSpec("lie_super spec needs right = -left for " + t.label);
  }
  for (const auto& e : spec.torus_brackets)
    if (!seen.count(e.left) || !seen.count(e.right))
      throw InvalidSpec("torus bracket [" + e.left + ", " + e.right + "] involves a non-torus label");
}

void push_column(std::vector<BracketEntry>& table, const SuperAlgebra& n, const RatMatrix& m, Index j,
                 const std::string& left, const std::string& right) {
  LinearCombination lc = n.terms(m.col(j));
  if (!lc.empty()) table.push_back({left, right, std::move(lc)});
}

}  // namespace

SuperAlgebra semidirect_extension(const ExtensionSpec& spec) {
  check_spec(spec);
  const SuperAlgebra& n = spec.nilradical;

  std::vector<std::string> even = n.even_labels();
  for (const auto& t : spec.torus) even.push_back(t.label);

  std::vector<BracketEntry> table = n.table_entries();
  for (const auto& t : spec.torus)
    for (Index j = 0; j < n.dim(); ++j) {
      push_column(table, n, t.left, j, t.label, n.label(j));
      push_column(table, n, t.right, j, n.label(j), t.label);
    }
  table.insert(table.end(), spec.torus_brackets.begin(), spec.torus_brackets.end());

  std::string name = n.name() + " + torus";
  SuperAlgebra out = n.kind() == Kind::lie_super && !spec.torus_brackets.empty()
                         ? SuperAlgebra::with_skew_completion(n.kind(), even, n.odd_labels(), table, name)
                         : SuperAlgebra(n.kind(), even, n.odd_labels(), table, name);
  ValidationReport report = validate(out);
  if (!report.ok()) throw IdentityViolation("extension violates the " + std::string(to_string(n.kind())) +
                                                " identities", std::move(report));
  return out;
}

bool nil_independence_check(const ExtensionSpec& spec) {
  const Index d = spec.nilradical.dim();
  RatMatrix weights(static_cast<Index>(spec.torus.size()), d);
  for (std::size_t k = 0; k < spec.torus.size(); ++k) {
    const RatMatrix& m = spec.torus[k].left;
    if (m.rows() != d || m.cols() != d) throw InvalidSpec("action of " + spec.torus[k].label + " has the wrong shape");
    for (Index r = 0; r < d; ++r)
      for (Index c = 0; c < d; ++c)
        if (r != c && !is_zero(m(r, c))) throw NonDiagonalAction("action of " + spec.torus[k].label + " is not diagonal");
    weights.row(static_cast<Index>(k)) = m.diagonal().transpose();
  }
  return rank(weights) == weights.rows();
}

Subspace span_of_labels(const SuperAlgebra& a, const std::vector<std::string>& labels) {
  std::vector<Element> vs;
  for (const auto& l : labels) vs.push_back(a.basis_vector(l));
  return Subspace(a, vs);
}

NilradicalVerdict nilradical_verdict(const SuperAlgebra& a, const Subspace& candidate) {
  NilradicalVerdict v;
  const Subspace whole = Subspace::whole(a);
  v.codimension = a.dim() - candidate.dim();
  v.is_ideal = candidate.contains(product_space(a, whole, candidate)) &&
               candidate.contains(product_space(a, candidate, whole));
  v.contains_derived = candidate.contains(product_space(a, whole, whole));

  // Descending central series of the candidate as an algebra in its own right.
  Subspace c = candidate;
  for (Index step = 0; step <= a.dim() && c.dim() > 0; ++step) {
    Subspace next = product_space(a, c, candidate);
    if (next == c) break;
    c = std::move(next);
  }
  v.is_nilpotent = c.dim() == 0;

  if (v.is_ideal) {
    // Restriction of the operator to the candidate, in its echelon basis:
    // the coordinate of w along basis row i is w(pivot_i).
    const Side side = a.kind() == Kind::lie_super ? Side::left : Side::right;
    const auto& pivots = candidate.pivots();
    std::set<Index> in_candidate(pivots.begin(), pivots.end());
    const auto basis = candidate.vectors();
    v.complement_acts_non_nilpotently = true;
    for (Index j = 0; j < a.dim(); ++j) {
      if (in_candidate.count(j)) continue;
      const RatMatrix op = multiplication_matrix(a, a.basis_vector(j), side);
      RatMatrix restricted(candidate.dim(), candidate.dim());
      for (Index col = 0; col < candidate.dim(); ++col) {
        const Element w = op * basis[static_cast<std::size_t>(col)];
        for (Index row = 0; row < candidate.dim(); ++row) restricted(row, col) = w(pivots[static_cast<std::size_t>(row)]);
      }
      if (is_nilpotent(restricted)) {
        v.complement_acts_non_nilpotently = false;
        v.nilpotent_directions.push_back(a.label(j));
      }
    }
  }
  v.verdict = v.is_ideal && v.is_nilpotent && v.complement_acts_non_nilpotently && v.contains_derived;
  return v;
}

namespace {

struct Layout {
  SuperAlgebra nilradical;
  std::vector<Index> even, odd;  // block data
  std::vector<std::string> labels;
};

Layout layout(bool filiform, Kind kind, std::span<const Index> even, std::span<const Index> odd) {
  if (filiform) {
    if (even.size() != 1 || odd.size() != 1) throw ParameterError("filiform templates take one n and one m");
    SuperAlgebra n = kind == Kind::lie_super ? model_filiform_lie(even[0], odd[0], false)
                                             : filiform_leibniz(even[0], odd[0], false);
    const Family f = kind == Kind::lie_super ? Family::SL : Family::SLP;
    return {std::move(n), {even[0] - 1}, {odd[0]}, torus_labels(f, even, odd)};
  }
  SuperAlgebra n = kind == Kind::lie_super ? model_nilpotent_lie(even, odd, false)
                                           : model_nilpotent_leibniz(even, odd, false);
  const Family f = kind == Kind::lie_super ? Family::SN : Family::SNP;
  return {std::move(n), {even.begin(), even.end()}, {odd.begin(), odd.end()}, torus_labels(f, even, odd)};
}

/// Per-basis-vector data: block position of each nilradical vector.
struct Position {
  bool odd;
  std::size_t block;  // meaningless for x1
  Index local;        // 2..n_j+1 for even, 1..m_j for odd; 1 for x1
};

std::vector<Position> positions(const Layout& l) {
  std::vector<Position> out{{false, 0, 1}};
  for (std::size_t j = 0; j < l.even.size(); ++j)
    for (Index i = 2; i <= l.even[j] + 1; ++i) out.push_back({false, j, i});
  for (std::size_t j = 0; j < l.odd.size(); ++j)
    for (Index i = 1; i <= l.odd[j]; ++i) out.push_back({true, j, i});
  return out;
}

}  // namespace

ExtensionSpec standard_torus_spec(Family family, std::span<const Index> even, std::span<const Index> odd) {
  if (!is_solvable_family(family)) throw ParameterError("standard_torus_spec needs a solvable family");
  const bool filiform = family == Family::SL || family == Family::SLP;
  if (family_kind(family) == Kind::leibniz_super) {
    const Layout l = layout(filiform, Kind::leibniz_super, even, odd);
    // b1 = 0 keeps [t1, x1] = -x1; every other parameter 1 kills the left action.
    std::vector<Rational> b(l.even.size() + 1, Rational(1));
    b[0] = 0;
    return leibniz_torus_template(even, odd, b, std::vector<Rational>(l.odd.size(), Rational(1)), filiform);
  }
  Layout l = layout(filiform, Kind::lie_super, even, odd);
  const auto pos = positions(l);
  const Index d = l.nilradical.dim();
  const std::size_t k = l.even.size();
  std::vector<RatMatrix> left(l.labels.size(), RatMatrix::Zero(d, d));
  Index x_index = 0, y_index = 0;
  for (Index q = 0; q < d; ++q) {
    const Position& p = pos[static_cast<std::size_t>(q)];
    // t1 weight: global index of x_i or y_j.
    left[0](q, q) = p.odd ? ++y_index : ++x_index;
    if (q == 0) continue;
    left[p.odd ? 1 + k + p.block : 1 + p.block](q, q) = 1;
  }
  return lie_extension_spec(std::move(l.nilradical), l.labels, left);
}

ExtensionSpec leibniz_torus_template(std::span<const Index> even, std::span<const Index> odd,
                                     const std::vector<Rational>& b, const std::vector<Rational>& b_prime,
                                     bool filiform) {
  Layout l = layout(filiform, Kind::leibniz_super, even, odd);
  const std::size_t k = l.even.size();
  if (b.size() != k + 1 || b_prime.size() != l.odd.size())
    throw ParameterError("template needs " + std::to_string(k + 1) + " b values and " +
                         std::to_string(l.odd.size()) + " b' values");
  const auto pos = positions(l);
  const Index d = l.nilradical.dim();
  std::vector<RatMatrix> left(l.labels.size(), RatMatrix::Zero(d, d));
  std::vector<RatMatrix> right = left;

  left[0](0, 0) = b[0] - 1;
  right[0](0, 0) = 1;
  for (Index q = 1; q < d; ++q) {
    const Position& p = pos[static_cast<std::size_t>(q)];
    const std::size_t t = p.odd ? 1 + k + p.block : 1 + p.block;
    const Rational& param = p.odd ? b_prime[p.block] : b[1 + p.block];
    right[0](q, q) = p.odd ? p.local - 1 : p.local - 2;
    left[t](q, q) = param - 1;
    right[t](q, q) = 1;
  }

  ExtensionSpec spec{std::move(l.nilradical), {}, {}};
  for (std::size_t i = 0; i < l.labels.size(); ++i) spec.torus.push_back({l.labels[i], left[i], right[i]});
  return spec;
}

std::vector<std::vector<int>> sweep_leibniz_template(std::span<const Index> even, std::span<const Index> odd,
                                                     bool filiform) {
  const std::size_t nb = filiform ? 2 : even.size() + 1;
  const std::size_t np = filiform ? 1 : odd.size();
  const std::size_t total = nb + np;
  std::vector<std::vector<int>> hits;
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    std::vector<int> bits(total);
    for (std::size_t i = 0; i < total; ++i) bits[i] = static_cast<int>((mask >> (total - 1 - i)) & 1);
    std::vector<Rational> b(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(nb));
    std::vector<Rational> bp(bits.begin() + static_cast<std::ptrdiff_t>(nb), bits.end());
    try {
      semidirect_extension(leibniz_torus_template(even, odd, b, bp, filiform));
      hits.push_back(std::move(bits));
    } catch (const IdentityViolation&) {
    }
  }
  return hits;
}

}  // namespace superalg
