#include "superalg/algebra.hpp"

#include "superalg/linalg.hpp"

#include <cctype>
#include <map>
#include <set>

namespace superalg {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even" || text == "0") return Parity::even;
  if (text == "odd" || text == "1") return Parity::odd;
  throw ParseError("unknown parity '" + std::string(text) + "'");
}

std::string_view to_string(Kind k) { return k == Kind::lie_super ? "lie_super" : "leibniz_super"; }

Kind parse_kind(std::string_view text) {
  if (text == "lie_super") return Kind::lie_super;
  if (text == "leibniz_super") return Kind::leibniz_super;
  throw ParseError("unknown algebra kind '" + std::string(text) + "'");
}

SuperAlgebra::SuperAlgebra(Kind kind, std::vector<std::string> even_labels,
                           std::vector<std::string> odd_labels, const std::vector<BracketEntry>& table,
                           std::string name)
    : kind_(kind), name_(std::move(name)), even_(std::move(even_labels)), odd_(std::move(odd_labels)) {
  labels_ = even_;
  labels_.insert(labels_.end(), odd_.begin(), odd_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidSpec("empty basis label");
    if (!index_.emplace(labels_[i], static_cast<Index>(i)).second)
      throw InvalidSpec("duplicate basis label '" + labels_[i] + "'");
  }
  const Index d = dim();
  table_.assign(static_cast<std::size_t>(d * d), {});
  std::set<std::pair<Index, Index>> seen;
  for (const auto& entry : table) {
    const Index i = index_of(entry.left), j = index_of(entry.right);
    if (!seen.emplace(i, j).second)
      throw InvalidSpec("duplicate bracket entry [" + entry.left + "," + entry.right + "]");
    Element v = element(entry.result);
    auto& slot = table_[static_cast<std::size_t>(i * d + j)];
    for (Index k = 0; k < d; ++k)
      if (!is_zero(v(k))) slot.push_back({k, v(k)});
  }
}

SuperAlgebra SuperAlgebra::with_skew_completion(Kind kind, std::vector<std::string> even_labels,
                                                std::vector<std::string> odd_labels,
                                                std::vector<BracketEntry> table, std::string name) {
  if (kind != Kind::lie_super)
    return SuperAlgebra(kind, std::move(even_labels), std::move(odd_labels), table, std::move(name));

  SuperAlgebra raw(kind, even_labels, odd_labels, table, name);
  ValidationReport contradictions;
  std::vector<BracketEntry> completed = table;
  const Index d = raw.dim();
  std::set<std::pair<Index, Index>> given;
  for (const auto& e : table) given.emplace(raw.index_of(e.left), raw.index_of(e.right));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const auto& ij = raw.product(i, j);
      const bool mirror_given = given.count({j, i}) > 0;
      if (ij.empty() || i == j) continue;
      const Rational s = -super_sign(raw.parity(i), raw.parity(j));
      if (!mirror_given) {
        BracketEntry mirror{raw.label(j), raw.label(i), {}};
        for (const auto& p : ij) mirror.result.push_back({raw.label(p.index), s * p.coeff});
        completed.push_back(std::move(mirror));
      } else {
        Element residual = raw.product_vector(j, i) - s * raw.product_vector(i, j);
        if (!is_zero(residual) && i < j) contradictions.skew.push_back({i, j, residual});
      }
    }
  }
  if (!contradictions.ok())
    throw ValidationError("bracket table contradicts super skew-symmetry", std::move(contradictions));
  return SuperAlgebra(kind, std::move(even_labels), std::move(odd_labels), completed, std::move(name));
}

bool SuperAlgebra::has_label(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

Index SuperAlgebra::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw UnknownLabel("unknown basis label '" + std::string(label) + "'");
  return it->second;
}

Element SuperAlgebra::product_vector(Index i, Index j) const {
  Element v = zero();
  for (const auto& p : product(i, j)) v(p.index) = p.coeff;
  return v;
}

Element SuperAlgebra::basis_vector(Index i) const {
  if (i < 0 || i >= dim()) throw OutOfBounds("basis index " + std::to_string(i));
  Element v = zero();
  v(i) = 1;
  return v;
}

Element SuperAlgebra::element(const LinearCombination& terms) const {
  Element v = zero();
  for (const auto& t : terms) v(index_of(t.label)) += t.coeff;
  return v;
}

LinearCombination SuperAlgebra::terms(const Element& v) const {
  if (v.size() != dim()) throw DimensionMismatch("element length does not match algebra dimension");
  LinearCombination out;
  for (Index k = 0; k < dim(); ++k)
    if (!is_zero(v(k))) out.push_back({label(k), v(k)});
  return out;
}

std::vector<BracketEntry> SuperAlgebra::table_entries() const {
  std::vector<BracketEntry> out;
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      BracketEntry e{label(i), label(j), {}};
      for (const auto& term : p) e.result.push_back({label(term.index), term.coeff});
      out.push_back(std::move(e));
    }
  return out;
}

Element bracket(const SuperAlgebra& a, const Element& u, const Element& v) {
  if (u.size() != a.dim() || v.size() != a.dim())
    throw DimensionMismatch("bracket: element length does not match algebra dimension");
  Element out = a.zero();
  for (Index i = 0; i < a.dim(); ++i) {
    if (is_zero(u(i))) continue;
    for (Index j = 0; j < a.dim(); ++j) {
      if (is_zero(v(j))) continue;
      const auto& prod = a.product(i, j);
      if (prod.empty()) continue;
      const Rational uv = u(i) * v(j);
      for (const auto& p : prod) out(p.index) += uv * p.coeff;
    }
  }
  return out;
}

std::optional<Parity> parity_of(const SuperAlgebra& a, const Element& v) {
  const bool has_even = !is_zero(v.head(a.even_dim()));
  const bool has_odd = !is_zero(v.tail(a.odd_dim()));
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::odd : Parity::even;
}

RatMatrix multiplication_matrix(const SuperAlgebra& a, const Element& x, Side side) {
  if (!parity_of(a, x)) throw NotHomogeneous("multiplication operator of a non-homogeneous element");
  RatMatrix m(a.dim(), a.dim());
  for (Index j = 0; j < a.dim(); ++j) {
    const Element e = a.basis_vector(j);
    m.col(j) = side == Side::left ? bracket(a, x, e) : bracket(a, e, x);
  }
  return m;
}

ValidationReport validate(const SuperAlgebra& a, std::optional<Kind> identity) {
  const Kind kind = identity.value_or(a.kind());
  ValidationReport report;
  const Index d = a.dim();

  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Parity expected = a.parity(i) + a.parity(j);
      Element wrong = a.zero();
      bool bad = false;
      for (const auto& p : a.product(i, j))
        if (a.parity(p.index) != expected) {
          wrong(p.index) = p.coeff;
          bad = true;
        }
      if (bad) report.grading.push_back({i, j, wrong});
    }

  if (a.kind() == Kind::lie_super) {
    for (Index i = 0; i < d; ++i)
      for (Index j = i; j < d; ++j) {
        Element r = a.product_vector(j, i) + super_sign(a.parity(i), a.parity(j)) * a.product_vector(i, j);
        if (!is_zero(r)) report.skew.push_back({i, j, r});
      }
  }

  // Cache [e_y, e_z] so the triple loop only does one sparse bracket per term.
  std::vector<Element> prod(static_cast<std::size_t>(d * d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) prod[static_cast<std::size_t>(i * d + j)] = a.product_vector(i, j);
  auto P = [&](Index i, Index j) -> const Element& { return prod[static_cast<std::size_t>(i * d + j)]; };

  for (Index x = 0; x < d; ++x) {
    const Element ex = a.basis_vector(x);
    for (Index y = 0; y < d; ++y) {
      const Element ey = a.basis_vector(y);
      for (Index z = 0; z < d; ++z) {
        const Element ez = a.basis_vector(z);
        const Parity px = a.parity(x), py = a.parity(y), pz = a.parity(z);
        Element r;
        if (kind == Kind::lie_super) {
          r = super_sign(pz, px) * bracket(a, ex, P(y, z)) + super_sign(px, py) * bracket(a, ey, P(z, x)) +
              super_sign(py, pz) * bracket(a, ez, P(x, y));
        } else {
          r = bracket(a, ex, P(y, z)) - bracket(a, P(x, y), ez) + super_sign(py, pz) * bracket(a, P(x, z), ey);
        }
        if (!is_zero(r)) report.identity.push_back({x, y, z, std::move(r)});
      }
    }
  }
  return report;
}

SuperAlgebra change_of_basis(const SuperAlgebra& a, const BasisChange& map) {
  if (static_cast<Index>(map.even.size()) != a.even_dim() || static_cast<Index>(map.odd.size()) != a.odd_dim())
    throw SingularMap("basis change must list " + std::to_string(a.even_dim()) + " even and " +
                      std::to_string(a.odd_dim()) + " odd images");
  const Index d = a.dim();
  RatMatrix p(d, d);
  std::vector<std::string> even, odd;
  Index col = 0;
  for (const auto* part : {&map.even, &map.odd}) {
    const Parity want = part == &map.even ? Parity::even : Parity::odd;
    for (const auto& [label, image] : *part) {
      const Element v = a.element(image);
      const auto got = parity_of(a, v);
      if (!is_zero(v) && got != want)
        throw ParityViolation("image of '" + label + "' is not " + std::string(to_string(want)));
      p.col(col++) = v;
      (want == Parity::even ? even : odd).push_back(label);
    }
  }
  const RatMatrix p_inv = inverse(p);

  std::vector<BracketEntry> table;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Element r = p_inv * bracket(a, p.col(i), p.col(j));
      if (is_zero(r)) continue;
      BracketEntry e{i < a.even_dim() ? even[static_cast<std::size_t>(i)] : odd[static_cast<std::size_t>(i - a.even_dim())],
                     j < a.even_dim() ? even[static_cast<std::size_t>(j)] : odd[static_cast<std::size_t>(j - a.even_dim())],
                     {}};
      for (Index k = 0; k < d; ++k) {
        if (is_zero(r(k))) continue;
        e.result.push_back({k < a.even_dim() ? even[static_cast<std::size_t>(k)]
                                             : odd[static_cast<std::size_t>(k - a.even_dim())],
                            r(k)});
      }
      table.push_back(std::move(e));
    }
  return SuperAlgebra(a.kind(), std::move(even), std::move(odd), table, a.name());
}

bool equal_laws(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.kind() != b.kind()) throw BasisMismatch("algebras have different kinds");
  if (a.even_labels() != b.even_labels() || a.odd_labels() != b.odd_labels())
    throw BasisMismatch("algebras have different basis label lists");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const auto& pa = a.product(i, j);
      const auto& pb = b.product(i, j);
      if (pa.size() != pb.size()) return false;
      for (std::size_t k = 0; k < pa.size(); ++k)
        if (pa[k].index != pb[k].index || pa[k].coeff != pb[k].coeff) return false;
    }
  return true;
}

LinearCombination parse_linear_combination(std::string_view text) {
  LinearCombination out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse element '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty expression");
  bool first = true;
  while (pos < text.size()) {
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      coeff = parse_rational(text.substr(start, pos - start));
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') throw fail("expected '*' after coefficient");
      ++pos;
      skip_ws();
    }
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                 text[pos] == '\'')) ++pos;
    if (start == pos) throw fail("expected a basis label");
    out.push_back({std::string(text.substr(start, pos - start)), sign * coeff});
    skip_ws();
  }
  return out;
}

Element parse_element(const SuperAlgebra& a, std::string_view text) {
  return a.element(parse_linear_combination(text));
}

std::string format_element(const SuperAlgebra& a, const Element& v) {
  std::string out;
  for (const auto& t : a.terms(v)) {
    const bool neg = t.coeff.sign() < 0;
    const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += t.label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace superalg
