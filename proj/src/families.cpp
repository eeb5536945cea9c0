#include "superalg/families.hpp"

#include <map>
#include <numeric>

namespace superalg {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::SL: return "SL";
    case Family::N: return "N";
    case Family::SN: return "SN";
    case Family::LP: return "LP";
    case Family::SLP: return "SLP";
    case Family::NP: return "NP";
    case Family::SNP: return "SNP";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::L, Family::SL, Family::N, Family::SN, Family::LP, Family::SLP, Family::NP, Family::SNP})
    if (to_string(f) == text) return f;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

bool is_solvable_family(Family f) {
  return f == Family::SL || f == Family::SN || f == Family::SLP || f == Family::SNP;
}

Kind family_kind(Family f) {
  return (f == Family::LP || f == Family::SLP || f == Family::NP || f == Family::SNP) ? Kind::leibniz_super
                                                                                      : Kind::lie_super;
}

Family nilradical_family(Family f) {
  switch (f) {
    case Family::SL: return Family::L;
    case Family::SN: return Family::N;
    case Family::SLP: return Family::LP;
    case Family::SNP: return Family::NP;
    default: return f;
  }
}

namespace {

std::string x(Index i) { return "x" + std::to_string(i); }
std::string y(Index i) { return "y" + std::to_string(i); }

/// Accumulates [left, right] += coeff * result.
class TableBuilder {
 public:
  void add(const std::string& left, const std::string& right, const std::string& result, const Rational& coeff) {
    if (is_zero(coeff)) return;
    entries_[{left, right}][result] += coeff;
  }

  std::vector<BracketEntry> entries() const {
    std::vector<BracketEntry> out;
    for (const auto& [key, terms] : entries_) {
      BracketEntry e{key.first, key.second, {}};
      for (const auto& [label, c] : terms)
        if (!is_zero(c)) e.result.push_back({label, c});
      if (!e.result.empty()) out.push_back(std::move(e));
    }
    return out;
  }

 private:
  std::map<std::pair<std::string, std::string>, std::map<std::string, Rational>> entries_;
};

/// Index bookkeeping for block data (n_1..n_k | m_1..m_p).
struct Blocks {
  std::vector<Index> even, odd;

  Index even_dim() const { return std::accumulate(even.begin(), even.end(), Index{0}) + 1; }
  Index odd_dim() const { return std::accumulate(odd.begin(), odd.end(), Index{0}); }
  /// Global index of the i-th vector (1-based, from 2 to n_j + 1) of even block j.
  Index even_at(std::size_t j, Index i) const {
    return std::accumulate(even.begin(), even.begin() + static_cast<std::ptrdiff_t>(j), Index{0}) + i;
  }
  /// Global index of the i-th vector (1-based, from 1 to m_j) of odd block j.
  Index odd_at(std::size_t j, Index i) const {
    return std::accumulate(odd.begin(), odd.begin() + static_cast<std::ptrdiff_t>(j), Index{0}) + i;
  }
};

Blocks check_blocks(std::span<const Index> even, std::span<const Index> odd) {
  if (even.empty() || odd.empty()) throw ParameterError("need at least one even and one odd block");
  for (Index b : even)
    if (b < 1) throw ParameterError("even block sizes must be >= 1");
  for (Index b : odd)
    if (b < 1) throw ParameterError("odd block sizes must be >= 1");
  return {std::vector<Index>(even.begin(), even.end()), std::vector<Index>(odd.begin(), odd.end())};
}

void check_filiform(Index n, Index m) {
  if (n < 3 || m < 2) throw ParameterError("filiform families need n >= 3 and m >= 2");
}

struct TorusNames {
  std::vector<std::string> even_block;  // acts on even block j
  std::vector<std::string> odd_block;   // acts on odd block j
  std::string weight;                   // the grading element t1 / z1
};

TorusNames torus_names(const Blocks& b, bool filiform, char prefix) {
  const std::string p(1, prefix);
  TorusNames names{{}, {}, p + "1"};
  for (std::size_t j = 0; j < b.even.size(); ++j) names.even_block.push_back(p + std::to_string(j + 2));
  for (std::size_t j = 0; j < b.odd.size(); ++j)
    names.odd_block.push_back(filiform ? p + "3" : p + "p" + std::to_string(j + 1));
  return names;
}

std::vector<std::string> even_nil_labels(const Blocks& b) {
  std::vector<std::string> out;
  for (Index i = 1; i <= b.even_dim(); ++i) out.push_back(x(i));
  return out;
}

std::vector<std::string> odd_labels(const Blocks& b) {
  std::vector<std::string> out;
  for (Index i = 1; i <= b.odd_dim(); ++i) out.push_back(y(i));
  return out;
}

std::vector<std::string> with_torus(std::vector<std::string> even, const TorusNames& t) {
  even.push_back(t.weight);
  even.insert(even.end(), t.even_block.begin(), t.even_block.end());
  even.insert(even.end(), t.odd_block.begin(), t.odd_block.end());
  return even;
}

/// The x1-chains shared by N and NP; `leibniz` puts x1 on the right.
void add_chains(TableBuilder& tb, const Blocks& b, bool leibniz) {
  auto put = [&](const std::string& v, const std::string& image) {
    if (leibniz) tb.add(v, x(1), image, 1);
    else tb.add(x(1), v, image, 1);
  };
  for (std::size_t j = 0; j < b.even.size(); ++j)
    for (Index i = 2; i <= b.even[j]; ++i) put(x(b.even_at(j, i)), x(b.even_at(j, i + 1)));
  for (std::size_t j = 0; j < b.odd.size(); ++j)
    for (Index i = 1; i <= b.odd[j] - 1; ++i) put(y(b.odd_at(j, i)), y(b.odd_at(j, i + 1)));
}

SuperAlgebra build_lie(const Blocks& b, bool solvable, bool filiform, std::string name) {
  TableBuilder tb;
  add_chains(tb, b, false);
  std::vector<std::string> even = even_nil_labels(b);
  if (solvable) {
    const auto t = torus_names(b, filiform, 't');
    for (Index i = 1; i <= b.even_dim(); ++i) tb.add(t.weight, x(i), x(i), i);
    for (Index j = 1; j <= b.odd_dim(); ++j) tb.add(t.weight, y(j), y(j), j);
    for (std::size_t j = 0; j < b.even.size(); ++j)
      for (Index i = 2; i <= b.even[j] + 1; ++i) tb.add(t.even_block[j], x(b.even_at(j, i)), x(b.even_at(j, i)), 1);
    for (std::size_t j = 0; j < b.odd.size(); ++j)
      for (Index i = 1; i <= b.odd[j]; ++i) tb.add(t.odd_block[j], y(b.odd_at(j, i)), y(b.odd_at(j, i)), 1);
    even = with_torus(std::move(even), t);
  }
  return SuperAlgebra::with_skew_completion(Kind::lie_super, std::move(even), odd_labels(b), tb.entries(),
                                            std::move(name));
}

SuperAlgebra build_leibniz(const Blocks& b, bool solvable, bool filiform, std::string name) {
  TableBuilder tb;
  add_chains(tb, b, true);
  std::vector<std::string> even = even_nil_labels(b);
  if (solvable) {
    const auto t = torus_names(b, filiform, 't');
    tb.add(t.weight, x(1), x(1), -1);
    tb.add(x(1), t.weight, x(1), 1);
    for (std::size_t j = 0; j < b.even.size(); ++j)
      for (Index i = 2; i <= b.even[j] + 1; ++i) {
        const auto v = x(b.even_at(j, i));
        tb.add(v, t.weight, v, i - 2);
        tb.add(v, t.even_block[j], v, 1);
      }
    for (std::size_t j = 0; j < b.odd.size(); ++j)
      for (Index i = 1; i <= b.odd[j]; ++i) {
        const auto v = y(b.odd_at(j, i));
        tb.add(v, t.weight, v, i - 1);
        tb.add(v, t.odd_block[j], v, 1);
      }
    even = with_torus(std::move(even), t);
  }
  return SuperAlgebra(Kind::leibniz_super, std::move(even), odd_labels(b), tb.entries(), std::move(name));
}

std::string block_name(std::string_view family, const Blocks& b) {
  std::string s(family);
  s += "(";
  for (Index n : b.even) s += std::to_string(n) + ",";
  s += "1 |";
  for (std::size_t j = 0; j < b.odd.size(); ++j) s += (j ? "," : " ") + std::to_string(b.odd[j]);
  return s + ")";
}

std::string filiform_name(std::string_view family, Index n, Index m) {
  return std::string(family) + "^{" + std::to_string(n) + "," + std::to_string(m) + "}";
}

}  // namespace

SuperAlgebra model_filiform_lie(Index n, Index m, bool solvable) {
  check_filiform(n, m);
  return build_lie(Blocks{{n - 1}, {m}}, solvable, true, filiform_name(solvable ? "SL" : "L", n, m));
}

SuperAlgebra model_nilpotent_lie(std::span<const Index> even_blocks, std::span<const Index> odd_blocks,
                                 bool solvable) {
  const Blocks b = check_blocks(even_blocks, odd_blocks);
  return build_lie(b, solvable, false, block_name(solvable ? "SN" : "N", b));
}

SuperAlgebra filiform_leibniz(Index n, Index m, bool solvable) {
  check_filiform(n, m);
  return build_leibniz(Blocks{{n - 1}, {m}}, solvable, true, filiform_name(solvable ? "SLP" : "LP", n, m));
}

SuperAlgebra model_nilpotent_leibniz(std::span<const Index> even_blocks, std::span<const Index> odd_blocks,
                                     bool solvable) {
  const Blocks b = check_blocks(even_blocks, odd_blocks);
  return build_leibniz(b, solvable, false, block_name(solvable ? "SNP" : "NP", b));
}

namespace {

std::pair<Index, Index> filiform_params(Family f, std::span<const Index> even, std::span<const Index> odd) {
  if (even.size() != 1 || odd.size() != 1)
    throw ParameterError(std::string(to_string(f)) + " takes exactly one even value n and one odd value m");
  return {even[0], odd[0]};
}

}  // namespace

SuperAlgebra make_family(Family f, std::span<const Index> even, std::span<const Index> odd) {
  switch (f) {
    case Family::L:
    case Family::SL: {
      const auto [n, m] = filiform_params(f, even, odd);
      return model_filiform_lie(n, m, f == Family::SL);
    }
    case Family::LP:
    case Family::SLP: {
      const auto [n, m] = filiform_params(f, even, odd);
      return filiform_leibniz(n, m, f == Family::SLP);
    }
    case Family::N:
    case Family::SN:
      return model_nilpotent_lie(even, odd, f == Family::SN);
    case Family::NP:
    case Family::SNP:
      return model_nilpotent_leibniz(even, odd, f == Family::SNP);
  }
  throw ParameterError("unknown family");
}

std::vector<std::string> torus_labels(Family f, std::span<const Index> even, std::span<const Index> odd) {
  if (!is_solvable_family(f)) return {};
  const bool filiform = f == Family::SL || f == Family::SLP;
  Blocks b = filiform ? Blocks{{filiform_params(f, even, odd).first - 1}, {filiform_params(f, even, odd).second}}
                      : check_blocks(even, odd);
  const auto t = torus_names(b, filiform, 't');
  return with_torus({}, t);
}

Presentation z_basis_presentation(Family family, std::span<const Index> even, std::span<const Index> odd) {
  if (family != Family::SL && family != Family::SN)
    throw ParameterError("z-basis presentations exist for SL and SN only");
  const bool filiform = family == Family::SL;
  Blocks b;
  if (filiform) {
    const auto [n, m] = filiform_params(family, even, odd);
    check_filiform(n, m);
    b = Blocks{{n - 1}, {m}};
  } else {
    b = check_blocks(even, odd);
  }

  const auto z = torus_names(b, filiform, 'z');
  TableBuilder tb;
  add_chains(tb, b, false);
  tb.add(z.weight, x(1), x(1), 1);
  for (std::size_t j = 0; j < b.even.size(); ++j)
    for (Index i = 3; i <= b.even[j] + 1; ++i) tb.add(z.weight, x(b.even_at(j, i)), x(b.even_at(j, i)), i - 2);
  for (std::size_t j = 0; j < b.odd.size(); ++j)
    for (Index i = 2; i <= b.odd[j]; ++i) tb.add(z.weight, y(b.odd_at(j, i)), y(b.odd_at(j, i)), i - 1);
  for (std::size_t j = 0; j < b.even.size(); ++j)
    for (Index i = 2; i <= b.even[j] + 1; ++i) tb.add(z.even_block[j], x(b.even_at(j, i)), x(b.even_at(j, i)), 1);
  for (std::size_t j = 0; j < b.odd.size(); ++j)
    for (Index i = 1; i <= b.odd[j]; ++i) tb.add(z.odd_block[j], y(b.odd_at(j, i)), y(b.odd_at(j, i)), 1);

  SuperAlgebra algebra = SuperAlgebra::with_skew_completion(
      Kind::lie_super, with_torus(even_nil_labels(b), z), odd_labels(b), tb.entries(),
      (filiform ? filiform_name("SL", b.even[0] + 1, b.odd[0]) : block_name("SN", b)) + " z-basis");

  // t1 = z1 + 2 z2 + sum_j (n_1+..+n_j + 2) z_{j+2} + z'_1 + sum_j (m_1+..+m_j + 1) z'_{j+1}
  const auto t = torus_names(b, filiform, 't');
  LinearCombination t1{{z.weight, 1}};
  for (std::size_t j = 0; j < b.even.size(); ++j) t1.push_back({z.even_block[j], b.even_at(j, 2)});
  for (std::size_t j = 0; j < b.odd.size(); ++j) t1.push_back({z.odd_block[j], b.odd_at(j, 1)});

  BasisChange map;
  for (Index i = 1; i <= b.even_dim(); ++i) map.even.push_back({x(i), {{x(i), 1}}});
  map.even.push_back({t.weight, t1});
  for (std::size_t j = 0; j < b.even.size(); ++j) map.even.push_back({t.even_block[j], {{z.even_block[j], 1}}});
  for (std::size_t j = 0; j < b.odd.size(); ++j) map.even.push_back({t.odd_block[j], {{z.odd_block[j], 1}}});
  for (Index i = 1; i <= b.odd_dim(); ++i) map.odd.push_back({y(i), {{y(i), 1}}});
  return {std::move(algebra), std::move(map)};
}

}  // namespace superalg
