#include "superalg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace superalg {

Index max_dimension() {
  const char* env = std::getenv("SUPERALG_MAX_DIM");
  if (!env || !*env) return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw ParseError("SUPERALG_MAX_DIM must be a positive integer");
  return static_cast<Index>(v);
}

void enforce_dimension_cap(const SuperAlgebra& a) {
  const Index cap = max_dimension();
  if (a.dim() > cap)
    throw DimensionCapExceeded("algebra dimension " + std::to_string(a.dim()) + " exceeds SUPERALG_MAX_DIM=" +
                               std::to_string(cap));
}

namespace {

std::string require_string(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw ParseError(std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) throw ParseError(std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Rational coeff_from_json(const Json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long long>());
  throw ParseError("coefficients must be rational strings or integers");
}

std::vector<BracketEntry> brackets_from_json(const Json& list) {
  if (!list.is_array()) throw ParseError("brackets must be an array");
  std::vector<BracketEntry> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& b : list) {
    BracketEntry e{require_string(b, "left"), require_string(b, "right"), {}};
    if (!seen.insert({e.left, e.right}).second)
      throw ParseError("duplicate bracket entry [" + e.left + ", " + e.right + "]");
    if (!b.contains("result") || !b.at("result").is_array()) throw ParseError("bracket without result array");
    for (const auto& t : b.at("result")) {
      if (!t.contains("coeff")) throw ParseError("result term without coeff");
      e.result.push_back({require_string(t, "basis"), coeff_from_json(t.at("coeff"))});
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json brackets_to_json(const std::vector<BracketEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json result = Json::array();
    for (const auto& t : e.result) result.push_back({{"basis", t.label}, {"coeff", to_string(t.coeff)}});
    list.push_back({{"left", e.left}, {"right", e.right}, {"result", std::move(result)}});
  }
  return list;
}

}  // namespace

SuperAlgebra algebra_from_json(const Json& j, LoadOptions options) {
  if (!j.is_object()) throw ParseError("algebra file must hold a JSON object");
  const Kind kind = parse_kind(require_string(j, "kind"));
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  auto even = string_list(j, "even_basis");
  auto odd = string_list(j, "odd_basis");
  if (even.size() + odd.size() > static_cast<std::size_t>(max_dimension()))
    throw DimensionCapExceeded("algebra dimension " + std::to_string(even.size() + odd.size()) +
                               " exceeds SUPERALG_MAX_DIM=" + std::to_string(max_dimension()));
  auto table = j.contains("brackets") ? brackets_from_json(j.at("brackets")) : std::vector<BracketEntry>{};

  auto build = [&]() {
    try {
      if (kind != Kind::lie_super) return SuperAlgebra(kind, even, odd, table, name);
      try {
        return SuperAlgebra::with_skew_completion(kind, even, odd, table, name);
      } catch (const ValidationError&) {
        // A table that contradicts skew-symmetry is kept as written so that
        // `check` can report every violation.
        if (!options.skip_validate) throw;
        return SuperAlgebra(kind, even, odd, table, name);
      }
    } catch (const InvalidSpec& e) {
      throw ParseError(e.what());
    }
  };
  SuperAlgebra a = build();
  if (!options.skip_validate) {
    ValidationReport r = validate(a);
    if (!r.ok()) throw ValidationError("algebra '" + name + "' fails its identities", std::move(r));
  }
  return a;
}

SuperAlgebra load_algebra(std::istream& in, LoadOptions options) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j, options);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

SuperAlgebra load_algebra_file(const std::string& path, LoadOptions options) {
  return algebra_from_json(read_json_file(path), options);
}

Json algebra_to_json(const SuperAlgebra& a) {
  return Json{{"name", a.name()},
              {"kind", to_string(a.kind())},
              {"even_basis", a.even_labels()},
              {"odd_basis", a.odd_labels()},
              {"brackets", brackets_to_json(a.table_entries())}};
}

void save_algebra(const SuperAlgebra& a, std::ostream& out) { out << dump(algebra_to_json(a)); }

BasisChange basis_change_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("basis change must be a JSON object");
  auto side = [&](const char* key) {
    std::vector<std::pair<std::string, LinearCombination>> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    for (const auto& e : j.at(key))
      out.emplace_back(require_string(e, "label"), parse_linear_combination(require_string(e, "image")));
    return out;
  };
  return {side("even"), side("odd")};
}

ExtensionSpec extension_from_json(SuperAlgebra nilradical, const Json& j) {
  if (!j.is_object() || !j.contains("torus") || !j.at("torus").is_array())
    throw ParseError("actions file needs a 'torus' array");
  const Index d = nilradical.dim();
  auto action = [&](const Json& map) {
    if (!map.is_object()) throw ParseError("an action maps basis labels to linear combinations");
    RatMatrix m = RatMatrix::Zero(d, d);
    for (const auto& [label, image] : map.items()) {
      if (!image.is_string()) throw ParseError("action images must be strings");
      m.col(nilradical.index_of(label)) = parse_element(nilradical, image.get<std::string>());
    }
    return m;
  };
  ExtensionSpec spec{nilradical, {}, {}};
  for (const auto& t : j.at("torus")) {
    TorusAction ta{require_string(t, "label"), t.contains("left") ? action(t.at("left")) : RatMatrix::Zero(d, d), {}};
    if (t.contains("right")) ta.right = action(t.at("right"));
    else if (nilradical.kind() == Kind::lie_super) ta.right = -ta.left;
    else throw ParseError("leibniz_super actions need an explicit 'right' map for " + ta.label);
    spec.torus.push_back(std::move(ta));
  }
  if (j.contains("torus_brackets")) spec.torus_brackets = brackets_from_json(j.at("torus_brackets"));
  spec.nilradical = std::move(nilradical);
  return spec;
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw ParseError("unknown format '" + std::string(text) + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RatVector(m.row(r).transpose())));
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(to_json(v));
  return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const SuperAlgebra& a, const ValidationReport& r) {
  auto pairs = [&](const std::vector<PairIssue>& issues) {
    Json out = Json::array();
    for (const auto& p : issues)
      out.push_back({{"left", a.label(p.left)}, {"right", a.label(p.right)}, {"residual", format_element(a, p.residual)}});
    return out;
  };
  Json triples = Json::array();
  for (const auto& t : r.identity)
    triples.push_back({{"x", a.label(t.x)}, {"y", a.label(t.y)}, {"z", a.label(t.z)},
                       {"residual", format_element(a, t.residual)}});
  return Json{{"name", a.name()},
              {"kind", to_string(a.kind())},
              {"valid", r.ok()},
              {"grading_violations", pairs(r.grading)},
              {"skew_violations", pairs(r.skew)},
              {"identity_violations", std::move(triples)}};
}

Json to_json(const Classification& c) {
  Json out{{"nilpotent", c.is_nilpotent}, {"solvable", c.is_solvable}};
  if (c.nilindex) out["s_nilindex"] = {c.nilindex->p, c.nilindex->q};
  else out["s_nilindex"] = nullptr;
  return out;
}

Json to_json(const SuperAlgebra& a, const CharacteristicSequence& c) {
  auto witness = [&](const std::optional<Element>& w) { return w ? Json(format_element(a, *w)) : Json(nullptr); };
  return Json{{"even", c.even_part},
              {"odd", c.odd_part},
              {"even_witness", witness(c.even_witness)},
              {"odd_witness", witness(c.odd_witness)},
              {"lower_bound", c.lower_bound}};
}

Json to_json(const DerivationSpace& d) {
  Json basis = Json::array();
  for (const auto& m : d.basis) basis.push_back(to_json(m.matrix));
  return Json{{"parity", to_string(d.parity)}, {"dim", d.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const InnernessReport& r) {
  auto expr = [](const InnerExpression& e) {
    Json coeffs = Json::array();
    for (const auto& c : e.coefficients) coeffs.push_back(c ? to_json(*c) : Json(nullptr));
    return Json{{"operators", e.operators}, {"coefficients", std::move(coeffs)}};
  };
  return Json{{"dim_der_even", r.dim_der_even},
              {"dim_der_odd", r.dim_der_odd},
              {"dim_inner_even", r.dim_inner_even},
              {"dim_inner_odd", r.dim_inner_odd},
              {"outer_even", r.outer_even},
              {"outer_odd", r.outer_odd},
              {"all_inner", r.all_inner},
              {"expression_even", expr(r.expression_even)},
              {"expression_odd", expr(r.expression_odd)}};
}

Json to_json(const NilradicalVerdict& v) {
  return Json{{"is_ideal", v.is_ideal},
              {"is_nilpotent", v.is_nilpotent},
              {"complement_acts_non_nilpotently", v.complement_acts_non_nilpotently},
              {"contains_derived", v.contains_derived},
              {"verdict", v.verdict},
              {"codimension", v.codimension},
              {"nilpotent_directions", v.nilpotent_directions}};
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Index>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string to_text(const SuperAlgebra& a, const ValidationReport& r) {
  std::ostringstream out;
  out << a.name() << " (" << to_string(a.kind()) << ", dim " << a.even_dim() << "|" << a.odd_dim() << ")\n";
  out << "valid: " << yes_no(r.ok()) << "\n";
  for (const auto& p : r.grading)
    out << "  grading: [" << a.label(p.left) << ", " << a.label(p.right) << "] = " << format_element(a, p.residual) << "\n";
  for (const auto& p : r.skew)
    out << "  skew: [" << a.label(p.left) << ", " << a.label(p.right) << "] residual " << format_element(a, p.residual) << "\n";
  for (const auto& t : r.identity)
    out << "  identity: (" << a.label(t.x) << ", " << a.label(t.y) << ", " << a.label(t.z) << ") residual "
        << format_element(a, t.residual) << "\n";
  return out.str();
}

std::string to_text(const Classification& c) {
  std::ostringstream out;
  out << "nilpotent: " << yes_no(c.is_nilpotent) << "\n";
  out << "solvable: " << yes_no(c.is_solvable) << "\n";
  if (c.nilindex) out << "s-nilindex: (" << c.nilindex->p << ", " << c.nilindex->q << ")\n";
  return out.str();
}

std::string to_text(const SuperAlgebra& a, const std::vector<Subspace>& chain, std::string_view which) {
  std::ostringstream out;
  out << which << " dims:";
  for (const auto& s : chain) out << " " << s.dim();
  out << "\n";
  for (std::size_t k = 0; k < chain.size(); ++k) {
    out << "  C^" << k << " = span{";
    const auto vs = chain[k].vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? ", " : "") << format_element(a, vs[i]);
    out << "}\n";
  }
  return out.str();
}

std::string to_text(const SuperAlgebra& a, const CharacteristicSequence& c) {
  std::ostringstream out;
  out << "characteristic sequence: (" << join(c.even_part) << " | " << join(c.odd_part) << ")";
  if (c.lower_bound) out << " (lower bound over default candidates)";
  out << "\n";
  if (c.even_witness) out << "even witness: " << format_element(a, *c.even_witness) << "\n";
  if (c.odd_witness) out << "odd witness: " << format_element(a, *c.odd_witness) << "\n";
  return out.str();
}

std::string to_text(const SuperAlgebra& a, const Subspace& s, std::string_view title) {
  std::ostringstream out;
  out << title << ": dim " << s.dim() << "\n";
  for (const auto& v : s.vectors()) out << "  " << format_element(a, v) << "\n";
  return out.str();
}

std::string to_text(const SuperAlgebra& a, const DerivationSpace& d) {
  std::ostringstream out;
  out << "Der_" << to_string(d.parity) << ": dim " << d.dim() << "\n";
  for (std::size_t k = 0; k < d.basis.size(); ++k) {
    out << "  D" << k + 1 << ":";
    const RatMatrix& m = d.basis[k].matrix;
    for (Index c = 0; c < m.cols(); ++c) {
      const Element img = m.col(c);
      if (!is_zero(img)) out << " " << a.label(c) << " -> " << format_element(a, img) << ";";
    }
    out << "\n";
  }
  return out.str();
}

std::string to_text(const InnernessReport& r) {
  std::ostringstream out;
  out << "dim Der_even: " << r.dim_der_even << " (inner " << r.dim_inner_even << ", outer " << r.outer_even << ")\n";
  out << "dim Der_odd: " << r.dim_der_odd << " (inner " << r.dim_inner_odd << ", outer " << r.outer_odd << ")\n";
  out << "all inner: " << yes_no(r.all_inner) << "\n";
  return out.str();
}

std::string to_text(const NilradicalVerdict& v) {
  std::ostringstream out;
  out << "ideal: " << yes_no(v.is_ideal) << "\n";
  out << "nilpotent: " << yes_no(v.is_nilpotent) << "\n";
  out << "complement acts non-nilpotently: " << yes_no(v.complement_acts_non_nilpotently) << "\n";
  out << "contains derived algebra: " << yes_no(v.contains_derived) << "\n";
  out << "codimension: " << v.codimension << "\n";
  out << "verdict: " << yes_no(v.verdict) << "\n";
  return out.str();
}

}  // namespace superalg
