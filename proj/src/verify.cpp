#include "superalg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superalg {

bool TheoremCheck::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

namespace {

std::string bits_to_string(const std::vector<std::vector<int>>& sets) {
  std::string s = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    s += i ? ", (" : "(";
    for (std::size_t j = 0; j < sets[i].size(); ++j) s += (j ? "," : "") + std::to_string(sets[i][j]);
    s += ")";
  }
  return s + "}";
}

std::string expect(Index got, Index want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

void check_valid(TheoremCheck& c, const SuperAlgebra& a) {
  const bool ok = validate(a).ok();
  c.lines.push_back({a.name() + " satisfies its identities", ok, ""});
}

void check_nilradical(TheoremCheck& c, const SuperAlgebra& solvable, const SuperAlgebra& nil) {
  std::vector<std::string> labels = nil.labels();
  const NilradicalVerdict v = nilradical_verdict(solvable, span_of_labels(solvable, labels));
  const Index gens = generator_count(nil);
  c.lines.push_back({nil.name() + " is the nilradical of " + solvable.name(), v.verdict, ""});
  c.lines.push_back({"codimension equals the generator count", v.codimension == gens, expect(v.codimension, gens)});
}

void check_extension(TheoremCheck& c, const ExtensionSpec& spec, const SuperAlgebra& target) {
  bool ok = false;
  std::string detail;
  try {
    ok = equal_laws(semidirect_extension(spec), target);
  } catch (const IdentityViolation& e) {
    detail = e.what();
  }
  c.lines.push_back({"torus extension reproduces " + target.name(), ok, detail});
}

void structure_lie(TheoremCheck& c, Family solvable, std::span<const Index> even, std::span<const Index> odd) {
  const SuperAlgebra nil = make_family(nilradical_family(solvable), even, odd);
  const SuperAlgebra sol = make_family(solvable, even, odd);
  check_valid(c, nil);
  check_valid(c, sol);
  const ExtensionSpec spec = standard_torus_spec(solvable, even, odd);
  check_extension(c, spec, sol);
  c.lines.push_back({"torus is nil-independent", nil_independence_check(spec), ""});
  check_nilradical(c, sol, nil);
  const Presentation z = z_basis_presentation(solvable, even, odd);
  check_valid(c, z.algebra);
  c.lines.push_back({"z-basis presentation is isomorphic to " + sol.name(),
                     equal_laws(change_of_basis(z.algebra, z.to_canonical), sol), ""});
}

void structure_leibniz(TheoremCheck& c, Family solvable, std::span<const Index> even, std::span<const Index> odd) {
  const bool filiform = solvable == Family::SLP;
  const SuperAlgebra nil = make_family(nilradical_family(solvable), even, odd);
  const SuperAlgebra sol = make_family(solvable, even, odd);
  check_valid(c, nil);
  check_valid(c, sol);
  check_extension(c, standard_torus_spec(solvable, even, odd), sol);
  check_nilradical(c, sol, nil);

  // The parameter values stated for the construction.
  const std::size_t nb = filiform ? 2 : even.size() + 1;
  const std::size_t np = filiform ? 1 : odd.size();
  std::vector<int> stated(nb + np, filiform ? 1 : 0);
  stated[0] = filiform ? 0 : 1;
  const auto hits = sweep_leibniz_template(even, odd, filiform);
  c.lines.push_back({"b-parameter sweep over {0,1} admits exactly " + bits_to_string({stated}),
                     hits == std::vector<std::vector<int>>{stated}, "admitted " + bits_to_string(hits)});
}

void dimensions(TheoremCheck& c, const SuperAlgebra& a, Index even_want, Index odd_want) {
  const InnernessReport r = innerness_report(a);
  c.lines.push_back({"dim Der_even(" + a.name() + ")", r.dim_der_even == even_want, expect(r.dim_der_even, even_want)});
  c.lines.push_back({"dim Der_odd(" + a.name() + ")", r.dim_der_odd == odd_want, expect(r.dim_der_odd, odd_want)});
  c.lines.push_back({"every superderivation is inner", r.all_inner, ""});
}

Index sum(std::span<const Index> v) { return std::accumulate(v.begin(), v.end(), Index{0}); }

}  // namespace

TheoremCheck verify_theorem(std::string_view theorem, std::span<const Index> even, std::span<const Index> odd) {
  TheoremCheck c{std::string(theorem), {}};
  const auto k = static_cast<Index>(even.size());
  const auto p = static_cast<Index>(odd.size());
  if (theorem == "3.1") {
    structure_lie(c, Family::SL, even, odd);
  } else if (theorem == "4.1") {
    structure_lie(c, Family::SN, even, odd);
  } else if (theorem == "5.1") {
    structure_leibniz(c, Family::SLP, even, odd);
  } else if (theorem == "6.1") {
    structure_leibniz(c, Family::SNP, even, odd);
  } else if (theorem == "7.1") {
    const SuperAlgebra a = make_family(Family::SL, even, odd);
    dimensions(c, a, even[0] + 3, odd[0]);
  } else if (theorem == "7.2") {
    const SuperAlgebra a = make_family(Family::SN, even, odd);
    dimensions(c, a, (sum(even) + 1) + k + 1 + p, sum(odd));
  } else if (theorem == "7.3") {
    dimensions(c, make_family(Family::SLP, even, odd), 4, 0);
  } else if (theorem == "7.4") {
    dimensions(c, make_family(Family::SNP, even, odd), k + p + 2, 0);
  } else {
    throw ParameterError("unknown theorem '" + std::string(theorem) + "'");
  }
  return c;
}

Json to_json(const TheoremCheck& c) {
  Json lines = Json::array();
  for (const auto& l : c.lines) lines.push_back({{"check", l.name}, {"passed", l.passed}, {"detail", l.detail}});
  return Json{{"theorem", c.theorem}, {"passed", c.passed()}, {"checks", std::move(lines)}};
}

std::string to_text(const TheoremCheck& c) {
  std::ostringstream out;
  for (const auto& l : c.lines) {
    out << (l.passed ? "PASS " : "FAIL ") << l.name;
    if (!l.detail.empty()) out << " (" << l.detail << ")";
    out << "\n";
  }
  out << "theorem " << c.theorem << ": " << (c.passed() ? "verified" : "NOT verified") << "\n";
  return out.str();
}

}  // namespace superalg
