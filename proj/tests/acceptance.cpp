// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 7   run a single criterion
//
// Exit status is 0 iff every selected criterion passes.

#include "oracle.hpp"

#include "superalg/derivations.hpp"
#include "superalg/extension.hpp"
#include "superalg/families.hpp"
#include "superalg/linalg.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace superalg;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

using Blocks = std::pair<std::vector<Index>, std::vector<Index>>;

const std::vector<std::pair<Index, Index>> sl_grid{{3, 2}, {4, 3}, {5, 2}, {6, 4}};
const std::vector<std::pair<Index, Index>> slp_grid{{3, 2}, {4, 3}, {5, 3}};
const std::vector<Blocks> sn_grid{{{2}, {2}}, {{2, 2}, {1, 2}}, {{3}, {3}}};
const std::vector<Blocks> snp_grid{{{2}, {2}}, {{2, 2}, {1, 2}}};

Index sum(const std::vector<Index>& v) {
  Index s = 0;
  for (Index x : v) s += x;
  return s;
}

std::string dims(const InnernessReport& r) {
  return std::to_string(r.dim_der_even) + "|" + std::to_string(r.dim_der_odd) +
         (r.all_inner ? " inner" : " not inner");
}

void check_der(Outcome& o, const SuperAlgebra& a, Index even, Index odd) {
  const InnernessReport r = innerness_report(a);
  o.require(r.dim_der_even == even && r.dim_der_odd == odd && r.all_inner,
            a.name() + ": got " + dims(r) + ", expected " + std::to_string(even) + "|" + std::to_string(odd));
}

void criterion1(Outcome& o) {
  for (auto [n, m] : sl_grid) check_der(o, model_filiform_lie(n, m, true), n + 3, m);
}

void criterion2(Outcome& o) {
  for (const auto& [e, d] : sn_grid) {
    const Index k = static_cast<Index>(e.size()), p = static_cast<Index>(d.size());
    check_der(o, model_nilpotent_lie(e, d, true), (sum(e) + 1) + k + 1 + p, sum(d));
  }
}

void criterion3(Outcome& o) {
  for (auto [n, m] : slp_grid) check_der(o, filiform_leibniz(n, m, true), 4, 0);
}

void criterion4(Outcome& o) {
  for (const auto& [e, d] : snp_grid) {
    const Index k = static_cast<Index>(e.size()), p = static_cast<Index>(d.size());
    check_der(o, model_nilpotent_leibniz(e, d, true), k + p + 2, 0);
  }
}

std::vector<SuperAlgebra> all_family_members() {
  std::vector<SuperAlgebra> out;
  for (auto [n, m] : sl_grid) {
    out.push_back(model_filiform_lie(n, m, false));
    out.push_back(model_filiform_lie(n, m, true));
  }
  for (auto [n, m] : slp_grid) {
    out.push_back(filiform_leibniz(n, m, false));
    out.push_back(filiform_leibniz(n, m, true));
  }
  for (const auto& [e, d] : sn_grid) {
    out.push_back(model_nilpotent_lie(e, d, false));
    out.push_back(model_nilpotent_lie(e, d, true));
  }
  for (const auto& [e, d] : snp_grid) {
    out.push_back(model_nilpotent_leibniz(e, d, false));
    out.push_back(model_nilpotent_leibniz(e, d, true));
  }
  return out;
}

void criterion5(Outcome& o) {
  for (const auto& a : all_family_members()) {
    const ValidationReport r = validate(a);
    o.require(r.ok(), a.name() + ": " + std::to_string(r.grading.size() + r.skew.size() + r.identity.size()) +
                          " violations");
  }
}

void criterion6(Outcome& o) {
  const std::vector<Index> n{4}, m{3}, e{2}, d{2};
  const Presentation p = z_basis_presentation(Family::SL, n, m);
  o.require(equal_laws(change_of_basis(p.algebra, p.to_canonical), model_filiform_lie(4, 3, true)),
            "SL^{4,3} z-presentation differs");
  const Presentation q = z_basis_presentation(Family::SN, e, d);
  o.require(equal_laws(change_of_basis(q.algebra, q.to_canonical), model_nilpotent_lie(e, d, true)),
            "SN(2,1 | 2) z-presentation differs");
}

std::string tuples(const std::vector<std::vector<int>>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += i ? ", (" : "(";
    for (std::size_t j = 0; j < v[i].size(); ++j) s += (j ? "," : "") + std::to_string(v[i][j]);
    s += ")";
  }
  return s + "}";
}

void criterion7(Outcome& o) {
  const std::vector<Index> n{3}, m{2};
  const auto lp = sweep_leibniz_template(n, m, true);
  o.require(lp == std::vector<std::vector<int>>{{0, 1, 1}}, "filiform sweep admits " + tuples(lp));

  for (const auto& [e, d] : snp_grid) {
    std::vector<int> expected(e.size() + 1 + d.size(), 0);
    expected[0] = 1;
    const auto got = sweep_leibniz_template(e, d, false);
    o.require(got == std::vector<std::vector<int>>{expected},
              model_nilpotent_leibniz(e, d, false).name() + " sweep admits " + tuples(got) + ", expected " +
                  tuples({expected}));
  }
}

void criterion8(Outcome& o) {
  for (auto [n, m] : sl_grid) {
    const SuperAlgebra l = model_filiform_lie(n, m, false);
    const CharacteristicSequence c = characteristic_sequence(l);
    o.require(c.even_part == std::vector<Index>{n - 1, 1} && c.odd_part == std::vector<Index>{m},
              l.name() + ": wrong characteristic sequence");
    o.require(c.even_witness && *c.even_witness == l.element({{"x1", 1}}), l.name() + ": witness is not x1");
    o.require(generator_count(l) == 3, l.name() + ": generator count");
  }
  for (auto [n, m] : slp_grid) {
    const SuperAlgebra lp = filiform_leibniz(n, m, false);
    o.require(generator_count(lp) == 3, lp.name() + ": generator count");
  }
  for (bool leibniz : {false, true})
    for (const auto& [e, d] : leibniz ? snp_grid : sn_grid) {
      const Index k = static_cast<Index>(e.size()), p = static_cast<Index>(d.size());
      const SuperAlgebra nn = leibniz ? model_nilpotent_leibniz(e, d, false) : model_nilpotent_lie(e, d, false);
      o.require(generator_count(nn) == k + 1 + p, nn.name() + ": generator count");
    }

  auto verdict = [&](const SuperAlgebra& sol, const SuperAlgebra& nil) {
    const NilradicalVerdict v = nilradical_verdict(sol, span_of_labels(sol, nil.labels()));
    o.require(v.verdict && v.codimension == generator_count(nil), sol.name() + ": nilradical verdict");
  };
  for (auto [n, m] : sl_grid) verdict(model_filiform_lie(n, m, true), model_filiform_lie(n, m, false));
  for (auto [n, m] : slp_grid) verdict(filiform_leibniz(n, m, true), filiform_leibniz(n, m, false));
  for (const auto& [e, d] : sn_grid) verdict(model_nilpotent_lie(e, d, true), model_nilpotent_lie(e, d, false));
  for (const auto& [e, d] : snp_grid)
    verdict(model_nilpotent_leibniz(e, d, true), model_nilpotent_leibniz(e, d, false));
}

BasisChange random_basis_change(const SuperAlgebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  for (;;) {
    RatMatrix p = RatMatrix::Zero(a.dim(), a.dim());
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j)
        if (a.parity(i) == a.parity(j)) p(i, j) = c(rng);
    if (rank(p) < a.dim()) continue;
    BasisChange map;
    for (Index j = 0; j < a.dim(); ++j)
      (j < a.even_dim() ? map.even : map.odd).push_back({a.label(j), a.terms(p.col(j))});
    return map;
  }
}

RatMatrix from_oracle(const oracle::Mat& m) {
  const auto rows = static_cast<Index>(m.size());
  const auto cols = rows ? static_cast<Index>(m[0].size()) : 0;
  RatMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      out(i, j) = parse_rational(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str());
  return out;
}

bool same(const RatVector& v, const std::vector<oracle::Frac>& w) {
  if (v.size() != static_cast<Index>(w.size())) return false;
  for (Index i = 0; i < v.size(); ++i)
    if (to_string(v(i)) != w[static_cast<std::size_t>(i)].str()) return false;
  return true;
}

void criterion9(Outcome& o) {
  const std::vector<Index> e{2}, d{2}, e2{2, 2}, d2{1, 2};
  const std::vector<SuperAlgebra> grid{model_filiform_lie(3, 2, false), model_filiform_lie(4, 3, true),
                                       filiform_leibniz(3, 2, false),   filiform_leibniz(4, 3, true),
                                       model_nilpotent_lie(e2, d2, true), model_nilpotent_leibniz(e, d, true)};
  std::mt19937 rng(97);
  for (const auto& a : grid) {
    std::vector<SuperDerivation> all;
    for (Parity p : {Parity::even, Parity::odd}) {
      const DerivationSpace der = derivation_space(a, p);
      std::vector<RatVector> flat;
      for (const auto& dd : der.basis) {
        o.require(is_superderivation(a, dd).ok, a.name() + ": (a) basis member fails the product rule");
        flat.push_back(flatten(dd.matrix));
        all.push_back(dd);
      }
      for (const auto& in : inner_space(a, p).basis)
        o.require(span_contains(flat, flatten(in.matrix)).has_value(), a.name() + ": (b) inner not in Der");
    }
    if (!all.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int trial = 0; trial < 10; ++trial)
        o.require(is_superderivation(a, super_commutator(all[pick(rng)], all[pick(rng)])).ok,
                  a.name() + ": (c) commutator leaves Der");
    }
    const SuperAlgebra b = change_of_basis(a, random_basis_change(a, rng));
    for (Parity p : {Parity::even, Parity::odd})
      o.require(derivation_space(a, p).dim() == derivation_space(b, p).dim(), a.name() + ": (d) dim Der changed");
  }

  std::uniform_int_distribution<int> size(1, 8);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(rng), cols = size(rng);
    const oracle::Mat m = oracle::random_matrix(rng, rows, cols, 5);
    const RatMatrix a = from_oracle(m);
    const auto ours = rref(a);
    const auto ref = oracle::gauss_jordan(m);
    bool ok = ours.rank() == static_cast<Index>(ref.pivots.size());
    for (std::size_t i = 0; ok && i < ref.pivots.size(); ++i)
      ok = ours.pivots[i] == ref.pivots[i] && same(ours.reduced.row(static_cast<Index>(i)).transpose(), ref.rows[i]);
    const auto ns = nullspace(a);
    const auto ref_ns = oracle::nullspace(m, cols);
    ok = ok && ns.size() == ref_ns.size();
    for (std::size_t i = 0; ok && i < ns.size(); ++i) ok = same(ns[i], ref_ns[i]);
    if (!ok) ++mismatches;
  }
  o.require(mismatches == 0, "(e) " + std::to_string(mismatches) + " of 200 random matrices disagree");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion> criteria{
    {1, "SL derivation dimensions and innerness", criterion1},
    {2, "SN derivation dimensions and innerness", criterion2},
    {3, "SLP derivation dimensions and innerness", criterion3},
    {4, "SNP derivation dimensions and innerness", criterion4},
    {5, "identities hold for all eight families", criterion5},
    {6, "z-presentations replay to the canonical laws", criterion6},
    {7, "b-parameter sweeps", criterion7},
    {8, "characteristic sequences, generator counts, nilradicals", criterion8},
    {9, "oracle property tests", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all_passed = all_passed && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    if (!o.passed) std::cout << " [" << o.detail.str() << "]";
    std::cout << "\n";
  }
  return all_passed ? 0 : 1;
}
