#include "helpers.hpp"

#include "superalg/families.hpp"
#include "superalg/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace superalg;
using test_support::el;

namespace {

/// Table of L^{3,2} written out by hand, only the brackets with x1 on the left.
SuperAlgebra hand_l32() {
  return SuperAlgebra::with_skew_completion(Kind::lie_super, {"x1", "x2", "x3"}, {"y1", "y2"},
                                            {{"x1", "x2", {{"x3", 1}}}, {"x1", "y1", {{"y2", 1}}}});
}

bool has_triple(const SuperAlgebra& a, const ValidationReport& r, const std::string& x, const std::string& y,
                const std::string& z) {
  for (const auto& t : r.identity)
    if (a.label(t.x) == x && a.label(t.y) == y && a.label(t.z) == z) return true;
  return false;
}

Element random_element(const SuperAlgebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Element v(a.dim());
  for (Index i = 0; i < a.dim(); ++i) v(i) = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_SUITE("core_superalgebra") {
  TEST_CASE("parity arithmetic is mod 2") {
    CHECK(Parity::even + Parity::even == Parity::even);
    CHECK(Parity::even + Parity::odd == Parity::odd);
    CHECK(Parity::odd + Parity::odd == Parity::even);
    CHECK(super_sign(Parity::odd, Parity::odd) == -1);
    CHECK(super_sign(Parity::even, Parity::odd) == 1);
  }

  TEST_CASE("bracket evaluation on L^{3,2}") {
    const SuperAlgebra a = model_filiform_lie(3, 2, false);
    CHECK(bracket(a, el(a, "x1"), el(a, "x2")) == el(a, "x3"));
    CHECK(bracket(a, el(a, "x2"), el(a, "x1")) == el(a, "-x3"));
    CHECK(is_zero(bracket(a, el(a, "y1"), el(a, "y1"))));
    CHECK(bracket(a, el(a, "2*x1"), el(a, "x2 + y1")) == el(a, "2*x3 + 2*y2"));
    CHECK_THROWS_AS(el(a, "x9"), UnknownLabel);
  }

  TEST_CASE("bracket is bilinear") {
    std::mt19937 rng(11);
    const SuperAlgebra a = model_filiform_lie(4, 3, true);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      const Element u = random_element(a, rng), v = random_element(a, rng), w = random_element(a, rng);
      const Rational p(c(rng)), q(c(rng), 7);
      CHECK(bracket(a, Element(p * u + q * v), w) == Element(p * bracket(a, u, w) + q * bracket(a, v, w)));
      CHECK(bracket(a, w, Element(p * u + q * v)) == Element(p * bracket(a, w, u) + q * bracket(a, w, v)));
    }
  }

  TEST_CASE("label and table checks at construction") {
    CHECK_THROWS_AS(SuperAlgebra(Kind::lie_super, {"a", "a"}, {}, {}), InvalidSpec);
    CHECK_THROWS_AS(SuperAlgebra(Kind::lie_super, {"a"}, {"a"}, {}), InvalidSpec);
    CHECK_THROWS_AS(SuperAlgebra(Kind::lie_super, {"a"}, {}, {{"a", "b", {{"a", 1}}}}), UnknownLabel);
    CHECK_THROWS_AS(SuperAlgebra(Kind::lie_super, {"a", "b"}, {}, {{"a", "b", {{"a", 1}}}, {"a", "b", {{"b", 1}}}}),
                    InvalidSpec);
  }

  TEST_CASE("skew completion") {
    CHECK(equal_laws(hand_l32(), model_filiform_lie(3, 2, false)));
    CHECK_THROWS_AS(SuperAlgebra::with_skew_completion(Kind::lie_super, {"x1", "x2", "x3"}, {},
                                                       {{"x1", "x2", {{"x3", 1}}}, {"x2", "x1", {{"x3", 1}}}}),
                    ValidationError);
    // Odd-odd brackets are symmetric: [y1, y2] = [y2, y1].
    const SuperAlgebra s = SuperAlgebra::with_skew_completion(Kind::lie_super, {"x"}, {"y1", "y2"},
                                                              {{"y1", "y2", {{"x", 1}}}});
    CHECK(bracket(s, el(s, "y2"), el(s, "y1")) == el(s, "x"));
    CHECK(validate(s).ok());
  }

  TEST_CASE("validate accepts the family laws") {
    CHECK(validate(model_filiform_lie(4, 3, true)).ok());
    CHECK(validate(filiform_leibniz(3, 2, false)).ok());
    CHECK(validate(filiform_leibniz(3, 2, true)).ok());
  }

  TEST_CASE("Lie superalgebras also satisfy the super Leibniz identity") {
    const std::vector<Index> e{2, 2}, o{1, 2};
    for (const auto& a : {model_filiform_lie(3, 2, false), model_filiform_lie(4, 3, true),
                          model_nilpotent_lie(e, o, false), model_nilpotent_lie(e, o, true)})
      CHECK(validate(a, Kind::leibniz_super).ok());
  }

  TEST_CASE("a corrupted stored product is reported with its triple") {
    // Store [x1, x2] = x2 but keep [x2, x1] = -x3.
    std::vector<BracketEntry> table = model_filiform_lie(3, 2, false).table_entries();
    for (auto& e : table)
      if (e.left == "x1" && e.right == "x2") e.result = {{"x2", 1}};
    const SuperAlgebra bad(Kind::lie_super, {"x1", "x2", "x3"}, {"y1", "y2"}, table);
    const ValidationReport r = validate(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.skew.empty());
    REQUIRE(has_triple(bad, r, "x1", "x1", "x2"));
    for (const auto& t : r.identity)
      if (bad.label(t.x) == "x1" && bad.label(t.y) == "x1" && bad.label(t.z) == "x2")
        CHECK(t.residual == el(bad, "x2"));  // [x1,[x1,x2]] + [x1,[x2,x1]] = x2 + 0
  }

  TEST_CASE("grading violations are reported") {
    const SuperAlgebra bad(Kind::leibniz_super, {"x"}, {"y"}, {{"x", "x", {{"y", 1}}}});
    const ValidationReport r = validate(bad);
    CHECK(r.grading.size() == 1);
  }

  TEST_CASE("a non-Leibniz law fails the Leibniz check") {
    // [a,[a,a]] = [a,b] = a while [[a,a],a] - [[a,a],a] = 0.
    const SuperAlgebra bad(Kind::leibniz_super, {"a", "b"}, {}, {{"a", "a", {{"b", 1}}}, {"a", "b", {{"a", 1}}}});
    CHECK_FALSE(validate(bad).identity.empty());
  }

  TEST_CASE("multiplication matrices") {
    const SuperAlgebra lp = filiform_leibniz(3, 2, false);
    const RatMatrix r = multiplication_matrix(lp, el(lp, "x1"), Side::right);
    CHECK(RatVector(r * el(lp, "x2")) == el(lp, "x3"));
    CHECK(RatVector(r * el(lp, "y1")) == el(lp, "y2"));
    CHECK(is_zero(RatVector(r * el(lp, "x1"))));
    CHECK(is_zero(multiplication_matrix(lp, el(lp, "x1"), Side::left)));
    CHECK(is_zero(multiplication_matrix(lp, lp.zero(), Side::left)));
    CHECK_THROWS_AS(multiplication_matrix(lp, el(lp, "x1 + y1"), Side::left), NotHomogeneous);
  }

  TEST_CASE("change of basis") {
    const SuperAlgebra a = model_filiform_lie(3, 2, false);
    BasisChange id;
    for (const auto& l : a.even_labels()) id.even.push_back({l, {{l, 1}}});
    for (const auto& l : a.odd_labels()) id.odd.push_back({l, {{l, 1}}});
    CHECK(equal_laws(change_of_basis(a, id), a));

    // New x1 is 2 x1 of the old basis.
    BasisChange scale = id;
    scale.even[0].second = {{"x1", 2}};
    const SuperAlgebra s = change_of_basis(a, scale);
    CHECK(bracket(s, el(s, "x1"), el(s, "x2")) == el(s, "2*x3"));
    CHECK(bracket(s, el(s, "x1"), el(s, "y1")) == el(s, "2*y2"));
    CHECK(bracket(s, el(s, "x2"), el(s, "x1")) == el(s, "-2*x3"));
    CHECK(validate(s).ok());

    BasisChange back = id;
    back.even[0].second = {{"x1", Rational(1, 2)}};
    CHECK(equal_laws(change_of_basis(s, back), a));

    BasisChange singular = id;
    singular.even[1].second = {{"x1", 1}};
    CHECK_THROWS_AS(change_of_basis(a, singular), SingularMap);

    BasisChange parity = id;
    parity.even[1].second = {{"y1", 1}};
    CHECK_THROWS_AS(change_of_basis(a, parity), ParityViolation);
  }

  TEST_CASE("change of basis and its inverse restore the table") {
    const SuperAlgebra a = model_filiform_lie(4, 3, true);
    BasisChange p, q;
    // Unitriangular mixing inside each parity block.
    for (Index i = 0; i < a.even_dim(); ++i) {
      LinearCombination img{{a.label(i), 1}};
      if (i + 1 < a.even_dim()) img.push_back({a.label(i + 1), 3});
      p.even.push_back({a.label(i), img});
    }
    for (Index i = a.even_dim(); i < a.dim(); ++i) p.odd.push_back({a.label(i), {{a.label(i), -2}}});
    const SuperAlgebra b = change_of_basis(a, p);
    CHECK(validate(b).ok());
    // Columns of P^-1 give the inverse map.
    RatMatrix pm = RatMatrix::Zero(a.dim(), a.dim());
    for (Index i = 0; i < a.even_dim(); ++i) pm.col(i) = a.element(p.even[static_cast<std::size_t>(i)].second);
    for (Index i = a.even_dim(); i < a.dim(); ++i)
      pm.col(i) = a.element(p.odd[static_cast<std::size_t>(i - a.even_dim())].second);
    const RatMatrix inv = inverse(pm);
    for (Index i = 0; i < a.dim(); ++i) {
      auto& side = i < a.even_dim() ? q.even : q.odd;
      side.push_back({a.label(i), b.terms(inv.col(i))});
    }
    CHECK(equal_laws(change_of_basis(b, q), a));
  }

  TEST_CASE("equal_laws") {
    const SuperAlgebra sl = model_filiform_lie(3, 2, true);
    CHECK(equal_laws(sl, sl));
    std::vector<std::string> even = {"x1", "x2", "x3", "t1", "t2", "t3"};
    const SuperAlgebra zero_torus(Kind::lie_super, even, {"y1", "y2"}, model_filiform_lie(3, 2, false).table_entries());
    CHECK_FALSE(equal_laws(sl, zero_torus));
    CHECK_THROWS_AS(equal_laws(sl, model_filiform_lie(3, 2, false)), BasisMismatch);
    CHECK_THROWS_AS(equal_laws(filiform_leibniz(3, 2, false), model_filiform_lie(3, 2, false)), BasisMismatch);
  }

  TEST_CASE("linear combination syntax") {
    const SuperAlgebra a = model_filiform_lie(3, 2, false);
    CHECK(el(a, "2*x1 - 1/2*y2 + x2") == test_support::vec({2, 1, 0, 0, 0}) + Element(el(a, "-1/2*y2")));
    CHECK(format_element(a, el(a, "-x1 + 3/4*y1")) == "-x1 + 3/4*y1");
    CHECK(format_element(a, a.zero()) == "0");
    CHECK_THROWS_AS(el(a, "2 x1"), ParseError);
    CHECK_THROWS_AS(el(a, ""), ParseError);
    const auto p = parity_of(a, el(a, "x1 + y1"));
    CHECK_FALSE(p.has_value());
    CHECK(parity_of(a, el(a, "y2")) == Parity::odd);
  }
}
