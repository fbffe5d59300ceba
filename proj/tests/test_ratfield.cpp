#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "translatio/errors.hpp"
#include "translatio/ratfield.hpp"
#include "translatio/repweights.hpp"
#include "translatio/triangle.hpp"

using namespace translatio;

namespace {

Weight W(std::initializer_list<long> cs) {
  RatVec v;
  for (long c : cs) v.push_back(Rat(c));
  return Weight(std::move(v));
}

FactoredRational form(std::vector<long> coeffs, long shift, long exp = 1) {
  return FactoredRational::from_form(std::move(coeffs), Rat(shift), exp);
}

}  // namespace

TEST_CASE("canonical forms extract sign and gcd") {
  auto [s1, f1] = canonicalize_form({-1}, Rat(-2));
  REQUIRE(f1.has_value());
  CHECK(s1 == -1);
  CHECK(f1->coeffs == std::vector<long>{1});
  CHECK(f1->shift == 2);

  auto [s2, f2] = canonicalize_form({2, -4}, Rat(6));
  REQUIRE(f2.has_value());
  CHECK(s2 == 2);
  CHECK(f2->coeffs == std::vector<long>{1, -2});
  CHECK(f2->shift == 3);

  auto [s3, f3] = canonicalize_form({0, 0}, Rat(5));
  CHECK(!f3.has_value());
  CHECK(s3 == 5);
}

TEST_CASE("factored arithmetic") {
  FactoredRational t = form({1}, 0);
  FactoredRational tp1 = form({1}, 1);
  FactoredRational tm1 = form({1}, -1);

  CHECK(fr_equal(fr_div(t, t), FactoredRational::one()));
  CHECK(fr_equal(fr_mul(t, fr_inverse(t)), FactoredRational::one()));
  // ((t+1)(t-1))/(t-1) = t+1
  CHECK(fr_equal(fr_div(fr_mul(tp1, tm1), tm1), tp1));
  CHECK_THROWS_AS(fr_div(t, FactoredRational::zero()), ArithmeticError);
  CHECK_THROWS_AS(fr_inverse(FactoredRational::zero()), ArithmeticError);
  CHECK(fr_equal(fr_mul(FactoredRational::zero(), t), FactoredRational::zero()));
}

TEST_CASE("shift substitution") {
  RootSystem a1("A1");
  FactoredRational t = form({1}, 0);
  CHECK(fr_equal(fr_shift(t, a1.rho()), form({1}, 1)));
  CHECK(fr_equal(fr_shift(t, W({0})), t));

  // A2: t1 + t2 + 1 shifted by (1,1) -> t1 + t2 + 3
  FactoredRational f = form({1, 1}, 1);
  CHECK(fr_equal(fr_shift(f, W({1, 1})), form({1, 1}, 3)));
}

TEST_CASE("dot substitution") {
  RootSystem a1("A1");
  WeylElement e = WeylElement::identity(1);
  WeylElement s = a1.simple_reflection(0);
  FactoredRational t = form({1}, 0);
  CHECK(fr_equal(fr_dot_substitute(t, a1, e), t));
  // t(s.tau) = -t - 2 = -(t + 2)
  FactoredRational expect = fr_mul(FactoredRational(Rat(-1)), form({1}, 2));
  CHECK(fr_equal(fr_dot_substitute(t, a1, s), expect));
  // involution
  CHECK(fr_equal(fr_dot_substitute(fr_dot_substitute(t, a1, s), a1, s), t));
}

TEST_CASE("dot substitution composes contravariantly") {
  RootSystem a2("A2");
  FactoredRational f = fr_mul(form({1, 0}, 2), form({1, 1}, -1, 2));
  for (const auto& w1 : a2.weyl_group())
    for (const auto& w2 : a2.weyl_group()) {
      FactoredRational lhs = fr_dot_substitute(fr_dot_substitute(f, a2, w1), a2, w2);
      FactoredRational rhs = fr_dot_substitute(f, a2, w1 * w2);
      CHECK(fr_equal(lhs, rhs));
    }
}

TEST_CASE("evaluation and poles") {
  CHECK(fr_evaluate(FactoredRational::one(), W({17})) == 1);
  FactoredRational q = fr_div(form({1}, 0), form({1}, -1));  // t/(t-1)
  CHECK(fr_evaluate(q, W({2})) == 2);
  CHECK_THROWS_AS(fr_evaluate(q, W({1})), PoleError);
}

TEST_CASE("expansion") {
  // (t+1)^2 -> t^2 + 2t + 1 over denominator 1
  auto [num, den] = fr_expand(form({1}, 1, 2), 1);
  SparsePoly expect(1);
  expect.add_term({2}, Rat(1));
  expect.add_term({1}, Rat(2));
  expect.add_term({0}, Rat(1));
  CHECK(num == expect);
  CHECK(den == SparsePoly::constant(1, Rat(1)));

  auto [n1, d1] = fr_expand(FactoredRational::one(), 1);
  CHECK(n1 == SparsePoly::constant(1, Rat(1)));
  CHECK(d1 == SparsePoly::constant(1, Rat(1)));

  // (t^2-1)/(t-1) handed over factored: map cancellation leaves t+1
  FactoredRational f = fr_div(fr_mul(form({1}, 1), form({1}, -1)), form({1}, -1));
  auto [n2, d2] = fr_expand(f, 1);
  SparsePoly tp1(1);
  tp1.add_term({1}, Rat(1));
  tp1.add_term({0}, Rat(1));
  CHECK(n2 == tp1);
  CHECK(d2 == SparsePoly::constant(1, Rat(1)));
}

TEST_CASE("expand then refactor round trip on products of distinct forms") {
  // peel the expansion back into linear factors by exact division and
  // compare the reassembled product with the original under fr_equal
  FactoredRational f = fr_mul(fr_mul(form({1, 0}, 1), form({0, 1}, -2)), form({1, 1}, 0));
  auto [num, den] = fr_expand(f, 2);
  CHECK(den == SparsePoly::constant(2, Rat(1)));

  SparsePoly rest = num;
  FactoredRational rebuilt = FactoredRational::one();
  for (const auto& [lin, e] : f.factors()) {
    SparsePoly divisor = SparsePoly::linear(lin.coeffs, lin.shift);
    for (long k = 0; k < e; ++k) {
      auto quot = poly_divide_exact(rest, divisor);
      REQUIRE(quot.has_value());
      rest = *quot;
      rebuilt.multiply_form(lin.coeffs, lin.shift, 1);
    }
  }
  // the leftover is the constant
  REQUIRE(rest.terms().size() == 1);
  rebuilt = fr_mul(rebuilt, FactoredRational(rest.terms().begin()->second));
  CHECK(fr_equal(rebuilt, f));

  // and the expansion agrees pointwise with the factored product
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      Weight p = W({x, y});
      CHECK(num.evaluate(p.coords) == fr_evaluate(f, p));
    }
}

TEST_CASE("exact polynomial division") {
  SparsePoly t = SparsePoly::variable(1, 0);
  SparsePoly one = SparsePoly::constant(1, Rat(1));
  SparsePoly p = t * t - one;       // t^2 - 1
  SparsePoly q = t + one;           // t + 1
  auto quot = poly_divide_exact(p, q);
  REQUIRE(quot.has_value());
  CHECK(*quot == t - one);

  CHECK(*poly_divide_exact(p, one) == p);
  CHECK(!poly_divide_exact(t, q).has_value());

  SparsePoly t1 = SparsePoly::variable(2, 0), t2 = SparsePoly::variable(2, 1);
  SparsePoly one2 = SparsePoly::constant(2, Rat(1));
  auto quot2 = poly_divide_exact((t1 + one2) * (t2 + one2), t1 + one2);
  REQUIRE(quot2.has_value());
  CHECK(*quot2 == t2 + one2);
}

TEST_CASE("division round trip on random polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_poly = [&](int nvars) {
    SparsePoly p(nvars);
    for (int k = 0; k < 5; ++k) {
      std::vector<int> e(static_cast<size_t>(nvars));
      for (auto& x : e) x = std::abs(coef(rng)) % 3;
      p.add_term(e, Rat(coef(rng)));
    }
    if (p.is_zero()) p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), Rat(1));
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    SparsePoly p = random_poly(2), q = random_poly(2);
    auto quot = poly_divide_exact(p * q, q);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
  }
}

TEST_CASE("convolution") {
  RootSystem a1("A1");
  WeightMultiset e1 = weight_multiset(a1, W({1}));
  SparsePoly t = SparsePoly::variable(1, 0);

  // p = 1 counts the weights
  CHECK(convolve(e1, SparsePoly::constant(1, Rat(1))) == SparsePoly::constant(1, Rat(2)));
  // E(0) is the identity
  WeightMultiset e0 = weight_multiset(a1, W({0}));
  CHECK(convolve(e0, t * t) == t * t);
  // E(1), p = t: (t+1) + (t-1) = 2t
  CHECK(convolve(e1, t) == Rat(2) * t);
}

TEST_CASE("convolution is linear and additive over disjoint unions") {
  RootSystem a1("A1");
  WeightMultiset e2 = weight_multiset(a1, W({2}));
  SparsePoly t = SparsePoly::variable(1, 0);
  SparsePoly p = t * t + Rat(3) * t;
  SparsePoly q = t + SparsePoly::constant(1, Rat(5));
  CHECK(convolve(e2, p + q) == convolve(e2, p) + convolve(e2, q));

  WeightMultiset merged = e2;
  WeightMultiset e0 = weight_multiset(a1, W({0}));
  for (const auto& [mu, m] : e0.entries) merged.entries[mu] += m;
  CHECK(convolve(merged, p) == convolve(e2, p) + convolve(e0, p));
}

TEST_CASE("sym produces dot-invariant polynomials") {
  RootSystem a1("A1");
  SparsePoly t = SparsePoly::variable(1, 0);
  // two group elements: t * (-t-2)
  SparsePoly expect = t * (Rat(-1) * t - SparsePoly::constant(1, Rat(2)));
  CHECK(sym(a1, t) == expect);
  CHECK(sym(a1, SparsePoly::constant(1, Rat(3))) == SparsePoly::constant(1, Rat(9)));

  RootSystem a2("A2");
  SparsePoly t1 = SparsePoly::variable(2, 0);
  SparsePoly s = sym(a2, t1);
  CHECK(is_dot_invariant(a2, s));
  for (const auto& w : a2.weyl_group()) CHECK(poly_dot_substitute(s, a2, w) == s);
}

TEST_CASE("printing") {
  RootSystem a1("A1");
  FactoredRational q = fr_div(form({1}, 0), form({1}, -1));
  CHECK(fr_to_string(q, &a1) == "⟨τ,α∨⟩ / (⟨τ,α∨⟩ - 1)");
  CHECK(fr_to_string(FactoredRational::one(), &a1) == "1");
  CHECK(fr_to_string(FactoredRational::zero(), &a1) == "0");
  CHECK(fr_to_string(q, &a1, FormStyle::Latex) ==
        "\\frac{\\langle\\tau,\\alpha^{\\vee}\\rangle}{(\\langle\\tau,\\alpha^{\\vee}\\rangle - 1)}");
  SparsePoly t = SparsePoly::variable(1, 0);
  CHECK(poly_to_string(t * t + Rat(2) * t + SparsePoly::constant(1, Rat(1))) == "t^2 + 2 t + 1");
}
