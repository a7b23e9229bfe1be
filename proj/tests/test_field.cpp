#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tsplash/field.hpp"

using namespace tsplash;

TEST_CASE("prime power decomposition") {
  CHECK(prime_power(8) == std::make_pair(2, 3));
  CHECK(prime_power(9) == std::make_pair(3, 2));
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("extension tables agree with schoolbook arithmetic") {
  for (int q : {2, 3, 5}) {
    auto ctx = FieldCtx::create(q);
    oracle::Cubic o{q, ctx.poly().t0, ctx.poly().t1, ctx.poly().t2};
    const FiniteField& E = ctx.ext();
    for (int a = 0; a < E.size(); ++a)
      for (int b = 0; b < E.size(); ++b) {
        auto ea = o.from(a), eb = o.from(b);
        REQUIRE(E.mul(a, b) == o.index(o.mul(ea, eb)));
        REQUIRE(E.add(a, b) == o.index(o.add(ea, eb)));
      }
    for (int a = 0; a < E.size(); ++a) REQUIRE(ctx.frobenius(static_cast<Elem>(a)) == o.index(o.pow(o.from(a), q)));
  }
}

TEST_CASE("default polynomials are primitive") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    auto ctx = FieldCtx::create(q);
    const std::uint64_t n = static_cast<std::uint64_t>(q) * q * q - 1;
    CHECK(ctx.ext().order(ctx.tau().value()) == n);
    // tau tau^q tau^{q^2} = t0 and the trace is t2.
    Fq3 t = ctx.tau(), tq = ctx.frobenius(t), tqq = ctx.frobenius(tq);
    CHECK(t * tq * tqq == ctx.embed(ctx.t0()));
    CHECK(t + tq + tqq == ctx.embed(ctx.t2()));
  }
  CHECK(FieldCtx::default_cubic(2) == CubicPoly{1, 1, 0});
  CHECK(FieldCtx::default_cubic(3) == CubicPoly{2, 1, 0});
}

TEST_CASE("bad polynomials are rejected") {
  // x^3 - x^2 - 1 has the root 2 over GF(3).
  CHECK_THROWS_AS(FieldCtx::create(3, {1, 0, 1}), FieldError);
  // x^3 + x^2 + 1 over GF(2) is irreducible; x^3 + 1 is not.
  CHECK_THROWS_AS(FieldCtx::create(2, {1, 0, 0}), FieldError);
  CHECK_THROWS_AS(FieldCtx::create(6), FieldError);
  CHECK_THROWS_AS(FieldCtx::create(11), FieldError);
  CHECK_NOTHROW(FieldCtx::create(2, {1, 0, 1}));
}

TEST_CASE("frobenius") {
  auto ctx = FieldCtx::create(2, {1, 1, 0});
  CHECK(ctx.frobenius(ctx.tau()) == ctx.tau() * ctx.tau());
  CHECK(ctx.frobenius(ctx.tau()).value() == 4);
  for (int q : {2, 3, 4, 5}) {
    auto c = FieldCtx::create(q);
    for (auto x : c.fq3_elements()) {
      REQUIRE(c.frobenius(c.frobenius(c.frobenius(x))) == x);
      if (c.in_subfield(x)) REQUIRE(c.frobenius(x) == x);
      else REQUIRE(c.frobenius(x) != x);
    }
    if (q > 4) continue;
    for (auto x : c.fq3_elements())
      for (auto y : c.fq3_elements()) {
        REQUIRE(c.frobenius(x + y) == c.frobenius(x) + c.frobenius(y));
        REQUIRE(c.frobenius(x * y) == c.frobenius(x) * c.frobenius(y));
      }
  }
}

TEST_CASE("theta and theta_minus") {
  auto c2 = FieldCtx::create(2, {1, 1, 0});
  CHECK(c2.theta(c2.fq(1)) == c2.fq(1));
  CHECK(c2.theta(c2.fq(0)) == c2.t0());
  CHECK(c2.theta_minus(c2.fq(0)).value() == 5);  // tau^2 + 1

  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    auto c = FieldCtx::create(q);
    for (auto e : c.fq_elements()) {
      Fq th = c.theta(e);
      REQUIRE(!th.is_zero());
      Fq closed = e * e * e + c.t2() * e * e - c.t1() * e + c.t0();
      REQUIRE(th == closed);
      REQUIRE((c.embed(e) + c.tau()) * c.theta_minus(e) == c.embed(th));
      // theta_minus(e) tau = t0 + (e^2 + e t2) tau - e tau^2
      auto k = c.coeffs(c.theta_minus(e) * c.tau());
      REQUIRE(k[0] == c.t0());
      REQUIRE(k[1] == e * e + e * c.t2());
      REQUIRE(k[2] == -e);
    }
  }
}

TEST_CASE("theta against a direct GF(125) product") {
  auto c = FieldCtx::create(5);
  oracle::Cubic o{5, c.poly().t0, c.poly().t1, c.poly().t2};
  for (int e = 0; e < 5; ++e) {
    oracle::Cubic::El a{e, 1, 0};
    auto prod = o.mul(a, o.mul(o.pow(a, 5), o.pow(a, 25)));
    REQUIRE(prod[1] == 0);
    REQUIRE(prod[2] == 0);
    REQUIRE(c.theta(c.fq(e)).value() == prod[0]);
  }
}

TEST_CASE("GF(q) subfield of a non-prime tower") {
  for (int q : {4, 8, 9}) {
    auto c = FieldCtx::create(q);
    for (auto a : c.fq_elements()) {
      REQUIRE(a.pow(q) == a);
      for (auto b : c.fq_elements()) {
        REQUIRE(c.embed(a * b) == c.embed(a) * c.embed(b));
        REQUIRE(c.embed(a + b) == c.embed(a) + c.embed(b));
      }
    }
  }
}
