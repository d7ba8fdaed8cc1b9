#include "doctest.h"
#include "walpha/projections.hpp"
#include "walpha/sampling.hpp"

using namespace walpha;

TEST_CASE("l1 identity projection in block form") {
  const auto P = l1_identity_projection();
  const DualVec x = parse_dual("prefix=[1/2,-1/3,0,2]");
  CHECK(P.apply(x) == x);
  CHECK(P.apply(P.apply(x)) == x);
  CHECK(P.block_functional(2, x) == Rational(-1, 3));
  CHECK(P.find_block_containing(4, 10) == 4);
}

TEST_CASE("Example 5.14 projection validates and evaluates") {
  const auto P = l1_projection_example_5_14();
  const auto b1 = P.block(1);
  CHECK(b1.sigma == std::vector<long>{2});
  CHECK(b1.ustarstar.entry(1) == Rational(1, 2));  // 2/(1*2) - 1/2
  CHECK(b1.ustarstar.entry(2) == Rational(1));
  const auto b3 = P.block(3);
  CHECK(b3.ustarstar.entry(1) == Rational(2, 12) - Rational(1, 8));

  // functionals touching only coordinates >= 2 have finite reach
  const DualVec x = parse_dual("prefix=[0,1,-2,0,1/5]");
  const DualVec px = P.apply(x);
  CHECK(px == x);  // coordinates 2.. are fixed: u_j** picks x(j+1)
  CHECK(P.apply(px) == px);
  CHECK(px.l1_norm() <= x.l1_norm());

  // e_1 activates every block: not representable in closed form
  CHECK_THROWS_AS(P.apply(DualVec::basis(1)), ResultNotRepresentable);

  // norm-one behavior on mixed finite functionals with x(1) = 0
  const DualVec y = parse_dual("prefix=[0,3,0,0,-1]");
  CHECK(P.apply(y).l1_norm() <= y.l1_norm());
}

TEST_CASE("kernel characterization (d): P x* = 0 iff all block values vanish") {
  const auto P = l1_projection_example_5_14();
  for (const char* s : {"prefix=[0,1,-1]", "prefix=[0,0,2,0,-5]",
                        "prefix=[0,1/3]", "tail=zero"}) {
    const DualVec x = parse_dual(s);
    bool all_zero = true;
    for (long j = 1; j <= 12; ++j)
      all_zero = all_zero && P.block_functional(j, x).is_zero();
    CHECK(P.apply(x).is_zero() == all_zero);
  }
}

TEST_CASE("structural validation rejects malformed blocks") {
  // overlapping sigma blocks
  std::vector<L1Block> overlap{
      {{1}, DualVec::basis(1), DualVec::basis(1)},
      {{1}, DualVec::basis(1), DualVec::basis(1)},
  };
  CHECK_THROWS_AS(L1Projection(overlap, nullptr, [](long) {
                    return std::optional<long>(1);
                  }),
                  StructureViolation);

  // u* with the wrong norm
  std::vector<L1Block> badnorm{
      {{1}, DualVec::basis(1).scaled(Rational(1, 2)), DualVec::basis(1)}};
  CHECK_THROWS_AS(L1Projection(badnorm, nullptr,
                               [](long) { return std::optional<long>(1); }),
                  StructureViolation);

  // u** breaking the sign condition (b)
  std::vector<L1Block> badsign{
      {{1}, DualVec::basis(1).negated(), DualVec::basis(1)}};
  CHECK_THROWS_AS(L1Projection(badsign, nullptr,
                               [](long) { return std::optional<long>(1); }),
                  StructureViolation);

  // omega meeting a foreign sigma, violating (c)
  std::vector<L1Block> foreign{
      {{1}, DualVec::basis(1), DualVec::basis(1)},
      {{2},
       DualVec::basis(2),
       DualVec::from_prefix({Rational(1, 2), Rational(1)})},
  };
  CHECK_THROWS_AS(L1Projection(foreign, nullptr,
                               [](long h) { return std::optional<long>(h); }),
                  StructureViolation);
}

TEST_CASE("beta recovery: Example 5.14 yields the reciprocal sequence") {
  const auto P = l1_projection_example_5_14();
  const DualVec alpha = parse_dual("tail=geom(1/2,1/2)");
  // hand evaluation at k = 1: (2/2 - 1/2)(1/2) + 1/4 = 1/2
  CHECK(P.block_functional(1, alpha) == Rational(1, 2));
  const auto rec =
      recover_beta(P, alpha, [](long k) { return k + 1; });
  CHECK(rec.tail_identified);
  for (long k = 1; k <= 20; ++k)
    CHECK(rec.beta.entry(k) == Rational(1) / Rational(k * (k + 1)));
  CHECK(rec.beta == parse_dual("tail=recip"));
}

TEST_CASE("beta recovery: identity projection returns alpha") {
  const auto P = l1_identity_projection();
  for (const char* s :
       {"tail=geom(1/2,1/2)", "tail=recip", "prefix=[1/3,-1/4];geom(1/24,1/2)",
        "prefix=[1/2,0,1/4]"}) {
    const DualVec alpha = parse_dual(s);
    const auto rec = recover_beta(P, alpha, [](long k) { return k; });
    CHECK(rec.tail_identified);
    CHECK(rec.beta == alpha);
  }
}

TEST_CASE("beta recovery flags unidentifiable tails") {
  // block values follow no supported closed form: alpha with an irregular
  // pattern probed through the identity projection
  const auto P = l1_identity_projection();
  std::vector<Rational> weird;
  for (long i = 1; i <= 24; ++i)
    weird.emplace_back(1, (i * i * i) % 97 + 1);
  const DualVec alpha = DualVec::from_prefix(weird).scaled(Rational(1, 30));
  const auto rec = recover_beta(P, alpha, [](long k) { return k; }, 10);
  CHECK_FALSE(rec.tail_identified);
  for (long k = 1; k <= 10; ++k) CHECK(rec.beta.entry(k) == alpha.entry(k));
}

TEST_CASE("Theorem 7.1 projection: geometric alpha") {
  const DualVec alpha = parse_dual("tail=geom(1/2,1/2)");
  const auto P = thm71_projection(alpha, Rational(1, 2));
  CHECK(P.r == Rational(2, 3));
  CHECK(P.copy.source.alpha() == DualVec::basis(1).scaled(Rational(2, 3)));

  const auto samples = sample_members(P.space, 30, 21);
  for (const auto& x : samples) {
    const PrimalVec px = P.apply(x);
    CHECK(P.space.contains(px));
    CHECK(P.apply(px) == px);  // idempotence
    // columns reproduce the projection exactly
    for (long m = 1; m <= P.stable_from + 3; ++m)
      CHECK(px.entry(m) == pairing(P.column(m), x));
  }

  // P restricted to the copy is the identity
  for (const auto& w : sample_members(P.copy.source, 20, 22)) {
    const PrimalVec tw = P.copy.apply(w);
    CHECK(P.apply(tw) == tw);
  }

  const auto nb = operator_norm_upper(P, 50);
  CHECK(nb.certified);
  CHECK(nb.bound <= Rational(3, 2));
}

TEST_CASE("Theorem 7.1 projection: singleton support") {
  const DualVec alpha = parse_dual("prefix=[1/2]");
  const auto P = thm71_projection(alpha, Rational(1));
  CHECK(P.r == Rational(1, 4));
  const auto samples = sample_members(P.space, 25, 23);
  for (const auto& x : samples) {
    const PrimalVec px = P.apply(x);
    CHECK(P.space.contains(px));
    CHECK(P.apply(px) == px);
    for (long m = 1; m <= P.stable_from + 3; ++m)
      CHECK(px.entry(m) == pairing(P.column(m), x));
  }
  const auto nb = operator_norm_upper(P, 20);
  CHECK(nb.certified);
  CHECK(nb.bound <= Rational(2));

  // shifted singleton with a sign
  const auto Q = thm71_projection(parse_dual("prefix=[0,0,-2/3]"),
                                  Rational(1, 3));
  for (const auto& x : sample_members(Q.space, 25, 24)) {
    const PrimalVec qx = Q.apply(x);
    CHECK(Q.space.contains(qx));
    CHECK(Q.apply(qx) == qx);
    for (long m = 1; m <= Q.stable_from + 3; ++m)
      CHECK(qx.entry(m) == pairing(Q.column(m), x));
  }
  CHECK(operator_norm_upper(Q, 20).bound <= Rational(4, 3));
}

TEST_CASE("Theorem 7.1 projection: more functionals, certified bounds") {
  struct Case {
    const char* alpha;
    long eps_num, eps_den;
  } cases[] = {
      {"tail=recip", 1, 3},
      {"prefix=[1/3,-1/4];geom(1/24,1/2)", 1, 4},
      {"prefix=[1/2,-3/8]", 1, 5},
      {"prefix=[0,1/2,1/4]", 1, 7},  // max entry away from position 1
  };
  for (const auto& c : cases) {
    const Rational eps(c.eps_num, c.eps_den);
    const auto P = thm71_projection(parse_dual(c.alpha), eps);
    const auto nb = operator_norm_upper(P, P.stable_from + 5);
    CHECK(nb.certified);
    CHECK(nb.bound <= Rational(1) + eps);
    for (const auto& x : sample_members(P.space, 15, 29)) {
      const PrimalVec px = P.apply(x);
      CHECK(P.space.contains(px));
      CHECK(P.apply(px) == px);
      for (long m = 1; m <= P.stable_from + 3; ++m)
        CHECK(px.entry(m) == pairing(P.column(m), x));
    }
  }
}

TEST_CASE("Theorem 7.1 rejections") {
  CHECK_THROWS_AS(thm71_projection(parse_dual("tail=geom(1/2,1/2)"),
                                   Rational(0)),
                  PreconditionViolated);
  CHECK_THROWS_AS(thm71_projection(DualVec::zero(), Rational(1, 2)),
                  PreconditionViolated);
  // two-point support with a large eps: no Prop 5.6 copy at r*/(1+eps)
  CHECK_THROWS_AS(thm71_projection(parse_dual("prefix=[1/2,1/4]"),
                                   Rational(2)),
                  PreconditionViolated);
}

TEST_CASE("identity projection packaging") {
  const auto P = identity_projection(parse_dual("tail=geom(1/4,1/2)"));
  const auto nb = operator_norm_upper(P, 5);
  CHECK(nb.certified);
  CHECK(nb.bound == Rational(1));
  const PrimalVec x({Rational(3)}, Rational(1, 2));
  CHECK(P.apply(x) == x);
  CHECK(pairing(P.column(2), x) == x.entry(2));
}

TEST_CASE("1-complemented availability per Remark 7.2") {
  CHECK(one_complemented_copy_available(DualVec::zero()));
  CHECK(one_complemented_copy_available(parse_dual("prefix=[1/2,1/4]")));
  CHECK_FALSE(one_complemented_copy_available(parse_dual("tail=geom(1/4,1/2)")));
  // r* = 1: needs the Prop 5.7 condition
  CHECK(one_complemented_copy_available(parse_dual("prefix=[1/2,1/2]")));
  CHECK_FALSE(one_complemented_copy_available(parse_dual("tail=geom(1/2,1/2)")));
}
