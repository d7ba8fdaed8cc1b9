#include "doctest.h"
#include "walpha/embeddings.hpp"
#include "walpha/sampling.hpp"

using namespace walpha;

TEST_CASE("copy of W_{re1*}: parameters for the geometric functional") {
  // alpha = (1/2, 1/4, 1/8, ...), r = 1/2: K = 2, s = 0, N = 3
  const auto e = embed_re1_into_alpha(parse_dual("tail=geom(1/2,1/2)"),
                                      Rational(1, 2));
  CHECK(*e.K == 2);
  CHECK(*e.N == 3);
  const DualVec a = parse_dual("tail=geom(1/2,1/2)");
  // s is pinned by r = s|alpha(1)| + Sum_{j=2..K} |alpha(j)|
  CHECK(Rational(1, 2) ==
        *e.s * a.entry(1).abs() + a.abs_tail_from(2) - a.abs_tail_from(3));
  CHECK(*e.s == Rational(1, 2));
  // oracle: exhaustive scan for the least admissible K and N
  long k_scan = 2;
  while (!(a.abs_tail_from(1) - a.abs_tail_from(k_scan) <= Rational(1, 2) &&
           Rational(1, 2) < a.abs_tail_from(1) - a.abs_tail_from(k_scan + 1)))
    ++k_scan;
  CHECK(k_scan == *e.K);
  long n_scan = *e.K + 1;
  while (!(a.abs_tail_from(n_scan) <=
           (Rational(1) - *e.s) * a.entry(1).abs()))
    ++n_scan;
  CHECK(n_scan == *e.N);
}

TEST_CASE("copy of W_{re1*}: finite-support parameters") {
  // alpha = (1/2, 1/4), r = 1/2: K = 2, s = 1/2, N = 3
  const auto e =
      embed_re1_into_alpha(parse_dual("prefix=[1/2,1/4]"), Rational(1, 2));
  CHECK(*e.K == 2);
  CHECK(*e.s == Rational(1, 2));
  CHECK(*e.N == 3);
  // constructed parameters satisfy their defining inequalities exactly
  CHECK(*e.s >= Rational(0));
  CHECK(*e.s < Rational(1));
  CHECK(parse_dual("prefix=[1/2,1/4]").abs_tail_from(*e.N) <=
        (Rational(1) - *e.s) * Rational(1, 2));
}

TEST_CASE("copy of W_{re1*} is an exact isometry on random members") {
  for (const char* s :
       {"tail=geom(1/2,1/2)", "tail=recip", "prefix=[1/3,-1/4];geom(1/24,1/2)",
        "prefix=[-1/4,1/2,1/8]"}) {
    const DualVec alpha = parse_dual(s);
    const Rational r = (alpha.l1_norm() + canonical_max_abs(alpha)) / Rational(2);
    const auto e = embed_re1_into_alpha(alpha, r);
    const auto samples = sample_members(e.source, 25, 7);
    const auto rep = verify_isometry(e, samples);
    CHECK(rep.checked == 25);
    CHECK(rep.all_passed());
    CHECK(component_property_check(e, samples).all_passed());
  }
}

TEST_CASE("copy of W_{re1*}: rejected parameter ranges") {
  CHECK_THROWS_AS(
      embed_re1_into_alpha(parse_dual("tail=geom(1/2,1/2)"), Rational(1)),
      PreconditionViolated);  // r = ||alpha||
  CHECK_THROWS_AS(
      embed_re1_into_alpha(parse_dual("tail=geom(1/2,1/2)"), Rational(1, 4)),
      PreconditionViolated);  // r below the max entry
  // singleton support: |alpha(1)| = ||alpha||, empty range for r
  CHECK_THROWS_AS(embed_re1_into_alpha(parse_dual("prefix=[1/2]"),
                                       Rational(1, 2)),
                  PreconditionViolated);
  CHECK_THROWS_AS(embed_re1_into_alpha(DualVec::zero(), Rational(0)),
                  PreconditionViolated);
}

TEST_CASE("limit-prepend map into W_{re1*}") {
  const auto e = embed_beta_into_re1(parse_dual("prefix=[1/4]"), Rational(1, 2));
  const PrimalVec x({Rational(1)}, Rational(1, 4));
  CHECK(e.source.contains(x));
  const PrimalVec y = e.apply(x);
  CHECK(y.entry(1) == Rational(1, 2));
  CHECK(y.entry(2) == Rational(1));
  CHECK(y.entry(3) == Rational(1, 4));
  CHECK(y.limit() == Rational(1, 4));
  CHECK(e.target.contains(y));
  CHECK(y.sup_norm() == x.sup_norm());

  // beta = 0 sends c0 in: (0, 1, 0, 0, ...)
  const auto z = embed_beta_into_re1(DualVec::zero(), Rational(1, 2))
                     .apply(PrimalVec({Rational(1)}, Rational(0)));
  CHECK(z.entry(1) == Rational(0));
  CHECK(z.entry(2) == Rational(1));
  CHECK(z.limit() == Rational(0));

  CHECK_THROWS_AS(embed_beta_into_re1(parse_dual("prefix=[1/2]"), Rational(1, 4)),
                  PreconditionViolated);
}

TEST_CASE("limit-prepend maps: lim T(x) = r T(x)(1) identically") {
  const DualVec beta = parse_dual("prefix=[1/5,-1/10]");
  const Rational r(1, 2);
  const auto e = embed_beta_into_re1(beta, r);
  for (const auto& x : sample_members(e.source, 20, 3)) {
    const PrimalVec y = e.apply(x);
    CHECK(y.limit() == r * y.entry(1));
  }
}

TEST_CASE("general embedding: composite over random members") {
  struct Pair {
    const char* beta;
    const char* alpha;
  } pairs[] = {
      {"prefix=[1/4]", "tail=geom(1/2,1/2)"},
      {"prefix=[1/3,-1/5]", "tail=recip"},
      {"tail=geom(1/8,1/2)", "prefix=[1/2,-3/8]"},
      {"tail=geom(1/4,-1/2)", "tail=geom(1/2,1/2)"},
      {"prefix=[1/4]", "prefix=[0,0,-2/3]"},  // singleton-support target
      {"tail=zero", "prefix=[1/2]"},          // c0 into W_{e1*/2}
  };
  for (const auto& p : pairs) {
    const auto e = embed_general(parse_dual(p.beta), parse_dual(p.alpha));
    const auto samples = sample_members(e.source, 25, 11);
    CHECK(verify_isometry(e, samples).all_passed());
    CHECK(component_property_check(e, samples).all_passed());
  }
}

TEST_CASE("general embedding refuses equal norms") {
  CHECK_THROWS_AS(embed_general(parse_dual("tail=geom(1/2,1/2)"),
                                parse_dual("tail=geom(1/2,1/2)")),
                  PreconditionViolated);
  CHECK_THROWS_AS(embed_general(parse_dual("prefix=[1]"), DualVec::basis(1)),
                  PreconditionViolated);
}

TEST_CASE("norm-attaining copy for finite support") {
  // alpha = (1/2, -1/4): x = (1, 3/4, 3/4, ...) in W_{(3/4)e1*}
  const auto e = embed_finite_support(parse_dual("prefix=[1/2,-1/4]"));
  CHECK(*e.r == Rational(3, 4));
  const PrimalVec x({Rational(1)}, Rational(3, 4));
  CHECK(e.source.contains(x));
  const PrimalVec y = e.apply(x);
  CHECK(y.entry(1) == Rational(1));
  CHECK(y.entry(2) == Rational(-1));
  CHECK(y.entry(3) == Rational(1));
  CHECK(y.entry(4) == Rational(3, 4));
  CHECK(y.limit() == Rational(3, 4));
  CHECK(e.target.contains(y));

  const auto samples = sample_members(e.source, 25, 5);
  CHECK(verify_isometry(e, samples).all_passed());
  CHECK(component_property_check(e, samples).all_passed());

  // support with a gap
  const auto g = embed_finite_support(parse_dual("prefix=[0,1/3,0,1/6]"));
  CHECK(verify_isometry(g, sample_members(g.source, 25, 6)).all_passed());
  CHECK(component_property_check(g, sample_members(g.source, 10, 6))
            .all_passed());

  CHECK(embed_finite_support(parse_dual("prefix=[1/2]"))
            .apply(PrimalVec::zero())
            .sup_norm() == Rational(0));

  CHECK_THROWS_AS(embed_finite_support(parse_dual("tail=geom(1/4,1/2)")),
                  PreconditionViolated);
  CHECK_THROWS_AS(embed_finite_support(parse_dual("prefix=[1/2,1/2]")),
                  PreconditionViolated);  // norm 1
  CHECK_THROWS_AS(embed_finite_support(DualVec::zero()), PreconditionViolated);
}

TEST_CASE("verify_isometry flags a corrupted map") {
  const WAlphaSpace w0((DualVec::zero()));
  Embedding id = Embedding::identity(w0);
  CHECK(verify_isometry(id, sample_members(w0, 10, 1)).all_passed());

  Embedding bad = id;
  bad.apply = [](const PrimalVec& x) {
    std::vector<Rational> pre;
    for (long i = 1; i <= std::max<long>(x.prefix_len(), 1); ++i)
      pre.push_back(i == 1 ? Rational(2) * x.entry(1) : x.entry(i));
    return PrimalVec(pre, x.limit());
  };
  const auto rep = verify_isometry(bad, {PrimalVec({Rational(1)}, Rational(0))});
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.failures.size() == 1);

  CHECK_THROWS_AS(
      verify_isometry(id, {PrimalVec({Rational(1)}, Rational(1))}),
      SampleNotInSource);  // limit must be 0 in W_0
}

TEST_CASE("dyadic catalog: gamma values and block masses") {
  const auto cat = catalog_example_5_11();
  CHECK(cat.gamma(1) == Rational(1, 2));
  CHECK(cat.gamma(2) == Rational(2) * (Rational(1, 6) - Rational(1, 8)));
  // block-k mass of alpha telescopes to beta(k)
  for (long k = 1; k <= 12; ++k) {
    Rational mass(0);
    for (long i = (1L << (k - 1)); i < (1L << k); ++i)
      mass += cat.alpha.entry(i);
    CHECK(mass == cat.beta.entry(k));
  }
}

TEST_CASE("dyadic catalog: S and T are isometries") {
  const auto cat = catalog_example_5_11();
  const auto ws = sample_members(cat.S.source, 25, 9);
  CHECK(verify_isometry(cat.S, ws).all_passed());
  CHECK(component_property_check(cat.S, ws).all_passed());
  const auto wt = sample_members(cat.T.source, 25, 9);
  CHECK(verify_isometry(cat.T, wt).all_passed());
  CHECK(component_property_check(cat.T, wt).all_passed());

  // the all-ones vector maps to the all-ones vector
  const PrimalVec ones = PrimalVec::constant(Rational(1));
  CHECK(cat.T.source.contains(ones));
  CHECK(cat.T.apply(ones) == ones);
  CHECK(cat.T.target.contains(ones));
}

TEST_CASE("dyadic catalog: block-averaging projection") {
  const auto cat = catalog_example_5_11();
  const BlockAveragingProjection& P = cat.P;

  const DualVec x = parse_dual("prefix=[1,0,-2,3,0,0,1/2]");
  const DualVec px = P.apply(x);
  CHECK(px.entry(1) == Rational(1));
  CHECK(px.entry(2) == Rational(-1));  // avg of (0, -2)
  CHECK(px.entry(3) == Rational(-1));
  CHECK(px.entry(4) == Rational(7, 8));  // avg of (3, 0, 0, 1/2)
  CHECK(px.entry(8) == Rational(0));

  // idempotent and nonexpansive on finite supports
  CHECK(P.apply(px) == px);
  CHECK(px.l1_norm() <= x.l1_norm());

  // the functional form agrees with the materialized image
  const PrimalVec y({Rational(2), Rational(-1), Rational(5)}, Rational(1, 3));
  Rational direct(0);
  for (long i = 1; i <= 7; ++i) direct += px.entry(i) * y.entry(i);
  CHECK(P.pair(x, y) == direct);

  // P(x*)(Tw) = x*(Tw): block-constant vectors cannot tell them apart
  const DualVec geom_dual = parse_dual("prefix=[1/3];geom(1/9,1/3)");
  for (const auto& w : sample_members(cat.T.source, 20, 13)) {
    const PrimalVec tw = cat.T.apply(w);
    CHECK(P.pair(geom_dual, tw) == pairing(geom_dual, tw));
    CHECK(P.pair(x, tw) == pairing(x, tw));
  }

  CHECK_THROWS_AS(P.apply(geom_dual), ResultNotRepresentable);
}

TEST_CASE("kernel functional of limit-prepend images") {
  const auto e = embed_beta_into_re1(parse_dual("prefix=[1/4]"), Rational(1, 2));
  const DualVec f = hyperplane_kernel_functional(e);
  CHECK(f.entry(1) == Rational(1, 2));
  CHECK(f.entry(2) == Rational(-1, 4));
  CHECK(f.entry(3) == Rational(0));
  for (const auto& x : sample_members(e.source, 20, 17))
    CHECK(pairing(f, e.apply(x)) == Rational(0));

  const auto z = embed_beta_into_re1(DualVec::zero(), Rational(1, 2));
  CHECK(hyperplane_kernel_functional(z) == parse_dual("prefix=[1/2]"));

  // geometric beta keeps a closed-form kernel functional too
  const auto g =
      embed_beta_into_re1(parse_dual("tail=geom(1/4,1/2)"), Rational(3, 4));
  const DualVec fg = hyperplane_kernel_functional(g);
  for (const auto& x : sample_members(g.source, 20, 19))
    CHECK(pairing(fg, g.apply(x)) == Rational(0));

  CHECK_THROWS_AS(hyperplane_kernel_functional(Embedding::identity(
                      WAlphaSpace(DualVec::zero()))),
                  WrongKind);
}

TEST_CASE("strictly positive targets exclude sign-mixing sources") {
  // alpha > 0 with norm 1, beta alternating with norm 1: every builder
  // refuses the pair.
  const DualVec alpha = parse_dual("tail=geom(1/2,1/2)");
  const DualVec beta = parse_dual("tail=geom(1/2,-1/2)");
  CHECK_THROWS_AS(embed_general(beta, alpha), PreconditionViolated);
  CHECK_THROWS_AS(embed_finite_support(alpha), PreconditionViolated);
  CHECK_THROWS_AS(embed_re1_into_alpha(alpha, Rational(1)),
                  PreconditionViolated);
}
