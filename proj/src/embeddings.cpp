#include "walpha/embeddings.hpp"

#include <algorithm>

namespace walpha {

namespace {

// Coordinates where the largest |entry| of alpha sits first and is
// positive: swap positions 1 and p, flip the sign of the new first entry.
// The licensed moves are exactly finite permutations and sign flips.
struct Canon {
  DualVec alpha;
  long p;         // original position of the maximal |entry|
  Rational flip;  // sign applied at position 1
};

Canon canonicalize(const DualVec& a) {
  // One materialized tail term suffices: tail terms never increase in
  // absolute value, so the sup of |entries| is reached in this prefix.
  const DualVec m = a.materialized(a.prefix_len() + 1);
  long p = 1;
  Rational best = m.entry(1).abs();
  for (long i = 2; i <= m.prefix_len(); ++i)
    if (m.entry(i).abs() > best) {
      best = m.entry(i).abs();
      p = i;
    }
  if (best.is_zero())
    throw PreconditionViolated("alpha must be nonzero");
  std::vector<Rational> pre = m.prefix();
  std::swap(pre[0], pre[static_cast<size_t>(p - 1)]);
  const Rational flip(pre[0].sign() < 0 ? -1 : 1);
  pre[0] = pre[0].abs();
  return Canon{DualVec(std::move(pre), m.tail()), p, flip};
}

// Undo the canonicalization on a vector living in the target space:
// x(1) = y(p), x(p) = flip * y(1), x(q) = y(q) otherwise.
PrimalVec conj_back(const PrimalVec& y, long p, const Rational& flip) {
  const long len = std::max(p, y.prefix_len());
  std::vector<Rational> pre;
  pre.reserve(static_cast<size_t>(len));
  for (long q = 1; q <= len; ++q) pre.push_back(y.entry(q));
  if (p == 1) {
    pre[0] = flip * pre[0];
  } else {
    const Rational y1 = pre[0];
    pre[0] = pre[static_cast<size_t>(p - 1)];
    pre[static_cast<size_t>(p - 1)] = flip * y1;
  }
  return PrimalVec(std::move(pre), y.limit());
}

WAlphaSpace re1_space(const Rational& r) {
  return WAlphaSpace(DualVec::basis(1).scaled(r));
}

}  // namespace

Rational canonical_max_abs(const DualVec& alpha) {
  return canonicalize(alpha).alpha.entry(1);
}

Embedding Embedding::identity(WAlphaSpace space) {
  WAlphaSpace target = space;
  return Embedding{Kind::Identity,
                   std::move(space),
                   std::move(target),
                   [](const PrimalVec& x) { return x; },
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   [](long n) { return n; },
                   [](long) { return Rational(1); },
                   1};
}

Embedding embed_re1_into_alpha(const DualVec& alpha, const Rational& r) {
  const Rational norm = alpha.l1_norm();
  if (norm.is_zero()) throw PreconditionViolated("||alpha|| > 0 required");
  Canon canon = canonicalize(alpha);
  const DualVec ac = canon.alpha;
  const Rational a1 = ac.entry(1);
  if (r < a1 || !(r < norm))
    throw PreconditionViolated("r must satisfy max|alpha| <= r < ||alpha||");

  // Least K > 1 with Sum_{j<K} |alpha(j)| <= r < Sum_{j<=K} |alpha(j)|.
  long K = 2;
  Rational below = a1;  // Sum_{j<K}
  while (below + ac.entry(K).abs() <= r) {
    below += ac.entry(K).abs();
    ++K;
  }
  const Rational s = (r - (below + ac.entry(K).abs() - a1)) / a1;

  // Least N > K with Sum_{j>=N} |alpha(j)| <= (1-s)|alpha(1)|.
  long N = K + 1;
  const Rational slack = (Rational(1) - s) * a1;
  while (ac.abs_tail_from(N) > slack) ++N;

  const long p = canon.p;
  const Rational flip = canon.flip;
  auto apply = [ac, s, K, N, p, flip](const PrimalVec& w) {
    const long pl = std::max<long>(w.prefix_len(), 1);
    // Sum_{j >= N} alpha(j) w(j - N + 2): entries of w, then its limit
    // against the closed-form tail of alpha.
    Rational series(0);
    for (long m = 2; m <= pl; ++m) series += ac.entry(m + N - 2) * w.entry(m);
    series += w.limit() * ac.signed_tail_from(N + pl - 1);
    std::vector<Rational> pre;
    pre.reserve(static_cast<size_t>(N + pl - 2));
    pre.push_back(s * w.entry(1) - series / ac.entry(1));
    for (long i = 2; i <= K; ++i)
      pre.push_back(Rational(ac.entry(i).sign()) * w.entry(1));
    for (long i = K + 1; i <= N - 1; ++i) pre.push_back(Rational(0));
    for (long i = N; i <= N + pl - 2; ++i) pre.push_back(w.entry(i - N + 2));
    return conj_back(PrimalVec(std::move(pre), w.limit()), p, flip);
  };

  Embedding e{Embedding::Kind::MSpace,
              re1_space(r),
              WAlphaSpace(alpha),
              std::move(apply),
              r,
              K,
              s,
              N,
              [N, p](long n) {
                const long q = n + N - 2;
                return q == p ? 1 : q;
              },
              [](long) { return Rational(1); },
              2};
  e.conj_index = p;
  e.conj_sign = flip;
  return e;
}

Embedding embed_beta_into_re1(const DualVec& beta, const Rational& r) {
  if (!(r.sign() > 0) || r > Rational(1))
    throw PreconditionViolated("0 < r <= 1 required");
  if (beta.l1_norm() > r)
    throw PreconditionViolated("||beta|| <= r required: the map would expand");
  auto apply = [r](const PrimalVec& x) {
    std::vector<Rational> pre;
    pre.reserve(static_cast<size_t>(x.prefix_len() + 1));
    pre.push_back(x.limit() / r);
    for (const Rational& v : x.prefix()) pre.push_back(v);
    return PrimalVec(std::move(pre), x.limit());
  };
  return Embedding{Embedding::Kind::LimitPrepend,
                   WAlphaSpace(beta),
                   re1_space(r),
                   std::move(apply),
                   r,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   [](long n) { return n + 1; },
                   [](long) { return Rational(1); },
                   1};
}

Embedding embed_general(const DualVec& beta, const DualVec& alpha) {
  const Rational nb = beta.l1_norm();
  const Rational na = alpha.l1_norm();
  if (!(nb < na))
    throw PreconditionViolated("||beta|| < ||alpha|| required (strict)");

  // Single-entry alpha: W_alpha is W_{|t| e_1^*} up to a swap and a flip,
  // so the limit-prepend map lands directly.
  if (alpha.finitely_supported()) {
    long nonzero = 0, p = 0;
    for (long i = 1; i <= alpha.prefix_len(); ++i)
      if (!alpha.entry(i).is_zero()) {
        ++nonzero;
        p = i;
      }
    if (nonzero == 1) {
      const Rational flip(alpha.entry(p).sign());
      Embedding inner = embed_beta_into_re1(beta, na);
      auto apply = [inner, p, flip](const PrimalVec& x) {
        return conj_back(inner.apply(x), p, flip);
      };
      Embedding e{Embedding::Kind::Composite,
                  WAlphaSpace(beta),
                  WAlphaSpace(alpha),
                  std::move(apply),
                  na,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  [p](long n) { return n + 1 == p ? 1 : n + 1; },
                  [](long) { return Rational(1); },
                  1};
      e.conj_index = p;
      e.conj_sign = flip;
      return e;
    }
  }

  const Rational r = std::max(canonicalize(alpha).alpha.entry(1), nb);
  Embedding inner = embed_beta_into_re1(beta, r);
  Embedding outer = embed_re1_into_alpha(alpha, r);
  auto apply = [inner, outer](const PrimalVec& x) {
    return outer.apply(inner.apply(x));
  };
  auto outer_index = outer.component_index;
  Embedding e{Embedding::Kind::Composite,
              WAlphaSpace(beta),
              WAlphaSpace(alpha),
              std::move(apply),
              r,
              outer.K,
              outer.s,
              outer.N,
              [outer_index](long n) { return outer_index(n + 1); },
              [](long) { return Rational(1); },
              1};
  e.conj_index = outer.conj_index;
  e.conj_sign = outer.conj_sign;
  return e;
}

Embedding embed_finite_support(const DualVec& alpha) {
  if (!alpha.finitely_supported())
    throw PreconditionViolated(
        "no norm-attaining copy exists for infinite support");
  const Rational r = alpha.l1_norm();
  if (r.is_zero() || r >= Rational(1))
    throw PreconditionViolated("0 < ||alpha|| < 1 required");

  std::vector<long> supp;
  for (long i = 1; i <= alpha.prefix_len(); ++i)
    if (!alpha.entry(i).is_zero()) supp.push_back(i);
  const long top = supp.back();
  const long gaps_below = top - static_cast<long>(supp.size());

  // k-th non-support position (these carry the shifted copy of x).
  auto copy_pos = [supp, top, gaps_below](long k) {
    if (k > gaps_below) return top + (k - gaps_below);
    long q = 0, seen = 0;
    while (seen < k) {
      ++q;
      if (!std::binary_search(supp.begin(), supp.end(), q)) ++seen;
    }
    return q;
  };

  DualVec a = alpha;
  auto apply = [a, supp, copy_pos, top](const PrimalVec& x) {
    const long len = top + std::max<long>(x.prefix_len(), 1);
    std::vector<Rational> pre(static_cast<size_t>(len));
    long copy_count = 0;
    for (long q = 1; q <= len; ++q) {
      if (std::binary_search(supp.begin(), supp.end(), q))
        pre[static_cast<size_t>(q - 1)] =
            Rational(a.entry(q).sign()) * x.entry(1);
      else
        pre[static_cast<size_t>(q - 1)] = x.entry(++copy_count);
    }
    return PrimalVec(std::move(pre), x.limit());
  };

  return Embedding{Embedding::Kind::FiniteSupport,
                   re1_space(r),
                   WAlphaSpace(alpha),
                   std::move(apply),
                   r,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   copy_pos,
                   [](long) { return Rational(1); },
                   1};
}

Rational BlockAveragingProjection::block_sum(const DualVec& xstar,
                                             long k) const {
  const long lo = 1L << (k - 1);
  return xstar.signed_tail_from(lo) - xstar.signed_tail_from(2 * lo);
}

DualVec BlockAveragingProjection::apply(const DualVec& xstar) const {
  if (!xstar.finitely_supported())
    throw ResultNotRepresentable(
        "block averages of an infinite tail leave the closed-form class");
  if (xstar.is_zero()) return DualVec::zero();
  const long ms = xstar.max_support();
  long kmax = 1;
  while ((1L << kmax) - 1 < ms) ++kmax;
  std::vector<Rational> pre;
  pre.reserve(static_cast<size_t>((1L << kmax) - 1));
  for (long k = 1; k <= kmax; ++k) {
    const long size = 1L << (k - 1);
    const Rational avg = block_sum(xstar, k) / Rational(size);
    for (long i = 0; i < size; ++i) pre.push_back(avg);
  }
  return DualVec::from_prefix(std::move(pre));
}

Rational BlockAveragingProjection::pair(const DualVec& xstar,
                                        const PrimalVec& y) const {
  // Blocks fully inside the constant range of y contribute
  // avg * (block size * limit) = limit * block sum, which telescopes into
  // one closed-form tail evaluation.
  long k0 = 1;
  while ((1L << (k0 - 1)) <= y.prefix_len()) ++k0;
  Rational out(0);
  for (long k = 1; k < k0; ++k) {
    const long lo = 1L << (k - 1);
    Rational ysum(0);
    for (long i = lo; i < 2 * lo; ++i) ysum += y.entry(i);
    out += block_sum(xstar, k) / Rational(lo) * ysum;
  }
  out += y.limit() * xstar.signed_tail_from(1L << (k0 - 1));
  return out;
}

Rational DyadicCatalog::gamma(long n) const {
  return Rational(2) * (alpha.entry(n) - beta.entry(n + 1));
}

DyadicCatalog catalog_example_5_11() {
  DualVec alpha({}, Tail::reciprocal_product(1));
  DualVec beta({}, Tail::geometric(Rational(1, 2), Rational(1, 2), 1));
  WAlphaSpace wa(alpha), wb(beta);

  // S w = (Sum_n gamma_n w(n), w(1), w(2), ...) with
  // gamma_n = 2 alpha(n) - beta(n) evaluated through two exact pairings.
  auto s_apply = [alpha, beta](const PrimalVec& w) {
    const Rational head =
        Rational(2) * pairing(alpha, w) - pairing(beta, w);
    std::vector<Rational> pre;
    pre.reserve(static_cast<size_t>(w.prefix_len() + 1));
    pre.push_back(head);
    for (const Rational& v : w.prefix()) pre.push_back(v);
    return PrimalVec(std::move(pre), w.limit());
  };
  Embedding S{Embedding::Kind::Catalog,
              wa,
              wb,
              std::move(s_apply),
              std::nullopt,
              std::nullopt,
              std::nullopt,
              std::nullopt,
              [](long n) { return n + 1; },
              [](long) { return Rational(1); },
              1};

  // T w repeats w(k) across dyadic block k.
  auto t_apply = [](const PrimalVec& w) {
    const long pl = w.prefix_len();
    if (pl > 20) throw DomainError("dyadic block expansion too large");
    std::vector<Rational> pre;
    pre.reserve(static_cast<size_t>((1L << std::max<long>(pl, 1)) - 1));
    for (long k = 1; k <= pl; ++k)
      for (long i = 0; i < (1L << (k - 1)); ++i) pre.push_back(w.entry(k));
    return PrimalVec(std::move(pre), w.limit());
  };
  Embedding T{Embedding::Kind::Catalog,
              wb,
              wa,
              std::move(t_apply),
              std::nullopt,
              std::nullopt,
              std::nullopt,
              std::nullopt,
              [](long n) { return 1L << (n - 1); },
              [](long) { return Rational(1); },
              1};

  return DyadicCatalog{std::move(alpha), std::move(beta), std::move(S),
                       std::move(T), BlockAveragingProjection{}};
}

EmbeddingReport verify_isometry(const Embedding& e,
                                const std::vector<PrimalVec>& samples) {
  EmbeddingReport rep;
  for (const PrimalVec& w : samples) {
    if (!e.source.contains(w))
      throw SampleNotInSource("sample is not a member of the source space: " +
                              w.str());
    ++rep.checked;
    const PrimalVec y = e.apply(w);
    if (!e.target.contains(y))
      rep.failures.push_back({w.str(), "image not in target space"});
    else if (y.sup_norm() != w.sup_norm())
      rep.failures.push_back(
          {w.str(), "norm changed: " + w.sup_norm().str() + " -> " +
                        y.sup_norm().str()});
  }
  return rep;
}

EmbeddingReport component_property_check(
    const Embedding& e, const std::vector<PrimalVec>& samples) {
  EmbeddingReport rep;
  for (const PrimalVec& w : samples) {
    ++rep.checked;
    const PrimalVec y = e.apply(w);
    for (long n = e.component_min; n <= w.prefix_len(); ++n) {
      const long k = e.component_index(n);
      if (y.entry(k) != e.component_sign(n) * w.entry(n)) {
        rep.failures.push_back(
            {w.str(), "component " + std::to_string(n) +
                          " missing at position " + std::to_string(k)});
        break;
      }
    }
  }
  return rep;
}

DualVec hyperplane_kernel_functional(const Embedding& e) {
  if (e.kind != Embedding::Kind::LimitPrepend)
    throw WrongKind("kernel functional applies to limit-prepend maps only");
  return DualVec::basis(1).scaled(*e.r) - e.source.alpha().shifted(1);
}

}  // namespace walpha
