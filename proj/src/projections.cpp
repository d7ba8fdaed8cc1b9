#include "walpha/projections.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace walpha {

namespace {

// Finite l1 x l1 dot product (both vectors finitely supported).
Rational dot(const DualVec& a, const DualVec& b) {
  Rational out(0);
  const long top = std::max(a.prefix_len(), b.prefix_len());
  for (long i = 1; i <= top; ++i) out += a.entry(i) * b.entry(i);
  return out;
}

Rational sup_abs(const DualVec& v) {
  Rational best(0);
  for (long i = 1; i <= v.prefix_len(); ++i)
    best = std::max(best, v.entry(i).abs());
  return best;
}

// Copy of v with every entry below n zeroed out.
DualVec tail_only(const DualVec& v, long n) {
  const DualVec m = v.materialized(n - 1);
  std::vector<Rational> pre(m.prefix().size(), Rational(0));
  for (long i = n; i <= m.prefix_len(); ++i)
    pre[static_cast<size_t>(i - 1)] = m.entry(i);
  return DualVec(std::move(pre), m.tail());
}

bool fits_integer(const Rational& x, long& out) {
  const mpq_class& q = x.raw();
  if (q.get_den() != 1) return false;
  if (!q.get_num().fits_slong_p()) return false;
  out = q.get_num().get_si();
  return true;
}

void require(bool ok, const char* property) {
  if (!ok) throw StructureViolation(property);
}

void validate_block(const L1Block& b, long j) {
  require(!b.sigma.empty(), "sigma must be nonempty");
  require(std::is_sorted(b.sigma.begin(), b.sigma.end()) && b.sigma.front() >= 1,
          "sigma must be sorted positive indices");
  require(b.ustar.finitely_supported() && b.ustarstar.finitely_supported(),
          "u* and u** must be finitely supported");
  require(b.ustar.l1_norm() == Rational(1), "||u*|| = 1 fails");
  require(sup_abs(b.ustarstar) == Rational(1), "||u**|| = 1 fails");
  require(dot(b.ustarstar, b.ustar) == Rational(1), "u**(u*) = 1 fails");
  // support of u* is exactly sigma, and (b): u**(e_k) = sgn(lambda_k) there
  for (long i = 1; i <= b.ustar.prefix_len(); ++i)
    if (!b.ustar.entry(i).is_zero())
      require(std::binary_search(b.sigma.begin(), b.sigma.end(), i),
              "supp(u*) escapes sigma");
  for (long k : b.sigma) {
    require(!b.ustar.entry(k).is_zero(), "u* vanishes on sigma");
    require(b.ustarstar.entry(k) == Rational(b.ustar.entry(k).sign()),
            "(b): u**(e_k) = sgn(lambda_k) fails on sigma");
  }
  (void)j;
}

}  // namespace

L1Projection::L1Projection(
    std::vector<L1Block> blocks, std::function<L1Block(long)> generator,
    std::function<std::optional<long>(long)> last_block_touching,
    long probe_blocks)
    : blocks_(std::move(blocks)),
      gen_(std::move(generator)),
      last_touch_(std::move(last_block_touching)) {
  const long total =
      gen_ ? std::max<long>(probe_blocks, static_cast<long>(blocks_.size()))
           : static_cast<long>(blocks_.size());
  std::map<long, long> sigma_owner;
  for (long j = 1; j <= total; ++j) {
    const L1Block b = block(j);
    validate_block(b, j);
    for (long i : b.sigma) {
      auto [it, fresh] = sigma_owner.emplace(i, j);
      require(fresh, "disjointness of the sigma blocks fails");
    }
  }
  // (c): omega_k meets no foreign sigma_j (within the probed window);
  // (a) u_j**(u_k*) = 0 follows and is checked directly as well.
  for (long k = 1; k <= total; ++k) {
    const L1Block bk = block(k);
    for (long h = 1; h <= bk.ustarstar.prefix_len(); ++h) {
      if (bk.ustarstar.entry(h).is_zero()) continue;
      auto it = sigma_owner.find(h);
      require(it == sigma_owner.end() || it->second == k,
              "(c): omega meets a foreign sigma");
    }
    if (k <= 8)
      for (long j = 1; j <= std::min<long>(total, 8); ++j)
        if (j != k)
          require(dot(bk.ustarstar, block(j).ustar).is_zero(),
                  "(a): u_j**(u_k*) = 0 fails");
  }
}

L1Block L1Projection::block(long j) const {
  if (j < 1) throw DomainError("block index must be positive");
  if (j <= static_cast<long>(blocks_.size()))
    return blocks_[static_cast<size_t>(j - 1)];
  if (!gen_) throw DomainError("block index beyond the declared blocks");
  return gen_(j);
}

Rational L1Projection::block_functional(long j, const DualVec& xstar) const {
  const L1Block b = block(j);
  Rational out(0);
  for (long h = 1; h <= b.ustarstar.prefix_len(); ++h) {
    const Rational c = b.ustarstar.entry(h);
    if (!c.is_zero()) out += c * xstar.entry(h);
  }
  return out;
}

std::optional<long> L1Projection::reach(const DualVec& xstar) const {
  if (xstar.is_zero()) return 0;
  if (!xstar.finitely_supported()) return std::nullopt;
  long top = 0;
  for (long h = 1; h <= xstar.max_support(); ++h) {
    if (xstar.entry(h).is_zero()) continue;
    const auto lt = last_touch_(h);
    if (!lt) return std::nullopt;
    top = std::max(top, *lt);
  }
  return top;
}

DualVec L1Projection::apply(const DualVec& xstar) const {
  const auto top = reach(xstar);
  if (!top)
    throw ResultNotRepresentable(
        "infinitely many blocks react to this functional");
  std::map<long, Rational> out;
  for (long j = 1; j <= *top; ++j) {
    const Rational v = block_functional(j, xstar);
    if (v.is_zero()) continue;
    const L1Block b = block(j);
    for (long i = 1; i <= b.ustar.prefix_len(); ++i)
      if (!b.ustar.entry(i).is_zero()) out[i] += v * b.ustar.entry(i);
  }
  if (out.empty()) return DualVec::zero();
  std::vector<Rational> pre(static_cast<size_t>(out.rbegin()->first),
                            Rational(0));
  for (const auto& [i, v] : out) pre[static_cast<size_t>(i - 1)] = v;
  return DualVec::from_prefix(std::move(pre));
}

std::optional<long> L1Projection::find_block_containing(
    long idx, long search_limit) const {
  for (long j = 1; j <= search_limit; ++j) {
    const L1Block b = block(j);
    if (std::binary_search(b.sigma.begin(), b.sigma.end(), idx)) return j;
    if (!gen_ && j >= static_cast<long>(blocks_.size())) break;
  }
  return std::nullopt;
}

L1Projection l1_identity_projection() {
  auto gen = [](long j) {
    return L1Block{{j}, DualVec::basis(j), DualVec::basis(j)};
  };
  auto touch = [](long h) { return std::optional<long>(h); };
  return L1Projection({}, gen, touch);
}

L1Projection l1_projection_example_5_14() {
  auto gen = [](long j) {
    const Rational coef =
        Rational(2) / Rational(j * (j + 1)) - Rational(1, 2).pow(j);
    std::vector<Rational> uss(static_cast<size_t>(j + 1), Rational(0));
    uss[0] = coef;
    uss[static_cast<size_t>(j)] = Rational(1);
    return L1Block{{j + 1}, DualVec::basis(j + 1),
                   DualVec::from_prefix(std::move(uss))};
  };
  auto touch = [](long h) {
    return h == 1 ? std::nullopt : std::optional<long>(h - 1);
  };
  return L1Projection({}, gen, touch);
}

namespace {

// Tries to continue `entries` (1-based values, positions start..) with a
// closed-form tail anchored at position `s`, checked against every
// remaining computed entry.
std::optional<Tail> match_tail(const std::vector<Rational>& entries, long s) {
  const long n = static_cast<long>(entries.size());
  auto at = [&entries](long pos) { return entries[static_cast<size_t>(pos - 1)]; };
  if (s > n - 3) return std::nullopt;

  auto verified = [&](const Tail& t) {
    for (long pos = s; pos <= n; ++pos)
      if (t.term(pos) != at(pos)) return false;
    return true;
  };

  bool all_zero = true;
  for (long pos = s; pos <= n; ++pos) all_zero = all_zero && at(pos).is_zero();
  if (all_zero) return Tail::zero(s);

  if (!at(s).is_zero() && !at(s + 1).is_zero()) {
    const Rational ratio = at(s + 1) / at(s);
    if (ratio.abs() < Rational(1)) {
      const Tail t = Tail::geometric(at(s), ratio, s);
      if (verified(t)) return t;
    }
    // reciprocal product: e(pos) = c / ((pos-d)(pos-d+1))
    const Rational q = at(s) / at(s + 1);
    if (q != Rational(1)) {
      const Rational d_rat =
          (Rational(s) + Rational(2) - q * Rational(s)) / (Rational(1) - q);
      long d;
      if (fits_integer(d_rat, d) && s - d >= 1) {
        const Rational c = at(s) * Rational((s - d) * (s - d + 1));
        const Tail t = Tail::reciprocal_product(s, c, d);
        if (verified(t)) return t;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RecoveredBeta recover_beta(const L1Projection& p, const DualVec& alpha,
                           const std::function<long(long)>& index_map,
                           long len) {
  const long probe = len + 8;
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(probe));
  for (long k = 1; k <= probe; ++k) {
    const long kn = index_map(k);
    const auto j = p.find_block_containing(kn, kn + probe + 64);
    if (!j)
      throw DomainError("no block contains mapped index " +
                        std::to_string(kn));
    entries.push_back(p.block_functional(*j, alpha));
  }
  for (long s = 1; s <= len; ++s) {
    if (auto t = match_tail(entries, s)) {
      std::vector<Rational> pre(entries.begin(), entries.begin() + (s - 1));
      return RecoveredBeta{DualVec(std::move(pre), *t), true};
    }
  }
  entries.resize(static_cast<size_t>(len));
  return RecoveredBeta{DualVec::from_prefix(std::move(entries)), false};
}

namespace {

std::optional<long> single_support(const DualVec& a) {
  if (!a.finitely_supported()) return std::nullopt;
  long p = 0, count = 0;
  for (long i = 1; i <= a.prefix_len(); ++i)
    if (!a.entry(i).is_zero()) {
      ++count;
      p = i;
    }
  return count == 1 ? std::optional<long>(p) : std::nullopt;
}

}  // namespace

PrimalProjection thm71_projection(const DualVec& alpha, const Rational& eps) {
  if (!(eps.sign() > 0))
    throw PreconditionViolated(
        "eps > 0 required; the 1-complemented case needs a norm-attaining "
        "copy (see one_complemented_copy_available)");
  const Rational rstar = alpha.l1_norm();
  if (rstar.is_zero()) throw PreconditionViolated("r* > 0 required");
  const Rational r = rstar / (Rational(1) + eps);

  const auto singleton = single_support(alpha);
  Embedding copy = singleton
                       ? embed_general(DualVec::basis(1).scaled(r), alpha)
                       : embed_re1_into_alpha(alpha, r);

  auto cidx = copy.component_index;
  auto copy_apply = copy.apply;
  DualVec a = alpha;
  auto apply = [a, r, cidx, copy_apply](const PrimalVec& x) {
    // P = T o Q with Q(x) = (a(x)/r, x(c_2), x(c_3), ...): the coefficient
    // vector of P(x) in the basis of the copy.
    const Rational ax = pairing(a, x);
    std::vector<Rational> pre;
    const long m = x.prefix_len() + 1;
    pre.reserve(static_cast<size_t>(m));
    pre.push_back(ax / r);
    for (long k = 2; k <= m; ++k) pre.push_back(x.entry(cidx(k)));
    return copy_apply(PrimalVec(std::move(pre), ax));
  };

  const long p = copy.conj_index.value_or(1);
  const Rational flip = copy.conj_sign;
  std::function<DualVec(long)> column;
  long stable_from;

  if (singleton) {
    // Copy through the limit-prepend map into W_{r* e_1^*}, conjugated to
    // position p. Pre-conjugation columns: alpha/r*, alpha/r, then
    // coordinate vectors.
    auto col_v = [a, r, rstar, p](long m) {
      if (m == 1) return a.scaled(rstar.inverse());
      if (m == 2) return a.scaled(r.inverse());
      return DualVec::basis(m == p ? 1 : m);
    };
    column = [col_v, p, flip](long m) {
      if (m == 1) return p == 1 ? col_v(1).scaled(flip) : col_v(p);
      if (m == p) return col_v(1).scaled(flip);
      return col_v(m);
    };
    stable_from = std::max<long>(3, p + 1);
  } else {
    const long K = *copy.K, N = *copy.N;
    const Rational s = *copy.s;
    const Rational a1 = canonical_max_abs(alpha);
    // G(q) = alpha'(tau(q)) for tau(q) >= N: the part of the first-row
    // series seen through the conjugation.
    DualVec G = tail_only(a, N);
    if (p >= N)
      G = G - DualVec::basis(p).scaled(a.entry(p)) +
          DualVec::basis(1).scaled(a.entry(1));
    auto col_t = [a, G, s, r, a1, K, N, p](long m) {
      if (m == 1) return a.scaled(s / r) - G.scaled(a1.inverse());
      if (m <= K) {
        const int sgn = (m == p ? a.entry(1) : a.entry(m)).sign();
        return a.scaled(Rational(sgn) / r);
      }
      if (m <= N - 1) return DualVec::zero();
      return DualVec::basis(m == p ? 1 : m);
    };
    column = [col_t, p, flip](long m) {
      if (m == 1) return p == 1 ? col_t(1).scaled(flip) : col_t(p);
      if (m == p) return col_t(1).scaled(flip);
      return col_t(m);
    };
    stable_from = std::max<long>(N, p + 1);
  }

  std::vector<Rational> norms{Rational(1)};
  for (long m = 1; m < stable_from; ++m) norms.push_back(column(m).l1_norm());

  return PrimalProjection{WAlphaSpace(alpha), std::move(copy),     eps,
                          r,                  std::move(apply),    std::move(column),
                          stable_from,        std::move(norms)};
}

PrimalProjection identity_projection(const DualVec& alpha) {
  WAlphaSpace space(alpha);
  return PrimalProjection{space,
                          Embedding::identity(space),
                          std::nullopt,
                          alpha.l1_norm(),
                          [](const PrimalVec& x) { return x; },
                          [](long m) { return DualVec::basis(m); },
                          1,
                          {Rational(1)}};
}

NormBound operator_norm_upper(const PrimalProjection& p, long probe_limit) {
  Rational bound(0);
  for (const Rational& v : p.pattern_norms) bound = std::max(bound, v);
  const long upto = std::min(probe_limit, p.stable_from + 4);
  for (long m = 1; m <= upto; ++m)
    bound = std::max(bound, p.column(m).l1_norm());
  return NormBound{bound, p.stable_from <= probe_limit + 1};
}

bool one_complemented_copy_available(const DualVec& alpha) {
  const Rational rstar = alpha.l1_norm();
  if (rstar.is_zero()) return true;  // c0 is its own copy
  if (rstar == Rational(1)) return contains_c(WAlphaSpace(alpha));
  return alpha.finitely_supported();
}

}  // namespace walpha
