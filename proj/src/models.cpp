#include "walpha/models.hpp"

#include <utility>

#include "walpha/errors.hpp"

namespace walpha {

namespace {

Rational max_rat(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace

Rational Omega2Member::sup_norm() const {
  return max_rat(row1.sup_norm(), row2.sup_norm());
}

Omega2Member operator+(const Omega2Member& a, const Omega2Member& b) {
  return {a.row1 + b.row1, a.row2 + b.row2};
}

Omega2Member scaled(const Omega2Member& a, const Rational& c) {
  return {a.row1.scaled(c), a.row2.scaled(c)};
}

bool operator==(const Omega2Member& a, const Omega2Member& b) {
  return a.row1 == b.row1 && a.row2 == b.row2;
}

Rational evaluate(const Omega2Functional& f, const Omega2Member& m) {
  return pairing(f.row1, m.row1) + pairing(f.row2, m.row2);
}

Omega2Model build_model(Omega2Functional x1star, Omega2Functional x2star) {
  const Rational n = max_rat(x1star.l1_norm(), x2star.l1_norm());
  if (n > Rational(1))
    throw NormTooLarge("constraint functional has norm " + n.str() + " > 1");
  return {std::move(x1star), std::move(x2star)};
}

bool model_membership(const Omega2Model& m, const Omega2Member& f) {
  return f.row1.limit() == evaluate(m.x1star, f) &&
         f.row2.limit() == evaluate(m.x2star, f);
}

Rational model_rstar(const Omega2Model& m) {
  return max_rat(m.x1star.l1_norm(), m.x2star.l1_norm());
}

const Omega2Functional& cluster_point(const Omega2Model& m, int row) {
  if (row != 1 && row != 2) throw DomainError("row must be 1 or 2");
  return row == 1 ? m.x1star : m.x2star;
}

bool condition_S_check(const Omega2Model& m, int row) {
  const Omega2Functional& cl = cluster_point(m, row);
  return row == 1 ? cl.row2.is_zero() : cl.row1.is_zero();
}

bool condition_P_witness_check(const Omega2Model& m,
                               const Omega2Member& candidate, int row) {
  const Omega2Functional& cl = cluster_point(m, row);
  if (!model_membership(m, candidate))
    throw NotAMember("candidate violates a defining constraint");
  if (candidate.sup_norm() != Rational(1))
    throw NotUnitNorm("candidate has sup-norm " + candidate.sup_norm().str());
  return evaluate(cl, candidate).abs() == cl.l1_norm();
}

namespace {

bool row_is_all_ones(const PrimalVec& v) {
  if (v.limit() != Rational(1)) return false;
  for (const Rational& r : v.prefix())
    if (r != Rational(1)) return false;
  return true;
}

}  // namespace

Cor41Report cor41_witness_check(const Omega2Model& m,
                                const Omega2Member& candidate, int row) {
  if (!model_membership(m, candidate))
    throw NotAMember("candidate violates a defining constraint");
  const Omega2Functional& cl = cluster_point(m, row);

  Cor41Report rep;
  rep.basis_converges = true;  // the basis rows converge to x1*, x2* by the
                               // model's defining duality
  rep.cluster_identity = "e_{" + std::to_string(row) + ",j} -> (row1: " +
                         cl.row1.str() + "; row2: " + cl.row2.str() + ")";
  // The basis functionals of the row are supported on that row only, so
  // disjointness from the cluster support means the cluster has no mass
  // on this row.
  rep.supports_disjoint = (row == 1 ? cl.row1 : cl.row2).is_zero();
  // Every basis functional of the row evaluates to a row entry of the
  // candidate; all of them, and the cluster value, must equal 1.
  const PrimalVec& own = row == 1 ? candidate.row1 : candidate.row2;
  rep.values_one =
      row_is_all_ones(own) && evaluate(cl, candidate) == Rational(1);
  return rep;
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(num(rng), den(rng));
}

std::vector<Rational> random_prefix(std::mt19937_64& rng, long len) {
  std::vector<Rational> p;
  p.reserve(len);
  for (long i = 0; i < len; ++i) p.push_back(small_rational(rng));
  return p;
}

Rational head_dot(const DualVec& f, const std::vector<Rational>& prefix) {
  Rational s(0);
  for (long k = 1; k <= static_cast<long>(prefix.size()); ++k)
    s += f.entry(k) * prefix[k - 1];
  return s;
}

}  // namespace

Omega2Member sample_model_member(const Omega2Model& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> len(1, 5);
  std::vector<Rational> p1 = random_prefix(rng, len(rng));
  std::vector<Rational> p2 = random_prefix(rng, len(rng));
  for (;;) {
    const long n1 = static_cast<long>(p1.size());
    const long n2 = static_cast<long>(p2.size());
    // The limits L1, L2 satisfy the linear system
    //   L1 = A1 + t11 L1 + t12 L2,   L2 = A2 + t21 L1 + t22 L2,
    // where A_i pairs the constraint with the prefixes and t_ik is the
    // constraint's signed tail mass over row k beyond the prefix.
    const Rational a1 = head_dot(m.x1star.row1, p1) + head_dot(m.x1star.row2, p2);
    const Rational a2 = head_dot(m.x2star.row1, p1) + head_dot(m.x2star.row2, p2);
    const Rational t11 = m.x1star.row1.signed_tail_from(n1 + 1);
    const Rational t12 = m.x1star.row2.signed_tail_from(n2 + 1);
    const Rational t21 = m.x2star.row1.signed_tail_from(n1 + 1);
    const Rational t22 = m.x2star.row2.signed_tail_from(n2 + 1);
    const Rational det = (Rational(1) - t11) * (Rational(1) - t22) - t12 * t21;
    if (!det.is_zero()) {
      const Rational l1 = (a1 * (Rational(1) - t22) + t12 * a2) / det;
      const Rational l2 = (a2 * (Rational(1) - t11) + t21 * a1) / det;
      return {PrimalVec(std::move(p1), l1), PrimalVec(std::move(p2), l2)};
    }
    p1.push_back(small_rational(rng));
    p2.push_back(small_rational(rng));
  }
}

std::vector<Omega2Member> sample_model_members(const Omega2Model& m, long count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Omega2Member> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) out.push_back(sample_model_member(m, rng));
  return out;
}

Omega2Model model_example_4_2() {
  const DualVec half = parse_dual("tail=geom(1/2,1/2)");
  return build_model({DualVec::zero(), half}, {half, DualVec::zero()});
}

Omega2Model model_example_6_7() { return model_example_4_2(); }

Omega2Model model_example_6_8() {
  return build_model(
      {parse_dual("tail=geom(-1/2,-1/2)"), DualVec::zero()},
      {DualVec::zero(), parse_dual("tail=geom(-1/3,-1/3)")});
}

Omega2Model model_remark_6_4() {
  return build_model(
      {parse_dual("tail=geom(1/2,1/4)"), parse_dual("tail=geom(1/4,1/4)")},
      {DualVec::zero(), DualVec::zero()});
}

Omega2Model model_example_9_3(const Rational& r1, const Rational& r2) {
  if (!(Rational(0) < r1 && r1 < r2 && r2 < Rational(1)))
    throw DomainError("parameters must satisfy 0 < r1 < r2 < 1");
  return build_model({DualVec::basis(1).scaled(r1), DualVec::zero()},
                     {DualVec::basis(1).scaled(-r2), DualVec::zero()});
}

Omega2Model model_catalog(const std::string& id) {
  if (id == "example-4.2") return model_example_4_2();
  if (id == "example-6.7") return model_example_6_7();
  if (id == "example-6.8") return model_example_6_8();
  if (id == "remark-6.4") return model_remark_6_4();
  const std::string head = "example-9.3(";
  if (id.rfind(head, 0) == 0 && id.back() == ')') {
    const std::string args = id.substr(head.size(), id.size() - head.size() - 1);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw ParseError("example-9.3 needs two parameters: " + id);
    return model_example_9_3(Rational::parse(args.substr(0, comma)),
                             Rational::parse(args.substr(comma + 1)));
  }
  throw ParseError("unknown model identifier: " + id);
}

}  // namespace walpha
