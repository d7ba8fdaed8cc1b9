#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "walpha/embeddings.hpp"

namespace walpha {

/// One block of a norm-one projection of l1: indices sigma, the norm-one
/// vector u* supported there, and the norming functional u** (support
/// omega, given as a finitely supported coefficient vector).
struct L1Block {
  std::vector<long> sigma;
  DualVec ustar;
  DualVec ustarstar;
};

/// Norm-one projection P x* = Sum_j u_j**(x*) u_j* with the structural
/// properties (a)-(d): disjoint blocks, biorthogonality, sign-matching on
/// sigma, and omega_k meeting no foreign sigma_j.
class L1Projection {
 public:
  /// Validates the declared blocks (and generated blocks up to
  /// probe_blocks) against the structural properties; throws
  /// StructureViolation naming the failed property.
  L1Projection(std::vector<L1Block> blocks,
               std::function<L1Block(long)> generator,
               std::function<std::optional<long>(long)> last_block_touching,
               long probe_blocks = 64);

  /// j-th block, 1-based; generated on demand past the explicit list.
  L1Block block(long j) const;

  /// u_j**(x*), exact for any x* in the descriptor class.
  Rational block_functional(long j, const DualVec& xstar) const;

  /// P x* written out. Needs every activated block to be locatable, which
  /// requires finite support and finite block reach; otherwise throws
  /// ResultNotRepresentable.
  DualVec apply(const DualVec& xstar) const;

  /// Largest block index whose omega meets supp(x*); nullopt when
  /// infinitely many blocks react to x*.
  std::optional<long> reach(const DualVec& xstar) const;

  /// Block index j with idx in sigma_j, searching up to search_limit.
  std::optional<long> find_block_containing(long idx,
                                            long search_limit) const;

 private:
  std::vector<L1Block> blocks_;
  std::function<L1Block(long)> gen_;
  std::function<std::optional<long>(long)> last_touch_;
};

/// The identity of l1 in block form: sigma_j = {j}, u_j* = u_j** = e_j.
L1Projection l1_identity_projection();

/// The projection of Example 5.14: sigma_j = {j+1}, omega_j = {1, j+1},
/// u_j** = (2/(j(j+1)) - 1/2^j) e_1 + e_{j+1}; recovers the reciprocal
/// beta from the geometric alpha.
L1Projection l1_projection_example_5_14();

struct RecoveredBeta {
  DualVec beta;
  bool tail_identified = false;  // false: prefix exact, tail unknown
};

/// beta(k) = Sum_{h in omega_{j_k}} u_{j_k}**(e_h) alpha(h), where j_k is
/// the block containing index_map(k). Computes `len` entries and tries to
/// match the remainder to a closed-form tail.
RecoveredBeta recover_beta(const L1Projection& p, const DualVec& alpha,
                           const std::function<long(long)>& index_map,
                           long len = 12);

/// Projection of X = W_alpha onto an embedded copy of W_{r e_1^*}, with
/// exact adjoint columns and certified operator-norm metadata.
struct PrimalProjection {
  WAlphaSpace space;  // ambient X
  Embedding copy;     // the complemented copy, image = range of P
  std::optional<Rational> eps;
  Rational r;
  std::function<PrimalVec(const PrimalVec&)> apply;
  /// Adjoint column m: P(x)(m) = pairing(column(m), x) for all x in X.
  std::function<DualVec(long)> column;
  /// Columns m >= stable_from are plain coordinate vectors (norm 1).
  long stable_from;
  /// l1 norms of all distinct column patterns (certificate data).
  std::vector<Rational> pattern_norms;
};

/// The (1+eps)-complemented copy of Theorem 7.1: Y isometric to
/// W_{(r*/(1+eps)) e_1^*}, P(x) = ((1+eps)/r*) e~*(x) e
/// + Sum_k (e~_{n_k}*(x) - e~*(x)) e_{n_k} made concrete in X = W_alpha.
PrimalProjection thm71_projection(const DualVec& alpha, const Rational& eps);

/// Identity of W_alpha in the same packaging.
PrimalProjection identity_projection(const DualVec& alpha);

/// sup over adjoint-column l1 norms: exact for m <= probe_limit, certified
/// when the stabilization metadata covers everything beyond.
struct NormBound {
  Rational bound;
  bool certified;
};
NormBound operator_norm_upper(const PrimalProjection& p, long probe_limit);

/// Remark 7.2: a 1-complemented copy of W_{r* e_1^*} exists iff X contains
/// an isometric copy of it (Prop 5.7 for r* = 1, Prop 5.8 for r* < 1).
bool one_complemented_copy_available(const DualVec& alpha);

}  // namespace walpha
