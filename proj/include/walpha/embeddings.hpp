#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "walpha/walpha.hpp"

namespace walpha {

/// An explicit isometric embedding between two hyperplanes, together with
/// the data needed to verify it: the map itself and the transport of
/// components (w(n) reappears at position component_index(n), up to sign).
struct Embedding {
  enum class Kind {
    MSpace,         // W_{r e_1^*} into W_alpha via the K/s/N construction
    FiniteSupport,  // W_{||a|| e_1^*} into W_alpha, supp(alpha) finite
    LimitPrepend,   // W_beta into W_{r e_1^*} via x -> (x_inf/r, x, ...)
    Composite,      // LimitPrepend chained with MSpace
    Catalog,        // hand-built maps from the worked examples
    Identity,
  };

  Kind kind;
  WAlphaSpace source;
  WAlphaSpace target;
  std::function<PrimalVec(const PrimalVec&)> apply;

  // Construction parameters where applicable.
  std::optional<Rational> r;
  std::optional<long> K;
  std::optional<Rational> s;
  std::optional<long> N;

  // Component transport, defined for n >= component_min.
  std::function<long(long)> component_index;
  std::function<Rational(long)> component_sign;
  long component_min = 1;

  // Conjugation used to reach the canonical coordinate order: positions 1
  // and conj_index swapped, sign conj_sign applied (Remark 5.1 moves).
  std::optional<long> conj_index;
  Rational conj_sign{1};

  static Embedding identity(WAlphaSpace space);
};

/// Largest |entry| of a nonzero functional (always attained: tail terms
/// never increase in absolute value).
Rational canonical_max_abs(const DualVec& alpha);

/// Builds the copy of W_{r e_1^*} inside W_alpha for |alpha_max| <= r <
/// ||alpha||. The construction works in coordinates where the largest
/// |entry| sits first; the returned map is conjugated back, so it targets
/// the caller's W_alpha as given.
Embedding embed_re1_into_alpha(const DualVec& alpha, const Rational& r);

/// x -> (x_inf / r, x(1), x(2), ...), an isometry of W_beta into
/// W_{r e_1^*} whenever ||beta|| <= r.
Embedding embed_beta_into_re1(const DualVec& beta, const Rational& r);

/// W_beta into W_alpha for ||beta|| < ||alpha||, composing the two maps
/// above with r = max(max |alpha entry|, ||beta||).
Embedding embed_general(const DualVec& beta, const DualVec& alpha);

/// The norm-attaining copy of W_{r e_1^*} with r = ||alpha||, available
/// exactly when alpha has finite support and 0 < ||alpha|| < 1.
Embedding embed_finite_support(const DualVec& alpha);

/// Norm-one projection of l1 that averages over the dyadic blocks
/// {1}, {2,3}, {4..7}, ...; adjoint to the block-duplication map.
class BlockAveragingProjection {
 public:
  /// Sum of x*(i) over block k (indices 2^{k-1} .. 2^k - 1).
  Rational block_sum(const DualVec& xstar, long k) const;

  /// The image P x* written out; needs finite support to stay in the
  /// closed-form class, otherwise throws ResultNotRepresentable.
  DualVec apply(const DualVec& xstar) const;

  /// Exact <P x*, y> for any x*, via block sums and the closed-form tail.
  Rational pair(const DualVec& xstar, const PrimalVec& y) const;
};

/// The mutual embeddings between the hyperplanes of a(n) = 1/(n(n+1)) and
/// b(n) = 1/2^n, plus the dual projection that recovers the block map.
struct DyadicCatalog {
  DualVec alpha;  // 1/(n(n+1))
  DualVec beta;   // 1/2^n
  Embedding S;    // W_alpha -> W_beta, prepends Sum gamma_n w(n)
  Embedding T;    // W_beta -> W_alpha, duplicates w(k) over block k
  BlockAveragingProjection P;
  /// gamma_n = 2(alpha(n) - beta(n+1)).
  Rational gamma(long n) const;
};

DyadicCatalog catalog_example_5_11();

struct CheckFailure {
  std::string witness;
  std::string what;
};

struct EmbeddingReport {
  long checked = 0;
  std::vector<CheckFailure> failures;
  bool all_passed() const { return failures.empty(); }
};

/// For each sample: exact target membership and exact norm preservation.
/// Samples must belong to the source space.
EmbeddingReport verify_isometry(const Embedding& e,
                                const std::vector<PrimalVec>& samples);

/// Checks that every visible component w(n) reappears in e.apply(w) at the
/// recorded position with the recorded sign.
EmbeddingReport component_property_check(const Embedding& e,
                                         const std::vector<PrimalVec>& samples);

/// For a LimitPrepend embedding T of W_beta into W_{r e_1^*}: the image is
/// the kernel of f = r e_1^* - Sum_{i>=2} beta(i-1) e_i^*.
DualVec hyperplane_kernel_functional(const Embedding& e);

}  // namespace walpha
