#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walpha/rational.hpp"

namespace walpha {

/// Closed-form descriptor for the infinite part of an l1 sequence.
///
/// term(n), for n >= start():
///   Zero              -> 0
///   Geometric         -> first * ratio^(n - start),  |ratio| < 1
///   ReciprocalProduct -> coeff / ((n - offset)(n - offset + 1))
///
/// Both the signed and the absolute tail sums have exact closed forms,
/// which is what keeps every norm and pairing in the library rational.
class Tail {
 public:
  enum class Kind { Zero, Geometric, ReciprocalProduct };

  static Tail zero(long start) { return Tail(Kind::Zero, start); }
  static Tail geometric(Rational first, Rational ratio, long start);
  static Tail reciprocal_product(long start, Rational coeff = Rational(1),
                                 long offset = 0);

  Kind kind() const { return kind_; }
  long start() const { return start_; }
  const Rational& first() const { return first_; }
  const Rational& ratio() const { return ratio_; }
  const Rational& coeff() const { return first_; }
  long offset() const { return offset_; }

  Rational term(long n) const;
  /// Sum_{j >= n} term(j), for n >= start.
  Rational sum_from(long n) const;
  /// Sum_{j >= n} |term(j)|, for n >= start.
  Rational abs_sum_from(long n) const;

  /// Same sequence, re-anchored at new_start >= start.
  Tail advanced_to(long new_start) const;

  /// Collapses degenerate cases (zero first/coeff, zero ratio) to simpler
  /// kinds. A ratio-0 geometric keeps one nonzero term; materialize() on
  /// DualVec absorbs it into the prefix.
  bool is_effectively_zero() const;

  friend bool operator==(const Tail& a, const Tail& b);

 private:
  Tail(Kind k, long start) : kind_(k), start_(start) {}

  Kind kind_;
  long start_;
  Rational first_;   // Geometric first term; ReciprocalProduct coefficient
  Rational ratio_;   // Geometric only
  long offset_ = 0;  // ReciprocalProduct only
};

/// Element of l1 with an exact rational prefix and a closed-form tail.
/// Indices are 1-based; entry(n) = prefix[n-1] for n <= prefix length,
/// tail term otherwise. Immutable value type.
class DualVec {
 public:
  DualVec() : tail_(Tail::zero(1)) {}
  DualVec(std::vector<Rational> prefix, Tail tail);
  static DualVec zero() { return DualVec(); }
  static DualVec from_prefix(std::vector<Rational> prefix);
  /// Standard basis vector e_n^* (1-based).
  static DualVec basis(long n);

  long prefix_len() const { return static_cast<long>(prefix_.size()); }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }

  Rational entry(long n) const;
  Rational l1_norm() const { return abs_tail_from(1); }
  /// Sum_{j >= n} entry(j).
  Rational signed_tail_from(long n) const;
  /// Sum_{j >= n} |entry(j)|.
  Rational abs_tail_from(long n) const;

  bool is_zero() const;
  /// True when only finitely many entries are nonzero.
  bool finitely_supported() const;
  /// Largest index with a nonzero entry; requires finite support.
  long max_support() const;

  DualVec scaled(const Rational& c) const;
  /// Prepends k zero entries.
  DualVec shifted(long k) const;
  DualVec negated() const { return scaled(Rational(-1)); }
  /// Copy whose prefix covers at least the first n entries.
  DualVec materialized(long n) const;

  /// Exact sum; throws ResultNotRepresentable when the tails admit no
  /// common closed form (e.g. two geometric tails with different ratios).
  friend DualVec operator+(const DualVec& a, const DualVec& b);
  friend DualVec operator-(const DualVec& a, const DualVec& b);

  friend bool operator==(const DualVec& a, const DualVec& b);

  std::string str() const;

  /// Prefix length cap applied when aligning incompatible representations.
  static constexpr long kMaxAutoExtend = 4096;

 private:
  std::vector<Rational> prefix_;
  Tail tail_;  // start == prefix_len() + 1 always
};

/// Eventually constant element of c: exact prefix, then a constant limit.
class PrimalVec {
 public:
  PrimalVec() : limit_(0) {}
  PrimalVec(std::vector<Rational> prefix, Rational limit)
      : prefix_(std::move(prefix)), limit_(std::move(limit)) {}
  static PrimalVec constant(Rational value) {
    return PrimalVec({}, std::move(value));
  }
  static PrimalVec zero() { return constant(Rational(0)); }
  /// Unit vector: 1 at position n, limit 0.
  static PrimalVec unit(long n);

  long prefix_len() const { return static_cast<long>(prefix_.size()); }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& limit() const { return limit_; }

  Rational entry(long n) const;
  Rational sup_norm() const;

  PrimalVec scaled(const Rational& c) const;
  /// Prepends the given entries.
  PrimalVec shifted_with(const std::vector<Rational>& head) const;

  friend PrimalVec operator+(const PrimalVec& a, const PrimalVec& b);
  friend PrimalVec operator-(const PrimalVec& a, const PrimalVec& b);
  friend bool operator==(const PrimalVec& a, const PrimalVec& b);

  std::string str() const;

 private:
  std::vector<Rational> prefix_;
  Rational limit_;
};

/// Duality of W_alpha: <f, x> = Sum_i f(i) x(i).
Rational pairing(const DualVec& f, const PrimalVec& x);

/// Duality of c: <f, x> = f(1) lim x + Sum_i f(i+1) x(i).
Rational c_pairing(const DualVec& f, const PrimalVec& x);

inline Rational l1_norm(const DualVec& f) { return f.l1_norm(); }
inline Rational sup_norm(const PrimalVec& x) { return x.sup_norm(); }

// Textual grammar shared by the CLI and test fixtures:
//   dualvec := "prefix=[" rational ("," rational)* "]" (";" tail)? | "tail=" tail
//   tail    := "zero" | "geom(" rational "," rational ")" | "recip"
//   primal  := "prefix=[" ... "]; limit=" rational
// "recip" also accepts optional arguments recip(c) / recip(c,offset) so that
// every vector the library prints re-parses to an equal value.
DualVec parse_dual(const std::string& text);
PrimalVec parse_primal(const std::string& text);

}  // namespace walpha
