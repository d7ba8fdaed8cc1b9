#include "walpha/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace walpha {

// ---------------------------------------------------------------------------
// Tail

Tail Tail::geometric(Rational first, Rational ratio, long start) {
  if (!(ratio.abs() < Rational(1)))
    throw DomainError("geometric tail requires |ratio| < 1");
  if (first.is_zero()) return zero(start);
  Tail t(Kind::Geometric, start);
  t.first_ = std::move(first);
  t.ratio_ = std::move(ratio);
  return t;
}

Tail Tail::reciprocal_product(long start, Rational coeff, long offset) {
  if (coeff.is_zero()) return zero(start);
  if (start <= offset)
    throw DomainError("reciprocal-product tail must start past its offset");
  Tail t(Kind::ReciprocalProduct, start);
  t.first_ = std::move(coeff);
  t.offset_ = offset;
  return t;
}

Rational Tail::term(long n) const {
  switch (kind_) {
    case Kind::Zero:
      return Rational(0);
    case Kind::Geometric:
      return first_ * ratio_.pow(n - start_);
    case Kind::ReciprocalProduct: {
      const long m = n - offset_;
      return first_ / Rational(m * (m + 1));
    }
  }
  return Rational(0);
}

Rational Tail::sum_from(long n) const {
  switch (kind_) {
    case Kind::Zero:
      return Rational(0);
    case Kind::Geometric:
      return first_ * ratio_.pow(n - start_) / (Rational(1) - ratio_);
    case Kind::ReciprocalProduct:
      // telescoping: Sum_{j>=n} 1/((j-d)(j-d+1)) = 1/(n-d)
      return first_ / Rational(n - offset_);
  }
  return Rational(0);
}

Rational Tail::abs_sum_from(long n) const {
  switch (kind_) {
    case Kind::Zero:
      return Rational(0);
    case Kind::Geometric:
      return first_.abs() * ratio_.abs().pow(n - start_) /
             (Rational(1) - ratio_.abs());
    case Kind::ReciprocalProduct:
      return first_.abs() / Rational(n - offset_);
  }
  return Rational(0);
}

Tail Tail::advanced_to(long new_start) const {
  if (new_start < start_)
    throw DomainError("cannot rewind a tail descriptor");
  if (new_start == start_) return *this;
  switch (kind_) {
    case Kind::Zero:
      return zero(new_start);
    case Kind::Geometric:
      return geometric(first_ * ratio_.pow(new_start - start_), ratio_,
                       new_start);
    case Kind::ReciprocalProduct:
      return reciprocal_product(new_start, first_, offset_);
  }
  return zero(new_start);
}

bool Tail::is_effectively_zero() const { return kind_ == Kind::Zero; }

bool operator==(const Tail& a, const Tail& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Tail::Kind::Zero:
      return true;
    case Tail::Kind::Geometric:
      return a.start_ == b.start_ && a.first_ == b.first_ &&
             a.ratio_ == b.ratio_;
    case Tail::Kind::ReciprocalProduct:
      return a.start_ == b.start_ && a.first_ == b.first_ &&
             a.offset_ == b.offset_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// DualVec

DualVec::DualVec(std::vector<Rational> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(Tail::zero(1)) {
  const long want = prefix_len() + 1;
  if (tail.start() > want)
    throw DomainError("tail start past end of prefix");
  tail = tail.advanced_to(want);
  // A ratio-0 geometric has a single nonzero term; absorb it.
  if (tail.kind() == Tail::Kind::Geometric && tail.ratio().is_zero()) {
    prefix_.push_back(tail.first());
    tail = Tail::zero(prefix_len() + 1);
  }
  tail_ = tail;
}

DualVec DualVec::from_prefix(std::vector<Rational> prefix) {
  const long start = static_cast<long>(prefix.size()) + 1;
  return DualVec(std::move(prefix), Tail::zero(start));
}

DualVec DualVec::basis(long n) {
  if (n < 1) throw DomainError("basis index must be >= 1");
  std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
  p.back() = Rational(1);
  return from_prefix(std::move(p));
}

Rational DualVec::entry(long n) const {
  if (n < 1) throw DomainError("entry index must be >= 1");
  if (n <= prefix_len()) return prefix_[static_cast<size_t>(n - 1)];
  return tail_.term(n);
}

Rational DualVec::signed_tail_from(long n) const {
  if (n < 1) n = 1;
  Rational s(0);
  for (long i = n; i <= prefix_len(); ++i) s += prefix_[i - 1];
  s += tail_.sum_from(std::max(n, tail_.start()));
  return s;
}

Rational DualVec::abs_tail_from(long n) const {
  if (n < 1) n = 1;
  Rational s(0);
  for (long i = n; i <= prefix_len(); ++i) s += prefix_[i - 1].abs();
  s += tail_.abs_sum_from(std::max(n, tail_.start()));
  return s;
}

bool DualVec::is_zero() const {
  if (!tail_.is_effectively_zero()) return false;
  return std::all_of(prefix_.begin(), prefix_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool DualVec::finitely_supported() const {
  return tail_.is_effectively_zero();
}

long DualVec::max_support() const {
  if (!finitely_supported())
    throw DomainError("max_support requires finite support");
  for (long i = prefix_len(); i >= 1; --i)
    if (!prefix_[i - 1].is_zero()) return i;
  return 0;
}

DualVec DualVec::scaled(const Rational& c) const {
  std::vector<Rational> p;
  p.reserve(prefix_.size());
  for (const auto& e : prefix_) p.push_back(e * c);
  Tail t = Tail::zero(prefix_len() + 1);
  if (!c.is_zero()) {
    switch (tail_.kind()) {
      case Tail::Kind::Zero:
        break;
      case Tail::Kind::Geometric:
        t = Tail::geometric(tail_.first() * c, tail_.ratio(), tail_.start());
        break;
      case Tail::Kind::ReciprocalProduct:
        t = Tail::reciprocal_product(tail_.start(), tail_.coeff() * c,
                                     tail_.offset());
        break;
    }
  }
  return DualVec(std::move(p), t);
}

DualVec DualVec::shifted(long k) const {
  if (k < 0) throw DomainError("shift requires k >= 0");
  std::vector<Rational> p(static_cast<size_t>(k), Rational(0));
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  const long start = static_cast<long>(p.size()) + 1;
  Tail t = Tail::zero(start);
  switch (tail_.kind()) {
    case Tail::Kind::Zero:
      break;
    case Tail::Kind::Geometric:
      t = Tail::geometric(tail_.first(), tail_.ratio(), start);
      break;
    case Tail::Kind::ReciprocalProduct:
      t = Tail::reciprocal_product(start, tail_.coeff(), tail_.offset() + k);
      break;
  }
  return DualVec(std::move(p), t);
}

DualVec DualVec::materialized(long n) const {
  if (n <= prefix_len()) return *this;
  if (n > kMaxAutoExtend)
    throw ResultNotRepresentable("prefix extension exceeds configured bound");
  std::vector<Rational> p = prefix_;
  for (long i = prefix_len() + 1; i <= n; ++i) p.push_back(tail_.term(i));
  Tail t = tail_.advanced_to(n + 1);
  return DualVec(std::move(p), t);
}

namespace {

std::optional<Tail> combine_tails(const Tail& a, const Tail& b) {
  // Both anchored at the same start by the caller.
  if (a.is_effectively_zero()) return b;
  if (b.is_effectively_zero()) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.kind() == Tail::Kind::Geometric) {
    if (a.ratio() != b.ratio()) return std::nullopt;
    return Tail::geometric(a.first() + b.first(), a.ratio(), a.start());
  }
  if (a.offset() != b.offset()) return std::nullopt;
  return Tail::reciprocal_product(a.start(), a.coeff() + b.coeff(),
                                  a.offset());
}

}  // namespace

DualVec operator+(const DualVec& a, const DualVec& b) {
  const long len = std::max(a.prefix_len(), b.prefix_len());
  const DualVec am = a.materialized(len);
  const DualVec bm = b.materialized(len);
  const auto tail = combine_tails(am.tail(), bm.tail());
  if (!tail)
    throw ResultNotRepresentable(
        "incompatible closed-form tails; materialize a longer prefix first");
  std::vector<Rational> p;
  p.reserve(static_cast<size_t>(len));
  for (long i = 1; i <= len; ++i) p.push_back(am.entry(i) + bm.entry(i));
  return DualVec(std::move(p), *tail);
}

DualVec operator-(const DualVec& a, const DualVec& b) {
  return a + b.negated();
}

bool operator==(const DualVec& a, const DualVec& b) {
  const long len = std::max(a.prefix_len(), b.prefix_len());
  for (long i = 1; i <= len; ++i)
    if (a.entry(i) != b.entry(i)) return false;
  return a.tail().advanced_to(len + 1) == b.tail().advanced_to(len + 1);
}

std::string DualVec::str() const {
  std::ostringstream os;
  auto print_tail = [&os](const Tail& t) {
    switch (t.kind()) {
      case Tail::Kind::Zero:
        os << "zero";
        break;
      case Tail::Kind::Geometric:
        os << "geom(" << t.first() << "," << t.ratio() << ")";
        break;
      case Tail::Kind::ReciprocalProduct:
        if (t.coeff() == Rational(1) && t.offset() == 0) {
          os << "recip";
        } else if (t.offset() == 0) {
          os << "recip(" << t.coeff() << ")";
        } else {
          os << "recip(" << t.coeff() << "," << t.offset() << ")";
        }
        break;
    }
  };
  if (prefix_.empty() && !tail_.is_effectively_zero()) {
    os << "tail=";
    print_tail(tail_);
    return os.str();
  }
  os << "prefix=[";
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ",";
    os << prefix_[i];
  }
  os << "]";
  if (!tail_.is_effectively_zero()) {
    os << ";tail=";
    print_tail(tail_);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PrimalVec

PrimalVec PrimalVec::unit(long n) {
  if (n < 1) throw DomainError("unit index must be >= 1");
  std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
  p.back() = Rational(1);
  return PrimalVec(std::move(p), Rational(0));
}

Rational PrimalVec::entry(long n) const {
  if (n < 1) throw DomainError("entry index must be >= 1");
  if (n <= prefix_len()) return prefix_[static_cast<size_t>(n - 1)];
  return limit_;
}

Rational PrimalVec::sup_norm() const {
  Rational m = limit_.abs();
  for (const auto& e : prefix_) m = std::max(m, e.abs());
  return m;
}

PrimalVec PrimalVec::scaled(const Rational& c) const {
  std::vector<Rational> p;
  p.reserve(prefix_.size());
  for (const auto& e : prefix_) p.push_back(e * c);
  return PrimalVec(std::move(p), limit_ * c);
}

PrimalVec PrimalVec::shifted_with(const std::vector<Rational>& head) const {
  std::vector<Rational> p = head;
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  return PrimalVec(std::move(p), limit_);
}

PrimalVec operator+(const PrimalVec& a, const PrimalVec& b) {
  const long len = std::max(a.prefix_len(), b.prefix_len());
  std::vector<Rational> p;
  p.reserve(static_cast<size_t>(len));
  for (long i = 1; i <= len; ++i) p.push_back(a.entry(i) + b.entry(i));
  return PrimalVec(std::move(p), a.limit() + b.limit());
}

PrimalVec operator-(const PrimalVec& a, const PrimalVec& b) {
  return a + b.scaled(Rational(-1));
}

bool operator==(const PrimalVec& a, const PrimalVec& b) {
  const long len = std::max(a.prefix_len(), b.prefix_len());
  for (long i = 1; i <= len; ++i)
    if (a.entry(i) != b.entry(i)) return false;
  return a.limit() == b.limit();
}

std::string PrimalVec::str() const {
  std::ostringstream os;
  os << "prefix=[";
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ",";
    os << prefix_[i];
  }
  os << "];limit=" << limit_;
  return os.str();
}

// ---------------------------------------------------------------------------
// Pairings

Rational pairing(const DualVec& f, const PrimalVec& x) {
  const long k = std::max(f.prefix_len(), x.prefix_len());
  Rational s(0);
  for (long i = 1; i <= k; ++i) s += f.entry(i) * x.entry(i);
  s += x.limit() * f.signed_tail_from(k + 1);
  return s;
}

Rational c_pairing(const DualVec& f, const PrimalVec& x) {
  const long m = std::max(f.prefix_len(), x.prefix_len());
  Rational s = f.entry(1) * x.limit();
  for (long i = 1; i <= m; ++i) s += f.entry(i + 1) * x.entry(i);
  s += x.limit() * f.signed_tail_from(m + 2);
  return s;
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

std::string strip_spaces(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

std::vector<Rational> parse_rational_list(const std::string& body) {
  std::vector<Rational> out;
  if (body.empty()) return out;
  size_t pos = 0;
  while (true) {
    const size_t comma = body.find(',', pos);
    const std::string item = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Tail parse_tail(const std::string& token, long start) {
  if (token == "zero") return Tail::zero(start);
  if (token == "recip") return Tail::reciprocal_product(start);
  auto args_of = [&](const std::string& head) -> std::optional<std::string> {
    if (token.rfind(head + "(", 0) != 0 || token.back() != ')')
      return std::nullopt;
    return token.substr(head.size() + 1,
                        token.size() - head.size() - 2);
  };
  if (auto args = args_of("geom")) {
    const auto parts = parse_rational_list(*args);
    if (parts.size() != 2) throw ParseError("geom expects two arguments");
    return Tail::geometric(parts[0], parts[1], start);
  }
  if (auto args = args_of("recip")) {
    const size_t comma = args->find(',');
    if (comma == std::string::npos)
      return Tail::reciprocal_product(start, Rational::parse(*args));
    const Rational c = Rational::parse(args->substr(0, comma));
    const std::string off = args->substr(comma + 1);
    long offset = 0;
    try {
      offset = std::stol(off);
    } catch (...) {
      throw ParseError("bad recip offset: '" + off + "'");
    }
    if (start <= offset)
      throw ParseError("recip offset incompatible with prefix length");
    return Tail::reciprocal_product(start, c, offset);
  }
  throw ParseError("unknown tail descriptor: '" + token + "'");
}

// Returns prefix body and the remainder after "prefix=[...]".
std::pair<std::string, std::string> split_prefix(const std::string& s) {
  const std::string head = "prefix=[";
  if (s.rfind(head, 0) != 0)
    throw ParseError("expected 'prefix=[': '" + s + "'");
  const size_t close = s.find(']', head.size());
  if (close == std::string::npos) throw ParseError("missing ']': '" + s + "'");
  return {s.substr(head.size(), close - head.size()), s.substr(close + 1)};
}

}  // namespace

DualVec parse_dual(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.rfind("tail=", 0) == 0)
    return DualVec({}, parse_tail(s.substr(5), 1));
  auto [body, rest] = split_prefix(s);
  std::vector<Rational> prefix = parse_rational_list(body);
  const long start = static_cast<long>(prefix.size()) + 1;
  if (rest.empty()) return DualVec::from_prefix(std::move(prefix));
  if (rest[0] != ';') throw ParseError("expected ';' before tail: '" + text + "'");
  std::string tok = rest.substr(1);
  if (tok.rfind("tail=", 0) == 0) tok = tok.substr(5);
  return DualVec(std::move(prefix), parse_tail(tok, start));
}

PrimalVec parse_primal(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.rfind("limit=", 0) == 0)
    return PrimalVec::constant(Rational::parse(s.substr(6)));
  auto [body, rest] = split_prefix(s);
  std::vector<Rational> prefix = parse_rational_list(body);
  if (rest.rfind(";limit=", 0) != 0)
    throw ParseError("expected ';limit=': '" + text + "'");
  return PrimalVec(std::move(prefix), Rational::parse(rest.substr(7)));
}

}  // namespace walpha
