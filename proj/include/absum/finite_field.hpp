#pragma once

// Exact arithmetic in F_{p^s} towers. Moduli are chosen deterministically
// (lexicographically smallest monic irreducible, ordering coefficient lists
// as base-p integers with the top non-leading coefficient most significant),
// so two runs always agree on element encodings.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"

namespace absum {

using Coeffs = std::vector<int64_t>;

inline bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace fppoly {

// Dense little-endian polynomials over F_p with reduced coefficients.

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs mul(const Coeffs& a, const Coeffs& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a by monic b.
inline Coeffs mod(Coeffs a, const Coeffs& b, int64_t p) {
  trim(a);
  const int db = degree(b);
  while (degree(a) >= db) {
    int64_t c = a.back();
    int shift = degree(a) - db;
    if (c != 0) {
      for (int i = 0; i <= db; ++i) {
        int64_t v = (a[static_cast<size_t>(i + shift)] - c * b[static_cast<size_t>(i)]) % p;
        a[static_cast<size_t>(i + shift)] = v < 0 ? v + p : v;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

inline bool divides(const Coeffs& g, const Coeffs& f, int64_t p) { return mod(f, g, p).empty(); }

inline bool is_irreducible(const Coeffs& f, int64_t p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  const int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int t = 1; 2 * t <= d; ++t) {
    uint64_t count = 1;
    for (int i = 0; i < t; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
      Coeffs g(static_cast<size_t>(t) + 1, 0);
      uint64_t c = code;
      for (int i = 0; i < t; ++i) {
        g[static_cast<size_t>(i)] = static_cast<int64_t>(c % static_cast<uint64_t>(p));
        c /= static_cast<uint64_t>(p);
      }
      g[static_cast<size_t>(t)] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace fppoly

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, Coeffs coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (int64_t c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  uint64_t code() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(uint64_t e) const;
  FieldElement pow_int(int64_t e) const;  // negative exponents via inverse

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  Coeffs coeffs_;
};

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  // build_field: deterministic construction of F_{p^s}.
  static FieldPtr build(int64_t p, int s) {
    require(p >= 2 && is_prime_i64(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(s >= 1 && s <= 12, errc::internal, "extension degree out of range: " + std::to_string(s));
    uint64_t count = 1;
    for (int i = 0; i < s; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
      Coeffs f(static_cast<size_t>(s) + 1, 0);
      uint64_t c = code;
      for (int i = 0; i < s; ++i) {
        f[static_cast<size_t>(i)] = static_cast<int64_t>(c % static_cast<uint64_t>(p));
        c /= static_cast<uint64_t>(p);
      }
      f[static_cast<size_t>(s)] = 1;
      if (fppoly::is_irreducible(f, p)) return FieldPtr(new FieldSpec(p, s, std::move(f)));
    }
    fail(errc::no_irreducible_found, "no monic irreducible of degree " + std::to_string(s));
  }

  int64_t p() const { return p_; }
  int degree() const { return s_; }
  uint64_t q() const { return q_; }
  const Coeffs& modulus() const { return modulus_; }

  bool same_field(const FieldSpec& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

  FieldElement zero() const { return FieldElement(shared_from_this(), Coeffs(static_cast<size_t>(s_), 0)); }
  FieldElement one() const { return from_int(1); }

  FieldElement from_int(int64_t v) const {
    Coeffs c(static_cast<size_t>(s_), 0);
    v %= p_;
    if (v < 0) v += p_;
    c[0] = v;
    return FieldElement(shared_from_this(), std::move(c));
  }

  FieldElement from_coeffs(Coeffs c) const {
    c.resize(static_cast<size_t>(s_), 0);
    for (auto& v : c) {
      v %= p_;
      if (v < 0) v += p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
  }

  // code = sum c_i p^i, little-endian in the power basis.
  FieldElement from_code(uint64_t code) const {
    Coeffs c(static_cast<size_t>(s_), 0);
    for (int i = 0; i < s_; ++i) {
      c[static_cast<size_t>(i)] = static_cast<int64_t>(code % static_cast<uint64_t>(p_));
      code /= static_cast<uint64_t>(p_);
    }
    return FieldElement(shared_from_this(), std::move(c));
  }

  FieldElement gen() const {
    Coeffs c(static_cast<size_t>(s_), 0);
    if (s_ == 1) return zero();  // prime field: modulus is x, whose class is 0
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
  }

  Coeffs reduce(Coeffs a) const {
    auto r = fppoly::mod(std::move(a), modulus_, p_);
    r.resize(static_cast<size_t>(s_), 0);
    return r;
  }

 private:
  FieldSpec(int64_t p, int s, Coeffs modulus) : p_(p), s_(s), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < s_; ++i) q_ *= static_cast<uint64_t>(p_);
  }

  int64_t p_;
  int s_;
  uint64_t q_ = 0;
  Coeffs modulus_;
};

inline FieldPtr build_field(int64_t p, int s) { return FieldSpec::build(p, s); }

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
  require(a.field().same_field(b.field()), errc::cross_field,
          "operands belong to different fields (no implicit coercion)");
}

inline uint64_t FieldElement::code() const {
  uint64_t c = 0;
  const uint64_t p = static_cast<uint64_t>(field_->p());
  for (size_t i = coeffs_.size(); i-- > 0;) c = c * p + static_cast<uint64_t>(coeffs_[i]);
  return c;
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  Coeffs r(coeffs_.size());
  const int64_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t v = coeffs_[i] + o.coeffs_[i];
    r[i] = v >= p ? v - p : v;
  }
  return FieldElement(field_, std::move(r));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  Coeffs r(coeffs_.size());
  const int64_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t v = coeffs_[i] - o.coeffs_[i];
    r[i] = v < 0 ? v + p : v;
  }
  return FieldElement(field_, std::move(r));
}

inline FieldElement FieldElement::operator-() const {
  Coeffs r(coeffs_.size());
  const int64_t p = field_->p();
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] == 0 ? 0 : p - coeffs_[i];
  return FieldElement(field_, std::move(r));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  return FieldElement(field_, field_->reduce(fppoly::mul(coeffs_, o.coeffs_, field_->p())));
}

inline FieldElement FieldElement::pow(uint64_t e) const {
  FieldElement base = *this;
  FieldElement r = field_->one();
  while (e) {
    if (e & 1ull) r = r * base;
    base = base * base;
    e >>= 1ull;
  }
  return r;
}

inline FieldElement FieldElement::inverse() const {
  require(!is_zero(), errc::internal, "inverse of zero");
  return pow(field_->q() - 2);
}

inline FieldElement FieldElement::pow_int(int64_t e) const {
  if (e >= 0) return pow(static_cast<uint64_t>(e));
  return inverse().pow(static_cast<uint64_t>(-e));
}

inline bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_field(o.field()) && coeffs_ == o.coeffs_;
}

// Absolute trace down to F_p, returned as an integer in [0, p).
inline int64_t trace_to_prime(const FieldElement& x) {
  const auto& k = x.field();
  FieldElement acc = x;
  FieldElement frob = x;
  for (int i = 1; i < k.degree(); ++i) {
    frob = frob.pow(static_cast<uint64_t>(k.p()));
    acc = acc + frob;
  }
  for (size_t i = 1; i < acc.coeffs().size(); ++i)
    require(acc.coeffs()[i] == 0, errc::internal, "trace did not land in the prime field");
  return acc.coeffs()[0];
}

// Relative trace Tr_{F_{p^S}/F_{p^t}} for t | S; the result lies in the
// subfield but is returned as an element of the big field.
inline FieldElement trace_relative(const FieldElement& x, int sub_degree) {
  const auto& k = x.field();
  require(sub_degree >= 1 && k.degree() % sub_degree == 0, errc::internal,
          "relative trace: subfield degree must divide field degree");
  uint64_t step = 1;
  for (int i = 0; i < sub_degree; ++i) step *= static_cast<uint64_t>(k.p());
  FieldElement acc = x;
  FieldElement frob = x;
  for (int i = 1; i < k.degree() / sub_degree; ++i) {
    frob = frob.pow(step);
    acc = acc + frob;
  }
  return acc;
}

struct FieldEmbedding {
  FieldPtr from;
  FieldPtr to;
  FieldElement gen_image;  // image of the base field's generator

  FieldElement operator()(const FieldElement& x) const {
    require(x.field().same_field(*from), errc::cross_field, "embedding applied to foreign element");
    // Horner in gen_image.
    FieldElement acc = to->zero();
    const auto& c = x.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * gen_image + to->from_int(c[i]);
    return acc;
  }
};

inline FieldEmbedding identity_embedding(const FieldPtr& f) { return FieldEmbedding{f, f, f->gen()}; }

// extend_field: F_{p^s} -> F_{p^{s m}} with the embedding determined by the
// first root (in code order) of the base modulus in the extension.
inline std::pair<FieldPtr, FieldEmbedding> extend_field(const FieldPtr& base, int m) {
  require(m >= 1, errc::internal, "extension degree m must be >= 1");
  if (m == 1) return {base, identity_embedding(base)};
  FieldPtr ext = build_field(base->p(), base->degree() * m);
  if (base->degree() == 1) return {ext, FieldEmbedding{base, ext, ext->zero()}};
  const Coeffs& mod = base->modulus();
  for (uint64_t code = 0; code < ext->q(); ++code) {
    FieldElement r = ext->from_code(code);
    FieldElement acc = ext->zero();
    for (size_t i = mod.size(); i-- > 0;) acc = acc * r + ext->from_int(mod[i]);
    if (acc.is_zero()) return {ext, FieldEmbedding{base, ext, r}};
  }
  fail(errc::no_root_found, "base modulus has no root in the extension (internal bug)");
}

// Enumeration in code order, split into `chunks` contiguous ranges
// (ceil-sized first, per-range counts differ by at most one).
struct ElementRange {
  FieldPtr field;
  uint64_t begin = 0;  // element codes [begin, end)
  uint64_t end = 0;
  uint64_t size() const { return end - begin; }
};

inline std::vector<ElementRange> enumerate_chunks(const FieldPtr& f, bool units_only, int chunks) {
  require(chunks >= 1, errc::internal, "chunk count must be positive");
  uint64_t lo = units_only ? 1 : 0;  // code 0 is the zero element
  uint64_t n = f->q() - lo;
  std::vector<ElementRange> out;
  uint64_t start = lo;
  for (int i = 0; i < chunks; ++i) {
    uint64_t len = n / static_cast<uint64_t>(chunks) + (static_cast<uint64_t>(i) < n % static_cast<uint64_t>(chunks) ? 1 : 0);
    out.push_back(ElementRange{f, start, start + len});
    start += len;
  }
  return out;
}

inline std::vector<FieldElement> enumerate_elements(const FieldPtr& f, bool units_only) {
  std::vector<FieldElement> out;
  for (uint64_t code = units_only ? 1 : 0; code < f->q(); ++code) out.push_back(f->from_code(code));
  return out;
}

}  // namespace absum
