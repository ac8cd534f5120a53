#pragma once

// Exact arithmetic in Z[zeta_p] and Q(zeta_p) in the power basis
// {1, zeta, ..., zeta^{p-2}}, with eager reduction via
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).  The pi-adic valuation
// (pi = zeta_p - 1) uses the evaluation-at-1 trick: x is divisible by pi
// iff x(1) = 0 mod p, and the quotient is (x - (x(1)/p) Phi_p) / (X - 1),
// an exact integer polynomial division.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"

namespace absum {

class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(int64_t p) : p_(p), c_(check_size(p), 0) {}
  CycInt(int64_t p, std::vector<Int> coeffs) : p_(p), c_(std::move(coeffs)) {
    require(c_.size() == check_size(p), errc::internal, "cyclotomic coefficient length mismatch");
  }

  // cyc_from_character: the basis vector for zeta_p^{t mod p}, reduced.
  static CycInt character(int64_t p, const Int& t) {
    CycInt r(p);
    Int e = t % p;
    if (e < 0) e += p;
    r.add_power(e.convert_to<int64_t>(), Int(1));
    return r;
  }

  static CycInt from_int(int64_t p, const Int& n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
  }

  // sum_{t=0}^{p-1} counts[t] * zeta^t  (counts from a trace histogram).
  static CycInt from_trace_counts(int64_t p, std::span<const Int> counts) {
    require(counts.size() == static_cast<size_t>(p), errc::internal, "trace histogram needs p buckets");
    CycInt r(p);
    for (int64_t t = 0; t < p; ++t) r.add_power(t, counts[static_cast<size_t>(t)]);
    return r;
  }

  int64_t p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  CycInt operator+(const CycInt& o) const {
    check_compatible(o);
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  CycInt operator-(const CycInt& o) const {
    check_compatible(o);
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }

  CycInt operator-() const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }

  CycInt operator*(const CycInt& o) const {
    check_compatible(o);
    // Convolution with exponent reduction mod p, then eliminate zeta^{p-1}.
    std::vector<Int> conv(static_cast<size_t>(p_), 0);  // exponents 0..p-1
    const size_t n = c_.size();
    for (size_t i = 0; i < n; ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        if (o.c_[j] == 0) continue;
        size_t e = i + j;
        if (e >= static_cast<size_t>(p_)) e -= static_cast<size_t>(p_);
        conv[e] += c_[i] * o.c_[j];
      }
    }
    CycInt r(p_);
    const Int& top = conv[static_cast<size_t>(p_ - 1)];
    for (size_t i = 0; i + 1 < conv.size(); ++i) r.c_[i] = conv[i] - top;
    return r;
  }

  CycInt operator*(const Int& k) const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
  }

  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

  bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  // Galois action zeta -> zeta^t, gcd(t, p) = 1.
  CycInt galois(int64_t t) const {
    t %= p_;
    if (t < 0) t += p_;
    require(t != 0, errc::internal, "galois exponent must be prime to p");
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      r.add_power((static_cast<int64_t>(i) * t) % p_, c_[i]);
    }
    return r;
  }

  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    return g;
  }

  Int max_abs_coeff() const {
    Int m = 0;
    for (const auto& v : c_) {
      Int a = v < 0 ? -v : v;
      if (a > m) m = a;
    }
    return m;
  }

 private:
  static size_t check_size(int64_t p) {
    require(p >= 2, errc::internal, "cyclotomic prime must be >= 2");
    return static_cast<size_t>(p - 1);
  }

  void check_compatible(const CycInt& o) const {
    require(p_ == o.p_, errc::internal, "cyclotomic primes differ");
  }

  void add_power(int64_t e, const Int& k) {
    // add k * zeta^e with 0 <= e <= p-1
    if (e == p_ - 1) {
      for (auto& v : c_) v -= k;
    } else {
      c_[static_cast<size_t>(e)] += k;
    }
  }

  int64_t p_ = 2;
  std::vector<Int> c_;
};

struct PiValuation {
  bool is_infinite = false;
  int64_t v = 0;
};

inline PiValuation pi_valuation(const CycInt& x) {
  if (x.is_zero()) return {true, 0};
  const int64_t p = x.p();
  // A loose but finite cap: any honest valuation of a nonzero element is far
  // below this; hitting it means a reduction bug, not a big valuation.
  const int64_t cap = (p - 1) * (static_cast<int64_t>(msb(x.max_abs_coeff() + 1)) + p + 64);
  std::vector<Int> a(x.coeffs().begin(), x.coeffs().end());  // degree <= p-2
  a.resize(static_cast<size_t>(p), 0);                       // room for degree p-1
  int64_t v = 0;
  for (;;) {
    Int e = 0;
    for (const auto& t : a) e += t;
    if (e % p != 0) return {false, v};
    Int t = e / p;
    // atilde = a - t*Phi_p, which vanishes at 1; divide exactly by (X-1).
    for (auto& ai : a) ai -= t;
    std::vector<Int> c(static_cast<size_t>(p), 0);  // quotient, degree <= p-2
    c[static_cast<size_t>(p - 2)] = a[static_cast<size_t>(p - 1)];
    for (int64_t i = p - 2; i >= 1; --i)
      c[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(i)] + c[static_cast<size_t>(i)];
    require(a[0] == -c[0], errc::internal, "pi-division left a remainder");
    c[static_cast<size_t>(p - 1)] = 0;
    a = std::move(c);
    ++v;
    require(v <= cap, errc::internal, "pi-adic valuation exceeded its cap (mis-reduction?)");
    bool zero = true;
    for (const auto& ai : a)
      if (ai != 0) {
        zero = false;
        break;
      }
    require(!zero, errc::internal, "pi-division reached zero on a nonzero input");
  }
}

struct QAdicValuation {
  bool is_infinite = false;
  Rat value;       // ord_q
  int64_t q_log = 1;  // s*(p-1): pi-valuations per unit of ord_q
};

inline QAdicValuation ord_q(const CycInt& x, int s) {
  PiValuation v = pi_valuation(x);
  int64_t ql = static_cast<int64_t>(s) * (x.p() - 1);
  if (v.is_infinite) return {true, Rat(0), ql};
  return {false, Rat(Int(v.v), Int(ql)), ql};
}

// zeta_p -> e^{2*pi*i/p}; error is bounded by a small multiple of
// (p-1) * max|a_i| * machine epsilon.
inline std::complex<double> complex_embed(const CycInt& x) {
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> s(0.0, 0.0);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    double a = x.coeffs()[i].convert_to<double>();
    double ang = two_pi * static_cast<double>(i) / static_cast<double>(x.p());
    s += a * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

// Elements of Q(zeta_p): a CycInt numerator over a positive integer
// denominator, kept in lowest terms.
class CycRat {
 public:
  CycRat() = default;
  explicit CycRat(int64_t p) : num_(p), den_(1) {}
  CycRat(CycInt num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit CycRat(const CycInt& x) : num_(x), den_(1) {}
  static CycRat from_int(int64_t p, const Int& n) { return CycRat(CycInt::from_int(p, n)); }

  int64_t p() const { return num_.p(); }
  const CycInt& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  CycRat operator+(const CycRat& o) const { return CycRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  CycRat operator-(const CycRat& o) const { return CycRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  CycRat operator*(const CycRat& o) const { return CycRat(num_ * o.num_, den_ * o.den_); }
  CycRat operator-() const { return CycRat(-num_, den_); }
  CycRat operator*(const Rat& r) const { return CycRat(num_ * numerator(r), den_ * denominator(r)); }

  CycRat inverse() const {
    require(!is_zero(), errc::internal, "inverse of zero in Q(zeta_p)");
    CycInt inv_num(p());
    Int inv_den;
    invert_mod_cyclotomic(num_, inv_num, inv_den);
    return CycRat(inv_num * den_, inv_den);
  }

  CycRat operator/(const CycRat& o) const { return *this * o.inverse(); }

  bool operator==(const CycRat& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator!=(const CycRat& o) const { return !(*this == o); }

 private:
  void normalize() {
    require(den_ != 0, errc::internal, "zero denominator in Q(zeta_p)");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    Int g = int_gcd(num_.content(), den_);
    if (g > 1) {
      std::vector<Int> c = num_.coeffs();
      for (auto& v : c) v /= g;
      num_ = CycInt(num_.p(), std::move(c));
      den_ /= g;
    }
  }

  // 1/x = u / r where u a(X) + v Phi_p(X) = r with r rational, via the
  // extended Euclidean algorithm over Q[X].
  static void invert_mod_cyclotomic(const CycInt& x, CycInt& out_num, Int& out_den) {
    const int64_t p = x.p();
    using Poly = std::vector<Rat>;
    auto trim = [](Poly& f) {
      while (!f.empty() && f.back() == 0) f.pop_back();
    };
    auto divmod = [&](Poly a, const Poly& b, Poly& q) {
      q.assign(a.size(), Rat(0));
      while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.size() >= b.size() && !a.empty() && a.back() == 0) trim(a);
      }
      trim(q);
      return a;  // remainder
    };
    Poly phi(static_cast<size_t>(p), Rat(1));  // Phi_p = 1 + X + ... + X^{p-1}
    Poly a;
    for (const auto& v : x.coeffs()) a.push_back(Rat(v));
    trim(a);
    // Extended Euclid: track u with u*a = r (mod Phi_p).
    Poly r0 = phi, r1 = a;
    Poly u0 = {}, u1 = {Rat(1)};
    while (r1.size() > 1) {
      Poly q;
      Poly r2 = divmod(r0, r1, q);
      // u2 = u0 - q*u1
      Poly qu(q.size() + u1.size(), Rat(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
      Poly u2(std::max(u0.size(), qu.size()), Rat(0));
      for (size_t i = 0; i < u0.size(); ++i) u2[i] += u0[i];
      for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
      trim(u2);
      r0 = std::move(r1);
      r1 = std::move(r2);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    require(!r1.empty(), errc::internal, "gcd(x, Phi_p) nontrivial: Phi_p not irreducible?");
    Rat r = r1[0];
    // inverse = u1 / r; reduce u1 mod Phi_p (degree <= p-2 already) and clear denominators.
    u1.resize(static_cast<size_t>(p - 1), Rat(0));
    Int den_lcm = 1;
    for (const auto& c : u1) den_lcm = int_lcm(den_lcm, denominator(c / r));
    std::vector<Int> coef(static_cast<size_t>(p - 1));
    for (size_t i = 0; i < u1.size(); ++i) {
      Rat v = u1[i] / r * Rat(den_lcm);
      require(rat_is_integer(v), errc::internal, "denominator clearing failed");
      coef[i] = numerator(v);
    }
    out_num = CycInt(p, std::move(coef));
    out_den = den_lcm;
  }

  CycInt num_{2};
  Int den_ = 1;
};

inline std::complex<double> complex_embed(const CycRat& x) {
  return complex_embed(x.num()) / x.den().convert_to<double>();
}

}  // namespace absum
