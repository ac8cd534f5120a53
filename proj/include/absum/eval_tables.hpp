#pragma once

// Table-backed arithmetic for the character-sum kernels: elements are
// base-p packed codes, multiplication runs in log space over a fixed
// generator, and the absolute trace is a table lookup indexed by log.
// Together with F_p-linearity of the trace this removes all field additions
// from the hot loop.

#include <cstdint>
#include <vector>

#include "absum/errors.hpp"
#include "absum/finite_field.hpp"

namespace absum {

class EvalField {
 public:
  explicit EvalField(FieldPtr field, uint64_t max_table_q = uint64_t{1} << 24)
      : field_(std::move(field)) {
    p_ = field_->p();
    s_ = field_->degree();
    q_ = field_->q();
    require(q_ <= max_table_q, errc::budget_exceeded,
            "field of size " + std::to_string(q_) + " exceeds the table budget");
    qm1_ = q_ - 1;
    build();
  }

  const FieldPtr& field_ptr() const { return field_; }
  int64_t p() const { return p_; }
  uint64_t q() const { return q_; }
  uint64_t qm1() const { return qm1_; }

  int64_t log_of_code(uint64_t code) const { return log_of_code_[code]; }  // -1 for zero
  uint64_t exp_code(uint64_t l) const { return exp_code_[l]; }
  const std::vector<uint8_t>& trace_of_log_table() const { return trace_of_log_; }
  uint8_t trace_of_log(uint64_t l) const { return trace_of_log_[l]; }
  uint8_t trace_of_code(uint64_t code) const {
    if (code == 0) return 0;
    return trace_of_log_[static_cast<size_t>(log_of_code_[code])];
  }

  uint64_t add_codes(uint64_t a, uint64_t b) const {
    uint64_t out = 0, mult = 1;
    const uint64_t up = static_cast<uint64_t>(p_);
    for (int i = 0; i < s_; ++i) {
      uint64_t d = a % up + b % up;
      if (d >= up) d -= up;
      out += d * mult;
      mult *= up;
      a /= up;
      b /= up;
    }
    return out;
  }

 private:
  void build() {
    log_of_code_.assign(q_, -1);
    exp_code_.assign(qm1_, 0);
    trace_of_log_.assign(qm1_, 0);

    // Trace of the power-basis elements, then traces are digit dot-products.
    std::vector<int64_t> basis_trace(static_cast<size_t>(s_));
    for (int i = 0; i < s_; ++i) {
      Coeffs c(static_cast<size_t>(s_), 0);
      c[static_cast<size_t>(i)] = 1;
      basis_trace[static_cast<size_t>(i)] = trace_to_prime(field_->from_coeffs(std::move(c)));
    }
    auto trace_of_code_slow = [&](uint64_t code) {
      int64_t t = 0;
      uint64_t c = code;
      for (int i = 0; i < s_; ++i) {
        t += static_cast<int64_t>(c % static_cast<uint64_t>(p_)) * basis_trace[static_cast<size_t>(i)];
        c /= static_cast<uint64_t>(p_);
      }
      return static_cast<uint8_t>(t % p_);
    };

    FieldElement g = find_generator();
    FieldElement x = field_->one();
    for (uint64_t l = 0; l < qm1_; ++l) {
      uint64_t code = x.code();
      exp_code_[l] = static_cast<uint32_t>(code);
      log_of_code_[code] = static_cast<int64_t>(l);
      trace_of_log_[l] = trace_of_code_slow(code);
      x = x * g;
    }
    require(x == field_->one(), errc::internal, "generator order mismatch");
  }

  FieldElement find_generator() const {
    // prime factors of q-1
    std::vector<uint64_t> primes;
    uint64_t r = qm1_;
    for (uint64_t f = 2; f * f <= r; ++f)
      if (r % f == 0) {
        primes.push_back(f);
        while (r % f == 0) r /= f;
      }
    if (r > 1) primes.push_back(r);
    for (uint64_t code = 1; code < q_; ++code) {
      FieldElement cand = field_->from_code(code);
      bool ok = true;
      for (uint64_t f : primes)
        if (cand.pow(qm1_ / f) == field_->one()) {
          ok = false;
          break;
        }
      if (ok) return cand;
    }
    fail(errc::internal, "no multiplicative generator found");
  }

  FieldPtr field_;
  int64_t p_ = 0;
  int s_ = 0;
  uint64_t q_ = 0, qm1_ = 0;
  std::vector<int64_t> log_of_code_;
  std::vector<uint32_t> exp_code_;
  std::vector<uint8_t> trace_of_log_;
};

}  // namespace absum
