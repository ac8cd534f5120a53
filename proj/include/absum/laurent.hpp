#pragma once

// Laurent polynomials over a finite field with exact exponent bookkeeping.
// Terms are kept in an exponent-lexicographic map, which doubles as the
// canonical ordering for hashing and serialization.

#include <map>
#include <optional>
#include <vector>

#include "absum/errors.hpp"
#include "absum/finite_field.hpp"
#include "absum/numeric.hpp"

namespace absum {

using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(FieldPtr field, int n_vars) : field_(std::move(field)), n_vars_(n_vars) {}

  const FieldPtr& field_ptr() const { return field_; }
  int n_vars() const { return n_vars_; }
  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponent& e, const FieldElement& c) {
    require(static_cast<int>(e.size()) == n_vars_, errc::internal, "exponent arity mismatch");
    require(c.field().same_field(*field_), errc::cross_field, "coefficient from wrong field");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      FieldElement s = it->second + c;
      if (s.is_zero())
        terms_.erase(it);
      else
        it->second = s;
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  LaurentPoly scaled(const FieldElement& k) const {
    LaurentPoly r(field_, n_vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int v : e)
        if (v < 0) return false;
    return true;
  }

  bool is_polynomial_in(const std::vector<int>& vars) const {
    for (const auto& [e, c] : terms_)
      for (int v : vars)
        if (e[static_cast<size_t>(v)] < 0) return false;
    return true;
  }

  // Total degree; kDegNegInf for the zero polynomial.
  int total_degree() const {
    int d = kDegNegInf;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      if (s > d) d = s;
    }
    return d;
  }

  LaurentPoly leading_form() const {
    int d = total_degree();
    LaurentPoly r(field_, n_vars_);
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      if (s == d) r.add_term(e, c);
    }
    return r;
  }

  LaurentPoly partial(int i) const {
    LaurentPoly r(field_, n_vars_);
    for (const auto& [e, c] : terms_) {
      int64_t k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      Exponent e2 = e;
      e2[static_cast<size_t>(i)] -= 1;
      r.add_term(e2, c * field_->from_int(k));
    }
    return r;
  }

  // t_i d/dt_i: same exponents, coefficients scaled by e_i.  Its vanishing on
  // the torus is equivalent to that of the plain partial.
  LaurentPoly euler_partial(int i) const {
    LaurentPoly r(field_, n_vars_);
    for (const auto& [e, c] : terms_) {
      int64_t k = e[static_cast<size_t>(i)];
      if (k % field_->p() == 0) continue;
      r.add_term(e, c * field_->from_int(k));
    }
    return r;
  }

  // Set every variable outside `keep` to zero and drop those variables.
  // Terms with a positive exponent on a dropped variable vanish; a negative
  // exponent on a dropped variable is an error (1/0).
  LaurentPoly restrict_to(const std::vector<int>& keep) const {
    std::vector<bool> kept(static_cast<size_t>(n_vars_), false);
    for (int v : keep) kept[static_cast<size_t>(v)] = true;
    LaurentPoly r(field_, static_cast<int>(keep.size()));
    for (const auto& [e, c] : terms_) {
      bool drop = false;
      for (int i = 0; i < n_vars_; ++i) {
        if (kept[static_cast<size_t>(i)]) continue;
        if (e[static_cast<size_t>(i)] > 0) {
          drop = true;
          break;
        }
        require(e[static_cast<size_t>(i)] >= 0, errc::zero_t0,
                "restriction sets a variable with negative exponent to zero");
      }
      if (drop) continue;
      Exponent e2;
      e2.reserve(keep.size());
      for (int v : keep) e2.push_back(e[static_cast<size_t>(v)]);
      r.add_term(e2, c);
    }
    return r;
  }

  // Homogenization: F(t_0, t_1, ..., t_n) = t_0^d f(t_1/t_0, ...), with the
  // fresh variable in slot 0.
  LaurentPoly homogenize() const {
    require(is_polynomial(), errc::internal, "homogenization needs a genuine polynomial");
    require(!is_zero(), errc::empty_f, "homogenization of zero");
    int d = total_degree();
    LaurentPoly r(field_, n_vars_ + 1);
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      Exponent e2;
      e2.reserve(static_cast<size_t>(n_vars_) + 1);
      e2.push_back(d - s);
      e2.insert(e2.end(), e.begin(), e.end());
      r.add_term(e2, c);
    }
    return r;
  }

  bool is_homogeneous() const {
    int d = kDegNegInf;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      if (d == kDegNegInf) d = s;
      if (s != d) return false;
    }
    return true;
  }

  // Evaluate at a point of the embedding's target field.
  FieldElement evaluate(const std::vector<FieldElement>& point, const FieldEmbedding& emb) const {
    require(static_cast<int>(point.size()) == n_vars_, errc::internal, "point arity mismatch");
    const FieldPtr& ext = emb.to;
    FieldElement acc = ext->zero();
    for (const auto& [e, c] : terms_) {
      FieldElement t = emb(c);
      bool dead = false;
      for (int i = 0; i < n_vars_ && !dead; ++i) {
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        const FieldElement& v = point[static_cast<size_t>(i)];
        if (v.is_zero()) {
          require(k > 0, errc::zero_t0, "negative exponent at a zero coordinate");
          dead = true;
        } else {
          t = t * v.pow_int(k);
        }
      }
      if (!dead) acc = acc + t;
    }
    return acc;
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    return evaluate(point, identity_embedding(field_));
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  bool operator==(const LaurentPoly& o) const {
    if (n_vars_ != o.n_vars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  FieldPtr field_;
  int n_vars_ = 0;
  std::map<Exponent, FieldElement> terms_;
};

// Convenience builder for tests and the CLI: terms as (coeff int, exponents).
inline LaurentPoly make_poly(const FieldPtr& f, int n_vars,
                             const std::vector<std::pair<int64_t, Exponent>>& terms) {
  LaurentPoly r(f, n_vars);
  for (const auto& [c, e] : terms) r.add_term(e, f->from_int(c));
  return r;
}

}  // namespace absum
