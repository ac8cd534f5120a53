#pragma once

// The (A,B)-family G = t0^A f(t_1..t_n) + g(t_1..t_n) + P_B(1/t0), with
// assembly validation, evaluation, coordinate-subset restriction, and the
// two face families of the facial decomposition.

#include <utility>
#include <vector>

#include "absum/errors.hpp"
#include "absum/finite_field.hpp"
#include "absum/laurent.hpp"
#include "absum/polytope.hpp"

namespace absum {

class ABPolynomial {
 public:
  // assemble: f nonzero polynomial, deg g < deg f, len(PB) <= B+1.
  static ABPolynomial assemble(LaurentPoly f, LaurentPoly g, std::vector<FieldElement> PB, int A, int B) {
    require(!f.is_zero(), errc::empty_f, "f must be nonzero");
    require(f.is_polynomial() && g.is_polynomial(), errc::internal, "f and g must be polynomials");
    require(A >= 1 && B >= 1, errc::internal, "A and B must be positive");
    require(f.n_vars() == g.n_vars(), errc::internal, "f and g arity mismatch");
    require(PB.size() <= static_cast<size_t>(B) + 1, errc::degree_violation,
            "P_B has more than B+1 coefficients");
    ABPolynomial G;
    G.field_ = f.field_ptr();
    G.n_ = f.n_vars();
    G.A_ = A;
    G.B_ = B;
    G.d_ = f.total_degree();
    G.e_ = g.total_degree();
    require(G.e_ < G.d_, errc::degree_violation,
            "deg g = " + deg_string(G.e_) + " must be < deg f = " + deg_string(G.d_));
    G.f_ = std::move(f);
    G.g_ = std::move(g);
    PB.resize(static_cast<size_t>(B) + 1, G.field_->zero());
    G.h_ = kDegNegInf;
    for (int j = 0; j <= B; ++j)
      if (!PB[static_cast<size_t>(j)].is_zero()) G.h_ = j;
    G.pb_ = std::move(PB);
    return G;
  }

  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return n_; }
  int A() const { return A_; }
  int B() const { return B_; }
  int d() const { return d_; }
  int e() const { return e_; }
  int h() const { return h_; }
  const LaurentPoly& f() const { return f_; }
  const LaurentPoly& g() const { return g_; }
  const std::vector<FieldElement>& PB() const { return pb_; }

  // G as a Laurent polynomial in n+1 variables, t0 in slot 0.
  LaurentPoly to_laurent() const {
    LaurentPoly L(field_, n_ + 1);
    for (const auto& [e, c] : f_.terms()) {
      Exponent e2{A_};
      e2.insert(e2.end(), e.begin(), e.end());
      L.add_term(e2, c);
    }
    for (const auto& [e, c] : g_.terms()) {
      Exponent e2{0};
      e2.insert(e2.end(), e.begin(), e.end());
      L.add_term(e2, c);
    }
    for (int j = 0; j <= B_; ++j) {
      if (pb_[static_cast<size_t>(j)].is_zero()) continue;
      Exponent e2(static_cast<size_t>(n_) + 1, 0);
      e2[0] = -j;
      L.add_term(e2, pb_[static_cast<size_t>(j)]);
    }
    return L;
  }

  FieldElement evaluate(const std::vector<FieldElement>& point, const FieldEmbedding& emb) const {
    require(point.size() == static_cast<size_t>(n_) + 1, errc::internal, "point arity mismatch");
    require(!point[0].is_zero(), errc::zero_t0, "t0 must be a unit");
    return to_laurent().evaluate(point, emb);
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    return evaluate(point, identity_embedding(field_));
  }

  // G_S: set t_i = 0 for i outside S (S indexes the affine variables 1..n);
  // the result is a Laurent polynomial in 1 + |S| variables.
  LaurentPoly restrict_subset(const std::vector<int>& S) const {
    std::vector<int> keep{0};
    for (int v : S) {
      require(v >= 1 && v <= n_, errc::internal, "subset index out of range");
      keep.push_back(v);
    }
    return to_laurent().restrict_to(keep);
  }

  // The two face families of the facial decomposition:
  //   G1 = t0^A f,   G2 = t0^A f_d + b t0^{-B}  (b = leading coeff of P_B).
  std::pair<LaurentPoly, LaurentPoly> face_restrictions() const {
    const FieldElement& b = pb_[static_cast<size_t>(B_)];
    require(!b.is_zero(), errc::zero_leading_pb, "P_B must have degree exactly B");
    LaurentPoly G1(field_, n_ + 1);
    for (const auto& [e, c] : f_.terms()) {
      Exponent e2{A_};
      e2.insert(e2.end(), e.begin(), e.end());
      G1.add_term(e2, c);
    }
    LaurentPoly G2(field_, n_ + 1);
    LaurentPoly fd = f_.leading_form();
    for (const auto& [e, c] : fd.terms()) {
      Exponent e2{A_};
      e2.insert(e2.end(), e.begin(), e.end());
      G2.add_term(e2, c);
    }
    Exponent tail(static_cast<size_t>(n_) + 1, 0);
    tail[0] = -B_;
    G2.add_term(tail, b);
    return {std::move(G1), std::move(G2)};
  }

 private:
  FieldPtr field_;
  int n_ = 0, A_ = 1, B_ = 1;
  int d_ = 0, e_ = kDegNegInf, h_ = kDegNegInf;
  LaurentPoly f_, g_;
  std::vector<FieldElement> pb_;
};

// Newton polytope at infinity: hull of the exponent vectors and the origin.
inline Polytope newton_polytope_at_infinity(const LaurentPoly& L) {
  require(!L.is_zero(), errc::empty_input, "Newton polytope of the zero polynomial");
  std::vector<QVec> pts;
  pts.push_back(QVec(static_cast<size_t>(L.n_vars()), Rat(0)));
  for (const auto& e : L.support()) pts.push_back(qvec_from_ints(e));
  return Polytope::hull(L.n_vars(), std::move(pts));
}

}  // namespace absum
