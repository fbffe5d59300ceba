#pragma once

#include <map>
#include <string>
#include <vector>

#include "translatio/ratfield.hpp"
#include "translatio/rational.hpp"

namespace translatio::sl2 {

// Dense univariate polynomial over Q in the variable t = <tau, alpha^vee>.
struct Poly1 {
  std::vector<Rat> c;  // c[i] is the t^i coefficient; no trailing zeros

  Poly1() = default;
  Poly1(std::initializer_list<Rat> init) : c(init) { normalize(); }
  static Poly1 constant(const Rat& x);
  static Poly1 affine(const Rat& a, const Rat& b);  // a t + b

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat leading() const { return c.back(); }

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Rat& s, const Poly1& a);
  bool operator==(const Poly1& o) const { return c == o.c; }

  std::string to_string() const;
};

// quotient/remainder and gcd (monic) over Q
std::pair<Poly1, Poly1> poly1_divmod(const Poly1& a, const Poly1& b);
Poly1 poly1_gcd(Poly1 a, Poly1 b);

// Element of Q(t), kept gcd-reduced with monic denominator; equality is
// structural on the canonical form.
struct RatFunc1 {
  Poly1 num, den;

  RatFunc1() : num(), den(Poly1::constant(Rat(1))) {}
  RatFunc1(Poly1 n, Poly1 d);
  static RatFunc1 constant(const Rat& x) { return RatFunc1(Poly1::constant(x), Poly1::constant(Rat(1))); }
  static RatFunc1 from_poly(Poly1 p) { return RatFunc1(std::move(p), Poly1::constant(Rat(1))); }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.degree() == 0; }

  friend RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b);
  friend RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b);
  friend RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b);
  friend RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b);
  bool operator==(const RatFunc1& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc1& o) const { return !(*this == o); }

  std::string to_string() const;
};

// chi_lambda(Omega) = lambda + lambda^2/2 for Omega = ef + fe + h^2/2, the
// Casimir eigenvalue on a highest weight lambda (affine in t).
RatFunc1 casimir_eigenvalue(const Poly1& lambda);

// Square matrix over Q(t).
struct RMat {
  int n = 0;
  std::vector<RatFunc1> a;  // row-major

  static RMat identity(int n);
  static RMat zero(int n);
  RatFunc1& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const RatFunc1& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  friend RMat operator*(const RMat& x, const RMat& y);
};

// Tensor product of finite-dimensional sl2 irreducibles E(N_1) x ... with an
// optional Verma factor M(lambda), lambda affine in t.  E(N) carries the
// basis u_0..u_N of weights N, N-2, ..., -N with
//   e u_j = (N+1-j) u_{j-1},  f u_j = (j+1) u_{j+1}
// (so the Weyl representative below is an integer matrix), and M(lambda) the
// basis f^j v with  e f^j v = j(lambda - j + 1) f^{j-1} v.
struct TensorSpace {
  std::vector<int> reps;
  bool has_verma = false;
  Poly1 lambda;   // Verma highest weight, affine in t
  int max_fpow = 64;

  size_t factors() const { return reps.size() + (has_verma ? 1 : 0); }
};

using BasisKey = std::vector<int>;  // E-indices then the Verma f-power
using TVec = std::map<BasisKey, RatFunc1>;

TVec apply_e(const TensorSpace& sp, const TVec& v);
TVec apply_f(const TensorSpace& sp, const TVec& v);
TVec apply_h(const TensorSpace& sp, const TVec& v);
TVec apply_casimir(const TensorSpace& sp, const TVec& v);
TVec add(const TVec& a, const TVec& b);
TVec scale(const RatFunc1& s, const TVec& v);

// Matrix of the Casimir on the span of `basis` (must be invariant).
RMat casimir_matrix(const TensorSpace& sp, const std::vector<BasisKey>& basis);

// Spectral projector onto `target` given the predicted simple spectrum
// `eigs`; the zero matrix when the target does not occur.
RMat spectral_projector(const RMat& omega, const std::vector<RatFunc1>& eigs, const RatFunc1& target);

// Single layer E(N) ox M(lambda), weight space lambda + k: basis keys
// (index of weight k+2j in E(N), j) for j = 0..(N-k)/2.
std::vector<BasisKey> single_layer_basis(int n, int k);

// Coordinates of pr_{chi(lambda+k)}(u_k ox v_lambda) in the basis above;
// for k = N this is just (1).
std::vector<RatFunc1> project_extremal(int n, const Poly1& lambda, int k);

// f_nu for nu = +N or -N over M(tau), tau symbolic.
std::vector<RatFunc1> f_nu_vector(int n, int sign);

// delta_nu * f_nu is a polynomial vector with constant gcd (rank-1 shape of
// the pole theorem); returns false if either part fails.
bool verify_pole_theorem(int n);

// exp(e) exp(-f) exp(e) on E(N); integer anti-diagonal matrix.
std::vector<std::vector<Rat>> sl2_weyl_rep(int n);

// Triangle function computed from the uncanonical definition with x = s:
// nested central-character projections of extremal tensors, compared through
// the (multiplicity one) equivariant map E(|m|) ox E(|n|) -> E(|m+n|).
// Scalars of the chosen weight vectors can be overridden to exercise the
// independence assertions.
struct OracleScalars {
  Rat e_mu = 1, e_nu = 1, e_nm = 1, phi = 1;
};
RatFunc1 delta_direct(int m, int n, const OracleScalars& scalars = {});

// Relative trace of pr_{chi(tau+N)} on E(N) ox M(lambda) for lambda = w0.tau
// (at_w0) or lambda = tau.
RatFunc1 trace_direct(int n, bool at_w0);

// Rank-1 bridge: FactoredRational in one variable -> Q(t).
RatFunc1 to_ratfunc(const FactoredRational& fr);

}  // namespace translatio::sl2
