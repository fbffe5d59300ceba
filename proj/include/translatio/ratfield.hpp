#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "translatio/rootsys.hpp"

namespace translatio {

// Affine-linear form sum_i coeffs[i] * t_i + shift in the coordinates
// t_i = <tau, alpha_i^vee>.  Canonical: integer coefficients with gcd 1 and
// first nonzero coefficient positive; the extracted scale lives in the
// enclosing FactoredRational's constant.  H_{alpha,m} is the instance
// (coroot coords of alpha, -m).
struct LinearForm {
  std::vector<long> coeffs;
  Rat shift;

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_constant() const;
  Rat evaluate(const Weight& tau) const;
  Rat evaluate_at_zero_weight() const { return shift; }

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs && shift == o.shift; }
  bool operator<(const LinearForm& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return cmp(shift, o.shift) < 0;
  }
};

// canonicalize (coeffs, shift) into scale * form with form canonical;
// a constant form (all coefficients zero) comes back with empty "form"
// flagged by is_constant() and scale = the constant value... constants are
// returned as (value, std::nullopt).
std::pair<Rat, std::optional<LinearForm>> canonicalize_form(std::vector<long> coeffs, Rat shift);

// Nonzero rational constant times a product of canonical linear forms with
// integer exponents; the zero function is constant 0 with no factors.
// Structural equality of canonical forms decides exact equality.
class FactoredRational {
 public:
  FactoredRational() : constant_(1) {}
  explicit FactoredRational(Rat c) : constant_(std::move(c)) {}

  static FactoredRational one() { return FactoredRational(Rat(1)); }
  static FactoredRational zero() { return FactoredRational(Rat(0)); }
  static FactoredRational from_form(std::vector<long> coeffs, Rat shift, long exp = 1);

  const Rat& constant() const { return constant_; }
  const std::map<LinearForm, long>& factors() const { return factors_; }
  bool is_zero() const { return constant_ == 0; }
  bool is_one() const { return constant_ == 1 && factors_.empty(); }

  void multiply_form(std::vector<long> coeffs, Rat shift, long exp);

  friend FactoredRational fr_mul(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational fr_div(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational fr_inverse(const FactoredRational& a);
  friend bool fr_equal(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational fr_pow(const FactoredRational& a, long e);

  // tau -> tau + sigma
  friend FactoredRational fr_shift(const FactoredRational& a, const Weight& sigma);
  // tau -> w . tau (dot action)
  friend FactoredRational fr_dot_substitute(const FactoredRational& a, const RootSystem& rs, const WeylElement& w);
  friend Rat fr_evaluate(const FactoredRational& a, const Weight& tau0);

 private:
  Rat constant_;
  std::map<LinearForm, long> factors_;
};

// Sparse multivariate polynomial over Q; monomials ordered graded
// lexicographically (fixed globally for exact division).
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class SparsePoly {
 public:
  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, Rat c);
  static SparsePoly variable(int nvars, int i);
  static SparsePoly linear(const std::vector<long>& coeffs, const Rat& shift);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat, GradedLexLess>& terms() const { return terms_; }
  void add_term(const std::vector<int>& expo, const Rat& c);

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rat& c, const SparsePoly& a);
  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rat evaluate(const RatVec& point) const;
  long total_degree() const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rat, GradedLexLess> terms_;
};

// Exact multivariate division: returns p/q when q divides p, nullopt
// otherwise.  Non-divisibility is a value, not an error.
std::optional<SparsePoly> poly_divide_exact(const SparsePoly& p, const SparsePoly& q);

// lambda -> lambda + sigma
SparsePoly poly_shift(const SparsePoly& p, const Weight& sigma);
// lambda -> w . lambda
SparsePoly poly_dot_substitute(const SparsePoly& p, const RootSystem& rs, const WeylElement& w);

// Expansion of a factored rational into (numerator, denominator) sparse
// polynomials; the denominator collects the negative-exponent factors.
std::pair<SparsePoly, SparsePoly> fr_expand(const FactoredRational& a, int nvars);

// (P(E) * p)(lambda) := sum_{mu in E} mult(mu) p(lambda + mu)
struct WeightMultiset;  // fwd (defined in repweights.hpp)
SparsePoly convolve(const WeightMultiset& multiset, const SparsePoly& p);

// (sym s)(lambda) := prod_{x in W} s(x . lambda); dot-invariant output.
SparsePoly sym(const RootSystem& rs, const SparsePoly& s);

// --- printing --------------------------------------------------------------
enum class FormStyle { Pretty, Latex, Plain };
std::string form_to_string(const LinearForm& f, const RootSystem* rs, FormStyle style);
std::string fr_to_string(const FactoredRational& a, const RootSystem* rs, FormStyle style = FormStyle::Pretty);
std::string poly_to_string(const SparsePoly& p);

}  // namespace translatio
