#pragma once

#include <functional>
#include <string>
#include <vector>

#include "translatio/finestructure.hpp"
#include "translatio/ratfield.hpp"
#include "translatio/repweights.hpp"
#include "translatio/rootsys.hpp"

namespace translatio {

// One triangle: integral weights mu, nu and a Weyl element x.  tau is the
// symbolic variable carried by FactoredRational.
struct TriangleSpec {
  Weight mu;
  Weight nu;
  WeylElement x;
};

// 1 iff <lambda, alpha^vee> < 0.
int alpha_bar(const RootSystem& rs, const Weight& lambda, const Root& alpha);

// The closed form of the triangle function Delta(mu,nu;x), as a function of
// tau (i.e. the defining product evaluated at tau+rho), with the overall
// constant fixed to 1 so that Delta(mu,nu;e) = 1 exactly.
FactoredRational delta_closed(const RootSystem& rs, const TriangleSpec& spec);

// The same product as a function of its own argument (no rho shift):
// delta_closed = fr_shift(pi_product, rho).
FactoredRational pi_product(const RootSystem& rs, const TriangleSpec& spec);

// Sign epsilon with epsilon * pi(tau+rho) = the delta_nu quotient below.
int epsilon_sign(const RootSystem& rs, const TriangleSpec& spec);

// delta_nu(tau) delta_mu(tau+nu) delta_{x(nu+mu)}(x.tau)
//   / ( delta_{x nu}(x.tau) delta_{x mu}(x.(tau+nu)) delta_{nu+mu}(tau) )
FactoredRational delta_quotient_form(const RootSystem& rs, const TriangleSpec& spec);

// d^x(nu_1..nu_n)(tau) = prod_k delta_{x nu_k}(x.(tau + nu_1 + ... + nu_{k-1}))
FactoredRational d_x(const RootSystem& rs, const std::vector<Weight>& nus, const WeylElement& x);

// D^x(tau) = delta_{x(nu+mu)}(x.tau) / ( delta_{x nu}(x.tau) delta_{x mu}(x.(tau+nu)) )
FactoredRational D_x(const RootSystem& rs, const TriangleSpec& spec);

// Lambda(lambda) = prod_{alpha>0} <lambda+rho, alpha^vee>, expanded.
SparsePoly lambda_poly(const RootSystem& rs);

// Bernstein's relative trace on dot-invariant polynomials:
// tr_E(f) = Lambda^{-1} (P(E) * Lambda f); exact division required.
SparsePoly relative_trace(const RootSystem& rs, const WeightMultiset& E, const SparsePoly& f);
bool is_dot_invariant(const RootSystem& rs, const SparsePoly& f);

// Delta(-nu, nu; w0) = prod <tau+nu+rho,a^vee>/<tau+rho,a^vee>, nu dominant.
FactoredRational bernstein_delta(const RootSystem& rs, const Weight& nu);

// Two-parameter generalization via the quotient of closed forms.
FactoredRational generalized_delta(const RootSystem& rs, const Weight& mu, const Weight& nu, const WeylElement& y,
                                   const WeylElement& x);

// Chain comparison function: lists given as (mu_m, ..., mu_1) display order;
// both lists must have the same total weight.
FactoredRational bar_delta(const RootSystem& rs, const std::vector<Weight>& mus, const std::vector<Weight>& nus,
                           const WeylElement& x);

// --- identity batteries -----------------------------------------------------

struct IdentityFailure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string identity;
  long instances = 0;
  std::vector<IdentityFailure> failures;
  bool pass() const { return failures.empty(); }
};

// Seeded random (exhaustive on rank 1) checks of the identity suite.
IdentityReport check_normalization(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_decomposition(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_rotation(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_flatness(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_I1_to_I4(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_splitting(const RootSystem& rs, long bound, long trials, unsigned long seed);
IdentityReport check_proposition(const RootSystem& rs, long bound, long trials, unsigned long seed,
                                 int max_chain = 4);
IdentityReport check_quotient_formula(const RootSystem& rs, long bound, long trials,
                                      unsigned long seed);

// Dispatch by name: normalization, decomposition, rotation, flatness, I1-I4,
// splitting, proposition, quotient, all.
std::vector<IdentityReport> check_identity(const RootSystem& rs, const std::string& name, long bound,
                                           long trials, unsigned long seed);

}  // namespace translatio
