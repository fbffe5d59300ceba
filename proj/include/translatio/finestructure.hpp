#pragma once

#include <optional>
#include <vector>

#include "translatio/ratfield.hpp"
#include "translatio/repweights.hpp"
#include "translatio/rootsys.hpp"

namespace translatio {

// One hyperplane <tau, alpha^vee> = m of the family H_nu; membership in N_nu
// requires -<rho,alpha^vee> <= m < -<nu+rho,alpha^vee>.
struct HyperplaneDatum {
  size_t root_index;  // into RootSystem::positive_roots()
  long m;
};

// Solved affine subspace {tau | equations = 0}: the equations after exact
// Gaussian elimination, the codimension (= rank of the system), and one
// rational witness point when nonempty.
struct AffineSubspace {
  std::vector<LinearForm> equations;
  int codim = 0;
  std::optional<Weight> witness;

  bool empty() const { return !witness.has_value(); }
};

// Index set N_nu; empty iff nu is dominant.
std::vector<HyperplaneDatum> n_nu(const RootSystem& rs, const Weight& nu);

// delta_nu = prod over N_nu of H_{alpha,m}; a polynomial FactoredRational
// whose zero set is H_nu.
FactoredRational delta_nu(const RootSystem& rs, const Weight& nu);

// The nonempty solution spaces of w.(tau+nu) = tau+mu with mu > nu a weight
// of E(nu) and w neither the identity nor a reflection.
std::vector<AffineSubspace> singular_set_S(const RootSystem& rs, const Weight& nu);

// Pairwise intersections of distinct hyperplanes in H_nu.
std::vector<AffineSubspace> s1(const RootSystem& rs, const Weight& nu);

// S1 together with intersections of H_nu hyperplanes with any other integral
// hyperplane (alpha, m), |m| <= bound_m, (alpha, m) not in N_nu.  The full
// union is countable; the bound truncates it to a finite window.
long default_s2_bound(const RootSystem& rs, const Weight& nu);
std::vector<AffineSubspace> s2(const RootSystem& rs, const Weight& nu, long bound_m);

// Solve one affine system w.(tau+nu) = tau+mu; exposed for tests.
AffineSubspace solve_dot_equation(const RootSystem& rs, const WeylElement& w, const Weight& nu, const Weight& mu);

// Verma module numerical criteria.
bool is_verma_simple(const RootSystem& rs, const Weight& lambda);
bool is_verma_projective(const RootSystem& rs, const Weight& lambda);

// chi(lambda) == chi(mu), i.e. mu lies in the dot-Weyl orbit of lambda.
bool central_char_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// mu_0 = nu - <tau0+nu+rho, alpha^vee> alpha; requires <tau0,alpha^vee> integral.
Weight mu_zero(const RootSystem& rs, const Weight& tau0, const Root& alpha, const Weight& nu);

}  // namespace translatio
