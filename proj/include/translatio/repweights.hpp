#pragma once

#include <map>
#include <utility>
#include <vector>

#include "translatio/rootsys.hpp"

namespace translatio {

// Weight multiset of the irreducible E(nu) with extremal weight nu: a map
// from weights to positive multiplicities, W-invariant, with the dominant
// highest weight recorded.
struct WeightMultiset {
  std::map<Weight, long, WeightLess> entries;
  Weight highest;

  long multiplicity(const Weight& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }
  bool contains(const Weight& mu) const { return entries.count(mu) != 0; }
  long dimension() const {
    long d = 0;
    for (const auto& [mu, m] : entries) d += m;
    return d;
  }
};

// Unique dominant weight in the linear Weyl orbit of nu, together with a w
// such that act(w, nu) is dominant.
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& nu);

// Multiplicities by the Freudenthal recursion over the dominant weights,
// spread over Weyl orbits.  Guarded by dim_guard on the total dimension.
WeightMultiset weight_multiset(const RootSystem& rs, const Weight& nu, long dim_guard = 1000000);

// Restriction of weight_multiset(nu) to the weights strictly above nu in the
// dominance order.  nu must be extremal.
WeightMultiset weights_above(const RootSystem& rs, const Weight& nu, long dim_guard = 1000000);

// Maximal arithmetic progression nu + k*alpha inside the support of E,
// listed in increasing k.
std::vector<Weight> alpha_string(const RootSystem& rs, const Weight& nu, const Root& alpha,
                                 const WeightMultiset& multiset);

// prod <lambda^+ + rho, alpha^vee> / <rho, alpha^vee>; independent cross-check
// for the Freudenthal totals.
long weyl_dimension(const RootSystem& rs, const Weight& nu);

}  // namespace translatio
