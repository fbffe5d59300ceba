#include "translatio/repweights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "translatio/errors.hpp"

namespace translatio {

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& nu) {
  if (!nu.is_integral()) throw DomainError("dominant_representative needs an integral weight");
  Weight cur = nu;
  WeylElement w = WeylElement::identity(rs.rank());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (cur.coords[static_cast<size_t>(i)] < 0) {
        WeylElement s = rs.simple_reflection(i);
        cur = rs.act(s, cur);
        w = s * w;
        moved = true;
      }
    }
  }
  return {cur, w};
}

namespace {

// Support of E(lambda^+): the saturated set generated by lambda^+, i.e. the
// closure under alpha-strings mu, mu-alpha, ..., s_alpha(mu).
std::set<Weight, WeightLess> weight_support(const RootSystem& rs, const Weight& hi) {
  std::set<Weight, WeightLess> support;
  std::deque<Weight> queue{hi};
  support.insert(hi);
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& alpha : rs.positive_roots()) {
      Rat p = rs.pairing(mu, alpha);
      long steps = is_integer(p) && p > 0 ? to_long(p) : 0;
      Weight cur = mu;
      Weight aw = rs.weight_of_root(alpha);
      for (long k = 0; k < steps; ++k) {
        cur = cur - aw;
        if (support.insert(cur).second) queue.push_back(cur);
      }
    }
  }
  return support;
}

long height_of_difference(const RootSystem& rs, const Weight& hi, const Weight& mu) {
  RatVec c = rs.to_root_coords(hi - mu);
  Rat h(0);
  for (const auto& x : c) h += x;
  return to_long(h);
}

}  // namespace

long weyl_dimension(const RootSystem& rs, const Weight& nu) {
  if (!nu.is_integral()) throw DomainError("weyl_dimension needs an integral weight");
  auto [hi, w] = dominant_representative(rs, nu);
  Weight rho = rs.rho();
  Rat num(1), den(1);
  for (const auto& alpha : rs.positive_roots()) {
    num *= rs.pairing(hi + rho, alpha);
    den *= rs.pairing(rho, alpha);
  }
  Rat dim = num / den;
  if (!is_integer(dim) || dim <= 0) throw DomainError("Weyl dimension came out non-integral (internal)");
  return to_long(dim);
}

WeightMultiset weight_multiset(const RootSystem& rs, const Weight& nu, long dim_guard) {
  if (!nu.is_integral()) throw DomainError("weight_multiset needs an integral weight");
  long dim = weyl_dimension(rs, nu);
  if (dim > dim_guard)
    throw ResourceError("dim E = " + std::to_string(dim) + " exceeds the guard " + std::to_string(dim_guard));

  auto [hi, w0] = dominant_representative(rs, nu);
  Weight rho = rs.rho();
  auto support = weight_support(rs, hi);

  // Dominant weights, processed by increasing height of hi - mu so that all
  // mu + k*alpha needed on the right-hand side are already known.
  std::vector<Weight> dominants;
  for (const auto& mu : support)
    if (mu.is_dominant()) dominants.push_back(mu);
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    return height_of_difference(rs, hi, a) < height_of_difference(rs, hi, b);
  });

  // Freudenthal:
  //   ((hi+rho,hi+rho) - (mu+rho,mu+rho)) m_mu
  //     = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m_{mu + k alpha}
  std::map<Weight, Rat, WeightLess> mult;
  Rat hi_norm = rs.inner(hi + rho, hi + rho);
  for (const auto& mu : dominants) {
    if (mu == hi) {
      mult[mu] = 1;
      continue;
    }
    Rat total(0);
    for (const auto& alpha : rs.positive_roots()) {
      Weight aw = rs.weight_of_root(alpha);
      Weight cur = mu + aw;
      long k = 1;
      while (support.count(cur)) {
        auto [rep, wr] = dominant_representative(rs, cur);
        auto it = mult.find(rep);
        if (it == mult.end()) throw DomainError("Freudenthal order violated (internal)");
        total += rs.inner_with_root(cur, alpha) * it->second;
        cur = cur + aw;
        ++k;
        (void)k;
      }
    }
    Rat denom = hi_norm - rs.inner(mu + rho, mu + rho);
    if (denom == 0) throw DomainError("vanishing Freudenthal denominator (internal)");
    Rat m = 2 * total / denom;
    if (!is_integer(m) || m <= 0) throw DomainError("non-integral Freudenthal multiplicity (internal)");
    mult[mu] = m;
  }

  WeightMultiset out;
  out.highest = hi;
  for (const auto& mu : support) {
    auto [rep, wr] = dominant_representative(rs, mu);
    out.entries[mu] = to_long(mult.at(rep));
  }
  if (out.dimension() != dim) throw DomainError("Freudenthal total disagrees with the Weyl dimension (internal)");
  return out;
}

WeightMultiset weights_above(const RootSystem& rs, const Weight& nu, long dim_guard) {
  WeightMultiset full = weight_multiset(rs, nu, dim_guard);
  auto [rep, w] = dominant_representative(rs, nu);
  if (!(rep == full.highest) || full.multiplicity(nu) != 1)
    throw DomainError("weights_above needs an extremal weight");
  WeightMultiset out;
  out.highest = full.highest;
  for (const auto& [mu, m] : full.entries)
    if (!(mu == nu) && rs.dominance_leq(nu, mu)) out.entries[mu] = m;
  return out;
}

std::vector<Weight> alpha_string(const RootSystem& rs, const Weight& nu, const Root& alpha,
                                 const WeightMultiset& multiset) {
  if (!multiset.contains(nu)) throw DomainError("alpha_string: weight not in the support");
  Weight aw = rs.weight_of_root(alpha);
  Weight lo = nu;
  while (multiset.contains(lo - aw)) lo = lo - aw;
  std::vector<Weight> out;
  Weight cur = lo;
  while (multiset.contains(cur)) {
    out.push_back(cur);
    cur = cur + aw;
  }
  return out;
}

}  // namespace translatio
