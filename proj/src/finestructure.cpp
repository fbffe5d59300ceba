#include "translatio/finestructure.hpp"

#include <algorithm>

#include "translatio/errors.hpp"

namespace translatio {

std::vector<HyperplaneDatum> n_nu(const RootSystem& rs, const Weight& nu) {
  if (!nu.is_integral()) throw DomainError("n_nu needs an integral weight");
  Weight rho = rs.rho();
  std::vector<HyperplaneDatum> out;
  for (size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Root& alpha = rs.positive_root(k);
    long lo = -to_long(rs.pairing(rho, alpha));
    long hi = -to_long(rs.pairing(nu + rho, alpha));  // exclusive
    for (long m = lo; m < hi; ++m) out.push_back({k, m});
  }
  return out;
}

FactoredRational delta_nu(const RootSystem& rs, const Weight& nu) {
  FactoredRational out = FactoredRational::one();
  for (const auto& [k, m] : n_nu(rs, nu)) {
    const Root& alpha = rs.positive_root(k);
    out.multiply_form(alpha.coroot_coords, Rat(-m), 1);
  }
  return out;
}

namespace {

// Reduced row echelon form of (A | b); returns the solved subspace.
AffineSubspace solve_affine(const RootSystem& rs, std::vector<RatVec> rows, RatVec rhs) {
  int r = rs.rank();
  size_t nrows = rows.size();
  // eliminate
  size_t row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < r && row < nrows; ++col) {
    size_t piv = nrows;
    for (size_t i = row; i < nrows; ++i)
      if (rows[i][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    if (piv == nrows) continue;
    std::swap(rows[row], rows[piv]);
    std::swap(rhs[row], rhs[piv]);
    Rat d = rows[row][static_cast<size_t>(col)];
    for (int j = 0; j < r; ++j) rows[row][static_cast<size_t>(j)] /= d;
    rhs[row] /= d;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == row) continue;
      Rat f = rows[i][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < r; ++j) rows[i][static_cast<size_t>(j)] -= f * rows[row][static_cast<size_t>(j)];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  AffineSubspace out;
  // inconsistency: zero row with nonzero rhs
  for (size_t i = row; i < nrows; ++i)
    if (rhs[i] != 0) {
      out.codim = static_cast<int>(row);
      out.witness = std::nullopt;
      return out;
    }
  out.codim = static_cast<int>(row);
  // equations: scale pivot rows to integer coefficient vectors
  for (size_t i = 0; i < row; ++i) {
    mpz_class den(1);
    for (int j = 0; j < r; ++j) {
      mpz_class dj = rows[i][static_cast<size_t>(j)].get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dj.get_mpz_t());
    }
    std::vector<long> coeffs(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) coeffs[static_cast<size_t>(j)] = to_long(Rat(rows[i][static_cast<size_t>(j)] * Rat(den)));
    auto [scale, form] = canonicalize_form(coeffs, -rhs[i] * Rat(den));
    if (form) out.equations.push_back(*form);
  }
  // witness: free variables zero, pivots from rhs
  RatVec point(static_cast<size_t>(r), Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) point[static_cast<size_t>(pivot_col[i])] = rhs[i];
  out.witness = Weight(std::move(point));
  return out;
}

}  // namespace

AffineSubspace solve_dot_equation(const RootSystem& rs, const WeylElement& w, const Weight& nu, const Weight& mu) {
  // w(tau + nu + rho) - rho = tau + mu  <=>  (M_w - I) tau = mu + rho - M_w(nu + rho)
  int r = rs.rank();
  Weight rho = rs.rho();
  Weight rhs_w = mu + rho - rs.act(w, nu + rho);
  std::vector<RatVec> rows;
  RatVec rhs;
  for (int i = 0; i < r; ++i) {
    RatVec rowv(static_cast<size_t>(r), Rat(0));
    for (int j = 0; j < r; ++j) rowv[static_cast<size_t>(j)] = Rat(w.at(i, j) - (i == j ? 1 : 0));
    rows.push_back(std::move(rowv));
    rhs.push_back(rhs_w.coords[static_cast<size_t>(i)]);
  }
  return solve_affine(rs, std::move(rows), std::move(rhs));
}

std::vector<AffineSubspace> singular_set_S(const RootSystem& rs, const Weight& nu) {
  WeightMultiset above = weights_above(rs, nu);
  std::vector<AffineSubspace> out;
  for (const auto& w : rs.weyl_group()) {
    if (w.is_identity() || rs.is_reflection(w)) continue;
    for (const auto& [mu, mult] : above.entries) {
      AffineSubspace sub = solve_dot_equation(rs, w, nu, mu);
      if (!sub.empty()) out.push_back(std::move(sub));
    }
  }
  return out;
}

namespace {

AffineSubspace intersect_hyperplanes(const RootSystem& rs, const Root& a, long ma, const Root& b, long mb) {
  int r = rs.rank();
  std::vector<RatVec> rows(2, RatVec(static_cast<size_t>(r), Rat(0)));
  RatVec rhs(2);
  for (int j = 0; j < r; ++j) {
    rows[0][static_cast<size_t>(j)] = Rat(a.coroot_coords[static_cast<size_t>(j)]);
    rows[1][static_cast<size_t>(j)] = Rat(b.coroot_coords[static_cast<size_t>(j)]);
  }
  rhs[0] = Rat(ma);
  rhs[1] = Rat(mb);
  return solve_affine(rs, std::move(rows), std::move(rhs));
}

}  // namespace

std::vector<AffineSubspace> s1(const RootSystem& rs, const Weight& nu) {
  auto data = n_nu(rs, nu);
  std::vector<AffineSubspace> out;
  for (size_t i = 0; i < data.size(); ++i)
    for (size_t j = i + 1; j < data.size(); ++j) {
      AffineSubspace sub = intersect_hyperplanes(rs, rs.positive_root(data[i].root_index), data[i].m,
                                                 rs.positive_root(data[j].root_index), data[j].m);
      if (!sub.empty()) out.push_back(std::move(sub));
    }
  return out;
}

long default_s2_bound(const RootSystem& rs, const Weight& nu) {
  long mx = 0;
  for (const auto& alpha : rs.positive_roots()) mx = std::max(mx, std::labs(to_long(rs.pairing(nu, alpha))));
  return mx + 2;
}

std::vector<AffineSubspace> s2(const RootSystem& rs, const Weight& nu, long bound_m) {
  auto data = n_nu(rs, nu);
  std::vector<AffineSubspace> out = s1(rs, nu);
  for (const auto& [k, m] : data) {
    for (size_t other = 0; other < rs.positive_roots().size(); ++other) {
      for (long n = -bound_m; n <= bound_m; ++n) {
        // skip pairs already inside N_nu (those are S1's business)
        bool in_nnu = false;
        for (const auto& d : data)
          if (d.root_index == other && d.m == n) {
            in_nnu = true;
            break;
          }
        if (in_nnu) continue;
        AffineSubspace sub = intersect_hyperplanes(rs, rs.positive_root(k), m, rs.positive_root(other), n);
        if (!sub.empty()) out.push_back(std::move(sub));
      }
    }
  }
  return out;
}

bool is_verma_simple(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda + rs.rho();
  for (const auto& beta : rs.positive_roots()) {
    if (!is_integer(rs.pairing(lambda, beta))) continue;  // beta not in R_lambda
    if (rs.pairing(shifted, beta) > 0) return false;
  }
  return true;
}

bool is_verma_projective(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda + rs.rho();
  for (const auto& alpha : rs.positive_roots()) {
    Rat p = rs.pairing(shifted, alpha);
    if (is_integer(p) && p < 0) return false;
  }
  return true;
}

bool central_char_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  for (const auto& w : rs.weyl_group())
    if (rs.dot_act(w, lambda) == mu) return true;
  return false;
}

Weight mu_zero(const RootSystem& rs, const Weight& tau0, const Root& alpha, const Weight& nu) {
  if (!is_integer(rs.pairing(tau0, alpha))) throw DomainError("mu_zero needs <tau0, alpha^vee> integral");
  Rat c = rs.pairing(tau0 + nu + rs.rho(), alpha);
  return nu - c * rs.weight_of_root(alpha);
}

}  // namespace translatio
