#include "translatio/triangle.hpp"

#include <algorithm>
#include <random>

#include "translatio/errors.hpp"

namespace translatio {

int alpha_bar(const RootSystem& rs, const Weight& lambda, const Root& alpha) {
  return rs.pairing(lambda, alpha) < 0 ? 1 : 0;
}

namespace {

// Positive roots sent negative by x.
std::vector<size_t> inversion_set(const RootSystem& rs, const WeylElement& x) {
  std::vector<size_t> out;
  for (size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (rs.root_is_negative(rs.act_on_root(x, rs.positive_root(k)))) out.push_back(k);
  return out;
}

FactoredRational triangle_product(const RootSystem& rs, const TriangleSpec& spec, bool at_tau_plus_rho) {
  if (!spec.mu.is_integral() || !spec.nu.is_integral())
    throw DomainError("triangle functions need integral weights");
  if (spec.mu.is_zero() || spec.nu.is_zero()) return FactoredRational::one();
  Weight base = at_tau_plus_rho ? rs.rho() : Weight::zero(rs.rank());
  FactoredRational out = FactoredRational::one();
  for (size_t k : inversion_set(rs, spec.x)) {
    const Root& alpha = rs.positive_root(k);
    long a = alpha_bar(rs, spec.nu, alpha);
    long b = alpha_bar(rs, spec.mu, alpha);
    long c = alpha_bar(rs, spec.nu + spec.mu, alpha);
    out.multiply_form(alpha.coroot_coords, rs.pairing(base, alpha), a - c);
    out.multiply_form(alpha.coroot_coords, rs.pairing(base + spec.nu, alpha), b - a);
    out.multiply_form(alpha.coroot_coords, rs.pairing(base + spec.nu + spec.mu, alpha), c - b);
  }
  return out;
}

}  // namespace

FactoredRational delta_closed(const RootSystem& rs, const TriangleSpec& spec) {
  return triangle_product(rs, spec, true);
}

FactoredRational pi_product(const RootSystem& rs, const TriangleSpec& spec) {
  return triangle_product(rs, spec, false);
}

int epsilon_sign(const RootSystem& rs, const TriangleSpec& spec) {
  long parity = 0;
  for (size_t k : inversion_set(rs, spec.x)) {
    const Root& alpha = rs.positive_root(k);
    long a = alpha_bar(rs, spec.nu, alpha);
    long b = alpha_bar(rs, spec.mu, alpha);
    long c = alpha_bar(rs, spec.nu + spec.mu, alpha);
    parity += a * to_long(rs.pairing(spec.nu, alpha)) + b * to_long(rs.pairing(spec.mu, alpha)) -
              c * to_long(rs.pairing(spec.nu + spec.mu, alpha));
  }
  return (parity % 2 + 2) % 2 == 0 ? 1 : -1;
}

FactoredRational delta_quotient_form(const RootSystem& rs, const TriangleSpec& spec) {
  const Weight& nu = spec.nu;
  const Weight& mu = spec.mu;
  const WeylElement& x = spec.x;
  Weight xnu = rs.act(x, nu), xmu = rs.act(x, mu), xnm = rs.act(x, nu + mu);
  FactoredRational num = delta_nu(rs, nu);
  num = fr_mul(num, fr_shift(delta_nu(rs, mu), nu));
  num = fr_mul(num, fr_dot_substitute(delta_nu(rs, xnm), rs, x));
  FactoredRational den = fr_dot_substitute(delta_nu(rs, xnu), rs, x);
  den = fr_mul(den, fr_shift(fr_dot_substitute(delta_nu(rs, xmu), rs, x), nu));
  den = fr_mul(den, delta_nu(rs, nu + mu));
  return fr_div(num, den);
}

FactoredRational d_x(const RootSystem& rs, const std::vector<Weight>& nus, const WeylElement& x) {
  FactoredRational out = FactoredRational::one();
  Weight partial = Weight::zero(rs.rank());
  for (const auto& nu : nus) {
    Weight xnu = rs.act(x, nu);
    out = fr_mul(out, fr_shift(fr_dot_substitute(delta_nu(rs, xnu), rs, x), partial));
    partial = partial + nu;
  }
  return out;
}

FactoredRational D_x(const RootSystem& rs, const TriangleSpec& spec) {
  Weight xnu = rs.act(spec.x, spec.nu);
  Weight xmu = rs.act(spec.x, spec.mu);
  Weight xnm = rs.act(spec.x, spec.nu + spec.mu);
  FactoredRational num = fr_dot_substitute(delta_nu(rs, xnm), rs, spec.x);
  FactoredRational den = fr_dot_substitute(delta_nu(rs, xnu), rs, spec.x);
  den = fr_mul(den, fr_shift(fr_dot_substitute(delta_nu(rs, xmu), rs, spec.x), spec.nu));
  return fr_div(num, den);
}

SparsePoly lambda_poly(const RootSystem& rs) {
  SparsePoly out = SparsePoly::constant(rs.rank(), Rat(1));
  for (const auto& alpha : rs.positive_roots())
    out = out * SparsePoly::linear(alpha.coroot_coords, rs.pairing(rs.rho(), alpha));
  return out;
}

bool is_dot_invariant(const RootSystem& rs, const SparsePoly& f) {
  for (int i = 0; i < rs.rank(); ++i)
    if (!(poly_dot_substitute(f, rs, rs.simple_reflection(i)) == f)) return false;
  return true;
}

SparsePoly relative_trace(const RootSystem& rs, const WeightMultiset& E, const SparsePoly& f) {
  if (!is_dot_invariant(rs, f)) throw DomainError("relative_trace needs a dot-invariant polynomial");
  SparsePoly lam = lambda_poly(rs);
  SparsePoly numerator = convolve(E, lam * f);
  auto quotient = poly_divide_exact(numerator, lam);
  if (!quotient) throw Error("Lambda does not divide P(E) * (Lambda f); trace formula violated (internal)");
  return *quotient;
}

FactoredRational bernstein_delta(const RootSystem& rs, const Weight& nu) {
  if (!nu.is_integral() || !nu.is_dominant()) throw DomainError("bernstein_delta needs a dominant integral weight");
  FactoredRational out = FactoredRational::one();
  Weight rho = rs.rho();
  for (const auto& alpha : rs.positive_roots()) {
    out.multiply_form(alpha.coroot_coords, rs.pairing(nu + rho, alpha), 1);
    out.multiply_form(alpha.coroot_coords, rs.pairing(rho, alpha), -1);
  }
  return out;
}

FactoredRational generalized_delta(const RootSystem& rs, const Weight& mu, const Weight& nu, const WeylElement& y,
                                   const WeylElement& x) {
  return fr_div(delta_closed(rs, {mu, nu, x}), delta_closed(rs, {mu, nu, y}));
}

namespace {

// prod_{k=2}^m Delta(mu_k, mu_1 + ... + mu_{k-1}; x)(tau) for a chain given
// in application order (mu_1 first).
FactoredRational chain_to_straight(const RootSystem& rs, const std::vector<Weight>& chain, const WeylElement& x) {
  FactoredRational out = FactoredRational::one();
  Weight partial = Weight::zero(rs.rank());
  for (size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) out = fr_mul(out, delta_closed(rs, {chain[k], partial, x}));
    partial = partial + chain[k];
  }
  return out;
}

Weight list_sum(const RootSystem& rs, const std::vector<Weight>& ws) {
  Weight s = Weight::zero(rs.rank());
  for (const auto& w : ws) s = s + w;
  return s;
}

}  // namespace

FactoredRational bar_delta(const RootSystem& rs, const std::vector<Weight>& mus, const std::vector<Weight>& nus,
                           const WeylElement& x) {
  if (mus.empty() || nus.empty()) throw DomainError("bar_delta needs nonempty chains");
  if (!(list_sum(rs, mus) == list_sum(rs, nus))) throw DomainError("bar_delta chains must have equal total weight");
  // inputs are in display order (mu_m, ..., mu_1); reverse into application order
  std::vector<Weight> mu_chain(mus.rbegin(), mus.rend());
  std::vector<Weight> nu_chain(nus.rbegin(), nus.rend());
  return fr_div(chain_to_straight(rs, mu_chain, x), chain_to_straight(rs, nu_chain, x));
}

// ---------------------------------------------------------------------------
// identity batteries

namespace {

std::string word_to_string(const RootSystem& rs, const WeylElement& w) {
  auto word = rs.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

struct InstanceSource {
  const RootSystem& rs;
  long bound;
  long trials;
  std::mt19937_64 rng;
  bool exhaustive;

  InstanceSource(const RootSystem& r, long b, long t, unsigned long seed)
      : rs(r), bound(b), trials(t), rng(seed), exhaustive(r.rank() == 1) {}

  Weight random_weight() {
    std::uniform_int_distribution<long> dist(-bound, bound);
    RatVec c(static_cast<size_t>(rs.rank()));
    for (auto& x : c) x = Rat(dist(rng));
    return Weight(std::move(c));
  }

  const WeylElement& random_element() {
    const auto& grp = rs.weyl_group();
    std::uniform_int_distribution<size_t> dist(0, grp.size() - 1);
    return grp[dist(rng)];
  }

  // Visit (weights, elements) tuples: exhaustively on rank 1, sampled
  // otherwise.  Exhaustive element tuples range over the whole group.
  void for_each(int n_weights, int n_elems, const std::function<void(const std::vector<Weight>&,
                                                                     const std::vector<WeylElement>&)>& fn) {
    const auto& grp = rs.weyl_group();
    if (exhaustive) {
      std::vector<Weight> ws(static_cast<size_t>(n_weights), Weight::zero(rs.rank()));
      std::vector<long> odo(static_cast<size_t>(n_weights), -bound);
      bool done = false;
      while (!done) {
        for (int i = 0; i < n_weights; ++i) ws[static_cast<size_t>(i)] = Weight(RatVec{Rat(odo[static_cast<size_t>(i)])});
        std::vector<size_t> eodo(static_cast<size_t>(n_elems), 0);
        bool edone = false;
        while (!edone) {
          std::vector<WeylElement> es;
          for (size_t j = 0; j < eodo.size(); ++j) es.push_back(grp[eodo[j]]);
          fn(ws, es);
          edone = true;
          for (size_t j = 0; j < eodo.size(); ++j) {
            if (++eodo[j] < grp.size()) {
              edone = false;
              break;
            }
            eodo[j] = 0;
          }
          if (n_elems == 0) break;
        }
        done = true;
        for (int i = 0; i < n_weights; ++i) {
          if (++odo[static_cast<size_t>(i)] <= bound) {
            done = false;
            break;
          }
          odo[static_cast<size_t>(i)] = -bound;
        }
        if (n_weights == 0) break;
      }
    } else {
      for (long t = 0; t < trials; ++t) {
        std::vector<Weight> ws;
        for (int i = 0; i < n_weights; ++i) ws.push_back(random_weight());
        std::vector<WeylElement> es;
        for (int j = 0; j < n_elems; ++j) es.push_back(random_element());
        fn(ws, es);
      }
    }
  }
};

void expect_equal(const RootSystem& rs, IdentityReport& report, const FactoredRational& lhs,
                  const FactoredRational& rhs, const std::string& instance) {
  ++report.instances;
  if (!fr_equal(lhs, rhs))
    report.failures.push_back({instance, fr_to_string(lhs, &rs), fr_to_string(rhs, &rs)});
}

std::string describe(const RootSystem& rs, const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
  std::string s;
  for (size_t i = 0; i < ws.size(); ++i) s += (i ? "; " : "") + weight_to_string(ws[i]);
  for (const auto& e : es) s += "; " + word_to_string(rs, e);
  return s;
}

}  // namespace

IdentityReport check_normalization(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"normalization", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  WeylElement e = WeylElement::identity(rs.rank());
  Weight zero = Weight::zero(rs.rank());
  src.for_each(2, 1, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& mu = ws[0];
    const Weight& nu = ws[1];
    const WeylElement& x = es[0];
    auto one = FactoredRational::one();
    expect_equal(rs, report, delta_closed(rs, {mu, nu, e}), one, "Delta(mu,nu;e): " + describe(rs, ws, {}));
    expect_equal(rs, report, delta_closed(rs, {zero, nu, x}), one, "Delta(0,nu;x): " + describe(rs, ws, es));
    expect_equal(rs, report, delta_closed(rs, {nu, zero, x}), one, "Delta(nu,0;x): " + describe(rs, ws, es));
  });
  return report;
}

IdentityReport check_decomposition(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"decomposition", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  src.for_each(3, 1, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& eta = ws[0];
    const Weight& mu = ws[1];
    const Weight& nu = ws[2];
    const WeylElement& x = es[0];
    FactoredRational lhs = fr_mul(delta_closed(rs, {eta + mu, nu, x}), fr_shift(delta_closed(rs, {eta, mu, x}), nu));
    FactoredRational rhs = fr_mul(delta_closed(rs, {eta, mu + nu, x}), delta_closed(rs, {mu, nu, x}));
    expect_equal(rs, report, lhs, rhs, describe(rs, ws, es));
  });
  return report;
}

IdentityReport check_rotation(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"rotation", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  src.for_each(2, 2, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& mu = ws[0];
    const Weight& nu = ws[1];
    const WeylElement& y = es[0];
    const WeylElement& x = es[1];
    FactoredRational lhs = fr_dot_substitute(delta_closed(rs, {rs.act(y, mu), rs.act(y, nu), x}), rs, y);
    FactoredRational rhs = fr_div(delta_closed(rs, {mu, nu, x * y}), delta_closed(rs, {mu, nu, y}));
    expect_equal(rs, report, lhs, rhs, describe(rs, ws, es));
  });
  return report;
}

IdentityReport check_flatness(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"flatness", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  src.for_each(2, 2, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    // dominant pair moved into a common (closed) chamber by es[0]
    Weight nu0 = ws[0], mu0 = ws[1];
    for (auto& c : nu0.coords) c = abs(c);
    for (auto& c : mu0.coords) c = abs(c);
    const WeylElement& w = es[0];
    const WeylElement& x = es[1];
    expect_equal(rs, report, delta_closed(rs, {rs.act(w, mu0), rs.act(w, nu0), x}), FactoredRational::one(),
                 describe(rs, {nu0, mu0}, es));
  });
  return report;
}

IdentityReport check_I1_to_I4(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"I1-I4", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  WeylElement e = WeylElement::identity(rs.rank());
  src.for_each(2, 3, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& mu = ws[0];
    const Weight& nu = ws[1];
    const WeylElement& y = es[0];
    const WeylElement& x = es[1];
    const WeylElement& z = es[2];
    std::string inst = describe(rs, ws, es);
    // I1 with y = e reduces to Delta itself
    expect_equal(rs, report, generalized_delta(rs, mu, nu, e, x), delta_closed(rs, {mu, nu, x}), "I1(e,x): " + inst);
    // I2
    expect_equal(rs, report, generalized_delta(rs, mu, nu, y, x), fr_inverse(generalized_delta(rs, mu, nu, x, y)),
                 "I2: " + inst);
    // I3
    expect_equal(rs, report,
                 fr_mul(generalized_delta(rs, mu, nu, y, x), generalized_delta(rs, mu, nu, x, z)),
                 generalized_delta(rs, mu, nu, y, z), "I3: " + inst);
    // I4
    expect_equal(rs, report, generalized_delta(rs, mu, nu, y, x),
                 fr_dot_substitute(delta_closed(rs, {rs.act(y, mu), rs.act(y, nu), x * y.inverse()}), rs, y),
                 "I4: " + inst);
  });
  return report;
}

IdentityReport check_splitting(const RootSystem& rs, long bound, long trials, unsigned long seed) {
  IdentityReport report{"splitting", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  src.for_each(3, 1, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& nu1 = ws[0];
    const Weight& nu2 = ws[1];
    const Weight& nu3 = ws[2];
    const WeylElement& x = es[0];
    std::string inst = describe(rs, ws, es);
    Weight total = nu1 + nu2 + nu3;
    FactoredRational bar3 = bar_delta(rs, {nu3, nu2, nu1}, {total}, x);
    FactoredRational split_a = fr_mul(delta_closed(rs, {nu2, nu1, x}), delta_closed(rs, {nu3, nu1 + nu2, x}));
    FactoredRational split_b =
        fr_mul(delta_closed(rs, {nu2 + nu3, nu1, x}), fr_shift(delta_closed(rs, {nu3, nu2, x}), nu1));
    expect_equal(rs, report, bar3, split_a, "three-step (a): " + inst);
    expect_equal(rs, report, bar3, split_b, "three-step (b): " + inst);
    // two-by-two: mu-chain (nu2, nu1), nu-chain (nu2', nu3) with equal sums
    Weight nu2p = nu1 + nu2 - nu3;
    FactoredRational bar22 = bar_delta(rs, {nu2, nu1}, {nu2p, nu3}, x);
    FactoredRational rhs = fr_div(delta_closed(rs, {nu2, nu1, x}), delta_closed(rs, {nu2p, nu3, x}));
    expect_equal(rs, report, bar22, rhs, "two-by-two: " + inst);
  });
  return report;
}

IdentityReport check_proposition(const RootSystem& rs, long bound, long trials, unsigned long seed,
                                 int max_chain) {
  IdentityReport report{"proposition", 0, {}};
  for (int m = 2; m <= max_chain; ++m) {
    InstanceSource src(rs, bound, std::max<long>(1, trials / std::max(1, max_chain - 1)), seed + static_cast<unsigned long>(m));
    src.for_each(m, 1, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
      const WeylElement& x = es[0];
      // ws in application order mu_1..mu_m
      FactoredRational first = FactoredRational::one();
      Weight partial = Weight::zero(rs.rank());
      for (int k = 0; k < m; ++k) {
        if (k > 0) first = fr_mul(first, delta_closed(rs, {ws[static_cast<size_t>(k)], partial, x}));
        partial = partial + ws[static_cast<size_t>(k)];
      }
      FactoredRational second = FactoredRational::one();
      Weight lead = Weight::zero(rs.rank());
      for (int k = 0; k < m - 1; ++k) {
        Weight tail = Weight::zero(rs.rank());
        for (int j = k + 1; j < m; ++j) tail = tail + ws[static_cast<size_t>(j)];
        second = fr_mul(second, fr_shift(delta_closed(rs, {tail, ws[static_cast<size_t>(k)], x}), lead));
        lead = lead + ws[static_cast<size_t>(k)];
      }
      std::string inst = "m=" + std::to_string(m) + ": " + describe(rs, ws, es);
      expect_equal(rs, report, first, second, inst);
      // bar_delta of the chain against the straight arrow agrees with both
      std::vector<Weight> display(ws.rbegin(), ws.rend());
      expect_equal(rs, report, bar_delta(rs, display, {partial}, x), first, "bar: " + inst);
    });
  }
  return report;
}

IdentityReport check_quotient_formula(const RootSystem& rs, long bound, long trials,
                                      unsigned long seed) {
  IdentityReport report{"quotient", 0, {}};
  InstanceSource src(rs, bound, trials, seed);
  WeylElement e = WeylElement::identity(rs.rank());
  src.for_each(2, 1, [&](const std::vector<Weight>& ws, const std::vector<WeylElement>& es) {
    const Weight& mu = ws[0];
    const Weight& nu = ws[1];
    const WeylElement& x = es[0];
    TriangleSpec spec{mu, nu, x};
    std::string inst = describe(rs, ws, es);
    Rat eps(epsilon_sign(rs, spec));
    FactoredRational lhs = fr_mul(FactoredRational(eps), fr_shift(pi_product(rs, spec), rs.rho()));
    expect_equal(rs, report, lhs, delta_quotient_form(rs, spec), "eps*pi(tau+rho) vs quotient: " + inst);
    // the D-ratio route: D^x / D^e = eps * Delta
    FactoredRational dratio = fr_div(D_x(rs, spec), D_x(rs, {mu, nu, e}));
    expect_equal(rs, report, dratio, fr_mul(FactoredRational(eps), delta_closed(rs, spec)),
                 "D^x/D^e vs eps*Delta: " + inst);
  });
  return report;
}

std::vector<IdentityReport> check_identity(const RootSystem& rs, const std::string& name, long bound,
                                           long trials, unsigned long seed) {
  std::vector<IdentityReport> out;
  auto want = [&](const std::string& n) { return name == "all" || name == n; };
  if (want("normalization")) out.push_back(check_normalization(rs, bound, trials, seed));
  if (want("decomposition")) out.push_back(check_decomposition(rs, bound, trials, seed));
  if (want("rotation")) out.push_back(check_rotation(rs, bound, trials, seed));
  if (want("flatness")) out.push_back(check_flatness(rs, bound, trials, seed));
  if (want("I1-I4") || want("identities")) out.push_back(check_I1_to_I4(rs, bound, trials, seed));
  if (want("splitting")) out.push_back(check_splitting(rs, bound, trials, seed));
  if (want("proposition")) out.push_back(check_proposition(rs, bound, trials, seed));
  if (want("quotient")) out.push_back(check_quotient_formula(rs, bound, trials, seed));
  if (out.empty()) throw ConfigError("unknown identity '" + name + "'");
  return out;
}

}  // namespace translatio
