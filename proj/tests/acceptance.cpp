// Acceptance battery: every criterion is an exact symbolic statement, each
// run at the pinned scope and printed as a single pass/fail line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "translatio/finestructure.hpp"
#include "translatio/repweights.hpp"
#include "translatio/rootsys.hpp"
#include "translatio/sl2oracle.hpp"
#include "translatio/triangle.hpp"

using namespace translatio;

namespace {

Weight W1(long c) { return Weight({Rat(c)}); }

Weight W2(long a, long b) { return Weight({Rat(a), Rat(b)}); }

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// 1. Oracle vs closed formula, all (m,n) in [-4,4]^2.
bool crit_oracle_vs_closed(std::string& detail) {
  RootSystem a1("A1");
  WeylElement s = a1.simple_reflection(0);
  long checked = 0, failed = 0;
  for (long m = -4; m <= 4; ++m)
    for (long n = -4; n <= 4; ++n) {
      sl2::RatFunc1 oracle = sl2::delta_direct(static_cast<int>(m), static_cast<int>(n));
      sl2::RatFunc1 closed = sl2::to_ratfunc(delta_closed(a1, {W1(m), W1(n), s}));
      ++checked;
      if (!(oracle == closed)) ++failed;
    }
  detail = std::to_string(checked) + " instances, " + std::to_string(failed) + " mismatches";
  return failed == 0;
}

// 2. bernstein_delta(nu) = delta_closed(-nu, nu; w0) for dominant coords <= 2.
bool crit_corollary_consistency(std::string& detail) {
  long checked = 0, failed = 0;
  for (const char* label : {"A1", "A2", "B2"}) {
    RootSystem rs(label);
    WeylElement w0 = rs.longest_element();
    std::vector<Weight> doms;
    if (rs.rank() == 1)
      for (long a = 0; a <= 2; ++a) doms.push_back(W1(a));
    else
      for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b) doms.push_back(W2(a, b));
    for (const auto& nu : doms) {
      ++checked;
      if (!fr_equal(bernstein_delta(rs, nu), delta_closed(rs, {-nu, nu, w0}))) ++failed;
    }
  }
  detail = std::to_string(checked) + " weights, " + std::to_string(failed) + " mismatches";
  return failed == 0;
}

// 3. trace theorem: trace_direct(N, *) = (t+N+1)/(t+1) for N <= 5.
bool crit_trace_theorem(std::string& detail) {
  long failed = 0;
  for (int n = 0; n <= 5; ++n) {
    sl2::Poly1 num, den;
    num.c = {Rat(n + 1), Rat(1)};
    den.c = {Rat(1), Rat(1)};
    sl2::RatFunc1 expect(num, den);
    if (!(sl2::trace_direct(n, true) == expect)) ++failed;
    if (!(sl2::trace_direct(n, false) == expect)) ++failed;
  }
  detail = "N <= 5 at both arguments, " + std::to_string(failed) + " mismatches";
  return failed == 0;
}

// 4. Bernstein well-definedness: Lambda | P(E) * (Lambda f) and tr(1) = dim.
bool crit_bernstein_welldefined(std::string& detail) {
  long checked = 0, failed = 0;
  for (const char* label : {"A1", "A2", "B2"}) {
    RootSystem rs(label);
    int r = rs.rank();
    std::vector<SparsePoly> inputs{SparsePoly::constant(r, Rat(1)), sym(rs, SparsePoly::variable(r, 0))};
    if (r >= 2) inputs.push_back(sym(rs, SparsePoly::variable(r, 0) * SparsePoly::variable(r, 1)));
    std::vector<Weight> doms;
    if (r == 1) {
      for (long a = 0; a <= 4; ++a) doms.push_back(W1(a));
    } else {
      doms = {W2(0, 0), W2(1, 0), W2(0, 1), W2(1, 1), W2(2, 0), W2(0, 2), W2(2, 1), W2(1, 2), W2(2, 2), W2(3, 0)};
    }
    for (const auto& lam : doms) {
      WeightMultiset ms = weight_multiset(rs, lam);
      for (const auto& f : inputs) {
        ++checked;
        try {
          SparsePoly tr = relative_trace(rs, ms, f);
          if (f == SparsePoly::constant(r, Rat(1)) && !(tr == SparsePoly::constant(r, Rat(ms.dimension()))))
            ++failed;
        } catch (const Error&) {
          ++failed;
        }
      }
    }
  }
  detail = std::to_string(checked) + " (E, f) pairs, " + std::to_string(failed) + " failures";
  return failed == 0;
}

// 5. quotient formula: eps*pi(tau+rho) = delta-quotient, exhaustive A1 and
//    200 seeded instances each on A2, B2.
bool crit_quotient_formula(std::string& detail) {
  long instances = 0, failures = 0;
  {
    RootSystem a1("A1");
    auto report = check_quotient_formula(a1, 3, 0, 0);
    instances += report.instances;
    failures += static_cast<long>(report.failures.size());
  }
  for (const char* label : {"A2", "B2"}) {
    RootSystem rs(label);
    auto report = check_quotient_formula(rs, 3, 200, 20260810);
    instances += report.instances;
    failures += static_cast<long>(report.failures.size());
  }
  detail = std::to_string(instances) + " checks, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// 6. the identity suite: exhaustive A1 (coords <= 3), 100 seeded instances
//    each on A2 and B2, smoke on A3.
bool crit_identity_suite(std::string& detail) {
  long instances = 0, failures = 0;
  auto run = [&](const char* label, long bound, long trials, unsigned long long seed) {
    RootSystem rs(label);
    for (const auto& report : check_identity(rs, "all", bound, trials, seed)) {
      instances += report.instances;
      failures += static_cast<long>(report.failures.size());
    }
  };
  run("A1", 3, 0, 0);
  run("A2", 3, 100, 1);
  run("B2", 3, 100, 2);
  run("A3", 2, 8, 3);
  detail = std::to_string(instances) + " checks, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// 7. pole theorem at rank one plus the frozen N=1 coordinates.
bool crit_pole_theorem(std::string& detail) {
  long failed = 0;
  for (int n = 1; n <= 6; ++n)
    if (!sl2::verify_pole_theorem(n)) ++failed;
  auto v = sl2::f_nu_vector(1, -1);
  sl2::Poly1 t{Rat(0), Rat(1)}, tp1{Rat(1), Rat(1)}, mone{Rat(-1)};
  if (!(v.size() == 2 && v[0] == sl2::RatFunc1(t, tp1) && v[1] == sl2::RatFunc1(mone, tp1))) ++failed;
  detail = "N in 1..6 plus the N=1 coordinate check, " + std::to_string(failed) + " failures";
  return failed == 0;
}

// 8. combinatorial structure: |N_nu| per-root count and codim >= 2 for
//    S, S1, S2 over all extremal nu with dominant coords <= 2.
bool crit_combinatorial_structure(std::string& detail) {
  long checked = 0, failed = 0;
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs(label);
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= 2; ++b) {
        Weight hi = W2(a, b);
        for (const auto& w : rs.weyl_group()) {
          Weight nu = rs.act(w, hi);
          ++checked;
          long expect = 0;
          for (const auto& alpha : rs.positive_roots()) {
            long p = to_long(rs.pairing(nu, alpha));
            if (p < 0) expect += -p;
          }
          if (static_cast<long>(n_nu(rs, nu).size()) != expect) ++failed;
          for (const auto& sub : singular_set_S(rs, nu))
            if (sub.codim < 2) ++failed;
          for (const auto& sub : s1(rs, nu))
            if (sub.codim < 2) ++failed;
          for (const auto& sub : s2(rs, nu, default_s2_bound(rs, nu)))
            if (sub.codim < 2) ++failed;
        }
      }
  }
  detail = std::to_string(checked) + " extremal weights, " + std::to_string(failed) + " failures";
  return failed == 0;
}

// 9. Freudenthal totals equal the Weyl dimension for dominant coords <= 3.
bool crit_weight_engine(std::string& detail) {
  long checked = 0, failed = 0;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs(label);
    std::vector<Weight> doms;
    if (rs.rank() == 1)
      for (long a = 0; a <= 3; ++a) doms.push_back(W1(a));
    else
      for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) doms.push_back(W2(a, b));
    for (const auto& lam : doms) {
      ++checked;
      if (weight_multiset(rs, lam).dimension() != weyl_dimension(rs, lam)) ++failed;
    }
  }
  detail = std::to_string(checked) + " highest weights, " + std::to_string(failed) + " mismatches";
  return failed == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 oracle vs closed formula (rank 1, 81 instances)", crit_oracle_vs_closed},
      {"2 corollary consistency Delta(-nu,nu;w0)", crit_corollary_consistency},
      {"3 relative trace theorem (t+N+1)/(t+1)", crit_trace_theorem},
      {"4 trace formula well-definedness", crit_bernstein_welldefined},
      {"5 quotient formula eps*pi = delta-quotient", crit_quotient_formula},
      {"6 identity suite", crit_identity_suite},
      {"7 pole theorem at rank 1", crit_pole_theorem},
      {"8 combinatorial pole structure", crit_combinatorial_structure},
      {"9 weight engine vs Weyl dimension", crit_weight_engine},
  };
  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %s (%s, %lld ms)\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
