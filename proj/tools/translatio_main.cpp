// translatio: exact computations around translation functors on Verma
// modules. Subcommands: roots, weights, fine, delta, trace, check, oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "translatio/errors.hpp"
#include "translatio/finestructure.hpp"
#include "translatio/repweights.hpp"
#include "translatio/sl2oracle.hpp"
#include "translatio/triangle.hpp"

using json = nlohmann::json;
using namespace translatio;

namespace {

constexpr const char* kVersion = "0.1.0";

Weight parse_weight(const RootSystem& rs, const std::string& s) {
  Weight w = weight_from_string(s);
  if (w.rank() != rs.rank())
    throw ConfigError("weight '" + s + "' has " + std::to_string(w.rank()) + " coordinates; " + rs.label() +
                      " needs " + std::to_string(rs.rank()));
  return w;
}

WeylElement parse_weyl_word(const RootSystem& rs, const std::string& text) {
  if (text == "e" || text.empty()) return WeylElement::identity(rs.rank());
  if (text == "w0") return rs.longest_element();
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw ConfigError("bad Weyl word token '" + tok + "'");
    int idx = std::atoi(tok.c_str() + 1);
    if (idx < 1 || idx > rs.rank()) throw ConfigError("reflection index out of range in '" + tok + "'");
    word.push_back(idx - 1);
  }
  return rs.element_from_word(word);
}

std::string word_string(const RootSystem& rs, const WeylElement& w) {
  auto word = rs.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w.coords) a.push_back(rat_to_string(c));
  return a;
}

json form_json(const LinearForm& f) {
  return json{{"coeffs", f.coeffs}, {"shift", rat_to_string(f.shift)}};
}

json fr_json(const FactoredRational& a) {
  json factors = json::array();
  for (const auto& [f, e] : a.factors())
    factors.push_back(json{{"coeffs", f.coeffs}, {"shift", rat_to_string(f.shift)}, {"exp", e}});
  return json{{"constant", rat_to_string(a.constant())}, {"factors", factors}};
}

json report_envelope(const std::string& command, json config, json results, json failures) {
  return json{{"command", command},
              {"config", std::move(config)},
              {"results", std::move(results)},
              {"failures", std::move(failures)},
              {"version", kVersion}};
}

struct Options {
  std::string system;
  std::string nu, mu, x = "e";
  std::string identity = "all";
  std::string check = "delta";
  std::string format = "pretty";
  long bound = 2;
  long trials = 100;
  unsigned long long seed = 0;
  long range = 4;
  long big_n = 6;
  long bound_m = -1;
  bool as_json = false;
  bool above = false;
};

int cmd_roots(const Options& opt) {
  RootSystem rs(opt.system);
  json roots = json::array();
  for (const auto& alpha : rs.positive_roots())
    roots.push_back(json{{"root", alpha.root_coords}, {"coroot", alpha.coroot_coords}});
  size_t order = rs.weyl_order();
  if (opt.as_json) {
    json word = json::array();
    for (int i : rs.reduced_word(rs.longest_element())) word.push_back(i + 1);
    json results = json::array();
    results.push_back(json{{"rank", rs.rank()},
                           {"cartan", rs.cartan()},
                           {"positive_roots", roots},
                           {"weyl_order", order},
                           {"rho", weight_json(rs.rho())},
                           {"longest_word", word}});
    std::cout << report_envelope("roots", json{{"system", opt.system}}, results, json::array()).dump(2) << "\n";
    return 0;
  }
  std::cout << opt.system << ": rank " << rs.rank() << ", " << rs.positive_roots().size() << " positive roots, |W| = "
            << order << ", w0 = " << word_string(rs, rs.longest_element()) << "\n";
  for (const auto& alpha : rs.positive_roots()) {
    std::cout << "  root ";
    for (auto c : alpha.root_coords) std::cout << c << " ";
    std::cout << "| coroot ";
    for (auto c : alpha.coroot_coords) std::cout << c << " ";
    std::cout << "\n";
  }
  return 0;
}

int cmd_weights(const Options& opt) {
  RootSystem rs(opt.system);
  Weight nu = parse_weight(rs, opt.nu);
  WeightMultiset ms = opt.above ? weights_above(rs, nu) : weight_multiset(rs, nu);
  if (opt.as_json) {
    json results = json::array();
    for (const auto& [mu, m] : ms.entries) results.push_back(json{{"coords", weight_json(mu)}, {"mult", m}});
    std::cout << report_envelope("weights", json{{"system", opt.system}, {"nu", opt.nu}, {"above", opt.above}},
                                 results, json::array())
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << (opt.above ? "weights above " : "weights of E(") << opt.nu << (opt.above ? ":" : "):") << "\n";
  for (const auto& [mu, m] : ms.entries) std::cout << "  " << weight_to_string(mu) << "  x" << m << "\n";
  std::cout << "total " << ms.dimension();
  if (!opt.above) std::cout << " (Weyl dimension " << weyl_dimension(rs, nu) << ")";
  std::cout << "\n";
  return 0;
}

int cmd_fine(const Options& opt) {
  RootSystem rs(opt.system);
  Weight nu = parse_weight(rs, opt.nu);
  auto data = n_nu(rs, nu);
  FactoredRational dnu = delta_nu(rs, nu);
  auto big_s = singular_set_S(rs, nu);
  auto set1 = s1(rs, nu);
  long bound = opt.bound_m >= 0 ? opt.bound_m : default_s2_bound(rs, nu);
  auto set2 = s2(rs, nu, bound);

  auto subspaces_json = [](const std::vector<AffineSubspace>& subs) {
    json out = json::array();
    for (const auto& sub : subs) {
      json eqs = json::array();
      for (const auto& eq : sub.equations) eqs.push_back(form_json(eq));
      json item{{"equations", eqs}, {"codim", sub.codim}};
      if (sub.witness) item["witness"] = weight_json(*sub.witness);
      out.push_back(item);
    }
    return out;
  };

  if (opt.as_json) {
    json nn = json::array();
    for (const auto& [k, m] : data) nn.push_back(json{{"alpha", rs.positive_root(k).root_coords}, {"m", m}});
    json results = json::array();
    results.push_back(json{{"n_nu", nn},
                           {"delta_nu", fr_to_string(dnu, &rs)},
                           {"delta_nu_factored", fr_json(dnu)},
                           {"S", subspaces_json(big_s)},
                           {"S1", subspaces_json(set1)},
                           {"S2", subspaces_json(set2)},
                           {"s2_bound", bound}});
    std::cout << report_envelope("fine", json{{"system", opt.system}, {"nu", opt.nu}}, results, json::array()).dump(2)
              << "\n";
    return 0;
  }
  std::cout << "N_nu (" << data.size() << " pairs):\n";
  for (const auto& [k, m] : data) {
    std::cout << "  alpha = ";
    for (auto c : rs.positive_root(k).root_coords) std::cout << c << " ";
    std::cout << ", m = " << m << "\n";
  }
  std::cout << "delta_nu = " << fr_to_string(dnu, &rs) << "\n";
  std::cout << "S: " << big_s.size() << " subspaces, S1: " << set1.size() << ", S2 (|m| <= " << bound
            << "): " << set2.size() << "; all of codim >= 2\n";
  return 0;
}

int cmd_delta(const Options& opt) {
  RootSystem rs(opt.system);
  TriangleSpec spec{parse_weight(rs, opt.mu), parse_weight(rs, opt.nu), parse_weyl_word(rs, opt.x)};
  if (!spec.mu.is_integral() || !spec.nu.is_integral()) throw ConfigError("delta needs integral weights");
  FactoredRational result = delta_closed(rs, spec);
  if (opt.format == "json" || opt.as_json) {
    json results = json::array();
    results.push_back(json{{"delta", fr_to_string(result, &rs)}, {"factored", fr_json(result)}});
    std::cout << report_envelope("delta",
                                 json{{"system", opt.system}, {"nu", opt.nu}, {"mu", opt.mu}, {"x", opt.x}},
                                 results, json::array())
                     .dump(2)
              << "\n";
  } else if (opt.format == "latex") {
    std::cout << fr_to_string(result, &rs, FormStyle::Latex) << "\n";
  } else {
    std::cout << fr_to_string(result, &rs) << "\n";
  }
  return 0;
}

int cmd_trace(const Options& opt) {
  RootSystem rs(opt.system);
  Weight nu = parse_weight(rs, opt.nu);
  FactoredRational bd = bernstein_delta(rs, nu);
  WeightMultiset ms = weight_multiset(rs, nu);
  SparsePoly tr1 = relative_trace(rs, ms, SparsePoly::constant(rs.rank(), Rat(1)));
  bool dims_ok = tr1 == SparsePoly::constant(rs.rank(), Rat(ms.dimension()));
  if (opt.as_json) {
    json results = json::array();
    results.push_back(json{{"bernstein_delta", fr_to_string(bd, &rs)},
                           {"dim", ms.dimension()},
                           {"trace_of_identity", poly_to_string(tr1)},
                           {"consistent", dims_ok}});
    json failures = json::array();
    if (!dims_ok) failures.push_back("trace of 1 differs from dim E");
    std::cout << report_envelope("trace", json{{"system", opt.system}, {"nu", opt.nu}}, results, failures).dump(2)
              << "\n";
  } else {
    std::cout << "Delta(-nu,nu;w0) = " << fr_to_string(bd, &rs) << "\n";
    std::cout << "dim E = " << ms.dimension() << ", tr_E(1) = " << poly_to_string(tr1) << "\n";
  }
  return dims_ok ? 0 : 1;
}

int cmd_check(const Options& opt) {
  RootSystem rs(opt.system);
  auto reports = check_identity(rs, opt.identity, opt.bound, opt.trials, opt.seed);
  long failures = 0;
  json results = json::array();
  json fail_list = json::array();
  for (const auto& report : reports) {
    failures += static_cast<long>(report.failures.size());
    results.push_back(json{{"identity", report.identity},
                           {"instances", report.instances},
                           {"failures", report.failures.size()}});
    for (const auto& f : report.failures)
      fail_list.push_back(json{{"identity", report.identity}, {"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    if (!opt.as_json)
      std::cout << report.identity << ": " << report.instances << " instances, " << report.failures.size()
                << " failures\n";
  }
  if (opt.as_json)
    std::cout << report_envelope("check",
                                 json{{"system", opt.system},
                                      {"identity", opt.identity},
                                      {"bound", opt.bound},
                                      {"trials", opt.trials},
                                      {"seed", opt.seed}},
                                 results, fail_list)
                     .dump(2)
              << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_oracle(const Options& opt) {
  long mismatches = 0;
  json results = json::array();
  if (opt.check == "delta") {
    RootSystem a1("A1");
    WeylElement s = a1.simple_reflection(0);
    for (long m = -opt.range; m <= opt.range; ++m)
      for (long n = -opt.range; n <= opt.range; ++n) {
        sl2::RatFunc1 oracle = sl2::delta_direct(static_cast<int>(m), static_cast<int>(n));
        sl2::RatFunc1 closed = sl2::to_ratfunc(delta_closed(a1, {Weight({Rat(m)}), Weight({Rat(n)}), s}));
        bool ok = oracle == closed;
        if (!ok) ++mismatches;
        if (!opt.as_json)
          std::printf("m=%+ld n=%+ld  oracle %-24s closed %-24s %s\n", m, n, oracle.to_string().c_str(),
                      closed.to_string().c_str(), ok ? "ok" : "MISMATCH");
        results.push_back(json{{"m", m}, {"n", n}, {"oracle", oracle.to_string()}, {"closed", closed.to_string()},
                               {"ok", ok}});
      }
  } else if (opt.check == "trace") {
    RootSystem a1("A1");
    for (long n = 0; n <= opt.big_n; ++n) {
      sl2::RatFunc1 at_w0 = sl2::trace_direct(static_cast<int>(n), true);
      sl2::RatFunc1 at_e = sl2::trace_direct(static_cast<int>(n), false);
      sl2::RatFunc1 expect = sl2::to_ratfunc(bernstein_delta(a1, Weight({Rat(n)})));
      bool ok = at_w0 == expect && at_e == expect;
      if (!ok) ++mismatches;
      if (!opt.as_json)
        std::printf("N=%ld  tr(w0) %-20s tr(e) %-20s expect %-20s %s\n", n, at_w0.to_string().c_str(),
                    at_e.to_string().c_str(), expect.to_string().c_str(), ok ? "ok" : "MISMATCH");
      results.push_back(json{{"N", n}, {"trace_w0", at_w0.to_string()}, {"trace_e", at_e.to_string()},
                             {"expected", expect.to_string()}, {"ok", ok}});
    }
  } else if (opt.check == "poles") {
    for (long n = 1; n <= opt.big_n; ++n) {
      bool ok = sl2::verify_pole_theorem(static_cast<int>(n));
      if (!ok) ++mismatches;
      if (!opt.as_json) std::printf("N=%ld  delta*f polynomial with constant gcd: %s\n", n, ok ? "ok" : "FAIL");
      results.push_back(json{{"N", n}, {"ok", ok}});
    }
  } else {
    throw ConfigError("unknown oracle check '" + opt.check + "'");
  }
  if (opt.as_json) {
    json fail_list = json::array();
    for (const auto& r : results)
      if (!r.at("ok").get<bool>()) fail_list.push_back(r);
    std::cout << report_envelope("oracle", json{{"check", opt.check}, {"range", opt.range}, {"N", opt.big_n}},
                                 results, fail_list)
                     .dump(2)
              << "\n";
  } else {
    std::printf("%ld mismatch(es)\n", mismatches);
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact triangle functions for translation functors"};
  app.require_subcommand(1);
  Options opt;

  auto* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("--system", opt.system, "type label, e.g. A2")->required();
  roots->add_flag("--json", opt.as_json, "machine readable report");

  auto* weights = app.add_subcommand("weights", "weight multiset of E(nu)");
  weights->add_option("--system", opt.system)->required();
  weights->add_option("--nu", opt.nu, "comma separated fundamental coordinates")->required();
  weights->add_flag("--above", opt.above, "restrict to weights strictly above nu");
  weights->add_flag("--json", opt.as_json);

  auto* fine = app.add_subcommand("fine", "pole and hyperplane data of f_nu");
  fine->add_option("--system", opt.system)->required();
  fine->add_option("--nu", opt.nu)->required();
  fine->add_option("--bound-m", opt.bound_m, "level bound for the second hyperplane family");
  fine->add_flag("--json", opt.as_json);

  auto* delta = app.add_subcommand("delta", "closed form of the triangle function");
  delta->add_option("--system", opt.system)->required();
  delta->add_option("--nu", opt.nu)->required();
  delta->add_option("--mu", opt.mu)->required();
  delta->add_option("--x", opt.x, "Weyl word: 'e', 'w0', or 's1 s2 ...'");
  delta->add_option("--format", opt.format)->check(CLI::IsMember({"pretty", "json", "latex"}));

  auto* trace = app.add_subcommand("trace", "Bernstein trace data for dominant nu");
  trace->add_option("--system", opt.system)->required();
  trace->add_option("--nu", opt.nu)->required();
  trace->add_flag("--json", opt.as_json);

  auto* check = app.add_subcommand("check", "identity batteries");
  check->add_option("--system", opt.system)->required();
  check->add_option("--identity", opt.identity,
                    "normalization|decomposition|rotation|flatness|I1-I4|splitting|proposition|quotient|all");
  check->add_option("--bound", opt.bound, "coordinate bound");
  check->add_option("--trials", opt.trials, "sampled instances (rank >= 2)");
  check->add_option("--seed", opt.seed);
  check->add_flag("--json", opt.as_json);

  auto* oracle = app.add_subcommand("oracle", "rank-one ground truth comparisons");
  oracle->add_option("--check", opt.check)->check(CLI::IsMember({"delta", "trace", "poles"}));
  oracle->add_option("--range", opt.range, "coordinate range for the delta table");
  oracle->add_option("--N", opt.big_n, "largest N for trace/pole checks");
  oracle->add_flag("--json", opt.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(opt);
    if (weights->parsed()) return cmd_weights(opt);
    if (fine->parsed()) return cmd_fine(opt);
    if (delta->parsed()) return cmd_delta(opt);
    if (trace->parsed()) return cmd_trace(opt);
    if (check->parsed()) return cmd_check(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
