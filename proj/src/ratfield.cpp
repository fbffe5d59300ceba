#include "translatio/ratfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "translatio/errors.hpp"
#include "translatio/repweights.hpp"

namespace translatio {

// ---------------------------------------------------------------------------
// LinearForm

bool LinearForm::is_constant() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

Rat LinearForm::evaluate(const Weight& tau) const {
  Rat acc = shift;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) acc += Rat(coeffs[i]) * tau.coords[i];
  return acc;
}

std::pair<Rat, std::optional<LinearForm>> canonicalize_form(std::vector<long> coeffs, Rat shift) {
  long g = 0;
  long first_nonzero = 0;
  for (auto c : coeffs) {
    g = std::gcd(g, std::labs(c));
    if (first_nonzero == 0 && c != 0) first_nonzero = c;
  }
  if (first_nonzero == 0) return {shift, std::nullopt};
  long scale = first_nonzero < 0 ? -g : g;
  for (auto& c : coeffs) c /= scale;
  LinearForm f;
  f.coeffs = std::move(coeffs);
  f.shift = shift / Rat(scale);
  return {Rat(scale), f};
}

// ---------------------------------------------------------------------------
// FactoredRational

FactoredRational FactoredRational::from_form(std::vector<long> coeffs, Rat shift, long exp) {
  FactoredRational r;
  r.multiply_form(std::move(coeffs), std::move(shift), exp);
  return r;
}

void FactoredRational::multiply_form(std::vector<long> coeffs, Rat shift, long exp) {
  if (is_zero() || exp == 0) return;
  auto [scale, form] = canonicalize_form(std::move(coeffs), std::move(shift));
  if (!form) {
    // a constant factor
    if (scale == 0) {
      if (exp < 0) throw ArithmeticError("division by the zero function");
      constant_ = 0;
      factors_.clear();
      return;
    }
    Rat p(1);
    Rat base = exp > 0 ? scale : Rat(1) / scale;
    for (long k = 0; k < std::labs(exp); ++k) p *= base;
    constant_ *= p;
    return;
  }
  Rat p(1);
  Rat base = exp > 0 ? scale : Rat(1) / scale;
  for (long k = 0; k < std::labs(exp); ++k) p *= base;
  constant_ *= p;
  auto it = factors_.find(*form);
  if (it == factors_.end()) {
    factors_.emplace(*form, exp);
  } else {
    it->second += exp;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredRational fr_mul(const FactoredRational& a, const FactoredRational& b) {
  if (a.is_zero() || b.is_zero()) return FactoredRational::zero();
  FactoredRational r = a;
  r.constant_ *= b.constant_;
  for (const auto& [f, e] : b.factors_) {
    auto it = r.factors_.find(f);
    if (it == r.factors_.end()) {
      r.factors_.emplace(f, e);
    } else {
      it->second += e;
      if (it->second == 0) r.factors_.erase(it);
    }
  }
  return r;
}

FactoredRational fr_inverse(const FactoredRational& a) {
  if (a.is_zero()) throw ArithmeticError("inverse of the zero function");
  FactoredRational r;
  r.constant_ = Rat(1) / a.constant_;
  for (const auto& [f, e] : a.factors_) r.factors_.emplace(f, -e);
  return r;
}

FactoredRational fr_div(const FactoredRational& a, const FactoredRational& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero function");
  if (a.is_zero()) return FactoredRational::zero();
  return fr_mul(a, fr_inverse(b));
}

FactoredRational fr_pow(const FactoredRational& a, long e) {
  if (e == 0) return FactoredRational::one();
  FactoredRational base = e > 0 ? a : fr_inverse(a);
  FactoredRational r = FactoredRational::one();
  for (long k = 0; k < std::labs(e); ++k) r = fr_mul(r, base);
  return r;
}

bool fr_equal(const FactoredRational& a, const FactoredRational& b) {
  return a.constant_ == b.constant_ && a.factors_ == b.factors_;
}

FactoredRational fr_shift(const FactoredRational& a, const Weight& sigma) {
  if (a.is_zero()) return a;
  FactoredRational r(a.constant_);
  for (const auto& [f, e] : a.factors_) {
    Rat s = f.shift;
    for (size_t i = 0; i < f.coeffs.size(); ++i)
      if (f.coeffs[i] != 0) s += Rat(f.coeffs[i]) * sigma.coords[i];
    LinearForm g;
    g.coeffs = f.coeffs;  // canonical shape is untouched by shifting
    g.shift = std::move(s);
    r.factors_.emplace(std::move(g), e);
  }
  return r;
}

FactoredRational fr_dot_substitute(const FactoredRational& a, const RootSystem& rs, const WeylElement& w) {
  if (a.is_zero()) return a;
  int r = rs.rank();
  FactoredRational out(a.constant_);
  for (const auto& [f, e] : a.factors_) {
    // l(w.tau): coefficients c^T M_w, shift l(w rho - rho) + original shift.
    std::vector<long> coeffs(static_cast<size_t>(r), 0);
    Rat shift = f.shift;
    for (int i = 0; i < r; ++i) {
      if (f.coeffs[static_cast<size_t>(i)] == 0) continue;
      long rowsum = 0;
      for (int j = 0; j < r; ++j) {
        coeffs[static_cast<size_t>(j)] += f.coeffs[static_cast<size_t>(i)] * w.at(i, j);
        rowsum += w.at(i, j);
      }
      shift += Rat(f.coeffs[static_cast<size_t>(i)]) * Rat(rowsum - 1);
    }
    out.multiply_form(std::move(coeffs), std::move(shift), e);
  }
  return out;
}

Rat fr_evaluate(const FactoredRational& a, const Weight& tau0) {
  for (const auto& [f, e] : a.factors_)
    if (e < 0 && f.evaluate(tau0) == 0)
      throw PoleError("pole at tau0: vanishing denominator factor", form_to_string(f, nullptr, FormStyle::Plain));
  Rat acc = a.constant_;
  for (const auto& [f, e] : a.factors_) {
    Rat v = f.evaluate(tau0);
    Rat base = e > 0 ? v : Rat(1) / v;
    for (long k = 0; k < std::labs(e); ++k) acc *= base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// SparsePoly

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly SparsePoly::constant(int nvars, Rat c) {
  SparsePoly p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  SparsePoly p(nvars);
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  p.add_term(e, Rat(1));
  return p;
}

SparsePoly SparsePoly::linear(const std::vector<long>& coeffs, const Rat& shift) {
  SparsePoly p(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, Rat(coeffs[i]));
  }
  if (shift != 0) p.add_term(std::vector<int>(coeffs.size(), 0), shift);
  return p;
}

void SparsePoly::add_term(const std::vector<int>& expo, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SparsePoly operator*(const Rat& c, const SparsePoly& a) {
  SparsePoly r(a.nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

Rat SparsePoly::evaluate(const RatVec& point) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

long SparsePoly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

std::optional<SparsePoly> poly_divide_exact(const SparsePoly& p, const SparsePoly& q) {
  if (q.is_zero()) throw ArithmeticError("division by the zero polynomial");
  SparsePoly quotient(p.nvars());
  SparsePoly cur = p;
  auto ltq = *q.terms().rbegin();
  while (!cur.is_zero()) {
    auto ltc = *cur.terms().rbegin();
    std::vector<int> mono(ltc.first.size());
    for (size_t i = 0; i < mono.size(); ++i) {
      mono[i] = ltc.first[i] - ltq.first[i];
      if (mono[i] < 0) return std::nullopt;
    }
    Rat coef = ltc.second / ltq.second;
    SparsePoly m(p.nvars());
    m.add_term(mono, coef);
    quotient = quotient + m;
    cur = cur - m * q;
  }
  return quotient;
}

namespace {

// prod over variables of subst[i]^{e_i}, with a per-variable power cache.
SparsePoly substitute_all(const SparsePoly& p, const std::vector<SparsePoly>& subst) {
  int n = p.nvars();
  std::vector<std::vector<SparsePoly>> cache(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cache[static_cast<size_t>(i)].push_back(SparsePoly::constant(n, Rat(1)));
  auto power = [&](int i, int e) -> const SparsePoly& {
    auto& col = cache[static_cast<size_t>(i)];
    while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * subst[static_cast<size_t>(i)]);
    return col[static_cast<size_t>(e)];
  };
  SparsePoly out(n);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<size_t>(i)] > 0) term = term * power(i, e[static_cast<size_t>(i)]);
    out = out + term;
  }
  return out;
}

}  // namespace

SparsePoly poly_shift(const SparsePoly& p, const Weight& sigma) {
  int n = p.nvars();
  std::vector<SparsePoly> subst;
  for (int i = 0; i < n; ++i) {
    SparsePoly s = SparsePoly::variable(n, i);
    if (sigma.coords[static_cast<size_t>(i)] != 0)
      s = s + SparsePoly::constant(n, sigma.coords[static_cast<size_t>(i)]);
    subst.push_back(std::move(s));
  }
  return substitute_all(p, subst);
}

SparsePoly poly_dot_substitute(const SparsePoly& p, const RootSystem& rs, const WeylElement& w) {
  int n = p.nvars();
  if (n != rs.rank()) throw DomainError("polynomial arity does not match the rank");
  std::vector<SparsePoly> subst;
  for (int i = 0; i < n; ++i) {
    // (w . lambda)_i = sum_j M[i][j] lambda_j + (sum_j M[i][j] - 1)
    SparsePoly s(n);
    long rowsum = 0;
    for (int j = 0; j < n; ++j) {
      rowsum += w.at(i, j);
      if (w.at(i, j) != 0) s = s + Rat(w.at(i, j)) * SparsePoly::variable(n, j);
    }
    if (rowsum != 1) s = s + SparsePoly::constant(n, Rat(rowsum - 1));
    subst.push_back(std::move(s));
  }
  return substitute_all(p, subst);
}

std::pair<SparsePoly, SparsePoly> fr_expand(const FactoredRational& a, int nvars) {
  SparsePoly num = SparsePoly::constant(nvars, a.constant());
  SparsePoly den = SparsePoly::constant(nvars, Rat(1));
  if (a.is_zero()) return {SparsePoly(nvars), den};
  for (const auto& [f, e] : a.factors()) {
    SparsePoly lin = SparsePoly::linear(f.coeffs, f.shift);
    for (long k = 0; k < std::labs(e); ++k) {
      if (e > 0)
        num = num * lin;
      else
        den = den * lin;
    }
  }
  return {num, den};
}

SparsePoly convolve(const WeightMultiset& multiset, const SparsePoly& p) {
  SparsePoly out(p.nvars());
  for (const auto& [mu, m] : multiset.entries) out = out + Rat(m) * poly_shift(p, mu);
  return out;
}

SparsePoly sym(const RootSystem& rs, const SparsePoly& s) {
  SparsePoly out = SparsePoly::constant(s.nvars(), Rat(1));
  for (const auto& w : rs.weyl_group()) out = out * poly_dot_substitute(s, rs, w);
  return out;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string root_name(const RootSystem& rs, size_t idx, FormStyle style) {
  const Root& alpha = rs.positive_root(idx);
  if (rs.rank() == 1) return style == FormStyle::Latex ? "\\alpha" : "α";
  std::string s;
  bool first = true;
  for (int i = 0; i < rs.rank(); ++i) {
    long c = alpha.root_coords[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) s += "+";
    if (c != 1) s += std::to_string(c);
    s += (style == FormStyle::Latex ? "\\alpha_" + std::to_string(i + 1) : "α" + std::to_string(i + 1));
    first = false;
  }
  return s;
}

std::string shift_suffix(const Rat& q) {
  if (q == 0) return "";
  if (q > 0) return " + " + rat_to_string(q);
  return " - " + rat_to_string(-q);
}

}  // namespace

std::string form_to_string(const LinearForm& f, const RootSystem* rs, FormStyle style) {
  if (rs) {
    const auto& roots = rs->positive_roots();
    for (size_t k = 0; k < roots.size(); ++k) {
      bool match = true;
      for (size_t i = 0; i < f.coeffs.size(); ++i)
        if (f.coeffs[i] != roots[k].coroot_coords[i]) {
          match = false;
          break;
        }
      if (match) {
        if (style == FormStyle::Latex)
          return "\\langle\\tau," + root_name(*rs, k, style) + "^{\\vee}\\rangle" + shift_suffix(f.shift);
        return "⟨τ," + root_name(*rs, k, style) + "∨⟩" + shift_suffix(f.shift);
      }
    }
  }
  // generic linear combination in t1..tr (or t for rank one)
  std::string s;
  bool first = true;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    long c = f.coeffs[i];
    if (c == 0) continue;
    std::string var = f.coeffs.size() == 1 ? "t" : "t" + std::to_string(i + 1);
    if (first) {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c) + (style == FormStyle::Latex ? " " : "");
    } else {
      s += c > 0 ? " + " : " - ";
      if (std::labs(c) != 1) s += std::to_string(std::labs(c));
    }
    s += var;
    first = false;
  }
  if (first) return rat_to_string(f.shift);
  return s + shift_suffix(f.shift);
}

std::string fr_to_string(const FactoredRational& a, const RootSystem* rs, FormStyle style) {
  if (a.is_zero()) return "0";
  std::vector<std::string> num, den;
  for (const auto& [f, e] : a.factors()) {
    std::string base = form_to_string(f, rs, style);
    long n = std::labs(e);
    bool bare = f.shift == 0 && n == 1 && e > 0;
    std::string piece = bare ? base : "(" + base + ")";
    if (n != 1) piece += "^" + std::to_string(n);
    (e > 0 ? num : den).push_back(piece);
  }
  std::string top;
  if (a.constant() != 1 || num.empty()) top = rat_to_string(a.constant());
  for (const auto& p : num) {
    if (!top.empty()) top += (style == FormStyle::Latex ? " " : "·");
    top += p;
  }
  if (den.empty()) return top;
  std::string bottom;
  for (const auto& p : den) {
    if (!bottom.empty()) bottom += (style == FormStyle::Latex ? " " : "·");
    bottom += p;
  }
  if (style == FormStyle::Latex) return "\\frac{" + top + "}{" + bottom + "}";
  return top + " / " + (den.size() > 1 ? "[" + bottom + "]" : bottom);
}

std::string poly_to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool mono = false;
    std::string vars;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (mono) vars += " ";
      vars += e.size() == 1 ? "t" : "t" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
      mono = true;
    }
    if (!mono) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << " ";
      os << vars;
    }
    first = false;
  }
  return os.str();
}

}  // namespace translatio
