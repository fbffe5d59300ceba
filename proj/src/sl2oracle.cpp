#include "translatio/sl2oracle.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "translatio/errors.hpp"

namespace translatio::sl2 {

// ---------------------------------------------------------------------------
// Poly1

Poly1 Poly1::constant(const Rat& x) {
  Poly1 p;
  if (x != 0) p.c = {x};
  return p;
}

Poly1 Poly1::affine(const Rat& a, const Rat& b) {
  Poly1 p;
  p.c = {b, a};
  p.normalize();
  return p;
}

void Poly1::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  Poly1 r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
  Poly1 r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  Poly1 r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

Poly1 operator*(const Rat& s, const Poly1& a) {
  if (s == 0) return Poly1();
  Poly1 r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

std::pair<Poly1, Poly1> poly1_divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  Poly1 rem = a, quot;
  if (a.degree() >= b.degree()) quot.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat f = rem.leading() / b.leading();
    quot.c[static_cast<size_t>(shift)] += f;
    for (size_t i = 0; i < b.c.size(); ++i) rem.c[static_cast<size_t>(shift) + i] -= f * b.c[i];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

Poly1 poly1_gcd(Poly1 a, Poly1 b) {
  // keep the remainders monic; unnormalized Euclid blows up coefficient
  // sizes exponentially along the remainder sequence
  auto monic = [](Poly1& p) {
    if (!p.is_zero() && p.leading() != 1) p = (Rat(1) / p.leading()) * p;
  };
  monic(a);
  monic(b);
  while (!b.is_zero()) {
    auto [q, r] = poly1_divmod(a, b);
    monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string Poly1::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat a = c[static_cast<size_t>(i)];
    if (a == 0) continue;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a);
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc1

RatFunc1::RatFunc1(Poly1 n, Poly1 d) {
  if (d.is_zero()) throw ArithmeticError("zero denominator");
  if (n.is_zero()) {
    num = Poly1();
    den = Poly1::constant(Rat(1));
    return;
  }
  Poly1 g = poly1_gcd(n, d);
  if (g.degree() > 0) {
    n = poly1_divmod(n, g).first;
    d = poly1_divmod(d, g).first;
  }
  Rat lead = d.leading();
  num = (Rat(1) / lead) * n;
  den = (Rat(1) / lead) * d;
}

RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b) {
  return RatFunc1(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b) {
  return RatFunc1(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.num * b.num, a.den * b.den); }

RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
  return RatFunc1(a.num * b.den, a.den * b.num);
}

std::string RatFunc1::to_string() const {
  if (is_polynomial()) return num.to_string();
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

RatFunc1 casimir_eigenvalue(const Poly1& lambda) {
  return RatFunc1::from_poly(lambda + Rat(1, 2) * (lambda * lambda));
}

// ---------------------------------------------------------------------------
// matrices over Q(t)

RMat RMat::identity(int n) {
  RMat m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc1::constant(Rat(1));
  return m;
}

RMat RMat::zero(int n) {
  RMat m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, RatFunc1());
  return m;
}

RMat operator*(const RMat& x, const RMat& y) {
  RMat r = RMat::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// tensor spaces

namespace {

void accumulate(TVec& out, const BasisKey& key, const RatFunc1& c) {
  if (c.is_zero()) return;
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

TVec apply_e(const TensorSpace& sp, const TVec& v) {
  TVec out;
  size_t nf = sp.reps.size();
  for (const auto& [key, c] : v) {
    for (size_t i = 0; i < nf; ++i) {
      int j = key[i];
      if (j == 0) continue;  // e u_0 = 0
      BasisKey k2 = key;
      k2[i] = j - 1;
      accumulate(out, k2, RatFunc1::constant(Rat(sp.reps[i] + 1 - j)) * c);
    }
    if (sp.has_verma) {
      int j = key[nf];
      if (j > 0) {
        BasisKey k2 = key;
        k2[nf] = j - 1;
        // e f^j v = j (lambda - j + 1) f^{j-1} v
        RatFunc1 coef = RatFunc1::from_poly(Rat(j) * (sp.lambda + Poly1::constant(Rat(1 - j))));
        accumulate(out, k2, coef * c);
      }
    }
  }
  return out;
}

TVec apply_f(const TensorSpace& sp, const TVec& v) {
  TVec out;
  size_t nf = sp.reps.size();
  for (const auto& [key, c] : v) {
    for (size_t i = 0; i < nf; ++i) {
      int j = key[i];
      if (j >= sp.reps[i]) continue;  // f u_N = 0
      BasisKey k2 = key;
      k2[i] = j + 1;
      accumulate(out, k2, RatFunc1::constant(Rat(j + 1)) * c);
    }
    if (sp.has_verma) {
      int j = key[nf];
      if (j + 1 > sp.max_fpow) throw ResourceError("Verma f-degree guard exceeded (internal)");
      BasisKey k2 = key;
      k2[nf] = j + 1;
      accumulate(out, k2, c);
    }
  }
  return out;
}

TVec apply_h(const TensorSpace& sp, const TVec& v) {
  TVec out;
  size_t nf = sp.reps.size();
  for (const auto& [key, c] : v) {
    Poly1 weight = Poly1();
    long finite = 0;
    for (size_t i = 0; i < nf; ++i) finite += sp.reps[i] - 2 * key[i];
    if (sp.has_verma) weight = sp.lambda + Poly1::constant(Rat(finite - 2 * key[nf]));
    else weight = Poly1::constant(Rat(finite));
    accumulate(out, key, RatFunc1::from_poly(weight) * c);
  }
  return out;
}

TVec apply_casimir(const TensorSpace& sp, const TVec& v) {
  // Omega = ef + fe + h^2/2 = 2 fe + h + h^2/2
  TVec fe = apply_f(sp, apply_e(sp, v));
  TVec h = apply_h(sp, v);
  TVec hh = apply_h(sp, h);
  TVec out = scale(RatFunc1::constant(Rat(2)), fe);
  out = add(out, h);
  out = add(out, scale(RatFunc1::constant(Rat(1, 2)), hh));
  return out;
}

TVec add(const TVec& a, const TVec& b) {
  TVec out = a;
  for (const auto& [k, c] : b) accumulate(out, k, c);
  return out;
}

TVec scale(const RatFunc1& s, const TVec& v) {
  TVec out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : v) out.emplace(k, s * c);
  return out;
}

RMat casimir_matrix(const TensorSpace& sp, const std::vector<BasisKey>& basis) {
  std::map<BasisKey, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  RMat omega = RMat::zero(static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    TVec v{{basis[col], RatFunc1::constant(Rat(1))}};
    TVec image = apply_casimir(sp, v);
    for (const auto& [k, c] : image) {
      auto it = index.find(k);
      if (it == index.end()) throw DomainError("Casimir leaves the declared weight space (internal)");
      omega.at(it->second, static_cast<int>(col)) = c;
    }
  }
  return omega;
}

RMat spectral_projector(const RMat& omega, const std::vector<RatFunc1>& eigs, const RatFunc1& target) {
  for (size_t i = 0; i < eigs.size(); ++i)
    for (size_t j = i + 1; j < eigs.size(); ++j)
      if (eigs[i] == eigs[j]) throw DomainError("coincident symbolic eigenvalues (internal)");
  int ti = -1;
  for (size_t i = 0; i < eigs.size(); ++i)
    if (eigs[i] == target) ti = static_cast<int>(i);
  if (ti < 0) return RMat::zero(omega.n);
  RMat p = RMat::identity(omega.n);
  RatFunc1 denom = RatFunc1::constant(Rat(1));
  for (size_t i = 0; i < eigs.size(); ++i) {
    if (static_cast<int>(i) == ti) continue;
    RMat factor = omega;
    for (int d = 0; d < omega.n; ++d) factor.at(d, d) = factor.at(d, d) - eigs[i];
    p = p * factor;
    denom = denom * (eigs[static_cast<size_t>(ti)] - eigs[i]);
  }
  RatFunc1 inv = RatFunc1::constant(Rat(1)) / denom;
  for (auto& x : p.a) x = x * inv;
  return p;
}

// ---------------------------------------------------------------------------
// single layers

namespace {

int ix(int n, int w) {
  if ((n - w) % 2 != 0 || w > n || w < -n) throw DomainError("not a weight of E(" + std::to_string(n) + ")");
  return (n - w) / 2;
}

}  // namespace

std::vector<BasisKey> single_layer_basis(int n, int k) {
  std::vector<BasisKey> basis;
  int jmax = (n - k) / 2;
  for (int j = 0; j <= jmax; ++j) basis.push_back({ix(n, k + 2 * j), j});
  return basis;
}

namespace {

// Projector onto the target central character on the (lambda + k)-weight
// space of E(n) ox M(lambda).
RMat layer_projector(int n, const Poly1& lambda, int k, const RatFunc1& target) {
  TensorSpace sp{{n}, true, lambda};
  auto basis = single_layer_basis(n, k);
  RMat omega = casimir_matrix(sp, basis);
  std::vector<RatFunc1> eigs;
  for (int j = 0; j <= (n - k) / 2; ++j)
    eigs.push_back(casimir_eigenvalue(lambda + Poly1::constant(Rat(k + 2 * j))));
  return spectral_projector(omega, eigs, target);
}

}  // namespace

std::vector<RatFunc1> project_extremal(int n, const Poly1& lambda, int k) {
  if (k != n && k != -n) throw DomainError("project_extremal needs an extremal weight");
  if (k == n) return {RatFunc1::constant(Rat(1))};
  RMat p = layer_projector(n, lambda, k, casimir_eigenvalue(lambda + Poly1::constant(Rat(k))));
  std::vector<RatFunc1> out;
  for (int j = 0; j < p.n; ++j) out.push_back(p.at(j, 0));
  return out;
}

std::vector<RatFunc1> f_nu_vector(int n, int sign) {
  if (n < 0) throw DomainError("f_nu_vector needs n >= 0");
  Poly1 tau = Poly1::affine(Rat(1), Rat(0));
  return project_extremal(n, tau, sign >= 0 ? n : -n);
}

bool verify_pole_theorem(int n) {
  if (n < 0) throw DomainError("verify_pole_theorem needs n >= 0");
  auto f = f_nu_vector(n, -1);
  // delta for nu = -n: prod_{i=0}^{n-1} (t + 1 - i)
  Poly1 delta = Poly1::constant(Rat(1));
  for (int i = 0; i < n; ++i) delta = delta * Poly1::affine(Rat(1), Rat(1 - i));
  Poly1 gcd_acc;
  for (const auto& coord : f) {
    RatFunc1 g = RatFunc1::from_poly(delta) * coord;
    if (!g.is_polynomial()) return false;  // pole not cancelled by delta
    gcd_acc = poly1_gcd(gcd_acc, g.num);
  }
  // non-vanishing away from codimension >= 2: in rank one, a constant gcd
  return !gcd_acc.is_zero() && gcd_acc.degree() == 0;
}

// ---------------------------------------------------------------------------
// Weyl representative on E(N)

namespace {

using QMat = std::vector<std::vector<Rat>>;

QMat qmat_zero(int n) { return QMat(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0))); }

QMat qmat_identity(int n) {
  QMat m = qmat_zero(n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  int n = static_cast<int>(a.size());
  QMat r = qmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return r;
}

QMat qmat_exp_nilpotent(const QMat& m) {
  int n = static_cast<int>(m.size());
  QMat sum = qmat_identity(n);
  QMat power = qmat_identity(n);
  Rat fact(1);
  for (int k = 1; k <= n; ++k) {
    power = qmat_mul(power, m);
    fact *= k;
    bool zero = true;
    for (auto& row : power)
      for (auto& x : row)
        if (x != 0) zero = false;
    if (zero) break;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sum[static_cast<size_t>(i)][static_cast<size_t>(j)] += power[static_cast<size_t>(i)][static_cast<size_t>(j)] / fact;
  }
  return sum;
}

}  // namespace

std::vector<std::vector<Rat>> sl2_weyl_rep(int n) {
  int d = n + 1;
  QMat e = qmat_zero(d), f = qmat_zero(d);
  for (int j = 1; j <= n; ++j) e[static_cast<size_t>(j - 1)][static_cast<size_t>(j)] = Rat(n + 1 - j);
  for (int j = 0; j < n; ++j) f[static_cast<size_t>(j + 1)][static_cast<size_t>(j)] = Rat(j + 1);
  QMat negf = f;
  for (auto& row : negf)
    for (auto& x : row) x = -x;
  QMat s = qmat_mul(qmat_mul(qmat_exp_nilpotent(e), qmat_exp_nilpotent(negf)), qmat_exp_nilpotent(e));
  // integrality and anti-diagonal shape are basis facts; check them
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Rat& x = s[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!is_integer(x)) throw DomainError("Weyl representative not integral (internal)");
      if (i + j != n && x != 0) throw DomainError("Weyl representative not anti-diagonal (internal)");
    }
  return s;
}

// ---------------------------------------------------------------------------
// Clebsch-Gordan projection E(|m|) ox E(|n|) ->> E(|m + n|)

namespace {

// phi[(b,a)] = coordinates over u^{(L)}; weight-preserving, multiplicity one.
struct PhiMap {
  int m, n, L;
  std::map<std::pair<int, int>, std::vector<RatFunc1>> columns;
};

std::vector<BasisKey> pair_weight_basis(int m, int n, int w) {
  std::vector<BasisKey> basis;
  for (int b = 0; b <= m; ++b)
    for (int a = 0; a <= n; ++a)
      if ((m - 2 * b) + (n - 2 * a) == w) basis.push_back({b, a});
  return basis;
}

PhiMap build_phi_L(int m, int n, int L) {
  PhiMap phi;
  phi.m = m;
  phi.n = n;
  phi.L = L;
  TensorSpace sp{{m, n}, false, Poly1()};

  // highest weight vector of the E(L) component: kernel of e on the weight-L
  // space (one-dimensional by multiplicity one)
  auto topbasis = pair_weight_basis(m, n, L);
  if (topbasis.empty()) throw DomainError("empty top weight space (internal)");
  // rows: image basis at weight L+2; columns: topbasis
  auto upbasis = pair_weight_basis(m, n, L + 2);
  std::map<BasisKey, int> upindex;
  for (size_t i = 0; i < upbasis.size(); ++i) upindex[upbasis[i]] = static_cast<int>(i);
  // rational nullspace by Gaussian elimination
  size_t rows = upbasis.size(), cols = topbasis.size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
  for (size_t c = 0; c < cols; ++c) {
    TVec v{{topbasis[c], RatFunc1::constant(Rat(1))}};
    for (const auto& [k, coef] : apply_e(sp, v)) {
      if (!coef.is_polynomial() || coef.num.degree() > 0) throw DomainError("non-constant CG entry (internal)");
      a[static_cast<size_t>(upindex.at(k))][c] = coef.num.is_zero() ? Rat(0) : coef.num.c[0];
    }
  }
  // eliminate
  std::vector<int> pivot_of_col(cols, -1);
  size_t prow = 0;
  for (size_t col = 0; col < cols && prow < rows; ++col) {
    size_t piv = rows;
    for (size_t i = prow; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[prow], a[piv]);
    Rat d = a[prow][col];
    for (size_t j = 0; j < cols; ++j) a[prow][j] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || a[i][col] == 0) continue;
      Rat fscale = a[i][col];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= fscale * a[prow][j];
    }
    pivot_of_col[col] = static_cast<int>(prow);
    ++prow;
  }
  // one free column expected
  int free_col = -1;
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] < 0) {
      if (free_col >= 0) throw DomainError("CG multiplicity is not one (internal)");
      free_col = static_cast<int>(col);
    }
  if (free_col < 0) throw DomainError("no highest weight vector found (internal)");
  std::vector<Rat> xi(cols, Rat(0));
  xi[static_cast<size_t>(free_col)] = 1;
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) xi[col] = -a[static_cast<size_t>(pivot_of_col[col])][static_cast<size_t>(free_col)];

  TVec hw;
  for (size_t c = 0; c < cols; ++c)
    if (xi[c] != 0) hw.emplace(topbasis[c], RatFunc1::constant(xi[c]));

  // iota_j = f^j hw / j!; these are the images of u^{(L)}_j
  std::vector<TVec> iota{hw};
  for (int j = 1; j <= L; ++j) iota.push_back(apply_f(sp, iota.back()));
  Rat acc(1);
  for (int j = 1; j <= L; ++j) {
    acc *= j;
    iota[static_cast<size_t>(j)] = scale(RatFunc1::constant(Rat(1) / acc), iota[static_cast<size_t>(j)]);
  }

  // distinct Casimir eigenvalues on the pair tensor
  int kmin = std::abs(m - n);
  int kmax = m + n;
  auto chi_const = [](int K) { return casimir_eigenvalue(Poly1::constant(Rat(K))); };

  for (int w = m + n; w >= -(m + n); w -= 2) {
    auto basis = pair_weight_basis(m, n, w);
    if (basis.empty()) continue;
    if (std::abs(w) > L) {
      // weight spaces outside E(L) are annihilated by phi
      for (const auto& key : basis)
        phi.columns.emplace(std::make_pair(key[0], key[1]), std::vector<RatFunc1>(static_cast<size_t>(L) + 1));
      continue;
    }
    RMat omega = casimir_matrix(sp, basis);
    std::vector<RatFunc1> eigs;
    for (int K = kmax; K >= kmin && K >= std::abs(w); K -= 2) eigs.push_back(chi_const(K));
    RMat p = spectral_projector(omega, eigs, chi_const(L));
    int j = (L - w) / 2;
    const TVec& image_basis = iota[static_cast<size_t>(j)];
    // pivot coordinate of iota_j
    BasisKey pivot_key;
    RatFunc1 pivot_val;
    for (const auto& [k, c] : image_basis) {
      pivot_key = k;
      pivot_val = c;
      break;
    }
    if (image_basis.empty()) throw DomainError("empty CG image basis vector (internal)");
    std::map<BasisKey, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    for (size_t c = 0; c < basis.size(); ++c) {
      // p * e_c, then divide by iota_j on the pivot coordinate
      TVec img;
      for (size_t r2 = 0; r2 < basis.size(); ++r2)
        if (!p.at(static_cast<int>(r2), static_cast<int>(c)).is_zero())
          img.emplace(basis[r2], p.at(static_cast<int>(r2), static_cast<int>(c)));
      RatFunc1 zeta;
      auto it = img.find(pivot_key);
      if (it != img.end()) zeta = it->second / pivot_val;
      // exactness: img must equal zeta * iota_j
      TVec check = scale(zeta, image_basis);
      if (!(check == img)) throw DomainError("CG projection not proportional to the embedded basis (internal)");
      std::vector<RatFunc1> column(static_cast<size_t>(L) + 1);
      if (!zeta.is_zero()) column[static_cast<size_t>(j)] = zeta;
      auto key = std::make_pair(basis[c][0], basis[c][1]);
      auto existing = phi.columns.find(key);
      if (existing == phi.columns.end()) phi.columns.emplace(key, std::move(column));
      else if (!zeta.is_zero()) existing->second[static_cast<size_t>(j)] = zeta;
    }
  }
  return phi;
}

const PhiMap& cached_phi(int m, int n, int L) {
  static std::map<std::tuple<int, int, int>, PhiMap> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(m, n, L);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_phi_L(m, n, L)).first;
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// delta_direct

RatFunc1 delta_direct(int m, int n, const OracleScalars& scalars) {
  int mA = std::abs(m), nA = std::abs(n), L = std::abs(m + n);
  const PhiMap& phi = cached_phi(mA, nA, L);
  auto weyl_m = sl2_weyl_rep(mA);
  auto weyl_n = sl2_weyl_rep(nA);
  auto weyl_L = sl2_weyl_rep(L);

  auto compute_c = [&](bool at_s) -> RatFunc1 {
    Poly1 lam = at_s ? Poly1::affine(Rat(-1), Rat(-2)) : Poly1::affine(Rat(1), Rat(0));
    int ynu = at_s ? -n : n;
    int ymu = at_s ? -m : m;
    int ynm = at_s ? -(n + m) : (n + m);

    // scalars from the Weyl representative on the chosen extremal vectors
    Rat sig_n = at_s ? weyl_n[static_cast<size_t>(ix(nA, -n))][static_cast<size_t>(ix(nA, n))] : Rat(1);
    Rat sig_m = at_s ? weyl_m[static_cast<size_t>(ix(mA, -m))][static_cast<size_t>(ix(mA, m))] : Rat(1);
    Rat sig_L = at_s ? weyl_L[static_cast<size_t>(ix(L, -(n + m)))][static_cast<size_t>(ix(L, n + m))] : Rat(1);

    // inner projection: w = pr(u_{ynu} ox v_lam) in E(nA) ox M(lam)
    auto g = project_extremal(nA, lam, ynu);
    TensorSpace inner_sp{{nA}, true, lam};
    TVec w;
    for (size_t j = 0; j < g.size(); ++j)
      if (!g[j].is_zero()) w.emplace(BasisKey{ix(nA, ynu + 2 * static_cast<int>(j)), static_cast<int>(j)}, g[j]);

    // outer projection coordinates over the abstract M(lam + ynu)
    Poly1 lam2 = lam + Poly1::constant(Rat(ynu));
    auto h = project_extremal(mA, lam2, ymu);

    // f-power images of w inside E(nA) ox M(lam)
    std::vector<TVec> fw{w};
    for (size_t i = 1; i < h.size(); ++i) fw.push_back(apply_f(inner_sp, fw.back()));

    // v2 in E(mA) ox E(nA) ox M(lam)
    TVec v2;
    for (size_t i = 0; i < h.size(); ++i) {
      if (h[i].is_zero()) continue;
      int b = ix(mA, ymu + 2 * static_cast<int>(i));
      for (const auto& [k, c] : fw[i]) {
        BasisKey key{b, k[0], k[1]};
        auto it = v2.find(key);
        RatFunc1 term = h[i] * c;
        if (it == v2.end()) v2.emplace(std::move(key), term);
        else it->second = it->second + term;
      }
    }

    // (phi ox id) v2 in E(L) ox M(lam)
    TVec r;
    for (const auto& [k, c] : v2) {
      auto col = phi.columns.find(std::make_pair(k[0], k[1]));
      if (col == phi.columns.end()) throw DomainError("missing CG column (internal)");
      for (int cc = 0; cc <= L; ++cc) {
        const RatFunc1& z = col->second[static_cast<size_t>(cc)];
        if (z.is_zero()) continue;
        accumulate(r, BasisKey{cc, k[2]}, z * c);
      }
    }
    Rat overall = sig_m * sig_n * scalars.e_mu * scalars.e_nu * scalars.phi;
    r = scale(RatFunc1::constant(overall), r);

    // v1 = pr(u_{ynm} ox v_lam) in E(L) ox M(lam), scaled
    auto g1 = project_extremal(L, lam, ynm);
    TVec v1;
    for (size_t j = 0; j < g1.size(); ++j)
      if (!g1[j].is_zero())
        v1.emplace(BasisKey{ix(L, ynm + 2 * static_cast<int>(j)), static_cast<int>(j)},
                   RatFunc1::constant(sig_L * scalars.e_nm) * g1[j]);

    if (v1.empty()) throw DomainError("vanishing reference projection (internal)");
    auto pivot = v1.begin();
    auto rit = r.find(pivot->first);
    RatFunc1 cy = rit == r.end() ? RatFunc1() : rit->second / pivot->second;
    // exact proportionality across every coordinate
    if (!(scale(cy, v1) == r)) throw DomainError("projection is not a Verma-top multiple (internal)");
    return cy;
  };

  RatFunc1 ce = compute_c(false);
  if (ce.is_zero()) throw DomainError("c_e vanishes identically; genericity violated (internal)");
  RatFunc1 cs = compute_c(true);
  return cs / ce;
}

RatFunc1 trace_direct(int n, bool at_w0) {
  if (n < 0) throw DomainError("trace_direct needs n >= 0");
  Poly1 lam = at_w0 ? Poly1::affine(Rat(-1), Rat(-2)) : Poly1::affine(Rat(1), Rat(0));
  RatFunc1 target = casimir_eigenvalue(Poly1::affine(Rat(1), Rat(n)));  // chi(tau + n)
  RatFunc1 total;
  for (int k = n; k >= -n; k -= 2) {
    RMat p = layer_projector(n, lam, k, target);
    total = total + p.at(0, 0);
  }
  return total;
}

RatFunc1 to_ratfunc(const FactoredRational& fr) {
  Poly1 num = Poly1::constant(fr.constant());
  Poly1 den = Poly1::constant(Rat(1));
  for (const auto& [form, e] : fr.factors()) {
    if (form.coeffs.size() != 1) throw DomainError("to_ratfunc needs a rank-one factored rational");
    Poly1 lin = Poly1::affine(Rat(form.coeffs[0]), form.shift);
    for (long k = 0; k < (e > 0 ? e : -e); ++k) {
      if (e > 0) num = num * lin;
      else den = den * lin;
    }
  }
  return RatFunc1(num, den);
}

}  // namespace translatio::sl2
