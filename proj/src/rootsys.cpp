#include "translatio/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "translatio/errors.hpp"

namespace translatio {

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_integral() const {
  for (const auto& c : coords)
    if (!is_integer(c)) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (const auto& c : coords)
    if (c < 0) return false;
  return true;
}

bool Weight::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Weight Weight::zero(int rank) { return Weight(RatVec(static_cast<size_t>(rank), Rat(0))); }

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator*(const Rat& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
  if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
  for (size_t i = 0; i < a.coords.size(); ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string weight_to_string(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(w.coords[i]);
  }
  return s;
}

Weight weight_from_string(const std::string& s) {
  RatVec coords;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty weight coordinate in '" + s + "'");
    coords.push_back(rat_from_string(tok.substr(b, e - b + 1)));
  }
  if (coords.empty()) throw ConfigError("empty weight '" + s + "'");
  return Weight(std::move(coords));
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(int rank) {
  std::vector<long> m(static_cast<size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) m[static_cast<size_t>(i) * rank + i] = 1;
  return WeylElement(rank, std::move(m));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  int r = a.rank();
  std::vector<long> m(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) m[static_cast<size_t>(i) * r + j] += aik * b.at(k, j);
    }
  return WeylElement(r, std::move(m));
}

WeylElement WeylElement::inverse() const {
  // Integer matrix with determinant +-1; invert by exact Gaussian
  // elimination over Q and round back.
  int r = rank_;
  std::vector<RatVec> aug(static_cast<size_t>(r), RatVec(static_cast<size_t>(2 * r), Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rat(at(i, j));
    aug[i][static_cast<size_t>(r) + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int i = col; i < r; ++i)
      if (aug[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw DomainError("singular Weyl action matrix");
    std::swap(aug[col], aug[piv]);
    Rat d = aug[col][col];
    for (int j = 0; j < 2 * r; ++j) aug[col][j] /= d;
    for (int i = 0; i < r; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = 0; j < 2 * r; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<long> m(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[static_cast<size_t>(i) * r + j] = to_long(aug[i][static_cast<size_t>(r) + j]);
  return WeylElement(r, std::move(m));
}

// ---------------------------------------------------------------------------
// Cartan matrices

namespace {

std::vector<std::vector<long>> cartan_matrix(char series, int n) {
  auto a = std::vector<std::vector<long>>(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < upto; ++i) {
      a[i][i + 1] = -1;
      a[i + 1][i] = -1;
    }
  };
  switch (series) {
    case 'A':
      if (n < 1) throw ConfigError("A_n needs n >= 1");
      chain(n);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      if (n < 2) throw ConfigError("B_n needs n >= 2");
      chain(n);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 3) throw ConfigError("C_n needs n >= 3");
      chain(n);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw ConfigError("D_n needs n >= 4");
      chain(n - 1);
      a[n - 1][n - 1] = 2;
      a[n - 3][n - 1] = -1;
      a[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw ConfigError("E_n needs n in {6,7,8}");
      // Bourbaki numbering: node 2 attaches to node 4 of the chain 1-3-4-5-...
      chain(n);
      // undo the default chain neighbours of node 2 (index 1)
      a[0][1] = a[1][0] = 0;
      a[1][2] = a[2][1] = 0;
      a[0][2] = a[2][0] = -1;  // 1 - 3
      a[1][3] = a[3][1] = -1;  // 2 - 4
      break;
    }
    case 'F':
      if (n != 4) throw ConfigError("F_n needs n = 4");
      chain(4);
      a[1][2] = -2;  // <alpha_3, alpha_2^vee> = -2
      a[2][1] = -1;
      break;
    case 'G':
      if (n != 2) throw ConfigError("G_n needs n = 2");
      a[0][0] = a[1][1] = 2;
      a[0][1] = -3;  // <alpha_2, alpha_1^vee> = -3
      a[1][0] = -1;
      break;
    default:
      throw ConfigError(std::string("unknown series '") + series + "'");
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(const std::string& label) : label_(label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw ConfigError("bad type label '" + label + "'");
  series_ = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) throw ConfigError("bad type label '" + label + "'");
  rank_ = std::atoi(label.c_str() + 1);
  if (rank_ <= 0 || rank_ > 16) throw ConfigError("bad rank in label '" + label + "'");
  cartan_ = cartan_matrix(series_, rank_);

  group_bound_ = 3628800;  // 10!
  if (const char* env = std::getenv("TRANSLATIO_GROUP_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) group_bound_ = static_cast<size_t>(v);
  }

  build_roots();
  build_symmetrizer();

  // cartan inverse, exact
  int r = rank_;
  std::vector<RatVec> aug(static_cast<size_t>(r), RatVec(static_cast<size_t>(2 * r), Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rat(cartan_[i][j]);
    aug[i][static_cast<size_t>(r) + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int i = col; i < r; ++i)
      if (aug[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw ConfigError("degenerate Cartan matrix");
    std::swap(aug[col], aug[piv]);
    Rat d = aug[col][col];
    for (int j = 0; j < 2 * r; ++j) aug[col][j] /= d;
    for (int i = 0; i < r; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = 0; j < 2 * r; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  cartan_inv_.assign(static_cast<size_t>(r), RatVec(static_cast<size_t>(r), Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_inv_[i][j] = aug[i][static_cast<size_t>(r) + j];
}

void RootSystem::build_roots() {
  // Closure of the simple (root, coroot) pairs under all simple reflections:
  //   s_i on root coords:    c -> c - (A c)_i e_i
  //   s_i on coroot coords:  d -> d - (A^T d)_i e_i
  int r = rank_;
  std::set<std::vector<long>> seen;
  std::deque<std::pair<std::vector<long>, std::vector<long>>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<long> c(static_cast<size_t>(r), 0), d(static_cast<size_t>(r), 0);
    c[i] = 1;
    d[i] = 1;
    seen.insert(c);
    queue.emplace_back(c, d);
  }
  std::vector<std::pair<std::vector<long>, std::vector<long>>> all;
  while (!queue.empty()) {
    auto [c, d] = queue.front();
    queue.pop_front();
    all.emplace_back(c, d);
    for (int i = 0; i < r; ++i) {
      long pc = 0, pd = 0;
      for (int j = 0; j < r; ++j) {
        pc += cartan_[i][j] * c[j];
        pd += cartan_[j][i] * d[j];
      }
      auto c2 = c;
      auto d2 = d;
      c2[i] -= pc;
      d2[i] -= pd;
      if (seen.insert(c2).second) queue.emplace_back(c2, d2);
    }
  }
  for (auto& [c, d] : all) {
    bool pos = true;
    for (auto v : c)
      if (v < 0) {
        pos = false;
        break;
      }
    if (!pos) continue;
    Root root;
    root.root_coords = c;
    root.coroot_coords = d;
    root.weight_coords.assign(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) root.weight_coords[i] += cartan_[i][j] * c[j];
    positive_roots_.push_back(std::move(root));
  }
  // sort by height, so alpha_1..alpha_r lead the list in diagram order
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    long ha = 0, hb = 0;
    for (auto v : a.root_coords) ha += v;
    for (auto v : b.root_coords) hb += v;
    if (ha != hb) return ha < hb;
    return a.root_coords > b.root_coords;
  });
  if (2 * positive_roots_.size() != all.size())
    throw ConfigError("root closure is not symmetric for '" + label_ + "'");
}

void RootSystem::build_symmetrizer() {
  // d_i a_ij = d_j a_ji, propagated over the (connected) diagram.
  int r = rank_;
  sym_d_.assign(static_cast<size_t>(r), Rat(0));
  sym_d_[0] = 1;
  std::deque<int> queue{0};
  std::vector<bool> done(static_cast<size_t>(r), false);
  done[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      if (done[j] || cartan_[i][j] == 0 || i == j) continue;
      sym_d_[j] = sym_d_[i] * cartan_[i][j] / cartan_[j][i];
      done[j] = true;
      queue.push_back(j);
    }
  }
  for (int i = 0; i < r; ++i)
    if (!done[i]) throw ConfigError("disconnected diagram for '" + label_ + "'");
}

Weight RootSystem::rho() const { return Weight(RatVec(static_cast<size_t>(rank_), Rat(1))); }

Rat RootSystem::pairing(const Weight& lambda, const Root& alpha) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) acc += Rat(alpha.coroot_coords[i]) * lambda.coords[i];
  return acc;
}

WeylElement RootSystem::simple_reflection(int i) const {
  // (s_i lam)_j = lam_j - a_{ji} lam_i
  int r = rank_;
  auto w = WeylElement::identity(r);
  std::vector<long> m = w.matrix();
  for (int j = 0; j < r; ++j) m[static_cast<size_t>(j) * r + i] -= cartan_[j][i];
  return WeylElement(r, std::move(m));
}

WeylElement RootSystem::reflection(const Root& alpha) const {
  // lam -> lam - <lam, alpha^vee> alpha
  int r = rank_;
  auto id = WeylElement::identity(r);
  std::vector<long> m = id.matrix();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[static_cast<size_t>(i) * r + j] -= alpha.weight_coords[i] * alpha.coroot_coords[j];
  return WeylElement(r, std::move(m));
}

bool RootSystem::is_reflection(const WeylElement& w) const {
  for (const auto& alpha : positive_roots_)
    if (w == reflection(alpha)) return true;
  return false;
}

Weight RootSystem::act(const WeylElement& w, const Weight& lambda) const {
  RatVec out(static_cast<size_t>(rank_), Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.at(i, j) != 0) out[i] += Rat(w.at(i, j)) * lambda.coords[j];
  return Weight(std::move(out));
}

Weight RootSystem::dot_act(const WeylElement& w, const Weight& lambda) const {
  return act(w, lambda + rho()) - rho();
}

std::vector<long> RootSystem::act_on_root(const WeylElement& w, const Root& alpha) const {
  // Compute in weight coordinates, then convert back through A^{-1}.
  RatVec img(static_cast<size_t>(rank_), Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.at(i, j) != 0) img[i] += Rat(w.at(i, j)) * Rat(alpha.weight_coords[j]);
  std::vector<long> out(static_cast<size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    Rat acc(0);
    for (int j = 0; j < rank_; ++j) acc += cartan_inv_[i][j] * img[j];
    out[i] = to_long(acc);
  }
  return out;
}

bool RootSystem::root_is_negative(const std::vector<long>& rc) const {
  for (auto v : rc)
    if (v > 0) return false;
  return true;
}

namespace {

// classical group orders, used to refuse oversized enumerations up front
unsigned long classical_weyl_order(char series, int n) {
  auto fact = [](int k) {
    unsigned long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
  };
  switch (series) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1UL << n) * fact(n);
    case 'D': return (1UL << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840UL : n == 7 ? 2903040UL : 696729600UL;
    case 'F': return 1152UL;
    case 'G': return 12UL;
  }
  return 0;
}

}  // namespace

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  std::lock_guard<std::mutex> lock(group_mutex_);
  if (group_) return *group_;
  unsigned long expected = classical_weyl_order(series_, rank_);
  if (expected > group_bound_)
    throw ResourceError("Weyl group of " + label_ + " has order " + std::to_string(expected) +
                        ", above the enumeration bound " + std::to_string(group_bound_));
  std::vector<WeylElement> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simple_reflection(i));
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  auto e = WeylElement::identity(rank_);
  seen.insert(e);
  queue.push_back(e);
  std::vector<WeylElement> out;
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (const auto& s : gens) {
      WeylElement ws = w * s;
      if (seen.insert(ws).second) {
        if (seen.size() > group_bound_)
          throw ResourceError("Weyl group of " + label_ + " exceeds the enumeration bound " +
                              std::to_string(group_bound_));
        queue.push_back(ws);
      }
    }
  }
  group_ = std::move(out);
  return *group_;
}

int RootSystem::length(const WeylElement& w) const {
  int len = 0;
  for (const auto& alpha : positive_roots_)
    if (root_is_negative(act_on_root(w, alpha))) ++len;
  return len;
}

WeylElement RootSystem::longest_element() const {
  const auto& grp = weyl_group();
  int want = static_cast<int>(positive_roots_.size());
  for (const auto& w : grp)
    if (length(w) == want) return w;
  throw DomainError("no longest element found (internal)");
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  // Greedy descent: if w(alpha_i) < 0 then l(w s_i) = l(w) - 1, so the last
  // letter of a reduced word for w can be taken to be i.
  std::vector<int> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (int i = 0; i < rank_ && !found; ++i) {
      const Root& alpha = positive_roots_[static_cast<size_t>(i)];  // simple roots lead the list
      if (root_is_negative(act_on_root(cur, alpha))) {
        int idx = -1;
        for (int j = 0; j < rank_; ++j)
          if (alpha.root_coords[static_cast<size_t>(j)] == 1) idx = j;
        word.push_back(idx);
        cur = cur * simple_reflection(idx);
        found = true;
      }
    }
    if (!found) throw DomainError("descent failed; not a Weyl action matrix");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement RootSystem::element_from_word(const std::vector<int>& word) const {
  auto w = WeylElement::identity(rank_);
  for (int i : word) {
    if (i < 0 || i >= rank_) throw ConfigError("reflection index out of range: s" + std::to_string(i + 1));
    w = w * simple_reflection(i);
  }
  return w;
}

bool RootSystem::dominance_leq(const Weight& a, const Weight& b) const {
  RatVec c = to_root_coords(b - a);
  for (const auto& x : c)
    if (x < 0 || !is_integer(x)) return false;
  return true;
}

RatVec RootSystem::to_root_coords(const Weight& diff) const {
  RatVec out(static_cast<size_t>(rank_), Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_inv_[i][j] * diff.coords[j];
  return out;
}

std::pair<std::vector<Root>, std::vector<WeylElement>> RootSystem::integral_weyl_group(const Weight& lambda) const {
  std::vector<Root> roots;
  std::vector<WeylElement> gens;
  for (const auto& alpha : positive_roots_)
    if (is_integer(pairing(lambda, alpha))) {
      roots.push_back(alpha);
      gens.push_back(reflection(alpha));
    }
  // subgroup closure
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  auto e = WeylElement::identity(rank_);
  seen.insert(e);
  queue.push_back(e);
  std::vector<WeylElement> out;
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (const auto& s : gens) {
      WeylElement ws = w * s;
      if (seen.insert(ws).second) {
        if (seen.size() > group_bound_) throw ResourceError("integral Weyl group exceeds the enumeration bound");
        queue.push_back(ws);
      }
    }
  }
  return {roots, out};
}

bool RootSystem::is_generic(const Weight& tau) const {
  for (const auto& alpha : positive_roots_)
    if (is_integer(pairing(tau, alpha))) return false;
  return true;
}

Rat RootSystem::inner_with_root(const Weight& lambda, const Root& alpha) const {
  // (lambda, alpha) = sum_j c_j d_j lambda_j with c the root coordinates.
  Rat acc(0);
  for (int j = 0; j < rank_; ++j) acc += Rat(alpha.root_coords[j]) * sym_d_[j] * lambda.coords[j];
  return acc;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  RatVec c = to_root_coords(b);
  Rat acc(0);
  for (int j = 0; j < rank_; ++j) acc += c[j] * sym_d_[j] * a.coords[j];
  return acc;
}

Weight RootSystem::weight_of_root(const Root& alpha) const {
  RatVec c(static_cast<size_t>(rank_));
  for (int i = 0; i < rank_; ++i) c[i] = Rat(alpha.weight_coords[i]);
  return Weight(std::move(c));
}

}  // namespace translatio
