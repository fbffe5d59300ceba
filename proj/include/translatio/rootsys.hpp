#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "translatio/rational.hpp"

namespace translatio {

// A weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
// The integral lattice is Z^r in these coordinates and all coroot pairings
// are integer linear forms.
struct Weight {
  RatVec coords;

  Weight() = default;
  explicit Weight(RatVec c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_integral() const;
  bool is_dominant() const;
  bool is_zero() const;

  static Weight zero(int rank);

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a);
  friend Weight operator*(const Rat& c, const Weight& a);
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
};

// Strict weak order on coordinate vectors (lexicographic); fixes iteration
// order of all weight-keyed maps.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

std::string weight_to_string(const Weight& w);
Weight weight_from_string(const std::string& s);  // "1,-2/3,0"

// A root, carried in three coordinate systems at once: over the simple
// roots, its coroot over the simple coroots, and its pairings with the
// simple coroots (= weight coordinates).
struct Root {
  std::vector<long> root_coords;
  std::vector<long> coroot_coords;
  std::vector<long> weight_coords;

  bool operator==(const Root& o) const { return root_coords == o.root_coords; }
};

// Weyl group element, canonicalized by its action matrix on weight
// coordinates (row-major, integral).  Words are recovered on demand from
// the owning RootSystem.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(int rank, std::vector<long> mat) : rank_(rank), mat_(std::move(mat)) {}

  static WeylElement identity(int rank);

  int rank() const { return rank_; }
  const std::vector<long>& matrix() const { return mat_; }
  long at(int i, int j) const { return mat_[static_cast<size_t>(i) * rank_ + j]; }

  bool is_identity() const;
  // (a*b)(v) = a(b(v)); matrices multiply M_a * M_b.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement inverse() const;

  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

 private:
  int rank_ = 0;
  std::vector<long> mat_;
};

// Semisimple root system of type A-G, realized purely from its Cartan
// matrix (no Euclidean embedding): roots and coroots are integer coordinate
// vectors, weights live in Q^r, and every computation is exact.
class RootSystem {
 public:
  // label: A1..A9, B2.., C3.., D4.., E6, E7, E8, F4, G2.
  explicit RootSystem(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& positive_root(size_t i) const { return positive_roots_.at(i); }

  Weight rho() const;
  Rat pairing(const Weight& lambda, const Root& alpha) const;

  // --- Weyl group -------------------------------------------------------
  WeylElement simple_reflection(int i) const;
  WeylElement reflection(const Root& alpha) const;
  bool is_reflection(const WeylElement& w) const;
  Weight act(const WeylElement& w, const Weight& lambda) const;
  Weight dot_act(const WeylElement& w, const Weight& lambda) const;
  // Linear action on roots; returns the image as a root-lattice vector.
  std::vector<long> act_on_root(const WeylElement& w, const Root& alpha) const;
  bool root_is_negative(const std::vector<long>& root_coords) const;

  // Full enumeration by BFS over right multiplication; guarded by
  // group_bound().  Cached after the first call.
  const std::vector<WeylElement>& weyl_group() const;
  size_t weyl_order() const { return weyl_group().size(); }
  WeylElement longest_element() const;
  int length(const WeylElement& w) const;
  std::vector<int> reduced_word(const WeylElement& w) const;  // 0-based indices
  WeylElement element_from_word(const std::vector<int>& word) const;

  // --- order and lattices -------------------------------------------------
  // true iff b - a is a non-negative integer combination of simple roots.
  bool dominance_leq(const Weight& a, const Weight& b) const;
  // b - a expressed over the simple roots, if the difference is in the
  // rational span (always, for full-rank systems).
  RatVec to_root_coords(const Weight& diff) const;

  std::pair<std::vector<Root>, std::vector<WeylElement>> integral_weyl_group(const Weight& lambda) const;
  bool is_generic(const Weight& tau) const;

  // --- invariant bilinear form -------------------------------------------
  // (lambda, alpha) for a root alpha; normalization fixed by d_i = (alpha_i,alpha_i)/2
  // with d as computed from the symmetrizable Cartan matrix.
  Rat inner_with_root(const Weight& lambda, const Root& alpha) const;
  Rat inner(const Weight& a, const Weight& b) const;

  // Guard on |W| for the enumeration ops; default 10!, overridable by the
  // TRANSLATIO_GROUP_BOUND environment variable or set_group_bound.
  size_t group_bound() const { return group_bound_; }
  void set_group_bound(size_t b) { group_bound_ = b; }

  Weight weight_of_root(const Root& alpha) const;

 private:
  void build_roots();
  void build_symmetrizer();

  std::string label_;
  char series_ = 0;
  int rank_ = 0;
  std::vector<std::vector<long>> cartan_;   // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Root> positive_roots_;
  RatVec sym_d_;                                 // d_i = (alpha_i, alpha_i)/2, up to scale
  std::vector<RatVec> cartan_inv_;
  size_t group_bound_;

  mutable std::mutex group_mutex_;
  mutable std::optional<std::vector<WeylElement>> group_;
};

}  // namespace translatio
