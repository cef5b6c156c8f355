#pragma once

// Chow ring of G/P on the Schubert basis indexed by W^P, divisor
// multiplication by the Chevalley formula, and exact degrees and slopes.
//
// Homology convention: the class of X_w has dimension l(w). The fundamental
// class is the longest element of W^P and the point class is the identity.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "parastab/bigint.hpp"
#include "parastab/parabolic.hpp"

namespace parastab {

struct HasseEdge {
  std::size_t from;   // w
  std::size_t to;     // w s_gamma, one length lower
  std::size_t gamma;  // positive root index
};

class ChowBasis {
 public:
  /// Builds W^P and the labelled Hasse edges. Throws ResourceError past `cap`.
  static ChowBasis build(std::shared_ptr<const ParabolicData> pd, std::size_t cap = kDefaultCap);
  /// Assembles a basis from stored data (the on-disk cache). Validates grading.
  static ChowBasis from_parts(std::shared_ptr<const ParabolicData> pd,
                              std::vector<std::vector<int>> words, std::vector<int> lengths,
                              std::vector<HasseEdge> edges);

  const ParabolicData& parabolic() const { return *pd_; }
  std::shared_ptr<const ParabolicData> parabolic_ptr() const { return pd_; }

  std::size_t size() const { return lengths_.size(); }
  int length(std::size_t i) const { return lengths_[i]; }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  int dimension() const { return lengths_.empty() ? 0 : lengths_.back(); }
  std::size_t point() const { return 0; }
  std::size_t fundamental() const { return size() - 1; }
  /// Number of basis elements in each grade 0..dimension().
  std::vector<std::size_t> grade_sizes() const;

  const std::vector<HasseEdge>& edges() const { return edges_; }
  /// Edges leaving element w (downwards).
  std::pair<const HasseEdge*, const HasseEdge*> edges_from(std::size_t w) const;

  /// Grade-one element s_i for a crossed simple index i.
  std::size_t simple_reflection(int i) const;

 private:
  ChowBasis() = default;
  void index_edges();

  std::shared_ptr<const ParabolicData> pd_;
  std::vector<std::vector<int>> words_;  // reduced words, sorted by length
  std::vector<int> lengths_;
  std::vector<HasseEdge> edges_;         // sorted by `from`
  std::vector<std::size_t> edge_begin_;  // CSR offsets, size() + 1
};

/// A cycle class: integer coefficients on the Schubert basis.
class ChowClass {
 public:
  explicit ChowClass(std::size_t n) : coeffs_(n) {}
  static ChowClass basis_element(std::size_t n, std::size_t w, BigInt c = 1);

  std::size_t size() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t w) const { return coeffs_[w]; }
  BigInt& operator[](std::size_t w) { return coeffs_[w]; }
  bool is_zero() const;

  friend bool operator==(const ChowClass&, const ChowClass&) = default;
  ChowClass& operator+=(const ChowClass& other);

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients on the fundamental weights of the crossed simple roots, in
/// increasing index order.
struct Polarization {
  std::vector<int> coeffs;

  bool ample() const;
  Weight to_weight(const ParabolicData& pd) const;
  static Polarization from_weight(const ParabolicData& pd, const Weight& w);
  /// c1 of the full tangent bundle.
  static Polarization anticanonical(const ParabolicData& pd);

  friend bool operator==(const Polarization&, const Polarization&) = default;
  friend auto operator<=>(const Polarization&, const Polarization&) = default;
};

struct SlopeReport {
  BigInt degree;
  int rank = 0;
  Rational slope;
};

/// Chevalley formula: sum over edges (w -> w', gamma) of x(w) <lam, gamma^vee> [w'].
/// Throws InputError if lam pairs nonzero with a Levi coroot.
ChowClass multiply_by_divisor(const ChowBasis& cb, const ChowClass& x, const Weight& lam);

/// Class of pol^k applied to the fundamental class.
ChowClass power_of_divisor(const ChowBasis& cb, const Weight& pol, int k);

/// Coefficient of the point class in [G/P] . pol^(N-1) . c1. With
/// `require_ample` false any P-character is accepted as polarization.
BigInt degree(const ChowBasis& cb, const Weight& c1, const Polarization& pol,
              bool require_ample = true);

/// Memoizes the degrees of the crossed fundamental weights per polarization;
/// degree is linear in c1 so every later slope is a dot product. Thread-safe.
class DegreeEngine {
 public:
  explicit DegreeEngine(std::shared_ptr<const ChowBasis> cb) : cb_(std::move(cb)) {}

  const ChowBasis& basis() const { return *cb_; }
  /// d_i = deg of fw_i for each crossed i (in crossed order).
  std::vector<BigInt> generator_degrees(const Polarization& pol);
  BigInt degree(const Weight& c1, const Polarization& pol);
  SlopeReport slope(const SubmoduleCandidate& c, const Polarization& pol);

 private:
  std::shared_ptr<const ChowBasis> cb_;
  std::mutex mutex_;
  std::map<Polarization, std::vector<BigInt>> memo_;
};

/// Slope of M(I); throws InputError for empty I.
SlopeReport slope(const ChowBasis& cb, const SubmoduleCandidate& c, const Polarization& pol);

SlopeReport make_slope(BigInt degree, int rank);

}  // namespace parastab
