#pragma once

// Integral root data of the simple (reduced, crystallographic) root systems,
// Weyl group elements as reduced words, and minimal coset representatives.
//
// Numbering of simple roots follows the Bourbaki plates; see
// docs/conventions.md. Internally simple indices are 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parastab/bigint.hpp"
#include "parastab/errors.hpp"

namespace parastab {

using IntVec = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class SimpleType {
 public:
  /// Throws InputError unless (family, rank) names a simple root system.
  SimpleType(Family family, int rank);

  /// Accepts "A".."G" (case-insensitive).
  static SimpleType parse(const std::string& family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool simply_laced() const noexcept;
  std::string name() const;  // e.g. "C3"

  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

/// A root in simple-root coordinates.
struct Root {
  IntVec coords;

  bool is_positive() const;
  int height() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A weight in fundamental-weight coordinates: fw[i] = <lambda, alpha_i^vee>.
struct Weight {
  IntVec fw;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Set of simple-root indices (0-based), used for Levi subsets.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::uint32_t bits) : bits_(bits) {}

  static NodeSet all(int rank) { return NodeSet((std::uint32_t{1} << rank) - 1); }
  /// From 1-based Bourbaki labels; throws InputError on labels outside [1, rank].
  static NodeSet from_labels(const std::vector<int>& labels, int rank);

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= std::uint32_t{1} << i; }
  std::uint32_t bits() const { return bits_; }
  int size() const;
  NodeSet complement(int rank) const { return NodeSet(~bits_ & all(rank).bits_); }
  std::vector<int> members(int rank) const;
  std::vector<int> labels(int rank) const;  // 1-based

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

class RootSystem;

/// A Weyl group element given by a word in the simple reflections. Words
/// produced by this library are reduced; equality is decided on the action.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> word) : word_(std::move(word)) {}

  const std::vector<int>& word() const { return word_; }

  /// Permutation of root indices: result[j] = index of w(root j).
  std::vector<std::size_t> action(const RootSystem& rs) const;
  /// Number of positive roots sent to negative roots.
  int inversions(const RootSystem& rs) const;
  bool same_as(const WeylElement& other, const RootSystem& rs) const;

 private:
  std::vector<int> word_;
};

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

class RootSystem {
 public:
  static RootSystem build(SimpleType t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const { return cartan_[i * rank() + j]; }

  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }
  const Root& root(std::size_t idx) const { return roots_[idx]; }
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<std::size_t> find(const IntVec& coords) const;
  std::optional<std::size_t> find(const Root& r) const { return find(r.coords); }
  /// Throws InputError when r is not a root.
  std::size_t index_of(const Root& r) const;
  bool contains(const IntVec& coords) const { return find(coords).has_value(); }

  Root simple_root(int i) const;
  std::size_t simple_index(int i) const { return simple_idx_[i]; }
  const Root& highest_root() const { return roots_[highest_]; }

  /// Coroot of root idx in simple-coroot coordinates.
  const IntVec& coroot(std::size_t idx) const { return coroots_[idx]; }
  /// Half the squared length of simple root i (short roots have 1).
  int half_length(int i) const { return half_len_[i]; }

  Weight to_weight(const Root& r) const;
  /// <lambda, alpha^vee>; throws InputError when alpha is not a root.
  int pairing(const Weight& lambda, const Root& alpha) const;
  int pairing(const Root& lambda, const Root& alpha) const;
  int pairing(const Weight& lambda, std::size_t alpha_idx) const;

  /// Simple reflection s_i on a root index.
  std::size_t reflect(std::size_t idx, int i) const { return reflect_[idx * rank() + i]; }
  /// s_i on a weight in fundamental-weight coordinates.
  Weight reflect(const Weight& w, int i) const;

  /// Weyl group order, by |W| = n! * prod(highest root coefficients) * det(cartan).
  BigInt weyl_order() const;

  /// Coordinates of the root in the standard e_i basis (types B, C, D only).
  IntVec euclidean(const Root& r) const;
  /// Human-readable form such as "-(e1+e2)" (B, C, D) or "-a1-a2" otherwise.
  std::string display(const Root& r) const;
  /// Root with the given e_i coordinates (types B, C, D); throws if none.
  Root from_euclidean(const IntVec& e) const;

 private:
  explicit RootSystem(SimpleType t) : type_(t) {}

  SimpleType type_;
  IntVec cartan_;
  IntVec half_len_;
  std::vector<Root> roots_;  // positives sorted by (height, coords), then negatives
  std::vector<IntVec> coroots_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> index_;
  std::vector<std::size_t> reflect_;
  std::vector<std::size_t> simple_idx_;
  std::size_t highest_ = 0;
};

/// Minimal-length representatives of W / W_S, enumerated breadth-first as
/// the orbit of lambda_S = sum of fundamental weights off S. Element 0 is the
/// identity; element i equals s_{generator(i)} * element(parent(i)).
class CosetReps {
 public:
  std::size_t size() const { return length_.size(); }
  int length(std::size_t i) const { return length_[i]; }
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  int generator(std::size_t i) const { return generator_[i]; }
  const Weight& orbit_point(std::size_t i) const { return orbit_[i]; }
  std::optional<std::size_t> find(const Weight& w) const;

  std::vector<int> word(std::size_t i) const;
  WeylElement element(std::size_t i) const { return WeylElement(word(i)); }
  int max_length() const;
  std::size_t longest() const;

 private:
  friend CosetReps minimal_coset_reps(const RootSystem&, NodeSet, std::size_t);

  std::vector<Weight> orbit_;
  std::vector<int> length_;
  std::vector<std::size_t> parent_;
  std::vector<int> generator_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> index_;
};

/// Throws ResourceError when more than `cap` elements would be produced.
CosetReps minimal_coset_reps(const RootSystem& rs, NodeSet levi,
                             std::size_t cap = kDefaultCap);

/// sum_{i not in levi} fw_i
Weight levi_base_weight(int rank, NodeSet levi);

}  // namespace parastab
