#pragma once

// Standard parabolics P_S (B contained in P_S), the tangent roots R \ I(P),
// and the closed-subset criterion characterizing P-submodules of g/p.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "parastab/chevalley.hpp"
#include "parastab/rootsys.hpp"

namespace parastab {

class ParabolicData {
 public:
  ParabolicData(std::shared_ptr<const RootSystem> rs, NodeSet levi);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  NodeSet levi() const { return levi_; }
  NodeSet crossed() const { return levi_.complement(rs_->rank()); }

  /// Root indices of I(P) = R+ together with the negative roots spanned by S.
  const std::vector<std::size_t>& parabolic_roots() const { return ip_; }
  /// Root indices of the tangent roots, sorted lexicographically by coordinates.
  const std::vector<std::size_t>& tangent() const { return tangent_; }
  std::size_t dimension() const { return tangent_.size(); }
  /// Position of a root index within tangent(), or -1.
  int tangent_position(std::size_t root_idx) const { return tangent_pos_[root_idx]; }
  bool in_parabolic(std::size_t root_idx) const { return tangent_pos_[root_idx] < 0; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  NodeSet levi_;
  std::vector<std::size_t> ip_;
  std::vector<std::size_t> tangent_;
  std::vector<int> tangent_pos_;
};

ParabolicData tangent_roots(std::shared_ptr<const RootSystem> rs, NodeSet levi);

/// A subset I of the tangent roots, standing for M(I) = sum of g^alpha over I.
class SubmoduleCandidate {
 public:
  /// `members` are positions into pd.tangent(); duplicates and order are normalized.
  SubmoduleCandidate(std::shared_ptr<const ParabolicData> pd, std::vector<int> members);
  static SubmoduleCandidate from_roots(std::shared_ptr<const ParabolicData> pd,
                                       const std::vector<Root>& roots);

  const ParabolicData& parabolic() const { return *pd_; }
  std::shared_ptr<const ParabolicData> parabolic_ptr() const { return pd_; }
  const std::vector<int>& members() const { return members_; }
  std::vector<Root> roots() const;
  int rank() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool is_full() const { return members_.size() == pd_->dimension(); }
  bool proper() const { return !empty() && !is_full(); }
  bool contains_position(int pos) const;

  /// -sum of the member roots, in fundamental-weight coordinates.
  Weight c1_weight() const;

  friend bool operator==(const SubmoduleCandidate& a, const SubmoduleCandidate& b) {
    return a.members_ == b.members_;
  }

 private:
  std::shared_ptr<const ParabolicData> pd_;
  std::vector<int> members_;
};

/// Characteristic zero: for beta in I(P), alpha in I with alpha + beta tangent,
/// alpha + beta is in I. Positive(p): the same for every alpha + k beta whose
/// divided-power coefficient is nonzero mod p.
bool is_closed(const SubmoduleCandidate& c, CharMode mode);

Weight c1_weight(const SubmoduleCandidate& c);

/// One-step reachability among tangent positions: edges a -> b when some
/// admissible (beta, k) carries tangent root a to tangent root b.
std::vector<std::vector<int>> reachability_graph(const ParabolicData& pd, CharMode mode);

/// Visits every closed subset exactly once (empty and full included).
/// Throws ResourceError after `cap` subsets have been produced.
void for_each_submodule(const ParabolicData& pd, CharMode mode,
                        const std::function<void(const std::vector<int>&)>& visit,
                        std::size_t cap = kDefaultCap);

/// All closed subsets, ordered by rank then lexicographically by tangent position.
std::vector<SubmoduleCandidate> enumerate_submodules(std::shared_ptr<const ParabolicData> pd,
                                                     CharMode mode,
                                                     std::size_t cap = kDefaultCap);

struct VectorFieldAlgebra {
  bool exceptional = false;
  std::string name;  // "sl(6)", "so(8)", or the adjoint algebra e.g. "sl(4)"
  long dimension = 0;
};

/// H^0(G/P, T(G/P)) per Demazure: g itself except for three (type, crossed-set)
/// pairs, each with a single crossed simple root. Throws when S is everything.
VectorFieldAlgebra demazure_vector_fields(const SimpleType& t, NodeSet levi);

/// Name of the simple Lie algebra of type t, e.g. "sp(6)" for C3.
std::string lie_algebra_name(const SimpleType& t);

}  // namespace parastab
