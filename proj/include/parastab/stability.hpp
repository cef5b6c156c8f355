#pragma once

// Slope (semi)stability of T(G/P) with respect to G-equivariant subbundles.
//
// The verdicts quantify over equivariant subbundles only. Because the maximal
// destabilizing subsheaf of a homogeneous bundle is unique and therefore
// G-stable, equivariant semistability already implies semistability; for
// stability the equivariant verdict is what is certified.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parastab/schubert.hpp"

namespace parastab {

enum class StabilityStatus { Stable, StrictlySemistable, Unstable };

std::string to_string(StabilityStatus s);

struct Witness {
  SubmoduleCandidate candidate;
  SlopeReport slope;
};

struct CharNote {
  int characteristic = 0;
  int min_admissible = 0;
  bool admissible = false;  // char 0 counts as admissible
  std::vector<std::string> notes;
};

struct StabilityVerdict {
  std::optional<StabilityStatus> status;  // absent when truncated
  Polarization polarization;
  SlopeReport tangent;
  std::vector<Witness> witnesses;  // all proper subsets of maximal slope (empty when stable)
  std::optional<Witness> max_proper;  // one proper subset of maximal slope, if any exists
  std::size_t closed_subsets = 0;     // including 0 and the whole tangent space
  std::size_t proper_subsets = 0;
  CharNote char_note;
  bool truncated = false;
};

/// Supplies the Schubert basis for a parabolic; lets callers plug in a cache.
using BasisProvider =
    std::function<std::shared_ptr<const ChowBasis>(std::shared_ptr<const ParabolicData>)>;

struct EngineOptions {
  std::size_t subset_cap = kDefaultCap;
  std::size_t basis_cap = kDefaultCap;
  std::size_t polarization_cap = kDefaultCap;
  unsigned threads = 1;
  BasisProvider basis_provider;  // default: ChowBasis::build
};

/// Everything needed to evaluate slopes on one G/P.
class HomogeneousSpace {
 public:
  HomogeneousSpace(SimpleType t, NodeSet levi, const EngineOptions& options = {});

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const ParabolicData> parabolic() const { return pd_; }
  const ChowBasis& basis() const { return engine_->basis(); }
  DegreeEngine& degrees() { return *engine_; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const ParabolicData> pd_;
  std::shared_ptr<DegreeEngine> engine_;
};

/// Enumerates the closed subsets in `mode`, compares all slopes with the
/// tangent slope under `pol` (anticanonical when absent). Throws InputError for
/// S = all; reports truncated = true when the subset cap is hit.
StabilityVerdict check_tangent_stability(SimpleType t, NodeSet levi, CharMode mode,
                                         std::optional<Polarization> pol,
                                         const EngineOptions& options = {});
StabilityVerdict check_tangent_stability(HomogeneousSpace& space, CharMode mode,
                                         std::optional<Polarization> pol,
                                         const EngineOptions& options = {});

struct DestabilizingPair {
  Polarization polarization;
  SubmoduleCandidate candidate;
  SlopeReport subset_slope;
  SlopeReport tangent_slope;
};

struct PolarizationSearch {
  std::vector<DestabilizingPair> witnesses;
  std::size_t scanned = 0;  // primitive vectors examined
};

/// Scans ample primitive coefficient vectors in [1, max_coeff]^k and returns
/// every (pol, I) with slope(I) > slope(T). Throws ResourceError when the box
/// holds more than options.polarization_cap vectors.
PolarizationSearch search_destabilizing_polarization(SimpleType t, NodeSet levi, CharMode mode,
                                                     int max_coeff,
                                                     const EngineOptions& options = {});
PolarizationSearch search_destabilizing_polarization(HomogeneousSpace& space, CharMode mode,
                                                     int max_coeff,
                                                     const EngineOptions& options = {});

}  // namespace parastab
