#include "parastab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace parastab {

std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "equivariantly-stable";
    case StabilityStatus::StrictlySemistable: return "equivariantly-strictly-semistable";
    case StabilityStatus::Unstable: return "equivariantly-unstable";
  }
  return {};
}

HomogeneousSpace::HomogeneousSpace(SimpleType t, NodeSet levi, const EngineOptions& options)
    : rs_(std::make_shared<const RootSystem>(RootSystem::build(t))),
      pd_(std::make_shared<const ParabolicData>(rs_, levi)) {
  std::shared_ptr<const ChowBasis> cb =
      options.basis_provider
          ? options.basis_provider(pd_)
          : std::make_shared<const ChowBasis>(ChowBasis::build(pd_, options.basis_cap));
  engine_ = std::make_shared<DegreeEngine>(std::move(cb));
}

namespace {

CharNote characteristic_note(const RootSystem& rs, CharMode mode) {
  CharNote note;
  note.characteristic = mode.characteristic();
  note.min_admissible = min_admissible_char(rs);
  note.admissible = mode.is_zero() || mode.characteristic() >= note.min_admissible;
  note.notes.push_back("verdict quantifies over G-equivariant subbundles of T(G/P) only");
  note.notes.push_back(
      "the maximal destabilizing subsheaf of T(G/P) is unique, hence G-stable, hence a "
      "homogeneous subbundle: equivariant semistability implies semistability");
  if (!mode.is_zero()) {
    if (note.admissible) {
      note.notes.push_back(
          "characteristic is admissible: the closed subsets coincide with those in "
          "characteristic zero, and a stable (semistable) G-equivariant bundle on G/P is "
          "Frobenius stable (Frobenius semistable)");
    } else {
      note.notes.push_back(
          "characteristic is below the admissible threshold " +
          std::to_string(note.min_admissible) +
          ": equivariant subbundles need not lift to characteristic zero");
    }
  }
  return note;
}

void require_space(const ParabolicData& pd) {
  if (pd.dimension() == 0) throw InputError("P = G: the Levi subset must omit a simple root");
}

}  // namespace

StabilityVerdict check_tangent_stability(HomogeneousSpace& space, CharMode mode,
                                         std::optional<Polarization> pol,
                                         const EngineOptions& options) {
  auto pd = space.parabolic();
  require_space(*pd);
  StabilityVerdict v;
  v.polarization = pol ? *pol : Polarization::anticanonical(*pd);
  if (!v.polarization.ample()) throw InputError("polarization is not ample");
  v.polarization.to_weight(*pd);  // validates the coefficient count
  v.char_note = characteristic_note(space.roots(), mode);

  DegreeEngine& engine = space.degrees();
  const SubmoduleCandidate full(pd, [&] {
    std::vector<int> all(pd->dimension());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  v.tangent = engine.slope(full, v.polarization);

  std::vector<SubmoduleCandidate> family;
  try {
    family = enumerate_submodules(pd, mode, options.subset_cap);
  } catch (const ResourceError& e) {
    v.truncated = true;
    v.closed_subsets = e.completed();
    return v;
  }
  v.closed_subsets = family.size();

  std::vector<Witness> best;
  for (const auto& c : family) {
    if (!c.proper()) continue;
    ++v.proper_subsets;
    SlopeReport s = engine.slope(c, v.polarization);
    if (!best.empty() && s.slope < best.front().slope.slope) continue;
    if (!best.empty() && s.slope > best.front().slope.slope) best.clear();
    best.push_back({c, std::move(s)});
  }
  if (!best.empty()) v.max_proper = best.front();

  if (best.empty() || best.front().slope.slope < v.tangent.slope) {
    v.status = StabilityStatus::Stable;
  } else {
    v.status = best.front().slope.slope == v.tangent.slope ? StabilityStatus::StrictlySemistable
                                                           : StabilityStatus::Unstable;
    v.witnesses = std::move(best);
  }
  return v;
}

StabilityVerdict check_tangent_stability(SimpleType t, NodeSet levi, CharMode mode,
                                         std::optional<Polarization> pol,
                                         const EngineOptions& options) {
  if (levi == NodeSet::all(t.rank()))
    throw InputError("P = G: the Levi subset must omit a simple root");
  HomogeneousSpace space(t, levi, options);
  return check_tangent_stability(space, mode, std::move(pol), options);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Polarization> primitive_box(std::size_t k, int max_coeff) {
  std::vector<Polarization> out;
  std::vector<int> v(k, 1);
  while (true) {
    int g = 0;
    for (int c : v) g = std::gcd(g, c);
    if (g == 1) out.push_back({v});
    std::size_t i = k;
    while (i > 0 && v[i - 1] == max_coeff) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

}  // namespace

PolarizationSearch search_destabilizing_polarization(HomogeneousSpace& space, CharMode mode,
                                                     int max_coeff,
                                                     const EngineOptions& options) {
  auto pd = space.parabolic();
  require_space(*pd);
  if (max_coeff < 1) throw InputError("max-coeff must be positive");
  const std::size_t k = pd->crossed().size();

  // Box size max_coeff^k, checked before materializing it.
  double box = 1;
  for (std::size_t i = 0; i < k; ++i) box *= max_coeff;
  std::vector<Polarization> pols;
  if (box > static_cast<double>(options.polarization_cap)) {
    std::size_t side = 1;
    while (std::pow(static_cast<double>(side + 1), static_cast<double>(k)) <=
           static_cast<double>(options.polarization_cap))
      ++side;
    throw ResourceError("polarization box [1," + std::to_string(max_coeff) + "]^" +
                            std::to_string(k) + " exceeds cap of " +
                            std::to_string(options.polarization_cap) +
                            "; largest admissible box is [1," + std::to_string(side) + "]^" +
                            std::to_string(k),
                        0);
  }
  pols = primitive_box(k, max_coeff);

  const auto family = enumerate_submodules(pd, mode, options.subset_cap);
  std::vector<SubmoduleCandidate> proper;
  for (const auto& c : family)
    if (c.proper()) proper.push_back(c);

  std::vector<int> tangent_members(pd->dimension());
  std::iota(tangent_members.begin(), tangent_members.end(), 0);
  const SubmoduleCandidate full(pd, tangent_members);

  DegreeEngine& engine = space.degrees();
  std::vector<std::vector<DestabilizingPair>> found(pols.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pols.size(); i = next++) {
      const Polarization& pol = pols[i];
      const SlopeReport t = engine.slope(full, pol);
      for (const auto& c : proper) {
        SlopeReport s = engine.slope(c, pol);
        if (s.slope > t.slope) found[i].push_back({pol, c, std::move(s), t});
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  PolarizationSearch out;
  out.scanned = pols.size();
  for (auto& f : found)
    for (auto& w : f) out.witnesses.push_back(std::move(w));
  return out;
}

PolarizationSearch search_destabilizing_polarization(SimpleType t, NodeSet levi, CharMode mode,
                                                     int max_coeff,
                                                     const EngineOptions& options) {
  if (levi == NodeSet::all(t.rank()))
    throw InputError("P = G: the Levi subset must omit a simple root");
  HomogeneousSpace space(t, levi, options);
  return search_destabilizing_polarization(space, mode, max_coeff, options);
}

}  // namespace parastab
