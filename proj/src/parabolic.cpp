#include "parastab/parabolic.hpp"

#include <algorithm>

namespace parastab {

ParabolicData::ParabolicData(std::shared_ptr<const RootSystem> rs, NodeSet levi)
    : rs_(std::move(rs)), levi_(levi) {
  const RootSystem& r = *rs_;
  if ((levi.bits() & ~NodeSet::all(r.rank()).bits()) != 0)
    throw InputError("Levi subset refers to simple roots beyond the rank");
  tangent_pos_.assign(r.size(), -1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Root& a = r.root(k);
    bool in_levi_span = true;
    for (int i = 0; i < r.rank(); ++i)
      if (a.coords[i] != 0 && !levi.contains(i)) in_levi_span = false;
    if (a.is_positive() || in_levi_span) ip_.push_back(k);
    else tangent_.push_back(k);
  }
  std::sort(tangent_.begin(), tangent_.end(),
            [&](std::size_t x, std::size_t y) { return r.root(x).coords < r.root(y).coords; });
  for (std::size_t pos = 0; pos < tangent_.size(); ++pos)
    tangent_pos_[tangent_[pos]] = static_cast<int>(pos);
}

ParabolicData tangent_roots(std::shared_ptr<const RootSystem> rs, NodeSet levi) {
  return ParabolicData(std::move(rs), levi);
}

// ---------------------------------------------------------------------------

SubmoduleCandidate::SubmoduleCandidate(std::shared_ptr<const ParabolicData> pd,
                                       std::vector<int> members)
    : pd_(std::move(pd)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_)
    if (m < 0 || static_cast<std::size_t>(m) >= pd_->dimension())
      throw InputError("candidate member outside the tangent roots");
}

SubmoduleCandidate SubmoduleCandidate::from_roots(std::shared_ptr<const ParabolicData> pd,
                                                  const std::vector<Root>& roots) {
  std::vector<int> members;
  for (const Root& r : roots) {
    int pos = pd->tangent_position(pd->roots().index_of(r));
    if (pos < 0) throw InputError("root " + pd->roots().display(r) + " is not a tangent root");
    members.push_back(pos);
  }
  return SubmoduleCandidate(std::move(pd), std::move(members));
}

std::vector<Root> SubmoduleCandidate::roots() const {
  std::vector<Root> out;
  for (int m : members_) out.push_back(pd_->roots().root(pd_->tangent()[m]));
  return out;
}

bool SubmoduleCandidate::contains_position(int pos) const {
  return std::binary_search(members_.begin(), members_.end(), pos);
}

Weight SubmoduleCandidate::c1_weight() const {
  const RootSystem& rs = pd_->roots();
  Root sum{IntVec(rs.rank(), 0)};
  for (int m : members_) sum = sum + rs.root(pd_->tangent()[m]);
  return rs.to_weight(-sum);
}

Weight c1_weight(const SubmoduleCandidate& c) { return c.c1_weight(); }

// ---------------------------------------------------------------------------

namespace {

// Calls visit(target root index) for every alpha + k beta (k >= 1) that the
// closure condition forces, for a fixed tangent alpha and beta in I(P).
template <class Visit>
void forced_steps(const RootSystem& rs, const ParabolicData& pd, std::size_t alpha,
                  std::size_t beta, CharMode mode, Visit&& visit) {
  const Root& a = rs.root(alpha);
  const Root& b = rs.root(beta);
  const int max_k = mode.is_zero() ? 1 : 3;  // strings have length <= 4
  Root cur = a;
  for (int k = 1; k <= max_k; ++k) {
    cur = cur + b;
    auto idx = rs.find(cur);
    if (!idx) break;
    if (pd.in_parabolic(*idx)) continue;
    if (!mode.is_zero() && divided_power_coefficient(rs, a, b, k) % mode.characteristic() == 0)
      continue;
    visit(*idx);
  }
}

}  // namespace

bool is_closed(const SubmoduleCandidate& c, CharMode mode) {
  const ParabolicData& pd = c.parabolic();
  const RootSystem& rs = pd.roots();
  for (int m : c.members()) {
    const std::size_t alpha = pd.tangent()[m];
    for (std::size_t beta : pd.parabolic_roots()) {
      bool ok = true;
      forced_steps(rs, pd, alpha, beta, mode, [&](std::size_t target) {
        if (!c.contains_position(pd.tangent_position(target))) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> reachability_graph(const ParabolicData& pd, CharMode mode) {
  const RootSystem& rs = pd.roots();
  std::vector<std::vector<int>> out(pd.dimension());
  for (std::size_t pos = 0; pos < pd.dimension(); ++pos) {
    for (std::size_t beta : pd.parabolic_roots()) {
      forced_steps(rs, pd, pd.tangent()[pos], beta, mode,
                   [&](std::size_t target) { out[pos].push_back(pd.tangent_position(target)); });
    }
    std::sort(out[pos].begin(), out[pos].end());
    out[pos].erase(std::unique(out[pos].begin(), out[pos].end()), out[pos].end());
  }
  return out;
}

void for_each_submodule(const ParabolicData& pd, CharMode mode,
                        const std::function<void(const std::vector<int>&)>& visit,
                        std::size_t cap) {
  const std::size_t n = pd.dimension();
  const auto graph = reachability_graph(pd, mode);

  // Transitive closure; dimensions stay in the low hundreds.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    reach[a][a] = 1;
    for (int b : graph[a]) reach[a][b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = 1;

  // Strongly connected components, labelled by their smallest position.
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (std::size_t a = 0; a < n; ++a) {
    if (comp_of[a] >= 0) continue;
    std::vector<int> comp;
    for (std::size_t b = a; b < n; ++b)
      if (reach[a][b] && reach[b][a]) {
        comp_of[b] = static_cast<int>(comps.size());
        comp.push_back(static_cast<int>(b));
      }
    comps.push_back(std::move(comp));
  }
  const std::size_t nc = comps.size();
  std::vector<std::vector<int>> succ(nc);  // strictly reachable components
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t d = 0; d < nc; ++d)
      if (c != d && reach[comps[c][0]][comps[d][0]]) succ[c].push_back(static_cast<int>(d));
  }
  // Successors are decided before the components that reach them.
  std::vector<int> order(nc);
  for (std::size_t c = 0; c < nc; ++c) order[c] = static_cast<int>(c);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return succ[x].size() < succ[y].size(); });

  std::vector<char> included(nc, 0);
  std::size_t emitted = 0;
  std::vector<int> members;
  members.reserve(n);

  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == nc) {
      if (emitted >= cap)
        throw ResourceError("closed-subset count exceeds cap of " + std::to_string(cap), emitted);
      members.clear();
      for (std::size_t c = 0; c < nc; ++c)
        if (included[c]) members.insert(members.end(), comps[c].begin(), comps[c].end());
      std::sort(members.begin(), members.end());
      ++emitted;
      visit(members);
      return;
    }
    const int c = order[depth];
    recurse(depth + 1);
    bool allowed = std::all_of(succ[c].begin(), succ[c].end(), [&](int d) { return included[d]; });
    if (allowed) {
      included[c] = 1;
      recurse(depth + 1);
      included[c] = 0;
    }
  };
  recurse(0);
}

std::vector<SubmoduleCandidate> enumerate_submodules(std::shared_ptr<const ParabolicData> pd,
                                                     CharMode mode, std::size_t cap) {
  std::vector<std::vector<int>> sets;
  for_each_submodule(*pd, mode, [&](const std::vector<int>& m) { sets.push_back(m); }, cap);
  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<SubmoduleCandidate> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(pd, std::move(s));
  return out;
}

// ---------------------------------------------------------------------------

std::string lie_algebra_name(const SimpleType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return "sl(" + std::to_string(n + 1) + ")";
    case Family::B: return "so(" + std::to_string(2 * n + 1) + ")";
    case Family::C: return "sp(" + std::to_string(2 * n) + ")";
    case Family::D: return "so(" + std::to_string(2 * n) + ")";
    case Family::E: return "e" + std::to_string(n);
    case Family::F: return "f4";
    case Family::G: return "g2";
  }
  return {};
}

VectorFieldAlgebra demazure_vector_fields(const SimpleType& t, NodeSet levi) {
  const int n = t.rank();
  if (levi == NodeSet::all(n)) throw InputError("P = G has no tangent bundle");
  const NodeSet crossed = levi.complement(n);
  const auto only = [&](int i) { return crossed == NodeSet(std::uint32_t{1} << i); };

  if (t.family() == Family::C && only(0))  // P^{2n-1}
    return {true, "sl(" + std::to_string(2 * n) + ")", 4L * n * n - 1};
  if (t.family() == Family::B && only(n - 1))  // spinor variety of so(2n+2)
    return {true, "so(" + std::to_string(2 * n + 2) + ")", long(n + 1) * (2 * n + 1)};
  if (t.family() == Family::G && only(0))  // 5-dimensional quadric
    return {true, "so(7)", 21};

  const RootSystem rs = RootSystem::build(t);
  return {false, lie_algebra_name(t), static_cast<long>(rs.size()) + n};
}

}  // namespace parastab
