#include "parastab/schubert.hpp"

#include <algorithm>
#include <unordered_set>

namespace parastab {

namespace {

void require_levi_character(const ParabolicData& pd, const Weight& lam, const char* what) {
  const int n = pd.roots().rank();
  if (lam.fw.size() != static_cast<std::size_t>(n))
    throw InputError(std::string(what) + " has wrong number of coordinates");
  for (int i = 0; i < n; ++i)
    if (pd.levi().contains(i) && lam.fw[i] != 0)
      throw InputError(std::string(what) + " pairs nonzero with Levi coroot " +
                       std::to_string(i + 1));
}

}  // namespace

// ---------------------------------------------------------------------------
// ChowBasis

ChowBasis ChowBasis::build(std::shared_ptr<const ParabolicData> pd, std::size_t cap) {
  const RootSystem& rs = pd->roots();
  const CosetReps reps = minimal_coset_reps(rs, pd->levi(), cap);

  ChowBasis cb;
  cb.pd_ = pd;
  cb.lengths_.resize(reps.size());
  cb.words_.resize(reps.size());
  for (std::size_t u = 0; u < reps.size(); ++u) {
    cb.lengths_[u] = reps.length(u);
    cb.words_[u] = reps.word(u);
  }

  std::vector<Weight> positive_weights;
  for (std::size_t b = 0; b < rs.positive_count(); ++b)
    positive_weights.push_back(rs.to_weight(rs.root(b)));

  // For mu = w(lambda_P) and beta > 0 with <mu, beta^vee> < 0, s_beta w lies
  // strictly below w in Bruhat order; when its coset representative is one
  // step shorter, parity forces s_beta w = w s_gamma with gamma = -w^{-1} beta
  // to be that representative.
  for (std::size_t u = 0; u < reps.size(); ++u) {
    const Weight& mu = reps.orbit_point(u);
    for (std::size_t b = 0; b < rs.positive_count(); ++b) {
      const int c = rs.pairing(mu, b);
      if (c >= 0) continue;
      Weight image = mu;
      for (int i = 0; i < rs.rank(); ++i) image.fw[i] -= c * positive_weights[b].fw[i];
      auto target = reps.find(image);
      if (!target || reps.length(*target) != reps.length(u) - 1) continue;
      std::size_t g = b;  // w^{-1} beta
      for (int s : cb.words_[u]) g = rs.reflect(g, s);
      const std::size_t gamma = g < rs.positive_count() ? g : g - rs.positive_count();
      cb.edges_.push_back({u, *target, gamma});
    }
  }
  cb.index_edges();
  return cb;
}

ChowBasis ChowBasis::from_parts(std::shared_ptr<const ParabolicData> pd,
                                std::vector<std::vector<int>> words, std::vector<int> lengths,
                                std::vector<HasseEdge> edges) {
  const RootSystem& rs = pd->roots();
  const std::size_t n = lengths.size();
  if (n == 0 || words.size() != n || lengths[0] != 0)
    throw InputError("malformed Schubert basis");
  const Weight base = levi_base_weight(rs.rank(), pd->levi());
  std::unordered_set<IntVec, IntVecHash> seen;
  std::vector<Weight> points(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (static_cast<int>(words[u].size()) != lengths[u] || (u > 0 && lengths[u] < lengths[u - 1]))
      throw InputError("malformed Schubert basis grading");
    Weight mu = base;
    for (auto it = words[u].rbegin(); it != words[u].rend(); ++it) {
      if (*it < 0 || *it >= rs.rank()) throw InputError("malformed reduced word");
      if (mu.fw[*it] <= 0) throw InputError("word is not a minimal coset representative");
      mu = rs.reflect(mu, *it);
    }
    if (!seen.insert(mu.fw).second) throw InputError("duplicate coset representative");
    points[u] = std::move(mu);
  }
  if (n > 1 && lengths[n - 2] == lengths[n - 1]) throw InputError("fundamental class not unique");
  if (static_cast<std::size_t>(lengths[n - 1]) != pd->dimension())
    throw InputError("Schubert basis grading does not match dim G/P");
  for (const HasseEdge& e : edges) {
    if (e.from >= n || e.to >= n || e.gamma >= rs.positive_count() ||
        lengths[e.to] + 1 != lengths[e.from])
      throw InputError("malformed Hasse edge");
    // w s_gamma lambda = w lambda - <lambda, gamma^vee> w(gamma)
    std::size_t image = e.gamma;
    for (auto it = words[e.from].rbegin(); it != words[e.from].rend(); ++it)
      image = rs.reflect(image, *it);
    const int c = rs.pairing(base, e.gamma);
    if (c <= 0 || points[e.to] != points[e.from] + (-c) * rs.to_weight(rs.root(image)))
      throw InputError("Hasse edge label does not match its endpoints");
  }
  ChowBasis cb;
  cb.pd_ = std::move(pd);
  cb.words_ = std::move(words);
  cb.lengths_ = std::move(lengths);
  cb.edges_ = std::move(edges);
  cb.index_edges();
  return cb;
}

void ChowBasis::index_edges() {
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const HasseEdge& a, const HasseEdge& b) { return a.from < b.from; });
  edge_begin_.assign(size() + 1, 0);
  for (const HasseEdge& e : edges_) ++edge_begin_[e.from + 1];
  for (std::size_t i = 0; i < size(); ++i) edge_begin_[i + 1] += edge_begin_[i];
}

std::pair<const HasseEdge*, const HasseEdge*> ChowBasis::edges_from(std::size_t w) const {
  const HasseEdge* base = edges_.data();
  return {base + edge_begin_[w], base + edge_begin_[w + 1]};
}

std::vector<std::size_t> ChowBasis::grade_sizes() const {
  std::vector<std::size_t> out(dimension() + 1, 0);
  for (int l : lengths_) ++out[l];
  return out;
}

std::size_t ChowBasis::simple_reflection(int i) const {
  for (std::size_t w = 1; w < size() && lengths_[w] == 1; ++w)
    if (words_[w][0] == i) return w;
  throw InputError("s_" + std::to_string(i + 1) + " is not in W^P");
}

// ---------------------------------------------------------------------------
// ChowClass

ChowClass ChowClass::basis_element(std::size_t n, std::size_t w, BigInt c) {
  ChowClass x(n);
  x.coeffs_[w] = std::move(c);
  return x;
}

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowClass multiply_by_divisor(const ChowBasis& cb, const ChowClass& x, const Weight& lam) {
  const ParabolicData& pd = cb.parabolic();
  require_levi_character(pd, lam, "divisor weight");
  if (x.size() != cb.size()) throw InputError("class does not belong to this basis");
  const RootSystem& rs = pd.roots();
  ChowClass out(cb.size());
  for (std::size_t w = 0; w < cb.size(); ++w) {
    if (x[w] == 0) continue;
    auto [it, end] = cb.edges_from(w);
    for (; it != end; ++it) {
      const int c = rs.pairing(lam, it->gamma);
      if (c != 0) out[it->to] += x[w] * c;
    }
  }
  return out;
}

ChowClass power_of_divisor(const ChowBasis& cb, const Weight& pol, int k) {
  ChowClass x = ChowClass::basis_element(cb.size(), cb.fundamental());
  for (int i = 0; i < k; ++i) x = multiply_by_divisor(cb, x, pol);
  return x;
}

// ---------------------------------------------------------------------------
// Polarization

bool Polarization::ample() const {
  return !coeffs.empty() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 1; });
}

Weight Polarization::to_weight(const ParabolicData& pd) const {
  const int n = pd.roots().rank();
  const auto crossed = pd.crossed().members(n);
  if (coeffs.size() != crossed.size())
    throw InputError("polarization needs " + std::to_string(crossed.size()) +
                     " coefficients (one per crossed simple root)");
  Weight w{IntVec(n, 0)};
  for (std::size_t k = 0; k < crossed.size(); ++k) w.fw[crossed[k]] = coeffs[k];
  return w;
}

Polarization Polarization::from_weight(const ParabolicData& pd, const Weight& w) {
  require_levi_character(pd, w, "polarization weight");
  Polarization p;
  for (int i : pd.crossed().members(pd.roots().rank())) p.coeffs.push_back(w.fw[i]);
  return p;
}

Polarization Polarization::anticanonical(const ParabolicData& pd) {
  const RootSystem& rs = pd.roots();
  Root sum{IntVec(rs.rank(), 0)};
  for (std::size_t idx : pd.tangent()) sum = sum + rs.root(idx);
  return from_weight(pd, rs.to_weight(-sum));
}

// ---------------------------------------------------------------------------
// Degrees

BigInt degree(const ChowBasis& cb, const Weight& c1, const Polarization& pol, bool require_ample) {
  const ParabolicData& pd = cb.parabolic();
  if (cb.dimension() < 1) throw InputError("degree undefined on a point");
  if (require_ample && !pol.ample()) throw InputError("polarization is not ample");
  require_levi_character(pd, c1, "c1 weight");
  ChowClass x = power_of_divisor(cb, pol.to_weight(pd), cb.dimension() - 1);
  x = multiply_by_divisor(cb, x, c1);
  return x[cb.point()];
}

SlopeReport make_slope(BigInt degree, int rank) {
  if (rank <= 0) throw InputError("slope needs positive rank");
  SlopeReport r;
  r.slope = Rational(degree, rank);
  r.degree = std::move(degree);
  r.rank = rank;
  return r;
}

SlopeReport slope(const ChowBasis& cb, const SubmoduleCandidate& c, const Polarization& pol) {
  if (c.empty()) throw InputError("slope of the zero subbundle is undefined");
  return make_slope(degree(cb, c.c1_weight(), pol), c.rank());
}

std::vector<BigInt> DegreeEngine::generator_degrees(const Polarization& pol) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(pol); it != memo_.end()) return it->second;
  }
  const ChowBasis& cb = *cb_;
  const ParabolicData& pd = cb.parabolic();
  if (cb.dimension() < 1) throw InputError("degree undefined on a point");
  if (!pol.ample()) throw InputError("polarization is not ample");
  const ChowClass x = power_of_divisor(cb, pol.to_weight(pd), cb.dimension() - 1);
  std::vector<BigInt> d;
  for (int i : pd.crossed().members(pd.roots().rank())) d.push_back(x[cb.simple_reflection(i)]);
  std::lock_guard lock(mutex_);
  memo_.emplace(pol, d);
  return d;
}

BigInt DegreeEngine::degree(const Weight& c1, const Polarization& pol) {
  const ParabolicData& pd = cb_->parabolic();
  require_levi_character(pd, c1, "c1 weight");
  const auto d = generator_degrees(pol);
  const auto crossed = pd.crossed().members(pd.roots().rank());
  BigInt total = 0;
  for (std::size_t k = 0; k < crossed.size(); ++k) total += d[k] * c1.fw[crossed[k]];
  return total;
}

SlopeReport DegreeEngine::slope(const SubmoduleCandidate& c, const Polarization& pol) {
  if (c.empty()) throw InputError("slope of the zero subbundle is undefined");
  return make_slope(degree(c.c1_weight(), pol), c.rank());
}

}  // namespace parastab
