#include "parastab/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace parastab {

// ---------------------------------------------------------------------------
// SimpleType

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1 && rank <= 31; break;
    case Family::B:
    case Family::C: ok = rank >= 2 && rank <= 31; break;
    case Family::D: ok = rank >= 3 && rank <= 31; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw InputError("invalid simple type " + std::string(1, static_cast<char>(family)) +
                     std::to_string(rank));
  }
}

SimpleType SimpleType::parse(const std::string& family, int rank) {
  if (family.size() != 1) throw InputError("type must be one letter A..G, got '" + family + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (c < 'A' || c > 'G') throw InputError("type must be one letter A..G, got '" + family + "'");
  return SimpleType(static_cast<Family>(c), rank);
}

bool SimpleType::simply_laced() const noexcept {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

// ---------------------------------------------------------------------------
// Root / Weight / NodeSet

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator*(int k, const Root& a) {
  Root r = a;
  for (int& c : r.coords) c *= k;
  return r;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.fw.size(); ++i) r.fw[i] += b.fw[i];
  return r;
}

Weight operator*(int k, const Weight& a) {
  Weight r = a;
  for (int& c : r.fw) c *= k;
  return r;
}

NodeSet NodeSet::from_labels(const std::vector<int>& labels, int rank) {
  NodeSet s;
  for (int l : labels) {
    if (l < 1 || l > rank) {
      throw InputError("simple-root label " + std::to_string(l) + " outside 1.." +
                       std::to_string(rank));
    }
    s.insert(l - 1);
  }
  return s;
}

int NodeSet::size() const { return std::popcount(bits_); }

std::vector<int> NodeSet::members(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> NodeSet::labels(int rank) const {
  std::vector<int> out = members(rank);
  for (int& i : out) ++i;
  return out;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// WeylElement

std::vector<std::size_t> WeylElement::action(const RootSystem& rs) const {
  std::vector<std::size_t> perm(rs.size());
  for (std::size_t j = 0; j < rs.size(); ++j) {
    std::size_t idx = j;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) idx = rs.reflect(idx, *it);
    perm[j] = idx;
  }
  return perm;
}

int WeylElement::inversions(const RootSystem& rs) const {
  auto perm = action(rs);
  int n = 0;
  for (std::size_t j = 0; j < rs.positive_count(); ++j)
    if (!rs.root(perm[j]).is_positive()) ++n;
  return n;
}

bool WeylElement::same_as(const WeylElement& other, const RootSystem& rs) const {
  return action(rs) == other.action(rs);
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

IntVec cartan_matrix(const SimpleType& t) {
  const int n = t.rank();
  IntVec a(n * n, 0);
  auto link = [&](int i, int j) {  // 1-based simple bond
    a[(i - 1) * n + (j - 1)] = -1;
    a[(j - 1) * n + (i - 1)] = -1;
  };
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[(n - 1) * n + (n - 2)] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[(n - 2) * n + (n - 1)] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2 * n + 1] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
      break;
    case Family::G:
      a[0 * n + 1] = -3;  // <alpha_2, alpha_1^vee>, alpha_1 short
      a[1 * n + 0] = -1;
      break;
  }
  return a;
}

// Solves d_i a_ij = d_j a_ji on the connected Dynkin diagram.
IntVec symmetrizer(const IntVec& a, int n) {
  IntVec d(n, 0);
  d[0] = 6;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || a[i * n + j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i * n + j] / a[j * n + i];
      queue.push_back(j);
    }
  }
  int g = 0;
  for (int x : d) g = std::gcd(g, x);
  for (int& x : d) x /= g;
  return d;
}

BigInt determinant(IntVec m, int n) {
  // Bareiss fraction-free elimination.
  std::vector<BigInt> a(m.begin(), m.end());
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r * n + k] != 0) swap = r;
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace

RootSystem RootSystem::build(SimpleType t) {
  RootSystem rs(t);
  const int n = t.rank();
  rs.cartan_ = cartan_matrix(t);
  rs.half_len_ = symmetrizer(rs.cartan_, n);

  // Close the simple roots under simple reflections.
  std::vector<IntVec> found;
  std::unordered_map<IntVec, std::size_t, IntVecHash> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.emplace(e, found.size());
    found.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * rs.cartan_[i * n + j];
      IntVec image = beta;
      image[i] -= p;
      if (seen.emplace(image, found.size()).second) {
        found.push_back(image);
        queue.push_back(image);
      }
    }
  }

  std::vector<Root> positive;
  for (auto& c : found) {
    Root r{c};
    if (r.is_positive()) positive.push_back(std::move(r));
  }
  std::sort(positive.begin(), positive.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;
  });
  rs.roots_ = positive;
  for (const Root& r : positive) rs.roots_.push_back(-r);

  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_.emplace(rs.roots_[k].coords, k);

  rs.coroots_.reserve(rs.roots_.size());
  for (const Root& r : rs.roots_) {
    int norm2 = 0;  // (r, r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm2 += r.coords[i] * r.coords[j] * rs.half_len_[i] * rs.cartan_[i * n + j];
    const int half = norm2 / 2;
    IntVec co(n);
    for (int i = 0; i < n; ++i) co[i] = r.coords[i] * rs.half_len_[i] / half;
    rs.coroots_.push_back(std::move(co));
  }

  rs.reflect_.resize(rs.roots_.size() * n);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IntVec image = rs.roots_[k].coords;
      int p = 0;
      for (int j = 0; j < n; ++j) p += image[j] * rs.cartan_[i * n + j];
      image[i] -= p;
      rs.reflect_[k * n + i] = rs.index_.at(image);
    }
  }

  rs.simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) rs.simple_idx_[i] = rs.index_of(rs.simple_root(i));
  rs.highest_ = rs.positive_count() - 1;
  return rs;
}

std::optional<std::size_t> RootSystem::find(const IntVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const Root& r) const {
  if (r.coords.size() != static_cast<std::size_t>(rank()))
    throw InputError("root has wrong number of coordinates");
  auto idx = find(r.coords);
  if (!idx) throw InputError("not a root of " + type_.name() + ": " + display(r));
  return *idx;
}

Root RootSystem::simple_root(int i) const {
  Root r{IntVec(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

Weight RootSystem::to_weight(const Root& r) const {
  const int n = rank();
  Weight w{IntVec(n, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.fw[i] += r.coords[j] * cartan_[i * n + j];
  return w;
}

int RootSystem::pairing(const Weight& lambda, std::size_t alpha_idx) const {
  const IntVec& co = coroots_[alpha_idx];
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += lambda.fw[i] * co[i];
  return s;
}

int RootSystem::pairing(const Weight& lambda, const Root& alpha) const {
  if (lambda.fw.size() != static_cast<std::size_t>(rank()))
    throw InputError("weight has wrong number of coordinates");
  return pairing(lambda, index_of(alpha));
}

int RootSystem::pairing(const Root& lambda, const Root& alpha) const {
  return pairing(to_weight(lambda), alpha);
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight out = w;
  const int c = w.fw[i];
  for (int k = 0; k < rank(); ++k) out.fw[k] -= c * cartan_[k * rank() + i];
  return out;
}

BigInt RootSystem::weyl_order() const {
  BigInt order = 1;
  for (int k = 2; k <= rank(); ++k) order *= k;
  for (int c : highest_root().coords) order *= c;
  return order * determinant(cartan_, rank());
}

IntVec RootSystem::euclidean(const Root& r) const {
  const int n = rank();
  const Family f = type_.family();
  if (f != Family::B && f != Family::C && f != Family::D)
    throw InputError("euclidean coordinates only for types B, C, D");
  IntVec e(n, 0);
  for (int i = 0; i < n - 1; ++i) {
    e[i] += r.coords[i];
    e[i + 1] -= r.coords[i];
  }
  const int last = r.coords[n - 1];
  if (f == Family::B) {
    e[n - 1] += last;
  } else if (f == Family::C) {
    e[n - 1] += 2 * last;
  } else {
    // D_n: alpha_{n-1} = e_{n-1} - e_n was added above as i = n-2; alpha_n = e_{n-1} + e_n
    e[n - 2] += last;
    e[n - 1] += last;
  }
  return e;
}

Root RootSystem::from_euclidean(const IntVec& e) const {
  for (const Root& r : roots_)
    if (euclidean(r) == e) return r;
  throw InputError("no root with the given euclidean coordinates");
}

namespace {

std::string linear_form(const IntVec& v, const std::string& symbol) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(c) != 1) os << std::abs(c);
    os << symbol << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string RootSystem::display(const Root& r) const {
  const Family f = type_.family();
  const bool euclid = (f == Family::B || f == Family::C || f == Family::D) &&
                      r.coords.size() == static_cast<std::size_t>(rank());
  IntVec v = euclid ? euclidean(r) : r.coords;
  const std::string sym = euclid ? "e" : "a";
  bool all_nonpos = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
  int terms = static_cast<int>(std::count_if(v.begin(), v.end(), [](int c) { return c != 0; }));
  if (all_nonpos && terms > 1) {
    for (int& c : v) c = -c;
    return "-(" + linear_form(v, sym) + ")";
  }
  return linear_form(v, sym);
}

// ---------------------------------------------------------------------------
// Minimal coset representatives

Weight levi_base_weight(int rank, NodeSet levi) {
  Weight w{IntVec(rank, 0)};
  for (int i = 0; i < rank; ++i)
    if (!levi.contains(i)) w.fw[i] = 1;
  return w;
}

std::optional<std::size_t> CosetReps::find(const Weight& w) const {
  auto it = index_.find(w.fw);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> CosetReps::word(std::size_t i) const {
  std::vector<int> w;
  while (i != 0) {
    w.push_back(generator_[i]);
    i = parent_[i];
  }
  return w;
}

int CosetReps::max_length() const { return length_.empty() ? 0 : length_.back(); }

std::size_t CosetReps::longest() const { return size() - 1; }

CosetReps minimal_coset_reps(const RootSystem& rs, NodeSet levi, std::size_t cap) {
  CosetReps out;
  const Weight base = levi_base_weight(rs.rank(), levi);
  out.orbit_.push_back(base);
  out.length_.push_back(0);
  out.parent_.push_back(0);
  out.generator_.push_back(-1);
  out.index_.emplace(base.fw, 0);
  // Breadth-first: an orbit point first reached at depth d has length d.
  for (std::size_t u = 0; u < out.orbit_.size(); ++u) {
    for (int j = 0; j < rs.rank(); ++j) {
      if (out.orbit_[u].fw[j] <= 0) continue;
      Weight next = rs.reflect(out.orbit_[u], j);
      if (out.index_.contains(next.fw)) continue;
      if (out.orbit_.size() >= cap) {
        throw ResourceError("minimal coset representatives exceed cap of " + std::to_string(cap),
                            out.orbit_.size());
      }
      out.index_.emplace(next.fw, out.orbit_.size());
      out.orbit_.push_back(std::move(next));
      out.length_.push_back(out.length_[u] + 1);
      out.parent_.push_back(u);
      out.generator_.push_back(j);
    }
  }
  return out;
}

}  // namespace parastab
