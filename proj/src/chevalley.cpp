#include "parastab/chevalley.hpp"

#include <algorithm>
#include <charconv>

namespace parastab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CharMode CharMode::positive(int p) {
  if (!is_prime(p)) throw InputError("characteristic must be 0 or a prime, got " + std::to_string(p));
  return CharMode(p);
}

CharMode CharMode::parse(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("characteristic must be an integer, got '" + text + "'");
  return value == 0 ? zero() : positive(value);
}

namespace {

void require_distinct(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.index_of(alpha);
  rs.index_of(beta);
  if (alpha == beta || alpha == -beta)
    throw InputError("root string undefined for beta = +-alpha");
}

int walk(const RootSystem& rs, const Root& alpha, const Root& step) {
  int m = 0;
  Root cur = alpha + step;
  while (rs.contains(cur.coords)) {
    ++m;
    cur = cur + step;
  }
  return m;
}

}  // namespace

StringData root_string(const RootSystem& rs, const Root& alpha, const Root& beta) {
  require_distinct(rs, alpha, beta);
  return StringData{alpha, beta, walk(rs, alpha, -beta), walk(rs, alpha, beta)};
}

int root_string_down(const RootSystem& rs, const Root& alpha, const Root& beta) {
  require_distinct(rs, alpha, beta);
  return walk(rs, alpha, -beta);
}

int structure_constant_magnitude(const RootSystem& rs, const Root& alpha, const Root& beta) {
  const int p = root_string_down(rs, alpha, beta);
  return rs.contains((alpha + beta).coords) ? p + 1 : 0;
}

std::int64_t divided_power_coefficient(const RootSystem& rs, const Root& alpha, const Root& beta,
                                       int k) {
  if (k < 1) throw InputError("divided power order must be positive");
  const int p = root_string_down(rs, alpha, beta);
  if (!rs.contains((alpha + k * beta).coords))
    throw InputError("alpha + k beta is not a root");
  std::int64_t c = 1;  // binomial(p + k, k)
  for (int i = 1; i <= k; ++i) c = c * (p + i) / i;
  return c;
}

int min_admissible_char(const RootSystem& rs) {
  int bound = 0;
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (a != b) bound = std::max(bound, rs.pairing(rs.to_weight(rs.root(b)), a));
  int p = bound + 1;
  while (!is_prime(p)) ++p;
  return p;
}

int min_admissible_char(const SimpleType& t) {
  return min_admissible_char(RootSystem::build(t));
}

bool is_admissible(const SimpleType& t, int p) {
  return is_prime(p) && p >= min_admissible_char(t);
}

}  // namespace parastab
