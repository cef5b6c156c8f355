#pragma once

// Root strings and the magnitudes of Chevalley-basis structure constants.
// Only magnitudes are computed: every consumer is a divisibility test mod p.

#include <cstdint>
#include <string>

#include "parastab/rootsys.hpp"

namespace parastab {

struct StringData {
  Root alpha;
  Root beta;
  int down_length = 0;  // max m with alpha - m beta a root
  int up_length = 0;    // max m with alpha + m beta a root
};

/// Characteristic of the ground field: zero, or a prime.
class CharMode {
 public:
  static CharMode zero() { return CharMode(0); }
  /// Throws InputError unless p is prime.
  static CharMode positive(int p);
  /// "0" or a prime.
  static CharMode parse(const std::string& text);

  bool is_zero() const { return p_ == 0; }
  int characteristic() const { return p_; }

  friend bool operator==(const CharMode&, const CharMode&) = default;

 private:
  explicit CharMode(int p) : p_(p) {}
  int p_;
};

bool is_prime(std::int64_t n);

StringData root_string(const RootSystem& rs, const Root& alpha, const Root& beta);

/// Max m >= 0 with alpha - m beta in R. Throws InputError if beta = +-alpha.
int root_string_down(const RootSystem& rs, const Root& alpha, const Root& beta);

/// |N_{beta,alpha}|: p + 1 when alpha + beta is a root, else 0.
int structure_constant_magnitude(const RootSystem& rs, const Root& alpha, const Root& beta);

/// Magnitude of the coefficient with which the k-th divided power of the root
/// group U_beta carries g^alpha to g^{alpha + k beta}: binomial(p + k, k).
/// Throws InputError unless alpha + k beta is a root.
std::int64_t divided_power_coefficient(const RootSystem& rs, const Root& alpha, const Root& beta,
                                       int k);

/// Smallest prime exceeding every <alpha^vee, beta> with alpha != beta.
int min_admissible_char(const SimpleType& t);
int min_admissible_char(const RootSystem& rs);
bool is_admissible(const SimpleType& t, int p);

}  // namespace parastab
