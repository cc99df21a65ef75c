#include "hhm/damek_ricci.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hhm/errors.hpp"

namespace hhm {

namespace {

constexpr std::array<std::uint64_t, 8> kBaseDims = {2, 4, 4, 8, 8, 8, 8, 16};

constexpr std::uint64_t module_dim(int m) {
  const int block = (m - 1) / 8;
  const std::uint64_t base = kBaseDims[static_cast<std::size_t>((m - 1) % 8)];
  // base <= 2^4, each block multiplies by 2^4.
  if (4 * block + 4 > 63) return std::numeric_limits<std::uint64_t>::max();
  return base << (4 * block);
}

// d_m > 2m on 9..16, and d_m > 2m implies d_{m+8} = 16 d_m > 32 m >= 2(m+8),
// so k = 2m is inadmissible for every m >= 9.
constexpr bool second_block_exceeds_linear() {
  for (int m = 9; m <= 16; ++m) {
    if (module_dim(m) <= static_cast<std::uint64_t>(2 * m)) return false;
  }
  return true;
}
static_assert(second_block_exceeds_linear());

void require_positive(int k, int m) {
  if (k < 1 || m < 1) throw DomainError("Damek-Ricci data requires k >= 1 and m >= 1");
}

}  // namespace

std::uint64_t irreducible_module_dim(int m) {
  if (m < 1) throw DomainError("irreducible_module_dim: m must be >= 1");
  return module_dim(m);
}

bool is_admissible(int k, int m) {
  require_positive(k, m);
  return static_cast<std::uint64_t>(k) % irreducible_module_dim(m) == 0;
}

DamekRicciSpace dr_space(int k, int m) {
  if (!is_admissible(k, m)) {
    throw NotAdmissible("(k=" + std::to_string(k) + ", m=" + std::to_string(m) + ") is not admissible: d_m = " +
                        std::to_string(irreducible_module_dim(m)) + " does not divide k");
  }
  if (k > std::numeric_limits<int>::max() - m - 1) throw DomainError("dr_space: dimension overflows int");
  const int n = k + m + 1;
  return {k, m, n, ModelParams(n, 1.0, m + 0.5 * k)};
}

double dr_normalized_entropy(int k, int m) {
  dr_space(k, m);
  const double kd = k;
  const double md = m;
  return (md + 0.5 * kd) * std::sqrt((kd + md) / (0.25 * kd + md));
}

std::vector<LowerBoundCase> enumerate_lower_bound(int max_m) {
  if (max_m < 8) throw DomainError("enumerate_lower_bound: max_m must be >= 8");
  std::vector<LowerBoundCase> out;
  for (int m = 1; m <= max_m; ++m) {
    const std::uint64_t d = irreducible_module_dim(m);
    if (m >= 9 && d <= static_cast<std::uint64_t>(2 * m)) {
      throw std::logic_error("Clifford dimension table violates d_m > 2m at m = " + std::to_string(m));
    }
    if (static_cast<std::uint64_t>(2 * m) % d == 0) out.push_back({m, 2 * m});
  }
  return out;
}

EnumeratedSpace describe_space(const DamekRicciSpace& s, double tol) {
  const Normalization norm = normalize_ricci(s.model);
  return {s, dr_normalized_entropy(s.k, s.m), classify_bounds(norm.model, tol)};
}

std::vector<EnumeratedSpace> enumerate_spaces(int max_m, int max_j, double tol) {
  if (max_m < 1 || max_j < 1) throw DomainError("enumerate_spaces: max_m and max_j must be >= 1");
  std::vector<EnumeratedSpace> out;
  for (int m = 1; m <= max_m; ++m) {
    const std::uint64_t d = irreducible_module_dim(m);
    for (int j = 1; j <= max_j; ++j) {
      if (d > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / j)) {
        throw DomainError("enumerate_spaces: k = j*d_m overflows int at m = " + std::to_string(m));
      }
      out.push_back(describe_space(dr_space(j * static_cast<int>(d), m), tol));
    }
  }
  return out;
}

}  // namespace hhm
