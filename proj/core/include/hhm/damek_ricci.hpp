#pragma once

#include <cstdint>
#include <vector>

#include "hhm/model.hpp"

namespace hhm {

/// Dimension d_m of an irreducible module over the Clifford algebra of a
/// negative definite form on R^m: d_1..d_8 = 2,4,4,8,8,8,8,16 and
/// d_{m+8} = 16 d_m. Saturates at UINT64_MAX for very large m.
std::uint64_t irreducible_module_dim(int m);

/// True iff d_m divides k.
bool is_admissible(int k, int m);

struct DamekRicciSpace {
  int k;  // dim v
  int m;  // dim z
  int n;  // k + m + 1
  ModelParams model;  // (n, 1, m + k/2)
};

/// Throws NotAdmissible.
DamekRicciSpace dr_space(int k, int m);

/// (m + k/2) sqrt((k+m)/(k/4+m)), the entropy after Ric = -(n-1).
double dr_normalized_entropy(int k, int m);

struct LowerBoundCase {
  int m;
  int k;
  friend bool operator==(const LowerBoundCase&, const LowerBoundCase&) = default;
};

/// All admissible (m, k = 2m) with m <= max_m. Requires max_m >= 8 so the
/// answer cannot be silently truncated.
std::vector<LowerBoundCase> enumerate_lower_bound(int max_m);

struct EnumeratedSpace {
  DamekRicciSpace space;
  double normalized_entropy;
  BoundClassification bounds;
};

/// Admissible (k = j d_m, m) for m <= max_m, j <= max_j, ordered by (m, j).
EnumeratedSpace describe_space(const DamekRicciSpace& s, double tol = kDefaultBoundTolerance);
std::vector<EnumeratedSpace> enumerate_spaces(int max_m, int max_j, double tol = kDefaultBoundTolerance);

}  // namespace hhm
