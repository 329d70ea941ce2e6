#pragma once

// Membership in the unitarily small convex hull. A K-weight mu is u-large iff
// some 0<=f<=p, 0<=g<=q has
//
//   a_1 + ... + a_f + b_1 + ... + b_g  >  2pq - 2(p-f)(q-g).
//
// is_u_small_oracle evaluates the original Weyl-orbit criterion instead and
// serves only as a cross-check of the prefix-sum scan.

#include <cstdint>
#include <optional>
#include <vector>

#include "sppq/weights.hpp"

namespace sppq {

struct HullWitness {
  int f;
  int g;
  Int lhs;  ///< sum of the first f a's and first g b's
  Int rhs;  ///< 2pq - 2(p-f)(q-g)

  friend bool operator==(const HullWitness&, const HullWitness&) = default;
};

/// Lexicographically smallest (f, g) certifying u-largeness, if any.
std::optional<HullWitness> u_large_witness(const KWeight& mu);

/// Every witnessing (f, g), in lexicographic order.
std::vector<HullWitness> lambda_witnesses(const KWeight& mu);

bool is_u_small(const KWeight& mu);

/// <mu + 2rho_c, w xi_i> <= 2<rho, xi_i> for every i and every w in W^1.
bool is_u_small_oracle(const KWeight& mu);

/// mu_{f,g} = (a_1..a_f, q-g, ..., q-g | b_1..b_g, p-f, ..., p-f).
struct PaddedWeight {
  KWeight base;
  int f;
  int g;
  BlockVector vector;
};

PaddedWeight padded_weight(const KWeight& mu, int f, int g);

/// Smallest m >= 0 with mu + m*beta u-large.
Int pencil_first_u_large(const KWeight& mu);

struct PencilRow {
  Int m;
  bool u_small;
  Int spin_norm_sq;

  friend bool operator==(const PencilRow&, const PencilRow&) = default;
};

/// Rows for mu + m*beta, m = 0..m_max.
std::vector<PencilRow> pencil_profile(const KWeight& mu, Int m_max);

}  // namespace sppq
