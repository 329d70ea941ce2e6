#pragma once

// Spin norm: the minimum over Omega_{p,q} of the k-value of mu - rho_n^{(l)}.
// Everything is kept squared and exact.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sppq/omega.hpp"
#include "sppq/weights.hpp"

namespace sppq {

struct SpinResult {
  Int spin_norm_sq;
  std::vector<std::size_t> argmin_indices;  ///< sorted, nonempty
  std::size_t first_argmin;
};

/// Full scan of the Omega table. Accepts any vector of the right shape; the
/// result is only meaningful as a spin norm for dominant weights.
SpinResult spin_norm(const OmegaTable& table, const BlockVector& v);
SpinResult spin_norm(const BlockVector& v);
SpinResult spin_norm(const KWeight& mu);

/// k_value_sq(mu - rho_n^{(l)}) for every l.
std::vector<Int> residual_k_values(const KWeight& mu);

/// Counts on the residual mu_l = (m_1..m_p | n_1..n_q):
///   M      = #{i != 1 : |m_i| >= |m_1|},  N      likewise on n,
///   M_plus = #{i : |m_i| > |m_1|},        N_plus likewise on n.
struct DeficiencyProfile {
  std::size_t ell;
  BlockVector residual;
  int M;
  int N;
  int M_plus;
  int N_plus;
  Int k_value_sq;       ///< of the residual
  Int k_value_sq_beta;  ///< of residual - beta
  bool deficient;       ///< k_value_sq <= k_value_sq_beta
};

/// Throws std::out_of_range for an invalid index.
DeficiencyProfile deficiency_profile(const KWeight& mu, std::size_t ell);

/// Closed-form k_value_sq(residual - beta) - k_value_sq(residual) in the two
/// sign cases (m_1 >= 1, n_1 <= 0) and (m_1 <= 0, n_1 >= 1); nullopt otherwise.
std::optional<Int> deficiency_delta_formula(const DeficiencyProfile& profile,
                                            const GroupShape& shape);

std::vector<std::size_t> deficient_indices(const KWeight& mu);

enum class Region {
  Basic,          ///< a_1 >= q+1 and b_1 >= p+1
  LargeB,         ///< b_1 >= 2p+1
  LargeA,         ///< a_1 >= 2q+1
  RBig,           ///< R-weight with a_1 + b_1 >= 2p+q
  LBig,           ///< L-weight with a_1 + b_1 >= p+2q
  BoundaryR,
  BoundaryL,
  USmallOrOther,
};

std::string_view region_name(Region r);

bool is_r_weight(const KWeight& mu);  ///< a_1 <= q, b_1 >= p+1
bool is_l_weight(const KWeight& mu);  ///< a_1 >= q+1, b_1 <= p

/// q >= a_1 >= 1, 2p >= b_1 >= p+1, a_1 + b_1 <= 2p+q-1.
bool is_boundary_r(const KWeight& mu);
/// 2q >= a_1 >= q+1, p >= b_1 >= 1, a_1 + b_1 <= p+2q-1.
bool is_boundary_l(const KWeight& mu);

/// First matching rule in the order of the enum. u-small weights always get
/// USmallOrOther.
Region classify_region(const KWeight& mu);

}  // namespace sppq
