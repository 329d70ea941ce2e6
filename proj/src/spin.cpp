#include "sppq/spin.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "sppq/hull.hpp"

namespace sppq {

namespace {

constexpr std::size_t kMaxBlock = 64;

// Residual of v against one Omega element, written into caller buffers.
struct Residual {
  std::array<Int, kMaxBlock> head;
  std::array<Int, kMaxBlock> tail;
  std::size_t p;
  std::size_t q;

  void fill(const BlockVector& v, const OmegaTable& table, std::size_t ell) {
    const auto kh = table.head(ell);
    const auto kt = table.tail(ell);
    for (std::size_t i = 0; i < p; ++i) head[i] = v.head()[i] - kh[i];
    for (std::size_t j = 0; j < q; ++j) tail[j] = v.tail()[j] - kt[j];
  }
  Int k_value() const {
    return k_value_sq(std::span<const Int>(head.data(), p), std::span<const Int>(tail.data(), q));
  }
};

void require_table_shape(const OmegaTable& table, const BlockVector& v) {
  if (!(table.shape() == v.shape())) {
    throw std::invalid_argument("weight shape " + to_string(v.shape()) +
                                " does not match Omega table " + to_string(table.shape()));
  }
  if (static_cast<std::size_t>(v.shape().q()) > kMaxBlock) {
    throw std::invalid_argument("block size above " + std::to_string(kMaxBlock));
  }
}

int count_abs(std::span<const Int> block, bool strict, bool skip_first) {
  const Int pivot = std::abs(block[0]);
  int count = 0;
  for (std::size_t i = skip_first ? 1 : 0; i < block.size(); ++i) {
    const Int x = std::abs(block[i]);
    if (strict ? x > pivot : x >= pivot) ++count;
  }
  return count;
}

}  // namespace

SpinResult spin_norm(const OmegaTable& table, const BlockVector& v) {
  require_table_shape(table, v);
  Residual r{{}, {}, static_cast<std::size_t>(v.shape().p()),
             static_cast<std::size_t>(v.shape().q())};
  SpinResult out{0, {}, 0};
  for (std::size_t ell = 0; ell < table.size(); ++ell) {
    r.fill(v, table, ell);
    const Int value = r.k_value();
    if (out.argmin_indices.empty() || value < out.spin_norm_sq) {
      out.spin_norm_sq = value;
      out.argmin_indices.assign(1, ell);
    } else if (value == out.spin_norm_sq) {
      out.argmin_indices.push_back(ell);
    }
  }
  out.first_argmin = out.argmin_indices.front();
  return out;
}

SpinResult spin_norm(const BlockVector& v) { return spin_norm(omega_table(v.shape()), v); }

SpinResult spin_norm(const KWeight& mu) { return spin_norm(mu.vector()); }

std::vector<Int> residual_k_values(const KWeight& mu) {
  const OmegaTable& table = omega_table(mu.shape());
  require_table_shape(table, mu.vector());
  Residual r{{}, {}, static_cast<std::size_t>(mu.shape().p()),
             static_cast<std::size_t>(mu.shape().q())};
  std::vector<Int> out;
  out.reserve(table.size());
  for (std::size_t ell = 0; ell < table.size(); ++ell) {
    r.fill(mu.vector(), table, ell);
    out.push_back(r.k_value());
  }
  return out;
}

DeficiencyProfile deficiency_profile(const KWeight& mu, std::size_t ell) {
  const OmegaTable& table = omega_table(mu.shape());
  if (ell >= table.size()) {
    throw std::out_of_range("Omega index " + std::to_string(ell) + " out of range (size " +
                            std::to_string(table.size()) + ")");
  }
  const auto kh = table.head(ell);
  const auto kt = table.tail(ell);
  BlockVector residual =
      subtract(mu.vector(), BlockVector({kh.begin(), kh.end()}, {kt.begin(), kt.end()}));
  const BlockVector lowered = shift_beta(residual, -1);
  const auto m = residual.head();
  const auto nn = residual.tail();
  DeficiencyProfile out{
      ell,
      residual,
      count_abs(m, false, true),
      count_abs(nn, false, true),
      count_abs(m, true, false),
      count_abs(nn, true, false),
      k_value_sq(residual),
      k_value_sq(lowered),
      false,
  };
  out.deficient = out.k_value_sq <= out.k_value_sq_beta;
  return out;
}

std::optional<Int> deficiency_delta_formula(const DeficiencyProfile& profile,
                                            const GroupShape& shape) {
  const Int m1 = profile.residual.head()[0];
  const Int n1 = profile.residual.tail()[0];
  const Int p = shape.p(), q = shape.q();
  if (m1 >= 1 && n1 <= 0) {
    return 2 * ((std::abs(n1) - std::abs(m1)) + (q - p) + (profile.M - profile.N_plus) + 1);
  }
  if (m1 <= 0 && n1 >= 1) {
    return 2 * ((std::abs(m1) - std::abs(n1)) + (p - q) + (profile.N - profile.M_plus) + 1);
  }
  return std::nullopt;
}

std::vector<std::size_t> deficient_indices(const KWeight& mu) {
  const OmegaTable& table = omega_table(mu.shape());
  std::vector<std::size_t> out;
  for (std::size_t ell = 0; ell < table.size(); ++ell) {
    if (deficiency_profile(mu, ell).deficient) out.push_back(ell);
  }
  return out;
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::Basic: return "Basic";
    case Region::LargeB: return "LargeB";
    case Region::LargeA: return "LargeA";
    case Region::RBig: return "RBig";
    case Region::LBig: return "LBig";
    case Region::BoundaryR: return "BoundaryR";
    case Region::BoundaryL: return "BoundaryL";
    case Region::USmallOrOther: return "USmallOrOther";
  }
  return "?";
}

bool is_r_weight(const KWeight& mu) {
  return mu.a1() <= mu.shape().q() && mu.b1() >= mu.shape().p() + 1;
}

bool is_l_weight(const KWeight& mu) {
  return mu.a1() >= mu.shape().q() + 1 && mu.b1() <= mu.shape().p();
}

bool is_boundary_r(const KWeight& mu) {
  const Int p = mu.shape().p(), q = mu.shape().q(), a1 = mu.a1(), b1 = mu.b1();
  return q >= a1 && a1 >= 1 && 2 * p >= b1 && b1 >= p + 1 && a1 + b1 <= 2 * p + q - 1;
}

bool is_boundary_l(const KWeight& mu) {
  const Int p = mu.shape().p(), q = mu.shape().q(), a1 = mu.a1(), b1 = mu.b1();
  return 2 * q >= a1 && a1 >= q + 1 && p >= b1 && b1 >= 1 && a1 + b1 <= p + 2 * q - 1;
}

Region classify_region(const KWeight& mu) {
  if (is_u_small(mu)) return Region::USmallOrOther;
  const Int p = mu.shape().p(), q = mu.shape().q(), a1 = mu.a1(), b1 = mu.b1();
  if (a1 >= q + 1 && b1 >= p + 1) return Region::Basic;
  if (b1 >= 2 * p + 1) return Region::LargeB;
  if (a1 >= 2 * q + 1) return Region::LargeA;
  if (is_r_weight(mu) && a1 + b1 >= 2 * p + q) return Region::RBig;
  if (is_l_weight(mu) && a1 + b1 >= p + 2 * q) return Region::LBig;
  if (is_boundary_r(mu)) return Region::BoundaryR;
  if (is_boundary_l(mu)) return Region::BoundaryL;
  return Region::USmallOrOther;
}

}  // namespace sppq
