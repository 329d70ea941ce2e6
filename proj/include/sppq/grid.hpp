#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sppq/weights.hpp"

namespace sppq {

/// All K-weights of a shape with a_1 <= cap and b_1 <= cap.
struct SweepGrid {
  GroupShape shape;
  Int cap;
  bool require_mu_minus_beta_dominant = true;

  /// cap = 2q + 2
  static SweepGrid with_default_cap(const GroupShape& shape);
};

/// The grid in canonical order: coordinate sum ascending, then lexicographic
/// ascending. A position in this order is the checkpoint token.
class WeightEnumeration {
 public:
  /// Throws std::invalid_argument for cap < 1 or a nonstandard shape.
  explicit WeightEnumeration(const SweepGrid& grid);

  std::uint64_t size() const { return order_.size(); }

  std::span<const Int> head(std::uint64_t index) const {
    return head_block(order_[index].first);
  }
  std::span<const Int> tail(std::uint64_t index) const {
    return tail_block(order_[index].second);
  }
  KWeight at(std::uint64_t index) const;

 private:
  std::span<const Int> head_block(std::uint32_t i) const {
    return {heads_.data() + std::size_t{i} * p_, p_};
  }
  std::span<const Int> tail_block(std::uint32_t i) const {
    return {tails_.data() + std::size_t{i} * q_, q_};
  }

  std::size_t p_;
  std::size_t q_;
  std::vector<Int> heads_;  // lex ascending
  std::vector<Int> tails_;  // lex ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_;
};

}  // namespace sppq
