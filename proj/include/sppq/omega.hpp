#pragma once

// Direct description of Omega_{p,q}, the set of rho_n^{(l)} for all positive
// systems containing the compact ones. An element (K | R) has a weakly
// decreasing head K in [0,q]^p; the tail R is determined by K. Elements are
// indexed by descending lexicographic order, index 0 = (q,...,q | 0,...,0).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sppq/weights.hpp"

namespace sppq {

struct OmegaElement {
  GroupShape shape;
  int index;
  std::vector<Int> head;  ///< k_1 >= ... >= k_p
  std::vector<Int> tail;  ///< r_1 >= ... >= r_q

  BlockVector vector() const { return BlockVector(head, tail); }
};

/// Tail by concatenating the blocks R(j) = (p-j+1, ..., p-j+1) of length
/// k_{j-1} - k_j, with k_0 = q and k_{p+1} = 0. Throws std::invalid_argument
/// if the head is not weakly decreasing in [0, q] or has the wrong length.
std::vector<Int> tail_from_head(const GroupShape& shape, std::span<const Int> head);

/// Same tail by r_j = #{i : q - k_i >= j}. Kept separate as a cross-check.
std::vector<Int> tail_by_counting(const GroupShape& shape, std::span<const Int> head);

/// Immutable table of Omega_{p,q}, stored flat.
class OmegaTable {
 public:
  explicit OmegaTable(const GroupShape& shape);

  const GroupShape& shape() const { return shape_; }
  std::size_t size() const { return size_; }

  std::span<const Int> head(std::size_t index) const {
    return {heads_.data() + index * shape_.p(), static_cast<std::size_t>(shape_.p())};
  }
  std::span<const Int> tail(std::size_t index) const {
    return {tails_.data() + index * shape_.q(), static_cast<std::size_t>(shape_.q())};
  }
  OmegaElement element(std::size_t index) const;

  /// Binary search over the descending head order.
  std::optional<std::size_t> index_of(std::span<const Int> head) const;

  /// Linear search by tail (tails also determine the element).
  std::optional<std::size_t> index_of_tail(std::span<const Int> tail) const;

 private:
  GroupShape shape_;
  std::size_t size_ = 0;
  std::vector<Int> heads_;
  std::vector<Int> tails_;
};

/// Cached per shape; built on first use, then shared read-only.
const OmegaTable& omega_table(const GroupShape& shape);

std::vector<OmegaElement> enumerate_omega(const GroupShape& shape);

std::optional<std::size_t> index_of(const GroupShape& shape, std::span<const Int> head);

/// The move L_{l,j}: head - e_j, tail + e_{q-k_j+1}. `j` is 1-based and
/// requires k_j > k_{j+1} (k_{p+1} = 0); throws std::invalid_argument otherwise.
OmegaElement descent(const OmegaElement& e, int j);

}  // namespace sppq
