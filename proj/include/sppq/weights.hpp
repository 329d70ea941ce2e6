#pragma once

// Blockwise integer weights for Sp(p,q): a p-block ("head") and a q-block
// ("tail"). The compact Weyl group W(C_p) x W(C_q) acts by signed
// permutations inside each block, so every normalization here is blockwise.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sppq {

using Int = std::int64_t;

class GroupShape {
 public:
  /// Throws std::invalid_argument unless p >= 1 and q >= 1.
  GroupShape(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  /// The standing assumption p <= q for Sp(p,q).
  bool standard() const { return p_ <= q_; }

  friend bool operator==(const GroupShape&, const GroupShape&) = default;

 private:
  int p_;
  int q_;
};

/// Throws std::invalid_argument when p > q.
void require_standard(const GroupShape& shape);

std::string to_string(const GroupShape& shape);

class BlockVector {
 public:
  /// Shape is inferred from the block lengths. Every entry must satisfy
  /// |x| + max(p,q) < 2^31 so squared norms accumulate safely in 64 bits.
  BlockVector(std::vector<Int> head, std::vector<Int> tail);

  static BlockVector zero(const GroupShape& shape);

  const GroupShape& shape() const { return shape_; }
  std::span<const Int> head() const { return head_; }
  std::span<const Int> tail() const { return tail_; }

  /// Concatenated (head | tail) coordinates.
  std::vector<Int> flat() const;
  static BlockVector from_flat(const GroupShape& shape, std::span<const Int> coords);

  friend bool operator==(const BlockVector&, const BlockVector&) = default;

 private:
  GroupShape shape_;
  std::vector<Int> head_;
  std::vector<Int> tail_;
};

/// Both blocks weakly decreasing. Signs are not examined.
bool is_k_dominant(const BlockVector& v);

/// Dominant and nonnegative: the highest weight of a K-type.
bool is_k_weight(const BlockVector& v);

/// Highest weight (a_1..a_p | b_1..b_q) of a K-type.
class KWeight {
 public:
  /// Throws std::invalid_argument unless is_k_weight(v).
  explicit KWeight(BlockVector v);
  KWeight(std::vector<Int> a, std::vector<Int> b);

  const BlockVector& vector() const { return v_; }
  const GroupShape& shape() const { return v_.shape(); }
  std::span<const Int> a() const { return v_.head(); }
  std::span<const Int> b() const { return v_.tail(); }
  Int a1() const { return v_.head()[0]; }
  Int b1() const { return v_.tail()[0]; }

  friend bool operator==(const KWeight&, const KWeight&) = default;

 private:
  BlockVector v_;
};

struct RhoConstants {
  BlockVector rho;
  BlockVector rho_c;
  BlockVector rho_n0;
  BlockVector beta;
};

RhoConstants rho_constants(const GroupShape& shape);

/// Throws std::invalid_argument on shape mismatch.
BlockVector subtract(const BlockVector& v, const BlockVector& w);
BlockVector add(const BlockVector& v, const BlockVector& w);

/// v + m*beta.
BlockVector shift_beta(const BlockVector& v, Int m);

/// {v}: absolute values sorted weakly decreasing inside each block.
BlockVector normalize(const BlockVector& v);

/// Squared Euclidean norm of {v} + rho_c.
Int k_value_sq(const BlockVector& v);

/// Hot-path form over raw blocks; rho_c is implied by the block lengths.
Int k_value_sq(std::span<const Int> head, std::span<const Int> tail);

/// Squared norm of {block} + (len, len-1, ..., 1).
Int block_k_value_sq(std::span<const Int> block);

/// u >> v: coordinatewise >= with at least one strict inequality.
bool dominates(const BlockVector& u, const BlockVector& v);

Int coordinate_sum(const BlockVector& v);

/// Squared norm of rho_c, the smallest possible k-value.
Int rho_c_norm_sq(const GroupShape& shape);

/// Parses `a1,...,ap|b1,...,bq` (whitespace ignored). Throws
/// std::invalid_argument on malformed input.
BlockVector parse_weight(std::string_view literal);

/// Inverse of parse_weight, without spaces: `6,5,5|7,6,6,6,6`.
std::string format_weight(const BlockVector& v);

}  // namespace sppq
