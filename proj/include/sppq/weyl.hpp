#pragma once

// Coset representatives W(g,t)^1: the words s_{p,i_p} ... s_{1,i_1} with
// 1 <= i_1 < ... < i_p <= n, where s_{i,j} is the product of the adjacent
// transpositions s_{e_i-e_{i+1}} ... s_{e_{j-1}-e_j}. This is the Weyl-group
// route to the set of rho_n's, kept independent of the direct enumeration in
// omega.hpp so the two can be checked against each other.

#include <span>
#include <vector>

#include "sppq/weights.hpp"

namespace sppq {

struct FundamentalWeight {
  int index;                ///< 1 <= j <= n
  std::vector<Int> vector;  ///< first j entries 1, rest 0

  static FundamentalWeight make(const GroupShape& shape, int j);
};

class WeylWord {
 public:
  /// `subset` is 1-based and strictly increasing with p entries in [1, n].
  /// Throws std::invalid_argument otherwise.
  WeylWord(const GroupShape& shape, std::vector<int> subset);

  const GroupShape& shape() const { return shape_; }
  std::span<const int> subset() const { return subset_; }

  /// 0-based image map: coordinate t of the input lands at position perm()[t].
  std::span<const int> perm() const { return perm_; }

  /// output[perm(t)] = input[t]. Throws std::invalid_argument on length mismatch.
  std::vector<Int> apply(std::span<const Int> v) const;

  bool is_identity() const;

 private:
  GroupShape shape_;
  std::vector<int> subset_;
  std::vector<int> perm_;
};

/// All C(n,p) words, ordered by subset lexicographically.
std::vector<WeylWord> generate_w1(const GroupShape& shape);

/// Shared immutable copy of generate_w1, built once per shape.
const std::vector<WeylWord>& w1_table(const GroupShape& shape);

/// w.rho - rho_c, split into blocks.
BlockVector rho_n_of_word(const WeylWord& w);

/// Every rho_n_of_word, sorted into descending lexicographic order.
std::vector<BlockVector> omega_via_weyl(const GroupShape& shape);

}  // namespace sppq
