#include "sppq/grid.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace sppq {

namespace {

// Weakly decreasing sequences in [0, top]^len in lexicographic ascending order.
void ascend(std::vector<Int>& prefix, std::size_t len, Int top, std::vector<Int>& out) {
  if (prefix.size() == len) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    return;
  }
  for (Int x = 0; x <= top; ++x) {
    prefix.push_back(x);
    ascend(prefix, len, x, out);
    prefix.pop_back();
  }
}

std::vector<Int> block_sums(const std::vector<Int>& flat, std::size_t len) {
  std::vector<Int> out(flat.size() / len);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::accumulate(flat.begin() + i * len, flat.begin() + (i + 1) * len, Int{0});
  }
  return out;
}

}  // namespace

SweepGrid SweepGrid::with_default_cap(const GroupShape& shape) {
  return SweepGrid{shape, 2 * Int{shape.q()} + 2, true};
}

WeightEnumeration::WeightEnumeration(const SweepGrid& grid)
    : p_(grid.shape.p()), q_(grid.shape.q()) {
  require_standard(grid.shape);
  if (grid.cap < 1) throw std::invalid_argument("grid cap must be at least 1");
  std::vector<Int> prefix;
  ascend(prefix, p_, grid.cap, heads_);
  ascend(prefix, q_, grid.cap, tails_);

  const std::vector<Int> head_sum = block_sums(heads_, p_);
  const std::vector<Int> tail_sum = block_sums(tails_, q_);
  const Int max_tail_sum = grid.cap * static_cast<Int>(q_);
  std::vector<std::vector<std::uint32_t>> tails_by_sum(max_tail_sum + 1);
  for (std::uint32_t t = 0; t < tail_sum.size(); ++t) tails_by_sum[tail_sum[t]].push_back(t);

  const std::uint64_t total = std::uint64_t{head_sum.size()} * tail_sum.size();
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("sweep grid too large");
  }
  order_.reserve(total);
  const Int max_total = grid.cap * static_cast<Int>(p_ + q_);
  for (Int s = 0; s <= max_total; ++s) {
    for (std::uint32_t h = 0; h < head_sum.size(); ++h) {
      const Int rest = s - head_sum[h];
      if (rest < 0 || rest > max_tail_sum) continue;
      for (std::uint32_t t : tails_by_sum[rest]) order_.emplace_back(h, t);
    }
  }
}

KWeight WeightEnumeration::at(std::uint64_t index) const {
  const auto h = head(index);
  const auto t = tail(index);
  return KWeight(std::vector<Int>(h.begin(), h.end()), std::vector<Int>(t.begin(), t.end()));
}

}  // namespace sppq
