#include "sppq/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sppq {

namespace {

// Applies s_{i,j} (1-based, i <= j) to an arrangement of coordinate labels.
// The rightmost factor s_{e_{j-1}-e_j} acts first.
void apply_cycle(std::vector<int>& slots, int i, int j) {
  for (int a = j - 1; a >= i; --a) {
    std::swap(slots[a - 1], slots[a]);
  }
}

}  // namespace

FundamentalWeight FundamentalWeight::make(const GroupShape& shape, int j) {
  if (j < 1 || j > shape.n()) {
    throw std::invalid_argument("fundamental weight index out of range");
  }
  std::vector<Int> v(shape.n(), 0);
  std::fill(v.begin(), v.begin() + j, 1);
  return FundamentalWeight{j, std::move(v)};
}

WeylWord::WeylWord(const GroupShape& shape, std::vector<int> subset)
    : shape_(shape), subset_(std::move(subset)) {
  const int p = shape_.p(), n = shape_.n();
  if (static_cast<int>(subset_.size()) != p) {
    throw std::invalid_argument("a W^1 word needs exactly p indices");
  }
  for (int k = 0; k < p; ++k) {
    const int lo = k == 0 ? 1 : subset_[k - 1] + 1;
    if (subset_[k] < lo || subset_[k] > n) {
      throw std::invalid_argument("W^1 indices must satisfy 1 <= i_1 < ... < i_p <= n");
    }
  }

  // slots[pos] = label of the input coordinate that ends up at pos.
  std::vector<int> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  for (int k = 1; k <= p; ++k) {
    apply_cycle(slots, k, subset_[k - 1]);
  }
  perm_.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) perm_[slots[pos]] = pos;
}

std::vector<Int> WeylWord::apply(std::span<const Int> v) const {
  if (v.size() != perm_.size()) {
    throw std::invalid_argument("vector length does not match the word");
  }
  std::vector<Int> out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[perm_[t]] = v[t];
  return out;
}

bool WeylWord::is_identity() const {
  for (std::size_t t = 0; t < perm_.size(); ++t) {
    if (perm_[t] != static_cast<int>(t)) return false;
  }
  return true;
}

std::vector<WeylWord> generate_w1(const GroupShape& shape) {
  require_standard(shape);
  const int p = shape.p(), n = shape.n();
  std::vector<WeylWord> words;
  std::vector<int> subset(p);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    words.emplace_back(shape, subset);
    int k = p - 1;
    while (k >= 0 && subset[k] == n - (p - 1 - k)) --k;
    if (k < 0) break;
    ++subset[k];
    for (int t = k + 1; t < p; ++t) subset[t] = subset[t - 1] + 1;
  }
  return words;
}

const std::vector<WeylWord>& w1_table(const GroupShape& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<WeylWord>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{shape.p(), shape.q()}];
  if (!slot) slot = std::make_unique<const std::vector<WeylWord>>(generate_w1(shape));
  return *slot;
}

BlockVector rho_n_of_word(const WeylWord& w) {
  const RhoConstants rc = rho_constants(w.shape());
  const std::vector<Int> moved = w.apply(rc.rho.flat());
  return subtract(BlockVector::from_flat(w.shape(), moved), rc.rho_c);
}

std::vector<BlockVector> omega_via_weyl(const GroupShape& shape) {
  std::vector<BlockVector> out;
  for (const WeylWord& w : generate_w1(shape)) out.push_back(rho_n_of_word(w));
  std::sort(out.begin(), out.end(), [](const BlockVector& x, const BlockVector& y) {
    return x.flat() > y.flat();
  });
  return out;
}

}  // namespace sppq
