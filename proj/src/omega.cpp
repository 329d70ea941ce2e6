#include "sppq/omega.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sppq {

namespace {

void require_head(const GroupShape& shape, std::span<const Int> head) {
  if (static_cast<int>(head.size()) != shape.p()) {
    throw std::invalid_argument("head must have p entries");
  }
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] < 0 || head[i] > shape.q() || (i > 0 && head[i] > head[i - 1])) {
      throw std::invalid_argument("head must be weakly decreasing in [0, q]");
    }
  }
}

// Weakly decreasing sequences in [0, top]^len, emitted in descending lex order.
void descend(std::vector<Int>& prefix, int len, Int top, std::vector<Int>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    return;
  }
  for (Int x = top; x >= 0; --x) {
    prefix.push_back(x);
    descend(prefix, len, x, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Int> tail_by_counting(const GroupShape& shape, std::span<const Int> head) {
  require_head(shape, head);
  std::vector<Int> tail(shape.q(), 0);
  for (int j = 1; j <= shape.q(); ++j) {
    for (Int k : head) {
      if (shape.q() - k >= j) ++tail[j - 1];
    }
  }
  return tail;
}

std::vector<Int> tail_from_head(const GroupShape& shape, std::span<const Int> head) {
  require_head(shape, head);
  const int p = shape.p();
  std::vector<Int> tail;
  tail.reserve(shape.q());
  for (int j = 1; j <= p + 1; ++j) {
    const Int upper = j == 1 ? shape.q() : head[j - 2];
    const Int lower = j == p + 1 ? 0 : head[j - 1];
    tail.insert(tail.end(), upper - lower, p - j + 1);
  }
  assert(tail == tail_by_counting(shape, head));
  return tail;
}

OmegaTable::OmegaTable(const GroupShape& shape) : shape_(shape) {
  require_standard(shape_);
  std::vector<Int> prefix;
  descend(prefix, shape_.p(), shape_.q(), heads_);
  size_ = heads_.size() / shape_.p();
  tails_.reserve(size_ * shape_.q());
  for (std::size_t i = 0; i < size_; ++i) {
    const std::vector<Int> t = tail_from_head(shape_, head(i));
    tails_.insert(tails_.end(), t.begin(), t.end());
  }
}

OmegaElement OmegaTable::element(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("Omega index out of range");
  const auto h = head(index);
  const auto t = tail(index);
  return OmegaElement{shape_, static_cast<int>(index), {h.begin(), h.end()}, {t.begin(), t.end()}};
}

std::optional<std::size_t> OmegaTable::index_of(std::span<const Int> head) const {
  if (static_cast<int>(head.size()) != shape_.p()) return std::nullopt;
  std::size_t lo = 0, hi = size_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto h = this->head(mid);
    if (std::lexicographical_compare(head.begin(), head.end(), h.begin(), h.end())) {
      lo = mid + 1;  // target is lex-smaller, so it comes later
    } else {
      hi = mid;
    }
  }
  if (lo < size_ && std::ranges::equal(this->head(lo), head)) return lo;
  return std::nullopt;
}

std::optional<std::size_t> OmegaTable::index_of_tail(std::span<const Int> tail) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (std::ranges::equal(this->tail(i), tail)) return i;
  }
  return std::nullopt;
}

const OmegaTable& omega_table(const GroupShape& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const OmegaTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{shape.p(), shape.q()}];
  if (!slot) slot = std::make_unique<const OmegaTable>(shape);
  return *slot;
}

std::vector<OmegaElement> enumerate_omega(const GroupShape& shape) {
  const OmegaTable& table = omega_table(shape);
  std::vector<OmegaElement> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out.push_back(table.element(i));
  return out;
}

std::optional<std::size_t> index_of(const GroupShape& shape, std::span<const Int> head) {
  return omega_table(shape).index_of(head);
}

OmegaElement descent(const OmegaElement& e, int j) {
  const int p = e.shape.p(), q = e.shape.q();
  if (j < 1 || j > p) throw std::invalid_argument("descent position out of range");
  const Int kj = e.head[j - 1];
  const Int next = j == p ? 0 : e.head[j];
  if (kj <= next) {
    throw std::invalid_argument("descent needs k_j > k_{j+1}");
  }
  OmegaElement out = e;
  out.head[j - 1] -= 1;
  out.tail[q - kj] += 1;  // position q - k_j + 1, 1-based
  const auto index = omega_table(e.shape).index_of(out.head);
  if (!index) throw std::logic_error("descent left Omega");
  out.index = static_cast<int>(*index);
  return out;
}

}  // namespace sppq
