#include "sppq/weights.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace sppq {

namespace {

constexpr Int kEntryLimit = Int{1} << 31;

void check_entries(std::span<const Int> block, int slack) {
  for (Int x : block) {
    if (x >= kEntryLimit || x <= -kEntryLimit || std::abs(x) + slack >= kEntryLimit) {
      throw std::invalid_argument("weight entry " + std::to_string(x) + " is out of range");
    }
  }
}

void require_same_shape(const BlockVector& v, const BlockVector& w) {
  if (!(v.shape() == w.shape())) {
    throw std::invalid_argument("shape mismatch: " + to_string(v.shape()) + " vs " +
                                to_string(w.shape()));
  }
}

bool weakly_decreasing(std::span<const Int> block) {
  return std::is_sorted(block.begin(), block.end(), std::greater<>{});
}

template <typename Op>
BlockVector zip_blocks(const BlockVector& v, const BlockVector& w, Op op) {
  require_same_shape(v, w);
  std::vector<Int> head(v.head().size()), tail(v.tail().size());
  std::transform(v.head().begin(), v.head().end(), w.head().begin(), head.begin(), op);
  std::transform(v.tail().begin(), v.tail().end(), w.tail().begin(), tail.begin(), op);
  return BlockVector(std::move(head), std::move(tail));
}

std::vector<Int> sorted_abs(std::span<const Int> block) {
  std::vector<Int> out(block.size());
  std::transform(block.begin(), block.end(), out.begin(), [](Int x) { return std::abs(x); });
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

Int descending_rho_norm_sq(std::span<const Int> sorted) {
  Int total = 0;
  const auto len = static_cast<Int>(sorted.size());
  for (Int i = 0; i < len; ++i) {
    const Int c = sorted[i] + (len - i);
    total += c * c;
  }
  return total;
}

}  // namespace

GroupShape::GroupShape(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("block sizes must be positive, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
}

void require_standard(const GroupShape& shape) {
  if (!shape.standard()) {
    throw std::invalid_argument("Sp(p,q) requires p <= q, got " + to_string(shape));
  }
}

std::string to_string(const GroupShape& shape) {
  return "(p=" + std::to_string(shape.p()) + ", q=" + std::to_string(shape.q()) + ")";
}

BlockVector::BlockVector(std::vector<Int> head, std::vector<Int> tail)
    : shape_(static_cast<int>(head.size()), static_cast<int>(tail.size())),
      head_(std::move(head)),
      tail_(std::move(tail)) {
  const int slack = std::max(shape_.p(), shape_.q());
  check_entries(head_, slack);
  check_entries(tail_, slack);
}

BlockVector BlockVector::zero(const GroupShape& shape) {
  return BlockVector(std::vector<Int>(shape.p(), 0), std::vector<Int>(shape.q(), 0));
}

std::vector<Int> BlockVector::flat() const {
  std::vector<Int> out(head_);
  out.insert(out.end(), tail_.begin(), tail_.end());
  return out;
}

BlockVector BlockVector::from_flat(const GroupShape& shape, std::span<const Int> coords) {
  if (coords.size() != static_cast<std::size_t>(shape.n())) {
    throw std::invalid_argument("expected " + std::to_string(shape.n()) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  return BlockVector(std::vector<Int>(coords.begin(), coords.begin() + shape.p()),
                     std::vector<Int>(coords.begin() + shape.p(), coords.end()));
}

bool is_k_dominant(const BlockVector& v) {
  return weakly_decreasing(v.head()) && weakly_decreasing(v.tail());
}

bool is_k_weight(const BlockVector& v) {
  return is_k_dominant(v) && v.head().back() >= 0 && v.tail().back() >= 0;
}

KWeight::KWeight(BlockVector v) : v_(std::move(v)) {
  if (!is_k_weight(v_)) {
    throw std::invalid_argument("not a dominant nonnegative weight: " + format_weight(v_));
  }
}

KWeight::KWeight(std::vector<Int> a, std::vector<Int> b)
    : KWeight(BlockVector(std::move(a), std::move(b))) {}

RhoConstants rho_constants(const GroupShape& shape) {
  const int p = shape.p(), q = shape.q(), n = shape.n();
  std::vector<Int> rho_head(p), rho_tail(q), c_head(p), c_tail(q);
  for (int i = 0; i < p; ++i) {
    rho_head[i] = n - i;
    c_head[i] = p - i;
  }
  for (int j = 0; j < q; ++j) {
    rho_tail[j] = q - j;
    c_tail[j] = q - j;
  }
  std::vector<Int> beta_head(p, 0), beta_tail(q, 0);
  beta_head[0] = 1;
  beta_tail[0] = 1;
  return RhoConstants{
      BlockVector(std::move(rho_head), std::move(rho_tail)),
      BlockVector(std::move(c_head), std::move(c_tail)),
      BlockVector(std::vector<Int>(p, q), std::vector<Int>(q, 0)),
      BlockVector(std::move(beta_head), std::move(beta_tail)),
  };
}

BlockVector subtract(const BlockVector& v, const BlockVector& w) {
  return zip_blocks(v, w, std::minus<>{});
}

BlockVector add(const BlockVector& v, const BlockVector& w) {
  return zip_blocks(v, w, std::plus<>{});
}

BlockVector shift_beta(const BlockVector& v, Int m) {
  std::vector<Int> head(v.head().begin(), v.head().end());
  std::vector<Int> tail(v.tail().begin(), v.tail().end());
  head[0] += m;
  tail[0] += m;
  return BlockVector(std::move(head), std::move(tail));
}

BlockVector normalize(const BlockVector& v) {
  return BlockVector(sorted_abs(v.head()), sorted_abs(v.tail()));
}

Int block_k_value_sq(std::span<const Int> block) {
  // Small blocks avoid the heap; this sits in the innermost sweep loop.
  constexpr std::size_t kInline = 32;
  if (block.size() <= kInline) {
    std::array<Int, kInline> buf;
    auto out = buf.begin();
    for (Int x : block) *out++ = std::abs(x);
    // insertion sort, descending
    for (auto it = buf.begin() + 1; it < out; ++it) {
      const Int key = *it;
      auto j = it;
      while (j != buf.begin() && *(j - 1) < key) {
        *j = *(j - 1);
        --j;
      }
      *j = key;
    }
    return descending_rho_norm_sq(std::span<const Int>(buf.begin(), out));
  }
  return descending_rho_norm_sq(sorted_abs(block));
}

Int k_value_sq(std::span<const Int> head, std::span<const Int> tail) {
  return block_k_value_sq(head) + block_k_value_sq(tail);
}

Int k_value_sq(const BlockVector& v) { return k_value_sq(v.head(), v.tail()); }

bool dominates(const BlockVector& u, const BlockVector& v) {
  require_same_shape(u, v);
  bool strict = false;
  auto scan = [&strict](std::span<const Int> x, std::span<const Int> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return false;
      if (x[i] > y[i]) strict = true;
    }
    return true;
  };
  return scan(u.head(), v.head()) && scan(u.tail(), v.tail()) && strict;
}

Int coordinate_sum(const BlockVector& v) {
  Int s = 0;
  for (Int x : v.head()) s += x;
  for (Int x : v.tail()) s += x;
  return s;
}

Int rho_c_norm_sq(const GroupShape& shape) {
  auto squares = [](Int m) { return m * (m + 1) * (2 * m + 1) / 6; };
  return squares(shape.p()) + squares(shape.q());
}

namespace {

std::vector<Int> parse_block(std::string_view text, std::string_view literal) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                             : comma - pos);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed weight literal '" + std::string(literal) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

BlockVector parse_weight(std::string_view literal) {
  std::string compact;
  for (char c : literal) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') compact.push_back(c);
  }
  const std::size_t bar = compact.find('|');
  if (bar == std::string::npos || compact.find('|', bar + 1) != std::string::npos) {
    throw std::invalid_argument("weight literal '" + std::string(literal) +
                                "' needs exactly one '|'");
  }
  const std::string_view view(compact);
  return BlockVector(parse_block(view.substr(0, bar), literal),
                     parse_block(view.substr(bar + 1), literal));
}

std::string format_weight(const BlockVector& v) {
  std::string out;
  auto put = [&out](std::span<const Int> block) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  };
  put(v.head());
  out += '|';
  put(v.tail());
  return out;
}

}  // namespace sppq
