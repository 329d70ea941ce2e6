#include "sppq/hull.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "sppq/spin.hpp"
#include "sppq/weyl.hpp"

namespace sppq {

namespace {

std::vector<Int> prefix_sums(std::span<const Int> block) {
  std::vector<Int> out(block.size() + 1, 0);
  for (std::size_t i = 0; i < block.size(); ++i) out[i + 1] = out[i] + block[i];
  return out;
}

template <typename Visit>
void scan_witnesses(const KWeight& mu, Visit visit) {
  const GroupShape& shape = mu.shape();
  require_standard(shape);
  const Int p = shape.p(), q = shape.q();
  const auto sa = prefix_sums(mu.a());
  const auto sb = prefix_sums(mu.b());
  for (Int f = 0; f <= p; ++f) {
    for (Int g = 0; g <= q; ++g) {
      const Int lhs = sa[f] + sb[g];
      const Int rhs = 2 * p * q - 2 * (p - f) * (q - g);
      if (lhs > rhs && !visit(HullWitness{static_cast<int>(f), static_cast<int>(g), lhs, rhs})) {
        return;
      }
    }
  }
}

}  // namespace

std::optional<HullWitness> u_large_witness(const KWeight& mu) {
  std::optional<HullWitness> found;
  scan_witnesses(mu, [&found](const HullWitness& w) {
    found = w;
    return false;
  });
  return found;
}

std::vector<HullWitness> lambda_witnesses(const KWeight& mu) {
  std::vector<HullWitness> all;
  scan_witnesses(mu, [&all](const HullWitness& w) {
    all.push_back(w);
    return true;
  });
  return all;
}

bool is_u_small(const KWeight& mu) { return !u_large_witness(mu).has_value(); }

namespace {

// Images w.xi_i for every word and every i, with the bounds 2<rho, xi_i>.
// Built once per shape; read-only afterwards.
struct OrbitPairings {
  std::vector<Int> images;  // (word, i) rows of length n, i = 1..n
  std::vector<Int> bound;   // bound[i - 1] = 2<rho, xi_i>
};

OrbitPairings build_pairings(const GroupShape& shape) {
  const int n = shape.n();
  const std::vector<Int> rho = rho_constants(shape).rho.flat();
  OrbitPairings out;
  for (int i = 1; i <= n; ++i) {
    const auto xi = FundamentalWeight::make(shape, i).vector;
    Int pair = 0;
    for (int t = 0; t < n; ++t) pair += rho[t] * xi[t];
    out.bound.push_back(2 * pair);
  }
  for (const WeylWord& w : w1_table(shape)) {
    for (int i = 1; i <= n; ++i) {
      const std::vector<Int> image = w.apply(FundamentalWeight::make(shape, i).vector);
      out.images.insert(out.images.end(), image.begin(), image.end());
    }
  }
  return out;
}

const OrbitPairings& pairings(const GroupShape& shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const OrbitPairings>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{shape.p(), shape.q()}];
  if (!slot) slot = std::make_unique<const OrbitPairings>(build_pairings(shape));
  return *slot;
}

}  // namespace

bool is_u_small_oracle(const KWeight& mu) {
  const GroupShape& shape = mu.shape();
  require_standard(shape);
  const int n = shape.n();
  const OrbitPairings& tables = pairings(shape);

  const std::vector<Int> rho_c = rho_constants(shape).rho_c.flat();
  std::vector<Int> shifted = mu.vector().flat();
  for (int t = 0; t < n; ++t) shifted[t] += 2 * rho_c[t];

  const std::size_t rows = tables.images.size() / n;
  for (std::size_t r = 0; r < rows; ++r) {
    const Int* image = tables.images.data() + r * n;
    Int pair = 0;
    for (int t = 0; t < n; ++t) pair += shifted[t] * image[t];
    if (pair > tables.bound[r % n]) return false;
  }
  return true;
}

PaddedWeight padded_weight(const KWeight& mu, int f, int g) {
  const int p = mu.shape().p(), q = mu.shape().q();
  if (f < 0 || f > p || g < 0 || g > q) {
    throw std::invalid_argument("padded weight needs 0 <= f <= p and 0 <= g <= q");
  }
  std::vector<Int> head(mu.a().begin(), mu.a().begin() + f);
  head.resize(p, q - g);
  std::vector<Int> tail(mu.b().begin(), mu.b().begin() + g);
  tail.resize(q, p - f);
  return PaddedWeight{mu, f, g, BlockVector(std::move(head), std::move(tail))};
}

Int pencil_first_u_large(const KWeight& mu) {
  for (Int m = 0;; ++m) {
    if (!is_u_small(KWeight(shift_beta(mu.vector(), m)))) return m;
  }
}

std::vector<PencilRow> pencil_profile(const KWeight& mu, Int m_max) {
  if (m_max < 0) throw std::invalid_argument("pencil length must be nonnegative");
  std::vector<PencilRow> rows;
  rows.reserve(m_max + 1);
  for (Int m = 0; m <= m_max; ++m) {
    const KWeight point(shift_beta(mu.vector(), m));
    rows.push_back(PencilRow{m, is_u_small(point), spin_norm(point).spin_norm_sq});
  }
  return rows;
}

}  // namespace sppq
