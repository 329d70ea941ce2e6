#include <doctest.h>

#include <algorithm>
#include <functional>

#include "sppq/omega.hpp"

using namespace sppq;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool weakly_decreasing_in(std::span<const Int> v, Int hi) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > hi) return false;
    if (i && v[i] > v[i - 1]) return false;
  }
  return true;
}

// Oracle: filter every (head | tail) in [0,q]^p x [0,p]^q by the three
// defining conditions, then sort descending.
std::vector<BlockVector> omega_by_filtering(const GroupShape& shape) {
  const int p = shape.p(), q = shape.q();
  std::vector<BlockVector> out;
  std::vector<Int> c(shape.n(), 0);
  while (true) {
    std::span<const Int> head(c.data(), p), tail(c.data() + p, q);
    bool ok = weakly_decreasing_in(head, q) && weakly_decreasing_in(tail, p);
    Int sum = 0;
    for (Int x : c) sum += x;
    ok = ok && sum == Int{p} * q;
    for (int j = 1; ok && j <= q; ++j) {
      Int count = 0;
      for (Int k : head) count += (q - k >= j);
      ok = count == tail[j - 1];
    }
    if (ok) out.push_back(BlockVector::from_flat(shape, c));
    int t = shape.n() - 1;
    while (t >= 0 && c[t] == (t < p ? q : p)) c[t--] = 0;
    if (t < 0) break;
    ++c[t];
  }
  std::sort(out.begin(), out.end(),
            [](const BlockVector& a, const BlockVector& b) { return a.flat() > b.flat(); });
  return out;
}

}  // namespace

TEST_CASE("tail_from_head anchors") {
  CHECK(tail_from_head(GroupShape(4, 6), std::vector<Int>{5, 2, 2, 1}) ==
        std::vector<Int>{4, 3, 3, 3, 1, 0});
  CHECK(tail_from_head(GroupShape(3, 5), std::vector<Int>{5, 5, 5}) ==
        std::vector<Int>{0, 0, 0, 0, 0});
  CHECK(tail_from_head(GroupShape(3, 5), std::vector<Int>{4, 0, 0}) ==
        std::vector<Int>{3, 2, 2, 2, 2});
  CHECK(tail_by_counting(GroupShape(4, 6), std::vector<Int>{5, 2, 2, 1}) ==
        std::vector<Int>{4, 3, 3, 3, 1, 0});
}

TEST_CASE("tail_from_head rejects malformed heads") {
  const GroupShape shape(2, 3);
  CHECK_THROWS_AS(tail_from_head(shape, std::vector<Int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tail_from_head(shape, std::vector<Int>{4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tail_from_head(shape, std::vector<Int>{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(tail_from_head(shape, std::vector<Int>{1}), std::invalid_argument);
}

TEST_CASE("enumeration anchors") {
  const auto one = enumerate_omega(GroupShape(1, 1));
  REQUIRE(one.size() == 2);
  CHECK(one[0].vector() == BlockVector({1}, {0}));
  CHECK(one[1].vector() == BlockVector({0}, {1}));

  const auto omega = enumerate_omega(GroupShape(3, 5));
  REQUIRE(omega.size() == 56);
  CHECK(omega[0].vector() == BlockVector({5, 5, 5}, {0, 0, 0, 0, 0}));
  CHECK(omega[35].vector() == BlockVector({4, 0, 0}, {3, 2, 2, 2, 2}));
  CHECK(omega[55].vector() == BlockVector({0, 0, 0}, {3, 3, 3, 3, 3}));
  // 21 heads begin with 5; (4,0,0) closes the 15 heads beginning with 4.
  CHECK(std::count_if(omega.begin(), omega.end(), [](const auto& e) { return e.head[0] == 5; }) == 21);
  CHECK(std::count_if(omega.begin(), omega.end(), [](const auto& e) { return e.head[0] == 4; }) == 15);
  for (std::size_t i = 0; i < omega.size(); ++i) CHECK(omega[i].index == static_cast<int>(i));
}

TEST_CASE("index_of") {
  const GroupShape shape(3, 5);
  CHECK(index_of(shape, std::vector<Int>{4, 0, 0}) == 35);
  CHECK(index_of(shape, std::vector<Int>{5, 5, 5}) == 0);
  CHECK(index_of(shape, std::vector<Int>{0, 0, 0}) == 55);
  CHECK_FALSE(index_of(GroupShape(2, 3), std::vector<Int>{0, 1}).has_value());
  CHECK_FALSE(index_of(shape, std::vector<Int>{6, 0, 0}).has_value());
  CHECK_FALSE(index_of(shape, std::vector<Int>{4, 0}).has_value());
  const OmegaTable& table = omega_table(shape);
  CHECK(table.index_of_tail(std::vector<Int>{3, 2, 2, 2, 2}) == 35);
  CHECK_THROWS_AS(table.element(56), std::out_of_range);
}

TEST_CASE("descent examples") {
  const GroupShape shape(4, 6);
  const auto start = omega_table(shape).element(*index_of(shape, std::vector<Int>{5, 2, 2, 1}));
  const auto d = descent(start, 1);
  CHECK(d.head == std::vector<Int>{4, 2, 2, 1});
  CHECK(d.tail == std::vector<Int>{4, 4, 3, 3, 1, 0});
  CHECK(d.tail == tail_from_head(shape, d.head));
  CHECK(d.index > start.index);
  CHECK_THROWS_AS(descent(start, 2), std::invalid_argument);
  CHECK_NOTHROW(descent(start, 3));
  CHECK_NOTHROW(descent(start, 4));
  CHECK_THROWS_AS(descent(start, 5), std::invalid_argument);

  const auto one = enumerate_omega(GroupShape(1, 1));
  CHECK(descent(one[0], 1).vector() == one[1].vector());
  CHECK_THROWS_AS(descent(one[1], 1), std::invalid_argument);

  const auto e35 = omega_table(GroupShape(3, 5)).element(35);
  const auto d35 = descent(e35, 1);
  CHECK(d35.head == std::vector<Int>{3, 0, 0});
  CHECK(d35.tail == tail_from_head(GroupShape(3, 5), std::vector<Int>{3, 0, 0}));
}

TEST_CASE("property: direct enumeration equals filtering oracle, p+q <= 9") {
  for (int n = 2; n <= 9; ++n) {
    for (int p = 1; 2 * p <= n; ++p) {
      const GroupShape shape(p, n - p);
      const auto direct = enumerate_omega(shape);
      const auto oracle = omega_by_filtering(shape);
      REQUIRE(direct.size() == oracle.size());
      for (std::size_t i = 0; i < direct.size(); ++i) REQUIRE(direct[i].vector() == oracle[i]);
    }
  }
}

TEST_CASE("property: structure, prefix bound, first-sum bounds, descent for p+q <= 12") {
  for (int n = 2; n <= 12; ++n) {
    for (int p = 1; 2 * p <= n; ++p) {
      const int q = n - p;
      const GroupShape shape(p, q);
      const auto omega = enumerate_omega(shape);
      REQUIRE(omega.size() == binomial(n, p));
      for (std::size_t i = 0; i < omega.size(); ++i) {
        const auto& e = omega[i];
        REQUIRE(weakly_decreasing_in(e.head, q));
        REQUIRE(weakly_decreasing_in(e.tail, p));
        Int total = 0;
        for (Int x : e.head) total += x;
        for (Int x : e.tail) total += x;
        REQUIRE(total == Int{p} * q);
        REQUIRE(tail_by_counting(shape, e.head) == e.tail);
        if (i) REQUIRE(std::lexicographical_compare(e.head.begin(), e.head.end(),
                                                    omega[i - 1].head.begin(), omega[i - 1].head.end()));
        REQUIRE(index_of(shape, e.head) == i);

        Int hs = 0;
        for (int f = 1; f <= p; ++f) {
          hs += e.head[f - 1];
          Int ts = 0;
          for (int g = 1; g <= q; ++g) {
            ts += e.tail[g - 1];
            REQUIRE(hs + ts <= Int{f} * q + Int{p - f} * g);
          }
        }
        const Int first = e.head[0] + e.tail[0];
        REQUIRE(first <= p + q - 1);
        REQUIRE(first >= p);

        for (int j = 1; j <= p; ++j) {
          const Int next = j < p ? e.head[j] : 0;
          if (e.head[j - 1] == next) continue;
          const auto d = descent(e, j);
          REQUIRE(d.tail == tail_from_head(shape, d.head));
          REQUIRE(d.index > e.index);
          REQUIRE(omega[d.index].vector() == d.vector());
        }
      }
    }
  }
}

TEST_CASE("first-sum lower bound q fails off the diagonal") {
  // (0 | 1,1) is in the p=1, q=2 table with k_1 + r_1 = 1 < q.
  const GroupShape shape(1, 2);
  const auto idx = index_of(shape, std::vector<Int>{0});
  REQUIRE(idx.has_value());
  const auto e = omega_table(shape).element(*idx);
  CHECK(e.tail == std::vector<Int>{1, 1});
  CHECK(e.head[0] + e.tail[0] < shape.q());

  for (int p = 1; p <= 6; ++p) {
    for (const auto& x : enumerate_omega(GroupShape(p, p))) CHECK(x.head[0] + x.tail[0] >= p);
  }
}
