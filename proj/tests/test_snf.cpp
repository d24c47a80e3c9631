#include <doctest.h>

#include <numeric>
#include <random>

#include "catlas/snf.hpp"

using namespace catlas;

namespace {

// Independent oracle: d_k = gcd of all k x k minors, invariant factors
// d_k / d_{k-1}. Exponential, so only for small matrices.
BigInt det_rec(const IntMat& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  BigInt acc = 0;
  int sign = 1;
  for (std::size_t i = 0; i < rows.size(); ++i, sign = -sign) {
    std::vector<std::size_t> sub_rows;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i) sub_rows.push_back(rows[k]);
    std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
    acc += sign * m.at(rows[i], cols[0]) * det_rec(m, sub_rows, sub_cols);
  }
  return acc;
}

void subsets_of(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<BigInt> minor_gcd_invariants(const IntMat& m) {
  std::vector<BigInt> inv;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    subsets_of(m.rows, k, rsets);
    subsets_of(m.cols, k, csets);
    BigInt g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) g = boost::multiprecision::gcd(g, abs(det_rec(m, rs, cs)));
    if (g == 0) break;
    inv.push_back(g / prev);
    prev = g;
  }
  return inv;
}

IntMat from_rows(std::vector<std::vector<long>> rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("smith invariants match the gcd-of-minors oracle on fixed matrices") {
  std::vector<IntMat> cases;
  cases.push_back(from_rows({{0, 0}, {2, -4}}));
  cases.push_back(from_rows({{2, 0}, {0, 3}}));
  cases.push_back(from_rows({{1, 0}, {0, 1}}));
  cases.push_back(from_rows({{0, 0}, {0, 0}}));
  cases.push_back(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  cases.push_back(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  cases.push_back(from_rows({{6, 10}, {15, 4}, {9, 3}}));
  for (const IntMat& m : cases) {
    CHECK(smith_invariants(m) == minor_gcd_invariants(m));
  }
}

TEST_CASE("smith invariants of the documented relator matrix") {
  // relators a b a^-1 b^-1 and a^2 b^-4 give exponent matrix [[0,0],[2,-4]]
  IntMat m = from_rows({{0, 0}, {2, -4}});
  std::vector<BigInt> inv = smith_invariants(m);
  REQUIRE(inv.size() == 1);  // rank 1
  CHECK(inv[0] == 2);
}

TEST_CASE("smith invariants match the oracle on seeded random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat m(dim(rng), dim(rng));
    for (auto& v : m.a) v = entry(rng);
    auto got = smith_invariants(m);
    auto want = minor_gcd_invariants(m);
    REQUIRE(got == want);
  }
}

TEST_CASE("smith invariants form a divisibility chain") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<long> entry(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat m(5, 6);
    for (auto& v : m.a) v = entry(rng);
    auto inv = smith_invariants(m);
    for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
  }
}

TEST_CASE("homology of the hand-built small resolution of the order-2 group") {
  // ... -> Z --2--> Z --0--> Z --2--> Z --0--> Z (degree 0)
  std::vector<std::size_t> ranks{1, 1, 1, 1, 1};
  std::vector<IntMat> bnd;
  bnd.emplace_back(0, 1);
  bnd.push_back(from_rows({{0}}));
  bnd.push_back(from_rows({{2}}));
  bnd.push_back(from_rows({{0}}));
  bnd.push_back(from_rows({{2}}));
  ChainComplex cc = ChainComplex::from_boundaries(ranks, bnd);
  HomologyResult h = homology_of_complex(cc, 3);
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(0).torsion.empty());
  CHECK(h.at(1).betti == 0);
  REQUIRE(h.at(1).torsion.size() == 1);
  CHECK(h.at(1).torsion[0] == 2);
  CHECK(h.at(2).trivial());
  CHECK(h.at(3).betti == 0);
  REQUIRE(h.at(3).torsion.size() == 1);
  CHECK(h.at(3).torsion[0] == 2);
}

TEST_CASE("chain complex constructor rejects d.d != 0") {
  std::vector<std::size_t> ranks{1, 1, 1};
  std::vector<IntMat> bnd;
  bnd.emplace_back(0, 1);
  bnd.push_back(from_rows({{1}}));
  bnd.push_back(from_rows({{1}}));
  CHECK_THROWS_AS(ChainComplex::from_boundaries(ranks, bnd), CatError);
}
