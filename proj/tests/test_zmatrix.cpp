#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schober/zmatrix.hpp"

#include <random>

using namespace schober;

namespace {

ZMatrix random_unimodular(std::mt19937& rng, int n, int ops = 12) {
  // random integer row/column operations starting from I keep det = +-1
  ZMatrix m = ZMatrix::identity(n);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    std::int64_t c = coef(rng);
    if (rng() % 2 == 0)
      for (int t = 0; t < n; ++t) m.at(i, t) += c * m.at(j, t);
    else
      for (int t = 0; t < n; ++t) m.at(t, i) += c * m.at(t, j);
  }
  return m;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion on small matrices") {
  ZMatrix m = ZMatrix::from_rows({{2, 3}, {1, 4}});
  CHECK(det(m) == 5);
  CHECK(det(ZMatrix::identity(4)) == 1);
  CHECK(det(ZMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(det(ZMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("unimodular inverse is exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    ZMatrix m = random_unimodular(rng, n);
    auto inv = inverse_unimodular(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
  }
  CHECK(!inverse_unimodular(ZMatrix::from_rows({{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("integer kernel annihilates and has the right rank") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 5);
    ZMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    auto basis = integer_kernel(m);
    CHECK(static_cast<int>(basis.size()) == c - rank(m));
    for (const auto& v : basis) {
      auto mv = m.apply(v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](std::int64_t x) { return x == 0; }));
    }
  }
}

TEST_CASE("solve_integer verdicts match box-bounded brute force") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % 2);
    ZMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
    std::vector<std::int64_t> b(r);
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 7) - 3;
    auto sol = solve_integer(m, b);
    if (sol) {
      CHECK(m.apply(sol->particular) == b);
    } else {
      // brute force over a box; any hit would contradict the solver
      bool found = false;
      std::vector<std::int64_t> x(c, -8);
      for (;;) {
        if (m.apply(x) == b) { found = true; break; }
        int i = 0;
        while (i < c && ++x[i] > 8) x[i++] = -8;
        if (i == c) break;
      }
      CHECK(!found);
    }
  }
}

TEST_CASE("solve_integer finds solutions exactly when they exist") {
  std::mt19937 rng(13);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    ZMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    // rhs built from a known solution: always solvable
    std::vector<std::int64_t> x0(c);
    for (auto& x : x0) x = static_cast<std::int64_t>(rng() % 9) - 4;
    auto sol = solve_integer(m, m.apply(x0));
    REQUIRE(sol.has_value());
    CHECK(m.apply(sol->particular) == m.apply(x0));
    ++solved;
  }
  CHECK(solved == 60);
  // 2x = 1 has no integer solution
  CHECK(!solve_integer(ZMatrix::from_rows({{2}}), {1}).has_value());
}
