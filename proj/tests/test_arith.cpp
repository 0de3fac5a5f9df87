#include "doctest.h"
#include "realendo/arith.hpp"

#include <random>
#include <set>

using namespace realendo;

namespace {

Mat random_int_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (auto& x : m.a) x = d(rng);
  return m;
}

// |det| by cofactor expansion (small sizes only)
Rat det(const Mat& m) {
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m(0, 0);
  Rat s = 0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    Mat minor(m.rows - 1, m.cols - 1);
    for (std::size_t i = 1; i < m.rows; ++i)
      for (std::size_t k = 0, kk = 0; k < m.cols; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    s += (j % 2 ? -1 : 1) * m(0, j) * det(minor);
  }
  return s;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(parse_rat("-3/6")) == "-1/2");
  CHECK(to_string(parse_rat("4")) == "4");
  CHECK(floor_q(Rat(-1, 2)) == -1);
  CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("a/2"), Error);
}

TEST_CASE("smith form reproduces the matrix and has dividing invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Mat a = random_int_mat(rng, r, c, -5, 5);
    Smith s = smith(to_imat(a), r, c);
    Mat U = to_mat(s.U, r), D = to_mat(s.D, c), V = to_mat(s.V, c);
    CHECK(U * a * V == D);
    CHECK(abs(det(U)) == 1);
    CHECK(abs(det(V)) == 1);
    CHECK(s.diag.size() == rank(a));
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(D(i, j) == 0);
  }
}

TEST_CASE("integer kernel is saturated and annihilated") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Mat a = random_int_mat(rng, 1 + rng() % 3, 2 + rng() % 3, -3, 3);
    Mat k = integer_kernel(a);
    CHECK(k.cols + rank(a) == a.cols);
    for (std::size_t j = 0; j < k.cols; ++j) CHECK(is_zero(a * k.col(j)));
    // saturation: brute-force kernel vectors in a box are integral combinations
    if (a.cols <= 3) {
      for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
          for (int z = -3; z <= 3; ++z) {
            Vec v = a.cols == 2 ? ints({x, y}) : ints({x, y, z});
            if (a.cols == 2 && z != 0) continue;
            if (is_zero(a * v)) CHECK(in_lattice(k, v));
          }
    }
  }
}

TEST_CASE("hermite basis is canonical") {
  Mat g1 = from_cols({ints({2, 0}), ints({0, 2}), ints({1, 1})}, 2);
  Mat g2 = from_cols({ints({1, 1}), ints({1, -1})}, 2);
  CHECK(lattice_basis(g1) == lattice_basis(g2));
  Mat half = from_cols({Vec{Rat(1, 2), 0}, Vec{0, 1}}, 2);
  CHECK(in_lattice(lattice_basis(half), Vec{Rat(3, 2), 5}));
  CHECK(!in_lattice(lattice_basis(half), Vec{0, Rat(1, 2)}));
}

TEST_CASE("finite quotient agrees with brute-force counting") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Mat s = random_int_mat(rng, 2, 2, -4, 4);
    if (rank(s) < 2) continue;
    FiniteQuotient q(identity(2), s);
    CHECK(q.order() == abs(num(det(s))));
    // brute force: classes of a box under membership of differences
    std::vector<Vec> reps;
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y) {
        Vec v = ints({x, y});
        bool found = false;
        for (auto& r : reps)
          if (in_lattice(lattice_basis(s), v - r)) {
            found = true;
            CHECK(q.equal(v, r));
            break;
          }
        if (!found) reps.push_back(v);
      }
    CHECK(Int(reps.size()) == q.order());
    std::set<std::vector<Int>> seen;
    for (auto& e : q.elements()) {
      CHECK(q.coords(q.rep(e)) == e);
      seen.insert(e);
    }
    CHECK(Int(seen.size()) == q.order());
    CHECK(q.subgroup_order({}) == 1);
    CHECK(q.subgroup_order({unit(2, 0), unit(2, 1)}) == q.order());
  }
}

TEST_CASE("integers plus span membership") {
  Mat ann = annihilator_lattice({ints({1, -1})}, 2);
  CHECK(in_integers_plus_span(ann, Vec{Rat(1, 2), Rat(-1, 2)}));
  CHECK(in_integers_plus_span(ann, Vec{Rat(1, 3), Rat(2, 3)}));
  CHECK(in_integers_plus_span(ann, Vec{Rat(1, 2), Rat(1, 2)}));
  CHECK(!in_integers_plus_span(ann, Vec{Rat(1, 2), 0}));
}

TEST_CASE("sublattice where a map is integral") {
  Mat c = from_rows({Vec{Rat(1, 2), Rat(1, 2)}}, 2);
  Mat l = sublattice_where_integral(identity(2), c);
  FiniteQuotient q(identity(2), l);
  CHECK(q.order() == 2);
  CHECK(in_lattice(l, ints({1, 1})));
  CHECK(!in_lattice(l, ints({1, 0})));
}
