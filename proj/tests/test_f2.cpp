#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twistfloer/box_tensor.hpp"
#include "twistfloer/f2.hpp"

using namespace twistfloer;

namespace {

using Dense = std::vector<std::vector<char>>;

// plain row reduction, rows x cols
size_t dense_rank(Dense a) {
  size_t r = 0;
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t k = 0; k < rows; ++k)
      if (k != r && a[k][c])
        for (size_t j = c; j < cols; ++j) a[k][j] ^= a[r][j];
    ++r;
  }
  return r;
}

BitVec vec(size_t n, std::initializer_list<int> bits) {
  BitVec v(n);
  for (int b : bits) v.set(b);
  return v;
}

BitVec apply(const F2Matrix& m, const BitVec& x) {
  BitVec out(m.rows);
  auto cols = m.columns();
  for (int c : x.support()) out ^= cols[c];
  return out;
}

}  // namespace

TEST_CASE("BitVec basics") {
  BitVec v(130);
  CHECK(v.none());
  CHECK(v.low() == -1);
  v.set(129);
  v.set(3);
  CHECK(v.low() == 3);
  CHECK(v.count() == 2);
  CHECK(v.support() == std::vector<int>{3, 129});
  v.flip(3);
  CHECK(v.support() == std::vector<int>{129});
  v ^= vec(130, {129, 64});
  CHECK(v.support() == std::vector<int>{64});
}

TEST_CASE("matrix entries cancel in pairs") {
  F2Matrix m(2, 2);
  m.add(0, 1);
  m.add(0, 1);
  m.add(1, 0);
  auto cols = m.columns();
  CHECK(cols[0].support() == std::vector<int>{1});
  CHECK(cols[1].none());
  CHECK_THROWS_AS(m.add(2, 0), std::out_of_range);
}

TEST_CASE("rank_and_solve examples") {
  F2Matrix m(3, 3);  // columns e0+e1, e1+e2, e0+e2
  m.add(0, 0); m.add(1, 0);
  m.add(1, 1); m.add(2, 1);
  m.add(0, 2); m.add(2, 2);
  auto r = rank_and_solve(m, {vec(3, {0, 2}), vec(3, {0}), vec(3, {})});
  CHECK(r.rank == 2);
  REQUIRE(r.solutions[0]);
  CHECK(apply(m, *r.solutions[0]) == vec(3, {0, 2}));
  CHECK_FALSE(r.solutions[1]);
  REQUIRE(r.solutions[2]);
  CHECK(r.solutions[2]->none());
  CHECK_THROWS_AS(rank_and_solve(m, {vec(4, {})}), std::invalid_argument);
}

TEST_CASE("sparse rank agrees with dense elimination") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 100; ++trial) {
    size_t rows = 1 + rng() % 200, cols = 1 + rng() % 200;
    double density = (1 + rng() % 30) / 100.0;
    std::bernoulli_distribution bit(density);
    F2Matrix m(rows, cols);
    Dense d(rows, std::vector<char>(cols, 0));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        if (bit(rng)) {
          m.add(r, c);
          d[r][c] = 1;
        }
    // targets: one in the image, one random
    BitVec x(cols);
    for (size_t c = 0; c < cols; ++c)
      if (rng() & 1) x.set(c);
    BitVec y(rows);
    for (size_t r = 0; r < rows; ++r)
      if (rng() & 1) y.set(r);
    auto res = rank_and_solve(m, {apply(m, x), y});
    CHECK(res.rank == dense_rank(d));
    REQUIRE(res.solutions[0]);
    CHECK(apply(m, *res.solutions[0]) == apply(m, x));
    // y solvable iff appending it keeps the rank
    Dense aug = d;
    for (size_t r = 0; r < rows; ++r) aug[r].push_back(y.test(r));
    CHECK(res.solutions[1].has_value() == (dense_rank(aug) == res.rank));
    if (res.solutions[1]) CHECK(apply(m, *res.solutions[1]) == y);
  }
}

TEST_CASE("homology of small complexes") {
  ChainComplexData arrow{2, {{0, 1}}};
  CHECK(homology(arrow).dim() == 0);
  ChainComplexData point{1, {}};
  CHECK(homology(point).dim() == 1);
  // square a->b, a->c, b->d, c->d plus isolated e
  ChainComplexData sq{5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  CHECK(boundary_squared_zero(sq));
  auto h = homology(sq);
  CHECK(h.dim() == 1);
  CHECK(h.classes[0] == vec(5, {4}));
  CHECK(h.cycles_dim == 3);
  CHECK(h.boundaries_dim == 2);
  ChainComplexData bad{3, {{0, 1}, {1, 2}}};
  CHECK_FALSE(boundary_squared_zero(bad));

  CHECK(class_in_span(sq, vec(5, {1, 2}), {}));
  CHECK_FALSE(class_in_span(sq, vec(5, {4}), {}));
  CHECK(class_in_span(sq, vec(5, {4, 3}), {vec(5, {4})}));
}

TEST_CASE("homology blocks") {
  ChainComplexData sq{5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  std::vector<int> deg{2, 1, 1, 0, 7};
  auto blocks = homology_blocks(sq, deg);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].first == 0);
  CHECK(blocks[0].second.dim() == 0);
  CHECK(blocks[3].first == 7);
  CHECK(blocks[3].second.dim() == 1);
  std::vector<int> mixed{2, 1, 0, 0, 7};
  CHECK_THROWS_AS(homology_blocks(sq, mixed), std::logic_error);
}

TEST_CASE("Mazur z-view generator at m=3") {
  auto a = load_pattern(std::string(TF_FIXTURES) + "/mazur.json");
  auto z = build_complex(a, View::Full, 3);
  auto c = z.chain();
  auto h = homology(c);
  CHECK(h.dim() == 1);
  BitVec v(z.size());
  v.set(z.index_of({a.index_of("x0"), 0}));
  for (int i = 1; i <= 3; ++i) v.set(z.index_of({a.index_of("x1"), i}));
  BitVec dv(z.size());
  auto cols = c.boundary_columns();
  for (int s : v.support()) dv ^= cols[s];
  CHECK(dv.none());
  CHECK_FALSE(class_in_span(c, v, {}));
  BitVec diff = v;
  diff ^= h.classes[0];
  CHECK(class_in_span(c, diff, {}));
}

TEST_CASE("Euler characteristic of box complexes") {
  auto a = load_pattern(std::string(TF_FIXTURES) + "/mazur.json");
  for (View view : {View::Knot, View::Full})
    for (long long m = 1; m <= 15; ++m) {
      auto c = build_complex(a, view, m);
      std::vector<long long> hk;
      long long chi_c = 0;
      for (const auto& b : c.bigrading) {
        hk.push_back(b.h);
        chi_c += (b.h % 2 == 0) ? 1 : -1;
      }
      long long chi_h = 0;
      for (auto& [hh, hb] : homology_blocks(c.chain(), hk))
        chi_h += (hh % 2 == 0 ? 1 : -1) * static_cast<long long>(hb.dim());
      CHECK(chi_c == chi_h);
      CHECK(homology(c.chain()).dim() % 2 == static_cast<size_t>(c.size()) % 2);
    }
}
