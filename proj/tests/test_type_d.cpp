#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "twistfloer/type_d.hpp"

using namespace twistfloer;

namespace {

HalfInt h2(long long d) { return HalfInt::from_doubled(d); }

bool has_edge(const TypeDStructure& d, int s, Basis b, int t) {
  return std::any_of(d.edges.begin(), d.edges.end(),
                     [&](const DEdge& e) { return e.src == s && e.label == b && e.dst == t; });
}

}  // namespace

TEST_CASE("CFD(1/3)") {
  auto d = build_cfd_one_over_m(3);
  CHECK(d.size() == 4);
  CHECK(d.edges.size() == 4);
  CHECK(has_edge(d, 0, Basis::R3, 1));
  CHECK(has_edge(d, 0, Basis::R1, 3));
  CHECK(has_edge(d, 1, Basis::R23, 2));
  CHECK(has_edge(d, 2, Basis::R23, 3));
  CHECK(d.grading_cw[1] == GradingElement(h2(-1), h2(1), h2(-1), 0));
  CHECK(d.periodic_gen == GradingElement(HalfInt(-1), HalfInt(1), HalfInt(-3), 0));
  CHECK(d.grading_ccw[3] == GradingElement(h2(-1), h2(-1), h2(1), 0));
}

TEST_CASE("CFD(1/1)") {
  auto d = build_cfd_one_over_m(1);
  CHECK(d.edges.size() == 2);
  CHECK(has_edge(d, 0, Basis::R3, 1));
  CHECK(has_edge(d, 0, Basis::R1, 1));
  CHECK_THROWS(build_cfd_one_over_m(0));
}

TEST_CASE("delta sequences") {
  auto d = build_cfd_one_over_m(3);
  auto s = delta_sequences(d, 0, 10);
  std::vector<DeltaSequence> want = {{{}, 0},
                                     {{Basis::R3}, 1},
                                     {{Basis::R3, Basis::R23}, 2},
                                     {{Basis::R3, Basis::R23, Basis::R23}, 3},
                                     {{Basis::R1}, 3}};
  CHECK(s.size() == want.size());
  for (const auto& w : want) CHECK(std::find(s.begin(), s.end(), w) != s.end());
  CHECK(delta_sequences(d, 3, 10) == std::vector<DeltaSequence>{{{}, 3}});
  auto chain = delta_sequences(d, 1, 1);
  CHECK(chain.size() == 2);
  for (long long m = 1; m <= 50; ++m) {
    auto dm = build_cfd_one_over_m(m);
    CHECK(delta_sequences(dm, 0, static_cast<int>(m) + 2).size() == static_cast<size_t>(m + 2));
    for (int k = 0; k <= 5; ++k)
      CHECK(delta_sequences(dm, 1, k).size() ==
            static_cast<size_t>(std::min<long long>(k, m - 1) + 1));
  }
}

TEST_CASE("CFD family passes every check") {
  for (long long m = 1; m <= 50; ++m) {
    auto r = verify_type_d(build_cfd_one_over_m(m));
    CHECK(r.bounded);
    CHECK(r.reduced);
    CHECK(r.labels_ok);
    CHECK(r.relation_ok);
    CHECK(r.grading_ok);
  }
}

TEST_CASE("clockwise and counterclockwise tables differ by right translates") {
  for (long long m = 1; m <= 20; ++m) {
    auto d = build_cfd_one_over_m(m);
    for (long long i = 1; i <= m; ++i) {
      bool found = false;
      for (long long t = -3; t <= 3 && !found; ++t)
        found = d.grading_cw[i] * power(d.periodic_gen, t) == d.grading_ccw[i];
      CHECK(found);
    }
  }
}

TEST_CASE("broken structures are reported") {
  TypeDStructure loop;
  loop.names = {"x"};
  loop.idems = {Idem::I0};
  loop.edges = {{0, Basis::R12, 0}};
  loop.grading_cw = loop.grading_ccw = {identity_grading()};
  loop.periodic_gen = {HalfInt(-1), HalfInt(1), HalfInt(0), 0};
  auto r = verify_type_d(loop);
  CHECK_FALSE(r.bounded);
  CHECK(r.reduced);

  TypeDStructure path;
  path.names = {"x", "y", "z"};
  path.idems = {Idem::I0, Idem::I1, Idem::I0};
  path.edges = {{0, Basis::R1, 1}, {1, Basis::R2, 2}};
  path.grading_cw = path.grading_ccw = {identity_grading(), identity_grading(), identity_grading()};
  path.periodic_gen = identity_grading();
  auto p = verify_type_d(path);
  CHECK(p.bounded);
  CHECK_FALSE(p.relation_ok);

  TypeDStructure unlabeled = path;
  unlabeled.edges = {{0, Basis::I0, 2}};
  CHECK_FALSE(verify_type_d(unlabeled).reduced);
}

TEST_CASE("the λ^-1 form of the edge rule fails on the family") {
  auto d = build_cfd_one_over_m(3);
  GradingElement rhs = inverse(lambda_elt()) * grading_of(Basis::R3) * d.grading_cw[1];
  CHECK(rhs.maslov != d.grading_cw[0].maslov);
  GradingElement good = lambda_elt() * grading_of(Basis::R3) * d.grading_cw[1];
  CHECK(good == identity_grading());
}
