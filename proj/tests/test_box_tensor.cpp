#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <tuple>

#include "json.hpp"
#include "twistfloer/box_tensor.hpp"

using namespace twistfloer;

namespace {

const std::string kDir = TF_FIXTURES;

const TypeAStructure& mazur() {
  static const TypeAStructure a = load_pattern(kDir + "/mazur.json");
  return a;
}
const TypeAStructure& core() {
  static const TypeAStructure a = load_pattern(kDir + "/unknot_core.json");
  return a;
}

std::set<std::tuple<std::string, std::string, int>> edge_labels(const BoxComplex& c) {
  std::set<std::tuple<std::string, std::string, int>> out;
  for (const auto& e : c.edges) out.insert({c.label(e.src), c.label(e.dst), e.type});
  return out;
}

}  // namespace

TEST_CASE("Mazur knot view at m=3") {
  auto c = build_complex(mazur(), View::Knot, 3);
  CHECK(c.size() == 29);
  for (int k = 0; k < 5; ++k) CHECK(c.basis[k].black());
  CHECK(c.basis[5] == BoxElement{mazur().index_of("x5"), 1});
  std::set<std::tuple<std::string, std::string, int>> want{
      {"x2⊗eta", "x1⊗xi3", 3}, {"x4⊗eta", "x3⊗xi3", 3}, {"y4⊗eta", "y3⊗xi3", 3}};
  CHECK(edge_labels(c) == want);
}

TEST_CASE("unknot core has no knot differential") {
  for (long long m : {1, 2, 7, 30}) {
    auto c = build_complex(core(), View::Knot, m);
    CHECK(c.size() == 1);
    CHECK(c.edges.empty());
  }
}

TEST_CASE("build_complex rejects m < 1") { CHECK_THROWS_AS(build_complex(core(), View::Knot, 0), BoxError); }

TEST_CASE("shift and inclusion") {
  BoxElement x{1, 2};
  CHECK(shift(x, +1, 3) == BoxElement{1, 3});
  CHECK(shift(x, -1, 3) == BoxElement{1, 1});
  CHECK_FALSE(shift(BoxElement{1, 3}, +1, 3));
  CHECK_FALSE(shift(BoxElement{1, 1}, -1, 3));
  CHECK_FALSE(shift(BoxElement{0, 0}, +1, 3));
  CHECK(inclusion({1, 3}, 4, Inclusion::Phi) == BoxElement{1, 4});
  CHECK(inclusion({1, 2}, 4, Inclusion::Phi) == BoxElement{1, 2});
  CHECK(inclusion({0, 0}, 4, Inclusion::Phi) == BoxElement{0, 0});
  for (int i = 0; i <= 5; ++i) CHECK(inclusion({2, i}, 5, Inclusion::PhiPrime) == BoxElement{2, i});
}

TEST_CASE("boundary squares to zero") {
  for (const auto* a : {&mazur(), &core()})
    for (View v : {View::Knot, View::Full})
      for (long long m = 1; m <= 50; ++m) {
        auto c = build_complex(*a, v, m);
        CHECK_MESSAGE(boundary_squared_zero(c.chain()), "m=" << m);
      }
}

TEST_CASE("edge structure") {
  for (View v : {View::Knot, View::Full})
    for (long long m = 1; m <= 12; ++m) {
      auto c = build_complex(mazur(), v, m);
      std::set<std::pair<int, int>> es;
      for (const auto& e : c.edges) es.insert({e.src, e.dst});
      CHECK(es.size() == c.edges.size());
      for (const auto& e : c.edges) {
        const auto &s = c.basis[e.src], &d = c.basis[e.dst];
        switch (e.type) {
          case 1: CHECK((s.black() && d.black())); break;
          case 2: CHECK((s.black() && !d.black())); break;
          case 3: CHECK((s.black() && d.box == m)); break;
          case 4: CHECK((!s.black() && d.box >= s.box)); break;
          default: FAIL("bad edge type");
        }
        if (d.black()) CHECK(s.black());
        // gradings: h drops by one, a never rises
        CHECK(c.bigrading[e.dst].h == c.bigrading[e.src].h - 1);
        if (v == View::Knot)
          CHECK(c.bigrading[e.dst].a == c.bigrading[e.src].a);
        else
          CHECK(c.bigrading[e.dst].a <= c.bigrading[e.src].a);
        // type-4 edges commute with the shift maps
        if (e.type == 4)
          for (int dir : {+1, -1}) {
            auto u = shift(s, dir, m), w = shift(d, dir, m);
            if (!u || !w) continue;
            CHECK(es.count({c.index_of(*u), c.index_of(*w)}) == 1);
          }
      }
    }
}

TEST_CASE("relative gradings along white boxes") {
  const auto& a = mazur();
  auto c = build_complex(a, View::Knot, 3);
  int x1 = a.index_of("x1");
  auto g1 = c.bigrading[c.index_of({x1, 1})], g2 = c.bigrading[c.index_of({x1, 2})];
  CHECK(g2.a - g1.a == 1);
  CHECK(g2.h - g1.h == 0);

  // closed form (j-i)(M-2b-1/2), (j-i)ω for every ι1 generator
  for (long long m : {4, 9}) {
    auto cm = build_complex(a, View::Full, m);
    HalfInt big_m = cm.ctx.big_m();
    for (int x = 0; x < a.size(); ++x) {
      if (a.idems[x] != Idem::I1) continue;
      HalfInt b = a.gradings[x].spin_i;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          auto gi = cm.bigrading[cm.index_of({x, i})], gj = cm.bigrading[cm.index_of({x, j})];
          CHECK((big_m - b * 2 - HalfInt::from_doubled(1)) * (j - i) == HalfInt(gj.h - gi.h));
          CHECK(gj.a - gi.a == (j - i) * cm.ctx.omega());
        }
    }
  }
}

TEST_CASE("bigrade normalizes both views") {
  auto k = build_complex(core(), View::Knot, 5), z = build_complex(core(), View::Full, 5);
  auto r = bigrade(k, z);
  CHECK(k.bigrading[0] == Bigrading{0, 0});
  CHECK(r.anchor == 0);
  CHECK(k.absolute);

  for (long long m = 1; m <= 10; ++m) {
    auto kc = build_complex(mazur(), View::Knot, m), zc = build_complex(mazur(), View::Full, m);
    auto kw = build_complex(mazur(), View::Knot, m, GradingTable::Counterclockwise);
    auto zw = build_complex(mazur(), View::Full, m, GradingTable::Counterclockwise);
    auto r1 = bigrade(kc, zc);
    auto r2 = bigrade(kw, zw);
    CHECK(kc.bigrading == kw.bigrading);
    CHECK(zc.bigrading == zw.bigrading);
    CHECK(r1.z_generator == r2.z_generator);
    CHECK(zc.basis[r1.anchor].black());
    for (int s : r1.z_generator.support()) CHECK(zc.bigrading[s].h == 0);
  }
}

TEST_CASE("bigrade rejects non-knot patterns") {
  // two disconnected generators: z-homology of rank 2
  auto two = parse_pattern(R"({"generators":[{"name":"x","idem":"i0","gr":[0,0,0,0]},
      {"name":"y","idem":"i0","gr":[0,0,0,0]}],"periodic_gen":[0,0,1,1]})");
  auto k = build_complex(two, View::Knot, 2), z = build_complex(two, View::Full, 2);
  try {
    bigrade(k, z);
    FAIL("accepted a rank-2 z-homology");
  } catch (const BoxError& e) {
    CHECK(std::string(e.what()).find("not a knot pattern") != std::string::npos);
  }
  auto k3 = build_complex(core(), View::Knot, 3);
  CHECK_THROWS_AS(bigrade(k3, z), BoxError);
}

TEST_CASE("dump_json") {
  auto k = build_complex(mazur(), View::Knot, 2), z = build_complex(mazur(), View::Full, 2);
  bigrade(k, z);
  auto j = nlohmann::json::parse(dump_json(k));
  CHECK(j["twist_count"] == 2);
  CHECK(j["view"] == "knot");
  CHECK(j["absolute"] == true);
  CHECK(j["basis"].size() == 21);
  CHECK(j["basis"][0]["label"] == "x0⊗eta");
  CHECK(j["edges"].size() == k.edges.size());
  CHECK(dump_json(k) == dump_json(k));
}
