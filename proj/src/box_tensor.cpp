#include "twistfloer/box_tensor.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"

namespace twistfloer {

int BoxComplex::index_of(const BoxElement& e) const {
  for (int k = 0; k < size(); ++k)
    if (basis[k] == e) return k;
  return -1;
}

std::string BoxComplex::label(int idx) const {
  const auto& e = basis[idx];
  return a_names[e.a_gen] + (e.black() ? "⊗eta" : "⊗xi" + std::to_string(e.box));
}

ChainComplexData BoxComplex::chain() const {
  ChainComplexData c;
  c.n = basis.size();
  for (const auto& e : edges) c.edges.emplace_back(e.src, e.dst);
  return c;
}

namespace {

DoubleCosetContext make_ctx(const TypeAStructure& a, const TypeDStructure& d, long long m) {
  return DoubleCosetContext(a.left_gen(), d.periodic_gen, m);
}

}  // namespace

BoxComplex build_complex(const TypeAStructure& a, View view, long long m, GradingTable table) {
  if (m < 1) throw BoxError("twist count must be at least 1");
  TypeDStructure d = build_cfd_one_over_m(m);
  BoxComplex c{m, view, {}, {}, {}, {}, false, make_ctx(a, d, m), a.names};

  // black box first, then white boxes ascending, generators in file order
  std::vector<std::vector<int>> slot(a.size(), std::vector<int>(m + 1, -1));
  for (int x = 0; x < a.size(); ++x)
    if (a.idems[x] == Idem::I0) {
      slot[x][0] = c.size();
      c.basis.push_back({x, 0});
    }
  for (int i = 1; i <= m; ++i)
    for (int x = 0; x < a.size(); ++x)
      if (a.idems[x] == Idem::I1) {
        slot[x][i] = c.size();
        c.basis.push_back({x, i});
      }

  const auto& gd = table == GradingTable::Clockwise ? d.grading_cw : d.grading_ccw;
  for (const auto& e : c.basis) c.composed.push_back(a.gradings[e.a_gen] * gd[e.box]);

  std::vector<std::vector<DeltaSequence>> seqs(d.size());
  for (int y = 0; y < d.size(); ++y) seqs[y] = delta_sequences(d, y, static_cast<int>(m) + 2);

  // parity per (src, dst, type)
  std::map<std::tuple<int, int, int>, int> acc;
  for (int s = 0; s < c.size(); ++s) {
    const auto& e = c.basis[s];
    for (const auto& seq : seqs[e.box]) {
      std::vector<int> targets;
      if (seq.labels.size() == 1 && is_idempotent(seq.labels[0])) {
        targets.push_back(e.a_gen);
      } else if (std::any_of(seq.labels.begin(), seq.labels.end(), is_idempotent)) {
        continue;
      } else {
        targets = a.m_eval(view, e.a_gen, seq.labels);
      }
      int type;
      if (e.black() && seq.end == 0)
        type = 1;
      else if (e.black() && !seq.labels.empty() && seq.labels[0] == Basis::R3)
        type = 2;
      else if (e.black() && seq.labels.size() == 1 && seq.labels[0] == Basis::R1)
        type = 3;
      else if (!e.black() && seq.end >= e.box)
        type = 4;
      else
        throw BoxError("differential from " + c.label(s) + " has no edge type");
      for (int t : targets) {
        int dst = slot[t][seq.end];
        if (dst < 0) throw BoxError("idempotent mismatch pairing " + c.label(s));
        acc[{s, dst, type}] ^= 1;
      }
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (const auto& [k, v] : acc)
    if (v) by_pair[{std::get<0>(k), std::get<1>(k)}].push_back(std::get<2>(k));
  for (const auto& [k, types] : by_pair)
    if (types.size() % 2 == 1) {
      if (types.size() != 1) throw BoxError("ambiguous edge type");
      c.edges.push_back({k.first, k.second, types[0]});
    }

  c.bigrading.resize(c.size());
  for (int k = 0; k < c.size(); ++k) {
    auto r = relative_bigrading(c.ctx, c.composed[k], c.composed[0]);
    if (!r) throw BoxError("basis elements " + c.label(k) + " and " + c.label(0) +
                           " lie in different Spin^c structures");
    c.bigrading[k] = *r;
  }
  return c;
}

std::optional<BoxElement> shift(const BoxElement& e, int dir, long long m) {
  if (e.black()) return std::nullopt;
  long long nb = e.box + (dir > 0 ? 1 : -1);
  if (nb < 1 || nb > m) return std::nullopt;
  return BoxElement{e.a_gen, static_cast<int>(nb)};
}

BoxElement inclusion(const BoxElement& e, long long m, Inclusion variant) {
  if (e.black() || variant == Inclusion::PhiPrime) return e;
  if (2LL * e.box <= m) return e;
  return {e.a_gen, e.box + 1};
}

BigradeResult bigrade(BoxComplex& knot, BoxComplex& z) {
  if (knot.size() != z.size() || knot.twist_count != z.twist_count)
    throw BoxError("knot and z complexes do not share a basis");
  BigradeResult res;
  const int n = z.size();
  ChainComplexData zc = z.chain();

  std::vector<long long> hkey(n);
  for (int k = 0; k < n; ++k) hkey[k] = z.bigrading[k].h;
  auto zblocks = homology_blocks(zc, hkey);
  long long total = 0, h0 = 0;
  BitVec gen;
  for (auto& [h, hb] : zblocks) {
    total += static_cast<long long>(hb.dim());
    if (hb.dim() > 0) {
      h0 = h;
      gen = hb.classes.front();
    }
  }
  if (total != 1)
    throw BoxError("not a knot pattern: z-view homology has dimension " + std::to_string(total));

  auto meets_black = [&](const BitVec& v) {
    for (int k : v.support())
      if (z.basis[k].black()) return true;
    return false;
  };
  if (!meets_black(gen)) {
    // add a boundary of the same degree that meets C•
    auto cols = zc.boundary_columns();
    bool fixed = false;
    for (int s = 0; s < n && !fixed; ++s) {
      if (z.bigrading[s].h != h0 + 1 || cols[s].none()) continue;
      BitVec cand = gen;
      cand ^= cols[s];
      if (meets_black(cand)) {
        gen = cand;
        fixed = true;
      }
    }
    if (!fixed) throw BoxError("z-homology generator cannot be represented inside C•");
  }
  for (int k : gen.support())
    if (z.basis[k].black()) {
      res.anchor = k;
      break;
    }
  res.z_generator = gen;
  res.maslov_shift = -h0;

  // provisional knot homology for Alexander centering
  std::vector<std::pair<long long, long long>> key(n);
  for (int k = 0; k < n; ++k) key[k] = {knot.bigrading[k].a, knot.bigrading[k].h};
  auto kblocks = homology_blocks(knot.chain(), key);
  std::optional<long long> amin, amax;
  for (auto& [ah, hb] : kblocks) {
    if (hb.dim() == 0) continue;
    long long a = ah.first;
    amin = amin ? std::min(*amin, a) : a;
    amax = amax ? std::max(*amax, a) : a;
  }
  if (!amin) throw BoxError("knot homology vanishes");
  if ((*amin + *amax) % 2 != 0) throw BoxError("asymmetric HFK: support has no integral center");
  res.alex_shift = -(*amin + *amax) / 2;

  for (auto* c : {&knot, &z}) {
    for (auto& b : c->bigrading) {
      b.h += res.maslov_shift;
      b.a += res.alex_shift;
    }
    c->absolute = true;
  }
  return res;
}

std::string dump_json(const BoxComplex& c) {
  nlohmann::ordered_json j;
  j["twist_count"] = c.twist_count;
  j["view"] = c.view == View::Knot ? "knot" : "full";
  j["absolute"] = c.absolute;
  auto& basis = j["basis"] = nlohmann::ordered_json::array();
  for (int k = 0; k < c.size(); ++k)
    basis.push_back({{"label", c.label(k)},
                     {"box", c.basis[k].box},
                     {"h", c.bigrading[k].h},
                     {"a", c.bigrading[k].a}});
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  auto sorted = c.edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const BoxEdge& x, const BoxEdge& y) { return std::tie(x.src, x.dst) < std::tie(y.src, y.dst); });
  for (const auto& e : sorted) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"type", e.type}});
  return j.dump(2);
}

}  // namespace twistfloer
