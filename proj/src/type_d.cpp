#include "twistfloer/type_d.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace twistfloer {

int TypeDStructure::index_of(const std::string& name) const {
  for (int k = 0; k < size(); ++k)
    if (names[k] == name) return k;
  return -1;
}

TypeDStructure build_cfd_one_over_m(long long m) {
  if (m < 1) throw std::invalid_argument("twist count must be at least 1");
  TypeDStructure d;
  d.names.push_back("eta");
  d.idems.push_back(Idem::I0);
  for (long long i = 1; i <= m; ++i) {
    d.names.push_back("xi" + std::to_string(i));
    d.idems.push_back(Idem::I1);
  }
  d.edges.push_back({0, Basis::R3, 1});
  d.edges.push_back({0, Basis::R1, static_cast<int>(m)});
  for (int i = 1; i < m; ++i) d.edges.push_back({i, Basis::R23, i + 1});

  d.grading_cw.assign(m + 1, identity_grading());
  d.grading_ccw.assign(m + 1, identity_grading());
  for (long long i = 1; i <= m; ++i)
    d.grading_cw[i] = {HalfInt::from_doubled(-1), HalfInt::from_doubled(1),
                       HalfInt::from_doubled(-(2 * i - 1)), 0};
  for (long long i = 0; i < m; ++i)
    d.grading_ccw[m - i] = {HalfInt::from_doubled(2 * i - 1), HalfInt::from_doubled(-1),
                            HalfInt::from_doubled(2 * i + 1), 0};
  d.periodic_gen = {HalfInt::from_doubled(-(m - 1)), HalfInt(1), HalfInt(-m), 0};
  return d;
}

std::vector<DeltaSequence> delta_sequences(const TypeDStructure& d, int start, int max_len) {
  std::vector<std::vector<const DEdge*>> out(d.size());
  for (const auto& e : d.edges) out[e.src].push_back(&e);
  std::vector<DeltaSequence> res;
  std::vector<Basis> path;
  std::function<void(int)> walk = [&](int v) {
    res.push_back({path, v});
    if (static_cast<int>(path.size()) >= max_len) return;
    for (const DEdge* e : out[v]) {
      path.push_back(e->label);
      walk(e->dst);
      path.pop_back();
    }
  };
  walk(start);
  return res;
}

namespace {

bool has_cycle(const TypeDStructure& d) {
  std::vector<std::vector<int>> out(d.size());
  for (const auto& e : d.edges) out[e.src].push_back(e.dst);
  std::vector<int> state(d.size(), 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < d.size(); ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

// g1 == g2 * p^t for some integer t
bool right_translate(const GradingElement& g1, const GradingElement& g2, const GradingElement& p) {
  HalfInt di = g1.spin_i - g2.spin_i;
  HalfInt dj = g1.spin_j - g2.spin_j;
  long long t;
  if (p.spin_i != HalfInt(0)) {
    if (di.doubled() % p.spin_i.doubled() != 0) return false;
    t = di.doubled() / p.spin_i.doubled();
  } else if (p.spin_j != HalfInt(0)) {
    if (dj.doubled() % p.spin_j.doubled() != 0) return false;
    t = dj.doubled() / p.spin_j.doubled();
  } else {
    t = 0;
  }
  return g2 * power(p, t) == g1;
}

}  // namespace

TypeDReport verify_type_d(const TypeDStructure& d) {
  TypeDReport r;
  r.bounded = !has_cycle(d);
  r.reduced = true;
  r.labels_ok = true;
  for (const auto& e : d.edges) {
    if (is_idempotent(e.label)) r.reduced = false;
    auto [l, rr] = idempotent_sides(e.label);
    bool ok = is_idempotent(e.label) ? d.idems[e.src] == d.idems[e.dst] && l == d.idems[e.src]
                                     : l == d.idems[e.src] && rr == d.idems[e.dst];
    if (!ok) {
      r.labels_ok = false;
      r.problems.push_back("label " + to_string(e.label) + " on " + d.names[e.src] + "->" +
                           d.names[e.dst] + " does not match idempotents");
    }
  }

  // (mu ⊗ I)(I ⊗ δ)δ: sum label products over two-step paths
  std::map<std::tuple<int, Basis, int>, int> acc;
  for (const auto& e1 : d.edges)
    for (const auto& e2 : d.edges) {
      if (e1.dst != e2.src) continue;
      if (auto p = multiply_basis(e1.label, e2.label)) acc[{e1.src, *p, e2.dst}] ^= 1;
    }
  r.relation_ok = true;
  for (const auto& [k, v] : acc)
    if (v) {
      r.relation_ok = false;
      r.problems.push_back("δ² term " + to_string(std::get<1>(k)) + " from " +
                           d.names[std::get<0>(k)] + " to " + d.names[std::get<2>(k)]);
    }

  r.grading_ok = true;
  for (const auto* table : {&d.grading_cw, &d.grading_ccw}) {
    for (const auto& e : d.edges) {
      GradingElement rhs = lambda_elt() * grading_of(e.label) * (*table)[e.dst];
      if (!right_translate((*table)[e.src], rhs, d.periodic_gen)) {
        r.grading_ok = false;
        r.problems.push_back("grading of edge " + d.names[e.src] + "->" + d.names[e.dst]);
      }
    }
  }
  return r;
}

}  // namespace twistfloer
