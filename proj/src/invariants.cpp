#include "twistfloer/invariants.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace twistfloer {

long long HFKTable::total() const {
  long long t = 0;
  for (const auto& [k, v] : dims) t += v;
  return t;
}

long long HFKTable::genus() const {
  long long g = 0;
  bool any = false;
  for (const auto& [k, v] : dims)
    if (v) {
      g = any ? std::max(g, k.first) : k.first;
      any = true;
    }
  return g;
}

bool HFKTable::symmetric() const {
  for (const auto& [k, v] : dims) {
    auto it = dims.find({-k.first, k.second - 2 * k.first});
    if (it == dims.end() || it->second != v) return false;
  }
  return true;
}

std::vector<std::pair<long long, long long>> HFKTable::column(long long a) const {
  std::vector<std::pair<long long, long long>> out;
  for (auto it = dims.lower_bound({a, std::numeric_limits<long long>::min()});
       it != dims.end() && it->first.first == a; ++it)
    out.emplace_back(it->first.second, it->second);
  return out;
}

std::string HFKTable::text() const {
  std::ostringstream os;
  for (const auto& [k, v] : dims) os << "(" << k.first << "," << k.second << "): " << v << "\n";
  return os.str();
}

long long AlexanderPoly::at(long long i) const {
  auto it = coeffs.find(i);
  return it == coeffs.end() ? 0 : it->second;
}

long long AlexanderPoly::degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

long long AlexanderPoly::eval_one() const {
  long long s = 0;
  for (const auto& [i, c] : coeffs) s += c;
  return s;
}

bool AlexanderPoly::symmetric() const {
  for (const auto& [i, c] : coeffs)
    if (at(-i) != c) return false;
  return true;
}

std::string AlexanderPoly::text() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    long long c = it->second, i = it->first;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long ac = c < 0 ? -c : c;
    if (i == 0) {
      os << ac;
      continue;
    }
    if (ac != 1) os << ac;
    os << "t";
    if (i != 1) os << "^" << i;
  }
  return os.str();
}

std::vector<long long> JumpSequence::first_values(size_t k) const {
  std::vector<long long> out;
  for (const auto& [i, v] : d) {
    if (out.size() == k) break;
    out.push_back(v);
  }
  return out;
}

HFKTable hfk_table(const BoxComplex& knot) {
  if (!knot.absolute) throw InvalidPattern("complex has not been bigraded");
  std::vector<std::pair<long long, long long>> key(knot.size());
  for (int k = 0; k < knot.size(); ++k) key[k] = {knot.bigrading[k].a, knot.bigrading[k].h};
  HFKTable t;
  t.twist_count = knot.twist_count;
  for (auto& [ah, hb] : homology_blocks(knot.chain(), key))
    if (hb.dim()) t.dims[ah] = static_cast<long long>(hb.dim());
  if (!t.symmetric()) throw InvalidPattern("knot Floer homology is not symmetric");
  return t;
}

AlexanderPoly alexander_polynomial(const HFKTable& t) {
  AlexanderPoly p;
  for (const auto& [k, v] : t.dims) {
    long long s = (k.second % 2 == 0) ? v : -v;
    p.coeffs[k.first] += s;
  }
  std::erase_if(p.coeffs, [](const auto& kv) { return kv.second == 0; });
  long long e = p.eval_one();
  if (e != 1 && e != -1)
    throw InvalidPattern("Alexander polynomial has Δ(1) = " + std::to_string(e));
  if (e == -1) {
    p.sign_flipped = true;
    for (auto& [i, c] : p.coeffs) c = -c;
  }
  if (!p.symmetric()) throw InvalidPattern("Alexander polynomial is not symmetric");
  return p;
}

long long tau(const BoxComplex& knot, const BoxComplex& z, const BitVec& gen) {
  (void)knot;
  const int n = z.size();
  ChainComplexData zc = z.chain();
  auto cols = zc.boundary_columns();
  std::set<long long> levels;
  for (const auto& b : z.bigrading) levels.insert(b.a);

  ColumnReducer image(n);
  for (const auto& c : cols) image.insert(c, BitVec());

  // cycles of F_i = {a <= i}, grown level by level
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return z.bigrading[x].a < z.bigrading[y].a; });
  ColumnReducer ker(n, n);
  ColumnReducer span = image;
  size_t pos = 0;
  bool hit = false;
  long long result = 0;
  for (long long i : levels) {
    for (; pos < order.size() && z.bigrading[order[pos]].a <= i; ++pos) {
      int s = order[pos];
      BitVec tag(n);
      tag.set(s);
      BitVec combo;
      if (!ker.insert(cols[s], tag, &combo)) span.insert(combo, BitVec());
    }
    bool in = span.in_span(gen);
    if (hit && !in) throw InvalidPattern("filtration surjectivity is not monotone");
    if (in && !hit) {
      hit = true;
      result = i;
    }
  }
  if (!hit) throw InvalidPattern("generator never enters the filtration");
  return result;
}

std::pair<long long, long long> delta_range(const HFKTable& t) {
  bool any = false;
  long long lo = 0, hi = 0;
  for (const auto& [k, v] : t.dims) {
    long long dl = k.second - k.first;
    lo = any ? std::min(lo, dl) : dl;
    hi = any ? std::max(hi, dl) : dl;
    any = true;
  }
  return {lo, hi};
}

long long thickness(const HFKTable& t) {
  auto [lo, hi] = delta_range(t);
  return hi - lo;
}

JumpSequence jump_sequence(const AlexanderPoly& p, long long omega) {
  if (omega == 0) throw std::invalid_argument("omega must be nonzero");
  JumpSequence j;
  if (p.coeffs.empty()) return j;
  long long span = omega < 0 ? -omega : omega;
  long long lo = p.coeffs.begin()->first - span, hi = p.coeffs.rbegin()->first + span;
  for (long long i = lo; i <= hi; ++i) {
    long long d = p.at(i) - p.at(i + omega);
    if (d) j.d[i] = d;
  }
  return j;
}

}  // namespace twistfloer
