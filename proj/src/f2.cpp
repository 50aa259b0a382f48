#include "twistfloer/f2.hpp"

#include <bit>

namespace twistfloer {

bool BitVec::none() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

long BitVec::low() const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return static_cast<long>(k * 64 + std::countr_zero(w_[k]));
  return -1;
}

size_t BitVec::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  for (size_t k = 0; k < w_.size(); ++k) {
    uint64_t w = w_[k];
    while (w) {
      out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void F2Matrix::add(size_t r, size_t c) {
  if (r >= rows || c >= cols) throw std::out_of_range("F2Matrix entry out of range");
  entries.emplace_back(r, c);
}

std::vector<BitVec> F2Matrix::columns() const {
  std::vector<BitVec> out(cols, BitVec(rows));
  for (auto [r, c] : entries) out[c].flip(r);
  return out;
}

void ColumnReducer::reduce(BitVec& v, BitVec& tag) const {
  long p;
  while ((p = v.low()) >= 0 && pivot_[p] >= 0) {
    v ^= basis_[pivot_[p]];
    if (tags_) tag ^= basis_tag_[pivot_[p]];
  }
}

bool ColumnReducer::insert(BitVec v, BitVec tag, BitVec* combo) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  if (tags_ && tag.size() != tags_) tag = BitVec(tags_);
  reduce(v, tag);
  long p = v.low();
  if (p < 0) {
    if (combo) *combo = tag;
    return false;
  }
  pivot_[p] = static_cast<long>(basis_.size());
  basis_.push_back(std::move(v));
  basis_tag_.push_back(std::move(tag));
  return true;
}

bool ColumnReducer::in_span(BitVec v, BitVec* combo) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  BitVec tag(tags_);
  reduce(v, tag);
  if (combo) *combo = tag;
  return v.none();
}

SolveResult rank_and_solve(const F2Matrix& m, const std::vector<BitVec>& targets) {
  ColumnReducer red(m.rows, m.cols);
  auto cols = m.columns();
  for (size_t c = 0; c < m.cols; ++c) {
    BitVec tag(m.cols);
    tag.set(c);
    red.insert(cols[c], tag);
  }
  SolveResult res;
  res.rank = red.rank();
  for (const auto& t : targets) {
    if (t.size() != m.rows) throw std::invalid_argument("target dimension mismatch");
    BitVec combo;
    if (red.in_span(t, &combo))
      res.solutions.emplace_back(combo);
    else
      res.solutions.emplace_back(std::nullopt);
  }
  return res;
}

std::vector<BitVec> ChainComplexData::boundary_columns() const {
  std::vector<BitVec> cols(n, BitVec(n));
  for (auto [s, d] : edges) cols[s].flip(d);
  return cols;
}

HomologyBasis homology(const ChainComplexData& c) {
  std::vector<int> key(c.n, 0);
  auto blocks = homology_blocks(c, key);
  if (blocks.empty()) return {};
  return blocks.front().second;
}

bool class_in_span(const ChainComplexData& c, const BitVec& v, const std::vector<BitVec>& spanset) {
  ColumnReducer red(c.n);
  for (const auto& col : c.boundary_columns()) red.insert(col, BitVec());
  for (const auto& s : spanset) red.insert(s, BitVec());
  return red.in_span(v);
}

bool boundary_squared_zero(const ChainComplexData& c) {
  auto cols = c.boundary_columns();
  for (size_t i = 0; i < c.n; ++i) {
    BitVec acc(c.n);
    for (int t : cols[i].support()) acc ^= cols[t];
    if (!acc.none()) return false;
  }
  return true;
}

}  // namespace twistfloer
