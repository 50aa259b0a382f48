#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twistfloer {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  BitVec& operator^=(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool none() const;
  long low() const;  // lowest set index or -1
  size_t count() const;
  std::vector<int> support() const;
  bool operator==(const BitVec&) const = default;

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct F2Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<std::pair<size_t, size_t>> entries;  // (r,c), duplicates cancel

  F2Matrix() = default;
  F2Matrix(size_t r, size_t c) : rows(r), cols(c) {}
  void add(size_t r, size_t c);
  std::vector<BitVec> columns() const;
};

// Incremental column reduction with lowest-index pivots.
class ColumnReducer {
 public:
  explicit ColumnReducer(size_t dim, size_t tags = 0) : dim_(dim), tags_(tags), pivot_(dim, -1) {}

  // Reduces v; if independent it joins the basis and true is returned.
  // Otherwise *combo (if given) receives the tag combination expressing v.
  bool insert(BitVec v, BitVec tag, BitVec* combo = nullptr);
  bool in_span(BitVec v, BitVec* combo = nullptr) const;
  size_t rank() const { return basis_.size(); }

 private:
  void reduce(BitVec& v, BitVec& tag) const;
  size_t dim_;
  size_t tags_;
  std::vector<long> pivot_;
  std::vector<BitVec> basis_;
  std::vector<BitVec> basis_tag_;
};

struct SolveResult {
  size_t rank = 0;
  std::vector<std::optional<BitVec>> solutions;
};

SolveResult rank_and_solve(const F2Matrix& m, const std::vector<BitVec>& targets);

struct HomologyBasis {
  std::vector<BitVec> classes;
  size_t cycles_dim = 0;
  size_t boundaries_dim = 0;
  size_t dim() const { return classes.size(); }
};

// A chain complex on n basis elements given by a list of (src, dst) edges.
struct ChainComplexData {
  size_t n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<BitVec> boundary_columns() const;
};

HomologyBasis homology(const ChainComplexData& c);

// Homology split by a grading key that the differential maps between blocks;
// returns (key, basis) for every occupied block, keys ascending.
template <class Key>
std::vector<std::pair<Key, HomologyBasis>> homology_blocks(const ChainComplexData& c,
                                                           const std::vector<Key>& key);

// v in span(spanset) + image of the differential
bool class_in_span(const ChainComplexData& c, const BitVec& v, const std::vector<BitVec>& spanset);

bool boundary_squared_zero(const ChainComplexData& c);

}  // namespace twistfloer

#include "twistfloer/f2_blocks.ipp"
