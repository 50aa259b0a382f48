#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistfloer/box_tensor.hpp"

namespace twistfloer {

struct InvalidPattern : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HFKTable {
  std::map<std::pair<long long, long long>, long long> dims;  // (a,h) -> dim
  long long twist_count = 0;

  long long total() const;
  long long genus() const;
  bool symmetric() const;
  // (h, dim) pairs in Alexander grading a, ascending h
  std::vector<std::pair<long long, long long>> column(long long a) const;
  std::string text() const;
};

struct AlexanderPoly {
  std::map<long long, long long> coeffs;  // nonzero only
  bool sign_flipped = false;              // set when Δ(1) was -1 before normalizing

  long long at(long long i) const;
  long long degree() const;      // max i with α_i != 0
  long long eval_one() const;
  bool symmetric() const;
  std::string text() const;
};

struct JumpSequence {
  std::map<long long, long long> d;  // nonzero d_i only
  long long count() const { return static_cast<long long>(d.size()); }
  std::vector<long long> first_values(size_t k) const;
};

HFKTable hfk_table(const BoxComplex& knot);
AlexanderPoly alexander_polynomial(const HFKTable& t);
long long tau(const BoxComplex& knot, const BoxComplex& z, const BitVec& z_generator);
long long thickness(const HFKTable& t);
std::pair<long long, long long> delta_range(const HFKTable& t);
JumpSequence jump_sequence(const AlexanderPoly& p, long long omega);

}  // namespace twistfloer
