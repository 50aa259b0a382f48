#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <utility>

#include "twistfloer/grading.hpp"

namespace twistfloer {

enum class Basis : unsigned char { I0, I1, R1, R2, R3, R12, R23, R123 };
enum class Idem : unsigned char { I0 = 0, I1 = 1 };

inline constexpr std::array<Basis, 8> kAllBasis = {Basis::I0, Basis::I1, Basis::R1,  Basis::R2,
                                                   Basis::R3, Basis::R12, Basis::R23, Basis::R123};
inline constexpr std::array<Basis, 6> kRhoBasis = {Basis::R1,  Basis::R2,  Basis::R3,
                                                   Basis::R12, Basis::R23, Basis::R123};

bool is_idempotent(Basis b);
std::string to_string(Basis b);
std::string to_string(Idem i);
Basis parse_basis(const std::string& s);  // "i0","r12",...
Idem parse_idem(const std::string& s);

// (left, right) idempotent of a basis element
std::pair<Idem, Idem> idempotent_sides(Basis b);
// product of basis elements; nullopt is zero
std::optional<Basis> multiply_basis(Basis a, Basis b);
GradingElement grading_of(Basis b);

// F2-linear combination over the 8 basis elements
class AlgebraValue {
 public:
  AlgebraValue() = default;
  AlgebraValue(Basis b) { bits_.set(static_cast<size_t>(b)); }
  static AlgebraValue unit();

  bool contains(Basis b) const { return bits_.test(static_cast<size_t>(b)); }
  bool zero() const { return bits_.none(); }
  AlgebraValue operator+(const AlgebraValue& o) const;
  bool operator==(const AlgebraValue&) const = default;
  std::string str() const;

 private:
  std::bitset<8> bits_;
};

AlgebraValue multiply(const AlgebraValue& a, const AlgebraValue& b);

}  // namespace twistfloer
