#include "twistfloer/torus_algebra.hpp"

#include <stdexcept>

namespace twistfloer {

namespace {

const GradingElement& rho_grading(Basis b) {
  static const GradingElement r1{HalfInt::from_doubled(-1), HalfInt::from_doubled(1),
                                 HalfInt::from_doubled(-1), 0};
  static const GradingElement r2{HalfInt::from_doubled(-1), HalfInt::from_doubled(1),
                                 HalfInt::from_doubled(1), 0};
  static const GradingElement r3{HalfInt::from_doubled(-1), HalfInt::from_doubled(-1),
                                 HalfInt::from_doubled(1), 0};
  static const GradingElement r12 = r1 * r2;
  static const GradingElement r23 = r2 * r3;
  static const GradingElement r123 = r1 * r2 * r3;
  static const GradingElement id{};
  switch (b) {
    case Basis::R1: return r1;
    case Basis::R2: return r2;
    case Basis::R3: return r3;
    case Basis::R12: return r12;
    case Basis::R23: return r23;
    case Basis::R123: return r123;
    default: return id;
  }
}

}  // namespace

bool is_idempotent(Basis b) { return b == Basis::I0 || b == Basis::I1; }

std::string to_string(Basis b) {
  switch (b) {
    case Basis::I0: return "i0";
    case Basis::I1: return "i1";
    case Basis::R1: return "r1";
    case Basis::R2: return "r2";
    case Basis::R3: return "r3";
    case Basis::R12: return "r12";
    case Basis::R23: return "r23";
    case Basis::R123: return "r123";
  }
  return "?";
}

std::string to_string(Idem i) { return i == Idem::I0 ? "i0" : "i1"; }

Basis parse_basis(const std::string& s) {
  for (Basis b : kAllBasis)
    if (to_string(b) == s) return b;
  throw std::invalid_argument("unknown algebra element '" + s + "'");
}

Idem parse_idem(const std::string& s) {
  if (s == "i0") return Idem::I0;
  if (s == "i1") return Idem::I1;
  throw std::invalid_argument("unknown idempotent '" + s + "'");
}

std::pair<Idem, Idem> idempotent_sides(Basis b) {
  switch (b) {
    case Basis::I0: return {Idem::I0, Idem::I0};
    case Basis::I1: return {Idem::I1, Idem::I1};
    case Basis::R1: return {Idem::I0, Idem::I1};
    case Basis::R2: return {Idem::I1, Idem::I0};
    case Basis::R3: return {Idem::I0, Idem::I1};
    case Basis::R12: return {Idem::I0, Idem::I0};
    case Basis::R23: return {Idem::I1, Idem::I1};
    case Basis::R123: return {Idem::I0, Idem::I1};
  }
  return {Idem::I0, Idem::I0};
}

std::optional<Basis> multiply_basis(Basis a, Basis b) {
  auto [al, ar] = idempotent_sides(a);
  auto [bl, br] = idempotent_sides(b);
  if (ar != bl) return std::nullopt;
  if (is_idempotent(a)) return b;
  if (is_idempotent(b)) return a;
  if (a == Basis::R1 && b == Basis::R2) return Basis::R12;
  if (a == Basis::R2 && b == Basis::R3) return Basis::R23;
  if (a == Basis::R1 && b == Basis::R23) return Basis::R123;
  if (a == Basis::R12 && b == Basis::R3) return Basis::R123;
  return std::nullopt;
}

GradingElement grading_of(Basis b) { return rho_grading(b); }

AlgebraValue AlgebraValue::unit() { return AlgebraValue(Basis::I0) + AlgebraValue(Basis::I1); }

AlgebraValue AlgebraValue::operator+(const AlgebraValue& o) const {
  AlgebraValue r;
  r.bits_ = bits_ ^ o.bits_;
  return r;
}

std::string AlgebraValue::str() const {
  if (zero()) return "0";
  std::string out;
  for (Basis b : kAllBasis) {
    if (!contains(b)) continue;
    if (!out.empty()) out += "+";
    out += to_string(b);
  }
  return out;
}

AlgebraValue multiply(const AlgebraValue& a, const AlgebraValue& b) {
  AlgebraValue r;
  for (Basis x : kAllBasis) {
    if (!a.contains(x)) continue;
    for (Basis y : kAllBasis) {
      if (!b.contains(y)) continue;
      if (auto p = multiply_basis(x, y)) r = r + AlgebraValue(*p);
    }
  }
  return r;
}

}  // namespace twistfloer
