#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistfloer {

struct GradingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long v) : d_(2 * v) {}
  static constexpr HalfInt from_doubled(long long d) {
    HalfInt h;
    h.d_ = d;
    return h;
  }
  static HalfInt parse(const std::string& s);

  constexpr long long doubled() const { return d_; }
  constexpr bool integral() const { return d_ % 2 == 0; }
  long long to_int() const;
  std::string str() const;

  constexpr HalfInt operator-() const { return from_doubled(-d_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(d_ + o.d_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(d_ - o.d_); }
  constexpr HalfInt operator*(long long k) const { return from_doubled(d_ * k); }
  HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  long long d_ = 0;
};

struct GradingElement {
  HalfInt maslov;
  HalfInt spin_i;
  HalfInt spin_j;
  long long alex = 0;

  GradingElement() = default;
  // throws GradingError when spin_i + spin_j is not integral
  GradingElement(HalfInt m, HalfInt i, HalfInt j, long long a = 0);

  bool operator==(const GradingElement&) const = default;
  std::string str() const;
};

GradingElement compose(const GradingElement& a, const GradingElement& b);
GradingElement inverse(const GradingElement& g);
GradingElement power(const GradingElement& g, long long n);
GradingElement identity_grading();
GradingElement lambda_elt();
GradingElement mu_elt();

inline GradingElement operator*(const GradingElement& a, const GradingElement& b) {
  return compose(a, b);
}

struct Bigrading {
  long long h = 0;
  long long a = 0;
  bool operator==(const Bigrading&) const = default;
  auto operator<=>(const Bigrading&) const = default;
};

// P(z0) \ G / P(eta) for the (0,1) / (1,-m) generator shapes.
class DoubleCosetContext {
 public:
  DoubleCosetContext(GradingElement left_gen, GradingElement right_gen, long long twist_count);

  const GradingElement& left_gen() const { return left_; }
  const GradingElement& right_gen() const { return right_; }
  long long twist_count() const { return m_; }
  long long omega() const { return left_.alex; }
  HalfInt big_m() const { return left_.maslov; }

 private:
  GradingElement left_;
  GradingElement right_;
  long long m_;
};

// (h,a) with [g1] = [g2 λ^h μ^a]; empty if the Spin^c classes differ.
std::optional<Bigrading> relative_bigrading(const DoubleCosetContext& ctx,
                                            const GradingElement& g1,
                                            const GradingElement& g2);

// Same question modulo the left subgroup only (type A op gradings).
std::optional<Bigrading> left_coset_offset(const GradingElement& left_gen,
                                           const GradingElement& g1,
                                           const GradingElement& g2);

// Spin-(0,1) generator of P(z0) from a pattern's periodic generator of
// spin (0,±1).
GradingElement normalize_left_gen(const GradingElement& p);

}  // namespace twistfloer
