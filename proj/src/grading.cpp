#include "twistfloer/grading.hpp"

#include <charconv>
#include <sstream>

namespace twistfloer {

HalfInt HalfInt::parse(const std::string& s) {
  auto parse_ll = [&](std::string_view v) {
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
      throw GradingError("bad half-integer '" + s + "'");
    return out;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return HalfInt(parse_ll(s));
  std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
  long long d = parse_ll(den);
  long long n = parse_ll(std::string_view(s.data(), slash));
  if (d == 1) return HalfInt(n);
  if (d != 2) throw GradingError("bad half-integer '" + s + "'");
  return from_doubled(n);
}

long long HalfInt::to_int() const {
  if (!integral()) throw GradingError("half-integer " + str() + " is not integral");
  return d_ / 2;
}

std::string HalfInt::str() const {
  if (integral()) return std::to_string(d_ / 2);
  return std::to_string(d_) + "/2";
}

GradingElement::GradingElement(HalfInt m, HalfInt i, HalfInt j, long long a)
    : maslov(m), spin_i(i), spin_j(j), alex(a) {
  if (!(spin_i + spin_j).integral())
    throw GradingError("spin components " + i.str() + "," + j.str() + " do not sum to an integer");
}

std::string GradingElement::str() const {
  std::ostringstream os;
  os << '(' << maslov.str() << ';' << spin_i.str() << ',' << spin_j.str() << ';' << alex << ')';
  return os.str();
}

GradingElement compose(const GradingElement& a, const GradingElement& b) {
  // i1*j2 - j1*i2 in quarter units; always a multiple of 2 since i+j is integral
  long long q = a.spin_i.doubled() * b.spin_j.doubled() - a.spin_j.doubled() * b.spin_i.doubled();
  if (q % 2 != 0) throw GradingError("cross term left the half-integers");
  GradingElement r;
  r.maslov = a.maslov + b.maslov + HalfInt::from_doubled(q / 2);
  r.spin_i = a.spin_i + b.spin_i;
  r.spin_j = a.spin_j + b.spin_j;
  r.alex = a.alex + b.alex;
  return r;
}

GradingElement inverse(const GradingElement& g) {
  GradingElement r;
  r.maslov = -g.maslov;
  r.spin_i = -g.spin_i;
  r.spin_j = -g.spin_j;
  r.alex = -g.alex;
  return r;
}

GradingElement power(const GradingElement& g, long long n) {
  // powers of one element commute, so g^n = (n m; n i, n j; n a)
  GradingElement r;
  r.maslov = g.maslov * n;
  r.spin_i = g.spin_i * n;
  r.spin_j = g.spin_j * n;
  r.alex = g.alex * n;
  return r;
}

GradingElement identity_grading() { return {}; }
GradingElement lambda_elt() { return {HalfInt(1), HalfInt(0), HalfInt(0), 0}; }
GradingElement mu_elt() { return {HalfInt(0), HalfInt(0), HalfInt(0), 1}; }

DoubleCosetContext::DoubleCosetContext(GradingElement left_gen, GradingElement right_gen,
                                       long long twist_count)
    : left_(left_gen), right_(right_gen), m_(twist_count) {
  if (twist_count < 1) throw GradingError("twist count must be positive");
  if (left_.spin_i != HalfInt(0) || left_.spin_j != HalfInt(1))
    throw GradingError("degenerate context: left generator " + left_.str() + " must have spin (0,1)");
  if (right_.spin_i != HalfInt(1) || right_.spin_j != HalfInt(-twist_count))
    throw GradingError("degenerate context: right generator " + right_.str() +
                       " must have spin (1,-m)");
  if (right_.alex != 0) throw GradingError("right generator must have Alexander component 0");
  if (left_.alex == 0) throw GradingError("winding number is zero");
}

std::optional<Bigrading> relative_bigrading(const DoubleCosetContext& ctx,
                                            const GradingElement& g1,
                                            const GradingElement& g2) {
  HalfInt t2 = g2.spin_i - g1.spin_i;
  if (!t2.integral()) return std::nullopt;
  long long t = t2.to_int();
  HalfInt s2 = (g2.spin_j - g1.spin_j) + HalfInt(t * ctx.twist_count());
  if (!s2.integral()) return std::nullopt;
  long long s = s2.to_int();
  GradingElement g = power(ctx.left_gen(), s) * g1 * power(ctx.right_gen(), t);
  HalfInt dh = g.maslov - g2.maslov;
  if (!dh.integral())
    throw GradingError("non-integral Maslov difference between " + g1.str() + " and " + g2.str());
  return Bigrading{dh.to_int(), g.alex - g2.alex};
}

std::optional<Bigrading> left_coset_offset(const GradingElement& left_gen,
                                           const GradingElement& g1,
                                           const GradingElement& g2) {
  if (left_gen.spin_i != HalfInt(0) || left_gen.spin_j != HalfInt(1))
    throw GradingError("left generator must have spin (0,1)");
  if (g1.spin_i != g2.spin_i) return std::nullopt;
  HalfInt s2 = g2.spin_j - g1.spin_j;
  if (!s2.integral()) return std::nullopt;
  GradingElement g = power(left_gen, s2.to_int()) * g1;
  HalfInt dh = g.maslov - g2.maslov;
  if (!dh.integral()) return std::nullopt;
  return Bigrading{dh.to_int(), g.alex - g2.alex};
}

GradingElement normalize_left_gen(const GradingElement& p) {
  if (p.spin_i == HalfInt(0) && p.spin_j == HalfInt(1)) return p;
  if (p.spin_i == HalfInt(0) && p.spin_j == HalfInt(-1)) return inverse(p);
  throw GradingError("periodic generator " + p.str() + " must have spin (0,1) or (0,-1)");
}

}  // namespace twistfloer
