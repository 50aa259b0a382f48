#include "twistfloer/curve_oracle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace twistfloer {

void validate(const CurveSystem& c) {
  for (const auto& comp : c.components) {
    if (comp.k < 1) throw std::invalid_argument("local system dimension must be positive");
    for (auto [p, q] : comp.slopes) {
      if (q < 0) throw std::invalid_argument("slope q must be nonnegative");
      if (q == 0 && p != 1 && p != -1) throw std::invalid_argument("vertical slope must be (±1,0)");
      if (q > 0 && std::gcd(p, q) != 1) throw std::invalid_argument("slope is not primitive");
    }
  }
}

CurveSystem parse_curves(const std::string& text) {
  CurveSystem c;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& comp : j.at("components")) {
      CurveComponent cc;
      cc.k = comp.at("k").get<long long>();
      for (const auto& s : comp.at("slopes"))
        cc.slopes.emplace_back(s.at(0).get<long long>(), s.at(1).get<long long>());
      c.components.push_back(cc);
    }
    c.fitted = j.value("fitted", false);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("curve file: ") + e.what());
  }
  validate(c);
  return c;
}

CurveSystem load_curves(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curves(ss.str());
}

CurveSystem dehn_twist(const CurveSystem& c, long long n) {
  CurveSystem r = c;
  for (auto& comp : r.components)
    for (auto& [p, q] : comp.slopes) q += n * p;
  return r;
}

CurveSystem surgery_shear(const CurveSystem& c, long long n) {
  CurveSystem r = c;
  for (auto& comp : r.components)
    for (auto& [p, q] : comp.slopes) p -= n * q;
  return r;
}

long long intersection_count(const CurveSystem& c, long long lp, long long lq) {
  long long total = 0;
  for (const auto& comp : c.components)
    for (auto [p, q] : comp.slopes) {
      long long det = p * lq - q * lp;
      if (det == 0) throw SlopeCollision("slope (" + std::to_string(p) + "," + std::to_string(q) +
                                         ") is parallel to the surgery line");
      total += comp.k * (det < 0 ? -det : det);
    }
  return total;
}

long long predicted_dim(const CurveSystem& c, long long m) { return intersection_count(c, m, 1); }

DimFit fit_curve_from_dims(const std::vector<std::pair<long long, long long>>& dims) {
  if (dims.size() < 2) throw std::invalid_argument("need at least two points");
  auto [m0, v0] = dims[0];
  auto [m1, v1] = dims[1];
  if (m1 == m0 || (v1 - v0) % (m1 - m0) != 0) throw std::invalid_argument("input is not affine");
  long long D = (v1 - v0) / (m1 - m0);
  long long d = D * m0 - v0;
  for (auto [m, v] : dims)
    if (D * m - d != v) throw std::invalid_argument("input is not affine");
  if (D < 0) throw std::invalid_argument("negative dimension slope");
  return {D, d};
}

CurveSystem fitted_system(const DimFit& f) {
  CurveSystem c;
  c.fitted = true;
  if (f.D > 0) {
    c.components.push_back({1, {{f.d, 1}}});
    if (f.D > 1) c.components.push_back({f.D - 1, {{0, 1}}});
  } else {
    if (f.d >= 0) throw std::invalid_argument("constant dimension must be positive");
    c.components.push_back({-f.d, {{1, 0}}});
  }
  validate(c);
  return c;
}

}  // namespace twistfloer
