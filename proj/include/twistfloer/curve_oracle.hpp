#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistfloer {

struct SlopeCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveComponent {
  long long k = 1;
  std::vector<std::pair<long long, long long>> slopes;  // (p, q)
  bool operator==(const CurveComponent&) const = default;
};

struct CurveSystem {
  std::vector<CurveComponent> components;
  bool fitted = false;
  bool operator==(const CurveSystem& o) const { return components == o.components; }
};

void validate(const CurveSystem& c);
CurveSystem load_curves(const std::filesystem::path& file);
CurveSystem parse_curves(const std::string& json_text);

// (p,q) -> (p, q + n p)
CurveSystem dehn_twist(const CurveSystem& c, long long n);
// (p,q) -> (p - n q, q); moves the surgery line from slope m to m + n
CurveSystem surgery_shear(const CurveSystem& c, long long n);

// Σ k |p·lq - q·lp| against a line of direction (lp, lq)
long long intersection_count(const CurveSystem& c, long long lp, long long lq);
long long predicted_dim(const CurveSystem& c, long long twist_count);

struct DimFit {
  long long D;
  long long d;
};
DimFit fit_curve_from_dims(const std::vector<std::pair<long long, long long>>& dims);
CurveSystem fitted_system(const DimFit& f);

}  // namespace twistfloer
