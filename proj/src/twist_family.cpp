#include "twistfloer/twist_family.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace twistfloer {

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool SweepReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

MResult compute_one(const TypeAStructure& a, long long m, int k) {
  BoxComplex knot = build_complex(a, View::Knot, m);
  BoxComplex z = build_complex(a, View::Full, m);
  BigradeResult br = bigrade(knot, z);
  MResult r;
  r.m = m;
  r.table = hfk_table(knot);
  r.total_dim = r.table.total();
  r.genus = r.table.genus();
  r.alexander = alexander_polynomial(r.table);
  r.alex_degree = r.alexander.degree();
  r.tau = tau(knot, z, br.z_generator);
  auto [lo, hi] = delta_range(r.table);
  r.delta_min = lo;
  r.delta_max = hi;
  r.thickness = hi - lo;
  r.jumps = jump_sequence(r.alexander, a.omega());
  for (int j = 0; j < k; ++j) r.extremal_groups.push_back(r.table.column(-r.genus + j));
  return r;
}

std::optional<LinearFit> fit_linear_tail(const std::vector<std::pair<long long, Rational>>& s,
                                         size_t window) {
  if (window < 2 || s.size() < window) return std::nullopt;
  auto first = s.end() - static_cast<long>(window);
  auto [m0, v0] = *first;
  auto [m1, v1] = *(first + 1);
  if (m1 == m0) return std::nullopt;
  Rational slope = (v1 - v0) / Rational(m1 - m0);
  Rational intercept = v0 - slope * Rational(m0);
  for (auto it = first; it != s.end(); ++it)
    if (slope * Rational(it->first) + intercept != it->second) return std::nullopt;
  return LinearFit{slope, intercept};
}

std::optional<LinearFit> fit_linear_tail(const std::vector<std::pair<long long, long long>>& s,
                                         size_t window) {
  std::vector<std::pair<long long, Rational>> q;
  for (auto [m, v] : s) q.emplace_back(m, Rational(v));
  return fit_linear_tail(q, window);
}

std::optional<LinearFit> verified_tail_fit(const std::vector<std::pair<long long, long long>>& s,
                                           size_t window, size_t extra) {
  if (s.size() < window + extra) return std::nullopt;
  std::vector<std::pair<long long, long long>> head(s.begin(), s.end() - static_cast<long>(extra));
  auto fit = fit_linear_tail(head, window);
  if (!fit) return std::nullopt;
  for (auto it = s.end() - static_cast<long>(extra); it != s.end(); ++it)
    if (fit->slope * Rational(it->first) + fit->intercept != Rational(it->second)) return std::nullopt;
  return fit;
}

Rational f_k_formula(long long lk, long long x) {
  return Rational((lk - x + 1) * (lk - x - 1), 4);
}

std::pair<long long, Rational> derive_fk(long long lk, const LinearFit& g2) {
  if (lk <= 0) throw std::invalid_argument("linking number must be positive");
  Rational x = g2.slope / Rational(lk);
  if (x.denominator() != 1)
    throw std::runtime_error("genus slope " + rational_str(g2.slope) +
                             " is not divisible by lk; tail too short?");
  long long xn = x.numerator();
  return {xn, f_k_formula(lk, xn)};
}

namespace {

using Series = std::vector<std::pair<long long, long long>>;

template <class F>
Series series_of(const std::vector<MResult>& rs, F f) {
  Series s;
  for (const auto& r : rs) s.emplace_back(r.m, f(r));
  return s;
}

std::string fit_detail(const std::optional<LinearFit>& f) {
  if (!f) return "no exact affine tail";
  return "slope " + rational_str(f->slope) + ", intercept " + rational_str(f->intercept);
}

}  // namespace

SweepReport sweep(const TypeAStructure& a, const SweepOptions& opt) {
  if (opt.m_from < 1 || opt.m_to < opt.m_from) throw std::invalid_argument("bad m range");
  if (opt.k < 1) throw std::invalid_argument("k must be at least 1");
  SweepReport rep;
  const long long count = opt.m_to - opt.m_from + 1;
  rep.per_m.resize(count);

  std::atomic<long long> next{0};
  std::mutex err_mu;
  std::string first_error;
  long long first_error_m = -1;
  auto worker = [&] {
    for (long long i; (i = next.fetch_add(1)) < count;) {
      long long m = opt.m_from + i;
      try {
        rep.per_m[i] = compute_one(a, m, opt.k);
      } catch (const std::exception& e) {
        std::lock_guard lk(err_mu);
        if (first_error_m < 0 || m < first_error_m) {
          first_error_m = m;
          first_error = e.what();
        }
      }
    }
  };
  int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error_m >= 0)
    throw std::runtime_error("m=" + std::to_string(first_error_m) + ": " + first_error);

  const auto& rs = rep.per_m;
  const size_t win = static_cast<size_t>(opt.tail_window);
  auto total = series_of(rs, [](const MResult& r) { return r.total_dim; });
  auto g2 = series_of(rs, [](const MResult& r) { return 2 * r.genus; });
  auto ta = series_of(rs, [](const MResult& r) { return r.tau; });
  auto th = series_of(rs, [](const MResult& r) { return r.thickness; });
  auto deg = series_of(rs, [](const MResult& r) { return r.alex_degree; });
  rep.fits["total_dim"] = verified_tail_fit(total, win);
  rep.fits["two_genus"] = verified_tail_fit(g2, win);
  rep.fits["tau"] = verified_tail_fit(ta, win);
  rep.fits["thickness"] = verified_tail_fit(th, win);
  rep.fits["alex_degree"] = verified_tail_fit(deg, win);

  for (const char* name : {"total_dim", "two_genus", "tau", "thickness"}) {
    const auto& f = rep.fits[name];
    rep.verdicts.push_back({std::string(name) + " affine", f && f->integral(), fit_detail(f)});
  }

  rep.derived.omega = a.omega();
  rep.derived.lk = a.omega() < 0 ? -a.omega() : a.omega();
  if (const auto& f = rep.fits["two_genus"]) {
    try {
      auto [xn, fk] = derive_fk(rep.derived.lk, *f);
      rep.derived.x_norm = xn;
      rep.derived.f_k = fk;
    } catch (const std::exception&) {
    }
  }
  rep.verdicts.push_back({"x norm derived", rep.derived.x_norm.has_value(),
                          rep.derived.x_norm ? "x=" + std::to_string(*rep.derived.x_norm) +
                                                   ", F_K=" + rational_str(*rep.derived.f_k)
                                             : "genus slope unusable"});

  // tail indices used for stabilization checks
  const size_t tail_len = std::min(rs.size(), win + 3);
  const size_t t0 = rs.size() - tail_len;
  const bool enough = rs.size() >= win + 3;

  {
    bool ok = enough && rep.derived.f_k && rep.derived.f_k->denominator() == 1;
    std::string detail = enough ? "" : "range shorter than tail window + 3";
    std::optional<long long> measured;
    if (ok) {
      long long fk = rep.derived.f_k->numerator();
      for (size_t i = t0; i + 1 < rs.size() && ok; ++i)
        for (int j = 0; j < opt.k && ok; ++j) {
          const auto& lo = rs[i].extremal_groups[j];
          const auto& hi = rs[i + 1].extremal_groups[j];
          if (lo.size() != hi.size()) {
            ok = false;
            detail = "group " + std::to_string(j) + " changes shape at m=" + std::to_string(rs[i].m);
            break;
          }
          for (size_t e = 0; e < lo.size(); ++e) {
            long long s = lo[e].first - hi[e].first;
            if (!measured) measured = s;
            if (lo[e].second != hi[e].second || s != *measured) {
              ok = false;
              detail = "group " + std::to_string(j) + " differs at m=" + std::to_string(rs[i].m);
              break;
            }
          }
        }
      if (ok && measured && *measured != fk) {
        ok = false;
        detail = "measured shift " + std::to_string(*measured) + " != F_K " + std::to_string(fk);
      }
      if (ok) detail = "shift " + std::to_string(measured.value_or(0)) + " = F_K";
    }
    rep.verdicts.push_back({"extremal groups stabilize", ok, detail});
  }
  {
    bool ok = enough;
    std::string detail = enough ? "" : "range shorter than tail window + 3";
    for (size_t i = t0; ok && i + 1 < rs.size(); ++i) {
      if (rs[i].jumps.first_values(opt.k) != rs[i + 1].jumps.first_values(opt.k) ||
          rs[i].jumps.count() != rs[i + 1].jumps.count()) {
        ok = false;
        detail = "jumps change at m=" + std::to_string(rs[i].m);
      }
    }
    if (ok) detail = "nonzero jumps " + std::to_string(rs.back().jumps.count());
    rep.verdicts.push_back({"alexander jumps stabilize", ok, detail});
  }
  {
    const auto& f = rep.fits["alex_degree"];
    bool ok = f.has_value() && rep.derived.x_norm.has_value();
    std::string detail = fit_detail(f);
    if (ok) {
      Rational l = f->slope * Rational(2) / Rational(rep.derived.lk);
      ok = l.denominator() == 1 && l.numerator() >= 0 && l.numerator() <= *rep.derived.x_norm;
      detail += ", l=" + rational_str(l);
    }
    rep.verdicts.push_back({"alexander degree slope quantized", ok, detail});
  }
  return rep;
}

std::string report_tsv(const SweepReport& r) {
  std::ostringstream os;
  os << "m\ttotal_dim\tgenus\ttau\tthickness\talex_degree\tdelta_span\n";
  for (const auto& x : r.per_m)
    os << x.m << '\t' << x.total_dim << '\t' << x.genus << '\t' << x.tau << '\t' << x.thickness
       << '\t' << x.alex_degree << '\t' << x.delta_min << ".." << x.delta_max << '\n';
  return os.str();
}

std::string report_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  auto& rows = j["per_m"] = nlohmann::ordered_json::array();
  for (const auto& x : r.per_m) {
    nlohmann::ordered_json row;
    row["m"] = x.m;
    row["total_dim"] = x.total_dim;
    row["genus"] = x.genus;
    row["tau"] = x.tau;
    row["thickness"] = x.thickness;
    row["delta_min"] = x.delta_min;
    row["delta_max"] = x.delta_max;
    row["alex_degree"] = x.alex_degree;
    auto& al = row["alexander"] = nlohmann::ordered_json::array();
    for (auto [i, c] : x.alexander.coeffs) al.push_back({i, c});
    auto& jm = row["jumps"] = nlohmann::ordered_json::array();
    for (auto [i, d] : x.jumps.d) jm.push_back({i, d});
    auto& ex = row["extremal_groups"] = nlohmann::ordered_json::array();
    for (const auto& g : x.extremal_groups) {
      auto arr = nlohmann::ordered_json::array();
      for (auto [h, d] : g) arr.push_back({h, d});
      ex.push_back(arr);
    }
    rows.push_back(row);
  }
  auto& fits = j["fits"] = nlohmann::ordered_json::object();
  for (const auto& [name, f] : r.fits) {
    if (f)
      fits[name] = {{"slope", rational_str(f->slope)}, {"intercept", rational_str(f->intercept)}};
    else
      fits[name] = nullptr;
  }
  auto& d = j["derived"];
  d["omega"] = r.derived.omega;
  d["lk"] = r.derived.lk;
  d["x_norm"] = r.derived.x_norm ? nlohmann::ordered_json(*r.derived.x_norm) : nullptr;
  d["F_K"] = r.derived.f_k ? nlohmann::ordered_json(rational_str(*r.derived.f_k)) : nullptr;
  auto& v = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& x : r.verdicts)
    v.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
  return j.dump(2) + "\n";
}

std::string report_text(const SweepReport& r) {
  std::ostringstream os;
  os << report_tsv(r);
  os << "\nomega " << r.derived.omega << ", lk " << r.derived.lk;
  if (r.derived.x_norm) os << ", x " << *r.derived.x_norm << ", F_K " << rational_str(*r.derived.f_k);
  os << "\n";
  for (const auto& v : r.verdicts)
    os << (v.passed ? "PASS  " : "FAIL  ") << v.name << ": " << v.detail << "\n";
  return os.str();
}

}  // namespace twistfloer
