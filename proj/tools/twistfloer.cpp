// twistfloer: knot Floer homology of twist families from bordered data.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistfloer/curve_oracle.hpp"
#include "twistfloer/twist_family.hpp"

using namespace twistfloer;

namespace {

struct Config {
  std::string pattern;
  long long m = 1;
  long long from = 1;
  long long to = 1;
  int k = 2;
  int tail_window = 8;
  int jobs = 1;
  std::string format = "text";
  std::string out;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << body;
}

int run_compute(const Config& c) {
  auto a = load_pattern(c.pattern);
  MResult r = compute_one(a, c.m, c.k);
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    auto& t = j["hfk"] = nlohmann::ordered_json::array();
    for (const auto& [ah, d] : r.table.dims) t.push_back({{"a", ah.first}, {"h", ah.second}, {"dim", d}});
    auto& al = j["alexander"] = nlohmann::ordered_json::array();
    for (auto [i, v] : r.alexander.coeffs) al.push_back({i, v});
    j["total_dim"] = r.total_dim;
    j["genus"] = r.genus;
    j["tau"] = r.tau;
    j["thickness"] = r.thickness;
    os << j.dump(2) << "\n";
  } else if (c.format == "tsv") {
    os << "m\ttotal_dim\tgenus\ttau\tthickness\talex_degree\tdelta_span\n";
    os << r.m << '\t' << r.total_dim << '\t' << r.genus << '\t' << r.tau << '\t' << r.thickness
       << '\t' << r.alex_degree << '\t' << r.delta_min << ".." << r.delta_max << '\n';
  } else {
    os << r.table.text();
    os << "Δ = " << r.alexander.text() << "\n";
    os << "total " << r.total_dim << ", genus " << r.genus << ", τ = " << r.tau
       << ", th = " << r.thickness << "\n";
  }
  emit(c, os.str());
  return 0;
}

int run_sweep(const Config& c) {
  auto a = load_pattern(c.pattern);
  SweepOptions opt{c.from, c.to, c.k, c.tail_window, c.jobs};
  SweepReport rep = sweep(a, opt);
  if (c.format == "json")
    emit(c, report_json(rep));
  else if (c.format == "tsv")
    emit(c, report_tsv(rep));
  else
    emit(c, report_text(rep));
  if (c.format == "tsv")
    for (const auto& v : rep.verdicts)
      std::cerr << (v.passed ? "PASS  " : "FAIL  ") << v.name << ": " << v.detail << "\n";
  return rep.all_passed() ? 0 : 2;
}

int run_verify(const Config& c, bool m_given) {
  auto a = load_pattern(c.pattern);
  std::ostringstream os;
  bool ok = true;
  auto gr = verify_op_gradings(a);
  os << "op gradings: " << (gr.ok() ? "ok" : "FLAGGED") << "\n";
  for (const auto& v : gr.violations) os << "  " << v.op << ": " << v.detail << "\n";
  ok &= gr.ok();
  int depth = m_given ? static_cast<int>(c.m) + 2 : 6;
  for (View view : {View::Knot, View::Full}) {
    auto rep = verify_a_infinity(a, view, depth);
    os << (view == View::Knot ? "A-infinity (knot view, " : "A-infinity (full view, ") << depth
       << " args): " << (rep.ok() ? "ok" : "FAILED") << " over " << rep.words_checked << " words\n";
    for (const auto& v : rep.violations) {
      os << "  " << a.op_string(v.src, v.word) << " residue:";
      for (auto [d, w] : v.residue) os << " " << a.names[d] << "[w=" << w << "]";
      os << "\n";
    }
    ok &= rep.ok();
  }
  if (m_given) {
    auto d = build_cfd_one_over_m(c.m);
    auto dr = verify_type_d(d);
    os << "CFD(1/" << c.m << "): " << (dr.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& p : dr.problems) os << "  " << p << "\n";
    ok &= dr.ok();
    for (View view : {View::Knot, View::Full}) {
      auto bc = build_complex(a, view, c.m);
      bool sq = boundary_squared_zero(bc.chain());
      os << "d^2 = 0 (" << (view == View::Knot ? "knot" : "full") << "): " << (sq ? "ok" : "FAILED")
         << "\n";
      ok &= sq;
    }
  }
  emit(c, os.str());
  return ok ? 0 : 2;
}

int run_predict(const Config& c, bool m_given) {
  std::ifstream probe(c.pattern);
  if (!probe) throw InputError("cannot open " + c.pattern);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(probe);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
  long long lo = m_given ? c.m : c.from, hi = m_given ? c.m : c.to;
  std::ostringstream os;
  bool ok = true;
  if (j.contains("components")) {
    CurveSystem cs = parse_curves(j.dump());
    os << "m\tpredicted_dim\n";
    for (long long m = lo; m <= hi; ++m) os << m << '\t' << predicted_dim(cs, m) << '\n';
  } else {
    auto a = parse_pattern(j.dump());
    SweepOptions opt{lo, hi, 1, c.tail_window, c.jobs};
    std::vector<std::pair<long long, long long>> dims;
    {
      SweepReport rep = sweep(a, opt);
      for (const auto& r : rep.per_m) dims.emplace_back(r.m, r.total_dim);
    }
    size_t w = std::min(dims.size(), static_cast<size_t>(c.tail_window));
    std::vector<std::pair<long long, long long>> tail(dims.end() - static_cast<long>(w), dims.end());
    DimFit f = fit_curve_from_dims(tail);
    CurveSystem cs = fitted_system(f);
    os << "D = " << f.D << ", d = " << f.d << "\n";
    os << "m\tmeasured\tpredicted\n";
    for (auto [m, v] : tail) {
      long long p = predicted_dim(cs, m);
      ok &= p == v;
      os << m << '\t' << v << '\t' << p << '\n';
    }
  }
  emit(c, os.str());
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology of twist families"};
  app.require_subcommand(1);
  Config c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pattern", c.pattern, "pattern (or curve) JSON file")->required();
    sub->add_option("--m", c.m, "twist count")->check(CLI::PositiveNumber);
    sub->add_option("--from", c.from, "first twist count")->check(CLI::PositiveNumber);
    sub->add_option("--to", c.to, "last twist count")->check(CLI::PositiveNumber);
    sub->add_option("--k", c.k, "extremal groups / jumps to track")->check(CLI::PositiveNumber);
    sub->add_option("--tail-window", c.tail_window, "points in the affine tail fit")
        ->check(CLI::Range(3, 1000));
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "text"}));
    sub->add_option("--out", c.out, "output file");
  };
  auto* compute = app.add_subcommand("compute", "invariants of one K_m");
  auto* sweep_cmd = app.add_subcommand("sweep", "invariants over a range of m, with fits");
  auto* verify = app.add_subcommand("verify", "structure and grading checks");
  auto* predict = app.add_subcommand("predict", "immersed-curve dimension oracle");
  for (auto* s : {compute, sweep_cmd, verify, predict}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  // --out report.tsv implies --format tsv unless a format was given
  for (auto* s : {compute, sweep_cmd, verify, predict})
    if (s->parsed() && s->count("--format") == 0) {
      auto ends = [&](const std::string& x) {
        return c.out.size() > x.size() && c.out.compare(c.out.size() - x.size(), x.size(), x) == 0;
      };
      if (ends(".tsv")) c.format = "tsv";
      if (ends(".json")) c.format = "json";
    }

  try {
    if (c.from > c.to) throw InputError("--from must not exceed --to");
    if (compute->parsed()) return run_compute(c);
    if (sweep_cmd->parsed()) return run_sweep(c);
    if (verify->parsed()) return run_verify(c, verify->count("--m") > 0);
    if (predict->parsed()) return run_predict(c, predict->count("--m") > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
