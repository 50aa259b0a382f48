#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistfloer/invariants.hpp"
#include "twistfloer/type_a.hpp"

namespace twistfloer {

using Rational = boost::rational<long long>;

struct MResult {
  long long m = 0;
  long long total_dim = 0;
  long long genus = 0;
  long long tau = 0;
  long long thickness = 0;
  long long delta_min = 0;
  long long delta_max = 0;
  long long alex_degree = 0;
  AlexanderPoly alexander;
  JumpSequence jumps;
  HFKTable table;
  // extremal_groups[j]: (h, dim) of ĤFK(K_m, -g + j)
  std::vector<std::vector<std::pair<long long, long long>>> extremal_groups;
};

struct LinearFit {
  Rational slope;
  Rational intercept;
  bool integral() const { return slope.denominator() == 1 && intercept.denominator() == 1; }
};

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Derived {
  long long omega = 0;
  long long lk = 0;
  std::optional<long long> x_norm;
  std::optional<Rational> f_k;
};

struct SweepReport {
  std::vector<MResult> per_m;
  std::map<std::string, std::optional<LinearFit>> fits;
  Derived derived;
  std::vector<Verdict> verdicts;
  bool all_passed() const;
};

struct SweepOptions {
  long long m_from = 1;
  long long m_to = 1;
  int k = 2;
  int tail_window = 8;
  int jobs = 1;
};

MResult compute_one(const TypeAStructure& a, long long m, int k);

SweepReport sweep(const TypeAStructure& a, const SweepOptions& opt);

// exact line through the last `window` points
std::optional<LinearFit> fit_linear_tail(const std::vector<std::pair<long long, Rational>>& series,
                                         size_t window);
std::optional<LinearFit> fit_linear_tail(const std::vector<std::pair<long long, long long>>& series,
                                         size_t window);

// fit on `window` points ending 3 before the tail, re-verified on the last 3
std::optional<LinearFit> verified_tail_fit(const std::vector<std::pair<long long, long long>>& series,
                                           size_t window, size_t extra = 3);

std::pair<long long, Rational> derive_fk(long long lk, const LinearFit& two_genus_fit);
Rational f_k_formula(long long lk, long long x_norm);

std::string report_tsv(const SweepReport& r);
std::string report_json(const SweepReport& r);
std::string report_text(const SweepReport& r);

std::string rational_str(const Rational& q);

}  // namespace twistfloer
