#pragma once

#include <string>
#include <vector>

#include "twistfloer/grading.hpp"
#include "twistfloer/torus_algebra.hpp"

namespace twistfloer {

// An edge label of I0 or I1 stands for an unlabeled (∅) edge.
struct DEdge {
  int src;
  Basis label;
  int dst;
};

struct TypeDStructure {
  std::vector<std::string> names;
  std::vector<Idem> idems;
  std::vector<DEdge> edges;
  std::vector<GradingElement> grading_cw;
  std::vector<GradingElement> grading_ccw;
  GradingElement periodic_gen;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
};

struct DeltaSequence {
  std::vector<Basis> labels;
  int end;
  bool operator==(const DeltaSequence&) const = default;
};

struct TypeDReport {
  bool bounded = false;
  bool reduced = false;
  bool labels_ok = false;
  bool relation_ok = false;
  bool grading_ok = false;
  std::vector<std::string> problems;
  bool ok() const { return bounded && reduced && labels_ok && relation_ok && grading_ok; }
};

// generators: eta (index 0), xi_1..xi_m (indices 1..m)
TypeDStructure build_cfd_one_over_m(long long twist_count);

std::vector<DeltaSequence> delta_sequences(const TypeDStructure& d, int start, int max_len);

TypeDReport verify_type_d(const TypeDStructure& d);

}  // namespace twistfloer
