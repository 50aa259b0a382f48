#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistfloer/f2.hpp"
#include "twistfloer/grading.hpp"
#include "twistfloer/type_a.hpp"
#include "twistfloer/type_d.hpp"

namespace twistfloer {

struct BoxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// box 0 is the black box C•, box i >= 1 is the white box C°_i
struct BoxElement {
  int a_gen;
  int box;
  bool black() const { return box == 0; }
  bool operator==(const BoxElement&) const = default;
};

struct BoxEdge {
  int src;
  int dst;
  int type;  // 1..4
};

enum class GradingTable { Clockwise, Counterclockwise };

struct BoxComplex {
  long long twist_count = 0;
  View view = View::Knot;
  std::vector<BoxElement> basis;
  std::vector<BoxEdge> edges;
  std::vector<GradingElement> composed;  // gr(x)·gr(y)
  std::vector<Bigrading> bigrading;      // relative until bigrade() runs
  bool absolute = false;
  DoubleCosetContext ctx;
  std::vector<std::string> a_names;

  int size() const { return static_cast<int>(basis.size()); }
  int index_of(const BoxElement& e) const;
  std::string label(int idx) const;
  ChainComplexData chain() const;
};

BoxComplex build_complex(const TypeAStructure& a, View view, long long twist_count,
                         GradingTable table = GradingTable::Clockwise);

std::optional<BoxElement> shift(const BoxElement& e, int dir, long long twist_count);

enum class Inclusion { Phi, PhiPrime };
BoxElement inclusion(const BoxElement& e, long long twist_count, Inclusion variant);

struct BigradeResult {
  BitVec z_generator;  // representative meeting C•
  int anchor = -1;     // basis index of the Maslov anchor in C•
  long long alex_shift = 0;
  long long maslov_shift = 0;
};

// Normalizes both complexes (same pattern, same m) to absolute gradings.
BigradeResult bigrade(BoxComplex& knot, BoxComplex& z);

std::string dump_json(const BoxComplex& c);

}  // namespace twistfloer
