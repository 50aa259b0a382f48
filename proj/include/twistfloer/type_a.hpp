#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistfloer/grading.hpp"
#include "twistfloer/torus_algebra.hpp"

namespace twistfloer {

struct PatternError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class View { Knot, Full };

struct AOperation {
  int src;
  std::vector<Basis> args;
  int dst;
  long long w = 0;
};

// m(src ⊗ prefix ⊗ r23^n ⊗ suffix) = dst with multiplicity w + n*w_step
struct ChainFamilyOp {
  int src;
  std::vector<Basis> prefix;
  std::vector<Basis> suffix;
  int dst;
  long long w = 0;
  long long w_step = 0;
};

class TypeAStructure {
 public:
  std::vector<std::string> names;
  std::vector<Idem> idems;
  std::vector<GradingElement> gradings;
  GradingElement periodic_gen;
  std::vector<AOperation> ops;
  std::vector<ChainFamilyOp> families;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
  // spin (0,1) generator of P(z0)
  GradingElement left_gen() const { return normalize_left_gen(periodic_gen); }
  long long omega() const { return left_gen().alex; }

  // rebuilds lookup tables and validates; call after editing fields
  void finalize();

  // (dst, w) pairs with odd multiplicity, sorted
  std::vector<std::pair<int, long long>> m_eval_weighted(View view, int src,
                                                         const std::vector<Basis>& args) const;
  // F2 sum of destinations
  std::vector<int> m_eval(View view, int src, const std::vector<Basis>& args) const;

  std::string op_string(int src, const std::vector<Basis>& args) const;

 private:
  std::map<std::pair<int, std::vector<Basis>>, std::vector<std::pair<int, long long>>> table_;
};

TypeAStructure load_pattern(const std::filesystem::path& file);
TypeAStructure parse_pattern(const std::string& json_text);

struct AInfViolation {
  int src;
  std::vector<Basis> word;
  std::vector<std::pair<int, long long>> residue;
};

struct AInfReport {
  std::vector<AInfViolation> violations;
  long long words_checked = 0;
  bool ok() const { return violations.empty(); }
};

AInfReport verify_a_infinity(const TypeAStructure& a, View view, int max_args);

struct OpGradingViolation {
  std::string op;
  std::string detail;
};

struct OpGradingReport {
  std::vector<OpGradingViolation> violations;
  bool ok() const { return violations.empty(); }
};

// family instances are checked for n in [0, family_depth]
OpGradingReport verify_op_gradings(const TypeAStructure& a, int family_depth = 4);

// words in {1,2,3,...} regrouped into the fewest algebra letters; empty on failure
std::vector<Basis> regroup_word(const std::string& word, Idem start, Idem end, bool* ok);

TypeAStructure import_decorated_graph(const std::filesystem::path& file, int max_path_len = 8);
TypeAStructure parse_decorated_graph(const std::string& json_text, int max_path_len = 8);

}  // namespace twistfloer
