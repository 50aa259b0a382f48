#include "twistfloer/type_a.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace twistfloer {

using nlohmann::json;

int TypeAStructure::index_of(const std::string& name) const {
  for (int k = 0; k < size(); ++k)
    if (names[k] == name) return k;
  return -1;
}

std::string TypeAStructure::op_string(int src, const std::vector<Basis>& args) const {
  std::string s = "m" + std::to_string(args.size() + 1) + "(" + names[src];
  for (Basis b : args) s += "," + to_string(b);
  return s + ")";
}

namespace {

bool composable(const TypeAStructure& a, int src, const std::vector<Basis>& args, int dst) {
  Idem cur = a.idems[src];
  for (Basis b : args) {
    if (is_idempotent(b)) return false;
    auto [l, r] = idempotent_sides(b);
    if (l != cur) return false;
    cur = r;
  }
  return cur == a.idems[dst];
}

std::vector<std::pair<int, long long>> odd_entries(std::map<std::pair<int, long long>, int>& acc) {
  std::vector<std::pair<int, long long>> out;
  for (auto& [k, v] : acc)
    if (v & 1) out.push_back(k);
  return out;
}

}  // namespace

void TypeAStructure::finalize() {
  if (gradings.size() != names.size() || idems.size() != names.size())
    throw PatternError("generator tables have inconsistent sizes");
  for (int k = 0; k < size(); ++k)
    for (int l = k + 1; l < size(); ++l)
      if (names[k] == names[l]) throw PatternError("duplicate generator '" + names[k] + "'");
  GradingElement lg;
  try {
    lg = left_gen();
  } catch (const GradingError& e) {
    throw PatternError(e.what());
  }
  if (lg.alex == 0) throw PatternError("periodic generator has zero winding number");

  table_.clear();
  for (const auto& op : ops) {
    if (op.src < 0 || op.src >= size() || op.dst < 0 || op.dst >= size())
      throw PatternError("operation references an unknown generator");
    if (op.w < 0) throw PatternError("negative w multiplicity in " + op_string(op.src, op.args));
    if (!composable(*this, op.src, op.args, op.dst))
      throw PatternError("operation " + op_string(op.src, op.args) + " -> " + names[op.dst] +
                         " is not composable with the idempotents");
    table_[{op.src, op.args}].push_back({op.dst, op.w});
  }
  for (const auto& f : families) {
    if (f.src < 0 || f.src >= size() || f.dst < 0 || f.dst >= size())
      throw PatternError("family references an unknown generator");
    for (int n : {0, 1}) {
      std::vector<Basis> w = f.prefix;
      for (int k = 0; k < n; ++k) w.push_back(Basis::R23);
      w.insert(w.end(), f.suffix.begin(), f.suffix.end());
      if (!composable(*this, f.src, w, f.dst))
        throw PatternError("family " + op_string(f.src, w) + " -> " + names[f.dst] +
                           " is not composable with the idempotents");
    }
    if (f.w < 0 || f.w_step < 0) throw PatternError("negative w in family");
  }
}

std::vector<std::pair<int, long long>> TypeAStructure::m_eval_weighted(
    View view, int src, const std::vector<Basis>& args) const {
  std::map<std::pair<int, long long>, int> acc;
  if (auto it = table_.find({src, args}); it != table_.end())
    for (auto [d, w] : it->second)
      if (view == View::Full || w == 0) acc[{d, w}] ^= 1;
  for (const auto& f : families) {
    if (f.src != src) continue;
    size_t fixed = f.prefix.size() + f.suffix.size();
    if (args.size() < fixed) continue;
    if (!std::equal(f.prefix.begin(), f.prefix.end(), args.begin())) continue;
    if (!std::equal(f.suffix.rbegin(), f.suffix.rend(), args.rbegin())) continue;
    size_t n = args.size() - fixed;
    if (!std::all_of(args.begin() + f.prefix.size(), args.begin() + f.prefix.size() + n,
                     [](Basis b) { return b == Basis::R23; }))
      continue;
    long long w = f.w + static_cast<long long>(n) * f.w_step;
    if (view == View::Full || w == 0) acc[{f.dst, w}] ^= 1;
  }
  return odd_entries(acc);
}

std::vector<int> TypeAStructure::m_eval(View view, int src, const std::vector<Basis>& args) const {
  std::map<int, int> acc;
  for (auto [d, w] : m_eval_weighted(view, src, args)) acc[d] ^= 1;
  std::vector<int> out;
  for (auto [d, v] : acc)
    if (v) out.push_back(d);
  return out;
}

namespace {

GradingElement parse_grading(const json& j) {
  if (!j.is_array() || j.size() != 4) throw PatternError("grading must be a 4-element array");
  auto half = [](const json& v) {
    if (v.is_number_integer()) return HalfInt(v.get<long long>());
    if (v.is_string()) return HalfInt::parse(v.get<std::string>());
    throw PatternError("grading component must be an integer or a \"p/2\" string");
  };
  HalfInt a = half(j[3]);
  if (!a.integral()) throw PatternError("Alexander component must be an integer");
  try {
    return GradingElement(half(j[0]), half(j[1]), half(j[2]), a.to_int());
  } catch (const GradingError& e) {
    throw PatternError(e.what());
  }
}

std::vector<Basis> parse_args(const json& j) {
  std::vector<Basis> out;
  if (!j.is_array()) throw PatternError("argument list must be an array");
  for (const auto& v : j) {
    Basis b;
    try {
      b = parse_basis(v.get<std::string>());
    } catch (const std::exception& e) {
      throw PatternError(e.what());
    }
    if (is_idempotent(b)) throw PatternError("idempotents may not appear as arguments");
    out.push_back(b);
  }
  return out;
}

void parse_generators(const json& root, TypeAStructure& a) {
  if (!root.contains("generators") || !root["generators"].is_array())
    throw PatternError("missing \"generators\" array");
  for (const auto& g : root["generators"]) {
    a.names.push_back(g.at("name").get<std::string>());
    try {
      a.idems.push_back(parse_idem(g.at("idem").get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw PatternError(e.what());
    }
    a.gradings.push_back(parse_grading(g.at("gr")));
  }
  if (!root.contains("periodic_gen")) throw PatternError("missing \"periodic_gen\"");
  a.periodic_gen = parse_grading(root["periodic_gen"]);
}

int lookup(const TypeAStructure& a, const json& v) {
  std::string n = v.get<std::string>();
  int k = a.index_of(n);
  if (k < 0) throw PatternError("unknown generator '" + n + "'");
  return k;
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw PatternError("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TypeAStructure parse_pattern(const std::string& text) {
  TypeAStructure a;
  try {
    json root = json::parse(text);
    parse_generators(root, a);
    if (root.contains("ops"))
      for (const auto& o : root["ops"]) {
        AOperation op{lookup(a, o.at("src")), parse_args(o.at("args")), lookup(a, o.at("dst")),
                      o.value("w", 0LL)};
        a.ops.push_back(op);
      }
    if (root.contains("families"))
      for (const auto& o : root["families"]) {
        ChainFamilyOp f{lookup(a, o.at("src")), parse_args(o.at("prefix")),
                        parse_args(o.at("suffix")), lookup(a, o.at("dst")), o.value("w", 0LL),
                        o.value("w_step", 0LL)};
        a.families.push_back(f);
      }
  } catch (const json::exception& e) {
    throw PatternError(std::string("schema violation: ") + e.what());
  }
  a.finalize();
  return a;
}

TypeAStructure load_pattern(const std::filesystem::path& file) { return parse_pattern(slurp(file)); }

AInfReport verify_a_infinity(const TypeAStructure& a, View view, int max_args) {
  AInfReport rep;
  std::vector<Basis> word;
  std::function<void(int, Idem)> rec = [&](int x, Idem cur) {
    ++rep.words_checked;
    std::map<std::pair<int, long long>, int> acc;
    const size_t n = word.size();
    for (size_t j = 0; j <= n; ++j) {
      std::vector<Basis> head(word.begin(), word.begin() + j), tail(word.begin() + j, word.end());
      for (auto [y, w1] : a.m_eval_weighted(view, x, head))
        for (auto [z, w2] : a.m_eval_weighted(view, y, tail)) acc[{z, w1 + w2}] ^= 1;
    }
    for (size_t l = 0; l + 1 < n; ++l) {
      auto p = multiply_basis(word[l], word[l + 1]);
      if (!p) continue;
      std::vector<Basis> merged(word.begin(), word.begin() + l);
      merged.push_back(*p);
      merged.insert(merged.end(), word.begin() + l + 2, word.end());
      for (auto [z, w] : a.m_eval_weighted(view, x, merged)) acc[{z, w}] ^= 1;
    }
    auto residue = odd_entries(acc);
    if (!residue.empty()) rep.violations.push_back({x, word, residue});
    if (static_cast<int>(n) >= max_args) return;
    for (Basis b : kRhoBasis) {
      auto [l, r] = idempotent_sides(b);
      if (l != cur) continue;
      word.push_back(b);
      rec(x, r);
      word.pop_back();
    }
  };
  for (int x = 0; x < a.size(); ++x) rec(x, a.idems[x]);
  return rep;
}

OpGradingReport verify_op_gradings(const TypeAStructure& a, int family_depth) {
  OpGradingReport rep;
  GradingElement lg = a.left_gen();
  auto check = [&](int src, const std::vector<Basis>& args, int dst, long long w) {
    GradingElement g = a.gradings[src];
    for (Basis b : args) g = g * grading_of(b);
    g = power(lambda_elt(), static_cast<long long>(args.size()) - 1) * g * power(mu_elt(), -w);
    auto off = left_coset_offset(lg, g, a.gradings[dst]);
    if (!off || off->h != 0 || off->a != 0) {
      std::string detail = off ? "off by (h,a)=(" + std::to_string(off->h) + "," +
                                     std::to_string(off->a) + ")"
                               : "different Spin^c class";
      rep.violations.push_back(
          {a.op_string(src, args) + " -> " + a.names[dst] + " [w=" + std::to_string(w) + "]",
           detail});
    }
  };
  for (const auto& op : a.ops) check(op.src, op.args, op.dst, op.w);
  for (const auto& f : a.families)
    for (int n = 0; n <= family_depth; ++n) {
      std::vector<Basis> w = f.prefix;
      for (int k = 0; k < n; ++k) w.push_back(Basis::R23);
      w.insert(w.end(), f.suffix.begin(), f.suffix.end());
      check(f.src, w, f.dst, f.w + n * f.w_step);
    }
  return rep;
}

std::vector<Basis> regroup_word(const std::string& word, Idem start, Idem end, bool* ok) {
  static const std::vector<std::pair<std::string, Basis>> tokens = {
      {"123", Basis::R123}, {"12", Basis::R12}, {"23", Basis::R23},
      {"1", Basis::R1},     {"2", Basis::R2},   {"3", Basis::R3}};
  const int n = static_cast<int>(word.size());
  // best[i][idem]: fewest letters to finish word[i..] from idempotent idem
  constexpr int kInf = 1 << 29;
  std::vector<std::array<int, 2>> best(n + 1, {kInf, kInf});
  best[n][static_cast<int>(end)] = 0;
  for (int i = n - 1; i >= 0; --i)
    for (int s = 0; s < 2; ++s)
      for (const auto& [t, b] : tokens) {
        if (word.compare(i, t.size(), t) != 0) continue;
        auto [l, r] = idempotent_sides(b);
        if (static_cast<int>(l) != s) continue;
        int nx = best[i + t.size()][static_cast<int>(r)];
        if (nx + 1 < best[i][s]) best[i][s] = nx + 1;
      }
  std::vector<Basis> out;
  int i = 0, s = static_cast<int>(start);
  if (best[0][s] >= kInf) {
    *ok = false;
    return out;
  }
  while (i < n) {
    for (const auto& [t, b] : tokens) {
      if (word.compare(i, t.size(), t) != 0) continue;
      auto [l, r] = idempotent_sides(b);
      if (static_cast<int>(l) != s) continue;
      if (best[i + t.size()][static_cast<int>(r)] + 1 != best[i][s]) continue;
      out.push_back(b);
      i += static_cast<int>(t.size());
      s = static_cast<int>(r);
      break;
    }
  }
  *ok = true;
  return out;
}

TypeAStructure parse_decorated_graph(const std::string& text, int max_path_len) {
  TypeAStructure a;
  struct GEdge {
    int src;
    std::string label;
    int dst;
    long long w;
  };
  std::vector<GEdge> edges;
  try {
    json root = json::parse(text);
    parse_generators(root, a);
    if (root.contains("edges"))
      for (const auto& e : root["edges"]) {
        std::string label = e.at("label").get<std::string>();
        for (char& c : label) {
          if (c == '1') c = '3';
          else if (c == '3') c = '1';
          else if (c != '2') throw PatternError("bad edge label '" + label + "'");
        }
        edges.push_back({lookup(a, e.at("src")), label, lookup(a, e.at("dst")), e.value("w", 0LL)});
      }
  } catch (const json::exception& e) {
    throw PatternError(std::string("schema violation: ") + e.what());
  }

  std::map<std::tuple<int, std::vector<Basis>, int, long long>, int> acc;
  std::vector<std::vector<const GEdge*>> out(a.size());
  for (const auto& e : edges) {
    if (e.label.empty())
      acc[{e.src, {}, e.dst, e.w}] ^= 1;
    else
      out[e.src].push_back(&e);
  }
  std::string word;
  std::vector<int> trail;
  std::function<void(int, int, long long)> walk = [&](int start, int v, long long w) {
    if (!trail.empty()) {
      bool ok = false;
      auto args = regroup_word(word, a.idems[start], a.idems[v], &ok);
      if (!ok) {
        std::string path = a.names[start];
        for (int t : trail) path += "->" + a.names[t];
        throw PatternError("word '" + word + "' along " + path + " has no valid regrouping");
      }
      acc[{start, args, v, w}] ^= 1;
    }
    if (static_cast<int>(trail.size()) >= max_path_len) return;
    for (const GEdge* e : out[v]) {
      size_t len = word.size();
      word += e->label;
      trail.push_back(e->dst);
      walk(start, e->dst, w + e->w);
      trail.pop_back();
      word.resize(len);
    }
  };
  for (int x = 0; x < a.size(); ++x) walk(x, x, 0);
  for (const auto& [k, v] : acc)
    if (v) a.ops.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
  a.finalize();
  return a;
}

TypeAStructure import_decorated_graph(const std::filesystem::path& file, int max_path_len) {
  return parse_decorated_graph(slurp(file), max_path_len);
}

}  // namespace twistfloer
