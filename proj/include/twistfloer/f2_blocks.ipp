#pragma once

#include <map>

namespace twistfloer {

template <class Key>
std::vector<std::pair<Key, HomologyBasis>> homology_blocks(const ChainComplexData& c,
                                                           const std::vector<Key>& key) {
  std::vector<BitVec> cols = c.boundary_columns();
  std::map<Key, std::vector<int>> members;
  for (size_t i = 0; i < c.n; ++i) members[key[i]].push_back(static_cast<int>(i));
  // boundaries landing in each block
  std::map<Key, std::vector<int>> feeders;
  for (size_t i = 0; i < c.n; ++i) {
    auto sup = cols[i].support();
    if (sup.empty()) continue;
    const Key& k = key[sup.front()];
    for (int t : sup)
      if (!(key[t] == k)) throw std::logic_error("differential is not homogeneous");
    feeders[k].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<Key, HomologyBasis>> out;
  for (const auto& [k, mem] : members) {
    HomologyBasis hb;
    ColumnReducer image(c.n);
    for (int i : feeders[k])
      if (image.insert(cols[i], BitVec())) ++hb.boundaries_dim;
    ColumnReducer ker(c.n, mem.size());
    std::vector<BitVec> cycles;
    for (size_t t = 0; t < mem.size(); ++t) {
      BitVec tag(mem.size());
      tag.set(t);
      BitVec combo;
      if (!ker.insert(cols[mem[t]], tag, &combo)) {
        BitVec z(c.n);
        for (int s : combo.support()) z.flip(mem[s]);
        cycles.push_back(z);
      }
    }
    hb.cycles_dim = cycles.size();
    for (auto& z : cycles)
      if (image.insert(z, BitVec())) hb.classes.push_back(z);
    out.emplace_back(k, std::move(hb));
  }
  return out;
}

}  // namespace twistfloer
