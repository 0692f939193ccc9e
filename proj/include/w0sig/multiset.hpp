#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "w0sig/checked.hpp"
#include "w0sig/linalg.hpp"

namespace w0sig {

using Multiplicity = std::int64_t;

/// Finite map from integer vectors to strictly positive multiplicities.
/// Used for characters (keys are Dynkin weights) and for restricted
/// characters (keys are sl2 labels followed by torus charges).
class WeightMultiset {
public:
  using Map = std::unordered_map<IntVector, Multiplicity, VectorHash, VectorEqual>;

  void add(const IntVector& key, Multiplicity m) {
    if (m == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, 0);
    it->second = checked_add(it->second, m);
    if (it->second < 0) throw InternalError("negative multiplicity in multiset");
    if (it->second == 0) entries_.erase(it);
  }

  Multiplicity at(const IntVector& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Multiplicity total() const {
    Multiplicity t = 0;
    for (const auto& [k, m] : entries_) t = checked_add(t, m);
    return t;
  }

  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Entries sorted lexicographically by key, for deterministic output.
  std::vector<std::pair<IntVector, Multiplicity>> sorted() const {
    std::vector<std::pair<IntVector, Multiplicity>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
  }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.entries_ == b.entries_;
  }

private:
  Map entries_;
};

}  // namespace w0sig
