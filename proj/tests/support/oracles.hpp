#pragma once

// Reference computations that do not go through Ball. Everything here
// enumerates words directly, so it is only usable at small radii.

#include "pascal/bigcount.hpp"
#include "pascal/groups.hpp"
#include "pascal/spec_file.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace oracle {

struct Entry {
  std::size_t length = 0;
  pascal::BigCount count = 0;
};

/// Length and geodesic count of every element reachable by a word of length
/// <= radius, found by walking all |S|^k words. Keyed by the binary value key.
inline std::map<std::string, Entry> word_census(const pascal::GenSet& gens, std::size_t radius) {
  std::map<std::string, Entry> out;
  std::vector<pascal::GroupValue> stack{pascal::identity(gens.spec())};
  out[pascal::encode_key(stack.back())] = Entry{0, 0};
  // First pass: the shortest word length of every value, over all words.
  auto lengths = [&](auto&& self, std::size_t depth) -> void {
    if (depth == radius) return;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      stack.push_back(pascal::multiply(gens.spec(), stack.back(), gens.value(static_cast<pascal::GenIndex>(a))));
      auto [it, fresh] = out.try_emplace(pascal::encode_key(stack.back()), Entry{depth + 1, 0});
      if (!fresh && it->second.length > depth + 1) it->second.length = depth + 1;
      self(self, depth + 1);
      stack.pop_back();
    }
  };
  lengths(lengths, 0);
  // Second pass: count the words that realise those lengths.
  auto recount = [&](auto&& self, std::size_t depth) -> void {
    auto& e = out.at(pascal::encode_key(stack.back()));
    if (e.length != depth) return;  // not geodesic, and neither is any extension
    e.count += 1;
    if (depth == radius) return;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      stack.push_back(pascal::multiply(gens.spec(), stack.back(), gens.value(static_cast<pascal::GenIndex>(a))));
      self(self, depth + 1);
      stack.pop_back();
    }
  };
  recount(recount, 0);
  return out;
}

/// C(n, k) from the additive rule only.
inline pascal::BigCount pascal_rule(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<pascal::BigCount> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<pascal::BigCount> next(i + 1, 0);
    next[0] = next[i] = 1;
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline pascal::SpecDocument preset(const std::string& name) {
  return pascal::load_preset(name, PASCAL_PRESET_DIR);
}

}  // namespace oracle
