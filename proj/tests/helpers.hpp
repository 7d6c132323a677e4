#pragma once

#include <random>
#include <string>

#include "markov/farey.hpp"
#include "markov/io.hpp"

namespace markov::testing {

inline ExtRational frac(long long num, long long den) { return ExtRational::normalize(num, den); }

inline FareyTriple triple(const std::string& text) { return parse_triple(text); }

/// A reduced word of the given length drawn from `rng`.
inline MutationWord random_word(std::mt19937_64& rng, std::size_t length) {
  MutationWord w;
  std::uniform_int_distribution<int> pick(0, 2);
  while (w.size() < length) {
    const ParityClass k = class_at(static_cast<std::size_t>(pick(rng)));
    if (!w.empty() && w.back() == k) continue;
    w.push_back(k);
  }
  return w;
}

}  // namespace markov::testing
