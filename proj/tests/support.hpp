#pragma once

#include <initializer_list>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chronoref/order.hpp"

namespace test_support {

using chronoref::InstantId;
using chronoref::InstantPair;
using chronoref::TimeStructure;

inline TimeStructure open(std::size_t n, std::initializer_list<InstantPair> coincide,
                          std::initializer_list<InstantPair> precede) {
  std::vector<InstantPair> c(coincide);
  std::vector<InstantPair> p(precede);
  return TimeStructure::from_generators(n, c, p);
}

inline TimeStructure closed(std::size_t n, std::initializer_list<InstantPair> coincide,
                            std::initializer_list<InstantPair> precede) {
  return chronoref::close_structure(open(n, coincide, precede));
}

inline TimeStructure closed(std::size_t n, const std::vector<InstantPair>& coincide,
                            const std::vector<InstantPair>& precede) {
  return chronoref::close_structure(TimeStructure::from_generators(n, coincide, precede));
}

using PairSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

inline PairSet as_set(const chronoref::Relation& r) {
  PairSet out;
  for (const auto& p : r.pairs()) out.emplace(p.first.value, p.second.value);
  return out;
}

// Rule-by-rule fixed point over explicit pair sets, kept deliberately naive.
inline std::pair<PairSet, PairSet> naive_closure(std::size_t n, const std::vector<InstantPair>& cg,
                                                 const std::vector<InstantPair>& pg) {
  PairSet eq;
  PairSet lt;
  for (const auto& p : cg) eq.emplace(p.first.value, p.second.value);
  for (const auto& p : pg) lt.emplace(p.first.value, p.second.value);
  for (std::uint32_t i = 0; i < n; ++i) eq.emplace(i, i);
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](PairSet& s, std::uint32_t a, std::uint32_t b) {
      if (s.emplace(a, b).second) changed = true;
    };
    const PairSet e = eq;
    const PairSet l = lt;
    for (auto [a, b] : e) add(eq, b, a);
    for (auto [a, b] : e)
      for (auto [c, d] : e)
        if (b == c) add(eq, a, d);
    for (auto [a, b] : l)
      for (auto [c, d] : l)
        if (b == c) add(lt, a, d);
    for (auto [i, j] : e)
      for (auto [a, k] : l) {
        if (a == i) add(lt, j, k);
        if (k == i) add(lt, a, j);
      }
  }
  return {eq, lt};
}

inline std::vector<InstantPair> random_pairs(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<InstantPair> out;
  for (std::size_t k = 0; k < count; ++k) out.emplace_back(pick(rng), pick(rng));
  return out;
}

}  // namespace test_support
