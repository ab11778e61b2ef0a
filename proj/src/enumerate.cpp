#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "chronoref/order.hpp"

namespace chronoref {

namespace {

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
void for_each_partition(std::size_t n,
                        const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  std::vector<std::size_t> block(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      visit(block, blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[i] = b;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
}

// All strict partial orders on m labelled elements, as lists of (a, b) pairs.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> strict_orders(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b) candidates.emplace_back(a, b);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  const std::size_t subsets = std::size_t{1} << candidates.size();
  std::vector<char> rel(m * m);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::fill(rel.begin(), rel.end(), 0);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (mask >> k & 1U) rel[candidates[k].first * m + candidates[k].second] = 1;
    }
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        for (std::size_t c = 0; c < m && ok; ++c)
          if (rel[a * m + b] && rel[b * m + c] && !rel[a * m + c]) ok = false;
    if (!ok) continue;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (mask >> k & 1U) order.push_back(candidates[k]);
    }
    out.push_back(std::move(order));
  }
  return out;
}

}  // namespace

void for_each_structure(std::size_t n,
                        const std::function<void(const TimeStructure&)>& visit) {
  if (n < 1 || n > kMaxEnumeratedUniverse) {
    throw std::invalid_argument("enumeration needs 1 <= n <= " +
                                std::to_string(kMaxEnumeratedUniverse) + ", got " +
                                std::to_string(n));
  }
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> orders_by_size(n + 1);
  for (std::size_t m = 1; m <= n; ++m) orders_by_size[m] = strict_orders(m);

  for_each_partition(n, [&](const std::vector<std::size_t>& block, std::size_t blocks) {
    std::vector<std::uint32_t> rep(blocks, 0);
    std::vector<bool> seen(blocks, false);
    std::vector<InstantPair> coincide;
    for (std::size_t i = 0; i < n; ++i) {
      auto b = block[i];
      auto inst = static_cast<std::uint32_t>(i);
      if (!seen[b]) {
        seen[b] = true;
        rep[b] = inst;
      } else {
        coincide.emplace_back(rep[b], inst);
      }
    }
    for (const auto& order : orders_by_size[blocks]) {
      std::vector<InstantPair> precede;
      precede.reserve(order.size());
      for (auto [a, b] : order) precede.emplace_back(rep[a], rep[b]);
      visit(close_structure(TimeStructure::from_generators(n, coincide, precede)));
    }
  });
}

std::vector<TimeStructure> enumerate_structures(std::size_t n) {
  std::vector<TimeStructure> out;
  for_each_structure(n, [&](const TimeStructure& s) { out.push_back(s); });
  return out;
}

}  // namespace chronoref
