#include "chronoref/preservation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chronoref/refinement.hpp"

namespace chronoref {

std::string_view lemma_name(PreservationLemma l) {
  return l == PreservationLemma::Subclock ? "subclock" : "union";
}

std::optional<PreservationLemma> parse_lemma(std::string_view text) {
  if (text == "subclock") return PreservationLemma::Subclock;
  if (text == "union") return PreservationLemma::Union;
  return std::nullopt;
}

std::vector<Clock> all_clocks(const TimeStructure& s) {
  const std::size_t n = s.universe_size();
  if (n > 16) throw std::invalid_argument("all_clocks: universe too large to enumerate");
  std::vector<Clock> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<InstantId> ticks;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1U) ticks.emplace_back(i);
    Clock c("k" + std::to_string(mask), std::move(ticks));
    if (validate_clock(s, c).holds) out.push_back(std::move(c));
  }
  return out;
}

namespace {

void tally(HarnessReport& report, const PreservationVerdict& v, const TimeStructure& concrete,
           const TimeStructure& abstract, std::vector<Clock> clocks) {
  ++report.instances;
  switch (v.status) {
    case PreservationStatus::Vacuous: ++report.vacuous; break;
    case PreservationStatus::Satisfied: ++report.satisfied; break;
    case PreservationStatus::Violated:
      ++report.violated;
      if (!report.counterexample) {
        report.counterexample = PreservationCounterexample{concrete, abstract, std::move(clocks), v};
      }
      break;
  }
}

void run_instance(HarnessReport& report, const TimeStructure& concrete,
                  const TimeStructure& abstract, const std::vector<Clock>& clocks) {
  const auto v = report.lemma == PreservationLemma::Subclock
                     ? check_subclock_preservation(concrete, abstract, clocks[0], clocks[1],
                                                   clocks[2], clocks[3])
                     : check_union_preservation(concrete, abstract, clocks[0], clocks[1],
                                                clocks[2], clocks[3]);
  tally(report, v, concrete, abstract, clocks);
}

}  // namespace

HarnessReport run_preservation_exhaustive(std::size_t n, PreservationLemma lemma) {
  if (n < 1 || n > 3) throw std::invalid_argument("exhaustive preservation needs 1 <= n <= 3");
  HarnessReport report;
  report.lemma = lemma;
  const auto all = enumerate_structures(n);
  for (const auto& concrete : all) {
    const auto concrete_clocks = all_clocks(concrete);
    for (const auto& abstract : all) {
      if (!refines(concrete, abstract)) continue;
      const auto abstract_clocks = all_clocks(abstract);
      // Subclock takes (c1, c2) concrete and (c11, c22) abstract; union takes
      // (c0, c1, c2) concrete and (c) abstract.
      const std::size_t concrete_slots = lemma == PreservationLemma::Subclock ? 2 : 3;
      std::vector<Clock> slots(4);
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == 4) {
          run_instance(report, concrete, abstract, slots);
          return;
        }
        const auto& pool = k < concrete_slots ? concrete_clocks : abstract_clocks;
        for (const auto& c : pool) {
          slots[k] = c;
          self(self, k + 1);
        }
      };
      rec(rec, 0);
    }
  }
  return report;
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::uint32_t> shuffled_universe(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0U);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Random partition of the universe into non-empty classes.
std::vector<std::vector<std::uint32_t>> random_classes(std::size_t n, std::mt19937_64& rng) {
  const auto order = shuffled_universe(n, rng);
  const std::size_t m = uniform(rng, 1, n);
  std::vector<std::vector<std::uint32_t>> classes(m);
  for (std::size_t i = 0; i < n; ++i) {
    classes[i < m ? i : uniform(rng, 0, m - 1)].push_back(order[i]);
  }
  return classes;
}

// Random strict order on m classes: edges only go forward in a random
// permutation, so the result is acyclic.
std::vector<std::pair<std::size_t, std::size_t>> random_class_order(std::size_t m,
                                                                   std::mt19937_64& rng) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (coin(rng, density)) edges.emplace_back(perm[a], perm[b]);
  return edges;
}

std::vector<InstantPair> class_coincidences(const std::vector<std::vector<std::uint32_t>>& classes) {
  std::vector<InstantPair> out;
  for (const auto& c : classes)
    for (std::size_t k = 1; k < c.size(); ++k) out.emplace_back(c.front(), c[k]);
  return out;
}

}  // namespace

TimeStructure random_structure(std::size_t n, std::mt19937_64& rng) {
  const auto classes = random_classes(n, rng);
  std::vector<InstantPair> precede;
  for (auto [a, b] : random_class_order(classes.size(), rng)) {
    precede.emplace_back(classes[a].front(), classes[b].front());
  }
  return close_structure(TimeStructure::from_generators(n, class_coincidences(classes), precede));
}

std::pair<TimeStructure, TimeStructure> random_refinement_pair(std::size_t n,
                                                               std::mt19937_64& rng) {
  const auto classes = random_classes(n, rng);
  const auto order = random_class_order(classes.size(), rng);

  std::vector<InstantPair> abstract_precede;
  for (auto [a, b] : order) abstract_precede.emplace_back(classes[a].front(), classes[b].front());
  auto abstract = close_structure(
      TimeStructure::from_generators(n, class_coincidences(classes), abstract_precede));

  // Split each abstract class into a chain of concrete classes.
  std::vector<InstantPair> coincide;
  std::vector<InstantPair> precede;
  std::vector<std::uint32_t> first_of(classes.size());
  std::vector<std::uint32_t> last_of(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto members = classes[k];
    std::shuffle(members.begin(), members.end(), rng);
    std::vector<std::vector<std::uint32_t>> blocks{{members.front()}};
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (coin(rng, 0.5)) blocks.emplace_back();
      blocks.back().push_back(members[i]);
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t i = 1; i < blocks[b].size(); ++i) coincide.emplace_back(blocks[b][0], blocks[b][i]);
      if (b > 0) precede.emplace_back(blocks[b - 1][0], blocks[b][0]);
    }
    first_of[k] = blocks.front().front();
    last_of[k] = blocks.back().front();
  }
  for (auto [a, b] : order) precede.emplace_back(last_of[a], first_of[b]);
  auto concrete = close_structure(TimeStructure::from_generators(n, coincide, precede));
  return {std::move(concrete), std::move(abstract)};
}

Clock random_clock(const TimeStructure& s, std::string name, std::mt19937_64& rng) {
  const std::size_t target = uniform(rng, 0, s.universe_size());
  std::vector<InstantId> ticks;
  for (auto i : shuffled_universe(s.universe_size(), rng)) {
    if (ticks.size() >= target) break;
    const InstantId x(i);
    bool ordered = std::all_of(ticks.begin(), ticks.end(), [&](InstantId t) {
      return s.precedes(t, x) || s.precedes(x, t);
    });
    if (ordered) ticks.push_back(x);
  }
  return Clock(std::move(name), std::move(ticks));
}

namespace {

// Coincidence class representative (least member) of every instant.
std::vector<std::uint32_t> class_of(const TimeStructure& s) {
  std::vector<std::uint32_t> out(s.universe_size());
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      if (s.coincident(InstantId(i), InstantId(j))) {
        out[i] = j;
        break;
      }
    }
  }
  return out;
}

// One random member of each abstract class touched by `ticks`. Abstract
// classes touched by a concrete clock are ordered by abstract precedence, so
// the result is a clock on the abstract level.
Clock abstract_image(const TimeStructure& abstract, const std::vector<InstantId>& ticks,
                     std::string name, std::mt19937_64& rng) {
  const auto cls = class_of(abstract);
  std::vector<std::uint32_t> reps;
  for (auto t : ticks) reps.push_back(cls[t.value]);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<InstantId> out;
  for (auto r : reps) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < cls.size(); ++i)
      if (cls[i] == r) members.push_back(i);
    out.emplace_back(members[uniform(rng, 0, members.size() - 1)]);
  }
  return Clock(std::move(name), std::move(out));
}

std::vector<Clock> structured_subclock_instance(const TimeStructure& concrete,
                                                const TimeStructure& abstract,
                                                std::mt19937_64& rng) {
  auto c2 = random_clock(concrete, "c2", rng);
  std::vector<InstantId> sub;
  for (auto t : c2.ticks())
    if (coin(rng, 0.6)) sub.push_back(t);
  Clock c1("c1", sub);
  auto c11 = coin(rng, 0.15) ? random_clock(abstract, "c11", rng)
                             : abstract_image(abstract, c1.ticks(), "c11", rng);
  auto c22 = coin(rng, 0.15) ? random_clock(abstract, "c22", rng)
                             : abstract_image(abstract, c2.ticks(), "c22", rng);
  return {c1, c2, c11, c22};
}

std::vector<Clock> structured_union_instance(const TimeStructure& concrete,
                                             const TimeStructure& abstract, std::mt19937_64& rng) {
  auto c = random_clock(abstract, "c", rng);
  const auto abstract_cls = class_of(abstract);
  const auto concrete_cls = class_of(concrete);
  std::vector<InstantId> t0;
  std::vector<InstantId> t1;
  std::vector<InstantId> t2;
  for (auto tick : c.ticks()) {
    // Concrete classes inside this abstract class, one random member each.
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> block_rep;
    for (std::uint32_t i = 0; i < abstract_cls.size(); ++i) {
      if (abstract_cls[i] != abstract_cls[tick.value]) continue;
      auto it = std::find(block_rep.begin(), block_rep.end(), concrete_cls[i]);
      if (it == block_rep.end()) {
        block_rep.push_back(concrete_cls[i]);
        blocks.push_back({i});
      } else {
        blocks[static_cast<std::size_t>(it - block_rep.begin())].push_back(i);
      }
    }
    std::vector<InstantId> chosen;
    for (const auto& b : blocks)
      if (coin(rng, 0.6)) chosen.emplace_back(b[uniform(rng, 0, b.size() - 1)]);
    if (chosen.empty()) chosen.emplace_back(blocks.front().front());
    std::shuffle(chosen.begin(), chosen.end(), rng);
    t0.insert(t0.end(), chosen.begin(), chosen.end());
    t1.push_back(chosen.front());
    t2.push_back(chosen.back());
    for (std::size_t k = 1; k + 1 < chosen.size(); ++k) {
      (coin(rng, 0.5) ? t1 : t2).push_back(chosen[k]);
    }
  }
  Clock c0("c0", t0);
  Clock c1("c1", t1);
  Clock c2("c2", t2);
  if (coin(rng, 0.1)) c1 = random_clock(concrete, "c1", rng);
  if (coin(rng, 0.1)) c0 = random_clock(concrete, "c0", rng);
  return {c0, c1, c2, c};
}

}  // namespace

HarnessReport run_preservation_random(std::size_t n, std::size_t count, std::uint64_t seed,
                                      PreservationLemma lemma) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("random preservation: bad universe size");
  HarnessReport report;
  report.lemma = lemma;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    TimeStructure concrete;
    TimeStructure abstract;
    if (coin(rng, 0.9)) {
      std::tie(concrete, abstract) = random_refinement_pair(n, rng);
    } else {
      concrete = random_structure(n, rng);
      abstract = random_structure(n, rng);
    }
    std::vector<Clock> clocks;
    if (coin(rng, 0.8)) {
      clocks = lemma == PreservationLemma::Subclock
                   ? structured_subclock_instance(concrete, abstract, rng)
                   : structured_union_instance(concrete, abstract, rng);
    } else {
      const bool subclock = lemma == PreservationLemma::Subclock;
      clocks = {random_clock(concrete, "a", rng), random_clock(concrete, "b", rng),
                random_clock(subclock ? abstract : concrete, "c", rng),
                random_clock(abstract, "d", rng)};
    }
    run_instance(report, concrete, abstract, clocks);
  }
  return report;
}

}  // namespace chronoref
