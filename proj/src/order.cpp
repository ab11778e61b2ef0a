#include "chronoref/order.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chronoref {

Relation::Relation(std::size_t universe)
    : universe_(universe),
      words_((universe + 63) / 64),
      bits_(universe * ((universe + 63) / 64), 0) {}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<InstantPair> Relation::pairs() const {
  std::vector<InstantPair> out;
  for (std::size_t a = 0; a < universe_; ++a) {
    auto r = row(a);
    for (std::size_t w = 0; w < words_; ++w) {
      for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
        auto b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        out.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      }
    }
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  return !first_not_in(other).has_value();
}

std::optional<InstantPair> Relation::first_not_in(const Relation& other) const {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("relations over different universes");
  }
  for (std::size_t a = 0; a < universe_; ++a) {
    auto mine = row(a);
    auto theirs = other.row(a);
    for (std::size_t w = 0; w < words_; ++w) {
      if (auto extra = mine[w] & ~theirs[w]; extra != 0) {
        auto b = w * 64 + static_cast<std::size_t>(std::countr_zero(extra));
        return InstantPair(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      }
    }
  }
  return std::nullopt;
}

namespace {

void check_pairs(std::size_t universe, std::span<const InstantPair> pairs) {
  for (const auto& p : pairs) {
    if (p.first.value >= universe || p.second.value >= universe) {
      throw std::out_of_range("instant pair (" + std::to_string(p.first.value) + "," +
                              std::to_string(p.second.value) + ") outside universe of size " +
                              std::to_string(universe));
    }
  }
}

// Union-find over instants, used to build coincidence classes.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_closed(const TimeStructure& s, const char* what) {
  if (!s.closed()) throw std::invalid_argument(std::string(what) + ": structure is not closed");
}

void require_id(const TimeStructure& s, InstantId i) {
  if (i.value >= s.universe_size()) {
    throw std::out_of_range("instant " + std::to_string(i.value) + " outside universe of size " +
                            std::to_string(s.universe_size()));
  }
}

}  // namespace

TimeStructure TimeStructure::from_generators(std::size_t universe,
                                             std::span<const InstantPair> coincide,
                                             std::span<const InstantPair> precede) {
  if (universe == 0) throw std::invalid_argument("universe must contain at least one instant");
  if (universe > kMaxUniverse) {
    throw std::invalid_argument("universe of size " + std::to_string(universe) +
                                " exceeds the limit of " + std::to_string(kMaxUniverse));
  }
  check_pairs(universe, coincide);
  check_pairs(universe, precede);

  TimeStructure s;
  s.universe_ = universe;
  s.coincide_gen_ = Relation(universe);
  s.precede_gen_ = Relation(universe);
  for (const auto& p : coincide) s.coincide_gen_.insert(p.first, p.second);
  for (const auto& p : precede) s.precede_gen_.insert(p.first, p.second);
  s.coincide_ = s.coincide_gen_;
  s.precede_ = s.precede_gen_;
  return s;
}

// Coincidence only grows through its own equivalence rules, so its closure is
// the partition induced by the generators. Precedence closure then reduces to
// the transitive closure of the generator edges lifted to coincidence classes:
// a ≺ b iff class(a) reaches class(b) through at least one generator edge.
TimeStructure close_structure(const TimeStructure& s) {
  if (s.closed()) return s;

  const std::size_t n = s.universe_size();
  DisjointSets sets(n);
  for (const auto& p : s.coincidence_generators().pairs()) {
    sets.unite(p.first.value, p.second.value);
  }

  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> rep_index(n, n);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    auto root = sets.find(i);
    if (rep_index[root] == n) {
      rep_index[root] = members.size();
      members.emplace_back();
    }
    class_of[i] = rep_index[root];
    members[class_of[i]].push_back(i);
  }

  const std::size_t m = members.size();
  Relation reach(m);
  for (const auto& p : s.precedence_generators().pairs()) {
    reach.insert(class_of[p.first.value], class_of[p.second.value]);
  }
  // Warshall over bit rows.
  const std::size_t words = reach.words_per_row();
  for (std::size_t k = 0; k < m; ++k) {
    auto via = reach.row(k);
    for (std::size_t i = 0; i < m; ++i) {
      if (!reach.contains(i, k)) continue;
      auto dst = reach.row(i);
      for (std::size_t w = 0; w < words; ++w) dst[w] |= via[w];
    }
  }

  TimeStructure out = s;
  out.coincide_ = Relation(n);
  out.precede_ = Relation(n);

  // Class-level bit rows, expanded back to instants.
  std::vector<std::vector<std::uint64_t>> member_bits(m, std::vector<std::uint64_t>((n + 63) / 64, 0));
  for (std::size_t c = 0; c < m; ++c) {
    for (auto i : members[c]) member_bits[c][i / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool consistent = true;
  std::vector<std::uint64_t> prec_row((n + 63) / 64);
  for (std::size_t c = 0; c < m; ++c) {
    if (reach.contains(c, c)) consistent = false;
    std::fill(prec_row.begin(), prec_row.end(), 0);
    auto succ = reach.row(c);
    for (std::size_t cw = 0; cw < succ.size(); ++cw) {
      for (auto bits = succ[cw]; bits != 0; bits &= bits - 1) {
        const auto d = cw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t w = 0; w < prec_row.size(); ++w) prec_row[w] |= member_bits[d][w];
      }
    }
    for (auto i : members[c]) {
      std::copy(member_bits[c].begin(), member_bits[c].end(), out.coincide_.row(i).begin());
      std::copy(prec_row.begin(), prec_row.end(), out.precede_.row(i).begin());
    }
  }

  out.closed_ = true;
  out.consistent_ = consistent;
  return out;
}

std::vector<SpoViolation> validate_spo(const TimeStructure& s) {
  require_closed(s, "validate_spo");
  std::vector<SpoViolation> out;
  const std::size_t n = s.universe_size();
  const auto& eq = s.coincidence();
  const auto& lt = s.precedence();
  // One entry per coincidence class that precedes itself. On a closed
  // structure every pair of such a class is both coincident and ordered.
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::optional<std::size_t> partner;
    for (std::size_t b = a; b < n; ++b) {
      if (!eq.contains(a, b)) continue;
      seen[b] = true;
      if (b != a && !partner) partner = b;
    }
    if (!lt.contains(a, a)) continue;
    const auto b = partner.value_or(a);
    out.push_back({SpoViolation::Kind::IrreflexivityTowardCoincidence,
                   InstantPair(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))});
  }
#ifndef NDEBUG
  // The remaining conjuncts hold by construction of close_structure().
  if (n <= 256) {
    for (const auto& r : check_axioms(s).results) {
      assert(r.holds || r.axiom == Axiom::PrecedenceIrreflexiveTowardCoincidence);
    }
  }
#endif
  return out;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::CoincidenceReflexive: return "coincidence-reflexive";
    case Axiom::CoincidenceSymmetric: return "coincidence-symmetric";
    case Axiom::CoincidenceTransitive: return "coincidence-transitive";
    case Axiom::PrecedenceIrreflexiveTowardCoincidence: return "precedence-irreflexive";
    case Axiom::PrecedenceTransitive: return "precedence-transitive";
    case Axiom::PrecedenceRespectsCoincidenceLeft: return "precedence-respects-coincidence-left";
    case Axiom::PrecedenceRespectsCoincidenceRight: return "precedence-respects-coincidence-right";
  }
  return "unknown";
}

bool AxiomReport::holds() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; });
}

std::size_t AxiomReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.holds; }));
}

namespace {

InstantId id(std::size_t i) { return InstantId(static_cast<std::uint32_t>(i)); }

// Least k with bit set in `need` but not in `have`, or nullopt.
std::optional<std::size_t> first_missing(std::span<const std::uint64_t> need,
                                         std::span<const std::uint64_t> have) {
  for (std::size_t w = 0; w < need.size(); ++w) {
    if (auto miss = need[w] & ~have[w]; miss != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(miss));
    }
  }
  return std::nullopt;
}

// Least (i, j, k) with i R j, j S k and not i T k.
std::optional<std::vector<InstantId>> first_composition_breach(const Relation& r,
                                                               const Relation& s,
                                                               const Relation& t) {
  const std::size_t n = r.universe_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.contains(i, j)) continue;
      if (auto k = first_missing(s.row(j), t.row(i))) return std::vector{id(i), id(j), id(*k)};
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const TimeStructure& s) {
  const std::size_t n = s.universe_size();
  const auto& eq = s.coincidence();
  const auto& lt = s.precedence();

  AxiomReport report;
  auto record = [&](Axiom a, std::optional<std::vector<InstantId>> breach) {
    AxiomResult r{a, !breach.has_value(), {}};
    if (breach) r.witness = std::move(*breach);
    report.results.push_back(std::move(r));
  };

  std::optional<std::vector<InstantId>> breach;
  for (std::size_t i = 0; i < n && !breach; ++i) {
    if (!eq.contains(i, i)) breach = std::vector{id(i)};
  }
  record(Axiom::CoincidenceReflexive, breach);

  breach.reset();
  for (std::size_t i = 0; i < n && !breach; ++i) {
    for (std::size_t j = 0; j < n && !breach; ++j) {
      if (eq.contains(i, j) && !eq.contains(j, i)) breach = std::vector{id(i), id(j)};
    }
  }
  record(Axiom::CoincidenceSymmetric, breach);

  record(Axiom::CoincidenceTransitive, first_composition_breach(eq, eq, eq));

  breach.reset();
  for (std::size_t i = 0; i < n && !breach; ++i) {
    for (std::size_t j = 0; j < n && !breach; ++j) {
      if (lt.contains(i, j) && eq.contains(i, j)) breach = std::vector{id(i), id(j)};
    }
  }
  record(Axiom::PrecedenceIrreflexiveTowardCoincidence, breach);

  record(Axiom::PrecedenceTransitive, first_composition_breach(lt, lt, lt));

  // i ≈ j ∧ i ≺ k ⇒ j ≺ k, witnessed as (i, j, k).
  breach.reset();
  for (std::size_t i = 0; i < n && !breach; ++i) {
    for (std::size_t j = 0; j < n && !breach; ++j) {
      if (!eq.contains(i, j)) continue;
      if (auto k = first_missing(lt.row(i), lt.row(j))) breach = std::vector{id(i), id(j), id(*k)};
    }
  }
  record(Axiom::PrecedenceRespectsCoincidenceLeft, breach);

  // i ≈ j ∧ k ≺ i ⇒ k ≺ j, witnessed as (i, j, k). Scanned per k: every
  // instant coincident with a successor of k must itself succeed k.
  breach.reset();
  for (std::size_t k = 0; k < n && !breach; ++k) {
    for (std::size_t i = 0; i < n && !breach; ++i) {
      if (!lt.contains(k, i)) continue;
      if (auto j = first_missing(eq.row(i), lt.row(k))) breach = std::vector{id(i), id(*j), id(k)};
    }
  }
  record(Axiom::PrecedenceRespectsCoincidenceRight, breach);

  return report;
}

std::string_view classification_name(PairClassification c) {
  switch (c) {
    case PairClassification::Coincident: return "coincident";
    case PairClassification::Precedes: return "precedes";
    case PairClassification::PrecededBy: return "preceded-by";
    case PairClassification::Independent: return "independent";
  }
  return "unknown";
}

PairClassification classify_pair(const TimeStructure& s, InstantId i, InstantId j) {
  if (!s.valid()) throw std::invalid_argument("classify_pair: structure is not closed and valid");
  require_id(s, i);
  require_id(s, j);
  if (s.coincident(i, j)) return PairClassification::Coincident;
  if (s.precedes(i, j)) return PairClassification::Precedes;
  if (s.precedes(j, i)) return PairClassification::PrecededBy;
  return PairClassification::Independent;
}

}  // namespace chronoref
