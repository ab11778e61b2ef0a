#pragma once

// Finite time structures: a universe of anonymous instants bound by a
// coincidence relation (an equivalence) and a precedence relation (strict,
// transitive, congruent with coincidence).
//
// Structures are built from generator pairs and closed on demand. Closing is
// always possible; whether the result is a strict partial order is a separate
// question answered by validate_spo().

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace chronoref {

/// Largest universe accepted by the tools. Relations are dense bit matrices.
inline constexpr std::size_t kMaxUniverse = 4096;

struct InstantId {
  std::uint32_t value = 0;

  constexpr InstantId() = default;
  constexpr explicit InstantId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(InstantId, InstantId) = default;
};

struct InstantPair {
  InstantId first;
  InstantId second;

  constexpr InstantPair() = default;
  constexpr InstantPair(InstantId a, InstantId b) : first(a), second(b) {}
  constexpr InstantPair(std::uint32_t a, std::uint32_t b) : first(a), second(b) {}

  friend constexpr auto operator<=>(const InstantPair&, const InstantPair&) = default;
};

/// A set of ordered pairs over a fixed universe, stored as a row-major bit
/// matrix. Pair iteration is always lexicographic.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t universe);

  std::size_t universe_size() const { return universe_; }

  bool contains(InstantId a, InstantId b) const {
    return contains(a.value, b.value);
  }
  bool contains(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }

  void insert(InstantId a, InstantId b) { insert(a.value, b.value); }
  void insert(std::size_t a, std::size_t b) {
    bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  /// Number of pairs in the relation.
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  std::vector<InstantPair> pairs() const;

  bool is_subset_of(const Relation& other) const;

  /// Lexicographically least pair of *this that is missing from `other`.
  std::optional<InstantPair> first_not_in(const Relation& other) const;

  std::span<const std::uint64_t> row(std::size_t a) const {
    return {bits_.data() + a * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t a) {
    return {bits_.data() + a * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t universe_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Instants of one abstraction level together with their coincidence and
/// precedence relations.
///
/// A structure built by from_generators() is open: its relations equal the
/// generators. close_structure() yields the closed form, which also records
/// whether the closure is consistent (no instant precedes a coincident one).
class TimeStructure {
 public:
  /// Throws std::invalid_argument when the universe is 0 or above
  /// kMaxUniverse, and std::out_of_range for pairs outside the universe.
  static TimeStructure from_generators(std::size_t universe,
                                       std::span<const InstantPair> coincide,
                                       std::span<const InstantPair> precede);

  std::size_t universe_size() const { return universe_; }

  const Relation& coincidence_generators() const { return coincide_gen_; }
  const Relation& precedence_generators() const { return precede_gen_; }
  const Relation& coincidence() const { return coincide_; }
  const Relation& precedence() const { return precede_; }

  bool closed() const { return closed_; }
  /// Closed and free of irreflexivity breaches.
  bool valid() const { return closed_ && consistent_; }

  bool coincident(InstantId a, InstantId b) const {
    return coincide_.contains(a, b);
  }
  bool precedes(InstantId a, InstantId b) const {
    return precede_.contains(a, b);
  }

 private:
  friend TimeStructure close_structure(const TimeStructure&);

  std::size_t universe_ = 0;
  Relation coincide_gen_;
  Relation precede_gen_;
  Relation coincide_;
  Relation precede_;
  bool closed_ = false;
  bool consistent_ = false;
};

/// Least pair of relations containing the generators and closed under the
/// equivalence rules for coincidence, transitivity of precedence, and both
/// congruence rules. Idempotent.
TimeStructure close_structure(const TimeStructure& s);

struct SpoViolation {
  enum class Kind { IrreflexivityTowardCoincidence };

  Kind kind = Kind::IrreflexivityTowardCoincidence;
  InstantPair witness;

  friend bool operator==(const SpoViolation&, const SpoViolation&) = default;
};

/// One violation per coincidence class that precedes itself, ordered by the
/// class's least instant. The witness pairs that instant with the next member
/// of its class, or with itself for a singleton class.
/// Throws std::invalid_argument on an open structure.
std::vector<SpoViolation> validate_spo(const TimeStructure& s);

/// The seven axiom conjuncts of a strict partial order over (≈, ≺).
enum class Axiom {
  CoincidenceReflexive,
  CoincidenceSymmetric,
  CoincidenceTransitive,
  PrecedenceIrreflexiveTowardCoincidence,
  PrecedenceTransitive,
  PrecedenceRespectsCoincidenceLeft,
  PrecedenceRespectsCoincidenceRight,
};

inline constexpr std::size_t kAxiomCount = 7;

std::string_view axiom_name(Axiom a);

struct AxiomResult {
  Axiom axiom;
  bool holds = true;
  /// Least instants (one to three, depending on the axiom) breaking it.
  std::vector<InstantId> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;  // one per Axiom, in declaration order

  bool holds() const;
  std::size_t passed() const;
};

/// Evaluates each axiom conjunct directly on the structure's relations,
/// without assuming they were produced by close_structure().
AxiomReport check_axioms(const TimeStructure& s);

enum class PairClassification { Coincident, Precedes, PrecededBy, Independent };

std::string_view classification_name(PairClassification c);

/// Throws std::invalid_argument unless `s` is valid, std::out_of_range for ids
/// outside the universe.
PairClassification classify_pair(const TimeStructure& s, InstantId i, InstantId j);

inline constexpr std::size_t kMaxEnumeratedUniverse = 4;

/// Visits every closed valid structure on n instants exactly once: each set
/// partition of the universe into coincidence classes crossed with each strict
/// partial order on the classes. Throws std::invalid_argument unless
/// 1 <= n <= kMaxEnumeratedUniverse.
void for_each_structure(std::size_t n,
                        const std::function<void(const TimeStructure&)>& visit);

std::vector<TimeStructure> enumerate_structures(std::size_t n);

}  // namespace chronoref
