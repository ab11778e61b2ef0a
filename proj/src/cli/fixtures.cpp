#include "chronoref/fixtures.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace chronoref::fixtures {

namespace {

constexpr std::string_view kMorning = R"(# Morning routine. After getting up, showering (always while singing) and
# eating happen in either order; taking off for work comes last.
#
#   0 up    1 sho    2 off    3 eat    4 sin
#
# Expected classifications are listed in morning.expect: sho and eat are
# independent, sho and sin coincide.
universe 5;

level morning {
  coincide 1 4;  # sings while showering
  precede 0 1;   # up before shower
  precede 1 2;   # shower before take-off
  precede 0 3;   # up before breakfast
  precede 3 2;   # breakfast before take-off
};

clock eat @ morning = {3};
clock off @ morning = {2};
clock sho @ morning = {1};
clock sin @ morning = {4};
clock up @ morning = {0};

assert spo morning;
assert subclock sho sin;
assert subclock sin sho;
)";

constexpr std::string_view kMorningExpect = R"(# level  i  j  classification
morning 1 3 independent   # sho, eat
morning 3 1 independent   # eat, sho
morning 1 4 coincident    # sho, sin
morning 0 2 precedes      # up, off
morning 2 3 preceded-by   # off, eat
morning 0 4 precedes      # up, sin (through the coincidence with sho)
morning 4 2 precedes      # sin, off
)";

constexpr std::string_view kLight = R"(# Light controller trace: the system is switched on and off, and each
# execution toggles the variable x driving the light. Switching on or off
# assigns x := 0; execution assigns x := 1 - x.
#
# One instant per event occurrence. The nine columns of the depicted trace are
# the coincidence classes; columns follow each other in time.
#
#   column  1    2    3    4    5    6      7      8      9
#   event   on   off  on   ex   ex   off    on     ex     off
#   x       x0   x0   x0   x1   x0   x0     x0     x1     x0
#   ids     0,1  2,3  4,5  6,7  8,9  10,11  12,13  14,15  16,17
#
# Reading of the figure: t_x0 has seven marks (columns 1,2,3,5,6,7,9) and
# t_x1 two (columns 4 and 8).
universe 18;

level trace {
  coincide 0 1;
  coincide 2 3;
  coincide 4 5;
  coincide 6 7;
  coincide 8 9;
  coincide 10 11;
  coincide 12 13;
  coincide 14 15;
  coincide 16 17;
  precede 0 2;
  precede 2 4;
  precede 4 6;
  precede 6 8;
  precede 8 10;
  precede 10 12;
  precede 12 14;
  precede 14 16;
};

clock t_ex @ trace = {6, 8, 14};
clock t_off @ trace = {2, 10, 16};
clock t_on @ trace = {0, 4, 12};
clock t_x @ trace = {1, 3, 5, 7, 9, 11, 13, 15, 17};
clock t_x0 @ trace = {1, 3, 5, 9, 11, 13, 17};
clock t_x1 @ trace = {7, 15};

assert spo trace;
assert subclock t_on t_x0;
assert subclock t_off t_x0;
assert subclock t_ex t_x;
assert union t_x t_x0 t_x1;
)";

constexpr std::string_view kBrokenEmbodiment = R"(# Two levels on two instants. The abstract level makes 0 and 1 coincide
# while the concrete level leaves them independent, so the concrete level
# does not refine the abstract one.
universe 2;

level abstract {
  coincide 0 1;
};

level concrete {
};

assert spo abstract;
assert spo concrete;
assert refines concrete abstract;
)";

constexpr std::array<std::string_view, 5> kRows = {"on1", "on2", "stack", "comp", "store"};

}  // namespace

std::vector<std::string> names() { return {"morning", "light", "mod5_k3", "broken-embodiment"}; }

std::string text(std::string_view name) {
  if (name == "morning") return std::string(kMorning);
  if (name == "light") return std::string(kLight);
  if (name == "mod5_k3") return mod5_text(3);
  if (name == "broken-embodiment") return std::string(kBrokenEmbodiment);
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::optional<std::string> expectations(std::string_view name) {
  if (name == "morning") return std::string(kMorningExpect);
  return std::nullopt;
}

bool mod5_abstract_coincide(std::uint32_t a, std::uint32_t b) { return a / 5 == b / 5; }

bool mod5_abstract_precede(std::uint32_t a, std::uint32_t b) { return a / 5 < b / 5; }

bool mod5_concrete_coincide(std::uint32_t a, std::uint32_t b) {
  const auto ra = a % 5;
  const auto rb = b % 5;
  return a / 5 == b / 5 && ((ra <= 1 && rb <= 1) || (ra == rb && ra > 1));
}

bool mod5_concrete_precede(std::uint32_t a, std::uint32_t b) {
  return a / 5 < b / 5 || (a / 5 == b / 5 && a % 5 < b % 5 && b % 5 != 1);
}

// Generators are the pairs of the formulas that the closure cannot derive
// from others: each group's offset 0 coincides with its members, and
// precedence links group heads (abstract) or consecutive instants (concrete).
dsl::SpecDocument mod5_document(std::uint32_t groups) {
  if (groups == 0) throw std::invalid_argument("gen-mod5 needs at least one group");
  if (groups > kMaxUniverse / 5) {
    throw std::invalid_argument("gen-mod5: " + std::to_string(groups) + " groups exceed the universe limit");
  }
  const std::uint32_t n = 5 * groups;

  dsl::SpecDocument doc;
  doc.universe = n;
  dsl::LevelDecl abstract;
  dsl::LevelDecl concrete;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const bool head = a % 5 == 0;
      if (head && mod5_abstract_coincide(a, b)) abstract.coincide.emplace(a, b);
      if (head && b == a + 5 && mod5_abstract_precede(a, b)) abstract.precede.emplace(a, b);
      if (head && mod5_concrete_coincide(a, b)) concrete.coincide.emplace(a, b);
      if (b == a + 1 && mod5_concrete_precede(a, b)) concrete.precede.emplace(a, b);
    }
  }
  doc.levels.emplace("abstract", std::move(abstract));
  doc.levels.emplace("concrete", std::move(concrete));

  for (std::uint32_t r = 0; r < kRows.size(); ++r) {
    dsl::ClockDecl a{"abstract", {}};
    dsl::ClockDecl c{"concrete", {}};
    for (std::uint32_t q = 0; q < groups; ++q) {
      a.ticks.insert(5 * q + r);
      c.ticks.insert(5 * q + r);
    }
    doc.clocks.emplace("a_" + std::string(kRows[r]), std::move(a));
    doc.clocks.emplace("c_" + std::string(kRows[r]), std::move(c));
  }

  using dsl::ClaimKind;
  doc.claims.push_back({ClaimKind::ValidSpo, {"abstract"}});
  doc.claims.push_back({ClaimKind::ValidSpo, {"concrete"}});
  doc.claims.push_back({ClaimKind::Refines, {"concrete", "abstract"}});
  for (auto row : kRows) {
    doc.claims.push_back({ClaimKind::ClockRefines, {"c_" + std::string(row), "a_" + std::string(row)}});
  }
  return doc;
}

std::string mod5_text(std::uint32_t groups) {
  std::ostringstream out;
  out << "# Switch-on refinement of the light controller, " << groups
      << (groups == 1 ? " group" : " groups") << " of five instants.\n"
      << "# Instant a = 5q + r. Rows: on1 (r=0), on2 (r=1), stack (r=2), comp (r=3),\n"
      << "# store (r=4).\n"
      << "#   abstract:  a ~ a' iff q = q';  a < a' iff q < q'\n"
      << "#   concrete:  a ~ a' iff q = q' and (r, r' in {0,1} or r = r' not in {0,1})\n"
      << "#              a < a' iff q < q' or (q = q' and r < r' and r' != 1)\n"
      << "# Only generating pairs are listed; the rest follow by closure.\n"
      << dsl::serialize(mod5_document(groups));
  return out.str();
}

std::vector<Expectation> parse_expectations(std::string_view text) {
  std::vector<Expectation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string level;
    if (!(fields >> level)) continue;
    long long i = -1;
    long long j = -1;
    std::string cls;
    std::string extra;
    if (!(fields >> i >> j >> cls) || (fields >> extra) || i < 0 || j < 0 ||
        i > static_cast<long long>(kMaxUniverse) || j > static_cast<long long>(kMaxUniverse)) {
      throw std::invalid_argument("expectations line " + std::to_string(number) +
                                  ": expected 'LEVEL I J CLASSIFICATION'");
    }
    std::optional<PairClassification> expected;
    for (auto c : {PairClassification::Coincident, PairClassification::Precedes,
                   PairClassification::PrecededBy, PairClassification::Independent}) {
      if (cls == classification_name(c)) expected = c;
    }
    if (!expected) {
      throw std::invalid_argument("expectations line " + std::to_string(number) +
                                  ": unknown classification '" + cls + "'");
    }
    out.push_back({level, InstantId(static_cast<std::uint32_t>(i)),
                   InstantId(static_cast<std::uint32_t>(j)), *expected, number});
  }
  return out;
}

}  // namespace chronoref::fixtures
