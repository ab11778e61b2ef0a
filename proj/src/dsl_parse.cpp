#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "chronoref/dsl.hpp"

namespace chronoref::dsl {

std::string_view claim_keyword(ClaimKind k) {
  switch (k) {
    case ClaimKind::ValidSpo: return "spo";
    case ClaimKind::Refines: return "refines";
    case ClaimKind::Subclock: return "subclock";
    case ClaimKind::Union: return "union";
    case ClaimKind::ClockRefines: return "clockrefines";
    case ClaimKind::PreserveSubclock: return "preserve-subclock";
    case ClaimKind::PreserveUnion: return "preserve-union";
  }
  return "unknown";
}

std::size_t claim_arity(ClaimKind k) {
  switch (k) {
    case ClaimKind::ValidSpo: return 1;
    case ClaimKind::Refines:
    case ClaimKind::Subclock:
    case ClaimKind::ClockRefines: return 2;
    case ClaimKind::Union: return 3;
    case ClaimKind::PreserveSubclock:
    case ClaimKind::PreserveUnion: return 4;
  }
  return 0;
}

std::optional<ClaimKind> parse_claim_keyword(std::string_view word) {
  for (auto k : {ClaimKind::ValidSpo, ClaimKind::Refines, ClaimKind::Subclock, ClaimKind::Union,
                 ClaimKind::ClockRefines, ClaimKind::PreserveSubclock, ClaimKind::PreserveUnion}) {
    if (word == claim_keyword(k)) return k;
  }
  return std::nullopt;
}

std::string_view kind_name(ParseDiagnostic::Kind k) {
  switch (k) {
    case ParseDiagnostic::Kind::Syntax: return "syntax";
    case ParseDiagnostic::Kind::Resolution: return "resolution";
    case ParseDiagnostic::Kind::Range: return "range";
  }
  return "unknown";
}

std::string format_diagnostic(std::string_view origin, const ParseDiagnostic& d) {
  std::string out(origin);
  out += ':' + std::to_string(d.line) + ':' + std::to_string(d.column) + ": ";
  out += kind_name(d.kind);
  out += " error: " + d.message;
  return out;
}

namespace {

using Kind = ParseDiagnostic::Kind;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Tok { Name, Int, LBrace, RBrace, Comma, Semi, At, Equals, Invalid, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  Position pos;
  std::uint64_t value = 0;  // Int only
  bool overflow = false;    // Int only
};

bool name_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool name_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t;
    t.pos = pos_;
    if (at_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const auto start = at_;
    const auto c = static_cast<unsigned char>(src_[at_]);
    if (name_start(c)) {
      while (at_ < src_.size() && name_char(static_cast<unsigned char>(src_[at_]))) advance();
      t.kind = Tok::Name;
    } else if (std::isdigit(c)) {
      t.kind = Tok::Int;
      while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) {
        const std::uint64_t digit = static_cast<unsigned char>(src_[at_]) - '0';
        if (t.value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) t.overflow = true;
        t.value = t.value * 10 + digit;
        advance();
      }
    } else {
      advance();
      switch (c) {
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case '@': t.kind = Tok::At; break;
        case '=': t.kind = Tok::Equals; break;
        default: t.kind = Tok::Invalid; break;
      }
    }
    t.text = src_.substr(start, at_ - start);
    return t;
  }

 private:
  void advance() {
    if (src_[at_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++at_;
  }

  void skip_blank() {
    while (at_ < src_.size()) {
      const char c = src_[at_];
      if (c == '#') {
        while (at_ < src_.size() && src_[at_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  Position pos_;
};

struct IntRef {
  std::uint64_t value = 0;
  Position pos;
};

struct NameRef {
  std::string name;
  Position pos;
};

struct RawRel {
  bool coincide = true;
  IntRef a;
  IntRef b;
};

struct RawLevel {
  NameRef name;
  std::vector<RawRel> rels;
};

struct RawClock {
  NameRef name;
  NameRef level;
  std::vector<IntRef> ticks;
};

struct RawClaim {
  ClaimKind kind;
  Position pos;
  std::vector<NameRef> operands;
};

struct RawUniverse {
  IntRef value;
  Position pos;
};

struct RawDocument {
  std::vector<RawUniverse> universes;
  std::vector<RawLevel> levels;
  std::vector<RawClock> clocks;
  std::vector<RawClaim> claims;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Invalid: {
      const auto c = static_cast<unsigned char>(t.text.front());
      if (std::isprint(c)) return "unexpected character '" + std::string(t.text) + "'";
      char buf[8];
      std::snprintf(buf, sizeof buf, "0x%02x", c);
      return std::string("unexpected byte ") + buf;
    }
    default: return "'" + std::string(t.text) + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  RawDocument run() {
    while (tok_.kind != Tok::End) statement();
    return std::move(doc_);
  }

  std::vector<ParseDiagnostic> take_diagnostics() { return std::move(diags_); }

 private:
  // Thrown to abandon the current statement; caught in statement().
  struct Abandon {};

  void bump() { tok_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    std::string msg = tok_.kind == Tok::Invalid ? describe(tok_) + ", expected " + expected
                                                : "expected " + expected + ", found " + describe(tok_);
    diags_.push_back({tok_.pos.line, tok_.pos.column, std::move(msg), Kind::Syntax});
    throw Abandon{};
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(what);
    bump();
  }

  bool at_word(std::string_view w) const { return tok_.kind == Tok::Name && tok_.text == w; }

  NameRef name(const char* what) {
    if (tok_.kind != Tok::Name) fail(what);
    NameRef n{std::string(tok_.text), tok_.pos};
    bump();
    return n;
  }

  IntRef integer(const char* what) {
    if (tok_.kind != Tok::Int) fail(what);
    IntRef r{tok_.overflow ? std::numeric_limits<std::uint64_t>::max() : tok_.value, tok_.pos};
    bump();
    return r;
  }

  // Skips to the ';' closing the current statement, balancing braces opened
  // since `depth` was zero.
  void recover(int depth) {
    while (tok_.kind != Tok::End) {
      if (tok_.kind == Tok::LBrace) ++depth;
      if (tok_.kind == Tok::RBrace && depth > 0) --depth;
      if (tok_.kind == Tok::Semi && depth == 0) {
        bump();
        return;
      }
      bump();
    }
  }

  void statement() {
    depth_ = 0;
    try {
      if (at_word("universe")) {
        const auto pos = tok_.pos;
        bump();
        doc_.universes.push_back({integer("universe size"), pos});
      } else if (at_word("level")) {
        bump();
        level();
      } else if (at_word("clock")) {
        bump();
        clock();
      } else if (at_word("assert")) {
        const auto pos = tok_.pos;
        bump();
        claim(pos);
      } else {
        fail("'universe', 'level', 'clock' or 'assert'");
      }
      expect(Tok::Semi, "';'");
    } catch (const Abandon&) {
      recover(depth_);
    }
  }

  void level() {
    RawLevel lvl{name("level name"), {}};
    expect(Tok::LBrace, "'{'");
    depth_ = 1;
    while (tok_.kind != Tok::RBrace) {
      if (tok_.kind == Tok::End) fail("'}'");
      try {
        RawRel rel;
        if (at_word("coincide")) {
          rel.coincide = true;
        } else if (at_word("precede")) {
          rel.coincide = false;
        } else {
          fail("'coincide', 'precede' or '}'");
        }
        bump();
        rel.a = integer("instant index");
        rel.b = integer("instant index");
        expect(Tok::Semi, "';'");
        lvl.rels.push_back(rel);
      } catch (const Abandon&) {
        // Resume at the next relation, or let the block close.
        while (tok_.kind != Tok::End && tok_.kind != Tok::Semi && tok_.kind != Tok::RBrace) bump();
        if (tok_.kind == Tok::Semi) bump();
      }
    }
    bump();
    depth_ = 0;
    doc_.levels.push_back(std::move(lvl));
  }

  void clock() {
    RawClock c;
    c.name = name("clock name");
    expect(Tok::At, "'@'");
    c.level = name("level name");
    expect(Tok::Equals, "'='");
    expect(Tok::LBrace, "'{'");
    c.ticks.push_back(integer("tick index"));
    while (tok_.kind == Tok::Comma) {
      bump();
      c.ticks.push_back(integer("tick index"));
    }
    expect(Tok::RBrace, "',' or '}'");
    doc_.clocks.push_back(std::move(c));
  }

  void claim(Position pos) {
    if (tok_.kind != Tok::Name) fail("claim kind");
    auto kind = parse_claim_keyword(tok_.text);
    if (!kind) {
      fail("one of 'spo', 'refines', 'subclock', 'union', 'clockrefines', "
           "'preserve-subclock', 'preserve-union'");
    }
    bump();
    RawClaim c{*kind, pos, {}};
    for (std::size_t k = 0; k < claim_arity(*kind); ++k) c.operands.push_back(name("operand name"));
    doc_.claims.push_back(std::move(c));
  }

  Lexer lex_;
  Token tok_;
  int depth_ = 0;
  RawDocument doc_;
  std::vector<ParseDiagnostic> diags_;
};

class Resolver {
 public:
  explicit Resolver(std::vector<ParseDiagnostic>& diags) : diags_(diags) {}

  SpecDocument run(const RawDocument& raw) {
    SpecDocument doc;
    universe(raw, doc);
    for (const auto& lvl : raw.levels) level(lvl, doc);
    for (const auto& c : raw.clocks) clock(c, doc);
    for (const auto& c : raw.claims) claim(c, doc);
    return doc;
  }

 private:
  void report(Position p, std::string msg, Kind kind) {
    diags_.push_back({p.line, p.column, std::move(msg), kind});
  }

  void universe(const RawDocument& raw, SpecDocument& doc) {
    if (raw.universes.empty()) {
      report({}, "universe missing: declare 'universe N;'", Kind::Syntax);
      return;
    }
    for (std::size_t k = 1; k < raw.universes.size(); ++k) {
      report(raw.universes[k].pos, "duplicate universe declaration", Kind::Syntax);
    }
    const auto& u = raw.universes.front().value;
    if (u.value == 0) {
      report(u.pos, "universe must contain at least one instant", Kind::Range);
    } else if (u.value > kMaxUniverse) {
      report(u.pos, "universe size " + std::to_string(u.value) + " exceeds the limit of " +
                        std::to_string(kMaxUniverse),
             Kind::Range);
    } else {
      doc.universe = static_cast<std::uint32_t>(u.value);
      universe_ok_ = true;
    }
  }

  // Range-checks an instant index; returns false when it must be dropped.
  bool instant(const IntRef& i) {
    if (!universe_ok_) return false;
    if (i.value >= universe_) {
      report(i.pos, "instant " + std::to_string(i.value) + " outside universe 0.." +
                        std::to_string(universe_ - 1),
             Kind::Range);
      return false;
    }
    return true;
  }

  void level(const RawLevel& raw, SpecDocument& doc) {
    universe_ = doc.universe;
    if (doc.levels.count(raw.name.name)) {
      report(raw.name.pos, "level '" + raw.name.name + "' already declared", Kind::Resolution);
      return;
    }
    LevelDecl decl;
    for (const auto& rel : raw.rels) {
      bool a = instant(rel.a);
      bool b = instant(rel.b);
      if (!a || !b) continue;
      InstantPair p(static_cast<std::uint32_t>(rel.a.value), static_cast<std::uint32_t>(rel.b.value));
      (rel.coincide ? decl.coincide : decl.precede).insert(p);
    }
    doc.levels.emplace(raw.name.name, std::move(decl));
  }

  void clock(const RawClock& raw, SpecDocument& doc) {
    universe_ = doc.universe;
    if (doc.clocks.count(raw.name.name)) {
      report(raw.name.pos, "clock '" + raw.name.name + "' already declared", Kind::Resolution);
      return;
    }
    // Registered even when its level is unknown, so claims naming the clock
    // do not report a second error.
    if (!doc.levels.count(raw.level.name)) {
      report(raw.level.pos, "unknown level '" + raw.level.name + "'", Kind::Resolution);
    }
    ClockDecl decl{raw.level.name, {}};
    for (const auto& t : raw.ticks) {
      if (instant(t)) decl.ticks.insert(static_cast<std::uint32_t>(t.value));
    }
    doc.clocks.emplace(raw.name.name, std::move(decl));
  }

  bool resolve_level(const NameRef& n, const SpecDocument& doc) {
    if (doc.levels.count(n.name)) return true;
    report(n.pos, "unknown level '" + n.name + "'", Kind::Resolution);
    return false;
  }

  bool resolve_clock(const NameRef& n, const SpecDocument& doc) {
    if (doc.clocks.count(n.name)) return true;
    report(n.pos, "unknown clock '" + n.name + "'", Kind::Resolution);
    return false;
  }

  // Clocks in `group` (indices into operands) must live on one level.
  void same_level(const RawClaim& c, const SpecDocument& doc, std::initializer_list<std::size_t> group) {
    const auto& first = doc.clocks.at(c.operands[*group.begin()].name).level;
    for (auto k : group) {
      const auto& op = c.operands[k];
      if (doc.clocks.at(op.name).level != first) {
        report(op.pos, "clock '" + op.name + "' is on level '" + doc.clocks.at(op.name).level +
                           "', expected level '" + first + "'",
               Kind::Resolution);
        return;
      }
    }
  }

  void claim(const RawClaim& c, SpecDocument& doc) {
    const bool on_levels = c.kind == ClaimKind::ValidSpo || c.kind == ClaimKind::Refines;
    bool resolved = true;
    for (const auto& op : c.operands) {
      resolved = (on_levels ? resolve_level(op, doc) : resolve_clock(op, doc)) && resolved;
    }
    if (!resolved) return;
    const auto before = diags_.size();
    switch (c.kind) {
      case ClaimKind::Subclock: same_level(c, doc, {0, 1}); break;
      case ClaimKind::Union: same_level(c, doc, {0, 1, 2}); break;
      case ClaimKind::PreserveSubclock:
        same_level(c, doc, {0, 1});
        same_level(c, doc, {2, 3});
        break;
      case ClaimKind::PreserveUnion: same_level(c, doc, {0, 1, 2}); break;
      default: break;
    }
    if (diags_.size() != before) return;
    Claim out{c.kind, {}};
    for (const auto& op : c.operands) out.operands.push_back(op.name);
    doc.claims.push_back(std::move(out));
  }

  std::vector<ParseDiagnostic>& diags_;
  bool universe_ok_ = false;
  std::uint64_t universe_ = 0;
};

}  // namespace

ParseResult parse(std::string_view source) {
  Parser parser(source);
  auto raw = parser.run();
  auto diags = parser.take_diagnostics();
  Resolver resolver(diags);
  auto doc = resolver.run(raw);

  ParseResult result;
  if (diags.empty()) {
    result.document = std::move(doc);
  } else {
    std::stable_sort(diags.begin(), diags.end(), [](const auto& a, const auto& b) {
      return std::tie(a.line, a.column) < std::tie(b.line, b.column);
    });
    result.diagnostics = std::move(diags);
  }
  return result;
}

TimeStructure level_structure(const SpecDocument& doc, const std::string& level) {
  auto it = doc.levels.find(level);
  if (it == doc.levels.end()) throw std::invalid_argument("unknown level '" + level + "'");
  std::vector<InstantPair> coincide(it->second.coincide.begin(), it->second.coincide.end());
  std::vector<InstantPair> precede(it->second.precede.begin(), it->second.precede.end());
  return close_structure(TimeStructure::from_generators(doc.universe, coincide, precede));
}

Clock clock_of(const SpecDocument& doc, const std::string& name) {
  auto it = doc.clocks.find(name);
  if (it == doc.clocks.end()) throw std::invalid_argument("unknown clock '" + name + "'");
  std::vector<InstantId> ticks;
  for (auto t : it->second.ticks) ticks.emplace_back(t);
  return Clock(name, std::move(ticks));
}

}  // namespace chronoref::dsl
