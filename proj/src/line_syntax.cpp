#include "line_syntax.hpp"

#include <set>

namespace dol {
namespace detail {

namespace {

enum class Tok { Ident, Symbol, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// Line-oriented lexer: newlines are tokens, `%` starts a comment.
class LineLexer {
 public:
  LineLexer(std::string_view text, SourcePos start) : cur_(text, start) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_symbol(std::string_view s) const { return tok_.kind == Tok::Symbol && tok_.text == s; }
  bool at_word(std::string_view s) const { return tok_.kind == Tok::Ident && tok_.text == s; }

 private:
  void advance() {
    while (!cur_.eof()) {
      const char c = cur_.peek();
      if (c == '%') {
        while (!cur_.eof() && cur_.peek() != '\n') cur_.advance();
      } else if (c != '\n' && std::isspace(static_cast<unsigned char>(c))) {
        cur_.advance();
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.pos = cur_.position();
    if (cur_.eof()) return;
    const char c = cur_.peek();
    if (c == '\n') {
      cur_.advance();
      tok_.kind = Tok::Newline;
      return;
    }
    if (ident_start(c)) {
      tok_.kind = Tok::Ident;
      while (!cur_.eof() && ident_char(cur_.peek())) {
        // "a->b": a hyphen followed by '>' starts an arrow.
        if (cur_.peek() == '-' && cur_.peek(1) == '>') break;
        tok_.text += cur_.advance();
      }
      return;
    }
    tok_.kind = Tok::Symbol;
    for (std::string_view sym : {"<->", "->"}) {
      if (cur_.starts_with(sym)) {
        tok_.text = std::string(sym);
        cur_.advance(sym.size());
        return;
      }
    }
    // Multi-byte UTF-8 characters are reported as one symbol.
    tok_.text += cur_.advance();
    while (!cur_.eof() && (static_cast<unsigned char>(cur_.peek()) & 0xC0) == 0x80) {
      tok_.text += cur_.advance();
    }
  }

  Cursor cur_;
  Token tok_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, const Token& at) {
  throw DolError(kind, msg, at.pos);
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Newline: return "end of line";
    default: return "'" + t.text + "'";
  }
}

void skip_blank_lines(LineLexer& lex) {
  while (lex.peek().kind == Tok::Newline) lex.take();
}

void expect_line_end(LineLexer& lex) {
  const Token& t = lex.peek();
  if (t.kind != Tok::Newline && t.kind != Tok::End) {
    fail(ErrorKind::SyntaxError, "expected end of line, found " + describe(t), t);
  }
}

void add_symbol(Signature& sig, const Name& name, int arity, const Token& at) {
  try {
    sig.add_predicate(name, arity);
  } catch (const DolError& e) {
    throw DolError(e.kind(), e.message(), at.pos);
  }
}

// --- propositional -----------------------------------------------------------

class PropParser {
 public:
  PropParser(std::string_view text, SourcePos start) : lex_(text, start) {}

  Theory run() {
    Theory t;
    t.signature = Signature(LogicId::Prop);
    while (true) {
      skip_blank_lines(lex_);
      if (lex_.peek().kind == Tok::End) break;
      if (lex_.at_word("props")) {
        lex_.take();
        while (lex_.peek().kind == Tok::Ident || lex_.at_symbol(",")) {
          Token name = lex_.take();
          if (name.kind != Tok::Ident) continue;
          check_atom_name(name);
          add_symbol(t.signature, name.text, 0, name);
        }
        expect_line_end(lex_);
        continue;
      }
      Formula f = iff();
      expect_line_end(lex_);
      t.axioms.emplace_back(LogicId::Prop, std::move(f));
    }
    for (auto& [name, pos] : atoms_) add_symbol(t.signature, name, 0, Token{Tok::Ident, name, pos});
    return t;
  }

 private:
  void check_atom_name(const Token& t) {
    static const std::set<std::string, std::less<>> reserved = {"true", "false", "props"};
    static const std::set<std::string, std::less<>> unsupported = {"forall", "exists", "all", "some"};
    if (unsupported.contains(t.text)) {
      fail(ErrorKind::UnsupportedFeature, "quantifiers are not part of propositional syntax", t);
    }
    if (reserved.contains(t.text)) fail(ErrorKind::SyntaxError, "reserved word '" + t.text + "'", t);
  }

  Formula iff() {
    Formula lhs = implication();
    while (lex_.at_symbol("<->")) {
      lex_.take();
      lhs = Formula::biconditional(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (lex_.at_symbol("->")) {
      lex_.take();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (lex_.at_symbol("|")) {
      lex_.take();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts.front() : Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (lex_.at_symbol("&")) {
      lex_.take();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts.front() : Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    if (++depth_ > kMaxDepth) fail(ErrorKind::SyntaxError, "nesting too deep", lex_.peek());
    Formula f = unary_inner();
    --depth_;
    return f;
  }

  Formula unary_inner() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Symbol && t.text == "~") {
      lex_.take();
      return Formula::negation(unary());
    }
    if (t.kind == Tok::Symbol && t.text == "(") {
      lex_.take();
      Formula inner = iff();
      if (!lex_.at_symbol(")")) fail(ErrorKind::SyntaxError, "expected ')', found " + describe(lex_.peek()), lex_.peek());
      lex_.take();
      return inner;
    }
    if (t.kind == Tok::Ident) {
      Token name = lex_.take();
      if (name.text == "true") return Formula::truth();
      if (name.text == "false") return Formula::falsity();
      check_atom_name(name);
      if (lex_.at_symbol("(")) {
        fail(ErrorKind::UnsupportedFeature, "predicate application is not part of propositional syntax", lex_.peek());
      }
      atoms_.emplace(name.text, name.pos);
      return Formula::atom(name.text);
    }
    if (t.kind == Tok::Symbol && (t.text == "=" || t.text == "!" || t.text == "^")) {
      fail(ErrorKind::UnsupportedFeature, "operator '" + t.text + "' is not part of propositional syntax", t);
    }
    fail(ErrorKind::SyntaxError, "expected a propositional formula, found " + describe(t), t);
  }

  static constexpr int kMaxDepth = 256;
  LineLexer lex_;
  std::map<Name, SourcePos> atoms_;
  int depth_ = 0;
};

// --- EL ----------------------------------------------------------------------

class ElParser {
 public:
  ElParser(std::string_view text, SourcePos start) : lex_(text, start) {}

  Theory run() {
    Theory t;
    t.signature = Signature(LogicId::EL);
    while (true) {
      skip_blank_lines(lex_);
      if (lex_.peek().kind == Tok::End) break;
      if (lex_.at_word("Class") || lex_.at_word("ObjectProperty")) {
        const int arity = lex_.take().text == "Class" ? 1 : 2;
        while (lex_.peek().kind == Tok::Ident || lex_.at_symbol(",")) {
          Token name = lex_.take();
          if (name.kind != Tok::Ident) continue;
          check_name(name);
          add_symbol(t.signature, name.text, arity, name);
        }
        expect_line_end(lex_);
        continue;
      }
      Concept sub = parse_concept();
      if (!lex_.at_word("SubClassOf")) {
        check_unsupported(lex_.peek());
        fail(ErrorKind::SyntaxError, "expected 'SubClassOf', found " + describe(lex_.peek()), lex_.peek());
      }
      lex_.take();
      Concept super = parse_concept();
      check_unsupported(lex_.peek());
      expect_line_end(lex_);
      t.axioms.emplace_back(Subsumption{std::move(sub), std::move(super)});
    }
    for (auto& [name, use] : uses_) add_symbol(t.signature, name, use.first, Token{Tok::Ident, name, use.second});
    return t;
  }

 private:
  static void check_unsupported(const Token& t) {
    static const std::set<std::string, std::less<>> unsupported = {
        "not", "or", "only", "value", "min", "max", "exactly", "inverse", "EquivalentTo",
        "DisjointWith", "DisjointClasses", "that", "Self", "Nothing", "SubPropertyOf",
        "Characteristics", "Transitive", "DisjointUnionOf"};
    if (t.kind == Tok::Ident && unsupported.contains(t.text)) {
      fail(ErrorKind::UnsupportedFeature, "'" + t.text + "' is outside the EL fragment", t);
    }
  }

  static void check_name(const Token& t) {
    check_unsupported(t);
    static const std::set<std::string, std::less<>> reserved = {"and", "some", "Thing", "SubClassOf",
                                                                "Class", "ObjectProperty"};
    if (reserved.contains(t.text)) fail(ErrorKind::SyntaxError, "reserved word '" + t.text + "'", t);
  }

  void use(const Token& name, int arity) {
    auto [it, inserted] = uses_.emplace(name.text, std::make_pair(arity, name.pos));
    if (!inserted && it->second.first != arity) {
      fail(ErrorKind::ArityClash, "'" + name.text + "' used both as concept and role", name);
    }
  }

  Concept parse_concept() {
    std::vector<Concept> parts{primary()};
    while (lex_.at_word("and")) {
      lex_.take();
      parts.push_back(primary());
    }
    return parts.size() == 1 ? parts.front() : Concept::intersection(std::move(parts));
  }

  Concept primary() {
    if (++depth_ > kMaxDepth) fail(ErrorKind::SyntaxError, "nesting too deep", lex_.peek());
    Concept c = primary_inner();
    --depth_;
    return c;
  }

  Concept primary_inner() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Symbol && t.text == "(") {
      lex_.take();
      Concept inner = parse_concept();
      check_unsupported(lex_.peek());
      if (!lex_.at_symbol(")")) fail(ErrorKind::SyntaxError, "expected ')', found " + describe(lex_.peek()), lex_.peek());
      lex_.take();
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "Thing") {
        lex_.take();
        return Concept::top();
      }
      Token name = lex_.take();
      check_name(name);
      if (lex_.at_word("some")) {
        lex_.take();
        use(name, 2);
        return Concept::existential(name.text, primary());
      }
      check_unsupported(lex_.peek());
      use(name, 1);
      return Concept::named(name.text);
    }
    fail(ErrorKind::SyntaxError, "expected a concept, found " + describe(t), t);
  }

  static constexpr int kMaxDepth = 256;
  LineLexer lex_;
  std::map<Name, std::pair<int, SourcePos>> uses_;
  int depth_ = 0;
};

// --- printing ----------------------------------------------------------------

bool prop_atomic(const Formula& f) {
  return f.op() == Connective::Atom || f.op() == Connective::True || f.op() == Connective::False;
}

void print_prop(const Formula& f, std::string& out);

void print_prop_operand(const Formula& f, std::string& out) {
  if (prop_atomic(f) || f.op() == Connective::Not) {
    print_prop(f, out);
  } else {
    out += '(';
    print_prop(f, out);
    out += ')';
  }
}

void print_prop(const Formula& f, std::string& out) {
  auto joined = [&](std::string_view sep) {
    for (std::size_t i = 0; i < f.operands().size(); ++i) {
      if (i) out += sep;
      print_prop_operand(f.operands()[i], out);
    }
  };
  switch (f.op()) {
    case Connective::True: out += "true"; break;
    case Connective::False: out += "false"; break;
    case Connective::Atom:
      if (!f.args().empty()) {
        throw DolError(ErrorKind::LogicMismatch, "propositional atoms take no arguments");
      }
      out += f.predicate();
      break;
    case Connective::Not:
      out += '~';
      print_prop_operand(f.operands()[0], out);
      break;
    case Connective::And:
      if (f.operands().empty()) out += "true";
      joined(" & ");
      break;
    case Connective::Or:
      if (f.operands().empty()) out += "false";
      joined(" | ");
      break;
    case Connective::Implies: joined(" -> "); break;
    case Connective::Iff: joined(" <-> "); break;
    case Connective::Equal:
    case Connective::Forall:
    case Connective::Exists:
      throw DolError(ErrorKind::LogicMismatch, "equality and quantifiers are not propositional");
  }
}

void print_concept(const Concept& c, std::string& out, bool nested) {
  switch (c.kind()) {
    case ConceptKind::Top: out += "Thing"; break;
    case ConceptKind::Name: out += c.name(); break;
    case ConceptKind::Intersection: {
      if (nested) out += '(';
      for (std::size_t i = 0; i < c.operands().size(); ++i) {
        if (i) out += " and ";
        print_concept(c.operands()[i], out, true);
      }
      if (c.operands().empty()) out += "Thing";
      if (nested) out += ')';
      break;
    }
    case ConceptKind::Existential:
      if (nested) out += '(';
      out += c.name();
      out += " some ";
      print_concept(c.operands().front(), out, true);
      if (nested) out += ')';
      break;
  }
}

}  // namespace

Theory parse_prop_at(std::string_view text, SourcePos start) { return PropParser(text, start).run(); }
Theory parse_el_at(std::string_view text, SourcePos start) { return ElParser(text, start).run(); }

std::string print_prop_formula(const Formula& f) {
  std::string out;
  print_prop(f, out);
  return out;
}

std::string print_subsumption(const Subsumption& s) {
  std::string out;
  print_concept(s.sub, out, false);
  out += " SubClassOf ";
  print_concept(s.super, out, false);
  return out;
}

std::string print_line_declarations(const Theory& theory) {
  Signature used(theory.logic());
  for (const auto& ax : theory.axioms) {
    const Signature sig = symbols_of(ax);
    for (const auto& [n, a] : sig.predicates()) used.add_predicate(n, a);
  }
  std::vector<Name> concepts;
  std::vector<Name> roles;
  for (const auto& [name, arity] : theory.signature.predicates()) {
    if (used.has_predicate(name)) continue;
    (arity == 2 ? roles : concepts).push_back(name);
  }
  std::string out;
  auto line = [&](std::string_view keyword, const std::vector<Name>& names) {
    if (names.empty()) return;
    out += keyword;
    for (const auto& n : names) {
      out += ' ';
      out += n;
    }
    out += '\n';
  };
  if (theory.logic() == LogicId::Prop) {
    line("props", concepts);
  } else {
    line("Class", concepts);
    line("ObjectProperty", roles);
  }
  return out;
}

}  // namespace detail

Theory parse_prop(std::string_view text) {
  detail::validate_utf8(text);
  return detail::parse_prop_at(text, SourcePos{});
}

Theory parse_el(std::string_view text) {
  detail::validate_utf8(text);
  return detail::parse_el_at(text, SourcePos{});
}

}  // namespace dol
