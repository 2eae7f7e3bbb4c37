#include <set>

#include "clif_reader.hpp"
#include "dol/syntax.hpp"
#include "line_syntax.hpp"
#include "text_cursor.hpp"

namespace dol {

namespace {

using detail::Cursor;

enum class TokKind { Word, IriRef, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  SourcePos pos;

  bool is(std::string_view punct) const { return kind == TokKind::Punct && text == punct; }
  bool is_word(std::string_view w) const { return kind == TokKind::Word && text == w; }
};

bool word_char(char c) {
  if (c == '\0' || std::isspace(static_cast<unsigned char>(c))) return false;
  static constexpr std::string_view kStop = "{}()<>,;=|%\"'";
  return kStop.find(c) == std::string_view::npos;
}

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {
      "logic",      "syntax",  "ontology", "interpretation", "extension",    "equivalence",
      "inconsistency", "then", "and",      "to",             "via",          "conservative",
      "definitional", "nonconservative", "faithful"};
  return k;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokKind::End: return "end of input";
    case TokKind::IriRef: return "<" + t.text + ">";
    default: return "'" + t.text + "'";
  }
}

class DolParser {
 public:
  explicit DolParser(std::string_view text) : text_(text), cur_(text) {}

  DolDocument run() {
    detail::validate_utf8(text_);
    cur_.skip_space_and_comments();
    if (cur_.starts_with("%prefix(")) parse_prefixes();
    bool have_logic = false;
    while (true) {
      const Token t = peek();
      if (t.kind == TokKind::End) {
        if (!have_logic) fail(t, "expected prefix or logic declaration");
        break;
      }
      if (t.is_word("logic")) {
        parse_logic(!have_logic);
        have_logic = true;
        continue;
      }
      const bool is_item = t.is_word("ontology") || t.is_word("interpretation") ||
                           t.is_word("extension") || t.is_word("equivalence") ||
                           t.is_word("inconsistency");
      if (!is_item) {
        fail(t, have_logic ? "expected 'logic', 'ontology' or a link declaration, found " + describe(t)
                           : "expected prefix or logic declaration, found " + describe(t));
      }
      if (!have_logic) {
        throw DolError(ErrorKind::NonconformantDocument,
                       "'" + t.text + "' appears before any logic declaration", t.pos);
      }
      if (t.is_word("ontology")) {
        parse_ontology();
      } else {
        parse_link();
      }
    }
    return std::move(doc_);
  }

 private:
  // --- lexing ----------------------------------------------------------------

  static Token scan(Cursor& c) {
    c.skip_space_and_comments();
    Token t;
    t.pos = c.position();
    if (c.eof()) return t;
    for (std::string_view p : {"%prefix(", ")%", "{|", "|}", "|->", "<->"}) {
      if (c.starts_with(p)) {
        c.advance(p.size());
        t.kind = TokKind::Punct;
        t.text = std::string(p);
        return t;
      }
    }
    const char ch = c.peek();
    if (ch == '<') {
      c.advance();
      std::string iri;
      while (!c.eof() && c.peek() != '>' && !std::isspace(static_cast<unsigned char>(c.peek()))) {
        iri += c.advance();
      }
      if (c.peek() != '>') throw DolError(ErrorKind::SyntaxError, "unterminated IRI, expected '>'", t.pos);
      c.advance();
      t.kind = TokKind::IriRef;
      t.text = std::move(iri);
      return t;
    }
    if (word_char(ch)) {
      t.kind = TokKind::Word;
      while (word_char(c.peek())) t.text += c.advance();
      return t;
    }
    if (std::string_view("{}(),;=").find(ch) != std::string_view::npos) {
      t.kind = TokKind::Punct;
      t.text = std::string(1, c.advance());
      return t;
    }
    throw DolError(ErrorKind::SyntaxError, "unexpected character " + detail::describe_char(ch), t.pos);
  }

  Token peek() const {
    Cursor copy = cur_;
    return scan(copy);
  }
  Token take() { return scan(cur_); }

  [[noreturn]] static void fail(const Token& at, const std::string& msg) {
    throw DolError(ErrorKind::SyntaxError, msg, at.pos);
  }

  Token expect_punct(std::string_view p) {
    Token t = take();
    if (!t.is(p)) fail(t, "expected '" + std::string(p) + "', found " + describe(t));
    return t;
  }

  void expect_word(std::string_view w) {
    Token t = take();
    if (!t.is_word(w)) fail(t, "expected '" + std::string(w) + "', found " + describe(t));
  }

  // --- declarations ----------------------------------------------------------

  void parse_prefixes() {
    take();  // %prefix(
    while (true) {
      Token t = take();
      if (t.is(")%")) break;
      if (t.kind != TokKind::Word || t.text.back() != ':' ||
          t.text.find(':') != t.text.size() - 1) {
        fail(t, "expected a prefix name such as 'ex:' or ')%', found " + describe(t));
      }
      std::string name = t.text.substr(0, t.text.size() - 1);
      Token iri = take();
      if (iri.kind != TokKind::IriRef) fail(iri, "expected <IRI> after prefix '" + t.text + "'");
      if (!Iri::is_absolute(iri.text)) fail(iri, "prefix IRI is not absolute: <" + iri.text + ">");
      try {
        doc_.prefixes.bind(std::move(name), Iri(iri.text));
      } catch (const DolError& e) {
        throw DolError(e.kind(), e.message(), t.pos);
      }
    }
  }

  Iri iri_ref(const Token& t) {
    try {
      if (t.kind == TokKind::IriRef) return expand_curie(doc_.prefixes, "<" + t.text + ">");
      if (t.kind == TokKind::Word && t.text.find(':') != std::string::npos) {
        return expand_curie(doc_.prefixes, t.text);
      }
    } catch (const DolError& e) {
      throw DolError(e.kind(), e.message(), t.pos);
    }
    fail(t, "expected a CURIE or <IRI>, found " + describe(t));
  }

  void parse_logic(bool first) {
    take();  // logic
    const Token lt = take();
    const Iri liri = iri_ref(lt);
    LogicId logic;
    try {
      logic = logic_from_iri(liri);
    } catch (const DolError& e) {
      throw DolError(e.kind(), e.message(), lt.pos);
    }
    Serialization ser = default_serialization(logic);
    if (peek().is_word("syntax")) {
      take();
      const Token st = take();
      try {
        ser = serialization_from_iri(iri_ref(st));
      } catch (const DolError& e) {
        throw DolError(e.kind(), e.message(), st.pos);
      }
      if (!logic_accepts(logic, ser)) {
        throw DolError(ErrorKind::NonconformantDocument,
                       "serialization " + std::string(to_string(ser)) + " is not registered for logic " +
                           std::string(to_string(logic)), st.pos);
      }
    }
    logic_ = logic;
    ser_ = ser;
    if (first) {
      doc_.default_logic = logic;
      doc_.default_serialization = ser;
    }
  }

  void parse_ontology() {
    const Token kw = take();
    const Token name_tok = take();
    OntologyDef def;
    def.pos = kw.pos;
    def.name = iri_ref(name_tok);
    if (doc_.find_ontology(def.name)) {
      throw DolError(ErrorKind::NonconformantDocument,
                     "ontology <" + def.name.str() + "> is defined twice", name_tok.pos);
    }
    expect_punct("=");
    def.body = expr();
    def.logic = logic_;
    def.serialization = ser_;
    doc_.items.emplace_back(std::move(def));
  }

  std::string link_name(bool& colon_consumed) {
    Token t = take();
    colon_consumed = false;
    std::string name = t.text;
    if (t.kind == TokKind::Word && name.size() > 1 && name.back() == ':' &&
        name.find(':') == name.size() - 1) {
      name.pop_back();
      colon_consumed = true;
    }
    if (t.kind != TokKind::Word || name.find(':') != std::string::npos || keywords().contains(name)) {
      fail(t, "expected a link name, found " + describe(t));
    }
    if (doc_.find_link(name)) {
      throw DolError(ErrorKind::NonconformantDocument, "link '" + name + "' is defined twice", t.pos);
    }
    return name;
  }

  void parse_link() {
    const Token kw = take();
    LinkDef link;
    link.pos = kw.pos;
    bool colon = false;
    link.name = link_name(colon);
    if (!colon) {
      Token t = take();
      if (!(t.kind == TokKind::Word && t.text == ":")) fail(t, "expected ':', found " + describe(t));
    }
    link.source = expr();
    if (kw.text == "interpretation" || kw.text == "extension") {
      expect_word("to");
      link.target = expr();
      if (kw.text == "interpretation") {
        link.kind = LinkKind::Interpretation;
        while (true) {
          const Token m = peek();
          if (m.is_word("conservative")) {
            link.conservative = true;
          } else if (m.is_word("faithful")) {
            link.faithful = true;
          } else {
            break;
          }
          take();
        }
      } else {
        const Token flavor = take();
        if (flavor.is_word("conservative")) {
          link.kind = LinkKind::ConservativeExtension;
        } else if (flavor.is_word("definitional")) {
          link.kind = LinkKind::DefinitionalExtension;
        } else if (flavor.is_word("nonconservative")) {
          link.kind = LinkKind::NonconservativeExtension;
        } else {
          fail(flavor, "expected 'conservative', 'definitional' or 'nonconservative', found " + describe(flavor));
        }
      }
      if (peek().is("=")) {
        take();
        link.symbol_map = symbol_map();
      }
    } else {
      expect_punct("<->");
      link.target = expr();
      if (kw.text == "inconsistency") {
        link.kind = LinkKind::ModuleInconsistency;
      } else {
        link.kind = LinkKind::DefinableEquivalence;
        if (peek().is_word("via")) {
          take();
          link.forward_bridge = expr();
          expect_punct(",");
          link.backward_bridge = expr();
        }
        if (peek().is("=")) {
          take();
          link.symbol_map = symbol_map();
          if (peek().is(";")) {
            take();
            link.reverse_map = symbol_map();
          }
        }
      }
    }
    doc_.items.emplace_back(std::move(link));
  }

  Name symbol(const Token& t) {
    if (t.kind == TokKind::IriRef) return iri_ref(t).str();
    if (t.kind != TokKind::Word || keywords().contains(t.text)) {
      fail(t, "expected a symbol, found " + describe(t));
    }
    if (t.text.find(':') != std::string::npos && t.text.find("://") == std::string::npos) {
      return iri_ref(t).str();
    }
    return t.text;
  }

  SymbolMap symbol_map() {
    SymbolMap out;
    while (true) {
      Name from = symbol(take());
      expect_punct("|->");
      Name to = symbol(take());
      out.emplace_back(std::move(from), std::move(to));
      if (!peek().is(",")) break;
      take();
    }
    return out;
  }

  // --- expressions -----------------------------------------------------------

  OntologyExpr expr() {
    if (++depth_ > detail::kMaxNesting) fail(peek(), "nesting too deep");
    OntologyExpr left = union_expr();
    while (peek().is_word("then")) {
      take();
      left = OntologyExpr::extension(std::move(left), union_expr());
    }
    --depth_;
    return left;
  }

  OntologyExpr union_expr() {
    OntologyExpr left = primary();
    while (peek().is_word("and")) {
      take();
      left = OntologyExpr::union_of(std::move(left), primary());
    }
    return left;
  }

  OntologyExpr primary() {
    const Token t = peek();
    if (t.is("{|")) {
      take();
      return raw_block(t);
    }
    if (t.is("{")) {
      take();
      OntologyExpr inner = expr();
      expect_punct("}");
      return inner;
    }
    if (t.is("(")) {
      if (ser_ != Serialization::Clif) {
        fail(t, "bare s-expressions require the CLIF serialization; use {| ... |} for " +
                    std::string(to_string(ser_)) + " text");
      }
      cur_.skip_space_and_comments();
      detail::ClifContext ctx{logic_, SignatureMode::Inferred, &doc_.prefixes, nullptr};
      OntologyExpr e = detail::read_clif_forms(cur_, ctx, false).to_expr();
      e.pos = t.pos;
      return e;
    }
    if (t.kind == TokKind::IriRef ||
        (t.kind == TokKind::Word && !keywords().contains(t.text) && t.text.find(':') != std::string::npos)) {
      take();
      OntologyExpr e = OntologyExpr::ref(iri_ref(t));
      e.pos = t.pos;
      return e;
    }
    fail(t, "expected an ontology expression, found " + describe(t));
  }

  OntologyExpr raw_block(const Token& open) {
    const SourcePos start = cur_.position();
    const std::size_t begin = cur_.offset();
    while (!cur_.eof() && !cur_.starts_with("|}")) cur_.advance();
    if (cur_.eof()) throw DolError(ErrorKind::SyntaxError, "unterminated block, expected '|}'", open.pos);
    const std::string_view body = text_.substr(begin, cur_.offset() - begin);
    cur_.advance(2);
    OntologyExpr e;
    switch (ser_) {
      case Serialization::PropText: e = OntologyExpr::basic(detail::parse_prop_at(body, start)); break;
      case Serialization::ElText: e = OntologyExpr::basic(detail::parse_el_at(body, start)); break;
      case Serialization::Clif: {
        Cursor sub(body, start);
        detail::ClifContext ctx{logic_, SignatureMode::Inferred, &doc_.prefixes, nullptr};
        e = detail::read_clif_forms(sub, ctx, true).to_expr();
        break;
      }
    }
    e.pos = open.pos;
    return e;
  }

  std::string_view text_;
  Cursor cur_;
  DolDocument doc_;
  LogicId logic_ = LogicId::CLSub;
  Serialization ser_ = Serialization::Clif;
  int depth_ = 0;
};

}  // namespace

DolDocument parse_dol(std::string_view text) { return DolParser(text).run(); }

}  // namespace dol
