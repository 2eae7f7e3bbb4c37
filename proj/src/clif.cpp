#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "clif_reader.hpp"

namespace dol {
namespace detail {

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;
};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '%' ||
         c == '\0';
}

SExpr read_sexpr(Cursor& cur, int depth) {
  cur.skip_space_and_comments();
  SExpr out;
  out.pos = cur.position();
  if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unexpected end of input, expected a CLIF form");
  const char c = cur.peek();
  if (c == ')') cur.fail(ErrorKind::SyntaxError, "unbalanced parentheses: unexpected ')'");
  if (c == '\'' || c == '"') {
    cur.fail(ErrorKind::UnsupportedFeature, "quoted strings are not supported in the CLIF subset");
  }
  if (c == '(') {
    if (depth >= kMaxNesting) cur.fail(ErrorKind::SyntaxError, "nesting too deep");
    cur.advance();
    out.is_list = true;
    while (true) {
      cur.skip_space_and_comments();
      if (cur.eof()) {
        cur.fail_at(ErrorKind::SyntaxError, "unbalanced parentheses: expected ')'", out.pos);
      }
      if (cur.peek() == ')') {
        cur.advance();
        break;
      }
      out.items.push_back(read_sexpr(cur, depth + 1));
    }
    return out;
  }
  const std::size_t start = cur.offset();
  while (!cur.eof() && !is_delimiter(cur.peek())) {
    if (cur.peek() == '\'' || cur.peek() == '"') {
      cur.fail(ErrorKind::UnsupportedFeature, "quoted strings are not supported in the CLIF subset");
    }
    cur.advance();
  }
  out.atom = std::string(cur.text().substr(start, cur.offset() - start));
  return out;
}

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {"and", "or",     "not",        "if",
                                                       "iff", "forall", "exists",     "=",
                                                       "cl-imports", "cl-text", "cl-module",
                                                       "cl-comment", "cl-excludes", "cl-roleset"};
  return k;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, SourcePos pos) {
  throw DolError(kind, msg, pos);
}

class Converter {
 public:
  explicit Converter(const ClifContext& ctx) : ctx_(ctx), sig_(ctx.logic) {
    if (ctx.mode == SignatureMode::Declared) {
      if (!ctx.declared) {
        throw DolError(ErrorKind::SyntaxError, "declared signature mode requires a signature");
      }
      sig_ = ctx.declared->with_logic(ctx.logic);
    }
  }

  void top_level(const SExpr& e, ClifText& out) {
    if (!e.is_list) fail(ErrorKind::SyntaxError, "expected '(' to start a CLIF sentence", e.pos);
    if (!e.items.empty() && !e.items[0].is_list && e.items[0].atom == "cl-imports") {
      if (e.items.size() != 2 || e.items[1].is_list) {
        fail(ErrorKind::SyntaxError, "cl-imports expects exactly one IRI", e.pos);
      }
      out.imports.push_back(resolve_iri(e.items[1]));
      return;
    }
    std::vector<std::string> scope;
    out.theory.axioms.emplace_back(ctx_.logic, sentence(e, scope));
  }

  Signature take_signature() { return std::move(sig_); }

 private:
  Iri resolve_iri(const SExpr& e) {
    const Name n = resolve_name(e);
    if (!Iri::is_absolute(n)) fail(ErrorKind::SyntaxError, "expected an IRI, got '" + e.atom + "'", e.pos);
    return Iri(n);
  }

  Name resolve_name(const SExpr& e) {
    const std::string& tok = e.atom;
    if (tok.starts_with("...")) {
      fail(ErrorKind::UnsupportedFeature, "sequence markers are not supported ('" + tok + "')", e.pos);
    }
    if (tok.size() >= 2 && tok.front() == '<' && tok.back() == '>') {
      std::string iri = tok.substr(1, tok.size() - 2);
      if (!Iri::is_absolute(iri)) fail(ErrorKind::SyntaxError, "IRI is not absolute: " + tok, e.pos);
      return iri;
    }
    const auto colon = tok.find(':');
    if (colon == std::string::npos || tok.find("://") != std::string::npos) return tok;
    if (!ctx_.prefixes) {
      fail(ErrorKind::UnknownPrefix, "no prefix bindings available for '" + tok + "'", e.pos);
    }
    try {
      return expand_curie(*ctx_.prefixes, tok).str();
    } catch (const DolError& err) {
      throw DolError(err.kind(), err.message(), e.pos);
    }
  }

  void note_predicate(const Name& name, int arity, SourcePos pos) {
    if (ctx_.mode == SignatureMode::Declared) {
      auto declared = sig_.arity(name);
      if (!declared) {
        fail(ErrorKind::UndeclaredSymbol, "'" + name + "' is not declared", pos);
      }
      if (*declared != arity) {
        fail(ErrorKind::ArityClash, "'" + name + "' declared with arity " +
                                        std::to_string(*declared) + " but applied to " +
                                        std::to_string(arity) + " arguments", pos);
      }
      return;
    }
    try {
      sig_.add_predicate(name, arity);
    } catch (const DolError& err) {
      throw DolError(err.kind(), err.message(), pos);
    }
  }

  void note_constant(const Name& name, SourcePos pos) {
    if (ctx_.mode == SignatureMode::Declared) {
      if (!sig_.has_constant(name)) fail(ErrorKind::UndeclaredSymbol, "constant '" + name + "' is not declared", pos);
      return;
    }
    try {
      sig_.add_constant(name);
    } catch (const DolError& err) {
      throw DolError(err.kind(), err.message(), pos);
    }
  }

  Term term(const SExpr& e, const std::vector<std::string>& scope) {
    if (e.is_list) {
      fail(ErrorKind::UnsupportedFeature, "function application is not supported (constants only)", e.pos);
    }
    if (keywords().contains(e.atom)) fail(ErrorKind::SyntaxError, "unexpected keyword '" + e.atom + "'", e.pos);
    if (std::find(scope.begin(), scope.end(), e.atom) != scope.end()) return Term::variable(e.atom);
    Name n = resolve_name(e);
    note_constant(n, e.pos);
    return Term::constant(std::move(n));
  }

  void expect_arity(const SExpr& e, std::size_t n, const std::string& what) {
    if (e.items.size() != n + 1) {
      fail(ErrorKind::SyntaxError, what + " expects " + std::to_string(n) + " argument" +
                                       (n == 1 ? "" : "s"), e.pos);
    }
  }

  Formula sentence(const SExpr& e, std::vector<std::string>& scope) {
    if (!e.is_list) fail(ErrorKind::SyntaxError, "expected a sentence, got '" + e.atom + "'", e.pos);
    if (e.items.empty()) fail(ErrorKind::SyntaxError, "empty application '()'", e.pos);
    const SExpr& head = e.items[0];
    if (head.is_list) {
      fail(ErrorKind::UnsupportedFeature, "non-atomic operator (second-order application)", head.pos);
    }
    const std::string& op = head.atom;
    if (op == "not") {
      expect_arity(e, 1, "not");
      return Formula::negation(sentence(e.items[1], scope));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(sentence(e.items[i], scope));
      return op == "and" ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    if (op == "if" || op == "iff") {
      expect_arity(e, 2, op);
      auto lhs = sentence(e.items[1], scope);
      auto rhs = sentence(e.items[2], scope);
      return op == "if" ? Formula::implication(std::move(lhs), std::move(rhs))
                        : Formula::biconditional(std::move(lhs), std::move(rhs));
    }
    if (op == "forall" || op == "exists") {
      expect_arity(e, 2, op);
      const SExpr& vars = e.items[1];
      if (!vars.is_list) fail(ErrorKind::SyntaxError, op + " expects a variable list", vars.pos);
      if (vars.items.empty()) fail(ErrorKind::SyntaxError, "empty variable list", vars.pos);
      std::vector<Name> names;
      for (const auto& v : vars.items) {
        if (v.is_list) fail(ErrorKind::UnsupportedFeature, "restricted quantification is not supported", v.pos);
        if (v.atom.starts_with("...")) {
          fail(ErrorKind::UnsupportedFeature, "sequence markers are not supported ('" + v.atom + "')", v.pos);
        }
        if (keywords().contains(v.atom)) fail(ErrorKind::SyntaxError, "keyword used as variable", v.pos);
        if (std::find(names.begin(), names.end(), v.atom) != names.end()) {
          fail(ErrorKind::SyntaxError, "variable '" + v.atom + "' bound twice", v.pos);
        }
        names.push_back(v.atom);
      }
      const std::size_t mark = scope.size();
      scope.insert(scope.end(), names.begin(), names.end());
      auto body = sentence(e.items[2], scope);
      scope.resize(mark);
      return op == "forall" ? Formula::forall(std::move(names), std::move(body))
                            : Formula::exists(std::move(names), std::move(body));
    }
    if (op == "=") {
      expect_arity(e, 2, "=");
      return Formula::equal(term(e.items[1], scope), term(e.items[2], scope));
    }
    if (op.starts_with("cl-")) {
      if (op == "cl-imports") fail(ErrorKind::SyntaxError, "cl-imports is only allowed at top level", e.pos);
      fail(ErrorKind::UnsupportedFeature, "'" + op + "' is not supported in the CLIF subset", head.pos);
    }
    if (std::find(scope.begin(), scope.end(), op) != scope.end()) {
      fail(ErrorKind::UnsupportedFeature, "variable '" + op + "' used as a predicate (second-order)", head.pos);
    }
    Name pred = resolve_name(head);
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i], scope));
    note_predicate(pred, static_cast<int>(args.size()), head.pos);
    return Formula::atom(std::move(pred), std::move(args));
  }

  const ClifContext& ctx_;
  Signature sig_;
};

bool needs_brackets(const Name& name) {
  return std::any_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '%' ||
           c == '\'' || c == '"';
  });
}

void print_term(const Term& t, const PrefixMap* prefixes, std::string& out) {
  out += t.is_variable() ? t.name : clif_name(t.name, prefixes);
}

void print_formula(const Formula& f, const PrefixMap* prefixes, std::string& out) {
  auto list = [&](std::string_view op) {
    out += '(';
    out += op;
    for (const auto& sub : f.operands()) {
      out += ' ';
      print_formula(sub, prefixes, out);
    }
    out += ')';
  };
  switch (f.op()) {
    case Connective::True: out += "(and)"; break;
    case Connective::False: out += "(or)"; break;
    case Connective::Atom:
      out += '(';
      out += clif_name(f.predicate(), prefixes);
      for (const auto& t : f.args()) {
        out += ' ';
        print_term(t, prefixes, out);
      }
      out += ')';
      break;
    case Connective::Equal:
      out += "(= ";
      print_term(f.args()[0], prefixes, out);
      out += ' ';
      print_term(f.args()[1], prefixes, out);
      out += ')';
      break;
    case Connective::Not: list("not"); break;
    case Connective::And: list("and"); break;
    case Connective::Or: list("or"); break;
    case Connective::Implies: list("if"); break;
    case Connective::Iff: list("iff"); break;
    case Connective::Forall:
    case Connective::Exists:
      out += f.op() == Connective::Forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < f.variables().size(); ++i) {
        if (i) out += ' ';
        out += f.variables()[i];
      }
      out += ") ";
      print_formula(f.operands()[0], prefixes, out);
      out += ')';
      break;
  }
}

}  // namespace

std::string clif_name(const Name& name, const PrefixMap* prefixes) {
  if (Iri::is_absolute(name) && name.find("://") != std::string::npos) {
    if (prefixes) {
      if (auto curie = prefixes->compact(name)) return *curie;
    }
    if (needs_brackets(name)) return "<" + name + ">";
    return name;
  }
  if (Iri::is_absolute(name)) {
    if (prefixes) {
      if (auto curie = prefixes->compact(name)) return *curie;
    }
    return "<" + name + ">";
  }
  return name;
}

std::string print_clif_formula(const Formula& f, const PrefixMap* prefixes) {
  std::string out;
  print_formula(f, prefixes, out);
  return out;
}

ClifText read_clif_forms(Cursor& cur, const ClifContext& ctx, bool until_eof) {
  if (!is_first_order(ctx.logic)) {
    throw DolError(ErrorKind::LogicMismatch, "CLIF text denotes first-order sentences", cur.position());
  }
  Converter conv(ctx);
  ClifText out;
  while (true) {
    cur.skip_space_and_comments();
    if (cur.eof()) break;
    if (cur.peek() != '(') {
      if (!until_eof) break;
      if (cur.peek() == ')') cur.fail(ErrorKind::SyntaxError, "unbalanced parentheses: unexpected ')'");
      cur.fail(ErrorKind::SyntaxError, "expected '(' to start a CLIF sentence");
    }
    const SExpr form = read_sexpr(cur, 0);
    conv.top_level(form, out);
  }
  out.theory.signature = conv.take_signature();
  return out;
}

}  // namespace detail

ClifText parse_clif(std::string_view text, SignatureMode mode, LogicId logic,
                    const PrefixMap* prefixes, const Signature* declared) {
  detail::validate_utf8(text);
  detail::Cursor cur(text);
  detail::ClifContext ctx{logic, mode, prefixes, declared};
  return detail::read_clif_forms(cur, ctx, true);
}

}  // namespace dol
