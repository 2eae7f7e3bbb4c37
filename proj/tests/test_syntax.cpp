#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace dol;
using testutil::kInt;
using testutil::kOrd;

namespace {

ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DolError& e) {
    return e.kind();
  }
  FAIL("expected a DolError");
  return ErrorKind::IoError;
}

SourcePos error_pos(std::string_view text) {
  try {
    parse_dol(text);
  } catch (const DolError& e) {
    REQUIRE(e.position().has_value());
    return *e.position();
  }
  FAIL("expected a DolError");
  return {};
}

}  // namespace

TEST_CASE("fixture documents parse and round-trip") {
  for (const char* f : {"owltime_le.dol", "relationships.dol", "prop_modules.dol", "el_fol.dol"}) {
    CAPTURE(f);
    const DolDocument doc = testutil::load_doc(f);
    const std::string printed = print_dol(doc);
    const DolDocument again = parse_dol(printed);
    CHECK(again == doc);
    CHECK(print_dol(again) == printed);
  }
}

TEST_CASE("owltime_le document structure") {
  const DolDocument doc = testutil::load_doc("owltime_le.dol");
  CHECK(doc.ontologies().size() == 3);
  REQUIRE(doc.links().size() == 1);
  const LinkDef& i = *doc.links().front();
  CHECK(i.name == "i");
  CHECK(i.kind == LinkKind::Interpretation);
  CHECK(i.conservative);
  CHECK_FALSE(i.faithful);
  CHECK(std::holds_alternative<UnionExpr>(i.target.node));

  const OntologyDef* lin = doc.find_ontology(Iri(kOrd + "linear_ordering"));
  REQUIRE(lin != nullptr);
  const auto& basic = std::get<BasicOntology>(lin->body.node);
  CHECK(basic.imports == std::vector<Iri>{Iri(kOrd + "partial_ordering")});
  CHECK(basic.theory.axioms.size() == 1);

  const OntologyDef* le = doc.find_ontology(Iri(kInt + "owltime_le"));
  REQUIRE(le != nullptr);
  CHECK(std::holds_alternative<ExtensionExpr>(le->body.node));
}

TEST_CASE("logic and serialization declarations switch defaults") {
  const DolDocument doc = testutil::load_doc("el_fol.dol");
  const auto onts = doc.ontologies();
  REQUIRE(onts.size() == 2);
  CHECK(onts[0]->logic == LogicId::EL);
  CHECK(onts[0]->serialization == Serialization::ElText);
  CHECK(onts[1]->logic == LogicId::FOLEQ);
  CHECK(onts[1]->serialization == Serialization::Clif);
}

TEST_CASE("registry IRIs map to logics") {
  for (LogicId id : {LogicId::Prop, LogicId::EL, LogicId::FOLEQ, LogicId::CLSub}) {
    CHECK(logic_from_iri(logic_iri(id)) == id);
    CHECK(logic_accepts(id, default_serialization(id)));
  }
  CHECK(error_kind([] { logic_from_iri(Iri("http://purl.net/dol/logics/Modal")); }) == ErrorKind::UnknownLogic);
}

TEST_CASE("empty and malformed documents report positions") {
  CHECK(error_kind([] { parse_dol(""); }) == ErrorKind::SyntaxError);
  CHECK(error_pos("") == SourcePos{1, 1});
  const std::string head = "%prefix( : <http://x.org/> )%\nlogic <http://purl.net/dol/logics/CommonLogic>\n";
  CHECK(error_kind([] { parse_dol("%prefix( : <http://x.org/> )%\nontology :a = (p)\n"); }) ==
        ErrorKind::NonconformantDocument);
  CHECK(error_pos(head + "\nontology :a = (p\n") == SourcePos{4, 15});
  CHECK(error_kind([&] { parse_dol(head + "ontology q:a = (p)\n"); }) == ErrorKind::UnknownPrefix);
  CHECK(error_pos(head + "ontology q:a = (p)\n") == SourcePos{3, 10});
}

TEST_CASE("CLIF arity clashes are rejected") {
  CHECK(error_kind([] { parse_clif("(p a) (p a b)"); }) == ErrorKind::ArityClash);
}

TEST_CASE("CLIF declared mode requires declared symbols") {
  Signature declared(LogicId::CLSub);
  declared.add_predicate("leq", 2);
  CHECK_NOTHROW(parse_clif("(forall (x) (leq x x))", SignatureMode::Declared, LogicId::CLSub, nullptr, &declared));
  CHECK(error_kind([&] {
          parse_clif("(forall (x) (lt x x))", SignatureMode::Declared, LogicId::CLSub, nullptr, &declared);
        }) == ErrorKind::UndeclaredSymbol);
}

TEST_CASE("CLIF imports are lifted out of the text") {
  const ClifText t = parse_clif("(cl-imports <http://x.org/a>) (forall (x) (P x))");
  CHECK(t.imports == std::vector<Iri>{Iri("http://x.org/a")});
  CHECK(t.theory.axioms.size() == 1);
}

TEST_CASE("fixture CLIF files parse") {
  const Theory lin = parse_clif(testutil::slurp(testutil::fixture("colore/orderings/linear_ordering.clif"))).theory;
  CHECK(lin.axioms.size() == 4);
  CHECK(lin.signature.arity("leq") == 2);
  CHECK(lin.logic() == LogicId::CLSub);
}

TEST_CASE("propositional text round-trips through the printer") {
  std::mt19937 rng(5);
  const std::vector<Name> atoms{"p", "q", "r"};
  for (int i = 0; i < 100; ++i) {
    const Formula f = oracle::random_prop(rng, atoms, 4);
    Theory t = theory_from_axioms(LogicId::Prop, {Sentence(LogicId::Prop, f)});
    for (const auto& a : atoms) {
      if (!t.signature.has_predicate(a)) t.signature.add_predicate(a, 0);
    }
    const std::string text = print_theory(t);
    CAPTURE(text);
    const Theory back = parse_prop(text);
    REQUIRE(back.signature == t.signature);
    REQUIRE(back.axioms.size() == 1);
    // Printing may normalise associativity; semantics must be untouched.
    for (unsigned mask = 0; mask < 8; ++mask) {
      oracle::Structure s;
      for (unsigned k = 0; k < 3; ++k) {
        if (mask >> k & 1) s.rels[atoms[k]].insert(std::vector<int>{});
      }
      REQUIRE(oracle::eval(s, back.axioms[0].formula()) == oracle::eval(s, f));
    }
    CHECK(print_theory(back) == text);
  }
}

TEST_CASE("EL text round-trips through the printer") {
  std::mt19937 rng(9);
  const std::vector<Name> concepts{"A", "B"};
  for (int i = 0; i < 100; ++i) {
    const Subsumption sub{oracle::random_concept(rng, concepts, "r", 3), oracle::random_concept(rng, concepts, "r", 3)};
    Signature extra(LogicId::EL);
    extra.add_predicate("A", 1);
    extra.add_predicate("B", 1);
    extra.add_predicate("r", 2);
    const Theory t = theory_from_axioms(LogicId::EL, {Sentence(sub)}, &extra);
    const std::string text = print_theory(t);
    CAPTURE(text);
    const Theory back = parse_el(text);
    REQUIRE(back.signature == t.signature);
    CHECK(print_theory(back) == text);
  }
}

TEST_CASE("EL rejects constructs outside the fragment") {
  CHECK(error_kind([] { parse_el("A SubClassOf not B\n"); }) == ErrorKind::UnsupportedFeature);
  CHECK(error_kind([] { parse_el("A SubClassOf\n"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("prefix map compacts to the longest namespace") {
  PrefixMap pm;
  pm.bind("a", Iri("http://x.org/"));
  pm.bind("b", Iri("http://x.org/sub/"));
  CHECK(pm.compact("http://x.org/sub/t") == std::optional<std::string>("b:t"));
  CHECK(pm.compact("http://y.org/t") == std::nullopt);
  CHECK(expand_curie(pm, "a:z").str() == "http://x.org/z");
  CHECK(error_kind([&] { pm.bind("a", Iri("http://z.org/")); }) == ErrorKind::SyntaxError);
}
