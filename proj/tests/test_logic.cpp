#include <doctest.h>

#include <random>

#include "dol/semantics.hpp"
#include "oracles.hpp"

using namespace dol;

TEST_CASE("signature rejects conflicting arities") {
  Signature sig(LogicId::FOLEQ);
  sig.add_predicate("R", 2);
  sig.add_predicate("R", 2);
  CHECK_THROWS_AS(sig.add_predicate("R", 1), DolError);
  sig.add_constant("c");
  try {
    sig.add_predicate("c", 1);
    FAIL("expected ArityClash");
  } catch (const DolError& e) {
    CHECK(e.kind() == ErrorKind::ArityClash);
  }
}

TEST_CASE("EL signatures only admit concepts and roles") {
  Signature sig(LogicId::EL);
  sig.add_predicate("A", 1);
  sig.add_predicate("r", 2);
  try {
    sig.add_predicate("t", 3);
    FAIL("expected UnsupportedFeature");
  } catch (const DolError& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedFeature);
  }
}

TEST_CASE("relation cells follow lexicographic tuple order") {
  Relation r(2, 3);
  CHECK(r.cell_count() == 9);
  for (std::size_t i = 0; i < r.cell_count(); ++i) {
    const auto t = r.tuple_at(i);
    CHECK(t == std::vector<int>{static_cast<int>(i / 3), static_cast<int>(i % 3)});
    CHECK(r.index_of(t) == i);
  }
  const std::vector<int> t{2, 1};
  r.insert(t);
  CHECK(r.contains(t));
  CHECK(r.tuples() == std::vector<std::vector<int>>{{2, 1}});
  r.erase(t);
  CHECK(r.tuples().empty());
}

TEST_CASE("symbols_of collects the vocabulary of a sentence") {
  const Formula f = Formula::forall({"x"}, Formula::implication(Formula::atom("P", {Term::variable("x")}),
                                                                Formula::atom("R", {Term::variable("x"), Term::constant("c")})));
  const Signature sig = symbols_of(Sentence(LogicId::FOLEQ, f));
  CHECK(sig.arity("P") == 1);
  CHECK(sig.arity("R") == 2);
  CHECK(sig.has_constant("c"));
  CHECK_FALSE(sig.has_predicate("x"));
}

TEST_CASE("theory validation catches undeclared symbols") {
  Theory t;
  t.signature = Signature(LogicId::FOLEQ);
  t.axioms.emplace_back(LogicId::FOLEQ, Formula::atom("p"));
  try {
    t.validate();
    FAIL("expected UndeclaredSymbol");
  } catch (const DolError& e) {
    CHECK(e.kind() == ErrorKind::UndeclaredSymbol);
  }
  t.signature.add_predicate("p", 0);
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("signature morphisms are checked for totality and arity") {
  Signature src(LogicId::FOLEQ);
  src.add_predicate("leq", 2);
  Signature tgt(LogicId::FOLEQ);
  tgt.add_predicate("before", 2);
  tgt.add_predicate("T", 1);

  CHECK_NOTHROW(SignatureMorphism(src, tgt, {{"leq", "before"}}, {}));
  auto expect_ill_formed = [&](std::map<Name, Name> pm) {
    try {
      SignatureMorphism(src, tgt, std::move(pm), {});
      FAIL("expected MorphismIllFormed");
    } catch (const DolError& e) {
      CHECK(e.kind() == ErrorKind::MorphismIllFormed);
    }
  };
  expect_ill_formed({});
  expect_ill_formed({{"leq", "T"}});
  expect_ill_formed({{"leq", "missing"}});
}

TEST_CASE("morphism composition applies both maps") {
  Signature a(LogicId::FOLEQ), b(LogicId::FOLEQ), c(LogicId::FOLEQ);
  a.add_predicate("p", 1);
  b.add_predicate("q", 1);
  c.add_predicate("r", 1);
  const SignatureMorphism ab(a, b, {{"p", "q"}}, {});
  const SignatureMorphism bc(b, c, {{"q", "r"}}, {});
  const auto ac = ab.compose(bc);
  CHECK(ac.predicate_map().at("p") == "r");
  CHECK(ac.source() == a);
  CHECK(ac.target() == c);
}

TEST_CASE("empty_over interprets every symbol") {
  Signature sig(LogicId::FOLEQ);
  sig.add_predicate("R", 2);
  sig.add_constant("c");
  const auto m = FiniteModel::empty_over(sig, 2);
  CHECK_NOTHROW(m.check_interprets(sig));
  CHECK(m.relations.at("R").cell_count() == 4);
  CHECK(m.constants.at("c") == 0);
  sig.add_predicate("S", 1);
  CHECK_THROWS_AS(m.check_interprets(sig), DolError);
}

namespace {

std::vector<FiniteModel> all_models(int n) {
  Signature sig(LogicId::FOLEQ);
  sig.add_predicate("P", 1);
  sig.add_predicate("Q", 1);
  sig.add_predicate("R", 2);
  sig.add_constant("c");
  std::vector<FiniteModel> out;
  oracle::for_each_structure(oracle::predicate_list(sig), {"c"}, n, [&](const oracle::Structure& s) {
    FiniteModel m = FiniteModel::empty_over(sig, n);
    for (const auto& [name, tuples] : s.rels) {
      for (const auto& t : tuples) m.relations.at(name).insert(t);
    }
    m.constants = s.consts;
    out.push_back(std::move(m));
  });
  return out;
}

}  // namespace

TEST_CASE("satisfaction agrees with the reference evaluator") {
  std::mt19937 rng(7);
  std::vector<Formula> formulas;
  for (int i = 0; i < 40; ++i) formulas.push_back(oracle::random_fol(rng, 4));
  for (int n = 1; n <= 2; ++n) {
    for (const auto& m : all_models(n)) {
      const auto s = oracle::from_model(m);
      for (const auto& f : formulas) {
        REQUIRE(satisfies(m, Sentence(LogicId::FOLEQ, f)) == oracle::eval(s, f));
      }
    }
  }
}

TEST_CASE("renaming preserves satisfaction through the reduct") {
  Signature src(LogicId::FOLEQ);
  src.add_predicate("P", 1);
  src.add_predicate("Q", 1);
  src.add_predicate("R", 2);
  src.add_constant("c");
  Signature tgt(LogicId::FOLEQ);
  tgt.add_predicate("A", 1);
  tgt.add_predicate("B", 1);
  tgt.add_predicate("S", 2);
  tgt.add_predicate("extra", 1);
  tgt.add_constant("d");
  const SignatureMorphism mor(src, tgt, {{"P", "B"}, {"Q", "A"}, {"R", "S"}}, {{"c", "d"}});

  std::mt19937 rng(11);
  std::vector<Sentence> sentences;
  for (int i = 0; i < 20; ++i) sentences.emplace_back(LogicId::FOLEQ, oracle::random_fol(rng, 3));

  oracle::for_each_structure(oracle::predicate_list(tgt), {"d"}, 2, [&](const oracle::Structure& s) {
    FiniteModel m = FiniteModel::empty_over(tgt, 2);
    for (const auto& [name, tuples] : s.rels) {
      for (const auto& t : tuples) m.relations.at(name).insert(t);
    }
    m.constants = s.consts;
    const FiniteModel back = reduct(mor, m);
    for (const auto& sen : sentences) {
      REQUIRE(satisfies(m, translate_sentence(mor, sen)) == satisfies(back, sen));
    }
  });
}

TEST_CASE("concept reading matches set-theoretic extensions") {
  std::mt19937 rng(3);
  const std::vector<Name> concepts{"A", "B"};
  Signature sig(LogicId::FOLEQ);
  sig.add_predicate("A", 1);
  sig.add_predicate("B", 1);
  sig.add_predicate("r", 2);
  for (int i = 0; i < 30; ++i) {
    const Concept c = oracle::random_concept(rng, concepts, "r", 3);
    const Formula tau = concept_reading(c, "x");
    oracle::for_each_structure(oracle::predicate_list(sig), {}, 2, [&](const oracle::Structure& s) {
      FiniteModel m = FiniteModel::empty_over(sig, 2);
      for (const auto& [name, tuples] : s.rels) {
        for (const auto& t : tuples) m.relations.at(name).insert(t);
      }
      const auto ext = oracle::extension(s, c);
      for (int x = 0; x < 2; ++x) REQUIRE(evaluate(m, tau, {{"x", x}}) == (ext.count(x) > 0));
    });
  }
}

TEST_CASE("signature union merges vocabularies of one logic") {
  Signature a(LogicId::FOLEQ), b(LogicId::FOLEQ), c(LogicId::Prop);
  a.add_predicate("p", 1);
  b.add_predicate("q", 2);
  const auto u = signature_union(a, b);
  CHECK(u.includes(a));
  CHECK(u.includes(b));
  CHECK_THROWS_AS(signature_union(a, c), DolError);
  Signature clash(LogicId::FOLEQ);
  clash.add_predicate("p", 2);
  CHECK_THROWS_AS(signature_union(a, clash), DolError);
}
