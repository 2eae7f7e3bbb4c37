#include <doctest.h>

#include <random>

#include "dol/semantics.hpp"
#include "dol/translation.hpp"
#include "oracles.hpp"

using namespace dol;

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

FiniteModel to_model(const oracle::Structure& s, const Signature& sig) {
  FiniteModel m = FiniteModel::empty_over(sig, s.n);
  for (const auto& [name, tuples] : s.rels) {
    for (const auto& t : tuples) m.relations.at(name).insert(t);
  }
  m.constants = s.consts;
  return m;
}

}  // namespace

TEST_CASE("core graph paths") {
  const auto& g = TranslationGraph::core();
  CHECK(g.find_path(LogicId::Prop, LogicId::Prop).empty());
  CHECK(g.find_path(LogicId::Prop, LogicId::FOLEQ).steps.size() == 1);
  const auto p = g.find_path(LogicId::EL, LogicId::CLSub);
  REQUIRE(p.steps.size() == 2);
  CHECK(p.steps[0].target == LogicId::FOLEQ);
  CHECK(p.to() == LogicId::CLSub);
  CHECK(error_kind([&] { g.find_path(LogicId::FOLEQ, LogicId::Prop); }) == ErrorKind::NoPath);
  CHECK(error_kind([&] { g.find_path(LogicId::Prop, LogicId::EL); }) == ErrorKind::NoPath);
}

TEST_CASE("least common target") {
  const auto& g = TranslationGraph::core();
  CHECK(g.least_common_target({LogicId::Prop}) == LogicId::Prop);
  CHECK(g.least_common_target({LogicId::Prop, LogicId::EL}) == LogicId::FOLEQ);
  CHECK(g.least_common_target({LogicId::EL, LogicId::CLSub}) == LogicId::CLSub);
  CHECK(g.least_common_target({LogicId::FOLEQ, LogicId::FOLEQ}) == LogicId::FOLEQ);

  TranslationGraph lonely;
  lonely.register_logic(LogicId::Prop);
  lonely.register_logic(LogicId::EL);
  CHECK(error_kind([&] { lonely.least_common_target({LogicId::Prop, LogicId::EL}); }) == ErrorKind::NoCommonTarget);
}

TEST_CASE("ties between equal-length paths go to the smaller token") {
  // Two routes of length 2 from Prop to CLSub: via EL and via FOLEQ.
  TranslationGraph g;
  for (LogicId id : {LogicId::Prop, LogicId::EL, LogicId::FOLEQ, LogicId::CLSub}) g.register_logic(id);
  const auto& core = TranslationGraph::core().translations();
  for (const auto& tr : core) g.register_translation(tr);
  LogicTranslation prop_el = core.front();
  prop_el.source = LogicId::Prop;
  prop_el.target = LogicId::EL;
  prop_el.name = "Prop->EL";
  g.register_translation(prop_el);
  LogicTranslation el_cl = core.front();
  el_cl.source = LogicId::EL;
  el_cl.target = LogicId::CLSub;
  el_cl.name = "EL->CLSub";
  g.register_translation(el_cl);
  const auto p = g.find_path(LogicId::Prop, LogicId::CLSub);
  REQUIRE(p.steps.size() == 2);
  CHECK(p.steps[0].target == LogicId::EL);
}

TEST_CASE("translation checks the source logic") {
  const auto& g = TranslationGraph::core();
  Theory t = theory_from_axioms(LogicId::FOLEQ, {Sentence(LogicId::FOLEQ, Formula::atom("p"))});
  const auto prop_fol = g.find_path(LogicId::Prop, LogicId::FOLEQ).steps.front();
  CHECK(error_kind([&] { translate_theory(prop_fol, t); }) == ErrorKind::LogicMismatch);
  const Theory cl = translate_to(t, LogicId::CLSub);
  CHECK(cl.logic() == LogicId::CLSub);
  CHECK(cl.axioms.size() == 1);
}

TEST_CASE("satisfaction condition for Prop to FOLEQ") {
  const auto path = TranslationGraph::core().find_path(LogicId::Prop, LogicId::FOLEQ);
  const std::vector<Name> atoms{"p", "q", "r"};
  Signature sig(LogicId::Prop);
  for (const auto& a : atoms) sig.add_predicate(a, 0);
  const Signature fol_sig = path.steps.front().sig_map(sig);
  std::mt19937 rng(21);
  for (int i = 0; i < 50; ++i) {
    const Sentence phi(LogicId::Prop, oracle::random_prop(rng, atoms, 4));
    const Sentence translated = path.steps.front().sen_map(phi);
    REQUIRE(translated.logic() == LogicId::FOLEQ);
    for (int n = 1; n <= 3; ++n) {
      oracle::for_each_structure(oracle::predicate_list(fol_sig), {}, n, [&](const oracle::Structure& s) {
        const FiniteModel m = to_model(s, fol_sig);
        const FiniteModel back = reduct_along(path, m);
        const bool expected = oracle::eval(s, phi.formula());
        REQUIRE(satisfies(m, translated) == expected);
        REQUIRE(satisfies(back, phi) == expected);
      });
    }
  }
}

TEST_CASE("satisfaction condition for EL to FOLEQ") {
  const auto path = TranslationGraph::core().find_path(LogicId::EL, LogicId::FOLEQ);
  Signature sig(LogicId::EL);
  sig.add_predicate("A", 1);
  sig.add_predicate("B", 1);
  sig.add_predicate("r", 2);
  const Signature fol_sig = path.steps.front().sig_map(sig);
  std::mt19937 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Sentence phi(Subsumption{oracle::random_concept(rng, {"A", "B"}, "r", 3),
                                   oracle::random_concept(rng, {"A", "B"}, "r", 3)});
    const Sentence translated = path.steps.front().sen_map(phi);
    for (int n = 1; n <= 2; ++n) {
      oracle::for_each_structure(oracle::predicate_list(fol_sig), {}, n, [&](const oracle::Structure& s) {
        const FiniteModel m = to_model(s, fol_sig);
        const bool expected = oracle::holds(s, phi);
        REQUIRE(satisfies(m, translated) == expected);
        REQUIRE(satisfies(reduct_along(path, m), phi) == expected);
      });
    }
  }
}
