#pragma once

#include <map>

#include "dol/logic.hpp"

namespace dol {

/// Standard first-order reading of a sentence: Prop and first-order sentences
/// are returned unchanged, an EL subsumption C ⊑ D becomes
/// ∀x (τ(C,x) → τ(D,x)).
Formula first_order_reading(const Sentence& sentence);

/// τ(C, var): the first-order formula with one free variable `var` whose
/// extension is the extension of C. Nested existentials draw fresh variables
/// from x, y, z, u, v, w, x6, x7, ...
Formula concept_reading(const Concept& c, const Name& var);

/// Tarskian truth of `sentence` in `model`. Quantifiers range over
/// 0..domain_size-1 and `=` is identity. Throws UndeclaredSymbol if the model
/// leaves a used symbol uninterpreted.
bool satisfies(const FiniteModel& model, const Sentence& sentence);

/// Truth of a first-order formula under an assignment of its free variables.
bool evaluate(const FiniteModel& model, const Formula& formula,
              const std::map<Name, int>& assignment = {});

Sentence translate_sentence(const SignatureMorphism& morphism, const Sentence& sentence);

/// Model over `morphism.source()` reading each symbol through the morphism.
FiniteModel reduct(const SignatureMorphism& morphism, const FiniteModel& model);

/// Throws LogicMismatch or ArityClash.
Signature signature_union(const Signature& a, const Signature& b);

}  // namespace dol
