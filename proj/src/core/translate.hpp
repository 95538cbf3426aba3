#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/bsystem.hpp"
#include "core/diag.hpp"
#include "core/domain.hpp"
#include "core/store.hpp"

// Forward translation of a validated domain-model chain into B System
// components, mirroring the correspondence rules: components for models,
// abstract/enumerated sets for parentless concepts and data sets, constants
// and typing properties for child concepts, individuals, data values and
// constant relations/attributes, variables with typing invariants and
// initialisations for the variable ones, closure properties/actions, the
// transitivity/symmetry characteristics, cardinality quantifiers and verbatim
// predicate passthrough.
namespace ontb {

struct TranslateResult {
  std::vector<bs::Component> components;
  CorrespondenceStore store;
  Report report;
  bool ok = false;
};

// Deterministic naming: a component is named after its model, sets and
// constants after the element they realize; type constants carry a T_
// prefix, transitive compositions comp_, symmetric inverses inv_, concept
// variables x_. A clash between a generated and a declared name aborts the
// translation.
TranslateResult translate(const dm::Chain& chain);

// Checks every store invariant against the given chain and components:
// injectivity of each map (inv1_23 class), sub-map containment
// (inv1_104/105), existence and kind of both ends of every entry, type
// constant iff exactly one of constant/variable image (inv1_92/96),
// refinement structure (inv0_6/0_7) and the component-level typing totality
// checks (inv1_97/98/50, inv1_40).
Report check_store(const CorrespondenceStore& store, const dm::Chain& chain,
                   std::span<const bs::Component> components);

// Re-evaluates every forward rule guard against a finished translation and
// returns the names of the rules still enabled. Empty on a fixpoint.
std::vector<std::string> enabled_rules(const dm::Chain& chain,
                                       std::span<const bs::Component> components,
                                       const CorrespondenceStore& store);

bool is_b_identifier(std::string_view s);

}  // namespace ontb
