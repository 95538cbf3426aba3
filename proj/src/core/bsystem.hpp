#pragma once

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/diag.hpp"

// B System abstraction: components (SYSTEM or REFINEMENT) holding sets,
// constants, properties, variables, invariants and initialisations. Formulas
// are one operator applied to position-indexed operands; multi-operator
// assertions are separate Formula nodes conjoined at emission.
namespace ontb::bs {

enum class ComponentKind { System, Refinement };

enum class SetVariant { Abstract, Enumerated, Default };

struct BSet {
  std::string name;
  SetVariant variant = SetVariant::Abstract;
  std::vector<std::string> items;  // enumerated only

  bool operator==(const BSet&) const = default;
};

enum class Operator {
  Inclusion,            // a <: b
  Belonging,            // a : b
  RelationSet,          // a = b <-> c
  FunctionSet,          // a = b --> c
  Maplet,               // a = b |-> c
  RelationComposition,  // a = b ; c
  Equal2SetOf,          // a = {b, ...}
  Inversion,            // a = b~
  Equality,             // a = b
  CardinalityForAll,    // !xx.(xx : S => card(r[{xx}]) OP n)   (emitter extension)
  Raw,                  // verbatim text                        (emitter extension)
};

enum class RefKind { Constant, Variable, SetName, SetItem };

struct ElemRef {
  RefKind kind = RefKind::Constant;
  std::string name;

  bool operator==(const ElemRef&) const = default;
};

// An inline pair `a |-> b`; antecedent is always a constant, the image a
// constant or a set item.
struct MapletPair {
  ElemRef antecedent;
  ElemRef image;

  bool operator==(const MapletPair&) const = default;
};

enum class CardCmp { Eq, Ge, Le };

struct CardinalityForAllPayload {
  ElemRef relation;  // constant or variable holding the relation
  bool inverse = false;
  ElemRef over;  // set (or constant) the bound variable ranges over
  CardCmp cmp = CardCmp::Eq;
  unsigned bound = 0;

  bool operator==(const CardinalityForAllPayload&) const = default;
};

struct RawText {
  std::string text;

  bool operator==(const RawText&) const = default;
};

using Operand = std::variant<ElemRef, MapletPair, CardinalityForAllPayload, RawText>;

struct Formula {
  Operator op = Operator::Equality;
  std::vector<Operand> operands;

  bool operator==(const Formula&) const = default;
};

enum class InitOp { BecomeEqualSetOf, BecomeEqualEmptySet };

struct InitialisationAction {
  std::string target;  // variable
  InitOp op = InitOp::BecomeEqualEmptySet;
  std::vector<Operand> args;  // constants or maplet pairs

  bool operator==(const InitialisationAction&) const = default;
};

struct EventStub {
  std::string name;

  bool operator==(const EventStub&) const = default;
};

struct Component {
  std::string name;
  ComponentKind kind = ComponentKind::System;
  std::string refines;  // non-empty iff kind == Refinement
  std::vector<BSet> sets;
  std::vector<std::string> constants;
  std::vector<Formula> properties;
  std::vector<std::string> variables;
  std::vector<Formula> invariants;
  std::vector<InitialisationAction> init;
  std::vector<EventStub> events;

  bool operator==(const Component&) const = default;
};

enum class EmitMode { Ascii, Unicode };

// Throws std::invalid_argument on operand arity mismatch.
std::string render_formula(const Formula& f, EmitMode mode = EmitMode::Ascii);
std::string render_operand(const Operand& op, EmitMode mode = EmitMode::Ascii);
std::string render_init(const InitialisationAction& ia, EmitMode mode = EmitMode::Ascii);

// Deterministic Atelier-B-style text. Clause order: SYSTEM/REFINEMENT,
// REFINES, SETS, CONSTANTS, PROPERTIES, VARIABLES, INVARIANT, INITIALISATION,
// EVENTS, END; empty clauses are omitted.
std::string emit_atelier(const Component& c, EmitMode mode = EmitMode::Ascii);

// Structural invariants of a component chain: refinement edges form a total
// injection (inv0_6), every constant has exactly one typing property and is
// involved in at least one property (inv1_98, inv1_40), every variable has
// exactly one typing invariant and one initialisation (inv1_97, inv1_50).
Report check_components(std::span<const Component> components);

const char* operator_name(Operator op);

}  // namespace ontb::bs
