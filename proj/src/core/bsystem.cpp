#include "core/bsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ontb::bs {

namespace {

struct Symbols {
  const char* belongs;
  const char* subset;
  const char* relation;
  const char* function;
  const char* maplet;
  const char* forall;
  const char* conj;
};

constexpr Symbols kAscii{":", "<:", "<->", "-->", "|->", "!", "&"};
constexpr Symbols kUnicode{"∈", "⊆", "↔", "⟶", "↦",
                           "∀", "∧"};

const Symbols& symbols(EmitMode mode) {
  return mode == EmitMode::Ascii ? kAscii : kUnicode;
}

const ElemRef& as_ref(const Operand& op, const char* what) {
  const ElemRef* r = std::get_if<ElemRef>(&op);
  if (!r) throw std::invalid_argument(std::string("operand is not a plain reference: ") + what);
  return *r;
}

void need(const Formula& f, std::size_t n) {
  if (f.operands.size() != n)
    throw std::invalid_argument(std::string(operator_name(f.op)) +
                                " expects " + std::to_string(n) + " operands, got " +
                                std::to_string(f.operands.size()));
}

std::string cmp_text(CardCmp c) {
  switch (c) {
    case CardCmp::Eq: return "=";
    case CardCmp::Ge: return ">=";
    case CardCmp::Le: return "<=";
  }
  return "=";
}

}  // namespace

const char* operator_name(Operator op) {
  switch (op) {
    case Operator::Inclusion: return "inclusion";
    case Operator::Belonging: return "belonging";
    case Operator::RelationSet: return "relation_set";
    case Operator::FunctionSet: return "function_set";
    case Operator::Maplet: return "maplet";
    case Operator::RelationComposition: return "relation_composition";
    case Operator::Equal2SetOf: return "equal_to_set_of";
    case Operator::Inversion: return "inversion";
    case Operator::Equality: return "equality";
    case Operator::CardinalityForAll: return "cardinality_forall";
    case Operator::Raw: return "raw";
  }
  return "?";
}

std::string render_operand(const Operand& op, EmitMode mode) {
  const Symbols& sym = symbols(mode);
  if (const ElemRef* r = std::get_if<ElemRef>(&op)) return r->name;
  if (const MapletPair* p = std::get_if<MapletPair>(&op))
    return p->antecedent.name + " " + sym.maplet + " " + p->image.name;
  if (const RawText* t = std::get_if<RawText>(&op)) return t->text;
  const auto& card = std::get<CardinalityForAllPayload>(op);
  std::ostringstream os;
  os << sym.forall << "xx.(xx " << sym.belongs << " " << card.over.name << " => card("
     << card.relation.name << (card.inverse ? "~" : "") << "[{xx}]) "
     << cmp_text(card.cmp) << " " << card.bound << ")";
  return os.str();
}

std::string render_formula(const Formula& f, EmitMode mode) {
  const Symbols& sym = symbols(mode);
  auto ref = [&](std::size_t i) { return render_operand(f.operands[i], mode); };
  switch (f.op) {
    case Operator::Inclusion:
      need(f, 2);
      return ref(0) + " " + sym.subset + " " + ref(1);
    case Operator::Belonging:
      need(f, 2);
      return ref(0) + " " + sym.belongs + " " + ref(1);
    case Operator::RelationSet:
      need(f, 3);
      return ref(0) + " = " + ref(1) + " " + sym.relation + " " + ref(2);
    case Operator::FunctionSet:
      need(f, 3);
      return ref(0) + " = " + ref(1) + " " + sym.function + " " + ref(2);
    case Operator::Maplet:
      need(f, 3);
      return ref(0) + " = " + ref(1) + " " + sym.maplet + " " + ref(2);
    case Operator::RelationComposition:
      need(f, 3);
      return ref(0) + " = " + ref(1) + " ; " + ref(2);
    case Operator::Equal2SetOf: {
      if (f.operands.empty())
        throw std::invalid_argument("equal_to_set_of expects at least 1 operand");
      std::string out = ref(0) + " = {";
      for (std::size_t i = 1; i < f.operands.size(); ++i) {
        if (i > 1) out += ", ";
        out += ref(i);
      }
      out += "}";
      return out;
    }
    case Operator::Inversion:
      need(f, 2);
      return ref(0) + " = " + ref(1) + "~";
    case Operator::Equality:
      need(f, 2);
      return ref(0) + " = " + ref(1);
    case Operator::CardinalityForAll:
      need(f, 1);
      return render_operand(f.operands[0], mode);
    case Operator::Raw:
      need(f, 1);
      return std::get<RawText>(f.operands[0]).text;
  }
  throw std::invalid_argument("unknown operator");
}

std::string render_init(const InitialisationAction& ia, EmitMode mode) {
  std::string out = ia.target + " := {";
  if (ia.op == InitOp::BecomeEqualSetOf) {
    for (std::size_t i = 0; i < ia.args.size(); ++i) {
      if (i) out += ", ";
      out += render_operand(ia.args[i], mode);
    }
  }
  out += "}";
  return out;
}

std::string emit_atelier(const Component& c, EmitMode mode) {
  const Symbols& sym = symbols(mode);
  std::ostringstream os;
  os << (c.kind == ComponentKind::System ? "SYSTEM " : "REFINEMENT ") << c.name
     << "\n";
  if (c.kind == ComponentKind::Refinement) os << "REFINES " << c.refines << "\n";
  if (!c.sets.empty()) {
    os << "SETS\n";
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      const BSet& s = c.sets[i];
      os << "    " << s.name;
      if (s.variant == SetVariant::Enumerated) {
        os << " = {";
        for (std::size_t k = 0; k < s.items.size(); ++k) {
          if (k) os << ", ";
          os << s.items[k];
        }
        os << "}";
      }
      if (i + 1 < c.sets.size()) os << ";";
      os << "\n";
    }
  }
  if (!c.constants.empty()) {
    os << "CONSTANTS\n";
    for (std::size_t i = 0; i < c.constants.size(); ++i)
      os << "    " << c.constants[i] << (i + 1 < c.constants.size() ? "," : "")
         << "\n";
  }
  if (!c.properties.empty()) {
    os << "PROPERTIES\n";
    for (std::size_t i = 0; i < c.properties.size(); ++i)
      os << "    " << (i ? std::string(sym.conj) + " " : "")
         << render_formula(c.properties[i], mode) << "\n";
  }
  if (!c.variables.empty()) {
    os << "VARIABLES\n";
    for (std::size_t i = 0; i < c.variables.size(); ++i)
      os << "    " << c.variables[i] << (i + 1 < c.variables.size() ? "," : "")
         << "\n";
  }
  if (!c.invariants.empty()) {
    os << "INVARIANT\n";
    for (std::size_t i = 0; i < c.invariants.size(); ++i)
      os << "    " << (i ? std::string(sym.conj) + " " : "")
         << render_formula(c.invariants[i], mode) << "\n";
  }
  if (!c.init.empty()) {
    os << "INITIALISATION\n";
    for (std::size_t i = 0; i < c.init.size(); ++i)
      os << "    " << (i ? "|| " : "") << render_init(c.init[i], mode) << "\n";
  }
  if (!c.events.empty()) {
    os << "EVENTS\n";
    for (const EventStub& e : c.events)
      os << "    " << e.name << " = BEGIN skip END\n";
  }
  os << "END\n";
  return os.str();
}

namespace {

bool is_typing_shape(Operator op) {
  switch (op) {
    case Operator::Inclusion:
    case Operator::Belonging:
    case Operator::RelationSet:
    case Operator::FunctionSet:
    case Operator::RelationComposition:
    case Operator::Inversion:
    case Operator::Maplet:
      return true;
    default:
      return false;
  }
}

bool first_operand_is(const Formula& f, RefKind kind, const std::string& name) {
  if (f.operands.empty()) return false;
  const ElemRef* r = std::get_if<ElemRef>(&f.operands[0]);
  return r && r->kind == kind && r->name == name;
}

bool mentions(const Operand& op, RefKind kind, const std::string& name) {
  if (const ElemRef* r = std::get_if<ElemRef>(&op))
    return r->kind == kind && r->name == name;
  if (const MapletPair* p = std::get_if<MapletPair>(&op))
    return (p->antecedent.kind == kind && p->antecedent.name == name) ||
           (p->image.kind == kind && p->image.name == name);
  if (const auto* c = std::get_if<CardinalityForAllPayload>(&op))
    return (c->relation.kind == kind && c->relation.name == name) ||
           (c->over.kind == kind && c->over.name == name);
  return false;
}

bool involved_in(const Formula& f, RefKind kind, const std::string& name) {
  return std::any_of(f.operands.begin(), f.operands.end(),
                     [&](const Operand& op) { return mentions(op, kind, name); });
}

}  // namespace

Report check_components(std::span<const Component> components) {
  Report rep;
  std::map<std::string, const Component*> by_name;
  for (const Component& c : components) by_name.emplace(c.name, &c);

  std::set<std::string> refined;
  for (const Component& c : components) {
    const std::string cpath = c.name;
    if ((c.kind == ComponentKind::Refinement) != !c.refines.empty())
      rep.error("inv0_6", cpath, "kind and REFINES clause disagree");
    if (!c.refines.empty()) {
      if (!by_name.count(c.refines))
        rep.error("inv0_6", cpath, "refined component '" + c.refines + "' not found");
      if (!refined.insert(c.refines).second)
        rep.error("inv0_6", cpath,
                  "component '" + c.refines + "' refined more than once");
    }

    for (const std::string& k : c.constants) {
      std::vector<Operator> typing;
      bool involved = false;
      for (const Formula& p : c.properties) {
        if (is_typing_shape(p.op) && first_operand_is(p, RefKind::Constant, k))
          typing.push_back(p.op);
        if (involved_in(p, RefKind::Constant, k)) involved = true;
      }
      if (typing.empty())
        rep.error("inv1_98", cpath + "/" + k, "constant has no typing property");
      else if (typing.size() > 1) {
        // a transitivity pair types through the composition and adds an
        // inclusion characteristic; anything else is a double typing
        bool comp_pattern =
            typing.size() == 2 &&
            ((typing[0] == Operator::RelationComposition &&
              typing[1] == Operator::Inclusion) ||
             (typing[0] == Operator::Inclusion &&
              typing[1] == Operator::RelationComposition));
        if (!comp_pattern)
          rep.error("inv1_98", cpath + "/" + k,
                    "constant has more than one typing property");
      }
      if (!involved)
        rep.error("inv1_40", cpath + "/" + k,
                  "constant is not involved in any property");
    }

    std::set<std::string> declared_vars(c.variables.begin(), c.variables.end());
    for (const std::string& v : c.variables) {
      int typing = 0;
      for (const Formula& iv : c.invariants)
        if ((iv.op == Operator::Inclusion || iv.op == Operator::Belonging) &&
            first_operand_is(iv, RefKind::Variable, v))
          ++typing;
      if (typing != 1)
        rep.error("inv1_97", cpath + "/" + v,
                  "variable has " + std::to_string(typing) +
                      " typing invariants, expected exactly 1");
      int inits = 0;
      for (const InitialisationAction& ia : c.init)
        if (ia.target == v) ++inits;
      if (inits != 1)
        rep.error("inv1_50", cpath + "/" + v,
                  "variable has " + std::to_string(inits) +
                      " initialisations, expected exactly 1");
    }
    for (const InitialisationAction& ia : c.init)
      if (!declared_vars.count(ia.target))
        rep.error("inv1_50", cpath + "/" + ia.target,
                  "initialisation targets an undeclared variable");
  }
  return rep;
}

}  // namespace ontb::bs
