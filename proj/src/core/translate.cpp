#include "core/translate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace ontb {

using bs::CardCmp;
using bs::ElemRef;
using bs::Formula;
using bs::MapletPair;
using bs::Operand;
using bs::Operator;
using bs::RefKind;

bool is_b_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

std::string type_constant_name(const std::string& n) { return "T_" + n; }
std::string composition_name(const std::string& n) { return "comp_" + n; }
std::string inverse_name(const std::string& n) { return "inv_" + n; }
std::string concept_variable_name(const std::string& n) { return "x_" + n; }

std::string maplet_literal(const std::string& a, const std::string& b) {
  return a + " |-> " + b;
}

class Translator {
 public:
  explicit Translator(const dm::Chain& chain) : chain_(chain), idx_(chain) {}

  TranslateResult run() {
    TranslateResult out;
    map_components();
    initialize_default_datasets();
    map_sets();
    map_constants();
    map_relation_attribute_typing();
    map_maplets();
    map_characteristics();
    map_concept_variables();
    out.report = report_;
    if (!report_.ok()) return out;
    for (std::size_t i = 0; i < chain_.size(); ++i)
      out.components.push_back(assemble(i));
    out.store = st_;
    out.ok = true;
    return out;
  }

 private:
  // ---- phase A: correspondences and the generated-name registry ----

  bool claim(const std::string& name, const std::string& what,
             const std::string& path) {
    auto [it, inserted] = bnames_.emplace(name, what);
    if (!inserted) {
      report_.error("name-collision", path,
                    "generated " + what + " '" + name + "' collides with " +
                        it->second + " of the same name");
      return false;
    }
    return true;
  }

  void map_components() {
    for (const auto& m : chain_) {
      claim(m.name, "component", dm::path_of(m));
      st_.domainmodel_to_component[m.name] = m.name;
    }
  }

  // Registers the five default data sets and their B images once per chain.
  void initialize_default_datasets() {
    if (chain_.empty()) return;
    bool has_root = std::any_of(chain_.begin(), chain_.end(),
                                [](const dm::DomainModel& m) { return m.parent.empty(); });
    if (!has_root) return;
    for (auto name : dm::kDefaultDataSets) {
      std::string n(name);
      claim(n, "default set", "");
      st_.default_to_default_set[n] = n;
      st_.dataset_to_set[n] = n;
    }
  }

  void map_sets() {
    for (const auto& m : chain_) {
      // rule 3: parentless concepts become abstract sets
      for (const auto& c : m.concepts) {
        if (!c.parent.empty()) continue;
        if (claim(c.name, "abstract set", dm::path_of(m, "concept", c.name)))
          st_.concept_to_abstract_set[c.name] = c.name;
      }
      for (const auto& d : m.data_sets) {
        const std::string path = dm::path_of(m, "dataset", d.name);
        if (d.kind == dm::DataSetKind::Enumerated) {
          // rule 4: enumerated data set, one set item per value
          if (!claim(d.name, "enumerated set", path)) continue;
          st_.enumerated_to_enumerated_set[d.name] = d.name;
          st_.dataset_to_set[d.name] = d.name;
          for (const auto& e : d.elements) {
            if (!is_b_identifier(e)) {
              report_.error("name-collision", path,
                            "data value \"" + e + "\" is not a valid set item identifier");
              continue;
            }
            if (claim(e, "set item", path))
              st_.datavalue_to_setitem[datavalue_key(d.name, e)] = e;
          }
        } else {
          // rule 5: custom, non-enumerated data set becomes an abstract set
          if (!claim(d.name, "abstract set", path)) continue;
          st_.custom_to_abstract_set[d.name] = d.name;
          st_.dataset_to_set[d.name] = d.name;
        }
      }
    }
  }

  std::optional<ElemRef> concept_image(const std::string& name) const {
    if (auto it = st_.concept_to_abstract_set.find(name);
        it != st_.concept_to_abstract_set.end())
      return ElemRef{RefKind::SetName, it->second};
    if (auto it = st_.concept_to_constant.find(name);
        it != st_.concept_to_constant.end())
      return ElemRef{RefKind::Constant, it->second};
    return std::nullopt;
  }

  std::optional<ElemRef> dataset_image(const std::string& name) const {
    if (auto it = st_.dataset_to_set.find(name); it != st_.dataset_to_set.end())
      return ElemRef{RefKind::SetName, it->second};
    return std::nullopt;
  }

  void map_constants() {
    // rule 6: concepts with a parent; repeat until the parent images settle
    for (bool progress = true; progress;) {
      progress = false;
      for (const auto& m : chain_) {
        for (const auto& c : m.concepts) {
          if (c.parent.empty() || st_.concept_to_constant.count(c.name)) continue;
          if (!concept_image(c.parent)) continue;
          if (claim(c.name, "constant", dm::path_of(m, "concept", c.name)))
            st_.concept_to_constant[c.name] = c.name;
          progress = true;
        }
      }
    }
    // rule 7: individuals
    for (const auto& m : chain_)
      for (const auto& ind : m.individuals)
        if (claim(ind.name, "constant", dm::path_of(m, "individual", ind.name)))
          st_.individual_to_constant[ind.name] = ind.name;
    // rule 8: data values of custom, non-enumerated data sets
    for (const auto& m : chain_) {
      for (const auto& dv : m.data_values) {
        const dm::DataSet* ds = idx_.find_dataset(dv.dataset);
        if (!ds || ds->kind != dm::DataSetKind::Custom) continue;
        const std::string path = dm::path_of(m, "dataset", dv.dataset);
        if (!is_b_identifier(dv.lexical)) {
          report_.error("name-collision", path,
                        "data value \"" + dv.lexical + "\" is not a valid constant identifier");
          continue;
        }
        if (claim(dv.lexical, "constant", path))
          st_.datavalue_to_constant[datavalue_key(dv.dataset, dv.lexical)] =
              dv.lexical;
      }
    }
  }

  // rules 10, 13, 14 and the variable-attribute analogue of 13
  void map_relation_attribute_typing() {
    for (const auto& m : chain_) {
      for (const auto& r : m.relations) {
        const std::string path = dm::path_of(m, "relation", r.name);
        claim(type_constant_name(r.name), "type constant", path);
        st_.relation_to_type_constant[r.name] = type_constant_name(r.name);
        if (r.is_variable) {
          if (claim(r.name, "variable", path))
            st_.relation_to_variable[r.name] = r.name;
        } else {
          if (claim(r.name, "constant", path))
            st_.relation_to_constant[r.name] = r.name;
        }
      }
      for (const auto& a : m.attributes) {
        const std::string path = dm::path_of(m, "attribute", a.name);
        claim(type_constant_name(a.name), "type constant", path);
        st_.attribute_to_type_constant[a.name] = type_constant_name(a.name);
        if (a.is_variable) {
          if (claim(a.name, "variable", path))
            st_.attribute_to_variable[a.name] = a.name;
        } else {
          if (claim(a.name, "constant", path))
            st_.attribute_to_constant[a.name] = a.name;
        }
      }
    }
  }

  // rule 11; maplet constants stay inline, the store records their literal
  void map_maplets() {
    for (const auto& m : chain_) {
      for (const auto& rm : m.relation_maplets)
        st_.relationmaplet_to_constant[relation_maplet_key(
            rm.relation, rm.antecedent, rm.image)] =
            maplet_literal(rm.antecedent, rm.image);
      int k = 0;
      for (const auto& am : m.attribute_maplets) {
        const std::string path =
            m.name + "/attr_maplet/" + am.attribute + "[" + std::to_string(k++) + "]";
        const dm::Attribute* at = idx_.find_attribute(am.attribute);
        if (!at) continue;
        if (auto img = attribute_value_image(at->range, am.image)) {
          st_.attributemaplet_to_constant[attribute_maplet_key(
              am.attribute, am.antecedent, am.image)] =
              maplet_literal(am.antecedent, img->name);
        } else {
          // values of default data sets have no correspondence rule
          report_.warn("untranslated-maplet", path,
                       "image \"" + am.image + "\" lies in default data set '" +
                           at->range + "'; the maplet is not translated");
        }
      }
    }
  }

  // image of a data value used as a maplet image: set item for enumerated
  // sets, constant for custom sets, none for default sets
  std::optional<ElemRef> attribute_value_image(const std::string& dataset,
                                               const std::string& lexical) const {
    if (dm::is_default_dataset(dataset)) return std::nullopt;
    if (auto it = st_.datavalue_to_setitem.find(datavalue_key(dataset, lexical));
        it != st_.datavalue_to_setitem.end())
      return ElemRef{RefKind::SetItem, it->second};
    if (auto it = st_.datavalue_to_constant.find(datavalue_key(dataset, lexical));
        it != st_.datavalue_to_constant.end())
      return ElemRef{RefKind::Constant, it->second};
    return std::nullopt;
  }

  // rule 16, constant relations only
  void map_characteristics() {
    for (const auto& m : chain_) {
      for (const auto& r : m.relations) {
        if (r.is_variable) continue;
        const std::string path = dm::path_of(m, "relation", r.name);
        if (r.is_transitive) {
          claim(composition_name(r.name), "composition constant", path);
          Formula incl{Operator::Inclusion,
                       {ElemRef{RefKind::Constant, composition_name(r.name)},
                        ElemRef{RefKind::Constant, r.name}}};
          st_.characteristic_to_formula[characteristic_key(r.name, "transitive")] =
              bs::render_formula(incl);
        }
        if (r.is_symmetric) {
          claim(inverse_name(r.name), "inverse constant", path);
          Formula eq{Operator::Equality,
                     {ElemRef{RefKind::Constant, inverse_name(r.name)},
                      ElemRef{RefKind::Constant, r.name}}};
          st_.characteristic_to_formula[characteristic_key(r.name, "symmetric")] =
              bs::render_formula(eq);
        }
      }
    }
  }

  // rule 9
  void map_concept_variables() {
    for (const auto& m : chain_) {
      for (const auto& c : m.concepts) {
        if (!c.is_variable) continue;
        const std::string v = concept_variable_name(c.name);
        if (claim(v, "variable", dm::path_of(m, "concept", c.name)))
          st_.concept_to_variable[c.name] = v;
      }
    }
  }

  // ---- phase B: component assembly ----

  std::vector<const dm::Individual*> individuals_of(const std::string& concept) const {
    return idx_.individuals_of(concept);
  }

  bool all_attribute_maplets_translated(const dm::Attribute& a) const {
    for (const auto* am : idx_.maplets_of_attribute(a.name))
      if (!st_.attributemaplet_to_constant.count(
              attribute_maplet_key(a.name, am->antecedent, am->image)))
        return false;
    return true;
  }

  std::vector<Operand> relation_pairs(const dm::Relation& r) const {
    std::vector<Operand> out;
    for (const auto* rm : idx_.maplets_of_relation(r.name))
      out.push_back(MapletPair{ElemRef{RefKind::Constant, rm->antecedent},
                               ElemRef{RefKind::Constant, rm->image}});
    return out;
  }

  std::vector<Operand> attribute_pairs(const dm::Attribute& a) const {
    std::vector<Operand> out;
    for (const auto* am : idx_.maplets_of_attribute(a.name)) {
      auto img = attribute_value_image(a.range, am->image);
      if (!img) continue;
      out.push_back(MapletPair{ElemRef{RefKind::Constant, am->antecedent}, *img});
    }
    return out;
  }

  // range cardinality bounds card(r[{xx}]) over the domain image, domain
  // cardinality bounds card(r~[{xx}]) over the range image
  std::vector<Formula> cardinality_formulas(const dm::Relation& r) const {
    std::vector<Formula> out;
    ElemRef rel = r.is_variable ? ElemRef{RefKind::Variable, r.name}
                                : ElemRef{RefKind::Constant, r.name};
    auto emit = [&](const dm::Cardinality& card, bool inverse, const ElemRef& over) {
      if (card.trivial()) return;
      auto add = [&](CardCmp cmp, unsigned bound) {
        bs::CardinalityForAllPayload p{rel, inverse, over, cmp, bound};
        out.push_back(Formula{Operator::CardinalityForAll, {p}});
      };
      if (!card.is_star() && *card.max == card.min) {
        add(CardCmp::Eq, card.min);
        return;
      }
      if (card.min > 0) add(CardCmp::Ge, card.min);
      if (!card.is_star()) add(CardCmp::Le, *card.max);
    };
    emit(r.range_card, false, *concept_image(r.domain));
    emit(r.domain_card, true, *concept_image(r.range));
    return out;
  }

  bs::Component assemble(std::size_t i) {
    const dm::DomainModel& m = chain_[i];
    bs::Component c;
    c.name = m.name;
    c.kind = m.parent.empty() ? bs::ComponentKind::System
                              : bs::ComponentKind::Refinement;
    c.refines = m.parent;

    for (const auto& co : m.concepts)
      if (co.parent.empty())
        c.sets.push_back({co.name, bs::SetVariant::Abstract, {}});
    for (const auto& d : m.data_sets) {
      if (d.kind == dm::DataSetKind::Enumerated)
        c.sets.push_back({d.name, bs::SetVariant::Enumerated, d.elements});
      else
        c.sets.push_back({d.name, bs::SetVariant::Abstract, {}});
    }

    // CONSTANTS: relation pairs, attribute pairs, child concepts, then the
    // individuals and data values anchored to this component
    for (const auto& r : m.relations) {
      c.constants.push_back(type_constant_name(r.name));
      if (!r.is_variable) {
        c.constants.push_back(r.name);
        if (r.is_transitive) c.constants.push_back(composition_name(r.name));
        if (r.is_symmetric) c.constants.push_back(inverse_name(r.name));
      }
    }
    for (const auto& a : m.attributes) {
      c.constants.push_back(type_constant_name(a.name));
      if (!a.is_variable) c.constants.push_back(a.name);
    }
    for (const auto& co : m.concepts)
      if (!co.parent.empty()) c.constants.push_back(co.name);
    for (const auto& mm : chain_)
      for (const auto& ind : mm.individuals)
        if (idx_.model_of_concept(ind.type) == i) c.constants.push_back(ind.name);
    for (const auto& mm : chain_)
      for (const auto& dv : mm.data_values) {
        const dm::DataSet* ds = idx_.find_dataset(dv.dataset);
        if (ds && ds->kind == dm::DataSetKind::Custom &&
            idx_.model_of_dataset(dv.dataset) == i)
          c.constants.push_back(dv.lexical);
      }

    // PROPERTIES, per concept then per relation then per attribute
    for (const auto& co : m.concepts) {
      ElemRef img = *concept_image(co.name);
      if (!co.parent.empty())
        c.properties.push_back(Formula{
            Operator::Inclusion,
            {ElemRef{RefKind::Constant, co.name}, *concept_image(co.parent)}});
      auto inds = individuals_of(co.name);
      for (const auto* ind : inds)
        c.properties.push_back(Formula{
            Operator::Belonging, {ElemRef{RefKind::Constant, ind->name}, img}});
      if (!co.is_variable && !inds.empty()) {
        Formula ext{Operator::Equal2SetOf, {img}};
        for (const auto* ind : inds)
          ext.operands.push_back(ElemRef{RefKind::Constant, ind->name});
        c.properties.push_back(std::move(ext));
      }
    }
    for (const auto& r : m.relations) {
      ElemRef t{RefKind::Constant, type_constant_name(r.name)};
      c.properties.push_back(Formula{
          Operator::RelationSet,
          {t, *concept_image(r.domain), *concept_image(r.range)}});
      std::vector<Formula> cards = cardinality_formulas(r);
      if (!r.is_variable) {
        c.properties.push_back(
            Formula{Operator::Belonging, {ElemRef{RefKind::Constant, r.name}, t}});
        for (auto& f : cards) c.properties.push_back(std::move(f));
        Formula closure{Operator::Equal2SetOf, {ElemRef{RefKind::Constant, r.name}}};
        for (auto& p : relation_pairs(r)) closure.operands.push_back(std::move(p));
        c.properties.push_back(std::move(closure));
        if (r.is_transitive) {
          ElemRef comp{RefKind::Constant, composition_name(r.name)};
          ElemRef rel{RefKind::Constant, r.name};
          c.properties.push_back(
              Formula{Operator::RelationComposition, {comp, rel, rel}});
          c.properties.push_back(Formula{Operator::Inclusion, {comp, rel}});
        }
        if (r.is_symmetric) {
          ElemRef inv{RefKind::Constant, inverse_name(r.name)};
          ElemRef rel{RefKind::Constant, r.name};
          c.properties.push_back(Formula{Operator::Inversion, {inv, rel}});
          c.properties.push_back(Formula{Operator::Equality, {inv, rel}});
        }
      } else {
        // cardinality formulas over a variable relation constrain state,
        // they are emitted as invariants below
        pending_card_invariants_[r.name] = std::move(cards);
      }
    }
    for (const auto& a : m.attributes) {
      ElemRef t{RefKind::Constant, type_constant_name(a.name)};
      c.properties.push_back(
          Formula{a.is_functional ? Operator::FunctionSet : Operator::RelationSet,
                  {t, *concept_image(a.domain), *dataset_image(a.range)}});
      if (!a.is_variable) {
        c.properties.push_back(
            Formula{Operator::Belonging, {ElemRef{RefKind::Constant, a.name}, t}});
        if (all_attribute_maplets_translated(a)) {
          Formula closure{Operator::Equal2SetOf, {ElemRef{RefKind::Constant, a.name}}};
          for (auto& p : attribute_pairs(a)) closure.operands.push_back(std::move(p));
          c.properties.push_back(std::move(closure));
        }
      }
    }
    for (const auto& mm : chain_)
      for (const auto& dv : mm.data_values) {
        const dm::DataSet* ds = idx_.find_dataset(dv.dataset);
        if (ds && ds->kind == dm::DataSetKind::Custom &&
            idx_.model_of_dataset(dv.dataset) == i)
          c.properties.push_back(Formula{Operator::Belonging,
                                         {ElemRef{RefKind::Constant, dv.lexical},
                                          *dataset_image(dv.dataset)}});
      }
    for (const auto& p : m.predicates)
      if (p.kind == dm::PredicateKind::Plain)
        c.properties.push_back(Formula{Operator::Raw, {bs::RawText{p.text}}});

    // VARIABLES, INVARIANT, INITIALISATION in one shared order
    for (const auto& co : m.concepts) {
      if (!co.is_variable) continue;
      const std::string v = st_.concept_to_variable.at(co.name);
      c.variables.push_back(v);
      c.invariants.push_back(Formula{
          Operator::Inclusion, {ElemRef{RefKind::Variable, v}, *concept_image(co.name)}});
      bs::InitialisationAction ia{v, bs::InitOp::BecomeEqualSetOf, {}};
      for (const auto* ind : individuals_of(co.name))
        ia.args.push_back(ElemRef{RefKind::Constant, ind->name});
      c.init.push_back(std::move(ia));
    }
    for (const auto& r : m.relations) {
      if (!r.is_variable) continue;
      c.variables.push_back(r.name);
      c.invariants.push_back(
          Formula{Operator::Belonging,
                  {ElemRef{RefKind::Variable, r.name},
                   ElemRef{RefKind::Constant, type_constant_name(r.name)}}});
      for (auto& f : pending_card_invariants_[r.name])
        c.invariants.push_back(std::move(f));
      pending_card_invariants_.erase(r.name);
      bs::InitialisationAction ia{r.name, bs::InitOp::BecomeEqualSetOf, {}};
      for (auto& p : relation_pairs(r)) ia.args.push_back(std::move(p));
      c.init.push_back(std::move(ia));
    }
    for (const auto& a : m.attributes) {
      if (!a.is_variable) continue;
      c.variables.push_back(a.name);
      c.invariants.push_back(
          Formula{Operator::Belonging,
                  {ElemRef{RefKind::Variable, a.name},
                   ElemRef{RefKind::Constant, type_constant_name(a.name)}}});
      if (all_attribute_maplets_translated(a)) {
        bs::InitialisationAction ia{a.name, bs::InitOp::BecomeEqualSetOf, {}};
        for (auto& p : attribute_pairs(a)) ia.args.push_back(std::move(p));
        c.init.push_back(std::move(ia));
      } else {
        c.init.push_back({a.name, bs::InitOp::BecomeEqualEmptySet, {}});
      }
    }
    for (const auto& p : m.predicates)
      if (p.kind == dm::PredicateKind::Gluing)
        c.invariants.push_back(Formula{Operator::Raw, {bs::RawText{p.text}}});
    return c;
  }

  const dm::Chain& chain_;
  dm::ChainIndex idx_;
  CorrespondenceStore st_;
  Report report_;
  std::map<std::string, std::string> bnames_;
  std::map<std::string, std::vector<Formula>> pending_card_invariants_;
};

}  // namespace

TranslateResult translate(const dm::Chain& chain) { return Translator(chain).run(); }

}  // namespace ontb
