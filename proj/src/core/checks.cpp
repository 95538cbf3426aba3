#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "core/translate.hpp"

namespace ontb {

namespace {

struct ComponentIndex {
  std::map<std::string, const bs::Component*> by_name;
  // element name -> owning component
  std::map<std::string, std::pair<const bs::Component*, const bs::BSet*>> sets;
  std::map<std::string, const bs::Component*> constants;
  std::map<std::string, const bs::Component*> variables;
  std::map<std::string, std::string> set_items;  // item -> owning set

  explicit ComponentIndex(std::span<const bs::Component> components) {
    for (const bs::Component& c : components) {
      by_name.emplace(c.name, &c);
      for (const bs::BSet& s : c.sets) {
        sets.emplace(s.name, std::make_pair(&c, &s));
        for (const std::string& it : s.items) set_items.emplace(it, s.name);
      }
      for (const std::string& k : c.constants) constants.emplace(k, &c);
      for (const std::string& v : c.variables) variables.emplace(v, &c);
    }
  }
};

std::optional<std::pair<std::string, std::string>> split_key(const std::string& key,
                                                             char sep) {
  auto pos = key.find(sep);
  if (pos == std::string::npos) return std::nullopt;
  return std::make_pair(key.substr(0, pos), key.substr(pos + 1));
}

bool is_inline_maplet(const std::string& value) {
  return value.find(" |-> ") != std::string::npos;
}

class StoreChecker {
 public:
  StoreChecker(const CorrespondenceStore& st, const dm::Chain& chain,
               std::span<const bs::Component> components)
      : st_(st), chain_(chain), idx_(chain), comps_(components), cidx_(components) {}

  Report run() {
    rep_.append(bs::check_components(comps_));
    check_injectivity();
    check_submaps();
    check_models();
    check_concept_maps();
    check_dataset_maps();
    check_value_maps();
    check_relation_attribute_maps();
    check_maplet_maps();
    check_characteristics();
    return rep_;
  }

 private:
  void violation(const char* tag, const std::string& where, const std::string& msg) {
    rep_.error(tag, where, msg);
  }

  void check_injectivity() {
    for (const auto& nm : st_.maps()) {
      std::map<std::string, const std::string*> seen;
      for (const auto& [k, v] : *nm.map) {
        auto [it, inserted] = seen.emplace(v, &k);
        if (!inserted)
          violation(nm.injectivity_tag, std::string(nm.name),
                    "'" + *it->second + "' and '" + k + "' both map to '" + v + "'");
      }
    }
  }

  void check_submaps() {
    auto contained = [&](const CorrespondenceStore::Map& sub, const char* tag,
                         const char* name) {
      for (const auto& [k, v] : sub) {
        auto it = st_.dataset_to_set.find(k);
        if (it == st_.dataset_to_set.end() || it->second != v)
          violation(tag, name,
                    "entry '" + k + "' -> '" + v + "' missing from dataset_to_set");
      }
    };
    contained(st_.enumerated_to_enumerated_set, "inv1_104",
              "enumerated_to_enumerated_set");
    contained(st_.custom_to_abstract_set, "inv1_105", "custom_to_abstract_set");
    contained(st_.default_to_default_set, "inv1_101", "default_to_default_set");
  }

  void check_models() {
    for (const auto& [model, comp] : st_.domainmodel_to_component) {
      auto mi = idx_.model_index(model);
      if (!mi) {
        violation("inv0_5", model, "unknown domain model");
        continue;
      }
      auto it = cidx_.by_name.find(comp);
      if (it == cidx_.by_name.end()) {
        violation("inv0_5", model, "component '" + comp + "' not found");
        continue;
      }
      const dm::DomainModel& m = chain_[*mi];
      const bs::Component& c = *it->second;
      if (m.parent.empty()) {
        if (c.kind != bs::ComponentKind::System)
          violation("inv0_6", model, "root model mapped to a refinement");
      } else {
        if (c.kind != bs::ComponentKind::Refinement)
          violation("inv0_6", model, "child model mapped to a system component");
        auto pit = st_.domainmodel_to_component.find(m.parent);
        if (pit != st_.domainmodel_to_component.end() && c.refines != pit->second)
          violation("inv0_7", model,
                    "component refines '" + c.refines + "' but the parent model maps to '" +
                        pit->second + "'");
      }
    }
  }

  void check_concept_maps() {
    for (const auto& [k, v] : st_.concept_to_abstract_set) {
      if (!idx_.find_concept(k)) violation("inv1_23", k, "unknown concept");
      auto it = cidx_.sets.find(v);
      if (it == cidx_.sets.end() ||
          it->second.second->variant != bs::SetVariant::Abstract)
        violation("inv1_23", k, "'" + v + "' is not an abstract set");
    }
    for (const auto& [k, v] : st_.concept_to_constant) {
      if (!idx_.find_concept(k)) violation("inv1_31", k, "unknown concept");
      if (!cidx_.constants.count(v))
        violation("inv1_31", k, "'" + v + "' is not a declared constant");
    }
    for (const auto& [k, v] : st_.concept_to_variable) {
      if (!idx_.find_concept(k)) violation("inv1_46", k, "unknown concept");
      if (!cidx_.variables.count(v))
        violation("inv1_46", k, "'" + v + "' is not a declared variable");
    }
  }

  void check_dataset_maps() {
    for (const auto& [k, v] : st_.default_to_default_set) {
      if (!dm::is_default_dataset(k))
        violation("inv1_29", k, "not a default data set");
      if (k != v) violation("inv1_29", k, "default set renamed to '" + v + "'");
    }
    for (const auto& [k, v] : st_.enumerated_to_enumerated_set) {
      const dm::DataSet* ds = idx_.find_dataset(k);
      if (!ds || ds->kind != dm::DataSetKind::Enumerated)
        violation("inv1_24", k, "unknown enumerated data set");
      auto it = cidx_.sets.find(v);
      if (it == cidx_.sets.end() ||
          it->second.second->variant != bs::SetVariant::Enumerated)
        violation("inv1_24", k, "'" + v + "' is not an enumerated set");
    }
    for (const auto& [k, v] : st_.custom_to_abstract_set) {
      const dm::DataSet* ds = idx_.find_dataset(k);
      if (!ds || ds->kind != dm::DataSetKind::Custom)
        violation("inv1_27", k, "unknown custom data set");
      auto it = cidx_.sets.find(v);
      if (it == cidx_.sets.end() ||
          it->second.second->variant != bs::SetVariant::Abstract)
        violation("inv1_27", k, "'" + v + "' is not an abstract set");
    }
    for (const auto& [k, v] : st_.dataset_to_set) {
      if (dm::is_default_dataset(k)) continue;
      if (!idx_.find_dataset(k)) violation("inv1_101", k, "unknown data set");
      if (!cidx_.sets.count(v))
        violation("inv1_101", k, "'" + v + "' is not a declared set");
    }
  }

  bool datavalue_exists(const std::string& dataset, const std::string& lexical) const {
    for (const dm::DomainModel& m : chain_)
      for (const dm::DataValue& dv : m.data_values)
        if (dv.dataset == dataset && dv.lexical == lexical) return true;
    return false;
  }

  void check_value_maps() {
    for (const auto& [k, v] : st_.datavalue_to_setitem) {
      auto parts = split_key(k, '/');
      if (!parts || !datavalue_exists(parts->first, parts->second)) {
        violation("inv1_25", k, "unknown data value");
        continue;
      }
      if (!cidx_.set_items.count(v))
        violation("inv1_25", k, "'" + v + "' is not a set item");
    }
    for (const auto& [k, v] : st_.datavalue_to_constant) {
      auto parts = split_key(k, '/');
      if (!parts || !datavalue_exists(parts->first, parts->second)) {
        violation("inv1_45", k, "unknown data value");
        continue;
      }
      if (!cidx_.constants.count(v))
        violation("inv1_45", k, "'" + v + "' is not a declared constant");
    }
    for (const auto& [k, v] : st_.individual_to_constant) {
      if (!idx_.find_individual(k)) violation("inv1_44", k, "unknown individual");
      if (!cidx_.constants.count(v))
        violation("inv1_44", k, "'" + v + "' is not a declared constant");
    }
  }

  void check_relation_attribute_maps() {
    auto check_pair = [&](const CorrespondenceStore::Map& map, const char* tag,
                          bool relation, bool want_variable) {
      for (const auto& [k, v] : map) {
        bool known = relation ? idx_.find_relation(k) != nullptr
                              : idx_.find_attribute(k) != nullptr;
        if (!known) violation(tag, k, relation ? "unknown relation" : "unknown attribute");
        bool declared = want_variable ? cidx_.variables.count(v) > 0
                                      : cidx_.constants.count(v) > 0;
        if (!declared)
          violation(tag, k, "'" + v + "' is not a declared " +
                                (want_variable ? "variable" : "constant"));
      }
    };
    check_pair(st_.relation_to_type_constant, "inv1_89", true, false);
    check_pair(st_.relation_to_constant, "inv1_90", true, false);
    check_pair(st_.relation_to_variable, "inv1_91", true, true);
    check_pair(st_.attribute_to_type_constant, "inv1_93", false, false);
    check_pair(st_.attribute_to_constant, "inv1_94", false, false);
    check_pair(st_.attribute_to_variable, "inv1_95", false, true);

    // inv1_92 / inv1_96: a type constant iff exactly one of constant/variable
    auto check_iff = [&](const CorrespondenceStore::Map& types,
                         const CorrespondenceStore::Map& consts,
                         const CorrespondenceStore::Map& vars, const char* tag) {
      std::set<std::string> all;
      for (const auto& [k, v] : types) all.insert(k);
      for (const auto& [k, v] : consts) all.insert(k);
      for (const auto& [k, v] : vars) all.insert(k);
      for (const std::string& k : all) {
        bool t = types.count(k), c = consts.count(k), v = vars.count(k);
        if (t != (c || v) || (c && v))
          violation(tag, k,
                    "type constant and constant/variable images disagree");
      }
    };
    check_iff(st_.relation_to_type_constant, st_.relation_to_constant,
              st_.relation_to_variable, "inv1_92");
    check_iff(st_.attribute_to_type_constant, st_.attribute_to_constant,
              st_.attribute_to_variable, "inv1_96");
  }

  void check_maplet_maps() {
    for (const auto& [k, v] : st_.relationmaplet_to_constant) {
      bool found = false;
      for (const dm::DomainModel& m : chain_)
        for (const dm::RelationMaplet& rm : m.relation_maplets)
          if (relation_maplet_key(rm.relation, rm.antecedent, rm.image) == k)
            found = true;
      if (!found) violation("inv1_100", k, "unknown relation maplet");
      if (!is_inline_maplet(v) && !cidx_.constants.count(v))
        violation("inv1_100", k, "'" + v + "' is neither an inline maplet nor a constant");
    }
    for (const auto& [k, v] : st_.attributemaplet_to_constant) {
      bool found = false;
      for (const dm::DomainModel& m : chain_)
        for (const dm::AttributeMaplet& am : m.attribute_maplets)
          if (attribute_maplet_key(am.attribute, am.antecedent, am.image) == k)
            found = true;
      if (!found) violation("inv1_102", k, "unknown attribute maplet");
      if (!is_inline_maplet(v) && !cidx_.constants.count(v))
        violation("inv1_102", k, "'" + v + "' is neither an inline maplet nor a constant");
    }
  }

  void check_characteristics() {
    for (const auto& [k, v] : st_.characteristic_to_formula) {
      auto parts = split_key(k, '#');
      if (!parts || !idx_.find_relation(parts->first) ||
          (parts->second != "transitive" && parts->second != "symmetric")) {
        violation("inv1_99", k, "malformed characteristic key");
        continue;
      }
      if (!st_.relation_to_constant.count(parts->first))
        violation("inv1_99", k, "characteristic recorded for a non-constant relation");
      bool found = false;
      for (const bs::Component& c : comps_)
        for (const bs::Formula& f : c.properties)
          if (bs::render_formula(f) == v) found = true;
      if (!found)
        violation("inv1_99", k, "characteristic formula '" + v + "' not found");
    }
  }

  const CorrespondenceStore& st_;
  const dm::Chain& chain_;
  dm::ChainIndex idx_;
  std::span<const bs::Component> comps_;
  ComponentIndex cidx_;
  Report rep_;
};

// ---- rule guard evaluation (independent of the translator's bookkeeping) ----

class GuardScan {
 public:
  GuardScan(const dm::Chain& chain, std::span<const bs::Component> components,
            const CorrespondenceStore& st)
      : chain_(chain), idx_(chain), comps_(components), st_(st) {}

  std::vector<std::string> run() {
    scan_components();
    scan_default_datasets();
    scan_sets();
    scan_constants();
    scan_typing();
    scan_maplets();
    scan_closures();
    scan_characteristics();
    scan_cardinalities();
    scan_concept_variables();
    scan_predicates();
    std::sort(enabled_.begin(), enabled_.end());
    enabled_.erase(std::unique(enabled_.begin(), enabled_.end()), enabled_.end());
    return enabled_;
  }

 private:
  void enable(const char* rule) { enabled_.push_back(rule); }

  bool translated(const CorrespondenceStore::Map& map, const std::string& key) const {
    return map.count(key) > 0;
  }

  bool concept_has_image(const std::string& name) const {
    return translated(st_.concept_to_abstract_set, name) ||
           translated(st_.concept_to_constant, name);
  }

  std::string concept_image_name(const std::string& name) const {
    if (auto it = st_.concept_to_abstract_set.find(name);
        it != st_.concept_to_abstract_set.end())
      return it->second;
    if (auto it = st_.concept_to_constant.find(name);
        it != st_.concept_to_constant.end())
      return it->second;
    return {};
  }

  const bs::Component* component_of_model(const std::string& model) const {
    auto it = st_.domainmodel_to_component.find(model);
    if (it == st_.domainmodel_to_component.end()) return nullptr;
    for (const bs::Component& c : comps_)
      if (c.name == it->second) return &c;
    return nullptr;
  }

  void scan_components() {
    for (const dm::DomainModel& m : chain_) {
      if (translated(st_.domainmodel_to_component, m.name)) continue;
      if (m.parent.empty()) {
        enable("rule_1");
      } else if (translated(st_.domainmodel_to_component, m.parent)) {
        enable("rule_2");
      }
    }
  }

  void scan_default_datasets() {
    bool root_translated = std::any_of(
        chain_.begin(), chain_.end(), [&](const dm::DomainModel& m) {
          return m.parent.empty() && translated(st_.domainmodel_to_component, m.name);
        });
    if (root_translated && st_.default_to_default_set.empty())
      enable("initialize_default_datasets");
  }

  void scan_sets() {
    for (const dm::DomainModel& m : chain_) {
      bool model_ok = translated(st_.domainmodel_to_component, m.name);
      if (!model_ok) continue;
      for (const dm::Concept& c : m.concepts)
        if (c.parent.empty() && !translated(st_.concept_to_abstract_set, c.name))
          enable("rule_3");
      for (const dm::DataSet& d : m.data_sets) {
        if (translated(st_.dataset_to_set, d.name)) continue;
        enable(d.kind == dm::DataSetKind::Enumerated ? "rule_4" : "rule_5");
      }
    }
  }

  void scan_constants() {
    for (const dm::DomainModel& m : chain_) {
      if (!translated(st_.domainmodel_to_component, m.name)) continue;
      for (const dm::Concept& c : m.concepts)
        if (!c.parent.empty() && !translated(st_.concept_to_constant, c.name) &&
            concept_has_image(c.parent))
          enable("rule_6");
      for (const dm::Individual& ind : m.individuals)
        if (!translated(st_.individual_to_constant, ind.name) &&
            concept_has_image(ind.type))
          enable("rule_7");
      for (const dm::DataValue& dv : m.data_values) {
        const dm::DataSet* ds = idx_.find_dataset(dv.dataset);
        if (ds && ds->kind == dm::DataSetKind::Custom &&
            translated(st_.custom_to_abstract_set, dv.dataset) &&
            !translated(st_.datavalue_to_constant, datavalue_key(dv.dataset, dv.lexical)))
          enable("rule_8");
      }
    }
  }

  void scan_typing() {
    for (const dm::DomainModel& m : chain_) {
      if (!translated(st_.domainmodel_to_component, m.name)) continue;
      for (const dm::Relation& r : m.relations) {
        if (translated(st_.relation_to_type_constant, r.name)) continue;
        if (concept_has_image(r.domain) && concept_has_image(r.range))
          enable(r.is_variable ? "rule_13" : "rule_10");
      }
      for (const dm::Attribute& a : m.attributes) {
        if (translated(st_.attribute_to_type_constant, a.name)) continue;
        if (concept_has_image(a.domain) && translated(st_.dataset_to_set, a.range))
          enable(a.is_variable ? "rule_13_attribute" : "rule_14");
      }
    }
  }

  void scan_maplets() {
    for (const dm::DomainModel& m : chain_) {
      for (const dm::RelationMaplet& rm : m.relation_maplets) {
        if (translated(st_.relationmaplet_to_constant,
                       relation_maplet_key(rm.relation, rm.antecedent, rm.image)))
          continue;
        bool rel_ok = translated(st_.relation_to_constant, rm.relation) ||
                      translated(st_.relation_to_variable, rm.relation);
        if (rel_ok && translated(st_.individual_to_constant, rm.antecedent) &&
            translated(st_.individual_to_constant, rm.image))
          enable("rule_11_1");
      }
      for (const dm::AttributeMaplet& am : m.attribute_maplets) {
        if (translated(st_.attributemaplet_to_constant,
                       attribute_maplet_key(am.attribute, am.antecedent, am.image)))
          continue;
        const dm::Attribute* at = idx_.find_attribute(am.attribute);
        if (!at) continue;
        bool attr_ok = translated(st_.attribute_to_constant, am.attribute) ||
                       translated(st_.attribute_to_variable, am.attribute);
        if (!attr_ok || !translated(st_.individual_to_constant, am.antecedent))
          continue;
        if (translated(st_.datavalue_to_constant, datavalue_key(at->range, am.image)))
          enable("rule_11_2_1");
        else if (translated(st_.datavalue_to_setitem, datavalue_key(at->range, am.image)))
          enable("rule_11_2_2");
      }
    }
  }

  void scan_closures() {
    for (const dm::DomainModel& m : chain_) {
      const bs::Component* comp = component_of_model(m.name);
      for (const dm::Relation& r : m.relations) {
        auto maplets = idx_.maplets_of_relation(r.name);
        bool all = std::all_of(
            maplets.begin(), maplets.end(), [&](const dm::RelationMaplet* rm) {
              return translated(st_.relationmaplet_to_constant,
                                relation_maplet_key(r.name, rm->antecedent, rm->image));
            });
        if (translated(st_.relation_to_constant, r.name) && all && comp) {
          if (!setof_property_exists(*comp, bs::RefKind::Constant,
                                     st_.relation_to_constant.at(r.name)))
            enable("rule_12_1");
        }
        if (translated(st_.relation_to_variable, r.name) && all && comp) {
          if (!setof_init_exists(*comp, st_.relation_to_variable.at(r.name)))
            enable("rule_12_2");
        }
      }
      for (const dm::Attribute& a : m.attributes) {
        auto maplets = idx_.maplets_of_attribute(a.name);
        bool all = std::all_of(
            maplets.begin(), maplets.end(), [&](const dm::AttributeMaplet* am) {
              return translated(st_.attributemaplet_to_constant,
                                attribute_maplet_key(a.name, am->antecedent, am->image));
            });
        if (translated(st_.attribute_to_constant, a.name) && all && comp) {
          if (!setof_property_exists(*comp, bs::RefKind::Constant,
                                     st_.attribute_to_constant.at(a.name)))
            enable("rule_15_1");
        }
        if (translated(st_.attribute_to_variable, a.name) && all && comp) {
          if (!setof_init_exists(*comp, st_.attribute_to_variable.at(a.name)))
            enable("rule_15_2");
        }
      }
      // closure of a constant concept's extent, the analogue of rule 12
      for (const dm::Concept& c : m.concepts) {
        if (c.is_variable || !concept_has_image(c.name) || !comp) continue;
        auto inds = idx_.individuals_of(c.name);
        if (inds.empty()) continue;
        bool all = std::all_of(inds.begin(), inds.end(), [&](const dm::Individual* i) {
          return translated(st_.individual_to_constant, i->name);
        });
        if (!all) continue;
        bool is_set = translated(st_.concept_to_abstract_set, c.name);
        if (!setof_property_exists(*comp,
                                   is_set ? bs::RefKind::SetName : bs::RefKind::Constant,
                                   concept_image_name(c.name)))
          enable("concept_extent_closure");
      }
    }
  }

  bool setof_property_exists(const bs::Component& c, bs::RefKind kind,
                             const std::string& name) const {
    for (const bs::Formula& f : c.properties) {
      if (f.op != Operator::Equal2SetOf || f.operands.empty()) continue;
      const ElemRef* r = std::get_if<ElemRef>(&f.operands[0]);
      if (r && r->kind == kind && r->name == name) return true;
    }
    return false;
  }

  bool setof_init_exists(const bs::Component& c, const std::string& var) const {
    for (const bs::InitialisationAction& ia : c.init)
      if (ia.target == var && ia.op == bs::InitOp::BecomeEqualSetOf) return true;
    return false;
  }

  void scan_characteristics() {
    for (const dm::DomainModel& m : chain_) {
      for (const dm::Relation& r : m.relations) {
        if (!translated(st_.relation_to_constant, r.name)) continue;
        if (r.is_transitive &&
            !st_.characteristic_to_formula.count(characteristic_key(r.name, "transitive")))
          enable("rule_16_1");
        if (r.is_symmetric &&
            !st_.characteristic_to_formula.count(characteristic_key(r.name, "symmetric")))
          enable("rule_16_2");
      }
    }
  }

  bool card_formula_exists(const bs::Component& c, const std::string& rel,
                           bool inverse, CardCmp cmp, unsigned bound) const {
    auto match = [&](const bs::Formula& f) {
      if (f.op != Operator::CardinalityForAll || f.operands.size() != 1) return false;
      const auto* p = std::get_if<bs::CardinalityForAllPayload>(&f.operands[0]);
      return p && p->relation.name == rel && p->inverse == inverse &&
             p->cmp == cmp && p->bound == bound;
    };
    return std::any_of(c.properties.begin(), c.properties.end(), match) ||
           std::any_of(c.invariants.begin(), c.invariants.end(), match);
  }

  void scan_cardinalities() {
    for (const dm::DomainModel& m : chain_) {
      const bs::Component* comp = component_of_model(m.name);
      if (!comp) continue;
      for (const dm::Relation& r : m.relations) {
        if (!translated(st_.relation_to_type_constant, r.name)) continue;
        std::string rel = translated(st_.relation_to_constant, r.name)
                              ? st_.relation_to_constant.at(r.name)
                              : st_.relation_to_variable.at(r.name);
        auto needed = [&](const dm::Cardinality& card, bool inverse) {
          if (card.trivial()) return;
          if (!card.is_star() && *card.max == card.min) {
            if (!card_formula_exists(*comp, rel, inverse, CardCmp::Eq, card.min))
              enable("cardinality_translation");
            return;
          }
          if (card.min > 0 &&
              !card_formula_exists(*comp, rel, inverse, CardCmp::Ge, card.min))
            enable("cardinality_translation");
          if (!card.is_star() &&
              !card_formula_exists(*comp, rel, inverse, CardCmp::Le, *card.max))
            enable("cardinality_translation");
        };
        needed(r.range_card, false);
        needed(r.domain_card, true);
      }
    }
  }

  void scan_concept_variables() {
    for (const dm::DomainModel& m : chain_) {
      for (const dm::Concept& c : m.concepts) {
        if (!c.is_variable || translated(st_.concept_to_variable, c.name)) continue;
        if (!concept_has_image(c.name)) continue;
        auto inds = idx_.individuals_of(c.name);
        bool all = std::all_of(inds.begin(), inds.end(), [&](const dm::Individual* i) {
          return translated(st_.individual_to_constant, i->name);
        });
        if (all) enable("rule_9");
      }
    }
  }

  void scan_predicates() {
    for (const dm::DomainModel& m : chain_) {
      const bs::Component* comp = component_of_model(m.name);
      if (!comp) continue;
      for (const dm::Predicate& p : m.predicates) {
        const auto& formulas = p.kind == dm::PredicateKind::Plain
                                   ? comp->properties
                                   : comp->invariants;
        bool found = std::any_of(
            formulas.begin(), formulas.end(), [&](const bs::Formula& f) {
              if (f.op != Operator::Raw || f.operands.size() != 1) return false;
              const auto* t = std::get_if<bs::RawText>(&f.operands[0]);
              return t && t->text == p.text;
            });
        if (!found) enable("predicate_passthrough");
      }
    }
  }

  const dm::Chain& chain_;
  dm::ChainIndex idx_;
  std::span<const bs::Component> comps_;
  const CorrespondenceStore& st_;
  std::vector<std::string> enabled_;
};

}  // namespace

Report check_store(const CorrespondenceStore& store, const dm::Chain& chain,
                   std::span<const bs::Component> components) {
  return StoreChecker(store, chain, components).run();
}

std::vector<std::string> enabled_rules(const dm::Chain& chain,
                                       std::span<const bs::Component> components,
                                       const CorrespondenceStore& store) {
  return GuardScan(chain, components, store).run();
}

}  // namespace ontb
