#include "core/domain.hpp"

#include <algorithm>
#include <set>

namespace ontb::dm {

bool is_default_dataset(std::string_view name) {
  return std::find(kDefaultDataSets.begin(), kDefaultDataSets.end(), name) !=
         kDefaultDataSets.end();
}

std::string path_of(const DomainModel& m) { return m.name; }

std::string path_of(const DomainModel& m, const char* kind, const std::string& name) {
  return m.name + "/" + kind + "/" + name;
}

ChainIndex::ChainIndex(const Chain& chain) : chain_(&chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const DomainModel& m = chain[i];
    models_.emplace(m.name, i);
    for (std::size_t k = 0; k < m.concepts.size(); ++k)
      concepts_.emplace(m.concepts[k].name, Loc{i, k});
    for (std::size_t k = 0; k < m.relations.size(); ++k)
      relations_.emplace(m.relations[k].name, Loc{i, k});
    for (std::size_t k = 0; k < m.attributes.size(); ++k)
      attributes_.emplace(m.attributes[k].name, Loc{i, k});
    for (std::size_t k = 0; k < m.data_sets.size(); ++k)
      datasets_.emplace(m.data_sets[k].name, Loc{i, k});
    for (std::size_t k = 0; k < m.individuals.size(); ++k)
      individuals_.emplace(m.individuals[k].name, Loc{i, k});
  }
}

std::optional<std::size_t> ChainIndex::model_index(std::string_view name) const {
  auto it = models_.find(name);
  if (it == models_.end()) return std::nullopt;
  return it->second;
}

namespace {
template <typename Map>
std::optional<std::size_t> model_of(const Map& map, std::string_view name) {
  auto it = map.find(name);
  if (it == map.end()) return std::nullopt;
  return it->second.model;
}
}  // namespace

std::optional<std::size_t> ChainIndex::model_of_concept(std::string_view n) const {
  return model_of(concepts_, n);
}
std::optional<std::size_t> ChainIndex::model_of_relation(std::string_view n) const {
  return model_of(relations_, n);
}
std::optional<std::size_t> ChainIndex::model_of_attribute(std::string_view n) const {
  return model_of(attributes_, n);
}
std::optional<std::size_t> ChainIndex::model_of_dataset(std::string_view n) const {
  return model_of(datasets_, n);
}
std::optional<std::size_t> ChainIndex::model_of_individual(std::string_view n) const {
  return model_of(individuals_, n);
}

const Concept* ChainIndex::find_concept(std::string_view name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) return nullptr;
  return &(*chain_)[it->second.model].concepts[it->second.pos];
}

const Relation* ChainIndex::find_relation(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) return nullptr;
  return &(*chain_)[it->second.model].relations[it->second.pos];
}

const Attribute* ChainIndex::find_attribute(std::string_view name) const {
  auto it = attributes_.find(name);
  if (it == attributes_.end()) return nullptr;
  return &(*chain_)[it->second.model].attributes[it->second.pos];
}

const DataSet* ChainIndex::find_dataset(std::string_view name) const {
  auto it = datasets_.find(name);
  if (it == datasets_.end()) return nullptr;
  return &(*chain_)[it->second.model].data_sets[it->second.pos];
}

const Individual* ChainIndex::find_individual(std::string_view name) const {
  auto it = individuals_.find(name);
  if (it == individuals_.end()) return nullptr;
  return &(*chain_)[it->second.model].individuals[it->second.pos];
}

std::vector<const Individual*> ChainIndex::individuals_of(
    std::string_view concept_name) const {
  std::vector<const Individual*> out;
  for (const DomainModel& m : *chain_)
    for (const Individual& ind : m.individuals)
      if (ind.type == concept_name) out.push_back(&ind);
  return out;
}

std::vector<const RelationMaplet*> ChainIndex::maplets_of_relation(
    std::string_view name) const {
  std::vector<const RelationMaplet*> out;
  for (const DomainModel& m : *chain_)
    for (const RelationMaplet& rm : m.relation_maplets)
      if (rm.relation == name) out.push_back(&rm);
  return out;
}

std::vector<const AttributeMaplet*> ChainIndex::maplets_of_attribute(
    std::string_view name) const {
  std::vector<const AttributeMaplet*> out;
  for (const DomainModel& m : *chain_)
    for (const AttributeMaplet& am : m.attribute_maplets)
      if (am.attribute == name) out.push_back(&am);
  return out;
}

bool ChainIndex::visible_from(std::size_t model, std::size_t ancestor) const {
  std::size_t cur = model;
  for (;;) {
    if (cur == ancestor) return true;
    const std::string& p = (*chain_)[cur].parent;
    if (p.empty()) return false;
    auto idx = model_index(p);
    if (!idx || *idx >= cur) return false;  // malformed chain, bail out
    cur = *idx;
  }
}

namespace {

class Validator {
 public:
  Validator(const Chain& chain, const PositionIndex* positions)
      : chain_(chain), pos_(positions) {}

  Report run() {
    index_models();
    if (!report_.ok()) return report_;
    build_scopes();
    for (std::size_t i = 0; i < chain_.size(); ++i) check_model(i);
    return report_;
  }

 private:
  struct Named {
    std::string kind;
    std::string path;
  };
  // visible names per model: name -> declaring element
  using Scope = std::map<std::string, Named>;

  void error(std::string code, const std::string& path, std::string message) {
    Position p;
    if (pos_) {
      auto it = pos_->find(path);
      if (it != pos_->end()) p = it->second;
    }
    report_.error(std::move(code), path, std::move(message), p.line, p.col);
  }

  void warn(std::string code, const std::string& path, std::string message) {
    Position p;
    if (pos_) {
      auto it = pos_->find(path);
      if (it != pos_->end()) p = it->second;
    }
    report_.warn(std::move(code), path, std::move(message), p.line, p.col);
  }

  void index_models() {
    std::map<std::string, std::size_t> models;
    std::set<std::string> refined;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      const DomainModel& m = chain_[i];
      if (models.count(m.name)) {
        error("duplicate-name", path_of(m), "model '" + m.name + "' declared twice");
        continue;
      }
      models.emplace(m.name, i);
      if (!m.parent.empty()) {
        auto it = models.find(m.parent);
        if (it == models.end()) {
          error("unresolved-reference", path_of(m),
                "parent model '" + m.parent + "' is not declared before '" +
                    m.name + "'");
        } else if (!refined.insert(m.parent).second) {
          // Refinement edges form a total injection on the B side; a model
          // refined by two children cannot be translated.
          error("duplicate-refinement", path_of(m),
                "model '" + m.parent + "' already has a refining child");
        }
      }
    }
    model_index_ = std::move(models);
  }

  void declare(Scope& scope, const std::string& name, const char* kind,
               const std::string& path) {
    if (is_default_dataset(name)) {
      error("duplicate-name", path,
            std::string(kind) + " '" + name + "' collides with a default data set");
      return;
    }
    auto [it, inserted] = scope.emplace(name, Named{kind, path});
    if (!inserted)
      error("duplicate-name", path,
            std::string(kind) + " '" + name + "' collides with " +
                it->second.kind + " '" + name + "' (" + it->second.path + ")");
  }

  void build_scopes() {
    scopes_.resize(chain_.size());
    // model names live in the same flat namespace as everything else
    Scope model_names;
    for (const DomainModel& m : chain_)
      model_names.emplace(m.name, Named{"model", path_of(m)});
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      const DomainModel& m = chain_[i];
      Scope scope;
      if (!m.parent.empty()) {
        auto it = model_index_.find(m.parent);
        if (it != model_index_.end() && it->second < i) scope = scopes_[it->second];
      }
      for (const auto& [name, named] : model_names)
        scope.emplace(name, named);  // keep first; duplicates already reported
      for (const auto& c : m.concepts)
        declare(scope, c.name, "concept", path_of(m, "concept", c.name));
      for (const auto& d : m.data_sets)
        declare(scope, d.name, "dataset", path_of(m, "dataset", d.name));
      for (const auto& r : m.relations)
        declare(scope, r.name, "relation", path_of(m, "relation", r.name));
      for (const auto& a : m.attributes)
        declare(scope, a.name, "attribute", path_of(m, "attribute", a.name));
      for (const auto& ind : m.individuals)
        declare(scope, ind.name, "individual", path_of(m, "individual", ind.name));
      scopes_[i] = std::move(scope);
    }
  }

  bool visible(std::size_t model, const std::string& name, const char* kind) const {
    auto it = scopes_[model].find(name);
    return it != scopes_[model].end() && it->second.kind == kind;
  }

  void check_model(std::size_t i) {
    const DomainModel& m = chain_[i];
    check_concepts(i, m);
    check_datasets(m);
    check_relations(i, m);
    check_attributes(i, m);
    check_individuals(i, m);
    check_relation_maplets(i, m);
    check_attribute_maplets(i, m);
  }

  void check_concepts(std::size_t i, const DomainModel& m) {
    for (const Concept& c : m.concepts) {
      const std::string path = path_of(m, "concept", c.name);
      if (c.parent.empty()) continue;
      if (!visible(i, c.parent, "concept")) {
        error("unresolved-reference", path,
              "parent concept '" + c.parent + "' not found in visible chain");
        continue;
      }
      // walk the parent chain; names are unique so cycles revisit a name
      std::set<std::string> seen{c.name};
      const Concept* cur = &c;
      while (!cur->parent.empty()) {
        if (!seen.insert(cur->parent).second) {
          error("cyclic-parent", path,
                "concept '" + c.name + "' has a cyclic parent chain");
          break;
        }
        const Concept* next = nullptr;
        for (const DomainModel& mm : chain_)
          for (const Concept& cc : mm.concepts)
            if (cc.name == cur->parent) next = &cc;
        if (!next) break;  // unresolved, reported at its own declaration
        cur = next;
      }
    }
  }

  void check_datasets(const DomainModel& m) {
    for (const DataSet& d : m.data_sets) {
      const std::string path = path_of(m, "dataset", d.name);
      if (d.kind == DataSetKind::Enumerated) {
        if (d.elements.empty())
          error("duplicate-name", path, "enumerated data set has no elements");
        std::set<std::string> seen;
        for (const std::string& e : d.elements)
          if (!seen.insert(e).second)
            error("duplicate-name", path,
                  "data value \"" + e + "\" listed twice in '" + d.name + "'");
      }
    }
  }

  void check_relations(std::size_t i, const DomainModel& m) {
    for (const Relation& r : m.relations) {
      const std::string path = path_of(m, "relation", r.name);
      if (!visible(i, r.domain, "concept"))
        error("unresolved-reference", path,
              "domain concept '" + r.domain + "' not found in visible chain");
      if (!visible(i, r.range, "concept"))
        error("unresolved-reference", path,
              "range concept '" + r.range + "' not found in visible chain");
      if (!r.domain_card.valid())
        error("cardinality-violation", path,
              "domain cardinality " + card_text(r.domain_card) +
                  " has max < min");
      if (!r.range_card.valid())
        error("cardinality-violation", path,
              "range cardinality " + card_text(r.range_card) + " has max < min");
      if (r.is_asymmetric)
        warn("unhandled-characteristic", path,
             "'asymmetric' has no translation rule and is ignored");
      if (r.is_reflexive)
        warn("unhandled-characteristic", path,
             "'reflexive' has no translation rule and is ignored");
      if (r.is_irreflexive)
        warn("unhandled-characteristic", path,
             "'irreflexive' has no translation rule and is ignored");
    }
  }

  static std::string card_text(const Cardinality& c) {
    return std::to_string(c.min) + ".." +
           (c.is_star() ? std::string("*") : std::to_string(*c.max));
  }

  void check_attributes(std::size_t i, const DomainModel& m) {
    for (const Attribute& a : m.attributes) {
      const std::string path = path_of(m, "attribute", a.name);
      if (!visible(i, a.domain, "concept"))
        error("unresolved-reference", path,
              "domain concept '" + a.domain + "' not found in visible chain");
      if (!is_default_dataset(a.range) && !visible(i, a.range, "dataset"))
        error("unresolved-reference", path,
              "range data set '" + a.range + "' not found in visible chain");
    }
  }

  void check_individuals(std::size_t i, const DomainModel& m) {
    for (const Individual& ind : m.individuals) {
      if (!visible(i, ind.type, "concept"))
        error("unresolved-reference", path_of(m, "individual", ind.name),
              "concept '" + ind.type + "' not found in visible chain");
    }
  }

  const Concept* concept_by_name(const std::string& name) const {
    for (const DomainModel& mm : chain_)
      for (const Concept& c : mm.concepts)
        if (c.name == name) return &c;
    return nullptr;
  }

  const Individual* individual_by_name(const std::string& name) const {
    for (const DomainModel& mm : chain_)
      for (const Individual& ind : mm.individuals)
        if (ind.name == name) return &ind;
    return nullptr;
  }

  void check_relation_maplets(std::size_t i, const DomainModel& m) {
    int k = 0;
    for (const RelationMaplet& rm : m.relation_maplets) {
      const std::string path =
          m.name + "/maplet/" + rm.relation + "[" + std::to_string(k++) + "]";
      if (!visible(i, rm.relation, "relation")) {
        error("unresolved-reference", path,
              "relation '" + rm.relation + "' not found in visible chain");
        continue;
      }
      const Relation* r = nullptr;
      for (const DomainModel& mm : chain_)
        for (const Relation& rr : mm.relations)
          if (rr.name == rm.relation) r = &rr;
      const Individual* a = individual_by_name(rm.antecedent);
      const Individual* b = individual_by_name(rm.image);
      if (!a || !visible(i, rm.antecedent, "individual")) {
        error("unresolved-reference", path,
              "individual '" + rm.antecedent + "' not found in visible chain");
        continue;
      }
      if (!b || !visible(i, rm.image, "individual")) {
        error("unresolved-reference", path,
              "individual '" + rm.image + "' not found in visible chain");
        continue;
      }
      if (!r) continue;
      // inv1_85 / inv1_86: maplet endpoints typed exactly by domain and range
      if (a->type != r->domain)
        error("maplet-type-mismatch", path,
              "antecedent '" + rm.antecedent + "' has type '" + a->type +
                  "' but relation domain is '" + r->domain + "'");
      if (b->type != r->range)
        error("maplet-type-mismatch", path,
              "image '" + rm.image + "' has type '" + b->type +
                  "' but relation range is '" + r->range + "'");
    }
  }

  void check_attribute_maplets(std::size_t i, const DomainModel& m) {
    int k = 0;
    for (const AttributeMaplet& am : m.attribute_maplets) {
      const std::string path =
          m.name + "/attr_maplet/" + am.attribute + "[" + std::to_string(k++) + "]";
      if (!visible(i, am.attribute, "attribute")) {
        error("unresolved-reference", path,
              "attribute '" + am.attribute + "' not found in visible chain");
        continue;
      }
      const Attribute* a = nullptr;
      for (const DomainModel& mm : chain_)
        for (const Attribute& aa : mm.attributes)
          if (aa.name == am.attribute) a = &aa;
      const Individual* ant = individual_by_name(am.antecedent);
      if (!ant || !visible(i, am.antecedent, "individual")) {
        error("unresolved-reference", path,
              "individual '" + am.antecedent + "' not found in visible chain");
        continue;
      }
      if (!a) continue;
      // inv1_87: antecedent typed exactly by the attribute domain
      if (ant->type != a->domain)
        error("maplet-type-mismatch", path,
              "antecedent '" + am.antecedent + "' has type '" + ant->type +
                  "' but attribute domain is '" + a->domain + "'");
      // inv1_88: the image must be a value of the range data set
      if (is_default_dataset(a->range)) continue;  // any lexical form allowed
      const DataSet* ds = nullptr;
      for (const DomainModel& mm : chain_)
        for (const DataSet& dd : mm.data_sets)
          if (dd.name == a->range) ds = &dd;
      if (!ds) continue;  // unresolved range, reported at the attribute
      if (ds->kind == DataSetKind::Enumerated &&
          std::find(ds->elements.begin(), ds->elements.end(), am.image) ==
              ds->elements.end())
        error("maplet-type-mismatch", path,
              "\"" + am.image + "\" is not a value of enumerated data set '" +
                  a->range + "'");
    }
  }

  const Chain& chain_;
  const PositionIndex* pos_;
  Report report_;
  std::map<std::string, std::size_t> model_index_;
  std::vector<Scope> scopes_;
};

}  // namespace

Report validate(const Chain& chain, const PositionIndex* positions) {
  return Validator(chain, positions).run();
}

}  // namespace ontb::dm
