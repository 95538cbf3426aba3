#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/diag.hpp"

// SysML/KAOS-style domain metamodel: ontologies organized as a chain of
// models, each refining its parent. All values are immutable after parsing;
// cross-references are by name, resolved against the visible chain (the model
// plus its transitive parents).
namespace ontb::dm {

// Built-in data sets, pre-mapped to B built-in sets of the same name.
inline constexpr std::array<std::string_view, 5> kDefaultDataSets = {
    "NATURAL", "INTEGER", "FLOAT", "BOOL", "STRING"};

bool is_default_dataset(std::string_view name);

// min..max with max possibly unbounded (the DSL's `*`).
struct Cardinality {
  unsigned min = 0;
  std::optional<unsigned> max;  // nullopt = unbounded

  bool is_star() const { return !max.has_value(); }
  bool valid() const { return is_star() || *max >= min; }
  // 0..* constrains nothing and produces no formula.
  bool trivial() const { return min == 0 && is_star(); }

  bool operator==(const Cardinality&) const = default;
};

struct Concept {
  std::string name;
  bool is_variable = false;
  std::string parent;  // empty = no parent concept

  bool operator==(const Concept&) const = default;
};

struct Relation {
  std::string name;
  bool is_variable = false;
  std::string domain;
  std::string range;
  Cardinality domain_card;
  Cardinality range_card;
  bool is_transitive = false;
  bool is_symmetric = false;
  bool is_asymmetric = false;
  bool is_reflexive = false;
  bool is_irreflexive = false;

  bool operator==(const Relation&) const = default;
};

struct Attribute {
  std::string name;
  bool is_variable = false;
  bool is_functional = true;
  std::string domain;  // concept
  std::string range;   // data set name or one of kDefaultDataSets

  bool operator==(const Attribute&) const = default;
};

enum class DataSetKind { Custom, Enumerated };

struct DataSet {
  std::string name;
  DataSetKind kind = DataSetKind::Custom;
  std::vector<std::string> elements;  // lexical forms, enumerated only

  bool operator==(const DataSet&) const = default;
};

struct Individual {
  std::string name;
  std::string type;  // concept

  bool operator==(const Individual&) const = default;
};

struct DataValue {
  std::string lexical;
  std::string dataset;

  bool operator==(const DataValue&) const = default;
};

struct RelationMaplet {
  std::string relation;
  std::string antecedent;  // individual
  std::string image;       // individual

  bool operator==(const RelationMaplet&) const = default;
};

struct AttributeMaplet {
  std::string attribute;
  std::string antecedent;  // individual
  std::string image;       // lexical form of a data value

  bool operator==(const AttributeMaplet&) const = default;
};

enum class PredicateKind { Plain, Gluing };

// Horn-clause constraint kept verbatim; never parsed.
struct Predicate {
  PredicateKind kind = PredicateKind::Plain;
  std::string text;

  bool operator==(const Predicate&) const = default;
};

struct DomainModel {
  std::string name;
  std::string parent;  // empty = root
  std::vector<Concept> concepts;
  std::vector<Relation> relations;
  std::vector<Attribute> attributes;
  std::vector<DataSet> data_sets;
  std::vector<Individual> individuals;
  std::vector<DataValue> data_values;
  std::vector<RelationMaplet> relation_maplets;
  std::vector<AttributeMaplet> attribute_maplets;
  std::vector<Predicate> predicates;

  bool operator==(const DomainModel&) const = default;
};

using Chain = std::vector<DomainModel>;

// Element paths used in diagnostics and as stable keys.
std::string path_of(const DomainModel& m);
std::string path_of(const DomainModel& m, const char* kind, const std::string& name);

// Source positions recorded by the parser, keyed by element path.
struct Position {
  int line = 0;
  int col = 0;
};
using PositionIndex = std::map<std::string, Position>;

// Name lookup over a validated chain. Names are unique per visible chain, so
// one flat table per kind is enough once validation has passed.
class ChainIndex {
 public:
  explicit ChainIndex(const Chain& chain);

  const Chain& chain() const { return *chain_; }

  std::optional<std::size_t> model_index(std::string_view name) const;
  // Index of the model an element is declared in, or nullopt.
  std::optional<std::size_t> model_of_concept(std::string_view name) const;
  std::optional<std::size_t> model_of_relation(std::string_view name) const;
  std::optional<std::size_t> model_of_attribute(std::string_view name) const;
  std::optional<std::size_t> model_of_dataset(std::string_view name) const;
  std::optional<std::size_t> model_of_individual(std::string_view name) const;

  const Concept* find_concept(std::string_view name) const;
  const Relation* find_relation(std::string_view name) const;
  const Attribute* find_attribute(std::string_view name) const;
  const DataSet* find_dataset(std::string_view name) const;  // declared only
  const Individual* find_individual(std::string_view name) const;

  // Chain-wide, in (model, declaration) order.
  std::vector<const Individual*> individuals_of(std::string_view concept_name) const;
  std::vector<const RelationMaplet*> maplets_of_relation(std::string_view name) const;
  std::vector<const AttributeMaplet*> maplets_of_attribute(std::string_view name) const;

  // True when `ancestor` is `model` or one of its transitive parents.
  bool visible_from(std::size_t model, std::size_t ancestor) const;

 private:
  const Chain* chain_;
  std::map<std::string, std::size_t, std::less<>> models_;
  struct Loc {
    std::size_t model;
    std::size_t pos;
  };
  std::map<std::string, Loc, std::less<>> concepts_, relations_, attributes_,
      datasets_, individuals_;
};

// Checks the metamodel invariants: resolvable references, chain-unique names,
// acyclic parent chains, cardinality bounds and maplet typing (inv1_85-88).
// Unhandled relation characteristics surface as warnings.
Report validate(const Chain& chain, const PositionIndex* positions = nullptr);

}  // namespace ontb::dm
