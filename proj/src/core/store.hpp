#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/diag.hpp"

namespace ontb {

// The partial injections linking domain elements to the B System elements
// that realize them. Keys are chain-unique domain names; maplet keys are
// "<relation>/<antecedent>-><image>", data value keys "<dataset>/<lexical>",
// characteristic keys "<relation>#transitive|symmetric". Values are B names;
// maplets map to their inline "a |-> b" literal and characteristics to the
// rendered characteristic formula.
struct CorrespondenceStore {
  using Map = std::map<std::string, std::string>;

  Map domainmodel_to_component;
  Map concept_to_abstract_set;
  Map concept_to_constant;
  Map concept_to_variable;
  Map dataset_to_set;
  Map enumerated_to_enumerated_set;  // subset of dataset_to_set
  Map custom_to_abstract_set;        // subset of dataset_to_set
  Map default_to_default_set;        // subset of dataset_to_set
  Map datavalue_to_setitem;
  Map datavalue_to_constant;
  Map individual_to_constant;
  Map relation_to_type_constant;
  Map relation_to_constant;
  Map relation_to_variable;
  Map attribute_to_type_constant;
  Map attribute_to_constant;
  Map attribute_to_variable;
  Map relationmaplet_to_constant;
  Map attributemaplet_to_constant;
  Map characteristic_to_formula;

  bool operator==(const CorrespondenceStore&) const = default;

  struct NamedMap {
    const char* name;
    const char* injectivity_tag;  // machine invariant class
    const Map* map;
  };
  // All maps with their JSON names and invariant tags, in a fixed order.
  std::vector<NamedMap> maps() const;
};

std::string store_to_json(const CorrespondenceStore& store);

struct StoreLoadResult {
  CorrespondenceStore store;
  Report report;
  bool ok() const { return report.ok(); }
};
StoreLoadResult store_from_json(const std::string& json_text);

// Key helpers shared by the translator, the checker and sync-back.
std::string relation_maplet_key(const std::string& relation,
                                const std::string& antecedent,
                                const std::string& image);
std::string attribute_maplet_key(const std::string& attribute,
                                 const std::string& antecedent,
                                 const std::string& image);
std::string datavalue_key(const std::string& dataset, const std::string& lexical);
std::string characteristic_key(const std::string& relation, const char* characteristic);

}  // namespace ontb
