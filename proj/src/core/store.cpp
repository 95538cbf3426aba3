#include "core/store.hpp"

#include "json.hpp"

namespace ontb {

std::vector<CorrespondenceStore::NamedMap> CorrespondenceStore::maps() const {
  return {
      {"domainmodel_to_component", "inv0_5", &domainmodel_to_component},
      {"concept_to_abstract_set", "inv1_23", &concept_to_abstract_set},
      {"concept_to_constant", "inv1_31", &concept_to_constant},
      {"concept_to_variable", "inv1_46", &concept_to_variable},
      {"dataset_to_set", "inv1_101", &dataset_to_set},
      {"enumerated_to_enumerated_set", "inv1_24", &enumerated_to_enumerated_set},
      {"custom_to_abstract_set", "inv1_27", &custom_to_abstract_set},
      {"default_to_default_set", "inv1_29", &default_to_default_set},
      {"datavalue_to_setitem", "inv1_25", &datavalue_to_setitem},
      {"datavalue_to_constant", "inv1_45", &datavalue_to_constant},
      {"individual_to_constant", "inv1_44", &individual_to_constant},
      {"relation_to_type_constant", "inv1_89", &relation_to_type_constant},
      {"relation_to_constant", "inv1_90", &relation_to_constant},
      {"relation_to_variable", "inv1_91", &relation_to_variable},
      {"attribute_to_type_constant", "inv1_93", &attribute_to_type_constant},
      {"attribute_to_constant", "inv1_94", &attribute_to_constant},
      {"attribute_to_variable", "inv1_95", &attribute_to_variable},
      {"relationmaplet_to_constant", "inv1_100", &relationmaplet_to_constant},
      {"attributemaplet_to_constant", "inv1_102", &attributemaplet_to_constant},
      {"characteristic_to_formula", "inv1_99", &characteristic_to_formula},
  };
}

std::string store_to_json(const CorrespondenceStore& store) {
  nlohmann::ordered_json doc;
  for (const auto& nm : store.maps()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [k, v] : *nm.map)
      arr.push_back(nlohmann::ordered_json::array({k, v}));
    doc[nm.name] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

StoreLoadResult store_from_json(const std::string& json_text) {
  StoreLoadResult result;
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    result.report.error("schema", "", "store document is not a JSON object");
    return result;
  }
  CorrespondenceStore& st = result.store;
  std::vector<std::pair<const char*, CorrespondenceStore::Map*>> maps = {
      {"domainmodel_to_component", &st.domainmodel_to_component},
      {"concept_to_abstract_set", &st.concept_to_abstract_set},
      {"concept_to_constant", &st.concept_to_constant},
      {"concept_to_variable", &st.concept_to_variable},
      {"dataset_to_set", &st.dataset_to_set},
      {"enumerated_to_enumerated_set", &st.enumerated_to_enumerated_set},
      {"custom_to_abstract_set", &st.custom_to_abstract_set},
      {"default_to_default_set", &st.default_to_default_set},
      {"datavalue_to_setitem", &st.datavalue_to_setitem},
      {"datavalue_to_constant", &st.datavalue_to_constant},
      {"individual_to_constant", &st.individual_to_constant},
      {"relation_to_type_constant", &st.relation_to_type_constant},
      {"relation_to_constant", &st.relation_to_constant},
      {"relation_to_variable", &st.relation_to_variable},
      {"attribute_to_type_constant", &st.attribute_to_type_constant},
      {"attribute_to_constant", &st.attribute_to_constant},
      {"attribute_to_variable", &st.attribute_to_variable},
      {"relationmaplet_to_constant", &st.relationmaplet_to_constant},
      {"attributemaplet_to_constant", &st.attributemaplet_to_constant},
      {"characteristic_to_formula", &st.characteristic_to_formula},
  };
  for (auto& [name, map] : maps) {
    if (!doc.contains(name)) continue;
    const auto& arr = doc[name];
    if (!arr.is_array()) {
      result.report.error("schema", std::string("/") + name, "expected an array");
      return result;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        result.report.error("schema",
                            std::string("/") + name + "/" + std::to_string(i),
                            "expected a [domain_name, b_name] pair");
        return result;
      }
      map->emplace(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return result;
}

std::string relation_maplet_key(const std::string& relation,
                                const std::string& antecedent,
                                const std::string& image) {
  return relation + "/" + antecedent + "->" + image;
}

std::string attribute_maplet_key(const std::string& attribute,
                                 const std::string& antecedent,
                                 const std::string& image) {
  return attribute + "/" + antecedent + "->" + image;
}

std::string datavalue_key(const std::string& dataset, const std::string& lexical) {
  return dataset + "/" + lexical;
}

std::string characteristic_key(const std::string& relation, const char* characteristic) {
  return relation + "#" + characteristic;
}

}  // namespace ontb
