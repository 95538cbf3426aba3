#include "core/canonical.hpp"

#include <map>

#include "json.hpp"

namespace ontb::canonical {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* ref_kind_name(bs::RefKind k) {
  switch (k) {
    case bs::RefKind::Constant: return "constant";
    case bs::RefKind::Variable: return "variable";
    case bs::RefKind::SetName: return "set";
    case bs::RefKind::SetItem: return "set_item";
  }
  return "?";
}

const char* cmp_name(bs::CardCmp c) {
  switch (c) {
    case bs::CardCmp::Eq: return "eq";
    case bs::CardCmp::Ge: return "ge";
    case bs::CardCmp::Le: return "le";
  }
  return "?";
}

ordered_json ref_json(const bs::ElemRef& r) {
  return ordered_json{{"ref_kind", ref_kind_name(r.kind)}, {"name", r.name}};
}

ordered_json operand_json(const bs::Operand& op) {
  if (const bs::ElemRef* r = std::get_if<bs::ElemRef>(&op)) return ref_json(*r);
  if (const bs::MapletPair* p = std::get_if<bs::MapletPair>(&op))
    return ordered_json{{"ref_kind", "maplet"},
                        {"antecedent", ref_json(p->antecedent)},
                        {"image", ref_json(p->image)}};
  if (const bs::RawText* t = std::get_if<bs::RawText>(&op))
    return ordered_json{{"ref_kind", "raw"}, {"text", t->text}};
  const auto& c = std::get<bs::CardinalityForAllPayload>(op);
  return ordered_json{{"ref_kind", "cardinality"},
                      {"relation", ref_json(c.relation)},
                      {"inverse", c.inverse},
                      {"over", ref_json(c.over)},
                      {"cmp", cmp_name(c.cmp)},
                      {"bound", c.bound}};
}

ordered_json formula_json(const bs::Formula& f) {
  ordered_json args = ordered_json::array();
  for (const auto& op : f.operands) args.push_back(operand_json(op));
  return ordered_json{{"op", bs::operator_name(f.op)}, {"args", std::move(args)}};
}

ordered_json component_json(const bs::Component& c) {
  ordered_json j;
  j["name"] = c.name;
  j["kind"] = c.kind == bs::ComponentKind::System ? "system" : "refinement";
  if (!c.refines.empty()) j["refines"] = c.refines;
  ordered_json sets = ordered_json::array();
  for (const bs::BSet& s : c.sets) {
    ordered_json js;
    js["name"] = s.name;
    switch (s.variant) {
      case bs::SetVariant::Abstract: js["variant"] = "abstract"; break;
      case bs::SetVariant::Enumerated:
        js["variant"] = "enumerated";
        js["items"] = s.items;
        break;
      case bs::SetVariant::Default: js["variant"] = "default"; break;
    }
    sets.push_back(std::move(js));
  }
  j["sets"] = std::move(sets);
  j["constants"] = c.constants;
  ordered_json props = ordered_json::array();
  for (const auto& f : c.properties) props.push_back(formula_json(f));
  j["properties"] = std::move(props);
  j["variables"] = c.variables;
  ordered_json invs = ordered_json::array();
  for (const auto& f : c.invariants) invs.push_back(formula_json(f));
  j["invariants"] = std::move(invs);
  ordered_json init = ordered_json::array();
  for (const auto& ia : c.init) {
    ordered_json ji;
    ji["target"] = ia.target;
    ji["op"] = ia.op == bs::InitOp::BecomeEqualSetOf ? "become_equal_set_of"
                                                     : "become_equal_empty_set";
    ordered_json args = ordered_json::array();
    for (const auto& a : ia.args) args.push_back(operand_json(a));
    ji["args"] = std::move(args);
    init.push_back(std::move(ji));
  }
  j["init"] = std::move(init);
  if (!c.events.empty()) {
    ordered_json evs = ordered_json::array();
    for (const auto& e : c.events) evs.push_back(e.name);
    j["events"] = std::move(evs);
  }
  return j;
}

class Loader {
 public:
  LoadResult run(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
      result_.report.error("schema", "", "document is not valid JSON");
      return std::move(result_);
    }
    if (!doc.is_object() || !doc.contains("components") ||
        !doc["components"].is_array()) {
      result_.report.error("schema", "/components",
                           "expected an object with a 'components' array");
      return std::move(result_);
    }
    const json& comps = doc["components"];
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::string base = "/components/" + std::to_string(i);
      load_component(comps[i], base);
      if (!result_.report.ok()) break;
    }
    return std::move(result_);
  }

 private:
  void fail(const std::string& path, const std::string& msg) {
    result_.report.error("schema", path, msg);
  }

  std::string require_string(const json& j, const char* key, const std::string& base) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
      fail(base + "/" + key, std::string("missing or non-string '") + key + "'");
      return {};
    }
    return j[key].get<std::string>();
  }

  bool load_ref(const json& j, const std::string& path, bs::ElemRef& out) {
    static const std::map<std::string, bs::RefKind> kinds = {
        {"constant", bs::RefKind::Constant},
        {"variable", bs::RefKind::Variable},
        {"set", bs::RefKind::SetName},
        {"set_item", bs::RefKind::SetItem}};
    std::string k = require_string(j, "ref_kind", path);
    auto it = kinds.find(k);
    if (it == kinds.end()) {
      fail(path + "/ref_kind", "unknown ref_kind '" + k + "'");
      return false;
    }
    out.kind = it->second;
    out.name = require_string(j, "name", path);
    return result_.report.ok();
  }

  bool load_operand(const json& j, const std::string& path, bs::Operand& out) {
    std::string k = require_string(j, "ref_kind", path);
    if (!result_.report.ok()) return false;
    if (k == "maplet") {
      bs::MapletPair p;
      if (!j.contains("antecedent") || !j.contains("image")) {
        fail(path, "maplet operand needs 'antecedent' and 'image'");
        return false;
      }
      if (!load_ref(j["antecedent"], path + "/antecedent", p.antecedent)) return false;
      if (!load_ref(j["image"], path + "/image", p.image)) return false;
      out = p;
      return true;
    }
    if (k == "raw") {
      bs::RawText t{require_string(j, "text", path)};
      out = t;
      return result_.report.ok();
    }
    if (k == "cardinality") {
      bs::CardinalityForAllPayload c;
      if (!j.contains("relation") || !j.contains("over")) {
        fail(path, "cardinality operand needs 'relation' and 'over'");
        return false;
      }
      if (!load_ref(j["relation"], path + "/relation", c.relation)) return false;
      if (!load_ref(j["over"], path + "/over", c.over)) return false;
      c.inverse = j.value("inverse", false);
      std::string cmp = require_string(j, "cmp", path);
      if (cmp == "eq") c.cmp = bs::CardCmp::Eq;
      else if (cmp == "ge") c.cmp = bs::CardCmp::Ge;
      else if (cmp == "le") c.cmp = bs::CardCmp::Le;
      else {
        fail(path + "/cmp", "unknown comparison '" + cmp + "'");
        return false;
      }
      if (!j.contains("bound") || !j["bound"].is_number_unsigned()) {
        fail(path + "/bound", "missing or non-natural 'bound'");
        return false;
      }
      c.bound = j["bound"].get<unsigned>();
      out = c;
      return true;
    }
    bs::ElemRef r;
    if (!load_ref(j, path, r)) return false;
    out = r;
    return true;
  }

  bool load_formula(const json& j, const std::string& path, bs::Formula& out) {
    static const std::map<std::string, bs::Operator> ops = {
        {"inclusion", bs::Operator::Inclusion},
        {"belonging", bs::Operator::Belonging},
        {"relation_set", bs::Operator::RelationSet},
        {"function_set", bs::Operator::FunctionSet},
        {"maplet", bs::Operator::Maplet},
        {"relation_composition", bs::Operator::RelationComposition},
        {"equal_to_set_of", bs::Operator::Equal2SetOf},
        {"inversion", bs::Operator::Inversion},
        {"equality", bs::Operator::Equality},
        {"cardinality_forall", bs::Operator::CardinalityForAll},
        {"raw", bs::Operator::Raw}};
    std::string opname = require_string(j, "op", path);
    auto it = ops.find(opname);
    if (it == ops.end()) {
      fail(path + "/op", "unknown operator '" + opname + "'");
      return false;
    }
    out.op = it->second;
    if (!j.contains("args") || !j["args"].is_array()) {
      fail(path + "/args", "missing or non-array 'args'");
      return false;
    }
    const json& args = j["args"];
    for (std::size_t i = 0; i < args.size(); ++i) {
      bs::Operand op;
      if (!load_operand(args[i], path + "/args/" + std::to_string(i), op))
        return false;
      out.operands.push_back(std::move(op));
    }
    return true;
  }

  void load_component(const json& j, const std::string& base) {
    bs::Component c;
    c.name = require_string(j, "name", base);
    std::string kind = require_string(j, "kind", base);
    if (!result_.report.ok()) return;
    if (kind == "system") {
      c.kind = bs::ComponentKind::System;
    } else if (kind == "refinement") {
      c.kind = bs::ComponentKind::Refinement;
    } else {
      fail(base + "/kind", "kind must be 'system' or 'refinement'");
      return;
    }
    if (j.contains("refines")) {
      if (!j["refines"].is_string()) {
        fail(base + "/refines", "non-string 'refines'");
        return;
      }
      c.refines = j["refines"].get<std::string>();
    }
    if (c.kind == bs::ComponentKind::Refinement && c.refines.empty()) {
      fail(base + "/refines", "refinement without 'refines'");
      return;
    }
    if (c.kind == bs::ComponentKind::System && !c.refines.empty()) {
      fail(base + "/refines", "system with 'refines'");
      return;
    }
    if (j.contains("sets")) {
      if (!j["sets"].is_array()) {
        fail(base + "/sets", "non-array 'sets'");
        return;
      }
      const json& sets = j["sets"];
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::string sp = base + "/sets/" + std::to_string(i);
        bs::BSet s;
        s.name = require_string(sets[i], "name", sp);
        std::string v = require_string(sets[i], "variant", sp);
        if (!result_.report.ok()) return;
        if (v == "abstract") {
          s.variant = bs::SetVariant::Abstract;
        } else if (v == "default") {
          s.variant = bs::SetVariant::Default;
        } else if (v == "enumerated") {
          s.variant = bs::SetVariant::Enumerated;
          if (!sets[i].contains("items") || !sets[i]["items"].is_array()) {
            fail(sp + "/items", "enumerated set without 'items'");
            return;
          }
          for (const auto& it : sets[i]["items"]) {
            if (!it.is_string()) {
              fail(sp + "/items", "non-string set item");
              return;
            }
            s.items.push_back(it.get<std::string>());
          }
        } else {
          fail(sp + "/variant", "unknown variant '" + v + "'");
          return;
        }
        c.sets.push_back(std::move(s));
      }
    }
    auto load_names = [&](const char* key, std::vector<std::string>& out) {
      if (!j.contains(key)) return true;
      if (!j[key].is_array()) {
        fail(base + "/" + key, std::string("non-array '") + key + "'");
        return false;
      }
      for (const auto& it : j[key]) {
        if (!it.is_string()) {
          fail(base + "/" + key, "non-string entry");
          return false;
        }
        out.push_back(it.get<std::string>());
      }
      return true;
    };
    if (!load_names("constants", c.constants)) return;
    if (!load_names("variables", c.variables)) return;
    auto load_formulas = [&](const char* key, std::vector<bs::Formula>& out) {
      if (!j.contains(key)) return true;
      if (!j[key].is_array()) {
        fail(base + "/" + key, std::string("non-array '") + key + "'");
        return false;
      }
      const json& arr = j[key];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        bs::Formula f;
        if (!load_formula(arr[i], base + "/" + key + "/" + std::to_string(i), f))
          return false;
        out.push_back(std::move(f));
      }
      return true;
    };
    if (!load_formulas("properties", c.properties)) return;
    if (!load_formulas("invariants", c.invariants)) return;
    if (j.contains("init")) {
      if (!j["init"].is_array()) {
        fail(base + "/init", "non-array 'init'");
        return;
      }
      const json& arr = j["init"];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string ip = base + "/init/" + std::to_string(i);
        bs::InitialisationAction ia;
        ia.target = require_string(arr[i], "target", ip);
        std::string op = require_string(arr[i], "op", ip);
        if (!result_.report.ok()) return;
        if (op == "become_equal_set_of") {
          ia.op = bs::InitOp::BecomeEqualSetOf;
        } else if (op == "become_equal_empty_set") {
          ia.op = bs::InitOp::BecomeEqualEmptySet;
        } else {
          fail(ip + "/op", "unknown init op '" + op + "'");
          return;
        }
        if (arr[i].contains("args")) {
          if (!arr[i]["args"].is_array()) {
            fail(ip + "/args", "non-array 'args'");
            return;
          }
          const json& args = arr[i]["args"];
          for (std::size_t k = 0; k < args.size(); ++k) {
            bs::Operand o;
            if (!load_operand(args[k], ip + "/args/" + std::to_string(k), o)) return;
            ia.args.push_back(std::move(o));
          }
        }
        c.init.push_back(std::move(ia));
      }
    }
    if (j.contains("events")) {
      if (!j["events"].is_array()) {
        fail(base + "/events", "non-array 'events'");
        return;
      }
      for (const auto& e : j["events"]) {
        if (!e.is_string()) {
          fail(base + "/events", "non-string event name");
          return;
        }
        c.events.push_back({e.get<std::string>()});
      }
    }
    result_.components.push_back(std::move(c));
  }

  LoadResult result_;
};

}  // namespace

std::string save(std::span<const bs::Component> components) {
  ordered_json doc;
  ordered_json arr = ordered_json::array();
  for (const bs::Component& c : components) arr.push_back(component_json(c));
  doc["components"] = std::move(arr);
  return doc.dump(2) + "\n";
}

LoadResult load(const std::string& json_text) { return Loader().run(json_text); }

}  // namespace ontb::canonical
