#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/bsystem.hpp"
#include "core/diag.hpp"
#include "core/domain.hpp"
#include "core/store.hpp"

// Reverse channel: additive edits on a B System component chain are folded
// back into the domain model so that forward translation is again a fixpoint.
// Each addition is dispatched to exactly one reverse rule by the shape of its
// typing formula; additions no rule matches are reported UNSYNCABLE and
// skipped.
namespace ontb::sync {

enum class AdditionKind {
  AbstractSet,     // rules 101 (concept) / 102 (custom data set, by hint)
  EnumeratedSet,   // rule 103
  SetItem,         // rule 104
  Constant,        // rules 105 / 106 / 107 / 109
  Variable,        // rule 108
};

enum class Hint { None, Concept, DataSet };

struct Addition {
  AdditionKind kind = AdditionKind::AbstractSet;
  std::string component;
  std::string name;                // new set/constant/variable
  std::vector<std::string> items;  // EnumeratedSet
  std::string owner_set;           // SetItem: existing enumerated set
  std::string item;                // SetItem: the new item
  bs::Formula typing;              // Constant, Variable
  bs::InitialisationAction init;   // Variable (optional)
  bool has_init = false;
  Hint hint = Hint::None;
  std::string relation;  // optional maplet disambiguation (B constant name)
};

struct ModelDelta {
  std::vector<Addition> additions;
};

struct DeltaLoadResult {
  ModelDelta delta;
  Report report;
  bool ok() const { return report.ok(); }
};

// JSON array of addition records:
//   {"kind": "...", "component": "...", "payload": {...}, "hint"?: "concept"|"dataset"}
DeltaLoadResult delta_from_json(const std::string& json_text);
std::string delta_to_json(const ModelDelta& delta);

enum class Outcome { Synced, Unsyncable, Error };

struct AdditionOutcome {
  Outcome outcome = Outcome::Error;
  std::string rule;    // reverse rule applied, when synced
  std::string detail;  // reason, when not
};

struct SyncResult {
  dm::Chain chain;
  CorrespondenceStore store;
  std::vector<bs::Component> components;  // inputs with synced additions applied
  Report report;
  std::vector<AdditionOutcome> outcomes;
  int synced = 0;
  int unsyncable = 0;
  bool ok = false;  // no hard errors (unsyncable additions allowed)
};

SyncResult apply_delta(const ModelDelta& delta, const dm::Chain& chain,
                       std::span<const bs::Component> components,
                       const CorrespondenceStore& store);

}  // namespace ontb::sync
