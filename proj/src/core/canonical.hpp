#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/bsystem.hpp"
#include "core/diag.hpp"

// Lossless JSON document for a component chain. save(load(doc)) and
// load(save(components)) are identities; schema violations are reported with
// a JSON-pointer-style path.
namespace ontb::canonical {

std::string save(std::span<const bs::Component> components);

struct LoadResult {
  std::vector<bs::Component> components;
  Report report;
  bool ok() const { return report.ok(); }
};

LoadResult load(const std::string& json_text);

}  // namespace ontb::canonical
