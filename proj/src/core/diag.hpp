#pragma once

#include <string>
#include <vector>

namespace ontb {

enum class Severity { Error, Warning };

// One finding of the validator, the translator or the store checker.
// `code` is a stable diagnostic class (e.g. "duplicate-name", "inv1_23"),
// `path` locates the offending element ("lg_system_ref_1/relation/LgOfLs").
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string path;
  std::string message;
  int line = 0;
  int col = 0;

  bool operator==(const Diagnostic&) const = default;
};

struct Report {
  std::vector<Diagnostic> entries;

  bool ok() const;            // no errors (warnings allowed)
  bool clean() const;         // no entries at all
  bool has_warnings() const;

  void error(std::string code, std::string path, std::string message,
             int line = 0, int col = 0);
  void warn(std::string code, std::string path, std::string message,
            int line = 0, int col = 0);
  void append(const Report& other);

  std::string to_string() const;
};

}  // namespace ontb
