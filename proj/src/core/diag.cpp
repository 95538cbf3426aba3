#include "core/diag.hpp"

#include <algorithm>
#include <sstream>

namespace ontb {

bool Report::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

bool Report::clean() const { return entries.empty(); }

bool Report::has_warnings() const {
  return std::any_of(entries.begin(), entries.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Warning;
  });
}

void Report::error(std::string code, std::string path, std::string message,
                   int line, int col) {
  entries.push_back({Severity::Error, std::move(code), std::move(path),
                     std::move(message), line, col});
}

void Report::warn(std::string code, std::string path, std::string message,
                  int line, int col) {
  entries.push_back({Severity::Warning, std::move(code), std::move(path),
                     std::move(message), line, col});
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& d : entries) {
    os << (d.severity == Severity::Error ? "error" : "warning") << " [" << d.code
       << "] " << d.path;
    if (!d.path.empty()) os << ": ";
    os << d.message << "\n";
  }
  return os.str();
}

}  // namespace ontb
