#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dioext {

// MANIFEST v1: provenance record accompanying serialized instances.
//   MANIFEST v1
//   kind <fixed-target|fixed-source|anick>
//   d <n>
//   r <n>
//   s <n>
//   asset <name> <version>
//   file <role> <filename>
//   size <label> <cell-count>
//   check <pass|fail> <name> :: <details>
//   system <line-count>
//   <raw DIO v1 lines>
// All records are optional except the header; `system` must come last.
struct ManifestCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

struct Manifest {
  std::string kind;
  int d = 0;
  int r = 0;
  int s = 0;
  std::vector<std::pair<std::string, std::string>> assets; // name -> version
  std::vector<std::pair<std::string, std::string>> files;  // role -> filename
  std::vector<std::pair<std::string, std::uint64_t>> sizes; // label -> count
  std::vector<ManifestCheck> checks;
  std::string system_text; // embedded DIO v1 text, empty when absent
};

std::string manifest_to_text(const Manifest& m);
Manifest manifest_from_text(const std::string& text);

void write_manifest_file(const std::string& path, const Manifest& m);
Manifest read_manifest_file(const std::string& path);

} // namespace dioext
