#pragma once

#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <string>

namespace dioext {

// SSET v1: one record per line, LF.
//   SSET v1
//   simplex <id> dim <n>
//   face <id> <i> -> <target-id> [<i_k> ... <i_1>]
//   basepoint <id>
// Words are printed in application order (ascending indices).  Ids are
// consecutive from 0 in serialization order; face targets must precede.
std::string sset_to_text(const SimplicialSet& X);
SimplicialSet sset_from_text(const std::string& text);

void write_sset_file(const std::string& path, const SimplicialSet& X);
SSetPtr read_sset_file(const std::string& path);

// SMAP v1:
//   SMAP v1
//   domain <name>
//   codomain <name>
//   map <sigma-id> -> <tau-id> [<word>]
// The names are free-form tokens (conventionally file paths) used by the
// command line front end to locate the bound simplicial sets.
struct SmapFile {
  std::string domain;
  std::string codomain;
  std::vector<SimplexRef> image;
};

std::string smap_to_text(const SmapFile& f);
SmapFile smap_from_text(const std::string& text);

void write_smap_file(const std::string& path, const SmapFile& f);
SmapFile read_smap_file(const std::string& path);

std::string word_to_text(DegWord w);

} // namespace dioext
