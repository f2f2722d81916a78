#pragma once

#include <string>
#include <vector>

#include "ekr/perm_group.hpp"

namespace ekr {

// One line of the group catalog: `name ; degree ; gen1, gen2, ...` with
// generators in disjoint-cycle notation and `#` comments.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<std::string> generator_strings;

  PermGroup build() const;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Builds a group from a short family spec, e.g. "sym:5", "alt:6", "psl2:7",
// "pgl2:9", "psigmal2:8", "pgammal2:9", "m11", "m12", "m10", "m20", "m21",
// "m22", "m11@12", "psl2_11@11", "agl1:8", "dihedral:5", "frobenius:7,3",
// "young:3,2", "cyclic:(1,2,3)(4,5)", "wreath:4,2" (Sym(m) wr Sym(n)).
PermGroup build_family(const std::string& spec);

// Canonical catalog line for a group (generators from a small generating set).
std::string catalog_line(const std::string& name, const PermGroup& g);

}  // namespace ekr
