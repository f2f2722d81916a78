#include "ekr/catalog.hpp"

#include <fstream>
#include <sstream>

#include "ekr/errors.hpp"
#include "ekr/families.hpp"

namespace ekr {

PermGroup CatalogEntry::build() const {
  std::vector<Perm> gens;
  for (const std::string& s : generator_strings) gens.push_back(Perm::parse_cycles(degree, s));
  return PermGroup(degree, gens);
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

// split generator list on commas outside parentheses
std::vector<std::string> split_generators(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t s1 = line.find(';');
    size_t s2 = line.find(';', s1 + 1);
    if (s1 == std::string::npos || s2 == std::string::npos)
      throw ParseError("catalog line " + std::to_string(lineno) + ": expected two ';'");
    CatalogEntry e;
    e.name = trim(line.substr(0, s1));
    e.degree = std::stoi(trim(line.substr(s1 + 1, s2 - s1 - 1)));
    e.generator_strings = split_generators(line.substr(s2 + 1));
    if (e.name.empty() || e.degree < 1 || e.generator_strings.empty())
      throw ParseError("catalog line " + std::to_string(lineno) + ": malformed entry");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

PermGroup build_family(const std::string& spec) {
  auto num_after = [&](size_t colon) { return std::stoi(spec.substr(colon + 1)); };
  size_t colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  if (head == "sym") return symmetric_group(num_after(colon));
  if (head == "alt") return alternating_group(num_after(colon));
  if (head == "psl2") return psl2(num_after(colon));
  if (head == "pgl2") return pgl2(num_after(colon));
  if (head == "psigmal2") return psl2_ext_frobenius(num_after(colon));
  if (head == "pgammal2") return pgl2_ext_frobenius(num_after(colon));
  if (head == "agl1") return agl1(num_after(colon));
  if (head == "dihedral") return dihedral_group(num_after(colon));
  if (head == "cyclic") {
    std::string cyc = spec.substr(colon + 1);
    int maxpt = 0;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (isdigit((unsigned char)cyc[i])) {
        int v = atoi(cyc.c_str() + i);
        maxpt = std::max(maxpt, v);
        while (i + 1 < cyc.size() && isdigit((unsigned char)cyc[i + 1])) ++i;
      }
    return cyclic_group(Perm::parse_cycles(maxpt, cyc));
  }
  if (head == "frobenius") {
    std::string rest = spec.substr(colon + 1);
    size_t comma = rest.find(',');
    return frobenius_affine(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  if (head == "young") {
    std::vector<int> parts;
    std::string rest = spec.substr(colon + 1);
    std::istringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return young_subgroup(parts);
  }
  if (head == "wreath") {
    std::string rest = spec.substr(colon + 1);
    size_t comma = rest.find(',');
    return wreath_product(symmetric_group(std::stoi(rest.substr(0, comma))),
                          symmetric_group(std::stoi(rest.substr(comma + 1))));
  }
  if (spec == "m10") return mathieu(10);
  if (spec == "m11") return mathieu(11);
  if (spec == "m12") return mathieu(12);
  if (spec == "m20") return mathieu(20);
  if (spec == "m21") return mathieu(21);
  if (spec == "m22") return mathieu(22);
  if (spec == "m11@12") return m11_on_12();
  if (spec == "psl2_11@11") return psl2_11_on_11();
  if (spec == "psl3_2@7") return psl3_2_on_7();
  if (spec == "agl3_2") return agl3_2();
  if (spec == "agl2_3") return agl2_3();
  if (spec == "z3z3q8") return z3z3_q8();
  throw InvalidParameter("unknown family spec: " + spec);
}

std::string catalog_line(const std::string& name, const PermGroup& g) {
  std::vector<Perm> gens = small_generating_set(g.elements());
  std::ostringstream os;
  os << name << " ; " << g.degree() << " ; ";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].cycles();
  }
  return os.str();
}

}  // namespace ekr
