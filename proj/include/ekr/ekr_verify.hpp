#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/perm_group.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

enum class Verdict { Yes, No, Unknown };
std::string verdict_str(Verdict v);

struct EkrReport {
  std::string group_name;
  int degree = 0;
  long long order = 0;
  int transitivity = 0;

  // Appendix-style columns
  Verdict least = Verdict::Unknown;          // least eigenvalue given by the standard character
  std::string max_clique = "-";              // "yes" / "?" / "-"
  Verdict ekr = Verdict::Unknown;
  std::string unique_tau = "-";              // "yes" / "no" / "n/a"
  std::string clique_coclique = "-";
  Verdict rank_full = Verdict::Unknown;
  Verdict strict = Verdict::Unknown;

  std::string condition_a_method;            // ratio | clique-coclique | exhaustive | failed
  std::string condition_b_method;            // unique-tau | unique-tau+linear | failed
  std::string error;                         // per-row failure (e.g. CapExceeded)
  bool skipped = false;

  // verified witnesses, as element indices
  std::vector<int> ekr_counterexample;       // independent set larger than a stabilizer
  std::vector<int> strict_counterexample;    // non-coset maximum independent set

  std::string csv_row() const;
  std::string json_row() const;
};

struct VerifyOptions {
  long long element_cap = 200000;        // report-path enumeration cap
  long long witness_group_cap = 200;     // brute non-coset witness search only below this order
  long long witness_budget = 2000000;    // node budget for witness searches
  long long clique_budget = 20000000;    // node budget for general clique search
  long long clique_graph_cap = 2000;     // build the explicit graph for clique search below this
  long long ekr_no_budget_ms = 60000;    // budget for the EKR-counterexample search
  uint64_t seed = 12345;
};

// The module-method pipeline on the full derangement set (or a class union),
// matching the thesis's columns. Never resolves "strict = yes" by search:
// only the module method concludes yes, and only a verified witness concludes
// no; everything else stays unknown.
EkrReport strict_ekr_verdict(const PermGroup& g, const std::string& name,
                             const std::vector<int>& class_ids, const VerifyOptions& opt = {});

EkrReport strict_ekr_verdict_all_derangements(const PermGroup& g, const std::string& name,
                                              const VerifyOptions& opt = {});

struct BruteForceResult {
  long long alpha = 0;
  bool exhausted = false;            // enumeration of maximum sets ran to completion
  bool all_maximum_are_cosets = false;
  long long maximum_set_count = 0;   // number of maximum independent sets (when exhausted)
  std::vector<int> non_coset_witness;  // element indices of one non-coset maximum set
};

// Ground truth on tiny groups: exact alpha of Gamma_G^C and whether every
// maximum independent set is a canonical coset S_{i,j}. Uses the left-
// translation reduction: it suffices to enumerate maximum sets containing the
// identity and compare them against point stabilizers.
BruteForceResult brute_force_strict_check(const PermGroup& g, const std::vector<int>& class_ids,
                                          long long cap = 5000,
                                          long long budget = 500000000);

// Real (+-1-valued) linear characters of g, excluding the trivial one: each is
// a sign vector over element indices.
std::vector<std::vector<int>> real_linear_characters(const PermGroup& g);

// Clique of size t in Gamma(g; classes) that contains the identity, found by
// branch and bound on the induced subgraph (identity is adjacent to the whole
// connection set, so this searches a (t-1)-clique inside it).
std::optional<std::vector<int>> find_identity_clique(const PermGroup& g,
                                                     const std::vector<int>& class_ids, int t,
                                                     long long budget = 20000000);

// n-cycle clique {id, s, s^2, ..., s^(n-1)} if g contains an n-cycle whose
// nonidentity powers all lie in the connection classes.
std::optional<std::vector<int>> ncycle_clique(const PermGroup& g,
                                              const std::vector<int>& class_ids);

}  // namespace ekr
