// Batch front end: catalog-driven EKR verification, spectra queries,
// conjecture scans, graph exports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "ekr/catalog.hpp"
#include "ekr/cayley.hpp"
#include "ekr/characters.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/ekr_verify.hpp"
#include "ekr/errors.hpp"
#include "ekr/exact_rank.hpp"
#include "ekr/families.hpp"
#include "ekr/matrix_m.hpp"
#include "ekr/singlecc.hpp"
#include "ekr/sym_spectrum.hpp"

using namespace ekr;

namespace {

int cmd_report(const std::string& catalog_path, const std::string& filter,
               const std::string& format, const std::string& output, long long cap,
               uint64_t seed, long long budget, int jobs) {
  std::vector<CatalogEntry> entries = load_catalog(catalog_path);
  std::vector<CatalogEntry> selected;
  for (const auto& e : entries)
    if (filter.empty() || e.name.find(filter) != std::string::npos) selected.push_back(e);

  VerifyOptions opt;
  opt.element_cap = cap;
  opt.seed = seed;
  opt.witness_budget = budget;

  std::vector<EkrReport> reports(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      EkrReport rep;
      try {
        PermGroup g = selected[i].build();
        rep = strict_ekr_verdict_all_derangements(g, selected[i].name, opt);
      } catch (const std::exception& ex) {
        rep.group_name = selected[i].name;
        rep.degree = selected[i].degree;
        rep.skipped = true;
        rep.error = ex.what();
      }
      reports[i] = std::move(rep);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream os;
  if (format == "json") {
    os << "[\n";
    for (size_t i = 0; i < reports.size(); ++i)
      os << "  " << reports[i].json_row() << (i + 1 < reports.size() ? "," : "") << "\n";
    os << "]\n";
  } else {
    os << "n,group,size,least,max_clique,ekr,unique,clique_coclique,rank,strict\n";
    for (const auto& r : reports) os << r.csv_row() << "\n";
  }
  if (output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(output);
    f << os.str();
  }
  return 0;
}

std::vector<int> parse_class_filter(const PermGroup& g, const std::string& classes) {
  // classes like "5;4,1" -> cycle types {5},{4,1} -> class ids (split classes
  // of the same type are all included)
  const auto& cc = g.conjugacy_classes();
  if (classes.empty()) return g.derangement_class_ids();
  std::vector<int> ids;
  std::istringstream ss(classes);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    std::vector<int> type;
    std::istringstream ts(tok);
    std::string part;
    while (std::getline(ts, part, ',')) type.push_back(std::stoi(part));
    // pad implicit fixed points
    int total = 0;
    for (int p : type) total += p;
    for (int i = total; i < g.degree(); ++i) type.push_back(1);
    std::sort(type.rbegin(), type.rend());
    bool found = false;
    for (int i = 0; i < (int)cc.size(); ++i)
      if (cc[i].cycle_type == type) {
        ids.push_back(i);
        found = true;
      }
    if (!found) throw InvalidParameter("no class of cycle type " + tok);
  }
  return ids;
}

int cmd_spectrum(const std::string& family, const std::string& catalog_path,
                 const std::string& name, const std::string& classes,
                 const std::string& dot_path, const std::string& json_path, long long cap) {
  PermGroup g = [&]() {
    if (!family.empty()) return build_family(family);
    for (const auto& e : load_catalog(catalog_path))
      if (e.name == name) return e.build();
    throw InvalidParameter("group not found in catalog: " + name);
  }();
  g.elements(cap);
  std::vector<int> ids = parse_class_filter(g, classes);
  Spectrum spec = cayley_spectrum_class_algebra(g, ids);
  std::cout << "group order " << g.order() << ", degree " << g.degree() << "\n";
  std::cout << "connection classes:";
  for (int i : ids) {
    std::cout << " [";
    const auto& t = g.conjugacy_classes()[i].cycle_type;
    for (size_t j = 0; j < t.size(); ++j) std::cout << (j ? "," : "") << t[j];
    std::cout << "]x" << g.conjugacy_classes()[i].size();
  }
  std::cout << "\nspectrum " << spec.str() << "\n";
  if (!dot_path.empty() || !json_path.empty()) {
    Graph gamma = cayley_graph(g, ConnectionSet::from_classes(g, ids));
    if (!dot_path.empty()) std::ofstream(dot_path) << gamma.to_dot();
    if (!json_path.empty()) std::ofstream(json_path) << gamma.to_adjacency_json();
  }
  return 0;
}

int cmd_conjecture(const std::string& which, int from, int to, uint64_t seed) {
  int failures = 0;
  if (which == "char-bound") {
    for (int n = std::max(5, from); n <= to; ++n) {
      auto t0 = std::chrono::steady_clock::now();
      auto v = conjecture_7_7_scan(n);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cout << "char-bound n=" << n << ": " << (v.empty() ? "pass" : "FAIL") << " ("
                << v.size() << " violations, " << ms << " ms)\n";
      for (size_t i = 0; i < std::min<size_t>(v.size(), 5); ++i)
        std::cout << "    " << v[i].lambda.str() << " at " << v[i].rho.str()
                  << " chi=" << v[i].value << " dim=" << int128_str(v[i].dim) << "\n";
      if (!v.empty() && n >= 10) ++failures;
    }
  } else if (which == "psl-rank") {
    for (int q = std::max(2, from); q <= to; ++q) {
      if (!is_prime_power(q)) continue;
      auto t0 = std::chrono::steady_clock::now();
      PermGroup g = psl2(q);
      IntMatrix m = build_matrix_M(g, g.derangement_class_ids());
      RankResult rr = exact_rank(m, seed);
      long long full = (long long)q * (q - 1);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      bool ok = rr.certified_exact && rr.rank == full;
      std::cout << "psl-rank q=" << q << ": rank " << rr.rank << "/" << full << " "
                << (ok ? "full" : "DEFICIENT") << " (" << ms << " ms)\n";
      if (!ok) ++failures;
    }
  } else if (which == "alt-least") {
    for (int n = std::max(5, from); n <= to; ++n) {
      auto t0 = std::chrono::steady_clock::now();
      Spectrum spec = alt_cayley_spectrum(n, alt_derangement_classes(n));
      QuadraticValue tau = spec.least().value;
      // eta from the standard character: -|D_Alt(n)| / (n-1)
      int128 dcount = 0;
      for (const AltClass& c : alt_derangement_classes(n)) dcount += alt_class_size(c);
      Rational eta_std(-(long long)dcount, n - 1);
      bool holds = tau.is_rational() && tau.a() == eta_std;
      // "given only by": multiplicity check
      long long mult = spec.multiplicity_of(tau);
      bool unique = holds && mult == (long long)(n - 1) * (n - 1);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cout << "alt-least n=" << n << ": tau=" << tau.str() << " standard="
                << (holds ? "yes" : "NO") << " unique=" << (unique ? "yes" : "no") << " (" << ms
                << " ms)\n";
    }
  } else {
    std::cerr << "unknown conjecture: " << which << "\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact EKR toolkit for permutation groups"};
  app.require_subcommand(1);

  std::string catalog_path = "catalog/thesis_appendix_a.txt";
  std::string filter, format = "csv", output;
  long long cap = 200000, budget = 2000000;
  uint64_t seed = 12345;
  int jobs = 1;

  auto* report = app.add_subcommand("report", "catalog-driven EKR verdict table");
  report->add_option("--catalog", catalog_path, "group catalog file");
  report->add_option("--filter", filter, "only rows whose name contains this");
  report->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--output", output, "write to file instead of stdout");
  report->add_option("--cap", cap, "element enumeration cap");
  report->add_option("--seed", seed, "seed for modular-rank primes");
  report->add_option("--budget", budget, "search node budget");
  report->add_option("--jobs", jobs, "parallel rows");

  std::string family, name, classes, dot_path, json_path;
  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of a normal Cayley graph");
  spectrum->add_option("--family", family, "family spec, e.g. psl2:7, m11, sym:5");
  spectrum->add_option("--catalog", catalog_path, "group catalog file");
  spectrum->add_option("--name", name, "catalog entry name");
  spectrum->add_option("--classes", classes, "cycle types, e.g. '5' or '4,2;6'");
  spectrum->add_option("--dot", dot_path, "write the graph in DOT format");
  spectrum->add_option("--json", json_path, "write the adjacency list as JSON");
  spectrum->add_option("--cap", cap, "element enumeration cap");

  std::string which;
  int from = 5, to = 10;
  auto* conjecture = app.add_subcommand("conjecture", "scan a conjecture range");
  conjecture->add_option("--name", which, "char-bound | psl-rank | alt-least")->required();
  conjecture->add_option("--from", from, "range start");
  conjecture->add_option("--to", to, "range end");
  conjecture->add_option("--seed", seed, "seed for modular-rank primes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed())
      return cmd_report(catalog_path, filter, format, output, cap, seed, budget, jobs);
    if (spectrum->parsed())
      return cmd_spectrum(family, catalog_path, name, classes, dot_path, json_path, cap);
    if (conjecture->parsed()) return cmd_conjecture(which, from, to, seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
