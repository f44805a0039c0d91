// Command-line front end: compute invariants on input trees, generate
// families, apply transformations, enumerate, and run verification sweeps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stkl/enumerate.hpp"
#include "stkl/families.hpp"
#include "stkl/io.hpp"
#include "stkl/report.hpp"
#include "stkl/steiner.hpp"
#include "stkl/transforms.hpp"
#include "stkl/verify.hpp"
#include "stkl/version.hpp"

namespace {

using namespace stkl;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void write_tree_output(const Tree& t, const std::string& out_file) {
  if (out_file.empty()) {
    write_edge_list(std::cout, t);
  } else {
    std::ofstream f(out_file);
    if (!f) throw ParseError("cannot write " + out_file);
    write_edge_list(f, t);
  }
}

SigmaVariant parse_variant(const std::string& v) {
  if (v == "plain") return SigmaVariant::plain;
  if (v == "d") return SigmaVariant::diametrical;
  if (v == "l") return SigmaVariant::leaf;
  if (v == "delta") return SigmaVariant::degree;
  throw BadRangeError("unknown variant " + v);
}

int run_compute(const std::string& tree_file, int k, int l,
                const std::string& set_csv) {
  Tree t = read_tree_file(tree_file);
  if (set_csv.empty()) {
    Rational v = avg_steiner_kl_ecc(t, {k, l});
    std::cout << fraction_str(v) << " ≈ " << decimal_str(v) << "\n";
    return 0;
  }
  VertexSet s = parse_int_list(set_csv);
  std::sort(s.begin(), s.end());
  if (l != static_cast<int>(s.size()))
    throw BadSetSizeError("--l must equal the size of --set");
  auto r = steiner_kl_eccentricity(t, s, {k, l});
  std::cout << r.value << " witness={";
  for (size_t i = 0; i < r.witness.size(); ++i)
    std::cout << (i ? "," : "") << r.witness[i];
  std::cout << "}\n";
  return 0;
}

int run_gen(const std::string& family, int n, int delta, int p, int d, int s,
            const std::string& sig_csv, const std::string& out_file) {
  Tree t;
  if (family == "path") {
    t = path(n);
  } else if (family == "star") {
    t = star(n);
  } else if (family == "broom") {
    t = broom(n, delta);
  } else if (family == "bs") {
    t = balanced_starlike(n, p);
  } else if (family == "starlike") {
    t = starlike(parse_int_list(sig_csv));
  } else if (family == "caterpillar") {
    auto attach = parse_int_list(sig_csv);
    t = caterpillar(n, {d, attach});
  } else if (family == "central") {
    t = central_caterpillar(n, d, s);
  } else if (family == "dcomet") {
    t = double_comet(n, d, s);
  } else {
    throw BadRangeError("unknown family " + family);
  }
  write_tree_output(t, out_file);
  return 0;
}

int run_transform(const std::string& tree_file, const std::string& op,
                  const std::string& variant, int index, bool list,
                  const std::string& out_file) {
  Tree t = read_tree_file(tree_file);
  if (op == "pq") {
    auto sites = find_pq_sites(t);
    if (list) {
      for (size_t i = 0; i < sites.size(); ++i)
        std::cout << i << ": w=" << sites[i].w << " p=" << sites[i].arm_p.size()
                  << " q=" << sites[i].arm_q.size()
                  << " base=" << (sites[i].base_nontrivial ? "nontrivial" : "trivial")
                  << "\n";
      return 0;
    }
    if (index < 0 || index >= static_cast<int>(sites.size()))
      throw BadRangeError("site index out of range (have " +
                          std::to_string(sites.size()) + ")");
    write_tree_output(apply_pq(sites[index]), out_file);
    return 0;
  }
  bool inv = op == "sigma-inv";
  if (!inv && op != "sigma") throw BadRangeError("unknown op " + op);
  SigmaVariant var = parse_variant(variant);
  auto forms = inv ? find_sigma_inverse_forms(t, var)
                   : find_sigma_forms(t, var, false);
  if (list) {
    for (size_t i = 0; i < forms.size(); ++i)
      std::cout << i << ": " << sigma_form_descriptor(forms[i])
                << " epsY=" << forms[i].eps_y << " epsX=" << forms[i].eps_x
                << " epsZ=" << forms[i].eps_z << "\n";
    return 0;
  }
  if (index < 0 || index >= static_cast<int>(forms.size()))
    throw BadRangeError("form index out of range (have " +
                        std::to_string(forms.size()) + ")");
  Tree result = inv ? apply_sigma_inverse(forms[index]) : apply_sigma(forms[index]);
  write_tree_output(result, out_file);
  return 0;
}

int run_normalize(const std::string& tree_file, const std::string& target,
                  int k, int l, const std::string& trace_file,
                  const std::string& out_file) {
  Tree t = read_tree_file(tree_file);
  RewriteTrace trace = target == "star" ? normalize_to_star(t, {k, l})
                                        : normalize_to_path(t, {k, l});
  if (!trace_file.empty()) {
    std::ofstream f(trace_file);
    if (!f) throw ParseError("cannot write " + trace_file);
    f << trace_json(trace, target, k, l).dump(2) << "\n";
  }
  write_tree_output(trace.terminal, out_file);
  return 0;
}

int run_enumerate(int n, bool count_only, const std::string& out_dir) {
  auto trees = enumerate_trees(n);
  if (count_only) {
    std::cout << trees.size() << "\n";
    return 0;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < trees.size(); ++i) {
      std::ostringstream name;
      name << out_dir << "/n" << n << "_t" << i << ".txt";
      std::ofstream f(name.str());
      write_edge_list(f, trees[i]);
    }
    std::cout << "wrote " << trees.size() << " trees to " << out_dir << "\n";
    return 0;
  }
  for (size_t i = 0; i < trees.size(); ++i) {
    std::cout << "# tree " << i << "\n";
    write_edge_list(std::cout, trees[i]);
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int max_n, int only_k, int only_l,
               const std::string& json_file, const std::string& csv_file,
               int workers) {
  SweepSpec spec;
  spec.max_n = max_n;
  spec.workers = workers;
  if (only_k >= 0) spec.only_k = only_k;
  if (only_l >= 0) spec.only_l = only_l;
  std::vector<Suite> suites;
  if (suite == "all") {
    suites = all_suites();
  } else {
    auto s = suite_from_name(suite);
    if (!s) throw BadRangeError("unknown suite " + suite);
    suites = {*s};
  }
  auto reports = run_suites(suites, spec);
  for (const auto& r : reports) {
    int findings = 0, fails = 0;
    for (const auto& row : r.rows) {
      findings += row.status == CheckStatus::finding;
      fails += row.status == CheckStatus::fail;
    }
    std::cout << r.suite << ": " << status_name(r.status) << " ("
              << r.rows.size() << " rows, " << fails << " failures, "
              << findings << " findings) " << r.elapsed_ms << " ms\n";
  }
  if (!json_file.empty()) {
    std::ofstream f(json_file);
    if (!f) throw ParseError("cannot write " + json_file);
    f << report_json(reports, true).dump(2) << "\n";
  }
  if (!csv_file.empty()) {
    std::ofstream f(csv_file);
    if (!f) throw ParseError("cannot write " + csv_file);
    f << report_csv(reports);
  }
  return any_failure(reports) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Steiner (k,l)-eccentricity toolkit for trees"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string tree_file, set_csv, out_file, family, sig_csv, op = "sigma";
  std::string variant = "plain", target = "star", trace_file, suite = "all";
  std::string json_file, csv_file, out_dir;
  int k = 2, l = 0, n = 0, delta = 3, p = 2, d = 2, s = 0, index = 0;
  int max_n = 8, workers = 1, only_k = -1, only_l = -1;
  bool list = false, count_only = false;

  auto* compute = app.add_subcommand("compute", "average or pointwise (k,l)-eccentricity");
  compute->add_option("--tree", tree_file, "edge-list file")->required();
  compute->add_option("--k", k)->required();
  compute->add_option("--l", l)->required();
  compute->add_option("--set", set_csv, "comma-separated l-set; prints the witness");

  auto* swc = app.add_subcommand("sw", "Steiner Wiener index");
  swc->add_option("--tree", tree_file)->required();
  swc->add_option("--k", k)->required();

  auto* gen = app.add_subcommand("gen", "generate a named family");
  gen->add_option("--family", family,
                  "path|star|broom|bs|starlike|caterpillar|central|dcomet")
      ->required();
  gen->add_option("--n", n);
  gen->add_option("--delta", delta, "broom max degree");
  gen->add_option("--p", p, "balanced starlike arm count");
  gen->add_option("--d", d, "caterpillar diameter");
  gen->add_option("--s", s, "split parameter");
  gen->add_option("--sig", sig_csv, "comma-separated arm lengths / attachments");
  gen->add_option("-o,--out", out_file);

  auto* tr = app.add_subcommand("transform", "apply one enumerated rewrite");
  tr->add_option("--tree", tree_file)->required();
  tr->add_option("--op", op, "sigma|sigma-inv|pq")->required();
  tr->add_option("--variant", variant, "plain|d|l|delta");
  tr->add_option("--index", index, "which enumerated form");
  tr->add_flag("--list", list, "list forms instead of applying");
  tr->add_option("-o,--out", out_file);

  auto* norm = app.add_subcommand("normalize", "rewrite to star or path");
  norm->add_option("--tree", tree_file)->required();
  norm->add_option("--target", target, "star|path")->required();
  norm->add_option("--k", k)->required();
  norm->add_option("--l", l)->required();
  norm->add_option("--trace", trace_file, "trace JSON output");
  norm->add_option("-o,--out", out_file);

  auto* en = app.add_subcommand("enumerate", "non-isomorphic trees of an order");
  en->add_option("--n", n)->required();
  en->add_flag("--count-only", count_only);
  en->add_option("-o,--out", out_dir, "directory for one file per tree");

  auto* ver = app.add_subcommand("verify", "run verification sweeps");
  ver->add_option("--suite", suite,
                  "all|sandwich|sigma|pq|leaves|maxdeg|diameter|caterpillar|"
                  "starlike|broom-chain|closed-forms|sw");
  ver->add_option("--max-n", max_n);
  ver->add_option("--k", only_k, "restrict to one k");
  ver->add_option("--l", only_l, "restrict to one l");
  ver->add_option("--json", json_file);
  ver->add_option("--csv", csv_file);
  ver->add_option("--workers", workers);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(tree_file, k, l, set_csv);
    if (*swc) {
      Tree t = read_tree_file(tree_file);
      std::cout << steiner_wiener(t, k).str() << "\n";
      return 0;
    }
    if (*gen) return run_gen(family, n, delta, p, d, s, sig_csv, out_file);
    if (*tr) return run_transform(tree_file, op, variant, index, list, out_file);
    if (*norm) return run_normalize(tree_file, target, k, l, trace_file, out_file);
    if (*en) return run_enumerate(n, count_only, out_dir);
    if (*ver)
      return run_verify(suite, max_n, only_k, only_l, json_file, csv_file,
                        workers);
  } catch (const stkl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
