#include "degencount/basis.hpp"
#include "degencount/colourful.hpp"
#include "degencount/dtd.hpp"
#include "degencount/gadget.hpp"
#include "degencount/generators.hpp"
#include "degencount/hom.hpp"
#include "degencount/io.hpp"
#include "degencount/params.hpp"
#include "degencount/parse_tree.hpp"
#include "degencount/properties.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace degencount;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

// Reports are key/value lines. Plain output prints the primary value alone
// followed by "key: value" lines; kv output prints "key=value" throughout.
class Report {
 public:
  void primary(const std::string& key, const std::string& value) {
    primary_ = static_cast<int>(entries_.size());
    add(key, value);
  }
  void add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

  void write(std::ostream& out, bool key_value) const {
    if (key_value) {
      for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
      return;
    }
    if (primary_ >= 0) out << entries_[primary_].second << '\n';
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
      if (i != primary_) out << entries_[i].first << ": " << entries_[i].second << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  int primary_ = -1;
};

struct Common {
  std::string format = "plain";
  bool timings = false;
  int threads = 1;
};

std::string decimal(const Rational& x, int places = 6) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt scaled = (numerator(x) * scale * 2 + denominator(x)) / (denominator(x) * 2);
  std::string digits = to_string(scaled);
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return digits;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

// An arc-list file, or a pattern oriented from smaller to larger id.
OrientedGraph load_dag(const std::string& dag_path, const std::string& pattern) {
  if (!dag_path.empty()) {
    auto in = open_input(dag_path);
    int n = 0;
    auto arcs = read_arc_list(in, n);
    return OrientedGraph(n, arcs);
  }
  if (pattern.empty()) throw UsageError("one of --dag or --pattern is required");
  const Graph h = load_graph(pattern);
  std::vector<Vertex> order(h.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  return orient_by_order(h, order);
}

DtdStrategy parse_strategy(const std::string& s) {
  if (s == "kernel") return DtdStrategy::Kernel;
  if (s == "optimal") return DtdStrategy::Optimal;
  return DtdStrategy::Automatic;
}

std::optional<bool> parse_bounded(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "bounded") return true;
  if (s == "unbounded") return false;
  throw UsageError("expected bounded or unbounded, got " + s);
}

void add_seconds(Report& r, const Common& common, std::chrono::steady_clock::time_point start) {
  if (!common.timings) return;
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  r.add("seconds", os.str());
}

void add_result(Report& r, const ApproxResult& a) {
  r.primary("estimate", decimal(a.estimate));
  r.add("estimate.exact", to_string(a.estimate));
  r.add("epsilon", to_string(a.epsilon));
  r.add("confidence", to_string(a.confidence));
  r.add("trials", std::to_string(a.trials));
  r.add("seed", std::to_string(a.seed));
  r.add("method", a.method);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern counting in bounded-degeneracy graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "plain or kv")->check(CLI::IsMember({"plain", "kv"}));
  app.add_flag("--timings", common.timings, "report elapsed seconds");
  app.add_option("--threads", common.threads, "sampling threads")->check(CLI::PositiveNumber);

  std::string pattern, host, dag, output, strategy = "auto", property, colouring_path, gadget_path, base_path,
                                                 tree_path, parse_path, dtd_path, minor_path, witness_path;
  std::string eps_text = "0.2", engine = "hom", family, imn_decl, alpha_decl, tau1_decl, grid_decl;
  std::uint64_t seed = 1;
  int k = -1, threshold = -1, groups = 9, cap = 16;
  std::uint64_t samples = 0;
  bool brute = false, exact = false, minor_closed = false, show_basis = false, model = false;

  auto graph_options = [&](CLI::App* c) {
    c->add_option("--pattern", pattern, "pattern: generator expression or edge-list file");
    c->add_option("--host", host, "host: generator expression or edge-list file")->required();
  };

  // count
  auto* count = app.add_subcommand("count", "exact counts");
  std::string count_kind;
  count->add_option("kind", count_kind, "sub, indsub, hom or property")
      ->required()
      ->check(CLI::IsMember({"sub", "indsub", "hom", "property"}));
  graph_options(count);
  count->add_flag("--exact", exact, "dtd / basis algorithm (default)");
  count->add_flag("--brute", brute, "exhaustive oracle");
  count->add_option("--strategy", strategy, "kernel, optimal or auto")
      ->check(CLI::IsMember({"kernel", "optimal", "auto"}));
  count->add_option("--property", property, "registered property name");
  count->add_option("--k", k, "subset size for properties");
  count->add_flag("--show-basis", show_basis, "print the hom basis");

  // approx
  auto* approx = app.add_subcommand("approx", "randomised approximate counts");
  std::string approx_kind;
  approx->add_option("kind", approx_kind, "sub, indsub or property")
      ->required()
      ->check(CLI::IsMember({"sub", "indsub", "property"}));
  graph_options(approx);
  approx->add_option("--eps", eps_text, "accuracy in (0, 1)");
  approx->add_option("--seed", seed, "rng seed");
  approx->add_option("--threshold", threshold, "c: property holds on independent sets of size >= c");
  approx->add_option("--property", property, "registered property name");
  approx->add_option("--k", k, "subset size for properties");
  approx->add_option("--groups", groups, "median-of-means groups")->check(CLI::PositiveNumber);
  approx->add_option("--samples", samples, "samples per group (default from the formula)");
  approx->add_option("--engine", engine, "hom or table")->check(CLI::IsMember({"hom", "table"}));
  approx->add_flag("--minor-closed", minor_closed, "treat the property as minor-closed");
  approx->add_option("--cap", cap, "largest independent set tested for thresholds");

  // classify / params
  auto* classify_cmd = app.add_subcommand("classify", "complexity exponents and family verdicts");
  classify_cmd->add_option("--pattern", pattern, "pattern");
  classify_cmd->add_option("--family", family, "family name for class-level verdicts");
  classify_cmd->add_option("--imn", imn_decl, "bounded or unbounded");
  classify_cmd->add_option("--alpha", alpha_decl, "bounded or unbounded");
  classify_cmd->add_option("--tau1", tau1_decl, "bounded or unbounded");
  classify_cmd->add_option("--induced-grid-minors", grid_decl, "bounded or unbounded");
  auto* params = app.add_subcommand("params", "structural parameters of a pattern");
  params->add_option("--pattern", pattern, "pattern")->required();

  // dtd
  auto* dtd = app.add_subcommand("dtd", "dag tree decompositions");
  std::string dtd_kind;
  dtd->add_option("kind", dtd_kind, "build, validate, from-parse or from-gadget")
      ->required()
      ->check(CLI::IsMember({"build", "validate", "from-parse", "from-gadget"}));
  dtd->add_option("--dag", dag, "arc-list file");
  dtd->add_option("--pattern", pattern, "pattern oriented from smaller to larger id");
  dtd->add_option("--strategy", strategy, "kernel, optimal or auto")
      ->check(CLI::IsMember({"kernel", "optimal", "auto"}));
  dtd->add_option("--dtd", dtd_path, "bag tree file");
  dtd->add_option("--parse", parse_path, "clique parse tree file");
  dtd->add_option("--gadget", gadget_path, "gadget file");
  dtd->add_option("--tree", tree_path, "tree decomposition of F (default: one bag)");
  dtd->add_option("--output", output, "write the decomposition here");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "gadget reductions");
  std::string reduce_kind;
  reduce->add_option("kind", reduce_kind, "cphom")->required()->check(CLI::IsMember({"cphom"}));
  reduce->add_option("--base", base_path, "base graph F")->required();
  reduce->add_option("--pattern", pattern, "pattern H")->required();
  reduce->add_option("--gadget", gadget_path, "gadget file")->required();
  reduce->add_option("--host", host, "F-coloured host G")->required();
  reduce->add_option("--colouring", colouring_path, "colouring G -> F")->required();
  reduce->add_option("--output", output, "prefix for G'.el and G'.col");

  // verify
  auto* verify = app.add_subcommand("verify", "validators");
  std::string verify_kind;
  verify->add_option("kind", verify_kind, "gadget, witness or dtd")
      ->required()
      ->check(CLI::IsMember({"gadget", "witness", "dtd"}));
  verify->add_option("--pattern", pattern, "pattern H");
  verify->add_option("--base", base_path, "base graph F");
  verify->add_option("--gadget", gadget_path, "gadget file");
  verify->add_option("--minor", minor_path, "minor graph");
  verify->add_option("--witness", witness_path, "witness file");
  verify->add_flag("--model", model, "check a minor model instead of an induced witness");
  verify->add_option("--dag", dag, "arc-list file");
  verify->add_option("--dtd", dtd_path, "bag tree file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool kv = common.format == "kv";
  const auto start = std::chrono::steady_clock::now();
  Report report;
  int status = 0;
  try {
    if (count->parsed()) {
      const Graph g = load_graph(host);
      report.add("host.vertices", g.num_vertices());
      report.add("host.edges", g.num_edges());
      report.add("host.degeneracy", degeneracy(g));
      if (count_kind == "property") {
        if (property.empty() || k < 0) throw UsageError("count property needs --property and --k");
        const auto& p = find_property(property);
        const BigInt c = brute ? count_property_brute(p.predicate, k, g) : count_property_exact(p.predicate, k, g);
        report.primary("count", to_string(c));
        report.add("property", property);
        report.add("k", k);
      } else {
        if (pattern.empty()) throw UsageError("--pattern is required");
        const Graph h = load_graph(pattern);
        const HomOptions options{parse_strategy(strategy), false};
        BigInt c;
        if (count_kind == "hom") c = brute ? count_homs_brute(h, g) : count_homs_dtd(h, g, options);
        else if (count_kind == "sub") c = brute ? count_subs_brute(h, g) : count_subs_exact(h, g, options);
        else c = brute ? count_indsubs_brute(h, g) : count_indsubs_exact(h, g, options);
        report.primary("count", to_string(c));
        report.add("pattern.vertices", h.num_vertices());
        report.add("pattern.edges", h.num_edges());
        if (!brute && count_kind == "hom") report.add("tau1", tau1(h));
        if (show_basis && !brute && count_kind != "hom") {
          std::ostringstream os;
          write_basis(os, count_kind == "sub" ? sub_basis(h) : indsub_basis(h));
          std::string line;
          std::istringstream is(os.str());
          for (int i = 0; std::getline(is, line); ++i) report.add("basis." + std::to_string(i), line);
        }
      }
      report.add("method", brute ? "brute" : "exact");
    } else if (approx->parsed()) {
      const Graph g = load_graph(host);
      const Rational eps = parse_rational(eps_text);
      if (eps <= 0 || eps >= 1) throw UsageError("--eps must lie in (0, 1)");
      ApproxOptions options;
      options.groups = groups;
      options.threads = common.threads;
      options.engine = engine == "table" ? ColourfulEngine::Table : ColourfulEngine::Homomorphism;
      if (samples > 0) options.samples_per_group = samples;
      ApproxResult a;
      if (approx_kind == "property") {
        if (property.empty() || k < 0) throw UsageError("approx property needs --property and --k");
        const auto& p = find_property(property);
        if (minor_closed || (threshold < 0 && p.minor_closed)) {
          if (!p.minor_closed && minor_closed) throw PreconditionError(property + " is not minor-closed");
          a = approx_count_minor_closed(p.predicate, k, g, eps, seed, cap, options);
        } else {
          int c = threshold;
          if (c < 0) {
            const auto t = independent_set_threshold(p.predicate, cap);
            if (!t) throw PreconditionError(property + " fails on large independent sets; no threshold exists");
            c = *t;
          }
          report.add("threshold", c);
          a = approx_count_property(p.predicate, k, g, eps, seed, c, options);
        }
        report.add("property", property);
        report.add("k", k);
      } else {
        if (pattern.empty()) throw UsageError("--pattern is required");
        const Graph h = load_graph(pattern);
        a = approx_kind == "sub" ? approx_count_subs(h, g, eps, seed, options)
                                 : approx_count_indsubs(h, g, eps, seed, options);
      }
      add_result(report, a);
    } else if (classify_cmd->parsed()) {
      if (!family.empty()) {
        FamilyDeclaration f{family, parse_bounded(imn_decl), parse_bounded(alpha_decl), parse_bounded(tau1_decl),
                            parse_bounded(grid_decl)};
        std::ostringstream os;
        write_family_report(os, f, classify_family(f), kv);
        std::cout << os.str();
      }
      if (!pattern.empty()) write_report(std::cout, classify(load_graph(pattern)), kv);
      if (family.empty() && pattern.empty()) throw UsageError("classify needs --pattern or --family");
    } else if (params->parsed()) {
      const auto r = param_report(load_graph(pattern));
      report.primary("imn", std::to_string(r.imn));
      report.add("alpha", r.alpha);
      report.add("vc", r.vc);
      report.add("k", r.k);
      report.add("tau1", r.tau1 ? std::to_string(*r.tau1) : "exceeds bound");
      report.add("tau2", r.tau2 ? std::to_string(*r.tau2) : "exceeds bound");
      report.add("tau3", r.tau3 ? std::to_string(*r.tau3) : "exceeds bound");
      report.add("edge_transitive", is_edge_transitive(load_graph(pattern)) ? "yes" : "no");
    } else if (dtd->parsed()) {
      const OrientedGraph h = load_dag(dag, pattern);
      DagTreeDecomposition t;
      if (dtd_kind == "build") {
        t = choose_dtd(h, parse_strategy(strategy));
      } else if (dtd_kind == "validate") {
        if (dtd_path.empty()) throw UsageError("--dtd is required");
        auto in = open_input(dtd_path);
        t = read_bag_tree(in);
      } else if (dtd_kind == "from-parse") {
        if (parse_path.empty()) throw UsageError("--parse is required");
        auto in = open_input(parse_path);
        const auto tree = read_parse_tree(in);
        t = dtd_from_clique_parse(h, tree);
        report.add("labels", tree.num_labels());
      } else {
        if (gadget_path.empty()) throw UsageError("--gadget is required");
        auto in = open_input(gadget_path);
        const FGadget gadget = read_fgadget(in);
        BagTree tf = trivial_tree_decomposition(gadget.base);
        if (!tree_path.empty()) {
          auto tin = open_input(tree_path);
          tf = read_bag_tree(tin);
        }
        const std::string bad = check_tree_decomposition(gadget.base, tf);
        if (!bad.empty()) throw PreconditionError("tree decomposition of F: " + bad);
        t = dtd_from_fgadget(h, gadget, tf);
        report.add("width_bound", fgadget_width_bound(h, gadget, tf));
      }
      const DtdCheck check = validate_dtd(h, t);
      report.primary("valid", check.ok ? "yes" : "no");
      report.add("width", t.width());
      report.add("nodes", t.size());
      if (!check.ok) {
        report.add("clause", check.clause);
        report.add("message", check.message);
        status = kExitValidation;
      }
      if (!output.empty()) {
        auto out = open_output(output);
        write_bag_tree(out, t);
      }
    } else if (reduce->parsed()) {
      const Graph f = load_graph(base_path), h = load_graph(pattern), g = load_graph(host);
      auto gin = open_input(gadget_path);
      FGadget gadget = read_fgadget(gin);
      if (!(gadget.base == f)) throw PreconditionError("gadget base differs from --base");
      const auto colouring = read_colouring_file(colouring_path, g.num_vertices());
      const CpReduction r = reduce_cphom(h, gadget, g, colouring);
      const ReductionClaims claims = check_reduction_claims(h, g, r);
      report.primary("vertices", std::to_string(r.graph.num_vertices()));
      report.add("edges", r.graph.num_edges());
      report.add("degeneracy", claims.degeneracy);
      report.add("colouring_homomorphism", claims.colouring_is_homomorphism ? "yes" : "no");
      report.add("degeneracy_bound", claims.degeneracy_bound ? "yes" : "no");
      report.add("size_bound", claims.size_bound ? "yes" : "no");
      if (!claims.ok()) status = kExitValidation;
      if (!output.empty()) {
        auto el = open_output(output + ".el");
        write_edge_list(el, r.graph);
        auto col = open_output(output + ".col");
        write_colouring(col, r.colouring);
      }
    } else if (verify->parsed()) {
      bool ok = false;
      std::string message;
      if (verify_kind == "dtd") {
        if (dtd_path.empty()) throw UsageError("--dtd is required");
        const OrientedGraph h = load_dag(dag, pattern);
        auto in = open_input(dtd_path);
        const DtdCheck c = validate_dtd(h, read_bag_tree(in));
        ok = c.ok;
        message = c.message;
      } else {
        if (pattern.empty()) throw UsageError("--pattern is required");
        const Graph h = load_graph(pattern);
        if (verify_kind == "gadget") {
          if (gadget_path.empty()) throw UsageError("--gadget is required");
          auto in = open_input(gadget_path);
          const FGadget gadget = read_fgadget(in);
          const GadgetCheck c = base_path.empty() ? validate_fgadget(h, gadget)
                                                  : validate_fgadget(load_graph(base_path), h, gadget);
          ok = c.ok;
          message = c.message;
          if (!ok) report.add("condition", c.condition);
        } else {
          if (minor_path.empty() || witness_path.empty()) throw UsageError("--minor and --witness are required");
          auto in = open_input(witness_path);
          const WitnessCheck c = validate_witness(h, load_graph(minor_path), read_witness(in), !model);
          ok = c.ok;
          message = c.message;
        }
      }
      report.primary("valid", ok ? "yes" : "no");
      if (!ok) {
        report.add("message", message);
        status = kExitValidation;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  add_seconds(report, common, start);
  report.write(std::cout, kv);
  return status;
}
