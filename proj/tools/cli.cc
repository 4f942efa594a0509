#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "oddminor/bcp_partition.h"
#include "oddminor/coloring.h"
#include "oddminor/errors.h"
#include "oddminor/generate.h"
#include "oddminor/graph_io.h"
#include "oddminor/lifting.h"
#include "oddminor/minors.h"
#include "oddminor/quotient.h"

namespace oddminor::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return parsed;
}

struct Options {
  std::string input = "-";
  std::string graph_format = "auto";
  int t = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t time_budget_ms = 0;
  std::uint64_t search_budget = 0;

  // gen
  std::vector<std::string> gen_words;
  std::uint64_t seed = 0;
  std::string out_format = "edge-list";

  // color
  std::string mode = "exact";

  // verify / lift / quotient
  std::string cert_path;
  std::string coloring_path;
  std::string partition_path;
  std::string quotient_path;

  // bench
  std::vector<int> bench_n;
  std::vector<double> bench_p;
  std::string bench_seeds = "1";

  ReductionBudgets budgets() const {
    ReductionBudgets b;
    b.coloring.max_nodes = node_budget;
    b.coloring.max_time = std::chrono::milliseconds(time_budget_ms);
    b.minors.max_assignments = search_budget;
    return b;
  }
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can feed only one input");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  Graph graph() {
    const std::string text = read(opt_.input);
    GraphFormat format = detect_format(text);
    if (opt_.graph_format == "edge-list") format = GraphFormat::kEdgeList;
    if (opt_.graph_format == "dimacs") format = GraphFormat::kDimacs;
    return parse_graph(text, format);
  }

  int gen() {
    const Graph g = generate(GraphSpec::parse(opt_.gen_words), opt_.seed);
    out_ << render_graph(g, opt_.out_format == "dimacs" ? GraphFormat::kDimacs : GraphFormat::kEdgeList);
    return kOk;
  }

  int partition() {
    const Graph g = graph();
    const BcpPartition p = compute_partition(g);
    const auto report = verify_partition(g, p);
    out_ << serialize_partition(p) << commented("verify: " + report.to_string());
    return report.passed() ? kOk : kFail;
  }

  int quotient() {
    const Graph g = graph();
    BcpPartition p = opt_.partition_path.empty() ? compute_partition(g) : parse_partition(read(opt_.partition_path));
    const auto check = verify_partition(g, p);
    if (!check.passed()) {
      out_ << commented("partition: " + check.to_string());
      return kFail;
    }
    out_ << serialize_quotient(build_quotient(g, std::move(p)));
    return kOk;
  }

  int color() {
    const Graph g = graph();
    const auto budgets = opt_.budgets();
    Coloring c;
    if (opt_.mode == "exact") {
      c = color_exact(g, budgets.coloring);
    } else if (opt_.mode == "heuristic") {
      c = color_heuristic(g);
    } else {
      const QuotientGraph q = build_quotient(g, compute_partition(g));
      const Coloring c_h = color_exact(q.h, budgets.coloring);
      c = compose_coloring(q, c_h);
      out_ << "# chi(H) " << c_h.palette << '\n';
    }
    const auto report = verify_coloring(g, c);
    out_ << serialize_coloring(c) << commented("verify: " + report.to_string());
    return report.passed() ? kOk : kFail;
  }

  int find_minor(bool odd) {
    const Graph g = graph();
    const auto budget = opt_.budgets().minors;
    if (odd) {
      const auto cert = find_odd_expansion(g, opt_.t, budget);
      if (!cert) return not_found();
      out_ << serialize_certificate(*cert);
    } else {
      const auto cert = find_expansion(g, opt_.t, budget);
      if (!cert) return not_found();
      out_ << serialize_certificate(*cert);
    }
    return kOk;
  }

  int verify() {
    const int chosen = !opt_.cert_path.empty() + !opt_.coloring_path.empty() + !opt_.partition_path.empty() +
                       !opt_.quotient_path.empty();
    if (chosen != 1) throw UsageError("verify needs exactly one of --cert, --coloring, --partition, --quotient");
    const Graph g = graph();
    VerificationReport report;
    if (!opt_.cert_path.empty()) {
      const auto cert = parse_certificate(read(opt_.cert_path));
      report = std::visit(
          [&](const auto& c) {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, OddExpansionCertificate>) {
              return verify_odd_expansion(g, c);
            } else {
              return verify_expansion(g, c);
            }
          },
          cert);
    } else if (!opt_.coloring_path.empty()) {
      report = verify_coloring(g, parse_coloring(read(opt_.coloring_path)));
    } else if (!opt_.partition_path.empty()) {
      report = verify_partition(g, parse_partition(read(opt_.partition_path)));
    } else {
      BcpPartition p = compute_partition(g);
      const QuotientGraph q = parse_quotient(read(opt_.quotient_path), std::move(p));
      report.merge(contraction_check(g, q), "contraction: ");
      report.merge(verify_witnesses(g, q), "witnesses: ");
    }
    out_ << report.to_string() << '\n';
    return report.passed() ? kOk : kFail;
  }

  int lift() {
    const Graph g = graph();
    const QuotientGraph q = build_quotient(g, compute_partition(g));
    std::optional<ExpansionCertificate> cert_h;
    if (!opt_.cert_path.empty()) {
      const auto parsed = parse_certificate(read(opt_.cert_path));
      const auto* plain = std::get_if<ExpansionCertificate>(&parsed);
      cert_h = plain != nullptr ? *plain : std::get<OddExpansionCertificate>(parsed).base;
    } else {
      cert_h = find_expansion(q.h, opt_.t, opt_.budgets().minors);
      if (!cert_h) return not_found();
    }
    out_ << serialize_certificate(lift_expansion(g, q, *cert_h));
    return kOk;
  }

  int report() {
    const Graph g = graph();
    const ReductionReport r = reduction_report(g, opt_.t, opt_.budgets());
    out_ << render_report(r);
    return r.passed() ? kOk : kFail;
  }

  int bench() {
    const auto seeds = parse_seeds(opt_.bench_seeds);
    if (opt_.bench_n.empty() || opt_.bench_p.empty() || seeds.empty()) throw UsageError("bench grid is empty");
    const auto budgets = opt_.budgets();
    out_ << "# oddminor-bench v1\n"
         << "n,p,seed,parts,chi_H,composed_palette,chi_G_exact,ratio\n";
    for (int n : opt_.bench_n) {
      for (double p : opt_.bench_p) {
        for (std::uint64_t seed : seeds) {
          const Graph g = generate(GraphSpec::gnp(n, p), seed);
          const QuotientGraph q = build_quotient(g, compute_partition(g));
          const auto chi_h = try_exact(q.h, budgets.coloring);
          const Coloring c_h = chi_h ? *chi_h : color_heuristic(q.h);
          const Coloring composed = compose_coloring(q, c_h);
          const auto chi_g = try_exact(g, budgets.coloring);
          out_ << n << ',' << p << ',' << seed << ',' << q.partition.size() << ',';
          if (chi_h) out_ << chi_h->palette;
          out_ << ',' << composed.palette << ',';
          if (chi_g) out_ << chi_g->palette;
          out_ << ',';
          if (chi_h) {
            out_ << std::fixed << std::setprecision(4)
                 << static_cast<double>(composed.palette) / chi_h->palette << std::defaultfloat;
          }
          out_ << '\n';
        }
      }
    }
    return kOk;
  }

 private:
  int not_found() {
    out_ << "NOT FOUND\n";
    return kFail;
  }

  static std::string commented(const std::string& text) {
    std::istringstream lines(text);
    std::string out, line;
    while (std::getline(lines, line)) out += "# " + line + '\n';
    return out;
  }

  static std::optional<Coloring> try_exact(const Graph& g, const ExactColoringBudget& budget) {
    try {
      return color_exact(g, budget);
    } catch (const ResourceError&) {
      return std::nullopt;
    }
  }

  /// "1,2,5" or "1..3".
  static std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const std::uint64_t lo = std::stoull(text.substr(0, dots));
      const std::uint64_t hi = std::stoull(text.substr(dots + 2));
      if (hi < lo || hi - lo > 1'000'000) throw UsageError("bad seed range '" + text + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
      return out;
    }
    std::istringstream is(text);
    for (std::string word; std::getline(is, word, ',');) out.push_back(std::stoull(word));
    return out;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("-i,--input", opt.input, "Graph file, '-' for standard input")->capture_default_str();
  cmd->add_option("--graph-format", opt.graph_format, "Input graph format")
      ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}))
      ->capture_default_str();
}

void add_t(CLI::App* cmd, Options& opt) {
  cmd->add_option("-t", opt.t, "Clique size t")->required()->check(CLI::PositiveNumber);
}

void add_budgets(CLI::App* cmd, Options& opt) {
  cmd->add_option("--node-budget", opt.node_budget, "Exact colouring node cap (env ODDMINOR_NODE_BUDGET)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-budget-ms", opt.time_budget_ms,
                  "Exact colouring time cap in ms, 0 disables (env ODDMINOR_TIME_BUDGET_MS)");
  cmd->add_option("--search-budget", opt.search_budget, "Minor search cap on (t+1)^n (env ODDMINOR_SEARCH_BUDGET)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  try {
    opt.node_budget = env_or("ODDMINOR_NODE_BUDGET", ExactColoringBudget{}.max_nodes);
    opt.search_budget = env_or("ODDMINOR_SEARCH_BUDGET", MinorSearchBudget{}.max_assignments);
    const char* time = std::getenv("ODDMINOR_TIME_BUDGET_MS");
    opt.time_budget_ms = time != nullptr && *time != '\0' ? env_or("ODDMINOR_TIME_BUDGET_MS", 0) : 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Bipartite-connected partitions, quotient colourings, and odd K_t-expansions", "oddminor"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Emit a generated graph");
  gen->add_option("spec", opt.gen_words,
                  "complete T | cycle N | complete-bipartite A B | gnp N P | petersen")
      ->required()
      ->expected(1, 3);
  gen->add_option("--seed", opt.seed, "Seed for gnp")->capture_default_str();
  gen->add_option("--format", opt.out_format, "Output format")
      ->check(CLI::IsMember({"edge-list", "dimacs"}))
      ->capture_default_str();

  auto* partition = app.add_subcommand("partition", "Print the bipartite-connected partition and its verification");
  add_input(partition, opt);

  auto* quotient = app.add_subcommand("quotient", "Print the quotient graph H with witness triples");
  add_input(quotient, opt);
  quotient->add_option("--partition", opt.partition_path, "Use this partition instead of computing one");

  auto* color = app.add_subcommand("color", "Colour the graph");
  add_input(color, opt);
  add_budgets(color, opt);
  color->add_option("--mode", opt.mode, "exact | heuristic | composed")
      ->check(CLI::IsMember({"exact", "heuristic", "composed"}))
      ->capture_default_str();

  auto* find_minor = app.add_subcommand("find-minor", "Search for a K_t-expansion");
  add_input(find_minor, opt);
  add_t(find_minor, opt);
  add_budgets(find_minor, opt);

  auto* find_odd = app.add_subcommand("find-odd-minor", "Search for an odd K_t-expansion");
  add_input(find_odd, opt);
  add_t(find_odd, opt);
  add_budgets(find_odd, opt);

  auto* verify = app.add_subcommand("verify", "Check a certificate, colouring, partition, or quotient against a graph");
  add_input(verify, opt);
  verify->add_option("--cert", opt.cert_path, "Expansion or odd-expansion certificate");
  verify->add_option("--coloring", opt.coloring_path, "Colouring");
  verify->add_option("--partition", opt.partition_path, "Partition");
  verify->add_option("--quotient", opt.quotient_path, "Quotient (checked against the computed partition)");

  auto* lift = app.add_subcommand("lift", "Lift a K_t-expansion of H to an odd K_t-expansion of G");
  add_input(lift, opt);
  add_t(lift, opt);
  add_budgets(lift, opt);
  lift->add_option("--cert", opt.cert_path, "Expansion of H; searched for when omitted");

  auto* report = app.add_subcommand("report", "Run the whole reduction for one t");
  add_input(report, opt);
  add_t(report, opt);
  add_budgets(report, opt);

  auto* bench = app.add_subcommand("bench", "Sweep a G(n, p) grid and emit CSV");
  add_budgets(bench, opt);
  bench->add_option("--n", opt.bench_n, "Vertex counts")->required()->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--p", opt.bench_p, "Edge probabilities")->required()->delimiter(',')->check(CLI::Range(0.0, 1.0));
  bench->add_option("--seeds", opt.bench_seeds, "Seeds: 'a..b' or comma list")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(opt, in, out);
  try {
    if (gen->parsed()) return runner.gen();
    if (partition->parsed()) return runner.partition();
    if (quotient->parsed()) return runner.quotient();
    if (color->parsed()) return runner.color();
    if (find_minor->parsed()) return runner.find_minor(false);
    if (find_odd->parsed()) return runner.find_minor(true);
    if (verify->parsed()) return runner.verify();
    if (lift->parsed()) return runner.lift();
    if (report->parsed()) return runner.report();
    if (bench->parsed()) return runner.bench();
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace oddminor::cli
