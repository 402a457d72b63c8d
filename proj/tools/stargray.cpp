#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stargray/generator.hpp"
#include "stargray/necklace.hpp"
#include "stargray/spanning_tree.hpp"
#include "stargray/switches.hpp"
#include "stargray/tree.hpp"
#include "stargray/verifier.hpp"

namespace {

using namespace stargray;

constexpr int kInvalid = 2;
constexpr int kInternal = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Output {
 public:
  ~Output() { flush(); }
  void line(const std::string& s) {
    buf_ += s;
    buf_ += '\n';
    if (buf_.size() > (1u << 16)) flush();
  }
  void flush() {
    std::fwrite(buf_.data(), 1, buf_.size(), stdout);
    buf_.clear();
  }

 private:
  std::string buf_;
};

struct GenerateConfig {
  int n = 0;
  long shift = 1;
  std::string start;
  std::string format = "flips";
  long long limit = -1;
};

int cmd_generate(const GenerateConfig& cfg) {
  if (cfg.n < 1) throw UsageError("n must be at least 1");
  const long m = 2L * cfg.n + 1;
  if (std::gcd(((cfg.shift % m) + m) % m, m) != 1)
    throw UsageError("shift " + std::to_string(cfg.shift) + " is not coprime to 2n+1 = " +
                     std::to_string(m));
  std::optional<Bitstring> start;
  if (!cfg.start.empty()) {
    if (cfg.start.find_first_not_of("01") != std::string::npos)
      throw UsageError("start must be a 0/1 string");
    if (cfg.start.size() != static_cast<std::size_t>(m + 1))
      throw UsageError("start must have length 2n+2");
    start = Bitstring(cfg.start);
    if (start->weight() != static_cast<std::size_t>(cfg.n + 1))
      throw UsageError("start must have weight n+1");
  }
  if (!combination_count(cfg.n) && cfg.limit < 0)
    throw UsageError("the full stream is too long for this n; pass --limit");
  Generator gen(cfg.n, cfg.shift, start);
  Output out;
  long long emitted = 0;
  while (cfg.limit < 0 || emitted < cfg.limit) {
    auto step = gen.next();
    if (!step) break;
    ++emitted;
    if (cfg.format == "flips") {
      out.line(std::to_string(step->flip));
    } else if (cfg.format == "combinations") {
      out.line(step->combination.str());
    } else {
      out.line(std::to_string(step->flip) + "\t" + step->combination.str());
    }
  }
  return 0;
}

struct VerifyConfig {
  int n = 0;
  std::string suite = "all";
  bool json = false;
  bool explain_shift = false;
};

int cmd_verify(const VerifyConfig& cfg) {
  if (cfg.n < 1) throw UsageError("n must be at least 1");
  if (cfg.explain_shift) {
    if (cfg.n < 4) {
      std::cout << "n = " << cfg.n << " uses a fixed block with shift "
                << base_shift(cfg.n) << "\n";
    } else {
      std::cout << explain(plan_shift_fix(cfg.n, base_shift(cfg.n)));
    }
  }
  std::vector<verify::Certificate> certs;
  const bool lemmas = cfg.suite == "lemmas" || cfg.suite == "all";
  const bool hamilton = cfg.suite == "hamilton" || cfg.suite == "all";
  const bool blocks = cfg.suite == "blocks";
  if ((hamilton || blocks) && cfg.n > 10)
    throw UsageError("hamilton and blocks suites support n <= 10");
  if (lemmas) certs = verify::lemma_suite(cfg.n);
  if (hamilton || blocks) {
    for (auto& c : verify::hamilton_suite(cfg.n)) {
      if (blocks && c.claim.rfind("blocks", 0) != 0 &&
          c.claim.rfind("generate", 0) != 0)
        continue;
      certs.push_back(std::move(c));
    }
  }
  bool ok = true;
  for (const auto& c : certs) ok = ok && c.pass;
  if (cfg.json) {
    std::cout << verify::to_json(certs) << "\n";
  } else {
    for (const auto& c : certs) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.claim << " n=" << c.n;
      if (!c.pass) std::cout << ": " << c.counterexample;
      std::cout << "\n";
    }
  }
  return ok ? 0 : kInternal;
}

struct AnalyzeConfig {
  std::string what;
  int n = 0;
  bool dot = false;
  bool csv = false;
};

int cmd_analyze(const AnalyzeConfig& cfg) {
  const bool dot = cfg.dot && !cfg.csv;
  if (cfg.what == "cycles") {
    if (cfg.n < 2 || cfg.n > 9) throw UsageError("cycles supports 2 <= n <= 9");
    const auto cf = cycle_factor(cfg.n);
    if (dot) {
      std::cout << "graph cycles_" << cfg.n << " {\n";
      for (const auto& [t, c] : cf)
        std::cout << "  \"" << t << "\" [label=\"" << t << " lambda=" << c.lambda
                  << "\"];\n";
      std::cout << "}\n";
    } else {
      std::cout << "tree,lambda,length\n";
      for (const auto& [t, c] : cf)
        std::cout << t << ',' << c.lambda << ',' << c.vertices.size() << '\n';
    }
    return 0;
  }
  if (cfg.what == "gluing-graph") {
    if (cfg.n < 4 || cfg.n > 9) throw UsageError("gluing-graph supports 4 <= n <= 9");
    const GluingGraph g = build_gluing_graph(cfg.n);
    std::cout << (dot ? to_dot(g) : to_csv(g));
    return 0;
  }
  if (cfg.what == "spanning-tree") {
    if (cfg.n < 4 || cfg.n > 12) throw UsageError("spanning-tree supports 4 <= n <= 12");
    const SpanningTree t = build_spanning_tree(cfg.n);
    std::cout << (dot ? to_dot(t) : to_csv(t));
    return 0;
  }
  throw UsageError("unknown analysis " + cfg.what);
}

struct BenchConfig {
  int n_min = 50;
  int n_max = 200;
  long limit = 20000;
  int reps = 3;
};

double per_step_ns(int n, long limit, int reps) {
  double best = 0;
  for (int r = 0; r < reps; ++r) {
    Generator gen(n, 1);
    const auto t0 = std::chrono::steady_clock::now();
    for (long i = 0; i < limit; ++i)
      if (!gen.next()) break;
    const double ns =
        std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0)
            .count() /
        static_cast<double>(limit);
    if (r == 0 || ns < best) best = ns;
  }
  return best;
}

int cmd_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 4 || cfg.n_max < cfg.n_min) throw UsageError("need 4 <= n-min <= n-max");
  if (cfg.limit < 1 || cfg.reps < 1) throw UsageError("limit and reps must be positive");
  std::vector<int> sizes;
  for (int n = cfg.n_min; n < cfg.n_max; n *= 2) sizes.push_back(n);
  sizes.push_back(cfg.n_max);
  std::vector<double> xs, ys;
  std::cout << "n,ns_per_step\n";
  for (int n : sizes) {
    const double ns = per_step_ns(n, cfg.limit, cfg.reps);
    std::cout << n << ',' << ns << '\n';
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(ns));
  }
  double slope = 0;
  if (xs.size() > 1) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxy / sxx;
  }
  const double ratio = std::exp(ys.back() - ys.front());
  std::cout << "# ratio " << sizes.back() << "/" << sizes.front() << " = " << ratio
            << "\n# log-log slope = " << slope << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-transposition Gray codes for (n+1,n+1)-combinations"};
  app.require_subcommand(1);

  GenerateConfig gen;
  auto* g = app.add_subcommand("generate", "Stream the ordering");
  g->add_option("-n", gen.n, "Half size: combinations have length 2n+2")->required();
  g->add_option("--shift", gen.shift, "Shift coprime to 2n+1 (negative values allowed)");
  g->add_option("--start", gen.start, "Start combination, 2n+2 bits of weight n+1");
  g->add_option("--format", gen.format, "flips, combinations or both")
      ->check(CLI::IsMember({"flips", "combinations", "both"}));
  g->add_option("--limit", gen.limit, "Stop after this many lines")
      ->check(CLI::NonNegativeNumber);

  VerifyConfig ver;
  auto* v = app.add_subcommand("verify", "Run certificates");
  v->add_option("-n", ver.n, "Half size")->required();
  v->add_option("--suite", ver.suite, "lemmas, hamilton, blocks or all")
      ->check(CLI::IsMember({"lemmas", "hamilton", "blocks", "all"}));
  v->add_flag("--json", ver.json, "Print certificates as JSON");
  v->add_flag("--explain-shift", ver.explain_shift, "Print the shift-fixing plan");

  AnalyzeConfig an;
  auto* a = app.add_subcommand("analyze", "Export cycles, gluing graph or spanning tree");
  a->add_option("what", an.what, "cycles, gluing-graph or spanning-tree")
      ->required()
      ->check(CLI::IsMember({"cycles", "gluing-graph", "spanning-tree"}));
  a->add_option("-n", an.n, "Half size")->required();
  a->add_flag("--dot", an.dot, "Graphviz output");
  a->add_flag("--csv", an.csv, "CSV output (default)");

  BenchConfig be;
  auto* b = app.add_subcommand("bench", "Per-step timing across n");
  b->add_option("--n-min", be.n_min, "Smallest n");
  b->add_option("--n-max", be.n_max, "Largest n");
  b->add_option("--limit", be.limit, "Steps per measurement");
  b->add_option("--reps", be.reps, "Repetitions, best kept");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*v) return cmd_verify(ver);
    if (*a) return cmd_analyze(an);
    if (*b) return cmd_bench(be);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}
