#include "eugb/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eugb/buchberger.hpp"
#include "eugb/errors.hpp"
#include "eugb/f4.hpp"
#include "eugb/parser.hpp"
#include "eugb/report.hpp"

namespace eugb {
namespace {

struct Options {
  std::string input;
  std::string engine = "f4";
  std::string strategy = "mindeg";
  std::string order;
  std::string ring;
  std::string criteria = "off";
  std::string pairs = "closed";
  std::string hpolys = "gcd";
  std::string verify = "spoly";
  std::string stats = "human";
  bool normalize = false;
  bool tailreduce = false;
  bool trace = false;
  std::optional<std::size_t> maxRounds;
};

std::optional<std::string> readInput(const std::string& path, std::ostream& err) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "gb: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  buf << in.rdbuf();
  return buf.str();
}

Polynomial normalized(const Polynomial& p) {
  if (p.isZero()) return p;
  return scale(p, p.ring().canonicalAssociate(p.lc()).unit);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Groebner bases over the integers and the rationals", "gb"};
  app.add_option("input", opt.input, "Problem file, or - for stdin")->required();
  app.add_option("--engine", opt.engine, "f4 | buchberger")->check(CLI::IsMember({"f4", "buchberger"}));
  app.add_option("--strategy", opt.strategy, "all | mindeg")->check(CLI::IsMember({"all", "mindeg"}));
  app.add_option("--order", opt.order, "lex | deglex | degrevlex (overrides the file)")
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
  app.add_option("--ring", opt.ring, "integers | rationals (overrides the file)")
      ->check(CLI::IsMember({"integers", "rationals"}));
  app.add_option("--criteria", opt.criteria, "on | off")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--pairs", opt.pairs, "paper | closed")->check(CLI::IsMember({"paper", "closed"}));
  app.add_option("--hpolys", opt.hpolys, "gcd | lcm")->check(CLI::IsMember({"gcd", "lcm"}));
  app.add_option("--verify", opt.verify, "none | spoly | strong")->check(CLI::IsMember({"none", "spoly", "strong"}));
  app.add_option("--stats", opt.stats, "human | json")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--normalize", opt.normalize, "Print canonical-associate leading coefficients");
  app.add_flag("--tailreduce", opt.tailreduce, "Reduce non-leading terms of the result");
  app.add_flag("--trace", opt.trace, "Per-round F4 trace on stderr");
  app.add_option("--max-rounds", opt.maxRounds, "Round guard (iterations for buchberger)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gb: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::optional<std::string> text = readInput(opt.input, err);
  if (!text) return kExitUsage;

  ProblemFile problem;
  try {
    problem = parseProblem(*text);
  } catch (const ParseError& e) {
    err << opt.input << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (!opt.order.empty()) problem.order = parseOrder(opt.order);
  if (!opt.ring.empty()) problem.ring = parseRing(opt.ring);
  const ContextPtr ctx = makeContext(problem.ring, problem.variables, problem.order);
  const std::vector<Polynomial> F = generators(problem, ctx);
  if (std::all_of(F.begin(), F.end(), [](const Polynomial& p) { return p.isZero(); })) {
    err << opt.input << ": all generators are zero\n";
    return kExitUsage;
  }

  RunReport report;
  report.engine = opt.engine;
  report.ring = std::string(toString(problem.ring));
  report.order = std::string(toString(problem.order));
  report.strategy = opt.strategy;
  report.pairUpdate = opt.pairs;
  report.hPolys = opt.hpolys;
  report.criteria = opt.criteria == "on";
  report.normalized = opt.normalize;
  report.tailReduced = opt.tailreduce;

  std::vector<Polynomial> basis;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (opt.engine == "f4") {
      F4Config config;
      config.strategy = opt.strategy == "all" ? SelectionStrategy::All : SelectionStrategy::MinLcmDegree;
      config.pairUpdate = opt.pairs == "paper" ? PairUpdate::Minimal : PairUpdate::Closed;
      config.hConstruction = opt.hpolys == "lcm" ? HConstruction::TermLcm : HConstruction::WithGcd;
      config.criteria = report.criteria;
      config.trackCertificates = false;
      if (opt.maxRounds) config.maxRounds = *opt.maxRounds;
      if (opt.trace) {
        config.onRound = [&err, &ctx](const RoundTrace& t) { err << formatTrace(t, *ctx) << '\n'; };
      }
      F4Result r = f4(F, config);
      basis = std::move(r.basis);
      report.stats = r.stats;
    } else {
      OracleConfig config;
      if (opt.maxRounds) config.maxIterations = *opt.maxRounds;
      BuchbergerResult r = buchberger(F, config);
      basis = std::move(r.basis);
      report.stats = r.stats;
    }
  } catch (const GuardExceeded& e) {
    err << "gb: " << e.what() << " (basis size " << e.partialBasis().size() << ")\n";
    return kExitGuard;
  }
  if (opt.tailreduce) basis = tailReduce(basis);
  if (opt.normalize) {
    for (Polynomial& p : basis) p = normalized(p);
  }
  report.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.verify != "none") report.verifiedSpoly = isGroebnerBasis(basis, VerifyLevel::Spoly);
  if (opt.verify == "strong") report.verifiedGpoly = isGroebnerBasis(basis, VerifyLevel::Strong);
  for (const Polynomial& p : basis) report.basis.push_back(render(p));

  out << renderReport(report, opt.stats == "json" ? ReportFormat::Json : ReportFormat::Human);
  if (report.verifiedSpoly == false || report.verifiedGpoly == false) {
    err << "gb: verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace eugb
