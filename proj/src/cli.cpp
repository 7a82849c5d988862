#include "cgt/cli.hpp"

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/catalog.hpp"
#include "cgt/prober.hpp"
#include "cgt/verify.hpp"

namespace cgt {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json doc;
  switch (v.kind) {
  case VerdictKind::TheoremDecided:
    doc["kind"] = "theorem-decided";
    doc["totally_closed"] = v.totally_closed;
    doc["citation"] = v.citation;
    break;
  case VerdictKind::WitnessFound:
    doc["kind"] = "witness-found";
    doc["witness_group"] = format_group(v.witness->group);
    doc["witness_stabilizers"] = v.witness->description;
    doc["closure_order"] = v.closure_order;
    break;
  case VerdictKind::ExhaustedBound:
    doc["kind"] = "exhausted-bound";
    doc["bound"] = v.bound;
    break;
  }
  doc["k"] = v.k;
  return doc;
}

int cmd_closure(const std::string& spec, int k, bool naive, int max_degree) {
  const GeneratedGroup g = parse_group_spec(spec);
  SearchLimits limits;
  if (max_degree > 0) {
    limits.closure_degree = max_degree;
    limits.naive_degree = max_degree;
  }
  const GeneratedGroup closure =
      naive ? k_closure_naive(g, k, limits) : k_closure(g, k, limits);
  const std::uint64_t closure_order = order(closure);
  const std::uint64_t group_order = order(g);
  std::cout << "order: " << closure_order << "\n";
  std::cout << "generators: ";
  for (std::size_t i = 0; i < closure.generators.size(); ++i) {
    if (i)
      std::cout << ", ";
    std::cout << format_cycles(closure.generators[i]);
  }
  std::cout << "\n";
  std::cout << k << "-closed: " << (closure_order == group_order ? "true" : "false") << "\n";
  return kExitPass;
}

int cmd_base(const std::string& spec, bool exact, bool greedy) {
  const GeneratedGroup g = parse_group_spec(spec);
  if (greedy && !exact) {
    const std::vector<int> base = greedy_base(g);
    std::cout << "greedy base:";
    for (int beta : base)
      std::cout << " " << beta;
    std::cout << "\nlength: " << base.size() << "\n";
  } else {
    const int b = base_number(g);
    std::cout << "base number: " << b << "\n";
  }
  return kExitPass;
}

int cmd_sylow(const std::string& spec) {
  const GeneratedGroup g = parse_group_spec(spec);
  const SylowDecomposition syl = sylow_decomposition(g);
  std::cout << "order: " << order(g) << "\n";
  for (std::size_t i = 0; i < syl.primes.size(); ++i) {
    std::cout << "p=" << syl.primes[i] << " order=" << syl.orders[i] << " generators: ";
    for (std::size_t j = 0; j < syl.components[i].generators.size(); ++j) {
      if (j)
        std::cout << ", ";
      std::cout << format_cycles(syl.components[i].generators[j]);
    }
    std::cout << "\n";
  }
  return kExitPass;
}

int cmd_prober(const std::string& spec, int k, int max_degree, const std::string& format) {
  const GeneratedGroup g = parse_group_spec(spec);
  const Verdict verdict = probe_totally_k_closed(cayley_table(g), k, max_degree);
  if (format == "json")
    std::cout << verdict_to_json(verdict).dump(2) << "\n";
  else
    std::cout << verdict.describe() << "\n";
  return kExitPass;
}

int cmd_classify(const std::string& spec, int k, const std::string& format) {
  const GeneratedGroup g = parse_group_spec(spec);
  const Verdict verdict = classify_totally_k_closed(g, k);
  if (format == "json")
    std::cout << verdict_to_json(verdict).dump(2) << "\n";
  else
    std::cout << verdict.describe() << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& tag, const std::string& format, int max_degree,
               std::uint64_t max_order, int max_k) {
  VerifyOptions options;
  if (max_degree > 0) {
    options.prober_max_degree = max_degree;
    options.limits.closure_degree = std::max(options.limits.closure_degree, max_degree);
  }
  if (max_order > 0)
    options.limits.element_cap = max_order;
  options.max_k = max_k;
  std::vector<VerificationReport> reports;
  if (tag == "all")
    reports = verify_all(options);
  else
    reports.push_back(verify(tag, options));
  if (format == "json")
    std::cout << report_to_json(reports);
  else
    std::cout << report_to_text(reports);
  for (const VerificationReport& report : reports)
    if (!report.ok())
      return kExitFail;
  return kExitPass;
}

int cmd_catalog(const std::string& format) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogEntry& entry : catalog()) {
      doc.push_back({{"name", entry.name},
                     {"group", format_group(entry.group)},
                     {"order", entry.expected_order},
                     {"abelian", entry.abelian},
                     {"nilpotent", entry.nilpotent}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const CatalogEntry& entry : catalog()) {
      std::cout << entry.name << "  |G|=" << entry.expected_order
                << (entry.abelian ? "  abelian" : "  nonabelian")
                << (entry.nilpotent ? " nilpotent" : " non-nilpotent") << "  "
                << format_group(entry.group) << "\n";
    }
  }
  return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"permutation group closures, bases, Sylow structure, and theorem verification",
               "kclosure"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string tag;
  std::string format = "text";
  int k = 2;
  int max_degree = 0;
  std::uint64_t max_order = 0;
  bool naive = false;
  bool exact = false;
  bool greedy = false;

  CLI::App* closure_cmd = app.add_subcommand("closure", "compute the k-closure of a group");
  closure_cmd->add_option("--group", group_spec, "group spec \"degree: gens\"")->required();
  closure_cmd->add_option("--k", k, "tuple arity")->required();
  closure_cmd->add_flag("--naive", naive, "use the full-enumeration engine");
  closure_cmd->add_option("--max-degree", max_degree, "override the search degree cap");

  CLI::App* base_cmd = app.add_subcommand("base", "base number of a group");
  base_cmd->add_option("--group", group_spec)->required();
  base_cmd->add_flag("--exact", exact, "exact minimal base size (default)");
  base_cmd->add_flag("--greedy", greedy, "greedy base instead of the exact search");

  CLI::App* sylow_cmd = app.add_subcommand("sylow", "Sylow decomposition of a nilpotent group");
  sylow_cmd->add_option("--group", group_spec)->required();

  CLI::App* prober_cmd =
      app.add_subcommand("prober", "search faithful representations for a closure witness");
  prober_cmd->add_option("--group", group_spec)->required();
  prober_cmd->add_option("--k", k)->required();
  prober_cmd->add_option("--max-degree", max_degree, "largest representation degree")->required();
  prober_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "decide total k-closedness for small-Sylow nilpotent groups");
  classify_cmd->add_option("--group", group_spec)->required();
  classify_cmd->add_option("--k", k)->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int verify_max_k = 3;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem verification suite");
  verify_cmd->add_option("tag", tag, "suite tag or 'all'")->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--max-degree", max_degree, "override the prober degree bound");
  verify_cmd->add_option("--max-order", max_order, "override the element enumeration cap");
  verify_cmd->add_option("--k", verify_max_k, "largest tuple arity the suites run");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the built-in group catalog");
  catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(closure_cmd))
      return cmd_closure(group_spec, k, naive, max_degree);
    if (app.got_subcommand(base_cmd))
      return cmd_base(group_spec, exact, greedy);
    if (app.got_subcommand(sylow_cmd))
      return cmd_sylow(group_spec);
    if (app.got_subcommand(prober_cmd))
      return cmd_prober(group_spec, k, max_degree, format);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(group_spec, k, format);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(tag, format, max_degree, max_order, verify_max_k);
    if (app.got_subcommand(catalog_cmd))
      return cmd_catalog(format);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace cgt
