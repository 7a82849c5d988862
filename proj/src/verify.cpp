#include "cgt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "cgt/catalog.hpp"
#include "cgt/prober.hpp"

namespace cgt {

namespace {

using Cases = std::vector<CaseResult>;

std::string order_s(std::uint64_t n) { return std::to_string(n); }

void add_case(Cases& cases, const std::string& theorem, const std::string& group,
              const std::string& params, const std::string& expected, const std::string& computed,
              bool pass) {
  cases.push_back(CaseResult{theorem, group, params, expected, computed, pass});
}

// --- eq1: G <= G^(k) <= G^(k-1) ------------------------------------------

Cases run_eq1(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.group.degree > 10)
      continue;
    for (int k = 2; k <= opt.max_k; ++k) {
      std::ostringstream computed;
      bool pass = false;
      try {
        const GeneratedGroup closure_k = k_closure(entry.group, k, opt.limits);
        const GeneratedGroup closure_prev = k_closure(entry.group, k - 1, opt.limits);
        const StabilizerChain chain_k = build_chain(closure_k);
        const StabilizerChain chain_prev = build_chain(closure_prev);
        const bool lower = is_subgroup_of(entry.group, chain_k);
        const bool upper = is_subgroup_of(closure_k, chain_prev);
        pass = lower && upper;
        computed << "orders " << order_s(order(entry.group)) << " <= " << order_s(chain_k.order())
                 << " <= " << order_s(chain_prev.order()) << ", containments "
                 << (lower ? "ok" : "violated") << "/" << (upper ? "ok" : "violated");
      } catch (const CapExceededError& e) {
        computed << "cap exceeded: " << e.what();
      }
      add_case(cases, "eq1", entry.name, "k=" + std::to_string(k),
               "G <= G^(k) <= G^(k-1)", computed.str(), pass);
    }
  }
  return cases;
}

// --- wielandt: b(G) <= k implies G is (k+1)-closed ------------------------

Cases run_wielandt(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.group.degree > 10)
      continue;
    std::ostringstream computed;
    bool pass = false;
    try {
      const int b = base_number(entry.group);
      const bool closed = is_k_closed(entry.group, b + 1, opt.limits);
      pass = closed;
      computed << "b=" << b << ", " << (b + 1) << "-closed: " << (closed ? "true" : "false");
    } catch (const CapExceededError& e) {
      computed << "cap exceeded: " << e.what();
    }
    add_case(cases, "wielandt", entry.name, entry.params, "(b(G)+1)-closed", computed.str(),
             pass);
  }
  return cases;
}

// --- lemma-base: b(G) <= log_p |G|, minus one when nonabelian --------------

Cases run_lemma_base(const VerifyOptions& opt) {
  (void)opt;
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    const auto factors = factorize(order(entry.group));
    if (factors.size() != 1)
      continue;
    const int exponent = factors[0].second;
    const bool abelian = is_abelian(entry.group);
    const int bound = abelian ? exponent : exponent - 1;
    std::ostringstream computed;
    bool pass = false;
    int b = 0;
    bool exact = entry.group.degree <= kDefaultBaseSearchDegreeCap;
    if (exact) {
      b = base_number(entry.group);
      computed << "b = " << b << " (exact)";
    } else {
      b = static_cast<int>(greedy_base(entry.group).size());
      computed << "b <= " << b << " (greedy upper bound)";
    }
    pass = b <= bound;
    computed << ", bound " << bound;
    add_case(cases, "lemma-base", entry.name, "|G|=" + order_s(order(entry.group)),
             std::string(abelian ? "b <= log_p|G|" : "b <= log_p|G| - 1"), computed.str(), pass);
  }

  // Strictness: the two families attain their bounds.
  const std::vector<std::pair<std::string, int>> equalities = {
      {"Z2^2", 2}, {"Z2^3", 3}, {"D8xZ2", 3}, {"D8xZ2^2", 4}};
  for (const auto& [name, expected_b] : equalities) {
    const CatalogEntry& entry = catalog_entry(name);
    const int b = base_number(entry.group);
    add_case(cases, "lemma-base", entry.name, "strictness",
             "b == " + std::to_string(expected_b), "b = " + std::to_string(b),
             b == expected_b);
  }
  return cases;
}

// --- chnl: G^(k) equals the product of the Sylow closures ------------------

Cases run_chnl(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.group.degree > 10)
      continue;
    if (!entry.nilpotent) {
      std::string computed;
      bool pass = false;
      try {
        verify_chnl_product(entry.group, 2, opt.limits);
        computed = "no error raised";
      } catch (const NotNilpotentError&) {
        computed = "NotNilpotent raised";
        pass = true;
      }
      add_case(cases, "chnl", entry.name, "k=2", "NotNilpotent", computed, pass);
      continue;
    }
    for (int k = 2; k <= opt.max_k; ++k) {
      std::string computed;
      bool pass = false;
      try {
        pass = verify_chnl_product(entry.group, k, opt.limits);
        computed = pass ? "product formula holds" : "product formula violated";
      } catch (const CapExceededError& e) {
        computed = std::string("cap exceeded: ") + e.what();
      }
      add_case(cases, "chnl", entry.name, "k=" + std::to_string(k),
               "G^(k) == prod P^(k)", computed, pass);
    }
  }
  return cases;
}

// --- theorem-a: combine a Sylow witness into a whole-group witness ---------

Cases run_theorem_a(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (!entry.nilpotent || order(entry.group) > 12)
      continue;
    SylowDecomposition syl;
    try {
      syl = sylow_decomposition(entry.group);
    } catch (const NotNilpotentError&) {
      continue;
    }
    if (syl.primes.size() < 2)
      continue;
    for (std::size_t i = 0; i < syl.primes.size(); ++i) {
      const std::uint64_t q = syl.primes[i];
      const int bound = 2 * static_cast<int>(syl.orders[i]);
      const Verdict verdict =
          probe_totally_k_closed(cayley_table(syl.components[i]), 2, bound, opt.limits);
      std::ostringstream computed;
      bool pass = false;
      if (verdict.kind != VerdictKind::WitnessFound) {
        computed << "Sylow " << q << "-subgroup 2-closed in every representation up to degree "
                 << bound << " (nothing to combine)";
        pass = true;
      } else {
        SearchLimits limits = opt.limits;
        const GeneratedGroup combined =
            combine_sylow_witness(syl, q, verdict.witness->group);
        limits.closure_degree = std::max(limits.closure_degree, combined.degree);
        const std::uint64_t g_order = order(entry.group);
        const bool faithful = order(combined) == g_order;
        const std::uint64_t closure_order = order(k_closure(combined, 2, limits));
        pass = faithful && closure_order > g_order;
        computed << "combined degree " << combined.degree << ", faithful: "
                 << (faithful ? "true" : "false") << ", 2-closure order " << closure_order
                 << " vs |G| = " << g_order;
      }
      add_case(cases, "theorem-a", entry.name, "q=" + std::to_string(q),
               "Sylow witness lifts to a whole-group witness", computed.str(), pass);
    }
  }
  return cases;
}

// --- theorem-b: classification agrees with the bounded probe ---------------

Cases run_theorem_b(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (!entry.nilpotent || order(entry.group) > 16)
      continue;
    for (int k = 2; k <= opt.max_k; ++k) {
      Verdict decided;
      try {
        decided = classify_totally_k_closed(entry.group, k);
      } catch (const HypothesisNotMetError&) {
        continue;
      }
      const Verdict probe = probe_totally_k_closed(cayley_table(entry.group), k,
                                                   opt.prober_max_degree, opt.limits);
      const bool agree = decided.totally_closed
                             ? probe.kind == VerdictKind::ExhaustedBound
                             : probe.kind == VerdictKind::WitnessFound;
      add_case(cases, "theorem-b", entry.name, "k=" + std::to_string(k),
               decided.totally_closed ? "totally closed: probe exhausts bound"
                                      : "not totally closed: probe finds witness",
               decided.describe() + "; " + probe.describe(), agree);
    }
  }

  // Q8 at k=2 is outside the small-Sylow hypothesis; the nilpotent
  // 2-closed classification decides it instead.
  {
    const CatalogEntry& q8 = catalog_entry("Q8");
    const Verdict decided = classify_totally_2_closed_nilpotent(q8.group);
    const Verdict probe =
        probe_totally_k_closed(cayley_table(q8.group), 2, opt.prober_max_degree, opt.limits);
    const bool pass = decided.totally_closed && probe.kind == VerdictKind::ExhaustedBound;
    add_case(cases, "theorem-b", q8.name, "k=2 (2-closed classification)",
             "totally 2-closed: probe exhausts bound",
             decided.describe() + "; " + probe.describe(), pass);
  }
  return cases;
}

// --- cpr: witness at k = n(G), none at k = n(G) + 1 ------------------------

Cases run_cpr(const VerifyOptions& opt) {
  Cases cases;
  struct CprCase {
    const char* name;
    int witness_bound;
    int exhaust_bound;
  };
  const std::vector<CprCase> plan = {
      {"Z2", 4, 8}, {"Z3", 6, 8}, {"Z4", 8, 8}, {"Z2^2", 6, 12}, {"Z6-deg5", 12, 8}};
  for (const CprCase& c : plan) {
    const CatalogEntry& entry = catalog_entry(c.name);
    const int n_of_g = invariant_factor_count(entry.group);
    const AbstractGroup abstract = cayley_table(entry.group);
    const Verdict witness =
        probe_totally_k_closed(abstract, n_of_g, c.witness_bound, opt.limits);
    const Verdict exhaust =
        probe_totally_k_closed(abstract, n_of_g + 1, c.exhaust_bound, opt.limits);
    bool pass = witness.kind == VerdictKind::WitnessFound &&
                exhaust.kind == VerdictKind::ExhaustedBound;
    if (std::string(c.name) == "Z2^2")
      pass = pass && witness.witness->group.degree == 6 && witness.closure_order == 8;
    std::ostringstream computed;
    computed << "k=" << n_of_g << ": " << witness.describe() << "; k=" << (n_of_g + 1) << ": "
             << exhaust.describe();
    add_case(cases, "cpr", entry.name, "n(G)=" + std::to_string(n_of_g),
             "witness at n(G), none at n(G)+1", computed.str(), pass);
  }
  return cases;
}

// --- lemma-na: nonabelian groups of order p^k are totally k-closed ---------

Cases run_lemma_na(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.abelian || !entry.nilpotent)
      continue;
    const auto factors = factorize(order(entry.group));
    if (factors.size() != 1)
      continue;
    const int k = factors[0].second;
    const Verdict decided = classify_totally_k_closed(entry.group, k);
    std::ostringstream computed;
    computed << decided.describe();
    bool pass = decided.totally_closed;
    if (order(entry.group) <= 8) {
      const Verdict probe =
          probe_totally_k_closed(cayley_table(entry.group), k, 12, opt.limits);
      computed << "; " << probe.describe();
      pass = pass && probe.kind == VerdictKind::ExhaustedBound;
    }
    add_case(cases, "lemma-na", entry.name, "k=" + std::to_string(k),
             "totally k-closed (nonabelian, |G| = p^k)", computed.str(), pass);
  }
  return cases;
}

// --- regular-2closed: regular representations are 2-closed -----------------

Cases run_regular_2closed(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (order(entry.group) > 12)
      continue;
    const GeneratedGroup reg = regular_representation(cayley_table(entry.group));
    const bool closed = is_k_closed(reg, 2, opt.limits);
    add_case(cases, "regular-2closed", entry.name, "degree=" + std::to_string(reg.degree),
             "regular representation 2-closed", closed ? "2-closed: true" : "2-closed: false",
             closed);
  }
  return cases;
}

// --- oracle-equivalence: backtracking closure vs naive filter --------------

Cases run_oracle_equivalence(const VerifyOptions& opt) {
  Cases cases;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.group.degree > 7)
      continue;
    for (int k = 1; k <= std::min(3, opt.max_k); ++k) {
      const GeneratedGroup fast = k_closure(entry.group, k, opt.limits);
      const GeneratedGroup naive = k_closure_naive(entry.group, k, opt.limits);
      const bool equal = group_equal(fast, naive);
      std::ostringstream computed;
      computed << "orders " << order_s(order(fast)) << " / " << order_s(order(naive))
               << (equal ? ", equal element sets" : ", differ");
      add_case(cases, "oracle-equivalence", entry.name, "k=" + std::to_string(k),
               "k_closure == k_closure_naive", computed.str(), equal);
    }
  }
  return cases;
}

} // namespace

const std::vector<std::string>& verification_tags() {
  static const std::vector<std::string> tags = {
      "eq1",       "wielandt", "lemma-base", "chnl",           "theorem-a",
      "theorem-b", "cpr",      "lemma-na",   "regular-2closed", "oracle-equivalence"};
  return tags;
}

VerificationReport verify(const std::string& tag, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Cases cases;
  if (tag == "eq1")
    cases = run_eq1(options);
  else if (tag == "wielandt")
    cases = run_wielandt(options);
  else if (tag == "lemma-base")
    cases = run_lemma_base(options);
  else if (tag == "chnl")
    cases = run_chnl(options);
  else if (tag == "theorem-a")
    cases = run_theorem_a(options);
  else if (tag == "theorem-b")
    cases = run_theorem_b(options);
  else if (tag == "cpr")
    cases = run_cpr(options);
  else if (tag == "lemma-na")
    cases = run_lemma_na(options);
  else if (tag == "regular-2closed")
    cases = run_regular_2closed(options);
  else if (tag == "oracle-equivalence")
    cases = run_oracle_equivalence(options);
  else
    throw DomainError("unknown verification tag: " + tag);

  VerificationReport report;
  report.theorem = tag;
  report.cases = std::move(cases);
  for (const CaseResult& c : report.cases)
    (c.pass ? report.passed : report.failed) += 1;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> reports;
  for (const std::string& tag : verification_tags())
    reports.push_back(verify(tag, options));
  return reports;
}

std::string report_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  int passed = 0, failed = 0;
  double wall = 0.0;
  for (const VerificationReport& report : reports) {
    for (const CaseResult& c : report.cases) {
      out << (c.pass ? "PASS" : "FAIL") << "  " << c.theorem << "  " << c.group;
      if (!c.params.empty())
        out << " [" << c.params << "]";
      out << "\n      expected: " << c.expected << "\n      computed: " << c.computed << "\n";
    }
    passed += report.passed;
    failed += report.failed;
    wall += report.wall_ms;
  }
  out << "summary: " << (passed + failed) << " cases, " << passed << " passed, " << failed
      << " failed (" << static_cast<long long>(wall) << " ms)\n";
  return out.str();
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json cases = nlohmann::json::array();
  int passed = 0, failed = 0;
  double wall = 0.0;
  for (const VerificationReport& report : reports) {
    for (const CaseResult& c : report.cases) {
      cases.push_back({{"theorem", c.theorem},
                       {"group", c.group},
                       {"params", c.params},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    }
    passed += report.passed;
    failed += report.failed;
    wall += report.wall_ms;
  }
  nlohmann::json doc = {
      {"cases", std::move(cases)},
      {"summary", {{"total", passed + failed}, {"passed", passed}, {"failed", failed}}},
      {"wall_ms", wall}};
  return doc.dump(2) + "\n";
}

} // namespace cgt
