// Acceptance suite: runs every top-level correctness criterion and prints
// one PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cgt/catalog.hpp"
#include "cgt/prober.hpp"
#include "cgt/verify.hpp"

using namespace cgt;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok)
    ++failures;
  std::printf("%s  %2d. %s [%.1fs]%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), seconds,
              note.c_str());
  std::fflush(stdout);
}

bool within(double seconds, double cap, bool result) {
  return result && seconds <= cap;
}

std::string run_cli_capture(const std::string& arguments, int& exit_code) {
  const std::string out_path = "acceptance_cli_output.tmp";
  const std::string command =
      std::string(KCLOSURE_CLI_PATH) + " " + arguments + " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_path.c_str());
  return buffer.str();
}

std::string strip_wall_clock(const std::string& json_text) {
  return std::regex_replace(json_text, std::regex("\"wall_ms\": [0-9.eE+-]+"),
                            "\"wall_ms\": 0");
}

} // namespace

int main() {
  const std::vector<CatalogEntry>& entries = catalog();

  // 1. Oracle equivalence, degree <= 7, k in {1,2,3}, under 60 s.
  criterion(1, "oracle equivalence: k_closure == k_closure_naive (degree <= 7, k <= 3)", [&] {
    const auto start = std::chrono::steady_clock::now();
    for (const CatalogEntry& entry : entries) {
      if (entry.group.degree > 7)
        continue;
      for (int k = 1; k <= 3; ++k)
        if (!group_equal(k_closure(entry.group, k), k_closure_naive(entry.group, k)))
          return false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return within(seconds, 60.0, true);
  });

  // 2. Closure chain G <= G^(k) <= G^(k-1), degree <= 10, k in {2,3}.
  criterion(2, "closure chain: G <= G^(k) <= G^(k-1) (degree <= 10, k in {2,3})", [&] {
    for (const CatalogEntry& entry : entries) {
      if (entry.group.degree > 10)
        continue;
      for (int k = 2; k <= 3; ++k) {
        const GeneratedGroup ck = k_closure(entry.group, k);
        const GeneratedGroup cprev = k_closure(entry.group, k - 1);
        if (!is_subgroup_of(entry.group, build_chain(ck)))
          return false;
        if (!is_subgroup_of(ck, build_chain(cprev)))
          return false;
      }
    }
    return true;
  });

  // 3. Base-number bounds with equality on the strictness families.
  criterion(3, "base bounds: b <= log_p|G| (minus one when nonabelian), equalities attained", [&] {
    for (const CatalogEntry& entry : entries) {
      const auto factors = factorize(order(entry.group));
      if (factors.size() != 1)
        continue;
      const int exponent = factors[0].second;
      const int bound = is_abelian(entry.group) ? exponent : exponent - 1;
      int b = 0;
      if (entry.group.degree <= kDefaultBaseSearchDegreeCap)
        b = base_number(entry.group);
      else
        b = static_cast<int>(greedy_base(entry.group).size());
      if (b > bound)
        return false;
    }
    return base_number(parse_group_spec("4: (1 2), (3 4)")) == 2 &&
           base_number(parse_group_spec("6: (1 2), (3 4), (5 6)")) == 3 &&
           base_number(parse_group_spec("6: (1 2 3 4), (1 3), (5 6)")) == 3 &&
           base_number(parse_group_spec("8: (1 2 3 4), (1 3), (5 6), (7 8)")) == 4;
  });

  // 4. Wielandt criterion: every group is (b(G)+1)-closed.
  criterion(4, "Wielandt criterion: is_k_closed(g, b(g)+1) (degree <= 10)", [&] {
    for (const CatalogEntry& entry : entries) {
      if (entry.group.degree > 10)
        continue;
      if (!is_k_closed(entry.group, base_number(entry.group) + 1))
        return false;
    }
    return true;
  });

  // 5. Regular representations of order <= 12 are 2-closed.
  criterion(5, "regular representations of order <= 12 are 2-closed", [&] {
    for (const CatalogEntry& entry : entries) {
      if (order(entry.group) > 12)
        continue;
      if (!is_k_closed(regular_representation(cayley_table(entry.group)), 2))
        return false;
    }
    return true;
  });

  // 6. Sylow product formula, plus the non-nilpotent rejection.
  criterion(6, "Sylow product formula (nilpotent, degree <= 10, k in {2,3}); Sym3 rejected", [&] {
    for (const CatalogEntry& entry : entries) {
      if (!entry.nilpotent || entry.group.degree > 10)
        continue;
      for (int k = 2; k <= 3; ++k)
        if (!verify_chnl_product(entry.group, k))
          return false;
    }
    try {
      verify_chnl_product(catalog_entry("Sym3").group, 2);
      return false;
    } catch (const NotNilpotentError&) {
      return true;
    }
  });

  // 7. Probe desk-checks under two minutes.
  criterion(7, "probes: Z2^2 witness at k=2 (degree 6, order 8), none at k=3; Z4 none at k=2",
            [&] {
              const auto start = std::chrono::steady_clock::now();
              const AbstractGroup klein = cayley_table(parse_group_spec("4: (1 2), (3 4)"));
              const Verdict witness = probe_totally_k_closed(klein, 2, 6);
              if (witness.kind != VerdictKind::WitnessFound ||
                  witness.witness->group.degree != 6 || witness.closure_order != 8)
                return false;
              if (probe_totally_k_closed(klein, 3, 12).kind != VerdictKind::ExhaustedBound)
                return false;
              const AbstractGroup z4 = cayley_table(parse_group_spec("4: (1 2 3 4)"));
              if (probe_totally_k_closed(z4, 2, 8).kind != VerdictKind::ExhaustedBound)
                return false;
              const double seconds = std::chrono::duration<double>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
              return within(seconds, 120.0, true);
            });

  // 8. Classification agrees with the bounded probe up to degree 16.
  criterion(8, "classification vs probe (nilpotent, |G| <= 16, k in {2,3}, bound 16)", [&] {
    for (const CatalogEntry& entry : entries) {
      if (!entry.nilpotent || order(entry.group) > 16)
        continue;
      for (int k = 2; k <= 3; ++k) {
        Verdict decided;
        try {
          decided = classify_totally_k_closed(entry.group, k);
        } catch (const HypothesisNotMetError&) {
          continue;
        }
        const Verdict probe = probe_totally_k_closed(cayley_table(entry.group), k, 16);
        const bool agree = decided.totally_closed
                               ? probe.kind == VerdictKind::ExhaustedBound
                               : probe.kind == VerdictKind::WitnessFound;
        if (!agree)
          return false;
      }
    }
    // D8 at k=3 and Q8 at k=2 decided totally closed, no counterexample to 16.
    const Verdict d8 = classify_totally_k_closed(catalog_entry("D8").group, 3);
    if (!d8.totally_closed ||
        probe_totally_k_closed(cayley_table(catalog_entry("D8").group), 3, 16).kind !=
            VerdictKind::ExhaustedBound)
      return false;
    const Verdict q8 = classify_totally_2_closed_nilpotent(catalog_entry("Q8").group);
    return q8.totally_closed &&
           probe_totally_k_closed(cayley_table(catalog_entry("Q8").group), 2, 16).kind ==
               VerdictKind::ExhaustedBound;
  });

  // 9. Constructive witness combination for Z2^2 x Z3.
  criterion(9, "combined Sylow witness for Z2^2 x Z3: degree 9, 2-closure order 24", [&] {
    const GeneratedGroup g = parse_group_spec("7: (1 2), (3 4), (5 6 7)");
    const SylowDecomposition syl = sylow_decomposition(g);
    const Verdict witness =
        probe_totally_k_closed(cayley_table(syl.component(2)), 2, 8);
    if (witness.kind != VerdictKind::WitnessFound)
      return false;
    const GeneratedGroup combined = combine_sylow_witness(syl, 2, witness.witness->group);
    if (combined.degree != 9 || order(combined) != 12)
      return false;
    const std::uint64_t closure_order = order(k_closure(combined, 2));
    return closure_order == 24 && closure_order > 12;
  });

  // 10. Byte-identical verify-all reports modulo the wall-clock field.
  criterion(10, "determinism: two `verify all --format json` runs are byte-identical", [&] {
    int code1 = -1, code2 = -1;
    const std::string first = run_cli_capture("verify all --format json", code1);
    const std::string second = run_cli_capture("verify all --format json", code2);
    if (code1 != 0 || code2 != 0)
      return false;
    return strip_wall_clock(first) == strip_wall_clock(second) && first.find("\"pass\"") !=
           std::string::npos;
  });

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
