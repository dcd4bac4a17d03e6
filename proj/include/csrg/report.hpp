#ifndef CSRG_REPORT_HPP
#define CSRG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csrg/perm_group.hpp"
#include "csrg/regularity.hpp"
#include "csrg/transitivity.hpp"

namespace csrg
{

struct OracleSummary
{
  BigInt brute_order;
  bool agreement = false; // counts equal and every element sifts
};

/// Wall-clock seconds per phase.
struct PhaseTimings
{
  double graph = 0, regularity = 0, group = 0, transitivity = 0, oracle = 0;
};

struct AnalysisReport
{
  int n = 0;
  std::optional<SrgParams> srg_params;
  std::optional<IntersectionArray> intersection_array;
  BigInt claimed_group_order;
  BigInt stabilizer_order;
  TransitivityReport transitivity;
  std::optional<OracleSummary> oracle;
  PhaseTimings timings;

  /// Every predicted value that was not reproduced.
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Full pipeline for one modulus. Throws std::invalid_argument outside
/// 4 <= n <= 1000 and std::domain_error when the oracle is requested for n > 7.
AnalysisReport run_analyze(int n, bool with_oracle);

/// Compares a report against the values predicted for Γ(n): SRG parameters
/// (n², 3n-3, n, 6), intersection array {3n-3, 2n-4; 1, 6}, |Aut| = 6n²φ(n),
/// |stabilizer| = 6φ(n), vertex-transitivity, composite n not edge-transitive,
/// prime n arc-transitive, n != 5 not distance-transitive, n = 5
/// distance-transitive but not 2-arc-transitive, and oracle agreement.
std::vector<std::string> check_predictions(AnalysisReport const &report);

/// A report as JSON with a fixed key order. With `include_timings` false the
/// timing values are null, making the document byte-for-byte reproducible.
nlohmann::ordered_json to_json(AnalysisReport const &report,
                               bool include_timings = true);

struct VerifySummary
{
  std::vector<AnalysisReport> reports;

  bool passed() const;
  std::string table() const;
  std::vector<std::string> mismatches() const;
};

/// Runs run_analyze for every n in [lo, hi], with the oracle for n <= oracle_upto
/// (0 disables it). Throws std::invalid_argument for a range outside [4, 1000]
/// or lo > hi, std::domain_error for oracle_upto > 7.
VerifySummary run_verify(int lo, int hi, int oracle_upto = 0);

} // namespace csrg

#endif // CSRG_REPORT_HPP
