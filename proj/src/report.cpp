#include "csrg/report.hpp"

#include <chrono>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "csrg/brute_oracle.hpp"
#include "csrg/cayley_graph.hpp"
#include "csrg/named_automorphisms.hpp"

namespace csrg
{

namespace
{

class Stopwatch
{
public:
  double lap()
  {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - _start).count();
    _start = now;
    return s;
  }

private:
  std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

} // namespace

AnalysisReport run_analyze(int n, bool with_oracle)
{
  if (n < min_modulus || n > max_modulus)
    throw std::invalid_argument("n must satisfy 4 <= n <= 1000, got " +
                                std::to_string(n));
  if (with_oracle && n > oracle_max_modulus)
    throw std::domain_error("the brute-force oracle is limited to n <= 7, got " +
                            std::to_string(n));

  AnalysisReport report;
  report.n = n;
  Stopwatch clock;

  auto g = build_gamma(n);
  report.timings.graph = clock.lap();

  if (auto srg = check_strongly_regular(g))
    report.srg_params = srg.value();
  if (auto ia = intersection_array(g))
    report.intersection_array = ia.value();
  report.timings.regularity = clock.lap();

  auto group = claimed_aut_group(g);
  report.claimed_group_order = group.order();
  report.stabilizer_order = group.point_stabilizer(0).order();
  report.timings.group = clock.lap();

  report.transitivity = classify(group, g, n);
  report.timings.transitivity = clock.lap();

  if (with_oracle) {
    auto brute = enumerate_automorphisms(g);
    OracleSummary summary;
    summary.brute_order = brute.elements.size();
    summary.agreement = summary.brute_order == report.claimed_group_order;
    for (auto const &p : brute.elements) {
      if (!summary.agreement)
        break;
      summary.agreement = group.contains(p);
    }
    report.oracle = summary;
    report.timings.oracle = clock.lap();
  }

  report.mismatches = check_predictions(report);
  return report;
}

std::vector<std::string> check_predictions(AnalysisReport const &report)
{
  std::vector<std::string> out;
  int n = report.n;
  long long nn = static_cast<long long>(n) * n;
  long long phi = euler_phi(n);
  auto const &t = report.transitivity;

  SrgParams expected_srg{nn, 3LL * n - 3, n, 6};
  if (!report.srg_params)
    out.push_back("Γ(" + std::to_string(n) + ") was not certified strongly regular");
  else if (!(*report.srg_params == expected_srg))
    out.push_back("SRG parameters differ from (n², 3n-3, n, 6)");

  IntersectionArray expected_ia{{3LL * n - 3, 2LL * n - 4}, {1, 6}};
  if (!report.intersection_array)
    out.push_back("Γ(" + std::to_string(n) + ") was not certified distance-regular");
  else if (!(*report.intersection_array == expected_ia))
    out.push_back("intersection array " + report.intersection_array->to_string() +
                  " differs from " + expected_ia.to_string());

  BigInt expected_order = BigInt(6) * nn * phi;
  if (report.claimed_group_order != expected_order)
    out.push_back("claimed group order " + report.claimed_group_order.str() +
                  " differs from 6n²φ(n) = " + expected_order.str());
  if (report.stabilizer_order != BigInt(6) * phi)
    out.push_back("stabilizer order " + report.stabilizer_order.str() +
                  " differs from 6φ(n) = " + std::to_string(6 * phi));
  if (report.claimed_group_order != report.stabilizer_order * nn)
    out.push_back("orbit-stabilizer identity fails");

  if (!t.vertex_transitive())
    out.push_back("not vertex-transitive");

  if (!is_prime(n) && t.edge_transitive())
    out.push_back("composite n but edge-transitive");
  if (is_prime(n) && !t.arc_transitive())
    out.push_back("prime n but not arc-transitive");
  if (n != 5 && t.distance_transitive())
    out.push_back("n != 5 but distance-transitive");
  if (n == 5 && !t.distance_transitive())
    out.push_back("n = 5 but not distance-transitive");
  if (n == 5 && t.two_arc_transitive())
    out.push_back("n = 5 but 2-arc-transitive");
  if (!t.implications_hold())
    out.push_back("transitivity implication chain violated");

  if (report.oracle) {
    if (report.oracle->brute_order != report.claimed_group_order)
      out.push_back("brute-force order " + report.oracle->brute_order.str() +
                    " differs from claimed order " +
                    report.claimed_group_order.str());
    else if (!report.oracle->agreement)
      out.push_back("a brute-force automorphism is missing from the claimed group");
  }

  for (auto &m : out)
    m = "n=" + std::to_string(n) + ": " + m;
  return out;
}

namespace
{

nlohmann::ordered_json big(BigInt const &value)
{
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return value.convert_to<std::uint64_t>();
  return value.str();
}

nlohmann::ordered_json tuple_json(std::vector<Vertex> const &tuple, int n)
{
  auto out = nlohmann::ordered_json::array();
  for (Vertex v : tuple) {
    if (n >= min_modulus) {
      ZnPair p = pair_of(v, n);
      out.push_back({p.i(), p.j()});
    } else {
      out.push_back(v);
    }
  }
  return out;
}

nlohmann::ordered_json witness_json(TransitivityCheck const &check, int n)
{
  if (!check.witness)
    return nullptr;
  nlohmann::ordered_json w;
  w["first"] = tuple_json(check.witness->first, n);
  w["second"] = tuple_json(check.witness->second, n);
  return w;
}

nlohmann::ordered_json transitivity_json(TransitivityReport const &t)
{
  nlohmann::ordered_json j;
  j["vertex_transitive"] = t.vertex_transitive();
  j["edge_transitive"] = t.edge_transitive();
  j["arc_transitive"] = t.arc_transitive();
  j["distance_transitive"] = t.distance_transitive();
  j["two_arc_transitive"] = t.two_arc_transitive();

  nlohmann::ordered_json w;
  w["vertex"] = witness_json(t.vertex, t.n);
  w["edge"] = witness_json(t.edge, t.n);
  w["arc"] = witness_json(t.arc, t.n);
  w["distance"] = witness_json(t.distance, t.n);
  w["two_arc"] = witness_json(t.two_arc, t.n);
  j["witnesses"] = w;

  nlohmann::ordered_json c;
  c["vertices"] = t.vertex.orbit_count();
  c["arcs"] = t.arc.orbit_count();
  c["edges"] = t.edge.orbit_count();
  if (t.distance_classes.size() > 2)
    c["distance_2_pairs"] = t.distance_classes[2].orbit_count();
  else
    c["distance_2_pairs"] = nullptr;
  c["two_arcs"] = t.two_arc.orbit_count();
  j["orbit_counts"] = c;
  return j;
}

} // namespace

nlohmann::ordered_json to_json(AnalysisReport const &report, bool include_timings)
{
  nlohmann::ordered_json j;
  j["n"] = report.n;

  if (report.srg_params) {
    auto const &p = *report.srg_params;
    j["srg_params"] = {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
  } else {
    j["srg_params"] = nullptr;
  }

  if (report.intersection_array) {
    auto const &ia = *report.intersection_array;
    j["intersection_array"] = {{"b", ia.b}, {"c", ia.c}, {"diameter", ia.diameter()}};
  } else {
    j["intersection_array"] = nullptr;
  }

  j["claimed_group_order"] = big(report.claimed_group_order);
  j["stabilizer_order"] = big(report.stabilizer_order);
  j["transitivity"] = transitivity_json(report.transitivity);

  if (report.oracle) {
    j["oracle"] = {{"brute_order", big(report.oracle->brute_order)},
                   {"agreement", report.oracle->agreement}};
  } else {
    j["oracle"] = nullptr;
  }

  auto timing = [include_timings](double s) -> nlohmann::ordered_json {
    if (!include_timings)
      return nullptr;
    return s;
  };
  j["timings"] = {{"graph_s", timing(report.timings.graph)},
                  {"regularity_s", timing(report.timings.regularity)},
                  {"group_s", timing(report.timings.group)},
                  {"transitivity_s", timing(report.timings.transitivity)},
                  {"oracle_s", timing(report.timings.oracle)}};

  j["status"] = report.passed() ? "OK" : "FAILED";
  j["mismatches"] = report.mismatches;
  return j;
}

bool VerifySummary::passed() const
{
  for (auto const &r : reports) {
    if (!r.passed())
      return false;
  }
  return true;
}

std::vector<std::string> VerifySummary::mismatches() const
{
  std::vector<std::string> out;
  for (auto const &r : reports)
    out.insert(out.end(), r.mismatches.begin(), r.mismatches.end());
  return out;
}

std::string VerifySummary::table() const
{
  std::ostringstream os;
  os << std::left << std::setw(5) << "n" << std::setw(18) << "srg"
     << std::setw(10) << "|Aut|" << std::setw(8) << "|G_0|" << std::setw(7)
     << "edge" << std::setw(7) << "arc" << std::setw(7) << "dist"
     << std::setw(7) << "2-arc" << std::setw(10) << "oracle" << "result\n";

  for (auto const &r : reports) {
    std::string srg = "-";
    if (r.srg_params) {
      auto const &p = *r.srg_params;
      srg = "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
            std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
    }
    std::string oracle = "-";
    if (r.oracle)
      oracle = r.oracle->brute_order.str() + (r.oracle->agreement ? "" : "!");

    auto const &t = r.transitivity;
    os << std::left << std::setw(5) << r.n << std::setw(18) << srg
       << std::setw(10) << r.claimed_group_order.str() << std::setw(8)
       << r.stabilizer_order.str() << std::setw(7) << yes_no(t.edge_transitive())
       << std::setw(7) << yes_no(t.arc_transitive()) << std::setw(7)
       << yes_no(t.distance_transitive()) << std::setw(7)
       << yes_no(t.two_arc_transitive()) << std::setw(10) << oracle
       << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

VerifySummary run_verify(int lo, int hi, int oracle_upto)
{
  if (lo > hi)
    throw std::invalid_argument("empty range " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  if (lo < min_modulus || hi > max_modulus)
    throw std::invalid_argument("range must lie within [4, 1000]");
  if (oracle_upto > oracle_max_modulus)
    throw std::domain_error("--oracle-upto is limited to 7, got " +
                            std::to_string(oracle_upto));

  VerifySummary summary;
  for (int n = lo; n <= hi; ++n)
    summary.reports.push_back(run_analyze(n, n <= oracle_upto));
  return summary;
}

} // namespace csrg
