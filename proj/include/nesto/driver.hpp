#pragma once

// Verification suites and their reports. Every leaf report carries the
// parameters that produced it, so `run_item(report.params)` replays it.

#include <iosfwd>
#include <string>
#include <vector>

#include "nesto/json_io.hpp"

namespace nesto {

enum class Status { Pass, Fail, Unknown };
std::string status_name(Status s);
/// Fail dominates unknown, unknown dominates pass.
Status combine(Status a, Status b);
/// 0 pass, 1 fail, 2 unknown.
int exit_code(Status s);

struct Report {
  std::string claim;
  Status status = Status::Pass;
  Json params;   // leaf reports only
  Json witness;  // fail reports hold a counterexample payload here
  double seconds = 0;
  std::vector<Report> items;

  void add(Report r);
};

Json to_json(const Report& r, bool timing = true);
Report report_from_json(const Json& j);
/// One line per leaf: "<status> <claim>".
void print_report(std::ostream& out, const Report& r, int indent = 0);

struct SuiteOptions {
  int dim_lo = 2, dim_hi = 4;
  int order_q = 4, order_x = 6;
  long long budget = 1 << 20;
  int threads = 1;
};

/// Resolves "polygon:N", "simplex_boundary:N", "q:N" and "nested:<family>:N".
SimplicialComplex named_complex(const std::string& name);

/// Generic boundary of the family's building set against the family formula.
Report verify_boundary(Family f, int lo, int hi);
/// Restriction witnesses S with B(n)|_S equivalent to the r-dimensional member,
/// plus a split check on the matching full subcomplex.
Report verify_direct_family(Family f, int lo, int hi);
/// B(P,4) contracted at {1,3}.
Report contraction_counterexample();
/// Canonical-class products on Q^n and P^n, naturality and the Pe^3 scan.
Report massey_family_report(const SuiteOptions& o);
Report series_report(const SuiteOptions& o);
Report cohomology_report(const SuiteOptions& o);
Report verify_all(const SuiteOptions& o);

/// Runs one leaf described by its params. An "expect": "fail" entry turns a
/// failing check into a passing claim and vice versa. `threads` only affects
/// speed, never the result.
Report run_item(const Json& params, int threads = 1);
/// Runs leaves on a pool of `threads` workers, each also allowed `threads`
/// for its own inner loops; results keep the input order.
std::vector<Report> run_items(const std::vector<Json>& params, int threads);
/// Reruns every leaf of a saved report.
Report replay(const Json& saved);

/// Command-line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nesto
