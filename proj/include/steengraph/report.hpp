#ifndef STEENGRAPH_REPORT_HPP_
#define STEENGRAPH_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "steengraph/algebra.hpp"
#include "steengraph/connectivity.hpp"
#include "steengraph/structure.hpp"

namespace steengraph {

/// Every criterion for one monomial next to its oracle verdict.
struct AnalysisReport {
  std::string monomial;
  int n = 0;
  std::vector<Edge> edges;
  WalkCountTable connection{0};
  WalkCountTable unilateral_table{0};
  std::vector<DegreeProfile> degrees;

  bool connected = false;
  bool oracle_connected = false;
  bool unilateral = false;
  bool oracle_unilateral = false;
  bool unilateral_via_antipode = false;
  bool tree = false;
  bool oracle_tree = false;
  bool paper_hamilton_condition = false;
  bool dirac_condition = false;
  bool hamilton_cycle_found = false;
  std::optional<VertexSequence> hamilton_cycle;
  bool hamilton_dipath = false;
  bool oracle_hamilton_dipath = false;
  std::optional<VertexSequence> hamilton_dipath_witness;

  /// Names of criteria whose verdict disagrees with the oracle (including a
  /// Dirac verdict without a cycle). Empty when all agree.
  std::vector<std::string> mismatches;
};

AnalysisReport analyze(const Monomial& x);

/// JSON text, two-space indented, keys in a fixed order, trailing LF.
std::string to_json(const AnalysisReport& report);

/// Human-readable summary, vertices printed as powers of two.
std::string to_text(const AnalysisReport& report);

}  // namespace steengraph

#endif  // STEENGRAPH_REPORT_HPP_
