#include "steengraph/report.hpp"

#include <json.hpp>

#include "steengraph/hopf.hpp"
#include "steengraph/wood_graph.hpp"

namespace steengraph {

AnalysisReport analyze(const Monomial& x) {
  const WoodGraph g = to_graph(x);
  AnalysisReport r;
  r.monomial = x.to_string();
  r.n = x.level().n();
  r.edges = g.edges();
  r.connection = connection_numbers(x);
  r.unilateral_table = unilateral_numbers(x);
  for (int p = 0; p < g.vertex_count(); ++p) r.degrees.push_back(degrees(x, p));

  r.connected = r.connection.all_positive();
  r.oracle_connected = oracle_is_connected(g);
  r.unilateral = r.unilateral_table.all_positive();
  r.oracle_unilateral = oracle_is_unilateral(g);
  r.unilateral_via_antipode = steengraph::unilateral_via_antipode(x);
  r.tree = is_tree(x);
  r.oracle_tree = oracle_is_tree(g);
  r.paper_hamilton_condition = steengraph::paper_hamilton_condition(x);
  r.dirac_condition = steengraph::dirac_condition(x);
  r.hamilton_cycle = oracle_hamilton_cycle(g);
  r.hamilton_cycle_found = r.hamilton_cycle.has_value();
  r.hamilton_dipath_witness = hamilton_directed_path(x);
  r.hamilton_dipath = r.hamilton_dipath_witness.has_value();
  r.oracle_hamilton_dipath = oracle_hamilton_directed_path(g).has_value();

  if (r.connected != r.oracle_connected) r.mismatches.emplace_back("connected");
  if (r.unilateral != r.oracle_unilateral) r.mismatches.emplace_back("unilateral");
  if (r.unilateral_via_antipode != r.oracle_unilateral) r.mismatches.emplace_back("unilateral_via_antipode");
  if (r.tree != r.oracle_tree) r.mismatches.emplace_back("tree");
  if (r.dirac_condition && !r.hamilton_cycle_found) r.mismatches.emplace_back("dirac_condition");
  if (r.hamilton_dipath != r.oracle_hamilton_dipath) r.mismatches.emplace_back("hamilton_dipath");
  return r;
}

namespace {

nlohmann::ordered_json table_json(const WalkCountTable& table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : table.entries()) {
    nlohmann::ordered_json item;
    item["p"] = e.p;
    item["q"] = e.q;
    item["value"] = e.value;
    arr.push_back(std::move(item));
  }
  return arr;
}

nlohmann::ordered_json labels(const std::optional<VertexSequence>& seq) {
  if (!seq) return nullptr;
  auto arr = nlohmann::ordered_json::array();
  for (int v : seq->vertices) arr.push_back(std::uint64_t{1} << v);
  return arr;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["monomial"] = r.monomial;
  j["n"] = r.n;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : r.edges) edges.push_back({std::uint64_t{1} << e.low, std::uint64_t{1} << e.high});
  j["edges"] = std::move(edges);
  j["C"] = table_json(r.connection);
  j["U"] = table_json(r.unilateral_table);
  auto degs = nlohmann::ordered_json::array();
  for (const auto& d : r.degrees) {
    nlohmann::ordered_json item;
    item["vertex"] = std::uint64_t{1} << d.vertex;
    item["in"] = d.in_degree;
    item["out"] = d.out_degree;
    item["degree"] = d.degree;
    degs.push_back(std::move(item));
  }
  j["degrees"] = std::move(degs);
  j["connected"] = r.connected;
  j["oracle_connected"] = r.oracle_connected;
  j["unilateral"] = r.unilateral;
  j["oracle_unilateral"] = r.oracle_unilateral;
  j["unilateral_via_antipode"] = r.unilateral_via_antipode;
  j["tree"] = r.tree;
  j["oracle_tree"] = r.oracle_tree;
  j["paper_hamilton_condition"] = r.paper_hamilton_condition;
  j["dirac_condition"] = r.dirac_condition;
  j["hamilton_cycle_found"] = r.hamilton_cycle_found;
  j["hamilton_cycle"] = labels(r.hamilton_cycle);
  j["hamilton_dipath"] = r.hamilton_dipath;
  j["oracle_hamilton_dipath"] = r.oracle_hamilton_dipath;
  j["hamilton_dipath_witness"] = labels(r.hamilton_dipath_witness);
  j["mismatches"] = r.mismatches;
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::string out;
  out += "monomial: " + r.monomial + " in A*(" + std::to_string(r.n) + ")\n";
  out += "edges:";
  if (r.edges.empty()) out += " (none)";
  for (const Edge& e : r.edges) out += " " + vertex_label(e.low) + "-" + vertex_label(e.high);
  out += "\n";

  auto table = [&](const char* name, const WalkCountTable& t) {
    out += std::string(name) + ":";
    for (const auto& e : t.entries()) {
      out += " " + std::string(name) + "(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")=" +
             std::to_string(e.value);
    }
    out += "\n";
  };
  table("C", r.connection);
  table("U", r.unilateral_table);

  out += "degrees (in+out):";
  for (const auto& d : r.degrees) {
    out += " " + vertex_label(d.vertex) + ":" + std::to_string(d.in_degree) + "+" + std::to_string(d.out_degree);
  }
  out += "\n";

  out += std::string("connected: ") + yes_no(r.connected) + " (oracle " + yes_no(r.oracle_connected) + ")\n";
  out += std::string("unilateral: ") + yes_no(r.unilateral) + " (oracle " + yes_no(r.oracle_unilateral) +
         ", via antipode " + yes_no(r.unilateral_via_antipode) + ")\n";
  out += std::string("tree: ") + yes_no(r.tree) + " (oracle " + yes_no(r.oracle_tree) + ")\n";
  out += std::string("degree condition n/2: ") + yes_no(r.paper_hamilton_condition) + "\n";
  out += std::string("Dirac condition (n+2)/2: ") + yes_no(r.dirac_condition) + "\n";
  out += std::string("Hamilton cycle: ") + (r.hamilton_cycle ? r.hamilton_cycle->to_cycle_string() : "none") + "\n";
  out += std::string("Hamilton directed path: ") +
         (r.hamilton_dipath_witness ? r.hamilton_dipath_witness->to_directed_string() : "none") + " (oracle " +
         yes_no(r.oracle_hamilton_dipath) + ")\n";
  if (!r.mismatches.empty()) {
    out += "MISMATCH:";
    for (const auto& m : r.mismatches) out += " " + m;
    out += "\n";
  }
  return out;
}

}  // namespace steengraph
