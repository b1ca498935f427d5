#include "urprior/report.hpp"

#include <algorithm>
#include <sstream>

#include "urprior/cohomology.hpp"

namespace urprior {

CheckReport run_check(const AgentSystem& system, std::size_t max_dim) {
  CheckReport report;
  report.num_agents = system.size();
  report.num_outcomes = system.space().size();
  report.pairwise = pairwise_compatibility(system);
  const auto complex = build_overlap_complex(system, std::max<std::size_t>(max_dim, 2));
  report.counts.assign(std::max<std::size_t>(max_dim, 2) + 1, 0);
  for (std::size_t k = 0; k < report.counts.size(); ++k) report.counts[k] = complex.count(k);
  report.h1 = cohomology_dim(complex, 1);
  report.result = decide_urprior(system);
  return report;
}

namespace {

ordered_json agent_pair(const AgentSystem& system, AgentIndex i, AgentIndex j) {
  return ordered_json::array({system.agent(i).name, system.agent(j).name});
}

ordered_json violation_json(const AgentSystem& system, const PairViolation& v) {
  ordered_json mismatches = ordered_json::array();
  for (const auto& m : v.mismatches) {
    mismatches.push_back({{"outcome", system.space().label(m.outcome)},
                          {"conditionals", {to_string(m.conditional_first), to_string(m.conditional_second)}}});
  }
  return {{"kind", "pairwise_violation"},
          {"agents", agent_pair(system, v.first, v.second)},
          {"outcome", system.space().label(v.outcome)},
          {"conditionals", {to_string(v.conditional_first), to_string(v.conditional_second)}},
          {"mismatches", std::move(mismatches)}};
}

ordered_json asymmetry_json(const AgentSystem& system, const Asymmetry& a) {
  const AgentIndex pair[] = {a.first, a.second};
  ordered_json overlap = ordered_json::array();
  for (auto x : system.common_support(pair)) overlap.push_back(system.space().label(x));
  return {{"kind", "null_overlap_asymmetry"},
          {"agents", agent_pair(system, a.first, a.second)},
          {"overlap", std::move(overlap)},
          {"overlap_mass", {to_string(a.mass_first), to_string(a.mass_second)}}};
}

ordered_json cycle_json(const AgentSystem& system, const CycleCertificate& c) {
  ordered_json cycle = ordered_json::array();
  for (auto v : c.cycle) cycle.push_back(system.agent(v).name);
  return {{"kind", "cycle"},
          {"cycle", std::move(cycle)},
          {"failing_edge", agent_pair(system, c.failing_edge[0], c.failing_edge[1])},
          {"holonomy", to_string(c.holonomy)}};
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

ordered_json certificate_json(const AgentSystem& system, const Certificate& certificate) {
  return std::visit(overloaded{[&](const PairViolation& v) { return violation_json(system, v); },
                               [&](const Asymmetry& a) { return asymmetry_json(system, a); },
                               [&](const CycleCertificate& c) { return cycle_json(system, c); }},
                    certificate);
}

ordered_json measure_json(const AgentSystem& system, const Measure& measure) {
  ordered_json out = ordered_json::object();
  for (const auto& [x, p] : measure) out[system.space().label(x)] = to_string(p);
  return out;
}

ordered_json to_json(const AgentSystem& system, const CheckReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.pairwise.violations) violations.push_back(violation_json(system, v));
  ordered_json asymmetries = ordered_json::array();
  for (const auto& a : report.pairwise.asymmetries) asymmetries.push_back(asymmetry_json(system, a));

  const auto& result = report.result;
  ordered_json doc;
  doc["valid"] = true;
  doc["agents"] = report.num_agents;
  doc["outcomes"] = report.num_outcomes;
  doc["pairwise"] = {{"compatible", report.pairwise.compatible}, {"violations", std::move(violations)}};
  doc["asymmetries"] = std::move(asymmetries);
  doc["complex"] = {{"counts", report.counts}};
  doc["h1"] = report.h1;
  doc["verdict"] = to_string(result.verdict);
  doc["unique"] = result.verdict == Verdict::exists ? ordered_json(result.unique) : ordered_json(nullptr);
  doc["ur_prior"] = result.measure ? measure_json(system, *result.measure) : ordered_json(nullptr);
  if (result.scaling) {
    ordered_json scaling = ordered_json::object();
    for (AgentIndex i = 0; i < system.size(); ++i) scaling[system.agent(i).name] = to_string(result.scaling->lambda[i]);
    doc["scaling"] = std::move(scaling);
  } else {
    doc["scaling"] = nullptr;
  }
  doc["certificate"] = result.certificate ? certificate_json(system, *result.certificate) : ordered_json(nullptr);
  return doc;
}

ordered_json invalid_json(const std::vector<Violation>& violations) {
  ordered_json errors = ordered_json::array();
  for (const auto& v : violations) {
    errors.push_back({{"rule", to_string(v.rule)}, {"agent", v.agent}, {"outcome", v.outcome}, {"message", v.message}});
  }
  return {{"valid", false}, {"errors", std::move(errors)}};
}

ordered_json malformed_json(const std::string& message) {
  return {{"valid", false}, {"errors", {{{"rule", "malformed_file"}, {"agent", ""}, {"outcome", ""}, {"message", message}}}}};
}

ordered_json cohomology_json(const SimplicialComplex& complex, std::size_t k, bool dump_matrices) {
  ordered_json doc;
  doc["counts"] = complex.counts();
  ordered_json ranks = ordered_json::array();
  ordered_json matrices = ordered_json::array();
  for (std::size_t j = 0; complex.knows_dim(j + 1) && j < complex.counts().size(); ++j) {
    const MatrixQ delta = coboundary_matrix(complex, j);
    ranks.push_back(rank(delta));
    if (dump_matrices) {
      ordered_json rows = ordered_json::array();
      for (const auto& s : complex.simplices(j + 1)) rows.push_back(complex.label(s));
      ordered_json cols = ordered_json::array();
      for (const auto& s : complex.simplices(j)) cols.push_back(complex.label(s));
      ordered_json entries = ordered_json::array();
      for (Eigen::Index r = 0; r < delta.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < delta.cols(); ++c) row.push_back(to_string(delta(r, c)));
        entries.push_back(std::move(row));
      }
      matrices.push_back({{"k", j}, {"rows", std::move(rows)}, {"cols", std::move(cols)}, {"entries", std::move(entries)}});
    }
  }
  doc["ranks"] = std::move(ranks);
  const auto dims = cohomology_dims(complex, k);
  doc["k"] = k;
  doc["cochains"] = dims.cochains;
  doc["cocycles"] = dims.cocycles;
  doc["coboundaries"] = dims.coboundaries;
  doc["h"] = dims.betti();
  if (dump_matrices) doc["matrices"] = std::move(matrices);
  return doc;
}

ordered_json oracle_json(const AgentSystem& system, const std::optional<Measure>& measure) {
  return {{"valid", true},
          {"verdict", measure ? "exists" : "none"},
          {"ur_prior", measure ? measure_json(system, *measure) : ordered_json(nullptr)}};
}

namespace {

std::string join(const ordered_json& arr, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i > 0) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

void render_measure(std::ostream& os, const ordered_json& measure) {
  std::size_t width = 0;
  for (const auto& [label, p] : measure.items()) width = std::max(width, label.size());
  for (const auto& [label, p] : measure.items()) {
    os << "  " << label << std::string(width - label.size() + 2, ' ') << p.get<std::string>() << "\n";
  }
}

std::string render_certificate(const ordered_json& c) {
  const auto kind = c["kind"].get<std::string>();
  if (kind == "pairwise_violation") {
    std::string s = "agents " + join(c["agents"], " and ") + " disagree on the conditional of " +
                    c["outcome"].get<std::string>() + " given their overlap: " + join(c["conditionals"], " vs ");
    if (c["mismatches"].size() > 1) {
      s += " (also";
      for (std::size_t m = 1; m < c["mismatches"].size(); ++m) {
        const auto& mm = c["mismatches"][m];
        s += " " + mm["outcome"].get<std::string>() + ": " + join(mm["conditionals"], " vs ");
        if (m + 1 < c["mismatches"].size()) s += ";";
      }
      s += ")";
    }
    return s;
  }
  if (kind == "null_overlap_asymmetry") {
    return "agents " + join(c["agents"], " and ") + " overlap on {" + join(c["overlap"], ", ") +
           "} but assign it masses " + join(c["overlap_mass"], " and ");
  }
  return "cycle " + join(c["cycle"], " -> ") + " has holonomy " + c["holonomy"].get<std::string>() +
         " != 1 (failing edge " + join(c["failing_edge"], "-") + ")";
}

}  // namespace

std::string render_check(const ordered_json& r) {
  std::ostringstream os;
  os << "system: " << r["agents"] << " agents, " << r["outcomes"] << " outcomes (valid)\n";
  if (r["pairwise"]["compatible"].get<bool>()) {
    os << "pairwise compatibility: compatible\n";
  } else {
    os << "pairwise compatibility: " << r["pairwise"]["violations"].size() << " violating pair(s)\n";
    for (const auto& v : r["pairwise"]["violations"]) os << "  " << render_certificate(v) << "\n";
  }
  if (r["asymmetries"].empty()) {
    os << "null-overlap asymmetries: none\n";
  } else {
    os << "null-overlap asymmetries: " << r["asymmetries"].size() << "\n";
    for (const auto& a : r["asymmetries"]) os << "  " << render_certificate(a) << "\n";
  }
  os << "overlap complex counts: " << join(r["complex"]["counts"], " ") << "\n";
  os << "H1 = " << r["h1"] << "\n";
  if (r["verdict"] == "exists") {
    os << "verdict: ur-prior exists" << (r["unique"].get<bool>() ? " (unique)" : " (not unique: disconnected overlaps)")
       << "\n";
    os << "ur-prior:\n";
    render_measure(os, r["ur_prior"]);
  } else {
    os << "verdict: no ur-prior\n";
    os << "certificate: " << render_certificate(r["certificate"]) << "\n";
  }
  return os.str();
}

std::string render_cohomology(const ordered_json& r) {
  std::ostringstream os;
  os << "counts: " << join(r["counts"], " ") << "\n";
  for (std::size_t j = 0; j < r["ranks"].size(); ++j) os << "rank delta_" << j << " = " << r["ranks"][j] << "\n";
  const auto k = r["k"].get<std::size_t>();
  os << "cocycles " << r["cocycles"] << ", coboundaries " << r["coboundaries"] << ", H" << k << " = " << r["h"]
     << "\n";
  if (r.contains("matrices")) {
    for (const auto& m : r["matrices"]) {
      const auto j = m["k"].get<std::size_t>();
      os << "\ndelta_" << j << ": C^" << j << " -> C^" << j + 1 << "\n";
      if (m["rows"].empty() || m["cols"].empty()) {
        os << "  (" << m["rows"].size() << " x " << m["cols"].size() << ", empty)\n";
        continue;
      }
      std::size_t row_w = 0;
      for (const auto& lbl : m["rows"]) row_w = std::max(row_w, lbl.get<std::string>().size());
      std::size_t col_w = 2;
      for (const auto& lbl : m["cols"]) col_w = std::max(col_w, lbl.get<std::string>().size());
      os << std::string(row_w, ' ');
      for (const auto& lbl : m["cols"]) {
        const auto s = lbl.get<std::string>();
        os << " " << std::string(col_w - s.size(), ' ') << s;
      }
      os << "\n";
      for (std::size_t r_i = 0; r_i < m["rows"].size(); ++r_i) {
        const auto s = m["rows"][r_i].get<std::string>();
        os << s << std::string(row_w - s.size(), ' ');
        for (const auto& e : m["entries"][r_i]) {
          const auto v = e.get<std::string>();
          os << " " << std::string(col_w - v.size(), ' ') << v;
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string render_oracle(const ordered_json& r) {
  std::ostringstream os;
  if (r["verdict"] == "exists") {
    os << "oracle verdict: ur-prior exists\nur-prior:\n";
    render_measure(os, r["ur_prior"]);
  } else {
    os << "oracle verdict: no ur-prior\n";
  }
  return os.str();
}

std::string render_invalid(const ordered_json& r) {
  std::ostringstream os;
  os << "invalid input:\n";
  for (const auto& e : r["errors"]) os << "  " << e["message"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace urprior
