// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/report_io.hpp"

#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

namespace majorana_rp {

namespace {

using ojson = nlohmann::ordered_json;

// JSON has no NaN/Inf; they are written as null.
ojson num(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return x;
}

ojson element_json(const CliffordElement& a) {
  ojson terms = ojson::array();
  for (const auto& [bits, c] : a.terms()) {
    ojson t;
    t["indices"] = Monomial(a.generators(), bits).indices();
    t["re"] = num(c.real());
    t["im"] = num(c.imag());
    terms.push_back(std::move(t));
  }
  return terms;
}

ojson rp_json(const RPReport& r) {
  ojson j;
  j["beta"] = num(r.beta);
  j["side"] = to_string(r.side);
  j["gram_dim"] = r.gram_dim;
  j["min_eigenvalue"] = num(r.min_eigenvalue);
  j["max_eigenvalue"] = num(r.max_eigenvalue);
  j["hermiticity_residual"] = num(r.hermiticity_residual);
  j["tolerance"] = num(r.tolerance);
  j["verdict"] = to_string(r.verdict);
  j["classification"] = r.couplings_certified ? "certified" : "violated";
  j["classification_reasons"] = r.classification_reasons;
  j["mirror_symmetric"] = r.mirror_symmetric;
  j["structural_violations"] = r.structural_violations;
  ojson spec = ojson::array();
  for (double e : r.spectrum) {
    spec.push_back(num(e));
  }
  j["spectrum"] = std::move(spec);
  if (r.witness) {
    j["witness"] = element_json(*r.witness);
    if (r.witness_value) {
      j["witness_value"] = {{"re", num(r.witness_value->real())},
                            {"im", num(r.witness_value->imag())}};
    }
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string element_to_json(const CliffordElement& a) { return dump(element_json(a)); }

std::string rp_reports_to_json(const std::vector<RPReport>& reports) {
  ojson arr = ojson::array();
  for (const auto& r : reports) {
    arr.push_back(rp_json(r));
  }
  ojson j;
  j["reports"] = std::move(arr);
  return dump(j);
}

std::string bounds_report_to_json(const BoundsReport& r) {
  ojson j;
  j["couplings_certified"] = r.couplings_certified;
  j["symmetric"] = r.symmetric;
  j["partition_function"] = num(r.partition_function);
  j["z_minus"] = num(r.z_minus);
  j["z_plus"] = num(r.z_plus);
  j["partition_equality_residual"] = num(r.partition_equality_residual);
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}, {"slack", num(c.slack)}});
  }
  j["checks"] = std::move(checks);
  j["min_slack"] = num(r.min_slack);
  return dump(j);
}

std::string schwarz_report_to_json(const SchwarzReport& r) {
  ojson j;
  j["samples"] = r.samples;
  j["min_schwarz_slack"] = num(r.min_schwarz_slack);
  j["max_antiunitarity_residual"] = num(r.max_antiunitarity_residual);
  j["max_norm_residual"] = num(r.max_norm_residual);
  return dump(j);
}

std::string trotter_to_json(double beta, const std::vector<ConvergenceRow>& rows) {
  ojson j;
  j["beta"] = num(beta);
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    arr.push_back({{"k", r.k}, {"error", num(r.error)}, {"ratio", num(r.ratio)}});
  }
  j["rows"] = std::move(arr);
  return dump(j);
}

std::string gram_spectrum_csv(const std::vector<RPReport>& reports) {
  std::string out = "beta,index,eigenvalue\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
      out += format_double(r.beta) + "," + std::to_string(i) + "," +
             format_double(r.spectrum[i]) + "\n";
    }
  }
  return out;
}

std::string trotter_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "k,error,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + "," + format_double(r.error) + "," +
           (std::isnan(r.ratio) ? std::string() : format_double(r.ratio)) + "\n";
  }
  return out;
}

std::string bounds_csv(const BoundsReport& report) {
  std::string out = "name,lhs,rhs,slack\n";
  for (const auto& c : report.checks) {
    out += c.name + "," + format_double(c.lhs) + "," + format_double(c.rhs) + "," +
           format_double(c.slack) + "\n";
  }
  return out;
}

}  // namespace majorana_rp
