// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/gibbs_rp.hpp"
#include "majorana_rp/trotter.hpp"

namespace majorana_rp {

// Serializers return text with a fixed key order and a trailing newline, so
// identical inputs give byte-identical files.

/// Terms as [{"indices": [...], "re": x, "im": y}, ...] in canonical order.
std::string element_to_json(const CliffordElement& a);

std::string rp_reports_to_json(const std::vector<RPReport>& reports);
std::string bounds_report_to_json(const BoundsReport& report);
std::string schwarz_report_to_json(const SchwarzReport& report);

std::string trotter_to_json(double beta, const std::vector<ConvergenceRow>& rows);

/// Columns: beta,index,eigenvalue.
std::string gram_spectrum_csv(const std::vector<RPReport>& reports);
/// Columns: k,error,ratio (ratio empty on the first row).
std::string trotter_csv(const std::vector<ConvergenceRow>& rows);
/// Columns: name,lhs,rhs,slack.
std::string bounds_csv(const BoundsReport& report);

/// Shortest round-trip decimal for a double ("nan"/"inf" for non-finite).
std::string format_double(double x);

}  // namespace majorana_rp
