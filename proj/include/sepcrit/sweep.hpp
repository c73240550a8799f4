#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepcrit/criteria.hpp"

namespace sepcrit {

struct SweepRow {
    double param = 0.0;
    double trace_norm_R = 0.0;
    double s_min_R = 0.0;
    double min_pt_eig = 0.0;
    Verdict verdict_ppt = Verdict::Inconclusive;
    Verdict verdict_realign = Verdict::Inconclusive;
    Verdict verdict_smin = Verdict::Inconclusive;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    // First parameter value where each verdict flips, located by linear
    // interpolation of the corresponding statistic against its threshold.
    std::optional<double> crossing_ppt;
    std::optional<double> crossing_realign;
    std::optional<double> crossing_smin;
};

/// Evaluates a single-parameter family ("horodecki-f" or "horodecki-beta")
/// on the grid from, from+step, ..., up to `to`.
/// Throws ParamOutOfRange on an unknown family or an empty/invalid range.
SweepResult run_sweep(const std::string& family, double from, double to,
                      double step, double tol = kCriterionTol);

/// Deterministic CSV rendering: header plus one row per grid point, numbers
/// formatted with %.12g, '\n' line endings.
std::string sweep_csv(const SweepResult& result);

} // namespace sepcrit
