#include "sepcrit/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sepcrit/families.hpp"

namespace sepcrit {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Parameter where `stat` crosses `threshold` between two grid points.
double interpolate(double p0, double s0, double p1, double s1,
                   double threshold) {
    if (s1 == s0)
        return p1;
    return p0 + (p1 - p0) * (threshold - s0) / (s1 - s0);
}

} // namespace

SweepResult run_sweep(const std::string& family, double from, double to,
                      double step, double tol) {
    if (family != "horodecki-f" && family != "horodecki-beta")
        throw ParamOutOfRange("family '" + family +
                              "' does not support a parameter sweep");
    if (!(step > 0.0) || to < from)
        throw ParamOutOfRange("empty or invalid range");
    const std::string key = (family == "horodecki-f") ? "f" : "beta";

    SweepResult result;
    const int count = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
    double smin_threshold = 0.0;
    for (int i = 0; i < count; ++i) {
        const double param = from + i * step;
        DensityMatrix rho = make_family(family, {{key, param}});

        SweepRow row;
        row.param = param;
        CriterionResult ppt = ppt_criterion(rho, tol);
        CriterionResult re = realignment_criterion(rho, tol);
        CriterionResult sm = min_singular_criterion(rho, tol);
        row.min_pt_eig = ppt.stat("min_pt_eigenvalue");
        row.trace_norm_R = re.stat("trace_norm");
        row.s_min_R = sm.stat("s_min");
        row.verdict_ppt = ppt.verdict;
        row.verdict_realign = re.verdict;
        row.verdict_smin = sm.verdict;
        smin_threshold = sm.threshold;
        result.rows.push_back(row);
    }

    for (size_t i = 1; i < result.rows.size(); ++i) {
        const SweepRow& a = result.rows[i - 1];
        const SweepRow& b = result.rows[i];
        if (!result.crossing_ppt && a.verdict_ppt != b.verdict_ppt)
            result.crossing_ppt = interpolate(a.param, a.min_pt_eig, b.param,
                                              b.min_pt_eig, 0.0);
        if (!result.crossing_realign && a.verdict_realign != b.verdict_realign)
            result.crossing_realign = interpolate(a.param, a.trace_norm_R,
                                                  b.param, b.trace_norm_R, 1.0);
        if (!result.crossing_smin && a.verdict_smin != b.verdict_smin)
            result.crossing_smin = interpolate(a.param, a.s_min_R, b.param,
                                               b.s_min_R, smin_threshold);
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "param,trace_norm_R,s_min_R,min_pt_eig,"
          "verdict_ppt,verdict_realign,verdict_smin\n";
    for (const SweepRow& row : result.rows) {
        os << fmt12(row.param) << ',' << fmt12(row.trace_norm_R) << ','
           << fmt12(row.s_min_R) << ',' << fmt12(row.min_pt_eig) << ','
           << to_string(row.verdict_ppt) << ',' << to_string(row.verdict_realign)
           << ',' << to_string(row.verdict_smin) << '\n';
    }
    return os.str();
}

} // namespace sepcrit
