#pragma once

#include <string>
#include <vector>

#include "corpuscope/matrix.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

enum class TrendBasis { kLinear, kBSpline };

enum class TrendClass { kIncreasing, kDecreasing, kFlat };
std::string trend_class_name(TrendClass c);

struct PrevalenceTrend {
    int topic = 0;  // 0-based
    TrendBasis basis = TrendBasis::kLinear;
    std::vector<double> coefficients;
    std::vector<int> years;  // evaluation grid: sorted distinct corpus years
    std::vector<double> fitted;
    std::vector<double> ci_low;
    std::vector<double> ci_high;
    TrendClass classification = TrendClass::kFlat;
    bool clamped = false;  // any of fitted/ci clipped into [0, 1]
};

// Per-topic OLS of the theta column on a year basis (linear, or cubic
// B-spline with 3 interior knots) with a confidence band at `level` from the
// OLS covariance. Classification: slope sign test (linear) or endpoint
// comparison (spline) at the same level.
std::vector<PrevalenceTrend> prevalence_regression(const Matrix& theta,
                                                   const std::vector<int>& years, TrendBasis basis,
                                                   double level, WarningLog* warnings = nullptr);

// span >= 10 distinct years: cubic B-spline, otherwise linear
TrendBasis auto_basis(const std::vector<int>& years);

struct TopicCorrelation {
    Matrix matrix;  // K x K Pearson correlations; NaN when undefined
    struct Edge {
        std::size_t a = 0;
        std::size_t b = 0;
        double r = 0.0;
    };
    std::vector<Edge> edges;  // strictly positive upper-triangle entries, descending
};

TopicCorrelation topic_correlation(const Matrix& theta, WarningLog* warnings = nullptr);

struct DominantDistribution {
    std::vector<int> years;                      // sorted distinct years
    std::vector<std::vector<long>> counts;       // per year, per topic
    std::vector<long> tie_counts;                // per year
};

DominantDistribution dominant_distribution(const Matrix& theta, const std::vector<int>& years);

// two-sided standard normal quantile, e.g. 0.975 -> 1.95996...
double normal_quantile(double p);

}  // namespace corpuscope
