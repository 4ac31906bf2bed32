#include "corpuscope/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "corpuscope/errors.hpp"
#include "corpuscope/topics.hpp"

namespace corpuscope {

std::string trend_class_name(TrendClass c) {
    switch (c) {
        case TrendClass::kIncreasing: return "increasing";
        case TrendClass::kDecreasing: return "decreasing";
        default: return "flat";
    }
}

double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw ConfigError("normal_quantile: p must be in (0, 1)");
    // bisection on the CDF; plenty accurate and has no edge cases
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double cdf = 0.5 * (1.0 + std::erf(mid / std::sqrt(2.0)));
        if (cdf < p) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

TrendBasis auto_basis(const std::vector<int>& years) {
    const std::set<int> distinct(years.begin(), years.end());
    if (distinct.empty()) return TrendBasis::kLinear;
    const int span = *distinct.rbegin() - *distinct.begin() + 1;
    return span >= 10 ? TrendBasis::kBSpline : TrendBasis::kLinear;
}

namespace {

// cubic B-spline basis over [lo, hi] with 3 evenly spaced interior knots;
// the 7 basis functions sum to 1, so no separate intercept is added
constexpr int kSplineDegree = 3;
constexpr int kInteriorKnots = 3;

std::vector<double> make_knots(double lo, double hi) {
    std::vector<double> knots;
    for (int i = 0; i <= kSplineDegree; ++i) knots.push_back(lo);
    for (int i = 1; i <= kInteriorKnots; ++i) {
        knots.push_back(lo + (hi - lo) * double(i) / double(kInteriorKnots + 1));
    }
    for (int i = 0; i <= kSplineDegree; ++i) knots.push_back(hi);
    return knots;
}

std::vector<double> bspline_row(const std::vector<double>& knots, double x) {
    const int n_basis = int(knots.size()) - kSplineDegree - 1;
    // Cox-de Boor, with the right boundary closed
    std::vector<double> b(knots.size() - 1, 0.0);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const bool last_span = knots[i] < knots[i + 1] && knots[i + 1] == knots.back();
        if ((x >= knots[i] && x < knots[i + 1]) || (last_span && x == knots.back())) {
            b[i] = 1.0;
        }
    }
    for (int d = 1; d <= kSplineDegree; ++d) {
        for (std::size_t i = 0; i + d + 1 < knots.size(); ++i) {
            double left = 0.0, right = 0.0;
            if (knots[i + d] > knots[i]) {
                left = (x - knots[i]) / (knots[i + d] - knots[i]) * b[i];
            }
            if (knots[i + d + 1] > knots[i + 1]) {
                right = (knots[i + d + 1] - x) / (knots[i + d + 1] - knots[i + 1]) * b[i + 1];
            }
            b[i] = left + right;
        }
    }
    b.resize(std::size_t(n_basis));
    return b;
}

std::vector<double> design_row(TrendBasis basis, const std::vector<double>& knots, double lo,
                               double hi, double x) {
    if (basis == TrendBasis::kLinear) {
        const double mid = (lo + hi) / 2.0;
        return {1.0, x - mid};  // centered year keeps the normal equations tame
    }
    return bspline_row(knots, x);
}

// Cholesky solve of the normal equations; returns false when the matrix is
// not positive definite.
bool cholesky_decompose(Matrix& a) {
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t p = 0; p < j; ++p) d -= a(j, p) * a(j, p);
        if (d <= 0.0 || !std::isfinite(d)) return false;
        a(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t p = 0; p < j; ++p) s -= a(i, p) * a(j, p);
            a(i, j) = s / a(j, j);
        }
    }
    return true;
}

std::vector<double> cholesky_solve(const Matrix& chol, const std::vector<double>& rhs) {
    const std::size_t n = chol.rows();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[i];
        for (std::size_t p = 0; p < i; ++p) s -= chol(i, p) * y[p];
        y[i] = s / chol(i, i);
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t p = i + 1; p < n; ++p) s -= chol(p, i) * x[p];
        x[i] = s / chol(i, i);
    }
    return x;
}

}  // namespace

std::vector<PrevalenceTrend> prevalence_regression(const Matrix& theta,
                                                   const std::vector<int>& years, TrendBasis basis,
                                                   double level, WarningLog* warnings) {
    if (level <= 0.0 || level >= 1.0) throw ConfigError("prevalence: level must be in (0, 1)");
    const std::size_t n_docs = theta.rows();
    const std::size_t n_topics = theta.cols();
    if (years.size() != n_docs) throw ContractError("prevalence: years size mismatch");

    const std::set<int> distinct(years.begin(), years.end());
    if (distinct.size() < 2) {
        throw ContractError("prevalence: need at least 2 distinct years (singular design)");
    }
    const std::vector<int> grid(distinct.begin(), distinct.end());
    const double lo = double(grid.front()), hi = double(grid.back());
    const std::vector<double> knots =
        basis == TrendBasis::kBSpline ? make_knots(lo, hi) : std::vector<double>{};

    // shared design matrix
    std::vector<std::vector<double>> x_rows(n_docs);
    for (std::size_t d = 0; d < n_docs; ++d) {
        x_rows[d] = design_row(basis, knots, lo, hi, double(years[d]));
    }
    const std::size_t p = x_rows[0].size();
    if (n_docs <= p) throw ContractError("prevalence: more basis functions than documents");

    Matrix xtx(p, p, 0.0);
    for (const auto& row : x_rows) {
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i; j < p; ++j) xtx(i, j) += row[i] * row[j];
        }
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < i; ++j) xtx(i, j) = xtx(j, i);
    }

    Matrix chol = xtx;
    if (!cholesky_decompose(chol)) {
        warn(warnings, "prevalence: near-singular design, adding 1e-8 ridge");
        chol = xtx;
        for (std::size_t i = 0; i < p; ++i) chol(i, i) += 1e-8;
        if (!cholesky_decompose(chol)) {
            throw ContractError("prevalence: singular design matrix");
        }
    }

    // (X^T X)^(-1) column by column, for prediction variances
    Matrix xtx_inv(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<double> e(p, 0.0);
        e[j] = 1.0;
        const auto col = cholesky_solve(chol, e);
        for (std::size_t i = 0; i < p; ++i) xtx_inv(i, j) = col[i];
    }

    const double z = normal_quantile(0.5 + level / 2.0);

    std::vector<PrevalenceTrend> trends;
    trends.reserve(n_topics);
    for (std::size_t t = 0; t < n_topics; ++t) {
        PrevalenceTrend trend;
        trend.topic = int(t);
        trend.basis = basis;
        trend.years = grid;

        std::vector<double> xty(p, 0.0);
        double yty = 0.0;
        for (std::size_t d = 0; d < n_docs; ++d) {
            const double y = theta(d, t);
            yty += y * y;
            for (std::size_t i = 0; i < p; ++i) xty[i] += x_rows[d][i] * y;
        }
        const auto beta = cholesky_solve(chol, xty);
        trend.coefficients = beta;

        double rss = yty;
        for (std::size_t i = 0; i < p; ++i) rss -= beta[i] * xty[i];
        rss = std::max(rss, 0.0);
        const double sigma2 = rss / double(n_docs - p);

        for (int year : grid) {
            const auto row = design_row(basis, knots, lo, hi, double(year));
            double fit = 0.0;
            for (std::size_t i = 0; i < p; ++i) fit += row[i] * beta[i];
            double quad = 0.0;
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < p; ++j) quad += row[i] * xtx_inv(i, j) * row[j];
            }
            const double se = std::sqrt(std::max(0.0, sigma2 * quad));
            double lo_ci = fit - z * se, hi_ci = fit + z * se;
            if (fit < 0.0 || fit > 1.0 || lo_ci < 0.0 || hi_ci > 1.0) trend.clamped = true;
            trend.fitted.push_back(std::clamp(fit, 0.0, 1.0));
            trend.ci_low.push_back(std::clamp(lo_ci, 0.0, 1.0));
            trend.ci_high.push_back(std::clamp(hi_ci, 0.0, 1.0));
        }

        // trend classification at the same confidence level
        if (basis == TrendBasis::kLinear) {
            const double slope = beta[1];
            const double se_slope = std::sqrt(std::max(0.0, sigma2 * xtx_inv(1, 1)));
            if (se_slope > 0.0 && std::abs(slope) / se_slope >= z) {
                trend.classification =
                    slope > 0.0 ? TrendClass::kIncreasing : TrendClass::kDecreasing;
            }
        } else {
            const auto row_first = design_row(basis, knots, lo, hi, lo);
            const auto row_last = design_row(basis, knots, lo, hi, hi);
            std::vector<double> diff(p);
            for (std::size_t i = 0; i < p; ++i) diff[i] = row_last[i] - row_first[i];
            double delta = 0.0, quad = 0.0;
            for (std::size_t i = 0; i < p; ++i) {
                delta += diff[i] * beta[i];
                for (std::size_t j = 0; j < p; ++j) quad += diff[i] * xtx_inv(i, j) * diff[j];
            }
            const double se_delta = std::sqrt(std::max(0.0, sigma2 * quad));
            if (se_delta > 0.0 && std::abs(delta) / se_delta >= z) {
                trend.classification =
                    delta > 0.0 ? TrendClass::kIncreasing : TrendClass::kDecreasing;
            }
        }
        trends.push_back(std::move(trend));
    }
    return trends;
}

TopicCorrelation topic_correlation(const Matrix& theta, WarningLog* warnings) {
    const std::size_t n_docs = theta.rows();
    const std::size_t k = theta.cols();
    if (n_docs < 3) throw ContractError("topic_correlation: need at least 3 documents");
    if (k < 2) throw ContractError("topic_correlation: need at least 2 topics");

    std::vector<double> mean(k, 0.0);
    for (std::size_t d = 0; d < n_docs; ++d) {
        for (std::size_t t = 0; t < k; ++t) mean[t] += theta(d, t);
    }
    for (auto& m : mean) m /= double(n_docs);

    std::vector<double> var(k, 0.0);
    Matrix cov(k, k, 0.0);
    for (std::size_t d = 0; d < n_docs; ++d) {
        for (std::size_t a = 0; a < k; ++a) {
            const double da = theta(d, a) - mean[a];
            var[a] += da * da;
            for (std::size_t b = a + 1; b < k; ++b) {
                cov(a, b) += da * (theta(d, b) - mean[b]);
            }
        }
    }

    TopicCorrelation result;
    result.matrix = Matrix(k, k, 0.0);
    for (std::size_t a = 0; a < k; ++a) result.matrix(a, a) = 1.0;
    for (std::size_t a = 0; a < k; ++a) {
        if (var[a] == 0.0) {
            warn(warnings, "topic_correlation: topic " + std::to_string(a + 1) +
                               " has zero variance, correlations undefined");
        }
        for (std::size_t b = a + 1; b < k; ++b) {
            double r;
            if (var[a] == 0.0 || var[b] == 0.0) {
                r = std::numeric_limits<double>::quiet_NaN();
            } else {
                r = std::clamp(cov(a, b) / std::sqrt(var[a] * var[b]), -1.0, 1.0);
            }
            result.matrix(a, b) = r;
            result.matrix(b, a) = r;
            if (std::isfinite(r) && r > 0.0) result.edges.push_back({a, b, r});
        }
    }
    std::stable_sort(result.edges.begin(), result.edges.end(),
                     [](const auto& x, const auto& y) { return x.r > y.r; });
    return result;
}

DominantDistribution dominant_distribution(const Matrix& theta, const std::vector<int>& years) {
    if (years.size() != theta.rows()) throw ContractError("dominant_distribution: size mismatch");
    const std::set<int> distinct(years.begin(), years.end());

    DominantDistribution dist;
    dist.years.assign(distinct.begin(), distinct.end());
    dist.counts.assign(dist.years.size(), std::vector<long>(theta.cols(), 0));
    dist.tie_counts.assign(dist.years.size(), 0);

    for (std::size_t d = 0; d < theta.rows(); ++d) {
        const auto dom = dominant_topic({theta.row(d), theta.cols()});
        const std::size_t yi =
            std::size_t(std::lower_bound(dist.years.begin(), dist.years.end(), years[d]) -
                        dist.years.begin());
        ++dist.counts[yi][dom.topic];
        if (dom.tie) ++dist.tie_counts[yi];
    }
    return dist;
}

}  // namespace corpuscope
