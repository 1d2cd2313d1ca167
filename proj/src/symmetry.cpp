#include "symdet/symmetry.hpp"

#include "symdet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace symdet {

CentroidSeries edge_centroids(const EdgeMap& em) {
    CentroidSeries cs;
    for (int y = 0; y < em.height; ++y) {
        long sum = 0;
        int n = 0;
        for (int x = 0; x < em.width; ++x)
            if (em.get(x, y)) {
                sum += x;
                ++n;
            }
        if (n > 0) cs.entries.push_back({y, static_cast<double>(sum) / n, n});
    }
    return cs;
}

StraightFit fit_straight_axis(const CentroidSeries& cs) {
    if (cs.empty()) throw EmptySeries("cannot fit an axis to an empty centroid series");
    double sum = 0.0;
    for (const auto& e : cs.entries) sum += e.centroid;
    const double k = sum / static_cast<double>(cs.size());
    double ssr = 0.0;
    for (const auto& e : cs.entries) {
        double r = e.centroid - k;
        ssr += r * r;
    }
    return {k, std::sqrt(ssr / static_cast<double>(cs.size()))};
}

namespace {

/// Gaussian elimination with partial pivoting on the (small) normal system.
std::vector<double> solve_normal(std::vector<std::vector<double>> m, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    double scale = 0.0;
    for (const auto& row : m)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (int step = 0; step < n; ++step) {
        int pivot = step;
        for (int i = step + 1; i < n; ++i)
            if (std::abs(m[i][step]) > std::abs(m[pivot][step])) pivot = i;
        if (std::abs(m[pivot][step]) <= 1e-12 * scale)
            throw SingularSystem("rank-deficient normal matrix");
        std::swap(m[step], m[pivot]);
        std::swap(b[step], b[pivot]);
        for (int i = step + 1; i < n; ++i) {
            double f = m[i][step] / m[step][step];
            for (int j = step; j < n; ++j) m[i][j] -= f * m[step][j];
            b[i] -= f * b[step];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= m[i][j] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / m[i][i];
    }
    return x;
}

/// Rewrites p(t), t = alpha*y + beta, as a polynomial in y.
std::vector<double> substitute_affine(const std::vector<double>& coeffs, double alpha,
                                      double beta) {
    std::vector<double> c{coeffs.back()};
    for (int j = static_cast<int>(coeffs.size()) - 2; j >= 0; --j) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t + 1] += c[t] * alpha;
            next[t] += c[t] * beta;
        }
        next[0] += coeffs[static_cast<std::size_t>(j)];
        c = std::move(next);
    }
    return c;
}

} // namespace

CurveFit fit_curve_axis(const CentroidSeries& cs, int degree) {
    if (degree < 1)
        throw InsufficientPoints("curve degree must be >= 1; constant fits belong to the "
                                 "straight axis");
    const int n_coeff = degree + 1;
    if (static_cast<int>(cs.size()) < n_coeff)
        throw InsufficientPoints("need at least " + std::to_string(n_coeff) +
                                 " centroid rows for degree " + std::to_string(degree));

    // center and scale rows to [-1, 1] so the Vandermonde moments stay tame
    const double ymin = cs.entries.front().row;
    const double ymax = cs.entries.back().row;
    const double mid = 0.5 * (ymin + ymax);
    const double half = 0.5 * (ymax - ymin);
    if (!(half > 0.0)) throw SingularSystem("all centroid rows identical");

    std::vector<std::vector<double>> m(static_cast<std::size_t>(n_coeff),
                                       std::vector<double>(static_cast<std::size_t>(n_coeff),
                                                           0.0));
    std::vector<double> rhs(static_cast<std::size_t>(n_coeff), 0.0);
    std::vector<double> pows(static_cast<std::size_t>(2 * n_coeff - 1));
    for (const auto& e : cs.entries) {
        const double t = (e.row - mid) / half;
        double p = 1.0;
        for (auto& pw : pows) {
            pw = p;
            p *= t;
        }
        for (int j = 0; j < n_coeff; ++j) {
            for (int k = 0; k < n_coeff; ++k)
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] +=
                    pows[static_cast<std::size_t>(j + k)];
            rhs[static_cast<std::size_t>(j)] += pows[static_cast<std::size_t>(j)] * e.centroid;
        }
    }

    const auto scaled = solve_normal(std::move(m), std::move(rhs));

    double ssr = 0.0;
    for (const auto& e : cs.entries) {
        const double t = (e.row - mid) / half;
        double p = 0.0;
        for (int j = degree; j >= 0; --j) p = p * t + scaled[static_cast<std::size_t>(j)];
        const double r = e.centroid - p;
        ssr += r * r;
    }

    CurveFit fit;
    fit.coeffs = substitute_affine(scaled, 1.0 / half, -mid / half);
    fit.rms = std::sqrt(ssr / static_cast<double>(cs.size()));
    return fit;
}

double evaluate_axis(const SymmetryAxis& axis, double row) {
    if (axis.kind == AxisKind::Straight) return axis.straight_k;
    double p = 0.0;
    for (int j = static_cast<int>(axis.coeffs.size()) - 1; j >= 0; --j)
        p = p * row + axis.coeffs[static_cast<std::size_t>(j)];
    return p;
}

std::pair<SymmetryVerdict, SymmetryAxis> classify_and_fit(const CentroidSeries& cs, int degree,
                                                          double tau_rms, double tau_improve) {
    if (!(tau_rms >= 0.0) || !(tau_improve > 0.0))
        throw InvalidParams("tau_rms must be >= 0 and tau_improve > 0");
    const StraightFit sf = fit_straight_axis(cs);
    const CurveFit cf = fit_curve_axis(cs, degree);

    double ratio = 0.0;
    if (sf.rms > 1e-12) ratio = std::clamp((sf.rms - cf.rms) / sf.rms, 0.0, 1.0);

    SymmetryVerdict verdict;
    verdict.straight_rms = sf.rms;
    verdict.improvement_ratio = ratio;
    verdict.classification = (sf.rms <= tau_rms && ratio < tau_improve)
                                 ? Classification::Symmetric
                                 : Classification::Distorted;

    SymmetryAxis axis;
    axis.kind = verdict.classification == Classification::Symmetric ? AxisKind::Straight
                                                                    : AxisKind::Curved;
    axis.straight_k = sf.k;
    axis.coeffs = cf.coeffs;
    axis.rms_straight = sf.rms;
    axis.rms_curved = cf.rms;
    return {verdict, axis};
}

SymmetryVerdict classify_axis(const CentroidSeries& cs, int degree, double tau_rms,
                              double tau_improve) {
    return classify_and_fit(cs, degree, tau_rms, tau_improve).first;
}

} // namespace symdet
