#include "abcframe/frame_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {

constexpr double kTolerance = 1e-9;
constexpr int kMaxIterations = 10000;

Eigen::VectorXd start_vector(Eigen::Index n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(gen);
    return v.normalized();
}

double largest_eigenvalue(const Eigen::MatrixXd& g) {
    Eigen::VectorXd v = start_vector(g.rows(), 1);
    double lambda = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::VectorXd w = g * v;
        double next = v.dot(w);
        double norm = w.norm();
        if (norm == 0.0) return 0.0;
        v = w / norm;
        if (std::abs(next - lambda) <= kTolerance * std::max(1.0, std::abs(next))) return next;
        lambda = next;
    }
    return lambda;
}

double smallest_eigenvalue(const Eigen::MatrixXd& g) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
    if (ldlt.info() != Eigen::Success) return 0.0;
    Eigen::VectorXd d = ldlt.vectorD();
    double dmax = d.cwiseAbs().maxCoeff();
    if (d.minCoeff() <= 1e-13 * std::max(1.0, dmax)) return 0.0;
    Eigen::VectorXd v = start_vector(g.rows(), 2);
    double mu = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::VectorXd w = ldlt.solve(v);
        double next = v.dot(w);
        double norm = w.norm();
        if (!std::isfinite(norm) || norm == 0.0) return 0.0;
        v = w / norm;
        if (std::abs(next - mu) <= kTolerance * std::max(1e-300, std::abs(next))) {
            mu = next;
            break;
        }
        mu = next;
    }
    return mu > 0.0 ? 1.0 / mu : 0.0;
}

}  // namespace

SingularRange truncated_singular_values(const NormalizedTriple& nt, const ExactReal& t, std::int64_t half_width) {
    if (half_width < 4) throw BadTruncation("half_width must be at least 4");
    const std::int64_t rows = 2 * half_width + 1;
    const std::int64_t reach = half_width + nt.floor_cb + 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> columns;  // row span of each kept column
    ExactReal col_limit = nt.b * half_width + nt.c;
    for (std::int64_t j = -reach; j <= reach; ++j) {
        ExactReal lambda = nt.b * j;
        if (abs(lambda) > col_limit) continue;
        // rows i with 0 <= t - i*a + lambda < c
        std::int64_t i_max = floor_div(t + lambda, nt.a);
        std::int64_t i_min = floor_div(t + lambda - nt.c, nt.a) + 1;
        if (i_min > i_max || i_min < -half_width || i_max > half_width) continue;
        columns.emplace_back(i_min, i_max);
    }
    if (columns.empty()) throw BadTruncation("no column fits inside the row window");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t col = 0; col < columns.size(); ++col) {
        for (std::int64_t i = columns[col].first; i <= columns[col].second; ++i) {
            m(i + half_width, static_cast<Eigen::Index>(col)) = 1.0;
        }
    }
    Eigen::MatrixXd g = m.transpose() * m;
    double hi = largest_eigenvalue(g);
    double lo = smallest_eigenvalue(g);
    return {std::sqrt(std::max(lo, 0.0)), std::sqrt(std::max(hi, 0.0))};
}

FrameBoundEstimate numeric_frame_bounds(const NormalizedTriple& nt, std::int64_t t_samples,
                                        std::int64_t half_width) {
    if (!(max(nt.a, nt.b) < nt.c)) throw BadTruncation("frame bound estimate needs max(a, b) < c");
    if (t_samples < 1) throw BadTruncation("need at least one t sample");
    FrameBoundEstimate est{INFINITY, 0.0};
    for (std::int64_t k = 0; k < t_samples; ++k) {
        Rational frac{Integer(k), Integer(t_samples)};
        frac.canonicalize();
        ExactReal t = nt.a * frac;
        SingularRange sv = truncated_singular_values(nt, t, half_width);
        est.lower = std::min(est.lower, sv.smallest);
        est.upper = std::max(est.upper, sv.largest);
    }
    return est;
}

}  // namespace abcframe
