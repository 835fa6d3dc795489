#include "randsel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "randsel/errors.hpp"

namespace randsel {

namespace {

constexpr double kDegenerateNormScale = 1e-12;

bool all_finite(const Eigen::MatrixXd& m) { return m.allFinite(); }

} // namespace

Bandwidth::Bandwidth(double s) : sigma(s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw ParamError("bandwidth sigma must be positive and finite, got " + std::to_string(s));
}

KernelMatrix gaussian_kernel(const Eigen::MatrixXd& x, Bandwidth bw) {
    const Eigen::Index m = x.rows();
    if (m < 2) throw InputError("gaussian_kernel requires at least 2 samples");
    if (x.cols() < 1) throw InputError("gaussian_kernel requires at least 1 feature");
    if (!all_finite(x)) throw InputError("gaussian_kernel input contains non-finite values");

    // ||xi - xj||^2 = ||xi||^2 + ||xj||^2 - 2 <xi, xj>, with the Gram matrix
    // done as one GEMM. Upper triangle only, mirrored below.
    const Eigen::MatrixXd gram = x * x.transpose();
    KernelMatrix k;
    k.entries.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        k.entries(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double sq = std::max(0.0, gram(i, i) + gram(j, j) - 2.0 * gram(i, j));
            const double v = std::exp(-bw.sigma * sq);
            k.entries(i, j) = v;
            k.entries(j, i) = v;
        }
    }
    return k;
}

KernelMatrix label_kernel(std::span<const int> y, LabelKernelKind kind) {
    const Eigen::Index m = static_cast<Eigen::Index>(y.size());
    if (m < 2) throw InputError("label_kernel requires at least 2 labels");

    bool all_pm1 = true;
    bool single_class = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] != 1 && y[i] != -1) all_pm1 = false;
        if (y[i] != y[0]) single_class = false;
    }
    if (single_class)
        throw DegenerateLabelError("label vector contains a single class; alignment is undefined");

    LabelKernelKind effective = kind;
    if (effective == LabelKernelKind::Auto)
        effective = all_pm1 ? LabelKernelKind::Outer : LabelKernelKind::Delta;
    if (effective == LabelKernelKind::Outer && !all_pm1)
        throw InputError("outer label kernel requires labels in {+1, -1}");

    KernelMatrix k;
    k.entries.resize(m, m);
    if (effective == LabelKernelKind::Outer) {
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j)
                k.entries(i, j) = static_cast<double>(y[i] * y[j]);
    } else {
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j)
                k.entries(i, j) = y[i] == y[j] ? 1.0 : 0.0;
    }
    return k;
}

CenteredKernelMatrix center(const KernelMatrix& k) {
    const Eigen::Index m = k.size();
    if (m < 2) throw InputError("center requires at least a 2x2 kernel");

    // H K H expanded: C_ij = K_ij - r_i - r_j + g with r the row means and
    // g the grand mean. K symmetric makes C symmetric exactly.
    const Eigen::VectorXd row_means = k.entries.rowwise().mean();
    const double grand_mean = row_means.mean();

    CenteredKernelMatrix c;
    c.entries.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            c.entries(i, j) = k.entries(i, j) - row_means(i) - row_means(j) + grand_mean;
    c.frobenius_norm = c.entries.norm();
    return c;
}

double alignment(const CenteredKernelMatrix& cx, const CenteredKernelMatrix& cy) {
    if (cx.size() != cy.size())
        throw InputError("alignment requires kernels of identical size");
    const double m = static_cast<double>(cx.size());
    if (cx.frobenius_norm < kDegenerateNormScale * m || cy.frobenius_norm < kDegenerateNormScale * m)
        throw DegenerateKernelError("centered kernel has (numerically) zero Frobenius norm");

    const double inner = cx.entries.cwiseProduct(cy.entries).sum();
    return std::clamp(inner / (cx.frobenius_norm * cy.frobenius_norm), -1.0, 1.0);
}

double inverse_median_sqdist(const Eigen::MatrixXd& x) {
    const Eigen::Index m = x.rows();
    if (m < 2) throw InputError("inverse_median_sqdist requires at least 2 samples");

    std::vector<Eigen::Index> rows;
    if (m <= 512) {
        rows.resize(m);
        for (Eigen::Index i = 0; i < m; ++i) rows[i] = i;
    } else {
        const Eigen::Index stride = (m + 511) / 512;
        for (Eigen::Index i = 0; i < m; i += stride) rows.push_back(i);
    }

    std::vector<double> sq;
    sq.reserve(rows.size() * (rows.size() - 1) / 2);
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            sq.push_back((x.row(rows[a]) - x.row(rows[b])).squaredNorm());

    auto mid = sq.begin() + sq.size() / 2;
    std::nth_element(sq.begin(), mid, sq.end());
    const double median = *mid;
    if (!(median > 0.0)) return 1.0; // duplicate-heavy data; any finite width works
    return 1.0 / median;
}

} // namespace randsel
