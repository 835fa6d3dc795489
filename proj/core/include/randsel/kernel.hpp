#pragma once

#include <Eigen/Dense>
#include <span>

namespace randsel {

/// Gaussian kernel width: kappa(x, x') = exp(-sigma * ||x - x'||^2).
struct Bandwidth {
    double sigma;

    explicit Bandwidth(double s);
};

/// Dense symmetric kernel matrix. The upper triangle is computed once and
/// mirrored, so entries(i, j) == entries(j, i) holds exactly.
struct KernelMatrix {
    Eigen::MatrixXd entries;

    Eigen::Index size() const { return entries.rows(); }
};

/// Kernel matrix conjugated by the centering projector H = I - (1/m) 11^T.
/// Every row and column sums to zero up to rounding.
struct CenteredKernelMatrix {
    Eigen::MatrixXd entries;
    double frobenius_norm = 0.0;

    Eigen::Index size() const { return entries.rows(); }
};

/// How the label kernel is formed. Auto picks Outer for +/-1 labels and
/// Delta otherwise.
enum class LabelKernelKind { Auto, Outer, Delta };

/// K(i, j) = exp(-sigma * ||x_i - x_j||^2) for row vectors of x.
/// Diagonal entries are exactly 1.
KernelMatrix gaussian_kernel(const Eigen::MatrixXd& x, Bandwidth bw);

/// Label kernel: y_i * y_j for binary +/-1 labels (Outer), or the
/// same-class indicator for class ids (Delta). A single-class vector is
/// rejected because its centered kernel vanishes.
KernelMatrix label_kernel(std::span<const int> y, LabelKernelKind kind = LabelKernelKind::Auto);

/// H K H, computed as K - row means - column means + grand mean.
CenteredKernelMatrix center(const KernelMatrix& k);

/// Centered kernel target alignment <Cx, Cy>_F / (||Cx||_F ||Cy||_F),
/// clamped to [-1, 1]. This is the empirical HSIC-based dependence score.
double alignment(const CenteredKernelMatrix& cx, const CenteredKernelMatrix& cy);

/// Inverse median squared pairwise distance over the rows of x; the usual
/// bandwidth heuristic. Uses every pair for up to 512 rows and a strided
/// subset of 512 rows beyond that, so the value is deterministic.
double inverse_median_sqdist(const Eigen::MatrixXd& x);

} // namespace randsel
