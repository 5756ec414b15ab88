#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace svyfpca {

/// A curve discretized at the points of a Grid.
using Curve = Eigen::VectorXd;

/// A bivariate kernel discretized on a Grid; entry (l, l') holds k(t_l, t_l').
using Kernel = Eigen::MatrixXd;

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

}  // namespace detail

/// Shared discretization of [0,1] with quadrature weights. Every inner
/// product, norm and operator application of the library goes through a
/// Grid; curves living on different grids are rejected, not interpolated.
class Grid {
public:
    Grid(Eigen::VectorXd points, Eigen::VectorXd weights)
        : points_(std::move(points)), weights_(std::move(weights)) {
        detail::require(points_.size() > 0, "grid: must contain at least one point");
        detail::require(points_.size() == weights_.size(),
                        "grid: points and weights must have equal length");
        for (Eigen::Index i = 0; i < points_.size(); ++i) {
            detail::require(points_[i] >= 0.0 && points_[i] <= 1.0,
                            "grid: points must lie in [0,1]");
            if (i > 0) {
                detail::require(points_[i] > points_[i - 1],
                                "grid: points must be strictly increasing");
            }
            detail::require(weights_[i] > 0.0, "grid: weights must be positive");
        }
    }

    /// m equispaced midpoints t_l = (l + 1/2)/m with weights 1/m, so the
    /// weights sum to one and no point sits on the boundary.
    static Grid uniform_midpoint(Eigen::Index m) {
        detail::require(m > 0, "grid: size must be positive");
        Eigen::VectorXd p(m), w(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            p[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
            w[i] = 1.0 / static_cast<double>(m);
        }
        return Grid(std::move(p), std::move(w));
    }

    Eigen::Index size() const { return points_.size(); }
    const Eigen::VectorXd& points() const { return points_; }
    const Eigen::VectorXd& weights() const { return weights_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.points_.size() == b.points_.size() && a.points_ == b.points_ &&
               a.weights_ == b.weights_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

private:
    Eigen::VectorXd points_;
    Eigen::VectorXd weights_;
};

namespace detail {

inline void check_conformance(const Curve& u, const Grid& g, const char* what) {
    require(u.size() == g.size(), what);
}

inline void check_conformance(const Kernel& k, const Grid& g, const char* what) {
    require(k.rows() == g.size() && k.cols() == g.size(), what);
}

}  // namespace detail

/// Quadrature inner product  <u, v> = sum_l w_l u(t_l) v(t_l).
inline double inner_product(const Curve& u, const Curve& v, const Grid& g) {
    detail::check_conformance(u, g, "inner_product: curve does not conform to grid");
    detail::check_conformance(v, g, "inner_product: curve does not conform to grid");
    return (u.array() * v.array() * g.weights().array()).sum();
}

inline double norm(const Curve& u, const Grid& g) {
    return std::sqrt(std::max(0.0, inner_product(u, u, g)));
}

/// Rank-one kernel of the operator a (x) b, defined by (a (x) b)(u) = <a, u> b.
/// Entry (l, l') is a(t_l') b(t_l), so apply() reproduces the identity.
inline Kernel tensor(const Curve& a, const Curve& b, const Grid& g) {
    detail::check_conformance(a, g, "tensor: curve does not conform to grid");
    detail::check_conformance(b, g, "tensor: curve does not conform to grid");
    return b * a.transpose();
}

/// Applies a kernel as an integral operator: (K u)(t_l) = sum_l' w_l' k(t_l, t_l') u(t_l').
inline Curve apply(const Kernel& k, const Curve& u, const Grid& g) {
    detail::check_conformance(k, g, "apply: kernel does not conform to grid");
    detail::check_conformance(u, g, "apply: curve does not conform to grid");
    return k * g.weights().cwiseProduct(u);
}

/// Hilbert-Schmidt norm of the operator with kernel k:
/// sqrt(sum_{l,l'} w_l w_l' k(t_l, t_l')^2), the quadrature analogue of
/// the double integral of k^2. For a covariance kernel this equals
/// sqrt(sum_j lambda_j^2) up to eigensolver tolerance.
inline double hs_norm(const Kernel& k, const Grid& g) {
    detail::check_conformance(k, g, "hs_norm: kernel does not conform to grid");
    const auto& w = g.weights();
    double s = ((k.array().square().matrix() * w).transpose() * w).value();
    return std::sqrt(std::max(0.0, s));
}

/// Plain Frobenius norm of the discretized kernel matrix (no quadrature
/// weights). This is the Euclidean matrix norm used for reporting norms of
/// variance kernels.
inline double frobenius_norm(const Kernel& k) { return k.norm(); }

/// Quadrature trace sum_l w_l k(t_l, t_l), approximating the integral of
/// the kernel diagonal.
inline double quadrature_trace(const Kernel& k, const Grid& g) {
    detail::check_conformance(k, g, "quadrature_trace: kernel does not conform to grid");
    return k.diagonal().dot(g.weights());
}

}  // namespace svyfpca
