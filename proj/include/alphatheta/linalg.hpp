#ifndef ALPHATHETA_LINALG_HPP
#define ALPHATHETA_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "alphatheta/errors.hpp"

namespace alphatheta {

using Index = Eigen::Index;

/// Dense real symmetric matrix. Every constructor symmetrizes its input, so
/// entries (i, j) and (j, i) are bitwise identical.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(Index dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {}

    explicit SymMatrix(const Eigen::MatrixXd& m) {
        if (m.rows() != m.cols()) {
            throw InputError("SymMatrix: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", not square");
        }
        m_ = 0.5 * (m + m.transpose());
    }

    static SymMatrix identity(Index dim) { return SymMatrix(Eigen::MatrixXd::Identity(dim, dim)); }
    static SymMatrix ones(Index dim) { return SymMatrix(Eigen::MatrixXd::Ones(dim, dim)); }

    Index dim() const { return m_.rows(); }
    double operator()(Index i, Index j) const { return m_(i, j); }

    void set(Index i, Index j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Eigen::MatrixXd& dense() const { return m_; }
    double frobenius_norm() const { return m_.norm(); }
    double trace() const { return m_.trace(); }

    /// Quadratic form h' M h.
    double qform(const Eigen::VectorXd& h) const { return h.dot(m_ * h); }

    SymMatrix& operator+=(const SymMatrix& o) {
        check_same_dim(o, "operator+=");
        m_ += o.m_;
        return *this;
    }
    SymMatrix& operator-=(const SymMatrix& o) {
        check_same_dim(o, "operator-=");
        m_ -= o.m_;
        return *this;
    }
    SymMatrix& operator*=(double s) {
        m_ *= s;
        return *this;
    }

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

    void check_same_dim(const SymMatrix& o, const char* what) const {
        if (dim() != o.dim()) {
            throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(dim()) +
                             " vs " + std::to_string(o.dim()) + ")");
        }
    }

private:
    Eigen::MatrixXd m_;
};

/// Eigendecomposition of a symmetric matrix; eigenvalues ascending, eigenvectors
/// as orthonormal columns in the same order.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    double lambda_min() const { return eigenvalues(0); }
    double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
    Eigen::VectorXd min_eigenvector() const { return eigenvectors.col(0); }
};

inline Spectrum sym_eig(const SymMatrix& m) {
    if (!m.dense().allFinite()) {
        throw InputError("sym_eig: matrix has non-finite entries");
    }
    if (m.dim() == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense());
    if (es.info() != Eigen::Success) {
        throw Error("sym_eig: eigensolver did not converge");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

/// <M, N> = tr(M'N).
inline double trace_inner(const SymMatrix& m, const SymMatrix& n) {
    m.check_same_dim(n, "trace_inner");
    return m.dense().cwiseProduct(n.dense()).sum();
}

/// Entrywise (Hadamard) product.
inline SymMatrix hadamard(const SymMatrix& m, const SymMatrix& n) {
    m.check_same_dim(n, "hadamard");
    return SymMatrix(Eigen::MatrixXd(m.dense().cwiseProduct(n.dense())));
}

struct PsdCheck {
    bool is_psd = false;
    double lambda_min = 0.0;
};

/// PSD test with a hybrid tolerance: is_psd iff lambda_min >= -tol * max(1, ||M||_F).
inline PsdCheck psd_check(const SymMatrix& m, double tol) {
    if (!(tol >= 0.0)) {
        throw InputError("psd_check: tolerance must be nonnegative");
    }
    const double lmin = m.dim() == 0 ? 0.0 : sym_eig(m).lambda_min();
    const double scale = std::max(1.0, m.frobenius_norm());
    return {lmin >= -tol * scale, lmin};
}

/// Lower Cholesky factor of a symmetric positive definite matrix, or nullopt
/// when the matrix is not numerically positive definite.
inline std::optional<Eigen::MatrixXd> cholesky_lower(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        return std::nullopt;
    }
    Eigen::MatrixXd l = llt.matrixL();
    if (!l.allFinite() || (l.diagonal().array() <= 0.0).any()) {
        return std::nullopt;
    }
    return l;
}

} // namespace alphatheta

#endif // ALPHATHETA_LINALG_HPP
