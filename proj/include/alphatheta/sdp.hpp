#ifndef ALPHATHETA_SDP_HPP
#define ALPHATHETA_SDP_HPP

// Dense primal-dual interior-point solver for block-diagonal semidefinite
// programs in equality standard form:
//
//     min / max  <C, X>   s.t.  <A_i, X> = b_i  (i = 1..m),   X >= 0 blockwise.
//
// 1x1 blocks are nonnegative scalars. The search direction is HKM
// (X dS S^-1 linearization) with a fixed centering parameter; the iteration
// starts from the infeasible point X = S = tau I, y = 0.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "alphatheta/errors.hpp"
#include "alphatheta/linalg.hpp"

namespace alphatheta {

using BlockMatrix = std::vector<Eigen::MatrixXd>;

enum class Sense { minimize, maximize };

struct SdpConstraint {
    BlockMatrix a;
    double b = 0.0;
};

struct SdpProblem {
    std::vector<Index> block_dims;
    BlockMatrix c;
    std::vector<SdpConstraint> constraints;
    Sense sense = Sense::minimize;

    explicit SdpProblem(std::vector<Index> dims = {}, Sense s = Sense::minimize)
        : block_dims(std::move(dims)), c(zero_blocks()), sense(s) {}

    BlockMatrix zero_blocks() const {
        BlockMatrix out;
        out.reserve(block_dims.size());
        for (const auto d : block_dims) {
            out.push_back(Eigen::MatrixXd::Zero(d, d));
        }
        return out;
    }

    /// Appends an all-zero constraint row with right-hand side b and returns it
    /// for filling.
    SdpConstraint& add_constraint(double b) {
        constraints.push_back({zero_blocks(), b});
        return constraints.back();
    }

    std::size_t num_constraints() const { return constraints.size(); }

    Index total_dim() const {
        Index n = 0;
        for (const auto d : block_dims) n += d;
        return n;
    }

    /// Throws InputError on non-conforming or non-symmetric data.
    void validate() const {
        auto check = [&](const BlockMatrix& m, const std::string& what) {
            if (m.size() != block_dims.size()) {
                throw InputError(what + ": wrong number of blocks");
            }
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k].rows() != block_dims[k] || m[k].cols() != block_dims[k]) {
                    throw InputError(what + ": block " + std::to_string(k) + " has wrong dimension");
                }
                if (!m[k].allFinite()) {
                    throw InputError(what + ": block " + std::to_string(k) + " is not finite");
                }
                if ((m[k] - m[k].transpose()).cwiseAbs().maxCoeff() > 0.0) {
                    throw InputError(what + ": block " + std::to_string(k) + " is not symmetric");
                }
            }
        };
        if (block_dims.empty()) {
            throw InputError("sdp: problem has no blocks");
        }
        for (const auto d : block_dims) {
            if (d < 1) throw InputError("sdp: block dimensions must be positive");
        }
        check(c, "objective");
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            check(constraints[i].a, "constraint " + std::to_string(i));
            if (!std::isfinite(constraints[i].b)) {
                throw InputError("constraint " + std::to_string(i) + ": rhs is not finite");
            }
        }
    }
};

inline double block_inner(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.size() != b.size()) {
        throw InputError("block_inner: block count mismatch");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].rows() != b[k].rows() || a[k].cols() != b[k].cols()) {
            throw InputError("block_inner: block dimension mismatch");
        }
        s += a[k].cwiseProduct(b[k]).sum();
    }
    return s;
}

inline double block_norm(const BlockMatrix& a) {
    double s = 0.0;
    for (const auto& m : a) s += m.squaredNorm();
    return std::sqrt(s);
}

inline double block_lambda_min(const BlockMatrix& a) {
    double lmin = std::numeric_limits<double>::infinity();
    for (const auto& m : a) {
        lmin = std::min(lmin, sym_eig(SymMatrix(m)).lambda_min());
    }
    return lmin;
}

struct SolverOptions {
    int max_iterations = 200;
    double centering = 0.25;
    double step_fraction = 0.98;
    /// Stopping targets (original scaling).
    double feasibility_tol = 1e-10;
    double gap_tol = 1e-10;
    /// Thresholds at which a stalled run still counts as optimal.
    double accept_feasibility = 1e-8;
    double accept_gap = 1e-7;
    /// Infeasibility guard on the objective magnitudes.
    double divergence_bound = 1e8;
    bool record_history = false;

    /// Defaults with the iteration cap taken from ALPHATHETA_MAX_ITERS when set.
    static SolverOptions from_env() {
        SolverOptions o;
        if (const char* v = std::getenv("ALPHATHETA_MAX_ITERS"); v != nullptr && *v != '\0') {
            char* end = nullptr;
            const long n = std::strtol(v, &end, 10);
            if (end == v || *end != '\0' || n < 1) {
                throw InputError("ALPHATHETA_MAX_ITERS must be a positive integer");
            }
            o.max_iterations = static_cast<int>(n);
        }
        return o;
    }
};

enum class SolveStatus { optimal, max_iters, numerical_failure };

inline std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::max_iters: return "max_iters";
    case SolveStatus::numerical_failure: return "numerical_failure";
    }
    return "?";
}

struct KktResiduals {
    double primal_infeas = 0.0;
    double dual_infeas = 0.0;
    double gap = 0.0;
};

struct IterationRecord {
    int iteration = 0;
    double primal_obj = 0.0;
    double dual_obj = 0.0;
    double gap = 0.0; ///< <X, S>
    double primal_infeas = 0.0;
    double dual_infeas = 0.0;
    double step_primal = 0.0;
    double step_dual = 0.0;
};

/// Solver output in the user's sense. For a minimization S = C - sum y_i A_i;
/// for a maximization S = sum y_i A_i - C. dual_obj = b'y in both cases.
struct SdpSolution {
    BlockMatrix x;
    Eigen::VectorXd y;
    BlockMatrix s;
    double primal_obj = 0.0;
    double dual_obj = 0.0;
    KktResiduals residuals;
    SolveStatus status = SolveStatus::numerical_failure;
    int iterations = 0;
    std::string message;
    std::vector<std::string> warnings;
    std::vector<IterationRecord> history;

    bool optimal() const { return status == SolveStatus::optimal; }
};

/// primal_infeas = max_i |<A_i, X> - b_i|, dual_infeas = ||dual residual||_F, gap = <X, S>.
inline KktResiduals kkt_residuals(const SdpProblem& p, const SdpSolution& s) {
    if (s.y.size() != static_cast<Index>(p.constraints.size())) {
        throw InputError("kkt_residuals: dual vector has wrong length");
    }
    if (s.x.size() != p.block_dims.size() || s.s.size() != p.block_dims.size()) {
        throw InputError("kkt_residuals: wrong number of blocks");
    }
    KktResiduals r;
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        const auto& con = p.constraints[i];
        r.primal_infeas = std::max(r.primal_infeas, std::abs(block_inner(con.a, s.x) - con.b));
    }
    const double sign = p.sense == Sense::minimize ? 1.0 : -1.0;
    double dual_sq = 0.0;
    for (std::size_t k = 0; k < p.block_dims.size(); ++k) {
        Eigen::MatrixXd rd = sign * p.c[k] - s.s[k];
        for (std::size_t i = 0; i < p.constraints.size(); ++i) {
            rd -= sign * s.y(static_cast<Index>(i)) * p.constraints[i].a[k];
        }
        dual_sq += rd.squaredNorm();
    }
    r.dual_infeas = std::sqrt(dual_sq);
    r.gap = block_inner(s.x, s.s);
    return r;
}

namespace detail {

/// Largest step t with M + t dM still positive semidefinite (infinity when
/// unbounded), given the lower Cholesky factor of M.
inline double max_step(const Eigen::MatrixXd& chol, const Eigen::MatrixXd& dm) {
    if (dm.rows() == 1) {
        return dm(0, 0) < 0.0 ? -(chol(0, 0) * chol(0, 0)) / dm(0, 0)
                              : std::numeric_limits<double>::infinity();
    }
    const auto lt = chol.triangularView<Eigen::Lower>();
    Eigen::MatrixXd tmp = lt.solve(dm);
    Eigen::MatrixXd w = lt.solve(tmp.transpose());
    w = 0.5 * (w + w.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

inline std::optional<BlockMatrix> block_cholesky(const BlockMatrix& m) {
    BlockMatrix out;
    out.reserve(m.size());
    for (const auto& b : m) {
        auto l = cholesky_lower(b);
        if (!l) return std::nullopt;
        out.push_back(std::move(*l));
    }
    return out;
}

struct ScaledRow {
    std::size_t original = 0;
    double scale = 1.0;
    std::vector<bool> touches;
};

} // namespace detail

/// Solves p. Never throws for numerical trouble: inspect status/message.
inline SdpSolution solve(const SdpProblem& p, const SolverOptions& opts = {}) {
    p.validate();
    const std::size_t nblk = p.block_dims.size();
    const double sign = p.sense == Sense::minimize ? 1.0 : -1.0;

    SdpSolution sol;

    // Row scaling so that max(||A_i||_F, |b_i|) = 1, then drop linearly
    // dependent rows (modified Gram-Schmidt on the vectorized matrices).
    std::vector<detail::ScaledRow> rows;
    std::vector<Eigen::VectorXd> basis;
    const Index flat = [&] {
        Index n = 0;
        for (const auto d : p.block_dims) n += d * d;
        return n;
    }();
    auto vectorize = [&](const BlockMatrix& m) {
        Eigen::VectorXd v(flat);
        Index off = 0;
        for (const auto& b : m) {
            v.segment(off, b.size()) = Eigen::Map<const Eigen::VectorXd>(b.data(), b.size());
            off += b.size();
        }
        return v;
    };
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        const auto& con = p.constraints[i];
        const double norm = block_norm(con.a);
        if (norm == 0.0) {
            if (con.b != 0.0) {
                sol.status = SolveStatus::numerical_failure;
                sol.message = "constraint " + std::to_string(i) + " reads 0 = " + std::to_string(con.b);
                return sol;
            }
            sol.warnings.push_back("dropped empty constraint " + std::to_string(i));
            continue;
        }
        Eigen::VectorXd v = vectorize(con.a) / norm;
        for (const auto& q : basis) v -= q.dot(v) * q;
        if (v.norm() < 1e-9) {
            sol.warnings.push_back("dropped linearly dependent constraint " + std::to_string(i));
            continue;
        }
        basis.push_back(v.normalized());
        detail::ScaledRow row;
        row.original = i;
        row.scale = 1.0 / std::max(norm, std::abs(con.b));
        row.touches.resize(nblk);
        for (std::size_t k = 0; k < nblk; ++k) {
            row.touches[k] = con.a[k].cwiseAbs().maxCoeff() > 0.0;
        }
        rows.push_back(std::move(row));
    }
    const auto m = static_cast<Index>(rows.size());

    // Scaled data of the internal minimization.
    BlockMatrix c(nblk);
    for (std::size_t k = 0; k < nblk; ++k) c[k] = sign * p.c[k];
    std::vector<BlockMatrix> a(rows.size());
    Eigen::VectorXd b(m);
    double a_norm_max = 0.0;
    for (Index i = 0; i < m; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        const auto& con = p.constraints[row.original];
        auto& ai = a[static_cast<std::size_t>(i)];
        ai.resize(nblk);
        for (std::size_t k = 0; k < nblk; ++k) ai[k] = row.scale * con.a[k];
        b(i) = row.scale * con.b;
        a_norm_max = std::max(a_norm_max, block_norm(ai));
    }

    auto apply_a = [&](const BlockMatrix& x) {
        Eigen::VectorXd out(m);
        for (Index i = 0; i < m; ++i) {
            double v = 0.0;
            const auto& row = rows[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < nblk; ++k) {
                if (row.touches[k]) v += a[static_cast<std::size_t>(i)][k].cwiseProduct(x[k]).sum();
            }
            out(i) = v;
        }
        return out;
    };
    auto apply_at = [&](const Eigen::VectorXd& y) {
        BlockMatrix out = p.zero_blocks();
        for (Index i = 0; i < m; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < nblk; ++k) {
                if (row.touches[k]) out[k] += y(i) * a[static_cast<std::size_t>(i)][k];
            }
        }
        return out;
    };

    const double tau = std::max({10.0, block_norm(c), a_norm_max});
    BlockMatrix x(nblk);
    BlockMatrix s(nblk);
    for (std::size_t k = 0; k < nblk; ++k) {
        x[k] = tau * Eigen::MatrixXd::Identity(p.block_dims[k], p.block_dims[k]);
        s[k] = x[k];
    }
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    const double total_dim = static_cast<double>(p.total_dim());

    // Residuals measured against the original (unscaled) data.
    auto measure = [&](const BlockMatrix& xx, const Eigen::VectorXd& yy, const BlockMatrix& ss) {
        IterationRecord rec;
        double pinf = 0.0;
        const Eigen::VectorXd ax = apply_a(xx);
        for (Index i = 0; i < m; ++i) {
            const double sc = rows[static_cast<std::size_t>(i)].scale;
            pinf = std::max(pinf, std::abs(ax(i) - b(i)) / sc);
        }
        BlockMatrix aty = apply_at(yy);
        double dsq = 0.0;
        for (std::size_t k = 0; k < nblk; ++k) dsq += (c[k] - aty[k] - ss[k]).squaredNorm();
        rec.primal_infeas = pinf;
        rec.dual_infeas = std::sqrt(dsq);
        rec.primal_obj = block_inner(c, xx);
        rec.dual_obj = b.dot(yy);
        rec.gap = block_inner(xx, ss);
        return rec;
    };

    auto finish = [&](SolveStatus status, std::string message, int iters) {
        sol.status = status;
        sol.message = std::move(message);
        sol.iterations = iters;
        sol.x = x;
        sol.s = s;
        sol.y = Eigen::VectorXd::Zero(static_cast<Index>(p.constraints.size()));
        for (Index i = 0; i < m; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            sol.y(static_cast<Index>(row.original)) = sign * row.scale * y(i);
        }
        sol.primal_obj = block_inner(p.c, sol.x);
        double dobj = 0.0;
        for (std::size_t i = 0; i < p.constraints.size(); ++i) {
            dobj += p.constraints[i].b * sol.y(static_cast<Index>(i));
        }
        sol.dual_obj = dobj;
        sol.residuals = kkt_residuals(p, sol);
        return sol;
    };

    auto acceptable = [&](const IterationRecord& r) {
        return r.primal_infeas <= opts.accept_feasibility && r.dual_infeas <= opts.accept_feasibility &&
               std::abs(r.gap) <= opts.accept_gap * std::max(1.0, std::abs(r.primal_obj));
    };

    IterationRecord last;
    for (int iter = 0;; ++iter) {
        IterationRecord rec = measure(x, y, s);
        rec.iteration = iter;
        rec.step_primal = last.step_primal;
        rec.step_dual = last.step_dual;
        if (opts.record_history) sol.history.push_back(rec);
        last = rec;

        if (rec.primal_infeas <= opts.feasibility_tol && rec.dual_infeas <= opts.feasibility_tol &&
            rec.gap <= opts.gap_tol * std::max(1.0, std::abs(rec.primal_obj))) {
            return finish(SolveStatus::optimal, "converged", iter);
        }
        if (std::abs(rec.dual_obj) > opts.divergence_bound || std::abs(rec.primal_obj) > opts.divergence_bound) {
            return finish(SolveStatus::numerical_failure,
                          "objective diverged beyond " + std::to_string(opts.divergence_bound) +
                              " (problem likely infeasible or unbounded)",
                          iter);
        }
        if (iter >= opts.max_iterations) {
            if (acceptable(rec)) return finish(SolveStatus::optimal, "accepted at iteration cap", iter);
            return finish(SolveStatus::max_iters, "iteration cap reached", iter);
        }

        const auto s_chol = detail::block_cholesky(s);
        const auto x_chol = detail::block_cholesky(x);
        if (!s_chol || !x_chol) {
            if (acceptable(rec)) return finish(SolveStatus::optimal, "accepted at Cholesky breakdown", iter);
            return finish(SolveStatus::numerical_failure, "Cholesky breakdown of an iterate", iter);
        }
        BlockMatrix s_inv(nblk);
        for (std::size_t k = 0; k < nblk; ++k) {
            const auto lt = (*s_chol)[k].triangularView<Eigen::Lower>();
            Eigen::MatrixXd li = lt.solve(Eigen::MatrixXd::Identity(p.block_dims[k], p.block_dims[k]));
            s_inv[k] = li.transpose() * li;
        }

        const double mu = rec.gap / total_dim;
        const Eigen::VectorXd rp = b - apply_a(x);
        BlockMatrix rd = apply_at(y);
        for (std::size_t k = 0; k < nblk; ++k) rd[k] = c[k] - rd[k] - s[k];

        // Schur complement M_ij = <A_i, X A_j S^-1>.
        Eigen::MatrixXd schur = Eigen::MatrixXd::Zero(m, m);
        for (std::size_t k = 0; k < nblk; ++k) {
            for (Index j = 0; j < m; ++j) {
                if (!rows[static_cast<std::size_t>(j)].touches[k]) continue;
                const Eigen::MatrixXd g = x[k] * a[static_cast<std::size_t>(j)][k] * s_inv[k];
                for (Index i = 0; i < m; ++i) {
                    if (!rows[static_cast<std::size_t>(i)].touches[k]) continue;
                    schur(i, j) += a[static_cast<std::size_t>(i)][k].cwiseProduct(g).sum();
                }
            }
        }
        schur = 0.5 * (schur + schur.transpose());

        BlockMatrix base(nblk); // sigma mu S^-1 - X - X Rd S^-1
        for (std::size_t k = 0; k < nblk; ++k) {
            base[k] = opts.centering * mu * s_inv[k] - x[k] - x[k] * rd[k] * s_inv[k];
        }
        const Eigen::VectorXd rhs = rp - apply_a(base);

        Eigen::VectorXd dy;
        if (m > 0) {
            Eigen::LLT<Eigen::MatrixXd> llt(schur);
            if (llt.info() != Eigen::Success) {
                // Near-singular Schur matrix late in the run: retry with a tiny
                // diagonal shift before giving up on Cholesky.
                const double shift = 1e-13 * std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
                llt.compute(schur + shift * Eigen::MatrixXd::Identity(m, m));
            }
            if (llt.info() == Eigen::Success) {
                dy = llt.solve(rhs);
            } else {
                Eigen::LDLT<Eigen::MatrixXd> ldlt(schur);
                if (ldlt.info() != Eigen::Success) {
                    if (acceptable(rec)) return finish(SolveStatus::optimal, "accepted at Schur breakdown", iter);
                    return finish(SolveStatus::numerical_failure, "Schur complement factorization failed", iter);
                }
                dy = ldlt.solve(rhs);
            }
            if (!dy.allFinite()) {
                if (acceptable(rec)) return finish(SolveStatus::optimal, "accepted at Schur breakdown", iter);
                return finish(SolveStatus::numerical_failure, "Schur complement solve is not finite", iter);
            }
        } else {
            dy = Eigen::VectorXd::Zero(0);
        }

        BlockMatrix ds = apply_at(dy);
        BlockMatrix dx(nblk);
        for (std::size_t k = 0; k < nblk; ++k) {
            ds[k] = rd[k] - ds[k];
            ds[k] = 0.5 * (ds[k] + ds[k].transpose());
            Eigen::MatrixXd d = opts.centering * mu * s_inv[k] - x[k] - x[k] * ds[k] * s_inv[k];
            dx[k] = 0.5 * (d + d.transpose());
        }

        double ap = std::numeric_limits<double>::infinity();
        double ad = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < nblk; ++k) {
            ap = std::min(ap, detail::max_step((*x_chol)[k], dx[k]));
            ad = std::min(ad, detail::max_step((*s_chol)[k], ds[k]));
        }
        ap = std::min(1.0, opts.step_fraction * ap);
        ad = std::min(1.0, opts.step_fraction * ad);

        // Step-size backoff until both iterates factor.
        bool accepted = false;
        for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
            BlockMatrix xn(nblk);
            BlockMatrix sn(nblk);
            for (std::size_t k = 0; k < nblk; ++k) {
                xn[k] = x[k] + ap * dx[k];
                sn[k] = s[k] + ad * ds[k];
            }
            if (detail::block_cholesky(xn) && detail::block_cholesky(sn)) {
                x = std::move(xn);
                s = std::move(sn);
                y += ad * dy;
                accepted = true;
            } else {
                ap *= 0.5;
                ad *= 0.5;
            }
        }
        if (!accepted) {
            if (acceptable(rec)) return finish(SolveStatus::optimal, "accepted at step-length breakdown", iter);
            return finish(SolveStatus::numerical_failure, "no positive definite step found", iter);
        }
        last.step_primal = ap;
        last.step_dual = ad;
    }
}

/// Writes p in SDPA sparse format (".dat-s"). The solver's form maps onto the
/// SDPA dual: F0 = C for a maximization (-C for a minimization), Fi = A_i,
/// c = b. Entries are 1-based upper-triangular "matno blkno i j value".
/// Comment lines start with '*'.
inline void write_sdpa(std::ostream& os, const SdpProblem& p, std::string_view comment = {}) {
    p.validate();
    if (!comment.empty()) {
        os << "* " << comment << '\n';
    }
    os << "* sense " << (p.sense == Sense::minimize ? "min" : "max") << '\n';
    os << p.constraints.size() << '\n' << p.block_dims.size() << '\n';
    for (std::size_t k = 0; k < p.block_dims.size(); ++k) {
        os << (k ? " " : "") << p.block_dims[k];
    }
    os << '\n';
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        os << (i ? " " : "") << p.constraints[i].b;
    }
    os << '\n';
    const auto old_prec = os.precision(17);
    auto emit = [&](std::size_t matno, const BlockMatrix& mat, double factor) {
        for (std::size_t k = 0; k < mat.size(); ++k) {
            for (Index i = 0; i < mat[k].rows(); ++i) {
                for (Index j = i; j < mat[k].cols(); ++j) {
                    const double v = factor * mat[k](i, j);
                    if (v != 0.0) {
                        os << matno << ' ' << k + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << v << '\n';
                    }
                }
            }
        }
    };
    emit(0, p.c, p.sense == Sense::maximize ? 1.0 : -1.0);
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        emit(i + 1, p.constraints[i].a, 1.0);
    }
    os.precision(old_prec);
}

} // namespace alphatheta

#endif // ALPHATHETA_SDP_HPP
