#ifndef ALPHATHETA_VERIFY_HPP
#define ALPHATHETA_VERIFY_HPP

// Explicit feasible points for the alpha0 dual, the eigenvalue program and
// the copositive program, each checked for feasibility and objective value,
// plus the per-graph report tying every bound together.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alphatheta/errors.hpp"
#include "alphatheta/formulations.hpp"
#include "alphatheta/graph.hpp"
#include "alphatheta/linalg.hpp"
#include "alphatheta/parameters.hpp"

namespace alphatheta {

inline constexpr double kCertificateTol = 1e-7;
inline constexpr int kDefaultCopositivityTrials = 20000;

// ---------------------------------------------------------------------------
// Copositivity evidence
// ---------------------------------------------------------------------------

struct CopositivitySample {
    double min_qform = 0.0;
    Eigen::VectorXd argmin;
};

/// Minimum of h'Mh over h >= 0, sum(h) = 1, taken over: all coordinate
/// vectors, the exact minimum on every two-element support, and `trials`
/// random simplex points. A negative value disproves copositivity; a
/// nonnegative one is only evidence.
inline CopositivitySample copositivity_sample_check(const SymMatrix& m, int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("copositivity_sample_check: trials must be >= 1");
    const Index n = m.dim();
    CopositivitySample best{std::numeric_limits<double>::infinity(), Eigen::VectorXd::Zero(n)};
    auto consider = [&](double q, const Eigen::VectorXd& h) {
        if (q < best.min_qform) {
            best.min_qform = q;
            best.argmin = h;
        }
    };
    for (Index i = 0; i < n; ++i) {
        Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
        h(i) = 1.0;
        consider(m(i, i), h);
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            // q(t) = a t^2 + 2 b t (1-t) + c (1-t)^2 on h = t e_i + (1-t) e_j.
            const double a = m(i, i);
            const double b = m(i, j);
            const double c = m(j, j);
            const double curv = a - 2.0 * b + c;
            if (curv > 0.0) {
                const double t = (c - b) / curv;
                if (t > 0.0 && t < 1.0) {
                    Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
                    h(i) = t;
                    h(j) = 1.0 - t;
                    consider(m.qform(h), h);
                }
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < trials; ++k) {
        const Eigen::VectorXd h = sample_simplex(rng, n);
        consider(m.qform(h), h);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class Provenance { eigvec_prop22, cut_prop51, gw_thm53, theta_min_thm31, motzkin_thm61, strict_feas_prop21 };

inline std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::eigvec_prop22: return "eigenvector";
    case Provenance::cut_prop51: return "max_cut";
    case Provenance::gw_thm53: return "gw_relaxation";
    case Provenance::theta_min_thm31: return "theta_min";
    case Provenance::motzkin_thm61: return "motzkin_straus";
    case Provenance::strict_feas_prop21: return "strict_feasibility";
    }
    return "?";
}

struct CertificateCheck {
    double feasibility_residual = 0.0;
    double achieved_objective = 0.0;
    double objective_error = 0.0;
    bool valid = false;
};

/// X = scale * matrix. The raw matrix is kept unscaled so that integer
/// identities can be checked before dividing.
struct DualCertificate {
    Graph graph;
    SymMatrix matrix;
    double scale = 1.0;
    FormulationTag program;
    double claimed_objective = 0.0;
    Provenance provenance = Provenance::eigvec_prop22;
    std::uint64_t seed = kDefaultSeed; ///< copositive program only

    SymMatrix x() const { return matrix * scale; }

    CertificateCheck check() const {
        const auto mats = matrices(graph);
        const SymMatrix xm = x();
        CertificateCheck c;
        switch (program.kind) {
        case ProgramKind::alpha0_dual: {
            const double lmin = sym_eig(xm).lambda_min();
            const double lx = trace_inner(xm, to_real(mats.laplacian));
            c.feasibility_residual = std::max({0.0, -lmin, lx - 1.0});
            c.achieved_objective = -trace_inner(xm, to_real(mats.adjacency));
            break;
        }
        case ProgramKind::eigen_dual: {
            const double lmin = sym_eig(xm).lambda_min();
            c.feasibility_residual = std::max({0.0, -lmin, std::abs(xm.trace() - 1.0)});
            c.achieved_objective = trace_inner(xm, a_alpha(graph, program.alpha));
            break;
        }
        case ProgramKind::copositive: {
            const double lx = trace_inner(xm, to_real(mats.laplacian));
            const auto cop = copositivity_sample_check(xm, kDefaultCopositivityTrials, seed);
            c.feasibility_residual = std::max({0.0, -cop.min_qform, lx - 1.0});
            c.achieved_objective = -trace_inner(xm, to_real(mats.adjacency));
            break;
        }
        default:
            throw InputError("certificate: unsupported program " + to_string(program.kind));
        }
        c.objective_error = std::abs(c.achieved_objective - claimed_objective);
        c.valid = c.feasibility_residual <= kCertificateTol && c.objective_error <= kCertificateTol;
        return c;
    }
};

/// X = I / (2m + 1): interior point of the alpha0 dual.
inline DualCertificate cert_strict_feasible(const Graph& g) {
    if (g.size() == 0) throw EdgelessGraphError();
    return {g, SymMatrix::identity(g.order()), 1.0 / (2.0 * static_cast<double>(g.size()) + 1.0),
            FormulationTag::of(ProgramKind::alpha0_dual), 0.0, Provenance::strict_feas_prop21};
}

/// vv' / (Delta - lambda_min) for the first unit lambda_min-eigenvector v of A.
inline DualCertificate cert_eigvec(const Graph& g) {
    if (g.size() == 0) throw EdgelessGraphError();
    const auto spec = sym_eig(adjacency_matrix(g));
    const Eigen::VectorXd v = spec.min_eigenvector();
    const double lmin = spec.lambda_min();
    const double denom = g.max_degree() - lmin;
    return {g, SymMatrix(Eigen::MatrixXd(v * v.transpose())), 1.0 / denom,
            FormulationTag::of(ProgramKind::alpha0_dual), -lmin / denom, Provenance::eigvec_prop22};
}

/// xx' / (4M) for the +-1 indicator x of `side`. Throws CertificateError unless
/// x'Lx = 4M and x'Ax = 2|E| - 4M hold in integer arithmetic.
inline DualCertificate cert_cut(const Graph& g, const std::vector<int>& side, long long claimed_m) {
    if (g.size() == 0) throw EdgelessGraphError();
    if (claimed_m < 1) throw CertificateError("cert_cut: claimed cut must be >= 1");
    const auto mats = matrices(g);
    Eigen::Matrix<long long, Eigen::Dynamic, 1> x = Eigen::Matrix<long long, Eigen::Dynamic, 1>::Constant(g.order(), -1);
    for (const int v : side) {
        if (v < 0 || v >= g.order()) throw CertificateError("cert_cut: vertex out of range");
        x(v) = 1;
    }
    const long long xlx = x.dot(mats.laplacian * x);
    const long long xax = x.dot(mats.adjacency * x);
    const auto m = static_cast<long long>(g.size());
    if (xlx != 4 * claimed_m) {
        throw CertificateError("cert_cut: x'Lx = " + std::to_string(xlx) + " but 4M = " +
                               std::to_string(4 * claimed_m));
    }
    if (xax != 2 * m - 4 * claimed_m) {
        throw CertificateError("cert_cut: x'Ax does not equal 2|E| - 4M");
    }
    const Eigen::VectorXd xd = x.cast<double>();
    return {g, SymMatrix(Eigen::MatrixXd(xd * xd.transpose())), 1.0 / (4.0 * static_cast<double>(claimed_m)),
            FormulationTag::of(ProgramKind::alpha0_dual),
            1.0 - static_cast<double>(m) / (2.0 * static_cast<double>(claimed_m)), Provenance::cut_prop51};
}

/// X* / (4M*) from an optimal max-cut relaxation solution.
inline DualCertificate cert_gw(const Graph& g, const SymMatrix& xstar, double mstar) {
    if (g.size() == 0) throw EdgelessGraphError();
    if (!(mstar > 0.0)) throw CertificateError("cert_gw: M* must be positive");
    DualCertificate c{g, xstar, 1.0 / (4.0 * mstar), FormulationTag::of(ProgramKind::alpha0_dual),
                      1.0 - static_cast<double>(g.size()) / (2.0 * mstar), Provenance::gw_thm53};
    const auto chk = c.check();
    if (chk.feasibility_residual > kCertificateTol) {
        throw CertificateError("cert_gw: X*/(4M*) is infeasible (residual " +
                               std::to_string(chk.feasibility_residual) + ")");
    }
    return c;
}

/// (theta I + Z - J) / (n (theta - 1)) for the eigenvalue program at alpha,
/// where (theta, Z) solves the min form of theta for the complement of g.
inline DualCertificate cert_theta_min(const Graph& g, double theta, const SymMatrix& z, double alpha) {
    if (g.size() == 0) throw EdgelessGraphError();
    const Index n = g.order();
    if (z.dim() != n) throw CertificateError("cert_theta_min: Z has wrong dimension");
    if (!(theta >= 2.0 - 1e-6)) {
        throw CertificateError("cert_theta_min: theta(complement) = " + std::to_string(theta) + " < 2");
    }
    for (Index i = 0; i < n; ++i) {
        if (z(i, i) != 0.0) throw CertificateError("cert_theta_min: Z has a nonzero diagonal");
        for (Index j = i + 1; j < n; ++j) {
            if (g.adjacent(static_cast<int>(i), static_cast<int>(j)) && z(i, j) != 0.0) {
                throw CertificateError("cert_theta_min: Z is nonzero on an edge of the graph");
            }
        }
    }
    const SymMatrix raw = theta * SymMatrix::identity(n) + z - SymMatrix::ones(n);
    const double m = static_cast<double>(g.size());
    const double nn = static_cast<double>(n);
    DualCertificate c{g, raw, 1.0 / (nn * (theta - 1.0)), FormulationTag::of(ProgramKind::eigen_dual, alpha),
                      (2.0 * m * theta * alpha - 2.0 * m) / (nn * (theta - 1.0)), Provenance::theta_min_thm31};
    if (c.check().feasibility_residual > kCertificateTol) {
        throw CertificateError("cert_theta_min: (theta, Z) is not feasible");
    }
    return c;
}

/// (Abar + I - J/omega) / (2|E|), stored as the integer matrix
/// omega Abar + omega I - J with scale 1/(2|E| omega).
inline DualCertificate cert_motzkin(const Graph& g, int omega, std::uint64_t seed = kDefaultSeed) {
    if (g.size() == 0) throw EdgelessGraphError();
    if (omega != clique_number(g)) {
        throw CertificateError("cert_motzkin: omega = " + std::to_string(omega) +
                               " is not the clique number of the graph");
    }
    const auto mats = matrices(g);
    const Index n = g.order();
    const IntMatrix raw = omega * mats.complement_adjacency + omega * IntMatrix::Identity(n, n) - IntMatrix::Ones(n, n);
    const auto m = static_cast<long long>(g.size());
    if (mats.laplacian.cwiseProduct(raw).sum() != 2 * m * omega) {
        throw CertificateError("cert_motzkin: <L, omega Y> != 2 m omega");
    }
    if (-mats.adjacency.cwiseProduct(raw).sum() != 2 * m) {
        throw CertificateError("cert_motzkin: <-A, omega Y> != 2 m");
    }
    DualCertificate c{g, to_real(raw), 1.0 / (2.0 * static_cast<double>(m) * omega),
                      FormulationTag::of(ProgramKind::copositive), 1.0 / omega, Provenance::motzkin_thm61};
    c.seed = seed;
    return c;
}

struct WeakDualityChain {
    double v1 = 0.0; ///< <X, -A>
    double v2 = 0.0; ///< alpha <X, L>
    double v3 = 0.0; ///< alpha
    bool pass = false;
};

/// <X,-A> <= <X, alpha(D - A)> = alpha <X, L> <= alpha for X feasible in the
/// alpha0 dual and alpha >= alpha0.
inline WeakDualityChain weak_duality_check(const Graph& g, const SymMatrix& x, double alpha) {
    constexpr double tol = 1e-8;
    const auto mats = matrices(g);
    const double lx = trace_inner(x, to_real(mats.laplacian));
    const auto psd = psd_check(x, tol);
    if (!psd.is_psd || lx > 1.0 + tol) {
        throw CertificateError("weak_duality_check: X is not feasible for the alpha0 dual");
    }
    WeakDualityChain w;
    w.v1 = -trace_inner(x, to_real(mats.adjacency));
    w.v2 = alpha * lx;
    w.v3 = alpha;
    w.pass = w.v1 <= w.v2 + tol && w.v2 <= w.v3 + tol;
    return w;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

enum class Relation {
    geq,        ///< lhs >= rhs; pass iff slack = lhs - rhs >= -tol
    eq,         ///< lhs == rhs; pass iff |lhs - rhs| <= tol
    strict_gt,  ///< lhs > rhs;  pass iff slack = lhs - rhs > tol
};

enum class RowStatus { pass, fail, skipped };

inline std::string to_string(Relation r) {
    switch (r) {
    case Relation::geq: return ">=";
    case Relation::eq: return "==";
    case Relation::strict_gt: return ">";
    }
    return "?";
}

inline std::string to_string(RowStatus s) {
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::skipped: return "skipped";
    }
    return "?";
}

inline constexpr double kInequalityTol = 1e-6;
inline constexpr double kEqualityTol = 1e-5;

struct ReportRow {
    std::string id;
    std::string statement;
    Relation relation = Relation::geq;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tol = 0.0;
    RowStatus status = RowStatus::skipped;
    std::string note;
};

struct ReportOptions {
    double alpha0_tol = 1e-9;
    double alpha_tilde_tol = 1e-6;
    std::uint64_t seed = kDefaultSeed;
    int simplex_samples = kDefaultSimplexSamples;
    SolverOptions solver;
};

/// Headline values computed along the way (absent when their computation failed
/// or was out of range).
struct ReportValues {
    std::optional<double> alpha0;
    std::optional<double> alpha0_dual;
    std::optional<double> theta;
    std::optional<double> theta_complement;
    std::optional<double> alpha_tilde;
    std::optional<double> inv_theta;
    std::optional<long long> maxcut;
    std::optional<double> gw;
    std::optional<int> omega;
    std::optional<BoundsReport> bounds;
};

struct TheoremReport {
    std::string graph_id;
    int n = 0;
    std::size_t m = 0;
    ReportValues values;
    std::vector<ReportRow> rows;

    bool passed() const {
        return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == RowStatus::fail; });
    }
    std::size_t count(RowStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) { return r.status == s; }));
    }
    const ReportRow* find(const std::string& id) const {
        for (const auto& r : rows) {
            if (r.id == id) return &r;
        }
        return nullptr;
    }
};

namespace detail {

class ReportBuilder {
public:
    explicit ReportBuilder(std::vector<ReportRow>& rows) : rows_(rows) {}

    void add(std::string id, std::string statement, Relation rel, double lhs, double rhs, double tol = -1.0,
             std::string note = {}) {
        ReportRow r;
        r.id = std::move(id);
        r.statement = std::move(statement);
        r.relation = rel;
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = lhs - rhs;
        r.tol = tol >= 0.0 ? tol : (rel == Relation::eq ? kEqualityTol : kInequalityTol);
        r.note = std::move(note);
        bool ok = false;
        switch (rel) {
        case Relation::geq: ok = r.slack >= -r.tol; break;
        case Relation::eq: ok = std::abs(r.slack) <= r.tol; break;
        case Relation::strict_gt: ok = r.slack > r.tol; break;
        }
        r.status = ok ? RowStatus::pass : RowStatus::fail;
        rows_.push_back(std::move(r));
    }

    void skip(std::string id, std::string statement, std::string reason) {
        ReportRow r;
        r.id = std::move(id);
        r.statement = std::move(statement);
        r.status = RowStatus::skipped;
        r.note = std::move(reason);
        r.slack = std::numeric_limits<double>::quiet_NaN();
        r.lhs = r.slack;
        r.rhs = r.slack;
        rows_.push_back(std::move(r));
    }

    /// Certificate rows: feasibility residual and objective match.
    void certificate(const std::string& id, const std::string& statement, const DualCertificate& c) {
        const auto chk = c.check();
        add(id + ".feasible", statement + " is feasible", Relation::geq, 0.0, chk.feasibility_residual,
            kCertificateTol, to_string(c.program.kind));
        add(id + ".objective", statement + " attains its claimed objective", Relation::eq, chk.achieved_objective,
            c.claimed_objective, kCertificateTol);
    }

private:
    std::vector<ReportRow>& rows_;
};

template <class F>
auto attempt(F&& f, std::string& error) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const std::exception& e) {
        error = e.what();
        return std::nullopt;
    }
}

} // namespace detail

/// Evaluates every bound and certificate for g. Computations that fail or
/// exceed a size cap turn their dependent rows into "skipped" rows carrying
/// the reason. Throws EdgelessGraphError for graphs without edges.
inline TheoremReport theorem_report(const Graph& g, const ReportOptions& opts = {}, std::string graph_id = {}) {
    if (g.size() == 0) throw EdgelessGraphError();
    TheoremReport rep;
    rep.graph_id = graph_id.empty() ? encode_graph6(g) : std::move(graph_id);
    rep.n = g.order();
    rep.m = g.size();
    detail::ReportBuilder b(rep.rows);
    auto& v = rep.values;
    const double m = static_cast<double>(g.size());
    const Graph gbar = complement(g);

    std::string err_a0, err_dual, err_tb, err_at, err_inv, err_mc, err_gw, err_om, err_dnn;
    const auto a0 = detail::attempt([&] { return alpha0(g, opts.alpha0_tol); }, err_a0);
    if (a0) v.alpha0 = a0->value;
    v.alpha0_dual = detail::attempt([&] { return alpha0_via_dual(g, opts.solver); }, err_dual);
    const auto tbar = detail::attempt([&] { return lovasz_theta_detailed(gbar, opts.solver); }, err_tb);
    if (tbar) v.theta_complement = tbar->value;
    v.alpha_tilde = detail::attempt([&] { return alpha_tilde(g, opts.alpha_tilde_tol, opts.solver); }, err_at);
    v.inv_theta = detail::attempt([&] { return inv_theta_value(g, opts.solver); }, err_inv);
    const auto mc = detail::attempt([&] { return maxcut_exact(g); }, err_mc);
    if (mc) v.maxcut = mc->value;
    const auto gw = detail::attempt([&] { return gw_detailed(g, opts.solver); }, err_gw);
    if (gw) v.gw = gw->value;
    v.omega = detail::attempt([&] { return clique_number(g); }, err_om);
    const auto dnn = detail::attempt(
        [&] {
            const auto f = build_dnn_copositive(g);
            return f.value(solve_checked(f, opts.solver));
        },
        err_dnn);
    const auto deg = alpha0_degree_bounds(g);
    const double lmin = detail::lambda_min_adjacency(g);

    // alpha0 itself.
    if (a0) {
        b.add("alpha0.at_most_half", "alpha0 <= 1/2", Relation::geq, 0.5, a0->value, 1e-9);
        b.add("alpha0.threshold_eigenvalue", "lambda_min(A_alpha0) == 0", Relation::eq, a0->lambda_min_at_value, 0.0,
              1e-8 * std::max(1, g.max_degree()));
        const bool bip = is_bipartite(g);
        if (bip) {
            b.add("bipartite.alpha0_half", "bipartite => alpha0 == 1/2", Relation::eq, a0->value, 0.5, 1e-7);
        } else {
            b.add("bipartite.alpha0_half", "non-bipartite => alpha0 < 1/2", Relation::strict_gt, 0.5, a0->value, 1e-7);
        }
    } else {
        b.skip("alpha0.at_most_half", "alpha0 <= 1/2", err_a0);
    }

    // Strong duality and interior point of the dual.
    if (a0 && v.alpha0_dual) {
        b.add("duality.strong", "alpha0 (bisection) == sup <X,-A> (SDP)", Relation::eq, a0->value, *v.alpha0_dual);
    } else {
        b.skip("duality.strong", "alpha0 (bisection) == sup <X,-A> (SDP)", err_a0.empty() ? err_dual : err_a0);
    }
    {
        const auto c = cert_strict_feasible(g);
        const double lx = trace_inner(c.x(), laplacian_matrix(g));
        b.add("duality.strict_feasibility", "<I/(2m+1), L> < 1", Relation::strict_gt, 1.0, lx, 0.0);
        b.certificate("duality.strict_point", "I/(2m+1)", c);
    }

    // Degree bounds and the eigenvector certificate.
    if (a0) {
        b.add("degree.lower", "alpha0 >= -lmin/(Delta - lmin)", Relation::geq, a0->value, deg.lower);
        b.add("degree.upper", "-lmin/(delta - lmin) >= alpha0", Relation::geq, deg.upper, a0->value, kInequalityTol,
              deg.upper_vacuous ? "vacuous: exceeds 1/2" : "");
        if (g.is_regular()) {
            b.add("degree.regular_closed_form", "regular => alpha0 == -lmin/(d - lmin)", Relation::eq, a0->value,
                  alpha0_closed_regular(g), 1e-7);
        } else {
            b.skip("degree.regular_closed_form", "regular => alpha0 == -lmin/(d - lmin)", "not applicable: not regular");
        }
    }
    const auto eig_cert = cert_eigvec(g);
    b.certificate("degree.eigenvector_certificate", "vv'/(Delta - lmin)", eig_cert);
    if (a0) {
        const auto chain = weak_duality_check(g, eig_cert.x(), a0->value);
        b.add("duality.weak_chain", "<X,-A> <= alpha0 <X,L> <= alpha0 at the eigenvector point", Relation::geq,
              std::min(chain.v2 - chain.v1, chain.v3 - chain.v2), 0.0, 1e-8);
    }

    // Theta bounds.
    if (tbar) {
        const double th = tbar->value;
        b.add("theta.forms_agree", "theta(Gbar): max form == min form", Relation::eq, tbar->value, tbar->min_value);
        double worst = std::numeric_limits<double>::infinity();
        double worst_alpha = 0.0;
        double worst_bound = 0.0;
        double worst_lmin = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double alpha = 0.05 * k;
            const double bound = lambda_min_alpha_bound(g, alpha, th);
            const double lm = sym_eig(a_alpha(g, alpha)).lambda_min();
            if (bound - lm < worst) {
                worst = bound - lm;
                worst_alpha = alpha;
                worst_bound = bound;
                worst_lmin = lm;
            }
        }
        b.add("theta.eigenvalue_bound", "lambda_min(A_a) <= (2m/n)(theta_bar a - 1)/(theta_bar - 1), a in {0,...,1}",
              Relation::geq, worst_bound, worst_lmin, kInequalityTol,
              "tightest at alpha = " + std::to_string(worst_alpha));
        b.add("sandwich.omega_le_theta", "theta(Gbar) >= omega", Relation::geq, th,
              v.omega ? static_cast<double>(*v.omega) : std::numeric_limits<double>::quiet_NaN());
        if (a0) {
            b.add("theta.lower_bound", "alpha0 >= 1/theta(Gbar)", Relation::geq, a0->value, 1.0 / th);
            std::string err;
            const auto cert = detail::attempt(
                [&] { return cert_theta_min(g, tbar->min_value, tbar->min_point.z, a0->value); }, err);
            if (cert) {
                b.certificate("theta.certificate", "(theta I + Z - J)/(n(theta - 1)) at alpha0", *cert);
                b.add("theta.certificate_bounds_eigenvalue", "<X, A_alpha0> >= lambda_min(A_alpha0)", Relation::geq,
                      cert->claimed_objective, a0->lambda_min_at_value);
            } else {
                b.skip("theta.certificate", "(theta I + Z - J)/(n(theta - 1)) at alpha0", err);
            }
        }
        if (v.alpha_tilde) {
            b.add("weighted.alpha_tilde_equals_inv_theta", "alpha_tilde == 1/theta(Gbar)", Relation::eq,
                  *v.alpha_tilde, 1.0 / th);
        }
        if (v.inv_theta) {
            b.add("weighted.renormalized_theta", "min{<X,I> : X o Abar = 0, <X,J> = 1} == 1/theta(Gbar)",
                  Relation::eq, *v.inv_theta, 1.0 / th);
        }
    } else {
        b.skip("theta.lower_bound", "alpha0 >= 1/theta(Gbar)", err_tb);
    }
    if (v.alpha_tilde && a0) {
        b.add("weighted.alpha_tilde_le_alpha0", "alpha0 >= alpha_tilde", Relation::geq, a0->value, *v.alpha_tilde);
    } else if (!v.alpha_tilde) {
        b.skip("weighted.alpha_tilde_equals_inv_theta", "alpha_tilde == 1/theta(Gbar)", err_at);
    }
    if (v.alpha_tilde && v.inv_theta) {
        b.add("weighted.alpha_tilde_equals_renormalized", "alpha_tilde == min{<X,I> : ...}", Relation::eq,
              *v.alpha_tilde, *v.inv_theta);
    }

    // Cuts.
    if (mc) {
        const double mcut = static_cast<double>(mc->value);
        const double lower_mc = 1.0 - m / (2.0 * mcut);
        if (a0) b.add("cut.maxcut_bound", "alpha0 >= 1 - |E|/(2M)", Relation::geq, a0->value, lower_mc);
        std::string err;
        const auto cc = detail::attempt([&] { return cert_cut(g, mc->side, mc->value); }, err);
        if (cc) {
            b.certificate("cut.certificate", "xx'/(4M)", *cc);
        } else {
            b.skip("cut.certificate", "xx'/(4M)", err);
        }
        if (g.min_degree() > 0) {
            b.add("cut.spectral_upper", "M <= (|E|/2)(delta - lmin)/delta", Relation::geq,
                  (m / 2.0) * (g.min_degree() - lmin) / g.min_degree(), mcut, 1e-9);
        } else {
            b.skip("cut.spectral_upper", "M <= (|E|/2)(delta - lmin)/delta", "not applicable: minimum degree is 0");
        }
        if (gw) {
            b.add("cut.relaxation_ge_maxcut", "M* >= M", Relation::geq, gw->value, mcut);
            b.add("cut.gw_dominates_maxcut_bound", "1 - |E|/(2M*) >= 1 - |E|/(2M)", Relation::geq,
                  1.0 - m / (2.0 * gw->value), lower_mc);
        }
    } else {
        b.skip("cut.maxcut_bound", "alpha0 >= 1 - |E|/(2M)", err_mc);
    }
    if (gw) {
        if (a0) b.add("cut.gw_bound", "alpha0 >= 1 - |E|/(2M*)", Relation::geq, a0->value, 1.0 - m / (2.0 * gw->value));
        std::string err;
        const auto gc = detail::attempt([&] { return cert_gw(g, gw->x, gw->value); }, err);
        if (gc) {
            b.certificate("cut.gw_certificate", "X*/(4M*)", *gc);
        } else {
            b.skip("cut.gw_certificate", "X*/(4M*)", err);
        }
    } else {
        b.skip("cut.gw_bound", "alpha0 >= 1 - |E|/(2M*)", err_gw);
    }

    // Copositive program.
    if (v.omega) {
        const int om = *v.omega;
        const double inv_omega = 1.0 / om;
        b.add("copositive.bracket", "1/omega <= 1/2", Relation::geq, 0.5, inv_omega, 0.0);
        const auto mot = cert_motzkin(g, om, opts.seed);
        const auto mats = matrices(g);
        const IntMatrix raw = om * mats.complement_adjacency + om * IntMatrix::Identity(g.order(), g.order()) -
                              IntMatrix::Ones(g.order(), g.order());
        b.add("copositive.certificate_constraint_exact", "<L, omega Y> == 2 m omega (integers)", Relation::eq,
              static_cast<double>(mats.laplacian.cwiseProduct(raw).sum()), 2.0 * m * om, 0.0);
        b.certificate("copositive.certificate", "(Abar + I - J/omega)/(2|E|)", mot);
        const auto cop = copositivity_sample_check(to_real(raw) * (1.0 / om), kDefaultCopositivityTrials, opts.seed);
        b.add("copositive.y_sampled_copositive", "min h'(Abar + I - J/omega)h >= 0 over sampled h >= 0 (evidence)",
              Relation::geq, cop.min_qform, 0.0, 1e-9, "sampled");
        const auto ms = motzkin_straus_value(g, opts.simplex_samples, opts.seed);
        b.add("copositive.motzkin_straus_witness", "x'(Abar + I)x == 1/omega at the clique point", Relation::eq,
              ms.witness_value, ms.certified, 1e-12);
        b.add("copositive.motzkin_straus_sampled", "min x'(Abar + I)x >= 1/omega over sampled simplex points",
              Relation::geq, ms.empirical_min, ms.certified, 1e-9, "sampled");
        if (dnn) {
            b.add("copositive.dnn_at_most_half", "1/2 >= dnn value", Relation::geq, 0.5, *dnn);
            if (a0) b.add("copositive.dnn_at_least_alpha0", "dnn value >= alpha0", Relation::geq, *dnn, a0->value);
        } else {
            b.skip("copositive.dnn_at_most_half", "1/2 >= dnn value", err_dnn);
        }
    } else {
        b.skip("copositive.bracket", "1/omega <= 1/2", err_om);
    }

    // Aggregated bounds for the caller.
    if (tbar && mc && gw && v.omega && dnn) {
        BoundsReport br;
        br.lower_degree = deg.lower;
        br.upper_degree = deg.upper;
        br.upper_degree_vacuous = deg.upper_vacuous;
        br.lower_theta = 1.0 / tbar->value;
        const auto cb = cut_bounds(g, mc->value, gw->value);
        br.lower_maxcut = cb.lower_maxcut;
        br.lower_gw = cb.lower_gw;
        br.maxcut_upper = cb.maxcut_upper;
        br.copositive_lower = 1.0 / *v.omega;
        br.copositive_upper = 0.5;
        br.dnn_value = *dnn;
        v.bounds = br;
    }
    return rep;
}

} // namespace alphatheta

#endif // ALPHATHETA_VERIFY_HPP
