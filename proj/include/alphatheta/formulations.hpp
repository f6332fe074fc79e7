#ifndef ALPHATHETA_FORMULATIONS_HPP
#define ALPHATHETA_FORMULATIONS_HPP

// Builders translating each graph program into the solver's standard form.
// Every builder returns a Formulation: the SdpProblem, the tag naming the
// program, and a constant objective offset (value = primal_obj + offset).

#include <ostream>
#include <string>

#include "alphatheta/errors.hpp"
#include "alphatheta/graph.hpp"
#include "alphatheta/linalg.hpp"
#include "alphatheta/sdp.hpp"

namespace alphatheta {

enum class ProgramKind {
    alpha0_dual,      ///< max <X,-A> : X psd, <X,L> <= 1
    theta_max,        ///< max <X,J> : X o A = 0, tr X = 1, X psd
    theta_min,        ///< min l : lI + Z - J psd, Z o (I + Abar) = 0
    inv_theta,        ///< min tr X : X o Abar = 0, <X,J> = 1, X psd
    gw,               ///< max <L/4, X> : diag X = 1, X psd
    alpha_tilde_feas, ///< max t : aY + (1-a)Z - tI psd, Y diagonal, Z on E, <J,Y> = 1, <J,Y-Z> = 0
    dnn_copositive,   ///< max <X,-A> : X = P + N, P psd, N >= 0, <X,L> <= 1
    eigen_dual,       ///< min <X, A_a> : X psd, tr X = 1
    copositive,       ///< max <X,-A> : X copositive, <X,L> <= 1
};

inline std::string to_string(ProgramKind k) {
    switch (k) {
    case ProgramKind::alpha0_dual: return "alpha0_dual";
    case ProgramKind::theta_max: return "theta_max";
    case ProgramKind::theta_min: return "theta_min";
    case ProgramKind::inv_theta: return "inv_theta";
    case ProgramKind::gw: return "gw";
    case ProgramKind::alpha_tilde_feas: return "alpha_tilde_feas";
    case ProgramKind::dnn_copositive: return "dnn_copositive";
    case ProgramKind::eigen_dual: return "eigen_dual";
    case ProgramKind::copositive: return "copositive";
    }
    return "?";
}

inline std::string citation(ProgramKind k) {
    switch (k) {
    case ProgramKind::alpha0_dual: return "sup { <X,-A> : X psd, <X,L> <= 1 }";
    case ProgramKind::theta_max: return "theta(G) = max { <X,J> : X o A = 0, <X,I> = 1, X psd }";
    case ProgramKind::theta_min: return "theta(G) = min { l : lI + Z - J psd, Z o (I + Abar) = 0 }";
    case ProgramKind::inv_theta: return "1/theta(Gbar) = min { <X,I> : X o Abar = 0, <X,J> = 1, X psd }";
    case ProgramKind::gw: return "M* = max { <L/4, X> : X_ii = 1, X psd }";
    case ProgramKind::alpha_tilde_feas:
        return "max t : aY + (1-a)Z - tI psd, Y o I = Y, Z o A = Z, <J,Y> = 1, <J,Y-Z> = 0";
    case ProgramKind::dnn_copositive:
        return "max { <P+N,-A> : P psd, N >= 0, <P+N,L> <= 1 } (doubly nonnegative inner approximation)";
    case ProgramKind::eigen_dual: return "lambda_min(A_a) = min { <X, A_a> : X psd, <X,I> = 1 }";
    case ProgramKind::copositive: return "max { <X,-A> : X copositive, <X,L> <= 1 }";
    }
    return "?";
}

struct FormulationTag {
    ProgramKind kind = ProgramKind::alpha0_dual;
    double alpha = 0.0; ///< only meaningful for alpha_tilde_feas and eigen_dual
    std::string paper_eq;

    static FormulationTag of(ProgramKind k, double alpha = 0.0) { return {k, alpha, citation(k)}; }
};

struct Formulation {
    FormulationTag tag;
    SdpProblem problem;
    double offset = 0.0;

    double value(const SdpSolution& s) const { return s.primal_obj + offset; }
};

inline void write_formulation(std::ostream& os, const Formulation& f) {
    write_sdpa(os, f.problem, to_string(f.tag.kind) + ": " + f.tag.paper_eq);
}

namespace detail {

inline void require_edges(const Graph& g) {
    if (g.size() == 0) throw EdgelessGraphError();
}

/// E_uv + E_vu.
inline void set_pair(Eigen::MatrixXd& m, int u, int v, double value) {
    m(u, v) = value;
    m(v, u) = value;
}

} // namespace detail

/// Blocks: [X (n x n), s (1x1 slack)]. maximize <X,-A> s.t. <X,L> + s = 1.
inline Formulation build_alpha0_dual(const Graph& g) {
    detail::require_edges(g);
    const auto mats = matrices(g);
    const Index n = g.order();
    SdpProblem p({n, 1}, Sense::maximize);
    p.c[0] = -mats.adjacency.cast<double>();
    auto& con = p.add_constraint(1.0);
    con.a[0] = mats.laplacian.cast<double>();
    con.a[1](0, 0) = 1.0;
    return {FormulationTag::of(ProgramKind::alpha0_dual), std::move(p), 0.0};
}

enum class ThetaForm { max, min };

/// max form, one block X: maximize <J,X>, X_uv = 0 on edges, tr X = 1.
/// min form, blocks [W = lI + Z - J (n x n), l (1x1)]: minimize l subject to
/// W_ii - l = -1 and W_uv = -1 on non-edges; W_uv is free on edges, where
/// Z_uv = W_uv + 1.
inline Formulation build_theta(const Graph& g, ThetaForm form) {
    const Index n = g.order();
    if (form == ThetaForm::max) {
        SdpProblem p({n}, Sense::maximize);
        p.c[0] = Eigen::MatrixXd::Ones(n, n);
        p.add_constraint(1.0).a[0] = Eigen::MatrixXd::Identity(n, n);
        for (const auto& [u, v] : g.edges()) {
            detail::set_pair(p.add_constraint(0.0).a[0], u, v, 1.0);
        }
        return {FormulationTag::of(ProgramKind::theta_max), std::move(p), 0.0};
    }
    SdpProblem p({n, 1}, Sense::minimize);
    p.c[1](0, 0) = 1.0;
    for (int i = 0; i < n; ++i) {
        auto& con = p.add_constraint(-1.0);
        con.a[0](i, i) = 1.0;
        con.a[1](0, 0) = -1.0;
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) detail::set_pair(p.add_constraint(-2.0).a[0], u, v, 1.0);
        }
    }
    return {FormulationTag::of(ProgramKind::theta_min), std::move(p), 0.0};
}

/// Optimal (lambda, Z) of the min form, read back from a solution.
struct ThetaMinPoint {
    double lambda = 0.0;
    SymMatrix z;
};

inline ThetaMinPoint theta_min_point(const Graph& g, const SdpSolution& s) {
    const Index n = g.order();
    ThetaMinPoint out{s.x.at(1)(0, 0), SymMatrix(n)};
    for (const auto& [u, v] : g.edges()) {
        out.z.set(u, v, 0.5 * (s.x[0](u, v) + s.x[0](v, u)) + 1.0);
    }
    return out;
}

/// minimize tr X s.t. X_uv = 0 on non-edges, <J,X> = 1.
inline Formulation build_inv_theta(const Graph& g) {
    const Index n = g.order();
    SdpProblem p({n}, Sense::minimize);
    p.c[0] = Eigen::MatrixXd::Identity(n, n);
    p.add_constraint(1.0).a[0] = Eigen::MatrixXd::Ones(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) detail::set_pair(p.add_constraint(0.0).a[0], u, v, 1.0);
        }
    }
    return {FormulationTag::of(ProgramKind::inv_theta), std::move(p), 0.0};
}

/// maximize <L/4, X> s.t. X_ii = 1.
inline Formulation build_gw(const Graph& g) {
    const Index n = g.order();
    SdpProblem p({n}, Sense::maximize);
    p.c[0] = 0.25 * matrices(g).laplacian.cast<double>();
    for (int i = 0; i < n; ++i) {
        p.add_constraint(1.0).a[0](i, i) = 1.0;
    }
    return {FormulationTag::of(ProgramKind::gw), std::move(p), 0.0};
}

/// Fixed-alpha auxiliary program of the weighted threshold. With
/// W = aY + (1-a)Z - tI the constraints become: W psd, W_uv = 0 on non-edges,
/// tr W + n t = a and <J - I, W> = 1 - a. Eliminating t leaves one block:
///     maximize -tr(W)/n  (+ a/n offset)  s.t.  W_uv = 0 off E,  <J - I, W> = 1 - a.
/// The program's constraints are feasible at alpha iff the optimum t* >= 0.
inline Formulation build_alpha_tilde_feas(const Graph& g, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw PreconditionError("alpha_tilde feasibility needs 0 < alpha < 1");
    }
    detail::require_edges(g);
    const Index n = g.order();
    SdpProblem p({n}, Sense::maximize);
    p.c[0] = -Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n);
    p.add_constraint(1.0 - alpha).a[0] =
        Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) detail::set_pair(p.add_constraint(0.0).a[0], u, v, 1.0);
        }
    }
    return {FormulationTag::of(ProgramKind::alpha_tilde_feas, alpha), std::move(p),
            alpha / static_cast<double>(n)};
}

/// (Y, Z, t) recovered from the single W block: y_i = (W_ii + t)/a,
/// Z_uv = W_uv/(1-a) on edges.
struct AlphaTildePoint {
    double alpha = 0.0;
    double t = 0.0;
    SymMatrix y;
    SymMatrix z;
    SymMatrix w;
};

inline AlphaTildePoint alpha_tilde_point(const Graph& g, double alpha, const SdpSolution& s) {
    const Index n = g.order();
    AlphaTildePoint out{alpha, 0.0, SymMatrix(n), SymMatrix(n), SymMatrix(s.x.at(0))};
    out.t = (alpha - out.w.trace()) / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        out.y.set(i, i, (out.w(i, i) + out.t) / alpha);
    }
    for (const auto& [u, v] : g.edges()) {
        out.z.set(u, v, out.w(u, v) / (1.0 - alpha));
    }
    return out;
}

/// Blocks: [P (n x n), s (1x1), one 1x1 block per edge for N_uv = N_vu >= 0].
/// maximize <P + N, -A> s.t. <P + N, L> + s = 1. Entries of N off the edge set
/// appear in neither the objective nor the constraint and are omitted.
inline Formulation build_dnn_copositive(const Graph& g) {
    detail::require_edges(g);
    const auto mats = matrices(g);
    const Index n = g.order();
    std::vector<Index> dims{n, 1};
    dims.insert(dims.end(), g.size(), 1);
    SdpProblem p(std::move(dims), Sense::maximize);
    p.c[0] = -mats.adjacency.cast<double>();
    auto& con = p.add_constraint(1.0);
    con.a[0] = mats.laplacian.cast<double>();
    con.a[1](0, 0) = 1.0;
    for (std::size_t e = 0; e < g.size(); ++e) {
        p.c[2 + e](0, 0) = -2.0; // <N, -A> picks up both (u,v) and (v,u)
        con.a[2 + e](0, 0) = -2.0;
    }
    return {FormulationTag::of(ProgramKind::dnn_copositive), std::move(p), 0.0};
}

/// P + N from a DNN solution.
inline SymMatrix dnn_matrix(const Graph& g, const SdpSolution& s) {
    SymMatrix x(s.x.at(0));
    for (std::size_t e = 0; e < g.size(); ++e) {
        const auto [u, v] = g.edges()[e];
        x.set(u, v, x(u, v) + s.x.at(2 + e)(0, 0));
    }
    return x;
}

} // namespace alphatheta

#endif // ALPHATHETA_FORMULATIONS_HPP
