#ifndef ALPHATHETA_PARAMETERS_HPP
#define ALPHATHETA_PARAMETERS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alphatheta/errors.hpp"
#include "alphatheta/formulations.hpp"
#include "alphatheta/graph.hpp"
#include "alphatheta/linalg.hpp"
#include "alphatheta/sdp.hpp"

namespace alphatheta {

inline constexpr int kMaxCutMaxOrder = 26;
inline constexpr int kCliqueMaxOrder = 40;
inline constexpr int kBisectionMaxIterations = 60;

/// Solves f and throws SolverError unless the solver reports optimal.
inline SdpSolution solve_checked(const Formulation& f, const SolverOptions& opts) {
    auto s = solve(f.problem, opts);
    if (!s.optimal()) {
        throw SolverError(to_string(f.tag.kind) + ": solver status " + to_string(s.status) + " (" +
                          s.message + ")");
    }
    return s;
}

namespace detail {

inline void require_edges_param(const Graph& g) {
    if (g.size() == 0) throw EdgelessGraphError();
}

inline double lambda_min_adjacency(const Graph& g) {
    return sym_eig(adjacency_matrix(g)).lambda_min();
}

/// lambda_min(A_alpha) >= -1e-12 * max(1, ||A_alpha||_F).
inline bool a_alpha_psd(const Graph& g, double alpha, double* lmin = nullptr) {
    const auto chk = psd_check(a_alpha(g, alpha), 1e-12);
    if (lmin != nullptr) *lmin = chk.lambda_min;
    return chk.is_psd;
}

} // namespace detail

// ---------------------------------------------------------------------------
// alpha0
// ---------------------------------------------------------------------------

enum class Alpha0Method { bisection, closed_form_regular, sdp_dual };

inline std::string to_string(Alpha0Method m) {
    switch (m) {
    case Alpha0Method::bisection: return "bisection";
    case Alpha0Method::closed_form_regular: return "closed_form_regular";
    case Alpha0Method::sdp_dual: return "sdp_dual";
    }
    return "?";
}

struct Alpha0Result {
    double value = 0.0;
    double lambda_min_at_value = 0.0;
    Alpha0Method method = Alpha0Method::bisection;
    int iterations = 0;
};

/// Smallest alpha in [0, 1/2] with A_alpha psd, by bisection. The feasible
/// set {alpha : A_alpha psd} is an interval containing [alpha0, 1] since
/// A_alpha is affine in alpha; alpha0 <= 1/2 fixes the bracket.
inline Alpha0Result alpha0(const Graph& g, double tol = 1e-9) {
    detail::require_edges_param(g);
    if (!(tol > 0.0)) throw InputError("alpha0: tolerance must be positive");
    double lo = 0.0;
    double hi = 0.5;
    int it = 0;
    while (hi - lo > tol && it < kBisectionMaxIterations) {
        const double mid = 0.5 * (lo + hi);
        (detail::a_alpha_psd(g, mid) ? hi : lo) = mid;
        ++it;
    }
    // Newton polish on lambda_min(A_alpha), confined to the final bracket, so
    // the value is good to ~1e-15 instead of tol. d/dalpha = v'(D - A)v.
    const SymMatrix dma = degree_matrix(g) - adjacency_matrix(g);
    double x = hi;
    for (int k = 0; k < 8; ++k) {
        const auto spec = sym_eig(a_alpha(g, x));
        const double slope = dma.qform(spec.min_eigenvector());
        if (!(slope > 0.0)) break;
        const double next = x - spec.lambda_min() / slope;
        if (next < lo || next > hi || next == x) break;
        x = next;
    }
    Alpha0Result r;
    r.value = x;
    r.iterations = it;
    r.lambda_min_at_value = sym_eig(a_alpha(g, x)).lambda_min();
    return r;
}

/// (-lambda_min(A)) / (d - lambda_min(A)) for a d-regular graph.
inline double alpha0_closed_regular(const Graph& g) {
    detail::require_edges_param(g);
    if (!g.is_regular()) throw PreconditionError("alpha0_closed_regular: graph is not regular");
    const double lmin = detail::lambda_min_adjacency(g);
    return -lmin / (g.max_degree() - lmin);
}

struct DegreeBounds {
    double lower = 0.0;
    double upper = 0.0;
    /// upper > 1/2 says nothing beyond alpha0 <= 1/2.
    bool upper_vacuous = false;
};

inline DegreeBounds alpha0_degree_bounds(const Graph& g) {
    detail::require_edges_param(g);
    const double lmin = detail::lambda_min_adjacency(g);
    DegreeBounds b;
    b.lower = -lmin / (g.max_degree() - lmin);
    b.upper = -lmin / (g.min_degree() - lmin);
    b.upper_vacuous = b.upper > 0.5;
    return b;
}

/// Optimum of the SDP dual of the alpha0 program.
inline double alpha0_via_dual(const Graph& g, const SolverOptions& opts = {}) {
    const auto f = build_alpha0_dual(g);
    return f.value(solve_checked(f, opts));
}

// ---------------------------------------------------------------------------
// Lovasz theta
// ---------------------------------------------------------------------------

struct ThetaResult {
    double value = 0.0;     ///< max form optimum
    double min_value = 0.0; ///< min form optimum
    ThetaMinPoint min_point;
    KktResiduals max_residuals;
    KktResiduals min_residuals;
};

inline constexpr double kThetaAgreementTol = 1e-5;

/// Both forms are solved; disagreement beyond 1e-5 raises SolverError.
inline ThetaResult lovasz_theta_detailed(const Graph& g, const SolverOptions& opts = {}) {
    const auto fmax = build_theta(g, ThetaForm::max);
    const auto fmin = build_theta(g, ThetaForm::min);
    const auto smax = solve_checked(fmax, opts);
    const auto smin = solve_checked(fmin, opts);
    ThetaResult r;
    r.value = fmax.value(smax);
    r.min_value = fmin.value(smin);
    r.min_point = theta_min_point(g, smin);
    r.max_residuals = smax.residuals;
    r.min_residuals = smin.residuals;
    if (std::abs(r.value - r.min_value) > kThetaAgreementTol) {
        throw SolverError("theta: max form " + std::to_string(r.value) + " and min form " +
                          std::to_string(r.min_value) + " disagree");
    }
    return r;
}

inline double lovasz_theta(const Graph& g, const SolverOptions& opts = {}) {
    return lovasz_theta_detailed(g, opts).value;
}

/// (2m/n) (theta_bar alpha - 1) / (theta_bar - 1), an upper bound on
/// lambda_min(A_alpha), where theta_bar = theta(complement of g).
inline double lambda_min_alpha_bound(const Graph& g, double alpha, double theta_bar) {
    detail::require_edges_param(g);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("lambda_min_alpha_bound: alpha outside [0, 1]");
    const double m = static_cast<double>(g.size());
    const double n = g.order();
    return (2.0 * m / n) * (theta_bar * alpha - 1.0) / (theta_bar - 1.0);
}

inline double lambda_min_alpha_bound(const Graph& g, double alpha, const SolverOptions& opts = {}) {
    detail::require_edges_param(g);
    return lambda_min_alpha_bound(g, alpha, lovasz_theta(complement(g), opts));
}

// ---------------------------------------------------------------------------
// Weighted threshold alpha-tilde
// ---------------------------------------------------------------------------

struct AlphaTildeProbe {
    double alpha = 0.0;
    double t = 0.0; ///< optimum t* of the auxiliary program
    bool feasible = false;
};

inline AlphaTildeProbe alpha_tilde_probe(const Graph& g, double alpha, const SolverOptions& opts = {}) {
    const auto f = build_alpha_tilde_feas(g, alpha);
    const double t = f.value(solve_checked(f, opts));
    return {alpha, t, t >= 0.0};
}

struct AlphaTildeResult {
    double value = 0.0;
    int iterations = 0;
};

/// Bisection over alpha in [0, 1/2] on feasibility of the auxiliary program.
inline AlphaTildeResult alpha_tilde_detailed(const Graph& g, double tol = 1e-6, const SolverOptions& opts = {}) {
    detail::require_edges_param(g);
    if (!(tol > 0.0)) throw InputError("alpha_tilde: tolerance must be positive");
    double lo = 0.0;
    double hi = 0.5;
    int it = 0;
    while (hi - lo > tol && it < kBisectionMaxIterations) {
        const double mid = 0.5 * (lo + hi);
        (alpha_tilde_probe(g, mid, opts).feasible ? hi : lo) = mid;
        ++it;
    }
    return {hi, it};
}

inline double alpha_tilde(const Graph& g, double tol = 1e-6, const SolverOptions& opts = {}) {
    return alpha_tilde_detailed(g, tol, opts).value;
}

/// Optimum of the renormalized theta program, equal to 1/theta(complement).
inline double inv_theta_value(const Graph& g, const SolverOptions& opts = {}) {
    const auto f = build_inv_theta(g);
    return f.value(solve_checked(f, opts));
}

// ---------------------------------------------------------------------------
// Cuts
// ---------------------------------------------------------------------------

struct MaxCut {
    long long value = 0;
    std::vector<int> side; ///< sorted vertex subset S containing vertex 0
};

namespace detail {

inline std::vector<std::uint64_t> adjacency_bits(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

/// Lexicographic order of the sorted member lists of two vertex sets.
inline bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a);
        const int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

} // namespace detail

/// Exhaustive search over the 2^(n-1) bipartitions with vertex 0 in S, in
/// Gray-code order. Ties go to the lexicographically smallest S.
inline MaxCut maxcut_exact(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCutMaxOrder) {
        throw PreconditionError("maxcut_exact: n = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxCutMaxOrder));
    }
    if (n == 0) return {};
    const auto adj = detail::adjacency_bits(g);
    // S always holds vertex 0; bit k of the Gray code toggles vertex k + 1.
    std::uint64_t s = 1;
    long long cut = static_cast<long long>(std::popcount(adj[0]));
    std::uint64_t best_s = s;
    long long best = cut;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < count; ++i) {
        const int v = std::countr_zero(i) + 1;
        const std::uint64_t bit = std::uint64_t{1} << v;
        const auto nb = adj[static_cast<std::size_t>(v)];
        const long long same = std::popcount(nb & ((s & bit) ? s : ~s));
        const long long deg = std::popcount(nb);
        // Moving v across flips its edges: previously-cut edges become uncut.
        cut += 2 * same - deg;
        s ^= bit;
        if (cut > best || (cut == best && detail::subset_lex_less(s, best_s))) {
            best = cut;
            best_s = s;
        }
    }
    MaxCut r;
    r.value = best;
    for (int v = 0; v < n; ++v) {
        if (best_s & (std::uint64_t{1} << v)) r.side.push_back(v);
    }
    return r;
}

struct GwResult {
    double value = 0.0;
    SymMatrix x;
    KktResiduals residuals;
};

inline GwResult gw_detailed(const Graph& g, const SolverOptions& opts = {}) {
    const auto f = build_gw(g);
    const auto s = solve_checked(f, opts);
    return {f.value(s), SymMatrix(s.x[0]), s.residuals};
}

inline double gw_value(const Graph& g, const SolverOptions& opts = {}) { return gw_detailed(g, opts).value; }

struct CutBounds {
    double lower_maxcut = 0.0;                ///< 1 - |E|/(2M)
    double lower_gw = 0.0;                    ///< 1 - |E|/(2M*)
    std::optional<double> maxcut_upper;       ///< (|E|/2)(delta - lambda_min)/delta; absent when delta = 0
};

inline CutBounds cut_bounds(const Graph& g, long long maxcut, double gw) {
    detail::require_edges_param(g);
    const double m = static_cast<double>(g.size());
    CutBounds b;
    b.lower_maxcut = 1.0 - m / (2.0 * static_cast<double>(maxcut));
    b.lower_gw = 1.0 - m / (2.0 * gw);
    const int delta = g.min_degree();
    if (delta > 0) {
        const double lmin = detail::lambda_min_adjacency(g);
        b.maxcut_upper = (m / 2.0) * (delta - lmin) / delta;
    }
    return b;
}

inline CutBounds cut_bounds(const Graph& g, const SolverOptions& opts = {}) {
    detail::require_edges_param(g);
    return cut_bounds(g, maxcut_exact(g).value, gw_value(g, opts));
}

// ---------------------------------------------------------------------------
// Cliques and copositive bounds
// ---------------------------------------------------------------------------

namespace detail {

inline void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r_size, std::uint64_t p,
                          std::uint64_t x, int& best) {
    if (p == 0 && x == 0) {
        best = std::max(best, static_cast<int>(r_size));
        return;
    }
    if (static_cast<int>(r_size) + std::popcount(p) <= best) return;
    // Pivot maximizing |P n N(u)|, lowest index on ties.
    int pivot = -1;
    int pivot_deg = -1;
    for (std::uint64_t px = p | x; px != 0; px &= px - 1) {
        const int u = std::countr_zero(px);
        const int d = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (d > pivot_deg) {
            pivot = u;
            pivot_deg = d;
        }
    }
    for (std::uint64_t cand = p & ~adj[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const auto nv = adj[static_cast<std::size_t>(v)];
        bron_kerbosch(adj, r_size + 1, p & nv, x & nv, best);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace detail

/// Maximum clique size by Bron-Kerbosch with pivoting.
inline int clique_number(const Graph& g) {
    const int n = g.order();
    if (n > kCliqueMaxOrder) {
        throw PreconditionError("clique_number: n = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kCliqueMaxOrder));
    }
    if (n == 0) return 0;
    const auto adj = detail::adjacency_bits(g);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = 0;
    detail::bron_kerbosch(adj, 0, all, 0, best);
    return best;
}

/// Vertex set of one maximum clique (lowest-index greedy completion of a
/// brute-force search), used for the Motzkin-Straus witness.
inline std::vector<int> maximum_clique(const Graph& g) {
    const int omega = clique_number(g);
    const int n = g.order();
    std::vector<int> current;
    std::vector<int> found;
    auto extend = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(current.size()) == omega) {
            found = current;
            return true;
        }
        for (int v = start; v < n; ++v) {
            if (std::all_of(current.begin(), current.end(), [&](int u) { return g.adjacent(u, v); })) {
                current.push_back(v);
                if (self(self, v + 1)) return true;
                current.pop_back();
            }
        }
        return false;
    };
    extend(extend, 0);
    return found;
}

/// Random point of the standard simplex: a uniformly random support of random
/// size, exponential spacings (Dirichlet(1)) on it.
inline Eigen::VectorXd sample_simplex(std::mt19937_64& rng, Index n) {
    std::uniform_int_distribution<Index> size_dist(1, n);
    const Index k = size_dist(rng);
    std::vector<Index> idx(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::exponential_distribution<double> expo(1.0);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
    double total = 0.0;
    for (Index i = 0; i < k; ++i) {
        const double e = expo(rng);
        h(idx[static_cast<std::size_t>(i)]) = e;
        total += e;
    }
    return h / total;
}

inline constexpr int kDefaultSimplexSamples = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0;

struct MotzkinStrausValue {
    double certified = 0.0;     ///< 1/omega
    Eigen::VectorXd witness;    ///< clique indicator / omega
    double witness_value = 0.0; ///< x'(Abar + I)x at the witness
    double empirical_min = 0.0; ///< min over sampled simplex points
    int samples = 0;
};

inline MotzkinStrausValue motzkin_straus_value(const Graph& g, int samples = kDefaultSimplexSamples,
                                               std::uint64_t seed = kDefaultSeed) {
    detail::require_edges_param(g);
    const Index n = g.order();
    const auto clique = maximum_clique(g);
    const int omega = static_cast<int>(clique.size());
    const SymMatrix form = to_real(matrices(g).complement_adjacency) + SymMatrix::identity(n);

    MotzkinStrausValue r;
    r.certified = 1.0 / omega;
    r.witness = Eigen::VectorXd::Zero(n);
    for (const int v : clique) r.witness(v) = 1.0 / omega;
    r.witness_value = form.qform(r.witness);
    std::mt19937_64 rng(seed);
    r.empirical_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        r.empirical_min = std::min(r.empirical_min, form.qform(sample_simplex(rng, n)));
    }
    r.samples = samples;
    return r;
}

struct CopositiveBounds {
    double lower = 0.0; ///< 1/omega
    double upper = 0.5;
    double dnn = 0.0;   ///< doubly nonnegative inner approximation: a lower bound on the copositive value
};

inline CopositiveBounds copositive_bounds(const Graph& g, const SolverOptions& opts = {}) {
    detail::require_edges_param(g);
    CopositiveBounds b;
    b.lower = 1.0 / clique_number(g);
    const auto f = build_dnn_copositive(g);
    b.dnn = f.value(solve_checked(f, opts));
    return b;
}

// ---------------------------------------------------------------------------
// Aggregate
// ---------------------------------------------------------------------------

struct BoundsReport {
    double lower_degree = 0.0;
    double upper_degree = 0.0;
    bool upper_degree_vacuous = false;
    double lower_theta = 0.0; ///< 1/theta(complement)
    double lower_maxcut = 0.0;
    double lower_gw = 0.0;
    std::optional<double> maxcut_upper;
    double copositive_lower = 0.0;
    double copositive_upper = 0.5;
    double dnn_value = 0.0;
};

inline BoundsReport bounds_report(const Graph& g, const SolverOptions& opts = {}) {
    detail::require_edges_param(g);
    BoundsReport r;
    const auto deg = alpha0_degree_bounds(g);
    r.lower_degree = deg.lower;
    r.upper_degree = deg.upper;
    r.upper_degree_vacuous = deg.upper_vacuous;
    r.lower_theta = 1.0 / lovasz_theta(complement(g), opts);
    const auto cuts = cut_bounds(g, opts);
    r.lower_maxcut = cuts.lower_maxcut;
    r.lower_gw = cuts.lower_gw;
    r.maxcut_upper = cuts.maxcut_upper;
    const auto cop = copositive_bounds(g, opts);
    r.copositive_lower = cop.lower;
    r.copositive_upper = cop.upper;
    r.dnn_value = cop.dnn;
    return r;
}

} // namespace alphatheta

#endif // ALPHATHETA_PARAMETERS_HPP
