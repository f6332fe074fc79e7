// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "alphatheta/cli.hpp"
#include "alphatheta/verify.hpp"
#include "corpus.hpp"

using namespace alphatheta;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome regular_closed_form() {
    Outcome o;
    double worst = 0.0;
    for (const auto& e : corpus::all()) {
        if (!e.regular) continue;
        const double bis = alpha0(e.graph).value;
        const double err = std::abs(bis - alpha0_closed_regular(e.graph));
        worst = std::max(worst, err);
        o.require(err <= 1e-7, e.name + " off by " + fmt(err));
        o.require(std::abs(bis - e.alpha0) <= 1e-7, e.name + " differs from reference");
    }
    if (o.pass) o.detail = "max |bisection - closed form| = " + fmt(worst);
    return o;
}

Outcome strong_duality() {
    Outcome o;
    double worst = 0.0;
    for (const auto& e : corpus::all()) {
        const double err = std::abs(alpha0_via_dual(e.graph) - alpha0(e.graph).value);
        worst = std::max(worst, err);
        o.require(err <= 1e-5, e.name + " off by " + fmt(err));
    }
    if (o.pass) o.detail = "max |SDP - bisection| = " + fmt(worst);
    return o;
}

Outcome eigenvalue_bound() {
    Outcome o;
    double worst = -1e300;
    for (const auto& e : corpus::all()) {
        const double tb = lovasz_theta(complement(e.graph));
        for (int k = 0; k <= 20; ++k) {
            const double a = 0.05 * k;
            const double gap = sym_eig(a_alpha(e.graph, a)).lambda_min() - lambda_min_alpha_bound(e.graph, a, tb);
            worst = std::max(worst, gap);
            o.require(gap <= 1e-6, e.name + " violated at alpha " + fmt(a));
        }
    }
    const Graph c5 = named_graph(Family::cycle, {5});
    const double tb = lovasz_theta(complement(c5));
    const double a0 = alpha0(c5).value;
    for (double a : {0.0, a0}) {
        const double slack = lambda_min_alpha_bound(c5, a, tb) - sym_eig(a_alpha(c5, a)).lambda_min();
        o.require(std::abs(slack) <= 1e-5, "C5 not tight at alpha " + fmt(a));
    }
    if (o.pass) o.detail = "max(lambda_min - bound) = " + fmt(worst) + ", C5 tight at 0 and alpha0";
    return o;
}

Outcome theta_lower_bound() {
    Outcome o;
    for (const auto& e : corpus::all()) {
        const double inv = 1.0 / lovasz_theta(complement(e.graph));
        const double a0 = alpha0(e.graph).value;
        o.require(a0 >= inv - 1e-6, e.name + " below 1/theta");
        const bool equality_instance = e.name.front() == 'K' && e.name != "K23";
        if (equality_instance || e.name == "C5" || e.name == "Petersen") {
            o.require(std::abs(a0 - inv) <= 1e-5, e.name + " not tight");
        }
    }
    if (o.pass) o.detail = "alpha0 >= 1/theta(Gbar) everywhere; tight on K_n, C5, Petersen";
    return o;
}

Outcome alpha_tilde_equals_inverse_theta() {
    Outcome o;
    double worst = 0.0;
    for (const auto& e : corpus::all()) {
        const double at = alpha_tilde(e.graph);
        const double inv = 1.0 / lovasz_theta(complement(e.graph));
        const double ren = inv_theta_value(e.graph);
        worst = std::max({worst, std::abs(at - inv), std::abs(at - ren)});
        o.require(std::abs(at - inv) <= 1e-4, e.name + " alpha_tilde vs 1/theta " + fmt(at - inv));
        o.require(std::abs(at - ren) <= 1e-4, e.name + " alpha_tilde vs renormalized " + fmt(at - ren));
    }
    if (o.pass) o.detail = "max deviation " + fmt(worst);
    return o;
}

Outcome bipartite_characterization() {
    Outcome o;
    for (const auto& e : corpus::all()) {
        const bool half = std::abs(alpha0(e.graph).value - 0.5) <= 1e-7;
        const bool expect = e.name == "K2" || e.name == "C4" || e.name == "P3" || e.name == "K23";
        o.require(half == expect, e.name + (expect ? " should" : " should not") + " have alpha0 = 1/2");
        o.require(is_bipartite(e.graph) == expect, e.name + " 2-colouring disagrees");
    }
    if (o.pass) o.detail = "alpha0 = 1/2 exactly on {K2, C4, P3, K2,3}";
    return o;
}

Outcome cut_bounds_chain() {
    Outcome o;
    for (const auto& e : corpus::all()) {
        const auto mc = maxcut_exact(e.graph);
        const double gw = gw_value(e.graph);
        const auto b = cut_bounds(e.graph, mc.value, gw);
        const double a0 = alpha0(e.graph).value;
        o.require(b.lower_maxcut <= b.lower_gw + 1e-6, e.name + " maxcut bound above GW bound");
        o.require(b.lower_gw <= a0 + 1e-6, e.name + " GW bound above alpha0");
        o.require(b.maxcut_upper && static_cast<double>(mc.value) <= *b.maxcut_upper + 1e-9,
                  e.name + " spectral max-cut bound violated");
    }
    const auto c5 = cut_bounds(named_graph(Family::cycle, {5}));
    o.require(std::abs(c5.lower_gw - alpha0(named_graph(Family::cycle, {5})).value) <= 1e-5, "C5 GW bound not tight");
    o.require(std::abs(c5.lower_gw - 0.447214) <= 1e-6, "C5 GW bound value");
    const auto c4 = cut_bounds(named_graph(Family::cycle, {4}));
    o.require(std::abs(c4.lower_gw - 0.5) <= 1e-5, "C4 GW bound not 1/2");
    if (o.pass) o.detail = "C5 GW bound = " + fmt(c5.lower_gw) + ", C4 = " + fmt(c4.lower_gw);
    return o;
}

Outcome copositive_certificate() {
    Outcome o;
    for (const auto& e : corpus::all()) {
        const int omega = clique_number(e.graph);
        const auto c = cert_motzkin(e.graph, omega); // throws unless <L, omega Y> = 2 m omega in integers
        const auto chk = c.check();
        o.require(chk.feasibility_residual <= kCertificateTol, e.name + " certificate infeasible");
        o.require(c.claimed_objective == 1.0 / omega && chk.objective_error <= kCertificateTol,
                  e.name + " objective is not 1/omega");
        const SymMatrix y = c.matrix * (1.0 / omega);
        o.require(copositivity_sample_check(y, 20000, kDefaultSeed).min_qform >= -1e-9,
                  e.name + " sampled copositivity fails");
        o.require(1.0 / omega <= 0.5, e.name + " bracket inverted");
    }
    const Graph c5 = named_graph(Family::cycle, {5});
    const auto cb = copositive_bounds(c5);
    const double lo = std::max(cb.lower, cb.dnn);
    o.require(lo == 0.5 && cb.upper == 0.5, "C5 bracket does not collapse to 1/2");
    const double a0 = alpha0(c5).value;
    o.require(a0 < 0.5 - 1e-7 && a0 < 1.0 / clique_number(c5), "C5 alpha0 not below 1/omega");
    if (o.pass) o.detail = "C5: bracket [" + fmt(lo) + ", " + fmt(cb.upper) + "], alpha0 = " + fmt(a0);
    return o;
}

Outcome solver_sanity() {
    Outcome o;
    auto check_kkt = [&](const Formulation& f, const SdpSolution& s, const std::string& what) {
        o.require(s.optimal(), what + " not optimal: " + s.message);
        o.require(s.residuals.primal_infeas <= 1e-8 && s.residuals.dual_infeas <= 1e-8, what + " infeasible");
        o.require(std::abs(s.residuals.gap) <= 1e-7 * std::max(1.0, std::abs(s.primal_obj)), what + " gap");
        (void)f;
    };
    for (int n : {2, 3, 5, 8}) {
        const auto fe = build_theta(named_graph(Family::empty, {n}), ThetaForm::max);
        const auto se = solve(fe.problem);
        check_kkt(fe, se, "theta(empty" + std::to_string(n) + ")");
        o.require(std::abs(fe.value(se) - n) <= 1e-5, "theta(empty) != n");
        const auto fk = build_theta(named_graph(Family::complete, {n}), ThetaForm::max);
        const auto sk = solve(fk.problem);
        check_kkt(fk, sk, "theta(K" + std::to_string(n) + ")");
        o.require(std::abs(fk.value(sk) - 1.0) <= 1e-5, "theta(K_n) != 1");
    }
    o.require(std::abs(lovasz_theta(named_graph(Family::cycle, {5})) - corpus::kSqrt5) <= 1e-5, "theta(C5) != sqrt5");
    for (const auto& e : corpus::all()) {
        for (const Graph& g : {e.graph, complement(e.graph)}) {
            for (auto form : {ThetaForm::max, ThetaForm::min}) {
                const auto f = build_theta(g, form);
                check_kkt(f, solve(f.problem), e.name + " theta form");
            }
            const auto r = lovasz_theta_detailed(g);
            o.require(std::abs(r.value - r.min_value) <= 1e-5, e.name + " theta forms disagree");
        }
    }
    if (o.pass) o.detail = "closed forms within 1e-5, forms agree, KKT residuals in bounds";
    return o;
}

Outcome property_suites() {
    Outcome o;
    // linalg: 1000 random symmetric matrices
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_int_distribution<Index> dim(1, 30);
    for (int k = 0; k < 1000; ++k) {
        const Index n = dim(rng);
        Eigen::MatrixXd m(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) m(i, j) = nd(rng);
        const SymMatrix s(m);
        const auto sp = sym_eig(s);
        const Eigen::MatrixXd& v = sp.eigenvectors;
        const double rec = (v * sp.eigenvalues.asDiagonal() * v.transpose() - s.dense()).norm();
        const double orth = (v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm();
        if (rec > 1e-10 * std::max(1.0, s.frobenius_norm()) || orth > 1e-10) {
            o.require(false, "spectrum case " + std::to_string(k));
            break;
        }
    }
    // formulations: feasible alphas form an interval
    for (const auto& e : corpus::all()) {
        int state = 0; // 0: infeasible so far, 1: feasible, 2: infeasible after feasible
        for (int k = 1; k < 20; ++k) {
            const bool feas = alpha_tilde_probe(e.graph, 0.05 * k).t > 1e-9;
            if (state == 0 && feas) state = 1;
            if (state == 1 && !feas) state = 2;
            if (state == 2 && feas) o.require(false, e.name + " feasible set is not an interval");
        }
    }
    // verify: certificate suite and full report
    for (const auto& e : corpus::all()) {
        const auto mc = maxcut_exact(e.graph);
        const auto gw = gw_detailed(e.graph);
        const auto th = lovasz_theta_detailed(complement(e.graph));
        const double a0 = alpha0(e.graph).value;
        for (const auto& c : {cert_strict_feasible(e.graph), cert_eigvec(e.graph), cert_cut(e.graph, mc.side, mc.value),
                              cert_gw(e.graph, gw.x, gw.value),
                              cert_theta_min(e.graph, th.min_value, th.min_point.z, a0),
                              cert_motzkin(e.graph, clique_number(e.graph))}) {
            o.require(c.check().valid, e.name + " certificate " + to_string(c.provenance));
        }
        o.require(theorem_report(e.graph).passed(), e.name + " theorem report has failures");
    }
    // cli: JSON round trip
    cli::RunConfig cfg;
    cfg.command = cli::Command::bounds;
    cfg.family = "petersen";
    cfg.format = cli::OutputFormat::json;
    const auto r = cli::run(cfg);
    const auto j = cli::Json::parse(r.out);
    o.require(r.exit_code == 0 && j.dump(2) + "\n" == r.out, "cli JSON does not round-trip");
    if (o.pass) o.detail = "linalg 1000 cases, interval grid, certificates, reports, JSON round trip";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"regular graphs: bisection alpha0 equals closed form", regular_closed_form},
        {"strong duality: SDP optimum equals bisection alpha0", strong_duality},
        {"eigenvalue bound from theta(Gbar) on the alpha grid", eigenvalue_bound},
        {"alpha0 >= 1/theta(Gbar) with listed equality cases", theta_lower_bound},
        {"alpha_tilde equals 1/theta(Gbar) and the renormalized program", alpha_tilde_equals_inverse_theta},
        {"alpha0 = 1/2 exactly for bipartite graphs", bipartite_characterization},
        {"cut bound chain and spectral max-cut bound", cut_bounds_chain},
        {"Motzkin-Straus certificate and copositive bracket", copositive_certificate},
        {"solver sanity: closed forms, form agreement, residuals", solver_sanity},
        {"property suites", property_suites},
    };
    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %2zu %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
    return failed == 0 ? 0 : 1;
}
