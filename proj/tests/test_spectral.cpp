#include "fixtures.hpp"
#include "lvspread/errors.hpp"

#include <doctest.h>

using namespace lvspread;
using namespace fixtures;

namespace {

double residual(const Mat2& H, const PfEigen& pf) { return (H * pf.q - pf.eta * pf.q).norm_inf(); }

double envelope_eta(const ModelParams& p, double beta) {
    return std::max(beta * p.D_e + p.r_e / beta, beta * p.D_d + p.r_d / beta);
}

} // namespace

TEST_CASE("h_matrix") {
    const auto H = h_matrix(p1(), 1.0);
    CHECK(H.a11 == doctest::Approx(1.399));
    CHECK(H.a12 == doctest::Approx(0.00025));
    CHECK(H.a21 == doctest::Approx(0.001));
    CHECK(H.a22 == doctest::Approx(1.69975));
    const auto H0 = h_matrix(without_mutation(p1()), 1.0);
    CHECK(H0 == Mat2{0.3 + 1.1, 0.0, 0.0, 1.5 + 0.2});
    const auto p = p1();
    const double beta = 2.5;
    const auto Hb = beta * h_matrix(p, beta);
    const auto J0 = jacobian_f(p, {0, 0});
    CHECK(Hb.a11 == doctest::Approx(beta * beta * p.D_e + J0.a11));
    CHECK(Hb.a12 == doctest::Approx(J0.a12));
    CHECK(Hb.a21 == doctest::Approx(J0.a21));
    CHECK(Hb.a22 == doctest::Approx(beta * beta * p.D_d + J0.a22));
    CHECK_THROWS_AS(h_matrix(p, 0.0), ValidationError);
    CHECK_THROWS_AS(h_matrix(p, -1.0), ValidationError);
}

TEST_CASE("pf_eigenpair examples") {
    const Mat2 H{1.399, 0.00025, 0.001, 1.69975};
    const auto pf = pf_eigenpair(H);
    CHECK(pf.eta == doctest::Approx(1.699751).epsilon(1e-6));
    CHECK(pf.q_ratio() == doctest::Approx(1203.003).epsilon(1e-6));
    CHECK(residual(H, pf) <= 1e-12 * H.norm_inf());

    const auto s = pf_eigenpair({2, 1, 1, 2});
    CHECK(s.eta == doctest::Approx(3.0));
    CHECK(s.q.e == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(s.q.d == doctest::Approx(1 / std::sqrt(2.0)));

    const auto shifted = pf_eigenpair(H + 5.0 * Mat2::identity());
    CHECK(shifted.eta == doctest::Approx(pf.eta + 5.0).epsilon(1e-14));
    CHECK(std::abs(shifted.q.e - pf.q.e) <= 1e-12);
    CHECK(std::abs(shifted.q.d - pf.q.d) <= 1e-12);

    CHECK_THROWS_AS(pf_eigenpair({1, 0, 0, 2}), ValidationError);
    CHECK_THROWS_AS(pf_eigenpair({1, -0.1, 0.2, 2}), ValidationError);
}

TEST_CASE("pf_eigenpair on random matrices") {
    auto gen = rng(99);
    std::uniform_real_distribution<double> diag(-5.0, 5.0), off(0.0, 3.0);
    std::uniform_real_distribution<double> logscale(-8.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        Mat2 H{diag(gen), off(gen) * std::pow(10.0, logscale(gen)), off(gen) * std::pow(10.0, logscale(gen)),
               diag(gen)};
        if (i % 7 == 0)
            H.a12 = 0.0;
        const auto pf = pf_eigenpair(H);
        CHECK(residual(H, pf) <= 1e-12 * H.norm_inf());
        CHECK(pf.eta >= std::max(H.a11, H.a22));
        CHECK(pf.eta == doctest::Approx(dominant_eigenvalue(H)).epsilon(1e-12));
        CHECK(pf.q.e >= 0);
        CHECK(pf.q.d >= 0);
        CHECK(pf.q.norm() == doctest::Approx(1.0).epsilon(1e-14));
        const double c = diag(gen);
        const auto sh = pf_eigenpair(H + c * Mat2::identity());
        CHECK(std::abs(sh.eta - (pf.eta + c)) <= 1e-12 * std::max(1.0, std::abs(pf.eta + c)));
        CHECK(std::abs(sh.q.e - pf.q.e) <= 1e-12);
        CHECK(std::abs(sh.q.d - pf.q.d) <= 1e-12);
    }
}

TEST_CASE("dispersion") {
    const auto d = dispersion(p1(), 0.866025);
    CHECK(std::abs(d.eta - 1.529978) <= 1e-3);
    REQUIRE(d.q.has_value());
    const auto p0 = without_mutation(p1());
    const double bs = std::sqrt((p0.r_e - p0.r_d) / (p0.D_d - p0.D_e));
    const auto H = h_matrix(p0, bs);
    CHECK(H.a11 == doctest::Approx(H.a22).epsilon(1e-14));
    const auto e1 = dispersion(p0, 1.0);
    CHECK(e1.envelope());
        CHECK(e1.eta == doctest::Approx(std::max(1.4, 1.7)));
}

TEST_CASE("min_speed for the reference parameters") {
    const auto p = p1();
    const auto sp = min_speed(p);
    CHECK(sp.c_star >= 1.50);
    CHECK(sp.c_star <= 1.529978 + 1e-6);
    CHECK(std::abs(sp.c_star - 1.529978) <= 1e-2);
    CHECK(std::abs(sp.beta_min - 0.866025) <= 0.05);

    const auto [bx, bv] = dense_min([&](double b) { return dispersion(p, b).eta; }, 1e-3, 1e3);
    CHECK(sp.c_star == doctest::Approx(bv).epsilon(1e-10));
    CHECK(sp.beta_min == doctest::Approx(bx).epsilon(1e-4));
    CHECK(sp.c_star <= bv + 1e-13);

    for (double f : {1 - 1e-4, 1 + 1e-4})
        CHECK(dispersion(p, sp.beta_min * f).eta >= sp.c_star - 1e-12);

    const auto tiny = min_speed(with_mu(p, 1e-8));
    CHECK(std::abs(tiny.c_star - 1.529978) <= 1e-4);

    auto bad = p;
    bad.mu_e = p.r_e;
    CHECK_THROWS_AS(min_speed(bad), ValidationError);
}

TEST_CASE("min_speed local minimality over a family") {
    auto gen = rng(5);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int i = 0; i < 50; ++i) {
        ModelParams p{u(gen), u(gen) + 1.0, u(gen) + 1.0, u(gen), 1, 1, 0.5, 0.5, 1e-3 * u(gen), 1e-3 * u(gen)};
        const auto sp = min_speed(p);
        for (double f : {1 - 1e-4, 1 + 1e-4})
            CHECK(dispersion(p, sp.beta_min * f).eta >= sp.c_star - 1e-12);
    }
}

TEST_CASE("speed limits") {
    const auto v = speed_limits(p1());
    CHECK(v.v_e == doctest::Approx(1.148913).epsilon(1e-6));
    CHECK(v.v_d == doctest::Approx(1.095445).epsilon(1e-6));
    REQUIRE(v.v_f.has_value());
    CHECK(*v.v_f == doctest::Approx(1.529978).epsilon(1e-6));
    auto q = p1();
    q.r_d = q.r_e;
    CHECK_FALSE(speed_limits(q).v_f.has_value());
    ModelParams fisher{1, 1, 1, 1, 1, 1, 0, 0, 0, 0};
    CHECK(speed_limits(fisher).v_e == doctest::Approx(2.0));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(p1()) == Regime::Anomalous);
    auto q = without_mutation(p1());
    q.r_d = 1.0;
    CHECK(classify_regime(q) == Regime::Disperser);
    const auto env = envelope_min_speed(q);
    CHECK(env.c_star == doctest::Approx(2.449490).epsilon(1e-6));
    CHECK(std::abs(env.c_star - speed_limits(q).v_d) <= 1e-10);

    // D_d/D_e + r_d/r_e = 2 exactly: 1.5/0.75 + 0 is not representable, so
    // pick D_d/D_e = 1.5 and r_d/r_e = 0.5.
    ModelParams edge{1.0, 1.5, 1.0, 0.5, 1, 1, 0, 0, 0, 0};
    CHECK(classify_regime(edge) != Regime::Anomalous);

    auto bad = p1();
    bad.r_d = 2.0;
    CHECK_THROWS_AS(classify_regime(bad), ValidationError);
}

TEST_CASE("regime consistency with the numeric envelope") {
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double r = (i + 0.5) / 20, D = (j + 0.5) / 20;
            ModelParams p{D, 1.0, 1.0, r, 1, 1, 0, 0, 0, 0};
            const auto reg = classify_regime(p);
            const auto v = speed_limits(p);
            const auto env = envelope_min_speed(p);
            const double want = reg == Regime::Anomalous ? *v.v_f : std::max(v.v_e, v.v_d);
            CHECK(std::abs(env.c_star - want) <= 1e-10);
            const auto [bx, bv] = dense_min([&](double b) { return envelope_eta(p, b); }, 1e-3, 1e3);
            CHECK(env.c_star <= bv + 1e-12);
            if (reg == Regime::Anomalous)
                CHECK(std::abs(env.beta_min - std::sqrt((1.0 - r) / (1.0 - D))) <= 1e-8);
        }
}

TEST_CASE("limit summary") {
    const auto ls = limit_summary(without_mutation(p1()), p1_scaling());
    CHECK(ls.beta_star == doctest::Approx(0.866025).epsilon(1e-6));
    CHECK(ls.eta_0 == doctest::Approx(1.529978).epsilon(1e-6));
    CHECK(std::abs(ls.eta_0 - ls.eta_0_alt) <= 1e-12);
    CHECK(std::abs(ls.eta_0 - ls.v_f) <= 1e-12);
    CHECK(ls.a == doctest::Approx(0.925));
    CHECK(ls.b == doctest::Approx(0.875));
    CHECK(ls.q_ratio == doctest::Approx(1.945195).epsilon(1e-6));
    CHECK(ls.eta_prime_0 == doctest::Approx(-1.566e-4).epsilon(1e-3));
    CHECK(ls.beta_prime_0 == doctest::Approx(-3.742e-4).epsilon(1e-3));
    CHECK(std::abs(ls.residual_disperser_row) <= 1e-8);
    CHECK(ls.eta_prime_0 <= 0.0);
    CHECK(ls.regime == Regime::Anomalous);

    auto q = without_mutation(p1());
    q.r_d = 1.0;
    CHECK_THROWS_AS(limit_summary(q, p1_scaling()), ValidationError);

    // Mirror-image rates give a = b; with e = d the ratio is one.
    ModelParams sym2{0.2, 1.0, 1.0, 0.2, 1, 1, 0, 0, 0, 0};
    const auto ls2 = limit_summary(sym2, {1.0, 0.01, 0.01});
    CHECK(ls2.a == doctest::Approx(ls2.b));
    CHECK(ls2.q_ratio == doctest::Approx(1.0));
}

TEST_CASE("leading-edge ratio in ratio form") {
    CHECK(q_ratio_from_ratios(0.2 / 1.1, 0.2, 4.0) == doctest::Approx(1.945195).epsilon(1e-6));
    const auto ls = limit_summary(without_mutation(p1()), p1_scaling());
    CHECK(q_ratio_from_ratios(0.2 / 1.1, 0.2, 4.0) == doctest::Approx(ls.q_ratio).epsilon(1e-12));
    CHECK(q_ratio_from_ratios(0.2 / 1.1, 0.2, 1e-12) < 1e-5);
    const double k = q_ratio_from_ratios(0.2 / 1.1, 0.2, 1.0);
    for (double m : {0.1, 2.0, 7.0})
        CHECK(q_ratio_from_ratios(0.2 / 1.1, 0.2, m) * q_ratio_from_ratios(0.2 / 1.1, 0.2, 1 / m) ==
              doctest::Approx(k * k));
    CHECK_NOTHROW(q_ratio_from_ratios(0.9, 0.9, 1.0));
    CHECK_THROWS_AS(q_ratio_from_ratios(0.2, 0.9, 1.0), ValidationError);
}

TEST_CASE("mu_curve") {
    const auto base = without_mutation(p1());
    const auto s = p1_scaling();
    const auto grid = logspace(1e-6, 10.0, 25);
    const auto curve = mu_curve(base, s, grid, 1);
    REQUIRE(curve.rows.size() == 25);
    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
        CHECK(curve.rows[i].mu > curve.rows[i - 1].mu);
        CHECK(curve.rows[i].eta <= curve.rows[i - 1].eta + 1e-9);
    }
    const auto& first = curve.rows.front();
    CHECK(first.mu == doctest::Approx(1e-6));
    CHECK(std::abs(first.eta - 1.529978) <= 1e-6);
    CHECK(std::abs(first.q_ratio - 1.945195) <= 1e-3);

    // Same rows regardless of grid composition or thread count.
    const auto other = mu_curve(base, s, {grid[3], grid[10], grid[20]}, 3);
    const auto same = [](const MuCurveRow& a, const MuCurveRow& b) {
        return a.mu == b.mu && a.eta == b.eta && a.beta == b.beta && a.q_ratio == b.q_ratio &&
               a.eta_prime == b.eta_prime && a.beta_prime == b.beta_prime;
    };
    CHECK(same(other.rows[0], curve.rows[3]));
    CHECK(same(other.rows[1], curve.rows[10]));
    CHECK(same(other.rows[2], curve.rows[20]));
    CHECK_THROWS_AS(mu_curve(base, s, {1e-3, 1e-4}), ValidationError);
}

TEST_CASE("mu_curve monotone across parameter families") {
    auto gen = rng(17);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 6; ++i) {
        ModelParams p{u(gen), 1.0, 1.0, u(gen), 1, 1, 0.5, 0.5, 0, 0};
        const auto c = mu_curve(p, {1.0, u(gen) * 1e-3, u(gen) * 1e-3}, logspace(1e-6, 10.0, 15), 2);
        for (std::size_t k = 1; k < c.rows.size(); ++k)
            CHECK(c.rows[k].eta <= c.rows[k - 1].eta + 1e-9);
    }
}

TEST_CASE("q-ratio convergence") {
    const auto base = without_mutation(p1());
    const auto c = mu_curve(base, p1_scaling(), {1e-6, 1e-5});
    CHECK(std::abs(c.rows[1].q_ratio - 1.945195) <= 1e-2);
    CHECK(std::abs(c.rows[0].q_ratio - 1.945195) <= 1e-3);
}

TEST_CASE("limit derivatives against central differences") {
    const auto base = without_mutation(p1());
    const auto ls = limit_summary(base, p1_scaling());
    const auto c = mu_curve(base, p1_scaling(), {1e-4, 1e-3});
    for (const auto& row : c.rows) {
        CHECK(row.eta_prime == doctest::Approx(ls.eta_prime_0).epsilon(0.02));
        CHECK(row.beta_prime == doctest::Approx(ls.beta_prime_0).epsilon(0.02));
    }
}

namespace {

double expansion_error(double mu) {
    const auto base = without_mutation(p1());
    const auto ls = limit_summary(base, p1_scaling());
    const auto sp = min_speed(with_mu(base, mu));
    return std::abs(sp.c_star - (ls.eta_0 + mu * ls.eta_prime_0));
}

} // namespace

TEST_CASE("second-order behaviour of the small-mutation expansion") {
    // Remainder scales like mu^2: a 5x smaller mu gives a ~25x smaller error.
    const double ratio = expansion_error(5e-2) / expansion_error(1e-2);
    CHECK(ratio == doctest::Approx(25.0).epsilon(1e-3));
}

TEST_CASE("second-order behaviour at mu = 5e-4 and 1e-4") {
    // The remainder at 1e-4 is ~7.5e-16, below the rounding floor of eta ~ 1.53.
    const double ratio = expansion_error(5e-4) / expansion_error(1e-4);
    MESSAGE("error ratio 5e-4 / 1e-4 = " << ratio);
    CHECK(ratio >= 25.0);
}

TEST_CASE("logspace") {
    const auto g = logspace(1e-6, 10.0, 25);
    REQUIRE(g.size() == 25);
    CHECK(g.front() == 1e-6);
    CHECK(g.back() == 10.0);
    CHECK_THROWS_AS(logspace(0.0, 1.0, 5), ValidationError);
}
