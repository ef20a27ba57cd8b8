#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tpsim/interaction.hpp"
#include "tpsim/rng.hpp"

using namespace tpsim;

namespace {
InteractionParams params(double ek, double ec, double er) {
    InteractionParams p;
    p.eps_k = ek;
    p.eps_c = ec;
    p.eps_rho = er;
    return p;
}
}  // namespace

TEST_CASE("pure norm reference sends both agents to rho_norm") {
    const auto r = interact(0.3, 0.15, 2.0, 3.0, 1.1, 1.4, params(0.0, 0.0, 1.0));
    CHECK(r.rho_i == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.rho_j == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("zero strengths leave rates untouched") {
    const auto r = interact(0.31, 0.17, 2.0, 3.0, 1.1, 1.4, params(0.0, 0.0, 0.0));
    CHECK(r.rho_i == 0.31);
    CHECK(r.rho_j == 0.17);
    CHECK_FALSE(r.floored_i);
    CHECK_FALSE(r.floored_j);
}

TEST_CASE("symmetric state capital bias") {
    // identical agents: only the (beta_k - 1) bias remains
    const auto r = interact(0.223, 0.223, 2.4, 2.4, 1.3, 1.3, params(0.1, 0.0, 0.0));
    CHECK(r.rho_i == doctest::Approx(0.22077).epsilon(1e-12));
    CHECK(r.rho_j == doctest::Approx(0.22077).epsilon(1e-12));
}

TEST_CASE("kernel is exchangeable") {
    Rng rng(99);
    auto draw = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const double ri = draw(0.05, 0.6), rj = draw(0.05, 0.6);
        const double ki = draw(0.5, 5.0), kj = draw(0.5, 5.0);
        const double ci = draw(0.3, 2.0), cj = draw(0.3, 2.0);
        const InteractionParams p = params(draw(0.0, 0.5), draw(0.0, 0.5), draw(0.0, 0.5));
        const auto ab = interact(ri, rj, ki, kj, ci, cj, p);
        const auto ba = interact(rj, ri, kj, ki, cj, ci, p);
        REQUIRE(ab.rho_i == ba.rho_j);
        REQUIRE(ab.rho_j == ba.rho_i);
    }
}

TEST_CASE("sign directions") {
    const double rho = 0.25, k = 2.0, c = 1.2;

    // richer-looking counterpart lowers my rate
    const double dk = 1e-6;
    const auto base_k = interact(rho, rho, k, k, c, c, params(0.2, 0.0, 0.0));
    const auto bump_k = interact(rho, rho, k, k + dk, c, c, params(0.2, 0.0, 0.0));
    CHECK(bump_k.rho_i < base_k.rho_i);

    // heavier-consuming counterpart raises my rate
    const auto base_c = interact(rho, rho, k, k, c, c, params(0.0, 0.2, 0.0));
    const auto bump_c = interact(rho, rho, k, k, c, c + dk, params(0.0, 0.2, 0.0));
    CHECK(bump_c.rho_i > base_c.rho_i);

    // norm reference alone moves the rate toward rho_norm from either side
    const auto above = interact(0.25, 0.25, k, k, c, c, params(0.0, 0.0, 0.3));
    CHECK(above.rho_i < 0.25);
    CHECK(above.rho_i > 0.2);
    const auto below = interact(0.15, 0.15, k, k, c, c, params(0.0, 0.0, 0.3));
    CHECK(below.rho_i > 0.15);
    CHECK(below.rho_i < 0.2);
}

TEST_CASE("update factor is scale free in capital and consumption") {
    const InteractionParams p = params(0.15, 0.25, 0.1);
    const auto base = interact(0.3, 0.2, 2.0, 3.5, 1.1, 0.9, p);
    for (double scale : {0.01, 0.5, 7.0, 1e4}) {
        const auto scaled = interact(0.3, 0.2, 2.0 * scale, 3.5 * scale,
                                     1.1 * scale, 0.9 * scale, p);
        REQUIRE(scaled.rho_i == doctest::Approx(base.rho_i).epsilon(1e-12));
        REQUIRE(scaled.rho_j == doctest::Approx(base.rho_j).epsilon(1e-12));
    }
    // and the multiplicative form: rho scales linearly through the factor
    const auto twice = interact(0.6, 0.4, 2.0, 3.5, 1.1, 0.9,
                                params(0.15, 0.25, 0.0));
    const auto once = interact(0.3, 0.2, 2.0, 3.5, 1.1, 0.9,
                               params(0.15, 0.25, 0.0));
    CHECK(twice.rho_i == doctest::Approx(2.0 * once.rho_i).epsilon(1e-12));
}

TEST_CASE("floor clamps runaway updates") {
    // counterpart's capital looks 10x larger: the factor goes negative
    InteractionParams p = params(1.0, 0.0, 0.0);
    p.beta_k = 10.0;
    const auto r = interact(0.223, 0.223, 2.0, 2.0, 1.3, 1.3, p);
    CHECK(r.rho_i == kRhoFloor);
    CHECK(r.rho_j == kRhoFloor);
    CHECK(r.floored_i);
    CHECK(r.floored_j);
}

TEST_CASE("domain errors") {
    const InteractionParams p = params(0.1, 0.1, 0.1);
    CHECK_THROWS_AS(interact(0.0, 0.2, 1.0, 1.0, 1.0, 1.0, p), std::domain_error);
    CHECK_THROWS_AS(interact(0.2, 0.2, -1.0, 1.0, 1.0, 1.0, p), std::domain_error);
    CHECK_THROWS_AS(interact(0.2, 0.2, 1.0, 1.0, 1.0, 0.0, p), std::domain_error);
}

TEST_CASE("mixed branches") {
    InteractionParams p = params(0.3, 0.3, 0.1);
    p.mode = InteractionMode::mixed;
    const InteractionParams cap = mixed_branch(p, true);
    CHECK(cap.eps_k == 0.3);
    CHECK(cap.eps_c == 0.0);
    CHECK(cap.eps_rho == 0.1);
    const InteractionParams con = mixed_branch(p, false);
    CHECK(con.eps_k == 0.0);
    CHECK(con.eps_c == 0.3);
    CHECK(con.eps_rho == 0.1);
}

TEST_CASE("parameter validation") {
    InteractionParams bad;
    bad.eps_k = -0.1;
    bad.eps_c = 1.2;
    bad.eps_rho = 2.0;
    bad.beta_k = 0.9;
    bad.beta_c = 0.0;
    bad.rho_norm = 0.0;
    CHECK(bad.violations().size() == 6);
    CHECK(InteractionParams{}.violations().empty());
}
