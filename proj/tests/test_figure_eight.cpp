#include <doctest.h>

#include <random>

#include "fig8/errors.hpp"
#include "fig8/figure_eight.hpp"
#include "fig8/special_functions.hpp"
#include "test_util.hpp"

using namespace fig8;
using fig8::test::naive_jones;
using fig8::test::random_xi;
using fig8::test::rel_err;

TEST_SUITE("figure_eight") {
    TEST_CASE("kappa and phi special values") {
        CHECK(kappa() == doctest::Approx(0.962424).epsilon(1e-6));
        CHECK(std::cosh(kappa()) == doctest::Approx(1.5));
        CHECK(std::abs(make_cusp(kappa()).phi) < 1e-7);
        CHECK(std::abs(make_cusp(0.0).phi - cplx{0, kPi / 3}) < 1e-14);
        const CuspParameter cp = make_cusp({1.0, 0.5});
        CHECK(cp.a * std::tanh(cp.c()) - cp.b * std::tan(cp.d()) == doctest::Approx(0.0661743).epsilon(1e-6));
        CHECK(cp.inside_xi);
        CHECK_FALSE(make_cusp({1.0, 2.0}).inside_xi);
    }

    TEST_CASE("phi solves cosh phi = cosh xi - 1/2 and sits in its box") {
        std::mt19937_64 rng(11);
        double worst = 0;
        int box_violations = 0;
        for (int i = 0; i < 1000; ++i) {
            const CuspParameter cp = make_cusp(random_xi(rng, 3.0));
            worst = std::max(worst, std::abs(std::cosh(cp.phi) - std::cosh(cp.xi) + 0.5));
            const bool in_box = std::asinh(cp.beta) < cp.c() && cp.c() < cp.a && cp.b < cp.d() && cp.d() < kPi / 2;
            box_violations += !in_box;
        }
        CHECK(worst < 1e-12);
        CHECK(box_violations == 0);
    }

    TEST_CASE("colored Jones small cases") {
        CHECK(colored_jones(1, {3.0, 1.0}).log_mag == 0.0);
        CHECK(colored_jones(1, {3.0, 1.0}).arg == 0.0);
        CHECK(std::abs(colored_jones(7, 0.0).to_complex() - 1.0) < 1e-15);
        const cplx xi{1.0, 0.5};
        const cplx q = std::exp(xi / 2.0);
        const cplx j2 = 1.0 / (q * q) - 1.0 / q + 1.0 - q + q * q;
        CHECK(rel_err(colored_jones(2, xi).to_complex(), j2) < 1e-14);
        CHECK_THROWS_AS(colored_jones(0, xi), DomainError);
    }

    TEST_CASE("colored Jones against the naive sum") {
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int i = 0; i < 40; ++i) {
            const cplx xi{u(rng), u(rng)};
            for (int n : {2, 3, 5, 8, 13}) CHECK(rel_err(colored_jones(n, xi).to_complex(), naive_jones(n, xi)) < 1e-11);
        }
    }

    TEST_CASE("colored Jones against frozen high-precision values") {
        struct Ref {
            int n;
            cplx xi, v;
        };
        const Ref refs[] = {
            {5, {0.7, 0.3}, {1.227488169444291, 0.77732234481993142}},
            {30, {1.0, 0.5}, {0.25899899819729782, 0.85591262846846559}},
            {20, {2.0, 1.0}, {131258100610.36901, -463662671445.16301}},
            {50, {0.3, 0.3}, {0.96622975507253526, 0.17338527299282327}},
        };
        for (const auto& r : refs) CHECK(rel_err(colored_jones(r.n, r.xi).to_complex(), r.v) < 1e-10);
    }

    TEST_CASE("high cancellation escalates precision") {
        const JonesEvaluation ev = colored_jones_detail(400, {1.0, 0.5});
        CHECK(ev.precision_bits > 53);
        CHECK(ev.cancellation_nats > 30);
        const cplx limit = 1.0 / alexander(std::exp(cplx{1.0, 0.5}));
        CHECK(std::abs(ev.value.to_complex() - limit) < 1e-4);
    }

    TEST_CASE("conjugation and amphichirality") {
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<int> un(2, 50);
        double conj_worst = 0, amph_worst = 0;
        for (int i = 0; i < 20; ++i) {
            const cplx xi = random_xi(rng);
            const int n = un(rng);
            const cplx j = colored_jones(n, xi).to_complex();
            conj_worst = std::max(conj_worst, rel_err(colored_jones(n, std::conj(xi)).to_complex(), std::conj(j)));
            amph_worst = std::max(amph_worst, rel_err(colored_jones(n, -xi).to_complex(), j));
        }
        CHECK(conj_worst < 1e-10);
        CHECK(amph_worst < 1e-10);
    }

    TEST_CASE("Alexander polynomial") {
        CHECK(std::abs(alexander(1.0) - 1.0) < 1e-15);
        const cplx t{0.7, -1.3};
        CHECK(std::abs(alexander(t) - alexander(1.0 / t)) < 1e-14);
        CHECK(std::abs(alexander(std::exp(kappa()))) < 1e-14);
    }

    TEST_CASE("action S special values") {
        const CuspParameter k = make_cusp(kappa());
        CHECK(std::abs(action_s(k)) < 1e-12);
        CHECK(std::abs(action_s_plus(k) - 2.0 * kappa() * kPi * kI) < 1e-12);
        CHECK(std::abs(action_s_minus(k) - 2.0 * kappa() * kPi * kI) < 1e-12);
        const cplx s0 = action_s(make_cusp(0.0));
        CHECK(std::abs(s0 - cplx{0, -2.029883212819307}) < 1e-12);
        // Independent: S(0) = Li2(e^{-i pi/3}) - Li2(e^{i pi/3}) from the naive series at |z|=1 (Abel limit).
        const cplx e = std::exp(cplx{0, kPi / 3});
        CHECK(std::abs(s0 - (test::li2_series(std::conj(e), 200000) - test::li2_series(e, 200000))) < 1e-4);
    }

    TEST_CASE("S plus and S minus compose exactly") {
        std::mt19937_64 rng(14);
        for (int i = 0; i < 50; ++i) {
            const CuspParameter cp = make_cusp(random_xi(rng));
            const cplx s = action_s(cp);
            CHECK(action_s_plus(cp) == -s + 2.0 * cp.xi * kPi * kI);
            CHECK(action_s_minus(cp) == s + 2.0 * cp.xi * kPi * kI);
        }
    }

    TEST_CASE("dS/dxi matches finite differences") {
        std::mt19937_64 rng(15);
        double worst = 0;
        const double h = 1e-5;
        for (int i = 0; i < 50; ++i) {
            const cplx xi = random_xi(rng);
            const cplx fd = (action_s(make_cusp(xi + h)) - action_s(make_cusp(xi - h))) / (2 * h);
            worst = std::max(worst, std::abs(fd - ds_dxi(make_cusp(xi))));
        }
        CHECK(worst < 1e-6);
    }

    TEST_CASE("Re sigma < 1 when the technical condition holds") {
        std::mt19937_64 rng(16);
        int checked = 0;
        for (int i = 0; i < 2000; ++i) {
            const CuspParameter cp = make_cusp(random_xi(rng, 3.0));
            if (cp.a * std::tanh(cp.c()) - cp.b * std::tan(cp.d()) < 0) continue;
            ++checked;
            CHECK(cp.sigma.real() < 1.0);
        }
        CHECK(checked > 100);
    }

    TEST_CASE("torsion") {
        CHECK(std::abs(torsion(0.0) - cplx{0, -2.0 / std::sqrt(3.0)}) < 1e-14);
        CHECK_THROWS_AS(torsion(kappa()), PoleError);
        const cplx xi{1.0, 0.5};
        const cplx t = torsion(xi);
        const cplx c = std::cosh(xi);
        CHECK(std::abs(t * t * (2.0 * c + 1.0) * (2.0 * c - 3.0) - 4.0) < 1e-12);
    }

    TEST_CASE("v and longitude eigenvalue") {
        CHECK(std::abs(v_of(kappa()) - cplx{0, -2 * kPi}) < 1e-12);
        CHECK(std::abs(longitude_eigenvalue(kappa()) - 1.0) < 1e-12);
        std::mt19937_64 rng(17);
        for (int i = 0; i < 100; ++i) {
            const cplx xi = random_xi(rng);
            CHECK(std::abs(v_plus(xi) + v_of(xi)) < 1e-14);
            CHECK(std::abs(v_minus(xi) - v_of(xi) - 4.0 * kPi * kI) < 1e-13);
            CHECK(std::abs(longitude_eigenvalue(xi) + std::exp(-v_of(xi) / 2.0)) < 1e-10);
        }
    }

    TEST_CASE("saddle Hessian") {
        std::mt19937_64 rng(18);
        for (int i = 0; i < 100; ++i) {
            const CuspParameter cp = make_cusp(random_xi(rng));
            CHECK(std::abs(saddle_hessian(cp) + 2.0 * cp.xi * std::sinh(cp.phi)) < 1e-12 * std::abs(cp.xi) * 10);
        }
        CHECK_THROWS_AS(saddle_hessian(make_cusp(kappa())), DegenerateSaddleError);
    }
}
