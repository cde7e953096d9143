#include <doctest.h>

#include "generators.hpp"
#include "revtri/errors.hpp"
#include "revtri/hypothesis.hpp"

#include <cmath>
#include <numbers>

using namespace revtri;

namespace {

const double pi = std::numbers::pi;
const ComplexVector e2{1.0, 0.0};
const ComplexVector u2{0.0, 1.0};

GridFunction constant(const ComplexVector& v, std::size_t n = 8) {
    return sample([&](double) { return v; }, 0.0, 1.0, n);
}

GridFunction scalar(Scalar (*phi)(double), double a, double b, std::size_t n) {
    return sample([phi](double t) { return ComplexVector{phi(t)}; }, a, b, n);
}

} // namespace

TEST_CASE("pointwise checks with a unit vector") {
    const auto rep = check_pointwise_e(constant(e2), HypothesisSpec::diaz_metcalf(1.0, e2));
    CHECK(rep.holds);
    CHECK(rep.worst_margin == doctest::Approx(0.0));

    const auto ball = check_pointwise_e(constant(e2), HypothesisSpec::ball(0.1, e2));
    CHECK(ball.holds);
    CHECK(ball.worst_margin == doctest::Approx(0.1));

    const auto f = sample([](double t) { return e2 + (0.2 * std::cos(t)) * u2; }, 0.0, 1.0, 16);
    const auto bad = check_pointwise_e(f, HypothesisSpec::ball(0.1, e2));
    CHECK_FALSE(bad.holds);
    CHECK(bad.worst_margin == doctest::Approx(-0.1));
    CHECK(bad.worst_i == 0);
}

TEST_CASE("mM with e: both formulations agree") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const double m = rng.uniform(0.1, 1.0), M = m + rng.uniform(0.0, 2.0);
        const auto f = sample(
            [&](double t) {
                return (0.5 * (m + M) + 0.6 * (M - m) * std::sin(3 * t)) * e2 + (0.3 * std::cos(t)) * u2;
            },
            0.0, 2.0, 32);
        const auto rep = check_pointwise_e(f, HypothesisSpec::mM_with_e(m, M, e2));
        CHECK(rep.consistency_violations == 0);
    }
}

TEST_CASE("r(t) and k(t) profiles") {
    const auto f = sample([](double t) { return e2 + (0.5 * t) * u2; }, 0.0, 1.0, 4);
    std::vector<double> r{0.0, 0.125, 0.25, 0.375, 0.5};
    CHECK(check_pointwise_e(f, HypothesisSpec::ball_profile(r, e2)).holds);
    r[4] = 0.4;
    const auto rep = check_pointwise_e(f, HypothesisSpec::ball_profile(r, e2));
    CHECK_FALSE(rep.holds);
    CHECK(rep.worst_i == 4);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::ball_profile({0.1, 0.2}, e2)), InputError);

    std::vector<double> k(5);
    for (std::size_t i = 0; i < 5; ++i) k[i] = f.norms()[i] - re_inner(f[i], e2);
    CHECK(check_pointwise_e(f, HypothesisSpec::additive_profile(k, e2)).holds);
    k[2] = -0.1;
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::additive_profile(k, e2)), InputError);
}

TEST_CASE("parameter validation") {
    const auto f = constant(e2);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::diaz_metcalf(0.9, e2)), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::ball(1.0, e2)), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::ball(0.0, e2)), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::mM_with_e(2.0, 1.0, e2)), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::mM_with_e(0.0, 1.0, e2)), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::diaz_metcalf(1.0, ComplexVector{2.0, 0.0})), InputError);
    CHECK_THROWS_AS(check_pointwise_e(f, HypothesisSpec::diaz_metcalf(1.0, ComplexVector{1.0})), InputError);
    HypothesisSpec missing;
    missing.kind = HypothesisKind::diaz_metcalf_K;
    missing.K = 1.0;
    CHECK_THROWS_AS(check_pointwise_e(f, missing), InputError);
    CHECK_THROWS_AS(check_pairwise(f, HypothesisSpec::pairwise_mM(1.5, 2.0)), InputError);
    CHECK_THROWS_AS(check_pairwise(f, HypothesisSpec::pairwise_mM(0.5, 0.9)), InputError);
    CHECK_THROWS_AS(check_pairwise(f, HypothesisSpec::ball(0.5, e2)), InputError);
    CHECK_THROWS_AS(check_karamata(constant(ComplexVector{1.0}), 0.0), InputError);
    CHECK_THROWS_AS(check_karamata(constant(ComplexVector{1.0}), pi / 2), InputError);
    CHECK_THROWS_AS(hypothesis_kind_from_string("nope"), InputError);
    CHECK(hypothesis_kind_from_string("pairwise-gammaGamma") == HypothesisKind::pairwise_gammaGamma);
}

TEST_CASE("pairwise examples") {
    const auto c = check_pairwise(constant(ComplexVector{Scalar{0.3, 1.0}, Scalar{2.0, 0.0}}),
                                  HypothesisSpec::pairwise_mM(1.0, 1.0));
    CHECK(c.holds);
    CHECK(c.worst_margin == doctest::Approx(0.0));

    const auto phi = scalar([](double t) { return Scalar{std::exp(-t), 0.0}; }, 0.0, std::log(2.0), 32);
    CHECK(check_pairwise(phi, HypothesisSpec::pairwise_mM(1.0, 2.0)).holds);

    const auto line = sample([](double t) { return ComplexVector{1.0, t}; }, 0.0, 1.0, 8);
    const auto bad = check_pairwise(line, HypothesisSpec::pairwise_mM(1.0, 1.0));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.worst_j.has_value());
    CHECK(bad.worst_i == 0);
    CHECK(*bad.worst_j == 8);
    CHECK(bad.worst_margin == doctest::Approx(-1.0));
}

TEST_CASE("worst location ties go to the smallest pair") {
    // Constant f with m = M = 1: every pair has slack exactly 0.
    const auto rep = check_pairwise(constant(ComplexVector{1.0}), HypothesisSpec::pairwise_mM(1.0, 1.0));
    CHECK(rep.worst_i == 0);
    CHECK(*rep.worst_j == 0);
    CHECK(rep.points_checked == 45);
}

TEST_CASE("gamma-Gamma form matches its expansion") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = gen::random_vector(rng, 3), y = gen::random_vector(rng, 3);
        const double g = rng.uniform(-1.0, 1.0), G = rng.uniform(0.0, 3.0);
        const double expanded = (G + g) * re_inner(x, y) - norm_squared(x) - g * G * norm_squared(y);
        CHECK(pair_form(x, y, g, G) == doctest::Approx(expanded).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("pairwise bound implies the simple kernel bound") {
    gen::Rng rng(43);
    int certified = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const double m = rng.uniform(0.0, 1.0), M = rng.uniform(1.0, 3.0);
        const auto y = gen::random_vector(rng, 2);
        // x near the admissible ball around ((M + m)/2) y
        const auto x = (0.5 * (M + m)) * y + gen::random_vector(rng, 2, 0.5 * (M - m) * norm(y));
        if (pair_form(x, y, m, M) < 0.0) continue;
        ++certified;
        const double bound = 0.25 * (M - m) * (M - m) / (M + m) * norm_squared(y);
        CHECK(schwarz_gap(x, y) <= bound + 1e-12 * (1.0 + bound));
    }
    CHECK(certified > 100);
}

TEST_CASE("widening the bounds never breaks a certified hypothesis") {
    gen::Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = gen::lagrange_draw(rng, rng.uniform(-1.0, 0.0), rng.uniform(0.0, 1.0));
        const auto fam = make_lagrange_family({d.psi, d.theta, d.Theta, 0.0, 1.0}, 32);
        double m = std::min(fam.gamma, 1.0), M = std::max(fam.Gamma, 1.0);
        REQUIRE(check_pairwise(fam.f, HypothesisSpec::pairwise_mM(m, M)).holds);
        for (int step = 0; step < 5; ++step) {
            m *= rng.uniform(0.5, 1.0);
            M *= rng.uniform(1.0, 1.5);
            CHECK(check_pairwise(fam.f, HypothesisSpec::pairwise_mM(m, M)).holds);
            CHECK(check_pairwise(fam.f, HypothesisSpec::pairwise_gamma(m, M)).holds);
        }
    }
}

TEST_CASE("equivalence of the bilinear and ball forms") {
    CHECK(check_equivalence_forms(constant(e2), HypothesisSpec::pairwise_mM(1.0, 1.0)).disagreements == 0);

    gen::Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const double m = rng.uniform(0.0, 1.0), M = rng.uniform(1.0, 4.0);
        const auto x = gen::random_vector(rng, 2, 2.0), y = gen::random_vector(rng, 2);
        const auto ind = equivalence_indicators(x, y, m, M, 1e-12);
        CHECK(ind.bilinear_holds == ind.ball_holds);
    }

    // Boundary: x = M y is on the sphere of the ball form.
    const double m = 0.25, M = 3.0;
    const ComplexVector y{Scalar{0.4, -0.7}, Scalar{1.1, 0.2}};
    const auto x = (0.5 * (M + m) + 0.5 * (M - m)) * y;
    const auto ind = equivalence_indicators(x, y, m, M, 1e-12);
    CHECK(ind.bilinear_holds);
    CHECK(ind.ball_holds);
}

TEST_CASE("complex componentwise chain") {
    CHECK(check_complex_componentwise(constant(ComplexVector{Scalar{1, 1}}), HypothesisSpec::complex_componentwise(1, 1))
              .holds);

    const auto f = scalar([](double t) { return std::exp(-t) * Scalar{1, 1}; }, 0.0, 1.0, 64);
    const auto rep = check_complex_componentwise(f, HypothesisSpec::complex_componentwise(1.0, std::exp(1.0)));
    CHECK(rep.holds);
    CHECK(rep.consistency_violations == 0);

    const auto line = scalar([](double t) { return Scalar{t, 0.0}; }, 0.0, 1.0, 8);
    const auto bad = check_complex_componentwise(line, HypothesisSpec::complex_componentwise(1.0, 2.0));
    CHECK_FALSE(bad.holds);
    CHECK(bad.worst_i == 0);

    const auto vec = constant(e2);
    CHECK_THROWS_AS(check_complex_componentwise(vec, HypothesisSpec::complex_componentwise(1, 1)), InputError);
}

TEST_CASE("componentwise chain implies the complex pair condition") {
    gen::Rng rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = gen::lagrange_draw(rng, rng.uniform(-1.0, 0.0), rng.uniform(0.0, 1.5));
        const Scalar dir{rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)};
        const auto fam = make_lagrange_family({d.psi, d.theta, d.Theta, 0.0, 1.0, ComplexVector{dir}}, 32);
        const auto rep = check_complex_componentwise(fam.f, HypothesisSpec::complex_componentwise(fam.gamma, fam.Gamma));
        CHECK(rep.holds);
        CHECK(rep.consistency_violations == 0);
        CHECK(check_pairwise(fam.f, HypothesisSpec::pairwise_mM(fam.gamma, fam.Gamma)).holds);
    }
}

TEST_CASE("karamata angle check") {
    CHECK(check_karamata(constant(ComplexVector{1.0}), 0.3).holds);

    const auto circle = scalar([](double t) { return Scalar{std::cos(t), std::sin(t)}; }, -pi / 4, pi / 4, 16);
    const auto rep = check_karamata(circle, pi / 4);
    CHECK(rep.holds);
    CHECK(rep.worst_margin == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    const auto wide = scalar([](double t) { return Scalar{std::cos(t), std::sin(t)}; }, -pi / 2, pi / 2, 16);
    const auto bad = check_karamata(wide, pi / 4);
    CHECK_FALSE(bad.holds);
    CHECK(bad.worst_i == 0);
    CHECK(bad.worst_margin == doctest::Approx(-pi / 4));

    const auto zero = check_karamata(constant(ComplexVector{0.0}), 0.5);
    CHECK_FALSE(zero.holds);
    CHECK(zero.worst_margin == doctest::Approx(-0.5));
}

TEST_CASE("schwarz gap is nonnegative on every grid pair") {
    gen::Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rf = gen::catalog_function(rng);
        const auto f = sample(rf.evaluator(), rf.a, rf.b, 32);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i; j < f.size(); ++j)
                CHECK(schwarz_gap(f[i], f[j]) >= -1e-12 * f.norms()[i] * f.norms()[j]);
    }
}
