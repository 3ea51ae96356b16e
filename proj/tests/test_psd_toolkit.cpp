#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hankel/errors.hpp"
#include "hankel/psd_toolkit.hpp"
#include "test_util.hpp"

using namespace hankel;
using test_util::Rng;

namespace {

// Evaluation with every term made nonnegative: a conditioning bound for the
// identity checks, so points near a zero of the polynomial do not blow up a
// relative comparison.
double term_scale(const GeneratingVector& gv, const std::vector<double>& x) {
    std::vector<double> v_abs(gv.v.size());
    for (size_t k = 0; k < gv.v.size(); ++k) v_abs[k] = std::fabs(gv.v[k]);
    std::vector<double> x_abs(x.size());
    for (size_t i = 0; i < x.size(); ++i) x_abs[i] = std::fabs(x[i]);
    return hankel_eval(GeneratingVector(gv.order, gv.dim, v_abs), x_abs);
}

void check_identity(const GeneratingVector& gv, const std::vector<double>& x, double witness) {
    const double direct = hankel_eval(gv, x);
    const double scale = std::max(1.0, term_scale(gv, x));
    CHECK(std::fabs(direct - witness) <= 1e-12 * scale);
}

GeneratingVector strong_random_gv(Rng& rng, int m, int n) {
    const int count = rng.uniform_int(10, 40);
    const double t0 = rng.uniform(-1.5, 0.0);
    const double dt = rng.uniform(0.02, 1.4 / count);
    std::vector<double> h(count);
    for (double& x : h) x = rng.uniform(0.0, 2.0);
    return moments_from_samples(SampledGeneratingFunction(t0, dt, std::move(h)), m, n);
}

}  // namespace

TEST_CASE("phi coefficients") {
    const PhiPolynomial plus = phi_coefficients(GeneratingVector(2, 2, {1.0, 0.0, 1.0}));
    CHECK(plus.coefficients == std::vector<double>{1.0, 0.0, 1.0});

    const PhiPolynomial minus = phi_coefficients(GeneratingVector(2, 2, {1.0, 0.0, -1.0}));
    CHECK(minus.coefficients == std::vector<double>{1.0, 0.0, -1.0});

    const PhiPolynomial zero = phi_coefficients(GeneratingVector(3, 2, std::vector<double>(4, 0.0)));
    for (double c : zero.coefficients) CHECK(c == 0.0);

    // first coefficient always equals v0
    Rng rng(41);
    const GeneratingVector gv(4, 3, rng.vector(9));
    CHECK(phi_coefficients(gv).coefficients[0] == gv.v[0]);
}

TEST_CASE("necessary condition fixed cases") {
    CHECK(necessary_condition(GeneratingVector(2, 2, {1.0, 0.0, 1.0})).status == PsdStatus::pass);

    const PsdVerdict fail = necessary_condition(GeneratingVector(2, 2, {1.0, 0.0, -1.0}));
    CHECK(fail.status == PsdStatus::fail_necessary);
    REQUIRE(fail.witness_t.has_value());
    CHECK(std::fabs(*fail.witness_t) > 1.0);
    CHECK(1.0 - *fail.witness_t * *fail.witness_t < 0.0);
    CHECK(fail.margin < 0.0);

    // quartic family member is PSD, so the necessary condition passes
    CHECK(necessary_condition(sos_family_n2(2)).status == PsdStatus::pass);

    CHECK_THROWS_AS(necessary_condition(GeneratingVector(3, 2, std::vector<double>(4, 1.0))),
                    InvalidInput);
}

TEST_CASE("necessary condition degenerate degrees") {
    // phi reduces to an odd-degree polynomial once trailing zeros are
    // stripped: unbounded below, must fail with a far-out witness.
    const PsdVerdict odd = necessary_condition(GeneratingVector(2, 2, {1.0, 1.0, 0.0}));
    CHECK(odd.status == PsdStatus::fail_necessary);
    REQUIRE(odd.witness_t.has_value());
    CHECK(polynomial_eval(std::vector<double>{1.0, 2.0}, *odd.witness_t) == odd.margin);
    CHECK(odd.margin < 0.0);

    // identically zero phi passes
    CHECK(necessary_condition(GeneratingVector(2, 2, {0.0, 0.0, 0.0})).status == PsdStatus::pass);

    // constant positive phi passes, constant negative fails
    CHECK(necessary_condition(GeneratingVector(2, 2, {2.0, 0.0, 0.0})).status == PsdStatus::pass);
    CHECK(necessary_condition(GeneratingVector(2, 2, {-2.0, 0.0, 0.0})).status ==
          PsdStatus::fail_necessary);

    // negative even leading coefficient fails
    const PsdVerdict neg = necessary_condition(GeneratingVector(2, 2, {1.0, 0.0, -0.001}));
    CHECK(neg.status == PsdStatus::fail_necessary);
}

TEST_CASE("necessary condition witnesses self-certify") {
    Rng rng(42);
    int failures = 0;
    while (failures < 50) {
        const int m = 2 * rng.uniform_int(1, 3);
        const int n = rng.uniform_int(2, 3);
        GeneratingVector gv(m, n, rng.vector(GeneratingVector::expected_length(m, n)));
        double scale = 0.0;
        for (double c : phi_coefficients(gv).coefficients) scale = std::max(scale, std::fabs(c));
        const double tol = 1e-9 * (1.0 + scale);
        const PsdVerdict verdict = necessary_condition(gv, tol);
        if (verdict.status != PsdStatus::fail_necessary) continue;
        ++failures;
        REQUIRE(verdict.witness_t.has_value());
        REQUIRE(verdict.witness_x.has_value());
        // re-evaluate at the witness: curve parameter and direction agree
        const double via_x = hankel_eval(gv, *verdict.witness_x);
        CHECK(via_x < -tol / 2.0);
        CHECK(via_x == doctest::Approx(verdict.margin).epsilon(1e-9));
    }
}

TEST_CASE("falsifier fixed cases") {
    // all-ones generating vector is ((x1+...+xn)^2)^(m/2) >= 0
    const GeneratingVector ones(4, 2, std::vector<double>(5, 1.0));
    CHECK(falsify_psd(ones, 500, 7).status == PsdStatus::pass);

    // negative diagonal entry caught by the coordinate probes
    const PsdVerdict fail = falsify_psd(GeneratingVector(2, 2, {1.0, 0.0, -1.0}), 10, 7);
    CHECK(fail.status == PsdStatus::fail_witness);
    REQUIRE(fail.witness_x.has_value());
    CHECK(fail.margin == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::fabs((*fail.witness_x)[1]) == 1.0);

    CHECK_THROWS_AS(falsify_psd(GeneratingVector(3, 2, std::vector<double>(4, 1.0)), 10, 7),
                    InvalidInput);
    CHECK_THROWS_AS(falsify_psd(ones, 0, 7), InvalidInput);
}

TEST_CASE("falsifier determinism and self-certification") {
    Rng rng(43);
    int failures = 0;
    int trials = 0;
    while (failures < 30 && trials < 500) {
        ++trials;
        const int m = 2 * rng.uniform_int(1, 3);
        const int n = rng.uniform_int(2, 3);
        GeneratingVector gv(m, n, rng.vector(GeneratingVector::expected_length(m, n)));

        const PsdVerdict first = falsify_psd(gv, 200, 99);
        const PsdVerdict second = falsify_psd(gv, 200, 99);
        CHECK(first.status == second.status);
        CHECK(first.margin == second.margin);

        if (first.status != PsdStatus::fail_witness) continue;
        ++failures;
        REQUIRE(first.witness_x.has_value());
        const double tol = 1e-9 * test_util::norm2(gv.v);
        CHECK(hankel_eval(gv, *first.witness_x) < -tol / 2.0);
    }
    CHECK(failures >= 30);
}

TEST_CASE("sum-of-squares family generating vectors") {
    const GeneratingVector k2 = sos_family_n2(2);
    CHECK(k2.order == 4);
    CHECK(k2.dim == 2);
    CHECK(k2.v == std::vector<double>{1.0, 0.0, -1.0 / 6.0, 0.0, 1.0});

    const GeneratingVector k3 = sos_family_n2(3);
    CHECK(k3.v == std::vector<double>{1.0, 0.0, -1.0 / 15.0, 0.0, -1.0 / 15.0, 0.0, 1.0});

    for (int k = 2; k <= 6; ++k) {
        CHECK(hankel_eval(sos_family_n2(k), std::vector<double>{1.0, 0.0}) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(sos_family_n2(1), InvalidInput);
}

TEST_CASE("sum-of-squares witness identity") {
    Rng rng(44);
    for (int k = 2; k <= 6; ++k) {
        const GeneratingVector gv = sos_family_n2(k);
        CHECK(sos_witness_n2(k, std::vector<double>{1.0, 0.0}) == doctest::Approx(1.0));
        CHECK(sos_witness_n2(k, std::vector<double>{0.0, 1.0}) == doctest::Approx(1.0));
        if (k == 2)
            CHECK(sos_witness_n2(2, std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0));

        for (int trial = 0; trial < 1000; ++trial) {
            const std::vector<double> x = rng.vector(2, -1.5, 1.5);
            check_identity(gv, x, sos_witness_n2(k, x));
        }
    }
}

TEST_CASE("sum-of-squares family is PSD but never strong") {
    Rng rng(45);
    for (int k = 2; k <= 6; ++k) {
        const GeneratingVector gv = sos_family_n2(k);
        CHECK_FALSE(is_strong_hankel(gv, 1e-9).verdict);
        CHECK(falsify_psd(gv, 2000, 5).status == PsdStatus::pass);
        CHECK(necessary_condition(gv).status == PsdStatus::pass);
        // witness form is a sum of squares: nonnegative everywhere
        for (int trial = 0; trial < 100; ++trial)
            CHECK(sos_witness_n2(k, rng.vector(2, -2.0, 2.0)) >= 0.0);
    }
}

TEST_CASE("sextic family generating vector and evaluations") {
    const GeneratingVector gv = sextic_family_n3(2.5);
    CHECK(gv.order == 6);
    CHECK(gv.dim == 3);
    REQUIRE(gv.v.size() == 13);
    CHECK(gv.v[0] == 2.5);
    CHECK(gv.v[6] == 1.0);
    CHECK(gv.v[12] == 2.5);
    for (int k : {1, 2, 3, 4, 5, 7, 8, 9, 10, 11}) CHECK(gv.v[k] == 0.0);

    CHECK(hankel_eval(gv, std::vector<double>{0.0, 1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(hankel_eval(gv, std::vector<double>{1.0, 0.0, 1.0}) ==
          doctest::Approx(2.0 * 2.5 + 20.0));
    CHECK(sextic_witness_n3(2.5, std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
    CHECK(sextic_witness_n3(2.5, std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(2.5));
}

TEST_CASE("sextic witness identity across alpha") {
    Rng rng(46);
    const double alpha_crit = 480.0 * std::sqrt(15.0) + 10.0;
    for (double alpha : {0.0, 10.0, alpha_crit}) {
        const GeneratingVector gv = sextic_family_n3(alpha);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::vector<double> x = rng.vector(3, -1.0, 1.0);
            check_identity(gv, x, sextic_witness_n3(alpha, x));
        }
    }
}

TEST_CASE("sextic family is PSD at the critical alpha and never strong") {
    Rng rng(47);
    const double alpha_crit = 480.0 * std::sqrt(15.0) + 10.0;
    const GeneratingVector gv = sextic_family_n3(alpha_crit);

    for (int trial = 0; trial < 1000; ++trial)
        CHECK(sextic_witness_n3(alpha_crit, rng.vector(3, -2.0, 2.0)) >= 0.0);

    CHECK(falsify_psd(gv, 2000, 11).status == PsdStatus::pass);

    for (double alpha : {0.0, 10.0, alpha_crit}) {
        const auto report = is_strong_hankel(sextic_family_n3(alpha), 1e-9);
        CHECK_FALSE(report.verdict);

        // the certifying direction y gives y^T A y = -2 exactly
        const auto matrix = associated_hankel_matrix(sextic_family_n3(alpha)).to_sym_matrix();
        const std::vector<double> y{0.0, 0.0, 1.0, 0.0, -1.0, 0.0, 0.0};
        CHECK(matrix.quadratic_form(y) == -2.0);
        CHECK(report.min_eigenvalue <= -2.0 / 2.0 + 1e-12);  // Rayleigh bound at ||y||^2 = 2
    }
}

TEST_CASE("moment-built vectors pass every PSD screen") {
    Rng rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 * rng.uniform_int(1, 3);
        const int n = rng.uniform_int(2, 3);
        const GeneratingVector gv = strong_random_gv(rng, m, n);
        CHECK(necessary_condition(gv).status == PsdStatus::pass);
        CHECK(falsify_psd(gv, 200, 1234).status == PsdStatus::pass);
    }
}
