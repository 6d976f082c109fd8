#include <doctest.h>

#include <cmath>

#include "elast/rng.hpp"
#include "elast/tensor.hpp"

using namespace elast;

namespace {

ElasticityTensor iso_lame(double lambda, double mu) {
    return from_class(SymmetryClass::isotropic_lame(lambda, mu));
}

ElasticityTensor random_tensor(const CounterRng& rng, std::uint64_t stream, double lo = -1.0,
                               double hi = 1.0) {
    VoigtMatrix v;
    std::uint64_t c = stream * 64;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) v.m[a][b] = v.m[b][a] = rng.uniform(c++, lo, hi);
    return from_voigt(v);
}

}  // namespace

TEST_CASE("voigt index map follows the standard pair compression") {
    CHECK(voigt_index(0, 0) == 0);
    CHECK(voigt_index(1, 1) == 1);
    CHECK(voigt_index(2, 2) == 2);
    CHECK(voigt_index(1, 2) == 3);
    CHECK(voigt_index(2, 1) == 3);
    CHECK(voigt_index(0, 2) == 4);
    CHECK(voigt_index(0, 1) == 5);
}

TEST_CASE("from_class isotropic with zero shear is the pure volumetric template") {
    const ElasticityTensor t = from_class(SymmetryClass::isotropic(1.0, 0.0));
    const VoigtMatrix v = to_voigt(t);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(v.m[a][b] == doctest::Approx(1.0));
    for (int a = 3; a < 6; ++a) CHECK(v.m[a][a] == doctest::Approx(0.0));
}

TEST_CASE("from_class cubic template") {
    const ElasticityTensor t = from_class(SymmetryClass::cubic(3, 1, 1));
    const VoigtMatrix v = to_voigt(t);
    for (int a = 0; a < 3; ++a) {
        CHECK(v.m[a][a] == 3.0);
        CHECK(v.m[a + 3][a + 3] == 1.0);
        for (int b = 0; b < 3; ++b)
            if (a != b) CHECK(v.m[a][b] == 1.0);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) CHECK(v.m[a][b] == 0.0);
}

TEST_CASE("from_class transverse derives c12 = c11 - 2 c66") {
    const ElasticityTensor t = from_class(SymmetryClass::transverse(3, 3, 1, 1, 1));
    CHECK(to_voigt(t).m[0][1] == doctest::Approx(1.0));
}

TEST_CASE("from_class rejects wrong parameter counts") {
    SymmetryClass bad{Symmetry::cubic, {1.0, 2.0}};
    CHECK_THROWS_AS(from_class(bad), std::invalid_argument);
    CHECK_THROWS_AS(from_class(SymmetryClass::general()), std::invalid_argument);
}

TEST_CASE("voigt round trip is the identity on all 21 components") {
    const CounterRng rng(42);
    for (int s = 0; s < 20; ++s) {
        const ElasticityTensor t = random_tensor(rng, s);
        CHECK(from_voigt(to_voigt(t)) == t);
    }
    const ElasticityTensor zero;
    CHECK(from_voigt(to_voigt(zero)) == zero);
    CHECK(to_voigt(from_class(SymmetryClass::isotropic(1, 1))).m[3][3] == doctest::Approx(1.0));
}

TEST_CASE("from_voigt symmetrizes small noise and rejects bad data") {
    VoigtMatrix v = to_voigt(from_class(SymmetryClass::cubic(3, 1, 1)));
    v.m[0][1] += 1e-12;
    const ElasticityTensor t = from_voigt(v);
    CHECK(t.voigt(0, 1) == doctest::Approx(1.0 + 5e-13));
    v.m[0][1] += 1.0;  // way beyond tolerance
    CHECK_THROWS_AS(from_voigt(v), std::invalid_argument);
}

TEST_CASE("mandel scaling per block") {
    const ElasticityTensor iso = from_class(SymmetryClass::isotropic(1, 1));
    CHECK(to_mandel(iso).m[3][3] == doctest::Approx(2.0));  // 2 * C2323

    VoigtMatrix v{};  // only C1123 set
    v.m[0][3] = v.m[3][0] = 1.0;
    const MandelMatrix m = to_mandel(from_voigt(v));
    CHECK(m.m[0][3] == doctest::Approx(kSqrt2));
    CHECK(m.m[3][0] == doctest::Approx(kSqrt2));

    const MandelMatrix z = to_mandel(ElasticityTensor{});
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(z.m[a][b] == 0.0);
}

TEST_CASE("contract4 on the isotropic template") {
    const ElasticityTensor t = iso_lame(1.0, 1.0);
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0};
    CHECK(contract4(t, e1, e1, e1, e1) == doctest::Approx(3.0));  // lambda + 2 mu
    CHECK(contract4(t, e1, e2, e1, e2) == doctest::Approx(1.0));  // mu
    CHECK(contract4(t, e1, e2, Vec3{0, 0, 0}, e2) == 0.0);
}

TEST_CASE("contract4 is multilinear") {
    const CounterRng rng(7);
    const ElasticityTensor t = random_tensor(rng, 1);
    const Vec3 w = rng.unit_vec3(100), x = rng.unit_vec3(101), y = rng.unit_vec3(102),
               z = rng.unit_vec3(103);
    const double base = contract4(t, w, x, y, z);
    CHECK(contract4(t, scaled(w, 2.5), x, y, z) == doctest::Approx(2.5 * base));
    const Vec3 w2 = rng.unit_vec3(104);
    const Vec3 sum{w[0] + w2[0], w[1] + w2[1], w[2] + w2[2]};
    CHECK(contract4(t, sum, x, y, z) ==
          doctest::Approx(base + contract4(t, w2, x, y, z)));
}

TEST_CASE("f_quadform examples and isotropic closed form") {
    const ElasticityTensor t = iso_lame(1.0, 1.0);
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(f_quadform(t, e1, e1) == doctest::Approx(3.0));
    CHECK(f_quadform(t, e1, e2) == doctest::Approx(1.0));

    const ElasticityTensor ortho =
        from_class(SymmetryClass::orthotropic({3, 2.5, 2, 0.4, 0.7, 0.6, 0.1, 0.2, 0.3}));
    CHECK(f_quadform(ortho, e1, e3) == doctest::Approx(0.7));  // c55 alone survives

    const CounterRng rng(11);
    for (int s = 0; s < 50; ++s) {
        const double lambda = rng.uniform(900 + 2 * s, -1.0, 2.0);
        const double mu = rng.uniform(901 + 2 * s, 0.1, 2.0);
        const ElasticityTensor iso = iso_lame(lambda, mu);
        const Vec3 x = rng.unit_vec3(200 + 2 * s), y = rng.unit_vec3(201 + 2 * s);
        const double xy = dot(x, y);
        const double expected = (lambda + 2 * mu) * xy * xy + mu * (1.0 - xy * xy);
        CHECK(f_quadform(iso, x, y) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("f_quadform exchange symmetry and homogeneity") {
    const CounterRng rng(13);
    for (int s = 0; s < 30; ++s) {
        const ElasticityTensor t = random_tensor(rng, 10 + s);
        const Vec3 x = rng.unit_vec3(300 + 2 * s), y = rng.unit_vec3(301 + 2 * s);
        const double f = f_quadform(t, x, y);
        CHECK(f_quadform(t, y, x) == doctest::Approx(f).epsilon(1e-12));
        const double a = 1.7, b = -0.6;
        CHECK(f_quadform(t, scaled(x, a), scaled(y, b)) ==
              doctest::Approx(a * a * b * b * f).epsilon(1e-12));
    }
}

TEST_CASE("acoustic-type matrices") {
    const ElasticityTensor iso = iso_lame(1.0, 1.0);
    const Mat3 a = a_matrix(iso, Vec3{1, 0, 0});
    CHECK(a[0][0] == doctest::Approx(3.0));
    CHECK(a[1][1] == doctest::Approx(1.0));
    CHECK(a[2][2] == doctest::Approx(1.0));
    CHECK(a[0][1] == doctest::Approx(0.0));

    const Mat3 ac = a_matrix(from_class(SymmetryClass::cubic(3, 1, 1)), Vec3{0, 0, 1});
    CHECK(ac[0][0] == doctest::Approx(1.0));
    CHECK(ac[1][1] == doctest::Approx(1.0));
    CHECK(ac[2][2] == doctest::Approx(3.0));

    const CounterRng rng(17);
    for (int s = 0; s < 30; ++s) {
        const ElasticityTensor t = random_tensor(rng, 40 + s);
        const Vec3 x = rng.unit_vec3(400 + 2 * s), y = rng.unit_vec3(401 + 2 * s);
        const Mat3 A = a_matrix(t, y);
        const Mat3 B = b_matrix(t, x);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(A[i][j] == doctest::Approx(A[j][i]).epsilon(1e-14));
                CHECK(B[i][j] == doctest::Approx(B[j][i]).epsilon(1e-14));
            }
        const double f = f_quadform(t, x, y);
        CHECK(quad_form(A, x) == doctest::Approx(f).epsilon(1e-12));
        CHECK(quad_form(B, y) == doctest::Approx(f).epsilon(1e-12));
    }
}

TEST_CASE("detect_class recovers constructed classes") {
    SUBCASE("isotropic exact") {
        const SymmetryClass sc = detect_class(from_class(SymmetryClass::isotropic(1, 1)), 1e-8);
        CHECK(sc.tag == Symmetry::isotropic);
        CHECK(sc.params[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sc.params[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("cubic with a perturbed entry inside tolerance") {
        VoigtMatrix v = to_voigt(from_class(SymmetryClass::cubic(3, 1, 1)));
        v.m[0][0] += 1e-12;
        v.m[0][0] = v.m[0][0];
        const SymmetryClass sc = detect_class(from_voigt(v), 1e-8);
        CHECK(sc.tag == Symmetry::cubic);
    }
    SUBCASE("dense random matrix falls back to general") {
        const CounterRng rng(23);
        for (int s = 0; s < 10; ++s) {
            const ElasticityTensor t = random_tensor(rng, 70 + s);
            CHECK(detect_class(t, 1e-8).tag == Symmetry::general);
        }
    }
    SUBCASE("round trip recovers tag and parameters to 1e-12") {
        const CounterRng rng(29);
        std::uint64_t c = 0;
        auto check_roundtrip = [&](const SymmetryClass& sc) {
            const SymmetryClass got = detect_class(from_class(sc), 1e-10);
            REQUIRE(got.tag == sc.tag);
            REQUIRE(got.params.size() == sc.params.size());
            for (std::size_t i = 0; i < sc.params.size(); ++i)
                CHECK(got.params[i] ==
                      doctest::Approx(sc.params[i]).epsilon(1e-12));
        };
        for (int s = 0; s < 20; ++s) {
            check_roundtrip(SymmetryClass::isotropic(rng.uniform(c++, 0.5, 3),
                                                     rng.uniform(c++, 0.5, 3)));
            check_roundtrip(SymmetryClass::cubic(rng.uniform(c++, 2, 4), rng.uniform(c++, 0.5, 2),
                                                 rng.uniform(c++, -0.5, 1)));
            check_roundtrip(SymmetryClass::transverse(rng.uniform(c++, 2, 4),
                                                      rng.uniform(c++, 2, 4),
                                                      rng.uniform(c++, 0.3, 1),
                                                      rng.uniform(c++, 0.4, 1.2),
                                                      rng.uniform(c++, -0.5, 1)));
            check_roundtrip(SymmetryClass::tetragonal(
                rng.uniform(c++, 2, 4), rng.uniform(c++, 2, 4), rng.uniform(c++, 0.3, 1),
                rng.uniform(c++, 0.4, 1.2), rng.uniform(c++, -0.5, 1),
                rng.uniform(c++, -0.5, 1)));
            check_roundtrip(SymmetryClass::orthotropic(
                {rng.uniform(c++, 2, 4), rng.uniform(c++, 2.5, 4.5), rng.uniform(c++, 1.5, 3),
                 rng.uniform(c++, 0.3, 1), rng.uniform(c++, 0.35, 1.1), rng.uniform(c++, 0.4, 1.2),
                 rng.uniform(c++, -0.4, 0.4), rng.uniform(c++, -0.4, 0.4),
                 rng.uniform(c++, -0.4, 0.4)}));
        }
    }
}

namespace {

// second, test-local evaluation of the engineering-constant relations
std::array<double, 5> transverse_from_engineering_reference(const EngineeringConstants& ec) {
    const double g =
        1.0 / (1.0 - ec.nu_p * ec.nu_p - 2.0 * ec.nu_tp * ec.nu_pt -
               2.0 * ec.nu_p * ec.nu_pt * ec.nu_tp);
    return {ec.ep * (1.0 - ec.nu_pt * ec.nu_tp) * g, ec.et * (1.0 - ec.nu_p * ec.nu_p) * g,
            ec.mu_t, ec.ep / (2.0 + 2.0 * ec.nu_p), ec.ep * ec.nu_tp * (1.0 + ec.nu_p) * g};
}

}  // namespace

TEST_CASE("engineering constants to transverse parameters") {
    SUBCASE("all Poisson ratios zero") {
        const SymmetryClass sc =
            engineering_to_transverse({2.0, 3.0, 0.0, 0.0, 0.0, 0.9});
        CHECK(sc.params[0] == doctest::Approx(2.0));
        CHECK(sc.params[1] == doctest::Approx(3.0));
        CHECK(sc.params[2] == doctest::Approx(0.9));
        CHECK(sc.params[3] == doctest::Approx(1.0));
        CHECK(sc.params[4] == doctest::Approx(0.0));
    }
    SUBCASE("in-plane shear modulus Ep / 3 at nu_p = 0.5") {
        const SymmetryClass sc =
            engineering_to_transverse({2.0, 3.0, 0.5, 0.0, 0.0, 0.9});
        CHECK(sc.params[3] == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("handbook-like inputs against the reference evaluation") {
        const CounterRng rng(31);
        std::uint64_t c = 0;
        for (int s = 0; s < 40; ++s) {
            EngineeringConstants ec{rng.uniform(c++, 50, 200), rng.uniform(c++, 5, 40),
                                    rng.uniform(c++, 0.05, 0.45), rng.uniform(c++, 0.02, 0.4),
                                    rng.uniform(c++, 0.02, 0.4), rng.uniform(c++, 2, 20)};
            const SymmetryClass sc = engineering_to_transverse(ec);
            const auto ref = transverse_from_engineering_reference(ec);
            for (int i = 0; i < 5; ++i)
                CHECK(sc.params[i] == doctest::Approx(ref[i]).epsilon(1e-12));
        }
    }
    SUBCASE("degenerate gamma denominator") {
        // nu_p = 1 makes 1 - nu_p^2 - ... vanish when the others are zero
        CHECK_THROWS_AS(engineering_to_transverse({2.0, 3.0, 1.0, 0.0, 0.0, 0.9}),
                        std::domain_error);
    }
}

TEST_CASE("rotation preserves symmetry structure of the stored tensor") {
    const CounterRng rng(37);
    const ElasticityTensor t = random_tensor(rng, 90);
    const Mat3 q = rng.rotation(5);
    const ElasticityTensor r = rotate(t, q);
    // rotating back recovers the original
    Mat3 qt{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) qt[i][j] = q[j][i];
    const ElasticityTensor back = rotate(r, qt);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(back.voigt(a, b) == doctest::Approx(t.voigt(a, b)).epsilon(1e-10));
}
