#include <catch_amalgamated.hpp>

#include "hyperlin/eigen.hpp"
#include "hyperlin/rng.hpp"

#include <cmath>
#include <vector>

using namespace hyperlin;

namespace {

gmatrixd sa2(double x11, double x22, double x12, double y12) {
    return gmatrixd{{hyperd(x11), hyperd(x12, y12)}, {hyperd(x12, -y12), hyperd(x22)}};
}

gmatrixd random_sa2(splitmix64& rng) {
    return sa2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
               rng.uniform(-2.0, 2.0));
}

// Independent brute-force oracle: sample || det(A - (u + jv) I) || on a
// lattice, collect every local minimum that dips under a threshold, and
// compare that zero set against a list of eigenvalue candidates.
struct scan_result {
    std::vector<hyperd> zeros;
    double lattice_step;
};

scan_result scan_zero_set(const gmatrixd& A, double center, double width, int cells,
                          double threshold) {
    const double step = 2.0 * width / cells;
    std::vector<std::vector<double>> r(cells + 1, std::vector<double>(cells + 1));
    for (int iu = 0; iu <= cells; ++iu)
        for (int iv = 0; iv <= cells; ++iv) {
            const hyperd lambda(center - width + iu * step, -width + iv * step);
            r[iu][iv] = char_residual(A, lambda);
        }
    scan_result out;
    out.lattice_step = step;
    for (int iu = 0; iu <= cells; ++iu)
        for (int iv = 0; iv <= cells; ++iv) {
            if (r[iu][iv] > threshold) continue;
            bool is_min = true;
            for (int du = -1; du <= 1 && is_min; ++du)
                for (int dv = -1; dv <= 1 && is_min; ++dv) {
                    const int nu = iu + du, nv = iv + dv;
                    if (nu < 0 || nv < 0 || nu > cells || nv > cells) continue;
                    if (r[nu][nv] < r[iu][iv]) is_min = false;
                }
            if (is_min) {
                out.zeros.emplace_back(center - width + iu * step, -width + iv * step);
            }
        }
    return out;
}

bool zero_sets_match(const scan_result& scan, const std::vector<hyperd>& eigenvalues) {
    const double radius = 3.0 * scan.lattice_step;
    for (const auto& z : scan.zeros) {
        bool near = false;
        for (const auto& ev : eigenvalues) near = near || norm(z - ev) <= radius;
        if (!near) return false;
    }
    for (const auto& ev : eigenvalues) {
        bool found = false;
        for (const auto& z : scan.zeros) found = found || norm(z - ev) <= radius;
        if (!found) return false;
    }
    return true;
}

} // namespace

TEST_CASE("positive discriminant: four eigenvalues, two of them real", "[eigen]") {
    const gmatrixd A = sa2(2.0, 0.0, 1.0, 1.0);
    const eigen_result er = eigen_sa2(A);
    CHECK(er.discriminant == 4.0);
    REQUIRE(er.classification == sa2_class::two_real_plus_two_hyperbolic);
    REQUIRE(er.eigenvalues.size() == 4);
    CHECK(er.eigenvalues[0] == hyperd(2.0));
    CHECK(er.eigenvalues[1] == hyperd(0.0));
    CHECK(er.eigenvalues[2] == hyperd(1.0, 1.0));
    CHECK(er.eigenvalues[3] == hyperd(1.0, -1.0));
    for (const auto& ev : er.eigenvalues) CHECK(char_residual(A, ev) <= 1e-12);
}

TEST_CASE("zero discriminant: one real eigenvalue", "[eigen]") {
    const gmatrixd A = sa2(0.0, 0.0, 1.0, 1.0);
    const eigen_result er = eigen_sa2(A);
    CHECK(er.discriminant == 0.0);
    REQUIRE(er.classification == sa2_class::one_real);
    REQUIRE(er.eigenvalues.size() == 1);
    CHECK(er.eigenvalues[0] == hyperd(0.0));
}

TEST_CASE("negative discriminant: no eigenvalues, Hermitian relabeling keeps +-1", "[eigen]") {
    const gmatrixd A = sa2(0.0, 0.0, 0.0, 1.0);
    const eigen_result er = eigen_sa2(A);
    CHECK(er.discriminant == -4.0);
    CHECK(er.classification == sa2_class::no_eigenvalues);
    CHECK(er.eigenvalues.empty());

    const auto [lo, hi] = hermitian_eigen_2x2(t_map(A));
    CHECK(lo == Catch::Approx(-1.0).margin(1e-14));
    CHECK(hi == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("non-self-adjoint input is rejected", "[eigen]") {
    const gmatrixd bad{{hyperd(0.0), hyperd(0.0, 1.0)}, {hyperd(0.0, 1.0), hyperd(0.0)}};
    CHECK_THROWS_AS(eigen_sa2(bad), not_self_adjoint_error);
    CHECK_THROWS_AS(eigen_sa2(gmatrixd::identity(3)), dimension_mismatch_error);
}

TEST_CASE("classification matches the discriminant sign over 1e4 matrices", "[eigen]") {
    splitmix64 rng(41);
    int four = 0, one = 0, none = 0;
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const gmatrixd A = random_sa2(rng);
        const eigen_result er = eigen_sa2(A);
        const double scale = 1.0 + norm(A) * norm(A);
        const double band = 1e-10 * scale;
        if (std::fabs(er.discriminant) <= band) {
            REQUIRE(er.classification == sa2_class::one_real);
        } else if (er.discriminant > 0.0) {
            REQUIRE(er.classification == sa2_class::two_real_plus_two_hyperbolic);
            REQUIRE(er.eigenvalues.size() == 4);
        } else {
            REQUIRE(er.classification == sa2_class::no_eigenvalues);
            REQUIRE(er.eigenvalues.empty());
        }
        switch (er.classification) {
            case sa2_class::two_real_plus_two_hyperbolic: ++four; break;
            case sa2_class::one_real: ++one; break;
            case sa2_class::no_eigenvalues: ++none; break;
        }
        for (const auto& ev : er.eigenvalues) {
            worst = std::max(worst, char_residual(A, ev) / scale);
        }
    }
    CHECK(worst <= 1e-10);
    // both generic classes actually occur
    CHECK(four > 1000);
    CHECK(none > 1000);
    (void)one;
}

TEST_CASE("grid scan oracle agrees on 100 instances", "[eigen]") {
    splitmix64 rng(42);
    for (int k = 0; k < 100; ++k) {
        gmatrixd A = random_sa2(rng);
        while (std::fabs(eigen_sa2(A).discriminant) < 0.5) A = random_sa2(rng);
        const eigen_result er = eigen_sa2(A);
        const double tr = A(0, 0).re + A(1, 1).re;
        const double width = 1.5 * std::sqrt(std::fabs(er.discriminant)) + 0.5;
        const double step = 2.0 * width / 200;
        if (er.classification == sa2_class::no_eigenvalues) {
            const scan_result scan = scan_zero_set(A, tr / 2.0, width, 200,
                                                   0.9 * std::fabs(er.discriminant) / 4.0);
            REQUIRE(scan.zeros.empty());
        } else {
            const double root = std::sqrt(er.discriminant);
            const scan_result scan =
                scan_zero_set(A, tr / 2.0, width, 200, 3.0 * step * (root + step));
            REQUIRE(zero_sets_match(scan, er.eigenvalues));
        }
    }
}

TEST_CASE("grid scan oracle on the worked examples", "[eigen]") {
    {
        const gmatrixd A = sa2(2.0, 0.0, 1.0, 1.0);
        const scan_result scan = scan_zero_set(A, 1.0, 3.0, 200, 3.0 * 0.03 * (2.0 + 0.03));
        CHECK(zero_sets_match(scan, eigen_sa2(A).eigenvalues));
    }
    {
        const gmatrixd A = sa2(0.0, 0.0, 0.0, 1.0);
        const scan_result scan = scan_zero_set(A, 0.0, 3.0, 200, 0.9);
        CHECK(scan.zeros.empty());
    }
}

TEST_CASE("relabeled spectra differ exactly when y12 is nonzero", "[eigen]") {
    splitmix64 rng(43);
    int compared = 0;
    while (compared < 10000) {
        gmatrixd A = random_sa2(rng);
        eigen_result er = eigen_sa2(A);
        if (er.classification != sa2_class::two_real_plus_two_hyperbolic) continue;
        const auto [lo, hi] = hermitian_eigen_2x2(t_map(A));
        const double real_hi = er.eigenvalues[0].re;
        const double real_lo = er.eigenvalues[1].re;
        if (A(0, 1).hy != 0.0) {
            // the complex discriminant adds 4 y12^2 instead of subtracting it
            REQUIRE(hi - real_hi > 0.0);
            REQUIRE(real_lo - lo > 0.0);
        }
        ++compared;
    }
    // y12 = 0 collapses both formulas to the same doubles
    for (int k = 0; k < 100; ++k) {
        const gmatrixd A = sa2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                               rng.uniform(-2.0, 2.0), 0.0);
        const eigen_result er = eigen_sa2(A);
        if (er.classification != sa2_class::two_real_plus_two_hyperbolic) continue;
        const auto [lo, hi] = hermitian_eigen_2x2(t_map(A));
        REQUIRE(hi == er.eigenvalues[0].re);
        REQUIRE(lo == er.eigenvalues[1].re);
    }
}

TEST_CASE("near-zero discriminants collapse to the single-eigenvalue class", "[eigen]") {
    const gmatrixd A = sa2(1.0, 1.0, 1.0, 1.0 + 1e-13);
    const eigen_result er = eigen_sa2(A);
    CHECK(er.classification == sa2_class::one_real);
}
