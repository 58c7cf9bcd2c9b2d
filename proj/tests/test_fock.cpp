// Copyright 2026 The Ramancat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ramancat/fock.hpp"

using namespace ramancat;

namespace {

// Independent oracle: <n> of a field state by brute-force sum.
double mean_n_brute_force(const FieldState& f) {
    double acc = 0.0;
    for (int n = 0; n <= f.n_max(); ++n) acc += n * std::norm(f.amps[n]);
    return acc / f.norm_sq();
}

FieldState random_state(std::mt19937& rng, int n_max) {
    std::normal_distribution<double> gauss;
    FieldState f;
    f.amps = Eigen::VectorXcd(n_max + 1);
    for (int n = 0; n <= n_max; ++n) f.amps[n] = Complex(gauss(rng), gauss(rng));
    f.amps /= f.amps.norm();
    return f;
}

}  // namespace

TEST_CASE("vacuum coherent state is the Fock ground state") {
    FieldState f = make_coherent(0.0, 10);
    CHECK(f.n_max() == 10);
    CHECK(std::abs(f.amps[0] - 1.0) < 1e-15);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(f.amps[n]) == 0.0);
}

TEST_CASE("coherent state mean photon number is |alpha|^2") {
    FieldState f = make_coherent(2.0);
    CHECK(std::abs(mean_n_brute_force(f) - 4.0) < 1e-9);
    CHECK(std::abs(f.mean_photon_number() - 4.0) < 1e-9);
}

TEST_CASE("default cutoff keeps truncation leakage below 1e-12") {
    // The tail is worst around |alpha| = 1, so scan the whole range.
    for (double a = 0.25; a <= 10.0; a += 0.25) {
        FieldState f = make_coherent(a);
        CHECK(1.0 - f.norm_sq() < 1e-12);
        CHECK(f.norm_sq() <= 1.0 + 1e-12);
    }
    // Complex amplitude: only |alpha| matters for the tail.
    FieldState g = make_coherent(Complex(3.0, -4.0));
    CHECK(1.0 - g.norm_sq() < 1e-12);
}

TEST_CASE("default cutoff rule matches ceil(|a|^2 + 13 max(|a|, 1))") {
    CHECK(default_cutoff(2.0) == 30);
    CHECK(default_cutoff(0.0) == 13);
    CHECK(default_cutoff(10.0) == 230);
    CHECK(make_coherent(2.0).n_max() == 30);
}

TEST_CASE("amplitudes survive cutoffs beyond n = 150 without overflow") {
    FieldState f = make_coherent(10.0);  // n_max = 230
    CHECK(f.n_max() == 230);
    CHECK(std::isfinite(f.amps[230].real()));
    // Poisson weight at n = 100 for |alpha|^2 = 100, via log-domain oracle.
    const double log_p = -100.0 + 100.0 * std::log(100.0) - std::lgamma(101.0);
    CHECK(std::norm(f.amps[100]) == doctest::Approx(std::exp(log_p)).epsilon(1e-9));
    // Amplitudes of states built at very large |alpha| stay finite too.
    FieldState big = make_coherent(30.0, 1400);
    CHECK(std::isfinite(big.amps[1400].real()));
    CHECK(1.0 - big.norm_sq() < 1e-9);
}

TEST_CASE("undersized cutoff raises a truncation error") {
    CHECK_THROWS_AS(make_coherent(4.0, 4), TruncationError);
    CHECK_THROWS_AS(make_coherent(2.0, -1), ValidationError);
    try {
        make_coherent(4.0, 4);
    } catch (const TruncationError& e) {
        CHECK(e.leakage > 1e-6);
    }
}

TEST_CASE("inner product of a normalized state with itself is 1") {
    std::mt19937 rng(7);
    FieldState f = random_state(rng, 12);
    CHECK(std::abs(inner(f, f) - 1.0) < 1e-12);
}

TEST_CASE("numeric overlap of |1> and |-1> matches exp(-2)") {
    const double expected = std::exp(-2.0);  // 0.1353352832366127
    Complex got = inner(make_coherent(1.0), make_coherent(-1.0));
    CHECK(std::abs(got - expected) < 1e-9);
}

TEST_CASE("vacuum is orthogonal to the one-photon state") {
    FieldState vac = make_coherent(0.0, 10);
    FieldState one;
    one.amps = Eigen::VectorXcd::Zero(11);
    one.amps[1] = 1.0;
    CHECK(std::abs(inner(vac, one)) == 0.0);
}

TEST_CASE("inner is conjugate-symmetric and conjugate-linear in its first slot") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        FieldState f = random_state(rng, 15);
        FieldState g = random_state(rng, 15);
        Complex fg = inner(f, g);
        Complex gf = inner(g, f);
        CHECK(std::abs(fg - std::conj(gf)) < 1e-12);
        const Complex c{0.3, -1.2};
        FieldState cf = f;
        cf.amps *= c;
        CHECK(std::abs(inner(cf, g) - std::conj(c) * fg) < 1e-12);
    }
}

TEST_CASE("inner rejects mismatched cutoffs") {
    CHECK_THROWS_AS(inner(make_coherent(1.0, 10), make_coherent(1.0, 12)),
                    DimensionError);
}

TEST_CASE("analytic overlap: equal amplitudes give exactly 1") {
    for (Complex a : {Complex(0.0), Complex(2.0), Complex(1.5, -2.5)}) {
        CoherentOverlap o = coherent_overlap(a, a);
        CHECK(std::abs(o.value - 1.0) < 1e-15);
        CHECK(std::abs(o.log_abs) < 1e-12);
    }
}

TEST_CASE("analytic overlap of opposite amplitudes is exp(-2|alpha|^2)") {
    CoherentOverlap o2 = coherent_overlap(2.0, -2.0);
    CHECK(std::abs(o2.value) == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
    CHECK(std::abs(o2.value) == doctest::Approx(3.3546262790251185e-4).epsilon(1e-9));
    CHECK(o2.log_abs == doctest::Approx(-8.0).epsilon(1e-12));

    // Order 1e-87 lives only in the log channel.
    CoherentOverlap o10 = coherent_overlap(10.0, -10.0);
    CHECK(o10.log_abs == -200.0);
    CHECK(o10.log10_abs() == doctest::Approx(-200.0 / std::log(10.0)).epsilon(1e-12));
    CHECK(std::abs(o10.value) < 1e-80);
}

TEST_CASE("numeric inner matches the analytic overlap for random amplitudes") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> mag(0.0, 2.5);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int trial = 0; trial < 25; ++trial) {
        Complex a = std::polar(mag(rng), ang(rng));
        Complex b = std::polar(mag(rng), ang(rng));
        const int n_max = std::max(default_cutoff(a), default_cutoff(b));
        Complex numeric = inner(make_coherent(a, n_max), make_coherent(b, n_max));
        CHECK(std::abs(numeric - coherent_overlap(a, b).value) < 1e-9);
    }
}

TEST_CASE("zero phase rotation is the identity") {
    FieldState f = make_coherent(1.5);
    FieldState g = apply_number_phase(f, 0.0);
    CHECK((f.amps - g.amps).norm() == 0.0);
}

TEST_CASE("phase pi maps |2> to |-2>") {
    const double pi = std::acos(-1.0);
    FieldState rotated = apply_number_phase(make_coherent(2.0), pi);
    CHECK(fidelity_defect(rotated, make_coherent(-2.0, rotated.n_max())) < 1e-10);
    CHECK(rotated.norm_sq() == doctest::Approx(make_coherent(2.0).norm_sq()).epsilon(1e-15));
}

TEST_CASE("phase pi/2 maps |1> to |-i>") {
    const double pi = std::acos(-1.0);
    FieldState rotated = apply_number_phase(make_coherent(1.0), pi / 2.0);
    FieldState target = make_coherent(Complex(0.0, -1.0), rotated.n_max());
    CHECK(fidelity_defect(rotated, target) < 1e-10);
}

TEST_CASE("number-phase rotations compose additively") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(-8.0, 8.0);
    FieldState f = random_state(rng, 20);
    for (int trial = 0; trial < 10; ++trial) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        FieldState chained = apply_number_phase(apply_number_phase(f, t1), t2);
        FieldState direct = apply_number_phase(f, t1 + t2);
        CHECK((chained.amps - direct.amps).norm() < 1e-12);
    }
}

TEST_CASE("fidelity of a state with itself is 1") {
    FieldState f = make_coherent(1.7);
    CHECK(fidelity(f, f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity of |1> against |-1> is exp(-4)") {
    // Square of the analytic overlap magnitude.
    const double expected = std::exp(-4.0);  // 0.018315638888734179
    CHECK(fidelity(make_coherent(1.0), make_coherent(-1.0)) ==
          doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("fidelity ignores global scale and phase of either argument") {
    std::mt19937 rng(41);
    FieldState f = random_state(rng, 18);
    FieldState g = random_state(rng, 18);
    const double base = fidelity(f, g);
    for (Complex c : {Complex(2.0, 0.0), Complex(0.0, -0.4), Complex(-1.3, 2.2)}) {
        FieldState scaled = g;
        scaled.amps *= c;
        CHECK(fidelity(f, scaled) == doctest::Approx(base).epsilon(1e-12));
        CHECK(fidelity(scaled, f) == doctest::Approx(base).epsilon(1e-12));
        FieldState cf = f;
        cf.amps *= c;
        CHECK(fidelity(cf, cf) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("fidelity rejects zero-norm states") {
    FieldState ref = make_coherent(1.0);
    FieldState zero;
    zero.amps = Eigen::VectorXcd::Zero(ref.amps.size());
    CHECK_THROWS_AS(fidelity(zero, ref), DegenerateStateError);
    CHECK_THROWS_AS(fidelity(ref, zero), DegenerateStateError);
}

TEST_CASE("fidelity defect agrees with 1 - fidelity and resolves tiny defects") {
    std::mt19937 rng(5);
    FieldState f = random_state(rng, 14);
    FieldState g = random_state(rng, 14);
    CHECK(fidelity_defect(f, g) == doctest::Approx(1.0 - fidelity(f, g)).epsilon(1e-10));
    CHECK(fidelity_defect(f, f) < 1e-28);

    // Perturb f by a tiny orthogonal component; the defect must track its
    // squared size even when 1 - fidelity rounds to zero.
    FieldState h = random_state(rng, 14);
    Complex overlap = inner(f, h);
    Eigen::VectorXcd perp = h.amps - overlap * f.amps;
    perp /= perp.norm();
    const double eps = 1e-9;
    FieldState fp = f;
    fp.amps = (f.amps + eps * perp).normalized();
    const double defect = fidelity_defect(fp, f);
    CHECK(defect == doctest::Approx(eps * eps).epsilon(1e-3));
}
