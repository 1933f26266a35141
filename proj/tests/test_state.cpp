#include <algorithm>
#include <array>
#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "sym3q/error.hpp"
#include "sym3q/state.hpp"

using namespace sym3q;
using sym3q::testing::Gen;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

int weight(int i, int j, int k) { return i + j + k; }

// Brute-force symmetrizer: average v1 (x) v2 (x) v3 over all party orderings.
FullState3 symmetrize(const Spinor& a, const Spinor& b, const Spinor& c) {
  const std::array<Spinor, 3> v = {a, b, c};
  std::array<int, 3> perm = {0, 1, 2};
  FullState3::Storage out{};
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          out[4 * i + 2 * j + k] += v[perm[0]][i] * v[perm[1]][j] * v[perm[2]][k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FullState3::normalize(out);
}

}  // namespace

TEST_CASE("dicke_to_full on basis states") {
  const FullState3 zero = dicke_to_full(SymmetricState({1.0, 0.0, 0.0, 0.0}));
  for (int n = 0; n < 8; ++n) CHECK(std::abs(zero.data()[n] - Complex(n == 0 ? 1.0 : 0.0)) < 1e-15);

  const FullState3 one = dicke_to_full(SymmetricState({0.0, 1.0, 0.0, 0.0}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(one(i, j, k) - Complex(weight(i, j, k) == 1 ? kInvSqrt3 : 0.0)) < 1e-15);

  const FullState3 ghz = dicke_to_full(ghz_state());
  CHECK(std::abs(ghz(0, 0, 0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(ghz(1, 1, 1) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(ghz(0, 1, 1)) < 1e-15);
}

TEST_CASE("full_to_dicke inverts and rejects asymmetric tensors") {
  FullState3::Storage g{};
  g[0] = kInvSqrt2;
  g[7] = kInvSqrt2;
  const SymmetricState s = full_to_dicke(FullState3(g));
  CHECK(std::abs(s[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s[3] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s[1]) < 1e-15);

  FullState3::Storage bad{};
  bad[1] = 1.0;  // |001> alone
  try {
    full_to_dicke(FullState3(bad));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }

  FullState3::Storage w{};
  w[1] = w[2] = w[4] = kInvSqrt3;
  const SymmetricState ws = full_to_dicke(FullState3(w));
  CHECK(std::abs(ws[1] - 1.0) < 1e-15);
  CHECK(std::abs(ws[0]) + std::abs(ws[2]) + std::abs(ws[3]) < 1e-15);
}

TEST_CASE("canonical_to_full special points") {
  const FullState3 f0 = canonical_to_full(CanonicalParams(0.0, 1.3, 4.0));
  CHECK(std::abs(f0(0, 0, 0) - 1.0) < 1e-15);

  const FullState3 near_ghz = canonical_to_full(CanonicalParams(0.999, kPi, 0.0));
  CHECK(std::abs(std::abs(near_ghz(0, 0, 0)) - kInvSqrt2) < 5e-4);
  CHECK(std::abs(std::abs(near_ghz(1, 1, 1)) - kInvSqrt2) < 5e-4);

  // y = 1/2, theta = pi/2, phi = 0, expanded by hand.
  const double h = std::cos(kPi / 4.0);  // cos = sin at pi/4
  const double n2 = 1.25 + h * h * h;
  const double a = 1.0 / std::sqrt(n2);
  const SymmetricState s = full_to_dicke(canonical_to_full(CanonicalParams(0.5, kPi / 2.0, 0.0)));
  CHECK(std::abs(s[0] - a * (1.0 + 0.5 * h * h * h)) < 1e-14);
  CHECK(std::abs(s[1] - std::sqrt(3.0) * a * 0.5 * h * h * h) < 1e-14);
  CHECK(std::abs(s[2] - std::sqrt(3.0) * a * 0.5 * h * h * h) < 1e-14);
  CHECK(std::abs(s[3] - a * 0.5 * h * h * h) < 1e-14);
  CHECK(std::abs(CanonicalParams(0.5, kPi / 2.0, 0.0).norm_squared() - n2) < 1e-14);
}

TEST_CASE("canonical params are range checked") {
  CHECK_THROWS_AS(static_cast<void>(CanonicalParams(1.0, 1.0, 1.0)), Error);
  CHECK_THROWS_AS(static_cast<void>(CanonicalParams(-0.1, 1.0, 1.0)), Error);
  CHECK_THROWS_AS(static_cast<void>(CanonicalParams(0.5, 3.2, 1.0)), Error);
  CHECK_THROWS_AS(static_cast<void>(CanonicalParams(0.5, 1.0, 2.0 * kPi)), Error);
  CHECK_THROWS_AS(static_cast<void>(DegenerateParams(0.0)), Error);
  CHECK_NOTHROW(static_cast<void>(DegenerateParams(kPi)));
}

TEST_CASE("degenerate_to_full special points") {
  const SymmetricState w = full_to_dicke(degenerate_to_full(DegenerateParams(kPi)));
  CHECK(std::abs(std::abs(w[1]) - 1.0) < 1e-14);

  const FullState3 small = degenerate_to_full(DegenerateParams(1e-6));
  CHECK(std::abs(small(0, 0, 0)) > 1.0 - 1e-10);

  // theta = pi/2: proportional to (3 cos(pi/4), sqrt(3) sin(pi/4), 0, 0).
  const double c = std::cos(kPi / 4.0);
  const double s = std::sin(kPi / 4.0);
  const double n = std::sqrt(9.0 * c * c + 3.0 * s * s);
  const SymmetricState d = full_to_dicke(degenerate_to_full(DegenerateParams(kPi / 2.0)));
  const Complex phase = d[0] / std::abs(d[0]);
  CHECK(std::abs(d[0] / phase - 3.0 * c / n) < 1e-14);
  CHECK(std::abs(d[1] / phase - std::sqrt(3.0) * s / n) < 1e-14);
  CHECK(std::abs(d[2]) + std::abs(d[3]) < 1e-14);

  const Spinor z = {1.0, 0.0};
  const FullState3 brute = symmetrize(z, z, polar_spinor(kPi / 2.0));
  CHECK(equal_up_to_global_phase(brute, degenerate_to_full(DegenerateParams(kPi / 2.0)), 1e-13));
}

TEST_CASE("equal_up_to_global_phase") {
  Gen gen(11);
  const FullState3 psi = gen.random_full();
  FullState3::Storage rotated = psi.data();
  for (auto& z : rotated) z *= std::polar(1.0, kPi / 3.0);
  CHECK(equal_up_to_global_phase(psi, FullState3(rotated), 1e-9));
  CHECK_FALSE(equal_up_to_global_phase(dicke_to_full(zero_state()), dicke_to_full(ghz_state()), 1e-9));
  FullState3::Storage nudged = psi.data();
  nudged[3] += 1e-12;
  CHECK(equal_up_to_global_phase(psi, FullState3(nudged), 1e-9));
}

TEST_CASE("normalize renormalizes and reports the factor") {
  double factor = 0.0;
  const SymmetricState s = SymmetricState::normalize({2.0, 0.0, 0.0, 0.0}, &factor);
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  CHECK(factor == doctest::Approx(0.5));
  CHECK_THROWS_AS(SymmetricState::normalize({0.0, 0.0, 0.0, 0.0}), Error);
}

TEST_CASE("fix_gauge makes the first nonzero amplitude real positive") {
  const SymmetricState s =
      SymmetricState::normalize({0.0, Complex(0.3, 0.4), Complex(0.1, -0.2), 0.5}).fix_gauge();
  CHECK(std::abs(s[1].imag()) < 1e-15);
  CHECK(s[1].real() > 0.0);
}

TEST_CASE("property: Dicke roundtrip and normalization") {
  Gen gen(1);
  for (int trial = 0; trial < 500; ++trial) {
    const SymmetricState s = gen.symmetric_state();
    double n2 = 0.0;
    for (int w = 0; w < 4; ++w) n2 += std::norm(s[w]);
    CHECK(std::abs(n2 - 1.0) < 1e-12);
    const SymmetricState back = full_to_dicke(dicke_to_full(s));
    for (int w = 0; w < 4; ++w) CHECK(std::abs(back[w] - s[w]) < 1e-14);
  }
}

TEST_CASE("property: canonical states are symmetric, normalized, with the stated norm") {
  Gen gen(2);
  for (int trial = 0; trial < 500; ++trial) {
    const CanonicalParams p = gen.canonical_params();
    const FullState3 f = canonical_to_full(p);
    CHECK(std::abs(f.norm() - 1.0) < 1e-12);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          CHECK(f(i, j, k) == f(j, i, k));
          CHECK(f(i, j, k) == f(i, k, j));
        }
    // Brute-force squared norm of |000> + y e^{i phi} |theta>^3.
    FullState3::Storage raw = cube(polar_spinor(p.theta())).data();
    for (auto& z : raw) z *= p.y() * std::polar(1.0, p.phi());
    raw[0] += 1.0;
    double n2 = 0.0;
    for (const auto& z : raw) n2 += std::norm(z);
    CHECK(std::abs(p.norm_squared() - n2) < 1e-12);
    CHECK(p.norm_squared() >= (1.0 - p.y()) * (1.0 - p.y()));
  }
}

TEST_CASE("canonical state near the cancelling corner") {
  // |000> + y e^{i phi}|theta>^3 with y -> 1, theta -> 0, phi = pi leaves only the
  // first-order term, a W-type state up to a local rotation.
  const double eps = 1e-7;
  const CanonicalParams p(1.0 - eps * eps, eps, kPi);
  const double n2 = p.norm_squared();
  CHECK(n2 > 0.0);
  CHECK(n2 < 1e-12);
  const FullState3 f = canonical_to_full(p);
  CHECK(std::abs(f.norm() - 1.0) < 1e-12);
  // The |000> coefficient is second order against the first-order |001> terms.
  CHECK(std::abs(f(0, 0, 0)) < 1e-6);
  CHECK(std::abs(std::abs(f(0, 0, 1)) - 1.0 / std::sqrt(3.0)) < 1e-6);
}
