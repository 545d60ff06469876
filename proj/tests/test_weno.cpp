#include <doctest.h>

#include <array>
#include <cmath>

#include "rhd/detail/weno5_core.hpp"
#include "rhd/weno.hpp"
#include "support.hpp"

using namespace rhd;
using rhd::test::Rng;

namespace {

// Cell averages of P(x) = Σ c_k x^k over [x_j - h/2, x_j + h/2], x_j = j h.
struct Poly {
  std::array<double, 5> c{};
  int degree = 0;

  double operator()(double x) const {
    double v = 0.0;
    for (int k = degree; k >= 0; --k) v = v * x + c[k];
    return v;
  }
  double antiderivative(double x) const {
    double v = 0.0;
    for (int k = degree; k >= 0; --k) v = v * x + c[k] / (k + 1);
    return v * x;
  }
  double cell_average(int j, double h) const {
    return (antiderivative((j + 0.5) * h) - antiderivative((j - 0.5) * h)) / h;
  }
};

Poly random_poly(Rng& rng, int degree) {
  Poly p;
  p.degree = degree;
  for (int k = 0; k <= degree; ++k) p.c[k] = test::uniform(rng, -1.0, 1.0);
  return p;
}

// |reconstruction - P(x_{1/2})| for cell 0's right interface from both sides.
std::array<double, 2> reproduction_errors(const Poly& p, double h) {
  std::array<double, 5> left, right;
  for (int k = 0; k < 5; ++k) {
    left[k] = p.cell_average(k - 2, h);
    right[k] = p.cell_average(k - 1, h);
  }
  const double exact = p(0.5 * h);
  return {std::abs(weno5_reconstruct(left, Side::left) - exact),
          std::abs(weno5_reconstruct(right, Side::right) - exact)};
}

}  // namespace

TEST_CASE("WENO5 matches high-precision values") {
  CHECK(detail::weno5_left(1, 1, 1, 0, 0) == doctest::Approx(0.999999999998695).epsilon(1e-15));
  CHECK(detail::weno5_left(0, 0, 1, 1, 1) == doctest::Approx(1.0000000000002125).epsilon(1e-15));
  CHECK(detail::weno5_left(1, 2, 4, 8, 16) == doctest::Approx(5.5242156525913718).epsilon(1e-14));
  CHECK(detail::weno5_left(0.3, -1.2, 2.5, 0.7, -0.4) ==
        doctest::Approx(1.5376484227820743).epsilon(1e-14));
}

TEST_CASE("right reconstruction mirrors the left one") {
  const std::array<double, 5> s{0.3, -1.2, 2.5, 0.7, -0.4};
  const std::array<double, 5> mirrored{s[4], s[3], s[2], s[1], s[0]};
  CHECK(weno5_reconstruct(s, Side::right) == weno5_reconstruct(mirrored, Side::left));
}

TEST_CASE("WENO5 reproduces quadratics at unit spacing") {
  Rng rng(51);
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_poly(rng, static_cast<int>(n % 3));
    for (double e : reproduction_errors(p, 1.0)) REQUIRE(e <= 1e-12);
  }
}

TEST_CASE("WENO5 reproduces quartics once the weights reach their ideal values") {
  Rng rng(52);
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_poly(rng, 3 + static_cast<int>(n % 2));
    for (double e : reproduction_errors(p, 1e-3)) REQUIRE(e <= 1e-12);
  }
}

TEST_CASE("WENO5 stays within the data range across a step") {
  for (double jump : {1.0, 1e3}) {
    const double v = weno5_reconstruct(std::array<double, 5>{0, 0, 0, jump, jump}, Side::left);
    CHECK(v >= 0.0);
    CHECK(v <= jump * 1e-6);
  }
}

TEST_CASE("sign switch") {
  CHECK(sign_switch(1.0, 2.0) == 1.0);
  CHECK(sign_switch(-1.0, -2.0) == 1.0);
  CHECK(sign_switch(1.0, -2.0) == 0.0);
  CHECK(sign_switch(-1.0, 2.0) == 0.0);
  CHECK(sign_switch(0.0, 2.0) == 0.0);
  CHECK(sign_switch(1.0, 0.0) == 0.0);
  CHECK(sign_switch(0.0, 0.0) == 0.0);
}

TEST_CASE("scaled jumps of smooth data") {
  const EosParams eos(5.0 / 3.0);
  std::array<StateVec<1>, 6> V;
  for (int k = 0; k < 6; ++k) {
    const PrimState<1> w{1.0 + 0.02 * k, {0.1 + 0.01 * k}, 1.0 - 0.03 * k};
    V[k] = entropy_variables(w, eos);
  }
  const auto sys = scaled_eigensystem_1d(PrimState<1>{1.05, {0.125}, 0.93}, eos);
  const auto j = scaled_variable_jumps<1>(V, sys);
  StateVec<1> dV;
  for (int c = 0; c < 3; ++c) dV[c] = V[3][c] - V[2][c];
  const auto raw = project_scaled(sys, dV);
  for (int c = 0; c < 3; ++c) {
    CHECK(j.w_jump_raw[c] == raw[c]);
    CHECK(j.switch_on[c] == sign_switch(j.w_jump_reconstructed[c], raw[c]));
    // smooth data: the reconstructed jump is far below the raw one
    CHECK(std::abs(j.w_jump_reconstructed[c]) < 1e-2 * std::abs(raw[c]));
  }
}

TEST_CASE("scaled jumps of constant data vanish") {
  const EosParams eos;
  const PrimState<1> w{2.0, {-0.3}, 0.5};
  const auto v = entropy_variables(w, eos);
  const std::array<StateVec<1>, 6> V{v, v, v, v, v, v};
  const auto j = scaled_variable_jumps<1>(V, scaled_eigensystem_1d(w, eos));
  for (int c = 0; c < 3; ++c) {
    CHECK(j.w_jump_reconstructed[c] == 0.0);
    CHECK(j.w_jump_raw[c] == 0.0);
    CHECK(j.switch_on[c] == 0.0);
  }
}

TEST_CASE("project_scaled computes R transpose times V") {
  const EosParams eos;
  const auto sys = scaled_eigensystem_2d(PrimState<2>{1.0, {0.2, 0.1}, 2.0}, eos, Axis::y);
  const StateVec<2> V{0.5, -1.0, 2.0, 0.25};
  const auto w = project_scaled(sys, V);
  for (int k = 0; k < 4; ++k) {
    double e = 0.0;
    for (int r = 0; r < 4; ++r) e += sys.R[r][k] * V[r];
    CHECK(w[k] == doctest::Approx(e).epsilon(1e-15));
  }
}
