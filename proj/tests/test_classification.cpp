#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimer/classification.hpp"
#include "dimer/errors.hpp"
#include "dimer/measures.hpp"
#include "dimer/phasediagram.hpp"
#include "dimer/thermal.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

DimerSpec pauli_spec(Category c, double J, double D, double r, double K, double J_zz,
                     double B = 0.0) {
  DimerSpec s;
  s.category = c;
  s.couplings = Exchange{J, D, r, K, J_zz};
  s.B = B;
  return s;
}

const DimerSpec kHeisenberg = pauli_spec(Category::symmetric, 0.5, 0.0, 0.0, 0.0, 0.25);

DimerSpec random_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::bernoulli_distribution coin(0.5);
  return pauli_spec(coin(rng) ? Category::symmetric : Category::antisymmetric, u(rng), u(rng),
                    u(rng), u(rng), u(rng), u(rng));
}

DimerSpec at_field(DimerSpec s, double B) {
  s.B = B;
  return s;
}

}  // namespace

TEST_CASE("torus_invariants") {
  SUBCASE("arithmetic") {
    const auto t = torus_invariants(pauli_spec(Category::symmetric, 3, 4, 1, 0, 0));
    CHECK(t.alpha == 25.0);
    CHECK(t.beta == 1.0);
  }
  SUBCASE("Heisenberg J_H = 1") {
    const auto t = torus_invariants(kHeisenberg);
    CHECK(t.alpha == 0.25);
    CHECK(t.beta == 0.0);
    CHECK(t.J_zz == 0.25);
    CHECK(t.category == Category::symmetric);
  }
  SUBCASE("XY gamma = 0.6") {
    const auto g = couplings_from_spin_convention(1.6, 0.4, 0, 0, 0, 0, 0);
    const auto t = torus_invariants(pauli_spec(Category::symmetric, g.J, g.D, g.r, g.K, g.J_zz));
    CHECK(t.alpha == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(t.beta == doctest::Approx(0.09).epsilon(1e-15));
  }
  SUBCASE("spin-convention specs are converted") {
    DimerSpec s = pauli_spec(Category::symmetric, 2.0, 0.0, 0.0, 0.0, 1.0);
    s.convention = Convention::spin;
    const auto t = torus_invariants(s);
    CHECK(t.alpha == 0.25);
    CHECK(t.J_zz == 0.25);
  }
}

TEST_CASE("same_class") {
  CHECK(same_class(pauli_spec(Category::symmetric, 3, 4, 0, 1, 0.2),
                   pauli_spec(Category::symmetric, 5, 0, 1, 0, 0.2), 1e-12));
  CHECK_FALSE(same_class(pauli_spec(Category::symmetric, 1, 0, 0, 0, 0),
                         pauli_spec(Category::symmetric, 0, 0, 1, 0, 0), 1e-12));
  // Heisenberg class member J'^2 + D'^2 = J^2.
  CHECK(same_class(pauli_spec(Category::symmetric, 0.6 * 0.5, 0.8 * 0.5, 0, 0, 0.25),
                   kHeisenberg, 1e-12));
  CHECK_FALSE(same_class(kHeisenberg, pauli_spec(Category::symmetric, 0.5, 0, 0, 0, 0.3)));
  CHECK_FALSE(same_class(kHeisenberg, pauli_spec(Category::antisymmetric, 0.5, 0, 0, 0, 0.25)));
  // B is not a class parameter.
  CHECK(same_class(kHeisenberg, at_field(kHeisenberg, 3.0)));
}

TEST_CASE("dual_map") {
  SUBCASE("symmetric Heisenberg") {
    const DimerSpec d = dual_map(kHeisenberg);
    CHECK(d.category == Category::antisymmetric);
    CHECK(d.couplings == Exchange{0.0, 0.0, 0.5, 0.0, -0.25});
  }
  SUBCASE("XY gamma = 1") {
    const DimerSpec d = dual_map(pauli_spec(Category::symmetric, 0.5, 0, 0.5, 0, 0, 1.3));
    CHECK(d.category == Category::antisymmetric);
    CHECK(d.couplings == Exchange{0.5, 0.0, 0.5, 0.0, 0.0});
    CHECK(d.B == 1.3);
  }
  SUBCASE("involution and torus swap") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
      const DimerSpec s = random_spec(rng);
      CHECK(dual_map(dual_map(s)) == s);
      const auto t = torus_invariants(s);
      const auto td = torus_invariants(dual_map(s));
      CHECK(td.alpha == t.beta);
      CHECK(td.beta == t.alpha);
      CHECK(td.J_zz == -t.J_zz);
      CHECK(td.category != t.category);
      CHECK(is_dual_pair(s, dual_map(s), 1e-12));
    }
  }
}

TEST_CASE("is_dual_pair") {
  CHECK(is_dual_pair(kHeisenberg, dual_map(kHeisenberg), 1e-12));
  CHECK_FALSE(is_dual_pair(kHeisenberg, kHeisenberg, 1e-12));
  CHECK(is_dual_pair(pauli_spec(Category::symmetric, 3, 4, 1, 0, 0),
                     pauli_spec(Category::antisymmetric, 1, 0, 0, 5, 0), 1e-12));
  CHECK_FALSE(is_dual_pair(pauli_spec(Category::symmetric, 3, 4, 1, 0, 0.1),
                           pauli_spec(Category::antisymmetric, 1, 0, 0, 5, 0.1), 1e-12));
}

TEST_CASE("sample_class") {
  SUBCASE("single grid point at angle zero") {
    const auto s = sample_class({1.0, 0.0, 0.0, Category::symmetric}, 1, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0].couplings == Exchange{1.0, 0.0, 0.0, 0.0, 0.0});
  }
  SUBCASE("Heisenberg circle") {
    const auto s = sample_class({0.25, 0.0, 0.25, Category::symmetric}, 8, 0);
    REQUIRE(s.size() == 8);
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(std::hypot(s[k].couplings.J, s[k].couplings.D) == doctest::Approx(0.5));
      CHECK(std::atan2(s[k].couplings.D, s[k].couplings.J) ==
            doctest::Approx(std::remainder(2 * std::numbers::pi * k / 8.0, 2 * std::numbers::pi)));
      CHECK(s[k].couplings.r == 0.0);
    }
  }
  SUBCASE("members reproduce the invariants") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (auto mode : {SamplingMode::grid, SamplingMode::uniform}) {
      for (int k = 0; k < 50; ++k) {
        const TorusInvariants inv{u(rng), u(rng), u(rng) - 2.0, Category::antisymmetric};
        for (const auto& m : sample_class(inv, 7, rng(), mode)) {
          const auto t = torus_invariants(m);
          CHECK(std::abs(t.alpha - inv.alpha) <= 1e-12);
          CHECK(std::abs(t.beta - inv.beta) <= 1e-12);
          CHECK(t.J_zz == inv.J_zz);
          CHECK(t.category == inv.category);
        }
      }
    }
  }
  SUBCASE("uniform mode is seeded") {
    const TorusInvariants inv{1.0, 2.0, 0.0, Category::symmetric};
    CHECK(sample_class(inv, 5, 7, SamplingMode::uniform) ==
          sample_class(inv, 5, 7, SamplingMode::uniform));
    CHECK_FALSE(sample_class(inv, 5, 7, SamplingMode::uniform) ==
                sample_class(inv, 5, 8, SamplingMode::uniform));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(sample_class({-1.0, 0.0, 0.0, Category::symmetric}, 3, 0), InvalidParameter);
    CHECK_THROWS_AS(sample_class({1.0, -0.1, 0.0, Category::symmetric}, 3, 0), InvalidParameter);
    CHECK_THROWS_AS(sample_class({1.0, 0.0, 0.0, Category::symmetric}, 0, 0), InvalidParameter);
  }
}

TEST_CASE("duality_residuals") {
  SUBCASE("Heisenberg at T = 1/ln 3 sits on branch II") {
    for (double B : {0.0, 0.4, 2.0, 5.0}) {
      const auto r = duality_residuals(at_field(kHeisenberg, B), 1.0 / std::log(3.0));
      CHECK(std::abs(r.resII) <= 1e-12);
      CHECK(r.resI < 0.0);
    }
  }
  SUBCASE("zero couplings") {
    for (double T : {0.01, 1.0, 100.0}) {
      const auto r = duality_residuals(DimerSpec{}, T);
      CHECK(r.resI == doctest::Approx(-1.0));
      CHECK(r.resII == doctest::Approx(-1.0));
    }
  }
  SUBCASE("sign bridge with the concurrence branches") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 1000; ++k) {
      const DimerSpec s = random_spec(rng);
      const double T = oracle::log_uniform(rng, 1e-2, 1e2);
      const auto r = duality_residuals(s, T);
      const auto c = concurrence_branches(thermal_state(compile_spec(s), T));
      if (std::abs(c.C1) > 1e-10) CHECK((r.resI > 0) == (c.C1 > 0));
      if (std::abs(c.C2) > 1e-10) CHECK((r.resII > 0) == (c.C2 > 0));
    }
  }
  SUBCASE("extreme arguments never give NaN") {
    const DimerSpec s = pauli_spec(Category::symmetric, 5.0, 1.0, 3.0, 2.0, 4.0, 7.0);
    for (double T : {1e-6, 1e-4, 1e-2}) {
      const auto r = duality_residuals(s, T);
      CHECK_FALSE(std::isnan(r.resI));
      CHECK_FALSE(std::isnan(r.resII));
    }
    CHECK(std::isinf(duality_residuals(s, 1e-6).resII));
  }
  SUBCASE("domain") { CHECK_THROWS_AS(duality_residuals(kHeisenberg, 0.0), DomainError); }
}

TEST_CASE("duality is exact at the state level") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 500; ++k) {
    const DimerSpec s = random_spec(rng);
    const double T = oracle::log_uniform(rng, 1e-3, 1e3);
    const Matrix4c rho = thermal_state(compile_spec(s), T).matrix();
    const Matrix4c rho_dual = thermal_state(compile_spec(dual_map(s)), T).matrix();
    CHECK(oracle::max_abs(rho_dual - flip_second_spin(rho)) <= 1e-12);
    CHECK(std::abs(concurrence_wootters(rho) - concurrence_wootters(rho_dual)) <= 1e-10);
    CHECK(std::abs(negativity(rho) - negativity(rho_dual)) <= 1e-10);
    CHECK(std::abs(chsh_parameter(rho) - chsh_parameter(rho_dual)) <= 1e-10);
  }
}

TEST_CASE("flip_second_spin matches I x X conjugation") {
  std::mt19937_64 rng(35);
  const auto p = oracle::paulis();
  const Matrix4c ix = oracle::kron(p[0], p[1]);
  const Matrix4c rho = thermal_state(oracle::random_couplings(rng), 0.7).matrix();
  CHECK(oracle::max_abs(flip_second_spin(rho) - ix * rho * ix) == 0.0);
}

TEST_CASE("class members share concurrence on a 50 x 50 grid") {
  std::mt19937_64 rng(36);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  const auto B_axis = linspace(0.0, 3.0, 50);
  const auto T_axis = linspace(0.05, 3.0, 50);
  for (int k = 0; k < 5; ++k) {
    const TorusInvariants inv{u(rng), u(rng), u(rng) - 1.0,
                              k % 2 ? Category::symmetric : Category::antisymmetric};
    const auto members = sample_class(inv, 4, rng(), SamplingMode::uniform);
    const DiagramGrid ref = concurrence_grid(members[0], B_axis, T_axis);
    for (std::size_t m = 1; m < members.size(); ++m) {
      const DiagramGrid g = concurrence_grid(members[m], B_axis, T_axis);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.values.size(); ++i)
        worst = std::max(worst, std::abs(g.values[i] - ref.values[i]));
      CHECK(worst <= 1e-12);
    }
  }
}
