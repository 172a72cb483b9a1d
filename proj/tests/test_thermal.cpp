#include <doctest.h>

#include <cmath>
#include <random>

#include "dimer/errors.hpp"
#include "dimer/thermal.hpp"
#include "oracles.hpp"

using namespace dimer;

namespace {

const GeneralCouplings kHeisenberg{0.5, 0.0, 0.0, 0.0, 0.25, 0.0, 0.0};

GeneralCouplings heisenberg_at(double B) {
  GeneralCouplings g = kHeisenberg;
  g.omega = B;
  return g;
}

}  // namespace

TEST_CASE("block_energies") {
  SUBCASE("Heisenberg singlet-triplet") {
    const auto e = block_energies(kHeisenberg);
    CHECK(e.outer_plus == 0.25);
    CHECK(e.outer_minus == 0.25);
    CHECK(e.inner_plus == 0.25);
    CHECK(e.inner_minus == -0.75);
  }
  SUBCASE("zero couplings") {
    const auto e = block_energies({});
    for (double v : e.as_array()) CHECK(v == 0.0);
  }
  SUBCASE("symmetric J = 0.5, B = 1") {
    const auto e = block_energies({0.5, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
    CHECK(e.outer_plus == 1.0);
    CHECK(e.outer_minus == -1.0);
    CHECK(e.inner_plus == 0.5);
    CHECK(e.inner_minus == -0.5);
  }
}

TEST_CASE("thermal_state closed form") {
  SUBCASE("Heisenberg J_H = 1, B = 0, T = 0.5") {
    // Reference from scipy.linalg.expm of the spin-operator Hamiltonian and
    // from the closed form evaluated in 30-digit arithmetic.
    const XState x = thermal_state(kHeisenberg, 0.5);
    CHECK(x.rho11 == doctest::Approx(0.0962551352574687133).epsilon(1e-14));
    CHECK(x.rho44 == doctest::Approx(0.0962551352574687133).epsilon(1e-14));
    CHECK(x.rho22 == doctest::Approx(0.403744864742531287).epsilon(1e-14));
    CHECK(x.rho33 == doctest::Approx(0.403744864742531287).epsilon(1e-14));
    CHECK(x.rho23.real() == doctest::Approx(-0.307489729485062573).epsilon(1e-14));
    CHECK(x.rho23.imag() == 0.0);
    CHECK(x.rho14 == cplx(0.0, 0.0));
  }
  SUBCASE("infinite-temperature limit") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
      const XState x = thermal_state(oracle::random_couplings(rng), 1e8);
      for (double d : {x.rho11, x.rho22, x.rho33, x.rho44}) CHECK(std::abs(d - 0.25) <= 1e-7);
      CHECK(std::abs(x.rho14) <= 1e-7);
      CHECK(std::abs(x.rho23) <= 1e-7);
    }
  }
  SUBCASE("ground-state limit is the singlet") {
    const XState x = thermal_state(kHeisenberg, 0.001);
    CHECK(std::abs(x.rho22 - 0.5) <= 1e-9);
    CHECK(std::abs(x.rho33 - 0.5) <= 1e-9);
    CHECK(std::abs(x.rho23.real() + 0.5) <= 1e-9);
    CHECK(x.rho11 <= 1e-9);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(thermal_state(kHeisenberg, 0.0), DomainError);
    CHECK_THROWS_AS(thermal_state(kHeisenberg, -1.0), DomainError);
    CHECK_THROWS_AS(thermal_state(kHeisenberg, std::nan("")), InvalidParameter);
    CHECK_THROWS_AS(thermal_state({std::nan(""), 0, 0, 0, 0, 0, 0}, 1.0), InvalidParameter);
  }
}

TEST_CASE("partition_function") {
  SUBCASE("zero Hamiltonian") {
    for (double T : {1e-3, 0.7, 1e4}) CHECK(partition_function({}, T) == doctest::Approx(4.0));
  }
  SUBCASE("Heisenberg J_H = 1, B = 0, T = 0.5") {
    // 3 e^{-1/2} + e^{3/2}; differs from the e^{J/4T}-shifted 10.38906 by that factor.
    const double z = partition_function(kHeisenberg, 0.5);
    CHECK(z == doctest::Approx(6.30128104947596509).epsilon(1e-14));
    CHECK(z * std::exp(0.5) == doctest::Approx(2 * std::exp(1.0) * std::cosh(1.0) + 2).epsilon(1e-14));
  }
  SUBCASE("closed form with cosh") {
    const GeneralCouplings g{0.3, -0.2, 0.7, 0.1, 0.4, 1.1, -0.6};
    const auto a = derived_quantities(g);
    const double T = 0.8;
    const double expected = 2 * std::exp(-g.J_zz / T) * std::cosh(a.epsilon1 / T) +
                            2 * std::exp(g.J_zz / T) * std::cosh(a.epsilon2 / T);
    CHECK(partition_function(g, T) == doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("large-T asymptote") {
    std::mt19937_64 rng(6);
    CHECK(partition_function(oracle::random_couplings(rng), 1e9) == doctest::Approx(4.0).epsilon(1e-8));
  }
  SUBCASE("equals the sum of unshifted Boltzmann weights") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
      const auto g = oracle::random_couplings(rng);
      const double T = oracle::log_uniform(rng, 0.05, 100.0);
      double sum = 0.0;
      for (double e : block_energies(g).as_array()) sum += std::exp(-e / T);
      CHECK(partition_function(g, T) == doctest::Approx(sum).epsilon(1e-12));
    }
  }
  SUBCASE("overflow directs to the log form") {
    const GeneralCouplings g{5.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(partition_function(g, 1e-3), NumericError);
    CHECK(log_partition_function(g, 1e-3) == doctest::Approx(5.0 / 1e-3).epsilon(1e-12));
  }
  SUBCASE("domain errors") { CHECK_THROWS_AS(partition_function(kHeisenberg, 0.0), DomainError); }
}

TEST_CASE("thermal_state_oracle") {
  SUBCASE("H = 0 gives the maximally mixed state") {
    const Matrix4c rho = thermal_state_oracle(Matrix4c::Zero(), 0.3);
    CHECK(oracle::max_abs(rho - Matrix4c::Identity() / 4.0) <= 1e-15);
  }
  SUBCASE("Heisenberg J_H = 1, B = 0, T = 0.5 matches the closed form") {
    const Matrix4c rho = thermal_state_oracle(hamiltonian_matrix(kHeisenberg), 0.5);
    CHECK(oracle::max_abs(rho - thermal_state(kHeisenberg, 0.5).matrix()) <= 1e-12);
  }
  SUBCASE("Heisenberg J_H = 1, B = 3, T = 0.2 is field-aligned") {
    const Matrix4c rho = thermal_state_oracle(hamiltonian_matrix(heisenberg_at(3.0)), 0.2);
    // scipy expm reference: diag = (9.357e-14, 2.285e-5, 2.285e-5, 0.999954).
    CHECK(rho(3, 3).real() == doctest::Approx(0.99995429625675103).epsilon(1e-12));
    CHECK(rho(1, 1).real() == doctest::Approx(2.2851871577685958e-05).epsilon(1e-10));
    CHECK(std::abs(rho.trace() - 1.0) <= 1e-14);
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-15);
  }
  SUBCASE("agrees with Pade matrix exponential") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
      const auto g = oracle::random_couplings(rng);
      const double T = oracle::log_uniform(rng, 0.1, 100.0);
      const Matrix4c H = oracle::pauli_form_hamiltonian(g);
      CHECK(oracle::max_abs(thermal_state_oracle(H, T) - oracle::gibbs_expm(H, T)) <= 1e-12);
    }
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(thermal_state_oracle(Matrix4c::Zero(), 0.0), DomainError);
  }
}

TEST_CASE("thermal_state properties") {
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto g = oracle::random_couplings(rng);
    const double T = oracle::log_uniform(rng, 1e-3, 1e3);
    const XState x = thermal_state(g, T);
    const Matrix4c ref = thermal_state_oracle(hamiltonian_matrix(g), T);
    worst = std::max(worst, oracle::max_abs(x.matrix() - ref));

    CHECK(x.rho11 >= 0.0);
    CHECK(x.rho22 >= 0.0);
    CHECK(x.rho33 >= 0.0);
    CHECK(x.rho44 >= 0.0);
    CHECK(std::abs(x.rho11 + x.rho22 + x.rho33 + x.rho44 - 1.0) <= 1e-12);
    CHECK(std::abs(x.rho14) <= std::sqrt(x.rho11 * x.rho44) + 1e-12);
    CHECK(std::abs(x.rho23) <= std::sqrt(x.rho22 * x.rho33) + 1e-12);

    // Oracle state keeps the X pattern.
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}}) {
      CHECK(std::abs(ref(i, j)) <= 1e-13);
      CHECK(std::abs(ref(j, i)) <= 1e-13);
    }
  }
  CHECK(worst <= 1e-12);

  SUBCASE("no NaN or Inf down to T = 1e-6 with couplings up to 10") {
    std::mt19937_64 r2(10);
    for (int k = 0; k < 500; ++k) {
      const auto g = oracle::random_couplings(r2, 10.0);
      const XState x = thermal_state(g, 1e-6);
      CHECK(x.matrix().allFinite());
      CHECK(std::isfinite(x.logZ_shifted));
      CHECK(std::isfinite(x.log_partition()));
    }
  }
}

TEST_CASE("block geometric means survive underflow of the diagonal") {
  SUBCASE("match the diagonal where it is representable") {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 500; ++k) {
      const XState x =
          thermal_state(oracle::random_couplings(rng), oracle::log_uniform(rng, 0.05, 100.0));
      CHECK(x.outer_geomean == doctest::Approx(std::sqrt(x.rho11 * x.rho44)).epsilon(1e-12));
      CHECK(x.inner_geomean == doctest::Approx(std::sqrt(x.rho22 * x.rho33)).epsilon(1e-12));
    }
  }
  SUBCASE("ferromagnet in a strong field") {
    // rho11 ~ exp(-2B/T) underflows; sqrt(rho11 rho44) = exp(-(J_zz - E_min)/T) does not.
    const GeneralCouplings g{-0.5, 0.0, 0.0, 0.0, -0.25, 3.0, 0.0};
    const XState x = thermal_state(g, 0.005);
    CHECK(x.rho11 == 0.0);
    CHECK(x.outer_geomean > 0.0);
    CHECK(std::log(x.outer_geomean) == doctest::Approx(-3.0 / 0.005).epsilon(1e-12));
    CHECK(std::abs(x.rho23) < x.outer_geomean);
  }
}
