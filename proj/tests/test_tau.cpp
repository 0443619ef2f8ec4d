#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "ramanujan/primes.hpp"
#include "ramanujan/series.hpp"
#include "ramanujan/tau.hpp"

using namespace ramanujan;

namespace {

const TauTable& table_500() {
  static const TauTable t = compute_tau_table(500);
  return t;
}

bool all_pass(const VerificationReport& r) { return !r.empty() && count_failures(r) == 0; }

}  // namespace

TEST_CASE("compute_tau_table small values") {
  const auto t = compute_tau_table(3);
  CHECK(t.max_n() == 3);
  CHECK(t[1] == 1);
  CHECK(t[2] == -24);
  CHECK(t[3] == 252);
  CHECK(compute_tau_table(1)[1] == 1);
  CHECK_THROWS_AS(compute_tau_table(0), std::invalid_argument);
  CHECK_THROWS_AS(t.at(0), std::out_of_range);
  CHECK_THROWS_AS(t.at(4), std::out_of_range);
}

TEST_CASE("tau prefix matches the frozen Jacobi-cube values") {
  const auto& t = table_500();
  for (std::size_t n = 1; n <= oracle::kTauPrefix.size(); ++n) {
    CHECK(t[n] == Integer(std::to_string(oracle::kTauPrefix[n - 1])));
  }
  CHECK(t[6] == t[2] * t[3]);
  CHECK(t[6] == -6048);
  CHECK(compute_tau_table(1000)[1000] == Integer("-30328412970240000"));
}

TEST_CASE("expansion starts at q^1") {
  // Delta = q * prod(...): the product's constant term is 1, so a(0) = 0 and tau(1) = 1.
  CHECK(eta_power_product(24, 10)[0] == 1);
  CHECK_THROWS_AS(TauTable(std::vector<Integer>{Integer(2)}), std::invalid_argument);
}

TEST_CASE("direct expansion agrees with the cube route and the closed-form oracle") {
  for (std::size_t n : {1U, 2U, 7U, 64U, 300U, 2000U}) {
    const auto direct = compute_tau_table(n);
    CHECK(direct == tau_table_via_cube(n));
    CHECK(direct.expansion().values() == oracle::tau_from_jacobi(n));
  }
}

TEST_CASE("tau_extended") {
  const auto& t = table_500();
  CHECK(tau_extended(4, t) == -1472);
  CHECK(tau_extended(1, t) == 1);
  CHECK(tau_extended(6, t) == -6048);
  for (std::uint64_t n = 1; n <= t.max_n(); ++n) CHECK(tau_extended(n, t) == t[n]);

  const auto small = compute_tau_table(10);
  // 1024 = 2^10 needs only tau(2); 3000 = 2^3 3 5^3 needs tau(2), tau(3), tau(5).
  const auto direct = compute_tau_table(3000);
  CHECK(tau_extended(1024, small) == direct[1024]);
  CHECK(tau_extended(3000, small) == direct[3000]);
  CHECK_THROWS_AS(tau_extended(11, small), std::out_of_range);
  CHECK_THROWS_AS(tau_extended(0, small), std::invalid_argument);
}

TEST_CASE("verify_conjecture_one") {
  const auto report = verify_conjecture_one(table_500());
  CHECK(all_pass(report));
  bool saw_2_3 = false, saw_p2_alpha0 = false;
  for (const auto& r : report) {
    CHECK(r.pass == r.evaluate());
    if (r.law == "multiplicativity" && r.param("m") == 2 && r.param("n") == 3) {
      saw_2_3 = true;
      CHECK(r.lhs == -6048);
      CHECK(r.rhs == -6048);
    }
    if (r.law == "prime-power-recursion" && r.param("p") == 2 && r.param("alpha") == 0) {
      saw_p2_alpha0 = true;
      CHECK(r.lhs == -1472);
      CHECK(r.rhs == -1472);
    }
  }
  CHECK(saw_2_3);
  CHECK(saw_p2_alpha0);

  // A corrupted entry must show up as a failing record, not an exception.
  auto values = table_500().expansion().values();
  values[5] += 1;  // tau(6)
  CHECK(count_failures(verify_conjecture_one(TauTable(values))) > 0);
}

TEST_CASE("verify_deligne_bound") {
  const auto report = verify_deligne_bound(table_500());
  CHECK(all_pass(report));
  CHECK(report.size() == 2 * primes_up_to(500).size());
  CHECK(report[0].lhs == 576);
  CHECK(report[0].rhs == 8192);
  CHECK(report[2].lhs == 63504);
  CHECK(report[2].rhs == 708588);

  const auto poly = HeckePolynomial::for_prime(table_500(), 5);
  CHECK(poly.trace == 4830);
  CHECK(poly.norm == Integer("48828125"));
  CHECK(poly.discriminant() < 0);
  CHECK_THROWS_AS(HeckePolynomial::for_prime(table_500(), 4), std::invalid_argument);
}

TEST_CASE("hecke_apply") {
  const auto& f = table_500().expansion();
  const auto t2 = hecke_apply(f, 2);
  CHECK(t2.max_n() == 250);
  CHECK(t2[1] == -24);
  CHECK(t2[2] == 576);
  CHECK(hecke_apply(f, 3)[1] == 252);
  CHECK_THROWS_AS(hecke_apply(f, 9), std::invalid_argument);
  CHECK_THROWS_AS(WeightLevel(12, 2), std::invalid_argument);
  CHECK_THROWS_AS(WeightLevel(11), std::invalid_argument);

  // Weight enters only through p^(k-1).
  const auto w4 = hecke_apply(f, 2, WeightLevel(4));
  CHECK(w4[2] == f[4] + 8 * f[1]);
}

TEST_CASE("Hecke operators commute") {
  const auto& f = table_500().expansion();
  for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
    for (std::uint64_t q : {2U, 3U, 5U, 7U}) {
      if (p == q) continue;
      const auto pq = hecke_apply(hecke_apply(f, p), q);
      const auto qp = hecke_apply(hecke_apply(f, q), p);
      REQUIRE(pq.max_n() == qp.max_n());
      for (std::size_t n = 1; n <= pq.max_n(); ++n) CHECK(pq[n] == qp[n]);
    }
  }
}

TEST_CASE("verify_eigenform") {
  const auto report = verify_eigenform(table_500(), 50);
  CHECK(all_pass(report));
  for (const auto& r : report) {
    if (r.param("p") == 3 && r.param("n") == 2) CHECK(r.lhs == -6048);
    if (r.param("p") == 2 && r.param("n") == 1) CHECK(r.lhs == -24);
  }
}

TEST_CASE("mobius_act") {
  const std::complex<double> i(0, 1);
  CHECK(std::abs(mobius_act(MobiusMatrix::identity(), 0.3 + 2.0 * i) - (0.3 + 2.0 * i)) < 1e-15);
  CHECK(std::abs(mobius_act(MobiusMatrix(0, -1, 1, 0), i) - i) < 1e-15);
  CHECK(std::abs(mobius_act(MobiusMatrix(1, 1, 0, 1), i) - (1.0 + i)) < 1e-15);
  CHECK_THROWS_AS(mobius_act(MobiusMatrix::identity(), {1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(MobiusMatrix(1, 1, 1, 1), std::invalid_argument);
  // upper half-plane is preserved
  const MobiusMatrix g(2, 1, 3, 2);
  CHECK(mobius_act(g, 0.1 + 0.01 * i).imag() > 0);
  CHECK(MobiusMatrix(1, 1, 0, 1) * MobiusMatrix(1, -1, 0, 1) == MobiusMatrix::identity());
}

TEST_CASE("evaluate_delta") {
  const auto table = compute_tau_table(200);
  const std::complex<double> i(0, 1);
  const auto at_i = evaluate_delta(i, table);
  CHECK(at_i.real() > 0);
  CHECK(std::abs(at_i.imag()) < 1e-15 * at_i.real());
  // Leading terms: Delta(i) ~ e^(-2 pi) (1 - 24 e^(-2 pi) + ...)
  const double q = std::exp(-2 * std::numbers::pi);
  CHECK(at_i.real() == doctest::Approx(q - 24 * q * q + 252 * q * q * q).epsilon(1e-6));

  CHECK(std::abs(evaluate_delta(1.0 + i, table) - at_i) < 1e-12 * std::abs(at_i));

  const auto z = 2.0 * i;
  const auto lhs = evaluate_delta(-1.0 / z, table);  // -1/(2i) = i/2
  const auto rhs = std::pow(z, 12) * evaluate_delta(z, table);
  CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));

  CHECK_THROWS_AS(evaluate_delta(0.2 * i, table), std::domain_error);
  CHECK_THROWS_AS(evaluate_delta(0.3 * i, compute_tau_table(10)), std::domain_error);
  CHECK(delta_terms_required(0.3) == 22);
}

TEST_CASE("weight-12 law over every gamma with entries in [-3, 3]") {
  const auto table = compute_tau_table(400);
  const std::vector<std::complex<double>> zs{{0.0, 1.0}, {0.5, 1.0}, {1.0 / 3.0, 2.0}};
  std::size_t checked = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          if (a * d - b * c != 1) continue;
          const MobiusMatrix g(a, b, c, d);
          for (const auto& z : zs) {
            const auto gz = mobius_act(g, z);
            if (gz.imag() < kDeltaImagFloor) continue;
            const auto rhs = std::pow(static_cast<double>(c) * z + static_cast<double>(d), 12) * evaluate_delta(z, table);
            CHECK(std::abs(evaluate_delta(gz, table) - rhs) < 1e-9 * std::abs(rhs));
            ++checked;
          }
        }
  CHECK(checked > 50);
}

TEST_CASE("table text format round-trips bit-exactly") {
  const auto table = compute_tau_table(100);
  std::ostringstream out;
  write_tau_table(out, table);
  const std::string text = out.str();
  CHECK(text.rfind("# tau-table max_n=100\n1\t1\n2\t-24\n3\t252\n", 0) == 0);

  std::istringstream in(text);
  const auto back = read_tau_table(in);
  CHECK(back == table);
  std::ostringstream again;
  write_tau_table(again, back);
  CHECK(again.str() == text);

  auto bad = [](const std::string& s) {
    std::istringstream in(s);
    return read_tau_table(in);
  };
  CHECK_THROWS_AS(bad(""), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=2\n1\t1\n"), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=2\n1\t1\n3\t-24\n"), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=1\n1\t1.5\n"), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=1\n1\t2\n"), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=1\n1\t1\n2\t-24\n"), std::runtime_error);
  CHECK_THROWS_AS(bad("# tau-table max_n=x\n"), std::runtime_error);
}
