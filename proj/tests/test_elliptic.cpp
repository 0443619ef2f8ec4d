#include <doctest.h>

#include "ramanujan/elliptic.hpp"
#include "ramanujan/primes.hpp"

using namespace ramanujan;

namespace {

// Nonsingular over Q; includes CM curves, curves with torsion, and larger coefficients.
const std::vector<std::pair<long, long>> kCorpus = {
    {1, 0},  {-1, 0}, {0, 1},   {1, 1},    {-1, 1},  {0, -2},  {2, 3},     {-2, 5},   {5, -7},    {-4, 4},
    {3, 0},  {0, 7},  {-11, 14}, {17, -3}, {-43, 166}, {6, -9}, {-123, 456}, {0, -432}, {1000, 1}, {-2, 1}};

}  // namespace

TEST_CASE("CurveSpec") {
  const CurveSpec e(Integer(1), Integer(0));
  CHECK(e.discriminant() == -64);
  CHECK(CurveSpec(Integer(0), Integer(1)).discriminant() == -432);
  CHECK_THROWS_AS(CurveSpec(Integer(0), Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(CurveSpec(Integer(-3), Integer(2)), std::invalid_argument);  // 4(-27) + 27*4 = 0
  for (const auto& [a, b] : kCorpus) CHECK_NOTHROW(CurveSpec(Integer(a), Integer(b)));
}

TEST_CASE("reduce_curve examples") {
  const CurveSpec e(Integer(1), Integer(0));
  const auto at2 = reduce_curve(e, 2);
  CHECK(at2.kind == ReductionKind::bad);
  CHECK_FALSE(at2.a_p.has_value());

  // (0,0), (2,1), (2,2)
  const auto at3 = reduce_curve(e, 3);
  CHECK(at3.kind == ReductionKind::good);
  CHECK(at3.affine_count == 3);
  CHECK(at3.a_p == 0);

  const auto minus = reduce_curve(CurveSpec(Integer(-1), Integer(0)), 5);
  CHECK(minus.kind == ReductionKind::good);
  CHECK(minus.affine_count == 7);
  CHECK(minus.a_p == -2);

  CHECK(reduce_curve(CurveSpec(Integer(0), Integer(1)), 5).a_p == 0);
  CHECK(reduce_curve(CurveSpec(Integer(0), Integer(1)), 7).affine_count == 11);
  CHECK(reduce_curve(CurveSpec(Integer(0), Integer(1)), 7).a_p == -4);
  CHECK(reduce_curve(CurveSpec(Integer(1), Integer(1)), 5).a_p == -3);
  CHECK(reduce_curve(CurveSpec(Integer(-1), Integer(0)), 7).a_p == 0);
  // 1 + 1 = -16 * 31 = -496: bad at 2 and 31
  CHECK(reduce_curve(CurveSpec(Integer(1), Integer(1)), 31).kind == ReductionKind::bad);
  CHECK_THROWS_AS(reduce_curve(e, 9), std::invalid_argument);
}

TEST_CASE("ap_sweep") {
  const auto sweep = ap_sweep(CurveSpec(Integer(1), Integer(0)), 3);
  REQUIRE(sweep.size() == 2);
  CHECK(sweep[0].p == 2);
  CHECK(sweep[0].kind == ReductionKind::bad);
  CHECK(sweep[1].p == 3);
  CHECK(sweep[1].a_p == 0);
  CHECK(ap_sweep(CurveSpec(Integer(1), Integer(0)), 1).empty());

  for (const auto& [a, b] : kCorpus) {
    const CurveSpec e{Integer(a), Integer(b)};
    std::uint64_t prev = 0;
    for (const auto& r : ap_sweep(e, 200)) {
      CHECK(r.p > prev);
      prev = r.p;
      const bool divides = residue(e.discriminant(), Integer(r.p)) == 0;
      CHECK((r.kind == ReductionKind::bad) == divides);
      if (r.kind == ReductionKind::good) {
        REQUIRE(r.a_p.has_value());
        CHECK(static_cast<std::int64_t>(r.affine_count) + *r.a_p == static_cast<std::int64_t>(r.p));
        CHECK(*r.a_p * *r.a_p <= 4 * static_cast<std::int64_t>(r.p));
        CHECK(r.within_hasse_bound());
      } else {
        CHECK_FALSE(r.a_p.has_value());
      }
    }
  }
}

TEST_CASE("character count agrees with the double loop") {
  for (const auto& [a, b] : kCorpus) {
    for (std::uint64_t p : primes_up_to(200)) {
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(p);
      const auto naive = count_affine_naive(Integer(a), Integer(b), p);
      CHECK(count_affine_by_character(Integer(a), Integer(b), p) == naive);
      CHECK(reduce_curve(CurveSpec(Integer(a), Integer(b)), p).affine_count == naive);
    }
  }
  // singular reductions too: y^2 = x^3 at p = 5 has 5 points
  CHECK(count_affine_naive(Integer(0), Integer(0), 5) == 5);
  CHECK(count_affine_by_character(Integer(0), Integer(0), 5) == 5);
}

TEST_CASE("twists by u^4, u^6 preserve a_p") {
  for (const auto& [a, b] : kCorpus) {
    for (std::uint64_t p : primes_up_to(60)) {
      const auto base = reduce_curve(CurveSpec(Integer(a), Integer(b)), p);
      for (long u : {2L, 3L, 5L, 7L}) {
        if (static_cast<std::uint64_t>(u) % p == 0) continue;
        const Integer u2 = Integer(u) * u;
        const auto twisted = reduce_curve(CurveSpec(Integer(a) * u2 * u2, Integer(b) * u2 * u2 * u2), p);
        CHECK(twisted.kind == base.kind);
        CHECK(twisted.a_p == base.a_p);
      }
    }
  }
}

TEST_CASE("p | discriminant exactly when the reduction has a singular point") {
  for (const auto& [a, b] : kCorpus) {
    const CurveSpec e{Integer(a), Integer(b)};
    for (std::uint64_t p : primes_up_to(50)) {
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(p);
      CHECK(has_singular_point_mod_p(e.a(), e.b(), p) == (residue(e.discriminant(), Integer(p)) == 0));
    }
  }
}

TEST_CASE("ReductionData JSON") {
  const CurveSpec e(Integer(1), Integer(0));
  CHECK(to_json(reduce_curve(e, 2)) == R"({"p":"2","kind":"bad","affine_count":"2"})");
  CHECK(to_json(reduce_curve(e, 3)) == R"({"p":"3","kind":"good","affine_count":"3","a_p":"0"})");
  CHECK(to_json(reduce_curve(CurveSpec(Integer(-1), Integer(0)), 5)) ==
        R"({"p":"5","kind":"good","affine_count":"7","a_p":"-2"})");
}
