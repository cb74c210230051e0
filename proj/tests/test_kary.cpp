#include <catch_amalgamated.hpp>

#include "higman/kary.hpp"
#include "oracles.hpp"

using higman::ErrorCode;
using higman::Integer;
using higman::KRational;

namespace {
  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (higman::Error const& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::OutOfRange;
  }
}  // namespace

TEST_CASE("canonical form", "[kary]") {
  KRational half(2, 4, 3);
  CHECK(half.numerator() == 1);
  CHECK(half.exponent() == 1);

  KRational seven_eighths(2, 7, 3);
  CHECK(seven_eighths.numerator() == 7);
  CHECK(seven_eighths.exponent() == 3);

  KRational z(5, 0, 9);
  CHECK(z.numerator() == 0);
  CHECK(z.exponent() == 0);
  CHECK(z == KRational::zero(5));

  // integers keep their factors of k
  KRational four(2, 4, 0);
  CHECK(four.numerator() == 4);
  CHECK(four.num() == 1);

  CHECK(code_of([] { KRational(1); }) == ErrorCode::BaseTooSmall);
  CHECK(code_of([] { KRational(2, -1, 0); }) == ErrorCode::NegativeResult);
}

TEST_CASE("add, sub, compare", "[kary]") {
  CHECK(KRational(2, 1, 1) + KRational(2, 1, 2) == KRational(2, 3, 2));
  CHECK(KRational::one(2) - KRational(2, 1, 1) == KRational(2, 1, 1));
  CHECK(KRational(2, 1, 3) + KRational(2, 1, 3) + KRational(2, 1, 2) == KRational(2, 1, 1));
  CHECK(KRational(3, 1, 2) < KRational(3, 1, 1));
  CHECK(code_of([] { (void) (KRational(2, 1, 2) - KRational(2, 1, 1)); }) == ErrorCode::NegativeResult);
  CHECK(code_of([] { (void) (KRational(2, 1, 2) + KRational(3, 1, 1)); }) == ErrorCode::BaseMismatch);
  CHECK(code_of([] { (void) (KRational(2, 1, 2) < KRational(3, 1, 1)); }) == ErrorCode::BaseMismatch);
  CHECK(KRational(2, 1, 2) != KRational(3, 1, 2));
}

TEST_CASE("scale_pow and num", "[kary]") {
  CHECK(KRational(2, 1, 1).scale_pow(1) == KRational::one(2));
  CHECK(KRational(2, 7, 3).scale_pow(-1) == KRational(2, 7, 4));
  CHECK(KRational(2, 3, 1).scale_pow(4) == KRational(2, 24, 0));
  CHECK(KRational(2, 3, 2).num() == 3);
  CHECK(KRational::one(7).num() == 1);
  CHECK(KRational(2, 7, 3).num() == 7);
  CHECK(KRational::zero(3).num() == 0);
}

TEST_CASE("digits", "[kary]") {
  auto d = KRational(2, 7, 3).digits();
  CHECK(d.integer_part == 0);
  CHECK(d.fraction == std::vector<unsigned>{1, 1, 1});

  auto one = KRational::one(4).digits();
  CHECK(one.integer_part == 1);
  CHECK(one.fraction.empty());

  auto h = KRational::parse(5, "0.0031042");
  CHECK(h.digits().fraction == std::vector<unsigned>{0, 0, 3, 1, 0, 4, 2});
  CHECK(h.to_string() == "0.0031042");
  // 3*5^4 + 1*5^3 + 4*5 + 2 over 5^7
  CHECK(h == KRational(5, 3 * 625 + 125 + 20 + 2, 7));
}

TEST_CASE("digit sum modulo k-1", "[kary]") {
  CHECK(KRational::one(2).digitsum_mod() == 1);
  CHECK(KRational::parse(3, "0.21").digitsum_mod() == 1);
  CHECK(KRational(2, 1, 1).digitsum_mod() == 1);
  CHECK(KRational(5, 7, 2).digitsum_mod() == 3);
  CHECK(code_of([] { (void) KRational::zero(3).digitsum_mod(); }) == ErrorCode::ZeroValue);
}

TEST_CASE("text form", "[kary]") {
  CHECK(KRational(2, 1, 1).to_string() == "0.1");
  CHECK(KRational::one(2).to_string() == "1");
  CHECK(KRational::zero(2).to_string() == "0");
  CHECK(KRational(2, 5, 0).to_string() == "101");
  CHECK(KRational(16, 10 * 16 + 3, 2).to_string() == "0.[10,3]");
  CHECK(KRational(16, 17, 0).to_string() == "[1,1]");
  CHECK(KRational::parse(16, "0.[10,3]") == KRational(16, 163, 2));
  CHECK(KRational::parse(16, "1") == KRational::one(16));
  CHECK_THROWS_AS(KRational::parse(2, "0.10"), higman::ParseError);
  CHECK_THROWS_AS(KRational::parse(2, "0.2"), higman::ParseError);
  CHECK_THROWS_AS(KRational::parse(2, ".1"), higman::ParseError);
  CHECK_THROWS_AS(KRational::parse(16, "0.[16]"), higman::ParseError);
}

TEST_CASE("ring laws and round trips on random values", "[kary][random]") {
  oracle::Rng rng(11);
  for (unsigned k : {2U, 3U, 5U, 10U, 16U}) {
    for (int i = 0; i < 200; ++i) {
      auto x = oracle::random_kary(rng, k, 8);
      auto y = oracle::random_kary(rng, k, 8);
      auto z = oracle::random_kary(rng, k, 8);
      CHECK(x + y == y + x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x + y) - y == x);
      CHECK(oracle::to_rational(x + y) == oracle::to_rational(x) + oracle::to_rational(y));
      CHECK(oracle::to_rational(x * y) == oracle::to_rational(x) * oracle::to_rational(y));
      CHECK(KRational(k, x.numerator(), x.exponent()) == x);
      CHECK(KRational::parse(k, x.to_string()) == x);
      CHECK((x < y) == (oracle::to_rational(x) < oracle::to_rational(y)));
      if (!x.is_zero()) {
        CHECK(x.digitsum_mod() == higman::residue_1_to_km1(x.num(), k));
      }
    }
  }
}
