#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vilenkin/radix_system.hpp"

using namespace vilenkin;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected vilenkin::Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("build_radix_system products and lambda") {
  const RadixSystem dyadic({2, 2, 2});
  CHECK(dyadic.products() == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(dyadic.lambda() == 2);

  const RadixSystem mixed({2, 3, 4});
  CHECK(mixed.products() == std::vector<std::uint64_t>{1, 2, 6, 24});
  CHECK(mixed.lambda() == 4);
  CHECK(mixed.size() == 24);

  CHECK(code_of([] { RadixSystem({1, 2}, 2); }) == ErrorCode::invalid_radix);
  CHECK(code_of([] { RadixSystem({2}, 64); }) == ErrorCode::depth_too_large);
  CHECK(RadixSystem({2}, 63).size() == (std::uint64_t{1} << 63));
}

TEST_CASE("radix spec grammar") {
  const auto constant = RadixSystem::parse("2^10");
  CHECK(constant.depth() == 10);
  CHECK(constant.size() == 1024);
  CHECK(RadixSystem::parse("2,3,4") == RadixSystem({2, 3, 4}));
  CHECK(RadixSystem::parse("2,3,4", 9).size() == 13824);
  CHECK(RadixSystem::parse("3^7").size() == 2187);
  CHECK(RadixSystem::parse("2^4", 6).depth() == 6);
  CHECK(code_of([] { RadixSystem::parse("2,x"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { RadixSystem::parse("^3"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { RadixSystem::parse("1^3"); }) == ErrorCode::invalid_radix);
  CHECK(RadixSystem({2, 3, 4}).to_string() == "2,3,4");
}

TEST_CASE("decompose") {
  const auto dyadic = RadixSystem::constant(2, 3);
  auto five = decompose(5, dyadic);
  CHECK(five.digits == std::vector<int>{1, 0, 1});
  CHECK(five.order == 2);

  auto seven = decompose(7, RadixSystem({2, 3, 4}));
  CHECK(seven.digits == std::vector<int>{1, 0, 1});  // 7 = 1*1 + 0*2 + 1*6
  CHECK(seven.order == 2);

  auto zero = decompose(0, dyadic);
  CHECK(zero.digits == std::vector<int>{0, 0, 0});
  CHECK(zero.order == -1);

  CHECK(code_of([&] { decompose(8, dyadic); }) == ErrorCode::out_of_range);
}

TEST_CASE("compose/decompose round trip is exhaustive") {
  for (const auto& sys : {RadixSystem::parse("2^12"), RadixSystem::parse("3^7"), RadixSystem::parse("2,3,4", 9),
                          RadixSystem::parse("5,7,2,3")}) {
    for (std::uint64_t n = 0; n < sys.size(); ++n) {
      const auto idx = decompose(n, sys);
      REQUIRE(compose(idx.digits, sys) == n);
      for (int j = 0; j < sys.depth(); ++j) {
        REQUIRE(idx.digits[static_cast<std::size_t>(j)] < sys.radix(j));
      }
    }
  }
}

TEST_CASE("group operations") {
  const auto dyadic = RadixSystem::constant(2, 3);
  const auto sum = group_add(make_cell(std::vector<int>{1, 0, 1}, dyadic), make_cell(std::vector<int>{1, 1, 0}, dyadic), dyadic);
  CHECK(sum.coords == std::vector<int>{0, 1, 1});

  const RadixSystem small({2, 3});
  const auto x = make_cell(std::vector<int>{1, 2}, small);
  CHECK(group_add(x, x, small).coords == std::vector<int>{0, 1});
  CHECK(group_neg(make_cell(0, dyadic), dyadic).coords == std::vector<int>{0, 0, 0});
  CHECK(group_neg(x, small).coords == std::vector<int>{1, 1});

  CHECK(code_of([&] { group_add(x, sum, small); }) == ErrorCode::system_mismatch);
}

TEST_CASE("cell group is abelian (random triples)") {
  const auto sys = RadixSystem::parse("2,3,4,5,3");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = rng() % sys.size(), b = rng() % sys.size(), c = rng() % sys.size();
    REQUIRE(group_add(group_add(a, b, sys), c, sys) == group_add(a, group_add(b, c, sys), sys));
    REQUIRE(group_add(a, b, sys) == group_add(b, a, sys));
    REQUIRE(group_add(a, 0, sys) == a);
    REQUIRE(group_add(a, group_neg(a, sys), sys) == 0);
    const auto xa = make_cell(a, sys), xb = make_cell(b, sys);
    REQUIRE(group_add(xa, xb, sys).t == group_add(a, b, sys));
  }
}

TEST_CASE("cell measure") {
  CHECK(cell_measure(0, RadixSystem::constant(2, 3)) == 1.0);
  CHECK(cell_measure(3, RadixSystem::constant(2, 3)) == 1.0 / 8);
  CHECK(cell_measure(3, RadixSystem({2, 3, 4})) == doctest::Approx(1.0 / 24).epsilon(1e-15));
  CHECK(code_of([] { cell_measure(4, RadixSystem({2, 3, 4})); }) == ErrorCode::out_of_range);

  const RadixSystem sys({2, 3, 4});
  double total = 0;
  for (std::uint64_t t = 0; t < sys.size(); ++t) total += cell_measure(sys.depth(), sys);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  // exactly 1 for power-of-two sizes
  const auto dyadic = RadixSystem::constant(2, 10);
  double dyadic_total = 0;
  for (std::uint64_t t = 0; t < dyadic.size(); ++t) dyadic_total += cell_measure(10, dyadic);
  CHECK(dyadic_total == 1.0);
}

TEST_CASE("leading zero levels") {
  const RadixSystem sys({2, 3, 4});
  CHECK(leading_zero_levels(0, sys) == 3);
  CHECK(leading_zero_levels(1, sys) == 0);
  CHECK(leading_zero_levels(2, sys) == 1);
  CHECK(leading_zero_levels(6, sys) == 2);
  CHECK(sys.prefix(2) == RadixSystem({2, 3}));
}
