#include <random>
#include <stdexcept>

#include "doctest.h"
#include "warpspec/spectrum.hpp"

using namespace warpspec;
using SD = SpectrumDescription;

namespace {

SD random_description(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 8), z(0, 2), count(0, 3);
    std::optional<Number> ray;
    if (pick(rng) % 2 == 0) ray = Number::fraction(pick(rng), 4);
    std::vector<Number> pts;
    for (int i = count(rng); i > 0; --i) pts.push_back(Number::fraction(pick(rng), 4));
    return SD::make(ray, pts, static_cast<ZeroStatus>(z(rng)));
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("normal form") {
    SD s = SD::make(Number(1), {Number(3), Number::fraction(1, 2), Number::fraction(1, 2)}, ZeroStatus::unknown);
    CHECK(s.points() == std::vector<Number>{Number::fraction(1, 2)});
    CHECK(*s.ray_start() == Number(1));
    CHECK(s.zero() == ZeroStatus::unknown);

    SD zero_ray = SD::ray(0);
    CHECK(zero_ray.zero() == ZeroStatus::included);

    SD included = SD::ray(Number::fraction(1, 4), ZeroStatus::included);
    CHECK(included.points() == std::vector<Number>{Number(0)});
    CHECK(included.to_string() == "{0} ∪ [1/4, inf), zero included");

    SD e = SD::empty(ZeroStatus::unknown);
    CHECK(e.is_empty());
    CHECK(e.to_string() == "empty (zero unknown)");
    CHECK(SD::ray(1, ZeroStatus::unknown).to_string() == "[1, inf), zero unknown");
}

TEST_CASE("contains and bottom") {
    SD s = SD::make(Number(2), {Number(1)}, ZeroStatus::excluded);
    CHECK(s.contains(Number(1)));
    CHECK_FALSE(s.contains(Number::fraction(3, 2)));
    CHECK(s.contains(Number(5)));
    CHECK(*s.bottom() == Number(1));
    CHECK_FALSE(SD::empty().bottom());
}

TEST_CASE("union joins zero status") {
    CHECK((SD::ray(1) | SD::empty(ZeroStatus::unknown)).zero() == ZeroStatus::unknown);
    CHECK((SD::ray(1, ZeroStatus::unknown) | SD::ray(2, ZeroStatus::included)).zero() == ZeroStatus::included);
    CHECK(*(SD::ray(3) | SD::ray(Number::fraction(1, 4))).ray_start() == Number::fraction(1, 4));
}

TEST_CASE("union is a commutative idempotent monoid") {
    std::mt19937 rng(3);
    for (int it = 0; it < 400; ++it) {
        SD x = random_description(rng), y = random_description(rng), z = random_description(rng);
        CHECK((x | y) == (y | x));
        CHECK(((x | y) | z) == (x | (y | z)));
        CHECK((x | x) == x);
        CHECK((x | SD::empty()) == x);
        CHECK(SD::make(x.ray_start(), x.points(), x.zero()) == x);
    }
}

TEST_CASE("same away from zero ignores the zero question") {
    CHECK(SD::ray(1, ZeroStatus::unknown).same_away_from_zero(SD::ray(1, ZeroStatus::included)));
    CHECK_FALSE(SD::ray(1).same_away_from_zero(SD::ray(2)));
}

}
