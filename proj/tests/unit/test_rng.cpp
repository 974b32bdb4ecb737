#include <doctest.h>

#include "growthnet/rng.hpp"

using growthnet::Rng;

TEST_CASE("bounded draws stay in range and cover the range") {
    Rng rng(7);
    std::vector<int> hits(10, 0);
    for (int i = 0; i < 20000; ++i) {
        const auto x = rng.below(10);
        REQUIRE(x < 10);
        ++hits[x];
    }
    for (int h : hits) CHECK(h > 1500); // crude uniformity check
}

TEST_CASE("identical seeds give identical streams") {
    Rng a(123456), b(123456);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next() == b.next());
        CHECK(a.below(997) == b.below(997));
    }
}

TEST_CASE("unit() lands in [0,1)") {
    Rng rng(9);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}
