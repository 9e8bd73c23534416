#include <doctest.h>

#include <cmath>
#include <vector>

#include "csbound/rng.hpp"

using csbound::Rng;

TEST_CASE("same seed reproduces the stream bit for bit") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(42), d(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(c.normal() == d.normal());
        CHECK(c.uniform() == d.uniform());
    }
}

TEST_CASE("substreams with distinct ids differ") {
    Rng a = Rng::substream(7, 0);
    Rng b = Rng::substream(7, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (a.next_u64() == b.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("uniform stays in [0,1) and uniform_pos in (0,1]") {
    Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform_pos();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("normal moments") {
    Rng rng(11);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("bernoulli validates its argument") {
    Rng rng(1);
    CHECK_THROWS_AS(rng.bernoulli(1.5), std::invalid_argument);
    CHECK_THROWS_AS(rng.bernoulli(-0.1), std::invalid_argument);
    CHECK(rng.bernoulli(1.0) == true);
    CHECK(rng.bernoulli(0.0) == false);
}
