#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "jackweight/parallel.hpp"

using namespace jw;

TEST_CASE("every index runs exactly once") {
    for (int threads : {1, 2, 3, 8})
        for (std::size_t n : {0u, 1u, 7u, 100u}) {
            std::vector<std::atomic<int>> hits(n);
            parallel_for(n, threads, [&](std::size_t i) { hits[i]++; });
            for (auto& h : hits) CHECK(h.load() == 1);
        }
}

TEST_CASE("exceptions propagate") {
    CHECK_THROWS_AS(parallel_for(50, 4,
                                 [](std::size_t i) {
                                     if (i == 17) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("thread count from the environment") {
    setenv("JACKWEIGHT_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    unsetenv("JACKWEIGHT_THREADS");
    CHECK(default_threads() >= 1);
}
