#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "flagwalk/perm.hpp"

using namespace flagwalk;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

} // namespace

TEST_CASE("permutation construction validates bijectivity") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
}

TEST_CASE("compose applies left argument first") {
    Permutation id = Permutation::identity(4);
    Permutation p = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    CHECK(compose(id, p) == p);
    CHECK(compose(p, id) == p);

    Permutation swap2 = Permutation::from_cycles(2, {{0, 1}});
    CHECK(compose(swap2, swap2) == Permutation::identity(2));

    Permutation q = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
    CHECK(compose(p, q) == Permutation::from_cycles(4, {{0, 3}, {1, 2}}));

    CHECK_THROWS_AS(compose(p, swap2), std::invalid_argument);
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(order(Permutation::identity(5)) == 1);
    CHECK(order(Permutation::from_cycles(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(order(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}})) == 6);
}

TEST_CASE("orbits_under") {
    auto singletons = orbits_under({Permutation::identity(3)}, 3);
    CHECK(singletons.count() == 3);

    auto one = orbits_under(
        {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
        4);
    CHECK(one.count() == 1);
    CHECK(one.orbits[0] == std::vector<int>{0, 1, 2, 3});

    auto three = orbits_under({Permutation::from_cycles(4, {{0, 1}})}, 4);
    CHECK(three.count() == 3);
    CHECK(three.orbits[0] == std::vector<int>{0, 1});
    CHECK(three.orbit_id[2] == 1);
    CHECK(three.orbit_id[3] == 2);

    CHECK_THROWS_AS(orbits_under({}, 0), std::invalid_argument);
}

TEST_CASE("cycle_of lists the orbit in application order") {
    CHECK(cycle_of(Permutation::identity(6), 5) == std::vector<int>{5});
    CHECK(cycle_of(Permutation::from_cycles(3, {{0, 1, 2}}), 1) == std::vector<int>{1, 2, 0});
    Permutation p = Permutation::from_cycles(6, {{0, 3}, {1, 2}, {4, 5}});
    CHECK(cycle_of(p, 4) == std::vector<int>{4, 5});
}

TEST_CASE("order_mod") {
    CHECK(order_mod(3, 12) == 4);
    CHECK(order_mod(0, 7) == 1);
    CHECK(order_mod(4, 12) == 3);
    CHECK(order_mod(-1, 5) == 5);
    CHECK_THROWS_AS(order_mod(1, 0), std::invalid_argument);
}

TEST_CASE("random permutation properties") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        Permutation p = random_perm(rng, n), q = random_perm(rng, n), r = random_perm(rng, n);

        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, p.inverse()) == Permutation::identity(n));
        CHECK(compose(p.inverse(), p) == Permutation::identity(n));

        int x = static_cast<int>(rng() % n);
        CHECK(order(p) % cycle_of(p, x).size() == 0);

        auto a = orbits_under({p, q}, n);
        auto b = orbits_under({q, p}, n);
        CHECK(a.orbit_id == b.orbit_id);
        CHECK(a.orbits == b.orbits);
    }
}
