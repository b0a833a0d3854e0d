#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/ideal.hpp"
#include "pathdepth/ideal_io.hpp"

using namespace pathdepth;
using oracles::ideal_of;
using oracles::mono_of;

TEST_SUITE_BEGIN("monomial-core");

TEST_CASE("monomial basics") {
    monomial one(3);
    CHECK(one.is_unit());
    CHECK(one.str() == "1");
    monomial m = mono_of(3, "x1^2*x3");
    CHECK(m.exponent(1) == 2);
    CHECK(m.exponent(2) == 0);
    CHECK(m.exponent(3) == 1);
    CHECK(m.total_degree() == 3);
    CHECK(m.support() == std::vector<int>{1, 3});
    CHECK(one.divides(m));
    CHECK_FALSE(m.divides(one));
    CHECK(monomial::lcm(mono_of(3, "x1*x2"), mono_of(3, "x2^2*x3")) == mono_of(3, "x1*x2^2*x3"));
    CHECK_THROWS_AS(m * monomial(4), ring_mismatch_error);
    CHECK_THROWS_AS(monomial(0), parameter_error);
}

TEST_CASE("checked exponent arithmetic overflows cleanly") {
    monomial big({max_exponent, 0});
    CHECK_THROWS_AS(big * monomial({1, 0}), exponent_overflow_error);
    CHECK_NOTHROW(big * monomial({0, 1}));
}

TEST_CASE("minimalize drops divisible generators and canonicalizes") {
    CHECK(ideal_of(2, {"x1*x2", "x1*x2^2"}) == ideal_of(2, {"x1*x2"}));
    CHECK(monomial_ideal::from_generators(3, {}) == monomial_ideal::zero(3));
    CHECK(monomial_ideal::zero(3).is_zero());
    CHECK(monomial_ideal::unit(3).is_unit());

    // pairwise products of the generators of the 2-path ideal in 3 vars,
    // expected value frozen from the naive antichain oracle
    monomial_ideal I32 = path_ideal(3, 2);
    std::vector<monomial> products;
    for (const auto& a : I32.generators())
        for (const auto& b : I32.generators()) products.push_back(a * b);
    auto expect = oracles::naive_minimal_strings(products);
    CHECK(expect == std::set<std::string>{"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"});
    CHECK(oracles::gen_strings(monomial_ideal::from_generators(3, products)) == expect);
}

TEST_CASE("minimalize is idempotent and order-insensitive") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + it % 4;
        std::vector<monomial> raw;
        for (int i = 0; i < 6; ++i) raw.push_back(oracles::random_monomial(rng, n, 3));
        monomial_ideal a = monomial_ideal::from_generators(n, raw);
        std::shuffle(raw.begin(), raw.end(), rng);
        monomial_ideal b = monomial_ideal::from_generators(n, raw);
        CHECK(a == b);
        CHECK(monomial_ideal::from_generators(n, a.generators()) == a);
        CHECK(oracles::gen_strings(a) == oracles::naive_minimal_strings(raw));
    }
}

TEST_CASE("membership") {
    monomial_ideal I = path_ideal(3, 2);
    CHECK_FALSE(I.contains(mono_of(3, "x1*x3")));
    CHECK(I.contains(mono_of(3, "x1*x2*x3")));
    CHECK_FALSE(monomial_ideal::zero(3).contains(mono_of(3, "x1*x3")));
    CHECK_THROWS_AS(I.contains(monomial(4)), ring_mismatch_error);
}

TEST_CASE("product and power") {
    CHECK(power(monomial_ideal::principal(mono_of(3, "x1*x2*x3")), 2) ==
          ideal_of(3, {"x1^2*x2^2*x3^2"}));
    monomial_ideal I = path_ideal(3, 2);
    CHECK(power(I, 1) == I);
    CHECK(power(I, 2) == ideal_of(3, {"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"}));
    CHECK_THROWS_AS(power(I, 0), parameter_error);
    CHECK(multiply(I, monomial_ideal::zero(3)).is_zero());
    CHECK(multiply(I, monomial_ideal::unit(3)) == I);
}

TEST_CASE("products of t generators always land in the t-th power") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 3, 4, 2);
        int t = 1 + it % 3;
        monomial_ideal P = power(I, t);
        std::uniform_int_distribution<std::size_t> pick(0, I.generator_count() - 1);
        monomial prod(3);
        for (int i = 0; i < t; ++i) prod = prod * I.generators()[pick(rng)];
        CHECK(P.contains(prod));
    }
}

TEST_CASE("colon") {
    monomial_ideal I = path_ideal(3, 2);
    CHECK(colon(power(I, 2), mono_of(3, "x2*x3")) == I);
    CHECK(colon(I, monomial(3)) == I);
    CHECK(colon(power(path_ideal(4, 2), 2), mono_of(4, "x4")) ==
          ideal_of(4, {"x1^2*x2^2", "x1*x2*x3", "x2*x3^2", "x3^2*x4"}));
}

TEST_CASE("colon agrees with box-exhaustive membership") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 3, 4, 2);
        monomial u = oracles::random_monomial(rng, 3, 2);
        monomial_ideal Q = colon(I, u);
        for (const auto& v : oracles::box_below(monomial({3, 3, 3})))
            CHECK(Q.contains(v) == I.contains(v * u));
    }
}

TEST_CASE("iterated colon composes multiplicatively") {
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 4, 5, 2);
        monomial u = oracles::random_monomial(rng, 4, 2);
        monomial v = oracles::random_monomial(rng, 4, 2);
        CHECK(colon(colon(I, u), v) == colon(I, u * v));
    }
}

TEST_CASE("u * (I:u) stays inside I; equality is detected canonically") {
    std::mt19937 rng(17);
    for (int it = 0; it < 60; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 3, 4, 2);
        monomial u = oracles::random_monomial(rng, 3, 2);
        monomial_ideal scaled = multiply(monomial_ideal::principal(u), colon(I, u));
        CHECK(I.contains(scaled));
    }
    // when every generator is divisible by u, I == u * (I:u) exactly
    monomial_ideal J = ideal_of(3, {"x1^2*x2", "x1*x2*x3^2"});
    monomial u = mono_of(3, "x1");
    CHECK(multiply(monomial_ideal::principal(u), colon(J, u)) == J);
}

TEST_CASE("sum and intersection") {
    CHECK(add(path_ideal(3, 2), monomial_ideal::variables(3, {3})) ==
          ideal_of(3, {"x1*x2", "x3"}));
    CHECK(intersect(monomial_ideal::variables(4, {1, 3}), monomial_ideal::variables(4, {2, 4})) ==
          ideal_of(4, {"x1*x2", "x1*x4", "x2*x3", "x3*x4"}));
    monomial_ideal I = path_ideal(4, 2);
    CHECK(intersect(I, I) == I);
}

TEST_CASE("sum/intersection algebra on random ideals") {
    std::mt19937 rng(19);
    for (int it = 0; it < 50; ++it) {
        monomial_ideal a = oracles::random_ideal(rng, 3, 4, 2);
        monomial_ideal b = oracles::random_ideal(rng, 3, 4, 2);
        monomial_ideal c = oracles::random_ideal(rng, 3, 4, 2);
        CHECK(add(a, b) == add(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(add(a, intersect(a, b)) == a);
        // membership cross-check of the intersection
        monomial u = oracles::random_monomial(rng, 3, 3);
        CHECK(intersect(a, b).contains(u) == (a.contains(u) && b.contains(u)));
    }
}

TEST_CASE("lcm lattice") {
    auto lat = lcm_lattice(path_ideal(3, 2));
    CHECK(lat == std::vector<monomial>{monomial{0, 1, 1}, monomial{1, 1, 0}, monomial{1, 1, 1}});
    CHECK(lcm_lattice(monomial_ideal::principal(mono_of(2, "x1*x2^2"))) ==
          std::vector<monomial>{mono_of(2, "x1*x2^2")});

    // frozen from the subset-enumeration oracle: 7 nonempty subsets of
    // G(I_{4,2}) produce 6 distinct joins
    auto naive = oracles::naive_lattice(path_ideal(4, 2));
    CHECK(naive.size() == 6);
    auto fast = lcm_lattice(path_ideal(4, 2));
    CHECK(std::set<monomial>(fast.begin(), fast.end()) == naive);

    CHECK_THROWS_AS(lcm_lattice(path_ideal(30, 1)), resource_limit_error);
}

TEST_CASE("lcm lattice matches subset enumeration on random ideals") {
    std::mt19937 rng(23);
    for (int it = 0; it < 30; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 4, 6, 3);
        auto fast = lcm_lattice(I);
        CHECK(std::set<monomial>(fast.begin(), fast.end()) == oracles::naive_lattice(I));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
}

TEST_CASE("text format round-trips canonical forms") {
    monomial_ideal I = power(path_ideal(4, 2), 2);
    CHECK(parse_ideal_text(ideal_to_text(I)) == I);
    CHECK(parse_ideal_text("ring n=3\n# comment\n\nx1*x2\n2:1 3:1\n") == path_ideal(3, 2));
    CHECK(parse_ideal_text("ring n=2\n") == monomial_ideal::zero(2));
    CHECK(parse_ideal_text("ring n=2\n1\n") == monomial_ideal::unit(2));
    CHECK(parse_ideal_text(ideal_to_text(monomial_ideal::zero(5))) == monomial_ideal::zero(5));

    CHECK_THROWS_AS(parse_ideal_text("x1*x2\n"), input_error);
    CHECK_THROWS_AS(parse_ideal_text("ring n=2\nx3\n"), input_error);
    CHECK_THROWS_AS(parse_ideal_text("ring n=2\nx1^\n"), input_error);
    CHECK_THROWS_AS(parse_ideal_text("ring n=2\n1:2 oops\n"), input_error);
}

TEST_CASE("round-trip on random ideals") {
    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        monomial_ideal I = oracles::random_ideal(rng, 2 + it % 5, 6, 4);
        CHECK(parse_ideal_text(ideal_to_text(I)) == I);
    }
}

TEST_SUITE_END();
