#include "sl3coh/weyl.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace sl3coh;

TEST_CASE("lengths")
{
    CHECK(length(WeylElement::e) == 0);
    CHECK(length(WeylElement::s_alpha) == 1);
    CHECK(length(WeylElement::s_beta) == 1);
    CHECK(length(WeylElement::s_beta_alpha) == 2);
    CHECK(length(WeylElement::s_alpha_beta) == 2);
    CHECK(length(WeylElement::w0) == 3);
}

TEST_CASE("dot action closed forms")
{
    CHECK(dot_action(WeylElement::s_alpha, {0, 0}) == Weight{-2, 1});
    CHECK(dot_action(WeylElement::w0, {1, 1}) == Weight{-3, -3});
    CHECK(dot_action(WeylElement::e, {4, 7}) == Weight{4, 7});
}

TEST_CASE("closed forms agree with the reflection-matrix definition")
{
    for (long long a = -20; a <= 20; ++a)
        for (long long b = -20; b <= 20; ++b)
            for (WeylElement w : kWeylElements) {
                const Weight lam{a, b};
                if (dot_action(w, lam) != dot_action_from_definition(w, lam)) {
                    CAPTURE(name(w));
                    CAPTURE(a);
                    CAPTURE(b);
                    FAIL("closed form disagrees with w(lam+rho)-rho");
                }
            }
}

TEST_CASE("reflections are dot-action involutions")
{
    for (long long a = -20; a <= 20; ++a)
        for (long long b = -20; b <= 20; ++b)
            for (WeylElement w : {WeylElement::s_alpha, WeylElement::s_beta, WeylElement::w0}) {
                const Weight lam{a, b};
                CHECK(dot_action(w, dot_action(w, lam)) == lam);
            }
}

TEST_CASE("length-2 rows compose from the reflections")
{
    for (long long a = -20; a <= 20; ++a)
        for (long long b = -20; b <= 20; ++b) {
            const Weight lam{a, b};
            CHECK(dot_action(WeylElement::s_alpha_beta, lam) ==
                  dot_action(WeylElement::s_alpha, dot_action(WeylElement::s_beta, lam)));
            CHECK(dot_action(WeylElement::s_beta_alpha, lam) ==
                  dot_action(WeylElement::s_beta, dot_action(WeylElement::s_alpha, lam)));
        }
}

TEST_CASE("G-linkage to zero")
{
    CHECK(g_linked_to_zero(5, {3, 3}));
    CHECK_FALSE(g_linked_to_zero(5, {1, 1}));
    for (long long p : {2, 3, 5, 7})
        CHECK(g_linked_to_zero(p, {0, 0}));

    // Among restricted weights only (0,0) and (p-2,p-2) are G-linked to zero.
    for (long long p : {5, 7}) {
        std::vector<Weight> linked;
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b)
                if (g_linked_to_zero(p, {a, b}))
                    linked.push_back({a, b});
        CHECK(linked == std::vector<Weight>{{0, 0}, {p - 2, p - 2}});
    }
}

TEST_CASE("G1-linkage of restricted weights")
{
    CHECK(g1_linked_restricted(5, {3, 1}));
    CHECK(g1_linked_restricted(5, {2, 0}));
    CHECK_FALSE(g1_linked_restricted(5, {1, 1}));
    CHECK_THROWS_AS(g1_linked_restricted(5, {5, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_g1_linked")
{
    CHECK(enumerate_g1_linked(5) ==
          std::vector<Weight>{{0, 0}, {0, 2}, {1, 3}, {2, 0}, {3, 1}, {3, 3}});
    CHECK(enumerate_g1_linked(2) == std::vector<Weight>{{0, 0}, {0, 1}, {1, 0}});
    // p=3 coincidences: (p-2,1) = (1,p-2) = (p-2,p-2) = (1,1) and
    // (p-3,0) = (0,p-3) = (0,0), so the set has just two elements.
    CHECK(enumerate_g1_linked(3) == std::vector<Weight>{{0, 0}, {1, 1}});
    CHECK(enumerate_g1_linked(7) ==
          std::vector<Weight>{{0, 0}, {0, 4}, {1, 5}, {4, 0}, {5, 1}, {5, 5}});

    for (long long p : {2, 3, 5, 7, 11}) {
        std::vector<Weight> scanned;
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b)
                if (g1_linked_restricted(p, {a, b}))
                    scanned.push_back({a, b});
        CHECK(scanned == enumerate_g1_linked(p));
    }
}

TEST_CASE("G-linkage implies G1-linkage on restricted weights")
{
    for (long long p : {2, 3, 5, 7})
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b)
                if (g_linked_to_zero(p, {a, b}))
                    CHECK(g1_linked_restricted(p, {a, b}));
}
