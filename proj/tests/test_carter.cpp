#include <doctest.h>

#include "carter/abacus.hpp"
#include "carter/carter.hpp"
#include "carter/errors.hpp"

using namespace carter;

TEST_CASE("nu_lp")
{
    CHECK(nu_lp(7, ModularParams(4, 3)) == 0);
    CHECK(nu_lp(20, ModularParams(4, 3)) == 1);
    CHECK(nu_lp(36, ModularParams(4, 3)) == 3);
    CHECK(nu_lp(8, ModularParams(4, 0)) == 1);
    CHECK(nu_lp(9, ModularParams(3, 3)) == 2);
    CHECK_THROWS_AS(nu_lp(0, ModularParams(4, 3)), Error);

    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t l : {2, 3, 4, 5, 7}) {
            if (l != p && l % p == 0)
                continue;
            std::int64_t r = l;
            for (std::int64_t k = 0; k <= 6; ++k, r *= p)
                REQUIRE(nu_lp(r, ModularParams(l, p)) == 1 + k);
        }
    }
}

TEST_CASE("is_carter examples")
{
    const auto a = is_carter(Partition{20, 9, 6}, ModularParams(4, 3));
    CHECK(a.carter);
    CHECK_FALSE(a.profile.first_violation);
    CHECK(a.profile.per_column[2] == std::vector<std::int64_t>{1, 1, 1});  // hooks 20, 8, 4
    CHECK(a.profile.per_column.size() == 20);

    const auto b = is_carter(Partition{17, 6, 4}, ModularParams(4, 3));
    CHECK_FALSE(b.carter);
    REQUIRE(b.profile.first_violation);
    CHECK(*b.profile.first_violation == 1);
    CHECK(b.profile.per_column[0] == std::vector<std::int64_t>{0, 0, 1});  // hooks 19, 7, 4

    for (std::int64_t n = 1; n <= 12; ++n)
        CHECK(is_carter(Partition{n}, ModularParams(3, 2)).carter);

    CHECK(is_injective_via_carter(Partition{20, 9, 6}, ModularParams(4, 3)));
    CHECK_FALSE(is_injective_via_carter(Partition{1, 1, 1}, ModularParams(2, 2)));
    CHECK_FALSE(is_injective_via_carter(Partition{17, 6, 4}, ModularParams(4, 3)));
}

TEST_CASE("profile shape")
{
    for (std::int64_t r = 0; r <= 12; ++r) {
        for (const auto& p : enumerate_partitions(r)) {
            const auto res = is_carter(p, ModularParams(3, 0));
            const auto conj = transpose(p);
            REQUIRE(static_cast<std::int64_t>(res.profile.per_column.size()) == p[1]);
            for (std::int64_t b = 1; b <= p[1]; ++b)
                REQUIRE(static_cast<std::int64_t>(res.profile.per_column[static_cast<std::size_t>(b - 1)].size())
                        == conj[b]);
        }
    }
}

TEST_CASE("cores are Carter with zero valuations")
{
    const ModularParams params(3, 2);
    for (std::int64_t r = 0; r <= 20; ++r) {
        for (const auto& p : enumerate_partitions(r)) {
            if (!is_l_core(p, 3))
                continue;
            const auto res = is_carter(p, params);
            REQUIRE(res.carter);
            for (const auto& col : res.profile.per_column)
                for (auto v : col)
                    REQUIRE(v == 0);
        }
    }
}

TEST_CASE("adding a longest row leaves later columns alone")
{
    const ModularParams params(2, 3);
    for (std::int64_t n = 1; n <= 10; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            const auto single = is_carter(Partition{m}, params);
            const auto doubled = is_carter(Partition{n, m}, params);
            REQUIRE(static_cast<std::int64_t>(doubled.profile.per_column.size()) == n);
            for (std::int64_t b = m + 1; b <= n; ++b)
                REQUIRE(doubled.profile.per_column[static_cast<std::size_t>(b - 1)].size() == 1);
            REQUIRE(static_cast<std::int64_t>(single.profile.per_column.size()) == m);
        }
    }
}
