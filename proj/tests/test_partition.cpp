#include <doctest.h>

#include <algorithm>
#include <map>

#include "carter/errors.hpp"
#include "carter/partition.hpp"
#include "oracles.hpp"

using namespace carter;

namespace {

std::vector<Partition> up_to(std::int64_t max_degree)
{
    std::vector<Partition> out;
    for (std::int64_t r = 0; r <= max_degree; ++r)
        for (auto& p : enumerate_partitions(r))
            out.push_back(p);
    return out;
}

std::vector<std::int64_t> sorted_hooks(const Partition& p)
{
    auto v = hook_table(p).values();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("make_partition strips trailing zeros and rejects increases")
{
    const std::vector<std::int64_t> raw{3, 1, 1, 0, 0};
    CHECK(make_partition(raw) == Partition{3, 1, 1});
    CHECK(make_partition({}).degree() == 0);
    CHECK(make_partition({}).is_zero());

    auto kind_of = [](std::vector<std::int64_t> parts) {
        try {
            make_partition(parts);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::DomainError;
    };
    CHECK(kind_of({2, 5}) == ErrorKind::NotWeaklyDecreasing);
    CHECK(kind_of({2, 0, 1}) == ErrorKind::NotWeaklyDecreasing);
    CHECK(kind_of({-1}) == ErrorKind::NotWeaklyDecreasing);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{5}) == Partition{1, 1, 1, 1, 1});
    CHECK(transpose(Partition{3, 1, 1}) == Partition{3, 1, 1});
    CHECK(transpose(Partition{4, 2}) == Partition{2, 2, 1, 1});

    for (const auto& p : up_to(15)) {
        REQUIRE(transpose(transpose(p)) == p);
        REQUIRE(transpose(p).degree() == p.degree());
    }
}

TEST_CASE("hook table matches cell walking")
{
    CHECK(hook_table(Partition{1}).at(1, 1) == 1);
    const auto t = hook_table(Partition{2, 1});
    CHECK(t.at(1, 1) == 3);
    CHECK(t.at(1, 2) == 1);
    CHECK(t.at(2, 1) == 1);
    CHECK_THROWS_AS(t.at(2, 2), Error);

    const auto core = hook_table(Partition{8, 5, 2});
    CHECK(std::none_of(core.values().begin(), core.values().end(), [](auto h) { return h % 4 == 0; }));

    for (const auto& p : up_to(12)) {
        const auto table = hook_table(p);
        REQUIRE(table.cell_count() == p.degree());
        for (std::int64_t a = 1; a <= p.length(); ++a) {
            for (std::int64_t b = 1; b <= p[a]; ++b) {
                REQUIRE(table.at(a, b) == oracle::hook_by_walking(p.parts(), a, b));
                const bool outer_corner = b == p[a] && p[a + 1] < b;
                if (outer_corner)
                    REQUIRE(table.at(a, b) == 1);
            }
        }
    }
}

TEST_CASE("hook multiset is transpose invariant")
{
    for (const auto& p : up_to(15))
        REQUIRE(sorted_hooks(p) == sorted_hooks(transpose(p)));
}

TEST_CASE("dominance order")
{
    CHECK(dominance_leq(Partition{3, 1}, Partition{3, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_FALSE(dominance_leq(Partition{1}, Partition{2}));

    for (std::int64_t r = 0; r <= 10; ++r) {
        const auto ps = enumerate_partitions(r);
        for (const auto& a : ps) {
            REQUIRE(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (a != b && dominance_leq(a, b))
                    REQUIRE_FALSE(dominance_leq(b, a));
                if (!dominance_leq(a, b))
                    continue;
                for (const auto& c : ps)
                    if (dominance_leq(b, c))
                        REQUIRE(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("regular and restricted")
{
    CHECK(is_l_regular(Partition{3, 1}, 2));
    CHECK_FALSE(is_l_regular(Partition{1, 1, 1}, 2));
    CHECK(is_l_regular(Partition{1, 1}, 3));
    CHECK(is_l_regular(Partition{}, 2));

    CHECK(is_l_restricted(Partition{8, 5, 2}, 4));
    CHECK_FALSE(is_l_restricted(Partition{4}, 4));
    CHECK(is_l_restricted(Partition{}, 7));

    CHECK_THROWS_AS(is_l_regular(Partition{1}, 1), Error);
    CHECK_THROWS_AS(is_l_restricted(Partition{1}, 0), Error);

    // Restricted and regular are swapped by transposition.
    for (const auto& p : up_to(12))
        for (std::int64_t l = 2; l <= 4; ++l)
            REQUIRE(is_l_restricted(p, l) == is_l_regular(transpose(p), l));
}

TEST_CASE("standard tableau count")
{
    CHECK(standard_tableau_count(Partition{7}) == 1);
    CHECK(standard_tableau_count(Partition{3, 1, 1}) == 6);
    CHECK(standard_tableau_count(Partition{2, 1}) == 2);

    std::map<oracle::Parts, std::int64_t> memo;
    for (const auto& p : up_to(12)) {
        REQUIRE(standard_tableau_count(p) == oracle::tableau_count_by_corners(p.parts(), memo));
        REQUIRE(standard_tableau_count(p) == standard_tableau_count(transpose(p)));
    }

    // 25! overflows 64 bits; (1^25) has exactly one tableau.
    CHECK(standard_tableau_count(omega(25)) == 1);
    CHECK(standard_tableau_count(Partition{20, 1}) == 20);
    CHECK(standard_tableau_count(Partition{12, 11}) == oracle::tableau_count_by_corners({12, 11}, memo));
}

TEST_CASE("enumeration order and counts")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4)
          == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK(enumerate_partitions(5, 2) == std::vector<Partition>{{5}, {4, 1}, {3, 2}});
    CHECK(enumerate_partitions(3, 0).empty());

    for (std::int64_t r = 0; r <= 30; ++r)
        REQUIRE(static_cast<std::int64_t>(enumerate_partitions(r).size()) == oracle::partition_count(r, r));

    for (std::int64_t r = 0; r <= 12; ++r) {
        std::vector<oracle::Parts> expected;
        oracle::Parts prefix;
        oracle::all_partitions(r, r, prefix, expected);
        const auto got = enumerate_partitions(r);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            REQUIRE(got[i].parts() == expected[i]);
        for (std::int64_t k = 1; k <= r; ++k) {
            // at most k parts <-> parts of size at most k (transpose)
            REQUIRE(static_cast<std::int64_t>(enumerate_partitions(r, k).size()) == oracle::partition_count(r, k));
        }
    }
}
