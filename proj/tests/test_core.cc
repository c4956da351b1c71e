/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <munch/core.hh>

#include <algorithm>
#include <numeric>
#include <random>

using namespace munch;
using std::vector;

namespace
{
    auto all_permutations(std::size_t n) -> vector<Permutation>
    {
        vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), std::size_t{0});
        vector<Permutation> result;
        do
            result.emplace_back(image);
        while (std::next_permutation(image.begin(), image.end()));
        return result;
    }

    auto random_matrix(std::mt19937 & rng, std::size_t k, std::size_t n) -> WeighingMatrix
    {
        std::uniform_int_distribution<int> entry(-1, 1);
        vector<std::int8_t> entries(k * n);
        for (auto & e : entries)
            e = static_cast<std::int8_t>(entry(rng));
        return WeighingMatrix{k, n, std::move(entries)};
    }
}

TEST_CASE("weigh follows the pan convention")
{
    auto id3 = CoinAssignment::identity(3);
    CHECK(weigh(WeighingMatrix::from_rows({{-1, 1, 0}}, 3), id3).to_string() == "+");
    CHECK(weigh(WeighingMatrix::from_rows({{1, 1, -1}}, 3), id3).to_string() == "0");
    CHECK(weigh(WeighingMatrix::from_rows({{1, -1, -1}}, 3), id3).to_string() == "-");
    CHECK(weigh(WeighingMatrix::empty(3), id3).size() == 0);
}

TEST_CASE("weigh rejects a length mismatch")
{
    CHECK_THROWS_AS((void) weigh(WeighingMatrix::from_rows({{-1, 1}}, 2), CoinAssignment::identity(3)), DimensionError);
}

TEST_CASE("weighing matrix construction validates")
{
    CHECK_THROWS_AS(WeighingMatrix(1, 0, {}), DimensionError);
    CHECK_THROWS_AS(WeighingMatrix(1, 2, {0}), DimensionError);
    CHECK_THROWS_AS(WeighingMatrix(1, 2, {0, 2}), Error);
    CHECK_NOTHROW(WeighingMatrix(0, 5, {}));
    // duplicate columns are fine at construction
    CHECK_NOTHROW((void) WeighingMatrix::from_rows({{1, 1}}, 2));
}

TEST_CASE("assignments must be permutations of 1..n")
{
    CHECK_NOTHROW(CoinAssignment({3, 1, 2}));
    CHECK_THROWS_AS(CoinAssignment({1, 1, 2}), Error);
    CHECK_THROWS_AS(CoinAssignment({0, 1, 2}), Error);
    CHECK_THROWS_AS(CoinAssignment({1, 2, 4}), Error);
    CHECK_THROWS_AS(CoinAssignment({}), Error);
}

TEST_CASE("row permutations")
{
    auto m = WeighingMatrix::from_rows({{0, 1}, {1, 0}}, 2);
    CHECK(apply_row_permutation(m, Permutation::identity(2)) == m);
    CHECK(apply_row_permutation(m, Permutation::transposition(2, 0, 1)) == WeighingMatrix::from_rows({{1, 0}, {0, 1}}, 2));

    std::mt19937 rng(7);
    auto big = random_matrix(rng, 4, 5);
    for (auto & sigma : all_permutations(4)) {
        CHECK(apply_row_permutation(apply_row_permutation(big, sigma), sigma.inverse()) == big);
        CHECK(apply_row_permutation(apply_row_permutation(big, sigma.inverse()), sigma) == big);
    }

    CHECK_THROWS_AS((void) apply_row_permutation(m, Permutation::identity(3)), DimensionError);
}

TEST_CASE("row order acts on the outcome the same way: w(σM) = σ·w(M)")
{
    std::mt19937 rng(11);
    auto perms = all_permutations(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 4, 6);
        auto& sigma = perms[std::size_t(trial) % perms.size()];
        CHECK(weigh_identity(apply_row_permutation(m, sigma)) == apply_row_permutation(weigh_identity(m), sigma));
    }
}

TEST_CASE("permute_assignment")
{
    auto id3 = CoinAssignment::identity(3);
    CHECK(permute_assignment(id3, Permutation::identity(3)) == id3);
    CHECK(permute_assignment(id3, Permutation::transposition(3, 0, 1)) == CoinAssignment({2, 1, 3}));
    CHECK_THROWS_AS((void) permute_assignment(id3, Permutation::identity(2)), DimensionError);

    SUBCASE("composition law, all pairs for n = 3")
    {
        auto perms = all_permutations(3);
        for (auto & p1 : perms)
            for (auto & p2 : perms)
                CHECK(permute_assignment(permute_assignment(id3, p1), p2) == permute_assignment(id3, compose(p2, p1)));
    }

    SUBCASE("composition law spot check for n = 4 from a non-identity start")
    {
        CoinAssignment a({3, 1, 4, 2});
        Permutation p1({1, 2, 3, 0}), p2({2, 0, 1, 3});
        CHECK(permute_assignment(permute_assignment(a, p1), p2) == permute_assignment(a, compose(p2, p1)));
    }

    SUBCASE("acting on the identity reaches every assignment exactly once")
    {
        vector<CoinAssignment> seen;
        for (auto & p : all_permutations(5))
            seen.push_back(permute_assignment(CoinAssignment::identity(5), p));
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        CHECK(seen.size() == 120);
    }
}

TEST_CASE("swapping weights of duplicated columns never changes the outcome")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto base = random_matrix(rng, 3, 5);
        vector<std::int8_t> entries(base.entries().begin(), base.entries().end());
        for (std::size_t r = 0; r < 3; ++r)
            entries[r * 5 + 4] = entries[r * 5 + 1];
        WeighingMatrix m{3, 5, entries};
        auto swapped = permute_assignment(CoinAssignment::identity(5), Permutation::transposition(5, 1, 4));
        CHECK(weigh(m, swapped) == weigh_identity(m));
    }
}

TEST_CASE("matrix file format")
{
    CHECK(parse_matrix("munch v1\n1 2\n-+\n") == WeighingMatrix::from_rows({{-1, 1}}, 2));
    CHECK(parse_matrix("munch v1\n0 3\n") == WeighingMatrix::empty(3));

    CHECK(serialize_matrix(WeighingMatrix::from_rows({{-1, 1}}, 2)) == "munch v1\n1 2\n-+\n");
    CHECK(serialize_matrix(WeighingMatrix::empty(3)) == "munch v1\n0 3\n");
    CHECK(serialize_matrix(WeighingMatrix::from_rows({{1, 0}, {0, 1}}, 2)) == "munch v1\n2 2\n+0\n0+\n");
}

TEST_CASE("matrix file diagnostics")
{
    auto expect = [](const char * text, ParseErrorKind kind, std::size_t line) {
        try {
            (void) parse_matrix(text);
            FAIL("parsed: " << text);
        }
        catch (const ParseError & e) {
            CHECK(e.kind() == kind);
            CHECK(e.line() == line);
        }
    };

    expect("munch v1\n1 2\n-+0\n", ParseErrorKind::RowLength, 3);
    expect("munch v1\n1 2\n-\n", ParseErrorKind::RowLength, 3);
    expect("munch v2\n1 2\n-+\n", ParseErrorKind::BadMagic, 1);
    expect("", ParseErrorKind::BadMagic, 1);
    expect("munch v1\nx 2\n-+\n", ParseErrorKind::BadHeader, 2);
    expect("munch v1\n1  2\n-+\n", ParseErrorKind::BadHeader, 2);
    expect("munch v1\n1\n", ParseErrorKind::BadHeader, 2);
    expect("munch v1\n", ParseErrorKind::BadHeader, 2);
    expect("munch v1\n65 2\n", ParseErrorKind::CapExceeded, 2);
    expect("munch v1\n1 1000001\n", ParseErrorKind::CapExceeded, 2);
    expect("munch v1\n1 0\n\n", ParseErrorKind::CapExceeded, 2);
    expect("munch v1\n1 2\n-x\n", ParseErrorKind::IllegalCharacter, 3);
    expect("munch v1\n1 2\n- \n", ParseErrorKind::IllegalCharacter, 3);
    expect("munch v1\n2 2\n-+\n", ParseErrorKind::RowCount, 4);
    expect("munch v1\n1 2\n-+\n0+\n", ParseErrorKind::RowCount, 4);
    expect("munch v1\n1 2\n-+", ParseErrorKind::MissingNewline, 3);
    expect("munch v1\r\n1 2\n-+\n", ParseErrorKind::BadMagic, 1);
}

TEST_CASE("parse/serialize round trip on random matrices up to 4x6")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> rows(0, 4), cols(1, 6);
    for (int trial = 0; trial < 10'000; ++trial) {
        auto m = random_matrix(rng, rows(rng), cols(rng));
        auto text = serialize_matrix(m);
        REQUIRE(parse_matrix(text) == m);
        REQUIRE(serialize_matrix(parse_matrix(text)) == text);
    }
}
