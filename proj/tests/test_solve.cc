/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <munch/bounds.hh>
#include <munch/proofkit.hh>
#include <munch/solve.hh>
#include <munch/verify.hh>

#include <algorithm>
#include <numeric>

using namespace munch;
using std::vector;

namespace
{
    // B(n) by enumerating every k×n matrix with the n! oracle; independent of the subset search.
    auto brute_force_baron(std::size_t n) -> unsigned
    {
        for (unsigned k = 0;; ++k) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < k * n; ++i)
                total *= 3;
            for (std::uint64_t code = 0; code < total; ++code) {
                vector<std::int8_t> entries(k * n);
                auto c = code;
                for (auto & e : entries) {
                    e = static_cast<std::int8_t>(int(c % 3) - 1);
                    c /= 3;
                }
                if (verify_oracle(WeighingMatrix{k, n, entries}).verdict == Verdict::Unique)
                    return k;
            }
        }
    }

    auto check_witness_matrix(const WeighingMatrix & m) -> void
    {
        auto f = verify_fast(m);
        REQUIRE(std::holds_alternative<VerificationResult>(f));
        CHECK(std::get<VerificationResult>(f).verdict == Verdict::Unique);
        if (m.cols() <= oracle_max_coins)
            CHECK(verify_oracle(m).verdict == Verdict::Unique);
        CHECK(ColumnSet{m}.size() == m.cols());
    }
}

TEST_CASE("column codes")
{
    CHECK(decode_column(0, 2) == vector<std::int8_t>{-1, -1});
    CHECK(decode_column(1, 2) == vector<std::int8_t>{-1, 0});
    CHECK(decode_column(8, 2) == vector<std::int8_t>{1, 1});
    for (std::uint64_t c = 0; c < 81; ++c)
        CHECK(encode_column(decode_column(c, 4)) == c);
    CHECK(pattern_code(SignVector{{Sign::Plus, Sign::Minus}}) == 6);
}

TEST_CASE("colex subset enumeration")
{
    vector<std::uint64_t> s{0, 1};
    vector<vector<std::uint64_t>> seen{s};
    while (next_colex_subset(s, 4))
        seen.push_back(s);
    CHECK(seen == vector<vector<std::uint64_t>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});

    // C(9, 4) subsets, each visited once
    vector<std::uint64_t> t{0, 1, 2, 3};
    std::size_t count = 1;
    while (next_colex_subset(t, 9))
        ++count;
    CHECK(count == 126);
}

TEST_CASE("sign-pattern buckets match direct recomputation for n = 4, k = 2")
{
    vector<std::uint64_t> subset{0, 1, 2, 3};
    do {
        auto counts = sign_pattern_counts(subset, 2);

        std::map<std::uint64_t, std::uint64_t> expected;
        vector<std::int8_t> entries(2 * 4);
        for (std::size_t c = 0; c < 4; ++c) {
            auto column = decode_column(subset[c], 2);
            entries[c] = column[0];
            entries[4 + c] = column[1];
        }
        WeighingMatrix m{2, 4, entries};
        vector<std::int64_t> weights{1, 2, 3, 4};
        do
            ++expected[pattern_code(weigh(m, CoinAssignment{weights}))];
        while (std::next_permutation(weights.begin(), weights.end()));

        REQUIRE(counts == expected);
    } while (next_colex_subset(subset, 9));
}

TEST_CASE("exists_munchhausen examples")
{
    auto two = exists_munchhausen(2, 1);
    REQUIRE(two.status == SearchStatus::Witness);
    CHECK(*two.matrix == WeighingMatrix::from_rows({{-1, 1}}, 2));
    check_witness_matrix(*two.matrix);

    auto three = exists_munchhausen(3, 1);
    CHECK(three.status == SearchStatus::ExhaustedNone);
    CHECK(three.explored == 1);

    auto too_many = exists_munchhausen(4, 1);
    CHECK(too_many.status == SearchStatus::ExhaustedNone);
    CHECK(too_many.explored == 0);

    // all nine columns forced: the full design, which swapping two rows defeats
    CHECK(exists_munchhausen(9, 2).status == SearchStatus::ExhaustedNone);
}

TEST_CASE("the single full subset at k = 4 is not Münchhausen")
{
    auto outcome = exists_munchhausen(81, 4, 100'000);
    CHECK(outcome.status == SearchStatus::ExhaustedNone);
    CHECK(outcome.explored == 1);
    // independently: the exclusion inequality and the constructive certificate
    CHECK(excluded(81, 4));
    CHECK(weigh(full_matrix(4), counterexample_full(4)) == weigh_identity(full_matrix(4)));
}

TEST_CASE("witness subsets reconstruct the reported matrix")
{
    auto outcome = exists_munchhausen(5, 2);
    REQUIRE(outcome.status == SearchStatus::Witness);
    auto & subset = *outcome.subset;
    auto & a = *outcome.assignment;
    for (std::size_t c = 0; c < 5; ++c)
        CHECK(outcome.matrix->column(std::size_t(a[c] - 1)) == decode_column(subset[c], 2));
    check_witness_matrix(*outcome.matrix);
}

TEST_CASE("budget cut-off is deterministic across worker counts")
{
    auto serial = exists_munchhausen(6, 3, 50'000, 1);
    auto parallel = exists_munchhausen(6, 3, 50'000, 8);
    CHECK(serial.status == parallel.status);
    CHECK(serial.explored == parallel.explored);
    CHECK(serial.evaluations == parallel.evaluations);
}

TEST_CASE("small values of B(n) match the brute-force oracle")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto r = baron(n);
        CHECK(r.value == brute_force_baron(n));
        CHECK(r.minimality == Minimality::Proven);
        check_witness_matrix(r.witness);
    }
    // frozen from a separate Python enumeration
    CHECK(baron(1).value == 0);
    CHECK(baron(2).value == 1);
    CHECK(baron(3).value == 2);
    CHECK(baron(4).value == 2);
    CHECK(baron(5).value == 2);
    CHECK(baron(1).witness == WeighingMatrix::empty(1));
}

TEST_CASE("baron stays inside its bounds and is scheduling independent")
{
    // n = 8 at k = 3 needs a few hundred million evaluations; seven is enough here
    for (std::size_t n = 2; n <= 7; ++n) {
        auto one = baron(n, SolveConfig{1});
        auto many = baron(n, SolveConfig{8});
        CHECK(one.value == many.value);
        CHECK(one.witness == many.witness);
        CHECK(one.minimality == many.minimality);
        CHECK(one.value >= trivial_lower(n));
        CHECK(one.value >= lower_bound(n));
        CHECK(one.value <= n - 1);
        check_witness_matrix(one.witness);
        CHECK(std::holds_alternative<Injective>(audit_injectivity(one.witness)));
    }
}

TEST_CASE("exhausted budget falls back to an upper bound")
{
    auto r = baron(4, SolveConfig{1, 10});
    CHECK(r.minimality == Minimality::UpperBoundOnly);
    CHECK(r.value == 3);
    CHECK(r.witness == chain_construction(4));
    CHECK_THROWS_AS((void) baron(10), LimitError);
    CHECK_THROWS_AS((void) baron(0), Error);
}

TEST_CASE("sequence and b-file")
{
    auto results = sequence(2);
    REQUIRE(results.size() == 2);
    CHECK(results[0].value == 0);
    CHECK(results[1].value == 1);
    CHECK(format_bfile(results) == "# Baron's omni-sequence B(n), OEIS A186313\n1 0\n2 1\n");

    auto four = sequence(4);
    for (auto & r : four) {
        CHECK(r.value >= trivial_lower(r.n));
        if (r.n >= 2)
            CHECK(r.value <= r.n - 1);
    }

    vector<BaronResult> partial{baron(3), baron(4, SolveConfig{1, 10})};
    CHECK(format_bfile(partial) == "# Baron's omni-sequence B(n), OEIS A186313\n3 2\n# 4 <= 3 (upper bound only)\n");
}
