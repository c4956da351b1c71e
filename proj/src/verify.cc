/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/verify.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::pair;
using std::size_t;
using std::vector;

namespace munch
{
    auto first_duplicate_columns(const WeighingMatrix & m) -> optional<pair<size_t, size_t>>
    {
        std::map<vector<std::int8_t>, size_t> seen;
        for (size_t j = 0; j < m.cols(); ++j) {
            auto [it, inserted] = seen.emplace(m.column(j), j);
            if (! inserted)
                return pair{it->second, j};
        }
        return std::nullopt;
    }

    auto verify_oracle(const WeighingMatrix & m) -> VerificationResult
    {
        if (m.cols() > oracle_max_coins)
            throw LimitError("the enumeration oracle handles at most " + std::to_string(oracle_max_coins) + " coins");

        auto target = weigh_identity(m);
        vector<std::int64_t> weights(m.cols());
        std::iota(weights.begin(), weights.end(), std::int64_t{1});

        // next_permutation from the sorted start walks assignments in lexicographic order
        while (std::next_permutation(weights.begin(), weights.end())) {
            CoinAssignment candidate{weights};
            if (weigh(m, candidate) == target)
                return VerificationResult{Verdict::Ambiguous, std::move(candidate), std::move(target)};
        }
        return VerificationResult{Verdict::Unique, std::nullopt, std::move(target)};
    }

    namespace
    {
        struct FastSearch
        {
            const WeighingMatrix & m;
            size_t k, n;
            vector<Sign> target;
            vector<size_t> order;

            vector<std::int64_t> sums;
            vector<size_t> plus_left, minus_left;
            vector<char> used;
            vector<std::int64_t> assigned;
            vector<std::int64_t> remaining, prefix;
            size_t deviations = 0;

            std::uint64_t nodes = 0;

            FastSearch(const WeighingMatrix & mm, const SignVector & t) :
                m(mm),
                k(mm.rows()),
                n(mm.cols()),
                target(t.signs().begin(), t.signs().end()),
                order(mm.cols()),
                sums(mm.rows(), 0),
                plus_left(mm.rows(), 0),
                minus_left(mm.rows(), 0),
                used(mm.cols() + 1, 0),
                assigned(mm.cols(), 0)
            {
                vector<size_t> participation(n, 0);
                for (size_t i = 0; i < k; ++i) {
                    auto row = m.row(i);
                    for (size_t j = 0; j < n; ++j) {
                        if (row[j] != 0)
                            ++participation[j];
                        if (row[j] > 0)
                            ++plus_left[i];
                        else if (row[j] < 0)
                            ++minus_left[i];
                    }
                }
                std::iota(order.begin(), order.end(), size_t{0});
                std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                    return participation[a] > participation[b];
                });
            }

            auto assign(size_t coin, std::int64_t w) -> void
            {
                assigned[coin] = w;
                used[w] = 1;
                if (w != std::int64_t(coin + 1))
                    ++deviations;
                for (size_t i = 0; i < k; ++i) {
                    auto e = m.at(i, coin);
                    if (e > 0) {
                        sums[i] += w;
                        --plus_left[i];
                    }
                    else if (e < 0) {
                        sums[i] -= w;
                        --minus_left[i];
                    }
                }
            }

            auto unassign(size_t coin) -> void
            {
                auto w = assigned[coin];
                used[w] = 0;
                if (w != std::int64_t(coin + 1))
                    --deviations;
                for (size_t i = 0; i < k; ++i) {
                    auto e = m.at(i, coin);
                    if (e > 0) {
                        sums[i] -= w;
                        ++plus_left[i];
                    }
                    else if (e < 0) {
                        sums[i] += w;
                        ++minus_left[i];
                    }
                }
                assigned[coin] = 0;
            }

            // Can every row still reach its target sign with the unassigned weights?
            auto feasible() -> bool
            {
                remaining.clear();
                for (size_t w = 1; w <= n; ++w)
                    if (! used[w])
                        remaining.push_back(std::int64_t(w));
                prefix.assign(remaining.size() + 1, 0);
                for (size_t i = 0; i < remaining.size(); ++i)
                    prefix[i + 1] = prefix[i] + remaining[i];
                auto r = remaining.size();
                auto bottom = [&](size_t c) { return prefix[c]; };
                auto top = [&](size_t c) { return prefix[r] - prefix[r - c]; };

                for (size_t i = 0; i < k; ++i) {
                    auto hi = sums[i] + top(plus_left[i]) - bottom(minus_left[i]);
                    auto lo = sums[i] + bottom(plus_left[i]) - top(minus_left[i]);
                    switch (target[i]) {
                    case Sign::Plus:
                        if (hi <= 0) return false;
                        break;
                    case Sign::Minus:
                        if (lo >= 0) return false;
                        break;
                    case Sign::Zero:
                        if (lo > 0 || hi < 0) return false;
                        break;
                    }
                }
                return true;
            }
        };
    }

    auto verify_fast(const WeighingMatrix & m, const VerifyBudget & budget) -> std::variant<VerificationResult, BudgetExceeded>
    {
        auto target = weigh_identity(m);

        if (auto dup = first_duplicate_columns(m)) {
            auto witness = permute_assignment(CoinAssignment::identity(m.cols()),
                Permutation::transposition(m.cols(), dup->first, dup->second));
            return VerificationResult{Verdict::Ambiguous, std::move(witness), std::move(target)};
        }

        FastSearch search{m, target};
        auto n = m.cols();
        auto start = std::chrono::steady_clock::now();

        // next_try[d] is the next weight to try for coin order[d]
        vector<std::int64_t> next_try(n + 1, 1);
        size_t depth = 0;
        bool entering = true;

        while (true) {
            if (entering) {
                entering = false;
                ++search.nodes;
                if (search.nodes > budget.max_nodes)
                    return BudgetExceeded{search.nodes - 1};
                if (budget.max_elapsed && (search.nodes & 1023) == 0
                    && std::chrono::steady_clock::now() - start > *budget.max_elapsed)
                    return BudgetExceeded{search.nodes};

                bool ok = search.feasible();
                if (ok && depth == n) {
                    if (search.deviations != 0) {
                        CoinAssignment witness{search.assigned};
                        if (weigh(m, witness) != target)
                            throw Error("internal error: fast verifier produced an inconsistent witness");
                        return VerificationResult{Verdict::Ambiguous, std::move(witness), std::move(target)};
                    }
                    ok = false;
                }
                if (! ok) {
                    if (depth == 0)
                        break;
                    --depth;
                    search.unassign(search.order[depth]);
                    continue;
                }
                next_try[depth] = 1;
            }

            auto w = next_try[depth];
            while (w <= std::int64_t(n) && search.used[w])
                ++w;
            if (w > std::int64_t(n)) {
                if (depth == 0)
                    break;
                --depth;
                search.unassign(search.order[depth]);
                continue;
            }
            next_try[depth] = w + 1;
            search.assign(search.order[depth], w);
            ++depth;
            entering = true;
        }

        return VerificationResult{Verdict::Unique, std::nullopt, std::move(target)};
    }
}
