/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_VERIFY_HH
#define MUNCH_GUARD_MUNCH_VERIFY_HH 1

#include <munch/core.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

namespace munch
{
    enum class Verdict
    {
        Unique,
        Ambiguous
    };

    /// witness is present iff the verdict is Ambiguous; it is never the identity and weighs like it.
    struct VerificationResult
    {
        Verdict verdict;
        std::optional<CoinAssignment> witness;
        SignVector outcome;
    };

    struct VerifyBudget
    {
        std::uint64_t max_nodes = 100'000'000;
        std::optional<std::chrono::duration<double>> max_elapsed = std::nullopt;
    };

    struct BudgetExceeded
    {
        std::uint64_t nodes;
    };

    inline constexpr std::size_t oracle_max_coins = 9;

    /// Enumerates all n! assignments; the witness is the lexicographically smallest one. Needs n <= 9.
    [[nodiscard]] auto verify_oracle(const WeighingMatrix & m) -> VerificationResult;

    /**
     * Backtracking search for a second assignment matching the identity's
     * outcome. Coins go in order of decreasing participation, weights are tried
     * ascending, and each row keeps an interval of reachable sums over the
     * unassigned weights. Matrices with a repeated column are answered straight
     * away with the swap of the first such pair. The witness is whichever
     * assignment is found first, so it can differ from the oracle's.
     */
    [[nodiscard]] auto verify_fast(const WeighingMatrix & m, const VerifyBudget & budget = {})
        -> std::variant<VerificationResult, BudgetExceeded>;

    /// First pair (a, b), a < b, of equal columns, b as small as possible.
    [[nodiscard]] auto first_duplicate_columns(const WeighingMatrix & m) -> std::optional<std::pair<std::size_t, std::size_t>>;
}

#endif
