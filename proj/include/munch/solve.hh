/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_SOLVE_HH
#define MUNCH_GUARD_MUNCH_SOLVE_HH 1

#include <munch/core.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace munch
{
    /// Largest k the subset search accepts; sign-pattern buckets are indexed densely by 3^k.
    inline constexpr unsigned solver_max_rows = 12;

    struct SolveConfig
    {
        unsigned jobs = 1;
        /// Assignment evaluations allowed per (n, k) pass.
        std::uint64_t budget = 100'000'000;
        std::size_t n_cap = 9;
    };

    enum class SearchStatus
    {
        Witness,
        ExhaustedNone,
        BudgetExceeded
    };

    struct SearchOutcome
    {
        SearchStatus status;
        std::optional<WeighingMatrix> matrix;
        /// Weight given to each column of the winning subset, in subset order.
        std::optional<CoinAssignment> assignment;
        /// Column codes of the winning subset, ascending.
        std::optional<std::vector<std::uint64_t>> subset;
        /// Subsets completed in colex order; on BudgetExceeded this is the resume checkpoint.
        std::uint64_t explored = 0;
        std::uint64_t evaluations = 0;
    };

    enum class Minimality
    {
        Proven,
        UpperBoundOnly
    };

    struct BaronResult
    {
        std::size_t n;
        unsigned value;
        WeighingMatrix witness;
        Minimality minimality;
        /// One entry per k searched, in order.
        std::vector<std::pair<unsigned, SearchStatus>> passes;
    };

    /// Column for base-3 code c: row 0 is the most significant digit, digit = entry + 1.
    [[nodiscard]] auto decode_column(std::uint64_t code, unsigned k) -> std::vector<std::int8_t>;
    [[nodiscard]] auto encode_column(std::span<const std::int8_t> column) -> std::uint64_t;

    /// Advances a sorted n-subset of {0..universe-1} to its colex successor; false after the last.
    auto next_colex_subset(std::vector<std::uint64_t> & subset, std::uint64_t universe) -> bool;

    /// Sign-pattern code → number of bijective weight assignments producing it, over all n!.
    [[nodiscard]] auto sign_pattern_counts(std::span<const std::uint64_t> subset, unsigned k)
        -> std::map<std::uint64_t, std::uint64_t>;
    /// Pattern code of a sign vector, with the same digit convention as columns.
    [[nodiscard]] auto pattern_code(const SignVector & signs) -> std::uint64_t;

    /**
     * Is there a k×n Münchhausen design? Searches n-subsets of the 3^k distinct
     * columns in colex order; a subset succeeds when some sign pattern is produced
     * by exactly one weight assignment. The witness puts the column given weight
     * j+1 at position j, so the identity labeling is the unique one.
     */
    [[nodiscard]] auto exists_munchhausen(std::size_t n, unsigned k, std::uint64_t budget = 100'000'000, unsigned jobs = 1)
        -> SearchOutcome;

    /// B(n) by increasing k from lower_bound(n). Throws LimitError past config.n_cap.
    [[nodiscard]] auto baron(std::size_t n, const SolveConfig & config = {}) -> BaronResult;

    [[nodiscard]] auto sequence(std::size_t n_max, const SolveConfig & config = {}) -> std::vector<BaronResult>;

    /// OEIS-style b-file; UpperBoundOnly entries only appear as comments.
    [[nodiscard]] auto format_bfile(std::span<const BaronResult> results) -> std::string;
}

#endif
