/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_PROOFKIT_HH
#define MUNCH_GUARD_MUNCH_PROOFKIT_HH 1

#include <munch/bounds.hh>
#include <munch/core.hh>

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace munch
{
    /**
     * The row permutations σ with weigh(σM) = weigh(M) are exactly those that
     * permute rows inside each class of equal outcome sign, so R is the product
     * of the symmetric groups on the classes.
     */
    struct StabilizerDescription
    {
        /// Rows (0-based, ascending) whose outcome is -, 0 and + respectively.
        std::array<std::vector<std::size_t>, 3> sign_classes;
        BigInt size;

        [[nodiscard]] auto class_of(Sign s) const -> const std::vector<std::size_t> &
        {
            return sign_classes[std::size_t(int(s) + 1)];
        }
    };

    /// The distinct columns of a matrix, sorted as base-3 codes (lexicographically, -1 < 0 < +1).
    class ColumnSet
    {
    private:
        std::vector<std::vector<std::int8_t>> _columns;

    public:
        explicit ColumnSet(const WeighingMatrix & m);

        [[nodiscard]] auto size() const noexcept -> std::size_t { return _columns.size(); }
        [[nodiscard]] auto columns() const noexcept -> const std::vector<std::vector<std::int8_t>> & { return _columns; }

        auto operator==(const ColumnSet &) const -> bool = default;
        auto operator<=>(const ColumnSet &) const = default;
    };

    class NoEqualSignRows : public Error
    {
    public:
        using Error::Error;
    };

    [[nodiscard]] auto stabilizer(const WeighingMatrix & m) -> StabilizerDescription;

    [[nodiscard]] auto in_stabilizer(const WeighingMatrix & m, const RowPermutation & sigma) -> bool;

    /// Column set of σM. Throws Error unless σ is in the stabiliser.
    [[nodiscard]] auto f_image(const WeighingMatrix & m, const RowPermutation & sigma) -> ColumnSet;

    struct Injective
    {
        std::uint64_t enumerated;
    };

    /**
     * Two stabiliser elements with the same column set. When σ1M ≠ σ2M the
     * columns match up through a non-trivial π, and certificate holds the
     * resulting assignment, which weighs exactly like the identity. A degenerate
     * collision (σ1M = σ2M, only possible with repeated rows) has no certificate.
     */
    struct Collision
    {
        RowPermutation first;
        RowPermutation second;
        std::optional<CoinAssignment> certificate;
    };

    using AuditResult = std::variant<Injective, Collision>;

    inline constexpr std::uint64_t default_audit_limit = 1'000'000;

    /// Enumerates R in lexicographic order of row images; the first repeat wins. Throws LimitError if |R| > limit.
    [[nodiscard]] auto audit_injectivity(const WeighingMatrix & m, std::uint64_t limit = default_audit_limit) -> AuditResult;

    inline constexpr unsigned full_matrix_max_rows = 8;

    /// k×3^k design holding every column exactly once, in ascending code order.
    [[nodiscard]] auto full_matrix(unsigned k) -> WeighingMatrix;

    /**
     * A non-identity assignment that the full design cannot tell apart from the
     * identity: swap the first two rows sharing an outcome sign, and relabel each
     * coin by the column with those two coordinates exchanged.
     */
    [[nodiscard]] auto counterexample_full(unsigned k) -> CoinAssignment;
}

#endif
