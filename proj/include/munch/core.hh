/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_CORE_HH
#define MUNCH_GUARD_MUNCH_CORE_HH 1

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace munch
{
    /// Parse-time caps. Weighted sums stay below n(n+1)/2, which fits an int64 under these.
    inline constexpr std::size_t max_rows = 64;
    inline constexpr std::size_t max_coins = 1'000'000;

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Mismatched lengths between a matrix, an assignment or a permutation.
    class DimensionError : public Error
    {
    public:
        using Error::Error;
    };

    /// A request outside what an operation supports (oracle size, k range, audit limit...).
    class LimitError : public Error
    {
    public:
        using Error::Error;
    };

    /// Outcome of one weighing. Plus means the right pan is heavier.
    enum class Sign : std::int8_t
    {
        Minus = -1,
        Zero = 0,
        Plus = 1
    };

    [[nodiscard]] auto sign_of(std::int64_t value) -> Sign;
    [[nodiscard]] auto sign_char(Sign s) -> char;

    /**
     * A k×n design over {-1, 0, +1}. Row i is the i'th weighing, column j is coin j;
     * -1 puts the coin on the left pan, +1 on the right, 0 holds it out.
     *
     * Duplicate columns (and rows) are representable; classifying them is the
     * verifier's job.
     */
    class WeighingMatrix
    {
    private:
        std::size_t _rows = 0, _cols = 1;
        std::vector<std::int8_t> _entries;

    public:
        /// Throws DimensionError if cols is zero or the entry count is wrong, Error on a bad entry.
        WeighingMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> row_major_entries);

        [[nodiscard]] static auto from_rows(const std::vector<std::vector<int>> & rows, std::size_t cols) -> WeighingMatrix;
        [[nodiscard]] static auto empty(std::size_t cols) -> WeighingMatrix;

        [[nodiscard]] auto rows() const noexcept -> std::size_t { return _rows; }
        [[nodiscard]] auto cols() const noexcept -> std::size_t { return _cols; }
        [[nodiscard]] auto at(std::size_t row, std::size_t col) const -> int { return _entries[row * _cols + col]; }
        [[nodiscard]] auto row(std::size_t r) const -> std::span<const std::int8_t>
        {
            return {_entries.data() + r * _cols, _cols};
        }
        [[nodiscard]] auto column(std::size_t c) const -> std::vector<std::int8_t>;
        [[nodiscard]] auto entries() const noexcept -> std::span<const std::int8_t> { return _entries; }

        auto operator==(const WeighingMatrix &) const -> bool = default;
    };

    /// A bijection on {0, ..., size-1}; image(i) is where i goes.
    class Permutation
    {
    private:
        std::vector<std::size_t> _image;

    public:
        /// Throws Error unless the image is a bijection.
        explicit Permutation(std::vector<std::size_t> image);

        [[nodiscard]] static auto identity(std::size_t size) -> Permutation;
        /// Swaps a and b, fixes everything else.
        [[nodiscard]] static auto transposition(std::size_t size, std::size_t a, std::size_t b) -> Permutation;

        [[nodiscard]] auto size() const noexcept -> std::size_t { return _image.size(); }
        [[nodiscard]] auto operator()(std::size_t i) const -> std::size_t { return _image[i]; }
        [[nodiscard]] auto image() const noexcept -> std::span<const std::size_t> { return _image; }
        [[nodiscard]] auto inverse() const -> Permutation;
        [[nodiscard]] auto is_identity() const -> bool;

        auto operator==(const Permutation &) const -> bool = default;
    };

    /// (outer ∘ inner)(i) = outer(inner(i)).
    [[nodiscard]] auto compose(const Permutation & outer, const Permutation & inner) -> Permutation;

    /// σ acting on weighings. Row i of σM is row σ(i) of M.
    using RowPermutation = Permutation;
    /// π acting on coins.
    using CoinPermutation = Permutation;

    /// weights()[j] is the weight in grams given to coin j; always a permutation of 1..n.
    class CoinAssignment
    {
    private:
        std::vector<std::int64_t> _weights;

    public:
        /// Throws Error unless weights is exactly a permutation of 1..n with n >= 1.
        explicit CoinAssignment(std::vector<std::int64_t> weights);

        [[nodiscard]] static auto identity(std::size_t n) -> CoinAssignment;

        [[nodiscard]] auto size() const noexcept -> std::size_t { return _weights.size(); }
        [[nodiscard]] auto weights() const noexcept -> std::span<const std::int64_t> { return _weights; }
        [[nodiscard]] auto operator[](std::size_t j) const -> std::int64_t { return _weights[j]; }
        [[nodiscard]] auto is_identity() const -> bool;

        auto operator==(const CoinAssignment &) const -> bool = default;
        auto operator<=>(const CoinAssignment &) const = default;
    };

    class SignVector
    {
    private:
        std::vector<Sign> _signs;

    public:
        SignVector() = default;
        explicit SignVector(std::vector<Sign> signs) : _signs(std::move(signs)) {}

        [[nodiscard]] auto size() const noexcept -> std::size_t { return _signs.size(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> Sign { return _signs[i]; }
        [[nodiscard]] auto signs() const noexcept -> std::span<const Sign> { return _signs; }
        /// One character per weighing from {-, 0, +}.
        [[nodiscard]] auto to_string() const -> std::string;

        auto operator==(const SignVector &) const -> bool = default;
    };

    /// result[i] = sign(Σ_j M[i][j] · a[j]).
    [[nodiscard]] auto weigh(const WeighingMatrix & m, const CoinAssignment & a) -> SignVector;
    [[nodiscard]] auto weigh_identity(const WeighingMatrix & m) -> SignVector;

    [[nodiscard]] auto apply_row_permutation(const WeighingMatrix & m, const RowPermutation & sigma) -> WeighingMatrix;
    /// The signs reordered the same way rows are: result[i] = signs[σ(i)].
    [[nodiscard]] auto apply_row_permutation(const SignVector & signs, const RowPermutation & sigma) -> SignVector;

    /// Moves coin j's weight to coin π(j). permute(permute(a, π1), π2) = permute(a, π2 ∘ π1).
    [[nodiscard]] auto permute_assignment(const CoinAssignment & a, const CoinPermutation & pi) -> CoinAssignment;

    /// Lexicographic comparison of columns with -1 < 0 < +1, which matches ascending base-3 codes.
    [[nodiscard]] auto column_less(std::span<const std::int8_t> a, std::span<const std::int8_t> b) -> bool;

    enum class ParseErrorKind
    {
        BadMagic,
        BadHeader,
        CapExceeded,
        IllegalCharacter,
        RowLength,
        RowCount,
        MissingNewline
    };

    class ParseError : public Error
    {
    private:
        ParseErrorKind _kind;
        std::size_t _line;

    public:
        ParseError(ParseErrorKind kind, std::size_t line, const std::string & message);

        [[nodiscard]] auto kind() const noexcept -> ParseErrorKind { return _kind; }
        [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }
    };

    /**
     * Matrix files:
     *
     *     munch v1
     *     <k> <n>
     *     k lines of exactly n characters from {-, 0, +}
     *
     * LF line endings, trailing newline required, no other whitespace.
     */
    [[nodiscard]] auto parse_matrix(std::string_view text) -> WeighingMatrix;
    [[nodiscard]] auto serialize_matrix(const WeighingMatrix & m) -> std::string;

    [[nodiscard]] auto read_matrix_file(const std::string & path) -> WeighingMatrix;
    auto write_text_file(const std::string & path, std::string_view contents) -> void;

    [[nodiscard]] auto format_weights(const CoinAssignment & a) -> std::string;
}

#endif
