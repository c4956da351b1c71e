/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_BOUNDS_HH
#define MUNCH_GUARD_MUNCH_BOUNDS_HH 1

#include <munch/core.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace munch
{
    using BigInt = boost::multiprecision::cpp_int;

    [[nodiscard]] auto pow3(unsigned k) -> BigInt;
    [[nodiscard]] auto factorial(std::uint64_t m) -> BigInt;
    [[nodiscard]] auto binomial(const BigInt & n, std::uint64_t r) -> BigInt;

    /// (⌈k/3⌉)!, the guaranteed size of the row stabiliser of any k-row design.
    [[nodiscard]] auto stabilizer_floor(unsigned k) -> BigInt;

    inline constexpr unsigned bound_report_max_k = 256;

    /**
     * Exact exclusion data for designs with k weighings.
     *
     * Writing l = 3^k - n, a k×n Münchhausen design needs C(3^k, l) >= r_floor.
     * l_min is the smallest l meeting that, so every n in excluded_range is
     * impossible at k, and n_lb is how many n with ⌈log₃ n⌉ = k that rules out.
     */
    struct BoundReport
    {
        unsigned k;
        BigInt c_cap;               ///< C(3^k, l_min): the column-set cap at the largest admissible n
        BigInt r_floor;             ///< (⌈k/3⌉)!
        std::uint64_t l_min;
        std::uint64_t n_lb;         ///< min(l_min, 3^k - 3^(k-1)); for k = 0 the band is just {1}
        BigInt excluded_first;      ///< excluded_range is [excluded_first, excluded_last]; empty when n_lb = 0
        BigInt excluded_last;
    };

    /// ⌈log₃ n⌉ by integer powering. Throws Error for n = 0.
    [[nodiscard]] auto trivial_lower(std::uint64_t n) -> unsigned;

    /// (n-1)×n design weighing coin i against coin i+1; proves any labeling with n-1 weighings.
    [[nodiscard]] auto chain_construction(std::size_t n) -> WeighingMatrix;

    /// C(3^k, n) < (⌈k/3⌉)!; true rules out every k×n Münchhausen design.
    [[nodiscard]] auto excluded(std::uint64_t n, unsigned k) -> bool;

    /// Throws LimitError for k > 256.
    [[nodiscard]] auto bound_report(unsigned k) -> BoundReport;

    /// trivial_lower(n), plus one if that k is excluded. Always at most B(n).
    [[nodiscard]] auto lower_bound(std::uint64_t n) -> unsigned;

    /// Header plus one row per k = 0..k_max, tab separated.
    [[nodiscard]] auto bounds_table(unsigned k_max) -> std::string;
}

#endif
