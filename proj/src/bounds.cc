/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/bounds.hh>

#include <algorithm>

using std::size_t;
using std::string;
using std::uint64_t;

namespace munch
{
    auto pow3(unsigned k) -> BigInt
    {
        BigInt result = 1;
        for (unsigned i = 0; i < k; ++i)
            result *= 3;
        return result;
    }

    auto factorial(uint64_t m) -> BigInt
    {
        BigInt result = 1;
        for (uint64_t i = 2; i <= m; ++i)
            result *= i;
        return result;
    }

    auto binomial(const BigInt & n, uint64_t r) -> BigInt
    {
        if (r > n)
            return 0;
        // each prefix product is itself a binomial coefficient, so the division is exact
        BigInt result = 1;
        for (uint64_t i = 0; i < r; ++i) {
            result *= n - i;
            result /= i + 1;
        }
        return result;
    }

    auto stabilizer_floor(unsigned k) -> BigInt
    {
        return factorial((k + 2) / 3);
    }

    auto trivial_lower(uint64_t n) -> unsigned
    {
        if (n == 0)
            throw Error("the number of coins must be at least 1");
        unsigned k = 0;
        unsigned __int128 power = 1;
        while (power < n) {
            power *= 3;
            ++k;
        }
        return k;
    }

    auto chain_construction(size_t n) -> WeighingMatrix
    {
        if (n == 0)
            throw Error("the number of coins must be at least 1");
        std::vector<std::int8_t> entries((n - 1) * n, 0);
        for (size_t i = 0; i + 1 < n; ++i) {
            entries[i * n + i] = -1;
            entries[i * n + i + 1] = 1;
        }
        return WeighingMatrix{n - 1, n, std::move(entries)};
    }

    namespace
    {
        // Is C(total, r) < floor? C(total, i) is nondecreasing for i <= total/2, so
        // walking up from i = 0 can stop as soon as it reaches floor.
        auto binomial_below(const BigInt & total, uint64_t r, const BigInt & floor) -> bool
        {
            if (r > total)
                return BigInt{0} < floor;
            BigInt reflected = total - r;
            uint64_t steps = reflected < r ? reflected.convert_to<uint64_t>() : r;
            BigInt value = 1;
            for (uint64_t i = 0; i < steps; ++i) {
                if (value >= floor)
                    return false;
                value *= total - i;
                value /= i + 1;
            }
            return value < floor;
        }
    }

    auto excluded(uint64_t n, unsigned k) -> bool
    {
        return binomial_below(pow3(k), n, stabilizer_floor(k));
    }

    auto bound_report(unsigned k) -> BoundReport
    {
        if (k > bound_report_max_k)
            throw LimitError("bound reports are limited to k <= " + std::to_string(bound_report_max_k));

        BoundReport report;
        report.k = k;
        report.r_floor = stabilizer_floor(k);

        BigInt total = pow3(k);
        BigInt half = total / 2;
        BigInt value = 1;
        uint64_t l = 0;
        while (value < report.r_floor) {
            if (l >= half)
                throw LimitError("no admissible l up to 3^k/2 for k = " + std::to_string(k));
            value *= total - l;
            value /= l + 1;
            ++l;
        }
        report.l_min = l;
        report.c_cap = value;

        BigInt band = k == 0 ? BigInt{1} : total - pow3(k - 1);
        report.n_lb = band < l ? band.convert_to<uint64_t>() : l;
        report.excluded_last = total;
        report.excluded_first = total - report.n_lb + 1;
        return report;
    }

    auto lower_bound(uint64_t n) -> unsigned
    {
        auto k = trivial_lower(n);
        return excluded(n, k) ? k + 1 : k;
    }

    auto bounds_table(unsigned k_max) -> string
    {
        string result = "k\tr_floor\tl_min\tn_lb\n";
        for (unsigned k = 0; k <= k_max; ++k) {
            auto report = bound_report(k);
            result += std::to_string(k) + "\t" + report.r_floor.str() + "\t" + std::to_string(report.l_min) + "\t"
                + std::to_string(report.n_lb) + "\n";
        }
        return result;
    }
}
