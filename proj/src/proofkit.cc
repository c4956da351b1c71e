/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/proofkit.hh>
#include <munch/solve.hh>
#include <munch/verify.hh>

#include <algorithm>
#include <map>

using std::optional;
using std::size_t;
using std::vector;

namespace munch
{
    ColumnSet::ColumnSet(const WeighingMatrix & m)
    {
        _columns.reserve(m.cols());
        for (size_t j = 0; j < m.cols(); ++j)
            _columns.push_back(m.column(j));
        std::sort(_columns.begin(), _columns.end());
        _columns.erase(std::unique(_columns.begin(), _columns.end()), _columns.end());
    }

    auto stabilizer(const WeighingMatrix & m) -> StabilizerDescription
    {
        StabilizerDescription result;
        auto signs = weigh_identity(m);
        for (size_t i = 0; i < signs.size(); ++i)
            result.sign_classes[size_t(int(signs[i]) + 1)].push_back(i);
        result.size = 1;
        for (const auto & c : result.sign_classes)
            result.size *= factorial(c.size());
        return result;
    }

    auto in_stabilizer(const WeighingMatrix & m, const RowPermutation & sigma) -> bool
    {
        if (sigma.size() != m.rows())
            return false;
        auto signs = weigh_identity(m);
        for (size_t i = 0; i < signs.size(); ++i)
            if (signs[sigma(i)] != signs[i])
                return false;
        return true;
    }

    auto f_image(const WeighingMatrix & m, const RowPermutation & sigma) -> ColumnSet
    {
        if (! in_stabilizer(m, sigma))
            throw Error("row permutation does not preserve the outcome signs");
        return ColumnSet{apply_row_permutation(m, sigma)};
    }

    namespace
    {
        // Assignment a with weigh(M, a) = weigh(M, identity), read off a column
        // matching between σ1M and σ2M: if column j of σ2M is column τ(j) of σ1M,
        // coin τ(j) gets weight j+1.
        auto collision_certificate(const WeighingMatrix & m, const RowPermutation & s1, const RowPermutation & s2)
            -> optional<CoinAssignment>
        {
            auto a = apply_row_permutation(m, s1), b = apply_row_permutation(m, s2);
            if (a == b)
                return std::nullopt;

            std::map<vector<std::int8_t>, vector<size_t>> positions;
            for (size_t c = m.cols(); c-- > 0;)
                positions[a.column(c)].push_back(c);

            vector<std::int64_t> weights(m.cols(), 0);
            bool matched = true;
            for (size_t j = 0; j < m.cols() && matched; ++j) {
                auto it = positions.find(b.column(j));
                if (it == positions.end() || it->second.empty())
                    matched = false;
                else {
                    weights[it->second.back()] = std::int64_t(j + 1);
                    it->second.pop_back();
                }
            }

            optional<CoinAssignment> certificate;
            if (matched)
                certificate = CoinAssignment{std::move(weights)};
            else if (auto dup = first_duplicate_columns(m))
                certificate = permute_assignment(CoinAssignment::identity(m.cols()),
                    Permutation::transposition(m.cols(), dup->first, dup->second));

            if (certificate && (certificate->is_identity() || weigh(m, *certificate) != weigh_identity(m)))
                throw Error("internal error: collision certificate does not reproduce the outcome");
            return certificate;
        }
    }

    auto audit_injectivity(const WeighingMatrix & m, std::uint64_t limit) -> AuditResult
    {
        auto stab = stabilizer(m);
        if (stab.size > limit)
            throw LimitError("stabiliser has " + stab.size.str() + " elements, more than the audit limit of " + std::to_string(limit));

        auto k = m.rows();
        auto signs = weigh_identity(m);
        vector<size_t> image(k);
        vector<char> used(k, 0);
        std::map<ColumnSet, RowPermutation> seen;
        std::uint64_t enumerated = 0;
        optional<Collision> collision;

        // lexicographic over row images: position i takes an unused row of its own sign class
        auto rec = [&](auto & self, size_t i) -> void {
            if (collision)
                return;
            if (i == k) {
                ++enumerated;
                RowPermutation sigma{image};
                auto [it, inserted] = seen.emplace(ColumnSet{apply_row_permutation(m, sigma)}, sigma);
                if (! inserted)
                    collision = Collision{it->second, sigma, collision_certificate(m, it->second, sigma)};
                return;
            }
            for (auto r : stab.class_of(signs[i])) {
                if (used[r])
                    continue;
                used[r] = 1;
                image[i] = r;
                self(self, i + 1);
                used[r] = 0;
                if (collision)
                    return;
            }
        };
        rec(rec, 0);

        if (collision)
            return std::move(*collision);
        return Injective{enumerated};
    }

    auto full_matrix(unsigned k) -> WeighingMatrix
    {
        if (k < 1 || k > full_matrix_max_rows)
            throw LimitError("full matrices are built for 1 <= k <= " + std::to_string(full_matrix_max_rows));
        size_t n = 1;
        for (unsigned i = 0; i < k; ++i)
            n *= 3;
        vector<std::int8_t> entries(k * n);
        for (size_t c = 0; c < n; ++c) {
            auto column = decode_column(c, k);
            for (unsigned r = 0; r < k; ++r)
                entries[r * n + c] = column[r];
        }
        return WeighingMatrix{k, n, std::move(entries)};
    }

    auto counterexample_full(unsigned k) -> CoinAssignment
    {
        auto m = full_matrix(k);
        auto signs = weigh_identity(m);

        optional<std::pair<size_t, size_t>> rows;
        for (size_t a = 0; a < k && ! rows; ++a)
            for (size_t b = a + 1; b < k && ! rows; ++b)
                if (signs[a] == signs[b])
                    rows = std::pair{a, b};
        if (! rows)
            throw NoEqualSignRows("no two weighings of the full " + std::to_string(k) + "-row design share an outcome");

        // σ swaps the two rows; column c of σM is column tau(c) of M
        vector<size_t> tau(m.cols());
        for (size_t c = 0; c < m.cols(); ++c) {
            auto column = decode_column(c, k);
            std::swap(column[rows->first], column[rows->second]);
            tau[c] = size_t(encode_column(column));
        }

        auto result = permute_assignment(CoinAssignment::identity(m.cols()), CoinPermutation{std::move(tau)});
        if (result.is_identity() || weigh(m, result) != signs)
            throw Error("internal error: full-design counterexample does not reproduce the outcome");
        return result;
    }
}
