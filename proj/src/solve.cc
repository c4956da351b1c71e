/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/solve.hh>
#include <munch/bounds.hh>

#include <algorithm>
#include <atomic>
#include <thread>

using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

namespace munch
{
    auto decode_column(uint64_t code, unsigned k) -> vector<std::int8_t>
    {
        vector<std::int8_t> column(k);
        for (unsigned i = k; i-- > 0;) {
            column[i] = static_cast<std::int8_t>(int(code % 3) - 1);
            code /= 3;
        }
        return column;
    }

    auto encode_column(std::span<const std::int8_t> column) -> uint64_t
    {
        uint64_t code = 0;
        for (auto e : column)
            code = code * 3 + uint64_t(e + 1);
        return code;
    }

    auto pattern_code(const SignVector & signs) -> uint64_t
    {
        uint64_t code = 0;
        for (auto s : signs.signs())
            code = code * 3 + uint64_t(int(s) + 1);
        return code;
    }

    auto next_colex_subset(vector<uint64_t> & subset, uint64_t universe) -> bool
    {
        auto n = subset.size();
        for (size_t i = 0; i < n; ++i) {
            uint64_t limit = i + 1 < n ? subset[i + 1] : universe;
            if (subset[i] + 1 < limit) {
                ++subset[i];
                for (size_t j = 0; j < i; ++j)
                    subset[j] = j;
                return true;
            }
        }
        return false;
    }

    namespace
    {
        auto ipow3(unsigned k) -> uint64_t
        {
            uint64_t result = 1;
            for (unsigned i = 0; i < k; ++i)
                result *= 3;
            return result;
        }

        // A column set closed under every row permutation can never hold a witness
        // once k >= 4: whatever the assignment, two rows share a sign, and swapping
        // them maps the set onto itself through a non-trivial relabeling of coins.
        auto row_symmetric(std::span<const uint64_t> subset, unsigned k) -> bool
        {
            if (k < 4)
                return false;
            for (unsigned r = 0; r + 1 < k; ++r)
                for (auto code : subset) {
                    auto column = decode_column(code, k);
                    std::swap(column[r], column[r + 1]);
                    if (! std::binary_search(subset.begin(), subset.end(), encode_column(column)))
                        return false;
                }
            return true;
        }

        // A row with no +1 (or no -1) weighs the same sign under every assignment.
        // Once those rows are dropped, two equal columns make every assignment
        // ambiguous, exactly as a repeated column does.
        auto collapses_without_constant_rows(std::span<const uint64_t> subset, unsigned k) -> bool
        {
            vector<vector<std::int8_t>> columns;
            columns.reserve(subset.size());
            for (auto code : subset)
                columns.push_back(decode_column(code, k));

            vector<unsigned> informative;
            for (unsigned r = 0; r < k; ++r) {
                bool plus = false, minus = false;
                for (auto & c : columns) {
                    plus = plus || c[r] > 0;
                    minus = minus || c[r] < 0;
                }
                if (plus && minus)
                    informative.push_back(r);
            }
            if (informative.size() == k)
                return false;

            vector<uint64_t> projected;
            projected.reserve(columns.size());
            for (auto & c : columns) {
                uint64_t code = 0;
                for (auto r : informative)
                    code = code * 3 + uint64_t(c[r] + 1);
                projected.push_back(code);
            }
            std::sort(projected.begin(), projected.end());
            return std::adjacent_find(projected.begin(), projected.end()) != projected.end();
        }

        struct SubsetResult
        {
            uint64_t cost = 0;
            bool truncated = false;
            optional<uint64_t> witness_ordinal;
        };

        // Walks all n! weight assignments of one column subset in lexicographic
        // order, bucketing them by sign pattern.
        class SubsetEvaluator
        {
        private:
            unsigned _k;
            size_t _n;
            uint64_t _patterns;
            uint64_t _cost_cap;

            vector<std::int8_t> _coef;      // _coef[col * k + row]
            vector<std::int64_t> _sums;     // _sums[depth * k + row]
            vector<std::uint32_t> _counts;
            vector<uint64_t> _first;
            vector<char> _used;
            uint64_t _ordinal = 0, _saturated = 0;
            bool _stop = false, _truncated = false;
            bool _record_all = false;
            std::map<uint64_t, uint64_t> * _all = nullptr;

            auto leaf(const std::int64_t * sums) -> void
            {
                uint64_t code = 0;
                for (unsigned i = 0; i < _k; ++i)
                    code = code * 3 + uint64_t(1 + (sums[i] > 0) - (sums[i] < 0));
                if (_record_all)
                    ++(*_all)[code];
                else {
                    auto c = ++_counts[code];
                    if (c == 1)
                        _first[code] = _ordinal;
                    else if (c == 2 && ++_saturated == _patterns)
                        _stop = true;
                }
                ++_ordinal;
                if (_ordinal >= _cost_cap) {
                    _truncated = ! _stop;
                    _stop = true;
                }
            }

            auto dfs(size_t depth) -> void
            {
                const std::int64_t * sums = &_sums[depth * _k];
                if (depth == _n) {
                    leaf(sums);
                    return;
                }
                std::int64_t * next = &_sums[(depth + 1) * _k];
                const std::int8_t * coef = &_coef[depth * _k];
                if (depth + 1 == _n) {
                    // one weight left: finish inline
                    size_t w = 1;
                    while (_used[w])
                        ++w;
                    for (unsigned i = 0; i < _k; ++i)
                        next[i] = sums[i] + coef[i] * std::int64_t(w);
                    leaf(next);
                    return;
                }
                for (size_t w = 1; w <= _n && ! _stop; ++w) {
                    if (_used[w])
                        continue;
                    for (unsigned i = 0; i < _k; ++i)
                        next[i] = sums[i] + coef[i] * std::int64_t(w);
                    _used[w] = 1;
                    dfs(depth + 1);
                    _used[w] = 0;
                }
            }

            auto load(std::span<const uint64_t> subset) -> void
            {
                for (size_t c = 0; c < _n; ++c) {
                    auto column = decode_column(subset[c], _k);
                    std::copy(column.begin(), column.end(), _coef.begin() + std::ptrdiff_t(c * _k));
                }
                std::fill(_sums.begin(), _sums.begin() + _k, 0);
                _ordinal = 0;
                _saturated = 0;
                _stop = false;
                _truncated = false;
            }

        public:
            SubsetEvaluator(size_t n, unsigned k, uint64_t cost_cap) :
                _k(k),
                _n(n),
                _patterns(ipow3(k)),
                _cost_cap(cost_cap),
                _coef(n * k),
                _sums((n + 1) * k + 1),
                _counts(_patterns),
                _first(_patterns),
                _used(n + 1, 0)
            {
            }

            auto evaluate(std::span<const uint64_t> subset) -> SubsetResult
            {
                if (row_symmetric(subset, _k) || collapses_without_constant_rows(subset, _k))
                    return SubsetResult{};
                load(subset);
                std::fill(_counts.begin(), _counts.end(), 0);
                dfs(0);

                SubsetResult result;
                result.cost = _ordinal;
                result.truncated = _truncated;
                if (! _truncated && _saturated != _patterns)
                    for (uint64_t p = 0; p < _patterns; ++p)
                        if (_counts[p] == 1 && (! result.witness_ordinal || _first[p] < *result.witness_ordinal))
                            result.witness_ordinal = _first[p];
                return result;
            }

            auto count_all(std::span<const uint64_t> subset, std::map<uint64_t, uint64_t> & out) -> void
            {
                load(subset);
                _record_all = true;
                _all = &out;
                _cost_cap = ~uint64_t{0};
                dfs(0);
                _record_all = false;
                _all = nullptr;
            }
        };

        // The ordinal'th permutation of 1..n in lexicographic order.
        auto unrank_assignment(uint64_t ordinal, size_t n) -> CoinAssignment
        {
            vector<std::int64_t> pool(n);
            for (size_t i = 0; i < n; ++i)
                pool[i] = std::int64_t(i + 1);
            vector<uint64_t> fact(n + 1, 1);
            for (size_t i = 1; i <= n; ++i)
                fact[i] = fact[i - 1] * i;
            vector<std::int64_t> weights;
            weights.reserve(n);
            for (size_t i = n; i > 0; --i) {
                auto idx = ordinal / fact[i - 1];
                ordinal %= fact[i - 1];
                weights.push_back(pool[idx]);
                pool.erase(pool.begin() + std::ptrdiff_t(idx));
            }
            return CoinAssignment{std::move(weights)};
        }

        auto check_solver_shape(size_t n, unsigned k) -> void
        {
            if (n == 0)
                throw Error("the number of coins must be at least 1");
            if (k > solver_max_rows)
                throw LimitError("the subset search handles at most " + std::to_string(solver_max_rows) + " weighings");
            if (n > max_coins)
                throw LimitError("the subset search handles at most " + std::to_string(max_coins) + " coins");
        }
    }

    auto sign_pattern_counts(std::span<const uint64_t> subset, unsigned k) -> std::map<uint64_t, uint64_t>
    {
        check_solver_shape(subset.size(), k);
        std::map<uint64_t, uint64_t> result;
        SubsetEvaluator evaluator{subset.size(), k, ~uint64_t{0}};
        evaluator.count_all(subset, result);
        return result;
    }

    auto exists_munchhausen(size_t n, unsigned k, uint64_t budget, unsigned jobs) -> SearchOutcome
    {
        check_solver_shape(n, k);
        if (budget == 0)
            throw Error("the search budget must be at least 1");
        jobs = std::max(jobs, 1u);

        SearchOutcome outcome{SearchStatus::ExhaustedNone, std::nullopt, std::nullopt, std::nullopt, 0, 0};
        uint64_t universe = ipow3(k);
        if (n > universe)
            return outcome;

        // Subsets are handed out in waves; results are merged strictly in colex
        // order, so neither the witness nor the budget cut-off depends on jobs.
        constexpr size_t chunk = 16;
        const size_t wave_size = chunk * jobs;
        const uint64_t cost_cap = budget + 1;

        vector<uint64_t> current(n);
        for (size_t i = 0; i < n; ++i)
            current[i] = i;
        bool more = true;

        vector<vector<uint64_t>> wave;
        vector<SubsetResult> results;
        while (more) {
            wave.clear();
            while (more && wave.size() < wave_size) {
                wave.push_back(current);
                more = next_colex_subset(current, universe);
            }
            results.assign(wave.size(), SubsetResult{});

            auto work = [&](std::atomic<size_t> & next_chunk) {
                SubsetEvaluator evaluator{n, k, cost_cap};
                for (size_t c; (c = next_chunk.fetch_add(1)) * chunk < wave.size();)
                    for (size_t i = c * chunk; i < std::min(wave.size(), (c + 1) * chunk); ++i)
                        results[i] = evaluator.evaluate(wave[i]);
            };
            std::atomic<size_t> next_chunk{0};
            if (jobs == 1 || wave.size() <= chunk)
                work(next_chunk);
            else {
                vector<std::thread> threads;
                for (unsigned t = 0; t < jobs; ++t)
                    threads.emplace_back(work, std::ref(next_chunk));
                for (auto & t : threads)
                    t.join();
            }

            for (size_t i = 0; i < wave.size(); ++i) {
                auto & r = results[i];
                if (r.truncated || outcome.evaluations + r.cost > budget) {
                    outcome.status = SearchStatus::BudgetExceeded;
                    return outcome;
                }
                outcome.evaluations += r.cost;
                ++outcome.explored;
                if (r.witness_ordinal) {
                    auto assignment = unrank_assignment(*r.witness_ordinal, n);
                    vector<std::int8_t> entries(k * n);
                    for (size_t c = 0; c < n; ++c) {
                        auto column = decode_column(wave[i][c], k);
                        auto position = size_t(assignment[c] - 1);
                        for (unsigned row = 0; row < k; ++row)
                            entries[row * n + position] = column[row];
                    }
                    outcome.status = SearchStatus::Witness;
                    outcome.matrix = WeighingMatrix{k, n, std::move(entries)};
                    outcome.assignment = std::move(assignment);
                    outcome.subset = wave[i];
                    return outcome;
                }
            }
        }
        return outcome;
    }

    auto baron(size_t n, const SolveConfig & config) -> BaronResult
    {
        if (n == 0)
            throw Error("the number of coins must be at least 1");
        if (n > config.n_cap)
            throw LimitError("n = " + std::to_string(n) + " exceeds the solver cap of " + std::to_string(config.n_cap));

        unsigned top = n == 1 ? 0 : unsigned(n - 1);
        bool all_exhausted = true;
        vector<std::pair<unsigned, SearchStatus>> passes;

        for (unsigned k = lower_bound(n); k <= top && k <= solver_max_rows; ++k) {
            auto outcome = exists_munchhausen(n, k, config.budget, config.jobs);
            passes.emplace_back(k, outcome.status);
            switch (outcome.status) {
            case SearchStatus::Witness:
                return BaronResult{n, k, std::move(*outcome.matrix),
                    all_exhausted ? Minimality::Proven : Minimality::UpperBoundOnly, std::move(passes)};
            case SearchStatus::BudgetExceeded:
                all_exhausted = false;
                break;
            case SearchStatus::ExhaustedNone:
                break;
            }
        }

        // every pass up to n-1 ran out of budget; the chain design always works
        return BaronResult{n, top, chain_construction(n), Minimality::UpperBoundOnly, std::move(passes)};
    }

    auto sequence(size_t n_max, const SolveConfig & config) -> vector<BaronResult>
    {
        if (n_max > config.n_cap)
            throw LimitError("n = " + std::to_string(n_max) + " exceeds the solver cap of " + std::to_string(config.n_cap));
        vector<BaronResult> results;
        for (size_t n = 1; n <= n_max; ++n)
            results.push_back(baron(n, config));
        return results;
    }

    auto format_bfile(std::span<const BaronResult> results) -> std::string
    {
        std::string out = "# Baron's omni-sequence B(n), OEIS A186313\n";
        for (const auto & r : results) {
            if (r.minimality == Minimality::Proven)
                out += std::to_string(r.n) + " " + std::to_string(r.value) + "\n";
            else
                out += "# " + std::to_string(r.n) + " <= " + std::to_string(r.value) + " (upper bound only)\n";
        }
        return out;
    }
}
