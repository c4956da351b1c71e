/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <munch/core.hh>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace munch
{
    auto sign_of(std::int64_t value) -> Sign
    {
        return value > 0 ? Sign::Plus : value < 0 ? Sign::Minus : Sign::Zero;
    }

    auto sign_char(Sign s) -> char
    {
        switch (s) {
        case Sign::Minus: return '-';
        case Sign::Zero: return '0';
        case Sign::Plus: return '+';
        }
        return '?';
    }

    WeighingMatrix::WeighingMatrix(size_t rows, size_t cols, vector<std::int8_t> row_major_entries) :
        _rows(rows),
        _cols(cols),
        _entries(std::move(row_major_entries))
    {
        if (_cols == 0)
            throw DimensionError("a weighing matrix needs at least one coin");
        if (_entries.size() != _rows * _cols)
            throw DimensionError("expected " + to_string(_rows * _cols) + " entries, got " + to_string(_entries.size()));
        for (auto e : _entries)
            if (e < -1 || e > 1)
                throw Error("weighing matrix entry " + to_string(int(e)) + " is not in {-1, 0, +1}");
    }

    auto WeighingMatrix::from_rows(const vector<vector<int>> & rows, size_t cols) -> WeighingMatrix
    {
        vector<std::int8_t> entries;
        entries.reserve(rows.size() * cols);
        for (const auto & r : rows) {
            if (r.size() != cols)
                throw DimensionError("row of length " + to_string(r.size()) + " in a matrix of " + to_string(cols) + " columns");
            for (auto e : r) {
                if (e < -1 || e > 1)
                    throw Error("weighing matrix entry " + to_string(e) + " is not in {-1, 0, +1}");
                entries.push_back(static_cast<std::int8_t>(e));
            }
        }
        return WeighingMatrix{rows.size(), cols, std::move(entries)};
    }

    auto WeighingMatrix::empty(size_t cols) -> WeighingMatrix
    {
        return WeighingMatrix{0, cols, {}};
    }

    auto WeighingMatrix::column(size_t c) const -> vector<std::int8_t>
    {
        vector<std::int8_t> result(_rows);
        for (size_t r = 0; r < _rows; ++r)
            result[r] = _entries[r * _cols + c];
        return result;
    }

    Permutation::Permutation(vector<size_t> image) :
        _image(std::move(image))
    {
        vector<bool> seen(_image.size(), false);
        for (auto i : _image) {
            if (i >= _image.size() || seen[i])
                throw Error("permutation image is not a bijection");
            seen[i] = true;
        }
    }

    auto Permutation::identity(size_t size) -> Permutation
    {
        vector<size_t> image(size);
        std::iota(image.begin(), image.end(), size_t{0});
        return Permutation{std::move(image)};
    }

    auto Permutation::transposition(size_t size, size_t a, size_t b) -> Permutation
    {
        if (a >= size || b >= size)
            throw DimensionError("transposition point out of range");
        vector<size_t> image(size);
        std::iota(image.begin(), image.end(), size_t{0});
        std::swap(image[a], image[b]);
        return Permutation{std::move(image)};
    }

    auto Permutation::inverse() const -> Permutation
    {
        vector<size_t> inv(_image.size());
        for (size_t i = 0; i < _image.size(); ++i)
            inv[_image[i]] = i;
        return Permutation{std::move(inv)};
    }

    auto Permutation::is_identity() const -> bool
    {
        for (size_t i = 0; i < _image.size(); ++i)
            if (_image[i] != i)
                return false;
        return true;
    }

    auto compose(const Permutation & outer, const Permutation & inner) -> Permutation
    {
        if (outer.size() != inner.size())
            throw DimensionError("composing permutations of different sizes");
        vector<size_t> image(inner.size());
        for (size_t i = 0; i < inner.size(); ++i)
            image[i] = outer(inner(i));
        return Permutation{std::move(image)};
    }

    CoinAssignment::CoinAssignment(vector<std::int64_t> weights) :
        _weights(std::move(weights))
    {
        if (_weights.empty())
            throw Error("an assignment needs at least one coin");
        vector<bool> seen(_weights.size() + 1, false);
        for (auto w : _weights) {
            if (w < 1 || w > std::int64_t(_weights.size()) || seen[w])
                throw Error("assignment is not a permutation of 1.." + to_string(_weights.size()));
            seen[w] = true;
        }
    }

    auto CoinAssignment::identity(size_t n) -> CoinAssignment
    {
        vector<std::int64_t> weights(n);
        std::iota(weights.begin(), weights.end(), std::int64_t{1});
        return CoinAssignment{std::move(weights)};
    }

    auto CoinAssignment::is_identity() const -> bool
    {
        for (size_t j = 0; j < _weights.size(); ++j)
            if (_weights[j] != std::int64_t(j + 1))
                return false;
        return true;
    }

    auto SignVector::to_string() const -> string
    {
        string result;
        result.reserve(_signs.size());
        for (auto s : _signs)
            result.push_back(sign_char(s));
        return result;
    }

    auto weigh(const WeighingMatrix & m, const CoinAssignment & a) -> SignVector
    {
        if (a.size() != m.cols())
            throw DimensionError("assignment of " + to_string(a.size()) + " coins for a matrix of " + to_string(m.cols()) + " columns");
        vector<Sign> signs(m.rows());
        for (size_t i = 0; i < m.rows(); ++i) {
            auto row = m.row(i);
            std::int64_t sum = 0;
            for (size_t j = 0; j < row.size(); ++j)
                sum += row[j] * a[j];
            signs[i] = sign_of(sum);
        }
        return SignVector{std::move(signs)};
    }

    auto weigh_identity(const WeighingMatrix & m) -> SignVector
    {
        return weigh(m, CoinAssignment::identity(m.cols()));
    }

    auto apply_row_permutation(const WeighingMatrix & m, const RowPermutation & sigma) -> WeighingMatrix
    {
        if (sigma.size() != m.rows())
            throw DimensionError("row permutation of size " + to_string(sigma.size()) + " for a matrix of " + to_string(m.rows()) + " rows");
        vector<std::int8_t> entries;
        entries.reserve(m.entries().size());
        for (size_t i = 0; i < m.rows(); ++i) {
            auto src = m.row(sigma(i));
            entries.insert(entries.end(), src.begin(), src.end());
        }
        return WeighingMatrix{m.rows(), m.cols(), std::move(entries)};
    }

    auto apply_row_permutation(const SignVector & signs, const RowPermutation & sigma) -> SignVector
    {
        if (sigma.size() != signs.size())
            throw DimensionError("row permutation of size " + to_string(sigma.size()) + " for " + to_string(signs.size()) + " signs");
        vector<Sign> result(signs.size());
        for (size_t i = 0; i < signs.size(); ++i)
            result[i] = signs[sigma(i)];
        return SignVector{std::move(result)};
    }

    auto permute_assignment(const CoinAssignment & a, const CoinPermutation & pi) -> CoinAssignment
    {
        if (pi.size() != a.size())
            throw DimensionError("coin permutation of size " + to_string(pi.size()) + " for " + to_string(a.size()) + " coins");
        vector<std::int64_t> weights(a.size());
        for (size_t j = 0; j < a.size(); ++j)
            weights[pi(j)] = a[j];
        return CoinAssignment{std::move(weights)};
    }

    auto column_less(std::span<const std::int8_t> a, std::span<const std::int8_t> b) -> bool
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

    ParseError::ParseError(ParseErrorKind kind, size_t line, const string & message) :
        Error("line " + to_string(line) + ": " + message),
        _kind(kind),
        _line(line)
    {
    }

    namespace
    {
        auto parse_decimal(std::string_view field, size_t line) -> std::uint64_t
        {
            if (field.empty() || field.size() > 18 || (field.size() > 1 && field[0] == '0'))
                throw ParseError(ParseErrorKind::BadHeader, line, "expected a decimal integer, got '" + string(field) + "'");
            std::uint64_t value = 0;
            for (char c : field) {
                if (c < '0' || c > '9')
                    throw ParseError(ParseErrorKind::BadHeader, line, "expected a decimal integer, got '" + string(field) + "'");
                value = value * 10 + std::uint64_t(c - '0');
            }
            return value;
        }
    }

    auto parse_matrix(std::string_view text) -> WeighingMatrix
    {
        vector<std::string_view> lines;
        size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos)
                throw ParseError(ParseErrorKind::MissingNewline, lines.size() + 1, "missing trailing newline");
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }

        if (lines.empty() || lines[0] != "munch v1")
            throw ParseError(ParseErrorKind::BadMagic, 1, "expected 'munch v1'");
        if (lines.size() < 2)
            throw ParseError(ParseErrorKind::BadHeader, 2, "missing '<k> <n>' header");

        auto header = lines[1];
        auto space = header.find(' ');
        if (space == std::string_view::npos)
            throw ParseError(ParseErrorKind::BadHeader, 2, "expected '<k> <n>'");
        auto k = parse_decimal(header.substr(0, space), 2);
        auto n = parse_decimal(header.substr(space + 1), 2);
        if (k > max_rows)
            throw ParseError(ParseErrorKind::CapExceeded, 2, "k = " + to_string(k) + " exceeds the cap of " + to_string(max_rows));
        if (n < 1 || n > max_coins)
            throw ParseError(ParseErrorKind::CapExceeded, 2, "n = " + to_string(n) + " is outside 1.." + to_string(max_coins));

        vector<std::int8_t> entries;
        entries.reserve(k * n);
        for (size_t r = 0; r < k; ++r) {
            size_t line_no = r + 3;
            if (r + 2 >= lines.size())
                throw ParseError(ParseErrorKind::RowCount, line_no, "expected " + to_string(k) + " rows, got " + to_string(r));
            auto line = lines[r + 2];
            for (size_t c = 0; c < line.size(); ++c) {
                switch (line[c]) {
                case '-': entries.push_back(-1); break;
                case '0': entries.push_back(0); break;
                case '+': entries.push_back(1); break;
                default:
                    throw ParseError(ParseErrorKind::IllegalCharacter, line_no,
                        "illegal character at column " + to_string(c + 1) + " (expected '-', '0' or '+')");
                }
            }
            if (line.size() != n)
                throw ParseError(ParseErrorKind::RowLength, line_no,
                    "row has " + to_string(line.size()) + " entries, expected " + to_string(n));
        }
        if (lines.size() > k + 2)
            throw ParseError(ParseErrorKind::RowCount, k + 3, "unexpected content after " + to_string(k) + " rows");

        return WeighingMatrix{k, n, std::move(entries)};
    }

    auto serialize_matrix(const WeighingMatrix & m) -> string
    {
        string result = "munch v1\n" + to_string(m.rows()) + " " + to_string(m.cols()) + "\n";
        result.reserve(result.size() + m.rows() * (m.cols() + 1));
        for (size_t i = 0; i < m.rows(); ++i) {
            for (auto e : m.row(i))
                result.push_back(e < 0 ? '-' : e > 0 ? '+' : '0');
            result.push_back('\n');
        }
        return result;
    }

    auto read_matrix_file(const string & path) -> WeighingMatrix
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_matrix(buf.str());
    }

    auto write_text_file(const string & path, std::string_view contents) -> void
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (! out)
            throw Error("cannot write '" + path + "'");
        out.write(contents.data(), std::streamsize(contents.size()));
        if (! out)
            throw Error("error while writing '" + path + "'");
    }

    auto format_weights(const CoinAssignment & a) -> string
    {
        string result;
        for (size_t j = 0; j < a.size(); ++j) {
            if (j != 0)
                result.push_back(' ');
            result += to_string(a[j]);
        }
        return result;
    }
}
