#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covlat {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    IntMatrix left_columns(std::size_t k) const {
        IntMatrix m(rows_, k);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
        return m;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) out += ' ';
                out += std::to_string((*this)(r, c));
            }
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact.  Products are formed in 128 bits; std::overflow_error is thrown
/// if a minor does not fit in 64 bits.
inline int rank_exact(IntMatrix m) {
    using Wide = __int128;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        const std::int64_t p = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                const Wide num = Wide{p} * m(i, j) - Wide{lead} * m(r, j);
                if (num % prev != 0) throw std::logic_error("Bareiss division was not exact");
                const Wide q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("matrix minor exceeds 64 bits");
                m(i, j) = static_cast<std::int64_t>(q);
            }
            m(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return static_cast<int>(r);
}

/// Rank over GF(p), p prime.  Diagnostic only.
inline int rank_mod_p(const IntMatrix& input, std::int64_t p) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = ((input(r, c) % p) + p) % p;
    auto inverse = [p](std::int64_t a) {
        std::int64_t result = 1;
        std::int64_t e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        const std::int64_t inv = inverse(m(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t f = m(i, c) * inv % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m(i, j) = ((m(i, j) - f * m(r, j)) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace covlat
