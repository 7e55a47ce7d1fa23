#include "flagkernel/smith.hpp"

#include "flagkernel/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace flagkernel {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw InputError("matrix data size does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix rows");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix shapes do not compose");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<BigInt> SmithForm::diagonal() const
{
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        out.push_back(d(i, i));
    return out;
}

std::size_t SmithForm::rank() const
{
    auto diag = diagonal();
    return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const BigInt& x) { return x != 0; }));
}

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t)
{
    std::optional<Position> best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
            if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->row, best->col))))
                best = Position{i, j};
    return best;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = s.d;
    const std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        auto pivot = smallest_nonzero(d, t);
        if (!pivot)
            break;
        while (true) {
            d.swap_rows(t, pivot->row);
            s.u.swap_rows(t, pivot->row);
            d.swap_cols(t, pivot->col);
            s.v.swap_cols(t, pivot->col);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                BigInt q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                BigInt q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                s.v.add_col_multiple(j, t, -q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean) {
                // a remainder is smaller than the pivot; it takes over
                pivot = Position{t, t};
                for (std::size_t i = t + 1; i < d.rows(); ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(pivot->row, pivot->col)))
                        pivot = Position{i, t};
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(pivot->row, pivot->col)))
                        pivot = Position{t, j};
                continue;
            }

            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            d.add_row_multiple(t, *offender, 1);
            s.u.add_row_multiple(t, *offender, 1);
            pivot = Position{t, t};
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

} // namespace flagkernel
