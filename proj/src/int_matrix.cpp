#include "wpl/int_matrix.hpp"

#include <limits>
#include <numeric>

namespace wpl {

namespace {

Int narrow(__int128 v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw ArithmeticOverflow("integer overflow in determinant");
    return static_cast<Int>(v);
}

// a*x + b*y = g >= 0
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked::sub(old_r, checked::mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked::sub(old_s, checked::mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked::sub(old_t, checked::mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw MalformedInput("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Int> IntMatrix::col(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
    std::vector<std::vector<Int>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw MalformedInput("matrix dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Int a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = checked::add(out(i, j), checked::mul(a, rhs(k, j)));
        }
    return out;
}

Int bareiss_determinant(const IntMatrix& input) {
    const std::size_t n = input.rows();
    if (input.cols() != n) throw MalformedInput("determinant of a non-square matrix");
    if (n == 0) return 1;
    IntMatrix m = input;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
                // exact by Sylvester's identity
                m(i, j) = narrow(num / prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return checked::mul(sign, m(n - 1, n - 1));
}

std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<Int>& v) {
    const std::size_t n = v.size();
    // columns of u track the unimodular transform applied to v
    IntMatrix u = IntMatrix::identity(n);
    std::vector<Int> w = v;
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k] == 0) continue;
        if (pivot == n) {
            pivot = k;
            continue;
        }
        Int a, b;
        Int g = ext_gcd(w[pivot], w[k], a, b);
        Int wp = w[pivot] / g, wk = w[k] / g;
        for (std::size_t r = 0; r < n; ++r) {
            Int cp = u(r, pivot), ck = u(r, k);
            u(r, pivot) = checked::add(checked::mul(a, cp), checked::mul(b, ck));
            u(r, k) = checked::sub(checked::mul(wp, ck), checked::mul(wk, cp));
        }
        w[pivot] = g;
        w[k] = 0;
    }
    std::vector<std::vector<Int>> basis;
    for (std::size_t k = 0; k < n; ++k)
        if (k != pivot) basis.push_back(u.col(k));
    return basis;
}

} // namespace wpl
