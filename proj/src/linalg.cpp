#include "sfs/linalg.hpp"

#include <limits>
#include <stdexcept>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

// Signals that the fixed-width path would overflow; callers rerun with Int.
struct Overflow {};

// int64 with overflow-checked arithmetic.  Bareiss intermediates are minors
// of the input, so on plumbing-sized matrices this path always suffices.
struct C64 {
    int64_t v = 0;
    C64() = default;
    C64(int64_t x) : v(x) {}
    friend C64 operator+(C64 a, C64 b) {
        int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend C64 operator-(C64 a, C64 b) {
        int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend C64 operator*(C64 a, C64 b) {
        int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend bool operator==(C64 a, C64 b) { return a.v == b.v; }
};

inline C64 divexact(C64 a, C64 b) {
    if (a.v % b.v != 0) throw std::logic_error("fraction-free elimination: non-exact division");
    return a.v / b.v;
}

inline Int divexact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("fraction-free elimination: non-exact division");
    return q;
}

inline bool is_zero(C64 a) { return a.v == 0; }
inline bool is_zero(const Int& a) { return a == 0; }

inline bool is_negative(C64 a) { return a.v < 0; }
inline bool is_negative(const Int& a) { return a < 0; }

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    void swap_rows(int i, int k) {
        for (int j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    }
};

template <class T>
Mat<T> load(const SymIntMatrix& q, bool augment_identity) {
    const int n = q.size();
    Mat<T> m(n, augment_identity ? 2 * n : n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = T(q(i, j));
        if (augment_identity) m.at(i, n + i) = T(1);
    }
    return m;
}

// Fraction-free forward elimination on the first n columns.  Row swaps are
// tracked through `sign`; returns false when the matrix is singular.
template <class T>
bool bareiss_forward(Mat<T>& m, int n, int& sign) {
    sign = 1;
    T prev(1);
    for (int k = 0; k < n; ++k) {
        if (is_zero(m.at(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m.at(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return false;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols; ++j)
                m.at(i, j) = divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = T(0);
        }
        prev = m.at(k, k);
    }
    return true;
}

template <class T>
T determinant_impl(const SymIntMatrix& q) {
    const int n = q.size();
    if (n == 0) return T(1);
    auto m = load<T>(q, false);
    int sign = 1;
    if (!bareiss_forward(m, n, sign)) return T(0);
    return sign < 0 ? T(0) - m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

// Without pivoting, the Bareiss pivot entering step k equals the leading
// principal minor of order k+1; a zero pivot means a zero minor.
template <class T>
bool negdef_impl(const SymIntMatrix& q) {
    const int n = q.size();
    auto m = load<T>(q, false);
    T prev(1);
    for (int k = 0; k < n; ++k) {
        const T pivot = m.at(k, k);
        if (is_zero(pivot)) return false;
        const bool want_negative = (k % 2 == 0);
        if (is_negative(pivot) != want_negative) return false;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = divexact(pivot * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = T(0);
        }
        prev = pivot;
    }
    return true;
}

Rational to_rational(C64 num, C64 den) { return make_rational(Int(num.v), Int(den.v)); }
Rational to_rational(const Int& num, const Int& den) { return make_rational(num, den); }

// Forward elimination of [Q | I] followed by exact integer back substitution:
// with D the (signed) last pivot, y = D * x solves the triangular system in
// integers and x = y / D is the inverse column.
template <class T>
RationalMatrix inverse_impl(const SymIntMatrix& q) {
    const int n = q.size();
    auto m = load<T>(q, true);
    int sign = 1;
    if (!bareiss_forward(m, n, sign)) throw ValidationError("exact_inverse: singular matrix");
    const T det = m.at(n - 1, n - 1);
    RationalMatrix out(n, n);
    std::vector<T> y(n);
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            T acc = det * m.at(i, n + col);
            for (int j = i + 1; j < n; ++j) acc = acc - m.at(i, j) * y[j];
            y[i] = divexact(acc, m.at(i, i));
        }
        for (int i = 0; i < n; ++i) out.at(i, col) = to_rational(y[i], det);
    }
    return out;
}

} // namespace

SymIntMatrix SymIntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymIntMatrix q(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw ValidationError("matrix rows of unequal length");
        for (int j = 0; j < n; ++j) {
            if (rows[j][i] != rows[i][j]) throw ValidationError("matrix is not symmetric");
            q.a_[static_cast<size_t>(i) * n + j] = rows[i][j];
        }
    }
    return q;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Int determinant(const SymIntMatrix& q) {
    try {
        return Int(determinant_impl<C64>(q).v);
    } catch (const Overflow&) {
        return determinant_impl<Int>(q);
    }
}

bool is_negative_definite(const SymIntMatrix& q) {
    try {
        return negdef_impl<C64>(q);
    } catch (const Overflow&) {
        return negdef_impl<Int>(q);
    }
}

bool is_irreducible(const SymIntMatrix& q) {
    const int n = q.size();
    if (n <= 1) return true;
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (j != v && !seen[j] && q(v, j) != 0) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == n;
}

RationalMatrix exact_inverse(const SymIntMatrix& q) {
    try {
        return inverse_impl<C64>(q);
    } catch (const Overflow&) {
        return inverse_impl<Int>(q);
    }
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("rational_inverse: non-square matrix");
    const int n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) throw ValidationError("rational_inverse: singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(k, j));
                std::swap(inv.at(p, j), inv.at(k, j));
            }
        const Rational pivot = a.at(k, k);
        for (int j = 0; j < n; ++j) {
            a.at(k, j) /= pivot;
            inv.at(k, j) /= pivot;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            const Rational f = a.at(i, k);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

bool is_integral(const RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).get_den() != 1) return false;
    return true;
}

} // namespace sfs
