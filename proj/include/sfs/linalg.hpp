#ifndef SFS_LINALG_HPP
#define SFS_LINALG_HPP

#include <cstdint>
#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

// Dense symmetric integer matrix.  Entries are machine integers (framings
// and linking numbers are small); every derived quantity (determinants,
// inverses, minors) is computed exactly, in arbitrary precision when the
// fast fixed-width path would overflow.
class SymIntMatrix {
public:
    SymIntMatrix() = default;
    explicit SymIntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

    static SymIntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

    int size() const { return n_; }
    int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, int64_t v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    friend bool operator==(const SymIntMatrix&, const SymIntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int64_t> a_;
};

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// det of the empty matrix is 1.
Int determinant(const SymIntMatrix& q);

// All leading principal minors alternate in sign starting negative,
// checked in exact arithmetic.  A zero leading minor fails the test.
bool is_negative_definite(const SymIntMatrix& q);

// Connectivity of the graph with an edge wherever q_ij != 0 (i != j).
// Matrices of size <= 1 count as irreducible.
bool is_irreducible(const SymIntMatrix& q);

// Exact inverse with rational entries; throws ValidationError when singular.
RationalMatrix exact_inverse(const SymIntMatrix& q);

// Gauss-Jordan over the rationals; used to invert exact_inverse output.
RationalMatrix rational_inverse(const RationalMatrix& m);

// True when every entry has denominator 1.
bool is_integral(const RationalMatrix& m);

} // namespace sfs

#endif
