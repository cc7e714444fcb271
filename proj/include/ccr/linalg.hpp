#pragma once

#include <cstddef>
#include <vector>

#include "ccr/scalar.hpp"

namespace ccr {

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);

// Dense matrix over one coefficient field.
class Mat {
  public:
    Mat() = default;
    Mat(FieldSpec f, size_t rows, size_t cols);  // zero-filled
    static Mat identity(FieldSpec f, size_t n);
    static Mat from_rows(FieldSpec f, const std::vector<Vec>& rows);
    static Mat from_cols(FieldSpec f, const std::vector<Vec>& cols);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    const FieldSpec& field() const { return f_; }

    Scalar& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    Mat kronecker(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool is_zero() const;
    bool is_identity() const;
    Scalar trace() const;
    Vec col(size_t j) const;
    Vec row(size_t i) const;
    std::string str() const;

  private:
    FieldSpec f_;
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Reduced row echelon form.  Pivoting is deterministic: columns are scanned
// left to right and the first row with a nonzero entry is chosen, so equal
// inputs give identical output on every run.
struct Echelon {
    Mat R;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};
Echelon rref(Mat A);

size_t rank_of(const Mat& A);

// Basis of the null space { x : Ax = 0 }, in the canonical (free variable)
// parametrization induced by rref.
std::vector<Vec> kernel_basis(const Mat& A);

// General exact solve of A x = b.
struct SolveResult {
    bool consistent = false;
    Vec particular;            // defined when consistent
    std::vector<Vec> kernel;   // basis of the homogeneous solutions
};
SolveResult solve_linear(const Mat& A, const Vec& b);

// Solve A X = B where A has full column rank and the system is consistent;
// throws MathError otherwise.  Used for change-of-basis computations.
Mat solve_exact(const Mat& A, const Mat& B);

// Column space basis as a matrix whose columns are the reduced basis (the
// pivot columns of A in original form).  Deterministic.
Mat column_space_basis(const Mat& A);

}  // namespace ccr
