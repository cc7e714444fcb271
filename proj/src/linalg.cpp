#include "ccr/linalg.hpp"

#include <sstream>

namespace ccr {

Vec vec_zero(const FieldSpec& f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw TypeError("vec_add: length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw TypeError("vec_sub: length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Mat::Mat(FieldSpec f, size_t rows, size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(FieldSpec f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_rows(FieldSpec f, const std::vector<Vec>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    Mat m(f, rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw TypeError("from_rows: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(FieldSpec f, const std::vector<Vec>& cols) {
    size_t r = cols.empty() ? 0 : cols[0].size();
    Mat m(f, r, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r) throw TypeError("from_cols: ragged columns");
        for (size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw TypeError("matrix product: shape mismatch");
    Mat m(f_, r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) + aik * o.at(k, j);
            }
        }
    return m;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != c_) throw TypeError("matrix apply: shape mismatch");
    Vec r = vec_zero(f_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw TypeError("matrix sum: shape mismatch");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw TypeError("matrix difference: shape mismatch");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat m = *this;
    for (auto& x : m.a_) x = c * x;
    return m;
}

Mat Mat::transpose() const {
    Mat m(f_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::kronecker(const Mat& o) const {
    Mat m(f_, r_ * o.r_, c_ * o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (size_t k = 0; k < o.r_; ++k)
                for (size_t l = 0; l < o.c_; ++l)
                    m.at(i * o.r_ + k, j * o.c_ + l) = at(i, j) * o.at(k, l);
        }
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    return *this == identity(f_, r_);
}

Scalar Mat::trace() const {
    if (r_ != c_) throw TypeError("trace of non-square matrix");
    Scalar t = Scalar::zero(f_);
    for (size_t i = 0; i < r_; ++i) t = t + at(i, i);
    return t;
}

Vec Mat::col(size_t j) const {
    Vec v = vec_zero(f_, r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::row(size_t i) const {
    Vec v = vec_zero(f_, c_);
    for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

Echelon rref(Mat A) {
    Echelon e;
    size_t lead = 0;
    for (size_t col = 0; col < A.cols() && lead < A.rows(); ++col) {
        size_t piv = lead;
        while (piv < A.rows() && A.at(piv, col).is_zero()) ++piv;
        if (piv == A.rows()) continue;
        // swap rows piv <-> lead
        if (piv != lead)
            for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(piv, j), A.at(lead, j));
        Scalar d = A.at(lead, col).inv();
        for (size_t j = col; j < A.cols(); ++j) A.at(lead, j) = d * A.at(lead, j);
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == lead || A.at(i, col).is_zero()) continue;
            Scalar f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j)
                A.at(i, j) = A.at(i, j) - f * A.at(lead, j);
        }
        e.pivot_cols.push_back(col);
        ++lead;
    }
    e.rank = e.pivot_cols.size();
    e.R = std::move(A);
    return e;
}

size_t rank_of(const Mat& A) { return rref(A).rank; }

std::vector<Vec> kernel_basis(const Mat& A) {
    Echelon e = rref(A);
    const FieldSpec& f = A.field();
    std::vector<char> is_pivot(A.cols(), 0);
    for (size_t c : e.pivot_cols) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = vec_zero(f, A.cols());
        v[free] = Scalar::one(f);
        for (size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.R.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve_linear(const Mat& A, const Vec& b) {
    if (b.size() != A.rows()) throw TypeError("solve_linear: shape mismatch");
    const FieldSpec& f = A.field();
    Mat aug(f, A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    SolveResult res;
    res.consistent = true;
    for (size_t c : e.pivot_cols)
        if (c == A.cols()) res.consistent = false;  // pivot in the rhs column
    if (res.consistent) {
        res.particular = vec_zero(f, A.cols());
        for (size_t k = 0; k < e.pivot_cols.size(); ++k)
            res.particular[e.pivot_cols[k]] = e.R.at(k, A.cols());
        res.kernel = kernel_basis(A);
    }
    return res;
}

Mat solve_exact(const Mat& A, const Mat& B) {
    if (A.rows() != B.rows()) throw TypeError("solve_exact: shape mismatch");
    Mat X(A.field(), A.cols(), B.cols());
    for (size_t j = 0; j < B.cols(); ++j) {
        SolveResult r = solve_linear(A, B.col(j));
        if (!r.consistent) throw MathError("solve_exact: inconsistent system");
        if (!r.kernel.empty()) throw MathError("solve_exact: solution not unique");
        for (size_t i = 0; i < A.cols(); ++i) X.at(i, j) = r.particular[i];
    }
    return X;
}

Mat column_space_basis(const Mat& A) {
    Echelon e = rref(A);
    std::vector<Vec> cols;
    for (size_t c : e.pivot_cols) cols.push_back(A.col(c));
    return Mat::from_cols(A.field(), cols);
}

}  // namespace ccr
