#ifndef SKEWCANON_MATRIX_HPP
#define SKEWCANON_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewcanon/errors.hpp"
#include "skewcanon/scalar.hpp"

namespace skewcanon {

/// Dense row-major matrix over one of the supported scalar fields. Column
/// vectors are n x 1 matrices. Values are immutable in spirit: all library
/// operations build new matrices instead of mutating shared ones.
template <typename S>
class Matrix {
public:
    using Scalar = S;

    Matrix() = default;

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, ScalarTraits<S>::zero()) {
        if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    }

    Matrix(std::initializer_list<std::initializer_list<S>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw ValidationError("ragged initializer for matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
        return m;
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    static Matrix column(std::vector<S> entries) {
        Matrix m(static_cast<int>(entries.size()), 1);
        m.data_ = std::move(entries);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = -a.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (ScalarTraits<S>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
        return r;
    }

    Matrix& operator+=(const Matrix& b) { *this = *this + b; return *this; }
    Matrix& operator-=(const Matrix& b) { *this = *this - b; return *this; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const S& x : data_)
            if (!ScalarTraits<S>::is_zero(x)) return false;
        return true;
    }

    /// max row-sum of scalar magnitudes, as a double
    double inf_norm() const {
        double best = 0.0;
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += ScalarTraits<S>::to_double(ScalarTraits<S>::abs((*this)(i, j)));
            if (s > best) best = s;
        }
        return best;
    }

    /// largest scalar magnitude, as a double
    double max_abs() const {
        double best = 0.0;
        for (const S& x : data_) {
            double v = ScalarTraits<S>::to_double(ScalarTraits<S>::abs(x));
            if (v > best) best = v;
        }
        return best;
    }

    Matrix col(int j) const {
        Matrix r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }

    void set_col(int j, const Matrix& v) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
    }

    Matrix block(int i0, int j0, int nrows, int ncols) const {
        Matrix r(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void set_block(int i0, int j0, const Matrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    /// columns of a appended with columns of b
    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        if (a.rows_ != b.rows_) throw ValidationError("hcat row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        r.set_block(0, 0, a);
        r.set_block(0, a.cols_, b);
        return r;
    }

    static Matrix from_columns(const std::vector<Matrix>& cols) {
        if (cols.empty()) return Matrix();
        Matrix r(cols.front().rows(), static_cast<int>(cols.size()));
        for (int j = 0; j < r.cols(); ++j) r.set_col(j, cols[static_cast<std::size_t>(j)]);
        return r;
    }

    template <typename T, typename F>
    Matrix<T> map(F&& f) const {
        Matrix<T> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << (i ? "\n[" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << ScalarTraits<S>::str((*this)(i, j));
            os << "]";
        }
        return os.str();
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw ValidationError("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> data_;
};

/// bilinear form value v^T G w for column vectors
template <typename S>
S form_value(const Matrix<S>& G, const Matrix<S>& v, const Matrix<S>& w) {
    S acc = ScalarTraits<S>::zero();
    for (int i = 0; i < G.rows(); ++i) {
        if (ScalarTraits<S>::is_zero(v(i, 0))) continue;
        for (int j = 0; j < G.cols(); ++j) acc += v(i, 0) * G(i, j) * w(j, 0);
    }
    return acc;
}

/// complexification helpers: a real matrix viewed with Complex entries, and
/// the re/im column pair of a complex column vector
template <typename S>
Matrix<Complex<S>> complexify(const Matrix<S>& m) {
    return m.template map<Complex<S>>([](const S& x) { return Complex<S>(x); });
}

template <typename S>
Matrix<S> real_part(const Matrix<Complex<S>>& m) {
    return m.template map<S>([](const Complex<S>& z) { return z.re; });
}

template <typename S>
Matrix<S> imag_part(const Matrix<Complex<S>>& m) {
    return m.template map<S>([](const Complex<S>& z) { return z.im; });
}

template <typename S>
Matrix<Complex<S>> conj(const Matrix<Complex<S>>& m) {
    return m.template map<Complex<S>>([](const Complex<S>& z) { return conj(z); });
}

} // namespace skewcanon

#endif
