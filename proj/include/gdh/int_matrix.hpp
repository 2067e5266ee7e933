#ifndef GDH_INT_MATRIX_HPP
#define GDH_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace gdh {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over the integers. Row-major, exact arithmetic.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }
    const Int& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : e_)
            if (x != 0) return false;
        return true;
    }

    IntMat operator*(const IntMat& o) const {
        assert(cols_ == o.rows_);
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Int& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }
    IntMat operator+(const IntMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    IntMat operator-(const IntMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    IntMat operator-() const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    IntMat scaled(const Int& c) const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
        return r;
    }

    IntMat transposed() const {
        IntMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        assert((int)v.size() == cols_);
        std::vector<Int> r(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_col(int j, const std::vector<Int>& v) {
        assert((int)v.size() == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // block placement: copy m into this with top-left corner at (i0, j0)
    void put_block(int i0, int j0, const IntMat& m) {
        assert(i0 + m.rows() <= rows_ && j0 + m.cols() <= cols_);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
    }

    // horizontal / vertical concatenation
    static IntMat hcat(const IntMat& a, const IntMat& b) {
        assert(a.rows() == b.rows());
        IntMat r(a.rows(), a.cols() + b.cols());
        r.put_block(0, 0, a);
        r.put_block(0, a.cols(), b);
        return r;
    }
    static IntMat vcat(const IntMat& a, const IntMat& b) {
        assert(a.cols() == b.cols());
        IntMat r(a.rows() + b.rows(), a.cols());
        r.put_block(0, 0, a);
        r.put_block(a.rows(), 0, b);
        return r;
    }
    static IntMat diag_sum(const IntMat& a, const IntMat& b) {
        IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
        r.put_block(0, 0, a);
        r.put_block(a.rows(), a.cols(), b);
        return r;
    }

    // Kronecker product (a ⊗ b)
    static IntMat kron(const IntMat& a, const IntMat& b) {
        IntMat r(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                for (int p = 0; p < b.rows(); ++p)
                    for (int q = 0; q < b.cols(); ++q)
                        if (b(p, q) != 0) r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
            }
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += (*this)(i, j).str();
                if (j + 1 < cols_) s += " ";
            }
            s += "]\n";
        }
        return s;
    }

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

inline IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        assert((int)rows[i].size() == c);
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace gdh

#endif
