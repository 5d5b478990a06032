#pragma once

// Dense matrices over an arbitrary exact field. Scalars may carry runtime
// context (a cyclotomic conductor, a prime modulus), so fresh zeros and ones
// are produced through zero_like/one_like on an existing entry rather than
// from bare literals; matrices here are therefore never 0x0.

#include <stdexcept>
#include <vector>

#include "reflie/rational.hpp"

namespace reflie {

template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(int r, int c, const T& fill) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, fill) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("matrix: dimensions must be positive");
    }

    static Mat identity(int n, const T& proto) {
        Mat m(n, n, zero_like(proto));
        T one = one_like(proto);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const T& proto() const { return a_.front(); }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat transpose() const {
        Mat m(c_, r_, zero_like(proto()));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    T trace() const {
        if (r_ != c_) throw std::invalid_argument("matrix: trace of non-square");
        T t = zero_like(proto());
        for (int i = 0; i < r_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        T z = zero_like(proto());
        for (const T& x : a_)
            if (!(x == z)) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        require_same_shape(a, b);
        Mat m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + b.a_[i];
        return m;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        require_same_shape(a, b);
        Mat m = a;
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - b.a_[i];
        return m;
    }

    friend Mat operator-(const Mat& a) {
        Mat m = a;
        for (auto& x : m.a_) x = -x;
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix: shape mismatch in product");
        Mat m(a.r_, b.c_, zero_like(a.proto()));
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& aik = a(i, k);
                if (aik == zero_like(aik)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + aik * b(k, j);
            }
        return m;
    }

    friend Mat operator*(const T& s, const Mat& a) {
        Mat m = a;
        for (auto& x : m.a_) x = s * x;
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  private:
    static void require_same_shape(const Mat& a, const Mat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix: shape mismatch");
    }

    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
Mat<T> commutator(const Mat<T>& a, const Mat<T>& b) {
    return a * b - b * a;
}

// Gaussian elimination with exact division; returns the determinant.
template <class T>
T det(Mat<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    const int n = m.rows();
    T z = zero_like(m.proto());
    T acc = one_like(m.proto());
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!(m(i, col) == z)) {
                piv = i;
                break;
            }
        if (piv < 0) return z;
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
            negate = !negate;
        }
        acc = acc * m(col, col);
        T inv_piv = one_like(z) / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == z) continue;
            T f = m(i, col) * inv_piv;
            for (int j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return negate ? -acc : acc;
}

template <class T>
Mat<T> mat_inverse(const Mat<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const int n = a.rows();
    T z = zero_like(a.proto());
    Mat<T> m = a, inv = Mat<T>::identity(n, a.proto());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!(m(i, col) == z)) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T f = one_like(z) / m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) = f * m(col, j);
            inv(col, j) = f * inv(col, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m(i, col) == z) continue;
            T g = m(i, col);
            for (int j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - g * m(col, j);
                inv(i, j) = inv(i, j) - g * inv(col, j);
            }
        }
    }
    return inv;
}

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// k-th exterior power, rows and columns indexed by k-subsets in
// lexicographic order; entries are the corresponding k x k minors.
template <class T>
Mat<T> exterior_power(const Mat<T>& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("exterior_power: non-square matrix");
    if (k < 1 || k > a.rows()) throw std::invalid_argument("exterior_power: bad degree");
    auto idx = k_subsets(a.rows(), k);
    const int n = static_cast<int>(idx.size());
    Mat<T> m(n, n, zero_like(a.proto()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<T> sub(k, k, zero_like(a.proto()));
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v) sub(u, v) = a(idx[i][u], idx[j][v]);
            m(i, j) = det(sub);
        }
    return m;
}

}  // namespace reflie
