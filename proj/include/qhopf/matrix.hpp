#pragma once

#include "qhopf/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace qhopf {

struct shape_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix over Q(zeta_n), row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0), order_(1) {}
    Mat(int rows, int cols, int order)
        : rows_(rows), cols_(cols), order_(order),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), FieldElement::zero(order)) {}

    static Mat identity(int n, int order) {
        Mat m(n, n, order);
        for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(order);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }

    FieldElement& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw shape_mismatch("Mat multiply: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                 " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        Mat out(a.rows_, b.cols_, a.order_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const FieldElement& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
                }
            }
        return out;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("Mat add: shape mismatch");
        Mat out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] + b.data_[i];
        return out;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw shape_mismatch("Mat sub: shape mismatch");
        Mat out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] - b.data_[i];
        return out;
    }
    friend Mat operator*(const FieldElement& s, const Mat& a) {
        Mat out = a;
        for (auto& x : out.data_) x = s * x;
        return out;
    }

    Mat transposed() const {
        Mat out(cols_, rows_, order_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    /// Kronecker product in the convention (a (x) b)[i*rb+k, j*cb+l] = a[i,j] b[k,l].
    friend Mat kron(const Mat& a, const Mat& b) {
        Mat out(a.rows_ * b.rows_, a.cols_ * b.cols_, a.order_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        out.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
            }
        return out;
    }

private:
    int rows_, cols_, order_;
    std::vector<FieldElement> data_;
};

/// Reduced row echelon form; returns the pivot column indices.
inline Mat rref(Mat m, std::vector<int>& pivots) {
    pivots.clear();
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int pivot_row = -1;
        while (lead < m.cols()) {
            for (int i = r; i < m.rows(); ++i)
                if (!m.at(i, lead).is_zero()) { pivot_row = i; break; }
            if (pivot_row >= 0) break;
            ++lead;
        }
        if (lead >= m.cols()) break;
        if (pivot_row != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot_row, j), m.at(r, j));
        FieldElement inv = m.at(r, lead).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead).is_zero()) continue;
            FieldElement f = m.at(i, lead);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(lead);
        ++lead;
    }
    return m;
}

inline int rank(const Mat& m) {
    std::vector<int> pivots;
    rref(m, pivots);
    return static_cast<int>(pivots.size());
}

struct RankFactorization {
    Mat basis;  // rows x rank, the pivot columns of m
    Mat coords; // rank x cols, the nonzero rows of rref(m)
};

/// m = basis * coords with basis injective and coords surjective.
inline RankFactorization rank_factor(const Mat& m) {
    std::vector<int> pivots;
    Mat r = rref(m, pivots);
    const int rk = static_cast<int>(pivots.size());
    RankFactorization out{Mat(m.rows(), rk, m.order()), Mat(rk, m.cols(), m.order())};
    for (int j = 0; j < rk; ++j)
        for (int i = 0; i < m.rows(); ++i) out.basis.at(i, j) = m.at(i, pivots[static_cast<std::size_t>(j)]);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < m.cols(); ++j) out.coords.at(i, j) = r.at(i, j);
    return out;
}

inline std::optional<Mat> try_inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Mat aug(n, 2 * n, m.order());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = FieldElement::one(m.order());
    }
    std::vector<int> pivots;
    Mat r = rref(aug, pivots);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
        return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
    Mat inv(n, n, m.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

inline Mat inverse(const Mat& m) {
    auto inv = try_inverse(m);
    if (!inv) throw std::runtime_error("Mat inverse: singular matrix");
    return *inv;
}

/// Unique x with a*x = b for injective a (throws when inconsistent).
inline Mat solve_left(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw shape_mismatch("solve_left: row mismatch");
    Mat aug(a.rows(), a.cols() + b.cols(), a.order());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<int> pivots;
    Mat r = rref(aug, pivots);
    Mat x(a.cols(), b.cols(), a.order());
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] >= a.cols())
            throw std::runtime_error("solve_left: inconsistent system");
        for (int j = 0; j < b.cols(); ++j)
            x.at(pivots[p], j) = r.at(static_cast<int>(p), a.cols() + j);
    }
    // Verify (catches non-injective a with inconsistent residual).
    if (!(a * x == b)) throw std::runtime_error("solve_left: no exact solution");
    return x;
}

} // namespace qhopf
