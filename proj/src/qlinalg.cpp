#include "ezdop/qlinalg.hpp"

#include <stdexcept>

namespace ezdop::linalg {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& w = other.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

QVec QMat::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    QVec out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

QMat QMat::transposed() const {
    QMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool QMat::is_zero() const {
    for (const Rational& q : a_)
        if (q != 0) return false;
    return true;
}

Rref rref(const QMat& a, bool with_transform) {
    Rref r;
    r.reduced = a;
    QMat& m = r.reduced;
    const int rows = m.rows(), cols = m.cols();
    if (with_transform) r.transform = QMat::identity(rows);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        // Pivot: among candidate rows, fewest nonzeros, then lowest index.
        int pivot = -1;
        int best_nnz = -1;
        for (int i = rank; i < rows; ++i) {
            if (m.at(i, col) == 0) continue;
            int nnz = 0;
            for (int j = col; j < cols; ++j)
                if (m.at(i, j) != 0) ++nnz;
            if (pivot < 0 || nnz < best_nnz) {
                pivot = i;
                best_nnz = nnz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            if (with_transform)
                for (int j = 0; j < rows; ++j)
                    std::swap(r.transform.at(pivot, j), r.transform.at(rank, j));
        }
        Rational inv = 1 / m.at(rank, col);
        if (inv != 1) {
            for (int j = col; j < cols; ++j)
                if (m.at(rank, j) != 0) m.at(rank, j) *= inv;
            if (with_transform)
                for (int j = 0; j < rows; ++j)
                    if (r.transform.at(rank, j) != 0) r.transform.at(rank, j) *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            Rational f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < cols; ++j) {
                const Rational& v = m.at(rank, j);
                if (v != 0) m.at(i, j) -= f * v;
            }
            if (with_transform)
                for (int j = 0; j < rows; ++j) {
                    const Rational& v = r.transform.at(rank, j);
                    if (v != 0) r.transform.at(i, j) -= f * v;
                }
        }
        r.pivot_cols.push_back(col);
        ++rank;
    }
    r.rank = rank;
    return r;
}

int rank(const QMat& a) {
    return rref(a).rank;
}

QMat nullspace(const QMat& a) {
    Rref r = rref(a);
    const int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat basis(cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis.at(f, static_cast<int>(k)) = 1;
        for (int i = 0; i < r.rank; ++i)
            basis.at(r.pivot_cols[i], static_cast<int>(k)) = -r.reduced.at(i, f);
    }
    return basis;
}

LinearSolve solve_with_certificate(const QMat& a, const QVec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    Rref r = rref(a, /*with_transform=*/true);
    QVec y = r.transform.apply(b);
    LinearSolve out;
    for (int i = r.rank; i < a.rows(); ++i) {
        if (y[i] != 0) {
            out.feasible = false;
            out.witness.resize(a.rows());
            for (int j = 0; j < a.rows(); ++j) out.witness[j] = r.transform.at(i, j);
            return out;
        }
    }
    out.feasible = true;
    out.solution.assign(a.cols(), Rational(0));
    for (int i = 0; i < r.rank; ++i) out.solution[r.pivot_cols[i]] = y[i];
    return out;
}

}  // namespace ezdop::linalg
