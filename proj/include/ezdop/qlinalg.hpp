#pragma once

#include <vector>

#include "ezdop/rational.hpp"

namespace ezdop::linalg {

using QVec = std::vector<Rational>;

// Dense matrix over Q, row-major.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    QMat operator*(const QMat& other) const;
    QVec apply(const QVec& v) const;   // this * v
    QMat transposed() const;
    bool is_zero() const;
    bool operator==(const QMat& other) const = default;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Reduced row echelon form. transform * input == reduced (transform is a
// product of elementary row operations, hence invertible); transform has
// zero rows/cols when not requested.
struct Rref {
    QMat reduced;
    QMat transform;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Rref rref(const QMat& a, bool with_transform = false);
int rank(const QMat& a);

// Columns form a deterministic basis of { x : a x = 0 }.
QMat nullspace(const QMat& a);

// Exact solve of a x = b with a certificate either way: a solution with
// free variables set to zero, or a left-nullspace witness w with
// w^T a = 0 and w^T b != 0.
struct LinearSolve {
    bool feasible = false;
    QVec solution;
    QVec witness;
};
LinearSolve solve_with_certificate(const QMat& a, const QVec& b);

}  // namespace ezdop::linalg
