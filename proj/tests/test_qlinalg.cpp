#include <doctest.h>

#include <random>

#include "ezdop/qlinalg.hpp"

using namespace ezdop;
using namespace ezdop::linalg;

namespace {

QMat random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> v(-3, 3);
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v(rng);
    return m;
}

}  // namespace

TEST_CASE("rref identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        QMat a = random_matrix(rng, 5, 7);
        Rref r = rref(a, true);
        CHECK(r.transform * a == r.reduced);
        CHECK(r.rank == static_cast<int>(r.pivot_cols.size()));
        for (int i = 0; i < r.rank; ++i) {
            CHECK(r.reduced.at(i, r.pivot_cols[i]) == 1);
            for (int k = 0; k < r.reduced.rows(); ++k)
                if (k != i) CHECK(r.reduced.at(k, r.pivot_cols[i]) == 0);
        }
    }
}

TEST_CASE("nullspace vectors annihilate") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        QMat a = random_matrix(rng, 4, 6);
        QMat ns = nullspace(a);
        CHECK(ns.cols() == a.cols() - rank(a));
        CHECK((a * ns).is_zero());
        CHECK(rank(ns) == ns.cols());
    }
}

TEST_CASE("solve returns exact solutions or exact witnesses") {
    std::mt19937_64 rng(13);
    int infeasible_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        QMat a = random_matrix(rng, 5, 3);
        QVec b(5);
        std::uniform_int_distribution<int> v(-3, 3);
        for (auto& q : b) q = v(rng);
        LinearSolve s = solve_with_certificate(a, b);
        if (s.feasible) {
            QVec ax = a.apply(s.solution);
            CHECK(ax == b);
        } else {
            ++infeasible_seen;
            // w^T A = 0 and w^T b != 0.
            for (int c = 0; c < a.cols(); ++c) {
                Rational acc(0);
                for (int r = 0; r < a.rows(); ++r) acc += s.witness[r] * a.at(r, c);
                CHECK(acc == 0);
            }
            Rational pairing(0);
            for (int r = 0; r < a.rows(); ++r) pairing += s.witness[r] * b[r];
            CHECK(pairing != 0);
        }
    }
    // Random right-hand sides over a thin column space are almost always
    // outside it.
    CHECK(infeasible_seen > 0);
}

TEST_CASE("solve of consistent system built from a known solution") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        QMat a = random_matrix(rng, 6, 4);
        QVec x(4);
        std::uniform_int_distribution<int> v(-3, 3);
        for (auto& q : x) q = v(rng);
        QVec b = a.apply(x);
        LinearSolve s = solve_with_certificate(a, b);
        REQUIRE(s.feasible);
        CHECK(a.apply(s.solution) == b);
    }
}
