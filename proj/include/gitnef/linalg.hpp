#pragma once

#include <variant>
#include <vector>

#include "gitnef/rational.hpp"

namespace gitnef {

using QVector = std::vector<Rational>;

/* Dense rational matrix, rectangular by construction. */
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, QVector(cols)) {}

    explicit QMatrix(std::vector<QVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

    const QVector& row(std::size_t i) const { return data_[i]; }

    QVector multiply(const QVector& x) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<QVector> data_;
};

struct UniqueSolution {
    QVector x;
};
struct NoSolution {};
struct Underdetermined {
    std::size_t rank;
};

using SolveResult = std::variant<UniqueSolution, NoSolution, Underdetermined>;

/// Solves A x = b exactly. Elimination is fraction-free (integer pivots after
/// clearing denominators) with deterministic first-nonzero pivot selection, so
/// identical inputs always take the identical path.
SolveResult solve(const QMatrix& A, const QVector& b);

/// Exact rank by the same fraction-free elimination.
std::size_t rank(const QMatrix& A);

Rational dot(const QVector& a, const QVector& b);

}  // namespace gitnef
