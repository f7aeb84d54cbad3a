#include "gitnef/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gitnef {

QMatrix::QMatrix(std::vector<QVector> rows) : rows_(rows.size()), cols_(0) {
    if (!rows.empty())
        cols_ = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("QMatrix: ragged rows");
    }
    data_ = std::move(rows);
}

QVector QMatrix::multiply(const QVector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("QMatrix::multiply: size mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = dot(data_[i], x);
    return out;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

namespace {

/* Integer working copy of a rational matrix: each row is scaled by the lcm of
 * its denominators. Row scaling by a positive constant changes neither the
 * rank nor the solution set. */
std::vector<std::vector<BigInt>> clear_denominators(const QMatrix& A,
                                                    const QVector* b) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(A.rows());
    const std::size_t width = A.cols() + (b ? 1 : 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < A.cols(); ++j)
            l = boost::multiprecision::lcm(l, A.at(i, j).denominator());
        if (b)
            l = boost::multiprecision::lcm(l, (*b)[i].denominator());
        std::vector<BigInt> row(width);
        for (std::size_t j = 0; j < A.cols(); ++j)
            row[j] = A.at(i, j).numerator() * (l / A.at(i, j).denominator());
        if (b)
            row[A.cols()] = (*b)[i].numerator() * (l / (*b)[i].denominator());
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<BigInt>> rows;  // pivot rows, in elimination order
    std::vector<std::size_t> pivot_cols;
};

/* Bareiss elimination restricted to the first `ncols` columns (any extra
 * column rides along as an augmented right-hand side). Returns the echelon
 * and, through `leftovers`, the fully reduced non-pivot rows. */
Echelon eliminate(std::vector<std::vector<BigInt>> rows, std::size_t ncols,
                  std::vector<std::vector<BigInt>>* leftovers) {
    Echelon ech;
    for (auto& candidate : rows) {
        // Reduce against existing pivots in order, Bareiss style.
        BigInt d = 1;
        for (std::size_t k = 0; k < ech.rows.size(); ++k) {
            const auto& pr = ech.rows[k];
            const BigInt& pv = pr[ech.pivot_cols[k]];
            BigInt f = candidate[ech.pivot_cols[k]];
            for (std::size_t j = 0; j < candidate.size(); ++j)
                candidate[j] = (pv * candidate[j] - f * pr[j]) / d;
            d = pv;
        }
        std::size_t piv = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (candidate[j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv == ncols) {
            if (leftovers)
                leftovers->push_back(std::move(candidate));
            continue;
        }
        ech.pivot_cols.push_back(piv);
        ech.rows.push_back(std::move(candidate));
    }
    return ech;
}

}  // namespace

std::size_t rank(const QMatrix& A) {
    auto rows = clear_denominators(A, nullptr);
    return eliminate(std::move(rows), A.cols(), nullptr).rows.size();
}

SolveResult solve(const QMatrix& A, const QVector& b) {
    if (b.size() != A.rows())
        throw std::invalid_argument("solve: right-hand side size mismatch");
    auto rows = clear_denominators(A, &b);
    std::vector<std::vector<BigInt>> leftovers;
    Echelon ech = eliminate(std::move(rows), A.cols(), &leftovers);

    for (const auto& r : leftovers) {
        if (r[A.cols()] != 0)
            return NoSolution{};
    }
    if (ech.rows.size() < A.cols())
        return Underdetermined{ech.rows.size()};

    // Full column rank: back-substitute in reverse pivot order.
    QVector x(A.cols());
    for (std::size_t k = ech.rows.size(); k-- > 0;) {
        const auto& r = ech.rows[k];
        Rational s(r[A.cols()]);
        for (std::size_t j = k + 1; j < ech.rows.size(); ++j) {
            std::size_t c = ech.pivot_cols[j];
            s -= Rational(r[c]) * x[c];
        }
        x[ech.pivot_cols[k]] = s / Rational(r[ech.pivot_cols[k]]);
    }
    return UniqueSolution{std::move(x)};
}

}  // namespace gitnef
