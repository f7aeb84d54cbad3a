#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gitnef/linalg.hpp"
#include "gitnef/rational.hpp"

namespace gitnef {

/* A linearization weight: n rational entries x_i with 0 <= x_i <= 1 and
 * sum x_i = 2. Construction validates both conditions. */
class WeightVector {
public:
    explicit WeightVector(QVector entries);

    int n() const { return static_cast<int>(entries_.size()); }
    const QVector& entries() const { return entries_; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    /// Comma-separated canonical form, e.g. "1/5,1/5,1/5,1/5,1/5,1/5,1/5,1/5,2/5".
    std::string str() const;
    static WeightVector parse(const std::string& text);

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const WeightVector& a, const WeightVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    QVector entries_;
};

/// The weight with x_j = a for j != i and the remaining mass 2-(n-1)a at
/// position i (1-based). Requires 1/(n-1) <= a <= 2/(n-1) so that every entry
/// lands in [0,1]; throws std::domain_error otherwise.
WeightVector special_weight(const Rational& a, int i, int n);

/// Entry value at the odd position of special_weight(a, ., n).
Rational special_weight_odd_entry(const Rational& a, int n);

/* Vital curve: an ordered partition of {1..n} into four nonempty blocks.
 * The stored order is whatever the caller gave; equality of curve classes
 * ignores block order. */
class CurveClass {
public:
    CurveClass(std::array<std::vector<int>, 4> blocks, int n);

    int n() const { return n_; }
    const std::array<std::vector<int>, 4>& blocks() const { return blocks_; }

    std::array<int, 4> shape() const;

    /// Block-separated form "1 2 3 4 | 5 6 7 | 8 | 9".
    std::string str() const;
    static CurveClass parse(const std::string& text, int n);

    /// Class equality: same set of blocks, in any order.
    bool same_class(const CurveClass& other) const;

private:
    std::array<std::vector<int>, 4> blocks_;
    int n_;
};

/* Multiset of four positive block sizes, sorted descending. */
using CurveShape = std::array<int, 4>;

std::string shape_str(const CurveShape& s);
CurveShape parse_shape(const std::string& text);
int shape_sum(const CurveShape& s);

/// All curve shapes for n (partitions of n into exactly four parts), in
/// descending lexicographic order: n=8 gives (5,1,1,1), (4,2,1,1), (3,3,1,1),
/// (3,2,2,1), (2,2,2,2).
std::vector<CurveShape> curve_shapes(int n);

/// A curve with consecutive-interval blocks of the given sizes:
/// {1..s1}, {s1+1..s1+s2}, and so on.
CurveClass interval_curve(const CurveShape& sizes, int n);

/// The floor(n/2)-1 curves spanning the symmetric intersection pairing.
/// Odd n = 2f+1: C_i has sizes (f+i-1, f-i, 1, 1). Even n = 2f: sizes
/// (f-2+i, f-i, 1, 1). Blocks are consecutive intervals. Requires n >= 5.
std::vector<CurveClass> basis_curves(int n);

/* Symmetric boundary divisor sum r_2 D_2 + ... + r_{floor(n/2)} D_{floor(n/2)}.
 * Exactly the keys 2..floor(n/2) must be present. */
class SymmetricDivisor {
public:
    SymmetricDivisor(int n, std::map<int, Rational> coeffs);

    int n() const { return n_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    /// Coefficient r_j with the conventions r_0 = r_1 = 0 and r_j = r_{n-j}.
    Rational r(int j) const;

    /// "r2=3/5,r3=4/5" form, ascending in j.
    std::string str() const;
    static SymmetricDivisor parse(const std::string& text, int n);

private:
    int n_;
    std::map<int, Rational> coeffs_;
};

struct WeightOrbit {
    std::vector<WeightVector> representatives;  // distinct permutations, sorted
    long long multiplicity;                     // stabilizer order; |reps| * multiplicity = n!
};

/// The S_n orbit of x: all distinct coordinate permutations plus the common
/// multiplicity n!/|orbit|. Requires n <= 12 (factorials stay in range and the
/// orbit stays enumerable).
WeightOrbit orbit(const WeightVector& x);

long long factorial_ll(int n);

}  // namespace gitnef
