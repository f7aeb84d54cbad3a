#pragma once

#include <array>
#include <string>
#include <vector>

#include "gitnef/moduli.hpp"

namespace gitnef {

/* The box { x : 0 <= x_i <= beta_i, sum x_i = 2 }. Construction requires
 * every beta_i in (0, 1] and sum beta_i >= 2, so the box is nonempty. */
class WeightedHypersimplex {
public:
    explicit WeightedHypersimplex(std::vector<Rational> beta);

    /// All caps equal to 1/k.
    static WeightedHypersimplex uniform(int n, int k);

    int n() const { return static_cast<int>(beta_.size()); }
    const std::vector<Rational>& beta() const { return beta_; }

    bool contains(const WeightVector& x) const;

    /// Exact extremes of x(S) over the box, S given as 1-based indices:
    /// the minimum parks as much mass as the complement caps allow, the
    /// maximum fills S itself.
    Rational min_mass(const std::vector<int>& subset) const;
    Rational max_mass(const std::vector<int>& subset) const;

private:
    std::vector<Rational> beta_;
};

/* Partition of {1..n} into w >= 3 labeled blocks; the width-3 case is the
 * shape the capture certificates speak about, wider ones get reduced. */
class BlockPartition {
public:
    BlockPartition(std::vector<std::vector<int>> blocks, int n);

    int n() const { return n_; }
    std::size_t width() const { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Block-separated form "1 2 | 3 4 | 5 | 6 7".
    std::string str() const;
    static BlockPartition parse(const std::string& text, int n);

private:
    std::vector<std::vector<int>> blocks_;
    int n_;
};

/* Merging a wide partition into three groups, each of weight below one.
 * Blocks are sorted by descending weight (ties keep input order); j2 is the
 * first sorted position whose tail weight drops below one, j1 the first
 * position inside 1..j2-1 whose run up to j2-1 drops below one. Groups are
 * the sorted positions [1, j1), [j1, j2), [j2, w]. */
struct WidthReduction {
    std::vector<std::size_t> order;         // input block indices, heaviest first
    std::size_t j1 = 0;                     // 1-based, in sorted positions
    std::size_t j2 = 0;
    std::array<std::vector<int>, 3> groups;  // merged element sets, ascending
    std::array<Rational, 3> sums;
};

/// Requires every input block weight below one (otherwise std::domain_error);
/// also rejects inputs whose merged groups fail to stay below weight one,
/// which only ties sitting exactly on a wall can produce.
WidthReduction reduce_width(const WeightVector& x, const BlockPartition& partition);

/* Size profile (n1, n2, n3) of a three-block partition, descending. */
using TripleShape = std::array<int, 3>;

std::string triple_str(const TripleShape& s);

/// All partitions of n into exactly three positive parts, descending
/// lexicographic.
std::vector<TripleShape> triple_shapes(int n);

/// Whether the wall x(I_1) = 1 for a first block of size n1 = s[0] meets the
/// open uniform box with caps 1/k: the complement must not be able to absorb
/// the full mass, which reads n2 + n3 > k.
bool is_candidate_shape(const TripleShape& s, int k);

/* Witness that a candidate wall is crossed strictly inside the chamber
 * structure: a special weight whose three block sums all sit strictly below
 * one. The leftover entry is parked in the third block; a = 1/(n-1-n3) when
 * n3 >= k, else 1/(n-k). in_beta_box records whether the witness also
 * respects the box caps entrywise, which the leftover entry usually breaks. */
struct CaptureWitness {
    TripleShape shape;
    Rational a;
    int t = 0;             // a = 1/t
    int odd_position = 0;  // 1-based slot of the leftover entry
    WeightVector point;
    std::array<Rational, 3> block_sums;
    bool in_interior = false;
    bool in_beta_box = false;
};

/// Throws std::domain_error if the shape is not a candidate for this k.
CaptureWitness capture_witness(int n, int k, const TripleShape& shape);

struct AmplenessCertificate {
    int n = 0;
    int k = 0;
    std::vector<TripleShape> skipped;        // walls missing the open box
    std::vector<CaptureWitness> witnesses;   // one per candidate shape
    bool complete = false;                   // every witness landed in the interior
};

/// Runs the witness construction over every three-part shape for n, with
/// 2 <= k <= floor(n/2)-1. Witness denominators t always land in
/// [floor(n/2), n-k]; that range is re-checked and a violation throws
/// std::logic_error.
AmplenessCertificate ampleness_certificate(int n, int k);

}  // namespace gitnef
