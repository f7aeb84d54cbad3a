#pragma once

#include <cstdint>
#include <vector>

#include "gitnef/intersection.hpp"
#include "gitnef/moduli.hpp"

namespace gitnef {

/* Walls of the chamber decomposition of the weight polytope: hyperplanes
 * sum_{i in I} x_i = 1 for proper nonempty subsets I, with I identified with
 * its complement. The canonical representative is the side containing
 * element 1 (the lexicographically smaller of the pair); bit i-1 of a mask
 * stands for element i. */
using WallMask = std::uint32_t;

WallMask canonicalize_wall(WallMask mask, int n);
std::vector<int> wall_indices(WallMask mask);

/// All 2^(n-1) - 1 canonical walls, sorted by size and then by index sequence.
std::vector<WallMask> canonical_walls(int n);

/* A 0-cell of the chamber complex: a point of the weight polytope whose
 * active constraints (walls meeting it plus vanishing coordinates) have full
 * rank n together with the total-weight equation. */
struct ZeroCell {
    WeightVector point;
    std::vector<WallMask> active_walls;  // canonical, in canonical_walls order
    std::vector<int> active_zeros;       // 1-based coordinates with x_i = 0

    friend bool operator==(const ZeroCell&, const ZeroCell&) = default;
};

/// All 0-cells, sorted by coordinate vector. Depth-first search over active
/// sets with incremental exact-rank pruning; every returned point is
/// re-verified against all constraints afterwards. n <= 7 runs in seconds to
/// minutes; 8 <= n <= 10 only with expensive = true (may take hours); larger
/// n is rejected.
std::vector<ZeroCell> enumerate_zero_cells(int n, bool expensive = false);

/// Independent completeness oracle for n <= 6: solves every constraint
/// subsystem of the right size over rationals and filters feasibility. Shares
/// nothing with the search path above except the exact linear algebra.
std::vector<ZeroCell> zero_cells_bruteforce(int n);

struct ZeroCellOrbit {
    WeightVector representative;  // coordinates sorted descending
    long long orbit_size = 0;
};

/// Groups cells into coordinate-permutation orbits, largest representative
/// first.
std::vector<ZeroCellOrbit> zero_cell_orbits(const std::vector<ZeroCell>& cells);

enum class WallSide { below, on, above };

struct ChamberSignature {
    int n = 0;
    std::vector<WallSide> sides;  // aligned with canonical_walls(n)

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

/// Position of x relative to every wall.
ChamberSignature chamber_signature(const WeightVector& x);

/* One generator of the cone spanned by the 0-cell polarizations. In symmetric
 * mode each orbit contributes the full symmetrization, reduced by (n-1)!, so
 * the values are directly comparable with the special-weight products; in
 * plain mode each cell contributes its own intersection numbers against the
 * basis curves. */
struct ConeGeneratorEntry {
    WeightVector representative;
    long long orbit_size = 1;
    bool degenerate = false;  // some coordinate equals 1; the vector vanishes
    IntersectionVector symmetric_vector;  // symmetric mode only
    QVector basis_vector;                 // plain mode only
};

std::vector<ConeGeneratorEntry> git_cone_generators(int n, bool symmetric,
                                                    bool expensive = false);

}  // namespace gitnef
