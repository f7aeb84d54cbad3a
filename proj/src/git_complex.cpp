#include "gitnef/git_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "gitnef/linalg.hpp"

namespace gitnef {

namespace {

constexpr int kMaxN = 10;
constexpr int kMaxRoutineN = 7;

void check_n(int n, bool expensive) {
    if (n < 4)
        throw std::invalid_argument("enumerate_zero_cells: need n >= 4");
    if (n > kMaxN)
        throw std::invalid_argument("enumerate_zero_cells: n > 10 is not supported");
    if (n > kMaxRoutineN && !expensive)
        throw std::invalid_argument(
            "enumerate_zero_cells: n >= 8 takes very long; pass expensive = true to run anyway");
}

/* The search works on integer rows (coefficients then right-hand side).
 * Coefficients are 0/1, the total-weight row is all ones with right-hand
 * side 2, so every minor fits comfortably in 64 bits. */
using Row = std::array<std::int64_t, kMaxN + 1>;

using I128 = __int128;

I128 abs128(I128 v) { return v < 0 ? -v : v; }

I128 gcd128(I128 a, I128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

Frac make_frac(I128 num, I128 den) {
    if (den == 0)
        throw std::logic_error("zero denominator during back-substitution");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const I128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr I128 lim = INT64_MAX;
    if (abs128(num) > lim || den > lim)
        throw std::logic_error("back-substitution value does not fit in 64 bits");
    return Frac{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

/* Fraction-free elimination that accepts one row at a time and can take the
 * last acceptance back, which is exactly what a depth-first search over
 * constraint subsets needs. Rows are stored reduced against all earlier
 * pivots; the divisor chain of the Bareiss recurrence keeps every
 * intermediate entry an integer minor of the input. */
class IncrementalEliminator {
public:
    explicit IncrementalEliminator(int n) : n_(n) {
        Row total{};
        for (int j = 0; j < n; ++j) total[j] = 1;
        total[n] = 2;
        rows_.push_back(total);
        pivot_cols_.push_back(0);
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    enum class Push { independent, dependent, inconsistent };

    Push try_push(Row row) {
        std::int64_t divisor = 1;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Row& pr = rows_[k];
            const int pc = pivot_cols_[k];
            const std::int64_t pv = pr[pc];
            const std::int64_t f = row[pc];
            for (int j = 0; j <= n_; ++j) {
                const std::int64_t v = pv * row[j] - f * pr[j];
                if (v % divisor != 0)
                    throw std::logic_error("fraction-free elimination lost exactness");
                row[j] = v / divisor;
            }
            divisor = pv;
        }
        int pc = -1;
        for (int j = 0; j < n_; ++j) {
            if (row[j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc < 0)
            return row[n_] == 0 ? Push::dependent : Push::inconsistent;
        rows_.push_back(row);
        pivot_cols_.push_back(pc);
        return Push::independent;
    }

    void pop() {
        rows_.pop_back();
        pivot_cols_.pop_back();
    }

    /* Back-substitution once the rank equals n. Row k is reduced against the
     * pivots of rows 0..k-1, so walking the rows backwards only ever meets
     * already-solved columns. */
    std::array<Frac, kMaxN> solve() const {
        std::array<Frac, kMaxN> x{};
        for (std::size_t k = rows_.size(); k-- > 0;) {
            const Row& r = rows_[k];
            const int pc = pivot_cols_[k];
            I128 acc_num = r[n_];
            I128 acc_den = 1;
            for (int j = 0; j < n_; ++j) {
                if (j == pc || r[j] == 0)
                    continue;
                acc_num = acc_num * x[j].den - I128(r[j]) * x[j].num * acc_den;
                acc_den *= x[j].den;
                const I128 g = gcd128(acc_num, acc_den);
                if (g > 1) {
                    acc_num /= g;
                    acc_den /= g;
                }
            }
            x[pc] = make_frac(acc_num, acc_den * r[pc]);
        }
        return x;
    }

private:
    int n_;
    std::vector<Row> rows_;
    std::vector<int> pivot_cols_;
};

struct PoolEntry {
    Row row{};
    WallMask wall = 0;    // nonzero for wall rows
    int zero_index = -1;  // 0-based coordinate for vanishing rows
};

using PointKey = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct Search {
    int n;
    WallMask full;
    std::vector<PoolEntry> pool;
    IncrementalEliminator elim;
    std::vector<WallMask> chosen_walls;
    std::set<PointKey> points;

    explicit Search(int n_in)
        : n(n_in), full((WallMask{1} << n_in) - 1), elim(n_in) {
        for (WallMask m : canonical_walls(n)) {
            PoolEntry e;
            e.wall = m;
            for (int j = 0; j < n; ++j) e.row[j] = (m >> j) & 1u;
            e.row[n] = 1;
            pool.push_back(e);
        }
        for (int i = 0; i < n; ++i) {
            PoolEntry e;
            e.zero_index = i;
            e.row[i] = 1;
            e.row[n] = 0;
            pool.push_back(e);
        }
    }

    /* Three pairwise disjoint walls held at level one would carry total
     * weight 3 inside a polytope of total weight 2, so any branch choosing
     * such a triple is infeasible. Each wall stands for a complementary
     * pair of subsets and either member may take part in a disjoint triple. */
    bool forces_disjoint_triple(WallMask w) const {
        const WallMask wreps[2] = {w, static_cast<WallMask>(~w & full)};
        const std::size_t m = chosen_walls.size();
        for (std::size_t a = 0; a + 1 < m; ++a) {
            const WallMask areps[2] = {chosen_walls[a],
                                       static_cast<WallMask>(~chosen_walls[a] & full)};
            for (std::size_t b = a + 1; b < m; ++b) {
                const WallMask breps[2] = {chosen_walls[b],
                                           static_cast<WallMask>(~chosen_walls[b] & full)};
                for (WallMask ra : areps)
                    for (WallMask rb : breps)
                        for (WallMask rw : wreps)
                            if ((ra & rb) == 0 && (ra & rw) == 0 && (rb & rw) == 0)
                                return true;
            }
        }
        return false;
    }

    void dfs(std::size_t start) {
        if (elim.rank() == n) {
            emit();
            return;
        }
        const std::size_t needed = static_cast<std::size_t>(n - elim.rank());
        for (std::size_t idx = start; idx < pool.size(); ++idx) {
            if (pool.size() - idx < needed)
                break;
            const PoolEntry& e = pool[idx];
            if (e.wall != 0 && forces_disjoint_triple(e.wall))
                continue;
            if (elim.try_push(e.row) != IncrementalEliminator::Push::independent)
                continue;
            if (e.wall != 0)
                chosen_walls.push_back(e.wall);
            dfs(idx + 1);
            if (e.wall != 0)
                chosen_walls.pop_back();
            elim.pop();
        }
    }

    void emit() {
        const std::array<Frac, kMaxN> x = elim.solve();
        PointKey key;
        key.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (x[j].num < 0 || x[j].num > x[j].den)
                return;  // outside the box; the chosen equalities cut nothing here
            key.emplace_back(x[j].num, x[j].den);
        }
        points.insert(std::move(key));
    }
};

std::string point_text(const QVector& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            out += ',';
        out += x[i].str();
    }
    return out;
}

/* Builds the cell record for a candidate point and re-verifies every defining
 * property from scratch with plain rational arithmetic: box bounds, total
 * weight, and full rank of the active constraints. The enumerators feed only
 * points that already passed their own checks, so any throw here means an
 * internal inconsistency, not bad input. */
ZeroCell build_cell(const QVector& x, int n, const std::vector<WallMask>& walls) {
    const Rational zero(0);
    const Rational one(1);
    Rational total(0);
    for (const Rational& c : x) {
        if (c < zero || one < c)
            throw std::logic_error("0-cell candidate outside the weight box: " + point_text(x));
        total += c;
    }
    if (total != Rational(2))
        throw std::logic_error("0-cell candidate with wrong total weight: " + point_text(x));

    std::vector<WallMask> active_walls;
    for (WallMask m : walls) {
        Rational s(0);
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1u)
                s += x[static_cast<std::size_t>(j)];
        if (s == one)
            active_walls.push_back(m);
    }
    std::vector<int> active_zeros;
    for (int j = 0; j < n; ++j)
        if (x[static_cast<std::size_t>(j)].is_zero())
            active_zeros.push_back(j + 1);

    const std::size_t nrows = active_walls.size() + active_zeros.size() + 1;
    QMatrix M(nrows, static_cast<std::size_t>(n));
    std::size_t r = 0;
    for (WallMask m : active_walls) {
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1u)
                M.at(r, static_cast<std::size_t>(j)) = one;
        ++r;
    }
    for (int j : active_zeros) {
        M.at(r, static_cast<std::size_t>(j - 1)) = one;
        ++r;
    }
    for (int j = 0; j < n; ++j)
        M.at(r, static_cast<std::size_t>(j)) = one;

    if (rank(M) != static_cast<std::size_t>(n))
        throw std::logic_error("active constraints do not pin the candidate point: " +
                               point_text(x));

    return ZeroCell{WeightVector(x), std::move(active_walls), std::move(active_zeros)};
}

std::vector<ZeroCell> cells_from_points(const std::vector<QVector>& pts, int n) {
    const std::vector<WallMask> walls = canonical_walls(n);
    std::vector<ZeroCell> cells;
    cells.reserve(pts.size());
    for (const QVector& x : pts)
        cells.push_back(build_cell(x, n, walls));
    std::sort(cells.begin(), cells.end(), [](const ZeroCell& a, const ZeroCell& b) {
        return a.point.entries() < b.point.entries();
    });
    return cells;
}

QVector sorted_descending(const QVector& v) {
    QVector s = v;
    std::sort(s.begin(), s.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return s;
}

}  // namespace

WallMask canonicalize_wall(WallMask mask, int n) {
    if (n < 2 || n > kMaxN)
        throw std::invalid_argument("canonicalize_wall: n out of range");
    const WallMask full = (WallMask{1} << n) - 1;
    if ((mask & ~full) != 0)
        throw std::invalid_argument("canonicalize_wall: mask has bits beyond n");
    if (mask == 0 || mask == full)
        throw std::invalid_argument("canonicalize_wall: subset must be proper and nonempty");
    return (mask & 1u) ? mask : static_cast<WallMask>(~mask & full);
}

std::vector<int> wall_indices(WallMask mask) {
    std::vector<int> idx;
    for (int j = 0; j < 32; ++j)
        if ((mask >> j) & 1u)
            idx.push_back(j + 1);
    return idx;
}

std::vector<WallMask> canonical_walls(int n) {
    if (n < 2 || n > kMaxN)
        throw std::invalid_argument("canonical_walls: n out of range");
    const WallMask full = (WallMask{1} << n) - 1;
    std::vector<WallMask> walls;
    walls.reserve((std::size_t{1} << (n - 1)) - 1);
    for (WallMask m = 1; m < full; m += 2)
        walls.push_back(m);
    std::sort(walls.begin(), walls.end(), [](WallMask a, WallMask b) {
        const int ca = std::popcount(a);
        const int cb = std::popcount(b);
        if (ca != cb)
            return ca < cb;
        return wall_indices(a) < wall_indices(b);
    });
    return walls;
}

std::vector<ZeroCell> enumerate_zero_cells(int n, bool expensive) {
    check_n(n, expensive);
    Search search(n);
    search.dfs(0);

    std::vector<QVector> pts;
    pts.reserve(search.points.size());
    for (const PointKey& key : search.points) {
        QVector x;
        x.reserve(key.size());
        for (const auto& [num, den] : key)
            x.emplace_back(num, den);
        pts.push_back(std::move(x));
    }
    return cells_from_points(pts, n);
}

std::vector<ZeroCell> zero_cells_bruteforce(int n) {
    if (n < 4 || n > 6)
        throw std::invalid_argument("zero_cells_bruteforce: supported for 4 <= n <= 6 only");

    const Rational zero(0);
    const Rational one(1);

    // Constraint pool over rationals: one row per canonical wall, one per
    // coordinate. The right-hand sides are 1 and 0 respectively.
    std::vector<std::pair<QVector, Rational>> pool;
    for (WallMask m : canonical_walls(n)) {
        QVector row(static_cast<std::size_t>(n), zero);
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1u)
                row[static_cast<std::size_t>(j)] = one;
        pool.emplace_back(std::move(row), one);
    }
    for (int i = 0; i < n; ++i) {
        QVector row(static_cast<std::size_t>(n), zero);
        row[static_cast<std::size_t>(i)] = one;
        pool.emplace_back(std::move(row), zero);
    }

    const std::size_t pick = static_cast<std::size_t>(n - 1);
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;

    std::set<QVector> seen;
    const auto advance = [&]() {
        std::size_t i = pick;
        while (i-- > 0) {
            if (idx[i] + (pick - i) < pool.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        QMatrix A(pick + 1, static_cast<std::size_t>(n));
        QVector b(pick + 1);
        for (std::size_t r = 0; r < pick; ++r) {
            const auto& [row, rhs] = pool[idx[r]];
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                A.at(r, j) = row[j];
            b[r] = rhs;
        }
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            A.at(pick, j) = one;
        b[pick] = Rational(2);

        const SolveResult res = solve(A, b);
        if (const auto* u = std::get_if<UniqueSolution>(&res)) {
            bool inside = true;
            for (const Rational& c : u->x)
                if (c < zero || one < c) {
                    inside = false;
                    break;
                }
            if (inside)
                seen.insert(u->x);
        }
    } while (advance());

    std::vector<QVector> pts(seen.begin(), seen.end());
    return cells_from_points(pts, n);
}

std::vector<ZeroCellOrbit> zero_cell_orbits(const std::vector<ZeroCell>& cells) {
    std::map<QVector, long long> buckets;
    for (const ZeroCell& c : cells)
        ++buckets[sorted_descending(c.point.entries())];
    std::vector<ZeroCellOrbit> orbits;
    orbits.reserve(buckets.size());
    for (const auto& [rep, count] : buckets)
        orbits.push_back(ZeroCellOrbit{WeightVector(rep), count});
    std::sort(orbits.begin(), orbits.end(), [](const ZeroCellOrbit& a, const ZeroCellOrbit& b) {
        return b.representative.entries() < a.representative.entries();
    });
    return orbits;
}

ChamberSignature chamber_signature(const WeightVector& x) {
    const int n = x.n();
    if (n > kMaxN)
        throw std::invalid_argument("chamber_signature: n out of range");
    const Rational one(1);
    ChamberSignature sig;
    sig.n = n;
    for (WallMask m : canonical_walls(n)) {
        Rational s(0);
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1u)
                s += x[static_cast<std::size_t>(j)];
        sig.sides.push_back(s < one ? WallSide::below : (s == one ? WallSide::on : WallSide::above));
    }
    return sig;
}

std::vector<ConeGeneratorEntry> git_cone_generators(int n, bool symmetric, bool expensive) {
    const std::vector<ZeroCell> cells = enumerate_zero_cells(n, expensive);
    std::vector<ConeGeneratorEntry> out;

    if (!symmetric) {
        if (n < 5)
            throw std::invalid_argument("git_cone_generators: basis curves need n >= 5");
        const std::vector<CurveClass> basis = basis_curves(n);
        for (const ZeroCell& c : cells) {
            ConeGeneratorEntry e{c.point, 1, false, {}, {}};
            for (const Rational& v : c.point.entries())
                if (v == Rational(1))
                    e.degenerate = true;
            for (const CurveClass& curve : basis)
                e.basis_vector.push_back(intersect(c.point, curve));
            if (e.degenerate)
                for (const Rational& v : e.basis_vector)
                    if (!v.is_zero())
                        throw std::logic_error(
                            "degenerate 0-cell with a nonvanishing intersection vector");
            out.push_back(std::move(e));
        }
        return out;
    }

    // Group the cells into coordinate-permutation orbits; each orbit member is
    // one distinct permutation of the representative, so summing the pairing
    // over members and scaling by n/|orbit| gives the symmetrized pairing
    // already divided by (n-1)!.
    std::map<QVector, std::vector<const ZeroCell*>> buckets;
    for (const ZeroCell& c : cells)
        buckets[sorted_descending(c.point.entries())].push_back(&c);

    const std::vector<CurveShape> shapes = curve_shapes(n);
    for (const auto& [rep, members] : buckets) {
        ConeGeneratorEntry e{WeightVector(rep), static_cast<long long>(members.size()), false,
                             {}, {}};
        for (const Rational& v : rep)
            if (v == Rational(1))
                e.degenerate = true;

        e.symmetric_vector.n = n;
        const Rational scale = Rational(n) / Rational(e.orbit_size);
        for (const CurveShape& s : shapes) {
            const CurveClass curve = interval_curve(s, n);
            Rational total(0);
            for (const ZeroCell* c : members)
                total += intersect(c->point, curve);
            e.symmetric_vector.values[s] = scale * total;
        }
        if (e.degenerate)
            for (const auto& [s, v] : e.symmetric_vector.values)
                if (!v.is_zero())
                    throw std::logic_error(
                        "degenerate 0-cell orbit with a nonvanishing symmetrized vector");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const ConeGeneratorEntry& a, const ConeGeneratorEntry& b) {
        return b.representative.entries() < a.representative.entries();
    });
    return out;
}

}  // namespace gitnef
