#include "gitnef/capture.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gitnef {

namespace {

std::vector<bool> subset_flags(int n, const std::vector<int>& subset, const char* who) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int i : subset) {
        if (i < 1 || i > n)
            throw std::invalid_argument(std::string(who) + ": index out of range");
        if (in[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument(std::string(who) + ": repeated index");
        in[static_cast<std::size_t>(i - 1)] = true;
    }
    return in;
}

}  // namespace

WeightedHypersimplex::WeightedHypersimplex(std::vector<Rational> beta) : beta_(std::move(beta)) {
    if (beta_.empty())
        throw std::invalid_argument("WeightedHypersimplex: empty cap vector");
    Rational total(0);
    for (const Rational& b : beta_) {
        if (b.sign() <= 0 || Rational(1) < b)
            throw std::invalid_argument("WeightedHypersimplex: caps must lie in (0, 1]");
        total += b;
    }
    if (total < Rational(2))
        throw std::invalid_argument("WeightedHypersimplex: caps sum below the total weight 2");
}

WeightedHypersimplex WeightedHypersimplex::uniform(int n, int k) {
    if (k < 1)
        throw std::invalid_argument("WeightedHypersimplex: k must be positive");
    return WeightedHypersimplex(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, k)));
}

bool WeightedHypersimplex::contains(const WeightVector& x) const {
    if (x.n() != n())
        return false;
    for (int i = 0; i < n(); ++i)
        if (beta_[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i)])
            return false;
    return true;
}

Rational WeightedHypersimplex::min_mass(const std::vector<int>& subset) const {
    const std::vector<bool> in = subset_flags(n(), subset, "min_mass");
    Rational outside_cap(0);
    for (int i = 0; i < n(); ++i)
        if (!in[static_cast<std::size_t>(i)])
            outside_cap += beta_[static_cast<std::size_t>(i)];
    const Rational leftover = Rational(2) - outside_cap;
    return leftover.sign() > 0 ? leftover : Rational(0);
}

Rational WeightedHypersimplex::max_mass(const std::vector<int>& subset) const {
    const std::vector<bool> in = subset_flags(n(), subset, "max_mass");
    Rational inside_cap(0);
    for (int i = 0; i < n(); ++i)
        if (in[static_cast<std::size_t>(i)])
            inside_cap += beta_[static_cast<std::size_t>(i)];
    return inside_cap < Rational(2) ? inside_cap : Rational(2);
}

BlockPartition::BlockPartition(std::vector<std::vector<int>> blocks, int n)
    : blocks_(std::move(blocks)), n_(n) {
    if (blocks_.size() < 3)
        throw std::invalid_argument("BlockPartition: need at least three blocks");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t covered = 0;
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("BlockPartition: empty block");
        for (int i : block) {
            if (i < 1 || i > n)
                throw std::invalid_argument("BlockPartition: index out of range");
            if (seen[static_cast<std::size_t>(i - 1)])
                throw std::invalid_argument("BlockPartition: repeated index");
            seen[static_cast<std::size_t>(i - 1)] = true;
            ++covered;
        }
        std::sort(block.begin(), block.end());
    }
    if (covered != static_cast<std::size_t>(n))
        throw std::invalid_argument("BlockPartition: blocks do not cover 1..n");
}

std::string BlockPartition::str() const {
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            out += " | ";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out;
}

BlockPartition BlockPartition::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks(1);
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "|") {
            blocks.emplace_back();
            continue;
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("BlockPartition: bad token '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("BlockPartition: bad token '" + token + "'");
        blocks.back().push_back(value);
    }
    return BlockPartition(std::move(blocks), n);
}

WidthReduction reduce_width(const WeightVector& x, const BlockPartition& partition) {
    if (x.n() != partition.n())
        throw std::invalid_argument("reduce_width: weight and partition sizes differ");
    const std::size_t w = partition.width();
    const Rational one(1);

    std::vector<Rational> sums(w, Rational(0));
    for (std::size_t b = 0; b < w; ++b)
        for (int i : partition.blocks()[b])
            sums[b] += x[static_cast<std::size_t>(i - 1)];
    for (const Rational& s : sums)
        if (one <= s)
            throw std::domain_error("reduce_width: a block already weighs one or more");

    WidthReduction red;
    red.order.resize(w);
    std::iota(red.order.begin(), red.order.end(), std::size_t{0});
    std::stable_sort(red.order.begin(), red.order.end(),
                     [&](std::size_t a, std::size_t b) { return sums[b] < sums[a]; });

    // Tail weights of the sorted blocks; the first drop below one marks j2.
    std::vector<Rational> tail(w + 1, Rational(0));
    for (std::size_t p = w; p-- > 0;)
        tail[p] = tail[p + 1] + sums[red.order[p]];
    std::size_t j2 = 0;
    for (std::size_t p = 1; p < w; ++p) {
        if (tail[p] < one && one <= tail[p - 1]) {
            j2 = p + 1;  // 1-based position
            break;
        }
    }
    if (j2 == 0)
        throw std::domain_error("reduce_width: no tail crossing below weight one");

    // Run weights inside positions 1..j2-1, measured down to j2-1.
    std::vector<Rational> run(j2, Rational(0));  // run[p] = weight of positions p+1 .. j2-1
    for (std::size_t p = j2 - 1; p-- > 0;)
        run[p] = run[p + 1] + sums[red.order[p]];
    std::size_t j1 = 0;
    for (std::size_t p = 1; p < j2 - 1; ++p) {
        if (run[p] < one && one <= run[p - 1]) {
            j1 = p + 1;
            break;
        }
    }
    if (j1 == 0)
        throw std::domain_error("reduce_width: no run crossing below weight one");

    red.j1 = j1;
    red.j2 = j2;
    for (std::size_t p = 0; p < w; ++p) {
        const std::size_t g = (p + 1 < j1) ? 0 : (p + 1 < j2 ? 1 : 2);
        const auto& block = partition.blocks()[red.order[p]];
        red.groups[g].insert(red.groups[g].end(), block.begin(), block.end());
        red.sums[g] += sums[red.order[p]];
    }
    for (auto& g : red.groups) std::sort(g.begin(), g.end());
    for (const Rational& s : red.sums)
        if (one <= s)
            throw std::domain_error(
                "reduce_width: merged group reached weight one; the input sits on a wall");
    return red;
}

std::string triple_str(const TripleShape& s) {
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) +
           ")";
}

std::vector<TripleShape> triple_shapes(int n) {
    if (n < 3)
        throw std::invalid_argument("triple_shapes: need n >= 3");
    std::vector<TripleShape> shapes;
    for (int n1 = n - 2; n1 >= 1; --n1)
        for (int n2 = std::min(n1, n - n1 - 1); n2 >= 1; --n2) {
            const int n3 = n - n1 - n2;
            if (n3 < 1 || n3 > n2)
                continue;
            shapes.push_back(TripleShape{n1, n2, n3});
        }
    std::sort(shapes.begin(), shapes.end(),
              [](const TripleShape& a, const TripleShape& b) { return b < a; });
    return shapes;
}

bool is_candidate_shape(const TripleShape& s, int k) {
    if (s[0] < s[1] || s[1] < s[2] || s[2] < 1)
        throw std::invalid_argument("is_candidate_shape: shape must be descending and positive");
    if (k < 1)
        throw std::invalid_argument("is_candidate_shape: k must be positive");
    return s[1] + s[2] > k;
}

CaptureWitness capture_witness(int n, int k, const TripleShape& shape) {
    if (shape[0] + shape[1] + shape[2] != n)
        throw std::invalid_argument("capture_witness: shape does not sum to n");
    if (!is_candidate_shape(shape, k))
        throw std::domain_error("capture_witness: wall misses the open box, nothing to witness");

    const int n3 = shape[2];
    const int t = n3 >= k ? n - 1 - n3 : n - k;
    const Rational a(1, t);
    const int odd_position = shape[0] + shape[1] + 1;  // first slot of the third block
    WeightVector point = special_weight(a, odd_position, n);

    std::array<Rational, 3> block_sums{Rational(0), Rational(0), Rational(0)};
    int next = 0;
    for (std::size_t b = 0; b < 3; ++b)
        for (int c = 0; c < shape[b]; ++c)
            block_sums[b] += point[static_cast<std::size_t>(next++)];

    const Rational one(1);
    bool in_interior = true;
    for (const Rational& s : block_sums)
        if (one <= s)
            in_interior = false;
    const bool in_beta_box = WeightedHypersimplex::uniform(n, k).contains(point);

    return CaptureWitness{shape,      a,           t,           odd_position,
                          std::move(point), block_sums, in_interior, in_beta_box};
}

AmplenessCertificate ampleness_certificate(int n, int k) {
    if (n < 6)
        throw std::invalid_argument("ampleness_certificate: need n >= 6");
    if (k < 2 || k > n / 2 - 1)
        throw std::invalid_argument("ampleness_certificate: need 2 <= k <= floor(n/2)-1");

    AmplenessCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.complete = true;
    for (const TripleShape& s : triple_shapes(n)) {
        if (!is_candidate_shape(s, k)) {
            cert.skipped.push_back(s);
            continue;
        }
        CaptureWitness w = capture_witness(n, k, s);
        if (w.t < n / 2 || w.t > n - k)
            throw std::logic_error("ampleness_certificate: witness denominator " +
                                   std::to_string(w.t) + " escaped [floor(n/2), n-k]");
        if (!w.in_interior)
            cert.complete = false;
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

}  // namespace gitnef
