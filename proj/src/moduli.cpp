#include "gitnef/moduli.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gitnef {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

WeightVector::WeightVector(QVector entries) : entries_(std::move(entries)) {
    if (entries_.size() < 4)
        throw std::invalid_argument("WeightVector: need at least 4 entries");
    Rational sum;
    for (const auto& e : entries_) {
        if (e.sign() < 0 || e > Rational(1))
            throw std::invalid_argument("WeightVector: entries must lie in [0,1]");
        sum += e;
    }
    if (sum != Rational(2))
        throw std::invalid_argument("WeightVector: entries must sum to 2");
}

std::string WeightVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ',';
        out += entries_[i].str();
    }
    return out;
}

WeightVector WeightVector::parse(const std::string& text) {
    QVector entries;
    for (const auto& part : split(text, ','))
        entries.push_back(Rational::parse(trim(part)));
    return WeightVector(std::move(entries));
}

WeightVector special_weight(const Rational& a, int i, int n) {
    if (n < 4)
        throw std::domain_error("special_weight: n must be at least 4");
    if (i < 1 || i > n)
        throw std::domain_error("special_weight: index out of range");
    if (a < Rational(1, n - 1) || a > Rational(2, n - 1))
        throw std::domain_error("special_weight: a outside [1/(n-1), 2/(n-1)]");
    QVector entries(n, a);
    entries[i - 1] = special_weight_odd_entry(a, n);
    return WeightVector(std::move(entries));
}

Rational special_weight_odd_entry(const Rational& a, int n) {
    return Rational(2) - Rational(n - 1) * a;
}

CurveClass::CurveClass(std::array<std::vector<int>, 4> blocks, int n)
    : blocks_(std::move(blocks)), n_(n) {
    std::vector<bool> seen(n + 1, false);
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("CurveClass: empty block");
        std::sort(b.begin(), b.end());
        for (int idx : b) {
            if (idx < 1 || idx > n || seen[idx])
                throw std::invalid_argument("CurveClass: blocks must partition {1..n}");
            seen[idx] = true;
            ++total;
        }
    }
    if (total != n)
        throw std::invalid_argument("CurveClass: blocks must cover {1..n}");
}

std::array<int, 4> CurveClass::shape() const {
    std::array<int, 4> s{};
    for (int k = 0; k < 4; ++k)
        s[k] = static_cast<int>(blocks_[k].size());
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

std::string CurveClass::str() const {
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (k)
            out += " | ";
        for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(blocks_[k][j]);
        }
    }
    return out;
}

CurveClass CurveClass::parse(const std::string& text, int n) {
    auto parts = split(text, '|');
    if (parts.size() != 4)
        throw std::invalid_argument("CurveClass: expected four blocks separated by '|'");
    std::array<std::vector<int>, 4> blocks;
    for (int k = 0; k < 4; ++k) {
        std::istringstream in(parts[k]);
        int v;
        while (in >> v)
            blocks[k].push_back(v);
        if (!in.eof())
            throw std::invalid_argument("CurveClass: bad index");
    }
    return CurveClass(std::move(blocks), n);
}

bool CurveClass::same_class(const CurveClass& other) const {
    if (n_ != other.n_)
        return false;
    auto key = [](const std::array<std::vector<int>, 4>& bs) {
        std::array<std::vector<int>, 4> s = bs;
        std::sort(s.begin(), s.end());
        return s;
    };
    return key(blocks_) == key(other.blocks_);
}

std::string shape_str(const CurveShape& s) {
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (k)
            out += ',';
        out += std::to_string(s[k]);
    }
    return out;
}

CurveShape parse_shape(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 4)
        throw std::invalid_argument("CurveShape: expected four sizes");
    CurveShape s{};
    for (int k = 0; k < 4; ++k) {
        try {
            s[k] = std::stoi(trim(parts[k]));
        } catch (const std::exception&) {
            throw std::invalid_argument("CurveShape: bad size");
        }
    }
    for (int k = 0; k < 4; ++k) {
        if (s[k] < 1)
            throw std::invalid_argument("CurveShape: sizes must be positive");
    }
    if (!std::is_sorted(s.rbegin(), s.rend()))
        throw std::invalid_argument("CurveShape: sizes must be descending");
    return s;
}

int shape_sum(const CurveShape& s) { return s[0] + s[1] + s[2] + s[3]; }

std::vector<CurveShape> curve_shapes(int n) {
    if (n < 4)
        throw std::domain_error("curve_shapes: n must be at least 4");
    std::vector<CurveShape> out;
    for (int a = n - 3; a >= 1; --a) {
        for (int b = std::min(a, n - a - 2); b >= 1; --b) {
            for (int c = std::min(b, n - a - b - 1); c >= 1; --c) {
                int d = n - a - b - c;
                if (d >= 1 && d <= c)
                    out.push_back({a, b, c, d});
            }
        }
    }
    std::sort(out.begin(), out.end(), std::greater<CurveShape>());
    return out;
}

CurveClass interval_curve(const CurveShape& sizes, int n) {
    if (shape_sum(sizes) != n)
        throw std::invalid_argument("interval_curve: sizes must sum to n");
    std::array<std::vector<int>, 4> blocks;
    int next = 1;
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < sizes[k]; ++j)
            blocks[k].push_back(next++);
    }
    return CurveClass(std::move(blocks), n);
}

std::vector<CurveClass> basis_curves(int n) {
    if (n < 5)
        throw std::domain_error("basis_curves: n must be at least 5");
    const int f = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    std::vector<CurveClass> out;
    for (int i = 1; i <= f - 1; ++i) {
        const int s1 = (n % 2 == 0) ? f - 2 + i : f + i - 1;
        const int s2 = f - i;
        std::array<std::vector<int>, 4> blocks;
        int next = 1;
        const int sizes[4] = {s1, s2, 1, 1};
        for (int k = 0; k < 4; ++k) {
            for (int j = 0; j < sizes[k]; ++j)
                blocks[k].push_back(next++);
        }
        out.emplace_back(std::move(blocks), n);
    }
    return out;
}

SymmetricDivisor::SymmetricDivisor(int n, std::map<int, Rational> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    if (n_ < 4)
        throw std::invalid_argument("SymmetricDivisor: n must be at least 4");
    int half = n_ / 2;
    for (int j = 2; j <= half; ++j) {
        if (!coeffs_.count(j))
            throw std::invalid_argument("SymmetricDivisor: missing coefficient r" +
                                        std::to_string(j));
    }
    for (const auto& [j, _] : coeffs_) {
        if (j < 2 || j > half)
            throw std::invalid_argument("SymmetricDivisor: coefficient index out of range");
    }
}

Rational SymmetricDivisor::r(int j) const {
    if (j < 0 || j > n_)
        throw std::invalid_argument("SymmetricDivisor::r: index out of range");
    if (j > n_ / 2)
        j = n_ - j;
    if (j <= 1)
        return Rational(0);
    return coeffs_.at(j);
}

std::string SymmetricDivisor::str() const {
    std::string out;
    for (const auto& [j, v] : coeffs_) {
        if (!out.empty())
            out += ',';
        out += "r" + std::to_string(j) + "=" + v.str();
    }
    return out;
}

SymmetricDivisor SymmetricDivisor::parse(const std::string& text, int n) {
    std::map<int, Rational> coeffs;
    for (const auto& part : split(text, ',')) {
        auto p = trim(part);
        if (p.size() < 4 || p[0] != 'r')
            throw std::invalid_argument("SymmetricDivisor: expected rJ=value entries");
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("SymmetricDivisor: expected rJ=value entries");
        int j;
        try {
            j = std::stoi(p.substr(1, eq - 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("SymmetricDivisor: bad index");
        }
        if (coeffs.count(j))
            throw std::invalid_argument("SymmetricDivisor: duplicate coefficient");
        coeffs.emplace(j, Rational::parse(p.substr(eq + 1)));
    }
    return SymmetricDivisor(n, std::move(coeffs));
}

long long factorial_ll(int n) {
    if (n < 0 || n > 20)
        throw std::domain_error("factorial_ll: out of range");
    long long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

WeightOrbit orbit(const WeightVector& x) {
    const int n = x.n();
    if (n > 12)
        throw std::domain_error("orbit: n too large to enumerate");
    QVector sorted = x.entries();
    std::sort(sorted.begin(), sorted.end());
    WeightOrbit out;
    do {
        out.representatives.emplace_back(WeightVector(sorted));
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    out.multiplicity = factorial_ll(n) / static_cast<long long>(out.representatives.size());
    return out;
}

}  // namespace gitnef
