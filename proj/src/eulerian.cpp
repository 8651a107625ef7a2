#include "cbs/eulerian.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "cbs/combinatorics.hpp"
#include "cbs/errors.hpp"
#include "cbs/series.hpp"

namespace cbs {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = size();
    inverse_.assign(one_line_.size(), 0);
    for (int i = 0; i < n; ++i) {
        const int v = one_line_[static_cast<std::size_t>(i)];
        if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0)
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        inverse_[static_cast<std::size_t>(v - 1)] = i + 1;
    }
}

Permutation::Permutation(std::vector<int> one_line, Trusted) : one_line_(std::move(one_line)) {
    inverse_.resize(one_line_.size());
    for (std::size_t i = 0; i < one_line_.size(); ++i)
        inverse_[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(one_line_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = at(v)) {
            seen[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

void for_each_permutation(int n, int cap, const std::function<void(const Permutation&)>& visit) {
    if (n < 0) throw std::domain_error("permutation length must be non-negative");
    if (n > cap)
        throw SizeError("enumeration of S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap),
                        static_cast<std::uint64_t>(cap));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v, Permutation::Trusted{}));
    } while (std::next_permutation(v.begin(), v.end()));
}

int exc(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) > i) ++count;
    return count;
}

int cyc(const Permutation& p) {
    int count = 0;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    for (int start = 1; start <= p.size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++count;
        for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = p.at(v)) seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return count;
}

BigInt eulerian_number(int n, int k) {
    if (n < 1) throw std::domain_error("eulerian_number: n must be positive");
    if (k < 0 || k >= n) return 0;
    // A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1)
    std::vector<BigInt> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            BigInt v = 0;
            if (j < m - 1) v += (j + 1) * row[static_cast<std::size_t>(j)];
            if (j >= 1) v += (m - j) * row[static_cast<std::size_t>(j - 1)];
            next[static_cast<std::size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

namespace {

// F_0, F_1, ... grown on demand; readers share, a grower takes the lock exclusively.
class BivariateTable {
   public:
    BiPoly get(int n) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        if (rows_.empty()) rows_.push_back(BiPoly::constant(Rat(1)));
        const BiPoly x = BiPoly::x();
        const BiPoly x_one_minus_x = x - x * x;
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            const long m = static_cast<long>(rows_.size()) - 1;
            const BiPoly& f = rows_.back();
            BiPoly next = x_one_minus_x * f.partial_x() + Rat(m) * (x * f) + BiPoly::y() * f;
            rows_.push_back(std::move(next));
        }
        return rows_[static_cast<std::size_t>(n)];
    }

   private:
    std::shared_mutex mutex_;
    std::vector<BiPoly> rows_;
};

BivariateTable& bivariate_table() {
    static BivariateTable table;
    return table;
}

}  // namespace

BiPoly f_bipoly(int n) {
    if (n < 0) throw std::domain_error("f_bipoly: n must be non-negative");
    return bivariate_table().get(n);
}

BiPoly f_bipoly_brute(int n, int cap) {
    if (n < 0) throw std::domain_error("f_bipoly_brute: n must be non-negative");
    // counts[e][c] = #{pi : exc = e, cyc = c}
    std::vector<std::vector<long>> counts(static_cast<std::size_t>(n) + 1,
                                          std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    for_each_permutation(n, cap, [&](const Permutation& p) {
        ++counts[static_cast<std::size_t>(exc(p))][static_cast<std::size_t>(cyc(p))];
    });
    std::vector<Poly> rows;
    rows.reserve(counts.size());
    for (const auto& row : counts) {
        std::vector<Rat> ys;
        ys.reserve(row.size());
        for (long c : row) ys.emplace_back(c);
        rows.emplace_back(std::move(ys));
    }
    return BiPoly(std::move(rows));
}

Poly f_at_y(int n, const Rat& y0) { return f_bipoly(n).substitute_y(y0); }

InversionSequence::InversionSequence(std::vector<int> entries, std::vector<int> bounds)
    : entries_(std::move(entries)), bounds_(std::move(bounds)) {
    if (entries_.size() != bounds_.size())
        throw std::invalid_argument("inversion sequence and bounds differ in length");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (bounds_[i] < 1) throw std::invalid_argument("inversion-sequence bounds must be positive");
        if (entries_[i] < 0 || entries_[i] >= bounds_[i])
            throw std::invalid_argument("entry e_" + std::to_string(i + 1) + " = " + std::to_string(entries_[i]) +
                                        " outside [0, " + std::to_string(bounds_[i]) + ")");
    }
}

namespace {

// e_i/s_i < e_{i+1}/s_{i+1} over entries/bounds with the zero sentinel in front.
int count_ascents(std::span<const int> entries, std::span<const int> bounds) {
    int count = 0;
    long prev_e = 0, prev_s = 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const long e = entries[i], s = bounds[i];
        if (prev_e * s < e * prev_s) ++count;
        prev_e = e;
        prev_s = s;
    }
    return count;
}

}  // namespace

int asc(const InversionSequence& e) { return count_ascents(e.entries(), e.bounds()); }

Poly s_eulerian(std::span<const int> bounds, std::uint64_t state_cap) {
    std::uint64_t states = 1;
    for (int s : bounds) {
        if (s < 1) throw std::invalid_argument("inversion-sequence bounds must be positive");
        states *= static_cast<std::uint64_t>(s);
        if (states > state_cap)
            throw SizeError("s-inversion enumeration exceeds the cap of " + std::to_string(state_cap) + " states",
                            state_cap);
    }
    std::vector<long> counts(bounds.size() + 1, 0);
    std::vector<int> e(bounds.size(), 0);
    while (true) {
        ++counts[static_cast<std::size_t>(count_ascents(e, bounds))];
        bool advanced = false;
        for (std::size_t i = e.size(); i-- > 0;) {
            if (++e[i] < bounds[i]) {
                advanced = true;
                break;
            }
            e[i] = 0;
        }
        if (!advanced) break;
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(counts.size());
    for (long c : counts) coeffs.emplace_back(c);
    return Poly(std::move(coeffs));
}

std::vector<int> one_over_k_bounds(int n, int k) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) out.push_back(i * k + 1);
    return out;
}

std::vector<Rat> bivariate_egf_coefficients(const Rat& x, const Rat& y, std::size_t order) {
    if (x == Rat(1)) throw std::domain_error("bivariate EGF needs x != 1");
    const Series denom = Series::exp_linear(x - Rat(1), order) - Series::one(order) * x;
    const Series base = denom.reciprocal() * (Rat(1) - x);
    const Series powered = base.pow(y);
    std::vector<Rat> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.push_back(powered[n] * Rat(factorial(static_cast<long>(n))));
    return out;
}

}  // namespace cbs
