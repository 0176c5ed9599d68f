#pragma once
// Brute-force reference computations used only by the tests. Nothing here
// calls into the library beyond basic value types.

#include "qpart/coeff.hpp"
#include "qpart/symcomb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using qpart::Natural;
using qpart::Rational;

inline std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// (a b)(i) = a(b(i)) on one-line vectors.
inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    return out;
}

/// Word length of every permutation by breadth first search in the Cayley
/// graph with simple transpositions as generators.
inline std::map<std::vector<int>, int> cayley_distances(int n)
{
    std::map<std::vector<int>, int> dist;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    std::queue<std::vector<int>> todo;
    dist[id] = 0;
    todo.push(id);
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop();
        for (int i = 0; i + 1 < n; ++i) {
            auto v = w;
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
            if (dist.emplace(v, dist[w] + 1).second)
                todo.push(v);
        }
    }
    return dist;
}

/// Block index of letter i (1-based) under composition parts.
inline int block(const std::vector<int>& parts, int i)
{
    int acc = 0;
    for (std::size_t b = 0; b < parts.size(); ++b) {
        acc += parts[b];
        if (i <= acc)
            return static_cast<int>(b);
    }
    return -1;
}

inline std::vector<std::vector<int>> young(const std::vector<int>& parts)
{
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<std::vector<int>> out;
    for (const auto& w : permutations(n)) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            ok = block(parts, i) == block(parts, w[static_cast<std::size_t>(i - 1)]);
        if (ok)
            out.push_back(w);
    }
    return out;
}

/// Double cosets Y_mu w Y_lambda as sets.
inline std::set<std::set<std::vector<int>>> double_cosets(const std::vector<int>& mu, const std::vector<int>& lambda)
{
    int n = std::accumulate(mu.begin(), mu.end(), 0);
    auto ym = young(mu);
    auto yl = young(lambda);
    std::set<std::set<std::vector<int>>> out;
    for (const auto& w : permutations(n)) {
        std::set<std::vector<int>> coset;
        for (const auto& a : ym)
            for (const auto& b : yl)
                coset.insert(compose(compose(a, w), b));
        out.insert(coset);
    }
    return out;
}

/// Nonnegative integer matrices with row sums mu and column sums lambda.
inline std::size_t margin_matrices(const std::vector<int>& mu, const std::vector<int>& lambda)
{
    std::size_t count = 0;
    std::vector<int> cols = lambda;
    std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t row, std::size_t col, int left) {
        if (row == mu.size()) {
            if (std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }))
                ++count;
            return;
        }
        if (col + 1 == cols.size()) {
            if (left <= cols[col]) {
                cols[col] -= left;
                fill(row + 1, 0, row + 1 < mu.size() ? mu[row + 1] : 0);
                cols[col] += left;
            }
            return;
        }
        for (int v = 0; v <= std::min(left, cols[col]); ++v) {
            cols[col] -= v;
            fill(row, col + 1, left - v);
            cols[col] += v;
        }
    };
    if (mu.empty())
        return lambda.empty() ? 1 : 0;
    fill(0, 0, mu[0]);
    return count;
}

/// Set partitions of {1..r} into exactly k blocks, by explicit enumeration of
/// all block assignments.
inline std::size_t count_set_partitions(int r, int k)
{
    std::size_t count = 0;
    std::vector<int> assign(static_cast<std::size_t>(r), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r) {
            std::set<int> used(assign.begin(), assign.end());
            if (static_cast<int>(used.size()) == k)
                ++count;
            return;
        }
        for (int b = 0; b < k; ++b) {
            assign[static_cast<std::size_t>(pos)] = b;
            rec(pos + 1);
        }
    };
    rec(0);
    // every partition into k blocks is counted k! times
    std::size_t fact = 1;
    for (int t = 2; t <= k; ++t)
        fact *= static_cast<std::size_t>(t);
    return r == 0 ? (k == 0 ? 1 : 0) : count / fact;
}

/// All multi-indices in {1..n}^r in lexicographic order.
inline std::vector<std::vector<int>> words(int n, int r)
{
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(r), 1);
    while (true) {
        out.push_back(w);
        int p = r - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == n)
            w[static_cast<std::size_t>(p--)] = 1;
        if (p < 0)
            break;
        ++w[static_cast<std::size_t>(p)];
    }
    return out;
}

/// Orbits of S_n on {1..n}^r found by closing under all letter permutations.
inline std::vector<std::set<std::vector<int>>> letter_orbits(int n, int r)
{
    std::vector<std::set<std::vector<int>>> out;
    std::set<std::vector<int>> seen;
    const auto perms = permutations(n);
    for (const auto& w : words(n, r)) {
        if (seen.count(w))
            continue;
        std::set<std::vector<int>> orbit;
        for (const auto& g : perms) {
            std::vector<int> image(w.size());
            for (std::size_t t = 0; t < w.size(); ++t)
                image[t] = g[static_cast<std::size_t>(w[t] - 1)];
            orbit.insert(image);
        }
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(orbit);
    }
    return out;
}

/// dim End_{S_n}(V^{(x)r}) at q = 1 by Burnside: the average number of fixed
/// points of g on {1..n}^{2r}.
inline Natural burnside_commutant(int n, int r)
{
    Natural total = 0;
    for (const auto& g : permutations(n)) {
        long fixed = 0;
        for (int i = 0; i < n; ++i)
            fixed += g[static_cast<std::size_t>(i)] == i + 1 ? 1 : 0;
        Natural p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(fixed), static_cast<unsigned long>(2 * r));
        total += p;
    }
    Natural fact = 1;
    for (int t = 2; t <= n; ++t)
        fact *= t;
    return total / fact;
}

/// Same count for the subgroup fixing the letter n (the half-integer case).
inline Natural burnside_half_commutant(int n, int r)
{
    Natural total = 0;
    std::size_t order = 0;
    for (const auto& g : permutations(n)) {
        if (g.back() != n)
            continue;
        ++order;
        long fixed = 0;
        for (int i = 0; i < n; ++i)
            fixed += g[static_cast<std::size_t>(i)] == i + 1 ? 1 : 0;
        Natural p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(fixed), static_cast<unsigned long>(2 * r));
        total += p;
    }
    return total / static_cast<unsigned long>(order);
}

/// Random Laurent polynomial with small coefficients.
inline qpart::LaurentPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    qpart::LaurentPoly p;
    const int terms = len(rng);
    for (int t = 0; t < terms; ++t)
        p.add_scaled(qpart::LaurentPoly::q_pow(expo(rng)), Rational(num(rng), den(rng)));
    return p;
}

}  // namespace oracle
