#include "qpart/glq.hpp"

#include <algorithm>
#include <vector>

namespace qpart {

LaurentPoly q_integer(int m)
{
    LaurentPoly out;
    for (int e = 0; e < m; ++e)
        out += LaurentPoly::q_pow(e);
    return out;
}

LaurentPoly q_factorial(int m)
{
    LaurentPoly out = 1;
    for (int k = 2; k <= m; ++k)
        out *= q_integer(k);
    return out;
}

LaurentPoly gaussian_binomial(int m, int j)
{
    if (j < 0 || j > m)
        return {};
    // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j].
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int i = 1; i <= m; ++i) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(i) + 1);
        next[0] = 1;
        next[static_cast<std::size_t>(i)] = 1;
        for (int t = 1; t < i; ++t)
            next[static_cast<std::size_t>(t)] = row[static_cast<std::size_t>(t - 1)]
                                                + row[static_cast<std::size_t>(t)].shifted(t);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

LaurentPoly gaussian_multinomial(const Composition& lambda)
{
    LaurentPoly out = 1;
    int filled = 0;
    for (int p : lambda.parts()) {
        filled += p;
        out *= gaussian_binomial(filled, p);
    }
    return out;
}

LaurentPoly tq_dimension(int n, int r)
{
    LaurentPoly out;
    for (int k = 1; k <= std::min(n, r); ++k) {
        LaurentPoly term = gaussian_multinomial(Composition::hook(n, k));
        out.add_scaled(term, Rational(stirling2(r, k)));
    }
    return out;
}

}  // namespace qpart
