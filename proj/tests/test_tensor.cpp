#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qpart/tensor.hpp"

using namespace qpart;

namespace {

const LaurentPoly q = LaurentPoly::q();

MultiIndex mi(std::vector<int> e, int n)
{
    return MultiIndex(std::move(e), n);
}

}  // namespace

TEST_CASE("colored set partition of a basis tensor")
{
    const auto j = mi({3, 6, 3, 1, 1, 3, 1, 3}, 7);
    const auto p = colored_partition(j);
    CHECK(p.blocks == SetPartition{{1, 3, 6, 8}, {2}, {4, 5, 7}});
    CHECK(p.colors == std::vector<int>{3, 6, 1});
    CHECK(first(j, 2) == 0);
    CHECK(first(j, 4) == 0);
    CHECK(first(j, 5) == 0);
    CHECK(first(j, 7) == 0);
    CHECK(first(j, 1) == 4);
    CHECK(first(j, 3) == 1);
    CHECK(first(j, 6) == 2);
    CHECK(multi_index_of(p, 7) == j);

    const auto s = tableau_of(j, 7);
    CHECK(s.rows() == std::vector<std::vector<int>>{{2, 4, 5, 7}, {3}, {6}, {1}});
    CHECK(s.shape() == Composition::hook(7, 3));
}

TEST_CASE("round trip between multi-indices and colored partitions")
{
    for (const auto& w : oracle::words(3, 4)) {
        const auto j = mi(w, 3);
        CHECK(multi_index_of(colored_partition(j), 3) == j);
    }
}

TEST_CASE("generator action cases")
{
    // neither letter occurs: q x
    CHECK(act_gen(2, TensorVector::basis(mi({1, 1}, 3), 3)) == TensorVector::basis(mi({1, 1}, 3), 3, q));
    // first(i) < first(i+1) with n = 2, r = 1: only letter 2 occurs
    CHECK(act_gen(1, TensorVector::basis(mi({2}, 2), 2)) == TensorVector::basis(mi({1}, 2), 2));
    // otherwise q y + (q - 1) x
    TensorVector expected(2, 1);
    expected.add_term(mi({2}, 2), q);
    expected.add_term(mi({1}, 2), q - 1);
    CHECK(act_gen(1, TensorVector::basis(mi({1}, 2), 2)) == expected);
    CHECK(expected.to_string() == "(q - 1)*e(1) + (q)*e(2)");
    CHECK_THROWS_AS(act_gen(2, TensorVector::basis(mi({1}, 2), 2)), GeneratorOutOfRange);
    CHECK_THROWS_AS(mi({0, 1}, 2), std::invalid_argument);
}

TEST_CASE("relations hold exactly")
{
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto report = verify_relations(n, r);
            CHECK(report.ok);
            CHECK_FALSE(report.counterexample.has_value());
        }
}

TEST_CASE("q = 1 gives the letter permutation matrices")
{
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            const TensorSpace space(n, r);
            const auto ws = oracle::words(n, r);
            for (int i = 1; i < n; ++i) {
                const auto m = specialize(generator_matrix(space, i), 1).to_dense();
                for (std::size_t c = 0; c < ws.size(); ++c) {
                    auto image = ws[c];
                    for (auto& letter : image)
                        letter = letter == i ? i + 1 : letter == i + 1 ? i : letter;
                    const auto target = static_cast<std::size_t>(
                        std::find(ws.begin(), ws.end(), image) - ws.begin());
                    for (std::size_t row = 0; row < ws.size(); ++row)
                        CHECK(m(row, c) == (row == target ? 1 : 0));
                }
            }
        }
}

TEST_CASE("lexicographic indexing")
{
    const TensorSpace space(3, 2);
    const auto ws = oracle::words(3, 2);
    for (std::size_t k = 0; k < ws.size(); ++k) {
        CHECK(space.multi_index(k).entries() == ws[k]);
        CHECK(space.index_of(mi(ws[k], 3)) == k);
    }
    CHECK_THROWS_AS(TensorSpace(20, 10), DimensionLimitExceeded);
    CHECK_FALSE(checked_power(20, 10, 4096).has_value());
    CHECK(checked_power(4, 6, 4096).value() == 4096);
}

TEST_CASE("orbit census")
{
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r) {
            const auto found = orbits(n, r);
            const auto brute = oracle::letter_orbits(n, r);
            CHECK(found.size() == brute.size());
            Natural total = 0;
            for (const auto& o : found)
                total += o.size;
            Natural nr = 1;
            for (int t = 0; t < r; ++t)
                nr *= n;
            CHECK(total == nr);
            // every orbit's partition is the partition of each of its members
            for (const auto& b : brute) {
                const auto part = colored_partition(mi(*b.begin(), n)).blocks;
                bool found_it = false;
                for (const auto& o : found)
                    if (o.partition == part) {
                        found_it = true;
                        CHECK(o.size == Natural(static_cast<unsigned long>(b.size())));
                    }
                CHECK(found_it);
                for (const auto& w : b)
                    CHECK(colored_partition(mi(w, n)).blocks == part);
            }
        }
}

TEST_CASE("set partitions in restricted growth order")
{
    const auto parts = set_partitions(3, 3);
    REQUIRE(parts.size() == 5);
    CHECK(parts.front() == SetPartition{{1, 2, 3}});
    CHECK(parts.back() == SetPartition{{1}, {2}, {3}});
    CHECK(set_partitions(4, 2).size() == 8);
}

TEST_CASE("orbit isomorphisms")
{
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 4}})
        for (const auto& o : orbits(n, r)) {
            const auto iso = orbit_iso(n, r, o.partition);
            CHECK(iso.equivariant);
            CHECK(Natural(static_cast<unsigned long>(iso.pairs.size())) == o.size);
            CHECK(iso.shape == Composition::hook(n, static_cast<int>(o.partition.size())));
        }
}

TEST_CASE("Hecke element action is a module action")
{
    std::mt19937_64 rng(5);
    const int n = 3;
    const int r = 2;
    const TensorSpace space(n, r);
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        HeckeElement a(n);
        HeckeElement b(n);
        a.add_term(perms[pick(rng)], oracle::random_poly(rng));
        b.add_term(perms[pick(rng)], oracle::random_poly(rng));
        b.add_term(perms[pick(rng)], oracle::random_poly(rng));
        const auto v = TensorVector::basis(space.multi_index(trial % space.dim()), n);
        CHECK(act(a * b, v) == act(a, act(b, v)));
    }
    CHECK_THROWS_AS(act(HeckeElement::one(2), TensorVector::basis(mi({1}, 3), 3)), RankMismatch);
}

TEST_CASE("generator matrices are invertible with the expected inverse")
{
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}}) {
        const TensorSpace space(n, r);
        for (int i = 1; i < n; ++i) {
            const auto a = generator_matrix(space, i).to_dense();
            const auto inv_h = inverse_t_w(Permutation::simple(n, i));
            Matrix<LaurentPoly> inv(space.dim(), space.dim());
            for (std::size_t c = 0; c < space.dim(); ++c) {
                const auto image = act(inv_h, TensorVector::basis(space.multi_index(c), n));
                for (const auto& [j, coeff] : image.terms())
                    inv(space.index_of(j), c) = coeff;
            }
            CHECK(a * inv == Matrix<LaurentPoly>::identity(space.dim()));
        }
    }
}

TEST_CASE("action preserves orbit spans")
{
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {2, 4}}) {
        const TensorSpace space(n, r);
        for (int i = 1; i < n; ++i) {
            const auto m = generator_matrix(space, i);
            for (std::size_t c = 0; c < m.dim; ++c)
                for (const auto& [row, v] : m.columns[c])
                    CHECK(colored_partition(space.multi_index(row)).blocks
                          == colored_partition(space.multi_index(c)).blocks);
        }
    }
}

TEST_CASE("relations for n + r <= 8")
{
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; n + r <= 8; ++r)
            CHECK(verify_relations(n, r).ok);
}

TEST_CASE("action examples at q = 1")
{
    const int n = 3;
    const auto j = mi({1, 2, 1}, n);
    CHECK(act(HeckeElement::one(n), TensorVector::basis(j, n)) == TensorVector::basis(j, n));
    // x_(n) at q = 1 sums the orbit, each element |stabilizer| times
    const auto image = act(x_lambda(Composition({n})), TensorVector::basis(j, n));
    std::map<std::vector<int>, int> expected;
    for (const auto& g : oracle::permutations(n)) {
        std::vector<int> w;
        for (int letter : j.entries())
            w.push_back(g[static_cast<std::size_t>(letter - 1)]);
        ++expected[w];
    }
    CHECK(image.terms().size() == expected.size());
    for (const auto& [idx, c] : image.terms())
        CHECK(c.eval(1) == expected.at(idx.entries()));
    // T_w at q = 1 permutes letters
    for (const auto& w : all_permutations(n)) {
        const auto v = act(t_w(w), TensorVector::basis(j, n));
        REQUIRE(v.terms().size() >= 1);
        for (const auto& [idx, c] : v.terms())
            if (c.eval(1) != 0)
                CHECK(idx == j.permute_letters(w));
    }
    CHECK(orbits(2, 3).size() == 4);
}
