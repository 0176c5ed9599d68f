// End-to-end acceptance run: one PASS/FAIL line per criterion. All
// comparisons are exact (rational or integer equality, tolerance 0).

#include "oracles.hpp"
#include "qpart/centralizer.hpp"
#include "qpart/glq.hpp"
#include "qpart/qperm.hpp"
#include "qpart/tensor.hpp"

#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qpart;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << "first failure: " << what;
        }
    }
};

Natural power(int n, int r)
{
    Natural out = 1;
    for (int t = 0; t < r; ++t)
        out *= n;
    return out;
}

std::string case_name(int n, int r)
{
    return "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

std::vector<std::pair<int, int>> relation_range()
{
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 4; ++r)
            if (power(n, r) <= 1024)
                out.emplace_back(n, r);
    return out;
}

void relation_suite(Outcome& o)
{
    std::size_t checks = 0;
    for (const auto& [n, r] : relation_range()) {
        const auto report = verify_relations(n, r);
        checks += report.checks;
        o.require(report.ok, case_name(n, r) + " " + report.counterexample.value_or(""));
    }
    if (o.pass)
        o.detail << relation_range().size() << " cases, " << checks << " relation checks, zero residual";
}

void classical_limit_matrices(Outcome& o)
{
    std::size_t mats = 0;
    for (const auto& [n, r] : relation_range()) {
        const TensorSpace space(n, r, 1024);
        const auto ws = oracle::words(n, r);
        std::map<std::vector<int>, std::size_t> pos;
        for (std::size_t k = 0; k < ws.size(); ++k)
            pos[ws[k]] = k;
        for (int i = 1; i < n; ++i) {
            const auto m = specialize(generator_matrix(space, i), 1);
            Matrix<Rational> expected(ws.size(), ws.size());
            for (std::size_t c = 0; c < ws.size(); ++c) {
                auto image = ws[c];
                for (auto& letter : image)
                    letter = letter == i ? i + 1 : letter == i + 1 ? i : letter;
                expected(pos.at(image), c) = 1;
            }
            o.require(m.to_dense() == expected, case_name(n, r) + " T_" + std::to_string(i));
            ++mats;
        }
    }
    if (o.pass)
        o.detail << mats << " generator matrices equal the letter permutation matrices at q=1";
}

void orbit_census(Outcome& o)
{
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= 6; ++r) {
            const auto found = orbits(n, r);
            Natural stirling_sum = 0;
            for (int k = 1; k <= std::min(n, r); ++k)
                stirling_sum += stirling2(r, k);
            // independent count: relabel letters in order of first occurrence
            std::set<std::vector<int>> patterns;
            for (const auto& w : oracle::words(n, r)) {
                std::map<int, int> relabel;
                std::vector<int> p;
                for (int letter : w)
                    p.push_back(relabel.emplace(letter, static_cast<int>(relabel.size())).first->second);
                patterns.insert(p);
            }
            Natural total = 0;
            for (const auto& orb : found)
                total += orb.size;
            const Natural count(static_cast<unsigned long>(found.size()));
            o.require(count == stirling_sum, case_name(n, r) + " orbit count vs Stirling sum");
            o.require(count == Natural(static_cast<unsigned long>(patterns.size())), case_name(n, r) + " brute force");
            o.require(total == power(n, r), case_name(n, r) + " orbit sizes");
        }
    if (o.pass)
        o.detail << "n,r <= 6: orbit counts = sum s(r,k) = brute force, sizes sum to n^r";
}

void decomposition(Outcome& o)
{
    std::size_t count = 0;
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 4}})
        for (const auto& orb : orbits(n, r)) {
            const auto iso = orbit_iso(n, r, orb.partition);
            o.require(iso.equivariant, case_name(n, r) + " orbit of shape " + iso.shape.to_string());
            o.require(Natural(static_cast<unsigned long>(iso.pairs.size())) == orb.size, "orbit size");
            ++count;
        }
    if (o.pass)
        o.detail << count << " orbit correspondences intertwine the actions exactly";
}

void indres(Outcome& o)
{
    std::size_t runs = 0;
    for (int n = 1; n <= 13; ++n)
        for (int r = 1; r <= std::min(n, 12); ++r) {
            MultiplicityVector m{{0, 1}};
            for (int step = 0; step < r; ++step)
                m = indres_step(m, n);
            MultiplicityVector expected;
            for (int k = 1; k <= r; ++k)
                expected[k] = stirling2(r, k);
            o.require(m == expected, "Ind Res at " + case_name(n, r));
            MultiplicityVector expected_res;
            for (int k = 1; k <= std::min(n, r + 1); ++k)
                expected_res[k] = stirling2(r + 1, k);
            o.require(restrict_multiplicities(m, n) == expected_res, "Res at " + case_name(n, r));
            ++runs;
        }
    if (o.pass)
        o.detail << runs << " (n,r) pairs with r <= 12, n >= r: multiplicities s(r,k), restricted s(r+1,k)";
}

void dimension_identity(Outcome& o)
{
    std::size_t cases = 0;
    std::size_t dim22 = 0;
    std::size_t dim42 = 0;
    for (int n = 1; n <= 256; ++n)
        for (int r = 1; r <= 8; ++r) {
            if (power(n, r) > 256)
                break;
            const auto result = commutant_basis(n, r);
            o.require(result.specializations.size() == 3 && result.agree, case_name(n, r) + " cross-agreement");
            o.require(Natural(static_cast<unsigned long>(result.dim())) == qpartition_dim(n, r),
                      case_name(n, r) + " commutant dim " + std::to_string(result.dim()));
            if (n == 2 && r == 2)
                dim22 = result.dim();
            if (n == 4 && r == 2)
                dim42 = result.dim();
            ++cases;
        }
    o.require(dim42 == 15, "dim at (4,2)");
    o.require(dim22 == 8, "dim at (2,2)");
    if (o.pass)
        o.detail << cases << " cases with n^r <= 256 at q0 in {2, 3, 7/5}; (4,2) -> 15, (2,2) -> 8";
}

void classical_dims(Outcome& o)
{
    o.require(qpartition_dim(4, 2) == 15 && bell(4) == 15, "qpartition_dim(4,2) = B(4)");
    o.require(half_qpartition_dim(5, 2) == 52 && bell(5) == 52, "half_qpartition_dim(5,2) = B(5)");
    o.require(commutant_basis(4, 2).dim() == 15, "commutant at (4,2)");
    o.require(half_commutant_basis(5, 2).dim() == 52, "half commutant at (5,2)");
    if (o.pass)
        o.detail << "(4,2): 15 = B(4); (5, 2+1/2): 52 = B(5), formula and brute force";
}

void schur_weyl(Outcome& o)
{
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}})
        for (const auto& q0 : {Rational(1), Rational(2), Rational(7, 5)}) {
            const auto report = double_centralizer_check(n, r, q0);
            o.require(report.pass, case_name(n, r) + " at q=" + q0.get_str());
            if (o.pass)
                o.detail << case_name(n, r) << "@" << q0.get_str() << ":" << report.image_dim << " ";
        }
    if (o.pass)
        o.detail << "(bicommutant dim = dim span T_w)";
}

void hom_bases(Outcome& o)
{
    std::size_t pairs = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                const auto mu = Composition::hook(n, k);
                const auto lambda = Composition::hook(n, l);
                const QPermModule src(mu);
                const QPermModule dst(lambda);
                const auto reps = double_coset_reps(mu, lambda);
                o.require(reps.size() == oracle::margin_matrices(mu.parts(), lambda.parts()),
                          "count " + mu.to_string() + " " + lambda.to_string());
                std::vector<std::vector<Rational>> flat;
                for (const auto& d : reps) {
                    const auto hom = phi_d(mu, lambda, d);
                    for (int i = 1; i < n; ++i)
                        o.require(hom.matrix * src.generator_matrix(i) == dst.generator_matrix(i) * hom.matrix,
                                  "equivariance " + mu.to_string() + " " + lambda.to_string());
                    std::vector<Rational> v;
                    for (const auto& c : hom.matrix.data())
                        v.push_back(c.eval(Rational(2)));
                    flat.push_back(std::move(v));
                }
                o.require(rank_of(flat) == reps.size(), "independence " + mu.to_string() + " " + lambda.to_string());
                ++pairs;
            }
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            o.require(double_coset_reps(Composition::hook(n, k), Composition::hook(n, 1)).size()
                          == static_cast<std::size_t>(k + 1),
                      "|D| = k+1 at n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (o.pass)
        o.detail << pairs << " hook pairs: phi_d equivariant, independent, count = margin matrices; |D| = k+1";
}

void gl_side(Outcome& o)
{
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= 6; ++r)
            o.require(tq_dimension(n, r).eval(1) == Rational(power(n, r)), "tq_dimension " + case_name(n, r));
    if (o.pass)
        o.detail << "tq_dimension(n,r)(1) = n^r for n,r <= 6";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"relation suite", relation_suite},
        {"q=1 degeneration", classical_limit_matrices},
        {"orbit census", orbit_census},
        {"decomposition isomorphism", decomposition},
        {"Ind-Res multiplicities", indres},
        {"dimension identity", dimension_identity},
        {"classical limit", classical_dims},
        {"Schur-Weyl duality", schur_weyl},
        {"Hom bases", hom_bases},
        {"GL side", gl_side},
    };
    bool all = true;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[c].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << "criterion " << c + 1 << " [" << criteria[c].first << "]: " << (o.pass ? "PASS" : "FAIL")
                  << " - " << o.detail.str() << " (" << std::fixed << std::setprecision(2) << secs << "s)"
                  << std::endl;
    }
    return all ? 0 : 1;
}
