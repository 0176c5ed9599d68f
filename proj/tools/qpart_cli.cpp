// qpart: command-line front end for the q-partition algebra library.
//
//   qpart verify    --n 3 --r 2
//   qpart dims      --n 4 --r 2 [--half]
//   qpart act       --n 2 --r 1 --gen 1 --index 1
//   qpart commutant --n 2 --r 2 --q 7/5,3 [--symbolic] [--half] [--basis]
//   qpart glq-dims  --n 3 --r 2 [--at 2]
//   qpart export    --n 2 --r 2 --out action.json
//
// Exit codes: 0 pass, 1 check failed, 2 resource limit, 64 usage error.

#include "qpart/centralizer.hpp"
#include "qpart/glq.hpp"
#include "qpart/hecke.hpp"
#include "qpart/qperm.hpp"
#include "qpart/serialize.hpp"
#include "qpart/tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

using namespace qpart;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_limit = 2;
constexpr int exit_usage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 2;
    int r = 1;
    std::string q_text = "2,3,7/5";
    std::string format = "text";
    std::uint64_t limit = TensorSpace::default_limit;
    std::string out;
    std::uint64_t seed = 1;

    // per command
    bool half = false;
    bool symbolic = false;
    bool basis = false;
    int gen = 1;
    std::string index;
    std::string at;
};

std::vector<Rational> parse_q_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad q value: " + item);
        }
    }
    if (out.empty())
        throw UsageError("no q values given");
    return out;
}

MultiIndex parse_index(const std::string& text, int n, int r)
{
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed index: " + text);
        }
        if (used != item.size())
            throw UsageError("malformed index: " + text);
        entries.push_back(v);
    }
    if (static_cast<int>(entries.size()) != r)
        throw UsageError("index must have " + std::to_string(r) + " entries");
    try {
        return MultiIndex(entries, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

HeckeElement random_hecke(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(-1, 2);
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    HeckeElement h(n);
    for (int t = 0; t < 3; ++t)
        h.add_term(perms[pick(rng)], LaurentPoly::monomial(coeff(rng), expo(rng)));
    return h;
}

int cmd_verify(const RunConfig& cfg)
{
    if (!checked_power(cfg.n, cfg.r, cfg.limit))
        throw DimensionLimitExceeded(cfg.n, cfg.r, cfg.limit);
    std::vector<Check> checks;

    auto rel = verify_relations(cfg.n, cfg.r, cfg.limit);
    checks.push_back({"relations", rel.ok,
                      rel.counterexample.value_or(std::to_string(rel.checks) + " checks")});

    const auto orbs = orbits(cfg.n, cfg.r);
    std::vector<std::future<OrbitCorrespondence>> tasks;
    for (const auto& o : orbs)
        tasks.push_back(std::async(std::launch::async, [&cfg, &o] { return orbit_iso(cfg.n, cfg.r, o.partition); }));
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        auto iso = tasks[k].get();
        std::ostringstream name;
        name << "orbit " << k + 1 << " shape " << iso.shape.to_string();
        checks.push_back({name.str(), iso.equivariant, std::to_string(iso.pairs.size()) + " basis vectors"});
    }

    const LaurentPoly q = LaurentPoly::q();
    for (int k = 0; k <= std::min(cfg.n, cfg.r); ++k) {
        const Composition lambda = Composition::hook(cfg.n, k);
        const HeckeElement x = x_lambda(lambda);
        const HeckeElement y = y_lambda(lambda);
        bool ok = true;
        for (int i : lambda.young_generators()) {
            ok = ok && mul_gen_left(i, x) == x * q && mul_gen_right(x, i) == x * q;
            ok = ok && mul_gen_left(i, y) == y * LaurentPoly(-1) && mul_gen_right(y, i) == y * LaurentPoly(-1);
        }
        checks.push_back({"x/y " + lambda.to_string(), ok, "T_i x = q x, T_i y = -y"});
    }

    if (cfg.n >= 2) {
        std::mt19937_64 rng(cfg.seed);
        const TensorSpace space(cfg.n, cfg.r, cfg.limit);
        std::uniform_int_distribution<std::size_t> pick(0, space.dim() - 1);
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const HeckeElement a = random_hecke(cfg.n, rng);
            const HeckeElement b = random_hecke(cfg.n, rng);
            const TensorVector v = TensorVector::basis(space.multi_index(pick(rng)), cfg.n);
            ok = ok && act(a * b, v) == act(a, act(b, v));
        }
        checks.push_back({"module action", ok, "seed " + std::to_string(cfg.seed)});
    }

    bool all = true;
    for (const auto& c : checks)
        all = all && c.ok;

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"check", c.name}, {"pass", c.ok}, {"detail", c.detail}});
        os << json{{"n", cfg.n}, {"r", cfg.r}, {"pass", all}, {"checks", arr}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "check,pass,detail\n";
        for (const auto& c : checks)
            os << '"' << c.name << "\"," << (c.ok ? "true" : "false") << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : checks)
            os << (c.ok ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        os << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? exit_pass : exit_fail;
}

int cmd_dims(const RunConfig& cfg)
{
    struct Row {
        int r;
        Natural dim;
        std::optional<Natural> bell_value;
    };
    std::vector<Row> rows;
    bool all = true;
    for (int r = 1; r <= cfg.r; ++r) {
        Row row{r, cfg.half ? half_qpartition_dim(cfg.n, r) : qpartition_dim(cfg.n, r), std::nullopt};
        const int m = cfg.half ? 2 * r + 1 : 2 * r;
        if (cfg.n >= m) {
            row.bell_value = bell(m);
            all = all && *row.bell_value == row.dim;
        }
        rows.push_back(row);
    }

    Output out(cfg.out);
    auto& os = out.stream();
    const std::string label = cfg.half ? "half_qpartition_dim" : "qpartition_dim";
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json j = {{"n", cfg.n}, {"r", row.r}, {label, row.dim.get_str()}};
            if (row.bell_value) {
                j["bell"] = row.bell_value->get_str();
                j["match"] = *row.bell_value == row.dim;
            }
            arr.push_back(j);
        }
        os << arr.dump(2) << "\n";
    } else {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        os << "n" << sep << "r" << sep << label << sep << "bell" << sep << "match\n";
        for (const auto& row : rows) {
            os << cfg.n << sep << row.r << sep << row.dim.get_str() << sep;
            if (row.bell_value)
                os << row.bell_value->get_str() << sep << (*row.bell_value == row.dim ? "match" : "MISMATCH");
            else
                os << "-" << sep << "-";
            os << "\n";
        }
    }
    return all ? exit_pass : exit_fail;
}

int cmd_act(const RunConfig& cfg)
{
    if (cfg.gen < 1 || cfg.gen > cfg.n - 1)
        throw UsageError("generator must lie in 1.." + std::to_string(cfg.n - 1));
    const MultiIndex j = parse_index(cfg.index, cfg.n, cfg.r);
    const TensorVector v = act_gen(cfg.gen, TensorVector::basis(j, cfg.n));

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == "json") {
        os << json{{"n", cfg.n}, {"r", cfg.r}, {"generator", cfg.gen}, {"index", j}, {"image", v}}.dump(2)
           << "\n";
    } else if (cfg.format == "csv") {
        os << "index,coeff\n";
        for (const auto& [idx, c] : v.terms())
            os << '"' << idx.to_string() << "\",\"" << c.to_string() << "\"\n";
    } else {
        os << v.to_string() << "\n";
    }
    return exit_pass;
}

int cmd_commutant(const RunConfig& cfg)
{
    CommutantOptions options;
    options.q_values = parse_q_list(cfg.q_text);
    options.symbolic = cfg.symbolic;
    options.want_basis = cfg.basis;
    options.limit = cfg.limit;
    const auto result = cfg.half ? half_commutant_basis(cfg.n, cfg.r, options) : commutant_basis(cfg.n, cfg.r, options);
    const Natural expected = cfg.half ? half_qpartition_dim(cfg.n, cfg.r) : qpartition_dim(cfg.n, cfg.r);
    const bool match = result.agree && Natural(static_cast<unsigned long>(result.dim())) == expected;

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == "text") {
        for (const auto& s : result.specializations)
            os << "q = " << s.q0.get_str() << ": dim " << s.dim << "\n";
        if (result.symbolic_dim)
            os << "symbolic: dim " << *result.symbolic_dim << "\n";
        os << "formula: " << expected.get_str() << "\n";
        os << (match ? "agree" : "DISAGREE") << "\n";
    } else if (cfg.format == "csv") {
        os << "q,dim\n";
        for (const auto& s : result.specializations)
            os << s.q0.get_str() << "," << s.dim << "\n";
        if (result.symbolic_dim)
            os << "symbolic," << *result.symbolic_dim << "\n";
    } else {
        json j = commutant_json(result, cfg.basis);
        j["formula_dim"] = expected.get_str();
        os << j.dump(2) << "\n";
    }
    return match ? exit_pass : exit_fail;
}

int cmd_glq_dims(const RunConfig& cfg)
{
    std::optional<Rational> at;
    if (!cfg.at.empty()) {
        try {
            at = parse_rational(cfg.at);
        } catch (const std::invalid_argument&) {
            throw UsageError("bad --at value: " + cfg.at);
        }
    }
    const LaurentPoly total = tq_dimension(cfg.n, cfg.r);
    const bool ok = total.eval(1) == Rational(checked_power(cfg.n, cfg.r, UINT64_MAX).value_or(0));

    Output out(cfg.out);
    auto& os = out.stream();
    if (cfg.format == "json") {
        json terms = json::array();
        for (int k = 1; k <= std::min(cfg.n, cfg.r); ++k)
            terms.push_back({{"k", k},
                             {"stirling", stirling2(cfg.r, k).get_str()},
                             {"index", gaussian_multinomial(Composition::hook(cfg.n, k))}});
        json j = {{"n", cfg.n}, {"r", cfg.r}, {"dimension", total}, {"summands", terms}, {"q1_matches", ok}};
        if (at)
            j["value"] = total.eval(*at).get_str();
        os << j.dump(2) << "\n";
    } else {
        const char* sep = cfg.format == "csv" ? "," : "\t";
        os << "k" << sep << "s(r,k)" << sep << "[G:P]\n";
        for (int k = 1; k <= std::min(cfg.n, cfg.r); ++k) {
            const LaurentPoly idx = gaussian_multinomial(Composition::hook(cfg.n, k));
            os << k << sep << stirling2(cfg.r, k).get_str() << sep << '"' << idx.to_string() << "\"\n";
        }
        os << "total" << sep << sep << '"' << total.to_string() << "\"\n";
        if (at)
            os << "at q=" << at->get_str() << sep << sep << total.eval(*at).get_str() << "\n";
    }
    return ok ? exit_pass : exit_fail;
}

int cmd_export(const RunConfig& cfg)
{
    const TensorSpace space(cfg.n, cfg.r, cfg.limit);
    json gens = json::array();
    for (int i = 1; i < cfg.n; ++i)
        gens.push_back(action_matrix_json(space, i));
    json homs = json::array();
    for (int k = 0; k <= std::min(cfg.n, cfg.r); ++k)
        for (int l = 0; l <= std::min(cfg.n, cfg.r); ++l) {
            const auto mu = Composition::hook(cfg.n, k);
            const auto lambda = Composition::hook(cfg.n, l);
            for (const auto& d : double_coset_reps(mu, lambda)) {
                json h = phi_d(mu, lambda, d);
                h["d"] = d;
                homs.push_back(std::move(h));
            }
        }
    Output out(cfg.out);
    out.stream() << json{{"n", cfg.n}, {"r", cfg.r}, {"generators", gens}, {"homs", homs}}.dump(2) << "\n";
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with Hecke algebras acting on tensor space"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--n", cfg.n, "dimension of V")->check(CLI::PositiveNumber);
    app.add_option("--r", cfg.r, "tensor power")->check(CLI::PositiveNumber);
    app.add_option("--q", cfg.q_text, "comma separated nonzero rationals");
    app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--limit", cfg.limit, "largest n^r accepted");
    app.add_option("--out", cfg.out, "output file");
    app.add_option("--seed", cfg.seed);

    auto* verify = app.add_subcommand("verify", "check relations, orbit isomorphisms and x/y properties");
    auto* dims = app.add_subcommand("dims", "dimension table of the q-partition algebra");
    dims->add_flag("--half", cfg.half);
    auto* act_cmd = app.add_subcommand("act", "apply a generator to a basis tensor");
    act_cmd->add_option("--gen", cfg.gen)->required();
    act_cmd->add_option("--index", cfg.index, "e.g. 1,2")->required();
    auto* commutant = app.add_subcommand("commutant", "brute force commutant of the Hecke action");
    commutant->add_flag("--symbolic", cfg.symbolic);
    commutant->add_flag("--half", cfg.half);
    commutant->add_flag("--basis", cfg.basis);
    auto* glq = app.add_subcommand("glq-dims", "dimension polynomial on the GL_n(q) side");
    glq->add_option("--at", cfg.at, "evaluate at this q");
    auto* exp = app.add_subcommand("export", "write action matrices and Hom bases as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*verify)
            return cmd_verify(cfg);
        if (*dims)
            return cmd_dims(cfg);
        if (*act_cmd)
            return cmd_act(cfg);
        if (*commutant)
            return cmd_commutant(cfg);
        if (*glq)
            return cmd_glq_dims(cfg);
        if (*exp)
            return cmd_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DimensionLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_limit;
    } catch (const ZeroSpecialization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
