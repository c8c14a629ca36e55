#include "qsi/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "qsi/json_io.hpp"
#include "qsi/semiinvariants.hpp"

namespace qsi {

namespace {

struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational parse_rational(const std::string& s) {
    Rational r;
    auto slash = s.find('/');
    r.num = std::stoll(s.substr(0, slash));
    if (slash != std::string::npos) r.den = std::stoll(s.substr(slash + 1));
    if (r.den <= 0 || r.num <= 0) throw std::invalid_argument("degree parameter must be positive");
    long long g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

// a = d / gcd(r0, r1); checks integrality of the shapes
int degree_index(const Rational& a, const KroneckerContext& kctx) {
    if (kctx.gcd() % a.den != 0)
        throw std::invalid_argument("degree parameter does not give integral tableau shapes");
    return static_cast<int>(a.num * (kctx.gcd() / a.den));
}

std::string rational_str(int d, int g) {
    int gg = std::gcd(d, g);
    int num = d / gg, den = g / gg;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        Json j;
        try {
            std::cin >> j;
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("cannot parse JSON input: ") + e.what());
        }
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("cannot parse JSON input: ") + e.what());
    }
    return j;
}

Json pairs_report(const KroneckerContext& kctx, int d, bool include_pairs, int threads) {
    auto pairs = enumerate_ss_pairs(kctx, d, threads);
    Json out{{"degree", {{"d", d},
                          {"a", rational_str(d, kctx.gcd())},
                          {"weight", kctx.weight(d).w}}},
             {"count", pairs.size()}};
    if (include_pairs) {
        Json list = Json::array();
        for (const LinkedPair& p : pairs) {
            Json e = pair_to_json(p);
            e["leading_monomial"] = leading_monomial_of_pair(p).str();
            list.push_back(std::move(e));
        }
        out["pairs"] = std::move(list);
    }
    return out;
}

Json context_json(const KroneckerContext& kctx) {
    return Json{{"K", kctx.arrow_count()}, {"r0", kctx.r0()}, {"r1", kctx.r1()}};
}

void write_seed_corpus(const std::string& dir);

int run(const std::vector<std::string>& args, std::string& output, std::string& error);

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    try {
        res.status = run(args, res.output, res.error);
    } catch (const BudgetError& e) {
        res.status = 3;
        res.error = e.what();
    } catch (const std::invalid_argument& e) {
        res.status = 2;
        res.error = e.what();
    } catch (const std::exception& e) {
        res.status = 1;
        res.error = e.what();
    }
    return res;
}

namespace {

int run(const std::vector<std::string>& args, std::string& output, std::string& error) {
    CLI::App app{"exact quiver semi-invariant and SAGBI basis computations"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string output_path, seed_dir, input_path;
    bool quiet = false;
    int threads = 0;
    app.add_option("--output", output_path, "write the JSON result to a file");
    app.add_flag("--quiet", quiet, "suppress progress output on stderr");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.add_option("--seed-corpus", seed_dir, "write the worked-example fixtures to a directory");

    int K = 0, r0 = 0, r1 = 0, nmax = 12;
    std::string a_str = "1", max_a_str = "1", builtin, formula = "rows";
    bool count_only = false, witnesses = false, no_verify = false;

    auto* paths_cmd = app.add_subcommand("paths", "enumerate the paths of a quiver");
    paths_cmd->add_option("--input", input_path, "quiver JSON (default stdin)");

    auto* pairs_cmd = app.add_subcommand("pairs", "enumerate semi-standard linked pairs");
    pairs_cmd->add_option("--K", K, "arrow count")->required();
    pairs_cmd->add_option("--r0", r0, "source rank")->required();
    pairs_cmd->add_option("--r1", r1, "target rank")->required();
    pairs_cmd->add_option("--a", a_str, "degree parameter (integer or p/q)");
    pairs_cmd->add_flag("--count-only", count_only, "suppress the pair list");

    auto* semi_cmd = app.add_subcommand("semiinvariant", "construct and verify f for a pair");
    semi_cmd->add_option("--input", input_path, "pair bundle JSON (default stdin)");
    semi_cmd->add_option("--formula", formula, "rows | cols | direct | all");

    auto* str_cmd = app.add_subcommand("straighten", "rewrite as weakly semi-standard pairs");
    str_cmd->add_option("--input", input_path, "pair bundle JSON (default stdin)");
    str_cmd->add_flag("--no-verify", no_verify, "skip the exact identity check");

    auto* sagbi_cmd = app.add_subcommand("sagbi", "primitive generators up to a degree bound");
    sagbi_cmd->add_option("--K", K, "arrow count")->required();
    sagbi_cmd->add_option("--r0", r0, "source rank")->required();
    sagbi_cmd->add_option("--r1", r1, "target rank")->required();
    sagbi_cmd->add_option("--max-a", max_a_str, "enumerate degrees a <= this bound");
    sagbi_cmd->add_flag("--witnesses", witnesses, "list splitting witnesses for non-primitive pairs");

    auto* sub_cmd = app.add_subcommand("subduce", "subduct a polynomial against the generators");
    sub_cmd->add_option("--K", K, "arrow count")->required();
    sub_cmd->add_option("--r0", r0, "source rank")->required();
    sub_cmd->add_option("--r1", r1, "target rank")->required();
    sub_cmd->add_option("--max-a", max_a_str, "generator degree bound");
    sub_cmd->add_option("--input", input_path, "polynomial JSON (default stdin)");

    auto* period_cmd = app.add_subcommand("period", "classical period of a Laurent polynomial");
    period_cmd->add_option("--builtin", builtin, "fano");
    period_cmd->add_option("--input", input_path, "Laurent polynomial JSON");
    period_cmd->add_option("--n", nmax, "number of terms beyond c_0");

    auto* lattice_cmd = app.add_subcommand("lattice", "lattice points of a polytope");
    lattice_cmd->add_option("--builtin", builtin, "fano");
    lattice_cmd->add_option("--input", input_path, "polytope JSON");

    auto* fano_cmd = app.add_subcommand("fano-example", "polytope checks plus the period");
    fano_cmd->add_option("--n", nmax, "number of period terms beyond c_0");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            output = app.help();
            return 0;
        }
        error = e.what();
        return 2;
    }

    if (!seed_dir.empty()) {
        write_seed_corpus(seed_dir);
        output = Json{{"seeded", seed_dir}}.dump(2) + "\n";
        if (!output_path.empty()) {
            std::ofstream out(output_path);
            out << output;
        }
        return 0;
    }

    Json result;

    if (paths_cmd->parsed()) {
        auto [q, d] = quiver_from_json(read_json_input(input_path));
        result["quiver"] = quiver_to_json(q, d);
        Json list = Json::array();
        for (const Path& p : enumerate_paths(q))
            list.push_back({{"index", p.index}, {"arrows", p.arrows}, {"source", p.source}, {"target", p.target}});
        result["paths"] = std::move(list);
    } else if (pairs_cmd->parsed()) {
        KroneckerContext kctx(K, r0, r1);
        int d = degree_index(parse_rational(a_str), kctx);
        result = pairs_report(kctx, d, !count_only, threads);
        result["context"] = context_json(kctx);
    } else if (semi_cmd->parsed()) {
        LinkedPair pair = pair_bundle_from_json(read_json_input(input_path));
        SparsePolynomial f;
        bool agree = true;
        if (formula == "rows")
            f = f_det_rows(pair);
        else if (formula == "cols")
            f = f_det_cols(pair);
        else if (formula == "direct")
            f = f_direct(pair);
        else if (formula == "all") {
            f = f_det_rows(pair);
            agree = (f == f_det_cols(pair)) && (f == f_direct(pair));
        } else {
            throw std::invalid_argument("unknown formula " + formula);
        }
        Weight w = pair.weight();
        result["pair"] = pair_to_json(pair);
        result["weight"] = w.w;
        result["polynomial"] = polynomial_to_json(f);
        if (!f.is_zero()) result["leading_monomial"] = leading_monomial(f, term_order()).first.str();
        result["semi_invariant"] =
            check_semi_invariance(f, w, pair.ctx()->quiver(), pair.ctx()->dims());
        result["semistandard_pair"] = pair.is_semistandard_pair();
        if (formula == "all") result["formulas_agree"] = agree;
    } else if (str_cmd->parsed()) {
        LinkedPair pair = pair_bundle_from_json(read_json_input(input_path));
        auto terms = express_weakly_semistandard(pair);
        Json list = Json::array();
        bool weakly = true;
        for (const PairTerm& t : terms) {
            for (const RectTableau& tab : t.pair.tplus_tuple())
                weakly = weakly && is_weakly_semistandard(tab);
            for (const RectTableau& tab : t.pair.tminus_tuple())
                weakly = weakly && is_weakly_semistandard(tab);
            list.push_back({{"coeff", t.coeff.str()}, {"pair", pair_to_json(t.pair)}});
        }
        result["pair"] = pair_to_json(pair);
        result["terms"] = std::move(list);
        result["weakly_semistandard"] = weakly;
        if (!no_verify) result["verified"] = verify_expression(pair, terms);
    } else if (sagbi_cmd->parsed()) {
        KroneckerContext kctx(K, r0, r1);
        int max_d = degree_index(parse_rational(max_a_str), kctx);
        SsPairTables tables(kctx, threads);
        result["context"] = context_json(kctx);
        Json degrees = Json::array();
        int total = 0;
        for (int d = 1; d <= max_d; ++d) {
            const auto& pairs = tables.pairs(d);
            Json gens = Json::array(), wits = Json::array();
            int prim = 0;
            for (const LinkedPair& p : pairs) {
                auto split = find_splitting(p, d, tables);
                if (!split) {
                    ++prim;
                    Json g = pair_to_json(p);
                    g["leading_monomial"] = leading_monomial_of_pair(p).str();
                    gens.push_back(std::move(g));
                } else if (witnesses) {
                    wits.push_back({{"pair", pair_to_json(p)},
                                    {"factor1", pair_to_json(split->factor1)},
                                    {"factor2", pair_to_json(split->factor2)}});
                }
            }
            total += prim;
            Json deg{{"d", d},
                     {"a", rational_str(d, kctx.gcd())},
                     {"weight", kctx.weight(d).w},
                     {"ss_pairs", pairs.size()},
                     {"primitive", prim},
                     {"generators", std::move(gens)}};
            if (witnesses) deg["witnesses"] = std::move(wits);
            degrees.push_back(std::move(deg));
        }
        result["degrees"] = std::move(degrees);
        result["total_primitive"] = total;
    } else if (sub_cmd->parsed()) {
        KroneckerContext kctx(K, r0, r1);
        int max_d = degree_index(parse_rational(max_a_str), kctx);
        auto gens = primitive_generators(kctx, max_d, threads).all();
        SparsePolynomial f = polynomial_from_json(read_json_input(input_path));
        auto res = subduce(f, gens);
        result["context"] = context_json(kctx);
        result["generator_count"] = gens.size();
        result["remainder"] = polynomial_to_json(res.remainder);
        result["remainder_zero"] = res.remainder.is_zero();
        result["accumulated_scale"] = res.accumulated_scale.str();
        Json trace = Json::array();
        for (const SubductionStep& s : res.trace)
            trace.push_back({{"generators", s.generators},
                             {"f_scale", s.f_scale.str()},
                             {"prod_scale", s.prod_scale.str()}});
        result["trace"] = std::move(trace);
    } else if (period_cmd->parsed()) {
        LaurentPolynomial f = builtin == "fano" ? builtin_fano_example().second
                                                : laurent_from_json(read_json_input(input_path));
        result["laurent"] = laurent_to_json(f);
        result["n"] = nmax;
        result["period"] = period_to_json(classical_period(f, nmax));
    } else if (lattice_cmd->parsed()) {
        LatticePolytope p = builtin == "fano" ? builtin_fano_example().first
                                              : polytope_from_json(read_json_input(input_path));
        auto pts = lattice_points(p);
        result["dim"] = p.dim();
        result["vertex_count"] = p.vertices().size();
        result["count"] = pts.size();
        result["points"] = pts;
    } else if (fano_cmd->parsed()) {
        auto [p, f] = builtin_fano_example();
        auto pts = lattice_points(p);
        std::vector<LatticeVec> expected = p.vertices();
        expected.push_back(LatticeVec(p.dim(), 0));
        std::sort(expected.begin(), expected.end());
        result["polytope"] = polytope_to_json(p);
        result["vertex_count"] = p.vertices().size();
        result["lattice_point_count"] = pts.size();
        result["only_origin_and_vertices"] = (pts == expected);
        result["newton_matches_vertices"] = [&] {
            auto nv = f.newton_vertices();
            auto pv = p.vertices();
            std::sort(pv.begin(), pv.end());
            return nv == pv;
        }();
        result["laurent"] = laurent_to_json(f);
        result["period"] = period_to_json(classical_period(f, nmax));
    } else {
        output = app.help();
        return 0;
    }

    output = result.dump(2) + "\n";
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw std::invalid_argument("cannot open output file " + output_path);
        out << output;
        output.clear();
    }
    (void)quiet;
    return 0;
}

void write_seed_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    // the 3-vertex example quiver with dimension vector (2,2,3)
    Quiver q(3, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}, {7, 1, 2}});
    DimensionVector dims{{2, 2, 3}};
    Ctx ctx = QuiverContext::make(q, dims);
    {
        std::ofstream out(fs::path(dir) / "example_quiver.json");
        out << quiver_to_json(q, dims).dump(2) << "\n";
    }
    {
        // the worked linked pair with weight (-2,-1,2)
        LinkedPair pair(ctx, {{3, 1, 1, 1, 1},
                              {4, 1, 2, 1, 2},
                              {5, 2, 1, 2, 2},
                              {6, 2, 3, 2, 1},
                              {7, 1, 2, 2, 1},
                              {7, 2, 3, 1, 1}});
        std::ofstream out(fs::path(dir) / "example_pair.json");
        out << pair_bundle_to_json(pair).dump(2) << "\n";
    }
    {
        KroneckerContext kctx(2, 2, 3);
        auto pairs = enumerate_ss_pairs(kctx, 1);
        Json list = Json::array();
        for (const LinkedPair& p : pairs) list.push_back(pair_bundle_to_json(p));
        std::ofstream out(fs::path(dir) / "kronecker_2_3_K2_pairs.json");
        out << list.dump(2) << "\n";
    }
    {
        auto [p, f] = builtin_fano_example();
        std::ofstream outp(fs::path(dir) / "fano_polytope.json");
        outp << polytope_to_json(p).dump(2) << "\n";
        std::ofstream outf(fs::path(dir) / "fano_laurent.json");
        outf << laurent_to_json(f).dump(2) << "\n";
    }
}

}  // namespace

}  // namespace qsi
