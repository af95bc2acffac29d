// Command-line front end: every computation and cross-check of the library,
// with machine-readable output. Exit codes: 0 success, 1 usage error,
// 2 verification failure.

#include "nchilb/asymptotics.hpp"
#include "nchilb/betti.hpp"
#include "nchilb/cells.hpp"
#include "nchilb/census.hpp"
#include "nchilb/enumerate.hpp"
#include "nchilb/forest_text.hpp"
#include "nchilb/serialize.hpp"
#include "nchilb/verify.hpp"
#include "nchilb/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace nchilb;

struct VerificationFailure {};

struct CommonOpts {
    std::string format = "json";
    std::string outPath;
};

void addCommon(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    sub->add_option("--out", o.outPath, "Write output to a file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(o.outPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + o.outPath);
    out << text;
}

std::string renderJson(const Json& j) { return j.dump(2); }

std::string reportPlain(const Report& r) {
    std::string out;
    for (const Check& c : r.checks) {
        out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "  [" + c.methodPair + "]";
        if (!c.pass) out += "\n      expected: " + c.expected + "\n      actual:   " + c.actual;
        out += "\n";
    }
    out += "total=" + std::to_string(r.checks.size()) +
           " failed=" + std::to_string(r.failedCount()) + "\n";
    return out;
}

template <class Fld>
Json normalFormJson(const Forest& forest, const Fld& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const LambdaAssignment<Fld> lam = randomLambda(forest, field, rng);
    const CellPoint<Fld> p = normalFormFromCell(forest, lam, field);
    Json j;
    j["forest"] = formatForest(forest);
    j["field"] = field.descriptor();
    j["seed"] = seed;
    j["generator"] = "mt19937_64";
    j["d"] = dStat(forest);
    j["lambda"] = toJson(lam, field);
    j["point"] = toJson(p);
    return j;
}

template <class Fld>
Json submoduleJson(const Forest& forest, const Fld& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const LambdaAssignment<Fld> lam = randomLambda(forest, field, rng);
    const auto gens = submoduleGenerators(forest, lam);
    Json j;
    j["forest"] = formatForest(forest);
    j["field"] = field.descriptor();
    j["seed"] = seed;
    j["generator"] = "mt19937_64";
    Json arr = Json::array();
    for (const auto& g : gens) {
        Json gj;
        gj["lead"] = toJson(g.lead);
        Json tail = Json::array();
        for (const auto& [node, value] : g.tail) {
            Json tj;
            tj["node"] = toJson(node);
            tj["coefficient"] = field.toString(value);
            tail.push_back(tj);
        }
        gj["tail"] = tail;
        arr.push_back(gj);
    }
    j["generators"] = arr;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-commutative Hilbert scheme calculator"};
    app.require_subcommand(1);

    // ---- forests ----
    {
        auto* sub = app.add_subcommand("forests", "Enumerate the forests of F_{d,n}^{(m)}");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint64_t>(0);
        auto maxCount = std::make_shared<std::uint64_t>(10'000'000);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Nodes")->required();
        sub->add_option("--max-count", *maxCount, "Enumeration cap");
        addCommon(sub, *opts);
        sub->callback([=]() {
            const auto forests = enumerateForests(*m, *n, *d, *maxCount);
            if (opts->format == "json") {
                Json j;
                j["m"] = *m;
                j["n"] = *n;
                j["d"] = *d;
                j["count"] = forests.size();
                Json arr = Json::array();
                for (const Forest& f : forests) arr.push_back(formatForest(f));
                j["forests"] = arr;
                emit(*opts, renderJson(j));
            } else {
                std::string out;
                if (opts->format == "csv") out = "index,forest\n";
                for (std::size_t i = 0; i < forests.size(); ++i)
                    out += (opts->format == "csv" ? std::to_string(i) + "," : "") +
                           formatForest(forests[i]) + "\n";
                emit(*opts, out);
            }
        });
    }

    // ---- stat ----
    {
        auto* sub = app.add_subcommand("stat", "Statistics of a single forest");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(0);
        auto text = std::make_shared<std::string>();
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots (checked against the forest text)");
        sub->add_option("--forest", *text, "Forest text")->required();
        addCommon(sub, *opts);
        sub->callback([=]() {
            const Forest f = parseForest(*text, *m);
            if (*n != 0 && *n != f.roots())
                throw std::invalid_argument("forest text has " + std::to_string(f.roots()) +
                                            " components, but -n says " + std::to_string(*n));
            const auto crit = criticalSet(f);
            Json j;
            j["forest"] = formatForest(f);
            j["m"] = *m;
            j["n"] = f.roots();
            j["size"] = f.size();
            j["critical_count"] = crit.size();
            Json cj = Json::array();
            for (const NodeRef& c : crit) cj.push_back(toJson(c));
            j["critical"] = cj;
            Json dj = Json::array();
            for (const DPair& p : dPairs(f)) {
                Json pj = Json::array();
                pj.push_back(toJson(p.source));
                pj.push_back(toJson(p.target));
                dj.push_back(pj);
            }
            j["d_pairs"] = dj;
            j["d"] = dStat(f);
            j["d_prime"] = dPrime(f);
            if (opts->format == "plain") {
                std::string out = "forest: " + formatForest(f) + "\n";
                out += "size: " + std::to_string(f.size()) + "\n";
                out += "c: " + std::to_string(crit.size()) + "\n";
                out += "d: " + std::to_string(dStat(f)) + "\n";
                out += "d': " + std::to_string(dPrime(f)) + "\n";
                emit(*opts, out);
            } else {
                emit(*opts, renderJson(j));
            }
        });
    }

    // ---- betti ----
    {
        auto* sub = app.add_subcommand("betti", "Betti numbers and intersection polynomial");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint64_t>(0);
        auto maxCount = std::make_shared<std::uint64_t>(10'000'000);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Nodes")->required();
        sub->add_option("--max-count", *maxCount, "Enumeration cap");
        addCommon(sub, *opts);
        sub->callback([=]() {
            const BettiTable t = bettiNumbers(*m, *n, *d, *maxCount);
            if (opts->format == "csv")
                emit(*opts, toCsv(t));
            else if (opts->format == "plain") {
                std::string out;
                for (std::size_t k = 0; k < t.betti.size(); ++k)
                    if (t.betti[k] != 0)
                        out += "b_" + std::to_string(k) + " = " + t.betti[k].str() + "\n";
                out += "euler = " + t.total().str() + "\n";
                emit(*opts, out);
            } else
                emit(*opts, renderJson(toJson(t)));
        });
    }

    // ---- euler ----
    {
        auto* sub = app.add_subcommand("euler", "Euler characteristic (closed formula)");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint64_t>(0);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Nodes")->required();
        addCommon(sub, *opts);
        sub->callback([=]() {
            const BigInt chi = eulerClosedForm(*m, *n, *d);
            if (opts->format == "plain")
                emit(*opts, chi.str() + "\n");
            else {
                Json j;
                j["m"] = *m;
                j["n"] = *n;
                j["d"] = *d;
                j["euler"] = chi.str();
                emit(*opts, renderJson(j));
            }
        });
    }

    // ---- zeta ----
    {
        auto* sub = app.add_subcommand("zeta", "Zeta-type generating functions");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto dmax = std::make_shared<int>(8);
        auto kind = std::make_shared<std::string>("modified");
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->check(CLI::PositiveNumber);
        sub->add_option("--dmax", *dmax, "Truncation order")->required();
        sub->add_option("--kind", *kind, "Which series")
            ->check(CLI::IsMember({"modified", "unmodified", "gamma"}))
            ->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            if (*kind == "gamma") {
                const GammaSeries g = gammaSeries(*m, *dmax);
                emit(*opts, renderJson(toJson(g)));
                return;
            }
            const TSeries s = *kind == "modified" ? zetaBar(*m, *n, *dmax)
                                                  : zetaUnmodified(*m, *n, *dmax);
            if (opts->format == "csv")
                emit(*opts, toCsv(s));
            else if (opts->format == "plain") {
                std::string out;
                for (int d = 0; d <= s.dmax; ++d)
                    out += "t^" + std::to_string(d) + ": " + s.at(d).str() + "\n";
                emit(*opts, out);
            } else
                emit(*opts, renderJson(toJson(s)));
        });
    }

    // ---- lattice ----
    {
        auto* sub = app.add_subcommand("lattice", "Lattice paths and coarea statistics");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint64_t>(0);
        auto maxCount = std::make_shared<std::uint64_t>(10'000'000);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Path length")->required();
        sub->add_option("--max-count", *maxCount, "Enumeration cap");
        addCommon(sub, *opts);
        sub->callback([=]() {
            const auto paths = enumeratePaths(*m, *n, *d, *maxCount);
            std::vector<BigInt> hist(dPrimeMax(*m, *n, *d) + 1, 0);
            for (const LatticePath& p : paths) ++hist[coarea(p, *m, *n)];
            if (opts->format == "csv") {
                std::string out = "heights,coarea\n";
                for (const LatticePath& p : paths) {
                    std::string h;
                    for (std::size_t i = 0; i < p.heights.size(); ++i)
                        h += (i ? "." : "") + std::to_string(p.heights[i]);
                    out += h + "," + std::to_string(coarea(p, *m, *n)) + "\n";
                }
                emit(*opts, out);
            } else {
                Json j;
                j["m"] = *m;
                j["n"] = *n;
                j["d"] = *d;
                j["count"] = paths.size();
                Json arr = Json::array();
                for (const LatticePath& p : paths) arr.push_back(toJson(p, *m, *n));
                j["paths"] = arr;
                j["coarea_polynomial"] = toJson(QPolynomial(hist));
                emit(*opts, renderJson(j));
            }
        });
    }

    // ---- normal-form ----
    {
        auto* sub = app.add_subcommand("normal-form", "Normal form of a cell with random lambda");
        auto m = std::make_shared<std::uint32_t>(2);
        auto text = std::make_shared<std::string>();
        auto field = std::make_shared<std::string>("Fp:101");
        auto seed = std::make_shared<std::uint64_t>(12345);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("--forest", *text, "Forest text")->required();
        sub->add_option("--field", *field, "Q or Fp:<p>")->capture_default_str();
        sub->add_option("--seed", *seed, "Random seed")->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            const Forest f = parseForest(*text, *m);
            Json j = *field == "Q"
                         ? normalFormJson(f, RationalField{}, *seed)
                         : normalFormJson(f, PrimeField(std::stoull(field->substr(3))), *seed);
            emit(*opts, renderJson(j));
        });
    }

    // ---- submodule ----
    {
        auto* sub = app.add_subcommand("submodule", "Submodule generators of a cell");
        auto m = std::make_shared<std::uint32_t>(2);
        auto text = std::make_shared<std::string>();
        auto field = std::make_shared<std::string>("Fp:101");
        auto seed = std::make_shared<std::uint64_t>(12345);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("--forest", *text, "Forest text")->required();
        sub->add_option("--field", *field, "Q or Fp:<p>")->capture_default_str();
        sub->add_option("--seed", *seed, "Random seed")->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            const Forest f = parseForest(*text, *m);
            Json j = *field == "Q"
                         ? submoduleJson(f, RationalField{}, *seed)
                         : submoduleJson(f, PrimeField(std::stoull(field->substr(3))), *seed);
            emit(*opts, renderJson(j));
        });
    }

    // ---- classify ----
    {
        auto* sub = app.add_subcommand("classify", "Classify a cell point (JSON input)");
        auto inPath = std::make_shared<std::string>("-");
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("--in", *inPath, "Cell point JSON file, or - for stdin")
            ->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            std::string text;
            if (*inPath == "-") {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else {
                std::ifstream in(*inPath, std::ios::binary);
                if (!in) throw std::runtime_error("cannot open input file " + *inPath);
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            Json parsed = Json::parse(text);
            if (parsed.contains("point")) parsed = parsed["point"]; // accept normal-form output
            const AnyCellPoint any = cellPointFromJson(parsed);
            const Forest cell = std::visit([](const auto& p) { return classifyCell(p); }, any);
            if (opts->format == "plain")
                emit(*opts, formatForest(cell) + "\n");
            else {
                Json j;
                j["forest"] = formatForest(cell);
                j["d"] = dStat(cell);
                emit(*opts, renderJson(j));
            }
        });
    }

    // ---- point-count ----
    {
        auto* sub = app.add_subcommand("point-count", "Predicted (and brute-force) point counts");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint32_t>(0);
        auto q = std::make_shared<std::uint64_t>(2);
        auto brute = std::make_shared<bool>(false);
        auto maxSpace = std::make_shared<std::uint64_t>(1ull << 26);
        auto maxCount = std::make_shared<std::uint64_t>(10'000'000);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Nodes")->required();
        sub->add_option("-q", *q, "Field size (prime when --brute)")->required();
        sub->add_flag("--brute", *brute, "Also run the exhaustive census");
        sub->add_option("--max-space", *maxSpace, "Brute-force tuple cap");
        sub->add_option("--max-count", *maxCount, "Enumeration cap");
        addCommon(sub, *opts);
        sub->callback([=]() {
            const BigInt predicted = predictedPointCount(*m, *n, *d, BigInt(*q), *maxCount);
            Json j;
            j["m"] = *m;
            j["n"] = *n;
            j["d"] = *d;
            j["q"] = *q;
            j["predicted"] = predicted.str();
            if (*brute) {
                const CensusReport census = bruteForceCount(*m, *n, *d, *q, BigInt(*maxSpace));
                j["brute"] = toJson(census);
                j["agree"] = census.pointCount == predicted;
            }
            emit(*opts, renderJson(j));
            if (*brute && j["agree"] == false) throw VerificationFailure{};
        });
    }

    // ---- census ----
    {
        auto* sub = app.add_subcommand("census", "Exhaustive per-cell census over F_p");
        auto m = std::make_shared<std::uint32_t>(2);
        auto n = std::make_shared<std::uint32_t>(1);
        auto d = std::make_shared<std::uint32_t>(0);
        auto p = std::make_shared<std::uint64_t>(2);
        auto maxSpace = std::make_shared<std::uint64_t>(1ull << 26);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", *n, "Roots")->required()->check(CLI::PositiveNumber);
        sub->add_option("-d", *d, "Nodes")->required();
        sub->add_option("-p", *p, "Prime field size")->required();
        sub->add_option("--max-space", *maxSpace, "Tuple cap");
        addCommon(sub, *opts);
        sub->callback([=]() {
            emit(*opts, renderJson(toJson(cellCensus(*m, *n, *d, *p, BigInt(*maxSpace)))));
        });
    }

    // ---- airy ----
    {
        auto* sub = app.add_subcommand("airy", "Airy distribution moments");
        auto K = std::make_shared<int>(4);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-K,--order", *K, "Highest moment")->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() { emit(*opts, renderJson(toJson(airyMoments(*K)))); });
    }

    // ---- limit-check ----
    {
        auto* sub = app.add_subcommand("limit-check", "Normalized Betti moments vs Airy law");
        auto m = std::make_shared<std::uint32_t>(2);
        auto dlist = std::make_shared<std::vector<std::uint64_t>>(
            std::vector<std::uint64_t>{50, 100, 200, 500, 1000});
        auto jmax = std::make_shared<int>(2);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Arity (>= 2)")->required();
        sub->add_option("--dlist", *dlist, "Increasing list of degrees")->delimiter(',');
        sub->add_option("--jmax", *jmax, "Highest moment")->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            const LimitLawTrace t = limitLawCheck(*m, *dlist, *jmax);
            if (opts->format == "csv")
                emit(*opts, toCsv(t));
            else
                emit(*opts, renderJson(toJson(t)));
        });
    }

    // ---- verify ----
    {
        auto* sub = app.add_subcommand("verify", "Run the full cross-validation suite");
        auto m = std::make_shared<std::uint32_t>(0);
        auto n = std::make_shared<std::uint32_t>(0);
        auto dmax = std::make_shared<int>(-1);
        auto seed = std::make_shared<std::uint64_t>(12345);
        auto opts = std::make_shared<CommonOpts>();
        sub->add_option("-m", *m, "Restrict to one arity");
        sub->add_option("-n", *n, "Restrict to one root count");
        sub->add_option("--dmax", *dmax, "Lower the per-criterion degree caps");
        sub->add_option("--seed", *seed, "Random seed")->capture_default_str();
        addCommon(sub, *opts);
        sub->callback([=]() {
            VerifyOptions vo;
            if (*m != 0) vo.m = *m;
            if (*n != 0) vo.n = *n;
            if (*dmax >= 0) vo.dmax = *dmax;
            vo.seed = *seed;
            const Report report = runVerification(vo);
            if (opts->format == "plain")
                emit(*opts, reportPlain(report));
            else
                emit(*opts, renderJson(toJson(report)));
            if (!report.allPassed()) throw VerificationFailure{};
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const VerificationFailure&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
