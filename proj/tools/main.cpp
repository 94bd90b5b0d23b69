#include "CLI11.hpp"

#include "runcount/checks.hpp"
#include "runcount/engine.hpp"
#include "runcount/errors.hpp"
#include "runcount/oracle.hpp"
#include "runcount/recipe_doc.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace runcount;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

/* One printable polynomial row per x-degree.  Word-homomorphism series are
   printed as raw coefficients; the exponential homomorphisms print n!*[x^n]
   so the rows are the integer statistic polynomials. */
std::vector<PolyT> seriesRows(const Series& s, bool egf) {
    std::vector<PolyT> rows;
    rows.reserve(static_cast<std::size_t>(s.bound) + 1);
    for (int n = 0; n <= s.bound; ++n)
        rows.push_back(egf ? egfCoefficient(s, n) : s.at(n));
    return rows;
}

void printRows(const std::vector<PolyT>& rows, const std::string& format) {
    if (format == "seq") {
        std::string line;
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (n) line += ",";
            line += rationalToString(rows[n].evalAt(1));
        }
        std::cout << line << "\n";
        return;
    }
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (format == "csv")
            std::cout << n << "," << polyToCsv(rows[n]) << "\n";
        else
            std::cout << n << ": " << polyToString(rows[n]) << "\n";
    }
}

struct Options {
    int N = 12;
    std::string hom = "perm";
    std::string format = "poly";
    int cap = -1; // suite-dependent default
    int m = 3;
    std::string file;
    std::string dataDir;
    std::vector<int> start;
    std::vector<int> end;
    std::string name;
    std::string predOrStat;
    int permSize = 0;
    std::string suite;
};

int runCompute(const Options& opt) {
    RunNetwork net = parseNetworkFile(opt.file);
    if (!opt.start.empty()) net.start = opt.start;
    if (!opt.end.empty()) net.end = opt.end;
    for (int v : net.start)
        if (v < 1 || v > net.m)
            throw DomainViolation("start vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(net.m));
    for (int v : net.end)
        if (v < 1 || v > net.m)
            throw DomainViolation("end vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(net.m));
    const Hom h = homFromName(opt.hom);
    const Series s = networkSeries(net, h, opt.N);
    printRows(seriesRows(s, h != Hom::Word), opt.format);
    return kExitOk;
}

int runRecipe(const Options& opt) {
    if (!opt.file.empty()) {
        if (!opt.name.empty())
            throw DomainViolation("give a built-in recipe name or --file, not both");
        const RecipeDocument doc = parseRecipeDocumentFile(opt.file);
        printRows(seriesRows(evalRecipeDocument(doc, opt.N), true), opt.format);
        return kExitOk;
    }
    if (opt.name == "list") {
        for (const std::string& name : recipeNames())
            std::cout << name << ": " << recipeSpec(name).description << "\n";
        return kExitOk;
    }
    std::optional<Hom> override;
    if (!opt.hom.empty()) override = homFromName(opt.hom);
    const Series s = runStatRecipe(opt.name, opt.N, override, opt.m);
    printRows(seriesRows(s, true), opt.format);
    return kExitOk;
}

int runOracleStat(const Options& opt) {
    const StatName stat = statNameFromString(opt.predOrStat);
    const int cap = opt.cap < 0 ? kStatCapDefault : opt.cap;
    const PolyT p = statPolynomial(stat, opt.permSize, cap);
    if (opt.format == "csv")
        std::cout << opt.permSize << "," << polyToCsv(p) << "\n";
    else if (opt.format == "seq")
        std::cout << rationalToString(p.evalAt(1)) << "\n";
    else
        std::cout << polyToString(p) << "\n";
    return kExitOk;
}

int runOraclePred(const Options& opt) {
    const PredName pred = predNameFromString(opt.predOrStat);
    std::cout << predicateCount(pred, opt.permSize, opt.m) << "\n";
    return kExitOk;
}

int runCheck(const Options& opt) {
    CheckReport report;
    if (opt.suite == "tables") {
        report = checkTables(opt.dataDir);
    } else if (opt.suite == "oracle") {
        report = checkOracle(opt.cap < 0 ? 8 : opt.cap);
    } else if (opt.suite == "identities") {
        report = checkIdentities(opt.N);
    } else {
        if (opt.N > 10)
            throw DomainViolation("bijection sweeps enumerate S_n; --N tops out at 10");
        report = checkBijections(opt.N);
    }
    std::cout << formatReport(report);
    return report.allPassed() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact counting of permutations and words by increasing-run lengths.\n"
        "Series are computed over run networks with exact rational arithmetic."};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> homs = {"word", "perm", "alt"};
    const std::vector<std::string> formats = {"poly", "csv", "seq"};

    CLI::App* compute = app.add_subcommand(
        "compute", "Sum the counting series over a network file's start/end vertices");
    compute->add_option("file", opt.file, "network document (JSON)")->required();
    compute->add_option("--N", opt.N, "series truncation bound")
        ->check(CLI::Range(0, 64));
    compute->add_option("--hom", opt.hom, "coefficient scaling: word, perm, or alt")
        ->check(CLI::IsMember(homs));
    compute->add_option("--format", opt.format, "poly lines, csv rows, or t=1 sequence")
        ->check(CLI::IsMember(formats));
    compute->add_option("--start", opt.start, "override start vertices")
        ->delimiter(',');
    compute->add_option("--end", opt.end, "override end vertices")->delimiter(',');

    CLI::App* recipe = app.add_subcommand(
        "recipe", "Print a built-in statistic table, or evaluate a recipe document");
    recipe->add_option("name", opt.name,
                       "built-in recipe name, or 'list' to enumerate them");
    recipe->add_option("--N", opt.N, "largest permutation size printed")
        ->check(CLI::Range(0, 64));
    std::string recipeHom;
    recipe->add_option("--hom", recipeHom, "override scaling: perm or alt")
        ->check(CLI::IsMember(homs));
    recipe->add_option("--format", opt.format, "poly lines, csv rows, or t=1 sequence")
        ->check(CLI::IsMember(formats));
    recipe->add_option("--m", opt.m, "run-length ceiling for davidBarton")
        ->check(CLI::Range(2, 64));
    recipe->add_option("--file", opt.file, "recipe document (JSON) instead of a name");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Brute-force statistics over all permutations of a given size");
    CLI::App* oracleStat = oracle->add_subcommand(
        "stat", "distribution polynomial of a statistic over all permutations");
    oracleStat->add_option("name", opt.predOrStat, "statistic tag")->required();
    oracleStat->add_option("n", opt.permSize, "permutation size")->required();
    oracleStat->add_option("--cap", opt.cap, "largest size accepted (default 9)")
        ->check(CLI::Range(0, kStatCapMax));
    oracleStat
        ->add_option("--format", opt.format, "poly, csv row, or t=1 count")
        ->check(CLI::IsMember(formats));
    CLI::App* oraclePred = oracle->add_subcommand(
        "pred", "count permutations satisfying a run-structure predicate");
    oraclePred->add_option("name", opt.predOrStat, "predicate tag")->required();
    oraclePred->add_option("n", opt.permSize, "permutation size")->required();
    oraclePred->add_option("--m", opt.m, "run-length bound for *RunsBelow");
    oracle->require_subcommand(1);

    CLI::App* check = app.add_subcommand(
        "check", "Run a verification suite; exit 2 on any mismatch");
    check
        ->add_option("suite", opt.suite,
                     "one of: tables, oracle, identities, bijections")
        ->required()
        ->check(CLI::IsMember({"tables", "oracle", "identities", "bijections"}));
    check->add_option("--N", opt.N, "bound for identities (12) / bijections (9)")
        ->check(CLI::Range(0, 64));
    check->add_option("--cap", opt.cap, "oracle suite size cap (default 8)")
        ->check(CLI::Range(0, kStatCapMax));
    check->add_option("--data", opt.dataDir,
                      "directory of golden CSVs (default: embedded copies)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return runCompute(opt);
        if (recipe->parsed()) {
            if (opt.name.empty() && opt.file.empty())
                throw DomainViolation("recipe needs a name or --file");
            opt.hom = recipeHom;
            return runRecipe(opt);
        }
        if (oracle->parsed())
            return oracleStat->parsed() ? runOracleStat(opt) : runOraclePred(opt);
        if (check->parsed()) {
            if (check->count("--N") == 0) opt.N = opt.suite == "bijections" ? 9 : 12;
            return runCheck(opt);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
