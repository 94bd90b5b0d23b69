#include "runcount/checks.hpp"

#include "runcount/engine.hpp"
#include "runcount/errors.hpp"
#include "runcount/oracle.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace runcount {

namespace {

/* ---- golden data ------------------------------------------------------ */

const char* kPkGolden = R"(0,1
1,1
2,2
3,4,2
4,8,16
5,16,88,16
6,32,416,272
7,64,1824,2880,272
8,128,7680,24576,7936
9,256,31616,185856,137216,7936)";

const char* kRpkGolden = R"(0,1
1,1
2,1,1
3,1,5
4,1,18,5
5,1,58,61
6,1,179,479,61
7,1,543,3111,1385
8,1,1636,18270,19028,1385
9,1,4916,101166,206276,50521)";

const char* kLrpkGolden = R"(0,1
1,0,1
2,0,2
3,0,4,2
4,0,8,16
5,0,16,88,16
6,0,32,416,272
7,0,64,1824,2880,272
8,0,128,7680,24576,7936
9,0,256,31616,185856,137216,7936)";

const char* kDascGolden = R"(0,1
1,1
2,2
3,5,1
4,17,6,1
5,70,41,8,1
6,349,274,86,10,1
7,2017,2040,803,167,12,1
8,13358,16346,8221,2064,316,14,1
9,99377,143571,86214,28143,4961,597,16,1)";

const char* kRdascGolden = R"(0,1
1,1
2,1,1
3,3,2,1
4,9,11,3,1
5,39,48,28,4,1
6,189,297,166,62,5,1
7,1107,1902,1419,476,129,6,1
8,7281,14391,11637,5507,1235,261,7,1
9,54351,118044,111438,56400,19096,3020,522,8,1)";

const char* kLrdascGolden = R"(0,1
1,0,1
2,1,0,1
3,1,4,0,1
4,6,6,11,0,1
5,19,51,23,26,0,1
6,109,212,269,72,57,0,1
7,588,1571,1419,1140,201,120,0,1
8,4033,10470,13343,7432,4272,522,247,0,1
9,29485,87672,107853,87552,33683,14841,1291,502,0,1)";

const char* kBrGolden = R"(0,1
1,1
2,0,2
3,0,2,4
4,0,2,12,10
5,0,2,28,58,32
6,0,2,60,236,300,122
7,0,2,124,836,1852,1682,544
8,0,2,252,2766,9576,14622,10332,2770
9,0,2,508,8814,45096,103326,119964,69298,15872)";

const char* kUdrGolden = R"(0,1
1,0,1
2,0,1,1
3,0,1,3,2
4,0,1,7,11,5
5,0,1,15,43,45,16
6,0,1,31,148,268,211,61
7,0,1,63,480,1344,1767,1113,272
8,0,1,127,1509,6171,12099,12477,6551,1385
9,0,1,255,4661,26955,74211,111645,94631,42585,7936)";

/* columns: n, all-peaks-odd-valleys-even, all-even, all-odd */
const char* kSequencesGolden = R"(0,1,1,1
1,1,1,1
2,2,2,2
3,4,6,2
4,13,8,8
5,50,40,14
6,229,84,84
7,1238,588,204
8,7614,1632,1632
9,52706,14688,5104
10,405581,51040,51040
11,3432022,561440,195040
12,31684445,2340480,2340480)";

std::vector<std::vector<Rational>> parseCsvRows(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parseRational(cell));
        if (row.empty() || !isInteger(row.front()))
            throw ParseError("golden row must start with its index: " + line);
        if (Rational(static_cast<int>(rows.size())) != row.front())
            throw ParseError("golden rows must be consecutive from 0: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string readFileText(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open golden table '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GoldenSequences parseSequencesCsv(const std::string& text) {
    GoldenSequences seq;
    for (const auto& row : parseCsvRows(text)) {
        if (row.size() != 4)
            throw ParseError("sequence rows need exactly three counts");
        seq.a.push_back(toInteger(row[1]));
        seq.b.push_back(toInteger(row[2]));
        seq.c.push_back(toInteger(row[3]));
    }
    return seq;
}

/* ---- small series helpers --------------------------------------------- */

Series polyScale(const PolyT& c, Series s) {
    for (int n = 0; n <= s.bound; ++n) s.at(n) = c * s.at(n);
    return s;
}

CheckResult compareSeries(const std::string& name, const Series& got,
                          const Series& want) {
    CheckResult r{name, true, ""};
    for (int n = 0; n <= std::min(got.bound, want.bound); ++n) {
        if (got.at(n) == want.at(n)) continue;
        r.pass = false;
        r.detail = "x^" + std::to_string(n) + ": got " + polyToString(got.at(n)) +
                   ", want " + polyToString(want.at(n));
        return r;
    }
    return r;
}

CheckResult comparePoly(const std::string& name, const PolyT& got,
                        const PolyT& want) {
    CheckResult r{name, got == want, ""};
    if (!r.pass)
        r.detail = "got " + polyToString(got) + ", want " + polyToString(want);
    return r;
}

BigInt constantValue(const PolyT& p) {
    if (p.degree() > 0) throw Error("expected a constant polynomial");
    return toInteger(p.coeff(0));
}

std::vector<Perm> permsSatisfying(PredName pred, int n) {
    std::vector<Perm> out;
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do {
        if (predicateHolds(pred, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

bool CheckReport::allPassed() const {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string formatReport(const CheckReport& report) {
    std::string out;
    int failed = 0;
    for (const CheckResult& r : report.results) {
        out += r.pass ? "PASS " : "FAIL ";
        out += r.name;
        if (!r.pass && !r.detail.empty()) out += ": " + r.detail;
        out += "\n";
        failed += !r.pass;
    }
    out += report.suite + ": " + std::to_string(report.results.size() - failed) +
           "/" + std::to_string(report.results.size()) + " checks passed\n";
    return out;
}

std::vector<PolyT> parseGoldenCsv(const std::string& text) {
    std::vector<PolyT> rows;
    for (const auto& row : parseCsvRows(text))
        rows.emplace_back(std::vector<Rational>(row.begin() + 1, row.end()));
    return rows;
}

std::vector<PolyT> loadGoldenCsvFile(const std::string& path) {
    return parseGoldenCsv(readFileText(path));
}

const std::vector<std::string>& goldenTableNames() {
    static const std::vector<std::string> names = {
        "pk", "rpk", "lrpk", "dasc", "rdasc", "lrdasc", "br", "udr",
    };
    return names;
}

const std::vector<PolyT>& embeddedGoldenTable(const std::string& name) {
    static const std::map<std::string, std::vector<PolyT>> tables = [] {
        std::map<std::string, std::vector<PolyT>> t;
        t.emplace("pk", parseGoldenCsv(kPkGolden));
        t.emplace("rpk", parseGoldenCsv(kRpkGolden));
        t.emplace("lrpk", parseGoldenCsv(kLrpkGolden));
        t.emplace("dasc", parseGoldenCsv(kDascGolden));
        t.emplace("rdasc", parseGoldenCsv(kRdascGolden));
        t.emplace("lrdasc", parseGoldenCsv(kLrdascGolden));
        t.emplace("br", parseGoldenCsv(kBrGolden));
        t.emplace("udr", parseGoldenCsv(kUdrGolden));
        return t;
    }();
    auto it = tables.find(name);
    if (it == tables.end())
        throw UnknownLabel("no golden table for '" + name + "'");
    return it->second;
}

const GoldenSequences& embeddedGoldenSequences() {
    static const GoldenSequences seq = parseSequencesCsv(kSequencesGolden);
    return seq;
}

CheckReport checkTables(const std::string& goldenDir) {
    CheckReport report;
    report.suite = "tables";
    for (const std::string& name : goldenTableNames()) {
        const std::vector<PolyT> golden =
            goldenDir.empty() ? embeddedGoldenTable(name)
                              : loadGoldenCsvFile(goldenDir + "/" + name + ".csv");
        const int top = static_cast<int>(golden.size()) - 1;
        const Series s = runStatRecipe(name, top);
        CheckResult result{"table " + name, true, ""};
        for (int n = 0; n <= top; ++n) {
            const PolyT got = egfCoefficient(s, n);
            if (got == golden[static_cast<std::size_t>(n)]) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": got " + polyToString(got) +
                            ", want " +
                            polyToString(golden[static_cast<std::size_t>(n)]);
            break;
        }
        report.results.push_back(std::move(result));
    }

    const GoldenSequences seq =
        goldenDir.empty() ? embeddedGoldenSequences()
                          : parseSequencesCsv(readFileText(goldenDir + "/abc.csv"));
    struct SeqCase {
        const char* recipe;
        const std::vector<BigInt>& values;
    };
    const SeqCase cases[] = {
        {"gz2014", seq.a}, {"allEvenPV", seq.b}, {"allOddPV", seq.c}};
    for (const SeqCase& sc : cases) {
        const int top = static_cast<int>(sc.values.size()) - 1;
        const Series s = runStatRecipe(sc.recipe, top);
        CheckResult result{std::string("sequence ") + sc.recipe, true, ""};
        for (int n = 0; n <= top; ++n) {
            BigInt got;
            try {
                got = constantValue(egfCoefficient(s, n));
            } catch (const Error& e) {
                result.pass = false;
                result.detail = "n=" + std::to_string(n) + ": " + e.what();
                break;
            }
            if (got == sc.values[static_cast<std::size_t>(n)]) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": got " + got.str() +
                            ", want " + sc.values[static_cast<std::size_t>(n)].str();
            break;
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

CheckReport checkOracle(int cap) {
    CheckReport report;
    report.suite = "oracle";
    struct Link {
        StatName stat;
        const char* recipe;
        bool divideByT; // descent-style recipes carry an extra factor of t
    };
    const Link links[] = {
        {StatName::Des, "eulerian", true},   {StatName::AltDes, "altEulerian", true},
        {StatName::Pk, "pk", false},         {StatName::Val, "pk", false},
        {StatName::Lpk, "rpk", false},       {StatName::Rpk, "rpk", false},
        {StatName::Lrpk, "lrpk", false},     {StatName::Dasc, "dasc", false},
        {StatName::Ddes, "dasc", false},     {StatName::Rdasc, "rdasc", false},
        {StatName::Lrdasc, "lrdasc", false}, {StatName::Br, "br", false},
        {StatName::Udr, "udr", false},       {StatName::As, "udr", false},
    };

    std::map<std::string, Series> engine;
    for (const Link& link : links)
        if (!engine.count(link.recipe))
            engine.emplace(link.recipe, runStatRecipe(link.recipe, cap));

    std::map<StatName, CheckResult> partial;
    for (const Link& link : links)
        partial.emplace(link.stat,
                        CheckResult{"engine-vs-oracle " + statNameString(link.stat),
                                    true, ""});

    for (int n = 0; n <= cap; ++n) {
        const std::map<StatName, PolyT> brute = statTable(n, cap);
        for (const Link& link : links) {
            CheckResult& result = partial.at(link.stat);
            if (!result.pass) continue;
            PolyT want = egfCoefficient(engine.at(link.recipe), n);
            if (link.divideByT && n >= 1) want = polyDivExact(want, PolyT::t());
            const PolyT& got = brute.at(link.stat);
            if (got == want) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": oracle " +
                            polyToString(got) + ", engine " + polyToString(want) +
                            " (" + recipeSpec(link.recipe).description + ")";
        }
    }
    for (const Link& link : links)
        report.results.push_back(partial.at(link.stat));
    return report;
}

CheckReport checkIdentities(int N) {
    CheckReport report;
    report.suite = "identities";
    const PolyT one(1);
    const PolyT t = PolyT::t();
    const PolyT omt = one - t;            // 1 - t
    const PolyT opt = one + t;            // 1 + t
    const PolyT omt2 = one - t * t;       // 1 - t^2
    const PolyT u2 = t * t + PolyT(2) * t - PolyT(3); // (t+3)(t-1)
    const Rational half(1, 2);

    const Series pk = runStatRecipe("pk", N);
    const Series rpk = runStatRecipe("rpk", N);
    const Series lrpk = runStatRecipe("lrpk", N);
    const Series dasc = runStatRecipe("dasc", N);
    const Series lrdasc = runStatRecipe("lrdasc", N);
    const Series br = runStatRecipe("br", N);
    const Series udr = runStatRecipe("udr", N);
    const Series eulerian = runStatRecipe("eulerian", N);
    const Series altEulerian = runStatRecipe("altEulerian", N);
    const Series A = runStatRecipe("gz2014", N);
    const Series B = runStatRecipe("allEvenPV", N);
    const Series C = runStatRecipe("allOddPV", N);

    const Series evenOmt = builtinSeries(BuiltinKind::EVEN, omt, 1, N);
    const Series oddOmt = builtinSeries(BuiltinKind::ODD, omt, 1, N);
    const Series evenOmt2 = builtinSeries(BuiltinKind::EVEN, omt2, 1, N);
    const Series oddOmt2 = builtinSeries(BuiltinKind::ODD, omt2, 1, N);
    const Series x = Series::monomialX(1, one, N);
    const Series oneSeries = Series::one(N);

    report.results.push_back(compareSeries("peaks closed form",
                                           pk * (evenOmt - oddOmt), evenOmt));
    report.results.push_back(compareSeries("right peaks closed form",
                                           rpk * (evenOmt - oddOmt), oneSeries));
    report.results.push_back(
        compareSeries("peaks vs right peaks", pk, rpk * evenOmt));
    report.results.push_back(compareSeries(
        "double ascents closed form",
        dasc * (builtinSeries(BuiltinKind::EVEN, u2, half, N) -
                polyScale(opt, builtinSeries(BuiltinKind::ODD, u2, half, N))),
        builtinSeries(BuiltinKind::EXPS, omt, half, N)));
    report.results.push_back(
        compareSeries("double ascents vs left-right", dasc,
                      builtinSeries(BuiltinKind::EXPS, omt, 1, N) * lrdasc));
    {
        Series rhs = polyScale(t, pk);
        rhs.at(0) = rhs.at(0) + omt;
        report.results.push_back(compareSeries("left-right peaks from peaks",
                                               lrpk, rhs));
    }
    report.results.push_back(compareSeries(
        "descent polynomial reciprocity",
        eulerian *
            (oneSeries - polyScale(t, builtinSeries(BuiltinKind::EXPS, omt, 1, N))),
        Series::constant(omt, N)));
    report.results.push_back(compareSeries(
        "alternating descent reciprocity",
        altEulerian *
            (oneSeries - polyScale(t, builtinSeries(BuiltinKind::EULS, omt, 1, N))),
        Series::constant(omt, N)));
    {
        const Series even2 = builtinSeries(BuiltinKind::EVEN, PolyT(2), 1, N);
        const Series odd2 = builtinSeries(BuiltinKind::ODD, PolyT(2), 1, N);
        const Series two = Series::constant(PolyT(2), N);
        const Series denom = two + polyScale(PolyT(2), even2) -
                             polyScale(PolyT(2), x * odd2);
        const Series sumSide = two + polyScale(PolyT(2), even2) +
                               polyScale(PolyT(2), x * odd2);
        report.results.push_back(compareSeries("all-even closed form", B * denom,
                                               (oneSeries + x) * sumSide));
        report.results.push_back(compareSeries(
            "all-odd closed form", C * denom,
            two + polyScale(PolyT(2), even2) +
                polyScale(PolyT(2), (two + x) * odd2)));
    }
    {
        const Series lhs =
            A * (polyScale(PolyT(3), builtinSeries(BuiltinKind::EVEN, PolyT(-1), half, N)) -
                 polyScale(PolyT(3), builtinSeries(BuiltinKind::ODD, PolyT(3), half, N)));
        const Series rhs =
            polyScale(PolyT(3), builtinSeries(BuiltinKind::ODD, PolyT(-1), half, N)) +
            polyScale(PolyT(3), builtinSeries(BuiltinKind::EVEN, PolyT(3), half, N));
        report.results.push_back(
            compareSeries("peaks-odd-valleys-even closed form", lhs, rhs));
    }
    report.results.push_back(compareSeries(
        "up-down runs closed form",
        polyScale(opt, udr * (evenOmt2 - oddOmt2)),
        Series::constant(t, N) + evenOmt2 - polyScale(omt2, oddOmt2)));
    report.results.push_back(compareSeries(
        "monotone segments closed form",
        polyScale(opt * opt, br * (evenOmt2 - oddOmt2)),
        Series::constant(PolyT(2) * t, N) +
            polyScale(one + t * t, evenOmt2) + polyScale(omt2, x * evenOmt2) -
            polyScale(omt2, (oneSeries + x) * oddOmt2)));
    {
        CheckResult result{"up-down runs vs monotone segments", true, ""};
        for (int n = 2; n <= N; ++n) {
            const PolyT lhs = PolyT(2) * egfCoefficient(udr, n);
            const PolyT rhs = opt * egfCoefficient(br, n);
            if (lhs == rhs) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": 2*udr " +
                            polyToString(lhs) + " != (1+t)*br " + polyToString(rhs);
            break;
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"parity recurrences", true, ""};
        std::vector<BigInt> b, c;
        for (int n = 0; n <= N; ++n) {
            b.push_back(constantValue(egfCoefficient(B, n)));
            c.push_back(constantValue(egfCoefficient(C, n)));
        }
        for (int n = 1; n <= N && result.pass; ++n) {
            if (n % 2 == 1 && b[static_cast<std::size_t>(n)] !=
                                  n * b[static_cast<std::size_t>(n - 1)]) {
                result.pass = false;
                result.detail = "odd-size all-even count != n * previous at n=" +
                                std::to_string(n);
            }
            if (n % 2 == 0 && c[static_cast<std::size_t>(n)] !=
                                  n * c[static_cast<std::size_t>(n - 1)]) {
                result.pass = false;
                result.detail = "even-size all-odd count != n * previous at n=" +
                                std::to_string(n);
            }
            if (n % 2 == 0 &&
                c[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)]) {
                result.pass = false;
                result.detail = "even-size all-odd and all-even counts differ at n=" +
                                std::to_string(n);
            }
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"builtin hyperbolic relation", true, ""};
        for (const PolyT& p : {omt, PolyT(2), u2, omt2}) {
            const Series even = builtinSeries(BuiltinKind::EVEN, p, 1, N);
            const Series odd = builtinSeries(BuiltinKind::ODD, p, 1, N);
            const Series lhs = even * even - polyScale(p, odd * odd);
            if (lhs == oneSeries) continue;
            result.pass = false;
            result.detail = "EVEN^2 - p*ODD^2 != 1 for p = " + polyToString(p);
            break;
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"builtin exponential inverse", true, ""};
        for (const PolyT& p : {omt, t, u2}) {
            const Series pos = builtinSeries(BuiltinKind::EXPS, p, half, N);
            const Series neg = builtinSeries(BuiltinKind::EXPS, -p, half, N);
            if (pos * neg == oneSeries) continue;
            result.pass = false;
            result.detail = "EXPS(p,s)*EXPS(-p,s) != 1 for p = " + polyToString(p);
            break;
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"integral coefficients", true, ""};
        for (const std::string& name : recipeNames()) {
            try {
                const Series s = runStatRecipe(name, N);
                for (int n = 0; n <= N; ++n) egfCoefficient(s, n);
                if (name != "allOddPV") {
                    const Series alt = runStatRecipe(name, N, Hom::Alt);
                    for (int n = 0; n <= N; ++n) egfCoefficient(alt, n);
                }
            } catch (const Error& e) {
                result.pass = false;
                result.detail = name + ": " + e.what();
                break;
            }
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

CheckReport checkBijections(int maxN) {
    CheckReport report;
    report.suite = "bijections";
    {
        CheckResult result{"rotation into the all-even set", true, ""};
        for (int n = 1; n <= maxN && result.pass; n += 2) {
            const std::vector<Perm> domain = permsSatisfying(PredName::AllPVOdd, n);
            std::set<Perm> image;
            for (const Perm& p : domain) {
                const Perm q = shiftMap(p);
                if (!predicateHolds(PredName::AllPVEven, q)) {
                    result.pass = false;
                    result.detail = "image of " + permToString(p) +
                                    " leaves the all-even set";
                    break;
                }
                image.insert(q);
            }
            if (!result.pass) break;
            if (image.size() != domain.size()) {
                result.pass = false;
                result.detail = "not injective at n=" + std::to_string(n);
                break;
            }
            const long long evenCount = predicateCount(PredName::AllPVEven, n);
            if (n >= 3 && static_cast<long long>(image.size()) >= evenCount) {
                result.pass = false;
                result.detail = "expected strict inclusion at n=" + std::to_string(n);
            }
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"peak shift into the peaks-odd set", true, ""};
        for (int n = 4; n <= maxN && result.pass; ++n) {
            const std::vector<Perm> domain = permsSatisfying(PredName::AllPVEven, n);
            std::set<Perm> image;
            for (const Perm& p : domain) {
                const Perm q = pkshiftMap(p);
                if (!predicateHolds(PredName::AllPkOddValEven, q)) {
                    result.pass = false;
                    result.detail = "image of " + permToString(p) +
                                    " leaves the peaks-odd/valleys-even set";
                    break;
                }
                image.insert(q);
            }
            if (!result.pass) break;
            if (image.size() != domain.size()) {
                result.pass = false;
                result.detail = "not injective at n=" + std::to_string(n);
                break;
            }
            const long long target = predicateCount(PredName::AllPkOddValEven, n);
            if (static_cast<long long>(image.size()) >= target) {
                result.pass = false;
                result.detail = "expected strict inclusion at n=" + std::to_string(n);
            }
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"pinned peak shift image", true, ""};
        const Perm got = pkshiftMap(permFromString("287134596"));
        const Perm want = permFromString("278134956");
        if (got != want) {
            result.pass = false;
            result.detail = "got " + permToString(got);
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"append bijection, even to odd sizes", true, ""};
        for (int odd = 3; odd <= maxN && result.pass; odd += 2) {
            const int even = odd - 1;
            const std::vector<Perm> domain = permsSatisfying(PredName::AllPVEven, even);
            std::set<Perm> image;
            for (const Perm& p : domain)
                for (int m = 1; m <= odd; ++m) {
                    const Perm q = appendMap(p, m);
                    if (!predicateHolds(PredName::AllPVEven, q)) {
                        result.pass = false;
                        result.detail = "append(" + permToString(p) + "," +
                                        std::to_string(m) +
                                        ") leaves the all-even set";
                        break;
                    }
                    image.insert(q);
                }
            const long long target = predicateCount(PredName::AllPVEven, odd);
            if (result.pass &&
                (image.size() != domain.size() * static_cast<std::size_t>(odd) ||
                 static_cast<long long>(image.size()) != target)) {
                result.pass = false;
                result.detail = "image size " + std::to_string(image.size()) +
                                " at n=" + std::to_string(odd) + ", want " +
                                std::to_string(target);
            }
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"append bijection, odd to even sizes", true, ""};
        for (int even = 2; even <= maxN && result.pass; even += 2) {
            const int odd = even - 1;
            const std::vector<Perm> domain = permsSatisfying(PredName::AllPVOdd, odd);
            std::set<Perm> image;
            for (const Perm& p : domain)
                for (int m = 1; m <= even; ++m) {
                    const Perm q = appendMap(p, m);
                    if (!predicateHolds(PredName::AllPVOdd, q)) {
                        result.pass = false;
                        result.detail = "append(" + permToString(p) + "," +
                                        std::to_string(m) +
                                        ") leaves the all-odd set";
                        break;
                    }
                    image.insert(q);
                }
            const long long target = predicateCount(PredName::AllPVOdd, even);
            if (result.pass &&
                (image.size() != domain.size() * static_cast<std::size_t>(even) ||
                 static_cast<long long>(image.size()) != target)) {
                result.pass = false;
                result.detail = "image size " + std::to_string(image.size()) +
                                " at n=" + std::to_string(even) + ", want " +
                                std::to_string(target);
            }
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"valleys-odd doubling", true, ""};
        for (int n = 1; n <= maxN; n += 2) {
            const long long d = predicateCount(PredName::AllValOdd, n);
            const long long c = predicateCount(PredName::AllPVOdd, n);
            const long long factor = 1LL << ((n - 1) / 2);
            if (d == factor * c) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": " + std::to_string(d) +
                            " != 2^" + std::to_string((n - 1) / 2) + " * " +
                            std::to_string(c);
            break;
        }
        report.results.push_back(std::move(result));
    }
    {
        CheckResult result{"alternating permutation counts", true, ""};
        const EulerTable table = eulerNumbers(maxN);
        for (int n = 0; n <= maxN; ++n) {
            const PolyT asPoly = statPolynomial(StatName::As, n, std::max(n, 9));
            const Rational count = asPoly.coeff(n);
            if (count == Rational(table.at(n))) continue;
            result.pass = false;
            result.detail = "n=" + std::to_string(n) + ": " +
                            rationalToString(count) + " alternating permutations";
            break;
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

} // namespace runcount
