#ifndef RUNCOUNT_CHECKS_HPP
#define RUNCOUNT_CHECKS_HPP

#include "runcount/poly.hpp"

#include <string>
#include <vector>

namespace runcount {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // what differed, empty when passing
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> results;

    bool allPassed() const;
};

/* One line per result ("PASS name" / "FAIL name: detail") plus a summary. */
std::string formatReport(const CheckReport& report);

/* Golden tables: row n holds the degree-n polynomial.  CSV rows are
   "n,c0,c1,..." with coefficients by ascending t-power. */
std::vector<PolyT> parseGoldenCsv(const std::string& text);
std::vector<PolyT> loadGoldenCsvFile(const std::string& path);

/* The statistics with an embedded golden polynomial table (rows n = 0..9). */
const std::vector<std::string>& goldenTableNames();
const std::vector<PolyT>& embeddedGoldenTable(const std::string& name);

/* Counting sequences with all peaks odd + valleys even / all even / all odd,
   n = 0..12, as embedded golden data. */
struct GoldenSequences {
    std::vector<BigInt> a, b, c;
};
const GoldenSequences& embeddedGoldenSequences();

/* Every built-in polynomial table and counting sequence against the golden
   data; `goldenDir` switches from the embedded copies to CSV files. */
CheckReport checkTables(const std::string& goldenDir = "");

/* Engine recipes against brute-force statistic polynomials for n <= cap. */
CheckReport checkOracle(int cap = 8);

/* Closed-form, reciprocity, and parity identities at truncation bound N. */
CheckReport checkIdentities(int N = 12);

/* Injections, append bijections, and the alternating-count pins, n <= maxN. */
CheckReport checkBijections(int maxN = 9);

} // namespace runcount

#endif
