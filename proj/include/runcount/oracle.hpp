#ifndef RUNCOUNT_ORACLE_HPP
#define RUNCOUNT_ORACLE_HPP

#include "runcount/compositions.hpp"
#include "runcount/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace runcount {

/* A permutation of 1..n as a sequence of its letters. */
using Perm = std::vector<int>;

/* Throws DomainViolation unless every value in 1..size appears exactly once. */
void requirePerm(const Perm& p);

/* "287134596" for n <= 9, comma-separated ("10,2,1,...") above that. */
Perm permFromString(const std::string& text);
std::string permToString(const Perm& p);

enum class StatName {
    Des,    // descents
    AltDes, // alternating descents
    Pk,     // interior peaks
    Val,    // interior valleys
    Lpk,    // peaks, position 1 included when it starts a descent
    Rpk,    // peaks, position n included when it ends an ascent
    Lrpk,   // left or right peaks; the singleton counts 1
    Dasc,   // double ascents
    Ddes,   // double descents
    Rdasc,  // double ascents, position n included after an ascent
    Lrdasc, // left or right double ascents; the singleton counts 1
    Br,     // maximal monotone segments of length >= 2
    Udr,    // up-down runs: biruns plus an initial short run
    As,     // longest alternating (down-up) subsequence
};

const std::vector<StatName>& allStatNames();
StatName statNameFromString(const std::string& name);
std::string statNameString(StatName s);

int statValue(StatName s, const Perm& p);

/* Full-enumeration caps: statistics default to 9 with 10 available behind
   an explicit cap bump; predicate counts run threaded up to 12. */
constexpr int kStatCapDefault = 9;
constexpr int kStatCapMax = 10;
constexpr int kPredCap = 12;

/* Sum over all n-permutations of t^stat. */
PolyT statPolynomial(StatName s, int n, int cap = kStatCapDefault);

/* Every statistic in one sweep of S_n. */
std::map<StatName, PolyT> statTable(int n, int cap = kStatCapDefault);

enum class PredName {
    AllPkOddValEven, // every peak odd and every valley even
    AllPVEven,       // every peak and valley even
    AllPVOdd,        // every peak and valley odd
    AllValOdd,       // every valley odd
    IncRunsBelow,    // every increasing run shorter than m
    AltRunsBelow,    // every alternating run shorter than m
};

const std::vector<PredName>& allPredNames();
PredName predNameFromString(const std::string& name);
std::string predNameString(PredName p);

bool predicateHolds(PredName pred, const Perm& p, int m = 3);

/* Number of n-permutations satisfying the predicate; enumeration is split
   across threads by first letter for large n. */
long long predicateCount(PredName pred, int n, int m = 3);

/* Number of permutations with (alternating) descent composition L. */
long long betaBrute(const Composition& L, int cap = kStatCapDefault);
long long betaHatBrute(const Composition& L, int cap = kStatCapDefault);

/* pi_2 ... pi_n pi_1; domain: odd length with all peaks and valleys odd.
   Lands in the all-even set. */
Perm shiftMap(const Perm& p);

/* Swap the letters around each peak (the pair before it when the peak sits
   at position n-1); domain: n >= 4 with all peaks and valleys even.  Lands
   in the peaks-odd / valleys-even set. */
Perm pkshiftMap(const Perm& p);

/* Bump every letter >= m by one and append m; domain: 1 <= m <= n+1. */
Perm appendMap(const Perm& p, int m);

} // namespace runcount

#endif
