#include "runcount/oracle.hpp"

#include "runcount/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <thread>

namespace runcount {

void requirePerm(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw DomainViolation("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm permFromString(const std::string& text) {
    Perm p;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                p.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw ParseError("bad permutation letter '" + item + "'");
            }
        }
    } else {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch < '1' || ch > '9')
                throw ParseError(std::string("bad permutation digit '") + ch + "'");
            p.push_back(ch - '0');
        }
    }
    requirePerm(p);
    return p;
}

std::string permToString(const Perm& p) {
    std::string out;
    const bool digits = p.size() <= 9;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

namespace {

/* All position tests below are 1-based to match the usual conventions;
   `p` is the raw letter buffer of length n. */

bool isPeak(const int* p, int n, int i) {
    return i >= 2 && i <= n - 1 && p[i - 2] < p[i - 1] && p[i - 1] > p[i];
}

bool isValley(const int* p, int n, int i) {
    return i >= 2 && i <= n - 1 && p[i - 2] > p[i - 1] && p[i - 1] < p[i];
}

int countDescents(const int* p, int n) {
    int c = 0;
    for (int i = 1; i < n; ++i) c += p[i - 1] > p[i];
    return c;
}

int countAltDescents(const int* p, int n) {
    int c = 0;
    for (int i = 1; i < n; ++i)
        c += (i % 2 == 1) ? p[i - 1] > p[i] : p[i - 1] < p[i];
    return c;
}

int countPeaks(const int* p, int n) {
    int c = 0;
    for (int i = 2; i <= n - 1; ++i) c += isPeak(p, n, i);
    return c;
}

int countValleys(const int* p, int n) {
    int c = 0;
    for (int i = 2; i <= n - 1; ++i) c += isValley(p, n, i);
    return c;
}

int countDoubleAscents(const int* p, int n) {
    int c = 0;
    for (int i = 2; i <= n - 1; ++i) c += p[i - 2] < p[i - 1] && p[i - 1] < p[i];
    return c;
}

int countDoubleDescents(const int* p, int n) {
    int c = 0;
    for (int i = 2; i <= n - 1; ++i) c += p[i - 2] > p[i - 1] && p[i - 1] > p[i];
    return c;
}

/* Maximal monotone segments of length >= 2 = maximal constant-sign blocks
   of the ascent/descent sequence. */
int countBiruns(const int* p, int n) {
    int c = 0;
    for (int i = 1; i < n; ++i) {
        const bool up = p[i - 1] < p[i];
        if (i == 1 || up != (p[i - 2] < p[i - 1])) ++c;
    }
    return c;
}

int countUpDownRuns(const int* p, int n) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    return countBiruns(p, n) + (p[0] > p[1] ? 1 : 0);
}

/* Longest subsequence following the down-up pattern s1 > s2 < s3 > ...
   down[j]/up[j]: longest such ending at j whose final step descends/ascends. */
int longestAlternating(const int* p, int n) {
    if (n == 0) return 0;
    std::vector<int> down(static_cast<std::size_t>(n), 0);
    std::vector<int> up(static_cast<std::size_t>(n), 0);
    int best = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (p[i] > p[j])
                down[j] = std::max(down[j], std::max(2, up[i] + 1));
            else if (down[i] >= 2)
                up[j] = std::max(up[j], down[i] + 1);
        }
        best = std::max(best, std::max(down[j], up[j]));
    }
    return best;
}

int statValueRaw(StatName s, const int* p, int n) {
    switch (s) {
    case StatName::Des:
        return countDescents(p, n);
    case StatName::AltDes:
        return countAltDescents(p, n);
    case StatName::Pk:
        return countPeaks(p, n);
    case StatName::Val:
        return countValleys(p, n);
    case StatName::Lpk:
        return countPeaks(p, n) + (n >= 2 && p[0] > p[1] ? 1 : 0);
    case StatName::Rpk:
        return countPeaks(p, n) + (n >= 2 && p[n - 2] < p[n - 1] ? 1 : 0);
    case StatName::Lrpk:
        if (n == 1) return 1;
        return countPeaks(p, n) + (n >= 2 && p[0] > p[1] ? 1 : 0) +
               (n >= 2 && p[n - 2] < p[n - 1] ? 1 : 0);
    case StatName::Dasc:
        return countDoubleAscents(p, n);
    case StatName::Ddes:
        return countDoubleDescents(p, n);
    case StatName::Rdasc:
        return countDoubleAscents(p, n) + (n >= 2 && p[n - 2] < p[n - 1] ? 1 : 0);
    case StatName::Lrdasc:
        if (n == 1) return 1;
        return countDoubleAscents(p, n) + (n >= 2 && p[0] < p[1] ? 1 : 0) +
               (n >= 2 && p[n - 2] < p[n - 1] ? 1 : 0);
    case StatName::Br:
        return countBiruns(p, n);
    case StatName::Udr:
        return countUpDownRuns(p, n);
    case StatName::As:
        return longestAlternating(p, n);
    }
    throw Error("unreachable statistic tag");
}

bool predHoldsRaw(PredName pred, const int* p, int n, int m) {
    switch (pred) {
    case PredName::AllPkOddValEven:
        for (int i = 2; i <= n - 1; ++i) {
            if (isPeak(p, n, i) && i % 2 == 0) return false;
            if (isValley(p, n, i) && i % 2 == 1) return false;
        }
        return true;
    case PredName::AllPVEven:
        for (int i = 3; i <= n - 1; i += 2)
            if (isPeak(p, n, i) || isValley(p, n, i)) return false;
        return true;
    case PredName::AllPVOdd:
        for (int i = 2; i <= n - 1; i += 2)
            if (isPeak(p, n, i) || isValley(p, n, i)) return false;
        return true;
    case PredName::AllValOdd:
        for (int i = 2; i <= n - 1; ++i)
            if (isValley(p, n, i) && i % 2 == 0) return false;
        return true;
    case PredName::IncRunsBelow: {
        int run = 1;
        for (int i = 1; i < n; ++i) {
            run = (p[i - 1] < p[i]) ? run + 1 : 1;
            if (run >= m) return false;
        }
        return n == 0 || 1 < m;
    }
    case PredName::AltRunsBelow: {
        int run = 1;
        for (int i = 1; i < n; ++i) {
            const bool altdes = (i % 2 == 1) ? p[i - 1] > p[i] : p[i - 1] < p[i];
            run = altdes ? 1 : run + 1;
            if (run >= m) return false;
        }
        return n == 0 || 1 < m;
    }
    }
    throw Error("unreachable predicate tag");
}

void requireStatCap(int n, int cap) {
    if (n < 0) throw DomainViolation("permutation size must be nonnegative");
    if (cap < 0 || cap > kStatCapMax)
        throw CapExceeded("statistic cap must be between 0 and " +
                          std::to_string(kStatCapMax));
    if (n > cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
}

void requireRunLimit(PredName pred, int m) {
    if ((pred == PredName::IncRunsBelow || pred == PredName::AltRunsBelow) && m < 1)
        throw DomainViolation("run-length limit m must be positive");
}

PolyT countsToPoly(const std::vector<long long>& counts) {
    std::vector<Rational> coeffs;
    for (long long c : counts) coeffs.emplace_back(c);
    PolyT poly(std::move(coeffs));
    poly.normalize();
    return poly;
}

} // namespace

const std::vector<StatName>& allStatNames() {
    static const std::vector<StatName> names = {
        StatName::Des,  StatName::AltDes, StatName::Pk,     StatName::Val,
        StatName::Lpk,  StatName::Rpk,    StatName::Lrpk,   StatName::Dasc,
        StatName::Ddes, StatName::Rdasc,  StatName::Lrdasc, StatName::Br,
        StatName::Udr,  StatName::As,
    };
    return names;
}

std::string statNameString(StatName s) {
    switch (s) {
    case StatName::Des: return "des";
    case StatName::AltDes: return "altdes";
    case StatName::Pk: return "pk";
    case StatName::Val: return "val";
    case StatName::Lpk: return "lpk";
    case StatName::Rpk: return "rpk";
    case StatName::Lrpk: return "lrpk";
    case StatName::Dasc: return "dasc";
    case StatName::Ddes: return "ddes";
    case StatName::Rdasc: return "rdasc";
    case StatName::Lrdasc: return "lrdasc";
    case StatName::Br: return "br";
    case StatName::Udr: return "udr";
    case StatName::As: return "as";
    }
    throw Error("unreachable statistic tag");
}

StatName statNameFromString(const std::string& name) {
    for (StatName s : allStatNames())
        if (statNameString(s) == name) return s;
    throw UnknownLabel("unknown statistic '" + name + "'");
}

int statValue(StatName s, const Perm& p) {
    return statValueRaw(s, p.data(), static_cast<int>(p.size()));
}

PolyT statPolynomial(StatName s, int n, int cap) {
    requireStatCap(n, cap);
    std::vector<long long> counts(static_cast<std::size_t>(n) + 2, 0);
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        ++counts[static_cast<std::size_t>(statValueRaw(s, p.data(), n))];
    } while (std::next_permutation(p.begin(), p.end()));
    return countsToPoly(counts);
}

std::map<StatName, PolyT> statTable(int n, int cap) {
    requireStatCap(n, cap);
    const auto& names = allStatNames();
    std::vector<std::vector<long long>> counts(
        names.size(), std::vector<long long>(static_cast<std::size_t>(n) + 2, 0));
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        for (std::size_t s = 0; s < names.size(); ++s)
            ++counts[s][static_cast<std::size_t>(statValueRaw(names[s], p.data(), n))];
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<StatName, PolyT> table;
    for (std::size_t s = 0; s < names.size(); ++s)
        table.emplace(names[s], countsToPoly(counts[s]));
    return table;
}

const std::vector<PredName>& allPredNames() {
    static const std::vector<PredName> names = {
        PredName::AllPkOddValEven, PredName::AllPVEven,    PredName::AllPVOdd,
        PredName::AllValOdd,       PredName::IncRunsBelow, PredName::AltRunsBelow,
    };
    return names;
}

std::string predNameString(PredName p) {
    switch (p) {
    case PredName::AllPkOddValEven: return "allPkOddValEven";
    case PredName::AllPVEven: return "allPVEven";
    case PredName::AllPVOdd: return "allPVOdd";
    case PredName::AllValOdd: return "allValOdd";
    case PredName::IncRunsBelow: return "incRunsBelow";
    case PredName::AltRunsBelow: return "altRunsBelow";
    }
    throw Error("unreachable predicate tag");
}

PredName predNameFromString(const std::string& name) {
    for (PredName p : allPredNames())
        if (predNameString(p) == name) return p;
    throw UnknownLabel("unknown predicate '" + name + "'");
}

bool predicateHolds(PredName pred, const Perm& p, int m) {
    requireRunLimit(pred, m);
    return predHoldsRaw(pred, p.data(), static_cast<int>(p.size()), m);
}

long long predicateCount(PredName pred, int n, int m) {
    requireRunLimit(pred, m);
    if (n < 0) throw DomainViolation("permutation size must be nonnegative");
    if (n > kPredCap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds predicate cap " +
                          std::to_string(kPredCap));
    if (n == 0) return 1; // the empty permutation satisfies every predicate
    if (n <= 9) {
        long long count = 0;
        Perm p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 1);
        do {
            count += predHoldsRaw(pred, p.data(), n, m);
        } while (std::next_permutation(p.begin(), p.end()));
        return count;
    }
    /* One worker per first letter; each permutes the tail in place. */
    std::vector<long long> partial(static_cast<std::size_t>(n), 0);
    std::vector<std::thread> workers;
    for (int v = 1; v <= n; ++v) {
        workers.emplace_back([pred, n, m, v, &partial] {
            Perm p;
            p.push_back(v);
            for (int u = 1; u <= n; ++u)
                if (u != v) p.push_back(u);
            long long count = 0;
            do {
                count += predHoldsRaw(pred, p.data(), n, m);
            } while (std::next_permutation(p.begin() + 1, p.end()));
            partial[static_cast<std::size_t>(v - 1)] = count;
        });
    }
    for (std::thread& th : workers) th.join();
    long long total = 0;
    for (long long c : partial) total += c;
    return total;
}

namespace {

long long compositionCount(const Composition& L, int cap, bool alternating) {
    const int n = L.total();
    requireStatCap(n, cap);
    long long count = 0;
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        const Composition c = alternating ? altDescentComposition(p) : descentComposition(p);
        count += c == L;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace

long long betaBrute(const Composition& L, int cap) {
    return compositionCount(L, cap, false);
}

long long betaHatBrute(const Composition& L, int cap) {
    return compositionCount(L, cap, true);
}

Perm shiftMap(const Perm& p) {
    requirePerm(p);
    if (p.size() % 2 == 0 || !predicateHolds(PredName::AllPVOdd, p))
        throw DomainViolation(
            "shift needs odd length with all peaks and valleys odd");
    Perm q(p.begin() + 1, p.end());
    q.push_back(p.front());
    return q;
}

Perm pkshiftMap(const Perm& p) {
    requirePerm(p);
    const int n = static_cast<int>(p.size());
    if (n < 4 || !predicateHolds(PredName::AllPVEven, p))
        throw DomainViolation(
            "pkshift needs n >= 4 with all peaks and valleys even");
    Perm q = p;
    for (int k = 2; k <= n - 1; ++k) {
        if (!isPeak(p.data(), n, k)) continue;
        if (k <= n - 2)
            std::swap(q[static_cast<std::size_t>(k - 1)], q[static_cast<std::size_t>(k)]);
        else
            std::swap(q[static_cast<std::size_t>(n - 3)], q[static_cast<std::size_t>(n - 2)]);
    }
    return q;
}

Perm appendMap(const Perm& p, int m) {
    requirePerm(p);
    const int n = static_cast<int>(p.size());
    if (m < 1 || m > n + 1)
        throw DomainViolation("append letter must be between 1 and n+1");
    Perm q;
    for (int v : p) q.push_back(v >= m ? v + 1 : v);
    q.push_back(m);
    return q;
}

} // namespace runcount
