#include "runcount/compositions.hpp"

#include "runcount/errors.hpp"

namespace runcount {

int Composition::total() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

std::string Composition::toString() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Composition compFromDescentSet(const std::set<int>& S, int n) {
    if (n < 0) throw InvalidDescentSet("negative n");
    for (int s : S)
        if (s < 1 || s > n - 1)
            throw InvalidDescentSet("descent " + std::to_string(s) + " outside 1.." +
                                    std::to_string(n - 1));
    Composition L;
    int prev = 0;
    for (int s : S) {
        L.parts.push_back(s - prev);
        prev = s;
    }
    if (n > prev) L.parts.push_back(n - prev);
    return L;
}

std::set<int> descentSetFromComp(const Composition& L) {
    std::set<int> S;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < L.parts.size(); ++i) {
        acc += L.parts[i];
        S.insert(acc);
    }
    return S;
}

Composition descentComposition(const std::vector<int>& word) {
    Composition L;
    if (word.empty()) return L;
    int runLen = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i - 1] > word[i]) {
            L.parts.push_back(runLen);
            runLen = 1;
        } else {
            ++runLen;
        }
    }
    L.parts.push_back(runLen);
    return L;
}

Composition altDescentComposition(const std::vector<int>& perm) {
    Composition L;
    if (perm.empty()) return L;
    int runLen = 1;
    for (std::size_t i = 1; i < perm.size(); ++i) {
        /* 1-based position of the potential alternating descent */
        const int pos = static_cast<int>(i);
        const bool altdes =
            (pos % 2 == 1) ? (perm[i - 1] > perm[i]) : (perm[i - 1] < perm[i]);
        if (altdes) {
            L.parts.push_back(runLen);
            runLen = 1;
        } else {
            ++runLen;
        }
    }
    L.parts.push_back(runLen);
    return L;
}

BigInt ribbonCount(const Composition& L) {
    /* beta(L) = n! * sum over subsets T of D(L) of (-1)^(l(L)-l(M)) / prod M_i!
       where M = C(T).  Exact rationals inside, integrality asserted. */
    const int n = L.total();
    const std::set<int> fullSet = descentSetFromComp(L);
    const std::vector<int> descents(fullSet.begin(), fullSet.end());
    const int j = static_cast<int>(descents.size()); // l(L) - 1 for n >= 1
    Rational sum = 0;
    for (unsigned mask = 0; mask < (1u << j); ++mask) {
        std::set<int> T;
        for (int b = 0; b < j; ++b)
            if (mask & (1u << b)) T.insert(descents[static_cast<std::size_t>(b)]);
        const Composition M = compFromDescentSet(T, n);
        Rational denom = 1;
        for (int part : M.parts) denom *= Rational(factorial(part));
        const int sign = ((L.length() - M.length()) % 2 == 0) ? 1 : -1;
        sum += Rational(sign) / denom;
    }
    sum *= Rational(factorial(n));
    return toInteger(sum);
}

std::vector<Composition> compositionsOf(int n) {
    std::vector<Composition> all;
    Composition cur;
    /* depth-first with ascending first parts gives lexicographic order */
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            all.push_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.parts.push_back(p);
            self(self, remaining - p);
            cur.parts.pop_back();
        }
    };
    rec(rec, n);
    return all;
}

} // namespace runcount
