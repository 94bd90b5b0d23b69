#ifndef RUNCOUNT_COMPOSITIONS_HPP
#define RUNCOUNT_COMPOSITIONS_HPP

#include "runcount/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace runcount {

/* Composition of n: ordered list of positive parts.  The empty list is the
   unique composition of 0. */
struct Composition {
    std::vector<int> parts;

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator<(const Composition& o) const { return parts < o.parts; }

    /* "(2,3,1)"; "()" for the empty composition */
    std::string toString() const;
};

/* C(S) = (s1, s2-s1, ..., n-sj) for S = {s1<...<sj} within {1..n-1}. */
Composition compFromDescentSet(const std::set<int>& S, int n);

/* D(L) = {L1, L1+L2, ...}; inverse of compFromDescentSet. */
std::set<int> descentSetFromComp(const Composition& L);

/* Lengths of the maximal weakly increasing runs of a word (strict descents
   split runs).  Permutations are the words with distinct letters. */
Composition descentComposition(const std::vector<int>& word);

/* Run lengths between alternating descents of a permutation: position i is an
   alternating descent when i is odd and p[i] > p[i+1], or i is even and
   p[i] < p[i+1] (1-based). */
Composition altDescentComposition(const std::vector<int>& perm);

/* Number of permutations of n with descent composition exactly L, by
   inclusion-exclusion over coarsenings; exact, integrality asserted. */
BigInt ribbonCount(const Composition& L);

/* All 2^(n-1) compositions of n in lexicographic order of their part lists. */
std::vector<Composition> compositionsOf(int n);

} // namespace runcount

#endif
