#include "doctest.h"

#include "runcount/compositions.hpp"
#include "runcount/errors.hpp"
#include "runcount/oracle.hpp"

using namespace runcount;

TEST_CASE("descent sets and compositions are inverse encodings") {
    const Composition L{{2, 3, 1}};
    CHECK(L.total() == 6);
    CHECK(L.toString() == "(2,3,1)");
    CHECK(descentSetFromComp(L) == std::set<int>{2, 5});
    CHECK(compFromDescentSet({2, 5}, 6) == L);
    CHECK(compFromDescentSet({}, 4) == Composition{{4}});
    CHECK(compFromDescentSet({}, 0) == Composition{});
    CHECK(Composition{}.toString() == "()");
    CHECK_THROWS_AS(compFromDescentSet({4}, 4), InvalidDescentSet);
    CHECK_THROWS_AS(compFromDescentSet({0}, 4), InvalidDescentSet);
}

TEST_CASE("run decompositions of words and permutations") {
    CHECK(descentComposition({5, 7, 3, 6, 2, 1, 4}) == Composition{{2, 2, 1, 2}});
    CHECK(descentComposition({1, 2, 3}) == Composition{{3}});
    CHECK(descentComposition({3, 2, 1}) == Composition{{1, 1, 1}});
    CHECK(descentComposition({1, 1, 2}) == Composition{{3}}); // weak rises join
    CHECK(descentComposition({}) == Composition{});
    CHECK(altDescentComposition({1, 2, 3}) == Composition{{2, 1}});
    CHECK(altDescentComposition({1, 3, 2}) == Composition{{3}});
    CHECK(altDescentComposition({2, 1, 3}) == Composition{{1, 1, 1}});
    CHECK(altDescentComposition({}) == Composition{});
}

TEST_CASE("composition enumeration is complete and ordered") {
    const std::vector<Composition> all = compositionsOf(4);
    CHECK(all.size() == 8);
    CHECK(all.front() == Composition{{1, 1, 1, 1}});
    CHECK(all.back() == Composition{{4}});
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    CHECK(compositionsOf(0) == std::vector<Composition>{Composition{}});
}

TEST_CASE("ribbon numbers by inclusion-exclusion match brute force") {
    CHECK(ribbonCount(Composition{}) == 1);
    CHECK(ribbonCount(Composition{{2, 1}}) == 2);
    CHECK(ribbonCount(Composition{{2, 3}}) == 9);
    for (int n = 0; n <= 6; ++n) {
        BigInt total = 0;
        for (const Composition& L : compositionsOf(n)) {
            const BigInt viaFormula = ribbonCount(L);
            CHECK(viaFormula == BigInt(betaBrute(L)));
            total += viaFormula;
        }
        BigInt factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        CHECK(total == factorial);
    }
}

TEST_CASE("alternating ribbon numbers match the alternating oracle") {
    CHECK(betaHatBrute(Composition{{2, 3}}) > 0);
    long long total = 0;
    for (const Composition& L : compositionsOf(5)) total += betaHatBrute(L);
    CHECK(total == 120);
}
