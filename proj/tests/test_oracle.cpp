#include "doctest.h"

#include "runcount/errors.hpp"
#include "runcount/oracle.hpp"

using namespace runcount;

TEST_CASE("permutation parsing and printing") {
    CHECK(permFromString("5736214") == Perm{5, 7, 3, 6, 2, 1, 4});
    CHECK(permFromString("10,2,1,3,4,5,6,7,8,9").size() == 10);
    CHECK(permToString({5, 7, 3, 6, 2, 1, 4}) == "5736214");
    CHECK(permToString(permFromString("10,2,1,3,4,5,6,7,8,9")) ==
          "10,2,1,3,4,5,6,7,8,9");
    CHECK(permFromString("").empty());
    CHECK_THROWS_AS(permFromString("12a"), ParseError);
    CHECK_THROWS_AS(permFromString("122"), DomainViolation);
    CHECK_THROWS_AS(permFromString("13"), DomainViolation);
    CHECK_THROWS_AS(requirePerm({2, 2}), DomainViolation);
}

TEST_CASE("statistic values on pinned permutations") {
    const Perm a = permFromString("5736214");
    CHECK(statValue(StatName::Pk, a) == 2);
    CHECK(statValue(StatName::Val, a) == 2);
    CHECK(statValue(StatName::Des, a) == 3);

    const Perm b = permFromString("51378624");
    CHECK(statValue(StatName::Br, b) == 4);
    CHECK(statValue(StatName::Udr, b) == 5);
    CHECK(statValue(StatName::As, b) == 5);

    const Perm single = permFromString("1");
    CHECK(statValue(StatName::Lrpk, single) == 1);
    CHECK(statValue(StatName::Lrdasc, single) == 1);
    CHECK(statValue(StatName::Pk, single) == 0);
    CHECK(statValue(StatName::Udr, single) == 1);
    CHECK(statValue(StatName::As, single) == 1);

    CHECK(statValue(StatName::AltDes, permFromString("123")) == 1);
    CHECK(statValue(StatName::Lpk, permFromString("213")) == 1);
    CHECK(statValue(StatName::Rpk, permFromString("132")) == 1);
    CHECK(statValue(StatName::Rpk, permFromString("12")) == 1);
    CHECK(statValue(StatName::Dasc, permFromString("123")) == 1);
    CHECK(statValue(StatName::Ddes, permFromString("321")) == 1);
    CHECK(statValue(StatName::Rdasc, permFromString("12")) == 1);
    CHECK(statValue(StatName::Lrdasc, permFromString("123")) == 3);
}

TEST_CASE("statistic names round-trip") {
    CHECK(allStatNames().size() == 14);
    for (StatName s : allStatNames())
        CHECK(statNameFromString(statNameString(s)) == s);
    CHECK_THROWS_AS(statNameFromString("peaks"), UnknownLabel);
}

TEST_CASE("distribution polynomials over small symmetric groups") {
    CHECK(statPolynomial(StatName::Des, 3) ==
          PolyT(std::vector<Rational>{1, 4, 1}));
    CHECK(statPolynomial(StatName::Rpk, 4) ==
          PolyT(std::vector<Rational>{1, 18, 5}));
    CHECK(statPolynomial(StatName::Rdasc, 4) ==
          PolyT(std::vector<Rational>{9, 11, 3, 1}));
    CHECK(statPolynomial(StatName::Des, 0) == PolyT(1));
    CHECK(statPolynomial(StatName::Udr, 4) ==
          PolyT(std::vector<Rational>{0, 1, 7, 11, 5}));

    const auto table = statTable(4);
    CHECK(table.at(StatName::Pk) == statPolynomial(StatName::Pk, 4));
    CHECK(table.at(StatName::Val) == table.at(StatName::Pk)); // equidistributed
    CHECK(table.at(StatName::Dasc) == table.at(StatName::Ddes));

    CHECK_THROWS_AS(statPolynomial(StatName::Des, 10), CapExceeded);
    CHECK(statPolynomial(StatName::Des, 10, 10).evalAt(1) == Rational(3628800));
    CHECK_THROWS_AS(statPolynomial(StatName::Des, 11, 11), CapExceeded);
    CHECK_THROWS_AS(statPolynomial(StatName::Des, -1), DomainViolation);
}

TEST_CASE("predicate counting") {
    CHECK(predicateCount(PredName::AllPkOddValEven, 6) == 229);
    CHECK(predicateCount(PredName::AllPVEven, 5) == 40);
    CHECK(predicateCount(PredName::AllPVOdd, 5) == 14);
    CHECK(predicateCount(PredName::AllValOdd, 5) == 56); // 2^2 * 14
    CHECK(predicateCount(PredName::AllPVEven, 0) == 1);
    CHECK(predicateCount(PredName::IncRunsBelow, 4, 3) == 17);
    CHECK(predicateCount(PredName::IncRunsBelow, 4, 2) == 1);
    CHECK(predicateCount(PredName::AltRunsBelow, 6, 3) == 229);
    CHECK(predicateCount(PredName::AltRunsBelow, 5, 2) == 16); // down-up zigzags
    CHECK_THROWS_AS(predicateCount(PredName::AllPVEven, 13), CapExceeded);
    CHECK_THROWS_AS(predicateCount(PredName::IncRunsBelow, 4, 0), DomainViolation);

    for (PredName p : allPredNames())
        CHECK(predNameFromString(predNameString(p)) == p);
    CHECK_THROWS_AS(predNameFromString("allEven"), UnknownLabel);
}

TEST_CASE("threaded and single-threaded predicate sweeps agree") {
    // n = 10 takes the per-first-letter threaded path
    CHECK(predicateCount(PredName::AllPVEven, 10) == 51040);
}

TEST_CASE("composition oracles") {
    CHECK(betaBrute(Composition{{2, 1}}) == 2);
    CHECK(betaBrute(Composition{{2, 3}}) == 9);
    CHECK(betaBrute(Composition{}) == 1);
    CHECK(betaHatBrute(Composition{{2, 1}}) == 1); // only 123
    CHECK_THROWS_AS(betaBrute(Composition{{7, 3}}), CapExceeded);
    CHECK(betaBrute(Composition{{7, 3}}, 10) > 0);
}

TEST_CASE("structure-preserving maps") {
    CHECK(shiftMap(permFromString("123")) == permFromString("231"));
    CHECK(pkshiftMap(permFromString("287134596")) == permFromString("278134956"));
    CHECK(appendMap(permFromString("1432"), 3) == permFromString("15423"));
    CHECK(appendMap(permFromString(""), 1) == permFromString("1"));

    // domain checks: shift needs odd length and all peaks/valleys odd
    CHECK_THROWS_AS(shiftMap(permFromString("12")), DomainViolation);
    CHECK_THROWS_AS(shiftMap(permFromString("132")), DomainViolation);
    // pkshift needs length >= 4 and all peaks/valleys even
    CHECK_THROWS_AS(pkshiftMap(permFromString("123")), DomainViolation);
    CHECK_THROWS_AS(pkshiftMap(permFromString("1324")), DomainViolation);
    // append letter must lie in 1..n+1
    CHECK_THROWS_AS(appendMap(permFromString("12"), 4), DomainViolation);
    CHECK_THROWS_AS(appendMap(permFromString("12"), 0), DomainViolation);
}
