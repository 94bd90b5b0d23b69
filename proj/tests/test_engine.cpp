#include "doctest.h"

#include "runcount/engine.hpp"
#include "runcount/errors.hpp"
#include "runcount/oracle.hpp"

#include <map>

using namespace runcount;

namespace {

/* Independent route to the counting series: enumerate every walk between the
   start/end sets (each composition is realized at most once in a valid
   network), weigh it, and count the permutations with that run decomposition
   directly.  Exponential in N, which is fine at N <= 8. */
std::vector<PolyT> walkBrute(const RunNetwork& net, int N, bool alternating) {
    std::vector<PolyT> rows(static_cast<std::size_t>(N) + 1);
    auto isEnd = [&](int v) {
        return std::find(net.end.begin(), net.end.end(), v) != net.end.end();
    };
    struct Frame {
        int vertex;
        int total;
        PolyT weight;
        Composition comp;
    };
    std::vector<Frame> stack;
    for (int s : net.start)
        stack.push_back({s, 0, PolyT(1), Composition{}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (isEnd(f.vertex)) {
            const long long count = alternating ? betaHatBrute(f.comp, N)
                                                : betaBrute(f.comp, N);
            rows[static_cast<std::size_t>(f.total)] =
                rows[static_cast<std::size_t>(f.total)] +
                f.weight * PolyT(Rational(count));
        }
        for (const Arc& arc : net.arcs) {
            if (arc.from != f.vertex) continue;
            for (int k : lengthSetMembers(arc.lengths, N - f.total)) {
                Frame next = f;
                next.vertex = arc.to;
                next.total += k;
                next.weight = next.weight * arc.weight.weightFor(k);
                next.comp.parts.push_back(k);
                stack.push_back(std::move(next));
            }
        }
    }
    return rows;
}

void checkAgainstWalkBrute(const RunNetwork& net, int N) {
    for (const Hom h : {Hom::Perm, Hom::Alt}) {
        const Series s = networkSeries(net, h, N);
        const std::vector<PolyT> brute = walkBrute(net, N, h == Hom::Alt);
        for (int n = 0; n <= N; ++n) {
            CAPTURE(n);
            CHECK(egfCoefficient(s, n) == brute[static_cast<std::size_t>(n)]);
        }
    }
}

} // namespace

TEST_CASE("hom scalings") {
    CHECK(homFromName("word") == Hom::Word);
    CHECK(homFromName("perm") == Hom::Perm);
    CHECK(homFromName("alt") == Hom::Alt);
    CHECK_THROWS_AS(homFromName("exp"), SchemaError);
    CHECK(homName(Hom::Alt) == "alt");

    const auto word = homScaling(Hom::Word, 6);
    const auto perm = homScaling(Hom::Perm, 6);
    const auto alt = homScaling(Hom::Alt, 6);
    CHECK(word(5) == Rational(1));
    CHECK(perm(4) == Rational(1, 24));
    CHECK(alt(5) == Rational(16, 120));
    CHECK(alt(0) == Rational(1));
}

TEST_CASE("word homomorphism inverts back to I + W") {
    const RunNetwork net = parseNetworkFile("fixtures/g1p1.json");
    const int N = 10;
    const SeriesMatrix w = weightMatrix(net, N);
    const SeriesMatrix counting = countingMatrix(vMatrix(w), Hom::Word);
    CHECK(counting == matAdd(SeriesMatrix::identity(net.m, N), w));
}

TEST_CASE("single-vertex networks reduce to the reciprocal formula") {
    const int N = 10;
    const RunNetwork loop = parseNetwork(
        R"({"vertices":1,"start":[1],"end":[1],"arcs":[{"from":1,"to":1,"lengths":{"finite":[1,2]}}]})");
    Series w(N);
    w.at(1) = PolyT(1);
    w.at(2) = PolyT(1);
    for (const Hom h : {Hom::Word, Hom::Perm, Hom::Alt}) {
        const Series direct = networkSeries(loop, h, N);
        const Series viaFormula = seriesRecip(
            scaleCoeffs(seriesRecip(Series::one(N) + w), homScaling(h, N)));
        CHECK(direct == viaFormula);
    }
}

TEST_CASE("network series agree with walk-by-walk enumeration") {
    SUBCASE("two-vertex alternating lengths") {
        checkAgainstWalkBrute(parseNetworkFile("fixtures/sec23.json"), 8);
    }
    SUBCASE("initial/interior/final run split") {
        checkAgainstWalkBrute(parseNetworkFile("fixtures/gp41.json"), 7);
    }
    SUBCASE("first-run-parity pattern network") {
        checkAgainstWalkBrute(parseNetworkFile("fixtures/g1p1.json"), 8);
    }
    SUBCASE("weighted loop marking run count") {
        const RunNetwork loop = parseNetwork(
            R"({"vertices":1,"start":[1],"end":[1],"arcs":[{"from":1,"to":1,"lengths":{"first":1,"step":1},"weight":{"c":"t"}}]})");
        checkAgainstWalkBrute(loop, 7);
    }
}

TEST_CASE("exponential coefficients assert integrality") {
    Series s = Series::zero(4);
    s.at(1) = PolyT(Rational(1, 2));
    CHECK_THROWS_AS(egfCoefficient(s, 1), Error);
    s.at(1) = PolyT(Rational(1, 2)) * PolyT(2);
    CHECK(egfCoefficient(s, 1) == PolyT(1));
    CHECK(egfCoefficient(Series::one(4), 0) == PolyT(1));
}

TEST_CASE("recipe expression nodes") {
    const int N = 6;
    std::map<std::string, Series> env;
    std::map<std::string, Series> nets;
    nets.emplace("g", networkSeries(parseNetworkFile("fixtures/sec23.json"),
                                    Hom::Perm, N));
    env.emplace("e", builtinSeries(BuiltinKind::EXPS, PolyT(1), 1, N));

    CHECK(evalRecipe(Recipe::entry("g"), env, nets, N) == nets.at("g"));
    CHECK(evalRecipe(Recipe::named("e"), env, nets, N) == env.at("e"));
    CHECK_THROWS_AS(evalRecipe(Recipe::entry("h"), env, nets, N), UnknownLabel);
    CHECK_THROWS_AS(evalRecipe(Recipe::named("f"), env, nets, N), UnknownLabel);

    const Series viaTree = evalRecipe(
        Recipe::sum({Recipe::product({Recipe::named("e"), Recipe::named("e")}),
                     Recipe::scalarMul(PolyT(-1), Recipe::builtinNode(
                                                      BuiltinKind::EXPS,
                                                      PolyT(2), Rational(1))),
                     Recipe::monomialX(3, PolyT(5))}),
        env, nets, N);
    CHECK(viaTree == Series::monomialX(3, PolyT(5), N));

    const Series reciprocal =
        evalRecipe(Recipe::recip(Recipe::named("e")), env, nets, N);
    CHECK(reciprocal == builtinSeries(BuiltinKind::EXPS, PolyT(-1), 1, N));

    const Series divided = evalRecipe(
        Recipe::divExactPoly(PolyT(2), Recipe::scalarMul(PolyT(2),
                                                         Recipe::named("e"))),
        env, nets, N);
    CHECK(divided == env.at("e"));
}

TEST_CASE("built-in recipe catalog") {
    CHECK(recipeNames().size() == 14);
    CHECK_THROWS_AS(recipeSpec("pq"), UnknownLabel);
    CHECK(recipeSpec("davidBarton").hom == Hom::Perm);
    CHECK(recipeSpec("gz2014").hom == Hom::Alt);

    const Series pk = runStatRecipe("pk", 6);
    CHECK(egfCoefficient(pk, 6) ==
          PolyT(std::vector<Rational>{32, 416, 272}));

    SUBCASE("run-length ceiling is validated") {
        CHECK_THROWS_AS(runStatRecipe("davidBarton", 6, std::nullopt, 1),
                        DomainViolation);
        CHECK_THROWS_AS(runStatRecipe("davidBarton", 6, std::nullopt, 65),
                        DomainViolation);
        const Series onlyShortRuns = runStatRecipe("davidBarton", 6, std::nullopt, 2);
        CHECK(egfCoefficient(onlyShortRuns, 4) == PolyT(1)); // reverse identity only
        const Series noRunOfThree = runStatRecipe("davidBarton", 6, std::nullopt, 3);
        CHECK(egfCoefficient(noRunOfThree, 3) == PolyT(5));
        CHECK(egfCoefficient(noRunOfThree, 4) == PolyT(17));
    }
    SUBCASE("hom overrides") {
        CHECK_THROWS_AS(runStatRecipe("pk", 6, Hom::Word), DomainViolation);
        CHECK_THROWS_AS(runStatRecipe("allOddPV", 6, Hom::Alt), DomainViolation);
        const Series viaOverride = runStatRecipe("davidBarton", 8, Hom::Alt, 3);
        const Series direct = runStatRecipe("gz2014", 8);
        CHECK(viaOverride == direct);
    }
    SUBCASE("unknown names") {
        CHECK_THROWS_AS(runStatRecipe("peaks", 4), UnknownLabel);
    }
}
