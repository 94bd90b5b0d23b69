#include "doctest.h"

#include "runcount/engine.hpp"
#include "runcount/errors.hpp"
#include "runcount/recipe_doc.hpp"

using namespace runcount;

TEST_CASE("document fixture reproduces the built-in all-even series") {
    const RecipeDocument doc =
        parseRecipeDocumentFile("fixtures/alleven_doc.json");
    CHECK(doc.networks.size() == 2);
    CHECK(doc.lets.size() == 1);
    const int N = 12;
    CHECK(evalRecipeDocument(doc, N) == runStatRecipe("allEvenPV", N));
}

TEST_CASE("inline networks and let bindings") {
    const char* text = R"({
      "networks": {
        "zigzag": {
          "inline": {"vertices": 2, "start": [1], "end": [1],
                     "arcs": [{"from": 1, "to": 2, "lengths": {"finite": [2]}},
                              {"from": 2, "to": 1, "lengths": {"finite": [3]}}]},
          "hom": "perm"
        }
      },
      "lets": [
        {"name": "base", "expr": {"entry": "zigzag"}},
        {"name": "shifted", "expr": {"product": [{"named": "base"},
                                                  {"monomial": {"power": 1}}]}}
      ],
      "expr": {"sum": [{"named": "shifted"},
                       {"scale": {"c": "-1", "of": {"named": "shifted"}}},
                       {"named": "base"}]}
    })";
    const RecipeDocument doc = parseRecipeDocument(text);
    const int N = 8;
    const Series direct = networkSeries(
        parseNetworkFile("fixtures/sec23.json"), Hom::Perm, N);
    CHECK(evalRecipeDocument(doc, N) == direct);
}

TEST_CASE("document schema violations") {
    CHECK_THROWS_AS(parseRecipeDocument("{nope"), ParseError);
    CHECK_THROWS_AS(parseRecipeDocument("[]"), SchemaError);
    CHECK_THROWS_AS(parseRecipeDocument(R"({"networks": {}})"), SchemaError);
    // a node must carry exactly one tag
    CHECK_THROWS_AS(parseRecipeDocument(
                        R"({"expr": {"entry": "g", "named": "x"}})"),
                    SchemaError);
    CHECK_THROWS_AS(parseRecipeDocument(R"({"expr": {"frobnicate": 1}})"),
                    SchemaError);
    // network entries need exactly one of file/inline
    CHECK_THROWS_AS(
        parseRecipeDocument(
            R"({"networks": {"g": {"hom": "perm"}}, "expr": {"entry": "g"}})"),
        SchemaError);
    CHECK_THROWS_AS(
        parseRecipeDocument(
            R"({"networks": {"g": {"file": "a.json", "inline": {}}}, "expr": {"entry": "g"}})"),
        SchemaError);
    // referencing an unknown network only fails at evaluation time
    const RecipeDocument doc =
        parseRecipeDocument(R"({"expr": {"entry": "ghost"}})");
    CHECK_THROWS_AS(evalRecipeDocument(doc, 4), UnknownLabel);
}

TEST_CASE("relative network paths resolve against the document directory") {
    const RecipeDocument doc = parseRecipeDocument(
        R"({"networks": {"g": {"file": "sec23.json"}}, "expr": {"entry": "g"}})",
        "fixtures");
    const int N = 6;
    CHECK(evalRecipeDocument(doc, N) ==
          networkSeries(parseNetworkFile("fixtures/sec23.json"), Hom::Perm, N));
}
