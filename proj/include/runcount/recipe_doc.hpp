#ifndef RUNCOUNT_RECIPE_DOC_HPP
#define RUNCOUNT_RECIPE_DOC_HPP

#include "runcount/engine.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace runcount {

/* A JSON-shaped recipe: named networks (inline or by file), a chain of
   labeled intermediate series, and a final expression.

   {
     "networks": { "g": {"file": "net.json", "hom": "perm"},
                   "h": {"inline": { ...network schema... }} },
     "lets": [ {"name": "base", "expr": <node>}, ... ],
     "expr": <node>
   }

   Nodes mirror the Recipe kinds, one tag each:
     {"entry": "g"}                          counting-matrix entry sum
     {"named": "base"}                       earlier let (or engine-provided)
     {"builtin": {"kind": "EXPS", "p": "t", "s": "1"}}
     {"monomial": {"power": 1, "coeff": "1 - t"}}
     {"sum": [...]}, {"product": [...]}
     {"scale": {"c": "2", "of": <node>}}
     {"recip": <node>}
     {"divpoly": {"p": "t", "of": <node>}}                                  */
struct RecipeDocument {
    struct NetworkEntry {
        RunNetwork net;
        Hom hom = Hom::Perm;
    };

    std::map<std::string, NetworkEntry> networks;
    std::vector<std::pair<std::string, Recipe>> lets;
    Recipe expr;
};

/* `baseDir` anchors relative "file" references. */
RecipeDocument parseRecipeDocument(const std::string& jsonText,
                                   const std::string& baseDir = "");
RecipeDocument parseRecipeDocumentFile(const std::string& path);

/* Compute every network series at bound N, fold the lets left to right,
   and evaluate the final expression. */
Series evalRecipeDocument(const RecipeDocument& doc, int N);

} // namespace runcount

#endif
