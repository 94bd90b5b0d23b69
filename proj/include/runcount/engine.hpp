#ifndef RUNCOUNT_ENGINE_HPP
#define RUNCOUNT_ENGINE_HPP

#include "runcount/euler.hpp"
#include "runcount/network.hpp"
#include "runcount/series_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace runcount {

/* Coefficient scaling applied between the two matrix inversions:
     Word -> mu(n) = 1      (plain composition-counting identity)
     Perm -> mu(n) = 1/n!   (permutation EGF)
     Alt  -> mu(n) = E_n/n! (alternating-analog EGF)                       */
enum class Hom { Word, Perm, Alt };

Hom homFromName(const std::string& name);
std::string homName(Hom h);

/* The scaling function for a hom, valid for degrees 0..N. */
std::function<Rational(int)> homScaling(Hom h, int N);

/* Entry (i,j) = sum over admissible lengths k <= N of weight(k) * x^k. */
SeriesMatrix weightMatrix(const RunNetwork& net, int N);

/* (I + W)^{-1} */
SeriesMatrix vMatrix(const SeriesMatrix& w);

/* Inverse of the hom-scaled V: entry (i,j) is the generating function for
   weighted descent compositions realized by walks i -> j. */
SeriesMatrix countingMatrix(const SeriesMatrix& v, Hom h);

/* Full pipeline for one network: validate at N, build W, invert twice, and
   sum the counting-matrix entries over start x end.  For Perm/Alt the n!-
   scaled coefficients are asserted to be integer polynomials. */
Series networkSeries(const RunNetwork& net, Hom h, int N);

/* n! * [x^n] with integrality asserted -- the row printed for EGF output. */
PolyT egfCoefficient(const Series& s, int n);

/* Expression tree over computed network series, named series, builtins,
   monomials in x, and PolyT scalars. */
struct Recipe {
    enum class Kind {
        EntryRef,     // sum of counting-matrix entries of a named network
        NamedSeries,  // label resolved from the evaluation environment
        Builtin,      // EXPS/EVEN/ODD/EULS
        MonomialX,    // coeff * x^power
        Sum,
        Product,
        ScalarMul,    // scalar * child
        Recip,        // child^{-1}
        DivExactPoly, // child / scalar, exact
    };

    Kind kind = Kind::Sum;
    std::string name;                    // EntryRef network / NamedSeries label
    BuiltinKind builtin = BuiltinKind::EXPS;
    PolyT builtinP;                      // Builtin p argument
    Rational builtinS = 1;               // Builtin s argument
    int power = 0;                       // MonomialX
    PolyT scalar;                        // MonomialX coeff / ScalarMul / DivExactPoly
    std::vector<Recipe> children;

    static Recipe entry(std::string network);
    static Recipe named(std::string label);
    static Recipe builtinNode(BuiltinKind kind, PolyT p, Rational s);
    static Recipe monomialX(int power, PolyT coeff);
    static Recipe sum(std::vector<Recipe> terms);
    static Recipe product(std::vector<Recipe> factors);
    static Recipe scalarMul(PolyT scalar, Recipe child);
    static Recipe recip(Recipe child);
    static Recipe divExactPoly(PolyT scalar, Recipe child);
};

/* Evaluate the tree.  `env` resolves NamedSeries labels; `nets` resolves
   EntryRef nodes to already-computed network series.  Unknown labels raise
   UnknownLabel; Recip/DivExactPoly propagate their operand errors. */
Series evalRecipe(const Recipe& r, const std::map<std::string, Series>& env,
                  const std::map<std::string, Series>& nets, int N);

/* Built-in catalog: every statistic / counting series the engine knows how
   to construct, keyed by name.  davidBarton takes the run-length limit m
   (runs of length < m); all other recipes ignore the parameter. */
struct RecipeSpec {
    std::string name;
    std::string description; // the construction, displayed on test failure
    Hom hom = Hom::Perm;     // documented hom; overridable for Perm <-> Alt
};

std::vector<std::string> recipeNames();
const RecipeSpec& recipeSpec(const std::string& name);

/* Evaluate a built-in recipe at bound N.  homOverride swaps Perm <-> Alt
   uniformly (corrections switch their exponential builtins to the
   alternating ones); word override is rejected. */
Series runStatRecipe(const std::string& name, int N,
                     std::optional<Hom> homOverride = std::nullopt, int m = 3);

} // namespace runcount

#endif
