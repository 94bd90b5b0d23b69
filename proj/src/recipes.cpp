#include "runcount/engine.hpp"
#include "runcount/errors.hpp"

#include <map>
#include <utility>
#include <vector>

namespace runcount {

namespace {

LengthSet only1() { return LengthSet::finiteSet({1}); }
LengthSet atLeast(int k) { return LengthSet::arithmetic(k, 1); }
LengthSet everyLength() { return LengthSet::arithmetic(1, 1); }

WeightRule w1() { return WeightRule{}; }

/* constant weight c(t) */
WeightRule wc(PolyT c) {
    WeightRule w;
    w.c = std::move(c);
    return w;
}

/* weight t^(k+beta) for a run of length k */
WeightRule wpow(int beta) {
    WeightRule w;
    w.alpha = 1;
    w.beta = beta;
    return w;
}

Arc arc(int from, int to, LengthSet lengths, WeightRule weight = WeightRule{}) {
    Arc a;
    a.from = from;
    a.to = to;
    a.lengths = std::move(lengths);
    a.weight = std::move(weight);
    return a;
}

/* Vertices: 1 source, 2 after a short run, 3 after a long run, 4 after the
   final run.  Walks 1 -> 4 realize every composition with at least two
   parts exactly once; nonfinal long runs are weighted t. */
RunNetwork peakNetwork() {
    RunNetwork net;
    net.m = 4;
    const PolyT t = PolyT::t();
    net.arcs = {
        arc(1, 2, only1()),          arc(1, 3, atLeast(2), wc(t)),
        arc(2, 2, only1()),          arc(2, 3, atLeast(2), wc(t)),
        arc(3, 2, only1()),          arc(3, 3, atLeast(2), wc(t)),
        arc(2, 4, everyLength()),    arc(3, 4, everyLength()),
    };
    net.start = {1};
    net.end = {4};
    return net;
}

/* Vertices: 1 source, 2 after a short run, 3 after a long run; every vertex
   is accepting, so every composition (including single-part ones) is
   realized exactly once.  Long runs -- final included -- get `longWeight`. */
RunNetwork splitLoopNetwork(WeightRule longWeight) {
    RunNetwork net;
    net.m = 3;
    for (int v : {1, 2, 3}) {
        net.arcs.push_back(arc(v, 2, only1()));
        net.arcs.push_back(arc(v, 3, atLeast(2), longWeight));
    }
    net.start = {1};
    net.end = {1, 2, 3};
    return net;
}

/* peakNetwork topology with run-length-dependent weights: nonfinal long
   runs t^(k-2), final runs t^(k-1); the initial run is weighted
   `initialShort` / `initialLong` on lengths 1 / >= 2. */
RunNetwork doubleAscentEndNetwork(WeightRule initialShort, WeightRule initialLong) {
    RunNetwork net;
    net.m = 4;
    net.arcs = {
        arc(1, 2, only1(), initialShort), arc(1, 3, atLeast(2), initialLong),
        arc(2, 2, only1()),               arc(2, 3, atLeast(2), wpow(-2)),
        arc(3, 2, only1()),               arc(3, 3, atLeast(2), wpow(-2)),
        arc(2, 4, everyLength(), wpow(-1)),
        arc(3, 4, everyLength(), wpow(-1)),
    };
    net.start = {1};
    net.end = {4};
    return net;
}

/* Vertices: 1 source, 2/3 after a short/long nonfinal run, 4/5 after a
   short/long final run.  Nonfinal long runs other than the first count
   t^2 (segment plus the descent entering it), other long runs count t;
   the initial short run is weighted `initialShort`. */
RunNetwork monotoneSegmentNetwork(WeightRule initialShort) {
    RunNetwork net;
    net.m = 5;
    const PolyT t = PolyT::t();
    const PolyT t2 = t * t;
    net.arcs = {
        arc(1, 2, only1(), initialShort), arc(1, 3, atLeast(2), wc(t)),
        arc(2, 2, only1()),               arc(2, 3, atLeast(2), wc(t2)),
        arc(3, 2, only1()),               arc(3, 3, atLeast(2), wc(t2)),
        arc(2, 4, only1()),               arc(2, 5, atLeast(2), wc(t)),
        arc(3, 4, only1()),               arc(3, 5, atLeast(2), wc(t)),
    };
    net.start = {1};
    net.end = {4, 5};
    return net;
}

RunNetwork loopNetwork(LengthSet lengths, WeightRule weight) {
    RunNetwork net;
    net.m = 1;
    net.arcs = {arc(1, 1, std::move(lengths), std::move(weight))};
    net.start = {1};
    net.end = {1};
    return net;
}

/* All-runs-even-pattern networks used for the peaks-and-valleys-even count.
   First: walks whose first run is long (even), alternating with short runs;
   second: walks whose first run is short. */
RunNetwork evenPatternFirstLong() {
    RunNetwork net;
    net.m = 5;
    net.arcs = {
        arc(1, 2, LengthSet::arithmetic(2, 2)),
        arc(2, 3, only1()),
        arc(3, 2, LengthSet::arithmetic(3, 2)),
        arc(3, 4, only1()),
        arc(4, 3, only1()),
        arc(3, 5, atLeast(2)),
    };
    net.start = {1};
    net.end = {5};
    return net;
}

RunNetwork evenPatternFirstShort() {
    RunNetwork net;
    net.m = 5;
    net.arcs = {
        arc(1, 2, only1()),
        arc(2, 3, only1()),
        arc(3, 2, only1()),
        arc(2, 4, LengthSet::arithmetic(3, 2)),
        arc(4, 2, only1()),
        arc(2, 5, atLeast(2)),
    };
    net.start = {1};
    net.end = {5};
    return net;
}

Recipe exps(PolyT p) { return Recipe::builtinNode(BuiltinKind::EXPS, std::move(p), 1); }
Recipe constant(PolyT c) { return Recipe::monomialX(0, std::move(c)); }

/* Networks plus the correction tree, phrased with the plain exponential
   builtins; the alternating scaling swaps those for their analogs. */
struct Construction {
    std::map<std::string, RunNetwork> networks;
    Recipe tree;
};

Construction buildConstruction(const std::string& name, int m) {
    const PolyT one(1);
    const PolyT t = PolyT::t();
    Construction c;
    if (name == "pk" || name == "lrpk") {
        c.networks.emplace("runs", peakNetwork());
        Recipe pk = Recipe::sum({Recipe::entry("runs"), exps(one)});
        c.tree = (name == "pk")
                     ? std::move(pk)
                     : Recipe::sum({Recipe::scalarMul(t, std::move(pk)), constant(one - t)});
    } else if (name == "rpk") {
        c.networks.emplace("runs", splitLoopNetwork(wc(t)));
        c.tree = Recipe::entry("runs");
    } else if (name == "dasc") {
        c.networks.emplace("runs", splitLoopNetwork(wpow(-2)));
        c.tree = Recipe::entry("runs");
    } else if (name == "rdasc") {
        c.networks.emplace("runs", doubleAscentEndNetwork(w1(), wpow(-2)));
        c.tree = Recipe::sum({
            Recipe::entry("runs"),
            Recipe::divExactPoly(t, Recipe::sum({exps(t), constant(PolyT(-1))})),
            constant(one),
        });
    } else if (name == "lrdasc") {
        c.networks.emplace("runs", doubleAscentEndNetwork(wpow(-1), wpow(-1)));
        c.tree = Recipe::sum({Recipe::entry("runs"), exps(t)});
    } else if (name == "br" || name == "udr") {
        c.networks.emplace("runs", monotoneSegmentNetwork(name == "br" ? w1() : wc(t)));
        Recipe scaled =
            Recipe::scalarMul(t, Recipe::sum({Recipe::entry("runs"), exps(one)}));
        c.tree = (name == "br")
                     ? Recipe::sum({std::move(scaled), constant(one - t),
                                    Recipe::monomialX(1, one - t)})
                     : Recipe::sum({std::move(scaled), constant(one - t)});
    } else if (name == "eulerian" || name == "altEulerian") {
        c.networks.emplace("runs", loopNetwork(everyLength(), wc(t)));
        c.tree = Recipe::entry("runs");
    } else if (name == "davidBarton" || name == "gz2014") {
        const int limit = (name == "gz2014") ? 3 : m;
        if (limit < 2 || limit > 64)
            throw DomainViolation("run-length limit m must be between 2 and 64");
        std::vector<int> lengths;
        for (int k = 1; k < limit; ++k) lengths.push_back(k);
        c.networks.emplace("runs", loopNetwork(LengthSet::finiteSet(lengths), w1()));
        c.tree = Recipe::entry("runs");
    } else if (name == "allEvenPV") {
        c.networks.emplace("firstLong", evenPatternFirstLong());
        c.networks.emplace("firstShort", evenPatternFirstShort());
        const PolyT two(2);
        c.tree = Recipe::sum({
            Recipe::scalarMul(two, Recipe::entry("firstLong")),
            Recipe::scalarMul(two, Recipe::entry("firstShort")),
            Recipe::scalarMul(two, exps(one)),
            Recipe::monomialX(1, PolyT(-1)),
            constant(PolyT(-1)),
        });
    } else {
        throw UnknownLabel("unknown recipe '" + name + "'");
    }
    return c;
}

/* Perm <-> Alt swaps every plain exponential builtin for its alternating
   analog (and back), leaving polynomial corrections untouched. */
Recipe swapExponentials(Recipe r) {
    if (r.kind == Recipe::Kind::Builtin) {
        if (r.builtin == BuiltinKind::EXPS)
            r.builtin = BuiltinKind::EULS;
        else if (r.builtin == BuiltinKind::EULS)
            r.builtin = BuiltinKind::EXPS;
    }
    for (Recipe& child : r.children) child = swapExponentials(std::move(child));
    return r;
}

const std::vector<RecipeSpec>& catalog() {
    static const std::vector<RecipeSpec> specs = {
        {"pk", "interior peaks; short/long split network plus exp(x)", Hom::Perm},
        {"rpk", "peaks, final position included; short/long loop network", Hom::Perm},
        {"lrpk", "peaks, both endpoints included; t * pk with adjusted constant",
         Hom::Perm},
        {"dasc", "double ascents; loop network, long runs weighted t^(k-2)",
         Hom::Perm},
        {"rdasc",
         "double ascents, final position included; split network plus "
         "(exp(t x) - 1)/t + 1",
         Hom::Perm},
        {"lrdasc",
         "double ascents, both endpoints included; split network plus exp(t x)",
         Hom::Perm},
        {"br", "maximal monotone segments; t * (entry + exp(x)) + (1 - t)(1 + x)",
         Hom::Perm},
        {"udr", "up-down runs; t * (entry + exp(x)) + 1 - t", Hom::Perm},
        {"eulerian", "descents, weighted t^(des+1); one-vertex loop with weight t",
         Hom::Perm},
        {"altEulerian",
         "alternating descents, weighted t^(altdes+1); one-vertex loop with "
         "weight t",
         Hom::Alt},
        {"davidBarton",
         "permutations with every increasing run shorter than m; one-vertex "
         "loop on lengths 1..m-1",
         Hom::Perm},
        {"gz2014",
         "permutations with every alternating run shorter than 3 (equivalently "
         "all peaks odd and all valleys even)",
         Hom::Alt},
        {"allEvenPV",
         "permutations with all peaks and valleys even; 2*(entry sums + exp(x)) "
         "- x - 1 over two pattern networks",
         Hom::Perm},
        {"allOddPV",
         "permutations with all peaks and valleys odd; parity shift of the "
         "all-even series",
         Hom::Perm},
    };
    return specs;
}

} // namespace

std::vector<std::string> recipeNames() {
    std::vector<std::string> names;
    for (const RecipeSpec& spec : catalog()) names.push_back(spec.name);
    return names;
}

const RecipeSpec& recipeSpec(const std::string& name) {
    for (const RecipeSpec& spec : catalog())
        if (spec.name == name) return spec;
    throw UnknownLabel("unknown recipe '" + name + "'");
}

Series runStatRecipe(const std::string& name, int N, std::optional<Hom> homOverride,
                     int m) {
    const RecipeSpec& spec = recipeSpec(name);
    Hom hom = spec.hom;
    if (homOverride) {
        if (*homOverride == Hom::Word)
            throw DomainViolation("scaling override must be perm or alt");
        hom = *homOverride;
    }

    if (name == "allOddPV") {
        /* Coefficientwise from the all-even series: the two counts agree at
           even sizes, and the odd-size count is the next even-size count
           divided by its size -- so evaluate one degree higher and fold. */
        if (hom != Hom::Perm)
            throw DomainViolation("allOddPV supports only the perm scaling");
        Series even = runStatRecipe("allEvenPV", N + 1, std::nullopt, m);
        Series odd(N);
        for (int n = 0; n <= N; ++n)
            odd.at(n) = (n % 2 == 0) ? even.at(n) : even.at(n + 1);
        return odd;
    }

    Construction c = buildConstruction(name, m);
    if (hom == Hom::Alt) c.tree = swapExponentials(std::move(c.tree));

    std::map<std::string, Series> nets;
    for (const auto& [label, net] : c.networks)
        nets.emplace(label, networkSeries(net, hom, N));
    return evalRecipe(c.tree, {}, nets, N);
}

} // namespace runcount
