#include "runcount/engine.hpp"

#include "runcount/errors.hpp"

#include <memory>

namespace runcount {

Hom homFromName(const std::string& name) {
    if (name == "word") return Hom::Word;
    if (name == "perm") return Hom::Perm;
    if (name == "alt") return Hom::Alt;
    throw SchemaError("unknown hom '" + name + "' (expected word, perm, or alt)");
}

std::string homName(Hom h) {
    switch (h) {
    case Hom::Word: return "word";
    case Hom::Perm: return "perm";
    case Hom::Alt: return "alt";
    }
    return "?";
}

std::function<Rational(int)> homScaling(Hom h, int N) {
    switch (h) {
    case Hom::Word:
        return [](int) { return Rational(1); };
    case Hom::Perm:
        return [](int n) { return Rational(1) / Rational(factorial(n)); };
    case Hom::Alt: {
        auto table = std::make_shared<EulerTable>(eulerNumbers(N));
        return [table](int n) { return Rational(table->at(n)) / Rational(factorial(n)); };
    }
    }
    throw Error("unreachable hom");
}

SeriesMatrix weightMatrix(const RunNetwork& net, int N) {
    SeriesMatrix w(net.m, N);
    for (const Arc& arc : net.arcs) {
        Series entry(N);
        for (int k : lengthSetMembers(arc.lengths, N))
            entry.at(k) = arc.weight.weightFor(k);
        w.at(arc.from, arc.to) = entry;
    }
    return w;
}

SeriesMatrix vMatrix(const SeriesMatrix& w) {
    return matInverse(matAdd(SeriesMatrix::identity(w.m, w.bound), w));
}

SeriesMatrix countingMatrix(const SeriesMatrix& v, Hom h) {
    return matInverse(matScaleCoeffs(v, homScaling(h, v.bound)));
}

PolyT egfCoefficient(const Series& s, int n) {
    PolyT scaled = PolyT(Rational(factorial(n))) * s.at(n);
    for (int k = 0; k <= scaled.degree(); ++k)
        if (!isInteger(scaled.coeff(k)))
            throw Error("coefficient of x^" + std::to_string(n) +
                        " is not integral after scaling by n!: " + polyToString(scaled));
    return scaled;
}

Series networkSeries(const RunNetwork& net, Hom h, int N) {
    if (auto violation = validateNetwork(net, N))
        throw SchemaError("network fails the uniqueness condition: " + violation->message());
    const SeriesMatrix counting = countingMatrix(vMatrix(weightMatrix(net, N)), h);
    Series sum(N);
    for (int s : net.start)
        for (int e : net.end) sum = sum + counting.at(s, e);
    if (h != Hom::Word)
        for (int n = 0; n <= N; ++n) egfCoefficient(sum, n); // integrality assertion
    return sum;
}

Recipe Recipe::entry(std::string network) {
    Recipe r;
    r.kind = Kind::EntryRef;
    r.name = std::move(network);
    return r;
}

Recipe Recipe::named(std::string label) {
    Recipe r;
    r.kind = Kind::NamedSeries;
    r.name = std::move(label);
    return r;
}

Recipe Recipe::builtinNode(BuiltinKind kind, PolyT p, Rational s) {
    Recipe r;
    r.kind = Kind::Builtin;
    r.builtin = kind;
    r.builtinP = std::move(p);
    r.builtinS = std::move(s);
    return r;
}

Recipe Recipe::monomialX(int power, PolyT coeff) {
    Recipe r;
    r.kind = Kind::MonomialX;
    r.power = power;
    r.scalar = std::move(coeff);
    return r;
}

Recipe Recipe::sum(std::vector<Recipe> terms) {
    Recipe r;
    r.kind = Kind::Sum;
    r.children = std::move(terms);
    return r;
}

Recipe Recipe::product(std::vector<Recipe> factors) {
    Recipe r;
    r.kind = Kind::Product;
    r.children = std::move(factors);
    return r;
}

Recipe Recipe::scalarMul(PolyT scalar, Recipe child) {
    Recipe r;
    r.kind = Kind::ScalarMul;
    r.scalar = std::move(scalar);
    r.children.push_back(std::move(child));
    return r;
}

Recipe Recipe::recip(Recipe child) {
    Recipe r;
    r.kind = Kind::Recip;
    r.children.push_back(std::move(child));
    return r;
}

Recipe Recipe::divExactPoly(PolyT scalar, Recipe child) {
    Recipe r;
    r.kind = Kind::DivExactPoly;
    r.scalar = std::move(scalar);
    r.children.push_back(std::move(child));
    return r;
}

Series evalRecipe(const Recipe& r, const std::map<std::string, Series>& env,
                  const std::map<std::string, Series>& nets, int N) {
    switch (r.kind) {
    case Recipe::Kind::EntryRef: {
        auto it = nets.find(r.name);
        if (it == nets.end()) throw UnknownLabel("unknown network '" + r.name + "'");
        return it->second;
    }
    case Recipe::Kind::NamedSeries: {
        auto it = env.find(r.name);
        if (it == env.end()) throw UnknownLabel("unknown series label '" + r.name + "'");
        return it->second;
    }
    case Recipe::Kind::Builtin:
        return builtinSeries(r.builtin, r.builtinP, r.builtinS, N);
    case Recipe::Kind::MonomialX:
        return Series::monomialX(r.power, r.scalar, N);
    case Recipe::Kind::Sum: {
        Series acc(N);
        for (const Recipe& child : r.children) acc = acc + evalRecipe(child, env, nets, N);
        return acc;
    }
    case Recipe::Kind::Product: {
        Series acc = Series::one(N);
        for (const Recipe& child : r.children) acc = acc * evalRecipe(child, env, nets, N);
        return acc;
    }
    case Recipe::Kind::ScalarMul: {
        Series child = evalRecipe(r.children.at(0), env, nets, N);
        for (int n = 0; n <= N; ++n) child.at(n) = r.scalar * child.at(n);
        return child;
    }
    case Recipe::Kind::Recip:
        return seriesRecip(evalRecipe(r.children.at(0), env, nets, N));
    case Recipe::Kind::DivExactPoly:
        return seriesDivExactPoly(evalRecipe(r.children.at(0), env, nets, N), r.scalar);
    }
    throw Error("unreachable recipe node");
}

} // namespace runcount
