#include "runcount/recipe_doc.hpp"

#include "runcount/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace runcount {

namespace {

using nlohmann::json;

const json& requireField(const json& j, const std::string& key,
                         const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError("missing '" + key + "' in " + where);
    return *it;
}

std::string requireString(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + " must be a string");
    return j.get<std::string>();
}

PolyT polyField(const json& j, const std::string& key, const std::string& where,
                const PolyT& fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    return parsePolyT(requireString(*it, where + "." + key));
}

Recipe parseNode(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1)
        throw SchemaError(where + " must be an object with exactly one node tag");
    const std::string tag = j.begin().key();
    const json& body = j.begin().value();
    if (tag == "entry") return Recipe::entry(requireString(body, where + ".entry"));
    if (tag == "named") return Recipe::named(requireString(body, where + ".named"));
    if (tag == "builtin") {
        if (!body.is_object()) throw SchemaError(where + ".builtin must be an object");
        const BuiltinKind kind = builtinKindFromName(
            requireString(requireField(body, "kind", where + ".builtin"), "kind"));
        const PolyT p = polyField(body, "p", where + ".builtin", PolyT(1));
        Rational s = 1;
        if (auto it = body.find("s"); it != body.end())
            s = parseRational(requireString(*it, where + ".builtin.s"));
        return Recipe::builtinNode(kind, p, s);
    }
    if (tag == "monomial") {
        if (!body.is_object()) throw SchemaError(where + ".monomial must be an object");
        const json& power = requireField(body, "power", where + ".monomial");
        if (!power.is_number_integer() || power.get<int>() < 0)
            throw SchemaError(where + ".monomial.power must be a nonnegative integer");
        return Recipe::monomialX(power.get<int>(),
                                 polyField(body, "coeff", where + ".monomial", PolyT(1)));
    }
    if (tag == "sum" || tag == "product") {
        if (!body.is_array())
            throw SchemaError(where + "." + tag + " must be an array");
        std::vector<Recipe> children;
        for (std::size_t i = 0; i < body.size(); ++i)
            children.push_back(
                parseNode(body[i], where + "." + tag + "[" + std::to_string(i) + "]"));
        return tag == "sum" ? Recipe::sum(std::move(children))
                            : Recipe::product(std::move(children));
    }
    if (tag == "scale") {
        if (!body.is_object()) throw SchemaError(where + ".scale must be an object");
        return Recipe::scalarMul(
            polyField(body, "c", where + ".scale", PolyT(1)),
            parseNode(requireField(body, "of", where + ".scale"), where + ".scale.of"));
    }
    if (tag == "recip") return Recipe::recip(parseNode(body, where + ".recip"));
    if (tag == "divpoly") {
        if (!body.is_object()) throw SchemaError(where + ".divpoly must be an object");
        return Recipe::divExactPoly(
            polyField(body, "p", where + ".divpoly", PolyT::t()),
            parseNode(requireField(body, "of", where + ".divpoly"),
                      where + ".divpoly.of"));
    }
    throw SchemaError("unknown node tag '" + tag + "' in " + where);
}

std::string joinPath(const std::string& baseDir, const std::string& path) {
    if (baseDir.empty() || path.empty() || path.front() == '/') return path;
    return baseDir + "/" + path;
}

} // namespace

RecipeDocument parseRecipeDocument(const std::string& jsonText,
                                   const std::string& baseDir) {
    json j;
    try {
        j = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad recipe JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("recipe document must be a JSON object");

    RecipeDocument doc;
    if (auto nets = j.find("networks"); nets != j.end()) {
        if (!nets->is_object()) throw SchemaError("'networks' must be an object");
        for (const auto& [name, entry] : nets->items()) {
            if (!entry.is_object())
                throw SchemaError("network '" + name + "' must be an object");
            RecipeDocument::NetworkEntry parsed;
            const bool hasFile = entry.contains("file");
            const bool hasInline = entry.contains("inline");
            if (hasFile == hasInline)
                throw SchemaError("network '" + name +
                                  "' needs exactly one of 'file' or 'inline'");
            if (hasFile) {
                const std::string path =
                    requireString(entry.at("file"), "network '" + name + "'.file");
                parsed.net = parseNetworkFile(joinPath(baseDir, path));
            } else {
                parsed.net = parseNetwork(entry.at("inline").dump());
            }
            if (auto hom = entry.find("hom"); hom != entry.end())
                parsed.hom = homFromName(requireString(*hom, "network hom"));
            doc.networks.emplace(name, std::move(parsed));
        }
    }
    if (auto lets = j.find("lets"); lets != j.end()) {
        if (!lets->is_array()) throw SchemaError("'lets' must be an array");
        for (std::size_t i = 0; i < lets->size(); ++i) {
            const json& item = (*lets)[i];
            const std::string where = "lets[" + std::to_string(i) + "]";
            if (!item.is_object()) throw SchemaError(where + " must be an object");
            std::string name =
                requireString(requireField(item, "name", where), where + ".name");
            Recipe expr = parseNode(requireField(item, "expr", where), where + ".expr");
            doc.lets.emplace_back(std::move(name), std::move(expr));
        }
    }
    doc.expr = parseNode(requireField(j, "expr", "recipe document"), "expr");
    return doc;
}

RecipeDocument parseRecipeDocumentFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open recipe document '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string baseDir;
    if (auto slash = path.find_last_of('/'); slash != std::string::npos)
        baseDir = path.substr(0, slash);
    return parseRecipeDocument(buffer.str(), baseDir);
}

Series evalRecipeDocument(const RecipeDocument& doc, int N) {
    std::map<std::string, Series> nets;
    for (const auto& [name, entry] : doc.networks)
        nets.emplace(name, networkSeries(entry.net, entry.hom, N));
    std::map<std::string, Series> env;
    for (const auto& [name, expr] : doc.lets)
        env.insert_or_assign(name, evalRecipe(expr, env, nets, N));
    return evalRecipe(doc.expr, env, nets, N);
}

} // namespace runcount
