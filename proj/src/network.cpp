#include "runcount/network.hpp"

#include "runcount/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

namespace runcount {

LengthSet LengthSet::finiteSet(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw SchemaError("lengths.finite: empty length set");
    if (values.front() < 1) throw SchemaError("lengths.finite: lengths must be positive");
    LengthSet s;
    s.kind = Kind::Finite;
    s.finite = std::move(values);
    return s;
}

LengthSet LengthSet::arithmetic(int first, int step) {
    if (first < 1) throw SchemaError("lengths.first: must be >= 1");
    if (step < 1) throw SchemaError("lengths.step: must be >= 1");
    LengthSet s;
    s.kind = Kind::Arithmetic;
    s.first = first;
    s.step = step;
    return s;
}

int LengthSet::minLength() const {
    return kind == Kind::Finite ? finite.front() : first;
}

bool LengthSet::contains(int k) const {
    if (kind == Kind::Finite)
        return std::binary_search(finite.begin(), finite.end(), k);
    return k >= first && (k - first) % step == 0;
}

std::string LengthSet::toString() const {
    if (kind == Kind::Finite) {
        std::string out = "{";
        for (std::size_t i = 0; i < finite.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(finite[i]);
        }
        return out + "}";
    }
    return "{" + std::to_string(first) + "," + std::to_string(first + step) + "," +
           std::to_string(first + 2 * step) + ",...}";
}

std::vector<int> lengthSetMembers(const LengthSet& s, int N) {
    std::vector<int> out;
    if (s.kind == LengthSet::Kind::Finite) {
        for (int k : s.finite)
            if (k <= N) out.push_back(k);
    } else {
        for (int k = s.first; k <= N; k += s.step) out.push_back(k);
    }
    return out;
}

PolyT WeightRule::weightFor(int k) const {
    const int exponent = alpha * k + beta;
    if (exponent < 0)
        throw SchemaError("weight exponent alpha*k+beta = " + std::to_string(exponent) +
                          " negative at k = " + std::to_string(k));
    return c * PolyT::monomial(1, exponent);
}

const Arc* RunNetwork::arcBetween(int i, int j) const {
    for (const Arc& a : arcs)
        if (a.from == i && a.to == j) return &a;
    return nullptr;
}

std::string NetworkViolation::message() const {
    auto render = [](const std::vector<int>& walk) {
        std::string out;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (i) out += "->";
            out += std::to_string(walk[i]);
        }
        return out;
    };
    return "composition " + composition.toString() + " is realized by two distinct walks " +
           render(walkA) + " and " + render(walkB) + ", both from vertex " +
           std::to_string(from) + " to vertex " + std::to_string(to);
}

namespace {

/* State of the pairwise search: two partial walks from a common source that
   have consumed the same composition prefix, currently at vertices (u, v),
   having differed at some arc iff diverged. */
struct PairState {
    int u, v;
    bool diverged;
    bool operator<(const PairState& o) const {
        return std::tie(u, v, diverged) < std::tie(o.u, o.v, o.diverged);
    }
};

struct PairStep {
    PairState prev;
    int part; // run length consumed by this step; 0 marks the source state
};

} // namespace

std::optional<NetworkViolation> validateNetwork(const RunNetwork& net, int N) {
    /* Uniform-cost search over pairs of walks consuming identical parts; the
       cheapest reachable (e, e, diverged) state is the minimal violation.
       Equivalent to enumerating all walks of total <= N, but polynomial. */
    std::optional<NetworkViolation> best;
    int bestTotal = std::numeric_limits<int>::max();

    for (int source = 1; source <= net.m; ++source) {
        std::map<PairState, int> dist;
        std::map<PairState, PairStep> parent;
        using QueueItem = std::pair<int, PairState>;
        std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;

        const PairState init{source, source, false};
        dist[init] = 0;
        parent[init] = PairStep{init, 0};
        queue.push({0, init});

        while (!queue.empty()) {
            auto [d, state] = queue.top();
            queue.pop();
            if (d != dist[state]) continue; // stale entry
            if (d >= bestTotal) break;
            if (state.diverged && state.u == state.v) {
                /* reconstruct the two walks and the shared composition */
                NetworkViolation v;
                v.from = source;
                v.to = state.u;
                std::vector<int> partsRev;
                PairState cur = state;
                while (true) {
                    const PairStep& step = parent.at(cur);
                    if (step.part == 0) break;
                    partsRev.push_back(step.part);
                    v.walkA.push_back(cur.u);
                    v.walkB.push_back(cur.v);
                    cur = step.prev;
                }
                v.walkA.push_back(source);
                v.walkB.push_back(source);
                std::reverse(v.walkA.begin(), v.walkA.end());
                std::reverse(v.walkB.begin(), v.walkB.end());
                std::reverse(partsRev.begin(), partsRev.end());
                v.composition.parts = partsRev;
                best = v;
                bestTotal = d;
                break;
            }
            for (const Arc& arcU : net.arcs) {
                if (arcU.from != state.u) continue;
                for (const Arc& arcV : net.arcs) {
                    if (arcV.from != state.v) continue;
                    /* cheapest shared admissible length */
                    int shared = -1;
                    for (int k : lengthSetMembers(arcU.lengths, N - d)) {
                        if (arcV.lengths.contains(k)) {
                            shared = k;
                            break;
                        }
                    }
                    if (shared < 0) continue;
                    const PairState next{arcU.to, arcV.to,
                                         state.diverged || arcU.to != arcV.to};
                    const int nd = d + shared;
                    auto it = dist.find(next);
                    if (it == dist.end() || nd < it->second) {
                        dist[next] = nd;
                        parent[next] = PairStep{state, shared};
                        queue.push({nd, next});
                    }
                }
            }
        }
    }
    return best;
}

namespace {

using nlohmann::json;

int requireInt(const json& j, const std::string& field) {
    if (!j.contains(field)) throw SchemaError("missing field '" + field + "'");
    if (!j[field].is_number_integer())
        throw SchemaError("field '" + field + "' must be an integer");
    return j[field].get<int>();
}

std::vector<int> requireVertexList(const json& j, const std::string& field, int m) {
    if (!j.contains(field)) throw SchemaError("missing field '" + field + "'");
    if (!j[field].is_array() || j[field].empty())
        throw SchemaError("field '" + field + "' must be a nonempty array of vertices");
    std::vector<int> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer())
            throw SchemaError("field '" + field + "' must contain integers");
        const int vertex = v.get<int>();
        if (vertex < 1 || vertex > m)
            throw SchemaError("field '" + field + "': vertex " + std::to_string(vertex) +
                              " outside 1.." + std::to_string(m));
        out.push_back(vertex);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LengthSet parseLengths(const json& j) {
    if (!j.is_object()) throw SchemaError("field 'lengths' must be an object");
    if (j.contains("finite")) {
        if (!j["finite"].is_array())
            throw SchemaError("field 'lengths.finite' must be an array");
        std::vector<int> values;
        for (const auto& v : j["finite"]) {
            if (!v.is_number_integer())
                throw SchemaError("field 'lengths.finite' must contain integers");
            values.push_back(v.get<int>());
        }
        return LengthSet::finiteSet(std::move(values));
    }
    if (j.contains("first")) return LengthSet::arithmetic(requireInt(j, "first"),
                                                          requireInt(j, "step"));
    throw SchemaError("field 'lengths' must have either 'finite' or 'first'/'step'");
}

WeightRule parseWeight(const json& j) {
    WeightRule w;
    if (!j.is_object()) throw SchemaError("field 'weight' must be an object");
    if (j.contains("c")) {
        if (!j["c"].is_string()) throw SchemaError("field 'weight.c' must be a string");
        w.c = parsePolyT(j["c"].get<std::string>());
    }
    if (j.contains("alpha")) {
        w.alpha = requireInt(j, "alpha");
        if (w.alpha != 0 && w.alpha != 1)
            throw SchemaError("field 'weight.alpha' must be 0 or 1");
    }
    if (j.contains("beta")) w.beta = requireInt(j, "beta");
    return w;
}

} // namespace

RunNetwork parseNetwork(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("network document: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("network document must be a JSON object");

    RunNetwork net;
    net.m = requireInt(doc, "vertices");
    if (net.m < 1 || net.m > 16)
        throw SchemaError("field 'vertices' must be in 1..16, got " + std::to_string(net.m));
    net.start = requireVertexList(doc, "start", net.m);
    net.end = requireVertexList(doc, "end", net.m);

    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        throw SchemaError("missing or non-array field 'arcs'");
    for (const auto& arcDoc : doc["arcs"]) {
        if (!arcDoc.is_object()) throw SchemaError("each arc must be an object");
        Arc arc;
        arc.from = requireInt(arcDoc, "from");
        arc.to = requireInt(arcDoc, "to");
        if (arc.from < 1 || arc.from > net.m || arc.to < 1 || arc.to > net.m)
            throw SchemaError("arc (" + std::to_string(arc.from) + "," +
                              std::to_string(arc.to) + ") outside vertex range");
        if (net.arcBetween(arc.from, arc.to))
            throw SchemaError("duplicate arc (" + std::to_string(arc.from) + "," +
                              std::to_string(arc.to) + ")");
        if (!arcDoc.contains("lengths")) throw SchemaError("arc missing field 'lengths'");
        arc.lengths = parseLengths(arcDoc["lengths"]);
        if (arcDoc.contains("weight")) arc.weight = parseWeight(arcDoc["weight"]);
        /* nonnegativity at the minimum admissible length implies it for all */
        if (arc.weight.alpha * arc.lengths.minLength() + arc.weight.beta < 0)
            throw SchemaError("field 'weight': alpha*k+beta negative at minimum length k=" +
                              std::to_string(arc.lengths.minLength()) + " on arc (" +
                              std::to_string(arc.from) + "," + std::to_string(arc.to) + ")");
        net.arcs.push_back(std::move(arc));
    }
    return net;
}

RunNetwork parseNetworkFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open network file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseNetwork(buffer.str());
}

} // namespace runcount
