#ifndef RUNCOUNT_NETWORK_HPP
#define RUNCOUNT_NETWORK_HPP

#include "runcount/compositions.hpp"
#include "runcount/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace runcount {

/* Set of admissible run lengths on an arc: either a finite set or the
   arithmetic progression {first, first+step, first+2*step, ...}. */
struct LengthSet {
    enum class Kind { Finite, Arithmetic };
    Kind kind = Kind::Finite;
    std::vector<int> finite; // sorted unique positive values
    int first = 1;
    int step = 1;

    static LengthSet finiteSet(std::vector<int> values);
    static LengthSet arithmetic(int first, int step);

    int minLength() const;
    bool contains(int k) const;
    std::string toString() const;
};

/* Members of the set that are <= N, ascending. */
std::vector<int> lengthSetMembers(const LengthSet& s, int N);

/* Weight of a run of length k: c(t) * t^(alpha*k + beta) with alpha in {0,1}.
   Covers every weighting needed: 1, t, t^2, t^(k-1), t^(k-2). */
struct WeightRule {
    PolyT c = PolyT(1);
    int alpha = 0;
    int beta = 0;

    PolyT weightFor(int k) const;
};

struct Arc {
    int from = 0;
    int to = 0;
    LengthSet lengths;
    WeightRule weight;
};

/* Digraph on vertices 1..m with at most one arc per ordered pair.  A walk
   traverses arcs, reading one part per arc; the parts form a composition.
   The computed series sums the counting-matrix entries over start x end. */
struct RunNetwork {
    int m = 0;
    std::vector<Arc> arcs;
    std::vector<int> start; // sorted unique
    std::vector<int> end;   // sorted unique

    const Arc* arcBetween(int i, int j) const;
};

/* Witness that two distinct walks share endpoints and composition. */
struct NetworkViolation {
    int from = 0;
    int to = 0;
    Composition composition;
    std::vector<int> walkA; // vertex sequences, both starting at `from`
    std::vector<int> walkB;

    std::string message() const;
};

/* Checks the defining uniqueness condition for all compositions of total
   <= N between every ordered vertex pair; returns the minimal-total witness
   if one exists.  Passing at N certifies every series coefficient of degree
   <= N.  Monotone: a violation at N is also found at every N' >= N. */
std::optional<NetworkViolation> validateNetwork(const RunNetwork& net, int N);

/* Parse the JSON document schema:
     {"vertices": m, "start": [..], "end": [..],
      "arcs": [{"from": i, "to": j,
                "lengths": {"finite": [..]} | {"first": a, "step": d},
                "weight": {"c": "<poly>", "alpha": 0|1, "beta": int}}, ...]}
   weight and its fields default to c=1, alpha=0, beta=0.  Malformed JSON
   raises ParseError; well-formed JSON violating the schema raises SchemaError
   naming the offending field. */
RunNetwork parseNetwork(const std::string& jsonText);
RunNetwork parseNetworkFile(const std::string& path);

} // namespace runcount

#endif
