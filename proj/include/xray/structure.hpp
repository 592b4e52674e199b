#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xray/bigint.hpp"
#include "xray/space.hpp"

namespace xray {

enum class ComponentKind {
    isolated_vertex,  // 1 vertex, 0 edges
    tree,             // connected, edges == vertices - 1, at least one edge
    unicyclic_odd,    // edges == vertices, the unique cycle has odd length
    unicyclic_even,   // edges == vertices, the unique cycle has even length
    multicyclic,      // edges > vertices
};

inline const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::isolated_vertex: return "isolated-vertex";
        case ComponentKind::tree: return "tree";
        case ComponentKind::unicyclic_odd: return "unicyclic-odd";
        case ComponentKind::unicyclic_even: return "unicyclic-even";
        case ComponentKind::multicyclic: return "multicyclic";
    }
    return "unknown";
}

// One connected component of the graph whose edges are the complex's lines
// and whose vertex set is all points of the space (so omitted points appear
// as isolated-vertex components). Exactly one of two_coloring / odd_cycle is
// present: a proper +1/-1 coloring when bipartite, otherwise a simple cycle
// of odd length given in visiting order (consecutive entries and the
// last-to-first pair are lines of the complex).
struct ComponentReport {
    std::vector<int> vertices;  // sorted ascending
    int edge_count = 0;
    bool bipartite = false;
    std::optional<std::map<int, int>> two_coloring;
    std::optional<std::vector<int>> odd_cycle;
    ComponentKind classification = ComponentKind::isolated_vertex;
};

enum class Method { structural, rank, both };

// A complex is admissible exactly when every density function on the points
// is determined by its sums over the complex's lines; structurally that is
// "no component is bipartite" (isolated vertices count as bipartite). For an
// inadmissible complex, witness holds a nonzero function whose sum over
// every line of the complex is 0, so it cannot be told apart from the zero
// function: the signed indicator of the first bipartite component's
// coloring, or a delta on the smallest omitted point when one exists.
struct AdmissibilityReport {
    bool admissible = false;
    Method method = Method::structural;
    std::vector<ComponentReport> components;
    std::optional<std::vector<Rational>> witness;  // size num_points, iff inadmissible
    bool minimal = false;                          // size() == num_points
};

// Multiset of odd cycle lengths >= 3, stored sorted ascending. Classifies a
// minimal admissible complex by the cycle lengths of its components.
struct CycleType {
    std::vector<int> lengths;

    auto operator<=>(const CycleType&) const = default;
};

std::string to_string(const CycleType& t);  // e.g. "{3,3,5}"

// Connected components ordered by smallest vertex (hence by vertices[0]).
std::vector<ComponentReport> components(const LineComplex& c);

// Points of the space lying on no line of c, ascending.
std::vector<int> omitted_points(const LineComplex& c);

AdmissibilityReport is_admissible_structural(const LineComplex& c);

// The verdict of is_admissible_structural without building reports: parity
// union-find over the lines, admissible iff every point's component has
// closed an odd cycle. This is the hot path for sampling and brute force.
bool is_admissible_quick(int num_points, const std::vector<Line>& lines);

// For a complex with exactly num_points lines: its cycle type when every
// component is unicyclic with an odd cycle (i.e. the complex is admissible
// and minimal), nullopt otherwise. Complexes of any other size yield nullopt.
std::optional<std::pair<std::vector<ComponentReport>, CycleType>> classify_minimal(
    const LineComplex& c);

}  // namespace xray
