#include "xray/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace xray {

std::string to_string(const CycleType& t) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < t.lengths.size(); ++i) {
        if (i) out << ",";
        out << t.lengths[i];
    }
    out << "}";
    return out.str();
}

namespace {

struct BfsState {
    std::vector<int> color;   // -1 unvisited, else 0/1 by BFS layer parity
    std::vector<int> parent;  // -1 at roots
    std::vector<int> depth;
};

// Walks tree paths from the endpoints of a same-color edge (u, v) up to
// their lowest common ancestor; the returned vertex sequence is a simple
// cycle of odd length listed in visiting order.
std::vector<int> extract_odd_cycle(const BfsState& st, int u, int v) {
    std::vector<int> up_u{u}, up_v{v};
    int x = u, y = v;
    while (st.depth[x] > st.depth[y]) up_u.push_back(x = st.parent[x]);
    while (st.depth[y] > st.depth[x]) up_v.push_back(y = st.parent[y]);
    while (x != y) {
        up_u.push_back(x = st.parent[x]);
        up_v.push_back(y = st.parent[y]);
    }
    // up_u ends at the LCA; append v's path below the LCA in reverse.
    std::vector<int> cycle = up_u;
    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

}  // namespace

std::vector<ComponentReport> components(const LineComplex& c) {
    const int n = c.num_points();
    std::vector<std::vector<int>> adj(n);
    for (const Line& l : c.lines()) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    BfsState st{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0)};
    std::vector<ComponentReport> out;
    for (int root = 0; root < n; ++root) {
        if (st.color[root] != -1) continue;
        ComponentReport comp;
        std::vector<int> order;
        std::queue<int> q;
        st.color[root] = 0;
        q.push(root);
        int same_u = -1, same_v = -1;  // first same-color edge, if any
        long long degree_sum = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            order.push_back(u);
            degree_sum += static_cast<long long>(adj[u].size());
            for (int w : adj[u]) {
                if (st.color[w] == -1) {
                    st.color[w] = st.color[u] ^ 1;
                    st.parent[w] = u;
                    st.depth[w] = st.depth[u] + 1;
                    q.push(w);
                } else if (st.color[w] == st.color[u] && same_u == -1 && u < w) {
                    same_u = u;
                    same_v = w;
                }
            }
        }
        comp.vertices = order;
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.edge_count = static_cast<int>(degree_sum / 2);
        comp.bipartite = (same_u == -1);
        if (comp.bipartite) {
            std::map<int, int> coloring;
            for (int v : comp.vertices) coloring[v] = st.color[v] == st.color[root] ? +1 : -1;
            comp.two_coloring = std::move(coloring);
        } else {
            comp.odd_cycle = extract_odd_cycle(st, same_u, same_v);
        }
        const int nv = static_cast<int>(comp.vertices.size());
        if (comp.edge_count == 0)
            comp.classification = ComponentKind::isolated_vertex;
        else if (comp.edge_count == nv - 1)
            comp.classification = ComponentKind::tree;
        else if (comp.edge_count == nv)
            comp.classification =
                comp.bipartite ? ComponentKind::unicyclic_even : ComponentKind::unicyclic_odd;
        else
            comp.classification = ComponentKind::multicyclic;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> omitted_points(const LineComplex& c) {
    std::vector<char> used(c.num_points(), 0);
    for (const Line& l : c.lines()) used[l.a] = used[l.b] = 1;
    std::vector<int> out;
    for (int v = 0; v < c.num_points(); ++v)
        if (!used[v]) out.push_back(v);
    return out;
}

AdmissibilityReport is_admissible_structural(const LineComplex& c) {
    AdmissibilityReport rep;
    rep.method = Method::structural;
    rep.components = components(c);
    rep.minimal = (c.size() == c.num_points());
    rep.admissible = std::none_of(rep.components.begin(), rep.components.end(),
                                  [](const ComponentReport& k) { return k.bipartite; });
    if (rep.admissible) return rep;

    // A delta on the smallest isolated vertex when one exists, else the ±1
    // coloring of the first bipartite component. Every line of c meets the
    // support of either choice evenly (or not at all), so all its sums
    // vanish while the function itself is nonzero.
    std::vector<Rational> w(c.num_points(), Rational(0));
    const auto isolated = std::find_if(
        rep.components.begin(), rep.components.end(), [](const ComponentReport& k) {
            return k.classification == ComponentKind::isolated_vertex;
        });
    if (isolated != rep.components.end()) {
        w[isolated->vertices.front()] = 1;
    } else {
        for (const ComponentReport& k : rep.components) {
            if (!k.bipartite) continue;
            for (const auto& [v, sign] : *k.two_coloring) w[v] = sign;
            break;
        }
    }
    rep.witness = std::move(w);
    return rep;
}

bool is_admissible_quick(int num_points, const std::vector<Line>& lines) {
    std::vector<int> parent(num_points);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<unsigned char> parity(num_points, 0), has_odd(num_points, 0);
    // parity[v] = parity of the tree path from v to its current root; an
    // edge joining same-parity endpoints closes an odd cycle.
    auto find = [&](int v, unsigned char& path_parity) {
        unsigned char acc = 0;
        while (parent[v] != v) {
            acc ^= parity[v];
            v = parent[v];
        }
        path_parity = acc;
        return v;
    };
    for (const Line& l : lines) {
        unsigned char pa = 0, pb = 0;
        const int ra = find(l.a, pa), rb = find(l.b, pb);
        if (ra == rb) {
            if (pa == pb) has_odd[ra] = 1;
        } else {
            parent[rb] = ra;
            parity[rb] = pa ^ pb ^ 1;
            has_odd[ra] |= has_odd[rb];
        }
    }
    for (int v = 0; v < num_points; ++v) {
        unsigned char ignore = 0;
        if (!has_odd[find(v, ignore)]) return false;
    }
    return true;
}

std::optional<std::pair<std::vector<ComponentReport>, CycleType>> classify_minimal(
    const LineComplex& c) {
    if (c.size() != c.num_points()) return std::nullopt;
    std::vector<ComponentReport> comps = components(c);
    CycleType type;
    for (const ComponentReport& k : comps) {
        if (k.classification != ComponentKind::unicyclic_odd) return std::nullopt;
        type.lengths.push_back(static_cast<int>(k.odd_cycle->size()));
    }
    std::sort(type.lengths.begin(), type.lengths.end());
    return std::make_pair(std::move(comps), std::move(type));
}

}  // namespace xray
