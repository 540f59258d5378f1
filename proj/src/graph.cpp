#include "circuitry/graph.hpp"

#include <algorithm>

namespace circuitry {

int Graph::vertex(const std::string& name) {
    int i = find_vertex(name);
    if (i >= 0) return i;
    vertex_names.push_back(name);
    return static_cast<int>(vertex_names.size()) - 1;
}

int Graph::find_vertex(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(vertex_names.size()); ++i)
        if (vertex_names[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

void Graph::add_arc(const std::string& name, const std::string& tail, const std::string& head) {
    for (const Arc& a : arcs)
        if (a.name == name) throw Error("duplicate arc name: " + name);
    int t = vertex(tail);
    int h = vertex(head);
    arcs.push_back(Arc{name, t, h});
}

GroundSet Graph::arc_ground() const {
    std::vector<std::string> labels;
    labels.reserve(arcs.size());
    for (const Arc& a : arcs) labels.push_back(a.name);
    return GroundSet(std::move(labels));
}

std::vector<int> Graph::components_without(const EdgeSet& removed) const {
    const int n = vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        comp[static_cast<std::size_t>(start)] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < arc_count(); ++i) {
                if (removed.contains(i)) continue;
                const Arc& a = arcs[static_cast<std::size_t>(i)];
                int other = -1;
                if (a.tail == v)
                    other = a.head;
                else if (a.head == v)
                    other = a.tail;
                else
                    continue;
                if (comp[static_cast<std::size_t>(other)] == -1) {
                    comp[static_cast<std::size_t>(other)] = next;
                    stack.push_back(other);
                }
            }
        }
        ++next;
    }
    return comp;
}

BinaryMatrix incidence_gf2(const Graph& g) {
    BinaryMatrix m(g.vertex_count(), g.arc_count());
    for (int i = 0; i < g.arc_count(); ++i) {
        const Graph::Arc& a = g.arcs[static_cast<std::size_t>(i)];
        if (a.tail == a.head) continue;  // self-loop: zero column
        m.set(a.tail, i, 1);
        m.set(a.head, i, 1);
    }
    return m;
}

IntMatrix incidence_signed(const Graph& g) {
    IntMatrix m(g.vertex_count(), g.arc_count());
    for (int i = 0; i < g.arc_count(); ++i) {
        const Graph::Arc& a = g.arcs[static_cast<std::size_t>(i)];
        if (a.tail == a.head) continue;
        m.set(a.tail, i, 1);
        m.set(a.head, i, -1);
    }
    return m;
}

Matroid cycle_matroid(const Graph& g, const EnumLimits& limits) {
    if (g.arc_count() == 0) return matroid_from_circuits(g.arc_ground(), {});
    return matroid_from_gf2(incidence_gf2(g), g.arc_ground(), limits);
}

}  // namespace circuitry
