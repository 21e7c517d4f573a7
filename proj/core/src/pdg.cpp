#include <algorithm>
#include <numeric>

#include "snipsec/common.hpp"
#include "snipsec/ir.hpp"

namespace snipsec::ir {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // smaller root wins so component ids are stable
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

}  // namespace

MethodPdg build_pdg(const IrMethod& m)
{
    MethodPdg g;
    const std::size_t n = m.instructions.size();
    g.node_count = n;
    g.out_degree.assign(n, 0);
    for (const auto& ins : m.instructions) {
        for (std::size_t u : ins.uses) {
            if (u >= n || !m.instructions[u].defines) {
                throw DataError("instruction " + std::to_string(ins.id) + " uses undefined value " + std::to_string(u));
            }
            g.edges.emplace_back(u, ins.id);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    DisjointSets ds(n);
    for (const auto& [a, b] : g.edges) {
        ++g.out_degree[a];
        ds.unite(a, b);
    }
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = ds.find(i);
        if (slot[root] == n) {
            slot[root] = g.semantic_blocks.size();
            g.semantic_blocks.emplace_back();
        }
        g.semantic_blocks[slot[root]].push_back(i);
    }
    return g;
}

}  // namespace snipsec::ir
