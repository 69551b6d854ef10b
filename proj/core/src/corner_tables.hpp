#pragma once

#include <cstdint>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon::detail {

// Corner numbering: occurrence o owns corners 2o (tail) and 2o+1 (head).
constexpr std::uint32_t corner_id(std::size_t occ, CornerKind kind) noexcept {
    return static_cast<std::uint32_t>(2 * occ + (kind == CornerKind::Head ? 1 : 0));
}

constexpr Corner to_corner(std::uint32_t id) noexcept {
    return Corner{id >> 1, (id & 1u) ? CornerKind::Head : CornerKind::Tail};
}

/// Adjacency of the corner graph. Every corner has one arc link (along its vertex
/// circle) and one "other" link: the ribbon side of its edge when the edge belongs
/// to the traced subgraph, the arrow segment itself otherwise.
struct CornerTables {
    explicit CornerTables(const SignedRibbonGraph& g) {
        const std::size_t occs = g.num_occurrences();
        arc.resize(2 * occs);
        partner.resize(occs);
        edge.resize(occs);
        dir.resize(occs);
        std::size_t base = 0;
        for (const Circle& c : g.circles()) {
            if (c.empty()) {
                ++empty_circles;
                continue;
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                const std::size_t o = base + i;
                const std::size_t next = base + (i + 1) % c.size();
                edge[o] = c[i].edge;
                dir[o] = c[i].dir;
                const auto after = corner_id(o, c[i].dir == Direction::Along ? CornerKind::Head : CornerKind::Tail);
                const auto before_next =
                    corner_id(next, c[(i + 1) % c.size()].dir == Direction::Along ? CornerKind::Tail : CornerKind::Head);
                arc[after] = before_next;
                arc[before_next] = after;
            }
            base += c.size();
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto& [a, b] = g.occurrences(e);
            partner[a] = static_cast<std::uint32_t>(b);
            partner[b] = static_cast<std::uint32_t>(a);
        }
    }

    std::uint32_t other(std::uint32_t corner, bool edge_in_subset) const noexcept {
        if (edge_in_subset) return (partner[corner >> 1] << 1) | ((corner & 1u) ^ 1u);
        return corner ^ 1u;
    }

    std::size_t num_corners() const noexcept { return arc.size(); }

    /// Number of boundary cycles of the spanning subgraph whose edge set is given by
    /// `in_subset(edge)`, including one per empty circle. `seen` is scratch space.
    template <class InSubset>
    std::size_t count_cycles(InSubset&& in_subset, std::vector<char>& seen) const {
        seen.assign(arc.size(), 0);
        std::size_t cycles = empty_circles;
        for (std::uint32_t start = 0; start < arc.size(); ++start) {
            if (seen[start]) continue;
            ++cycles;
            std::uint32_t c = start;
            do {
                seen[c] = 1;
                const std::uint32_t o = other(c, in_subset(edge[c >> 1]));
                seen[o] = 1;
                c = arc[o];
            } while (c != start);
        }
        return cycles;
    }

    std::vector<std::uint32_t> arc;
    std::vector<std::uint32_t> partner;
    std::vector<EdgeId> edge;
    std::vector<Direction> dir;
    std::size_t empty_circles = 0;
};

/// Union-find over circles.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), classes_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        --classes_;
        return true;
    }

    std::size_t classes() const noexcept { return classes_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t classes_;
};

}  // namespace ribbon::detail
