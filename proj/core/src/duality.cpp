#include "ribbon/duality.hpp"

#include <unordered_map>

#include "corner_tables.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

namespace {

SignedRibbonGraph dual_from_membership(const SignedRibbonGraph& g, const std::vector<char>& in) {
    const detail::CornerTables tables(g);
    std::vector<Circle> circles;
    std::vector<char> seen(tables.num_corners(), 0);
    for (std::uint32_t start = 0; start < tables.num_corners(); ++start) {
        if (seen[start]) continue;
        Circle circle;
        std::uint32_t c = start;
        do {
            const EdgeId e = tables.edge[c >> 1];
            const std::uint32_t o = tables.other(c, in[e] != 0);
            const bool from_head = (c & 1u) != 0;
            // Old arrows run tail -> head; a free ribbon side runs head -> tail.
            const bool along = in[e] ? from_head : !from_head;
            circle.push_back({e, along ? Direction::Along : Direction::Against});
            seen[c] = seen[o] = 1;
            c = tables.arc[o];
        } while (c != start);
        circles.push_back(std::move(circle));
    }
    for (const Circle& c : g.circles()) {
        if (c.empty()) circles.emplace_back();
    }
    std::vector<Sign> signs = g.signs();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in[e]) signs[e] = flip(signs[e]);
    }
    return SignedRibbonGraph(g.labels(), std::move(signs), std::move(circles));
}

void require_edge(const SignedRibbonGraph& g, EdgeId e) {
    if (e >= g.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e) + " out of range");
}

}  // namespace

std::vector<EdgeId> edges_of_mask(std::uint64_t mask, std::size_t num_edges) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < num_edges && e < 64; ++e) {
        if ((mask >> e) & 1u) out.push_back(e);
    }
    return out;
}

SignedRibbonGraph partial_dual(const SignedRibbonGraph& g, std::span<const EdgeId> edges) {
    std::vector<char> in(g.num_edges(), 0);
    for (EdgeId e : edges) {
        require_edge(g, e);
        in[e] = 1;
    }
    return dual_from_membership(g, in);
}

SignedRibbonGraph partial_dual(const SignedRibbonGraph& g, const std::vector<std::string>& labels) {
    std::vector<EdgeId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) ids.push_back(g.edge_id(l));
    return partial_dual(g, ids);
}

SignedRibbonGraph partial_dual_mask(const SignedRibbonGraph& g, std::uint64_t mask) {
    if (g.num_edges() < 64 && (mask >> g.num_edges()) != 0) {
        throw Error(ErrorCode::UnknownEdge, "subset mask has bits beyond the edge count");
    }
    std::vector<char> in(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges() && e < 64; ++e) in[e] = static_cast<char>((mask >> e) & 1u);
    return dual_from_membership(g, in);
}

SignedRibbonGraph delete_edge(const SignedRibbonGraph& g, EdgeId e) {
    require_edge(g, e);
    std::vector<std::string> labels;
    std::vector<Sign> signs;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        if (i == e) continue;
        labels.push_back(g.label(i));
        signs.push_back(g.sign(i));
    }
    std::vector<Circle> circles;
    circles.reserve(g.num_vertices());
    for (const Circle& c : g.circles()) {
        Circle kept;
        for (Occurrence occ : c) {
            if (occ.edge == e) continue;
            if (occ.edge > e) --occ.edge;
            kept.push_back(occ);
        }
        circles.push_back(std::move(kept));
    }
    return SignedRibbonGraph(std::move(labels), std::move(signs), std::move(circles));
}

SignedRibbonGraph delete_edge(const SignedRibbonGraph& g, std::string_view label) {
    return delete_edge(g, g.edge_id(label));
}

SignedRibbonGraph contract_edge(const SignedRibbonGraph& g, EdgeId e) {
    require_edge(g, e);
    const EdgeId single[] = {e};
    return delete_edge(partial_dual(g, single), e);
}

SignedRibbonGraph contract_edge(const SignedRibbonGraph& g, std::string_view label) {
    return contract_edge(g, g.edge_id(label));
}

EdgeClass classify_edge(const SignedRibbonGraph& g, EdgeId e) {
    require_edge(g, e);
    const auto& occs = g.occurrences(e);
    const OccurrenceRef a = g.occurrence_ref(occs[0]);
    const OccurrenceRef b = g.occurrence_ref(occs[1]);
    const std::size_t k = components(g).count;
    EdgeClass out;
    if (a.circle != b.circle) {
        out.kind = components(delete_edge(g, e)).count > k ? EdgeClass::Kind::Bridge : EdgeClass::Kind::Ordinary;
        return out;
    }
    out.kind = EdgeClass::Kind::Loop;
    out.orientable = g.circle(a.circle)[a.position].dir == g.circle(b.circle)[b.position].dir;

    // Delete the loop and cut its vertex along the chord joining the two ends.
    const Circle& c = g.circle(a.circle);
    const std::size_t p = a.position;
    const std::size_t q = b.position;  // p < q: occurrences are indexed in traversal order
    Circle inner(c.begin() + static_cast<long>(p) + 1, c.begin() + static_cast<long>(q));
    Circle outer(c.begin() + static_cast<long>(q) + 1, c.end());
    outer.insert(outer.end(), c.begin(), c.begin() + static_cast<long>(p));
    std::vector<Circle> circles;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        if (i != a.circle) circles.push_back(g.circle(i));
    }
    circles.push_back(std::move(inner));
    circles.push_back(std::move(outer));
    for (Circle& circle : circles) {
        for (Occurrence& occ : circle) {
            if (occ.edge > e) --occ.edge;
        }
    }
    std::vector<std::string> labels;
    std::vector<Sign> signs;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        if (i == e) continue;
        labels.push_back(g.label(i));
        signs.push_back(g.sign(i));
    }
    const SignedRibbonGraph cut(std::move(labels), std::move(signs), std::move(circles));
    out.trivial = components(cut).count > k;
    return out;
}

DualOrbit dual_orbit(const SignedRibbonGraph& g, std::size_t max_edges) {
    if (g.num_edges() > max_edges || g.num_edges() >= 64) {
        throw Error(ErrorCode::TooManyEdges, std::to_string(g.num_edges()) + " edges exceeds the orbit guard of " +
                                                 std::to_string(max_edges));
    }
    DualOrbit orbit;
    std::unordered_map<std::string, std::size_t> classes;
    const std::uint64_t total = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SignedRibbonGraph dual = partial_dual_mask(g, mask);
        if (classes.emplace(canonical_form(dual, true), orbit.count()).second) {
            orbit.representatives.push_back(std::move(dual));
            orbit.subsets.push_back(mask);
        }
    }
    return orbit;
}

}  // namespace ribbon
