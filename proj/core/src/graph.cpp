#include "ribbon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "corner_tables.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DuplicateLabelCount: return "DuplicateLabelCount";
        case ErrorCode::UnknownSign: return "UnknownSign";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorCode::TooManyEdges: return "TooManyEdges";
        case ErrorCode::TooManyCrossings: return "TooManyCrossings";
        case ErrorCode::FractionalExponent: return "FractionalExponent";
        case ErrorCode::NegativeExponentNonUnit: return "NegativeExponentNonUnit";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::DanglingCrossing: return "DanglingCrossing";
        case ErrorCode::RoleConflict: return "RoleConflict";
        case ErrorCode::SignConflict: return "SignConflict";
        case ErrorCode::InvalidState: return "InvalidState";
    }
    return "Error";
}

bool is_valid_label(std::string_view label) noexcept {
    if (label.empty()) return false;
    for (char ch : label) {
        if (ch == ':' || ch == '\'' || ch == '#' || static_cast<unsigned char>(ch) <= ' ') return false;
    }
    return true;
}

SignedRibbonGraph::SignedRibbonGraph(std::vector<std::string> labels, std::vector<Sign> signs,
                                     std::vector<Circle> circles)
    : labels_(std::move(labels)), signs_(std::move(signs)), circles_(std::move(circles)) {
    if (labels_.size() != signs_.size()) {
        throw Error(ErrorCode::UnknownSign, "label and sign lists differ in length");
    }
    for (const auto& l : labels_) {
        if (!is_valid_label(l)) throw Error(ErrorCode::SyntaxError, "invalid edge label '" + l + "'");
    }
    if (!std::is_sorted(labels_.begin(), labels_.end())) {
        std::vector<EdgeId> order(labels_.size());
        std::iota(order.begin(), order.end(), EdgeId{0});
        std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return labels_[a] < labels_[b]; });
        std::vector<EdgeId> rename(labels_.size());
        std::vector<std::string> labels(labels_.size());
        std::vector<Sign> signs(labels_.size());
        for (EdgeId i = 0; i < order.size(); ++i) {
            rename[order[i]] = i;
            labels[i] = std::move(labels_[order[i]]);
            signs[i] = signs_[order[i]];
        }
        for (auto& c : circles_) {
            for (auto& occ : c) {
                if (occ.edge >= rename.size()) throw Error(ErrorCode::UnknownSign, "edge id out of range");
                occ.edge = rename[occ.edge];
            }
        }
        labels_ = std::move(labels);
        signs_ = std::move(signs);
    }
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw Error(ErrorCode::SyntaxError, "duplicate edge label");
    }
    build_index();
}

void SignedRibbonGraph::build_index() {
    circle_offset_.assign(circles_.size() + 1, 0);
    std::vector<std::size_t> seen(labels_.size(), 0);
    edge_occurrences_.assign(labels_.size(), {0, 0});
    std::size_t index = 0;
    for (std::size_t c = 0; c < circles_.size(); ++c) {
        circle_offset_[c] = index;
        for (const Occurrence& occ : circles_[c]) {
            if (occ.edge >= labels_.size()) throw Error(ErrorCode::UnknownSign, "edge id out of range");
            if (seen[occ.edge] < 2) edge_occurrences_[occ.edge][seen[occ.edge]] = index;
            ++seen[occ.edge];
            ++index;
        }
    }
    circle_offset_[circles_.size()] = index;
    for (EdgeId e = 0; e < labels_.size(); ++e) {
        if (seen[e] != 2) {
            throw Error(ErrorCode::DuplicateLabelCount,
                        "edge '" + labels_[e] + "' occurs " + std::to_string(seen[e]) + " times");
        }
    }
}

SignedRibbonGraph SignedRibbonGraph::from_labels(const std::vector<std::vector<LabelledOccurrence>>& circles,
                                                 const std::map<std::string, Sign>& signs) {
    std::vector<std::string> labels;
    std::vector<Sign> sign_list;
    std::map<std::string, EdgeId, std::less<>> ids;
    for (const auto& [label, sign] : signs) {
        ids.emplace(label, static_cast<EdgeId>(labels.size()));
        labels.push_back(label);
        sign_list.push_back(sign);
    }
    std::vector<Circle> out;
    out.reserve(circles.size());
    for (const auto& c : circles) {
        Circle circle;
        circle.reserve(c.size());
        for (const auto& occ : c) {
            auto it = ids.find(occ.label);
            if (it == ids.end()) throw Error(ErrorCode::UnknownSign, "edge '" + occ.label + "' has no sign");
            circle.push_back({it->second, occ.dir});
        }
        out.push_back(std::move(circle));
    }
    return SignedRibbonGraph(std::move(labels), std::move(sign_list), std::move(out));
}

std::optional<EdgeId> SignedRibbonGraph::find_edge(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<EdgeId>(it - labels_.begin());
}

EdgeId SignedRibbonGraph::edge_id(std::string_view label) const {
    if (auto id = find_edge(label)) return *id;
    throw Error(ErrorCode::UnknownEdge, "no edge labelled '" + std::string(label) + "'");
}

OccurrenceRef SignedRibbonGraph::occurrence_ref(std::size_t index) const {
    if (index >= num_occurrences()) throw Error(ErrorCode::PositionOutOfRange, "occurrence index");
    // circle_offset_ is nondecreasing; find the last circle starting at or before index
    // that is non-empty.
    auto it = std::upper_bound(circle_offset_.begin(), circle_offset_.end() - 1, index);
    std::size_t c = static_cast<std::size_t>(it - circle_offset_.begin()) - 1;
    while (circles_[c].empty()) --c;
    return {c, index - circle_offset_[c]};
}

const Occurrence& SignedRibbonGraph::occurrence(std::size_t index) const {
    const auto ref = occurrence_ref(index);
    return circles_[ref.circle][ref.position];
}

SignedRibbonGraph SignedRibbonGraph::with_signs(std::vector<Sign> signs) const {
    if (signs.size() != signs_.size()) throw Error(ErrorCode::UnknownSign, "sign vector length");
    SignedRibbonGraph copy = *this;
    copy.signs_ = std::move(signs);
    return copy;
}

SignedRibbonGraph SignedRibbonGraph::with_flipped_signs() const {
    std::vector<Sign> s = signs_;
    for (auto& x : s) x = flip(x);
    return with_signs(std::move(s));
}

ComponentPartition components(const SignedRibbonGraph& g) {
    detail::DisjointSets sets(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& [a, b] = g.occurrences(e);
        sets.unite(g.occurrence_ref(a).circle, g.occurrence_ref(b).circle);
    }
    ComponentPartition out;
    out.circle_class.assign(g.num_vertices(), 0);
    std::vector<std::size_t> class_of_root(g.num_vertices(), SIZE_MAX);
    for (std::size_t c = 0; c < g.num_vertices(); ++c) {
        auto& cls = class_of_root[sets.find(c)];
        if (cls == SIZE_MAX) cls = out.count++;
        out.circle_class[c] = cls;
    }
    return out;
}

std::vector<BoundaryWalk> boundary_components(const SignedRibbonGraph& g) {
    const detail::CornerTables tables(g);
    std::vector<BoundaryWalk> walks;
    std::vector<char> seen(tables.num_corners(), 0);
    for (std::uint32_t start = 0; start < tables.num_corners(); ++start) {
        if (seen[start]) continue;
        BoundaryWalk walk;
        std::uint32_t c = start;
        do {
            const std::uint32_t o = tables.other(c, true);
            walk.corners.push_back(detail::to_corner(c));
            walk.steps.push_back(BoundaryStep::Side);
            walk.corners.push_back(detail::to_corner(o));
            walk.steps.push_back(BoundaryStep::Arc);
            seen[c] = seen[o] = 1;
            c = tables.arc[o];
        } while (c != start);
        walks.push_back(std::move(walk));
    }
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        if (g.circle(i).empty()) {
            BoundaryWalk walk;
            walk.isolated_circle = i;
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

bool is_orientable(const SignedRibbonGraph& g) {
    // Parity union-find: flip(c) records whether circle c must be reversed relative to its root.
    const std::size_t v = g.num_vertices();
    std::vector<std::size_t> parent(v);
    std::vector<std::uint8_t> parity(v, 0);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        std::uint8_t p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return std::pair{x, p};
    };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& [a, b] = g.occurrences(e);
        const auto ra = g.occurrence_ref(a);
        const auto rb = g.occurrence_ref(b);
        const std::uint8_t want = (g.occurrence(a).dir != g.occurrence(b).dir) ? 1 : 0;
        auto [root_a, pa] = find(ra.circle);
        auto [root_b, pb] = find(rb.circle);
        if (root_a == root_b) {
            if ((pa ^ pb) != want) return false;
        } else {
            parent[root_b] = root_a;
            parity[root_b] = static_cast<std::uint8_t>(pa ^ pb ^ want);
        }
    }
    return true;
}

GraphStats stats(const SignedRibbonGraph& g) {
    GraphStats s;
    s.v = static_cast<long>(g.num_vertices());
    s.e = static_cast<long>(g.num_edges());
    s.k = static_cast<long>(components(g).count);
    s.r = s.v - s.k;
    s.n = s.e - s.r;
    const detail::CornerTables tables(g);
    std::vector<char> scratch;
    s.f = static_cast<long>(tables.count_cycles([](EdgeId) { return true; }, scratch));
    s.orientable = is_orientable(g);
    s.chi_closed = s.v - s.e + s.f;
    const long deficit = 2 * s.k - s.chi_closed;
    s.genus_or_crosscap = s.orientable ? deficit / 2 : deficit;
    return s;
}

namespace {

std::string fresh_label(const std::string& base, const std::set<std::string>& taken) {
    for (int suffix = 2;; ++suffix) {
        std::string candidate = base + "~" + std::to_string(suffix);
        if (!taken.count(candidate)) return candidate;
    }
}

/// Labels, signs and circles of g and h in one id space; h's edges come after g's.
struct Merged {
    std::vector<std::string> labels;
    std::vector<Sign> signs;
    std::vector<Circle> g_circles;
    std::vector<Circle> h_circles;
};

Merged merge(const SignedRibbonGraph& g, const SignedRibbonGraph& h) {
    Merged m;
    m.labels = g.labels();
    m.signs = g.signs();
    std::set<std::string> taken(g.labels().begin(), g.labels().end());
    taken.insert(h.labels().begin(), h.labels().end());
    const EdgeId shift = static_cast<EdgeId>(g.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        std::string label = h.label(e);
        if (g.find_edge(label)) {
            label = fresh_label(label, taken);
            taken.insert(label);
        }
        m.labels.push_back(std::move(label));
        m.signs.push_back(h.sign(e));
    }
    m.g_circles = g.circles();
    m.h_circles = h.circles();
    for (auto& c : m.h_circles) {
        for (auto& occ : c) occ.edge += shift;
    }
    return m;
}

}  // namespace

SignedRibbonGraph disjoint_union(const SignedRibbonGraph& g, const SignedRibbonGraph& h) {
    Merged m = merge(g, h);
    std::vector<Circle> circles = std::move(m.g_circles);
    for (auto& c : m.h_circles) circles.push_back(std::move(c));
    return SignedRibbonGraph(std::move(m.labels), std::move(m.signs), std::move(circles));
}

SignedRibbonGraph one_point_join(const SignedRibbonGraph& g, const SignedRibbonGraph& h, Gap at_g, Gap at_h) {
    if (at_g.circle >= g.num_vertices() || at_g.gap > g.circle(at_g.circle).size()) {
        throw Error(ErrorCode::PositionOutOfRange, "join position on first graph");
    }
    if (at_h.circle >= h.num_vertices() || at_h.gap > h.circle(at_h.circle).size()) {
        throw Error(ErrorCode::PositionOutOfRange, "join position on second graph");
    }
    Merged m = merge(g, h);
    const Circle& inserted = m.h_circles[at_h.circle];
    Circle spliced(m.g_circles[at_g.circle].begin(), m.g_circles[at_g.circle].begin() + static_cast<long>(at_g.gap));
    spliced.insert(spliced.end(), inserted.begin() + static_cast<long>(at_h.gap), inserted.end());
    spliced.insert(spliced.end(), inserted.begin(), inserted.begin() + static_cast<long>(at_h.gap));
    spliced.insert(spliced.end(), m.g_circles[at_g.circle].begin() + static_cast<long>(at_g.gap),
                   m.g_circles[at_g.circle].end());
    std::vector<Circle> circles = std::move(m.g_circles);
    circles[at_g.circle] = std::move(spliced);
    for (std::size_t i = 0; i < m.h_circles.size(); ++i) {
        if (i != at_h.circle) circles.push_back(std::move(m.h_circles[i]));
    }
    return SignedRibbonGraph(std::move(m.labels), std::move(m.signs), std::move(circles));
}

}  // namespace ribbon
