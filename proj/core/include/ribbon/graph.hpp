#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

using EdgeId = std::uint32_t;

/// Arrow direction of an occurrence relative to the listed traversal order of its circle.
enum class Direction : std::uint8_t { Along, Against };

constexpr Direction flip(Direction d) noexcept {
    return d == Direction::Along ? Direction::Against : Direction::Along;
}

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct Occurrence {
    EdgeId edge;
    Direction dir;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Cyclic sequence of arrow occurrences on the boundary of one vertex disc.
using Circle = std::vector<Occurrence>;

struct OccurrenceRef {
    std::size_t circle;
    std::size_t position;

    friend bool operator==(const OccurrenceRef&, const OccurrenceRef&) = default;
};

enum class CornerKind : std::uint8_t { Tail, Head };

/// Endpoint of an arrow. `occurrence` is the global occurrence index
/// (circles concatenated in order).
struct Corner {
    std::size_t occurrence;
    CornerKind kind;

    friend bool operator==(const Corner&, const Corner&) = default;
};

/// A signed ribbon graph in arrow presentation: oriented circles (vertices) carrying
/// labelled arrows, each label occurring exactly twice, plus a sign per label.
///
/// Edge ids index the lexicographically sorted label list, so iteration and subset
/// bitmasks follow label order. Values are immutable once constructed.
class SignedRibbonGraph {
public:
    struct LabelledOccurrence {
        std::string label;
        Direction dir = Direction::Along;
    };

    SignedRibbonGraph() = default;

    /// `labels[i]` and `signs[i]` describe edge `i`; circles refer to edges by id.
    /// Labels are re-sorted (and circles renumbered) if not already in order.
    /// Throws Error{DuplicateLabelCount} if an edge does not occur exactly twice.
    SignedRibbonGraph(std::vector<std::string> labels, std::vector<Sign> signs,
                      std::vector<Circle> circles);

    /// Throws Error{UnknownSign} for a circle label without a sign entry and
    /// Error{DuplicateLabelCount} for a label that does not occur exactly twice.
    static SignedRibbonGraph from_labels(
        const std::vector<std::vector<LabelledOccurrence>>& circles,
        const std::map<std::string, Sign>& signs);

    std::size_t num_vertices() const noexcept { return circles_.size(); }
    std::size_t num_edges() const noexcept { return labels_.size(); }
    std::size_t num_occurrences() const noexcept { return 2 * labels_.size(); }

    const std::vector<Circle>& circles() const noexcept { return circles_; }
    const Circle& circle(std::size_t i) const { return circles_.at(i); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(EdgeId e) const { return labels_.at(e); }
    const std::vector<Sign>& signs() const noexcept { return signs_; }
    Sign sign(EdgeId e) const { return signs_.at(e); }

    std::optional<EdgeId> find_edge(std::string_view label) const;
    /// Throws Error{UnknownEdge}.
    EdgeId edge_id(std::string_view label) const;

    /// Global occurrence indices of both ends of an edge, in traversal order.
    const std::array<std::size_t, 2>& occurrences(EdgeId e) const { return edge_occurrences_.at(e); }
    std::size_t occurrence_index(OccurrenceRef ref) const { return circle_offset_.at(ref.circle) + ref.position; }
    OccurrenceRef occurrence_ref(std::size_t index) const;
    const Occurrence& occurrence(std::size_t index) const;

    SignedRibbonGraph with_signs(std::vector<Sign> signs) const;
    SignedRibbonGraph with_flipped_signs() const;

    friend bool operator==(const SignedRibbonGraph&, const SignedRibbonGraph&) = default;

private:
    void build_index();

    std::vector<std::string> labels_;
    std::vector<Sign> signs_;
    std::vector<Circle> circles_;
    std::vector<std::size_t> circle_offset_;
    std::vector<std::array<std::size_t, 2>> edge_occurrences_;
};

/// The tuple of topological parameters of a ribbon graph.
struct GraphStats {
    long v = 0;
    long e = 0;
    long k = 0;
    long r = 0;
    long n = 0;
    long f = 0;
    bool orientable = true;
    long chi_closed = 0;
    /// Genus when orientable, otherwise 2k - chi (the crosscap count for a connected graph).
    long genus_or_crosscap = 0;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct ComponentPartition {
    std::vector<std::size_t> circle_class;  ///< class index per circle, numbered by first circle
    std::size_t count = 0;
};

enum class BoundaryStep : std::uint8_t {
    Arc,      ///< free stretch of a vertex circle between two arrows
    Side,     ///< free side of an edge ribbon
    Segment,  ///< an arrow of an edge that is not part of the traced subgraph
};

/// A boundary cycle: `steps[i]` is the element traversed from `corners[i]` to
/// `corners[(i + 1) % size]`. A walk around an empty circle has no corners and
/// records the circle in `isolated_circle`.
struct BoundaryWalk {
    std::vector<Corner> corners;
    std::vector<BoundaryStep> steps;
    std::optional<std::size_t> isolated_circle;
};

ComponentPartition components(const SignedRibbonGraph& g);
std::vector<BoundaryWalk> boundary_components(const SignedRibbonGraph& g);
bool is_orientable(const SignedRibbonGraph& g);
GraphStats stats(const SignedRibbonGraph& g);

/// Canonical string of the isomorphism class under relabelling, circle permutation and
/// rotation, circle reversal (M1) and arrow-pair reversal (M2).
std::string canonical_form(const SignedRibbonGraph& g, bool ignore_signs);
bool is_isomorphic(const SignedRibbonGraph& g, const SignedRibbonGraph& h, bool ignore_signs);

/// Insertion gap `gap` on circle `circle`: 0 is before the first occurrence,
/// circle.size() after the last.
struct Gap {
    std::size_t circle = 0;
    std::size_t gap = 0;
};

/// Labels of `h` that collide with labels of `g` are renamed by appending "~2", "~3", ...
SignedRibbonGraph disjoint_union(const SignedRibbonGraph& g, const SignedRibbonGraph& h);
/// Splices circle `at_h.circle` of h, cut open at `at_h.gap`, into circle
/// `at_g.circle` of g at `at_g.gap`. Throws Error{PositionOutOfRange}.
SignedRibbonGraph one_point_join(const SignedRibbonGraph& g, const SignedRibbonGraph& h, Gap at_g,
                                 Gap at_h);

/// Reads the `.rg` text format. Throws ParseError / Error.
SignedRibbonGraph parse_ribbon_graph(std::string_view text);
/// Writes the `.rg` text format (header, sorted edge list, one line per circle).
std::string serialize_ribbon_graph(const SignedRibbonGraph& g);

bool is_valid_label(std::string_view label) noexcept;

}  // namespace ribbon
