#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

using CrossingId = std::uint32_t;

enum class Role : std::uint8_t { Over, Under };

/// One passage of a component through a classical crossing.
struct Pass {
    CrossingId crossing;
    Role role;

    friend bool operator==(const Pass&, const Pass&) = default;
};

/// A virtual link diagram as signed Gauss codes. Virtual crossings are not stored.
/// Each classical crossing is passed exactly twice, once over and once under.
class VirtualLinkDiagram {
public:
    VirtualLinkDiagram() : components_(1) {}

    /// Throws Error{DanglingCrossing}, Error{RoleConflict} or Error{UnknownSign}.
    VirtualLinkDiagram(std::vector<std::vector<Pass>> components, std::vector<std::pair<CrossingId, Sign>> signs);

    const std::vector<std::vector<Pass>>& components() const noexcept { return components_; }
    std::size_t num_crossings() const noexcept { return crossings_.size(); }
    /// Crossing ids in ascending order; state vectors are indexed by this order.
    const std::vector<CrossingId>& crossings() const noexcept { return crossings_; }
    Sign sign(std::size_t index) const { return signs_.at(index); }
    std::size_t crossing_index(CrossingId id) const;

    friend bool operator==(const VirtualLinkDiagram&, const VirtualLinkDiagram&) = default;

private:
    std::vector<std::vector<Pass>> components_;
    std::vector<CrossingId> crossings_;
    std::vector<Sign> signs_;
};

enum class Splitting : std::uint8_t { A, B };

/// Splitting per crossing, indexed like `VirtualLinkDiagram::crossings()`.
using State = std::vector<Splitting>;

/// A visit of a state circle to one of the two smoothing arcs of a crossing.
struct ArcVisit {
    std::size_t crossing;  ///< crossing index
    /// True when the circle runs along the arc in the counterclockwise order of the
    /// crossing's four ends.
    bool forward;

    friend bool operator==(const ArcVisit&, const ArcVisit&) = default;
};

struct StateExpansion {
    long alpha = 0;
    long beta = 0;
    long delta = 0;
    /// The traced curves; a crossingless component yields an empty circle.
    std::vector<std::vector<ArcVisit>> circles;
};

inline constexpr std::size_t kDefaultCrossingGuard = 24;

/// Reads the Gauss-code format. Throws ParseError / Error.
VirtualLinkDiagram parse_gauss(std::string_view text);
std::string serialize_gauss(const VirtualLinkDiagram& d);

long writhe(const VirtualLinkDiagram& d);

/// Throws Error{InvalidState} if the state does not cover every crossing.
StateExpansion resolve_state(const VirtualLinkDiagram& d, const State& s);

/// Sum over all states of A^alpha B^beta d^(delta - 1), in variables (A, B, d).
/// Throws Error{TooManyCrossings}.
MultiLaurent kauffman_bracket(const VirtualLinkDiagram& d, std::size_t max_crossings = kDefaultCrossingGuard);

/// Bracket at A = t^(-1/4), B = t^(1/4), d = -t^(1/2) - t^(-1/2) times (-1)^w t^(3w/4).
QuarterLaurent jones(const VirtualLinkDiagram& d, std::size_t max_crossings = kDefaultCrossingGuard);

/// Positive crossings split A, negative ones B: the orientation-respecting smoothing.
State seifert_state(const VirtualLinkDiagram& d);
State all_A_state(const VirtualLinkDiagram& d);
State all_B_state(const VirtualLinkDiagram& d);

/// Parses "seifert", "all-A", "all-B", or a string of per-crossing letters
/// ('0' or 'A' for A, '1' or 'B' for B) over ascending crossing ids.
State parse_state(const VirtualLinkDiagram& d, std::string_view selector);
std::string state_string(const State& s);

/// The ribbon graph G_L^s: a vertex per state circle, an edge per crossing (labelled by
/// its id), positive for A-splittings and negative for B-splittings.
SignedRibbonGraph state_ribbon_graph(const VirtualLinkDiagram& d, const State& s);

/// A^e * (x^k y^v z^(v+1) R) at x = A d / B, y = B d / A, z = 1 / d, taking (xy)^(1/2) = d.
/// `r` is the polynomial of a graph with the given e, k and v.
MultiLaurent evaluate_on_bracket_surface(const MultiLaurent& r, long e, long k, long v);

/// The Jones polynomial from R of the state graph G_L^s: R at x = -1 - 1/t, y = -t - 1,
/// z = 1/delta with delta = -t^(1/2) - t^(-1/2), times (-1)^w t^((3w - e + 2r)/4) delta^(k-1).
QuarterLaurent jones_from_state_graph(const MultiLaurent& r, long writhe, long e, long rank, long k);

}  // namespace ribbon
