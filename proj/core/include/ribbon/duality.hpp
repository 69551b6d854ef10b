#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

/// Dual with respect to an edge subset: the boundary cycles of the spanning subgraph
/// on `edges` become the new vertex circles, the free sides of those ribbons become
/// their new arrows, and their signs flip. Other arrows ride along unchanged.
/// Duplicate ids are ignored. Throws Error{UnknownEdge} for an id out of range.
SignedRibbonGraph partial_dual(const SignedRibbonGraph& g, std::span<const EdgeId> edges);
SignedRibbonGraph partial_dual(const SignedRibbonGraph& g, const std::vector<std::string>& labels);
/// Subset given as a bitmask over edge ids (bit i = edge i).
SignedRibbonGraph partial_dual_mask(const SignedRibbonGraph& g, std::uint64_t mask);

SignedRibbonGraph delete_edge(const SignedRibbonGraph& g, EdgeId e);
SignedRibbonGraph delete_edge(const SignedRibbonGraph& g, std::string_view label);

/// G/e := G^{e} - e.
SignedRibbonGraph contract_edge(const SignedRibbonGraph& g, EdgeId e);
SignedRibbonGraph contract_edge(const SignedRibbonGraph& g, std::string_view label);

struct EdgeClass {
    enum class Kind { Bridge, Ordinary, Loop };

    Kind kind = Kind::Ordinary;
    bool orientable = true;  ///< meaningful for loops only
    bool trivial = false;    ///< meaningful for loops only

    friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// A loop is trivial when deleting it and cutting its vertex along the chord between
/// its two ends disconnects the surface.
EdgeClass classify_edge(const SignedRibbonGraph& g, EdgeId e);

struct DualOrbit {
    std::vector<SignedRibbonGraph> representatives;
    std::vector<std::uint64_t> subsets;  ///< subset that produced each representative

    std::size_t count() const noexcept { return representatives.size(); }
};

/// Partial duals over all 2^e subsets, bucketed up to isomorphism ignoring signs.
/// Representatives appear in order of their first subset. Throws Error{TooManyEdges}.
DualOrbit dual_orbit(const SignedRibbonGraph& g, std::size_t max_edges = 20);

std::vector<EdgeId> edges_of_mask(std::uint64_t mask, std::size_t num_edges);

}  // namespace ribbon
