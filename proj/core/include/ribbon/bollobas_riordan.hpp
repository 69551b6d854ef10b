#pragma once

#include <cstdint>

#include "ribbon/graph.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

/// Parameters of the spanning subgraph F of g with edge set `subset` (bit i = edge i).
struct SubgraphStats {
    long k = 0;
    long r = 0;
    long n = 0;
    long f = 0;
    /// e_-(F) - e_-(G - F), i.e. twice s(F).
    long s2 = 0;

    friend bool operator==(const SubgraphStats&, const SubgraphStats&) = default;
};

inline constexpr std::size_t kDefaultEdgeGuard = 24;

SubgraphStats subgraph_stats(const SignedRibbonGraph& g, std::uint64_t subset);

/// Exponents (doubled x, doubled y, z) of the state-sum term of F.
MultiLaurent::Exponents state_exponents(const SignedRibbonGraph& g, std::uint64_t subset);

/// The signed polynomial R_G(x, y, z) by enumeration of all 2^e spanning subgraphs.
/// `workers` > 1 splits the subset range across threads.
/// Throws Error{TooManyEdges} when e(g) exceeds `max_edges`.
MultiLaurent bollobas_riordan(const SignedRibbonGraph& g, std::size_t max_edges = kDefaultEdgeGuard,
                              unsigned workers = 1);

/// R_G(x - 1, y - 1, 1). Propagates substitution errors for half-integer exponents.
BiLaurent tutte_via_br(const SignedRibbonGraph& g, std::size_t max_edges = kDefaultEdgeGuard);

/// x^k y^v z^(v+1) R_G restricted to x^(1/2) y^(1/2) z = 1.
BiLaurent duality_invariant(const SignedRibbonGraph& g, std::size_t max_edges = kDefaultEdgeGuard);

/// The single term M_G(F) of x^k y^v z^(v+1) R_G belonging to F.
MultiLaurent duality_monomial(const SignedRibbonGraph& g, std::uint64_t subset);

}  // namespace ribbon
