#include "ribbon/bollobas_riordan.hpp"

#include <map>
#include <thread>

#include "corner_tables.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

namespace {

using Key = MultiLaurent::Exponents;

/// Per-graph tables reused across all subsets of one enumeration.
class StateSum {
public:
    explicit StateSum(const SignedRibbonGraph& g) : g_(g), tables_(g), ends_(g.num_edges()) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto& occ = g.occurrences(e);
            ends_[e] = {g.occurrence_ref(occ[0]).circle, g.occurrence_ref(occ[1]).circle};
            if (g.sign(e) == Sign::Negative) ++negatives_;
        }
        rank_ = static_cast<long>(g.num_vertices()) - static_cast<long>(components(g).count);
    }

    SubgraphStats stats(std::uint64_t subset, std::vector<char>& scratch) const {
        detail::DisjointSets sets(g_.num_vertices());
        long edges = 0;
        long negatives_in = 0;
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (!((subset >> e) & 1u)) continue;
            ++edges;
            if (g_.sign(e) == Sign::Negative) ++negatives_in;
            sets.unite(ends_[e].first, ends_[e].second);
        }
        SubgraphStats s;
        s.k = static_cast<long>(sets.classes());
        s.r = static_cast<long>(g_.num_vertices()) - s.k;
        s.n = edges - s.r;
        s.f = static_cast<long>(tables_.count_cycles([subset](EdgeId e) { return ((subset >> e) & 1u) != 0; }, scratch));
        s.s2 = negatives_in - (negatives_ - negatives_in);
        return s;
    }

    Key exponents(const SubgraphStats& s) const {
        return {static_cast<int>(2 * (rank_ - s.r) + s.s2), static_cast<int>(2 * s.n - s.s2),
                static_cast<int>(s.k - s.f + s.n)};
    }

    void accumulate(std::uint64_t begin, std::uint64_t end, std::map<Key, long long>& out) const {
        std::vector<char> scratch;
        for (std::uint64_t mask = begin; mask < end; ++mask) ++out[exponents(stats(mask, scratch))];
    }

private:
    const SignedRibbonGraph& g_;
    detail::CornerTables tables_;
    std::vector<std::pair<std::size_t, std::size_t>> ends_;
    long negatives_ = 0;
    long rank_ = 0;
};

void check_subset(const SignedRibbonGraph& g, std::uint64_t subset) {
    if (g.num_edges() >= 64 || (subset >> g.num_edges()) != 0) {
        throw Error(ErrorCode::UnknownEdge, "subset mask has bits beyond the edge count");
    }
}

}  // namespace

SubgraphStats subgraph_stats(const SignedRibbonGraph& g, std::uint64_t subset) {
    check_subset(g, subset);
    std::vector<char> scratch;
    return StateSum(g).stats(subset, scratch);
}

MultiLaurent::Exponents state_exponents(const SignedRibbonGraph& g, std::uint64_t subset) {
    check_subset(g, subset);
    const StateSum sum(g);
    std::vector<char> scratch;
    return sum.exponents(sum.stats(subset, scratch));
}

MultiLaurent bollobas_riordan(const SignedRibbonGraph& g, std::size_t max_edges, unsigned workers) {
    if (g.num_edges() > max_edges || g.num_edges() >= 63) {
        throw Error(ErrorCode::TooManyEdges, std::to_string(g.num_edges()) + " edges exceeds the state-sum guard of " +
                                                 std::to_string(max_edges));
    }
    const StateSum sum(g);
    const std::uint64_t total = std::uint64_t{1} << g.num_edges();
    if (workers == 0) workers = 1;
    if (total < 4096) workers = 1;

    std::vector<std::map<Key, long long>> partial(workers);
    if (workers == 1) {
        sum.accumulate(0, total, partial[0]);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(total, w * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            threads.emplace_back([&, w, begin, end] { sum.accumulate(begin, end, partial[w]); });
        }
        for (auto& t : threads) t.join();
    }

    MultiLaurent out;
    for (const auto& counts : partial) {
        for (const auto& [key, count] : counts) out.add_term(key, count);
    }
    return out;
}

BiLaurent tutte_via_br(const SignedRibbonGraph& g, std::size_t max_edges) {
    const MultiLaurent r = bollobas_riordan(g, max_edges);
    const MultiLaurent one = MultiLaurent::constant(1);
    MultiLaurent shifted = substitute(r, 0, MultiLaurent::variable(0) - one);
    shifted = substitute(shifted, 1, MultiLaurent::variable(1) - one);
    shifted = substitute(shifted, 2, one);
    return drop_third_variable(shifted);
}

BiLaurent duality_invariant(const SignedRibbonGraph& g, std::size_t max_edges) {
    const GraphStats st = stats(g);
    const auto prefactor = MultiLaurent::monomial(
        {static_cast<int>(2 * st.k), static_cast<int>(2 * st.v), static_cast<int>(st.v + 1)});
    return restrict_duality_surface(prefactor * bollobas_riordan(g, max_edges));
}

MultiLaurent duality_monomial(const SignedRibbonGraph& g, std::uint64_t subset) {
    const GraphStats st = stats(g);
    auto e = state_exponents(g, subset);
    e[0] += static_cast<int>(2 * st.k);
    e[1] += static_cast<int>(2 * st.v);
    e[2] += static_cast<int>(st.v + 1);
    return MultiLaurent::monomial(e);
}

}  // namespace ribbon
