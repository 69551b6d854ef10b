#include <algorithm>
#include <deque>
#include <sstream>

#include "ribbon/graph.hpp"

namespace ribbon {

namespace {

// Encodes one connected component starting from a chosen root. Every later choice
// (edge renumbering, arrow-pair reversal, start and direction of each further circle)
// is forced by the traversal, so the minimum over all roots is a complete invariant.
class ComponentEncoder {
public:
    ComponentEncoder(const SignedRibbonGraph& g, bool ignore_signs)
        : g_(g), ignore_signs_(ignore_signs), new_id_(g.num_edges()), flipped_(g.num_edges()),
          visited_(g.num_vertices()) {}

    std::vector<int> encode(std::size_t root_circle, std::size_t root_pos, bool root_reversed) {
        std::fill(new_id_.begin(), new_id_.end(), -1);
        std::fill(visited_.begin(), visited_.end(), 0);
        std::vector<int> tokens;
        std::vector<EdgeId> order;
        std::deque<Visit> queue{{root_circle, root_pos, root_reversed}};
        visited_[root_circle] = 1;
        while (!queue.empty()) {
            const Visit visit = queue.front();
            queue.pop_front();
            const Circle& c = g_.circle(visit.circle);
            tokens.push_back(-1);
            for (std::size_t step = 0; step < c.size(); ++step) {
                const std::size_t pos = visit.reversed ? (visit.start + c.size() - step) % c.size()
                                                       : (visit.start + step) % c.size();
                const Occurrence& occ = c[pos];
                const bool against = (occ.dir == Direction::Against) != visit.reversed;
                if (new_id_[occ.edge] < 0) {
                    new_id_[occ.edge] = static_cast<int>(order.size());
                    order.push_back(occ.edge);
                    flipped_[occ.edge] = against;
                    enqueue_partner(occ.edge, g_.occurrence_index({visit.circle, pos}), queue);
                }
                tokens.push_back(2 * new_id_[occ.edge] + ((against != flipped_[occ.edge]) ? 1 : 0));
            }
        }
        if (!ignore_signs_) {
            tokens.push_back(-2);
            for (EdgeId e : order) tokens.push_back(g_.sign(e) == Sign::Positive ? 1 : 0);
        }
        return tokens;
    }

private:
    struct Visit {
        std::size_t circle;
        std::size_t start;
        bool reversed;
    };

    void enqueue_partner(EdgeId e, std::size_t here, std::deque<Visit>& queue) {
        const auto& occs = g_.occurrences(e);
        const std::size_t there = occs[0] == here ? occs[1] : occs[0];
        const OccurrenceRef ref = g_.occurrence_ref(there);
        if (visited_[ref.circle]) return;
        visited_[ref.circle] = 1;
        const bool against = g_.circle(ref.circle)[ref.position].dir == Direction::Against;
        // Orient the new circle so that this arrow reads Along after the pair reversal.
        queue.push_back({ref.circle, ref.position, against != flipped_[e]});
    }

    const SignedRibbonGraph& g_;
    bool ignore_signs_;
    std::vector<int> new_id_;
    std::vector<bool> flipped_;
    std::vector<char> visited_;
};

}  // namespace

std::string canonical_form(const SignedRibbonGraph& g, bool ignore_signs) {
    const ComponentPartition parts = components(g);
    std::vector<std::vector<int>> best(parts.count);
    std::vector<char> have(parts.count, 0);
    ComponentEncoder encoder(g, ignore_signs);
    for (std::size_t c = 0; c < g.num_vertices(); ++c) {
        const std::size_t cls = parts.circle_class[c];
        const std::size_t len = g.circle(c).size();
        if (len == 0) {
            // An empty circle is its own component.
            best[cls] = {-1};
            have[cls] = 1;
            continue;
        }
        for (std::size_t p = 0; p < len; ++p) {
            for (bool rev : {false, true}) {
                std::vector<int> enc = encoder.encode(c, p, rev);
                if (!have[cls] || enc < best[cls]) {
                    best[cls] = std::move(enc);
                    have[cls] = 1;
                }
            }
        }
    }
    std::sort(best.begin(), best.end());
    std::ostringstream out;
    for (const auto& comp : best) {
        out << '[';
        for (int t : comp) {
            if (t == -1) out << '|';
            else if (t == -2) out << ';';
            else out << t << ',';
        }
        out << ']';
    }
    return out.str();
}

bool is_isomorphic(const SignedRibbonGraph& g, const SignedRibbonGraph& h, bool ignore_signs) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    return canonical_form(g, ignore_signs) == canonical_form(h, ignore_signs);
}

}  // namespace ribbon
