#include "ribbon/links.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ribbon/error.hpp"
#include "text_lines.hpp"

namespace ribbon {

VirtualLinkDiagram::VirtualLinkDiagram(std::vector<std::vector<Pass>> components,
                                       std::vector<std::pair<CrossingId, Sign>> signs)
    : components_(std::move(components)) {
    std::map<CrossingId, Sign> sign_of;
    for (const auto& [id, s] : signs) {
        if (!sign_of.emplace(id, s).second) {
            throw Error(ErrorCode::SignConflict, "crossing " + std::to_string(id) + " has two sign entries");
        }
    }
    std::map<CrossingId, std::array<int, 2>> roles;  // over count, under count
    for (const auto& comp : components_) {
        for (const Pass& p : comp) ++roles[p.crossing][p.role == Role::Over ? 0 : 1];
    }
    for (const auto& [id, count] : roles) {
        if (count[0] + count[1] != 2) {
            throw Error(ErrorCode::DanglingCrossing, "crossing " + std::to_string(id) + " is passed " +
                                                         std::to_string(count[0] + count[1]) + " times");
        }
        if (count[0] != 1) {
            throw Error(ErrorCode::RoleConflict, "crossing " + std::to_string(id) + " is passed twice as " +
                                                     (count[0] == 2 ? "over" : "under"));
        }
        auto it = sign_of.find(id);
        if (it == sign_of.end()) throw Error(ErrorCode::UnknownSign, "crossing " + std::to_string(id) + " has no sign");
        crossings_.push_back(id);
        signs_.push_back(it->second);
    }
    for (const auto& [id, s] : sign_of) {
        if (!roles.count(id)) throw Error(ErrorCode::DanglingCrossing, "crossing " + std::to_string(id) + " is never passed");
    }
}

std::size_t VirtualLinkDiagram::crossing_index(CrossingId id) const {
    auto it = std::lower_bound(crossings_.begin(), crossings_.end(), id);
    if (it == crossings_.end() || *it != id) throw Error(ErrorCode::UnknownEdge, "no crossing " + std::to_string(id));
    return static_cast<std::size_t>(it - crossings_.begin());
}

namespace {

struct PassToken {
    Pass pass;
    Sign sign;
};

PassToken parse_pass(const detail::Token& tok, std::size_t line) {
    const std::string& t = tok.text;
    if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') || (t.back() != '+' && t.back() != '-')) {
        throw ParseError(line, tok.column, "expected a pass token like O1+ or U2-, got '" + t + "'");
    }
    const std::string digits = t.substr(1, t.size() - 2);
    if (digits.size() > 9 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(line, tok.column + 1, "bad crossing id '" + digits + "'");
    }
    return {{static_cast<CrossingId>(std::stoul(digits)), t[0] == 'O' ? Role::Over : Role::Under},
            t.back() == '+' ? Sign::Positive : Sign::Negative};
}

}  // namespace

VirtualLinkDiagram parse_gauss(std::string_view text) {
    std::vector<std::vector<Pass>> components;
    std::map<CrossingId, Sign> signs;
    bool first = true;
    for (const auto& line : detail::split_lines(text)) {
        if (line.tokens.empty()) continue;
        const bool was_first = first;
        first = false;
        if (was_first && line.tokens[0].text == "gauss") {
            if (line.tokens.size() != 2 || line.tokens[1].text != "v1") {
                throw ParseError(line.number, line.tokens[0].column, "unsupported header, expected 'gauss v1'");
            }
            continue;
        }
        std::size_t start = 0;
        if (line.tokens[0].text == "component:") start = 1;
        std::vector<Pass> comp;
        for (std::size_t i = start; i < line.tokens.size(); ++i) {
            const PassToken pt = parse_pass(line.tokens[i], line.number);
            auto [it, inserted] = signs.emplace(pt.pass.crossing, pt.sign);
            if (!inserted && it->second != pt.sign) {
                throw Error(ErrorCode::SignConflict, "line " + std::to_string(line.number) + ": crossing " +
                                                         std::to_string(pt.pass.crossing) + " has conflicting signs");
            }
            comp.push_back(pt.pass);
        }
        components.push_back(std::move(comp));
    }
    if (components.empty()) components.emplace_back();
    return VirtualLinkDiagram(std::move(components), {signs.begin(), signs.end()});
}

std::string serialize_gauss(const VirtualLinkDiagram& d) {
    std::string out = "gauss v1\n";
    for (const auto& comp : d.components()) {
        out += "component:";
        for (const Pass& p : comp) {
            out += ' ';
            out += p.role == Role::Over ? 'O' : 'U';
            out += std::to_string(p.crossing);
            out += d.sign(d.crossing_index(p.crossing)) == Sign::Positive ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

long writhe(const VirtualLinkDiagram& d) {
    long w = 0;
    for (std::size_t i = 0; i < d.num_crossings(); ++i) w += static_cast<int>(d.sign(i));
    return w;
}

namespace {

/// Strand ends and their local positions. Pass p owns ends 2p (in) and 2p+1 (out).
/// Around crossing c the four ends sit counterclockwise at positions 0..3:
/// (over-in, under-in, over-out, under-out) if positive,
/// (over-in, under-out, over-out, under-in) if negative.
class EndTables {
public:
    explicit EndTables(const VirtualLinkDiagram& d) : empty_components_(0) {
        std::size_t total = 0;
        for (const auto& comp : d.components()) total += comp.size();
        strand_.resize(2 * total);
        crossing_.resize(2 * total);
        position_.resize(2 * total);
        at_.resize(d.num_crossings());
        std::vector<std::array<std::size_t, 2>> passes(d.num_crossings());  // over, under
        std::size_t base = 0;
        for (const auto& comp : d.components()) {
            if (comp.empty()) ++empty_components_;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const std::size_t p = base + i;
                const std::size_t next = base + (i + 1) % comp.size();
                strand_[2 * p + 1] = static_cast<std::uint32_t>(2 * next);
                strand_[2 * next] = static_cast<std::uint32_t>(2 * p + 1);
                passes[d.crossing_index(comp[i].crossing)][comp[i].role == Role::Over ? 0 : 1] = p;
            }
            base += comp.size();
        }
        for (std::size_t c = 0; c < d.num_crossings(); ++c) {
            const auto over = static_cast<std::uint32_t>(passes[c][0]);
            const auto under = static_cast<std::uint32_t>(passes[c][1]);
            if (d.sign(c) == Sign::Positive) {
                at_[c] = {2 * over, 2 * under, 2 * over + 1, 2 * under + 1};
            } else {
                at_[c] = {2 * over, 2 * under + 1, 2 * over + 1, 2 * under};
            }
            for (std::uint32_t j = 0; j < 4; ++j) {
                crossing_[at_[c][j]] = static_cast<std::uint32_t>(c);
                position_[at_[c][j]] = static_cast<std::uint8_t>(j);
            }
        }
    }

    std::size_t num_ends() const noexcept { return strand_.size(); }
    std::size_t empty_components() const noexcept { return empty_components_; }
    std::uint32_t strand(std::uint32_t end) const noexcept { return strand_[end]; }
    std::uint32_t crossing(std::uint32_t end) const noexcept { return crossing_[end]; }

    /// The end joined to `end` by the smoothing arc; A joins positions {1,2},{3,0}
    /// and B joins {0,1},{2,3}.
    std::uint32_t smooth(std::uint32_t end, Splitting s) const noexcept {
        static constexpr std::uint8_t kA[4] = {3, 2, 1, 0};
        static constexpr std::uint8_t kB[4] = {1, 0, 3, 2};
        const std::uint8_t j = position_[end];
        return at_[crossing_[end]][s == Splitting::A ? kA[j] : kB[j]];
    }

    /// Whether the arc leaving `end` runs from position j to j+1.
    bool forward(std::uint32_t end, Splitting s) const noexcept {
        const std::uint8_t j = position_[end];
        return s == Splitting::A ? (j == 1 || j == 3) : (j == 0 || j == 2);
    }

private:
    std::vector<std::uint32_t> strand_;
    std::vector<std::uint32_t> crossing_;
    std::vector<std::uint8_t> position_;
    std::vector<std::array<std::uint32_t, 4>> at_;
    std::size_t empty_components_;
};

void check_state(const VirtualLinkDiagram& d, const State& s) {
    if (s.size() != d.num_crossings()) {
        throw Error(ErrorCode::InvalidState, "state has " + std::to_string(s.size()) + " entries for " +
                                                 std::to_string(d.num_crossings()) + " crossings");
    }
}

std::size_t count_curves(const EndTables& t, const State& s, std::vector<char>& seen) {
    seen.assign(t.num_ends(), 0);
    std::size_t curves = t.empty_components();
    for (std::uint32_t start = 0; start < t.num_ends(); ++start) {
        if (seen[start]) continue;
        ++curves;
        std::uint32_t c = start;
        do {
            seen[c] = 1;
            const std::uint32_t o = t.smooth(c, s[t.crossing(c)]);
            seen[o] = 1;
            c = t.strand(o);
        } while (c != start);
    }
    return curves;
}

void check_guard(const VirtualLinkDiagram& d, std::size_t max_crossings) {
    if (d.num_crossings() > max_crossings || d.num_crossings() >= 63) {
        throw Error(ErrorCode::TooManyCrossings, std::to_string(d.num_crossings()) +
                                                     " crossings exceeds the state-sum guard of " +
                                                     std::to_string(max_crossings));
    }
}

}  // namespace

StateExpansion resolve_state(const VirtualLinkDiagram& d, const State& s) {
    check_state(d, s);
    const EndTables t(d);
    StateExpansion out;
    out.alpha = std::count(s.begin(), s.end(), Splitting::A);
    out.beta = static_cast<long>(s.size()) - out.alpha;
    std::vector<char> seen(t.num_ends(), 0);
    for (std::uint32_t start = 0; start < t.num_ends(); ++start) {
        if (seen[start]) continue;
        std::vector<ArcVisit> circle;
        std::uint32_t c = start;
        do {
            seen[c] = 1;
            const Splitting split = s[t.crossing(c)];
            const std::uint32_t o = t.smooth(c, split);
            circle.push_back({t.crossing(c), t.forward(c, split)});
            seen[o] = 1;
            c = t.strand(o);
        } while (c != start);
        out.circles.push_back(std::move(circle));
    }
    for (std::size_t i = 0; i < t.empty_components(); ++i) out.circles.emplace_back();
    out.delta = static_cast<long>(out.circles.size());
    return out;
}

MultiLaurent kauffman_bracket(const VirtualLinkDiagram& d, std::size_t max_crossings) {
    check_guard(d, max_crossings);
    const EndTables t(d);
    const std::size_t n = d.num_crossings();
    std::map<std::pair<long, long>, long long> counts;  // (alpha, delta)
    State s(n);
    std::vector<char> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        long alpha = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = ((mask >> i) & 1u) ? Splitting::B : Splitting::A;
            if (s[i] == Splitting::A) ++alpha;
        }
        ++counts[{alpha, static_cast<long>(count_curves(t, s, seen))}];
    }
    MultiLaurent out(kBracketNames);
    for (const auto& [key, count] : counts) {
        const auto [alpha, delta] = key;
        out.add_term({static_cast<int>(2 * alpha), static_cast<int>(2 * (static_cast<long>(n) - alpha)),
                      static_cast<int>(delta - 1)},
                     count);
    }
    return out;
}

namespace {

QuarterLaurent delta_t() {
    return -QuarterLaurent::monomial({2}) - QuarterLaurent::monomial({-2});
}

}  // namespace

QuarterLaurent jones(const VirtualLinkDiagram& d, std::size_t max_crossings) {
    const MultiLaurent bracket = kauffman_bracket(d, max_crossings);
    const QuarterLaurent delta = delta_t();
    QuarterLaurent sum;
    for (const auto& [e, c] : bracket.terms()) {
        // A^(a/2) B^(b/2) with A = t^(-1/4), B = t^(1/4): a/2 and b/2 quarter units.
        if (e[0] % 2 != 0 || e[1] % 2 != 0) {
            throw Error(ErrorCode::FractionalExponent, "bracket has a half-integer power of A or B");
        }
        sum += QuarterLaurent::monomial({(e[1] - e[0]) / 2}, c) * delta.pow(e[2]);
    }
    const long w = writhe(d);
    return sum * QuarterLaurent::monomial({static_cast<int>(3 * w)}, (w % 2 == 0) ? 1 : -1);
}

State seifert_state(const VirtualLinkDiagram& d) {
    State s(d.num_crossings());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = d.sign(i) == Sign::Positive ? Splitting::A : Splitting::B;
    return s;
}

State all_A_state(const VirtualLinkDiagram& d) { return State(d.num_crossings(), Splitting::A); }

State all_B_state(const VirtualLinkDiagram& d) { return State(d.num_crossings(), Splitting::B); }

State parse_state(const VirtualLinkDiagram& d, std::string_view selector) {
    if (selector == "seifert") return seifert_state(d);
    if (selector == "all-A") return all_A_state(d);
    if (selector == "all-B") return all_B_state(d);
    if (selector.size() != d.num_crossings()) {
        throw Error(ErrorCode::InvalidState, "state '" + std::string(selector) + "' does not have one letter per crossing (" +
                                                 std::to_string(d.num_crossings()) + ")");
    }
    State s;
    for (char ch : selector) {
        if (ch == '0' || ch == 'A') s.push_back(Splitting::A);
        else if (ch == '1' || ch == 'B') s.push_back(Splitting::B);
        else throw Error(ErrorCode::InvalidState, std::string("bad state letter '") + ch + "'");
    }
    return s;
}

std::string state_string(const State& s) {
    std::string out;
    for (Splitting x : s) out += x == Splitting::A ? 'A' : 'B';
    return out;
}

SignedRibbonGraph state_ribbon_graph(const VirtualLinkDiagram& d, const State& s) {
    const StateExpansion ex = resolve_state(d, s);
    std::vector<Circle> circles;
    circles.reserve(ex.circles.size());
    for (const auto& visits : ex.circles) {
        Circle c;
        c.reserve(visits.size());
        // Each band carries the counterclockwise orientation, so its arrows run forward.
        for (const ArcVisit& v : visits) {
            c.push_back({static_cast<EdgeId>(v.crossing), v.forward ? Direction::Along : Direction::Against});
        }
        circles.push_back(std::move(c));
    }
    std::vector<std::string> labels;
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < d.num_crossings(); ++i) {
        labels.push_back(std::to_string(d.crossings()[i]));
        signs.push_back(s[i] == Splitting::A ? Sign::Positive : Sign::Negative);
    }
    return SignedRibbonGraph(std::move(labels), std::move(signs), std::move(circles));
}

namespace {

struct HalfSplit {
    int p;    ///< integer part of the x exponent
    int q;    ///< integer part of the y exponent
    int eps;  ///< shared half: x^(p + eps/2) y^(q + eps/2)
};

HalfSplit split_halves(const MultiLaurent::Exponents& e) {
    const int ex = ((e[0] % 2) + 2) % 2;
    const int ey = ((e[1] % 2) + 2) % 2;
    if (ex != ey) throw Error(ErrorCode::FractionalExponent, "unpaired half-integer power of x or y");
    return {(e[0] - ex) / 2, (e[1] - ex) / 2, ex};
}

}  // namespace

MultiLaurent evaluate_on_bracket_surface(const MultiLaurent& r, long e, long k, long v) {
    MultiLaurent out(kBracketNames);
    for (const auto& [exp, c] : r.terms()) {
        MultiLaurent::Exponents full = exp;
        full[0] += static_cast<int>(2 * k);
        full[1] += static_cast<int>(2 * v);
        full[2] += static_cast<int>(v + 1);
        const HalfSplit h = split_halves(full);
        // x^p y^q = A^(p-q) B^(q-p) d^(p+q); (xy)^(1/2) = d; z = 1/d.
        out.add_term({2 * (h.p - h.q + static_cast<int>(e)), 2 * (h.q - h.p), h.p + h.q + h.eps - full[2]}, c);
    }
    return out;
}

QuarterLaurent jones_from_state_graph(const MultiLaurent& r, long writhe_value, long e, long rank, long k) {
    const QuarterLaurent one = QuarterLaurent::constant(1);
    const QuarterLaurent x = -one - QuarterLaurent::monomial({-4});
    const QuarterLaurent y = -QuarterLaurent::monomial({4}) - one;
    const QuarterLaurent delta = delta_t();

    // Terms grouped by the power of delta; xy = delta^2 lets negative powers of x
    // (or y) trade for positive powers of y (or x).
    std::map<int, QuarterLaurent> by_delta;
    for (const auto& [exp, c] : r.terms()) {
        const HalfSplit h = split_halves(exp);
        int m = h.eps - exp[2] + static_cast<int>(k - 1);
        QuarterLaurent term = QuarterLaurent::constant(c);
        if (h.p >= 0) {
            term *= x.pow(h.p);
        } else {
            term *= y.pow(-h.p);
            m += 2 * h.p;
        }
        if (h.q >= 0) {
            term *= y.pow(h.q);
        } else {
            term *= x.pow(-h.q);
            m += 2 * h.q;
        }
        by_delta[m] += term;
    }
    const int shift = by_delta.empty() ? 0 : std::max(0, -by_delta.begin()->first);
    QuarterLaurent numerator;
    for (const auto& [m, poly] : by_delta) numerator += poly * delta.pow(m + shift);
    const QuarterLaurent value = divide_exact(numerator, delta.pow(shift));
    const long units = 3 * writhe_value - e + 2 * rank;
    return value * QuarterLaurent::monomial({static_cast<int>(units)}, (writhe_value % 2 == 0) ? 1 : -1);
}

}  // namespace ribbon
