#include <map>
#include <optional>
#include <sstream>

#include "ribbon/error.hpp"
#include "ribbon/graph.hpp"
#include "text_lines.hpp"

namespace ribbon {

SignedRibbonGraph parse_ribbon_graph(std::string_view text) {
    std::optional<std::map<std::string, Sign>> signs;
    std::vector<std::vector<SignedRibbonGraph::LabelledOccurrence>> circles;
    bool first = true;
    for (const detail::Line& line : detail::split_lines(text)) {
        if (line.tokens.empty()) continue;
        const detail::Token& head = line.tokens.front();
        if (first && head.text == "ribbon-graph") {
            first = false;
            if (line.tokens.size() != 2 || line.tokens[1].text != "v1") {
                throw ParseError(line.number, head.column, "unsupported header, expected 'ribbon-graph v1'");
            }
            continue;
        }
        first = false;
        if (head.text == "edges:") {
            if (signs) throw ParseError(line.number, head.column, "duplicate 'edges:' line");
            signs.emplace();
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const detail::Token& tok = line.tokens[i];
                const auto colon = tok.text.rfind(':');
                if (colon == std::string::npos || colon + 2 != tok.text.size() ||
                    (tok.text.back() != '+' && tok.text.back() != '-')) {
                    throw ParseError(line.number, tok.column, "expected <label>:<+|->, got '" + tok.text + "'");
                }
                std::string label = tok.text.substr(0, colon);
                if (!is_valid_label(label)) throw ParseError(line.number, tok.column, "invalid label '" + label + "'");
                const Sign sign = tok.text.back() == '+' ? Sign::Positive : Sign::Negative;
                if (!signs->emplace(std::move(label), sign).second) {
                    throw ParseError(line.number, tok.column, "edge listed twice in 'edges:'");
                }
            }
        } else if (head.text == "circle:") {
            auto& circle = circles.emplace_back();
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const detail::Token& tok = line.tokens[i];
                std::string label = tok.text;
                Direction dir = Direction::Along;
                if (label.back() == '\'') {
                    label.pop_back();
                    dir = Direction::Against;
                }
                if (!is_valid_label(label)) throw ParseError(line.number, tok.column, "invalid occurrence '" + tok.text + "'");
                circle.push_back({std::move(label), dir});
            }
        } else {
            throw ParseError(line.number, head.column, "expected 'edges:' or 'circle:', got '" + head.text + "'");
        }
    }
    return SignedRibbonGraph::from_labels(circles, signs.value_or(std::map<std::string, Sign>{}));
}

std::string serialize_ribbon_graph(const SignedRibbonGraph& g) {
    std::ostringstream out;
    out << "ribbon-graph v1\nedges:";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out << ' ' << g.label(e) << ':' << (g.sign(e) == Sign::Positive ? '+' : '-');
    }
    out << '\n';
    for (const Circle& c : g.circles()) {
        out << "circle:";
        for (const Occurrence& occ : c) {
            out << ' ' << g.label(occ.edge);
            if (occ.dir == Direction::Against) out << '\'';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ribbon
