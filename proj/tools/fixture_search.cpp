// Exhaustive searches that produced the shipped fixtures under data/fixtures.
//
//   ribbon-fixture-search gauss --crossings 2 --bracket "A^2*d + 2*A*B + B^2"
//   ribbon-fixture-search gauss --crossings 3 --graph data/fixtures/klein.rg --state ABB
//   ribbon-fixture-search table
//
// Gauss codes are enumerated on one component, crossing ids numbered by first
// appearance, with every over/under assignment and every sign pattern.

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ribbon/bollobas_riordan.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/links.hpp"

namespace {

using namespace ribbon;

void for_each_gauss_code(std::size_t n, const std::function<void(const VirtualLinkDiagram&)>& visit) {
    std::vector<CrossingId> word(2 * n);
    std::vector<int> used(n + 1, 0);
    // Words where crossing i first appears before crossing i + 1.
    std::function<void(std::size_t, CrossingId)> fill = [&](std::size_t pos, CrossingId next_new) {
        if (pos == word.size()) {
            for (std::uint64_t over_first = 0; over_first < (1u << n); ++over_first) {
                for (std::uint64_t negative = 0; negative < (1u << n); ++negative) {
                    std::vector<int> seen(n + 1, 0);
                    std::vector<Pass> passes;
                    for (CrossingId c : word) {
                        const bool first = seen[c]++ == 0;
                        const bool over = ((over_first >> (c - 1)) & 1u) ? first : !first;
                        passes.push_back({c, over ? Role::Over : Role::Under});
                    }
                    std::vector<std::pair<CrossingId, Sign>> signs;
                    for (CrossingId c = 1; c <= n; ++c) {
                        signs.emplace_back(c, ((negative >> (c - 1)) & 1u) ? Sign::Negative : Sign::Positive);
                    }
                    visit(VirtualLinkDiagram({passes}, signs));
                }
            }
            return;
        }
        for (CrossingId c = 1; c <= next_new && c <= n; ++c) {
            if (used[c] == 2) continue;
            ++used[c];
            word[pos] = c;
            fill(pos + 1, c == next_new ? next_new + 1 : next_new);
            --used[c];
        }
    };
    fill(0, 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string one_line(const VirtualLinkDiagram& d) {
    std::string s = serialize_gauss(d);
    s = s.substr(s.find('\n') + 1);
    s.pop_back();
    return s;
}

// Candidate arrow presentations: circle one holds the loop 1 and one end each of 2
// and 3, circle two holds the other ends; every cyclic order and flag pattern.
void search_table() {
    // Rows of the spanning-subgraph table: edge subset -> (k, r, n, f, 2s).
    const std::vector<std::pair<std::uint64_t, SubgraphStats>> rows = {
        {0b000, {2, 0, 0, 2, -2}}, {0b001, {2, 0, 1, 2, -2}}, {0b010, {1, 1, 0, 1, 0}},
        {0b100, {1, 1, 0, 1, 0}},  {0b011, {1, 1, 1, 1, 0}},  {0b101, {1, 1, 1, 1, 0}},
        {0b110, {1, 1, 1, 2, 2}},  {0b111, {1, 1, 2, 1, 2}},
    };
    const std::vector<std::vector<EdgeId>> orders = {{0, 0, 1, 2}, {0, 0, 2, 1}, {0, 1, 0, 2},
                                                     {0, 2, 0, 1}, {0, 1, 2, 0}, {0, 2, 1, 0}};
    std::size_t candidates = 0;
    std::size_t matches = 0;
    std::set<std::string> classes;
    for (const auto& order : orders) {
        for (unsigned flags = 0; flags < 64; ++flags) {
            Circle one;
            Circle two;
            for (std::size_t i = 0; i < 4; ++i) {
                one.push_back({order[i], ((flags >> i) & 1u) ? Direction::Against : Direction::Along});
            }
            two.push_back({1, ((flags >> 4) & 1u) ? Direction::Against : Direction::Along});
            two.push_back({2, ((flags >> 5) & 1u) ? Direction::Against : Direction::Along});
            ++candidates;
            const SignedRibbonGraph g({"1", "2", "3"}, {Sign::Positive, Sign::Negative, Sign::Negative}, {one, two});
            bool ok = true;
            for (const auto& [mask, row] : rows) ok = ok && subgraph_stats(g, mask) == row;
            if (ok) {
                ++matches;
                classes.insert(canonical_form(g, false));
                std::cout << "match:\n" << serialize_ribbon_graph(g);
            }
        }
    }
    std::cout << "candidates=" << candidates << " matches=" << matches << " classes=" << classes.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive fixture searches"};
    app.require_subcommand(1);

    auto* gauss = app.add_subcommand("gauss", "Search one-component signed Gauss codes");
    std::size_t crossings = 2;
    std::string bracket_text;
    std::string jones_text;
    std::string graph_path;
    std::string state_text;
    gauss->add_option("--crossings", crossings, "Number of classical crossings")->required();
    gauss->add_option("--bracket", bracket_text, "Required Kauffman bracket");
    gauss->add_option("--jones", jones_text, "Required Jones polynomial");
    gauss->add_option("--graph", graph_path, "Required state ribbon graph (.rg), up to signed isomorphism");
    gauss->add_option("--state", state_text, "State used with --graph, one letter per crossing");

    app.add_subcommand("table", "Search arrow presentations matching the spanning-subgraph table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("table")) {
            search_table();
            return 0;
        }
        std::optional<MultiLaurent> bracket;
        std::optional<QuarterLaurent> jones_target;
        std::optional<SignedRibbonGraph> graph;
        if (!bracket_text.empty()) bracket = parse_laurent<MultiLaurent>(bracket_text, kBracketNames);
        if (!jones_text.empty()) jones_target = parse_laurent<QuarterLaurent>(jones_text);
        if (!graph_path.empty()) graph = parse_ribbon_graph(read_file(graph_path));
        std::size_t examined = 0;
        std::size_t found = 0;
        for_each_gauss_code(crossings, [&](const VirtualLinkDiagram& d) {
            ++examined;
            if (bracket && !(kauffman_bracket(d) == *bracket)) return;
            if (jones_target && !(jones(d) == *jones_target)) return;
            if (graph && !is_isomorphic(state_ribbon_graph(d, parse_state(d, state_text)), *graph, false)) return;
            ++found;
            std::cout << one_line(d) << "\n";
        });
        std::cout << "examined=" << examined << " found=" << found << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
