#include "cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ribbon/bollobas_riordan.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/error.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/links.hpp"

namespace ribbon::cli {

namespace {

constexpr std::size_t kExhaustiveVerifyLimit = 12;

class Command {
public:
    explicit Command(std::istream& in) : in_(in) {}

    std::string read(const std::string& path) {
        if (path == "-") {
            std::stringstream ss;
            ss << in_.rdbuf();
            return ss.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
        std::stringstream ss;
        ss << file.rdbuf();
        return ss.str();
    }

    SignedRibbonGraph graph(const std::string& path) { return parse_ribbon_graph(read(path)); }
    VirtualLinkDiagram diagram(const std::string& path) { return parse_gauss(read(path)); }

private:
    std::istream& in_;
};

std::vector<std::string> split_edges(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string subset_text(const SignedRibbonGraph& g, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (EdgeId e : edges_of_mask(mask, g.num_edges())) {
        if (!first) out += ",";
        out += g.label(e);
        first = false;
    }
    return out + "}";
}

std::string stats_report(const SignedRibbonGraph& g) {
    const GraphStats s = stats(g);
    std::ostringstream out;
    out << "v=" << s.v << "\ne=" << s.e << "\nk=" << s.k << "\nr=" << s.r << "\nn=" << s.n << "\nf=" << s.f
        << "\norientable=" << (s.orientable ? "true" : "false") << "\nchi=" << s.chi_closed << "\n"
        << (s.orientable ? "genus=" : "crosscap=") << s.genus_or_crosscap << "\n";
    return out.str();
}

std::string duals_report(const SignedRibbonGraph& g, std::size_t max_edges) {
    const DualOrbit orbit = dual_orbit(g, max_edges);
    std::string out = "classes=" + std::to_string(orbit.count()) + "\n";
    for (std::size_t i = 0; i < orbit.count(); ++i) {
        out += "# class " + std::to_string(i + 1) + ": dual on " + subset_text(g, orbit.subsets[i]) + "\n";
        out += serialize_ribbon_graph(orbit.representatives[i]);
    }
    return out;
}

Result verify_duality(const SignedRibbonGraph& g, std::size_t samples, std::uint64_t seed, std::size_t max_edges) {
    const BiLaurent expected = duality_invariant(g, max_edges);
    std::vector<std::uint64_t> subsets;
    const bool exhaustive = g.num_edges() <= kExhaustiveVerifyLimit;
    if (exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_edges()); ++m) subsets.push_back(m);
    } else {
        std::mt19937_64 rng(seed);
        const std::uint64_t mask = g.num_edges() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.num_edges()) - 1;
        for (std::size_t i = 0; i < samples; ++i) subsets.push_back(rng() & mask);
    }
    Result r;
    for (std::uint64_t m : subsets) {
        const BiLaurent got = duality_invariant(partial_dual_mask(g, m), max_edges);
        if (!(got == expected)) {
            r.exit_code = kVerificationFailed;
            r.out = "FAIL duality-invariant dual=" + subset_text(g, m) + "\n  expected " + render(expected) +
                    "\n  got      " + render(got) + "\n";
            return r;
        }
    }
    r.out = "PASS duality-invariant " + std::string(exhaustive ? "all " : "sampled ") + std::to_string(subsets.size()) +
            " subsets\n";
    return r;
}

}  // namespace

Result run(const std::vector<std::string>& args, std::istream& stdin_stream) {
    CLI::App app{"Signed ribbon graphs, partial duality and the Bollobas-Riordan polynomial", "ribbon"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    std::string file;
    std::string edges;
    std::string state = "seifert";
    std::size_t max_edges = kDefaultEdgeGuard;
    std::size_t max_crossings = kDefaultCrossingGuard;
    std::size_t orbit_guard = 20;
    unsigned workers = 1;
    std::size_t samples = 64;
    std::uint64_t seed = 1;

    auto add_file = [&](CLI::App* sub, const char* what) { sub->add_option("file", file, what)->required(); };
    auto add_edge_guard = [&](CLI::App* sub) {
        sub->add_option("--max-edges", max_edges, "Enumeration guard on the number of edges")->capture_default_str();
    };

    auto* stats_cmd = app.add_subcommand("stats", "Print v, e, k, r, n, f, orientability, Euler characteristic and genus");
    add_file(stats_cmd, "Ribbon graph file (.rg), or - for stdin");

    auto* dual_cmd = app.add_subcommand("dual", "Partial dual with respect to a set of edges");
    add_file(dual_cmd, "Ribbon graph file (.rg), or - for stdin");
    dual_cmd->add_option("--edges", edges, "Edge labels separated by commas or spaces")->required();

    auto* poly_cmd = app.add_subcommand("poly", "Signed Bollobas-Riordan polynomial R(x,y,z)");
    add_file(poly_cmd, "Ribbon graph file (.rg), or - for stdin");
    add_edge_guard(poly_cmd);
    poly_cmd->add_option("--workers", workers, "Threads for the state sum")->capture_default_str();

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial R(x-1, y-1, 1)");
    add_file(tutte_cmd, "Ribbon graph file (.rg), or - for stdin");
    add_edge_guard(tutte_cmd);

    auto* inv_cmd = app.add_subcommand("invariant", "Duality invariant x^k y^v z^(v+1) R restricted to x^(1/2) y^(1/2) z = 1");
    add_file(inv_cmd, "Ribbon graph file (.rg), or - for stdin");
    add_edge_guard(inv_cmd);

    auto* duals_cmd = app.add_subcommand("duals", "Partial duals up to isomorphism ignoring signs");
    add_file(duals_cmd, "Ribbon graph file (.rg), or - for stdin");
    duals_cmd->add_option("--max-edges", orbit_guard, "Enumeration guard on the number of edges")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Check the duality invariant against partial duals");
    add_file(verify_cmd, "Ribbon graph file (.rg), or - for stdin");
    verify_cmd->add_option("--samples", samples, "Random subsets checked when e > 12")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Seed for the random subsets")->capture_default_str();
    add_edge_guard(verify_cmd);

    auto add_link = [&](CLI::App* sub) {
        add_file(sub, "Gauss code file, or - for stdin");
        sub->add_option("--max-crossings", max_crossings, "Enumeration guard on the number of crossings")
            ->capture_default_str();
    };
    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket in A, B, d");
    add_link(bracket_cmd);
    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t");
    add_link(jones_cmd);
    auto* sg_cmd = app.add_subcommand("stategraph", "Ribbon graph of a state of a link diagram");
    add_file(sg_cmd, "Gauss code file, or - for stdin");
    sg_cmd->add_option("--state", state, "seifert, all-A, all-B, or one letter per crossing (0/A or 1/B)")
        ->capture_default_str();

    Result result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        result.exit_code = app.exit(e, out, err);
        if (result.exit_code != 0) result.exit_code = kInputError;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    Command cmd(stdin_stream);
    try {
        if (*stats_cmd) {
            result.out = stats_report(cmd.graph(file));
        } else if (*dual_cmd) {
            const SignedRibbonGraph g = cmd.graph(file);
            result.out = serialize_ribbon_graph(partial_dual(g, split_edges(edges)));
        } else if (*poly_cmd) {
            result.out = render(bollobas_riordan(cmd.graph(file), max_edges, workers)) + "\n";
        } else if (*tutte_cmd) {
            result.out = render(tutte_via_br(cmd.graph(file), max_edges)) + "\n";
        } else if (*inv_cmd) {
            result.out = render(duality_invariant(cmd.graph(file), max_edges)) + "\n";
        } else if (*duals_cmd) {
            result.out = duals_report(cmd.graph(file), orbit_guard);
        } else if (*verify_cmd) {
            result = verify_duality(cmd.graph(file), samples, seed, max_edges);
        } else if (*bracket_cmd) {
            result.out = render(kauffman_bracket(cmd.diagram(file), max_crossings)) + "\n";
        } else if (*jones_cmd) {
            result.out = render(jones(cmd.diagram(file), max_crossings)) + "\n";
        } else if (*sg_cmd) {
            const VirtualLinkDiagram d = cmd.diagram(file);
            result.out = serialize_ribbon_graph(state_ribbon_graph(d, parse_state(d, state)));
        }
    } catch (const Error& e) {
        result.exit_code = e.is_input_error() ? kInputError : kGuardExceeded;
        result.out.clear();
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kInputError;
        result.out.clear();
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace ribbon::cli
