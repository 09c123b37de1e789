// Command line front end: verify the identity registry, reproduce the
// bundled worked-example tables, run single bijection maps, and sweep the
// round-trip properties.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ferrers/bijections.hpp"
#include "ferrers/families.hpp"
#include "ferrers/identities.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/odd_ferrers.hpp"
#include "ferrers/partition.hpp"

namespace {

using nlohmann::json;
using namespace ferrers;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string data_dir_default()
{
#ifdef FERRERS_DATA_DIR
    return FERRERS_DATA_DIR;
#else
    return "data";
#endif
}

json load_tables(const std::string& data_dir)
{
    const std::string path = data_dir + "/tables.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::string render_pairs_line(const Partition& p, const OddFerrersGraph& g)
{
    return p.str() + "  <->  " + g.str();
}

int cmd_verify(const std::string& name, int order, bool as_json, bool list_only)
{
    if (list_only) {
        for (const auto& e : registry())
            std::cout << e.name << ": " << e.anchor << '\n';
        return 0;
    }
    std::vector<const IdentityEntry*> selected;
    if (name == "all") {
        for (const auto& e : registry()) selected.push_back(&e);
    } else {
        const IdentityEntry* e = find_entry(name);
        if (!e) {
            std::cerr << "unknown identity name: " << name << '\n';
            return kExitUsage;
        }
        selected.push_back(e);
    }
    bool all_pass = true;
    json out = json::array();
    for (const IdentityEntry* e : selected) {
        const VerificationReport report = verify(*e, order);
        all_pass = all_pass && report.pass;
        if (as_json) {
            out.push_back(to_json(report));
        } else {
            std::cout << (report.pass ? "PASS" : "FAIL") << "  " << report.name
                      << "  (order " << report.order << ")";
            if (report.first_discrepancy) {
                const auto& d = *report.first_discrepancy;
                std::cout << "  first discrepancy at q^" << d.q << " y^" << d.y
                          << " z^" << d.z << ": lhs=" << d.lhs << " rhs=" << d.rhs;
            }
            std::cout << '\n';
        }
    }
    if (as_json) std::cout << out.dump(2) << '\n';
    return all_pass ? 0 : kExitFail;
}

void print_trace(const BijectionTrace& trace, bool as_json)
{
    if (as_json) {
        std::cout << to_json(trace).dump(2) << '\n';
        return;
    }
    for (size_t i = 0; i < trace.diffs.values.size(); ++i)
        std::cout << "step " << i + 1 << ": "
                  << trace.partition_chain[i + 1].str()
                  << "  delta=" << trace.diffs.values[i] << '\n';
}

int cmd_map(const std::string& direction, const std::string& family,
            const std::string& object, bool as_json)
{
    const bool forward = direction == "forward";
    const bool omega = family == "omega";
    const Partition parsed = Partition::parse(object);
    if (forward) {
        const auto violation =
            omega ? p_omega_violation(parsed) : p_nu_violation(parsed);
        if (violation) {
            std::cerr << "not a member: " << *violation << '\n';
            return kExitUsage;
        }
        auto [graph, trace] = omega ? omega_forward(parsed) : nu_forward(parsed);
        if (!as_json) std::cout << graph.str() << '\n';
        print_trace(trace, as_json);
        if (!as_json) std::cout << graph.render();
        return 0;
    }
    const OddFerrersGraph graph{parsed};
    if (!omega && !graph.is_distinct()) {
        std::cerr << "not a member: shape is not distinct\n";
        return kExitUsage;
    }
    auto [image, trace] = omega ? omega_inverse(graph) : nu_inverse(graph);
    if (!as_json) std::cout << image.str() << '\n';
    print_trace(trace, as_json);
    return 0;
}

int cmd_table(int which, bool check, bool as_json, const std::string& data_dir)
{
    const json tables = load_tables(data_dir);
    bool ok = true;
    json out;
    if (which == 1 || which == 3) {
        const json& fixture = tables[which == 1 ? "table1" : "table3"];
        const Partition start = partition_from_json(fixture["start"]);
        const auto [graph, trace] =
            which == 1 ? omega_forward(start) : nu_forward(start);
        (void)graph;
        if (as_json) {
            out = to_json(trace);
        } else {
            std::cout << "trace of " << start.str() << ":\n";
            print_trace(trace, false);
        }
        if (check) {
            const json& steps = fixture["steps"];
            ok = steps.size() == trace.diffs.values.size();
            for (size_t i = 0; ok && i < steps.size(); ++i) {
                ok = partition_from_json(steps[i]["partition"]) ==
                         trace.partition_chain[i + 1] &&
                     steps[i]["delta"].get<long long>() == trace.diffs.values[i];
            }
        }
    } else if (which == 2 || which == 4) {
        const json& fixture = tables[which == 2 ? "table2" : "table4"];
        const int m = fixture["m"].get<int>();
        const long long n = fixture["n"].get<long long>();
        const Family family = which == 2 ? Family::p_omega : Family::p_nu;
        const auto members = enumerate_partitions(family, m, n);
        std::map<Partition, Partition> image;  // partition -> shape
        for (const auto& p : members) {
            const auto [graph, trace] =
                which == 2 ? omega_forward(p) : nu_forward(p);
            (void)trace;
            image.emplace(p, graph.shape());
        }
        if (as_json) {
            out = json::array();
            for (const auto& [p, shape] : image)
                out.push_back(json{{"partition", p.parts()},
                                   {"shape", shape.parts()}});
        } else {
            for (const auto& [p, shape] : image)
                std::cout << render_pairs_line(p, OddFerrersGraph(shape)) << '\n';
        }
        if (check) {
            const json& pairs = fixture["pairs"];
            ok = pairs.size() == image.size();
            for (const auto& pair : pairs) {
                const Partition p = partition_from_json(pair["partition"]);
                const Partition shape = partition_from_json(pair["shape"]);
                auto it = image.find(p);
                if (it == image.end() || it->second != shape) ok = false;
            }
        }
    } else {
        std::cerr << "table number must be 1..4\n";
        return kExitUsage;
    }
    if (as_json) std::cout << out.dump(2) << '\n';
    if (check) {
        std::cout << (ok ? "table check: OK" : "table check: MISMATCH") << '\n';
        return ok ? 0 : kExitFail;
    }
    return 0;
}

int cmd_fuzz(const std::string& family, int max_n, unsigned seed, bool as_json)
{
    const bool omega = family == "omega";
    long long violations = 0;
    json cells = json::array();
    for (long long n = 0; n <= max_n; ++n) {
        for (int len = 1; len <= n + 1; ++len) {
            const auto members = enumerate_partitions(
                omega ? Family::p_omega : Family::p_nu, len - 1, n);
            if (members.empty()) continue;
            long long cell_violations = 0;
            for (const auto& p : members) {
                const auto [graph, trace] =
                    omega ? omega_forward(p) : nu_forward(p);
                if (!check_claims(trace.diffs)) ++cell_violations;
                const auto [back, itrace] =
                    omega ? omega_inverse(graph) : nu_inverse(graph);
                if (!check_claims(itrace.diffs)) ++cell_violations;
                if (back != p) ++cell_violations;
            }
            violations += cell_violations;
            if (as_json)
                cells.push_back(json{{"m", len - 1},
                                     {"n", n},
                                     {"count", members.size()},
                                     {"violations", cell_violations}});
            else
                std::cout << "m=" << len - 1 << " n=" << n << ": "
                          << members.size() << " members, " << cell_violations
                          << " violations\n";
        }
    }
    // Graph-side sweep: inverse then forward must reproduce the graph.
    for (const auto& shape : shapes_with_graph_size_up_to(max_n, !omega)) {
        const OddFerrersGraph g(shape);
        const auto [p, itrace] = omega ? omega_inverse(g) : nu_inverse(g);
        if (!check_claims(itrace.diffs)) ++violations;
        const auto [g2, ftrace] = omega ? omega_forward(p) : nu_forward(p);
        if (!check_claims(ftrace.diffs)) ++violations;
        if (!(g2 == g)) ++violations;
    }
    // Seeded random constructive walks stay inside the set.
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> start_part(0, 6);
    std::uniform_int_distribution<int> branch(0, 1);
    for (int walk = 0; walk < 64; ++walk) {
        Partition p(std::vector<int>{start_part(rng)});
        for (int step = 0; step < 10; ++step) {
            const Branch b = branch(rng) ? Branch::one : Branch::two;
            p = omega ? psi_plus(p, b) : rho_plus(p, b);
            const bool member = omega ? is_in_p_omega(p) : is_in_p_nu(p);
            if (!member) ++violations;
        }
    }
    if (as_json) {
        std::cout << json{{"family", family},
                          {"max_n", max_n},
                          {"seed", seed},
                          {"cells", std::move(cells)},
                          {"violations", violations}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "total violations: " << violations << '\n';
    }
    return violations == 0 ? 0 : kExitFail;
}

int cmd_family(const std::string& name, int max_n, bool as_json)
{
    const auto family = family_from_name(name);
    if (!family) {
        std::cerr << "unknown family: " << name << '\n';
        return kExitUsage;
    }
    json out = json::array();
    for (long long n = 0; n <= max_n; ++n) {
        std::map<std::pair<int, int>, std::vector<std::string>> cells;
        if (is_trivariate_family(*family)) {
            for (int ell = 0; ell <= n; ++ell)
                for (int m = 0; m <= n; ++m)
                    for (const auto& g : enumerate_graphs(*family, ell, m, n))
                        cells[{ell, m}].push_back(g.str());
        } else if (is_graph_family(*family)) {
            for (int m = -static_cast<int>(n) - 1; m <= n + 1; ++m)
                for (const auto& g : enumerate_graphs(*family, m, n))
                    cells[{m, 0}].push_back(g.str());
        } else {
            for (int len = 1; len <= n + 1; ++len)
                for (const auto& p :
                     enumerate_partitions(*family, len - 1, n))
                    cells[{len - 1, 0}].push_back(p.str());
        }
        for (const auto& [key, members] : cells) {
            if (as_json) {
                json cell{{"n", n}, {"members", members}};
                if (is_trivariate_family(*family)) {
                    cell["ell"] = key.first;
                    cell["m"] = key.second;
                } else {
                    cell["m"] = key.first;
                }
                out.push_back(std::move(cell));
            } else {
                std::cout << family_name(*family) << " n=" << n;
                if (is_trivariate_family(*family))
                    std::cout << " ell=" << key.first << " m=" << key.second;
                else
                    std::cout << " m=" << key.first;
                std::cout << ":";
                for (const auto& s : members) std::cout << ' ' << s;
                std::cout << '\n';
            }
        }
    }
    if (as_json) std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"odd Ferrers graph and mock theta series verification tool"};
    app.require_subcommand(1);

    std::string format = "text";
    int order = 20;

    auto* verify_cmd = app.add_subcommand("verify", "check identities");
    std::string verify_name = "all";
    bool verify_list = false;
    verify_cmd->add_option("name", verify_name, "identity name or 'all'");
    verify_cmd->add_option("--order", order, "truncation order");
    verify_cmd->add_option("--format", format, "text|json");
    verify_cmd->add_flag("--list", verify_list, "list registry names");

    auto* table_cmd = app.add_subcommand("table", "reproduce a worked table");
    int table_which = 0;
    bool table_check = false;
    std::string data_dir = data_dir_default();
    table_cmd->add_option("which", table_which, "table number 1..4")->required();
    table_cmd->add_flag("--check", table_check, "compare against fixture");
    table_cmd->add_option("--format", format, "text|json");
    table_cmd->add_option("--data", data_dir, "fixture directory");

    auto* map_cmd = app.add_subcommand("map", "apply one bijection");
    std::string map_direction, map_family, map_object;
    map_cmd->add_option("direction", map_direction, "forward|inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    map_cmd->add_option("family", map_family, "omega|nu")
        ->required()
        ->check(CLI::IsMember({"omega", "nu"}));
    map_cmd->add_option("object", map_object, "partition or shape, e.g. (6,4,3)")
        ->required();
    map_cmd->add_option("--format", format, "text|json");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "exhaustive round-trip sweep");
    std::string fuzz_family;
    int max_n = 20;
    unsigned seed = 1;
    fuzz_cmd->add_option("family", fuzz_family, "omega|nu")
        ->required()
        ->check(CLI::IsMember({"omega", "nu"}));
    fuzz_cmd->add_option("--max-n", max_n, "largest size")->check(CLI::Range(0, 40));
    fuzz_cmd->add_option("--seed", seed, "seed for the constructive walks");
    fuzz_cmd->add_option("--format", format, "text|json");

    auto* family_cmd = app.add_subcommand("family", "list family members");
    std::string family_name_arg;
    family_cmd->add_option("name", family_name_arg, "family name, e.g. b1_nu")
        ->required();
    family_cmd->add_option("--max-n", max_n, "largest size")->check(CLI::Range(0, 40));
    family_cmd->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    const bool as_json = format == "json";
    try {
        if (*verify_cmd) return cmd_verify(verify_name, order, as_json, verify_list);
        if (*table_cmd) return cmd_table(table_which, table_check, as_json, data_dir);
        if (*map_cmd) return cmd_map(map_direction, map_family, map_object, as_json);
        if (*fuzz_cmd) return cmd_fuzz(fuzz_family, max_n, seed, as_json);
        if (*family_cmd) return cmd_family(family_name_arg, max_n, as_json);
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
