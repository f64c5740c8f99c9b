#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astz/bijection.hpp"
#include "astz/enumeration.hpp"
#include "astz/io.hpp"
#include "astz/verify.hpp"

using namespace astz;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& file) {
    if (file.empty() || file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(file);
    if (!in) throw usage_error("cannot open --input " + file);
    return {std::istreambuf_iterator<char>(in), {}};
}

// One document, or one document per non-empty line.
std::vector<std::pair<json, std::string>> read_documents(const std::string& file) {
    std::string text = read_all(file);
    std::vector<std::pair<json, std::string>> docs;
    try {
        json whole = json::parse(text);
        auto last = text.find_last_not_of(" \t\r\n");
        bool one_line = last == std::string::npos || text.find('\n') >= last;
        docs.emplace_back(whole, one_line ? "line 1" : "input");
        return docs;
    } catch (const json::parse_error&) {
    }
    std::istringstream lines(text);
    std::string line;
    int no = 0;
    while (std::getline(lines, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            docs.emplace_back(json::parse(line), "line " + std::to_string(no));
        } catch (const json::parse_error& e) {
            throw json_input_error("line " + std::to_string(no) + ": malformed JSON (" + e.what() + ")");
        }
    }
    if (docs.empty()) throw json_input_error("line 1: no JSON input");
    return docs;
}

void emit_sorted(std::vector<std::string> lines) {
    std::sort(lines.begin(), lines.end());
    for (const auto& s : lines) std::cout << s << "\n";
}

BijectionConfig make_config(int d, const std::string& rot, const std::string& ref) {
    BijectionConfig cfg;
    cfg.d = d;
    cfg.rotation = rot == "ccw" ? Rotation::Counterclockwise : Rotation::Clockwise;
    cfg.reflection = ref == "h" ? Reflection::HorizontalAxis : Reflection::VerticalAxis;
    return cfg;
}

json stats_json(const StatProfile& s, bool with_inv = true) {
    json j = to_json(s);
    if (!with_inv) j.erase("inv");
    j["weight"] = weight_of(s).to_string();
    return j;
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

const std::vector<int> kRunningPartition{11, 9, 7, 6, 5, 4, 1, 1};

int repro_running_example() {
    BijectionConfig cfg;
    Csspp pi = one_row(kRunningPartition, 3);
    Astz a = partition_to_astz(pi, 9, cfg);
    Csspp back = astz_to_partition(a, cfg);
    json out{{"config", to_json(cfg)},
             {"astz", to_json(a)},
             {"path", single_astz_to_path(a).to_string()},
             {"partition", to_json(back)},
             {"stats", stats_json(astz_stats(a))}};
    std::cout << out.dump() << "\n";
    return back == pi ? 0 : 1;
}

int repro_table1() {
    BijectionConfig cfg;
    int status = 0;
    enumerate_partitions(5, 1, 5, [&](const Csspp& c) {
        auto s = csspp_stats(c, 1);
        if (s.mu != 1 || s.p != 0 || s.q != 1) return;
        Astz a = partition_to_astz(c, 5, cfg);
        if (astz_to_partition(a, cfg) != c) status = 1;
        std::cout << json{{"partition", to_json(c)}, {"astz", to_json(a)}}.dump() << "\n";
    });
    return status;
}

int repro_figure8() {
    auto rep = verify_suite("counterexample");
    std::cout << rep.counts.dump() << "\n";
    return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alternating sign trapezoids and one-row shifted plane partitions"};
    app.require_subcommand(1);

    std::string kind;
    int n = 0, l = 0, k = 0;
    int ei = 0, ej = 0, emu = -1, ep = -1, eq = -1, er = -1;
    std::string zero_cols, shape;
    auto* en = app.add_subcommand("enumerate", "stream objects as JSON lines");
    en->add_option("kind", kind, "astz | qast | partitions | csspp")
        ->required()
        ->check(CLI::IsMember({"astz", "qast", "partitions", "csspp"}));
    auto* n_opt = en->add_option("--n", n, "rows / maximal first-row length (not needed with --shape)");
    en->add_option("--l", l, "trapezoid parameter (astz)");
    en->add_option("--k", k, "class (partitions, csspp)");
    en->add_option("--i", ei, "left 1-column at position -i");
    en->add_option("--j", ej, "right 0-column at position j; number of parts for partitions");
    en->add_option("--mu", emu);
    en->add_option("--p", ep);
    en->add_option("--q", eq);
    en->add_option("--r", er);
    en->add_option("--zero-columns", zero_cols, "exact right-half 0-column positions, comma separated");
    en->add_option("--shape", shape, "row lengths, comma separated (csspp)");

    int d = 1;
    std::string rot = "cw", ref = "v", method = "main", input;
    int map_n = 0;
    auto add_cfg = [&](CLI::App* sc) {
        sc->add_option("--d", d, "parameter d in 1..l-1");
        sc->add_option("--rotation", rot)->check(CLI::IsMember({"cw", "ccw"}));
        sc->add_option("--reflection", ref)->check(CLI::IsMember({"h", "v"}));
        sc->add_option("--method", method)->check(CLI::IsMember({"main", "reflection"}));
        sc->add_option("--input", input, "JSON file (default stdin)");
    };
    auto* mp = app.add_subcommand("map", "ASTZ JSON -> partition");
    add_cfg(mp);
    auto* um = app.add_subcommand("unmap", "partition JSON -> ASTZ");
    add_cfg(um);
    um->add_option("--n", map_n, "rows of the target trapezoid")->required();

    std::string suite;
    int n_max = 0, l_max = 0;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    vf->add_option("--n-max", n_max);
    vf->add_option("--l-max", l_max);

    std::string what;
    auto* rp = app.add_subcommand("repro", "reproduce the printed examples");
    rp->add_option("what", what)->required()->check(CLI::IsMember({"table1", "figure8", "running-example"}));

    auto* rd = app.add_subcommand("render", "pretty-print an ASTZ or CSSPP");
    rd->add_option("--input", input, "JSON file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*en) {
            if (!*n_opt && shape.empty()) throw usage_error("--n is required");
            std::vector<std::string> lines;
            if (kind == "astz" || kind == "qast") {
                int ll = kind == "qast" ? 1 : l;
                if (ll < 1) throw usage_error("--l is required for astz");
                EnumFilter f;
                if (ei) f.i = ei;
                if (ej) f.j = ej;
                if (emu >= 0) f.mu = emu;
                if (ep >= 0) f.p = ep;
                if (eq >= 0) f.q = eq;
                if (er >= 0) f.r = er;
                if (!zero_cols.empty()) {
                    auto v = parse_list(zero_cols);
                    f.right_zero_positions = std::set<int>(v.begin(), v.end());
                }
                enumerate_astz(n, ll, f, [&](const Astz& a) { lines.push_back(to_json(a).dump()); });
            } else if (kind == "partitions") {
                if (ej < 1) throw usage_error("--j is required for partitions");
                enumerate_partitions(n, k, ej, [&](const Csspp& c) { lines.push_back(to_json(c).dump()); });
            } else {
                auto add = [&](const Csspp& c) { lines.push_back(to_json(c).dump()); };
                if (!shape.empty())
                    enumerate_shape(parse_list(shape), k, add);
                else
                    enumerate_csspp(n, k, add);
            }
            emit_sorted(lines);
            return 0;
        }
        if (*mp || *um) {
            std::vector<std::string> lines;
            for (const auto& [doc, where] : read_documents(input)) {
                if (*mp) {
                    Astz a = astz_from_json(doc, where);
                    if (d < 1 || d > a.l - 1) throw usage_error("--d must lie in 1..l-1");
                    BijectionConfig cfg = make_config(d, rot, ref);
                    Csspp c = method == "main" ? astz_to_partition(a, cfg)
                                               : reflection_bijection_forward(a, cfg.rotation, cfg.d);
                    json cj = to_json(cfg);
                    cj["method"] = method;
                    lines.push_back(json{{"config", cj},
                                         {"input", to_json(a)},
                                         {"output", to_json(c)},
                                         {"stats", {{"input", stats_json(astz_stats(a))},
                                                    {"output", stats_json(csspp_stats(c, cfg.d))}}}}
                                        .dump());
                } else {
                    Csspp c = csspp_from_json(doc, where);
                    if (d < 1 || d > c.k) throw usage_error("--d must lie in 1..class");
                    BijectionConfig cfg = make_config(d, rot, ref);
                    Astz a = method == "main" ? partition_to_astz(c, map_n, cfg)
                                              : reflection_bijection_inverse(c, map_n, cfg.rotation, cfg.d);
                    json cj = to_json(cfg);
                    cj["method"] = method;
                    cj["n"] = map_n;
                    lines.push_back(json{{"config", cj},
                                         {"input", to_json(c)},
                                         {"output", to_json(a)},
                                         {"stats", {{"input", stats_json(csspp_stats(c, cfg.d))},
                                                    {"output", stats_json(astz_stats(a))}}}}
                                        .dump());
                }
            }
            for (const auto& s : lines) std::cout << s << "\n";
            return 0;
        }
        if (*vf) {
            Bounds b = default_bounds(suite);
            if (n_max > 0) b.n_max = n_max;
            if (l_max > 0) b.l_max = l_max;
            Report rep = verify_suite(suite, b);
            std::cout << rep.to_json().dump(2) << "\n";
            return rep.failed() ? 1 : 0;
        }
        if (*rp) {
            if (what == "table1") return repro_table1();
            if (what == "figure8") return repro_figure8();
            return repro_running_example();
        }
        if (*rd) {
            for (const auto& [doc, where] : read_documents(input)) {
                if (doc.contains("l"))
                    std::cout << render(astz_from_json(doc, where));
                else if (doc.contains("class"))
                    std::cout << render(csspp_from_json(doc, where));
                else
                    throw json_input_error(where + ": expected field \"l\" or \"class\"");
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json_input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const scale_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // valid JSON, but outside the domain of the requested map
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
