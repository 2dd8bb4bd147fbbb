#include "maxchord/cli.hpp"

#include "maxchord/bijection.hpp"
#include "maxchord/counting.hpp"
#include "maxchord/diagram.hpp"
#include "maxchord/oracle.hpp"
#include "maxchord/reference_table.hpp"
#include "maxchord/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace maxchord {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;    // validation / precondition / guard failures
constexpr int kMismatch = 2; // verification found a disagreement

struct Options {
    std::string format = "plain";
    bool force = false;

    bool json_mode() const { return format == "json"; }
};

json gluing_json(const GluingReport& r) {
    return {{"vertex_count", r.vertex_count},
            {"face_count", r.face_count},
            {"orientable", r.orientable},
            {"euler_genus", r.euler_genus}};
}

std::string gluing_plain(const GluingReport& r) {
    std::string s = "V=" + std::to_string(r.vertex_count) + " F=" + std::to_string(r.face_count);
    s += r.orientable ? " orientable=yes" : " orientable=no";
    s += " euler_genus=" + std::to_string(r.euler_genus);
    return s;
}

int cmd_count(unsigned g, const Options& opt, std::ostream& out) {
    const auto star = d_star(g);
    const auto v = d_vertical(g);
    const auto p = d_parallel(g);
    const auto circ = d_circle(g);
    if (opt.json_mode()) {
        out << json{{"g", g},
                    {"d_star", star.str()},
                    {"d_type1", v.str()},
                    {"d_type2", p.str()},
                    {"d_all", circ.str()}}
                   .dump()
            << "\n";
    } else {
        out << "g=" << g << " d_star=" << star << " d_type1=" << v << " d_type2=" << p
            << " d_all=" << circ << "\n";
    }
    return kOk;
}

int cmd_verify_table(unsigned max_genus, const std::string& inject, const Options& opt,
                     std::ostream& out) {
    struct Mismatch {
        unsigned g;
        std::string column, computed, expected;
    };
    std::vector<Mismatch> mismatches;
    unsigned cells = 0;
    json rows = json::array();
    for (unsigned g = 1; g <= max_genus; ++g) {
        std::array<std::pair<const char*, std::string>, 4> computed{{
            {"d_star", d_star(g).str()},
            {"d_type1", d_vertical(g).str()},
            {"d_type2", d_parallel(g).str()},
            {"d_all", d_circle(g).str()},
        }};
        for (auto& [column, value] : computed) {
            if (inject == std::string(column) + ":" + std::to_string(g))
                value = (CountBig(value) + 1).str(); // simulated wrong cell
        }
        if (g <= reference_table.size()) {
            const auto& row = reference_table[g - 1];
            const std::array<const char*, 4> expected{row.d_star, row.d_type1, row.d_type2, row.d_all};
            bool row_ok = true;
            for (size_t c = 0; c < 4; ++c) {
                ++cells;
                if (computed[c].second != expected[c]) {
                    row_ok = false;
                    mismatches.push_back({g, computed[c].first, computed[c].second, expected[c]});
                }
            }
            if (opt.json_mode()) {
                rows.push_back({{"g", g}, {"ok", row_ok}});
            } else if (row_ok) {
                out << "g=" << g << " ok\n";
            } else {
                for (const auto& mm : mismatches)
                    if (mm.g == g)
                        out << "g=" << g << " " << mm.column << " computed=" << mm.computed
                            << " expected=" << mm.expected << " MISMATCH\n";
            }
        } else {
            // beyond the stored table only internal consistency is checked:
            // reaching this point means every exact-division assertion held
            if (opt.json_mode())
                rows.push_back({{"g", g}, {"consistent", true}});
            else
                out << "g=" << g << " consistent\n";
        }
    }
    const bool ok = mismatches.empty();
    if (opt.json_mode()) {
        json mj = json::array();
        for (const auto& mm : mismatches)
            mj.push_back({{"g", mm.g}, {"column", mm.column}, {"computed", mm.computed},
                          {"expected", mm.expected}});
        out << json{{"max_genus", max_genus}, {"cells_checked", cells}, {"rows", rows},
                    {"mismatches", mj}, {"ok", ok}}
                   .dump()
            << "\n";
    } else {
        out << (ok ? "table verified: " : "table verification FAILED: ")
            << (cells - mismatches.size()) << "/" << cells << " cells match\n";
    }
    return ok ? kOk : kMismatch;
}

int cmd_oracle(int g, const std::string& which, const Options& opt, std::ostream& out) {
    const bool all = which == "all";
    bool agree = true;
    json results = json::array();
    auto report = [&](const char* name, const CountBig& oracle, const CountBig& formula) {
        const bool ok = oracle == formula;
        agree = agree && ok;
        if (opt.json_mode())
            results.push_back({{"which", name}, {"oracle", oracle.str()},
                               {"formula", formula.str()}, {"ok", ok}});
        else
            out << name << ": oracle=" << oracle << " formula=" << formula
                << (ok ? " ok" : " MISMATCH") << "\n";
    };
    if (all || which == "dstar") report("d_star", d_star_oracle(g, opt.force), d_star(g));
    if (all || which == "d1")
        report("d_type1", reflection_fixed_oracle(g, AxisType::type1, opt.force), d_vertical(g));
    if (all || which == "d2")
        report("d_type2", reflection_fixed_oracle(g, AxisType::type2, opt.force), d_parallel(g));
    if (all || which == "dcircle") {
        const auto oc = d_circle_oracle(g, opt.force);
        const auto formula = d_circle(g);
        const bool ok = oc.burnside == formula && oc.canonical_classes == formula;
        agree = agree && ok;
        if (opt.json_mode())
            results.push_back({{"which", "d_all"}, {"oracle_burnside", oc.burnside.str()},
                               {"oracle_canonical", oc.canonical_classes.str()},
                               {"formula", formula.str()}, {"ok", ok}});
        else
            out << "d_all: oracle_burnside=" << oc.burnside << " oracle_canonical="
                << oc.canonical_classes << " formula=" << formula << (ok ? " ok" : " MISMATCH")
                << "\n";
    }
    if (opt.json_mode()) out << json{{"g", g}, {"results", results}, {"ok", agree}}.dump() << "\n";
    return agree ? kOk : kMismatch;
}

struct EnumerateFilters {
    bool maximal = false;
    int genus = -1; // -1: no filter
    bool type1 = false;
    bool type2 = false;
};

int cmd_enumerate(int chords, const EnumerateFilters& f, long long limit, bool count_only,
                  const Options& opt, std::ostream& out, std::ostream& err) {
    if (f.maximal && chords % 2 != 0) {
        err << "contradictory filters: maximal diagrams have an even number of chords\n";
        return kUsage;
    }
    if (f.genus >= 0 && f.genus > chords / 2) {
        err << "contradictory filters: genus cannot exceed " << chords / 2 << " with " << chords
            << " chords\n";
        return kUsage;
    }
    if (f.maximal && f.genus >= 0 && f.genus != chords / 2) {
        err << "contradictory filters: maximal diagrams with " << chords << " chords have genus "
            << chords / 2 << "\n";
        return kUsage;
    }
    const int m = 2 * chords;
    const auto axis1 = canonical_type1_axis(m);
    const auto axis2 = canonical_type2_axis(m);
    auto matches = [&](const ChordDiagram& d) {
        if (f.maximal && !is_maximal(d)) return false;
        if (f.genus >= 0 && genus(d) != f.genus) return false;
        if (f.type1 && !is_fixed_by(d, axis1)) return false;
        if (f.type2 && !is_fixed_by(d, axis2)) return false;
        return true;
    };
    std::uint64_t count = 0;
    json diagrams = json::array();
    for_each_diagram(chords, [&](const ChordDiagram& d) {
        if (!matches(d)) return true;
        ++count;
        if (!count_only) {
            if (opt.json_mode())
                diagrams.push_back(to_text(d));
            else
                out << to_text(d) << "\n";
            if (limit > 0 && static_cast<long long>(count) >= limit) return false;
        }
        return true;
    }, opt.force);
    if (opt.json_mode()) {
        if (count_only)
            out << json{{"chords", chords}, {"count", std::to_string(count)}}.dump() << "\n";
        else
            out << json{{"chords", chords}, {"diagrams", diagrams},
                        {"count", std::to_string(count)}}
                       .dump()
                << "\n";
    } else if (count_only) {
        out << count << "\n";
    }
    return kOk;
}

int cmd_bijection(const std::string& fold_text, const std::string& unfold_text, const Options& opt,
                  std::ostream& out) {
    if (!fold_text.empty()) {
        const ChordDiagram d = parse_diagram(fold_text);
        const SignedMatching sm = to_quotient(d);
        const GluingReport report = glue(sm);
        if (opt.json_mode())
            out << json{{"matching", to_text(sm)}, {"gluing", gluing_json(report)}}.dump() << "\n";
        else
            out << to_text(sm) << "\n" << gluing_plain(report) << "\n";
    } else {
        const SignedMatching sm = parse_matching(unfold_text);
        const GluingReport report = glue(sm);
        const ChordDiagram d = from_quotient(sm);
        if (opt.json_mode())
            out << json{{"diagram", to_text(d)}, {"gluing", gluing_json(report)}}.dump() << "\n";
        else
            out << to_text(d) << "\n" << gluing_plain(report) << "\n";
    }
    return kOk;
}

int cmd_render(const std::string& diagram_text, const std::string& path, const std::string& axis,
               const Options& opt, std::ostream& out, std::ostream& err) {
    const ChordDiagram d = parse_diagram(diagram_text);
    const AxisOption ax = axis == "type1" ? AxisOption::type1
                        : axis == "type2" ? AxisOption::type2
                                          : AxisOption::none;
    std::ofstream file(path);
    if (!file) {
        err << "cannot open " << path << " for writing\n";
        return kUsage;
    }
    file << render_svg(d, ax);
    file.close();
    if (!file) {
        err << "failed to write " << path << "\n";
        return kUsage;
    }
    if (opt.json_mode())
        out << json{{"path", path}, {"points", d.points()}, {"chords", d.chords()}}.dump() << "\n";
    else
        out << "wrote " << path << "\n";
    return kOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"maximal chord diagram counting, enumeration and bijection tools"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));
    app.add_flag("--force", opt.force, "lift the desk-scale enumeration guards");
    app.fallthrough();

    auto* count = app.add_subcommand("count", "closed-form counts for one genus");
    unsigned count_genus = 0;
    count->add_option("--genus", count_genus, "genus, at least 1")
        ->required()
        ->check(CLI::Range(1, 100000));

    auto* verify = app.add_subcommand("verify-table", "recompute counts against the stored table");
    unsigned verify_max = 12;
    std::string inject;
    verify->add_option("--max-genus", verify_max, "largest genus to check")
        ->required()
        ->check(CLI::Range(1, 100000));
    verify->add_option("--inject-fault", inject,
                       "perturb one computed cell, e.g. d_type2:3 (for testing the harness)");

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks of the formulas");
    int oracle_genus = 0;
    std::string which = "all";
    oracle->add_option("--genus", oracle_genus, "genus, at least 1")
        ->required()
        ->check(CLI::Range(1, 100000));
    oracle->add_option("--which", which, "which comparison to run")
        ->check(CLI::IsMember({"dstar", "d1", "d2", "dcircle", "all"}));

    auto* enumerate = app.add_subcommand("enumerate", "stream diagrams in deterministic order");
    int chords = 0;
    EnumerateFilters filters;
    long long limit = 0;
    bool count_only = false;
    bool opt_maximal = false, opt_type1 = false, opt_type2 = false;
    int opt_genus = -1;
    enumerate->add_option("--chords", chords, "number of chords")
        ->required()
        ->check(CLI::Range(1, 1000));
    enumerate->add_flag("--maximal", opt_maximal, "only diagrams with one face walk");
    enumerate->add_option("--genus", opt_genus, "only diagrams of this genus")
        ->check(CLI::Range(0, 1000));
    enumerate->add_flag("--type1", opt_type1, "only diagrams fixed by the canonical point axis");
    enumerate->add_flag("--type2", opt_type2, "only diagrams fixed by the canonical arc axis");
    enumerate->add_option("--limit", limit, "stop after this many diagrams")
        ->check(CLI::Range(1, 1000000000));
    enumerate->add_flag("--count-only", count_only, "print the count instead of the diagrams");

    auto* bijection = app.add_subcommand("bijection", "fold or unfold the quotient-map bijection");
    std::string fold_text, unfold_text;
    bijection->add_option("--fold", fold_text, "diagram to fold into a signed matching");
    bijection->add_option("--unfold", unfold_text, "signed matching to unfold into a diagram");

    auto* render = app.add_subcommand("render", "write a diagram as SVG");
    std::string render_text, render_path, render_axis;
    render->add_option("diagram", render_text, "diagram text")->required();
    render->add_option("-o,--output", render_path, "output SVG path")->required();
    render->add_option("--axis", render_axis, "draw a symmetry axis")
        ->check(CLI::IsMember({"type1", "type2"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    filters.maximal = opt_maximal;
    filters.genus = opt_genus;
    filters.type1 = opt_type1;
    filters.type2 = opt_type2;

    try {
        if (app.got_subcommand(count)) return cmd_count(count_genus, opt, out);
        if (app.got_subcommand(verify)) return cmd_verify_table(verify_max, inject, opt, out);
        if (app.got_subcommand(oracle)) return cmd_oracle(oracle_genus, which, opt, out);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(chords, filters, limit, count_only, opt, out, err);
        if (app.got_subcommand(bijection)) {
            if (fold_text.empty() == unfold_text.empty()) {
                err << "bijection needs exactly one of --fold or --unfold\n";
                return kUsage;
            }
            return cmd_bijection(fold_text, unfold_text, opt, out);
        }
        if (app.got_subcommand(render))
            return cmd_render(render_text, render_path, render_axis, opt, out, err);
    } catch (const desk_scale_error& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    err << "no subcommand given\n";
    return kUsage;
}

} // namespace maxchord
