#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "somino/checks.hpp"
#include "somino/dyck.hpp"
#include "somino/enumerate.hpp"
#include "somino/exact.hpp"
#include "somino/io.hpp"
#include "somino/mseries.hpp"
#include "somino/rowconvex.hpp"
#include "somino/series.hpp"
#include "somino/tower.hpp"

namespace {

using namespace somino;

// thrown by handlers that already reported their outcome
struct ExitWith {
    int code;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << data;
}

std::vector<int> parse_nvec(const WidthList& widths, const std::vector<int>& nvec) {
    if (static_cast<int>(nvec.size()) != widths.size())
        throw std::invalid_argument("--nvec must have one entry per width");
    return nvec;
}

HnSpec dyck_spec(const WidthList& widths, const std::vector<int>& nvec) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < widths.size(); ++i) {
        if (nvec[i] == 0) continue;
        if (widths[i] < 2)
            throw std::invalid_argument("the path correspondence needs widths >= 2");
        pairs.emplace_back(nvec[i], widths[i] - 1);
    }
    if (pairs.empty()) throw std::invalid_argument("--nvec must contain a block");
    return HnSpec(pairs);
}

// ------------------------------------------------------------------- count

struct CountOpts {
    std::vector<int> widths;
    std::vector<int> nvec;
    int b = 0;
    bool u = false;
    bool dyck = false;
};

void run_count(const CountOpts& o) {
    const WidthList S(o.widths);
    const std::vector<int> nvec = parse_nvec(S, o.nvec);
    Int result;
    if (o.u)
        result = count_u(S, nvec);
    else if (o.dyck)
        result = count_dyck(dyck_spec(S, nvec));
    else if (o.b > 0)
        result = count_wb(S, nvec, o.b);
    else
        result = count_total(S, nvec);
    std::cout << result.str() << "\n";
}

// --------------------------------------------------------------- enumerate

struct EnumOpts {
    std::vector<int> widths;
    std::vector<int> nvec;
    std::string cls = "total";
    bool restricted = false;
    bool count_only = false;
    int cap = 8;
    std::string output = "-";
};

void run_enumerate(const EnumOpts& o) {
    const WidthList S(o.widths);
    EnumSpec spec{S, parse_nvec(S, o.nvec), ClassSpec::parse(o.cls), o.restricted, o.cap};
    if (o.count_only) {
        write_output(o.output, count_towers(spec).str() + "\n");
        return;
    }
    std::ostringstream ss;
    for (const Tower& t : enumerate_towers(spec)) ss << io::tower_to_json(t).dump() << "\n";
    write_output(o.output, ss.str());
}

// ------------------------------------------------------------------ series

struct SeriesOpts {
    std::vector<int> widths;
    int degree = 32;
    std::string which = "total";
    std::string transform = "none";
    std::string format = "json";
    std::string output = "-";
};

void run_series(const SeriesOpts& o) {
    const WidthList S(o.widths);
    if (o.degree < 1) throw std::invalid_argument("--degree must be >= 1");
    const ClassSpec which = ClassSpec::parse(o.which);
    MSeries s(S.size(), o.degree);
    switch (which.kind) {
        case ClassSpec::Kind::u: s = gf::solve_u(S, o.degree); break;
        case ClassSpec::Kind::total: s = gf::total_series(S, o.degree); break;
        case ClassSpec::Kind::wb: s = gf::w_series(S, which.param, o.degree); break;
        case ClassSpec::Kind::vl: s = gf::v_series(S, which.param, o.degree); break;
        case ClassSpec::Kind::hl: s = gf::h_series(S, which.param, o.degree); break;
        case ClassSpec::Kind::rowconvex_platform:
            throw std::invalid_argument("use the rowconvex subcommand for the q-series");
    }
    if (o.transform == "restricted")
        s = gf::restricted_transform(s);
    else if (o.transform == "unrestricting")
        s = gf::unrestricting_transform(s);
    else if (o.transform != "none")
        throw std::invalid_argument("--transform must be none, restricted or unrestricting");

    if (o.format == "json")
        write_output(o.output, io::mseries_to_json(s).dump(2) + "\n");
    else if (o.format == "csv")
        write_output(o.output, io::mseries_to_csv(s));
    else
        throw std::invalid_argument("--format must be json or csv");
}

// --------------------------------------------------------------- rowconvex

struct RowconvexOpts {
    int k = 0;
    int order = 32;
    bool g = false;
    int l = 0;
    bool dp = false;
    std::string format = "csv";
    std::string output = "-";
};

void run_rowconvex(const RowconvexOpts& o) {
    if (o.order < 1) throw std::invalid_argument("--order must be >= 1");
    const bool want_g = o.g || o.l == 0;  // default table
    const bool want_f = o.l > 0;

    std::vector<std::string> gcol, fcol;
    if (want_g) {
        if (o.dp) {
            // g(0) = 0: the recurrence table starts at one block.
            for (int n = 0; n < o.order; ++n)
                gcol.push_back(n == 0 ? "0" : rowconvex::g_dp(n, o.k).str());
        } else {
            const Series G = rowconvex::g_series(o.k, o.order);
            for (int n = 0; n < o.order; ++n) gcol.push_back(numerator(G[n]).str());
        }
    }
    if (want_f) {
        if (o.dp) {
            for (int n = 0; n < o.order; ++n) fcol.push_back(rowconvex::f_dp(o.l, n, o.k).str());
        } else {
            const Series F = rowconvex::f_series(o.l, o.k, o.order);
            for (int n = 0; n < o.order; ++n) fcol.push_back(numerator(F[n]).str());
        }
    }

    const std::string fname = "f_" + std::to_string(o.l);
    if (o.format == "csv") {
        std::ostringstream ss;
        ss << "n";
        if (want_g) ss << ",g";
        if (want_f) ss << "," << fname;
        ss << "\n";
        for (int n = 0; n < o.order; ++n) {
            ss << n;
            if (want_g) ss << "," << gcol[n];
            if (want_f) ss << "," << fcol[n];
            ss << "\n";
        }
        write_output(o.output, ss.str());
    } else if (o.format == "json") {
        io::json rows = io::json::array();
        for (int n = 0; n < o.order; ++n) {
            io::json row;
            row["n"] = n;
            if (want_g) row["g"] = gcol[n];
            if (want_f) row[fname] = fcol[n];
            rows.push_back(row);
        }
        io::json out;
        out["k"] = o.k;
        out["order"] = o.order;
        out["rows"] = rows;
        write_output(o.output, out.dump(2) + "\n");
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }
}

// --------------------------------------------------------------- bijection

struct BijectionOpts {
    bool to_path = false;
    bool to_tower = false;
    bool roundtrip = false;
    std::string input = "-";
    std::string output = "-";
    std::vector<int> widths;
    int cap = 5;
};

void roundtrip_class(const WidthList& S, int cap) {
    long towers = 0, specs = 0;
    std::vector<int> nvec(S.size(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == S.size()) {
            int n = 0;
            for (int c : nvec) n += c;
            if (n == 0) return;
            ++specs;
            Int count = 0;
            EnumSpec spec{S, nvec, ClassSpec::u(), false, cap};
            for_each_tower(spec, [&](const Tower& t) {
                ++count;
                ++towers;
                const DyckPath p = tower_to_path(t);
                const PathReport pr = validate_path(p);
                if (!pr.ok) throw std::logic_error("image path invalid: " + pr.detail);
                if (path_to_tower(p, S) != t)
                    throw std::logic_error("tower does not survive the round trip");
            });
            if (count != count_dyck(dyck_spec(S, nvec)))
                throw std::logic_error("|U| does not match the path count");
            return;
        }
        for (int c = 0; c <= left; ++c) {
            nvec[i] = c;
            rec(i + 1, left - c);
        }
        nvec[i] = 0;
    };
    rec(0, cap);
    std::cout << "roundtrip OK: " << towers << " towers across " << specs
              << " block-count vectors\n";
}

void run_bijection(const BijectionOpts& o) {
    if (int(o.to_path) + int(o.to_tower) + int(o.roundtrip) != 1)
        throw std::invalid_argument(
            "choose exactly one of --to-path, --to-tower, --roundtrip-check");
    if (o.roundtrip) {
        if (o.widths.empty())
            throw std::invalid_argument("--roundtrip-check needs --widths");
        try {
            roundtrip_class(WidthList(o.widths), o.cap);
        } catch (const std::logic_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            throw ExitWith{1};
        }
        return;
    }
    const io::json j = io::json::parse(read_input(o.input));
    if (o.to_path) {
        const Tower t = io::tower_from_json(j);
        write_output(o.output, io::path_to_json(tower_to_path(t)).dump(2) + "\n");
    } else {
        const DyckPath p = io::path_from_json(j);
        const Tower t =
            o.widths.empty() ? path_to_tower(p) : path_to_tower(p, WidthList(o.widths));
        write_output(o.output, io::tower_to_json(t).dump(2) + "\n");
    }
}

// ------------------------------------------------------------------ verify

void run_verify(const std::string& suite) {
    const auto known = checks::suites();
    if (suite != "all" &&
        std::find(known.begin(), known.end(), suite) == known.end()) {
        std::string names = "all";
        for (const auto& s : known) names += ", " + s;
        throw std::invalid_argument("unknown suite '" + suite + "' (choose from " + names + ")");
    }
    std::size_t label_width = 0;
    for (const checks::Check& c : checks::registry())
        if (suite == "all" || c.suite == suite)
            label_width = std::max(label_width, c.suite.size() + c.name.size() + 1);

    int ran = 0, passed = 0;
    for (const checks::Check& c : checks::registry()) {
        if (suite != "all" && c.suite != suite) continue;
        ++ran;
        const checks::CheckResult r = c.run();
        if (r.pass) ++passed;
        const std::string label = c.suite + "/" + c.name;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << label
                  << std::string(label_width - label.size() + 2, ' ') << r.detail << "\n";
    }
    std::cout << passed << "/" << ran << " checks passed\n";
    if (passed != ran) throw ExitWith{1};
}

// ------------------------------------------------------------------ render

struct RenderOpts {
    std::string input = "-";
    std::string output = "-";
    int platform = 0;
};

void run_render(const RenderOpts& o) {
    const Tower t = io::tower_from_json(io::json::parse(read_input(o.input)));
    write_output(o.output, io::render_svg(t, o.platform));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting, enumeration and verification of S-omino towers"};
    app.require_subcommand(1);

    CountOpts count_opts;
    CLI::App* count = app.add_subcommand("count", "closed-form tower counts");
    count->add_option("--widths", count_opts.widths, "distinct block widths")
        ->required()
        ->delimiter(',');
    count->add_option("--nvec", count_opts.nvec, "blocks per width")
        ->required()
        ->delimiter(',');
    CLI::Option* b_opt =
        count->add_option("--b", count_opts.b, "bottom-row block count (W_b)");
    CLI::Option* u_opt =
        count->add_flag("--u", count_opts.u, "count the one-block-bottom, nonnegative class");
    CLI::Option* dyck_opt =
        count->add_flag("--dyck", count_opts.dyck, "count the matching generalized Dyck paths");
    b_opt->excludes(u_opt)->excludes(dyck_opt);
    u_opt->excludes(dyck_opt);
    count->callback([&] { run_count(count_opts); });

    EnumOpts enum_opts;
    CLI::App* enumerate = app.add_subcommand("enumerate", "brute-force tower enumeration");
    enumerate->add_option("--widths", enum_opts.widths, "distinct block widths")
        ->required()
        ->delimiter(',');
    enumerate->add_option("--nvec", enum_opts.nvec, "blocks per width")
        ->required()
        ->delimiter(',');
    enumerate->add_option("--class", enum_opts.cls,
                          "tower class: total, u, wb:B, vl:L, hl:L, rowconvex:L");
    enumerate->add_flag("--restricted", enum_opts.restricted, "forbid equal stacked footprints");
    enumerate->add_flag("--count-only", enum_opts.count_only, "print the count, not the towers");
    enumerate->add_option("--cap", enum_opts.cap, "refuse jobs above this many blocks");
    enumerate->add_option("--output,-o", enum_opts.output, "output path ('-' = stdout)");
    enumerate->callback([&] { run_enumerate(enum_opts); });

    SeriesOpts series_opts;
    CLI::App* series = app.add_subcommand("series", "multivariate counting series");
    series->add_option("--widths", series_opts.widths, "distinct block widths")
        ->required()
        ->delimiter(',');
    series->add_option("--degree,-N", series_opts.degree, "truncation order");
    series->add_option("--which", series_opts.which, "series: total, u, wb:B, vl:L, hl:L");
    series->add_option("--transform", series_opts.transform,
                       "none, restricted or unrestricting");
    series->add_option("--format", series_opts.format, "json or csv");
    series->add_option("--output,-o", series_opts.output, "output path ('-' = stdout)");
    series->callback([&] { run_series(series_opts); });

    RowconvexOpts rc_opts;
    CLI::App* rowconvex = app.add_subcommand("rowconvex", "row-convex tower tables");
    rowconvex->add_option("--k", rc_opts.k, "block width (>= 2)")->required();
    rowconvex->add_option("--order,-N", rc_opts.order, "table length");
    rowconvex->add_flag("--g", rc_opts.g, "include the all-platform-counts column");
    rowconvex->add_option("--l", rc_opts.l, "include the column for an l-block platform");
    rowconvex->add_flag("--dp", rc_opts.dp, "fill the table from the recurrence, not the q-series");
    rowconvex->add_option("--format", rc_opts.format, "json or csv");
    rowconvex->add_option("--output,-o", rc_opts.output, "output path ('-' = stdout)");
    rowconvex->callback([&] { run_rowconvex(rc_opts); });

    BijectionOpts bij_opts;
    CLI::App* bijection = app.add_subcommand("bijection", "tower <-> path correspondence");
    bijection->add_flag("--to-path", bij_opts.to_path, "tower JSON in, path JSON out");
    bijection->add_flag("--to-tower", bij_opts.to_tower, "path JSON in, tower JSON out");
    bijection->add_flag("--roundtrip-check", bij_opts.roundtrip,
                        "round-trip every enumerated tower");
    bijection->add_option("--input,-i", bij_opts.input, "input path ('-' = stdin)");
    bijection->add_option("--output,-o", bij_opts.output, "output path ('-' = stdout)");
    bijection->add_option("--widths", bij_opts.widths, "width list")->delimiter(',');
    bijection->add_option("--cap", bij_opts.cap, "round-trip block budget");
    bijection->callback([&] { run_bijection(bij_opts); });

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run the cross-check suite");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->callback([&] { run_verify(suite); });

    RenderOpts render_opts;
    CLI::App* render = app.add_subcommand("render", "tower JSON to SVG");
    render->add_option("--input,-i", render_opts.input, "input path ('-' = stdin)");
    render->add_option("--output,-o", render_opts.output, "output path ('-' = stdout)");
    render->add_option("--platform", render_opts.platform, "platform width in columns");
    render->callback([&] { run_render(render_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
