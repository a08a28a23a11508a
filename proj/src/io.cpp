#include "somino/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace somino::io {

json tower_to_json(const Tower& t) {
    json j;
    j["widths"] = t.widths.widths;
    json blocks = json::array();
    for (const Block& b : t.blocks)  // already sorted by (row, offset)
        blocks.push_back({{"row", b.row}, {"offset", b.offset}, {"width", b.width}});
    j["blocks"] = std::move(blocks);
    return j;
}

Tower tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("widths") || !j.contains("blocks"))
        throw std::invalid_argument("tower json needs 'widths' and 'blocks'");
    WidthList w(j.at("widths").get<std::vector<int>>());
    std::vector<Block> blocks;
    for (const json& bj : j.at("blocks")) {
        Block b;
        b.row = bj.at("row").get<int>();
        b.offset = bj.at("offset").get<int>();
        b.width = bj.at("width").get<int>();
        blocks.push_back(b);
    }
    return Tower(std::move(w), std::move(blocks));
}

std::string tower_key(const Tower& t) { return tower_to_json(t).dump(); }

json series_to_json(const Series& s) {
    json a = json::array();
    for (int i = 0; i < s.order(); ++i) a.push_back(rat_str(s[i]));
    return a;
}

json mseries_to_json(const MSeries& s) {
    json j;
    j["vars"] = s.nvars();
    j["maxdeg"] = s.maxdeg();
    json terms = json::array();
    std::vector<std::pair<std::vector<int>, Rat>> sorted(s.terms().begin(), s.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        return std::tie(da, a.first) < std::tie(db, b.first);
    });
    for (const auto& [e, c] : sorted)
        terms.push_back({{"exponents", e}, {"coefficient", rat_str(c)}});
    j["terms"] = std::move(terms);
    return j;
}

std::string mseries_to_csv(const MSeries& s) {
    std::ostringstream out;
    out << "degree";
    for (int i = 1; i <= s.nvars(); ++i) out << ",n_" << i;
    out << ",coefficient\n";
    std::vector<std::pair<std::vector<int>, Rat>> sorted(s.terms().begin(), s.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        return std::tie(da, a.first) < std::tie(db, b.first);
    });
    for (const auto& [e, c] : sorted) {
        out << std::accumulate(e.begin(), e.end(), 0);
        for (int x : e) out << ',' << x;
        if (is_integer(c))
            out << ',' << numerator(c).str() << '\n';
        else
            out << ',' << rat_str(c) << '\n';
    }
    return out.str();
}

json path_to_json(const DyckPath& p) {
    json j;
    json pairs = json::array();
    for (auto [t, l] : p.spec.pairs) pairs.push_back({{"t", t}, {"l", l}});
    j["spec"] = std::move(pairs);
    j["word"] = p.word;
    return j;
}

DyckPath path_from_json(const json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const json& pj : j.at("spec"))
        pairs.emplace_back(pj.at("t").get<int>(), pj.at("l").get<int>());
    DyckPath p{HnSpec(std::move(pairs)), j.at("word").get<std::vector<int>>()};
    return p;
}

namespace {

const char* const kPalette[] = {"#bfe6f2", "#d9c7e8", "#f8c8dc", "#d5e8b5",
                                "#ffe0a6", "#c9d8ff", "#e8c7c7", "#c7e8d8"};
constexpr int kUnit = 10;  // user units per column

}  // namespace

std::string render_svg(const Tower& t, int platform_cols) {
    int min_col = 0, max_col = platform_cols > 0 ? platform_cols : 1, max_row = 0;
    for (const Block& b : t.blocks) {
        min_col = std::min(min_col, b.offset);
        max_col = std::max(max_col, b.right());
        max_row = std::max(max_row, b.row + 1);
    }
    const int platform_h = platform_cols > 0 ? 3 : 0;
    const int wpx = (max_col - min_col) * kUnit;
    const int hpx = max_row * kUnit + platform_h;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx << "\" height=\""
        << hpx << "\" viewBox=\"0 0 " << wpx << ' ' << hpx << "\">\n";
    if (platform_cols > 0)
        svg << "  <rect x=\"" << -min_col * kUnit << "\" y=\"" << max_row * kUnit
            << "\" width=\"" << platform_cols * kUnit << "\" height=\"" << platform_h
            << "\" fill=\"#8b5a2b\"/>\n";
    for (const Block& b : t.blocks) {
        int ci = t.widths.index_of(b.width);
        if (ci < 0) ci = 0;
        const char* fill = kPalette[ci % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "  <rect x=\"" << (b.offset - min_col) * kUnit << "\" y=\""
            << (max_row - 1 - b.row) * kUnit << "\" width=\"" << b.width * kUnit
            << "\" height=\"" << kUnit << "\" fill=\"" << fill
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace somino::io
