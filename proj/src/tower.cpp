#include "somino/tower.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace somino {

WidthList::WidthList(std::vector<int> w) : widths(std::move(w)) {
    if (widths.empty())
        throw std::invalid_argument("width list must be non-empty");
    std::sort(widths.begin(), widths.end());
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (widths[i] < 1)
            throw std::invalid_argument("widths must be positive");
        if (i > 0 && widths[i] == widths[i - 1])
            throw std::invalid_argument("widths must be distinct");
    }
}

bool WidthList::contains(int w) const {
    return std::binary_search(widths.begin(), widths.end(), w);
}

int WidthList::index_of(int w) const {
    auto it = std::lower_bound(widths.begin(), widths.end(), w);
    if (it == widths.end() || *it != w) return -1;
    return static_cast<int>(it - widths.begin());
}

int WidthList::max_width() const {
    if (widths.empty()) throw std::logic_error("empty width list");
    return widths.back();
}

Tower::Tower(WidthList w, std::vector<Block> b) : widths(std::move(w)), blocks(std::move(b)) {
    std::sort(blocks.begin(), blocks.end());
}

int Tower::height() const {
    int h = 0;
    for (const Block& b : blocks) h = std::max(h, b.row + 1);
    return h;
}

std::vector<int> Tower::nvec() const {
    std::vector<int> n(widths.size(), 0);
    for (const Block& b : blocks) {
        int i = widths.index_of(b.width);
        if (i >= 0) ++n[i];
    }
    return n;
}

std::vector<Block> Tower::row(int r) const {
    std::vector<Block> out;
    for (const Block& b : blocks)
        if (b.row == r) out.push_back(b);
    return out;
}

int Tower::min_column() const {
    if (blocks.empty()) throw std::invalid_argument("empty tower");
    int m = blocks.front().offset;
    for (const Block& b : blocks) m = std::min(m, b.offset);
    return m;
}

int Tower::bottom_block_count() const {
    int c = 0;
    for (const Block& b : blocks)
        if (b.row == 0) ++c;
    return c;
}

std::string ClassSpec::name() const {
    switch (kind) {
        case Kind::wb: return "wb:" + std::to_string(param);
        case Kind::u: return "u";
        case Kind::vl: return "vl:" + std::to_string(param);
        case Kind::hl: return "hl:" + std::to_string(param);
        case Kind::total: return "total";
        case Kind::rowconvex_platform: return "rowconvex:" + std::to_string(param);
    }
    return "?";
}

ClassSpec ClassSpec::parse(const std::string& s) {
    auto split = [&](const std::string& prefix, int& out) {
        if (s.rfind(prefix + ":", 0) != 0) return false;
        out = std::stoi(s.substr(prefix.size() + 1));
        return true;
    };
    int p = 0;
    if (s == "u") return u();
    if (s == "total" || s == "all") return total();
    if (split("wb", p)) return wb(p);
    if (split("vl", p)) return vl(p);
    if (split("hl", p)) return hl(p);
    if (split("rowconvex", p)) return rowconvex_platform(p);
    throw std::invalid_argument("unknown class spec: " + s);
}

namespace {

ValidationReport check(const Tower& t, bool require_anchor) {
    using V = ValidationReport::Violation;
    if (t.blocks.empty())
        return {V::empty, "tower has no blocks", {}};

    for (const Block& b : t.blocks) {
        if (b.row < 0 || b.width < 1 || !t.widths.contains(b.width))
            return {V::bad_block,
                    "block has negative row or width outside the width list",
                    {b}};
    }

    // Non-overlap: blocks are sorted by (row, offset), so only neighbours in
    // the same row can collide.
    for (std::size_t i = 1; i < t.blocks.size(); ++i) {
        const Block& a = t.blocks[i - 1];
        const Block& b = t.blocks[i];
        if (a.row == b.row && b.offset < a.right())
            return {V::overlap, "blocks overlap", {a, b}};
    }

    // Support: every block above row 0 shares a column with the row below.
    std::map<int, std::vector<Block>> rows;
    for (const Block& b : t.blocks) rows[b.row].push_back(b);
    for (const auto& [r, rowblocks] : rows) {
        if (r == 0) continue;
        auto below = rows.find(r - 1);
        for (const Block& b : rowblocks) {
            bool supported = false;
            if (below != rows.end())
                for (const Block& s : below->second)
                    if (b.shares_column(s)) { supported = true; break; }
            if (!supported)
                return {V::unsupported, "block has no support in the row below", {b}};
        }
    }

    if (require_anchor) {
        int m = t.blocks.front().offset;  // sorted: row-0 blocks come first
        bool any0 = false;
        for (const Block& b : t.blocks)
            if (b.row == 0) { any0 = true; m = std::min(m, b.offset); }
        if (!any0)
            return {V::unsupported, "row 0 is empty", {t.blocks.front()}};
        if (m != 0)
            return {V::not_anchored,
                    "leftmost row-0 block starts at " + std::to_string(m) + ", expected 0",
                    {}};
    }
    return {};
}

bool bottom_convex(const Tower& t) {
    std::vector<Block> r0 = t.row(0);
    // sorted by offset already; contiguous means each block starts where the
    // previous one ends
    for (std::size_t i = 1; i < r0.size(); ++i)
        if (r0[i].offset != r0[i - 1].right()) return false;
    return !r0.empty();
}

void require_valid(const Tower& t, bool placed) {
    ValidationReport r = placed ? validate_placed(t) : validate(t);
    if (!r.ok())
        throw std::invalid_argument("invalid tower: " + r.detail);
}

}  // namespace

ValidationReport validate(const Tower& t) { return check(t, true); }
ValidationReport validate_placed(const Tower& t) { return check(t, false); }

bool is_member(const Tower& t, const ClassSpec& c) {
    if ((c.kind == ClassSpec::Kind::wb || c.platform_based()) && c.param < 1)
        throw std::invalid_argument("class parameter must be >= 1");
    require_valid(t, c.platform_based());
    switch (c.kind) {
        case ClassSpec::Kind::wb:
            return bottom_convex(t) && t.bottom_block_count() == c.param;
        case ClassSpec::Kind::u:
            return bottom_convex(t) && t.bottom_block_count() == 1 && t.min_column() >= 0;
        case ClassSpec::Kind::total:
            return bottom_convex(t);
        case ClassSpec::Kind::vl:
        case ClassSpec::Kind::hl: {
            const int l = c.param;
            for (const Block& b : t.row(0))
                if (b.offset >= l || b.right() <= 0) return false;  // misses the platform
            if (c.kind == ClassSpec::Kind::hl && t.min_column() < 0) return false;
            return true;
        }
        case ClassSpec::Kind::rowconvex_platform: {
            if (t.widths.size() != 1) return false;
            const int k = t.widths[0];
            const int platform = c.param * k;
            if (!is_row_convex(t)) return false;
            for (const Block& b : t.row(0))
                if (b.offset >= platform || b.right() <= 0) return false;
            return true;
        }
    }
    throw std::logic_error("unreachable class kind");
}

bool is_restricted(const Tower& t) {
    require_valid(t, true);
    std::set<Block> all(t.blocks.begin(), t.blocks.end());
    for (const Block& b : t.blocks) {
        if (b.row == 0) continue;
        if (all.count(Block{b.row - 1, b.offset, b.width})) return false;
    }
    return true;
}

bool is_row_convex(const Tower& t) {
    if (t.blocks.empty()) return true;
    require_valid(t, true);
    std::map<int, std::vector<Block>> rows;
    for (const Block& b : t.blocks) rows[b.row].push_back(b);
    for (const auto& [r, rowblocks] : rows) {
        for (std::size_t i = 1; i < rowblocks.size(); ++i)
            if (rowblocks[i].offset != rowblocks[i - 1].right()) return false;
    }
    return true;
}

Tower canonicalize(const Tower& t) {
    if (t.blocks.empty())
        throw std::invalid_argument("cannot canonicalize an empty tower");
    bool any0 = false;
    int m = 0;
    for (const Block& b : t.blocks)
        if (b.row == 0) {
            m = any0 ? std::min(m, b.offset) : b.offset;
            any0 = true;
        }
    if (!any0)
        throw std::invalid_argument("cannot canonicalize: row 0 is empty");
    std::vector<Block> shifted = t.blocks;
    for (Block& b : shifted) b.offset -= m;
    return Tower(t.widths, std::move(shifted));
}

Tower collapse_stacks(const Tower& t) {
    require_valid(t, true);
    std::vector<Block> blocks = t.blocks;

    auto settle = [&blocks]() {
        bool moved = true;
        while (moved) {
            moved = false;
            std::sort(blocks.begin(), blocks.end());
            for (Block& b : blocks) {
                if (b.row == 0) continue;
                bool rests = false;
                for (const Block& s : blocks)
                    if (s.row == b.row - 1 && s.shares_column(b)) { rests = true; break; }
                if (!rests) {
                    --b.row;
                    moved = true;
                }
            }
        }
    };

    for (;;) {
        settle();
        std::set<Block> all(blocks.begin(), blocks.end());
        auto offender = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) {
            return b.row > 0 && all.count(Block{b.row - 1, b.offset, b.width}) > 0;
        });
        if (offender == blocks.end()) break;
        blocks.erase(offender);
    }
    return Tower(t.widths, std::move(blocks));
}

}  // namespace somino
