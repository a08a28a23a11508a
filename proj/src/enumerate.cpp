#include "somino/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "somino/io.hpp"

namespace somino {

namespace {

struct Generator {
    const EnumSpec& spec;
    const std::function<void(const Tower&)>& visit;
    std::vector<int> pool;       // remaining blocks per width index
    int remaining = 0;
    std::vector<Block> acc;      // all placed blocks
    bool forbid_negative;        // u/hl: no block may use a column < 0

    void emit() {
        Tower t(spec.widths, acc);
        visit(t);
    }

    static bool overlaps_any(int off, int w, const std::vector<Block>& row) {
        for (const Block& b : row)
            if (off < b.right() && b.offset < off + w) return true;
        return false;
    }

    bool footprint_in(int off, int w, const std::vector<Block>& row) const {
        for (const Block& b : row)
            if (b.offset == off && b.width == w) return true;
        return false;
    }

    // Extend `row` (the row being built, strictly above a supporting row)
    // left to right.  At each state the row so far can be closed: if blocks
    // remain, recurse upward, otherwise emit.
    void grow_row(int rowidx, const std::vector<Block>& below, std::vector<Block>& row,
                  int next_off) {
        if (!row.empty()) {
            if (remaining == 0) {
                emit();
            } else {
                std::vector<Block> finished = row;
                std::vector<Block> next;
                grow_row(rowidx + 1, finished, next, minimum_offset(finished));
            }
        }
        int min_below = below.front().offset;
        int max_below = 0;
        for (const Block& b : below) {
            min_below = std::min(min_below, b.offset);
            max_below = std::max(max_below, b.right() - 1);
        }
        for (int off = std::max(next_off, lower_bound_for(min_below)); off <= max_below;
             ++off) {
            for (int wi = 0; wi < spec.widths.size(); ++wi) {
                if (pool[wi] == 0) continue;
                const int w = spec.widths[wi];
                if (!overlaps_any(off, w, below)) continue;  // unsupported
                if (spec.restricted && footprint_in(off, w, below)) continue;
                --pool[wi];
                --remaining;
                row.push_back(Block{rowidx, off, w});
                acc.push_back(row.back());
                grow_row(rowidx, below, row, off + w);
                acc.pop_back();
                row.pop_back();
                ++pool[wi];
                ++remaining;
            }
        }
    }

    int lower_bound_for(int min_below) const {
        int lo = min_below - spec.widths.max_width() + 1;
        return forbid_negative ? std::max(lo, 0) : lo;
    }

    int minimum_offset(const std::vector<Block>& row) const {
        return lower_bound_for(row.front().offset);
    }

    void after_bottom(const std::vector<Block>& bottom) {
        if (remaining == 0) {
            emit();
            return;
        }
        std::vector<Block> row;
        grow_row(1, bottom, row, minimum_offset(bottom));
    }

    // Convex bottoms: every ordering of every sub-multiset of size b, packed
    // contiguously from column 0.
    void convex_bottom(int b, std::vector<Block>& bottom, int off) {
        if (static_cast<int>(bottom.size()) == b) {
            after_bottom(bottom);
            return;
        }
        for (int wi = 0; wi < spec.widths.size(); ++wi) {
            if (pool[wi] == 0) continue;
            const int w = spec.widths[wi];
            --pool[wi];
            --remaining;
            bottom.push_back(Block{0, off, w});
            acc.push_back(bottom.back());
            convex_bottom(b, bottom, off + w);
            acc.pop_back();
            bottom.pop_back();
            ++pool[wi];
            ++remaining;
        }
    }

    // Platform bottoms: independent non-overlapping blocks, each meeting the
    // platform [0, l).
    void platform_bottom(int l, std::vector<Block>& bottom, int next_off) {
        if (!bottom.empty()) after_bottom(bottom);
        const int lo = forbid_negative ? 0 : 1 - spec.widths.max_width();
        for (int off = std::max(next_off, lo); off <= l - 1; ++off) {
            for (int wi = 0; wi < spec.widths.size(); ++wi) {
                if (pool[wi] == 0) continue;
                const int w = spec.widths[wi];
                if (off + w <= 0) continue;  // misses the platform
                --pool[wi];
                --remaining;
                bottom.push_back(Block{0, off, w});
                acc.push_back(bottom.back());
                platform_bottom(l, bottom, off + w);
                acc.pop_back();
                bottom.pop_back();
                ++pool[wi];
                ++remaining;
            }
        }
    }

    void run() {
        const int n = remaining;
        std::vector<Block> bottom;
        switch (spec.cls.kind) {
            case ClassSpec::Kind::wb:
                if (spec.cls.param < 1 || spec.cls.param > n)
                    throw std::invalid_argument("enumerate: b out of range");
                convex_bottom(spec.cls.param, bottom, 0);
                break;
            case ClassSpec::Kind::u:
                convex_bottom(1, bottom, 0);
                break;
            case ClassSpec::Kind::total:
                for (int b = 1; b <= n; ++b) convex_bottom(b, bottom, 0);
                break;
            case ClassSpec::Kind::vl:
            case ClassSpec::Kind::hl:
                if (spec.cls.param < 1)
                    throw std::invalid_argument("enumerate: platform width must be >= 1");
                platform_bottom(spec.cls.param, bottom, 1 - spec.widths.max_width());
                break;
            case ClassSpec::Kind::rowconvex_platform:
                throw std::logic_error("rowconvex handled before Generator");
        }
    }
};

void rc_rows(int l, int k, int row, int below_off, int below_blocks, int remaining,
             std::vector<Block>& acc, const std::function<void(const Tower&)>& visit);

}  // namespace

void for_each_tower(const EnumSpec& spec, const std::function<void(const Tower&)>& visit) {
    if (static_cast<int>(spec.nvec.size()) != spec.widths.size())
        throw std::invalid_argument("enumerate: nvec length does not match width list");
    int n = 0;
    for (int c : spec.nvec) {
        if (c < 0) throw std::invalid_argument("enumerate: nvec entries must be >= 0");
        n += c;
    }
    if (n == 0) throw std::invalid_argument("enumerate: nvec must contain a block");
    if (n > spec.cap)
        throw std::invalid_argument("enumerate: job exceeds the cap of " +
                                    std::to_string(spec.cap) + " blocks");

    if (spec.cls.kind == ClassSpec::Kind::rowconvex_platform) {
        if (spec.widths.size() != 1)
            throw std::invalid_argument("enumerate: row-convex family needs a single width");
        if (spec.cls.param < 1)
            throw std::invalid_argument("enumerate: platform width must be >= 1");
        std::vector<Block> acc;
        auto sink = [&](const Tower& t) {
            if (!spec.restricted || is_restricted(t)) visit(t);
        };
        rc_rows(spec.cls.param, spec.widths[0], 0, 0, spec.cls.param, n, acc, sink);
        return;
    }

    Generator gen{spec,
                  visit,
                  spec.nvec,
                  n,
                  {},
                  spec.cls.kind == ClassSpec::Kind::u || spec.cls.kind == ClassSpec::Kind::hl};
    gen.run();
}

std::vector<Tower> enumerate_towers(const EnumSpec& spec) {
    std::vector<std::pair<std::string, Tower>> keyed;
    for_each_tower(spec, [&](const Tower& t) {
        keyed.emplace_back(io::tower_key(t), t);
    });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tower> out;
    out.reserve(keyed.size());
    for (auto& [k, t] : keyed) out.push_back(std::move(t));
    return out;
}

Int count_towers(const EnumSpec& spec) {
    Int n = 0;
    for_each_tower(spec, [&](const Tower&) { ++n; });
    return n;
}

namespace {

void rc_rows(int l, int k, int row, int below_off, int below_blocks, int remaining,
             std::vector<Block>& acc, const std::function<void(const Tower&)>& visit) {
    if (remaining == 0) {
        visit(Tower(WidthList({k}), acc));
        return;
    }
    const int below_end = below_off + below_blocks * k;
    for (int i = 1; i <= remaining; ++i) {
        // every block of the i-run must meet the span below
        const int lo = below_off - k + 1;
        const int hi = below_end - 1 - (i - 1) * k;
        for (int off = lo; off <= hi; ++off) {
            for (int j = 0; j < i; ++j) acc.push_back(Block{row, off + j * k, k});
            rc_rows(l, k, row + 1, off, i, remaining - i, acc, visit);
            for (int j = 0; j < i; ++j) acc.pop_back();
        }
    }
}

}  // namespace

std::vector<Tower> enumerate_row_convex(int l, int n, int k, int cap) {
    if (l < 1 || k < 2) throw std::invalid_argument("enumerate_row_convex: need l >= 1, k >= 2");
    if (n < 0) throw std::invalid_argument("enumerate_row_convex: need n >= 0");
    if (n > cap)
        throw std::invalid_argument("enumerate_row_convex: job exceeds the cap of " +
                                    std::to_string(cap) + " blocks");
    std::vector<std::pair<std::string, Tower>> keyed;
    auto visit = [&](const Tower& t) { keyed.emplace_back(io::tower_key(t), t); };
    if (n == 0) {
        Tower empty(WidthList({k}), {});
        keyed.emplace_back(io::tower_key(empty), empty);
    } else {
        std::vector<Block> acc;
        // the platform acts as a row of l blocks at offset 0
        rc_rows(l, k, 0, 0, l, n, acc, visit);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tower> out;
    out.reserve(keyed.size());
    for (auto& [kk, t] : keyed) out.push_back(std::move(t));
    return out;
}

Int count_row_convex(int l, int n, int k, int cap) {
    return Int(enumerate_row_convex(l, n, k, cap).size());
}

}  // namespace somino
