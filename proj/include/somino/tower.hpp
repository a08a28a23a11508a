#pragma once

#include <compare>
#include <string>
#include <vector>

namespace somino {

// The set S of admissible block widths: distinct positive integers, kept ascending.
struct WidthList {
    std::vector<int> widths;

    WidthList() = default;
    explicit WidthList(std::vector<int> w);

    int size() const { return static_cast<int>(widths.size()); }
    int operator[](int i) const { return widths[i]; }
    bool contains(int w) const;
    int index_of(int w) const;  // -1 if absent
    int max_width() const;

    friend bool operator==(const WidthList&, const WidthList&) = default;
};

// A unit-height block occupying columns [offset, offset + width) of its row.
struct Block {
    int row = 0;
    int offset = 0;
    int width = 1;

    int right() const { return offset + width; }  // exclusive
    bool covers(int col) const { return offset <= col && col < right(); }
    bool shares_column(const Block& o) const {
        return offset < o.right() && o.offset < right();
    }

    friend auto operator<=>(const Block&, const Block&) = default;
};

struct Tower {
    WidthList widths;
    std::vector<Block> blocks;  // sorted by (row, offset, width)

    Tower() = default;
    Tower(WidthList w, std::vector<Block> b);

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool empty() const { return blocks.empty(); }
    int height() const;               // number of occupied rows (max row + 1); 0 if empty
    std::vector<int> nvec() const;    // block count per width, aligned with widths
    std::vector<Block> row(int r) const;
    int min_column() const;           // over all blocks; throws if empty
    int bottom_block_count() const;   // blocks in row 0

    friend bool operator==(const Tower&, const Tower&) = default;
};

// Tower families from the counting theory.  param is b for wb, the platform
// width in columns for vl/hl, and the platform width in block units for
// rowconvex_platform.
struct ClassSpec {
    enum class Kind { wb, u, vl, hl, total, rowconvex_platform };

    Kind kind = Kind::total;
    int param = 0;

    static ClassSpec wb(int b) { return {Kind::wb, b}; }
    static ClassSpec u() { return {Kind::u, 0}; }
    static ClassSpec vl(int l) { return {Kind::vl, l}; }
    static ClassSpec hl(int l) { return {Kind::hl, l}; }
    static ClassSpec total() { return {Kind::total, 0}; }
    static ClassSpec rowconvex_platform(int l) { return {Kind::rowconvex_platform, l}; }

    // True for families anchored to an absolute platform rather than counted
    // up to translation.
    bool platform_based() const {
        return kind == Kind::vl || kind == Kind::hl || kind == Kind::rowconvex_platform;
    }

    std::string name() const;
    static ClassSpec parse(const std::string& s);  // "wb:2", "u", "vl:1", "total", ...

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct ValidationReport {
    enum class Violation { none, empty, bad_block, overlap, unsupported, not_anchored };

    Violation violation = Violation::none;
    std::string detail;
    std::vector<Block> offenders;

    bool ok() const { return violation == Violation::none; }
};

// Full validity: pairwise non-overlap, every block of row r >= 1 shares at
// least one column with a block of row r-1, and the translation anchor
// min{offset : row 0} == 0 holds.
ValidationReport validate(const Tower& t);

// Validity in absolute coordinates (platform families): everything except the
// translation anchor.
ValidationReport validate_placed(const Tower& t);

// Membership test for a family.  Throws std::invalid_argument if the tower is
// not valid in the sense appropriate for the family (placed validity for
// platform families, anchored validity otherwise).
bool is_member(const Tower& t, const ClassSpec& c);

// No block sits directly on a block with the same offset and width.
bool is_restricted(const Tower& t);

// Every occupied row covers a contiguous range of columns.
bool is_row_convex(const Tower& t);

// Shift offsets so the leftmost row-0 block starts at column 0.
Tower canonicalize(const Tower& t);

// Remove blocks resting directly on an identical footprint and let the rest
// settle under gravity; the result is restricted.
Tower collapse_stacks(const Tower& t);

}  // namespace somino
