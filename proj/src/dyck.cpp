#include "somino/dyck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace somino {

HnSpec::HnSpec(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::set<int> seen;
    for (auto [t, l] : pairs) {
        if (t < 1 || l < 1)
            throw std::invalid_argument("HnSpec entries must be positive");
        if (!seen.insert(l).second)
            throw std::invalid_argument("HnSpec letters must be distinct");
    }
    if (pairs.empty())
        throw std::invalid_argument("HnSpec must contain at least one letter");
}

int HnSpec::zeros() const {
    int n = 0;
    for (auto [t, l] : pairs) n += t * l;
    return n;
}

int HnSpec::up_letters() const {
    int n = 0;
    for (auto [t, l] : pairs) n += t;
    return n;
}

bool HnSpec::has_letter(int l) const {
    for (auto [t, ll] : pairs)
        if (ll == l) return true;
    return false;
}

PathReport validate_path(const DyckPath& p) {
    std::map<int, int> want;  // letter -> count
    for (auto [t, l] : p.spec.pairs) want[l] = t;
    want[0] = p.spec.zeros();

    std::map<int, int> got;
    long long level = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        const int w = p.word[i];
        if (w != 0 && !p.spec.has_letter(w))
            return {false, "letter " + std::to_string(w) + " not in the alphabet"};
        ++got[w];
        level += w == 0 ? -1 : w;
        if (level < 0)
            return {false, "prefix sum negative at position " + std::to_string(i)};
    }
    if (got != want)
        return {false, "letter multiset does not match the spec"};
    if (level != 0)
        return {false, "path does not return to zero"};
    return {};
}

namespace {

// DFS for the unique order satisfying the drop condition and the
// staircase condition; the search backtracks because the right choice is
// not always determined locally.
bool order_dfs(const std::vector<Block>& blocks, std::vector<char>& used,
               std::vector<Block>& out) {
    if (out.size() == blocks.size()) return true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (used[i]) continue;
        const Block& b = blocks[i];
        if (!out.empty() && b.offset >= out.back().right()) continue;
        bool droppable = true;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (used[j] || j == i) continue;
            if (blocks[j].row < b.row && blocks[j].shares_column(b)) {
                droppable = false;
                break;
            }
        }
        if (!droppable) continue;
        used[i] = 1;
        out.push_back(b);
        if (order_dfs(blocks, used, out)) return true;
        out.pop_back();
        used[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<Block> order_blocks(const Tower& t) {
    if (!is_member(t, ClassSpec::u()))
        throw std::invalid_argument("order_blocks: tower is not in U");
    std::vector<char> used(t.blocks.size(), 0);
    std::vector<Block> out;
    out.reserve(t.blocks.size());
    if (!order_dfs(t.blocks, used, out))
        throw std::logic_error("order_blocks: no admissible order exists");
    return out;
}

DyckPath tower_to_path(const Tower& t) {
    for (const Block& b : t.blocks)
        if (b.width < 2)
            throw std::invalid_argument("tower_to_path: widths must be >= 2");
    const std::vector<Block> order = order_blocks(t);

    std::vector<int> word;
    std::map<int, int> letter_count;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int letter = order[i].width - 1;
        word.push_back(letter);
        ++letter_count[letter];
        const int down = i + 1 < order.size()
                             ? order[i].right() - order[i + 1].offset - 1
                             : order[i].right() - 1;
        if (down < 0)
            throw std::logic_error("tower_to_path: negative gap in block order");
        word.insert(word.end(), down, 0);
    }

    std::vector<std::pair<int, int>> pairs;
    for (auto [l, t_count] : letter_count) pairs.emplace_back(t_count, l);
    DyckPath p{HnSpec(std::move(pairs)), std::move(word)};
    PathReport r = validate_path(p);
    if (!r.ok)
        throw std::logic_error("tower_to_path: produced invalid path: " + r.detail);
    return p;
}

Tower path_to_tower(const DyckPath& p) {
    std::vector<int> ws;
    for (auto [t, l] : p.spec.pairs) ws.push_back(l + 1);
    return path_to_tower(p, WidthList(ws));
}

Tower path_to_tower(const DyckPath& p, const WidthList& widths) {
    PathReport r = validate_path(p);
    if (!r.ok) throw std::invalid_argument("path_to_tower: invalid path: " + r.detail);
    for (auto [t, l] : p.spec.pairs)
        if (!widths.contains(l + 1))
            throw std::invalid_argument("path_to_tower: width list lacks width " +
                                        std::to_string(l + 1));

    // Decode the flipped bottom edges: consecutive letters are separated by
    // (right edge of previous) - (left edge of next) - 1 zeros.
    std::vector<std::pair<int, int>> cols;  // (offset, width)
    int offset = 0;
    int zeros_before = 0;
    bool first = true;
    int prev_right = 0;
    for (int w : p.word) {
        if (w == 0) {
            ++zeros_before;
            continue;
        }
        const int width = w + 1;
        if (!first) offset = prev_right - zeros_before - 1;
        cols.emplace_back(offset, width);
        prev_right = offset + width;
        zeros_before = 0;
        first = false;
    }

    // Drop blocks in order; each lands on the topmost earlier block it
    // overlaps.  Any later block landing on the ground would leave U.
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        auto [o, w] = cols[i];
        int row = -1;
        for (const Block& b : blocks)
            if (b.offset < o + w && o < b.right()) row = std::max(row, b.row);
        if (i > 0 && row < 0)
            throw std::invalid_argument("path_to_tower: block falls to the ground");
        blocks.push_back(Block{row + 1, o, w});
    }

    Tower t(widths, std::move(blocks));
    if (!is_member(t, ClassSpec::u()))
        throw std::invalid_argument("path_to_tower: reconstruction is not in U");
    return t;
}

}  // namespace somino
