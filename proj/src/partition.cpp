#include "ribbon/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ribbon {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad partition part: '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::display() const { return "[" + to_string() + "]"; }

int hook_length(const Partition& p, Cell x) {
    if (x.row < 1 || x.col < 1 || x.col > p.part(x.row))
        throw std::invalid_argument("cell outside the diagram");
    int arm = p.part(x.row) - x.col;
    int leg = 0;
    for (int r = x.row + 1; r <= p.rows() && p.part(r) >= x.col; ++r) ++leg;
    return arm + leg + 1;
}

std::vector<int> content_multiset(const Partition& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (Cell x : p.cells()) out.push_back(content(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> hook_multiset(const Partition& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    // column lengths once, then hooks in one pass
    std::vector<int> col_len(p.part(1) + 1, 0);
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c) col_len[c] = r;
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c)
            out.push_back((p.part(r) - c) + (col_len[c] - r) + 1);
    std::sort(out.begin(), out.end());
    return out;
}

int PartitionTuple::size() const {
    int total = 0;
    for (const auto& c : components_) total += c.size();
    return total;
}

bool PartitionTuple::all_empty() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Partition& p) { return p.empty(); });
}

std::string PartitionTuple::display() const {
    std::string out = "(";
    for (int s = 0; s < length(); ++s) {
        if (s) out += ", ";
        out += components_[s].display();
    }
    return out + ")";
}

namespace {

// Decodes a sorted list of north-step positions: the j-th north (0-based,
// ascending) contributes a row of length position - j, bottom row first.
Partition decode_norths(std::vector<int> norths) {
    std::sort(norths.begin(), norths.end());
    std::vector<int> parts;
    for (int j = static_cast<int>(norths.size()) - 1; j >= 0; --j) {
        int len = norths[static_cast<std::size_t>(j)] - j;
        if (len == 0) break;  // all further rows are empty
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

int padded_row_count(const Partition& p, int k) {
    int rows = p.rows();
    int padded = ((rows + k - 1) / k) * k;
    return padded;
}

std::vector<int> north_positions_of(const Partition& p, int padded) {
    std::vector<int> norths;
    norths.reserve(static_cast<std::size_t>(padded));
    for (int i = 1; i <= padded; ++i) norths.push_back(p.part(i) + padded - i);
    std::sort(norths.begin(), norths.end());
    return norths;
}

}  // namespace

EdgeSequence EdgeSequence::of(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    EdgeSequence seq;
    seq.padded_rows_ = padded_row_count(p, k);
    auto norths = north_positions_of(p, seq.padded_rows_);
    int length = seq.padded_rows_ == 0 ? 0 : norths.back() + 1;
    seq.word_.assign(static_cast<std::size_t>(length), Step::east);
    for (int pos : norths) seq.word_[static_cast<std::size_t>(pos)] = Step::north;
    return seq;
}

std::vector<int> EdgeSequence::north_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] == Step::north) out.push_back(static_cast<int>(i));
    return out;
}

Partition EdgeSequence::decode() const { return decode_norths(north_positions()); }

BorderStrip strip_between(const Partition& big, const Partition& small) {
    if (!big.contains(small))
        throw std::invalid_argument("skew shape requires containment");
    std::vector<Cell> cells;
    for (int r = 1; r <= big.rows(); ++r)
        for (int c = small.part(r) + 1; c <= big.part(r); ++c) cells.push_back({r, c});
    if (cells.empty()) throw std::invalid_argument("empty skew shape is not a border strip");
    std::sort(cells.begin(), cells.end(),
              [](Cell a, Cell b) { return content(a) < content(b); });
    // One cell per content and consecutive cells adjacent (right or up)
    // characterises a border strip.
    for (std::size_t i = 1; i < cells.size(); ++i) {
        Cell prev = cells[i - 1], cur = cells[i];
        bool right = cur.row == prev.row && cur.col == prev.col + 1;
        bool up = cur.col == prev.col && cur.row == prev.row - 1;
        if (!right && !up)
            throw std::invalid_argument("skew shape is not a border strip");
    }
    return BorderStrip{std::move(cells)};
}

std::vector<std::pair<BorderStrip, Partition>> removable_strips(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::pair<BorderStrip, Partition>> out;
    if (p.size() < k) return out;
    int rows = p.rows();
    auto norths = north_positions_of(p, rows);
    std::vector<char> is_north(static_cast<std::size_t>(norths.back() + 1), 0);
    for (int pos : norths) is_north[static_cast<std::size_t>(pos)] = 1;
    // Moving a north step from position n to n-k removes one border strip
    // of size k; larger n means larger tail content.
    for (auto it = norths.rbegin(); it != norths.rend(); ++it) {
        int n = *it;
        if (n < k || is_north[static_cast<std::size_t>(n - k)]) continue;
        std::vector<int> moved;
        moved.reserve(norths.size());
        for (int pos : norths) moved.push_back(pos == n ? n - k : pos);
        Partition rest = decode_norths(std::move(moved));
        BorderStrip strip = strip_between(p, rest);
        out.emplace_back(std::move(strip), std::move(rest));
    }
    return out;
}

Partition k_core(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int padded = padded_row_count(p, k);
    auto norths = north_positions_of(p, padded);
    // Abacus view: in every residue class the beads fall to the bottom.
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (int pos : norths) ++count[static_cast<std::size_t>(pos % k)];
    std::vector<int> packed;
    packed.reserve(norths.size());
    for (int s = 0; s < k; ++s)
        for (int j = 0; j < count[static_cast<std::size_t>(s)]; ++j)
            packed.push_back(s + j * k);
    return decode_norths(std::move(packed));
}

PartitionTuple k_quotient(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int padded = padded_row_count(p, k);
    auto norths = north_positions_of(p, padded);
    std::vector<std::vector<int>> sub(static_cast<std::size_t>(k));
    for (int pos : norths)
        sub[static_cast<std::size_t>(pos % k)].push_back(pos / k);
    std::vector<Partition> components;
    components.reserve(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s)
        components.push_back(decode_norths(std::move(sub[static_cast<std::size_t>(s)])));
    return PartitionTuple(std::move(components));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition from_quotient(const PartitionTuple& t, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (t.length() != k)
        throw std::invalid_argument("quotient tuple must have k components");
    int rows = 0;
    for (const auto& c : t.components()) rows = std::max(rows, c.rows());
    std::vector<int> norths;
    norths.reserve(static_cast<std::size_t>(rows * k));
    for (int s = 0; s < k; ++s) {
        const Partition& comp = t.component(s);
        for (int i = 1; i <= rows; ++i)
            norths.push_back((comp.part(i) + rows - i) * k + s);
    }
    return decode_norths(std::move(norths));
}

}  // namespace ribbon
