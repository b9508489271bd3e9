#include "ribbon/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ribbon {

bool DescentData::contains(int i) const {
    return std::binary_search(descents.begin(), descents.end(), i);
}

BorderStripTableau::BorderStripTableau(int k, std::vector<Partition> flag)
    : k_(k), flag_(std::move(flag)) {
    if (k_ < 1) throw std::invalid_argument("k must be positive");
    if (flag_.empty() || !flag_.front().empty())
        throw std::invalid_argument("flag must start at the empty partition");
    strips_.reserve(flag_.size() - 1);
    for (std::size_t i = 1; i < flag_.size(); ++i) {
        BorderStrip s = strip_between(flag_[i], flag_[i - 1]);
        if (s.size() != k_)
            throw std::invalid_argument("flag step is not a border strip of size k");
        strips_.push_back(std::move(s));
    }
}

int BorderStripTableau::height() const {
    int h = 0;
    for (const auto& s : strips_) h += s.height();
    return h;
}

int BorderStripTableau::first_strip_height() const {
    return strips_.empty() ? 0 : strips_.front().height();
}

DescentData descents(const BorderStripTableau& b) {
    DescentData d;
    for (int i = 1; i < b.strip_count(); ++i) {
        if (b.strip(i + 1).tail().row > b.strip(i).tail().row) {
            d.descents.push_back(i);
            d.maj += i;
        }
    }
    return d;
}

int bst_stat(const BorderStripTableau& b) {
    return b.k() * descents(b).count() + b.first_strip_height();
}

BstStream::BstStream(Partition shape, int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (shape.size() % k != 0) return;  // empty stream, not an error
    if (shape.empty()) {
        pending_empty_ = true;
        return;
    }
    stack_.push_back(Frame{shape, removable_strips(shape, k), 0});
}

BorderStripTableau BstStream::make_tableau() const {
    std::vector<Partition> flag;
    flag.reserve(stack_.size());
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) flag.push_back(it->shape);
    return BorderStripTableau(k_, std::move(flag));
}

std::optional<BorderStripTableau> BstStream::next() {
    if (pending_empty_) {
        pending_empty_ = false;
        return BorderStripTableau(k_, {Partition{}});
    }
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.next_move < top.moves.size()) {
            const auto& [strip, rest] = top.moves[top.next_move++];
            stack_.push_back(Frame{rest, removable_strips(rest, k_), 0});
            if (stack_.back().shape.empty()) return make_tableau();
        } else {
            stack_.pop_back();
        }
    }
    return std::nullopt;
}

std::vector<BorderStripTableau> all_bst(const Partition& shape, int k) {
    std::vector<BorderStripTableau> out;
    BstStream stream(shape, k);
    while (auto b = stream.next()) out.push_back(std::move(*b));
    return out;
}

long long count_bst(const Partition& shape, int k) {
    long long n = 0;
    BstStream stream(shape, k);
    while (stream.next()) ++n;
    return n;
}

BiPoly fake_degree(const Partition& shape) {
    BiPoly f;
    BstStream stream(shape, 1);
    while (auto t = stream.next()) {
        DescentData d = descents(*t);
        f.add_term(1, d.maj, d.count());
    }
    return f;
}

int bst_sign(const Partition& shape, int k) {
    if (!k_core(shape, k).empty())
        throw std::domain_error("no border strip tableau: nonempty core");
    int height = 0;
    Partition cur = shape;
    while (!cur.empty()) {
        auto moves = removable_strips(cur, k);
        // empty core guarantees a removable strip at every stage
        height += moves.front().first.height();
        cur = moves.front().second;
    }
    return height % 2 == 0 ? 1 : -1;
}

StandardTableauTuple::StandardTableauTuple(PartitionTuple shapes,
                                           std::vector<std::vector<std::vector<int>>> entries)
    : shapes_(std::move(shapes)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shapes_.length())
        throw std::invalid_argument("entry grids do not match the shape tuple");
    int total = shapes_.size();
    positions_.assign(static_cast<std::size_t>(total), {-1, Cell{}});
    for (int s = 0; s < shapes_.length(); ++s) {
        const Partition& shape = shapes_.component(s);
        const auto& grid = entries_[static_cast<std::size_t>(s)];
        if (static_cast<int>(grid.size()) != shape.rows())
            throw std::invalid_argument("entry grid has wrong row count");
        for (int r = 1; r <= shape.rows(); ++r) {
            const auto& row = grid[static_cast<std::size_t>(r - 1)];
            if (static_cast<int>(row.size()) != shape.part(r))
                throw std::invalid_argument("entry grid has wrong row length");
            for (int c = 1; c <= shape.part(r); ++c) {
                int v = row[static_cast<std::size_t>(c - 1)];
                if (v < 1 || v > total || positions_[static_cast<std::size_t>(v - 1)].first >= 0)
                    throw std::invalid_argument("entries must be a bijection onto 1..size");
                positions_[static_cast<std::size_t>(v - 1)] = {s, Cell{r, c}};
                if (c > 1 && row[static_cast<std::size_t>(c - 2)] >= v)
                    throw std::invalid_argument("rows must strictly increase");
                if (r > 1 && grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] >= v)
                    throw std::invalid_argument("columns must strictly increase");
            }
        }
    }
}

int StandardTableauTuple::entry(int component, Cell x) const {
    return entries_[static_cast<std::size_t>(component)][static_cast<std::size_t>(x.row - 1)]
                   [static_cast<std::size_t>(x.col - 1)];
}

std::pair<int, Cell> StandardTableauTuple::locate(int value) const {
    if (value < 1 || value > size()) throw std::out_of_range("value not in the tuple");
    return positions_[static_cast<std::size_t>(value - 1)];
}

DescentData descents(const StandardTableauTuple& t) {
    DescentData d;
    int total = t.size();
    for (int i = 1; i < total; ++i) {
        auto [s, a] = t.locate(i);
        auto [u, b] = t.locate(i + 1);
        bool descent = s <= u ? content(a) > content(b) : content(a) >= content(b);
        if (descent) {
            d.descents.push_back(i);
            d.maj += i;
        }
    }
    if (total > 0) d.idx1 = idx1(t);
    return d;
}

int idx1(const StandardTableauTuple& t) {
    if (t.size() == 0) throw std::domain_error("empty tuple has no entry 1");
    return t.length() - 1 - t.locate(1).first;
}

SytTupleStream::SytTupleStream(PartitionTuple shapes)
    : shapes_(std::move(shapes)), total_(shapes_.size()) {
    partial_.resize(static_cast<std::size_t>(shapes_.length()));
    for (int s = 0; s < shapes_.length(); ++s)
        partial_[static_cast<std::size_t>(s)].assign(
            static_cast<std::size_t>(shapes_.component(s).rows()), 0);
    if (total_ == 0) {
        pending_empty_ = true;
        return;
    }
    push_frame();
}

// Collects the addable cells of the current partial shapes and pushes a
// frame for the next entry.
bool SytTupleStream::push_frame() {
    Frame f;
    for (int s = 0; s < shapes_.length(); ++s) {
        const Partition& target = shapes_.component(s);
        const auto& rows = partial_[static_cast<std::size_t>(s)];
        for (int r = 1; r <= target.rows(); ++r) {
            int len = rows[static_cast<std::size_t>(r - 1)];
            if (len >= target.part(r)) continue;
            if (r > 1 && rows[static_cast<std::size_t>(r - 2)] <= len) continue;
            f.candidates.emplace_back(s, r);
        }
    }
    stack_.push_back(std::move(f));
    return true;
}

StandardTableauTuple SytTupleStream::make_tuple() const {
    std::vector<std::vector<std::vector<int>>> entries(static_cast<std::size_t>(shapes_.length()));
    for (int s = 0; s < shapes_.length(); ++s) {
        const Partition& shape = shapes_.component(s);
        auto& grid = entries[static_cast<std::size_t>(s)];
        grid.resize(static_cast<std::size_t>(shape.rows()));
        for (int r = 1; r <= shape.rows(); ++r)
            grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), 0);
    }
    for (int i = 0; i < total_; ++i) {
        auto [s, r, c] = placed_[static_cast<std::size_t>(i)];
        entries[static_cast<std::size_t>(s)][static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = i + 1;
    }
    return StandardTableauTuple(shapes_, std::move(entries));
}

std::optional<StandardTableauTuple> SytTupleStream::next() {
    if (pending_empty_) {
        pending_empty_ = false;
        return make_tuple();
    }
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.next_candidate < top.candidates.size()) {
            auto [s, r] = top.candidates[top.next_candidate++];
            auto& len = partial_[static_cast<std::size_t>(s)][static_cast<std::size_t>(r - 1)];
            ++len;
            placed_.emplace_back(s, r, len);
            if (static_cast<int>(placed_.size()) == total_) {
                auto tuple = make_tuple();
                // undo the final placement and keep scanning this frame
                auto [us, ur, uc] = placed_.back();
                placed_.pop_back();
                --partial_[static_cast<std::size_t>(us)][static_cast<std::size_t>(ur - 1)];
                return tuple;
            }
            push_frame();
        } else {
            stack_.pop_back();
            if (!placed_.empty()) {
                auto [s, r, c] = placed_.back();
                placed_.pop_back();
                --partial_[static_cast<std::size_t>(s)][static_cast<std::size_t>(r - 1)];
            }
        }
    }
    return std::nullopt;
}

std::vector<StandardTableauTuple> all_syt_tuples(const PartitionTuple& shapes) {
    std::vector<StandardTableauTuple> out;
    SytTupleStream stream(shapes);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

long long count_syt_tuples(const PartitionTuple& shapes) {
    long long n = 0;
    SytTupleStream stream(shapes);
    while (stream.next()) ++n;
    return n;
}

namespace {

// The single cell by which quotient `cur` exceeds quotient `prev`.
std::pair<int, Cell> quotient_step(const PartitionTuple& prev, const PartitionTuple& cur) {
    int comp = -1;
    Cell cell;
    for (int s = 0; s < cur.length(); ++s) {
        const Partition& a = prev.component(s);
        const Partition& b = cur.component(s);
        if (a == b) continue;
        for (int r = 1; r <= b.rows(); ++r) {
            int diff = b.part(r) - a.part(r);
            if (diff == 0) continue;
            if (diff != 1 || comp >= 0)
                throw std::logic_error("flag quotients must differ by exactly one cell");
            comp = s;
            cell = Cell{r, b.part(r)};
        }
    }
    if (comp < 0) throw std::logic_error("flag quotients must differ by exactly one cell");
    return {comp, cell};
}

}  // namespace

StandardTableauTuple littlewood_map(const BorderStripTableau& b) {
    int k = b.k();
    PartitionTuple shapes = k_quotient(b.shape(), k);
    std::vector<std::vector<std::vector<int>>> entries(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        const Partition& shape = shapes.component(s);
        auto& grid = entries[static_cast<std::size_t>(s)];
        grid.resize(static_cast<std::size_t>(shape.rows()));
        for (int r = 1; r <= shape.rows(); ++r)
            grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), 0);
    }
    PartitionTuple prev = k_quotient(Partition{}, k);
    for (int i = 1; i <= b.strip_count(); ++i) {
        PartitionTuple cur = k_quotient(b.flag()[static_cast<std::size_t>(i)], k);
        auto [s, cell] = quotient_step(prev, cur);
        entries[static_cast<std::size_t>(s)][static_cast<std::size_t>(cell.row - 1)]
               [static_cast<std::size_t>(cell.col - 1)] = i;
        prev = std::move(cur);
    }
    return StandardTableauTuple(std::move(shapes), std::move(entries));
}

BorderStripTableau littlewood_inverse(const StandardTableauTuple& t, int k) {
    if (t.length() != k) throw std::invalid_argument("tuple length must equal k");
    int total = t.size();
    std::vector<Partition> flag;
    flag.reserve(static_cast<std::size_t>(total) + 1);
    // shapes of the subtuples filled with entries <= i
    std::vector<std::vector<int>> partial(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s)
        partial[static_cast<std::size_t>(s)].assign(
            static_cast<std::size_t>(t.shapes().component(s).rows()), 0);
    auto snapshot = [&]() {
        std::vector<Partition> comps;
        comps.reserve(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) {
            std::vector<int> parts;
            for (int len : partial[static_cast<std::size_t>(s)])
                if (len > 0) parts.push_back(len);
            comps.emplace_back(std::move(parts));
        }
        return from_quotient(PartitionTuple(std::move(comps)), k);
    };
    flag.push_back(snapshot());
    for (int i = 1; i <= total; ++i) {
        auto [s, cell] = t.locate(i);
        ++partial[static_cast<std::size_t>(s)][static_cast<std::size_t>(cell.row - 1)];
        flag.push_back(snapshot());
    }
    return BorderStripTableau(k, std::move(flag));
}

SemistandardTableauTuple::SemistandardTableauTuple(
    PartitionTuple shapes, std::vector<std::vector<std::vector<int>>> entries)
    : shapes_(std::move(shapes)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shapes_.length())
        throw std::invalid_argument("entry grids do not match the shape tuple");
    bool has_one = false;
    for (int s = 0; s < shapes_.length(); ++s) {
        const Partition& shape = shapes_.component(s);
        const auto& grid = entries_[static_cast<std::size_t>(s)];
        if (static_cast<int>(grid.size()) != shape.rows())
            throw std::invalid_argument("entry grid has wrong row count");
        for (int r = 1; r <= shape.rows(); ++r) {
            const auto& row = grid[static_cast<std::size_t>(r - 1)];
            if (static_cast<int>(row.size()) != shape.part(r))
                throw std::invalid_argument("entry grid has wrong row length");
            for (int c = 1; c <= shape.part(r); ++c) {
                int v = row[static_cast<std::size_t>(c - 1)];
                if (v < 1) throw std::invalid_argument("entries must be positive");
                if (v == 1) has_one = true;
                if (c > 1 && row[static_cast<std::size_t>(c - 2)] > v)
                    throw std::invalid_argument("rows must weakly increase");
                if (r > 1 && grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] >= v)
                    throw std::invalid_argument("columns must strictly increase");
            }
        }
    }
    if (shapes_.size() > 0 && !has_one)
        throw std::invalid_argument("a nonempty semistandard tuple must contain a 1");
}

int SemistandardTableauTuple::entry(int component, Cell x) const {
    return entries_[static_cast<std::size_t>(component)][static_cast<std::size_t>(x.row - 1)]
                   [static_cast<std::size_t>(x.col - 1)];
}

int SemistandardTableauTuple::max_entry() const {
    int m = 0;
    for (const auto& grid : entries_)
        for (const auto& row : grid)
            for (int v : row) m = std::max(m, v);
    return m;
}

int idx1(const SemistandardTableauTuple& t) {
    // entries weakly increase along rows and strictly down columns, so a 1
    // can only sit in the top-left cell of a component
    for (int s = 0; s < t.length(); ++s) {
        if (t.shapes().component(s).empty()) continue;
        if (t.entry(s, {1, 1}) == 1) return t.length() - 1 - s;
    }
    throw std::domain_error("tuple contains no entry 1");
}

bool SsytTupleStream::ComponentState::fill_minimal_from(int row, int col, int max_entry) {
    for (int r = row; r < static_cast<int>(shape.size()); ++r) {
        int c = (r == row) ? col : 0;
        for (; c < shape[static_cast<std::size_t>(r)]; ++c) {
            int low = 1;
            if (c > 0) low = std::max(low, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
            if (r > 0) low = std::max(low, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
            if (low > max_entry) return false;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = low;
        }
    }
    return true;
}

bool SsytTupleStream::ComponentState::advance(int max_entry) {
    // lexicographic successor over the row-major reading
    for (int r = static_cast<int>(shape.size()) - 1; r >= 0; --r) {
        for (int c = shape[static_cast<std::size_t>(r)] - 1; c >= 0; --c) {
            if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] >= max_entry) continue;
            ++grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (c + 1 < shape[static_cast<std::size_t>(r)]) {
                if (fill_minimal_from(r, c + 1, max_entry)) return true;
            } else if (fill_minimal_from(r + 1, 0, max_entry)) {
                return true;
            }
        }
    }
    return false;
}

SsytTupleStream::SsytTupleStream(PartitionTuple shapes, int max_entry)
    : shapes_(std::move(shapes)), max_entry_(max_entry) {
    if (max_entry_ < 1) throw std::invalid_argument("max_entry must be positive");
    components_.resize(static_cast<std::size_t>(shapes_.length()));
    for (int s = 0; s < shapes_.length(); ++s) {
        auto& state = components_[static_cast<std::size_t>(s)];
        const Partition& shape = shapes_.component(s);
        state.shape = shape.parts();
        state.grid.resize(static_cast<std::size_t>(shape.rows()));
        for (int r = 1; r <= shape.rows(); ++r)
            state.grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), 0);
        if (!state.fill_minimal_from(0, 0, max_entry_)) exhausted_ = true;
    }
    if (shapes_.size() == 0) exhausted_ = true;  // no entries, so never a 1
}

bool SsytTupleStream::contains_one() const {
    for (const auto& state : components_)
        if (!state.grid.empty() && state.grid[0][0] == 1) return true;
    return false;
}

std::optional<SemistandardTableauTuple> SsytTupleStream::next() {
    while (!exhausted_) {
        bool fresh = !started_;
        started_ = true;
        if (!fresh) {
            // odometer over components, the last component moves fastest
            int s = shapes_.length() - 1;
            for (; s >= 0; --s) {
                auto& state = components_[static_cast<std::size_t>(s)];
                if (state.advance(max_entry_)) break;
                state.fill_minimal_from(0, 0, max_entry_);
            }
            if (s < 0) {
                exhausted_ = true;
                break;
            }
        }
        if (contains_one()) {
            std::vector<std::vector<std::vector<int>>> entries;
            entries.reserve(components_.size());
            for (const auto& state : components_) entries.push_back(state.grid);
            return SemistandardTableauTuple(shapes_, std::move(entries));
        }
    }
    return std::nullopt;
}

std::vector<SemistandardTableauTuple> all_ssyt_tuples(const PartitionTuple& shapes, int max_entry) {
    std::vector<SemistandardTableauTuple> out;
    SsytTupleStream stream(shapes, max_entry);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace ribbon
