#include "ribbon/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ribbon {

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int WeakComposition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

SemistandardTableauTuple destandardize(const WeakComposition& alpha, const StandardTableauTuple& t) {
    int total = t.size();
    if (alpha.length() != total - 1)
        throw std::invalid_argument("composition length must be size-1");
    DescentData des = descents(t);
    std::vector<std::vector<std::vector<int>>> entries = t.entries();
    int descents_below = 0, alpha_prefix = 0;
    for (int s = 1; s <= total; ++s) {
        if (s > 1) alpha_prefix += alpha.part(s - 1);
        auto [comp, cell] = t.locate(s);
        entries[static_cast<std::size_t>(comp)][static_cast<std::size_t>(cell.row - 1)]
               [static_cast<std::size_t>(cell.col - 1)] = 1 + descents_below + alpha_prefix;
        if (des.contains(s)) ++descents_below;
    }
    return SemistandardTableauTuple(t.shapes(), std::move(entries));
}

std::pair<WeakComposition, StandardTableauTuple> standardize(const SemistandardTableauTuple& t) {
    struct Slot {
        int value;
        int content;
        int component;
        Cell cell;
    };
    std::vector<Slot> slots;
    slots.reserve(static_cast<std::size_t>(t.size()));
    for (int s = 0; s < t.length(); ++s)
        for (Cell x : t.shapes().component(s).cells())
            slots.push_back({t.entry(s, x), content(x), s, x});
    // Within one value class this is the unique order without descents;
    // between classes values increase.
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return std::tie(a.value, a.content, a.component) < std::tie(b.value, b.content, b.component);
    });
    for (std::size_t i = 1; i < slots.size(); ++i) {
        const Slot &a = slots[i - 1], &b = slots[i];
        if (a.value == b.value && a.content == b.content && a.component == b.component)
            throw std::logic_error("standardization order is not unique");
        if (a.value == b.value) {
            bool descent = a.component <= b.component ? a.content > b.content
                                                      : a.content >= b.content;
            if (descent) throw std::logic_error("standardization order creates a descent");
        }
    }
    std::vector<std::vector<std::vector<int>>> entries = t.entries();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& slot = slots[i];
        entries[static_cast<std::size_t>(slot.component)][static_cast<std::size_t>(slot.cell.row - 1)]
               [static_cast<std::size_t>(slot.cell.col - 1)] = static_cast<int>(i) + 1;
    }
    StandardTableauTuple standard(t.shapes(), std::move(entries));

    // alpha from the filling law: entry at x_s equals 1 + d_s + prefix_s
    DescentData des = descents(standard);
    int total = t.size();
    std::vector<int> parts;
    parts.reserve(total > 0 ? static_cast<std::size_t>(total - 1) : 0);
    int descents_below = 0, prev_prefix = 0;
    for (int s = 1; s <= total; ++s) {
        const Slot& slot = slots[static_cast<std::size_t>(s - 1)];
        int prefix = slot.value - 1 - descents_below;
        if (s == 1) {
            if (prefix != 0) throw std::invalid_argument("tuple is not a standardization image");
        } else {
            int alpha_part = prefix - prev_prefix;
            if (alpha_part < 0) throw std::invalid_argument("tuple is not a standardization image");
            parts.push_back(alpha_part);
        }
        prev_prefix = prefix;
        if (des.contains(s)) ++descents_below;
    }
    return {WeakComposition(std::move(parts)), std::move(standard)};
}

bool tuple_series_match(const PartitionTuple& shapes, int k, int t_order) {
    if (shapes.length() != k) throw std::invalid_argument("tuple length must equal k");
    if (t_order < 0) throw std::invalid_argument("t_order must be nonnegative");
    int total = shapes.size();
    if (total == 0) return true;  // both sides are the constant 1

    std::vector<Int> lhs_coeffs;
    SytTupleStream standard(shapes);
    while (auto t = standard.next()) {
        int e = k * descents(*t).count() + idx1(*t);
        if (static_cast<int>(lhs_coeffs.size()) <= e)
            lhs_coeffs.resize(static_cast<std::size_t>(e) + 1, Int(0));
        lhs_coeffs[static_cast<std::size_t>(e)] += 1;
    }
    IntPoly lhs = series_div_one_minus_tk(IntPoly{std::move(lhs_coeffs)}, k, total - 1, t_order);

    std::vector<Int> rhs_coeffs(static_cast<std::size_t>(t_order) + 1, Int(0));
    SsytTupleStream semi(shapes, t_order / k + 1);
    while (auto t = semi.next()) {
        int e = k * (t->max_entry() - 1) + idx1(*t);
        if (e <= t_order) rhs_coeffs[static_cast<std::size_t>(e)] += 1;
    }
    return lhs == IntPoly{std::move(rhs_coeffs)};
}

}  // namespace ribbon
