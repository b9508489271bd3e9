#include "ribbon/symfunc.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ribbon/cyclotomic.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

namespace {

Int mn_recurse(const Partition& shape, int parts_left, const Partition& cycle_type,
               std::map<std::pair<std::vector<int>, int>, Int>& memo) {
    if (parts_left == 0) return 1;  // shape is empty here, sizes match
    auto key = std::make_pair(shape.parts(), parts_left);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (const auto& [strip, rest] : removable_strips(shape, cycle_type.part(parts_left))) {
        Int term = mn_recurse(rest, parts_left - 1, cycle_type, memo);
        total += strip.height() % 2 == 0 ? term : -term;
    }
    return memo.emplace(std::move(key), std::move(total)).first->second;
}

}  // namespace

Int mn_character(const Partition& shape, const Partition& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw std::invalid_argument("shape and cycle type must have equal size");
    std::map<std::pair<std::vector<int>, int>, Int> memo;
    return mn_recurse(shape, cycle_type.rows(), cycle_type, memo);
}

Int ssyt_count(const Partition& shape, int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (m < shape.rows()) return 0;  // a column would have to repeat a letter
    Int num = 1, den = 1;
    for (Cell x : shape.cells()) {
        num *= m + content(x);
        den *= hook_length(shape, x);
    }
    if (num % den != 0) throw std::logic_error("hook-content product must divide exactly");
    return num / den;
}

IntPoly schur_principal(const Partition& shape, int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (shape.empty()) return IntPoly::constant(1);
    if (m < shape.rows()) return {};
    // Multiplicity of the d-th cyclotomic polynomial in
    // prod (1-q^{m+c}) / prod (1-q^{h}); nonnegative because the ratio is
    // the polynomial s_shape(1,q,...,q^{m-1}) up to the power q^b.
    std::map<int, int> multiplicity;
    int b = 0;
    for (Cell x : shape.cells()) {
        b += (x.row - 1);
        int a = m + content(x);
        for (int d = 2; d <= a; ++d)
            if (a % d == 0) ++multiplicity[d];
        int h = hook_length(shape, x);
        for (int d = 2; d <= h; ++d)
            if (h % d == 0) --multiplicity[d];
    }
    IntPoly result = IntPoly::constant(1);
    for (const auto& [d, e] : multiplicity) {
        if (e == 0) continue;
        if (e < 0) throw std::logic_error("hook-content ratio must be a polynomial");
        IntPoly phi = cyclotomic_poly(d);
        for (int i = 0; i < e; ++i) result *= phi;
    }
    return result.shifted(b);
}

Int schur_at_root(const Partition& shape, int k, int m) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!k_core(shape, k).empty())
        throw std::domain_error("root-of-unity evaluation requires an empty core");
    int letters = m / k, rest = m % k;
    PartitionTuple quotient = k_quotient(shape, k);
    Int product = bst_sign(shape, k);
    for (int s = 0; s < k; ++s)
        product *= ssyt_count(quotient.component(s), s < k - rest ? letters : letters + 1);
    return product;
}

BiPoly principal_series(const Partition& shape, int t_order) {
    if (t_order < 0) throw std::invalid_argument("t_order must be nonnegative");
    BiPoly series;
    for (int m = 0; m <= t_order; ++m) {
        IntPoly term = schur_principal(shape, m + 1);
        for (int e = 0; e <= term.degree(); ++e) series.add_term(term.coeff(e), e, m);
    }
    return series;
}

IntPoly bst_stat_polynomial(const Partition& shape, int k) {
    if (!k_core(shape, k).empty())
        throw std::domain_error("statistic polynomial requires an empty core");
    std::vector<Int> coeffs;
    BstStream stream(shape, k);
    while (auto b = stream.next()) {
        int e = bst_stat(*b);
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(static_cast<std::size_t>(e) + 1, Int(0));
        coeffs[static_cast<std::size_t>(e)] += 1;
    }
    IntPoly poly{std::move(coeffs)};
    if (bst_sign(shape, k) < 0) poly = IntPoly{} - poly;
    return poly;
}

IntPoly ssyt_tuple_series(const Partition& shape, int k, int t_order) {
    if (t_order < 0) throw std::invalid_argument("t_order must be nonnegative");
    if (!k_core(shape, k).empty())
        throw std::domain_error("tuple series requires an empty core");
    if (shape.empty()) return IntPoly::constant(1);
    PartitionTuple quotient = k_quotient(shape, k);
    // exponents are at least k*(max-1), so this entry bound is exhaustive
    int max_entry = t_order / k + 1;
    std::vector<Int> coeffs(static_cast<std::size_t>(t_order) + 1, Int(0));
    SsytTupleStream stream(quotient, max_entry);
    while (auto t = stream.next()) {
        int e = k * (t->max_entry() - 1) + idx1(*t);
        if (e <= t_order) coeffs[static_cast<std::size_t>(e)] += 1;
    }
    IntPoly poly{std::move(coeffs)};
    if (bst_sign(shape, k) < 0) poly = IntPoly{} - poly;
    return poly;
}

}  // namespace ribbon
