// Acceptance suite: runs the frozen end-to-end criteria and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/bijection.hpp"
#include "ribbon/cyclotomic.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"

using namespace ribbon;

namespace {

Partition pp(const char* text) { return Partition::parse(text); }

struct Criterion {
    int number;
    std::string description;
    bool (*run)(std::string& detail);
};

bool expect(bool condition, const std::string& message, std::string& detail) {
    if (!condition && detail.empty()) detail = message;
    return condition;
}

std::vector<int> stat_multiset(const Partition& p, int k) {
    std::vector<int> stats;
    for (const auto& b : all_bst(p, k)) stats.push_back(bst_stat(b));
    std::sort(stats.begin(), stats.end());
    return stats;
}

// 1: the bivariate polynomial of the running example and its evaluations
bool criterion_golden_polynomials(std::string& detail) {
    bool ok = true;
    BiPoly fake = fake_degree(pp("2,2,2"));
    ok &= expect(fake.to_string() == "q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2",
                 "fake degree of 222 is wrong: " + fake.to_string(), detail);
    const std::vector<std::pair<int, const char*>> table = {
        {1, "t^4 + 3*t^3 + t^2"},
        {2, "t^4 + t^3 + t^2"},
        {3, "t^4 + t^2"},
        {6, "t^4 - 2*t^3 + t^2"},
    };
    for (const auto& [k, expected] : table) {
        auto lifted = as_integer_poly(eval_at_root(fake, k));
        ok &= expect(lifted.has_value(), "evaluation not integral at k=" + std::to_string(k),
                     detail);
        if (lifted)
            ok &= expect(lifted->to_string("t") == expected,
                         "table row k=" + std::to_string(k) + " is " + lifted->to_string("t"),
                         detail);
    }
    return ok;
}

// 2: golden combinatorics of the running example
bool criterion_golden_combinatorics(std::string& detail) {
    bool ok = true;
    ok &= expect(count_syt(pp("2,2,2")) == 5, "SYT count of 222", detail);
    ok &= expect(count_bst(pp("2,2,2"), 2) == 3, "BST count at k=2", detail);
    ok &= expect(stat_multiset(pp("2,2,2"), 2) == std::vector<int>{2, 3, 4},
                 "stat multiset at k=2", detail);
    ok &= expect(count_bst(pp("2,2,2"), 3) == 2, "BST count at k=3", detail);
    ok &= expect(stat_multiset(pp("2,2,2"), 3) == std::vector<int>{2, 4},
                 "stat multiset at k=3", detail);
    ok &= expect(bst_sign(pp("2,2,2"), 2) == 1 && bst_sign(pp("2,2,2"), 3) == 1,
                 "signs of the 222 sets", detail);
    ok &= expect(k_quotient(pp("6,5,4,2,2,2"), 3) ==
                     PartitionTuple({pp("2,1"), pp("1,1"), pp("2")}),
                 "3-quotient of 654222", detail);
    BorderStripTableau figure(3, {pp(""), pp("2,1"), pp("3,3"), pp("3,3,3"), pp("4,4,4"),
                                  pp("4,4,4,2,1"), pp("4,4,4,2,2,2"), pp("6,5,4,2,2,2")});
    ok &= expect(descents(figure).descents == std::vector<int>{2, 4, 5},
                 "descents of the figure tableau", detail);
    ok &= expect(figure.height() == 7, "height of the figure tableau", detail);
    ok &= expect(bst_stat(figure) == 10, "stat of the figure tableau", detail);
    return ok;
}

// 3: evaluation of the fake degree equals the signed stat polynomial
bool criterion_main_identity(std::string& detail) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            BiPoly fake = fake_degree(p);
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                auto lifted = as_integer_poly(eval_at_root(fake, k));
                if (!expect(lifted.has_value(),
                            "not integral at " + p.display() + " k=" + std::to_string(k), detail))
                    return false;
                if (!expect(*lifted == bst_stat_polynomial(p, k),
                            "mismatch at " + p.display() + " k=" + std::to_string(k), detail))
                    return false;
            }
        }
    return true;
}

// 4: descents and the first index transfer through the quotient map
bool criterion_descent_transport(std::string& detail) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                BstStream stream(p, k);
                while (auto b = stream.next()) {
                    StandardTableauTuple image = littlewood_map(*b);
                    if (!expect(descents(*b).descents == descents(image).descents,
                                "descent sets differ at " + p.display() + " k=" +
                                    std::to_string(k),
                                detail))
                        return false;
                    if (!expect(b->first_strip_height() == idx1(image),
                                "index differs at " + p.display() + " k=" + std::to_string(k),
                                detail))
                        return false;
                }
            }
    return true;
}

// 5: constant height parity on every nonempty tableau set
bool criterion_height_parity(std::string& detail) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                int sign = bst_sign(p, k);
                BstStream stream(p, k);
                while (auto b = stream.next())
                    if (!expect((b->height() % 2 == 0 ? 1 : -1) == sign,
                                "mixed parity at " + p.display() + " k=" + std::to_string(k),
                                detail))
                        return false;
            }
    return true;
}

bool check_multisets(const Partition& p, int k, std::string& detail) {
    PartitionTuple quotient = k_quotient(p, k);
    std::vector<int> scaled_hooks;
    for (int h : hook_multiset(p))
        if (h % k == 0) scaled_hooks.push_back(h / k);
    std::vector<int> quotient_hooks;
    for (const auto& comp : quotient.components())
        for (int h : hook_multiset(comp)) quotient_hooks.push_back(h);
    std::sort(scaled_hooks.begin(), scaled_hooks.end());
    std::sort(quotient_hooks.begin(), quotient_hooks.end());
    if (!expect(scaled_hooks == quotient_hooks,
                "hook multisets differ at " + p.display() + " k=" + std::to_string(k), detail))
        return false;
    auto contents = content_multiset(p);
    for (int r = 0; r < k; ++r) {
        std::vector<int> scaled;
        for (int c : contents)
            if (((c + r) % k + k) % k == 0) scaled.push_back((c + r) / k);
        std::vector<int> combined;
        for (int i = 0; i < k; ++i)
            for (int c : content_multiset(quotient.component(i)))
                combined.push_back(i < k - r ? c : c + 1);
        std::sort(scaled.begin(), scaled.end());
        std::sort(combined.begin(), combined.end());
        if (!expect(scaled == combined,
                    "content multisets differ at " + p.display() + " k=" + std::to_string(k) +
                        " r=" + std::to_string(r),
                    detail))
            return false;
    }
    return true;
}

// 6: hook and content multisets through the quotient, up to size 30
bool criterion_multisets(std::string& detail) {
    std::mt19937 rng(6030);
    for (int n = 1; n <= 30; ++n) {
        auto shapes = partitions_of(n);
        if (n > 15 && shapes.size() > 500) {
            std::shuffle(shapes.begin(), shapes.end(), rng);
            shapes.resize(500);
        }
        for (const auto& p : shapes)
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                if (!check_multisets(p, k, detail)) return false;
            }
    }
    return true;
}

// 7: the series of principal specializations, and the Pochhammer product
// at roots of unity
bool criterion_series(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        BiPoly pochhammer_qt = BiPoly::constant(1);
        for (int i = 0; i <= n; ++i) {
            BiPoly factor = BiPoly::constant(1);
            factor.add_term(-1, i, 1);
            pochhammer_qt = pochhammer_qt * factor;
        }
        for (const auto& p : partitions_of(n)) {
            BiPoly product = pochhammer_qt * principal_series(p, n);
            if (!expect(product.truncated_t(n) == fake_degree(p).truncated_t(n),
                        "series mismatch at " + p.display(), detail))
                return false;
        }
    }
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            CycPolyT symbolic(k);
            symbolic.add_term(CycElem::from_int(k, 1), 0);
            for (int i = 0; i <= n; ++i) {
                CycPolyT factor(k);
                factor.add_term(CycElem::from_int(k, 1), 0);
                factor.add_term(CycElem::from_int(k, -1) * CycElem::root_power(k, i), 1);
                symbolic = symbolic * factor;
            }
            auto lifted = as_integer_poly(symbolic);
            if (!expect(lifted.has_value() && *lifted == pochhammer(k, n),
                        "pochhammer mismatch at n=" + std::to_string(n) +
                            " k=" + std::to_string(k),
                        detail))
                return false;
        }
    return true;
}

// 8: Schur evaluations at roots, all residues of m
bool criterion_schur_at_roots(std::string& detail) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 2; k <= 4; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                for (int m = 0; m <= 8; ++m) {
                    auto direct = reduce_mod_cyclotomic(schur_principal(p, m), k).as_integer();
                    if (!expect(direct.has_value(),
                                "reduction not constant at " + p.display() + " k=" +
                                    std::to_string(k) + " m=" + std::to_string(m),
                                detail))
                        return false;
                    if (!expect(*direct == schur_at_root(p, k, m),
                                "evaluation mismatch at " + p.display() + " k=" +
                                    std::to_string(k) + " m=" + std::to_string(m),
                                detail))
                        return false;
                }
            }
    return true;
}

// 9: the standardization bijection and the tuple series identity
bool criterion_bijection(std::string& detail) {
    const int weight_bound = 6;
    std::vector<PartitionTuple> tuples;
    std::vector<Partition> cur;
    for (int components = 1; components <= 4; ++components) {
        auto rec = [&](auto&& self, int index, int remaining) -> void {
            if (index == components) {
                if (PartitionTuple(cur).size() >= 1) tuples.push_back(PartitionTuple(cur));
                return;
            }
            for (int size = 0; size <= remaining; ++size)
                for (const auto& p : partitions_of(size)) {
                    cur.push_back(p);
                    self(self, index + 1, remaining - size);
                    cur.pop_back();
                }
        };
        rec(rec, 0, 4);
    }
    for (const auto& shapes : tuples) {
        int total = shapes.size();
        long long standard_side = 0;
        SytTupleStream stream(shapes);
        while (auto t = stream.next()) {
            int descent_count = descents(*t).count();
            // compositions of every admissible weight
            std::vector<int> alpha(static_cast<std::size_t>(total - 1), 0);
            int budget = weight_bound - 1 - descent_count;
            if (budget < 0) continue;
            auto rec = [&](auto&& self, int index, int left) -> bool {
                if (index == total - 1) {
                    WeakComposition composition(alpha);
                    SemistandardTableauTuple image = destandardize(composition, *t);
                    if (composition.sum() + descent_count + 1 != image.max_entry()) return false;
                    if (idx1(*t) != idx1(image)) return false;
                    auto [alpha_back, tuple_back] = standardize(image);
                    if (!(alpha_back == composition) || !(tuple_back == *t)) return false;
                    ++standard_side;
                    return true;
                }
                for (int v = 0; v <= left; ++v) {
                    alpha[static_cast<std::size_t>(index)] = v;
                    if (!self(self, index + 1, left - v)) return false;
                }
                alpha[static_cast<std::size_t>(index)] = 0;
                return true;
            };
            if (!expect(rec(rec, 0, budget),
                        "roundtrip or weight transport failed on " + shapes.display(), detail))
                return false;
        }
        long long semistandard_side = 0;
        SsytTupleStream semi(shapes, weight_bound);
        while (auto t = semi.next()) ++semistandard_side;
        if (!expect(standard_side == semistandard_side,
                    "bijection is not onto for " + shapes.display(), detail))
            return false;
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0 || !k_core(p, k).empty()) continue;
                if (!expect(tuple_series_match(k_quotient(p, k), k, 8),
                            "tuple series differ at " + p.display() + " k=" + std::to_string(k),
                            detail))
                    return false;
            }
    return true;
}

// 10: the character recursion against sign times the tableau count
bool criterion_characters(std::string& detail) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n))
            for (int k = 1; k <= n; ++k) {
                if (n % k != 0) continue;
                Partition rectangle(std::vector<int>(static_cast<std::size_t>(n / k), k));
                Int chi = mn_character(p, rectangle);
                Int expected = 0;
                if (k_core(p, k).empty())
                    expected = Int(bst_sign(p, k)) * Int(count_bst(p, k));
                if (!expect(chi == expected,
                            "character mismatch at " + p.display() + " k=" + std::to_string(k) +
                                ": expected " + expected.str() + ", got " + chi.str(),
                            detail))
                    return false;
            }
    return true;
}

const Criterion criteria[] = {
    {1, "golden polynomial values of the running example", criterion_golden_polynomials},
    {2, "golden combinatorics of the running example", criterion_golden_combinatorics},
    {3, "fake degree at roots of unity equals the signed stat polynomial (n <= 10)",
     criterion_main_identity},
    {4, "descents and first index transfer through the quotient map (n <= 10)",
     criterion_descent_transport},
    {5, "height parity is constant on every tableau set (n <= 10)", criterion_height_parity},
    {6, "hook and content multiset identities (n <= 30, sampled beyond 15)",
     criterion_multisets},
    {7, "principal specialization series and Pochhammer evaluations", criterion_series},
    {8, "Schur evaluations at roots for every residue (n <= 8)", criterion_schur_at_roots},
    {9, "standardization bijection and tuple series identity", criterion_bijection},
    {10, "character recursion against signed tableau counts (n <= 10)", criterion_characters},
};

}  // namespace

int main(int argc, char** argv) {
    int requested = 0;
    if (argc > 1) requested = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& criterion : criteria) {
        if (requested != 0 && criterion.number != requested) continue;
        std::string detail;
        bool ok = criterion.run(detail);
        if (ok) {
            std::cout << "PASS criterion " << criterion.number << ": " << criterion.description
                      << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << criterion.number << ": " << criterion.description
                      << " -- " << detail << "\n";
        }
        std::cout.flush();
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
