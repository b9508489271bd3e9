#include "ribbon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "ribbon/bijection.hpp"
#include "ribbon/cyclotomic.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

namespace {

std::string poly_pair(const IntPoly& expected, const IntPoly& got) {
    return "expected " + expected.to_string("t") + ", got " + got.to_string("t");
}

// (t;q)_{n+1} = (1-t)(1-tq)...(1-tq^n) as an exact bivariate polynomial.
BiPoly pochhammer_bipoly(int n) {
    BiPoly out = BiPoly::constant(1);
    for (int i = 0; i <= n; ++i) {
        BiPoly factor = BiPoly::constant(1);
        factor.add_term(-1, i, 1);
        out = out * factor;
    }
    return out;
}

// Symbolic (t;xi)_{n+1} computed in Z[q]/(Phi_k), for the Pochhammer check.
CycPolyT pochhammer_at_root(int k, int n) {
    CycPolyT out(k);
    out.add_term(CycElem::from_int(k, 1), 0);
    for (int i = 0; i <= n; ++i) {
        CycPolyT factor(k);
        factor.add_term(CycElem::from_int(k, 1), 0);
        factor.add_term(CycElem::from_int(k, -1) * CycElem::root_power(k, i), 1);
        out = out * factor;
    }
    return out;
}

struct PairChecker {
    const Partition& shape;
    int n;
    int k;
    int t_order;
    const BiPoly& fake;  // fake degree of the shape, computed once
    std::vector<VerifyFailure>& failures;

    void fail(const std::string& check, const std::string& detail) {
        failures.push_back({n, shape, k, check, detail});
    }

    void run() {
        if (!k_core(shape, k).empty()) {
            if (count_bst(shape, k) != 0)
                fail("bst-empty-iff-core", "tableaux exist despite a nonempty core");
            Int chi = mn_character(shape, rectangle());
            if (chi != 0)
                fail("mn-nonempty-core", "expected 0, got " + chi.str());
            return;
        }

        auto tableaux = all_bst(shape, k);
        if (tableaux.empty()) {
            fail("bst-empty-iff-core", "no tableaux despite an empty core");
            return;
        }
        int epsilon = bst_sign(shape, k);

        // height parity is constant on the whole set
        for (const auto& b : tableaux) {
            int sign = b.height() % 2 == 0 ? 1 : -1;
            if (sign != epsilon) {
                fail("height-parity", "mixed parities of tableau heights");
                break;
            }
        }

        // descent and index transport through the quotient map, roundtrip,
        // and the two generating functions for the strip statistic
        PartitionTuple quotient = k_quotient(shape, k);
        IntPoly stat_gf, tuple_gf;
        std::vector<std::vector<std::vector<std::vector<int>>>> images;
        images.reserve(tableaux.size());
        for (const auto& b : tableaux) {
            StandardTableauTuple image = littlewood_map(b);
            DescentData db = descents(b);
            DescentData di = descents(image);
            if (db.descents != di.descents) {
                fail("descent-transport", "descent sets differ");
                break;
            }
            if (b.first_strip_height() != idx1(image)) {
                fail("index-transport", "first strip height differs from idx1");
                break;
            }
            if (!(littlewood_inverse(image, k) == b)) {
                fail("quotient-map-roundtrip", "inverse does not recover the tableau");
                break;
            }
            stat_gf += IntPoly::monomial(1, bst_stat(b));
            tuple_gf += IntPoly::monomial(1, k * di.count() + idx1(image));
            images.push_back(image.entries());
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            fail("quotient-map-bijectivity", "quotient map is not injective");
        if (count_syt_tuples(quotient) != static_cast<long long>(tableaux.size()))
            fail("quotient-map-bijectivity", "quotient map is not onto the tuple set");
        if (stat_gf != tuple_gf)
            fail("stat-generating-function", poly_pair(stat_gf, tuple_gf));

        // multiset identities between the shape and its quotient
        check_hook_multisets(quotient);
        check_content_multisets(quotient);

        // evaluation of the fake degree at a k-th root of unity
        auto reduced = as_integer_poly(eval_at_root(fake, k));
        if (!reduced) {
            fail("fake-degree-evaluation", "evaluation is not an integer polynomial");
        } else {
            IntPoly rhs = bst_stat_polynomial(shape, k);
            if (*reduced != rhs) fail("fake-degree-evaluation", poly_pair(rhs, *reduced));
            Int at_one = reduced->eval(1);
            Int expected = Int(epsilon) * Int(tableaux.size());
            if (at_one != expected)
                fail("fake-degree-at-one",
                     "expected " + expected.str() + ", got " + at_one.str());
            // the evaluated polynomial over (1-t^k)^{n/k-1} counts
            // semistandard tuples
            IntPoly lhs = series_div_one_minus_tk(*reduced, k, n / k - 1, t_order);
            IntPoly series = ssyt_tuple_series(shape, k, t_order);
            if (lhs != series) fail("ssyt-series-identity", poly_pair(series, lhs));
        }

        // Schur evaluations through the quotient against direct reduction
        for (int m = 0; m <= 2 * k + 1; ++m) {
            auto direct = reduce_mod_cyclotomic(schur_principal(shape, m), k).as_integer();
            if (!direct) {
                fail("schur-root-reduction", "reduction is not constant at m=" + std::to_string(m));
                continue;
            }
            Int via_quotient = schur_at_root(shape, k, m);
            if (*direct != via_quotient)
                fail("schur-root-reduction", "mismatch at m=" + std::to_string(m) + ": expected " +
                                                 via_quotient.str() + ", got " + direct->str());
        }

        if (!tuple_series_match(quotient, k, t_order))
            fail("tuple-series-identity", "series over standard and semistandard tuples differ");

        Int chi = mn_character(shape, rectangle());
        Int expected_chi = Int(epsilon) * Int(tableaux.size());
        if (chi != expected_chi)
            fail("mn-empty-core", "expected " + expected_chi.str() + ", got " + chi.str());
    }

    Partition rectangle() const {
        return Partition(std::vector<int>(static_cast<std::size_t>(n / k), k));
    }

    void check_hook_multisets(const PartitionTuple& quotient) {
        std::vector<int> scaled;
        for (int h : hook_multiset(shape))
            if (h % k == 0) scaled.push_back(h / k);
        std::vector<int> combined;
        for (const auto& comp : quotient.components())
            for (int h : hook_multiset(comp)) combined.push_back(h);
        std::sort(scaled.begin(), scaled.end());
        std::sort(combined.begin(), combined.end());
        if (scaled != combined) fail("hook-multiset-quotient", "multisets differ");
    }

    void check_content_multisets(const PartitionTuple& quotient) {
        auto contents = content_multiset(shape);
        // every residue class holds exactly n/k cells
        std::vector<int> residue_count(static_cast<std::size_t>(k), 0);
        for (int c : contents) ++residue_count[static_cast<std::size_t>(((c % k) + k) % k)];
        for (int count : residue_count)
            if (count != n / k) {
                fail("content-residue-count", "residue classes are not balanced");
                break;
            }
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
            if (scaled != combined) {
                fail("content-multiset-quotient", "multisets differ at r=" + std::to_string(r));
                break;
            }
        }
    }
};

struct ShapeReport {
    long long pairs = 0;
    std::vector<VerifyFailure> failures;
};

ShapeReport check_shape(const Partition& shape, const VerifyOptions& options) {
    ShapeReport report;
    int n = shape.size();
    int stanley_order = options.t_order.value_or(n);
    // tuple enumeration grows quickly in the truncation order, so the
    // enumeration-backed series checks default to a bounded order
    int t_order = options.t_order.value_or(std::min(n, 8));
    BiPoly fake = fake_degree(shape);

    // the principal specialization series against the fake degree
    BiPoly product = pochhammer_bipoly(n) * principal_series(shape, stanley_order);
    if (product.truncated_t(stanley_order) != fake.truncated_t(stanley_order))
        report.failures.push_back(
            {n, shape, 0, "stanley-series", "series product does not match the fake degree"});

    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        if (options.k_filter && *options.k_filter != k) continue;
        ++report.pairs;
        PairChecker checker{shape, n, k, t_order, fake, report.failures};
        try {
            checker.run();
        } catch (const std::exception& e) {
            report.failures.push_back({n, shape, k, "exception", e.what()});
        }
    }
    return report;
}

}  // namespace

VerifyResult verify_range(const VerifyOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max_n must be positive");
    VerifyResult result;

    // symbolic Pochhammer evaluation, once per (n, k)
    for (int n = 1; n <= options.max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            if (options.k_filter && *options.k_filter != k) continue;
            auto lifted = as_integer_poly(pochhammer_at_root(k, n));
            if (!lifted || *lifted != pochhammer(k, n))
                result.failures.push_back({n, Partition{}, k, "pochhammer-evaluation",
                                           "symbolic product disagrees at n=" + std::to_string(n)});
        }

    std::vector<Partition> shapes;
    for (int n = 1; n <= options.max_n; ++n)
        for (auto& p : partitions_of(n)) shapes.push_back(std::move(p));
    result.shapes_checked = static_cast<long long>(shapes.size());

    std::vector<ShapeReport> reports(shapes.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < shapes.size(); ++i) reports[i] = check_shape(shapes[i], options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= shapes.size()) return;
                    reports[i] = check_shape(shapes[i], options);
                }
            });
        for (auto& worker : workers) worker.join();
    }
    for (auto& report : reports) {
        result.pairs_checked += report.pairs;
        for (auto& f : report.failures) result.failures.push_back(std::move(f));
    }
    return result;
}

}  // namespace ribbon
