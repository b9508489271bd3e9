#include <doctest.h>

#include <random>

#include "ribbon/cyclotomic.hpp"
#include "ribbon/polynomial.hpp"

using namespace ribbon;

TEST_CASE("integer polynomial arithmetic") {
    IntPoly a{std::vector<Int>{1, 2, 3}};  // 3x^2 + 2x + 1
    IntPoly b{std::vector<Int>{-1, 1}};    // x - 1
    CHECK((a * b).to_string("x") == "3*x^3 - x^2 - x - 1");
    CHECK((a + b).to_string("x") == "3*x^2 + 3*x");
    CHECK((a - a).is_zero());
    CHECK(a.eval(2) == 17);
    CHECK((a * b).exact_div(b) == a);
    CHECK_THROWS_AS(a.exact_div(b), std::domain_error);
    CHECK(IntPoly{}.to_string("x") == "0");
    CHECK(IntPoly::monomial(1, 1).to_string("t") == "t");
    CHECK(IntPoly::monomial(-2, 3).to_string("t") == "-2*t^3");
}

TEST_CASE("division with remainder by a monic divisor") {
    IntPoly num{std::vector<Int>{5, 0, 0, 1}};  // x^3 + 5
    IntPoly div{std::vector<Int>{1, 1}};        // x + 1
    auto [q, r] = num.divmod_monic(div);
    CHECK(q * div + r == num);
    CHECK(r.degree() < div.degree());
}

TEST_CASE("bivariate polynomials print like the table") {
    BiPoly f;
    f.add_term(1, 12, 4);
    f.add_term(1, 10, 3);
    f.add_term(1, 9, 3);
    f.add_term(1, 8, 3);
    f.add_term(1, 6, 2);
    CHECK(f.to_string() == "q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2");
    CHECK(f.coeff(9, 3) == 1);
    CHECK(f.coeff(9, 2) == 0);
    CHECK(f.t_degree() == 4);
    CHECK(f.q_coeff(2).to_string("q") == "q^6");
    CHECK(BiPoly{}.to_string() == "0");

    BiPoly cancel;
    cancel.add_term(2, 1, 1);
    cancel.add_term(-2, 1, 1);
    CHECK(cancel.is_zero());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1).to_string("q") == "q - 1");
    CHECK(cyclotomic_poly(2).to_string("q") == "q + 1");
    CHECK(cyclotomic_poly(3).to_string("q") == "q^2 + q + 1");
    CHECK(cyclotomic_poly(6).to_string("q") == "q^2 - q + 1");
    // product over divisors recovers q^k - 1
    for (int k = 1; k <= 30; ++k) {
        IntPoly product = IntPoly::constant(1);
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) product *= cyclotomic_poly(d);
        IntPoly expected = IntPoly::monomial(1, k) - IntPoly::constant(1);
        CHECK(product == expected);
    }
    for (int k = 1; k <= 30; ++k) CHECK(cyclotomic_poly(k).degree() == euler_phi(k));
}

TEST_CASE("evaluation at roots of unity") {
    BiPoly f;  // the running example polynomial
    f.add_term(1, 12, 4);
    f.add_term(1, 10, 3);
    f.add_term(1, 9, 3);
    f.add_term(1, 8, 3);
    f.add_term(1, 6, 2);

    auto at = [&](int k) {
        auto reduced = as_integer_poly(eval_at_root(f, k));
        REQUIRE(reduced.has_value());
        return reduced->to_string("t");
    };
    CHECK(at(1) == "t^4 + 3*t^3 + t^2");
    CHECK(at(2) == "t^4 + t^3 + t^2");
    CHECK(at(3) == "t^4 + t^2");
    CHECK(at(6) == "t^4 - 2*t^3 + t^2");
}

TEST_CASE("integer lifting detects non-integral values") {
    BiPoly f = BiPoly::monomial(1, 1, 0);  // the bare root as sole coefficient
    CHECK_FALSE(as_integer_poly(eval_at_root(f, 3)).has_value());
    CHECK(as_integer_poly(eval_at_root(BiPoly{}, 3)).value() == IntPoly{});
    // order 2 always lifts
    CHECK(as_integer_poly(eval_at_root(f, 2)).value() == IntPoly::constant(-1));
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(1, 1).to_string("t") == "t^2 - 2*t + 1");
    auto expect = [](int k, int n) {
        IntPoly out{std::vector<Int>{1, -1}};
        std::vector<Int> tk(static_cast<std::size_t>(k) + 1, Int(0));
        tk[0] = 1;
        tk.back() = -1;
        for (int i = 0; i < n / k; ++i) out *= IntPoly{std::vector<Int>(tk)};
        return out;
    };
    CHECK(pochhammer(2, 6) == expect(2, 6));
    CHECK(pochhammer(4, 4).to_string("t") == "t^5 - t^4 - t + 1");
    CHECK_THROWS_AS(pochhammer(4, 6), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(20314);
    std::uniform_int_distribution<int> exp_dist(0, 9);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    auto random_poly = [&]() {
        BiPoly p;
        for (int i = 0; i < 6; ++i) p.add_term(coeff_dist(rng), exp_dist(rng), exp_dist(rng));
        return p;
    };
    for (int k = 1; k <= 6; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            BiPoly f = random_poly(), g = random_poly();
            CHECK(eval_at_root(f * g, k) == eval_at_root(f, k) * eval_at_root(g, k));
            CHECK(eval_at_root(f + g, k) == eval_at_root(f, k) + eval_at_root(g, k));
        }
}

TEST_CASE("series division by powers of 1 - t^k") {
    // (1-t^2)^2 * (series of 1/(1-t^2)^2) is 1 up to the order
    IntPoly one = IntPoly::constant(1);
    IntPoly series = series_div_one_minus_tk(one, 2, 2, 10);
    IntPoly back = (series * pochhammer(2, 4).exact_div(IntPoly{std::vector<Int>{1, -1}}))
                       .truncated(10);
    CHECK(back == one);
    // power zero is the identity
    CHECK(series_div_one_minus_tk(IntPoly::monomial(3, 2), 5, 0, 4) == IntPoly::monomial(3, 2));
}
