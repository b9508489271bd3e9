#include "ribbon/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ribbon {

namespace {

IntPoly compute_cyclotomic(int k) {
    // x^k - 1
    std::vector<Int> xk(static_cast<std::size_t>(k) + 1, Int(0));
    xk[0] = -1;
    xk.back() = 1;
    IntPoly result{std::move(xk)};
    for (int d = 1; d < k; ++d)
        if (k % d == 0) result = result.exact_div(cyclotomic_poly(d));
    return result;
}

}  // namespace

IntPoly cyclotomic_poly(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    IntPoly result = compute_cyclotomic(k);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(k, std::move(result)).first->second;
}

int euler_phi(int k) {
    int phi = k;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        phi -= phi / p;
        while (k % p == 0) k /= p;
    }
    if (k > 1) phi -= phi / k;
    return phi;
}

CycElem::CycElem(int k, const IntPoly& value) : k_(k) {
    residue_ = value.divmod_monic(cyclotomic_poly(k)).second;
}

CycElem CycElem::from_int(int k, Int value) {
    CycElem e(k);
    e.residue_ = IntPoly::constant(std::move(value));
    return e;
}

CycElem CycElem::root_power(int k, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative root power");
    return CycElem(k, IntPoly::monomial(1, exponent));
}

std::optional<Int> CycElem::as_integer() const {
    if (residue_.degree() > 0) return std::nullopt;
    return residue_.coeff(0);
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
    CycElem out(a.k_);
    out.residue_ = a.residue_ + b.residue_;  // already reduced
    return out;
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
    CycElem out(a.k_);
    out.residue_ = a.residue_ - b.residue_;
    return out;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
    return CycElem(a.k_, a.residue_ * b.residue_);
}

CycElem CycPolyT::coeff(int t_exp) const {
    auto it = coeffs_.find(t_exp);
    return it == coeffs_.end() ? CycElem(k_) : it->second;
}

void CycPolyT::add_term(const CycElem& c, int t_exp) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(t_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CycPolyT operator+(const CycPolyT& a, const CycPolyT& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
    CycPolyT out = a;
    for (const auto& [e, c] : b.coeffs_) out.add_term(c, e);
    return out;
}

CycPolyT operator*(const CycPolyT& a, const CycPolyT& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mixed root orders");
    CycPolyT out(a.k_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ca * cb, ea + eb);
    return out;
}

CycPolyT eval_at_root(const BiPoly& f, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    CycPolyT out(k);
    if (f.is_zero()) return out;
    IntPoly modulus = cyclotomic_poly(k);
    // powers of the root, built incrementally up to the largest q-exponent
    int max_q = 0;
    for (const auto& [key, c] : f.terms()) max_q = std::max(max_q, key.first);
    std::vector<IntPoly> powers;
    powers.reserve(static_cast<std::size_t>(max_q) + 1);
    powers.push_back(IntPoly::constant(1));
    for (int e = 1; e <= max_q; ++e)
        powers.push_back((powers.back() * IntPoly::monomial(1, 1)).divmod_monic(modulus).second);
    for (const auto& [key, c] : f.terms()) {
        CycElem term(k);
        term = CycElem::from_int(k, c) * CycElem(k, powers[static_cast<std::size_t>(key.first)]);
        out.add_term(term, key.second);
    }
    return out;
}

CycElem reduce_mod_cyclotomic(const IntPoly& f, int k) { return CycElem(k, f); }

std::optional<IntPoly> as_integer_poly(const CycPolyT& p) {
    std::vector<Int> coeffs;
    for (const auto& [e, c] : p.coeffs()) {
        auto value = c.as_integer();
        if (!value) return std::nullopt;
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(static_cast<std::size_t>(e) + 1, Int(0));
        coeffs[static_cast<std::size_t>(e)] = *value;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly pochhammer(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("k and n must be positive");
    if (n % k != 0) throw std::invalid_argument("k must divide n");
    IntPoly one_minus_t{std::vector<Int>{1, -1}};
    std::vector<Int> tk(static_cast<std::size_t>(k) + 1, Int(0));
    tk[0] = 1;
    tk.back() = -1;
    IntPoly one_minus_tk{std::move(tk)};
    IntPoly out = one_minus_t;
    for (int i = 0; i < n / k; ++i) out *= one_minus_tk;
    return out;
}

}  // namespace ribbon
