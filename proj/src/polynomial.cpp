#include "ribbon/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Int(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::domain_error("divisor must be monic");
    IntPoly rem = *this;
    int d = divisor.degree();
    if (rem.degree() < d) return {IntPoly{}, rem};
    std::vector<Int> quot(static_cast<std::size_t>(rem.degree() - d) + 1, Int(0));
    for (int e = rem.degree(); e >= d; --e) {
        Int lead = rem.coeff(e);
        if (lead == 0) continue;
        quot[static_cast<std::size_t>(e - d)] = lead;
        for (int j = 0; j <= d; ++j)
            rem.coeffs_[static_cast<std::size_t>(e - d + j)] -= lead * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.trim();
    return {IntPoly(std::move(quot)), rem};
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    // general long division over the integers; every step must divide
    IntPoly rem = *this;
    int d = divisor.degree();
    if (rem.degree() < d) throw std::domain_error("inexact polynomial division");
    const Int& lead_div = divisor.coeffs_.back();
    std::vector<Int> quot(static_cast<std::size_t>(rem.degree() - d) + 1, Int(0));
    for (int e = rem.degree(); e >= d; --e) {
        Int lead = rem.coeff(e);
        if (lead == 0) continue;
        if (lead % lead_div != 0) throw std::domain_error("inexact polynomial division");
        Int q = lead / lead_div;
        quot[static_cast<std::size_t>(e - d)] = q;
        for (int j = 0; j <= d; ++j)
            rem.coeffs_[static_cast<std::size_t>(e - d + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.trim();
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::truncated(int max_exponent) const {
    if (max_exponent < 0) return {};
    if (degree() <= max_exponent) return *this;
    std::vector<Int> out(coeffs_.begin(), coeffs_.begin() + max_exponent + 1);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int by) const {
    if (by < 0) throw std::invalid_argument("negative shift");
    if (is_zero() || by == 0) return *this;
    std::vector<Int> out(static_cast<std::size_t>(by), Int(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
}

namespace {

// One monomial like "2*t^3", "t", "-q^6", "7".
std::string monomial_str(const Int& c, const std::string& var, int exp, bool lead,
                         bool compact) {
    std::string out;
    Int a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (lead) {
        if (neg) out += "-";
    } else {
        out += compact ? (neg ? "-" : "+") : (neg ? " - " : " + ");
    }
    if (a != 1 || exp == 0) {
        out += a.str();
        if (exp != 0) out += "*";
    }
    if (exp > 0) {
        out += var;
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace

std::string IntPoly::to_string(const std::string& var, bool compact) const {
    if (is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int e = degree(); e >= 0; --e) {
        const Int& c = coeffs_[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        out += monomial_str(c, var, e, lead, compact);
        lead = false;
    }
    return out;
}

BiPoly BiPoly::constant(Int c) {
    BiPoly p;
    if (c != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
}

BiPoly BiPoly::monomial(Int c, int q_exp, int t_exp) {
    BiPoly p;
    if (c != 0) p.terms_[{q_exp, t_exp}] = std::move(c);
    return p;
}

Int BiPoly::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(const Int& c, int q_exp, int t_exp) {
    if (c == 0) return;
    auto key = std::make_pair(q_exp, t_exp);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::t_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

IntPoly BiPoly::q_coeff(int t_exp) const {
    std::vector<Int> coeffs;
    for (const auto& [key, c] : terms_) {
        if (key.second != t_exp) continue;
        if (static_cast<int>(coeffs.size()) <= key.first)
            coeffs.resize(static_cast<std::size_t>(key.first) + 1, Int(0));
        coeffs[static_cast<std::size_t>(key.first)] = c;
    }
    return IntPoly(std::move(coeffs));
}

std::vector<int> BiPoly::t_exponents() const {
    std::vector<int> out;
    for (const auto& [key, c] : terms_) out.push_back(key.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(c, key.first, key.second);
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly out;
    for (const auto& [ka, ca] : lhs.terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return out;
}

BiPoly BiPoly::truncated_t(int max_t_exponent) const {
    BiPoly out;
    for (const auto& [key, c] : terms_)
        if (key.second <= max_t_exponent) out.terms_[key] = c;
    return out;
}

Int BiPoly::eval(const Int& q, const Int& t) const {
    Int acc = 0;
    for (const auto& [key, c] : terms_) {
        Int term = c;
        for (int i = 0; i < key.first; ++i) term *= q;
        for (int i = 0; i < key.second; ++i) term *= t;
        acc += term;
    }
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    auto t_exps = t_exponents();
    std::string out;
    for (auto it = t_exps.rbegin(); it != t_exps.rend(); ++it) {
        int te = *it;
        IntPoly qp = q_coeff(te);
        int nonzero = 0;
        for (const Int& c : qp.coeffs())
            if (c != 0) ++nonzero;
        std::string qs = qp.to_string("q", /*compact=*/true);
        std::string group;
        if (te == 0) {
            group = nonzero > 1 ? "(" + qs + ")" : qs;
        } else {
            std::string tpart = te == 1 ? "t" : "t^" + std::to_string(te);
            if (nonzero > 1)
                group = "(" + qs + ")*" + tpart;
            else if (qs == "1")
                group = tpart;
            else if (qs == "-1")
                group = "-" + tpart;
            else
                group = qs + "*" + tpart;
        }
        if (out.empty()) {
            out = group;
        } else if (!group.empty() && group.front() == '-') {
            out += " - " + group.substr(1);
        } else {
            out += " + " + group;
        }
    }
    return out;
}

Int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    Int num = 1;
    for (int i = 1; i <= r; ++i) {
        num *= n - r + i;
        num /= i;
    }
    return num;
}

IntPoly series_div_one_minus_tk(const IntPoly& series, int k, int power, int t_order) {
    if (k < 1 || power < 0) throw std::invalid_argument("bad series parameters");
    // 1/(1-t^k)^power = sum_j C(j+power-1, power-1) t^{jk}
    std::vector<Int> out(static_cast<std::size_t>(t_order) + 1, Int(0));
    for (int e = 0; e <= std::min(series.degree(), t_order); ++e) {
        Int c = series.coeff(e);
        if (c == 0) continue;
        if (power == 0) {
            out[static_cast<std::size_t>(e)] += c;
            continue;
        }
        for (int j = 0; e + j * k <= t_order; ++j)
            out[static_cast<std::size_t>(e + j * k)] += c * binomial(j + power - 1, power - 1);
    }
    return IntPoly(std::move(out));
}

}  // namespace ribbon
