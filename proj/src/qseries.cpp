#include "crankmex/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace crankmex {

coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

BivariateSeries::BivariateSeries(int qmax, int zmax) : qmax_(qmax), zmax_(zmax) {
    if (qmax < 0 || zmax < 0) throw std::invalid_argument("truncation bounds must be nonnegative");
    c_.assign(static_cast<size_t>(qmax + 1) * static_cast<size_t>(zmax + 1), 0);
}

BivariateSeries BivariateSeries::one(int qmax, int zmax) {
    BivariateSeries s(qmax, zmax);
    s.c_[0] = 1;
    return s;
}

BivariateSeries BivariateSeries::monomial(int qmax, int zmax, coeff_t c, int q_exp, int z_exp) {
    BivariateSeries s(qmax, zmax);
    s.add_term(c, q_exp, z_exp);
    return s;
}

coeff_t BivariateSeries::coeff(int q_exp, int z_exp) const {
    if (q_exp < 0 || q_exp > qmax_ || z_exp < 0 || z_exp > zmax_) return 0;
    return c_[idx(q_exp, z_exp)];
}

void BivariateSeries::add_term(coeff_t c, int q_exp, int z_exp) {
    if (q_exp < 0 || z_exp < 0) throw std::invalid_argument("negative exponent in power series");
    if (q_exp > qmax_ || z_exp > zmax_) return;
    c_[idx(q_exp, z_exp)] = checked_add(c_[idx(q_exp, z_exp)], c);
}

void BivariateSeries::require_same_window(const BivariateSeries& o) const {
    if (qmax_ != o.qmax_ || zmax_ != o.zmax_)
        throw std::invalid_argument("mismatched truncation bounds");
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    require_same_window(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    require_same_window(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    a.require_same_window(b);
    BivariateSeries r(a.qmax_, a.zmax_);
    for (int a1 = 0; a1 <= a.qmax_; ++a1) {
        for (int b1 = 0; b1 <= a.zmax_; ++b1) {
            coeff_t v = a.c_[a.idx(a1, b1)];
            if (v == 0) continue;
            for (int a2 = 0; a2 + a1 <= a.qmax_; ++a2) {
                for (int b2 = 0; b2 + b1 <= a.zmax_; ++b2) {
                    coeff_t w = b.c_[b.idx(a2, b2)];
                    if (w == 0) continue;
                    size_t i = r.idx(a1 + a2, b1 + b2);
                    r.c_[i] = checked_add(r.c_[i], checked_mul(v, w));
                }
            }
        }
    }
    return r;
}

BivariateSeries& BivariateSeries::operator*=(coeff_t c) {
    for (auto& v : c_) v = checked_mul(v, c);
    return *this;
}

BivariateSeries& BivariateSeries::mul_geom_inverse(int b_q, int b_z) {
    if (b_q < 0 || b_z < 0 || b_z > 1) throw std::invalid_argument("bad geometric factor exponents");
    if (b_q == 0 && b_z == 0) throw std::invalid_argument("non-invertible grading: factor has constant term");
    // ascending sweep realizes c += c shifted by the factor, i.e. the full
    // geometric series within the window
    for (int a = b_q; a <= qmax_; ++a)
        for (int b = b_z; b <= zmax_; ++b)
            c_[idx(a, b)] = checked_add(c_[idx(a, b)], c_[idx(a - b_q, b - b_z)]);
    return *this;
}

BivariateSeries& BivariateSeries::mul_factor(int b_q, int b_z) {
    if (b_q < 0 || b_z < 0) throw std::invalid_argument("bad factor exponents");
    if (b_q > qmax_ || b_z > zmax_) return *this;  // factor is 1 on the window
    for (int a = qmax_; a >= b_q; --a)
        for (int b = zmax_; b >= b_z; --b)
            c_[idx(a, b)] = checked_add(c_[idx(a, b)], -c_[idx(a - b_q, b - b_z)]);
    return *this;
}

BivariateSeries& BivariateSeries::mul_inv_pochhammer(int a_q, int a_z, std::optional<int> count) {
    if (count && *count < 0) throw std::invalid_argument("undefined Pochhammer subscript");
    for (int i = 0; (!count || i < *count) && a_q + i <= qmax_; ++i)
        mul_geom_inverse(a_q + i, a_z);
    return *this;
}

BivariateSeries& BivariateSeries::mul_pochhammer(int a_q, int a_z, std::optional<int> count) {
    if (count && *count < 0) throw std::invalid_argument("undefined Pochhammer subscript");
    for (int i = 0; (!count || i < *count) && a_q + i <= qmax_; ++i)
        mul_factor(a_q + i, a_z);
    return *this;
}

BivariateSeries BivariateSeries::z_shift() const {
    BivariateSeries r(qmax_, zmax_);
    for (int a = 0; a <= qmax_; ++a)
        for (int b = 0; b < zmax_; ++b)
            r.c_[idx(a, b + 1)] = c_[idx(a, b)];
    return r;
}

std::vector<coeff_t> BivariateSeries::z_row(int b) const {
    if (b < 0 || b > zmax_) throw std::out_of_range("z row outside window");
    std::vector<coeff_t> row(static_cast<size_t>(qmax_ + 1));
    for (int a = 0; a <= qmax_; ++a) row[static_cast<size_t>(a)] = c_[idx(a, b)];
    return row;
}

bool BivariateSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](coeff_t v) { return v == 0; });
}

nlohmann::json BivariateSeries::to_json() const {
    return nlohmann::json{{"qmax", qmax_}, {"zmax", zmax_}, {"coeffs", c_}};
}

BivariateSeries BivariateSeries::from_json(const nlohmann::json& j) {
    BivariateSeries s(j.at("qmax").get<int>(), j.at("zmax").get<int>());
    auto coeffs = j.at("coeffs").get<std::vector<coeff_t>>();
    if (coeffs.size() != s.c_.size()) throw std::invalid_argument("coefficient array does not match window");
    s.c_ = std::move(coeffs);
    return s;
}

BivariateSeries geom_inverse(int qmax, int zmax, int b_q, int b_z) {
    return BivariateSeries::one(qmax, zmax).mul_geom_inverse(b_q, b_z);
}

BivariateSeries pochhammer(int qmax, int zmax, int a_q, int a_z, std::optional<int> count) {
    return BivariateSeries::one(qmax, zmax).mul_pochhammer(a_q, a_z, count);
}

LaurentPoly LaurentPoly::monomial(coeff_t c, int exp) {
    LaurentPoly p;
    p.add_term(c, exp);
    return p;
}

coeff_t LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(coeff_t c, int exp) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(exp, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) c_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(v, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(-v, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [e1, v1] : a.c_)
        for (const auto& [e2, v2] : b.c_)
            r.add_term(checked_mul(v1, v2), e1 + e2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(coeff_t c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v = checked_mul(v, c);
    return *this;
}

coeff_t LaurentPoly::eval_one() const {
    coeff_t s = 0;
    for (const auto& [e, v] : c_) s = checked_add(s, v);
    return s;
}

LaurentPoly laurent_pochhammer(int a_exp, int count) {
    if (count < 0) throw std::invalid_argument("undefined Pochhammer subscript");
    LaurentPoly r = LaurentPoly::one();
    for (int i = 0; i < count; ++i) {
        LaurentPoly factor = LaurentPoly::one();
        factor.add_term(-1, a_exp + i);
        r = r * factor;
    }
    return r;
}

QBinomial qbinom(int a, int b) {
    QBinomial result{a, b, {}};
    if (a < 0 || b < 0 || b > a) return result;  // zero outside 0 <= b <= a
    // q-Pascal: [n,k] = q^k [n-1,k] + [n-1,k-1]
    std::vector<LaurentPoly> row{LaurentPoly::one()};
    for (int n = 1; n <= a; ++n) {
        std::vector<LaurentPoly> next(static_cast<size_t>(std::min(n, b) + 1));
        for (int k = 0; k <= std::min(n, b); ++k) {
            LaurentPoly v;
            if (k <= n - 1 && k < static_cast<int>(row.size()))
                v = LaurentPoly::monomial(1, k) * row[static_cast<size_t>(k)];
            if (k >= 1) v += row[static_cast<size_t>(k - 1)];
            next[static_cast<size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    result.value = row[static_cast<size_t>(b)];
    return result;
}

TrivariateCrankSeries::TrivariateCrankSeries(int qmax) : qmax_(qmax) {
    if (qmax < 0) throw std::invalid_argument("truncation bound must be nonnegative");
    c_.assign(static_cast<size_t>(qmax + 1) * static_cast<size_t>(2 * qmax + 1), 0);
}

coeff_t TrivariateCrankSeries::coeff(int q_exp, int y_exp) const {
    if (q_exp < 0 || q_exp > qmax_ || y_exp < -qmax_ || y_exp > qmax_) return 0;
    return c_[idx(q_exp, y_exp)];
}

void TrivariateCrankSeries::add_term(coeff_t c, int q_exp, int y_exp) {
    if (q_exp < 0 || q_exp > qmax_) return;
    if (y_exp < -qmax_ || y_exp > qmax_) return;
    c_[idx(q_exp, y_exp)] = checked_add(c_[idx(q_exp, y_exp)], c);
}

coeff_t TrivariateCrankSeries::row_sum(int q_exp) const {
    coeff_t s = 0;
    for (int y = -qmax_; y <= qmax_; ++y) s = checked_add(s, coeff(q_exp, y));
    return s;
}

coeff_t TrivariateCrankSeries::row_sum_negative(int q_exp) const {
    coeff_t s = 0;
    for (int y = -qmax_; y <= -1; ++y) s = checked_add(s, coeff(q_exp, y));
    return s;
}

nlohmann::json TrivariateCrankSeries::to_json() const {
    return nlohmann::json{{"qmax", qmax_}, {"ymin", -qmax_}, {"ymax", qmax_}, {"coeffs", c_}};
}

}  // namespace crankmex
