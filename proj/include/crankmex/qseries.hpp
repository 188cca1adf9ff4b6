#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace crankmex {

using coeff_t = long long;

// Checked coefficient arithmetic; silent wraparound is never acceptable here.
coeff_t checked_add(coeff_t a, coeff_t b);
coeff_t checked_mul(coeff_t a, coeff_t b);

/// Truncated formal power series in q and z with exact integer coefficients.
/// Every operation is coefficientwise exact on the retained window
/// 0 <= q-exponent <= qmax, 0 <= z-exponent <= zmax.
class BivariateSeries {
public:
    BivariateSeries(int qmax, int zmax);

    static BivariateSeries one(int qmax, int zmax);
    static BivariateSeries monomial(int qmax, int zmax, coeff_t c, int q_exp, int z_exp);

    int qmax() const { return qmax_; }
    int zmax() const { return zmax_; }

    coeff_t coeff(int q_exp, int z_exp) const;
    /// Adds c*q^a*z^b; exponents beyond the window are dropped (they are
    /// invisible on the retained grid by construction).
    void add_term(coeff_t c, int q_exp, int z_exp);

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    BivariateSeries& operator*=(coeff_t c);

    /// In-place multiply by 1/(1 - q^bq z^bz). The factor must have positive
    /// grading (bq >= 1, or bz = 1 with bq >= 0), otherwise it is not
    /// invertible on the window.
    BivariateSeries& mul_geom_inverse(int b_q, int b_z);
    /// In-place multiply by (1 - q^bq z^bz).
    BivariateSeries& mul_factor(int b_q, int b_z);
    /// In-place multiply by 1/(a;q)_count with a = q^aq z^az; count
    /// std::nullopt means the infinite product (finite on the window).
    BivariateSeries& mul_inv_pochhammer(int a_q, int a_z, std::optional<int> count);
    /// In-place multiply by (a;q)_count.
    BivariateSeries& mul_pochhammer(int a_q, int a_z, std::optional<int> count);

    /// The series multiplied by z (top z-row falls off the window).
    BivariateSeries z_shift() const;
    /// Coefficients of z^b as a vector indexed by q-exponent.
    std::vector<coeff_t> z_row(int b) const;

    bool is_zero() const;
    bool operator==(const BivariateSeries&) const = default;

    nlohmann::json to_json() const;
    static BivariateSeries from_json(const nlohmann::json& j);

private:
    int qmax_, zmax_;
    std::vector<coeff_t> c_;  // row-major: c_[a * (zmax+1) + b]

    size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(zmax_ + 1) + static_cast<size_t>(b); }
    void require_same_window(const BivariateSeries& o) const;
};

BivariateSeries geom_inverse(int qmax, int zmax, int b_q, int b_z);
BivariateSeries pochhammer(int qmax, int zmax, int a_q, int a_z, std::optional<int> count);

/// Exact integer-coefficient polynomial in q with arbitrary (possibly
/// negative) exponents, normalized: no zero coefficient is stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(coeff_t c, int exp);
    static LaurentPoly one() { return monomial(1, 0); }

    const std::map<int, coeff_t>& coeffs() const { return c_; }
    coeff_t coeff(int exp) const;
    void add_term(coeff_t c, int exp);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(coeff_t c);

    bool is_zero() const { return c_.empty(); }
    /// Value at q = 1 (sum of coefficients).
    coeff_t eval_one() const;
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, coeff_t> c_;
};

/// (q^a_exp; q)_count as an exact Laurent polynomial; a_exp may be negative.
LaurentPoly laurent_pochhammer(int a_exp, int count);

/// Gaussian binomial coefficient as an exact polynomial; zero outside
/// 0 <= b <= a. value(1) is the ordinary binomial coefficient.
struct QBinomial {
    int a = 0;
    int b = 0;
    LaurentPoly value;
};

QBinomial qbinom(int a, int b);

/// Truncated series in q and the crank variable y, with y-exponents in
/// [-qmax, qmax]; the coefficient of y^c q^a vanishes for |c| > a.
class TrivariateCrankSeries {
public:
    explicit TrivariateCrankSeries(int qmax);

    int qmax() const { return qmax_; }
    coeff_t coeff(int q_exp, int y_exp) const;
    void add_term(coeff_t c, int q_exp, int y_exp);

    /// Sum of coefficients over all y at fixed q-exponent.
    coeff_t row_sum(int q_exp) const;
    /// Sum over strictly negative y-exponents at fixed q-exponent.
    coeff_t row_sum_negative(int q_exp) const;

    bool operator==(const TrivariateCrankSeries&) const = default;

    nlohmann::json to_json() const;

private:
    int qmax_;
    std::vector<coeff_t> c_;  // row-major: (qmax+1) x (2*qmax+1), y offset by qmax

    size_t idx(int a, int y) const {
        return static_cast<size_t>(a) * static_cast<size_t>(2 * qmax_ + 1) + static_cast<size_t>(y + qmax_);
    }
};

}  // namespace crankmex
