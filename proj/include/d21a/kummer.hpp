#pragma once

#include <vector>

#include "d21a/models.hpp"
#include "d21a/superpoly.hpp"

namespace d21a {

/// Degree-k polynomial solution U(-k, b, 4x) of Kummer's equation, stored as
/// exact coefficients in x (coeff_[j] multiplies x^j).
class KummerPoly {
public:
    KummerPoly(unsigned k, Scalar b);

    unsigned k() const { return k_; }
    const Scalar& b() const { return b_; }
    const std::vector<Scalar>& coeffs() const { return coeff_; }
    Scalar coeff(std::size_t j) const { return j < coeff_.size() ? coeff_[j] : Scalar(); }

    KummerPoly derivative() const;
    friend bool operator==(const KummerPoly& a, const KummerPoly& b) { return a.coeff_ == b.coeff_; }

    /// As a polynomial in the even generator var (1 or 2).
    SuperPoly to_poly(int var) const;

private:
    KummerPoly() = default;
    unsigned k_;
    Scalar b_;
    std::vector<Scalar> coeff_;
};

/// omega_k = U(-k, -alpha, 4x): the even intertwiner polynomials.
KummerPoly omega(const Character& chi, unsigned k);
/// theta_k = U(-k, 1 - alpha, 4x): the odd-sector polynomials.
KummerPoly theta(const Character& chi, unsigned k);

/// Kummer's equation x u'' + (b - 4x) u' + 4k u = 0 for both families, exact.
CheckReport check_kummer_ode(const Character& chi, unsigned max_k);

/// The two differential recurrences and the three-term recurrence, as exact
/// polynomial identities in x with the character's alpha.
CheckReport check_recurrences(const Character& chi, unsigned max_k);

/// Truncated-series identity for powers of (-alpha + E) d/dx against
/// exp(-x) x^k, checked to the given series degree.
CheckReport check_lemsum(unsigned max_j, unsigned max_k, unsigned series_degree);

} // namespace d21a
