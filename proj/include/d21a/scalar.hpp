#pragma once

#include <string>
#include <vector>

#include "d21a/rational.hpp"

namespace d21a {

/// Dense polynomial in the formal parameter `a` over Q(i).
class APoly {
public:
    APoly() = default;
    APoly(GaussianRational c) {
        if (!c.is_zero()) coeff_.push_back(std::move(c));
    }
    static APoly param();             // the monomial a
    static APoly monomial(std::size_t deg, GaussianRational c);

    bool is_zero() const { return coeff_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const GaussianRational& leading() const;
    GaussianRational coeff(std::size_t k) const {
        return k < coeff_.size() ? coeff_[k] : GaussianRational();
    }

    APoly operator-() const;
    friend APoly operator+(const APoly& a, const APoly& b);
    friend APoly operator-(const APoly& a, const APoly& b);
    friend APoly operator*(const APoly& a, const APoly& b);
    friend bool operator==(const APoly& a, const APoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const APoly& a, const APoly& b) { return !(a == b); }

    APoly scaled(const GaussianRational& c) const;
    APoly conj() const;
    GaussianRational eval(const Rat& x) const;

    /// Quotient and remainder; the divisor must be nonzero.
    static void divrem(const APoly& num, const APoly& den, APoly& q, APoly& r);
    /// Monic gcd via the Euclidean remainder sequence (zero if both args zero).
    static APoly gcd(APoly x, APoly y);
    APoly monic() const;

private:
    void normalize();
    std::vector<GaussianRational> coeff_; // coeff_[k] multiplies a^k; no trailing zeros
};

/// Element of the field Q(i)(a): a rational function num/den in canonical form.
/// Canonical: den monic and nonzero, gcd(num, den) = 1, zero is 0/1.
class Scalar {
public:
    Scalar() : num_(), den_(GaussianRational(1)) {}
    Scalar(long n) : num_(GaussianRational(n)), den_(GaussianRational(1)) {}
    Scalar(Rat q) : num_(GaussianRational(std::move(q))), den_(GaussianRational(1)) {}
    Scalar(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}
    Scalar(APoly num, APoly den);

    /// The formal parameter a.
    static Scalar param() { return Scalar(APoly::param(), APoly(GaussianRational(1))); }
    /// The imaginary unit.
    static Scalar i() { return Scalar(GaussianRational::i()); }

    const APoly& num() const { return num_; }
    const APoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == APoly(GaussianRational(1)) && den_ == APoly(GaussianRational(1)); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Canonical forms are unique, so equality is representation equality.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    /// Coefficient conjugation i -> -i; the parameter a is fixed.
    Scalar conj() const;
    /// Exact substitution a := x; throws pole_error when den(x) = 0.
    GaussianRational eval_at(const Rat& x) const;
    /// True when den(x) != 0.
    bool defined_at(const Rat& x) const { return !den_.eval(x).is_zero(); }

    std::string str() const;

private:
    APoly num_, den_;
};

/// Rising factorial x(x+1)...(x+k-1); (x)_0 = 1.
Scalar pochhammer(const Scalar& x, unsigned k);
Scalar factorial_scalar(unsigned k);

/// Parses the grammar emitted by Scalar::str / GaussianRational::str.
Scalar parse_scalar(const std::string& text);

} // namespace d21a
