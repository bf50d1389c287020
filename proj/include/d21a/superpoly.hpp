#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "d21a/scalar.hpp"

namespace d21a {

/// Monomial z1^d1 z2^d2 z3^e3 z4^e4 in canonical written order.
/// z1, z2 are even; z3, z4 are odd (squares vanish).
struct Mono {
    std::uint32_t d1 = 0, d2 = 0;
    std::uint8_t e3 = 0, e4 = 0;

    unsigned degree() const { return d1 + d2 + e3 + e4; }
    int parity() const { return (e3 + e4) & 1; }
    bool is_one() const { return d1 == 0 && d2 == 0 && e3 == 0 && e4 == 0; }

    friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Multiplies monomials; returns false when an odd square vanishes.
/// The sign from reordering odd generators lands in `sign`.
bool mono_mul(const Mono& m, const Mono& n, Mono& out, int& sign);

/// Supercommutative polynomial with Scalar coefficients; no zero terms stored.
class SuperPoly {
public:
    SuperPoly() = default;
    explicit SuperPoly(Scalar c) {
        if (!c.is_zero()) terms_[Mono{}] = std::move(c);
    }
    static SuperPoly monomial(const Mono& m, Scalar c = Scalar(1));
    /// The generator z_i, i in 1..4.
    static SuperPoly gen(int i);

    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Polynomial degree, -1 for zero.
    int degree() const;
    /// 0, 1 for homogeneous parity; -1 for mixed.
    int parity() const;
    Scalar coeff(const Mono& m) const;
    Scalar constant_term() const { return coeff(Mono{}); }

    void add_term(const Mono& m, const Scalar& c);

    SuperPoly operator-() const;
    friend SuperPoly operator+(const SuperPoly& p, const SuperPoly& q);
    friend SuperPoly operator-(const SuperPoly& p, const SuperPoly& q);
    friend SuperPoly operator*(const SuperPoly& p, const SuperPoly& q);
    SuperPoly& operator+=(const SuperPoly& q) { return *this = *this + q; }
    SuperPoly& operator-=(const SuperPoly& q) { return *this = *this - q; }
    friend bool operator==(const SuperPoly& p, const SuperPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const SuperPoly& p, const SuperPoly& q) { return !(p == q); }

    SuperPoly scaled(const Scalar& c) const;
    /// Coefficient conjugation; monomials unchanged.
    SuperPoly conj() const;
    /// Component of total degree d.
    SuperPoly homogeneous_part(unsigned d) const;

    std::string str() const;

private:
    std::map<Mono, Scalar> terms_;
};

/// Left partial derivative d/dz_i, i in 1..4. Odd derivatives strip the
/// generator from the front of the canonically ordered monomial.
SuperPoly partial(int i, const SuperPoly& p);

/// Finite sum of p(x) * exp(mu1*x1 + mu2*x2) summands keyed by exact (mu1, mu2).
class ExpPoly {
public:
    using Key = std::pair<Rat, Rat>;

    ExpPoly() = default;
    ExpPoly(Key mu, SuperPoly p) { add_summand(std::move(mu), std::move(p)); }

    const std::map<Key, SuperPoly>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }
    void add_summand(Key mu, const SuperPoly& p);

    ExpPoly operator-() const;
    friend ExpPoly operator+(const ExpPoly& f, const ExpPoly& g);
    friend ExpPoly operator-(const ExpPoly& f, const ExpPoly& g);
    friend bool operator==(const ExpPoly& f, const ExpPoly& g) { return f.summands_ == g.summands_; }
    friend bool operator!=(const ExpPoly& f, const ExpPoly& g) { return !(f == g); }

    ExpPoly scaled(const Scalar& c) const;
    /// Multiplies every polynomial part by p (exponential keys unchanged).
    ExpPoly poly_mul(const SuperPoly& p) const;

    std::string str() const;

private:
    std::map<Key, SuperPoly> summands_;
};

/// d/dx_i with the product rule against the exponential factor.
ExpPoly exp_partial(int i, const ExpPoly& f);

} // namespace d21a
