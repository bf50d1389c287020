#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "d21a/superpoly.hpp"

namespace d21a {

/// Derivative multi-index d1^q1 d2^q2 d3^r3 d4^r4 (odd orders at most 1).
/// As an operator the rightmost factor acts first.
struct DiffIndex {
    std::uint32_t q1 = 0, q2 = 0;
    std::uint8_t r3 = 0, r4 = 0;

    bool is_empty() const { return q1 == 0 && q2 == 0 && r3 == 0 && r4 == 0; }
    int parity() const { return (r3 + r4) & 1; }

    friend auto operator<=>(const DiffIndex&, const DiffIndex&) = default;
};

/// Super differential operator in normal-ordered form: every term is a
/// multiplication monomial to the left of a derivative multi-index.
/// Canonical forms make operator equality decidable.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(Scalar c) { add_term(Mono{}, DiffIndex{}, std::move(c)); }

    static DiffOp term(const Mono& m, const DiffIndex& d, Scalar c = Scalar(1));
    /// Multiplication by p.
    static DiffOp mult(const SuperPoly& p);
    /// The derivative d/dz_i.
    static DiffOp deriv(int i);

    const std::map<std::pair<Mono, DiffIndex>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// 0 or 1 for homogeneous operators, -1 for mixed.
    int parity() const;
    void split_parity(DiffOp& even, DiffOp& odd) const;

    void add_term(const Mono& m, const DiffIndex& d, const Scalar& c);

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& d, const DiffOp& e);
    friend DiffOp operator-(const DiffOp& d, const DiffOp& e);
    DiffOp& operator+=(const DiffOp& e) { return *this = *this + e; }
    DiffOp& operator-=(const DiffOp& e) { return *this = *this - e; }
    friend bool operator==(const DiffOp& d, const DiffOp& e) { return d.terms_ == e.terms_; }
    friend bool operator!=(const DiffOp& d, const DiffOp& e) { return !(d == e); }

    DiffOp scaled(const Scalar& c) const;

    SuperPoly apply(const SuperPoly& p) const;
    ExpPoly apply_exp(const ExpPoly& f) const;

    std::string str() const;

private:
    std::map<std::pair<Mono, DiffIndex>, Scalar> terms_;
};

/// Normal-ordered composition: apply(compose(D,E), p) == apply(D, apply(E, p)).
DiffOp compose(const DiffOp& d, const DiffOp& e);

/// DE - (-1)^{|D||E|} ED, extended bilinearly over parity components.
DiffOp supercommutator(const DiffOp& d, const DiffOp& e);

inline bool operator_equal(const DiffOp& d, const DiffOp& e) { return d == e; }

} // namespace d21a
