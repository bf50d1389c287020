#pragma once

#include <map>
#include <utility>

#include "d21a/models.hpp"

namespace d21a {

/// The Bessel-Fischer product p(B) conj(q) evaluated at zero. Linear in p,
/// conjugate-linear in q; Bessel factors compose in the written monomial order.
Scalar bessel_fischer(const Character& chi, const SuperPoly& p, const SuperPoly& q);

struct GramMatrix {
    unsigned degree = 0;
    Mat entries;        // pairing of the level basis, superhermitian
    Scalar determinant;
    bool degenerate = false; // determinant vanishes (as a scalar, or at the given alpha)
};

/// Pairwise products on the level-k normal-form basis.
GramMatrix gram(const Character& chi, unsigned k, ExecMode mode = ExecMode::Parallel);

/// Closed forms of the level Gram matrix (diagonal/odd-block values).
Mat expected_gram(const Character& chi, unsigned k);

/// Brute-force Gram matrices match the closed forms for all k <= max_k.
CheckReport check_gram_closed_forms(const Character& chi, unsigned max_k, ExecMode mode = ExecMode::Parallel);

/// <p,q> = (-1)^{|p||q|} conj(<q,p>) on basis pairs to degree bound.
CheckReport check_superhermitian(const Character& chi, unsigned degree_bound,
                                 ExecMode mode = ExecMode::Parallel);

/// Gram determinants do not vanish at alpha0 up to degree bound (alpha0 must
/// avoid the degenerate set); also reports which levels degenerate.
CheckReport check_nondegenerate(const Character& chi, unsigned degree_bound, const Rat& alpha0);

/// <z_i p, q> = (-1)^{|i||p|} <p, B(z_i) q> on seeded random pairs.
CheckReport check_adjunction(const Character& chi, unsigned trials, unsigned seed);

/// The pairing vanishes against the submodule from both sides.
CheckReport check_pairing_descends(const Character& chi, unsigned degree_bound,
                                   ExecMode mode = ExecMode::Parallel);

/// Distinct degrees pair to zero.
CheckReport check_degree_orthogonality(const Character& chi, unsigned degree_bound);

/// <rho(X) p, q> = -(-1)^{|X||p|} <p, rho(X) q> over all basis X and level
/// basis pairs to the degree bound.
CheckReport check_skew_supersymmetry(const Character& chi, unsigned degree_bound,
                                     ExecMode mode = ExecMode::Parallel);

/// Euler-type pairing identities on level basis pairs (lambda = alpha).
CheckReport check_lem_eulerish(const Character& chi, unsigned max_k);

/// Polynomial in two quartets of variables; the w-odd generators anticommute
/// with the z-odd ones (tensor product of superalgebras).
class BiPoly {
public:
    using Key = std::pair<Mono, Mono>; // (z part, w part), z written first

    BiPoly() = default;
    explicit BiPoly(Scalar c) {
        if (!c.is_zero()) terms_[{Mono{}, Mono{}}] = std::move(c);
    }
    static BiPoly term(const Mono& zm, const Mono& wm, Scalar c);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Mono& zm, const Mono& wm, const Scalar& c);

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
    friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
    friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.terms_ == g.terms_; }

    BiPoly scaled(const Scalar& c) const;
    BiPoly conj() const;
    BiPoly pow(unsigned k) const;

    /// Applies a differential operator in the z variables (w parts ride along).
    BiPoly apply_z(const DiffOp& op) const;
    /// Restriction to z = 0 as a polynomial in w.
    SuperPoly at_z_zero() const;

private:
    std::map<Key, Scalar> terms_;
};

/// The invariant pairing (z|w) = z1 w1 + alpha z2 w2 - z3 w4 / 2 + z4 w3 / 2.
BiPoly zw_pairing(const Scalar& alpha);

/// Degree-k component of the reproducing kernel. Throws parameter_error when
/// the Pochhammer normalization vanishes at the character's alpha.
BiPoly kernel_component(const Character& chi, unsigned k);

/// <p(z), K(z,w)>_z as a polynomial in w.
SuperPoly pair_against_kernel(const Character& chi, const SuperPoly& p, const BiPoly& kernel);

/// Reproducing property on all level bases to max_k, plus the Pochhammer form
/// of the renormalized series coefficients.
CheckReport check_reproducing(const Character& chi, unsigned max_k, ExecMode mode = ExecMode::Parallel);

} // namespace d21a
