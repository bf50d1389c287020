#pragma once

#include "d21a/kummer.hpp"
#include "d21a/models.hpp"
#include "d21a/pairing.hpp"

namespace d21a {

/// Cayley transform and its inverse as matrices in the TKK basis coordinates
/// (complexified: entries live in Q(i)(a)).
struct CayleyTransform {
    Mat forward;
    Mat inverse;
};

/// Built from the nilpotent exp(ad) series for exp((i/2) ad f) exp(i ad e).
CayleyTransform cayley(const Character& chi);
/// The closed-form columns (g-minus, L-part, derivations, g-plus lines).
Mat cayley_closed_form(const Character& chi);

/// Series vs closed form, invertibility, k mapping into the structure algebra,
/// and the defining twist rho(X) = pi(c(X)) on every basis element.
CheckReport check_cayley(const Character& chi);

/// Element of the Schroedinger space: 2^{tag_const + tag_mu * mu} times
/// poly * exp(-2(x1+x2)) with poly in reduced normal form. Here mu = alpha for
/// the lambda = alpha branch and mu = 1/alpha for lambda = 1.
struct WElem {
    Rat tag_const{-1};
    Rat tag_mu{-1};
    SuperPoly poly;

    friend bool operator==(const WElem& a, const WElem& b) {
        return a.tag_const == b.tag_const && a.tag_mu == b.tag_mu && a.poly == b.poly;
    }
};

/// Rewrites an exponential-polynomial onto the single key (-2,-2) modulo the
/// submodule rules. Only keys with the branch's primary exponent equal to -2
/// are representable; anything else throws structure_error.
SuperPoly w_canonicalize(const Character& chi, const ExpPoly& f);

/// Applies an operator to a canonical element (key preserved) and re-reduces.
WElem w_apply(const Character& chi, const DiffOp& op, const WElem& w);

/// The image of 1: tag (-1,-1), polynomial part 1.
WElem c_inverse_vacuum(const Character& chi);

/// The vacuum line is a one-dimensional submodule for the maximal compact part:
/// pi(X) vac = chi(X) vac with chi = 0 on k0 and the odd part, i c1 and i c2 on
/// the two even mixed elements.
CheckReport check_vacuum_line(const Character& chi);

/// Closed form of the intertwiner on the level-k basis element in slot 0..3.
WElem c_inverse_on_basis(const Character& chi, unsigned k, int slot);
/// Independent construction by the multiplication ladder
/// W(z_j p) = (i/2) pi(Y_j) W(p) with rho(Y_j) = -2i z_j.
WElem c_inverse_via_ladder(const Character& chi, unsigned k, int slot);
WElem c_inverse_via_ladder(const ModelOps& ops, unsigned k, int slot);
/// Ladder equals closed form on all slots up to max_k.
CheckReport check_intertwiner_closed_forms(const Character& chi, unsigned max_k,
                                           ExecMode mode = ExecMode::Parallel);

/// Linear extension of the closed forms to any quotient element.
WElem sb_inverse(const Character& chi, const SuperPoly& p);
/// Per-degree triangular inversion; the tag must be (-1 + integer, -1).
SuperPoly sb_forward(const Character& chi, const WElem& w);

CheckReport check_sb_round_trip(const Character& chi, unsigned max_k);

/// sb_forward(pi(X) w) = rho(X) sb_forward(w) for all basis X and levels <= max_k.
CheckReport check_intertwining(const Character& chi, unsigned max_k,
                               ExecMode mode = ExecMode::Parallel);

/// Pullback of the Bessel-Fischer product along the transform.
Scalar w_form(const Character& chi, const WElem& f, const WElem& g);

/// Per-degree Gram matrices on the Schroedinger side are congruent to the
/// Fock-side ones (checked through the decomposition basis as well).
CheckReport check_w_form(const Character& chi, unsigned max_k);

/// W-side decomposition: images of the invariant pieces match the displayed
/// polynomial combinations, the sum is direct, and both stay invariant.
CheckReport check_w_decomposition(const Character& chi, unsigned k);

/// rho(c^{-1}(-e1/2, 0, 0)) = i z1 and rho(c^{-1}(0, 0, -2e1)) = i B(z1).
CheckReport check_ladder_operators(const Character& chi);

} // namespace d21a
