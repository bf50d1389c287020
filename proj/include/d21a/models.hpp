#pragma once

#include <vector>

#include "d21a/diffop.hpp"
#include "d21a/jordan.hpp"
#include "d21a/liealg.hpp"
#include "d21a/report.hpp"
#include "d21a/sweep.hpp"

namespace d21a {

/// Which submodule I_lambda the quotient uses.
enum class Branch { LambdaAlpha, LambdaOne };

/// A character of the zero part, stored as the pair of values on H2 and H3.
/// The alpha = 0 substitution rule (lambda/alpha -> lambda, other lambda -> 0)
/// is absorbed into the pair, so operator constructors never branch.
struct Character {
    Scalar alpha; // structural parameter: the formal a or a rational constant
    Scalar c1;    // value on H2 (the lambda occurrences)
    Scalar c2;    // value on H3 (the lambda/alpha occurrences)
    Branch branch = Branch::LambdaAlpha;
    bool zero_mode = false;
    bool d_mode = false; // alpha = -1, structure algebra with the d-basis

    static Character lambda_alpha(Scalar alpha = Scalar::param());
    static Character lambda_one(Scalar alpha = Scalar::param());
    /// alpha = 0 with lambda := lambda(H3); quotients are not defined here.
    static Character zero(Scalar lambda);

    /// Throws parameter_error when quotient operations are not available.
    void require_quotient() const;
};

/// The four Bessel operators B(z_g), g in 1..4.
DiffOp bessel(const Character& chi, int gen);

/// Polynomial-model and Fock-model actions of a TKK basis element.
DiffOp schrodinger_action(const Character& chi, std::size_t tkk_index);
DiffOp fock_action(const Character& chi, std::size_t tkk_index);

/// Both model actions for every basis element, plus the matching bracket table.
struct ModelOps {
    Character chi;
    StructureTable table;
    std::vector<DiffOp> pi, rho;

    explicit ModelOps(const Character& chi);

    DiffOp pi_vec(const Vec& coords) const;
    DiffOp rho_vec(const Vec& coords) const;
    /// Basis of k = {(a, I, -a)} as coordinate vectors (9 elements).
    std::vector<Vec> k_basis() const;
    /// The five inner-derivation generators of k0 (TKK slot indices).
    static const std::vector<std::size_t>& k0_slots();
};

/// Representation property [op(X), op(Y)] = op([X,Y]) over all ordered basis
/// pairs, for pi and rho.
CheckReport check_representation(const Character& chi, ExecMode mode = ExecMode::Parallel);

/// B(g) B(h) = (-1)^{|g||h|} B(h) B(g) as canonical operators, all 16 pairs.
CheckReport check_bessel_supercommutativity(const Character& chi);

/// Normal form modulo I_lambda (branch from the character).
SuperPoly reduce_mod_I(const Character& chi, const SuperPoly& p);
bool is_normal_mono(Branch branch, const Mono& m);
/// Generators of V_lambda (degree-2 space killed by the Bessel operators).
std::vector<SuperPoly> v_lambda_generators(const Character& chi);
/// The 4-element normal-form basis of level k (single element 1 at k = 0).
std::vector<SuperPoly> normal_basis(Branch branch, unsigned k);
/// Normal-form monomials of degree <= max_degree, in a fixed order.
std::vector<Mono> normal_monos_upto(Branch branch, unsigned max_degree);

/// pi(X) maps the spanning set of I_lambda (degree <= bound) into I_lambda,
/// and the Bessel operators kill the V_lambda generators exactly.
CheckReport check_I_invariance(const Character& chi, unsigned degree_bound,
                               ExecMode mode = ExecMode::Parallel);

/// dim U_k(g).1 mod I_lambda for k = 0..max_k under the Fock action.
std::vector<std::size_t> gk_growth(const Character& chi, unsigned max_k);

/// Matrix of a degree-preserving operator on the level-k normal basis.
/// Throws structure_error when the image leaves the level.
Mat op_matrix_on_level(const Character& chi, const DiffOp& op, unsigned k);

/// Matrices of the five k0 generators on the level-k basis.
std::vector<Mat> fock_level_matrices(const Character& chi, unsigned k);
/// Closed-form k0 action on the level-k basis for the lambda = alpha branch.
std::vector<Mat> expected_k0_matrices(unsigned k, const Scalar& alpha);

/// Level decomposition F_k = H_k + C(z1+z2)^k: table match (lambda = alpha),
/// invariance of both pieces, and directness of the sum.
CheckReport check_fock_decomposition(const Character& chi, unsigned k);

/// Orbit-spanning and commutant evidence for k-irreducibility of the level,
/// at a rational alpha.
CheckReport check_fock_irreducibility(const Character& chi, unsigned k);

/// At alpha = -1 the level is indecomposable: the top line stays invariant,
/// the generic complement collapses into it, and no invariant complement exists.
CheckReport check_fock_indecomposable_minus_one(unsigned k);

/// Action of the Cayley-transformed sl(2) triple on the top line and on the
/// complement headers.
CheckReport check_sl2_triple_action(const Character& chi, unsigned max_k);

/// pi(h) = (c1 + c2) - 2E as canonical operators.
CheckReport check_euler_identity(const Character& chi);

/// The paired maps that exchange z1^{k-1} z2 with (z1 + k z2) z1^{k-1}
/// (rational alpha, alpha not a natural number).
CheckReport check_rho_exchange(const Character& chi, unsigned max_k);

} // namespace d21a
