// Acceptance suite: one criterion per block, one pass/fail line each, exit
// code 0 only when every criterion holds. Tolerances are exact throughout:
// every comparison is an identity of canonical scalars, polynomials or
// operators over Q(i)(a).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "d21a/kummer.hpp"
#include "d21a/models.hpp"
#include "d21a/pairing.hpp"
#include "d21a/sb.hpp"

using namespace d21a;

namespace {

int failures_total = 0;
std::chrono::steady_clock::time_point last_mark = std::chrono::steady_clock::now();

void report(int number, const std::string& what, const CheckReport& r) {
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - last_mark).count();
    last_mark = now;
    std::printf("[%s] criterion %2d (%6.1fs): %s\n", r.pass ? "PASS" : "FAIL", number, secs, what.c_str());
    if (!r.pass) {
        ++failures_total;
        std::size_t shown = 0;
        for (const auto& f : r.failures) {
            std::printf("         %s\n", f.c_str());
            if (++shown == 5) {
                std::printf("         ... (%zu failures total)\n", r.failures.size());
                break;
            }
        }
    }
    std::fflush(stdout);
}

CheckReport merge(std::initializer_list<CheckReport> reports) {
    CheckReport out("merged");
    for (const auto& r : reports) out.absorb(r);
    return out;
}

} // namespace

int main() {
    const ExecMode mode = ExecMode::Parallel;
    const Character chi_a = Character::lambda_alpha();
    const Character chi_1 = Character::lambda_one();

    // 1. graded Jacobi identity, with the nonzero-sum negative control
    {
        CheckReport pos = check_super_jacobi(build_d21a(), mode);
        pos.absorb(check_grading_compatibility(build_d21a()));
        CheckReport neg = check_super_jacobi(build_gamma(Scalar(1), Scalar(1), Scalar(1)), mode);
        CheckReport crit("criterion-1");
        crit.absorb(pos);
        if (neg.pass) crit.fail("sigma = (1,1,1) unexpectedly satisfies the identity");
        report(1, "super-Jacobi over all 17^3 triples, symbolic alpha; (1,1,1) fails", crit);
    }

    // 2. dictionary between the two presentations
    {
        CheckReport crit = merge({check_tkk_isomorphism(false, mode), check_tkk_isomorphism(true, mode)});
        report(2, "TKK dictionary bracket-preserving on 17^2 pairs, generic and alpha = -1", crit);
    }

    // 3. representation property for both models
    {
        CheckReport crit = merge({check_representation(chi_a, mode), check_representation(chi_1, mode),
                                  check_representation(Character::zero(Scalar::param()), mode)});
        report(3, "bracket-to-commutator for pi and rho, lambda in {alpha, 1} and the zero mode", crit);
    }

    // 4. Bessel operators supercommute
    {
        CheckReport crit = merge({check_bessel_supercommutativity(chi_a), check_bessel_supercommutativity(chi_1)});
        report(4, "Bessel supercommutativity, all 16 generator pairs, symbolic", crit);
    }

    // 5. Gram closed forms, zero pattern, degeneracy witnesses
    {
        CheckReport crit("criterion-5");
        crit.absorb(check_gram_closed_forms(chi_a, 10, mode));
        crit.absorb(check_gram_closed_forms(chi_1, 10, mode));
        // closed forms include the zero pattern; check the witnesses
        GramMatrix g23 = gram(Character::lambda_alpha(Scalar(2)), 3, ExecMode::Serial);
        if (!g23.degenerate) crit.fail("gram at alpha = 2, degree 3 should be singular");
        crit.absorb(check_nondegenerate(chi_a, 8, rat(1, 2)));
        report(5, "Gram values k <= 10 symbolic, both branches; degeneracy witnesses", crit);
    }

    // 6. reproducing kernel
    {
        CheckReport crit = merge({check_reproducing(chi_a, 8, mode), check_reproducing(chi_1, 8, mode)});
        report(6, "reproducing kernel on every normal-form basis element, k <= 8, symbolic", crit);
    }

    // 7. skew supersymmetry of the Fock action
    {
        CheckReport crit = merge({check_skew_supersymmetry(chi_a, 6, mode),
                                  check_skew_supersymmetry(chi_1, 6, mode)});
        report(7, "skew supersymmetry for all 17 basis elements to degree 6, symbolic", crit);
    }

    // 8. Fock level decomposition
    {
        CheckReport crit("criterion-8");
        for (unsigned k = 1; k <= 8; ++k) crit.absorb(check_fock_decomposition(chi_a, k));
        for (const Rat& a0 : {rat(1, 2), rat(-3), rat(5, 2)}) {
            Character sample = Character::lambda_alpha(Scalar(a0));
            for (unsigned k = 1; k <= 8; ++k) crit.absorb(check_fock_irreducibility(sample, k));
            crit.absorb(check_rho_exchange(sample, 8));
        }
        for (unsigned k = 1; k <= 8; ++k) crit.absorb(check_fock_indecomposable_minus_one(k));
        crit.absorb(check_sl2_triple_action(chi_a, 8));
        report(8, "level decomposition: matrices, invariance, sampled irreducibility, alpha = -1", crit);
    }

    // 9. Gelfand-Kirillov growth
    {
        CheckReport crit("criterion-9");
        for (const Rat& a0 : {rat(1, 2), rat(-3)}) {
            std::vector<std::size_t> dims = gk_growth(Character::lambda_alpha(Scalar(a0)), 10);
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (dims[k] != 1 + 4 * k)
                    crit.fail("alpha = " + rat_to_string(a0) + ": dimension " + std::to_string(dims[k]) +
                              " at step " + std::to_string(k));
        }
        report(9, "filtration growth 1 + 4k for k <= 10 at alpha = 1/2 and alpha = -3", crit);
    }

    // 10. intertwiner closed forms
    {
        CheckReport crit = merge({check_intertwiner_closed_forms(chi_a, 8, mode),
                                  check_intertwiner_closed_forms(chi_1, 8, mode),
                                  check_kummer_ode(chi_a, 8), check_kummer_ode(chi_1, 8),
                                  check_vacuum_line(chi_a), check_vacuum_line(chi_1)});
        report(10, "intertwiner closed forms on all level bases k <= 8, with the defining equation", crit);
    }

    // 11. intertwining property of the transform
    {
        CheckReport crit = merge({check_intertwining(chi_a, 6, mode), check_intertwining(chi_1, 6, mode),
                                  check_cayley(chi_a), check_cayley(chi_1)});
        report(11, "transform intertwines the two models on all basis elements, degrees <= 6", crit);
    }

    // 12. form preservation
    {
        CheckReport crit = merge({check_w_form(chi_a, 6), check_w_form(chi_1, 6),
                                  check_sb_round_trip(chi_a, 6), check_sb_round_trip(chi_1, 6)});
        report(12, "pullback form congruent to the Fock form per degree <= 6", crit);
    }

    // 13. recurrence relations
    {
        CheckReport crit = merge({check_recurrences(chi_a, 10), check_recurrences(chi_1, 10)});
        report(13, "hypergeometric recurrences k <= 10 symbolic; omega_2 by two routes", crit);
    }

    // 14. truncated series identity
    {
        CheckReport crit = check_lemsum(4, 4, 12);
        report(14, "euler-derivative series identity, j <= 4, k <= 4, truncation degree 12", crit);
    }

    if (failures_total == 0) {
        std::printf("all 14 acceptance criteria hold\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures_total);
    return 1;
}
