#pragma once

#include <array>
#include <map>
#include <vector>

#include "jforge/rtt.hpp"

namespace jforge {

/// The relation table extended by appended inverses.
///
/// `core` holds quadratic rules only (commutation of the appended
/// generators, f*finv -> 1) and is the system that confluence is checked
/// for. `extended` adds the contraction rules delta*dinv -> 1 and
/// D*xi -> 1; it proves identities by reduction to zero but is not
/// confluent, so negative conclusions use `core`.
struct ExtendedAlgebra {
    bool quotient = false;
    TLayout layout;
    Bindings specialization;
    RewriteSystem core;
    RewriteSystem extended;
    /// Active generators in increasing order.
    std::vector<Gen> gens;
    /// Appended generator -> the element it inverts.
    std::map<Gen, NCPoly> inverts;
    /// z -> L with u*z = z*L(u), for z in {f, delta, ...} keyed by the
    /// appended inverse.
    std::map<Gen, std::map<Gen, NCPoly>> conjugation;
    NCPoly delta;
    /// f*delta in the quotient; (f - Theta T^-1 X)*delta in the full algebra.
    NCPoly determinant;
    /// A*T = delta*I and T*B = delta*I, entries linear in a, b, c, d.
    std::array<std::array<NCPoly, 2>, 2> left_adjugate, right_adjugate;
    /// dinv * left_adjugate
    std::array<std::array<NCPoly, 2>, 2> t_inverse;

    bool has(Gen g) const;
    /// T entry (1-based); zero for Theta in the quotient.
    NCPoly entry(int i, int j) const;
};

/// Drops rules mentioning theta or phi and every theta/phi term.
RewriteSystem project_quotient(const RewriteSystem& table);
NCPoly quotient_project(const NCPoly& p);
TensorElem quotient_project(const TensorElem& t);
bool in_theta_ideal(const Word& w);

ExtendedAlgebra build_full_algebra(const RewriteSystem& table, const TLayout& layout = {},
                                   const Bindings& specialization = {});
ExtendedAlgebra build_quotient_algebra(const RewriteSystem& table, const TLayout& layout = {},
                                       const Bindings& specialization = {});

/// Delta(t_ij) = sum_k t_ik (x) t_kj, extended multiplicatively.
TensorElem coproduct(Gen g, const TLayout& layout = {});
TensorElem coproduct(const NCPoly& p, const TLayout& layout = {});
/// (Delta (x) id) Delta and (id (x) Delta) Delta.
Tensor<3> coproduct_left(const NCPoly& p, const TLayout& layout = {});
Tensor<3> coproduct_right(const NCPoly& p, const TLayout& layout = {});
/// eps(T) = I; appended inverses have counit 1.
RatFunc counit(Gen g, const TLayout& layout = {});
RatFunc counit(const NCPoly& p, const TLayout& layout = {});

/// Entries of the antipode matrix, extended anti-multiplicatively.
/// Full algebra:  [[e, -e Theta T^-1], [-T^-1 X e, T^-1 + T^-1 X e Theta T^-1]]
/// Quotient:      [[finv, 0], [-T^-1 X finv, T^-1]]
NCPoly antipode(Gen g, const ExtendedAlgebra& alg);
NCPoly antipode(const NCPoly& p, const ExtendedAlgebra& alg);

/// Delta and eps annihilate every rule; coassociativity and counit axioms
/// on the grid generators.
CheckReport check_bialgebra(const RewriteSystem& table, const TLayout& layout = {});

/// Theta span is a two-sided ideal, a coideal and stable under S.
CheckReport hopf_ideal_check(const ExtendedAlgebra& full);

/// sum_k S(t_ik) t_kj = eps(t_ij) = sum_k t_ik S(t_kj) at all nine positions.
CheckReport check_antipode_axiom(const ExtendedAlgebra& alg);

/// Group-like determinant, counit, non-central f and the xi contraction;
/// the full algebra is used for D group-like before the quotient.
CheckReport qdet_checks(const ExtendedAlgebra& quotient, const ExtendedAlgebra& full);

/// Replaces the plane cross-relations (u*v with u in {f,a,b,c,d}, v in
/// {x,y}) by plain commutation.
RewriteSystem unbraided(const RewriteSystem& quotient_table);

/// x' = Delta(x), y' = Delta(y) in the quotient; checks
/// x'y' - y'x' + m x'x' = 0 factorwise under the given system.
CheckReport coaction_covariance(const RewriteSystem& quotient_table, bool braided = true,
                                const Bindings& specialization = {});

}  // namespace jforge
