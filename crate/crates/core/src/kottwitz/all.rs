use super::*;
use crate::analysis::Analysis;
use crate::classical;

/// Every check for one `(W, φ)`. `budget` bounds the auxiliary groups built
/// along the way (the `B_n` containing `D_n`).
pub fn verify_all(a: &Analysis, budget: usize) -> VerificationReport {
    let mut checks = vec![
        check_centrality(a),
        check_table1(a),
        check_theorem_a(a),
        check_unequal_conjecture(a),
        check_theorem_b(a),
        check_theorem_c(a),
        check_p_spot(a),
        check_gcc(a),
        check_gcc_smooth(a),
        check_gcc_classical(a),
        check_orthogonality(a),
        check_distinguished(a),
        check_diamonds(a),
        check_involution_counts(a),
        check_typeb_smoothness(a),
        classical::check_typeb_f(a),
        classical::check_typeb_cuspidal(a),
        classical::check_typed_signs(a, budget),
        classical::check_typed_branching(a),
    ];
    match RhoData::compute(a) {
        Ok(rho) => checks.extend([
            check_kottwitz(a, &rho),
            check_marberg(a, &rho),
            check_cell_pairings(a),
            check_w0_duality(a, &rho),
            check_restriction_inequalities(a, &rho),
            check_rho_constructions(a, &rho),
            classical::check_typea_multiplicity(a, &rho),
            classical::check_typeb_multiplicity(a, &rho),
        ]),
        Err(e) => checks.push(Check::from_failures("rho.module", 1, vec![e.to_string()])),
    }
    VerificationReport::new(a.g().system().label(), a.phi.values().to_vec(), checks)
}
