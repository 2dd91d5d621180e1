//! Newton polyhedron route: fundamental sets of simplicial cones, the
//! Hodge-specialized local zeta function of a nondegenerate diagonal
//! polynomial and its residue at `T = uv`.

mod cone;
mod zeta;

pub use cone::{m_value, sigma, SimplicialCone, SupportSet};
pub use zeta::{ZetaExpression, ZetaFactor, ZetaNumerator, ZetaTerm};

use crate::algebra::{BiPoly, StringyRational};
use crate::brieskorn::analyze;
use crate::error::{Error, Result};
use crate::hodge::{face_hodge_table, torus_hodge_from_table};
use crate::subset::Subset;
use zeta::integer;

/// `S_Delta = sum_{g in G} (uv)^(-sigma(g)) T^(m(g)) / prod_gamma (1 - (uv)^(-sigma(gamma)) T^(m(gamma)))`
/// for the cone `Delta` and the face function `m` of `support`.
pub fn s_delta_specialized(cone: &SimplicialCone, support: &SupportSet) -> Result<ZetaExpression> {
    if cone.dim() != support.dim() {
        return Err(Error::InvalidInput("cone and support live in different dimensions".into()));
    }
    let mut numerator = ZetaNumerator::new();
    for g in cone.fundamental_set()? {
        let s = -(sigma(&g) as i64);
        let m = m_value(&g, support) as u32;
        *numerator.entry((s, s, m)).or_insert_with(|| integer(0)) += integer(1);
    }
    let factors = cone
        .generators()
        .iter()
        .map(|gamma| ZetaFactor::new(-(sigma(gamma) as i64), m_value(gamma, support) as u32))
        .collect();
    Ok(ZetaExpression::new(vec![ZetaTerm::new(numerator, factors)]))
}

/// `L_tau = (uv - 1)^d - H(N) + (uv - 1) H(N) (uv)^-1 T / (1 - (uv)^-1 T)`
/// for the torus hypersurface `N` of a face.
pub fn l_tau_specialized(h_n: &BiPoly, d: usize) -> ZetaExpression {
    let q1 = BiPoly::q_pow_minus_one(1);
    let regular = q1.pow(d as u32) - h_n;
    let singular = ZetaTerm::new(
        (&q1 * h_n)
            .terms()
            .map(|(&(i, j), c)| ((i as i64 - 1, j as i64 - 1, 1), c.clone()))
            .collect(),
        vec![ZetaFactor::new(-1, 1)],
    );
    ZetaExpression::new(vec![ZetaTerm::from_poly(&regular, 0, Vec::new()), singular])
}

/// Cone of the face `tau_J`: spanned by `alpha` and `e_j`, `j in J`.
fn face_cone(alpha: &[u64], j: Subset) -> Result<SimplicialCone> {
    let d = alpha.len();
    let mut gens = vec![alpha.to_vec()];
    gens.extend(j.indices().map(|i| (0..d).map(|c| u64::from(c == i)).collect()));
    SimplicialCone::new(gens)
}

/// Local Hodge zeta function `sum_J L_{tau_J} S_{Delta_J}` of `x_1^a_1 + .. + x_d^a_d`
/// over the compact faces `tau_J`, `J` a proper subset of the variables.
pub fn local_hodge_zeta_diagonal(exponents: &[u64]) -> Result<ZetaExpression> {
    let data = analyze(exponents)?;
    let d = data.dim();
    let support = SupportSet::diagonal(exponents)?;
    let table = face_hodge_table(exponents)?;
    let mut z = ZetaExpression::zero();
    for j in Subset::proper_subsets_of(d) {
        let l = l_tau_specialized(&torus_hodge_from_table(d, &table, j), d);
        let s = s_delta_specialized(&face_cone(&data.alpha, j)?, &support)?;
        z = z.add(&l.mul(&s));
    }
    Ok(z)
}

/// Contribution of the singularity from the Newton polyhedron directly:
/// `sum_J H(N_{tau_J}) * S_{Delta_J}` with `T` and the Lefschetz class both set to `uv`.
pub fn newton_polyhedron_contribution(exponents: &[u64]) -> Result<StringyRational> {
    let data = analyze(exponents)?;
    if !data.is_canonical() {
        return Err(Error::NotCanonical(data.sigma_minus_k()));
    }
    let d = data.dim();
    let support = SupportSet::diagonal(exponents)?;
    let table = face_hodge_table(exponents)?;
    let mut acc = StringyRational::zero();
    for j in Subset::proper_subsets_of(d) {
        let s = s_delta_specialized(&face_cone(&data.alpha, j)?, &support)?.substitute_t_power(1)?;
        acc = acc + s.mul_poly(&torus_hodge_from_table(d, &table, j));
    }
    Ok(acc)
}

/// Residue route for the contribution of `x_1^a_1 + .. + x_d^a_d`.
pub fn residue_contribution(exponents: &[u64]) -> Result<StringyRational> {
    let data = analyze(exponents)?;
    if !data.is_canonical() {
        return Err(Error::NotCanonical(data.sigma_minus_k()));
    }
    local_hodge_zeta_diagonal(exponents)?.residue_at_q()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brieskorn::contribution;

    #[test]
    fn a1_residue_matches_closed_form() {
        let closed = contribution(&[2, 2, 2]).unwrap();
        let residue = residue_contribution(&[2, 2, 2]).unwrap();
        assert!(closed.cross_equal(&residue), "{closed} vs {residue}");
        let newton = newton_polyhedron_contribution(&[2, 2, 2]).unwrap();
        assert!(closed.cross_equal(&newton), "{closed} vs {newton}");
    }

    #[test]
    fn three_routes_agree_on_small_tuples() {
        for e in [vec![2, 2, 3], vec![2, 3, 5], vec![2, 3, 4], vec![2, 2, 2, 2], vec![3, 3, 3, 3], vec![2, 3, 3, 4]] {
            let closed = contribution(&e).unwrap();
            assert!(closed.cross_equal(&residue_contribution(&e).unwrap()), "{e:?}");
            assert!(closed.cross_equal(&newton_polyhedron_contribution(&e).unwrap()), "{e:?}");
        }
    }

    #[test]
    fn collecting_terms_keeps_values() {
        let z = local_hodge_zeta_diagonal(&[2, 2, 2]).unwrap();
        let c = z.collected();
        assert!(c.terms.len() < z.terms.len());
        assert!(c.residue_at_q().unwrap().cross_equal(&z.residue_at_q().unwrap()));
        assert!(c.substitute_t_power(3).unwrap().cross_equal(&z.substitute_t_power(3).unwrap()));
    }

    #[test]
    fn l_tau_at_t_power() {
        // At T = (uv)^s the geometric part is (q - 1) H q^(s-1) / (1 - q^(s-1)).
        let h = BiPoly::from_int_terms(&[(1, 1, 1), (0, 0, -3)]);
        let got = l_tau_specialized(&h, 2).substitute_t_power(3).unwrap();
        let q1 = BiPoly::q_pow_minus_one(1);
        let want = StringyRational::from_poly(q1.pow(2) - &h)
            + StringyRational::new(-(&q1 * &h).mul_q_pow(2), vec![2], 0);
        assert!(got.cross_equal(&want));
    }
}
