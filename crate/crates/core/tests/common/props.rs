//! Randomized invariants shared by the property suite and the acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use stringy_core::brieskorn::{
    analyze, contribution_of, family_s, fundamental_vectors, normal_form_numerator, p_polynomials,
};
use stringy_core::hodge::{diagonal_face_hodge, fermat_hodge};
use stringy_core::resolution::{Component, Mode, ResolutionData};
use stringy_core::{BiPoly, SimplicialCone, Subset};

pub type Check = Result<(), TestCaseError>;

/// Exponent tuples with `Sigma - k >= 1`.
pub fn canonical_exponents(max_dim: usize, max_exp: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2..=max_exp, 3..=max_dim)
        .prop_filter("canonical", |e| analyze(e).map(|d| d.is_canonical()).unwrap_or(false))
}

/// Any exponent tuple together with a proper subset of its indices.
pub fn exponents_with_subset(max_dim: usize, max_exp: u64) -> impl Strategy<Value = (Vec<u64>, Subset)> {
    prop::collection::vec(2..=max_exp, 1..=max_dim).prop_flat_map(|e| {
        let top = (1u64 << e.len()) - 1;
        (Just(e), (0..top).prop_map(Subset))
    })
}

pub fn p_j_positivity(e: &[u64]) -> Check {
    let data = analyze(e).unwrap();
    let ps = p_polynomials(&data).unwrap();
    let family = family_s(&data.alpha).unwrap();
    for (j, p) in &ps {
        for (_, c) in p.terms() {
            prop_assert!(!c.is_negative(), "p_{} of {:?} has a negative coefficient", j, e);
        }
        prop_assert_eq!(!p.is_zero(), family.members.contains(j), "p_{} of {:?}", j, e);
    }
    Ok(())
}

/// `(uv)^(Sigma-k+|J|) sum_l (uv)^(m - sigma)` as exponent multiset.
fn shifted_exponents(e: &[u64], j: Subset) -> BTreeMap<i64, i64> {
    let data = analyze(e).unwrap();
    let base = data.sigma as i64 - data.k as i64 + j.len() as i64;
    let mut out = BTreeMap::new();
    for fv in fundamental_vectors(&data, j).unwrap() {
        *out.entry(base + fv.m_value as i64 - fv.sigma as i64).or_insert(0) += 1;
    }
    out
}

pub fn fundamental_sum_nonnegativity(e: &[u64]) -> Check {
    let d = e.len();
    let sums: Vec<BTreeMap<i64, i64>> = (0..(1u64 << d) - 1).map(|m| shifted_exponents(e, Subset(m))).collect();
    for jm in 0..(1u64 << d) - 1 {
        for sub in Subset(jm).subsets().filter(|s| s.0 != jm) {
            let mut diff = sums[jm as usize].clone();
            for (x, n) in &sums[sub.0 as usize] {
                *diff.entry(*x).or_insert(0) -= n;
            }
            prop_assert!(diff.values().all(|&n| n >= 0), "{:?}: J = {}, J' = {}", e, Subset(jm), sub);
        }
    }
    Ok(())
}

pub fn fundamental_vector_inequality(e: &[u64]) -> Check {
    let data = analyze(e).unwrap();
    let sk = data.sigma as i64 - data.k as i64;
    for m in 0..(1u64 << e.len()) - 1 {
        let j = Subset(m);
        for fv in fundamental_vectors(&data, j).unwrap() {
            let lhs = sk + j.len() as i64 - fv.sigma as i64 + fv.m_value as i64;
            prop_assert!(lhs >= 0, "{:?} J = {} l = {}: {}", e, j, fv.l, lhs);
        }
    }
    Ok(())
}

pub fn sign_pattern_and_polynomiality(e: &[u64]) -> Check {
    let data = analyze(e).unwrap();
    let c = contribution_of(&data).unwrap();
    let p = normal_form_numerator(&c, &data).map_err(|err| TestCaseError::fail(format!("{e:?}: {err}")))?;
    for (&(i, j), coeff) in p.terms() {
        let signed = if (i + j) % 2 == 0 { coeff.clone() } else { -coeff.clone() };
        prop_assert!(!signed.is_negative(), "{:?}: c_{},{} = {}", e, i, j, coeff);
    }
    if data.sigma == data.k + 1 {
        prop_assert!(c.try_into_polynomial().is_ok(), "{:?} is strictly canonical but not polynomial", e);
    }
    Ok(())
}

fn face_cone(alpha: &[u64], j: Subset) -> SimplicialCone {
    let d = alpha.len();
    let mut gens = vec![alpha.to_vec()];
    gens.extend(j.indices().map(|i| (0..d).map(|c| u64::from(c == i)).collect()));
    SimplicialCone::new(gens).unwrap()
}

pub fn fundamental_set_matches_closed_form(e: &[u64], j: Subset) -> Check {
    let data = analyze(e).unwrap();
    let enumerated: BTreeSet<Vec<u64>> = face_cone(&data.alpha, j).fundamental_set().unwrap().into_iter().collect();
    let closed: BTreeSet<Vec<u64>> = fundamental_vectors(&data, j).unwrap().into_iter().map(|f| f.vector).collect();
    prop_assert_eq!(enumerated, closed, "{:?} J = {}", e, j);
    Ok(())
}

/// Square integer matrices with nonzero determinant and primitive columns.
pub fn full_dimensional_cone(max_dim: usize, max_entry: u64) -> impl Strategy<Value = Vec<Vec<u64>>> {
    (1..=max_dim)
        .prop_flat_map(move |d| prop::collection::vec(prop::collection::vec(0..=max_entry, d), d))
        .prop_filter_map("singular or non-primitive", |gens| {
            let prim: Option<Vec<Vec<u64>>> = gens
                .iter()
                .map(|g| {
                    let c = g.iter().fold(0u64, |a, &b| gcd(a, b));
                    (c > 0).then(|| g.iter().map(|x| x / c).collect())
                })
                .collect();
            let prim = prim?;
            (determinant(&prim) != 0).then_some(prim)
        })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Laplace expansion along the first row.
pub fn determinant(m: &[Vec<u64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<u64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] as i128 * determinant(&minor)
        })
        .sum()
}

/// Membership `delta = sum lambda_i gamma_i`, `0 < lambda_i <= 1`, by Cramer's rule.
fn in_half_open_parallelepiped(gens: &[Vec<u64>], delta: &[u64]) -> bool {
    let n = gens.len();
    // Matrix with generators as columns.
    let col = |m: &[Vec<u64>]| -> Vec<Vec<u64>> { (0..n).map(|r| m.iter().map(|g| g[r]).collect()).collect() };
    let det = determinant(&col(gens));
    (0..n).all(|i| {
        let mut swapped = gens.to_vec();
        swapped[i] = delta.to_vec();
        let num = determinant(&col(&swapped));
        // 0 < num / det <= 1
        if det > 0 {
            num > 0 && num <= det
        } else {
            num < 0 && num >= det
        }
    })
}

pub fn fundamental_set_cardinality(gens: &[Vec<u64>]) -> Check {
    let cone = SimplicialCone::new(gens.to_vec()).unwrap();
    let set = cone.fundamental_set().unwrap();
    let det = determinant(gens).abs();
    prop_assert_eq!(set.len() as i128, det, "{:?}", gens);
    let distinct: BTreeSet<&Vec<u64>> = set.iter().collect();
    prop_assert_eq!(distinct.len(), set.len());
    for delta in &set {
        prop_assert!(delta.iter().all(|&x| x > 0));
        prop_assert!(in_half_open_parallelepiped(gens, delta), "{:?} not in cone {:?}", delta, gens);
    }
    Ok(())
}

/// Random resolution data: up to `max_components` components, arbitrary strata.
pub fn stratification(mode: Mode, max_components: usize) -> impl Strategy<Value = ResolutionData> {
    (1..=max_components)
        .prop_flat_map(move |n| {
            let top = 1u64 << n;
            let lo = if mode == Mode::FullVariety { 0 } else { 1 };
            (
                prop::collection::vec(0i64..=4, n),
                prop::collection::btree_map(lo..top, small_poly(), 1..=6),
            )
        })
        .prop_map(move |(a, mut strata)| {
            if mode == Mode::FullVariety {
                strata.entry(0).or_insert_with(BiPoly::one);
            }
            let comps = a.iter().enumerate().map(|(i, &ai)| Component::new(format!("D{i}"), ai)).collect();
            let strata = strata.into_iter().map(|(m, h)| (Subset(m), h)).collect();
            ResolutionData::from_open_strata(4, mode, comps, strata).unwrap()
        })
}

pub fn small_poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..=3, 0u32..=3, -5i64..=5), 0..=5)
        .prop_map(|terms| terms.iter().fold(BiPoly::zero(), |acc, &(i, j, c)| acc + BiPoly::from_int_terms(&[(i, j, c)])))
}

pub fn open_equals_closed(r: &ResolutionData) -> Check {
    match r.mode() {
        Mode::FullVariety => {
            let open = r.stringy_from_open().unwrap();
            let closed = r.stringy_from_closed().unwrap();
            prop_assert!(open.cross_equal(&closed), "{} vs {}", open, closed);
            prop_assert_eq!(r.stringy_euler().unwrap(), r.stringy_euler_direct().unwrap());
        }
        Mode::ExceptionalFiberOnly => {
            let open = r.exceptional_contribution().unwrap();
            let closed = r.exceptional_contribution_from_closed().unwrap();
            prop_assert!(open.cross_equal(&closed), "{} vs {}", open, closed);
        }
    }
    Ok(())
}

pub fn affine_cone_identity(d: usize, l: u64) -> Check {
    let affine = diagonal_face_hodge(&vec![l; d]).unwrap().poly;
    let cone = BiPoly::q_pow_minus_one(1) * fermat_hodge(d as u32 - 2, l).poly + BiPoly::one();
    prop_assert_eq!(affine, cone, "d = {}, l = {}", d, l);
    Ok(())
}
