//! Log-resolution data of the singularities of the sextic sixfold
//! `x_1^5 z + x_2^5 z + x_3^6 + .. + x_7^6 = 0` and of the `A_1` surface point.

use std::collections::BTreeMap;

use super::{Component, Mode, ResolutionData};
use crate::algebra::{parse_polynomial, BiPoly};
use crate::error::{Error, Result};
use crate::hodge::fermat_hodge;
use crate::subset::Subset;

pub const FIXTURE_NAMES: [&str; 4] = ["a1-blowup", "infinity-chain", "big-diagram", "sextic"];

pub fn fixture(name: &str) -> Result<ResolutionData> {
    match name {
        "a1-blowup" => Ok(a1_blowup()),
        "infinity-chain" => Ok(infinity_chain()),
        "big-diagram" => Ok(big_diagram()),
        "sextic" => Ok(sextic_full_variety()),
        other => Err(Error::InvalidInput(format!(
            "unknown fixture `{other}` (known: {})",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

fn poly(text: &str) -> BiPoly {
    parse_polynomial(text).expect("fixture polynomial")
}

/// `1 + q + .. + q^n`
fn projective_space(n: u32) -> BiPoly {
    (0..=n).fold(BiPoly::zero(), |acc, e| acc + BiPoly::q_pow(e))
}

/// `H(Y)` of the Fermat threefold of degree 6.
fn fermat_threefold() -> BiPoly {
    fermat_hodge(3, 6).poly
}

struct Builder {
    components: Vec<Component>,
    closed: BTreeMap<Subset, BiPoly>,
}

impl Builder {
    fn new() -> Self {
        Self { components: Vec::new(), closed: BTreeMap::new() }
    }

    fn component(&mut self, id: &str, discrepancy: i64, h: BiPoly) {
        self.components.push(Component::new(id, discrepancy));
        self.closed.insert(Subset::from_indices([self.components.len() - 1]), h);
    }

    fn index(&self, id: &str) -> usize {
        self.components.iter().position(|c| c.id == id).expect("known component")
    }

    fn intersection(&mut self, ids: &[&str], h: BiPoly) {
        let j = Subset::from_indices(ids.iter().map(|id| self.index(id)));
        self.closed.insert(j, h);
    }
}

/// Blow-up of the `A_1` surface point: one exceptional `P^1` with discrepancy 0.
pub fn a1_blowup() -> ResolutionData {
    let mut b = Builder::new();
    b.component("E", 0, projective_space(1));
    ResolutionData::from_closed_strata(2, Mode::ExceptionalFiberOnly, b.components, &b.closed)
        .expect("valid fixture")
}

fn add_infinity_chain(b: &mut Builder, prefix: &str) {
    let ids: Vec<String> = ["D1", "E1", "F", "E2", "D2"].iter().map(|n| format!("{prefix}{n}")).collect();
    let y = fermat_threefold();
    let f = poly("(uv)^5 + 2(uv)^4 + 2(uv)^3 + 2(uv)^2 + 2uv + 1") + y.mul_q_pow(1);
    let pieces = [
        projective_space(5),
        projective_space(1) * projective_space(4),
        f,
        projective_space(1) * projective_space(4),
        projective_space(5),
    ];
    for (id, h) in ids.iter().zip(pieces) {
        b.component(id, 4, h);
    }
    for w in ids.windows(2) {
        b.intersection(&[&w[0], &w[1]], projective_space(4));
    }
}

/// Fiber over a singular point at infinity, locally `x_1^2 + x_2^2 + x_3^6 + .. + x_7^6`:
/// the chain `D_1 - E_1 - F - E_2 - D_2`, all of discrepancy 4.
pub fn infinity_chain() -> ResolutionData {
    let mut b = Builder::new();
    add_infinity_chain(&mut b, "");
    ResolutionData::from_closed_strata(6, Mode::ExceptionalFiberOnly, b.components, &b.closed)
        .expect("valid fixture")
}

fn add_big_diagram(b: &mut Builder, prefix: &str) {
    let y = fermat_threefold();
    let id = |n: &str| format!("{prefix}{n}");
    let di = |i: usize| format!("{prefix}D{i}");
    let gi = |i: usize| format!("{prefix}G{i}");

    b.component(&id("C"), 6, projective_space(1) * projective_space(4));
    for i in 1..=5 {
        b.component(&di(i), 1, projective_space(5) + y.mul_q_pow(1).scale(&crate::algebra::rat(3)));
    }
    b.component(&id("E1"), 5, poly("(uv)^2 + 2uv + 1") * &y);
    b.component(&id("E2"), 2, poly("(uv)^2 + uv + 1") * &y);
    b.component(&id("F1"), 4, poly("(uv)^2 + 7uv + 1") * &y);
    b.component(&id("F2"), 3, poly("(uv)^2 + 7uv + 1") * &y);
    for i in 1..=5 {
        b.component(&gi(i), 5, poly("(uv)^2 + 2uv + 1") * &y);
    }

    let edge = projective_space(1) * &y;
    for (a, c) in [("C", "E1"), ("E1", "F1"), ("F1", "F2"), ("F2", "E2")] {
        b.intersection(&[&id(a), &id(c)], edge.clone());
    }
    for i in 1..=5 {
        b.intersection(&[&id("C"), &di(i)], projective_space(4));
        b.intersection(&[&id("E1"), &di(i)], edge.clone());
        b.intersection(&[&id("F1"), &di(i)], edge.clone());
        b.intersection(&[&id("F1"), &gi(i)], edge.clone());
        b.intersection(&[&di(i), &gi(i)], edge.clone());
        b.intersection(&[&id("F2"), &gi(i)], edge.clone());

        b.intersection(&[&id("C"), &id("E1"), &di(i)], y.clone());
        b.intersection(&[&id("E1"), &id("F1"), &di(i)], y.clone());
        b.intersection(&[&id("F1"), &di(i), &gi(i)], y.clone());
        b.intersection(&[&id("F1"), &id("F2"), &gi(i)], y.clone());
    }
}

/// Fiber over the singular point at the origin of the chart `z != 0`, locally
/// `x_1^5 + x_2^5 + x_3^6 + .. + x_7^6`: 15 components, 34 double and 20 triple
/// intersections.
pub fn big_diagram() -> ResolutionData {
    let mut b = Builder::new();
    add_big_diagram(&mut b, "");
    ResolutionData::from_closed_strata(6, Mode::ExceptionalFiberOnly, b.components, &b.closed)
        .expect("valid fixture")
}

/// The whole sextic sixfold: the smooth locus together with the fibers over
/// its five singular points at infinity and the one at the origin.
pub fn sextic_full_variety() -> ResolutionData {
    let mut b = Builder::new();
    for p in 1..=5 {
        add_infinity_chain(&mut b, &format!("P{p}."));
    }
    add_big_diagram(&mut b, "O.");
    let fiber = ResolutionData::from_closed_strata(6, Mode::ExceptionalFiberOnly, b.components, &b.closed)
        .expect("valid fixture");
    // Smooth part at infinity (five points removed) and affine part minus the origin.
    let at_infinity = poly("(uv)^5 + (uv)^4 + (uv)^3 + (uv)^2 + uv - 4 - 5u^5v^2 - 5u^2v^5 - 255u^4v^3 - 255u^3v^4");
    let affine = poly("(uv)^6 - 1 - (uv - 1)(20u^4v + 20uv^4 + 1020u^3v^2 + 1020u^2v^3)");
    let mut open = fiber.open_strata().clone();
    open.insert(Subset::EMPTY, at_infinity + affine);
    ResolutionData::from_open_strata(6, Mode::FullVariety, fiber.components().to_vec(), open).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stratum_counts() {
        let big = big_diagram();
        let closed = big.closed_from_open();
        let count = |n: usize| closed.keys().filter(|j| j.len() == n).count();
        assert_eq!((count(1), count(2), count(3), count(4)), (15, 34, 20, 0));
        let chain = infinity_chain().closed_from_open();
        assert_eq!(chain.keys().filter(|j| j.len() == 2).count(), 4);
        assert_eq!(sextic_full_variety().components().len(), 40);
    }

    #[test]
    fn closed_strata_round_trip() {
        let chain = infinity_chain();
        let d1 = Subset::from_indices([chain.component_index("D1").unwrap()]);
        assert_eq!(chain.closed_from_open()[&d1], projective_space(5));
    }
}
