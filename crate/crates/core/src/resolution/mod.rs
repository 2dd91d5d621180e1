//! Stringy E-functions from the strata of a log resolution.
//!
//! For a log resolution with exceptional components `D_i` of discrepancy `a_i`,
//! `E_st = sum_J H(D_J°) prod_{i in J} (uv - 1) / ((uv)^(a_i+1) - 1)`, where
//! `D_J°` is the part of `D_J = cap_{i in J} D_i` outside all other components.

mod fixtures;
mod json;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{BiPoly, StringyRational};
use crate::error::{Error, Result};
use crate::subset::Subset;

pub use fixtures::{a1_blowup, big_diagram, fixture, infinity_chain, sextic_full_variety, FIXTURE_NAMES};
pub use json::{from_json, to_json, StrataKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: String,
    pub discrepancy: BigRational,
}

impl Component {
    pub fn new(id: impl Into<String>, discrepancy: i64) -> Self {
        Self { id: id.into(), discrepancy: BigRational::from_integer(discrepancy.into()) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Strata of the whole resolution, including the complement `D_∅°` of the exceptional locus.
    FullVariety,
    /// Strata of the fiber over one singular point; the empty subset is excluded.
    ExceptionalFiberOnly,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::FullVariety => "fullVariety",
            Mode::ExceptionalFiberOnly => "exceptionalFiberOnly",
        }
    }
}

/// Outcome of the checks `E(u, v) = (uv)^d E(1/u, 1/v)` and `E(0, 0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveReport {
    pub duality: bool,
    pub constant_term: Option<BigRational>,
}

impl ProjectiveReport {
    pub fn constant_term_is_one(&self) -> bool {
        self.constant_term.as_ref().is_some_and(One::is_one)
    }

    pub fn passed(&self) -> bool {
        self.duality && self.constant_term_is_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    dimension: u32,
    mode: Mode,
    components: Vec<Component>,
    open_strata: BTreeMap<Subset, BiPoly>,
}

fn check_discrepancy(c: &Component) -> Result<u32> {
    let a = &c.discrepancy;
    if *a <= -BigRational::one() {
        return Err(Error::InvalidDiscrepancy(format!("{} for {}", a, c.id)));
    }
    if !a.is_integer() {
        return Err(Error::NonGorensteinUnsupported(format!("{} for {}", a, c.id)));
    }
    // Integer and > -1, so a >= 0.
    a.to_integer()
        .to_u32()
        .filter(|&a| a < u32::MAX)
        .ok_or_else(|| Error::InvalidInput(format!("discrepancy {a} too large")))
}

impl ResolutionData {
    /// Strata given as `H(D_J°)`. Zero strata may be omitted.
    pub fn from_open_strata(
        dimension: u32,
        mode: Mode,
        components: Vec<Component>,
        open_strata: BTreeMap<Subset, BiPoly>,
    ) -> Result<Self> {
        if components.len() > 64 {
            return Err(Error::InvalidInput("at most 64 components are supported".into()));
        }
        for (n, c) in components.iter().enumerate() {
            if components[..n].iter().any(|o| o.id == c.id) {
                return Err(Error::InvalidInput(format!("duplicate component id `{}`", c.id)));
            }
        }
        let all = Subset::full(components.len());
        for &j in open_strata.keys() {
            if !j.is_subset_of(all) {
                return Err(Error::InvalidInput(format!("stratum {j} refers to a missing component")));
            }
        }
        match mode {
            Mode::FullVariety if !open_strata.contains_key(&Subset::EMPTY) => {
                return Err(Error::InvalidInput("full-variety data needs the empty stratum".into()))
            }
            Mode::ExceptionalFiberOnly if open_strata.contains_key(&Subset::EMPTY) => {
                return Err(Error::InvalidInput("fiber data cannot contain the empty stratum".into()))
            }
            _ => {}
        }
        let open_strata = open_strata.into_iter().filter(|(_, h)| !h.is_zero()).collect();
        Ok(Self { dimension, mode, components, open_strata })
    }

    /// Strata given as closed intersections `H(D_J)`; open strata follow by
    /// `H(D_J°) = sum_{J' ⊇ J} (-1)^{|J'| - |J|} H(D_J')`.
    pub fn from_closed_strata(
        dimension: u32,
        mode: Mode,
        components: Vec<Component>,
        closed_strata: &BTreeMap<Subset, BiPoly>,
    ) -> Result<Self> {
        Self::from_open_strata(dimension, mode, components, open_from_closed(closed_strata))
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn open_strata(&self) -> &BTreeMap<Subset, BiPoly> {
        &self.open_strata
    }

    pub fn component_index(&self, id: &str) -> Result<usize> {
        self.components
            .iter()
            .position(|c| c.id == id)
            .ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    pub fn subset_ids(&self, j: Subset) -> Vec<&str> {
        j.indices().map(|i| self.components[i].id.as_str()).collect()
    }

    /// `H(D_J) = sum_{J' ⊇ J} H(D_J'°)` for every subset of a nonempty stratum.
    pub fn closed_from_open(&self) -> BTreeMap<Subset, BiPoly> {
        let mut closed: BTreeMap<Subset, BiPoly> = BTreeMap::new();
        for (&big, h) in &self.open_strata {
            for j in big.subsets() {
                if j.is_empty() && self.mode == Mode::ExceptionalFiberOnly {
                    continue;
                }
                *closed.entry(j).or_insert_with(BiPoly::zero) += h;
            }
        }
        closed
    }

    fn discrepancies(&self) -> Result<Vec<u32>> {
        self.components.iter().map(check_discrepancy).collect()
    }

    fn require(&self, mode: Mode) -> Result<()> {
        if self.mode == mode {
            Ok(())
        } else {
            Err(Error::WrongMode { expected: mode.name() })
        }
    }

    fn open_sum(&self) -> Result<StringyRational> {
        let a = self.discrepancies()?;
        let q1 = BiPoly::q_pow_minus_one(1);
        let mut acc = StringyRational::zero();
        for (&j, h) in &self.open_strata {
            let mut num = h.clone();
            let mut den = Vec::with_capacity(j.len());
            for i in j.indices() {
                num = num * &q1;
                den.push(a[i] + 1);
            }
            acc = acc + StringyRational::new(num, den, 0);
        }
        Ok(acc)
    }

    /// `sum_J H(D_J) prod_{i in J} (uv - (uv)^(a_i+1)) / ((uv)^(a_i+1) - 1)` over
    /// the given closed strata.
    fn closed_sum(&self, closed: &BTreeMap<Subset, BiPoly>) -> Result<StringyRational> {
        let a = self.discrepancies()?;
        let mut acc = StringyRational::zero();
        for (&j, h) in closed {
            let mut num = h.clone();
            let mut den = Vec::with_capacity(j.len());
            for i in j.indices() {
                num = num * (BiPoly::q_pow(1) - BiPoly::q_pow(a[i] + 1));
                den.push(a[i] + 1);
            }
            acc = acc + StringyRational::new(num, den, 0);
        }
        Ok(acc)
    }

    pub fn stringy_from_open(&self) -> Result<StringyRational> {
        self.require(Mode::FullVariety)?;
        self.open_sum()
    }

    pub fn stringy_from_closed(&self) -> Result<StringyRational> {
        self.require(Mode::FullVariety)?;
        self.closed_sum(&self.closed_from_open())
    }

    /// Contribution of the singular point: `sum_{J != ∅} H(D_J°) prod (uv - 1) / ((uv)^(a_i+1) - 1)`.
    pub fn exceptional_contribution(&self) -> Result<StringyRational> {
        self.require(Mode::ExceptionalFiberOnly)?;
        self.open_sum()
    }

    /// The same contribution from closed strata: `H(fiber) + sum_{J != ∅} H(D_J) prod (uv - (uv)^(a_i+1)) / ((uv)^(a_i+1) - 1)`.
    pub fn exceptional_contribution_from_closed(&self) -> Result<StringyRational> {
        self.require(Mode::ExceptionalFiberOnly)?;
        let fiber = self.open_strata.values().fold(BiPoly::zero(), |acc, h| acc + h);
        Ok(StringyRational::from_poly(fiber) + self.closed_sum(&self.closed_from_open())?)
    }

    /// Stringy Euler number as the limit of `E_st` at `u = v = 1`.
    pub fn stringy_euler(&self) -> Result<BigRational> {
        self.stringy_from_open()?.limit_at_one()
    }

    /// Stringy Euler number `sum_J chi(D_J°) prod 1 / (a_i + 1)` with `chi = H(1, 1)`.
    pub fn stringy_euler_direct(&self) -> Result<BigRational> {
        self.require(Mode::FullVariety)?;
        let a = self.discrepancies()?;
        let one = BigRational::one();
        let mut acc = BigRational::zero();
        for (&j, h) in &self.open_strata {
            let weight = j
                .indices()
                .fold(BigRational::one(), |w, i| w / BigRational::from_integer((a[i] + 1).into()));
            acc += h.eval(&one, &one) * weight;
        }
        Ok(acc)
    }
}

fn open_from_closed(closed: &BTreeMap<Subset, BiPoly>) -> BTreeMap<Subset, BiPoly> {
    closed
        .keys()
        .map(|&j| {
            let mut h = BiPoly::zero();
            for (&big, hb) in closed.range(j..) {
                if j.is_subset_of(big) {
                    if (big.len() - j.len()) % 2 == 0 {
                        h += hb;
                    } else {
                        h -= hb;
                    }
                }
            }
            (j, h)
        })
        .collect()
}

/// Duality and the normalization `E(0, 0) = 1` for a would-be projective `E_st` of dimension `d`.
pub fn verify_projective_properties(e: &StringyRational, d: u32) -> ProjectiveReport {
    let duality = e.dual_transform(d).cross_equal(e);
    let constant_term = e
        .series_coefficients(0)
        .ok()
        .map(|c| c.get(&(0, 0)).cloned().unwrap_or_else(BigRational::zero));
    ProjectiveReport { duality, constant_term }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn q() -> BiPoly {
        BiPoly::q_pow(1)
    }

    fn strata(entries: &[(&[usize], BiPoly)]) -> BTreeMap<Subset, BiPoly> {
        entries.iter().map(|(j, h)| (Subset::from_indices(j.iter().copied()), h.clone())).collect()
    }

    #[test]
    fn smooth_variety_is_its_own_e_function() {
        let p2 = BiPoly::q_pow(2) + q() + BiPoly::one();
        let r = ResolutionData::from_open_strata(2, Mode::FullVariety, vec![], strata(&[(&[], p2.clone())])).unwrap();
        assert!(r.stringy_from_open().unwrap().cross_equal(&StringyRational::from_poly(p2.clone())));
        assert!(r.stringy_from_closed().unwrap().cross_equal(&StringyRational::from_poly(p2)));
        assert_eq!(r.stringy_euler().unwrap(), rat(3));
    }

    #[test]
    fn crepant_data_sum_open_strata() {
        // Two crepant curves meeting in a point inside a surface.
        let open = strata(&[(&[], BiPoly::q_pow(2) - q()), (&[0], q()), (&[1], q()), (&[0, 1], BiPoly::one())]);
        let comps = vec![Component::new("A", 0), Component::new("B", 0)];
        let r = ResolutionData::from_open_strata(2, Mode::FullVariety, comps, open.clone()).unwrap();
        let total = open.values().fold(BiPoly::zero(), |acc, h| acc + h);
        assert!(r.stringy_from_open().unwrap().cross_equal(&StringyRational::from_poly(total.clone())));
        assert!(r.stringy_from_closed().unwrap().cross_equal(&StringyRational::from_poly(total)));
        let closed = r.closed_from_open();
        assert_eq!(closed[&Subset::from_indices([0])], q() + BiPoly::one());
    }

    #[test]
    fn euler_routes_agree_with_discrepancies() {
        let open = strata(&[(&[], BiPoly::q_pow(3) - BiPoly::one()), (&[0], BiPoly::q_pow(2) + q() + BiPoly::one())]);
        let r = ResolutionData::from_open_strata(3, Mode::FullVariety, vec![Component::new("E", 2)], open).unwrap();
        assert_eq!(r.stringy_euler().unwrap(), r.stringy_euler_direct().unwrap());
        assert_eq!(r.stringy_euler_direct().unwrap(), rat(1));
    }

    #[test]
    fn mode_and_discrepancy_errors() {
        let fiber = ResolutionData::from_open_strata(
            2,
            Mode::ExceptionalFiberOnly,
            vec![Component::new("E", 0)],
            strata(&[(&[0], q() + BiPoly::one())]),
        )
        .unwrap();
        assert_eq!(fiber.stringy_from_open(), Err(Error::WrongMode { expected: "fullVariety" }));
        assert!(fiber.exceptional_contribution().unwrap().cross_equal(&StringyRational::from_poly(q() + BiPoly::one())));

        let bad = ResolutionData::from_open_strata(
            2,
            Mode::ExceptionalFiberOnly,
            vec![Component::new("E", -1)],
            strata(&[(&[0], q())]),
        )
        .unwrap();
        assert_eq!(bad.exceptional_contribution().unwrap_err().code(), "InvalidDiscrepancy");
        assert!(ResolutionData::from_open_strata(2, Mode::FullVariety, vec![], BTreeMap::new()).is_err());
        assert!(ResolutionData::from_open_strata(1, Mode::ExceptionalFiberOnly, vec![], strata(&[(&[3], q())])).is_err());
    }

    #[test]
    fn projective_checks() {
        let p2 = StringyRational::from_poly(BiPoly::q_pow(2) + q() + BiPoly::one());
        assert!(verify_projective_properties(&p2, 2).passed());
        let r = verify_projective_properties(&StringyRational::from_poly(q() + BiPoly::integer(2)), 1);
        assert!(!r.duality);
        assert_eq!(r.constant_term, Some(rat(2)));
    }
}
