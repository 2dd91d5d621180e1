use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent support of a polynomial: the points `n` with nonzero coefficient of `x^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportSet {
    dim: usize,
    points: Vec<Vec<u64>>,
}

impl SupportSet {
    pub fn new(points: Vec<Vec<u64>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidInput("support must be nonempty".into()))?;
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidInput("support points must share a positive dimension".into()));
        }
        Ok(Self { dim, points })
    }

    /// Support `{a_i e_i}` of `x_1^a_1 + .. + x_d^a_d`.
    pub fn diagonal(exponents: &[u64]) -> Result<Self> {
        let d = exponents.len();
        Self::new(
            (0..d)
                .map(|i| (0..d).map(|j| if i == j { exponents[i] } else { 0 }).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }
}

/// `m_f(k) = min_{x in Gamma(f)} k . x`; for nonnegative `k` the minimum is
/// attained at a support point.
pub fn m_value(k: &[u64], support: &SupportSet) -> u64 {
    assert_eq!(k.len(), support.dim, "dimension mismatch");
    support
        .points
        .iter()
        .map(|x| k.iter().zip(x).map(|(a, b)| a * b).sum::<u64>())
        .min()
        .expect("support is nonempty")
}

/// `sigma(k) = k_1 + .. + k_d`
pub fn sigma(k: &[u64]) -> u64 {
    k.iter().sum()
}

/// Rational simplicial cone strictly generated by linearly independent
/// primitive vectors with nonnegative coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialCone {
    generators: Vec<Vec<u64>>,
}

fn rank(rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            let pivot_row = m[r].clone();
            for (entry, p) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                *entry -= &f * p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

impl SimplicialCone {
    pub fn new(generators: Vec<Vec<u64>>) -> Result<Self> {
        let d = generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidGenerator("a cone needs at least one generator".into()))?;
        for g in &generators {
            if g.len() != d || d == 0 {
                return Err(Error::InvalidGenerator(format!("{g:?} has the wrong dimension")));
            }
            let content = g.iter().fold(0u64, |acc, x| acc.gcd(x));
            if content != 1 {
                return Err(Error::InvalidGenerator(format!("{g:?} is not primitive")));
            }
        }
        if generators.len() > d || rank(&generators) < generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(Self { generators })
    }

    /// Cone spanned by arbitrary nonzero rays, each divided by the gcd of its coordinates.
    pub fn from_rays(rays: Vec<Vec<u64>>) -> Result<Self> {
        let mut gens = Vec::with_capacity(rays.len());
        for r in rays {
            let content = r.iter().fold(0u64, |acc, x| acc.gcd(x));
            if content == 0 {
                return Err(Error::InvalidGenerator("zero ray".into()));
            }
            gens.push(r.into_iter().map(|x| x / content).collect());
        }
        Self::new(gens)
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators[0].len()
    }

    /// The fundamental set: all `delta` with positive integer coordinates of the form
    /// `sum lambda_i gamma_i`, `0 < lambda_i <= 1`, sorted lexicographically.
    ///
    /// Scans the integer box `1 <= delta <= sum gamma_i` on a set of pivot
    /// coordinates that determine `lambda`, solving for `lambda` exactly with an
    /// integer adjugate. Each coordinate is restricted to the interval where
    /// every `lambda_i` can still end up in `(0, 1]`.
    pub fn fundamental_set(&self) -> Result<Vec<Vec<u64>>> {
        let d = self.dim();
        let e = self.generators.len();
        let bound: Vec<i128> = (0..d).map(|r| self.generators.iter().map(|g| g[r] as i128).sum()).collect();

        // Pivot rows: greedy minimum-weight basis of the row matroid, which
        // minimizes the product of the box sides.
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&r| bound[r]);
        let mut pivots: Vec<usize> = Vec::with_capacity(e);
        for &r in &order {
            let mut trial: Vec<Vec<u64>> = pivots.iter().map(|&p| self.row(p)).collect();
            trial.push(self.row(r));
            if rank(&trial) == trial.len() {
                pivots.push(r);
                if pivots.len() == e {
                    break;
                }
            }
        }
        if pivots.len() < e {
            return Err(Error::DependentGenerators);
        }
        pivots.sort_unstable();
        let rest: Vec<usize> = (0..d).filter(|r| !pivots.contains(r)).collect();

        // lambda = adj * delta_P / det with det > 0.
        let square: Vec<Vec<u64>> = pivots.iter().map(|&p| self.row(p)).collect();
        let (det, adj) = integer_adjugate(&square)?;
        // delta_rest * det = (Gamma_rest * adj) * delta_P
        let rest_map: Vec<Vec<i128>> = rest
            .iter()
            .map(|&r| {
                (0..e)
                    .map(|c| (0..e).map(|i| self.generators[i][r] as i128 * adj[i][c]).sum())
                    .collect()
            })
            .collect();

        // Scan coordinates that many lambda_i depend on first, so later ones are pinned down.
        let mut order: Vec<usize> = (0..e).collect();
        order.sort_by_key(|&c| (std::cmp::Reverse((0..e).filter(|&i| adj[i][c] != 0).count()), bound[pivots[c]]));
        let scan = Scan {
            det,
            adj: (0..e).map(|i| order.iter().map(|&c| adj[i][c]).collect()).collect(),
            bound: order.iter().map(|&c| bound[pivots[c]]).collect(),
            rest_map: rest_map.iter().map(|row| order.iter().map(|&c| row[c]).collect()).collect(),
            coords: order.iter().map(|&c| pivots[c]).chain(rest.iter().copied()).collect(),
        };
        let (rest_min, rest_max) = scan.remaining_ranges();
        let mut out = Vec::new();
        scan.visit(0, &mut vec![0; e], &mut vec![0; e], &rest_min, &rest_max, d, &mut out);
        out.sort();
        Ok(out)
    }

    fn row(&self, r: usize) -> Vec<u64> {
        self.generators.iter().map(|g| g[r]).collect()
    }
}

/// Depth-first scan of the pivot box; `lambda_i * det` is kept as a running sum.
struct Scan {
    det: i128,
    /// `adj[i][c]`, columns in scan order.
    adj: Vec<Vec<i128>>,
    bound: Vec<i128>,
    rest_map: Vec<Vec<i128>>,
    /// Output coordinate of each scanned pivot, followed by the non-pivot coordinates.
    coords: Vec<usize>,
}

impl Scan {
    /// Range of `sum_{c' > c} adj[i][c'] delta_c'` over the box, per level `c` and row `i`.
    fn remaining_ranges(&self) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
        let e = self.bound.len();
        let mut lo = vec![vec![0i128; e]; e];
        let mut hi = vec![vec![0i128; e]; e];
        for c in (0..e.saturating_sub(1)).rev() {
            for i in 0..e {
                let a = self.adj[i][c + 1];
                let (x, y) = (a, a * self.bound[c + 1]);
                lo[c][i] = lo[c + 1][i] + x.min(y);
                hi[c][i] = hi[c + 1][i] + x.max(y);
            }
        }
        (lo, hi)
    }

    #[allow(clippy::too_many_arguments)]
    fn visit(
        &self,
        c: usize,
        partial: &mut Vec<i128>,
        point: &mut Vec<i128>,
        rest_min: &[Vec<i128>],
        rest_max: &[Vec<i128>],
        d: usize,
        out: &mut Vec<Vec<u64>>,
    ) {
        let e = self.bound.len();
        if c == e {
            let mut delta = vec![0u64; d];
            for (k, &x) in point.iter().enumerate() {
                delta[self.coords[k]] = x as u64;
            }
            for (row, &r) in self.rest_map.iter().zip(&self.coords[e..]) {
                let scaled: i128 = row.iter().zip(point.iter()).map(|(a, b)| a * b).sum();
                if scaled <= 0 || scaled % self.det != 0 {
                    return;
                }
                delta[r] = (scaled / self.det) as u64;
            }
            out.push(delta);
            return;
        }
        // 1 <= partial + a x + rest <= det must stay reachable for every row.
        let (mut lo, mut hi) = (1i128, self.bound[c]);
        for i in 0..e {
            let a = self.adj[i][c];
            let need_low = 1 - partial[i] - rest_max[c][i];
            let need_high = self.det - partial[i] - rest_min[c][i];
            if a == 0 {
                if need_low > 0 || need_high < 0 {
                    return;
                }
            } else if a > 0 {
                lo = lo.max(ceil_div(need_low, a));
                hi = hi.min(floor_div(need_high, a));
            } else {
                lo = lo.max(ceil_div(need_high, a));
                hi = hi.min(floor_div(need_low, a));
            }
            if lo > hi {
                return;
            }
        }
        for x in lo..=hi {
            for (s, row) in partial.iter_mut().zip(&self.adj) {
                *s += row[c] * x;
            }
            point[c] = x;
            self.visit(c + 1, partial, point, rest_min, rest_max, d, out);
            for (s, row) in partial.iter_mut().zip(&self.adj) {
                *s -= row[c] * x;
            }
        }
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b) - if b < 0 && a.rem_euclid(b) != 0 { 1 } else { 0 }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// `(|det m|, |det m| * m^-1)`, the latter an integer matrix.
fn integer_adjugate(m: &[Vec<u64>]) -> Result<(i128, Vec<Vec<i128>>)> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(((i == j) as u8).into())).collect())
        .collect();
    let mut det = BigRational::from_integer(1.into());
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::DependentGenerators)?;
        if p != c {
            a.swap(p, c);
            inv.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for j in 0..n {
            a[c][j] /= &pivot;
            inv[c][j] /= &pivot;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                let s1 = &f * &a[c][j];
                a[i][j] -= s1;
                let s2 = &f * &inv[c][j];
                inv[i][j] -= s2;
            }
        }
    }
    let det_abs = det.abs();
    let overflow = || Error::InvalidInput("cone too large for exact box enumeration".into());
    let det_int = det_abs.to_integer().to_i128().ok_or_else(overflow)?;
    let adj = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let y = x * &det_abs;
                    debug_assert!(y.is_integer());
                    y.to_integer().to_i128().ok_or_else(overflow)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((det_int, adj))
}
