//! Entropy of the inner four spins of the square network as a function of
//! the symmetric 4-qubit simplex, and its maximization.
//!
//! With the same symmetric simplex on every checked square the amplitude of
//! a configuration is `Π_w α_w^{n_w(x)}`, where `n_w(x)` counts squares of
//! Hamming weight `w`. Squares away from the region contribute a monomial
//! that only depends on the outside configuration, so the reduced density
//! matrix is precomputed once as a polynomial in `α` and then evaluated in
//! microseconds per coefficient vector.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::bits::mask;
use crate::lattice::{build_square_network, Region, SquareNetworkGraph};
use crate::simplex::SymmetricFourQubit;
use crate::spectral::entropy_of_spectrum;
use crate::{Error, Result};

/// Coefficients at which the reference optimum sits, before normalization.
pub const REFERENCE_PATTERN: [f64; 5] = [1.0, -1.0, 1.0, 1.0, 1.0];

/// Entropy differences within this are ties, broken by the
/// lexicographically smallest normalized coefficients.
pub const TIE_TOL: f64 = 1e-12;

/// Refinement stops once a full coordinate pass gains less than this.
pub const GAIN_TOL: f64 = 1e-6;

/// Allowed deviation from the reference pattern after gauge fixing.
pub const PATTERN_TOLERANCE: f64 = 0.01;

struct TouchingSquare {
    /// Region-bit shifts of the region sites inside this square.
    region_shifts: Vec<usize>,
    outside: Vec<usize>,
}

/// Precomputed polynomial form of the inner reduced density matrix.
pub struct Scan4Evaluator {
    region_len: usize,
    touching: Vec<TouchingSquare>,
    n_far: usize,
    /// `(m index, far weight counts, multiplicity)`; `m` packs the outside
    /// weights of the touching squares in mixed radix.
    terms: Vec<(usize, [u8; 5], f64)>,
    radices: Vec<usize>,
}

impl Scan4Evaluator {
    pub fn new(graph: &SquareNetworkGraph, region: &Region) -> Result<Self> {
        let n = graph.n_sites();
        if region.n_sites() != n {
            return Err(Error::InvalidRegion(
                "region belongs to another system".into(),
            ));
        }
        let inside = region.sites();
        if inside.len() > 8 {
            return Err(Error::SizeCap {
                what: "scan region",
                size: inside.len(),
                cap: 8,
            });
        }
        let outside_sites = region.complement().sites().to_vec();
        if outside_sites.len() > 26 {
            return Err(Error::SizeCap {
                what: "scan network",
                size: n,
                cap: 26 + inside.len(),
            });
        }
        let k = inside.len();
        let mut touching = Vec::new();
        let mut far: Vec<[usize; 4]> = Vec::new();
        for sq in graph.checked_squares() {
            let region_shifts: Vec<usize> = sq
                .iter()
                .filter_map(|s| inside.iter().position(|r| r == s))
                .map(|p| k - 1 - p)
                .collect();
            if region_shifts.is_empty() {
                far.push(*sq);
            } else {
                touching.push(TouchingSquare {
                    region_shifts,
                    outside: sq.iter().copied().filter(|s| !inside.contains(s)).collect(),
                });
            }
        }
        let radices: Vec<usize> = touching.iter().map(|t| t.outside.len() + 1).collect();
        let n_m: usize = radices.iter().product();
        let n_far = far.len();
        if 2 * n_far >= 64 {
            return Err(Error::SizeCap {
                what: "scan far squares",
                size: n_far,
                cap: 31,
            });
        }
        let base = n_far + 1;
        let n_codes = base.pow(4);
        let mut counts = alloc::vec![0u64; n_m * n_codes];

        let far_masks: Vec<u64> = far
            .iter()
            .map(|sq| sq.iter().fold(0, |m, &s| m | mask(s, n)))
            .collect();
        let touch_masks: Vec<u64> = touching
            .iter()
            .map(|t| t.outside.iter().fold(0, |m, &s| m | mask(s, n)))
            .collect();
        for b in 0..1u64 << outside_sites.len() {
            let mut x = 0u64;
            for (j, &s) in outside_sites.iter().enumerate() {
                if (b >> (outside_sites.len() - 1 - j)) & 1 == 1 {
                    x |= mask(s, n);
                }
            }
            let mut m = 0usize;
            for (tm, r) in touch_masks.iter().zip(&radices) {
                m = m * r + (x & tm).count_ones() as usize;
            }
            let mut weights = [0usize; 5];
            for fm in &far_masks {
                weights[(x & fm).count_ones() as usize] += 1;
            }
            let code = ((weights[0] * base + weights[1]) * base + weights[2]) * base + weights[3];
            counts[m * n_codes + code] += 1;
        }
        let mut terms = Vec::new();
        for (idx, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (m, mut code) = (idx / n_codes, idx % n_codes);
            let mut w = [0u8; 5];
            for slot in (0..4).rev() {
                w[slot] = (code % base) as u8;
                code /= base;
            }
            w[4] = (n_far - w[..4].iter().map(|&v| v as usize).sum::<usize>()) as u8;
            terms.push((m, w, c as f64));
        }
        Ok(Scan4Evaluator {
            region_len: k,
            touching,
            n_far,
            terms,
            radices,
        })
    }

    /// Evaluator for the 24-spin network and its inner square.
    pub fn square_network() -> Self {
        let g = build_square_network();
        Self::new(&g, g.inner_region()).expect("the inner square fits")
    }

    /// Unnormalized reduced density matrix of the region (region site 0 is
    /// the leading bit).
    pub fn density(&self, coeffs: [f64; 5]) -> DMatrix<f64> {
        let max_pow = 2 * self.n_far;
        let mut pow = [[0.0f64; 64]; 5];
        for w in 0..5 {
            pow[w][0] = 1.0;
            for e in 1..=max_pow {
                pow[w][e] = pow[w][e - 1] * coeffs[w];
            }
        }
        let n_m: usize = self.radices.iter().product();
        let mut g = alloc::vec![0.0f64; n_m];
        for (m, w, c) in &self.terms {
            let mut v = *c;
            for k in 0..5 {
                v *= pow[k][2 * w[k] as usize];
            }
            g[*m] += v;
        }
        let dim = 1usize << self.region_len;
        let mut rho = DMatrix::<f64>::zeros(dim, dim);
        let mut u = alloc::vec![0.0f64; dim];
        let mut digits = alloc::vec![0usize; self.touching.len()];
        for (m, &gm) in g.iter().enumerate() {
            if gm == 0.0 {
                continue;
            }
            let mut rest = m;
            for (d, r) in digits.iter_mut().zip(&self.radices).rev() {
                *d = rest % r;
                rest /= r;
            }
            for (a, ua) in u.iter_mut().enumerate() {
                let mut v = 1.0;
                for (t, &d) in self.touching.iter().zip(&digits) {
                    let inner_weight = t
                        .region_shifts
                        .iter()
                        .filter(|&&s| (a >> s) & 1 == 1)
                        .count();
                    v *= coeffs[inner_weight + d];
                }
                *ua = v;
            }
            for i in 0..dim {
                if u[i] == 0.0 {
                    continue;
                }
                let gi = gm * u[i];
                for j in 0..dim {
                    rho[(i, j)] += gi * u[j];
                }
            }
        }
        rho
    }

    /// Region entropy in ebits for (not necessarily normalized) coefficients.
    pub fn entropy(&self, coeffs: [f64; 5]) -> Result<f64> {
        let rho = self.density(coeffs);
        let trace = rho.trace();
        if !(trace > 0.0) || !trace.is_finite() {
            return Err(Error::ZeroState);
        }
        let values: Vec<f64> = (rho / trace)
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        Ok(entropy_of_spectrum(&values))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    /// Points per coordinate on `[-1, 1]`.
    pub grid: usize,
    pub seed: u64,
    /// Random starting points refined in addition to the grid optimum.
    pub restarts: usize,
    /// Cap on coordinate passes per refinement.
    pub max_passes: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            grid: 9,
            seed: 7,
            restarts: 4,
            max_passes: 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    /// Normalized with the symmetric-simplex weights.
    pub coeffs: [f64; 5],
    pub entropy: f64,
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub best: ScanPoint,
    /// Every evaluation in the order performed.
    pub trace: Vec<ScanPoint>,
    /// False when some refinement hit the pass cap.
    pub converged: bool,
    pub reference: ScanPoint,
    /// Gauge image of the best coefficients closest to the reference.
    pub gauge_fixed: [f64; 5],
    /// Largest coordinate difference between `gauge_fixed` and the
    /// normalized reference.
    pub pattern_residual: f64,
}

impl ScanResult {
    pub fn beats_reference(&self) -> bool {
        self.best.entropy >= self.reference.entropy - GAIN_TOL
    }

    pub fn matches_pattern(&self) -> bool {
        self.pattern_residual <= PATTERN_TOLERANCE
    }
}

pub fn normalize(coeffs: [f64; 5]) -> Result<[f64; 5]> {
    Ok(SymmetricFourQubit::new(coeffs)?.coeffs())
}

/// `a` is preferred over `b`: higher entropy, ties to the lexicographically
/// smaller coefficients.
pub fn prefer(a: &ScanPoint, b: &ScanPoint) -> bool {
    if a.entropy > b.entropy + TIE_TOL {
        return true;
    }
    if a.entropy < b.entropy - TIE_TOL {
        return false;
    }
    a.coeffs
        .iter()
        .zip(&b.coeffs)
        .find(|(x, y)| x != y)
        .is_some_and(|(x, y)| x < y)
}

/// Every nonzero point of the `grid^5` lattice on `[-1, 1]^5`.
pub fn grid_points(grid: usize) -> Vec<[f64; 5]> {
    let values: Vec<f64> = if grid < 2 {
        alloc::vec![1.0]
    } else {
        (0..grid)
            .map(|k| -1.0 + 2.0 * k as f64 / (grid - 1) as f64)
            .collect()
    };
    let mut out = Vec::with_capacity(values.len().pow(5));
    let g = values.len();
    for idx in 0..g.pow(5) {
        let mut rest = idx;
        let mut p = [0.0; 5];
        for slot in (0..5).rev() {
            p[slot] = values[rest % g];
            rest /= g;
        }
        if p.iter().any(|&v| v != 0.0) {
            out.push(p);
        }
    }
    out
}

/// The eight images of `c` under the entropy-preserving symmetries: global
/// sign, `α_w → (−1)^w α_w`, and `α_w → α_{4−w}`.
pub fn gauge_images(c: [f64; 5]) -> Vec<[f64; 5]> {
    let mut out = Vec::with_capacity(8);
    for reflect in [false, true] {
        for alternate in [false, true] {
            for negate in [false, true] {
                let mut v = [0.0; 5];
                for (w, slot) in v.iter_mut().enumerate() {
                    let mut x = if reflect { c[4 - w] } else { c[w] };
                    if alternate && w % 2 == 1 {
                        x = -x;
                    }
                    if negate {
                        x = -x;
                    }
                    *slot = x;
                }
                out.push(v);
            }
        }
    }
    out
}

/// Closest gauge image to the normalized reference and its max-coordinate
/// distance.
pub fn pattern_residual(coeffs: [f64; 5]) -> ([f64; 5], f64) {
    let target = normalize(REFERENCE_PATTERN).expect("nonzero pattern");
    gauge_images(coeffs)
        .into_iter()
        .map(|g| {
            let d = g
                .iter()
                .zip(&target)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            (g, d)
        })
        .fold(([0.0; 5], f64::INFINITY), |best, cur| {
            if cur.1 < best.1 {
                cur
            } else {
                best
            }
        })
}

struct Search<'a, F: Fn(&[[f64; 5]]) -> Vec<Result<f64>>> {
    eval: &'a Scan4Evaluator,
    batch: F,
    trace: Vec<ScanPoint>,
}

impl<F: Fn(&[[f64; 5]]) -> Vec<Result<f64>>> Search<'_, F> {
    fn point(&mut self, c: [f64; 5]) -> Option<ScanPoint> {
        let coeffs = normalize(c).ok()?;
        let entropy = self.eval.entropy(coeffs).ok()?;
        let p = ScanPoint { coeffs, entropy };
        self.trace.push(p);
        Some(p)
    }

    /// Golden-section maximization of coordinate `i` over `[lo, hi]`.
    fn golden(&mut self, base: ScanPoint, i: usize, lo: f64, hi: f64) -> ScanPoint {
        const INV_PHI: f64 = 0.618_033_988_749_894_9;
        let at = |t: f64| {
            let mut c = base.coeffs;
            c[i] = t;
            c
        };
        let score = |p: Option<ScanPoint>| p.map_or(f64::NEG_INFINITY, |p| p.entropy);
        let (mut a, mut b) = (lo, hi);
        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let mut p1 = self.point(at(x1));
        let mut p2 = self.point(at(x2));
        let mut best = base;
        for p in [p1, p2].into_iter().flatten() {
            if prefer(&p, &best) {
                best = p;
            }
        }
        while b - a > 1e-7 {
            if score(p1) >= score(p2) {
                b = x2;
                x2 = x1;
                p2 = p1;
                x1 = b - INV_PHI * (b - a);
                p1 = self.point(at(x1));
                if let Some(p) = p1 {
                    if prefer(&p, &best) {
                        best = p;
                    }
                }
            } else {
                a = x1;
                x1 = x2;
                p1 = p2;
                x2 = a + INV_PHI * (b - a);
                p2 = self.point(at(x2));
                if let Some(p) = p2 {
                    if prefer(&p, &best) {
                        best = p;
                    }
                }
            }
        }
        best
    }

    /// Coordinate passes from `start` until a pass gains less than
    /// [`GAIN_TOL`]. Returns the best point and whether it converged.
    fn refine(
        &mut self,
        start: ScanPoint,
        mut half_width: f64,
        max_passes: usize,
    ) -> (ScanPoint, bool) {
        let mut current = start;
        for _ in 0..max_passes {
            let before = current.entropy;
            for i in 0..5 {
                let c = current.coeffs[i];
                current = self.golden(current, i, c - half_width, c + half_width);
            }
            if current.entropy - before < GAIN_TOL {
                return (current, true);
            }
            half_width = (half_width * 0.5).max(1e-3);
        }
        (current, false)
    }
}

/// Grid scan followed by refinement of the grid optimum and of seeded random
/// starts. `batch` evaluates a slice of grid points (possibly in parallel)
/// and must return results in input order.
pub fn run_scan4_with<F>(eval: &Scan4Evaluator, config: &ScanConfig, batch: F) -> Result<ScanResult>
where
    F: Fn(&[[f64; 5]]) -> Vec<Result<f64>>,
{
    if config.grid < 2 {
        return Err(Error::InvalidArgument(
            "grid needs at least 2 points".into(),
        ));
    }
    let mut search = Search {
        eval,
        batch,
        trace: Vec::new(),
    };
    let reference = search.point(REFERENCE_PATTERN).ok_or(Error::ZeroState)?;

    let points: Vec<[f64; 5]> = grid_points(config.grid)
        .into_iter()
        .filter_map(|p| normalize(p).ok())
        .collect();
    let values = (search.batch)(&points);
    let mut best: Option<ScanPoint> = None;
    for (c, v) in points.iter().zip(values) {
        let Ok(entropy) = v else { continue };
        let p = ScanPoint {
            coeffs: *c,
            entropy,
        };
        search.trace.push(p);
        if best.as_ref().is_none_or(|b| prefer(&p, b)) {
            best = Some(p);
        }
    }
    let grid_best = best.ok_or(Error::ZeroState)?;
    let spacing = 2.0 / (config.grid - 1) as f64;
    let (mut best, mut converged) = search.refine(grid_best, spacing, config.max_passes);

    let mut rng = crate::rng::seeded(config.seed);
    let mut unit = || crate::rng::symmetric_unit(&mut rng);
    for _ in 0..config.restarts {
        let start = [unit(), unit(), unit(), unit(), unit()];
        let Some(p) = search.point(start) else {
            continue;
        };
        let (q, ok) = search.refine(p, 0.25, config.max_passes);
        converged &= ok;
        if prefer(&q, &best) {
            best = q;
        }
    }
    let (gauge_fixed, residual) = pattern_residual(best.coeffs);
    Ok(ScanResult {
        best,
        trace: search.trace,
        converged,
        reference,
        gauge_fixed,
        pattern_residual: residual,
    })
}

/// Sequential scan on the 24-spin network.
pub fn run_scan4(config: &ScanConfig) -> Result<ScanResult> {
    let eval = Scan4Evaluator::square_network();
    run_scan4_with(&eval, config, |pts| {
        pts.iter().map(|&c| eval.entropy(c)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{reduced_density_streaming, NetworkSpec};
    use crate::simplex::symmetric_four;

    #[test]
    fn polynomial_density_matches_streaming() {
        let g = build_square_network();
        let eval = Scan4Evaluator::new(&g, g.inner_region()).unwrap();
        for c in [[0.3, -0.5, 0.2, 0.7, -0.1], [1.0, -1.0, 1.0, 1.0, 1.0]] {
            let spec = NetworkSpec::square_uniform(&g, &symmetric_four(c).unwrap()).unwrap();
            let direct = reduced_density_streaming(&spec, g.inner_region()).unwrap();
            let rho = eval.density(normalize(c).unwrap());
            let rho = &rho / rho.trace();
            let diff = (direct.matrix().map(|z| z.re) - rho).abs().max();
            assert!(diff < 1e-12, "{diff}");
        }
    }

    #[test]
    fn product_and_reference_points() {
        let eval = Scan4Evaluator::square_network();
        assert!(eval.entropy([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap().abs() < 1e-12);
        assert!((eval.entropy(REFERENCE_PATTERN).unwrap() - 4.0).abs() < 1e-9);
        for img in gauge_images(REFERENCE_PATTERN) {
            assert!((eval.entropy(img).unwrap() - 4.0).abs() < 1e-9);
        }
    }

    #[test]
    fn gauge_residual_of_images_is_zero() {
        let target = normalize(REFERENCE_PATTERN).unwrap();
        for img in gauge_images(target) {
            assert!(pattern_residual(img).1 < 1e-15);
        }
    }

    #[test]
    fn tie_break_is_lexicographic() {
        let a = ScanPoint {
            coeffs: [-1.0, 0.0, 0.0, 0.0, 0.0],
            entropy: 1.0,
        };
        let b = ScanPoint {
            coeffs: [1.0, 0.0, 0.0, 0.0, 0.0],
            entropy: 1.0,
        };
        assert!(prefer(&a, &b) && !prefer(&b, &a));
    }
}
