//! Matched smoothing/derivative kernel pairs.
//!
//! A pair couples a smoothing kernel `d0` with a derivative kernel `d1`,
//! designed jointly so that the derivative of the `d0`-interpolated signal is
//! well approximated by direct convolution with `d1`. In the frequency domain
//! the ideal relationship is `i*omega*D0(omega) = D1(omega)`; the designer
//! minimizes the weighted squared deviation from it over a frequency band,
//! subject to unit DC gain for `d0` and unit ramp response for `d1`.
//!
//! Supports are odd (taps on integer offsets `-H..H`) except for the 4-point
//! pair, which lives on half-sample offsets `-1.5, -0.5, 0.5, 1.5` and
//! evaluates between samples. Both parities satisfy the same constraints and
//! the same objective.

use crate::linalg::solve_spd;
use crate::textio::g17;
use crate::{Error, Result};
use num_complex::Complex64;

const INVARIANT_TOL: f64 = 1e-12;

/// Frequency weighting applied to the matching objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Equal weight at every sampled frequency.
    Uniform,
    /// `0.5 * (1 + cos(pi * omega / band_edge))`, de-emphasizing the band edge.
    RaisedCosine,
}

/// Parameters of a kernel design problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignSpec {
    support: usize,
    band_edge: f64,
    weight: WeightKind,
    grid_points: usize,
}

impl DesignSpec {
    /// Band edge used when nothing else is requested. Matching all the way to
    /// the Nyquist frequency is impossible for short filters, so the band
    /// stops at 0.8 pi.
    pub const DEFAULT_BAND_EDGE: f64 = 0.8 * std::f64::consts::PI;
    pub const DEFAULT_GRID_POINTS: usize = 1024;

    pub fn new(
        support: usize,
        band_edge: f64,
        weight: WeightKind,
        grid_points: usize,
    ) -> Result<Self> {
        if support < 3 {
            return Err(Error::InvalidDesign(format!(
                "support {support} too small, need at least 3"
            )));
        }
        if !(band_edge > 0.0 && band_edge <= std::f64::consts::PI) {
            return Err(Error::InvalidDesign(format!(
                "band edge {band_edge} outside (0, pi]"
            )));
        }
        if grid_points < 8 * support {
            return Err(Error::InvalidDesign(format!(
                "{grid_points} frequency samples too few for support {support} (need >= {})",
                8 * support
            )));
        }
        Ok(Self {
            support,
            band_edge,
            weight,
            grid_points,
        })
    }

    /// Default design problem for a given support.
    pub fn with_support(support: usize) -> Result<Self> {
        Self::new(
            support,
            Self::DEFAULT_BAND_EDGE,
            WeightKind::Uniform,
            Self::DEFAULT_GRID_POINTS,
        )
    }

    pub fn support(&self) -> usize {
        self.support
    }

    pub fn band_edge(&self) -> f64 {
        self.band_edge
    }

    /// Sampled frequencies, uniformly spaced on `(0, band_edge]`. The DC
    /// point is omitted because the integrand vanishes there identically for
    /// any pair satisfying the constraints.
    fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.grid_points;
        let band = self.band_edge;
        (1..=n).map(move |k| band * k as f64 / n as f64)
    }

    fn weight_at(&self, omega: f64) -> f64 {
        match self.weight {
            WeightKind::Uniform => 1.0,
            WeightKind::RaisedCosine => {
                0.5 * (1.0 + (std::f64::consts::PI * omega / self.band_edge).cos())
            }
        }
    }
}

/// A matched smoothing/derivative tap pair.
///
/// Invariants enforced at construction:
/// - `d0` even-symmetric about the center, `d1` odd-antisymmetric;
/// - taps of `d0` sum to 1;
/// - convolving an integer ramp with `d1` yields exactly 1 (so the pair
///   reports derivatives in units of 1/sample, positive on a rising ramp).
#[derive(Debug, Clone, PartialEq)]
pub struct KernelPair {
    label: String,
    d0: Vec<f64>,
    d1: Vec<f64>,
}

impl KernelPair {
    /// Build a pair from full tap vectors, checking every invariant.
    ///
    /// Odd-length taps sit on integer offsets `-H..H`; even-length taps sit
    /// on half-sample offsets `+-0.5, +-1.5, ...`.
    pub fn from_taps(label: impl Into<String>, d0: Vec<f64>, d1: Vec<f64>) -> Result<Self> {
        let label = label.into();
        if d0.len() != d1.len() {
            return Err(Error::InvalidDesign(format!(
                "d0 has {} taps but d1 has {}",
                d0.len(),
                d1.len()
            )));
        }
        if d0.len() < 3 {
            return Err(Error::InvalidDesign("support too small".into()));
        }
        let n = d0.len();
        for k in 0..n / 2 {
            if (d0[k] - d0[n - 1 - k]).abs() > INVARIANT_TOL {
                return Err(Error::InvalidDesign(format!(
                    "{label}: d0 not even-symmetric at tap {k}"
                )));
            }
            if (d1[k] + d1[n - 1 - k]).abs() > INVARIANT_TOL {
                return Err(Error::InvalidDesign(format!(
                    "{label}: d1 not odd-antisymmetric at tap {k}"
                )));
            }
        }
        if n % 2 == 1 && d1[n / 2].abs() > INVARIANT_TOL {
            return Err(Error::InvalidDesign(format!(
                "{label}: center tap of d1 must vanish"
            )));
        }
        let pair = Self { label, d0, d1 };
        let dc: f64 = pair.d0.iter().sum();
        if (dc - 1.0).abs() > INVARIANT_TOL {
            return Err(Error::InvalidDesign(format!(
                "{}: d0 taps sum to {dc}, expected 1",
                pair.label
            )));
        }
        let ramp = pair.ramp_response();
        if (ramp - 1.0).abs() > INVARIANT_TOL {
            return Err(Error::InvalidDesign(format!(
                "{}: ramp response {ramp}, expected 1",
                pair.label
            )));
        }
        Ok(pair)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of taps (3, 5, 7, ... or 4 for the half-sample pair).
    pub fn support(&self) -> usize {
        self.d0.len()
    }

    pub fn smooth_taps(&self) -> &[f64] {
        &self.d0
    }

    pub fn deriv_taps(&self) -> &[f64] {
        &self.d1
    }

    /// True for even supports, whose taps sit between samples.
    pub fn is_half_sample(&self) -> bool {
        self.d0.len() % 2 == 0
    }

    /// Offset of tap `k` in samples; half-integers for even supports.
    pub fn offset(&self, k: usize) -> f64 {
        k as f64 - (self.d0.len() as f64 - 1.0) / 2.0
    }

    /// Largest tap offset magnitude in samples.
    pub fn max_offset(&self) -> f64 {
        (self.d0.len() as f64 - 1.0) / 2.0
    }

    /// Evaluation shift in samples: half-sample pairs estimate between
    /// samples, integer pairs on them.
    pub fn eval_shift(&self) -> f64 {
        if self.is_half_sample() {
            0.5
        } else {
            0.0
        }
    }

    /// Whole-sample reach of the pair along one axis, `ceil(max offset +
    /// evaluation shift)`. A surface must provide at least this margin.
    pub fn required_margin(&self) -> usize {
        (self.max_offset() + self.eval_shift()).ceil() as usize
    }

    /// `sum_j (-offset_j) * d1[j]`; exactly the output of convolving an
    /// integer ramp with `d1`.
    pub fn ramp_response(&self) -> f64 {
        self.d1
            .iter()
            .enumerate()
            .map(|(k, &t)| -self.offset(k) * t)
            .sum()
    }

    /// Transfer function of `d0` at `omega` rad/sample. Real by symmetry.
    pub fn smooth_response(&self, omega: f64) -> f64 {
        self.d0
            .iter()
            .enumerate()
            .map(|(k, &t)| t * (omega * self.offset(k)).cos())
            .sum()
    }

    /// Imaginary part of the transfer function of `d1` at `omega` rad/sample
    /// (the real part vanishes by antisymmetry): `D1(omega) = i * S(omega)`.
    pub fn deriv_response_im(&self, omega: f64) -> f64 {
        -self
            .d1
            .iter()
            .enumerate()
            .map(|(k, &t)| t * (omega * self.offset(k)).sin())
            .sum::<f64>()
    }
}

/// Discrete-time Fourier transform `sum_n taps[n] e^(-i omega n)` of a tap
/// sequence centered on integer offsets `-H..H` (odd length).
pub fn frequency_response(taps: &[f64], omega: f64) -> Complex64 {
    assert!(taps.len() % 2 == 1, "centered taps need odd length");
    let h = (taps.len() / 2) as isize;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &t) in taps.iter().enumerate() {
        let n = k as isize - h;
        let phase = -omega * n as f64;
        acc += Complex64::new(t * phase.cos(), t * phase.sin());
    }
    acc
}

/// Squared deviation from the ideal derivative relationship at one frequency:
/// `|i omega D0(omega) - D1(omega)|^2`.
pub fn matching_integrand(pair: &KernelPair, omega: f64) -> f64 {
    let r = omega * pair.smooth_response(omega) - pair.deriv_response_im(omega);
    r * r
}

/// Weighted mean of [`matching_integrand`] over the spec's frequency grid.
///
/// Rejects pairs whose support differs from the spec the score is defined on.
pub fn matching_error(pair: &KernelPair, spec: &DesignSpec) -> Result<f64> {
    if pair.support() != spec.support {
        return Err(Error::SupportMismatch {
            pair: pair.support(),
            spec: spec.support,
        });
    }
    Ok(matching_error_raw(
        pair.smooth_taps(),
        pair.deriv_taps(),
        spec,
    ))
}

/// The matching objective on raw centered tap vectors, without any pair
/// invariant checks. This is what the designer minimizes; it is exposed so
/// the objective can be audited on arbitrary tap sets.
pub fn matching_error_raw(d0: &[f64], d1: &[f64], spec: &DesignSpec) -> f64 {
    assert_eq!(d0.len(), d1.len());
    let offset0 = -(d0.len() as f64 - 1.0) / 2.0;
    let mut num = 0.0;
    let mut den = 0.0;
    for omega in spec.frequencies() {
        let mut re0 = 0.0;
        let mut im1 = 0.0;
        for k in 0..d0.len() {
            let x = offset0 + k as f64;
            re0 += d0[k] * (omega * x).cos();
            im1 -= d1[k] * (omega * x).sin();
        }
        let r = omega * re0 - im1;
        let w = spec.weight_at(omega);
        num += w * r * r;
        den += w;
    }
    num / den
}

/// Design the pair minimizing [`matching_error`] subject to the pair
/// invariants. Deterministic: the objective is quadratic in the taps, so the
/// constrained minimum is found by a single equality-eliminated
/// least-squares solve.
pub fn design_pair(spec: &DesignSpec) -> Result<KernelPair> {
    let params = DesignParams::for_support(spec.support);
    let n_free = params.n_free();

    // Residual r(omega) is affine in the free parameters; build the normal
    // equations column by column.
    let omegas: Vec<f64> = spec.frequencies().collect();
    let weights: Vec<f64> = omegas.iter().map(|&w| spec.weight_at(w)).collect();
    let base = params.residuals(&vec![0.0; n_free], &omegas);
    let mut cols = Vec::with_capacity(n_free);
    for j in 0..n_free {
        let mut unit = vec![0.0; n_free];
        unit[j] = 1.0;
        let r = params.residuals(&unit, &omegas);
        cols.push(
            r.iter()
                .zip(&base)
                .map(|(a, b)| a - b)
                .collect::<Vec<f64>>(),
        );
    }
    let mut gram = vec![0.0; n_free * n_free];
    let mut rhs = vec![0.0; n_free];
    for i in 0..n_free {
        for j in 0..=i {
            let s: f64 = (0..omegas.len())
                .map(|k| weights[k] * cols[i][k] * cols[j][k])
                .sum();
            gram[i * n_free + j] = s;
            gram[j * n_free + i] = s;
        }
        rhs[i] = -(0..omegas.len())
            .map(|k| weights[k] * cols[i][k] * base[k])
            .sum::<f64>();
    }
    let free = if n_free == 0 {
        Vec::new()
    } else {
        solve_spd(&gram, &rhs, n_free)
            .ok_or_else(|| Error::DesignSolve("normal equations not positive definite".into()))?
    };
    let (d0, d1) = params.taps(&free);
    KernelPair::from_taps(format!("DK{}", spec.support), d0, d1)
}

/// Sampled Gaussian smoothing kernel and its sampled derivative, renormalized
/// to satisfy the pair invariants so comparisons against designed pairs
/// isolate matching quality rather than moment errors.
pub fn sampled_gaussian_pair(sigma: f64, support: usize) -> Result<KernelPair> {
    if support < 3 || support % 2 == 0 {
        return Err(Error::InvalidDesign(format!(
            "gaussian pair needs odd support >= 3, got {support}"
        )));
    }
    if !(sigma > 0.0) {
        return Err(Error::InvalidDesign(format!("sigma {sigma} must be > 0")));
    }
    let h = (support / 2) as isize;
    let mut d0: Vec<f64> = (-h..=h)
        .map(|j| (-((j * j) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let mut d1: Vec<f64> = (-h..=h)
        .map(|j| {
            let x = j as f64;
            -x * (-(x * x) / (2.0 * sigma * sigma)).exp() / (sigma * sigma)
        })
        .collect();
    let dc: f64 = d0.iter().sum();
    d0.iter_mut().for_each(|t| *t /= dc);
    let ramp: f64 = d1
        .iter()
        .enumerate()
        .map(|(k, &t)| -(k as f64 - h as f64) * t)
        .sum();
    d1.iter_mut().for_each(|t| *t /= ramp);
    // exact zero at the center; the formula gives -0.0
    d1[h as usize] = 0.0;
    KernelPair::from_taps(format!("gauss-{support}"), d0, d1)
}

/// Plain-text kernel catalog: one row per tap, 17 significant digits, so
/// designed pairs are auditable and portable.
pub fn catalog_table(pairs: &[KernelPair]) -> String {
    let mut out = String::from("label, offset, d0, d1\n");
    for p in pairs {
        for k in 0..p.support() {
            out.push_str(&format!(
                "{}, {}, {}, {}\n",
                p.label(),
                p.offset(k),
                g17(p.smooth_taps()[k]),
                g17(p.deriv_taps()[k]),
            ));
        }
    }
    out
}

/// Free-parameter encoding of the constrained tap space.
///
/// After symmetry reduction the unknowns are the positive-offset taps. The DC
/// constraint eliminates one `d0` unknown and the unit-moment constraint one
/// `d1` unknown; what remains is unconstrained.
struct DesignParams {
    /// positive tap offsets, ascending (1,2,.. or 0.5,1.5,..)
    pos: Vec<f64>,
    half: bool,
}

impl DesignParams {
    fn for_support(support: usize) -> Self {
        if support % 2 == 1 {
            let h = support / 2;
            Self {
                pos: (1..=h).map(|j| j as f64).collect(),
                half: false,
            }
        } else {
            let h = support / 2;
            Self {
                pos: (0..h).map(|j| j as f64 + 0.5).collect(),
                half: true,
            }
        }
    }

    fn n_free(&self) -> usize {
        let d0_free = if self.half {
            self.pos.len() - 1
        } else {
            self.pos.len()
        };
        d0_free + self.pos.len() - 1
    }

    /// Positive-offset taps (u for d0, v for d1) from the free parameters.
    fn expand(&self, free: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let m = self.pos.len();
        let (u, v) = if self.half {
            // DC: 2 * sum(u) = 1 pins the innermost d0 tap.
            let ufree = &free[..m - 1];
            let mut u = Vec::with_capacity(m);
            u.push(0.5 - ufree.iter().sum::<f64>());
            u.extend_from_slice(ufree);
            (u, &free[m - 1..])
        } else {
            (free[..m].to_vec(), &free[m..])
        };
        // moment: sum_j offset_j * v_j = -1/2 pins the innermost d1 tap.
        let mut vfull = Vec::with_capacity(m);
        let tail: f64 = v
            .iter()
            .zip(self.pos.iter().skip(1))
            .map(|(vj, x)| vj * x)
            .sum();
        vfull.push((-0.5 - tail) / self.pos[0]);
        vfull.extend_from_slice(v);
        (u, vfull)
    }

    /// `omega * D0(omega) - S(omega)` at every sampled frequency.
    fn residuals(&self, free: &[f64], omegas: &[f64]) -> Vec<f64> {
        let (u, v) = self.expand(free);
        let center = if self.half {
            0.0
        } else {
            1.0 - 2.0 * u.iter().sum::<f64>()
        };
        omegas
            .iter()
            .map(|&w| {
                let mut re0 = center;
                let mut s = 0.0;
                for (j, &x) in self.pos.iter().enumerate() {
                    re0 += 2.0 * u[j] * (w * x).cos();
                    // d1 at +x is v[j], at -x is -v[j]; S = -sum d1 sin
                    s += -2.0 * v[j] * (w * x).sin();
                }
                w * re0 - s
            })
            .collect()
    }

    /// Full centered tap vectors from the free parameters.
    fn taps(&self, free: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let (u, v) = self.expand(free);
        let mut d0 = Vec::new();
        let mut d1 = Vec::new();
        for j in (0..self.pos.len()).rev() {
            d0.push(u[j]);
            d1.push(-v[j]);
        }
        if !self.half {
            d0.push(1.0 - 2.0 * u.iter().sum::<f64>());
            d1.push(0.0);
        }
        for j in 0..self.pos.len() {
            d0.push(u[j]);
            d1.push(v[j]);
        }
        (d0, d1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn delta_central_pair(support: usize) -> KernelPair {
        let mut d0 = vec![0.0; support];
        let mut d1 = vec![0.0; support];
        let h = support / 2;
        d0[h] = 1.0;
        d1[h - 1] = 0.5;
        d1[h + 1] = -0.5;
        KernelPair::from_taps(format!("cdiff-{support}"), d0, d1).unwrap()
    }

    #[test]
    fn delta_kernel_response_is_one() {
        for &w in &[0.0, 0.3, 1.0, PI] {
            let r = frequency_response(&[0.0, 1.0, 0.0], w);
            assert!((r.re - 1.0).abs() < 1e-15 && r.im.abs() < 1e-15);
        }
    }

    #[test]
    fn central_difference_response_is_i_sin() {
        let r = frequency_response(&[0.5, 0.0, -0.5], PI / 2.0);
        assert!(r.re.abs() < 1e-15);
        assert!((r.im - 1.0).abs() < 1e-15);
        for &w in &[0.2, 0.9, 2.5] {
            let r = frequency_response(&[0.5, 0.0, -0.5], w);
            assert!((r.im - w.sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn binomial_kernel_vanishes_at_nyquist() {
        let r = frequency_response(&[0.25, 0.5, 0.25], PI);
        assert!(r.norm() < 1e-15);
    }

    #[test]
    fn antisymmetric_taps_have_zero_real_part() {
        let pair = design_pair(&DesignSpec::with_support(5).unwrap()).unwrap();
        for k in 0..=100 {
            let w = PI * k as f64 / 100.0;
            let r = frequency_response(pair.deriv_taps(), w);
            assert!(r.re.abs() < 1e-12);
        }
    }

    #[test]
    fn matching_integrand_closed_form_for_central_difference() {
        // d0 = delta so D0 = 1, d1 = central difference so D1 = i sin(omega);
        // the integrand at omega is (omega - sin omega)^2.
        let pair = delta_central_pair(3);
        let w = PI / 2.0;
        let expected = (w - w.sin()) * (w - w.sin());
        assert!((matching_integrand(&pair, w) - expected).abs() < 1e-12);
        assert!((expected - 0.32580).abs() < 1e-5);
    }

    #[test]
    fn matching_error_vanishes_as_band_shrinks() {
        let pair = delta_central_pair(3);
        let spec = DesignSpec::new(3, 1e-3, WeightKind::Uniform, 64).unwrap();
        assert!(matching_error(&pair, &spec).unwrap() < 1e-15);
    }

    #[test]
    fn matching_error_rejects_support_mismatch() {
        let pair = delta_central_pair(3);
        let spec = DesignSpec::with_support(5).unwrap();
        assert!(matches!(
            matching_error(&pair, &spec),
            Err(Error::SupportMismatch { pair: 3, spec: 5 })
        ));
    }

    #[test]
    fn design_support_3_forces_central_difference() {
        let pair = design_pair(&DesignSpec::with_support(3).unwrap()).unwrap();
        assert!((pair.deriv_taps()[0] - 0.5).abs() < 1e-12);
        assert!((pair.deriv_taps()[2] + 0.5).abs() < 1e-12);
        let alpha = pair.smooth_taps()[0];
        assert!(alpha > 0.0 && alpha < 0.5);
        // regression value computed independently with a dense scan
        assert!((alpha - 0.198199).abs() < 1e-4);
    }

    #[test]
    fn design_is_deterministic_bitwise() {
        let spec = DesignSpec::with_support(5).unwrap();
        let a = design_pair(&spec).unwrap();
        let b = design_pair(&spec).unwrap();
        for k in 0..5 {
            assert_eq!(
                a.smooth_taps()[k].to_bits(),
                b.smooth_taps()[k].to_bits()
            );
            assert_eq!(a.deriv_taps()[k].to_bits(), b.deriv_taps()[k].to_bits());
        }
    }

    #[test]
    fn designed_pairs_beat_gaussian_and_central_difference() {
        for support in [3usize, 5, 7] {
            let spec = DesignSpec::with_support(support).unwrap();
            let dk = design_pair(&spec).unwrap();
            let e_dk = matching_error(&dk, &spec).unwrap();
            let gauss = sampled_gaussian_pair(support as f64 / 5.0, support).unwrap();
            assert!(e_dk < matching_error(&gauss, &spec).unwrap());
            let cd = delta_central_pair(support);
            assert!(e_dk <= matching_error(&cd, &spec).unwrap());
        }
    }

    #[test]
    fn four_point_pair_sits_between_three_and_five() {
        let e3 = matching_error(
            &design_pair(&DesignSpec::with_support(3).unwrap()).unwrap(),
            &DesignSpec::with_support(3).unwrap(),
        )
        .unwrap();
        let e4 = matching_error(
            &design_pair(&DesignSpec::with_support(4).unwrap()).unwrap(),
            &DesignSpec::with_support(4).unwrap(),
        )
        .unwrap();
        let e5 = matching_error(
            &design_pair(&DesignSpec::with_support(5).unwrap()).unwrap(),
            &DesignSpec::with_support(5).unwrap(),
        )
        .unwrap();
        assert!(e5 < e4 && e4 < e3);
    }

    #[test]
    fn half_sample_pair_satisfies_invariants() {
        let pair = design_pair(&DesignSpec::with_support(4).unwrap()).unwrap();
        assert!(pair.is_half_sample());
        assert_eq!(pair.offset(0), -1.5);
        assert_eq!(pair.offset(3), 1.5);
        assert!((pair.smooth_taps().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((pair.ramp_response() - 1.0).abs() < 1e-12);
        assert_eq!(pair.required_margin(), 2);
    }

    #[test]
    fn gaussian_flat_limit_recovers_central_difference() {
        let pair = sampled_gaussian_pair(1e6, 3).unwrap();
        for t in pair.smooth_taps() {
            assert!((t - 1.0 / 3.0).abs() < 1e-9);
        }
        assert!((pair.deriv_taps()[0] - 0.5).abs() < 1e-9);
        assert!((pair.deriv_taps()[2] + 0.5).abs() < 1e-9);
    }

    #[test]
    fn gaussian_pair_invariants_hold_tightly() {
        let pair = sampled_gaussian_pair(1.0, 5).unwrap();
        assert!((pair.smooth_taps().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((pair.ramp_response() - 1.0).abs() < 1e-12);
        for k in 0..5 {
            assert_eq!(pair.smooth_taps()[k], pair.smooth_taps()[4 - k]);
            assert_eq!(pair.deriv_taps()[k], -pair.deriv_taps()[4 - k]);
        }
    }

    #[test]
    fn objective_invariant_under_reversal_with_sign_flip() {
        // On raw (asymmetric) taps: reversing both tap vectors and flipping
        // the sign of d1 conjugates the integrand, leaving the error equal.
        let d0 = [0.1, 0.7, 0.3];
        let d1 = [0.4, -0.1, -0.2];
        let d0r = [0.3, 0.7, 0.1];
        let d1r = [0.2, 0.1, -0.4];
        let spec = DesignSpec::new(3, 0.8 * PI, WeightKind::Uniform, 64).unwrap();
        let a = matching_error_raw(&d0, &d1, &spec);
        let b = matching_error_raw(&d0r, &d1r, &spec);
        assert!((a - b).abs() < 1e-14 * a.max(1.0));
    }

    #[test]
    fn raised_cosine_weight_changes_the_optimum() {
        let uni = design_pair(&DesignSpec::with_support(5).unwrap()).unwrap();
        let rc = design_pair(
            &DesignSpec::new(5, DesignSpec::DEFAULT_BAND_EDGE, WeightKind::RaisedCosine, 1024)
                .unwrap(),
        )
        .unwrap();
        assert!((uni.smooth_taps()[0] - rc.smooth_taps()[0]).abs() > 1e-6);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(DesignSpec::with_support(1).is_err());
        assert!(DesignSpec::new(3, 0.0, WeightKind::Uniform, 1024).is_err());
        assert!(DesignSpec::new(3, 4.0, WeightKind::Uniform, 1024).is_err());
        assert!(DesignSpec::new(5, 1.0, WeightKind::Uniform, 16).is_err());
    }

    #[test]
    fn catalog_rows_and_digits() {
        let dk5 = design_pair(&DesignSpec::with_support(5).unwrap()).unwrap();
        let dk4 = design_pair(&DesignSpec::with_support(4).unwrap()).unwrap();
        let table = catalog_table(&[dk5.clone(), dk4]);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "label, offset, d0, d1");
        assert_eq!(lines.len(), 1 + 5 + 4);
        // taps parse back to the exact bits
        let row: Vec<&str> = lines[1].split(", ").collect();
        assert_eq!(row[0], "DK5");
        assert_eq!(row[1], "-2");
        let back: f64 = row[2].parse().unwrap();
        assert_eq!(back.to_bits(), dk5.smooth_taps()[0].to_bits());
    }
}
