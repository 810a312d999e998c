//! The pair energy `ν(σ) = log‖σ·w‖² - log‖σ·v‖²`, Fubini–Study distances
//! and 1-PS energy profiles. Inputs are exact; only the final logarithms and
//! angles are floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{pairing, Cocharacter};
use crate::linalg::Matrix;
use crate::pairs::{random_conjugator, Pair};
use crate::rational::{ln, to_f64, Q};
use crate::rep::{ModuleDescriptor, Shape, WeightedVector};

/// Hermitian norm on a module, diagonal in the monomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormKind {
    /// Monomial basis orthonormal.
    #[default]
    WeightOrthonormal,
    /// `Σ |a_i|² / C(d, i)` on `Sym(d)` of SL(2); invariant under SU(2).
    Bombieri,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianStructure {
    pub module: ModuleDescriptor,
    pub kind: NormKind,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

impl HermitianStructure {
    pub fn new(module: ModuleDescriptor, kind: NormKind) -> Result<Self> {
        if kind == NormKind::Bombieri && !(module.n == 1 && matches!(module.shape, Shape::Sym(_))) {
            return Err(Error::UnsupportedShape(format!(
                "Bombieri norm needs Sym(d) of SL(2), got {module}"
            )));
        }
        Ok(HermitianStructure { module, kind })
    }

    pub fn orthonormal(module: ModuleDescriptor) -> Self {
        HermitianStructure {
            module,
            kind: NormKind::WeightOrthonormal,
        }
    }

    /// Diagonal Gram entry of a basis vector.
    pub fn gram(&self, key: &[i64]) -> Q {
        match (self.kind, &self.module.shape) {
            (NormKind::Bombieri, Shape::Sym(d)) => {
                Q::new(BigInt::one(), binomial(*d, key[0] as usize))
            }
            _ => Q::one(),
        }
    }

    pub fn norm_sq(&self, v: &WeightedVector) -> Result<Q> {
        if v.module() != &self.module {
            return Err(Error::Invalid(format!(
                "vector in {} measured with a norm on {}",
                v.module(),
                self.module
            )));
        }
        Ok(v.terms().iter().map(|(k, c)| self.gram(k) * c * c).sum())
    }
}

/// Norms on both members of a pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairNorms {
    pub v: HermitianStructure,
    pub w: HermitianStructure,
}

impl PairNorms {
    pub fn orthonormal(p: &Pair) -> Self {
        PairNorms {
            v: HermitianStructure::orthonormal(p.v().module().clone()),
            w: HermitianStructure::orthonormal(p.w().module().clone()),
        }
    }

    pub fn with_kind(p: &Pair, kind: NormKind) -> Result<Self> {
        Ok(PairNorms {
            v: HermitianStructure::new(p.v().module().clone(), kind)?,
            w: HermitianStructure::new(p.w().module().clone(), kind)?,
        })
    }

    pub fn swapped(&self) -> Self {
        PairNorms {
            v: self.w.clone(),
            w: self.v.clone(),
        }
    }
}

fn ln_norm_sq(h: &HermitianStructure, v: &WeightedVector) -> Result<f64> {
    let n = h.norm_sq(v)?;
    if n.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(ln(&n))
}

/// `log‖σ·w‖² - log‖σ·v‖²`.
pub fn energy(p: &Pair, sigma: &Matrix, h: &PairNorms) -> Result<f64> {
    let q = p.conjugated(sigma)?;
    Ok(ln_norm_sq(&h.w, q.w())? - ln_norm_sq(&h.v, q.v())?)
}

/// Fubini–Study distance between `[x]` and `[y]` for the diagonal Gram matrix
/// `gram`, computed as `atan2(‖x ∧ y‖, |⟨x, y⟩|)` for accuracy at small angles.
pub fn fs_distance(x: &[f64], y: &[f64], gram: &[f64]) -> Result<f64> {
    let (wedge, ip) = wedge_and_ip(x, y, gram)?;
    Ok(wedge.atan2(ip))
}

/// `tan d_g([x], [y])`, computed without passing through the angle so that
/// it stays accurate near `π/2`.
pub fn fs_tan(x: &[f64], y: &[f64], gram: &[f64]) -> Result<f64> {
    let (wedge, ip) = wedge_and_ip(x, y, gram)?;
    Ok(wedge / ip)
}

fn wedge_and_ip(x: &[f64], y: &[f64], gram: &[f64]) -> Result<(f64, f64)> {
    if x.len() != y.len() || x.len() != gram.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len().min(gram.len()),
        });
    }
    let ip = |a: &[f64], b: &[f64]| -> f64 {
        a.iter().zip(b).zip(gram).map(|((p, q), g)| p * q * g).sum()
    };
    if ip(x, x) == 0.0 || ip(y, y) == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut wedge = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let m = x[i] * y[j] - x[j] * y[i];
            wedge += gram[i] * gram[j] * m * m;
        }
    }
    Ok((wedge.sqrt(), ip(x, y).abs()))
}

fn dense_with_gram(h: &HermitianStructure, v: &WeightedVector) -> (Vec<f64>, Vec<f64>) {
    let basis = h.module.basis();
    let vals = basis.iter().map(|k| to_f64(&v.coefficient(k))).collect();
    let gram = basis.iter().map(|k| to_f64(&h.gram(k))).collect();
    (vals, gram)
}

/// `|ν(σ) - log tan² d(σ·[(v, w)], σ·[(v, 0)])|` in `V ⊕ W` with the
/// orthogonal sum norm.
pub fn distance_identity_residual(p: &Pair, sigma: &Matrix, h: &PairNorms) -> Result<f64> {
    let q = p.conjugated(sigma)?;
    let nu = ln_norm_sq(&h.w, q.w())? - ln_norm_sq(&h.v, q.v())?;
    let (sv, gv) = dense_with_gram(&h.v, q.v());
    let (sw, gw) = dense_with_gram(&h.w, q.w());
    let x: Vec<f64> = sv.iter().chain(&sw).copied().collect();
    let y: Vec<f64> = sv
        .iter()
        .copied()
        .chain(std::iter::repeat_n(0.0, sw.len()))
        .collect();
    let gram: Vec<f64> = gv.into_iter().chain(gw).collect();
    let tan = fs_tan(&x, &y, &gram)?;
    if !tan.is_finite() || tan == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((nu - 2.0 * tan.ln()).abs())
}

/// Samples `ν(λ_u(t))` along a decreasing grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyProfile {
    pub cocharacter: Cocharacter,
    /// `(t, ν)` with `t` strictly decreasing.
    pub samples: Vec<(f64, f64)>,
}

impl EnergyProfile {
    /// Rows `t, log t², ν`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,log_t2,nu\n");
        for (t, nu) in &self.samples {
            out.push_str(&format!("{t:e},{},{nu}\n", 2.0 * t.ln()));
        }
        out
    }
}

/// `ln Σ_k g_k c_k² t^{2⟨χ_k, u⟩}`, evaluated with a log-sum-exp.
fn ln_norm_along(
    h: &HermitianStructure,
    v: &WeightedVector,
    u: &Cocharacter,
    ln_t: f64,
) -> Result<f64> {
    let mut exps = Vec::with_capacity(v.terms().len());
    for (k, c) in v.terms() {
        let m = pairing(&v.module().weight_of(k), u)?;
        exps.push(ln(&(h.gram(k) * c * c)) + 2.0 * m as f64 * ln_t);
    }
    let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(top + exps.iter().map(|e| (e - top).exp()).sum::<f64>().ln())
}

pub fn energy_along_1ps(
    p: &Pair,
    u: &Cocharacter,
    grid: &[f64],
    h: &PairNorms,
) -> Result<EnergyProfile> {
    if grid.is_empty() {
        return Err(Error::Empty("t grid"));
    }
    if grid.iter().any(|t| !(*t > 0.0 && *t <= 1.0)) {
        return Err(Error::Invalid("t values must lie in (0, 1]".into()));
    }
    if grid.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Invalid("t grid must be strictly decreasing".into()));
    }
    let mut samples = Vec::with_capacity(grid.len());
    for &t in grid {
        let lt = t.ln();
        samples.push((
            t,
            ln_norm_along(&h.w, p.w(), u, lt)? - ln_norm_along(&h.v, p.v(), u, lt)?,
        ));
    }
    Ok(EnergyProfile {
        cocharacter: u.clone(),
        samples,
    })
}

/// Geometric grid from 1 down to `t_min` with `per_decade` points per decade.
pub fn log_grid(t_min: f64, per_decade: usize) -> Result<Vec<f64>> {
    if !(t_min > 0.0 && t_min < 1.0) || per_decade == 0 {
        return Err(Error::Invalid(format!(
            "grid needs 0 < t_min < 1, got {t_min}"
        )));
    }
    let decades = -t_min.log10();
    let n = (decades * per_decade as f64).ceil() as usize;
    Ok((0..=n)
        .map(|k| 10f64.powf(-decades * k as f64 / n as f64))
        .collect())
}

/// Least-squares slope of `ν` against `log t²` over the tail of the profile:
/// the samples with `t ≤ 100·t_min`, or the last three if fewer.
pub fn asymptotic_slope(profile: &EnergyProfile) -> Result<f64> {
    let s = &profile.samples;
    if s.len() < 3 {
        return Err(Error::InsufficientSamples(format!(
            "{} samples, need 3",
            s.len()
        )));
    }
    let (t_max, t_min) = (s[0].0, s[s.len() - 1].0);
    if (t_max / t_min).log10() < 2.0 - 1e-9 {
        return Err(Error::InsufficientSamples(
            "grid spans fewer than 2 decades".into(),
        ));
    }
    let mut tail: Vec<(f64, f64)> = s
        .iter()
        .filter(|(t, _)| *t <= 100.0 * t_min)
        .copied()
        .collect();
    if tail.len() < 3 {
        tail = s[s.len() - 3..].to_vec();
    }
    let xs: Vec<f64> = tail.iter().map(|(t, _)| 2.0 * t.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = tail.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxy: f64 = xs
        .iter()
        .zip(&tail)
        .map(|(x, (_, y))| (x - mx) * (y - my))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// Best energy seen over random conjugators. This is only a sampled upper
/// bound for the infimum, never the infimum itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfimumSample {
    pub best: f64,
    #[serde(serialize_with = "crate::io::ser_matrix")]
    pub best_conjugator: Matrix,
    pub evaluated: usize,
}

pub fn sample_energy_infimum(
    p: &Pair,
    h: &PairNorms,
    samples: usize,
    seed: u64,
) -> Result<InfimumSample> {
    let id = Matrix::identity(p.rank());
    let mut best = InfimumSample {
        best: energy(p, &id, h)?,
        best_conjugator: id,
        evaluated: 1,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let sigma = random_conjugator(p.rank(), &mut rng);
        let e = energy(p, &sigma, h)?;
        best.evaluated += 1;
        if e < best.best {
            best.best = e;
            best.best_conjugator = sigma;
        }
    }
    Ok(best)
}

/// `diag(h)` as a matrix, for evaluating torus elements through [`energy`].
pub fn diagonal(h: &[Q]) -> Matrix {
    let mut m = Matrix::zeros(h.len(), h.len());
    for (i, x) in h.iter().enumerate() {
        m[(i, i)] = x.clone();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::futaki_gen;
    use crate::rational::{int, ratio};
    use crate::rep::one_parameter_subgroup;

    fn sym2(d: usize, terms: &[(i64, i64)]) -> WeightedVector {
        let m = ModuleDescriptor::sym(1, d);
        WeightedVector::new(
            m,
            terms.iter().map(|&(i, c)| (vec![i, d as i64 - i], int(c))),
        )
        .unwrap()
    }

    fn u(c: &[i64]) -> Cocharacter {
        Cocharacter::new(c.to_vec()).unwrap()
    }

    #[test]
    fn identity_energy() {
        let p = Pair::new(sym2(2, &[(0, 1), (2, 2)]), sym2(3, &[(1, 3)])).unwrap();
        let h = PairNorms::orthonormal(&p);
        let e = energy(&p, &Matrix::identity(2), &h).unwrap();
        assert!((e - (9f64.ln() - 5f64.ln())).abs() < 1e-12);
        assert!(distance_identity_residual(&p, &Matrix::identity(2), &h).unwrap() < 1e-12);
    }

    #[test]
    fn singleton_energy_is_linear() {
        let p = Pair::new(sym2(1, &[(1, 1)]), sym2(4, &[(4, 1)])).unwrap();
        let h = PairNorms::orthonormal(&p);
        let nu0 = energy(&p, &Matrix::identity(2), &h).unwrap();
        let uu = u(&[1, -1]);
        let f = futaki_gen(&p, &uu).unwrap() as f64;
        for k in 1..5 {
            let t = ratio(1, 10i64.pow(k));
            let e = energy(&p, &diagonal(&one_parameter_subgroup(&uu, &t)), &h).unwrap();
            assert!((e - (f * 2.0 * to_f64(&t).ln() + nu0)).abs() < 1e-9);
        }
    }

    #[test]
    fn bombieri_unitary_invariance() {
        let p = Pair::new(
            sym2(2, &[(0, 1), (1, -2), (2, 5)]),
            sym2(4, &[(0, 3), (1, 1), (3, -1), (4, 2)]),
        )
        .unwrap();
        let h = PairNorms::with_kind(&p, NormKind::Bombieri).unwrap();
        let rot = Matrix::from_rows(vec![
            vec![ratio(3, 5), ratio(-4, 5)],
            vec![ratio(4, 5), ratio(3, 5)],
        ]);
        let sigma = Matrix::from_i64(&[vec![2, 1], vec![3, 2]]);
        let a = energy(&p, &sigma, &h).unwrap();
        let b = energy(&p, &(&rot * &sigma), &h).unwrap();
        assert!((a - b).abs() < 1e-12);
        let o = PairNorms::orthonormal(&p);
        let c = energy(&p, &(&rot * &sigma), &o).unwrap();
        assert!((energy(&p, &sigma, &o).unwrap() - c).abs() > 1e-6);
        assert!(HermitianStructure::new(ModuleDescriptor::sym(2, 2), NormKind::Bombieri).is_err());
    }

    #[test]
    fn fs_distance_examples() {
        let g = [1.0, 1.0];
        assert!(fs_distance(&[1.0, 2.0], &[1.0, 2.0], &g).unwrap().abs() < 1e-15);
        assert!(
            (fs_distance(&[1.0, 0.0], &[0.0, 3.0], &g).unwrap() - std::f64::consts::FRAC_PI_2)
                .abs()
                < 1e-15
        );
        let s = 0.5f64.sqrt();
        assert!(
            (fs_distance(&[1.0, 0.0], &[s, s], &g).unwrap() - std::f64::consts::FRAC_PI_4).abs()
                < 1e-12
        );
        assert!(fs_distance(&[0.0, 0.0], &[1.0, 0.0], &g).is_err());
    }

    #[test]
    fn profiles_and_slopes() {
        let one = WeightedVector::one(1);
        let grid = log_grid(1e-6, 4).unwrap();
        let uu = u(&[1, -1]);
        let vv = Pair::new(sym2(3, &[(1, 1), (2, 1)]), sym2(3, &[(1, 1), (2, 1)])).unwrap();
        let prof = energy_along_1ps(&vv, &uu, &grid, &PairNorms::orthonormal(&vv)).unwrap();
        assert!(prof.samples.iter().all(|(_, nu)| nu.abs() < 1e-12));
        assert!(asymptotic_slope(&prof).unwrap().abs() < 1e-9);
        let e2 = Pair::new(one.clone(), sym2(2, &[(2, 1)])).unwrap();
        let prof = energy_along_1ps(&e2, &uu, &grid, &PairNorms::orthonormal(&e2)).unwrap();
        assert!((asymptotic_slope(&prof).unwrap() - 2.0).abs() < 1e-3);
        for d in 1..6usize {
            let p = Pair::new(one.clone(), sym2(d + 1, &[(d as i64, 1)])).unwrap();
            let prof = energy_along_1ps(&p, &uu, &grid, &PairNorms::orthonormal(&p)).unwrap();
            assert!((asymptotic_slope(&prof).unwrap() - (d as f64 - 1.0)).abs() < 1e-3);
        }
    }

    #[test]
    fn slope_needs_two_decades() {
        let p = Pair::new(WeightedVector::one(1), sym2(2, &[(2, 1)])).unwrap();
        let h = PairNorms::orthonormal(&p);
        let prof = energy_along_1ps(&p, &u(&[1, -1]), &[1.0, 0.5, 0.1], &h).unwrap();
        assert!(matches!(
            asymptotic_slope(&prof),
            Err(Error::InsufficientSamples(_))
        ));
        assert!(energy_along_1ps(&p, &u(&[1, -1]), &[], &h).is_err());
        assert!(energy_along_1ps(&p, &u(&[1, -1]), &[0.1, 0.5], &h).is_err());
    }

    #[test]
    fn antisymmetry_and_sampler() {
        let p = Pair::new(sym2(2, &[(0, 1), (1, 1)]), sym2(4, &[(2, 1), (4, -1)])).unwrap();
        let h = PairNorms::orthonormal(&p);
        let sigma = Matrix::from_i64(&[vec![1, 2], vec![1, 3]]);
        let a = energy(&p, &sigma, &h).unwrap();
        let b = energy(&p.swapped(), &sigma, &h.swapped()).unwrap();
        assert!((a + b).abs() < 1e-12);
        let s = sample_energy_infimum(&p, &h, 20, 3).unwrap();
        assert_eq!(s.evaluated, 21);
        assert!(s.best <= energy(&p, &Matrix::identity(2), &h).unwrap());
    }
}
