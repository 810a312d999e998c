//! Pairs of vectors `(v, w)`: 1-PS weights, the generalized Futaki character,
//! numerical semistability verdicts, torus characters of pair automorphisms
//! and Popov–Vinberg characteristics.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binaryforms::{sl2_pair_violation, BinaryForm, RootClass, Sl2Violation};
use crate::error::{Error, Result};
use crate::lattice::{dot, pairing, Cocharacter, Containment, Weight};
use crate::linalg::Matrix;
use crate::rational::{int, Q};
use crate::rep::{character_value, matrix_action, Shape, WeightedVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    v: WeightedVector,
    w: WeightedVector,
}

impl Pair {
    pub fn new(v: WeightedVector, w: WeightedVector) -> Result<Self> {
        if v.module().n != w.module().n {
            return Err(Error::LengthMismatch {
                expected: v.module().rank(),
                found: w.module().rank(),
            });
        }
        Ok(Pair { v, w })
    }

    pub fn v(&self) -> &WeightedVector {
        &self.v
    }

    pub fn w(&self) -> &WeightedVector {
        &self.w
    }

    pub fn rank(&self) -> usize {
        self.v.module().rank()
    }

    pub fn swapped(&self) -> Pair {
        Pair {
            v: self.w.clone(),
            w: self.v.clone(),
        }
    }

    /// `(σ·v, σ·w)`.
    pub fn conjugated(&self, sigma: &Matrix) -> Result<Pair> {
        Ok(Pair {
            v: matrix_action(sigma, &self.v)?,
            w: matrix_action(sigma, &self.w)?,
        })
    }

    /// Both entries as binary forms, when the pair lives over SL(2).
    pub fn as_binary_forms(&self) -> Option<(BinaryForm, BinaryForm)> {
        let ok = |x: &WeightedVector| {
            x.module().n == 1 && matches!(x.module().shape, Shape::Trivial | Shape::Sym(_))
        };
        if !ok(&self.v) || !ok(&self.w) {
            return None;
        }
        Some((
            BinaryForm::from_vector(&self.v).ok()?,
            BinaryForm::from_vector(&self.w).ok()?,
        ))
    }
}

/// `min_{χ ∈ supp v} ⟨χ, u⟩`: the exponent `q` with `t^{-q} λ_u(t) v` tending
/// to a nonzero limit.
pub fn weight_1ps(v: &WeightedVector, u: &Cocharacter) -> Result<i64> {
    let mut best: Option<i64> = None;
    for chi in v.support() {
        let p = pairing(&chi, u)?;
        best = Some(best.map_or(p, |b| b.min(p)));
    }
    best.ok_or(Error::ZeroVector)
}

/// `w_u(w) - w_u(v)`.
pub fn futaki_gen(p: &Pair, u: &Cocharacter) -> Result<i64> {
    Ok(weight_1ps(&p.w, u)? - weight_1ps(&p.v, u)?)
}

/// Outcome of the diagonal-torus test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum FixedTorus {
    Semistable,
    Separated {
        witness: Cocharacter,
        futaki_gen: i64,
    },
}

impl FixedTorus {
    pub fn holds(&self) -> bool {
        matches!(self, FixedTorus::Semistable)
    }
}

/// `N(v) ⊆ N(w)` for the diagonal torus. A failure carries an integer
/// cocharacter, built from the LP separator, with `futaki_gen > 0`.
pub fn nss_fixed_torus(p: &Pair) -> Result<FixedTorus> {
    let nv = p.v.weight_polytope();
    let nw = p.w.weight_polytope();
    match nw.contains(&nv)? {
        Containment::Contained => Ok(FixedTorus::Semistable),
        Containment::NotContained { separator, .. } => {
            let neg: Vec<Q> = separator.iter().map(|c| -c).collect();
            let witness = Cocharacter::from_rational_direction(&neg)?;
            let f = futaki_gen(p, &witness)?;
            if f <= 0 {
                return Err(Error::Invalid(format!(
                    "separator {witness:?} gives futaki_gen {f}"
                )));
            }
            Ok(FixedTorus::Separated {
                witness,
                futaki_gen: f,
            })
        }
    }
}

/// Certificate attached to an unstable verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum UnstableWitness {
    /// `futaki_gen(σ·p, u) > 0`.
    Torus {
        #[serde(serialize_with = "crate::io::ser_matrix")]
        conjugator: Matrix,
        cocharacter: Cocharacter,
        futaki_gen: i64,
    },
    /// SL(2) root-order violation on a class with no rational point; the
    /// destabilizing torus is defined only over a number field.
    RootOrder { violation: Sl2Violation },
}

impl UnstableWitness {
    /// Re-evaluates the certificate from scratch.
    pub fn verify(&self, p: &Pair) -> Result<bool> {
        match self {
            UnstableWitness::Torus {
                conjugator,
                cocharacter,
                futaki_gen: f,
            } => {
                let q = futaki_gen(&p.conjugated(conjugator)?, cocharacter)?;
                Ok(q > 0 && q == *f)
            }
            UnstableWitness::RootOrder { violation } => {
                let Some((f, g)) = p.as_binary_forms() else {
                    return Ok(false);
                };
                Ok(sl2_pair_violation(&f, &g).as_ref() == Some(violation))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Unstable(UnstableWitness),
    NotRefuted {
        tori_tested: usize,
    },
    /// Numerically semistable, proven by an exact decider. Never a claim about
    /// orbit closures.
    ProvenSemistable {
        method: String,
    },
}

impl Verdict {
    pub fn is_unstable(&self) -> bool {
        matches!(self, Verdict::Unstable(_))
    }
}

pub const SL2_METHOD: &str = "sl2-root-orders";

/// Random element of SL(N+1, Z): a product of 3 to 6 elementary matrices
/// `I + c E_ij` with `c ∈ [-3, 3] \ {0}`.
pub fn random_conjugator<R: Rng>(rank: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(rank);
    if rank < 2 {
        return m;
    }
    for _ in 0..rng.gen_range(3..=6) {
        let i = rng.gen_range(0..rank);
        let mut j = rng.gen_range(0..rank - 1);
        if j >= i {
            j += 1;
        }
        let mut c = rng.gen_range(1..=3i64);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let mut e = Matrix::identity(rank);
        e[(i, j)] = int(c);
        m = &m * &e;
    }
    m
}

/// Fixed torus first, then `samples` random conjugates; first failure wins.
/// SL(2) binary-form pairs are decided exactly instead.
pub fn nss_check(p: &Pair, samples: usize, seed: u64) -> Result<Verdict> {
    if let Some((f, g)) = p.as_binary_forms() {
        return sl2_verdict(p, &f, &g);
    }
    let identity = Matrix::identity(p.rank());
    if let FixedTorus::Separated {
        witness,
        futaki_gen,
    } = nss_fixed_torus(p)?
    {
        return Ok(Verdict::Unstable(UnstableWitness::Torus {
            conjugator: identity,
            cocharacter: witness,
            futaki_gen,
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let sigma = random_conjugator(p.rank(), &mut rng);
        let q = p.conjugated(&sigma)?;
        if let FixedTorus::Separated {
            witness,
            futaki_gen,
        } = nss_fixed_torus(&q)?
        {
            return Ok(Verdict::Unstable(UnstableWitness::Torus {
                conjugator: sigma,
                cocharacter: witness,
                futaki_gen,
            }));
        }
    }
    Ok(Verdict::NotRefuted {
        tori_tested: samples + 1,
    })
}

fn shear(r: &Q) -> Matrix {
    Matrix::from_rows(vec![vec![Q::one(), Q::zero()], vec![r.clone(), Q::one()]])
}

fn upper(s: &Q) -> Matrix {
    Matrix::from_rows(vec![vec![Q::one(), s.clone()], vec![Q::zero(), Q::one()]])
}

/// Conjugator sending the violating point to 0 or ∞ (or, when `e > d`,
/// moving every root of `f` away from both).
fn sl2_conjugator(f: &BinaryForm, v: &Sl2Violation) -> Option<Matrix> {
    match v {
        Sl2Violation::DegreeExceeds { .. } => {
            let fv = f.to_vector();
            let candidates = (0..).map(int).flat_map(|k| [k.clone(), -k]);
            for s in candidates.take(64) {
                for r in [int(1), int(-1), int(2)] {
                    let sigma = &upper(&s) * &shear(&r);
                    let image = BinaryForm::from_vector(&matrix_action(&sigma, &fv).ok()?).ok()?;
                    if !image.coeffs()[0].is_zero() && !image.leading().is_zero() {
                        return Some(sigma);
                    }
                }
            }
            None
        }
        Sl2Violation::RootOrder { piece, .. } => match &piece.class {
            RootClass::Infinity => Some(Matrix::identity(2)),
            RootClass::Finite(h) if h.degree() == Some(1) => {
                let root = -&h.coeffs()[0] / &h.coeffs()[1];
                Some(shear(&root))
            }
            RootClass::Finite(_) => None,
        },
    }
}

fn sl2_verdict(p: &Pair, f: &BinaryForm, g: &BinaryForm) -> Result<Verdict> {
    let Some(violation) = sl2_pair_violation(f, g) else {
        return Ok(Verdict::ProvenSemistable {
            method: SL2_METHOD.into(),
        });
    };
    let Some(sigma) = sl2_conjugator(f, &violation) else {
        return Ok(Verdict::Unstable(UnstableWitness::RootOrder { violation }));
    };
    match nss_fixed_torus(&p.conjugated(&sigma)?)? {
        FixedTorus::Separated {
            witness,
            futaki_gen,
        } => Ok(Verdict::Unstable(UnstableWitness::Torus {
            conjugator: sigma,
            cocharacter: witness,
            futaki_gen,
        })),
        FixedTorus::Semistable => Err(Error::Invalid(format!(
            "conjugator for violation {violation:?} did not separate"
        ))),
    }
}

/// Popov–Vinberg data of a vector in the null cone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Characteristic {
    #[serde(with = "crate::rational::serde_qvec")]
    pub chi_min: Vec<Q>,
    #[serde(with = "crate::rational::serde_qvec")]
    pub h: Vec<Q>,
    #[serde(with = "crate::rational::serde_q")]
    pub ht_sq: Q,
    pub ht: f64,
    /// `h` with coordinates sorted decreasingly.
    #[serde(with = "crate::rational::serde_qvec")]
    pub h_dominant: Vec<Q>,
}

/// `χ_min` = closest point of `N(v)` to the origin, `h = 2χ_min/‖χ_min‖²`.
pub fn characteristic(v: &WeightedVector) -> Result<Characteristic> {
    let mn = v.weight_polytope().min_norm_point()?;
    if mn.norm_sq.is_zero() {
        return Err(Error::HeightZero);
    }
    let factor = int(2) / &mn.norm_sq;
    let h: Vec<Q> = mn.point.iter().map(|x| x * &factor).collect();
    let mut h_dominant = h.clone();
    h_dominant.sort_by(|a, b| b.cmp(a));
    Ok(Characteristic {
        ht: crate::rational::to_f64(&mn.norm_sq).sqrt(),
        chi_min: mn.point,
        ht_sq: mn.norm_sq,
        h,
        h_dominant,
    })
}

/// `⟨χ, h⟩` for a weight and a rational traceless vector.
pub fn pair_with_h(chi: &Weight, h: &[Q]) -> Q {
    dot(&chi.traceless(), h)
}

/// Torus given to [`futaki_character_torus`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusSpec {
    /// Sublattice spanned by cocharacters.
    Cocharacters(Vec<Cocharacter>),
    /// Explicit diagonal elements.
    Elements(Vec<Vec<Q>>),
    /// The full diagonal maximal torus, generated by `e_k - e_{k+1}`.
    FullDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FutakiCharacter {
    /// `χ_w - χ_v` for representatives of the two support classes.
    pub difference: Weight,
    /// Additive values on cocharacter generators, or multiplicative values
    /// `χ_w(h)/χ_v(h)` on explicit elements.
    #[serde(with = "crate::rational::serde_qvec")]
    pub on_generators: Vec<Q>,
    pub trivial: bool,
}

fn full_diagonal(rank: usize) -> Vec<Cocharacter> {
    (0..rank.saturating_sub(1))
        .map(|k| {
            let mut c = vec![0i64; rank];
            c[k] = 1;
            c[k + 1] = -1;
            Cocharacter::new(c).expect("trace zero")
        })
        .collect()
}

fn stable_pairing(x: &WeightedVector, u: &Cocharacter, label: &str) -> Result<i64> {
    let values = x
        .support()
        .iter()
        .map(|chi| pairing(chi, u))
        .collect::<Result<Vec<_>>>()?;
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotStabilizing(format!(
            "{label}: {u:?} pairs to {values:?}"
        )));
    }
    Ok(values[0])
}

fn stable_value(x: &WeightedVector, h: &[Q], label: &str) -> Result<Q> {
    if h.len() != x.module().rank() {
        return Err(Error::LengthMismatch {
            expected: x.module().rank(),
            found: h.len(),
        });
    }
    if h.iter().any(Zero::is_zero) {
        return Err(Error::Invalid("torus element has a zero entry".into()));
    }
    let values: Vec<Q> = x
        .support()
        .iter()
        .map(|chi| character_value(h, chi))
        .collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotStabilizing(format!(
            "{label}: element acts by distinct scalars"
        )));
    }
    Ok(values[0].clone())
}

/// Character `χ_w - χ_v` of a torus stabilizing both lines `[v]`, `[w]`.
pub fn futaki_character_torus(p: &Pair, t: &TorusSpec) -> Result<FutakiCharacter> {
    let rep = |x: &WeightedVector| x.support().into_iter().next().expect("nonzero vector");
    let difference = rep(&p.w).sub(&rep(&p.v))?;
    let (on_generators, trivial) = match t {
        TorusSpec::Elements(hs) => {
            let mut vals = Vec::with_capacity(hs.len());
            for h in hs {
                vals.push(stable_value(&p.w, h, "w")? / stable_value(&p.v, h, "v")?);
            }
            let trivial = vals.iter().all(One::is_one);
            (vals, trivial)
        }
        TorusSpec::Cocharacters(gens) => cochar_values(p, gens)?,
        TorusSpec::FullDiagonal => cochar_values(p, &full_diagonal(p.rank()))?,
    };
    Ok(FutakiCharacter {
        difference,
        on_generators,
        trivial,
    })
}

fn cochar_values(p: &Pair, gens: &[Cocharacter]) -> Result<(Vec<Q>, bool)> {
    let mut vals = Vec::with_capacity(gens.len());
    for u in gens {
        vals.push(int(
            stable_pairing(&p.w, u, "w")? - stable_pairing(&p.v, u, "v")?
        ));
    }
    let trivial = vals.iter().all(Zero::is_zero);
    Ok((vals, trivial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::rep::ModuleDescriptor;

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
    fn weight_1ps_examples() {
        let w = sym2(5, &[(4, 1)]);
        assert_eq!(weight_1ps(&w, &u(&[1, -1])).unwrap(), 3);
        assert_eq!(weight_1ps(&w, &u(&[0, 0])).unwrap(), 0);
        assert!(weight_1ps(&w, &u(&[1, 0, -1])).is_err());
    }

    #[test]
    fn futaki_examples() {
        let p = Pair::new(sym2(2, &[(1, 1)]), sym2(4, &[(2, 1)])).unwrap();
        assert_eq!(futaki_gen(&p, &u(&[1, -1])).unwrap(), 0);
        let hm = Pair::new(WeightedVector::one(1), sym2(3, &[(2, 1), (0, 4)])).unwrap();
        for c in [[1, -1], [-1, 1], [3, -3]] {
            assert_eq!(
                futaki_gen(&hm, &u(&c)).unwrap(),
                weight_1ps(hm.w(), &u(&c)).unwrap()
            );
        }
        let same = Pair::new(hm.w().clone(), hm.w().clone()).unwrap();
        assert_eq!(futaki_gen(&same, &u(&[2, -2])).unwrap(), 0);
    }

    #[test]
    fn fixed_torus_examples() {
        let one = WeightedVector::one(1);
        let ok = Pair::new(one.clone(), sym2(2, &[(1, 1)])).unwrap();
        assert!(nss_fixed_torus(&ok).unwrap().holds());
        let bad = Pair::new(one, sym2(2, &[(2, 1)])).unwrap();
        assert_eq!(
            nss_fixed_torus(&bad).unwrap(),
            FixedTorus::Separated {
                witness: u(&[1, -1]),
                futaki_gen: 2
            }
        );
        let same = Pair::new(bad.w().clone(), bad.w().clone()).unwrap();
        assert!(nss_fixed_torus(&same).unwrap().holds());
    }

    #[test]
    fn nss_check_examples() {
        let one = WeightedVector::one(1);
        let cubic = Pair::new(one.clone(), sym2(3, &[(2, 1), (1, 1)])).unwrap();
        assert_eq!(
            nss_check(&cubic, 10, 1).unwrap(),
            Verdict::ProvenSemistable {
                method: SL2_METHOD.into()
            }
        );
        let bad = Pair::new(one, sym2(3, &[(2, 1)])).unwrap();
        match nss_check(&bad, 10, 1).unwrap() {
            Verdict::Unstable(w @ UnstableWitness::Torus { .. }) => {
                assert!(w.verify(&bad).unwrap());
                let UnstableWitness::Torus {
                    cocharacter,
                    futaki_gen,
                    ..
                } = w
                else {
                    unreachable!()
                };
                assert_eq!(cocharacter, u(&[1, -1]));
                assert_eq!(futaki_gen, 1);
            }
            other => panic!("{other:?}"),
        }
        let lower = Pair::new(
            sym2(2, &[(0, 1), (1, 3), (2, 1)]),
            sym2(3, &[(0, 1), (3, 1)]),
        )
        .unwrap();
        let v = nss_check(&lower, 0, 0).unwrap();
        assert!(v.is_unstable());
        let Verdict::Unstable(w) = v else {
            unreachable!()
        };
        assert!(w.verify(&lower).unwrap());
    }

    #[test]
    fn sl2_rational_root_witness() {
        // g = (z - 2)^3 (z + 1), f = 1: root 2 has order 3 > 2.
        let g = BinaryForm::from_roots(&int(1), &[int(2), int(2), int(2), int(-1)], 0).unwrap();
        let p = Pair::new(WeightedVector::one(1), g.to_vector()).unwrap();
        let Verdict::Unstable(w) = nss_check(&p, 0, 0).unwrap() else {
            panic!()
        };
        assert!(matches!(w, UnstableWitness::Torus { .. }));
        assert!(w.verify(&p).unwrap());
    }

    #[test]
    fn sl2_irrational_root_order() {
        // g = (z² - 2)², f = z² - 3: both roots of z² - 2 violate by 2 > 1.
        let h = BinaryForm::from_i64(&[-2, 0, 1]).unwrap();
        let g = h.mul(&h);
        let f = BinaryForm::from_i64(&[-3, 0, 1]).unwrap();
        let p = Pair::new(f.to_vector(), g.to_vector()).unwrap();
        let Verdict::Unstable(w) = nss_check(&p, 0, 0).unwrap() else {
            panic!()
        };
        assert!(matches!(w, UnstableWitness::RootOrder { .. }));
        assert!(w.verify(&p).unwrap());
    }

    #[test]
    fn general_sweep_is_deterministic() {
        let m = ModuleDescriptor::sym(2, 2);
        let v = WeightedVector::new(m.clone(), [(vec![1, 1, 0], int(1))]).unwrap();
        let w = WeightedVector::new(m, [(vec![2, 0, 0], int(1)), (vec![0, 0, 2], int(1))]).unwrap();
        let p = Pair::new(v, w).unwrap();
        let a = nss_check(&p, 5, 42).unwrap();
        assert_eq!(a, nss_check(&p, 5, 42).unwrap());
        if let Verdict::Unstable(w) = &a {
            assert!(w.verify(&p).unwrap());
        }
    }

    #[test]
    fn characteristic_examples() {
        let m = ModuleDescriptor::sym(2, 4);
        let v = WeightedVector::new(m.clone(), [(vec![2, 2, 0], int(1))]).unwrap();
        let c = characteristic(&v).unwrap();
        assert_eq!(c.chi_min, vec![ratio(2, 3), ratio(2, 3), ratio(-4, 3)]);
        assert_eq!(c.h, vec![ratio(1, 2), ratio(1, 2), int(-1)]);
        let v2 = WeightedVector::new(
            ModuleDescriptor::sym(2, 3),
            [(vec![2, 1, 0], int(1)), (vec![1, 2, 0], int(1))],
        )
        .unwrap();
        let c2 = characteristic(&v2).unwrap();
        assert_eq!(c2.chi_min, vec![ratio(1, 2), ratio(1, 2), int(-1)]);
        assert_eq!(c2.ht_sq, ratio(3, 2));
        assert_eq!(c2.h, vec![ratio(2, 3), ratio(2, 3), ratio(-4, 3)]);
        for chi in v2.support() {
            assert!(pair_with_h(&chi, &c2.h) >= int(2));
        }
        let null =
            WeightedVector::new(m, [(vec![2, 2, 0], int(1)), (vec![0, 0, 4], int(1))]).unwrap();
        assert!(matches!(characteristic(&null), Err(Error::HeightZero)));
    }

    #[test]
    fn futaki_character_examples() {
        let p = Pair::new(sym2(2, &[(1, 1)]), sym2(4, &[(2, 1)])).unwrap();
        assert!(
            futaki_character_torus(&p, &TorusSpec::FullDiagonal)
                .unwrap()
                .trivial
        );
        let q = Pair::new(WeightedVector::one(1), sym2(2, &[(2, 1)])).unwrap();
        let ch = futaki_character_torus(&q, &TorusSpec::FullDiagonal).unwrap();
        assert_eq!(ch.on_generators, vec![int(2)]);
        assert!(!ch.trivial);
        let el = futaki_character_torus(&q, &TorusSpec::Elements(vec![vec![int(2), ratio(1, 2)]]))
            .unwrap();
        assert_eq!(el.on_generators, vec![int(4)]);
        let triv = Pair::new(WeightedVector::one(1), WeightedVector::one(1)).unwrap();
        assert!(
            futaki_character_torus(&triv, &TorusSpec::FullDiagonal)
                .unwrap()
                .trivial
        );
        let moving = Pair::new(WeightedVector::one(1), sym2(2, &[(2, 1), (0, 1)])).unwrap();
        assert!(matches!(
            futaki_character_torus(&moving, &TorusSpec::FullDiagonal),
            Err(Error::NotStabilizing(_))
        ));
    }
}
