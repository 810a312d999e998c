//! Binary forms: resultants, discriminants, root-order profiles, the SL(2)
//! pair criterion, GKZ Chow and discriminant polytopes, and the degree
//! bookkeeping for resultant/hyperdiscriminant pairs.
//!
//! A form of degree `d` is stored as `a_0, …, a_d` with `a_i` the coefficient
//! of `z^i`; homogeneously it is `Σ a_i x^i y^(d-i)`, and `x^i y^(d-i)`
//! corresponds to the monomial `e_1^i e_2^(d-i)` of `Sym(d)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::linalg::{bareiss_det, Matrix};
use crate::poly::{MPoly, UPoly};
use crate::rational::{int, Q};
use crate::rep::{ModuleDescriptor, Shape, WeightedVector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Q>,
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(crate::rational::format).collect();
        write!(f, "BinaryForm{c:?}")
    }
}

impl BinaryForm {
    /// Formal degree is `coeffs.len() - 1`; trailing zeros encode roots at ∞.
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty("binary form coefficients"));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_i64(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    /// Comma-separated rationals, low to high.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(crate::rational::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    /// `lead · Π (z - r_i)` padded with `infinity` extra roots at ∞.
    pub fn from_roots(lead: &Q, roots: &[Q], infinity: usize) -> Result<Self> {
        let mut c = UPoly::from_roots(roots).scale(lead).coeffs().to_vec();
        c.extend(std::iter::repeat_n(Q::zero(), infinity));
        Self::new(c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Dehomogenized polynomial in `z`.
    pub fn affine(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    pub fn leading(&self) -> &Q {
        self.coeffs.last().expect("nonempty")
    }

    /// Realization in `Sym(d)` of SL(2); degree zero maps to the trivial module.
    pub fn to_vector(&self) -> WeightedVector {
        let d = self.degree() as i64;
        if d == 0 {
            let m = ModuleDescriptor::trivial(1);
            return WeightedVector::new(m, [(Vec::new(), self.coeffs[0].clone())])
                .expect("nonzero constant");
        }
        let m = ModuleDescriptor::sym(1, d as usize);
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as i64, d - i as i64], c.clone()));
        WeightedVector::new(m, terms).expect("nonzero form")
    }

    /// Inverse of [`BinaryForm::to_vector`].
    pub fn from_vector(v: &WeightedVector) -> Result<Self> {
        let m = v.module();
        if m.n != 1 {
            return Err(Error::UnsupportedShape(format!(
                "{m} is not an SL(2) module"
            )));
        }
        match m.shape {
            Shape::Trivial => Self::new(vec![v.coefficient(&[])]),
            Shape::Sym(d) => {
                let coeffs = (0..=d as i64)
                    .map(|i| v.coefficient(&[i, d as i64 - i]))
                    .collect();
                Self::new(coeffs)
            }
            _ => Err(Error::UnsupportedShape(format!(
                "{m} is not a space of binary forms"
            ))),
        }
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut out = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// `∂P/∂z` as a form of formal degree `d - 1`.
    pub fn derivative(&self) -> Result<BinaryForm> {
        if self.degree() == 0 {
            return Err(Error::DegreeTooSmall { found: 0, min: 1 });
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * int(i as i64))
            .collect();
        BinaryForm::new(c)
    }
}

/// Sylvester matrix whose determinant is `R_{m,n}(P,Q) = b_n^m Π_{Q(β)=0} P(β)`:
/// `m` shifted rows of `Q` followed by `n` shifted rows of `P`, coefficients
/// from the highest degree down.
pub fn sylvester_matrix<T: Clone>(p: &[T], q: &[T], zero: T) -> Vec<Vec<T>> {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shifts, src) in [(m, q), (n, p)] {
        for s in 0..shifts {
            let mut row = vec![zero.clone(); size];
            for (k, c) in src.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Classical resultant `R_{m,n}(P, Q)` for the formal degrees of the inputs.
pub fn resultant(p: &BinaryForm, q: &BinaryForm) -> Q {
    let rows = sylvester_matrix(p.coeffs(), q.coeffs(), Q::zero());
    if rows.is_empty() {
        return Q::one();
    }
    Matrix::from_rows(rows).det()
}

/// `Δ_d(P) = R_{d,d-1}(P, ∂P/∂z)`. This equals
/// `(-1)^{d(d-1)/2} · a_d · disc(P)` for the monic-normalized textbook
/// discriminant `disc`; see [`textbook_discriminant`].
pub fn discriminant(p: &BinaryForm) -> Result<Q> {
    let d = p.degree();
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    if p.leading().is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    Ok(resultant(p, &p.derivative()?))
}

fn discriminant_unit_sign(d: usize) -> i64 {
    if (d * (d - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Textbook discriminant of degree `2d - 2`: `Δ_d / ((-1)^{d(d-1)/2} a_d)`.
pub fn textbook_discriminant(p: &BinaryForm) -> Result<Q> {
    let r = discriminant(p)?;
    Ok(r / (p.leading() * int(discriminant_unit_sign(p.degree()))))
}

/// `R_{m,n}` with generic coefficients `a_0..a_m, b_0..b_n` as an integer
/// polynomial in `m + n + 2` variables (a's first).
pub fn symbolic_resultant(m: usize, n: usize) -> MPoly {
    let nv = m + n + 2;
    let a: Vec<MPoly> = (0..=m).map(|i| MPoly::var(nv, i)).collect();
    let b: Vec<MPoly> = (0..=n).map(|i| MPoly::var(nv, m + 1 + i)).collect();
    bareiss_det(sylvester_matrix(&a, &b, MPoly::zero_in(nv)))
}

/// Cap on the degree for symbolic discriminant expansion.
pub const SYMBOLIC_MAX_DEGREE: usize = 4;

/// `Δ_d = R_{d,d-1}(P, P')` with generic coefficients `a_0..a_d`, expanded by
/// fraction-free elimination of the Sylvester matrix over `Z[a_0..a_d]`.
pub fn symbolic_discriminant(d: usize) -> Result<MPoly> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    if d > SYMBOLIC_MAX_DEGREE {
        return Err(Error::DimensionBound {
            dim: d,
            max: SYMBOLIC_MAX_DEGREE,
        });
    }
    let nv = d + 1;
    let a: Vec<MPoly> = (0..=d).map(|i| MPoly::var(nv, i)).collect();
    let da: Vec<MPoly> = (1..=d).map(|i| a[i].scale_int(&BigInt::from(i))).collect();
    Ok(bareiss_det(sylvester_matrix(&a, &da, MPoly::zero_in(nv))))
}

/// Textbook discriminant with generic coefficients, homogeneous of degree `2d - 2`.
pub fn symbolic_textbook_discriminant(d: usize) -> Result<MPoly> {
    let full = symbolic_discriminant(d)?;
    let mut e = vec![0u32; d + 1];
    e[d] = 1;
    let unit = MPoly::monomial(e, BigInt::from(discriminant_unit_sign(d)));
    Ok(full.div_exact(&unit))
}

/// Newton polytope (hull of the exponent vectors) of a nonzero polynomial.
pub fn newton_polytope(p: &MPoly) -> Result<LatticePolytope> {
    let pts: Vec<Vec<Q>> = p
        .exponents()
        .map(|e| e.iter().map(|&x| int(x as i64)).collect())
        .collect();
    LatticePolytope::hull(&pts)
}

/// A point class of P¹: the roots of a squarefree factor, or ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootClass {
    /// Roots of a monic squarefree polynomial (coefficients low to high).
    Finite(#[serde(serialize_with = "ser_upoly")] UPoly),
    Infinity,
}

fn ser_upoly<S: serde::Serializer>(p: &UPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        seq.serialize_element(&crate::rational::format(c))?;
    }
    seq.end()
}

impl RootClass {
    /// Number of points of P¹ (over the algebraic closure) in the class.
    pub fn point_count(&self) -> usize {
        match self {
            RootClass::Finite(p) => p.degree().unwrap_or(0),
            RootClass::Infinity => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdProfile {
    pub degree: usize,
    pub entries: Vec<(RootClass, usize)>,
}

impl OrdProfile {
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(c, m)| c.point_count() * m).sum()
    }

    pub fn infinity_order(&self) -> usize {
        self.entries
            .iter()
            .find(|(c, _)| *c == RootClass::Infinity)
            .map_or(0, |(_, m)| *m)
    }
}

/// Squarefree decomposition over Q plus the multiplicity at ∞.
pub fn ord_profile(f: &BinaryForm) -> OrdProfile {
    let affine = f.affine();
    let adeg = affine.degree().expect("forms are nonzero");
    let mut entries: Vec<(RootClass, usize)> = affine
        .squarefree_decomposition()
        .into_iter()
        .map(|(p, m)| (RootClass::Finite(p), m))
        .collect();
    if f.degree() > adeg {
        entries.push((RootClass::Infinity, f.degree() - adeg));
    }
    OrdProfile {
        degree: f.degree(),
        entries,
    }
}

/// Points of P¹ where the root orders of `g` and `f` are `(ord_g, ord_f)`,
/// covering every root of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootPiece {
    pub class: RootClass,
    pub ord_g: usize,
    pub ord_f: usize,
}

/// Common refinement of the root classes of `g` against those of `f`, via
/// gcds of the Yun factors.
pub fn root_pieces(f: &BinaryForm, g: &BinaryForm) -> Vec<RootPiece> {
    let pf = ord_profile(f);
    let pg = ord_profile(g);
    let mut out = Vec::new();
    for (gc, mg) in &pg.entries {
        match gc {
            RootClass::Infinity => out.push(RootPiece {
                class: RootClass::Infinity,
                ord_g: *mg,
                ord_f: pf.infinity_order(),
            }),
            RootClass::Finite(h) => {
                let mut rest = h.clone();
                for (fc, mf) in &pf.entries {
                    let RootClass::Finite(k) = fc else { continue };
                    let c = rest.gcd(k);
                    if c.degree().unwrap_or(0) > 0 {
                        rest = rest.div_exact(&c).monic();
                        out.push(RootPiece {
                            class: RootClass::Finite(c),
                            ord_g: *mg,
                            ord_f: *mf,
                        });
                    }
                }
                if rest.degree().unwrap_or(0) > 0 {
                    out.push(RootPiece {
                        class: RootClass::Finite(rest),
                        ord_g: *mg,
                        ord_f: 0,
                    });
                }
            }
        }
    }
    out
}

/// Why the SL(2) criterion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Sl2Violation {
    /// `deg f > deg g`.
    DegreeExceeds { e: usize, d: usize },
    /// `ord_p(g) - ord_p(f) > (d - e)/2` on every point of the class.
    RootOrder {
        piece: RootPiece,
        e: usize,
        d: usize,
    },
}

/// Numerical semistability of the SL(2) pair `(f, g)`: `e <= d` and
/// `ord_p(g) - ord_p(f) <= (d - e)/2` at every point of P¹. Returns the first
/// violation found, if any.
pub fn sl2_pair_violation(f: &BinaryForm, g: &BinaryForm) -> Option<Sl2Violation> {
    let (e, d) = (f.degree(), g.degree());
    if e > d {
        return Some(Sl2Violation::DegreeExceeds { e, d });
    }
    root_pieces(f, g)
        .into_iter()
        .find(|p| 2 * p.ord_g as i64 - 2 * p.ord_f as i64 > (d - e) as i64)
        .map(|piece| Sl2Violation::RootOrder { piece, e, d })
}

pub fn sl2_pair_nss(f: &BinaryForm, g: &BinaryForm) -> bool {
    sl2_pair_violation(f, g).is_none()
}

/// GKZ vertex map for `S ⊆ [1, d-1]` (given ascending).
pub fn vertex_map(d: usize, s: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    if s.is_empty() {
        v[0] = d as i64;
        v[d] = d as i64;
        return v;
    }
    let mut idx = Vec::with_capacity(s.len() + 2);
    idx.push(0);
    idx.extend_from_slice(s);
    idx.push(d);
    v[0] = idx[1] as i64;
    v[d] = (d - idx[idx.len() - 2]) as i64;
    for j in 1..idx.len() - 1 {
        v[idx[j]] = (idx[j + 1] - idx[j - 1]) as i64;
    }
    v
}

/// Vertices of the Chow polytope of degree-`d` binary forms, one per subset
/// `S ⊆ [1, d-1]`, deduplicated and sorted.
pub fn chow_polytope_vertices(d: usize) -> Result<Vec<Vec<i64>>> {
    if d < 1 {
        return Err(Error::DegreeTooSmall { found: d, min: 1 });
    }
    let inner = d.saturating_sub(1);
    let mut out: Vec<Vec<i64>> = (0u64..(1 << inner))
        .map(|mask| {
            let s: Vec<usize> = (1..d).filter(|i| (mask >> (i - 1)) & 1 == 1).collect();
            vertex_map(d, &s)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Chow vertices shifted by `-(1, 0, …, 0, 1)`.
pub fn disc_polytope_vertices(d: usize) -> Result<Vec<Vec<i64>>> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    let mut out: Vec<Vec<i64>> = chow_polytope_vertices(d)?
        .into_iter()
        .map(|mut v| {
            v[0] -= 1;
            v[d] -= 1;
            v
        })
        .collect();
    out.sort();
    Ok(out)
}

pub fn to_rational_points(v: &[Vec<i64>]) -> Vec<Vec<Q>> {
    v.iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledContainment {
    pub d: usize,
    pub deg_resultant: usize,
    pub deg_discriminant: usize,
    /// `deg(Δ)·N(R) ⊆ deg(R)·N(Δ)` by exact LP.
    pub containment: bool,
    /// The per-vertex convex-combination identity holds for every Chow vertex.
    pub identity: bool,
}

impl ScaledContainment {
    pub fn holds(&self) -> bool {
        self.containment && self.identity
    }
}

/// Checks `(2d-2)·N(R_d) ⊆ 2d·N(Δ_d)` and, for every Chow vertex `v`,
/// `(2d-2)v = ((d-1)/d)·2d·(v - e_0 - e_d) + (1/d)·2d·(d-1, 0, …, 0, d-1)`
/// with both right-hand points in `2d·N(Δ_d)`'s vertex set.
pub fn scaled_containment_check(d: usize) -> Result<ScaledContainment> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    let chow = chow_polytope_vertices(d)?;
    let disc = disc_polytope_vertices(d)?;
    let (deg_r, deg_delta) = (2 * d, 2 * d - 2);
    let nr = LatticePolytope::hull(&to_rational_points(&chow))?.scaled(&int(deg_delta as i64));
    let nd = LatticePolytope::hull(&to_rational_points(&disc))?.scaled(&int(deg_r as i64));
    let containment = nd.contains(&nr)?.holds();

    let di = d as i64;
    let mut apex = vec![0i64; d + 1];
    apex[0] = di - 1;
    apex[d] = di - 1;
    let identity = disc.contains(&apex)
        && chow.iter().all(|v| {
            let mut shifted = v.clone();
            shifted[0] -= 1;
            shifted[d] -= 1;
            let lhs: Vec<Q> = v.iter().map(|&x| int((2 * di - 2) * x)).collect();
            let rhs: Vec<Q> = (0..=d)
                .map(|i| {
                    Q::new(BigInt::from(di - 1), BigInt::from(di)) * int(2 * di * shifted[i])
                        + Q::new(BigInt::one(), BigInt::from(di)) * int(2 * di * apex[i])
                })
                .collect();
            disc.contains(&shifted) && lhs == rhs
        });
    Ok(ScaledContainment {
        d,
        deg_resultant: deg_r,
        deg_discriminant: deg_delta,
        containment,
        identity,
    })
}

/// Degree `n(n+1)d - dμ` of the hyperdiscriminant of `X × P^{n-1}`.
pub fn hyperdisc_degree(n: i64, d: i64, dmu: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::Invalid(format!("n = {n} must be at least 1")));
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            found: d.max(0) as usize,
            min: 2,
        });
    }
    let deg = n * (n + 1) * d - dmu;
    if deg <= 0 {
        return Err(Error::NonPositiveDegree(deg));
    }
    Ok(deg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairDegrees {
    pub deg_resultant: i64,
    pub deg_hyperdiscriminant: i64,
    /// Common degree of `R^{deg Δ}` and `Δ^{deg R}`.
    pub r: i64,
}

/// Degree normalization of the resultant/hyperdiscriminant pair. The common
/// degree `r` must be divisible by both `n` and `n + 1`; a `dμ` for which it
/// is not cannot come from a polarized variety and is rejected.
pub fn normalize_pair_degrees(n: i64, d: i64, dmu: i64) -> Result<PairDegrees> {
    let deg_delta = hyperdisc_degree(n, d, dmu)?;
    let deg_r = d * (n + 1);
    let r = deg_r * deg_delta;
    if r % n != 0 {
        return Err(Error::NotDivisible {
            degree: r,
            divisor: n,
        });
    }
    Ok(PairDegrees {
        deg_resultant: deg_r,
        deg_hyperdiscriminant: deg_delta,
        r,
    })
}

/// Orientation helper: `sign(x)` as -1, 0, 1.
pub fn sign(q: &Q) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&form(&[-1, 1]), &form(&[-2, 1])), int(1));
        assert_eq!(resultant(&form(&[-1, 0, 1]), &form(&[-4, 0, 1])), int(9));
        let p = form(&[2, -3, 1]);
        assert_eq!(resultant(&p, &p), int(0));
    }

    #[test]
    fn resultant_with_constants() {
        // R_{0,n}(c, Q) = c^n and R_{m,0}(P, c) = c^m.
        assert_eq!(resultant(&form(&[3]), &form(&[1, 2, 5])), int(9));
        assert_eq!(resultant(&form(&[1, 2, 5]), &form(&[3])), int(9));
    }

    #[test]
    fn discriminant_quadratic_convention() {
        // Δ_2 = -a2 (a1² - 4 a0 a2)
        for (a0, a1, a2) in [(1, 3, 2), (-2, 5, 7), (4, 4, 1)] {
            let p = form(&[a0, a1, a2]);
            assert_eq!(
                discriminant(&p).unwrap(),
                int(-a2 * (a1 * a1 - 4 * a0 * a2))
            );
            assert_eq!(
                textbook_discriminant(&p).unwrap(),
                int(a1 * a1 - 4 * a0 * a2)
            );
        }
    }

    #[test]
    fn discriminant_cubic_convention() {
        // R_{3,2}(P, P') for z³ + pz + q is 4p³ + 27q² (textbook value -(4p³+27q²)).
        for (p, q) in [(1, 1), (-3, 2), (2, -5)] {
            let f = form(&[q, p, 0, 1]);
            assert_eq!(discriminant(&f).unwrap(), int(4 * p * p * p + 27 * q * q));
            assert_eq!(
                textbook_discriminant(&f).unwrap(),
                int(-(4 * p * p * p + 27 * q * q))
            );
        }
    }

    #[test]
    fn discriminant_errors() {
        assert!(matches!(
            discriminant(&form(&[1, 1])),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(matches!(
            discriminant(&form(&[1, 1, 0])),
            Err(Error::ZeroLeadingCoefficient)
        ));
        assert_eq!(discriminant(&form(&[1, -2, 1])).unwrap(), int(0));
    }

    #[test]
    fn symbolic_quadratic_discriminant() {
        let s = symbolic_discriminant(2).unwrap();
        let point = [int(3), int(-2), int(5)];
        assert_eq!(s.eval(&point), int(-5 * (4 - 4 * 3 * 5)));
        let t = symbolic_textbook_discriminant(2).unwrap();
        let exps: Vec<Vec<u32>> = t.exponents().cloned().collect();
        assert_eq!(exps, vec![vec![0, 2, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn newton_polytope_matches_gkz() {
        for d in 2..=SYMBOLIC_MAX_DEGREE {
            let disc = symbolic_textbook_discriminant(d).unwrap();
            let gkz =
                LatticePolytope::hull(&to_rational_points(&disc_polytope_vertices(d).unwrap()))
                    .unwrap();
            assert_eq!(newton_polytope(&disc).unwrap(), gkz, "d = {d}");
        }
        assert!(symbolic_discriminant(5).is_err());
    }

    #[test]
    fn ord_profile_examples() {
        let p = ord_profile(&form(&[0, 0, -1, 1]));
        assert_eq!(
            p.entries,
            vec![
                (RootClass::Finite(UPoly::from_i64(&[-1, 1])), 1),
                (RootClass::Finite(UPoly::from_i64(&[0, 1])), 2)
            ]
        );
        let sq = ord_profile(&form(&[-6, 11, -6, 1]));
        assert!(sq.entries.iter().all(|(_, m)| *m == 1));
        let inf = ord_profile(&form(&[0, 1, 0, 0, 0]));
        assert_eq!(inf.infinity_order(), 3);
        assert_eq!(inf.total(), 4);
    }

    #[test]
    fn sl2_criterion_examples() {
        let one = form(&[1]);
        // z(z+1): squarefree with a root at ∞ for the cubic x y (x + y) reading.
        assert!(sl2_pair_nss(&one, &form(&[0, 1, 1, 0])));
        assert!(!sl2_pair_nss(&one, &form(&[0, 0, 1])));
        let f = form(&[1, 2, 3]);
        assert!(sl2_pair_nss(&f, &f));
        assert!(!sl2_pair_nss(&f, &form(&[1, 2, 4])));
        assert!(!sl2_pair_nss(&form(&[1, 1, 1]), &form(&[5, 1, 0, 1])));
        assert!(matches!(
            sl2_pair_violation(&form(&[1, 1, 1]), &form(&[1, 1])),
            Some(Sl2Violation::DegreeExceeds { e: 2, d: 1 })
        ));
    }

    #[test]
    fn chow_vertices_examples() {
        assert_eq!(
            chow_polytope_vertices(2).unwrap(),
            vec![vec![1, 2, 1], vec![2, 0, 2]]
        );
        assert!(chow_polytope_vertices(3)
            .unwrap()
            .contains(&vec![3, 0, 0, 3]));
        assert_eq!(chow_polytope_vertices(1).unwrap(), vec![vec![1, 1]]);
        for d in 1..7 {
            assert!(chow_polytope_vertices(d)
                .unwrap()
                .iter()
                .all(|v| v.iter().sum::<i64>() == 2 * d as i64));
        }
    }

    #[test]
    fn disc_vertices_examples() {
        assert_eq!(
            disc_polytope_vertices(2).unwrap(),
            vec![vec![0, 2, 0], vec![1, 0, 1]]
        );
        assert!(disc_polytope_vertices(3)
            .unwrap()
            .contains(&vec![2, 0, 0, 2]));
        for d in 2..7 {
            assert!(disc_polytope_vertices(d)
                .unwrap()
                .iter()
                .all(|v| v.iter().sum::<i64>() == 2 * d as i64 - 2));
        }
        assert!(disc_polytope_vertices(1).is_err());
    }

    #[test]
    fn scaled_containment_small_degrees() {
        for d in 2..=4 {
            assert!(scaled_containment_check(d).unwrap().holds(), "d = {d}");
        }
    }

    #[test]
    fn degree_bookkeeping() {
        for d in 2..10 {
            assert_eq!(hyperdisc_degree(1, d, 2).unwrap(), 2 * d - 2);
        }
        let p = normalize_pair_degrees(1, 2, 2).unwrap();
        assert_eq!((p.deg_resultant, p.deg_hyperdiscriminant, p.r), (4, 2, 8));
        assert!(matches!(
            hyperdisc_degree(1, 2, 4),
            Err(Error::NonPositiveDegree(0))
        ));
        assert!(matches!(
            normalize_pair_degrees(2, 3, 1),
            Err(Error::NotDivisible { .. })
        ));
        for n in 1..=5i64 {
            for d in 2..=9i64 {
                for dmu in (0..n * (n + 1) * d).step_by(n as usize) {
                    let p = normalize_pair_degrees(n, d, dmu).unwrap();
                    assert_eq!(p.r % n, 0);
                    assert_eq!(p.r % (n + 1), 0);
                }
            }
        }
    }

    #[test]
    fn vector_round_trip() {
        let f = BinaryForm::new(vec![ratio(1, 2), int(0), int(-3)]).unwrap();
        assert_eq!(BinaryForm::from_vector(&f.to_vector()).unwrap(), f);
        let c = form(&[4]);
        assert_eq!(BinaryForm::from_vector(&c.to_vector()).unwrap(), c);
    }
}
