//! Torsion of bounded exact complexes of finite-dimensional Q-spaces and the
//! Koszul complex computation of the resultant of two binary forms.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::binaryforms::BinaryForm;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;

/// `0 → V_0 → V_1 → … → V_k → 0` with `maps[i]: V_i → V_{i+1}` stored as a
/// `dims[i+1] × dims[i]` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteComplex {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl FiniteComplex {
    /// Checks shapes and `d_{i+1} d_i = 0`; exactness is checked separately.
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Empty("complex terms"));
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::MalformedComplex(format!(
                "{} terms need {} maps, got {}",
                dims.len(),
                dims.len() - 1,
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.rows() != dims[i + 1] || m.cols() != dims[i] {
                return Err(Error::MalformedComplex(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        for i in 1..maps.len() {
            if !(&maps[i] * &maps[i - 1]).is_zero() {
                return Err(Error::MalformedComplex(format!(
                    "d_{i} d_{} is nonzero",
                    i - 1
                )));
            }
        }
        Ok(FiniteComplex { dims, maps })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    /// Position of the first failure of exactness, if any.
    pub fn exactness_defect(&self) -> Option<usize> {
        let r = self.ranks();
        (0..self.dims.len()).find(|&i| {
            let incoming = if i == 0 { 0 } else { r[i - 1] };
            let outgoing = r.get(i).copied().unwrap_or(0);
            incoming + outgoing != self.dims[i]
        })
    }

    pub fn is_exact(&self) -> bool {
        self.exactness_defect().is_none()
    }

    /// Block direct sum of two complexes of the same length.
    pub fn direct_sum(&self, o: &FiniteComplex) -> Result<FiniteComplex> {
        if self.dims.len() != o.dims.len() {
            return Err(Error::MalformedComplex(
                "direct sum of complexes of different lengths".into(),
            ));
        }
        let dims: Vec<usize> = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&o.maps)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m[(r, c)] = a[(r, c)].clone();
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m[(a.rows() + r, a.cols() + c)] = b[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        FiniteComplex::new(dims, maps)
    }

    /// The same complex after reordering the basis of every term:
    /// `perms[i][new] = old`.
    pub fn permuted(&self, perms: &[Vec<usize>]) -> Result<FiniteComplex> {
        if perms.len() != self.dims.len()
            || perms.iter().zip(&self.dims).any(|(p, &d)| p.len() != d)
        {
            return Err(Error::MalformedComplex(
                "permutation shapes do not match the complex".into(),
            ));
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| m.submatrix(&perms[i + 1], &perms[i]))
            .collect();
        FiniteComplex::new(self.dims.clone(), maps)
    }
}

/// Determinant of an exact complex in the standard bases, by greedy minor
/// selection: `J_0` = all of `V_0`; `I_{i+1}` = the lexicographically first
/// rows of `d_i` independent on the columns `J_i`; `J_{i+1}` = complement of
/// `I_{i+1}`. The result is `Π det(d_i[I_{i+1}, J_i])^{(-1)^{k-1-i}}`, so the
/// map into the last term enters with exponent `+1`. Defined up to sign.
pub fn torsion(c: &FiniteComplex) -> Result<Q> {
    if let Some(i) = c.exactness_defect() {
        return Err(Error::NotExact(format!("homology at term {i}")));
    }
    let k = c.maps.len();
    let mut cols: Vec<usize> = (0..c.dims[0]).collect();
    let mut result = Q::one();
    for (i, m) in c.maps.iter().enumerate() {
        let rows = m.independent_rows(&cols);
        if rows.len() != cols.len() {
            return Err(Error::NotExact(format!(
                "map {i} is not injective on the chosen complement"
            )));
        }
        if !rows.is_empty() {
            let minor = m.submatrix(&rows, &cols).det();
            if (k - 1 - i).is_multiple_of(2) {
                result *= minor;
            } else {
                result /= minor;
            }
        }
        cols = (0..c.dims[i + 1]).filter(|r| !rows.contains(r)).collect();
    }
    Ok(result)
}

/// `h⁰(O(k))` on the line.
pub fn line_h0(k: i64) -> i64 {
    (k + 1).max(0)
}

/// Multiplication by a polynomial as a map `S_src → S_{src+deg}` in the
/// monomial bases `1, z, …`.
fn multiplication(p: &[Q], src: usize) -> Matrix {
    let dst = src + p.len() - 1;
    let mut m = Matrix::zeros(dst + 1, src + 1);
    for j in 0..=src {
        for (k, c) in p.iter().enumerate() {
            m[(j + k, j)] = c.clone();
        }
    }
    m
}

/// `0 → S_{m-2d} → S_{m-d}² → S_m → 0` with `h ↦ (-g h, f h)` and
/// `(p, q) ↦ f p + g q`; a negative index means the zero space, which is
/// dropped together with its map.
pub fn koszul_complex(f: &BinaryForm, g: &BinaryForm, m: i64) -> Result<FiniteComplex> {
    if f.degree() != g.degree() {
        return Err(Error::Invalid(format!(
            "degrees {} and {} differ",
            f.degree(),
            g.degree()
        )));
    }
    let d = f.degree() as i64;
    if d < 1 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    if m < 2 * d - 1 {
        return Err(Error::TwistTooSmall { m, min: 2 * d - 1 });
    }
    let mid = (m - d) as usize;
    let mut second = Matrix::zeros((m + 1) as usize, 2 * (mid + 1));
    for (block, p) in [f, g].into_iter().enumerate() {
        let mm = multiplication(p.coeffs(), mid);
        for r in 0..mm.rows() {
            for c in 0..mm.cols() {
                second[(r, block * (mid + 1) + c)] = mm[(r, c)].clone();
            }
        }
    }
    if m - 2 * d < 0 {
        return FiniteComplex::new(vec![2 * (mid + 1), (m + 1) as usize], vec![second]);
    }
    let low = (m - 2 * d) as usize;
    let mut first = Matrix::zeros(2 * (mid + 1), low + 1);
    let neg_g: Vec<Q> = g.coeffs().iter().map(|c| -c).collect();
    for (block, p) in [neg_g.as_slice(), f.coeffs()].into_iter().enumerate() {
        let mm = multiplication(p, low);
        for r in 0..mm.rows() {
            for c in 0..mm.cols() {
                first[(block * (mid + 1) + r, c)] = mm[(r, c)].clone();
            }
        }
    }
    FiniteComplex::new(
        vec![low + 1, 2 * (mid + 1), (m + 1) as usize],
        vec![first, second],
    )
}

/// Torsion of [`koszul_complex`]; equals `±resultant(f, g)`.
pub fn koszul_resultant(f: &BinaryForm, g: &BinaryForm, m: i64) -> Result<Q> {
    torsion(&koszul_complex(f, g, m)?)
}

/// `Σ_j (-1)^{j+1} j h0[j]`.
pub fn weighted_euler_degree(h0: &[i64]) -> i64 {
    h0.iter()
        .enumerate()
        .map(|(j, h)| {
            if j % 2 == 1 {
                j as i64 * h
            } else {
                -(j as i64) * h
            }
        })
        .sum()
}

/// `h⁰(Λ^j Q^∨ ⊗ O(dm))` for `Q = O(d)²` on the line.
pub fn resultant_h0(d: i64, m: i64) -> Vec<i64> {
    vec![
        line_h0(d * m),
        2 * line_h0(d * m - d),
        line_h0(d * m - 2 * d),
    ]
}

/// Same for `Q = J₁(O(d)) ≅ O(d-1)²` on the line.
pub fn discriminant_h0(d: i64, m: i64) -> Vec<i64> {
    vec![
        line_h0(d * m),
        2 * line_h0(d * m - d + 1),
        line_h0(d * m - 2 * d + 2),
    ]
}

/// Degree of the polynomial sampled at equally spaced points, read off the
/// last nonvanishing finite difference. `None` unless at least two samples of
/// the first vanishing level are available.
pub fn finite_difference_degree(values: &[Q]) -> Option<usize> {
    let mut cur = values.to_vec();
    let mut top = 0;
    let mut level = 0;
    while !cur.is_empty() {
        if cur.iter().any(|x| !x.is_zero()) {
            top = level;
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
        level += 1;
    }
    (values.len() >= top + 3).then_some(top)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProbe {
    /// Degree of `torsion²` along the line.
    pub squared_degree: usize,
    pub degree: usize,
}

/// Degree of `s ↦ koszul_resultant(f0 + s f1, g0 + s g1, m)` from finite
/// differences of its square at `s = 0, 1, …`, since the torsion sign is not
/// normalized. Sample points where the complex is not exact are skipped by
/// shifting the start.
pub fn koszul_degree_probe(
    f0: &BinaryForm,
    f1: &BinaryForm,
    g0: &BinaryForm,
    g1: &BinaryForm,
    m: i64,
) -> Result<DegreeProbe> {
    let d = f0.degree();
    let samples = 4 * d + 3;
    let line = |a: &BinaryForm, b: &BinaryForm, s: i64| -> Result<BinaryForm> {
        let sq = Q::from_integer(s.into());
        BinaryForm::new(
            a.coeffs()
                .iter()
                .zip(b.coeffs())
                .map(|(x, y)| x + y * &sq)
                .collect(),
        )
    };
    'start: for start in 0..64i64 {
        let mut vals = Vec::with_capacity(samples);
        for s in start..start + samples as i64 {
            let (Ok(f), Ok(g)) = (line(f0, f1, s), line(g0, g1, s)) else {
                continue 'start;
            };
            match koszul_resultant(&f, &g, m) {
                Ok(t) => vals.push(&t * &t),
                Err(Error::NotExact(_)) => continue 'start,
                Err(e) => return Err(e),
            }
        }
        let sq = finite_difference_degree(&vals).ok_or_else(|| {
            Error::InsufficientSamples("finite differences did not vanish".into())
        })?;
        return Ok(DegreeProbe {
            squared_degree: sq,
            degree: sq / 2,
        });
    }
    Err(Error::InsufficientSamples(
        "no run of exact complexes along the line".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binaryforms::resultant;
    use crate::rational::{abs, int};

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn one_map_complex() {
        let m = Matrix::from_i64(&[vec![2, 1], vec![1, 3]]);
        let c = FiniteComplex::new(vec![2, 2], vec![m]).unwrap();
        assert_eq!(abs(&torsion(&c).unwrap()), int(5));
    }

    #[test]
    fn short_exact_and_direct_sum() {
        // 0 → Q → Q² → Q → 0 with a = (1, 2)ᵀ and b = (2, -1).
        let a = Matrix::from_i64(&[vec![1], vec![2]]);
        let b = Matrix::from_i64(&[vec![2, -1]]);
        let c = FiniteComplex::new(vec![1, 2, 1], vec![a, b]).unwrap();
        assert!(c.is_exact());
        let t = torsion(&c).unwrap();
        let s = c.direct_sum(&c).unwrap();
        assert_eq!(abs(&torsion(&s).unwrap()), abs(&(&t * &t)));
        let p = c.permuted(&[vec![0], vec![1, 0], vec![0]]).unwrap();
        assert_eq!(abs(&torsion(&p).unwrap()), abs(&t));
    }

    #[test]
    fn malformed_and_inexact() {
        let a = Matrix::from_i64(&[vec![1], vec![0]]);
        let b = Matrix::from_i64(&[vec![1, 0]]);
        assert!(matches!(
            FiniteComplex::new(vec![1, 2, 1], vec![a.clone(), b]),
            Err(Error::MalformedComplex(_))
        ));
        let zero = Matrix::from_i64(&[vec![0, 1]]);
        let c = FiniteComplex::new(vec![1, 2, 1], vec![a, zero]).unwrap();
        assert!(c.is_exact());
        let z = Matrix::zeros(1, 1);
        let bad = FiniteComplex::new(vec![1, 1], vec![z]).unwrap();
        assert!(matches!(torsion(&bad), Err(Error::NotExact(_))));
    }

    #[test]
    fn koszul_examples() {
        let (f, g) = (form(&[-1, 1]), form(&[-2, 1]));
        assert_eq!(abs(&koszul_resultant(&f, &g, 1).unwrap()), int(1));
        let (f, g) = (form(&[-1, 0, 1]), form(&[-4, 0, 1]));
        for m in [3, 4, 5] {
            assert_eq!(abs(&koszul_resultant(&f, &g, m).unwrap()), int(9));
        }
        assert!(matches!(
            koszul_resultant(&f, &f, 3),
            Err(Error::NotExact(_))
        ));
        assert!(matches!(
            koszul_resultant(&f, &g, 2),
            Err(Error::TwistTooSmall { .. })
        ));
        let (f, g) = (form(&[3, 1, -2, 5]), form(&[1, 0, 4, -1]));
        assert_eq!(
            abs(&koszul_resultant(&f, &g, 6).unwrap()),
            abs(&resultant(&f, &g))
        );
    }

    #[test]
    fn euler_degrees() {
        assert_eq!(weighted_euler_degree(&[0, 0, 0]), 0);
        for d in 1..6 {
            for m in 2..6 {
                assert_eq!(weighted_euler_degree(&resultant_h0(d, m)), 2 * d);
                if d >= 2 {
                    assert_eq!(weighted_euler_degree(&discriminant_h0(d, m)), 2 * d - 2);
                }
            }
        }
    }

    #[test]
    fn degree_probe_quadratics() {
        let p = koszul_degree_probe(
            &form(&[1, 2, 1]),
            &form(&[0, 1, 3]),
            &form(&[2, 0, 1]),
            &form(&[1, 1, 0]),
            3,
        )
        .unwrap();
        assert_eq!(p.degree, 4);
        assert_eq!(
            finite_difference_degree(&[int(1), int(4), int(9), int(16), int(25)]),
            Some(2)
        );
        assert_eq!(finite_difference_degree(&[int(3), int(3), int(3)]), Some(0));
        assert_eq!(finite_difference_degree(&[int(1), int(4), int(9)]), None);
    }
}
