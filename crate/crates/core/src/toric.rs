//! Toric extension criterion: when the rational map `X_A ⇢ X_B` given by
//! restricting characters extends, and which boundary supports of a torus
//! orbit closure are reached by integer one-parameter subgroups.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Containment, LatticePolytope};
use crate::lp::{feasible, Feasibility};
use crate::rational::{int, primitive_integer_direction, Q};

/// Character sets `B ⊆ A` in a lattice of rank `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricData {
    pub dim: usize,
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

impl ToricData {
    /// Deduplicates both sets; `B` must be nonempty and contained in `A`.
    pub fn new(a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> Result<Self> {
        let a: Vec<Vec<i64>> = a.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let b: Vec<Vec<i64>> = b.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if b.is_empty() {
            return Err(Error::Empty("character set B"));
        }
        let dim = a[0].len();
        if let Some(bad) = a.iter().chain(&b).find(|x| x.len() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        if let Some(x) = b.iter().find(|x| !a.contains(x)) {
            return Err(Error::Invalid(format!("{x:?} lies in B but not in A")));
        }
        Ok(ToricData { dim, a, b })
    }

    /// `A ∖ B`.
    pub fn rest(&self) -> Vec<Vec<i64>> {
        self.a
            .iter()
            .filter(|x| !self.b.contains(x))
            .cloned()
            .collect()
    }
}

fn ip(u: &[i64], a: &[i64]) -> i64 {
    u.iter().zip(a).map(|(x, y)| x * y).sum()
}

/// `min{0, min_B (u,b)} <= min_{A∖B} (u,a)`, vacuous for `A = B`.
pub fn star_condition(data: &ToricData, u: &[i64]) -> Result<bool> {
    if u.len() != data.dim {
        return Err(Error::LengthMismatch {
            expected: data.dim,
            found: u.len(),
        });
    }
    let lhs = data.b.iter().map(|b| ip(u, b)).min().unwrap_or(0).min(0);
    Ok(data.rest().iter().all(|a| lhs <= ip(u, a)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Extension {
    Extends,
    /// `point ∈ A∖B` lies outside `hull({0} ∪ B)`; `witness` violates the
    /// star condition.
    Fails {
        point: Vec<i64>,
        witness: Vec<i64>,
    },
}

impl Extension {
    pub fn holds(&self) -> bool {
        matches!(self, Extension::Extends)
    }
}

fn rational(points: &[Vec<i64>]) -> Vec<Vec<Q>> {
    points
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

/// `hull(A∖B) ⊆ hull({0} ∪ B)`, decided exactly.
pub fn extension_criterion(data: &ToricData) -> Result<Extension> {
    let rest = data.rest();
    if rest.is_empty() {
        return Ok(Extension::Extends);
    }
    let mut outer = data.b.clone();
    outer.push(vec![0; data.dim]);
    let outer = LatticePolytope::hull(&rational(&outer))?;
    let inner = LatticePolytope::hull(&rational(&rest))?;
    match outer.contains(&inner)? {
        Containment::Contained => Ok(Extension::Extends),
        Containment::NotContained { vertex, separator } => {
            let neg: Vec<Q> = separator.iter().map(|c| -c).collect();
            let witness = primitive_integer_direction(&neg)
                .iter()
                .map(|x| {
                    i64::try_from(x).map_err(|_| Error::Invalid("witness overflows i64".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let point = vertex
                .iter()
                .map(|x| i64::try_from(x.to_integer()).expect("integer vertex"))
                .collect();
            if star_condition(data, &witness)? {
                return Err(Error::Invalid(format!(
                    "separator {witness:?} does not violate the star condition"
                )));
            }
            Ok(Extension::Fails { point, witness })
        }
    }
}

/// `{a ∈ A : (u,a) minimal}`: the support of `lim_{t→0} λ_u(t)·[v]` for `v`
/// with full support `A`.
pub fn boundary_witness(a: &[Vec<i64>], u: &[i64]) -> Result<Vec<Vec<i64>>> {
    if a.is_empty() {
        return Err(Error::Empty("character set A"));
    }
    if let Some(bad) = a.iter().find(|x| x.len() != u.len()) {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: bad.len(),
        });
    }
    let m = a.iter().map(|x| ip(u, x)).min().expect("nonempty");
    Ok(a.iter().filter(|x| ip(u, x) == m).cloned().collect())
}

fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let (mut rank, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

fn int_det(rows: Vec<Vec<i64>>) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let (mut sign, mut prev) = (1i128, 1i128);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                m[r][k] = (m[c][c] * m[r][k] - m[r][c] * m[c][k]) / prev;
            }
        }
        prev = m[c][c];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

enum FaceTest {
    NotFace,
    Face(Vec<i64>),
    Undecided,
}

/// Exact shortcuts: a face is cut out by its affine span, and a face whose
/// span is a hyperplane is decided by the sign of its normal.
fn face_shortcut(a: &[Vec<i64>], face: &[usize]) -> FaceTest {
    let dim = a[0].len();
    if face.len() == a.len() {
        return FaceTest::Face(vec![0; dim]);
    }
    let base = &a[face[0]];
    let diff = |x: &Vec<i64>| -> Vec<i64> { x.iter().zip(base).map(|(p, q)| p - q).collect() };
    let mut span: Vec<Vec<i64>> = Vec::new();
    for &i in &face[1..] {
        let mut t = span.clone();
        t.push(diff(&a[i]));
        if int_rank(&t) > span.len() {
            span = t;
        }
    }
    let off: Vec<Vec<i64>> = (0..a.len())
        .filter(|i| !face.contains(i))
        .map(|i| diff(&a[i]))
        .collect();
    for x in &off {
        let mut t = span.clone();
        t.push(x.clone());
        if int_rank(&t) == span.len() {
            return FaceTest::NotFace;
        }
    }
    if span.len() + 1 != dim {
        return FaceTest::Undecided;
    }
    let normal: Vec<i128> = (0..dim)
        .map(|k| {
            let minor = span
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            if k % 2 == 0 {
                int_det(minor)
            } else {
                -int_det(minor)
            }
        })
        .collect();
    let side: Vec<i128> = off
        .iter()
        .map(|x| x.iter().zip(&normal).map(|(&p, q)| p as i128 * q).sum())
        .collect();
    let sign = if side.iter().all(|&s| s > 0) {
        1
    } else if side.iter().all(|&s| s < 0) {
        -1
    } else {
        return FaceTest::NotFace;
    };
    let g = normal
        .iter()
        .fold(0i128, |g, &x| num_integer::Integer::gcd(&g, &x));
    match normal
        .iter()
        .map(|&x| i64::try_from(sign * x / g))
        .collect()
    {
        Ok(u) => FaceTest::Face(u),
        Err(_) => FaceTest::Undecided,
    }
}

/// Integer functional realizing the subset `face` (indices into `a`) as an
/// argmin set, if any real functional does.
pub fn face_functional(a: &[Vec<i64>], face: &[usize]) -> Option<Vec<i64>> {
    let dim = a.first()?.len();
    let off: Vec<usize> = (0..a.len()).filter(|i| !face.contains(i)).collect();
    // Columns: u⁺, u⁻, m⁺, m⁻, one slack per point off the face.
    let ncols = 2 * dim + 2 + off.len();
    let mut rows = Vec::with_capacity(a.len());
    let mut rhs = Vec::with_capacity(a.len());
    for (i, x) in a.iter().enumerate() {
        let mut row = vec![Q::default(); ncols];
        for k in 0..dim {
            row[k] = int(x[k]);
            row[dim + k] = int(-x[k]);
        }
        row[2 * dim] = int(-1);
        row[2 * dim + 1] = int(1);
        if let Some(j) = off.iter().position(|&o| o == i) {
            row[2 * dim + 2 + j] = int(-1);
            rhs.push(int(1));
        } else {
            rhs.push(int(0));
        }
        rows.push(row);
    }
    match feasible(&rows, &rhs) {
        Feasibility::Feasible(x) => {
            let u: Vec<Q> = (0..dim).map(|k| &x[k] - &x[dim + k]).collect();
            let ints = primitive_integer_direction(&u);
            ints.iter().map(|v| i64::try_from(v).ok()).collect()
        }
        Feasibility::Infeasible(_) => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Accessibility {
    /// Argmin sets of real functionals, as sorted index lists.
    pub faces: Vec<Vec<usize>>,
    /// Coordinate bound from the integerized LP functionals.
    pub bound: i64,
    /// Argmin sets reached by integer functionals in the box `[-bound, bound]^dim`.
    pub realized: Vec<Vec<usize>>,
}

impl Accessibility {
    pub fn complete(&self) -> bool {
        self.faces == self.realized
    }
}

/// Face supports of `hull(A)` by LP, then an exhaustive integer sweep over
/// the box bounded by the largest LP functional coordinate.
pub fn accessibility(a: &[Vec<i64>]) -> Result<Accessibility> {
    if a.is_empty() {
        return Err(Error::Empty("character set A"));
    }
    if a.len() > 16 {
        return Err(Error::SupportTooLarge {
            size: a.len(),
            cap: 16,
        });
    }
    let dim = a[0].len();
    let mut faces = Vec::new();
    let mut bound = 0i64;
    for mask in 1u32..(1 << a.len()) {
        let face: Vec<usize> = (0..a.len()).filter(|i| mask >> i & 1 == 1).collect();
        let found = match face_shortcut(a, &face) {
            FaceTest::NotFace => None,
            FaceTest::Face(u) => Some(u),
            FaceTest::Undecided => face_functional(a, &face),
        };
        if let Some(u) = found {
            bound = bound.max(u.iter().map(|x| x.abs()).max().unwrap_or(0));
            faces.push(face);
        }
    }
    faces.sort();
    let mut realized = BTreeSet::new();
    let side = (2 * bound + 1) as usize;
    let total = side
        .checked_pow(dim as u32)
        .ok_or(Error::DimensionBound { dim, max: 8 })?;
    let mut u = vec![0i64; dim];
    for mut idx in 0..total {
        for c in u.iter_mut() {
            *c = (idx % side) as i64 - bound;
            idx /= side;
        }
        let m = a.iter().map(|x| ip(&u, x)).min().expect("nonempty");
        realized.insert(
            (0..a.len())
                .filter(|&i| ip(&u, &a[i]) == m)
                .collect::<Vec<_>>(),
        );
    }
    Ok(Accessibility {
        faces,
        bound,
        realized: realized.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(a: &[&[i64]], b: &[&[i64]]) -> ToricData {
        ToricData::new(
            a.iter().map(|x| x.to_vec()).collect(),
            b.iter().map(|x| x.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn star_condition_examples() {
        let same = data(&[&[1, 2], &[0, 1]], &[&[1, 2], &[0, 1]]);
        assert!(star_condition(&same, &[5, -3]).unwrap());
        let opp = data(&[&[1, 1], &[-1, -1]], &[&[1, 1]]);
        assert!(!star_condition(&opp, &[1, 0]).unwrap());
        assert!(star_condition(&opp, &[0, 0]).unwrap());
        assert!(star_condition(&opp, &[1]).is_err());
    }

    #[test]
    fn extension_examples() {
        assert!(extension_criterion(&data(&[&[2, 1]], &[&[2, 1]]))
            .unwrap()
            .holds());
        assert!(extension_criterion(&data(&[&[1, 3], &[2, 6]], &[&[2, 6]]))
            .unwrap()
            .holds());
        match extension_criterion(&data(&[&[1, 3], &[-1, -3]], &[&[1, 3]])).unwrap() {
            Extension::Fails { point, witness } => {
                assert_eq!(point, vec![-1, -3]);
                assert!(
                    !star_condition(&data(&[&[1, 3], &[-1, -3]], &[&[1, 3]]), &witness).unwrap()
                );
            }
            Extension::Extends => panic!("should fail"),
        }
        assert!(ToricData::new(vec![vec![1]], vec![vec![2]]).is_err());
        assert!(ToricData::new(vec![vec![1]], vec![]).is_err());
    }

    #[test]
    fn boundary_witness_examples() {
        let a = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        assert_eq!(boundary_witness(&a, &[0, 0]).unwrap(), a);
        assert_eq!(
            boundary_witness(&a, &[1, 0]).unwrap(),
            vec![vec![0, 0], vec![0, 1]]
        );
        assert_eq!(boundary_witness(&a, &[2, 3]).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn accessibility_square() {
        let a = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let acc = accessibility(&a).unwrap();
        // 4 vertices, 4 edges, the whole square.
        assert_eq!(acc.faces.len(), 9);
        assert!(acc.complete());
    }

    #[test]
    fn accessibility_with_interior_point() {
        let a = vec![vec![-1, 0], vec![1, 0], vec![0, 0], vec![0, 2]];
        let acc = accessibility(&a).unwrap();
        assert!(acc.faces.contains(&vec![0, 1, 2]));
        assert!(!acc.faces.contains(&vec![2]));
        assert!(acc.complete());
    }

    #[test]
    fn shortcut_agrees_with_lp() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let dim = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=6);
            let mut a: Vec<Vec<i64>> = (0..k)
                .map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            a.sort();
            a.dedup();
            for mask in 1u32..(1 << a.len()) {
                let face: Vec<usize> = (0..a.len()).filter(|i| mask >> i & 1 == 1).collect();
                let lp = face_functional(&a, &face);
                match face_shortcut(&a, &face) {
                    FaceTest::NotFace => assert!(lp.is_none(), "{a:?} {face:?}"),
                    FaceTest::Face(u) => {
                        assert!(lp.is_some(), "{a:?} {face:?}");
                        let m = a.iter().map(|x| ip(&u, x)).min().unwrap();
                        let argmin: Vec<usize> =
                            (0..a.len()).filter(|&i| ip(&u, &a[i]) == m).collect();
                        assert_eq!(argmin, face);
                    }
                    FaceTest::Undecided => {}
                }
            }
        }
    }
}
