use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::weight::{dot, Cocharacter};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lp::{convex_membership, Membership};
use crate::rational::{serde_qvec, Q};

/// Largest ambient dimension (after removing the trace direction) accepted by
/// [`LatticePolytope::min_norm_point`].
pub const MIN_NORM_MAX_DIM: usize = 4;

/// Rational polytope in vertex form. The vertex list is irredundant,
/// duplicate-free and sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Containment {
    Contained,
    /// `vertex` of the inner polytope is strictly separated from the outer
    /// one: `separator·vertex > max over the outer polytope`.
    NotContained {
        vertex: Vec<Q>,
        separator: Vec<Q>,
    },
}

impl Containment {
    pub fn holds(&self) -> bool {
        matches!(self, Containment::Contained)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinNormPoint {
    pub point: Vec<Q>,
    pub norm_sq: Q,
}

impl LatticePolytope {
    /// Convex hull of a nonempty point list, reduced to its vertices.
    pub fn hull(points: &[Vec<Q>]) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty("hull of no points"))?;
        let ambient = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::LengthMismatch {
                expected: ambient,
                found: p.len(),
            });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let mut i = 0;
        while i < pts.len() && pts.len() > 1 {
            let others: Vec<Vec<Q>> = pts
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if let Membership::Inside(_) = convex_membership(&others, &pts[i]) {
                pts.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(LatticePolytope {
            ambient,
            vertices: pts,
        })
    }

    pub fn point(p: Vec<Q>) -> Self {
        LatticePolytope {
            ambient: p.len(),
            vertices: vec![p],
        }
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn scaled(&self, k: &Q) -> Self {
        let mut vertices: Vec<Vec<Q>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * k).collect())
            .collect();
        if k.is_negative() {
            vertices.sort();
        }
        if k.is_zero() {
            vertices.truncate(1);
        }
        LatticePolytope {
            ambient: self.ambient,
            vertices,
        }
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.ambient {
            return Err(Error::LengthMismatch {
                expected: self.ambient,
                found,
            });
        }
        Ok(())
    }

    /// Exact membership of a single point.
    pub fn contains_point(&self, p: &[Q]) -> Result<Membership> {
        self.check_dim(p.len())?;
        Ok(convex_membership(&self.vertices, p))
    }

    /// Is `inner ⊆ self`? Decided vertex by vertex by exact LP; on failure the
    /// first offending vertex (in canonical order) comes with a separator.
    pub fn contains(&self, inner: &LatticePolytope) -> Result<Containment> {
        self.check_dim(inner.ambient)?;
        for q in &inner.vertices {
            if self.vertices.contains(q) {
                continue;
            }
            if let Membership::Outside(c) = convex_membership(&self.vertices, q) {
                return Ok(Containment::NotContained {
                    vertex: q.clone(),
                    separator: c,
                });
            }
        }
        Ok(Containment::Contained)
    }

    /// `min_{x ∈ P} ⟨x, u⟩`, attained at a vertex.
    pub fn support_min(&self, u: &[Q]) -> Result<Q> {
        self.check_dim(u.len())?;
        Ok(self
            .vertices
            .iter()
            .map(|v| dot(v, u))
            .min()
            .expect("polytopes are nonempty"))
    }

    pub fn support_min_cochar(&self, u: &Cocharacter) -> Result<Q> {
        self.support_min(&u.as_rational())
    }

    /// Dimension of the ambient once the trace direction is removed: points
    /// with coordinate sum zero live in a hyperplane.
    pub fn effective_dim(&self) -> usize {
        let traceless = self.vertices.iter().all(|v| v.iter().sum::<Q>().is_zero());
        if traceless && self.ambient > 0 {
            self.ambient - 1
        } else {
            self.ambient
        }
    }

    /// Point of the polytope closest to the origin in the Euclidean norm.
    ///
    /// Exhaustive over affinely independent vertex subsets in increasing size
    /// (then lexicographic) order: each subset's affine hull is projected onto
    /// exactly, projections with nonnegative barycentric weights are
    /// candidates, and the first candidate `x` satisfying the optimality
    /// certificate `⟨x, v⟩ >= ‖x‖²` for every vertex `v` is returned.
    pub fn min_norm_point(&self) -> Result<MinNormPoint> {
        let dim = self.effective_dim();
        if dim > MIN_NORM_MAX_DIM {
            return Err(Error::DimensionBound {
                dim,
                max: MIN_NORM_MAX_DIM,
            });
        }
        let n = self.vertices.len();
        let max_size = n.min(dim + 1);
        for size in 1..=max_size {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                if let Some(x) = self.project_on_subset(&idx) {
                    let norm_sq = dot(&x, &x);
                    if self.vertices.iter().all(|v| dot(&x, v) >= norm_sq) {
                        return Ok(MinNormPoint { point: x, norm_sq });
                    }
                }
                if !next_combination(&mut idx, n) {
                    break;
                }
            }
        }
        unreachable!("some face always carries the minimum-norm point")
    }

    /// Orthogonal projection of the origin onto the affine hull of the chosen
    /// vertices, if they are affinely independent and the projection lies in
    /// their convex hull.
    fn project_on_subset(&self, idx: &[usize]) -> Option<Vec<Q>> {
        let base = &self.vertices[idx[0]];
        if idx.len() == 1 {
            return Some(base.clone());
        }
        let dirs: Vec<Vec<Q>> = idx[1..]
            .iter()
            .map(|&i| {
                self.vertices[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let k = dirs.len();
        let gram = Matrix::from_rows(
            (0..k)
                .map(|i| (0..k).map(|j| dot(&dirs[i], &dirs[j])).collect())
                .collect(),
        );
        let rhs: Vec<Q> = dirs.iter().map(|d| -dot(d, base)).collect();
        let alpha = gram.solve(&rhs)?;
        let lead = Q::from_integer(1.into()) - alpha.iter().sum::<Q>();
        if lead.is_negative() || alpha.iter().any(Signed::is_negative) {
            return None;
        }
        let mut x = base.clone();
        for (a, d) in alpha.iter().zip(&dirs) {
            for (xi, di) in x.iter_mut().zip(d) {
                *xi += a * di;
            }
        }
        Some(x)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    vertices: Vec<RationalPoint>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RationalPoint(#[serde(with = "serde_qvec")] Vec<Q>);

impl Serialize for LatticePolytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson {
            vertices: self.vertices.iter().cloned().map(RationalPoint).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolytopeJson::deserialize(d)?;
        let pts: Vec<Vec<Q>> = raw.vertices.into_iter().map(|p| p.0).collect();
        LatticePolytope::hull(&pts).map_err(serde::de::Error::custom)
    }
}
