//! Concrete rational SL(N+1)-modules: symmetric powers in the monomial basis,
//! exterior powers in the standard wedge basis, tensor products of these, and
//! the trivial module.
//!
//! A basis element is addressed by an integer key. For `Sym(d)` the key is the
//! exponent vector of the monomial, for `Wedge(k)` it is the 0/1 indicator of
//! the index set, for the trivial module it is empty, and for a tensor
//! product it is the concatenation of the factor keys. In the first two cases
//! the key is also the weight of the basis vector.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Cocharacter, LatticePolytope, Weight};
use crate::linalg::Matrix;
use crate::rational::Q;

pub type BasisKey = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Trivial,
    Sym(usize),
    Wedge(usize),
    Tensor(Vec<Shape>),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Trivial => write!(f, "Trivial"),
            Shape::Sym(d) => write!(f, "Sym({d})"),
            Shape::Wedge(k) => write!(f, "Wedge({k})"),
            Shape::Tensor(parts) => {
                write!(f, "Tensor(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Shape> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (shape, rest) = parse_shape(&s)?;
        if !rest.is_empty() {
            return Err(Error::Parse(format!("trailing input in shape: {rest:?}")));
        }
        Ok(shape)
    }
}

fn parse_shape(s: &str) -> Result<(Shape, &str)> {
    let bad = || Error::Parse(format!("malformed shape: {s:?}"));
    if let Some(rest) = s.strip_prefix("Trivial") {
        return Ok((Shape::Trivial, rest));
    }
    for (name, ctor) in [
        ("Sym(", Shape::Sym as fn(usize) -> Shape),
        ("Wedge(", Shape::Wedge),
    ] {
        if let Some(rest) = s.strip_prefix(name) {
            let close = rest.find(')').ok_or_else(bad)?;
            let k: usize = rest[..close].parse().map_err(|_| bad())?;
            return Ok((ctor(k), &rest[close + 1..]));
        }
    }
    if let Some(mut rest) = s.strip_prefix("Tensor(") {
        let mut parts = Vec::new();
        loop {
            let (p, r) = parse_shape(rest)?;
            parts.push(p);
            if let Some(r) = r.strip_prefix(',') {
                rest = r;
            } else if let Some(r) = r.strip_prefix(')') {
                return Ok((Shape::Tensor(parts), r));
            } else {
                return Err(bad());
            }
        }
    }
    Err(bad())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A realized module of SL(N+1): rank parameter `n` (= N) and a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleDescriptor {
    pub n: usize,
    pub shape: Shape,
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of SL({})", self.shape, self.n + 1)
    }
}

impl ModuleDescriptor {
    pub fn new(n: usize, shape: Shape) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("rank parameter N must be at least 1".into()));
        }
        validate_shape(n, &shape)?;
        Ok(ModuleDescriptor { n, shape })
    }

    pub fn sym(n: usize, d: usize) -> Self {
        ModuleDescriptor {
            n,
            shape: Shape::Sym(d),
        }
    }

    pub fn wedge(n: usize, k: usize) -> Self {
        ModuleDescriptor {
            n,
            shape: Shape::Wedge(k),
        }
    }

    pub fn trivial(n: usize) -> Self {
        ModuleDescriptor {
            n,
            shape: Shape::Trivial,
        }
    }

    pub fn tensor(n: usize, parts: Vec<Shape>) -> Self {
        ModuleDescriptor {
            n,
            shape: Shape::Tensor(parts),
        }
    }

    /// Number of coordinates of the standard representation, N+1.
    pub fn rank(&self) -> usize {
        self.n + 1
    }

    pub fn dimension(&self) -> usize {
        shape_dim(self.rank(), &self.shape)
    }

    pub fn key_len(&self) -> usize {
        key_len(self.rank(), &self.shape)
    }

    /// Basis keys in lexicographic order.
    pub fn basis(&self) -> Vec<BasisKey> {
        let mut b = shape_basis(self.rank(), &self.shape);
        b.sort();
        b
    }

    pub fn weight_of(&self, key: &[i64]) -> Weight {
        let mut w = vec![0; self.rank()];
        accumulate_weight(self.rank(), &self.shape, key, &mut w);
        Weight::new(w)
    }

    pub fn contains_key(&self, key: &[i64]) -> bool {
        key_in_shape(self.rank(), &self.shape, key)
    }

    /// Weight multiplicities of the realization.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, usize> {
        let mut m = BTreeMap::new();
        for k in self.basis() {
            *m.entry(self.weight_of(&k)).or_insert(0) += 1;
        }
        m
    }

    pub fn distinct_weights(&self) -> Vec<Weight> {
        self.weight_multiplicities().into_keys().collect()
    }
}

fn validate_shape(rank: usize, shape: &Shape) -> Result<()> {
    match shape {
        Shape::Wedge(k) if *k > rank => Err(Error::UnsupportedShape(format!(
            "Wedge({k}) of a rank-{rank} space is zero"
        ))),
        Shape::Tensor(parts) if parts.is_empty() => {
            Err(Error::UnsupportedShape("empty tensor product".into()))
        }
        Shape::Tensor(parts) => parts.iter().try_for_each(|p| validate_shape(rank, p)),
        _ => Ok(()),
    }
}

fn shape_dim(rank: usize, shape: &Shape) -> usize {
    match shape {
        Shape::Trivial => 1,
        Shape::Sym(d) => binomial(rank + d - 1, *d),
        Shape::Wedge(k) => binomial(rank, *k),
        Shape::Tensor(parts) => parts.iter().map(|p| shape_dim(rank, p)).product(),
    }
}

pub(crate) fn key_len(rank: usize, shape: &Shape) -> usize {
    match shape {
        Shape::Trivial => 0,
        Shape::Sym(_) | Shape::Wedge(_) => rank,
        Shape::Tensor(parts) => parts.iter().map(|p| key_len(rank, p)).sum(),
    }
}

fn compositions(rank: usize, d: usize) -> Vec<Vec<i64>> {
    if rank == 1 {
        return vec![vec![d as i64]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut tail in compositions(rank - 1, d - first) {
            tail.insert(0, first as i64);
            out.push(tail);
        }
    }
    out
}

fn subsets(rank: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << rank) {
        if mask.count_ones() as usize == k {
            out.push((0..rank).map(|i| ((mask >> i) & 1) as i64).collect());
        }
    }
    out
}

fn shape_basis(rank: usize, shape: &Shape) -> Vec<BasisKey> {
    match shape {
        Shape::Trivial => vec![Vec::new()],
        Shape::Sym(d) => compositions(rank, *d),
        Shape::Wedge(k) => subsets(rank, *k),
        Shape::Tensor(parts) => {
            let mut acc: Vec<BasisKey> = vec![Vec::new()];
            for p in parts {
                let factor = shape_basis(rank, p);
                acc = acc
                    .iter()
                    .flat_map(|a| {
                        factor.iter().map(move |f| {
                            let mut k = a.clone();
                            k.extend_from_slice(f);
                            k
                        })
                    })
                    .collect();
            }
            acc
        }
    }
}

fn accumulate_weight(rank: usize, shape: &Shape, key: &[i64], out: &mut [i64]) {
    match shape {
        Shape::Trivial => {}
        Shape::Sym(_) | Shape::Wedge(_) => {
            for (o, k) in out.iter_mut().zip(key) {
                *o += k;
            }
        }
        Shape::Tensor(parts) => {
            let mut off = 0;
            for p in parts {
                let l = key_len(rank, p);
                accumulate_weight(rank, p, &key[off..off + l], out);
                off += l;
            }
        }
    }
}

fn key_in_shape(rank: usize, shape: &Shape, key: &[i64]) -> bool {
    if key.len() != key_len(rank, shape) {
        return false;
    }
    match shape {
        Shape::Trivial => true,
        Shape::Sym(d) => key.iter().all(|&x| x >= 0) && key.iter().sum::<i64>() == *d as i64,
        Shape::Wedge(k) => {
            key.iter().all(|&x| x == 0 || x == 1) && key.iter().sum::<i64>() == *k as i64
        }
        Shape::Tensor(parts) => {
            let mut off = 0;
            parts.iter().all(|p| {
                let l = key_len(rank, p);
                let ok = key_in_shape(rank, p, &key[off..off + l]);
                off += l;
                ok
            })
        }
    }
}

/// Vector of a realized module, stored sparsely in the module basis. The
/// term map never holds zero coefficients and is never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedVector {
    module: ModuleDescriptor,
    terms: BTreeMap<BasisKey, Q>,
}

impl WeightedVector {
    pub fn new(
        module: ModuleDescriptor,
        terms: impl IntoIterator<Item = (BasisKey, Q)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<BasisKey, Q> = BTreeMap::new();
        for (k, c) in terms {
            if !module.contains_key(&k) {
                return Err(Error::Invalid(format!(
                    "basis key {k:?} does not belong to {module}"
                )));
            }
            *map.entry(k).or_insert_with(Q::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::ZeroVector);
        }
        Ok(WeightedVector { module, terms: map })
    }

    pub fn basis_vector(module: ModuleDescriptor, key: BasisKey) -> Result<Self> {
        Self::new(module, [(key, Q::one())])
    }

    /// The constant `1` of the trivial module.
    pub fn one(n: usize) -> Self {
        WeightedVector {
            module: ModuleDescriptor::trivial(n),
            terms: BTreeMap::from([(Vec::new(), Q::one())]),
        }
    }

    pub fn module(&self) -> &ModuleDescriptor {
        &self.module
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, Q> {
        &self.terms
    }

    pub fn coefficient(&self, key: &[i64]) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    /// Weights carrying a nonzero component of the vector.
    pub fn support(&self) -> BTreeSet<Weight> {
        self.terms
            .keys()
            .map(|k| self.module.weight_of(k))
            .collect()
    }

    /// Weight polytope: hull of the traceless representatives of the support.
    pub fn weight_polytope(&self) -> LatticePolytope {
        let pts: Vec<Vec<Q>> = self.support().iter().map(Weight::traceless).collect();
        LatticePolytope::hull(&pts).expect("support of a nonzero vector is nonempty")
    }

    pub fn scaled(&self, k: &Q) -> Result<Self> {
        Self::new(
            self.module.clone(),
            self.terms.iter().map(|(key, c)| (key.clone(), c * k)),
        )
    }

    pub fn add(&self, other: &WeightedVector) -> Result<Self> {
        if self.module != other.module {
            return Err(Error::Invalid(
                "cannot add vectors of different modules".into(),
            ));
        }
        Self::new(
            self.module.clone(),
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Squared norm with the basis taken orthonormal.
    pub fn norm_sq(&self) -> Q {
        self.terms.values().map(|c| c * c).sum()
    }

    /// Coordinates in the lexicographically ordered basis of the module.
    pub fn dense(&self) -> Vec<Q> {
        self.module
            .basis()
            .iter()
            .map(|k| self.coefficient(k))
            .collect()
    }
}

/// Weyl-orbit polytope of a dominant weight: hull of the traceless
/// representatives of all coordinate permutations.
pub fn weyl_orbit_polytope(lambda: &Weight) -> Result<LatticePolytope> {
    if !lambda.is_dominant() || lambda.coords().last().is_some_and(|&c| c != 0) {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let mut perms: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut cur = lambda.coords().to_vec();
    cur.sort();
    loop {
        perms.insert(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let pts: Vec<Vec<Q>> = perms.iter().map(|p| crate::lattice::traceless(p)).collect();
    LatticePolytope::hull(&pts)
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Dominance order `λ ⊴ μ` on partitions, compared as SL(N+1) weights: both
/// are padded with zeros to a common length and the partial sums of their
/// traceless representatives are compared. For partitions of equal size this
/// is the classical partial-sum rule.
pub fn dominance_leq(lambda: &[i64], mu: &[i64]) -> bool {
    let len = lambda.len().max(mu.len());
    let pad = |p: &[i64]| {
        let mut v = p.to_vec();
        v.resize(len, 0);
        v
    };
    let (l, m) = (pad(lambda), pad(mu));
    let (sl, sm): (i64, i64) = (l.iter().sum(), m.iter().sum());
    let n = len as i64;
    // Σ_{k<=i} λ_k − i|λ|/n <= Σ_{k<=i} μ_k − i|μ|/n, scaled by n.
    let (mut pl, mut pm) = (0i64, 0i64);
    for i in 0..len {
        pl += l[i];
        pm += m[i];
        let k = i as i64 + 1;
        if n * pl - k * sl > n * pm - k * sm {
            return false;
        }
    }
    true
}

/// Default cap on the support size for [`attainable_polytopes`].
pub const ATTAINABLE_CAP: usize = 12;

/// All distinct hulls of nonempty subsets of the module's weight set.
pub fn attainable_polytopes(
    module: &ModuleDescriptor,
    size_cap: usize,
) -> Result<Vec<LatticePolytope>> {
    let weights = module.distinct_weights();
    if weights.len() > size_cap {
        return Err(Error::SupportTooLarge {
            size: weights.len(),
            cap: size_cap,
        });
    }
    let pts: Vec<Vec<Q>> = weights.iter().map(Weight::traceless).collect();
    let mut out: BTreeSet<LatticePolytope> = BTreeSet::new();
    for mask in 1u64..(1 << pts.len()) {
        let subset: Vec<Vec<Q>> = (0..pts.len())
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| pts[i].clone())
            .collect();
        out.insert(LatticePolytope::hull(&subset)?);
    }
    Ok(out.into_iter().collect())
}

/// Linear combination of basis keys.
type KeyCombination = BTreeMap<BasisKey, Q>;

fn check_special_linear(sigma: &Matrix, rank: usize) -> Result<()> {
    if sigma.rows() != rank || sigma.cols() != rank {
        return Err(Error::LengthMismatch {
            expected: rank,
            found: sigma.rows(),
        });
    }
    let det = sigma.det();
    if !det.is_one() {
        return Err(Error::NotSpecialLinear(crate::rational::format(&det)));
    }
    Ok(())
}

/// Image of `v` under `σ ∈ SL(N+1)`, with `σ e_j = Σ_i σ_ij e_i` extended to
/// symmetric, exterior and tensor powers.
pub fn matrix_action(sigma: &Matrix, v: &WeightedVector) -> Result<WeightedVector> {
    let module = v.module();
    check_special_linear(sigma, module.rank())?;
    let mut cache: HashMap<BasisKey, KeyCombination> = HashMap::new();
    let mut out: KeyCombination = BTreeMap::new();
    for (key, c) in v.terms() {
        let img = cache
            .entry(key.clone())
            .or_insert_with(|| shape_image(sigma, module.rank(), &module.shape, key));
        for (k, x) in img.iter() {
            *out.entry(k.clone()).or_insert_with(Q::zero) += c * x;
        }
    }
    WeightedVector::new(module.clone(), out)
}

fn shape_image(sigma: &Matrix, rank: usize, shape: &Shape, key: &[i64]) -> KeyCombination {
    match shape {
        Shape::Trivial => BTreeMap::from([(Vec::new(), Q::one())]),
        Shape::Sym(_) => {
            let mut acc: KeyCombination = BTreeMap::from([(vec![0; rank], Q::one())]);
            for (j, &a) in key.iter().enumerate() {
                for _ in 0..a {
                    let mut next: KeyCombination = BTreeMap::new();
                    for (m, c) in &acc {
                        for i in 0..rank {
                            let s = &sigma[(i, j)];
                            if s.is_zero() {
                                continue;
                            }
                            let mut m2 = m.clone();
                            m2[i] += 1;
                            *next.entry(m2).or_insert_with(Q::zero) += c * s;
                        }
                    }
                    next.retain(|_, c| !c.is_zero());
                    acc = next;
                }
            }
            acc
        }
        Shape::Wedge(k) => {
            let cols: Vec<usize> = (0..rank).filter(|&i| key[i] == 1).collect();
            let mut out = BTreeMap::new();
            for target in subsets(rank, *k) {
                let rows: Vec<usize> = (0..rank).filter(|&i| target[i] == 1).collect();
                let minor = sigma.submatrix(&rows, &cols).det();
                if !minor.is_zero() {
                    out.insert(target, minor);
                }
            }
            out
        }
        Shape::Tensor(parts) => {
            let mut acc: KeyCombination = BTreeMap::from([(Vec::new(), Q::one())]);
            let mut off = 0;
            for p in parts {
                let l = key_len(rank, p);
                let img = shape_image(sigma, rank, p, &key[off..off + l]);
                off += l;
                let mut next = BTreeMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &img {
                        let mut k = a.clone();
                        k.extend_from_slice(b);
                        next.insert(k, ca * cb);
                    }
                }
                acc = next;
            }
            acc
        }
    }
}

/// Diagonal torus element `diag(h)` acting on `v`: each basis vector of weight
/// χ is scaled by `Π h_i^{χ_i}`.
pub fn torus_action(h: &[Q], v: &WeightedVector) -> Result<WeightedVector> {
    let module = v.module();
    if h.len() != module.rank() {
        return Err(Error::LengthMismatch {
            expected: module.rank(),
            found: h.len(),
        });
    }
    if h.iter().any(Zero::is_zero) {
        return Err(Error::Invalid("torus element has a zero entry".into()));
    }
    let terms = v.terms().iter().map(|(k, c)| {
        let chi = module.weight_of(k);
        (k.clone(), c * character_value(h, &chi))
    });
    WeightedVector::new(module.clone(), terms)
}

/// `Π h_i^{χ_i}` for a diagonal element `h`.
pub fn character_value(h: &[Q], chi: &Weight) -> Q {
    h.iter().zip(chi.coords()).fold(Q::one(), |acc, (x, &e)| {
        let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            acc * p
        } else {
            acc / p
        }
    })
}

/// Diagonal matrix `λ_u(t) = diag(t^{u_i})` for rational `t`.
pub fn one_parameter_subgroup(u: &Cocharacter, t: &Q) -> Vec<Q> {
    u.coords()
        .iter()
        .map(|&e| {
            let p = num_traits::pow(t.clone(), e.unsigned_abs() as usize);
            if e >= 0 {
                p
            } else {
                p.recip()
            }
        })
        .collect()
}

/// Explicit highest-weight submodule of a concrete module, given by a basis.
#[derive(Debug, Clone)]
pub struct RealizedSubmodule {
    pub highest_weight: Weight,
    pub ambient: ModuleDescriptor,
    pub basis: Vec<WeightedVector>,
}

impl RealizedSubmodule {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Does `v` lie in the span of the basis?
    pub fn contains(&self, v: &WeightedVector) -> bool {
        if v.module() != &self.ambient {
            return false;
        }
        let mut rows: Vec<Vec<Q>> = self.basis.iter().map(WeightedVector::dense).collect();
        let before = Matrix::from_rows(rows.clone()).rank();
        rows.push(v.dense());
        Matrix::from_rows(rows).rank() == before
    }
}

/// α(x) for α = e_k ∧ e_l ∈ Λ²C³ viewed as the functional `x ↦ det(e_k, e_l, x)`.
fn wedge2_functional(alpha: &[i64], m: usize) -> i64 {
    let idx: Vec<usize> = (0..3).filter(|&i| alpha[i] == 1).collect();
    let perm = [idx[0], idx[1], m];
    if perm[2] == perm[0] || perm[2] == perm[1] {
        return 0;
    }
    let inversions = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `𝔼_(3,1,0)` of SL(3) as the kernel of the contraction
/// `Sym²C³ ⊗ Λ²C³ → C³`, `v·w ⊗ α ↦ α(v) w + α(w) v`.
pub fn sl3_module_310() -> RealizedSubmodule {
    let ambient = ModuleDescriptor::tensor(2, vec![Shape::Sym(2), Shape::Wedge(2)]);
    let basis = ambient.basis();
    let mut pi = Matrix::zeros(3, basis.len());
    for (col, key) in basis.iter().enumerate() {
        let (mono, alpha) = key.split_at(3);
        let factors: Vec<usize> = (0..3)
            .flat_map(|i| std::iter::repeat_n(i, mono[i] as usize))
            .collect();
        let (a, b) = (factors[0], factors[1]);
        pi[(b, col)] += crate::rational::int(wedge2_functional(alpha, a));
        pi[(a, col)] += crate::rational::int(wedge2_functional(alpha, b));
    }
    let kernel = pi
        .nullspace()
        .into_iter()
        .map(|v| {
            WeightedVector::new(ambient.clone(), basis.iter().cloned().zip(v))
                .expect("kernel vectors are nonzero")
        })
        .collect();
    RealizedSubmodule {
        highest_weight: Weight::new(vec![3, 1, 0]),
        ambient,
        basis: kernel,
    }
}

/// `𝔼_(2,2,0) ≅ Sym²(Λ²C³)` as the symmetric tensors inside `Λ² ⊗ Λ²`.
pub fn sl3_module_220() -> RealizedSubmodule {
    let ambient = ModuleDescriptor::tensor(2, vec![Shape::Wedge(2), Shape::Wedge(2)]);
    let wedges = subsets(3, 2);
    let mut basis = Vec::new();
    for i in 0..wedges.len() {
        for j in i..wedges.len() {
            let mut ab = wedges[i].clone();
            ab.extend_from_slice(&wedges[j]);
            let mut ba = wedges[j].clone();
            ba.extend_from_slice(&wedges[i]);
            basis.push(
                WeightedVector::new(ambient.clone(), [(ab, Q::one()), (ba, Q::one())])
                    .expect("symmetrized tensor is nonzero"),
            );
        }
    }
    RealizedSubmodule {
        highest_weight: Weight::new(vec![2, 2, 0]),
        ambient,
        basis,
    }
}
