//! Worked examples as executable data: the 2×2 quadric pair, the SL(3)
//! nilpotent-variety pair, the blow-up pair, an inaccessible boundary point
//! and the GKZ polytopes for small degrees.

use serde::Serialize;
use serde_json::Value;

use crate::binaryforms::{
    chow_polytope_vertices, disc_polytope_vertices, newton_polytope, scaled_containment_check,
    symbolic_textbook_discriminant, to_rational_points, ScaledContainment,
};
use crate::error::{Error, Result};
use crate::io::{envelope, vector_to_json};
use crate::lattice::{Cocharacter, LatticePolytope, Weight};
use crate::linalg::Matrix;
use crate::pairs::{
    characteristic, nss_check, nss_fixed_torus, pair_with_h, weight_1ps, Pair, Verdict,
};
use crate::rational::{int, ratio, Q};
use crate::rep::{matrix_action, ModuleDescriptor, Shape, WeightedVector};

pub const EXAMPLES: [&str; 5] = [
    "quadric-2x2",
    "sl3-xnil",
    "blowup",
    "inaccessible-boundary",
    "gkz",
];

/// `gl_3 ⊗ C³` realized as `C³ ⊗ Λ²C³ ⊗ C³`, with `E_ij = e_i ⊗ e_j^*` and
/// `e_j^*` identified with `★e_j` (`e_2 ∧ e_3`, `e_3 ∧ e_1`, `e_1 ∧ e_2`).
pub fn gl3_tensor_module() -> ModuleDescriptor {
    ModuleDescriptor::tensor(2, vec![Shape::Sym(1), Shape::Wedge(2), Shape::Sym(1)])
}

/// `E_ij ⊗ e_k` (indices from 1) scaled by `c`.
pub fn gl3_term(i: usize, j: usize, k: usize, c: Q) -> (Vec<i64>, Q) {
    let mut key = vec![0i64; 9];
    key[i - 1] = 1;
    for l in 1..=3 {
        if l != j {
            key[3 + l - 1] = 1;
        }
    }
    key[6 + k - 1] = 1;
    let sign = if j == 2 { int(-1) } else { int(1) };
    (key, c * sign)
}

fn gl3_vector(terms: &[(usize, usize, usize, Q)]) -> WeightedVector {
    WeightedVector::new(
        gl3_tensor_module(),
        terms
            .iter()
            .map(|(i, j, k, c)| gl3_term(*i, *j, *k, c.clone())),
    )
    .expect("fixture vectors are nonzero")
}

/// Vectors of the nilpotent-variety example.
#[derive(Debug, Clone)]
pub struct XNil {
    /// `E_23 ⊗ e_1`.
    pub u: WeightedVector,
    /// `E_13 ⊗ e_1`, highest weight `(3,1,0)`.
    pub xi310: WeightedVector,
    /// `E_23 ⊗ e_1 - E_13 ⊗ e_2`, highest weight `(2,2,0)`.
    pub xi220: WeightedVector,
    /// `E_21 · ξ_310 = E_23 ⊗ e_1 + E_13 ⊗ e_2`.
    pub e21_xi310: WeightedVector,
    /// The basepoint `½(E_23 ⊗ e_1 + 2 ξ_310)`.
    pub o: WeightedVector,
    /// The pair `(ξ_220, E_21 · ξ_310)`.
    pub pair: Pair,
}

pub fn xnil() -> XNil {
    let one = int(1);
    let u = gl3_vector(&[(2, 3, 1, one.clone())]);
    let xi310 = gl3_vector(&[(1, 3, 1, one.clone())]);
    let xi220 = gl3_vector(&[(2, 3, 1, one.clone()), (1, 3, 2, int(-1))]);
    let e21_xi310 = gl3_vector(&[(2, 3, 1, one.clone()), (1, 3, 2, one.clone())]);
    let o = gl3_vector(&[(2, 3, 1, ratio(1, 2)), (1, 3, 1, one)]);
    let pair = Pair::new(xi220.clone(), e21_xi310.clone()).expect("same group");
    XNil {
        u,
        xi310,
        xi220,
        e21_xi310,
        o,
        pair,
    }
}

fn elementary(i: usize, j: usize, c: i64) -> Matrix {
    let mut m = Matrix::identity(3);
    m[(i - 1, j - 1)] = int(c);
    m
}

#[derive(Debug, Clone, Serialize)]
pub struct XNilReport {
    pub chi_min_class: Weight,
    #[serde(with = "crate::rational::serde_qvec")]
    pub chi_min: Vec<Q>,
    #[serde(with = "crate::rational::serde_qvec")]
    pub h: Vec<Q>,
    pub h_is_half_diag_1_1_minus2: bool,
    pub degeneration_cocharacter: Cocharacter,
    pub degeneration_weight: i64,
    /// Pairings with `h` of the support weights of `E_23 ⊗ e_1`.
    pub support_pairings: Vec<(Weight, String)>,
    /// Pairings with `h` of the weights `(3,1,0)`, `(2,2,0)`, `(1,3,0)` on Γ.
    pub gamma_pairings: Vec<(Weight, String)>,
    /// `exp(E_12)·(E_23 ⊗ e_1) = E_23 ⊗ e_1 + ξ_310` under the toolkit's action.
    pub exp_e12_image_is_u_plus_xi310: bool,
    /// `E_21 · ξ_310` recovered as the odd part of `exp(s E_21)·ξ_310`.
    pub lie_action_check: bool,
    /// `E_23 ⊗ e_1 = ½(ξ_220 + E_21 · ξ_310)`.
    pub decomposition_check: bool,
    pub fixed_torus_semistable: bool,
    pub pair_verdict: Verdict,
    pub pair: Value,
}

fn integer_class(p: &[Q]) -> Option<Weight> {
    let last = p.last()?.clone();
    let coords: Option<Vec<i64>> = p
        .iter()
        .map(|x| {
            let y = x - &last;
            y.is_integer()
                .then(|| i64::try_from(y.to_integer()).ok())
                .flatten()
        })
        .collect();
    coords.map(Weight::new)
}

pub fn xnil_report(samples: usize, seed: u64) -> Result<XNilReport> {
    let x = xnil();
    let c = characteristic(&x.u)?;
    let chi_min_class =
        integer_class(&c.chi_min).ok_or_else(|| Error::Invalid("χ_min is not integral".into()))?;
    let lam = Cocharacter::new(vec![-1, 1, 0])?;
    let fmt = |w: &Weight| (w.clone(), crate::rational::format(&pair_with_h(w, &c.h)));
    let support_pairings = x.u.support().iter().map(fmt).collect();
    let gamma_pairings = [[3, 1, 0], [2, 2, 0], [1, 3, 0]]
        .iter()
        .map(|w| fmt(&Weight::new(w.to_vec())))
        .collect();
    let image = matrix_action(&elementary(1, 2, 1), &x.u)?;
    let plus = matrix_action(&elementary(2, 1, 1), &x.xi310)?;
    let minus = matrix_action(&elementary(2, 1, -1), &x.xi310)?;
    let odd = plus.add(&minus.scaled(&int(-1))?)?.scaled(&ratio(1, 2))?;
    let decomposition = x.xi220.add(&x.e21_xi310)?.scaled(&ratio(1, 2))?;
    Ok(XNilReport {
        chi_min_class,
        h_is_half_diag_1_1_minus2: c.h == vec![ratio(1, 2), ratio(1, 2), int(-1)],
        chi_min: c.chi_min,
        h: c.h,
        degeneration_weight: weight_1ps(&x.o, &lam)?,
        degeneration_cocharacter: lam,
        support_pairings,
        gamma_pairings,
        exp_e12_image_is_u_plus_xi310: image == x.u.add(&x.xi310)?,
        lie_action_check: odd == x.e21_xi310,
        decomposition_check: decomposition == x.u,
        fixed_torus_semistable: nss_fixed_torus(&x.pair)?.holds(),
        pair_verdict: nss_check(&x.pair, samples, seed)?,
        pair: crate::io::pair_to_json(&x.pair),
    })
}

/// `(1, e_1 e_2)` over SL(2), from `e_1 ⊗ e_2 = e_1 ∧ e_2 + e_1 · e_2`.
pub fn quadric_pair() -> Pair {
    let w = WeightedVector::basis_vector(ModuleDescriptor::sym(1, 2), vec![1, 1])
        .expect("basis vector");
    Pair::new(WeightedVector::one(1), w).expect("same group")
}

/// `((e_1 ∧ e_2)², e_1 e_2 ⊗ (e_1 ∧ e_2))` in `𝔼_220 ⊕ 𝔼_310` over SL(3).
pub fn blowup_pair() -> Pair {
    let v = WeightedVector::basis_vector(
        ModuleDescriptor::tensor(2, vec![Shape::Wedge(2), Shape::Wedge(2)]),
        vec![1, 1, 0, 1, 1, 0],
    )
    .expect("basis vector");
    let w = WeightedVector::basis_vector(
        ModuleDescriptor::tensor(2, vec![Shape::Sym(2), Shape::Wedge(2)]),
        vec![1, 1, 0, 1, 1, 0],
    )
    .expect("basis vector");
    Pair::new(v, w).expect("same group")
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub name: String,
    pub pair: Value,
    pub fixed_torus_semistable: bool,
    pub verdict: Verdict,
}

fn pair_report(name: &str, p: &Pair, samples: usize, seed: u64) -> Result<PairReport> {
    Ok(PairReport {
        name: name.into(),
        pair: crate::io::pair_to_json(p),
        fixed_torus_semistable: nss_fixed_torus(p)?.holds(),
        verdict: nss_check(p, samples, seed)?,
    })
}

/// `σ(t) = [[t, t^{-d}], [0, t^{-1}]]`.
pub fn inaccessible_sigma(d: usize, t: &Q) -> Matrix {
    let td = num_traits::pow(t.clone(), d);
    Matrix::from_rows(vec![vec![t.clone(), td.recip()], vec![int(0), t.recip()]])
}

#[derive(Debug, Clone, Serialize)]
pub struct InaccessibleReport {
    pub d: usize,
    /// `σ(t)·e_1^d e_2` for `t = 1/10, 1/100, 1/1000`.
    pub images: Vec<Value>,
    /// `σ(t)·e_1^d e_2 = e_1^{d+1} + t^{d-1} e_1^d e_2` at every sampled `t`.
    pub substitution_holds: bool,
    pub limit: Value,
    /// The pair `(1, e_1^d e_2)` under the SL(2) decider.
    pub verdict: Verdict,
}

pub fn inaccessible_report(d: usize) -> Result<InaccessibleReport> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    let m = ModuleDescriptor::sym(1, d + 1);
    let di = d as i64;
    let v = WeightedVector::basis_vector(m.clone(), vec![di, 1])?;
    let limit = WeightedVector::basis_vector(m.clone(), vec![di + 1, 0])?;
    let mut images = Vec::new();
    let mut ok = true;
    for k in 1..=3 {
        let t = ratio(1, 10i64.pow(k));
        let img = matrix_action(&inaccessible_sigma(d, &t), &v)?;
        let expect = WeightedVector::new(
            m.clone(),
            [
                (vec![di + 1, 0], int(1)),
                (vec![di, 1], num_traits::pow(t.clone(), d - 1)),
            ],
        )?;
        ok &= img == expect;
        images.push(vector_to_json(&img));
    }
    let p = Pair::new(WeightedVector::one(1), v)?;
    Ok(InaccessibleReport {
        d,
        images,
        substitution_holds: ok,
        limit: vector_to_json(&limit),
        verdict: nss_check(&p, 0, 0)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GkzReport {
    pub d: usize,
    pub chow_vertices: Vec<Vec<i64>>,
    pub disc_vertices: Vec<Vec<i64>>,
    pub scaled_containment: ScaledContainment,
    /// Newton polytope of the expanded discriminant equals the hull of the
    /// discriminant vertices.
    pub newton_polytope_matches: bool,
}

pub fn gkz_report(d: usize) -> Result<GkzReport> {
    let disc = disc_polytope_vertices(d)?;
    let newton = newton_polytope(&symbolic_textbook_discriminant(d)?)?;
    Ok(GkzReport {
        d,
        chow_vertices: chow_polytope_vertices(d)?,
        newton_polytope_matches: newton == LatticePolytope::hull(&to_rational_points(&disc))?,
        disc_vertices: disc,
        scaled_containment: scaled_containment_check(d)?,
    })
}

/// JSON document for one named example.
pub fn run_example(name: &str, samples: usize, seed: u64) -> Result<Value> {
    match name {
        "quadric-2x2" => envelope(
            "example.pair",
            &pair_report(name, &quadric_pair(), samples, seed)?,
        ),
        "blowup" => envelope(
            "example.pair",
            &pair_report(name, &blowup_pair(), samples, seed)?,
        ),
        "sl3-xnil" => envelope("example.xnil", &xnil_report(samples, seed)?),
        "inaccessible-boundary" => {
            let reports = (2..=4)
                .map(inaccessible_report)
                .collect::<Result<Vec<_>>>()?;
            envelope("example.inaccessible", &reports)
        }
        "gkz" => {
            let reports = (2..=4).map(gkz_report).collect::<Result<Vec<_>>>()?;
            envelope("example.gkz", &reports)
        }
        other => Err(Error::Invalid(format!(
            "unknown example {other:?}; known: {}",
            EXAMPLES.join(", ")
        ))),
    }
}
