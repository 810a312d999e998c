//! Exact phase-one simplex over the rationals.
//!
//! Decides feasibility of `A x = b, x >= 0` and returns either a solution or
//! a Farkas certificate `y` with `yᵀA <= 0` and `yᵀb > 0`. Pivoting follows
//! Bland's rule, so the method terminates on degenerate problems.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Q>),
    /// Farkas certificate for infeasibility.
    Infeasible(Vec<Q>),
}

/// `a` is given row-major with `b.len()` rows of equal length.
pub fn feasible(a: &[Vec<Q>], b: &[Q]) -> Feasibility {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == n), "ragged constraint matrix");

    let width = n + m + 1;
    let rhs = n + m;
    let mut signs = vec![Q::one(); m];
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Q::zero(); width];
        for j in 0..n {
            row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
        }
        row[n + i] = Q::one();
        row[rhs] = if flip { -&b[i] } else { b[i].clone() };
        if flip {
            signs[i] = -Q::one();
        }
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| -> bool { j >= n };

    loop {
        // Bland: first column with negative reduced cost enters.
        let entering = (0..n + m).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut rc = if cost(j) { Q::one() } else { Q::zero() };
            for (i, &bi) in basis.iter().enumerate() {
                if cost(bi) && !t[i][j].is_zero() {
                    rc -= &t[i][j];
                }
            }
            rc.is_negative()
        });
        let Some(e) = entering else { break };

        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][rhs] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (p, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, p, e);
        basis[p] = e;
    }

    let objective: Q = basis
        .iter()
        .enumerate()
        .filter(|(_, &bi)| cost(bi))
        .map(|(i, _)| t[i][rhs].clone())
        .sum();
    if objective.is_zero() {
        let mut x = vec![Q::zero(); n];
        for (i, &bi) in basis.iter().enumerate() {
            if bi < n {
                x[bi] = t[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        let y = (0..m)
            .map(|k| {
                let yk: Q = basis
                    .iter()
                    .enumerate()
                    .filter(|(_, &bi)| cost(bi))
                    .map(|(i, _)| t[i][n + k].clone())
                    .sum();
                yk * &signs[k]
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<Q>], p: usize, e: usize) {
    let inv = t[p][e].recip();
    for x in t[p].iter_mut() {
        *x *= &inv;
    }
    let prow = t[p].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Outcome of a convex-combination query.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// Nonnegative weights summing to one that reproduce the target.
    Inside(Vec<Q>),
    /// A functional `c` with `c·target > max_j c·points[j]`.
    Outside(Vec<Q>),
}

/// Is `target` a convex combination of `points`? All vectors share a length.
pub fn convex_membership(points: &[Vec<Q>], target: &[Q]) -> Membership {
    let dim = target.len();
    let mut a: Vec<Vec<Q>> = (0..dim)
        .map(|k| points.iter().map(|p| p[k].clone()).collect())
        .collect();
    a.push(vec![Q::one(); points.len()]);
    let mut b = target.to_vec();
    b.push(Q::one());
    match feasible(&a, &b) {
        Feasibility::Feasible(w) => Membership::Inside(w),
        Feasibility::Infeasible(mut y) => {
            y.pop();
            Membership::Outside(y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn dot(a: &[Q], b: &[Q]) -> Q {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 2, x - y = 0.
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let b = vec![int(2), int(0)];
        assert_eq!(
            feasible(&a, &b),
            Feasibility::Feasible(vec![int(1), int(1)])
        );
    }

    #[test]
    fn farkas_certificate_is_valid() {
        // x + y = -1 has no nonnegative solution.
        let a = vec![vec![int(1), int(1)]];
        let b = vec![int(-1)];
        let Feasibility::Infeasible(y) = feasible(&a, &b) else {
            panic!()
        };
        assert!(dot(&y, &b).is_positive());
        for j in 0..2 {
            let col: Vec<Q> = a.iter().map(|r| r[j].clone()).collect();
            assert!(!dot(&y, &col).is_positive());
        }
    }

    #[test]
    fn midpoint_membership() {
        let pts = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        match convex_membership(&pts, &[ratio(1, 2), ratio(1, 2)]) {
            Membership::Inside(w) => assert_eq!(w, vec![ratio(1, 2), ratio(1, 2)]),
            other => panic!("{other:?}"),
        }
        match convex_membership(&pts, &[int(1), int(1)]) {
            Membership::Outside(c) => {
                let t = dot(&c, &[int(1), int(1)]);
                assert!(pts.iter().all(|p| dot(&c, p) < t));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale-style degenerate system; Bland's rule must not cycle.
        let a = vec![
            vec![ratio(1, 4), int(-8), int(-1), int(9), int(1), int(0)],
            vec![ratio(1, 2), int(-12), ratio(-1, 2), int(3), int(0), int(1)],
            vec![int(0), int(0), int(1), int(0), int(0), int(0)],
        ];
        let b = vec![int(0), int(0), int(1)];
        assert!(matches!(feasible(&a, &b), Feasibility::Feasible(_)));
    }
}
