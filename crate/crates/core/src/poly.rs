//! Univariate polynomials over Q (gcd, Yun decomposition, rational roots) and
//! sparse multivariate polynomials over Z for symbolic determinants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::ExactDomain;
use crate::rational::{denom_lcm, format, from_big, Q};

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UPoly {
    coeffs: Vec<Q>,
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(format).collect();
        write!(f, "UPoly{c:?}")
    }
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| crate::rational::int(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly {
            coeffs: vec![Q::one()],
        }
    }

    /// `z - r`.
    pub fn linear_root(r: &Q) -> Self {
        UPoly::new(vec![-r, Q::one()])
    }

    pub fn from_roots(roots: &[Q]) -> Self {
        roots
            .iter()
            .fold(UPoly::one(), |acc, r| acc.mul(&UPoly::linear_root(r)))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, z: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * z + c)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Q::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, k: &Q) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> UPoly {
        (0..k).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lead().recip())
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: pairwise coprime monic squarefree
    /// factors with multiplicities, `self = lead · Π f_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Integer polynomial with the same roots (denominators cleared, content removed).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = denom_lcm(&self.coeffs);
        let lq = from_big(&l);
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lq).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &g).collect()
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Q> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut c = self.primitive_integer();
        let zeros = c.iter().take_while(|x| x.is_zero()).count();
        if zeros > 0 {
            roots.push(Q::zero());
            c.drain(..zeros);
        }
        if c.len() > 1 {
            let p = UPoly::new(c.iter().map(from_big).collect());
            let lead = c.last().unwrap().abs();
            let tail = c[0].abs();
            for num in divisors(&tail) {
                for den in divisors(&lead) {
                    for s in [1, -1] {
                        let r = Q::new(&num * BigInt::from(s), den.clone());
                        if p.eval(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let j = n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

/// Sparse multivariate polynomial over Z keyed by exponent vectors. Keys are
/// ordered lexicographically, which is the monomial order used for division.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*{e:?}"))
            .collect();
        write!(f, "MPoly[{}]", parts.join(" + "))
    }
}

impl MPoly {
    pub fn zero_in(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero_in(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn monomial(exps: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero_in(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.keys()
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = Self::zero_in(self.nvars);
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * k);
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(from_big(c), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }
}

impl MPoly {
    pub fn add(&self, o: &Self) -> Self {
        let (mut out, other) = widen(self, o);
        for (e, c) in other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = widen(self, o);
        let mut out = MPoly::zero_in(a.nvars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale_int(&-BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact quotient by lex leading-term division; panics if inexact.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (mut rem, d) = widen(self, d);
        let (dlead_e, dlead_c) = d
            .terms
            .last_key_value()
            .expect("division by zero polynomial");
        let (dlead_e, dlead_c) = (dlead_e.clone(), dlead_c.clone());
        let mut quot = MPoly::zero_in(rem.nvars);
        while let Some((e, c)) = rem.terms.last_key_value() {
            let shift: Vec<u32> = e
                .iter()
                .zip(&dlead_e)
                .map(|(a, b)| a.checked_sub(*b).expect("inexact multivariate division"))
                .collect();
            let (qc, r) = c.div_rem(&dlead_c);
            assert!(r.is_zero(), "inexact multivariate division");
            let term = MPoly::monomial(shift, qc);
            rem = rem.sub(&term.mul(&d));
            quot = quot.add(&term);
        }
        quot
    }
}

impl ExactDomain for MPoly {
    fn zero_elem() -> Self {
        MPoly::zero_in(0)
    }

    fn one_elem() -> Self {
        // Constant one with no variables; widened on first arithmetic use.
        MPoly {
            nvars: 0,
            terms: BTreeMap::from([(Vec::new(), BigInt::one())]),
        }
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn add_elem(&self, o: &Self) -> Self {
        self.add(o)
    }

    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o)
    }

    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o)
    }

    fn neg_elem(&self) -> Self {
        self.neg()
    }

    fn div_exact(&self, d: &Self) -> Self {
        MPoly::div_exact(self, d)
    }
}

/// Brings both operands to a common variable count (constants from
/// `ExactDomain::one`/`zero` carry zero variables).
fn widen(a: &MPoly, b: &MPoly) -> (MPoly, MPoly) {
    let n = a.nvars.max(b.nvars);
    let lift = |p: &MPoly| -> MPoly {
        if p.nvars == n {
            return p.clone();
        }
        let mut out = MPoly::zero_in(n);
        for (e, c) in &p.terms {
            let mut e2 = e.clone();
            e2.resize(n, 0);
            out.terms.insert(e2, c.clone());
        }
        out
    };
    (lift(a), lift(b))
}
