use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Q};

/// Character of the diagonal torus of SL(N+1), stored as an integer
/// exponent vector. Equality, ordering and hashing all go through the
/// canonical representative whose last coordinate is zero, since weights
/// differing by a multiple of (1,…,1) restrict to the same character.
#[derive(Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn canonical(&self) -> Vec<i64> {
        let last = self.coords.last().copied().unwrap_or(0);
        self.coords.iter().map(|c| c - last).collect()
    }

    pub fn traceless(&self) -> Vec<Q> {
        traceless(&self.coords)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        check_len(self.len(), other.len())?;
        Ok(Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }
}

pub fn traceless(coords: &[i64]) -> Vec<Q> {
    if coords.is_empty() {
        return Vec::new();
    }
    let mean = Q::new(
        BigInt::from(coords.iter().sum::<i64>()),
        BigInt::from(coords.len()),
    );
    coords.iter().map(|&c| int(c) - &mean).collect()
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Weight {}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.canonical()).cmp(&(other.len(), other.canonical()))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.coords)
    }
}

/// Cocharacter (one-parameter subgroup) of the diagonal torus of SL(N+1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cocharacter {
    coords: Vec<i64>,
}

impl Cocharacter {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::Invalid(format!(
                "cocharacter {coords:?} has nonzero trace"
            )));
        }
        Ok(Cocharacter { coords })
    }

    pub fn zero(len: usize) -> Self {
        Cocharacter {
            coords: vec![0; len],
        }
    }

    /// Integer cocharacter from a rational direction: projects to trace zero
    /// and clears denominators by a positive factor.
    pub fn from_rational_direction(dir: &[Q]) -> Result<Self> {
        if dir.is_empty() {
            return Err(Error::Empty("cocharacter direction"));
        }
        let n = Q::from_integer(BigInt::from(dir.len()));
        let mean: Q = dir.iter().sum::<Q>() / n;
        let projected: Vec<Q> = dir.iter().map(|x| x - &mean).collect();
        let ints = crate::rational::primitive_integer_direction(&projected);
        let coords = ints
            .iter()
            .map(|v| {
                v.to_i64()
                    .ok_or_else(|| Error::Invalid("cocharacter entry overflows i64".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Cocharacter::new(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Cocharacter {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    pub fn as_rational(&self) -> Vec<Q> {
        self.coords.iter().map(|&c| int(c)).collect()
    }
}

impl<'de> Deserialize<'de> for Cocharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<i64>::deserialize(d)?;
        Cocharacter::new(coords).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocharacter{:?}", self.coords)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

/// `Σ χ_i u_i`; independent of the representative of χ because `u` is
/// trace-free.
pub fn pairing(chi: &Weight, u: &Cocharacter) -> Result<i64> {
    check_len(chi.len(), u.len())?;
    Ok(chi.coords.iter().zip(&u.coords).map(|(a, b)| a * b).sum())
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn pairing_examples() {
        let u = Cocharacter::new(vec![1, 1, -2]).unwrap();
        assert_eq!(pairing(&Weight::new(vec![2, 2, 0]), &u).unwrap(), 4);
        assert_eq!(pairing(&Weight::new(vec![1, 1, 1]), &u).unwrap(), 0);
        let u = Cocharacter::new(vec![-1, 1, 0]).unwrap();
        assert_eq!(pairing(&Weight::new(vec![3, 1, 0]), &u).unwrap(), -2);
    }

    #[test]
    fn pairing_length_mismatch() {
        let u = Cocharacter::new(vec![1, -1]).unwrap();
        assert!(matches!(
            pairing(&Weight::new(vec![1, 0, 0]), &u),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn equivalence_uses_canonical_representative() {
        assert_eq!(Weight::new(vec![3, 3, 1]), Weight::new(vec![2, 2, 0]));
        assert_ne!(Weight::new(vec![3, 1, 0]), Weight::new(vec![2, 2, 0]));
        let t = Weight::new(vec![2, 2, 0]).traceless();
        assert_eq!(t, vec![ratio(2, 3), ratio(2, 3), ratio(-4, 3)]);
        assert_eq!(t.iter().sum::<Q>(), Q::zero());
    }

    #[test]
    fn cocharacter_must_be_trace_free() {
        assert!(Cocharacter::new(vec![1, 0]).is_err());
        let u = Cocharacter::from_rational_direction(&[ratio(1, 2), int(0), int(0)]).unwrap();
        assert_eq!(u.coords(), &[2, -1, -1]);
    }
}
