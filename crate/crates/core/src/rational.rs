//! Exact rational scalars and their `"p/q"` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Parses `"p"`, `"p/q"` or a plain decimal like `"-0.25"`.
pub fn parse(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("not a rational: {t:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        return Ok(Q::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = Q::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

pub fn format(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Q) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Shift both operands down to 64 significant bits before dividing.
    let shift = |n: &BigInt| -> (f64, i64) {
        let bits = n.bits() as i64;
        let s = (bits - 64).max(0);
        ((n >> s as usize).to_f64().unwrap_or(0.0), s)
    };
    let (n, sn) = shift(q.numer());
    let (d, sd) = shift(q.denom());
    (n / d) * 2f64.powi((sn - sd) as i32)
}

/// Natural logarithm of a positive rational, accurate for any magnitude.
pub fn ln(q: &Q) -> f64 {
    let ln_big = |n: &BigInt| -> f64 {
        let s = (n.bits() as i64 - 64).max(0);
        (n >> s as usize).to_f64().unwrap_or(0.0).ln() + s as f64 * std::f64::consts::LN_2
    };
    ln_big(q.numer()) - ln_big(q.denom())
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector by the positive lcm of its denominators and
/// divides out the content, returning a primitive integer vector pointing in
/// the same direction.
pub fn primitive_integer_direction(values: &[Q]) -> Vec<BigInt> {
    let l = denom_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

pub fn abs(q: &Q) -> Q {
    q.abs()
}

/// Serde adapter: rationals as `"p/q"` strings, accepting JSON numbers on input.
pub mod serde_q {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        value_to_q(&v).map_err(de::Error::custom)
    }

    pub fn value_to_q(v: &serde_json::Value) -> Result<Q> {
        match v {
            serde_json::Value::String(s) => parse(s),
            serde_json::Value::Number(n) => parse(&n.to_string()),
            other => Err(Error::Parse(format!("expected a rational, got {other}"))),
        }
    }
}

pub mod serde_qvec {
    use super::*;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<serde_json::Value>::deserialize(d)?;
        v.iter()
            .map(|x| serde_q::value_to_q(x).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("-0.25").unwrap(), ratio(-1, 4));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn format_round_trip() {
        for q in [ratio(3, 4), int(-5), ratio(-7, 3), int(0)] {
            assert_eq!(parse(&format(&q)).unwrap(), q);
        }
    }

    #[test]
    fn primitive_direction() {
        let v = [ratio(1, 2), ratio(-1, 3), int(0)];
        let p = primitive_integer_direction(&v);
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
    }
}
