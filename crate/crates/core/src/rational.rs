use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exact rational number, printed and serialized as `"p/q"`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(pub Ratio<i64>);

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        Rational(Ratio::new(num, den))
    }

    pub fn int(v: i64) -> Rational {
        Rational(Ratio::from_integer(v))
    }

    pub fn zero() -> Rational {
        Rational(Ratio::zero())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    /// `self * k` as an exact rational.
    pub fn times(&self, k: i64) -> Rational {
        Rational(self.0 * k)
    }

    /// `k >= self * total`, compared by cross-multiplication.
    pub fn reached_by(&self, k: usize, total: usize) -> bool {
        (k as i128) * (self.denom() as i128) >= (self.numer() as i128) * (total as i128)
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational (expected p/q, an integer or a decimal)")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q`, integers and finite decimals such as `0.05`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            if q == 0 {
                return Err(err());
            }
            return Ok(Rational::new(p, q));
        }
        if let Some((ip, fp)) = t.split_once('.') {
            if fp.is_empty() || fp.len() > 12 || !fp.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let neg = ip.starts_with('-');
            let ipv: i64 = if ip.is_empty() || ip == "-" { 0 } else { ip.parse().map_err(|_| err())? };
            let den = 10i64.pow(fp.len() as u32);
            let frac: i64 = fp.parse().map_err(|_| err())?;
            let num = ipv.abs() * den + frac;
            return Ok(Rational::new(if neg { -num } else { num }, den));
        }
        t.parse::<i64>().map(Rational::int).map_err(|_| err())
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("8/3".parse::<Rational>().unwrap(), Rational::new(8, 3));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::int(3));
        assert_eq!("0.05".parse::<Rational>().unwrap(), Rational::new(1, 20));
        assert_eq!("-1.5".parse::<Rational>().unwrap(), Rational::new(-3, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(Rational::int(3).to_string(), "3/1");
    }

    #[test]
    fn fraction_threshold_is_exact() {
        let quarter = Rational::new(1, 4);
        assert!(quarter.reached_by(2, 8));
        assert!(!quarter.reached_by(1, 8));
        assert!(quarter.reached_by(1, 4));
    }
}
