//! Laurent polynomials with integer coefficients.
//!
//! `LaurentPoly2` is in u (Maslov) and t (Alexander); `LaurentPoly` is in t
//! alone. Both store t-exponents doubled.

use super::grading::{half, Bigrading};
use super::F2Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Serializes as sorted `(u-exp, doubled t-exp, coeff)` triples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(i32, i32, i64)>", from = "Vec<(i32, i32, i64)>")]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// c · u^du · t^(dt2/2)
    pub fn monomial(du: i32, dt2: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(du, dt2, c);
        p
    }

    /// 1 + u⁻¹t⁻¹, the Poincaré polynomial of one V-factor.
    pub fn v_factor() -> Self {
        &Self::one() + &Self::monomial(-1, -2, 1)
    }

    /// 1 + u⁻²t⁻², the surviving part of a pair of V-factors swapped by an
    /// involution.
    pub fn w_factor() -> Self {
        &Self::one() + &Self::monomial(-2, -4, 1)
    }

    pub fn add_term(&mut self, du: i32, dt2: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((du, dt2)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(du, dt2));
        }
    }

    pub fn coeff(&self, du: i32, dt2: i32) -> i64 {
        self.terms.get(&(du, dt2)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    /// Sorted `(u-exp, doubled t-exp, coeff)` triples.
    pub fn triples(&self) -> Vec<(i32, i32, i64)> {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn shift(&self, du: i32, dt2: i32) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in self.terms() {
            p.add_term(a + du, b + dt2, c);
        }
        p
    }

    /// Ranks per bigrading, when every coefficient is non-negative.
    pub fn as_ranks(&self) -> Option<BTreeMap<Bigrading, usize>> {
        self.terms().map(|((a, b), c)| (c > 0).then_some((Bigrading::new(a, b), c as usize))).collect()
    }

    /// Exact division by `1 + u^du t^(dt2/2)` with `du < 0`.
    pub fn div_binomial(&self, du: i32, dt2: i32) -> Result<Self, F2Error> {
        assert!(du < 0, "binomial must lower the Maslov exponent");
        let floor = self.terms.keys().map(|&(a, _)| a).min().unwrap_or(0);
        let mut rem = self.clone();
        let mut q = Self::zero();
        // p = q(1 + w) and w lowers the Maslov exponent, so the top term of
        // the remainder is always the next term of q.
        while let Some((&(a, b), &c)) = rem.terms.iter().max_by_key(|((a, b), _)| (*a, *b)) {
            if a < floor {
                return Err(F2Error::NotDivisible);
            }
            q.add_term(a, b, c);
            rem.add_term(a, b, -c);
            rem.add_term(a + du, b + dt2, -c);
        }
        if &(&q * &(&Self::one() + &Self::monomial(du, dt2, 1))) != self {
            return Err(F2Error::NotDivisible);
        }
        Ok(q)
    }

    /// p / (1 + u⁻¹t⁻¹)^k, exactly.
    pub fn strip_v(&self, k: u32) -> Result<Self, F2Error> {
        (0..k).try_fold(self.clone(), |p, _| p.div_binomial(-1, -2))
    }

    /// p / (1 + u⁻²t⁻²)^k, exactly.
    pub fn strip_w(&self, k: u32) -> Result<Self, F2Error> {
        (0..k).try_fold(self.clone(), |p, _| p.div_binomial(-2, -4))
    }

    /// Substitute u = −1.
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for ((a, b), c) in self.terms() {
            p.add_term(b, if a.rem_euclid(2) == 0 { c } else { -c });
        }
        p
    }
}

impl std::ops::Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: Self) -> LaurentPoly2 {
        let mut p = self.clone();
        for ((a, b), c) in rhs.terms() {
            p.add_term(a, b, c);
        }
        p
    }
}

impl std::ops::Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: Self) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for ((a, b), c) in self.terms() {
            for ((x, y), d) in rhs.terms() {
                p.add_term(a + x, b + y, c * d);
            }
        }
        p
    }
}

impl From<LaurentPoly2> for Vec<(i32, i32, i64)> {
    fn from(p: LaurentPoly2) -> Self {
        p.triples()
    }
}

impl From<Vec<(i32, i32, i64)>> for LaurentPoly2 {
    fn from(v: Vec<(i32, i32, i64)>) -> Self {
        let mut p = LaurentPoly2::zero();
        for (a, b, c) in v {
            p.add_term(a, b, c);
        }
        p
    }
}

/// P(u, t) = Σ rank · u^M t^A.
pub fn poincare(ranks: &BTreeMap<Bigrading, usize>) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    for (g, &r) in ranks {
        p.add_term(g.m, g.a2, r as i64);
    }
    p
}

fn exp_str(var: &str, e2: i32) -> String {
    match e2 {
        0 => String::new(),
        2 => var.to_string(),
        _ if e2 % 2 == 0 => format!("{var}^{}", e2 / 2),
        _ => format!("{var}^({})", half(e2)),
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: Vec<(i64, String)>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (c, mono)) in terms.into_iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if k == 0 {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        let a = c.abs();
        match (a, mono.is_empty()) {
            (_, true) => write!(f, "{a}")?,
            (1, false) => write!(f, "{mono}")?,
            _ => write!(f, "{a}{mono}")?,
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|((a, b), _)| (std::cmp::Reverse(*a), std::cmp::Reverse(*b)));
        let out =
            terms.into_iter().map(|((a, b), c)| (c, format!("{}{}", exp_str("u", 2 * a), exp_str("t", b)))).collect();
        write_terms(f, out)
    }
}

/// Laurent polynomial in t^(1/2).
/// Serializes as sorted `(doubled exponent, coeff)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(i32, i64)>", from = "Vec<(i32, i64)>")]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// c · t^(e2/2)
    pub fn monomial(e2: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e2, c);
        p
    }

    /// Build from `(doubled exponent, coeff)` pairs.
    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e2: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(e2).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&e2);
        }
    }

    pub fn coeff(&self, e2: i32) -> i64 {
        self.terms.get(&e2).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &v)| (e, v * c)).collect() }
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The polynomial with t replaced by t⁻¹.
    pub fn invert(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &v)| (-e, v)).collect() }
    }

    /// Exact division; the divisor's leading coefficient must be ±1.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Self, F2Error> {
        let (&dtop, &dc) = d.terms.iter().next_back().ok_or(F2Error::NotDivisible)?;
        if dc.abs() != 1 {
            return Err(F2Error::NotDivisible);
        }
        let dlow = *d.terms.keys().next().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((&top, &c)) = rem.terms.iter().next_back() {
            let low = *rem.terms.keys().next().unwrap();
            if top - low < dtop - dlow {
                return Err(F2Error::NotDivisible);
            }
            let e = top - dtop;
            let qc = c * dc;
            q.add_term(e, qc);
            rem = &rem - &(&Self::monomial(e, qc) * d);
        }
        Ok(q)
    }
}

impl From<LaurentPoly> for Vec<(i32, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms().collect()
    }
}

impl From<Vec<(i32, i64)>> for LaurentPoly {
    fn from(v: Vec<(i32, i64)>) -> Self {
        LaurentPoly::from_terms(&v)
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, c);
        }
        p
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self + &rhs.scale(-1)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                p.add_term(a + b, c * d);
            }
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(&e, &c)| (c, exp_str("t", e))).collect();
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_hfk() -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        p.add_term(2, 2, 1);
        p.add_term(1, 0, 1);
        p.add_term(0, -2, 1);
        p
    }

    #[test]
    fn strip_examples() {
        assert!(LaurentPoly2::zero().is_zero());
        assert_eq!(LaurentPoly2::v_factor().strip_v(1).unwrap(), LaurentPoly2::one());
        let p = &trefoil_hfk() * &LaurentPoly2::v_factor().pow(4);
        assert_eq!(p.strip_v(4).unwrap(), trefoil_hfk());
        let bad = &LaurentPoly2::one() + &LaurentPoly2::monomial(-1, 0, 1);
        assert!(matches!(bad.strip_v(1), Err(F2Error::NotDivisible)));
        assert!(matches!(trefoil_hfk().strip_v(1), Err(F2Error::NotDivisible)));
    }

    #[test]
    fn strip_w_roundtrip() {
        let p = &LaurentPoly2::monomial(0, 1, 1) * &LaurentPoly2::w_factor().pow(2);
        assert_eq!(p.strip_w(2).unwrap(), LaurentPoly2::monomial(0, 1, 1));
        assert!(p.strip_w(3).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(trefoil_hfk().euler(), LaurentPoly::from_terms(&[(2, 1), (0, -1), (-2, 1)]));
        assert_eq!(LaurentPoly2::v_factor().euler(), LaurentPoly::from_terms(&[(0, 1), (-2, -1)]));
        assert!(LaurentPoly2::zero().euler().is_zero());
    }

    #[test]
    fn poincare_of_ranks() {
        let mut r = BTreeMap::new();
        assert!(poincare(&r).is_zero());
        r.insert(Bigrading::int(0, 0), 1);
        r.insert(Bigrading::int(-1, -1), 1);
        assert_eq!(poincare(&r), LaurentPoly2::v_factor());
        assert_eq!(poincare(&r).as_ranks().unwrap(), r);
    }

    #[test]
    fn exact_division_one_variable() {
        let one_minus = LaurentPoly::from_terms(&[(0, 1), (-2, -1)]);
        let delta = LaurentPoly::from_terms(&[(2, 1), (0, -1), (-2, 1)]);
        let prod = &delta * &one_minus.pow(3);
        assert_eq!(prod.div_exact(&one_minus.pow(3)).unwrap(), delta);
        assert!(delta.div_exact(&one_minus).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(trefoil_hfk().to_string(), "u^2t + u + t^-1");
        assert_eq!(LaurentPoly::from_terms(&[(1, 1), (-1, -2)]).to_string(), "t^(1/2) - 2t^(-1/2)");
    }
}
