//! Exact Laurent polynomials in `x_1..x_n` (integer exponents) and `t`
//! (non-negative exponents), generic over the coefficient ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring of a [`LaurentPoly`].
///
/// Only exact rings are implemented. `try_inverse` is used when a negative
/// power of `x_k` is specialized to a value; in an integer ring only the
/// units `1` and `-1` invert.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn try_inverse(&self) -> Option<Self>;

    fn from_u64(v: u64) -> Self;
}

macro_rules! integer_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn try_inverse(&self) -> Option<Self> {
                if self.is_one() || *self == -<$t>::one() {
                    Some(self.clone())
                } else {
                    None
                }
            }

            fn from_u64(v: u64) -> Self {
                <$t>::try_from(v).expect("coefficient overflow")
            }
        }
    )*};
}

integer_coefficient!(i64, i128, BigInt);

impl Coefficient for BigRational {
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Exponent vector of a single monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub x: Vec<i32>,
    pub t: u32,
}

impl Exponents {
    pub fn one(rank: usize) -> Self {
        Self { x: vec![0; rank], t: 0 }
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            t: self.t + other.t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    rank: usize,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn constant(rank: usize, c: C) -> Self {
        Self::term(rank, Exponents::one(rank), c)
    }

    /// `c * x^x_exp * t^t_exp`; panics if `x_exp.len() != rank`.
    pub fn monomial(rank: usize, x_exp: &[i32], t_exp: u32, c: C) -> Self {
        assert_eq!(x_exp.len(), rank, "exponent vector length must equal the rank");
        Self::term(rank, Exponents { x: x_exp.to_vec(), t: t_exp }, c)
    }

    fn term(rank: usize, e: Exponents, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { rank, terms }
    }

    /// The variable `x_k` (1-based).
    pub fn x(rank: usize, k: usize) -> Self {
        let mut e = vec![0; rank];
        e[k - 1] = 1;
        Self::monomial(rank, &e, 0, C::one())
    }

    pub fn t(rank: usize) -> Self {
        Self::t_pow(rank, 1)
    }

    pub fn t_pow(rank: usize, k: u32) -> Self {
        Self::term(rank, Exponents { x: vec![0; rank], t: k }, C::one())
    }

    /// `(1 + t)^k`, expanded.
    pub fn one_plus_t_pow(rank: usize, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        let mut binom = C::one();
        let mut acc: u128 = 1;
        for j in 0..=k {
            if j > 0 {
                acc = acc * u128::from(k - j + 1) / u128::from(j);
                binom = C::from_u64(u64::try_from(acc).expect("binomial coefficient overflow"));
            }
            terms.insert(Exponents { x: vec![0; rank], t: j }, binom.clone());
        }
        Self { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::Rank(format!(
                "polynomials in {} and {} x-variables",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    fn add_term(&mut self, e: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// In-place `self += other`; panics on rank mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_rank(other).expect("rank mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.rank);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Specializes the variables given as `Some(value)`; `None` keeps the
    /// variable symbolic. A negative power of a specialized `x_k` needs the
    /// value to be invertible in the coefficient ring.
    pub fn substitute(&self, xs: &[Option<C>], t: Option<C>) -> Result<Self> {
        if xs.len() != self.rank {
            return Err(Error::Rank(format!(
                "{} x-values supplied for a polynomial of rank {}",
                xs.len(),
                self.rank
            )));
        }
        let mut inverses = Vec::with_capacity(self.rank);
        for v in xs {
            inverses.push(v.as_ref().map(|v| v.try_inverse()));
        }
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = e.clone();
            for (k, v) in xs.iter().enumerate() {
                let Some(v) = v else { continue };
                let p = e.x[k];
                let base = if p >= 0 {
                    v.clone()
                } else {
                    inverses[k]
                        .clone()
                        .flatten()
                        .ok_or_else(|| Error::NotInvertible(v.to_string()))?
                };
                coeff = coeff * pow_coeff(&base, p.unsigned_abs());
                exps.x[k] = 0;
            }
            if let Some(tv) = &t {
                coeff = coeff * pow_coeff(tv, e.t);
                exps.t = 0;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Sets every `x_k` to 1, leaving a polynomial in `t`.
    pub fn at_x_one(&self) -> Self {
        self.substitute(&vec![Some(C::one()); self.rank], None)
            .expect("1 is always invertible")
    }

    /// Full specialization to a coefficient.
    pub fn eval(&self, xs: &[C], t: C) -> Result<C> {
        let xs: Vec<Option<C>> = xs.iter().cloned().map(Some).collect();
        let p = self.substitute(&xs, Some(t))?;
        Ok(p.coeff(&Exponents::one(self.rank)))
    }

    /// Coefficients of `1, t, t^2, ...` if the polynomial is free of `x`.
    pub fn t_coefficients(&self) -> Option<Vec<C>> {
        if self.terms.keys().any(|e| e.x.iter().any(|&a| a != 0)) {
            return None;
        }
        let top = self.terms.keys().map(|e| e.t).max().unwrap_or(0);
        Some(
            (0..=top)
                .map(|j| self.coeff(&Exponents { x: vec![0; self.rank], t: j }))
                .collect(),
        )
    }

    /// First monomial (in exponent order) where the two polynomials differ,
    /// with the two coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponents, C, C)> {
        let diff = self.try_sub(other).ok()?;
        let (e, _) = diff.terms.iter().next()?;
        Some((e.clone(), self.coeff(e), other.coeff(e)))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn sum<'a, I>(rank: usize, it: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        C: 'a,
    {
        let mut acc = Self::zero(rank);
        for p in it {
            acc.add_assign_ref(p);
        }
        acc
    }

    /// JSON records, sorted by exponent vector.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(e, c)| TermRecord { coeff: c.to_string(), x: e.x.clone(), t: e.t })
            .collect()
    }

    pub fn from_records(rank: usize, records: &[TermRecord]) -> Result<Self>
    where
        C: FromStr,
    {
        let mut out = Self::zero(rank);
        for r in records {
            if r.x.len() != rank {
                return Err(Error::Rank(format!("term {:?} does not have rank {rank}", r.x)));
            }
            let c = r
                .coeff
                .parse::<C>()
                .map_err(|_| Error::Malformed(format!("bad coefficient {:?}", r.coeff)))?;
            out.add_term(Exponents { x: r.x.clone(), t: r.t }, c);
        }
        Ok(out)
    }
}

fn pow_coeff<C: Coefficient>(base: &C, k: u32) -> C {
    let mut acc = C::one();
    for _ in 0..k {
        acc = acc * base.clone();
    }
    acc
}

/// One term of the JSON polynomial format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub x: Vec<i32>,
    pub t: u32,
}

impl<C: Coefficient> Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: Self) -> LaurentPoly<C> {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self.try_sub(rhs).expect("rank mismatch")
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: Self) -> LaurentPoly<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (k, &a) in e.x.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{a}", k + 1)),
                }
            }
            match e.t {
                0 => {}
                1 => factors.push("t".into()),
                b => factors.push(format!("t^{b}")),
            }
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<BigInt>;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn one_plus_t_squared() {
        let a = &P::one(1) + &P::t(1);
        let sq = &a * &a;
        assert_eq!(sq.t_coefficients().unwrap(), vec![big(1), big(2), big(1)]);
        assert_eq!(sq, P::one_plus_t_pow(1, 2));
    }

    #[test]
    fn evaluation_at_one() {
        // x1 + t x1^-1 at x1 = 1, t = 1
        let p = &P::x(1, 1) + &P::monomial(1, &[-1], 1, big(1));
        assert_eq!(p.eval(&[big(1)], big(1)).unwrap(), big(2));
    }

    #[test]
    fn binomial_expansion_shifted() {
        let p = &P::t_pow(1, 18) * &P::one_plus_t_pow(1, 7);
        assert_eq!(p.len(), 8);
        let coeffs = p.t_coefficients().unwrap();
        assert_eq!(&coeffs[18..], &[1, 7, 21, 35, 35, 21, 7, 1].map(big));
        assert!(coeffs[..18].iter().all(|c| c.is_zero()));
        assert_eq!(&P::one_plus_t_pow(1, 7), &(&P::one(1) + &P::t(1)).pow(7));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(matches!(P::one(1).try_add(&P::one(2)), Err(Error::Rank(_))));
        assert!(matches!(P::one(1).try_mul(&P::one(2)), Err(Error::Rank(_))));
    }

    #[test]
    fn negative_power_needs_a_unit() {
        let p = P::monomial(1, &[-1], 0, big(1));
        assert!(matches!(p.substitute(&[Some(big(2))], None), Err(Error::NotInvertible(_))));
        assert_eq!(p.eval(&[big(-1)], big(0)).unwrap(), big(-1));
        let q = p.map_coeffs(|c| BigRational::from_integer(c.clone()));
        let two = BigRational::from_integer(big(2));
        assert_eq!(q.eval(&[two], BigRational::zero()).unwrap(), BigRational::new(big(1), big(2)));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &P::x(2, 1) - &P::x(2, 1);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn json_records_round_trip() {
        let p = &P::x(2, 2).pow(3) + &P::monomial(2, &[-1, 0], 2, big(-5));
        let rec = p.to_records();
        assert_eq!(rec[0], TermRecord { coeff: "-5".into(), x: vec![-1, 0], t: 2 });
        assert_eq!(P::from_records(2, &rec).unwrap(), p);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"coeff":"-5","x":[-1,0],"t":2},{"coeff":"1","x":[0,3],"t":0}]"#);
    }

    #[test]
    fn display() {
        let p = &P::x(2, 2) + &P::monomial(2, &[-1, 0], 2, big(-5));
        assert_eq!(p.to_string(), "-5*x1^-1*t^2 + x2");
    }
}
