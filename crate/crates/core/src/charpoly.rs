//! Symplectic characters, their t-deformation, the deformed Weyl
//! denominator, closed-form counts and the four-way identity check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::combinat::{add_staircase, Partition, StrictPartition};
use crate::error::{Error, Result};
use crate::ice::chi_inv;
use crate::tableaux::{generate_ordinary, generate_shifted};
use crate::uasm::brute_force_uasms;
use crate::Poly;

/// `prod_i x_i^(n-i+1) (1 + t x_i^-2) prod_{i<j} (1 + t x_i^-1 x_j)(1 + t x_i^-1 x_j^-1)`, expanded.
pub fn weyl_denominator(n: usize) -> Poly {
    let one = Poly::one(n);
    let t_mono = |exps: &[i32]| Poly::monomial(n, exps, 1, BigInt::one());
    let mut acc = one.clone();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = (n - i) as i32;
        acc = &acc * &Poly::monomial(n, &e, 0, BigInt::one());
        let mut e = vec![0; n];
        e[i] = -2;
        acc = &acc * &(&one + &t_mono(&e));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = -1;
            e[j] = 1;
            acc = &acc * &(&one + &t_mono(&e));
            e[j] = -1;
            acc = &acc * &(&one + &t_mono(&e));
        }
    }
    acc
}

/// `sum_T t^(2 bar T) x^wgt(T)` over sp(2n)-standard tableaux of shape `lam`.
pub fn sp_schur_t(lam: &Partition, n: usize) -> Result<Poly> {
    let tableaux = generate_ordinary(lam, n)?;
    Ok(par_sum(n, &tableaux, |t| {
        let w = t.x_weight::<BigInt>();
        &w * &Poly::t_pow(n, 2 * t.stats().bar as u32)
    }))
}

/// Dimension of the irreducible sp(2n) module with highest weight `lam`.
pub fn sp_dimension(lam: &Partition, n: usize) -> Result<BigInt> {
    if lam.len() > n {
        return Err(Error::Rank(format!("{lam} has {} parts, more than n = {n}", lam.len())));
    }
    let l = |i: usize| lam.part(i - 1) as i64;
    let n_i = n as i64;
    let mut acc = BigRational::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let (ii, jj) = (i as i64, j as i64);
            acc *= ratio(l(i) - ii - l(j) + jj, jj - ii);
        }
        for j in i..=n {
            let (ii, jj) = (i as i64, j as i64);
            acc *= ratio(l(i) + l(j) + 2 * n_i - ii - jj + 2, 2 * n_i + 2 - ii - jj);
        }
    }
    exact_positive(acc, "dimension")
}

/// Number of `n x n` alternating sign matrices, `prod_{j<n} (3j+1)! / (n+j)!`.
pub fn asm_count(n: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for j in 0..n {
        acc *= BigRational::new(factorial(3 * j + 1), factorial(n + j));
    }
    exact_positive(acc, "asm count")
}

/// Number of `2n x n` U-turn ASMs from the closed product
/// `2^n (-3)^(n^2) prod_{i<=2n+1, k<=n} (1 + 6k - 3i) / (2n + 1 + 2k - i)`.
pub fn uasm_count_product(n: usize) -> Result<BigInt> {
    let mut acc = BigRational::from_integer(BigInt::from(2).pow(n as u32) * BigInt::from(-3).pow((n * n) as u32));
    let n_i = n as i64;
    for i in 1..=2 * n_i + 1 {
        for k in 1..=n_i {
            acc *= ratio(1 + 6 * k - 3 * i, 2 * n_i + 1 + 2 * k - i);
        }
    }
    exact_positive(acc, "U-turn ASM count")
}

/// The same count from `A(2n) = A(2n-2) C(6n-2, 2n) / C(4n-1, 2n)`, `A(2) = 2`.
pub fn uasm_count_recurrence(n: usize) -> Result<BigInt> {
    let mut acc = BigRational::from_integer(BigInt::from(2));
    for k in 2..=n {
        acc *= BigRational::new(binomial(6 * k - 2, 2 * k), binomial(4 * k - 1, 2 * k));
    }
    if n == 0 {
        acc = BigRational::one();
    }
    exact_positive(acc, "U-turn ASM count")
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * i)
}

fn binomial(a: usize, b: usize) -> BigInt {
    factorial(a) / (factorial(b) * factorial(a - b))
}

fn exact_positive(r: BigRational, what: &str) -> Result<BigInt> {
    if !r.is_integer() || !r.is_positive() {
        return Err(Error::Invariant(format!("{what} evaluated to {r}, not a positive integer")));
    }
    Ok(r.to_integer())
}

fn par_sum<T: Sync>(rank: usize, items: &[T], f: impl Fn(&T) -> Poly + Sync + Send) -> Poly {
    items
        .par_iter()
        .map(f)
        .reduce(|| Poly::zero(rank), |a, b| &a + &b)
}

fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The four sides of the identity for one `(lambda, n)`.
#[derive(Debug, Clone, Serialize)]
pub struct Sides<T: Serialize> {
    /// Denominator times the deformed character.
    pub character: T,
    pub tableaux: T,
    pub uasms: T,
    pub ice: T,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntSides {
    #[serde(serialize_with = "decimal")]
    pub character: BigInt,
    #[serde(serialize_with = "decimal")]
    pub tableaux: BigInt,
    #[serde(serialize_with = "decimal")]
    pub uasms: BigInt,
    #[serde(serialize_with = "decimal")]
    pub ice: BigInt,
}

/// A disagreement between two of the computed quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    /// The first differing monomial, for polynomial checks.
    pub monomial: Option<String>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub lambda: Partition,
    pub n: usize,
    pub mu: StrictPartition,
    pub object_count: usize,
    pub polynomials: Sides<Poly>,
    /// Every side at `x = 1`; `character` is `(1 + t)^(n^2) sp(1; t)`.
    pub at_x_one: Sides<Poly>,
    /// At `x = 1, t = 1`: `2^(n^2) dim`, then the sums of `2^(str - n)`,
    /// `2^neg` and `2^ns`.
    pub at_t_one: IntSides,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

fn compare_poly(check: &str, a: &Poly, b: &Poly, out: &mut Vec<Mismatch>) {
    if let Some((e, l, r)) = a.first_difference(b) {
        out.push(Mismatch {
            check: check.into(),
            monomial: Some(Poly::monomial(a.rank(), &e.x, e.t, BigInt::one()).to_string()),
            left: l.to_string(),
            right: r.to_string(),
        });
    }
}

fn compare_int(check: &str, a: &BigInt, b: &BigInt, out: &mut Vec<Mismatch>) {
    if a != b {
        out.push(Mismatch { check: check.into(), monomial: None, left: a.to_string(), right: b.to_string() });
    }
}

/// Computes the deformed character side and the three combinatorial sums
/// for `mu = lam + (n, ..., 1)` and compares them exactly, together with
/// their specializations at `x = 1` and at `x = 1, t = 1`.
pub fn verify_identity(lam: &Partition, n: usize) -> Result<IdentityReport> {
    let mu = add_staircase(lam, n)?;
    let uasms = brute_force_uasms(&mu, n)?;
    let tableaux = generate_shifted(&mu, n)?;
    let configs: Vec<_> = uasms.par_iter().map(chi_inv).collect();

    let sp = sp_schur_t(lam, n)?;
    let character = &weyl_denominator(n) * &sp;
    let polynomials = Sides {
        tableaux: par_sum(n, &tableaux, |st| &st.x_weight::<BigInt>() * &st.t_weight_closed()),
        uasms: par_sum(n, &uasms, |ua| &ua.x_weight::<BigInt>() * &ua.t_weight()),
        ice: par_sum(n, &configs, |cm| &cm.x_weight::<BigInt>() * &cm.t_weight_closed()),
        character,
    };

    let n_sq = (n * n) as u32;
    let at_x_one = Sides {
        character: &Poly::one_plus_t_pow(n, 1).pow(n_sq) * &sp.at_x_one(),
        tableaux: polynomials.tableaux.at_x_one(),
        uasms: polynomials.uasms.at_x_one(),
        ice: polynomials.ice.at_x_one(),
    };

    let two_pow = |k: usize| BigInt::one() << k;
    let at_t_one = IntSides {
        character: two_pow(n * n) * sp_dimension(lam, n)?,
        tableaux: tableaux.iter().map(|st| two_pow(st.stats().str_count - n)).sum(),
        uasms: uasms.iter().map(|ua| two_pow(ua.stats().neg)).sum(),
        ice: configs.iter().map(|cm| two_pow(cm.stats().ns)).sum(),
    };

    let mut mismatches = Vec::new();
    let p = &polynomials;
    compare_poly("character = tableaux", &p.character, &p.tableaux, &mut mismatches);
    compare_poly("character = uasms", &p.character, &p.uasms, &mut mismatches);
    compare_poly("character = ice", &p.character, &p.ice, &mut mismatches);
    let x = &at_x_one;
    compare_poly("x=1: (1+t)^(n^2) sp(1;t) = tableaux", &x.character, &x.tableaux, &mut mismatches);
    compare_poly("x=1: (1+t)^(n^2) sp(1;t) = uasms", &x.character, &x.uasms, &mut mismatches);
    compare_poly("x=1: (1+t)^(n^2) sp(1;t) = ice", &x.character, &x.ice, &mut mismatches);
    let c = &at_t_one;
    compare_int("t=1: 2^(n^2) dim = sum 2^(str-n)", &c.character, &c.tableaux, &mut mismatches);
    compare_int("t=1: 2^(n^2) dim = sum 2^neg", &c.character, &c.uasms, &mut mismatches);
    compare_int("t=1: 2^(n^2) dim = sum 2^ns", &c.character, &c.ice, &mut mismatches);
    if tableaux.len() != uasms.len() {
        mismatches.push(Mismatch {
            check: "tableaux and uasms are equinumerous".into(),
            monomial: None,
            left: tableaux.len().to_string(),
            right: uasms.len().to_string(),
        });
    }

    Ok(IdentityReport {
        lambda: lam.clone(),
        n,
        mu,
        object_count: tableaux.len(),
        passed: mismatches.is_empty(),
        polynomials,
        at_x_one,
        at_t_one,
        mismatches,
    })
}
