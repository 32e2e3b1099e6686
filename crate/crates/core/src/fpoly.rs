//! The diagonal family `F_k(j) = c_{j,j+k} / j!`.
//!
//! `F_0 = 1`, `F_k(1) = 1` and `F_k(j) - F_k(j-1) = j^2 F_{k-1}(j)`. Each level
//! of the recurrence raises the degree by three, so `F_k` has degree `3k` and is
//! pinned down by its values at `j = 1..=3k+1`.

use num_traits::One;

use crate::error::{CoreError, Result};
use crate::poly::{interpolate, Int, Poly, Rational};

/// `(2k+1)!! = 1 * 3 * 5 * ... * (2k+1)`.
pub fn double_factorial_odd(k: u64) -> Int {
    (0..=k).fold(Int::one(), |acc, i| acc * (2 * i + 1))
}

/// `F_k(1..=jmax)` by the recurrence; index 0 of the result is `F_k(1)`.
fn f_row(k: usize, jmax: u64) -> Vec<Int> {
    let mut row = vec![Int::one(); jmax as usize];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len());
        next.push(Int::one());
        for (idx, prev) in row.iter().enumerate().skip(1) {
            let j = idx as u64 + 1;
            let value = &next[idx - 1] + prev * (j * j);
            next.push(value);
        }
        row = next;
    }
    row
}

fn check_j(j: u64) -> Result<()> {
    if j == 0 {
        return Err(CoreError::out_of_range("j", "need j >= 1"));
    }
    Ok(())
}

/// `F_k(j)` by the difference recurrence.
pub fn f_value(k: usize, j: u64) -> Result<Int> {
    check_j(j)?;
    Ok(f_row(k, j).pop().expect("row has j >= 1 entries"))
}

/// `F_k(j)` as `1 + sum over m = 1..=k` of `prod lambda_i^2` taken over all
/// non-decreasing tuples `2 <= lambda_1 <= ... <= lambda_m <= j`.
///
/// The number of tuples grows like `C(j + m - 2, m)`; keep to roughly
/// `k <= 6`, `j <= 12`.
pub fn f_value_nested(k: usize, j: u64) -> Result<Int> {
    check_j(j)?;
    let mut total = Int::one();
    if j < 2 {
        return Ok(total);
    }
    for m in 1..=k {
        let mut tuple = vec![2u64; m];
        loop {
            total += tuple.iter().fold(Int::one(), |acc, &l| acc * (l * l));
            // Advance the rightmost slot that still has room, then flatten the tail.
            let Some(pos) = tuple.iter().rposition(|&l| l < j) else {
                break;
            };
            let next = tuple[pos] + 1;
            tuple[pos..].iter_mut().for_each(|l| *l = next);
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FValue {
    pub k: usize,
    pub j: u64,
    pub value: Int,
}

impl FValue {
    pub fn new(k: usize, j: u64) -> Result<FValue> {
        Ok(FValue {
            k,
            j,
            value: f_value(k, j)?,
        })
    }
}

/// `F_k` as a polynomial in `j`, interpolated through `j = 1..=3k+1`.
pub fn f_polynomial(k: usize) -> Poly {
    let count = 3 * k as u64 + 1;
    let points: Vec<(Int, Rational)> = f_row(k, count)
        .into_iter()
        .enumerate()
        .map(|(i, v)| (Int::from(i + 1), Rational::from_integer(v)))
        .collect();
    let poly = interpolate(&points).expect("abscissae 1..=3k+1 are distinct and nonempty");
    debug_assert!(poly.degree().unwrap_or(0) <= 3 * k);
    poly
}

/// `prod_{q=0}^{k} (j+q) * prod_{q=0}^{k-1} (2j+2q+1)`.
pub fn product_factor(k: usize) -> Poly {
    let linear = (0..=k).map(|q| Poly::linear(Int::from(q)));
    let odd = (0..k).map(|q| Poly::from_ints([Int::from(2 * q + 1), Int::from(2)]));
    linear.chain(odd).fold(Poly::one(), |acc, f| acc * f)
}

/// Outcome of dividing `F_k` by [`product_factor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub k: usize,
    pub f_poly: Poly,
    pub product_factor: Poly,
    /// The quotient, present only when the division is exact.
    pub tilde_poly: Option<Poly>,
    pub divides_exactly: bool,
    pub tilde_degree: Option<usize>,
    pub tilde_at_one: Option<Rational>,
    pub expected_tilde_at_one: Rational,
    pub conjecture_holds: bool,
}

/// Tests whether `F_k = product_factor(k) * G` with `deg G = k - 1` and
/// `G(1) = 1 / ((k+1)! (2k+1)!!)`. A failed check is reported, not raised.
pub fn check_conjecture(k: usize) -> Result<ConjectureReport> {
    if k == 0 {
        return Err(CoreError::out_of_range("k", "need k >= 1"));
    }
    let f_poly = f_polynomial(k);
    let factor = product_factor(k);
    let (quot, rem) = f_poly.div_rem(&factor)?;
    let divides_exactly = rem.is_zero();
    let tilde_poly = divides_exactly.then_some(quot);
    let tilde_degree = tilde_poly.as_ref().and_then(Poly::degree);
    let tilde_at_one = tilde_poly.as_ref().map(|g| g.eval(&Int::one()));

    let k_plus_one_factorial = (2..=k as u64 + 1).fold(Int::one(), |acc, i| acc * i);
    let expected_tilde_at_one = Rational::new(
        Int::one(),
        k_plus_one_factorial * double_factorial_odd(k as u64),
    );
    let conjecture_holds = divides_exactly
        && tilde_degree == Some(k - 1)
        && tilde_at_one.as_ref() == Some(&expected_tilde_at_one);

    Ok(ConjectureReport {
        k,
        f_poly,
        product_factor: factor,
        tilde_poly,
        divides_exactly,
        tilde_degree,
        tilde_at_one,
        expected_tilde_at_one,
        conjecture_holds,
    })
}
