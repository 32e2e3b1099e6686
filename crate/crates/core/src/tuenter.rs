//! Tuenter polynomials, the coefficient triangle `c_{j,k}` and the central
//! binomial sum oracle.

use std::sync::RwLock;

use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{CoreError, Result};
use crate::poly::{Int, Poly};

/// `R p = n^2 (p(n) - p(n-1)) + n p(n-1)`.
pub fn apply_r(p: &Poly) -> Poly {
    let back = p.shift_back();
    let diff = p - &back;
    diff.shl(2) + back.shl(1)
}

/// `P_k = R^k(1)`, built from scratch.
pub fn tuenter_poly(k: usize) -> Poly {
    (0..k).fold(Poly::one(), |p, _| apply_r(&p))
}

/// Memoized `P_k` values. Shared readers see either the old or the extended
/// list, never a partial one.
#[derive(Debug)]
pub struct TuenterFamily {
    polys: RwLock<Vec<Poly>>,
}

impl Default for TuenterFamily {
    fn default() -> Self {
        TuenterFamily::new()
    }
}

impl TuenterFamily {
    pub fn new() -> Self {
        TuenterFamily {
            polys: RwLock::new(vec![Poly::one()]),
        }
    }

    pub fn get(&self, k: usize) -> Poly {
        {
            let polys = self.polys.read().expect("tuenter cache poisoned");
            if let Some(p) = polys.get(k) {
                return p.clone();
            }
        }
        let mut polys = self.polys.write().expect("tuenter cache poisoned");
        while polys.len() <= k {
            let next = apply_r(polys.last().expect("cache starts with P_0"));
            polys.push(next);
        }
        polys[k].clone()
    }

    pub fn verify_sum_identity(&self, k: usize, n: u64) -> SumWitness {
        sum_witness(&self.get(k), k, n)
    }
}

/// Binomial coefficient by the multiplicative formula; each partial product
/// `C(n, i)` is an integer, so every step divides exactly.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `S_r(n) = sum_{j=0}^{2n} C(2n, j) |n - j|^r`, summed term by term.
/// `|n - j|^0` is taken as 1 at `j = n`.
pub fn brute_sum(r: u32, n: u64) -> Int {
    let mut row = Int::one();
    let mut total = Int::zero();
    for j in 0..=2 * n {
        if j > 0 {
            row = row * (2 * n - j + 1) / j;
        }
        let dist = Int::from(n.abs_diff(j));
        total += &row * Pow::pow(dist, r);
    }
    total
}

/// One check of `S_{2k+1}(n) = P_k(n) * n * C(2n, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumWitness {
    pub r: u32,
    pub n: u64,
    pub lhs: Int,
    pub rhs: Int,
    pub matches: bool,
}

pub fn verify_sum_identity(k: usize, n: u64) -> SumWitness {
    sum_witness(&tuenter_poly(k), k, n)
}

fn sum_witness(pk: &Poly, k: usize, n: u64) -> SumWitness {
    let r = u32::try_from(2 * k + 1).expect("exponent fits in u32");
    let lhs = brute_sum(r, n);
    let value = pk.eval(&Int::from(n));
    assert!(value.is_integer(), "P_k has integer coefficients");
    let rhs = value.to_integer() * n * binomial(2 * n, n);
    let matches = lhs == rhs;
    SumWitness {
        r,
        n,
        lhs,
        rhs,
        matches,
    }
}

/// An entry `B_{j,q} = (q/j) C(2j, j-q)` of the Catalan triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanEntry {
    pub j: u64,
    pub q: u64,
    pub value: Int,
}

pub fn catalan_entry(j: u64, q: u64) -> Result<Int> {
    if q < 1 || q > j {
        return Err(CoreError::out_of_range(
            "catalan index",
            format!("need 1 <= q <= j, got j={j}, q={q}"),
        ));
    }
    let (value, rem) = (binomial(2 * j, j - q) * q).div_rem(&Int::from(j));
    if !rem.is_zero() {
        return Err(CoreError::InexactDivision {
            context: format!("B_{{{j},{q}}}"),
            remainder: rem.to_string(),
        });
    }
    Ok(value)
}

/// Rows `j = 1..=rows` of the Catalan triangle.
pub fn catalan_triangle(rows: u64) -> Result<Vec<Vec<CatalanEntry>>> {
    (1..=rows)
        .map(|j| {
            (1..=j)
                .map(|q| catalan_entry(j, q).map(|value| CatalanEntry { j, q, value }))
                .collect()
        })
        .collect()
}

/// Row `k` of the expansion triangle: `values[j-1] = c_{j,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallingCoeffs {
    pub k: usize,
    pub values: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTriangle {
    pub rows: Vec<FallingCoeffs>,
}

impl CoeffTriangle {
    pub fn max_k(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, k: usize) -> Option<&FallingCoeffs> {
        k.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    /// `c_{j,k}`; `None` outside `1 <= j <= k <= max_k`.
    pub fn get(&self, j: usize, k: usize) -> Option<&Int> {
        self.row(k)?.values.get(j.checked_sub(1)?)
    }
}

/// The triangle `c_{j,k}` for `k = 1..=max_k`, from `c_{1,1} = 1` and
/// `c_{j,k+1} = j^2 c_{j,k} + j c_{j-1,k}` with `c_{0,k} = c_{k+1,k} = 0`.
pub fn coeff_table(max_k: usize) -> Result<CoeffTriangle> {
    if max_k == 0 {
        return Err(CoreError::out_of_range("max_k", "need max_k >= 1"));
    }
    let mut rows = vec![FallingCoeffs {
        k: 1,
        values: vec![Int::one()],
    }];
    for k in 1..max_k {
        let prev = &rows[k - 1].values;
        let zero = Int::zero();
        let values = (1..=k + 1)
            .map(|j| {
                let same = prev.get(j - 1).unwrap_or(&zero);
                let left = if j >= 2 { &prev[j - 2] } else { &zero };
                same * (j * j) + left * j
            })
            .collect();
        rows.push(FallingCoeffs { k: k + 1, values });
    }
    Ok(CoeffTriangle { rows })
}

fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, i| acc * i)
}

/// `c_{j,k} = (j!/(2j-1)!) * sum_{q=1}^{j} (-1)^{q+j} B_{j,q} q^{2k-1}`.
///
/// The alternating sum is formed first and divided once by `(2j-1)!/j!`; a
/// nonzero remainder is reported as [`CoreError::InexactDivision`].
pub fn coeff_closed(j: u64, k: u64) -> Result<Int> {
    if j < 1 || j > k {
        return Err(CoreError::out_of_range(
            "coefficient index",
            format!("need 1 <= j <= k, got j={j}, k={k}"),
        ));
    }
    let exponent = u32::try_from(2 * k - 1)
        .map_err(|_| CoreError::out_of_range("k", format!("k={k} too large")))?;
    let mut sum = Int::zero();
    for q in 1..=j {
        let term = catalan_entry(j, q)? * Pow::pow(Int::from(q), exponent);
        if (q + j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let divisor = factorial(2 * j - 1) / factorial(j);
    let (quot, rem) = sum.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(CoreError::InexactDivision {
            context: format!("c_{{{j},{k}}} closed form"),
            remainder: rem.to_string(),
        });
    }
    Ok(quot)
}

/// `c_{2,k} = (2^{2k-1} - 2) / 3`.
pub fn c2_closed(k: u64) -> Result<Int> {
    if k < 2 {
        return Err(CoreError::out_of_range(
            "k",
            format!("need k >= 2, got {k}"),
        ));
    }
    let exponent = u32::try_from(2 * k - 1)
        .map_err(|_| CoreError::out_of_range("k", format!("k={k} too large")))?;
    let numer: Int = Pow::pow(Int::from(2), exponent) - 2;
    let (quot, rem) = numer.div_rem(&Int::from(3));
    if !rem.is_zero() {
        return Err(CoreError::InexactDivision {
            context: format!("c_{{2,{k}}} closed form"),
            remainder: rem.to_string(),
        });
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{falling_factorial, Rational};

    fn ints(v: &[i64]) -> Poly {
        Poly::from_ints(v.iter().copied())
    }

    fn int_row(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn apply_r_examples() {
        assert_eq!(apply_r(&Poly::one()), Poly::x());
        assert_eq!(apply_r(&Poly::x()), ints(&[0, -1, 2]));
        let image = apply_r(&falling_factorial(2)).to_falling_basis();
        let expected: Vec<Rational> = [0, 0, 4, 3]
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        assert_eq!(image, expected);
    }

    #[test]
    fn tuenter_examples() {
        assert_eq!(tuenter_poly(0), Poly::one());
        assert_eq!(tuenter_poly(3), ints(&[0, 3, -8, 6]));
        assert_eq!(
            tuenter_poly(6),
            ints(&[0, -2073, 8146, -12840, 10248, -4200, 720])
        );
    }

    #[test]
    fn family_cache_matches_direct() {
        let fam = TuenterFamily::new();
        assert_eq!(fam.get(5), tuenter_poly(5));
        assert_eq!(fam.get(2), tuenter_poly(2));
        assert_eq!(fam.get(0), Poly::one());
    }

    #[test]
    fn family_cache_shared_across_threads() {
        let fam = TuenterFamily::new();
        std::thread::scope(|s| {
            for k in [7usize, 3, 9, 1] {
                let fam = &fam;
                s.spawn(move || assert_eq!(fam.get(k), tuenter_poly(k)));
            }
        });
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Int::from(6));
        assert_eq!(binomial(10, 5), Int::from(252));
        assert_eq!(binomial(3, 5), Int::zero());
        assert_eq!(binomial(0, 0), Int::one());
        assert_eq!(
            binomial(60, 30),
            "118264581564861424".parse::<Int>().unwrap()
        );
    }

    #[test]
    fn brute_sum_examples() {
        assert_eq!(brute_sum(3, 2), Int::from(24));
        assert_eq!(brute_sum(1, 2), Int::from(12));
        // C(2,0) + C(2,1) * 0^0 + C(2,2) with 0^0 = 1.
        assert_eq!(brute_sum(0, 1), Int::from(4));
    }

    #[test]
    fn sum_identity_examples() {
        for (k, n, v) in [(1, 2, 24), (2, 2, 72), (0, 5, 1260)] {
            let w = verify_sum_identity(k, n);
            assert_eq!(w.lhs, Int::from(v));
            assert_eq!(w.rhs, Int::from(v));
            assert!(w.matches);
            assert_eq!(w.r as usize, 2 * k + 1);
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_entry(4, 2).unwrap(), Int::from(14));
        for j in 1..=10 {
            assert_eq!(catalan_entry(j, j).unwrap(), Int::one());
        }
        assert_eq!(catalan_entry(6, 1).unwrap(), Int::from(132));
    }

    #[test]
    fn catalan_out_of_range() {
        assert!(matches!(
            catalan_entry(3, 0),
            Err(CoreError::OutOfRange { .. })
        ));
        assert!(matches!(
            catalan_entry(3, 4),
            Err(CoreError::OutOfRange { .. })
        ));
        assert!(matches!(
            catalan_entry(0, 0),
            Err(CoreError::OutOfRange { .. })
        ));
    }

    #[test]
    fn catalan_triangle_rows() {
        let t = catalan_triangle(4).unwrap();
        let row4: Vec<Int> = t[3].iter().map(|e| e.value.clone()).collect();
        assert_eq!(row4, int_row(&[14, 14, 6, 1]));
        assert_eq!(
            t[2][1],
            CatalanEntry {
                j: 3,
                q: 2,
                value: Int::from(4)
            }
        );
    }

    #[test]
    fn coeff_table_rows() {
        let t = coeff_table(6).unwrap();
        assert_eq!(t.max_k(), 6);
        assert_eq!(t.row(1).unwrap().values, int_row(&[1]));
        assert_eq!(t.row(4).unwrap().values, int_row(&[1, 42, 84, 24]));
        assert_eq!(
            t.row(6).unwrap().values,
            int_row(&[1, 682, 8448, 15048, 6600, 720])
        );
        assert_eq!(t.get(3, 5), Some(&Int::from(882)));
        assert_eq!(t.get(0, 5), None);
        assert_eq!(t.get(6, 5), None);
        assert_eq!(t.get(1, 7), None);
        assert!(coeff_table(0).is_err());
    }

    #[test]
    fn coeff_closed_examples() {
        assert_eq!(coeff_closed(3, 3).unwrap(), Int::from(6));
        assert_eq!(coeff_closed(3, 4).unwrap(), Int::from(84));
        assert_eq!(coeff_closed(1, 9).unwrap(), Int::one());
        assert!(matches!(
            coeff_closed(4, 3),
            Err(CoreError::OutOfRange { .. })
        ));
        assert!(matches!(
            coeff_closed(0, 3),
            Err(CoreError::OutOfRange { .. })
        ));
    }

    #[test]
    fn c2_examples() {
        assert_eq!(c2_closed(2).unwrap(), Int::from(2));
        assert_eq!(c2_closed(3).unwrap(), Int::from(10));
        assert_eq!(c2_closed(5).unwrap(), Int::from(170));
        assert!(c2_closed(1).is_err());
    }
}
