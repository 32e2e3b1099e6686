//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest power first. A `Poly` is always canonical:
//! the highest stored coefficient is nonzero, and the zero polynomial has no
//! coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CoreError, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Reduced rational with a positive denominator.
pub type Rational = BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients, lowest power first.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Int>,
    {
        Poly::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `x + a`.
    pub fn linear(a: Int) -> Self {
        Poly::from_coeffs(vec![Rational::from_integer(a), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<Int>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn eval(&self, x: &Int) -> Rational {
        self.eval_rational(&Rational::from_integer(x.clone()))
    }

    /// Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `x^power`.
    pub fn shl(&self, power: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Returns `q` with `q(x) = p(x + a)`.
    pub fn translate(&self, a: &Int) -> Poly {
        let step = Poly::linear(a.clone());
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * &step) + &Poly::constant(c.clone())
        })
    }

    /// `p(x - 1)`.
    pub fn shift_back(&self) -> Poly {
        self.translate(&-Int::one())
    }

    /// `p(x + 1)`.
    pub fn shift_forward(&self) -> Poly {
        self.translate(&Int::one())
    }

    /// Euclidean division over the rationals: `self = q * divisor + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading_coeff().ok_or(CoreError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd] / lead;
            if top.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &top * d;
            }
            quot[shift] = top;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Coordinates in the descending-factorial basis: returns `d` with
    /// `p = sum d[j] * (x)_j`, using `d[j] = (j-th forward difference of p at 0) / j!`.
    pub fn to_falling_basis(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut row: Vec<Rational> = (0..=deg).map(|x| self.eval(&Int::from(x))).collect();
        let mut out = Vec::with_capacity(deg + 1);
        let mut factorial = Int::one();
        for j in 0..=deg {
            if j > 0 {
                factorial *= j;
            }
            out.push(&row[0] / Rational::from_integer(factorial.clone()));
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }

    /// Renders with the given variable name, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let unit = magnitude.is_one();
            match (power, unit) {
                (0, _) => out.push_str(&magnitude.to_string()),
                (_, true) => {}
                (_, false) => {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
            }
            match power {
                0 => {}
                1 => out.push_str(var),
                p => out.push_str(&format!("{var}^{p}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("n"))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// The descending factorial `(x)_j = x(x-1)...(x-j+1)`; `(x)_0 = 1`.
pub fn falling_factorial(j: usize) -> Poly {
    (0..j).fold(Poly::one(), |acc, i| acc * Poly::linear(-Int::from(i)))
}

/// Expands `sum d[j] * (x)_j` into the monomial basis.
pub fn from_falling_basis(d: &[Rational]) -> Poly {
    let mut basis = Poly::one();
    let mut acc = Poly::zero();
    for (j, c) in d.iter().enumerate() {
        if j > 0 {
            basis = basis * Poly::linear(-Int::from(j - 1));
        }
        acc = acc + basis.scale(c);
    }
    acc
}

/// Newton divided-difference interpolation. Returns the unique polynomial of
/// degree below `points.len()` through every point.
pub fn interpolate(points: &[(Int, Rational)]) -> Result<Poly> {
    if points.is_empty() {
        return Err(CoreError::NoPoints);
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(CoreError::DuplicateAbscissa(x.to_string()));
        }
    }
    let xs: Vec<Rational> = points
        .iter()
        .map(|(x, _)| Rational::from_integer(x.clone()))
        .collect();
    // In-place divided-difference table; afterwards table[i] = f[x_0, ..., x_i].
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..table.len() {
        for i in (level..table.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Nested Newton form evaluated symbolically from the innermost term out.
    let mut acc = Poly::zero();
    for i in (0..table.len()).rev() {
        let node = Poly::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        acc = acc * node + Poly::constant(table[i].clone());
    }
    Ok(acc)
}
