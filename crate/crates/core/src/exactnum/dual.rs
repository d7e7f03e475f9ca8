use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;

/// First-order dual number `value + deriv·ε` with `ε² = 0`, both parts exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DualRational {
    pub value: Rational,
    pub deriv: Rational,
}

impl DualRational {
    pub fn new(value: Rational, deriv: Rational) -> Self {
        DualRational { value, deriv }
    }

    /// A constant: zero derivative part.
    pub fn constant(value: Rational) -> Self {
        DualRational {
            value,
            deriv: Rational::zero(),
        }
    }

    /// An independent variable: unit derivative part.
    pub fn variable(value: Rational) -> Self {
        DualRational {
            value,
            deriv: Rational::one(),
        }
    }
}

impl fmt::Display for DualRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}\u{3b5}", self.value, self.deriv)
    }
}

impl fmt::Debug for DualRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for DualRational {
    type Output = DualRational;
    fn add(self, rhs: DualRational) -> DualRational {
        DualRational::new(self.value + rhs.value, self.deriv + rhs.deriv)
    }
}

impl Sub for DualRational {
    type Output = DualRational;
    fn sub(self, rhs: DualRational) -> DualRational {
        DualRational::new(self.value - rhs.value, self.deriv - rhs.deriv)
    }
}

impl Mul for DualRational {
    type Output = DualRational;
    fn mul(self, rhs: DualRational) -> DualRational {
        let deriv = &self.value * &rhs.deriv + &self.deriv * &rhs.value;
        DualRational::new(self.value * rhs.value, deriv)
    }
}

impl Neg for DualRational {
    type Output = DualRational;
    fn neg(self) -> DualRational {
        DualRational::new(-self.value, -self.deriv)
    }
}

impl Scalar for DualRational {
    fn zero() -> Self {
        DualRational::constant(Rational::zero())
    }

    fn one() -> Self {
        DualRational::constant(Rational::one())
    }

    fn from_rational(value: Rational) -> Self {
        DualRational::constant(value)
    }

    fn value(&self) -> &Rational {
        &self.value
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a + εa') / (b + εb') = a/b + ε (a'b - ab') / b²
        let value = self.value.checked_div(&rhs.value)?;
        let numer = &self.deriv * &rhs.value - &self.value * &rhs.deriv;
        let deriv = numer.checked_div(&(&rhs.value * &rhs.value))?;
        Ok(DualRational::new(value, deriv))
    }

    /// Jacobi's formula: `det(A + εA') = det A + ε·tr(adj(A)·A')`.
    ///
    /// Stays exact when `A` is singular, where dual elimination would need a
    /// pivot with zero value part.
    fn square_determinant(m: &Matrix<Self>) -> Self {
        let values = m.map(|d| d.value.clone());
        let derivs = m.map(|d| d.deriv.clone());
        let value = Rational::square_determinant(&values);
        let adj = crate::exactmat::cofactor_adjugate(&values);
        let n = m.rows();
        let mut deriv = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                let d = derivs.get(i, j);
                if !d.is_zero() {
                    deriv = deriv + adj.get(j, i) * d;
                }
            }
        }
        DualRational::new(value, deriv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn d(v: &str, e: &str) -> DualRational {
        DualRational::new(q(v), q(e))
    }

    #[test]
    fn product_rule() {
        assert_eq!(d("2", "1") * d("3", "0"), d("6", "3"));
    }

    #[test]
    fn cancellation() {
        let x = d("7/3", "1");
        assert_eq!(x.clone() - x, d("0", "0"));
    }

    #[test]
    fn quotient_rule() {
        assert_eq!(d("1", "1").checked_div(&d("2", "0")).unwrap(), d("1/2", "1/2"));
        assert_eq!(d("1", "0").checked_div(&d("2", "1")).unwrap(), d("1/2", "-1/4"));
    }

    #[test]
    fn division_by_zero_value() {
        assert_eq!(d("1", "1").checked_div(&d("0", "5")), Err(Error::DivisionByZero));
    }

    #[test]
    fn cube_derivative() {
        for x0 in ["0", "-3", "5/7", "11/2"] {
            let x = DualRational::variable(q(x0));
            let cube = x.clone() * x.clone() * x;
            assert_eq!(cube.deriv, q("3") * q(x0) * q(x0));
        }
    }

    #[test]
    fn singular_value_part_determinant() {
        // det([[ε, 0], [0, 1]]) = ε
        let m = Matrix::from_rows(vec![vec![d("0", "1"), d("0", "0")], vec![d("0", "0"), d("1", "0")]]).unwrap();
        assert_eq!(DualRational::square_determinant(&m), d("0", "1"));
    }
}
