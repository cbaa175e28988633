//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, numerator_gcd, Rational};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial has
/// an empty coefficient vector and degree `None`. `None` orders below every
/// `Some(d)`, which is exactly the behaviour wanted from a `-inf` degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over the rationals: `self = q * divisor + r`
    /// with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&t| t >= d) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); top - d + 1];
        for shift in (0..=top - d).rev() {
            let c = &rem[shift + d] / lc;
            if c.is_zero() {
                continue;
            }
            for (i, g) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * g;
            }
            quot[shift] = c;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(Rational, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let num = numerator_gcd(&self.coeffs);
        let den = common_denominator(&self.coeffs);
        let mut content = Rational::new(num, den);
        if self.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        let primitive = Polynomial {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        Ok((content, primitive))
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    /// Returns `c` with `self == c * other`, if such a nonzero `c` exists.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.degree() != other.degree() || self.is_zero() {
            return None;
        }
        let c = self.leading_coeff()? / other.leading_coeff()?;
        (other.scale(&c) == *self).then_some(c)
    }
}

/// Output of one generalized remainder step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderStep {
    pub quotient: Polynomial,
    pub next: Polynomial,
}

/// Solves `alpha * p_prev = q * p_cur + beta * p_next` with
/// `deg p_next < deg p_cur`.
pub fn remainder_step(
    p_prev: &Polynomial,
    p_cur: &Polynomial,
    alpha: &Rational,
    beta: &Rational,
) -> Result<RemainderStep> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::DivisionByZeroRule {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    if p_cur.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p_prev.degree() < p_cur.degree() {
        return Err(Error::DegreeOrder(format!(
            "remainder step needs deg(prev) >= deg(cur), got {:?} < {:?}",
            p_prev.degree(),
            p_cur.degree()
        )));
    }
    let (quotient, rem) = p_prev.scale(alpha).div_rem(p_cur)?;
    Ok(RemainderStep {
        quotient,
        next: rem.scale(&beta.recip()),
    })
}

/// Monic greatest common divisor by the plain Euclidean algorithm; zero
/// when both inputs are zero.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.monic().unwrap_or_else(|_| Polynomial::zero())
}

pub fn add(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a + b
}

pub fn mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a * b
}

pub fn derivative(p: &Polynomial) -> Polynomial {
    p.derivative()
}

pub fn eval(p: &Polynomial, x0: &Rational) -> Rational {
    p.eval(x0)
}

pub fn content_primitive(p: &Polynomial) -> Result<(Rational, Polynomial)> {
    p.content_primitive()
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
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
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Prints in the grammar accepted by [`crate::parse::parse_polynomial`],
/// highest degree first, e.g. `3/2*x^2 - 1/3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn q(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn example_p() -> Polynomial {
        let a = Polynomial::from_ints(&[2, 1]);
        let b = Polynomial::from_ints(&[-3, 1]);
        let c = Polynomial::from_ints(&[1, 1]);
        a.pow(2) * (b * c).pow(3)
    }

    #[test]
    fn additive_inverse_and_sum() {
        let p = Polynomial::from_ints(&[1, 1]);
        let m = Polynomial::from_ints(&[-1, -1]);
        assert!((&p + &m).is_zero());
        assert_eq!(
            Polynomial::from_ints(&[0, 0, 1]) + Polynomial::one(),
            Polynomial::from_ints(&[1, 0, 1])
        );
    }

    #[test]
    fn product_expansion() {
        // (x+2)^2 ((x-3)(x+1))^3 expanded by hand-checked repeated products.
        assert_eq!(
            example_p(),
            Polynomial::from_ints(&[-108, -324, -279, 22, 115, 16, -17, -2, 1])
        );
        assert!((&example_p() * &Polynomial::zero()).is_zero());
        assert_eq!(&example_p() * &Polynomial::one(), example_p());
    }

    #[test]
    fn derivatives() {
        assert_eq!(
            example_p().derivative(),
            Polynomial::from_ints(&[-324, -558, 66, 460, 80, -102, -14, 8])
        );
        assert!(Polynomial::constant(rat(7, 3)).derivative().is_zero());
        let p43 = q(&[(-38400, 841), (-25600, 841), (12800, 841)]);
        assert_eq!(p43.derivative(), q(&[(-25600, 841), (25600, 841)]));
    }

    #[test]
    fn remainder_step_examples() {
        let p = example_p();
        let step = remainder_step(&p, &p.derivative(), &int(1), &int(-1)).unwrap();
        assert_eq!(
            step.next,
            q(&[
                (945, 8),
                (4815, 16),
                (3315, 16),
                (-225, 8),
                (-60, 1),
                (-45, 16),
                (75, 16)
            ])
        );

        let exact = remainder_step(
            &Polynomial::from_ints(&[-1, 0, 1]),
            &Polynomial::from_ints(&[-1, 1]),
            &int(1),
            &int(-1),
        )
        .unwrap();
        assert!(exact.next.is_zero());
        assert_eq!(exact.quotient, Polynomial::from_ints(&[1, 1]));

        let p12 = q(&[
            (2304, 25),
            (4224, 25),
            (1024, 25),
            (-256, 5),
            (-256, 25),
            (128, 25),
        ]);
        let step = remainder_step(&p12, &p12.derivative(), &int(1), &int(-1)).unwrap();
        assert_eq!(
            step.next,
            q(&[(-66048, 625), (-88576, 625), (-1536, 125), (14848, 625)])
        );
    }

    #[test]
    fn remainder_step_errors() {
        let a = Polynomial::from_ints(&[1, 0, 1]);
        let b = Polynomial::from_ints(&[1, 1]);
        assert!(matches!(
            remainder_step(&a, &b, &int(0), &int(1)),
            Err(Error::DivisionByZeroRule { .. })
        ));
        assert!(matches!(
            remainder_step(&a, &b, &int(1), &int(0)),
            Err(Error::DivisionByZeroRule { .. })
        ));
        assert!(matches!(
            remainder_step(&b, &a, &int(1), &int(1)),
            Err(Error::DegreeOrder(_))
        ));
    }

    #[test]
    fn content_and_primitive() {
        let (c, p) = Polynomial::from_ints(&[4, 2]).content_primitive().unwrap();
        assert_eq!((c, p), (int(2), Polynomial::from_ints(&[2, 1])));
        let (c, p) = q(&[(0, 1), (3, 2)]).content_primitive().unwrap();
        assert_eq!((c, p), (rat(3, 2), Polynomial::x()));
        let (c, p) = q(&[(0, 1), (-45, 16), (75, 16)])
            .content_primitive()
            .unwrap();
        assert_eq!((c, p), (rat(15, 16), Polynomial::from_ints(&[0, -3, 5])));
        let (c, p) = Polynomial::from_ints(&[3, -6]).content_primitive().unwrap();
        assert_eq!((c, p), (int(-3), Polynomial::from_ints(&[-1, 2])));
        assert_eq!(
            Polynomial::zero().content_primitive(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn evaluation() {
        assert!(example_p().eval(&int(-2)).is_zero());
        assert_eq!(Polynomial::from_ints(&[1, 0, 1]).eval(&int(0)), int(1));
    }

    #[test]
    fn euclid_gcd() {
        let a = Polynomial::from_ints(&[2, -3, 1]);
        let b = Polynomial::from_ints(&[3, -4, 1]);
        assert_eq!(gcd(&a, &b), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(gcd(&a, &Polynomial::zero()), a);
        assert!(gcd(&Polynomial::zero(), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(q(&[(-1, 3), (0, 1), (3, 2)]).to_string(), "3/2*x^2 - 1/3");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[1, 0, 1]).to_string(), "x^2 + 1");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 0..7).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), r in arb_rational()) {
            prop_assert_eq!((&a + &b).eval(&r), a.eval(&r) + b.eval(&r));
            prop_assert_eq!((&a * &b).eval(&r), a.eval(&r) * b.eval(&r));
        }

        #[test]
        fn sum_degree_bound(a in arb_poly(), b in arb_poly(), pts in prop::collection::vec(arb_rational(), 5)) {
            let s = &a + &b;
            prop_assert!(s.degree() <= a.degree().max(b.degree()));
            for r in &pts {
                prop_assert_eq!(s.eval(r), a.eval(r) + b.eval(r));
            }
        }

        #[test]
        fn product_degree_adds(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn remainder_step_identity(
            a in arb_poly(), b in arb_poly(),
            alpha in arb_rational(), beta in arb_rational(),
        ) {
            prop_assume!(!b.is_zero() && a.degree() >= b.degree());
            prop_assume!(!alpha.is_zero() && !beta.is_zero());
            let step = remainder_step(&a, &b, &alpha, &beta).unwrap();
            let residual = a.scale(&alpha) - &step.quotient * &b - step.next.scale(&beta);
            prop_assert!(residual.is_zero());
            prop_assert!(step.next.degree() < b.degree());
        }

        #[test]
        fn sturm_step_is_negated_remainder(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero() && a.degree() >= b.degree());
            let step = remainder_step(&a, &b, &int(1), &int(-1)).unwrap();
            let (_, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(step.next, -r);
        }

        #[test]
        fn content_primitive_reconstructs(a in arb_poly()) {
            prop_assume!(!a.is_zero());
            let (c, p) = a.content_primitive().unwrap();
            prop_assert_eq!(p.scale(&c), a);
            prop_assert!(p.coeffs().iter().all(|x| x.is_integer()));
            prop_assert!(p.leading_coeff().unwrap().is_positive());
            prop_assert!(numerator_gcd(p.coeffs()).is_one());
        }
    }
}
