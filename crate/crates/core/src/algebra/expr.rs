use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::canonical::{reduce, Pair};
use crate::rational::{int, Rational};

/// Exponents of `cos θ`, `sin θ`, `cosh ξ`, `sinh ξ`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents {
    pub cos: Rational,
    pub sin: Rational,
    pub cosh: Rational,
    pub sinh: Rational,
}

impl Exponents {
    pub fn new(cos: Rational, sin: Rational, cosh: Rational, sinh: Rational) -> Self {
        Exponents { cos, sin, cosh, sinh }
    }

    pub fn zero() -> Self {
        Exponents::new(int(0), int(0), int(0), int(0))
    }

    pub fn is_theta_only(&self) -> bool {
        self.cosh.is_zero() && self.sinh.is_zero()
    }

    pub fn is_xi_only(&self) -> bool {
        self.cos.is_zero() && self.sin.is_zero()
    }

    fn has_negative(&self) -> bool {
        [&self.cos, &self.sin, &self.cosh, &self.sinh]
            .iter()
            .any(|e| e.is_negative())
    }
}

impl Add for &Exponents {
    type Output = Exponents;
    fn add(self, rhs: &Exponents) -> Exponents {
        Exponents::new(
            &self.cos + &rhs.cos,
            &self.sin + &rhs.sin,
            &self.cosh + &rhs.cosh,
            &self.sinh + &rhs.sinh,
        )
    }
}

/// A single term `coeff · cosᵖθ sinᵠθ coshʳξ sinhˢξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub exps: Exponents,
}

impl Monomial {
    pub fn new(coeff: Rational, exps: Exponents) -> Self {
        Monomial { coeff, exps }
    }

    pub(crate) fn has_negative_exponent(&self) -> bool {
        self.exps.has_negative()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        let e = &self.exps;
        for (name, p) in [("cos", &e.cos), ("sin", &e.sin), ("cosh", &e.cosh), ("sinh", &e.sinh)] {
            if !p.is_zero() {
                let var = if name.ends_with('h') { "ξ" } else { "θ" };
                write!(f, "·{name}^({p}){var}")?;
            }
        }
        Ok(())
    }
}

/// Canonical finite sum of monomials.
///
/// Terms are kept reduced modulo the Pythagorean identities (see the
/// `canonical` module), merged by exponent tuple and stripped of zero
/// coefficients, so two expressions are equal as functions exactly when they
/// are structurally equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FunExpr {
    terms: BTreeMap<Exponents, Rational>,
}

/// Splits `e` into a residue in `[0, 2)` and the integer number of squares.
pub(crate) fn split_exponent(e: &Rational) -> (Rational, i64) {
    let two = int(2);
    let k = (e / &two).floor();
    let base = e - &k * &two;
    let k = k.to_integer().to_i64().expect("exponent magnitude exceeds i64");
    (base, k)
}

fn shifted(base: &Rational, k: i64) -> Rational {
    base + int(2 * k)
}

impl FunExpr {
    pub fn zero() -> Self {
        FunExpr::default()
    }

    pub fn one() -> Self {
        FunExpr::monomial(int(1), Exponents::zero())
    }

    pub fn constant(c: Rational) -> Self {
        FunExpr::monomial(c, Exponents::zero())
    }

    pub fn monomial(coeff: Rational, exps: Exponents) -> Self {
        let mut f = FunExpr::zero();
        f.add_term(coeff, exps);
        f
    }

    /// `coeff · cosᵖθ sinᵠθ coshʳξ sinhˢξ`.
    pub fn term(coeff: Rational, p: Rational, q: Rational, r: Rational, s: Rational) -> Self {
        FunExpr::monomial(coeff, Exponents::new(p, q, r, s))
    }

    /// Same as [`FunExpr::term`] with integer exponents.
    pub fn term_i(coeff: Rational, p: i64, q: i64, r: i64, s: i64) -> Self {
        FunExpr::term(coeff, int(p), int(q), int(r), int(s))
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(it: I) -> Self {
        let mut f = FunExpr::zero();
        for m in it {
            f.add_term(m.coeff, m.exps);
        }
        f
    }

    fn add_reduced(&mut self, coeff: Rational, exps: Exponents) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    /// Adds one (not necessarily reduced) monomial.
    pub fn add_term(&mut self, coeff: Rational, exps: Exponents) {
        if coeff.is_zero() {
            return;
        }
        let (p0, a) = split_exponent(&exps.cos);
        let (q0, b) = split_exponent(&exps.sin);
        let (r0, ra) = split_exponent(&exps.cosh);
        let (s0, sb) = split_exponent(&exps.sinh);
        let theta = reduce(Pair::Circular, a, b);
        let xi = reduce(Pair::Hyperbolic, ra, sb);
        for (ta, tb, tc) in theta.iter() {
            for (xa, xb, xc) in xi.iter() {
                let c: BigInt = tc * xc;
                let e = Exponents::new(
                    shifted(&p0, *ta),
                    shifted(&q0, *tb),
                    shifted(&r0, *xa),
                    shifted(&s0, *xb),
                );
                self.add_reduced(&coeff * Rational::from_integer(c), e);
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(c.clone(), e.clone()))
    }

    pub fn coefficient(&self, exps: &Exponents) -> Option<&Rational> {
        self.terms.get(exps)
    }

    pub fn scale(&self, c: &Rational) -> FunExpr {
        if c.is_zero() {
            return FunExpr::zero();
        }
        FunExpr {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn negate(&self) -> FunExpr {
        self.scale(&-Rational::one())
    }

    /// `Some(c)` when `self == c · other` for a rational `c`; `other` must be nonzero.
    pub fn ratio_to(&self, other: &FunExpr) -> Option<Rational> {
        let (e, d) = other.terms.iter().next()?;
        let c = self.terms.get(e).cloned().unwrap_or_else(Rational::zero) / d;
        (*self == other.scale(&c)).then_some(c)
    }

    pub fn is_theta_only(&self) -> bool {
        self.terms.keys().all(Exponents::is_theta_only)
    }

    pub fn is_xi_only(&self) -> bool {
        self.terms.keys().all(Exponents::is_xi_only)
    }
}

impl Add for &FunExpr {
    type Output = FunExpr;
    fn add(self, rhs: &FunExpr) -> FunExpr {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_reduced(c.clone(), e.clone());
        }
        out
    }
}

impl Sub for &FunExpr {
    type Output = FunExpr;
    fn sub(self, rhs: &FunExpr) -> FunExpr {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_reduced(-c.clone(), e.clone());
        }
        out
    }
}

impl Neg for &FunExpr {
    type Output = FunExpr;
    fn neg(self) -> FunExpr {
        self.negate()
    }
}

impl Mul for &FunExpr {
    type Output = FunExpr;
    fn mul(self, rhs: &FunExpr) -> FunExpr {
        let mut out = FunExpr::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ca * cb, ea + eb);
            }
        }
        out
    }
}

impl Add for FunExpr {
    type Output = FunExpr;
    fn add(self, rhs: FunExpr) -> FunExpr {
        &self + &rhs
    }
}

impl Sub for FunExpr {
    type Output = FunExpr;
    fn sub(self, rhs: FunExpr) -> FunExpr {
        &self - &rhs
    }
}

impl Mul for FunExpr {
    type Output = FunExpr;
    fn mul(self, rhs: FunExpr) -> FunExpr {
        &self * &rhs
    }
}

impl fmt::Display for FunExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Elementary factors used by the operator realizations.
pub mod elementary {
    use super::FunExpr;
    use crate::rational::int;

    fn unit(p: i64, q: i64, r: i64, s: i64) -> FunExpr {
        FunExpr::term_i(int(1), p, q, r, s)
    }

    pub fn cos() -> FunExpr {
        unit(1, 0, 0, 0)
    }
    pub fn sin() -> FunExpr {
        unit(0, 1, 0, 0)
    }
    pub fn tan() -> FunExpr {
        unit(-1, 1, 0, 0)
    }
    pub fn cot() -> FunExpr {
        unit(1, -1, 0, 0)
    }
    pub fn sec() -> FunExpr {
        unit(-1, 0, 0, 0)
    }
    pub fn csc() -> FunExpr {
        unit(0, -1, 0, 0)
    }
    pub fn tanh() -> FunExpr {
        unit(0, 0, -1, 1)
    }
    pub fn coth() -> FunExpr {
        unit(0, 0, 1, -1)
    }
    pub fn sech2() -> FunExpr {
        unit(0, 0, -2, 0)
    }
    pub fn csch2() -> FunExpr {
        unit(0, 0, 0, -2)
    }
    pub fn sec2() -> FunExpr {
        unit(-2, 0, 0, 0)
    }
    pub fn csc2() -> FunExpr {
        unit(0, -2, 0, 0)
    }
}
