//! Exact scalars.
//!
//! The base field is the Gaussian rationals `Q(i)`. On top of it sits a
//! thread-local tower of quadratic extensions `Q(i)[s_1, ..., s_k]` with
//! `s_j^2 = d_j`, each `d_j` an element of the tower built so far. An element
//! at level `k` is stored as `2^k` Gaussian coefficients indexed by the bit
//! mask of the generators in the monomial; representations are trimmed so that
//! equality is structural.
//!
//! The tower is append-only per thread. [`tower_scope`] truncates it back to
//! its entry length on exit, so scalars that use generators adjoined inside a
//! scope must not escape it.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;
use std::str::FromStr;
use std::sync::Arc;

use malachite_base::num::arithmetic::traits::CheckedSqrt;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use crate::error::{Error, Result};

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gauss {
    pub re: Rational,
    pub im: Rational,
}

impl Gauss {
    pub fn zero() -> Self {
        Gauss { re: Rational::ZERO, im: Rational::ZERO }
    }

    pub fn one() -> Self {
        Gauss { re: Rational::ONE, im: Rational::ZERO }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        Gauss { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re == Rational::ZERO && self.im == Rational::ZERO
    }

    pub fn is_real(&self) -> bool {
        self.im == Rational::ZERO
    }

    fn add(&self, o: &Gauss) -> Gauss {
        if self.is_real() && o.is_real() {
            return Gauss { re: &self.re + &o.re, im: Rational::ZERO };
        }
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn neg(&self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }

    fn mul(&self, o: &Gauss) -> Gauss {
        if self.is_real() {
            if o.is_real() {
                return Gauss { re: &self.re * &o.re, im: Rational::ZERO };
            }
            return Gauss { re: &self.re * &o.re, im: &self.re * &o.im };
        }
        if o.is_real() {
            return Gauss { re: &self.re * &o.re, im: &self.im * &o.re };
        }
        Gauss { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn inv(&self) -> Option<Gauss> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Gauss { re: Rational::ONE / &self.re, im: Rational::ZERO });
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(Gauss { re: &self.re / &n, im: -(&self.im / &n) })
    }

    fn half(&self) -> Gauss {
        let h = Rational::from_signeds(1i64, 2);
        Gauss { re: &self.re * &h, im: &self.im * &h }
    }

    /// Square root inside `Q(i)`, with the sign fixed by taking the positive
    /// rational root first.
    fn sqrt(&self) -> Option<Gauss> {
        if self.is_real() {
            if self.re >= Rational::ZERO {
                return (&self.re).checked_sqrt().map(|r| Gauss { re: r, im: Rational::ZERO });
            }
            let m = -&self.re;
            return (&m).checked_sqrt().map(|r| Gauss { re: Rational::ZERO, im: r });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        let n = (&norm).checked_sqrt()?;
        for cand in [&self.re + &n, &self.re - &n] {
            let p2 = cand * Rational::from_signeds(1i64, 2);
            if p2 == Rational::ZERO {
                continue;
            }
            if let Some(p) = (&p2).checked_sqrt() {
                let q = &self.im / (Rational::from(2) * &p);
                return Some(Gauss { re: p, im: q });
            }
        }
        None
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == Rational::ZERO {
            write!(f, "{}", self.re)
        } else if self.re == Rational::ZERO {
            write!(f, "{}*i", self.im)
        } else if self.im < Rational::ZERO {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    Rational::from_str(s).ok()
}

fn parse_imag(s: &str) -> Option<Rational> {
    let body = s.trim().strip_suffix('i')?;
    let body = body.strip_suffix('*').unwrap_or(body).trim();
    match body {
        "" | "+" => Some(Rational::ONE),
        "-" => Some(-Rational::ONE),
        b => parse_rational(b),
    }
}

impl FromStr for Gauss {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gauss> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid scalar literal `{s}`"));
        if s.is_empty() {
            return Err(bad());
        }
        // split at the last sign that is not leading
        let split = s.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        if let Some(k) = split {
            let (a, b) = s.split_at(k);
            if b.ends_with('i') {
                let re = parse_rational(a).ok_or_else(bad)?;
                let im = parse_imag(b).ok_or_else(bad)?;
                return Ok(Gauss { re, im });
            }
        }
        if s.ends_with('i') {
            return Ok(Gauss { re: Rational::ZERO, im: parse_imag(&s).ok_or_else(bad)? });
        }
        Ok(Gauss { re: parse_rational(&s).ok_or_else(bad)?, im: Rational::ZERO })
    }
}

// ---------------------------------------------------------------------------
// tower

type Gens = Rc<Vec<Vec<Gauss>>>;

thread_local! {
    static TOWER: RefCell<Gens> = RefCell::new(Rc::new(Vec::new()));
}

fn gens() -> Gens {
    TOWER.with(|t| t.borrow().clone())
}

/// Number of quadratic generators currently adjoined on this thread.
pub fn tower_depth() -> usize {
    TOWER.with(|t| t.borrow().len())
}

/// The defining squares `d_j` of the current tower.
pub fn tower_generators() -> Vec<Scalar> {
    gens().iter().map(|c| Scalar::from_coeffs(c.clone())).collect()
}

/// Runs `f` and truncates the tower back to its current depth afterwards.
pub fn tower_scope<R>(f: impl FnOnce() -> R) -> R {
    let depth = tower_depth();
    let out = f();
    TOWER.with(|t| {
        let mut g = t.borrow_mut();
        if g.len() > depth {
            let mut v = (**g).clone();
            v.truncate(depth);
            *g = Rc::new(v);
        }
    });
    out
}

fn level_of(len: usize) -> usize {
    len.trailing_zeros() as usize
}

fn pad(c: &[Gauss], len: usize) -> Vec<Gauss> {
    let mut v = c.to_vec();
    v.resize(len, Gauss::zero());
    v
}

fn trim(mut v: Vec<Gauss>) -> Vec<Gauss> {
    while v.len() > 1 {
        let half = v.len() / 2;
        if v[half..].iter().all(Gauss::is_zero) {
            v.truncate(half);
        } else {
            break;
        }
    }
    v
}

fn add_slices(a: &[Gauss], b: &[Gauss]) -> Vec<Gauss> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn neg_slice(a: &[Gauss]) -> Vec<Gauss> {
    a.iter().map(Gauss::neg).collect()
}

/// Product of two elements of equal length `2^k`.
fn mul_eq(a: &[Gauss], b: &[Gauss], g: &[Vec<Gauss>]) -> Vec<Gauss> {
    debug_assert_eq!(a.len(), b.len());
    if a.len() == 1 {
        return vec![a[0].mul(&b[0])];
    }
    let half = a.len() / 2;
    let k = level_of(a.len());
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let d = pad(&g[k - 1], half);
    let a0b0 = mul_eq(a0, b0, g);
    let a1b1 = mul_eq(a1, b1, g);
    let a1b1d = mul_eq(&a1b1, &d, g);
    let lo = add_slices(&a0b0, &a1b1d);
    let hi = add_slices(&mul_eq(a0, b1, g), &mul_eq(a1, b0, g));
    let mut out = lo;
    out.extend(hi);
    out
}

fn mul_slices(a: &[Gauss], b: &[Gauss], g: &[Vec<Gauss>]) -> Vec<Gauss> {
    let len = a.len().max(b.len());
    if a.len() == 1 {
        return b.iter().map(|x| a[0].mul(x)).collect();
    }
    if b.len() == 1 {
        return a.iter().map(|x| x.mul(&b[0])).collect();
    }
    mul_eq(&pad(a, len), &pad(b, len), g)
}

fn is_zero_slice(a: &[Gauss]) -> bool {
    a.iter().all(Gauss::is_zero)
}

fn inv_slice(a: &[Gauss], g: &[Vec<Gauss>]) -> Option<Vec<Gauss>> {
    let a = trim(a.to_vec());
    if a.len() == 1 {
        return a[0].inv().map(|x| vec![x]);
    }
    let half = a.len() / 2;
    let k = level_of(a.len());
    let (a0, a1) = a.split_at(half);
    let d = pad(&g[k - 1], half);
    let norm = add_slices(&mul_eq(a0, a0, g), &neg_slice(&mul_eq(&mul_eq(a1, a1, g), &d, g)));
    let ninv = pad(&inv_slice(&norm, g)?, half);
    let mut out = mul_eq(a0, &ninv, g);
    out.extend(neg_slice(&mul_eq(a1, &ninv, g)));
    Some(out)
}

/// `x` has length `2^k`; the root is searched in the full level-`k` field.
fn sqrt_slice(x: &[Gauss], g: &[Vec<Gauss>]) -> Option<Vec<Gauss>> {
    if x.len() == 1 {
        return x[0].sqrt().map(|r| vec![r]);
    }
    let half = x.len() / 2;
    let k = level_of(x.len());
    let (x0, x1) = x.split_at(half);
    let d = pad(&g[k - 1], half);
    if is_zero_slice(x1) {
        if let Some(r) = sqrt_slice(x0, g) {
            return Some(r);
        }
        let q2 = pad(&mul_slices(x0, &inv_slice(&d, g)?, g), half);
        let q = pad(&sqrt_slice(&q2, g)?, half);
        let mut out = vec![Gauss::zero(); half];
        out.extend(q);
        return Some(out);
    }
    let norm = add_slices(&mul_eq(x0, x0, g), &neg_slice(&mul_eq(&mul_eq(x1, x1, g), &d, g)));
    let n = pad(&sqrt_slice(&norm, g)?, half);
    for cand in [add_slices(x0, &n), add_slices(x0, &neg_slice(&n))] {
        let p2: Vec<Gauss> = cand.iter().map(Gauss::half).collect();
        if is_zero_slice(&p2) {
            continue;
        }
        if let Some(p) = sqrt_slice(&p2, g) {
            let p = pad(&p, half);
            let two_p: Vec<Gauss> = p.iter().map(|c| c.add(c)).collect();
            let q = mul_eq(x1, &pad(&inv_slice(&two_p, g)?, half), g);
            let mut out = p;
            out.extend(q);
            return Some(out);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Scalar

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Base(Gauss),
    Tower(Arc<[Gauss]>),
}

/// Exact element of the current quadratic tower over `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Repr);

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Base(Gauss::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Base(Gauss::one()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar(Repr::Base(Gauss::new(Rational::ZERO, Rational::ONE)))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Base(Gauss::new(Rational::from(n), Rational::ZERO)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar(Repr::Base(Gauss::new(Rational::from_signeds(n, d), Rational::ZERO)))
    }

    pub fn gauss(re: Rational, im: Rational) -> Self {
        Scalar(Repr::Base(Gauss::new(re, im)))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Scalar(Repr::Base(g))
    }

    fn from_coeffs(v: Vec<Gauss>) -> Self {
        let mut v = trim(v);
        if v.len() == 1 {
            Scalar(Repr::Base(v.pop().unwrap()))
        } else {
            Scalar(Repr::Tower(v.into()))
        }
    }

    /// Coefficients over the monomial basis of the tower, length `2^level`.
    pub fn coeffs(&self) -> Vec<Gauss> {
        match &self.0 {
            Repr::Base(g) => vec![g.clone()],
            Repr::Tower(c) => c.to_vec(),
        }
    }

    fn slice(&self) -> &[Gauss] {
        match &self.0 {
            Repr::Base(g) => std::slice::from_ref(g),
            Repr::Tower(c) => c,
        }
    }

    /// Highest tower generator this element depends on (0 for `Q(i)`).
    pub fn level(&self) -> usize {
        level_of(self.slice().len())
    }

    pub fn as_gauss(&self) -> Option<&Gauss> {
        match &self.0 {
            Repr::Base(g) => Some(g),
            Repr::Tower(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Base(g) if g.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Base(g) if g.re == Rational::ONE && g.im == Rational::ZERO)
    }

    pub fn inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Base(g) => g.inv().map(Scalar::from_gauss),
            Repr::Tower(c) => inv_slice(c, &gens()).map(Scalar::from_coeffs),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Square root inside the current tower, if one exists.
    pub fn sqrt_in_tower(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let g = gens();
        sqrt_slice(&pad(self.slice(), 1 << g.len()), &g).map(Scalar::from_coeffs)
    }

    /// Returns a square root of `self`, extending the tower by one generator
    /// only when no root exists yet. A fresh generator is itself the canonical
    /// root; existing roots keep the sign the search finds first.
    pub fn adjoin_sqrt(&self) -> Scalar {
        if let Some(r) = self.sqrt_in_tower() {
            return r;
        }
        TOWER.with(|t| {
            let mut g = t.borrow_mut();
            let k = g.len();
            let mut v = (**g).clone();
            v.push(pad(self.slice(), 1 << k));
            *g = Rc::new(v);
            let mut c = vec![Gauss::zero(); 1 << (k + 1)];
            c[1 << k] = Gauss::one();
            Scalar::from_coeffs(c)
        })
    }

    /// Like [`Scalar::adjoin_sqrt`] but refuses zero, for callers that need an
    /// invertible root.
    pub fn adjoin_invertible_sqrt(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Domain("square root of zero is not invertible".into()));
        }
        Ok(self.adjoin_sqrt())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Base(g) => write!(f, "{g}"),
            Repr::Tower(c) => {
                write!(f, "[")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let c = body.split(',').map(Gauss::from_str).collect::<Result<Vec<_>>>()?;
            if !c.len().is_power_of_two() {
                return Err(Error::Parse(format!("tower coefficient list `{s}` has bad length")));
            }
            if level_of(c.len()) > tower_depth() {
                return Err(Error::Parse(format!("`{s}` refers to generators not in the tower")));
            }
            return Ok(Scalar::from_coeffs(c));
        }
        Gauss::from_str(s).map(Scalar::from_gauss)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::gauss(r, Rational::ZERO)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (&self.0, &o.0) {
            (Repr::Base(a), Repr::Base(b)) => Scalar::from_gauss(a.add(b)),
            _ => Scalar::from_coeffs(add_slices(self.slice(), o.slice())),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (&self.0, &o.0) {
            (Repr::Base(a), Repr::Base(b)) => Scalar::from_gauss(a.sub(b)),
            _ => Scalar::from_coeffs(add_slices(self.slice(), &neg_slice(o.slice()))),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (&self.0, &o.0) {
            (Repr::Base(a), Repr::Base(b)) => Scalar::from_gauss(a.mul(b)),
            _ => Scalar::from_coeffs(mul_slices(self.slice(), o.slice(), &gens())),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Base(a) => Scalar::from_gauss(a.neg()),
            Repr::Tower(c) => Scalar::from_coeffs(neg_slice(c)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn sqrt_of_minus_one_is_i() {
        tower_scope(|| {
            assert_eq!(Scalar::from_int(-1).adjoin_sqrt(), Scalar::i());
            assert_eq!(tower_depth(), 0);
        });
    }

    #[test]
    fn sqrt_of_perfect_square() {
        tower_scope(|| {
            assert_eq!(Scalar::from_int(4).adjoin_sqrt(), Scalar::from_int(2));
            assert_eq!(s("9/4").adjoin_sqrt(), s("3/2"));
            // (1+2i)^2 = -3+4i
            let r = s("-3+4*i").adjoin_sqrt();
            assert_eq!(r.square(), s("-3+4*i"));
            assert_eq!(tower_depth(), 0);
        });
    }

    #[test]
    fn adjoin_sqrt_two_grows_tower() {
        tower_scope(|| {
            let two = Scalar::from_int(2);
            let r = two.adjoin_sqrt();
            assert_eq!(tower_depth(), 1);
            assert_eq!(r.square(), two);
            // second request reuses the generator
            assert_eq!(two.adjoin_sqrt(), r);
            // sqrt(8) = 2 sqrt(2) without growth
            let r8 = Scalar::from_int(8).adjoin_sqrt();
            assert_eq!(r8.square(), Scalar::from_int(8));
            assert_eq!(tower_depth(), 1);
            // sqrt(3 + 2 sqrt 2) = 1 + sqrt 2
            let x = Scalar::from_int(3) + Scalar::from_int(2) * &r;
            let y = x.adjoin_sqrt();
            assert_eq!(y.square(), x);
            assert_eq!(tower_depth(), 1);
        });
        assert_eq!(tower_depth(), 0);
    }

    #[test]
    fn two_level_tower_field_ops() {
        tower_scope(|| {
            let r2 = Scalar::from_int(2).adjoin_sqrt();
            let r3 = Scalar::from_int(3).adjoin_sqrt();
            assert_eq!(tower_depth(), 2);
            let r6 = Scalar::from_int(6).adjoin_sqrt();
            assert_eq!(tower_depth(), 2);
            assert_eq!(r6.square(), Scalar::from_int(6));
            assert_eq!((&r2 * &r3).square(), Scalar::from_int(6));
            let a = &r2 + &(&r3 * &Scalar::i()) + Scalar::frac(1, 3);
            let ai = a.inv().unwrap();
            assert!((&a * &ai).is_one());
            // a nested root: sqrt(1 + sqrt 2) is new
            let b = (Scalar::one() + &r2).adjoin_sqrt();
            assert_eq!(tower_depth(), 3);
            assert_eq!(b.square(), Scalar::one() + &r2);
        });
    }

    #[test]
    fn display_and_parse() {
        for lit in ["0", "3", "-1/2", "2*i", "-i", "1/2-3/4*i", "1+i"] {
            let x = s(lit);
            let back: Scalar = x.to_string().parse().unwrap();
            assert_eq!(back, x, "{lit}");
        }
        assert_eq!(s("1/2-3/4*i").to_string(), "1/2-3/4*i");
        assert_eq!(s("i"), Scalar::i());
        assert!("abc".parse::<Scalar>().is_err());
    }
}
