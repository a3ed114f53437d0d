//! Exact multivariate Laurent polynomials.
//!
//! A [`MultiPoly`] is a finite map from canonical monomials to nonzero
//! coefficients. Coefficients are arbitrary precision integers by default;
//! rational coefficients are used by the random-cluster function.
//!
//! Negative exponents are accepted only for the variables reported by
//! [`Var::is_invertible`], so a polynomial never silently leaves the
//! localized ring it lives in.

mod text;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use text::ParsePolyError;

/// Errors raised while building or transforming polynomials.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable {0} is not invertible and cannot carry a negative exponent")]
    NotInvertible(Var),
    #[error("cannot substitute for {0}: its image is not a unit, but the variable carries a negative exponent")]
    NonInvertibleSubstitution(Var),
    #[error("invalid color name {0:?}")]
    BadColorName(alloc::string::String),
}

/// A color name. `+` and `-` are the two colors used by face graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(Arc<str>);

impl Color {
    /// Builds a color from its name. Names are nonempty and may not contain
    /// whitespace, brackets, `*` or `^`, so they survive the text format.
    pub fn new(name: &str) -> Result<Self, PolyError> {
        let bad = |c: char| c.is_whitespace() || matches!(c, '[' | ']' | '*' | '^' | '"');
        if name.is_empty() || name.chars().any(bad) || name == "0" {
            return Err(PolyError::BadColorName(name.into()));
        }
        Ok(Color(Arc::from(name)))
    }

    pub fn plus() -> Self {
        Color(Arc::from("+"))
    }

    pub fn minus() -> Self {
        Color(Arc::from("-"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Color({})", self.0)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A polynomial variable.
///
/// The derived order is the canonical variable order used for printing and
/// hashing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// `x_λ`, weight of an internally inactive edge.
    LowerX(Color),
    /// `y_λ`, weight of an externally inactive edge.
    LowerY(Color),
    /// `X_λ`, weight of an internally active edge.
    UpperX(Color),
    /// `Y_λ`, weight of an externally active edge.
    UpperY(Color),
    /// Global `X` of the localized ring.
    XLoc,
    /// Global `Y` of the localized ring.
    YLoc,
    /// Loop value of the knot ψ.
    D,
    /// Kauffman bracket variable.
    A,
    /// `t^{1/4}`.
    Q,
    PlainX,
    PlainY,
    PlainZ,
    Kappa,
    /// `α_k`, component-count marker.
    Alpha(u32),
}

impl Var {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Var::D | Var::A | Var::Q | Var::LowerX(_) | Var::LowerY(_))
    }

    pub fn color(&self) -> Option<&Color> {
        match self {
            Var::LowerX(c) | Var::LowerY(c) | Var::UpperX(c) | Var::UpperY(c) => Some(c),
            _ => None,
        }
    }
}

/// A canonical monomial: variables in increasing order, no zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: i32) -> Result<Self, PolyError> {
        if exp < 0 && !v.is_invertible() {
            return Err(PolyError::NotInvertible(v));
        }
        if exp == 0 {
            return Ok(Self::one());
        }
        Ok(Monomial(alloc::vec![(v, exp)]))
    }

    /// Builds a monomial from arbitrary factors, merging repeated variables.
    pub fn from_factors<I: IntoIterator<Item = (Var, i32)>>(factors: I) -> Result<Self, PolyError> {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in factors {
            *acc.entry(v).or_insert(0) += e;
        }
        let mut out = Vec::with_capacity(acc.len());
        for (v, e) in acc {
            if e == 0 {
                continue;
            }
            if e < 0 && !v.is_invertible() {
                return Err(PolyError::NotInvertible(v));
            }
            out.push((v, e));
        }
        Ok(Monomial(out))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: &Var) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Inverse monomial; fails if any variable is not invertible.
    pub fn inverse(&self) -> Result<Monomial, PolyError> {
        let mut out = Vec::with_capacity(self.0.len());
        for (v, e) in &self.0 {
            if !v.is_invertible() {
                return Err(PolyError::NotInvertible(v.clone()));
            }
            out.push((v.clone(), -e));
        }
        Ok(Monomial(out))
    }
}

/// Coefficient rings usable in [`MultiPoly`].
pub trait Coefficient:
    Clone + Eq + Ord + fmt::Debug + fmt::Display + Zero + One + Signed + core::str::FromStr
{
    /// Multiplicative inverse when the element is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Coefficient for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Multivariate Laurent polynomial with exact coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiPoly<C = BigInt> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// The polynomial consisting of a single variable.
    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Monomial(alloc::vec![(v, 1)]))
    }

    pub fn var_pow(v: Var, exp: i32) -> Result<Self, PolyError> {
        Ok(Self::term(C::one(), Monomial::var(v, exp)?))
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Returns `Some((c, m))` if the polynomial has exactly one term.
    pub fn as_single_term(&self) -> Option<(&C, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// All variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a single-term polynomial whose coefficient is a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, m) = self.as_single_term()?;
        let ci = c.unit_inverse()?;
        let mi = m.inverse().ok()?;
        Some(Self::term(ci, mi))
    }

    /// Ring homomorphism fixing coefficients and sending each variable in
    /// `map` to its image. Variables missing from `map` are kept.
    pub fn substitute(&self, map: &BTreeMap<Var, MultiPoly<C>>) -> Result<Self, PolyError> {
        let mut pow_cache: BTreeMap<(Var, i32), MultiPoly<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for (v, e) in &m.0 {
                match map.get(v) {
                    None => kept.push((v.clone(), *e)),
                    Some(image) => {
                        let key = (v.clone(), *e);
                        if !pow_cache.contains_key(&key) {
                            let p = if *e >= 0 {
                                image.pow(*e as u32)
                            } else {
                                image
                                    .unit_inverse()
                                    .ok_or_else(|| PolyError::NonInvertibleSubstitution(v.clone()))?
                                    .pow(e.unsigned_abs())
                            };
                            pow_cache.insert(key.clone(), p);
                        }
                        acc = &acc * &pow_cache[&key];
                    }
                }
            }
            let acc = acc.mul_monomial(&Monomial(kept));
            out += acc;
        }
        Ok(out)
    }

    /// Replaces every `X_λ` by `x_λ + X·y_λ` and every `Y_λ` by `y_λ + Y·x_λ`.
    ///
    /// In the localized ring this is an isomorphism that turns labeling
    /// independence of colored Tutte values into literal equality.
    pub fn localize(&self) -> Self {
        let mut map = BTreeMap::new();
        for v in self.variables() {
            match &v {
                Var::UpperX(c) => {
                    let img = Self::var(Var::LowerX(c.clone()))
                        + Self::var(Var::XLoc) * Self::var(Var::LowerY(c.clone()));
                    map.insert(v.clone(), img);
                }
                Var::UpperY(c) => {
                    let img = Self::var(Var::LowerY(c.clone()))
                        + Self::var(Var::YLoc) * Self::var(Var::LowerX(c.clone()));
                    map.insert(v.clone(), img);
                }
                _ => {}
            }
        }
        // upper-case variables never carry negative exponents
        self.substitute(&map).expect("localization images are never inverted")
    }

    /// Evaluates at a point given for every variable of the polynomial.
    pub fn evaluate(&self, point: &BTreeMap<Var, C>) -> Option<C> {
        let map: BTreeMap<Var, MultiPoly<C>> =
            point.iter().map(|(v, c)| (v.clone(), Self::constant(c.clone()))).collect();
        self.substitute(&map).ok()?.as_constant()
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::<D>::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Smallest and largest exponent of `v` over all terms.
    pub fn exponent_range(&self, v: &Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }
}

impl MultiPoly<BigInt> {
    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl<C: Coefficient> From<Var> for MultiPoly<C> {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<C: Coefficient> AddAssign<MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: MultiPoly<C>) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = core::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl<C: Coefficient> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -(self.clone())
    }
}

impl<C: Coefficient> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self + (-rhs)
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> core::iter::Sum for MultiPoly<C> {
    fn sum<I: Iterator<Item = MultiPoly<C>>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl<C: Coefficient> core::iter::Product for MultiPoly<C> {
    fn product<I: Iterator<Item = MultiPoly<C>>>(iter: I) -> Self {
        let mut acc = Self::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests;
