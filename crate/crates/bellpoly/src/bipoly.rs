//! Sparse polynomials in two indeterminates `X1`, `X2` over [`Rational`].
//!
//! Every polynomial family in this crate is a value of [`BiPoly`]. The
//! representation is a sparse exponent map with no stored zero coefficients,
//! so equality is exact term-by-term comparison and the rendered text form is
//! canonical (graded-lexicographic, highest degree first).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::binomial;
use crate::rational::Rational;
use crate::ring::Ring;

/// One of the two indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X1,
    X2,
}

/// A polynomial in `ℚ[X1, X2]`, canonically reduced.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    // (e1, e2) -> coefficient; invariant: no zero coefficients stored.
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X1 => BiPoly::monomial(1, 0, Rational::one()),
            Var::X2 => BiPoly::monomial(0, 1, Rational::one()),
        }
    }

    pub fn x1() -> Self {
        BiPoly::var(Var::X1)
    }

    pub fn x2() -> Self {
        BiPoly::var(Var::X2)
    }

    pub fn monomial(e1: u32, e2: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = BiPoly::zero();
        for ((e1, e2), c) in iter {
            p.add_term(e1, e2, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates stored terms in map order (lexicographic by `(e1, e2)`).
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> Rational {
        self.terms
            .get(&(e1, e2))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn deg_x1(&self) -> Option<u32> {
        self.terms.keys().map(|&(e1, _)| e1).max()
    }

    pub fn deg_x2(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, e2)| e2).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(e1, e2)| e1 + e2).max()
    }

    /// Adds `c · X1^e1 X2^e2`, dropping the term if it cancels.
    pub fn add_term(&mut self, e1: u32, e2: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((e1, e2)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// In-place `self += k · rhs`. The workhorse of every summation formula.
    pub fn scaled_add_assign(&mut self, rhs: &BiPoly, k: &Rational) {
        if k.is_zero() {
            return;
        }
        for (&(e1, e2), c) in &rhs.terms {
            self.add_term(e1, e2, c * k);
        }
    }

    pub fn scale(&self, k: &Rational) -> BiPoly {
        if k.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Exact value `p(a, b)`.
    pub fn eval(&self, a: &Rational, b: &Rational) -> Rational {
        let pa = PowerCache::new(a, self.deg_x1().unwrap_or(0));
        let pb = PowerCache::new(b, self.deg_x2().unwrap_or(0));
        let mut acc = Rational::zero();
        for (&(e1, e2), c) in &self.terms {
            acc += &(&(c * pa.get(e1)) * pb.get(e2));
        }
        acc
    }

    /// Partial evaluation `p(a, X2)`; the result involves `X2` only.
    pub fn eval_x1(&self, a: &Rational) -> BiPoly {
        let pa = PowerCache::new(a, self.deg_x1().unwrap_or(0));
        let mut out = BiPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            out.add_term(0, e2, c * pa.get(e1));
        }
        out
    }

    /// Partial evaluation `p(X1, b)`; the result involves `X1` only.
    pub fn eval_x2(&self, b: &Rational) -> BiPoly {
        let pb = PowerCache::new(b, self.deg_x2().unwrap_or(0));
        let mut out = BiPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            out.add_term(e1, 0, c * pb.get(e2));
        }
        out
    }

    /// Substitution `X1 -> X1 + c`, expanded by the binomial theorem.
    pub fn shift_x1(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return self.clone();
        }
        let pc = PowerCache::new(c, self.deg_x1().unwrap_or(0));
        let mut out = BiPoly::zero();
        for (&(e1, e2), coeff) in &self.terms {
            // (X1 + c)^e1 = sum_j C(e1, j) c^(e1-j) X1^j
            for j in 0..=e1 {
                let w = Rational::from(binomial(e1 as usize, j as usize)) * pc.get(e1 - j);
                out.add_term(j, e2, &w * coeff);
            }
        }
        out
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            match v {
                Var::X1 if e1 > 0 => out.add_term(e1 - 1, e2, c * &Rational::from(i64::from(e1))),
                Var::X2 if e2 > 0 => out.add_term(e1, e2 - 1, c * &Rational::from(i64::from(e2))),
                _ => {}
            }
        }
        out
    }

    /// Exchanges the roles of `X1` and `X2`.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(e1, e2), c)| ((e2, e1), c.clone()))
                .collect(),
        }
    }

    /// Terms in graded-lexicographic order, highest degree first; within a
    /// degree block, higher `X1` power first. This is the canonical rendering
    /// order used by [`fmt::Display`] and the machine formats.
    pub fn ordered_terms(&self) -> Vec<((u32, u32), Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&e, c)| (e, c.clone())).collect();
        v.sort_by(|a, b| {
            let da = a.0 .0 + a.0 .1;
            let db = b.0 .0 + b.0 .1;
            db.cmp(&da).then(b.0 .0.cmp(&a.0 .0))
        });
        v
    }
}

struct PowerCache {
    powers: Vec<Rational>,
}

impl PowerCache {
    fn new(base: &Rational, max: u32) -> Self {
        let mut powers = Vec::with_capacity(max as usize + 1);
        powers.push(Rational::one());
        for _ in 0..max {
            let next = powers.last().unwrap() * base;
            powers.push(next);
        }
        PowerCache { powers }
    }

    fn get(&self, e: u32) -> &Rational {
        &self.powers[e as usize]
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }

    fn one() -> Self {
        BiPoly::one()
    }

    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        Ring::add_assign(&mut out, rhs);
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        Ring::sub_assign(&mut out, rhs);
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                out.add_term(a1 + b1, a2 + b2, ca * cb);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    fn scale(&self, k: &Rational) -> Self {
        BiPoly::scale(self, k)
    }

    fn try_inv(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.recip())
            .map(BiPoly::constant)
    }

    fn add_assign(&mut self, rhs: &Self) {
        for (&(e1, e2), c) in &rhs.terms {
            self.add_term(e1, e2, c.clone());
        }
    }

    fn sub_assign(&mut self, rhs: &Self) {
        for (&(e1, e2), c) in &rhs.terms {
            self.add_term(e1, e2, -c);
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        Ring::add(self, rhs)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        Ring::sub(self, rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        Ring::mul(self, rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        Ring::neg(self)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((e1, e2), c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let vars = monomial_text(e1, e2);
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn monomial_text(e1: u32, e2: u32) -> String {
    let mut parts = Vec::new();
    match e1 {
        0 => {}
        1 => parts.push("X1".to_owned()),
        _ => parts.push(format!("X1^{e1}")),
    }
    match e2 {
        0 => {}
        1 => parts.push("X2".to_owned()),
        _ => parts.push(format!("X2^{e2}")),
    }
    parts.join("*")
}
