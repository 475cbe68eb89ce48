//! Builders for the polynomial families.
//!
//! Every family here is realized the same way: construct its exponential
//! generating function with [`crate::series`], then read off EGF-normalized
//! coefficients. The unified object is
//!
//! ```text
//! (2^eta t^delta / (lambda e^t + 1))^alpha · e^(x1 t) · e^(x2 (e^t - 1))
//! ```
//!
//! whose coefficients are the mixed Bell/Apostol polynomials in `(X1, X2)`.
//! Specializations: `alpha = 0` gives the bivariate Bell polynomials, the
//! `x2 = 0` slice gives the Apostol-type polynomials, and parameter choices
//! `(eta, delta) = (1,0) / (0,1 with lambda negated and an alpha sign) /
//! (1,1)` give the Apostol-Euler/-Bernoulli/-Genocchi families.
//!
//! The scalar base factor is always computed over the rationals first and
//! lifted into `ℚ[X1, X2]` afterwards, so the only polynomial-coefficient
//! work is the two exponentials and the final product.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::LaurentSeries;

/// The polynomial families the crate can tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    BellBivariate,
    BellClassical,
    BellNumber,
    Euler,
    Bernoulli,
    Genocchi,
    ApostolEuler,
    ApostolBernoulli,
    ApostolGenocchi,
    ApostolType,
    BellApostolType,
    BellApostolNumber,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::BellBivariate,
        FamilyKind::BellClassical,
        FamilyKind::BellNumber,
        FamilyKind::Euler,
        FamilyKind::Bernoulli,
        FamilyKind::Genocchi,
        FamilyKind::ApostolEuler,
        FamilyKind::ApostolBernoulli,
        FamilyKind::ApostolGenocchi,
        FamilyKind::ApostolType,
        FamilyKind::BellApostolType,
        FamilyKind::BellApostolNumber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::BellBivariate => "bell-bivariate",
            FamilyKind::BellClassical => "bell-classical",
            FamilyKind::BellNumber => "bell-number",
            FamilyKind::Euler => "euler",
            FamilyKind::Bernoulli => "bernoulli",
            FamilyKind::Genocchi => "genocchi",
            FamilyKind::ApostolEuler => "apostol-euler",
            FamilyKind::ApostolBernoulli => "apostol-bernoulli",
            FamilyKind::ApostolGenocchi => "apostol-genocchi",
            FamilyKind::ApostolType => "apostol-type",
            FamilyKind::BellApostolType => "bell-apostol",
            FamilyKind::BellApostolNumber => "bell-apostol-number",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Does the order parameter vary for this family?
    pub fn uses_alpha(self) -> bool {
        !matches!(
            self,
            FamilyKind::BellBivariate | FamilyKind::BellClassical | FamilyKind::BellNumber
        )
    }

    pub fn uses_lambda(self) -> bool {
        matches!(
            self,
            FamilyKind::ApostolEuler
                | FamilyKind::ApostolBernoulli
                | FamilyKind::ApostolGenocchi
                | FamilyKind::ApostolType
                | FamilyKind::BellApostolType
                | FamilyKind::BellApostolNumber
        )
    }

    /// Only the unified Apostol-type families take free `(eta, delta)`;
    /// everywhere else those exponents are fixed by the family itself.
    pub fn uses_eta_delta(self) -> bool {
        matches!(
            self,
            FamilyKind::ApostolType | FamilyKind::BellApostolType | FamilyKind::BellApostolNumber
        )
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family plus its parameters.
///
/// Parameters a kind does not use are pinned at the neutral defaults
/// `alpha = 1, lambda = 1, eta = 0, delta = 0`, so equality of two specs is
/// meaningful. Use [`FamilySpec::build`] to construct one from user input;
/// it rejects parameters that the family does not accept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub alpha: u32,
    pub lambda: Rational,
    pub eta: i64,
    pub delta: u32,
}

impl FamilySpec {
    /// A spec with all parameters at their neutral defaults.
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            alpha: 1,
            lambda: Rational::one(),
            eta: 0,
            delta: 0,
        }
    }

    pub fn with_alpha(mut self, alpha: u32) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_lambda(mut self, lambda: Rational) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_eta(mut self, eta: i64) -> Self {
        self.eta = eta;
        self
    }

    pub fn with_delta(mut self, delta: u32) -> Self {
        self.delta = delta;
        self
    }

    /// Builds a spec from optional user parameters, rejecting any that the
    /// family does not accept. The error text names the offending flag.
    pub fn build(
        kind: FamilyKind,
        alpha: Option<u32>,
        lambda: Option<Rational>,
        eta: Option<i64>,
        delta: Option<u32>,
    ) -> std::result::Result<FamilySpec, String> {
        let mut spec = FamilySpec::new(kind);
        if let Some(a) = alpha {
            if !kind.uses_alpha() {
                return Err(format!("family `{kind}` does not take --alpha"));
            }
            spec.alpha = a;
        }
        if let Some(l) = lambda {
            if !kind.uses_lambda() {
                return Err(format!("family `{kind}` does not take --lambda"));
            }
            spec.lambda = l;
        }
        if let Some(e) = eta {
            if !kind.uses_eta_delta() {
                return Err(format!("family `{kind}` does not take --eta"));
            }
            spec.eta = e;
        }
        if let Some(d) = delta {
            if !kind.uses_eta_delta() {
                return Err(format!("family `{kind}` does not take --delta"));
            }
            spec.delta = d;
        }
        Ok(spec)
    }
}

/// Consecutive rows `(n, value)` of one family, built from a single series
/// construction.
#[derive(Debug, Clone)]
pub struct PolyTable {
    pub spec: FamilySpec,
    pub rows: Vec<(usize, BiPoly)>,
}

/// The scalar base factor `(2^eta t^delta / (lambda e^t + 1))^alpha`,
/// guaranteed to `order`.
///
/// `lambda = -1` makes the denominator vanish at `t = 0`; with `delta = 0`
/// and `alpha >= 1` nothing cancels the pole and the series does not exist as
/// a power object — that is [`Error::PoleAtZero`]. With `delta >= 1` the
/// numerator's zero cancels it and the valuation-aware inversion handles the
/// construction with no special casing.
pub fn apostol_base(
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
    order: i64,
) -> Result<LaurentSeries<Rational>> {
    if alpha == 0 {
        return Ok(LaurentSeries::one(order));
    }
    let minus_one = -Rational::one();
    if *lambda == minus_one && delta == 0 {
        return Err(Error::PoleAtZero);
    }
    // Working order: the inversion costs up to two orders at lambda = -1 and
    // raising to the alpha-th power shifts the window by the valuation.
    let work = order + i64::from(alpha) * i64::from(delta) + 2;
    let denom = LaurentSeries::exp_t(work)
        .scale(lambda)
        .add(&LaurentSeries::one(work));
    let unit = denom.inv()?;
    let numer = LaurentSeries::monomial(i64::from(delta), work).scale(&Rational::two_pow(eta));
    Ok(numer.mul(&unit).pow(alpha).truncate(order))
}

/// The full mixed EGF
/// `base^alpha · e^(x1_off · t) · e^(x2_off · (e^t - 1))`
/// over `ℚ[X1, X2]`, guaranteed to `order`.
///
/// The two offsets are arbitrary polynomials: `(X1, X2)` gives the family
/// itself, rational constants give evaluations, and mixed offsets like
/// `a + X1` realize argument shifts directly at the generating-function
/// level.
pub fn bell_apostol_egf(
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
    x1_off: &BiPoly,
    x2_off: &BiPoly,
    order: i64,
) -> Result<LaurentSeries<BiPoly>> {
    let base = apostol_base(alpha, lambda, eta, delta, order)?.lift();
    let e1 = LaurentSeries::from_coeffs(1, vec![x1_off.clone()], order).exp()?;
    let e2 = LaurentSeries::expm1(order)
        .lift()
        .scale_coeff(x2_off)
        .exp()?;
    Ok(base.mul(&e1).mul(&e2).truncate(order))
}

/// All rows `n = 0 ..= n_max` of the mixed family with symbolic arguments:
/// one series construction, `n_max + 1` coefficient extractions.
pub fn bell_apostol_table(
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
    n_max: usize,
) -> Result<Vec<BiPoly>> {
    let egf = bell_apostol_egf(
        alpha,
        lambda,
        eta,
        delta,
        &BiPoly::x1(),
        &BiPoly::x2(),
        n_max as i64,
    )?;
    (0..=n_max).map(|n| egf.egf_coeff(n as i64)).collect()
}

/// The mixed Bell/Apostol polynomial of degree `n` in `(X1, X2)`.
pub fn bell_apostol_poly(
    n: usize,
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
) -> Result<BiPoly> {
    let egf = bell_apostol_egf(
        alpha,
        lambda,
        eta,
        delta,
        &BiPoly::x1(),
        &BiPoly::x2(),
        n as i64,
    )?;
    egf.egf_coeff(n as i64)
}

/// The mixed Bell/Apostol number: the polynomial evaluated at
/// `X1 = 0, X2 = 1`.
pub fn bell_apostol_number(
    n: usize,
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
) -> Result<Rational> {
    let p = bell_apostol_poly(n, alpha, lambda, eta, delta)?;
    Ok(p.eval(&Rational::zero(), &Rational::one()))
}

/// The bivariate Bell polynomial: EGF `e^(X1 t + X2 (e^t - 1))`.
pub fn bell_bivariate(n: usize) -> BiPoly {
    bell_apostol_poly(n, 0, &Rational::one(), 0, 0).expect("alpha = 0 never has a pole")
}

/// Rows `0 ..= n_max` of the bivariate Bell polynomials.
pub fn bell_bivariate_table(n_max: usize) -> Vec<BiPoly> {
    bell_apostol_table(0, &Rational::one(), 0, 0, n_max).expect("alpha = 0 never has a pole")
}

/// The classical Bell (exponential) polynomial in `X2`: the `X1 = 0` slice.
pub fn bell_classical(n: usize) -> BiPoly {
    let egf = bell_apostol_egf(
        0,
        &Rational::one(),
        0,
        0,
        &BiPoly::zero(),
        &BiPoly::x2(),
        n as i64,
    )
    .expect("alpha = 0 never has a pole");
    egf.egf_coeff(n as i64).expect("power series")
}

/// Rows `0 ..= n_max` of the classical Bell polynomials (in `X2`).
pub fn bell_classical_table(n_max: usize) -> Vec<BiPoly> {
    let egf = bell_apostol_egf(
        0,
        &Rational::one(),
        0,
        0,
        &BiPoly::zero(),
        &BiPoly::x2(),
        n_max as i64,
    )
    .expect("alpha = 0 never has a pole");
    (0..=n_max)
        .map(|n| egf.egf_coeff(n as i64).expect("power series"))
        .collect()
}

/// The Bell number: the classical Bell polynomial at `X2 = 1`.
pub fn bell_number(n: usize) -> Rational {
    bell_classical(n).eval(&Rational::zero(), &Rational::one())
}

/// The Apostol-type polynomial of order `alpha`: EGF `base^alpha · e^(X1 t)`.
/// Lives in `X1` only — it is the `X2 = 0` slice of the mixed family.
pub fn apostol_type_poly(
    n: usize,
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
) -> Result<BiPoly> {
    let egf = bell_apostol_egf(
        alpha,
        lambda,
        eta,
        delta,
        &BiPoly::x1(),
        &BiPoly::zero(),
        n as i64,
    )?;
    egf.egf_coeff(n as i64)
}

/// Rows `0 ..= n_max` of the Apostol-type polynomials.
pub fn apostol_type_table(
    alpha: u32,
    lambda: &Rational,
    eta: i64,
    delta: u32,
    n_max: usize,
) -> Result<Vec<BiPoly>> {
    let egf = bell_apostol_egf(
        alpha,
        lambda,
        eta,
        delta,
        &BiPoly::x1(),
        &BiPoly::zero(),
        n_max as i64,
    )?;
    (0..=n_max).map(|n| egf.egf_coeff(n as i64)).collect()
}

/// Apostol-Bernoulli polynomials, implemented exclusively as the reduction
/// `B_n^(alpha)(x; lambda) = (-1)^alpha F_n^(alpha)(x; -lambda; 0, 1)`.
pub fn apostol_bernoulli(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    let p = apostol_type_poly(n, alpha, &-lambda, 0, 1)?;
    Ok(if alpha % 2 == 1 { Ring::neg(&p) } else { p })
}

/// Apostol-Euler polynomials as the reduction `F_n^(alpha)(x; lambda; 1, 0)`.
pub fn apostol_euler(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    apostol_type_poly(n, alpha, lambda, 1, 0)
}

/// Apostol-Genocchi polynomials as the reduction
/// `F_n^(alpha)(x; lambda; 1, 1)`.
pub fn apostol_genocchi(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    apostol_type_poly(n, alpha, lambda, 1, 1)
}

/// Independent route for Apostol-Bernoulli: the EGF
/// `(t / (lambda e^t - 1))^alpha e^(X1 t)` built directly, all rows from one
/// construction. Kept separate so the reduction implementation above has
/// something honest to disagree with.
pub fn apostol_bernoulli_direct_table(
    alpha: u32,
    lambda: &Rational,
    n_max: usize,
) -> Result<Vec<BiPoly>> {
    let order = n_max as i64;
    if alpha == 0 {
        return Ok(monomial_family(n_max));
    }
    let work = order + i64::from(alpha) + 2;
    let denom = LaurentSeries::exp_t(work)
        .scale(lambda)
        .sub(&LaurentSeries::one(work));
    if denom.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let base = LaurentSeries::monomial(1, work)
        .mul(&denom.inv()?)
        .pow(alpha)
        .truncate(order)
        .lift();
    let e1 = LaurentSeries::from_coeffs(1, vec![BiPoly::x1()], order).exp()?;
    let egf = base.mul(&e1);
    (0..=n_max).map(|n| egf.egf_coeff(n as i64)).collect()
}

pub fn apostol_bernoulli_direct(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    Ok(apostol_bernoulli_direct_table(alpha, lambda, n)?.swap_remove(n))
}

/// Independent route for Apostol-Euler: `(2 / (lambda e^t + 1))^alpha e^(X1 t)`.
pub fn apostol_euler_direct_table(
    alpha: u32,
    lambda: &Rational,
    n_max: usize,
) -> Result<Vec<BiPoly>> {
    let order = n_max as i64;
    if alpha == 0 {
        return Ok(monomial_family(n_max));
    }
    if *lambda == -Rational::one() {
        return Err(Error::PoleAtZero);
    }
    let work = order + 2;
    let denom = LaurentSeries::exp_t(work)
        .scale(lambda)
        .add(&LaurentSeries::one(work));
    let base = denom
        .inv()?
        .scale(&Rational::from(2))
        .pow(alpha)
        .truncate(order)
        .lift();
    let e1 = LaurentSeries::from_coeffs(1, vec![BiPoly::x1()], order).exp()?;
    let egf = base.mul(&e1);
    (0..=n_max).map(|n| egf.egf_coeff(n as i64)).collect()
}

pub fn apostol_euler_direct(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    Ok(apostol_euler_direct_table(alpha, lambda, n)?.swap_remove(n))
}

/// Independent route for Apostol-Genocchi: `(2t / (lambda e^t + 1))^alpha e^(X1 t)`.
pub fn apostol_genocchi_direct_table(
    alpha: u32,
    lambda: &Rational,
    n_max: usize,
) -> Result<Vec<BiPoly>> {
    let order = n_max as i64;
    if alpha == 0 {
        return Ok(monomial_family(n_max));
    }
    let work = order + i64::from(alpha) + 2;
    let denom = LaurentSeries::exp_t(work)
        .scale(lambda)
        .add(&LaurentSeries::one(work));
    if denom.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let base = LaurentSeries::monomial(1, work)
        .scale(&Rational::from(2))
        .mul(&denom.inv()?)
        .pow(alpha)
        .truncate(order)
        .lift();
    let e1 = LaurentSeries::from_coeffs(1, vec![BiPoly::x1()], order).exp()?;
    let egf = base.mul(&e1);
    (0..=n_max).map(|n| egf.egf_coeff(n as i64)).collect()
}

pub fn apostol_genocchi_direct(n: usize, alpha: u32, lambda: &Rational) -> Result<BiPoly> {
    Ok(apostol_genocchi_direct_table(alpha, lambda, n)?.swap_remove(n))
}

// At alpha = 0 all three classical EGFs collapse to e^(X1 t).
fn monomial_family(n_max: usize) -> Vec<BiPoly> {
    (0..=n_max)
        .map(|n| BiPoly::monomial(n as u32, 0, Rational::one()))
        .collect()
}

/// Which classical family an order-`alpha` table should specialize to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    Euler,
    Bernoulli,
    Genocchi,
}

/// Euler/Bernoulli/Genocchi polynomials of order `alpha`: the `lambda = 1`
/// specializations. Numbers are obtained by evaluating at `X1 = 0`.
pub fn classical_order_poly(kind: ClassicalKind, n: usize, alpha: u32) -> Result<BiPoly> {
    let one = Rational::one();
    match kind {
        ClassicalKind::Euler => apostol_euler(n, alpha, &one),
        ClassicalKind::Bernoulli => apostol_bernoulli(n, alpha, &one),
        ClassicalKind::Genocchi => apostol_genocchi(n, alpha, &one),
    }
}

/// Builds the full table for a family spec: one series construction at order
/// `n_max`, then `n_max + 1` coefficient extractions.
pub fn build_table(spec: &FamilySpec, n_max: usize) -> Result<PolyTable> {
    let order = n_max as i64;
    let one = Rational::one();
    let x1 = BiPoly::x1();
    let x2 = BiPoly::x2();
    let zero = BiPoly::zero();

    let (egf, post): (LaurentSeries<BiPoly>, fn(BiPoly) -> BiPoly) = match spec.kind {
        FamilyKind::BellBivariate => (bell_apostol_egf(0, &one, 0, 0, &x1, &x2, order)?, |p| p),
        FamilyKind::BellClassical => (bell_apostol_egf(0, &one, 0, 0, &zero, &x2, order)?, |p| p),
        FamilyKind::BellNumber => (bell_apostol_egf(0, &one, 0, 0, &zero, &x2, order)?, |p| {
            p.eval_x2(&Rational::one())
        }),
        FamilyKind::Euler => (
            bell_apostol_egf(spec.alpha, &one, 1, 0, &x1, &zero, order)?,
            |p| p,
        ),
        FamilyKind::Bernoulli | FamilyKind::ApostolBernoulli => {
            let egf = bell_apostol_egf(spec.alpha, &-&spec.lambda, 0, 1, &x1, &zero, order)?;
            let egf = if spec.alpha % 2 == 1 {
                egf.scale(&-Rational::one())
            } else {
                egf
            };
            (egf, |p| p)
        }
        FamilyKind::Genocchi => (
            bell_apostol_egf(spec.alpha, &one, 1, 1, &x1, &zero, order)?,
            |p| p,
        ),
        FamilyKind::ApostolEuler => (
            bell_apostol_egf(spec.alpha, &spec.lambda, 1, 0, &x1, &zero, order)?,
            |p| p,
        ),
        FamilyKind::ApostolGenocchi => (
            bell_apostol_egf(spec.alpha, &spec.lambda, 1, 1, &x1, &zero, order)?,
            |p| p,
        ),
        FamilyKind::ApostolType => (
            bell_apostol_egf(
                spec.alpha,
                &spec.lambda,
                spec.eta,
                spec.delta,
                &x1,
                &zero,
                order,
            )?,
            |p| p,
        ),
        FamilyKind::BellApostolType => (
            bell_apostol_egf(
                spec.alpha,
                &spec.lambda,
                spec.eta,
                spec.delta,
                &x1,
                &x2,
                order,
            )?,
            |p| p,
        ),
        FamilyKind::BellApostolNumber => (
            bell_apostol_egf(
                spec.alpha,
                &spec.lambda,
                spec.eta,
                spec.delta,
                &zero,
                &x2,
                order,
            )?,
            |p| p.eval_x2(&Rational::one()),
        ),
    };

    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = post(egf.egf_coeff(n as i64)?);
        debug_assert!(
            value.deg_x1().unwrap_or(0) as usize <= n
                && value.deg_x2().unwrap_or(0) as usize <= n,
            "table row degree exceeds its index"
        );
        rows.push((n, value));
    }
    Ok(PolyTable {
        spec: spec.clone(),
        rows,
    })
}
