//! Projection of target functions onto the kernel span and the weighted
//! squared error of the result against a Maclaurin truncation.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactscalar::{
    eval_pilaurent, factorial, int, ratio, BigFloat, PiLaurent, Rational, ScaledRational,
};
use crate::family::{monomial_moment, Family};
use crate::kernel::{build_kernel, KernelMatrix};
use crate::oracle::gram_from_moments;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetFunction {
    /// `sin(pi x)` on `(-1, 1)`
    SinPi,
    /// `cos(pi x)` on `(-1, 1)`
    CosPi,
    /// `exp(-x)` on `(0, ∞)` against the weight `exp(-x)`
    ExpNeg,
}

impl TargetFunction {
    pub const ALL: [TargetFunction; 3] = [
        TargetFunction::SinPi,
        TargetFunction::CosPi,
        TargetFunction::ExpNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TargetFunction::SinPi => "sin-pi",
            TargetFunction::CosPi => "cos-pi",
            TargetFunction::ExpNeg => "exp-neg",
        }
    }

    pub fn natural_family(self) -> Family {
        match self {
            TargetFunction::SinPi => Family::LegendreOdd,
            TargetFunction::CosPi => Family::LegendreEven,
            TargetFunction::ExpNeg => Family::Laguerre,
        }
    }

    /// `∫_D f² w`.
    pub fn squared_integral(self) -> PiLaurent {
        match self {
            TargetFunction::SinPi | TargetFunction::CosPi => PiLaurent::one(),
            TargetFunction::ExpNeg => PiLaurent::from(ratio(1, 3)),
        }
    }

    /// Maclaurin coefficient of the `k`-th (0-based) basis power.
    fn taylor_coefficient(self, k: u32) -> PiLaurent {
        let d = self.natural_family().power(k as usize + 1);
        let q = Rational::new(
            if k.is_multiple_of(2) {
                1.into()
            } else {
                (-1).into()
            },
            factorial(d),
        );
        match self {
            TargetFunction::ExpNeg => PiLaurent::from(q),
            TargetFunction::SinPi | TargetFunction::CosPi => PiLaurent::monomial(q, d as i32),
        }
    }

    /// Number of Maclaurin terms in the Taylor comparator of the size-`n`
    /// variance row. For `cos(pi x)` the comparator runs to degree `2n`,
    /// one even term beyond the kernel estimate.
    pub fn comparator_terms(self, n: usize) -> usize {
        match self {
            TargetFunction::CosPi => n + 1,
            _ => n,
        }
    }

    pub fn eval(self, x: &BigFloat) -> Result<BigFloat> {
        match self {
            TargetFunction::ExpNeg => BigFloat::zero(x.precision_bits())?.sub(x)?.exp(),
            TargetFunction::SinPi | TargetFunction::CosPi => {
                let bits = x.precision_bits();
                // reduce mod 2 exactly so integer and half-integer zeros stay exact
                let q = x.to_rational();
                let r = &q - (&q / int(2)).floor() * int(2);
                let on_zero = match self {
                    TargetFunction::SinPi => r.is_integer(),
                    _ => (&r * int(2)).is_integer() && !r.is_integer(),
                };
                if on_zero {
                    return BigFloat::zero(bits);
                }
                let arg = BigFloat::pi(bits)?.mul(&BigFloat::from_rational(&r, bits)?)?;
                match self {
                    TargetFunction::SinPi => arg.sin(),
                    _ => arg.cos(),
                }
            }
        }
    }
}

impl fmt::Display for TargetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TargetFunction::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(s.into()))
    }
}

/// `m_i = ∫_D f(y) y^(p_i) w(y) dy`, scaled by `sqrt(pi)^sqrtpi_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    pub family: Family,
    pub entries: Vec<PiLaurent>,
    pub sqrtpi_power: i32,
}

impl MomentVector {
    /// Moments of the monomial `x^degree` against the first `n` basis
    /// elements of `family`.
    pub fn monomial(family: Family, degree: u32, n: usize) -> Self {
        let entries = (1..=n)
            .map(|i| PiLaurent::from(monomial_moment(family, family.power(i) + degree).coefficient))
            .collect();
        Self {
            family,
            entries,
            sqrtpi_power: family.moment_grade(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxKind {
    KernelEstimate,
    Taylor,
}

/// `Σ_k c_k x^(p_k)` over the basis powers of `family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxPolynomial {
    pub family: Family,
    pub coefficients: Vec<PiLaurent>,
    pub kind: ApproxKind,
}

impl ApproxPolynomial {
    pub fn powers(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.coefficients.len()).map(|i| self.family.power(i))
    }

    /// Coefficients when none depends on `pi`.
    pub fn rational_coefficients(&self) -> Option<Vec<Rational>> {
        self.coefficients
            .iter()
            .map(PiLaurent::as_rational)
            .collect()
    }
}

/// `I_k = ∫_{-1}^{1} x^k sin(pi x) dx` for odd `k`, by parts:
/// `I_k = 2/pi - k(k-1)/pi² I_{k-2}`, `I_1 = 2/pi`.
fn sin_moment(k: u32) -> PiLaurent {
    let mut acc = PiLaurent::monomial(int(2), -1);
    let mut j = 3;
    while j <= k {
        let back = acc.shift(-2).scale(&int(-(j as i64) * (j as i64 - 1)));
        acc = &PiLaurent::monomial(int(2), -1) + &back;
        j += 2;
    }
    acc
}

/// `J_k = ∫_{-1}^{1} x^k cos(pi x) dx` for even `k`, by parts:
/// `J_k = -2k/pi² - k(k-1)/pi² J_{k-2}`, `J_0 = 0`.
fn cos_moment(k: u32) -> PiLaurent {
    let mut acc = PiLaurent::zero();
    let mut j = 2;
    while j <= k {
        let j64 = j as i64;
        let back = acc.shift(-2).scale(&int(-j64 * (j64 - 1)));
        acc = &PiLaurent::monomial(int(-2 * j64), -2) + &back;
        j += 2;
    }
    acc
}

pub fn function_moments(t: TargetFunction, family: Family, n: usize) -> Result<MomentVector> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if family != t.natural_family() {
        return Err(Error::ParityMismatch {
            target: t.name(),
            family,
        });
    }
    let entries = (1..=n)
        .map(|i| {
            let k = family.power(i);
            match t {
                // ∫ y^k e^{-2y} dy = k!/2^(k+1)
                TargetFunction::ExpNeg => {
                    PiLaurent::from(Rational::new(factorial(k), crate::exactscalar::pow2(k + 1)))
                }
                TargetFunction::SinPi => sin_moment(k),
                TargetFunction::CosPi => cos_moment(k),
            }
        })
        .collect();
    Ok(MomentVector {
        family,
        entries,
        sqrtpi_power: 0,
    })
}

/// Coefficients `c = B m` of the kernel estimate.
pub fn project(k: &KernelMatrix, m: &MomentVector) -> Result<ApproxPolynomial> {
    if k.family != m.family {
        return Err(Error::FamilyMismatch {
            expected: k.family,
            found: m.family,
        });
    }
    if k.n() != m.entries.len() {
        return Err(Error::DimensionMismatch {
            expected: k.n(),
            found: m.entries.len(),
        });
    }
    let grade = k.sqrtpi_power + m.sqrtpi_power;
    let fold = ScaledRational::new(int(1), grade).to_pilaurent()?;
    let coefficients = k
        .entries
        .rows()
        .map(|row| {
            let c: PiLaurent = row.iter().zip(&m.entries).map(|(b, mj)| mj.scale(b)).sum();
            &c * &fold
        })
        .collect();
    Ok(ApproxPolynomial {
        family: k.family,
        coefficients,
        kind: ApproxKind::KernelEstimate,
    })
}

pub fn kernel_estimate(t: TargetFunction, n: usize) -> Result<ApproxPolynomial> {
    let family = t.natural_family();
    project(&build_kernel(family, n)?, &function_moments(t, family, n)?)
}

pub fn taylor_polynomial(t: TargetFunction, family: Family, n: usize) -> Result<ApproxPolynomial> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if family != t.natural_family() {
        return Err(Error::FamilyMismatch {
            expected: t.natural_family(),
            found: family,
        });
    }
    Ok(ApproxPolynomial {
        family,
        coefficients: (0..n as u32).map(|k| t.taylor_coefficient(k)).collect(),
        kind: ApproxKind::Taylor,
    })
}

/// `∫_D (f - p)² w`, exactly:
/// `∫ f² w - 2 Σ p_k m_k + Σ p_k p_l g_kl`.
pub fn error_variance(t: TargetFunction, p: &ApproxPolynomial) -> Result<PiLaurent> {
    if p.family != t.natural_family() {
        return Err(Error::FamilyMismatch {
            expected: t.natural_family(),
            found: p.family,
        });
    }
    let n = p.coefficients.len();
    let m = function_moments(t, p.family, n)?;
    let g = gram_from_moments(p.family, n)?;
    let cross: PiLaurent = p
        .coefficients
        .iter()
        .zip(&m.entries)
        .map(|(c, mk)| c * mk)
        .sum();
    let mut quad = PiLaurent::zero();
    for (k, ck) in p.coefficients.iter().enumerate() {
        for (l, cl) in p.coefficients.iter().enumerate() {
            let gkl = &g.entries[(k, l)];
            if !gkl.is_zero() {
                quad.add_assign_ref(&(ck * cl).scale(gkl));
            }
        }
    }
    Ok(&(&t.squared_integral() - &cross.scale(&int(2))) + &quad)
}

/// Horner evaluation in `x^stride`, times `x^offset`.
pub fn eval_polynomial(p: &ApproxPolynomial, x: &BigFloat) -> Result<BigFloat> {
    let bits = x.precision_bits();
    let step = match p.family.stride() {
        1 => x.clone(),
        _ => x.mul(x)?,
    };
    let mut acc = BigFloat::zero(bits)?;
    for c in p.coefficients.iter().rev() {
        acc = acc.mul(&step)?.add(&eval_pilaurent(c, bits)?)?;
    }
    if p.family.offset() == 1 {
        acc = acc.mul(x)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarianceRow {
    pub size: usize,
    pub taylor: PiLaurent,
    pub estimate: PiLaurent,
}

pub fn variance_row(t: TargetFunction, size: usize) -> Result<VarianceRow> {
    let family = t.natural_family();
    let taylor = taylor_polynomial(t, family, t.comparator_terms(size))?;
    Ok(VarianceRow {
        size,
        taylor: error_variance(t, &taylor)?,
        estimate: error_variance(t, &kernel_estimate(t, size)?)?,
    })
}

pub fn variance_table(t: TargetFunction, max_size: usize) -> Result<Vec<VarianceRow>> {
    if max_size == 0 {
        return Err(Error::ZeroSize);
    }
    (1..=max_size).map(|n| variance_row(t, n)).collect()
}

#[derive(Clone, Debug)]
pub struct PlotRow {
    pub x: Rational,
    pub f: BigFloat,
    pub estimate: BigFloat,
    pub taylor: BigFloat,
}

/// Samples `f`, its size-`n` kernel estimate and its `n`-term Taylor
/// polynomial at `samples` equally spaced points of `[xmin, xmax]`.
pub fn plot_rows(
    t: TargetFunction,
    n: usize,
    xmin: &Rational,
    xmax: &Rational,
    samples: usize,
    precision_bits: usize,
) -> Result<Vec<PlotRow>> {
    if xmin >= xmax || samples < 2 {
        return Err(Error::BadRange);
    }
    let estimate = kernel_estimate(t, n)?;
    let taylor = taylor_polynomial(t, t.natural_family(), n)?;
    let step = (xmax - xmin) / int(samples as i64 - 1);
    (0..samples)
        .map(|i| {
            let x = if i + 1 == samples {
                xmax.clone()
            } else {
                xmin + &step * int(i as i64)
            };
            let xf = BigFloat::from_rational(&x, precision_bits)?;
            Ok(PlotRow {
                f: t.eval(&xf)?,
                estimate: eval_polynomial(&estimate, &xf)?,
                taylor: eval_polynomial(&taylor, &xf)?,
                x,
            })
        })
        .collect()
}
