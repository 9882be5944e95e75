//! Exact structural checks run by the `verify` command.

use alloc::vec::Vec;

use num_traits::One;

use crate::approx::{project, MomentVector};
use crate::error::Result;
use crate::exactscalar::{int, ratio, PiLaurent, Rational, ScaledRational};
use crate::family::{coeff_matrix, norm_vector, Family};
use crate::kernel::{build_kernel, KernelMatrix};
use crate::matrix::RatMatrix;
use crate::oracle::{gram_from_moments, invert_exact};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `B` equals the fraction-free inverse of `G`, and `G B = I`.
    OracleEquivalence,
    /// `B` is symmetric and positive definite.
    SymmetricPositiveDefinite,
    /// `A G Aᵀ = diag(λ)`.
    Orthogonality,
    /// `Π λ_i = det(A)² det(G)`.
    DeterminantIdentity,
    /// Projecting any basis monomial returns it unchanged.
    Reproducing,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::OracleEquivalence,
        Property::SymmetricPositiveDefinite,
        Property::Orthogonality,
        Property::DeterminantIdentity,
        Property::Reproducing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::OracleEquivalence => "oracle-equivalence",
            Property::SymmetricPositiveDefinite => "symmetric-positive-definite",
            Property::Orthogonality => "orthogonality",
            Property::DeterminantIdentity => "determinant-identity",
            Property::Reproducing => "reproducing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub family: Family,
    pub size: usize,
    pub property: Property,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Perturb `b_11` of every kernel before checking it. A negative
    /// control: every kernel-dependent property must then fail.
    pub corrupt_kernel: bool,
}

fn kernel(family: Family, n: usize, opts: VerifyOptions) -> Result<KernelMatrix> {
    let mut k = build_kernel(family, n)?;
    if opts.corrupt_kernel {
        k.entries[(0, 0)] += ratio(1, 1000);
    }
    Ok(k)
}

pub fn check(family: Family, n: usize, property: Property, opts: VerifyOptions) -> Result<bool> {
    Ok(match property {
        Property::OracleEquivalence => {
            let k = kernel(family, n, opts)?;
            let g = gram_from_moments(family, n)?;
            let inv = invert_exact(&g)?;
            inv.inverse == k.entries
                && inv.sqrtpi_power == k.sqrtpi_power
                && &g.entries * &k.entries == RatMatrix::identity(n)
        }
        Property::SymmetricPositiveDefinite => {
            kernel(family, n, opts)?.entries.is_positive_definite()
        }
        Property::Orthogonality => {
            let a = coeff_matrix(family, n)?;
            let g = gram_from_moments(family, n)?;
            let lambda = norm_vector(family, n)?;
            let product = &(&a.entries * &g.entries) * &a.entries.transpose();
            let diag: Vec<Rational> = lambda
                .entries
                .iter()
                .map(|l| l.coefficient.clone())
                .collect();
            product == RatMatrix::diagonal(&diag)
                && lambda
                    .entries
                    .iter()
                    .all(|l| l.sqrtpi_power == g.sqrtpi_power && l.is_positive())
        }
        Property::DeterminantIdentity => {
            let a = coeff_matrix(family, n)?;
            let g = invert_exact(&gram_from_moments(family, n)?)?;
            let lambda = norm_vector(family, n)?;
            let lhs = lambda
                .entries
                .iter()
                .fold(ScaledRational::rational(Rational::one()), |acc, l| &acc * l);
            let det_a = a.entries.triangular_determinant();
            let rhs = &ScaledRational::rational(&det_a * &det_a) * &g.determinant;
            lhs == rhs
        }
        Property::Reproducing => {
            let k = kernel(family, n, opts)?;
            let mut ok = true;
            for d in 0..n {
                let m = MomentVector::monomial(family, family.power(d + 1), n);
                let p = project(&k, &m)?;
                ok &= p.coefficients.iter().enumerate().all(|(i, c)| {
                    *c == if i == d {
                        PiLaurent::one()
                    } else {
                        PiLaurent::from(int(0))
                    }
                });
            }
            ok
        }
    })
}

/// Every property for every family and size `1..=max_size`.
pub fn run(max_size: usize, opts: VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for size in 1..=max_size {
            for property in Property::ALL {
                out.push(CheckOutcome {
                    family,
                    size,
                    property,
                    passed: check(family, size, property, opts)?,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let r = run(4, VerifyOptions::default()).unwrap();
        assert_eq!(r.len(), 5 * 4 * 5);
        assert!(r.iter().all(|c| c.passed));
    }

    #[test]
    fn corruption_is_caught() {
        let r = run(
            3,
            VerifyOptions {
                corrupt_kernel: true,
            },
        )
        .unwrap();
        for c in &r {
            match c.property {
                Property::OracleEquivalence | Property::Reproducing => {
                    assert!(!c.passed, "{c:?}")
                }
                Property::Orthogonality | Property::DeterminantIdentity => assert!(c.passed),
                Property::SymmetricPositiveDefinite => {}
            }
        }
    }
}
