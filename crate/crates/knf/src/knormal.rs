//! The three k-normality tests and their cross-validation.
//!
//! Method 1 (gcd): deg gcd(x^n - 1, sum_i a^(q^i) x^(n-1-i)) computed over
//! F_{q^n}. Method 2 (sigma-order): minimal annihilator found by scanning
//! the divisor lattice of x^n - 1 in increasing degree. Method 3
//! (generalized Schwartz): scan cofactors phi_{s,i} from degree n-1 down.
//! The methods are deliberately independent; `classify` asserts agreement.

use crate::cyclic::{cofactor, divisors_of_degree, factor_xn_minus_1, DivisorSet, FactoredCyclic};
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::num;
use crate::poly::{linearized_apply, Poly};

/// Per-element classification report.
#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub element: Element,
    /// 0..n-1 for nonzero elements; n flags the zero element.
    pub k: usize,
    pub is_zero: bool,
    pub sigma_order: Poly,
    pub proper: bool,
    pub primitive: bool,
    pub trace: Element,
}

/// Result of the Schwartz scan: k plus the annihilating witness divisor.
#[derive(Clone, Debug)]
pub struct SchwartzResult {
    pub k: usize,
    pub witness: Poly,
    /// All annihilating witnesses found at degree k (expected to be one).
    pub all_witnesses: Vec<Poly>,
}

/// Diagnosed N_k-polynomial test outcome.
#[derive(Clone, Debug)]
pub struct KPolyVerdict {
    pub is_k_normal: bool,
    pub reducible: bool,
}

/// Precomputed machinery for classifying elements of one extension field.
pub struct Classifier {
    ext: Field,
    n: usize,
    fc: FactoredCyclic,
    divisors: Vec<DivisorSet>,
    cofactors: Vec<Vec<Poly>>,
    xn_lifted: Poly,
    order_factors: Vec<(u64, u32)>,
}

impl Classifier {
    pub fn new(ext: &Field, seed: u64, factor_bound: u64) -> Result<Classifier> {
        let base = ext.base().ok_or(Error::FieldMismatch)?.clone();
        let n = ext.degree();
        let fc = factor_xn_minus_1(&base, n, seed);
        let divisors: Vec<DivisorSet> = (0..=n).map(|s| divisors_of_degree(&fc, s)).collect();
        let cofactors = divisors
            .iter()
            .map(|ds| {
                ds.members
                    .iter()
                    .map(|m| cofactor(&fc, &m.poly).expect("lattice member divides x^n - 1"))
                    .collect()
            })
            .collect();
        let group = ext.cardinality() - 1;
        if group > factor_bound as u128 {
            return Err(Error::BoundExceeded(format!(
                "group order {group} exceeds factoring bound {factor_bound}"
            )));
        }
        let order_factors = num::factor(group as u64);
        Ok(Classifier {
            ext: ext.clone(),
            n,
            fc,
            divisors,
            cofactors,
            xn_lifted: Poly::xn_minus_1(&base, n).lift_to(ext)?,
            order_factors,
        })
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn factored_cyclic(&self) -> &FactoredCyclic {
        &self.fc
    }

    fn check_owner(&self, a: &Element) -> Result<()> {
        if a.field() == &self.ext {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Definition 1.1 test: degree of gcd(x^n - 1, conjugate polynomial).
    /// Returns n for the zero element.
    pub fn k_via_gcd(&self, a: &Element) -> Result<usize> {
        self.check_owner(a)?;
        if a.is_zero() {
            return Ok(self.n);
        }
        let g = self.xn_lifted.gcd(&conjugate_generating_poly(a)?);
        Ok(g.degree().unwrap_or(0))
    }

    /// Minimal monic annihilator of a under the Frobenius action, found by
    /// scanning divisors of x^n - 1 in increasing degree.
    pub fn sigma_order(&self, a: &Element) -> Result<Poly> {
        self.check_owner(a)?;
        for ds in &self.divisors {
            for m in &ds.members {
                if linearized_apply(&m.poly, a)?.is_zero() {
                    return Ok(m.poly.clone());
                }
            }
        }
        unreachable!("x^n - 1 annihilates every element")
    }

    /// Generalized Schwartz test: scan s = n-1 down to 1; the first degree s
    /// whose cofactor phi_{s,j} annihilates a gives k = s.
    pub fn k_via_schwartz(&self, a: &Element) -> Result<SchwartzResult> {
        self.check_owner(a)?;
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        for s in (1..self.n).rev() {
            let mut witnesses = Vec::new();
            for (m, co) in self.divisors[s].members.iter().zip(&self.cofactors[s]) {
                if linearized_apply(co, a)?.is_zero() {
                    witnesses.push(m.poly.clone());
                }
            }
            if let Some(first) = witnesses.first().cloned() {
                return Ok(SchwartzResult {
                    k: s,
                    witness: first,
                    all_witnesses: witnesses,
                });
            }
        }
        Ok(SchwartzResult {
            k: 0,
            witness: Poly::one(self.fc.field.clone()),
            all_witnesses: vec![Poly::one(self.fc.field.clone())],
        })
    }

    pub fn is_k_normal(&self, a: &Element, k: usize) -> Result<bool> {
        if k >= self.n {
            return Err(Error::OutOfRange(k, self.n));
        }
        Ok(self.k_via_gcd(a)? == k)
    }

    /// Full record; the three methods are cross-checked and a disagreement
    /// is surfaced as an error, never swallowed.
    pub fn classify(&self, a: &Element) -> Result<ClassificationRecord> {
        self.check_owner(a)?;
        if a.is_zero() {
            return Ok(ClassificationRecord {
                element: a.clone(),
                k: self.n,
                is_zero: true,
                sigma_order: Poly::one(self.fc.field.clone()),
                proper: false,
                primitive: false,
                trace: a.trace()?,
            });
        }
        let k_gcd = self.k_via_gcd(a)?;
        let ord = self.sigma_order(a)?;
        let k_order = self.n - ord.degree().unwrap_or(0);
        let k_schwartz = self.k_via_schwartz(a)?.k;
        if k_gcd != k_order || k_gcd != k_schwartz {
            return Err(Error::MethodDisagreement {
                k_gcd,
                k_order,
                k_schwartz,
            });
        }
        let primitive = a.order_with_factors(&self.order_factors) == self.ext.cardinality() - 1;
        Ok(ClassificationRecord {
            element: a.clone(),
            k: k_gcd,
            is_zero: false,
            sigma_order: ord,
            proper: a.is_proper(),
            primitive,
            trace: a.trace()?,
        })
    }
}

/// Def 1.1's companion polynomial: sum_i a^(q^i) x^(n-1-i) over F_{q^n};
/// the highest power carries a itself.
pub fn conjugate_generating_poly(a: &Element) -> Result<Poly> {
    let ext = a.field().clone();
    if ext.base().is_none() {
        return Err(Error::FieldMismatch);
    }
    let n = ext.degree();
    let mut coeffs = vec![ext.zero(); n];
    for i in 0..n {
        coeffs[n - 1 - i] = a.frobenius(i);
    }
    Ok(Poly::from_elements(ext, coeffs))
}

/// Convenience one-shot wrappers over a throwaway `Classifier`.
pub fn k_via_gcd(a: &Element, seed: u64) -> Result<usize> {
    Classifier::new(a.field(), seed, u64::MAX)?.k_via_gcd(a)
}

pub fn sigma_order(a: &Element, seed: u64) -> Result<Poly> {
    Classifier::new(a.field(), seed, u64::MAX)?.sigma_order(a)
}

/// Tests whether a monic irreducible F of degree n over F_q is an
/// N_k-polynomial, using the residue of x as the single tested root
/// (conjugate roots share their sigma-order).
pub fn is_k_normal_polynomial(f: &Poly, k: usize, seed: u64) -> Result<KPolyVerdict> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap_or(0);
    if n < 1 || !f.is_irreducible() {
        return Ok(KPolyVerdict {
            is_k_normal: false,
            reducible: true,
        });
    }
    let ext = Field::extension(f.field(), f)?;
    let root = ext.generator();
    let cls = Classifier::new(&ext, seed, u64::MAX)?;
    Ok(KPolyVerdict {
        is_k_normal: cls.is_k_normal(&root, k)?,
        reducible: false,
    })
}
