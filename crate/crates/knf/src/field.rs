//! Finite-field tower arithmetic: F_p, F_q = F_p[y]/(g), F_q^n = F_q[x]/(h).
//!
//! A `Field` is a cheaply cloneable handle; elements carry their owner so
//! cross-field mixing is rejected rather than silently miscomputed. Towers
//! are capped at two extension levels above the prime field.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::num;
use crate::poly::Poly;

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

/// Raw coefficient data of a field element. Prime-field values are residues;
/// extension values are fixed-length coefficient vectors over the base.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Fe {
    P(u64),
    X(Vec<Fe>),
}

pub(crate) struct FieldRepr {
    id: u64,
    p: u64,
    base: Option<Field>,
    /// Monic irreducible modulus over the base, full length degree+1.
    modulus: Option<Vec<Fe>>,
    /// Degree over the base field (1 for a prime field).
    degree: usize,
    cardinality: u128,
    depth: u8,
}

/// Handle to a prime field or an extension field.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // Structural: two handles with the same characteristic and modulus
        // chain denote the same field even if constructed independently.
        self.0.id == other.0.id
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.base == other.0.base
                && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.cardinality())
    }
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !num::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldRepr {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            p,
            base: None,
            modulus: None,
            degree: 1,
            cardinality: p as u128,
            depth: 0,
        })))
    }

    /// The extension base[x]/(modulus). The residue class of x is the
    /// distinguished generator.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        let deg = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Reducible),
        };
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if base.0.depth >= 2 {
            return Err(Error::TowerTooDeep);
        }
        if deg > 1 && !modulus.is_irreducible() {
            return Err(Error::Reducible);
        }
        let cardinality = base
            .cardinality()
            .checked_pow(deg as u32)
            .ok_or_else(|| Error::BoundExceeded("field cardinality overflows u128".into()))?;
        Ok(Field(Arc::new(FieldRepr {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            p: base.characteristic(),
            base: Some(base.clone()),
            modulus: Some(modulus.coeff_fes().to_vec()),
            degree: deg,
            cardinality,
            depth: base.0.depth + 1,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn cardinality(&self) -> u128 {
        self.0.cardinality
    }

    /// Degree over the immediate base field (1 for prime fields).
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// Cardinality of the immediate base field (p for prime fields).
    pub fn base_cardinality(&self) -> u128 {
        match &self.0.base {
            Some(b) => b.cardinality(),
            None => self.0.p as u128,
        }
    }

    /// Total degree over the prime field.
    pub fn total_degree(&self) -> usize {
        match &self.0.base {
            Some(b) => b.total_degree() * self.0.degree,
            None => 1,
        }
    }

    /// Modulus as a polynomial over the base field (extensions only).
    pub fn modulus(&self) -> Option<Poly> {
        let base = self.0.base.as_ref()?;
        let m = self.0.modulus.as_ref()?;
        Some(Poly::from_fes(base.clone(), m.clone()))
    }

    pub fn zero(&self) -> Element {
        Element {
            field: self.clone(),
            v: self.fe_zero(),
        }
    }

    pub fn one(&self) -> Element {
        Element {
            field: self.clone(),
            v: self.fe_one(),
        }
    }

    /// Residue class of x for extensions; 1 for prime fields.
    pub fn generator(&self) -> Element {
        if self.is_prime_field() || self.0.degree == 1 {
            return self.one();
        }
        let base = self.0.base.as_ref().unwrap();
        let mut c = vec![base.fe_zero(); self.0.degree];
        c[1] = base.fe_one();
        Element {
            field: self.clone(),
            v: Fe::X(c),
        }
    }

    /// Element at position `i` in enumeration order: coefficient tuples read
    /// as mixed-radix digits, c_0 least significant.
    pub fn element_from_index(&self, i: u128) -> Result<Element> {
        if i >= self.cardinality() {
            return Err(Error::OutOfRange(i as usize, self.cardinality() as usize));
        }
        Ok(Element {
            field: self.clone(),
            v: self.fe_from_index(i),
        })
    }

    pub fn index_of(&self, a: &Element) -> Result<u128> {
        if &a.field != self {
            return Err(Error::FieldMismatch);
        }
        Ok(self.fe_index(&a.v))
    }

    /// All elements in enumeration order. `bound` caps the cardinality.
    pub fn elements(&self, bound: u128) -> Result<impl Iterator<Item = Element> + '_> {
        if self.cardinality() > bound {
            return Err(Error::BoundExceeded(format!(
                "cardinality {} exceeds census bound {}",
                self.cardinality(),
                bound
            )));
        }
        Ok((0..self.cardinality()).map(move |i| Element {
            field: self.clone(),
            v: self.fe_from_index(i),
        }))
    }

    /// Embed a base-field element into this extension.
    pub fn embed(&self, a: &Element) -> Result<Element> {
        if &a.field == self {
            return Ok(a.clone());
        }
        match &self.0.base {
            Some(b) if b == &a.field => {
                let mut c = vec![b.fe_zero(); self.0.degree];
                c[0] = a.v.clone();
                Ok(Element {
                    field: self.clone(),
                    v: Fe::X(c),
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn element_from_fes(&self, coeffs: Vec<Fe>) -> Result<Element> {
        match &self.0.base {
            None => {
                if coeffs.len() != 1 {
                    return Err(Error::Parse("prime-field element needs one coefficient".into()));
                }
                match &coeffs[0] {
                    Fe::P(v) => Ok(Element {
                        field: self.clone(),
                        v: Fe::P(v % self.0.p),
                    }),
                    _ => Err(Error::FieldMismatch),
                }
            }
            Some(_) => {
                if coeffs.len() > self.0.degree {
                    return Err(Error::Parse("too many coefficients for field degree".into()));
                }
                let base = self.0.base.as_ref().unwrap();
                let mut c = coeffs;
                c.resize(self.0.degree, base.fe_zero());
                Ok(Element {
                    field: self.clone(),
                    v: Fe::X(c),
                })
            }
        }
    }

    // ---- internal Fe arithmetic ----

    pub(crate) fn fe_zero(&self) -> Fe {
        match &self.0.base {
            None => Fe::P(0),
            Some(b) => Fe::X(vec![b.fe_zero(); self.0.degree]),
        }
    }

    pub(crate) fn fe_one(&self) -> Fe {
        match &self.0.base {
            None => Fe::P(1),
            Some(b) => {
                let mut c = vec![b.fe_zero(); self.0.degree];
                c[0] = b.fe_one();
                Fe::X(c)
            }
        }
    }

    pub(crate) fn fe_is_zero(&self, a: &Fe) -> bool {
        match (a, &self.0.base) {
            (Fe::P(v), None) => *v == 0,
            (Fe::X(c), Some(b)) => c.iter().all(|x| b.fe_is_zero(x)),
            _ => unreachable!("element shape does not match field"),
        }
    }

    pub(crate) fn fe_add(&self, a: &Fe, b: &Fe) -> Fe {
        match (&self.0.base, a, b) {
            (None, Fe::P(x), Fe::P(y)) => Fe::P((x + y) % self.0.p),
            (Some(base), Fe::X(xs), Fe::X(ys)) => {
                Fe::X(xs.iter().zip(ys).map(|(x, y)| base.fe_add(x, y)).collect())
            }
            _ => unreachable!("element shape does not match field"),
        }
    }

    pub(crate) fn fe_neg(&self, a: &Fe) -> Fe {
        match (&self.0.base, a) {
            (None, Fe::P(x)) => Fe::P((self.0.p - x) % self.0.p),
            (Some(base), Fe::X(xs)) => Fe::X(xs.iter().map(|x| base.fe_neg(x)).collect()),
            _ => unreachable!("element shape does not match field"),
        }
    }

    pub(crate) fn fe_sub(&self, a: &Fe, b: &Fe) -> Fe {
        self.fe_add(a, &self.fe_neg(b))
    }

    pub(crate) fn fe_mul(&self, a: &Fe, b: &Fe) -> Fe {
        match (&self.0.base, a, b) {
            (None, Fe::P(x), Fe::P(y)) => Fe::P(num::mul_mod(*x, *y, self.0.p)),
            (Some(base), Fe::X(xs), Fe::X(ys)) => {
                let d = self.0.degree;
                let modulus = self.0.modulus.as_ref().unwrap();
                let mut prod = vec![base.fe_zero(); 2 * d - 1];
                for (i, x) in xs.iter().enumerate() {
                    if base.fe_is_zero(x) {
                        continue;
                    }
                    for (j, y) in ys.iter().enumerate() {
                        let t = base.fe_mul(x, y);
                        prod[i + j] = base.fe_add(&prod[i + j], &t);
                    }
                }
                // Reduce mod the (monic) modulus.
                for i in (d..2 * d - 1).rev() {
                    let c = std::mem::replace(&mut prod[i], base.fe_zero());
                    if base.fe_is_zero(&c) {
                        continue;
                    }
                    for (j, m) in modulus.iter().enumerate().take(d) {
                        let t = base.fe_mul(&c, m);
                        prod[i - d + j] = base.fe_sub(&prod[i - d + j], &t);
                    }
                }
                prod.truncate(d);
                Fe::X(prod)
            }
            _ => unreachable!("element shape does not match field"),
        }
    }

    pub(crate) fn fe_pow(&self, a: &Fe, mut e: u128) -> Fe {
        let mut acc = self.fe_one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.fe_mul(&acc, &base);
            }
            base = self.fe_mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn fe_inv(&self, a: &Fe) -> Result<Fe> {
        if self.fe_is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.fe_pow(a, self.cardinality() - 2))
    }

    pub(crate) fn fe_from_index(&self, i: u128) -> Fe {
        match &self.0.base {
            None => Fe::P(i as u64),
            Some(b) => {
                let radix = b.cardinality();
                let mut i = i;
                let mut c = Vec::with_capacity(self.0.degree);
                for _ in 0..self.0.degree {
                    c.push(b.fe_from_index(i % radix));
                    i /= radix;
                }
                Fe::X(c)
            }
        }
    }

    pub(crate) fn fe_index(&self, a: &Fe) -> u128 {
        match (a, &self.0.base) {
            (Fe::P(v), None) => *v as u128,
            (Fe::X(c), Some(b)) => {
                let radix = b.cardinality();
                c.iter().rev().fold(0u128, |acc, x| acc * radix + b.fe_index(x))
            }
            _ => unreachable!("element shape does not match field"),
        }
    }
}

/// An element of a specific field, always in reduced form.
#[derive(Clone, Debug)]
pub struct Element {
    field: Field,
    v: Fe,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.v == other.v
    }
}
impl Eq for Element {}

impl Element {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn fe(&self) -> &Fe {
        &self.v
    }

    pub(crate) fn from_fe(field: Field, v: Fe) -> Element {
        Element { field, v }
    }

    pub fn is_zero(&self) -> bool {
        self.field.fe_is_zero(&self.v)
    }

    fn same_field(&self, other: &Element) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.same_field(other)?;
        Ok(Element {
            field: self.field.clone(),
            v: self.field.fe_add(&self.v, &other.v),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.same_field(other)?;
        Ok(Element {
            field: self.field.clone(),
            v: self.field.fe_sub(&self.v, &other.v),
        })
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.same_field(other)?;
        Ok(Element {
            field: self.field.clone(),
            v: self.field.fe_mul(&self.v, &other.v),
        })
    }

    pub fn neg(&self) -> Element {
        Element {
            field: self.field.clone(),
            v: self.field.fe_neg(&self.v),
        }
    }

    pub fn inv(&self) -> Result<Element> {
        Ok(Element {
            field: self.field.clone(),
            v: self.field.fe_inv(&self.v)?,
        })
    }

    pub fn pow(&self, e: u128) -> Element {
        Element {
            field: self.field.clone(),
            v: self.field.fe_pow(&self.v, e),
        }
    }

    /// sigma^i(a) = a^(q^i) where q is the base-field cardinality.
    /// The exponent i is reduced mod the extension degree.
    pub fn frobenius(&self, i: usize) -> Element {
        let n = self.field.degree();
        let q = self.field.base_cardinality();
        let i = if n > 0 { i % n } else { 0 };
        let mut acc = self.clone();
        for _ in 0..i {
            acc = acc.pow(q);
        }
        acc
    }

    /// Tr_{q^n | q}: sum of all conjugates, returned in the base field.
    pub fn trace(&self) -> Result<Element> {
        let base = match self.field.base() {
            Some(b) => b.clone(),
            None => return Ok(self.clone()),
        };
        let n = self.field.degree();
        let mut sum = self.field.zero();
        for i in 0..n {
            sum = sum.add(&self.frobenius(i))?;
        }
        // The trace is fixed by sigma, so it lies in the base field.
        match sum.v {
            Fe::X(c) => {
                debug_assert!(c[1..].iter().all(|x| base.fe_is_zero(x)));
                Ok(Element {
                    field: base,
                    v: c[0].clone(),
                })
            }
            v => Ok(Element { field: base, v }),
        }
    }

    /// Absolute trace down to F_p, returned as a residue in 0..p.
    pub fn absolute_trace(&self) -> u64 {
        let mut cur = self.clone();
        loop {
            match cur.trace() {
                Ok(t) if t.field.is_prime_field() => {
                    return match t.v {
                        Fe::P(v) => v,
                        _ => unreachable!(),
                    }
                }
                Ok(t) => cur = t,
                Err(_) => unreachable!(),
            }
        }
    }

    /// Least e >= 1 with a^e = 1, via factoring cardinality - 1.
    pub fn multiplicative_order(&self, factor_bound: u64) -> Result<u128> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let group = self.field.cardinality() - 1;
        if group > factor_bound as u128 {
            return Err(Error::BoundExceeded(format!(
                "group order {} exceeds factoring bound {}",
                group, factor_bound
            )));
        }
        let factors = num::factor(group as u64);
        Ok(self.order_with_factors(&factors))
    }

    /// Order given the factorization of cardinality - 1 (for reuse in censuses).
    pub fn order_with_factors(&self, factors: &[(u64, u32)]) -> u128 {
        let mut e = self.field.cardinality() - 1;
        for &(p, _) in factors {
            while e % p as u128 == 0 && self.pow(e / p as u128) == self.field.one() {
                e /= p as u128;
            }
        }
        e
    }

    pub fn is_primitive(&self, factor_bound: u64) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.multiplicative_order(factor_bound)? == self.field.cardinality() - 1)
    }

    /// True iff the element lies in no proper subfield F_{q^v}, v | n.
    pub fn is_proper(&self) -> bool {
        let n = self.field.degree();
        for l in num::prime_factors_usize(n) {
            if self.frobenius(n / l) == *self {
                return false;
            }
        }
        true
    }

    /// Monic minimal polynomial over the base field: product over the
    /// distinct conjugates.
    pub fn minimal_polynomial(&self) -> Result<Poly> {
        let base = match self.field.base() {
            Some(b) => b.clone(),
            None => {
                // x - a over the prime field itself.
                return Ok(Poly::from_elements(
                    self.field.clone(),
                    vec![self.neg(), self.field.one()],
                ));
            }
        };
        let mut conjugates = vec![self.clone()];
        loop {
            let next = conjugates.last().unwrap().frobenius(1);
            if next == *self {
                break;
            }
            conjugates.push(next);
        }
        let mut prod = Poly::one(self.field.clone());
        for c in &conjugates {
            let lin = Poly::from_elements(self.field.clone(), vec![c.neg(), self.field.one()]);
            prod = prod.mul(&lin);
        }
        prod.lower_to(&base)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::serialize::fe_text(&self.v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{find_irreducible, Policy};

    fn f4() -> (Field, Field) {
        let f2 = Field::prime(2).unwrap();
        let m = find_irreducible(&f2, 2, Policy::Lexicographic);
        let f4 = Field::extension(&f2, &m).unwrap();
        (f2, f4)
    }

    #[test]
    fn prime_field_handles() {
        assert_eq!(Field::prime(2).unwrap().cardinality(), 2);
        assert_eq!(Field::prime(7).unwrap().cardinality(), 7);
        assert!(matches!(Field::prime(4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn extension_construction() {
        let (f2, f4) = f4();
        assert_eq!(f4.cardinality(), 4);
        // x^2 + 1 = (x+1)^2 over F_2.
        let red = Poly::from_indices(&f2, &[1, 0, 1]).unwrap();
        assert!(matches!(Field::extension(&f2, &red), Err(Error::Reducible)));
        // 64-element field as a tower over F_4.
        let m3 = find_irreducible(&f4, 3, Policy::Lexicographic);
        let f64 = Field::extension(&f4, &m3).unwrap();
        assert_eq!(f64.cardinality(), 64);
        assert!(matches!(
            Field::extension(&f64, &find_irreducible(&f64, 2, Policy::Lexicographic)),
            Err(Error::TowerTooDeep)
        ));
    }

    #[test]
    fn f4_arithmetic() {
        let (_, f4) = f4();
        let w = f4.generator();
        // w^2 = w + 1 mod x^2+x+1
        let w2 = w.mul(&w).unwrap();
        let wp1 = w.add(&f4.one()).unwrap();
        assert_eq!(w2, wp1);
        // Lagrange: a^(q-1) = 1
        for i in 1..4 {
            let a = f4.element_from_index(i).unwrap();
            assert_eq!(a.pow(3), f4.one());
            assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f4.one());
        }
        assert_eq!(w.add(&f4.zero()).unwrap(), w);
        assert!(matches!(f4.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_mismatch_rejected() {
        let (f2, f4) = f4();
        assert!(matches!(
            f4.generator().add(&f2.one()),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn frobenius_and_trace() {
        let (_, f4) = f4();
        let w = f4.generator();
        assert_eq!(w.frobenius(1), w.mul(&w).unwrap());
        assert_eq!(w.frobenius(0), w);
        assert_eq!(w.frobenius(2), w); // sigma^n = id
        // Tr_{4|2}(w) = w + w^2 = 1
        let t = w.trace().unwrap();
        assert!(t.field().is_prime_field());
        assert_eq!(t, t.field().one());
        assert!(f4.zero().trace().unwrap().is_zero());
        // Tr(1) = 2*1 = 0 in characteristic 2
        assert!(f4.one().trace().unwrap().is_zero());
    }

    #[test]
    fn orders_and_primitivity() {
        let (_, f4) = f4();
        let w = f4.generator();
        assert_eq!(w.multiplicative_order(1 << 40).unwrap(), 3);
        assert_eq!(f4.one().multiplicative_order(1 << 40).unwrap(), 1);
        assert!(matches!(
            f4.zero().multiplicative_order(1 << 40),
            Err(Error::ZeroElement)
        ));
        assert!(w.is_primitive(1 << 40).unwrap());
        assert!(!f4.one().is_primitive(1 << 40).unwrap());
        assert!(!f4.zero().is_primitive(1 << 40).unwrap());
    }

    #[test]
    fn properness() {
        let (f2, f4) = f4();
        assert!(f4.generator().is_proper());
        assert!(!f4.one().is_proper());
        // An F_4-style element inside F_16/F_2 fixed by sigma^2 is not proper.
        let m4 = find_irreducible(&f2, 4, Policy::Lexicographic);
        let f16 = Field::extension(&f2, &m4).unwrap();
        let sub = f16
            .elements(1 << 10)
            .unwrap()
            .find(|a| !a.is_zero() && *a != f16.one() && a.frobenius(2) == *a)
            .unwrap();
        assert!(!sub.is_proper());
    }

    #[test]
    fn minimal_polynomials() {
        let (f2, f4) = f4();
        let w = f4.generator();
        let m = w.minimal_polynomial().unwrap();
        assert_eq!(m, Poly::from_indices(&f2, &[1, 1, 1]).unwrap());
        assert_eq!(
            f4.one().minimal_polynomial().unwrap(),
            Poly::from_indices(&f2, &[1, 1]).unwrap()
        );
        assert_eq!(
            f4.zero().minimal_polynomial().unwrap(),
            Poly::from_indices(&f2, &[0, 1]).unwrap()
        );
    }

    #[test]
    fn enumeration_order() {
        let (f2, f4) = f4();
        let elems: Vec<_> = f4.elements(1 << 10).unwrap().collect();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], f4.zero());
        assert_eq!(elems[1], f4.one());
        assert_eq!(elems[2], f4.generator());
        let f2_elems: Vec<_> = f2.elements(1 << 10).unwrap().collect();
        assert_eq!(f2_elems, vec![f2.zero(), f2.one()]);
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(f4.index_of(e).unwrap(), i as u128);
        }
        assert!(matches!(f4.elements(3), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        let (_, f4) = f4();
        let f9 = {
            let f3 = Field::prime(3).unwrap();
            let m = find_irreducible(&f3, 2, Policy::Lexicographic);
            Field::extension(&f3, &m).unwrap()
        };
        for f in [&f4, &f9] {
            let all: Vec<_> = f.elements(1 << 10).unwrap().collect();
            for a in &all {
                assert_eq!(a.pow(f.cardinality()), *a);
                for b in &all {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &all {
                        let l = a.mul(&b.add(c).unwrap()).unwrap();
                        let r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_homomorphism() {
        let (_, f4) = f4();
        let all: Vec<_> = f4.elements(1 << 10).unwrap().collect();
        for a in &all {
            for b in &all {
                let s = a.add(b).unwrap().frobenius(1);
                assert_eq!(s, a.frobenius(1).add(&b.frobenius(1)).unwrap());
                let p = a.mul(b).unwrap().frobenius(1);
                assert_eq!(p, a.frobenius(1).mul(&b.frobenius(1)).unwrap());
            }
            assert_eq!(a.frobenius(1).frobenius(1), a.frobenius(2));
        }
    }
}
