//! Dense univariate polynomials over a `Field`: Euclidean arithmetic,
//! Rabin irreducibility, deterministic irreducible search, and
//! linearized (q-polynomial) application.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Element, Fe, Field};
use crate::num;

/// Dense polynomial; coefficients low-to-high with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: Field,
    c: Vec<Fe>,
}

#[derive(Clone, Copy, Debug)]
pub enum Policy {
    Lexicographic,
    SeededRandom(u64),
}

impl Poly {
    pub fn from_fes(field: Field, mut c: Vec<Fe>) -> Poly {
        while let Some(last) = c.last() {
            if field.fe_is_zero(last) {
                c.pop();
            } else {
                break;
            }
        }
        Poly { field, c }
    }

    pub fn from_elements(field: Field, elems: Vec<Element>) -> Poly {
        let c = elems.into_iter().map(|e| e.fe().clone()).collect();
        Poly::from_fes(field, c)
    }

    /// Coefficients given as element enumeration indices, low-to-high.
    pub fn from_indices(field: &Field, idx: &[u128]) -> Result<Poly> {
        let mut c = Vec::with_capacity(idx.len());
        for &i in idx {
            c.push(field.element_from_index(i)?.fe().clone());
        }
        Ok(Poly::from_fes(field.clone(), c))
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, c: vec![] }
    }

    pub fn one(field: Field) -> Poly {
        let one = field.fe_one();
        Poly { field, c: vec![one] }
    }

    pub fn x(field: Field) -> Poly {
        let (z, o) = (field.fe_zero(), field.fe_one());
        Poly { field, c: vec![z, o] }
    }

    /// x^n - 1 over `field`.
    pub fn xn_minus_1(field: &Field, n: usize) -> Poly {
        let mut c = vec![field.fe_zero(); n + 1];
        c[0] = field.fe_neg(&field.fe_one());
        c[n] = field.fe_one();
        Poly::from_fes(field.clone(), c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff_fes(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Element {
        let fe = self.c.get(i).cloned().unwrap_or_else(|| self.field.fe_zero());
        Element::from_fe(self.field.clone(), fe)
    }

    pub fn is_monic(&self) -> bool {
        match self.c.last() {
            Some(l) => *l == self.field.fe_one(),
            None => false,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let z = self.field.fe_zero();
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).unwrap_or(&z);
            let b = other.c.get(i).unwrap_or(&z);
            c.push(self.field.fe_add(a, b));
        }
        Poly::from_fes(self.field.clone(), c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let z = self.field.fe_zero();
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).unwrap_or(&z);
            let b = other.c.get(i).unwrap_or(&z);
            c.push(self.field.fe_sub(a, b));
        }
        Poly::from_fes(self.field.clone(), c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let mut c = vec![self.field.fe_zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if self.field.fe_is_zero(a) {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                let t = self.field.fe_mul(a, b);
                c[i + j] = self.field.fe_add(&c[i + j], &t);
            }
        }
        Poly::from_fes(self.field.clone(), c)
    }

    pub fn scale(&self, s: &Fe) -> Poly {
        let c = self.c.iter().map(|a| self.field.fe_mul(a, s)).collect();
        Poly::from_fes(self.field.clone(), c)
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.fe_inv(divisor.c.last().unwrap())?;
        let mut rem = self.c.clone();
        if rem.len() < d + 1 {
            return Ok((Poly::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![self.field.fe_zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = self.field.fe_mul(&rem[i], &lead_inv);
            if !self.field.fe_is_zero(&q) {
                for j in 0..=d {
                    let t = self.field.fe_mul(&q, &divisor.c[j]);
                    rem[i - d + j] = self.field.fe_sub(&rem[i - d + j], &t);
                }
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        Ok((
            Poly::from_fes(self.field.clone(), quot),
            Poly::from_fes(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn make_monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.fe_inv(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd; gcd(f, 0) = monic(f).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self^e mod m by square-and-multiply.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(self.field.clone()).rem(m)?;
        let mut base = self.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Evaluate at an element of the coefficient field or of a direct
    /// extension of it.
    pub fn eval(&self, at: &Element) -> Result<Element> {
        let target = at.field().clone();
        let lift = if &target == &self.field {
            None
        } else if target.base() == Some(&self.field) {
            Some(())
        } else {
            return Err(Error::FieldMismatch);
        };
        let mut acc = target.zero();
        for fe in self.c.iter().rev() {
            let coeff = Element::from_fe(self.field.clone(), fe.clone());
            let coeff = match lift {
                None => coeff,
                Some(()) => target.embed(&coeff)?,
            };
            acc = acc.mul(at)?.add(&coeff)?;
        }
        Ok(acc)
    }

    /// Lift coefficients into a direct extension of the coefficient field.
    pub fn lift_to(&self, ext: &Field) -> Result<Poly> {
        if ext == &self.field {
            return Ok(self.clone());
        }
        if ext.base() != Some(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let mut c = Vec::with_capacity(self.c.len());
        for fe in &self.c {
            let e = Element::from_fe(self.field.clone(), fe.clone());
            c.push(ext.embed(&e)?.fe().clone());
        }
        Ok(Poly::from_fes(ext.clone(), c))
    }

    /// Project a polynomial whose coefficients all lie in the base field
    /// down to that base field.
    pub fn lower_to(&self, base: &Field) -> Result<Poly> {
        if base == &self.field {
            return Ok(self.clone());
        }
        if self.field.base() != Some(base) {
            return Err(Error::FieldMismatch);
        }
        let mut c = Vec::with_capacity(self.c.len());
        for fe in &self.c {
            match fe {
                Fe::X(v) => {
                    if v[1..].iter().any(|x| !base.fe_is_zero(x)) {
                        return Err(Error::FieldMismatch);
                    }
                    c.push(v[0].clone());
                }
                _ => return Err(Error::FieldMismatch),
            }
        }
        Ok(Poly::from_fes(base.clone(), c))
    }

    /// Rabin's test: f of degree d over F_q is irreducible iff
    /// x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            Some(0) | None => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let f = self.make_monic();
        let q = self.field.cardinality();
        let x = Poly::x(self.field.clone());
        // frob[i] = x^(q^i) mod f
        let mut frob = x.clone();
        let checkpoints: Vec<usize> = num::prime_factors_usize(d).iter().map(|l| d / l).collect();
        for i in 1..=d {
            frob = frob.powmod(q, &f).expect("modulus nonzero");
            if checkpoints.contains(&i) {
                let g = frob.sub(&x).gcd(&f);
                if g.degree() != Some(0) {
                    return false;
                }
            }
        }
        frob == x
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::serialize::poly_text(self))
    }
}

/// Monic degree-d polynomials over `field` in enumeration order: the d low
/// coefficients read as mixed-radix digits, c_0 least significant.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.cardinality();
    let count = q.checked_pow(d as u32).expect("enumeration range overflow");
    (0..count).map(move |mut i| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(field.fe_from_index(i % q));
            i /= q;
        }
        c.push(field.fe_one());
        Poly::from_fes(field.clone(), c)
    })
}

/// Monic irreducible of degree d over `base`. The lexicographic policy is
/// deterministic; the seeded policy samples random monic candidates.
pub fn find_irreducible(base: &Field, d: usize, policy: Policy) -> Poly {
    assert!(d >= 1);
    match policy {
        Policy::Lexicographic => monic_polys(base, d)
            .find(|f| f.is_irreducible())
            .expect("irreducibles exist for every degree"),
        Policy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = base.cardinality();
            loop {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(base.fe_from_index(rng.gen_range(0..q)));
                }
                c.push(base.fe_one());
                let f = Poly::from_fes(base.clone(), c);
                if f.is_irreducible() {
                    return f;
                }
            }
        }
    }
}

/// g(sigma) applied to a: sum_v g_v * a^(q^v), the action of F_q[x] on
/// F_{q^n} through the Frobenius.
pub fn linearized_apply(g: &Poly, a: &Element) -> Result<Element> {
    let ext = a.field().clone();
    if &ext != g.field() && ext.base() != Some(g.field()) {
        return Err(Error::FieldMismatch);
    }
    let mut acc = ext.zero();
    for v in 0..g.coeff_fes().len() {
        let gv = g.coeff(v);
        if gv.is_zero() {
            continue;
        }
        let gv = ext.embed(&gv)?;
        acc = acc.add(&gv.mul(&a.frobenius(v))?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn f4() -> Field {
        let b = f2();
        let m = find_irreducible(&b, 2, Policy::Lexicographic);
        Field::extension(&b, &m).unwrap()
    }

    #[test]
    fn gcd_contracts() {
        let f = f2();
        let a = Poly::from_indices(&f, &[1, 0, 1]).unwrap(); // x^2+1
        let b = Poly::from_indices(&f, &[1, 1]).unwrap(); // x+1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.gcd(&Poly::zero(f.clone())), a.make_monic());
        let x3 = Poly::from_indices(&f, &[0, 0, 0, 1]).unwrap();
        let x = Poly::x(f.clone());
        let (q, r) = x3.divmod(&x).unwrap();
        assert_eq!(q, Poly::from_indices(&f, &[0, 0, 1]).unwrap());
        assert!(r.is_zero());
        assert!(matches!(x.divmod(&Poly::zero(f)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn irreducibility() {
        let f = f2();
        assert!(Poly::from_indices(&f, &[1, 1, 1]).unwrap().is_irreducible());
        assert!(!Poly::from_indices(&f, &[1, 0, 1]).unwrap().is_irreducible());
        assert!(Poly::from_indices(&f, &[0, 1]).unwrap().is_irreducible());
        assert!(Poly::from_indices(&f, &[1, 1]).unwrap().is_irreducible());
        // degree 8 sanity: x^8+x^4+x^3+x+1 is the AES modulus, irreducible
        let aes = Poly::from_indices(&f, &[1, 1, 0, 1, 1, 0, 0, 0, 1]).unwrap();
        assert!(aes.is_irreducible());
        // over an extension field too
        let f4 = f4();
        let m = find_irreducible(&f4, 3, Policy::Lexicographic);
        assert!(m.is_irreducible());
        assert_eq!(m.degree(), Some(3));
    }

    #[test]
    fn lexicographic_irreducibles() {
        let f = f2();
        assert_eq!(
            find_irreducible(&f, 1, Policy::Lexicographic),
            Poly::x(f.clone())
        );
        assert_eq!(
            find_irreducible(&f, 2, Policy::Lexicographic),
            Poly::from_indices(&f, &[1, 1, 1]).unwrap()
        );
        // x^4 + x + 1 is the lexicographically first irreducible quartic
        assert_eq!(
            find_irreducible(&f, 4, Policy::Lexicographic),
            Poly::from_indices(&f, &[1, 1, 0, 0, 1]).unwrap()
        );
        let r = find_irreducible(&f, 4, Policy::SeededRandom(7));
        assert!(r.is_irreducible());
        assert_eq!(r, find_irreducible(&f, 4, Policy::SeededRandom(7)));
    }

    #[test]
    fn eval_in_extension() {
        let f2 = f2();
        let f4 = f4();
        let w = f4.generator();
        // x^2+x+1 vanishes at w
        let m = Poly::from_indices(&f2, &[1, 1, 1]).unwrap();
        assert!(m.eval(&w).unwrap().is_zero());
        assert_eq!(m.eval(&f2.zero()).unwrap(), f2.one());
    }

    #[test]
    fn linearized_application() {
        let f2 = f2();
        let f4 = f4();
        let w = f4.generator();
        // (x+1)(sigma) w = w^2 + w = 1
        let g = Poly::from_indices(&f2, &[1, 1]).unwrap();
        assert_eq!(linearized_apply(&g, &w).unwrap(), f4.one());
        // constant c acts as scaling
        let c = Poly::one(f2.clone());
        assert_eq!(linearized_apply(&c, &w).unwrap(), w);
        // x^n - 1 annihilates everything
        let ann = Poly::xn_minus_1(&f2, 2);
        for a in f4.elements(16).unwrap() {
            assert!(linearized_apply(&ann, &a).unwrap().is_zero());
        }
    }

    #[test]
    fn linearized_composition_matches_product() {
        // L_{gh} = L_g ∘ L_h when g, h are reduced mod x^n - 1.
        let f2 = f2();
        let f4 = f4();
        let modn = Poly::xn_minus_1(&f2, 2);
        let polys: Vec<Poly> = (0..8u128)
            .map(|i| {
                Poly::from_indices(&f2, &[i & 1, (i >> 1) & 1, (i >> 2) & 1]).unwrap()
            })
            .collect();
        for g in &polys {
            for h in &polys {
                let gh = g.mul(h).rem(&modn).unwrap();
                for a in f4.elements(16).unwrap() {
                    let direct = linearized_apply(&gh, &a).unwrap();
                    let composed =
                        linearized_apply(g, &linearized_apply(h, &a).unwrap()).unwrap();
                    assert_eq!(direct, composed);
                    let sum = linearized_apply(&g.add(h), &a).unwrap();
                    let parts = linearized_apply(g, &a)
                        .unwrap()
                        .add(&linearized_apply(h, &a).unwrap())
                        .unwrap();
                    assert_eq!(sum, parts);
                }
            }
        }
    }

    #[test]
    fn minimal_polynomial_annihilates() {
        let f4 = f4();
        for a in f4.elements(16).unwrap() {
            let m = a.minimal_polynomial().unwrap();
            assert!(m.is_monic());
            assert!(m.eval(&a).unwrap().is_zero());
            let d = m.degree().unwrap();
            if !a.is_zero() {
                assert_eq!(d == f4.degree(), a.is_proper());
            }
        }
    }
}
