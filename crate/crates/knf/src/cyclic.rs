//! Factorization of x^n - 1 over F_q and the divisor lattice built from it.
//!
//! x^n - 1 = (phi_1 ... phi_r)^t with n = n1 * p^e, t = p^e, gcd(n1, p) = 1;
//! the phi_j are the distinct irreducible factors of x^(n1) - 1 (squarefree).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{monic_polys, Poly};

/// x^n - 1 as distinct irreducibles with a common multiplicity t = p^e.
#[derive(Clone, Debug)]
pub struct FactoredCyclic {
    pub field: Field,
    pub n: usize,
    pub n1: usize,
    pub e: u32,
    pub t: usize,
    /// Distinct monic irreducible factors of x^(n1) - 1, sorted by
    /// (degree, enumeration index) for reproducible indexing.
    pub factors: Vec<Poly>,
}

/// A degree-s divisor R_{s,i} of x^n - 1: factor exponents plus the
/// expanded polynomial.
#[derive(Clone, Debug)]
pub struct Divisor {
    pub exponents: Vec<usize>,
    pub poly: Poly,
}

/// All degree-s divisors of x^n - 1, in lexicographic exponent-tuple order.
#[derive(Clone, Debug)]
pub struct DivisorSet {
    pub degree: usize,
    pub members: Vec<Divisor>,
}

impl FactoredCyclic {
    /// Re-expand (prod phi_j)^t; used by tests and the NotADivisor guard.
    pub fn expand(&self) -> Poly {
        let mut prod = Poly::one(self.field.clone());
        for f in &self.factors {
            prod = prod.mul(f);
        }
        let mut acc = Poly::one(self.field.clone());
        for _ in 0..self.t {
            acc = acc.mul(&prod);
        }
        acc
    }

    pub fn xn_minus_1(&self) -> Poly {
        Poly::xn_minus_1(&self.field, self.n)
    }
}

/// Factor x^n - 1 over `base` per the n = n1 * p^e decomposition.
/// `seed` drives the Cantor-Zassenhaus splits; small equal-degree blocks
/// are split by deterministic exhaustive trial instead.
pub fn factor_xn_minus_1(base: &Field, n: usize, seed: u64) -> FactoredCyclic {
    assert!(n >= 1);
    let p = base.characteristic() as usize;
    let mut n1 = n;
    let mut e = 0u32;
    while n1 % p == 0 {
        n1 /= p;
        e += 1;
    }
    let t = n / n1;
    let f = Poly::xn_minus_1(base, n1);
    let mut factors = distinct_degree_split(&f, seed);
    factors.sort_by_key(|f| {
        let d = f.degree().unwrap();
        (d, poly_index(f))
    });
    FactoredCyclic {
        field: base.clone(),
        n,
        n1,
        e,
        t,
        factors,
    }
}

/// Enumeration index of a monic polynomial (its position in `monic_polys`).
fn poly_index(f: &Poly) -> u128 {
    let field = f.field();
    let q = field.cardinality();
    let d = f.degree().unwrap();
    let mut idx = 0u128;
    for i in (0..d).rev() {
        idx = idx * q + field.index_of(&f.coeff(i)).unwrap();
    }
    idx
}

/// Distinct-degree then equal-degree factorization of a squarefree monic f.
fn distinct_degree_split(f: &Poly, seed: u64) -> Vec<Poly> {
    let field = f.field().clone();
    let q = field.cardinality();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut rem = f.make_monic();
    let x = Poly::x(field.clone());
    let mut h = x.clone();
    let mut d = 0usize;
    while let Some(deg) = rem.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push(rem.clone());
            break;
        }
        h = h.powmod(q, &rem).unwrap();
        let g = h.sub(&x).gcd(&rem);
        if g.degree() != Some(0) {
            equal_degree_split(&g, d, &mut rng, &mut out);
            rem = rem.divmod(&g).unwrap().0;
            h = h.rem(&rem).unwrap();
        }
    }
    out
}

/// Split a product of degree-d irreducibles. Small blocks go through
/// deterministic trial division over enumerated irreducibles; larger
/// blocks use seeded Cantor-Zassenhaus.
fn equal_degree_split(g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let field = g.field().clone();
    let deg = g.degree().unwrap();
    if deg == d {
        out.push(g.make_monic());
        return;
    }
    let q = field.cardinality();
    if q.checked_pow(d as u32).map(|c| c <= 1 << 16).unwrap_or(false) {
        // Exhaustive, seed-independent.
        let mut rem = g.make_monic();
        for cand in monic_polys(&field, d) {
            if rem.degree() == Some(0) {
                break;
            }
            let (quot, r) = rem.divmod(&cand).unwrap();
            if r.is_zero() {
                out.push(cand);
                rem = quot;
            }
        }
        debug_assert_eq!(rem.degree(), Some(0));
        return;
    }
    // Cantor-Zassenhaus split.
    let split = loop {
        let r = random_poly_below(&field, deg, rng);
        if r.degree().is_none() {
            continue;
        }
        let candidate = if field.characteristic() == 2 {
            // Absolute trace map sum r^(2^i), i < k*d where q = 2^k.
            let k = field.total_degree();
            let mut acc = Poly::zero(field.clone());
            let mut cur = r.rem(g).unwrap();
            for _ in 0..k * d {
                acc = acc.add(&cur);
                cur = cur.mul(&cur).rem(g).unwrap();
            }
            acc
        } else {
            let exp = (q.pow(d as u32) - 1) / 2;
            let one = Poly::one(field.clone());
            r.powmod(exp, g).unwrap().sub(&one)
        };
        let s = candidate.gcd(g);
        if let Some(sd) = s.degree() {
            if sd > 0 && sd < deg {
                break s;
            }
        }
    };
    let rest = g.divmod(&split).unwrap().0;
    equal_degree_split(&split, d, rng, out);
    equal_degree_split(&rest, d, rng, out);
}

fn random_poly_below(field: &Field, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = field.cardinality();
    let mut c = Vec::with_capacity(deg);
    for _ in 0..deg {
        c.push(field.element_from_index(rng.gen_range(0..q)).unwrap().fe().clone());
    }
    Poly::from_fes(field.clone(), c)
}

/// All degree-s divisors of x^n - 1, as exponent tuples over `fc.factors`
/// in lexicographic order (last exponent varies fastest).
pub fn divisors_of_degree(fc: &FactoredCyclic, s: usize) -> DivisorSet {
    let degs: Vec<usize> = fc.factors.iter().map(|f| f.degree().unwrap()).collect();
    let mut members = Vec::new();
    let mut exps = vec![0usize; fc.factors.len()];
    fn rec(
        fc: &FactoredCyclic,
        degs: &[usize],
        exps: &mut Vec<usize>,
        pos: usize,
        left: usize,
        members: &mut Vec<Divisor>,
    ) {
        if pos == degs.len() {
            if left == 0 {
                let mut poly = Poly::one(fc.field.clone());
                for (f, &e) in fc.factors.iter().zip(exps.iter()) {
                    for _ in 0..e {
                        poly = poly.mul(f);
                    }
                }
                members.push(Divisor {
                    exponents: exps.clone(),
                    poly,
                });
            }
            return;
        }
        let max = (left / degs[pos]).min(fc.t);
        for e in 0..=max {
            exps[pos] = e;
            rec(fc, degs, exps, pos + 1, left - e * degs[pos], members);
        }
        exps[pos] = 0;
    }
    rec(fc, &degs, &mut exps, 0, s, &mut members);
    DivisorSet { degree: s, members }
}

/// phi_{s,i} = (x^n - 1) / R_{s,i}.
pub fn cofactor(fc: &FactoredCyclic, r: &Poly) -> Result<Poly> {
    let (q, rem) = fc.xn_minus_1().divmod(r)?;
    if !rem.is_zero() {
        return Err(Error::NotADivisor);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn factor_f3_n2() {
        // x^2 - 1 = (x+1)(x+2) over F_3, t = 1
        let fc = factor_xn_minus_1(&field(3), 2, 0);
        assert_eq!((fc.n1, fc.t, fc.e), (2, 1, 0));
        assert_eq!(fc.factors.len(), 2);
        assert_eq!(fc.expand(), fc.xn_minus_1());
    }

    #[test]
    fn factor_f2_n4() {
        // x^4 - 1 = (x+1)^4 over F_2
        let fc = factor_xn_minus_1(&field(2), 4, 0);
        assert_eq!((fc.n1, fc.t, fc.e), (1, 4, 2));
        assert_eq!(fc.factors.len(), 1);
        assert_eq!(fc.factors[0].degree(), Some(1));
        assert_eq!(fc.expand(), fc.xn_minus_1());
    }

    #[test]
    fn factor_f2_n6() {
        // x^6 - 1 = ((x+1)(x^2+x+1))^2 over F_2
        let fc = factor_xn_minus_1(&field(2), 6, 0);
        assert_eq!((fc.n1, fc.t), (3, 2));
        let degs: Vec<_> = fc.factors.iter().map(|f| f.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 2]);
        assert_eq!(fc.expand(), fc.xn_minus_1());
    }

    #[test]
    fn factor_results_seed_independent_small() {
        for (p, n) in [(2u64, 6usize), (3, 4), (5, 4), (7, 6)] {
            let a = factor_xn_minus_1(&field(p), n, 0);
            let b = factor_xn_minus_1(&field(p), n, 12345);
            let fa: Vec<_> = a.factors.iter().map(|f| f.coeff_fes().to_vec()).collect();
            let fb: Vec<_> = b.factors.iter().map(|f| f.coeff_fes().to_vec()).collect();
            assert_eq!(fa, fb);
            assert!(a.factors.iter().all(|f| f.is_irreducible()));
            assert_eq!(a.expand(), a.xn_minus_1());
        }
    }

    #[test]
    fn divisor_sets_f2_n6() {
        let fc = factor_xn_minus_1(&field(2), 6, 0);
        let d1 = divisors_of_degree(&fc, 1);
        assert_eq!(d1.members.len(), 1);
        assert_eq!(d1.members[0].poly.degree(), Some(1));
        let d2 = divisors_of_degree(&fc, 2);
        assert_eq!(d2.members.len(), 2);
        let d0 = divisors_of_degree(&fc, 0);
        assert_eq!(d0.members.len(), 1);
        assert_eq!(d0.members[0].poly, Poly::one(fc.field.clone()));
        // total divisor count = (t+1)^r
        let total: usize = (0..=fc.n).map(|s| divisors_of_degree(&fc, s).members.len()).sum();
        assert_eq!(total, (fc.t + 1).pow(fc.factors.len() as u32));
    }

    #[test]
    fn divisors_match_bruteforce_filter() {
        for (p, n) in [(2u64, 6usize), (3, 4), (5, 2)] {
            let f = field(p);
            let fc = factor_xn_minus_1(&f, n, 0);
            let target = fc.xn_minus_1();
            for s in 0..=n.min(4) {
                let fast: Vec<_> = divisors_of_degree(&fc, s)
                    .members
                    .iter()
                    .map(|m| m.poly.coeff_fes().to_vec())
                    .collect();
                let mut brute: Vec<_> = monic_polys(&f, s)
                    .filter(|cand| target.rem(cand).unwrap().is_zero())
                    .map(|cand| cand.coeff_fes().to_vec())
                    .collect();
                let mut fast_sorted = fast.clone();
                fast_sorted.sort();
                brute.sort();
                assert_eq!(fast_sorted, brute, "p={p} n={n} s={s}");
            }
        }
    }

    #[test]
    fn cofactors() {
        let f3 = field(3);
        let fc = factor_xn_minus_1(&f3, 2, 0);
        // (x^2-1)/(x-1) = x+1
        let r = Poly::from_indices(&f3, &[2, 1]).unwrap(); // x - 1
        assert_eq!(cofactor(&fc, &r).unwrap(), Poly::from_indices(&f3, &[1, 1]).unwrap());
        let one = Poly::one(f3.clone());
        assert_eq!(cofactor(&fc, &one).unwrap(), fc.xn_minus_1());
        let bad = Poly::from_indices(&f3, &[1, 2, 1]).unwrap();
        assert!(matches!(cofactor(&fc, &bad), Err(Error::NotADivisor)));
        // (x^6-1)/(x+1) over F_2 has degree 5
        let f2 = field(2);
        let fc6 = factor_xn_minus_1(&f2, 6, 0);
        let xp1 = Poly::from_indices(&f2, &[1, 1]).unwrap();
        let co = cofactor(&fc6, &xp1).unwrap();
        assert_eq!(co.degree(), Some(5));
        assert_eq!(co.mul(&xp1), fc6.xn_minus_1());
    }

    #[test]
    fn larger_cz_path() {
        // F_9: forces q^d > 2^16 never here, but exercise an extension base.
        let f3 = field(3);
        let m = crate::poly::find_irreducible(&f3, 2, crate::poly::Policy::Lexicographic);
        let f9 = Field::extension(&f3, &m).unwrap();
        let fc = factor_xn_minus_1(&f9, 8, 0);
        assert!(fc.factors.iter().all(|f| f.is_irreducible()));
        assert_eq!(fc.expand(), fc.xn_minus_1());
    }
}
