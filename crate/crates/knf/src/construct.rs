//! Recursive N1-polynomial chains over F_{2^m}: seed search, the
//! F_{u+1}(x) = x^(n*2^(u-1)) F_u(x + delta^2/x) transform, chain
//! verification, and the root-chaining identity check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::knormal::{is_k_normal_polynomial, Classifier};
use crate::parallel;
use crate::poly::Poly;
use crate::serialize::poly_text;
use crate::theorems::{ClaimComparison, Verdict, VerdictReport};
use crate::Config;

/// The five hypothesis flags of the chain theorem for a (F1, delta) pair.
#[derive(Clone, Copy, Debug)]
pub struct SeedFlags {
    pub n_even: bool,
    pub irreducible: bool,
    pub n1_polynomial: bool,
    pub trace_c1: bool,
    pub trace_cn1: bool,
}

impl SeedFlags {
    pub fn all(&self) -> bool {
        self.n_even && self.irreducible && self.n1_polynomial && self.trace_c1 && self.trace_cn1
    }
}

/// A candidate (F1, delta) pair with its evaluated hypothesis flags.
#[derive(Clone, Debug)]
pub struct SeedCandidate {
    pub base: Field,
    pub f1: Poly,
    pub delta: Element,
    pub n: usize,
    pub flags: SeedFlags,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MemberStatus {
    Checked,
    SkippedAboveCap,
}

#[derive(Clone, Debug)]
pub struct ChainMember {
    pub poly: Poly,
    pub degree: usize,
    pub irreducible: MemberStatus,
    pub n1: MemberStatus,
}

/// A verified transform chain F_1 .. F_{U+1}.
#[derive(Clone, Debug)]
pub struct ChainRecord {
    pub seed: SeedCandidate,
    pub members: Vec<ChainMember>,
}

/// Outcome of a seed search, with a diagnostic when empty.
#[derive(Clone, Debug)]
pub struct SeedSearch {
    pub seeds: Vec<SeedCandidate>,
    /// Number of distinct N1-polynomials of degree n found.
    pub n1_polynomials: usize,
    pub diagnostic: Option<String>,
}

fn require_char2(base: &Field) -> Result<()> {
    if base.characteristic() != 2 {
        return Err(Error::WrongCharacteristic);
    }
    Ok(())
}

/// Evaluate all five hypothesis flags for (F1, delta).
pub fn seed_conditions_check(
    base: &Field,
    f1: &Poly,
    delta: &Element,
    cfg: &Config,
) -> Result<SeedCandidate> {
    require_char2(base)?;
    if f1.field() != base || delta.field() != base {
        return Err(Error::FieldMismatch);
    }
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let n = f1.degree().ok_or(Error::ZeroElement)?;
    let n_even = n % 2 == 0;
    let irreducible = f1.is_monic() && f1.is_irreducible();
    let n1_polynomial = irreducible
        && n >= 2
        && is_k_normal_polynomial(f1, 1, cfg.seed)?.is_k_normal;
    let c0 = f1.coeff(0);
    let (trace_c1, trace_cn1) = if c0.is_zero() {
        (false, false)
    } else {
        let t1 = f1.coeff(1).mul(delta)?.mul(&c0.inv()?)?;
        let t2 = f1.coeff(n - 1).mul(&delta.inv()?)?;
        (t1.absolute_trace() == 1, t2.absolute_trace() == 1)
    };
    Ok(SeedCandidate {
        base: base.clone(),
        f1: f1.clone(),
        delta: delta.clone(),
        n,
        flags: SeedFlags {
            n_even,
            irreducible,
            n1_polynomial,
            trace_c1,
            trace_cn1,
        },
    })
}

/// F_{u+1}(x) = x^N F_u(x + delta^2 x^-1) = sum_i c_i x^(N-i) (x^2+delta^2)^i
/// where N = deg F_u. Output degree is 2N.
pub fn transform_step(f_u: &Poly, delta: &Element) -> Result<Poly> {
    let base = f_u.field().clone();
    require_char2(&base)?;
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let n = f_u.degree().ok_or(Error::ZeroElement)?;
    let delta_sq = delta.mul(delta)?;
    // x^2 + delta^2
    let kernel = Poly::from_elements(
        base.clone(),
        vec![delta_sq, base.zero(), base.one()],
    );
    let mut acc = Poly::zero(base.clone());
    let mut kernel_pow = Poly::one(base.clone());
    for i in 0..=n {
        let c = f_u.coeff(i);
        if !c.is_zero() {
            // c_i * x^(N-i) * (x^2 + delta^2)^i
            let mut term = kernel_pow.scale(c.fe());
            let mut shifted = vec![base.zero().fe().clone(); n - i];
            shifted.extend_from_slice(term.coeff_fes());
            term = Poly::from_fes(base.clone(), shifted);
            acc = acc.add(&term);
        }
        kernel_pow = kernel_pow.mul(&kernel);
    }
    Ok(acc)
}

/// Independent expansion of the same transform through Laurent-polynomial
/// substitution: expand F_u(x + delta^2 x^-1) term by term with binomial
/// products, then clear denominators by the x^N shift.
pub fn transform_step_rational(f_u: &Poly, delta: &Element) -> Result<Poly> {
    let base = f_u.field().clone();
    require_char2(&base)?;
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let n = f_u.degree().ok_or(Error::ZeroElement)?;
    let delta_sq = delta.mul(delta)?;
    // Laurent coefficients indexed by exponent + N.
    let width = 2 * n + 1;
    let mut acc = vec![base.zero(); width];
    // arg = x + delta^2 x^-1 as a Laurent vector; powers built iteratively.
    let mut arg_pow = vec![base.zero(); width];
    arg_pow[n] = base.one(); // x^0
    for i in 0..=n {
        let c = f_u.coeff(i);
        if !c.is_zero() {
            for (slot, v) in acc.iter_mut().zip(arg_pow.iter()) {
                *slot = slot.add(&v.mul(&c)?)?;
            }
        }
        // multiply arg_pow by (x + delta^2 x^-1)
        let mut next = vec![base.zero(); width];
        for (e, v) in arg_pow.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if e + 1 < width {
                next[e + 1] = next[e + 1].add(v)?;
            }
            if e >= 1 {
                next[e - 1] = next[e - 1].add(&v.mul(&delta_sq)?)?;
            }
        }
        arg_pow = next;
    }
    Ok(Poly::from_elements(base, acc))
}

/// Iterate the transform from a valid seed, verifying each member.
/// Irreducibility is checked at every degree; the N1 check is skipped above
/// `cfg.verify_cap`.
pub fn build_chain(seed: &SeedCandidate, max_u: usize, cfg: &Config) -> Result<ChainRecord> {
    if !seed.flags.all() {
        return Err(Error::InvalidSeed(format!(
            "flags: n_even={}, irreducible={}, n1={}, trace_c1={}, trace_cn1={}",
            seed.flags.n_even,
            seed.flags.irreducible,
            seed.flags.n1_polynomial,
            seed.flags.trace_c1,
            seed.flags.trace_cn1
        )));
    }
    let mut members = Vec::with_capacity(max_u + 1);
    let mut current = seed.f1.clone();
    for u in 0..=max_u {
        let degree = current.degree().unwrap();
        if !current.is_irreducible() {
            return Err(Error::VerificationFailed(format!(
                "member u={} of degree {} is reducible: {}",
                u + 1,
                degree,
                poly_text(&current)
            )));
        }
        let n1 = if degree <= cfg.verify_cap {
            if !is_k_normal_polynomial(&current, 1, cfg.seed)?.is_k_normal {
                return Err(Error::VerificationFailed(format!(
                    "member u={} of degree {} is not an N1-polynomial: {}",
                    u + 1,
                    degree,
                    poly_text(&current)
                )));
            }
            MemberStatus::Checked
        } else {
            MemberStatus::SkippedAboveCap
        };
        members.push(ChainMember {
            poly: current.clone(),
            degree,
            irreducible: MemberStatus::Checked,
            n1,
        });
        if u < max_u {
            current = transform_step(&current, &seed.delta)?;
        }
    }
    Ok(ChainRecord {
        seed: seed.clone(),
        members,
    })
}

/// Search F_{2^m} for valid chain seeds of degree n: enumerate proper
/// 1-normal elements of F_{q^n}, take their minimal polynomials (the
/// N1-polynomials of degree n), and test every delta in F_q^* against the
/// trace conditions. Deterministic output order.
pub fn find_seed(base: &Field, n: usize, cfg: &Config) -> Result<SeedSearch> {
    require_char2(base)?;
    if n % 2 != 0 {
        return Err(Error::OddDegree);
    }
    let ext = crate::extend(base, n, cfg.seed)?;
    if ext.cardinality() > cfg.census_bound {
        return Err(Error::BoundExceeded(format!(
            "cardinality {} exceeds census bound {}",
            ext.cardinality(),
            cfg.census_bound
        )));
    }
    let cls = Classifier::new(&ext, cfg.seed, cfg.factor_bound)?;

    // Minimal polynomials of proper 1-normal elements, keyed by coefficient
    // indices. The parallel merge is a set union, so schedule-independent.
    type PolyKey = Vec<u128>;
    let ext_ref = &ext;
    let cls_ref = &cls;
    let polys: BTreeMap<PolyKey, Poly> = parallel::fold_range(
        ext.cardinality(),
        BTreeMap::new,
        |mut acc: BTreeMap<PolyKey, Poly>, i| {
            let a = ext_ref.element_from_index(i).unwrap();
            if !a.is_zero()
                && a.is_proper()
                && cls_ref.k_via_gcd(&a).unwrap() == 1
            {
                let m = a.minimal_polynomial().unwrap();
                let key: PolyKey = (0..=n)
                    .map(|j| m.field().index_of(&m.coeff(j)).unwrap())
                    .collect();
                acc.insert(key, m);
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );

    let q = base.cardinality();
    let mut seeds = Vec::new();
    let mut any_cn1_trace_possible = false;
    for m in polys.values() {
        for d in 1..q {
            let delta = base.element_from_index(d)?;
            let cand = seed_conditions_check(base, m, &delta, cfg)?;
            if cand.flags.trace_cn1 {
                any_cn1_trace_possible = true;
            }
            if cand.flags.all() {
                seeds.push(cand);
            }
        }
    }
    let diagnostic = if seeds.is_empty() {
        Some(if polys.is_empty() {
            format!("no proper 1-normal elements of degree {n} over this base")
        } else if !any_cn1_trace_possible {
            "trace condition Tr(c_{n-1}/delta) = 1 is unsatisfiable: every N1-polynomial here has a trace-obstructed c_{n-1}".to_string()
        } else {
            "no (F1, delta) pair satisfies both trace conditions".to_string()
        })
    } else {
        None
    };
    Ok(SeedSearch {
        seeds,
        n1_polynomials: polys.len(),
        diagnostic,
    })
}

/// Check the root-chaining identity across consecutive chain members: a root
/// beta of F_{u+1} must satisfy F_u(beta + delta^2 beta^-1) = 0.
pub fn root_chain_check(chain: &ChainRecord, depth: usize, _cfg: &Config) -> Result<VerdictReport> {
    let base = &chain.seed.base;
    let delta_sq = chain.seed.delta.mul(&chain.seed.delta)?;
    let pairs = depth.min(chain.members.len().saturating_sub(1));
    for y in 0..pairs {
        let f_next = &chain.members[y + 1].poly;
        let ext = Field::extension(base, f_next)?;
        let beta = ext.generator();
        let gamma = beta.add(&ext.embed(&delta_sq)?.mul(&beta.inv()?)?)?;
        let value = chain.members[y].poly.eval(&gamma)?;
        if !value.is_zero() {
            return Ok(VerdictReport {
                claim: "root-chain".into(),
                params: format!("degrees {} -> {}", chain.members[y].degree, f_next.degree().unwrap()),
                verdict: Verdict::Fail,
                witness: Some(poly_text(f_next)),
                note: None,
                comparison: ClaimComparison::NotApplicable,
            });
        }
    }
    Ok(VerdictReport {
        claim: "root-chain".into(),
        params: format!("{pairs} consecutive pairs"),
        verdict: if pairs == 0 { Verdict::Vacuous } else { Verdict::Pass },
        witness: None,
        note: None,
        comparison: ClaimComparison::NotApplicable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> Config {
        Config::default()
    }

    fn f4() -> Field {
        crate::tower_base(2, 2, 0).unwrap()
    }

    #[test]
    fn transform_example_over_f4() {
        // x^2 + x + w, delta = 1 -> x^4 + x^3 + w x^2 + x + 1
        let f4 = f4();
        let w = f4.generator();
        let f = Poly::from_elements(f4.clone(), vec![w.clone(), f4.one(), f4.one()]);
        let out = transform_step(&f, &f4.one()).unwrap();
        let expected = Poly::from_elements(
            f4.clone(),
            vec![f4.one(), f4.one(), w, f4.one(), f4.one()],
        );
        assert_eq!(out, expected);
        assert_eq!(transform_step_rational(&f, &f4.one()).unwrap(), expected);
    }

    #[test]
    fn transform_degree_doubles_and_rejects_zero_delta() {
        let f4 = f4();
        let f = crate::poly::find_irreducible(&f4, 3, crate::poly::Policy::Lexicographic);
        let out = transform_step(&f, &f4.generator()).unwrap();
        assert_eq!(out.degree(), Some(6));
        assert!(matches!(
            transform_step(&f, &f4.zero()),
            Err(Error::ZeroDelta)
        ));
        let f2 = Field::prime(3).unwrap();
        let g = Poly::x(f2.clone());
        assert!(matches!(
            transform_step(&g, &f2.one()),
            Err(Error::WrongCharacteristic)
        ));
    }

    #[test]
    fn two_expansion_routes_agree_randomized() {
        let f2 = Field::prime(2).unwrap();
        let f4 = f4();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for field in [&f2, &f4] {
            let q = field.cardinality();
            for _ in 0..25 {
                let deg = rng.gen_range(1..8usize);
                let mut idx: Vec<u128> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
                idx.push(1);
                let f = Poly::from_indices(field, &idx).unwrap();
                let delta = field.element_from_index(rng.gen_range(1..q)).unwrap();
                assert_eq!(
                    transform_step(&f, &delta).unwrap(),
                    transform_step_rational(&f, &delta).unwrap()
                );
            }
        }
    }

    #[test]
    fn transform_constant_term_nonzero() {
        // x never divides a transform of an irreducible with c_0 != 0.
        let f4 = f4();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let deg = rng.gen_range(1..6usize);
            let mut idx: Vec<u128> = (0..deg).map(|_| rng.gen_range(0..4u128)).collect();
            if idx[0] == 0 {
                idx[0] = 1;
            }
            idx.push(1);
            let f = Poly::from_indices(&f4, &idx).unwrap();
            let delta = f4.element_from_index(rng.gen_range(1..4)).unwrap();
            let out = transform_step(&f, &delta).unwrap();
            assert!(!out.coeff(0).is_zero());
        }
    }

    #[test]
    fn seed_conditions_examples() {
        let f2 = Field::prime(2).unwrap();
        // x^4+x^3+x^2+x+1 is irreducible but 0-normal, so the N1 flag fails.
        let f = Poly::from_indices(&f2, &[1, 1, 1, 1, 1]).unwrap();
        let cand = seed_conditions_check(&f2, &f, &f2.one(), &cfg()).unwrap();
        assert!(cand.flags.irreducible);
        assert!(!cand.flags.n1_polynomial);
        // c_{n-1} = 0 kills the second trace condition.
        let g = Poly::from_indices(&f2, &[1, 1, 0, 0, 1]).unwrap(); // x^4+x+1
        let cand = seed_conditions_check(&f2, &g, &f2.one(), &cfg()).unwrap();
        assert!(!cand.flags.trace_cn1);
        assert!(matches!(
            seed_conditions_check(&f2, &g, &f2.zero(), &cfg()),
            Err(Error::ZeroDelta)
        ));
    }

    #[test]
    fn find_seed_over_f2_is_empty_with_diagnostic() {
        let f2 = Field::prime(2).unwrap();
        for n in [2usize, 4, 6] {
            let s = find_seed(&f2, n, &cfg()).unwrap();
            assert!(s.seeds.is_empty(), "n={n}");
            assert!(s.diagnostic.is_some());
        }
        assert!(matches!(find_seed(&f2, 3, &cfg()), Err(Error::OddDegree)));
    }

    #[test]
    fn proposition_irreducibility_preservation() {
        // Trace conditions alone (no N1 requirement) preserve irreducibility
        // through the transform.
        let f4 = f4();
        let mut tested = 0;
        'outer: for f in crate::poly::monic_polys(&f4, 4) {
            if !f.is_irreducible() || f.coeff(0).is_zero() {
                continue;
            }
            for d in 1..4u128 {
                let delta = f4.element_from_index(d).unwrap();
                let cand = seed_conditions_check(&f4, &f, &delta, &cfg()).unwrap();
                if cand.flags.trace_c1 && cand.flags.trace_cn1 {
                    let mut cur = f.clone();
                    for _ in 0..2 {
                        cur = transform_step(&cur, &delta).unwrap();
                        assert!(cur.is_irreducible());
                    }
                    tested += 1;
                    if tested >= 3 {
                        break 'outer;
                    }
                }
            }
        }
        assert!(tested > 0, "no trace-condition pairs found at all");
    }

    #[test]
    fn invalid_seed_rejected_by_build_chain() {
        let f2 = Field::prime(2).unwrap();
        let g = Poly::from_indices(&f2, &[1, 1, 0, 0, 1]).unwrap();
        let cand = seed_conditions_check(&f2, &g, &f2.one(), &cfg()).unwrap();
        assert!(matches!(
            build_chain(&cand, 1, &cfg()),
            Err(Error::InvalidSeed(_))
        ));
    }

    #[test]
    fn root_chain_detects_tampering() {
        let f4 = f4();
        let search = find_seed(&f4, 6, &cfg()).unwrap();
        if search.seeds.is_empty() {
            // Covered by the acceptance sweep; nothing to tamper with here.
            return;
        }
        let mut chain = build_chain(&search.seeds[0], 1, &cfg()).unwrap();
        let ok = root_chain_check(&chain, 1, &cfg()).unwrap();
        assert_eq!(ok.verdict, Verdict::Pass);
        // Flip one coefficient of F_2 and keep it irreducible if possible;
        // the chained-root identity must now fail.
        let f2_poly = chain.members[1].poly.clone();
        let mut coeffs = f2_poly.coeff_fes().to_vec();
        let bumped = Element::from_fe(f4.clone(), coeffs[1].clone())
            .add(&f4.one())
            .unwrap();
        coeffs[1] = bumped.fe().clone();
        let tampered = Poly::from_fes(f4.clone(), coeffs);
        if tampered.is_irreducible() && tampered != chain.members[1].poly {
            chain.members[1].poly = tampered;
            let bad = root_chain_check(&chain, 1, &cfg()).unwrap();
            assert_eq!(bad.verdict, Verdict::Fail);
        }
    }
}
