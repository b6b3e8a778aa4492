//! The half-trace coefficient ring R_N = Z[1/2][v]/(χ_N(v)) for odd N, its
//! fibres mod odd primes, and its field-valued points.
//!
//! The residue class of v is (ζ_N + ζ_N^{-1})/2. In characteristic p = N the
//! relation degenerates to (v - 1)^((p-1)/2): as ζ tends to 1, the half-trace
//! tends to 1, which pins the nilpotent coordinate to z = v - 1 rather than
//! v + 1.

use std::collections::BTreeSet;

use crate::cyclotomic::{half_trace_chi, Dyadic, DyadicPoly};
use crate::error::{Error, Result};
use crate::field::{primitive_root_of_unity, Field, FieldElem};
use crate::poly::Poly;

/// Residue mod χ_N: a dyadic coefficient vector of length exactly φ(N)/2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfTraceElem {
    n: u64,
    c: Vec<Dyadic>,
}

impl HalfTraceElem {
    /// Reduce an arbitrary dyadic polynomial into R_N.
    pub fn new(n: u64, poly: &DyadicPoly) -> Result<HalfTraceElem> {
        let chi = half_trace_chi(n)?;
        let d = chi.deg().unwrap();
        // division by the monic chi, keeping the remainder
        let mut rem: Vec<Dyadic> = poly.coeffs().to_vec();
        while rem.len() > d {
            let k = rem.len() - 1;
            let coef = rem[k];
            if !coef.is_zero() {
                for (i, m) in chi.coeffs().iter().enumerate() {
                    rem[k - d + i] = rem[k - d + i].sub(&coef.mul(m));
                }
            }
            rem.pop();
        }
        rem.resize(d, Dyadic::zero());
        Ok(HalfTraceElem { n, c: rem })
    }

    pub fn zero(n: u64) -> Result<HalfTraceElem> {
        HalfTraceElem::new(n, &DyadicPoly::new(vec![]))
    }

    pub fn one(n: u64) -> Result<HalfTraceElem> {
        HalfTraceElem::new(n, &DyadicPoly::new(vec![Dyadic::one()]))
    }

    /// The residue class of v itself, the half-trace (ζ + ζ^{-1})/2.
    pub fn v(n: u64) -> Result<HalfTraceElem> {
        HalfTraceElem::new(n, &DyadicPoly::new(vec![Dyadic::zero(), Dyadic::one()]))
    }

    pub fn modulus_n(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[Dyadic] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Dyadic::is_zero)
    }

    pub fn add(&self, rhs: &HalfTraceElem) -> Result<HalfTraceElem> {
        if self.n != rhs.n {
            return Err(Error::MixedModulus);
        }
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a.add(b)).collect();
        Ok(HalfTraceElem { n: self.n, c })
    }

    pub fn sub(&self, rhs: &HalfTraceElem) -> Result<HalfTraceElem> {
        if self.n != rhs.n {
            return Err(Error::MixedModulus);
        }
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a.sub(b)).collect();
        Ok(HalfTraceElem { n: self.n, c })
    }

    pub fn mul(&self, rhs: &HalfTraceElem) -> Result<HalfTraceElem> {
        if self.n != rhs.n {
            return Err(Error::MixedModulus);
        }
        let a = DyadicPoly::new(self.c.clone());
        let b = DyadicPoly::new(rhs.c.clone());
        HalfTraceElem::new(self.n, &a.mul(&b))
    }
}

/// Shape of R_N ⊗ F_p over the algebraic closure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fibre {
    /// p divides N with N composite: no fibre (N is inverted in R_N).
    Empty,
    Shape {
        components: u64,
        multiplicity: u64,
        reduced: bool,
    },
}

/// Fibre of Spec R_N mod an odd prime: empty when p | N composite, a single
/// non-reduced component of multiplicity (p-1)/2 when N = p, and φ(N)/2
/// reduced components when p ∤ N.
pub fn fibre_mod_p(n: u64, p: u64) -> Result<Fibre> {
    if p == 2 {
        return Err(Error::EvenPrime(p));
    }
    let field = crate::field::make_field(p, 1)?;
    if n % p == 0 && n != p {
        return Ok(Fibre::Empty);
    }
    let chi = half_trace_chi(n)?.to_poly(&field);
    if n == p {
        // chi_p mod p = (v - 1)^((p-1)/2)
        let vm1 = Poly::from_ints(&field, &[-1, 1]);
        let mut pw = Poly::one(&field);
        for _ in 0..(p - 1) / 2 {
            pw = pw.mul(&vm1);
        }
        assert_eq!(chi, pw, "wild fibre factorization");
        let mult = (p - 1) / 2;
        return Ok(Fibre::Shape { components: 1, multiplicity: mult, reduced: mult == 1 });
    }
    // tame: chi_N mod p is separable, so the geometric fibre is reduced with
    // phi(N)/2 points of A^1
    let g = chi.gcd(&chi.derivative());
    assert_eq!(g.deg(), Some(0), "tame separability");
    Ok(Fibre::Shape { components: chi.deg().unwrap() as u64, multiplicity: 1, reduced: true })
}

/// All roots of χ_N in F, each equal to (ζ + ζ^{-1})/2 for a primitive N-th
/// root ζ. Errors when F has no primitive N-th root of unity. Sorted by
/// canonical element order.
pub fn embed_half_trace(n: u64, field: &Field) -> Result<Vec<FieldElem>> {
    let zeta0 = primitive_root_of_unity(field, n)?;
    let inv2 = field.from_int(2).inv().expect("odd characteristic");
    let mut out = BTreeSet::new();
    let mut zeta = zeta0.clone();
    for k in 1..n {
        if gcd(k, n) == 1 {
            let half = zeta.add(&zeta.inv()?).mul(&inv2);
            out.insert(half);
        }
        zeta = zeta.mul(&zeta0);
    }
    let out: Vec<FieldElem> = out.into_iter().collect();
    let chi = half_trace_chi(n)?.to_poly(field);
    for h in &out {
        assert!(chi.eval(h).is_zero(), "half-trace is a root of chi");
    }
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn relation_collapses_v() {
        // chi_3 = v + 1/2, so v = -1/2 in R_3
        let v = HalfTraceElem::v(3).unwrap();
        let half = HalfTraceElem::new(
            3,
            &DyadicPoly::new(vec![Dyadic::new(1, 1)]),
        )
        .unwrap();
        assert!(v.add(&half).unwrap().is_zero());
    }

    #[test]
    fn v_squared_in_r5() {
        let v = HalfTraceElem::v(5).unwrap();
        let v2 = v.mul(&v).unwrap();
        assert_eq!(v2.coeffs(), &[Dyadic::new(1, 2), Dyadic::new(-1, 1)]);
    }

    #[test]
    fn additive_identity_and_mixed_modulus() {
        let v = HalfTraceElem::v(5).unwrap();
        let z = HalfTraceElem::zero(5).unwrap();
        assert_eq!(z.add(&v).unwrap(), v);
        let w = HalfTraceElem::v(3).unwrap();
        assert_eq!(v.add(&w), Err(Error::MixedModulus));
    }

    #[test]
    fn ring_laws_in_r15() {
        // associativity and distributivity on a few elements of the
        // degree-4 ring R_15
        let v = HalfTraceElem::v(15).unwrap();
        let one = HalfTraceElem::one(15).unwrap();
        let a = v.mul(&v).unwrap().add(&one).unwrap();
        let b = v.add(&v).unwrap();
        let c = v.mul(&a).unwrap();
        assert_eq!(a.coeffs().len(), 4);
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fibres() {
        assert_eq!(
            fibre_mod_p(5, 5).unwrap(),
            Fibre::Shape { components: 1, multiplicity: 2, reduced: false }
        );
        assert_eq!(fibre_mod_p(15, 3).unwrap(), Fibre::Empty);
        assert_eq!(fibre_mod_p(15, 5).unwrap(), Fibre::Empty);
        assert_eq!(
            fibre_mod_p(5, 7).unwrap(),
            Fibre::Shape { components: 2, multiplicity: 1, reduced: true }
        );
        assert_eq!(
            fibre_mod_p(3, 3).unwrap(),
            Fibre::Shape { components: 1, multiplicity: 1, reduced: true }
        );
        assert_eq!(fibre_mod_p(5, 2), Err(Error::EvenPrime(2)));
    }

    #[test]
    fn embed_in_f11() {
        let f11 = make_field(11, 1).unwrap();
        let roots = embed_half_trace(5, &f11).unwrap();
        let idx: Vec<u64> = roots.iter().map(FieldElem::index).collect();
        assert_eq!(idx, vec![7, 9]);
    }

    #[test]
    fn embed_omega_case() {
        // N = 3: single half-trace (w + w^2)/2 = -1/2
        let f7 = make_field(7, 1).unwrap();
        let roots = embed_half_trace(3, &f7).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0], f7.from_int(3)); // -1/2 = -4 = 3 mod 7
    }

    #[test]
    fn embed_requires_roots_of_unity() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(embed_half_trace(5, &f7), Err(Error::NoSuchRoot(5)));
    }

    #[test]
    fn embed_counts_phi_over_two() {
        for (n, p, s) in [(5u64, 11u64, 1usize), (7, 29, 1), (9, 19, 1), (5, 3, 4), (15, 31, 1)] {
            let f = make_field(p, s).unwrap();
            let roots = embed_half_trace(n, &f).unwrap();
            let phi = (1..=n).filter(|k| super::gcd(*k, n) == 1).count() as usize;
            assert_eq!(roots.len(), phi / 2, "n = {n}, q = {}", f.q());
        }
    }
}
