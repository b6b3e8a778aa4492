//! Cyclotomic polynomials and their half-trace companions over exact
//! coefficients: integers for Φ_n and ψ_n, dyadic rationals for χ_n.
//!
//! For odd n the key identities are
//! `X^d ψ_n(X + 1/X) = Φ_n(X)` and `χ_n(v) = 2^{-d} ψ_n(2v)` with
//! d = φ(n)/2; ψ_n is the minimal polynomial of ζ_n + ζ_n^{-1} and χ_n that
//! of its half. Reduction mod an odd prime lands in [`Poly`].

use crate::error::{Error, Result};
use crate::field::{make_field, Field};
use crate::poly::Poly;

/// A dyadic rational `num / 2^exp`, canonical: num odd, or num = 0 and exp = 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i64, exp: u32) -> Dyadic {
        let mut d = Dyadic { num, exp };
        d.canonicalize();
        d
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic { num: n, exp: 0 }
    }

    pub fn zero() -> Dyadic {
        Dyadic { num: 0, exp: 0 }
    }

    pub fn one() -> Dyadic {
        Dyadic { num: 1, exp: 0 }
    }

    fn canonicalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(&self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        Dyadic::new(
            (self.num << (e - self.exp)) + (rhs.num << (e - rhs.exp)),
            e,
        )
    }

    pub fn sub(&self, rhs: &Dyadic) -> Dyadic {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }

    pub fn mul(&self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(self.num * rhs.num, self.exp + rhs.exp)
    }

    /// Halve k times.
    pub fn shr(&self, k: u32) -> Dyadic {
        Dyadic::new(self.num, self.exp + k)
    }

    /// Image in F_p for odd p, via the inverse of 2.
    pub fn reduce(&self, field: &Field) -> crate::field::FieldElem {
        let two_inv = field.from_int(2).inv().expect("odd characteristic");
        field.from_int(self.num).mul(&two_inv.pow(self.exp as u64))
    }
}

impl std::fmt::Display for Dyadic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

/// Integer polynomial, little-endian, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(coeffs: Vec<i64>) -> IntPoly {
        let mut c = coeffs;
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn zero() -> IntPoly {
        IntPoly(vec![])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division by a monic divisor; panics if the division is inexact.
    pub fn div_exact(&self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(rhs.0.last(), Some(&1), "monic divisor");
        let dd = rhs.0.len() - 1;
        let mut rem = self.0.clone();
        let mut quo = vec![0i64; self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let coef = rem[k];
            if coef != 0 {
                quo[k - dd] = coef;
                for (i, &m) in rhs.0.iter().enumerate() {
                    rem[k - dd + i] -= coef * m;
                }
            }
            rem.pop();
        }
        assert!(rem.iter().all(|&x| x == 0), "exact division");
        IntPoly::new(quo)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &a| acc * x + a)
    }

    pub fn to_dyadic(&self) -> DyadicPoly {
        DyadicPoly::new(self.0.iter().map(|&a| Dyadic::from_int(a)).collect())
    }

    /// Coefficientwise image in a field of odd characteristic.
    pub fn to_poly(&self, field: &Field) -> Poly {
        Poly::from_ints(field, &self.0)
    }
}

/// Polynomial with dyadic-rational coefficients, little-endian, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyadicPoly(Vec<Dyadic>);

impl DyadicPoly {
    pub fn new(coeffs: Vec<Dyadic>) -> DyadicPoly {
        let mut c = coeffs;
        while c.last().map_or(false, Dyadic::is_zero) {
            c.pop();
        }
        DyadicPoly(c)
    }

    pub fn coeffs(&self) -> &[Dyadic] {
        &self.0
    }

    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Dyadic {
        self.0.get(i).copied().unwrap_or_else(Dyadic::zero)
    }

    pub fn add(&self, rhs: &DyadicPoly) -> DyadicPoly {
        let n = self.0.len().max(rhs.0.len());
        DyadicPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &DyadicPoly) -> DyadicPoly {
        let n = self.0.len().max(rhs.0.len());
        DyadicPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn mul(&self, rhs: &DyadicPoly) -> DyadicPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return DyadicPoly::new(vec![]);
        }
        let mut out = vec![Dyadic::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        DyadicPoly::new(out)
    }

    pub fn scale(&self, k: &Dyadic) -> DyadicPoly {
        DyadicPoly::new(self.0.iter().map(|a| a.mul(k)).collect())
    }

    pub fn to_poly(&self, field: &Field) -> Poly {
        Poly::new(field, self.0.iter().map(|a| a.reduce(field)).collect())
    }
}

/// The n-th cyclotomic polynomial by the divide-out recursion
/// X^n - 1 = prod over d | n of Phi_d.
pub fn cyclotomic_phi(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut xn1 = vec![0i64; n as usize + 1];
    xn1[0] = -1;
    xn1[n as usize] = 1;
    let mut num = IntPoly::new(xn1);
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic_phi(d));
        }
    }
    num
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Minimal polynomial of ζ_n + ζ_n^{-1}: the monic degree-φ(n)/2 integer
/// polynomial with X^{φ(n)/2} ψ_n(X + 1/X) = Φ_n(X). Requires n odd ≥ 3.
pub fn half_trace_psi(n: u64) -> Result<IntPoly> {
    if n % 2 == 0 {
        return Err(Error::EvenN(n));
    }
    assert!(n >= 3, "half trace needs n >= 3");
    let phi = cyclotomic_phi(n);
    let d = (euler_phi(n) / 2) as usize;
    // Phi_n is palindromic of degree 2d; X^k + X^{-k} = P_k(u) with
    // P_0 = 2, P_1 = u, P_k = u P_{k-1} - P_{k-2}
    let u = IntPoly::new(vec![0, 1]);
    let mut p_prev = IntPoly::new(vec![2]);
    let mut p_cur = u.clone();
    let mut psi = IntPoly::new(vec![phi.coeff(d)]);
    for k in 1..=d {
        psi = psi.add(&p_cur.mul(&IntPoly::new(vec![phi.coeff(d + k)])));
        let next = u.mul(&p_cur).sub(&p_prev);
        p_prev = p_cur;
        p_cur = next;
    }
    Ok(psi)
}

/// Minimal polynomial of (ζ_n + ζ_n^{-1})/2: χ_n(v) = 2^{-φ(n)/2} ψ_n(2v).
pub fn half_trace_chi(n: u64) -> Result<DyadicPoly> {
    let psi = half_trace_psi(n)?;
    let d = psi.deg().unwrap() as u32;
    let out = psi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            // coefficient of v^k picks up 2^k from the substitution, then the
            // global division by 2^d
            Dyadic::new(a, d - k as u32)
        })
        .collect();
    Ok(DyadicPoly::new(out))
}

/// Coefficientwise reduction mod an odd prime, using the inverse of 2.
pub fn reduce_mod_p(f: &DyadicPoly, p: u64) -> Result<Poly> {
    if p == 2 {
        return Err(Error::EvenPrime(p));
    }
    let field = make_field(p, 1)?;
    Ok(f.to_poly(&field))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_canonical_form() {
        assert_eq!(Dyadic::new(4, 2), Dyadic::from_int(1));
        assert_eq!(Dyadic::new(6, 1), Dyadic::from_int(3));
        assert_eq!(Dyadic::new(0, 5), Dyadic::zero());
        assert_eq!(Dyadic::new(3, 2).to_string(), "3/2^2");
        assert_eq!(Dyadic::from_int(-7).to_string(), "-7");
    }

    #[test]
    fn dyadic_arithmetic() {
        let half = Dyadic::new(1, 1);
        assert_eq!(half.add(&half), Dyadic::one());
        assert_eq!(half.mul(&half), Dyadic::new(1, 2));
        assert_eq!(half.sub(&Dyadic::one()), Dyadic::new(-1, 1));
        assert_eq!(Dyadic::new(3, 2).add(&Dyadic::new(1, 2)), Dyadic::one());
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(cyclotomic_phi(1), IntPoly::new(vec![-1, 1]));
        assert_eq!(cyclotomic_phi(3), IntPoly::new(vec![1, 1, 1]));
        assert_eq!(cyclotomic_phi(6), IntPoly::new(vec![1, -1, 1]));
        let phi15 = cyclotomic_phi(15);
        assert_eq!(phi15.deg(), Some(8));
        assert_eq!(phi15.eval(1), 1);
    }

    #[test]
    fn phi_product_identity() {
        for n in 1..=45u64 {
            let mut prod = IntPoly::new(vec![1]);
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic_phi(d));
                }
            }
            let mut xn1 = vec![0i64; n as usize + 1];
            xn1[0] = -1;
            xn1[n as usize] = 1;
            assert_eq!(prod, IntPoly::new(xn1), "n = {n}");
        }
    }

    #[test]
    fn psi_pinned_values() {
        assert_eq!(half_trace_psi(3).unwrap(), IntPoly::new(vec![1, 1]));
        assert_eq!(half_trace_psi(5).unwrap(), IntPoly::new(vec![-1, 1, 1]));
        assert_eq!(half_trace_psi(7).unwrap(), IntPoly::new(vec![-1, -2, 1, 1]));
        assert_eq!(half_trace_psi(4), Err(Error::EvenN(4)));
    }

    #[test]
    fn psi_laurent_identity() {
        // X^d psi_n(X + 1/X) = Phi_n(X): expand the left side as
        // sum a_k (X^2 + 1)^k X^(d-k)
        for n in (3..=45u64).step_by(2) {
            let psi = half_trace_psi(n).unwrap();
            let d = psi.deg().unwrap();
            let x2p1 = IntPoly::new(vec![1, 0, 1]);
            let mut lhs = IntPoly::zero();
            for (k, &a) in psi.coeffs().iter().enumerate() {
                let mut term = IntPoly::new(vec![a]);
                for _ in 0..k {
                    term = term.mul(&x2p1);
                }
                let mut shifted = vec![0i64; d - k];
                shifted.extend(term.coeffs());
                lhs = lhs.add(&IntPoly::new(shifted));
            }
            assert_eq!(lhs, cyclotomic_phi(n), "n = {n}");
        }
    }

    #[test]
    fn chi_pinned_values() {
        let chi3 = half_trace_chi(3).unwrap();
        assert_eq!(chi3.coeffs(), &[Dyadic::new(1, 1), Dyadic::one()]);
        let chi5 = half_trace_chi(5).unwrap();
        assert_eq!(
            chi5.coeffs(),
            &[Dyadic::new(-1, 2), Dyadic::new(1, 1), Dyadic::one()]
        );
        assert_eq!(half_trace_chi(6), Err(Error::EvenN(6)));
    }

    #[test]
    fn chi_matches_scaled_psi() {
        // 2^d chi_n(v) = psi_n(2v) coefficientwise
        for n in (3..=25u64).step_by(2) {
            let psi = half_trace_psi(n).unwrap();
            let chi = half_trace_chi(n).unwrap();
            let d = psi.deg().unwrap() as u32;
            assert_eq!(chi.deg(), psi.deg());
            for (k, &a) in psi.coeffs().iter().enumerate() {
                let expect = Dyadic::new(a, d - k as u32);
                assert_eq!(chi.coeff(k), expect, "n = {n}, k = {k}");
            }
            assert_eq!(chi.coeffs().last(), Some(&Dyadic::one()));
        }
    }

    #[test]
    fn reductions_mod_small_primes() {
        let chi5 = half_trace_chi(5).unwrap();
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(reduce_mod_p(&chi5, 5).unwrap(), Poly::from_ints(&f5, &[1, 3, 1]));
        let chi3 = half_trace_chi(3).unwrap();
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(reduce_mod_p(&chi3, 3).unwrap(), Poly::from_ints(&f3, &[2, 1]));
        assert_eq!(reduce_mod_p(&chi3, 2), Err(Error::EvenPrime(2)));
    }

    #[test]
    fn chi_p_mod_p_is_shifted_power() {
        // chi_p mod p = (v - 1)^((p-1)/2)
        for p in [3u64, 5, 7, 11, 13] {
            let field = make_field(p, 1).unwrap();
            let chi = reduce_mod_p(&half_trace_chi(p).unwrap(), p).unwrap();
            let vm1 = Poly::from_ints(&field, &[-1, 1]);
            let mut expect = Poly::one(&field);
            for _ in 0..(p - 1) / 2 {
                expect = expect.mul(&vm1);
            }
            assert_eq!(chi, expect, "p = {p}");
        }
    }

    #[test]
    fn tame_reduction_separable() {
        for (n, p) in [(5u64, 7u64), (3, 5), (7, 3), (9, 5), (15, 7)] {
            let chi = reduce_mod_p(&half_trace_chi(n).unwrap(), p).unwrap();
            let g = chi.gcd(&chi.derivative());
            assert_eq!(g.deg(), Some(0), "n = {n}, p = {p}");
        }
    }
}
