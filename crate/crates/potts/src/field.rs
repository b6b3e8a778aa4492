//! Finite fields `F_{p^s}` of odd characteristic, exact and deterministic.
//!
//! A [`Field`] is a shared immutable descriptor: the characteristic p, the
//! extension degree s, and a defining polynomial chosen canonically as the
//! least monic irreducible of degree s, where monic polynomials are compared
//! by the base-p integer value of their non-leading coefficient vector
//! (constant coefficient = least significant digit). Elements are little-endian
//! coefficient vectors of length s over F_p, totally ordered by the same
//! base-p value ([`FieldElem::index`]); every "deterministic least" choice in
//! the library refers to this order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Default cap on the field size q = p^s.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 20;

struct FieldDesc {
    p: u64,
    s: usize,
    q: u64,
    // monic, length s+1, little-endian
    modulus: Vec<u64>,
    generator: OnceLock<Vec<u64>>,
    q1_factors: OnceLock<Vec<u64>>,
}

/// Handle to a finite field; cheap to clone, immutable, shareable.
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

/// An element of a [`Field`]: reduced little-endian coefficients of length s.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    c: Vec<u64>,
}

/// Construct `F_{p^s}` under the default size cap.
pub fn make_field(p: u64, s: usize) -> Result<Field> {
    make_field_with_cap(p, s, DEFAULT_SIZE_CAP)
}

/// Construct `F_{p^s}` with an explicit size cap on q = p^s.
pub fn make_field_with_cap(p: u64, s: usize, cap: u64) -> Result<Field> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 {
        return Err(Error::SizeCapExceeded { q: 0, cap });
    }
    let q_wide = (0..s).try_fold(1u128, |acc, _| {
        let v = acc * p as u128;
        if v > u64::MAX as u128 {
            None
        } else {
            Some(v)
        }
    });
    let q = match q_wide {
        Some(v) if v <= cap as u128 => v as u64,
        Some(v) => return Err(Error::SizeCapExceeded { q: v as u64, cap }),
        None => return Err(Error::SizeCapExceeded { q: u64::MAX, cap }),
    };
    let modulus = least_irreducible(p, s);
    Ok(Field(Arc::new(FieldDesc {
        p,
        s,
        q,
        modulus,
        generator: OnceLock::new(),
        q1_factors: OnceLock::new(),
    })))
}

impl Field {
    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree s over the prime field.
    pub fn degree(&self) -> usize {
        self.0.s
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Defining polynomial, monic, little-endian, length s+1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), c: vec![0; self.0.s] }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let p = self.0.p as i64;
        let r = ((n % p) + p) % p;
        let mut c = vec![0; self.0.s];
        c[0] = r as u64;
        FieldElem { field: self.clone(), c }
    }

    /// Element from little-endian coefficients (length at most s), entries
    /// taken mod p.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElem> {
        if coeffs.len() > self.0.s {
            return Err(Error::IndexOutOfRange { i: coeffs.len(), max: self.0.s });
        }
        let p = self.0.p as i64;
        let mut c = vec![0; self.0.s];
        for (i, &x) in coeffs.iter().enumerate() {
            c[i] = (((x % p) + p) % p) as u64;
        }
        Ok(FieldElem { field: self.clone(), c })
    }

    /// The element whose canonical index is `idx` (base-p digits, 0 <= idx < q).
    pub fn from_index(&self, idx: u64) -> FieldElem {
        debug_assert!(idx < self.0.q);
        let mut c = vec![0; self.0.s];
        let mut v = idx;
        for digit in c.iter_mut() {
            *digit = v % self.0.p;
            v /= self.0.p;
        }
        FieldElem { field: self.clone(), c }
    }

    /// All q elements in ascending canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.0.q).map(move |i| self.from_index(i))
    }

    /// The least multiplicative generator of `F_q^*` in canonical order.
    pub fn generator(&self) -> FieldElem {
        let raw = self.0.generator.get_or_init(|| {
            let factors = self.q1_factors();
            'next: for idx in 1..self.0.q {
                let x = self.from_index(idx);
                for &f in factors {
                    if x.pow((self.0.q - 1) / f).is_one() {
                        continue 'next;
                    }
                }
                return x.c;
            }
            unreachable!("F_q^* is cyclic, a generator exists");
        });
        FieldElem { field: self.clone(), c: raw.clone() }
    }

    fn q1_factors(&self) -> &[u64] {
        self.0.q1_factors.get_or_init(|| prime_factors(self.0.q - 1))
    }

    fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.s == other.0.s && self.0.modulus == other.0.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.s == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.s)
        }
    }
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Little-endian coefficients over F_p, length s.
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Canonical order key: the coefficient vector read as a base-p integer.
    pub fn index(&self) -> u64 {
        let p = self.field.0.p;
        self.c.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&d| d == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&d| d == 0)
    }

    pub fn add(&self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        let p = self.field.0.p;
        let c = self.c.iter().zip(&rhs.c).map(|(&a, &b)| (a + b) % p).collect();
        FieldElem { field: self.field.clone(), c }
    }

    pub fn sub(&self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        let p = self.field.0.p;
        let c = self.c.iter().zip(&rhs.c).map(|(&a, &b)| (a + p - b) % p).collect();
        FieldElem { field: self.field.clone(), c }
    }

    pub fn neg(&self) -> FieldElem {
        let p = self.field.0.p;
        let c = self.c.iter().map(|&a| (p - a) % p).collect();
        FieldElem { field: self.field.clone(), c }
    }

    pub fn mul(&self, rhs: &FieldElem) -> FieldElem {
        self.check(rhs);
        let d = &self.field.0;
        if d.s == 1 {
            return FieldElem { field: self.field.clone(), c: vec![self.c[0] * rhs.c[0] % d.p] };
        }
        // schoolbook product then reduction by the monic modulus
        let mut prod = vec![0u64; 2 * d.s - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % d.p;
            }
        }
        for i in (d.s..prod.len()).rev() {
            let lead = prod[i];
            if lead == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &m) in d.modulus.iter().enumerate().take(d.s) {
                let idx = i - d.s + k;
                prod[idx] = (prod[idx] + lead * (d.p - m)) % d.p;
            }
        }
        prod.truncate(d.s);
        FieldElem { field: self.field.clone(), c: prod }
    }

    pub fn square(&self) -> FieldElem {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let d = &self.field.0;
        if d.s == 1 {
            return Ok(FieldElem {
                field: self.field.clone(),
                c: vec![mod_inv(self.c[0], d.p)],
            });
        }
        let (g, u) = pf::egcd(&self.c, &d.modulus, d.p);
        debug_assert_eq!(pf::deg(&g), Some(0), "modulus is irreducible");
        let scale = mod_inv(g[0], d.p);
        let mut c: Vec<u64> = u.iter().map(|&x| x * scale % d.p).collect();
        c.resize(d.s, 0);
        Ok(FieldElem { field: self.field.clone(), c })
    }

    pub fn div(&self, rhs: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Least n >= 1 with x^n = 1; divides q - 1.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q1 = self.field.0.q - 1;
        let mut n = q1;
        for &f in self.field.q1_factors() {
            while n % f == 0 && self.pow(n / f).is_one() {
                n /= f;
            }
        }
        Ok(n)
    }

    fn check(&self, rhs: &FieldElem) {
        assert!(self.field.same(&rhs.field), "field arithmetic across distinct fields");
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.c == other.c
    }
}
impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Canonical order within one field; across fields, order by (p, s) first so
// sorted containers stay total.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.0.p, self.field.0.s, self.index()).cmp(&(
            other.field.0.p,
            other.field.0.s,
            other.index(),
        ))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.0.s == 1 {
            write!(f, "{}", self.c[0])
        } else {
            write!(f, "{:?}", self.c)
        }
    }
}

/// Least element of exact multiplicative order n; `NoSuchRoot` if n does not
/// divide q - 1. Returns the least power g^((q-1)/n) of the canonical
/// generator g, which is the least exponent producing order exactly n.
pub fn primitive_root_of_unity(field: &Field, n: u64) -> Result<FieldElem> {
    let q1 = field.q() - 1;
    if n == 0 || q1 % n != 0 {
        return Err(Error::NoSuchRoot(n));
    }
    Ok(field.generator().pow(q1 / n))
}

/// Multiplicative order of a nonzero element.
pub fn element_order(x: &FieldElem) -> Result<u64> {
    x.order()
}

/// Deterministic square root: the root with the least canonical index, or
/// `None` when x is not a square. Tonelli-Shanks over F_q.
pub fn square_root(x: &FieldElem) -> Option<FieldElem> {
    if x.is_zero() {
        return Some(x.clone());
    }
    let field = x.field().clone();
    let q = field.q();
    // Euler criterion; q odd
    if !x.pow((q - 1) / 2).is_one() {
        return None;
    }
    let mut m = q - 1;
    let mut e = 0u32;
    while m % 2 == 0 {
        m /= 2;
        e += 1;
    }
    // deterministic non-residue: least element with chi = -1
    let nonres = (1..q)
        .map(|i| field.from_index(i))
        .find(|z| !z.pow((q - 1) / 2).is_one())
        .expect("(q-1)/2 non-residues exist");
    let mut c = nonres.pow(m);
    let mut t = x.pow(m);
    let mut r = x.pow((m + 1) / 2);
    let mut e_cur = e;
    while !t.is_one() {
        // least i with t^(2^i) = 1
        let mut i = 0u32;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = t2.square();
            i += 1;
        }
        let b = c.pow(1 << (e_cur - i - 1));
        r = r.mul(&b);
        c = b.square();
        t = t.mul(&c);
        e_cur = i;
    }
    let other = r.neg();
    Some(if other.index() < r.index() { other } else { r })
}

/// F_p -> F_q coefficient-wise lift composed with evaluation at a fixed root
/// of the source's defining polynomial: a field embedding `F_{p^s} -> F_{p^{s m}}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    from: Field,
    to: Field,
    // images of X^0 .. X^{s-1}
    powers: Vec<FieldElem>,
}

impl Embedding {
    /// Build from the chosen image of the source generator; validates that the
    /// image is a root of the source's defining polynomial.
    pub fn new(from: &Field, to: &Field, root: FieldElem) -> Result<Embedding> {
        if from.p() != to.p() || to.degree() % from.degree() != 0 {
            return Err(Error::MixedFields);
        }
        // evaluate the source modulus at the root
        let mut acc = to.zero();
        let mut pw = to.one();
        for &m in from.modulus() {
            acc = acc.add(&pw.mul(&to.from_int(m as i64)));
            pw = pw.mul(&root);
        }
        if !acc.is_zero() {
            return Err(Error::MixedFields);
        }
        let mut powers = Vec::with_capacity(from.degree());
        let mut pw = to.one();
        for _ in 0..from.degree() {
            powers.push(pw.clone());
            pw = pw.mul(&root);
        }
        Ok(Embedding { from: from.clone(), to: to.clone(), powers })
    }

    /// The identity embedding of a field into itself.
    pub fn identity(field: &Field) -> Embedding {
        let mut powers = Vec::with_capacity(field.degree());
        let x = if field.degree() == 1 {
            field.one()
        } else {
            field.from_coeffs(&[0, 1]).expect("s >= 2")
        };
        let mut pw = field.one();
        for _ in 0..field.degree() {
            powers.push(pw.clone());
            pw = pw.mul(&x);
        }
        Embedding { from: field.clone(), to: field.clone(), powers }
    }

    pub fn from_field(&self) -> &Field {
        &self.from
    }

    pub fn to_field(&self) -> &Field {
        &self.to
    }

    pub fn apply(&self, x: &FieldElem) -> FieldElem {
        assert!(x.field().same(&self.from), "embedding applied to foreign element");
        let mut acc = self.to.zero();
        for (coef, pw) in x.coeffs().iter().zip(&self.powers) {
            if *coef != 0 {
                acc = acc.add(&pw.mul(&self.to.from_int(*coef as i64)));
            }
        }
        acc
    }

    /// The composite `next . self`, an embedding from `self.from` into `next.to`.
    pub fn compose(&self, next: &Embedding) -> Result<Embedding> {
        if !self.to.same(&next.from) {
            return Err(Error::MixedFields);
        }
        let root = if self.from.degree() == 1 {
            // linear modulus: its root is a prime-field constant
            let m0 = self.from.modulus()[0];
            next.to.from_int(-(m0 as i64))
        } else {
            next.apply(&self.powers[1])
        };
        Embedding::new(&self.from, &next.to, root)
    }
}

// ---- integer and prime-field helpers ----

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on integers
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a unit mod a prime");
    ((t0 % p as i64 + p as i64) % p as i64) as u64
}

/// Least monic irreducible of degree s over F_p, by ascending base-p value of
/// the non-leading coefficients.
fn least_irreducible(p: u64, s: usize) -> Vec<u64> {
    if s == 1 {
        return vec![0, 1]; // X
    }
    let total = (0..s).fold(1u64, |acc, _| acc * p);
    for idx in 0..total {
        let mut f = Vec::with_capacity(s + 1);
        let mut v = idx;
        for _ in 0..s {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if pf::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducibles of every degree exist over F_p");
}

/// Polynomial arithmetic over the prime field F_p on raw little-endian
/// vectors; used for the irreducibility scan and element inversion.
mod pf {
    use super::mod_inv;

    pub fn deg(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&x| x != 0)
    }

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let dm = deg(m).expect("nonzero modulus");
        let lead_inv = mod_inv(m[dm], p);
        let mut r = trim(a.to_vec());
        while let Some(dr) = deg(&r) {
            if dr < dm {
                break;
            }
            let coef = r[dr] * lead_inv % p;
            for k in 0..=dm {
                r[dr - dm + k] = (r[dr - dm + k] + coef * (p - m[k] % p)) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Returns (g, u) with u*a = g mod m and g = gcd(a, m).
    pub fn egcd(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut t0, mut t1) = (vec![], vec![1]);
        while !r1.is_empty() {
            // r0 = q r1 + r, computed by synthetic division
            let d1 = deg(&r1).unwrap();
            let lead_inv = mod_inv(r1[d1], p);
            let mut q = vec![0u64; deg(&r0).map_or(0, |d| d.saturating_sub(d1)) + 1];
            let mut r = r0.clone();
            while let Some(dr) = deg(&r) {
                if dr < d1 {
                    break;
                }
                let coef = r[dr] * lead_inv % p;
                q[dr - d1] = coef;
                for k in 0..=d1 {
                    r[dr - d1 + k] = (r[dr - d1 + k] + coef * (p - r1[k] % p)) % p;
                }
                r = trim(r);
            }
            let qt1 = mul(&q, &t1, p);
            let mut t2 = t0.clone();
            t2.resize(t2.len().max(qt1.len()), 0);
            for (i, &x) in qt1.iter().enumerate() {
                t2[i] = (t2[i] + p - x) % p;
            }
            t0 = t1;
            t1 = trim(t2);
            r0 = r1;
            r1 = r;
        }
        (r0, t0)
    }

    fn pow_x_mod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
        // X^e mod m by square-and-multiply
        let mut base = rem(&[0, 1], m, p);
        let mut acc = vec![1u64];
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, p), m, p);
            }
            base = rem(&mul(&base, &base, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Monic f of degree s >= 2 irreducible over F_p: X^(p^s) = X mod f and
    /// gcd(X^(p^(s/r)) - X, f) = 1 for every prime r | s.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let s = deg(f).unwrap();
        let q_of = |k: usize| (0..k).fold(1u64, |acc, _| acc * p);
        let xq = pow_x_mod(q_of(s), f, p);
        let x = rem(&[0, 1], f, p);
        if xq != x {
            return false;
        }
        let mut s_rem = s;
        let mut r = 2;
        let mut primes = Vec::new();
        while r * r <= s_rem {
            if s_rem % r == 0 {
                primes.push(r);
                while s_rem % r == 0 {
                    s_rem /= r;
                }
            }
            r += 1;
        }
        if s_rem > 1 {
            primes.push(s_rem);
        }
        for r in primes {
            let mut d = pow_x_mod(q_of(s / r), f, p);
            // d - X
            d.resize(d.len().max(2), 0);
            d[1] = (d[1] + p - 1) % p;
            let d = super::pf::gcd(&d, f, p);
            if deg(&d) != Some(0) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.q(), 7);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f9_least_defining_polynomial() {
        // monic quadratics over F_3 in ascending coefficient order: X^2 has
        // root 0, X^2 + 1 has no root; the scan stops there.
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(2, 1), Err(Error::EvenCharacteristic));
        assert_eq!(make_field(9, 1), Err(Error::NotPrime(9)));
        assert!(matches!(make_field_with_cap(1031, 2, 1 << 20), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn orders_in_prime_fields() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(element_order(&f7.from_int(3)).unwrap(), 6);
        assert_eq!(element_order(&f7.from_int(1)).unwrap(), 1);
        let f11 = make_field(11, 1).unwrap();
        assert_eq!(element_order(&f11.from_int(3)).unwrap(), 5);
        assert_eq!(element_order(&f7.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn deterministic_generators() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.generator(), f7.from_int(3));
        // in F_9 the scan passes 1, 2 (order 2), [0,1] = i (order 4) and stops
        // at 1 + i of order 8
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.generator(), f9.from_coeffs(&[1, 1]).unwrap());
        assert_eq!(f9.generator().order().unwrap(), 8);
    }

    #[test]
    fn primitive_roots() {
        let f7 = make_field(7, 1).unwrap();
        let z = primitive_root_of_unity(&f7, 3).unwrap();
        assert_eq!(z, f7.from_int(2));
        assert_eq!(z.order().unwrap(), 3);
        assert_eq!(primitive_root_of_unity(&f7, 5), Err(Error::NoSuchRoot(5)));
        assert_eq!(primitive_root_of_unity(&f7, 1).unwrap(), f7.one());
    }

    #[test]
    fn square_roots_prime_field() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(square_root(&f7.from_int(2)), Some(f7.from_int(3)));
        assert_eq!(square_root(&f7.from_int(3)), None);
        assert_eq!(square_root(&f7.zero()), Some(f7.zero()));
    }

    #[test]
    fn square_roots_extension() {
        // in F_9 = F_3[i], sqrt(2) = sqrt(-1) = +-i; the least is i = [0,1]
        let f9 = make_field(3, 2).unwrap();
        let r = square_root(&f9.from_int(2)).unwrap();
        assert_eq!(r, f9.from_coeffs(&[0, 1]).unwrap());
        assert_eq!(r.square(), f9.from_int(2));
    }

    #[test]
    fn exhaustive_small_field_laws() {
        // x^(q-1) = 1, order by factoring = order by powering, square counts
        for (p, s) in [(3, 1), (5, 1), (7, 1), (3, 2), (9, 0)] {
            if s == 0 {
                continue;
            }
            let f = make_field(p, s).unwrap();
            let q = f.q();
            let mut squares = 0;
            for x in f.elements().skip(1) {
                assert!(x.pow(q - 1).is_one());
                let fast = x.order().unwrap();
                let mut acc = x.clone();
                let mut naive = 1;
                while !acc.is_one() {
                    acc = acc.mul(&x);
                    naive += 1;
                }
                assert_eq!(fast, naive);
                if let Some(r) = square_root(&x) {
                    assert_eq!(r.square(), x);
                    squares += 1;
                }
            }
            assert_eq!(squares, (q - 1) / 2);
        }
    }

    #[test]
    fn embedding_roundtrip() {
        let f3 = make_field(3, 1).unwrap();
        let f9 = make_field(3, 2).unwrap();
        let emb = Embedding::new(&f3, &f9, f9.zero().clone()).unwrap(); // root of X is 0
        for x in f3.elements() {
            let y = emb.apply(&x);
            assert_eq!(y.coeffs()[0], x.coeffs()[0]);
        }
    }

    #[test]
    fn inverses_in_extension() {
        let f = make_field(5, 3).unwrap();
        for idx in 1..200 {
            let x = f.from_index(idx % f.q());
            if x.is_zero() {
                continue;
            }
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }
}
