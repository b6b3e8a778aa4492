//! Univariate polynomials over a [`Field`], little-endian and trimmed.
//!
//! Everything downstream leans on three guarantees from this module: the
//! resultant follows the Sylvester convention with the first argument's rows
//! on top (so `res(X-a, X-b) = a-b`), root lists are sorted by canonical
//! element order, and splitting fields are found by Frobenius iteration with
//! an explicit cap on the extension degree.

use crate::error::{Error, Result};
use crate::field::{make_field_with_cap, Embedding, Field, FieldElem};

/// Cap on the relative degree of a splitting field.
pub const DEFAULT_SPLITTING_CAP: usize = 12;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    // trimmed: empty means the zero polynomial
    c: Vec<FieldElem>,
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<FieldElem>) -> Poly {
        let mut c = coeffs;
        while c.last().map_or(false, FieldElem::is_zero) {
            c.pop();
        }
        Poly { field: field.clone(), c }
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), c: vec![] }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn x(field: &Field) -> Poly {
        Poly::from_ints(field, &[0, 1])
    }

    pub fn constant(v: FieldElem) -> Poly {
        let field = v.field().clone();
        Poly::new(&field, vec![v])
    }

    /// X^n with coefficient c.
    pub fn monomial(c: FieldElem, n: usize) -> Poly {
        let field = c.field().clone();
        let mut v = vec![field.zero(); n + 1];
        v[n] = c;
        Poly::new(&field, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.c.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.c.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::new(&self.field, out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly::new(&self.field, out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.c.iter().map(FieldElem::neg).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(&self.field, out)
    }

    pub fn scale(&self, k: &FieldElem) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().inv().expect("nonzero leading coefficient"))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        let dd = rhs.deg().expect("division by the zero polynomial");
        let lead_inv = rhs.leading_coeff().inv().unwrap();
        let mut rem = self.c.clone();
        let mut quo = vec![self.field.zero(); self.c.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let coef = rem[k].mul(&lead_inv);
            if !coef.is_zero() {
                quo[k - dd] = coef.clone();
                for (i, m) in rhs.c.iter().enumerate() {
                    rem[k - dd + i] = rem[k - dd + i].sub(&coef.mul(m));
                }
            }
            rem.pop();
        }
        (Poly::new(&self.field, quo), Poly::new(&self.field, rem))
    }

    pub fn rem(&self, rhs: &Poly) -> Poly {
        self.divrem(rhs).1
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let out = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, a)| a.mul(&self.field.from_int(i as i64 + 1)))
            .collect();
        Poly::new(&self.field, out)
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// f(g(X)).
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.field);
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(a.clone()));
        }
        acc
    }

    /// self^e mod modulus, square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(&self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Coefficient-wise transport along a field embedding.
    pub fn map_coeffs(&self, emb: &Embedding) -> Poly {
        Poly::new(emb.to_field(), self.c.iter().map(|a| emb.apply(a)).collect())
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a:?}")?,
                1 => write!(f, "{a:?}*X")?,
                _ => write!(f, "{a:?}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sylvester resultant, first argument's coefficient rows on top:
/// res(X - a, X - b) = a - b, and res(f, g) = lc(f)^deg(g) * prod g(roots of f).
pub fn resultant(f: &Poly, g: &Poly) -> Result<FieldElem> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    let field = f.field().clone();
    if f.is_zero() || g.is_zero() {
        return Ok(field.zero());
    }
    let (m, n) = (f.deg().unwrap(), g.deg().unwrap());
    if m == 0 {
        return Ok(f.leading_coeff().pow(n as u64));
    }
    if n == 0 {
        return Ok(g.leading_coeff().pow(m as u64));
    }
    let size = m + n;
    let mut mat = vec![vec![field.zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = f.coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = g.coeff(n - k);
        }
    }
    Ok(determinant(&field, mat))
}

fn determinant(field: &Field, mut mat: Vec<Vec<FieldElem>>) -> FieldElem {
    let n = mat.len();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = det.neg();
        }
        let pv = mat[col][col].clone();
        det = det.mul(&pv);
        let pv_inv = pv.inv().unwrap();
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].mul(&pv_inv);
            for c in col..n {
                let sub = factor.mul(&mat[col][c]);
                mat[r][c] = mat[r][c].sub(&sub);
            }
        }
    }
    det
}

/// Product of the distinct irreducible factors, monic.
pub fn radical(f: &Poly) -> Poly {
    let field = f.field().clone();
    if f.deg().map_or(true, |d| d == 0) {
        return Poly::one(&field);
    }
    let d = f.derivative();
    if d.is_zero() {
        return radical(&pth_root(f));
    }
    let g = f.gcd(&d);
    let w = f.divrem(&g).0.monic();
    // strip every factor shared with w; what survives is a p-th power
    let mut rest = g;
    loop {
        let h = rest.gcd(&w);
        if h.deg() == Some(0) {
            break;
        }
        rest = rest.divrem(&h).0;
    }
    w.mul(&radical(&rest)).monic()
}

/// For f with zero derivative, the unique g with g^p = f.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field().clone();
    let p = field.p() as usize;
    let root_exp = field.q() / field.p(); // c^(q/p) is the p-th root of c
    let out = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|a| a.pow(root_exp))
        .collect();
    Poly::new(&field, out)
}

/// Roots in the coefficient field with multiplicities, sorted by canonical
/// element order. Deterministic equal-degree splitting: shifts are tried in
/// ascending element order.
pub fn roots_in_field(f: &Poly) -> Vec<(FieldElem, usize)> {
    let field = f.field().clone();
    if f.deg().map_or(true, |d| d == 0) {
        return vec![];
    }
    let q = field.q();
    // product of the distinct linear factors
    let xq = Poly::x(&field).pow_mod(q as u128, f);
    let lin = f.gcd(&xq.sub(&Poly::x(&field)));
    let mut roots = Vec::new();
    let mut stack = vec![lin];
    while let Some(h) = stack.pop() {
        match h.deg() {
            None | Some(0) => {}
            Some(1) => {
                let r = h.coeff(0).neg().mul(&h.coeff(1).inv().unwrap());
                roots.push(r);
            }
            Some(dh) => {
                let mut split = None;
                for a in field.elements() {
                    let shifted = Poly::new(&field, vec![a, field.one()]);
                    let w = shifted
                        .pow_mod(((q - 1) / 2) as u128, &h)
                        .sub(&Poly::one(&field));
                    let d = w.gcd(&h);
                    if d.deg().map_or(false, |dd| dd > 0 && dd < dh) {
                        split = Some(d);
                        break;
                    }
                }
                let d = split.expect("a shift separates distinct roots over odd q");
                let rest = h.divrem(&d).0;
                stack.push(d);
                stack.push(rest);
            }
        }
    }
    roots.sort();
    roots
        .into_iter()
        .map(|r| {
            let lin = Poly::new(&field, vec![r.neg(), field.one()]);
            let mut mult = 0;
            let mut g = f.clone();
            loop {
                let (quo, rem) = g.divrem(&lin);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                g = quo;
            }
            (r, mult)
        })
        .collect()
}

/// Splitting data for a polynomial: the least extension containing all roots,
/// the embedding into it, and the roots there with multiplicities.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub field: Field,
    pub embedding: Embedding,
    pub roots: Vec<(FieldElem, usize)>,
}

/// F_{q^m} over F_q with the canonical embedding: the base's defining
/// polynomial is sent to its least root in the extension.
pub fn extension_with_embedding(base: &Field, m: usize, field_cap: u64) -> Result<(Field, Embedding)> {
    if m == 1 {
        return Ok((base.clone(), Embedding::identity(base)));
    }
    let ext = make_field_with_cap(base.p(), base.degree() * m, field_cap)?;
    let lifted =
        Poly::from_ints(&ext, &base.modulus().iter().map(|&x| x as i64).collect::<Vec<_>>());
    let root = roots_in_field(&lifted)
        .into_iter()
        .next()
        .map(|(r, _)| r)
        .expect("base modulus splits in any extension of its degree");
    let emb = Embedding::new(base, &ext, root)?;
    Ok((ext, emb))
}

/// Least m <= cap with all roots of f in F_{q^m}, as the field F_{q^m} plus
/// the canonical embedding.
pub fn splitting_field(f: &Poly, cap: usize, field_cap: u64) -> Result<(Field, Embedding)> {
    let base = f.field().clone();
    assert!(f.deg().map_or(false, |d| d >= 1), "splitting field of a nonconstant polynomial");
    let rad = radical(f);
    let q = base.q();
    // iterated Frobenius: after m steps, fr = X^(q^m) mod rad
    let mut fr = Poly::x(&base);
    for m in 1..=cap {
        fr = fr.pow_mod(q as u128, &rad);
        if fr == Poly::x(&base).rem(&rad) {
            return extension_with_embedding(&base, m, field_cap);
        }
    }
    Err(Error::SplittingCapExceeded(cap))
}

/// Roots over the splitting field, with the field and embedding that locate
/// them. Errors if the splitting degree exceeds `cap`.
pub fn roots_over_splitting_field(f: &Poly, cap: usize, field_cap: u64) -> Result<SplittingData> {
    let (ext, embedding) = splitting_field(f, cap, field_cap)?;
    let lifted = f.map_coeffs(&embedding);
    let roots = roots_in_field(&lifted);
    Ok(SplittingData { field: ext, embedding, roots })
}
