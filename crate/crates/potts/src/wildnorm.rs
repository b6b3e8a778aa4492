//! Norm machinery for wild degenerations: the partial sums t^{[i]}, the
//! degree-p norm polynomial N(X) = prod (X - t^{[i]}ψ), the constant
//! ω = t^{[1]}…t^{[p-1]} with p = ω(t-1)^{p-1}, the form H = U N² + A N + B
//! with its discriminant-like constant δ, and coordinate changes that leave
//! the invariant j = Uδ/(A² - 4UB) fixed.
//!
//! δ is always the homogeneous evaluation Uψ^{2p} - Aψ^p(t-1)^p + B(t-1)^{2p},
//! not a substitution into the dehomogenized H. The resultant identity
//! Res(H, dH/dX) = -U^p ω^{2p} δ^{p-1} (A² - 4BU)^p holds with this library's
//! Sylvester convention as-is, with no extra sign.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{resultant, Poly};

/// Parameters (t, ψ, U, A, B) with 1 + t + … + t^{p-1} = 0, not both t = 1
/// and ψ = 0, and U a unit. Covers both t of exact order p (any field with
/// p | q - 1) and t = 1 in characteristic p.
#[derive(Clone, Debug)]
pub struct NormContext {
    field: Field,
    p: u64,
    t: FieldElem,
    psi: FieldElem,
    u: FieldElem,
    a: FieldElem,
    b: FieldElem,
}

impl NormContext {
    pub fn new(
        p: u64,
        t: FieldElem,
        psi: FieldElem,
        u: FieldElem,
        a: FieldElem,
        b: FieldElem,
    ) -> Result<NormContext> {
        let field = t.field().clone();
        if p < 3 || !crate::field::is_prime(p) {
            return Err(Error::InvalidNormContext("p must be an odd prime"));
        }
        let mut sum = field.zero();
        let mut pw = field.one();
        for _ in 0..p {
            sum = sum.add(&pw);
            pw = pw.mul(&t);
        }
        if !sum.is_zero() {
            return Err(Error::InvalidNormContext("1 + t + ... + t^(p-1) must vanish"));
        }
        if t.is_one() && psi.is_zero() {
            return Err(Error::InvalidNormContext("t = 1 requires psi != 0"));
        }
        if u.is_zero() {
            return Err(Error::InvalidNormContext("U must be a unit"));
        }
        Ok(NormContext { field, p, t, psi, u, a, b })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> &FieldElem {
        &self.t
    }

    pub fn psi(&self) -> &FieldElem {
        &self.psi
    }

    pub fn coefficients(&self) -> (&FieldElem, &FieldElem, &FieldElem) {
        (&self.u, &self.a, &self.b)
    }

    /// t^{[i]} = 1 + t + … + t^{i-1}, with t^{[0]} = 0.
    pub fn partial_sum(&self, i: u64) -> Result<FieldElem> {
        if i > self.p {
            return Err(Error::IndexOutOfRange { i: i as usize, max: self.p as usize });
        }
        let mut sum = self.field.zero();
        let mut pw = self.field.one();
        for _ in 0..i {
            sum = sum.add(&pw);
            pw = pw.mul(&self.t);
        }
        Ok(sum)
    }

    /// N(X) = prod_{i=0}^{p-1} (X - t^{[i]}ψ), monic of degree p, invariant
    /// under X ↦ tX + ψ.
    pub fn norm_poly(&self) -> Poly {
        let mut n = Poly::one(&self.field);
        for i in 0..self.p {
            let root = self.partial_sum(i).unwrap().mul(&self.psi);
            n = n.mul(&Poly::new(&self.field, vec![root.neg(), self.field.one()]));
        }
        let shifted = n.compose(&Poly::new(&self.field, vec![self.psi.clone(), self.t.clone()]));
        assert_eq!(shifted, n, "norm is invariant under X -> tX + psi");
        n
    }

    /// ω = t^{[1]} ⋯ t^{[p-1]}; when t ≠ 1 the identity p = ω(t-1)^{p-1} is
    /// asserted and the flag is true; at t = 1 both sides vanish and only ω
    /// is returned (flag false).
    pub fn omega_and_p_identity(&self) -> (FieldElem, bool) {
        let mut omega = self.field.one();
        for i in 1..self.p {
            omega = omega.mul(&self.partial_sum(i).unwrap());
        }
        if self.t.is_one() {
            return (omega, false);
        }
        let tm1 = self.t.sub(&self.field.one());
        let lhs = omega.mul(&tm1.pow(self.p - 1));
        assert_eq!(lhs, self.field.from_int(self.p as i64), "p = omega (t-1)^(p-1)");
        (omega, true)
    }

    /// H(X) = U N(X)² + A N(X) + B and the constant
    /// δ = Uψ^{2p} - Aψ^p(t-1)^p + B(t-1)^{2p}.
    pub fn build_h_delta(&self) -> (Poly, FieldElem) {
        let n = self.norm_poly();
        let h = n
            .mul(&n)
            .scale(&self.u)
            .add(&n.scale(&self.a))
            .add(&Poly::constant(self.b.clone()));
        (h, self.delta())
    }

    fn delta(&self) -> FieldElem {
        let tm1 = self.t.sub(&self.field.one());
        let psi_p = self.psi.pow(self.p);
        let tm1_p = tm1.pow(self.p);
        self.u
            .mul(&psi_p.square())
            .sub(&self.a.mul(&psi_p).mul(&tm1_p))
            .add(&self.b.mul(&tm1_p.square()))
    }

    /// Checks Res(H, dH/dX) = -U^p ω^{2p} δ^{p-1} (A² - 4BU)^p exactly.
    pub fn verify_resultant_identity(&self) -> Result<bool> {
        if self.t.is_one() {
            return Err(Error::TEqualsOne);
        }
        let (h, delta) = self.build_h_delta();
        let lhs = resultant(&h, &h.derivative())?;
        let (omega, _) = self.omega_and_p_identity();
        let disc = self.a.square().sub(&self.field.from_int(4).mul(&self.b).mul(&self.u));
        let rhs = self
            .u
            .pow(self.p)
            .mul(&omega.pow(2 * self.p))
            .mul(&delta.pow(self.p - 1))
            .mul(&disc.pow(self.p))
            .neg();
        Ok(lhs == rhs)
    }

    /// j = Uδ / (A² - 4UB); singular when δ(A² - 4UB) = 0.
    pub fn wild_j(&self) -> Result<FieldElem> {
        let delta = self.delta();
        let disc = self.a.square().sub(&self.field.from_int(4).mul(&self.u).mul(&self.b));
        if delta.is_zero() || disc.is_zero() {
            return Err(Error::SingularConfiguration);
        }
        Ok(self.u.mul(&delta).div(&disc).unwrap())
    }

    /// Subspace of polynomials of degree ≤ p fixed by f(X) ↦ f(tX + ψ):
    /// true when it is exactly the 2-dimensional span of {1, N}.
    pub fn invariant_subspace_check(&self) -> bool {
        let dim = self.p as usize + 1;
        let shift = Poly::new(&self.field, vec![self.psi.clone(), self.t.clone()]);
        // columns: coefficients of (tX + psi)^j minus the identity
        let mut mat = vec![vec![self.field.zero(); dim]; dim];
        let mut pw = Poly::one(&self.field);
        for j in 0..dim {
            for i in 0..dim {
                mat[i][j] = pw.coeff(i);
            }
            mat[j][j] = mat[j][j].sub(&self.field.one());
            pw = pw.mul(&shift);
        }
        let fixed_dim = dim - rank(mat);
        let n = self.norm_poly();
        let n_fixed = n.compose(&shift) == n;
        fixed_dim == 2 && n_fixed
    }
}

fn rank(mut mat: Vec<Vec<FieldElem>>) -> usize {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot, row);
        let inv = mat[row][col].inv().unwrap();
        for c in col..cols {
            mat[row][c] = mat[row][c].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let sub = factor.mul(&mat[row][c]);
                    mat[r][c] = mat[r][c].sub(&sub);
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// A coordinate change of the norm presentation.
#[derive(Clone, Debug)]
pub enum CoordChange {
    /// X ↦ αX + β on the norm variable; t is unchanged.
    Affine { alpha: FieldElem, beta: FieldElem },
    /// Swap the roles of the two distinguished sections: t ↦ t^{-1}, with
    /// Bezout data u(t-1) + vψ = 1 chosen by rule (u = (t-1)^{-1}, v = 0 when
    /// t ≠ 1, else u = 0, v = ψ^{-1}).
    DeltaSwap,
    /// DeltaSwap with explicit Bezout data.
    DeltaSwapWith { u: FieldElem, v: FieldElem },
}

/// Outcome of a coordinate change: j before and after (None when the
/// configuration is singular), always equal.
#[derive(Clone, Debug)]
pub struct ChangeReport {
    pub j_before: Option<FieldElem>,
    pub j_after: Option<FieldElem>,
    pub preserved: bool,
}

/// Transport the context along a coordinate change; the report certifies that
/// wild_j is unchanged (both values, or both singular).
pub fn change_coordinates(ctx: &NormContext, mode: CoordChange) -> Result<(NormContext, ChangeReport)> {
    let new_ctx = match mode {
        CoordChange::Affine { alpha, beta } => affine_transport(ctx, alpha, beta)?,
        CoordChange::DeltaSwap => {
            let field = ctx.field.clone();
            let one = field.one();
            let (u, v) = if !ctx.t.is_one() {
                (ctx.t.sub(&one).inv().unwrap(), field.zero())
            } else {
                (field.zero(), ctx.psi.inv().unwrap())
            };
            delta_swap_transport(ctx, u, v)?
        }
        CoordChange::DeltaSwapWith { u, v } => delta_swap_transport(ctx, u, v)?,
    };
    let j_before = match ctx.wild_j() {
        Ok(j) => Some(j),
        Err(Error::SingularConfiguration) => None,
        Err(e) => return Err(e),
    };
    let j_after = match new_ctx.wild_j() {
        Ok(j) => Some(j),
        Err(Error::SingularConfiguration) => None,
        Err(e) => return Err(e),
    };
    let preserved = j_before == j_after;
    assert!(preserved, "coordinate changes preserve j");
    Ok((new_ctx, ChangeReport { j_before, j_after, preserved }))
}

fn affine_transport(ctx: &NormContext, alpha: FieldElem, beta: FieldElem) -> Result<NormContext> {
    if alpha.is_zero() {
        return Err(Error::DegenerateChange);
    }
    let field = ctx.field.clone();
    let one = field.one();
    let psi_new = alpha.mul(&ctx.psi).sub(&ctx.t.sub(&one).mul(&beta));
    let probe = NormContext::new(
        ctx.p,
        ctx.t.clone(),
        psi_new,
        ctx.u.clone(),
        ctx.a.clone(),
        ctx.b.clone(),
    )?;
    // xi = N_new(alpha X + beta) - alpha^p N_old(X) is a constant
    let ap = alpha.pow(ctx.p);
    let subst = Poly::new(&field, vec![beta.clone(), alpha.clone()]);
    let xi_poly = probe.norm_poly().compose(&subst).sub(&ctx.norm_poly().scale(&ap));
    assert!(xi_poly.deg().map_or(true, |d| d == 0), "transport defect is a constant");
    let xi = xi_poly.coeff(0);
    let a2p = ap.square();
    let a_new = ap.mul(&ctx.a).sub(&field.from_int(2).mul(&ctx.u).mul(&xi));
    let b_new = a2p
        .mul(&ctx.b)
        .add(&ctx.u.mul(&xi.square()))
        .sub(&ap.mul(&ctx.a).mul(&xi));
    NormContext::new(ctx.p, ctx.t.clone(), probe.psi, ctx.u.clone(), a_new, b_new)
}

fn delta_swap_transport(ctx: &NormContext, u: FieldElem, v: FieldElem) -> Result<NormContext> {
    let field = ctx.field.clone();
    let one = field.one();
    let tm1 = ctx.t.sub(&one);
    if u.mul(&tm1).add(&v.mul(&ctx.psi)) != one {
        return Err(Error::DegenerateChange);
    }
    // normalize U = 1 first; j is invariant under (U, A, B) -> (1, A/U, B/U)
    let a = ctx.a.div(&ctx.u).unwrap();
    let b = ctx.b.div(&ctx.u).unwrap();
    let norm = NormContext::new(ctx.p, ctx.t.clone(), ctx.psi.clone(), one.clone(), a.clone(), b.clone())?;
    let delta = norm.delta();

    let psi_p = ctx.psi.pow(ctx.p);
    let v_p = v.pow(ctx.p);
    let tm1_p = tm1.pow(ctx.p);
    // xi(t-1)^p - v^p psi^p = -1
    let xi = if ctx.t.is_one() {
        assert!(v_p.mul(&psi_p).is_one(), "Bezout data at t = 1");
        field.zero()
    } else {
        v_p.mul(&psi_p).sub(&one).div(&tm1_p).unwrap()
    };
    let t_new = ctx.t.inv().unwrap();
    let psi_new = t_new.mul(&v);
    let two = field.from_int(2);
    // transported form has leading coefficient delta; rescale back to U = 1
    let a_raw = two
        .mul(&psi_p)
        .mul(&xi)
        .neg()
        .add(&a.mul(&psi_p.mul(&v_p).add(&xi.mul(&tm1_p))))
        .sub(&two.mul(&b).mul(&tm1_p).mul(&v_p));
    let b_raw = xi.square().sub(&a.mul(&xi).mul(&v_p)).add(&b.mul(&v_p.square()));
    if delta.is_zero() {
        return Err(Error::DegenerateChange);
    }
    let a_new = a_raw.div(&delta).unwrap();
    let b_new = b_raw.div(&delta).unwrap();
    let new_ctx = NormContext::new(ctx.p, t_new, psi_new, one, a_new, b_new)?;
    assert!(new_ctx.delta().mul(&delta).is_one(), "delta' delta = 1");
    Ok(new_ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, primitive_root_of_unity};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn hand_ctx() -> NormContext {
        let f7 = make_field(7, 1).unwrap();
        NormContext::new(
            3,
            f7.from_int(2),
            f7.one(),
            f7.one(),
            f7.one(),
            f7.from_int(3),
        )
        .unwrap()
    }

    #[test]
    fn context_validation() {
        let f7 = make_field(7, 1).unwrap();
        // t = 3 has order 6, not 3
        assert!(matches!(
            NormContext::new(3, f7.from_int(3), f7.one(), f7.one(), f7.zero(), f7.zero()),
            Err(Error::InvalidNormContext(_))
        ));
        // t = 1 is only valid in characteristic p
        assert!(matches!(
            NormContext::new(3, f7.one(), f7.one(), f7.one(), f7.zero(), f7.zero()),
            Err(Error::InvalidNormContext(_))
        ));
        let f3 = make_field(3, 1).unwrap();
        assert!(NormContext::new(3, f3.one(), f3.one(), f3.one(), f3.zero(), f3.zero()).is_ok());
        assert!(matches!(
            NormContext::new(3, f3.one(), f3.zero(), f3.one(), f3.zero(), f3.zero()),
            Err(Error::InvalidNormContext(_))
        ));
    }

    #[test]
    fn partial_sums() {
        let ctx = hand_ctx();
        let f7 = ctx.field().clone();
        assert_eq!(ctx.partial_sum(0).unwrap(), f7.zero());
        assert_eq!(ctx.partial_sum(2).unwrap(), f7.from_int(3));
        assert_eq!(ctx.partial_sum(3).unwrap(), f7.zero());
        assert_eq!(
            ctx.partial_sum(4),
            Err(Error::IndexOutOfRange { i: 4, max: 3 })
        );
        // t = 1: t^{[i]} = i
        let f3 = make_field(3, 1).unwrap();
        let w = NormContext::new(3, f3.one(), f3.one(), f3.one(), f3.zero(), f3.zero()).unwrap();
        for i in 0..=3 {
            assert_eq!(w.partial_sum(i).unwrap(), f3.from_int(i as i64));
        }
    }

    #[test]
    fn norm_poly_examples() {
        let ctx = hand_ctx();
        let f7 = ctx.field().clone();
        assert_eq!(ctx.norm_poly(), Poly::from_ints(&f7, &[0, 3, 3, 1]));

        let f3 = make_field(3, 1).unwrap();
        let w = NormContext::new(3, f3.one(), f3.one(), f3.one(), f3.zero(), f3.zero()).unwrap();
        assert_eq!(w.norm_poly(), Poly::from_ints(&f3, &[0, -1, 0, 1]));

        // psi = 0 collapses every root to 0
        let z = NormContext::new(
            3,
            f7.from_int(2),
            f7.zero(),
            f7.one(),
            f7.zero(),
            f7.one(),
        )
        .unwrap();
        assert_eq!(z.norm_poly(), Poly::from_ints(&f7, &[0, 0, 0, 1]));
    }

    #[test]
    fn omega_examples() {
        let ctx = hand_ctx();
        let (omega, checked) = ctx.omega_and_p_identity();
        assert_eq!(omega, ctx.field().from_int(3));
        assert!(checked);

        let f3 = make_field(3, 1).unwrap();
        let w = NormContext::new(3, f3.one(), f3.one(), f3.one(), f3.zero(), f3.zero()).unwrap();
        let (omega, checked) = w.omega_and_p_identity();
        assert_eq!(omega, f3.from_int(2));
        assert!(!checked);
    }

    #[test]
    fn omega_identity_exhaustive_over_order_p_elements() {
        for (p, q) in [(3u64, 7u64), (3, 13), (5, 11), (5, 31), (7, 29)] {
            let f = make_field(q, 1).unwrap();
            let z = primitive_root_of_unity(&f, p).unwrap();
            let mut t = z.clone();
            for _ in 1..p {
                let ctx =
                    NormContext::new(p, t.clone(), f.zero(), f.one(), f.zero(), f.one()).unwrap();
                let (_, checked) = ctx.omega_and_p_identity();
                assert!(checked, "p = {p}, q = {q}");
                t = t.mul(&z);
            }
        }
    }

    #[test]
    fn h_and_delta_hand_instance() {
        let ctx = hand_ctx();
        let f7 = ctx.field().clone();
        let (h, delta) = ctx.build_h_delta();
        assert_eq!(delta, f7.from_int(3));
        assert_eq!(h.deg(), Some(6));
        let n = ctx.norm_poly();
        let expect = n.mul(&n).add(&n).add(&Poly::from_ints(&f7, &[3]));
        assert_eq!(h, expect);

        // psi = 0: delta = B(t-1)^{2p}
        let z = NormContext::new(3, f7.from_int(2), f7.zero(), f7.one(), f7.one(), f7.from_int(3))
            .unwrap();
        let (_, dz) = z.build_h_delta();
        assert_eq!(dz, f7.from_int(3).mul(&f7.one().pow(6)));

        // t = 1, psi = 1, U = 1: delta = 1
        let f5 = make_field(5, 1).unwrap();
        let w = NormContext::new(5, f5.one(), f5.one(), f5.one(), f5.from_int(2), f5.from_int(3))
            .unwrap();
        let (_, dw) = w.build_h_delta();
        assert!(dw.is_one());
    }

    #[test]
    fn resultant_identity_hand_instance() {
        let ctx = hand_ctx();
        assert_eq!(ctx.verify_resultant_identity(), Ok(true));
        let (h, _) = ctx.build_h_delta();
        let lhs = resultant(&h, &h.derivative()).unwrap();
        assert_eq!(lhs, ctx.field().from_int(2));
    }

    #[test]
    fn resultant_identity_randomized() {
        let cases = [(3u64, 7u64), (3, 31), (5, 11), (7, 29)];
        let mut rng = StdRng::seed_from_u64(40);
        for (p, q) in cases {
            let f = make_field(q, 1).unwrap();
            let z = primitive_root_of_unity(&f, p).unwrap();
            for _ in 0..200 {
                let t = z.pow(rng.gen_range(1..p));
                let psi = f.from_index(rng.gen_range(0..q));
                let u = f.from_index(rng.gen_range(1..q));
                let a = f.from_index(rng.gen_range(0..q));
                let b = f.from_index(rng.gen_range(0..q));
                let ctx = NormContext::new(p, t, psi, u, a, b).unwrap();
                assert_eq!(ctx.verify_resultant_identity(), Ok(true), "p = {p}, q = {q}");
            }
        }
    }

    #[test]
    fn resultant_identity_needs_tame_t() {
        let f3 = make_field(3, 1).unwrap();
        let w = NormContext::new(3, f3.one(), f3.one(), f3.one(), f3.zero(), f3.one()).unwrap();
        assert_eq!(w.verify_resultant_identity(), Err(Error::TEqualsOne));
    }

    #[test]
    fn wild_j_values() {
        let ctx = hand_ctx();
        assert_eq!(ctx.wild_j().unwrap(), ctx.field().one());

        // t = 1, psi = 1, U = 1: j = 1/(A² - 4B)
        let f5 = make_field(5, 1).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let ctx = NormContext::new(
                    5,
                    f5.one(),
                    f5.one(),
                    f5.one(),
                    f5.from_int(a),
                    f5.from_int(b),
                )
                .unwrap();
                let disc = f5.from_int(a * a - 4 * b);
                match ctx.wild_j() {
                    Ok(j) => assert_eq!(j, disc.inv().unwrap()),
                    Err(Error::SingularConfiguration) => assert!(disc.is_zero()),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn affine_changes_preserve_j() {
        let mut rng = StdRng::seed_from_u64(41);
        for (p, q) in [(3u64, 7u64), (3, 31), (5, 11), (7, 29)] {
            let f = make_field(q, 1).unwrap();
            let z = primitive_root_of_unity(&f, p).unwrap();
            let mut done = 0;
            while done < 100 {
                let t = z.pow(rng.gen_range(1..p));
                let psi = f.from_index(rng.gen_range(0..q));
                let u = f.from_index(rng.gen_range(1..q));
                let a = f.from_index(rng.gen_range(0..q));
                let b = f.from_index(rng.gen_range(0..q));
                let ctx = NormContext::new(p, t, psi, u, a, b).unwrap();
                let alpha = f.from_index(rng.gen_range(1..q));
                let beta = f.from_index(rng.gen_range(0..q));
                let (_, report) =
                    change_coordinates(&ctx, CoordChange::Affine { alpha, beta }).unwrap();
                assert!(report.preserved);
                done += 1;
            }
        }
    }

    #[test]
    fn affine_identity_change() {
        let ctx = hand_ctx();
        let f = ctx.field().clone();
        let (new_ctx, report) = change_coordinates(
            &ctx,
            CoordChange::Affine { alpha: f.one(), beta: f.zero() },
        )
        .unwrap();
        assert_eq!(report.j_before, report.j_after);
        assert_eq!(new_ctx.coefficients().1, ctx.coefficients().1);
        assert_eq!(new_ctx.coefficients().2, ctx.coefficients().2);
        assert_eq!(
            change_coordinates(
                &ctx,
                CoordChange::Affine { alpha: f.zero(), beta: f.zero() }
            )
            .err(),
            Some(Error::DegenerateChange)
        );
    }

    #[test]
    fn delta_swap_preserves_j() {
        let mut rng = StdRng::seed_from_u64(42);
        for (p, q) in [(3u64, 7u64), (3, 31), (5, 11), (7, 29)] {
            let f = make_field(q, 1).unwrap();
            let z = primitive_root_of_unity(&f, p).unwrap();
            let mut done = 0;
            while done < 100 {
                let t = z.pow(rng.gen_range(1..p));
                let psi = f.from_index(rng.gen_range(0..q));
                let u = f.from_index(rng.gen_range(1..q));
                let a = f.from_index(rng.gen_range(0..q));
                let b = f.from_index(rng.gen_range(0..q));
                let ctx = NormContext::new(p, t.clone(), psi.clone(), u, a, b).unwrap();
                let swapped = change_coordinates(&ctx, CoordChange::DeltaSwap);
                if matches!(swapped, Err(Error::DegenerateChange)) {
                    // delta = 0: the swap renormalization divides by delta
                    continue;
                }
                let (new_ctx, report) = swapped.unwrap();
                assert!(report.preserved);
                assert_eq!(new_ctx.t(), &t.inv().unwrap());
                // second Bezout choice when psi is invertible
                if !psi.is_zero() {
                    let (_, report2) = change_coordinates(
                        &ctx,
                        CoordChange::DeltaSwapWith { u: f.zero(), v: psi.inv().unwrap() },
                    )
                    .unwrap();
                    assert!(report2.preserved);
                    assert_eq!(report.j_after, report2.j_after);
                }
                done += 1;
            }
        }
    }

    #[test]
    fn delta_swap_char_p() {
        // t = 1 in characteristic p: swap keeps t = 1, inverts psi
        for (p, s) in [(3u64, 1usize), (3, 2), (5, 1)] {
            let f = make_field(p, s).unwrap();
            for a_idx in 0..f.q().min(6) {
                for b_idx in 0..f.q().min(6) {
                    let ctx = NormContext::new(
                        p,
                        f.one(),
                        f.from_int(2),
                        f.one(),
                        f.from_index(a_idx),
                        f.from_index(b_idx),
                    )
                    .unwrap();
                    let (new_ctx, report) =
                        change_coordinates(&ctx, CoordChange::DeltaSwap).unwrap();
                    assert!(report.preserved);
                    assert!(new_ctx.t().is_one());
                }
            }
        }
    }

    #[test]
    fn delta_swap_rejects_bad_bezout() {
        let ctx = hand_ctx();
        let f = ctx.field().clone();
        assert_eq!(
            change_coordinates(
                &ctx,
                CoordChange::DeltaSwapWith { u: f.zero(), v: f.zero() }
            )
            .err(),
            Some(Error::DegenerateChange)
        );
    }

    #[test]
    fn invariant_subspaces() {
        assert!(hand_ctx().invariant_subspace_check());

        let f5 = make_field(5, 1).unwrap();
        let w = NormContext::new(5, f5.one(), f5.one(), f5.one(), f5.zero(), f5.zero()).unwrap();
        assert!(w.invariant_subspace_check());
        assert_eq!(w.norm_poly(), Poly::from_ints(&f5, &[0, -1, 0, 0, 0, 1]));

        let f7 = make_field(7, 1).unwrap();
        let diag =
            NormContext::new(3, f7.from_int(2), f7.zero(), f7.one(), f7.zero(), f7.one()).unwrap();
        assert!(diag.invariant_subspace_check());
        assert_eq!(diag.norm_poly(), Poly::from_ints(&f7, &[0, 0, 0, 1]));
    }
}
