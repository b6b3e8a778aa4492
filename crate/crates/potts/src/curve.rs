//! Hyperelliptic models y^2 = x^{2N} + Ax^N + B (N odd, char prime to 2N) and
//! y^2 = (x^p - x)^2 + A(x^p - x) + B (N = p = char), their branch data,
//! modular invariant, explicit automorphisms, isomorphism tests, and the
//! automorphism-group classification with an independent stabilizer oracle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{
    primitive_root_of_unity, square_root, Embedding, Field, FieldElem,
};
use crate::pgl2::{
    classify_subgroup, order_by_powering, stabilizer_of_set, ProjMap, ProjPoint, SubgroupClass,
};
use crate::poly::{
    extension_with_embedding, roots_in_field, roots_over_splitting_field, Poly,
    DEFAULT_SPLITTING_CAP,
};

pub const CURVE_SPLITTING_CAP: usize = DEFAULT_SPLITTING_CAP;
/// Branch splitting fields can reach F_{5^10}; leave headroom past the
/// library-wide default.
pub const CURVE_FIELD_CAP: u64 = 1 << 24;
// Sampling and lifting only do arithmetic (never enumeration), so a large
// quadratic extension is harmless.
const SAMPLING_FIELD_CAP: u64 = 1 << 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Tame,
    Wild,
}

/// A curve model. Tame: y^2 = x^{2N} + Ax^N + B over a field of
/// characteristic prime to 2N. Wild: y^2 = (x^p - x)^2 + A(x^p - x) + B with
/// N = p the characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PottsModel {
    Tame { n: u64, a: FieldElem, b: FieldElem },
    Wild { n: u64, a: FieldElem, b: FieldElem },
}

/// a^2 - 4b.
fn discriminant(a: &FieldElem, b: &FieldElem) -> FieldElem {
    a.square().sub(&a.field().from_int(4).mul(b))
}

impl PottsModel {
    pub fn tame(n: u64, a: FieldElem, b: FieldElem) -> PottsModel {
        PottsModel::Tame { n, a, b }
    }

    pub fn wild(n: u64, a: FieldElem, b: FieldElem) -> PottsModel {
        PottsModel::Wild { n, a, b }
    }

    pub fn variant(&self) -> Variant {
        match self {
            PottsModel::Tame { .. } => Variant::Tame,
            PottsModel::Wild { .. } => Variant::Wild,
        }
    }

    pub fn n(&self) -> u64 {
        match self {
            PottsModel::Tame { n, .. } | PottsModel::Wild { n, .. } => *n,
        }
    }

    pub fn a(&self) -> &FieldElem {
        match self {
            PottsModel::Tame { a, .. } | PottsModel::Wild { a, .. } => a,
        }
    }

    pub fn b(&self) -> &FieldElem {
        match self {
            PottsModel::Tame { b, .. } | PottsModel::Wild { b, .. } => b,
        }
    }

    pub fn field(&self) -> &Field {
        self.a().field()
    }

    /// Variant shape and smoothness checks; no splitting-field work.
    pub fn check_basic(&self) -> Result<()> {
        if self.a().field() != self.b().field() {
            return Err(Error::MixedFields);
        }
        match self {
            PottsModel::Tame { n, a, b } => {
                if *n < 3 || n % 2 == 0 {
                    return Err(Error::EvenN(*n));
                }
                if (2 * n) % a.field().p() == 0 {
                    return Err(Error::WrongCharacteristic);
                }
                if b.is_zero() || discriminant(a, b).is_zero() {
                    return Err(Error::SingularModel);
                }
            }
            PottsModel::Wild { n, a, b } => {
                if *n != a.field().p() {
                    return Err(Error::WrongCharacteristic);
                }
                if discriminant(a, b).is_zero() {
                    return Err(Error::SingularModel);
                }
            }
        }
        Ok(())
    }

    /// The right-hand side of y^2 = f(x).
    pub fn curve_poly(&self) -> Poly {
        let f = self.field();
        match self {
            PottsModel::Tame { n, a, b } => {
                let mut c = vec![f.zero(); 2 * *n as usize + 1];
                c[0] = b.clone();
                c[*n as usize] = a.clone();
                c[2 * *n as usize] = f.one();
                Poly::new(f, c)
            }
            PottsModel::Wild { n, a, b } => {
                let w = Poly::monomial(f.one(), *n as usize).sub(&Poly::x(f));
                w.mul(&w).add(&w.scale(a)).add(&Poly::constant(b.clone()))
            }
        }
    }

    /// Modular invariant: B/(A^2-4B) tame, 1/(A^2-4B) wild. Nonzero on any
    /// smooth model.
    pub fn j_invariant(&self) -> Result<FieldElem> {
        self.check_basic()?;
        let d = discriminant(self.a(), self.b());
        match self {
            PottsModel::Tame { b, .. } => b.div(&d),
            PottsModel::Wild { .. } => d.inv(),
        }
    }

    pub fn map_coeffs(&self, emb: &Embedding) -> PottsModel {
        match self {
            PottsModel::Tame { n, a, b } => {
                PottsModel::Tame { n: *n, a: emb.apply(a), b: emb.apply(b) }
            }
            PottsModel::Wild { n, a, b } => {
                PottsModel::Wild { n: *n, a: emb.apply(a), b: emb.apply(b) }
            }
        }
    }

    /// The model with x scaled by lambda: (A, B) -> (l^N A, l^{2N} B). Keeps
    /// the invariant.
    pub fn lambda_twist(&self, lambda: &FieldElem) -> Result<PottsModel> {
        match self {
            PottsModel::Tame { n, a, b } => {
                if lambda.is_zero() {
                    return Err(Error::ZeroElement);
                }
                let ln = lambda.pow(*n);
                Ok(PottsModel::Tame { n: *n, a: ln.mul(a), b: ln.square().mul(b) })
            }
            PottsModel::Wild { .. } => Err(Error::VariantMismatch),
        }
    }

    /// The model with x shifted so that x^p - x picks up w:
    /// (A, B) -> (A + 2w, B + wA + w^2). Keeps the invariant.
    pub fn shift_twist(&self, w: &FieldElem) -> Result<PottsModel> {
        match self {
            PottsModel::Wild { n, a, b } => {
                let two_w = w.add(w);
                Ok(PottsModel::Wild {
                    n: *n,
                    a: a.add(&two_w),
                    b: b.add(&w.mul(a)).add(&w.square()),
                })
            }
            PottsModel::Tame { .. } => Err(Error::VariantMismatch),
        }
    }

    pub fn validate(&self) -> Result<BranchData> {
        self.validate_with_caps(CURVE_SPLITTING_CAP, CURVE_FIELD_CAP)
    }

    /// Full validation: branch locus over its splitting field, orbit
    /// structure and stability under the induced x -> zeta x or x -> x + 1,
    /// and the genus recomputed from the branch count.
    pub fn validate_with_caps(&self, splitting_cap: usize, field_cap: u64) -> Result<BranchData> {
        self.check_basic()?;
        let n = self.n();
        let f = self.curve_poly();
        let sd = roots_over_splitting_field(&f, splitting_cap, field_cap)?;
        let k = sd.field.clone();
        assert!(
            sd.roots.iter().all(|(_, m)| *m == 1) && sd.roots.len() == 2 * n as usize,
            "a smooth model has 2N simple branch values"
        );
        let a_k = sd.embedding.apply(self.a());
        let b_k = sd.embedding.apply(self.b());

        // partition by x^N (tame) or x^p - x (wild): the two orbit keys are
        // the roots of T^2 + AT + B
        let key = |x: &FieldElem| -> FieldElem {
            match self {
                PottsModel::Tame { n, .. } => x.pow(*n),
                PottsModel::Wild { n, .. } => x.pow(*n).sub(x),
            }
        };
        let mut keys: Vec<FieldElem> = Vec::new();
        for (r, _) in &sd.roots {
            let v = key(r);
            if !keys.contains(&v) {
                keys.push(v);
            }
        }
        keys.sort();
        assert_eq!(keys.len(), 2, "distinct quadratic roots on a smooth model");
        assert_eq!(keys[0].add(&keys[1]), a_k.neg(), "orbit keys solve T^2 + AT + B");
        assert_eq!(keys[0].mul(&keys[1]), b_k, "orbit keys solve T^2 + AT + B");

        let mut orbits = [Vec::new(), Vec::new()];
        for (r, _) in &sd.roots {
            let idx = usize::from(key(r) != keys[0]);
            orbits[idx].push(r.clone());
        }
        orbits[0].sort();
        orbits[1].sort();
        assert!(orbits.iter().all(|o| o.len() == n as usize), "two orbits of size N");

        let sigma0 = match self {
            PottsModel::Tame { .. } => {
                let zeta = primitive_root_of_unity(&k, n)
                    .expect("the branch splitting field contains the N-th roots of unity");
                ProjMap::new(&k, [zeta, k.zero(), k.zero(), k.one()]).expect("diagonal map")
            }
            PottsModel::Wild { .. } => {
                ProjMap::from_ints(&k, [1, 1, 0, 1]).expect("translation map")
            }
        };
        let set: BTreeSet<FieldElem> = sd.roots.iter().map(|(r, _)| r.clone()).collect();
        for r in &set {
            let image = match sigma0.apply(&ProjPoint::Finite(r.clone())).expect("finite orbit") {
                ProjPoint::Finite(v) => v,
                ProjPoint::Infinity => unreachable!("branch values are finite"),
            };
            assert!(set.contains(&image), "branch set is stable under the induced map");
        }

        // Riemann-Hurwitz for the degree-2 quotient map to a genus-0 base:
        // 2g - 2 = 2(0 - 2) + |branch set|
        let genus = (sd.roots.len() as u64 - 2) / 2;
        assert_eq!(genus, n - 1, "genus N - 1 from the branch count");

        let wild_roots = match self {
            PottsModel::Wild { .. } => Some(WildRootData {
                r: keys[0].clone(),
                s: keys[1].clone(),
                alpha: orbits[0][0].clone(),
                beta: orbits[1][0].clone(),
            }),
            PottsModel::Tame { .. } => None,
        };
        let mut points: Vec<ProjPoint> =
            sd.roots.iter().map(|(r, _)| ProjPoint::Finite(r.clone())).collect();
        points.sort();
        Ok(BranchData {
            field: k,
            embedding: sd.embedding,
            points,
            orbits,
            sigma0,
            wild_roots,
            genus,
        })
    }
}

/// Quadratic roots r, s of T^2 + AT + B and one translation-orbit
/// representative for each.
#[derive(Clone, Debug)]
pub struct WildRootData {
    pub r: FieldElem,
    pub s: FieldElem,
    pub alpha: FieldElem,
    pub beta: FieldElem,
}

/// The branch locus of a validated model, over its splitting field.
#[derive(Clone, Debug)]
pub struct BranchData {
    pub field: Field,
    pub embedding: Embedding,
    /// 2N pairwise distinct finite points, sorted.
    pub points: Vec<ProjPoint>,
    /// The two orbits under the induced map, each of size N, sorted.
    pub orbits: [Vec<FieldElem>; 2],
    /// x -> zeta x (tame) or x -> x + 1 (wild) over the splitting field.
    pub sigma0: ProjMap,
    pub wild_roots: Option<WildRootData>,
    pub genus: u64,
}

/// The smooth model with a prescribed invariant: (1+4j, j(1+4j)), falling
/// back to (0, -1) when 1+4j = 0; wild variant (0, -1/(4j)).
pub fn canonical_model_from_j(n: u64, j: &FieldElem, variant: Variant) -> Result<PottsModel> {
    let f = j.field().clone();
    if j.is_zero() {
        return Err(Error::SingularModel);
    }
    let model = match variant {
        Variant::Tame => {
            let t = f.one().add(&f.from_int(4).mul(j));
            if t.is_zero() {
                PottsModel::Tame { n, a: f.zero(), b: f.from_int(-1) }
            } else {
                PottsModel::Tame { n, a: t.clone(), b: j.mul(&t) }
            }
        }
        Variant::Wild => {
            let b = f.from_int(4).mul(j).inv()?.neg();
            PottsModel::Wild { n, a: f.zero(), b }
        }
    };
    model.check_basic()?;
    assert_eq!(model.j_invariant()?, *j, "canonical model reproduces its invariant");
    Ok(model)
}

/// An automorphism of a model: x -> (ax+b)/(cx+d), y -> e y / (cx+d)^N,
/// stored normalized (first nonzero matrix entry 1, e scaled by the same
/// factor to the N-th power).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismMap {
    field: Field,
    half: u64,
    m: [FieldElem; 4],
    e: FieldElem,
}

impl AutomorphismMap {
    pub fn new(field: &Field, m: [FieldElem; 4], e: FieldElem, n: u64) -> Result<AutomorphismMap> {
        let det = m[0].mul(&m[3]).sub(&m[1].mul(&m[2]));
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let lead = m.iter().find(|v| !v.is_zero()).expect("nonsingular").clone();
        let inv = lead.inv().expect("nonzero");
        let m = [m[0].mul(&inv), m[1].mul(&inv), m[2].mul(&inv), m[3].mul(&inv)];
        let e = e.mul(&inv.pow(n));
        Ok(AutomorphismMap { field: field.clone(), half: n, m, e })
    }

    pub fn identity(field: &Field, n: u64) -> AutomorphismMap {
        let m = [field.one(), field.zero(), field.zero(), field.one()];
        AutomorphismMap::new(field, m, field.one(), n).expect("identity")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElem; 4] {
        &self.m
    }

    pub fn scalar(&self) -> &FieldElem {
        &self.e
    }

    pub fn proj(&self) -> ProjMap {
        ProjMap::new(&self.field, self.m.clone()).expect("nonsingular")
    }

    pub fn is_identity(&self) -> bool {
        self.m[1].is_zero()
            && self.m[2].is_zero()
            && self.m[0] == self.m[3]
            && self.m[0].is_one()
            && self.e.is_one()
    }

    /// self after rhs.
    pub fn compose(&self, rhs: &AutomorphismMap) -> Result<AutomorphismMap> {
        if self.field != rhs.field {
            return Err(Error::MixedFields);
        }
        assert_eq!(self.half, rhs.half, "automorphisms of the same model");
        let a = &self.m;
        let b = &rhs.m;
        let m = [
            a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
            a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
            a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
            a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
        ];
        AutomorphismMap::new(&self.field, m, self.e.mul(&rhs.e), self.half)
    }

    pub fn inverse(&self) -> AutomorphismMap {
        let adj = [self.m[3].clone(), self.m[1].neg(), self.m[2].neg(), self.m[0].clone()];
        let det = self.m[0].mul(&self.m[3]).sub(&self.m[1].mul(&self.m[2]));
        let e = det.pow(self.half).div(&self.e).expect("nonzero");
        let inv = AutomorphismMap::new(&self.field, adj, e, self.half).expect("nonsingular");
        debug_assert!(self.compose(&inv).expect("same field").is_identity());
        inv
    }

    pub fn pow(&self, k: u64) -> AutomorphismMap {
        let mut acc = AutomorphismMap::identity(&self.field, self.half);
        for _ in 0..k {
            acc = acc.compose(self).expect("same field");
        }
        acc
    }

    pub fn order(&self, cap: u64) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self).expect("same field");
            k += 1;
            assert!(k <= cap, "order exceeded the cap");
        }
        k
    }

    /// Image of an affine point; None at a pole of the x-part.
    pub fn apply(&self, x: &FieldElem, y: &FieldElem) -> Option<(FieldElem, FieldElem)> {
        let den = self.m[2].mul(x).add(&self.m[3]);
        if den.is_zero() {
            return None;
        }
        let num = self.m[0].mul(x).add(&self.m[1]);
        let px = num.div(&den).expect("nonzero");
        let py = self.e.mul(y).div(&den.pow(self.half)).expect("nonzero");
        Some((px, py))
    }

    pub fn map(&self, emb: &Embedding) -> AutomorphismMap {
        assert!(self.field == *emb.from_field(), "embedding from the map's field");
        let m = [
            emb.apply(&self.m[0]),
            emb.apply(&self.m[1]),
            emb.apply(&self.m[2]),
            emb.apply(&self.m[3]),
        ];
        AutomorphismMap { field: emb.to_field().clone(), half: self.half, m, e: emb.apply(&self.e) }
    }
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub sigma_power_trivial: bool,
    pub tau_involution: bool,
    pub mu_involution: bool,
    pub mu_inverts_sigma: bool,
    pub tau_central: bool,
    /// Points that ran the whole sampled battery (at least 20).
    pub points_checked: usize,
    pub points_on_curve: bool,
    pub words_hold: bool,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.sigma_power_trivial
            && self.tau_involution
            && self.mu_involution
            && self.mu_inverts_sigma
            && self.tau_central
            && self.points_checked >= 20
            && self.points_on_curve
            && self.words_hold
    }
}

/// The named generators over the smallest field carrying them, with the
/// relation report.
#[derive(Clone, Debug)]
pub struct AutomorphismSet {
    pub field: Field,
    /// model field -> `field`
    pub embedding: Embedding,
    pub sigma: AutomorphismMap,
    pub tau: AutomorphismMap,
    pub mu: AutomorphismMap,
    pub report: RelationReport,
}

fn sample_curve_points(f: &Poly, want: usize) -> Vec<(FieldElem, FieldElem)> {
    let field = f.field().clone();
    let mut out = Vec::new();
    for x in field.elements() {
        let v = f.eval(&x);
        if let Some(r) = square_root(&v) {
            out.push((x.clone(), r.clone()));
            if !r.is_zero() {
                out.push((x, r.neg()));
            }
        }
        if out.len() >= want {
            break;
        }
    }
    out
}

fn relation_report(
    f: &Poly,
    sigma: &AutomorphismMap,
    tau: &AutomorphismMap,
    mu: &AutomorphismMap,
    n: u64,
) -> RelationReport {
    let sigma_power_trivial = sigma.pow(n).is_identity();
    let tau_involution = tau.compose(tau).expect("same field").is_identity();
    let mu_involution = mu.compose(mu).expect("same field").is_identity();
    let conj =
        mu.compose(sigma).expect("same field").compose(&mu.inverse()).expect("same field");
    let mu_inverts_sigma = conj == sigma.inverse();
    let tau_central = tau.compose(sigma).expect("same field")
        == sigma.compose(tau).expect("same field")
        && tau.compose(mu).expect("same field") == mu.compose(tau).expect("same field");

    let mut f2 = f.clone();
    let (mut s2, mut t2, mut m2) = (sigma.clone(), tau.clone(), mu.clone());
    let mut checked = 0usize;
    let mut on_curve = true;
    let mut words = true;
    for round in 0.. {
        let pts = sample_curve_points(&f2, 48);
        let sinv = s2.inverse();
        checked = 0;
        for (x, y) in &pts {
            let mut pole_free = true;
            for map in [&s2, &t2, &m2] {
                match map.apply(x, y) {
                    Some((px, py)) => {
                        if f2.eval(&px) != py.square() {
                            on_curve = false;
                        }
                    }
                    None => pole_free = false,
                }
            }
            if !pole_free {
                continue;
            }
            let lhs = m2
                .apply(x, y)
                .and_then(|(u, v)| s2.apply(&u, &v))
                .and_then(|(u, v)| m2.apply(&u, &v));
            let rhs = sinv.apply(x, y);
            if let (Some(l), Some(r)) = (lhs, rhs) {
                if l != r {
                    words = false;
                }
                let back = t2.apply(x, y).and_then(|(u, v)| t2.apply(&u, &v));
                if back.as_ref() != Some(&(x.clone(), y.clone())) {
                    words = false;
                }
                checked += 1;
            }
        }
        if checked >= 20 {
            break;
        }
        assert!(round < 2, "point sampling exhausted two quadratic extensions");
        let (_, e3) = extension_with_embedding(f2.field(), 2, SAMPLING_FIELD_CAP)
            .expect("sampling extension");
        f2 = f2.map_coeffs(&e3);
        s2 = s2.map(&e3);
        t2 = t2.map(&e3);
        m2 = m2.map(&e3);
    }
    RelationReport {
        sigma_power_trivial,
        tau_involution,
        mu_involution,
        mu_inverts_sigma,
        tau_central,
        points_checked: checked,
        points_on_curve: on_curve,
        words_hold: words,
    }
}

/// sigma: x -> zeta x (tame) or x -> x+1 (wild); tau: y -> -y; mu: the
/// inverting involution B^{1/N}/x (tame) or alpha + beta - x (wild).
/// Verified symbolically and on sampled points.
pub fn automorphisms(model: &PottsModel) -> Result<AutomorphismSet> {
    let bd = model.validate()?;
    let n = model.n();
    let (field, embedding, sigma, tau, mu) = match model {
        PottsModel::Tame { .. } => {
            let k = bd.field.clone();
            let b_k = bd.embedding.apply(model.b());
            let zeta = primitive_root_of_unity(&k, n)
                .expect("the branch splitting field contains the N-th roots of unity");
            // mu needs an N-th root and a square root of B
            let radicand = Poly::monomial(k.one(), n as usize)
                .sub(&Poly::constant(b_k.clone()))
                .mul(&Poly::monomial(k.one(), 2).sub(&Poly::constant(b_k.clone())));
            let sd = roots_over_splitting_field(&radicand, CURVE_SPLITTING_CAP, CURVE_FIELD_CAP)
                .map_err(|e| match e {
                    Error::SplittingCapExceeded(_) | Error::SizeCapExceeded { .. } => {
                        Error::RootExtractionFailed
                    }
                    other => other,
                })?;
            let k2 = sd.field.clone();
            let b2 = sd.embedding.apply(&b_k);
            let nth = sd
                .roots
                .iter()
                .map(|(r, _)| r)
                .find(|r| r.pow(n) == b2)
                .expect("an N-th root of B in the radical splitting field")
                .clone();
            let sq = sd
                .roots
                .iter()
                .map(|(r, _)| r)
                .find(|r| r.square() == b2)
                .expect("a square root of B in the radical splitting field")
                .clone();
            let zeta2 = sd.embedding.apply(&zeta);
            let sigma =
                AutomorphismMap::new(&k2, [zeta2, k2.zero(), k2.zero(), k2.one()], k2.one(), n)?;
            let tau = AutomorphismMap::new(
                &k2,
                [k2.one(), k2.zero(), k2.zero(), k2.one()],
                k2.from_int(-1),
                n,
            )?;
            let mu = AutomorphismMap::new(&k2, [k2.zero(), nth, k2.one(), k2.zero()], sq, n)?;
            let embedding = bd.embedding.compose(&sd.embedding)?;
            (k2, embedding, sigma, tau, mu)
        }
        PottsModel::Wild { .. } => {
            let k = bd.field.clone();
            let wr = bd.wild_roots.as_ref().expect("wild branch data");
            let c = wr.alpha.add(&wr.beta);
            let sigma = AutomorphismMap::new(
                &k,
                [k.one(), k.one(), k.zero(), k.one()],
                k.one(),
                n,
            )?;
            let tau = AutomorphismMap::new(
                &k,
                [k.one(), k.zero(), k.zero(), k.one()],
                k.from_int(-1),
                n,
            )?;
            let mu = AutomorphismMap::new(
                &k,
                [k.from_int(-1), c, k.zero(), k.one()],
                k.one(),
                n,
            )?;
            (k.clone(), bd.embedding.clone(), sigma, tau, mu)
        }
    };
    let f2 = model.map_coeffs(&embedding).curve_poly();
    let report = relation_report(&f2, &sigma, &tau, &mu, n);
    Ok(AutomorphismSet { field, embedding, sigma, tau, mu, report })
}

/// e^2 with f(gx)(cx+d)^{2N} = e^2 f(x); constant because g permutes the
/// roots of f and fixes no root at infinity.
fn lift_scalar_square(f: &Poly, g: &ProjMap, two_n: u64) -> FieldElem {
    let field = f.field().clone();
    let m = g.entries();
    let mut found: Option<FieldElem> = None;
    let mut confirmations = 0;
    for i in 0..field.q() {
        let x = field.from_index(i);
        let den = m[2].mul(&x).add(&m[3]);
        let fx = f.eval(&x);
        if den.is_zero() || fx.is_zero() {
            continue;
        }
        let px = m[0].mul(&x).add(&m[1]).div(&den).expect("nonzero");
        let val = f.eval(&px).mul(&den.pow(two_n)).div(&fx).expect("nonzero");
        match &found {
            None => found = Some(val),
            Some(prev) => assert_eq!(*prev, val, "lift scalar is constant"),
        }
        confirmations += 1;
        if confirmations == 3 {
            break;
        }
    }
    found.expect("a sample point off the branch set")
}

/// The two lifts of a branch-set-stabilizing Moebius map, over the branch
/// field or its quadratic extension when the scalar needs a square root.
pub fn lift_reduced(
    model: &PottsModel,
    bd: &BranchData,
    g: &ProjMap,
) -> Result<(AutomorphismMap, AutomorphismMap)> {
    assert!(g.field() == &bd.field, "reduced map over the branch field");
    let n = model.n();
    let f_k = model.map_coeffs(&bd.embedding).curve_poly();
    let e2 = lift_scalar_square(&f_k, g, 2 * n);
    let (field, entries, e) = match square_root(&e2) {
        Some(e) => (bd.field.clone(), g.entries().clone(), e),
        None => {
            let (k2, emb) = extension_with_embedding(&bd.field, 2, SAMPLING_FIELD_CAP)?;
            let m = g.entries();
            let entries = [
                emb.apply(&m[0]),
                emb.apply(&m[1]),
                emb.apply(&m[2]),
                emb.apply(&m[3]),
            ];
            let e = square_root(&emb.apply(&e2))
                .expect("a square in the quadratic extension");
            (k2, entries, e)
        }
    };
    let up = AutomorphismMap::new(&field, entries.clone(), e.clone(), n)?;
    let down = AutomorphismMap::new(&field, entries, e.neg(), n)?;
    Ok((up, down))
}

/// All lifts of a stabilizer, over one common quadratic extension of the
/// branch field (where every branch-field scalar is a square).
pub fn lift_all(
    model: &PottsModel,
    bd: &BranchData,
    stab: &[ProjMap],
) -> Result<Vec<AutomorphismMap>> {
    let n = model.n();
    let (k2, emb) = extension_with_embedding(&bd.field, 2, SAMPLING_FIELD_CAP)?;
    let full = bd.embedding.compose(&emb)?;
    let f2 = model.map_coeffs(&full).curve_poly();
    let mut out = Vec::with_capacity(2 * stab.len());
    for g in stab {
        let g2 = g.map(&emb);
        let e2 = lift_scalar_square(&f2, &g2, 2 * n);
        let e = square_root(&e2).expect("branch-field scalars are squares here");
        out.push(AutomorphismMap::new(&k2, g2.entries().clone(), e.clone(), n)?);
        out.push(AutomorphismMap::new(&k2, g2.entries().clone(), e.neg(), n)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoWitness {
    /// x -> lambda x; `inverted` marks the composite with the inverting
    /// involution (A2 = l^N A1/B1, B2 = l^{2N}/B1).
    Lambda { value: FieldElem, inverted: bool },
    /// x -> x + t with t^p - t = (A2 - A1)/2.
    Shift { value: FieldElem },
}

#[derive(Clone, Debug)]
pub struct IsoReport {
    pub geometric: bool,
    /// Tame only: the unordered pair {zeta, 1/zeta} agrees.
    pub chi_class_match: Option<bool>,
    /// Best-effort explicit witness over extensions up to the search cap.
    pub witness: Option<IsoWitness>,
}

/// The unordered pair {zeta, 1/zeta} over the smallest extension with N-th
/// roots of unity, canonically generated.
fn chi_class_pair(field: &Field, n: u64) -> Result<(FieldElem, FieldElem)> {
    let mut deg = 0usize;
    let mut qm = 1u64;
    for m in 1..=2 * n as usize {
        qm = (qm * (field.q() % n)) % n;
        if qm == 1 % n {
            deg = m;
            break;
        }
    }
    assert!(deg > 0, "q is invertible mod N");
    let (ext, _) = extension_with_embedding(field, deg, CURVE_FIELD_CAP)?;
    let zeta = primitive_root_of_unity(&ext, n)?;
    let inv = zeta.inv().expect("root of unity");
    Ok(if zeta <= inv { (zeta, inv) } else { (inv, zeta) })
}

/// Scaling witness in one fixed extension: the least lambda there (direct
/// case first) satisfying the full coefficient equations, or None.
pub(crate) fn lambda_witness_in_ext(
    m1: &PottsModel,
    m2: &PottsModel,
    ext: &Field,
    emb: &Embedding,
) -> Result<Option<IsoWitness>> {
    let n = m1.n();
    let (a1, b1) = (m1.a().clone(), m1.b().clone());
    let (a2, b2) = (m2.a().clone(), m2.b().clone());
    // (exponent, target power, inverted) per solvable case
    let mut cases: Vec<(u64, FieldElem, bool)> = Vec::new();
    if !a1.is_zero() && !a2.is_zero() {
        cases.push((n, a2.div(&a1)?, false));
        cases.push((n, a2.mul(&b1).div(&a1)?, true));
    } else if a1.is_zero() && a2.is_zero() {
        cases.push((2 * n, b2.div(&b1)?, false));
        cases.push((2 * n, b1.mul(&b2), true));
    }
    for (k, c, inverted) in cases {
        let target =
            Poly::monomial(ext.one(), k as usize).sub(&Poly::constant(emb.apply(&c)));
        for (lambda, _) in roots_in_field(&target) {
            let l2n = lambda.pow(2 * n);
            let ok = if inverted {
                emb.apply(&b2) == l2n.div(&emb.apply(&b1))?
                    && emb.apply(&a2) == lambda.pow(n).mul(&emb.apply(&a1)).div(&emb.apply(&b1))?
            } else {
                emb.apply(&b2) == l2n.mul(&emb.apply(&b1))
                    && emb.apply(&a2) == lambda.pow(n).mul(&emb.apply(&a1))
            };
            if ok {
                return Ok(Some(IsoWitness::Lambda { value: lambda, inverted }));
            }
        }
    }
    Ok(None)
}

pub(crate) fn search_lambda(
    m1: &PottsModel,
    m2: &PottsModel,
    cap: usize,
) -> Result<Option<(IsoWitness, usize)>> {
    let f = m1.field().clone();
    for m in 1..=cap {
        let (ext, emb) = match extension_with_embedding(&f, m, CURVE_FIELD_CAP) {
            Ok(v) => v,
            Err(Error::SizeCapExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        if let Some(w) = lambda_witness_in_ext(m1, m2, &ext, &emb)? {
            return Ok(Some((w, m)));
        }
    }
    Ok(None)
}

/// Translation witness in one fixed extension. x -> x + t rewrites (A, B) to
/// (A + 2w, B + wA + w^2) with w = t^p - t, so a pair not of that shape has
/// no shift witness at all, over any extension.
pub(crate) fn shift_witness_in_ext(
    m1: &PottsModel,
    m2: &PottsModel,
    ext: &Field,
    emb: &Embedding,
) -> Result<Option<IsoWitness>> {
    let f = m1.field().clone();
    let p = f.p();
    let w = m2.a().sub(m1.a()).div(&f.from_int(2))?;
    if *m2.b() != m1.b().add(&w.mul(m1.a())).add(&w.square()) {
        return Ok(None);
    }
    let target = Poly::monomial(ext.one(), p as usize)
        .sub(&Poly::x(ext))
        .sub(&Poly::constant(emb.apply(&w)));
    Ok(roots_in_field(&target)
        .into_iter()
        .next()
        .map(|(t, _)| IsoWitness::Shift { value: t }))
}

pub(crate) fn search_shift(
    m1: &PottsModel,
    m2: &PottsModel,
    cap: usize,
) -> Result<Option<(IsoWitness, usize)>> {
    let f = m1.field().clone();
    for m in 1..=cap {
        let (ext, emb) = match extension_with_embedding(&f, m, CURVE_FIELD_CAP) {
            Ok(v) => v,
            Err(Error::SizeCapExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        if let Some(w) = shift_witness_in_ext(m1, m2, &ext, &emb)? {
            return Ok(Some((w, m)));
        }
    }
    Ok(None)
}

/// Geometric isomorphism from the invariants, plus a best-effort explicit
/// witness over bounded extensions: lambda with (A2, B2) = (l^N A1, l^{2N} B1)
/// or (l^N A1/B1, l^{2N}/B1), or a translation root t^p - t = (A2 - A1)/2.
pub fn is_isomorphic(
    m1: &PottsModel,
    m2: &PottsModel,
    search_extension_cap: usize,
) -> Result<IsoReport> {
    if m1.field() != m2.field() {
        return Err(Error::MixedFields);
    }
    let same_shape = match (m1, m2) {
        (PottsModel::Tame { n: n1, .. }, PottsModel::Tame { n: n2, .. })
        | (PottsModel::Wild { n: n1, .. }, PottsModel::Wild { n: n2, .. }) => n1 == n2,
        _ => false,
    };
    if !same_shape {
        return Err(Error::VariantMismatch);
    }
    let j1 = m1.j_invariant()?;
    let j2 = m2.j_invariant()?;
    match m1 {
        PottsModel::Tame { n, .. } => {
            let chi = chi_class_pair(m1.field(), *n)? == chi_class_pair(m2.field(), *n)?;
            let geometric = j1 == j2 && chi;
            let witness = if geometric {
                search_lambda(m1, m2, search_extension_cap)?.map(|(w, _)| w)
            } else {
                None
            };
            Ok(IsoReport { geometric, chi_class_match: Some(chi), witness })
        }
        PottsModel::Wild { .. } => {
            let geometric = j1 == j2;
            let witness = if geometric {
                search_shift(m1, m2, search_extension_cap)?.map(|(w, _)| w)
            } else {
                None
            };
            Ok(IsoReport { geometric, chi_class_match: None, witness })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutTag {
    TwoTimesDihedralN,
    TwoTimesDihedral2N,
    RepGroupSym4,
    PGL2FiberProduct(u64),
    WildTwoTimesDihedralP,
}

impl fmt::Display for AutTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutTag::TwoTimesDihedralN => write!(f, "TwoTimesDihedralN"),
            AutTag::TwoTimesDihedral2N => write!(f, "TwoTimesDihedral2N"),
            AutTag::RepGroupSym4 => write!(f, "RepGroupSym4"),
            AutTag::PGL2FiberProduct(q) => write!(f, "PGL2FiberProduct({q})"),
            AutTag::WildTwoTimesDihedralP => write!(f, "WildTwoTimesDihedralP"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutClassification {
    pub tag: AutTag,
    pub order: u64,
    /// Order of the subgroup commuting with the distinguished x -> zeta x
    /// (resp. x -> x + 1): 2N generically, 4N at j = -1/4, 2p wild.
    pub equivariant_order: u64,
}

/// Decision procedure on (variant, N, p, j).
pub fn classify_aut(model: &PottsModel) -> Result<AutClassification> {
    let j = model.j_invariant()?;
    let f = model.field();
    let n = model.n();
    match model {
        PottsModel::Wild { .. } => Ok(AutClassification {
            tag: AutTag::WildTwoTimesDihedralP,
            order: 4 * n,
            equivariant_order: 2 * n,
        }),
        PottsModel::Tame { .. } => {
            let p = f.p();
            if n == 3 && p != 5 {
                let j54 = f.from_int(54).inv().expect("p prime to 54 here").neg();
                if j == j54 {
                    return Ok(AutClassification {
                        tag: AutTag::RepGroupSym4,
                        order: 48,
                        equivariant_order: 6,
                    });
                }
            }
            let quarter = f.from_int(4).inv().expect("odd characteristic").neg();
            if j == quarter {
                // 2N - 1 a power of the characteristic?
                let mut m = 2 * n - 1;
                while m % p == 0 {
                    m /= p;
                }
                if m == 1 {
                    let q = 2 * n - 1;
                    return Ok(AutClassification {
                        tag: AutTag::PGL2FiberProduct(q),
                        order: 2 * q * (q * q - 1),
                        equivariant_order: 4 * n,
                    });
                }
                return Ok(AutClassification {
                    tag: AutTag::TwoTimesDihedral2N,
                    order: 8 * n,
                    equivariant_order: 4 * n,
                });
            }
            Ok(AutClassification {
                tag: AutTag::TwoTimesDihedralN,
                order: 4 * n,
                equivariant_order: 2 * n,
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub g_order: u64,
    /// 2 |G|: the hyperelliptic involution is central and reduces onto G.
    pub aut_order: u64,
    /// 2 |centralizer of the induced map in G|.
    pub equivariant_order: u64,
    pub g_class: SubgroupClass,
}

/// Independent of the decision procedure: compute the branch set, enumerate
/// its stabilizer in PGL2 over the splitting field, classify it, and read the
/// orders off.
pub fn aut_order_oracle(model: &PottsModel) -> Result<OracleReport> {
    let bd = model.validate()?;
    let stab = stabilizer_of_set(&bd.points, &bd.field)?;
    assert!(stab.contains(&bd.sigma0), "the induced map stabilizes the branch set");
    let cent = stab
        .iter()
        .filter(|h| {
            h.compose(&bd.sigma0).expect("same field")
                == bd.sigma0.compose(h).expect("same field")
        })
        .count() as u64;
    let g_class = classify_subgroup(&stab)?;
    Ok(OracleReport {
        g_order: stab.len() as u64,
        aut_order: 2 * stab.len() as u64,
        equivariant_order: 2 * cent,
        g_class,
    })
}

/// S = M_zeta + (phi + 1/phi) id for a primitive 2N-th root phi with
/// phi^2 = zeta: a projective square root of M_zeta of order 2N.
pub fn quarter_j_square_root_check(n: u64, field: &Field) -> Result<ProjMap> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenN(n));
    }
    let phi = primitive_root_of_unity(field, 2 * n)?;
    let zeta = phi.square();
    let c = zeta.add(&zeta.inv().expect("root of unity"));
    let d = phi.add(&phi.inv().expect("root of unity"));
    let two = field.from_int(2);
    let mz = ProjMap::new(field, [c.clone(), c.sub(&two), field.one(), two.clone()])?;
    let s = ProjMap::new(field, [c.add(&d), c.sub(&two), field.one(), two.add(&d)])?;
    assert_eq!(s.compose(&s)?, mz, "S squares to M_zeta projectively");
    assert_eq!(order_by_powering(&s)?, 2 * n, "S has order 2N");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::pgl2::SubgroupTag;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn tame_m(p: u64, n: u64, a: i64, b: i64) -> PottsModel {
        let f = make_field(p, 1).unwrap();
        PottsModel::tame(n, f.from_int(a), f.from_int(b))
    }

    fn wild_m(p: u64, a: i64, b: i64) -> PottsModel {
        let f = make_field(p, 1).unwrap();
        PottsModel::wild(p, f.from_int(a), f.from_int(b))
    }

    #[test]
    fn validate_tame_branch_structure() {
        let m = tame_m(7, 3, 0, -1);
        let bd = m.validate().unwrap();
        assert_eq!(bd.points.len(), 6);
        assert_eq!(bd.genus, 2);
        assert_eq!(bd.field.q(), 7);
        let f7 = bd.field.clone();
        let orbit0: Vec<i64> = vec![1, 2, 4];
        let orbit1: Vec<i64> = vec![3, 5, 6];
        assert_eq!(bd.orbits[0], orbit0.iter().map(|&v| f7.from_int(v)).collect::<Vec<_>>());
        assert_eq!(bd.orbits[1], orbit1.iter().map(|&v| f7.from_int(v)).collect::<Vec<_>>());
        assert!(bd.wild_roots.is_none());
    }

    #[test]
    fn validate_wild_branch_structure() {
        let m = wild_m(3, 1, 2);
        let bd = m.validate().unwrap();
        assert_eq!(bd.points.len(), 6);
        assert_eq!(bd.genus, 2);
        assert_eq!(bd.field.degree(), 6);
        let wr = bd.wild_roots.as_ref().unwrap();
        let a = bd.embedding.apply(m.a());
        let b = bd.embedding.apply(m.b());
        assert_eq!(wr.r.add(&wr.s), a.neg());
        assert_eq!(wr.r.mul(&wr.s), b);
        assert_eq!(wr.alpha.pow(3).sub(&wr.alpha), wr.r);
        assert_eq!(wr.beta.pow(3).sub(&wr.beta), wr.s);
    }

    #[test]
    fn validate_rejects_bad_models() {
        assert_eq!(tame_m(7, 3, 2, 1).validate().unwrap_err(), Error::SingularModel);
        assert_eq!(tame_m(7, 3, 1, 0).validate().unwrap_err(), Error::SingularModel);
        assert_eq!(tame_m(3, 3, 1, 1).validate().unwrap_err(), Error::WrongCharacteristic);
        assert_eq!(tame_m(5, 5, 1, 1).validate().unwrap_err(), Error::WrongCharacteristic);
        assert_eq!(tame_m(7, 4, 1, 1).validate().unwrap_err(), Error::EvenN(4));
        let f5 = make_field(5, 1).unwrap();
        let bad = PottsModel::wild(3, f5.from_int(1), f5.from_int(1));
        assert_eq!(bad.validate().unwrap_err(), Error::WrongCharacteristic);
        assert_eq!(wild_m(3, 2, 1).validate().unwrap_err(), Error::SingularModel);
    }

    #[test]
    fn j_invariant_values() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(tame_m(7, 3, 0, -1).j_invariant().unwrap(), f7.from_int(5));
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(wild_m(3, 1, 2).j_invariant().unwrap(), f3.from_int(2));
        // (1 + 4j, j(1 + 4j)) reproduces j
        let f11 = make_field(11, 1).unwrap();
        for idx in 1..11 {
            let j = f11.from_index(idx);
            let t = f11.one().add(&f11.from_int(4).mul(&j));
            if t.is_zero() {
                continue;
            }
            let m = PottsModel::tame(3, t.clone(), j.mul(&t));
            assert_eq!(m.j_invariant().unwrap(), j);
        }
    }

    #[test]
    fn canonical_model_examples() {
        let f7 = make_field(7, 1).unwrap();
        let m = canonical_model_from_j(3, &f7.from_int(1), Variant::Tame).unwrap();
        assert_eq!(m, tame_m(7, 3, 5, 5));
        let m = canonical_model_from_j(3, &f7.from_int(5), Variant::Tame).unwrap();
        assert_eq!(m, tame_m(7, 3, 0, 6));
        let f9 = make_field(3, 2).unwrap();
        let g = f9.from_coeffs(&[0, 1]).unwrap();
        let m = canonical_model_from_j(3, &g, Variant::Wild).unwrap();
        assert!(m.a().is_zero());
        assert_eq!(*m.b(), f9.from_int(4).mul(&g).inv().unwrap().neg());
        assert_eq!(m.j_invariant().unwrap(), g);
        assert_eq!(
            canonical_model_from_j(3, &f7.zero(), Variant::Tame),
            Err(Error::SingularModel)
        );
    }

    #[test]
    fn canonical_roundtrip_exhaustive_small() {
        for (p, s) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)] {
            let field = make_field(p, s).unwrap();
            let n = if p == 3 { 5 } else { 3 };
            for idx in 1..field.q() {
                let j = field.from_index(idx);
                let m = canonical_model_from_j(n, &j, Variant::Tame).unwrap();
                assert_eq!(m.j_invariant().unwrap(), j);
            }
        }
        for (p, s) in [(3, 1), (5, 1), (3, 2)] {
            let field = make_field(p, s).unwrap();
            for idx in 1..field.q() {
                let j = field.from_index(idx);
                let m = canonical_model_from_j(p, &j, Variant::Wild).unwrap();
                assert_eq!(m.j_invariant().unwrap(), j);
            }
        }
    }

    #[test]
    fn automorphisms_tame_example() {
        let m = tame_m(13, 3, 0, -1);
        let set = automorphisms(&m).unwrap();
        assert_eq!(set.field.q(), 13);
        let k = set.field.clone();
        // sigma scales x by the primitive cube root 3; mu sends x to 4/x
        assert_eq!(
            set.sigma.apply(&k.from_int(1), &k.zero()),
            Some((k.from_int(3), k.zero()))
        );
        assert_eq!(
            set.mu.apply(&k.from_int(1), &k.zero()),
            Some((k.from_int(4), k.zero()))
        );
        assert_eq!(set.mu.apply(&k.zero(), &k.from_int(5)), None);
        assert!(set.report.all_hold(), "{:?}", set.report);
        assert!(set.report.points_checked >= 20);
    }

    #[test]
    fn automorphisms_wild_example() {
        let m = wild_m(3, 0, 2);
        let set = automorphisms(&m).unwrap();
        assert_eq!(set.field.degree(), 3);
        let bd = m.validate().unwrap();
        let wr = bd.wild_roots.as_ref().unwrap();
        let zero = set.field.zero();
        // mu swaps the two translation orbits: alpha -> alpha + beta - alpha
        assert_eq!(set.mu.apply(&wr.alpha, &zero), Some((wr.beta.clone(), zero.clone())));
        assert_eq!(set.sigma.order(10), 3);
        assert_eq!(set.mu.order(10), 2);
        let conj = set
            .mu
            .compose(&set.sigma)
            .unwrap()
            .compose(&set.mu.inverse())
            .unwrap();
        assert_eq!(conj, set.sigma.inverse());
        assert!(set.report.all_hold(), "{:?}", set.report);
    }

    #[test]
    fn automorphism_relations_on_generic_model() {
        let set = automorphisms(&tame_m(7, 3, 5, 5)).unwrap();
        assert!(set.report.all_hold(), "{:?}", set.report);
        assert_eq!(set.sigma.order(10), 3);
        assert_eq!(set.tau.order(10), 2);
        assert_eq!(set.mu.order(10), 2);
    }

    #[test]
    fn iso_identity_has_trivial_witness() {
        let m = tame_m(7, 3, 0, -1);
        let rep = is_isomorphic(&m, &m, 6).unwrap();
        assert!(rep.geometric);
        assert_eq!(rep.chi_class_match, Some(true));
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(
            rep.witness,
            Some(IsoWitness::Lambda { value: f7.one(), inverted: false })
        );
    }

    #[test]
    fn iso_twist_is_found() {
        let m1 = tame_m(7, 3, 5, 5);
        let f7 = m1.field().clone();
        // lambda = 2 has 2^3 = 1, so the twist is the same model and 2 is a
        // valid witness even though the search returns the least one
        let m2 = m1.lambda_twist(&f7.from_int(2)).unwrap();
        assert_eq!(m2, m1);
        let rep = is_isomorphic(&m1, &m2, 6).unwrap();
        assert!(rep.geometric);
        assert!(matches!(rep.witness, Some(IsoWitness::Lambda { .. })));
        // lambda = 3 moves the coefficients and is recovered exactly
        let m3 = m1.lambda_twist(&f7.from_int(3)).unwrap();
        assert_eq!(m3, tame_m(7, 3, 2, 5));
        let rep = is_isomorphic(&m1, &m3, 6).unwrap();
        assert!(rep.geometric);
        assert_eq!(
            rep.witness,
            Some(IsoWitness::Lambda { value: f7.from_int(3), inverted: false })
        );
    }

    #[test]
    fn iso_wild_example() {
        let m1 = wild_m(3, 0, 2);
        let m2 = wild_m(3, 2, 0);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(m1.j_invariant().unwrap(), f3.one());
        assert_eq!(m2.j_invariant().unwrap(), f3.one());
        let rep = is_isomorphic(&m1, &m2, 6).unwrap();
        assert!(rep.geometric);
        assert_eq!(rep.chi_class_match, None);
        match rep.witness {
            Some(IsoWitness::Shift { value: t }) => {
                assert_eq!(t.field().degree(), 3);
                assert_eq!(t.pow(3).sub(&t), t.field().one());
            }
            other => panic!("expected a translation witness, got {:?}", other),
        }
    }

    #[test]
    fn iso_negatives_and_errors() {
        let rep = is_isomorphic(&tame_m(7, 3, 5, 5), &tame_m(7, 3, 0, 6), 6).unwrap();
        assert!(!rep.geometric);
        assert!(rep.witness.is_none());
        assert_eq!(
            is_isomorphic(&tame_m(7, 3, 0, -1), &wild_m(7, 1, 1), 6).unwrap_err(),
            Error::VariantMismatch
        );
        let f7 = make_field(7, 1).unwrap();
        let f11 = make_field(11, 1).unwrap();
        let a = PottsModel::tame(3, f7.zero(), f7.from_int(-1));
        let b = PottsModel::tame(3, f11.zero(), f11.from_int(-1));
        assert_eq!(is_isomorphic(&a, &b, 6).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn classify_examples() {
        let f41 = make_field(41, 1).unwrap();
        let m = canonical_model_from_j(5, &f41.one(), Variant::Tame).unwrap();
        let c = classify_aut(&m).unwrap();
        assert_eq!(c.tag, AutTag::TwoTimesDihedralN);
        assert_eq!((c.order, c.equivariant_order), (20, 10));

        let c = classify_aut(&tame_m(5, 3, 0, -1)).unwrap();
        assert_eq!(c.tag, AutTag::PGL2FiberProduct(5));
        assert_eq!((c.order, c.equivariant_order), (240, 12));

        let c = classify_aut(&tame_m(3, 5, 0, -1)).unwrap();
        assert_eq!(c.tag, AutTag::PGL2FiberProduct(9));
        assert_eq!((c.order, c.equivariant_order), (1440, 20));

        let c = classify_aut(&tame_m(7, 3, 3, 5)).unwrap();
        assert_eq!(c.tag, AutTag::RepGroupSym4);
        assert_eq!((c.order, c.equivariant_order), (48, 6));

        let c = classify_aut(&tame_m(7, 3, 0, 6)).unwrap();
        assert_eq!(c.tag, AutTag::TwoTimesDihedral2N);
        assert_eq!((c.order, c.equivariant_order), (24, 12));

        let c = classify_aut(&wild_m(5, 1, 1)).unwrap();
        assert_eq!(c.tag, AutTag::WildTwoTimesDihedralP);
        assert_eq!((c.order, c.equivariant_order), (20, 10));
    }

    #[test]
    fn classify_char5_collision_routes_to_fiber_product() {
        // in characteristic 5 the two special invariant values coincide:
        // -1/54 = -1/4 = 1; N = 3 gives 2N - 1 = 5 = p
        let m = tame_m(5, 3, 0, -1);
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(m.j_invariant().unwrap(), f5.one());
        assert_eq!(f5.from_int(54), f5.from_int(4));
        let c = classify_aut(&m).unwrap();
        assert_eq!(c.tag, AutTag::PGL2FiberProduct(5));
        assert_eq!(c.order, 240);
    }

    #[test]
    fn oracle_generic_example() {
        let rep = aut_order_oracle(&tame_m(7, 3, 5, 5)).unwrap();
        assert_eq!(rep.g_order, 6);
        assert_eq!(rep.aut_order, 12);
        assert_eq!(rep.equivariant_order, 6);
        assert_eq!(rep.g_class.tag, SubgroupTag::Dihedral(3));
    }

    #[test]
    fn oracle_sym4_example() {
        let rep = aut_order_oracle(&tame_m(7, 3, 3, 5)).unwrap();
        assert_eq!(rep.g_order, 24);
        assert_eq!(rep.aut_order, 48);
        assert_eq!(rep.equivariant_order, 6);
        assert_eq!(rep.g_class.tag, SubgroupTag::Sym4);
    }

    #[test]
    fn oracle_dihedral_2n_example() {
        let rep = aut_order_oracle(&tame_m(7, 3, 0, 6)).unwrap();
        assert_eq!(rep.g_order, 12);
        assert_eq!(rep.aut_order, 24);
        assert_eq!(rep.equivariant_order, 12);
        assert_eq!(rep.g_class.tag, SubgroupTag::Dihedral(6));
    }

    #[test]
    fn oracle_wild_f5() {
        let rep = aut_order_oracle(&wild_m(5, 1, 1)).unwrap();
        assert_eq!(rep.g_order, 10);
        assert_eq!(rep.aut_order, 20);
        assert_eq!(rep.equivariant_order, 10);
        assert_eq!(rep.g_class.tag, SubgroupTag::Dihedral(5));
    }

    #[test]
    fn oracle_agrees_with_classification_spot_checks() {
        let models = [
            tame_m(7, 3, 5, 5),
            tame_m(7, 3, 3, 5),
            tame_m(7, 3, 0, 6),
            tame_m(5, 3, 0, -1),
            wild_m(3, 0, 2),
        ];
        for m in &models {
            let c = classify_aut(m).unwrap();
            let o = aut_order_oracle(m).unwrap();
            assert_eq!(c.order, o.aut_order, "order mismatch on {:?}", m);
            assert_eq!(c.equivariant_order, o.equivariant_order, "equivariant mismatch on {:?}", m);
        }
    }

    #[test]
    fn sym4_lifts_include_an_order_eight_element() {
        // j = -1/54 = 6 over F_13; splitting field F_13^3, lifts over F_13^6
        let f13 = make_field(13, 1).unwrap();
        let m = canonical_model_from_j(3, &f13.from_int(6), Variant::Tame).unwrap();
        assert_eq!(m, tame_m(13, 3, 12, 7));
        assert_eq!(classify_aut(&m).unwrap().tag, AutTag::RepGroupSym4);
        let bd = m.validate().unwrap();
        let stab = stabilizer_of_set(&bd.points, &bd.field).unwrap();
        assert_eq!(stab.len(), 24);

        let g4 = stab
            .iter()
            .find(|g| order_by_powering(g).unwrap_or(1) == 4)
            .expect("Sym4 contains order-4 elements");
        let (up, down) = lift_reduced(&m, &bd, g4).unwrap();
        assert_eq!(up.order(20), 8);
        assert_eq!(down.order(20), 8);

        let lifts = lift_all(&m, &bd, &stab).unwrap();
        assert_eq!(lifts.len(), 48);
        let mut orders = std::collections::BTreeMap::new();
        for l in &lifts {
            *orders.entry(l.order(20)).or_insert(0usize) += 1;
        }
        assert_eq!(orders.values().sum::<usize>(), 48);
        assert_eq!(orders.get(&1), Some(&1));
        assert!(orders.contains_key(&8), "order multiset {:?}", orders);
        let k2 = lifts[0].field().clone();
        let tau = AutomorphismMap::new(
            &k2,
            [k2.one(), k2.zero(), k2.zero(), k2.one()],
            k2.from_int(-1),
            3,
        )
        .unwrap();
        for l in &lifts {
            assert_eq!(tau.compose(l).unwrap(), l.compose(&tau).unwrap());
        }
    }

    #[test]
    fn wild_char3_quarter_j_class_exceeds_dihedral_count() {
        // for p = 3 the class with A^2 - 4B = 2 is special: taking (A, B) =
        // (0, 1), the branch set is +-u + F_3 with u^2 = -1, which is exactly
        // P^1(F_9) minus P^1(F_3), so PGL_2(F_3) of order 24 stabilizes it.
        // The dihedral count 4p therefore undercounts this one class; the
        // sigma-equivariant count 2p is still correct.
        let m = wild_m(3, 0, 1);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(m.j_invariant().unwrap(), f3.from_int(4).inv().unwrap().neg());
        let rep = aut_order_oracle(&m).unwrap();
        assert_eq!(rep.g_order, 24);
        assert_eq!(rep.g_class.tag, SubgroupTag::Pgl2(3));
        assert_eq!(rep.aut_order, 48);
        assert_eq!(rep.equivariant_order, 6);
        let c = classify_aut(&m).unwrap();
        assert_eq!(c.tag, AutTag::WildTwoTimesDihedralP);
        assert_eq!(c.order, 12);
        assert_ne!(c.order, rep.aut_order);
    }

    #[test]
    fn quarter_j_square_root_examples() {
        let f13 = make_field(13, 1).unwrap();
        let s = quarter_j_square_root_check(3, &f13).unwrap();
        assert_eq!(order_by_powering(&s).unwrap(), 6);
        let f11 = make_field(11, 1).unwrap();
        let s = quarter_j_square_root_check(5, &f11).unwrap();
        assert_eq!(order_by_powering(&s).unwrap(), 10);
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(quarter_j_square_root_check(5, &f7), Err(Error::NoSuchRoot(10)));
    }

    #[test]
    fn j_is_constant_on_twist_orbits() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [7u64, 11, 13] {
            let f = make_field(p, 1).unwrap();
            let mut done = 0;
            while done < 25 {
                let a = f.from_index(rng.gen_range(0..f.q()));
                let b = f.from_index(rng.gen_range(0..f.q()));
                let m = PottsModel::tame(3, a, b);
                if m.check_basic().is_err() {
                    continue;
                }
                let lambda = f.from_index(rng.gen_range(1..f.q()));
                let twisted = m.lambda_twist(&lambda).unwrap();
                assert_eq!(m.j_invariant().unwrap(), twisted.j_invariant().unwrap());
                done += 1;
            }
        }
        for p in [3u64, 5] {
            let f = make_field(p, 1).unwrap();
            let mut done = 0;
            while done < 25 {
                let a = f.from_index(rng.gen_range(0..f.q()));
                let b = f.from_index(rng.gen_range(0..f.q()));
                let m = PottsModel::wild(p, a, b);
                if m.check_basic().is_err() {
                    continue;
                }
                let w = f.from_index(rng.gen_range(0..f.q()));
                let shifted = m.shift_twist(&w).unwrap();
                assert_eq!(m.j_invariant().unwrap(), shifted.j_invariant().unwrap());
                done += 1;
            }
        }
    }
}
