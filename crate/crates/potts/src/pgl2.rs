//! PGL₂ over a finite field: canonical representatives, element orders by
//! trace criterion and by powering, subgroup closure and Dickson-list
//! recognition, order-p surveys, set stabilizers, and the standard elements
//! M_ζ and the four-point involution.
//!
//! A [`ProjMap`] is stored with its first nonzero entry (scan order a, b, c,
//! d) scaled to 1, so projective equality is entrywise equality.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{element_order, primitive_root_of_unity, square_root, Field, FieldElem};
use crate::poly::extension_with_embedding;

/// Default cap for [`subgroup_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10080;

/// A point of P¹: a field element or ∞ = (1 : 0).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProjPoint {
    Finite(FieldElem),
    Infinity,
}

impl ProjPoint {
    /// Homogeneous coordinates (x₁ : x₂).
    fn homogeneous(&self, field: &Field) -> (FieldElem, FieldElem) {
        match self {
            ProjPoint::Finite(x) => (x.clone(), field.one()),
            ProjPoint::Infinity => (field.one(), field.zero()),
        }
    }

    /// Transport along a coefficient embedding.
    pub fn map(&self, emb: &crate::field::Embedding) -> ProjPoint {
        match self {
            ProjPoint::Finite(x) => ProjPoint::Finite(emb.apply(x)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }
}

/// Normalized invertible homography x ↦ (ax + b)/(cx + d).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjMap {
    field: Field,
    // [a, b, c, d], first nonzero entry = 1
    m: [FieldElem; 4],
}

impl PartialOrd for ProjMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |g: &ProjMap| {
            [g.m[0].index(), g.m[1].index(), g.m[2].index(), g.m[3].index()]
        };
        (self.field.p(), self.field.degree(), key(self)).cmp(&(
            other.field.p(),
            other.field.degree(),
            key(other),
        ))
    }
}

impl ProjMap {
    pub fn new(field: &Field, entries: [FieldElem; 4]) -> Result<ProjMap> {
        let [a, b, c, d] = &entries;
        let det = a.mul(d).sub(&b.mul(c));
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let lead = entries
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonsingular matrix has a nonzero entry")
            .clone();
        let inv = lead.inv().unwrap();
        let m = [
            entries[0].mul(&inv),
            entries[1].mul(&inv),
            entries[2].mul(&inv),
            entries[3].mul(&inv),
        ];
        Ok(ProjMap { field: field.clone(), m })
    }

    pub fn from_ints(field: &Field, entries: [i64; 4]) -> Result<ProjMap> {
        ProjMap::new(field, entries.map(|n| field.from_int(n)))
    }

    pub fn identity(field: &Field) -> ProjMap {
        ProjMap::from_ints(field, [1, 0, 0, 1]).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElem; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m[1].is_zero() && self.m[2].is_zero() && self.m[0] == self.m[3] && !self.m[0].is_zero()
    }

    pub fn det(&self) -> FieldElem {
        self.m[0].mul(&self.m[3]).sub(&self.m[1].mul(&self.m[2]))
    }

    pub fn trace(&self) -> FieldElem {
        self.m[0].add(&self.m[3])
    }

    /// f ∘ g, the map applying g first.
    pub fn compose(&self, g: &ProjMap) -> Result<ProjMap> {
        if self.field != g.field {
            return Err(Error::MixedFields);
        }
        let [a, b, c, d] = &self.m;
        let [e, f, h, i] = &g.m;
        ProjMap::new(
            &self.field,
            [
                a.mul(e).add(&b.mul(h)),
                a.mul(f).add(&b.mul(i)),
                c.mul(e).add(&d.mul(h)),
                c.mul(f).add(&d.mul(i)),
            ],
        )
    }

    pub fn inverse(&self) -> ProjMap {
        let [a, b, c, d] = &self.m;
        ProjMap::new(&self.field, [d.clone(), b.neg(), c.neg(), a.clone()])
            .expect("inverse of a nonsingular matrix")
    }

    pub fn apply(&self, point: &ProjPoint) -> Result<ProjPoint> {
        let [a, b, c, d] = &self.m;
        Ok(match point {
            ProjPoint::Infinity => {
                if c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(a.div(c).unwrap())
                }
            }
            ProjPoint::Finite(x) => {
                if x.field() != &self.field {
                    return Err(Error::MixedFields);
                }
                let denom = c.mul(x).add(d);
                if denom.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(a.mul(x).add(b).div(&denom).unwrap())
                }
            }
        })
    }

    /// Entrywise transport along a coefficient embedding.
    pub fn map(&self, emb: &crate::field::Embedding) -> ProjMap {
        let m = [
            emb.apply(&self.m[0]),
            emb.apply(&self.m[1]),
            emb.apply(&self.m[2]),
            emb.apply(&self.m[3]),
        ];
        ProjMap::new(emb.to_field(), m).expect("embeddings preserve nonsingularity")
    }

    /// Fixed points rational over the coefficient field.
    pub fn fixed_points(&self) -> Vec<ProjPoint> {
        let mut out = Vec::new();
        for p in all_points(&self.field) {
            if self.apply(&p).unwrap() == p {
                out.push(p);
            }
        }
        out
    }
}

/// P¹(F_q) in canonical order, ∞ last.
pub fn all_points(field: &Field) -> Vec<ProjPoint> {
    let mut out: Vec<ProjPoint> = field.elements().map(ProjPoint::Finite).collect();
    out.push(ProjPoint::Infinity);
    out
}

/// tr²/det, constant on the projective class and on conjugacy classes; equals
/// ζ + ζ^{-1} + 2 for an element with eigenvalue ratio ζ.
pub fn conjugacy_invariant(g: &ProjMap) -> Result<FieldElem> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let tr = g.trace();
    Ok(tr.square().div(&g.det()).unwrap())
}

/// Exact order via the trace criterion: order p when tr² = 4 det (unipotent);
/// otherwise the multiplicative order of the eigenvalue ratio ζ, found as a
/// root of X² - (tr²/det - 2)X + 1 over F_{q²}.
pub fn order_by_criterion(g: &ProjMap) -> Result<u64> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let field = g.field().clone();
    let inv = conjugacy_invariant(g)?;
    if inv == field.from_int(4) {
        return Ok(field.p());
    }
    let c = inv.sub(&field.from_int(2));
    let q = field.q();
    let field_cap = q.saturating_mul(q).max(crate::field::DEFAULT_SIZE_CAP);
    let (ext, emb) = extension_with_embedding(&field, 2, field_cap)?;
    let ce = emb.apply(&c);
    // zeta = (c + sqrt(c² - 4))/2; both roots of the quadratic lie in F_{q²}
    let disc = ce.square().sub(&ext.from_int(4));
    let root = square_root(&disc).expect("eigenvalue ratio lives in the quadratic extension");
    let zeta = ce.add(&root).div(&ext.from_int(2)).unwrap();
    Ok(element_order(&zeta)?)
}

/// Exact order by repeated composition; orders in PGL₂(F_q) are at most
/// max(q + 1, p).
pub fn order_by_powering(g: &ProjMap) -> Result<u64> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let bound = (g.field().q() + 1).max(g.field().p());
    let mut acc = g.clone();
    let mut n = 1;
    while !acc.is_identity() {
        acc = acc.compose(g).unwrap();
        n += 1;
        assert!(n <= bound, "element order exceeds the PGL2 bound");
    }
    Ok(n)
}

/// The standard element of exact order n: M_ζ = [[c, c-2], [1, 2]] with
/// c = ζ + ζ^{-1} for the deterministic primitive n-th root ζ, or
/// [[1,1],[0,1]] when n = p. n = 2 falls back to x ↦ -x (M_ζ is singular
/// there), n = 1 to the identity.
pub fn standard_order_n(field: &Field, n: u64) -> Result<ProjMap> {
    if n == field.p() {
        return ProjMap::from_ints(field, [1, 1, 0, 1]);
    }
    match n {
        0 => Err(Error::NoSuchRoot(0)),
        1 => Ok(ProjMap::identity(field)),
        2 => {
            if field.q() % 2 == 0 {
                return Err(Error::NoSuchRoot(2));
            }
            ProjMap::from_ints(field, [1, 0, 0, -1])
        }
        _ => {
            let zeta = primitive_root_of_unity(field, n)?;
            let c = zeta.add(&zeta.inv()?);
            ProjMap::new(
                field,
                [c.clone(), c.sub(&field.from_int(2)), field.one(), field.from_int(2)],
            )
        }
    }
}

/// The explicit trace-zero involution swapping a ↔ b and c ↔ d.
pub fn four_point_involution(
    field: &Field,
    a: &ProjPoint,
    b: &ProjPoint,
    c: &ProjPoint,
    d: &ProjPoint,
) -> Result<ProjMap> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegeneratePoints);
            }
        }
    }
    let (a1, a2) = a.homogeneous(field);
    let (b1, b2) = b.homogeneous(field);
    let (c1, c2) = c.homogeneous(field);
    let (d1, d2) = d.homogeneous(field);
    let e11 = a1.mul(&b1).mul(&c2).mul(&d2).sub(&c1.mul(&d1).mul(&a2).mul(&b2));
    let e12 = a1
        .mul(&c1)
        .mul(&d1)
        .mul(&b2)
        .add(&b1.mul(&c1).mul(&d1).mul(&a2))
        .sub(&a1.mul(&b1).mul(&c1).mul(&d2))
        .sub(&a1.mul(&b1).mul(&d1).mul(&c2));
    let e21 = a1
        .mul(&b2)
        .add(&a2.mul(&b1))
        .mul(&c2)
        .mul(&d2)
        .sub(&c1.mul(&d2).add(&c2.mul(&d1)).mul(&a2).mul(&b2));
    let e22 = e11.neg();
    let tau = ProjMap::new(field, [e11, e12, e21, e22])?;
    // cross-ratio-style determinant, nonzero exactly for distinct pairs
    let cross = |(x1, x2): &(FieldElem, FieldElem), (y1, y2): &(FieldElem, FieldElem)| {
        x1.mul(y2).sub(&x2.mul(y1))
    };
    let det_expected = cross(&(a1.clone(), a2.clone()), &(c1.clone(), c2.clone()))
        .mul(&cross(&(a1.clone(), a2.clone()), &(d1.clone(), d2.clone())))
        .mul(&cross(&(b1.clone(), b2.clone()), &(c1.clone(), c2.clone())))
        .mul(&cross(&(b1, b2), &(d1, d2)))
        .neg();
    // the raw matrix has this determinant; normalization rescales it by a square
    let raw_det = tau.det();
    let ratio = det_expected.div(&raw_det).unwrap();
    debug_assert!(
        square_root(&ratio).is_some(),
        "normalization changes the determinant by a square"
    );
    Ok(tau)
}

/// Breadth-first closure of the generated subgroup; the generators must share
/// one field. Errors if the closure grows past `cap`.
pub fn subgroup_closure(generators: &[ProjMap], cap: usize) -> Result<Vec<ProjMap>> {
    assert!(!generators.is_empty(), "closure of a nonempty generator list");
    let field = generators[0].field().clone();
    for g in generators {
        if g.field() != &field {
            return Err(Error::MixedFields);
        }
    }
    let mut set: BTreeSet<ProjMap> = BTreeSet::new();
    set.insert(ProjMap::identity(&field));
    let mut frontier: Vec<ProjMap> = vec![ProjMap::identity(&field)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in generators {
                let gh = g.compose(h).unwrap();
                if set.insert(gh.clone()) {
                    if set.len() > cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    next.push(gh);
                }
            }
        }
        frontier = next;
    }
    Ok(set.into_iter().collect())
}

/// Dickson-list tag for a finite subgroup of PGL₂.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubgroupTag {
    Cyclic(u64),
    Dihedral(u64),
    Alt4,
    Sym4,
    Alt5,
    /// Elementary abelian p-group of the given rank, with a cyclic complement
    /// of the given order.
    SemidirectPC { p_rank: u32, c_order: u64 },
    Psl2(u64),
    Pgl2(u64),
}

impl std::fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubgroupTag::Cyclic(n) => write!(f, "Cyclic({n})"),
            SubgroupTag::Dihedral(n) => write!(f, "Dihedral({n})"),
            SubgroupTag::Alt4 => write!(f, "Alt4"),
            SubgroupTag::Sym4 => write!(f, "Sym4"),
            SubgroupTag::Alt5 => write!(f, "Alt5"),
            SubgroupTag::SemidirectPC { p_rank, c_order } => {
                write!(f, "SemidirectPC({p_rank},{c_order})")
            }
            SubgroupTag::Psl2(q) => write!(f, "PSL2({q})"),
            SubgroupTag::Pgl2(q) => write!(f, "PGL2({q})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupClass {
    pub tag: SubgroupTag,
    pub order: u64,
    pub aliases: Vec<String>,
}

fn class_of(tag: SubgroupTag, order: u64) -> SubgroupClass {
    let aliases = match &tag {
        SubgroupTag::Pgl2(3) => vec!["Sym4".to_string()],
        SubgroupTag::Psl2(3) => vec!["Alt4".to_string()],
        SubgroupTag::Psl2(5) => vec!["Alt5".to_string()],
        SubgroupTag::Sym4 => vec!["PGL2(3)".to_string()],
        SubgroupTag::Alt4 => vec!["PSL2(3)".to_string()],
        SubgroupTag::Alt5 => vec!["PSL2(5)".to_string()],
        _ => vec![],
    };
    SubgroupClass { tag, order, aliases }
}

/// Dickson classification of a subgroup given by its full element list.
pub fn classify_subgroup(elements: &[ProjMap]) -> Result<SubgroupClass> {
    if elements.is_empty() {
        return Err(Error::NotAGroup);
    }
    let field = elements[0].field().clone();
    let set: BTreeSet<ProjMap> = elements.iter().cloned().collect();
    if set.len() != elements.len() || !set.contains(&ProjMap::identity(&field)) {
        return Err(Error::NotAGroup);
    }
    for g in &set {
        if g.field() != &field || !set.contains(&g.inverse()) {
            return Err(Error::NotAGroup);
        }
        for h in &set {
            if !set.contains(&g.compose(h).unwrap()) {
                return Err(Error::NotAGroup);
            }
        }
    }

    let n = set.len() as u64;
    let p = field.p();
    let orders: BTreeMap<ProjMap, u64> = set
        .iter()
        .map(|g| {
            let o = if g.is_identity() { 1 } else { order_by_powering(g).unwrap() };
            (g.clone(), o)
        })
        .collect();
    let max_order = *orders.values().max().unwrap();

    if max_order == n {
        return Ok(class_of(SubgroupTag::Cyclic(n), n));
    }

    // dihedral: index-2 cyclic subgroup inverted by an outside involution
    if n % 2 == 0 && max_order == n / 2 {
        let half = n / 2;
        if let Some(h) = set.iter().find(|g| orders[*g] == half) {
            let mut powers = BTreeSet::new();
            let mut acc = ProjMap::identity(&field);
            for _ in 0..half {
                powers.insert(acc.clone());
                acc = acc.compose(h).unwrap();
            }
            let hinv = h.inverse();
            let witness = set.iter().any(|g| {
                orders[g] == 2
                    && !powers.contains(g)
                    && g.compose(h).unwrap().compose(&g.inverse()).unwrap() == hinv
            });
            if witness {
                return Ok(class_of(SubgroupTag::Dihedral(half), n));
            }
        }
    }

    if n % p == 0 {
        // Sylow p-subgroup candidate: all elements of order 1 or p
        let q_set: BTreeSet<ProjMap> =
            set.iter().filter(|g| orders[*g] == 1 || orders[*g] == p).cloned().collect();
        let pk = q_set.len() as u64;
        let is_p_power = {
            let mut v = pk;
            while v % p == 0 {
                v /= p;
            }
            v == 1
        };
        if is_p_power && pk > 1 && n % pk == 0 {
            let closed = q_set
                .iter()
                .all(|g| q_set.iter().all(|h| q_set.contains(&g.compose(h).unwrap())));
            let abelian = q_set
                .iter()
                .all(|g| q_set.iter().all(|h| g.compose(h).unwrap() == h.compose(g).unwrap()));
            let normal = set.iter().all(|g| {
                let gi = g.inverse();
                q_set
                    .iter()
                    .all(|u| q_set.contains(&g.compose(u).unwrap().compose(&gi).unwrap()))
            });
            let c_order = n / pk;
            let has_complement = c_order == 1 || orders.values().any(|&o| o == c_order);
            if closed && abelian && normal && has_complement {
                let p_rank = {
                    let mut r = 0u32;
                    let mut v = pk;
                    while v > 1 {
                        v /= p;
                        r += 1;
                    }
                    r
                };
                return Ok(class_of(SubgroupTag::SemidirectPC { p_rank, c_order }, n));
            }
        }
        // PGL2 / PSL2 over subfields F_{p^m}
        let mut qq = p;
        loop {
            let full = qq * qq * qq - qq;
            if full > 2 * n {
                break;
            }
            if n == full {
                return Ok(class_of(SubgroupTag::Pgl2(qq), n));
            }
            if 2 * n == full && qq > 2 {
                return Ok(class_of(SubgroupTag::Psl2(qq), n));
            }
            match qq.checked_mul(p) {
                Some(next) => qq = next,
                None => break,
            }
        }
    }

    // exceptional tags by order spectrum
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    for o in orders.values() {
        *spectrum.entry(*o).or_insert(0) += 1;
    }
    let spec: Vec<(u64, u64)> = spectrum.into_iter().collect();
    match (n, spec.as_slice()) {
        (12, [(1, 1), (2, 3), (3, 8)]) => Ok(class_of(SubgroupTag::Alt4, n)),
        (24, [(1, 1), (2, 9), (3, 8), (4, 6)]) => Ok(class_of(SubgroupTag::Sym4, n)),
        (60, [(1, 1), (2, 15), (3, 20), (5, 24)]) => Ok(class_of(SubgroupTag::Alt5, n)),
        _ => Err(Error::UnrecognizedSubgroup),
    }
}

/// All q³ - q elements, normalized, in canonical order.
pub fn enumerate_pgl2(field: &Field, cap: u64) -> Result<Vec<ProjMap>> {
    let q = field.q();
    let total = q * q * q - q;
    if total > cap {
        return Err(Error::SizeCapExceeded { q: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    // representatives stratified by the position of the leading 1
    for b in field.elements() {
        for c in field.elements() {
            for d in field.elements() {
                if let Ok(g) = ProjMap::new(field, [field.one(), b.clone(), c.clone(), d.clone()]) {
                    out.push(g);
                }
            }
        }
    }
    for c in field.elements() {
        for d in field.elements() {
            if let Ok(g) = ProjMap::new(field, [field.zero(), field.one(), c.clone(), d]) {
                out.push(g);
            }
        }
    }
    // a = b = 0 forces det = 0; no further stratum contributes
    out.sort();
    debug_assert_eq!(out.len() as u64, total);
    Ok(out)
}

/// Census of the unipotent locus: the number of order-p elements (q² - 1,
/// each with tr² = 4 det) and the union of their fixed points (all of P¹(F_q)).
#[derive(Clone, Debug)]
pub struct OrderPSurvey {
    pub count: u64,
    pub fixed_union: Vec<ProjPoint>,
}

pub fn survey_order_p(field: &Field, cap: u64) -> Result<OrderPSurvey> {
    let p = field.p();
    let four = field.from_int(4);
    let mut count = 0;
    let mut fixed: BTreeSet<ProjPoint> = BTreeSet::new();
    for g in enumerate_pgl2(field, cap)? {
        if g.is_identity() {
            continue;
        }
        if order_by_powering(&g)? == p {
            count += 1;
            assert_eq!(
                g.trace().square(),
                four.mul(&g.det()),
                "order-p elements are unipotent"
            );
            fixed.extend(g.fixed_points());
        }
    }
    Ok(OrderPSurvey { count, fixed_union: fixed.into_iter().collect() })
}

/// The homography sending (0, ∞, 1) to the given distinct triple.
fn frame(field: &Field, t0: &ProjPoint, t1: &ProjPoint, t2: &ProjPoint) -> ProjMap {
    let (a1, a2) = t0.homogeneous(field);
    let (b1, b2) = t1.homogeneous(field);
    let (c1, c2) = t2.homogeneous(field);
    // solve l1*(a1,a2) + l2*(b1,b2) = (c1,c2); columns l2*b, l1*a map
    // (1:0) -> t1, (0:1) -> t0, (1:1) -> t2
    let det = a1.mul(&b2).sub(&a2.mul(&b1));
    let det_inv = det.inv().expect("distinct points give independent lifts");
    let l1 = c1.mul(&b2).sub(&c2.mul(&b1)).mul(&det_inv);
    let l2 = a1.mul(&c2).sub(&a2.mul(&c1)).mul(&det_inv);
    ProjMap::new(
        field,
        [l2.mul(&b1), l1.mul(&a1), l2.mul(&b2), l1.mul(&a2)],
    )
    .expect("frame of three distinct points")
}

/// All homographies over the ambient field mapping Σ onto itself. Candidates
/// are the maps sending a fixed base triple to each ordered triple of Σ.
pub fn stabilizer_of_set(sigma: &[ProjPoint], field: &Field) -> Result<Vec<ProjMap>> {
    let set: BTreeSet<ProjPoint> = sigma.iter().cloned().collect();
    if set.len() < 3 {
        return Err(Error::TooFewPoints(set.len()));
    }
    let pts: Vec<ProjPoint> = set.iter().cloned().collect();
    let base = frame(field, &pts[0], &pts[1], &pts[2]);
    let base_inv = base.inverse();
    let mut out = BTreeSet::new();
    for t0 in &pts {
        for t1 in &pts {
            if t1 == t0 {
                continue;
            }
            for t2 in &pts {
                if t2 == t0 || t2 == t1 {
                    continue;
                }
                let g = frame(field, t0, t1, t2).compose(&base_inv).unwrap();
                if pts.iter().all(|pt| set.contains(&g.apply(pt).unwrap())) {
                    out.insert(g);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
