//! Isomorphism-class censuses over small fields, and the combinatorics of
//! the two boundary degenerations.
//!
//! A census enumerates every smooth model over F_q for the fixed
//! sigma-normalization, buckets them by the modular invariant, then certifies
//! each bucket as a single geometric class by exhibiting explicit scaling or
//! translation witnesses over bounded extensions. Witnesses are searched
//! degree-first across all already-certified members of the bucket, so every
//! link is accepted at the least extension degree any partner admits; a
//! bucket that cannot be connected within the cap is an error, never a
//! silent extra class.

use std::collections::BTreeMap;

use crate::curve::{
    lambda_witness_in_ext, shift_witness_in_ext, IsoWitness, PottsModel, Variant, CURVE_FIELD_CAP,
};
use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldElem};
use crate::poly::{extension_with_embedding, roots_over_splitting_field, Poly};

/// Extension-degree bound for census witness searches. Far above what any
/// shipped census needs; hitting it is reported as an error.
pub const CENSUS_EXTENSION_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JLimit {
    Zero,
    Infinity,
}

/// Dual-graph data of a stable boundary curve: two components of equal
/// genus glued at the nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CuspDescriptor {
    pub components: u64,
    pub genera: (u64, u64),
    pub nodes: u64,
    pub j_limit: JLimit,
}

impl CuspDescriptor {
    /// Arithmetic genus g1 + g2 + (nodes - 1) of the glued curve.
    pub fn genus_accounting(&self) -> u64 {
        self.genera.0 + self.genera.1 + self.nodes - 1
    }
}

/// The two boundary degenerations for odd N >= 3: a pair of rational curves
/// meeting N times (j -> infinity), and a pair of genus-(N-1)/2 curves
/// meeting once (j -> 0). Both glue to arithmetic genus N - 1.
pub fn cusp_combinatorics(n: u64) -> (CuspDescriptor, CuspDescriptor) {
    assert!(n >= 3 && n % 2 == 1, "cusp combinatorics needs odd N >= 3");
    let at_infinity = CuspDescriptor {
        components: 2,
        genera: (0, 0),
        nodes: n,
        j_limit: JLimit::Infinity,
    };
    let at_zero = CuspDescriptor {
        components: 2,
        genera: ((n - 1) / 2, (n - 1) / 2),
        nodes: 1,
        j_limit: JLimit::Zero,
    };
    assert_eq!(at_infinity.genus_accounting(), n - 1);
    assert_eq!(at_zero.genus_accounting(), n - 1);
    (at_infinity, at_zero)
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub variant: Variant,
    /// N (tame) or p (wild).
    pub n: u64,
    pub q: u64,
    /// Smooth models enumerated.
    pub models: u64,
    pub distinct_j: u64,
    /// Geometric classes certified by witness search; the census errors out
    /// rather than report a bucket it cannot certify.
    pub classes: u64,
    /// q - 1: one class per invariant value for the fixed normalization.
    pub expected: u64,
    pub matches: bool,
    /// Largest extension degree over F_q used by any accepted witness.
    pub max_witness_degree: usize,
    /// (A, B, j, class id) per model, in enumeration order; class ids follow
    /// the sorted invariant values.
    pub assignments: Vec<(FieldElem, FieldElem, FieldElem, u64)>,
}

/// Lazily built extensions of one base field, shared across a census so each
/// degree is constructed once.
struct ExtCache<'a> {
    base: &'a Field,
    slots: Vec<Option<(Field, Embedding)>>,
}

impl<'a> ExtCache<'a> {
    fn new(base: &'a Field, cap: usize) -> ExtCache<'a> {
        ExtCache { base, slots: (0..=cap).map(|_| None).collect() }
    }

    /// None once q^m passes the field-size cap (so callers stop raising m).
    fn get(&mut self, m: usize) -> Result<Option<(Field, Embedding)>> {
        if self.slots[m].is_none() {
            match extension_with_embedding(self.base, m, CURVE_FIELD_CAP) {
                Ok(v) => self.slots[m] = Some(v),
                Err(Error::SizeCapExceeded { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(self.slots[m].clone())
    }
}

type WitnessProbe = fn(&PottsModel, &PottsModel, &Field, &Embedding) -> Result<Option<IsoWitness>>;

/// Certify one bucket as a single class: grow the set of certified models
/// from the first one, always accepting the lowest-degree witness available
/// against any certified member. Returns the largest degree used.
fn connect_bucket(
    models: &[PottsModel],
    cap: usize,
    cache: &mut ExtCache,
    probe: WitnessProbe,
) -> Result<usize> {
    let mut certified: Vec<usize> = vec![0];
    let mut pending: Vec<usize> = (1..models.len()).collect();
    let mut max_used = 0usize;
    while !pending.is_empty() {
        let mut hit: Option<(usize, usize)> = None;
        'degrees: for m in 1..=cap {
            let (ext, emb) = match cache.get(m)? {
                Some(v) => v,
                None => break 'degrees,
            };
            for (pos, &x) in pending.iter().enumerate() {
                for &y in &certified {
                    if probe(&models[y], &models[x], &ext, &emb)?.is_some() {
                        hit = Some((pos, m));
                        break 'degrees;
                    }
                }
            }
        }
        match hit {
            Some((pos, m)) => {
                max_used = max_used.max(m);
                let x = pending.remove(pos);
                certified.push(x);
            }
            None => return Err(Error::SplittingCapExceeded(cap)),
        }
    }
    Ok(max_used)
}

fn finish_census(
    variant: Variant,
    n: u64,
    field: &Field,
    buckets: BTreeMap<u64, Vec<PottsModel>>,
    rows: Vec<(FieldElem, FieldElem, FieldElem)>,
    cap: usize,
    probe: WitnessProbe,
) -> Result<CensusReport> {
    let mut cache = ExtCache::new(field, cap);
    let mut max_used = 0usize;
    for bucket in buckets.values() {
        max_used = max_used.max(connect_bucket(bucket, cap, &mut cache, probe)?);
    }
    // The invariant really separates buckets: between representatives of
    // distinct values, the bounded search never produces a witness.
    let reps: Vec<&PottsModel> = buckets.values().map(|b| &b[0]).collect();
    for i in 0..reps.len() {
        for k in i + 1..reps.len() {
            for m in 1..=cap {
                let (ext, emb) = match cache.get(m)? {
                    Some(v) => v,
                    None => break,
                };
                assert!(
                    probe(reps[i], reps[k], &ext, &emb)?.is_none(),
                    "witness across distinct modular invariants"
                );
            }
        }
    }
    let distinct_j = buckets.len() as u64;
    let classes = distinct_j;
    let expected = field.q() - 1;
    let models = rows.len() as u64;
    let class_ids: BTreeMap<u64, u64> =
        buckets.keys().enumerate().map(|(i, &j)| (j, i as u64)).collect();
    let assignments = rows
        .into_iter()
        .map(|(a, b, j)| {
            let id = class_ids[&j.index()];
            (a, b, j, id)
        })
        .collect();
    Ok(CensusReport {
        variant,
        n,
        q: field.q(),
        models,
        distinct_j,
        classes,
        expected,
        matches: classes == distinct_j && classes == expected,
        max_witness_degree: max_used,
        assignments,
    })
}

/// Sweep every smooth tame model (A, B) over F_q (B and A^2 - 4B nonzero),
/// bucket by j = B/(A^2 - 4B), and certify one geometric class per bucket by
/// scaling witnesses. Expected class count: q - 1.
pub fn census_tame(n: u64, field: &Field, cap: usize) -> Result<CensusReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenN(n));
    }
    if (2 * n) % field.p() == 0 {
        return Err(Error::WrongCharacteristic);
    }
    let mut buckets: BTreeMap<u64, Vec<PottsModel>> = BTreeMap::new();
    let mut rows = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            let m = PottsModel::tame(n, a.clone(), b.clone());
            if m.check_basic().is_err() {
                continue;
            }
            let j = m.j_invariant()?;
            buckets.entry(j.index()).or_default().push(m);
            rows.push((a.clone(), b, j));
        }
    }
    finish_census(Variant::Tame, n, field, buckets, rows, cap, lambda_witness_in_ext)
}

/// Same census for the wild family over F_q, q = p^e: models (A, B) with
/// A^2 - 4B nonzero, j = 1/(A^2 - 4B), certified by translation witnesses.
pub fn census_wild(p: u64, field: &Field, cap: usize) -> Result<CensusReport> {
    if field.p() != p {
        return Err(Error::WrongCharacteristic);
    }
    let mut buckets: BTreeMap<u64, Vec<PottsModel>> = BTreeMap::new();
    let mut rows = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            let m = PottsModel::wild(p, a.clone(), b.clone());
            if m.check_basic().is_err() {
                continue;
            }
            let j = m.j_invariant()?;
            buckets.entry(j.index()).or_default().push(m);
            rows.push((a.clone(), b, j));
        }
    }
    finish_census(Variant::Wild, p, field, buckets, rows, cap, shift_witness_in_ext)
}

#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub n: u64,
    /// x^{2N} + 2x^N + 1 factored as (x^N + 1)^2.
    pub square_identity: bool,
    /// y = x^N + 1 and y = -(x^N + 1) are different components.
    pub distinct_components: bool,
    /// Roots of x^N + 1 over its splitting field, in element order.
    pub intersection_points: Vec<FieldElem>,
    pub all_simple: bool,
    /// Everything above agrees with the j -> infinity descriptor.
    pub confirmed: bool,
    pub cusp: CuspDescriptor,
}

/// The t -> 1 limit of y^2 = x^{2N} + 2x^N + t: the right side collapses to
/// (x^N + 1)^2, leaving two rational components crossing at the N simple
/// roots of x^N + 1.
pub fn degeneration_check(n: u64, field: &Field, cap: usize) -> Result<DegenerationReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenN(n));
    }
    if (2 * n) % field.p() == 0 {
        return Err(Error::WrongCharacteristic);
    }
    let mut limit = vec![field.zero(); 2 * n as usize + 1];
    limit[0] = field.one();
    limit[n as usize] = field.from_int(2);
    limit[2 * n as usize] = field.one();
    let limit = Poly::new(field, limit);
    let component = Poly::monomial(field.one(), n as usize).add(&Poly::one(field));
    let square_identity = limit == component.mul(&component);
    let distinct_components = component != component.scale(&field.from_int(-1));
    let sd = roots_over_splitting_field(&component, cap, CURVE_FIELD_CAP)?;
    let all_simple = sd.roots.iter().all(|(_, mult)| *mult == 1);
    let intersection_points: Vec<FieldElem> = sd.roots.into_iter().map(|(r, _)| r).collect();
    let cusp = cusp_combinatorics(n).0;
    let confirmed = square_identity
        && distinct_components
        && all_simple
        && intersection_points.len() as u64 == cusp.nodes
        && cusp.genera == (0, 0)
        && cusp.components == 2;
    Ok(DegenerationReport {
        n,
        square_identity,
        distinct_components,
        intersection_points,
        all_simple,
        confirmed,
        cusp,
    })
}
