//! Finite-dimensional representation arithmetic: Weyl dimensions,
//! Freudenthal weight multiplicities, formal characters, Brauer-Klimyk
//! tensor decompositions, and infinitesimal characters.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{EngineError, Result};
use crate::root_system::{RootSystem, SystemLabel, Systems};
use crate::weight::{rat, rat_int, Rat, Weight};

/// Label of an irreducible finite-dimensional representation: a root system
/// together with a dominant integral highest weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub system: SystemLabel,
    pub highest_weight: Weight,
}

impl IrrepLabel {
    /// Validating constructor; rejects non-dominant or non-integral weights.
    pub fn new(sys: &RootSystem, highest_weight: Weight) -> Result<IrrepLabel> {
        if highest_weight.len() != sys.rank() {
            return Err(EngineError::InvalidHighestWeight(format!(
                "{} has {} coordinates, {} needs {}",
                highest_weight,
                highest_weight.len(),
                sys.label(),
                sys.rank()
            )));
        }
        if !sys.is_dominant_integral(&highest_weight) {
            return Err(EngineError::InvalidHighestWeight(format!(
                "{} is not dominant integral for {}",
                highest_weight,
                sys.label()
            )));
        }
        Ok(IrrepLabel {
            system: sys.label(),
            highest_weight,
        })
    }

    /// The n-th member of the family `E_n = (F4, n*w4)`.
    pub fn e_family(systems: &Systems, n: u64) -> IrrepLabel {
        let f4 = systems.get(SystemLabel::F4);
        let hw = f4.fundamental_weight(3) * (n as i64);
        IrrepLabel::new(f4, hw).expect("n*w4 is dominant integral")
    }

    pub fn trivial(sys: &RootSystem) -> IrrepLabel {
        IrrepLabel::new(sys, Weight::zero(sys.rank())).expect("zero weight is dominant")
    }
}

impl core::fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} [{}]", self.system, self.highest_weight)
    }
}

/// Formal character of a finite-dimensional representation.
///
/// Stored on dominant weights only, with on-demand Weyl-orbit expansion:
/// F4 orbits reach 1152 elements, so dominant compression saves roughly
/// three orders of magnitude for the larger characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    pub system: SystemLabel,
    dominant: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn from_dominant(system: SystemLabel, dominant: BTreeMap<Weight, u64>) -> Self {
        FormalCharacter { system, dominant }
    }

    /// Dominant weights with their multiplicities.
    pub fn dominant_mults(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    /// Multiplicity of an arbitrary weight, through its dominant
    /// representative.
    pub fn mult(&self, sys: &RootSystem, w: &Weight) -> u64 {
        let dom = sys.dominant_representative(w);
        self.dominant.get(&dom).copied().unwrap_or(0)
    }

    /// The full weight multiset, expanded over Weyl orbits.
    pub fn full_mults(&self, sys: &RootSystem) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (w, &m) in &self.dominant {
            for x in sys.weyl_orbit(w) {
                out.insert(x, m);
            }
        }
        out
    }

    /// Total dimension: sum of multiplicities over the full weight multiset.
    pub fn dim(&self, sys: &RootSystem) -> BigUint {
        let mut total = BigUint::zero();
        for (w, &m) in &self.dominant {
            total += BigUint::from(sys.orbit_size(w)) * BigUint::from(m);
        }
        total
    }
}

/// A finite multiset of irreducible constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionList {
    /// Pairwise-distinct labels with positive multiplicities, sorted by
    /// highest weight.
    pub entries: Vec<(IrrepLabel, u64)>,
}

impl DecompositionList {
    pub fn from_map(system: SystemLabel, map: BTreeMap<Weight, u64>) -> Self {
        DecompositionList {
            entries: map
                .into_iter()
                .filter(|(_, m)| *m > 0)
                .map(|(w, m)| {
                    (
                        IrrepLabel {
                            system,
                            highest_weight: w,
                        },
                        m,
                    )
                })
                .collect(),
        }
    }

    pub fn total_dim(&self, systems: &Systems) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (label, m) in &self.entries {
            total +=
                weyl_dim_of(systems.get(label.system), &label.highest_weight)? * BigUint::from(*m);
        }
        Ok(total)
    }

    pub fn multiplicity_of(&self, label: &IrrepLabel) -> u64 {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map_or(0, |(_, m)| *m)
    }
}

impl core::fmt::Display for DecompositionList {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (label, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "[{}]", label.highest_weight)?;
        }
        Ok(())
    }
}

/// Weyl dimension of the irrep with the given dominant integral highest
/// weight: the product over positive roots of `(hw+rho, a)/(rho, a)`.
pub fn weyl_dim(sys: &RootSystem, rep: &IrrepLabel) -> Result<BigUint> {
    check_label(sys, rep)?;
    weyl_dim_of(sys, &rep.highest_weight)
}

pub(crate) fn weyl_dim_of(sys: &RootSystem, hw: &Weight) -> Result<BigUint> {
    if !sys.is_dominant_integral(hw) {
        return Err(EngineError::InvalidHighestWeight(format!(
            "{} is not dominant integral for {}",
            hw,
            sys.label()
        )));
    }
    let shifted = hw + sys.rho();
    let mut num = Rat::one();
    let mut den = Rat::one();
    for alpha in sys.positive_roots() {
        num *= shifted.dot(alpha);
        den *= sys.rho().dot(alpha);
    }
    let q = num / den;
    if !q.is_integer() || q.is_negative() {
        return Err(EngineError::InternalConsistency(format!(
            "Weyl dimension {q} is not a nonnegative integer"
        )));
    }
    Ok(q.to_integer().to_biguint().expect("nonnegative"))
}

fn check_label(sys: &RootSystem, rep: &IrrepLabel) -> Result<()> {
    if rep.system != sys.label() {
        return Err(EngineError::SystemMismatch(
            rep.system.to_string(),
            sys.label().to_string(),
        ));
    }
    if rep.highest_weight.len() != sys.rank() || !sys.is_dominant_integral(&rep.highest_weight) {
        return Err(EngineError::InvalidHighestWeight(format!(
            "{} is not dominant integral for {}",
            rep.highest_weight,
            sys.label()
        )));
    }
    Ok(())
}

/// Enumerates the dominant weights `v <= hw` (difference a nonnegative
/// integer combination of simple roots), i.e. the dominant weights of the
/// irrep with highest weight `hw`.
///
/// Covers in the dominance order on dominant weights differ by single
/// positive roots, so closing `{hw}` under "subtract a positive root, keep
/// dominant results" reaches all of them.
fn dominant_weights_below(sys: &RootSystem, hw: &Weight) -> Vec<Weight> {
    let mut found: alloc::collections::BTreeSet<Weight> = alloc::collections::BTreeSet::new();
    let mut queue: Vec<Weight> = Vec::new();
    found.insert(hw.clone());
    queue.push(hw.clone());
    while let Some(v) = queue.pop() {
        for alpha in sys.positive_roots() {
            let next = &v - alpha;
            if sys.is_dominant(&next) && found.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut weights: Vec<Weight> = found.into_iter().collect();
    // Sort by increasing depth below hw so that Freudenthal sees higher
    // weights first.
    weights.sort_by_key(|v| {
        let diff = hw - v;
        let coords = sys.simple_coords(&diff);
        let mut height = Rat::zero();
        for c in &coords {
            height += c;
        }
        height.to_integer().to_i64().expect("small height")
    });
    weights
}

/// Full weight-multiplicity map of the irrep `rep`, computed by the
/// Freudenthal recursion over dominant weights.
pub fn freudenthal_character(sys: &RootSystem, rep: &IrrepLabel) -> Result<FormalCharacter> {
    check_label(sys, rep)?;
    let hw = &rep.highest_weight;
    let rho = sys.rho();
    let shifted_norm = (hw + rho).norm_sq();
    let hw_norm = hw.norm_sq();

    let weights = dominant_weights_below(sys, hw);
    let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
    for v in &weights {
        if v == hw {
            mults.insert(v.clone(), 1);
            continue;
        }
        // Freudenthal: ((hw+rho)^2 - (v+rho)^2) m(v)
        //            = 2 sum_{a>0} sum_{k>=1} m(v+ka) (v+ka, a).
        let mut sum = Rat::zero();
        for alpha in sys.positive_roots() {
            let mut k = 1i64;
            loop {
                let x = v + &alpha.scale(&rat_int(k));
                let xa = x.dot(alpha);
                // Weights of the irrep lie in the convex hull of the orbit
                // of hw; once outside that norm ball and moving outward the
                // string has no more weights.
                if x.norm_sq() > hw_norm && !xa.is_negative() {
                    break;
                }
                let dom = sys.dominant_representative(&x);
                if let Some(&m) = mults.get(&dom) {
                    sum += xa * rat_int(m as i64);
                }
                k += 1;
            }
        }
        let denom = &shifted_norm - (v + rho).norm_sq();
        if !denom.is_positive() {
            return Err(EngineError::InternalConsistency(format!(
                "Freudenthal denominator not positive at weight {v}"
            )));
        }
        let m = rat_int(2) * sum / denom;
        if !m.is_integer() || m.is_negative() {
            return Err(EngineError::InternalConsistency(format!(
                "Freudenthal multiplicity {m} at weight {v} is not a nonnegative integer"
            )));
        }
        let m = m
            .to_integer()
            .to_u64()
            .ok_or_else(|| EngineError::InternalConsistency("multiplicity overflow".to_string()))?;
        if m > 0 {
            mults.insert(v.clone(), m);
        }
    }

    let chr = FormalCharacter::from_dominant(rep.system, mults);
    let total = chr.dim(sys);
    let expected = weyl_dim_of(sys, hw)?;
    if total != expected {
        return Err(EngineError::InternalConsistency(format!(
            "character of {rep} sums to {total}, Weyl dimension is {expected}"
        )));
    }
    Ok(chr)
}

/// Memo cache of formal characters, keyed by irrep label.
///
/// Recomputation is deterministic, so writes are idempotent; wrap the cache
/// in a lock for shared use across threads.
#[derive(Debug, Default, Clone)]
pub struct CharCache {
    map: BTreeMap<IrrepLabel, Arc<FormalCharacter>>,
}

impl CharCache {
    pub fn new() -> Self {
        CharCache::default()
    }

    pub fn character(
        &mut self,
        sys: &RootSystem,
        rep: &IrrepLabel,
    ) -> Result<Arc<FormalCharacter>> {
        if let Some(c) = self.map.get(rep) {
            return Ok(Arc::clone(c));
        }
        let c = Arc::new(freudenthal_character(sys, rep)?);
        self.map.insert(rep.clone(), Arc::clone(&c));
        Ok(c)
    }
}

/// Tensor-product decomposition by the Brauer-Klimyk rule: for each weight
/// `u` of `b`, reflect `hw_a + rho + u` to the dominant chamber, drop the
/// singular terms, and accumulate signed multiplicities.
pub fn tensor_decompose(
    systems: &Systems,
    cache: &mut CharCache,
    a: &IrrepLabel,
    b: &IrrepLabel,
) -> Result<DecompositionList> {
    if a.system != b.system {
        return Err(EngineError::SystemMismatch(
            a.system.to_string(),
            b.system.to_string(),
        ));
    }
    let sys = systems.get(a.system);
    check_label(sys, a)?;
    check_label(sys, b)?;

    let chr_b = cache.character(sys, b)?;
    let rho = sys.rho();
    let base = &a.highest_weight + rho;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (u, m) in chr_b.full_mults(sys) {
        let t = &base + &u;
        let (dom, reflections) = sys.to_dominant(&t);
        if sys.simple_roots().iter().any(|al| dom.dot(al).is_zero()) {
            continue; // singular: fixed by a reflection, contributes zero
        }
        let sign = if reflections % 2 == 0 { 1 } else { -1 };
        let hw = &dom - rho;
        *acc.entry(hw).or_insert(0) += sign * m as i64;
    }

    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (w, m) in acc {
        if m < 0 {
            return Err(EngineError::InternalConsistency(format!(
                "negative multiplicity {m} at {w} in tensor decomposition"
            )));
        }
        if m > 0 {
            out.insert(w, m as u64);
        }
    }
    let dec = DecompositionList::from_map(a.system, out);

    let lhs = weyl_dim_of(sys, &a.highest_weight)? * weyl_dim_of(sys, &b.highest_weight)?;
    let rhs = dec.total_dim(systems)?;
    if lhs != rhs {
        return Err(EngineError::InternalConsistency(format!(
            "tensor dimension identity fails: {lhs} vs {rhs}"
        )));
    }
    Ok(dec)
}

/// Infinitesimal character of `rep`: the dominant representative of
/// `hw + rho`.
pub fn infinitesimal_character(sys: &RootSystem, rep: &IrrepLabel) -> Result<Weight> {
    check_label(sys, rep)?;
    Ok(sys.dominant_representative(&(&rep.highest_weight + sys.rho())))
}

/// Result of transporting an sl2 infinitesimal character `x` to F4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfCharTransfer {
    /// The literal image `(x,5,3,1)/2`.
    pub raw: Weight,
    /// Its dominant-chamber representative, reported alongside.
    pub dominant: Weight,
    /// Set when the image lies on a Weyl-chamber wall.
    pub singular: bool,
    /// Set for `x <= 0`, where no chamber normalization is attempted.
    pub nonpositive_warning: bool,
}

/// The infinitesimal-character correspondence `x -> (x,5,3,1)/2` from sl2
/// parameters to F4.
pub fn theta_infchar_transfer(systems: &Systems, x: &Rat) -> InfCharTransfer {
    let f4 = systems.get(SystemLabel::F4);
    let half = rat(1, 2);
    let raw = Weight::new(alloc::vec![
        x * &half,
        rat(5, 2),
        rat(3, 2),
        rat(1, 2),
    ]);
    let dominant = f4.dominant_representative(&raw);
    InfCharTransfer {
        singular: f4.is_singular(&raw),
        nonpositive_warning: !x.is_positive(),
        raw,
        dominant,
    }
}
