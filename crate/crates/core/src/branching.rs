//! Restriction of characters along the two embeddings in play: the equal
//! rank subsystem `B4` inside `F4`, and `B4 = so(9)` inside the `D5 = so(10)`
//! Levi factor. Constituents of `B4` decompositions are classified as
//! `tau(m,n)` with highest weight `(2m+n, n, n, n)/2`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::characters::{weyl_dim_of, CharCache, DecompositionList, IrrepLabel};
use crate::error::{EngineError, Result};
use crate::root_system::{SystemLabel, Systems};
use crate::weight::{rat, Rat, Weight};

/// The two supported restriction maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingName {
    /// `B4` as the integral-coordinate subsystem of `F4`; restriction is the
    /// identity on coordinates.
    B4InF4,
    /// `so(9)` inside `so(10)`; restriction deletes the fifth coordinate.
    B4InD5,
}

impl EmbeddingName {
    pub fn as_str(self) -> &'static str {
        match self {
            EmbeddingName::B4InF4 => "B4_in_F4",
            EmbeddingName::B4InD5 => "B4_in_D5",
        }
    }

    pub fn parse(s: &str) -> Result<EmbeddingName> {
        match s.trim() {
            "B4_in_F4" => Ok(EmbeddingName::B4InF4),
            "B4_in_D5" => Ok(EmbeddingName::B4InD5),
            other => Err(EngineError::UnknownEmbedding(other.to_string())),
        }
    }
}

impl core::fmt::Display for EmbeddingName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A restriction map from source weight coordinates to subalgebra weight
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub name: EmbeddingName,
    pub source_system: SystemLabel,
    pub target_system: SystemLabel,
    /// Rows = target rank, columns = source rank.
    pub matrix: Vec<Vec<Rat>>,
}

impl EmbeddingMap {
    /// Applies the restriction to a source weight.
    pub fn restrict(&self, w: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| {
                    let mut acc = Rat::zero();
                    for (c, x) in row.iter().zip(w.coords()) {
                        acc += c * x;
                    }
                    acc
                })
                .collect(),
        )
    }
}

/// Builds one of the two named embeddings.
pub fn make_embedding(name: EmbeddingName) -> EmbeddingMap {
    let (source, target, matrix) = match name {
        EmbeddingName::B4InF4 => (
            SystemLabel::F4,
            SystemLabel::B4,
            identity_rows(4, 4),
        ),
        EmbeddingName::B4InD5 => (
            SystemLabel::D5,
            SystemLabel::B4,
            identity_rows(4, 5),
        ),
    };
    EmbeddingMap {
        name,
        source_system: source,
        target_system: target,
        matrix,
    }
}

fn identity_rows(rows: usize, cols: usize) -> Vec<Vec<Rat>> {
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| if r == c { rat(1, 1) } else { rat(0, 1) })
                .collect()
        })
        .collect()
}

/// Decomposes a Weyl-invariant weight multiset of `system` into irreducible
/// characters by peeling: repeatedly take the lexicographically greatest
/// weight with positive residual multiplicity (necessarily dominant, since
/// every simple root is lex-positive), record it, and subtract its full
/// character.
pub fn decompose_character(
    systems: &Systems,
    cache: &mut CharCache,
    system: SystemLabel,
    mut residual: BTreeMap<Weight, i64>,
) -> Result<DecompositionList> {
    let sys = systems.get(system);
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    residual.retain(|_, m| *m != 0);
    while let Some((top, &m)) = residual.last_key_value() {
        let top = top.clone();
        if m < 0 {
            return Err(EngineError::InconsistentEmbedding(format!(
                "negative residual multiplicity {m} at {top}"
            )));
        }
        if !sys.is_dominant_integral(&top) {
            return Err(EngineError::InconsistentEmbedding(format!(
                "leading residual weight {top} is not dominant integral for {system}"
            )));
        }
        let rep = IrrepLabel {
            system,
            highest_weight: top.clone(),
        };
        let chr = cache.character(sys, &rep)?;
        for (w, mult) in chr.full_mults(sys) {
            let entry = residual.entry(w.clone()).or_insert(0);
            *entry -= m * mult as i64;
            if *entry == 0 {
                residual.remove(&w);
            } else if *entry < 0 {
                return Err(EngineError::InconsistentEmbedding(format!(
                    "negative residual multiplicity {entry} at {w} while peeling {top}"
                )));
            }
        }
        *out.entry(top).or_insert(0) += m as u64;
    }
    Ok(DecompositionList::from_map(system, out))
}

/// Restricts an irreducible character along `emb` and decomposes the result
/// into target-system irreducibles.
pub fn branch(
    systems: &Systems,
    cache: &mut CharCache,
    rep: &IrrepLabel,
    emb: &EmbeddingMap,
) -> Result<DecompositionList> {
    if rep.system != emb.source_system {
        return Err(EngineError::SystemMismatch(
            rep.system.to_string(),
            emb.source_system.to_string(),
        ));
    }
    let source = systems.get(rep.system);
    let chr = cache.character(source, rep)?;

    // Restriction does not commute with the target Weyl action, so work on
    // the full weight multiset.
    let mut restricted: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, m) in chr.full_mults(source) {
        *restricted.entry(emb.restrict(&w)).or_insert(0) += m as i64;
    }

    let dec = decompose_character(systems, cache, emb.target_system, restricted)?;

    let input_dim = weyl_dim_of(source, &rep.highest_weight)?;
    let output_dim = dec.total_dim(systems)?;
    if input_dim != output_dim {
        return Err(EngineError::InconsistentEmbedding(format!(
            "dimension mismatch: {input_dim} restricted vs {output_dim} decomposed"
        )));
    }
    Ok(dec)
}

/// K-type label `tau(m,n)`, the `B4` irrep with highest weight
/// `(2m+n, n, n, n)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TauLabel {
    pub m: u64,
    pub n: u64,
}

impl TauLabel {
    pub fn new(m: u64, n: u64) -> TauLabel {
        TauLabel { m, n }
    }

    pub fn highest_weight(&self) -> Weight {
        let m = self.m as i64;
        let n = self.n as i64;
        Weight::new(vec![rat(2 * m + n, 2), rat(n, 2), rat(n, 2), rat(n, 2)])
    }

    pub fn irrep(&self) -> IrrepLabel {
        IrrepLabel {
            system: SystemLabel::B4,
            highest_weight: self.highest_weight(),
        }
    }

    /// Inverts `w = (2m+n, n, n, n)/2` if possible.
    pub fn from_weight(w: &Weight) -> Option<TauLabel> {
        if w.len() != 4 || w.coord(1) != w.coord(2) || w.coord(1) != w.coord(3) {
            return None;
        }
        let n2 = w.coord(1) * rat(2, 1);
        let m1 = w.coord(0) - w.coord(1);
        if !n2.is_integer() || n2.is_negative() || !m1.is_integer() || m1.is_negative() {
            return None;
        }
        Some(TauLabel {
            m: m1.to_integer().to_u64()?,
            n: n2.to_integer().to_u64()?,
        })
    }
}

impl core::fmt::Display for TauLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "tau({},{})", self.m, self.n)
    }
}

/// Outcome of rewriting a `B4` decomposition in terms of `tau(m,n)`.
/// A constituent that is not of that shape is reported, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauClassification {
    pub classified: Vec<(TauLabel, u64)>,
    pub failures: Vec<(IrrepLabel, u64)>,
}

impl TauClassification {
    pub fn is_total(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn multiplicity_of(&self, tau: TauLabel) -> u64 {
        self.classified
            .iter()
            .find(|(t, _)| *t == tau)
            .map_or(0, |(_, m)| *m)
    }
}

impl core::fmt::Display for TauClassification {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for (t, m) in &self.classified {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{t}")?;
        }
        for (l, m) in &self.failures {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{m}*?[{}]", l.highest_weight)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Rewrites every entry of a `B4` decomposition as `tau(m,n)`; entries not
/// of that shape land in the failure report.
pub fn classify_tau(dec: &DecompositionList) -> Result<TauClassification> {
    let mut classified = Vec::new();
    let mut failures = Vec::new();
    for (label, m) in &dec.entries {
        if label.system != SystemLabel::B4 {
            return Err(EngineError::InvalidArgument(format!(
                "classify_tau expects a B4 decomposition, found {}",
                label.system
            )));
        }
        match TauLabel::from_weight(&label.highest_weight) {
            Some(tau) => classified.push((tau, *m)),
            None => failures.push((label.clone(), *m)),
        }
    }
    Ok(TauClassification {
        classified,
        failures,
    })
}

/// Convenience description used by reports: `tau(0,0) + ... + tau(m,0)`.
pub fn tau_progression(m: u64) -> Vec<TauLabel> {
    (0..=m).map(|k| TauLabel::new(k, 0)).collect()
}

pub(crate) fn describe_tau_list(list: &[(TauLabel, u64)]) -> String {
    let mut s = String::new();
    for (i, (t, m)) in list.iter().enumerate() {
        if i > 0 {
            s.push_str(" + ");
        }
        if *m != 1 {
            s.push_str(&format!("{m}*"));
        }
        s.push_str(&t.to_string());
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn embedding_names_parse_and_reject() {
        assert_eq!(
            EmbeddingName::parse("B4_in_F4").unwrap(),
            EmbeddingName::B4InF4
        );
        assert_eq!(
            EmbeddingName::parse("B4_in_D5").unwrap(),
            EmbeddingName::B4InD5
        );
        let err = EmbeddingName::parse("B4_in_E8").unwrap_err();
        assert_eq!(err.to_string(), "unknown embedding: B4_in_E8");
    }

    #[test]
    fn b4_in_f4_is_identity_on_coordinates() {
        let emb = make_embedding(EmbeddingName::B4InF4);
        let mu = Weight::parse("1/2,1/2,1/2,1/2").unwrap();
        assert_eq!(emb.restrict(&mu), mu);
    }

    #[test]
    fn b4_in_d5_deletes_last_coordinate() {
        let emb = make_embedding(EmbeddingName::B4InD5);
        let w = Weight::from_ints(&[3, 0, 0, 0, 0]);
        assert_eq!(emb.restrict(&w), Weight::from_ints(&[3, 0, 0, 0]));
    }

    #[test]
    fn f4_positive_roots_restrict_to_b4_roots_and_spin_weights() {
        let systems = Systems::new();
        let f4 = systems.get(SystemLabel::F4);
        let b4 = systems.get(SystemLabel::B4);
        let emb = make_embedding(EmbeddingName::B4InF4);

        let images: BTreeSet<Weight> = f4
            .positive_roots()
            .iter()
            .map(|r| emb.restrict(r))
            .collect();
        let b4_positives: BTreeSet<Weight> = b4.positive_roots().iter().cloned().collect();
        assert!(b4_positives.is_subset(&images));

        let extras: BTreeSet<Weight> = images.difference(&b4_positives).cloned().collect();
        // The remaining 8 images are the spin weights with positive first
        // coordinate: half of the 16-element spin orbit.
        assert_eq!(extras.len(), 8);
        let spin_orbit = b4.weyl_orbit(&Weight::parse("1/2,1/2,1/2,1/2").unwrap());
        for w in &extras {
            assert!(spin_orbit.contains(w));
            assert!(w.coord(0) > &rat(0, 1));
        }
    }

    #[test]
    fn trivial_rep_branches_to_trivial() {
        let systems = Systems::new();
        let mut cache = CharCache::new();
        let emb = make_embedding(EmbeddingName::B4InF4);
        let e0 = IrrepLabel::trivial(systems.get(SystemLabel::F4));
        let dec = branch(&systems, &mut cache, &e0, &emb).unwrap();
        assert_eq!(dec.entries.len(), 1);
        let tc = classify_tau(&dec).unwrap();
        assert_eq!(tc.classified, vec![(TauLabel::new(0, 0), 1)]);
    }

    #[test]
    fn e1_branches_to_three_tau_types() {
        let systems = Systems::new();
        let mut cache = CharCache::new();
        let emb = make_embedding(EmbeddingName::B4InF4);
        let e1 = IrrepLabel::e_family(&systems, 1);
        let dec = branch(&systems, &mut cache, &e1, &emb).unwrap();
        let tc = classify_tau(&dec).unwrap();
        assert!(tc.is_total());
        let mut got: Vec<(TauLabel, u64)> = tc.classified.clone();
        got.sort();
        assert_eq!(
            got,
            vec![
                (TauLabel::new(0, 0), 1),
                (TauLabel::new(0, 1), 1),
                (TauLabel::new(1, 0), 1),
            ]
        );
        // 26 = 1 + 16 + 9.
        assert_eq!(
            dec.total_dim(&systems).unwrap(),
            num_bigint::BigUint::from(26u32)
        );
    }

    #[test]
    fn d5_symmetric_powers_branch_to_tau_progression() {
        let systems = Systems::new();
        let mut cache = CharCache::new();
        let emb = make_embedding(EmbeddingName::B4InD5);
        for m in 0..=4u64 {
            let mut coords = [0i64; 5];
            coords[0] = m as i64;
            let rep = IrrepLabel::new(
                systems.get(SystemLabel::D5),
                Weight::from_ints(&coords),
            )
            .unwrap();
            let dec = branch(&systems, &mut cache, &rep, &emb).unwrap();
            let tc = classify_tau(&dec).unwrap();
            assert!(tc.is_total());
            let mut got = tc.classified.clone();
            got.sort();
            let expected: Vec<(TauLabel, u64)> =
                tau_progression(m).into_iter().map(|t| (t, 1)).collect();
            assert_eq!(got, expected, "branching of (m,0,0,0,0) with m={m}");
        }
    }

    #[test]
    fn branch_rejects_wrong_source_system() {
        let systems = Systems::new();
        let mut cache = CharCache::new();
        let emb = make_embedding(EmbeddingName::B4InD5);
        let rep = IrrepLabel::e_family(&systems, 1);
        assert!(matches!(
            branch(&systems, &mut cache, &rep, &emb),
            Err(EngineError::SystemMismatch(_, _))
        ));
    }

    #[test]
    fn classify_tau_reports_non_tau_constituents() {
        let w = Weight::from_ints(&[1, 1, 0, 0]);
        assert_eq!(TauLabel::from_weight(&w), None);
        let mut map = BTreeMap::new();
        map.insert(w, 1u64);
        map.insert(Weight::parse("1,0,0,0").unwrap(), 2u64);
        let dec = DecompositionList::from_map(SystemLabel::B4, map);
        let tc = classify_tau(&dec).unwrap();
        assert_eq!(tc.classified, vec![(TauLabel::new(1, 0), 2)]);
        assert_eq!(tc.failures.len(), 1);
        assert!(!tc.is_total());
    }

    #[test]
    fn tau_weight_round_trip() {
        for m in 0..5 {
            for n in 0..5 {
                let tau = TauLabel::new(m, n);
                assert_eq!(TauLabel::from_weight(&tau.highest_weight()), Some(tau));
            }
        }
        assert_eq!(
            TauLabel::from_weight(&Weight::parse("1,0,0,0").unwrap()),
            Some(TauLabel::new(1, 0))
        );
    }
}
