//! The built-in verification suite.
//!
//! Nine checks cover the data the engine exists to certify: the dimension
//! triple, the infinitesimal-character family, the SO(2)-lift branching
//! bound, K-type closure of the compact-side decomposition, the filtration
//! ranks of the sl2 tensor models, the K-type lift generator identity,
//! lowest-type matching, the two oracle equivalences, and the structural
//! invariants. Every check is exact: tolerance zero.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::branching::{branch, classify_tau, make_embedding, EmbeddingName, TauLabel};
use crate::characters::{
    infinitesimal_character, tensor_decompose, weyl_dim, CharCache, IrrepLabel,
};
use crate::error::Result;
use crate::oracles::{d5_row_label, interlace_branch_d5_to_b4, tensor_by_character_product};
use crate::root_system::{SystemLabel, Systems};
use crate::sl2::{
    build_highest_weight_module, build_lowest_weight_module, filtration_rank, hc_parameter,
    tensor_modules, Parity, So2Support,
};
use crate::theta::{lift_ktype, lift_so2type, match_lowest_types, theta_support, Verdict};
use crate::weight::{rat, rat_int, Weight};

/// Verification effort: `Quick` caps the compact-side rows at n = 2 and the
/// sl2 truncation depth at 12; `Full` runs the stated maxima (n = 3,
/// depth 26).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    pub fn parse(s: &str) -> Option<Profile> {
        match s {
            "quick" => Some(Profile::Quick),
            "full" => Some(Profile::Full),
            _ => None,
        }
    }

    fn e_row_max(self) -> u64 {
        match self {
            Profile::Quick => 2,
            Profile::Full => 3,
        }
    }

    fn sl2_depth(self) -> usize {
        match self {
            Profile::Quick => 12,
            Profile::Full => 26,
        }
    }

    fn filtration_max(self) -> usize {
        self.sl2_depth() / 2 - 1
    }
}

impl core::fmt::Display for Profile {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

/// Outcome of a single verification check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckResult {
    fn new(id: &'static str, description: &'static str) -> CheckResult {
        CheckResult {
            id,
            description,
            passed: true,
            details: Vec::new(),
        }
    }

    fn fail(&mut self, detail: String) {
        self.passed = false;
        self.details.push(detail);
    }

    fn note(&mut self, detail: String) {
        self.details.push(detail);
    }
}

pub const CHECK_IDS: [&str; 9] = [
    "dim-triple",
    "infchar-family",
    "so2-lift-branching",
    "ktype-closure",
    "sl2-filtration",
    "ktype-lift-generator",
    "lowest-type-matching",
    "oracle-equivalence",
    "structural-invariants",
];

/// Runs one check by id. Engine errors become check failures, not panics.
pub fn run_check(
    systems: &Systems,
    cache: &mut CharCache,
    profile: Profile,
    id: &str,
) -> Option<CheckResult> {
    let result = match id {
        "dim-triple" => check_dim_triple(systems),
        "infchar-family" => check_infchar_family(systems),
        "so2-lift-branching" => check_so2_lift_branching(systems, cache),
        "ktype-closure" => check_ktype_closure(systems, cache, profile),
        "sl2-filtration" => check_sl2_filtration(profile),
        "ktype-lift-generator" => check_ktype_lift_generator(profile),
        "lowest-type-matching" => check_lowest_type_matching(systems, cache),
        "oracle-equivalence" => check_oracle_equivalence(systems, cache),
        "structural-invariants" => check_structural_invariants(systems, cache, profile),
        _ => return None,
    };
    Some(result.unwrap_or_else(|e| {
        let mut r = CheckResult::new("engine-error", "engine error");
        r.fail(format!("check {id} aborted: {e}"));
        r
    }))
}

/// Runs the whole suite; all checks must pass for a clean verification.
pub fn run_all(profile: Profile) -> Vec<CheckResult> {
    let systems = Systems::new();
    let mut cache = CharCache::new();
    CHECK_IDS
        .iter()
        .map(|id| run_check(&systems, &mut cache, profile, id).expect("known id"))
        .collect()
}

fn check_dim_triple(systems: &Systems) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "dim-triple",
        "dimensions 26 / 16 / 9 of the defining F4 and B4 representations",
    );
    let f4 = systems.get(SystemLabel::F4);
    let b4 = systems.get(SystemLabel::B4);
    let cases = [
        (weyl_dim(f4, &IrrepLabel::e_family(systems, 1))?, 26u32, "F4 [1,0,0,0]"),
        (
            weyl_dim(b4, &TauLabel::new(0, 1).irrep())?,
            16,
            "B4 [1/2,1/2,1/2,1/2]",
        ),
        (weyl_dim(b4, &TauLabel::new(1, 0).irrep())?, 9, "B4 [1,0,0,0]"),
    ];
    for (got, want, what) in cases {
        if got != BigUint::from(want) {
            r.fail(format!("dim {what} = {got}, expected {want}"));
        } else {
            r.note(format!("dim {what} = {got}"));
        }
    }
    Ok(r)
}

fn check_infchar_family(systems: &Systems) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "infchar-family",
        "infinitesimal characters (2n+11,5,3,1)/2 and matching sl2 parameters 2n+11",
    );
    let f4 = systems.get(SystemLabel::F4);
    for n in 0..=20u64 {
        let rep = IrrepLabel::e_family(systems, n);
        let ic = infinitesimal_character(f4, &rep)?;
        let expected = Weight::new(vec![
            rat(2 * n as i64 + 11, 2),
            rat(5, 2),
            rat(3, 2),
            rat(1, 2),
        ]);
        if ic != expected {
            r.fail(format!("infchar at n={n}: got {ic}, expected {expected}"));
        }
        let model = build_lowest_weight_module(2 * n as i64 + 12, 4);
        let p = hc_parameter(&model)?;
        if p != rat_int(2 * n as i64 + 11) {
            r.fail(format!("sl2 parameter at n={n}: got {p}"));
        }
        if p != ic.coord(0) * rat(2, 1) {
            r.fail(format!(
                "sl2 parameter {p} differs from doubled first infchar entry at n={n}"
            ));
        }
    }
    if r.passed {
        r.note("n = 0..20 all match".to_string());
    }
    Ok(r)
}

fn check_so2_lift_branching(systems: &Systems, cache: &mut CharCache) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "so2-lift-branching",
        "SO(2)-lift bound tau(0,0)+...+tau(m,0) equals D5 (m,0,0,0,0) branched to B4, m = 1..6",
    );
    for m in 1..=6i64 {
        let k = 2 * m + 4;
        // lift_so2type itself recomputes the branching and cross-checks;
        // verify the list shape here as well.
        let lift = lift_so2type(systems, cache, k)?;
        let expected: Vec<TauLabel> = (0..=m as u64).map(|j| TauLabel::new(j, 0)).collect();
        if lift.ktype_bound != expected {
            r.fail(format!("bound at m={m} is {:?}", lift.ktype_bound));
        } else {
            r.note(format!(
                "m={m}: tau(0,0)..tau({m},0), multiplicity one each"
            ));
        }
    }
    for k in [4i64, 2, -6] {
        let lift = lift_so2type(systems, cache, k)?;
        if lift.ktype_bound != vec![TauLabel::new(0, 0)] {
            r.fail(format!("bound at k={k} is {:?}", lift.ktype_bound));
        }
    }
    Ok(r)
}

fn check_ktype_closure(
    systems: &Systems,
    cache: &mut CharCache,
    profile: Profile,
) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "ktype-closure",
        "every constituent of the compact rows restricted to B4 is a tau(m,n)",
    );
    let emb = make_embedding(EmbeddingName::B4InF4);
    let f4 = systems.get(SystemLabel::F4);
    for n in 0..=profile.e_row_max() {
        let rep = IrrepLabel::e_family(systems, n);
        let dec = branch(systems, cache, &rep, &emb)?;
        let dim_in = weyl_dim(f4, &rep)?;
        let dim_out = dec.total_dim(systems)?;
        if dim_in != dim_out {
            r.fail(format!("row n={n}: dimension {dim_in} vs {dim_out}"));
        }
        let tc = classify_tau(&dec)?;
        if !tc.is_total() {
            r.fail(format!(
                "row n={n}: {} constituents are not of tau shape",
                tc.failures.len()
            ));
        } else {
            r.note(format!(
                "row n={n}: dim {dim_in}, {}",
                crate::branching::describe_tau_list(&tc.classified)
            ));
        }
        if n == 1 {
            let mut got = tc.classified.clone();
            got.sort();
            let expected = vec![
                (TauLabel::new(0, 0), 1),
                (TauLabel::new(0, 1), 1),
                (TauLabel::new(1, 0), 1),
            ];
            if got != expected {
                r.fail(format!("row n=1 decomposition {got:?} is not the expected triple"));
            }
        }
    }
    Ok(r)
}

fn check_sl2_filtration(profile: Profile) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "sl2-filtration",
        "filtration ranks (N+1)(N+2)/2 for the tensor models delta(n) (x) delta-bar(m)",
    );
    let depth = profile.sl2_depth();
    let max_degree = profile.filtration_max();
    for (n, m) in [(8i64, 4i64), (10, 4), (9, 5), (12, 4)] {
        let a = build_lowest_weight_module(n, depth);
        let b = build_highest_weight_module(m, depth);
        let t = tensor_modules(&a, &b)?;
        for big_n in 0..=max_degree {
            let rank = filtration_rank(&t, 0, big_n)?;
            let expected = (big_n + 1) * (big_n + 2) / 2;
            if rank != expected {
                r.fail(format!(
                    "(n,m)=({n},{m}), N={big_n}: rank {rank}, expected {expected}"
                ));
            }
        }
        r.note(format!("(n,m)=({n},{m}): ranks match up to N={max_degree}"));
    }
    Ok(r)
}

fn check_ktype_lift_generator(profile: Profile) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "ktype-lift-generator",
        "K-type lift generator weight 2m+4 and tensor-model cross-validation",
    );
    for m in 0..=10u64 {
        for n in 0..=10u64 {
            let lift = lift_ktype(m, n);
            if lift.generator_so2_weight != 2 * m as i64 + 4 {
                r.fail(format!(
                    "generator weight at (m,n)=({m},{n}) is {}",
                    lift.generator_so2_weight
                ));
            }
        }
    }
    // Cross-validate the sl2 pair on nine sample K-types: the truncated
    // tensor model must have the stated generator weight and free-module
    // filtration ranks.
    let depth = profile.sl2_depth().min(18);
    let max_degree = depth / 2 - 1;
    for m in 0..=2u64 {
        for n in 0..=2u64 {
            let lift = lift_ktype(m, n);
            let a = build_lowest_weight_module(lift.sl2sl2_pair.lowest, depth);
            let b = build_highest_weight_module(-lift.sl2sl2_pair.highest, depth);
            let t = tensor_modules(&a, &b)?;
            if t.h_weight(0) != lift.generator_so2_weight {
                r.fail(format!(
                    "model generator weight {} differs from 2m+4 at (m,n)=({m},{n})",
                    t.h_weight(0)
                ));
            }
            for big_n in [1usize, max_degree.min(8)] {
                let rank = filtration_rank(&t, 0, big_n)?;
                let expected = (big_n + 1) * (big_n + 2) / 2;
                if rank != expected {
                    r.fail(format!(
                        "(m,n)=({m},{n}), N={big_n}: rank {rank}, expected {expected}"
                    ));
                }
            }
        }
    }
    if r.passed {
        r.note("grid 0..10 x 0..10 and nine tensor models validated".to_string());
    }
    Ok(r)
}

fn check_lowest_type_matching(systems: &Systems, cache: &mut CharCache) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "lowest-type-matching",
        "lowest-type matching passes on the sample supports; vanishing criterion holds",
    );
    let passing = [
        (So2Support::lowest(4)?, 0u64),
        (So2Support::lowest(6)?, 1),
        (So2Support::lowest(8)?, 2),
        (So2Support::lowest(12)?, 4),
        (So2Support::FullParity(Parity::Even), 0),
    ];
    for (sigma, expect_m) in passing {
        let report = match_lowest_types(systems, cache, &sigma)?;
        if report.verdict != Verdict::Pass
            || report.minimal_m != Some(expect_m)
            || report.lowest_ktype != Some(TauLabel::new(expect_m, 0))
            || report.hom_chain_dims.iter().any(|&d| d != 1)
            || report.smaller_type_dims.iter().any(|&(_, d)| d != 0)
        {
            r.fail(format!("matching failed for {sigma}: {report:?}"));
        } else {
            r.note(format!("{sigma}: lowest K-type tau({expect_m},0), chains all one"));
        }
    }
    for sigma in [So2Support::highest(-2)?, So2Support::highest(-6)?] {
        let support = theta_support(&sigma);
        if !support.is_empty() {
            r.fail(format!("{sigma}: lift should vanish but support is {support}"));
        } else {
            r.note(format!("{sigma}: lift vanishes"));
        }
    }
    Ok(r)
}

fn check_oracle_equivalence(systems: &Systems, cache: &mut CharCache) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "oracle-equivalence",
        "Brauer-Klimyk vs character-product peeling; branching vs interlacing",
    );
    let b4 = |coords: &[i64]| IrrepLabel {
        system: SystemLabel::B4,
        highest_weight: Weight::from_ints(coords),
    };
    let mu = TauLabel::new(0, 1).irrep();
    let f4_26 = IrrepLabel::e_family(systems, 1);
    let f4_324 = {
        let f4 = systems.get(SystemLabel::F4);
        IrrepLabel::new(f4, Weight::from_ints(&[2, 0, 0, 0])).expect("dominant")
    };
    // All product dimensions at most 10,000.
    let pairs = vec![
        (b4(&[1, 0, 0, 0]), b4(&[1, 0, 0, 0])),
        (b4(&[1, 0, 0, 0]), mu.clone()),
        (mu.clone(), mu.clone()),
        (b4(&[2, 0, 0, 0]), b4(&[1, 0, 0, 0])),
        (b4(&[1, 1, 0, 0]), b4(&[1, 0, 0, 0])),
        (f4_26.clone(), f4_26.clone()),
        (f4_26.clone(), f4_324),
        (
            IrrepLabel::trivial(systems.get(SystemLabel::A1)),
            IrrepLabel {
                system: SystemLabel::A1,
                highest_weight: Weight::from_ints(&[3]),
            },
        ),
    ];
    for (a, b) in pairs {
        let via_bk = tensor_decompose(systems, cache, &a, &b)?;
        let via_product = tensor_by_character_product(systems, cache, &a, &b)?;
        if via_bk != via_product {
            r.fail(format!("tensor routes disagree on {a} (x) {b}"));
        } else {
            let dim = via_bk.total_dim(systems)?;
            r.note(format!("{a} (x) {b}: {} constituents, dim {dim}", via_bk.entries.len()));
        }
    }
    let emb = make_embedding(EmbeddingName::B4InD5);
    for m in 1..=6u64 {
        let rep = d5_row_label(systems, m);
        let via_branch = branch(systems, cache, &rep, &emb)?;
        let via_interlacing = interlace_branch_d5_to_b4(&rep.highest_weight)?;
        if via_branch != via_interlacing {
            r.fail(format!("branching routes disagree on {rep}"));
        }
    }
    if r.passed {
        r.note("interlacing agrees on D5 rows m = 1..6".to_string());
    }
    Ok(r)
}

fn check_structural_invariants(
    systems: &Systems,
    cache: &mut CharCache,
    profile: Profile,
) -> Result<CheckResult> {
    let mut r = CheckResult::new(
        "structural-invariants",
        "Weyl group orders by closure, sl2 bracket identities, nonnegative peeling",
    );
    for (label, order) in [
        (SystemLabel::F4, 1152u64),
        (SystemLabel::B4, 384),
        (SystemLabel::D5, 1920),
        (SystemLabel::A1, 2),
    ] {
        let got = systems.get(label).weyl_order();
        if got != order {
            r.fail(format!("Weyl order of {label}: {got}, expected {order}"));
        }
    }
    r.note("Weyl orders 1152/384/1920/2".to_string());

    let depth = profile.sl2_depth();
    let low = build_lowest_weight_module(4, 20.min(depth));
    let high = build_highest_weight_module(4, 20.min(depth));
    let tensor = tensor_modules(
        &build_lowest_weight_module(8, 16.min(depth)),
        &build_highest_weight_module(4, 16.min(depth)),
    )?;
    for (what, module) in [
        ("lowest(4)", &low),
        ("highest(-4)", &high),
        ("delta(8) (x) delta-bar(4)", &tensor),
    ] {
        if let Err(e) = module.check_brackets() {
            r.fail(format!("bracket identities fail on {what}: {e}"));
        }
    }
    r.note("bracket identities hold on interior blocks".to_string());

    // Peeling nonnegativity is a hard internal error; exercising the two
    // restriction paths is the check.
    let emb_f4 = make_embedding(EmbeddingName::B4InF4);
    let emb_d5 = make_embedding(EmbeddingName::B4InD5);
    branch(systems, cache, &IrrepLabel::e_family(systems, 2), &emb_f4)?;
    branch(systems, cache, &d5_row_label(systems, 4), &emb_d5)?;
    r.note("peeling stayed nonnegative on the exercised restrictions".to_string());

    // Orbit sizes divide the group order.
    let f4 = systems.get(SystemLabel::F4);
    let samples = [
        Weight::from_ints(&[1, 0, 0, 0]),
        Weight::from_ints(&[1, 1, 0, 0]),
        Weight::parse("3/2,1/2,1/2,1/2").expect("parses"),
    ];
    let mut orbit_sizes = BTreeSet::new();
    for w in &samples {
        let size = f4.orbit_size(w);
        orbit_sizes.insert(size);
        if f4.weyl_order() % size != 0 {
            r.fail(format!("orbit size {size} of {w} does not divide 1152"));
        }
    }
    r.note(format!("sampled F4 orbit sizes {orbit_sizes:?} divide 1152"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes_everything() {
        for result in run_all(Profile::Quick) {
            assert!(
                result.passed,
                "check {} failed: {:?}",
                result.id, result.details
            );
        }
    }

    #[test]
    fn unknown_check_id_is_none() {
        let systems = Systems::new();
        let mut cache = CharCache::new();
        assert!(run_check(&systems, &mut cache, Profile::Quick, "nope").is_none());
    }
}
