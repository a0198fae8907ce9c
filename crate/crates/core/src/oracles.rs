//! Independent cross-check routes for the two decomposition algorithms.
//!
//! - Tensor products: pointwise convolution of the two formal characters,
//!   then peeling of dominant leading terms. No Weyl-chamber reflections are
//!   involved, so this is a genuinely different route than Brauer-Klimyk.
//! - `D5 -> B4` branching: direct enumeration of the classical interlacing
//!   patterns for `so(10) > so(9)`, with no character arithmetic at all.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive};

use crate::branching::decompose_character;
use crate::characters::{CharCache, DecompositionList, IrrepLabel};
use crate::error::{EngineError, Result};
use crate::root_system::{SystemLabel, Systems};
use crate::weight::{rat, Rat, Weight};

/// Tensor decomposition by character convolution and peeling.
pub fn tensor_by_character_product(
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
    let chr_a = cache.character(sys, a)?;
    let chr_b = cache.character(sys, b)?;
    let full_a = chr_a.full_mults(sys);
    let full_b = chr_b.full_mults(sys);

    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, ma) in &full_a {
        for (wb, mb) in &full_b {
            *product.entry(wa + wb).or_insert(0) += (ma * mb) as i64;
        }
    }
    decompose_character(systems, cache, a.system, product)
}

/// `so(10) -> so(9)` branching of the `D5` irrep with highest weight
/// `(a1,...,a5)` by brute-force enumeration of interlacing patterns
/// `a1 >= b1 >= a2 >= b2 >= a3 >= b3 >= a4 >= b4 >= |a5|`, with the `b_i`
/// in the same integrality class as the `a_i`. Each pattern occurs with
/// multiplicity one.
pub fn interlace_branch_d5_to_b4(hw: &Weight) -> Result<DecompositionList> {
    if hw.len() != 5 {
        return Err(EngineError::InvalidArgument(
            "interlacing oracle expects a D5 weight with 5 coordinates".to_string(),
        ));
    }
    // Dominance for D5: a1 >= a2 >= a3 >= a4 >= |a5|.
    let a: Vec<Rat> = hw.coords().to_vec();
    let abs_a5 = if a[4].is_negative() { -a[4].clone() } else { a[4].clone() };
    for i in 0..3 {
        if a[i] < a[i + 1] {
            return Err(EngineError::InvalidArgument(
                "interlacing oracle expects a dominant D5 weight".to_string(),
            ));
        }
    }
    if a[3] < abs_a5 {
        return Err(EngineError::InvalidArgument(
            "interlacing oracle expects a dominant D5 weight".to_string(),
        ));
    }

    // The b_i run in steps of 1 inside [lower_i, upper_i], starting on the
    // integrality class of the a_i (all integers or all half-odd-integers).
    let uppers = [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()];
    let lowers = [a[1].clone(), a[2].clone(), a[3].clone(), abs_a5];

    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    let mut pattern: Vec<Rat> = Vec::with_capacity(4);
    enumerate(&uppers, &lowers, 0, &mut pattern, &mut out)?;
    Ok(DecompositionList::from_map(SystemLabel::B4, out))
}

fn enumerate(
    uppers: &[Rat; 4],
    lowers: &[Rat; 4],
    level: usize,
    pattern: &mut Vec<Rat>,
    out: &mut BTreeMap<Weight, u64>,
) -> Result<()> {
    if level == 4 {
        let w = Weight::new(pattern.clone());
        *out.entry(w).or_insert(0) += 1;
        return Ok(());
    }
    // Largest class member <= upper bound.
    let upper = &uppers[level];
    let lower = &lowers[level];
    let mut b = upper.clone();
    if !(&b - lower).is_integer() {
        return Err(EngineError::InternalConsistency(
            "interlacing bounds in different integrality classes".to_string(),
        ));
    }
    let steps = (&b - lower).to_integer().to_i64().ok_or_else(|| {
        EngineError::InternalConsistency("interlacing range too large".to_string())
    })?;
    for _ in 0..=steps {
        pattern.push(b.clone());
        enumerate(uppers, lowers, level + 1, pattern, out)?;
        pattern.pop();
        b -= Rat::one();
    }
    Ok(())
}

/// Convenience: the `D5` label `(m,0,0,0,0)`.
pub fn d5_row_label(systems: &Systems, m: u64) -> IrrepLabel {
    let mut coords = Vec::with_capacity(5);
    coords.push(rat(m as i64, 1));
    for _ in 0..4 {
        coords.push(rat(0, 1));
    }
    IrrepLabel::new(systems.get(SystemLabel::D5), Weight::new(coords))
        .expect("(m,0,0,0,0) is dominant integral")
}
