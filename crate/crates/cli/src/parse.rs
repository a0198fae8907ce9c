//! Parsing of the CLI's representation and support syntax.
//!
//! A representation spec is either two tokens (`F4 0,0,0,1`), one token with
//! a colon (`F4:0,0,0,1`), or one of the named families `E<n>` (F4) and
//! `tau(m,n)` (B4). For F4, `n=<k>` names the highest weight `k*w4`.

use theta_core::{
    EngineError, IrrepLabel, Rat, Result, So2Support, SystemLabel, Systems, TauLabel, Weight,
};

/// Parses a one-or-two-token representation spec.
pub fn parse_rep(systems: &Systems, tokens: &[String]) -> Result<IrrepLabel> {
    match tokens {
        [single] => parse_rep_single(systems, single),
        [system, weight] => {
            let label = SystemLabel::parse(system)?;
            parse_with_system(systems, label, weight)
        }
        _ => Err(EngineError::InvalidArgument(format!(
            "expected a representation as SYSTEM WEIGHT, SYSTEM:WEIGHT, E<n>, or tau(m,n); got {} tokens",
            tokens.len()
        ))),
    }
}

fn parse_rep_single(systems: &Systems, token: &str) -> Result<IrrepLabel> {
    let t = token.trim();
    if let Some((system, weight)) = t.split_once(':') {
        let label = SystemLabel::parse(system)?;
        return parse_with_system(systems, label, weight);
    }
    if let Some(rest) = t.strip_prefix('E') {
        if let Ok(n) = rest.parse::<u64>() {
            return Ok(IrrepLabel::e_family(systems, n));
        }
    }
    if let Some(tau) = parse_tau(t) {
        return Ok(theta_core::IrrepLabel::new(
            systems.get(SystemLabel::B4),
            tau.highest_weight(),
        )?);
    }
    Err(EngineError::InvalidArgument(format!(
        "cannot parse representation \"{t}\" (expected SYSTEM:WEIGHT, E<n>, or tau(m,n))"
    )))
}

fn parse_with_system(systems: &Systems, label: SystemLabel, weight: &str) -> Result<IrrepLabel> {
    let sys = systems.get(label);
    let w = weight.trim();
    if let Some(k) = w.strip_prefix("n=") {
        if label != SystemLabel::F4 {
            return Err(EngineError::InvalidArgument(
                "the n=<k> shorthand names k*w4 and applies to F4 only".to_string(),
            ));
        }
        let n: u64 = k.trim().parse().map_err(|_| {
            EngineError::InvalidArgument(format!("cannot parse \"{k}\" as a nonnegative integer"))
        })?;
        return Ok(IrrepLabel::e_family(systems, n));
    }
    IrrepLabel::new(sys, Weight::parse(w)?)
}

/// Parses `tau(m,n)`.
pub fn parse_tau(text: &str) -> Option<TauLabel> {
    let inner = text
        .trim()
        .strip_prefix("tau(")?
        .strip_suffix(')')?;
    let (m, n) = inner.split_once(',')?;
    Some(TauLabel::new(
        m.trim().parse().ok()?,
        n.trim().parse().ok()?,
    ))
}

/// Parses an SO(2) support description.
pub fn parse_support(text: &str) -> Result<So2Support> {
    So2Support::parse(text)
}

/// Parses an exact rational.
pub fn parse_rat(text: &str) -> Result<Rat> {
    text.trim().parse::<Rat>().map_err(|_| {
        EngineError::InvalidArgument(format!("cannot parse \"{text}\" as a rational"))
    })
}
