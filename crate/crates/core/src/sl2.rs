//! Explicit truncated models of lowest/highest weight sl2-modules and their
//! tensor products, with exact linear algebra on the truncations.
//!
//! A truncation keeps basis vectors `v_0..v_D`; operator images that would
//! leave the window are cut off, so the defining bracket identities are only
//! asserted on the interior block of basis vectors whose images under one
//! application of `e` and `f` stay inside.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, Result};
use crate::linalg::{sparse_axpy, RowSpace, SparseVec};
use crate::weight::{rat_int, Rat};

/// Which abstract module a truncation models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Kind {
    /// Irreducible lowest weight `n` module, basis `v_a` with `h v_a = (n+2a) v_a`.
    Lowest { n: i64 },
    /// `delta-bar(m)`: irreducible highest weight `-m` module.
    Highest { m: i64 },
    /// `delta(n) (x) delta-bar(m)` with the coproduct action.
    Tensor { n: i64, m: i64 },
}

/// Square matrix stored by columns: `cols[j]` lists `(row, coeff)` pairs.
/// The operators here have at most two entries per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnOp {
    pub size: usize,
    cols: Vec<Vec<(usize, Rat)>>,
}

impl ColumnOp {
    fn new(size: usize) -> ColumnOp {
        ColumnOp {
            size,
            cols: vec![Vec::new(); size],
        }
    }

    fn push(&mut self, row: usize, col: usize, coeff: Rat) {
        if !coeff.is_zero() {
            self.cols[col].push((row, coeff));
        }
    }

    pub fn column(&self, j: usize) -> &[(usize, Rat)] {
        &self.cols[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Rat {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Applies the operator to a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, coeff) in v {
            for (row, entry) in &self.cols[j] {
                let acc = out.entry(*row).or_insert_with(Rat::zero);
                *acc += coeff * entry;
                if acc.is_zero() {
                    out.remove(row);
                }
            }
        }
        out
    }
}

/// A finite truncation of an sl2-module with exact matrices for `e`, `h`,
/// `f`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSl2Module {
    pub kind: Sl2Kind,
    /// Truncation parameter: basic modules keep indices `0..=depth`; tensor
    /// modules keep the product window of two depth-`depth` factors.
    pub depth: usize,
    pub basis_labels: Vec<String>,
    pub mat_e: ColumnOp,
    pub mat_h: ColumnOp,
    pub mat_f: ColumnOp,
    /// Basis indices whose images under one application of `e` and `f` stay
    /// inside the truncation.
    interior: Vec<bool>,
}

impl TruncatedSl2Module {
    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn is_interior(&self, index: usize) -> bool {
        self.interior[index]
    }

    pub fn interior_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| self.interior[i])
    }

    /// The h-eigenvalue of a basis vector (mat_h is diagonal with integer
    /// entries).
    pub fn h_weight(&self, index: usize) -> i64 {
        let entry = self.mat_h.entry(index, index);
        debug_assert!(entry.is_integer());
        use num_traits::ToPrimitive;
        entry.to_integer().to_i64().expect("small h eigenvalue")
    }

    /// Verifies `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` exactly on the
    /// interior block.
    pub fn check_brackets(&self) -> Result<()> {
        for j in self.interior_indices() {
            let unit: SparseVec = [(j, Rat::one())].into_iter().collect();
            let he = self.mat_h.apply(&self.mat_e.apply(&unit));
            let eh = self.mat_e.apply(&self.mat_h.apply(&unit));
            let ef = self.mat_e.apply(&self.mat_f.apply(&unit));
            let fe = self.mat_f.apply(&self.mat_e.apply(&unit));
            let hf = self.mat_h.apply(&self.mat_f.apply(&unit));
            let fh = self.mat_f.apply(&self.mat_h.apply(&unit));

            let mut comm_he = he;
            sparse_axpy(&mut comm_he, &rat_int(-1), &eh);
            let mut expect_2e = self.mat_e.apply(&unit);
            for c in expect_2e.values_mut() {
                *c *= rat_int(2);
            }
            if comm_he != expect_2e {
                return Err(bracket_violation("[h,e] != 2e", j));
            }

            let mut comm_hf = hf;
            sparse_axpy(&mut comm_hf, &rat_int(-1), &fh);
            let mut expect_m2f = self.mat_f.apply(&unit);
            for c in expect_m2f.values_mut() {
                *c *= rat_int(-2);
            }
            if comm_hf != expect_m2f {
                return Err(bracket_violation("[h,f] != -2f", j));
            }

            let mut comm_ef = ef;
            sparse_axpy(&mut comm_ef, &rat_int(-1), &fe);
            let expect_h = self.mat_h.apply(&unit);
            if comm_ef != expect_h {
                return Err(bracket_violation("[e,f] != h", j));
            }
        }
        Ok(())
    }
}

fn bracket_violation(what: &str, index: usize) -> EngineError {
    EngineError::InternalConsistency(format!("{what} on interior basis vector {index}"))
}

/// Truncated model of the irreducible lowest weight `n` module: basis
/// `v_0..v_D` with `h v_a = (n+2a) v_a`, `e v_a = v_{a+1}` (cut at the
/// window edge), `f v_a = -a(n+a-1) v_{a-1}`, `f v_0 = 0`.
pub fn build_lowest_weight_module(n: i64, depth: usize) -> TruncatedSl2Module {
    assert!(depth >= 1, "depth must be at least 1");
    let size = depth + 1;
    let mut e = ColumnOp::new(size);
    let mut h = ColumnOp::new(size);
    let mut f = ColumnOp::new(size);
    for a in 0..size {
        h.push(a, a, rat_int(n + 2 * a as i64));
        if a + 1 < size {
            e.push(a + 1, a, Rat::one());
        }
        if a >= 1 {
            let a_i = a as i64;
            f.push(a - 1, a, rat_int(-a_i * (n + a_i - 1)));
        }
    }
    let interior: Vec<bool> = (0..size).map(|a| a + 1 < size).collect();
    TruncatedSl2Module {
        kind: Sl2Kind::Lowest { n },
        depth,
        basis_labels: (0..size).map(|a| format!("v{a}")).collect(),
        mat_e: e,
        mat_h: h,
        mat_f: f,
        interior,
    }
}

/// Truncated model of `delta-bar(m)`, the irreducible highest weight `-m`
/// module: basis `w_0..w_D` with `h w_b = (-m-2b) w_b`, `f w_b = w_{b+1}`,
/// `e w_b = -b(m+b-1) w_{b-1}`, `e w_0 = 0`.
pub fn build_highest_weight_module(m: i64, depth: usize) -> TruncatedSl2Module {
    assert!(depth >= 1, "depth must be at least 1");
    let size = depth + 1;
    let mut e = ColumnOp::new(size);
    let mut h = ColumnOp::new(size);
    let mut f = ColumnOp::new(size);
    for b in 0..size {
        h.push(b, b, rat_int(-m - 2 * b as i64));
        if b + 1 < size {
            f.push(b + 1, b, Rat::one());
        }
        if b >= 1 {
            let b_i = b as i64;
            e.push(b - 1, b, rat_int(-b_i * (m + b_i - 1)));
        }
    }
    let interior: Vec<bool> = (0..size).map(|b| b + 1 < size).collect();
    TruncatedSl2Module {
        kind: Sl2Kind::Highest { m },
        depth,
        basis_labels: (0..size).map(|b| format!("w{b}")).collect(),
        mat_e: e,
        mat_h: h,
        mat_f: f,
        interior,
    }
}

/// Tensor product of a lowest-weight and a highest-weight truncation, with
/// operators acting by the coproduct `x -> x(x)1 + 1(x)x`. Basis vector
/// `(a,b)` is `v_a (x) w_b`, flattened as `a*(depth+1)+b`.
pub fn tensor_modules(
    a: &TruncatedSl2Module,
    b: &TruncatedSl2Module,
) -> Result<TruncatedSl2Module> {
    let (n, m) = match (a.kind, b.kind) {
        (Sl2Kind::Lowest { n }, Sl2Kind::Highest { m }) => (n, m),
        _ => {
            return Err(EngineError::InvalidArgument(
                "tensor model expects a lowest-weight first factor and a highest-weight second"
                    .to_string(),
            ))
        }
    };
    if a.depth != b.depth {
        return Err(EngineError::InvalidArgument(format!(
            "incompatible depths {} and {}",
            a.depth, b.depth
        )));
    }
    let depth = a.depth;
    let side = depth + 1;
    let size = side * side;
    let idx = |i: usize, j: usize| i * side + j;

    let mut e = ColumnOp::new(size);
    let mut h = ColumnOp::new(size);
    let mut f = ColumnOp::new(size);
    let mut labels = Vec::with_capacity(size);
    let mut interior = vec![false; size];
    for i in 0..side {
        for j in 0..side {
            let col = idx(i, j);
            labels.push(format!("v{i}*w{j}"));
            // h is diagonal: weight additivity under tensor.
            h.push(col, col, rat_int(a.h_weight(i) + b.h_weight(j)));
            for (row, coeff) in a.mat_e.column(i) {
                e.push(idx(*row, j), col, coeff.clone());
            }
            for (row, coeff) in b.mat_e.column(j) {
                e.push(idx(i, *row), col, coeff.clone());
            }
            for (row, coeff) in a.mat_f.column(i) {
                f.push(idx(*row, j), col, coeff.clone());
            }
            for (row, coeff) in b.mat_f.column(j) {
                f.push(idx(i, *row), col, coeff.clone());
            }
            // e raises i, f raises j; everything else moves inward.
            interior[col] = i + 1 < side && j + 1 < side;
        }
    }
    Ok(TruncatedSl2Module {
        kind: Sl2Kind::Tensor { n, m },
        depth,
        basis_labels: labels,
        mat_e: e,
        mat_h: h,
        mat_f: f,
        interior,
    })
}

/// Exact dimension of the span of `e^a f^b h^c * gen` over all monomials of
/// total degree at most `max_degree`, by incremental sparse row reduction.
///
/// Requires `max_degree <= depth/2 - 1` so that every monomial image stays
/// strictly inside the truncation.
pub fn filtration_rank(
    module: &TruncatedSl2Module,
    generator: usize,
    max_degree: usize,
) -> Result<usize> {
    if generator >= module.dim() {
        return Err(EngineError::InvalidArgument(format!(
            "generator index {generator} out of range for module of dimension {}",
            module.dim()
        )));
    }
    if max_degree + 1 > module.depth / 2 {
        return Err(EngineError::TruncationTooShallow {
            degree: max_degree,
            depth: module.depth,
        });
    }
    let gen: SparseVec = [(generator, Rat::one())].into_iter().collect();
    let mut span = RowSpace::new();
    // Monomials e^a f^b h^c with a+b+c <= max_degree, built by iterated
    // application: innermost h, then f, then e.
    let mut h_power = gen;
    for c in 0..=max_degree {
        let mut f_power = h_power.clone();
        for b in 0..=(max_degree - c) {
            let mut e_power = f_power.clone();
            for a in 0..=(max_degree - c - b) {
                span.insert(e_power.clone());
                if a < max_degree - c - b {
                    e_power = module.mat_e.apply(&e_power);
                    if e_power.is_empty() {
                        break;
                    }
                }
            }
            if b < max_degree - c {
                f_power = module.mat_f.apply(&f_power);
                if f_power.is_empty() {
                    break;
                }
            }
        }
        if c < max_degree {
            h_power = module.mat_h.apply(&h_power);
            if h_power.is_empty() {
                break;
            }
        }
    }
    Ok(span.rank())
}

/// Harish-Chandra parameter of an extremal truncated module: with the
/// Casimir normalized as `h^2/2 + ef + fe`, the eigenvalue on the generator
/// is `(p^2-1)/2`; the nonnegative root `p` is returned. Lowest weight `k`
/// gives `p = |k-1|`, highest weight `-m` gives `p = |m-1|`.
pub fn hc_parameter(module: &TruncatedSl2Module) -> Result<Rat> {
    match module.kind {
        Sl2Kind::Lowest { .. } | Sl2Kind::Highest { .. } => {}
        Sl2Kind::Tensor { .. } => return Err(EngineError::NonExtremalKind),
    }
    let gen: SparseVec = [(0usize, Rat::one())].into_iter().collect();
    let mut omega = module.mat_h.apply(&module.mat_h.apply(&gen));
    for c in omega.values_mut() {
        *c /= rat_int(2);
    }
    let ef = module.mat_e.apply(&module.mat_f.apply(&gen));
    let fe = module.mat_f.apply(&module.mat_e.apply(&gen));
    sparse_axpy(&mut omega, &Rat::one(), &ef);
    sparse_axpy(&mut omega, &Rat::one(), &fe);

    // The generator must be a Casimir eigenvector.
    let eigenvalue = match omega.len() {
        0 => Rat::zero(),
        1 => {
            let (&i, v) = omega.first_key_value().expect("nonempty");
            if i != 0 {
                return Err(EngineError::InternalConsistency(
                    "Casimir does not preserve the generator line".to_string(),
                ));
            }
            v.clone()
        }
        _ => {
            return Err(EngineError::InternalConsistency(
                "Casimir does not act by a scalar on the generator".to_string(),
            ))
        }
    };

    // p^2 = 2*eigenvalue + 1, an exact rational square here.
    let p_sq = rat_int(2) * eigenvalue + Rat::one();
    rational_sqrt(&p_sq).ok_or_else(|| {
        EngineError::InternalConsistency(format!("Casimir parameter squared {p_sq} is not a square"))
    })
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Parity of an SO(2) weight class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// Finite description of the SO(2)-weight support of an (sl2, SO(2))-module;
/// in this setting every supported weight is an even integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum So2Support {
    /// `{k, k+2, k+4, ...}`.
    Lowest(i64),
    /// `{k, k-2, k-4, ...}`.
    Highest(i64),
    /// All integers of the given parity; only `Even` occurs here.
    FullParity(Parity),
    /// An explicit finite set of even integers.
    Finite(BTreeSet<i64>),
}

impl So2Support {
    pub fn lowest(k: i64) -> Result<So2Support> {
        ensure_even(k)?;
        Ok(So2Support::Lowest(k))
    }

    pub fn highest(k: i64) -> Result<So2Support> {
        ensure_even(k)?;
        Ok(So2Support::Highest(k))
    }

    pub fn finite<I: IntoIterator<Item = i64>>(items: I) -> Result<So2Support> {
        let set: BTreeSet<i64> = items.into_iter().collect();
        for &w in &set {
            ensure_even(w)?;
        }
        Ok(So2Support::Finite(set))
    }

    /// Parses the CLI syntax: `lowest(4)`, `highest(-2)`,
    /// `full_parity(even)`, `finite(2,6)`.
    pub fn parse(text: &str) -> Result<So2Support> {
        let t = text.trim();
        let (head, rest) = t
            .split_once('(')
            .ok_or_else(|| invalid_support(t))?;
        let inner = rest.strip_suffix(')').ok_or_else(|| invalid_support(t))?;
        match head.trim() {
            "lowest" => So2Support::lowest(parse_i64(inner, t)?),
            "highest" => So2Support::highest(parse_i64(inner, t)?),
            "full_parity" | "full" => match inner.trim() {
                "even" | "0" => Ok(So2Support::FullParity(Parity::Even)),
                "odd" | "1" => Ok(So2Support::FullParity(Parity::Odd)),
                _ => Err(invalid_support(t)),
            },
            "finite" => {
                let items = inner
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_i64(s, t))
                    .collect::<Result<Vec<i64>>>()?;
                So2Support::finite(items)
            }
            _ => Err(invalid_support(t)),
        }
    }
}

fn parse_i64(s: &str, whole: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| invalid_support(whole))
}

fn invalid_support(t: &str) -> EngineError {
    EngineError::InvalidArgument(format!(
        "cannot parse SO(2) support \"{t}\" (expected lowest(K), highest(K), full_parity(even|odd), or finite(K1,K2,...))"
    ))
}

fn ensure_even(w: i64) -> Result<()> {
    if w.rem_euclid(2) != 0 {
        Err(EngineError::OddSo2Weight(w))
    } else {
        Ok(())
    }
}

impl core::fmt::Display for So2Support {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            So2Support::Lowest(k) => write!(f, "lowest({k})"),
            So2Support::Highest(k) => write!(f, "highest({k})"),
            So2Support::FullParity(Parity::Even) => f.write_str("full_parity(even)"),
            So2Support::FullParity(Parity::Odd) => f.write_str("full_parity(odd)"),
            So2Support::Finite(set) => {
                f.write_str("finite(")?;
                for (i, w) in set.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Decides membership of an even SO(2) weight in a support description.
/// Odd query weights are rejected: only even characters occur here.
pub fn support_membership(support: &So2Support, w: i64) -> Result<bool> {
    ensure_even(w)?;
    Ok(match support {
        So2Support::Lowest(k) => w >= *k,
        So2Support::Highest(k) => w <= *k,
        So2Support::FullParity(Parity::Even) => true,
        So2Support::FullParity(Parity::Odd) => false,
        So2Support::Finite(set) => set.contains(&w),
    })
}

/// Multiset of h-eigenvalues of a truncated module.
pub fn h_spectrum(module: &TruncatedSl2Module) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for i in 0..module.dim() {
        *out.entry(module.h_weight(i)).or_insert(0) += 1;
    }
    out
}
