//! Root-system data for F4, B4, D5, and A1 in their standard coordinate
//! realizations.
//!
//! The realizations are pinned so that for F4 the fourth fundamental weight
//! is `(1,0,0,0)` and `rho = (11/2,5/2,3/2,1/2)`; B4 sits inside F4 as the
//! subsystem of integral-coordinate roots, and the B4 spin weight is
//! `mu = (1/2,1/2,1/2,1/2)`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};
use crate::linalg::RatMatrix;
use crate::weight::{rat, rat_int, Rat, Weight};

/// The four root systems the engine supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SystemLabel {
    A1,
    B4,
    D5,
    F4,
}

impl SystemLabel {
    pub const ALL: [SystemLabel; 4] = [
        SystemLabel::A1,
        SystemLabel::B4,
        SystemLabel::D5,
        SystemLabel::F4,
    ];

    pub fn rank(self) -> usize {
        match self {
            SystemLabel::A1 => 1,
            SystemLabel::B4 => 4,
            SystemLabel::D5 => 5,
            SystemLabel::F4 => 4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SystemLabel::A1 => "A1",
            SystemLabel::B4 => "B4",
            SystemLabel::D5 => "D5",
            SystemLabel::F4 => "F4",
        }
    }

    pub fn parse(s: &str) -> Result<SystemLabel> {
        match s.trim() {
            "A1" | "a1" => Ok(SystemLabel::A1),
            "B4" | "b4" => Ok(SystemLabel::B4),
            "D5" | "d5" => Ok(SystemLabel::D5),
            "F4" | "f4" => Ok(SystemLabel::F4),
            other => Err(EngineError::UnknownSystem(other.to_string())),
        }
    }
}

impl core::fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for SystemLabel {
    type Err = EngineError;
    fn from_str(s: &str) -> Result<SystemLabel> {
        SystemLabel::parse(s)
    }
}

/// Fully constructed root-system data: simple and positive roots, `rho`,
/// fundamental weights, and the Weyl group order.
///
/// Immutable after construction; all operations are pure, so the value is
/// safe to share across concurrent readers.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: SystemLabel,
    rank: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    rho: Weight,
    fundamental_weights: Vec<Weight>,
    weyl_order: u64,
    /// Inverse of the column matrix of simple roots; maps ambient
    /// coordinates to simple-root coordinates.
    simple_basis_inv: RatMatrix,
}

fn simple_roots_for(label: SystemLabel) -> Vec<Weight> {
    match label {
        // sl2 realization in which weights are the integers.
        SystemLabel::A1 => vec![Weight::from_ints(&[2])],
        SystemLabel::B4 => vec![
            Weight::from_ints(&[1, -1, 0, 0]),
            Weight::from_ints(&[0, 1, -1, 0]),
            Weight::from_ints(&[0, 0, 1, -1]),
            Weight::from_ints(&[0, 0, 0, 1]),
        ],
        SystemLabel::D5 => vec![
            Weight::from_ints(&[1, -1, 0, 0, 0]),
            Weight::from_ints(&[0, 1, -1, 0, 0]),
            Weight::from_ints(&[0, 0, 1, -1, 0]),
            Weight::from_ints(&[0, 0, 0, 1, -1]),
            Weight::from_ints(&[0, 0, 0, 1, 1]),
        ],
        SystemLabel::F4 => vec![
            Weight::from_ints(&[0, 1, -1, 0]),
            Weight::from_ints(&[0, 0, 1, -1]),
            Weight::from_ints(&[0, 0, 0, 1]),
            Weight::new(vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)]),
        ],
    }
}

impl RootSystem {
    /// Builds the full root-system data for `label`.
    pub fn new(label: SystemLabel) -> RootSystem {
        let rank = label.rank();
        let simple_roots = simple_roots_for(label);

        // Every root is Weyl-conjugate to a simple root of its length, so
        // closing the simple roots under simple reflections yields the full
        // root set.
        let mut all_roots: BTreeSet<Weight> = BTreeSet::new();
        let mut queue: VecDeque<Weight> = simple_roots.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            if !all_roots.insert(r.clone()) {
                continue;
            }
            for alpha in &simple_roots {
                queue.push_back(r.reflect(alpha));
            }
        }

        let columns: Vec<Vec<Rat>> = (0..rank)
            .map(|row| simple_roots.iter().map(|a| a.coord(row).clone()).collect())
            .collect();
        let simple_basis_inv = RatMatrix::from_rows(columns)
            .inverse()
            .expect("simple roots form a basis");

        let positive_roots: Vec<Weight> = all_roots
            .iter()
            .filter(|r| {
                simple_basis_inv
                    .apply(r.coords())
                    .iter()
                    .all(|c| !c.is_negative())
            })
            .cloned()
            .collect();

        let mut rho = Weight::zero(rank);
        for r in &positive_roots {
            rho = &rho + r;
        }
        rho = rho.scale(&rat(1, 2));

        // Fundamental weights solve <w, alpha_j^vee> = delta_ij; the rows of
        // the pairing matrix are the coroots expressed through the dot form.
        let coroot_rows: Vec<Vec<Rat>> = simple_roots
            .iter()
            .map(|a| {
                let scale = rat_int(2) / a.norm_sq();
                a.coords().iter().map(|c| c * &scale).collect()
            })
            .collect();
        let coroot_inv = RatMatrix::from_rows(coroot_rows)
            .inverse()
            .expect("coroot pairing matrix is invertible");
        let fundamental_weights: Vec<Weight> = (0..rank)
            .map(|i| Weight::new((0..rank).map(|r| coroot_inv.at(r, i).clone()).collect()))
            .collect();

        let mut sys = RootSystem {
            label,
            rank,
            simple_roots,
            positive_roots,
            rho,
            fundamental_weights,
            weyl_order: 0,
            simple_basis_inv,
        };
        // rho is regular, so the Weyl group acts freely on its orbit.
        sys.weyl_order = sys.weyl_orbit(&sys.rho).len() as u64;
        sys
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn fundamental_weight(&self, i: usize) -> &Weight {
        &self.fundamental_weights[i]
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// Coordinates of `w` in the simple-root basis.
    pub fn simple_coords(&self, w: &Weight) -> Vec<Rat> {
        self.check_len(w);
        self.simple_basis_inv.apply(w.coords())
    }

    /// `2 (w, alpha_i) / (alpha_i, alpha_i)` for the i-th simple root.
    pub fn cartan_pairing(&self, w: &Weight, i: usize) -> Rat {
        let alpha = &self.simple_roots[i];
        rat_int(2) * w.dot(alpha) / alpha.norm_sq()
    }

    /// True iff `(w, alpha_i) >= 0` for every simple root.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.check_len(w);
        self.simple_roots
            .iter()
            .all(|a| !w.dot(a).is_negative())
    }

    /// True iff `w` is dominant and all coroot pairings are integers.
    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        self.check_len(w);
        (0..self.rank).all(|i| {
            let p = self.cartan_pairing(w, i);
            p.is_integer() && !p.is_negative()
        })
    }

    /// The dominant Weyl-orbit representative together with the number of
    /// simple reflections applied (its parity is the sign of the reducing
    /// Weyl element when `w` is regular).
    pub fn to_dominant(&self, w: &Weight) -> (Weight, usize) {
        self.check_len(w);
        let mut x = w.clone();
        let mut count = 0usize;
        'outer: loop {
            for alpha in &self.simple_roots {
                if x.dot(alpha).is_negative() {
                    x = x.reflect(alpha);
                    count += 1;
                    continue 'outer;
                }
            }
            return (x, count);
        }
    }

    /// The unique dominant element of the orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        self.to_dominant(w).0
    }

    /// True iff some Weyl reflection fixes `w`, i.e. `w` pairs to zero with
    /// a root. Checked on the dominant representative, where it reduces to a
    /// vanishing simple pairing.
    pub fn is_singular(&self, w: &Weight) -> bool {
        let (dom, _) = self.to_dominant(w);
        self.simple_roots.iter().any(|a| dom.dot(a).is_zero())
    }

    /// Full orbit of `w` under the Weyl group, by breadth-first closure
    /// under simple reflections.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        self.check_len(w);
        let mut orbit: BTreeSet<Weight> = BTreeSet::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            if !orbit.insert(x.clone()) {
                continue;
            }
            for alpha in &self.simple_roots {
                let y = x.reflect(alpha);
                if !orbit.contains(&y) {
                    queue.push_back(y);
                }
            }
        }
        orbit
    }

    pub fn orbit_size(&self, w: &Weight) -> u64 {
        self.weyl_orbit(w).len() as u64
    }

    fn check_len(&self, w: &Weight) {
        assert_eq!(
            w.len(),
            self.rank,
            "weight length {} does not match rank {} of {}",
            w.len(),
            self.rank,
            self.label
        );
    }
}

/// The four root systems, built once and shared.
#[derive(Debug, Clone)]
pub struct Systems {
    a1: RootSystem,
    b4: RootSystem,
    d5: RootSystem,
    f4: RootSystem,
}

impl Systems {
    pub fn new() -> Systems {
        Systems {
            a1: RootSystem::new(SystemLabel::A1),
            b4: RootSystem::new(SystemLabel::B4),
            d5: RootSystem::new(SystemLabel::D5),
            f4: RootSystem::new(SystemLabel::F4),
        }
    }

    pub fn get(&self, label: SystemLabel) -> &RootSystem {
        match label {
            SystemLabel::A1 => &self.a1,
            SystemLabel::B4 => &self.b4,
            SystemLabel::D5 => &self.d5,
            SystemLabel::F4 => &self.f4,
        }
    }
}

impl Default for Systems {
    fn default() -> Self {
        Systems::new()
    }
}
