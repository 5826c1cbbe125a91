//! Finite pieces of the derived category of `kA_3` (`1 → 2 → 3`).
//!
//! The Auslander-Reiten quiver is `ZA_3`. Its three rows are indexed by an
//! integer `j`:
//!
//! ```text
//! apex    T_j     T_{j+1}
//! middle    M_j  ↗       ↘  M_{j+1}
//! base    B_j     B_{j+1}
//! ```
//!
//! with meshes `B_j → M_j → B_{j+1}`, `M_j → T_j ⊕ B_{j+1} → M_{j+1}` and
//! `T_j → M_{j+1} → T_{j+1}`. The base row is the generating set `X`:
//! `B_{4k} = P1[2k-1]`, `B_{4k+1} = S3[2k]`, `B_{4k+2} = S2[2k]`,
//! `B_{4k+3} = S1[2k]`. The middle row alternates `M_{2i} = I2[i-1]`,
//! `M_{2i+1} = P2[i]`, and `T_j = B_{j-1}[1]`.
//!
//! Every Hom space between indecomposables has dimension at most one and is
//! nonzero exactly on the hammocks below (read off from paths in the AR
//! quiver modulo mesh relations):
//!
//! ```text
//! B_j → B_j, M_j, T_j
//! M_j → M_j, T_j, B_{j+1}, M_{j+1}
//! T_j → T_j, M_{j+1}, B_{j+2}
//! ```
//!
//! The shift acts by `B_j[1] = T_{j+1}`, `M_j[1] = M_{j+2}`,
//! `T_j[1] = B_{j+3}`, and `E(C, A) = Hom(C, A[1])`. The nonsplit triangles
//! with indecomposable end terms are listed in [`TRIANGLES`]; a window keeps
//! those whose three terms all lie inside it.
//!
//! `final-example` is the window of base width 3, which is exactly the
//! filtration closure of `{P1[-1], S3, S2}`. `db-window` with parameter `w`
//! is the window of base width `4w`, i.e. `w` full periods of the generating
//! row.

use std::collections::BTreeSet;
use std::fmt;

use super::GeneratorError;
use crate::catspec::{CategorySpec, IndecId, Metadata, ObjectRef};
use crate::filtration::filt_closure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Base,
    Middle,
    Apex,
}

/// A vertex of `ZA_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub row: Row,
    pub j: i64,
}

const fn v(row: Row, j: i64) -> Vertex {
    Vertex { row, j }
}

impl Vertex {
    pub fn shift(self) -> Vertex {
        match self.row {
            Row::Base => v(Row::Apex, self.j + 1),
            Row::Middle => v(Row::Middle, self.j + 2),
            Row::Apex => v(Row::Base, self.j + 3),
        }
    }

    /// Module and shift this vertex stands for.
    fn module(self) -> (&'static str, i64) {
        match self.row {
            Row::Base => {
                let (k, r) = (self.j.div_euclid(4), self.j.rem_euclid(4));
                match r {
                    0 => ("P1", 2 * k - 1),
                    1 => ("S3", 2 * k),
                    2 => ("S2", 2 * k),
                    _ => ("S1", 2 * k),
                }
            }
            Row::Middle => {
                let i = self.j.div_euclid(2);
                if self.j.rem_euclid(2) == 0 {
                    ("I2", i - 1)
                } else {
                    ("P2", i)
                }
            }
            Row::Apex => {
                let (m, s) = v(Row::Base, self.j - 1).module();
                (m, s + 1)
            }
        }
    }

    pub fn id(self) -> IndecId {
        IndecId::from(self.to_string().as_str())
    }
}

/// `S3`, `P1m1`, `S2p2` for `S3`, `P1[-1]`, `S2[2]`.
impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, s) = self.module();
        match s {
            0 => write!(f, "{m}"),
            s if s < 0 => write!(f, "{m}m{}", -s),
            s => write!(f, "{m}p{s}"),
        }
    }
}

/// `dim Hom(x, y)`.
pub fn hom(x: Vertex, y: Vertex) -> u32 {
    use Row::*;
    let d = y.j - x.j;
    let nonzero = match (x.row, y.row) {
        (Base, Base) => d == 0,
        (Base, Middle) => d == 0,
        (Base, Apex) => d == 0,
        (Middle, Middle) => d == 0 || d == 1,
        (Middle, Apex) => d == 0,
        (Middle, Base) => d == 1,
        (Apex, Apex) => d == 0,
        (Apex, Middle) => d == 1,
        (Apex, Base) => d == 2,
    };
    u32::from(nonzero)
}

/// `dim E(c, a) = dim Hom(c, a[1])`.
pub fn ext(c: Vertex, a: Vertex) -> u32 {
    hom(c, a.shift())
}

/// Nonsplit triangles `A → B → C → A[1]` with `A = row_a(j)` as
/// `(row_a, (row_c, offset), middle summands as (row, offset))`.
#[allow(clippy::type_complexity)]
pub const TRIANGLES: &[(Row, (Row, i64), &[(Row, i64)])] = &[
    (Row::Base, (Row::Base, 1), &[(Row::Middle, 0)]),
    (Row::Base, (Row::Middle, 1), &[(Row::Apex, 0)]),
    (Row::Base, (Row::Apex, 1), &[]),
    (Row::Middle, (Row::Base, 2), &[(Row::Apex, 0)]),
    (Row::Middle, (Row::Middle, 1), &[(Row::Apex, 0), (Row::Base, 1)]),
    (Row::Middle, (Row::Apex, 1), &[(Row::Base, 1)]),
    (Row::Middle, (Row::Middle, 2), &[]),
    (Row::Apex, (Row::Base, 3), &[]),
    (Row::Apex, (Row::Middle, 2), &[(Row::Base, 2)]),
    (Row::Apex, (Row::Apex, 1), &[(Row::Middle, 1)]),
];

/// The vertices `B_0..B_{L-1}`, `M_0..M_{L-2}`, `T_0..T_{L-3}`.
pub fn window(base_width: usize) -> Vec<Vertex> {
    let l = base_width as i64;
    let row = |r, len: i64| (0..len.max(0)).map(move |j| v(r, j));
    row(Row::Base, l)
        .chain(row(Row::Middle, l - 1))
        .chain(row(Row::Apex, l - 2))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    FinalExample,
    DbWindow(usize),
}

/// Largest window parameter accepted for `db-window`.
pub const WINDOW_GUARD: usize = 64;

impl Fixture {
    /// `final-example` or `db-window` (which needs `w`).
    pub fn from_name(name: &str, w: Option<usize>) -> Result<Fixture, GeneratorError> {
        match (name, w) {
            ("final-example", _) => Ok(Fixture::FinalExample),
            ("db-window", Some(w)) => Ok(Fixture::DbWindow(w)),
            ("db-window", None) => Err(GeneratorError::MissingParameter("w".into())),
            _ => Err(GeneratorError::UnknownFixture(name.to_string())),
        }
    }

    pub fn file_name(self) -> String {
        match self {
            Fixture::FinalExample => "final-example.grcat.json".into(),
            Fixture::DbWindow(w) => format!("db-window-{w}.grcat.json"),
        }
    }

    pub fn build(self) -> Result<CategorySpec, GeneratorError> {
        self.build_with_guard(WINDOW_GUARD)
    }

    pub fn build_with_guard(self, guard: usize) -> Result<CategorySpec, GeneratorError> {
        match self {
            Fixture::FinalExample => build_window(
                3,
                "final-example",
                "Filt({P1[-1], S3, S2}) inside D^b(kA_3); length l_Y",
                false,
            ),
            Fixture::DbWindow(w) => {
                if w == 0 || w > guard {
                    return Err(GeneratorError::GuardExceeded {
                        what: "w".into(),
                        value: w,
                        limit: guard,
                    });
                }
                build_window(
                    4 * w,
                    &format!("db-window-{w}"),
                    &format!(
                        "{w} period(s) of the AR quiver of D^b(kA_3); generators are the row \
                         P1[2k-1], S3[2k], S2[2k], S1[2k]; length l_X"
                    ),
                    true,
                )
            }
        }
    }
}

pub fn fixture(f: Fixture) -> Result<CategorySpec, GeneratorError> {
    f.build()
}

fn build_window(
    base_width: usize,
    name: &str,
    description: &str,
    models_infinite: bool,
) -> Result<CategorySpec, GeneratorError> {
    let verts = window(base_width);
    let inside: BTreeSet<Vertex> = verts.iter().copied().collect();
    let obj = |vs: &[Vertex]| -> ObjectRef { vs.iter().map(|x| x.id()).collect() };

    let mut triangles: Vec<(Vertex, Vec<Vertex>, Vertex)> = Vec::new();
    for &a in &verts {
        for &(row_a, (row_c, dc), middle) in TRIANGLES {
            if row_a != a.row {
                continue;
            }
            let c = v(row_c, a.j + dc);
            let b: Vec<Vertex> = middle.iter().map(|&(r, d)| v(r, a.j + d)).collect();
            if inside.contains(&c) && b.iter().all(|x| inside.contains(x)) {
                triangles.push((a, b, c));
            }
        }
    }

    let metadata = Metadata {
        description: Some(description.to_string()),
        complete: true,
        models_infinite,
        theta_bound: None,
    };
    let with_lengths = |theta: &[u32]| {
        let mut b = CategorySpec::builder(name).metadata(metadata.clone());
        for (x, &t) in verts.iter().zip(theta) {
            b = b.indecomposable(x.id(), t);
        }
        b = b.with_ext();
        for &x in &verts {
            for &y in &verts {
                let h = hom(x, y);
                if h != u32::from(x == y) {
                    b = b.hom(x.id(), y.id(), h);
                }
                let e = ext(x, y);
                if e != 0 {
                    b = b.ext(x.id(), y.id(), e);
                }
            }
        }
        b
    };

    // lengths are l_X for the base row, computed once and frozen
    let mut provisional = with_lengths(&vec![1; verts.len()]);
    for (a, b, c) in &triangles {
        provisional = provisional.conflation(obj(&[*a]), obj(b), obj(&[*c]), false);
    }
    let provisional = provisional.build().map_err(GeneratorError::Spec)?;
    let gens: BTreeSet<IndecId> = verts
        .iter()
        .filter(|x| x.row == Row::Base)
        .map(|x| x.id())
        .collect();
    let closure =
        filt_closure(&provisional, &gens, None).map_err(|e| GeneratorError::CrossCheck(e.to_string()))?;
    let mut theta = Vec::with_capacity(verts.len());
    for x in &verts {
        let l = closure
            .length(&ObjectRef::single(x.id()))
            .ok_or_else(|| GeneratorError::CrossCheck(format!("{x} is not reached by the generators")))?;
        theta.push(l);
    }
    let th = |vs: &[Vertex]| -> u32 {
        vs.iter()
            .map(|x| theta[verts.iter().position(|y| y == x).expect("inside window")])
            .sum()
    };

    let mut b = with_lengths(&theta);
    for (a, mid, c) in &triangles {
        let stable = th(mid) == th(&[*a]) + th(&[*c]);
        b = b.conflation(obj(&[*a]), obj(mid), obj(&[*c]), stable);
        if stable && !mid.is_empty() {
            b = b.inflation(a.id(), obj(mid));
        }
    }
    b.build().map_err(GeneratorError::Spec)
}
