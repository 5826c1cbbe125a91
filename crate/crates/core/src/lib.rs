//! Combinatorial engine for finite instances of extriangulated length
//! categories.
//!
//! A category instance ([`CategorySpec`]) is pure data: indecomposables with
//! their lengths, Hom/Ext dimension matrices, declared inflations and a
//! conflation table. On top of it this crate computes
//!
//! - Gabriel-Roiter measures and the Gabriel-Roiter chain ([`chains`]),
//! - the tower of semibricks `Θ_1 ⊆ Θ_2 ⊆ … ⊆ Θ_∞` ([`simpleminded`]),
//! - filtration closures and `X`-lengths ([`filtration`]),
//! - checker suites for the structural theorems about measures ([`theorems`]),
//! - ground-truth instances: module categories of linearly oriented `A_n`
//!   over the two-element field, and windows of the derived category of
//!   `kA_3` ([`generator`]).

pub mod catspec;
pub mod chains;
pub mod filtration;
pub mod generator;
pub mod report;
pub mod simpleminded;
pub mod theorems;

pub use catspec::{
    obj, parse_spec, render_spec, theta_of, validate_spec, CategorySpec, Conflation, IndecId, Inflation,
    Metadata, ObjectRef, SpecBuilder, SpecError, SubobjectPoset, ValidationReport, Violation,
};
pub use chains::{chain_leq, chain_max, gr_measure, gr_measure_bruteforce, gr_table, Chain, MeasureTable};
pub use report::{Check, Report, Status, Witness};
