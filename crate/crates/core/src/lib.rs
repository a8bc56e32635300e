//! Rainbow numbers of chorded cycles `θ_{t,ℓ}` in multi-hubbed wheels `W_d(s)`.
//!
//! The host `W_d(s)` has `s` hubs, each joined to every vertex of a `d`-cycle.
//! The crate enumerates pattern copies, builds extremal colorings, checks the
//! counting bounds behind the upper bounds, evaluates the closed forms and
//! computes exact values on small hosts by complete search.

pub mod cache;
pub mod cli;
pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod formulas;
pub mod graph;
pub mod lemma;
pub mod patterns;
pub mod solver;
pub mod table;
