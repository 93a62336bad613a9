#![no_std]
//! Distance-regular graphs, Cayley graphs and the search machinery used to
//! decide which small distance-regular graphs are Cayley.

extern crate alloc;

pub mod autom;
pub mod budget;
pub mod catalog;
pub mod cayley;
pub mod cayleyness;
pub mod designs;
pub mod drg;
pub mod error;
pub mod gf;
pub mod graph;
pub mod graph6;
pub mod groups;
pub mod perm;

pub use budget::{Budget, StepBudget, Unlimited};
pub use error::{Error, Result};
