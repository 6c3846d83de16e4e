//! Exact arithmetic in `r(D4)`, the ring of tensor products of modules over
//! the 16-dimensional quasitriangular Hopf algebra `D4`.
//!
//! The crate has three layers that check each other:
//!
//! * [`green`] and [`table`]: the ring `r(D4)` on the basis of indecomposable
//!   modules, with the closed-form tensor product table.
//! * [`presentation`]: normal forms in the quotient `Z[X]/J` and the two maps
//!   identifying it with `r(D4)`.
//! * [`rep_lab`]: explicit rational matrix representations, tensor products,
//!   duals and a Krull-Schmidt decomposition routine, used as an independent
//!   oracle for the table.
//!
//! [`linalg`] provides the exact rational linear algebra underneath, and
//! [`verify`] runs the grid checks that tie everything together.

pub mod green;
pub mod label;
pub mod linalg;
pub mod presentation;
pub mod rep_lab;
pub mod table;
pub mod verify;

pub use green::{composition_factors, dual_label, grothendieck_mul, label_dimension, GreenElement};
pub use label::{EtaParam, ModuleLabel, Z2};
pub use linalg::{Rat, RatMatrix};
pub use presentation::{GroupRingPair, PresBase, PresElement, PresMonomial};
pub use rep_lab::Representation;
pub use table::{mul_labels, ProductCase};
