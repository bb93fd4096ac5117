//! Diagram-level state sums over (1,1)-tangles given as Morse event lists.

mod diagram;
mod evaluate;
mod walk;

pub use diagram::{braid_closure_diagram, Event, Orientation, TangleDiagram};
pub use evaluate::{evaluate_state, f_infinity_statesum, StateAssignment};
