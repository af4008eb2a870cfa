//! Conversions between regular expressions and nondeterministic finite
//! automata, carried out on generalized NFAs one small step at a time.
//!
//! * [`r2n`] expands a regexp-labeled edge at a time until only singleton
//!   and empty labels remain.
//! * [`n2r`] rips out one state at a time until a single edge is left;
//!   [`n2r::r_equations`] is the independent recursive-equation method.
//! * Every step is recorded as a [`trace::Frame`], navigable with a
//!   [`trace::VizCursor`] and renderable to Graphviz DOT.

pub mod check;
pub mod gnfa;
pub mod n2r;
pub mod nfa;
pub mod r2n;
pub mod random;
pub mod regex;
pub mod trace;
mod word;

pub use gnfa::{Edge, Gnfa, GnfaError};
pub use nfa::{Label, Nfa, NfaError, RawNfa, Rule, Verdict};
pub use regex::{Language, Regexp};
pub use trace::{Frame, Trace, VizCursor};
pub use word::Word;
