//! Parametric decision making with soft sets.
//!
//! Candidates are described by a table of parameters. Depending on how
//! much is known about each entry, cells are plain `0`/`1`, qualitative
//! grades backed by grey numbers, or neutrosophic triplets. Each row is
//! reduced to a choice value and the best candidates are reported.
//!
//! ```
//! use softdecide::decision::{decide, DecideOptions, Method};
//! use softdecide::io::parse_table;
//!
//! let table = parse_table("candidate,fast,young\nP1,1,0\nP2,1,1\n").unwrap();
//! let report = decide(&table, Method::Binary, &DecideOptions::default()).unwrap();
//! assert_eq!(report.winners, ["P2"]);
//! ```

pub mod cli;
pub mod decision;
pub mod grade_scale;
pub mod grey;
pub mod io;
pub mod neutrosophic;
pub mod soft_set;

pub use decision::{
    choice_values_binary, choice_values_grey, choice_values_neutrosophic, decide, rank_combined,
    rank_conservative, rank_optimistic, Cell, Criterion, DecideOptions, DecisionError,
    DecisionReport, DecisionTable, Method,
};
pub use grade_scale::{default_scale, GradeScale};
pub use grey::GreyNumber;
pub use neutrosophic::{classify_information, Information, NeutrosophicTriplet, TripletAccumulator};
pub use soft_set::{fuzzy_to_soft, BinaryTable, SoftSet};
