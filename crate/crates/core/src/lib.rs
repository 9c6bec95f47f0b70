//! Tableau dynamics and vacillating-tableau enumeration.
//!
//! The crate implements, with exact arithmetic throughout:
//!
//! - integer partitions, partial tableaux and standard Young tableaux
//!   ([`partition`], [`tableau`]);
//! - RSK row insertion and jeu de taquin deletion with their inverses
//!   ([`tableau_ops`]);
//! - n-vacillating and simplified vacillating tableau sequences, their
//!   validators and dynamic-programming enumeration ([`vacillating`]);
//! - the delete-insert bijection on integer sequences, its inverse, the
//!   limiting vacillating tableau of a sequence and sequence realization
//!   ([`di_map`]);
//! - the bijection from vacillating tableaux to (set partition, tableau)
//!   pairs and the block-merging bijection to bi-colored set partitions
//!   ([`bijections`]);
//! - counting identities tying all of the above to OEIS A004211
//!   ([`counting`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safely shareable across threads.

pub mod bijections;
pub mod count;
pub mod counting;
pub mod di_map;
pub mod error;
pub mod partition;
pub mod tableau;
pub mod tableau_ops;
pub mod vacillating;

pub use bijections::{BiColoredSetPartition, Color, Involution, SetPartition};
pub use count::Count;
pub use counting::IdentityReport;
pub use di_map::{DiImage, IntegerSequence};
pub use error::Error;
pub use partition::Partition;
pub use tableau::{Cell, PartialTableau, StandardYoungTableau};
pub use vacillating::{CountTable, Flavor, VacillatingTableau};
