//! Indecomposability and criticality of finite tournaments.
//!
//! A tournament on `{0, .., n-1}` is stored as one bit row per vertex. An
//! interval is a vertex set `X` that every outside vertex either dominates
//! entirely or is dominated by entirely; a tournament is indecomposable
//! when its only intervals are trivial. A vertex `x` of an indecomposable
//! tournament is critical when `T - x` is decomposable.
//!
//! The crate provides:
//!
//! * interval tests, closures and witnesses ([`interval`]);
//! * the critical set and the indecomposability graph `I(T)` ([`criticality`]);
//! * the classification of vertices outside an indecomposable
//!   subtournament ([`er`]);
//! * constructors for the families `T`, `U`, `V` of critical tournaments and
//!   `E`, `F`, `G`, `H` of tournaments with a single non-critical vertex
//!   ([`families`]);
//! * canonical forms and isomorphism search ([`iso`]);
//! * an exhaustive, sharded census up to order 8 ([`census`]);
//! * verification pipelines tying all of the above together ([`verify`]).
//!
//! ```
//! use tournaments::{classify, families::h_family};
//!
//! let h = h_family(3, 1).unwrap();
//! let r = classify(&h).unwrap();
//! assert_eq!(r.k, 1);
//! assert_eq!(r.non_critical.to_vec(), vec![3]);
//! assert_eq!(r.graph.edges(), vec![(0, 1), (1, 3), (3, 4), (4, 5)]);
//! ```

pub mod census;
pub mod criticality;
pub mod er;
pub mod error;
pub mod families;
pub mod format;
pub mod interval;
pub mod iso;
pub mod report;
pub mod tournament;
pub mod verify;
pub mod vertex_set;

pub use census::{census, census_with, CensusOptions, CensusResult};
pub use criticality::{
    classify, critical_vertices, indecomposability_graph, CriticalityReport, IndecomposabilityGraph,
};
pub use er::{compute_partition, find_indecomposable_extension_pair, ErClass, ErPartition};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use interval::{find_nontrivial_interval, interval_closure, is_indecomposable, is_interval};
pub use iso::{canonical_form, find_isomorphism, CanonicalForm};
pub use tournament::{Permutation, Tournament};
pub use vertex_set::VertexSet;
