//! Deterministic one-announcement card protocols as colorings of
//! distance-d Johnson graphs.

pub mod deck;
pub mod decode;
pub mod error;
pub mod fixtures;
pub mod johnson;
pub mod protocols;
pub mod search;
pub mod verify;

pub use deck::{binomial, complement, deal_valid, enumerate_hands, make_signature, Card, Deal, Hand, Signature};
pub use error::{Error, Result};
pub use johnson::{adjacent, clique_of, graph_stats, shift, zero_sum_shift, zero_sum_two_arc, Arc, GraphSpec, GraphStats};
pub use fixtures::{builtin_fixture, FIXTURE_NAMES};
pub use protocols::{
    chi_2, chi_gf, chi_modn, dual_protocol, dual_protocol_unchecked, reduce_protocol, tabulate, Coloring, FieldWeights,
    MessageId, Protocol,
};
pub use verify::{
    check_ca2_ca3, check_informative, check_min_informative, check_safe, check_solvability_bounds, Bounds, Direction,
    Report, Solvability, Witness, WitnessMode,
};
pub use decode::{decode_full, decode_min, learned_card};
pub use search::{
    chromatic_number_exact, exhaustive_partition_check, find_coloring, find_coloring_on, Constraints, Informativeness,
    Outcome, PartitionPredicate, Safety, SearchResult,
};
