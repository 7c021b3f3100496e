//! Finite Γ-semigroups as families of Cayley tables.
//!
//! - [`gamma`]: tables, associativity validation, words over G¹.
//! - [`green`]: principal ideals, Green's `R`, `L`, `H`, `R∘L`, egg-boxes.
//! - [`maps`]: Green's Lemma and Green's Theorem certificates.
//! - [`census`]: enumeration up to isomorphism.
//! - [`gsg`] and [`report`]: the text format and plain-text reports.

pub mod census;
pub mod error;
pub mod gamma;
pub mod green;
pub mod gsg;
pub mod maps;
pub mod report;

pub use census::{
    canonical_form, enumerate, enumerate_with, isomorphic, CanonicalKey, CensusBounds, CensusError,
    CensusMode, CensusOptions, CensusResult, IsoWitness,
};
pub use error::{IndexError, TableError};
pub use gamma::{
    example_semigroup, example_names, AssociativityReport, AssociativityViolation, ExtElement,
    GammaGroupoid, GammaSemigroup, Word,
};
pub use green::{
    CongruenceReport, EggBlock, EggBox, ElementSet, GreenRelation, GreenStructure, Partition,
    Related, Relation, Side,
};
pub use gsg::{parse_gsg, serialize_gsg, DisplayNames, GsgDocument, ParseError};
pub use maps::{
    find_witnesses, green_lemma, green_theorem, LemmaCertificate, MapError, TheoremCertificate,
    Witness,
};
