//! Exact computations for Artin groups of finite type: Garside normal forms,
//! the simplicial complex `X(G)` for `G = A/⟨Δ²⟩`, Morse links, torsion and
//! the boundary action on admissible itineraries.

pub mod artin;
pub mod complex;
pub mod coxeter;
pub mod cyclotomic;
pub mod dynamics;
pub mod error;
pub mod garside;
pub mod homology;
pub mod notation;

pub use artin::{ArtinElement, GVertex};
pub use complex::{Ball, LinkComplex, SearchResult, DEFAULT_BALL_CAP};
pub use coxeter::{build_system, CoxeterMatrix, CoxeterSystem, Element, GenSet, Side, DEFAULT_CAP};
pub use dynamics::{CharneyGraph, ItineraryPrefix, Order, TorsionClass, TorsionKind, TranslationBounds};
pub use error::{Error, Result};
pub use garside::{Atom, Garside, PositiveElement};
pub use homology::HomologyProfile;
pub use notation::Itinerary;
