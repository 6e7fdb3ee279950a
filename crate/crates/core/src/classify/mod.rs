//! Maximum orders of extendable actions and the surfaces realizing them.
//!
//! Each engine enumerates the candidate groups `G°` (cyclic, dihedral, A4,
//! S4, A5), the admissible quotient shapes and the generating pairs that
//! make the preimage connected, then takes the maximum. Orientation-reversing
//! answers come from doubling an orientation-preserving candidate when the
//! quotient allows a reflection.

mod bordered;
mod closed;
mod lines;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbifold::{OrbifoldError, SurfaceType};
use crate::permgroup::{GroupLabel, PermError};

pub use bordered::{cea, cea_o, ea, ea_o, enumerate_bordered_cases, graph_variant};
pub use closed::{ce, ce_o, closed_rotation_candidates, e, e_o};
pub use lines::{cone_pairs, pair_classes, remaining_line, singular_line_indices};
pub use witness::{CandidateCase, Crossing, GroupElements, Recomputed, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("order unbounded: {0}")]
    Unbounded(String),
    #[error("classification contradiction: {0}")]
    Contradiction(String),
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

/// Which maximum is asked for. `C` = cyclic, `E` = any group, `A` = bordered
/// surface, `G` = graph; the `O` variants keep only orientation-preserving
/// actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Kind {
    CeO,
    Ce,
    EO,
    E,
    CeaO,
    Cea,
    CeaFaithful,
    EaO,
    Ea,
    CegO,
    Ceg,
    EgO,
    Eg,
}

impl Kind {
    pub const ALL: [Kind; 13] = [
        Kind::CeO,
        Kind::Ce,
        Kind::EO,
        Kind::E,
        Kind::CeaO,
        Kind::Cea,
        Kind::CeaFaithful,
        Kind::EaO,
        Kind::Ea,
        Kind::CegO,
        Kind::Ceg,
        Kind::EgO,
        Kind::Eg,
    ];

    /// Closed-surface kinds take a genus, the rest an algebraic genus.
    pub fn is_closed(self) -> bool {
        matches!(self, Kind::CeO | Kind::Ce | Kind::EO | Kind::E)
    }

    pub fn is_graph(self) -> bool {
        matches!(self, Kind::CegO | Kind::Ceg | Kind::EgO | Kind::Eg)
    }

    fn name(self) -> &'static str {
        match self {
            Kind::CeO => "CE°",
            Kind::Ce => "CE",
            Kind::EO => "E°",
            Kind::E => "E",
            Kind::CeaO => "CEA°",
            Kind::Cea => "CEA",
            Kind::CeaFaithful => "CEA-faithful",
            Kind::EaO => "EA°",
            Kind::Ea => "EA",
            Kind::CegO => "CEG°",
            Kind::Ceg => "CEG",
            Kind::EgO => "EG°",
            Kind::Eg => "EG",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts `E°`, `Eo`, `E^o`, `e-o` and similar spellings, case-insensitively.
impl FromStr for Kind {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = s.trim().to_ascii_uppercase().replace('°', "O");
        for sep in ["^O", "-O", "_O"] {
            if t.ends_with(sep) {
                t = format!("{}O", &t[..t.len() - sep.len()]);
            }
        }
        let k = match t.as_str() {
            "CEO" => Kind::CeO,
            "CE" => Kind::Ce,
            "EO" => Kind::EO,
            "E" => Kind::E,
            "CEAO" => Kind::CeaO,
            "CEA" => Kind::Cea,
            "CEA-FAITHFUL" | "CEA_FAITHFUL" | "CEAF" => Kind::CeaFaithful,
            "EAO" => Kind::EaO,
            "EA" => Kind::Ea,
            "CEGO" => Kind::CegO,
            "CEG" => Kind::Ceg,
            "EGO" => Kind::EgO,
            "EG" => Kind::Eg,
            _ => return Err(ClassifyError::UnknownKind(s.to_string())),
        };
        Ok(k)
    }
}

impl From<Kind> for String {
    fn from(k: Kind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for Kind {
    type Error = ClassifyError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Remarks attached to a result that are not captured by the numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Note {
    /// Realized only by an action with a non-trivial kernel on the surface.
    NonFaithful,
    /// Several surfaces realize the order; the list is left empty on purpose.
    SurfacesNotDetermined,
    /// Answered through the bordered-surface engine.
    GraphVariant { delegate: Kind },
    /// A candidate dropped because both cone points sit on one singular line,
    /// so no reflection extends it with a connected preimage.
    SameLineExcluded { group: GroupLabel, cones: (u64, u64) },
    /// The quotient-through-a-vertex branch only gives `|G| <= bound`.
    VertexBranchBound { bound: u64 },
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Note::NonFaithful => write!(f, "action on the surface is non-faithful"),
            Note::SurfacesNotDetermined => write!(f, "various surfaces realize this order"),
            Note::GraphVariant { delegate } => write!(f, "graph variant of {delegate}"),
            Note::SameLineExcluded { group, cones: (r, s) } => {
                write!(f, "{group} ({r},{s}) excluded: both cone points on one singular line")
            }
            Note::VertexBranchBound { bound } => write!(f, "vertex branch bounded by {bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxActionResult {
    pub kind: Kind,
    /// `g` for closed kinds, `α` otherwise.
    pub input: u64,
    pub order: u64,
    /// Sorted and deduplicated. Empty for closed kinds.
    pub surfaces: Vec<SurfaceType>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<Note>,
}

impl MaxActionResult {
    pub fn is_faithful(&self) -> bool {
        !self.notes.contains(&Note::NonFaithful)
    }
}

/// Runs the engine for `kind` at `input` (`g` or `α`).
pub fn max_action(kind: Kind, input: u64) -> Result<MaxActionResult, ClassifyError> {
    match kind {
        Kind::CeO => ce_o(input),
        Kind::Ce => ce(input),
        Kind::EO => e_o(input),
        Kind::E => e(input),
        Kind::CeaO => cea_o(input),
        Kind::Cea => cea(input, false),
        Kind::CeaFaithful => cea(input, true),
        Kind::EaO => ea_o(input),
        Kind::Ea => ea(input),
        Kind::CegO | Kind::Ceg | Kind::EgO | Kind::Eg => graph_variant(kind, input),
    }
}

pub(crate) fn require_above_one(what: &str, v: u64) -> Result<(), ClassifyError> {
    if v <= 1 {
        let reason = if v == 0 {
            "the sphere and the disk admit arbitrarily large extendable actions"
        } else {
            "the torus and the annulus admit arbitrarily large extendable actions"
        };
        return Err(ClassifyError::Unbounded(format!("{what} = {v}: {reason}")));
    }
    Ok(())
}

/// Keeps the witnesses of maximal order.
pub(crate) fn top(witnesses: Vec<Witness>) -> (u64, Vec<Witness>) {
    let order = witnesses.iter().map(|w| w.order).max().unwrap_or(0);
    (order, witnesses.into_iter().filter(|w| w.order == order).collect())
}

pub(crate) fn surfaces_of(witnesses: &[Witness]) -> Vec<SurfaceType> {
    let mut s: Vec<_> = witnesses.iter().filter_map(|w| w.surface).collect();
    s.sort();
    s.dedup();
    s
}
