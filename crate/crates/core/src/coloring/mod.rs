//! Constructive colorers for (bull, diamond)-free graphs and their
//! `P_t`-free subclasses.
//!
//! Every colorer returns a [`Coloring`] carrying a [`BoundCertificate`]; the
//! palette never exceeds the certificate's claimed bound. Structural facts
//! the constructions lean on are checked at runtime and reported as
//! [`ColoringError::Claim`] when they fail.

mod dispatch;
mod extend;
mod p5;
mod p6;
mod p7;
mod pipeline;
mod prism;
mod thm32;
mod triangle_free;

pub use dispatch::{color_dispatch, ColorerChoice};
pub use extend::{extend_into_clique_component, ExtensionRoute};
pub use p5::{color_p5, color_p5_with};
pub use p6::{color_p6, color_p6_traced, color_p6_with};
pub use p7::{color_p7, color_p7_traced, color_p7_with};
pub use pipeline::{LayerPiece, PieceKind, Trace};
pub use prism::color_prism_case;
pub use thm32::{color_bull_diamond, color_bull_diamond_traced, color_cor38};
pub use triangle_free::{color_triangle_free, Strategy, TriangleFreeColorer};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::LayeringError;
use crate::oracle::{Coloring, OracleError};
use crate::recognition::RecognitionError;

/// The result that justified a coloring's palette.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Thm32,
    CorP5,
    ThmP6Big,
    ThmP6Omega3,
    CorP6Omega2,
    ThmP7,
    Cor38,
    Prism,
    TriangleFree,
    Exact,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Thm32 => "thm32",
            Self::CorP5 => "cor_p5",
            Self::ThmP6Big => "thm_p6_big",
            Self::ThmP6Omega3 => "thm_p6_omega3",
            Self::CorP6Omega2 => "cor_p6_omega2",
            Self::ThmP7 => "thm_p7",
            Self::Cor38 => "cor38",
            Self::Prism => "prism",
            Self::TriangleFree => "triangle_free",
            Self::Exact => "exact",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub theorem: Theorem,
    pub claimed_bound: usize,
    pub omega: usize,
    pub k_used: Option<usize>,
}

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("input contains an induced {pattern}: {witness:?}")]
    ClassViolation { pattern: String, witness: Vec<usize> },
    #[error("triangle-free colorer needs {needed} colors, over the budget of {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("structural claim failed: {claim} (witness {witness:?})")]
    Claim { claim: String, witness: Vec<usize> },
    #[error("extension into clique component {component:?} failed with palette {palette}")]
    ExtensionFailed { component: Vec<usize>, palette: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Layering(#[from] LayeringError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
}

pub(crate) fn claim(text: impl Into<String>, witness: Vec<usize>) -> ColoringError {
    ColoringError::Claim {
        claim: text.into(),
        witness,
    }
}

/// A finished coloring together with its certificate.
pub type Certified = (Coloring, BoundCertificate);
