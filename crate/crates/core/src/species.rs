use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The block-structured graph families handled by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Species {
    /// Connected graphs whose blocks are complete graphs.
    Husimi,
    /// Connected graphs whose blocks are edges or polygons.
    Cacti,
    /// Connected digraphs whose blocks are directed cycles, 2-cycles included.
    Oriented,
    /// Cacti all of whose blocks are triangles.
    Triangular,
}

impl Species {
    pub const ALL: [Species; 4] = [
        Species::Husimi,
        Species::Cacti,
        Species::Oriented,
        Species::Triangular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Species::Husimi => "husimi",
            Species::Cacti => "cacti",
            Species::Oriented => "oriented",
            Species::Triangular => "triangular",
        }
    }

    /// Whether a block on `size` vertices may occur in this species.
    pub fn allows_block_size(self, size: usize) -> bool {
        match self {
            Species::Triangular => size == 3,
            _ => size >= 2,
        }
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Species {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "husimi" => Ok(Species::Husimi),
            "cacti" | "cactus" => Ok(Species::Cacti),
            "oriented" | "oriented-cacti" => Ok(Species::Oriented),
            "triangular" | "triangular-cacti" => Ok(Species::Triangular),
            other => Err(Error::Domain(format!("unknown species '{other}'"))),
        }
    }
}
