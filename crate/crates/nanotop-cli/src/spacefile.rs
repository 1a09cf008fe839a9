//! The on-disk space description: a flat JSON object with three string
//! arrays.
//!
//! ```json
//! {
//!   "universe": ["p", "q", "r", "s"],
//!   "partition": [["p"], ["r"], ["q", "s"]],
//!   "target": ["p", "q"]
//! }
//! ```
//!
//! Unknown keys are ignored, so any JSON document embedding these three
//! keys (such as the `topology --format json` output) parses back to
//! the same space.

use std::fs;
use std::io::Read;

use serde::{Deserialize, Serialize};

use nanotop::{NanoSpace, Partition, Universe};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceFile {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub target: Vec<String>,
}

impl SpaceFile {
    /// Reads a space description from a path, or standard input for `-`.
    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            fs::read_to_string(path)?
        };
        Ok(serde_json::from_str(&text)?)
    }

    /// Validates and builds the space; module errors surface verbatim.
    pub fn build(&self) -> Result<NanoSpace, CliError> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let blocks = self
            .partition
            .iter()
            .map(|block| universe.subset_of_names(block))
            .collect::<Result<Vec<_>, _>>()?;
        let partition = Partition::new(&universe, blocks)?;
        let target = universe.subset_of_names(&self.target)?;
        Ok(NanoSpace::build(partition, target)?)
    }

    /// The description of an already-built space.
    pub fn from_space(space: &NanoSpace) -> Self {
        SpaceFile {
            universe: space.universe().names().to_vec(),
            partition: space
                .partition()
                .blocks()
                .iter()
                .map(|b| b.element_names().map(str::to_owned).collect())
                .collect(),
            target: space.target().element_names().map(str::to_owned).collect(),
        }
    }
}
