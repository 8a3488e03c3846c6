//! Module spec files: the JSON description of a ring and a module that
//! every command takes as input, and that `inspect` echoes back.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use specgraph_core::{FinModule, Lattice, Ring};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingSpec {
    /// 0 selects the integers, N >= 2 selects Z/N.
    pub modulus: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleBody {
    /// Invariant factors d1 | d2 | ... | dk, each at least 2; empty for
    /// the zero module.
    pub invariant_factors: Vec<u64>,
}

/// The on-disk schema. Extra keys are ignored, which is what lets an
/// `inspect` document be fed straight back in as a module spec.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleSpecFile {
    pub ring: RingSpec,
    pub module: ModuleBody,
}

impl ModuleSpecFile {
    pub fn for_module(m: &FinModule) -> Self {
        ModuleSpecFile {
            ring: RingSpec { modulus: m.ring().modulus() },
            module: ModuleBody { invariant_factors: m.invariant_factors().to_vec() },
        }
    }

    pub fn build(&self, path: &Path) -> Result<FinModule, CliError> {
        let ring = if self.ring.modulus == 0 {
            Ring::integers()
        } else {
            Ring::new(self.ring.modulus).map_err(|e| malformed(path, &e.to_string()))?
        };
        FinModule::new(ring, &self.module.invariant_factors)
            .map_err(|e| malformed(path, &e.to_string()))
    }
}

fn malformed(path: &Path, detail: &str) -> CliError {
    CliError::MalformedSpec { path: path.display().to_string(), detail: detail.to_string() }
}

/// Short stable name for a module, e.g. `r0:2.6` for Z/2 + Z/6 over Z.
pub fn module_key(m: &FinModule) -> String {
    let fs: Vec<String> = m.invariant_factors().iter().map(|d| d.to_string()).collect();
    format!("r{}:{}", m.ring().modulus(), fs.join("."))
}

/// Read a spec file and enumerate its submodule lattice.
pub fn load_module(path: &Path, bound: u64) -> Result<(FinModule, Lattice), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::ReadFile {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    let spec: ModuleSpecFile =
        serde_json::from_str(&text).map_err(|e| malformed(path, &e.to_string()))?;
    let module = spec.build(path)?;
    let lat = Lattice::enumerate(&module, bound).map_err(CliError::Core)?;
    Ok((module, lat))
}
