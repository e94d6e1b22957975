//! On-disk cache of generated lattices under `FORMS_CACHE_DIR`.
//!
//! Records hold the basis and the nonzero Gram entries, with every integer
//! written as a decimal string. A loaded basis is re-certified for operator
//! stability and its Gram matrix is recomputed and compared with the record.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::hnf::HermiteLattice;
use super::lattice::LatticeModule;
use super::space::{Caps, Monomial, SpaceFamily, WedgeSpace};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "FORMS_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub format_version: u32,
    pub family: SpaceFamily,
    /// Each basis vector as `(monomial, coefficient)` pairs.
    pub basis: Vec<Vec<(Monomial, String)>>,
    /// Nonzero `(i, j, ⟨b_i, b_j⟩)` in basis order.
    pub gram: Vec<(usize, usize, String)>,
}

impl LatticeRecord {
    pub fn from_module(module: &LatticeModule) -> LatticeRecord {
        let mut basis = Vec::with_capacity(module.rank());
        for g in 0..module.rank() {
            basis.push(
                module
                    .basis_vector(g)
                    .terms
                    .iter()
                    .map(|(m, c)| (*m, c.to_string()))
                    .collect(),
            );
        }
        let mut gram = Vec::new();
        for g in 0..module.rank() {
            let (b, i) = module.locate(g);
            let Some(o) = module.opposite_block(b) else { continue };
            for (j, &val) in module.gram_block(b)[i].iter().enumerate() {
                if val != 0 {
                    gram.push((g, module.block_offset(o) + j, val.to_string()));
                }
            }
        }
        LatticeRecord { format_version: FORMAT_VERSION, family: module.family(), basis, gram }
    }

    pub fn into_module(self, caps: &Caps) -> Result<LatticeModule> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Input(format!("unsupported cache format {}", self.format_version)));
        }
        let space = build_space(self.family, caps)?;
        let mut blocks: Vec<HermiteLattice> =
            space.blocks().iter().map(|b| HermiteLattice::new(b.members.len())).collect();
        for vector in &self.basis {
            let mut block = None;
            let mut dense: Vec<i64> = Vec::new();
            for (m, c) in vector {
                let i = space
                    .monomial_index(m)
                    .ok_or_else(|| Error::Input("cached monomial outside the ambient space".into()))?;
                let b = space.block_of(i);
                if *block.get_or_insert(b) != b {
                    return Err(Error::Input("cached basis vector is not a weight vector".into()));
                }
                if dense.is_empty() {
                    dense = vec![0; blocks[b].dim()];
                }
                dense[space.local_of(i)] =
                    c.parse().map_err(|_| Error::Input(format!("bad cached integer {c:?}")))?;
            }
            if let Some(b) = block {
                blocks[b].insert(&dense)?;
            }
        }
        let inserted = self.basis.len();
        let module = LatticeModule::from_blocks(space, blocks, inserted)?;
        if LatticeRecord::from_module(&module) != self {
            return Err(Error::Input("cached lattice does not match its recomputation".into()));
        }
        Ok(module)
    }
}

fn build_space(family: SpaceFamily, caps: &Caps) -> Result<WedgeSpace> {
    match family {
        SpaceFamily::Symplectic { l, k } => WedgeSpace::symplectic(l, k, caps),
        SpaceFamily::SlTensor { n, k } => WedgeSpace::sl_tensor(n, k, caps),
    }
}

pub fn cache_path(dir: &Path, family: SpaceFamily) -> PathBuf {
    let name = match family {
        SpaceFamily::Symplectic { l, k } => format!("sp-l{l}-k{k}"),
        SpaceFamily::SlTensor { n, k } => format!("sl-n{n}-k{k}"),
    };
    dir.join(format!("{name}.v{FORMAT_VERSION}.json"))
}

/// Load the lattice from `dir` if present, otherwise generate and store it.
pub fn load_or_generate_in(dir: &Path, family: SpaceFamily, caps: &Caps) -> Result<LatticeModule> {
    let path = cache_path(dir, family);
    if let Ok(text) = fs::read_to_string(&path) {
        let record: LatticeRecord = serde_json::from_str(&text)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        return record.into_module(caps);
    }
    let module = LatticeModule::generate(build_space(family, caps)?, caps)?;
    fs::create_dir_all(dir).map_err(|e| Error::Input(format!("{}: {e}", dir.display())))?;
    let text = serde_json::to_string(&LatticeRecord::from_module(&module))
        .map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(&path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Ok(module)
}

/// Generate a lattice, going through the cache when `FORMS_CACHE_DIR` is set.
pub fn load_or_generate(family: SpaceFamily, caps: &Caps) -> Result<LatticeModule> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => load_or_generate_in(Path::new(&dir), family, caps),
        _ => LatticeModule::generate(build_space(family, caps)?, caps),
    }
}
