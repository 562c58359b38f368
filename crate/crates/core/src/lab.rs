//! Shared context: one root system, its Lie algebra, principal data and a
//! cache of highest-weight modules.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::chevrep::{LieAlgebra, Representation, DEFAULT_MAX_DIM};
use crate::error::{Error, Result};
use crate::principal::{principal_data, PrincipalData};
use crate::rootdata::{RootSystem, TypeLetter, Weight};

pub struct Lab {
    rs: RootSystem,
    g: LieAlgebra,
    pd: PrincipalData,
    max_dim: usize,
    reps: Mutex<HashMap<Vec<i64>, Arc<Representation>>>,
}

impl Lab {
    pub fn new(type_letter: TypeLetter, rank: usize) -> Result<Self> {
        Self::with_max_dim(type_letter, rank, DEFAULT_MAX_DIM)
    }

    pub fn with_max_dim(type_letter: TypeLetter, rank: usize, max_dim: usize) -> Result<Self> {
        let rs = RootSystem::new(type_letter, rank)?;
        let g = LieAlgebra::new(&rs)?;
        if g.dim() > max_dim {
            return Err(Error::DimensionCap { cap: max_dim });
        }
        let pd = principal_data(&g);
        Ok(Lab {
            rs,
            g,
            pd,
            max_dim,
            reps: Mutex::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn principal(&self) -> &PrincipalData {
        &self.pd
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn rep(&self, lambda: &Weight) -> Result<Arc<Representation>> {
        if let Some(v) = self.reps.lock().expect("cache lock").get(&lambda.coords) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.g.highest_weight_rep(lambda, self.max_dim)?);
        self.reps
            .lock()
            .expect("cache lock")
            .insert(lambda.coords.clone(), v.clone());
        Ok(v)
    }

    /// The module with highest weight `n·λ`.
    pub fn rep_multiple(&self, lambda: &Weight, n: i64) -> Result<Arc<Representation>> {
        self.rep(&self.rs.weight(lambda.coords.iter().map(|c| c * n).collect()))
    }

    /// A weight from root-lattice coordinates, checked to be regular dominant.
    pub fn lambda_from_root_coords(&self, root_coords: &[i64]) -> Result<Weight> {
        if root_coords.len() != self.rs.rank() {
            return Err(Error::InvalidWeight {
                weight: root_coords.to_vec(),
                reason: format!("expected {} root coordinates", self.rs.rank()),
            });
        }
        let w = self.rs.weight_from_root(root_coords);
        self.check_lambda(&w)?;
        Ok(w)
    }

    /// `λ` must be regular dominant and lie in the root lattice.
    pub fn check_lambda(&self, w: &Weight) -> Result<()> {
        if !self.rs.is_regular_dominant(w) {
            return Err(Error::InvalidWeight {
                weight: w.coords.clone(),
                reason: "lambda not regular dominant".into(),
            });
        }
        if !w.in_root_lattice {
            return Err(Error::InvalidWeight {
                weight: w.coords.clone(),
                reason: "lambda not in the root lattice".into(),
            });
        }
        Ok(())
    }
}
