//! Lazily computed, cached analysis of one Hopf algebra.

use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use crate::characters::{fusion_ring, irreducible_characters, is_central_character, CharacterTable, FusionRing};
use crate::error::Result;
use crate::hopf::{check_axioms, dualize, AxiomReport, HopfData};
use crate::integrals::{compute_integrals, IntegralPair};
use crate::wedderburn::{primitive_idempotents, BlockDecomposition};

/// Every intermediate result the verification suites need, computed on
/// first use and kept for the lifetime of the value.
#[derive(Debug)]
pub struct Analysis {
    algebra: HopfData,
    order: u32,
    seed: u64,
    dual: OnceLock<HopfData>,
    axioms: OnceLock<AxiomReport>,
    integrals: OnceLock<IntegralPair>,
    dual_integrals: OnceLock<IntegralPair>,
    blocks: OnceLock<BlockDecomposition>,
    dual_blocks: OnceLock<BlockDecomposition>,
    characters: OnceLock<CharacterTable>,
    dual_characters: OnceLock<CharacterTable>,
    fusion: OnceLock<FusionRing>,
    centrality: OnceLock<Vec<bool>>,
    timings: Mutex<Vec<(&'static str, Duration)>>,
}

impl Analysis {
    /// `order` is the cyclotomic order used for splitting; `seed` drives
    /// every random choice.
    pub fn new(algebra: HopfData, order: u32, seed: u64) -> Analysis {
        Analysis {
            algebra,
            order,
            seed,
            dual: OnceLock::new(),
            axioms: OnceLock::new(),
            integrals: OnceLock::new(),
            dual_integrals: OnceLock::new(),
            blocks: OnceLock::new(),
            dual_blocks: OnceLock::new(),
            characters: OnceLock::new(),
            dual_characters: OnceLock::new(),
            fusion: OnceLock::new(),
            centrality: OnceLock::new(),
            timings: Mutex::new(Vec::new()),
        }
    }

    /// Uses the algebra's own cyclotomic order and seed 0.
    pub fn with_defaults(algebra: HopfData) -> Analysis {
        let order = algebra.field().order();
        Analysis::new(algebra, order, 0)
    }

    fn cached<'a, T>(
        &'a self,
        cell: &'a OnceLock<T>,
        stage: &'static str,
        f: impl FnOnce() -> Result<T>,
    ) -> Result<&'a T> {
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let start = Instant::now();
        let value = f()?;
        self.timings.lock().unwrap_or_else(|e| e.into_inner()).push((stage, start.elapsed()));
        Ok(cell.get_or_init(|| value))
    }

    pub fn algebra(&self) -> &HopfData {
        &self.algebra
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `H*`.
    pub fn dual(&self) -> &HopfData {
        self.dual.get_or_init(|| dualize(&self.algebra))
    }

    pub fn axioms(&self) -> &AxiomReport {
        self.cached(&self.axioms, "axioms", || Ok(check_axioms(&self.algebra))).expect("infallible")
    }

    pub fn integrals(&self) -> Result<&IntegralPair> {
        self.cached(&self.integrals, "integrals", || compute_integrals(&self.algebra))
    }

    /// Integrals of `H*`: an element of `H` and a functional on `H*`.
    pub fn dual_integrals(&self) -> Result<&IntegralPair> {
        self.cached(&self.dual_integrals, "dual integrals", || compute_integrals(self.dual()))
    }

    pub fn blocks(&self) -> Result<&BlockDecomposition> {
        self.cached(&self.blocks, "wedderburn", || primitive_idempotents(&self.algebra, self.order, self.seed))
    }

    /// Blocks of `H*`, labelled `M1, M2, ...`.
    pub fn dual_blocks(&self) -> Result<&BlockDecomposition> {
        self.cached(&self.dual_blocks, "dual wedderburn", || {
            Ok(primitive_idempotents(self.dual(), self.order, self.seed)?.with_prefix("M"))
        })
    }

    pub fn characters(&self) -> Result<&CharacterTable> {
        self.cached(&self.characters, "characters", || {
            irreducible_characters(&self.algebra, self.blocks()?, self.integrals()?)
        })
    }

    /// Irreducible characters of `H*`, as elements of `H`.
    pub fn dual_characters(&self) -> Result<&CharacterTable> {
        self.cached(&self.dual_characters, "dual characters", || {
            irreducible_characters(self.dual(), self.dual_blocks()?, self.dual_integrals()?)
        })
    }

    pub fn fusion(&self) -> Result<&FusionRing> {
        self.cached(&self.fusion, "fusion ring", || fusion_ring(self.characters()?, &self.algebra))
    }

    /// Whether each `χ_V` lies in `Z(H*)`.
    pub fn centrality(&self) -> Result<&Vec<bool>> {
        self.cached(&self.centrality, "centrality", || {
            Ok(self.characters()?.characters.iter().map(|chi| is_central_character(chi, &self.algebra)).collect())
        })
    }

    /// Wall-clock time of each stage computed so far, in order.
    pub fn timings(&self) -> Vec<(&'static str, Duration)> {
        self.timings.lock().unwrap_or_else(|e| e.into_inner()).clone()
    }
}
