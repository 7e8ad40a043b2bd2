use serde::{Deserialize, Serialize};

use crate::action::{VirasoroAction, WeightVectorOf};
use crate::coeff::{CoefficientModule, ModuleVector};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachConfig {
    /// Largest filtration degree kept in the slice.
    pub degree_cap: usize,
    /// Inclusive grade range of the slice.
    pub grade_lo: i64,
    pub grade_hi: i64,
    /// Generators `d_m` with `|m| ≤ operator_window`.
    pub operator_window: i64,
    /// Longest operator word applied to the seed.
    pub word_length: usize,
    /// Refuse slices larger than this.
    pub max_slice_dim: usize,
    /// Refuse to track spans larger than this.
    pub max_span_dim: usize,
}

impl Default for ReachConfig {
    fn default() -> Self {
        Self {
            degree_cap: 3,
            grade_lo: -2,
            grade_hi: 2,
            operator_window: 6,
            word_length: 4,
            max_slice_dim: 2_000,
            max_span_dim: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachReport {
    /// Dimension of (span of words applied to the seed) ∩ slice.
    pub rank: usize,
    pub slice_dim: usize,
    pub full: bool,
    /// Intersection rank after words of length `0, 1, …, word_length`.
    pub level_ranks: Vec<usize>,
    /// Dimension of the whole span after each length.
    pub span_dims: Vec<usize>,
    pub note: String,
}

/// Span of `{d_{m_1} ⋯ d_{m_k} · seed : |m_j| ≤ operator_window, k ≤ word_length}`
/// intersected with the slice `{grade_lo ≤ n ≤ grade_hi, degree ≤ degree_cap}`.
///
/// This is finite evidence for simplicity, not a proof: a full-rank slice
/// means every slice vector is reachable from the seed.
pub fn reachability_probe<A: VirasoroAction>(
    action: &A,
    seed: &WeightVectorOf<A::Coeff>,
    config: &ReachConfig,
) -> Result<ReachReport> {
    action.check_member(seed)?;
    if config.grade_lo > config.grade_hi {
        return Err(Error::Precondition("empty grade window".into()));
    }
    let grades = (config.grade_hi - config.grade_lo + 1) as usize;
    let slice_dim = grades.saturating_mul(action.coeff().filtration_dim(config.degree_cap));
    if slice_dim > config.max_slice_dim {
        return Err(Error::SliceTooLarge {
            dim: slice_dim,
            cap: config.max_slice_dim,
        });
    }

    type Basis<A> =
        <<<A as VirasoroAction>::Coeff as CoefficientModule>::Vector as ModuleVector>::Basis;
    // Coordinates outside the slice sort first, so rows pivoting inside the
    // slice lie entirely inside it.
    let key = |w: &WeightVectorOf<A::Coeff>| -> SparseVec<(bool, i64, Basis<A>)> {
        w.coordinates()
            .into_iter()
            .map(|((n, b), c)| {
                let inside = (config.grade_lo..=config.grade_hi).contains(&n)
                    && <<A::Coeff as CoefficientModule>::Vector as ModuleVector>::basis_degree(&b)
                        <= config.degree_cap;
                ((inside, n, b), c)
            })
            .collect()
    };
    let inside_rank = |basis: &EchelonBasis<(bool, i64, Basis<A>)>| {
        basis.pivots().filter(|(inside, _, _)| *inside).count()
    };

    let mut basis = EchelonBasis::new();
    let mut frontier = Vec::new();
    if basis.insert(key(seed)) {
        frontier.push(seed.clone());
    }
    let mut level_ranks = vec![inside_rank(&basis)];
    let mut span_dims = vec![basis.rank()];
    for _ in 0..config.word_length {
        let mut next = Vec::new();
        for w in &frontier {
            for m in -config.operator_window..=config.operator_window {
                let image = action.d(m, w)?;
                if basis.insert(key(&image)) {
                    next.push(image);
                    if basis.rank() > config.max_span_dim {
                        return Err(Error::SliceTooLarge {
                            dim: basis.rank(),
                            cap: config.max_span_dim,
                        });
                    }
                }
            }
        }
        frontier = next;
        level_ranks.push(inside_rank(&basis));
        span_dims.push(basis.rank());
    }
    let rank = *level_ranks.last().unwrap();
    Ok(ReachReport {
        rank,
        slice_dim,
        full: rank == slice_dim,
        level_ranks,
        span_dims,
        note: "bounded-word reachability; evidence for simplicity, not a proof".into(),
    })
}
