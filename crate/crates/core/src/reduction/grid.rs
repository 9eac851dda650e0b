//! Certificates for grids `P_n □ P_m` with `η(e) = 1`.
//!
//! The last row is deleted and the two shapes alternate: the uniform shape
//! (`η ≡ 1` on vertices) deletes left to right, the corner shape
//! (`η(n,1) = 0`, `η(n,j) = 2` for `j ≥ 2`) right to left. Multiplicities
//! only ever end up at or above what the shapes prescribe, so each step is a
//! `del` or `del3` step. The final row or column is a path and goes through
//! the subcubic reduction.

use super::subcubic::reduce_components;
use super::{finish, push_step, ReductionCertificate, ReductionError, ReductionState};
use crate::graph::{canonical_orientation, gen_grid, grid_vertex, Graph};
use crate::index::IndexFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridVariant {
    Uniform,
    Corner,
}

/// The grid and the initial index function of the chosen shape.
pub fn grid_eta(n: usize, m: usize, variant: GridVariant) -> Result<(Graph, IndexFunction), ReductionError> {
    let g = gen_grid(n, m)?;
    let mut eta = IndexFunction::constant(&g, 1, 1);
    if variant == GridVariant::Corner {
        eta.vertices[grid_vertex(n, 1, m)] = 0;
        for j in 2..=m {
            eta.vertices[grid_vertex(n, j, m)] = 2;
        }
    }
    Ok((g, eta))
}

pub fn certify_grid(n: usize, m: usize, variant: GridVariant) -> Result<ReductionCertificate, ReductionError> {
    let (g, eta) = grid_eta(n, m, variant)?;
    let o = canonical_orientation(&g);
    let mut state = ReductionState::new(&g, eta.clone())?;
    let mut steps = Vec::new();
    if m >= 2 {
        let mut shape = variant;
        for r in (2..=n).rev() {
            let v = |j: usize| grid_vertex(r, j, m);
            match shape {
                GridVariant::Uniform => {
                    push_step(&mut state, &mut steps, v(1), vec![grid_vertex(r - 1, 1, m)])?;
                    for j in 2..=m {
                        push_step(&mut state, &mut steps, v(j), Vec::new())?;
                    }
                    shape = GridVariant::Corner;
                }
                GridVariant::Corner => {
                    for j in (1..=m).rev() {
                        push_step(&mut state, &mut steps, v(j), Vec::new())?;
                    }
                    shape = GridVariant::Uniform;
                }
            }
        }
    }
    reduce_components(&mut state, &mut steps)?;
    finish(&g, &o, &eta, steps, &state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::is_nonsingular;
    use crate::reduction::verify_certificate;

    #[test]
    fn small_grids_agree_with_direct_search() {
        for (n, m) in [(2, 2), (2, 3), (3, 2)] {
            for variant in [GridVariant::Uniform, GridVariant::Corner] {
                let cert = certify_grid(n, m, variant).unwrap();
                verify_certificate(&cert).unwrap();
                let (g, eta) = grid_eta(n, m, variant).unwrap();
                assert!(is_nonsingular(&eta, &g, &canonical_orientation(&g)).unwrap().is_nonsingular());
            }
        }
    }

    #[test]
    fn all_grids_up_to_five() {
        for n in 1..=5 {
            for m in 1..=5 {
                for variant in [GridVariant::Uniform, GridVariant::Corner] {
                    let cert = certify_grid(n, m, variant).unwrap_or_else(|e| panic!("{n}x{m} {variant:?}: {e}"));
                    verify_certificate(&cert).unwrap();
                }
            }
        }
    }

    #[test]
    fn uniform_first_row_deletion() {
        let cert = certify_grid(2, 2, GridVariant::Uniform).unwrap();
        // (2,1) = 2 decrements (1,1) = 0.
        assert_eq!(cert.steps[0].vertex, 2);
        assert_eq!(cert.steps[0].j, vec![0]);
        assert!(certify_grid(0, 3, GridVariant::Uniform).is_err());
    }
}
