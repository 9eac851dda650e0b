//! Certificates for connected graphs with `η(e) = 1` and either
//! `η(v) ≥ max(1, d(v) - 2)` everywhere, or `η(v) ≥ d(v) - 2` everywhere with
//! some vertex having `η(v) ≥ d(v)`.

use super::{
    finish, push_step, require_unit_edges, DeletionStep, ReductionCertificate, ReductionError, ReductionState,
};
use crate::graph::{articulation_points_masked, canonical_orientation, components_masked, Graph};
use crate::index::IndexFunction;

pub fn certify_subcubic(g: &Graph, eta: &IndexFunction) -> Result<ReductionCertificate, ReductionError> {
    eta.check_domain(g)?;
    require_unit_edges(eta)?;
    if !g.is_connected() {
        return Err(ReductionError::Precondition("graph is disconnected".into()));
    }
    let d = |v: usize| g.degree(v) as i64;
    let ev = |v: usize| i64::from(eta.vertices[v]);
    let first = (0..g.n()).all(|v| ev(v) >= 1.max(d(v) - 2));
    let second = (0..g.n()).all(|v| ev(v) >= d(v) - 2) && (0..g.n()).any(|v| ev(v) >= d(v));
    if !first && !second {
        return Err(ReductionError::Precondition(
            "need eta(v) >= max(1, d(v) - 2) for every v, or eta(v) >= d(v) - 2 for every v and eta(v) >= d(v) for some v"
                .into(),
        ));
    }
    let o = canonical_orientation(g);
    let mut state = ReductionState::new(g, eta.clone())?;
    let mut steps = Vec::new();
    reduce_components(&mut state, &mut steps)?;
    finish(g, &o, eta, steps, &state)
}

/// Deletes vertices until no edges remain. In each nontrivial component a
/// vertex with `η(v) ≥ d(v)` is deleted with `J = ∅`; failing that, the
/// lowest non-cut vertex is deleted, decrementing all neighbours but the
/// highest.
pub(crate) fn reduce_components(
    state: &mut ReductionState<'_>,
    steps: &mut Vec<DeletionStep>,
) -> Result<(), ReductionError> {
    let g = state.graph();
    loop {
        let Some(comp) = components_masked(g, state.alive_mask()).into_iter().find(|c| c.len() > 1) else {
            return Ok(());
        };
        if let Some(&v) = comp.iter().find(|&&v| state.vertex_eta(v) as usize >= state.degree(v)) {
            push_step(state, steps, v, Vec::new())?;
            continue;
        }
        if let Some(&v) = comp.iter().find(|&&v| i64::from(state.vertex_eta(v)) < 1.max(state.degree(v) as i64 - 2)) {
            return Err(ReductionError::Precondition(format!(
                "component of {v} has no vertex with eta >= d, and eta({v}) = {} < max(1, d - 2)",
                state.vertex_eta(v)
            )));
        }
        let cut = articulation_points_masked(g, state.alive_mask());
        let v = *comp.iter().find(|&&v| !cut[v]).expect("a connected graph has a non-cut vertex");
        let mut nbrs: Vec<usize> = state.neighbours(v).into_iter().map(|(u, _)| u).collect();
        nbrs.sort_unstable();
        nbrs.pop();
        push_step(state, steps, v, nbrs)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use crate::index::is_nonsingular;
    use crate::reduction::verify_certificate;

    fn ones(g: &Graph) -> IndexFunction {
        IndexFunction::constant(g, 1, 1)
    }

    #[test]
    fn single_vertex_is_trivial() {
        let g = Graph::empty(1);
        let cert = certify_subcubic(&g, &IndexFunction::from_parts(vec![5], vec![])).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(verify_certificate(&cert).unwrap().base_permanent, 1.into());
    }

    #[test]
    fn triangle_agrees_with_direct_search() {
        let g = complete(3);
        let cert = certify_subcubic(&g, &ones(&g)).unwrap();
        verify_certificate(&cert).unwrap();
        let o = canonical_orientation(&g);
        assert!(is_nonsingular(&ones(&g), &g, &o).unwrap().is_nonsingular());
    }

    #[test]
    fn petersen_certificate_verifies() {
        let g = petersen();
        let cert = certify_subcubic(&g, &ones(&g)).unwrap();
        assert_eq!(cert.steps.len() + cert.base.x.len(), 10);
        assert_eq!(cert.base.witness.total(), 0);
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn second_hypothesis_on_paths_and_cycles() {
        let g = path(5);
        let eta = IndexFunction::from_parts(vec![0, 0, 0, 0, 1], vec![1; 4]);
        verify_certificate(&certify_subcubic(&g, &eta).unwrap()).unwrap();
        let g = cycle(6);
        let mut eta = IndexFunction::constant(&g, 0, 1);
        eta.vertices[3] = 2;
        verify_certificate(&certify_subcubic(&g, &eta).unwrap()).unwrap();
    }

    #[test]
    fn preconditions_enforced() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(certify_subcubic(&g, &ones(&g)), Err(ReductionError::Precondition(_))));
        let g = path(2);
        assert!(matches!(
            certify_subcubic(&g, &IndexFunction::constant(&g, 0, 1)),
            Err(ReductionError::Precondition(_))
        ));
        assert!(certify_subcubic(&g, &IndexFunction::constant(&g, 1, 2)).is_err());
    }
}
