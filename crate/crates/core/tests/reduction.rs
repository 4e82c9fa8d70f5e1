use laman_core::decomposition::{reduce_step, reduce_to_terminal, StepDetail, TerminalKind};
use laman_core::graph::{is_m_connected, Graph};
use laman_core::rigidity::{enumerate_laman, is_basic, is_laman};

fn three_connected_census(n: usize) -> Vec<Graph> {
    enumerate_laman(n).unwrap().laman_graphs().into_iter().filter(|g| is_m_connected(g, 3)).collect()
}

#[test]
fn every_three_connected_graph_reduces_to_terminals() {
    let mut reduced = 0;
    let mut kinds = std::collections::BTreeMap::new();
    for n in [7, 8] {
        for g in three_connected_census(n) {
            let trace = reduce_to_terminal(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
            assert!(!trace.terminals.is_empty());
            for t in &trace.terminals {
                assert!(matches!(t.kind, TerminalKind::Basic | TerminalKind::Doublet));
            }
            for step in &trace.steps {
                // a contraction that is followed by a block split is the only
                // intermediate allowed to lose 3-connectivity
                let must_be_3c = !matches!(step.detail, StepDetail::Contraction { three_connected: false, .. });
                for out in &step.output_graphs {
                    assert!(is_laman(out));
                    assert!(!must_be_3c || is_m_connected(out, 3));
                    assert!(out.vertex_count() <= step.input_graph.vertex_count());
                }
                *kinds.entry(format!("{:?}", step.kind)).or_insert(0usize) += 1;
            }
            if !is_basic(&g) {
                reduced += 1;
                assert!(!trace.steps.is_empty());
            }
        }
    }
    assert!(reduced > 0);
    eprintln!("reduced {reduced} graphs; step kinds {kinds:?}");
}

#[test]
fn eight_vertex_rounds_shrink() {
    for g in three_connected_census(8).into_iter().filter(|g| !is_basic(g)) {
        let round = reduce_step(&g).unwrap();
        assert!(!round.outputs.is_empty());
        for out in round.outputs {
            assert!(out.vertex_count() <= 7);
            assert!(is_laman(&out) && is_m_connected(&out, 3));
        }
    }
}

#[test]
fn traces_are_deterministic() {
    for g in three_connected_census(8).into_iter().take(20) {
        assert_eq!(reduce_to_terminal(&g).unwrap(), reduce_to_terminal(&g).unwrap());
    }
}
