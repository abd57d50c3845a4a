//! Census scans and probes.

mod common;

use common::census_up_to_entries;
use irgraph::graph6::read_graph6_stream;
use irgraph::harness::{check_theorems, probe_target, scan_census, Caps, CheckId, Verdict, EVIDENCE_WORDING};
use irgraph::{are_isomorphic, build_ir_graph, fixture, FamilySpec, Graph};

fn fam(s: &str) -> Graph {
    FamilySpec::parse(s).unwrap().build().unwrap()
}

#[test]
fn no_violations_up_to_seven() {
    let entries = census_up_to_entries(7);
    let report = scan_census(&entries, &CheckId::ALL, &Caps::default()).report;
    assert_eq!(report.scanned, 1252);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.parse_errors.is_empty());
    // Each check is exercised, not vacuously inapplicable everywhere.
    for c in CheckId::ALL {
        assert!(report.counts[&c].pass > 0, "{c} never applied");
    }
}

#[test]
fn fixtures_pass_every_applicable_check() {
    for name in ["fig1-G", "fig3-G", "fig4-F"] {
        for f in check_theorems(&fixture(name).unwrap(), &Caps::default()) {
            assert_ne!(f.verdict, Verdict::Violation, "{name}: {f:?}");
        }
    }
}

#[test]
fn scan_is_independent_of_worker_count() {
    let entries = census_up_to_entries(6);
    let run = |workers| {
        let caps = Caps {
            workers,
            ..Caps::default()
        };
        scan_census(&entries, &CheckId::ALL, &caps).report.to_json()
    };
    assert_eq!(run(1), run(8));
}

#[test]
fn malformed_line_is_counted_and_skipped() {
    let text = "A_\nBw\nthis is not graph6\nCF\n";
    let entries: Vec<_> = read_graph6_stream(text.as_bytes()).map(Result::unwrap).collect();
    let report = scan_census(&entries, &CheckId::ALL, &Caps::default()).report;
    assert_eq!(report.scanned, 3);
    assert_eq!(report.parse_errors.len(), 1);
    assert_eq!(report.parse_errors[0].line, 3);
    assert_eq!(report.graphs.len(), 3);
}

#[test]
fn non_ir_graph_targets_have_no_sources_up_to_seven() {
    let entries = census_up_to_entries(7);
    let caps = Caps::default();
    for target in ["path3", "path4", "path5", "cycle5", "cycle6", "cycle7", "star2", "star3", "star4", "star5", "star6"] {
        let result = probe_target(&fam(target), &entries, &caps).unwrap();
        assert!(result.matches.is_empty(), "{target}: {:?}", result.matches);
        assert!(result.exhausted, "{target}");
        assert_eq!(result.n_max, Some(7));
        assert_eq!(result.evidence, format!("{EVIDENCE_WORDING} = 7"));
    }
}

#[test]
fn realizable_targets_are_found() {
    let caps = Caps::default();
    let c4 = probe_target(&fam("cycle4"), &census_up_to_entries(4), &caps).unwrap();
    assert!(c4.exhausted);
    let two_k2 = fam("2k2");
    let found: Vec<Graph> = c4
        .matches
        .iter()
        .map(|m| irgraph::parse_graph6(m.graph.as_bytes()).unwrap())
        .collect();
    assert!(found.iter().any(|g| are_isomorphic(g, &two_k2).unwrap()));
    // Every listed match re-verifies.
    for g in &found {
        let h = build_ir_graph(g).unwrap().to_graph().unwrap();
        assert!(are_isomorphic(&h, &fam("cycle4")).unwrap());
    }
    let k3 = probe_target(&fam("k3"), &census_up_to_entries(3), &caps).unwrap();
    assert!(k3
        .matches
        .iter()
        .any(|m| are_isomorphic(&irgraph::parse_graph6(m.graph.as_bytes()).unwrap(), &fam("k3")).unwrap()));
}

#[test]
fn skipped_entries_make_probe_inexhaustive() {
    let entries = census_up_to_entries(4);
    let caps = Caps {
        max_ir_sets: 2,
        ..Caps::default()
    };
    let r = probe_target(&fam("cycle4"), &entries, &caps).unwrap();
    assert!(!r.exhausted);
    assert!(!r.skipped.is_empty());
    assert_eq!(r.scanned, entries.len());
}

#[test]
fn checks_fire_on_a_non_ir_graph() {
    // Slide graph on the singletons of K_{1,3}: the star itself, which is
    // not the IR-graph of anything. Both diameter-2 checks must object.
    let star = fam("star3");
    let nodes = (0..4).map(irgraph::VertexSet::singleton).collect();
    let fake = irgraph::reconfig::IrGraph::from_sets(&star, 1, nodes);
    let findings = irgraph::harness::check_ir_graph(&fake, &CheckId::ALL, &Caps::default());
    let verdict = |c| findings.iter().find(|f| f.check == c).unwrap().verdict;
    assert_eq!(verdict(CheckId::UnivVertex), Verdict::Violation);
    assert_eq!(verdict(CheckId::Diam2C4), Verdict::Violation);
    let v = findings.iter().find(|f| f.check == CheckId::UnivVertex).unwrap();
    assert_eq!(v.witness["ir_graph"]["n"], 4);
}
