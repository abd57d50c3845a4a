//! The labeled fixture graphs reproduce every property they stand for.

use irgraph::irredundance::{external_private_neighbors, is_ir_set, private_neighbors, upper_irredundance};
use irgraph::{are_isomorphic, build_ir_graph, fixture, FamilySpec, Graph, VertexSet};

fn set(g: &Graph, labels: &str) -> VertexSet {
    labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
}

#[test]
fn fig1_private_neighbourhoods() {
    let g = fixture("fig1-G").unwrap();
    let (a, b) = (set(&g, "abc"), set(&g, "bcd"));
    let v = |l: char| g.vertex_by_label(&l.to_string()).unwrap();
    let pn = |d, x| private_neighbors(&g, d, v(x)).unwrap();
    let epn = |d, x| external_private_neighbors(&g, d, v(x)).unwrap();
    assert_eq!(pn(a, 'a'), set(&g, "d"));
    assert_eq!(epn(a, 'a'), set(&g, "d"));
    assert_eq!(pn(a, 'b'), set(&g, "e"));
    assert_eq!(epn(a, 'b'), set(&g, "e"));
    assert_eq!(pn(a, 'c'), set(&g, "f"));
    assert_eq!(epn(a, 'c'), set(&g, "f"));
    assert!(g.is_independent(b));
    assert_eq!(pn(b, 'b'), set(&g, "be"));
    assert_eq!(epn(b, 'b'), set(&g, "e"));
    assert_eq!(pn(b, 'c'), set(&g, "c"));
    assert_eq!(pn(b, 'd'), set(&g, "d"));
    assert!(epn(b, 'c').is_empty() && epn(b, 'd').is_empty());
    assert!(is_ir_set(&g, a) && is_ir_set(&g, b));
    assert_eq!(upper_irredundance(&g).0, 3);
}

#[test]
fn fig3_gives_double_star() {
    let g = fixture("fig3-G").unwrap();
    let h = build_ir_graph(&g).unwrap();
    assert_eq!(h.node_count(), 6);
    let s22 = FamilySpec::parse("doublestar:2,2").unwrap().build().unwrap();
    assert!(are_isomorphic(&h.to_graph().unwrap(), &s22).unwrap());
}

#[test]
fn fig4_gives_double_spider() {
    let g = fixture("fig4-F").unwrap();
    let h = build_ir_graph(&g).unwrap();
    assert_eq!(h.node_count(), 7);
    let sp = FamilySpec::parse("doublespider:1,1;1,2").unwrap().build().unwrap();
    assert!(are_isomorphic(&h.to_graph().unwrap(), &sp).unwrap());
}
