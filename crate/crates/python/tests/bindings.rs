use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(body: &str) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "idealgraph_py").unwrap();
        idealgraph_py::register(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("ig", m).unwrap();
        let code = std::ffi::CString::new(body).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.display(py);
            panic!("python assertion failed: {e}");
        }
    });
}

#[test]
fn tables_and_ideals() {
    with_module(
        r#"
t = ig.CayleyTable.right_zero(3)
assert t.order == 3 and t.is_completely_simple()
assert t.rows() == [[0, 1, 2]] * 3
assert len(t.left_ideals()) == 6
assert t.minimal_left_ideals() == [[0], [1], [2]]
back = ig.CayleyTable.parse(t.serialize())
assert back.rows() == t.rows()
assert ig.CayleyTable.cyclic_group(3).left_ideals() == []
try:
    ig.CayleyTable([[1, 1], [0, 0]])
    raise SystemExit("expected a non-associativity error")
except ig.IdealGraphError as e:
    assert "not associative" in str(e)
"#,
    );
}

#[test]
fn graph_invariants_and_symmetry() {
    with_module(
        r#"
g = ig.InclusionGraph.boolean(4)
assert g.vertex_count == 14 and len(g) == 14 and g.edge_count == 36
r = g.invariants()
assert (r["diameter"], r["girth"], r["clique_number"], r["chromatic_number"]) == (3, 3, 3, 3)
assert r["independence_number"] == 6 and r["domination_number"] == 2
only = g.invariants(select=["girth"])
assert "clique_number" not in only
a = g.automorphisms()
assert a["group"]["order"] == 48 and not a["vertex_transitive"]
assert ig.InclusionGraph.boolean(3).automorphisms()["vertex_transitive"]
h = ig.InclusionGraph.from_table(ig.CayleyTable.null(3))
assert h.vertex_count == 3 and len(h.edges()) == 2
assert h.to_dot().startswith("graph In {")
try:
    g.invariants(select=["bogus"])
    raise SystemExit("expected an error")
except ig.IdealGraphError:
    pass
"#,
    );
}

#[test]
fn constructions_and_suite() {
    with_module(
        r#"
assert len(ig.perfect_matching(4)) == 7
assert [ig.label(w) for w in ig.dominating_set(4)] == ["1", "2,3,4"]
assert len(ig.maximum_chain(5)) == 4
assert all(bin(w).count("1") == 2 for w in ig.normalize_independent_set(4, [1, 2, 4, 8]))
assert len(ig.layer_matching(5, 1)) == 5
assert "order-closed-form" in ig.check_ids()
rep = ig.verify(boolean=(2, 4))
assert rep["failed"] == 0 and rep["passed"] > 0
"#,
    );
}
