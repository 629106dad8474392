use tritile::conformance::*;

#[test]
fn static_checks_pass() {
    assert!(check_sequence_values().passed());
    assert!(check_sequences(60).passed());
    let (c, corpus) = check_constructions(30);
    assert!(c.passed(), "{:?}", c.failures);
    let (r, more) = check_recipes();
    assert!(r.passed(), "{:?}", r.failures);
    let (a, shipped) = check_appendix(false);
    assert!(a.passed(), "{:?}", a.failures);
    let g = check_graphs(corpus.iter().chain(&more).chain(&shipped));
    assert!(g.passed(), "{:?}", g.failures);
}
