use std::time::Instant;

use virasoro_o::block::BlockDescriptor;
use virasoro_o::homology::{chain_presentation, ext_label, ext_simple_simple, ext_table, ExtKind};
use virasoro_o::oracle::{build_algebra, ext_dims_oracle, ext_table_oracle};
use virasoro_o::verify::chain_block;

/// The closed form for thin blocks without the cap on level distance.
fn uncapped(b: &BlockDescriptor, i: usize, j: usize, n: u64) -> u32 {
    let (li, lj) = (b.weights[i].level, b.weights[j].level);
    let mut count = 0;
    for g in &b.weights {
        let (a, c) = (g.level - li, g.level - lj);
        if a >= 0 && c >= 0 && (a + c) as u64 == n {
            count += 1;
        }
    }
    count
}

#[test]
fn tables_are_schema_identical() {
    for n in 2..=4 {
        let alg = build_algebra(&chain_presentation(n, &[])).unwrap();
        let b = chain_block(n).unwrap();
        let formula = ext_table(&b, ExtKind::SimpleToSimple, &b.weights, 5).unwrap();
        let oracle = ext_table_oracle(&alg, 5);
        assert_eq!(serde_json::to_value(&formula).unwrap(), serde_json::to_value(&oracle).unwrap());
        let labels: Vec<String> = b.weights.iter().map(ext_label).collect();
        assert_eq!(labels, alg.quiver.vertices);
    }
}

#[test]
fn uncapped_thin_formula_overcounts() {
    let alg = build_algebra(&chain_presentation(3, &[])).unwrap();
    let b = chain_block(3).unwrap();
    assert_eq!(ext_dims_oracle(&alg, 0, 2, 4), vec![0, 0, 0, 0, 0]);
    assert_eq!(uncapped(&b, 0, 2, 2), 1);
    assert_eq!(ext_simple_simple(&b, &b.weights[0], &b.weights[2], 2).unwrap(), 0);
}

#[test]
fn scalars_do_not_change_ext() {
    use virasoro_o::arith::rat;
    let plain = build_algebra(&chain_presentation(4, &[])).unwrap();
    let scaled = build_algebra(&chain_presentation(4, &[rat(2, 1), rat(-3, 7), rat(5, 2)])).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(ext_dims_oracle(&plain, i, j, 5), ext_dims_oracle(&scaled, i, j, 5));
        }
    }
}

#[test]
fn six_chain_is_a_fast_associative_algebra() {
    let start = Instant::now();
    let alg = build_algebra(&chain_presentation(6, &[])).unwrap();
    assert!(alg.is_associative());
    assert!(alg.idempotents_ok());
    for i in 0..6 {
        assert!(alg.projective(i).satisfies(&alg.quiver));
    }
    assert!(start.elapsed().as_secs() < 20, "took {:?}", start.elapsed());
}
