//! The acceptance battery, shared by the test suite and the `verify` command.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::block::{classify, enumerate_weights, weight_hc, BlockDescriptor, BlockKind, Boundary, WeightHC};
use crate::characters::{simple_character_bgg, simple_character_recursive, TruncatedSeries};
use crate::error::Result;
use crate::homology::{
    chain_presentation, coideal, ext_simple_simple, ext_verma_simple, nplus_cohomology, pf_identity_check,
    skl_parity_scan,
};
use crate::oracle::{
    build_algebra, expected_projective_dims, ext_dims_oracle, hilbert_koszul_identity, hilbert_pair, koszul_check,
};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub millis: u128,
    pub detail: String,
}

type Check = fn() -> Result<std::result::Result<String, String>>;

const CRITERIA: [(u32, &str, Check); 9] = [
    (1, "pentagonal classification", pentagonal_classification),
    (2, "n+ cohomology", nplus),
    (3, "Euler/pentagonal identity", euler_identity),
    (4, "oracle equivalence", oracle_equivalence),
    (5, "Koszulity", koszulity),
    (6, "parity vanishing", parity_vanishing),
    (7, "PF consistency", pf_consistency),
    (8, "truncation/quotient stability", stability),
    (9, "classification regression", regression),
];

pub fn criterion_names() -> Vec<(u32, &'static str)> {
    CRITERIA.iter().map(|(id, name, _)| (*id, *name)).collect()
}

pub fn run(id: u32) -> Option<CriterionResult> {
    let (id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let (passed, detail) = match check() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult { id: *id, name, passed, millis: start.elapsed().as_millis(), detail })
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run(c.0)).collect()
}

fn trivial(window: u64) -> Result<BlockDescriptor> {
    classify(&weight_hc((0, 1), (0, 1)), window)
}

fn thin_c1(window: u64) -> Result<BlockDescriptor> {
    classify(&weight_hc((1, 1), (1, 1)), window)
}

fn pentagonal(k: i64) -> Vec<BigInt> {
    vec![BigInt::from((3 * k * k - k) / 2), BigInt::from((3 * k * k + k) / 2)]
}

fn level_offsets(b: &BlockDescriptor, level: i64) -> Result<Vec<BigInt>> {
    let mut v: Vec<BigInt> = b.weights_at(level)?.into_iter().map(|w| w.offset).collect();
    v.sort();
    Ok(v)
}

fn fail(msg: String) -> Result<std::result::Result<String, String>> {
    Ok(Err(msg))
}

fn pentagonal_classification() -> Result<std::result::Result<String, String>> {
    let b = trivial(12)?;
    if b.kind != BlockKind::Thick || b.boundary != Boundary::HasMax {
        return fail(format!("got {:?}/{:?}", b.kind, b.boundary));
    }
    for k in 1..=6 {
        let got = level_offsets(&b, k)?;
        if got != pentagonal(k) {
            return fail(format!("level {k}: {got:?}"));
        }
    }
    Ok(Ok("levels 1..6 are {(3k²−k)/2, (3k²+k)/2}".into()))
}

fn nplus() -> Result<std::result::Result<String, String>> {
    let b = trivial(12)?;
    let top = b.extremal().clone();
    for k in 0..=6u64 {
        let mut got: Vec<BigInt> = nplus_cohomology(&b, &top, k)?.into_iter().map(|w| w.offset).collect();
        got.sort();
        let want = if k == 0 { vec![BigInt::from(0)] } else { pentagonal(k as i64) };
        if got != want {
            return fail(format!("H^{k}: {got:?}"));
        }
    }
    let t = thin_c1(16)?;
    for mu in enumerate_weights(&t, 6)? {
        for k in 2..=8 {
            if !nplus_cohomology(&t, &mu, k)?.is_empty() {
                return fail(format!("thin H^{k} at {mu} is nonzero"));
            }
        }
    }
    Ok(Ok("trivial block H^k matches pentagonal weights for k ≤ 6; thin H^k = 0 for k > 1".into()))
}

fn euler_identity() -> Result<std::result::Result<String, String>> {
    let b = trivial(16)?;
    let top = b.extremal().clone();
    let bgg = simple_character_bgg(&b, &top, 50)?;
    if bgg != TruncatedSeries::one(50) {
        return fail(format!("BGG character {bgg}"));
    }
    let rec = simple_character_recursive(&b, &top, 50)?;
    if rec != bgg {
        return fail(format!("recursive character {rec}"));
    }
    Ok(Ok("ch L(top) = 1 + O(q^51) both ways".into()))
}

/// An `n`-chain as a finite coideal of the thin `c = 1` block.
pub fn chain_block(n: usize) -> Result<BlockDescriptor> {
    let window = 2 * n as u64 + 8;
    Ok(coideal(&thin_c1(window)?, n as u64 - 1)?.block)
}

fn oracle_equivalence() -> Result<std::result::Result<String, String>> {
    for n in 2..=6usize {
        let alg = build_algebra(&chain_presentation(n, &[]))?;
        let total: usize = expected_projective_dims(n).iter().sum();
        let closed: usize = (1..=n).map(|i| (1..=i).map(|j| n - j + 1).sum::<usize>()).sum();
        if alg.dim() != total || alg.dim() != closed {
            return fail(format!("chain {n}: dim {}", alg.dim()));
        }
        let b = chain_block(n)?;
        for (i, li) in b.weights.iter().enumerate() {
            for (j, lj) in b.weights.iter().enumerate() {
                let oracle = ext_dims_oracle(&alg, i, j, 6);
                for (p, &o) in oracle.iter().enumerate() {
                    let f = ext_simple_simple(&b, li, lj, p as u64)? as usize;
                    if f != o {
                        return fail(format!("chain {n}: Ext^{p}(L{}, L{}) oracle {o}, formula {f}", i + 1, j + 1));
                    }
                }
            }
        }
    }
    let three = build_algebra(&chain_presentation(3, &[]))?.dim();
    Ok(Ok(format!("chains 2..6 agree through degree 6; dim A(3) = {three}")))
}

fn koszulity() -> Result<std::result::Result<String, String>> {
    for n in 1..=5usize {
        let alg = build_algebra(&chain_presentation(n, &[]))?;
        if !koszul_check(&alg, 6) || !hilbert_koszul_identity(&alg, 6) {
            return fail(format!("chain {n} is not Koszul through degree 6"));
        }
    }
    let two = build_algebra(&chain_presentation(2, &[]))?;
    let (e, h) = hilbert_pair(&two, 2);
    let want_h = vec![vec![vec![1, 0, 0], vec![0, 1, 0]], vec![vec![0, 1, 0], vec![1, 0, 1]]];
    let want_e = vec![vec![vec![1, 0, 1], vec![0, 1, 0]], vec![vec![0, 1, 0], vec![1, 0, 0]]];
    if h != want_h || e != want_e {
        return fail(format!("2-chain H = {h:?}, E = {e:?}"));
    }
    Ok(Ok("chains 1..5 Koszul, E(t)H(-t) = I through degree 6".into()))
}

fn test_blocks() -> Result<Vec<(&'static str, BlockDescriptor)>> {
    Ok(vec![
        ("singleton", classify(&weight_hc((1, 7), (2, 1)), 8)?),
        ("pair", classify(&weight_hc((0, 1), (2, 1)), 8)?),
        ("thin c=1", thin_c1(32)?),
        ("thick c=0", trivial(32)?),
    ])
}

fn parity_vanishing() -> Result<std::result::Result<String, String>> {
    let mut checked = 0;
    for (name, b) in test_blocks()? {
        let ws = enumerate_weights(&b, 6)?;
        for l in &ws {
            for v in &ws {
                for n in 0..=8u64 {
                    if (n as i64 - (l.level - v.level)).rem_euclid(2) == 1 {
                        checked += 1;
                        if ext_simple_simple(&b, l, v, n)? != 0 {
                            return fail(format!("{name}: Ext^{n}({l}, {v}) ≠ 0"));
                        }
                    }
                }
            }
        }
        let report = skl_parity_scan(&b, 6, 8)?;
        if !report.ok() {
            return fail(format!("{name}: {} parity certificates failed", report.failures.len()));
        }
        checked += report.checked;
    }
    Ok(Ok(format!("{checked} wrong-parity positions vanish")))
}

fn pf_consistency() -> Result<std::result::Result<String, String>> {
    let mut count = 0;
    for (name, b) in test_blocks()?.into_iter().skip(2) {
        let ws = enumerate_weights(&b, 5)?;
        for l in &ws {
            for v in &ws {
                for n in 0..=8 {
                    count += 1;
                    if !pf_identity_check(&b, l, v, n)? {
                        return fail(format!("{name}: ({l}, {v}, {n})"));
                    }
                }
            }
        }
    }
    Ok(Ok(format!("{count} triples satisfy the identity")))
}

fn stability() -> Result<std::result::Result<String, String>> {
    let mut compared = 0;
    for n in 2..=5usize {
        let small = build_algebra(&chain_presentation(n, &[]))?;
        let large = build_algebra(&chain_presentation(n + 2, &[]))?;
        let c = coideal(&thin_c1(32)?, n as u64 - 1)?;
        for (i, li) in c.block.weights.iter().enumerate() {
            for (j, lj) in c.block.weights.iter().enumerate() {
                let bound = c.stability_bound(li)?.unwrap().min(c.stability_bound(lj)?.unwrap()) as usize;
                let a = ext_dims_oracle(&small, i, j, bound);
                let b = ext_dims_oracle(&large, i, j, bound);
                compared += a.len();
                if a != b {
                    return fail(format!("chains {n}/{}: Ext(L{}, L{}) {a:?} vs {b:?}", n + 2, i + 1, j + 1));
                }
            }
        }
    }
    let b = trivial(16)?;
    for (lo, hi) in [(2u64, 4u64), (3, 6), (4, 7)] {
        let (s, t) = (coideal(&b, lo)?, coideal(&b, hi)?);
        for l in &s.block.weights {
            for v in &s.block.weights {
                let bound = s.stability_bound(l)?.unwrap().min(s.stability_bound(v)?.unwrap());
                for i in 0..=bound {
                    compared += 1;
                    if ext_verma_simple(&s.block, l, v, i)? != ext_verma_simple(&t.block, l, v, i)? {
                        return fail(format!("cutoffs {lo}/{hi}: Ext^{i}(M({l}), L({v}))"));
                    }
                }
            }
        }
    }
    Ok(Ok(format!("{compared} values stable within the bound")))
}

fn same_listing(small: &BlockDescriptor, large: &BlockDescriptor) -> bool {
    small.kind == large.kind
        && small.boundary == large.boundary
        && small.weights.iter().all(|w| large.contains(w))
}

fn regression() -> Result<std::result::Result<String, String>> {
    let c1 = classify(&weight_hc((1, 1), (1, 1)), 8)?;
    let squares = c1.weights.iter().all(|w| {
        let h = BigInt::from(1) + &w.offset;
        h == BigInt::from(w.level * w.level)
    });
    if c1.kind != BlockKind::Thin || c1.boundary != Boundary::HasMax || !squares || c1.weights.len() < 7 {
        return fail(format!("c=1: {:?}", c1.to_json()));
    }
    let c25 = classify(&weight_hc((0, 1), (25, 1)), 8)?;
    let ok = c25.weights.iter().all(|w| w.offset == BigInt::from(1 - w.level * w.level));
    if c25.kind != BlockKind::Thin || c25.boundary != Boundary::HasMin || !ok {
        return fail(format!("c=25: {:?}", c25.to_json()));
    }
    if classify(&weight_hc((0, 1), (2, 1)), 8)?.kind != BlockKind::Pair(BigInt::from(1)) {
        return fail("(0, 2) is not Pair(1)".into());
    }
    if classify(&weight_hc((1, 7), (2, 1)), 8)?.kind != BlockKind::Singleton {
        return fail("(1/7, 2) is not a singleton".into());
    }
    let battery: Vec<WeightHC> = vec![
        weight_hc((0, 1), (0, 1)),
        weight_hc((1, 1), (1, 1)),
        weight_hc((0, 1), (25, 1)),
        weight_hc((0, 1), (2, 1)),
        weight_hc((1, 7), (2, 1)),
        weight_hc((1, 2), (1, 2)),
        weight_hc((1, 1), (26, 1)),
    ];
    for w in &battery {
        if !same_listing(&classify(w, 8)?, &classify(w, 32)?) {
            return fail(format!("{w} changes between windows 8 and 32"));
        }
    }
    Ok(Ok(format!("regression inputs classified; {} blocks window-stable", battery.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_block_shape() {
        let b = chain_block(4).unwrap();
        assert_eq!(b.weights.len(), 4);
        assert!(b.is_thin() && b.is_finite());
        assert_eq!(expected_projective_dims(4).len(), 4);
    }
}
