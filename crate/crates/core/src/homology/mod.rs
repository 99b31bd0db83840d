//! Closed-form homological data of a block: radical layers, BGG resolutions,
//! n+-cohomology, Ext dimensions and the parity certificates built from them.

mod quiver;
mod truncation;

pub use quiver::{chain_presentation, emit_dot, ext1_quiver, Arrow, QuiverPresentation, Relation, Relations};
pub use truncation::{coideal, truncate, Coideal};

use serde::Serialize;

use crate::block::{enumerate_weights, precedes, BlockDescriptor, BlockWeight, Branch};
use crate::error::Result;

/// Layer `i` of the radical filtration of `M(λ)`: the weights `i` levels below `λ`.
pub fn radical_layer(b: &BlockDescriptor, lambda: &BlockWeight, i: u64) -> Result<Vec<BlockWeight>> {
    b.check(lambda)?;
    if i == 0 {
        return Ok(vec![lambda.clone()]);
    }
    b.weights_at(lambda.level + i as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedEdge {
    /// The edge maps a summand of `C_{degree+1}` into `C_degree`.
    pub degree: usize,
    pub from: String,
    pub to: String,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BggResolution {
    pub top: BlockWeight,
    pub terms: Vec<Vec<BlockWeight>>,
    pub signs: Vec<SignedEdge>,
}

impl BggResolution {
    fn sign(&self, degree: usize, from: &BlockWeight, to: &BlockWeight) -> i8 {
        self.signs
            .iter()
            .find(|e| e.degree == degree && e.from == from.to_string() && e.to == to.to_string())
            .map_or(0, |e| e.sign)
    }

    /// Every square `x -> {a, a'} -> y` must anticommute, so that `d^2 = 0`.
    /// Returns the number of diamonds checked, or the first bad one.
    pub fn verify_signs(&self) -> std::result::Result<usize, String> {
        let mut count = 0;
        for j in 0..self.terms.len().saturating_sub(2) {
            for x in &self.terms[j] {
                for y in &self.terms[j + 2] {
                    let mids = &self.terms[j + 1];
                    let total: i32 = mids
                        .iter()
                        .map(|a| (self.sign(j, x, a) * self.sign(j + 1, a, y)) as i32)
                        .sum();
                    if total != 0 {
                        return Err(format!("square {x} -> {y} does not cancel"));
                    }
                    if mids.len() == 2 {
                        let prod: i32 = mids
                            .iter()
                            .map(|a| (self.sign(j, x, a) * self.sign(j + 1, a, y)) as i32)
                            .product();
                        if prod != -1 {
                            return Err(format!("diamond {x} -> {y} has sign product {prod}"));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok(count)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "top": self.top.to_string(),
            "terms": self.terms.iter()
                .map(|t| t.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "signs": self.signs,
        })
    }
}

/// BGG resolution of `L(λ)` by Verma modules, up to `max_length` terms past `C_0`.
///
/// Thin blocks stop after `C_1`. Signs: straight edges (same branch) are `+`,
/// cross edges out of `C_j` are `(-1)^j`; every diamond then multiplies to `-1`.
pub fn bgg_resolution(b: &BlockDescriptor, lambda: &BlockWeight, max_length: u64) -> Result<BggResolution> {
    b.check(lambda)?;
    let last = if b.is_thin() { max_length.min(1) } else { max_length };
    let mut terms = vec![vec![lambda.clone()]];
    for j in 1..=last {
        let t = b.weights_at(lambda.level + j as i64)?;
        if t.is_empty() {
            break;
        }
        terms.push(t);
    }
    let mut signs = Vec::new();
    for (j, pair) in terms.windows(2).enumerate() {
        for x in &pair[0] {
            for y in &pair[1] {
                let sign = if x.branch == y.branch || j % 2 == 0 { 1 } else { -1 };
                signs.push(SignedEdge {
                    degree: j,
                    from: x.to_string(),
                    to: y.to_string(),
                    sign,
                });
            }
        }
    }
    Ok(BggResolution {
        top: lambda.clone(),
        terms,
        signs,
    })
}

/// Weights of `H^k(n+, L(μ))`, each with multiplicity one.
pub fn nplus_cohomology(b: &BlockDescriptor, mu: &BlockWeight, k: u64) -> Result<Vec<BlockWeight>> {
    b.check(mu)?;
    if b.is_thin() && k > 1 {
        return Ok(Vec::new());
    }
    radical_layer(b, mu, k)
}

/// `dim Ext^i(M(λ), L(ν))`.
pub fn ext_verma_simple(b: &BlockDescriptor, lambda: &BlockWeight, nu: &BlockWeight, i: u64) -> Result<u32> {
    let below = precedes(b, lambda, nu)?;
    let hit = below && lambda.level - nu.level == i as i64 && !(b.is_thin() && i > 1);
    Ok(hit as u32)
}

/// `dim Ext^n(L(λ), L(ν))`: the number of `γ ⪯ λ, ν` with `2l(γ) - l(λ) - l(ν) = n`.
///
/// In thin blocks `γ` may sit at most one level below each of `λ` and `ν`,
/// which is what the Verma-to-simple groups of a chain allow.
pub fn ext_simple_simple(b: &BlockDescriptor, lambda: &BlockWeight, nu: &BlockWeight, n: u64) -> Result<u32> {
    b.check(lambda)?;
    b.check(nu)?;
    let twice = n as i64 + lambda.level + nu.level;
    if twice % 2 != 0 {
        return Ok(0);
    }
    let lg = twice / 2;
    if lg < lambda.level.max(nu.level) {
        return Ok(0);
    }
    if b.is_thin() && (lg - lambda.level > 1 || lg - nu.level > 1) {
        return Ok(0);
    }
    let below = |g: &BlockWeight, x: &BlockWeight| g == x || g.level > x.level;
    Ok(b.weights_at(lg)?
        .iter()
        .filter(|g| below(g, lambda) && below(g, nu))
        .count() as u32)
}

/// Checks the count of [`ext_simple_simple`] against the sum over `γ` of
/// products of Verma-to-simple dimensions in complementary degrees.
pub fn pf_identity_check(b: &BlockDescriptor, lambda: &BlockWeight, nu: &BlockWeight, n: u64) -> Result<bool> {
    let lhs = ext_simple_simple(b, lambda, nu, n)?;
    let mut rhs = 0;
    let lo = lambda.level.max(nu.level);
    let hi = lambda.level.min(nu.level) + n as i64;
    for level in lo..=hi {
        for g in b.weights_at(level)? {
            for i in 0..=n {
                rhs += ext_verma_simple(b, &g, lambda, i)? * ext_verma_simple(b, &g, nu, n - i)?;
            }
        }
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityFailure {
    pub lambda: String,
    pub mu: String,
    pub i: u64,
    pub n: u64,
    pub sub: u32,
    pub quotient: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub checked: usize,
    pub failures: Vec<ParityFailure>,
}

impl ParityReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Certifies that `Ext^n(rad^i M(λ), L(μ))` vanishes whenever
/// `n ≢ l(μ) - l(λ) + i (mod 2)`, using `0 -> M(λ_i) -> rad^i M(λ) -> L(λ'_i) -> 0`.
pub fn skl_parity_scan(b: &BlockDescriptor, max_level: u64, max_degree: u64) -> Result<ParityReport> {
    let weights = enumerate_weights(b, max_level)?;
    let mut report = ParityReport::default();
    for lambda in &weights {
        for i in 0u64.. {
            let layer = radical_layer(b, lambda, i)?;
            if layer.is_empty() || (lambda.level + i as i64).abs() > max_level as i64 {
                break;
            }
            let sub = layer.iter().find(|w| w.branch == Branch::Plain).unwrap_or(&layer[0]);
            let quotient = if i > 0 { layer.iter().find(|w| *w != sub) } else { None };
            for mu in &weights {
                for n in 0..=max_degree {
                    let expected = mu.level - lambda.level + i as i64;
                    if (n as i64 - expected).rem_euclid(2) == 0 {
                        continue;
                    }
                    report.checked += 1;
                    let s = ext_verma_simple(b, sub, mu, n)?;
                    let q = match quotient {
                        Some(q) => ext_simple_simple(b, q, mu, n)?,
                        None => 0,
                    };
                    if s != 0 || q != 0 {
                        report.failures.push(ParityFailure {
                            lambda: lambda.to_string(),
                            mu: mu.to_string(),
                            i,
                            n,
                            sub: s,
                            quotient: q,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtKind {
    VermaToSimple,
    SimpleToSimple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtEntry {
    pub lambda: String,
    pub nu: String,
    pub n: u64,
    pub dim: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub kind: ExtKind,
    pub entries: Vec<ExtEntry>,
}

/// Label shared by the formula tables and the algebra oracle: `level/branch`.
pub fn ext_label(w: &BlockWeight) -> String {
    format!("{}/{}", w.level, w.branch.as_str())
}

/// All entries for pairs drawn from `weights` and degrees up to `max_degree`.
pub fn ext_table(b: &BlockDescriptor, kind: ExtKind, weights: &[BlockWeight], max_degree: u64) -> Result<ExtTable> {
    let mut entries = Vec::new();
    for lambda in weights {
        for nu in weights {
            for n in 0..=max_degree {
                let dim = match kind {
                    ExtKind::VermaToSimple => ext_verma_simple(b, lambda, nu, n)?,
                    ExtKind::SimpleToSimple => ext_simple_simple(b, lambda, nu, n)?,
                };
                entries.push(ExtEntry {
                    lambda: ext_label(lambda),
                    nu: ext_label(nu),
                    n,
                    dim,
                });
            }
        }
    }
    Ok(ExtTable { kind, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::{classify, weight_hc, BlockDescriptor};
    use num_bigint::BigInt;

    fn trivial() -> BlockDescriptor {
        classify(&weight_hc((0, 1), (0, 1)), 16).unwrap()
    }

    fn c1() -> BlockDescriptor {
        classify(&weight_hc((1, 1), (1, 1)), 16).unwrap()
    }

    fn offsets(ws: &[BlockWeight]) -> Vec<i64> {
        let mut v: Vec<i64> = ws.iter().map(|w| i64::try_from(&w.offset).unwrap()).collect();
        v.sort();
        v
    }

    fn at(b: &BlockDescriptor, offset: i64) -> BlockWeight {
        b.by_offset(&BigInt::from(offset)).unwrap().clone()
    }

    #[test]
    fn radical_layers() {
        let b = trivial();
        let top = b.extremal().clone();
        assert_eq!(offsets(&radical_layer(&b, &top, 2).unwrap()), vec![5, 7]);
        let p = classify(&weight_hc((0, 1), (2, 1)), 8).unwrap();
        let ptop = p.extremal().clone();
        assert_eq!(offsets(&radical_layer(&p, &ptop, 1).unwrap()), vec![1]);
        assert!(radical_layer(&p, &ptop, 2).unwrap().is_empty());
        let t = c1();
        assert_eq!(offsets(&radical_layer(&t, &at(&t, -1), 3).unwrap()), vec![8]);
    }

    #[test]
    fn bgg_terms_and_signs() {
        let t = c1();
        let r = bgg_resolution(&t, &at(&t, -1), 6).unwrap();
        assert_eq!(r.terms.len(), 2);
        assert_eq!(offsets(&r.terms[1]), vec![0]);

        let b = trivial();
        let r = bgg_resolution(&b, b.extremal(), 6).unwrap();
        assert_eq!(offsets(&r.terms[2]), vec![5, 7]);
        assert_eq!(offsets(&r.terms[3]), vec![12, 15]);
        assert_eq!(r.verify_signs(), Ok(2 + 4 * 4));

        let s = classify(&weight_hc((1, 7), (2, 1)), 8).unwrap();
        assert_eq!(bgg_resolution(&s, s.extremal(), 4).unwrap().terms.len(), 1);
    }

    #[test]
    fn signs_on_a_finite_diamond() {
        let b = classify(&weight_hc((1, 1), (26, 1)), 12).unwrap();
        let top = b.find(-3, Branch::Primed).unwrap();
        let r = bgg_resolution(&b, &top, 10).unwrap();
        assert_eq!(r.terms.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 2, 1]);
        assert_eq!(r.verify_signs(), Ok(2 + 2));
    }

    #[test]
    fn cohomology() {
        let b = trivial();
        assert_eq!(offsets(&nplus_cohomology(&b, b.extremal(), 2).unwrap()), vec![5, 7]);
        assert_eq!(nplus_cohomology(&b, b.extremal(), 0).unwrap(), vec![b.extremal().clone()]);
        let t = c1();
        assert!(nplus_cohomology(&t, &at(&t, -1), 2).unwrap().is_empty());
    }

    #[test]
    fn ext_examples() {
        let b = trivial();
        let l3 = b.find(3, Branch::Plain).unwrap();
        let l1 = b.find(1, Branch::Plain).unwrap();
        assert_eq!(ext_verma_simple(&b, &l3, &l1, 2).unwrap(), 1);
        assert_eq!(ext_verma_simple(&b, &l3, &l1, 1).unwrap(), 0);
        let top = b.extremal().clone();
        assert_eq!(ext_simple_simple(&b, &top, &top, 2).unwrap(), 2);
        assert_eq!(ext_simple_simple(&b, &top, &top, 0).unwrap(), 1);

        let t = c1();
        let (h0, h4) = (at(&t, -1), at(&t, 3));
        assert_eq!(ext_verma_simple(&t, &h4, &h0, 2).unwrap(), 0);
        assert_eq!(ext_simple_simple(&t, &h0, &h0, 4).unwrap(), 0);
        assert_eq!(ext_simple_simple(&t, &h0, &h0, 0).unwrap(), 1);
    }

    #[test]
    fn pf_examples() {
        let b = trivial();
        let top = b.extremal().clone();
        assert!(pf_identity_check(&b, &top, &top, 2).unwrap());
        assert!(pf_identity_check(&b, &top, &top, 1).unwrap());
        let t = c1();
        assert!(pf_identity_check(&t, &at(&t, -1), &at(&t, 3), 2).unwrap());
    }

    #[test]
    fn parity_scan_certifies() {
        let b = trivial();
        let r = skl_parity_scan(&b, 4, 6).unwrap();
        assert!(r.ok() && r.checked > 0, "{:?}", r.failures.first());
        let t = c1();
        assert!(skl_parity_scan(&t, 6, 6).unwrap().ok());
    }

    #[test]
    fn window_exhaustion_is_reported() {
        let b = classify(&weight_hc((0, 1), (0, 1)), 8).unwrap();
        let deep = b.max_level() as u64 + 1;
        assert!(matches!(
            radical_layer(&b, b.extremal(), deep),
            Err(crate::Error::WindowExhausted(_))
        ));
    }
}
