//! Truncated `q`-series characters, graded relative to the highest weight.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::block::{BlockDescriptor, BlockWeight, Boundary};
use crate::error::{Error, Result};
use crate::homology::{bgg_resolution, radical_layer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub cutoff: usize,
    /// Coefficients of `q^0 .. q^cutoff`.
    pub coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        Self { cutoff, coeffs: vec![BigInt::zero(); cutoff + 1] }
    }

    pub fn one(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    /// `self += sign * q^shift * other`, dropping terms past the cutoff.
    pub fn add_shifted(&mut self, other: &TruncatedSeries, shift: usize, sign: i64) {
        for (k, c) in other.coeffs.iter().enumerate() {
            let Some(slot) = self.coeffs.get_mut(k + shift) else { break };
            *slot += c * sign;
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self, base: &BigInt) -> serde_json::Value {
        json!({
            "base": base.to_string(),
            "cutoff": self.cutoff,
            "coeffs": self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{} + O(q^{})", parts.join(" "), self.cutoff + 1)
    }
}

/// `Π (1 - q^n)^{-1}`, i.e. partition numbers `p(0..=cutoff)`.
pub fn verma_character(cutoff: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(cutoff);
    for part in 1..=cutoff {
        for k in part..=cutoff {
            let prev = s.coeffs[k - part].clone();
            s.coeffs[k] += prev;
        }
    }
    s
}

/// Rejects cutoffs that reach weights the classification window did not list.
fn check_window(b: &BlockDescriptor, lambda: &BlockWeight, cutoff: usize) -> Result<()> {
    b.check(lambda)?;
    if b.boundary != Boundary::HasMax {
        return Ok(());
    }
    let bound = b.coverage.as_ref().expect("infinite blocks carry a coverage bound");
    let reach = &lambda.offset - &b.extremal().offset + BigInt::from(cutoff);
    if &reach >= bound {
        return Err(Error::WindowExhausted(format!(
            "cutoff {cutoff} below {lambda} needs a larger window than {}",
            b.window
        )));
    }
    Ok(())
}

fn shift_of(lambda: &BlockWeight, nu: &BlockWeight) -> Option<usize> {
    (&nu.offset - &lambda.offset).to_usize()
}

/// Euler characteristic of the BGG resolution of `L(λ)`.
pub fn simple_character_bgg(b: &BlockDescriptor, lambda: &BlockWeight, cutoff: usize) -> Result<TruncatedSeries> {
    check_window(b, lambda, cutoff)?;
    let verma = verma_character(cutoff);
    let mut out = TruncatedSeries::zero(cutoff);
    // terms grow in offset, so stop once a whole term lies past the cutoff
    let mut length = 1u64;
    loop {
        let res = bgg_resolution(b, lambda, length)?;
        let done = res.terms.len() as u64 <= length
            || res.terms.last().unwrap().iter().all(|w| shift_of(lambda, w).is_none_or(|s| s > cutoff));
        if done {
            for (i, term) in res.terms.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for nu in term {
                    if let Some(s) = shift_of(lambda, nu) {
                        out.add_shifted(&verma, s, sign);
                    }
                }
            }
            return Ok(out);
        }
        length += 1;
    }
}

/// `ch L(λ) = ch M(λ) - Σ_{i>0} Σ_{ν in layer i} ch L(ν)`, solved from the bottom of the window up.
pub fn simple_character_recursive(b: &BlockDescriptor, lambda: &BlockWeight, cutoff: usize) -> Result<TruncatedSeries> {
    check_window(b, lambda, cutoff)?;
    let mut below: Vec<BlockWeight> = Vec::new();
    for i in 1u64.. {
        let layer = radical_layer(b, lambda, i)?;
        if layer.is_empty() {
            break;
        }
        let inside: Vec<BlockWeight> = layer
            .into_iter()
            .filter(|w| shift_of(lambda, w).is_some_and(|s| s <= cutoff))
            .collect();
        if inside.is_empty() {
            break;
        }
        below.extend(inside);
    }
    // deepest first; every series is graded relative to λ
    below.sort_by(|x, y| y.offset.cmp(&x.offset));
    let verma = verma_character(cutoff);
    let mut known: Vec<(i64, TruncatedSeries)> = Vec::new();
    for nu in below.iter().chain(std::iter::once(lambda)) {
        let mut ch = TruncatedSeries::zero(cutoff);
        ch.add_shifted(&verma, shift_of(lambda, nu).expect("below λ"), 1);
        for (level, lower) in &known {
            if *level > nu.level {
                ch.add_shifted(lower, 0, -1);
            }
        }
        known.push((nu.level, ch));
    }
    Ok(known.pop().expect("λ itself").1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::{classify, weight_hc};

    #[test]
    fn partitions() {
        let v = verma_character(10);
        let p: Vec<i64> = v.coeffs.iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(&p[..7], &[1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(p[10], 42);
    }

    #[test]
    fn pentagonal_identity() {
        let b = classify(&weight_hc((0, 1), (0, 1)), 16).unwrap();
        let top = b.extremal().clone();
        let ch = simple_character_bgg(&b, &top, 50).unwrap();
        assert_eq!(ch, TruncatedSeries::one(50));
        assert_eq!(simple_character_recursive(&b, &top, 30).unwrap(), TruncatedSeries::one(30));
    }

    #[test]
    fn small_blocks() {
        let s = classify(&weight_hc((1, 7), (2, 1)), 8).unwrap();
        assert_eq!(simple_character_bgg(&s, s.extremal(), 12).unwrap(), verma_character(12));

        let p = classify(&weight_hc((0, 1), (2, 1)), 8).unwrap();
        let bottom = p.find(1, crate::block::Branch::Plain).unwrap();
        assert_eq!(simple_character_recursive(&p, &bottom, 12).unwrap(), verma_character(12));

        let t = classify(&weight_hc((1, 1), (1, 1)), 16).unwrap();
        let h0 = t.extremal().clone();
        let ch = simple_character_bgg(&t, &h0, 20).unwrap();
        let mut want = verma_character(20);
        want.add_shifted(&verma_character(20), 1, -1);
        assert_eq!(ch, want);
        assert!(ch.is_nonnegative());
        assert_eq!(simple_character_recursive(&t, &h0, 20).unwrap(), ch);
    }

    #[test]
    fn window_is_enforced() {
        let b = classify(&weight_hc((0, 1), (0, 1)), 8).unwrap();
        assert!(matches!(
            simple_character_bgg(&b, b.extremal(), 100_000),
            Err(Error::WindowExhausted(_))
        ));
    }
}
