use crate::block::{BlockDescriptor, BlockKind, BlockWeight, Boundary};
use crate::error::{Error, Result};

fn finite_from(b: &BlockDescriptor, weights: Vec<BlockWeight>) -> BlockDescriptor {
    let kind = if weights.len() == 1 { BlockKind::Singleton } else { b.kind.clone() };
    BlockDescriptor {
        base: b.base.clone(),
        kind,
        boundary: Boundary::Finite,
        weights,
        window: b.window,
        branch_report: b.branch_report.clone(),
        coverage: None,
    }
}

/// The composition factors of `M(top)`: `top` and everything strictly below it,
/// re-levelled so that `top` sits at level 0.
pub fn truncate(b: &BlockDescriptor, top: &BlockWeight) -> Result<BlockDescriptor> {
    if b.boundary == Boundary::HasMax {
        return Err(Error::WrongShape {
            expected: "a block with a minimal element".into(),
            found: "HasMax".into(),
        });
    }
    b.check(top)?;
    let weights = b
        .weights
        .iter()
        .filter(|w| *w == top || w.level > top.level)
        .map(|w| BlockWeight::new(w.offset.clone(), w.level - top.level, w.branch))
        .collect();
    Ok(finite_from(b, weights))
}

/// A level-cutoff coideal of a block with a maximal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coideal {
    pub block: BlockDescriptor,
    pub cutoff: u64,
    /// Whether the cutoff removed any weight of the parent block.
    pub proper: bool,
}

impl Coideal {
    /// `min |l(λ) - l(γ)| - 1` over the weights `γ` left out, or `None` when nothing was left out.
    pub fn stability_bound(&self, lambda: &BlockWeight) -> Result<Option<u64>> {
        self.block.check(lambda)?;
        Ok(self
            .proper
            .then(|| (self.cutoff as i64 - lambda.level) as u64))
    }
}

/// All weights at level at most `cutoff`.
pub fn coideal(b: &BlockDescriptor, cutoff: u64) -> Result<Coideal> {
    if b.boundary == Boundary::HasMin {
        return Err(Error::WrongShape {
            expected: "a block with a maximal element".into(),
            found: "HasMin".into(),
        });
    }
    let cut = cutoff as i64;
    if b.boundary == Boundary::HasMax && cut > b.max_level() {
        return Err(Error::WindowExhausted(format!(
            "window {} does not reach level {cutoff}",
            b.window
        )));
    }
    let weights: Vec<BlockWeight> = b.weights.iter().filter(|w| w.level <= cut).cloned().collect();
    let proper = b.boundary == Boundary::HasMax || weights.len() < b.weights.len();
    Ok(Coideal {
        block: finite_from(b, weights),
        cutoff,
        proper,
    })
}
