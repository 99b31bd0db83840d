//! Block classification from `(h, c)`.
//!
//! A weight's block is read off the integer points of `r + nu*s + beta = 0`.
//! Offsets are always relative to the input `h`; levels are relative to the
//! extremal weight of the block (the top for blocks with a maximal element,
//! the bottom otherwise, where levels above it are negative).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{
    composite_sqrt, format_rational, int, normalize_radical, parse_rational, rat,
    solve_line_integer_points, CompositeNumber, EmbedField, Progression, QuadraticNumber,
    Rational,
};
use crate::error::{Error, Result};

/// Climbing from a deep weight to the extremal one never needs more steps than this.
const MAX_CLIMB: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightHC {
    pub h: Rational,
    pub c: Rational,
}

impl WeightHC {
    pub fn new(h: Rational, c: Rational) -> Self {
        Self { h, c }
    }

    pub fn parse(h: &str, c: &str) -> Result<Self> {
        Ok(Self::new(parse_rational(h)?, parse_rational(c)?))
    }

    /// The same central charge with `h` shifted by an integer offset.
    pub fn shifted(&self, offset: &BigInt) -> Self {
        Self::new(&self.h + Rational::from_integer(offset.clone()), self.c.clone())
    }
}

impl fmt::Display for WeightHC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h={}, c={})", format_rational(&self.h), format_rational(&self.c))
    }
}

/// `r + nu*s + beta = 0` for one choice of the two square-root signs.
///
/// `beta` is `None` when it has degree four over `Q` without lying in a
/// biquadratic field; such a line has no integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeLine {
    pub nu: CompositeNumber,
    pub beta: Option<CompositeNumber>,
    /// Signs of the outer radical and of `beta`.
    pub branch: (i8, i8),
}

/// All sign choices; the principal line (`+`, `+`) comes first.
pub fn build_line(w: &WeightHC) -> Vec<LatticeLine> {
    let mut out: Vec<LatticeLine> = Vec::new();
    for en in [1i8, -1] {
        let nu = nu_branch(&w.c, en);
        for eb in [1i8, -1] {
            let line = line_for(&nu, &w.h, en, eb);
            if !out.iter().any(|l| l.nu == line.nu && l.beta == line.beta) {
                out.push(line);
            }
        }
    }
    out
}

fn nu_branch(c: &Rational, sign: i8) -> QuadraticNumber {
    let radicand = (c - int(1)) * (c - int(25));
    let (t, d) = normalize_radical(&radicand);
    let t = if sign < 0 { -t } else { t };
    QuadraticNumber::new((c - int(13)) / int(12), t / int(12), d)
}

fn line_for(nu: &QuadraticNumber, h: &Rational, nu_sign: i8, beta_sign: i8) -> LatticeLine {
    let one = QuadraticNumber::rational(int(1));
    let nu1 = nu + &one;
    let beta_sq = &(&nu1 * &nu1) - &nu.scale(&(h * int(4)));
    let flip = |x: CompositeNumber| if beta_sign < 0 { -x } else { x };
    let (nu_c, beta_c) = match beta_sq.sqrt_in(nu.d()) {
        Some(b) => (CompositeNumber::from_quadratic(nu), Some(flip((&b).into()))),
        None => match composite_sqrt(&beta_sq) {
            Some((b, field)) => (field.embed(nu), Some(flip(b))),
            None => (EmbedField::Same.embed(nu), None),
        },
    };
    LatticeLine {
        nu: nu_c,
        beta: beta_c,
        branch: (nu_sign, beta_sign),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plain,
    Primed,
}

impl Branch {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plain" | "p" => Some(Branch::Plain),
            "primed" | "q" | "'" => Some(Branch::Primed),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Plain => "plain",
            Branch::Primed => "primed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockWeight {
    pub offset: BigInt,
    pub level: i64,
    pub branch: Branch,
}

impl BlockWeight {
    pub fn new(offset: BigInt, level: i64, branch: Branch) -> Self {
        Self { offset, level, branch }
    }
}

impl fmt::Display for BlockWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.level, self.branch.as_str(), self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Singleton,
    Pair(BigInt),
    Thin,
    Thick,
}

impl BlockKind {
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Singleton => "singleton",
            BlockKind::Pair(_) => "pair",
            BlockKind::Thin => "thin",
            BlockKind::Thick => "thick",
        }
    }
}

/// `Finite` covers singletons, pairs, truncations and coideals, which have both extremes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Boundary {
    HasMax,
    HasMin,
    Finite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub agree: bool,
    pub lines_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDescriptor {
    pub base: WeightHC,
    pub kind: BlockKind,
    pub boundary: Boundary,
    /// Sorted by `(level, branch)`.
    pub weights: Vec<BlockWeight>,
    pub window: u64,
    pub branch_report: BranchReport,
    /// For infinite blocks: every weight whose `|offset - extremal offset|`
    /// is below this bound is listed. `None` when the list is complete.
    pub coverage: Option<BigInt>,
}

impl BlockDescriptor {
    pub fn is_chain(&self) -> bool {
        !matches!(self.kind, BlockKind::Thick)
    }

    pub fn is_thin(&self) -> bool {
        matches!(self.kind, BlockKind::Thin)
    }

    pub fn is_finite(&self) -> bool {
        self.boundary == Boundary::Finite
    }

    pub fn min_level(&self) -> i64 {
        self.weights.iter().map(|w| w.level).min().unwrap_or(0)
    }

    pub fn max_level(&self) -> i64 {
        self.weights.iter().map(|w| w.level).max().unwrap_or(0)
    }

    pub fn contains(&self, w: &BlockWeight) -> bool {
        self.weights.contains(w)
    }

    pub fn check(&self, w: &BlockWeight) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::WeightNotInBlock(w.to_string()))
        }
    }

    /// Weights at a level, empty outside the block, an error past the window.
    pub fn weights_at(&self, level: i64) -> Result<Vec<BlockWeight>> {
        let beyond_window = match self.boundary {
            Boundary::HasMax => level > self.max_level(),
            Boundary::HasMin => level < self.min_level(),
            Boundary::Finite => false,
        };
        if beyond_window {
            return Err(Error::WindowExhausted(format!(
                "level {level} is not populated by window {}",
                self.window
            )));
        }
        Ok(self.weights.iter().filter(|w| w.level == level).cloned().collect())
    }

    pub fn find(&self, level: i64, branch: Branch) -> Result<BlockWeight> {
        self.weights_at(level)?
            .into_iter()
            .find(|w| w.branch == branch)
            .ok_or_else(|| Error::WeightNotInBlock(format!("level {level} {}", branch.as_str())))
    }

    pub fn by_offset(&self, offset: &BigInt) -> Option<&BlockWeight> {
        self.weights.iter().find(|w| &w.offset == offset)
    }

    /// The top weight (level-0 weight for `HasMax` and finite blocks).
    pub fn extremal(&self) -> &BlockWeight {
        self.weights.iter().find(|w| w.level == 0).expect("level 0 is always present")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BlockJson::from(self)).expect("block serializes")
    }
}

#[derive(Serialize)]
struct BaseJson {
    h: String,
    c: String,
}

#[derive(Serialize)]
struct WeightJson {
    offset: String,
    level: i64,
    branch: Branch,
}

#[derive(Serialize)]
struct BlockJson {
    base: BaseJson,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair_offset: Option<String>,
    boundary: Boundary,
    window: u64,
    branches_agree: bool,
    weights: Vec<WeightJson>,
}

impl From<&BlockDescriptor> for BlockJson {
    fn from(b: &BlockDescriptor) -> Self {
        BlockJson {
            base: BaseJson {
                h: format_rational(&b.base.h),
                c: format_rational(&b.base.c),
            },
            kind: b.kind.name(),
            pair_offset: match &b.kind {
                BlockKind::Pair(o) => Some(o.to_string()),
                _ => None,
            },
            boundary: b.boundary,
            window: b.window,
            branches_agree: b.branch_report.agree,
            weights: b
                .weights
                .iter()
                .map(|w| WeightJson {
                    offset: w.offset.to_string(),
                    level: w.level,
                    branch: w.branch,
                })
                .collect(),
        }
    }
}

/// `x ⪯ y`: `x` is a composition factor of the Verma module of `y`.
pub fn precedes(b: &BlockDescriptor, x: &BlockWeight, y: &BlockWeight) -> Result<bool> {
    b.check(x)?;
    b.check(y)?;
    Ok(x == y || x.level > y.level)
}

/// Weights at depth at most `max_level` below (or, for `HasMin`, above) the extremal weight.
pub fn enumerate_weights(b: &BlockDescriptor, max_level: u64) -> Result<Vec<BlockWeight>> {
    let max = max_level as i64;
    let populated = match b.boundary {
        Boundary::HasMax => b.max_level() >= max,
        Boundary::HasMin => -b.min_level() >= max,
        Boundary::Finite => true,
    };
    if !populated {
        return Err(Error::WindowExhausted(format!(
            "window {} does not reach level {max_level}",
            b.window
        )));
    }
    Ok(b.weights.iter().filter(|w| w.level.abs() <= max).cloned().collect())
}

/// Classifies the block of `w`, checking that every sign choice gives the same block.
pub fn classify(w: &WeightHC, window: u64) -> Result<BlockDescriptor> {
    if window == 0 {
        return Err(Error::InvalidWindow);
    }
    let lines = build_line(w);
    let mut results = Vec::with_capacity(lines.len());
    for line in &lines {
        results.push(classify_line(w, line, window)?);
    }
    let mut principal = results[0].clone();
    for other in &results[1..] {
        if !same_block(&principal, other) {
            return Err(Error::BranchDisagreement(format!(
                "{} gives {:?} on branch {:?}",
                w,
                other.kind.name(),
                lines[results.iter().position(|r| r == other).unwrap()].branch
            )));
        }
    }
    principal.branch_report = BranchReport {
        agree: true,
        lines_checked: lines.len(),
    };
    Ok(principal)
}

/// Agreement on kind, boundary and every weight both windows are sure about.
fn same_block(a: &BlockDescriptor, b: &BlockDescriptor) -> bool {
    if a.kind != b.kind || a.boundary != b.boundary {
        return false;
    }
    let bound = match (&a.coverage, &b.coverage) {
        (Some(x), Some(y)) => Some(x.min(y).clone()),
        _ => None,
    };
    let sure = |d: &BlockDescriptor| -> BTreeSet<(BigInt, i64, Branch)> {
        let e = d.extremal().offset.clone();
        d.weights
            .iter()
            .filter(|w| bound.as_ref().is_none_or(|m| (&w.offset - &e).abs() < *m))
            .map(|w| (w.offset.clone(), w.level, w.branch))
            .collect()
    };
    sure(a) == sure(b)
}

fn singleton(w: &WeightHC, window: u64) -> BlockDescriptor {
    BlockDescriptor {
        base: w.clone(),
        kind: BlockKind::Singleton,
        boundary: Boundary::Finite,
        weights: vec![BlockWeight::new(BigInt::zero(), 0, Branch::Plain)],
        window,
        branch_report: BranchReport { agree: true, lines_checked: 1 },
        coverage: None,
    }
}

/// Classification along a single sign choice.
pub fn classify_line(w: &WeightHC, line: &LatticeLine, window: u64) -> Result<BlockDescriptor> {
    let beta = match &line.beta {
        None => return Ok(singleton(w, window)),
        Some(b) => b,
    };
    let pts = solve_line_integer_points(&line.nu, beta, window)?;
    let family = match pts.family {
        None => {
            return Ok(match pts.points.first() {
                None => singleton(w, window),
                Some((r, s)) if (r * s).is_zero() => singleton(w, window),
                Some((r, s)) => pair(w, r * s, window),
            })
        }
        Some(f) => f,
    };
    let sign: i64 = if family.curvature().is_positive() { 1 } else { -1 };
    if family.crosses_axis() {
        Ok(thin(w, &family, sign, window))
    } else {
        thick(w, line.branch.0, &family, sign, window)
    }
}

fn pair(w: &WeightHC, rs: BigInt, window: u64) -> BlockDescriptor {
    let zero = BigInt::zero();
    // the singular vector sits below the weight with the smaller h
    let weights = if rs.is_positive() {
        vec![
            BlockWeight::new(zero, 0, Branch::Plain),
            BlockWeight::new(rs.clone(), 1, Branch::Plain),
        ]
    } else {
        vec![
            BlockWeight::new(rs.clone(), 0, Branch::Plain),
            BlockWeight::new(zero, 1, Branch::Plain),
        ]
    };
    BlockDescriptor {
        base: w.clone(),
        kind: BlockKind::Pair(rs),
        boundary: Boundary::Finite,
        weights,
        window,
        branch_report: BranchReport { agree: true, lines_checked: 1 },
        coverage: None,
    }
}

/// Values `sign * r*s` along the progression for `k` within `window` of the
/// vertex, together with a threshold below which the list is complete.
struct Scan {
    values: Vec<(BigInt, (BigInt, BigInt))>,
    threshold: BigInt,
}

impl Scan {
    fn new(p: &Progression, sign: i64, window: u64) -> Scan {
        let v = p.vertex_floor();
        let w = BigInt::from(window);
        let (lo, hi) = (&v - &w, &v + &w);
        let value = |k: &BigInt| p.product(k) * sign;
        let threshold = value(&(&lo - 1)).min(value(&(&hi + 1)));
        let mut values = Vec::new();
        let mut k = lo;
        while k <= hi {
            let val = value(&k);
            if val < threshold {
                values.push((val, p.point(&k)));
            }
            k += 1;
        }
        values.sort();
        Scan { values, threshold }
    }

    fn distinct(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.values.iter().map(|(v, _)| v.clone()).collect();
        out.dedup();
        out
    }

    fn positive(&self) -> Vec<BigInt> {
        self.distinct().into_iter().filter(|v| v.is_positive()).collect()
    }
}

fn thin(w: &WeightHC, family: &Progression, sign: i64, window: u64) -> BlockDescriptor {
    let scan = Scan::new(family, sign, window);
    let values = scan.distinct();
    let extremal = values[0].clone();
    let weights = values
        .iter()
        .enumerate()
        .map(|(i, v)| BlockWeight::new(v * sign, sign * i as i64, Branch::Plain))
        .collect::<Vec<_>>();
    BlockDescriptor {
        base: w.clone(),
        kind: BlockKind::Thin,
        boundary: if sign > 0 { Boundary::HasMax } else { Boundary::HasMin },
        weights: sorted(weights),
        window,
        branch_report: BranchReport { agree: true, lines_checked: 1 },
        coverage: Some(&scan.threshold - extremal),
    }
}

fn sorted(mut weights: Vec<BlockWeight>) -> Vec<BlockWeight> {
    weights.sort_by_key(|w| (w.level, w.branch));
    weights
}

fn rational_line(w: &WeightHC, nu_sign: i8) -> Result<Progression> {
    let nu = nu_branch(&w.c, nu_sign);
    let line = line_for(&nu, &w.h, nu_sign, 1);
    let beta = line.beta.ok_or_else(|| Error::Unclassifiable(format!("{w} lost its line")))?;
    solve_line_integer_points(&line.nu, &beta, 1)?
        .family
        .ok_or_else(|| Error::Unclassifiable(format!("{w} has no integer family")))
}

/// Smallest value of `sign * r*s` on the whole progression, with its point.
fn extreme_point(p: &Progression, sign: i64) -> (BigInt, (BigInt, BigInt)) {
    let v = p.vertex_floor();
    (-1..=2)
        .map(|d| {
            let k = &v + d;
            (p.product(&k) * sign, p.point(&k))
        })
        .min()
        .unwrap()
}

fn thick(
    w: &WeightHC,
    nu_sign: i8,
    family: &Progression,
    sign: i64,
    window: u64,
) -> Result<BlockDescriptor> {
    // Walk towards the extremal weight: a value below zero names a weight
    // strictly closer to it.
    let mut shift = BigInt::zero();
    let mut line = family.clone();
    let mut steps = 0;
    loop {
        let (m, _) = extreme_point(&line, sign);
        if m.is_positive() {
            break;
        }
        if m.is_zero() || steps == MAX_CLIMB {
            return Err(Error::Unclassifiable(format!("{w}: no extremal weight reached")));
        }
        shift += &m * sign;
        line = rational_line(&w.shifted(&shift), nu_sign)?;
        steps += 1;
    }

    let main = Scan::new(&line, sign, window);
    let p = main.positive();
    let (p1, (r1, s1)) = extreme_point(&line, sign);
    let aux = Progression {
        base: (-r1, s1),
        step: line.step.clone(),
    };
    let aux_scan = Scan::new(&aux, sign, window);
    let q = aux_scan.positive();
    if p.len() < 2 || q.len() < 2 {
        return Err(Error::WindowTooSmall(format!(
            "window {window} does not give a full level of {w}"
        )));
    }

    let mut weights = vec![BlockWeight::new(shift.clone(), 0, Branch::Plain)];
    let mut levels: Vec<[BigInt; 2]> = Vec::new();
    let mut level = 1usize;
    loop {
        let j = (level - 1) / 2;
        let pairv = if level % 2 == 1 {
            (p.get(2 * j), p.get(2 * j + 1)).into_pair()
        } else {
            (q.get(2 * j), q.get(2 * j + 1))
                .into_pair()
                .map(|[a, b]| [&p1 + a, &p1 + b])
        };
        match pairv {
            Some(pr) => levels.push(pr),
            None => break,
        }
        level += 1;
    }

    // Listed distances that did not make it into a complete level bound the coverage.
    let used = 2 * levels.len();
    let (p_used, q_used) = ((used + 2) / 4 * 2, used / 4 * 2);
    let mut coverage = main.threshold.clone().min(&p1 + &aux_scan.threshold);
    if let Some(x) = p.get(p_used) {
        coverage = coverage.min(x.clone());
    }
    if let Some(x) = q.get(q_used) {
        coverage = coverage.min(&p1 + x);
    }
    let levels: Vec<[BigInt; 2]> = levels.into_iter().filter(|[_, b]| *b < coverage).collect();
    if levels.is_empty() {
        return Err(Error::WindowTooSmall(format!(
            "window {window} does not give a full level of {w}"
        )));
    }

    let mut prev = BigInt::zero();
    for (i, [a, b]) in levels.iter().enumerate() {
        if a == b || *a <= prev {
            return Err(Error::Unclassifiable(format!("{w}: level {} is not a diamond", i + 1)));
        }
        prev = b.clone();
        let lvl = sign * (i as i64 + 1);
        weights.push(BlockWeight::new(&shift + a * sign, lvl, Branch::Plain));
        weights.push(BlockWeight::new(&shift + b * sign, lvl, Branch::Primed));
    }

    let base_distance = shift.abs();
    let found = weights.iter().any(|x| x.offset.is_zero());
    if !found {
        return Err(if base_distance < coverage {
            Error::Unclassifiable(format!("{w} is missing from its own block"))
        } else {
            Error::WindowTooSmall(format!("window {window} does not reach {w} from its extremal weight"))
        });
    }

    Ok(BlockDescriptor {
        base: w.clone(),
        kind: BlockKind::Thick,
        boundary: if sign > 0 { Boundary::HasMax } else { Boundary::HasMin },
        weights: sorted(weights),
        window,
        branch_report: BranchReport { agree: true, lines_checked: 1 },
        coverage: Some(coverage),
    })
}

trait IntoPair {
    fn into_pair(self) -> Option<[BigInt; 2]>;
}

impl IntoPair for (Option<&BigInt>, Option<&BigInt>) {
    fn into_pair(self) -> Option<[BigInt; 2]> {
        match self {
            (Some(a), Some(b)) => Some([a.clone(), b.clone()]),
            _ => None,
        }
    }
}

/// Shorthand used by tests and the CLI.
pub fn weight_hc(h: (i64, i64), c: (i64, i64)) -> WeightHC {
    WeightHC::new(rat(h.0, h.1), rat(c.0, c.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn offsets_at(b: &BlockDescriptor, level: i64) -> Vec<i64> {
        let mut v: Vec<i64> = b
            .weights_at(level)
            .unwrap()
            .iter()
            .map(|w| i64::try_from(&w.offset).unwrap())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn principal_lines() {
        let l = &build_line(&weight_hc((0, 1), (0, 1)))[0];
        assert_eq!(l.nu, CompositeNumber::rational(rat(-2, 3)));
        assert_eq!(l.beta, Some(CompositeNumber::rational(rat(1, 3))));
        let l = &build_line(&weight_hc((1, 1), (1, 1)))[0];
        assert_eq!(l.nu, CompositeNumber::rational(int(-1)));
        assert_eq!(l.beta, Some(CompositeNumber::rational(int(2))));
        let l = &build_line(&weight_hc((0, 1), (25, 1)))[0];
        assert_eq!(l.nu, CompositeNumber::rational(int(1)));
        assert_eq!(l.beta, Some(CompositeNumber::rational(int(2))));
    }

    #[test]
    fn trivial_block_levels() {
        let b = classify(&weight_hc((0, 1), (0, 1)), 12).unwrap();
        assert_eq!(b.kind, BlockKind::Thick);
        assert_eq!(b.boundary, Boundary::HasMax);
        let expected = [[0, 0], [1, 2], [5, 7], [12, 15], [22, 26], [35, 40], [51, 57]];
        assert_eq!(offsets_at(&b, 0), vec![0]);
        for (k, pair) in expected.iter().enumerate().skip(1) {
            assert_eq!(offsets_at(&b, k as i64), pair.to_vec(), "level {k}");
        }
        assert!(b.branch_report.agree);
    }

    #[test]
    fn ising_block() {
        let b = classify(&weight_hc((1, 2), (1, 2)), 16).unwrap();
        assert_eq!(b.kind, BlockKind::Thick);
        let expected = [[2, 3], [7, 17], [25, 28], [38, 58], [72, 77]];
        for (k, pair) in expected.iter().enumerate() {
            assert_eq!(offsets_at(&b, k as i64 + 1), pair.to_vec(), "level {}", k + 1);
        }
    }

    #[test]
    fn climbs_to_the_top() {
        // h = 5/2 is the plain level-1 weight of the block above
        let b = classify(&weight_hc((5, 2), (1, 2)), 16).unwrap();
        assert_eq!(b.extremal().offset, BigInt::from(-2));
        assert_eq!(b.by_offset(&BigInt::zero()).unwrap().level, 1);
        let top = classify(&weight_hc((1, 2), (1, 2)), 16).unwrap();
        let rel = |b: &BlockDescriptor| -> Vec<(BigInt, i64)> {
            let e = b.extremal().offset.clone();
            b.weights.iter().take(9).map(|w| (&w.offset - &e, w.level)).collect()
        };
        assert_eq!(rel(&b), rel(&top));
    }

    #[test]
    fn thin_blocks() {
        let b = classify(&weight_hc((1, 1), (1, 1)), 8).unwrap();
        assert_eq!((b.kind.clone(), b.boundary), (BlockKind::Thin, Boundary::HasMax));
        let offs: Vec<i64> = b.weights.iter().map(|w| i64::try_from(&w.offset).unwrap()).collect();
        assert_eq!(&offs[..7], &[-1, 0, 3, 8, 15, 24, 35]);

        let b = classify(&weight_hc((0, 1), (25, 1)), 8).unwrap();
        assert_eq!((b.kind.clone(), b.boundary), (BlockKind::Thin, Boundary::HasMin));
        assert_eq!(b.extremal().offset, BigInt::one());
        assert_eq!(offsets_at(&b, -3), vec![-8]);
    }

    #[test]
    fn finite_blocks() {
        let b = classify(&weight_hc((0, 1), (2, 1)), 8).unwrap();
        assert_eq!(b.kind, BlockKind::Pair(BigInt::one()));
        assert_eq!(b.weights.len(), 2);
        let b = classify(&weight_hc((1, 7), (2, 1)), 8).unwrap();
        assert_eq!(b.kind, BlockKind::Singleton);
    }

    #[test]
    fn mirrored_thick_block() {
        // c = 26, h = 1 is the bottom of a block with the pentagonal shape upside down
        let b = classify(&weight_hc((1, 1), (26, 1)), 12).unwrap();
        assert_eq!((b.kind.clone(), b.boundary), (BlockKind::Thick, Boundary::HasMin));
        assert_eq!(offsets_at(&b, -1), vec![-2, -1]);
        assert_eq!(offsets_at(&b, -2), vec![-7, -5]);
        assert_eq!(offsets_at(&b, -3), vec![-15, -12]);
    }

    #[test]
    fn order_and_enumeration() {
        let b = classify(&weight_hc((0, 1), (0, 1)), 12).unwrap();
        let p3 = b.find(3, Branch::Plain).unwrap();
        let q1 = b.find(1, Branch::Primed).unwrap();
        assert!(precedes(&b, &p3, &q1).unwrap());
        let (p2, q2) = (b.find(2, Branch::Plain).unwrap(), b.find(2, Branch::Primed).unwrap());
        assert!(!precedes(&b, &p2, &q2).unwrap() && !precedes(&b, &q2, &p2).unwrap());
        let ws = enumerate_weights(&b, 2).unwrap();
        let offs: Vec<i64> = ws.iter().map(|w| i64::try_from(&w.offset).unwrap()).collect();
        assert_eq!(offs, vec![0, 1, 2, 5, 7]);
        assert!(matches!(enumerate_weights(&b, 500), Err(Error::WindowExhausted(_))));

        let s = classify(&weight_hc((1, 7), (2, 1)), 8).unwrap();
        assert_eq!(enumerate_weights(&s, 5).unwrap().len(), 1);
        let p = classify(&weight_hc((0, 1), (2, 1)), 8).unwrap();
        assert_eq!(enumerate_weights(&p, 0).unwrap().len(), 1);

        let t = classify(&weight_hc((1, 1), (1, 1)), 8).unwrap();
        let h4 = t.by_offset(&BigInt::from(3)).unwrap();
        let h0 = t.by_offset(&BigInt::from(-1)).unwrap();
        assert!(precedes(&t, h4, h0).unwrap());
        let stranger = BlockWeight::new(BigInt::from(7), 1, Branch::Plain);
        assert!(precedes(&t, &stranger, h0).is_err());
    }

    #[test]
    fn json_shape() {
        let b = classify(&weight_hc((0, 1), (2, 1)), 8).unwrap();
        let text = serde_json::to_string(&b.to_json()).unwrap();
        assert!(text.starts_with(r#"{"base":{"h":"0","c":"2"},"kind":"pair","pair_offset":"1""#), "{text}");
    }
}
