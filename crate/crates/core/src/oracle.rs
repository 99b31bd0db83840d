//! Brute-force ground truth for chain blocks: the basic algebra of a quiver
//! with quadratic relations, its projective modules, minimal graded
//! resolutions of the simples, Ext dimensions and Koszulity.
//!
//! Paths compose left to right and modules are right modules, so the
//! indecomposable projective at vertex `i` is spanned by the paths starting at `i`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::json;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::homology::{ExtEntry, ExtKind, ExtTable, QuiverPresentation, Relations};
use crate::linalg::{is_zero, nullspace, rref, zeros, Matrix, Subspace, Vector};

type Sparse = Vec<(usize, Rational)>;

/// `dim P(λ_i) = Σ_{j ≤ i} (n - j + 1)` for a chain of length `n`.
pub fn expected_projective_dims(n: usize) -> Vec<usize> {
    (1..=n).map(|i| (1..=i).map(|j| n - j + 1).sum()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra {
    pub quiver: QuiverPresentation,
    pub basis: Vec<BasisPath>,
    by_degree: Vec<Vec<usize>>,
    /// `times_arrow[x][a]` is `x * a` in basis coordinates.
    times_arrow: Vec<Vec<Sparse>>,
}

/// Longest nonzero path we are prepared to look for before giving up.
fn degree_limit(q: &QuiverPresentation) -> usize {
    4 * q.vertices.len() + 4
}

/// Builds the algebra degree by degree as `A_d = A_{d-1} V / A_{d-2} R`.
///
/// Normal forms come from reduced echelon forms of the relation images, so no
/// rewriting order is involved. For chain quivers the dimension is checked
/// against [`expected_projective_dims`].
pub fn build_algebra(q: &QuiverPresentation) -> Result<FiniteDimAlgebra> {
    let rels = match &q.relations {
        Relations::Known(r) => r.clone(),
        Relations::Unknown => return Err(Error::RelationsUnknown),
    };
    let n = q.vertices.len();
    let mut basis: Vec<BasisPath> = (0..n)
        .map(|v| BasisPath { word: vec![], source: v, target: v, degree: 0 })
        .collect();
    let mut by_degree = vec![(0..n).collect::<Vec<_>>()];
    let mut times_arrow: Vec<Vec<Sparse>> = vec![vec![Vec::new(); q.arrows.len()]; n];

    let limit = degree_limit(q);
    for d in 1.. {
        let prev = &by_degree[d - 1];
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &w in prev {
            for (a, arrow) in q.arrows.iter().enumerate() {
                if basis[w].target == arrow.from {
                    cands.push((w, a));
                }
            }
        }
        let col: BTreeMap<(usize, usize), usize> =
            cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        let mut image: Matrix = Vec::new();
        if d >= 2 {
            for &w in &by_degree[d - 2] {
                for r in &rels {
                    let mut v = zeros(cands.len());
                    for (c, [a, b]) in &r.terms {
                        if basis[w].target != q.arrows[*a].from {
                            continue;
                        }
                        for (u, coef) in &times_arrow[w][*a] {
                            v[col[&(*u, *b)]] += c * coef;
                        }
                    }
                    if !is_zero(&v) {
                        image.push(v);
                    }
                }
            }
        }
        let pivots = rref(&mut image);
        let free: Vec<usize> = (0..cands.len()).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            break;
        }
        if d > limit {
            return Err(Error::InfiniteDimensional(limit));
        }
        let first = basis.len();
        let new_index: BTreeMap<usize, usize> =
            free.iter().enumerate().map(|(k, &c)| (c, first + k)).collect();
        for &c in &free {
            let (w, a) = cands[c];
            let mut word = basis[w].word.clone();
            word.push(a);
            basis.push(BasisPath {
                word,
                source: basis[w].source,
                target: q.arrows[a].to,
                degree: d,
            });
            times_arrow.push(vec![Vec::new(); q.arrows.len()]);
        }
        // x * a for every candidate, written in the new basis
        for (c, &(w, a)) in cands.iter().enumerate() {
            let nf: Sparse = match pivots.iter().position(|&p| p == c) {
                None => vec![(new_index[&c], Rational::one())],
                Some(row) => free
                    .iter()
                    .filter(|f| !image[row][**f].is_zero())
                    .map(|f| (new_index[f], -image[row][*f].clone()))
                    .collect(),
            };
            times_arrow[w][a] = nf;
        }
        by_degree.push((first..basis.len()).collect());
    }

    let alg = FiniteDimAlgebra { quiver: q.clone(), basis, by_degree, times_arrow };
    let expected: usize = expected_projective_dims(n).iter().sum();
    if alg.dim() != expected {
        return Err(Error::DimensionMismatch { expected, found: alg.dim() });
    }
    Ok(alg)
}

fn add_into(acc: &mut BTreeMap<usize, Rational>, v: &[(usize, Rational)], scale: &Rational) {
    for (i, c) in v {
        let e = acc.entry(*i).or_insert_with(Rational::zero);
        *e += scale * c;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

impl FiniteDimAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn word_text(&self, x: usize) -> String {
        let b = &self.basis[x];
        if b.word.is_empty() {
            format!("e{}", b.source + 1)
        } else {
            b.word.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect()
        }
    }

    /// `v * a` for a vector in basis coordinates.
    pub fn right_arrow(&self, v: &[(usize, Rational)], a: usize) -> Sparse {
        let mut acc = BTreeMap::new();
        for (x, c) in v {
            add_into(&mut acc, &self.times_arrow[*x][a], c);
        }
        acc.into_iter().collect()
    }

    /// Product of two basis elements.
    pub fn mul(&self, x: usize, y: usize) -> Sparse {
        let (bx, by) = (&self.basis[x], &self.basis[y]);
        if bx.target != by.source {
            return Vec::new();
        }
        let mut v: Sparse = vec![(x, Rational::one())];
        for &a in &by.word {
            v = self.right_arrow(&v, a);
        }
        v
    }

    fn mul_vec(&self, v: &[(usize, Rational)], y: usize) -> Sparse {
        let mut acc = BTreeMap::new();
        for (x, c) in v {
            add_into(&mut acc, &self.mul(*x, y), c);
        }
        acc.into_iter().collect()
    }

    /// `(xy)z = x(yz)` on every triple of basis elements.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                if self.basis[x].target != self.basis[y].source {
                    continue;
                }
                let xy = self.mul(x, y);
                for z in 0..d {
                    if self.basis[y].target != self.basis[z].source {
                        continue;
                    }
                    let left = self.mul_vec(&xy, z);
                    let yz = self.mul(y, z);
                    let mut right = BTreeMap::new();
                    for (w, c) in &yz {
                        add_into(&mut right, &self.mul(x, *w), c);
                    }
                    if left != right.into_iter().collect::<Sparse>() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `e_i e_j = δ_ij e_i` and every basis path is fixed by its end idempotents.
    pub fn idempotents_ok(&self) -> bool {
        let n = self.vertex_count();
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(i, j);
                let ok = if i == j { p == vec![(i, Rational::one())] } else { p.is_empty() };
                if !ok {
                    return false;
                }
            }
        }
        (0..self.dim()).all(|x| {
            let b = &self.basis[x];
            let me = vec![(x, Rational::one())];
            self.mul(b.source, x) == me && self.mul(x, b.target) == me
        })
    }

    /// Basis paths starting at `i`.
    pub fn projective_basis(&self, i: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.basis[x].source == i).collect()
    }

    pub fn projective_dims(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|i| self.projective_basis(i).len()).collect()
    }

    pub fn projective(&self, i: usize) -> ModuleRep {
        let basis = self.projective_basis(i);
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let mut dims = vec![0; self.vertex_count()];
        for &x in &basis {
            dims[self.basis[x].target] += 1;
        }
        let action = (0..self.quiver.arrows.len())
            .map(|a| {
                let mut m = vec![zeros(basis.len()); basis.len()];
                for (k, &x) in basis.iter().enumerate() {
                    for (y, c) in &self.times_arrow[x][a] {
                        m[pos[y]][k] = c.clone();
                    }
                }
                m
            })
            .collect();
        ModuleRep { dims, action }
    }

    /// `H(t)_ij`: number of basis paths from `i` to `j` in each degree.
    pub fn hilbert_matrix(&self) -> Vec<Vec<Vec<i64>>> {
        let n = self.vertex_count();
        let mut h = vec![vec![vec![0i64; self.max_degree() + 1]; n]; n];
        for b in &self.basis {
            h[b.source][b.target][b.degree] += 1;
        }
        h
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertices": self.quiver.vertices,
            "dim": self.dim(),
            "projective_dims": self.projective_dims(),
            "basis": (0..self.dim()).map(|x| self.word_text(x)).collect::<Vec<_>>(),
            "hilbert": self.hilbert_matrix(),
        })
    }
}

/// A representation: one matrix per arrow, acting on the right.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub dims: Vec<usize>,
    pub action: Vec<Matrix>,
}

impl ModuleRep {
    /// Every relation acts as zero.
    pub fn satisfies(&self, q: &QuiverPresentation) -> bool {
        let Relations::Known(rels) = &q.relations else { return false };
        let size = self.action.first().map_or(0, Vec::len);
        rels.iter().all(|r| {
            let mut total = vec![zeros(size); size];
            for (c, [a, b]) in &r.terms {
                // x -> x a b
                let prod = matmul(&self.action[*b], &self.action[*a]);
                for (row, prow) in total.iter_mut().zip(&prod) {
                    for (t, p) in row.iter_mut().zip(prow) {
                        *t += c * p;
                    }
                }
            }
            total.iter().all(|row| is_zero(row))
        })
    }
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

/// A direct sum of shifted projectives with coordinates laid out summand by summand.
#[derive(Clone, Debug)]
struct FreeModule {
    summands: Vec<(usize, usize)>,
    coords: Vec<(usize, usize)>,
}

impl FreeModule {
    fn new(alg: &FiniteDimAlgebra, summands: Vec<(usize, usize)>) -> Self {
        let mut coords = Vec::new();
        for (s, &(v, _)) in summands.iter().enumerate() {
            coords.extend(alg.projective_basis(v).into_iter().map(|x| (s, x)));
        }
        Self { summands, coords }
    }

    fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `(right vertex, grade)` of a coordinate.
    fn component(&self, alg: &FiniteDimAlgebra, k: usize) -> (usize, usize) {
        let (s, x) = self.coords[k];
        (alg.basis[x].target, self.summands[s].1 + alg.basis[x].degree)
    }

    fn index(&self, s: usize, x: usize) -> usize {
        self.coords.iter().position(|&c| c == (s, x)).expect("coordinate exists")
    }

    fn times(&self, alg: &FiniteDimAlgebra, v: &[Rational], y: usize) -> Vector {
        let mut out = zeros(self.dim());
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, x) = self.coords[k];
            for (z, coef) in alg.mul(x, y) {
                out[self.index(s, z)] += c * &coef;
            }
        }
        out
    }
}

/// Minimal graded projective resolution `... -> Q_1 -> Q_0 -> S_i`.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    pub simple: usize,
    /// `(vertex, grade shift)` of every summand of each term.
    pub terms: Vec<Vec<(usize, usize)>>,
    /// `differentials[p]` maps `Q_{p+1}` to `Q_p`, stored as a matrix acting on columns.
    pub differentials: Vec<Matrix>,
    /// Whether the kernel vanished within the requested length.
    pub complete: bool,
    degree_zero: Vec<Vec<bool>>,
}

impl GradedResolution {
    pub fn composites_vanish(&self) -> bool {
        self.differentials.windows(2).all(|w| {
            let prod = matmul(&w[0], &w[1]);
            prod.iter().all(|r| is_zero(r))
        })
    }

    /// Every differential lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().enumerate().all(|(p, d)| {
            d.iter()
                .zip(&self.degree_zero[p])
                .all(|(row, &top)| !top || is_zero(row))
        })
    }

    pub fn is_linear(&self) -> bool {
        self.terms
            .iter()
            .enumerate()
            .all(|(p, t)| t.iter().all(|&(_, g)| g == p))
    }
}

pub fn minimal_resolution(alg: &FiniteDimAlgebra, i: usize, length: usize) -> GradedResolution {
    let mut terms = vec![vec![(i, 0)]];
    let mut q = FreeModule::new(alg, terms[0].clone());
    let mut degree_zero = vec![flags(alg, &q)];
    // kernel of Q_0 -> S_i is the radical
    let mut kernel: Vec<Vector> = (0..q.dim())
        .filter(|&k| alg.basis[q.coords[k].1].degree > 0)
        .map(|k| unit(q.dim(), k))
        .collect();
    let mut differentials = Vec::new();
    let mut complete = kernel.is_empty();

    for _p in 0..length {
        if kernel.is_empty() {
            complete = true;
            break;
        }
        let gens = top_generators(alg, &q, &kernel);
        let next = FreeModule::new(alg, gens.iter().map(|(v, g, _)| (*v, *g)).collect());
        // column for coordinate (s, x) of the next term is gen_s * x
        let mut d = vec![zeros(next.dim()); q.dim()];
        for (col, &(s, x)) in next.coords.iter().enumerate() {
            let img = q.times(alg, &gens[s].2, x);
            for (row, val) in img.into_iter().enumerate() {
                d[row][col] = val;
            }
        }
        kernel = homogeneous_kernel(alg, &next, &d);
        differentials.push(d);
        degree_zero.push(flags(alg, &next));
        terms.push(next.summands.clone());
        q = next;
    }
    if kernel.is_empty() {
        complete = true;
    }
    GradedResolution { simple: i, terms, differentials, complete, degree_zero }
}

fn flags(alg: &FiniteDimAlgebra, q: &FreeModule) -> Vec<bool> {
    q.coords.iter().map(|&(_, x)| alg.basis[x].degree == 0).collect()
}

fn unit(n: usize, k: usize) -> Vector {
    let mut v = zeros(n);
    v[k] = Rational::one();
    v
}

fn component_of(alg: &FiniteDimAlgebra, q: &FreeModule, v: &[Rational]) -> (usize, usize) {
    let k = v.iter().position(|c| !c.is_zero()).expect("nonzero vector");
    q.component(alg, k)
}

/// Generators of `K` modulo `K J`, one per basis vector of the quotient, as `(vertex, grade, vector)`.
fn top_generators(alg: &FiniteDimAlgebra, q: &FreeModule, kernel: &[Vector]) -> Vec<(usize, usize, Vector)> {
    let arrows: Vec<usize> = (0..alg.dim()).filter(|&x| alg.basis[x].degree == 1).collect();
    let mut by_comp: BTreeMap<(usize, usize), Vec<Vector>> = BTreeMap::new();
    for v in kernel {
        by_comp.entry(component_of(alg, q, v)).or_default().push(v.clone());
    }
    let mut radical: BTreeMap<(usize, usize), Vec<Vector>> = BTreeMap::new();
    for v in kernel {
        for &a in &arrows {
            let w = q.times(alg, v, a);
            if !is_zero(&w) {
                radical.entry(component_of(alg, q, &w)).or_default().push(w);
            }
        }
    }
    let mut gens = Vec::new();
    for ((vertex, grade), vs) in by_comp {
        let mut span = Subspace::spanned_by(q.dim(), radical.remove(&(vertex, grade)).unwrap_or_default());
        for v in vs {
            if span.insert(v.clone()) {
                gens.push((vertex, grade, v));
            }
        }
    }
    gens
}

/// Kernel of `d` split into `(vertex, grade)` components.
fn homogeneous_kernel(alg: &FiniteDimAlgebra, q: &FreeModule, d: &Matrix) -> Vec<Vector> {
    let mut comps: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for k in 0..q.dim() {
        comps.entry(q.component(alg, k)).or_default().push(k);
    }
    let mut out = Vec::new();
    for cols in comps.values() {
        let sub: Matrix = d.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        for v in nullspace(&sub, cols.len()) {
            let mut full = zeros(q.dim());
            for (&c, x) in cols.iter().zip(v) {
                full[c] = x;
            }
            out.push(full);
        }
    }
    out
}

/// `dim Ext^p(S_i, S_j)` for `p = 0..=up_to`.
pub fn ext_dims_oracle(alg: &FiniteDimAlgebra, i: usize, j: usize, up_to: usize) -> Vec<usize> {
    let res = minimal_resolution(alg, i, up_to);
    (0..=up_to)
        .map(|p| res.terms.get(p).map_or(0, |t| t.iter().filter(|&&(v, _)| v == j).count()))
        .collect()
}

/// Every simple has a linear minimal resolution through homological degree `up_to`.
pub fn koszul_check(alg: &FiniteDimAlgebra, up_to: usize) -> bool {
    (0..alg.vertex_count()).all(|i| minimal_resolution(alg, i, up_to).is_linear())
}

type PolyMatrix = Vec<Vec<Vec<i64>>>;

/// `E(t) H(-t) = I` modulo `t^{up_to + 1}`.
pub fn hilbert_koszul_identity(alg: &FiniteDimAlgebra, up_to: usize) -> bool {
    let (e, h) = hilbert_pair(alg, up_to);
    let n = alg.vertex_count();
    for i in 0..n {
        for j in 0..n {
            let mut poly = vec![0i64; up_to + 1];
            for k in 0..n {
                for (p, ep) in e[i][k].iter().enumerate() {
                    for (d, hd) in h[k][j].iter().enumerate() {
                        if p + d <= up_to {
                            let sign = if d % 2 == 0 { 1 } else { -1 };
                            poly[p + d] += ep * hd * sign;
                        }
                    }
                }
            }
            let mut want = vec![0i64; up_to + 1];
            if i == j {
                want[0] = 1;
            }
            if poly != want {
                return false;
            }
        }
    }
    true
}

/// `(E(t), H(t))` truncated at `t^up_to`.
pub fn hilbert_pair(alg: &FiniteDimAlgebra, up_to: usize) -> (PolyMatrix, PolyMatrix) {
    let n = alg.vertex_count();
    let mut h = alg.hilbert_matrix();
    for row in h.iter_mut() {
        for p in row.iter_mut() {
            p.resize(up_to + 1, 0);
        }
    }
    let e = (0..n)
        .map(|i| {
            let res = minimal_resolution(alg, i, up_to);
            (0..n)
                .map(|j| {
                    (0..=up_to)
                        .map(|p| res.terms.get(p).map_or(0, |t| t.iter().filter(|&&(v, _)| v == j).count() as i64))
                        .collect()
                })
                .collect()
        })
        .collect();
    (e, h)
}

/// The oracle's Ext table in the same schema as the formula tables.
pub fn ext_table_oracle(alg: &FiniteDimAlgebra, up_to: usize) -> ExtTable {
    let n = alg.vertex_count();
    let mut entries = Vec::new();
    for i in 0..n {
        let res = minimal_resolution(alg, i, up_to);
        for j in 0..n {
            for p in 0..=up_to {
                let dim = res.terms.get(p).map_or(0, |t| t.iter().filter(|&&(v, _)| v == j).count());
                entries.push(ExtEntry {
                    lambda: alg.quiver.vertices[i].clone(),
                    nu: alg.quiver.vertices[j].clone(),
                    n: p as u64,
                    dim: dim as u32,
                });
            }
        }
    }
    ExtTable { kind: ExtKind::SimpleToSimple, entries }
}
