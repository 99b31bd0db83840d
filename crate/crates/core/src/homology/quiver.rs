use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::arith::{format_rational, Rational};
use crate::block::BlockDescriptor;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
    /// Downward arrows (towards lower weights) are the α's.
    pub down: bool,
}

/// A linear combination of length-two paths; paths compose left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rational, [usize; 2])>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Known(Vec<Relation>),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Relations,
}

impl QuiverPresentation {
    pub fn relation_text(&self, r: &Relation) -> String {
        let mut s = String::new();
        for (i, (c, [a, b])) in r.terms.iter().enumerate() {
            let word = format!("{}{}", self.arrows[*a].name, self.arrows[*b].name);
            let mag = c.abs();
            if c.is_negative() {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            if !mag.is_one() {
                s.push_str(&format_rational(&mag));
            }
            s.push_str(&word);
        }
        s.push_str("=0");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let relations = match &self.relations {
            Relations::Known(rs) => json!(rs.iter().map(|r| self.relation_text(r)).collect::<Vec<_>>()),
            Relations::Unknown => json!("unknown"),
        };
        json!({
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|a| json!({
                "name": a.name,
                "from": self.vertices[a.from],
                "to": self.vertices[a.to],
            })).collect::<Vec<_>>(),
            "relations": relations,
        })
    }
}

fn chain_relations(n: usize, scalars: &[Rational]) -> Vec<Relation> {
    // arrows 0..n-1 are a_1..a_{n-1}, then b_1..b_{n-1}
    let a = |i: usize| i - 1;
    let b = |i: usize| n - 1 + i - 1;
    let mut rels = Vec::new();
    if n >= 2 {
        rels.push(Relation { terms: vec![(Rational::one(), [a(1), b(1)])] });
    }
    for i in 1..n.saturating_sub(1) {
        let c = scalars.get(i - 1).cloned().unwrap_or_else(Rational::one);
        assert!(!c.is_zero(), "relation scalars must be nonzero");
        rels.push(Relation {
            terms: vec![(Rational::one(), [b(i), a(i)]), (-c, [a(i + 1), b(i + 1)])],
        });
    }
    rels
}

fn chain_arrows(n: usize) -> Vec<Arrow> {
    let mut arrows: Vec<Arrow> = (1..n)
        .map(|i| Arrow { name: format!("a{i}"), from: i - 1, to: i, down: true })
        .collect();
    arrows.extend((1..n).map(|i| Arrow { name: format!("b{i}"), from: i, to: i - 1, down: false }));
    arrows
}

/// The chain quiver on `n` vertices with relations `a1 b1 = 0` and
/// `b_i a_i = c_i a_{i+1} b_{i+1}`; missing scalars default to 1.
pub fn chain_presentation(n: usize, scalars: &[Rational]) -> QuiverPresentation {
    assert!(n >= 1);
    QuiverPresentation {
        vertices: (0..n).map(|i| format!("{i}/plain")).collect(),
        arrows: chain_arrows(n),
        relations: Relations::Known(chain_relations(n, scalars)),
    }
}

/// Doubled Hasse diagram of a finite block; relations only for chains.
pub fn ext1_quiver(b: &BlockDescriptor) -> Result<QuiverPresentation> {
    if !b.is_finite() {
        return Err(Error::WrongShape {
            expected: "a finite poset (truncate or take a coideal first)".into(),
            found: format!("{:?}", b.boundary),
        });
    }
    let vertices: Vec<String> = b.weights.iter().map(ToString::to_string).collect();
    let n = vertices.len();
    if b.is_chain() {
        return Ok(QuiverPresentation {
            vertices,
            arrows: chain_arrows(n),
            relations: Relations::Known(chain_relations(n, &[])),
        });
    }
    let mut edges = Vec::new();
    for (i, x) in b.weights.iter().enumerate() {
        for (j, y) in b.weights.iter().enumerate() {
            if y.level == x.level + 1 {
                edges.push((i, j));
            }
        }
    }
    let mut arrows: Vec<Arrow> = edges
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| Arrow { name: format!("a{}", k + 1), from: i, to: j, down: true })
        .collect();
    arrows.extend(
        edges
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| Arrow { name: format!("b{}", k + 1), from: j, to: i, down: false }),
    );
    Ok(QuiverPresentation {
        vertices,
        arrows,
        relations: Relations::Unknown,
    })
}

/// DOT digraph: α arrows solid, β arrows dashed, relations as comments.
pub fn emit_dot(q: &QuiverPresentation) -> String {
    let mut out = String::from("digraph ext1 {\n");
    match &q.relations {
        Relations::Known(rs) => {
            for r in rs {
                let _ = writeln!(out, "  // {}", q.relation_text(r));
            }
        }
        Relations::Unknown => out.push_str("  // relations unknown\n"),
    }
    for (i, v) in q.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
    }
    for a in &q.arrows {
        let style = if a.down { "solid" } else { "dashed" };
        let _ = writeln!(out, "  v{} -> v{} [label=\"{}\", style={style}];", a.from, a.to, a.name);
    }
    out.push_str("}\n");
    out
}
