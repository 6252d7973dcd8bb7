use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactla::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut q = Quiver { vertices, arrows: Vec::new() };
        for &(name, s, t) in arrows {
            let source = q.vertex_index(s)?;
            let target = q.vertex_index(t)?;
            q.arrows.push(Arrow { name: name.to_string(), source, target });
        }
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::IllFormedRelation(format!("duplicate vertex name {v}")));
            }
        }
        let mut seen = HashSet::new();
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::UnknownVertex(format!("endpoint of arrow {}", a.name)));
            }
            if !seen.insert(a.name.as_str()) {
                return Err(Error::IllFormedRelation(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Resolves a word given in composition order (rightmost applied first)
    /// into a path.
    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let mut arrows = Vec::with_capacity(names.len());
        for n in names.iter().rev() {
            arrows.push(self.arrow_index(n.as_ref())?);
        }
        self.path_from_arrows(arrows)
    }

    /// Arrows in application order.
    pub fn path_from_arrows(&self, arrows: Vec<usize>) -> Result<Path> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::IllFormedRelation("empty word".to_string()))?;
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::IllFormedRelation(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[1]].name, self.arrows[w[0]].name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: self.arrows[first].source, target: self.arrows[last].target, arrows })
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    /// Composition-order spelling: `e1`, `a`, `c∘a`.
    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        p.arrows.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("∘")
    }
}

/// A path, with arrows listed in the order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }
}

/// Length first, then lexicographic on the arrow word.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of arrow words, each written in composition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<String>)>) -> Self {
        Relation { terms }
    }

    /// A zero relation `w = 0`, e.g. `monomial(&["a", "d"])` for `a∘d`.
    pub fn monomial(word: &[&str]) -> Self {
        Relation {
            terms: vec![(Scalar::from_integer(1.into()), word.iter().map(|s| s.to_string()).collect())],
        }
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.iter().rev().cloned().collect()))
                .collect(),
        }
    }
}
