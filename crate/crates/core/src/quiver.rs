//! Quivers, paths and formal linear combinations of paths.
//!
//! Composition is read right to left: in the word `b*a` the path `a` is
//! traversed first. A `Path` stores its arrows in traversal order, so the
//! displayed word is the reverse of the stored sequence.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Self {
        Quiver { vertices, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: &str, src: usize, tgt: usize) -> usize {
        assert!(src < self.vertices.len() && tgt < self.vertices.len());
        self.arrows.push(Arrow { name: name.to_string(), src, tgt });
        self.arrows.len() - 1
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Names must be unique and shared by no vertex and arrow, so that
    /// relation text parses unambiguously.
    pub fn validate(&self) -> Result<()> {
        let mut names: Vec<&str> = self
            .vertices
            .iter()
            .map(|s| s.as_str())
            .chain(self.arrows.iter().map(|a| a.name.as_str()))
            .collect();
        names.sort_unstable();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Other(format!("duplicate name `{}`", w[0])));
            }
        }
        Ok(())
    }
}

/// A path of the quiver; length 0 paths are vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    src: usize,
    tgt: usize,
    /// Arrow indices in traversal order (first applied first).
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { src: vertex, tgt: vertex, arrows: Vec::new() }
    }

    pub fn of_arrow(q: &Quiver, a: usize) -> Self {
        Path { src: q.arrows()[a].src, tgt: q.arrows()[a].tgt, arrows: vec![a] }
    }

    /// Build from arrows in traversal order, checking concatenation.
    pub fn from_traversal(q: &Quiver, arrows: &[usize]) -> Option<Self> {
        let first = *arrows.first()?;
        let mut tgt = q.arrows()[first].src;
        for &a in arrows {
            if q.arrows()[a].src != tgt {
                return None;
            }
            tgt = q.arrows()[a].tgt;
        }
        Some(Path { src: q.arrows()[first].src, tgt, arrows: arrows.to_vec() })
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows_in_order(&self) -> &[usize] {
        &self.arrows
    }

    /// The product `self * rhs`, i.e. "first `rhs`, then `self`".
    pub fn compose(&self, rhs: &Path) -> Option<Path> {
        if rhs.tgt != self.src {
            return None;
        }
        let mut arrows = rhs.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { src: rhs.src, tgt: self.tgt, arrows })
    }

    /// Extend by one more arrow applied after this path.
    pub fn then(&self, q: &Quiver, a: usize) -> Option<Path> {
        if q.arrows()[a].src != self.tgt {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path { src: self.src, tgt: q.arrows()[a].tgt, arrows })
    }

    /// Word form `b*a` (latest arrow first); vertices print as their name.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return q.vertices()[self.src].clone();
        }
        self.arrows
            .iter()
            .rev()
            .map(|a| q.arrows()[*a].name.clone())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// All paths up to `max_length`, grouped by length.
///
/// Order within a group: trivial paths by vertex index, longer paths
/// lexicographically by traversal sequence of arrow indices.
pub fn enumerate_paths(q: &Quiver, max_length: usize) -> Vec<Vec<Path>> {
    let mut by_len: Vec<Vec<Path>> = Vec::with_capacity(max_length + 1);
    by_len.push((0..q.vertex_count()).map(Path::trivial).collect());
    for len in 1..=max_length {
        let mut next: Vec<Path> = Vec::new();
        for p in &by_len[len - 1] {
            for a in 0..q.arrows().len() {
                if let Some(ext) = p.then(q, a) {
                    next.push(ext);
                }
            }
        }
        next.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        by_len.push(next);
    }
    by_len
}

/// A finite linear combination of paths sharing one source and one target.
#[derive(Clone, Debug, PartialEq)]
pub struct PathLinComb {
    pub terms: Vec<(Path, Scalar)>,
}

impl PathLinComb {
    pub fn new(field: &Field, mut terms: Vec<(Path, Scalar)>) -> Result<Self> {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Path, Scalar)> = Vec::new();
        for (p, c) in terms {
            match merged.last_mut() {
                Some((q, acc)) if *q == p => *acc = field.add(acc, &c),
                _ => merged.push((p, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        let comb = PathLinComb { terms: merged };
        comb.check_homogeneous()?;
        Ok(comb)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn src(&self) -> Option<usize> {
        self.terms.first().map(|(p, _)| p.src())
    }

    pub fn tgt(&self) -> Option<usize> {
        self.terms.first().map(|(p, _)| p.tgt())
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(p, _)| p.len()).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(p, _)| p.len()).max().unwrap_or(0)
    }

    fn check_homogeneous(&self) -> Result<()> {
        if let Some((first, _)) = self.terms.first() {
            for (p, _) in &self.terms {
                if p.src() != first.src() || p.tgt() != first.tgt() {
                    return Err(Error::GeneratorInhomogeneous(format!(
                        "{} terms mix sources or targets",
                        self.terms.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn display(&self, q: &Quiver, field: &Field) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = c.signed_string(field);
            if k == 0 {
                if negative {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push(' ');
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.name, self.src, self.tgt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Quiver {
        // 1 --a--> 2 --b--> 3,  1 --c--> 3
        let mut q = Quiver::new(vec!["1".into(), "2".into(), "3".into()]);
        q.add_arrow("a", 0, 1);
        q.add_arrow("b", 1, 2);
        q.add_arrow("c", 0, 2);
        q
    }

    #[test]
    fn single_vertex_no_arrows() {
        let q = Quiver::new(vec!["1".into()]);
        let groups = enumerate_paths(&q, 5);
        assert_eq!(groups.iter().map(|g| g.len()).sum::<usize>(), 1);
    }

    #[test]
    fn loop_powers() {
        let mut q = Quiver::new(vec!["1".into()]);
        q.add_arrow("x", 0, 0);
        let groups = enumerate_paths(&q, 3);
        let counts: Vec<usize> = groups.iter().map(|g| g.len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 1]);
    }

    #[test]
    fn triangle_paths_up_to_two() {
        let q = triangle();
        let groups = enumerate_paths(&q, 2);
        let total: usize = groups.iter().map(|g| g.len()).sum();
        assert_eq!(total, 7);
        // the single length-2 path is b*a
        assert_eq!(groups[2].len(), 1);
        assert_eq!(groups[2][0].display(&q), "b*a");
    }

    #[test]
    fn compose_respects_right_to_left_reading() {
        let q = triangle();
        let a = Path::of_arrow(&q, 0);
        let b = Path::of_arrow(&q, 1);
        let ba = b.compose(&a).expect("composable");
        assert_eq!(ba.src(), 0);
        assert_eq!(ba.tgt(), 2);
        assert_eq!(ba.display(&q), "b*a");
        assert!(a.compose(&b).is_none());
    }
}
