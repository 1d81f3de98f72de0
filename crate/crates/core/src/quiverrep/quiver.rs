use std::cmp::Ordering;
use std::collections::VecDeque;

use super::QuiverError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path given by its arrow indices, read from `start` to `end`.
/// Trivial paths have no arrows and `start == end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Self { start: v, end: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    /// `self` followed by `other`; requires `self.end == other.start`.
    pub fn concat(&self, other: &Path) -> Path {
        assert_eq!(self.end, other.start, "paths do not compose");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path { start: self.start, end: other.end, arrows }
    }

    /// The same arrows read backwards, a path in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { start: self.end, end: self.start, arrows }
    }
}

/// A finite acyclic quiver. Vertices are `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    name: String,
    vertex_count: usize,
    arrows: Vec<Arrow>,
    /// `paths[i][j]`: all paths from `i` to `j`, sorted by (length, arrow names).
    paths: Vec<Vec<Vec<Path>>>,
}

impl Quiver {
    pub fn new(name: impl Into<String>, vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        if vertex_count == 0 {
            return Err(QuiverError::NoVertices);
        }
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(QuiverError::VertexOutOfRange { arrow: a.name.clone() });
            }
        }
        if !is_acyclic(vertex_count, &arrows) {
            return Err(QuiverError::Cyclic);
        }
        let mut q = Self { name: name.into(), vertex_count, arrows, paths: Vec::new() };
        q.paths = q.enumerate_paths();
        Ok(q)
    }

    /// Convenience constructor from `(name, source, target)` triples.
    pub fn from_triples(name: &str, vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, QuiverError> {
        let arrows = arrows
            .iter()
            .map(|&(n, s, t)| Arrow { name: n.to_string(), source: s, target: t })
            .collect();
        Self::new(name, vertex_count, arrows)
    }

    /// The Kronecker quiver `0 ⇉ 1` with arrows `a`, `b`.
    pub fn kronecker() -> Self {
        Self::from_triples("kronecker", 2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
    }

    /// Extended Dynkin quiver of type Ã(3,1): a long path `0 → 1 → 2 → 3`
    /// and a single arrow `0 → 3`. Its one exceptional tube has rank 3.
    pub fn a31() -> Self {
        Self::from_triples("a31", 4, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 3), ("d", 0, 3)]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed (names kept).
    pub fn opposite(&self) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Self::new(name, self.vertex_count, arrows).expect("opposite of an acyclic quiver is acyclic")
    }

    /// Structural equality, ignoring the display name.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.arrows == other.arrows
    }

    /// Sorted paths from `i` to `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[Path] {
        &self.paths[i][j]
    }

    /// Position of `p` in `paths_between(p.start, p.end)`.
    pub fn path_index(&self, p: &Path) -> usize {
        self.paths[p.start][p.end]
            .iter()
            .position(|q| q.arrows == p.arrows)
            .expect("path belongs to this quiver")
    }

    fn compare_paths(&self, a: &Path, b: &Path) -> Ordering {
        a.len()
            .cmp(&b.len())
            .then_with(|| {
                let na = a.arrows.iter().map(|&i| self.arrows[i].name.as_str());
                let nb = b.arrows.iter().map(|&i| self.arrows[i].name.as_str());
                na.cmp(nb)
            })
            .then_with(|| a.arrows.cmp(&b.arrows))
    }

    fn enumerate_paths(&self) -> Vec<Vec<Vec<Path>>> {
        let n = self.vertex_count;
        let mut out = vec![vec![Vec::new(); n]; n];
        for (start, row) in out.iter_mut().enumerate() {
            let mut queue = VecDeque::from([Path::trivial(start)]);
            while let Some(p) = queue.pop_front() {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        queue.push_back(Path { start, end: a.target, arrows });
                    }
                }
                row[p.end].push(p);
            }
        }
        for row in &mut out {
            for cell in row.iter_mut() {
                cell.sort_by(|a, b| self.compare_paths(a, b));
            }
        }
        out
    }

    /// Euler form matrix `E` with `B(d, e) = d^T E e`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count;
        let mut e = vec![vec![0i64; n]; n];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in &self.arrows {
            e[a.source][a.target] -= 1;
        }
        e
    }
}

fn is_acyclic(n: usize, arrows: &[Arrow]) -> bool {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                ready.push(a.target);
            }
        }
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles_and_loops() {
        assert_eq!(
            Quiver::from_triples("c", 2, &[("a", 0, 1), ("b", 1, 0)]),
            Err(QuiverError::Cyclic)
        );
        assert_eq!(Quiver::from_triples("l", 1, &[("a", 0, 0)]), Err(QuiverError::Cyclic));
        assert!(matches!(
            Quiver::from_triples("r", 2, &[("a", 0, 2)]),
            Err(QuiverError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn kronecker_paths() {
        let q = Quiver::kronecker();
        assert_eq!(q.paths_between(0, 1).len(), 2);
        assert_eq!(q.paths_between(0, 0).len(), 1);
        assert_eq!(q.paths_between(1, 0).len(), 0);
        let names: Vec<usize> = q.paths_between(0, 1).iter().map(|p| p.arrows[0]).collect();
        assert_eq!(names, vec![0, 1]);
    }

    #[test]
    fn a31_paths() {
        let q = Quiver::a31();
        // two paths from the source to the sink: d (length 1) then abc (length 3)
        let p = q.paths_between(0, 3);
        assert_eq!(p.len(), 2);
        assert_eq!(p[0].arrows, vec![3]);
        assert_eq!(p[1].arrows, vec![0, 1, 2]);
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = Quiver::a31();
        let qq = q.opposite().opposite();
        assert_eq!(q, qq);
        assert!(!q.same_shape(&q.opposite()));
    }
}
