//! Squares, homogeneous sets and homogeneous pairs of strong cliques
//! (HPOSCs), as total classifiers over arbitrary vertex sets.

use std::fmt;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::trigraph::Trigraph;

/// An ordered pair `(A, B)` of disjoint nonempty vertex sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliquePair {
    a: VertexSet,
    b: VertexSet,
}

impl CliquePair {
    pub fn new(a: impl Into<VertexSet>, b: impl Into<VertexSet>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_empty() || b.is_empty() || a.intersects(&b) {
            return Err(Error::MalformedPair);
        }
        Ok(CliquePair { a, b })
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn swapped(&self) -> CliquePair {
        CliquePair {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Orientation with the smallest vertex of `A ∪ B` in `A`.
    pub fn canonical(self) -> CliquePair {
        if self.b.min_vertex() < self.a.min_vertex() {
            self.swapped()
        } else {
            self
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.a.union(&self.b)
    }

    pub fn len(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(A ⊆ A', B ⊆ B')`, orientation-sensitive.
    pub fn is_within(&self, other: &CliquePair) -> bool {
        self.a.is_subset(&other.a) && self.b.is_subset(&other.b)
    }

    /// Contained in `other` in either orientation.
    pub fn is_within_unordered(&self, other: &CliquePair) -> bool {
        self.is_within(other) || self.is_within(&other.swapped())
    }
}

impl fmt::Debug for CliquePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.a, self.b)
    }
}

impl fmt::Display for CliquePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = {} B = {}", self.a, self.b)
    }
}

fn check_vertices(g: &Trigraph, vs: &[usize]) -> Result<()> {
    for &v in vs {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(())
}

/// `v1 v2 v3 v4` is a square: diagonals `v1v3`, `v2v4` antiadjacent and the
/// four cycle pairs adjacent.
pub fn is_square(g: &Trigraph, v: [usize; 4]) -> Result<bool> {
    check_vertices(g, &v)?;
    for i in 0..4 {
        for j in i + 1..4 {
            if v[i] == v[j] {
                return Err(Error::NotDistinct);
            }
        }
    }
    Ok(square_unchecked(g, v))
}

#[inline]
fn square_unchecked(g: &Trigraph, [v1, v2, v3, v4]: [usize; 4]) -> bool {
    g.antiadjacent(v1, v3)
        && g.antiadjacent(v2, v4)
        && g.adjacent(v1, v2)
        && g.adjacent(v2, v3)
        && g.adjacent(v3, v4)
        && g.adjacent(v4, v1)
}

/// The least square inside `set`, written with `v1` its smallest vertex and
/// `v2 < v4`, minimising `(v1, v2, v3, v4)` lexicographically.
pub fn contains_square(g: &Trigraph, set: &[usize]) -> Option<[usize; 4]> {
    let s: VertexSet = set.iter().copied().collect();
    for (i, v1) in s.iter().enumerate() {
        let rest = &s[i + 1..];
        for &v2 in rest {
            if !g.adjacent(v1, v2) {
                continue;
            }
            for &v3 in rest {
                if v3 == v2 || !g.antiadjacent(v1, v3) || !g.adjacent(v2, v3) {
                    continue;
                }
                for &v4 in rest {
                    if v4 <= v2 || v4 == v3 {
                        continue;
                    }
                    if g.antiadjacent(v2, v4) && g.adjacent(v3, v4) && g.adjacent(v4, v1) {
                        return Some([v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    None
}

/// `2 ≤ |X| < n` and every vertex outside `X` is strongly complete or
/// strongly anticomplete to `X`.
pub fn is_homogeneous_set(g: &Trigraph, x: &[usize]) -> bool {
    let xs: VertexSet = x.iter().copied().collect();
    if xs.len() < 2 || xs.len() >= g.n() || xs.max_vertex().is_some_and(|v| v >= g.n()) {
        return false;
    }
    (0..g.n())
        .filter(|&v| !xs.contains(v))
        .all(|v| g.strongly_complete_to(v, &xs) || g.strongly_anticomplete_to(v, &xs))
}

/// Homogeneous pair of strong cliques. `A ∪ B = V(G)` is allowed.
pub fn is_hposc(g: &Trigraph, p: &CliquePair) -> bool {
    let (a, b) = (p.a(), p.b());
    if a.max_vertex().max(b.max_vertex()).is_some_and(|v| v >= g.n()) {
        return false;
    }
    if a.len() == 1 && b.len() == 1 {
        return false;
    }
    if !g.is_strong_clique(a) || !g.is_strong_clique(b) {
        return false;
    }
    (0..g.n())
        .filter(|&v| !a.contains(v) && !b.contains(v))
        .all(|v| {
            (g.strongly_complete_to(v, a) || g.strongly_anticomplete_to(v, a))
                && (g.strongly_complete_to(v, b) || g.strongly_anticomplete_to(v, b))
        })
}

/// Each vertex of `x` is neither strongly complete nor strongly
/// anticomplete to `y`.
fn all_mixed(g: &Trigraph, x: &[usize], y: &[usize]) -> bool {
    x.iter()
        .all(|&v| !g.strongly_complete_to(v, y) && !g.strongly_anticomplete_to(v, y))
}

/// HPOSC whose union contains a square and in which every vertex of either
/// side is mixed to the other side.
pub fn is_deletion_minimal(g: &Trigraph, p: &CliquePair) -> bool {
    is_hposc(g, p)
        && all_mixed(g, p.a(), p.b())
        && all_mixed(g, p.b(), p.a())
        && contains_square(g, &p.vertices()).is_some()
}

/// Every bipartition of `A` (and of `B`) into nonempty parts is crossed by
/// a square inside `A ∪ B`.
///
/// Checked as connectivity of the relation "lie in a common square": since
/// `A` and `B` are strong cliques, every square in `A ∪ B` has exactly two
/// vertices on each side. For `a, a'` in `A`, the squares through both are
/// `a a' y x` with `x ∈ X` (adjacent to `a`, antiadjacent to `a'`) and
/// `y ∈ Y` (the reverse); all of `X ∪ Y` is then joined on the `B` side.
pub fn is_square_connected(g: &Trigraph, p: &CliquePair) -> Result<bool> {
    if !is_hposc(g, p) {
        return Err(Error::NotHposc);
    }
    let (a, b) = (p.a(), p.b());
    let verts = p.vertices();
    let idx = |v: usize| verts.as_slice().binary_search(&v).unwrap();
    let mut dsu = DisjointSets::new(verts.len());
    let mut bs = Vec::new();
    for (i, &x) in a.as_slice().iter().enumerate() {
        for &y in &a[i + 1..] {
            let mut left = None;
            let mut right = None;
            bs.clear();
            for w in b.iter() {
                if g.adjacent(x, w) && g.antiadjacent(y, w) {
                    left.get_or_insert(w);
                    bs.push(w);
                } else if g.adjacent(y, w) && g.antiadjacent(x, w) {
                    right.get_or_insert(w);
                    bs.push(w);
                }
            }
            if left.is_some() && right.is_some() {
                dsu.union(idx(x), idx(y));
                for &w in &bs[1..] {
                    dsu.union(idx(bs[0]), idx(w));
                }
            }
        }
    }
    let ai: Vec<usize> = a.iter().map(idx).collect();
    let bi: Vec<usize> = b.iter().map(idx).collect();
    Ok(dsu.all_joined(&ai) && dsu.all_joined(&bi))
}

/// Some part of one pair meets both parts of the other.
pub fn have_skew_intersection(p1: &CliquePair, p2: &CliquePair) -> bool {
    let splits = |x: &VertexSet, q: &CliquePair| x.intersects(q.a()) && x.intersects(q.b());
    splits(p1.a(), p2) || splits(p1.b(), p2) || splits(p2.a(), p1) || splits(p2.b(), p1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_cliques_matching, gen_named, NamedFixture};

    fn pair(a: &[usize], b: &[usize]) -> CliquePair {
        CliquePair::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn pair_construction() {
        assert_eq!(CliquePair::new(vec![1], vec![1, 2]), Err(Error::MalformedPair));
        assert_eq!(CliquePair::new(vec![], vec![2]), Err(Error::MalformedPair));
        assert_ne!(pair(&[1], &[2]), pair(&[2], &[1]));
        assert_eq!(pair(&[3, 4], &[1]).canonical(), pair(&[1], &[3, 4]));
    }

    #[test]
    fn squares() {
        let c4 = gen_named(NamedFixture::C4S);
        assert!(is_square(&c4, [0, 1, 2, 3]).unwrap());
        assert!(!is_square(&c4, [0, 2, 1, 3]).unwrap());
        assert_eq!(is_square(&c4, [0, 1, 1, 3]), Err(Error::NotDistinct));
        // T8: a1=0 a2=1 b1=2 b2=3
        let t8 = gen_named(NamedFixture::T8);
        assert!(is_square(&t8, [0, 1, 3, 2]).unwrap());
    }

    #[test]
    fn least_square_witness() {
        let all = |n: usize| (0..n).collect::<Vec<_>>();
        assert_eq!(contains_square(&gen_named(NamedFixture::C6S), &all(6)), None);
        assert_eq!(contains_square(&gen_named(NamedFixture::C4S), &all(4)), Some([0, 1, 2, 3]));
        // CM(3): a_i = i, b_i = 3 + i; (a0, a1, b1, b0)
        let cm = gen_cliques_matching(3).unwrap();
        assert_eq!(contains_square(&cm, &all(6)), Some([0, 1, 4, 3]));
    }

    #[test]
    fn homogeneous_sets() {
        let c6 = gen_named(NamedFixture::C6S);
        assert!(!is_homogeneous_set(&c6, &[0, 1]));
        let k4 = Trigraph::from_fn(4, |_, _| crate::Adjacency::Strong).unwrap();
        assert!(is_homogeneous_set(&k4, &[0, 1, 2]));
        assert!(!is_homogeneous_set(&k4, &[0, 1, 2, 3]));
        assert!(!is_homogeneous_set(&k4, &[0]));
    }

    #[test]
    fn hposc_examples() {
        let cm = gen_cliques_matching(3).unwrap();
        assert!(is_hposc(&cm, &pair(&[0, 1], &[3, 4])));
        let c6 = gen_named(NamedFixture::C6S);
        assert!(!is_hposc(&c6, &pair(&[0], &[1])));
        assert!(!is_hposc(&c6, &pair(&[0, 1], &[3, 4])));
    }

    #[test]
    fn deletion_minimal_examples() {
        let cm = gen_cliques_matching(3).unwrap();
        assert!(is_deletion_minimal(&cm, &pair(&[0, 1], &[3, 4])));
        assert!(is_deletion_minimal(&cm, &pair(&[0, 1, 2], &[3, 4, 5])));
        let dm8 = gen_named(NamedFixture::Dm8);
        assert!(is_deletion_minimal(&dm8, &pair(&[0, 1, 2, 3], &[4, 5, 6, 7])));
    }

    #[test]
    fn square_connected_examples() {
        let cm = gen_cliques_matching(3).unwrap();
        assert!(is_square_connected(&cm, &pair(&[0, 1], &[3, 4])).unwrap());
        assert!(is_square_connected(&cm, &pair(&[0, 1, 2], &[3, 4, 5])).unwrap());
        let dm8 = gen_named(NamedFixture::Dm8);
        assert!(!is_square_connected(&dm8, &pair(&[0, 1, 2, 3], &[4, 5, 6, 7])).unwrap());
        assert!(is_square_connected(&dm8, &pair(&[0, 1], &[4, 5])).unwrap());
        assert!(is_square_connected(&dm8, &pair(&[2, 3], &[6, 7])).unwrap());
        // a square-free HPOSC: two strongly complete cliques
        let k4 = Trigraph::from_fn(4, |_, _| crate::Adjacency::Strong).unwrap();
        assert!(!is_square_connected(&k4, &pair(&[0, 1], &[2, 3])).unwrap());
        let c6 = gen_named(NamedFixture::C6S);
        assert_eq!(is_square_connected(&c6, &pair(&[0], &[1])), Err(Error::NotHposc));
    }

    #[test]
    fn skew_intersection() {
        assert!(have_skew_intersection(&pair(&[1, 2], &[3, 4]), &pair(&[2, 3], &[5, 6])));
        assert!(!have_skew_intersection(&pair(&[1, 2], &[3, 4]), &pair(&[1, 5], &[3, 6])));
        assert!(!have_skew_intersection(&pair(&[1, 2], &[3, 4]), &pair(&[5], &[6, 7])));
    }
}
