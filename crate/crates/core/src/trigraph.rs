//! Trigraphs: graphs whose vertex pairs are strongly adjacent, semiadjacent,
//! or strongly antiadjacent, with the semiadjacent pairs forming a matching.
//!
//! Storage is a dense byte matrix for O(1) pair lookups plus sorted
//! adjacency lists (strong and semi neighbours) for neighbourhood scans.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// The value of a vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Adjacency {
    Strong,
    Semi,
    StrongAnti,
}

impl Adjacency {
    /// Numeric code: strong = 1, semi = 0, strong-anti = -1.
    pub fn code(self) -> i8 {
        match self {
            Adjacency::Strong => 1,
            Adjacency::Semi => 0,
            Adjacency::StrongAnti => -1,
        }
    }

    pub fn from_code(code: i8) -> Option<Self> {
        match code {
            1 => Some(Adjacency::Strong),
            0 => Some(Adjacency::Semi),
            -1 => Some(Adjacency::StrongAnti),
            _ => None,
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Adjacency::Strong => Adjacency::StrongAnti,
            Adjacency::Semi => Adjacency::Semi,
            Adjacency::StrongAnti => Adjacency::Strong,
        }
    }

    /// Strong or semi.
    pub fn is_adjacent(self) -> bool {
        self != Adjacency::StrongAnti
    }

    /// Semi or strong-anti.
    pub fn is_antiadjacent(self) -> bool {
        self != Adjacency::Strong
    }

    pub fn is_strong(self) -> bool {
        self == Adjacency::Strong
    }

    pub fn is_strong_anti(self) -> bool {
        self == Adjacency::StrongAnti
    }

    pub fn name(self) -> &'static str {
        match self {
            Adjacency::Strong => "strong",
            Adjacency::Semi => "semi",
            Adjacency::StrongAnti => "strong-anti",
        }
    }
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Degeneracy report for a trigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub claw_free: bool,
    pub quasi_line: bool,
    pub cobipartite: bool,
    pub alpha_ge_3: bool,
    pub degenerate: bool,
    /// Only filled on request; see [`crate::antithicken::is_laminar`].
    pub laminar: Option<bool>,
}

impl Classification {
    /// The reason a degenerate trigraph fails both non-degeneracy routes.
    pub fn failed_criterion(&self) -> Option<&'static str> {
        if !self.degenerate {
            return None;
        }
        Some(if !self.claw_free {
            "not claw-free"
        } else if self.quasi_line {
            "cobipartite with stability number at most 2"
        } else {
            "claw-free but not quasi-line, with stability number at most 2"
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "connected: {}, claw_free: {}, quasi_line: {}, cobipartite: {}, alpha_ge_3: {}, degenerate: {}",
            self.connected, self.claw_free, self.quasi_line, self.cobipartite, self.alpha_ge_3, self.degenerate
        )?;
        if let Some(l) = self.laminar {
            write!(f, ", laminar: {l}")?;
        }
        Ok(())
    }
}

/// An immutable trigraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Trigraph {
    n: usize,
    matrix: Vec<Adjacency>,
    neighbors: Vec<Vec<usize>>,
    semi_mate: Vec<Option<usize>>,
    m: usize,
}

/// Collects pair values and validates them into a [`Trigraph`].
#[derive(Debug, Clone)]
pub struct TrigraphBuilder {
    n: usize,
    values: Vec<Option<Adjacency>>,
}

impl TrigraphBuilder {
    pub fn new(n: usize) -> Self {
        TrigraphBuilder {
            n,
            values: vec![None; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfPair(u));
        }
        Ok(())
    }

    /// Assigns a pair; assigning the same pair twice is an error.
    pub fn set(&mut self, u: usize, v: usize, value: Adjacency) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        if self.values[u * self.n + v].is_some() {
            return Err(Error::DuplicatePair(u.min(v), u.max(v)));
        }
        self.values[u * self.n + v] = Some(value);
        self.values[v * self.n + u] = Some(value);
        Ok(self)
    }

    /// Assigns a pair, overwriting any earlier value.
    pub fn overwrite(&mut self, u: usize, v: usize, value: Adjacency) -> Result<&mut Self> {
        self.check_pair(u, v)?;
        self.values[u * self.n + v] = Some(value);
        self.values[v * self.n + u] = Some(value);
        Ok(self)
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Adjacency> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        self.values[u * self.n + v]
    }

    /// Unassigned pairs become strongly antiadjacent.
    pub fn build(&self) -> Result<Trigraph> {
        let n = self.n;
        let mut matrix = vec![Adjacency::StrongAnti; n * n];
        let mut neighbors = vec![Vec::new(); n];
        let mut semi_mate = vec![None; n];
        let mut m = 0;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let value = self.values[u * n + v].unwrap_or(Adjacency::StrongAnti);
                matrix[u * n + v] = value;
                if value.is_adjacent() {
                    neighbors[u].push(v);
                    if u < v {
                        m += 1;
                    }
                }
                if value == Adjacency::Semi {
                    if semi_mate[u].is_some() {
                        return Err(Error::SemiedgeMatching(u));
                    }
                    semi_mate[u] = Some(v);
                }
            }
        }
        Ok(Trigraph {
            n,
            matrix,
            neighbors,
            semi_mate,
            m,
        })
    }
}

impl Trigraph {
    /// Builds a trigraph by evaluating `f(u, v)` on every pair `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Adjacency) -> Result<Self> {
        let mut b = TrigraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.set(u, v, f(u, v))?;
            }
        }
        b.build()
    }

    /// Builds from a list of non-strong-anti pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, Adjacency)]) -> Result<Self> {
        let mut b = TrigraphBuilder::new(n);
        for &(u, v, a) in pairs {
            b.set(u, v, a)?;
        }
        b.build()
    }

    /// A plain graph: listed edges strong, everything else strong-anti.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = TrigraphBuilder::new(n);
        for &(u, v) in edges {
            b.set(u, v, Adjacency::Strong)?;
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of adjacent (strong or semi) unordered pairs.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn theta(&self, u: usize, v: usize) -> Result<Adjacency> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfPair(u));
        }
        Ok(self.matrix[u * self.n + v])
    }

    /// Unchecked-ish lookup for hot paths. Panics on a self pair.
    #[inline]
    pub fn at(&self, u: usize, v: usize) -> Adjacency {
        assert!(u != v, "self pair ({u}, {u}) has no adjacency value");
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.at(u, v).is_adjacent()
    }

    #[inline]
    pub fn antiadjacent(&self, u: usize, v: usize) -> bool {
        self.at(u, v).is_antiadjacent()
    }

    #[inline]
    pub fn strongly_adjacent(&self, u: usize, v: usize) -> bool {
        self.at(u, v).is_strong()
    }

    #[inline]
    pub fn strongly_antiadjacent(&self, u: usize, v: usize) -> bool {
        self.at(u, v).is_strong_anti()
    }

    /// Strong and semi neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn semi_mate(&self, v: usize) -> Option<usize> {
        self.semi_mate[v]
    }

    /// Every pair `u < v` that is not strongly antiadjacent, ascending.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize, Adjacency)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v, self.matrix[u * self.n + v]))
        })
    }

    /// Strongly adjacent pairs `u < v`, ascending.
    pub fn strong_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacent_pairs()
            .filter(|&(_, _, a)| a.is_strong())
            .map(|(u, v, _)| (u, v))
    }

    pub fn semiedges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).filter_map(move |u| match self.semi_mate[u] {
            Some(v) if v > u => Some((u, v)),
            _ => None,
        })
    }

    pub fn complement(&self) -> Trigraph {
        Trigraph::from_fn(self.n, |u, v| self.at(u, v).negate())
            .expect("negation preserves the semiedge matching")
    }

    /// `v` is strongly adjacent to every member of `set` other than itself.
    pub fn strongly_complete_to(&self, v: usize, set: &[usize]) -> bool {
        set.iter().all(|&w| w == v || self.strongly_adjacent(v, w))
    }

    /// `v` is strongly antiadjacent to every member of `set` other than itself.
    pub fn strongly_anticomplete_to(&self, v: usize, set: &[usize]) -> bool {
        set.iter().all(|&w| w == v || self.strongly_antiadjacent(v, w))
    }

    pub fn sets_strongly_complete(&self, x: &[usize], y: &[usize]) -> bool {
        x.iter().all(|&v| self.strongly_complete_to(v, y))
    }

    pub fn sets_strongly_anticomplete(&self, x: &[usize], y: &[usize]) -> bool {
        x.iter().all(|&v| self.strongly_anticomplete_to(v, y))
    }

    /// Connectivity over adjacent (strong or semi) pairs.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_strong_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.strongly_adjacent(u, v)))
    }

    pub fn is_strong_stable(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.strongly_antiadjacent(u, v)))
    }

    /// No vertex has three pairwise antiadjacent vertices in its neighbourhood.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| self.claw_at(v).is_none())
    }

    /// A stable triple inside the neighbourhood of `v`, if any.
    pub fn claw_at(&self, v: usize) -> Option<[usize; 3]> {
        let nb = &self.neighbors[v];
        for (i, &x) in nb.iter().enumerate() {
            for (j, &y) in nb.iter().enumerate().skip(i + 1) {
                if !self.antiadjacent(x, y) {
                    continue;
                }
                for &z in &nb[j + 1..] {
                    if self.antiadjacent(x, z) && self.antiadjacent(y, z) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Whether `set` can be covered by two strong cliques: the graph of
    /// non-strong pairs inside `set` must be bipartite.
    pub fn is_cobipartite_set(&self, set: &[usize]) -> bool {
        let k = set.len();
        let mut color: Vec<Option<bool>> = vec![None; k];
        for start in 0..k {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let ci = color[i].unwrap();
                for j in 0..k {
                    if i == j || self.strongly_adjacent(set[i], set[j]) {
                        continue;
                    }
                    match color[j] {
                        None => {
                            color[j] = Some(!ci);
                            queue.push_back(j);
                        }
                        Some(cj) if cj == ci => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_cobipartite(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        self.is_cobipartite_set(&all)
    }

    /// Every neighbourhood is cobipartite.
    pub fn is_quasi_line(&self) -> bool {
        (0..self.n).all(|v| self.is_cobipartite_set(&self.neighbors[v]))
    }

    /// Some three vertices are pairwise antiadjacent, i.e. the stability
    /// number is at least 3.
    pub fn has_stable_triple(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.antiadjacent(u, v) {
                    continue;
                }
                for w in v + 1..self.n {
                    if self.antiadjacent(u, w) && self.antiadjacent(v, w) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn classify(&self) -> Classification {
        let connected = self.is_connected();
        let claw_free = self.is_claw_free();
        // quasi-line implies claw-free, so skip the neighbourhood scan otherwise
        let quasi_line = claw_free && self.is_quasi_line();
        let cobipartite = self.is_cobipartite();
        let alpha_ge_3 = self.has_stable_triple();
        let degenerate = !((quasi_line && !cobipartite) || (claw_free && alpha_ge_3));
        Classification {
            connected,
            claw_free,
            quasi_line,
            cobipartite,
            alpha_ge_3,
            degenerate,
            laminar: None,
        }
    }

    /// The subtrigraph induced on `set`, reindexed in ascending order, plus
    /// the map from new indices to original ones.
    pub fn induced(&self, set: &[usize]) -> Result<(Trigraph, Vec<usize>)> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let vs: VertexSet = set.iter().copied().collect();
        if let Some(v) = vs.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let map: Vec<usize> = vs.iter().collect();
        let g = Trigraph::from_fn(map.len(), |i, j| self.at(map[i], map[j]))?;
        Ok((g, map))
    }

    /// Applies a vertex relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Trigraph> {
        if perm.len() != self.n {
            return Err(Error::Arity(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n || inverse[p] != usize::MAX {
                return Err(Error::Arity("not a permutation".into()));
            }
            inverse[p] = v;
        }
        Trigraph::from_fn(self.n, |i, j| self.at(inverse[i], inverse[j]))
    }
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trigraph(n={}", self.n)?;
        for (u, v, a) in self.adjacent_pairs() {
            write!(f, ", {u}-{v}:{a}")?;
        }
        write!(f, ")")
    }
}
