//! Growth of the smallest square-connected homogeneous pair of strong
//! cliques with a given strongly adjacent seed pair in `A`.
//!
//! Every vertex carries a class tag, and the vertices are partitioned into
//! eight intrusive lists:
//!
//! * `A`, `B`: the pair built so far;
//! * `TildeA` / `TildeB`: outside vertices mixed to `B` / `A`, which are forced
//!   into `A` / `B`;
//! * `NA`, `NB`, `NAB`, `NEmpty`: settled outside vertices, classified by
//!   which of `A`, `B` they are strongly complete to (the rest they are
//!   strongly anticomplete to).
//!
//! Relations are read off per-vertex counters of strong neighbours in `A`
//! and `B` plus a bit recording a semi mate in each side. Adding `v` to `A`
//! only changes the relation to `A` of neighbours of `v` and of vertices
//! that were strongly complete to `A` (classes `NA`, `NAB`, `TildeA`). The
//! latter either are neighbours of `v`, leave their class for good, or abort
//! the run, which bounds the total work by a constant times `m`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::structure::CliquePair;
use crate::trigraph::Trigraph;

/// Why a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    /// A homogeneous pair was produced.
    Found,
    /// The seed lies in no square with two strongly adjacent partners.
    NoSeedSquare,
    /// `vertex` would have to join a side it is not strongly complete to.
    Conflict { vertex: usize },
}

/// Result of a traced run: the pair, the stop reason and the number of
/// elementary steps (adjacency entries, list entries and queue pops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchposcRun {
    pub pair: Option<CliquePair>,
    pub stop: Stop,
    pub steps: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    InA = 0,
    InB = 1,
    TildeA = 2,
    TildeB = 3,
    NA = 4,
    NB = 5,
    NAB = 6,
    NEmpty = 7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Complete,
    Anticomplete,
    Mixed,
}

const NIL: usize = usize::MAX;

/// Eight doubly linked lists threaded through per-vertex `prev`/`next`.
struct ClassLists {
    head: [usize; 8],
    prev: Vec<usize>,
    next: Vec<usize>,
    class: Vec<Class>,
}

impl ClassLists {
    fn new(n: usize) -> Self {
        ClassLists {
            head: [NIL; 8],
            prev: vec![NIL; n],
            next: vec![NIL; n],
            class: vec![Class::NEmpty; n],
        }
    }

    fn push(&mut self, v: usize, c: Class) {
        let h = self.head[c as usize];
        self.prev[v] = NIL;
        self.next[v] = h;
        if h != NIL {
            self.prev[h] = v;
        }
        self.head[c as usize] = v;
        self.class[v] = c;
    }

    fn unlink(&mut self, v: usize) {
        let (p, nx) = (self.prev[v], self.next[v]);
        if p != NIL {
            self.next[p] = nx;
        } else {
            self.head[self.class[v] as usize] = nx;
        }
        if nx != NIL {
            self.prev[nx] = p;
        }
    }

    fn relocate(&mut self, v: usize, c: Class) {
        self.unlink(v);
        self.push(v, c);
    }

    fn members(&self, c: Class) -> impl Iterator<Item = usize> + '_ {
        let mut cur = self.head[c as usize];
        std::iter::from_fn(move || {
            if cur == NIL {
                None
            } else {
                let v = cur;
                cur = self.next[v];
                Some(v)
            }
        })
    }
}

struct Conflict(usize);

/// Per-call working state.
struct SchposcState<'g> {
    g: &'g Trigraph,
    lists: ClassLists,
    strong_in: [Vec<usize>; 2],
    semi_in: [Vec<bool>; 2],
    size: [usize; 2],
    queue: [BinaryHeap<Reverse<usize>>; 2],
    steps: u64,
}

impl<'g> SchposcState<'g> {
    fn new(g: &'g Trigraph) -> Self {
        let n = g.n();
        SchposcState {
            g,
            lists: ClassLists::new(n),
            strong_in: [vec![0; n], vec![0; n]],
            semi_in: [vec![false; n], vec![false; n]],
            size: [0, 0],
            queue: [BinaryHeap::new(), BinaryHeap::new()],
            steps: n as u64,
        }
    }

    fn relation(&self, v: usize, side: Side) -> Rel {
        let s = side as usize;
        let strong = self.strong_in[s][v];
        if strong == self.size[s] {
            Rel::Complete
        } else if strong == 0 && !self.semi_in[s][v] {
            Rel::Anticomplete
        } else {
            Rel::Mixed
        }
    }

    /// Where an outside vertex belongs given its current relations.
    fn target(&self, v: usize) -> std::result::Result<Class, Conflict> {
        use Rel::*;
        match (self.relation(v, Side::A), self.relation(v, Side::B)) {
            (Complete, Complete) => Ok(Class::NAB),
            (Complete, Anticomplete) => Ok(Class::NA),
            (Anticomplete, Complete) => Ok(Class::NB),
            (Anticomplete, Anticomplete) => Ok(Class::NEmpty),
            (Mixed, Complete) => Ok(Class::TildeB),
            (Complete, Mixed) => Ok(Class::TildeA),
            // mixed to one side and not strongly complete to the other
            _ => Err(Conflict(v)),
        }
    }

    fn reclassify(&mut self, v: usize) -> std::result::Result<(), Conflict> {
        let c = self.target(v)?;
        if c != self.lists.class[v] {
            self.lists.relocate(v, c);
            match c {
                Class::TildeA => self.queue[0].push(Reverse(v)),
                Class::TildeB => self.queue[1].push(Reverse(v)),
                _ => {}
            }
        }
        Ok(())
    }

    fn is_outside(&self, v: usize) -> bool {
        !matches!(self.lists.class[v], Class::InA | Class::InB)
    }

    fn count_neighbors_into(&mut self, v: usize, side: Side) {
        let g = self.g;
        let s = side as usize;
        for &w in g.neighbors(v) {
            self.steps += 1;
            if g.strongly_adjacent(v, w) {
                self.strong_in[s][w] += 1;
            } else {
                self.semi_in[s][w] = true;
            }
        }
    }

    fn seed(&mut self, a: [usize; 2], b: [usize; 2]) -> std::result::Result<(), Conflict> {
        let n = self.g.n();
        for v in (0..n).rev() {
            self.lists.push(v, Class::NEmpty);
        }
        for v in a {
            self.lists.relocate(v, Class::InA);
            self.count_neighbors_into(v, Side::A);
        }
        for v in b {
            self.lists.relocate(v, Class::InB);
            self.count_neighbors_into(v, Side::B);
        }
        self.size = [2, 2];
        for v in 0..n {
            if self.is_outside(v) {
                self.reclassify(v)?;
            }
        }
        Ok(())
    }

    fn insert(&mut self, v: usize, side: Side) -> std::result::Result<(), Conflict> {
        let g = self.g;
        debug_assert_eq!(self.relation(v, side), Rel::Complete);
        let (class, watched) = match side {
            Side::A => (Class::InA, [Class::NA, Class::NAB, Class::TildeA]),
            Side::B => (Class::InB, [Class::NB, Class::NAB, Class::TildeB]),
        };
        self.lists.relocate(v, class);
        self.size[side as usize] += 1;
        self.count_neighbors_into(v, side);
        for &w in g.neighbors(v) {
            self.steps += 1;
            if self.is_outside(w) {
                self.reclassify(w)?;
            }
        }
        // Vertices that were strongly complete to this side.
        for c in watched {
            let mut cur = self.lists.head[c as usize];
            while cur != NIL {
                let nx = self.lists.next[cur];
                self.steps += 1;
                self.reclassify(cur)?;
                cur = nx;
            }
        }
        Ok(())
    }

    fn grow(&mut self) -> std::result::Result<(), Conflict> {
        loop {
            // mixed-to-A vertices join B before mixed-to-B vertices join A
            let next = if let Some(Reverse(v)) = self.queue[1].pop() {
                (v, Side::B)
            } else if let Some(Reverse(v)) = self.queue[0].pop() {
                (v, Side::A)
            } else {
                return Ok(());
            };
            self.steps += 1;
            self.insert(next.0, next.1)?;
        }
    }

    fn side(&self, c: Class) -> VertexSet {
        self.lists.members(c).collect()
    }

    #[cfg(debug_assertions)]
    fn check_tags(&self, a: &VertexSet, b: &VertexSet) {
        let g = self.g;
        let rel = |v: usize, s: &VertexSet| {
            if g.strongly_complete_to(v, s) {
                Rel::Complete
            } else if g.strongly_anticomplete_to(v, s) {
                Rel::Anticomplete
            } else {
                Rel::Mixed
            }
        };
        for v in 0..g.n() {
            if self.is_outside(v) {
                assert_eq!(self.relation(v, Side::A), rel(v, a), "tag of {v} vs A");
                assert_eq!(self.relation(v, Side::B), rel(v, b), "tag of {v} vs B");
            }
        }
    }
}

fn check_seed(g: &Trigraph, a0: usize, a1: usize) -> Result<()> {
    if !g.theta(a0, a1)?.is_strong() {
        return Err(Error::NotStronglyAdjacent(a0, a1));
    }
    Ok(())
}

fn seed_square_counted(g: &Trigraph, a0: usize, a1: usize, steps: &mut u64) -> Option<(usize, usize)> {
    let mut partner = vec![false; g.n()];
    for &y in g.neighbors(a1) {
        *steps += 1;
        if y != a0 && g.antiadjacent(y, a0) {
            partner[y] = true;
        }
    }
    for &x in g.neighbors(a0) {
        *steps += 1;
        if x == a1 || !g.antiadjacent(x, a1) {
            continue;
        }
        for &y in g.neighbors(x) {
            *steps += 1;
            if partner[y] && g.strongly_adjacent(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Least `(b0, b1)` (by `b0`, then `b1`) with `b0 b1` strongly adjacent and
/// `a0 a1 b1 b0` a square.
pub fn find_seed_square(g: &Trigraph, a0: usize, a1: usize) -> Result<Option<(usize, usize)>> {
    check_seed(g, a0, a1)?;
    Ok(seed_square_counted(g, a0, a1, &mut 0))
}

/// The smallest homogeneous pair of strong cliques with `a0, a1 ∈ A`, when
/// `a0 a1` lies in a square; `None` otherwise. The result is
/// square-connected.
pub fn schposc(g: &Trigraph, a0: usize, a1: usize) -> Result<Option<CliquePair>> {
    Ok(schposc_traced(g, a0, a1)?.pair)
}

/// [`schposc`] with a step count and stop reason.
pub fn schposc_traced(g: &Trigraph, a0: usize, a1: usize) -> Result<SchposcRun> {
    check_seed(g, a0, a1)?;
    let mut steps = 0;
    let Some((b0, b1)) = seed_square_counted(g, a0, a1, &mut steps) else {
        return Ok(SchposcRun {
            pair: None,
            stop: Stop::NoSeedSquare,
            steps,
        });
    };
    let mut state = SchposcState::new(g);
    state.steps += steps;
    let outcome = state.seed([a0, a1], [b0, b1]).and_then(|_| state.grow());
    let steps = state.steps;
    match outcome {
        Err(Conflict(vertex)) => Ok(SchposcRun {
            pair: None,
            stop: Stop::Conflict { vertex },
            steps,
        }),
        Ok(()) => {
            let (a, b) = (state.side(Class::InA), state.side(Class::InB));
            #[cfg(debug_assertions)]
            state.check_tags(&a, &b);
            Ok(SchposcRun {
                pair: Some(CliquePair::new(a, b).expect("seed sides are disjoint and nonempty")),
                stop: Stop::Found,
                steps,
            })
        }
    }
}
