//! Brute-force reference implementations for small trigraphs.
//!
//! Everything here works from the adjacency values alone, using bitmasks
//! and exhaustive enumeration, and shares no code with the fast paths it
//! is meant to check. Each entry point takes an explicit vertex cap and
//! refuses larger inputs.

use std::fmt;
use std::str::FromStr;

use crate::antithicken::ThickeningMap;
use crate::error::{Error, Result};
use crate::gen::gen_random_trigraph;
use crate::set::VertexSet;
use crate::structure::CliquePair;
use crate::trigraph::{Adjacency, Classification, Trigraph};

pub const HPOSC_CAP: usize = 14;
pub const ANTITHICKENING_CAP: usize = 8;
pub const ISOMORPHISM_CAP: usize = 10;
/// Largest `n` for which [`connected_trigraphs`] enumerates everything.
pub const CATALOG_CAP: usize = 6;

const MASK_BITS: usize = 64;

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap.min(MASK_BITS) {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HposcKind {
    All,
    DeletionMinimal,
    SquareConnected,
}

impl FromStr for HposcKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(HposcKind::All),
            "deletion-minimal" => Ok(HposcKind::DeletionMinimal),
            "square-connected" => Ok(HposcKind::SquareConnected),
            _ => Err(Error::InvalidSpec(format!(
                "unknown kind {s:?} (expected all, deletion-minimal or square-connected)"
            ))),
        }
    }
}

impl fmt::Display for HposcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HposcKind::All => "all",
            HposcKind::DeletionMinimal => "deletion-minimal",
            HposcKind::SquareConnected => "square-connected",
        })
    }
}

fn bit(v: usize) -> u64 {
    1 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn to_set(m: u64) -> VertexSet {
    bits(m).collect()
}

/// Per-vertex neighbourhood masks.
struct Masks {
    n: usize,
    strong: Vec<u64>,
    adj: Vec<u64>,
    anti: Vec<u64>,
    strong_anti: Vec<u64>,
}

impl Masks {
    fn new(g: &Trigraph) -> Self {
        let n = g.n();
        let mut mk = Masks {
            n,
            strong: vec![0; n],
            adj: vec![0; n],
            anti: vec![0; n],
            strong_anti: vec![0; n],
        };
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                let b = bit(v);
                match g.at(u, v) {
                    Adjacency::Strong => {
                        mk.strong[u] |= b;
                        mk.adj[u] |= b;
                    }
                    Adjacency::Semi => {
                        mk.adj[u] |= b;
                        mk.anti[u] |= b;
                    }
                    Adjacency::StrongAnti => {
                        mk.anti[u] |= b;
                        mk.strong_anti[u] |= b;
                    }
                }
            }
        }
        mk
    }

    fn full(&self) -> u64 {
        if self.n == MASK_BITS {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Nonempty strong cliques.
    fn strong_cliques(&self) -> Vec<u64> {
        fn grow(mk: &Masks, clique: u64, cand: u64, out: &mut Vec<u64>) {
            for v in bits(cand) {
                let c = clique | bit(v);
                out.push(c);
                // only larger vertices, to list each clique once
                let rest = cand & mk.strong[v] & !((bit(v) << 1) - 1);
                grow(mk, c, rest, out);
            }
        }
        let mut out = Vec::new();
        grow(self, 0, self.full(), &mut out);
        out
    }

    /// Vertices outside `c` that are neither strongly complete nor strongly
    /// anticomplete to `c`.
    fn mixed_to(&self, c: u64) -> u64 {
        bits(self.full() & !c)
            .filter(|&v| self.strong[v] & c != c && self.strong_anti[v] & c != c)
            .fold(0, |m, v| m | bit(v))
    }

    fn is_square(&self, [a, b, c, d]: [usize; 4]) -> bool {
        self.adj[a] & bit(b) != 0
            && self.adj[b] & bit(c) != 0
            && self.adj[c] & bit(d) != 0
            && self.adj[d] & bit(a) != 0
            && self.anti[a] & bit(c) != 0
            && self.anti[b] & bit(d) != 0
    }

    /// Vertex sets of all squares inside `set`.
    fn squares_in(&self, set: u64) -> Vec<u64> {
        let vs: Vec<usize> = bits(set).collect();
        let mut out = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                for k in j + 1..vs.len() {
                    for l in k + 1..vs.len() {
                        let (a, b, c, d) = (vs[i], vs[j], vs[k], vs[l]);
                        if self.is_square([a, b, c, d])
                            || self.is_square([a, b, d, c])
                            || self.is_square([a, c, b, d])
                        {
                            out.push(bit(a) | bit(b) | bit(c) | bit(d));
                        }
                    }
                }
            }
        }
        out
    }

    /// Every way of splitting `side` into two nonempty sets is crossed by
    /// one of `squares`.
    fn all_splits_crossed(side: u64, squares: &[u64]) -> bool {
        let low = side & side.wrapping_neg();
        let rest = side & !low;
        // subsets S of `side` containing `low`, S != side
        let mut sub = rest;
        loop {
            let s = low | sub;
            if s != side {
                let t = side & !s;
                if !squares.iter().any(|&q| q & s != 0 && q & t != 0) {
                    return false;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        true
    }

    /// Canonical HPOSCs: the smallest vertex of `A ∪ B` lies in `A`.
    fn hposcs(&self) -> Vec<(u64, u64)> {
        let cliques = self.strong_cliques();
        let mixed: Vec<u64> = cliques.iter().map(|&c| self.mixed_to(c)).collect();
        let mut out = Vec::new();
        for (i, &a) in cliques.iter().enumerate() {
            for (j, &b) in cliques.iter().enumerate() {
                if a & b != 0 || a.trailing_zeros() > b.trailing_zeros() {
                    continue;
                }
                if a.count_ones() == 1 && b.count_ones() == 1 {
                    continue;
                }
                if mixed[i] & !b == 0 && mixed[j] & !a == 0 {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn is_deletion_minimal(&self, a: u64, b: u64) -> bool {
        let every_mixed = |x: u64, y: u64| {
            bits(x).all(|v| self.strong[v] & y != y && self.strong_anti[v] & y != y)
        };
        every_mixed(a, b) && every_mixed(b, a) && !self.squares_in(a | b).is_empty()
    }

    fn is_square_connected(&self, a: u64, b: u64) -> bool {
        let sq = self.squares_in(a | b);
        Masks::all_splits_crossed(a, &sq) && Masks::all_splits_crossed(b, &sq)
    }

    fn matches(&self, kind: HposcKind, a: u64, b: u64) -> bool {
        match kind {
            HposcKind::All => true,
            HposcKind::DeletionMinimal => self.is_deletion_minimal(a, b),
            HposcKind::SquareConnected => self.is_square_connected(a, b),
        }
    }
}

fn pair_of(a: u64, b: u64) -> CliquePair {
    CliquePair::new(to_set(a), to_set(b)).expect("oracle pairs are disjoint and nonempty")
}

/// All homogeneous pairs of strong cliques of the given kind, each once,
/// with the smallest vertex in `A`, in ascending order of `(A, B)` as
/// bitmasks.
pub fn enumerate_hposcs(g: &Trigraph, kind: HposcKind, cap: usize) -> Result<Vec<CliquePair>> {
    check_cap("hposc enumeration", g.n(), cap)?;
    let mk = Masks::new(g);
    Ok(mk
        .hposcs()
        .into_iter()
        .filter(|&(a, b)| mk.matches(kind, a, b))
        .map(|(a, b)| pair_of(a, b))
        .collect())
}

/// Square-connected pairs with no other square-connected pair inside them
/// (in either role alignment).
pub fn minimal_square_connected(g: &Trigraph, cap: usize) -> Result<Vec<CliquePair>> {
    check_cap("hposc enumeration", g.n(), cap)?;
    let mk = Masks::new(g);
    let sc: Vec<(u64, u64)> = mk
        .hposcs()
        .into_iter()
        .filter(|&(a, b)| mk.is_square_connected(a, b))
        .collect();
    let inside = |(a1, b1): (u64, u64), (a2, b2): (u64, u64)| {
        (a1 & !a2 == 0 && b1 & !b2 == 0) || (a1 & !b2 == 0 && b1 & !a2 == 0)
    };
    Ok(sc
        .iter()
        .filter(|&&p| !sc.iter().any(|&q| q != p && inside(q, p)))
        .map(|&(a, b)| pair_of(a, b))
        .collect())
}

/// The inclusion-minimal HPOSC `(A, B)` with `a0, a1 ∈ A` such that some
/// square of `A ∪ B` contains both seeds.
///
/// Returns [`Error::OracleInvariant`] if there are several minimal ones.
pub fn minimal_hposc_containing(g: &Trigraph, a0: usize, a1: usize, cap: usize) -> Result<Option<CliquePair>> {
    check_cap("hposc enumeration", g.n(), cap)?;
    for v in [a0, a1] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if a0 == a1 {
        return Err(Error::NotDistinct);
    }
    if !g.strongly_adjacent(a0, a1) {
        return Err(Error::NotStronglyAdjacent(a0, a1));
    }
    let mk = Masks::new(g);
    let seeds = bit(a0) | bit(a1);
    let candidates: Vec<(u64, u64)> = mk
        .hposcs()
        .into_iter()
        .filter_map(|(a, b)| {
            if a & seeds == seeds {
                Some((a, b))
            } else if b & seeds == seeds {
                Some((b, a))
            } else {
                None
            }
        })
        .filter(|&(a, b)| mk.squares_in(a | b).iter().any(|&q| q & seeds == seeds))
        .collect();
    let minimal: Vec<(u64, u64)> = candidates
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !candidates
                .iter()
                .any(|&(a2, b2)| (a2, b2) != (a, b) && a2 & !a == 0 && b2 & !b == 0)
        })
        .collect();
    match minimal.as_slice() {
        [] => Ok(None),
        [(a, b)] => Ok(Some(pair_of(*a, *b))),
        many => Err(Error::OracleInvariant(format!(
            "{} inclusion-minimal pairs contain seeds ({a0}, {a1})",
            many.len()
        ))),
    }
}

/// No square-connected HPOSC exists.
pub fn laminar_by_enumeration(g: &Trigraph, cap: usize) -> Result<bool> {
    check_cap("hposc enumeration", g.n(), cap)?;
    let mk = Masks::new(g);
    Ok(!mk.hposcs().into_iter().any(|(a, b)| mk.is_square_connected(a, b)))
}

/// Sets `X` with `2 <= |X| < n` such that every vertex outside `X` is
/// strongly complete or strongly anticomplete to `X`.
pub fn enumerate_homogeneous_sets(g: &Trigraph, cap: usize) -> Result<Vec<VertexSet>> {
    check_cap("homogeneous set enumeration", g.n(), cap)?;
    let mk = Masks::new(g);
    let full = mk.full();
    Ok((1..full)
        .filter(|x: &u64| x.count_ones() >= 2 && mk.mixed_to(*x) == 0)
        .map(to_set)
        .collect())
}

impl Masks {
    fn is_strong_clique(&self, c: u64) -> bool {
        bits(c).all(|v| self.strong[v] & c == c & !bit(v))
    }

    fn has_antiadjacent_triple(&self, set: u64) -> bool {
        bits(set).any(|u| {
            let rest = set & self.anti[u] & !((bit(u) << 1) - 1);
            bits(rest).any(|v| rest & self.anti[v] & !((bit(v) << 1) - 1) != 0)
        })
    }

    /// Some split of `set` into two strong cliques, by trying every subset.
    fn covered_by_two_cliques(&self, set: u64) -> bool {
        let mut sub = set;
        loop {
            if self.is_strong_clique(sub) && self.is_strong_clique(set & !sub) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & set;
        }
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let next = bits(seen).fold(seen, |m, v| m | self.adj[v]);
            if next == seen {
                return seen == self.full();
            }
            seen = next;
        }
    }
}

/// Classification flags computed by exhaustive search: claws by scanning
/// triples in every neighbourhood, cobipartiteness by trying every split
/// into two sets.
pub fn classify_by_enumeration(g: &Trigraph, cap: usize) -> Result<Classification> {
    check_cap("classification", g.n(), cap)?;
    let mk = Masks::new(g);
    let claw_free = (0..mk.n).all(|v| !mk.has_antiadjacent_triple(mk.adj[v]));
    let quasi_line = (0..mk.n).all(|v| mk.covered_by_two_cliques(mk.adj[v]));
    let cobipartite = mk.covered_by_two_cliques(mk.full());
    let alpha_ge_3 = mk.has_antiadjacent_triple(mk.full());
    Ok(Classification {
        connected: mk.connected(),
        claw_free,
        quasi_line,
        cobipartite,
        alpha_ge_3,
        degenerate: !((quasi_line && !cobipartite) || (claw_free && alpha_ge_3)),
        laminar: None,
    })
}

/// Whether `pair` is an HPOSC satisfying `kind`, decided from the
/// definitions.
pub fn pair_is(g: &Trigraph, pair: &CliquePair, kind: HposcKind, cap: usize) -> Result<bool> {
    check_cap("pair check", g.n(), cap)?;
    let mk = Masks::new(g);
    let mask = |s: &VertexSet| s.iter().fold(0u64, |m, v| m | bit(v));
    let (a, b) = (mask(pair.a()), mask(pair.b()));
    let hposc = mk.is_strong_clique(a)
        && mk.is_strong_clique(b)
        && !(a.count_ones() == 1 && b.count_ones() == 1)
        && mk.mixed_to(a) & !b == 0
        && mk.mixed_to(b) & !a == 0;
    Ok(hposc && mk.matches(kind, a, b))
}

/// A quotient trigraph with the map from it to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Trigraph,
    pub map: ThickeningMap,
}

/// Every partition of the vertices into strong cliques whose part pairs are
/// strongly complete, strongly anticomplete or mixed, with the mixed pairs
/// forming a matching on the parts.
pub fn enumerate_antithickenings(g: &Trigraph, cap: usize) -> Result<Vec<Quotient>> {
    check_cap("antithickening enumeration", g.n(), cap)?;
    let mk = Masks::new(g);
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    assign(&mk, 0, &mut parts, &mut out)?;
    Ok(out)
}

fn assign(mk: &Masks, v: usize, parts: &mut Vec<u64>, out: &mut Vec<Quotient>) -> Result<()> {
    if v == mk.n {
        if let Some(q) = quotient(mk, parts)? {
            out.push(q);
        }
        return Ok(());
    }
    for j in 0..parts.len() {
        if mk.strong[v] & parts[j] == parts[j] {
            parts[j] |= bit(v);
            assign(mk, v + 1, parts, out)?;
            parts[j] &= !bit(v);
        }
    }
    parts.push(bit(v));
    assign(mk, v + 1, parts, out)?;
    parts.pop();
    Ok(())
}

fn quotient(mk: &Masks, parts: &[u64]) -> Result<Option<Quotient>> {
    let k = parts.len();
    let mut rel = vec![Adjacency::StrongAnti; k * k];
    let mut mixed_count = vec![0; k];
    for p in 0..k {
        for q in p + 1..k {
            let (x, y) = (parts[p], parts[q]);
            let r = if bits(x).all(|v| mk.strong[v] & y == y) {
                Adjacency::Strong
            } else if bits(x).all(|v| mk.strong_anti[v] & y == y) {
                Adjacency::StrongAnti
            } else {
                mixed_count[p] += 1;
                mixed_count[q] += 1;
                Adjacency::Semi
            };
            rel[p * k + q] = r;
        }
    }
    if mixed_count.iter().any(|&c| c > 1) {
        return Ok(None);
    }
    let graph = Trigraph::from_fn(k, |p, q| rel[p * k + q])?;
    let map = ThickeningMap::new(mk.n, parts.iter().map(|&p| to_set(p)).collect())?;
    Ok(Some(Quotient { graph, map }))
}

/// Laminar antithickenings with the largest number of vertices, one per
/// isomorphism class.
pub fn optimal_antithickening_classes(g: &Trigraph, cap: usize) -> Result<Vec<Quotient>> {
    let all = enumerate_antithickenings(g, cap)?;
    let mut laminar = Vec::new();
    for q in all {
        if laminar_by_enumeration(&q.graph, cap)? {
            laminar.push(q);
        }
    }
    let best = laminar.iter().map(|q| q.graph.n()).max().unwrap_or(0);
    let mut classes: Vec<Quotient> = Vec::new();
    for q in laminar.into_iter().filter(|q| q.graph.n() == best) {
        let mut seen = false;
        for c in &classes {
            if are_isomorphic(&c.graph, &q.graph, cap.max(ISOMORPHISM_CAP))? {
                seen = true;
                break;
            }
        }
        if !seen {
            classes.push(q);
        }
    }
    Ok(classes)
}

/// A bijection `f` with `θ1(u, v) = θ2(f(u), f(v))` for all pairs.
pub fn find_isomorphism(g1: &Trigraph, g2: &Trigraph, cap: usize) -> Result<Option<Vec<usize>>> {
    check_cap("isomorphism search", g1.n(), cap)?;
    check_cap("isomorphism search", g2.n(), cap)?;
    let n = g1.n();
    if n != g2.n() {
        return Ok(None);
    }
    let signature = |g: &Trigraph, v: usize| {
        let row = (0..n).filter(|&u| u != v).map(|u| g.at(u, v));
        let strong = row.clone().filter(|a| *a == Adjacency::Strong).count();
        (strong, row.filter(|a| *a == Adjacency::Semi).count())
    };
    let s1: Vec<_> = (0..n).map(|v| signature(g1, v)).collect();
    let s2: Vec<_> = (0..n).map(|v| signature(g2, v)).collect();
    let (mut a, mut b) = (s1.clone(), s2.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }

    fn extend(
        g1: &Trigraph,
        g2: &Trigraph,
        s1: &[(usize, usize)],
        s2: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let v = map.len();
        if v == g1.n() {
            return true;
        }
        for w in 0..g2.n() {
            if used[w] || s1[v] != s2[w] {
                continue;
            }
            if (0..v).all(|u| g1.at(u, v) == g2.at(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(g1, g2, s1, s2, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend(g1, g2, &s1, &s2, &mut map, &mut used).then_some(map))
}

pub fn are_isomorphic(g1: &Trigraph, g2: &Trigraph, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, cap)?.is_some())
}

/// Every connected trigraph on exactly `n` labelled vertices, `n <= 6`.
///
/// Semiedges are chosen first as a matching of `K_n`, then every other pair
/// is strong or strongly antiadjacent.
pub fn connected_trigraphs(n: usize) -> Result<impl Iterator<Item = Trigraph>> {
    check_cap("trigraph catalog", n, CATALOG_CAP)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut matchings: Vec<u64> = Vec::new();
    fn matchings_from(pairs: &[(usize, usize)], start: usize, used: u64, chosen: u64, out: &mut Vec<u64>) {
        out.push(chosen);
        for (i, &(u, v)) in pairs.iter().enumerate().skip(start) {
            if used & (bit(u) | bit(v)) == 0 {
                matchings_from(pairs, i + 1, used | bit(u) | bit(v), chosen | bit(i), out);
            }
        }
    }
    matchings_from(&pairs, 0, 0, 0, &mut matchings);
    matchings.sort_unstable();
    let p = pairs.len();
    let mut slot = vec![0; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        slot[u * n + v] = i;
    }
    Ok(matchings.into_iter().flat_map(move |semi| {
        let free: Vec<usize> = (0..p).filter(|&i| semi & bit(i) == 0).collect();
        let slot = slot.clone();
        (0u64..1 << free.len()).filter_map(move |strong| {
            let mut value = vec![Adjacency::StrongAnti; p];
            for i in bits(semi) {
                value[i] = Adjacency::Semi;
            }
            for (j, &i) in free.iter().enumerate() {
                if strong & bit(j) != 0 {
                    value[i] = Adjacency::Strong;
                }
            }
            let g = Trigraph::from_fn(n, |u, v| value[slot[u * n + v]]).expect("matching by construction");
            g.is_connected().then_some(g)
        })
    }))
}

/// All connected trigraphs with `1 <= n <= max_n` vertices.
pub fn catalog_up_to(max_n: usize) -> Result<Vec<Trigraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_trigraphs(n)?);
    }
    Ok(out)
}

/// `count` seeded connected random trigraphs on `n` vertices; sample `i`
/// uses seed `seed + i`.
pub fn sampled_trigraphs(n: usize, count: usize, seed: u64) -> Result<Vec<Trigraph>> {
    (0..count as u64).map(|i| gen_random_trigraph(n, seed + i)).collect()
}
