//! Thickening maps, laminarity and the optimal antithickening pipeline.
//!
//! The pipeline runs the SCHPOSC growth from every strongly adjacent pair,
//! merges intersecting results into disjoint square-connected pairs, and
//! contracts each pair `(A, B)` to a semiadjacent pair of vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::schposc::schposc;
use crate::set::VertexSet;
use crate::structure::{is_hposc, CliquePair};
use crate::trigraph::{Adjacency, Trigraph};

/// Maps every vertex of a thin trigraph to a nonempty set of vertices of a
/// thick trigraph on `target_n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThickeningMap {
    target_n: usize,
    parts: Vec<VertexSet>,
}

impl ThickeningMap {
    /// Checks that the parts are nonempty, disjoint and cover `0..target_n`.
    pub fn new(target_n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = vec![false; target_n];
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::Arity(format!("part {i} is empty")));
            }
            for v in p.iter() {
                if v >= target_n {
                    return Err(Error::VertexOutOfRange { vertex: v, n: target_n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Arity(format!("vertex {v} lies in two parts")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Arity(format!("vertex {v} lies in no part")));
        }
        Ok(ThickeningMap { target_n, parts })
    }

    pub fn identity(n: usize) -> Self {
        ThickeningMap {
            target_n: n,
            parts: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    /// Vertex count of the thick trigraph.
    pub fn target_n(&self) -> usize {
        self.target_n
    }

    /// Vertex count of the thin trigraph.
    pub fn source_n(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, v: usize) -> &VertexSet {
        &self.parts[v]
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.parts.len() == self.target_n
            && self.parts.iter().enumerate().all(|(i, p)| p.as_slice() == [i])
    }

    /// For each thick vertex, the thin vertex whose part contains it.
    pub fn owners(&self) -> Vec<usize> {
        let mut owner = vec![0; self.target_n];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p.iter() {
                owner[v] = i;
            }
        }
        owner
    }
}

impl fmt::Debug for ThickeningMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThickeningMap({} -> {}: {:?})", self.parts.len(), self.target_n, self.parts)
    }
}

/// Relation between two disjoint vertex sets.
fn set_relation(g: &Trigraph, x: &[usize], y: &[usize]) -> Option<Adjacency> {
    if g.sets_strongly_complete(x, y) {
        Some(Adjacency::Strong)
    } else if g.sets_strongly_anticomplete(x, y) {
        Some(Adjacency::StrongAnti)
    } else {
        None
    }
}

/// Whether `map` is a thickening from `thin` to `thick`: parts are nonempty
/// disjoint strong cliques covering `thick`; strongly adjacent, strongly
/// antiadjacent and semiadjacent thin pairs map to strongly complete,
/// strongly anticomplete and mixed part pairs respectively.
pub fn verify_thickening(thin: &Trigraph, map: &ThickeningMap, thick: &Trigraph) -> Result<bool> {
    if map.source_n() != thin.n() || map.target_n() != thick.n() {
        return Err(Error::Arity(format!(
            "map {} -> {} against trigraphs on {} and {} vertices",
            map.source_n(),
            map.target_n(),
            thin.n(),
            thick.n()
        )));
    }
    let parts = map.parts();
    if parts.iter().any(|p| !thick.is_strong_clique(p)) {
        return Ok(false);
    }
    for u in 0..thin.n() {
        for v in u + 1..thin.n() {
            let rel = set_relation(thick, &parts[u], &parts[v]);
            let ok = match thin.at(u, v) {
                Adjacency::Semi => rel.is_none(),
                a => rel == Some(a),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Composes `outer: G'' -> G'` with `inner: G' -> G` into `G'' -> G`.
pub fn compose_thickenings(outer: &ThickeningMap, inner: &ThickeningMap) -> Result<ThickeningMap> {
    if outer.target_n() != inner.source_n() {
        return Err(Error::Arity(format!(
            "outer map targets {} vertices, inner map has {} parts",
            outer.target_n(),
            inner.source_n()
        )));
    }
    let parts = outer
        .parts()
        .iter()
        .map(|p| p.iter().flat_map(|w| inner.part(w).iter()).collect())
        .collect();
    ThickeningMap::new(inner.target_n(), parts)
}

/// A square-connected homogeneous pair of strong cliques, if any. Found by
/// seeding the growth at every strongly adjacent pair.
pub fn laminarity_witness(g: &Trigraph) -> Option<CliquePair> {
    g.strong_pairs()
        .find_map(|(u, v)| schposc(g, u, v).expect("strong pairs are valid seeds"))
}

/// No square-connected homogeneous pair of strong cliques.
pub fn is_laminar(g: &Trigraph) -> bool {
    laminarity_witness(g).is_none()
}

/// Disjoint-set forest over collected pairs. Each node keeps a parity
/// relative to its parent: `true` means the node's `A` is the parent's `B`.
/// Roots own the merged sides.
struct PairForest<'g> {
    g: &'g Trigraph,
    slot: Vec<Option<(usize, usize)>>,
    parent: Vec<usize>,
    parity: Vec<bool>,
    sides: Vec<[Vec<usize>; 2]>,
}

impl<'g> PairForest<'g> {
    fn new(g: &'g Trigraph) -> Self {
        PairForest {
            g,
            slot: vec![None; g.n()],
            parent: Vec::new(),
            parity: Vec::new(),
            sides: Vec::new(),
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, pp) = self.find(p);
        self.parity[x] ^= pp;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    fn size(&self, x: usize) -> usize {
        self.sides[x][0].len() + self.sides[x][1].len()
    }

    /// Joins the trees rooted at `x` and `y`, where side `s` of `y` is side
    /// `s ^ rel` of `x`.
    fn union(&mut self, x: usize, y: usize, rel: bool) -> Result<()> {
        let (keep, fold) = if self.size(x) >= self.size(y) { (x, y) } else { (y, x) };
        let moved = std::mem::take(&mut self.sides[fold]);
        for (s, verts) in moved.into_iter().enumerate() {
            let target = s ^ rel as usize;
            for &v in &verts {
                if !self.g.strongly_complete_to(v, &self.sides[keep][target]) {
                    return Err(Error::DegenerateStructure(format!(
                        "merged side is not a strong clique (vertex {v})"
                    )));
                }
            }
            self.sides[keep][target].extend(verts);
        }
        self.parent[fold] = keep;
        self.parity[fold] = rel;
        Ok(())
    }

    fn add(&mut self, pair: &CliquePair) -> Result<()> {
        let node = self.parent.len();
        self.parent.push(node);
        self.parity.push(false);
        self.sides.push([Vec::new(), Vec::new()]);
        // (root, parity of that root relative to the new node)
        let mut links: Vec<(usize, bool)> = Vec::new();
        for (side, part) in [pair.a(), pair.b()].into_iter().enumerate() {
            for v in part.iter() {
                match self.slot[v] {
                    None => {
                        self.slot[v] = Some((node, side));
                        self.sides[node][side].push(v);
                    }
                    Some((home, s)) => {
                        let (root, par) = self.find(home);
                        let rel = (s ^ par as usize) != side;
                        match links.iter().find(|(r, _)| *r == root) {
                            Some(&(_, r)) if r != rel => {
                                return Err(Error::DegenerateStructure(format!(
                                    "skew intersection at vertex {v}"
                                )))
                            }
                            Some(_) => {}
                            None => links.push((root, rel)),
                        }
                    }
                }
            }
        }
        for (root, rel) in links {
            let (cur, cur_par) = self.find(node);
            self.union(cur, root, rel ^ cur_par)?;
        }
        Ok(())
    }

    fn into_pairs(mut self) -> Vec<CliquePair> {
        let mut out = Vec::new();
        for x in 0..self.parent.len() {
            if self.parent[x] == x {
                let [a, b] = std::mem::take(&mut self.sides[x]);
                let pair = CliquePair::new(a, b).expect("merged sides are nonempty and disjoint");
                out.push(pair.canonical());
            }
        }
        out.sort_by_key(|p| p.a().min_vertex());
        out
    }
}

/// Runs the growth from every strongly adjacent pair `(u, v)`, `u < v`, in
/// ascending order and merges intersecting results. The returned pairs are
/// pairwise disjoint, oriented with their smallest vertex in `A`, and sorted
/// by that vertex.
///
/// On degenerate input the merge may meet a skew intersection or produce a
/// side that is not a strong clique; both are reported as
/// [`Error::DegenerateStructure`].
pub fn collect_maximal_schposcs(g: &Trigraph) -> Result<Vec<CliquePair>> {
    let mut forest = PairForest::new(g);
    for (u, v) in g.strong_pairs() {
        if let Some(pair) = schposc(g, u, v)? {
            forest.add(&pair)?;
        }
    }
    Ok(forest.into_pairs())
}

/// Contracts each pair `(A_i, B_i)` to semiadjacent vertices `a_i`, `b_i`.
///
/// Vertices outside every pair come first, in ascending order, followed by
/// `a_1, b_1, a_2, b_2, ...`.
pub fn contract_pairs(g: &Trigraph, pairs: &[CliquePair]) -> Result<(Trigraph, ThickeningMap)> {
    let n = g.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, p) in pairs.iter().enumerate() {
        if !is_hposc(g, p) {
            return Err(Error::NotHposc);
        }
        for v in p.vertices().iter() {
            if owner[v].replace(i).is_some() {
                return Err(Error::DegenerateStructure(format!("pairs overlap at vertex {v}")));
            }
        }
    }
    let mut parts: Vec<VertexSet> = (0..n)
        .filter(|&v| owner[v].is_none())
        .map(VertexSet::singleton)
        .collect();
    let untouched = parts.len();
    for p in pairs {
        parts.push(p.a().clone());
        parts.push(p.b().clone());
    }
    // own pair partners: a_i <-> b_i
    let partner = |x: usize| -> Option<usize> {
        (x >= untouched).then(|| untouched + ((x - untouched) ^ 1))
    };
    let mut failure = None;
    let reduced = Trigraph::from_fn(parts.len(), |x, y| {
        if x < untouched && y < untouched {
            return g.at(parts[x].as_slice()[0], parts[y].as_slice()[0]);
        }
        match (set_relation(g, &parts[x], &parts[y]), partner(x) == Some(y)) {
            (None, true) => Adjacency::Semi,
            (Some(_), true) => {
                failure.get_or_insert(format!(
                    "sides {} and {} are uniformly related",
                    parts[x], parts[y]
                ));
                Adjacency::StrongAnti
            }
            (Some(rel), false) => rel,
            (None, false) => {
                failure.get_or_insert(format!(
                    "parts {} and {} are neither strongly complete nor strongly anticomplete",
                    parts[x], parts[y]
                ));
                Adjacency::StrongAnti
            }
        }
    })?;
    if let Some(msg) = failure {
        return Err(Error::DegenerateStructure(msg));
    }
    let map = ThickeningMap::new(n, parts)?;
    Ok((reduced, map))
}

/// Knobs for [`optimal_antithickening`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntithickenOptions {
    /// Run on degenerate input instead of rejecting it.
    pub force: bool,
    /// Re-verify the map and the laminarity of the output.
    pub recheck: bool,
}

impl Default for AntithickenOptions {
    fn default() -> Self {
        AntithickenOptions {
            force: false,
            recheck: true,
        }
    }
}

/// Output of the pipeline: the laminar antithickening, the map from it to
/// the input, and the pairs that were contracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntithickeningResult {
    pub reduced: Trigraph,
    pub map: ThickeningMap,
    pub contracted_pairs: Vec<CliquePair>,
}

impl AntithickeningResult {
    pub fn is_identity(&self) -> bool {
        self.contracted_pairs.is_empty()
    }
}

/// The optimal antithickening of a connected trigraph.
///
/// Degenerate input is rejected unless `opts.force` is set; forced runs use
/// the same deterministic pipeline but carry no uniqueness guarantee.
pub fn optimal_antithickening(g: &Trigraph, opts: AntithickenOptions) -> Result<AntithickeningResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !opts.force {
        let class = g.classify();
        if class.degenerate {
            return Err(Error::Degenerate(class));
        }
    }
    let contracted_pairs = collect_maximal_schposcs(g)?;
    let (reduced, map) = contract_pairs(g, &contracted_pairs)?;
    if opts.recheck {
        if !verify_thickening(&reduced, &map, g)? {
            return Err(Error::Postcondition("map is not a thickening".into()));
        }
        if let Some(p) = laminarity_witness(&reduced) {
            return Err(Error::Postcondition(format!("output is not laminar: {p}")));
        }
    }
    Ok(AntithickeningResult {
        reduced,
        map,
        contracted_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_cliques_matching, gen_named, NamedFixture};

    fn pair(a: &[usize], b: &[usize]) -> CliquePair {
        CliquePair::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn t8_map() -> ThickeningMap {
        let parts = vec![
            VertexSet::from([0, 1]),
            VertexSet::from([2, 3]),
            VertexSet::from([4]),
            VertexSet::from([5]),
            VertexSet::from([6]),
            VertexSet::from([7]),
        ];
        ThickeningMap::new(8, parts).unwrap()
    }

    #[test]
    fn map_validation() {
        assert!(ThickeningMap::new(3, vec![VertexSet::from([0, 1])]).is_err());
        assert!(ThickeningMap::new(2, vec![VertexSet::from([0, 1]), VertexSet::from([1])]).is_err());
        assert!(ThickeningMap::new(2, vec![VertexSet::new(), VertexSet::from([0, 1])]).is_err());
        assert!(ThickeningMap::identity(4).is_identity());
        assert_eq!(t8_map().owners(), vec![0, 0, 1, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn verify_examples() {
        let c6 = gen_named(NamedFixture::C6S);
        assert!(verify_thickening(&c6, &ThickeningMap::identity(6), &c6).unwrap());
        let c6semi = gen_named(NamedFixture::C6Semi);
        let t8 = gen_named(NamedFixture::T8);
        assert!(verify_thickening(&c6semi, &t8_map(), &t8).unwrap());
        assert!(matches!(
            verify_thickening(&c6semi, &ThickeningMap::identity(6), &t8),
            Err(Error::Arity(_))
        ));
    }

    /// Flipping one cross pair of T8 keeps the parts mixed; flipping both
    /// antiadjacent cross pairs makes them strongly complete.
    #[test]
    fn verify_detects_uniform_semiedge_parts() {
        let c6semi = gen_named(NamedFixture::C6Semi);
        let t8 = gen_named(NamedFixture::T8);
        let flip = |pairs: &[(usize, usize)]| {
            Trigraph::from_fn(8, |u, v| {
                if pairs.contains(&(u, v)) {
                    Adjacency::Strong
                } else {
                    t8.at(u, v)
                }
            })
            .unwrap()
        };
        // (a1, b2) alone
        assert!(verify_thickening(&c6semi, &t8_map(), &flip(&[(0, 3)])).unwrap());
        assert!(!verify_thickening(&c6semi, &t8_map(), &flip(&[(0, 3), (1, 2)])).unwrap());
        // a part that is not a strong clique
        let broken = Trigraph::from_fn(8, |u, v| {
            if (u, v) == (0, 1) {
                Adjacency::StrongAnti
            } else {
                t8.at(u, v)
            }
        })
        .unwrap();
        assert!(!verify_thickening(&c6semi, &t8_map(), &broken).unwrap());
    }

    #[test]
    fn composition_identity_laws() {
        let m = t8_map();
        assert_eq!(compose_thickenings(&ThickeningMap::identity(6), &m).unwrap(), m);
        assert_eq!(compose_thickenings(&m, &ThickeningMap::identity(8)).unwrap(), m);
        assert!(compose_thickenings(&m, &ThickeningMap::identity(6)).is_err());
    }

    #[test]
    fn laminarity() {
        assert!(is_laminar(&gen_named(NamedFixture::C6S)));
        assert!(is_laminar(&gen_named(NamedFixture::C6Semi)));
        assert!(!is_laminar(&gen_named(NamedFixture::T8)));
        assert!(!is_laminar(&gen_cliques_matching(4).unwrap()));
    }

    #[test]
    fn collection() {
        assert!(collect_maximal_schposcs(&gen_named(NamedFixture::C6S)).unwrap().is_empty());
        assert_eq!(
            collect_maximal_schposcs(&gen_named(NamedFixture::T8)).unwrap(),
            vec![pair(&[0, 1], &[2, 3])]
        );
        assert_eq!(
            collect_maximal_schposcs(&gen_cliques_matching(3).unwrap()).unwrap(),
            vec![pair(&[0, 1, 2], &[3, 4, 5])]
        );
    }

    #[test]
    fn contraction() {
        let t8 = gen_named(NamedFixture::T8);
        let (r, map) = contract_pairs(&t8, &[pair(&[0, 1], &[2, 3])]).unwrap();
        assert_eq!(r.n(), 6);
        assert_eq!(r.semiedges().collect::<Vec<_>>(), vec![(4, 5)]);
        assert!(verify_thickening(&r, &map, &t8).unwrap());
        let c6 = gen_named(NamedFixture::C6S);
        let (same, id) = contract_pairs(&c6, &[]).unwrap();
        assert_eq!(same, c6);
        assert!(id.is_identity());
        let cm = gen_cliques_matching(3).unwrap();
        let (two, _) = contract_pairs(&cm, &[pair(&[0, 1, 2], &[3, 4, 5])]).unwrap();
        assert_eq!(two, Trigraph::from_pairs(2, &[(0, 1, Adjacency::Semi)]).unwrap());
    }

    #[test]
    fn contraction_rejects_bad_pairs() {
        let cm = gen_cliques_matching(3).unwrap();
        assert_eq!(contract_pairs(&cm, &[pair(&[0, 3], &[1])]), Err(Error::NotHposc));
        assert!(matches!(
            contract_pairs(&cm, &[pair(&[0, 1], &[3, 4]), pair(&[1, 2], &[4, 5])]),
            Err(Error::DegenerateStructure(_))
        ));
        // strongly complete sides cannot become a semiedge
        let k4 = Trigraph::from_fn(4, |_, _| Adjacency::Strong).unwrap();
        assert!(matches!(
            contract_pairs(&k4, &[pair(&[0, 1], &[2, 3])]),
            Err(Error::DegenerateStructure(_))
        ));
    }

    #[test]
    fn pipeline_examples() {
        let c6 = gen_named(NamedFixture::C6S);
        let r = optimal_antithickening(&c6, AntithickenOptions::default()).unwrap();
        assert!(r.is_identity());
        assert_eq!(r.reduced, c6);

        let t8 = gen_named(NamedFixture::T8);
        let r = optimal_antithickening(&t8, AntithickenOptions::default()).unwrap();
        assert_eq!(r.reduced.n(), 6);
        assert_eq!(r.contracted_pairs, vec![pair(&[0, 1], &[2, 3])]);

        let cm = gen_cliques_matching(5).unwrap();
        assert!(matches!(
            optimal_antithickening(&cm, AntithickenOptions::default()),
            Err(Error::Degenerate(_))
        ));
        let forced = AntithickenOptions { force: true, recheck: true };
        let r = optimal_antithickening(&cm, forced).unwrap();
        assert_eq!(r.reduced, Trigraph::from_pairs(2, &[(0, 1, Adjacency::Semi)]).unwrap());

        let split = Trigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(optimal_antithickening(&split, forced), Err(Error::Disconnected));
    }}
