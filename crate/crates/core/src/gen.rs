//! Instance generators: named fixtures, the thickening operator and seeded
//! random families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::antithicken::{is_laminar, ThickeningMap};
use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::structure::{contains_square, is_square_connected, CliquePair};
use crate::trigraph::{Adjacency, Trigraph};

use Adjacency::{Semi, Strong, StrongAnti};

/// Attempts made by the rejection samplers before giving up.
pub const SAMPLING_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedFixture {
    /// 4-cycle with strong cycle edges.
    C4S,
    /// 6-cycle with strong cycle edges.
    C6S,
    /// C6S with the pair (0, 1) semiadjacent.
    C6Semi,
    /// C6Semi with vertices 0 and 1 thickened into crossed 2-cliques.
    T8,
    /// A deletion-minimal pair `A = {0..3}`, `B = {4..7}` made of two parallel
    /// squares that no square crosses.
    Dm8,
    /// C4S (vertices 0..3) strongly complete to a strong 5-cycle (4..8).
    C4JoinC5,
    /// Strong triangle.
    Tri,
}

impl NamedFixture {
    pub const ALL: [NamedFixture; 7] = [
        NamedFixture::C4S,
        NamedFixture::C6S,
        NamedFixture::C6Semi,
        NamedFixture::T8,
        NamedFixture::Dm8,
        NamedFixture::C4JoinC5,
        NamedFixture::Tri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFixture::C4S => "C4S",
            NamedFixture::C6S => "C6S",
            NamedFixture::C6Semi => "C6SEMI",
            NamedFixture::T8 => "T8",
            NamedFixture::Dm8 => "DM8",
            NamedFixture::C4JoinC5 => "C4_JOIN_C5",
            NamedFixture::Tri => "TRI",
        }
    }
}

impl fmt::Display for NamedFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFixture {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        NamedFixture::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

fn cycle(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// The fixture with the given name.
pub fn gen_named(name: NamedFixture) -> Trigraph {
    let built = match name {
        NamedFixture::C4S => Trigraph::from_edges(4, &cycle(4)),
        NamedFixture::C6S => Trigraph::from_edges(6, &cycle(6)),
        NamedFixture::C6Semi => {
            let mut pairs: Vec<_> = cycle(6).into_iter().map(|(u, v)| (u, v, Strong)).collect();
            pairs[0].2 = Semi;
            Trigraph::from_pairs(6, &pairs)
        }
        NamedFixture::T8 => {
            let spec = ThickenSpec::crossed(6, 0, 1);
            thicken(&gen_named(NamedFixture::C6Semi), &spec).map(|t| t.graph)
        }
        NamedFixture::Dm8 => {
            // a_i = i - 1, b_i = i + 3
            let cross: [[bool; 4]; 4] = [
                [true, false, false, false],
                [false, true, false, false],
                [true, true, true, false],
                [true, true, false, true],
            ];
            Trigraph::from_fn(8, |u, v| match (u < 4, v < 4) {
                (true, true) | (false, false) => Strong,
                _ if cross[u][v - 4] => Strong,
                _ => StrongAnti,
            })
        }
        NamedFixture::C4JoinC5 => Trigraph::from_fn(9, |u, v| {
            let c4 = |x: usize, y: usize| (y - x) % 2 == 1;
            let c5 = |x: usize, y: usize| matches!(y - x, 1 | 4);
            match (u < 4, v < 4) {
                (true, true) if c4(u, v) => Strong,
                (false, false) if c5(u, v) => Strong,
                (true, false) => Strong,
                _ => StrongAnti,
            }
        }),
        NamedFixture::Tri => Trigraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]),
    };
    built.expect("fixtures are well formed")
}

/// Two strong `k`-cliques `a_i = i` and `b_i = k + i` joined by the strong
/// perfect matching `a_i b_i`.
pub fn gen_cliques_matching(k: usize) -> Result<Trigraph> {
    if k < 2 {
        return Err(Error::InvalidSpec(format!("cliques-matching needs k >= 2, got {k}")));
    }
    Trigraph::from_fn(2 * k, |u, v| {
        if (u < k) == (v < k) || v == u + k {
            Strong
        } else {
            StrongAnti
        }
    })
}

/// Part sizes per vertex and cross-patterns per semiedge.
///
/// A pattern for semiedge `(u, v)` with `u < v` has one row per vertex of
/// `I(u)` and one column per vertex of `I(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThickenSpec {
    sizes: Vec<usize>,
    patterns: BTreeMap<(usize, usize), Vec<Vec<Adjacency>>>,
}

impl ThickenSpec {
    /// Every part a singleton, no patterns.
    pub fn singletons(n: usize) -> Self {
        ThickenSpec {
            sizes: vec![1; n],
            patterns: BTreeMap::new(),
        }
    }

    /// Thickens semiedge `(u, v)` into the 2x2 crossed pattern.
    pub fn crossed(n: usize, u: usize, v: usize) -> Self {
        let mut spec = ThickenSpec::singletons(n);
        spec.set_size(u, 2);
        spec.set_size(v, 2);
        spec.set_pattern(u, v, crossed_pattern());
        spec
    }

    pub fn set_size(&mut self, v: usize, size: usize) -> &mut Self {
        self.sizes[v] = size;
        self
    }

    /// Rows follow `u`, columns follow `v`, in either order of `u` and `v`.
    pub fn set_pattern(&mut self, u: usize, v: usize, pattern: Vec<Vec<Adjacency>>) -> &mut Self {
        let stored = if u < v { pattern } else { transpose(&pattern) };
        self.patterns.insert((u.min(v), u.max(v)), stored);
        self
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn patterns(&self) -> &BTreeMap<(usize, usize), Vec<Vec<Adjacency>>> {
        &self.patterns
    }
}

/// `[[strong, strong-anti], [strong-anti, strong]]`, the smallest pattern
/// containing a square.
pub fn crossed_pattern() -> Vec<Vec<Adjacency>> {
    vec![vec![Strong, StrongAnti], vec![StrongAnti, Strong]]
}

fn transpose(m: &[Vec<Adjacency>]) -> Vec<Vec<Adjacency>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

/// What became of one semiedge of the thin trigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiedgeReport {
    pub u: usize,
    pub v: usize,
    pub contains_square: bool,
    pub square_connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thickened {
    pub graph: Trigraph,
    pub map: ThickeningMap,
    pub semiedges: Vec<SemiedgeReport>,
}

impl Thickened {
    /// Every thickened semiedge became a square-connected pair, so the
    /// antithickening can recover the thin trigraph.
    pub fn is_recoverable(&self) -> bool {
        self.semiedges
            .iter()
            .all(|s| s.square_connected || self.map.part(s.u).len() + self.map.part(s.v).len() == 2)
    }
}

/// Expands each vertex `v` of `gp` into a strong clique `I(v)`; parts are
/// consecutive blocks in vertex order. Semiedges with a pattern become
/// mixed pairs; a semiedge between singleton parts without a pattern stays
/// a semiedge.
pub fn thicken(gp: &Trigraph, spec: &ThickenSpec) -> Result<Thickened> {
    let n = gp.n();
    if spec.sizes.len() != n {
        return Err(Error::InvalidSpec(format!(
            "{} part sizes for {n} vertices",
            spec.sizes.len()
        )));
    }
    if let Some(v) = spec.sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidSpec(format!("part {v} has size 0")));
    }
    for (&(u, v), pat) in &spec.patterns {
        if v >= n || gp.at(u, v) != Semi {
            return Err(Error::InvalidSpec(format!("pattern on ({u}, {v}), which is not a semiedge")));
        }
        if pat.len() != spec.sizes[u] || pat.iter().any(|row| row.len() != spec.sizes[v]) {
            return Err(Error::InvalidSpec(format!(
                "pattern on ({u}, {v}) is not {}x{}",
                spec.sizes[u], spec.sizes[v]
            )));
        }
        let entries = || pat.iter().flatten();
        if entries().any(|&a| a == Semi) {
            return Err(Error::InvalidSpec(format!("pattern on ({u}, {v}) has a semi entry")));
        }
        if entries().all(|&a| a == Strong) || entries().all(|&a| a == StrongAnti) {
            return Err(Error::InvalidSpec(format!("pattern on ({u}, {v}) is uniform")));
        }
    }
    for (u, v) in gp.semiedges() {
        let thin = spec.sizes[u] == 1 && spec.sizes[v] == 1;
        if !thin && !spec.patterns.contains_key(&(u, v)) {
            return Err(Error::InvalidSpec(format!("semiedge ({u}, {v}) needs a pattern")));
        }
    }

    let mut start = Vec::with_capacity(n + 1);
    start.push(0);
    for &s in &spec.sizes {
        start.push(start.last().unwrap() + s);
    }
    let total = start[n];
    let mut owner = Vec::with_capacity(total);
    for (v, &s) in spec.sizes.iter().enumerate() {
        owner.extend(std::iter::repeat(v).take(s));
    }
    let graph = Trigraph::from_fn(total, |x, y| {
        let (u, v) = (owner[x], owner[y]);
        if u == v {
            return Strong;
        }
        match (gp.at(u, v), spec.patterns.get(&(u, v))) {
            (Semi, Some(pat)) => pat[x - start[u]][y - start[v]],
            (a, _) => a,
        }
    })?;
    let parts: Vec<VertexSet> = (0..n).map(|v| (start[v]..start[v + 1]).collect()).collect();
    let map = ThickeningMap::new(total, parts)?;
    let semiedges = gp
        .semiedges()
        .map(|(u, v)| {
            let pair = CliquePair::new(map.part(u).clone(), map.part(v).clone())?;
            Ok(SemiedgeReport {
                u,
                v,
                contains_square: contains_square(&graph, &pair.vertices()).is_some(),
                square_connected: is_square_connected(&graph, &pair).unwrap_or(false),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Thickened {
        graph,
        map,
        semiedges,
    })
}

fn sample_base(n: usize, rng: &mut ChaCha8Rng) -> Result<Trigraph> {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        if rng.gen_bool(0.9) {
            edges.push((i, (i + 1) % n));
        }
        if rng.gen_bool(0.3) {
            edges.push((i, (i + 2) % n));
        }
    }
    if rng.gen_bool(0.2) {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        edges.push((x, y));
    }
    let mut matrix = vec![StrongAnti; n * n];
    let key = |u: usize, v: usize| label[u].min(label[v]) * n + label[u].max(label[v]);
    for &(u, v) in &edges {
        if u != v {
            matrix[key(u, v)] = Strong;
        }
    }
    edges.shuffle(rng);
    let want = rng.gen_range(0..=n / 4);
    let mut used = vec![false; n];
    let mut semis = 0;
    for &(u, v) in &edges {
        if semis == want {
            break;
        }
        if u != v && !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            matrix[key(u, v)] = Semi;
            semis += 1;
        }
    }
    Trigraph::from_fn(n, |u, v| matrix[u * n + v])
}

/// A connected, non-degenerate, laminar trigraph: a sparse circular band of
/// strong edges with up to `n / 4` semiedges, randomly relabelled, drawn by
/// rejection sampling. Deterministic in `(n, seed)`.
pub fn gen_random_laminar_base(n: usize, seed: u64) -> Result<Trigraph> {
    if n < 4 {
        return Err(Error::InvalidSpec(format!("random base needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_BUDGET {
        let g = sample_base(n, &mut rng)?;
        if g.is_connected() && !g.classify().degenerate && is_laminar(&g) {
            return Ok(g);
        }
    }
    Err(Error::BudgetExhausted(SAMPLING_BUDGET))
}

/// A connected trigraph with a per-sample strong-edge density in
/// `[0.2, 0.8)` and semiedge rate in `[0, 0.35)`. Deterministic in `seed`.
pub fn gen_random_trigraph(n: usize, seed: u64) -> Result<Trigraph> {
    if n == 0 {
        return Err(Error::InvalidSpec("random trigraph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_BUDGET {
        let p: f64 = rng.gen_range(0.2..0.8);
        let q: f64 = rng.gen_range(0.0..0.35);
        let mut used = vec![false; n];
        let mut values = vec![StrongAnti; n * n];
        for u in 0..n {
            for v in u + 1..n {
                values[u * n + v] = if !used[u] && !used[v] && rng.gen_bool(q) {
                    used[u] = true;
                    used[v] = true;
                    Semi
                } else if rng.gen_bool(p) {
                    Strong
                } else {
                    StrongAnti
                };
            }
        }
        let g = Trigraph::from_fn(n, |u, v| values[u * n + v])?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BudgetExhausted(SAMPLING_BUDGET))
}

/// A strong/strong-anti `rows x cols` pattern whose thickened pair is
/// square-connected. Needs `rows, cols >= 2`.
pub fn random_square_connected_pattern<R: Rng>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Result<Vec<Vec<Adjacency>>> {
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidSpec(format!(
            "a square-connected {rows}x{cols} pattern needs both sides >= 2"
        )));
    }
    let pair = CliquePair::new((0..rows).collect::<VertexSet>(), (rows..rows + cols).collect::<VertexSet>())?;
    for _ in 0..SAMPLING_BUDGET {
        let pat: Vec<Vec<Adjacency>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.5) { Strong } else { StrongAnti }).collect())
            .collect();
        let g = Trigraph::from_fn(rows + cols, |u, v| match (u < rows, v < rows) {
            (true, false) => pat[u][v - rows],
            _ => Strong,
        })?;
        if is_square_connected(&g, &pair)? {
            return Ok(pat);
        }
    }
    Err(Error::BudgetExhausted(SAMPLING_BUDGET))
}

/// Thickens each semiedge of `gp` into a random square-connected pair with
/// sides of size 2 or 3, leaving about a quarter of them as semiedges. All
/// other vertices stay singletons, so the spec can be undone by the
/// optimal antithickening.
pub fn random_recoverable_spec(gp: &Trigraph, seed: u64) -> Result<ThickenSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spec = ThickenSpec::singletons(gp.n());
    for (u, v) in gp.semiedges().collect::<Vec<_>>() {
        if rng.gen_bool(0.25) {
            continue;
        }
        let (r, c) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        spec.set_size(u, r);
        spec.set_size(v, c);
        spec.set_pattern(u, v, random_square_connected_pattern(r, c, &mut rng)?);
    }
    Ok(spec)
}
