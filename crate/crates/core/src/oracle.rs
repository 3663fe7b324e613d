//! Brute-force ground truth for small graphs.
//!
//! Everything here enumerates labeled structures exhaustively and groups
//! them by a canonical form obtained from a full scan over all vertex
//! relabelings. It is deliberately the simplest possible implementation:
//! trustworthiness matters more than speed, since these counts are the
//! independent check on the cycle-index pipeline.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Hard ceiling for canonicalization (8! relabelings per graph).
pub const CANONICAL_LIMIT: usize = 8;
/// Default ceiling for whole-family enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 6;
/// Opt-in ceiling for whole-family enumeration.
pub const MAX_ENUMERATION_LIMIT: usize = 7;

/// A simple undirected graph on at most 8 vertices. The adjacency is a
/// bitset over the vertex pairs (i, j) with i < j, sorted lexicographically:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: u32,
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    let before: usize = (0..i).map(|a| n - 1 - a).sum();
    before + (j - i - 1)
}

impl SmallGraph {
    pub fn new(n: usize, adj: u32) -> Self {
        assert!(n <= CANONICAL_LIMIT);
        assert!(n < 2 || adj < (1u32 << pair_count(n)));
        SmallGraph { n, adj }
    }

    pub fn empty(n: usize) -> Self {
        SmallGraph::new(n, 0)
    }

    pub fn complete(n: usize) -> Self {
        let bits = if n < 2 { 0 } else { (1u32 << pair_count(n)) - 1 };
        SmallGraph::new(n, bits)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SmallGraph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacency_bits(&self) -> u32 {
        self.adj
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.adj |= 1 << pair_index(i, j, self.n);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.adj & (1 << pair_index(i, j, self.n)) != 0
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// Connectivity by search, skipping an optional deleted vertex.
    fn connected_without(&self, deleted: Option<usize>) -> bool {
        let vertices: Vec<usize> = (0..self.n).filter(|&v| Some(v) != deleted).collect();
        let Some(&start) = vertices.first() else {
            return false;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut found = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if Some(u) != deleted && !seen[u] {
                    seen[u] = true;
                    found += 1;
                    stack.push(u);
                }
            }
        }
        found == vertices.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_without(None)
    }

    /// Proper 2-colorability, by breadth-first 2-coloring of every
    /// component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let v_color = color[v].expect("colored before push");
                for u in self.neighbors(v) {
                    match color[u] {
                        None => {
                            color[u] = Some(!v_color);
                            stack.push(u);
                        }
                        Some(c) if c == v_color => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Nonseparability: connected with no cut vertex. The one-vertex graph
    /// and the single edge count as nonseparable.
    pub fn is_two_connected(&self) -> bool {
        match self.n {
            0 => false,
            1 => true,
            2 => self.has_edge(0, 1),
            _ => {
                self.is_connected()
                    && (0..self.n).all(|v| self.connected_without(Some(v)))
            }
        }
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, adj={:b})", self.n, self.adj)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn go(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            current.swap(i, k - 1);
            go(k - 1, current, out);
            current.swap(i, k - 1);
        }
    }
    go(n, &mut current, &mut out);
    if n == 0 {
        out.push(Vec::new());
    }
    out
}

/// For each permutation, where each pair index lands after relabeling.
fn pair_maps(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|perm| {
            let mut map = vec![0usize; pair_count(n)];
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    map[pair_index(i, j, n)] = pair_index(a, b, n);
                }
            }
            map
        })
        .collect()
}

fn relabel_bits(adj: u32, map: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = adj;
    while bits != 0 {
        let p = bits.trailing_zeros() as usize;
        out |= 1 << map[p];
        bits &= bits - 1;
    }
    out
}

/// The minimum adjacency bitset over all vertex relabelings. Two graphs are
/// isomorphic exactly when their canonical forms agree.
pub fn canonical_form(g: &SmallGraph) -> Result<u32> {
    if g.n > CANONICAL_LIMIT {
        return Err(Error::OracleLimit { n: g.n, limit: CANONICAL_LIMIT });
    }
    let perms = permutations(g.n);
    let maps = pair_maps(g.n, &perms);
    Ok(maps.iter().map(|map| relabel_bits(g.adj, map)).min().unwrap_or(0))
}

/// A graph together with a black/white vertex coloring (bit set = black).
/// When used as a bicolored graph, every edge must join opposite colors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColoredSmallGraph {
    pub graph: SmallGraph,
    pub colors: u8,
}

impl ColoredSmallGraph {
    /// Builds a bicolored graph, checking the proper-coloring invariant.
    pub fn new_bicolored(graph: SmallGraph, colors: u8) -> Self {
        let colored = ColoredSmallGraph { graph, colors };
        assert!(colored.is_properly_bicolored(), "edge joins equal colors");
        colored
    }

    pub fn is_properly_bicolored(&self) -> bool {
        let n = self.graph.n;
        for i in 0..n {
            for j in i + 1..n {
                if self.graph.has_edge(i, j)
                    && (self.colors >> i) & 1 == (self.colors >> j) & 1
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn color_flipped(&self) -> ColoredSmallGraph {
        let mask = if self.graph.n == 8 { 0xff } else { (1u8 << self.graph.n) - 1 };
        ColoredSmallGraph { graph: self.graph, colors: self.colors ^ mask }
    }

    fn encode(colors: u8, adj: u32, n: usize) -> u64 {
        ((colors as u64) << pair_count(n)) | adj as u64
    }

    fn decode(code: u64, n: usize) -> ColoredSmallGraph {
        let adj = (code & ((1u64 << pair_count(n)) - 1)) as u32;
        let colors = (code >> pair_count(n)) as u8;
        ColoredSmallGraph { graph: SmallGraph::new(n, adj), colors }
    }
}

/// Canonical form of a colored graph: colors are part of the structure, so
/// the minimum runs over vertex relabelings only (no color swap).
pub fn canonical_colored_form(g: &ColoredSmallGraph) -> Result<u64> {
    let n = g.graph.n;
    if n > CANONICAL_LIMIT {
        return Err(Error::OracleLimit { n, limit: CANONICAL_LIMIT });
    }
    let perms = permutations(n);
    let maps = pair_maps(n, &perms);
    let mut best = u64::MAX;
    for (perm, map) in perms.iter().zip(&maps) {
        let adj = relabel_bits(g.graph.adj, map);
        let mut colors = 0u8;
        for (v, &image) in perm.iter().enumerate() {
            if (g.colors >> v) & 1 == 1 {
                colors |= 1 << image;
            }
        }
        best = best.min(ColoredSmallGraph::encode(colors, adj, n));
    }
    if n == 0 {
        best = 0;
    }
    Ok(best)
}

/// Canonical representatives of every unlabeled simple graph on n vertices.
/// Enumerations are cached per process; the scan at n = 7 visits two
/// million graphs and is only reached through the opt-in guard.
pub fn plain_classes(n: usize) -> Result<Vec<SmallGraph>> {
    Ok(plain_classes_cached(n)?.as_ref().clone())
}

fn plain_classes_cached(n: usize) -> Result<Arc<Vec<SmallGraph>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SmallGraph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("class cache").get(&n) {
        return Ok(hit.clone());
    }
    if n > MAX_ENUMERATION_LIMIT {
        return Err(Error::OracleLimit { n, limit: MAX_ENUMERATION_LIMIT });
    }
    let perms = permutations(n);
    let maps = pair_maps(n, &perms);
    let mut seen = HashSet::new();
    for adj in 0u32..1 << pair_count(n) {
        let canon = maps.iter().map(|map| relabel_bits(adj, map)).min().unwrap_or(0);
        seen.insert(canon);
    }
    let mut forms: Vec<u32> = seen.into_iter().collect();
    forms.sort_unstable();
    let classes = Arc::new(
        forms
            .into_iter()
            .map(|adj| SmallGraph::new(n, adj))
            .collect::<Vec<_>>(),
    );
    cache
        .lock()
        .expect("class cache")
        .insert(n, classes.clone());
    Ok(classes)
}

/// Canonical representatives of every unlabeled bicolored graph on n
/// vertices (colors are part of the structure).
pub fn bicolored_classes(n: usize) -> Result<Vec<ColoredSmallGraph>> {
    Ok(bicolored_classes_cached(n)?.as_ref().clone())
}

fn bicolored_classes_cached(n: usize) -> Result<Arc<Vec<ColoredSmallGraph>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<ColoredSmallGraph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("class cache").get(&n) {
        return Ok(hit.clone());
    }
    if n > MAX_ENUMERATION_LIMIT {
        return Err(Error::OracleLimit { n, limit: MAX_ENUMERATION_LIMIT });
    }
    let perms = permutations(n);
    let maps = pair_maps(n, &perms);
    let mut seen = HashSet::new();
    let color_max: u16 = 1 << n;
    for colors in 0..color_max {
        let colors = colors as u8;
        // pairs joining opposite colors
        let mut allowed = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if (colors >> i) & 1 != (colors >> j) & 1 {
                    allowed |= 1 << pair_index(i, j, n);
                }
            }
        }
        let mut sub = allowed;
        loop {
            let mut best = u64::MAX;
            for (perm, map) in perms.iter().zip(&maps) {
                let adj = relabel_bits(sub, map);
                let mut relabeled_colors = 0u8;
                for (v, &image) in perm.iter().enumerate() {
                    if (colors >> v) & 1 == 1 {
                        relabeled_colors |= 1 << image;
                    }
                }
                best = best.min(ColoredSmallGraph::encode(relabeled_colors, adj, n));
            }
            if n == 0 {
                best = 0;
            }
            seen.insert(best);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & allowed;
        }
    }
    let mut forms: Vec<u64> = seen.into_iter().collect();
    forms.sort_unstable();
    let classes = Arc::new(
        forms
            .into_iter()
            .map(|code| ColoredSmallGraph::decode(code, n))
            .collect::<Vec<_>>(),
    );
    cache
        .lock()
        .expect("class cache")
        .insert(n, classes.clone());
    Ok(classes)
}

/// The graph families the oracle can count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleFamily {
    Bicolored,
    ConnectedBicolored,
    BicoloredTauSymmetric,
    Bipartite,
    ConnectedBipartite,
    BipartiteBlock,
}

impl OracleFamily {
    pub const ALL: [OracleFamily; 6] = [
        OracleFamily::Bicolored,
        OracleFamily::ConnectedBicolored,
        OracleFamily::BicoloredTauSymmetric,
        OracleFamily::Bipartite,
        OracleFamily::ConnectedBipartite,
        OracleFamily::BipartiteBlock,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            OracleFamily::Bicolored => "bicolored",
            OracleFamily::ConnectedBicolored => "connected-bicolored",
            OracleFamily::BicoloredTauSymmetric => "bicolored-tau-symmetric",
            OracleFamily::Bipartite => "bipartite",
            OracleFamily::ConnectedBipartite => "connected-bipartite",
            OracleFamily::BipartiteBlock => "bipartite-block",
        }
    }
}

impl FromStr for OracleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<OracleFamily> {
        OracleFamily::ALL
            .iter()
            .copied()
            .find(|family| family.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for OracleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Exhaustive unlabeled count for a family at the default guard (n ≤ 6).
pub fn oracle_count(family: OracleFamily, n: usize) -> Result<u64> {
    oracle_count_within(family, n, DEFAULT_ENUMERATION_LIMIT)
}

/// Exhaustive unlabeled count with an explicit guard; the guard itself may
/// not exceed 7.
pub fn oracle_count_within(family: OracleFamily, n: usize, limit: usize) -> Result<u64> {
    if limit > MAX_ENUMERATION_LIMIT {
        return Err(Error::OracleLimit { n: limit, limit: MAX_ENUMERATION_LIMIT });
    }
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    match family {
        OracleFamily::Bipartite => {
            Ok(plain_classes(n)?.iter().filter(|g| g.is_bipartite()).count() as u64)
        }
        OracleFamily::ConnectedBipartite => Ok(plain_classes(n)?
            .iter()
            .filter(|g| g.is_bipartite() && g.is_connected())
            .count() as u64),
        OracleFamily::BipartiteBlock => Ok(plain_classes(n)?
            .iter()
            .filter(|g| g.is_bipartite() && g.is_two_connected())
            .count() as u64),
        OracleFamily::Bicolored => Ok(bicolored_classes(n)?.len() as u64),
        OracleFamily::ConnectedBicolored => Ok(bicolored_classes(n)?
            .iter()
            .filter(|g| g.graph.is_connected())
            .count() as u64),
        OracleFamily::BicoloredTauSymmetric => {
            let mut count = 0u64;
            for class in bicolored_classes(n)? {
                let own = canonical_colored_form(&class)?;
                let flipped = canonical_colored_form(&class.color_flipped())?;
                if own == flipped {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}

/// Outcome of one pipeline-versus-oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub family: OracleFamily,
    pub n: usize,
    pub expected: u64,
    pub actual: BigInt,
}

impl OracleCheck {
    pub fn passed(&self) -> bool {
        BigInt::from(self.expected) == self.actual
    }
}

/// Compares generating-function coefficients (indexed by vertex count)
/// against the exhaustive counts for every `1 ≤ n ≤ limit`.
pub fn check_against_oracle(
    family: OracleFamily,
    coefficients: &[BigInt],
    limit: usize,
) -> Result<Vec<OracleCheck>> {
    let mut checks = Vec::new();
    for n in 1..=limit {
        let expected = oracle_count_within(family, n, limit)?;
        let actual = coefficients.get(n).cloned().unwrap_or_default();
        checks.push(OracleCheck { family, n, expected, actual });
    }
    Ok(checks)
}
