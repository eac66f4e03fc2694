//! Core types: tournaments, partial digraphs, vertex orderings, exact
//! directed densities, and the backward-arc graph.
//!
//! A tournament stores a full n x n bit matrix (both arc directions
//! materialized) so that arc queries are O(1) and neighborhood intersections
//! are word-parallel. The pair-bit form (one bit per unordered pair, i < j,
//! set iff i -> j) is used only for I/O.
//!
//! All types are immutable after construction. Vertex labels are 0-based
//! internally; human-facing reports render them 1-based.

use crate::{rat, Error, Rat, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Complete orientation on n labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, bits={})", self.n, self.pair_bits())
    }
}

impl Tournament {
    /// Number of unordered pairs, n(n-1)/2.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Builds a tournament by orienting every pair i < j with `forward(i, j)`:
    /// true means i -> j.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Tournament {
        let words = n.div_ceil(64).max(1);
        let mut t = Tournament {
            n,
            words,
            bits: vec![0; n * words],
        };
        for i in 0..n {
            for j in (i + 1)..n {
                if forward(i, j) {
                    t.set_arc(i, j);
                } else {
                    t.set_arc(j, i);
                }
            }
        }
        t
    }

    /// Builds a tournament from the row-major pair-bit sequence
    /// (pairs (i, j) with i < j; a set bit means i -> j).
    pub fn from_pair_bits(n: usize, bits: &[bool]) -> Result<Tournament> {
        if bits.len() != Self::pair_count(n) {
            return Err(Error::Format(format!(
                "pair-bit length {} does not match n={} (expected {})",
                bits.len(),
                n,
                Self::pair_count(n)
            )));
        }
        let mut k = 0;
        Ok(Self::from_fn(n, |_, _| {
            let b = bits[k];
            k += 1;
            b
        }))
    }

    /// Builds a tournament whose arcs are forward under `theta` except for the
    /// listed backward arcs `(tail, head)` (each must point against `theta`).
    pub fn from_backward_arcs(
        n: usize,
        theta: &Ordering,
        backward: &[(usize, usize)],
    ) -> Result<Tournament> {
        if theta.len() != n {
            return Err(Error::Domain("ordering length differs from n".into()));
        }
        let set: BTreeSet<(usize, usize)> = backward.iter().copied().collect();
        for &(a, b) in &set {
            if a >= n || b >= n || a == b {
                return Err(Error::Domain(format!("bad backward arc ({a}, {b})")));
            }
            if theta.position(a) < theta.position(b) {
                return Err(Error::Domain(format!(
                    "arc ({a}, {b}) is not backward under the ordering"
                )));
            }
            if set.contains(&(b, a)) {
                return Err(Error::Domain(format!("both ({a}, {b}) and ({b}, {a}) listed")));
            }
        }
        Ok(Self::from_fn(n, |i, j| {
            // forward means the theta-earlier endpoint beats the other,
            // unless the pair is listed backward.
            let (early, late) = if theta.position(i) < theta.position(j) {
                (i, j)
            } else {
                (j, i)
            };
            if set.contains(&(late, early)) {
                early != i
            } else {
                early == i
            }
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    /// True iff the arc u -> v is present.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Out-neighborhood of `v` as a bitmask; only valid for n <= 64.
    #[inline]
    pub fn out_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(v, u))
    }

    /// The tournament with every arc reversed.
    pub fn complement(&self) -> Tournament {
        Self::from_fn(self.n, |i, j| self.has_arc(j, i))
    }

    /// Subtournament induced by `xs` (which must be a set of vertices).
    /// Returns the induced tournament together with the relabeling map:
    /// new label k corresponds to old vertex `map[k]`.
    pub fn induced(&self, xs: &[usize]) -> Result<(Tournament, Vec<usize>)> {
        let mut map: Vec<usize> = xs.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.len() != xs.len() {
            return Err(Error::Domain("induced set has repeated vertices".into()));
        }
        if map.iter().any(|&v| v >= self.n) {
            return Err(Error::Domain("induced set is not a subset of V".into()));
        }
        let t = Self::from_fn(map.len(), |i, j| self.has_arc(map[i], map[j]));
        Ok((t, map))
    }

    /// Copy of the tournament with the pair {u, v} forced to u -> v.
    pub fn with_arc(&self, u: usize, v: usize) -> Tournament {
        Self::from_fn(self.n, |i, j| {
            if (i, j) == (u, v) {
                true
            } else if (i, j) == (v, u) {
                false
            } else {
                self.has_arc(i, j)
            }
        })
    }

    /// Row-major pair bits as a '0'/'1' string.
    pub fn pair_bits(&self) -> String {
        let mut s = String::with_capacity(Self::pair_count(self.n));
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                s.push(if self.has_arc(i, j) { '1' } else { '0' });
            }
        }
        s
    }

    /// Serializes to the TRN v1 text format: line 1 is n, line 2 the pair bits.
    pub fn to_trn(&self) -> String {
        format!("{}\n{}\n", self.n, self.pair_bits())
    }

    /// Parses the TRN v1 text format.
    pub fn parse_trn(text: &str) -> Result<Tournament> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Format("empty TRN input".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Format("TRN line 1 is not a vertex count".into()))?;
        let bits_line = if Self::pair_count(n) == 0 {
            String::new()
        } else {
            lines
                .next()
                .ok_or_else(|| Error::Format("TRN missing pair-bit line".into()))?
                .trim()
                .to_string()
        };
        let mut bits = Vec::with_capacity(bits_line.len());
        for ch in bits_line.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Format(format!("bad pair-bit character {ch:?}"))),
            }
        }
        Self::from_pair_bits(n, &bits)
    }
}

/// Permutation of the vertex labels; position 0 is the leftmost vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl Ordering {
    pub fn identity(n: usize) -> Ordering {
        Ordering {
            perm: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Ordering> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::Domain("not a permutation of 0..n-1".into()));
            }
            pos[v] = i;
        }
        Ok(Ordering { perm, pos })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Vertex at position `i` (0-based).
    #[inline]
    pub fn vertex_at(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Position of vertex `v` (0-based).
    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn reversed(&self) -> Ordering {
        let mut perm = self.perm.clone();
        perm.reverse();
        Ordering::from_perm(perm).expect("reverse of a permutation")
    }

    /// Restriction to a vertex subset, keeping relative order; vertices retain
    /// their labels.
    pub fn restricted(&self, keep: &BTreeSet<usize>) -> Vec<usize> {
        self.perm.iter().copied().filter(|v| keep.contains(v)).collect()
    }

    /// One line of space-separated labels.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        format!("{}\n", parts.join(" "))
    }

    pub fn parse_text(text: &str) -> Result<Ordering> {
        let mut perm = Vec::new();
        for tok in text.split_whitespace() {
            perm.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad ordering token {tok:?}")))?,
            );
        }
        Self::from_perm(perm)
    }
}

/// Directed graph in which some vertex pairs may carry no arc at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    present: BTreeSet<(usize, usize)>,
    absent_pairs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    /// `absent_pairs` are stored with the smaller label first.
    pub fn new(
        n: usize,
        present: BTreeSet<(usize, usize)>,
        absent_pairs: BTreeSet<(usize, usize)>,
    ) -> Result<Digraph> {
        for &(a, b) in &present {
            if a >= n || b >= n || a == b {
                return Err(Error::Domain(format!("bad arc ({a}, {b})")));
            }
            if present.contains(&(b, a)) {
                return Err(Error::Domain(format!(
                    "both orientations of {{{a}, {b}}} present"
                )));
            }
        }
        for &(a, b) in &absent_pairs {
            if a >= b || b >= n {
                return Err(Error::Domain(format!("bad absent pair ({a}, {b})")));
            }
            if present.contains(&(a, b)) || present.contains(&(b, a)) {
                return Err(Error::Domain(format!(
                    "pair {{{a}, {b}}} both absent and oriented"
                )));
            }
        }
        Ok(Digraph {
            n,
            present,
            absent_pairs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.present.contains(&(u, v))
    }

    pub fn is_absent_pair(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.absent_pairs.contains(&key)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.present.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.present.len()
    }

    pub fn absent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.absent_pairs.iter().copied()
    }

    /// Restriction to a vertex subset with relabeling; new label k corresponds
    /// to old vertex `map[k]`.
    pub fn induced(&self, xs: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let mut map: Vec<usize> = xs.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.len() != xs.len() || map.iter().any(|&v| v >= self.n) {
            return Err(Error::Domain("bad induced vertex set".into()));
        }
        let back: std::collections::HashMap<usize, usize> =
            map.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let present = self
            .present
            .iter()
            .filter(|(a, b)| back.contains_key(a) && back.contains_key(b))
            .map(|&(a, b)| (back[&a], back[&b]))
            .collect();
        let absent = self
            .absent_pairs
            .iter()
            .filter(|(a, b)| back.contains_key(a) && back.contains_key(b))
            .map(|&(a, b)| {
                let (x, y) = (back[&a], back[&b]);
                (x.min(y), x.max(y))
            })
            .collect();
        Ok((Digraph::new(map.len(), present, absent)?, map))
    }
}

/// Exact directed density d(X, Y) = e_{X,Y} / (|X| |Y|).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityValue {
    pub arcs: u64,
    pub pairs: u64,
}

impl DensityValue {
    pub fn value(&self) -> Rat {
        rat(self.arcs as i64, self.pairs as i64)
    }
}

/// Counts arcs from X to Y exactly. X and Y must be disjoint and nonempty.
pub fn density(t: &Tournament, xs: &[usize], ys: &[usize]) -> Result<DensityValue> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::Domain("density over an empty set".into()));
    }
    let xset: BTreeSet<usize> = xs.iter().copied().collect();
    let yset: BTreeSet<usize> = ys.iter().copied().collect();
    if xset.len() != xs.len() || yset.len() != ys.len() {
        return Err(Error::Domain("density set has repeated vertices".into()));
    }
    if xset.intersection(&yset).next().is_some() {
        return Err(Error::Domain("density sets overlap".into()));
    }
    if xset.iter().chain(yset.iter()).any(|&v| v >= t.n()) {
        return Err(Error::Domain("density set outside V".into()));
    }
    let mut arcs = 0u64;
    for &x in &xset {
        for &y in &yset {
            if t.has_arc(x, y) {
                arcs += 1;
            }
        }
    }
    Ok(DensityValue {
        arcs,
        pairs: (xset.len() * yset.len()) as u64,
    })
}

/// Undirected graph of backward arcs under an ordering, indexed by position.
#[derive(Clone, Debug)]
pub struct BackwardGraph {
    n: usize,
    /// Sorted neighbor lists, both endpoints as positions in theta.
    adj: Vec<Vec<usize>>,
}

impl BackwardGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors_of_position(&self, p: usize) -> &[usize] {
        &self.adj[p]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as position pairs (earlier, later).
    pub fn edges_by_position(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, list) in self.adj.iter().enumerate() {
            for &q in list {
                if p < q {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Edges as vertex pairs, each ordered by position in `theta`.
    pub fn edges_by_vertex(&self, theta: &Ordering) -> Vec<(usize, usize)> {
        self.edges_by_position()
            .into_iter()
            .map(|(p, q)| (theta.vertex_at(p), theta.vertex_at(q)))
            .collect()
    }

    /// Connected components as sorted position lists, ordered by first position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(p) = stack.pop() {
                comp.push(p);
                for &q in &self.adj[p] {
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Builds the backward-arc graph of `t` under `theta`: positions p < q are
/// joined iff the arc from the later vertex to the earlier one is in `t`.
pub fn backward_graph(t: &Tournament, theta: &Ordering) -> BackwardGraph {
    assert_eq!(t.n(), theta.len(), "ordering must cover V(T)");
    let n = t.n();
    let mut adj = vec![Vec::new(); n];
    for p in 0..n {
        for q in (p + 1)..n {
            if t.has_arc(theta.vertex_at(q), theta.vertex_at(p)) {
                adj[p].push(q);
                adj[q].push(p);
            }
        }
    }
    BackwardGraph { n, adj }
}
