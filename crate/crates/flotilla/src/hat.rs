//! Constructions on top of a flotilla-galaxy ordering: regularization, the
//! hatted digraph with its corresponding ordering, the alpha/beta ordering
//! family, couple prefixes, signature vectors, and the two super tournaments.
//!
//! Couples pair the i-th boat with the i-th star. Boats are indexed by where
//! their interior run starts under the hatted ordering, stars by their
//! leftmost vertex; star lists shorter than the boat list are padded with
//! empty stars.

use crate::patterns::{decompose, Certificate, ComponentKind, Flavor};
use crate::tournament::{backward_graph, Digraph, Ordering, Tournament};
use crate::{Error, Result};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoatSide {
    Left,
    Right,
}

/// Role labels of one hatted boat; all fields are vertex labels of the hatted
/// digraph (originals keep their labels, the added vertex gets a fresh one).
#[derive(Clone, Debug)]
pub struct BoatRoles {
    pub side: BoatSide,
    pub left_exterior: usize,
    pub left_interior: usize,
    pub right_interior: usize,
    pub right_exterior: usize,
    pub added: usize,
}

impl BoatRoles {
    /// The five vertices in hatted-ordering order.
    pub fn quintuple(&self) -> [usize; 5] {
        match self.side {
            BoatSide::Left => [
                self.left_exterior,
                self.added,
                self.left_interior,
                self.right_interior,
                self.right_exterior,
            ],
            BoatSide::Right => [
                self.left_exterior,
                self.left_interior,
                self.right_interior,
                self.added,
                self.right_exterior,
            ],
        }
    }

    /// The three interior vertices in hatted-ordering order.
    pub fn interiors(&self) -> [usize; 3] {
        match self.side {
            BoatSide::Left => [self.added, self.left_interior, self.right_interior],
            BoatSide::Right => [self.left_interior, self.right_interior, self.added],
        }
    }
}

#[derive(Clone, Debug)]
pub struct StarRoles {
    pub center: usize,
    /// Leaves sorted by position.
    pub leaves: Vec<usize>,
}

/// The hatted digraph: one extra vertex per boat, two deliberately
/// unoriented pairs per boat, and everything else oriented forward along the
/// hatted ordering.
#[derive(Clone, Debug)]
pub struct HatDigraph {
    pub digraph: Digraph,
    /// Hatted ordering over the h + l labels.
    pub ordering: Ordering,
    /// Original vertex count; added vertices are labels h..h+l.
    pub h: usize,
    /// One entry per couple, in couple order.
    pub boats: Vec<BoatRoles>,
    /// Paired stars; trailing couples may have none.
    pub stars: Vec<Option<StarRoles>>,
}

impl HatDigraph {
    pub fn couple_count(&self) -> usize {
        self.boats.len()
    }

    /// Vertices of couple k (0-based): the hatted boat plus its star.
    pub fn couple_vertices(&self, k: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.boats[k].quintuple().to_vec();
        if let Some(star) = &self.stars[k] {
            vs.push(star.center);
            vs.extend(star.leaves.iter().copied());
        }
        vs
    }
}

/// Components of a recognized ordering, split into boats and stars with the
/// couple indexing applied.
struct Skeleton {
    boats: Vec<(BoatSide, [usize; 4])>, // (side, [x, u, v, y] labels), couple order
    stars: Vec<StarRoles>,              // star order
    singletons: Vec<usize>,             // labels, by position
}

fn skeleton(t: &Tournament, theta: &Ordering) -> Result<Skeleton> {
    let d = decompose(t, theta);
    if d.flavor == Flavor::NotRecognized {
        return Err(Error::Domain(format!(
            "ordering is not a flotilla-galaxy ordering: {}",
            d.violation.unwrap_or_default()
        )));
    }
    let mut boats = Vec::new();
    let mut stars = Vec::new();
    let mut singletons = Vec::new();
    for c in &d.components {
        match (&c.kind, &c.certificate) {
            (ComponentKind::Singleton, _) => singletons.push(c.vertices[0]),
            (ComponentKind::LeftBoat, Certificate::Boat(b)) => boats.push((
                BoatSide::Left,
                [
                    b.left_exterior,
                    b.left_interior,
                    b.right_interior,
                    b.right_exterior,
                ],
            )),
            (ComponentKind::RightBoat, Certificate::Boat(b)) => boats.push((
                BoatSide::Right,
                [
                    b.left_exterior,
                    b.left_interior,
                    b.right_interior,
                    b.right_exterior,
                ],
            )),
            (ComponentKind::LeftStar | ComponentKind::RightStar, Certificate::Star(s)) => {
                stars.push(StarRoles {
                    center: s.center,
                    leaves: s.leaves.clone(),
                })
            }
            _ => {
                return Err(Error::Structure(
                    "recognized decomposition carries an unexpected certificate".into(),
                ))
            }
        }
    }
    // Couple order: boats by interior-run start. A left boat's run begins in
    // the slot after its left exterior, a right boat's at its left interior;
    // doubling positions keeps the two kinds comparable without ties.
    boats.sort_by_key(|(side, roles)| match side {
        BoatSide::Left => 2 * theta.position(roles[0]) + 1,
        BoatSide::Right => 2 * theta.position(roles[1]),
    });
    stars.sort_by_key(|s| {
        theta
            .position(s.center)
            .min(s.leaves.iter().map(|&l| theta.position(l)).min().unwrap_or(usize::MAX))
    });
    singletons.sort_by_key(|&v| theta.position(v));
    Ok(Skeleton {
        boats,
        stars,
        singletons,
    })
}

/// Appends one vertex per singleton so that every component of the new
/// backward graph is a star or a boat. The new vertex for the j-th singleton
/// beats exactly that singleton against the ordering.
pub fn regularize(t: &Tournament, theta: &Ordering) -> Result<(Tournament, Ordering)> {
    let sk = skeleton(t, theta)?;
    let h = t.n();
    let singles = &sk.singletons;
    if singles.is_empty() {
        return Ok((t.clone(), theta.clone()));
    }
    let n = h + singles.len();
    let mut perm: Vec<usize> = theta.perm().to_vec();
    perm.extend(h..n);
    let theta_plus = Ordering::from_perm(perm)?;
    let mut backward = backward_pairs(t, theta);
    for (j, &s) in singles.iter().enumerate() {
        backward.push((h + j, s));
    }
    let t_plus = Tournament::from_backward_arcs(n, &theta_plus, &backward)?;
    let check = decompose(&t_plus, &theta_plus);
    if check.flavor == Flavor::NotRecognized || !check.regular {
        return Err(Error::Structure(
            "regularization did not produce a regular flotilla-galaxy".into(),
        ));
    }
    Ok((t_plus, theta_plus))
}

/// Backward arcs of `t` under `theta` as (tail, head) vertex pairs.
pub fn backward_pairs(t: &Tournament, theta: &Ordering) -> Vec<(usize, usize)> {
    backward_graph(t, theta)
        .edges_by_vertex(theta)
        .into_iter()
        .map(|(earlier, later)| (later, earlier))
        .collect()
}

/// Builds the hatted digraph of a regular flotilla-galaxy ordering.
pub fn hat(t: &Tournament, theta: &Ordering) -> Result<HatDigraph> {
    let sk = skeleton(t, theta)?;
    if !sk.singletons.is_empty() {
        return Err(Error::Domain(
            "hat construction needs a regular ordering (no singleton components); regularize first"
                .into(),
        ));
    }
    if sk.stars.len() > sk.boats.len() {
        return Err(Error::Domain(format!(
            "{} stars but only {} boats: couples cannot absorb the extra stars",
            sk.stars.len(),
            sk.boats.len()
        )));
    }
    let h = t.n();
    let l = sk.boats.len();

    let mut boats: Vec<BoatRoles> = Vec::with_capacity(l);
    for (i, (side, roles)) in sk.boats.iter().enumerate() {
        boats.push(BoatRoles {
            side: *side,
            left_exterior: roles[0],
            left_interior: roles[1],
            right_interior: roles[2],
            right_exterior: roles[3],
            added: h + i,
        });
    }
    let stars: Vec<Option<StarRoles>> = (0..l)
        .map(|i| sk.stars.get(i).cloned())
        .collect();

    // Hatted ordering: walk theta, inserting each added vertex just after its
    // boat's left exterior (left boats) or just before the right exterior
    // (right boats).
    let mut perm: Vec<usize> = Vec::with_capacity(h + l);
    for p in 0..h {
        let v = theta.vertex_at(p);
        if let Some(b) = boats
            .iter()
            .find(|b| b.side == BoatSide::Right && b.right_exterior == v)
        {
            perm.push(b.added);
        }
        perm.push(v);
        if let Some(b) = boats
            .iter()
            .find(|b| b.side == BoatSide::Left && b.left_exterior == v)
        {
            perm.push(b.added);
        }
    }
    let ordering = Ordering::from_perm(perm)?;

    // Two unoriented pairs per boat: left exterior with left interior, right
    // interior with right exterior.
    let mut absent: BTreeSet<(usize, usize)> = BTreeSet::new();
    for b in &boats {
        let p1 = (
            b.left_exterior.min(b.left_interior),
            b.left_exterior.max(b.left_interior),
        );
        let p2 = (
            b.right_interior.min(b.right_exterior),
            b.right_interior.max(b.right_exterior),
        );
        absent.insert(p1);
        absent.insert(p2);
    }

    let mut present: BTreeSet<(usize, usize)> = BTreeSet::new();
    let n = h + l;
    for a in 0..n {
        for b in (a + 1)..n {
            if absent.contains(&(a, b)) {
                continue;
            }
            if a < h && b < h {
                // Originals keep their orientation.
                if t.has_arc(a, b) {
                    present.insert((a, b));
                } else {
                    present.insert((b, a));
                }
            } else {
                // Pairs touching an added vertex run forward along the
                // hatted ordering.
                if ordering.position(a) < ordering.position(b) {
                    present.insert((a, b));
                } else {
                    present.insert((b, a));
                }
            }
        }
    }
    let digraph = Digraph::new(n, present, absent)?;
    let hat = HatDigraph {
        digraph,
        ordering,
        h,
        boats,
        stars,
    };
    verify_hat(t, theta, &hat)?;
    Ok(hat)
}

/// Constructive checks: the hatted backward graph equals the original one,
/// and every added vertex is a singleton component of it.
fn verify_hat(t: &Tournament, theta: &Ordering, hat: &HatDigraph) -> Result<()> {
    let mut original: BTreeSet<(usize, usize)> = backward_graph(t, theta)
        .edges_by_vertex(theta)
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let hatted = digraph_backward_edges(&hat.digraph, &hat.ordering);
    for e in &hatted {
        if !original.remove(e) {
            return Err(Error::Structure(format!(
                "hatted backward edge {e:?} is not an original backward edge"
            )));
        }
        if e.0 >= hat.h || e.1 >= hat.h {
            return Err(Error::Structure(format!(
                "added vertex carries a backward arc: {e:?}"
            )));
        }
    }
    if !original.is_empty() {
        return Err(Error::Structure(format!(
            "original backward edges lost by the hat construction: {original:?}"
        )));
    }
    Ok(())
}

/// Backward edges of a partial digraph under an ordering, as normalized
/// vertex pairs.
pub fn digraph_backward_edges(d: &Digraph, theta: &Ordering) -> BTreeSet<(usize, usize)> {
    d.arcs()
        .filter(|&(a, b)| theta.position(a) > theta.position(b))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// All orderings reachable from `theta` by applying the alpha move to some
/// left boats and the beta move to some right boats: exactly 2^l of them.
pub fn theta_set(t: &Tournament, theta: &Ordering) -> Result<Vec<Ordering>> {
    let sk = skeleton(t, theta)?;
    let l = sk.boats.len();
    let mut out = Vec::with_capacity(1 << l);
    for choice in 0..(1u64 << l) {
        let mut perm: Vec<usize> = theta.perm().to_vec();
        for (i, (side, roles)) in sk.boats.iter().enumerate() {
            if choice >> i & 1 == 0 {
                continue;
            }
            match side {
                BoatSide::Left => {
                    // Move the left exterior just after the right interior.
                    let x = roles[0];
                    let xi = perm.iter().position(|&v| v == x).expect("member");
                    perm.remove(xi);
                    let vi = perm.iter().position(|&v| v == roles[2]).expect("member");
                    perm.insert(vi + 1, x);
                }
                BoatSide::Right => {
                    // Move the right exterior just before the left interior.
                    let y = roles[3];
                    let yi = perm.iter().position(|&v| v == y).expect("member");
                    perm.remove(yi);
                    let ui = perm.iter().position(|&v| v == roles[1]).expect("member");
                    perm.insert(ui, y);
                }
            }
        }
        out.push(Ordering::from_perm(perm)?);
    }
    let distinct: BTreeSet<Vec<usize>> = out.iter().map(|o| o.perm().to_vec()).collect();
    if distinct.len() != out.len() {
        return Err(Error::Structure("ordering family is not distinct".into()));
    }
    Ok(out)
}

/// The k-couple prefix: the original tournament restricted to the first k
/// couples, the hatted digraph restricted likewise, and their orderings.
pub struct Prefix {
    pub tournament: Tournament,
    /// New label -> original label, for the tournament restriction.
    pub map: Vec<usize>,
    pub hat: Digraph,
    /// New label -> original hatted label.
    pub hat_map: Vec<usize>,
    pub hat_ordering: Ordering,
}

pub fn prefix(t: &Tournament, theta: &Ordering, k: usize) -> Result<Prefix> {
    let hat = hat(t, theta)?;
    if k > hat.couple_count() {
        return Err(Error::Domain(format!(
            "prefix index {k} out of range (l = {})",
            hat.couple_count()
        )));
    }
    let mut hat_keep: BTreeSet<usize> = BTreeSet::new();
    for c in 0..k {
        hat_keep.extend(hat.couple_vertices(c));
    }
    let orig_keep: Vec<usize> = hat_keep.iter().copied().filter(|&v| v < hat.h).collect();
    let (tournament, map) = t.induced(&orig_keep)?;
    let (hd, hat_map) = hat.digraph.induced(&hat_keep.iter().copied().collect::<Vec<_>>())?;
    let restricted = hat.ordering.restricted(&hat_keep);
    let relabel: std::collections::HashMap<usize, usize> =
        hat_map.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let hat_ordering = Ordering::from_perm(restricted.iter().map(|v| relabel[v]).collect())?;
    Ok(Prefix {
        tournament,
        map,
        hat: hd,
        hat_map,
        hat_ordering,
    })
}

/// Embedding regimes. The mode fixes which vertices the signature marks,
/// which delta values are legal, the divisibility the structure must obey,
/// and the parameter cascade of the inductive step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedMode {
    LeftFlotilla,
    RightFlotilla,
    Flotilla,
    FlotillaGalaxy,
}

impl EmbedMode {
    /// Required divisor of every block size (1 = unconstrained).
    pub fn divisor(&self) -> usize {
        match self {
            EmbedMode::LeftFlotilla | EmbedMode::RightFlotilla => 3,
            EmbedMode::Flotilla => 6,
            EmbedMode::FlotillaGalaxy => 1,
        }
    }

    /// Whether sub-block division must be exact (no leftover vertices).
    pub fn exact_division(&self) -> bool {
        !matches!(self, EmbedMode::FlotillaGalaxy)
    }
}

/// {0,1}-vector over the hatted ordering positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    s: Vec<bool>,
}

impl Signature {
    pub fn new(s: Vec<bool>) -> Signature {
        Signature { s }
    }

    pub fn s(&self) -> &[bool] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.s.iter().filter(|&&b| b).count()
    }

    /// Maximal runs of consecutive ones as (start, length), 0-based.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.s.len() {
            if self.s[i] {
                let start = i;
                while i < self.s.len() && self.s[i] {
                    i += 1;
                }
                out.push((start, i - start));
            } else {
                i += 1;
            }
        }
        out
    }

    /// The compressed vector: every run of ones becomes a single one.
    pub fn compressed(&self) -> Vec<bool> {
        let mut out = Vec::new();
        let mut prev = false;
        for &b in &self.s {
            if b && prev {
                continue;
            }
            out.push(b);
            prev = b;
        }
        out
    }

    /// Run lengths in run order; one entry per one of the compressed vector.
    pub fn deltas(&self) -> Vec<usize> {
        self.runs().into_iter().map(|(_, len)| len).collect()
    }

    pub fn to_string01(&self) -> String {
        self.s.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn parse01(text: &str) -> Result<Signature> {
        let mut s = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch {
                '0' => s.push(false),
                '1' => s.push(true),
                _ => return Err(Error::Format(format!("bad signature character {ch:?}"))),
            }
        }
        Ok(Signature { s })
    }
}

/// Marks interiors of every hatted boat; in the flotilla-galaxy mode star
/// leaves are marked as well.
pub fn signature(hat: &HatDigraph, mode: EmbedMode) -> Result<Signature> {
    let n = hat.ordering.len();
    let mut s = vec![false; n];
    for b in &hat.boats {
        match (mode, b.side) {
            (EmbedMode::LeftFlotilla, BoatSide::Right) => {
                return Err(Error::Domain("left-flotilla mode saw a right boat".into()))
            }
            (EmbedMode::RightFlotilla, BoatSide::Left) => {
                return Err(Error::Domain("right-flotilla mode saw a left boat".into()))
            }
            _ => {}
        }
        for v in b.interiors() {
            s[hat.ordering.position(v)] = true;
        }
    }
    let has_star = hat.stars.iter().any(|s| s.is_some());
    match mode {
        EmbedMode::FlotillaGalaxy => {
            for star in hat.stars.iter().flatten() {
                for &leaf in &star.leaves {
                    s[hat.ordering.position(leaf)] = true;
                }
            }
        }
        _ if has_star => {
            return Err(Error::Domain(
                "flotilla modes require an ordering without stars".into(),
            ))
        }
        _ => {}
    }
    let sig = Signature::new(s);
    for d in sig.deltas() {
        let ok = match mode {
            EmbedMode::LeftFlotilla | EmbedMode::RightFlotilla => d == 3,
            EmbedMode::Flotilla => d == 3 || d == 6,
            EmbedMode::FlotillaGalaxy => true,
        };
        if !ok {
            return Err(Error::Structure(format!(
                "signature run of length {d} is impossible in mode {mode:?}"
            )));
        }
    }
    Ok(sig)
}

/// Inserts one vertex between the interiors of every boat; the insertions
/// carry no backward arcs.
pub fn super_plus(t: &Tournament, theta: &Ordering) -> Result<(Tournament, Ordering)> {
    let sk = skeleton(t, theta)?;
    let h = t.n();
    let l = sk.boats.len();
    let mut perm: Vec<usize> = Vec::with_capacity(h + l);
    for p in 0..h {
        let v = theta.vertex_at(p);
        perm.push(v);
        if let Some(i) = sk.boats.iter().position(|(_, roles)| roles[1] == v) {
            perm.push(h + i); // between left and right interior
        }
    }
    let theta_plus = Ordering::from_perm(perm)?;
    let t_plus = Tournament::from_backward_arcs(h + l, &theta_plus, &backward_pairs(t, theta))?;
    Ok((t_plus, theta_plus))
}

/// On top of `super_plus`, inserts a second vertex per boat (after the right
/// interior for left boats, before the left interior for right boats) that
/// exchanges one backward arc with the first insertion.
pub fn super_plus_plus(t: &Tournament, theta: &Ordering) -> Result<(Tournament, Ordering)> {
    let sk = skeleton(t, theta)?;
    let h = t.n();
    let l = sk.boats.len();
    let mut perm: Vec<usize> = Vec::with_capacity(h + 2 * l);
    for p in 0..h {
        let v = theta.vertex_at(p);
        if let Some((i, (side, _))) = sk
            .boats
            .iter()
            .enumerate()
            .find(|(_, (side, roles))| *side == BoatSide::Right && roles[1] == v)
            .map(|(i, b)| (i, b))
        {
            let _ = side;
            perm.push(h + l + i); // the second insertion, just before u
        }
        perm.push(v);
        if let Some(i) = sk.boats.iter().position(|(_, roles)| roles[1] == v) {
            perm.push(h + i); // first insertion, between u and v
        }
        if let Some((i, _)) = sk
            .boats
            .iter()
            .enumerate()
            .find(|(_, (side, roles))| *side == BoatSide::Left && roles[2] == v)
        {
            perm.push(h + l + i); // second insertion, just after v
        }
    }
    let theta_pp = Ordering::from_perm(perm)?;
    let mut backward = backward_pairs(t, theta);
    for (i, (side, _)) in sk.boats.iter().enumerate() {
        let w = h + i;
        let s = h + l + i;
        match side {
            BoatSide::Left => backward.push((s, w)),
            BoatSide::Right => backward.push((w, s)),
        }
    }
    let t_pp = Tournament::from_backward_arcs(h + 2 * l, &theta_pp, &backward)?;
    Ok((t_pp, theta_pp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::patterns;

    #[test]
    fn regularize_is_identity_without_singletons() {
        let (t, theta) = fixtures::flotilla_galaxy_13();
        let (tp, op) = regularize(&t, &theta).unwrap();
        assert_eq!(tp, t);
        assert_eq!(op, theta);
    }

    #[test]
    fn regularize_single_vertex() {
        let t = Tournament::from_pair_bits(1, &[]).unwrap();
        let (tp, op) = regularize(&t, &Ordering::identity(1)).unwrap();
        assert_eq!(tp.n(), 2);
        assert!(tp.has_arc(1, 0), "the appended vertex beats the singleton");
        let d = patterns::decompose(&tp, &op);
        assert!(d.regular);
        assert_eq!(d.flavor, Flavor::Galaxy);
    }

    #[test]
    fn regularize_three_cycle_with_singleton() {
        // Ordering (0, 1, 2) of the 3-cycle 0->1->2->0 has one backward arc
        // (2, 0) and the singleton {1}.
        let t = Tournament::from_pair_bits(3, &[true, true, false]).unwrap();
        let theta = Ordering::identity(3);
        let (tp, op) = regularize(&t, &theta).unwrap();
        assert_eq!(tp.n(), 4);
        let d = patterns::decompose(&tp, &op);
        assert!(d.regular);
        assert_eq!(
            d.components
                .iter()
                .filter(|c| matches!(c.kind, ComponentKind::LeftStar | ComponentKind::RightStar))
                .count(),
            2
        );
    }

    #[test]
    fn hat_of_single_left_boat_matches_listed_arcs() {
        let b = fixtures::boat();
        let hat = hat(&b, &Ordering::identity(4)).unwrap();
        assert_eq!(hat.digraph.n(), 5);
        assert_eq!(hat.ordering.perm(), &[0, 4, 1, 2, 3]);
        // Listed arc set with x,u,v,y,z = 0,1,2,3,4.
        let expected: BTreeSet<(usize, usize)> = [
            (0, 4),
            (4, 1),
            (4, 2),
            (4, 3),
            (3, 0),
            (3, 1),
            (2, 0),
            (1, 2),
        ]
        .into_iter()
        .collect();
        let actual: BTreeSet<(usize, usize)> = hat.digraph.arcs().collect();
        assert_eq!(actual, expected);
        let absent: Vec<(usize, usize)> = hat.digraph.absent_pairs().collect();
        assert_eq!(absent, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn hat_of_single_right_boat_matches_listed_arcs() {
        // Right boat: path-ordered boat placed so that u, v, y are
        // consecutive: ordering (x, u, v, y) with x far left means positions
        // 0..3 are consecutive anyway; build an explicit right boat on 5
        // vertices: x = 0, singleton-free via star is overkill, so use the
        // boat alone with ordering (x, u, v, y) = identity but flagged right
        // by position shape {1,2,3}: take vertices {0,1,2,3} with backward
        // arcs (2,0),(3,0),(3,1) and a leading dummy? Simplest honest right
        // boat: 4 vertices, positions {0..3} are both-consecutive and the
        // classifier calls it left. Use two_boats_8, whose second boat is
        // genuinely right.
        let (t, theta) = fixtures::two_boats_8();
        let hat = hat(&t, &theta).unwrap();
        assert_eq!(hat.couple_count(), 2);
        let right = hat
            .boats
            .iter()
            .find(|b| b.side == BoatSide::Right)
            .expect("one right boat");
        // z goes just before the right exterior.
        let zpos = hat.ordering.position(right.added);
        assert_eq!(hat.ordering.vertex_at(zpos + 1), right.right_exterior);
        // The added vertex is complete from its predecessors and to its
        // successors.
        for p in 0..hat.ordering.len() {
            let v = hat.ordering.vertex_at(p);
            if v == right.added {
                continue;
            }
            if p < zpos {
                assert!(hat.digraph.has_arc(v, right.added));
            } else {
                assert!(hat.digraph.has_arc(right.added, v));
            }
        }
    }

    #[test]
    fn theta_set_sizes() {
        let b = fixtures::boat();
        let set = theta_set(&b, &Ordering::identity(4)).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set[0].perm(), &[0, 1, 2, 3]);
        assert_eq!(set[1].perm(), &[1, 2, 0, 3]);

        let (t, theta) = fixtures::flotilla_galaxy_13();
        let set = theta_set(&t, &theta).unwrap();
        assert_eq!(set.len(), 4);

        let single = Tournament::from_pair_bits(1, &[]).unwrap();
        let set = theta_set(&single, &Ordering::identity(1)).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn prefix_of_reference_structure() {
        let (t, theta) = fixtures::flotilla_galaxy_13();
        let p0 = prefix(&t, &theta, 0).unwrap();
        assert_eq!(p0.tournament.n(), 0);
        let p1 = prefix(&t, &theta, 1).unwrap();
        // First couple: left boat {2,3,4,11} with star {1,5,7}.
        assert_eq!(p1.map, vec![1, 2, 3, 4, 5, 7, 11]);
        assert_eq!(p1.hat.n(), 8);
        let p2 = prefix(&t, &theta, 2).unwrap();
        assert_eq!(p2.tournament.n(), 13);
        assert_eq!(p2.hat.n(), 15);
    }

    #[test]
    fn signature_of_single_boat() {
        let b = fixtures::boat();
        let hat = hat(&b, &Ordering::identity(4)).unwrap();
        let sig = signature(&hat, EmbedMode::LeftFlotilla).unwrap();
        assert_eq!(sig.to_string01(), "01110");
        assert_eq!(sig.compressed(), vec![false, true, false]);
        assert_eq!(sig.deltas(), vec![3]);
    }

    #[test]
    fn signature_compression_examples() {
        let sig = Signature::parse01("011101110").unwrap();
        assert_eq!(sig.compressed(), vec![false, true, false, true, false]);
        assert_eq!(sig.deltas(), vec![3, 3]);
        let six = Signature::parse01("0111111-0".replace('-', "").as_str()).unwrap();
        assert_eq!(six.deltas(), vec![6]);
    }

    #[test]
    fn signature_of_reference_structure_in_galaxy_mode() {
        let (t, theta) = fixtures::flotilla_galaxy_13();
        let hat = hat(&t, &theta).unwrap();
        let sig = signature(&hat, EmbedMode::FlotillaGalaxy).unwrap();
        assert_eq!(sig.to_string01(), "000111111111000");
        assert_eq!(sig.deltas(), vec![9]);
        assert_eq!(sig.ones(), 3 * 2 + 3); // interiors plus leaves
        // Flotilla modes reject the stars outright.
        assert!(signature(&hat, EmbedMode::Flotilla).is_err());
    }

    #[test]
    fn super_plus_of_single_boat_is_five_vertices_same_backward() {
        let b = fixtures::boat();
        let theta = Ordering::identity(4);
        let (tp, op) = super_plus(&b, &theta).unwrap();
        assert_eq!(tp.n(), 5);
        assert_eq!(op.perm(), &[0, 1, 4, 2, 3]);
        let before: BTreeSet<(usize, usize)> = backward_pairs(&b, &theta).into_iter().collect();
        let after: BTreeSet<(usize, usize)> = backward_pairs(&tp, &op).into_iter().collect();
        assert_eq!(before, after);
    }

    #[test]
    fn super_plus_is_identity_without_boats() {
        let t = Tournament::from_fn(3, |_, _| true);
        let (tp, _) = super_plus(&t, &Ordering::identity(3)).unwrap();
        assert_eq!(tp, t);
        let (tpp, _) = super_plus_plus(&t, &Ordering::identity(3)).unwrap();
        assert_eq!(tpp, t);
    }

    #[test]
    fn super_plus_plus_of_single_boat() {
        let b = fixtures::boat();
        let theta = Ordering::identity(4);
        let (tpp, opp) = super_plus_plus(&b, &theta).unwrap();
        assert_eq!(tpp.n(), 6);
        // (x, u, w, v, s, y) with w = 4, s = 5.
        assert_eq!(opp.perm(), &[0, 1, 4, 2, 5, 3]);
        let after: BTreeSet<(usize, usize)> = backward_pairs(&tpp, &opp).into_iter().collect();
        let mut expected: BTreeSet<(usize, usize)> =
            backward_pairs(&b, &theta).into_iter().collect();
        expected.insert((5, 4));
        assert_eq!(after, expected);
    }

    #[test]
    fn super_plus_plus_right_boat_side_rule() {
        let (t, theta) = fixtures::two_boats_8();
        let (tpp, opp) = super_plus_plus(&t, &theta).unwrap();
        assert_eq!(tpp.n(), 12);
        // The right boat {0,5,6,7} gets s just before its left interior 5 and
        // the backward arc (w, s).
        let hat = hat(&t, &theta).unwrap();
        let right_idx = hat
            .boats
            .iter()
            .position(|b| b.side == BoatSide::Right)
            .unwrap();
        let w = 8 + right_idx;
        let s = 10 + right_idx;
        assert!(opp.position(s) < opp.position(5));
        assert!(tpp.has_arc(w, s));
        assert!(opp.position(w) > opp.position(s));
    }

    #[test]
    fn super_preserves_backward_sets_on_reference() {
        let (t, theta) = fixtures::flotilla_galaxy_13();
        let (tp, op) = super_plus(&t, &theta).unwrap();
        assert_eq!(tp.n(), 15);
        let before: BTreeSet<(usize, usize)> = backward_pairs(&t, &theta).into_iter().collect();
        let after: BTreeSet<(usize, usize)> = backward_pairs(&tp, &op).into_iter().collect();
        assert_eq!(before, after);
    }
}
