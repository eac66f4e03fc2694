//! Hand-built reference tournaments used by tests and the documentation.

use crate::tournament::{Ordering, Tournament};

/// The 4-vertex boat with labels x, u, v, y = 0, 1, 2, 3 and arc set
/// {(y,x), (y,u), (v,x), (x,u), (u,v), (v,y)}. Its path ordering is the
/// identity (x, u, v, y).
pub fn boat() -> Tournament {
    let arcs = [(3, 0), (3, 1), (2, 0), (0, 1), (1, 2), (2, 3)];
    Tournament::from_fn(4, |i, j| arcs.contains(&(i, j)))
}

/// A 13-vertex regular flotilla-galaxy under the identity ordering: one left
/// boat {2,3,4,11}, one right boat {0,8,9,10}, a left star with center 1 and
/// leaves {5,7}, and a two-vertex star {6,12}. Labels are 0-based; the
/// backward arcs below are the only non-forward pairs.
pub fn flotilla_galaxy_13() -> (Tournament, Ordering) {
    let theta = Ordering::identity(13);
    // 1-based vertex pairs (tail, head): (5,3) (12,3) (12,4) (10,1) (11,1)
    // (11,9) (6,2) (8,2) (13,7).
    let backward = [
        (4, 2),
        (11, 2),
        (11, 3),
        (9, 0),
        (10, 0),
        (10, 8),
        (5, 1),
        (7, 1),
        (12, 6),
    ];
    let t = Tournament::from_backward_arcs(13, &theta, &backward).expect("valid fixture");
    (t, theta)
}

/// A 7-vertex flotilla-galaxy: left boat {0,1,2,5} plus a right star with
/// center 6 and leaves {3,4}; identity ordering. The star leaves share the
/// boat's interior run, so embedding exercises the same-block star case.
pub fn boat_and_star_7() -> (Tournament, Ordering) {
    let theta = Ordering::identity(7);
    let backward = [(2, 0), (5, 0), (5, 1), (6, 3), (6, 4)];
    let t = Tournament::from_backward_arcs(7, &theta, &backward).expect("valid fixture");
    (t, theta)
}

/// An 8-vertex flotilla-galaxy whose star leaves live in a transitive block
/// different from the boat's: left boat {0,1,2,3} (four consecutive
/// positions), right star center 7 with leaves {4,5,6}.
pub fn boat_and_far_star_8() -> (Tournament, Ordering) {
    let theta = Ordering::identity(8);
    let backward = [(2, 0), (3, 0), (3, 1), (7, 4), (7, 5), (7, 6)];
    let t = Tournament::from_backward_arcs(8, &theta, &backward).expect("valid fixture");
    (t, theta)
}

/// Mirror of `boat_and_far_star_8`: left star center 0 with leaves {5,6,7},
/// left boat {1,2,3,4}; the star center precedes the leaf block.
pub fn far_star_and_boat_8() -> (Tournament, Ordering) {
    let theta = Ordering::identity(8);
    let backward = [(3, 1), (4, 1), (4, 2), (5, 0), (6, 0), (7, 0)];
    let t = Tournament::from_backward_arcs(8, &theta, &backward).expect("valid fixture");
    (t, theta)
}

/// An 8-vertex regular flotilla: boat {1,2,3,4} on consecutive positions and
/// a right boat {0,5,6,7}.
pub fn two_boats_8() -> (Tournament, Ordering) {
    let theta = Ordering::identity(8);
    let backward = [(3, 1), (4, 1), (4, 2), (6, 0), (7, 0), (7, 5)];
    let t = Tournament::from_backward_arcs(8, &theta, &backward).expect("valid fixture");
    (t, theta)
}
