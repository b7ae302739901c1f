//! Convex hull of a point multiset with a three-way classification of every
//! input point, plus the decision predicates built on that classification.
//!
//! The hull is computed by sorting lexicographically and running a monotone
//! chain that keeps only strict turns, so the resulting polygon is strictly
//! convex: collinear points never survive as vertices. A second pass
//! classifies each input point against the polygon by binary search over the
//! vertex fan, which distinguishes vertex coincidence, edge membership, and
//! strict interiority exactly.
//!
//! Classification is location-based: every duplicate of a hull vertex is an
//! `ExtremeVertex`, so repeated points do not defeat convex position. The
//! stricter multiplicity-sensitive reading is available separately as
//! [`distinct_and_convex_position`].

use crate::geom::{orient, Orientation, Point};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HullError {
    #[error("hull input must contain at least one point")]
    EmptyInput,
    #[error("point index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
}

/// How an input point relates to the hull of its own multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    /// The point's location is a vertex of the hull polygon.
    ExtremeVertex,
    /// On the hull boundary but not a vertex: in the relative interior of an
    /// edge, or strictly between the endpoints of an all-collinear input.
    BoundaryNonExtreme,
    /// Strictly inside the hull polygon.
    Interior,
}

/// Hull polygon plus the per-input-point classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullReport {
    /// Hull vertices in counterclockwise order starting from the
    /// lexicographically smallest point; pairwise distinct and strictly
    /// convex. A single vertex or a two-vertex segment for degenerate input.
    pub hull_vertices: Vec<Point>,
    /// One label per input point, in input order.
    pub classes: Vec<PointClass>,
    /// Number of orientation predicate evaluations this computation spent.
    pub orient_calls: u64,
}

impl HullReport {
    pub fn any_interior(&self) -> bool {
        self.classes.contains(&PointClass::Interior)
    }

    pub fn all_extreme(&self) -> bool {
        self.classes.iter().all(|c| *c == PointClass::ExtremeVertex)
    }
}

struct OrientCounter {
    calls: u64,
}

impl OrientCounter {
    fn new() -> Self {
        OrientCounter { calls: 0 }
    }

    fn orient(&mut self, p: &Point, q: &Point, r: &Point) -> Orientation {
        self.calls += 1;
        orient(p, q, r)
    }
}

/// Betweenness for a point already known to be collinear with `a` and `b`:
/// lexicographic order agrees with order along the common line.
fn lex_between(p: &Point, a: &Point, b: &Point) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= p && p <= hi
}

/// Computes the hull and classifies every input point.
///
/// Deterministic for a given input; the vertex cycle itself does not depend
/// on input order at all (the chain runs over sorted unique locations).
pub fn compute_hull(points: &[Point]) -> Result<HullReport, HullError> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let mut counter = OrientCounter::new();

    let mut unique: Vec<&Point> = points.iter().collect();
    unique.sort();
    unique.dedup();

    let hull_vertices: Vec<Point> = if unique.len() == 1 {
        vec![unique[0].clone()]
    } else {
        monotone_chain(&unique, &mut counter)
    };

    let classes = points
        .iter()
        .map(|p| classify(&hull_vertices, p, &mut counter))
        .collect();

    Ok(HullReport {
        hull_vertices,
        classes,
        orient_calls: counter.calls,
    })
}

/// Monotone chain over sorted distinct points, strict turns only.
fn monotone_chain(sorted: &[&Point], counter: &mut OrientCounter) -> Vec<Point> {
    fn build<'a>(
        points: impl Iterator<Item = &'a Point>,
        counter: &mut OrientCounter,
    ) -> Vec<&'a Point> {
        let mut chain: Vec<&'a Point> = Vec::new();
        for p in points {
            while chain.len() >= 2
                && counter.orient(chain[chain.len() - 2], chain[chain.len() - 1], p)
                    != Orientation::Left
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    }

    let mut lower = build(sorted.iter().copied(), counter);
    let mut upper = build(sorted.iter().rev().copied(), counter);
    // The last point of each chain opens the other one.
    lower.pop();
    upper.pop();
    lower.into_iter().chain(upper).cloned().collect()
}

/// Classifies a member point against the hull polygon.
///
/// For three or more vertices this is a binary search over the fan around
/// vertex 0: roughly `log2(h) + 3` orientation tests per point.
fn classify(hull: &[Point], p: &Point, counter: &mut OrientCounter) -> PointClass {
    match hull {
        [v] => {
            debug_assert_eq!(p, v);
            PointClass::ExtremeVertex
        }
        [v0, v1] => {
            if p == v0 || p == v1 {
                PointClass::ExtremeVertex
            } else {
                debug_assert_eq!(orient(v0, v1, p), Orientation::Collinear);
                debug_assert!(lex_between(p, v0, v1));
                PointClass::BoundaryNonExtreme
            }
        }
        _ => classify_against_polygon(hull, p, counter),
    }
}

fn classify_against_polygon(hull: &[Point], p: &Point, counter: &mut OrientCounter) -> PointClass {
    let h = hull.len();
    let v0 = &hull[0];
    if p == v0 {
        return PointClass::ExtremeVertex;
    }

    // The rays v0 -> v1, ..., v0 -> v_{h-1} sweep counterclockwise; a member
    // point lies on or left of the first ray and on or right of the last.
    match counter.orient(v0, &hull[1], p) {
        Orientation::Right => unreachable!("member point outside its own hull"),
        Orientation::Collinear => {
            // On the line of hull edge v0 -> v1.
            return if p == &hull[1] {
                PointClass::ExtremeVertex
            } else {
                debug_assert!(lex_between(p, v0, &hull[1]));
                PointClass::BoundaryNonExtreme
            };
        }
        Orientation::Left => {}
    }
    match counter.orient(v0, &hull[h - 1], p) {
        Orientation::Left => unreachable!("member point outside its own hull"),
        Orientation::Collinear => {
            // On the line of hull edge v_{h-1} -> v0.
            return if p == &hull[h - 1] {
                PointClass::ExtremeVertex
            } else {
                debug_assert!(lex_between(p, &hull[h - 1], v0));
                PointClass::BoundaryNonExtreme
            };
        }
        Orientation::Right => {}
    }

    // Invariant: p strictly left of v0 -> v_lo, strictly right of v0 -> v_hi.
    let mut lo = 1;
    let mut hi = h - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        match counter.orient(v0, &hull[mid], p) {
            Orientation::Left => lo = mid,
            Orientation::Right => hi = mid,
            Orientation::Collinear => {
                // On the interior diagonal ray v0 -> v_mid.
                return if p == &hull[mid] {
                    PointClass::ExtremeVertex
                } else {
                    debug_assert!(lex_between(p, v0, &hull[mid]));
                    PointClass::Interior
                };
            }
        }
    }

    match counter.orient(&hull[lo], &hull[hi], p) {
        Orientation::Left => PointClass::Interior,
        Orientation::Collinear => {
            // Strictly inside the wedge, so strictly inside edge (v_lo, v_hi).
            debug_assert!(lex_between(p, &hull[lo], &hull[hi]));
            PointClass::BoundaryNonExtreme
        }
        Orientation::Right => unreachable!("member point outside its own hull"),
    }
}

/// Does any input point lie strictly inside the hull of the multiset?
pub fn any_point_inside(points: &[Point]) -> Result<bool, HullError> {
    Ok(compute_hull(points)?.any_interior())
}

/// Is every input point's location a vertex of the hull?
///
/// Duplicate points at a vertex do not defeat convex position under this
/// location-based definition.
pub fn in_convex_position(points: &[Point]) -> Result<bool, HullError> {
    Ok(compute_hull(points)?.all_extreme())
}

/// Multiplicity-sensitive convex position: every point is a hull vertex and
/// no location is repeated.
pub fn distinct_and_convex_position(points: &[Point]) -> Result<bool, HullError> {
    let mut sorted: Vec<&Point> = points.iter().collect();
    sorted.sort();
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    Ok(distinct && in_convex_position(points)?)
}

/// Independent extremeness test for one input point, with no hull
/// computation: exhaustive enumeration of candidate support directions.
///
/// The point is extreme iff some direction `d`, tie-broken by a
/// perpendicular `s`, sees every other location strictly behind it
/// lexicographically: `<d,w> < 0`, or `<d,w> = 0` and `<s,w> < 0`, for every
/// displacement `w` to another location. It suffices to try, for each other
/// location, the displacement's two perpendiculars and its negation.
pub fn extreme_oracle(points: &[Point], index: usize) -> Result<bool, HullError> {
    if points.is_empty() {
        return Err(HullError::EmptyInput);
    }
    let target = points.get(index).ok_or(HullError::IndexOutOfRange {
        index,
        len: points.len(),
    })?;

    let mut displacements: Vec<(crate::numeric::Rational, crate::numeric::Rational)> = points
        .iter()
        .filter(|p| *p != target)
        .map(|p| (&p.x - &target.x, &p.y - &target.y))
        .collect();
    displacements.sort();
    displacements.dedup();
    if displacements.is_empty() {
        return Ok(true);
    }

    type Vec2 = (crate::numeric::Rational, crate::numeric::Rational);
    let rot90 = |v: &Vec2| (-&v.1, v.0.clone());
    let negate = |v: &Vec2| (-&v.0, -&v.1);
    let dot = |a: &Vec2, b: &Vec2| &(&a.0 * &b.0) + &(&a.1 * &b.1);

    for v in &displacements {
        let perp = rot90(v);
        for dir in [perp.clone(), negate(&perp), negate(v)] {
            let tie = rot90(&dir);
            for tiebreak in [tie.clone(), negate(&tie)] {
                let supports = displacements.iter().all(|w| {
                    let along = dot(&dir, w);
                    along.is_negative() || (along.is_zero() && dot(&tiebreak, w).is_negative())
                });
                if supports {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
