//! Deliberately naive reference implementations: exhaustive pairwise scans
//! and supporting-line searches whose correctness is clear from inspection.
//!
//! These back the verification command and the test suites. Production
//! decision paths never call into this module; when an oracle and a main
//! path disagree, the main path is presumed wrong.

use crate::geom::{on_segment, orient, Orientation, Point};
use crate::hull::PointClass;
use crate::reductions::Instance;

/// Which pairwise difference window counts as "close".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosenessMode {
    /// `0 < a_j - a_i < eps`
    StrictOpen,
    /// `0 <= a_j - a_i < eps`
    HalfOpen,
    /// `0 < a_j - a_i <= eps`
    StrictClosed,
}

/// Exhaustive O(n^2) pairwise closeness check.
pub fn brute_closeness(inst: &Instance, mode: ClosenessMode) -> bool {
    let values = inst.values();
    let eps = inst.eps();
    for (i, a) in values.iter().enumerate() {
        for (j, b) in values.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = b - a;
            let close = match mode {
                ClosenessMode::StrictOpen => diff.is_positive() && diff < *eps,
                ClosenessMode::HalfOpen => !diff.is_negative() && diff < *eps,
                ClosenessMode::StrictClosed => diff.is_positive() && diff <= *eps,
            };
            if close {
                return true;
            }
        }
    }
    false
}

/// Exhaustive per-point classification with no hull construction.
///
/// A point is on the boundary iff some line through it and another location
/// has the whole multiset on one closed side; a boundary point is extreme
/// unless it lies strictly inside a segment spanned by two other locations.
/// O(n^3) overall.
pub fn brute_point_classification(points: &[Point]) -> Vec<PointClass> {
    let mut unique: Vec<&Point> = points.iter().collect();
    unique.sort();
    unique.dedup();
    points
        .iter()
        .map(|t| brute_classify_one(points, &unique, t))
        .collect()
}

fn brute_classify_one(points: &[Point], unique: &[&Point], target: &Point) -> PointClass {
    let others: Vec<&Point> = unique.iter().copied().filter(|p| *p != target).collect();
    if others.is_empty() {
        return PointClass::ExtremeVertex;
    }

    let on_boundary = others
        .iter()
        .any(|q| all_on_one_closed_side(points, target, q));
    if !on_boundary {
        return PointClass::Interior;
    }

    // A segment can strictly contain the target only if its endpoints
    // straddle it lexicographically (lexicographic order is line order for
    // collinear points), so pairs on one side need no test.
    let split = others.partition_point(|q| *q < target);
    for q1 in &others[..split] {
        for q2 in &others[split..] {
            // target differs from both, so closed-segment membership means
            // strict interiority.
            if on_segment(target, q1, q2) {
                return PointClass::BoundaryNonExtreme;
            }
        }
    }
    PointClass::ExtremeVertex
}

fn all_on_one_closed_side(points: &[Point], a: &Point, b: &Point) -> bool {
    let mut seen_left = false;
    let mut seen_right = false;
    for p in points {
        match orient(a, b, p) {
            Orientation::Left => seen_left = true,
            Orientation::Right => seen_right = true,
            Orientation::Collinear => {}
        }
        if seen_left && seen_right {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn inst(values: &[&str], eps: &str) -> Instance {
        Instance::new(values.iter().map(|v| rat(v)).collect(), rat(eps)).unwrap()
    }

    fn pts(coords: &[(&str, &str)]) -> Vec<Point> {
        coords
            .iter()
            .map(|(x, y)| Point::new(rat(x), rat(y)))
            .collect()
    }

    #[test]
    fn gap_exactly_eps_separates_the_three_modes() {
        let exact = inst(&["0", "1"], "1");
        assert!(!brute_closeness(&exact, ClosenessMode::StrictOpen));
        assert!(!brute_closeness(&exact, ClosenessMode::HalfOpen));
        assert!(brute_closeness(&exact, ClosenessMode::StrictClosed));
    }

    #[test]
    fn duplicates_count_only_when_zero_is_included() {
        let dup = inst(&["3", "3"], "1");
        assert!(brute_closeness(&dup, ClosenessMode::HalfOpen));
        assert!(!brute_closeness(&dup, ClosenessMode::StrictOpen));
        assert!(!brute_closeness(&dup, ClosenessMode::StrictClosed));
    }

    #[test]
    fn far_apart_values_are_never_close() {
        let far = inst(&["0", "10"], "1");
        for mode in [
            ClosenessMode::StrictOpen,
            ClosenessMode::HalfOpen,
            ClosenessMode::StrictClosed,
        ] {
            assert!(!brute_closeness(&far, mode));
        }
    }

    #[test]
    fn classifies_square_with_center() {
        let points = pts(&[("0", "0"), ("2", "0"), ("2", "2"), ("0", "2"), ("1", "1")]);
        assert_eq!(
            brute_point_classification(&points),
            vec![
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::Interior,
            ]
        );
    }

    #[test]
    fn classifies_collinear_triple() {
        let points = pts(&[("0", "0"), ("1", "0"), ("2", "0")]);
        assert_eq!(
            brute_point_classification(&points),
            vec![
                PointClass::ExtremeVertex,
                PointClass::BoundaryNonExtreme,
                PointClass::ExtremeVertex,
            ]
        );
    }

    #[test]
    fn classifies_duplicates_and_edge_points() {
        let points = pts(&[
            ("0", "0"),
            ("4", "0"),
            ("4", "4"),
            ("0", "4"),
            ("2", "0"),
            ("0", "0"),
            ("1", "1"),
        ]);
        assert_eq!(
            brute_point_classification(&points),
            vec![
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::ExtremeVertex,
                PointClass::BoundaryNonExtreme,
                PointClass::ExtremeVertex,
                PointClass::Interior,
            ]
        );
    }

    #[test]
    fn single_and_coincident_points_are_extreme() {
        let one = pts(&[("5", "7")]);
        assert_eq!(
            brute_point_classification(&one),
            vec![PointClass::ExtremeVertex]
        );
        let same = pts(&[("5", "7"), ("5", "7")]);
        assert_eq!(
            brute_point_classification(&same),
            vec![PointClass::ExtremeVertex, PointClass::ExtremeVertex]
        );
    }
}
