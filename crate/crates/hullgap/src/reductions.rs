//! Reductions between closeness problems on number multisets and hull
//! questions on lifted point sets.
//!
//! The central construction doubles a multiset of values into a planar point
//! set: every value is lifted onto the outer parabola `y = x^2`, and the
//! midpoint of each value's epsilon window is lifted onto the inner parabola
//! `y = x^2 + eps^2/4`. The line through `(a, a^2)` and `(a+eps, (a+eps)^2)`
//! is a lower tangent to the inner parabola touching it exactly at the
//! lifted midpoint, so that midpoint drops to the hull boundary's interior
//! side precisely when another value lands strictly inside the window
//! `(a, a+eps)`. Deciding "is any point strictly inside the hull" on the
//! doubled set therefore decides "do two values differ by strictly between
//! zero and eps".
//!
//! Three decision procedures are built on this:
//! - strict closeness (`0 < a_j - a_i < eps`) via interior-point detection;
//! - epsilon-closeness (`0 <= a_j - a_i < eps`) via a second, perturbed
//!   round that turns duplicate values into strictly close ones;
//! - weak closeness (`0 < a_j - a_i <= eps`) via convex-position detection,
//!   which also notices midpoints stranded on an edge when a window closes
//!   exactly at its endpoint.

use crate::geom::{
    inner_parabola_point, outer_parabola_point, point_in_triangle, tangent_line_at, Line, Point,
    TrianglePosition,
};
use crate::hull::{compute_hull, HullReport, PointClass};
use crate::numeric::Rational;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("instance needs at least one value")]
    EmptyInstance,
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(Rational),
    #[error("sorting reduction needs pairwise distinct values; {0} repeats")]
    DuplicateValue(Rational),
}

/// A closeness problem input: a multiset of values and a positive epsilon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    values: Vec<Rational>,
    eps: Rational,
}

impl Instance {
    pub fn new(values: Vec<Rational>, eps: Rational) -> Result<Self, ReductionError> {
        if values.is_empty() {
            return Err(ReductionError::EmptyInstance);
        }
        if !eps.is_positive() {
            return Err(ReductionError::NonPositiveEpsilon(eps));
        }
        Ok(Instance { values, eps })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor requires at least one value
    }
}

/// The doubled point set derived from an instance, with its tangent lines.
///
/// Indexing is parallel to the instance's stored value order throughout.
#[derive(Debug, Clone)]
pub struct Construction {
    /// Values lifted onto the outer parabola; part of the point set.
    outer_lifts: Vec<Point>,
    /// Window midpoints lifted onto the inner parabola; part of the point set.
    inner_lifts: Vec<Point>,
    /// Right anchors `(a+eps, (a+eps)^2)` of the tangents; NOT in the point set.
    right_anchors: Vec<Point>,
    /// The lower tangents to the inner parabola, one per value.
    tangents: Vec<Line>,
    source: Instance,
}

impl Construction {
    pub fn outer_lifts(&self) -> &[Point] {
        &self.outer_lifts
    }

    pub fn inner_lifts(&self) -> &[Point] {
        &self.inner_lifts
    }

    pub fn right_anchors(&self) -> &[Point] {
        &self.right_anchors
    }

    pub fn tangents(&self) -> &[Line] {
        &self.tangents
    }

    pub fn source(&self) -> &Instance {
        &self.source
    }

    /// The full doubled multiset: all outer lifts in index order, then all
    /// inner lifts in index order. Always exactly `2n` points.
    pub fn point_set(&self) -> Vec<Point> {
        self.outer_lifts
            .iter()
            .chain(self.inner_lifts.iter())
            .cloned()
            .collect()
    }

    /// Human-readable label for an index into [`Construction::point_set`]:
    /// `L<i>` for outer lifts, `T<i>` for inner lifts, 1-based.
    pub fn point_label(&self, index: usize) -> String {
        let n = self.source.len();
        if index < n {
            format!("L{}", index + 1)
        } else {
            format!("T{}", index - n + 1)
        }
    }
}

/// Builds the doubled point set, tangents, and right anchors for an instance.
pub fn build_construction(inst: &Instance) -> Construction {
    let eps = inst.eps();
    let half_eps = eps * &Rational::from_ratio(1, 2);
    let mut outer_lifts = Vec::with_capacity(inst.len());
    let mut inner_lifts = Vec::with_capacity(inst.len());
    let mut right_anchors = Vec::with_capacity(inst.len());
    let mut tangents = Vec::with_capacity(inst.len());
    for a in inst.values() {
        outer_lifts.push(outer_parabola_point(a));
        inner_lifts.push(inner_parabola_point(&(a + &half_eps), eps));
        right_anchors.push(outer_parabola_point(&(a + eps)));
        tangents.push(tangent_line_at(a, eps).expect("instance eps is positive"));
    }
    Construction {
        outer_lifts,
        inner_lifts,
        right_anchors,
        tangents,
        source: inst.clone(),
    }
}

/// Outcome of one hull-based decision, with its predicate cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTrace {
    pub verdict: bool,
    /// Orientation tests spent across every hull computation involved.
    pub orient_calls: u64,
    /// Whether the second, perturbed round ran (epsilon-closeness only).
    pub phase_two_ran: bool,
}

fn strict_report(inst: &Instance) -> HullReport {
    let points = build_construction(inst).point_set();
    compute_hull(&points).expect("doubled point set is never empty")
}

/// Is there a pair with `0 < a_j - a_i < eps`? Decided solely by detecting
/// an interior point in the hull of the doubled point set.
pub fn decide_strict_closeness_via_hull(inst: &Instance) -> bool {
    decide_strict_closeness_traced(inst).verdict
}

pub fn decide_strict_closeness_traced(inst: &Instance) -> DecisionTrace {
    let report = strict_report(inst);
    DecisionTrace {
        verdict: report.any_interior(),
        orient_calls: report.orient_calls,
        phase_two_ran: false,
    }
}

/// Shifts the i-th value by `eps * i / (2n)` (1-based i) and halves eps.
///
/// Every pairwise difference moves by strictly less than `eps / 2`, so
/// values at least `eps` apart stay more than `eps/2` apart, while exact
/// duplicates become distinct values strictly closer than `eps/2`.
pub fn perturb(inst: &Instance) -> Instance {
    let n = inst.len() as i64;
    let step = inst.eps() * &Rational::from_ratio(1, 2 * n);
    let values = inst
        .values()
        .iter()
        .enumerate()
        .map(|(idx, a)| a + &(&step * &Rational::from_int(idx as i64 + 1)))
        .collect();
    let eps = inst.eps() * &Rational::from_ratio(1, 2);
    Instance::new(values, eps).expect("perturbed instance keeps the invariants")
}

/// Is there a pair with `0 <= a_j - a_i < eps`?
///
/// Round one decides the strict question. If it says no, every pair differs
/// by zero or by at least eps, and the perturbed round answers whether any
/// pair differs by zero: after perturbation, exactly the former duplicates
/// differ by strictly between zero and half of eps.
pub fn decide_eps_closeness_via_hull(inst: &Instance) -> bool {
    decide_eps_closeness_traced(inst).verdict
}

pub fn decide_eps_closeness_traced(inst: &Instance) -> DecisionTrace {
    let phase_one = decide_strict_closeness_traced(inst);
    if phase_one.verdict {
        return phase_one;
    }
    let phase_two = decide_strict_closeness_traced(&perturb(inst));
    DecisionTrace {
        verdict: phase_two.verdict,
        orient_calls: phase_one.orient_calls + phase_two.orient_calls,
        phase_two_ran: true,
    }
}

/// Is there a pair with `0 < a_j - a_i <= eps`? Decided solely by testing
/// whether the doubled point set fails to be in convex position.
pub fn decide_weak_closeness_via_convex_position(inst: &Instance) -> bool {
    decide_weak_closeness_traced(inst).verdict
}

pub fn decide_weak_closeness_traced(inst: &Instance) -> DecisionTrace {
    let report = strict_report(inst);
    DecisionTrace {
        verdict: !report.all_extreme(),
        orient_calls: report.orient_calls,
        phase_two_ran: false,
    }
}

/// A 1-based index pair witnessing a strict-closeness yes, extracted
/// constructively: the hull report names a hidden inner lift `T_i`, and the
/// matching `j` is found by a linear scan of the window `(a_i, a_i + eps)`.
pub fn strict_witness(inst: &Instance) -> Option<(usize, usize)> {
    let report = strict_report(inst);
    let n = inst.len();
    let hidden = report
        .classes
        .iter()
        .position(|c| *c == PointClass::Interior)?;
    debug_assert!(hidden >= n, "outer lifts never fall interior");
    let i = hidden - n;
    let window_end = &inst.values()[i] + inst.eps();
    let j = inst
        .values()
        .iter()
        .position(|a| *a > inst.values()[i] && *a < window_end)
        .expect("an interior inner lift always has a value in its window");
    Some((i + 1, j + 1))
}

/// A 1-based index pair witnessing an epsilon-closeness yes: a strict
/// witness if round one fires, otherwise a duplicate pair located through
/// the perturbed round's hidden inner lift.
pub fn eps_witness(inst: &Instance) -> Option<(usize, usize)> {
    if let Some(pair) = strict_witness(inst) {
        return Some(pair);
    }
    let perturbed = perturb(inst);
    let (i, _) = strict_witness(&perturbed)?;
    let i = i - 1;
    let j = inst
        .values()
        .iter()
        .enumerate()
        .position(|(idx, a)| idx != i && *a == inst.values()[i])
        .expect("a perturbed strict witness only arises from a duplicate");
    Some((i + 1, j + 1))
}

/// A 1-based index pair witnessing a weak-closeness yes, extracted from the
/// first non-extreme point of the doubled set.
pub fn weak_witness(inst: &Instance) -> Option<(usize, usize)> {
    let report = strict_report(inst);
    let n = inst.len();
    let stranded = report
        .classes
        .iter()
        .position(|c| *c != PointClass::ExtremeVertex)?;
    debug_assert!(stranded >= n, "outer lifts are always extreme");
    let i = stranded - n;
    let window_end = &inst.values()[i] + inst.eps();
    let j = inst
        .values()
        .iter()
        .position(|a| *a > inst.values()[i] && *a <= window_end)
        .expect("a non-extreme inner lift always has a value in its closed window");
    Some((i + 1, j + 1))
}

/// Reads values off the hull of their parabola lift: lift each value to
/// `(a, a^2)`, compute the hull, start the counterclockwise cycle at the
/// leftmost vertex, and collect x coordinates. Equals a comparison sort.
pub fn sort_via_hull(values: &[Rational]) -> Result<Vec<Rational>, ReductionError> {
    if values.is_empty() {
        return Err(ReductionError::EmptyInstance);
    }
    let mut seen = values.to_vec();
    seen.sort();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(ReductionError::DuplicateValue(w[0].clone()));
    }

    let lifted: Vec<Point> = values.iter().map(outer_parabola_point).collect();
    let report = compute_hull(&lifted).expect("non-empty input");
    let cycle = &report.hull_vertices;
    let leftmost = cycle
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| p.cmp(q))
        .map(|(k, _)| k)
        .expect("hull has at least one vertex");
    Ok((0..cycle.len())
        .map(|step| cycle[(leftmost + step) % cycle.len()].x.clone())
        .collect())
}

/// One named check of [`verify_claims`], with a diagnostic on failure.
#[derive(Debug, Clone)]
pub struct ClaimCheck {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

/// Result of auditing a construction against its geometric guarantees.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub checks: Vec<ClaimCheck>,
    /// 1-based indices of inner lifts classified interior.
    pub interior_inner_lifts: Vec<usize>,
    /// 1-based witnessing pairs `(i, j)` with `a_i < a_j < a_i + eps`.
    pub witness_pairs: Vec<(usize, usize)>,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            write!(f, "{status} {}", check.name)?;
            if !check.details.is_empty() {
                write!(f, " ({})", check.details)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Audits the construction of an instance:
///
/// 1. the interior-classified points are exactly the inner lifts whose open
///    window `(a_i, a_i + eps)` contains another value;
/// 2. no outer lift is ever classified interior;
/// 3. for every witnessing pair, the hidden inner lift `T_i` falls strictly
///    inside the triangle `L_i L_j T_j`;
/// 4. every tangent passes through its inner lift with slope `2a + eps` and
///    meets the inner parabola in a double root at `a + eps/2`.
pub fn verify_claims(inst: &Instance) -> ClaimReport {
    let construction = build_construction(inst);
    let points = construction.point_set();
    let report = compute_hull(&points).expect("doubled point set is never empty");
    let n = inst.len();
    let values = inst.values();
    let eps = inst.eps();

    let mut checks = Vec::new();
    let mut interior_inner_lifts = Vec::new();
    let mut witness_pairs = Vec::new();
    for i in 0..n {
        let window_end = &values[i] + eps;
        for (j, a) in values.iter().enumerate() {
            if *a > values[i] && *a < window_end {
                witness_pairs.push((i + 1, j + 1));
            }
        }
        if report.classes[n + i] == PointClass::Interior {
            interior_inner_lifts.push(i + 1);
        }
    }

    // 1. Interior inner lifts are exactly the windowed ones.
    let mut mismatches = Vec::new();
    for i in 0..n {
        let expect_interior = witness_pairs.iter().any(|(wi, _)| *wi == i + 1);
        let is_interior = report.classes[n + i] == PointClass::Interior;
        if expect_interior != is_interior {
            mismatches.push(format!(
                "T{} expected {} got {:?}",
                i + 1,
                if expect_interior { "Interior" } else { "boundary" },
                report.classes[n + i]
            ));
        }
    }
    checks.push(ClaimCheck {
        name: "interior points are exactly the windowed inner lifts",
        passed: mismatches.is_empty(),
        details: mismatches.join("; "),
    });

    // 2. Outer lifts never fall interior.
    let bad_outer: Vec<String> = (0..n)
        .filter(|i| report.classes[*i] == PointClass::Interior)
        .map(|i| format!("L{}", i + 1))
        .collect();
    checks.push(ClaimCheck {
        name: "no outer lift is interior",
        passed: bad_outer.is_empty(),
        details: bad_outer.join("; "),
    });

    // 3. Each witnessing pair hides T_i inside triangle L_i L_j T_j.
    let mut bad_triangles = Vec::new();
    for &(i, j) in &witness_pairs {
        let (i0, j0) = (i - 1, j - 1);
        let position = point_in_triangle(
            &construction.inner_lifts[i0],
            &construction.outer_lifts[i0],
            &construction.outer_lifts[j0],
            &construction.inner_lifts[j0],
        );
        if position != TrianglePosition::StrictlyInside {
            bad_triangles.push(format!("pair ({i},{j}) gave {position:?}"));
        }
    }
    checks.push(ClaimCheck {
        name: "windowed inner lifts fall strictly inside their triangle",
        passed: bad_triangles.is_empty(),
        details: bad_triangles.join("; "),
    });

    // 4. Tangency: through the inner lift, slope 2a + eps, double root.
    let mut bad_tangents = Vec::new();
    let two = Rational::from_int(2);
    let four = Rational::from_int(4);
    let half = Rational::from_ratio(1, 2);
    let quarter = Rational::from_ratio(1, 4);
    for (i, a) in values.iter().enumerate() {
        let line = &construction.tangents[i];
        let mut problems = Vec::new();
        if !line.contains(&construction.inner_lifts[i]) {
            problems.push("misses inner lift".to_string());
        }
        let slope = line.slope();
        if slope != Some(&(&two * a) + eps) {
            problems.push(format!("slope {slope:?}"));
        }
        // (x^2 + eps^2/4) - (slope x + intercept) must have a zero
        // discriminant with its double root at a + eps/2.
        if let (Some(slope), Some(intercept)) = (line.slope(), line.y_at(&Rational::zero())) {
            let discriminant =
                &slope.square() - &(&four * &(&(&eps.square() * &quarter) - &intercept));
            if !discriminant.is_zero() {
                problems.push(format!("discriminant {discriminant}"));
            }
            let root = &slope * &half;
            if root != a + &(eps * &half) {
                problems.push(format!("root {root}"));
            }
        } else {
            problems.push("vertical tangent".to_string());
        }
        if !problems.is_empty() {
            bad_tangents.push(format!("T{}: {}", i + 1, problems.join(", ")));
        }
    }
    checks.push(ClaimCheck {
        name: "tangents touch the inner parabola once with slope 2a + eps",
        passed: bad_tangents.is_empty(),
        details: bad_tangents.join("; "),
    });

    ClaimReport {
        checks,
        interior_inner_lifts,
        witness_pairs,
    }
}
