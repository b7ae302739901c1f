//! Planar primitives: points, lines, the exact orientation predicate, and
//! the tangent-line construction on the two lifting parabolas.
//!
//! Orientation convention, used by every module in this crate:
//! `orient(p, q, r)` is the sign of the cross product `(q - p) x (r - p)`.
//! `Left` (+1) means `r` lies strictly to the left of the directed line
//! `p -> q`, `Right` (-1) strictly to the right, `Collinear` (0) on it.
//! With `q` to the right of `p`, "left" is "strictly above".

use crate::numeric::Rational;
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// A line needs two distinct anchor points.
    #[error("degenerate line: both anchors are {0}")]
    DegenerateLine(Box<Point>),
    /// The tangent construction is only defined for a positive offset.
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(Rational),
}

/// A point in the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_int(x), Rational::from_int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A line through two distinct anchors, directed `p -> q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    p: Point,
    q: Point,
}

impl Line {
    pub fn new(p: Point, q: Point) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateLine(Box::new(p)));
        }
        Ok(Line { p, q })
    }

    pub fn start(&self) -> &Point {
        &self.p
    }

    pub fn end(&self) -> &Point {
        &self.q
    }

    /// Slope of the line, or `None` when vertical.
    pub fn slope(&self) -> Option<Rational> {
        if self.p.x == self.q.x {
            return None;
        }
        Some(
            (&self.q.y - &self.p.y)
                .checked_div(&(&self.q.x - &self.p.x))
                .expect("anchors share x only when vertical"),
        )
    }

    /// The line's y value at `x`, or `None` when vertical.
    pub fn y_at(&self, x: &Rational) -> Option<Rational> {
        let slope = self.slope()?;
        Some(&self.p.y + &(&slope * &(x - &self.p.x)))
    }

    pub fn contains(&self, t: &Point) -> bool {
        orient(&self.p, &self.q, t) == Orientation::Collinear
    }
}

/// Result of the orientation predicate. See the module docs for the sign
/// convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Left,
    Collinear,
    Right,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Left => 1,
            Orientation::Collinear => 0,
            Orientation::Right => -1,
        }
    }
}

/// Exact sign of `(q - p) x (r - p)`.
///
/// Computed on cross-multiplied integer numerators: denominators are always
/// positive, so they scale magnitudes without touching the sign, and no
/// normalization work is spent on a result whose only use is its sign.
/// Small coordinates take an overflow-checked i128 route; any overflow falls
/// back to big integers, so the sign is exact either way.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    let ordering = orient_i128(p, q, r).unwrap_or_else(|| orient_bigint(p, q, r));
    match ordering {
        std::cmp::Ordering::Greater => Orientation::Left,
        std::cmp::Ordering::Less => Orientation::Right,
        std::cmp::Ordering::Equal => Orientation::Collinear,
    }
}

fn orient_i128(p: &Point, q: &Point, r: &Point) -> Option<std::cmp::Ordering> {
    use num_traits::ToPrimitive;
    // Unreduced numerator and (positive) denominator of a - b.
    let diff_parts = |a: &Rational, b: &Rational| -> Option<(i128, i128)> {
        let an = a.numerator().to_i128()?;
        let ad = a.denominator().to_i128()?;
        let bn = b.numerator().to_i128()?;
        let bd = b.denominator().to_i128()?;
        Some((
            an.checked_mul(bd)?.checked_sub(bn.checked_mul(ad)?)?,
            ad.checked_mul(bd)?,
        ))
    };
    let (nx1, dx1) = diff_parts(&q.x, &p.x)?;
    let (ny1, dy1) = diff_parts(&q.y, &p.y)?;
    let (nx2, dx2) = diff_parts(&r.x, &p.x)?;
    let (ny2, dy2) = diff_parts(&r.y, &p.y)?;
    // sign(nx1/dx1 * ny2/dy2 - ny1/dy1 * nx2/dx2), cleared of denominators.
    let lhs = nx1.checked_mul(ny2)?.checked_mul(dy1)?.checked_mul(dx2)?;
    let rhs = ny1.checked_mul(nx2)?.checked_mul(dx1)?.checked_mul(dy2)?;
    Some(lhs.cmp(&rhs))
}

fn orient_bigint(p: &Point, q: &Point, r: &Point) -> std::cmp::Ordering {
    let diff_parts = |a: &Rational, b: &Rational| -> (BigInt, BigInt) {
        (
            a.numerator() * b.denominator() - b.numerator() * a.denominator(),
            a.denominator() * b.denominator(),
        )
    };
    let (nx1, dx1) = diff_parts(&q.x, &p.x);
    let (ny1, dy1) = diff_parts(&q.y, &p.y);
    let (nx2, dx2) = diff_parts(&r.x, &p.x);
    let (ny2, dy2) = diff_parts(&r.y, &p.y);
    let lhs = nx1 * ny2 * dy1 * dx2;
    let rhs = ny1 * nx2 * dx1 * dy2;
    lhs.cmp(&rhs)
}

/// The cross product `(q - p) x (r - p)` itself, exact.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    let dx1 = &q.x - &p.x;
    let dy1 = &q.y - &p.y;
    let dx2 = &r.x - &p.x;
    let dy2 = &r.y - &p.y;
    &(&dx1 * &dy2) - &(&dy1 * &dx2)
}

/// Is `t` on the closed segment from `a` to `b`?
///
/// For collinear points, lexicographic (x, then y) order agrees with order
/// along the common line, so betweenness reduces to coordinate comparison.
pub fn on_segment(t: &Point, a: &Point, b: &Point) -> bool {
    if a == b {
        return t == a;
    }
    if orient(a, b, t) != Orientation::Collinear {
        return false;
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= t && t <= hi
}

/// Where a query point sits relative to a (possibly degenerate) triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrianglePosition {
    StrictlyInside,
    OnBoundary,
    Outside,
}

/// Classifies `t` against triangle `abc`.
///
/// A degenerate (collinear) triangle has no interior; its boundary is the
/// segment spanned by the three corners.
pub fn point_in_triangle(t: &Point, a: &Point, b: &Point, c: &Point) -> TrianglePosition {
    if orient(a, b, c) == Orientation::Collinear {
        let lo = a.min(b).min(c);
        let hi = a.max(b).max(c);
        return if on_segment(t, lo, hi) {
            TrianglePosition::OnBoundary
        } else {
            TrianglePosition::Outside
        };
    }
    // Normalize to counterclockwise so all three edge tests expect Left.
    let (b, c) = if orient(a, b, c) == Orientation::Right {
        (c, b)
    } else {
        (b, c)
    };
    let sides = [orient(a, b, t), orient(b, c, t), orient(c, a, t)];
    if sides.contains(&Orientation::Right) {
        TrianglePosition::Outside
    } else if sides == [Orientation::Left, Orientation::Left, Orientation::Left] {
        TrianglePosition::StrictlyInside
    } else {
        TrianglePosition::OnBoundary
    }
}

/// Lift onto the outer parabola `y = x^2`.
pub fn outer_parabola_point(x: &Rational) -> Point {
    Point::new(x.clone(), x.square())
}

/// Lift onto the inner parabola `y = x^2 + eps^2 / 4`.
pub fn inner_parabola_point(x: &Rational, eps: &Rational) -> Point {
    let quarter = Rational::from_ratio(1, 4);
    Point::new(x.clone(), &x.square() + &(&eps.square() * &quarter))
}

/// The line through `(a, a^2)` and `(a + eps, (a + eps)^2)` on the outer
/// parabola.
///
/// Its slope is `2a + eps`; it passes through the inner-parabola point at
/// `x = a + eps/2` and touches the inner parabola only there, which makes
/// it a lower tangent to the inner parabola.
pub fn tangent_line_at(a: &Rational, eps: &Rational) -> Result<Line, GeomError> {
    if !eps.is_positive() {
        return Err(GeomError::NonPositiveEpsilon(eps.clone()));
    }
    let left = outer_parabola_point(a);
    let right = outer_parabola_point(&(a + eps));
    Ok(Line::new(left, right).expect("eps > 0 separates the anchors"))
}
