//! The `decide` subcommand: one problem, one input file, one verdict line.

use super::files::{read_instance_file, read_points_file};
use super::CliError;
use crate::geom::Point;
use crate::hull::{compute_hull, PointClass};
use crate::reductions::{
    decide_eps_closeness_via_hull, decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position, eps_witness, strict_witness, weak_witness,
    Instance,
};
use clap::ValueEnum;
use std::path::Path;

/// The decidable problems. `strict`, `closeness`, and `weak` read an
/// instance file; `api` and `convex-position` read a point file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// Is there a pair with 0 < a_j - a_i < eps?
    Strict,
    /// Is there a pair with 0 <= a_j - a_i < eps?
    Closeness,
    /// Is there a pair with 0 < a_j - a_i <= eps?
    Weak,
    /// Does any point lie strictly inside the hull of the point set?
    Api,
    /// Is every point's location a vertex of the hull?
    ConvexPosition,
}

impl Problem {
    pub fn takes_points(self) -> bool {
        matches!(self, Problem::Api | Problem::ConvexPosition)
    }
}

/// Answer plus the exact line printed for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub line: String,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        if self.answer {
            super::EXIT_YES
        } else {
            super::EXIT_NO
        }
    }
}

fn pair_verdict(answer: bool, witness: Option<(usize, usize)>) -> Verdict {
    let line = match (answer, witness) {
        (true, Some((i, j))) => format!("yes witness=({i},{j})"),
        (true, None) => "yes".to_string(),
        (false, _) => "no".to_string(),
    };
    Verdict { answer, line }
}

/// Decides `strict`, `closeness`, or `weak` on an instance.
pub fn decide_instance(problem: Problem, inst: &Instance) -> Verdict {
    match problem {
        Problem::Strict => {
            let answer = decide_strict_closeness_via_hull(inst);
            pair_verdict(answer, if answer { strict_witness(inst) } else { None })
        }
        Problem::Closeness => {
            let answer = decide_eps_closeness_via_hull(inst);
            pair_verdict(answer, if answer { eps_witness(inst) } else { None })
        }
        Problem::Weak => {
            let answer = decide_weak_closeness_via_convex_position(inst);
            pair_verdict(answer, if answer { weak_witness(inst) } else { None })
        }
        _ => unreachable!("point problems take a point file"),
    }
}

/// Decides `api` or `convex-position` on a raw point multiset.
///
/// Witnesses name the point by its 1-based position in the input file:
/// the first interior point for an `api` yes, the first non-vertex point
/// for a `convex-position` no.
pub fn decide_points(problem: Problem, points: &[Point]) -> Verdict {
    let report = compute_hull(points).expect("parser guarantees at least one point");
    match problem {
        Problem::Api => {
            let interior = report
                .classes
                .iter()
                .position(|c| *c == PointClass::Interior);
            match interior {
                Some(k) => Verdict {
                    answer: true,
                    line: format!("yes witness=P{}={}", k + 1, points[k]),
                },
                None => Verdict {
                    answer: false,
                    line: "no".to_string(),
                },
            }
        }
        Problem::ConvexPosition => {
            let stranded = report
                .classes
                .iter()
                .position(|c| *c != PointClass::ExtremeVertex);
            match stranded {
                Some(k) => Verdict {
                    answer: false,
                    line: format!("no witness=P{}={}", k + 1, points[k]),
                },
                None => Verdict {
                    answer: true,
                    line: "yes".to_string(),
                },
            }
        }
        _ => unreachable!("closeness problems take an instance file"),
    }
}

/// Reads the right file kind for `problem` and decides it.
pub fn run_decide(problem: Problem, path: &Path) -> Result<Verdict, CliError> {
    if problem.takes_points() {
        Ok(decide_points(problem, &read_points_file(path)?))
    } else {
        Ok(decide_instance(problem, &read_instance_file(path)?))
    }
}
