//! The `verify` subcommand: randomized property checks of the decision
//! procedures and the hull classification against the brute-force oracles,
//! with seeded generation biased toward collisions and exact-gap cases.
//!
//! Uniform random rationals almost never produce equal values or gaps of
//! exactly eps, which is where the strict/half-open/closed distinctions
//! live; values are therefore drawn from the grid `{k * eps/4}`.

use super::rng::SplitMix64;
use crate::geom::Point;
use crate::hull::{compute_hull, extreme_oracle, PointClass};
use crate::numeric::Rational;
use crate::oracles::{brute_closeness, brute_point_classification, ClosenessMode};
use crate::reductions::{
    build_construction, decide_eps_closeness_via_hull, decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position, perturb, sort_via_hull, verify_claims, Instance,
};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub trials: u64,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub passes: u64,
    pub failures: u64,
    /// Shrunk reproduction of the first failure.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub properties: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self
            .properties
            .iter()
            .map(|p| p.name.len())
            .max()
            .unwrap_or(0);
        writeln!(out, "{:width$}  {:>8}  {:>8}", "property", "pass", "fail").unwrap();
        for p in &self.properties {
            writeln!(out, "{:width$}  {:>8}  {:>8}", p.name, p.passes, p.failures).unwrap();
        }
        for p in &self.properties {
            if let Some(failure) = &p.first_failure {
                writeln!(out, "minimal failure [{}]: {}", p.name, failure).unwrap();
            }
        }
        out
    }
}

/// Draws an instance with values on the grid `{k * eps/4}`, `1 <= n <= n_max`.
pub fn random_instance(rng: &mut SplitMix64, n_max: usize) -> Instance {
    let n = 1 + rng.below(n_max.max(1) as u64) as usize;
    let eps = Rational::from_ratio(rng.range_i64(1, 6), rng.range_i64(1, 6));
    let step = &eps * &Rational::from_ratio(1, 4);
    let span = 2 * n as i64 + 8;
    let values = (0..n)
        .map(|_| &step * &Rational::from_int(rng.range_i64(-span, span)))
        .collect();
    Instance::new(values, eps).expect("generator keeps the invariants")
}

/// Draws a point multiset on a small integer grid, so duplicates and
/// collinear triples occur constantly.
pub fn random_grid_points(rng: &mut SplitMix64, n_max: usize) -> Vec<Point> {
    let n = 1 + rng.below(n_max.max(1) as u64) as usize;
    (0..n)
        .map(|_| Point::from_ints(rng.range_i64(-5, 5), rng.range_i64(-5, 5)))
        .collect()
}

fn describe_instance(inst: &Instance) -> String {
    let values: Vec<String> = inst.values().iter().map(|v| v.to_string()).collect();
    format!("eps={} values=[{}]", inst.eps(), values.join(", "))
}

fn describe_points(points: &[Point]) -> String {
    let rendered: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("points=[{}]", rendered.join(", "))
}

/// Greedily removes values while the failure persists.
fn shrink_instance(inst: &Instance, fails: &dyn Fn(&Instance) -> bool) -> Instance {
    let mut current = inst.clone();
    'outer: while current.len() > 1 {
        for k in 0..current.len() {
            let mut values = current.values().to_vec();
            values.remove(k);
            let candidate = Instance::new(values, current.eps().clone())
                .expect("removal keeps the invariants");
            if fails(&candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        break;
    }
    current
}

fn shrink_points(points: &[Point], fails: &dyn Fn(&[Point]) -> bool) -> Vec<Point> {
    let mut current = points.to_vec();
    'outer: while current.len() > 1 {
        for k in 0..current.len() {
            let mut candidate = current.clone();
            candidate.remove(k);
            if fails(&candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        break;
    }
    current
}

fn check_against_brute(
    inst: &Instance,
    decide: fn(&Instance) -> bool,
    mode: ClosenessMode,
) -> Option<String> {
    let fails = move |i: &Instance| decide(i) != brute_closeness(i, mode);
    if !fails(inst) {
        return None;
    }
    let min = shrink_instance(inst, &fails);
    Some(format!(
        "{}: hull path says {}, brute force says {}",
        describe_instance(&min),
        decide(&min),
        brute_closeness(&min, mode)
    ))
}

fn prop_strict_matches_brute(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    check_against_brute(
        &random_instance(rng, n_max),
        decide_strict_closeness_via_hull,
        ClosenessMode::StrictOpen,
    )
}

fn prop_closeness_matches_brute(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    check_against_brute(
        &random_instance(rng, n_max),
        decide_eps_closeness_via_hull,
        ClosenessMode::HalfOpen,
    )
}

fn prop_weak_matches_brute(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    check_against_brute(
        &random_instance(rng, n_max),
        decide_weak_closeness_via_convex_position,
        ClosenessMode::StrictClosed,
    )
}

fn prop_construction_audit(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let inst = random_instance(rng, n_max);
    let fails = |i: &Instance| !verify_claims(i).all_passed();
    if !fails(&inst) {
        return None;
    }
    let min = shrink_instance(&inst, &fails);
    Some(format!(
        "{}:\n{}",
        describe_instance(&min),
        verify_claims(&min)
    ))
}

fn prop_doubled_set_matches_brute_classes(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let inst = random_instance(rng, n_max);
    let fails = |i: &Instance| {
        let points = build_construction(i).point_set();
        compute_hull(&points).expect("never empty").classes != brute_point_classification(&points)
    };
    if !fails(&inst) {
        return None;
    }
    let min = shrink_instance(&inst, &fails);
    Some(format!(
        "{}: hull classes diverge from brute classification",
        describe_instance(&min)
    ))
}

fn prop_grid_classes_match_brute(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let points = random_grid_points(rng, n_max);
    let fails = |pts: &[Point]| {
        compute_hull(pts).expect("never empty").classes != brute_point_classification(pts)
    };
    if !fails(&points) {
        return None;
    }
    let min = shrink_points(&points, &fails);
    let got = compute_hull(&min).expect("never empty").classes;
    let want = brute_point_classification(&min);
    Some(format!(
        "{}: hull says {:?}, brute says {:?}",
        describe_points(&min),
        got,
        want
    ))
}

fn prop_extreme_labels_match_oracle(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let points = random_grid_points(rng, n_max);
    let fails = |pts: &[Point]| {
        let classes = compute_hull(pts).expect("never empty").classes;
        (0..pts.len()).any(|i| {
            (classes[i] == PointClass::ExtremeVertex)
                != extreme_oracle(pts, i).expect("index in range")
        })
    };
    if !fails(&points) {
        return None;
    }
    let min = shrink_points(&points, &fails);
    Some(format!(
        "{}: extreme labels diverge from the direction oracle",
        describe_points(&min)
    ))
}

fn prop_perturbation_contract(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let inst = random_instance(rng, n_max);
    let fails = |i: &Instance| {
        let shifted = perturb(i);
        let half_eps = i.eps() * &Rational::from_ratio(1, 2);
        let n = i.len();
        (0..n).any(|a| {
            (0..n).any(|b| {
                let before = (&i.values()[b] - &i.values()[a]).abs();
                let after = (&shifted.values()[b] - &shifted.values()[a]).abs();
                (&after - &before).abs() >= half_eps
            })
        })
    };
    if !fails(&inst) {
        return None;
    }
    let min = shrink_instance(&inst, &fails);
    Some(format!(
        "{}: a pairwise difference moved by eps/2 or more",
        describe_instance(&min)
    ))
}

fn prop_sort_matches_comparison_sort(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    // Distinct values: a random subset of the grid.
    let n = 1 + rng.below(n_max.max(1) as u64) as usize;
    let mut pool: Vec<i64> = (-(3 * n_max as i64)..=3 * n_max as i64).collect();
    rng.shuffle(&mut pool);
    let values: Vec<Rational> = pool[..n]
        .iter()
        .map(|k| Rational::from_ratio(*k, 4))
        .collect();

    let via_hull = sort_via_hull(&values).expect("values are distinct");
    let mut expected = values.clone();
    expected.sort();
    if via_hull == expected {
        return None;
    }
    let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    Some(format!(
        "values=[{}]: hull walk disagrees with comparison sort",
        rendered.join(", ")
    ))
}

fn prop_closeness_order_invariant(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
    let inst = random_instance(rng, n_max);
    let baseline = decide_eps_closeness_via_hull(&inst);
    let mut shuffled_values = inst.values().to_vec();
    rng.shuffle(&mut shuffled_values);
    let shuffled = Instance::new(shuffled_values, inst.eps().clone())
        .expect("shuffle keeps the invariants");
    if decide_eps_closeness_via_hull(&shuffled) == baseline {
        return None;
    }
    Some(format!(
        "{} vs {}: verdict changed under permutation",
        describe_instance(&inst),
        describe_instance(&shuffled)
    ))
}

type PropertyFn = fn(&mut SplitMix64, usize) -> Option<String>;

const PROPERTIES: &[(&str, PropertyFn)] = &[
    ("strict decision matches brute force", prop_strict_matches_brute),
    ("eps-closeness decision matches brute force", prop_closeness_matches_brute),
    ("weak decision matches brute force", prop_weak_matches_brute),
    ("construction audit passes", prop_construction_audit),
    ("doubled-set classes match brute classification", prop_doubled_set_matches_brute_classes),
    ("grid-point classes match brute classification", prop_grid_classes_match_brute),
    ("extreme labels match the direction oracle", prop_extreme_labels_match_oracle),
    ("perturbation moves differences by less than eps/2", prop_perturbation_contract),
    ("hull-sorted values match comparison sort", prop_sort_matches_comparison_sort),
    ("eps-closeness verdict is order-invariant", prop_closeness_order_invariant),
];

/// Runs every property `trials` times; deterministic in `seed`.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    run_properties(PROPERTIES, opts)
}

fn run_properties(properties: &[(&'static str, PropertyFn)], opts: &VerifyOptions) -> VerifyReport {
    let mut root = SplitMix64::new(opts.seed);
    let properties = properties
        .iter()
        .map(|(name, property)| {
            let mut rng = root.fork();
            let mut passes = 0;
            let mut failures = 0;
            let mut first_failure = None;
            for _ in 0..opts.trials {
                match property(&mut rng, opts.n_max) {
                    None => passes += 1,
                    Some(failure) => {
                        failures += 1;
                        first_failure.get_or_insert(failure);
                    }
                }
            }
            PropertyOutcome {
                name,
                passes,
                failures,
                first_failure,
            }
        })
        .collect();
    VerifyReport { properties }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_run_passes_everything() {
        let report = run_verify(&VerifyOptions {
            trials: 60,
            n_max: 8,
            seed: 42,
        });
        assert!(report.all_passed(), "{}", report.render());
        assert_eq!(report.properties.len(), PROPERTIES.len());
        for p in &report.properties {
            assert_eq!(p.passes, 60, "{}", p.name);
        }
    }

    #[test]
    fn degenerate_single_value_trials_pass() {
        let report = run_verify(&VerifyOptions {
            trials: 1,
            n_max: 1,
            seed: 0,
        });
        assert!(report.all_passed(), "{}", report.render());
    }

    #[test]
    fn same_seed_reproduces_the_report() {
        let opts = VerifyOptions {
            trials: 20,
            n_max: 6,
            seed: 7,
        };
        let a = run_verify(&opts);
        let b = run_verify(&opts);
        assert_eq!(a.render(), b.render());
    }

    #[test]
    fn generator_hits_collisions_and_exact_gaps() {
        // The whole point of the grid bias: equal values and gaps of exactly
        // eps must show up regularly.
        let mut rng = SplitMix64::new(42);
        let mut saw_duplicate = false;
        let mut saw_exact_gap = false;
        for _ in 0..400 {
            let inst = random_instance(&mut rng, 8);
            let values = inst.values();
            for i in 0..values.len() {
                for j in 0..values.len() {
                    if i == j {
                        continue;
                    }
                    let diff = &values[j] - &values[i];
                    if diff.is_zero() {
                        saw_duplicate = true;
                    }
                    if diff == *inst.eps() {
                        saw_exact_gap = true;
                    }
                }
            }
        }
        assert!(saw_duplicate);
        assert!(saw_exact_gap);
    }

    #[test]
    fn broken_property_reports_a_shrunk_witness() {
        // Stand-in for a buggy decision path: "fails" whenever the instance
        // has two or more values, so the minimal reproduction has exactly 2.
        fn broken(rng: &mut SplitMix64, n_max: usize) -> Option<String> {
            let inst = random_instance(rng, n_max);
            let fails = |i: &Instance| i.len() >= 2;
            if !fails(&inst) {
                return None;
            }
            Some(describe_instance(&shrink_instance(&inst, &fails)))
        }
        let report = run_properties(
            &[("deliberately broken", broken)],
            &VerifyOptions {
                trials: 50,
                n_max: 8,
                seed: 3,
            },
        );
        assert!(!report.all_passed());
        let outcome = &report.properties[0];
        assert!(outcome.failures > 0);
        let failure = outcome.first_failure.as_ref().unwrap();
        // Exactly two values survive shrinking.
        let values = failure.split("values=[").nth(1).unwrap();
        assert_eq!(values.matches(", ").count(), 1, "{failure}");
        assert!(report.render().contains("minimal failure"));
    }

    #[test]
    fn shrinking_finds_a_small_witness() {
        // Shrink against an artificial failure: "contains a duplicate pair".
        let inst = Instance::new(
            vec![
                Rational::from_int(1),
                Rational::from_int(5),
                Rational::from_int(5),
                Rational::from_int(9),
                Rational::from_int(12),
            ],
            Rational::one(),
        )
        .unwrap();
        let fails = |i: &Instance| {
            let v = i.values();
            (0..v.len()).any(|a| (0..a).any(|b| v[a] == v[b]))
        };
        let min = shrink_instance(&inst, &fails);
        assert_eq!(min.len(), 2);
        assert_eq!(min.values()[0], min.values()[1]);
    }
}
