//! Seeded numerical verification of the algebraic laws.
//!
//! Each [`Suite`] names one law and a defect expression that vanishes when
//! the law holds. [`run_suite`] evaluates that defect on `samples` random
//! input tuples and records the worst one. Laws that are known to fail for a
//! given algebra (commutativity beyond C, associativity for O) are run as
//! expected failures: the suite passes only if a violation is found.
//!
//! Sample `i` is drawn from a ChaCha stream keyed by `(seed, i)`, so a report
//! depends only on its parameters and not on evaluation order or thread
//! count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::literal::format_element;
use crate::zorn::{cross, diamond, dot, extract, involute, norm, trace, VectorMatrix};

/// `(x ◇ y) ◇ z - x ◇ (y ◇ z)`.
pub fn associator(x: &VectorMatrix, y: &VectorMatrix, z: &VectorMatrix) -> Result<VectorMatrix> {
    let left = diamond(&diamond(x, y)?, z)?;
    let right = diamond(x, &diamond(y, z)?)?;
    Ok(left - right)
}

/// `x ◇ y - y ◇ x`.
pub fn commutator(x: &VectorMatrix, y: &VectorMatrix) -> Result<VectorMatrix> {
    Ok(diamond(x, y)? - diamond(y, x)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Commutativity,
    Associativity,
    LeftAlternative,
    RightAlternative,
    Flexibility,
    MoufangLeft,
    MoufangRight,
    MoufangMiddle,
    ConjAntihom,
    NormComposition,
    QuadraticIdentity,
    TripleCyclic,
    BacCab,
    OctXxy,
    TraceCyclic,
}

impl Suite {
    /// Every suite, in the order [`run_all`] uses.
    pub const ALL: [Suite; 15] = [
        Suite::Commutativity,
        Suite::Associativity,
        Suite::LeftAlternative,
        Suite::RightAlternative,
        Suite::Flexibility,
        Suite::MoufangLeft,
        Suite::MoufangRight,
        Suite::MoufangMiddle,
        Suite::ConjAntihom,
        Suite::NormComposition,
        Suite::QuadraticIdentity,
        Suite::TripleCyclic,
        Suite::BacCab,
        Suite::OctXxy,
        Suite::TraceCyclic,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Suite::Commutativity => "commutativity",
            Suite::Associativity => "associativity",
            Suite::LeftAlternative => "left_alternative",
            Suite::RightAlternative => "right_alternative",
            Suite::Flexibility => "flexibility",
            Suite::MoufangLeft => "moufang_left",
            Suite::MoufangRight => "moufang_right",
            Suite::MoufangMiddle => "moufang_middle",
            Suite::ConjAntihom => "conj_antihom",
            Suite::NormComposition => "norm_composition",
            Suite::QuadraticIdentity => "quadratic_identity",
            Suite::TripleCyclic => "triple_cyclic",
            Suite::BacCab => "bac_cab",
            Suite::OctXxy => "oct_xxy",
            Suite::TraceCyclic => "trace_cyclic",
        }
    }

    /// Number of elements per input tuple.
    pub const fn arity(self) -> usize {
        match self {
            Suite::QuadraticIdentity => 1,
            Suite::Commutativity
            | Suite::LeftAlternative
            | Suite::RightAlternative
            | Suite::Flexibility
            | Suite::ConjAntihom
            | Suite::NormComposition
            | Suite::OctXxy => 2,
            Suite::Associativity
            | Suite::MoufangLeft
            | Suite::MoufangRight
            | Suite::MoufangMiddle
            | Suite::TripleCyclic
            | Suite::BacCab
            | Suite::TraceCyclic => 3,
        }
    }

    /// Suites about the cross and dot products draw pure vectors.
    pub const fn vector_only(self) -> bool {
        matches!(self, Suite::TripleCyclic | Suite::BacCab | Suite::OctXxy)
    }

    pub const fn valid_for(self, kind: AlgebraKind) -> bool {
        match self {
            Suite::BacCab => matches!(kind, AlgebraKind::Quaternion),
            Suite::OctXxy => matches!(kind, AlgebraKind::Octonion),
            _ => true,
        }
    }

    /// Whether the law holds in `kind`. When it does not, the suite is an
    /// expected failure and must find a violation.
    pub const fn expected_to_hold(self, kind: AlgebraKind) -> bool {
        match self {
            Suite::Commutativity => matches!(kind, AlgebraKind::Real | AlgebraKind::Complex),
            Suite::Associativity => !matches!(kind, AlgebraKind::Octonion),
            _ => true,
        }
    }

    /// The defect of the law on one input tuple, as a nonnegative residual.
    ///
    /// All inputs must share an algebra and there must be `arity()` of them.
    pub fn defect(self, inputs: &[VectorMatrix]) -> Result<f64> {
        if inputs.len() != self.arity() {
            return Err(Error::InvalidArgument(format!(
                "{} takes {} inputs, got {}",
                self.name(),
                self.arity(),
                inputs.len()
            )));
        }
        let kind = inputs[0].kind();
        if let Some(other) = inputs.iter().find(|x| x.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: other.kind(),
            });
        }
        if !self.valid_for(kind) {
            return Err(Error::UnsupportedKind {
                op: self.name(),
                kind,
            });
        }
        Ok(self.defect_unchecked(inputs))
    }

    fn defect_unchecked(self, v: &[VectorMatrix]) -> f64 {
        let kind = v[0].kind();
        match self {
            Suite::Commutativity => (v[0] * v[1] - v[1] * v[0]).max_abs(),
            Suite::Associativity => ((v[0] * v[1]) * v[2] - v[0] * (v[1] * v[2])).max_abs(),
            Suite::LeftAlternative => {
                let (x, y) = (v[0], v[1]);
                ((x * x) * y - x * (x * y)).max_abs()
            }
            Suite::RightAlternative => {
                let (x, y) = (v[0], v[1]);
                (x * (y * y) - (x * y) * y).max_abs()
            }
            Suite::Flexibility => {
                let (x, y) = (v[0], v[1]);
                ((x * y) * x - x * (y * x)).max_abs()
            }
            Suite::MoufangLeft => {
                let (x, a, y) = (v[0], v[1], v[2]);
                (((x * a) * x) * y - x * (a * (x * y))).max_abs()
            }
            Suite::MoufangRight => {
                let (x, a, y) = (v[0], v[1], v[2]);
                (y * ((x * a) * x) - ((y * x) * a) * x).max_abs()
            }
            Suite::MoufangMiddle => {
                // the right-hand side x(ya)x is checked under both groupings
                let (x, y, a) = (v[0], v[1], v[2]);
                let lhs = (x * y) * (a * x);
                let ya = y * a;
                let outer_right = x * (ya * x);
                let outer_left = (x * ya) * x;
                (lhs - outer_right)
                    .max_abs()
                    .max((lhs - outer_left).max_abs())
            }
            Suite::ConjAntihom => {
                let (x, y) = (v[0], v[1]);
                (involute(&(x * y)) - involute(&y) * involute(&x)).max_abs()
            }
            Suite::NormComposition => {
                let (x, y) = (v[0], v[1]);
                let nn = norm(&x) * norm(&y);
                (norm(&(x * y)) - nn).abs() / nn.max(1.0)
            }
            Suite::QuadraticIdentity => crate::zorn::quadratic_residual(&v[0]).max_abs(),
            Suite::TripleCyclic => {
                let (x, y, z) = (v[0].vec(), v[1].vec(), v[2].vec());
                let pd = |a: &[f64], b: &[f64]| dot(kind, a, b).unwrap().paper_dot;
                let cr = |a: &[f64], b: &[f64]| cross(kind, a, b).unwrap();
                let first = pd(x, &cr(y, z));
                let second = pd(z, &cr(x, y));
                let third = pd(y, &cr(z, x));
                (first - second).abs().max((first - third).abs())
            }
            Suite::BacCab => {
                let (x, y, z) = (v[0].vec(), v[1].vec(), v[2].vec());
                let xy = dot(kind, x, y).unwrap().paper_dot;
                let xz = dot(kind, x, z).unwrap().paper_dot;
                let lhs = cross(kind, x, &cross(kind, y, z).unwrap()).unwrap();
                max_abs_diff(
                    lhs.iter()
                        .zip(z.iter().zip(y))
                        .map(|(l, (zk, yk))| (*l, xy * zk - xz * yk)),
                )
            }
            Suite::OctXxy => {
                let (x, y) = (v[0].vec(), v[1].vec());
                let xy = dot(kind, x, y).unwrap().paper_dot;
                let xx = dot(kind, x, x).unwrap().paper_dot;
                let lhs = cross(kind, x, &cross(kind, x, y).unwrap()).unwrap();
                max_abs_diff(
                    lhs.iter()
                        .zip(x.iter().zip(y))
                        .map(|(l, (xk, yk))| (*l, -xy * xk + xx * yk)),
                )
            }
            Suite::TraceCyclic => {
                let (x, y, z) = (v[0], v[1], v[2]);
                let xy = x * y;
                let left = trace(&(xy * z));
                let right = trace(&(x * (y * z)));
                let rotated = trace(&(z * xy));
                (left - right).abs().max((left - rotated).abs())
            }
        }
    }
}

fn max_abs_diff(pairs: impl Iterator<Item = (f64, f64)>) -> f64 {
    pairs.fold(0.0, |m, (a, b)| m.max((a - b).abs()))
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let wanted = s.to_ascii_lowercase().replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == wanted)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Draws the input tuple for sample `index` of a run keyed by `seed`.
///
/// Coefficients are uniform in `[-1, 1]`. With `vector_only` the scalar
/// parts are zero and no randomness is spent on them.
pub fn sample_inputs(
    kind: AlgebraKind,
    seed: u64,
    index: u64,
    arity: usize,
    vector_only: bool,
) -> Vec<VectorMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut buf = [0.0; 7];
    (0..arity)
        .map(|_| {
            let scalar = if vector_only {
                0.0
            } else {
                rng.gen_range(-1.0..=1.0)
            };
            let v = &mut buf[..kind.vec_len()];
            for c in v.iter_mut() {
                *c = rng.gen_range(-1.0..=1.0);
            }
            VectorMatrix::new(kind, scalar, v).expect("length matches kind")
        })
        .collect()
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub suite: Suite,
    pub kind: AlgebraKind,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    /// The input tuple achieving `max_residual` (lowest sample index on ties).
    pub witness: Vec<Element>,
    /// Whether the algebra is expected to satisfy the law.
    pub expected_to_hold: bool,
    /// For holding laws: `max_residual <= tolerance`. For expected failures:
    /// `max_residual > tolerance`.
    pub passed: bool,
}

#[derive(Serialize)]
struct ReportWire {
    suite: &'static str,
    algebra: &'static str,
    samples: u64,
    seed: u64,
    tolerance: f64,
    max_residual: f64,
    witness: Vec<String>,
    passed: bool,
}

impl IdentityReport {
    /// Single-line JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        let wire = ReportWire {
            suite: self.suite.name(),
            algebra: self.kind.name(),
            samples: self.samples,
            seed: self.seed,
            tolerance: self.tolerance,
            max_residual: self.max_residual,
            witness: self.witness.iter().map(format_element).collect(),
            passed: self.passed,
        };
        serde_json::to_string(&wire).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let verdict = match (self.passed, self.expected_to_hold) {
            (true, true) => "PASS (holds)",
            (true, false) => "PASS (violation found, as expected)",
            (false, true) => "FAIL (law violated)",
            (false, false) => "FAIL (expected a violation, none found)",
        };
        let witness: Vec<_> = self.witness.iter().map(format_element).collect();
        format!(
            "{:<18} {:<10} samples={} seed={} max_residual={:e} tol={:e} {} witness=[{}]",
            self.suite.name(),
            self.kind.name(),
            self.samples,
            self.seed,
            self.max_residual,
            self.tolerance,
            verdict,
            witness.join(", ")
        )
    }
}

/// Runs one suite. Sampling is parallelized over the current rayon pool;
/// the result does not depend on the pool size.
pub fn run_suite(
    suite: Suite,
    kind: AlgebraKind,
    samples: u64,
    seed: u64,
    tolerance: f64,
) -> Result<IdentityReport> {
    if !suite.valid_for(kind) {
        return Err(Error::UnsupportedKind {
            op: suite.name(),
            kind,
        });
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }

    let draw = |i: u64| sample_inputs(kind, seed, i, suite.arity(), suite.vector_only());
    let (max_residual, worst) = (0..samples)
        .into_par_iter()
        .map(|i| (suite.defect_unchecked(&draw(i)), i))
        .reduce_with(worse)
        .expect("samples >= 1");

    let expected_to_hold = suite.expected_to_hold(kind);
    let within = max_residual <= tolerance;
    Ok(IdentityReport {
        suite,
        kind,
        samples,
        seed,
        tolerance,
        max_residual,
        witness: draw(worst).iter().map(extract).collect(),
        expected_to_hold,
        passed: if expected_to_hold {
            within
        } else {
            max_residual > tolerance
        },
    })
}

// Larger residual wins (NaN counts as largest); ties go to the lower index.
// Associative and commutative, so any reduction tree gives the same answer.
fn worse(a: (f64, u64), b: (f64, u64)) -> (f64, u64) {
    match a.0.total_cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}

/// Every suite valid for `kind`, in [`Suite::ALL`] order.
pub fn run_all(
    kind: AlgebraKind,
    samples: u64,
    seed: u64,
    tolerance: f64,
) -> Result<Vec<IdentityReport>> {
    Suite::ALL
        .into_iter()
        .filter(|s| s.valid_for(kind))
        .map(|s| run_suite(s, kind, samples, seed, tolerance))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraKind::*;

    fn b(kind: AlgebraKind, i: usize) -> VectorMatrix {
        VectorMatrix::basis(kind, i).unwrap()
    }

    #[test]
    fn quaternion_basis_associator_vanishes() {
        let a = associator(&b(Quaternion, 1), &b(Quaternion, 2), &b(Quaternion, 3)).unwrap();
        assert!(a.is_zero());
    }

    #[test]
    fn octonion_basis_associator() {
        // (e1 e2) e4 = e3 e4 = -e5 and e1 (e2 e4) = e1 e6 = e5
        let a = associator(&b(Octonion, 1), &b(Octonion, 2), &b(Octonion, 4)).unwrap();
        assert_eq!(a, b(Octonion, 5) * -2.0);
    }

    #[test]
    fn commutators() {
        let c = commutator(&b(Quaternion, 1), &b(Quaternion, 2)).unwrap();
        assert_eq!(c, b(Quaternion, 3) * 2.0);
        let x = VectorMatrix::new(Octonion, 0.5, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap();
        assert!(commutator(&x, &x).unwrap().is_zero());
        assert!(commutator(&b(Complex, 1), &b(Quaternion, 1)).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert_eq!("Moufang-Middle".parse::<Suite>(), Ok(Suite::MoufangMiddle));
        assert!("moufang".parse::<Suite>().is_err());
    }

    #[test]
    fn invalid_pairings() {
        assert!(matches!(
            run_suite(Suite::BacCab, Octonion, 10, 1, 1e-12),
            Err(Error::UnsupportedKind { .. })
        ));
        assert!(run_suite(Suite::OctXxy, Quaternion, 10, 1, 1e-12).is_err());
        assert!(run_suite(Suite::Flexibility, Octonion, 0, 1, 1e-12).is_err());
        assert!(run_suite(Suite::Flexibility, Octonion, 1, 1, 0.0).is_err());
    }

    #[test]
    fn sampling_is_keyed_by_index() {
        let a = sample_inputs(Octonion, 7, 3, 2, false);
        let a2 = sample_inputs(Octonion, 7, 3, 2, false);
        let other = sample_inputs(Octonion, 7, 4, 2, false);
        assert_eq!(a, a2);
        assert_ne!(a, other);
        for x in &a {
            assert!(x.max_abs() <= 1.0);
        }
        let v = sample_inputs(Quaternion, 7, 0, 3, true);
        assert!(v.iter().all(|x| x.scalar() == 0.0));
    }

    #[test]
    fn defect_checks_arguments() {
        let x = b(Octonion, 1);
        assert!(Suite::Associativity.defect(&[x, x]).is_err());
        assert!(Suite::Flexibility.defect(&[x, b(Quaternion, 1)]).is_err());
        assert!(Suite::BacCab.defect(&[x, x, x]).is_err());
        assert_eq!(
            Suite::Associativity.defect(&[b(Octonion, 1), b(Octonion, 2), b(Octonion, 4)]),
            Ok(2.0)
        );
    }

    #[test]
    fn reduction_prefers_lower_index_on_ties() {
        assert_eq!(worse((1.0, 5), (1.0, 2)), (1.0, 2));
        assert_eq!(worse((1.0, 2), (2.0, 9)), (2.0, 9));
        assert_eq!(worse((f64::NAN, 9), (2.0, 1)).1, 9);
    }

    #[test]
    fn small_runs() {
        let r = run_suite(Suite::Associativity, Quaternion, 200, 42, 1e-12).unwrap();
        assert!(r.passed && r.expected_to_hold);
        let r = run_suite(Suite::Associativity, Octonion, 200, 42, 1e-12).unwrap();
        assert!(r.passed && !r.expected_to_hold);
        assert!(r.max_residual > 0.1);
        assert_eq!(r.witness.len(), 3);
        let r = run_suite(Suite::MoufangMiddle, Octonion, 200, 42, 1e-12).unwrap();
        assert!(r.passed, "{}", r.to_text());
    }

    #[test]
    fn run_all_covers_valid_suites() {
        let real = run_all(Real, 50, 1, 1e-12).unwrap();
        assert_eq!(real.len(), 13);
        assert!(real.iter().all(|r| r.passed && r.expected_to_hold));
        let oct = run_all(Octonion, 50, 1, 1e-12).unwrap();
        assert_eq!(oct.len(), 14);
        assert!(oct.iter().all(|r| r.passed), "{:#?}", oct);
        assert!(oct.iter().any(|r| r.suite == Suite::OctXxy));
    }

    #[test]
    fn json_keys() {
        let r = run_suite(Suite::Commutativity, Quaternion, 20, 42, 1e-12).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut want = vec![
            "suite",
            "algebra",
            "samples",
            "seed",
            "tolerance",
            "max_residual",
            "witness",
            "passed",
        ];
        want.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, want);
        assert_eq!(v["suite"], "commutativity");
        assert_eq!(v["algebra"], "quaternion");
        assert_eq!(v["witness"].as_array().unwrap().len(), 2);
    }
}
