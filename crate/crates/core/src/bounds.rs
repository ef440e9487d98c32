//! Lower bounds on the domination number of girth-constrained graphs, the
//! edge bound for graphs of girth at least `g`, and per-graph bound reports.
//!
//! All comparisons use [`TOLERANCE`]; a bound is *valid* for a graph when
//! `gamma >= value - TOLERANCE` and *tight* when `|gamma - value| <= TOLERANCE`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{girth, is_star, structure_summary, Girth, Graph};

pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("negative radicand 8(m-n)+9 = {0}; the graph cannot be connected")]
    NegativeRadicand(i64),
    #[error("girth {0} below the minimum of 3")]
    GirthTooSmall(usize),
    #[error("girth {0} below 12")]
    GirthBelowTwelve(usize),
    #[error("girth {0} outside [12, 14]")]
    GirthOutsideTriangleFreeRange(usize),
    #[error("edge bound needs at least one vertex")]
    NoVertices,
}

/// `(3 + sqrt(8(m - n) + 9)) / 2`: connected graphs of girth at least 7
/// that are not stars.
pub fn bound_general_g7(n: usize, m: usize) -> Result<f64, BoundError> {
    let radicand = 8 * (m as i64 - n as i64) + 9;
    if radicand < 0 {
        return Err(BoundError::NegativeRadicand(radicand));
    }
    Ok((3.0 + (radicand as f64).sqrt()) / 2.0)
}

/// `max(sqrt(n), sqrt(2m/3))`: connected, girth at least 7, minimum degree 2.
pub fn bound_mindeg2_g7(n: usize, m: usize) -> f64 {
    (n as f64).sqrt().max((2.0 * m as f64 / 3.0).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeBound {
    /// `n^2 / (g - 1)`
    pub stated: f64,
    /// `n(n - 1) / (g - 1)`
    pub derived: f64,
}

/// Maximum edge count of an `n`-vertex graph with girth at least `g`.
pub fn lemma1_max_edges(n: usize, g: usize) -> Result<EdgeBound, BoundError> {
    if g < 3 {
        return Err(BoundError::GirthTooSmall(g));
    }
    if n == 0 {
        return Err(BoundError::NoVertices);
    }
    let (n, denom) = (n as f64, (g - 1) as f64);
    Ok(EdgeBound {
        stated: n * n / denom,
        derived: n * (n - 1.0) / denom,
    })
}

/// `max(sqrt(n), sqrt((floor(g/3) - 1) m / 3))` for girth `g >= 12`.
pub fn bound_girth12(n: usize, m: usize, g: usize) -> Result<f64, BoundError> {
    if g < 12 {
        return Err(BoundError::GirthBelowTwelve(g));
    }
    let l = (g / 3) as f64;
    Ok((n as f64).sqrt().max(((l - 1.0) * m as f64 / 3.0).sqrt()))
}

/// `max(sqrt(n), sqrt(4m/3))` for `12 <= g <= 14`, where the quotient graph is
/// triangle-free and so has at most `gamma^2 / 4` edges.
pub fn bound_girth12_triangle_free(n: usize, m: usize, g: usize) -> Result<f64, BoundError> {
    if !(12..=14).contains(&g) {
        return Err(BoundError::GirthOutsideTriangleFreeRange(g));
    }
    Ok((n as f64).sqrt().max((4.0 * m as f64 / 3.0).sqrt()))
}

/// Smallest integer not below `value`, ignoring float noise within tolerance.
pub fn ceil_within_tolerance(value: f64) -> usize {
    (value - TOLERANCE).ceil().max(0.0) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub applicable: bool,
    pub value: Option<f64>,
    pub ceil_value: Option<usize>,
    pub slack: Option<f64>,
    pub valid: Option<bool>,
}

impl BoundEntry {
    fn new(applicable: bool, value: Option<f64>, gamma: Option<usize>) -> Self {
        let scored = applicable.then_some(()).and(value.zip(gamma));
        Self {
            applicable,
            value,
            ceil_value: value.map(ceil_within_tolerance),
            slack: scored.map(|(v, gm)| gm as f64 - v),
            valid: scored.map(|(v, gm)| gm as f64 >= v - TOLERANCE),
        }
    }

    pub fn is_tight(&self) -> bool {
        self.applicable && self.slack.is_some_and(|s| s.abs() <= TOLERANCE)
    }
}

/// The edge-count check for the graph's own girth. `slack` is the edge
/// headroom `stated - m` and `valid` is `m <= stated`; for forests the check
/// holds vacuously and carries no value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeBoundEntry {
    pub applicable: bool,
    pub value: Option<f64>,
    pub ceil_value: Option<usize>,
    pub slack: Option<f64>,
    pub valid: Option<bool>,
    pub derived: Option<f64>,
    pub derived_valid: Option<bool>,
    pub vacuous: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundEntries {
    pub general_g7: BoundEntry,
    pub mindeg2_g7: BoundEntry,
    pub girth12: BoundEntry,
    pub girth12_tf: BoundEntry,
    pub lemma1: EdgeBoundEntry,
}

impl BoundEntries {
    /// The four domination-number bounds with their report names.
    pub fn gamma_bounds(&self) -> [(&'static str, &BoundEntry); 4] {
        [
            ("general_g7", &self.general_g7),
            ("mindeg2_g7", &self.mindeg2_g7),
            ("girth12", &self.girth12),
            ("girth12_tf", &self.girth12_tf),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub l: Option<usize>,
    pub min_degree: usize,
    pub connected: bool,
    pub is_star: bool,
    pub gamma: Option<usize>,
    pub bounds: BoundEntries,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// Largest integer lower bound on gamma implied by the applicable entries.
    pub fn best_lower_bound(&self) -> usize {
        self.bounds
            .gamma_bounds()
            .iter()
            .filter(|(_, e)| e.applicable)
            .filter_map(|(_, e)| e.ceil_value)
            .max()
            .unwrap_or(0)
    }
}

/// Evaluates every bound on `g` with its applicability predicate; when
/// `gamma` is supplied, fills in slack and validity.
pub fn evaluate_all(g: &Graph, gamma: Option<usize>) -> BoundReport {
    let (n, m) = (g.n(), g.m());
    let summary = structure_summary(g);
    let gi = girth(g);
    let star = is_star(g);
    let connected = summary.connected;
    let min_deg2 = summary.min_degree >= 2;
    let finite = gi.finite();

    let general_g7 = BoundEntry::new(
        connected && gi.at_least(7) && !star,
        bound_general_g7(n, m).ok(),
        gamma,
    );
    let mindeg2_g7 = BoundEntry::new(
        connected && gi.at_least(7) && min_deg2,
        Some(bound_mindeg2_g7(n, m)),
        gamma,
    );
    let girth12 = BoundEntry::new(
        connected && min_deg2 && finite.is_some_and(|g| g >= 12),
        finite.and_then(|g| bound_girth12(n, m, g).ok()),
        gamma,
    );
    let girth12_tf = BoundEntry::new(
        connected && min_deg2 && finite.is_some_and(|g| (12..=14).contains(&g)),
        finite.and_then(|g| bound_girth12_triangle_free(n, m, g).ok()),
        gamma,
    );

    let lemma1 = match finite.map(|g| lemma1_max_edges(n, g)) {
        Some(Ok(b)) => EdgeBoundEntry {
            applicable: true,
            value: Some(b.stated),
            ceil_value: Some(ceil_within_tolerance(b.stated)),
            slack: Some(b.stated - m as f64),
            valid: Some(m as f64 <= b.stated + TOLERANCE),
            derived: Some(b.derived),
            derived_valid: Some(m as f64 <= b.derived + TOLERANCE),
            vacuous: false,
        },
        Some(Err(_)) => unreachable!("finite girth is at least 3 and implies n >= 3"),
        None => EdgeBoundEntry {
            applicable: true,
            value: None,
            ceil_value: None,
            slack: None,
            valid: Some(true),
            derived: None,
            derived_valid: Some(true),
            vacuous: true,
        },
    };

    let mut notes = Vec::new();
    if summary.has_universal_vertex {
        notes.push("domination number is 1".to_string());
    }
    if gi == Girth::Acyclic {
        notes.push("acyclic: edge bound holds vacuously".to_string());
    }
    if let Some(gm) = gamma {
        if summary.has_universal_vertex != (gm == 1) {
            notes.push(format!(
                "supplied gamma {gm} disagrees with universal-vertex test"
            ));
        }
    }

    BoundReport {
        n,
        m,
        girth: gi,
        l: finite.map(|g| g / 3),
        min_degree: summary.min_degree,
        connected,
        is_star: star,
        gamma,
        bounds: BoundEntries {
            general_g7,
            mindeg2_g7,
            girth12,
            girth12_tf,
            lemma1,
        },
        notes,
    }
}

/// Integer lower bound on the domination number of the whole graph from the
/// applicable girth bounds (0 when none applies).
pub fn root_lower_bound(g: &Graph) -> usize {
    evaluate_all(g, None).best_lower_bound()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-4
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn general_g7_values() {
        assert_eq!(bound_general_g7(7, 7).unwrap(), 3.0);
        for n in 2..50 {
            assert_eq!(bound_general_g7(n, n - 1).unwrap(), 2.0);
        }
        assert!(close(bound_general_g7(24, 36).unwrap(), 6.6235));
        assert_eq!(bound_general_g7(24, 36).unwrap(), (3.0 + 105f64.sqrt()) / 2.0);
        assert_eq!(bound_general_g7(5, 3), Err(BoundError::NegativeRadicand(-7)));
    }

    #[test]
    fn mindeg2_values() {
        assert_eq!(bound_mindeg2_g7(9, 9), 3.0);
        assert!(close(bound_mindeg2_g7(7, 7), 2.6458));
        assert!(close(bound_mindeg2_g7(24, 36), 4.8990));
    }

    #[test]
    fn edge_bound_values() {
        let b = lemma1_max_edges(7, 7).unwrap();
        assert!(close(b.stated, 49.0 / 6.0));
        assert_eq!(b.derived, 7.0);
        let b = lemma1_max_edges(10, 5).unwrap();
        assert_eq!((b.stated, b.derived), (25.0, 22.5));
        let b = lemma1_max_edges(1, 9).unwrap();
        assert_eq!((b.stated, b.derived), (1.0 / 8.0, 0.0));
        assert_eq!(lemma1_max_edges(5, 2), Err(BoundError::GirthTooSmall(2)));
    }

    #[test]
    fn girth12_values() {
        assert!(close(bound_girth12(12, 12, 12).unwrap(), 2.0 * 3f64.sqrt()));
        assert!(close(bound_girth12(15, 15, 15).unwrap(), 20f64.sqrt()));
        assert!(close(bound_girth12(40, 45, 15).unwrap(), 60f64.sqrt()));
        assert_eq!(bound_girth12(11, 11, 11), Err(BoundError::GirthBelowTwelve(11)));
    }

    #[test]
    fn triangle_free_values() {
        assert_eq!(bound_girth12_triangle_free(12, 12, 12).unwrap(), 4.0);
        assert!(close(bound_girth12_triangle_free(13, 13, 13).unwrap(), 4.1633));
        assert_eq!(
            bound_girth12_triangle_free(12, 12, 15),
            Err(BoundError::GirthOutsideTriangleFreeRange(15))
        );
    }

    #[test]
    fn ceil_ignores_float_noise() {
        assert_eq!(ceil_within_tolerance(3.0 + 1e-12), 3);
        assert_eq!(ceil_within_tolerance(6.6235), 7);
        assert_eq!(ceil_within_tolerance(0.0), 0);
    }

    #[test]
    fn report_for_c7() {
        let r = evaluate_all(&cycle(7), Some(3));
        assert_eq!(r.girth, Girth::Finite(7));
        assert_eq!(r.l, Some(2));
        let e = r.bounds.general_g7;
        assert!(e.applicable && e.is_tight());
        assert_eq!(e.value, Some(3.0));
        assert_eq!(e.valid, Some(true));
        let e = r.bounds.mindeg2_g7;
        assert!(e.applicable && close(e.slack.unwrap(), 3.0 - 7f64.sqrt()));
        assert!(!r.bounds.girth12.applicable && r.bounds.girth12.value.is_none());
        assert_eq!(r.bounds.lemma1.valid, Some(true));
        assert_eq!(r.bounds.lemma1.derived, Some(7.0));
    }

    #[test]
    fn report_for_petersen_gates_on_girth() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
        }
        let p = Graph::from_edges(10, edges).unwrap();
        let r = evaluate_all(&p, None);
        assert!(r.bounds.gamma_bounds().iter().all(|(_, e)| !e.applicable));
        assert_eq!(r.bounds.lemma1.valid, Some(true));
        assert!(!r.bounds.lemma1.vacuous);
        assert_eq!(r.best_lower_bound(), 0);
    }

    #[test]
    fn report_for_star() {
        let star = Graph::from_edges(10, (1..10).map(|i| (0, i))).unwrap();
        let r = evaluate_all(&star, Some(1));
        assert!(r.is_star);
        assert!(r.bounds.gamma_bounds().iter().all(|(_, e)| !e.applicable));
        assert!(r.notes.iter().any(|s| s == "domination number is 1"));
        assert!(r.bounds.lemma1.vacuous && r.bounds.lemma1.valid == Some(true));
    }

    #[test]
    fn report_json_shape() {
        let r = evaluate_all(&cycle(12), Some(4));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["girth"], 12);
        assert_eq!(v["gamma"], 4);
        for key in ["general_g7", "mindeg2_g7", "girth12", "girth12_tf", "lemma1"] {
            for field in ["applicable", "value", "ceil_value", "slack", "valid"] {
                assert!(v["bounds"][key].get(field).is_some(), "{key}.{field}");
            }
        }
        assert_eq!(v["bounds"]["girth12_tf"]["value"], 4.0);
        assert_eq!(v["bounds"]["girth12_tf"]["valid"], true);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let v = serde_json::to_value(evaluate_all(&path, None)).unwrap();
        assert_eq!(v["girth"], "acyclic");
        assert!(v["gamma"].is_null());
    }

    proptest! {
        #[test]
        fn general_g7_increases_in_m(n in 2usize..200, extra in 0usize..200) {
            let m = n - 1 + extra;
            prop_assert!(bound_general_g7(n, m + 1).unwrap() > bound_general_g7(n, m).unwrap());
            prop_assert!(bound_general_g7(n, m).unwrap() >= 2.0);
        }

        #[test]
        fn refinement_dominates_girth12(n in 1usize..500, m in 0usize..1000, g in 12usize..=14) {
            prop_assert!(
                bound_girth12_triangle_free(n, m, g).unwrap() >= bound_girth12(n, m, g).unwrap()
            );
        }

        #[test]
        fn derived_edge_bound_below_stated(n in 1usize..500, g in 3usize..60) {
            let b = lemma1_max_edges(n, g).unwrap();
            prop_assert!(b.derived <= b.stated);
        }
    }
}
