//! Verification suites behind `ctft verify`. Each suite returns a list of
//! named checks; a check that fails carries a concrete counterexample.

use std::collections::BTreeSet;
use std::fmt;

use anyhow::Result;
use num_bigint::BigUint;
use serde::Serialize;

use ctft::arcperm::{enumerate_arc_perms, enumerate_classes};
use ctft::codec::enumerate_codes;
use ctft::polygon::ColoredTriangulation;
use ctft::tableaux::geodesic_count_formula;
use ctft::{
    verify_chamber_isomorphism, ArcClass, ArcPermutation, Code, DiagonalPoset, Direction,
    FlipGraph, ShiftedTableau, TruncShiftedShape,
};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn pass(id: &'static str, detail: impl Into<String>) -> Check {
        Check { id, pass: true, detail: detail.into(), counterexample: None }
    }

    fn outcome(id: &'static str, detail: impl Into<String>, failure: Option<String>) -> Check {
        Check { id, pass: failure.is_none(), detail: detail.into(), counterexample: failure }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub n: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &'static str, n: usize, checks: Vec<Check>) -> Report {
        let pass = checks.iter().all(|c| c.pass);
        Report { suite, n, checks, pass }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} at n = {}", self.suite, self.n)?;
        for check in &self.checks {
            let mark = if check.pass { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", check.id, check.detail)?;
            if let Some(witness) = &check.counterexample {
                writeln!(f, "       counterexample: {witness}")?;
            }
        }
        writeln!(f, "overall: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

fn star_code(n: usize) -> Result<Code> {
    Ok(Code::from_triangulation(&ColoredTriangulation::canonical_star(n)?))
}

/// First violation of the affine type-C relations for `generators` involutions
/// acting on `elements`, or None when all hold.
fn relation_failure<T, F>(elements: &[T], generators: usize, apply: &F) -> Option<String>
where
    T: Clone + Eq + fmt::Display,
    F: Fn(&T, usize) -> T,
{
    let m = generators - 1;
    let word = |x: &T, letters: &[usize]| letters.iter().fold(x.clone(), |acc, &i| apply(&acc, i));
    for x in elements {
        for i in 0..generators {
            if word(x, &[i, i]) != *x {
                return Some(format!("generator {i} is not an involution at {x}"));
            }
        }
        for i in 0..generators {
            for j in i + 2..generators {
                if word(x, &[i, j, i, j]) != *x {
                    return Some(format!("generators {i} and {j} do not commute at {x}"));
                }
            }
        }
        for i in 1..m.saturating_sub(1) {
            if word(x, &[i, i + 1, i, i + 1, i, i + 1]) != *x {
                return Some(format!("braid relation of order 3 fails at {x} for {i},{}", i + 1));
            }
        }
        if m >= 2 {
            for (i, j) in [(0, 1), (m - 1, m)] {
                if word(x, &[i, j, i, j, i, j, i, j]) != *x {
                    return Some(format!("braid relation of order 4 fails at {x} for {i},{j}"));
                }
            }
        }
    }
    None
}

/// Elements outside the orbit of `seed`, or None when the action is
/// transitive.
fn orbit_failure<T, F>(elements: &[T], seed: &T, generators: usize, apply: &F) -> Option<String>
where
    T: Clone + Ord + fmt::Display,
    F: Fn(&T, usize) -> T,
{
    let mut orbit = BTreeSet::from([seed.clone()]);
    let mut frontier = vec![seed.clone()];
    while let Some(x) = frontier.pop() {
        for i in 0..generators {
            let y = apply(&x, i);
            if orbit.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    elements
        .iter()
        .find(|x| !orbit.contains(x))
        .map(|x| format!("{x} is not reachable from {seed}"))
}

fn action_checks<T, F>(
    relations_id: &'static str,
    transitivity_id: &'static str,
    elements: &[T],
    seed: &T,
    generators: usize,
    apply: F,
) -> [Check; 2]
where
    T: Clone + Ord + fmt::Display,
    F: Fn(&T, usize) -> T,
{
    let detail = format!("{} elements, {generators} generators", elements.len());
    [
        Check::outcome(relations_id, detail.clone(), relation_failure(elements, generators, &apply)),
        Check::outcome(transitivity_id, detail, orbit_failure(elements, seed, generators, &apply)),
    ]
}

pub fn actions(n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let codes = enumerate_codes(n)?;
    checks.extend(action_checks(
        "flip-relations",
        "flip-transitivity",
        &codes,
        &star_code(n)?,
        n - 3,
        |c: &Code, i| c.apply_generator(i).expect("labels are in range"),
    ));
    let perms = enumerate_arc_perms(n)?;
    let identity = ArcPermutation::new((0..n).collect())?;
    checks.extend(action_checks(
        "arc-relations",
        "arc-transitivity",
        &perms,
        &identity,
        n - 1,
        |p: &ArcPermutation, i| p.apply_generator(i).expect("positions are in range"),
    ));
    let classes = enumerate_classes(n)?;
    let seed = ArcClass::of_triangulation(&ColoredTriangulation::canonical_star(n)?);
    checks.extend(action_checks(
        "class-relations",
        "class-transitivity",
        &classes,
        &seed,
        n - 3,
        |c: &ArcClass, i| c.apply_generator(i).expect("labels are in range"),
    ));
    Ok(checks)
}

pub fn diameter(n: usize) -> Result<Vec<Check>> {
    let graph = FlipGraph::build(n)?;
    let want = n * (n - 3) / 2;
    let got = graph.diameter();
    let mut checks = vec![Check::outcome(
        "diameter",
        format!("{} vertices, expected diameter {want}", graph.vertex_count()),
        (got != want).then(|| format!("computed diameter {got}")),
    )];
    let mut witness = None;
    for code in graph.codes() {
        let d = graph.distance(code, &code.reversed())?;
        if d != want {
            witness = Some(format!("distance({code}, {}) = {d}, want {want}", code.reversed()));
            break;
        }
    }
    checks.push(Check::outcome(
        "antipodal-distance",
        format!("every triangulation against its reversal, distance {want}"),
        witness,
    ));
    Ok(checks)
}

pub fn isomorphism(n: usize) -> Vec<Check> {
    match verify_chamber_isomorphism(n) {
        Ok(result) => vec![Check::pass(
            "chamber-isomorphism",
            format!(
                "{} vertices and {} edges map onto chambers, erased diagonals match separating walls",
                result.vertex_count, result.edge_count
            ),
        )],
        Err(e) => vec![Check::outcome(
            "chamber-isomorphism",
            "triangulations against chambers of the cycle-free arrangement".to_string(),
            Some(e.to_string()),
        )],
    }
}

pub fn geodesics(n: usize) -> Result<Vec<Check>> {
    let graph = FlipGraph::build(n)?;
    let star = star_code(n)?;
    let target = star.reversed();
    let length = n * (n - 3) / 2;

    let mut walked = 0usize;
    let mut ascending = 0usize;
    let mut coverage_witness = None;
    for path in graph.geodesics(&star, &target, Direction::Both)? {
        walked += 1;
        if path.direction() == Direction::Plus {
            ascending += 1;
        }
        if coverage_witness.is_none() && !(path.len() == length && path.covers_all_diagonals()) {
            coverage_witness = Some(format!(
                "path through {} misses a diagonal",
                path.codes().iter().map(Code::to_string).collect::<Vec<_>>().join(" ")
            ));
        }
    }
    let mut checks = vec![Check::outcome(
        "diagonal-coverage",
        format!("{walked} geodesics of length {length}, each erasing every diagonal once"),
        coverage_witness,
    )];

    let by_rank = graph.count_monotone_paths(&star, &target, Direction::Both)?;
    let by_layers = graph.count_shortest_paths(&star, &target)?;
    let mut counts = vec![
        ("walked", BigUint::from(walked)),
        ("rank-monotone count", by_rank),
        ("layered count", by_layers),
    ];
    if n >= 6 {
        counts.push(("closed formula", geodesic_count_formula(n)?));
    }
    let disagreement = counts
        .iter()
        .find(|(_, v)| *v != counts[0].1)
        .filter(|_| counts.iter().any(|(_, v)| *v != counts[0].1))
        .map(|(name, v)| format!("{name} gives {v}, walking gives {}", counts[0].1));
    checks.push(Check::outcome(
        "count-methods",
        format!(
            "{} independent counting methods agree on {}",
            counts.len(),
            counts[0].1
        ),
        disagreement,
    ));

    checks.push(Check::outcome(
        "direction-split",
        format!("{ascending} ascending and {} descending geodesics", walked - ascending),
        (2 * ascending != walked).then(|| {
            format!("{ascending} ascending out of {walked}, expected an even split")
        }),
    ));
    Ok(checks)
}

pub fn tableaux(n: usize) -> Result<Vec<Check>> {
    let shape = TruncShiftedShape::for_polygon(n)?;
    let count = shape.count_standard();
    let mut checks = Vec::new();

    if n >= 6 {
        let formula = geodesic_count_formula(n)?;
        let doubled = count.clone() * BigUint::from(2u8);
        checks.push(Check::outcome(
            "count-vs-formula",
            format!("{count} standard fillings, formula gives {formula}"),
            (formula != doubled).then(|| format!("2 * {count} != {formula}")),
        ));
    } else {
        checks.push(Check::outcome(
            "count-vs-formula",
            format!("{count} standard filling; the closed formula starts at n = 6"),
            (count != BigUint::from(1u8)).then(|| format!("expected 1, got {count}")),
        ));
    }

    if n <= 8 {
        let enumerated = shape.enumerate_standard();
        checks.push(Check::outcome(
            "enumeration-matches-count",
            format!("{} fillings enumerated", enumerated.len()),
            (BigUint::from(enumerated.len()) != count)
                .then(|| format!("enumerated {} but counted {count}", enumerated.len())),
        ));
    }

    if n <= 7 {
        let graph = FlipGraph::build(n)?;
        let star = star_code(n)?;
        let target = star.reversed();
        let poset = DiagonalPoset::new(n)?;
        let all: BTreeSet<ShiftedTableau> = shape.enumerate_standard().into_iter().collect();
        let mut images = BTreeSet::new();
        let mut witness = None;
        for path in graph.geodesics(&star, &target, Direction::Plus)? {
            let tableau = ShiftedTableau::from_diagonal_sequence(path.diagonals())?;
            if !poset.is_linear_extension(path.diagonals()) {
                witness = Some(format!("{:?} is not a linear extension", path.diagonals()));
                break;
            }
            if tableau.diagonal_sequence() != path.diagonals() {
                witness = Some(format!("round trip changed {:?}", path.diagonals()));
                break;
            }
            if !images.insert(tableau) {
                witness = Some(format!("two geodesics share {:?}", path.diagonals()));
                break;
            }
        }
        if witness.is_none() && images != all {
            witness = Some(format!(
                "{} geodesic images against {} standard fillings",
                images.len(),
                all.len()
            ));
        }
        checks.push(Check::outcome(
            "geodesic-bijection",
            format!(
                "{} ascending geodesics map one-to-one onto standard fillings, \
                 each a linear extension of the diagonal order",
                all.len()
            ),
            witness,
        ));
    }
    Ok(checks)
}
