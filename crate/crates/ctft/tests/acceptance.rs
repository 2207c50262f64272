//! End-to-end acceptance suite: one test per advertised guarantee, each
//! printing a `[PASS]` line with the headline numbers when it goes through.
//! Runtime-bounded checks assert their own wall-clock budget.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;

use ctft::arcperm::{enumerate_arc_perms, enumerate_classes};
use ctft::arrangement::all_chambers;
use ctft::codec::enumerate_codes;
use ctft::polygon::{enumerate_ctft, enumerate_triangulations, ColoredTriangulation};
use ctft::tableaux::geodesic_count_formula;
use ctft::{
    verify_chamber_isomorphism, ArcClass, ArcPermutation, Arrangement, Chamber, ChamberGraph,
    Code, DiagonalPoset, Direction, FlipGraph, PartitionPoset, ShiftedTableau, SimpleGraph,
    TruncShiftedShape,
};

fn star_code(n: usize) -> Code {
    Code::from_triangulation(&ColoredTriangulation::canonical_star(n).unwrap())
}

#[test]
fn criterion_01_cardinalities() {
    let clock = Instant::now();
    for n in 5..=12usize {
        let codes = enumerate_codes(n).unwrap();
        assert_eq!(codes.len(), n << (n - 4), "|CTFT({n})|");
        let mut seen = BTreeSet::new();
        for code in &codes {
            let t = code.to_triangulation();
            assert_eq!(Code::from_triangulation(&t), *code, "decode then encode at n = {n}");
            assert!(seen.insert(t.chords().to_vec()), "decoding is injective at n = {n}");
        }
        if n <= 8 {
            let mut brute = BTreeSet::new();
            for t in enumerate_triangulations(n).unwrap() {
                if !t.is_triangle_free() {
                    continue;
                }
                let (a, b) = t.proper_colorings().unwrap();
                brute.insert(a.chords().to_vec());
                brute.insert(b.chords().to_vec());
            }
            assert_eq!(brute, seen, "brute force agrees at n = {n}");
            let orbit = enumerate_ctft(n).unwrap();
            assert_eq!(orbit.len(), codes.len(), "flip orbit covers everything at n = {n}");
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10 s");
    println!(
        "[PASS] criterion 1: |CTFT(n)| = n*2^(n-4) for n = 5..12 by bijective coding, \
         brute-force checked for n = 5..8 ({elapsed:?})"
    );
}

#[test]
fn criterion_02_diameter() {
    let clock = Instant::now();
    for n in 5..=9usize {
        let graph = FlipGraph::build(n).unwrap();
        assert_eq!(graph.diameter(), n * (n - 3) / 2, "diameter at n = {n}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60 s");
    println!("[PASS] criterion 2: diameter of the flip graph is n(n-3)/2 for n = 5..9 ({elapsed:?})");
}

#[test]
fn criterion_03_antipodes() {
    for n in 5..=9usize {
        let graph = FlipGraph::build(n).unwrap();
        for code in graph.codes() {
            assert_eq!(
                graph.distance(code, &code.reversed()).unwrap(),
                n * (n - 3) / 2,
                "distance to the reversal of {code} at n = {n}"
            );
        }
    }
    println!("[PASS] criterion 3: every triangulation lies at distance n(n-3)/2 from its reversal, n = 5..9");
}

/// Check the defining relations of the affine Weyl group of type C with
/// m + 1 generators, acting on `elements`, plus transitivity from `seed`.
fn check_affine_c_action<T, F>(elements: &[T], seed: &T, generators: usize, apply: F)
where
    T: Clone + Eq + Ord + std::fmt::Debug,
    F: Fn(&T, usize) -> T,
{
    let m = generators - 1;
    let word = |x: &T, letters: &[usize]| {
        letters.iter().fold(x.clone(), |acc, &i| apply(&acc, i))
    };
    for x in elements {
        for i in 0..generators {
            assert_eq!(word(x, &[i, i]), *x, "generator {i} must be an involution");
        }
        for i in 0..generators {
            for j in i + 2..generators {
                assert_eq!(word(x, &[i, j, i, j]), *x, "distant generators {i},{j} must commute");
            }
        }
        for i in 1..m.saturating_sub(1) {
            assert_eq!(
                word(x, &[i, i + 1, i, i + 1, i, i + 1]),
                *x,
                "middle pair {i},{} obeys the braid relation of order 3",
                i + 1
            );
        }
        if m >= 2 {
            for (i, j) in [(0, 1), (m - 1, m)] {
                assert_eq!(
                    word(x, &[i, j, i, j, i, j, i, j]),
                    *x,
                    "end pair {i},{j} obeys the braid relation of order 4"
                );
            }
        }
    }
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
    let all: BTreeSet<T> = elements.iter().cloned().collect();
    assert_eq!(orbit, all, "the action must be transitive");
}

#[test]
fn criterion_04_action_correctness() {
    for n in 6..=8usize {
        let codes = enumerate_codes(n).unwrap();
        check_affine_c_action(&codes, &star_code(n), n - 3, |c, i| c.apply_generator(i).unwrap());
    }
    for n in 4..=6usize {
        let perms = enumerate_arc_perms(n).unwrap();
        let identity = ArcPermutation::new((0..n).collect()).unwrap();
        check_affine_c_action(&perms, &identity, n - 1, |p, i| p.apply_generator(i).unwrap());
    }
    for n in 6..=7usize {
        let classes = enumerate_classes(n).unwrap();
        let seed = ArcClass::of_triangulation(&ColoredTriangulation::canonical_star(n).unwrap());
        check_affine_c_action(&classes, &seed, n - 3, |c, i| c.apply_generator(i).unwrap());
    }
    println!(
        "[PASS] criterion 4: affine type-C relations and transitivity hold for flips (n = 6..8), \
         arc permutations (n = 4..6), and classes (n = 6,7)"
    );
}

#[test]
fn criterion_05_chamber_isomorphism() {
    for n in 5..=8usize {
        let check = verify_chamber_isomorphism(n).unwrap();
        assert_eq!(check.vertex_count, n << (n - 4), "vertices at n = {n}");
        assert_eq!(check.edge_count, FlipGraph::build(n).unwrap().edge_count(), "edges at n = {n}");
    }
    println!(
        "[PASS] criterion 5: triangulation-to-chamber is a label-preserving graph isomorphism, n = 5..8"
    );
}

#[test]
fn criterion_06_geodesics_flip_each_diagonal_once() {
    let clock = Instant::now();
    let expected = [(6usize, 8usize), (7, 140), (8, 12768)];
    for (n, count) in expected {
        let graph = FlipGraph::build(n).unwrap();
        let star = star_code(n);
        let mut walked = 0;
        for path in graph.geodesics(&star, &star.reversed(), Direction::Both).unwrap() {
            assert_eq!(path.len(), n * (n - 3) / 2, "geodesic length at n = {n}");
            assert!(path.covers_all_diagonals(), "a geodesic missed a diagonal at n = {n}");
            walked += 1;
        }
        assert_eq!(walked, count, "geodesic count at n = {n}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 120 s");
    println!(
        "[PASS] criterion 6: all 8 + 140 + 12768 geodesics at n = 6,7,8 flip every diagonal \
         exactly once ({elapsed:?})"
    );
}

fn linear_extensions(poset: &DiagonalPoset) -> BTreeSet<Vec<ctft::Diagonal>> {
    fn extend(
        poset: &DiagonalPoset,
        placed: &mut Vec<ctft::Diagonal>,
        out: &mut BTreeSet<Vec<ctft::Diagonal>>,
    ) {
        if placed.len() == poset.elements().len() {
            out.insert(placed.clone());
            return;
        }
        for &d in poset.elements() {
            if placed.contains(&d) {
                continue;
            }
            let ready = poset
                .elements()
                .iter()
                .all(|&below| below == d || !poset.leq(below, d) || placed.contains(&below));
            if ready {
                placed.push(d);
                extend(poset, placed, out);
                placed.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    extend(poset, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_07_order_characterization() {
    for n in 6..=7usize {
        let graph = FlipGraph::build(n).unwrap();
        let star = star_code(n);
        let extensions = linear_extensions(&DiagonalPoset::new(n).unwrap());
        let plus: BTreeSet<_> = graph
            .geodesics(&star, &star.reversed(), Direction::Plus)
            .unwrap()
            .map(|p| p.diagonals().to_vec())
            .collect();
        assert_eq!(plus, extensions, "ascending orders at n = {n}");
        let minus_reflected: BTreeSet<_> = graph
            .geodesics(&star, &star.reversed(), Direction::Minus)
            .unwrap()
            .map(|p| p.diagonals().iter().map(|d| d.reflected(n)).collect::<Vec<_>>())
            .collect();
        assert_eq!(minus_reflected, extensions, "descending orders at n = {n}");
    }
    println!(
        "[PASS] criterion 7: ascending geodesic orders = linear extensions of the diagonal poset, \
         descending ones match under the vertex reflection, n = 6,7"
    );
}

#[test]
fn criterion_08_tableau_bijection() {
    for n in 6..=7usize {
        let graph = FlipGraph::build(n).unwrap();
        let star = star_code(n);
        let shape = TruncShiftedShape::for_polygon(n).unwrap();
        let mut images = BTreeSet::new();
        for path in graph.geodesics(&star, &star.reversed(), Direction::Plus).unwrap() {
            let tableau = ShiftedTableau::from_diagonal_sequence(path.diagonals()).unwrap();
            assert_eq!(tableau.diagonal_sequence(), path.diagonals(), "round trip at n = {n}");
            assert!(images.insert(tableau), "two geodesics gave one tableau at n = {n}");
        }
        let all: BTreeSet<_> = shape.enumerate_standard().into_iter().collect();
        assert_eq!(images, all, "tableau image at n = {n}");
    }

    let shape = TruncShiftedShape::new(3).unwrap();
    let second = ShiftedTableau::new(
        shape,
        vec![vec![1, 2, 4], vec![3, 5, 6], vec![7, 8], vec![9]],
    )
    .unwrap();
    let rendered: Vec<String> = second
        .diagonal_sequence()
        .iter()
        .map(|d| format!("[{},{}]", d.a(), d.b()))
        .collect();
    assert_eq!(
        rendered.join(","),
        "[0,2],[0,3],[1,3],[0,4],[1,4],[1,5],[2,4],[2,5],[3,5]"
    );
    assert_eq!(
        second.row_col_words(),
        (vec![1, 1, 2, 1, 2, 2, 3, 3, 4], vec![1, 2, 2, 3, 3, 4, 3, 4, 4])
    );
    let first = ShiftedTableau::new(
        shape,
        vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8], vec![9]],
    )
    .unwrap();
    assert_eq!(
        first.row_col_words(),
        (vec![1, 1, 1, 2, 2, 2, 3, 3, 4], vec![1, 2, 3, 2, 3, 4, 3, 4, 4])
    );
    println!(
        "[PASS] criterion 8: ascending geodesics biject with standard tableaux (n = 6,7); \
         the worked diagonal sequence and both row/column word pairs reproduce exactly"
    );
}

#[test]
fn criterion_09_geodesic_counting() {
    for n in 6..=10usize {
        let shape = TruncShiftedShape::for_polygon(n).unwrap();
        assert_eq!(
            geodesic_count_formula(n).unwrap(),
            shape.count_standard() * BigUint::from(2u8),
            "formula vs tableau count at n = {n}"
        );
    }
    let concrete = [(6usize, 8u64), (7, 140), (8, 12768), (9, 7_104_240)];
    for (n, value) in concrete {
        assert_eq!(geodesic_count_formula(n).unwrap(), BigUint::from(value), "value at n = {n}");
    }
    for n in 6..=8usize {
        let graph = FlipGraph::build(n).unwrap();
        let star = star_code(n);
        let walked = graph.geodesics(&star, &star.reversed(), Direction::Both).unwrap().count();
        assert_eq!(BigUint::from(walked), geodesic_count_formula(n).unwrap(), "walk at n = {n}");
    }
    let graph = FlipGraph::build(9).unwrap();
    let star = star_code(9);
    let by_rank = graph
        .count_monotone_paths(&star, &star.reversed(), Direction::Both)
        .unwrap();
    let by_layers = graph.count_shortest_paths(&star, &star.reversed()).unwrap();
    assert_eq!(by_rank, BigUint::from(7_104_240u64));
    assert_eq!(by_layers, BigUint::from(7_104_240u64));
    println!(
        "[PASS] criterion 9: geodesic counts 8, 140, 12768, 7104240 agree across the closed \
         formula, doubled tableau counts (n = 6..10), path walks (n = 6..8), and two \
         independent path-counting routines at n = 9"
    );
}

#[test]
fn criterion_10_chamber_graph_examples() {
    let pentagon = Arc::new(Arrangement::new(SimpleGraph::k_prime(5).unwrap()));
    let chambers: Vec<Chamber> = enumerate_classes(5)
        .unwrap()
        .iter()
        .map(|class| Chamber::of_arc_class(&pentagon, class).unwrap())
        .collect();
    let class_graph = ChamberGraph::new(chambers).unwrap();
    assert_eq!(class_graph.vertex_count(), 10);
    assert!(class_graph.is_cycle(), "class chambers of the pentagon form a 10-cycle");

    let square = Arc::new(Arrangement::new(SimpleGraph::k_prime(4).unwrap()));
    let full_graph = ChamberGraph::new(all_chambers(&square).unwrap()).unwrap();
    assert_eq!(full_graph.vertex_count(), 4);
    assert!(full_graph.is_cycle(), "chambers of the square arrangement form a 4-cycle");
    println!("[PASS] criterion 10: the pentagon class chambers form a 10-cycle and the square arrangement a 4-cycle");
}

#[test]
fn criterion_11_negative_chamber() {
    for n in 5..=8usize {
        let arrangement = Arc::new(Arrangement::new(SimpleGraph::k_prime(n).unwrap()));
        for code in enumerate_codes(n).unwrap() {
            let class = ArcClass::of_triangulation(&code.to_triangulation());
            let reversed = ArcClass::of_triangulation(&code.reversed().to_triangulation());
            assert_eq!(
                Chamber::of_arc_class(&arrangement, &reversed).unwrap(),
                Chamber::of_arc_class(&arrangement, &class).unwrap().negative(),
                "reversal lands in the negative chamber at n = {n}"
            );
        }
    }
    println!("[PASS] criterion 11: reversing a triangulation negates its chamber, n = 5..8");
}

#[test]
fn criterion_12_partition_poset() {
    let poset = PartitionPoset::lambda(3).unwrap();
    assert_eq!(poset.elements().len(), 12);
    let chains = poset.count_maximal_chains();
    assert_eq!(chains, BigUint::from(4u8));
    let tall = TruncShiftedShape::new(3).unwrap().count_standard();
    let short = TruncShiftedShape::new(2).unwrap().count_standard();
    assert_eq!(tall, BigUint::from(4u8));
    assert_eq!(short, BigUint::from(1u8));
    assert_eq!(chains, tall, "chains match the shape with first row 3");
    assert_ne!(chains, short, "and not the shape with first row 2");
    println!(
        "[PASS] criterion 12: the partition poset on 3 has 12 elements and {chains} maximal \
         chains; candidate shape counts: first row 3 gives {tall}, first row 2 gives {short}"
    );
}
