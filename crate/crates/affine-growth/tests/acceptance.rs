//! End-to-end acceptance checks, one test per contract line.  Every test
//! finishes by printing a single PASS line with the numbers it verified so
//! the whole gate reads as a checklist under `--nocapture`.

use std::time::Instant;

use affine_growth::bijections::{
    embed_rs, fpf_to_osc, greene_shape, greene_shape_by_cover, knuth_matrix_from_osc,
    knuth_osc_from_matrix, osc_to_fpf, pair_to_osc, phi, psi, rs_growth, schensted,
    FpfInvolution, NatFpfMatrix, OscillatingTableau,
};
use affine_growth::hive::{
    count_agreement_sweep, count_extroverted, enumerate_hive3, extroverted_formula, tetra_sweep,
    Hive3,
};
use affine_growth::staircase::{
    all_labels, enumerate_diagrams, single_box_path, AffineGrowthDiagram, DiagramType,
};
use affine_growth::tableaux::{evacuation, promotion, Tableau};
use affine_growth::weights::{GlWeight, Int, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(entries: &[Int]) -> GlWeight {
    GlWeight::new(entries.to_vec()).unwrap()
}

fn part(parts: &[Int]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn tab(rows: &[&[Int]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n);
            out.push(q);
        }
    }
    out
}

/// The six-step path of the worked RS figure.
fn rs_figure_path() -> affine_growth::staircase::MinusculePath {
    single_box_path(
        &[false, false, false, true, true, true],
        &[&[], &[1], &[2], &[2, 1], &[1, 1], &[1], &[]],
        3,
    )
    .unwrap()
}

/// The eight-step path of the worked growth figure.
fn growth_figure_path() -> affine_growth::staircase::MinusculePath {
    single_box_path(
        &[false, false, false, true, false, true, true, true],
        &[
            &[],
            &[1],
            &[1, 1],
            &[1, 1, 1],
            &[1, 1],
            &[2, 1],
            &[2],
            &[1],
            &[],
        ],
        4,
    )
    .unwrap()
}

#[test]
fn a1_local_rule_equals_octahedron_excavation() {
    let start = Instant::now();
    let mut squares = 0u64;
    // 2500 seeds per rank, four label orientations each: at least 10^4
    // independent squares per orientation across ranks 1..=5, with weight
    // entries drawn from -4..=4.
    for m in 1..=5 {
        squares += tetra_sweep(m, 2_500, 0xACCE5501 + m as u64).unwrap();
    }
    let elapsed = start.elapsed();
    assert!(squares >= 4 * 10_000, "only {squares} squares checked");
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget is 1 min");
    println!(
        "PASS local rule = octahedron excavation on {squares} random squares \
         (ranks 1..=5, four orientations, {elapsed:.2?})"
    );
}

#[test]
fn a2_counting_methods_agree() {
    let start = Instant::now();
    // Every type with rank <= 4, period 2..=6, total fundamental size <= 6:
    // closed paths, filled diagrams, hive growth, and the Kostka oracle
    // must produce the same number.
    let agg = count_agreement_sweep(4, 2..=6, 6).unwrap();
    let elapsed = start.elapsed();
    assert!(agg.types_checked > 100_000, "{agg:?}");
    assert!(agg.nonzero_types > 9_000, "{agg:?}");
    assert!(
        elapsed.as_secs() < 300,
        "took {elapsed:?}, budget is 5 min"
    );
    println!(
        "PASS paths = diagrams = hives = Kostka on {} types ({} nonzero, \
         {} paths total, {elapsed:.2?})",
        agg.types_checked, agg.nonzero_types, agg.paths_total
    );
}

#[test]
fn a3_golden_figures_reproduce() {
    // Worked RS figure: the marks of the six-step diagram spell 546213,
    // which is the embedded form of 312 and splits into that permutation's
    // insertion and recording tableaux.
    let d = AffineGrowthDiagram::fill_from_path(&rs_figure_path()).unwrap();
    let f = d.affine_permutation().unwrap();
    assert_eq!(f.window(), &[5, 4, 6, 8, 7, 9]);
    assert_eq!(f.reduce(), vec![5, 4, 6, 2, 1, 3]);
    let (p, q) = schensted(&[3, 1, 2]).unwrap();
    assert_eq!(p, tab(&[&[1, 2], &[3]]));
    assert_eq!(q, tab(&[&[1, 3], &[2]]));
    let pi = embed_rs(&[3, 1, 2]).unwrap();
    assert_eq!(pi.as_slice(), &[5, 4, 6, 2, 1, 3]);
    assert_eq!(osc_to_fpf(&pair_to_osc(&p, &q).unwrap()).unwrap(), pi);

    // Worked growth figure: eight steps in rank 4.
    let d = AffineGrowthDiagram::fill_from_path(&growth_figure_path()).unwrap();
    let f = d.affine_permutation().unwrap();
    assert_eq!(f.window(), &[4, 6, 8, 9, 7, 10, 13, 11]);
    assert_eq!(f.reduce(), vec![4, 6, 8, 1, 7, 2, 5, 3]);

    // Triangle figure: both displayed hives are the unique ones over their
    // boundary weights.
    let h1 = Hive3::from_rows(vec![vec![0, 2, 3, 3], vec![4, 5, 5], vec![6, 6], vec![6]]).unwrap();
    let h2 = Hive3::from_rows(vec![vec![0, 2, 3, 3], vec![4, 5, 5], vec![5, 6], vec![6]]).unwrap();
    assert_eq!(
        enumerate_hive3(&w(&[2, 1, 0]), &w(&[2, 1, 0]), &w(&[4, 2, 0])),
        vec![h1]
    );
    assert_eq!(
        enumerate_hive3(&w(&[2, 1, 0]), &w(&[2, 1, 0]), &w(&[4, 1, 1])),
        vec![h2]
    );

    // Special-linear figure: the first line climbs to the 3 x 3 rectangle
    // through the displayed chain, and the next line is its promotion.
    let d = AffineGrowthDiagram::fill_from_path(&rs_figure_path()).unwrap();
    let sl = d.to_sl();
    assert_eq!(
        sl[0],
        vec![
            part(&[]),
            part(&[1]),
            part(&[2]),
            part(&[2, 1]),
            part(&[2, 2, 1]),
            part(&[3, 2, 2]),
            part(&[3, 3, 3]),
        ]
    );
    let t1 = Tableau::from_chain(&sl[0]).unwrap();
    let t2 = Tableau::from_chain(&sl[1]).unwrap();
    assert_eq!(t1, tab(&[&[1, 2, 5], &[3, 4, 6], &[4, 5, 6]]));
    assert_eq!(t2, tab(&[&[1, 3, 4], &[2, 4, 5], &[3, 5, 6]]));
    assert_eq!(promotion(&t1, 6), t2);
    assert_eq!(
        evacuation(&t1, 6),
        tab(&[&[1, 2, 3], &[1, 3, 4], &[2, 5, 6]])
    );
    let mut cycle = t1.clone();
    for l in 1..6 {
        cycle = promotion(&cycle, 6);
        assert_eq!(cycle, Tableau::from_chain(&sl[l]).unwrap());
    }

    // Refinement figure: the two-entry matrix, its single-box expansion,
    // and both tableau readings.
    let mat = NatFpfMatrix::from_pairs(4, &[(1, 2, 1), (3, 4, 2)]).unwrap();
    let (refined, bounds) = mat.expand();
    assert_eq!(refined.as_slice(), &[2, 1, 5, 6, 3, 4]);
    assert_eq!(bounds, vec![0, 1, 2, 4, 6]);
    assert_eq!(
        fpf_to_osc(&refined).unwrap().parts(),
        &[
            part(&[]),
            part(&[1]),
            part(&[]),
            part(&[1]),
            part(&[1, 1]),
            part(&[1]),
            part(&[]),
        ]
    );
    assert_eq!(
        knuth_osc_from_matrix(&mat).unwrap().parts(),
        &[part(&[]), part(&[1]), part(&[]), part(&[1, 1]), part(&[])]
    );

    println!(
        "PASS golden figures reproduced bit-exactly: RS 546213, growth window \
         [4,6,8,9,7,10,13,11], both unique 3-hives, promotion/evacuation \
         labels, matrix refinement"
    );
}

#[test]
fn a4_periodicity_and_duality() {
    let mut diagrams = 0u64;
    let mut families: Vec<DiagramType> = Vec::new();
    // All short types of small rank, plus both worked figure types.
    for m in 1..=3 {
        let alphabet = all_labels(m);
        for len in 2..=6 {
            let mut counter = vec![0usize; len];
            loop {
                let labels = counter.iter().map(|&i| alphabet[i]).collect();
                let ty = DiagramType::new(labels, m).unwrap();
                if ty.fundamental_size() <= 5 {
                    families.push(ty);
                }
                let mut pos = 0;
                while pos < len {
                    counter[pos] += 1;
                    if counter[pos] < alphabet.len() {
                        break;
                    }
                    counter[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
    }
    families.push(rs_figure_path().ty().clone());
    families.push(growth_figure_path().ty().clone());
    let mut windows = 0u64;
    for ty in &families {
        let n = ty.n() as i64;
        // Rows traverse their two phases monotonically only from rank n/2
        // up, so the mark window is only defined there; single-box types
        // are the ones whose marks form a permutation.
        let single_box = (1..=n).all(|i| ty.label(i).j() == 1);
        let marks_defined = 2 * ty.m() >= ty.n();
        for d in enumerate_diagrams(ty).unwrap() {
            diagrams += 1;
            assert_eq!(d.verify(), Vec::<String>::new());
            for l in 1..=n {
                assert_eq!(d.line(l + n), d.line(l), "period seam at line {l}");
            }
            let t = d.dual_transpose();
            assert_eq!(t.verify(), Vec::<String>::new());
            assert_eq!(t.dual_transpose(), d);
            if single_box && marks_defined {
                let f = d.affine_permutation().unwrap();
                assert!(f.squares_to_shift(), "window {:?}", f.window());
                windows += 1;
            }
        }
    }
    assert!(diagrams > 1_000, "only {diagrams} diagrams enumerated");
    assert!(windows > 100, "only {windows} windows checked");
    println!(
        "PASS periodicity and double dual transpose on {diagrams} diagrams \
         across {} types; {windows} mark windows square to the shift",
        families.len()
    );
}

/// All single-box oscillating tableaux with the given number of steps.
fn all_oscillating(len: usize) -> Vec<OscillatingTableau> {
    fn go(chain: &mut Vec<Partition>, left: usize, out: &mut Vec<OscillatingTableau>) {
        let current = chain.last().unwrap().clone();
        if left == 0 {
            if current.is_empty() {
                out.push(OscillatingTableau::new(chain.clone()).unwrap());
            }
            return;
        }
        if current.size() as usize > left {
            return;
        }
        for row in 0..=current.len() {
            if let Ok(next) = current.with_box_in_row(row) {
                chain.push(next);
                go(chain, left - 1, out);
                chain.pop();
            }
        }
        for row in 0..current.len() {
            let mut parts: Vec<Int> = current.parts().to_vec();
            parts[row] -= 1;
            if let Ok(next) = Partition::new(parts) {
                if next.size() == current.size() - 1 {
                    chain.push(next);
                    go(chain, left - 1, out);
                    chain.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![part(&[])], len, &mut out);
    out
}

#[test]
fn a5_bijection_round_trips() {
    let start = Instant::now();

    // Involution <-> diagram, both directions, over S_6 and S_8.
    let mut involutions = 0u64;
    for n in [6usize, 8] {
        let all = FpfInvolution::all(n);
        assert_eq!(all.len(), if n == 6 { 15 } else { 105 });
        for pi in all {
            let d = psi(&pi, n / 2).unwrap();
            assert_eq!(phi(&d).unwrap(), pi);
            assert_eq!(psi(&phi(&d).unwrap(), n / 2).unwrap(), d);
            involutions += 1;
        }
    }

    // Oscillating tableau <-> involution over all tableaux of lengths 6, 8.
    let mut tableaux = 0u64;
    for len in [6usize, 8] {
        let all = all_oscillating(len);
        assert_eq!(all.len(), if len == 6 { 15 } else { 105 });
        for osc in all {
            let pi = osc_to_fpf(&osc).unwrap();
            assert_eq!(fpf_to_osc(&pi).unwrap(), osc);
            tableaux += 1;
        }
    }

    // Matrix <-> semistandard tableau over all 3 x 3 instances with
    // entries at most 2: eight matrices satisfy the hook condition.
    let mut matrices = 0u64;
    for a in 0..=2u64 {
        for b in 0..=2u64 {
            for c in 0..=2u64 {
                let entries = vec![vec![0, a, b], vec![a, 0, c], vec![b, c, 0]];
                let Ok(mat) = NatFpfMatrix::new(entries) else {
                    continue;
                };
                let osc = knuth_osc_from_matrix(&mat).unwrap();
                let m = ((a + b + c) as usize).max(1);
                assert_eq!(knuth_matrix_from_osc(&osc, m).unwrap(), mat);
                matrices += 1;
            }
        }
    }
    assert_eq!(matrices, 8);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget is 2 min");
    println!(
        "PASS round trips: {involutions} involutions, {tableaux} oscillating \
         tableaux, {matrices} matrices ({elapsed:.2?})"
    );
}

#[test]
fn a6_greene_invariants_match_oracle() {
    let mut checked = 0u64;
    for perm in perms(6) {
        let marks: Vec<(Int, Int)> = perm
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as Int + 1, v as Int))
            .collect();
        assert_eq!(
            greene_shape(&marks),
            greene_shape_by_cover(&marks),
            "perm {perm:?}"
        );
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6EE17E);
    for _ in 0..500 {
        let marks: Vec<(Int, Int)> = (0..8)
            .map(|_| (rng.gen_range(1..=8), rng.gen_range(1..=8)))
            .collect();
        assert_eq!(
            greene_shape(&marks),
            greene_shape_by_cover(&marks),
            "marks {marks:?}"
        );
        checked += 1;
    }
    println!(
        "PASS insertion shape = max disjoint chain unions on {checked} mark \
         sets (all of S_6 plus 500 random 8-mark sets)"
    );
}

#[test]
fn a7_extroverted_triangulation_counts() {
    // One or two triangulations for the smallest polygons, then n * 2^(n-5):
    // 1, 2, 5, 12, 28, 64.  The hexagon count is the displayed 12.
    let counts: Vec<u64> = (3..=8).map(count_extroverted).collect();
    let formula: Vec<u64> = (3..=8).map(extroverted_formula).collect();
    assert_eq!(counts, formula);
    assert_eq!(counts, vec![1, 2, 5, 12, 28, 64]);
    assert_eq!(counts[3], 12);
    println!("PASS extroverted triangulation counts 1, 2, 5, 12, 28, 64 match the closed form");
}

#[test]
fn a8_schensted_identities() {
    let size = 5;
    let all = perms(size);
    for perm in &all {
        let n = perm.len();
        let (p, q) = schensted(perm).unwrap();
        assert_eq!(rs_growth(perm).unwrap(), (p.clone(), q.clone()), "perm {perm:?}");

        // The four symmetries of the square acting on the matrix.
        let k = p.size() as Int;
        let mut inverse = vec![0usize; n];
        for (i, &v) in perm.iter().enumerate() {
            inverse[v - 1] = i + 1;
        }
        assert_eq!(schensted(&inverse).unwrap(), (q.clone(), p.clone()));

        let reversed: Vec<usize> = perm.iter().rev().copied().collect();
        assert_eq!(
            schensted(&reversed).unwrap(),
            (p.transpose(), evacuation(&q, k).transpose())
        );

        let complemented: Vec<usize> = perm.iter().map(|&v| n + 1 - v).collect();
        assert_eq!(
            schensted(&complemented).unwrap(),
            (evacuation(&p, k).transpose(), q.transpose())
        );

        let both: Vec<usize> = reversed.iter().map(|&v| n + 1 - v).collect();
        assert_eq!(
            schensted(&both).unwrap(),
            (evacuation(&p, k), evacuation(&q, k))
        );
    }
    println!(
        "PASS insertion = growth and the four square symmetries on all {} \
         permutations of S_{size}",
        all.len()
    );
}
