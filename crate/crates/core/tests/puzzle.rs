use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

use rk_core::lattice::LatticeDims;
use rk_core::puzzle::{
    clues_from_grid, fixtures, grid_from_solution, parse_grid, parse_puzzle, random_grid,
    render_grid, render_mask, serialize_grid, serialize_puzzle, validate, GridValues,
};
use rk_core::slope::{slope_prefix, Slope, SlopeOrder};
use rk_core::uniqueness::{default_max_q, entry_uniqueness_mask, invariants};
use rk_core::{Grid, Puzzle, Rational, SolutionStatus};

fn grid(rows: &[&[i64]]) -> Grid {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| Ratio::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    GridValues::from_rows_top_down(LatticeDims::new(rows[0].len(), rows.len()).unwrap(), &rows)
        .unwrap()
}

#[test]
fn basic_3x3() {
    let p = fixtures::load(fixtures::BASIC_3X3);
    let sol = p.solve().unwrap();
    let g = grid_from_solution(p.dims(), sol.unique().unwrap()).unwrap();
    let expect = grid(&[&[1, 3, 4], &[2, 7, 5], &[4, 9, 9]]);
    assert_eq!(g, expect);
    assert_eq!(clues_from_grid(&expect, p.slopes()).unwrap(), p);
    assert_eq!(serialize_puzzle(&p), fixtures::BASIC_3X3);
}

#[test]
fn ambiguous_4x4_is_underdetermined() {
    let p = fixtures::load(fixtures::AMBIGUOUS_4X4);
    let sol = p.solve().unwrap();
    assert_eq!(sol.status, SolutionStatus::Underdetermined);
    assert_eq!(sol.nullbasis.dim(), 1);
    assert!(validate(&p).is_consistent());
}

#[test]
fn half_slope_resolves_4x4() {
    let p = fixtures::load(fixtures::RESOLVED_4X4);
    assert_eq!(p.slopes(), slope_prefix(Slope::reciprocal_of(-2)).unwrap());
    let sol = p.solve().unwrap();
    let g = grid_from_solution(p.dims(), sol.unique().unwrap()).unwrap();
    let one = Rational::from_integer(1.into());
    let nine = Rational::from_integer(9.into());
    assert!(g
        .values()
        .iter()
        .all(|v| v.is_integer() && *v >= one && *v <= nine));
    assert_eq!(
        g,
        grid(&[&[8, 7, 3, 2], &[2, 3, 2, 4], &[1, 4, 5, 6], &[5, 2, 5, 3]])
    );
    // the coarser clues alone admit it too
    let base = fixtures::load(fixtures::AMBIGUOUS_4X4);
    assert!(base.solve().unwrap().contains(g.values()));
}

#[test]
fn render_examples() {
    assert_eq!(render_grid(&grid(&[&[5]])), "5\n");
    let d = LatticeDims::square(3).unwrap();
    let mask = entry_uniqueness_mask(d, &slope_prefix(Slope::integer(1)).unwrap()).unwrap();
    assert_eq!(render_mask(&mask), "###\n###\n###\n");
    let d = LatticeDims::square(4).unwrap();
    let mask = entry_uniqueness_mask(d, &slope_prefix(Slope::integer(1)).unwrap()).unwrap();
    assert!(render_mask(&mask).contains('.'));
}

#[test]
fn tampered_fixture_fails_validation() {
    let text = fixtures::BASIC_3X3.replace("clue inf 2 19", "clue inf 2 20");
    let p: Puzzle = parse_puzzle(&text).unwrap();
    let diag = validate(&p);
    assert!(!diag.is_consistent());
    assert!(diag
        .conflicts
        .iter()
        .all(|(a, b)| *a == Slope::VERTICAL || *b == Slope::VERTICAL));
    assert_eq!(p.solve().unwrap().status, SolutionStatus::Inconsistent);
}

#[test]
fn random_grids_round_trip_at_invariant() {
    for seed in 0..40u64 {
        let n = 1 + (seed % 6) as usize;
        let d = LatticeDims::square(n).unwrap();
        let k = invariants(d, default_max_q(d)).unwrap().k;
        let g: Grid = random_grid(d, 1, 9, seed).unwrap();
        let p = clues_from_grid(&g, &slope_prefix(k).unwrap()).unwrap();
        let sol = p.solve().unwrap();
        assert_eq!(sol.unique().unwrap(), g.values(), "seed {seed}");
    }
}

fn slopes_strategy() -> impl Strategy<Value = Vec<Slope>> {
    prop::collection::btree_set(0usize..12, 1..5)
        .prop_map(|idx| idx.into_iter().map(Slope::from_order_index).collect())
}

fn grid_strategy() -> impl Strategy<Value = Grid> {
    (1usize..6, 1usize..6).prop_flat_map(|(n, m)| {
        prop::collection::vec((-20i64..20, 1i64..4), n * m).prop_map(move |v| {
            let d = LatticeDims::new(n, m).unwrap();
            let vals = v
                .iter()
                .map(|&(a, b)| Ratio::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            GridValues::new(d, vals).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn grid_in_solution_set(g in grid_strategy(), slopes in slopes_strategy()) {
        let p = clues_from_grid(&g, &slopes).unwrap();
        prop_assert!(validate(&p).is_consistent());
        let sol = p.solve().unwrap();
        prop_assert!(sol.contains(g.values()));
    }

    #[test]
    fn puzzle_text_round_trip(g in grid_strategy(), slopes in slopes_strategy()) {
        let p = clues_from_grid(&g, &slopes).unwrap();
        let text = serialize_puzzle(&p);
        let back: Puzzle = parse_puzzle(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize_puzzle(&back), text);
    }

    #[test]
    fn grid_text_round_trip(g in grid_strategy()) {
        let text = serialize_grid(&g);
        let back: Grid = parse_grid(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_grid(&back), text);
        // aligned rendering parses back as well
        let rendered = format!("grid {} {}\n{}", g.dims().n(), g.dims().m(), render_grid(&g));
        prop_assert_eq!(parse_grid::<BigInt>(&rendered).unwrap(), g);
    }

    #[test]
    fn generated_grids_are_seeded(n in 1usize..8, m in 1usize..8, seed: u64, lo in -5i64..5, span in 0i64..10) {
        let d = LatticeDims::new(n, m).unwrap();
        let a: Grid = random_grid(d, lo, lo + span, seed).unwrap();
        prop_assert_eq!(&a, &random_grid(d, lo, lo + span, seed).unwrap());
        let lo_q = Rational::from_integer(lo.into());
        let hi_q = Rational::from_integer((lo + span).into());
        prop_assert!(a.values().iter().all(|v| *v >= lo_q && *v <= hi_q));
    }
}

#[test]
fn slope_order_tokens_parse_back() {
    for s in SlopeOrder::new().take(30) {
        assert_eq!(s.to_string().parse::<Slope>().unwrap(), s);
    }
}
