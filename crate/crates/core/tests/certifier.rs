use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rk_core::certifier::{
    omega_family, omega_q, peel_step_applies, peel_step_shortcut, propagate, propagate_over,
    propagate_with_transports, region_of, size_bound, staircase_length, BoundVariant, Staircase,
};
use rk_core::lattice::{enumerate_lines, Cell, LatticeDims, Line};
use rk_core::slope::{slope_prefix, Slope, SlopeOrder};
use rk_core::symmetry::GridTransform;
use rk_core::uniqueness::entry_uniqueness_mask;

#[test]
fn peeling_is_sound() {
    let order: Vec<Slope> = SlopeOrder::new().take(8).collect();
    for n in 1..=7 {
        for m in 1..=7 {
            let dims = LatticeDims::new(n, m).unwrap();
            for k in 1..=order.len() {
                let set = propagate(dims, &order[..k], &BTreeSet::new()).unwrap();
                let mask = entry_uniqueness_mask(dims, &order[..k]).unwrap();
                assert!(mask.covers(&set.to_mask()), "{n}x{m} prefix {k}");
                assert!(set.replay());
            }
        }
    }
}

fn all_weights(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn shortcut_implies_peel_step() {
    let mut applicable = 0;
    for len in 1..=6 {
        for w in all_weights(len, 4) {
            let st = Staircase::new(w);
            for m0 in 1..=len {
                for j in 1..=m0 + 1 {
                    for q in 1..=6 {
                        let Ok(short) = peel_step_shortcut(&st, m0, j, q) else {
                            continue;
                        };
                        if short {
                            applicable += 1;
                            assert!(
                                peel_step_applies(&st, j, q).unwrap(),
                                "{:?} m0={m0} j={j} q={q}",
                                st.weights()
                            );
                        }
                    }
                }
            }
        }
    }
    assert!(applicable > 1000);
}

fn lines_of(dims: LatticeDims, slopes: &[Slope]) -> Vec<Line> {
    slopes
        .iter()
        .flat_map(|&s| enumerate_lines(dims, s))
        .collect()
}

#[test]
fn peel_step_is_reached() {
    let mut used = 0;
    for len in 1..=5 {
        for w in all_weights(len, 3) {
            let st = Staircase::new(w);
            let dims = LatticeDims::new(st.total() as usize + 1, len + 1).unwrap();
            let region = region_of(&st, dims).unwrap();
            for j in 1..=len + 1 {
                for q in 1..=4u64 {
                    if !peel_step_applies(&st, j, q).unwrap() {
                        continue;
                    }
                    used += 1;
                    let slope = Slope::reciprocal_of(-(q as i64));
                    let set = propagate(dims, &[slope], region.cells()).unwrap();
                    assert!(
                        set.contains(st.step_target(j)),
                        "{:?} j={j} q={q}",
                        st.weights()
                    );
                }
            }
        }
    }
    assert!(used > 100);
}

/// Closes a region under reflection in the main diagonal.
fn transpose_union(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    cells
        .iter()
        .flat_map(|c| [*c, Cell::new(c.j, c.i)])
        .collect()
}

fn family_members(q: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for t in 1..=q {
        for s in 1..=q + 1 - t {
            out.push((t, s));
        }
    }
    out.push((q + 1, 1));
    for s in 1..=q {
        out.push((q + 2, s));
    }
    out
}

#[test]
fn family_schedule() {
    for q in 2..=3u64 {
        let n = 2 * staircase_length(q) as usize + 1;
        let dims = LatticeDims::square(n).unwrap();
        let region = |w: &Staircase| region_of(w, dims).unwrap().cells().clone();
        let members = family_members(q);
        // the run starts from ω_{q-1} reflected into a staircase
        for pair in members.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let wa = omega_family(q, a.0, a.1).unwrap();
            let wb = omega_family(q, b.0, b.1).unwrap();
            let (ra, rb) = (region(&wa), region(&wb));
            if b == (q + 1, 1) {
                assert_eq!(transpose_union(&ra), rb, "q={q} {a:?}->{b:?}");
                continue;
            }
            let added: Vec<Cell> = rb.difference(&ra).copied().collect();
            assert_eq!(added.len(), 1, "q={q} {a:?}->{b:?}");
            assert!(ra.is_subset(&rb));
            let j = added[0].j;
            assert_eq!(added[0], wa.step_target(j));
            let ok = (1..=q).any(|p| peel_step_applies(&wa, j, p).unwrap());
            assert!(ok, "q={q} {a:?}->{b:?} row {j}");
        }
        let last = omega_family(q, q + 2, q).unwrap();
        assert_eq!(
            transpose_union(&region(&last)),
            region(&omega_q(q).unwrap())
        );
    }
}

#[test]
fn omega_regions_certified_with_reflections() {
    for q in 2..=3u64 {
        let n = 2 * staircase_length(q) as usize + 1;
        assert_eq!(n as u64, size_bound(q, BoundVariant::PosInteger).unwrap());
        let dims = LatticeDims::square(n).unwrap();
        let prefix = slope_prefix(Slope::integer(-(q as i64))).unwrap();
        let set = propagate_with_transports(
            dims,
            &prefix,
            &BTreeSet::new(),
            &[GridTransform::Transpose, GridTransform::AntiTranspose],
        )
        .unwrap();
        let region = region_of(&omega_q(q).unwrap(), dims).unwrap();
        assert!(region.cells().is_subset(set.determined()), "q={q}");
        assert!(set.replay());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fixpoint_ignores_scan_order(n in 1usize..7, m in 1usize..7, k in 1usize..9, seed: u64) {
        let dims = LatticeDims::new(n, m).unwrap();
        let prefix: Vec<Slope> = SlopeOrder::new().take(k).collect();
        let mut lines = lines_of(dims, &prefix);
        let base = propagate_over(dims, &lines, &BTreeSet::new()).unwrap();
        lines.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled = propagate_over(dims, &lines, &BTreeSet::new()).unwrap();
        prop_assert_eq!(base.determined(), shuffled.determined());
        let ordered = propagate(dims, &prefix, &BTreeSet::new()).unwrap();
        prop_assert_eq!(ordered.determined(), base.determined());
    }

    #[test]
    fn initial_cells_only_help(n in 1usize..6, m in 1usize..6, k in 1usize..7, pick in prop::collection::vec(any::<bool>(), 36)) {
        let dims = LatticeDims::new(n, m).unwrap();
        let prefix: Vec<Slope> = SlopeOrder::new().take(k).collect();
        let init: BTreeSet<Cell> = dims.cells().filter(|c| pick[dims.column_index(*c)]).collect();
        let empty = propagate(dims, &prefix, &BTreeSet::new()).unwrap();
        let seeded = propagate(dims, &prefix, &init).unwrap();
        prop_assert!(empty.determined().is_subset(seeded.determined()));
        prop_assert!(init.is_subset(seeded.determined()));
        prop_assert!(seeded.replay());
    }
}
