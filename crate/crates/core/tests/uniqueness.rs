use rk_core::certifier::{size_bound, BoundVariant};
use rk_core::lattice::{Cell, LatticeDims};
use rk_core::slope::{slope_prefix, Slope, SlopeOrder};
use rk_core::uniqueness::{
    border, clue_rank, default_max_q, entry_uniqueness_mask, invariants, is_globally_unique,
    InvariantReport,
};

fn dims(n: usize, m: usize) -> LatticeDims {
    LatticeDims::new(n, m).unwrap()
}

fn report(n: usize, m: usize) -> InvariantReport {
    let d = dims(n, m);
    invariants(d, default_max_q(d)).unwrap()
}

#[test]
fn masks_grow_along_prefixes() {
    let order: Vec<Slope> = SlopeOrder::new().take(8).collect();
    for n in 1..=6 {
        for m in 1..=6 {
            let d = dims(n, m);
            let mut prev = None;
            let mut was_unique = false;
            for k in 1..=order.len() {
                let mask = entry_uniqueness_mask(d, &order[..k]).unwrap();
                if let Some(p) = &prev {
                    assert!(mask.covers(p), "{n}x{m} prefix {k}");
                }
                // success, once reached, persists
                let unique = is_globally_unique(d, &order[..k]).unwrap();
                assert!(!was_unique || unique);
                assert_eq!(unique, mask.all_unique());
                was_unique = unique;
                prev = Some(mask);
            }
        }
    }
}

#[test]
fn invariants_coincide_rectangular() {
    for n in 1..=6 {
        for m in 1..=6 {
            let r = report(n, m);
            assert!(r.all_equal(), "{n}x{m}: {r}");
        }
    }
}

#[test]
fn invariants_coincide_square() {
    for n in 7..=10 {
        let r = report(n, n);
        assert!(r.all_equal(), "{n}x{n}: {r}");
    }
}

#[test]
fn invariants_monotone_in_each_side() {
    let table: Vec<Vec<InvariantReport>> = (1..=7)
        .map(|n| (1..=7).map(|m| report(n, m)).collect())
        .collect();
    for n in 0..6 {
        for m in 0..6 {
            let s = table[n][m].s;
            assert!(s <= table[n + 1][m].s, "n={} m={}", n + 1, m + 1);
            assert!(s <= table[n][m + 1].s, "n={} m={}", n + 1, m + 1);
        }
    }
}

#[test]
fn size_bounds_for_q2() {
    for v in BoundVariant::ALL {
        let n = size_bound(2, v).unwrap() as usize;
        let prefix = slope_prefix(v.slope(2)).unwrap();
        let d = dims(n, n);
        assert_eq!(clue_rank(d, &prefix).unwrap().rank, n * n, "{v:?}");
        // one slope fewer is not enough
        let shorter = &prefix[..prefix.len() - 1];
        assert!(!is_globally_unique(d, shorter).unwrap(), "{v:?}");
    }
}

#[test]
fn border_cells() {
    for n in 1..=6 {
        for m in 1..=6 {
            let b = border(dims(n, m));
            for c in dims(n, m).cells() {
                let on = c.i == 1 || c.i == n || c.j == 1 || c.j == m;
                assert_eq!(b.contains(c), on);
            }
            if n == 1 || m == 1 {
                assert_eq!(b.cells().count(), n * m);
            }
        }
    }
}

#[test]
fn four_by_four_through_one_mask() {
    let mask =
        entry_uniqueness_mask(dims(4, 4), &slope_prefix(Slope::integer(1)).unwrap()).unwrap();
    // the one switching component lives on the non-corner border cells
    for c in LatticeDims::square(4).unwrap().cells() {
        let edge = c.i == 1 || c.i == 4 || c.j == 1 || c.j == 4;
        let corner = (c.i == 1 || c.i == 4) && (c.j == 1 || c.j == 4);
        assert_eq!(mask.is_unique(c), !edge || corner, "{c}");
    }
    assert!(mask.is_unique(Cell::new(2, 2)));
    assert!(!mask.is_unique(Cell::new(2, 1)));
}
