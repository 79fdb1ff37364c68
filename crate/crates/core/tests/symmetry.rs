use proptest::prelude::*;

use rk_core::lattice::{enumerate_lines, LatticeDims};
use rk_core::slope::{Slope, SlopeOrder};
use rk_core::symmetry::{transform_cell, transform_line, transform_mask, GridTransform};
use rk_core::uniqueness::entry_uniqueness_mask;

fn small_slopes() -> Vec<Slope> {
    let mut out = vec![Slope::VERTICAL];
    for p in -3..=3 {
        for q in 1..=3 {
            if let Ok(s) = Slope::new(p, q) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn transforms_for(dims: LatticeDims) -> impl Iterator<Item = GridTransform> {
    GridTransform::ALL
        .into_iter()
        .filter(move |t| dims.is_square() || !t.requires_square())
}

#[test]
fn prefix_masks_are_invariant() {
    let order: Vec<Slope> = SlopeOrder::new().take(8).collect();
    let mut checked = 0;
    for n in 1..=6 {
        for m in 1..=6 {
            let dims = LatticeDims::new(n, m).unwrap();
            for k in 1..=order.len() {
                let prefix = &order[..k];
                let mask = entry_uniqueness_mask(dims, prefix).unwrap();
                for t in transforms_for(dims) {
                    if t.preserves(dims, prefix) {
                        assert_eq!(transform_mask(t, &mask).unwrap(), mask, "{n}x{m} {t} k={k}");
                        checked += 1;
                    }
                }
                assert!(GridTransform::Rot180.preserves(dims, prefix));
            }
        }
    }
    assert!(checked > 36 * 8);
}

#[test]
fn lines_map_onto_lines() {
    for n in 1..=6 {
        for m in 1..=6 {
            let dims = LatticeDims::new(n, m).unwrap();
            for s in small_slopes() {
                for t in transforms_for(dims) {
                    let target = enumerate_lines(dims, t.map_slope(s));
                    let images: Vec<_> = enumerate_lines(dims, s)
                        .iter()
                        .map(|l| transform_line(t, dims, l).unwrap())
                        .collect();
                    assert_eq!(images.len(), target.len());
                    for img in &images {
                        assert!(
                            target.contains(img),
                            "{n}x{m} {t} slope {s}: {:?}",
                            img.offset()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn transforms_are_involutions() {
    for n in 1..=6 {
        for m in 1..=6 {
            let dims = LatticeDims::new(n, m).unwrap();
            for t in transforms_for(dims) {
                for c in dims.cells() {
                    let img = transform_cell(t, dims, c).unwrap();
                    assert_eq!(transform_cell(t, dims, img).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn diagonal_transforms_reject_rectangles() {
    let dims = LatticeDims::new(3, 4).unwrap();
    let mask = entry_uniqueness_mask(dims, &[Slope::ZERO]).unwrap();
    assert!(transform_mask(GridTransform::Transpose, &mask).is_err());
    assert!(!GridTransform::AntiTranspose.preserves(dims, &[Slope::ZERO, Slope::VERTICAL]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Transforming the lattice and the slope set together transforms the mask.
    #[test]
    fn masks_are_equivariant(
        n in 1usize..6,
        m in 1usize..6,
        pick in prop::collection::btree_set(0usize..16, 1..5),
        which in 0usize..5,
    ) {
        let all = small_slopes();
        let slopes: Vec<Slope> = pick.iter().map(|&k| all[k % all.len()]).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let t = GridTransform::ALL[which];
        let dims = if t.requires_square() { LatticeDims::square(n).unwrap() } else { LatticeDims::new(n, m).unwrap() };
        let mapped: Vec<Slope> = slopes.iter().map(|&s| t.map_slope(s)).collect();
        let before = entry_uniqueness_mask(dims, &slopes).unwrap();
        let after = entry_uniqueness_mask(dims, &mapped).unwrap();
        prop_assert_eq!(transform_mask(t, &before).unwrap(), after);
    }
}
