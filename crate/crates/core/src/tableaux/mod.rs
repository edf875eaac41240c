//! Shifted shapes, tableaux, dominance, and the lattice-path bijection.

pub mod path;
pub mod shape;
pub mod tableau;

pub use path::{count_paths, count_subdiagonal, count_touching, path_to_tableau, tableau_to_path, LatticePath, Step};
pub use shape::ShiftedShape;
pub use tableau::{composition_series, enumerate_standard, is_standard, parse_tableau, Column, Tableau};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::combin::permutations;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn shape(n: usize, k: usize, d: usize) -> ShiftedShape {
        ShiftedShape::new(n, k, d).unwrap()
    }

    fn tab(s: ShiftedShape, top: &[usize], bottom: &[usize]) -> Tableau {
        Tableau::new(s, top.to_vec(), bottom.to_vec()).unwrap()
    }

    /// Every row-increasing filling, column order untouched, via permutations.
    fn all_fillings(s: ShiftedShape) -> Vec<Tableau> {
        permutations(s.n)
            .into_iter()
            .map(|p| tab(s, &p[..s.d], &p[s.d..]))
            .collect()
    }

    #[test]
    fn invalid_shapes() {
        assert!(ShiftedShape::new(4, 3, 3).is_err());
        assert!(ShiftedShape::new(4, 2, 1).is_err());
        assert!(ShiftedShape::from_signed(4, -1, 1).is_err());
        assert!(ShiftedShape::new(0, 0, 0).is_ok());
    }

    #[test]
    fn example_513() {
        let s = shape(5, 1, 3);
        let got = enumerate_standard(s);
        assert_eq!(got.len(), 9);
        let listed: [(&[usize], &[usize]); 9] = [
            (&[2, 4, 5], &[1, 3]),
            (&[2, 3, 5], &[1, 4]),
            (&[2, 3, 4], &[1, 5]),
            (&[1, 4, 5], &[2, 3]),
            (&[1, 3, 5], &[2, 4]),
            (&[1, 3, 4], &[2, 5]),
            (&[1, 2, 5], &[3, 4]),
            (&[1, 2, 4], &[3, 5]),
            (&[1, 2, 3], &[4, 5]),
        ];
        for (top, bottom) in listed {
            assert!(got.contains(&tab(s, top, bottom)), "{top:?}/{bottom:?}");
        }
        let tops: Vec<_> = got.iter().map(|t| t.top().to_vec()).collect();
        let mut sorted = tops.clone();
        sorted.sort();
        assert_eq!(tops, sorted);
    }

    #[test]
    fn small_counts() {
        let one = enumerate_standard(shape(2, 1, 1));
        assert_eq!(one, vec![tab(shape(2, 1, 1), &[1], &[2])]);
        let s = shape(4, 2, 2);
        let brute: Vec<_> = all_fillings(s).into_iter().filter(Tableau::is_standard).collect();
        assert_eq!(brute.len(), 2);
        assert_eq!(enumerate_standard(s), brute);
    }

    #[test]
    fn standardness_examples() {
        assert!(tab(shape(5, 1, 3), &[2, 4, 5], &[1, 3]).is_standard());
        assert!(!tab(shape(11, 4, 6), &[3, 4, 6, 7, 9, 11], &[1, 2, 5, 8, 10]).is_standard());
        assert!(!tab(shape(2, 1, 1), &[2], &[1]).is_standard());
    }

    #[test]
    fn composition_series_513() {
        let t = tab(shape(5, 1, 3), &[2, 4, 5], &[1, 3]);
        assert_eq!(
            t.composition_series(),
            vec![
                vec![1, 1, 1, 1, 1],
                vec![0, 1, 2, 2, 2],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn composition_last_column_and_column_swaps() {
        for s in ShiftedShape::all(6) {
            let sizes: Vec<u8> = Tableau::column_filling(s).columns().iter().map(|c| c.cells().len() as u8).collect();
            for t in all_fillings(s).iter().step_by(37) {
                let g = t.composition_series();
                let last: Vec<u8> = g.iter().map(|row| row[s.n - 1]).collect();
                assert_eq!(last, sizes);
                assert_eq!(t.sort_columns().0.composition_series(), g);
            }
        }
    }

    #[test]
    fn column_filling_is_maximal() {
        let s = shape(5, 1, 3);
        let top = Tableau::column_filling(s);
        assert_eq!(top, tab(s, &[2, 4, 5], &[1, 3]));
        for t in all_fillings(s) {
            assert!(t.dominates(&top).unwrap());
        }
    }

    #[test]
    fn dominance_shape_mismatch() {
        let a = Tableau::column_filling(shape(4, 1, 2));
        let b = Tableau::column_filling(shape(4, 2, 2));
        assert!(matches!(a.dominates(&b), Err(crate::Error::ShapeMismatch)));
        assert!(a.dominates(&a).unwrap());
    }

    fn prefix_dominated(g: &[Vec<u8>], h: &[Vec<u8>]) -> bool {
        (0..g[0].len()).all(|a| {
            let (mut sg, mut sh) = (0, 0);
            (0..g.len()).all(|b| {
                sg += g[b][a];
                sh += h[b][a];
                sg <= sh
            })
        })
    }

    #[test]
    fn dominance_is_antisymmetric() {
        for n in 1..=6 {
            for s in ShiftedShape::all(n) {
                let mut ts: Vec<_> = all_fillings(s).into_iter().map(|t| t.sort_columns().0).collect();
                ts.sort();
                ts.dedup();
                let series: Vec<_> = ts.iter().map(Tableau::composition_series).collect();
                for (i, g) in series.iter().enumerate() {
                    for (j, h) in series.iter().enumerate() {
                        if i != j && prefix_dominated(g, h) && prefix_dominated(h, g) {
                            assert_eq!(ts[i], ts[j]);
                        }
                    }
                }
                for t in ts.iter().step_by(11) {
                    for u in ts.iter().step_by(13) {
                        assert_eq!(
                            t.dominates(u).unwrap(),
                            prefix_dominated(&t.composition_series(), &u.composition_series())
                        );
                    }
                }
            }
        }
    }

    fn column_of(t: &Tableau, v: usize) -> usize {
        t.columns().iter().position(|c| c.cells().contains(&v)).unwrap()
    }

    proptest! {
        #[test]
        fn transposition_moves_up(
            (n, a, b) in (2usize..=7).prop_flat_map(|n| (Just(n), 1..n)).prop_flat_map(|(n, a)| (Just(n), Just(a), a + 1..=n)),
            pick in any::<prop::sample::Index>(),
            perm_seed in any::<prop::sample::Index>(),
        ) {
            let shapes = ShiftedShape::all(n);
            let s = shapes[pick.index(shapes.len())];
            let perms = permutations(n);
            let p = &perms[perm_seed.index(perms.len())];
            let mut t = tab(s, &p[..s.d], &p[s.d..]);
            prop_assume!(column_of(&t, a) != column_of(&t, b));
            if column_of(&t, a) < column_of(&t, b) {
                t = t.transpose_entries(a, b);
            }
            prop_assert!(t.dominates(&t.transpose_entries(a, b)).unwrap());
        }
    }

    #[test]
    fn path_examples() {
        let s = shape(11, 4, 6);
        let p: LatticePath = "NEENNNENEEN".parse().unwrap();
        let t = path_to_tableau(&p, s).unwrap();
        assert_eq!(t, tab(s, &[1, 4, 6, 7, 8, 11], &[2, 3, 5, 9, 10]));
        assert!(p.stays_below(2));
        let q: LatticePath = "NENENNENNEE".parse().unwrap();
        let u = path_to_tableau(&q, s).unwrap();
        assert_eq!(u, tab(s, &[3, 4, 6, 7, 9, 11], &[1, 2, 5, 8, 10]));
        assert!(!q.stays_below(2));
        assert!(matches!(path_to_tableau(&"NN".parse().unwrap(), s), Err(crate::Error::EndpointMismatch)));
    }

    #[test]
    fn corner_paths_at_513() {
        let s = shape(5, 1, 3);
        let ee_nnn = path_to_tableau(&"EENNN".parse().unwrap(), s).unwrap();
        assert_eq!(ee_nnn, tab(s, &[1, 2, 3], &[4, 5]));
        let maximal = path_to_tableau(&"NNENE".parse().unwrap(), s).unwrap();
        assert_eq!(maximal, Tableau::column_filling(s));
    }

    #[test]
    fn bijection_and_standardness() {
        for n in 0..=10 {
            for s in ShiftedShape::all(n) {
                let mut standard = 0;
                for p in LatticePath::all(n - s.d, s.d) {
                    let t = path_to_tableau(&p, s).unwrap();
                    assert_eq!(tableau_to_path(&t), p);
                    assert_eq!(t.is_standard(), p.stays_below((s.d - s.k) as i64));
                    standard += t.is_standard() as u64;
                }
                assert_eq!(standard, s.standard_count(), "{s}");
                assert_eq!(enumerate_standard(s).len() as u64, s.standard_count());
            }
        }
    }

    #[test]
    fn path_counts() {
        assert_eq!(count_paths((0, 0), (2, 2)).unwrap(), BigInt::from(6));
        assert!(count_paths((1, 0), (0, 2)).is_err());
        assert_eq!(count_subdiagonal(shape(5, 1, 3)), BigInt::from(9));
        for n in 0..=10 {
            for k in 0..=n / 2 {
                assert_eq!(
                    count_subdiagonal(shape(n, 0, k)),
                    binomial(n as u64, k as i64)
                );
            }
        }
    }
}
