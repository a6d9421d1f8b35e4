use preproj::dynkin::{nakayama, DynkinType};
use preproj::pathalg::{graded_dims_pi, hom_matrix, hom_matrix_from};

fn ty(s: &str) -> DynkinType {
    s.parse().unwrap()
}

/// `dim e_i Π(A_n) e_j` from the piecewise formula (stated for `i ≤ n−i+1`,
/// extended by the symmetries `i ↔ j` and `k ↔ n+1−k`).
fn erdmann_a(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= n + 1 - i { (i, j) } else { (n + 1 - i, n + 1 - j) };
    if j <= i {
        j
    } else if j <= n - i {
        i
    } else {
        n - j + 1
    }
}

/// Rows of `H(D_n)` as printed: rows `1..=n−2` read
/// `2, 4, …, 2(i−1), 2i (n−i−1 times), i, i`; rows `n−1, n` read
/// `1, 2, …, n−2, k, ℓ` with `k + ℓ = n − 1`.
fn erdmann_d(n: usize) -> Vec<Vec<usize>> {
    let mut h = Vec::new();
    for i in 1..=n - 2 {
        let mut row: Vec<usize> = (1..i).map(|k| 2 * k).collect();
        row.extend(std::iter::repeat_n(2 * i, n - i - 1));
        row.push(i);
        row.push(i);
        h.push(row);
    }
    // Diagonal entry of the last two rows: ⌈(n−1)/2⌉ for n−1 and n when
    // n is odd; when n is even they split as n/2 and n/2 − 1 by parity.
    for r in [n - 1, n] {
        let mut row: Vec<usize> = (1..=n - 2).collect();
        let half = (n - 1) / 2;
        let (same, other) = if n.is_multiple_of(2) { (n / 2, n / 2 - 1) } else { (half, half) };
        let _ = other;
        if r == n - 1 {
            row.push(same);
            row.push(n - 1 - same);
        } else {
            row.push(n - 1 - same);
            row.push(same);
        }
        h.push(row);
    }
    h
}

const H_E6: [[usize; 6]; 6] = [
    [4, 2, 4, 6, 4, 2],
    [2, 2, 3, 4, 3, 2],
    [4, 3, 6, 8, 6, 3],
    [6, 4, 8, 12, 8, 4],
    [4, 3, 6, 8, 6, 3],
    [2, 2, 3, 4, 3, 2],
];

const H_E8: [[usize; 8]; 8] = [
    [4, 6, 8, 10, 12, 8, 4, 6],
    [6, 12, 16, 20, 24, 16, 8, 12],
    [8, 16, 24, 30, 36, 24, 12, 18],
    [10, 20, 30, 40, 48, 32, 16, 24],
    [12, 24, 36, 48, 60, 40, 20, 30],
    [8, 16, 24, 32, 40, 28, 14, 20],
    [4, 8, 12, 16, 20, 14, 8, 10],
    [6, 12, 18, 24, 30, 20, 10, 16],
];

#[test]
fn a_n_totals_and_entries() {
    for n in 1..=8 {
        let dims = graded_dims_pi(ty(&format!("A{n}")));
        assert_eq!(dims.total, n * (n + 1) * (n + 2) / 6, "A{n}");
        let h = hom_matrix_from(&dims);
        for i in 1..=n {
            assert_eq!(h.row_sums()[i - 1], i * (n + 1 - i), "U_{i} in A{n}");
            for j in 1..=n {
                assert_eq!(h.h[i - 1][j - 1], erdmann_a(n, i, j), "A{n} ({i},{j})");
            }
        }
    }
}

#[test]
fn a3_matrix() {
    assert_eq!(hom_matrix(ty("A3")).h, vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 1]]);
}

#[test]
fn d_n_rows_and_totals() {
    for n in 4..=8 {
        let h = hom_matrix(ty(&format!("D{n}")));
        let sums = h.row_sums();
        for i in 1..=n - 2 {
            assert_eq!(sums[i - 1], 2 * n * i - i * (i + 1), "U_{i} in D{n}");
        }
        assert_eq!(sums[n - 2], n * (n - 1) / 2);
        assert_eq!(sums[n - 1], n * (n - 1) / 2);
        let total: usize = sums.iter().sum();
        assert_eq!(total, n * (2 * n - 2) * (2 * n - 1) / 6, "D{n}");
        let printed = erdmann_d(n);
        for i in 0..n - 2 {
            assert_eq!(h.h[i], printed[i], "row {} of D{n}", i + 1);
        }
        // The last two rows agree with the printed shape up to the split k + ℓ.
        for r in [n - 2, n - 1] {
            assert_eq!(h.h[r][..n - 2], printed[r][..n - 2]);
            assert_eq!(h.h[r][n - 2] + h.h[r][n - 1], n - 1);
        }
    }
    assert_eq!(hom_matrix(ty("D4")).row_sums(), vec![6, 10, 6, 6]);
}

#[test]
fn e_tables() {
    let e6 = hom_matrix(ty("E6"));
    assert_eq!(e6.h, H_E6.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    assert_eq!(e6.row_sums(), vec![22, 16, 30, 42, 30, 16]);
    let e7 = hom_matrix(ty("E7"));
    assert_eq!(e7.row_sums(), vec![34, 66, 96, 75, 52, 27, 49]);
    let e8 = hom_matrix(ty("E8"));
    assert_eq!(e8.h, H_E8.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    assert_eq!(e8.row_sums(), vec![58, 114, 168, 220, 270, 182, 92, 136]);
    for (t, total) in [("E6", 156), ("E7", 399), ("E8", 1240)] {
        assert_eq!(graded_dims_pi(ty(t)).total, total);
    }
}

#[test]
fn top_degree_is_coxeter_minus_two() {
    for t in DynkinType::all_up_to(8) {
        let dims = graded_dims_pi(t);
        let h = t.coxeter_number();
        assert_eq!(dims.by_degree.len(), h - 1, "{t}");
        assert!(dims.by_degree[h - 2] > 0);
        let n = t.rank();
        assert_eq!(dims.total, n * h * (h + 1) / 6, "{t}");
    }
}

#[test]
fn hom_matrix_symmetric_and_nakayama_invariant() {
    for t in DynkinType::all_up_to(8) {
        let h = hom_matrix(t);
        assert!(h.is_symmetric(), "{t}");
        let nu = nakayama(t);
        let n = t.rank();
        for i in 1..=n {
            for j in 1..=n {
                let (pi, pj) = (nu.apply(i).unwrap(), nu.apply(j).unwrap());
                assert_eq!(h.h[i - 1][j - 1], h.h[pi - 1][pj - 1], "{t} ({i},{j})");
            }
        }
    }
}

#[test]
fn e7_table_matches_print_outside_the_asymmetric_entry() {
    use preproj::fixtures::{printed_e_dims, printed_hom_matrix, E7_HOM_MISPRINTS};
    let h = hom_matrix(ty("E7"));
    let printed = printed_hom_matrix(7).unwrap();
    let mut diffs = Vec::new();
    for i in 0..7 {
        for j in 0..7 {
            if h.h[i][j] != printed[i][j] {
                diffs.push((i + 1, j + 1, printed[i][j], h.h[i][j]));
            }
        }
    }
    assert_eq!(diffs, E7_HOM_MISPRINTS);
    // The printed entry breaks symmetry and the printed row sum.
    assert_ne!(printed[5][4], printed[4][5]);
    assert_ne!(printed[5].iter().sum::<usize>(), printed_e_dims(7).unwrap().1[5]);
    assert_eq!(h.row_sums(), printed_e_dims(7).unwrap().1);
}
