//! Reference count tables for the unlabeled minimal strong digraphs of
//! orders 2..=14: per arc count, and their isospectral classes.

/// `(n, m, count)` for every nonzero cell.
pub const TABLE1_CELLS: &[(usize, usize, u64)] = &[
    (2, 2, 1),
    (3, 3, 1),
    (3, 4, 1),
    (4, 4, 1),
    (4, 5, 2),
    (4, 6, 2),
    (5, 5, 1),
    (5, 6, 4),
    (5, 7, 7),
    (5, 8, 3),
    (6, 6, 1),
    (6, 7, 6),
    (6, 8, 27),
    (6, 9, 23),
    (6, 10, 6),
    (7, 7, 1),
    (7, 8, 9),
    (7, 9, 70),
    (7, 10, 131),
    (7, 11, 66),
    (7, 12, 11),
    (8, 8, 1),
    (8, 9, 12),
    (8, 10, 169),
    (8, 11, 559),
    (8, 12, 571),
    (8, 13, 191),
    (8, 14, 23),
    (9, 9, 1),
    (9, 10, 16),
    (9, 11, 344),
    (9, 12, 1970),
    (9, 13, 3479),
    (9, 14, 2229),
    (9, 15, 541),
    (9, 16, 47),
    (10, 10, 1),
    (10, 11, 20),
    (10, 12, 662),
    (10, 13, 5874),
    (10, 14, 17109),
    (10, 15, 18509),
    (10, 16, 8226),
    (10, 17, 1514),
    (10, 18, 106),
    (11, 11, 1),
    (11, 12, 25),
    (11, 13, 1159),
    (11, 14, 15526),
    (11, 15, 69845),
    (11, 16, 120582),
    (11, 17, 87963),
    (11, 18, 28879),
    (11, 19, 4217),
    (11, 20, 235),
    (12, 12, 1),
    (12, 13, 30),
    (12, 14, 1947),
    (12, 15, 37072),
    (12, 16, 246971),
    (12, 17, 646339),
    (12, 18, 732150),
    (12, 19, 385484),
    (12, 20, 98146),
    (12, 21, 11724),
    (12, 22, 551),
    (13, 13, 1),
    (13, 14, 36),
    (13, 15, 3086),
    (13, 16, 81561),
    (13, 17, 773413),
    (13, 18, 2954946),
    (13, 19, 4974754),
    (13, 20, 3973379),
    (13, 21, 1587924),
    (13, 22, 324638),
    (13, 23, 32527),
    (13, 24, 1301),
    (14, 14, 1),
    (14, 15, 42),
    (14, 16, 4743),
    (14, 17, 167500),
    (14, 18, 2191491),
    (14, 19, 11819034),
    (14, 20, 28600421),
    (14, 21, 33313635),
    (14, 22, 19785730),
    (14, 23, 6234794),
    (14, 24, 1052874),
    (14, 25, 90285),
    (14, 26, 3159),
];

/// `(n, value)` for n = 2..=14.
pub const TABLE1_TOTALS: &[(usize, u64)] = &[
    (2, 1),
    (3, 2),
    (4, 5),
    (5, 15),
    (6, 63),
    (7, 288),
    (8, 1526),
    (9, 8627),
    (10, 52021),
    (11, 328432),
    (12, 2160415),
    (13, 14707566),
    (14, 103263709),
];

/// `(n, m, count)` for every nonzero cell.
pub const TABLE2_CELLS: &[(usize, usize, u64)] = &[
    (2, 2, 1),
    (3, 3, 1),
    (3, 4, 1),
    (4, 4, 1),
    (4, 5, 2),
    (4, 6, 2),
    (5, 5, 1),
    (5, 6, 4),
    (5, 7, 6),
    (5, 8, 3),
    (6, 6, 1),
    (6, 7, 6),
    (6, 8, 18),
    (6, 9, 16),
    (6, 10, 6),
    (7, 7, 1),
    (7, 8, 9),
    (7, 9, 35),
    (7, 10, 62),
    (7, 11, 43),
    (7, 12, 11),
    (8, 8, 1),
    (8, 9, 12),
    (8, 10, 65),
    (8, 11, 172),
    (8, 12, 227),
    (8, 13, 115),
    (8, 14, 22),
    (9, 9, 1),
    (9, 10, 16),
    (9, 11, 103),
    (9, 12, 395),
    (9, 13, 801),
    (9, 14, 769),
    (9, 15, 319),
    (9, 16, 42),
    (10, 10, 1),
    (10, 11, 20),
    (10, 12, 160),
    (10, 13, 791),
    (10, 14, 2290),
    (10, 15, 3530),
    (10, 16, 2645),
    (10, 17, 848),
    (10, 18, 102),
    (11, 11, 1),
    (11, 12, 25),
    (11, 13, 227),
    (11, 14, 1423),
    (11, 15, 5567),
    (11, 16, 12437),
    (11, 17, 14978),
    (11, 18, 8812),
    (11, 19, 2349),
    (11, 20, 204),
    (12, 12, 1),
    (12, 13, 30),
    (12, 14, 319),
    (12, 15, 2411),
    (12, 16, 11942),
    (12, 17, 36638),
    (12, 18, 64337),
    (12, 19, 61376),
    (12, 20, 29317),
    (12, 21, 6401),
    (12, 22, 488),
    (13, 13, 1),
    (13, 14, 36),
    (13, 15, 424),
    (13, 16, 3807),
    (13, 17, 23583),
    (13, 18, 93732),
    (13, 19, 228358),
    (13, 20, 318654),
    (13, 21, 244989),
    (13, 22, 95369),
    (13, 23, 17660),
    (13, 24, 1078),
    (14, 14, 1),
    (14, 15, 42),
    (14, 16, 559),
    (14, 17, 5805),
    (14, 18, 43070),
    (14, 19, 217303),
    (14, 20, 695323),
    (14, 21, 1351485),
    (14, 22, 1517405),
    (14, 23, 949476),
    (14, 24, 307783),
    (14, 25, 48567),
    (14, 26, 2723),
];

/// `(n, value)` for n = 2..=14.
pub const TABLE2_SUMS: &[(usize, u64)] = &[
    (2, 1),
    (3, 2),
    (4, 5),
    (5, 14),
    (6, 47),
    (7, 161),
    (8, 614),
    (9, 2446),
    (10, 10387),
    (11, 46023),
    (12, 213260),
    (13, 1027691),
    (14, 5139542),
];

/// `(n, value)` for n = 2..=14.
pub const TABLE2_TOTALS: &[(usize, u64)] = &[
    (2, 1),
    (3, 2),
    (4, 5),
    (5, 14),
    (6, 47),
    (7, 161),
    (8, 604),
    (9, 2360),
    (10, 9796),
    (11, 42510),
    (12, 193891),
    (13, 922109),
    (14, 4560898),
];

/// `(n, value)` for n = 2..=14.
pub const TABLE2_DELTAS: &[(usize, u64)] = &[
    (2, 0),
    (3, 0),
    (4, 0),
    (5, 0),
    (6, 0),
    (7, 0),
    (8, 10),
    (9, 86),
    (10, 591),
    (11, 3513),
    (12, 19369),
    (13, 105582),
    (14, 578644),
];
/// Directed-tree counts (cells with `m = 2n − 2`) for n = 2..=14.
pub const TREE_COUNTS: &[u64] = &[1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

/// Isospectral classes among the directed trees for n = 2..=14.
pub const TREE_CLASS_COUNTS: &[u64] = &[1, 1, 2, 3, 6, 11, 22, 42, 102, 204, 488, 1078, 2723];

#[cfg(test)]
mod tests {
    use super::*;

    fn column_sum(cells: &[(usize, usize, u64)], n: usize) -> u64 {
        cells.iter().filter(|c| c.0 == n).map(|c| c.2).sum()
    }

    #[test]
    fn tables_are_self_consistent() {
        for &(n, total) in TABLE1_TOTALS {
            assert_eq!(column_sum(TABLE1_CELLS, n), total, "table 1 column {n}");
        }
        for ((&(n, sum), &(_, total)), &(_, delta)) in
            TABLE2_SUMS.iter().zip(TABLE2_TOTALS).zip(TABLE2_DELTAS)
        {
            assert_eq!(column_sum(TABLE2_CELLS, n), sum, "table 2 column {n}");
            assert_eq!(sum - total, delta, "table 2 delta {n}");
        }
        for (i, n) in (2..=14).enumerate() {
            let tree = |cells: &[(usize, usize, u64)]| {
                cells
                    .iter()
                    .find(|c| c.0 == n && c.1 == 2 * n - 2)
                    .unwrap()
                    .2
            };
            assert_eq!(tree(TABLE1_CELLS), TREE_COUNTS[i]);
            assert_eq!(tree(TABLE2_CELLS), TREE_CLASS_COUNTS[i]);
        }
    }
}
