//! The reference catalog shipped with the crate.
//!
//! Machine-readable fixture of the 154 known quadruples: 150 normalized
//! rows ([`TABLE_ONE`]) and 4 generalized rows ([`TABLE_TWO`]), each with
//! the expected genera of the two covers and the minimal `K^2`. The
//! regression suite recomputes every invariant from scratch and diffs
//! against this data; [`lookup`] is how search results are flagged as
//! known or extra.

/// Which of the two reference tables a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    /// Normalized rows: `sum(a) = 2m`, `b` a triple with `sum(b) = m`.
    One,
    /// Generalized rows accepted by the direct Hodge-number test.
    Two,
}

impl std::fmt::Display for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Table::One => write!(f, "1"),
            Table::Two => write!(f, "2"),
        }
    }
}

/// One reference row: canonical data plus the expected invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    /// Table the row belongs to.
    pub table: Table,
    /// 1-based row number within its table.
    pub row: u32,
    /// Common degree of the two covers.
    pub m: i64,
    /// Branch exponents of the cover family (sorted).
    pub a: &'static [i64],
    /// Branch exponents of the fixed cover (sorted).
    pub b: &'static [i64],
    /// Expected genus of the family's covers.
    pub g_c: i64,
    /// Expected genus of the fixed cover.
    pub g_d: i64,
    /// Expected `K^2` of the minimal model.
    pub k2_min: i64,
}

const fn one(
    row: u32,
    m: i64,
    a: &'static [i64],
    b: &'static [i64],
    g_c: i64,
    g_d: i64,
    k2_min: i64,
) -> ReferenceRow {
    ReferenceRow {
        table: Table::One,
        row,
        m,
        a,
        b,
        g_c,
        g_d,
        k2_min,
    }
}

const fn two(
    row: u32,
    m: i64,
    a: &'static [i64],
    b: &'static [i64],
    g_c: i64,
    g_d: i64,
    k2_min: i64,
) -> ReferenceRow {
    ReferenceRow {
        table: Table::Two,
        row,
        m,
        a,
        b,
        g_c,
        g_d,
        k2_min,
    }
}

/// The 150 normalized reference rows, ordered by `(m, N, a, b)`.
pub const TABLE_ONE: [ReferenceRow; 150] = [
    one(1, 3, &[1, 1, 2, 2], &[1, 1, 1], 2, 1, 0),
    one(2, 4, &[1, 1, 3, 3], &[1, 1, 2], 3, 1, 0),
    one(3, 4, &[1, 2, 2, 3], &[1, 1, 2], 2, 1, 0),
    one(4, 5, &[1, 3, 3, 3], &[1, 1, 3], 4, 2, 0),
    one(5, 5, &[2, 2, 2, 4], &[1, 2, 2], 4, 2, 0),
    one(6, 6, &[1, 1, 5, 5], &[1, 2, 3], 5, 1, 0),
    one(7, 6, &[1, 2, 4, 5], &[1, 2, 3], 4, 1, 0),
    one(8, 6, &[1, 3, 3, 5], &[1, 1, 4], 3, 2, 0),
    one(9, 6, &[1, 3, 3, 5], &[1, 2, 3], 3, 1, 0),
    one(10, 6, &[1, 3, 4, 4], &[1, 1, 4], 3, 2, 0),
    one(11, 6, &[1, 3, 4, 4], &[1, 2, 3], 3, 1, 0),
    one(12, 6, &[2, 2, 3, 5], &[1, 2, 3], 3, 1, 0),
    one(13, 6, &[2, 3, 3, 4], &[1, 1, 4], 2, 2, 0),
    one(14, 6, &[2, 3, 3, 4], &[1, 2, 3], 2, 1, 0),
    one(15, 7, &[2, 4, 4, 4], &[1, 2, 4], 6, 3, 0),
    one(16, 7, &[3, 3, 3, 5], &[1, 3, 3], 6, 3, 0),
    one(17, 8, &[1, 3, 6, 6], &[1, 3, 4], 6, 2, 0),
    one(18, 8, &[1, 5, 5, 5], &[1, 2, 5], 7, 3, 0),
    one(19, 8, &[2, 4, 5, 5], &[1, 2, 5], 5, 3, 0),
    one(20, 8, &[3, 3, 3, 7], &[1, 3, 4], 7, 2, 0),
    one(21, 8, &[3, 3, 3, 7], &[2, 3, 3], 7, 3, 0),
    one(22, 8, &[3, 3, 4, 6], &[1, 3, 4], 5, 2, 0),
    one(23, 8, &[3, 3, 4, 6], &[2, 3, 3], 5, 3, 0),
    one(24, 9, &[1, 5, 5, 7], &[1, 3, 5], 8, 3, 0),
    one(25, 9, &[2, 4, 4, 8], &[2, 3, 4], 8, 3, 0),
    one(26, 9, &[3, 5, 5, 5], &[1, 3, 5], 7, 3, 0),
    one(27, 9, &[4, 4, 4, 6], &[1, 4, 4], 7, 4, 0),
    one(28, 9, &[4, 4, 4, 6], &[2, 3, 4], 7, 3, 0),
    one(29, 10, &[1, 4, 7, 8], &[1, 4, 5], 8, 2, 0),
    one(30, 10, &[1, 5, 7, 7], &[1, 2, 7], 7, 4, 0),
    one(31, 10, &[1, 5, 7, 7], &[1, 4, 5], 7, 2, 0),
    one(32, 10, &[2, 3, 6, 9], &[2, 3, 5], 8, 2, 0),
    one(33, 10, &[2, 4, 7, 7], &[1, 4, 5], 8, 2, 0),
    one(34, 10, &[3, 3, 5, 9], &[2, 3, 5], 7, 2, 0),
    one(35, 10, &[3, 3, 5, 9], &[3, 3, 4], 7, 4, 0),
    one(36, 10, &[3, 3, 6, 8], &[2, 3, 5], 8, 2, 0),
    one(37, 10, &[3, 5, 6, 6], &[1, 3, 6], 6, 4, 0),
    one(38, 10, &[3, 5, 6, 6], &[2, 3, 5], 6, 2, 0),
    one(39, 10, &[4, 4, 5, 7], &[1, 4, 5], 6, 2, 0),
    one(40, 12, &[1, 5, 8, 10], &[1, 5, 6], 9, 3, 0),
    one(41, 12, &[1, 7, 7, 9], &[1, 4, 7], 10, 4, 0),
    one(42, 12, &[2, 6, 7, 9], &[1, 4, 7], 7, 4, 1),
    one(43, 12, &[2, 7, 7, 8], &[2, 3, 7], 9, 4, 0),
    one(44, 12, &[3, 5, 5, 11], &[3, 4, 5], 10, 3, 0),
    one(45, 12, &[3, 5, 6, 10], &[3, 4, 5], 7, 3, 0),
    one(46, 12, &[3, 5, 8, 8], &[1, 5, 6], 7, 3, 1),
    one(47, 12, &[3, 7, 7, 7], &[1, 4, 7], 10, 4, 0),
    one(48, 12, &[3, 7, 7, 7], &[2, 3, 7], 10, 4, 0),
    one(49, 12, &[4, 5, 5, 10], &[1, 5, 6], 9, 3, 0),
    one(50, 12, &[4, 5, 5, 10], &[3, 4, 5], 9, 3, 0),
    one(51, 12, &[4, 6, 7, 7], &[1, 4, 7], 7, 4, 0),
    one(52, 12, &[4, 6, 7, 7], &[2, 3, 7], 7, 4, 0),
    one(53, 12, &[5, 5, 5, 9], &[1, 5, 6], 10, 3, 0),
    one(54, 12, &[5, 5, 5, 9], &[2, 5, 5], 10, 5, 0),
    one(55, 12, &[5, 5, 5, 9], &[3, 4, 5], 10, 3, 0),
    one(56, 12, &[5, 5, 6, 8], &[1, 5, 6], 7, 3, 0),
    one(57, 12, &[5, 5, 6, 8], &[2, 5, 5], 7, 5, 0),
    one(58, 12, &[5, 5, 6, 8], &[3, 4, 5], 7, 3, 0),
    one(59, 14, &[1, 5, 11, 11], &[2, 5, 7], 13, 3, 2),
    one(60, 14, &[1, 9, 9, 9], &[3, 4, 7], 13, 3, 3),
    one(61, 14, &[2, 5, 10, 11], &[2, 5, 7], 12, 3, 0),
    one(62, 14, &[3, 3, 9, 13], &[3, 4, 7], 13, 3, 0),
    one(63, 14, &[3, 4, 9, 12], &[3, 4, 7], 12, 3, 0),
    one(64, 14, &[3, 7, 9, 9], &[2, 3, 9], 10, 6, 0),
    one(65, 14, &[3, 7, 9, 9], &[3, 4, 7], 10, 3, 0),
    one(66, 14, &[4, 6, 9, 9], &[3, 4, 7], 12, 3, 0),
    one(67, 14, &[5, 5, 5, 13], &[2, 5, 7], 13, 3, 0),
    one(68, 14, &[5, 5, 7, 11], &[2, 5, 7], 10, 3, 0),
    one(69, 14, &[5, 5, 7, 11], &[4, 5, 5], 10, 6, 0),
    one(70, 14, &[5, 5, 8, 10], &[2, 5, 7], 12, 3, 0),
    one(71, 15, &[2, 8, 8, 12], &[2, 5, 8], 13, 5, 0),
    one(72, 15, &[3, 7, 7, 13], &[3, 5, 7], 13, 4, 0),
    one(73, 15, &[4, 8, 8, 10], &[3, 4, 8], 12, 6, 0),
    one(74, 15, &[5, 7, 7, 11], &[3, 5, 7], 12, 4, 0),
    one(75, 15, &[6, 8, 8, 8], &[2, 5, 8], 13, 5, 0),
    one(76, 15, &[7, 7, 7, 9], &[3, 5, 7], 13, 4, 0),
    one(77, 16, &[7, 7, 7, 11], &[1, 7, 8], 15, 4, 0),
    one(78, 18, &[4, 5, 12, 15], &[4, 5, 9], 13, 4, 0),
    one(79, 18, &[5, 5, 11, 15], &[4, 5, 9], 16, 4, 0),
    one(80, 18, &[7, 7, 7, 15], &[2, 7, 9], 16, 4, 0),
    one(81, 18, &[7, 7, 10, 12], &[2, 7, 9], 14, 4, 0),
    one(82, 22, &[7, 7, 13, 17], &[4, 7, 11], 21, 5, 0),
    one(83, 22, &[9, 9, 9, 17], &[2, 9, 11], 21, 5, 0),
    one(84, 3, &[1, 1, 1, 1, 2], &[1, 1, 1], 3, 1, 0),
    one(85, 4, &[1, 1, 1, 2, 3], &[1, 1, 2], 4, 1, 0),
    one(86, 4, &[1, 1, 2, 2, 2], &[1, 1, 2], 3, 1, 0),
    one(87, 5, &[2, 2, 2, 2, 2], &[1, 2, 2], 6, 2, 0),
    one(88, 6, &[1, 1, 1, 4, 5], &[1, 2, 3], 7, 1, 0),
    one(89, 6, &[1, 1, 2, 3, 5], &[1, 2, 3], 6, 1, 0),
    one(90, 6, &[1, 1, 2, 4, 4], &[1, 2, 3], 6, 1, 0),
    one(91, 6, &[1, 1, 3, 3, 4], &[1, 1, 4], 5, 2, 0),
    one(92, 6, &[1, 1, 3, 3, 4], &[1, 2, 3], 5, 1, 0),
    one(93, 6, &[1, 2, 2, 2, 5], &[1, 2, 3], 6, 1, 0),
    one(94, 6, &[1, 2, 2, 3, 4], &[1, 2, 3], 5, 1, 0),
    one(95, 6, &[1, 2, 3, 3, 3], &[1, 1, 4], 4, 2, 1),
    one(96, 6, &[1, 2, 3, 3, 3], &[1, 2, 3], 4, 1, 0),
    one(97, 6, &[2, 2, 2, 3, 3], &[1, 2, 3], 4, 1, 0),
    one(98, 8, &[1, 3, 3, 3, 6], &[1, 3, 4], 10, 2, 0),
    one(99, 8, &[3, 3, 3, 3, 4], &[1, 3, 4], 9, 2, 0),
    one(100, 8, &[3, 3, 3, 3, 4], &[2, 3, 3], 9, 3, 0),
    one(101, 9, &[2, 4, 4, 4, 4], &[2, 3, 4], 12, 3, 0),
    one(102, 10, &[1, 1, 4, 7, 7], &[1, 4, 5], 13, 2, 0),
    one(103, 10, &[1, 4, 4, 4, 7], &[1, 4, 5], 12, 2, 0),
    one(104, 10, &[2, 3, 3, 3, 9], &[2, 3, 5], 13, 2, 0),
    one(105, 10, &[2, 3, 3, 6, 6], &[2, 3, 5], 12, 2, 0),
    one(106, 10, &[3, 3, 3, 3, 8], &[2, 3, 5], 13, 2, 0),
    one(107, 10, &[3, 3, 3, 5, 6], &[2, 3, 5], 11, 2, 0),
    one(108, 12, &[1, 5, 5, 5, 8], &[1, 5, 6], 15, 3, 0),
    one(109, 12, &[3, 5, 5, 5, 6], &[3, 4, 5], 13, 3, 0),
    one(110, 12, &[4, 5, 5, 5, 5], &[1, 5, 6], 15, 3, 0),
    one(111, 12, &[4, 5, 5, 5, 5], &[3, 4, 5], 15, 3, 0),
    one(112, 14, &[2, 5, 5, 5, 11], &[2, 5, 7], 19, 3, 0),
    one(113, 14, &[3, 3, 4, 9, 9], &[3, 4, 7], 19, 3, 0),
    one(114, 14, &[5, 5, 5, 5, 8], &[2, 5, 7], 19, 3, 0),
    one(115, 3, &[1, 1, 1, 1, 1, 1], &[1, 1, 1], 4, 1, 0),
    one(116, 4, &[1, 1, 1, 1, 1, 3], &[1, 1, 2], 6, 1, 0),
    one(117, 4, &[1, 1, 1, 1, 2, 2], &[1, 1, 2], 5, 1, 0),
    one(118, 6, &[1, 1, 1, 1, 3, 5], &[1, 2, 3], 9, 1, 0),
    one(119, 6, &[1, 1, 1, 1, 4, 4], &[1, 2, 3], 9, 1, 0),
    one(120, 6, &[1, 1, 1, 2, 2, 5], &[1, 2, 3], 9, 1, 0),
    one(121, 6, &[1, 1, 1, 2, 3, 4], &[1, 2, 3], 8, 1, 0),
    one(122, 6, &[1, 1, 1, 3, 3, 3], &[1, 1, 4], 7, 2, 1),
    one(123, 6, &[1, 1, 1, 3, 3, 3], &[1, 2, 3], 7, 1, 0),
    one(124, 6, &[1, 1, 2, 2, 2, 4], &[1, 2, 3], 8, 1, 0),
    one(125, 6, &[1, 1, 2, 2, 3, 3], &[1, 2, 3], 7, 1, 0),
    one(126, 6, &[1, 2, 2, 2, 2, 3], &[1, 2, 3], 7, 1, 0),
    one(127, 8, &[1, 3, 3, 3, 3, 3], &[1, 3, 4], 14, 2, 0),
    one(128, 10, &[2, 3, 3, 3, 3, 6], &[2, 3, 5], 17, 2, 0),
    one(129, 10, &[3, 3, 3, 3, 3, 5], &[2, 3, 5], 16, 2, 0),
    one(130, 4, &[1, 1, 1, 1, 1, 1, 2], &[1, 1, 2], 7, 1, 0),
    one(131, 6, &[1, 1, 1, 1, 1, 2, 5], &[1, 2, 3], 12, 1, 0),
    one(132, 6, &[1, 1, 1, 1, 1, 3, 4], &[1, 2, 3], 11, 1, 0),
    one(133, 6, &[1, 1, 1, 1, 2, 2, 4], &[1, 2, 3], 11, 1, 0),
    one(134, 6, &[1, 1, 1, 1, 2, 3, 3], &[1, 2, 3], 10, 1, 0),
    one(135, 6, &[1, 1, 1, 2, 2, 2, 3], &[1, 2, 3], 10, 1, 0),
    one(136, 6, &[1, 1, 2, 2, 2, 2, 2], &[1, 2, 3], 10, 1, 0),
    one(137, 10, &[2, 3, 3, 3, 3, 3, 3], &[2, 3, 5], 22, 2, 0),
    one(138, 4, &[1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, 2], 9, 1, 0),
    one(139, 6, &[1, 1, 1, 1, 1, 1, 1, 5], &[1, 2, 3], 15, 1, 0),
    one(140, 6, &[1, 1, 1, 1, 1, 1, 2, 4], &[1, 2, 3], 14, 1, 0),
    one(141, 6, &[1, 1, 1, 1, 1, 2, 2, 3], &[1, 2, 3], 13, 1, 0),
    one(142, 6, &[1, 1, 1, 1, 1, 1, 3, 3], &[1, 2, 3], 13, 1, 0),
    one(143, 6, &[1, 1, 1, 1, 2, 2, 2, 2], &[1, 2, 3], 13, 1, 0),
    one(144, 6, &[1, 1, 1, 1, 1, 1, 1, 1, 4], &[1, 2, 3], 17, 1, 0),
    one(145, 6, &[1, 1, 1, 1, 1, 1, 1, 2, 3], &[1, 2, 3], 16, 1, 0),
    one(146, 6, &[1, 1, 1, 1, 1, 1, 2, 2, 2], &[1, 2, 3], 16, 1, 0),
    one(147, 6, &[1, 1, 1, 1, 1, 1, 1, 1, 1, 3], &[1, 2, 3], 19, 1, 0),
    one(148, 6, &[1, 1, 1, 1, 1, 1, 1, 1, 2, 2], &[1, 2, 3], 19, 1, 0),
    one(149, 6, &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2], &[1, 2, 3], 22, 1, 0),
    one(150, 6, &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 3], 25, 1, 0),
];

/// The 4 generalized reference rows.
pub const TABLE_TWO: [ReferenceRow; 4] = [
    two(1, 4, &[1, 1, 1, 1], &[1, 1, 1, 1], 3, 3, 0),
    two(2, 6, &[1, 1, 1, 3], &[1, 1, 1, 3], 4, 4, 0),
    two(3, 6, &[1, 1, 1, 3], &[1, 1, 2, 2], 4, 4, 1),
    two(4, 6, &[1, 1, 2, 2], &[1, 1, 4], 4, 2, 0),
];

/// All 154 reference rows, table one first.
pub fn all_rows() -> impl Iterator<Item = &'static ReferenceRow> {
    TABLE_ONE.iter().chain(TABLE_TWO.iter())
}

/// Find the reference row with exactly this canonical data, if any.
pub fn lookup(m: i64, a: &[i64], b: &[i64]) -> Option<&'static ReferenceRow> {
    all_rows().find(|r| r.m == m && r.a == a && r.b == b)
}
