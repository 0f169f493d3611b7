// Right-hand sides of the closed forms for J′2, J′3, J′5, J′6 as integer
// polynomials in a, b, c, d; exponents are [i, j, k, l] for a^i b^j c^k d^l.

/// 2·J′2
pub(super) const J2_RHS: [(i64, [u32; 4]); 21] = [
    (2, [2, 0, 0, 2]),
    (-2, [2, 0, 0, 1]),
    (2, [2, 0, 0, 0]),
    (-2, [1, 1, 1, 1]),
    (1, [1, 1, 1, 0]),
    (1, [1, 1, 0, 1]),
    (-2, [1, 1, 0, 0]),
    (1, [1, 0, 1, 1]),
    (-2, [1, 0, 1, 0]),
    (-2, [1, 0, 0, 2]),
    (1, [1, 0, 0, 1]),
    (2, [0, 2, 2, 0]),
    (-2, [0, 2, 1, 0]),
    (2, [0, 2, 0, 0]),
    (-2, [0, 1, 2, 0]),
    (1, [0, 1, 1, 1]),
    (1, [0, 1, 1, 0]),
    (-2, [0, 1, 0, 1]),
    (2, [0, 0, 2, 0]),
    (-2, [0, 0, 1, 1]),
    (2, [0, 0, 0, 2]),
];

/// −4·J′3
pub(super) const J3_RHS: [(i64, [u32; 4]); 55] = [
    (-4, [3, 0, 0, 3]),
    (6, [3, 0, 0, 2]),
    (6, [3, 0, 0, 1]),
    (-4, [3, 0, 0, 0]),
    (6, [2, 1, 1, 2]),
    (-6, [2, 1, 1, 1]),
    (-3, [2, 1, 1, 0]),
    (-3, [2, 1, 0, 2]),
    (-6, [2, 1, 0, 1]),
    (6, [2, 1, 0, 0]),
    (-3, [2, 0, 1, 2]),
    (-6, [2, 0, 1, 1]),
    (6, [2, 0, 1, 0]),
    (6, [2, 0, 0, 3]),
    (-6, [2, 0, 0, 2]),
    (-3, [2, 0, 0, 1]),
    (6, [1, 2, 2, 1]),
    (-3, [1, 2, 2, 0]),
    (-6, [1, 2, 1, 1]),
    (-6, [1, 2, 1, 0]),
    (-3, [1, 2, 0, 1]),
    (6, [1, 2, 0, 0]),
    (-6, [1, 1, 2, 1]),
    (-6, [1, 1, 2, 0]),
    (-6, [1, 1, 1, 2]),
    (60, [1, 1, 1, 1]),
    (-6, [1, 1, 1, 0]),
    (-6, [1, 1, 0, 2]),
    (-6, [1, 1, 0, 1]),
    (-3, [1, 0, 2, 1]),
    (6, [1, 0, 2, 0]),
    (-6, [1, 0, 1, 2]),
    (-6, [1, 0, 1, 1]),
    (6, [1, 0, 0, 3]),
    (-3, [1, 0, 0, 2]),
    (-4, [0, 3, 3, 0]),
    (6, [0, 3, 2, 0]),
    (6, [0, 3, 1, 0]),
    (-4, [0, 3, 0, 0]),
    (6, [0, 2, 3, 0]),
    (-3, [0, 2, 2, 1]),
    (-6, [0, 2, 2, 0]),
    (-6, [0, 2, 1, 1]),
    (-3, [0, 2, 1, 0]),
    (6, [0, 2, 0, 1]),
    (6, [0, 1, 3, 0]),
    (-6, [0, 1, 2, 1]),
    (-3, [0, 1, 2, 0]),
    (-3, [0, 1, 1, 2]),
    (-6, [0, 1, 1, 1]),
    (6, [0, 1, 0, 2]),
    (-4, [0, 0, 3, 0]),
    (6, [0, 0, 2, 1]),
    (6, [0, 0, 1, 2]),
    (-4, [0, 0, 0, 3]),
];

/// −(8/81)·J′5
pub(super) const J5_RHS: [(i64, [u32; 4]); 87] = [
    (-2, [3, 2, 2, 1]),
    (1, [3, 2, 2, 0]),
    (1, [3, 2, 1, 2]),
    (1, [3, 2, 1, 1]),
    (1, [3, 2, 0, 3]),
    (-2, [3, 2, 0, 2]),
    (1, [3, 1, 2, 2]),
    (1, [3, 1, 2, 1]),
    (-4, [3, 1, 1, 3]),
    (4, [3, 1, 1, 2]),
    (-4, [3, 1, 1, 1]),
    (1, [3, 1, 0, 3]),
    (1, [3, 1, 0, 2]),
    (1, [3, 0, 2, 3]),
    (-2, [3, 0, 2, 2]),
    (1, [3, 0, 1, 3]),
    (1, [3, 0, 1, 2]),
    (-2, [3, 0, 0, 3]),
    (1, [3, 0, 0, 2]),
    (1, [2, 3, 3, 0]),
    (1, [2, 3, 2, 1]),
    (-2, [2, 3, 2, 0]),
    (-2, [2, 3, 1, 2]),
    (1, [2, 3, 1, 1]),
    (1, [2, 3, 0, 2]),
    (1, [2, 2, 3, 1]),
    (-2, [2, 2, 3, 0]),
    (4, [2, 2, 2, 2]),
    (-4, [2, 2, 2, 1]),
    (1, [2, 2, 2, 0]),
    (1, [2, 2, 1, 3]),
    (-4, [2, 2, 1, 2]),
    (4, [2, 2, 1, 1]),
    (-2, [2, 2, 0, 3]),
    (1, [2, 2, 0, 2]),
    (-2, [2, 1, 3, 2]),
    (1, [2, 1, 3, 1]),
    (1, [2, 1, 2, 3]),
    (-4, [2, 1, 2, 2]),
    (4, [2, 1, 2, 1]),
    (4, [2, 1, 1, 3]),
    (-4, [2, 1, 1, 2]),
    (1, [2, 1, 1, 1]),
    (1, [2, 1, 0, 3]),
    (-2, [2, 1, 0, 2]),
    (1, [2, 0, 3, 2]),
    (-2, [2, 0, 2, 3]),
    (1, [2, 0, 2, 2]),
    (1, [2, 0, 1, 3]),
    (-2, [2, 0, 1, 2]),
    (1, [2, 0, 0, 3]),
    (-4, [1, 3, 3, 1]),
    (1, [1, 3, 3, 0]),
    (1, [1, 3, 2, 2]),
    (4, [1, 3, 2, 1]),
    (1, [1, 3, 2, 0]),
    (1, [1, 3, 1, 2]),
    (-4, [1, 3, 1, 1]),
    (1, [1, 2, 3, 2]),
    (4, [1, 2, 3, 1]),
    (1, [1, 2, 3, 0]),
    (-2, [1, 2, 2, 3]),
    (-4, [1, 2, 2, 2]),
    (-4, [1, 2, 2, 1]),
    (-2, [1, 2, 2, 0]),
    (1, [1, 2, 1, 3]),
    (4, [1, 2, 1, 2]),
    (1, [1, 2, 1, 1]),
    (1, [1, 1, 3, 2]),
    (-4, [1, 1, 3, 1]),
    (1, [1, 1, 2, 3]),
    (4, [1, 1, 2, 2]),
    (1, [1, 1, 2, 1]),
    (-4, [1, 1, 1, 3]),
    (1, [1, 1, 1, 2]),
    (1, [0, 3, 3, 2]),
    (1, [0, 3, 3, 1]),
    (-2, [0, 3, 3, 0]),
    (-2, [0, 3, 2, 2]),
    (1, [0, 3, 2, 1]),
    (1, [0, 3, 2, 0]),
    (-2, [0, 2, 3, 2]),
    (1, [0, 2, 3, 1]),
    (1, [0, 2, 3, 0]),
    (1, [0, 2, 2, 3]),
    (1, [0, 2, 2, 2]),
    (-2, [0, 2, 2, 1]),
];

/// (16/81)·J′6
pub(super) const J6_RHS_RAW: [(i64, [u32; 4]); 217] = [
    (4, [4, 2, 2, 2]),
    (-4, [4, 2, 2, 1]),
    (1, [4, 2, 2, 0]),
    (4, [4, 2, 1, 3]),
    (-10, [4, 2, 1, 2]),
    (4, [4, 2, 1, 1]),
    (1, [4, 2, 0, 4]),
    (-4, [4, 2, 0, 3]),
    (4, [4, 2, 0, 2]),
    (4, [4, 1, 2, 3]),
    (-10, [4, 1, 2, 2]),
    (4, [4, 1, 2, 1]),
    (-10, [4, 1, 1, 4]),
    (12, [4, 1, 1, 3]),
    (12, [4, 1, 1, 2]),
    (-10, [4, 1, 1, 1]),
    (4, [4, 1, 0, 4]),
    (-10, [4, 1, 0, 3]),
    (4, [4, 1, 0, 2]),
    (1, [4, 0, 2, 4]),
    (-4, [4, 0, 2, 3]),
    (4, [4, 0, 2, 2]),
    (4, [4, 0, 1, 4]),
    (-10, [4, 0, 1, 3]),
    (4, [4, 0, 1, 2]),
    (4, [4, 0, 0, 4]),
    (-4, [4, 0, 0, 3]),
    (1, [4, 0, 0, 2]),
    (-4, [3, 3, 3, 1]),
    (2, [3, 3, 3, 0]),
    (-10, [3, 3, 2, 2]),
    (16, [3, 3, 2, 1]),
    (-4, [3, 3, 2, 0]),
    (-4, [3, 3, 1, 3]),
    (16, [3, 3, 1, 2]),
    (-10, [3, 3, 1, 1]),
    (4, [3, 3, 0, 3]),
    (-4, [3, 3, 0, 2]),
    (-10, [3, 2, 3, 2]),
    (16, [3, 2, 3, 1]),
    (-4, [3, 2, 3, 0]),
    (12, [3, 2, 2, 3]),
    (4, [3, 2, 2, 2]),
    (-22, [3, 2, 2, 1]),
    (4, [3, 2, 2, 0]),
    (4, [3, 2, 1, 4]),
    (-22, [3, 2, 1, 3]),
    (4, [3, 2, 1, 2]),
    (12, [3, 2, 1, 1]),
    (-4, [3, 2, 0, 4]),
    (16, [3, 2, 0, 3]),
    (-10, [3, 2, 0, 2]),
    (-4, [3, 1, 3, 3]),
    (16, [3, 1, 3, 2]),
    (-10, [3, 1, 3, 1]),
    (4, [3, 1, 2, 4]),
    (-22, [3, 1, 2, 3]),
    (4, [3, 1, 2, 2]),
    (12, [3, 1, 2, 1]),
    (12, [3, 1, 1, 4]),
    (4, [3, 1, 1, 3]),
    (-22, [3, 1, 1, 2]),
    (4, [3, 1, 1, 1]),
    (-10, [3, 1, 0, 4]),
    (16, [3, 1, 0, 3]),
    (-4, [3, 1, 0, 2]),
    (2, [3, 0, 3, 3]),
    (-4, [3, 0, 3, 2]),
    (-4, [3, 0, 2, 4]),
    (16, [3, 0, 2, 3]),
    (-10, [3, 0, 2, 2]),
    (-10, [3, 0, 1, 4]),
    (16, [3, 0, 1, 3]),
    (-4, [3, 0, 1, 2]),
    (-4, [3, 0, 0, 4]),
    (2, [3, 0, 0, 3]),
    (1, [2, 4, 4, 0]),
    (4, [2, 4, 3, 1]),
    (-4, [2, 4, 3, 0]),
    (4, [2, 4, 2, 2]),
    (-10, [2, 4, 2, 1]),
    (4, [2, 4, 2, 0]),
    (-4, [2, 4, 1, 2]),
    (4, [2, 4, 1, 1]),
    (1, [2, 4, 0, 2]),
    (4, [2, 3, 4, 1]),
    (-4, [2, 3, 4, 0]),
    (12, [2, 3, 3, 2]),
    (-22, [2, 3, 3, 1]),
    (16, [2, 3, 3, 0]),
    (-10, [2, 3, 2, 3]),
    (4, [2, 3, 2, 2]),
    (4, [2, 3, 2, 1]),
    (-10, [2, 3, 2, 0]),
    (16, [2, 3, 1, 3]),
    (-22, [2, 3, 1, 2]),
    (12, [2, 3, 1, 1]),
    (-4, [2, 3, 0, 3]),
    (4, [2, 3, 0, 2]),
    (4, [2, 2, 4, 2]),
    (-10, [2, 2, 4, 1]),
    (4, [2, 2, 4, 0]),
    (-10, [2, 2, 3, 3]),
    (4, [2, 2, 3, 2]),
    (4, [2, 2, 3, 1]),
    (-10, [2, 2, 3, 0]),
    (4, [2, 2, 2, 4]),
    (4, [2, 2, 2, 3]),
    (12, [2, 2, 2, 2]),
    (4, [2, 2, 2, 1]),
    (4, [2, 2, 2, 0]),
    (-10, [2, 2, 1, 4]),
    (4, [2, 2, 1, 3]),
    (4, [2, 2, 1, 2]),
    (-10, [2, 2, 1, 1]),
    (4, [2, 2, 0, 4]),
    (-10, [2, 2, 0, 3]),
    (4, [2, 2, 0, 2]),
    (-4, [2, 1, 4, 2]),
    (4, [2, 1, 4, 1]),
    (16, [2, 1, 3, 3]),
    (-22, [2, 1, 3, 2]),
    (12, [2, 1, 3, 1]),
    (-10, [2, 1, 2, 4]),
    (4, [2, 1, 2, 3]),
    (4, [2, 1, 2, 2]),
    (-10, [2, 1, 2, 1]),
    (12, [2, 1, 1, 4]),
    (-22, [2, 1, 1, 3]),
    (16, [2, 1, 1, 2]),
    (4, [2, 1, 0, 4]),
    (-4, [2, 1, 0, 3]),
    (2, [2, 0, 4, 2]),
    (-4, [2, 0, 3, 3]),
    (4, [2, 0, 3, 2]),
    (4, [2, 0, 2, 4]),
    (-10, [2, 0, 2, 3]),
    (4, [2, 0, 2, 2]),
    (4, [2, 0, 1, 4]),
    (-4, [2, 0, 1, 3]),
    (1, [2, 0, 0, 4]),
    (-10, [1, 4, 4, 1]),
    (4, [1, 4, 4, 0]),
    (4, [1, 4, 3, 2]),
    (12, [1, 4, 3, 1]),
    (-10, [1, 4, 3, 0]),
    (-10, [1, 4, 2, 2]),
    (12, [1, 4, 2, 1]),
    (4, [1, 4, 2, 0]),
    (4, [1, 4, 1, 2]),
    (-10, [1, 4, 1, 1]),
    (4, [1, 3, 4, 2]),
    (12, [1, 3, 4, 1]),
    (-10, [1, 3, 4, 0]),
    (-4, [1, 3, 3, 3]),
    (-22, [1, 3, 3, 2]),
    (4, [1, 3, 3, 1]),
    (16, [1, 3, 3, 0]),
    (16, [1, 3, 2, 3]),
    (4, [1, 3, 2, 2]),
    (-22, [1, 3, 2, 1]),
    (-4, [1, 3, 2, 0]),
    (-10, [1, 3, 1, 3]),
    (12, [1, 3, 1, 2]),
    (4, [1, 3, 1, 1]),
    (-10, [1, 2, 4, 2]),
    (12, [1, 2, 4, 1]),
    (4, [1, 2, 4, 0]),
    (16, [1, 2, 3, 3]),
    (4, [1, 2, 3, 2]),
    (-22, [1, 2, 3, 1]),
    (-4, [1, 2, 3, 0]),
    (-4, [1, 2, 2, 4]),
    (-22, [1, 2, 2, 3]),
    (4, [1, 2, 2, 2]),
    (16, [1, 2, 2, 1]),
    (4, [1, 2, 1, 4]),
    (12, [1, 2, 1, 3]),
    (-10, [1, 2, 1, 2]),
    (4, [1, 1, 4, 2]),
    (-10, [1, 1, 4, 1]),
    (-10, [1, 1, 3, 3]),
    (12, [1, 1, 3, 2]),
    (4, [1, 1, 3, 1]),
    (4, [1, 1, 2, 4]),
    (12, [1, 1, 2, 3]),
    (-10, [1, 1, 2, 2]),
    (-10, [1, 1, 1, 4]),
    (4, [1, 1, 1, 3]),
    (1, [0, 4, 4, 2]),
    (4, [0, 4, 4, 1]),
    (4, [0, 4, 4, 0]),
    (-4, [0, 4, 3, 2]),
    (-10, [0, 4, 3, 1]),
    (-4, [0, 4, 3, 0]),
    (4, [0, 4, 2, 2]),
    (4, [0, 4, 2, 1]),
    (1, [0, 4, 2, 0]),
    (-4, [0, 3, 4, 2]),
    (-10, [0, 3, 4, 1]),
    (-4, [0, 3, 4, 0]),
    (2, [0, 3, 3, 3]),
    (16, [0, 3, 3, 2]),
    (16, [0, 3, 3, 1]),
    (2, [0, 3, 3, 0]),
    (-4, [0, 3, 2, 3]),
    (-10, [0, 3, 2, 2]),
    (-4, [0, 3, 2, 1]),
    (4, [0, 2, 4, 2]),
    (4, [0, 2, 4, 1]),
    (1, [0, 2, 4, 0]),
    (-4, [0, 2, 3, 3]),
    (-10, [0, 2, 3, 2]),
    (-4, [0, 2, 3, 1]),
    (1, [0, 2, 2, 4]),
    (4, [0, 2, 2, 3]),
    (4, [0, 2, 2, 2]),
];

/// J′_k = scale · (right-hand side).
pub(super) const SCALES: [(i64, i64); 4] = [(1, 2), (-1, 4), (-81, 8), (81, 16)];
