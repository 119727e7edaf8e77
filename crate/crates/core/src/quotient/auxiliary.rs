//! Auxiliary polynomials from the comparison arguments.
//!
//! Each cubic difference between a competitor graph and the extremal graph
//! factors as a parameter gap times one of these quadratics. `f_case3` and
//! `g_case3` are the lower-bound polynomials in `n` obtained by evaluating
//! `eta2` at `2n - 2δ` and `phi2` at `n + δ - 3`; they are transcribed as
//! printed, and [`f_case3_offset`] / [`g_case3_offset`] give their exact
//! difference from that evaluation.
//!
//! Arguments are `(n, s, δ)` as reals so the same functions serve exact
//! grids and sampled points.

/// `η₁(x)`, the factor of `φ(A²) − φ(A*)` (signless Laplacian, `s ≥ δ`).
pub fn eta1(n: f64, s: f64, d: f64, x: f64) -> f64 {
    x * x + (n + 4.0 - 4.0 * s - 4.0 * d) * x - 2.0 * n * n + 2.0 * n + 4.0 * s * n + 4.0 * d * n
        - 2.0 * s * s
        - 2.0 * d * d
        - 2.0 * s
        - 2.0 * d
        - 2.0 * s * d
}

/// `η₂(x)`, the factor of `φ(A³) − φ(A*)` (signless Laplacian, `s < δ`).
pub fn eta2(n: f64, s: f64, d: f64, x: f64) -> f64 {
    let s2 = s * s;
    let s3 = s2 * s;
    let s4 = s3 * s;
    (2.0 * s - 5.0) * x * x
        + (7.0 * n - 12.0 - 4.0 * d * s - 2.0 * n * s + 8.0 * d + 4.0 * s) * x
        + 2.0 * d * d
        + 4.0 * d * s * n
        - 8.0 * d * n
        - 2.0 * n * n
        + 6.0 * n
        + 2.0 * s4
        - 2.0 * d * s3
        + 6.0 * d * s2
        - 10.0 * s3
        + 18.0 * s2
        - 10.0 * d * s
        - 14.0 * s
        + 10.0 * d
}

/// `η₂` specialized to `s = 2`.
pub fn eta2_s2(n: f64, d: f64, x: f64) -> f64 {
    -x * x + (3.0 * n - 4.0) * x + 2.0 * d * d - 2.0 * d - 2.0 * n * n + 6.0 * n - 4.0
}

/// `φ₁(x)`, the factor of `φ(B²) − φ(B*)` (distance matrix, `s ≥ δ`).
pub fn phi1(n: f64, s: f64, d: f64, x: f64) -> f64 {
    x * x + (2.0 * n + 8.0 - 5.0 * s - 5.0 * d) * x + 3.0 * n + 8.0 - s * n - d * n - 8.0 * s
        - 8.0 * d
        + 2.0 * s * s
        + 2.0 * s * d
        + 2.0 * d * d
}

/// `φ₂(x)`, the factor of `φ(B³) − φ(B*)` (distance matrix, `s < δ`).
pub fn phi2(n: f64, s: f64, d: f64, x: f64) -> f64 {
    let s2 = s * s;
    let s3 = s2 * s;
    let s4 = s3 * s;
    (s - 3.0) * x * x
        + (2.0 * s3 - 2.0 * d * s2 - 10.0 * s2 + 2.0 * n * s + 17.0 * s + 3.0 * d * s + 4.0 * d
            - 14.0
            - 3.0 * n)
            * x
        - s4
        + 7.0 * s3
        + d * s3
        - 18.0 * s2
        - n * s2
        - 4.0 * d * s2
        + 21.0 * s
        + 4.0 * n * s
        + 2.0 * d * s
        - 12.0
        - 4.0 * n
        + d * n
        - 2.0 * d * d
        + 7.0 * d
}

/// `φ₂` specialized to `s = 3`, where it is linear in `x`.
pub fn phi2_s3(n: f64, d: f64, x: f64) -> f64 {
    (3.0 * n - 5.0 * d + 1.0) * x + d * n - n - 2.0 * d * d + 4.0 * d - 3.0
}

/// Lower-bound polynomial `f(n)` of the signless Laplacian `3 ≤ s ≤ δ − 1` case.
pub fn f_case3(n: f64, s: f64, d: f64) -> f64 {
    let s2 = s * s;
    let s3 = s2 * s;
    let s4 = s3 * s;
    (4.0 * s - 8.0) * n * n + (34.0 * d + 8.0 * s - 16.0 * d * s - 18.0) * n + 2.0 * s4
        - 10.0 * s3
        - 2.0 * d * s3
        + 6.0 * d * s2
        + 18.0 * s2
        + 16.0 * d * d * s
        - 18.0 * d * s
        - 14.0 * s
        - 36.0 * d * d
        + 34.0 * d
}

/// Lower-bound polynomial `g(n)` of the distance `4 ≤ s ≤ δ − 1` case.
pub fn g_case3(n: f64, s: f64, d: f64) -> f64 {
    let s2 = s * s;
    let s3 = s2 * s;
    let s4 = s3 * s;
    (3.0 * s - 6.0) * n * n
        + (2.0 * s3 - 11.0 * s2 - 2.0 * d * s2 + 7.0 * d * s + 9.0 * s - 4.0 * d + 9.0) * n
        - s4
        + 3.0 * d * s3
        + s3
        - 2.0 * d * d * s2
        - 8.0 * d * s2
        + 12.0 * s2
        + 4.0 * d * d * s
        + 4.0 * d * s
        + 21.0 * s
        - d * d
        - d
        + 3.0
}

/// `η₂(2n − 2δ) − f(n)`; identically `2δ²`.
pub fn f_case3_offset(n: f64, s: f64, d: f64) -> f64 {
    eta2(n, s, d, 2.0 * n - 2.0 * d) - f_case3(n, s, d)
}

/// `φ₂(n + δ − 3) − g(n)`; identically `−42s`.
pub fn g_case3_offset(n: f64, s: f64, d: f64) -> f64 {
    phi2(n, s, d, n + d - 3.0) - g_case3(n, s, d)
}
