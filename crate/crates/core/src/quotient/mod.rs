//! Vertex partitions, quotient matrices and the 3×3 characteristic
//! polynomials of the join families.
//!
//! Quotient matrices are computed exactly: source matrices must be integral
//! (adjacency, signless Laplacian and distance matrices all are), block
//! averages are rationals, and equitability is an exact test.
//!
//! Block orders of the six templates follow the displayed matrices: the
//! signless Laplacian templates list `(K_s, large clique, rest)` while the
//! distance templates list `(large clique, K_s, rest)`.

pub mod auxiliary;
mod cubic;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use cubic::{largest_root, largest_root_widening, Cubic, Rational};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::spectral::{power_iteration, PerronResult, PowerConfig, SymMatrix};

/// Ordered list of disjoint, nonempty blocks covering `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<VertexSet>,
    order: usize,
}

impl Partition {
    pub fn new(blocks: Vec<VertexSet>, order: usize) -> Result<Self> {
        let mut owner = vec![usize::MAX; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for v in block.iter() {
                if v >= order {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} in block {b} exceeds order {order}"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in blocks {} and {b}",
                        owner[v]
                    )));
                }
                owner[v] = b;
            }
        }
        if let Some(v) = owner.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks, order })
    }

    /// Partition into consecutive runs of the given sizes.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&len| {
                let block = VertexSet::new(start..start + len);
                start += len;
                block
            })
            .collect();
        Partition::new(blocks, start)
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of indices partitioned.
    pub fn order(&self) -> usize {
        self.order
    }
}

/// Matrix of average block row sums `q_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<Rational>,
    equitable: bool,
}

impl QuotientMatrix {
    /// Quotient matrix given directly by integer rows, as for the closed-form
    /// templates. Marked equitable.
    pub fn from_integer_rows<const R: usize>(rows: [[i64; R]; R]) -> Self {
        let entries = rows.iter().flatten().map(|&x| Rational::from(x)).collect();
        QuotientMatrix { order: R, entries, equitable: true }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries[row * self.order + col]
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Entries as integers, when all are integral.
    pub fn integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.entries.iter().all(|r| r.is_integer()).then(|| {
            self.entries
                .chunks(self.order)
                .map(|row| row.iter().map(|r| r.to_integer()).collect())
                .collect()
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|r| r.to_f64().expect("finite entry")).collect()
    }

    /// Perron root by power iteration on the (generally nonsymmetric) quotient.
    pub fn perron(&self) -> Result<PerronResult> {
        power_iteration(self.order, &self.to_f64(), &PowerConfig::default())
    }
}

/// Quotient of an integral symmetric matrix with respect to `p`.
pub fn quotient_matrix(m: &SymMatrix, p: &Partition) -> Result<QuotientMatrix> {
    if p.order() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} indices, matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    let ints = m.to_integer()?;
    let n = m.order();
    let r = p.len();
    let mut entries = Vec::with_capacity(r * r);
    let mut equitable = true;
    for bi in p.blocks() {
        for bj in p.blocks() {
            let row_sums: Vec<i64> = bi
                .iter()
                .map(|u| bj.iter().map(|v| ints[u * n + v]).sum())
                .collect();
            if row_sums.windows(2).any(|w| w[0] != w[1]) {
                equitable = false;
            }
            let total: i64 = row_sums.iter().sum();
            entries.push(Rational::new(total, bi.len() as i64));
        }
    }
    Ok(QuotientMatrix { order: r, entries, equitable })
}

/// Monic `det(xI − q)` of a 3×3 quotient matrix, by cofactor expansion.
pub fn charpoly3(q: &QuotientMatrix) -> Result<Cubic> {
    if q.order() != 3 {
        return Err(Error::WrongOrder { expected: 3, found: q.order() });
    }
    let m = |i: usize, j: usize| q.get(i, j);
    let trace = m(0, 0) + m(1, 1) + m(2, 2);
    let minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)
        + m(1, 1) * m(2, 2)
        - m(1, 2) * m(2, 1);
    let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    Ok(Cubic::new(Rational::from(1), -trace, minors, -det))
}

/// The six quotient families of the comparison arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CubicFamily {
    /// `Q(G*)`, `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
    AqStar,
    /// `Q(G₂)`, `G₂ = K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)`.
    Aq2,
    /// `Q(G₃)`, `G₃ = K_s ∨ (K_{n−s−(δ+1−s)(s−1)} ∪ (s−1)K_{δ+1−s})`.
    Aq3,
    BdStar,
    Bd2,
    Bd3,
}

impl CubicFamily {
    pub const ALL: [CubicFamily; 6] = [
        CubicFamily::AqStar,
        CubicFamily::Aq2,
        CubicFamily::Aq3,
        CubicFamily::BdStar,
        CubicFamily::Bd2,
        CubicFamily::Bd3,
    ];

    /// Checks the parameter range; `s` is ignored by the star families.
    pub fn validate(self, n: i64, s: i64, delta: i64) -> Result<()> {
        let bad = |why: String| Err(Error::ParameterOutOfRange(why));
        match self {
            CubicFamily::AqStar | CubicFamily::BdStar => {
                if delta < 2 || n - 2 * delta + 1 < 1 {
                    return bad(format!("star family needs δ ≥ 2 and n ≥ 2δ (n={n}, δ={delta})"));
                }
            }
            CubicFamily::Aq2 | CubicFamily::Bd2 => {
                if s < 2 || n < 2 * s {
                    return bad(format!("G₂ family needs s ≥ 2 and n ≥ 2s (n={n}, s={s})"));
                }
            }
            CubicFamily::Aq3 | CubicFamily::Bd3 => {
                if s < 2 || s > delta - 1 {
                    return bad(format!("G₃ family needs 2 ≤ s ≤ δ−1 (s={s}, δ={delta})"));
                }
                let small = delta + 1 - s;
                if n < s + small * (s - 1) + 1 {
                    return bad(format!(
                        "G₃ family needs n ≥ s + (δ+1−s)(s−1) + 1 (n={n}, s={s}, δ={delta})"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Closed-form quotient matrix of the family at `(n, s, δ)`.
pub fn template_matrix(family: CubicFamily, n: i64, s: i64, delta: i64) -> Result<QuotientMatrix> {
    family.validate(n, s, delta)?;
    let d = delta;
    let q = d + 1 - s;
    let big3 = n - s - q * (s - 1);
    let rows = match family {
        CubicFamily::AqStar => [[n + d - 2, n - 2 * d + 1, d - 1], [d, 2 * n - 3 * d, 0], [d, 0, d]],
        CubicFamily::Aq2 => [[n + s - 2, n - 2 * s + 1, s - 1], [s, 2 * n - 3 * s, 0], [s, 0, s]],
        CubicFamily::Aq3 => [
            [n + s - 2, big3, (s - 1) * q],
            [s, 2 * n - s - 2 * q * (s - 1) - 2, 0],
            [s, 0, 2 * d - s],
        ],
        CubicFamily::BdStar => [
            [n - 2 * d, d, 2 * (d - 1)],
            [n - 2 * d + 1, d - 1, d - 1],
            [2 * (n - 2 * d + 1), d, 2 * (d - 2)],
        ],
        CubicFamily::Bd2 => [
            [n - 2 * s, s, 2 * (s - 1)],
            [n - 2 * s + 1, s - 1, s - 1],
            [2 * (n - 2 * s + 1), s, 2 * (s - 2)],
        ],
        CubicFamily::Bd3 => [
            [big3 - 1, s, 2 * (s - 1) * q],
            [big3, s - 1, (s - 1) * q],
            [2 * n - 2 * s - 2 * q * (s - 1), s, d - s + 2 * (s - 2) * q],
        ],
    };
    Ok(QuotientMatrix::from_integer_rows(rows))
}

fn star_signless(n: i64, d: i64) -> Cubic {
    Cubic::monic(
        -3 * n + d + 2,
        2 * n * n + d * n - 4 * n - 4 * d * d + 4 * d,
        -2 * d * n * n + 4 * d * d * n + 2 * d * n - 2 * d * d * d - 2 * d * d,
    )
}

fn star_distance(n: i64, d: i64) -> Cubic {
    Cubic::monic(
        5 - n - d,
        5 * d * d - n - 2 * d * n - 8 * d + 8,
        d * d * n - 3 * d * n - 8 * d + 8 * d * d - 2 * d * d * d + 4,
    )
}

fn aq3_c2_c1(n: i64, s: i64, d: i64) -> (i64, i64) {
    let c2 = -3 * n - 2 * s * s + 2 * d * s + 5 * s - 4 * d + 2;
    let c1 = -4 * d * d * s + 4 * d * d - 2 * d * s * n + 8 * d * n + 4 * d * s * s - 4 * d * s
        - 8 * d
        + 2 * n * n
        + 2 * n * s * s
        - 7 * n * s
        - 4 * n
        - 4 * s * s
        + 12 * s;
    (c2, c1)
}

fn bd3_c2_c1(n: i64, s: i64, d: i64) -> (i64, i64) {
    let (s2, s3, s4) = (s * s, s * s * s, s * s * s * s);
    let c2 = 2 * d - n - 3 * s - d * s + s2 + 5;
    let c1 = 6 * d - n - 14 * s + d * n - 13 * d * s - 3 * n * s + 13 * d * s2 - 3 * d * d * s
        - 4 * d * s3
        + 2 * n * s2
        + d * d
        + 17 * s2
        - 10 * s3
        + 2 * s4
        + 2 * d * d * s2
        - 2 * d * n * s
        + 8;
    (c2, c1)
}

/// Characteristic polynomial of the family's quotient matrix from its
/// closed-form coefficients.
///
/// The constant terms of `Aq3` and `Bd3` are the cofactor-verified ones;
/// the printed versions carry exponent slips and are available through
/// [`printed_cubic`].
pub fn family_cubic(family: CubicFamily, n: i64, s: i64, delta: i64) -> Result<Cubic> {
    family.validate(n, s, delta)?;
    let d = delta;
    Ok(match family {
        CubicFamily::AqStar => star_signless(n, d),
        CubicFamily::Aq2 => star_signless(n, s),
        CubicFamily::BdStar => star_distance(n, d),
        CubicFamily::Bd2 => star_distance(n, s),
        CubicFamily::Aq3 => {
            let (c2, c1) = aq3_c2_c1(n, s, d);
            let (s2, s3, s4, s5) = (s * s, s.pow(3), s.pow(4), s.pow(5));
            let c0 = 4 * d * d * n * s - 4 * d * d * n - 2 * d * d * s3 + 6 * d * d * s2
                - 12 * d * d * s
                + 8 * d * d
                - 4 * d * n * n
                - 4 * d * n * s2
                + 8 * d * n * s
                + 8 * d * n
                + 4 * d * s4
                - 16 * d * s3
                + 28 * d * s2
                - 24 * d * s
                + 2 * n * n * s
                - 6 * n * s
                - 2 * s5
                + 10 * s4
                - 18 * s3
                + 14 * s2;
            Cubic::monic(c2, c1, c0)
        }
        CubicFamily::Bd3 => {
            let (c2, c1) = bd3_c2_c1(n, s, d);
            let (s2, s3, s4, s5) = (s * s, s.pow(3), s.pow(4), s.pow(5));
            let c0 = -d * d * s3 + 4 * d * d * s2 - 4 * d * d * s + d * d + d * n * s2
                - 3 * d * n * s
                + d * n
                + 2 * d * s4
                - 11 * d * s3
                + 20 * d * s2
                - 14 * d * s
                + 4 * d
                - n * s3
                + 4 * n * s2
                - 4 * n * s
                - s5
                + 7 * s4
                - 18 * s3
                + 21 * s2
                - 12 * s
                + 4;
            Cubic::monic(c2, c1, c0)
        }
    })
}

/// The coefficient formulas exactly as printed. Identical to
/// [`family_cubic`] except for the constant terms of `Aq3` and `Bd3`.
pub fn printed_cubic(family: CubicFamily, n: i64, s: i64, delta: i64) -> Result<Cubic> {
    family.validate(n, s, delta)?;
    let d = delta;
    let (s2, s3, s4, s5) = (s * s, s.pow(3), s.pow(4), s.pow(5));
    match family {
        CubicFamily::Aq3 => {
            let (c2, c1) = aq3_c2_c1(n, s, d);
            let c0 = 4 * s * d * d * n - 4 * d.pow(3) * n - 2 * d.pow(4) * s3 + 6 * d.pow(3) * s2
                - 12 * d.pow(3) * s
                + 8 * d.pow(3)
                - 4 * d * n * n
                - 4 * d * s2 * n
                + 8 * s * d * n
                + 8 * d * n
                + 4 * d * s4
                - 16 * d * s3
                + 28 * d * s2
                - 24 * d * s
                + 2 * s * n * n
                - 6 * n * s
                - 2 * s3
                + 10 * s4
                - 18 * s3
                + 14 * s2;
            Ok(Cubic::monic(c2, c1, c0))
        }
        CubicFamily::Bd3 => {
            let (c2, c1) = bd3_c2_c1(n, s, d);
            let c0 = 4 * d - 12 * s + d * n - 14 * d * s - 4 * n * s + 20 * d * s2 - 4 * d * d * s
                - 11 * d * s3
                + 2 * d * s4
                + 4 * n * s2
                - n * s3
                + d * d
                + 21 * s2
                - 18 * s3
                + 7 * s4
                - s5
                + 4 * d * d * s2
                - d.pow(3) * s3
                + d * n * s2
                - 3 * d * n * s
                + 4;
            Ok(Cubic::monic(c2, c1, c0))
        }
        _ => family_cubic(family, n, s, delta),
    }
}

/// The displayed `s = 2` polynomial of the signless Laplacian comparison;
/// it equals `family_cubic(Aq3, n, 2, δ)`.
pub fn case_s2_cubic(n: i64, delta: i64) -> Result<Cubic> {
    CubicFamily::Aq3.validate(n, 2, delta)?;
    let d = delta;
    Ok(Cubic::monic(
        4 - 3 * n,
        2 * n * n + 4 * d * n - 10 * n - 4 * d * d + 8,
        4 * n * n - 4 * d * n * n + 4 * d * d * n + 8 * d * n - 12 * n - 8 * d * d + 8,
    ))
}

/// Factorization identities relating a competitor cubic to the extremal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `φ(A²) − φ(A*) = (s − δ)·η₁`
    SignlessG2,
    /// `φ(A³) − φ(A*) = (δ − s)·η₂`
    SignlessG3,
    /// `φ(B²) − φ(B*) = (δ − s)·φ₁`
    DistanceG2,
    /// `φ(B³) − φ(B*) = (s − δ)·φ₂`
    DistanceG3,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::SignlessG2, Identity::SignlessG3, Identity::DistanceG2, Identity::DistanceG3];

    fn families(self) -> (CubicFamily, CubicFamily) {
        match self {
            Identity::SignlessG2 => (CubicFamily::Aq2, CubicFamily::AqStar),
            Identity::SignlessG3 => (CubicFamily::Aq3, CubicFamily::AqStar),
            Identity::DistanceG2 => (CubicFamily::Bd2, CubicFamily::BdStar),
            Identity::DistanceG3 => (CubicFamily::Bd3, CubicFamily::BdStar),
        }
    }

    /// Checks the proof-case range: `s ≥ δ` for the `G₂` identities,
    /// `2 ≤ s ≤ δ − 1` for the `G₃` ones.
    pub fn validate(self, n: i64, s: i64, delta: i64) -> Result<()> {
        let (competitor, star) = self.families();
        star.validate(n, s, delta)?;
        competitor.validate(n, s, delta)?;
        if matches!(self, Identity::SignlessG2 | Identity::DistanceG2) && s < delta {
            return Err(Error::ParameterOutOfRange(format!("{self:?} needs s ≥ δ (s={s}, δ={delta})")));
        }
        Ok(())
    }

    fn factored(self, n: f64, s: f64, d: f64, x: f64) -> f64 {
        match self {
            Identity::SignlessG2 => (s - d) * auxiliary::eta1(n, s, d, x),
            Identity::SignlessG3 => (d - s) * auxiliary::eta2(n, s, d, x),
            Identity::DistanceG2 => (d - s) * auxiliary::phi1(n, s, d, x),
            Identity::DistanceG3 => (s - d) * auxiliary::phi2(n, s, d, x),
        }
    }
}

fn identity_residual(
    identity: Identity,
    cubic_source: fn(CubicFamily, i64, i64, i64) -> Result<Cubic>,
    n: i64,
    s: i64,
    delta: i64,
    xs: &[f64],
) -> Result<f64> {
    identity.validate(n, s, delta)?;
    let (competitor, star) = identity.families();
    let pc = cubic_source(competitor, n, s, delta)?;
    let ps = cubic_source(star, n, s, delta)?;
    let (nf, sf, df) = (n as f64, s as f64, delta as f64);
    let mut worst: f64 = 0.0;
    for &x in xs {
        let (a, b) = (pc.eval(x), ps.eval(x));
        let lhs = a - b;
        let rhs = identity.factored(nf, sf, df, x);
        let scale = 1f64.max(a.abs()).max(b.abs()).max(rhs.abs());
        worst = worst.max((lhs - rhs).abs() / scale);
    }
    Ok(worst)
}

/// Maximum relative residual of the identity over the sample points. The
/// residual at `x` is `|lhs − rhs| / max(1, |φ_competitor(x)|, |φ_star(x)|, |rhs|)`.
pub fn identity_check(identity: Identity, n: i64, s: i64, delta: i64, xs: &[f64]) -> Result<f64> {
    identity_residual(identity, family_cubic, n, s, delta, xs)
}

/// [`identity_check`] using the cubics as printed.
pub fn identity_check_printed(
    identity: Identity,
    n: i64,
    s: i64,
    delta: i64,
    xs: &[f64],
) -> Result<f64> {
    identity_residual(identity, printed_cubic, n, s, delta, xs)
}

/// True when `q` has a zero entry pattern compatible with an irreducible
/// nonnegative matrix; used before trusting power iteration on quotients.
pub fn is_nonnegative(q: &QuotientMatrix) -> bool {
    q.entries.iter().all(|r| *r >= Rational::zero())
}
