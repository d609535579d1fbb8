//! Named graph families, labeled the way the orientation constructions
//! refer to them.
//!
//! | family          | vertex labels                                                       |
//! |-----------------|---------------------------------------------------------------------|
//! | `wheel:n`       | hub `v0 = 0`, rim `v_i = i` for `i = 1..=n`                         |
//! | `mobius:n`      | rim `v_i = i - 1`, diagonals `v_i v_{i+n/2}`                        |
//! | `prism:k`       | outer `v_i = i - 1`, inner `u_i = k + i - 1`, spokes `u_i v_i`      |
//! | `gp:n,k`        | outer `u_i = i - 1`, inner `v_i = n + i - 1`, `v_i v_{i+k}`         |
//! | `flower:n`      | centers `v_i = i-1`, leaves `a_i = n+i-1`, `b_i = 2n+i-1`, `c_i = 3n+i-1` |
//! | `petersen`      | Kneser labeling: 2-subsets of {0..4} in lexicographic order         |
//! | `blanusa:1`/`2` | fixed edge lists (dot products of two Petersen graphs)              |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error("unknown family spec {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Petersen,
    K4,
    Wheel(usize),
    Mobius(usize),
    Prism(usize),
    GeneralizedPetersen { n: usize, k: usize },
    Flower(usize),
    Blanusa(u8),
}

const PETERSEN: [(usize, usize); 15] = [
    (0, 7),
    (0, 8),
    (0, 9),
    (1, 5),
    (1, 6),
    (1, 9),
    (2, 4),
    (2, 6),
    (2, 8),
    (3, 4),
    (3, 5),
    (3, 7),
    (4, 9),
    (5, 8),
    (6, 7),
];

// Automorphism group of order 8.
const BLANUSA_1: [(usize, usize); 27] = [
    (0, 4),
    (0, 5),
    (0, 12),
    (1, 2),
    (1, 6),
    (1, 13),
    (2, 3),
    (2, 7),
    (3, 4),
    (3, 10),
    (4, 9),
    (5, 7),
    (5, 8),
    (6, 8),
    (6, 9),
    (7, 9),
    (8, 14),
    (10, 11),
    (10, 15),
    (11, 12),
    (11, 16),
    (12, 17),
    (13, 15),
    (13, 16),
    (14, 16),
    (14, 17),
    (15, 17),
];

// Automorphism group of order 4.
const BLANUSA_2: [(usize, usize); 27] = [
    (0, 4),
    (0, 5),
    (0, 12),
    (1, 2),
    (1, 6),
    (1, 13),
    (2, 7),
    (2, 10),
    (3, 4),
    (3, 8),
    (3, 14),
    (4, 9),
    (5, 7),
    (5, 8),
    (6, 8),
    (6, 9),
    (7, 9),
    (10, 11),
    (10, 15),
    (11, 12),
    (11, 16),
    (12, 17),
    (13, 15),
    (13, 16),
    (14, 16),
    (14, 17),
    (15, 17),
];

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |family, reason: &str| {
            Err(FamilyError::InvalidParameter {
                family,
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Wheel(n) if n < 3 => bad("wheel", "n must be at least 3"),
            FamilySpec::Mobius(n) if n < 4 || n % 2 == 1 => {
                bad("mobius", "n must be even and at least 4")
            }
            FamilySpec::Prism(k) if k < 3 => bad("prism", "k must be at least 3"),
            FamilySpec::GeneralizedPetersen { n, .. } if n < 3 => bad("gp", "n must be at least 3"),
            FamilySpec::GeneralizedPetersen { n, k } if k == 0 || 2 * k >= n => {
                bad("gp", "k must satisfy 1 <= k < n/2")
            }
            FamilySpec::Flower(n) if n < 3 || n % 2 == 0 => {
                bad("flower", "n must be odd and at least 3")
            }
            FamilySpec::Blanusa(i) if i != 1 && i != 2 => bad("blanusa", "index must be 1 or 2"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::K4 => write!(f, "k4"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Mobius(n) => write!(f, "mobius:{n}"),
            FamilySpec::Prism(k) => write!(f, "prism:{k}"),
            FamilySpec::GeneralizedPetersen { n, k } => write!(f, "gp:{n},{k}"),
            FamilySpec::Flower(n) => write!(f, "flower:{n}"),
            FamilySpec::Blanusa(i) => write!(f, "blanusa:{i}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || FamilyError::Unknown(s.to_string());
        let (name, args) = match s.trim().split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s.trim(), None),
        };
        let numbers: Vec<usize> = match args {
            Some(args) => args
                .split(',')
                .map(|a| a.trim().parse().map_err(|_| unknown()))
                .collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        let spec = match (name.to_ascii_lowercase().as_str(), numbers.as_slice()) {
            ("petersen", []) => FamilySpec::Petersen,
            ("k4", []) => FamilySpec::K4,
            ("wheel", &[n]) => FamilySpec::Wheel(n),
            ("mobius", &[n]) => FamilySpec::Mobius(n),
            ("prism", &[k]) => FamilySpec::Prism(k),
            ("gp", &[n, k]) => FamilySpec::GeneralizedPetersen { n, k },
            ("flower", &[n]) => FamilySpec::Flower(n),
            ("blanusa", &[i]) if i <= u8::MAX as usize => FamilySpec::Blanusa(i as u8),
            _ => return Err(unknown()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let (n, edges): (usize, Vec<(usize, usize)>) = match *spec {
        FamilySpec::Petersen => (10, PETERSEN.to_vec()),
        FamilySpec::K4 => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        FamilySpec::Wheel(n) => {
            let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            edges.extend((1..=n).map(|i| (i, i % n + 1)));
            (n + 1, edges)
        }
        FamilySpec::Mobius(n) => {
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
            (n, edges)
        }
        FamilySpec::Prism(k) => {
            let mut edges = Vec::new();
            for i in 0..k {
                edges.push((i, (i + 1) % k));
                edges.push((k + i, k + (i + 1) % k));
                edges.push((i, k + i));
            }
            (2 * k, edges)
        }
        FamilySpec::GeneralizedPetersen { n, k } => {
            let mut edges = Vec::new();
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((n + i, n + (i + k) % n));
                edges.push((i, n + i));
            }
            (2 * n, edges)
        }
        FamilySpec::Flower(n) => {
            let (a, b, c) = (n, 2 * n, 3 * n);
            let mut edges = Vec::new();
            for i in 0..n {
                edges.extend([(i, a + i), (i, b + i), (i, c + i)]);
                edges.push((a + i, a + (i + 1) % n));
            }
            // 2n-cycle b_1 .. b_n c_1 .. c_n
            for j in 0..2 * n {
                edges.push((b + j, b + (j + 1) % (2 * n)));
            }
            (4 * n, edges)
        }
        FamilySpec::Blanusa(1) => (18, BLANUSA_1.to_vec()),
        FamilySpec::Blanusa(_) => (18, BLANUSA_2.to_vec()),
    };
    Ok(Graph::new(n, edges).expect("family generators produce simple graphs"))
}
