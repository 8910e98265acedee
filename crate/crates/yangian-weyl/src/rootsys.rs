//! Cartan data for A_l, B_l, C_l, D_l and G2.
//!
//! Nodes are numbered `1..=l` throughout the public API. Weights live in
//! fundamental-weight coordinates, roots in simple-root coordinates, and
//! `a_ij = ⟨α_i^∨, α_j⟩`, so the simple root `α_j` in weight coordinates is
//! column `j` of the Cartan matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unknown Lie type `{0}`")]
    UnknownFamily(String),
    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("longest word sends ω_{0} to a non-antidominant weight")]
    BrokenWordTable(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, RootSysError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G2" | "G" => Ok(Family::G2),
            _ => Err(RootSysError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootSysError::InvalidRank { family, rank })
        }
    }

    pub fn g2() -> Self {
        LieType { family: Family::G2, rank: 2 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn check_node(&self, node: usize) -> Result<(), RootSysError> {
        if (1..=self.rank).contains(&node) {
            Ok(())
        } else {
            Err(RootSysError::NodeOutOfRange { node, rank: self.rank })
        }
    }

    /// D_3 is accepted but the D-type closed forms are only claimed for l ≥ 4.
    pub fn warning(&self) -> Option<&'static str> {
        (self.family == Family::D && self.rank == 3)
            .then_some("D_3 ≅ A_3: type-D closed forms are stated for rank ≥ 4")
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 => f.write_str("G2"),
            fam => write!(f, "{}{}", fam, self.rank),
        }
    }
}

/// Integer vector in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn coeff(&self, node: usize) -> i64 {
        self.0[node - 1]
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{}{}ω{}", sign, mag, k + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Integer vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut r = vec![0; rank];
        r[i - 1] = 1;
        Root(r)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        Root(self.0.iter().map(|c| -c).collect()).is_positive()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Simple roots and fundamental weights in the orthonormal μ basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuCoords {
    pub simple_roots: Vec<Vec<Rational>>,
    pub fundamental_weights: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub lie_type: LieType,
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers as used per family (B: 2,…,2,1; C: 1,…,1,2; G2: 3,1).
    pub d: Vec<i64>,
    /// `None` for G2, which is tabulated directly in the root basis.
    pub mu_coords: Option<MuCoords>,
}

pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    if t.family == Family::G2 {
        return vec![vec![2, -1], vec![-3, 2]];
    }
    for i in 0..l {
        a[i][i] = 2;
        if i + 1 < l {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match t.family {
        Family::B => a[l - 1][l - 2] = -2,
        Family::C => a[l - 2][l - 1] = -2,
        Family::D => {
            // node l hangs off node l-2 instead of node l-1
            a[l - 2][l - 1] = 0;
            a[l - 1][l - 2] = 0;
            a[l - 3][l - 1] = -1;
            a[l - 1][l - 3] = -1;
        }
        _ => {}
    }
    a
}

pub fn symmetrizers(t: LieType) -> Vec<i64> {
    let l = t.rank;
    match t.family {
        Family::A | Family::D => vec![1; l],
        Family::B => (1..=l).map(|i| if i < l { 2 } else { 1 }).collect(),
        Family::C => (1..=l).map(|i| if i < l { 1 } else { 2 }).collect(),
        Family::G2 => vec![3, 1],
    }
}

fn mu_coords(t: LieType) -> Option<MuCoords> {
    let l = t.rank;
    let width = if t.family == Family::A { l + 1 } else { l };
    let unit = |k: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); width];
        v[k] = int(1);
        v
    };
    let combo = |terms: &[(usize, Rational)]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); width];
        for (k, c) in terms {
            v[*k] += c;
        }
        v
    };
    let prefix = |i: usize, c: Rational| -> Vec<Rational> {
        combo(&(0..i).map(|k| (k, c.clone())).collect::<Vec<_>>())
    };
    let diff = |k: usize| combo(&[(k, int(1)), (k + 1, int(-1))]);
    let (roots, weights): (Vec<_>, Vec<_>) = match t.family {
        Family::A => ((0..l).map(diff).collect(), (1..=l).map(|i| prefix(i, int(1))).collect()),
        Family::B => {
            let mut r: Vec<_> = (0..l - 1).map(diff).collect();
            r.push(unit(l - 1));
            let mut w: Vec<_> = (1..l).map(|i| prefix(i, int(1))).collect();
            w.push(prefix(l, rat(1, 2)));
            (r, w)
        }
        Family::C => {
            let mut r: Vec<_> = (0..l - 1).map(diff).collect();
            r.push(combo(&[(l - 1, int(2))]));
            (r, (1..=l).map(|i| prefix(i, int(1))).collect())
        }
        Family::D => {
            let mut r: Vec<_> = (0..l - 1).map(diff).collect();
            r.push(combo(&[(l - 2, int(1)), (l - 1, int(1))]));
            let mut w: Vec<_> = (1..=l - 2).map(|i| prefix(i, int(1))).collect();
            let mut spin_minus = prefix(l, rat(1, 2));
            spin_minus[l - 1] = rat(-1, 2);
            w.push(spin_minus);
            w.push(prefix(l, rat(1, 2)));
            (r, w)
        }
        Family::G2 => return None,
    };
    Some(MuCoords { simple_roots: roots, fundamental_weights: weights })
}

pub fn cartan_datum(t: LieType) -> CartanDatum {
    CartanDatum { lie_type: t, cartan: cartan_matrix(t), d: symmetrizers(t), mu_coords: mu_coords(t) }
}

/// `α_i` in fundamental-weight coordinates.
pub fn simple_root_weight(t: LieType, i: usize) -> Weight {
    let a = cartan_matrix(t);
    Weight((0..t.rank).map(|r| a[r][i - 1]).collect())
}

pub fn root_to_weight(t: LieType, root: &Root) -> Weight {
    let a = cartan_matrix(t);
    Weight((0..t.rank).map(|r| (0..t.rank).map(|c| a[r][c] * root.0[c]).sum()).collect())
}

/// `s_i(w) = w − ⟨w, α_i^∨⟩ α_i`.
pub fn reflect(t: LieType, w: &Weight, i: usize) -> Result<Weight, RootSysError> {
    t.check_node(i)?;
    let c = w.coeff(i);
    let alpha = simple_root_weight(t, i);
    Ok(Weight(w.0.iter().zip(&alpha.0).map(|(x, a)| x - c * a).collect()))
}

/// Simple reflection on a root in simple-root coordinates.
pub fn reflect_root(t: LieType, root: &Root, i: usize) -> Root {
    let a = cartan_matrix(t);
    let pairing: i64 = (0..t.rank).map(|j| a[i - 1][j] * root.0[j]).sum();
    let mut out = root.0.clone();
    out[i - 1] -= pairing;
    Root(out)
}

/// Applies a written word (rightmost letter first).
pub fn apply_word(t: LieType, word: &[usize], w: &Weight) -> Weight {
    word.iter().rev().fold(w.clone(), |acc, &i| reflect(t, &acc, i).expect("word letter out of range"))
}

pub fn apply_word_root(t: LieType, word: &[usize], r: &Root) -> Root {
    word.iter().rev().fold(r.clone(), |acc, &i| reflect_root(t, &acc, i))
}

/// Reduced expression of w₀ as written (leftmost letter applied last).
pub fn longest_word(t: LieType) -> Vec<usize> {
    let l = t.rank;
    match t.family {
        // s_l (s_{l-1} s_l) (s_{l-2} s_{l-1} s_l) … (s_1 … s_l)
        Family::A => (1..=l).rev().flat_map(|j| j..=l).collect(),
        // s_l (s_{l-1} s_l s_{l-1}) … (s_1 … s_l … s_1)
        Family::B | Family::C => (1..=l).rev().flat_map(|j| (j..=l).chain((j..l).rev())).collect(),
        // s_l s_{l-1} (s_{l-2} s_l s_{l-1} s_{l-2}) … (s_1 … s_{l-2} s_l s_{l-1} s_{l-2} … s_1)
        Family::D => {
            let mut w = vec![l, l - 1];
            for j in (1..=l - 2).rev() {
                w.extend(j..=l - 2);
                w.extend([l, l - 1]);
                w.extend((j..=l - 2).rev());
            }
            w
        }
        Family::G2 => vec![1, 2, 1, 2, 1, 2],
    }
}

/// `ν` with `w₀(ω_i) = −ω_{ν(i)}`; entry `i-1` holds `ν(i)`.
pub fn node_involution(t: LieType) -> Result<Vec<usize>, RootSysError> {
    let word = longest_word(t);
    t.nodes()
        .map(|i| {
            let image = apply_word(t, &word, &Weight::fundamental(t.rank, i)).neg();
            let hits: Vec<usize> = image.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| k + 1).collect();
            match hits.as_slice() {
                [j] if image.coeff(*j) == 1 => Ok(*j),
                _ => Err(RootSysError::BrokenWordTable(i)),
            }
        })
        .collect()
}

pub fn nu(t: LieType, i: usize) -> usize {
    let l = t.rank;
    match t.family {
        Family::A => l + 1 - i,
        Family::D if l % 2 == 1 && i >= l - 1 => 2 * l - 1 - i,
        _ => i,
    }
}

/// Half the dual Coxeter number.
pub fn kappa(t: LieType) -> Rational {
    let l = t.rank as i64;
    match t.family {
        Family::A => rat(l + 1, 2),
        Family::B => rat(2 * l - 1, 2),
        Family::C => rat(l + 1, 2),
        Family::D => int(l - 1),
        Family::G2 => int(2),
    }
}

/// All positive roots, generated as the W-orbit of the simple roots;
/// sorted by height, then lexicographically.
pub fn positive_roots(t: LieType) -> Vec<Root> {
    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = t.nodes().map(|i| Root::simple(t.rank, i)).collect();
    while let Some(r) = queue.pop_front() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for i in t.nodes() {
            let s = reflect_root(t, &r, i);
            if !seen.contains(&s) {
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
    pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    pos
}

pub fn highest_root(t: LieType) -> Root {
    positive_roots(t).pop().expect("root system is nonempty")
}
