//! Dimensions of fundamental modules, factor chains and local Weyl modules.

use num::{BigUint, One};

use crate::drinfeld::{DrinfeldTuple, FactorChain};
use crate::rootsys::{Family, LieType};

/// Where a decomposition row comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Stated in the source classification.
    Tabulated,
    /// Taken from outside literature; not asserted by any acceptance check.
    External,
}

/// `V_a(ω_i)` as a `g`-module: `(k, multiplicity)` with `k = 0` the trivial
/// module and `k ≥ 1` the fundamental module `L(ω_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    pub lie_type: LieType,
    pub rows: Vec<Vec<(usize, u64)>>,
    pub provenance: Vec<Provenance>,
}

impl DecompositionTable {
    pub fn new(t: LieType) -> Self {
        let l = t.rank();
        let mut provenance = vec![Provenance::Tabulated; l];
        let rows = t
            .nodes()
            .map(|i| {
                let split = match t.family() {
                    Family::B => (2..l).contains(&i),
                    Family::D => (2..=l.saturating_sub(2)).contains(&i),
                    _ => false,
                };
                if split {
                    (0..=i / 2).map(|j| (i - 2 * j, 1)).collect()
                } else if t.family() == Family::G2 && i == 1 {
                    provenance[0] = Provenance::External;
                    vec![(1, 1), (0, 1)]
                } else {
                    vec![(i, 1)]
                }
            })
            .collect();
        DecompositionTable { lie_type: t, rows, provenance }
    }

    /// Replaces the row for `node`, e.g. to override the G2 node-1 default.
    pub fn with_row(mut self, node: usize, row: Vec<(usize, u64)>, provenance: Provenance) -> Self {
        self.rows[node - 1] = row;
        self.provenance[node - 1] = provenance;
        self
    }

    pub fn dim(&self, node: usize) -> BigUint {
        self.rows[node - 1]
            .iter()
            .map(|&(k, mult)| BigUint::from(mult) * g_dim_or_trivial(self.lie_type, k))
            .sum()
    }
}

fn binom(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::from(0u32);
    }
    let k = k as u64;
    (0..k).fold(BigUint::one(), |acc, j| acc * (n - j) / (j + 1))
}

fn g_dim_or_trivial(t: LieType, k: usize) -> BigUint {
    if k == 0 {
        BigUint::one()
    } else {
        g_fundamental_dim(t, k)
    }
}

/// `dim L(ω_i)` for the simple Lie algebra.
pub fn g_fundamental_dim(t: LieType, i: usize) -> BigUint {
    t.check_node(i).expect("g_fundamental_dim: node out of range");
    let l = t.rank() as u64;
    let ii = i as i64;
    let two = BigUint::from(2u32);
    match t.family() {
        Family::A => binom(l + 1, ii),
        Family::B if (i as u64) < l => binom(2 * l + 1, ii),
        Family::B => two.pow(l as u32),
        Family::C => binom(2 * l, ii) - binom(2 * l, ii - 2),
        Family::D if (i as u64) + 2 <= l => binom(2 * l, ii),
        Family::D => two.pow(l as u32 - 1),
        Family::G2 => BigUint::from(if i == 1 { 14u32 } else { 7 }),
    }
}

/// `dim V_a(ω_i)` from the default decomposition table.
pub fn yangian_fundamental_dim(t: LieType, i: usize) -> BigUint {
    DecompositionTable::new(t).dim(i)
}

/// `Π_i dim V(ω_i)^{m_i}`.
pub fn weyl_module_dim(pi: &DrinfeldTuple) -> BigUint {
    let t = pi.lie_type();
    let table = DecompositionTable::new(t);
    t.nodes().map(|i| table.dim(i).pow(pi.roots(i).len() as u32)).product()
}

pub fn chain_dim(c: &FactorChain) -> BigUint {
    let table = DecompositionTable::new(c.lie_type);
    c.factors.iter().map(|f| table.dim(f.node)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drinfeld::{order_factors, Factor};
    use crate::exact::{rat, Scalar};
    use num::Zero;
    use proptest::prelude::*;

    fn ty(f: Family, l: usize) -> LieType {
        LieType::new(f, l).unwrap()
    }

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn g_dims() {
        assert_eq!(g_fundamental_dim(ty(Family::A, 3), 2), n(6));
        assert_eq!(g_fundamental_dim(ty(Family::C, 2), 2), n(5));
        assert_eq!(g_fundamental_dim(ty(Family::C, 3), 1), n(6));
        assert_eq!(g_fundamental_dim(ty(Family::D, 4), 4), n(8));
        assert_eq!(g_fundamental_dim(ty(Family::D, 4), 3), n(8));
        assert_eq!(g_fundamental_dim(ty(Family::B, 3), 3), n(8));
        assert_eq!(g_fundamental_dim(LieType::g2(), 1), n(14));
        assert_eq!(g_fundamental_dim(LieType::g2(), 2), n(7));
    }

    // Independent count: the adjoint module (L(ω_2) for B/D, L(ω_1) for G2)
    // has dimension rank + 2·|Δ⁺|.
    #[test]
    fn adjoint_dimension_oracle() {
        let adjoint = |t: LieType| n((t.rank() + 2 * crate::rootsys::positive_roots(t).len()) as u64);
        for l in 3..=7 {
            assert_eq!(g_fundamental_dim(ty(Family::B, l), 2), adjoint(ty(Family::B, l)));
            assert_eq!(g_fundamental_dim(ty(Family::D, l + 1), 2), adjoint(ty(Family::D, l + 1)));
        }
        assert_eq!(g_fundamental_dim(LieType::g2(), 1), adjoint(LieType::g2()));
    }

    #[test]
    fn yangian_dims() {
        assert_eq!(yangian_fundamental_dim(ty(Family::B, 3), 2), n(22));
        assert_eq!(yangian_fundamental_dim(ty(Family::D, 4), 2), n(29));
        assert_eq!(yangian_fundamental_dim(ty(Family::A, 3), 2), n(6));
        assert_eq!(yangian_fundamental_dim(ty(Family::B, 5), 4), n(330 + 55 + 1));
        let table = DecompositionTable::new(LieType::g2());
        assert_eq!(table.provenance, vec![Provenance::External, Provenance::Tabulated]);
        assert_eq!(table.dim(1), n(15));
        let overridden = table.with_row(1, vec![(1, 1)], Provenance::External);
        assert_eq!(overridden.dim(1), n(14));
    }

    #[test]
    fn summand_counts() {
        for l in 3..=8 {
            for f in [Family::B, Family::D] {
                let t = ty(f, l);
                let table = DecompositionTable::new(t);
                let last_split = if f == Family::B { l - 1 } else { l - 2 };
                for i in t.nodes() {
                    let expect = if (2..=last_split).contains(&i) { i / 2 + 1 } else { 1 };
                    assert_eq!(table.rows[i - 1].len(), expect, "{t} node {i}");
                }
            }
        }
        for t in [ty(Family::A, 5), ty(Family::C, 5)] {
            assert!(DecompositionTable::new(t).rows.iter().all(|r| r.len() == 1));
        }
    }

    #[test]
    fn chain_and_module_dims() {
        let a2 = ty(Family::A, 2);
        let pi = DrinfeldTuple::new(a2, vec![vec![Scalar::from_int(1)], vec![Scalar::from_int(0)]]).unwrap();
        assert_eq!(weyl_module_dim(&pi), n(9));
        let g = DrinfeldTuple::new(LieType::g2(), vec![vec![], vec![Scalar::from_int(5)]]).unwrap();
        assert_eq!(weyl_module_dim(&g), n(7));
        let a3 = ty(Family::A, 3);
        let c = FactorChain::new(a3, vec![Factor::new(1, Scalar::zero()), Factor::new(2, Scalar::one())]).unwrap();
        assert_eq!(chain_dim(&c), n(24));
        assert_eq!(chain_dim(&FactorChain::new(a3, vec![]).unwrap()), n(1));
        let b3 = ty(Family::B, 3);
        assert_eq!(chain_dim(&FactorChain::new(b3, vec![Factor::new(2, Scalar::zero())]).unwrap()), n(22));
    }

    proptest! {
        #[test]
        fn chain_dim_matches_module_dim(
            fam in 0usize..5, l in 3usize..=6,
            roots in proptest::collection::vec((1usize..=6, -6i64..=6), 1..=6)
        ) {
            let t = match fam {
                0 => ty(Family::A, l), 1 => ty(Family::B, l), 2 => ty(Family::C, l),
                3 => ty(Family::D, l), _ => LieType::g2(),
            };
            let mut per = vec![Vec::new(); t.rank()];
            for (node, a) in roots {
                per[(node - 1) % t.rank()].push(Scalar::real(rat(a, 2)));
            }
            let pi = DrinfeldTuple::new(t, per).unwrap();
            prop_assert_eq!(chain_dim(&order_factors(&pi).unwrap()), weyl_module_dim(&pi));
        }
    }
}
