//! σ-chains from the highest to the lowest weight of a fundamental module,
//! the lowering words read off them, and the a-value ledgers recording the
//! spectral parameter seen by each sl2 copy along the way.

use num::Zero;

use crate::exact::{int, rat, Rational, Scalar};
use crate::rootsys::{apply_word_root, longest_word, nu, reflect, Family, LieType, Root, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    /// 1-based position along the chain.
    pub k: usize,
    /// Node `k'` of the reflection applied at this step.
    pub node: usize,
    pub weight_before: Weight,
    pub weight_after: Weight,
    /// Coefficient of `ω_{k'}` in `weight_before`.
    pub r: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaChain {
    pub lie_type: LieType,
    pub node: usize,
    pub steps: Vec<ChainStep>,
}

impl SigmaChain {
    pub fn final_weight(&self) -> Weight {
        self.steps
            .last()
            .map(|s| s.weight_after.clone())
            .unwrap_or_else(|| Weight::fundamental(self.lie_type.rank(), self.node))
    }

    /// Nodes in the order the reflections are applied.
    pub fn nodes(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.node).collect()
    }

    /// Whether `σ_{k-1}⁻¹(α_{k'})` is a positive root at every step,
    /// `σ_{k-1}` being the product of the reflections already applied.
    pub fn is_reduced_path(&self) -> bool {
        let t = self.lie_type;
        let mut applied: Vec<usize> = Vec::new();
        for step in &self.steps {
            // written out, σ⁻¹ is the application-order list itself
            let img = apply_word_root(t, &applied, &Root::simple(t.rank(), step.node));
            if !img.is_positive() {
                return false;
            }
            applied.push(step.node);
        }
        true
    }
}

/// Reflections in application order that carry `ω_i` to `−ω_{ν(i)}`.
fn application_order(t: LieType, i: usize) -> Vec<usize> {
    let l = t.rank();
    match t.family() {
        // (s_{l+1-b} … s_1)(s_{l+2-b} … s_2) … (s_l … s_b): apply s_b … s_l, then s_{b-1} … s_{l-1}, …
        Family::A => (0..i).flat_map(|r| (0..=l - i).map(move |s| i - r + s)).collect(),
        _ => longest_word(t).into_iter().rev().collect(),
    }
}

/// σ-chain for node `i`; steps fixing the current weight are dropped.
pub fn sigma_chain(t: LieType, i: usize) -> SigmaChain {
    t.check_node(i).expect("sigma_chain: node out of range");
    let mut w = Weight::fundamental(t.rank(), i);
    let mut steps = Vec::new();
    for node in application_order(t, i) {
        let r = w.coeff(node);
        if r == 0 {
            continue;
        }
        let after = reflect(t, &w, node).unwrap();
        steps.push(ChainStep { k: steps.len() + 1, node, weight_before: w, weight_after: after.clone(), r });
        w = after;
    }
    SigmaChain { lie_type: t, node: i, steps }
}

/// `(node, exponent)` pairs as written: the last pair is applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoweringWord(pub Vec<(usize, i64)>);

impl LoweringWord {
    /// `Σ exponent · α_node` in fundamental-weight coordinates.
    pub fn weight_drop(&self, t: LieType) -> Weight {
        let mut acc = vec![0i64; t.rank()];
        for &(node, e) in &self.0 {
            for (a, c) in acc.iter_mut().zip(&crate::rootsys::simple_root_weight(t, node).0) {
                *a += e * c;
            }
        }
        Weight(acc)
    }

    pub fn display(&self) -> String {
        self.0
            .iter()
            .map(|&(n, e)| if e == 1 { format!("x{n}⁻") } else { format!("(x{n}⁻)^{e}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn lowering_word(t: LieType, i: usize) -> LoweringWord {
    let chain = sigma_chain(t, i);
    LoweringWord(chain.steps.iter().rev().map(|s| (s.node, s.r)).collect())
}

/// One ledger record: the sl2 copy at `node` sees parameters `a₁ + offset`
/// for each offset, before division by `divisor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub node: usize,
    pub offsets: Vec<Rational>,
    pub divisor: i64,
}

impl LedgerEntry {
    pub fn evaluate(&self, a1: &Scalar) -> Vec<Scalar> {
        self.offsets.iter().map(|o| a1 + &Scalar::real(o.clone())).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ledger {
    pub lie_type: LieType,
    pub node: usize,
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    /// Entries aimed at a given node, in chain order.
    pub fn at_node(&self, node: usize) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(move |e| e.node == node)
    }
}

struct Builder {
    entries: Vec<LedgerEntry>,
}

impl Builder {
    fn push(&mut self, node: usize, offsets: Vec<Rational>, divisor: i64) {
        self.entries.push(LedgerEntry { node, offsets, divisor });
    }
}

fn half(n: i64) -> Rational {
    rat(n, 2)
}

/// Ledger of parameter values for the factor `V_{a₁}(ω_b)`.
pub fn ledger(t: LieType, b: usize) -> Ledger {
    t.check_node(b).expect("ledger: node out of range");
    let l = t.rank() as i64;
    let bb = b as i64;
    let mut out = Builder { entries: Vec::new() };
    let n = |j: i64| j as usize;
    match t.family() {
        Family::A => {
            for r in 0..bb {
                for s in 0..=l - bb {
                    out.push(n(bb - r + s), vec![half(r + s)], 1);
                }
            }
        }
        Family::D if bb <= l - 2 => {
            for p in 1..=bb {
                let sh = int(p - 1);
                for j in bb..=l - 2 {
                    out.push(n(j), vec![&sh + half(j - bb)], 1);
                }
                out.push(n(l - 1), vec![&sh + half(l - 1 - bb)], 1);
                out.push(n(l), vec![&sh + half(l - 1 - bb)], 1);
                for j in (bb..=l - 2).rev() {
                    out.push(n(j), vec![&sh + half(2 * l - 2 - bb - j)], 1);
                }
                for j in (p..bb).rev() {
                    let e = bb - 1 - j;
                    out.push(n(j), vec![&sh + half(2 * l - 2 * bb - 1 + e), &sh + half(1 + e)], 1);
                }
            }
        }
        Family::D => {
            // spin nodes: parentheses start alternately at the two spin nodes
            let (odd_start, even_start) = if bb == l - 1 { (l - 1, l) } else { (l, l - 1) };
            for p in 1..=l - 1 {
                let sh = int(p - 1);
                out.push(n(if p % 2 == 1 { odd_start } else { even_start }), vec![sh.clone()], 1);
                for j in (p..=l - 2).rev() {
                    out.push(n(j), vec![&sh + half(l - 1 - j)], 1);
                }
            }
        }
        Family::C if bb < l => {
            for p in 1..=bb {
                let sh = int(p - 1);
                for j in bb..=l - 1 {
                    out.push(n(j), vec![&sh + half(j - bb)], 1);
                }
                out.push(n(l), vec![&sh + half(l - bb + 1)], 2);
                for j in (bb..=l - 1).rev() {
                    out.push(n(j), vec![&sh + half(2 * l - bb + 2 - j)], 1);
                }
                for j in (p..bb).rev() {
                    let e = bb - 1 - j;
                    out.push(n(j), vec![&sh + half(2 * l - 2 * bb + 3 + e), &sh + half(1 + e)], 1);
                }
            }
        }
        Family::C => {
            for p in 1..=l {
                let sh = int(p - 1);
                out.push(n(l), vec![sh.clone()], 2);
                for j in (p..l).rev() {
                    let e = l - 1 - j;
                    out.push(n(j), vec![&sh + int(1) + half(e), &sh + half(e)], 1);
                }
            }
        }
        Family::B if bb < l => {
            for p in 1..=bb {
                let sh = int(2 * (p - 1));
                for j in bb..=l - 1 {
                    out.push(n(j), vec![&sh + int(j - bb)], 2);
                }
                out.push(n(l), vec![&sh + int(l - bb), &sh + int(l - bb - 1)], 1);
                for j in (bb..=l - 1).rev() {
                    out.push(n(j), vec![&sh + int(2 * l - 1 - bb - j)], 2);
                }
                for j in (p..bb).rev() {
                    let e = bb - 1 - j;
                    out.push(n(j), vec![&sh + int(2 * l - 2 * bb + e), &sh + int(1 + e)], 2);
                }
            }
        }
        Family::B => {
            for p in 1..=l {
                let sh = int(2 * (p - 1));
                out.push(n(l), vec![sh.clone()], 1);
                for j in (p..l).rev() {
                    out.push(n(j), vec![&sh + int(l - j)], 2);
                }
            }
        }
        Family::G2 => {
            let h = |k: i64| half(k);
            if b == 1 {
                out.push(1, vec![Rational::zero()], 3);
                out.push(2, vec![h(3), h(1), h(-1)], 1);
                out.push(1, vec![int(2), int(1)], 3);
                out.push(2, vec![h(7), h(5), h(3)], 1);
                out.push(1, vec![int(3)], 3);
            } else {
                out.push(2, vec![Rational::zero()], 1);
                out.push(1, vec![h(3)], 3);
                out.push(2, vec![int(3), int(2)], 1);
                out.push(1, vec![h(7)], 3);
                out.push(2, vec![int(5)], 1);
            }
        }
    }
    Ledger { lie_type: t, node: b, entries: out.entries }
}

/// Whether the chain ends at `−ω_{ν(i)}`.
pub fn ends_at_lowest(chain: &SigmaChain) -> bool {
    let t = chain.lie_type;
    chain.final_weight() == Weight::fundamental(t.rank(), nu(t, chain.node)).neg()
}
