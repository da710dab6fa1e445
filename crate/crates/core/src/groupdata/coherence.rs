use std::fmt;

use super::{GroupElement, ThreeCocycle};
use crate::error::{Error, Result};
use crate::exact::CycNumber;

/// A full bracketing of `n` tensor factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf,
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(l: BracketTree, r: BracketTree) -> Self {
        BracketTree::Node(Box::new(l), Box::new(r))
    }

    /// `((x₁x₂)x₃)…xₙ`, the bracketing used for all stored tensors.
    pub fn left_comb(n: usize) -> Self {
        assert!(n >= 1, "a bracketing needs at least one leaf");
        (1..n).fold(BracketTree::Leaf, |acc, _| BracketTree::node(acc, BracketTree::Leaf))
    }

    /// `x₁(x₂(…xₙ))`.
    pub fn right_comb(n: usize) -> Self {
        assert!(n >= 1, "a bracketing needs at least one leaf");
        (1..n).fold(BracketTree::Leaf, |acc, _| BracketTree::node(BracketTree::Leaf, acc))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BracketTree::Leaf => 1,
            BracketTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn is_left_comb(&self) -> bool {
        match self {
            BracketTree::Leaf => true,
            BracketTree::Node(l, r) => **r == BracketTree::Leaf && l.is_left_comb(),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf => write!(f, "x"),
            BracketTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// Tree with degrees attached; `deg` of a node is the product of its leaves.
enum Decorated {
    Leaf(GroupElement),
    Node(Box<Decorated>, Box<Decorated>, GroupElement),
}

impl Decorated {
    fn build(tree: &BracketTree, degs: &mut impl Iterator<Item = GroupElement>, c: &ThreeCocycle) -> Self {
        match tree {
            BracketTree::Leaf => Decorated::Leaf(degs.next().expect("leaf count checked")),
            BracketTree::Node(l, r) => {
                let l = Decorated::build(l, degs, c);
                let r = Decorated::build(r, degs, c);
                let d = c.group().mul(l.deg(), r.deg());
                Decorated::Node(Box::new(l), Box::new(r), d)
            }
        }
    }

    fn deg(&self) -> GroupElement {
        match self {
            Decorated::Leaf(g) | Decorated::Node(_, _, g) => *g,
        }
    }

    /// Paths (false = left, true = right) to nodes whose right child is a
    /// node, i.e. where a rotation towards the left comb applies.
    fn sites(&self, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if let Decorated::Node(l, r, _) = self {
            path.push(false);
            l.sites(path, out);
            path.pop();
            path.push(true);
            r.sites(path, out);
            path.pop();
            if matches!(**r, Decorated::Node(..)) {
                out.push(path.clone());
            }
        }
    }

    fn at_mut(&mut self, path: &[bool]) -> &mut Decorated {
        match (path.split_first(), self) {
            (None, node) => node,
            (Some((&right, rest)), Decorated::Node(l, r, _)) => {
                if right { r } else { l }.at_mut(rest)
            }
            (Some(_), Decorated::Leaf(_)) => unreachable!("path leaves the tree"),
        }
    }

    /// `A(BC) → (AB)C` at this node; returns `Φ(|A|,|B|,|C|)`.
    fn rotate(&mut self, c: &ThreeCocycle) -> CycNumber {
        let placeholder = Decorated::Leaf(c.group().identity());
        let Decorated::Node(a, bc, d) = std::mem::replace(self, placeholder) else {
            unreachable!("rotation site is a node")
        };
        let Decorated::Node(b, cc, _) = *bc else { unreachable!("rotation site has a right node") };
        let scalar = c.eval(a.deg(), b.deg(), cc.deg()).clone();
        let ab = c.group().mul(a.deg(), b.deg());
        *self = Decorated::Node(Box::new(Decorated::Node(a, b, ab)), cc, d);
        scalar
    }
}

/// Scalar of the rebracketing isomorphism from `tree` to the left comb, with
/// rotation sites chosen by `choose` (given the number of available sites,
/// returns the one to use). Sites are listed deepest-leftmost first, so
/// always choosing 0 is the canonical path.
pub fn scalar_to_left_comb_with(
    c: &ThreeCocycle,
    degrees: &[GroupElement],
    tree: &BracketTree,
    mut choose: impl FnMut(usize) -> usize,
) -> Result<CycNumber> {
    if tree.leaves() != degrees.len() {
        return Err(Error::TreeMismatch { expected: degrees.len(), found: tree.leaves() });
    }
    let mut t = Decorated::build(tree, &mut degrees.iter().copied(), c);
    let mut acc = CycNumber::one(c.order());
    loop {
        let mut sites = Vec::new();
        t.sites(&mut Vec::new(), &mut sites);
        if sites.is_empty() {
            return Ok(acc);
        }
        sites.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let k = choose(sites.len()).min(sites.len() - 1);
        acc = &acc * &t.at_mut(&sites[k]).rotate(c);
    }
}

/// Scalar by which the canonical rebracketing `from → to` acts on an
/// elementary tensor whose factors have the given degrees.
///
/// Convention: the associator `(x⊗y)⊗z → x⊗(y⊗z)` acts by `Φ(|x|,|y|,|z|)⁻¹`.
pub fn coherence_scalar(
    c: &ThreeCocycle,
    degrees: &[GroupElement],
    from: &BracketTree,
    to: &BracketTree,
) -> Result<CycNumber> {
    if to.leaves() != degrees.len() {
        return Err(Error::TreeMismatch { expected: degrees.len(), found: to.leaves() });
    }
    let s_from = scalar_to_left_comb_with(c, degrees, from, |_| 0)?;
    let s_to = scalar_to_left_comb_with(c, degrees, to, |_| 0)?;
    s_from.checked_div(&s_to)
}

/// Scalar of the tensor-algebra product `V^{⊗p} ⊗ V^{⊗q} → V^{⊗(p+q)}` on
/// left-nested elementary tensors with the given factor degrees: the
/// rebracketing `(L_u)(L_w) → L_{uw}`.
///
/// Equals `Π_k Φ(|u|, w₁⋯w_{k−1}, w_k)`.
pub fn mult_scalar(c: &ThreeCocycle, u: &[GroupElement], w: &[GroupElement]) -> CycNumber {
    let g = c.group();
    let du = g.product(u);
    let mut prefix = g.identity();
    let mut acc = CycNumber::one(c.order());
    for &x in w {
        acc = &acc * c.eval(du, prefix, x);
        prefix = g.mul(prefix, x);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdata::AbelianGroup;

    fn fixture() -> ThreeCocycle {
        let g = AbelianGroup::new(vec![2, 2, 2]).unwrap();
        ThreeCocycle::from_formula(g, "minus_one_pow(k1*j2*i3)").unwrap()
    }

    #[test]
    fn trivial_cases() {
        let c = fixture();
        let g = c.group().clone();
        let degs = [g.generator(0), g.generator(1), g.generator(2), g.generator(0)];
        let t = BracketTree::node(BracketTree::left_comb(2), BracketTree::left_comb(2));
        assert!(coherence_scalar(&c, &degs, &t, &t).unwrap().is_one());
    }

    #[test]
    fn single_associator_move() {
        let c = fixture();
        let g = c.group().clone();
        for a in g.elements() {
            for b in g.elements() {
                for d in g.elements() {
                    let s = coherence_scalar(&c, &[a, b, d], &BracketTree::right_comb(3), &BracketTree::left_comb(3))
                        .unwrap();
                    assert_eq!(&s, c.eval(a, b, d));
                }
            }
        }
        let (h1, h2, h3) = (g.generator(0), g.generator(1), g.generator(2));
        let s = coherence_scalar(&c, &[h3, h2, h1], &BracketTree::right_comb(3), &BracketTree::left_comb(3)).unwrap();
        assert_eq!(s, CycNumber::from_int(2, -1));
    }

    #[test]
    fn leaf_count_mismatch() {
        let c = fixture();
        let e = c.group().identity();
        let r = coherence_scalar(&c, &[e, e], &BracketTree::left_comb(3), &BracketTree::left_comb(3));
        assert_eq!(r, Err(Error::TreeMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn mult_scalar_matches_trees() {
        let c = fixture();
        let g = c.group().clone();
        let elems: Vec<_> = g.elements().collect();
        for p in 1..4 {
            for q in 1..4 {
                let degs: Vec<_> = (0..p + q).map(|k| elems[(k * 5 + p * 3 + q) % 8]).collect();
                let tree = BracketTree::node(BracketTree::left_comb(p), BracketTree::left_comb(q));
                let s = coherence_scalar(&c, &degs, &tree, &BracketTree::left_comb(p + q)).unwrap();
                assert_eq!(s, mult_scalar(&c, &degs[..p], &degs[p..]));
            }
        }
    }

    #[test]
    fn display_and_shapes() {
        assert_eq!(BracketTree::left_comb(3).to_string(), "((xx)x)");
        assert_eq!(BracketTree::right_comb(3).to_string(), "(x(xx))");
        assert!(BracketTree::left_comb(5).is_left_comb());
        assert!(!BracketTree::right_comb(3).is_left_comb());
    }
}
