use std::sync::Arc;

use super::YDModule;
use crate::error::{Error, Result};
use crate::exact::{CycNumber, Matrix};
use crate::groupdata::{GroupElement, ThreeCocycle};

/// `Φ(x,g,h)·Φ(g,h,x) / Φ(g,x,h)`: the scalar by which `x` acts on a product
/// `v⊗w` of degrees `g`, `h` beyond `(x▷v)⊗(x▷w)`.
pub fn tensor_scalar(c: &ThreeCocycle, x: GroupElement, g: GroupElement, h: GroupElement) -> CycNumber {
    &(c.eval(x, g, h) * c.eval(g, h, x)) * c.eval_inv(g, x, h)
}

/// Scalar of `x` on a left-nested tensor with factor degrees `degrees`.
pub fn tensor_power_scalar(c: &ThreeCocycle, x: GroupElement, degrees: &[GroupElement]) -> CycNumber {
    let g = c.group();
    let mut acc = CycNumber::one(c.order());
    let Some((&first, rest)) = degrees.split_first() else {
        return acc;
    };
    let mut prefix = first;
    for &d in rest {
        acc = &acc * &tensor_scalar(c, x, prefix, d);
        prefix = g.mul(prefix, d);
    }
    acc
}

fn common_cocycle(mods: &[&YDModule]) -> Result<Arc<ThreeCocycle>> {
    let first = mods.first().ok_or_else(|| Error::Invalid("empty module list".into()))?;
    let c = Arc::clone(first.cocycle());
    if mods.iter().any(|m| !Arc::ptr_eq(m.cocycle(), &c)) {
        return Err(Error::Invalid("modules do not share a cocycle".into()));
    }
    Ok(c)
}

/// Action of `x` on `((M₁⊗M₂)⊗…)⊗Mₙ` in the lexicographic basis.
pub fn tensor_action(x: GroupElement, mods: &[&YDModule]) -> Result<Matrix> {
    let c = common_cocycle(mods)?;
    let degrees: Vec<_> = mods.iter().map(|m| m.degree()).collect();
    let mut acc = mods[0].action(x).clone();
    for m in &mods[1..] {
        acc = acc.kron(m.action(x));
    }
    Ok(acc.scale(&tensor_power_scalar(&c, x, &degrees)))
}

/// The left-nested tensor product as a module of degree `Π deg Mᵢ`.
pub fn tensor_product(mods: &[&YDModule]) -> Result<YDModule> {
    let c = common_cocycle(mods)?;
    let group = c.group().clone();
    let action = group.elements().map(|x| tensor_action(x, mods)).collect::<Result<Vec<_>>>()?;
    let degree = group.product(&mods.iter().map(|m| m.degree()).collect::<Vec<_>>());
    let name = mods.iter().map(|m| m.name()).collect::<Vec<_>>().join("⊗");
    YDModule::from_table(name, c, degree, action)
}

/// `c(v⊗w) = (g▷w)⊗v` as a matrix from `V⊗W` to `W⊗V`.
pub fn braiding(v: &YDModule, w: &YDModule) -> Matrix {
    let (dv, dw) = (v.dim(), w.dim());
    let rw = w.action(v.degree());
    let mut out = Matrix::zeros(dw * dv, dv * dw, v.order());
    for a in 0..dv {
        for b in 0..dw {
            for b2 in 0..dw {
                if !rw[(b2, b)].is_zero() {
                    out[(b2 * dv + a, a * dw + b)] = rw[(b2, b)].clone();
                }
            }
        }
    }
    out
}

pub fn inverse_braiding(v: &YDModule, w: &YDModule) -> Result<Matrix> {
    braiding(v, w).inverse()
}

/// The dual module `M*` of degree `g⁻¹`, with the action that makes the
/// evaluation `M*⊗M → k` equivariant: `ρ*(x) = t(x; g⁻¹, g)⁻¹·(ρ(x)⁻¹)ᵀ`.
/// Basis: the dual basis.
pub fn dual(m: &YDModule) -> Result<YDModule> {
    let c = Arc::clone(m.cocycle());
    let group = c.group().clone();
    let g = m.degree();
    let ginv = group.inv(g);
    let mut action = Vec::with_capacity(group.order());
    for x in group.elements() {
        let t = tensor_scalar(&c, x, ginv, g).inverse()?;
        action.push(m.action(x).inverse()?.transpose().scale(&t));
    }
    YDModule::from_table(format!("{}*", m.name()), c, ginv, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ydmod::{iso_test, validate};

    #[test]
    fn braiding_on_one_dim() {
        let m = fixtures::diagonal_module(-1);
        let c = braiding(&m, &m);
        assert_eq!(c, Matrix::from_ints(1, &[vec![-1]]));
    }

    #[test]
    fn braiding_on_m1_is_negated_swap() {
        let ms = fixtures::z2cubed_modules();
        let c = braiding(&ms[0], &ms[0]);
        let mut swap = Matrix::zeros(4, 4, 2);
        for a in 0..2 {
            for b in 0..2 {
                swap[(b * 2 + a, a * 2 + b)] = CycNumber::from_int(2, -1);
            }
        }
        assert_eq!(c, swap);
        let c12 = braiding(&ms[0], &ms[1]);
        let inv = inverse_braiding(&ms[0], &ms[1]).unwrap();
        assert!((&c12 * &inv).is_identity());
    }

    #[test]
    fn tensor_action_basics() {
        let ms = fixtures::z2cubed_modules();
        let c = ms[0].cocycle().clone();
        let g = c.group().clone();
        assert!(tensor_action(g.identity(), &[&ms[0], &ms[1]]).unwrap().is_identity());
        for x in g.elements() {
            assert_eq!(&tensor_action(x, &[&ms[2]]).unwrap(), ms[2].action(x));
        }
        let (h1, h2, h3) = (g.generator(0), g.generator(1), g.generator(2));
        // direct evaluation: Φ(h3,h1,h2)·Φ(h1,h2,h3)/Φ(h1,h3,h2) = 1·1/1
        assert!(tensor_scalar(&c, h3, h1, h2).is_one());
        let expected = ms[0].action(h3).kron(ms[1].action(h3));
        assert_eq!(tensor_action(h3, &[&ms[0], &ms[1]]).unwrap(), expected);
        // with the factors swapped: Φ(h3,h2,h1)·Φ(h2,h1,h3)/Φ(h2,h3,h1) = −1
        let minus = CycNumber::from_int(2, -1);
        assert_eq!(tensor_scalar(&c, h3, h2, h1), minus);
        let expected = ms[1].action(h3).kron(ms[0].action(h3)).scale(&minus);
        assert_eq!(tensor_action(h3, &[&ms[1], &ms[0]]).unwrap(), expected);
    }

    #[test]
    fn braiding_commutes_with_action() {
        let ms = fixtures::z2cubed_modules();
        let g = ms[0].cocycle().group().clone();
        for v in &ms {
            for w in &ms {
                let c = braiding(v, w);
                for x in g.elements() {
                    let lhs = &c * &tensor_action(x, &[v, w]).unwrap();
                    let rhs = &tensor_action(x, &[w, v]).unwrap() * &c;
                    assert_eq!(lhs, rhs, "{} {} at {}", v.name(), w.name(), g.format(x));
                }
            }
        }
    }

    #[test]
    fn tensor_powers_are_modules() {
        let ms = fixtures::z2cubed_modules();
        for m in &ms {
            for n in 2..=3 {
                let slots = vec![m; n];
                let p = tensor_product(&slots).unwrap();
                assert!(validate(&p).passed(), "{}^{n}", m.name());
            }
        }
        let p = tensor_product(&[&ms[0], &ms[0], &ms[0], &ms[0]]).unwrap();
        assert!(validate(&p).passed());
        let p = tensor_product(&[&ms[0], &ms[1], &ms[2], &ms[3]]).unwrap();
        assert!(validate(&p).passed());
    }

    #[test]
    fn duals() {
        let ms = fixtures::z2cubed_modules();
        let g = ms[0].cocycle().group().clone();
        for m in &ms {
            let d = dual(m).unwrap();
            assert!(validate(&d).passed());
            assert_eq!(d.degree(), g.inv(m.degree()));
            assert!(iso_test(&dual(&d).unwrap(), m).unwrap().is_some());
        }
        // over Z2³ every fixture module is self-dual
        let d1 = dual(&ms[0]).unwrap();
        assert_eq!(d1.fingerprint(), ms[0].fingerprint());
        assert!(iso_test(&d1, &ms[0]).unwrap().is_some());
        let t = fixtures::trivial_module();
        let dt = dual(&t).unwrap();
        assert!(iso_test(&dt, &t).unwrap().unwrap().is_identity());
    }

    /// Evaluation `M*⊗M → k` commutes with the action (the defining property
    /// of the dual), checked on the full tensor-product action.
    #[test]
    fn evaluation_is_equivariant() {
        let ms = fixtures::z2cubed_modules();
        let g = ms[0].cocycle().group().clone();
        for m in &ms {
            let d = dual(m).unwrap();
            let n = m.dim();
            let ev = Matrix::from_fn(1, n * n, 2, |_, k| {
                CycNumber::from_int(2, i64::from(k / n == k % n))
            });
            for x in g.elements() {
                let act = tensor_action(x, &[&d, m]).unwrap();
                assert_eq!(&ev * &act, ev);
            }
        }
    }
}
