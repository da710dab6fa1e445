use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::nichols::{ad_levels, NicholsCaps, TensorAlgebra};
use crate::ydmod::{dual, iso_test, ModuleTuple, YDModule};

/// The top nonzero adjoint iterate `ad(M_i)^m(M_j)` as a module, together
/// with `m`.
///
/// The basis is the symmetrizer image of the iterate representatives inside
/// the component of multidegree `(m, 1)` of `T(M_i ⊕ M_j)`, and the action is
/// the restriction of the tensor action there. Cap hits come back as
/// [`Error::CapExceeded`] with `(i, j) = (0, 1)`.
pub fn top_iterate(mi: &YDModule, mj: &YDModule, caps: NicholsCaps) -> Result<(YDModule, usize)> {
    let alg = TensorAlgebra::new(vec![Arc::new(mi.clone()), Arc::new(mj.clone())], caps)?;
    let (levels, m) = ad_levels(&alg, 0, 1)?;
    let top = &levels[m];
    let c = Arc::clone(mi.cocycle());
    let group = c.group().clone();
    let degree = group.mul(group.pow(mi.degree(), m as i64), mj.degree());
    let basis = top.image_matrix(&alg);
    let name = format!("ad({})^{m}({})", mi.name(), mj.name());
    let module = YDModule::restrict(name, c, degree, &basis, |x| alg.action_matrix(&top.component, x))?;
    Ok((module, m))
}

/// A reflected tuple with the exponents `m_ij` used to build it
/// (`exponents[i] = 0`).
#[derive(Debug, Clone)]
pub struct Reflection {
    pub tuple: ModuleTuple,
    pub index: usize,
    pub exponents: Vec<usize>,
}

/// `R_i(t)`: slot `i` becomes `M_i*`, slot `j ≠ i` becomes
/// `ad(M_i)^{m_ij}(M_j)`. Fails with [`Error::ReflectionUndefined`] if some
/// `m_ij` is not reached within the cap.
pub fn reflect(t: &ModuleTuple, i: usize, caps: NicholsCaps) -> Result<Reflection> {
    let n = t.rank();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, range: format!("0..{n}") });
    }
    let mi = t.get(i);
    let mut entries = Vec::with_capacity(n);
    let mut exponents = vec![0; n];
    for j in 0..n {
        if j == i {
            entries.push(Arc::new(dual(mi)?));
            continue;
        }
        let (v, m) = top_iterate(mi, t.get(j), caps).map_err(|e| match e {
            Error::CapExceeded { cap, .. } => Error::ReflectionUndefined { sequence: vec![i], i, j, cap },
            other => other,
        })?;
        exponents[j] = m;
        entries.push(Arc::new(v));
    }
    Ok(Reflection { tuple: ModuleTuple::from_shared(entries)?, index: i, exponents })
}

/// Outcome of reflecting slot `j` back: `ad(M_i*)^{m'}(V_j)` inside
/// `B(R_i(M))`, compared with the original `M_j`.
#[derive(Debug, Clone)]
pub struct RoundTrip {
    pub forward: usize,
    pub backward: usize,
    pub intertwiner: Option<Matrix>,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.forward == self.backward && self.intertwiner.is_some()
    }
}

pub fn round_trip(t: &ModuleTuple, i: usize, j: usize, caps: NicholsCaps) -> Result<RoundTrip> {
    if i == j {
        return Err(Error::Invalid("round trip needs i ≠ j".into()));
    }
    let r = reflect(t, i, caps)?;
    let (back, m) = top_iterate(r.tuple.get(i), r.tuple.get(j), caps)?;
    Ok(RoundTrip { forward: r.exponents[j], backward: m, intertwiner: iso_test(&back, t.get(j))? })
}
