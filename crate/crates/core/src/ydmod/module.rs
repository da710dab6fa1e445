use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{solve_intertwiner, CycNumber, Matrix};
use crate::groupdata::{derive_two_cocycle, GroupElement, ThreeCocycle, TwoCocycle};

/// A homogeneous Yetter–Drinfeld module `^gV` over `(kG, Φ)`: a degree `g`
/// and a projective action `ρ` of `G` with `ρ(h)ρ(l) = Φ̃_g(h,l)·ρ(hl)`.
///
/// The action is stored for every group element. All matrices live in the
/// field of the cocycle, so modules sharing a cocycle share a field.
#[derive(Clone)]
pub struct YDModule {
    name: String,
    cocycle: Arc<ThreeCocycle>,
    degree: GroupElement,
    dim: usize,
    action: Vec<Matrix>,
}

impl YDModule {
    /// Extends generator matrices `A_l = ρ(h_l)` to all of `G` by
    /// `ρ(h_l·x') = Φ̃_g(h_l, x')⁻¹·A_l·ρ(x')`, peeling off the first nonzero
    /// exponent. The result satisfies the module axioms only if the
    /// generators obey the projective relations; see [`validate`].
    pub fn from_generators(
        name: impl Into<String>,
        cocycle: Arc<ThreeCocycle>,
        degree: GroupElement,
        generators: Vec<Matrix>,
    ) -> Result<Self> {
        let group = cocycle.group().clone();
        if generators.len() != group.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} generator matrices for a group of rank {}",
                generators.len(),
                group.rank()
            )));
        }
        let dim = check_shapes(&generators)?;
        let order = cocycle.order();
        let generators = embed_all(generators, order)?;
        let tw = derive_two_cocycle(&cocycle, degree);
        let mut action: Vec<Matrix> = Vec::with_capacity(group.order());
        for x in group.elements() {
            let ex = group.exponents(x);
            let Some(l) = ex.iter().position(|&e| e != 0) else {
                action.push(Matrix::identity(dim, order));
                continue;
            };
            let h = group.generator(l);
            let rest = group.mul(x, group.inv(h));
            let s = tw.eval(h, rest).inverse()?;
            action.push((&generators[l] * &action[rest.index()]).scale(&s));
        }
        Ok(YDModule { name: name.into(), cocycle, degree, dim, action })
    }

    /// Takes the action of every group element verbatim (indexed by
    /// [`GroupElement::index`]).
    pub fn from_table(
        name: impl Into<String>,
        cocycle: Arc<ThreeCocycle>,
        degree: GroupElement,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        if action.len() != cocycle.group().order() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                cocycle.group().order()
            )));
        }
        let dim = check_shapes(&action)?;
        let action = embed_all(action, cocycle.order())?;
        Ok(YDModule { name: name.into(), cocycle, degree, dim, action })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn cocycle(&self) -> &Arc<ThreeCocycle> {
        &self.cocycle
    }

    pub fn degree(&self) -> GroupElement {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.cocycle.order()
    }

    /// `ρ(x)`.
    pub fn action(&self, x: GroupElement) -> &Matrix {
        &self.action[x.index()]
    }

    pub fn action_table(&self) -> &[Matrix] {
        &self.action
    }

    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.cocycle.group().generators().into_iter().map(|h| self.action(h).clone()).collect()
    }

    pub fn two_cocycle(&self) -> TwoCocycle {
        derive_two_cocycle(&self.cocycle, self.degree)
    }

    /// The module with basis changed by `p`: `ρ'(x) = p⁻¹ρ(x)p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        let pinv = p.inverse()?;
        let action = self.action.iter().map(|a| &(&pinv * a) * p).collect();
        Ok(YDModule { action, ..self.clone() })
    }

    /// The module obtained by restricting the action to the span of the
    /// columns of `basis`, which must be an invariant subspace. The new
    /// action matrices are coordinates with respect to those columns.
    pub fn restrict(
        name: impl Into<String>,
        cocycle: Arc<ThreeCocycle>,
        degree: GroupElement,
        basis: &Matrix,
        ambient_action: impl Fn(GroupElement) -> Matrix,
    ) -> Result<Self> {
        let group = cocycle.group().clone();
        let mut action = Vec::with_capacity(group.order());
        for x in group.elements() {
            let image = &ambient_action(x) * basis;
            let coords = basis
                .solve(&image)?
                .ok_or_else(|| Error::Invalid(format!("subspace is not stable under {}", group.format(x))))?;
            action.push(coords);
        }
        YDModule::from_table(name, cocycle, degree, action)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            degree: self.degree,
            dim: self.dim,
            character: self.action.iter().map(Matrix::trace).collect(),
        }
    }

    /// Dimension of the commutant of the action; 1 means absolutely simple.
    pub fn commutant_dim(&self) -> usize {
        let gens = self.generator_matrices();
        let d = self.dim;
        let mut sys = Matrix::zeros(gens.len() * d * d, d * d, self.order());
        for (k, a) in gens.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    let row = (k * d + r) * d + c;
                    for s in 0..d {
                        sys[(row, r * d + s)] = &sys[(row, r * d + s)] + &a[(s, c)];
                        sys[(row, s * d + c)] = &sys[(row, s * d + c)] - &a[(r, s)];
                    }
                }
            }
        }
        sys.rank_kernel().kernel.len()
    }

    pub fn is_simple(&self) -> bool {
        self.commutant_dim() == 1
    }
}

fn check_shapes(ms: &[Matrix]) -> Result<usize> {
    let dim = ms.first().map(Matrix::rows).ok_or_else(|| Error::Invalid("no action matrices".into()))?;
    if dim == 0 {
        return Err(Error::Invalid("modules must have positive dimension".into()));
    }
    if ms.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::DimensionMismatch(format!("action matrices must all be {dim}x{dim}")));
    }
    Ok(dim)
}

fn embed_all(ms: Vec<Matrix>, order: u32) -> Result<Vec<Matrix>> {
    ms.into_iter()
        .map(|m| {
            if !order.is_multiple_of(m.order()) {
                Err(Error::Invalid(format!(
                    "action entries need Q(ζ_{}) but the cocycle lives in Q(ζ_{order})",
                    m.order()
                )))
            } else {
                Ok(m.embed(order))
            }
        })
        .collect()
}

impl fmt::Debug for YDModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.cocycle.group();
        f.debug_struct("YDModule")
            .field("name", &self.name)
            .field("degree", &g.format(self.degree))
            .field("dim", &self.dim)
            .field("generators", &self.generator_matrices())
            .finish()
    }
}

/// Cheap isomorphism invariant: degree, dimension and the trace of every
/// group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub degree: GroupElement,
    pub dim: usize,
    pub character: Vec<CycNumber>,
}

/// One failed module axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleViolation {
    IdentityNotTrivial,
    Singular(GroupElement),
    ProjectiveRule(GroupElement, GroupElement),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub module: String,
    pub violations: Vec<ModuleViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `ρ(e) = id`, invertibility, and `ρ(h)ρ(l) = Φ̃_g(h,l)ρ(hl)` for
/// every pair.
pub fn validate(m: &YDModule) -> ValidationReport {
    let g = m.cocycle.group();
    let mut violations = Vec::new();
    if !m.action(g.identity()).is_identity() {
        violations.push(ModuleViolation::IdentityNotTrivial);
    }
    for x in g.elements() {
        if m.action(x).det().map_or(true, |d| d.is_zero()) {
            violations.push(ModuleViolation::Singular(x));
        }
    }
    let tw = m.two_cocycle();
    for h in g.elements() {
        for l in g.elements() {
            let lhs = m.action(h) * m.action(l);
            let rhs = m.action(g.mul(h, l)).scale(tw.eval(h, l));
            if lhs != rhs {
                violations.push(ModuleViolation::ProjectiveRule(h, l));
            }
        }
    }
    ValidationReport { module: m.name.clone(), violations }
}

/// An invertible `T` with `T·ρ_a(x) = ρ_b(x)·T`, if the modules are
/// isomorphic. Fingerprints are compared first as a filter.
pub fn iso_test(a: &YDModule, b: &YDModule) -> Result<Option<Matrix>> {
    if a.degree != b.degree || a.dim != b.dim || a.fingerprint() != b.fingerprint() {
        return Ok(None);
    }
    solve_intertwiner(&a.generator_matrices(), &b.generator_matrices())
}
