use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::Deserialize;

use crate::cartangraph::CartanGraph;
use crate::error::{Error, Result};
use crate::exact::{CycLiteral, Matrix};
use crate::groupdata::{AbelianGroup, GroupElement, ThreeCocycle};
use crate::nichols::NicholsCaps;
use crate::reflect::CartanMatrix;
use crate::titscone::Grid;
use crate::ydmod::{ModuleTuple, YDModule};

/// A matrix entry or cocycle value: an integer or a cyclotomic literal such
/// as `"z(4,1)"` or `"1/2 - z(3,2)"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn parse(&self, at: &str) -> Result<CycLiteral> {
        let text = match self {
            Literal::Int(n) => n.to_string(),
            Literal::Text(s) => s.clone(),
        };
        CycLiteral::parse(&text).map_err(|e| Error::Parse(format!("{at}: {e}")))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    group: Option<RawGroup>,
    cocycle: Option<RawCocycle>,
    #[serde(default, rename = "module")]
    modules: Vec<RawModule>,
    tuple: Option<RawTuple>,
    #[serde(rename = "abstract")]
    abstract_graph: Option<RawAbstract>,
    #[serde(default)]
    caps: Caps,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    factors: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCocycle {
    formula: Option<String>,
    table: Option<Vec<RawTableEntry>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTableEntry {
    args: [Vec<i64>; 3],
    value: Literal,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    name: String,
    degree: Vec<i64>,
    dim: Option<usize>,
    generators: Vec<Vec<Vec<Literal>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTuple {
    modules: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAbstract {
    cartan: Option<Vec<Vec<i64>>>,
    #[serde(rename = "object")]
    objects: Option<Vec<RawObject>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObject {
    name: String,
    cartan: Vec<Vec<i64>>,
    /// `r[i]` names the object reached by the `i`-th reflection.
    r: Vec<String>,
}

/// Resource limits and default bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, serde::Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub max_ad_cap: usize,
    pub max_matrix_dim: usize,
    pub word_bound: usize,
    pub max_objects: usize,
    pub max_degree: usize,
    pub grid_side: i64,
    pub grid_denominator: i64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ad_cap: 8,
            max_matrix_dim: 4096,
            word_bound: 12,
            max_objects: 256,
            max_degree: 4,
            grid_side: 2,
            grid_denominator: 7,
        }
    }
}

impl Caps {
    pub fn nichols(&self) -> NicholsCaps {
        NicholsCaps { max_ad_cap: self.max_ad_cap, max_matrix_dim: self.max_matrix_dim }
    }

    pub fn grid(&self) -> Grid {
        Grid { side: self.grid_side, denominator: self.grid_denominator }
    }

    fn check(&self) -> Result<()> {
        let fields = [
            ("max_ad_cap", self.max_ad_cap as i64),
            ("max_matrix_dim", self.max_matrix_dim as i64),
            ("word_bound", self.word_bound as i64),
            ("max_objects", self.max_objects as i64),
            ("max_degree", self.max_degree as i64),
            ("grid_side", self.grid_side),
            ("grid_denominator", self.grid_denominator),
        ];
        match fields.iter().find(|(_, v)| *v <= 0) {
            Some((name, _)) => Err(Error::Parse(format!("caps.{name}: must be positive"))),
            None => Ok(()),
        }
    }
}

/// Group, cocycle and modules of an algebra-backed config. All modules share
/// one cocycle instance.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub cocycle: Arc<ThreeCocycle>,
    /// Declared modules in file order.
    pub modules: Vec<Arc<YDModule>>,
    /// Indices into `modules` of the tuple entries.
    pub tuple: Vec<usize>,
}

impl AlgebraData {
    pub fn group(&self) -> &AbelianGroup {
        self.cocycle.group()
    }

    pub fn module(&self, name: &str) -> Option<&Arc<YDModule>> {
        self.modules.iter().find(|m| m.name() == name)
    }

    /// The tuple; fails if an entry is not simple.
    pub fn tuple(&self) -> Result<ModuleTuple> {
        ModuleTuple::from_shared(self.tuple.iter().map(|&k| Arc::clone(&self.modules[k])).collect())
    }
}

#[derive(Debug, Clone)]
pub enum ConfigBody {
    Algebra(AlgebraData),
    /// A Cartan graph given directly, with no algebra behind it.
    Abstract(CartanGraph),
}

#[derive(Debug, Clone)]
pub struct Config {
    pub body: ConfigBody,
    pub caps: Caps,
}

impl Config {
    /// Parses and builds a config. Every failure is [`Error::Parse`] naming
    /// the offending line or field.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Parse(e.to_string().trim_end().to_string()))?;
        raw.caps.check()?;
        let body = match (&raw.abstract_graph, &raw.group) {
            (Some(_), Some(_)) => return Err(Error::Parse("[abstract] cannot be combined with [group]".into())),
            (Some(a), None) => {
                if raw.cocycle.is_some() || !raw.modules.is_empty() || raw.tuple.is_some() {
                    return Err(Error::Parse("[abstract] cannot be combined with cocycle, module or tuple sections".into()));
                }
                ConfigBody::Abstract(build_abstract(a)?)
            }
            (None, Some(_)) => ConfigBody::Algebra(build_algebra(&raw)?),
            (None, None) => return Err(Error::Parse("missing [group] or [abstract] section".into())),
        };
        Ok(Config { body, caps: raw.caps })
    }

    pub fn algebra(&self) -> Option<&AlgebraData> {
        match &self.body {
            ConfigBody::Algebra(a) => Some(a),
            ConfigBody::Abstract(_) => None,
        }
    }
}

fn parse_err(at: &str, e: Error) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{at}: {msg}")),
        other => Error::Parse(format!("{at}: {other}")),
    }
}

fn element(group: &AbelianGroup, exps: &[i64], at: &str) -> Result<GroupElement> {
    if exps.len() != group.rank() {
        return Err(Error::Parse(format!("{at}: expected {} exponents, got {}", group.rank(), exps.len())));
    }
    group.checked_element(exps).map_err(|e| parse_err(at, e))
}

fn build_algebra(raw: &RawConfig) -> Result<AlgebraData> {
    let factors = raw.group.as_ref().map(|g| g.factors.clone()).unwrap_or_default();
    let group = AbelianGroup::new(factors).map_err(|e| parse_err("group.factors", e))?;

    let mut order = 1u32;
    let mut table = Vec::new();
    if let Some(RawCocycle { table: Some(entries), .. }) = &raw.cocycle {
        for (k, entry) in entries.iter().enumerate() {
            let at = format!("cocycle.table[{k}]");
            let mut args = [group.identity(); 3];
            for (slot, exps) in args.iter_mut().zip(&entry.args) {
                *slot = element(&group, exps, &format!("{at}.args"))?;
            }
            let lit = entry.value.parse(&format!("{at}.value"))?;
            order = order.lcm(&lit.order());
            table.push((args, lit));
        }
    }
    let mut generators = Vec::new();
    for (k, m) in raw.modules.iter().enumerate() {
        let at = format!("module[{k}] ({})", m.name);
        if m.generators.len() != group.rank() {
            return Err(Error::Parse(format!(
                "{at}.generators: expected {} matrices, got {}",
                group.rank(),
                m.generators.len()
            )));
        }
        let mut mats = Vec::new();
        for (l, rows) in m.generators.iter().enumerate() {
            let dim = m.dim.unwrap_or(rows.len());
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(Error::Parse(format!("{at}.generators[{l}]: expected a {dim}x{dim} matrix")));
            }
            let mut lits = Vec::new();
            for (r, row) in rows.iter().enumerate() {
                let parsed = row
                    .iter()
                    .enumerate()
                    .map(|(c, x)| x.parse(&format!("{at}.generators[{l}][{r}][{c}]")))
                    .collect::<Result<Vec<_>>>()?;
                for lit in &parsed {
                    order = order.lcm(&lit.order());
                }
                lits.push(parsed);
            }
            mats.push(lits);
        }
        generators.push(mats);
    }

    let cocycle = match &raw.cocycle {
        None => ThreeCocycle::trivial(group.clone()),
        Some(RawCocycle { formula: Some(_), table: Some(_) }) => {
            return Err(Error::Parse("cocycle: give either formula or table, not both".into()))
        }
        Some(RawCocycle { formula: Some(f), table: None }) => {
            ThreeCocycle::from_formula(group.clone(), f).map_err(|e| parse_err("cocycle.formula", e))?
        }
        Some(RawCocycle { formula: None, table: Some(_) }) => {
            let entries = table
                .iter()
                .map(|([a, b, c], lit)| Ok(((*a, *b, *c), lit.to_number(order)?)))
                .collect::<Result<Vec<_>>>()?;
            ThreeCocycle::from_table(group.clone(), &entries).map_err(|e| parse_err("cocycle.table", e))?
        }
        Some(RawCocycle { formula: None, table: None }) => {
            return Err(Error::Parse("cocycle: expected formula or table".into()))
        }
    };
    let order = order.lcm(&cocycle.order());
    let cocycle = Arc::new(if cocycle.order() == order { cocycle } else { cocycle.embed(order) });

    let mut names: BTreeMap<&str, usize> = BTreeMap::new();
    let mut modules = Vec::new();
    for (k, (m, mats)) in raw.modules.iter().zip(generators).enumerate() {
        let at = format!("module[{k}] ({})", m.name);
        if names.insert(&m.name, k).is_some() {
            return Err(Error::Parse(format!("{at}.name: duplicate module name")));
        }
        let degree = element(&group, &m.degree, &format!("{at}.degree"))?;
        let mats = mats
            .into_iter()
            .map(|rows| {
                let rows = rows.iter().map(|r| r.iter().map(|x| x.to_number(order)).collect()).collect::<Result<_>>()?;
                Matrix::from_rows(order, rows)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(&format!("{at}.generators"), e))?;
        let module = YDModule::from_generators(m.name.clone(), Arc::clone(&cocycle), degree, mats)
            .map_err(|e| parse_err(&at, e))?;
        modules.push(Arc::new(module));
    }

    let tuple = match &raw.tuple {
        Some(t) => t
            .modules
            .iter()
            .enumerate()
            .map(|(k, name)| {
                names
                    .get(name.as_str())
                    .copied()
                    .ok_or_else(|| Error::Parse(format!("tuple.modules[{k}]: unknown module {name:?}")))
            })
            .collect::<Result<Vec<_>>>()?,
        None => (0..modules.len()).collect(),
    };
    if tuple.is_empty() {
        return Err(Error::Parse("tuple.modules: the tuple is empty".into()));
    }
    Ok(AlgebraData { cocycle, modules, tuple })
}

fn cartan(rows: &[Vec<i64>], at: &str) -> Result<CartanMatrix> {
    CartanMatrix::new(rows.to_vec()).map_err(|e| parse_err(at, e))
}

fn build_abstract(a: &RawAbstract) -> Result<CartanGraph> {
    match (&a.cartan, &a.objects) {
        (Some(rows), None) => Ok(CartanGraph::single("X", cartan(rows, "abstract.cartan")?)),
        (None, Some(objects)) if !objects.is_empty() => {
            let index: BTreeMap<&str, usize> = objects.iter().enumerate().map(|(k, o)| (o.name.as_str(), k)).collect();
            if index.len() != objects.len() {
                return Err(Error::Parse("abstract.object: duplicate object name".into()));
            }
            let mut matrices = Vec::new();
            let mut r = Vec::new();
            for (k, o) in objects.iter().enumerate() {
                matrices.push(cartan(&o.cartan, &format!("abstract.object[{k}].cartan"))?);
                let row = o
                    .r
                    .iter()
                    .map(|t| {
                        index
                            .get(t.as_str())
                            .copied()
                            .ok_or_else(|| Error::Parse(format!("abstract.object[{k}].r: unknown object {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                r.push(row);
            }
            let labels = objects.iter().map(|o| o.name.clone()).collect();
            CartanGraph::from_parts(labels, matrices, r).map_err(|e| parse_err("abstract.object", e))
        }
        _ => Err(Error::Parse("abstract: give either cartan or a non-empty object list".into())),
    }
}
