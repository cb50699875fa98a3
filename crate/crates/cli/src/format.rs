//! JSON input files: algebras, modules and character tables.
//!
//! Every file carries `"version": 1`. Scalars are strings, `"3"` or `"-1/2"`;
//! paths are arrays of arrow names in the order they are traversed.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use auslander::algebra::{build_path_algebra, Alg, FDAlgebra, Origin, PathExpr, Quiver};
use auslander::exactlin::{FieldSpec, Matrix, Scalar};
use auslander::mckay::{CharacterTable, ConjClass, CyclotomicNumber};
use auslander::modrep::{
    dual_regular, injective_module, projective_module, regular_module, simple_module, Module,
};
use auslander::{Error, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

fn default_length_cap() -> usize {
    30
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

/// A nonzero product `b_left * b_right = sum c_k b_k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductSpec {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(usize, String)>,
}

/// Raw structure constants in a split basic presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureSpec {
    pub vertices: Vec<String>,
    pub labels: Vec<String>,
    pub idempotents: Vec<usize>,
    /// `(source, target)` vertex of each basis element.
    pub peirce: Vec<(usize, usize)>,
    pub products: Vec<ProductSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    /// `"Q"` or `"F<p>"`.
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSpec>,
    #[serde(default = "default_length_cap")]
    pub length_cap: usize,
}

/// A module given by one matrix per arrow (generator), `dimv[target] x dimv[source]`, as rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleObject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dimv: Vec<usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
}

/// Either a shorthand (`"P(v)"`, `"I(v)"`, `"S(v)"`, `"A"`, `"DA"`) or an explicit module.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Named(String),
    Explicit(ModuleObject),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleListFile {
    pub version: u32,
    pub modules: Vec<ModuleSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassSpec {
    pub label: String,
    pub size: u64,
    #[serde(default)]
    pub power_maps: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrSpec {
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepresentationSpec {
    pub character: Vec<String>,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub order: u64,
    pub classes: Vec<ClassSpec>,
    pub irreducibles: Vec<IrrSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSpec>,
}

fn check_version(v: u32, what: &str) -> Result<()> {
    if v != FORMAT_VERSION {
        return Err(Error::Input(format!(
            "{what} has version {v}, expected {FORMAT_VERSION}"
        )));
    }
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Input(format!(
            "{}:{}:{}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    if t == "Q" || t == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix('F'))
        .or_else(|| t.strip_prefix("GF"));
    match digits.and_then(|d| d.trim_matches(|c| c == '(' || c == ')').parse::<u64>().ok()) {
        Some(p) => FieldSpec::prime(p),
        None => Err(Error::Input(format!("unknown field {s:?}; use Q or F<p>"))),
    }
}

pub fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "Q".into(),
        FieldSpec::PrimeField(p) => format!("F{p}"),
    }
}

/// `"num/den"`, the serialized form of every scalar written by this crate.
pub fn scalar_string(x: &Scalar) -> String {
    match x.as_rational() {
        Some(q) => format!("{}/{}", q.numer(), q.denom()),
        None => format!("{x}/1"),
    }
}

impl AlgebraFile {
    pub fn build(&self) -> Result<FDAlgebra> {
        check_version(self.version, "algebra file")?;
        let field = parse_field(&self.field)?;
        match (&self.quiver, &self.structure) {
            (Some(q), None) => {
                let vs: Vec<&str> = q.vertices.iter().map(String::as_str).collect();
                let arrows: Vec<(&str, &str, &str)> = q
                    .arrows
                    .iter()
                    .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
                    .collect();
                let quiver = Quiver::new(&vs, &arrows)?;
                let rels = self
                    .relations
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let terms = r
                            .iter()
                            .map(|t| Ok((field.parse(&t.coeff)?, t.path.clone())))
                            .collect::<Result<Vec<_>>>()
                            .map_err(|e| Error::Input(format!("relation {i}: {e}")))?;
                        Ok(PathExpr::new(terms))
                    })
                    .collect::<Result<Vec<_>>>()?;
                build_path_algebra(field, &quiver, &rels, self.length_cap)
            }
            (None, Some(s)) => {
                if !self.relations.is_empty() {
                    return Err(Error::Input(
                        "relations given alongside structure constants".into(),
                    ));
                }
                let d = s.labels.len();
                let mut mult = vec![Vec::new(); d * d];
                for (n, p) in s.products.iter().enumerate() {
                    if p.left >= d || p.right >= d || p.terms.iter().any(|(k, _)| *k >= d) {
                        return Err(Error::Input(format!(
                            "product {n} refers to a basis index >= {d}"
                        )));
                    }
                    let mut terms = p
                        .terms
                        .iter()
                        .map(|(k, c)| Ok((*k, field.parse(c)?)))
                        .collect::<Result<Vec<(usize, Scalar)>>>()?;
                    terms.retain(|(_, c)| !c.is_zero());
                    terms.sort_by_key(|(k, _)| *k);
                    if terms.windows(2).any(|w| w[0].0 == w[1].0) {
                        return Err(Error::Input(format!("product {n} repeats a basis index")));
                    }
                    mult[p.left * d + p.right] = terms;
                }
                FDAlgebra::new(
                    field,
                    s.vertices.clone(),
                    s.labels.clone(),
                    s.idempotents.clone(),
                    s.peirce.clone(),
                    mult,
                    Origin::Endomorphism,
                )
            }
            _ => Err(Error::Input(
                "an algebra file needs exactly one of \"quiver\" and \"structure\"".into(),
            )),
        }
    }

    /// Structure constants of an existing algebra.
    pub fn from_algebra(a: &FDAlgebra, name: Option<String>) -> AlgebraFile {
        let d = a.dim();
        let mut products = Vec::new();
        for left in 0..d {
            for right in 0..d {
                let p = a.mul_basis(left, right);
                if !p.is_empty() {
                    products.push(ProductSpec {
                        left,
                        right,
                        terms: p.iter().map(|(k, c)| (*k, scalar_string(c))).collect(),
                    });
                }
            }
        }
        AlgebraFile {
            version: FORMAT_VERSION,
            name,
            field: field_name(a.field),
            quiver: None,
            relations: Vec::new(),
            structure: Some(StructureSpec {
                vertices: a.vertices.clone(),
                labels: a.labels.clone(),
                idempotents: a.idem.clone(),
                peirce: a.peirce.clone(),
                products,
            }),
            length_cap: default_length_cap(),
        }
    }
}

pub fn load_algebra(path: &Path) -> Result<Alg> {
    let file: AlgebraFile = read_json(path)?;
    file.build().map(Arc::new).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn vertex(a: &FDAlgebra, label: &str) -> Result<usize> {
    a.vertices
        .iter()
        .position(|v| v == label)
        .ok_or_else(|| Error::Input(format!("no vertex {label:?}")))
}

fn generator_index(a: &FDAlgebra, name: &str) -> Result<usize> {
    a.generators()
        .iter()
        .copied()
        .find(|&g| a.labels[g] == name)
        .ok_or_else(|| Error::Input(format!("{name:?} is not an arrow of the algebra")))
}

impl ModuleSpec {
    pub fn build(&self, a: &Alg) -> Result<Module> {
        match self {
            ModuleSpec::Named(s) => {
                let s = s.trim();
                let inner = |p: &str| {
                    s.strip_prefix(p)
                        .and_then(|r| r.strip_prefix('('))
                        .and_then(|r| r.strip_suffix(')'))
                };
                if s == "A" {
                    Ok(regular_module(a))
                } else if s == "DA" {
                    Ok(dual_regular(a))
                } else if let Some(v) = inner("P") {
                    Ok(projective_module(a, vertex(a, v)?))
                } else if let Some(v) = inner("I") {
                    Ok(injective_module(a, vertex(a, v)?))
                } else if let Some(v) = inner("S") {
                    Ok(simple_module(a, vertex(a, v)?))
                } else {
                    Err(Error::Input(format!("unknown module shorthand {s:?}")))
                }
            }
            ModuleSpec::Explicit(m) => {
                if m.dimv.len() != a.n_vertices() {
                    return Err(Error::Input(format!(
                        "dimension vector {:?} has the wrong length",
                        m.dimv
                    )));
                }
                let f = a.field;
                let mut gens = Vec::new();
                for (name, rows) in &m.arrows {
                    let g = generator_index(a, name)?;
                    let (r, c) = (m.dimv[a.target(g)], m.dimv[a.source(g)]);
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(Error::Input(format!("matrix of {name} must be {r} x {c}")));
                    }
                    let data = rows
                        .iter()
                        .flatten()
                        .map(|x| f.parse(x))
                        .collect::<Result<Vec<_>>>()?;
                    gens.push((g, Matrix::from_vec(f, r, c, data)));
                }
                Module::from_generators(a.clone(), m.dimv.clone(), &gens)
            }
        }
    }
}

/// Arrow matrices of a module, in the explicit input format.
pub fn module_object(m: &Module, name: Option<String>) -> ModuleObject {
    let a = &m.alg;
    let arrows = a
        .generators()
        .iter()
        .map(|&g| {
            let b = m.block(g);
            let rows = (0..b.rows)
                .map(|r| b.row(r).iter().map(scalar_string).collect())
                .collect();
            (a.labels[g].clone(), rows)
        })
        .collect();
    ModuleObject {
        name,
        dimv: m.dimv.clone(),
        arrows,
    }
}

pub fn parse_module_arg(s: &str, a: &Alg) -> Result<Module> {
    let spec = if s.trim_start().starts_with('{') {
        ModuleSpec::Explicit(
            serde_json::from_str(s).map_err(|e| Error::Input(format!("module {s:?}: {e}")))?,
        )
    } else if Path::new(s).is_file() {
        ModuleSpec::Explicit(read_json(Path::new(s))?)
    } else {
        ModuleSpec::Named(s.to_string())
    };
    spec.build(a)
}

pub fn load_modules(path: &Path, a: &Alg) -> Result<Vec<Module>> {
    let file: ModuleListFile = read_json(path)?;
    check_version(file.version, "module file")?;
    file.modules
        .iter()
        .enumerate()
        .map(|(i, m)| {
            m.build(a)
                .map_err(|e| Error::Input(format!("module {i}: {e}")))
        })
        .collect()
}

fn cyclotomic_row(values: &[String]) -> Result<Vec<CyclotomicNumber>> {
    values.iter().map(|v| CyclotomicNumber::parse(v)).collect()
}

/// A McKay representation: `chi_V`, `d` and an optional supplied determinant.
pub type Representation = (Vec<CyclotomicNumber>, usize, Option<Vec<CyclotomicNumber>>);

impl TableFile {
    pub fn build(&self) -> Result<(CharacterTable, Option<Representation>)> {
        check_version(self.version, "character table")?;
        let table = CharacterTable {
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ConjClass {
                    label: c.label.clone(),
                    size: c.size,
                    power_maps: c.power_maps.clone(),
                })
                .collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|r| cyclotomic_row(&r.values))
                .collect::<Result<_>>()?,
            labels: self.irreducibles.iter().map(|r| r.label.clone()).collect(),
        };
        table.validate()?;
        let rep = match &self.representation {
            None => None,
            Some(r) => {
                let det = r.determinant.as_deref().map(cyclotomic_row).transpose()?;
                Some((cyclotomic_row(&r.character)?, r.d, det))
            }
        };
        Ok((table, rep))
    }

    pub fn from_table(
        t: &CharacterTable,
        name: Option<String>,
        rep: Option<(&[CyclotomicNumber], usize)>,
    ) -> TableFile {
        TableFile {
            version: FORMAT_VERSION,
            name,
            order: t.order,
            classes: t
                .classes
                .iter()
                .map(|c| ClassSpec {
                    label: c.label.clone(),
                    size: c.size,
                    power_maps: c.power_maps.clone(),
                })
                .collect(),
            irreducibles: t
                .irreducibles
                .iter()
                .zip(&t.labels)
                .map(|(r, l)| IrrSpec {
                    label: l.clone(),
                    values: r.iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
            representation: rep.map(|(chi, d)| RepresentationSpec {
                character: chi.iter().map(|x| x.to_string()).collect(),
                d,
                determinant: None,
            }),
        }
    }
}

pub fn load_table(path: &Path) -> Result<(CharacterTable, Option<Representation>)> {
    read_json::<TableFile>(path)?.build()
}

/// Comma-separated cyclotomic values, as given on the command line.
pub fn parse_character(s: &str) -> Result<Vec<CyclotomicNumber>> {
    s.split(',').map(CyclotomicNumber::parse).collect()
}
