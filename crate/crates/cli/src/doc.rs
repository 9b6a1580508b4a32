//! JSON input documents and their conversion to core values.

use std::fmt;
use std::str::FromStr;

use codimlab_core::alt::RepresentationInstance;
use codimlab_core::fixtures::Fixture;
use codimlab_core::lie::LieAlgebra;
use codimlab_core::linalg::{Matrix, Vector};
use codimlab_core::scalar::{Field, FieldSpec, Rational, Scalar};
use codimlab_core::structure::Annotations;
use codimlab_core::symmetry::{self, FiniteGroup, GroupAction, Grading, SymmetryDatum, SymmetryKind};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// A rational written `"p/q"`, or a coefficient array in the powers of `ζ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Text(String),
    Coeffs(Vec<RationalDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Text(String),
}

pub type MatrixDoc = Vec<Vec<ScalarDoc>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rationals,
    Cyclotomic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub kind: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<ScalarDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelian_orders: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub matrices: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelDoc {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingDoc {
    pub labels: Vec<LabelDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotationsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi_basis: Option<Vec<Vec<ScalarDoc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical_basis: Option<Vec<Vec<ScalarDoc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_basis: Option<Vec<usize>>,
}

impl AnnotationsDoc {
    pub fn is_empty(&self) -> bool {
        self.levi_basis.is_none() && self.nilradical_basis.is_none() && self.orbit_basis.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub field: FieldDoc,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingDoc>,
    #[serde(default, skip_serializing_if = "AnnotationsDoc::is_empty")]
    pub annotations: AnnotationsDoc,
}

/// A Lie algebra with group action and a module; the algebra's `action`
/// gives the group on `L_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub algebra: AlgebraDocument,
    pub module: Vec<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_group: Option<Vec<MatrixDoc>>,
}

/// An associative G-polynomial and its alternating variable sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDocument {
    pub polynomial: String,
    #[serde(default)]
    pub sets: Vec<Vec<usize>>,
}

/// Invalid input, located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pointer.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "at {}: {}", self.pointer, self.message)
        }
    }
}

impl std::error::Error for DocError {}

fn err(pointer: impl Into<String>, message: impl fmt::Display) -> DocError {
    DocError {
        pointer: pointer.into(),
        message: message.to_string(),
    }
}

/// Deserializes JSON, reporting schema violations with a JSON pointer.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, DocError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let mut pointer = String::new();
        for seg in e.path().iter() {
            use serde_path_to_error::Segment;
            match seg {
                Segment::Seq { index } => pointer.push_str(&format!("/{}", index)),
                Segment::Map { key } => pointer.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
                Segment::Enum { variant } => pointer.push_str(&format!("/{}", variant)),
                Segment::Unknown => pointer.push_str("/?"),
            }
        }
        err(pointer, e.into_inner())
    })
}

fn parse_rational(r: &RationalDoc) -> Result<Rational, String> {
    match r {
        RationalDoc::Int(n) => Ok(Rational::from_integer((*n).into())),
        RationalDoc::Text(s) => {
            let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            if s.ends_with("/0") {
                return Err("zero denominator".into());
            }
            Rational::from_str(&s).map_err(|_| format!("'{}' is not a rational number", s))
        }
    }
}

pub fn scalar(f: &Field, s: &ScalarDoc) -> Result<Scalar, String> {
    match s {
        ScalarDoc::Int(n) => Ok(f.from_int(*n)),
        ScalarDoc::Text(t) => Ok(f.from_rational(parse_rational(&RationalDoc::Text(t.clone()))?)),
        ScalarDoc::Coeffs(cs) => {
            let coeffs = cs.iter().map(parse_rational).collect::<Result<Vec<_>, _>>()?;
            f.from_coeffs(coeffs).map_err(|e| e.to_string())
        }
    }
}

pub fn scalar_doc(s: &Scalar) -> ScalarDoc {
    match s.as_rational() {
        Some(q) => ScalarDoc::Text(q.to_string()),
        None => ScalarDoc::Coeffs(s.coeffs().iter().map(|c| RationalDoc::Text(c.to_string())).collect()),
    }
}

pub fn vector_doc(v: &[Scalar]) -> Vec<ScalarDoc> {
    v.iter().map(scalar_doc).collect()
}

pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows()).map(|i| vector_doc(m.row_slice(i))).collect()
}

fn vector(f: &Field, v: &[ScalarDoc], n: usize, at: &str) -> Result<Vector, DocError> {
    if v.len() != n {
        return Err(err(at, format!("expected {} entries, got {}", n, v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(k, s)| scalar(f, s).map_err(|m| err(format!("{}/{}", at, k), m)))
        .collect()
}

fn matrix(f: &Field, m: &MatrixDoc, n: usize, at: &str) -> Result<Matrix, DocError> {
    if m.len() != n {
        return Err(err(at, format!("expected {} rows, got {}", n, m.len())));
    }
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, r)| vector(f, r, n, &format!("{}/{}", at, i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(f, n, &rows))
}

/// An algebra document after validation.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub algebra: LieAlgebra,
    pub datum: SymmetryDatum,
    pub annotations: Annotations,
}

impl AlgebraDocument {
    pub fn field(&self) -> Result<Field, DocError> {
        match (self.field.kind, self.field.order) {
            (FieldKind::Rationals, None | Some(1)) => Ok(Field::rationals()),
            (FieldKind::Rationals, Some(_)) => Err(err("/field/order", "the rationals take no order")),
            (FieldKind::Cyclotomic, Some(m)) if m >= 1 => Ok(Field::new(FieldSpec::Cyclotomic(m))),
            (FieldKind::Cyclotomic, _) => Err(err("/field/order", "a cyclotomic field needs an order >= 1")),
        }
    }

    fn group(&self) -> Result<FiniteGroup, DocError> {
        let Some(g) = &self.group else {
            return Ok(FiniteGroup::trivial());
        };
        match (&g.abelian_orders, &g.table) {
            (Some(orders), None) => FiniteGroup::abelian(orders, g.names.clone()).map_err(|e| err("/group", e)),
            (None, Some(table)) => {
                let names = g
                    .names
                    .clone()
                    .unwrap_or_else(|| (0..table.len()).map(|i| format!("g{}", i)).collect());
                FiniteGroup::from_table(table.clone(), names).map_err(|e| err("/group/table", e))
            }
            _ => Err(err("/group", "give exactly one of abelian_orders and table")),
        }
    }

    pub fn load(&self) -> Result<Loaded, DocError> {
        let f = self.field()?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(err("/basis", format!("expected {} names, got {}", n, self.basis.len())));
        }
        let mut brackets = Vec::new();
        for (k, b) in self.brackets.iter().enumerate() {
            let at = format!("/brackets/{}", k);
            if b.i >= n {
                return Err(err(format!("{}/i", at), "index out of range"));
            }
            if b.j >= n {
                return Err(err(format!("{}/j", at), "index out of range"));
            }
            brackets.push((b.i, b.j, vector(&f, &b.coeffs, n, &format!("{}/coeffs", at))?));
        }
        let algebra = LieAlgebra::from_brackets(&f, self.basis.clone(), &brackets).map_err(|e| err("/brackets", e))?;
        if let codimlab_core::lie::JacobiReport::Fail { triple, .. } = algebra.validate() {
            return Err(err(
                "/brackets",
                format!("Jacobi identity fails on basis triple {:?}", triple),
            ));
        }
        let group = self.group()?;
        let datum = match (&self.action, &self.grading) {
            (Some(_), Some(_)) => return Err(err("/grading", "give at most one of action and grading")),
            (Some(a), None) => {
                if a.matrices.len() != group.order() {
                    return Err(err("/action/matrices", format!("expected {} matrices", group.order())));
                }
                let ms = a
                    .matrices
                    .iter()
                    .enumerate()
                    .map(|(k, m)| matrix(&f, m, n, &format!("/action/matrices/{}", k)))
                    .collect::<Result<Vec<_>, _>>()?;
                SymmetryDatum::action(group, GroupAction { matrices: ms })
            }
            (None, Some(g)) => {
                if g.labels.len() != n {
                    return Err(err("/grading/labels", format!("expected {} labels", n)));
                }
                let labels = g
                    .labels
                    .iter()
                    .enumerate()
                    .map(|(k, l)| match l {
                        LabelDoc::Index(i) if *i < group.order() => Ok(*i),
                        LabelDoc::Name(s) => group
                            .element(s)
                            .ok_or_else(|| err(format!("/grading/labels/{}", k), format!("unknown group element '{}'", s))),
                        _ => Err(err(format!("/grading/labels/{}", k), "label out of range")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                SymmetryDatum::grading(group, Grading { labels })
            }
            (None, None) => {
                if group.order() != 1 {
                    return Err(err("/group", "a nontrivial group needs an action or a grading"));
                }
                SymmetryDatum::none()
            }
        };
        let report = datum.validate(&algebra).map_err(|e| err(symmetry_pointer(&datum), e))?;
        if !report.passed() {
            return Err(err(symmetry_pointer(&datum), format!("{:?}", report)));
        }
        let basis_list = |v: &Option<Vec<Vec<ScalarDoc>>>, at: &str| -> Result<Option<Vec<Vector>>, DocError> {
            v.as_ref()
                .map(|vs| {
                    vs.iter()
                        .enumerate()
                        .map(|(k, x)| vector(&f, x, n, &format!("{}/{}", at, k)))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()
        };
        let annotations = Annotations {
            levi_basis: basis_list(&self.annotations.levi_basis, "/annotations/levi_basis")?,
            nilradical_basis: basis_list(&self.annotations.nilradical_basis, "/annotations/nilradical_basis")?,
            orbit_basis: self.annotations.orbit_basis.clone(),
        };
        if let Some(ob) = &annotations.orbit_basis {
            if let Some(k) = ob.iter().position(|&i| i >= n) {
                return Err(err(format!("/annotations/orbit_basis/{}", k), "index out of range"));
            }
        }
        Ok(Loaded {
            name: self.name.clone(),
            algebra,
            datum,
            annotations,
        })
    }

    /// Document for an algebra, symmetry and annotations.
    pub fn from_parts(name: &str, l: &LieAlgebra, datum: &SymmetryDatum, ann: &Annotations) -> AlgebraDocument {
        let f = l.field();
        let field = match f.spec() {
            FieldSpec::Rationals => FieldDoc {
                kind: FieldKind::Rationals,
                order: None,
            },
            FieldSpec::Cyclotomic(m) => FieldDoc {
                kind: FieldKind::Cyclotomic,
                order: Some(m),
            },
        };
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = l.bracket_basis(i, j);
                if !codimlab_core::linalg::is_zero_vec(v) {
                    brackets.push(BracketDoc {
                        i,
                        j,
                        coeffs: vector_doc(v),
                    });
                }
            }
        }
        let g = &datum.group;
        let group = (g.order() > 1).then(|| match g.cyclic_orders() {
            Some(orders) => GroupDoc {
                abelian_orders: Some(orders.to_vec()),
                table: None,
                names: Some(g.names().to_vec()),
            },
            None => GroupDoc {
                abelian_orders: None,
                table: Some((0..g.order()).map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect()).collect()),
                names: Some(g.names().to_vec()),
            },
        });
        let (action, grading) = match &datum.kind {
            SymmetryKind::None => (None, None),
            SymmetryKind::Action(rho) => (
                Some(ActionDoc {
                    matrices: rho.matrices.iter().map(matrix_doc).collect(),
                }),
                None,
            ),
            SymmetryKind::Grading(gr) => (
                None,
                Some(GradingDoc {
                    labels: gr.labels.iter().map(|&k| LabelDoc::Name(g.names()[k].clone())).collect(),
                }),
            ),
        };
        let basis_docs = |v: &Option<Vec<Vector>>| v.as_ref().map(|vs| vs.iter().map(|x| vector_doc(x)).collect());
        AlgebraDocument {
            name: name.to_string(),
            field,
            dim: n,
            basis: l.names().to_vec(),
            brackets,
            group,
            action,
            grading,
            annotations: AnnotationsDoc {
                levi_basis: basis_docs(&ann.levi_basis),
                nilradical_basis: basis_docs(&ann.nilradical_basis),
                orbit_basis: ann.orbit_basis.clone(),
            },
        }
    }

    pub fn from_fixture(fx: &Fixture) -> AlgebraDocument {
        AlgebraDocument::from_parts(fx.name, &fx.algebra, &fx.symmetry, &fx.annotations)
    }
}

fn symmetry_pointer(d: &SymmetryDatum) -> &'static str {
    match d.kind {
        SymmetryKind::Action(_) => "/action",
        SymmetryKind::Grading(_) => "/grading",
        SymmetryKind::None => "/group",
    }
}

impl InstanceDocument {
    pub fn load(&self) -> Result<RepresentationInstance, DocError> {
        let prefix = |e: DocError| DocError {
            pointer: format!("/algebra{}", e.pointer),
            message: e.message,
        };
        let loaded = self.algebra.load().map_err(prefix)?;
        let f = loaded.algebra.field().clone();
        let (group, algebra_action) = match &loaded.datum.kind {
            SymmetryKind::Grading(_) => return Err(err("/algebra/grading", "instances take a group action, not a grading")),
            SymmetryKind::Action(rho) => (loaded.datum.group.clone(), rho.clone()),
            SymmetryKind::None => (FiniteGroup::trivial(), GroupAction::trivial(&f, loaded.algebra.dim())),
        };
        let k = self.module.first().map_or(0, |m| m.len());
        if self.module.len() != loaded.algebra.dim() {
            return Err(err("/module", format!("expected {} matrices", loaded.algebra.dim())));
        }
        let module = self
            .module
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&f, m, k, &format!("/module/{}", i)))
            .collect::<Result<Vec<_>, _>>()?;
        let module_group = match &self.module_group {
            Some(ms) => {
                if ms.len() != group.order() {
                    return Err(err("/module_group", format!("expected {} matrices", group.order())));
                }
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| matrix(&f, m, k, &format!("/module_group/{}", i)))
                    .collect::<Result<Vec<_>, _>>()?
            }
            None if group.order() == 1 => vec![Matrix::identity(&f, k)],
            None => return Err(err("/module_group", "a nontrivial group needs module matrices")),
        };
        let inst = RepresentationInstance {
            algebra: loaded.algebra,
            group,
            algebra_action,
            module,
            module_group,
        };
        let chk = inst.check();
        if !chk.module_axioms {
            return Err(err("/module", "the matrices do not form a representation"));
        }
        if !chk.group_homomorphism {
            return Err(err("/module_group", "the matrices do not form a group representation"));
        }
        if !chk.equivariant {
            return Err(err("/module_group", "the module action is not equivariant"));
        }
        Ok(inst)
    }
}

/// Dual document: a grading becomes the action of its character group, an
/// action of an abelian group becomes the grading by its characters (in a
/// homogeneous basis).
pub fn dualize(loaded: &Loaded) -> Result<AlgebraDocument, DocError> {
    let l = &loaded.algebra;
    let d = &loaded.datum;
    let name = format!("{}_dual", loaded.name);
    match &d.kind {
        SymmetryKind::Grading(gr) => {
            let (chars, rho) = symmetry::grading_to_action(l, &d.group, gr).map_err(|e| err("/grading", e))?;
            let datum = SymmetryDatum::action(chars.as_group(), rho);
            Ok(AlgebraDocument::from_parts(&name, l, &datum, &loaded.annotations))
        }
        SymmetryKind::Action(rho) => {
            let ag = symmetry::action_to_grading(l, &d.group, rho).map_err(|e| err("/action", e))?;
            let chars = symmetry::CharacterGroup::new(&d.group, l.field()).map_err(|e| err("/action", e))?;
            let (basis, grading) = ag.homogeneous_basis();
            let names: Vec<String> = (1..=basis.len()).map(|i| format!("u{}", i)).collect();
            let dual = symmetry::change_basis(l, &basis, names).ok_or_else(|| err("/action", "the homogeneous components do not span"))?;
            let p = Matrix::from_cols(l.field(), l.dim(), &basis);
            let pinv = p.inverse().expect("basis");
            let convert = |v: &Option<Vec<Vector>>| v.as_ref().map(|vs| vs.iter().map(|x| pinv.mul_vec(x)).collect());
            let ann = Annotations {
                levi_basis: convert(&loaded.annotations.levi_basis),
                nilradical_basis: convert(&loaded.annotations.nilradical_basis),
                orbit_basis: None,
            };
            let datum = SymmetryDatum::grading(chars.as_group(), grading);
            Ok(AlgebraDocument::from_parts(&name, &dual, &datum, &ann))
        }
        SymmetryKind::None => Ok(AlgebraDocument::from_parts(&name, l, d, &loaded.annotations)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_round_trip() {
        let f = Field::cyclotomic(3);
        for d in [ScalarDoc::Int(-4), ScalarDoc::Text("3/7".into())] {
            let s = scalar(&f, &d).unwrap();
            assert_eq!(scalar(&f, &scalar_doc(&s)).unwrap(), s);
        }
        let z = scalar(&f, &ScalarDoc::Coeffs(vec![RationalDoc::Int(0), RationalDoc::Text("1/2".into())])).unwrap();
        assert!(matches!(scalar_doc(&z), ScalarDoc::Coeffs(_)));
        assert_eq!(scalar(&f, &scalar_doc(&z)).unwrap(), z);
        assert!(scalar(&f, &ScalarDoc::Text("1/0".into())).is_err());
        assert!(scalar(&f, &ScalarDoc::Text("pi".into())).is_err());
    }

    #[test]
    fn pointers_escape_keys() {
        let e = from_json::<AlgebraDocument>(r#"{"name":"x","field":{"kind":"rationals"},"dim":1,"basis":[7]}"#)
            .unwrap_err();
        assert_eq!(e.pointer, "/basis/0");
    }
}
