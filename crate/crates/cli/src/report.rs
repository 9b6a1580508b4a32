//! Serializable reports, with text and CSV renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::doc::{MatrixDoc, ScalarDoc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub radical_dim: usize,
    pub levi_dim: usize,
    pub nilradical_dim: usize,
    pub complement_dim: usize,
    pub nilpotency_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub algebra: String,
    pub dim: usize,
    pub field_order: u32,
    pub group_order: usize,
    pub symmetry: String,
    pub jacobi: bool,
    pub symmetry_valid: bool,
    pub killing_nondegenerate: bool,
    pub structure: Option<StructureSummary>,
    /// reason code when the structure needs annotations
    pub structure_refusal: Option<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimRow {
    pub n: usize,
    pub c_n: u64,
    pub root_num: u64,
    pub root_den: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimOutput {
    pub algebra: String,
    pub flavor: String,
    pub rows: Vec<CodimRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub partition: Vec<usize>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocharRow {
    pub n: usize,
    pub codimension: u64,
    pub colength: u64,
    pub codim_check: bool,
    pub row_bound_check: bool,
    /// nonzero multiplicities only
    pub multiplicities: Vec<Multiplicity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocharOutput {
    pub algebra: String,
    pub flavor: String,
    pub rows: Vec<CocharRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionRow {
    pub upper_dim: usize,
    pub lower_dim: usize,
    pub ann_codim: usize,
    pub complement_multiplicity: usize,
    pub ann_decomposition: bool,
    pub projection_checks: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub sections: Vec<usize>,
    pub q: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub expected: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentOutput {
    pub algebra: String,
    pub d: usize,
    pub witness: Option<WitnessDoc>,
    pub tuples_examined: usize,
    pub nilpotency_index: usize,
    pub r_max: usize,
    pub q_max: usize,
    pub chain_dims: Vec<usize>,
    pub sections: Vec<SectionRow>,
    pub closed_form_checks: Vec<CheckRow>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityWitness {
    pub substitution: Vec<String>,
    pub value: Vec<ScalarDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutput {
    pub algebra: String,
    pub flavor: String,
    pub expr: String,
    pub identity: bool,
    pub witness: Option<IdentityWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegevOutput {
    pub q: usize,
    pub terms: usize,
    pub alternating: bool,
    pub substitutions: u64,
    pub all_scalar: bool,
    pub nonzero: u64,
    /// matrix units, `eab` for `E_ab`
    pub first_witness: Option<Vec<String>>,
    pub first_value: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingOutput {
    pub t: usize,
    pub q: usize,
    pub component_dims: Vec<usize>,
    pub orbit_elements: Vec<Vec<String>>,
    pub completion: Vec<usize>,
    pub parts: Vec<String>,
    pub gammas: Vec<ScalarDoc>,
    pub polynomial: String,
    pub value: MatrixDoc,
    pub determinant: ScalarDoc,
    pub nondegenerate: bool,
    pub alternating: bool,
    pub commutes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyAltOutput {
    pub polynomial: String,
    pub sets: Vec<Vec<usize>>,
    pub alternating: bool,
    pub failed_transposition: Option<(usize, usize)>,
    pub identity: bool,
    pub witness: Option<Vec<String>>,
    pub value: Option<MatrixDoc>,
    pub examined: u64,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub status: String,
    pub reason: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pointer: Option<String>,
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn scalar_text(s: &ScalarDoc) -> String {
    match s {
        ScalarDoc::Int(n) => n.to_string(),
        ScalarDoc::Text(t) => t.clone(),
        ScalarDoc::Coeffs(cs) => {
            let parts: Vec<String> = cs
                .iter()
                .map(|c| match c {
                    crate::doc::RationalDoc::Int(n) => n.to_string(),
                    crate::doc::RationalDoc::Text(t) => t.clone(),
                })
                .collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

fn matrix_text(m: &MatrixDoc) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(scalar_text).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[[{}]]", rows.join("], ["))
}

impl ValidateReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}", self.algebra);
        let _ = writeln!(s, "dim: {}  field order: {}  group order: {}  symmetry: {}", self.dim, self.field_order, self.group_order, self.symmetry);
        let _ = writeln!(s, "jacobi: {}  symmetry valid: {}", yes(self.jacobi), yes(self.symmetry_valid));
        let _ = writeln!(s, "killing form nondegenerate: {}", yes(self.killing_nondegenerate));
        if let Some(st) = &self.structure {
            let _ = writeln!(
                s,
                "radical {}  levi {}  nilradical {}  complement {}  nilpotency index {}",
                st.radical_dim, st.levi_dim, st.nilradical_dim, st.complement_dim, st.nilpotency_index
            );
        }
        if let Some(r) = &self.structure_refusal {
            let _ = writeln!(s, "structure: {}", r);
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {}", w);
        }
        let _ = writeln!(s, "VALID: {}", yes(self.jacobi && self.symmetry_valid));
        s
    }
}

impl CodimOutput {
    pub fn csv(&self) -> String {
        let mut s = String::from("n,flavor,c_n,root_num,root_den\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{},{}", r.n, self.flavor, r.c_n, r.root_num, r.root_den);
        }
        s
    }
}

impl CocharOutput {
    pub fn csv(&self) -> String {
        let mut s = String::from("n,flavor,partition,multiplicity\n");
        for r in &self.rows {
            for m in &r.multiplicities {
                let p: Vec<String> = m.partition.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "{},{},{},{}", r.n, self.flavor, p.join(" "), m.multiplicity);
            }
        }
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}  flavor: {}", self.algebra, self.flavor);
        for r in &self.rows {
            let parts: Vec<String> = r
                .multiplicities
                .iter()
                .map(|m| {
                    let p: Vec<String> = m.partition.iter().map(|x| x.to_string()).collect();
                    format!("{}x({})", m.multiplicity, p.join(","))
                })
                .collect();
            let _ = writeln!(
                s,
                "n={} c_n={} colength={} checks={}/{} : {}",
                r.n,
                r.codimension,
                r.colength,
                yes(r.codim_check),
                yes(r.row_bound_check),
                parts.join(" + ")
            );
        }
        s
    }
}

impl ExponentOutput {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}", self.algebra);
        let _ = writeln!(s, "d = {}", self.d);
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: sections {:?}, q {:?}", w.sections, w.q);
        }
        let _ = writeln!(s, "chain dims: {:?}", self.chain_dims);
        let _ = writeln!(
            s,
            "nilpotency index {}  r_max {}  q_max {}  tuples examined {}",
            self.nilpotency_index, self.r_max, self.q_max, self.tuples_examined
        );
        for (k, sec) in self.sections.iter().enumerate() {
            let _ = writeln!(
                s,
                "section {}: {}/{} codim Ann {} multiplicity {} ann-decomposition {} projections {}",
                k,
                sec.upper_dim,
                sec.lower_dim,
                sec.ann_codim,
                sec.complement_multiplicity,
                yes(sec.ann_decomposition),
                yes(sec.projection_checks)
            );
        }
        for c in &self.closed_form_checks {
            let _ = writeln!(s, "check {}: expected {} holds {}", c.name, c.expected, yes(c.holds));
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {}", w);
        }
        s
    }
}

impl IdentityOutput {
    pub fn text(&self) -> String {
        let mut s = format!("IDENTITY: {}\n", yes(self.identity));
        if let Some(w) = &self.witness {
            let v: Vec<String> = w.value.iter().map(scalar_text).collect();
            let _ = writeln!(s, "witness: {} -> ({})", w.substitution.join(", "), v.join(", "));
        }
        s
    }
}

impl RegevOutput {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "q = {}: {} terms, alternating {}", self.q, self.terms, yes(self.alternating));
        let _ = writeln!(
            s,
            "{} substitutions, all scalar {}, nonzero {}",
            self.substitutions,
            yes(self.all_scalar),
            self.nonzero
        );
        if let (Some(w), Some(v)) = (&self.first_witness, self.first_value) {
            let _ = writeln!(s, "first witness: {} -> {} * 1", w.join(" "), v);
        }
        let _ = writeln!(s, "CENTRAL: {}", yes(self.all_scalar && self.nonzero > 0));
        s
    }
}

impl SeparatingOutput {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "t = {}  q = {}  components {:?}", self.t, self.q, self.component_dims);
        for (j, (p, g)) in self.parts.iter().zip(&self.orbit_elements).enumerate() {
            let _ = writeln!(s, "f_{} = {}   (g = {})", j + 1, p, g.join(", "));
        }
        let gs: Vec<String> = self.gammas.iter().map(scalar_text).collect();
        let _ = writeln!(s, "gammas: {}", gs.join(", "));
        let _ = writeln!(s, "f = {}", self.polynomial);
        let _ = writeln!(s, "value: {}", matrix_text(&self.value));
        let _ = writeln!(s, "determinant: {}", scalar_text(&self.determinant));
        let _ = writeln!(
            s,
            "NONDEGENERATE: {}  alternating {}  commutes {}",
            yes(self.nondegenerate),
            yes(self.alternating),
            yes(self.commutes)
        );
        s
    }
}

impl VerifyAltOutput {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ALTERNATING: {}", yes(self.alternating));
        if let Some((a, b)) = self.failed_transposition {
            let _ = writeln!(s, "transposition ({} {}) does not negate", a, b);
        }
        let _ = writeln!(s, "IDENTITY: {}", yes(self.identity));
        if let (Some(w), Some(v)) = (&self.witness, &self.value) {
            let _ = writeln!(s, "witness: {} -> {}", w.join(", "), matrix_text(v));
        }
        let _ = writeln!(
            s,
            "examined {} substitutions ({})",
            self.examined,
            if self.exhaustive { "exhaustive" } else { "sampled" }
        );
        s
    }
}

impl Refusal {
    pub fn text(&self) -> String {
        let mut s = format!("{}: {}: {}", self.status.to_uppercase(), self.reason, self.message);
        if let Some(p) = &self.pointer {
            let _ = write!(s, " (at {})", p);
        }
        s.push('\n');
        s
    }
}
