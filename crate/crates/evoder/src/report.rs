//! Result documents: the JSON-serializable records the command-line
//! tools emit, plus their human-readable table rendering.
//!
//! Rational entries serialize as exact `p/q` strings so no value is
//! ever routed through floating point. Documents round-trip through
//! JSON bit-exactly.

use serde::{Deserialize, Serialize};

use crate::algebra::StructureMatrix;
use crate::checks::{
    check_diagonal_conditions, check_leibniz, check_neighborhood_conditions,
    check_zero_when_gamma3_empty, PropertyReport,
};
use crate::closed_form::closed_form_derivations;
use crate::derivation::oracle_derivations;
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::spans_equal;
use crate::{Rational, RationalMatrix};

/// Which solver route(s) a derive run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeriveMethod {
    ClosedForm,
    Oracle,
    Both,
}

impl DeriveMethod {
    fn label(self) -> &'static str {
        match self {
            DeriveMethod::ClosedForm => "closed-form",
            DeriveMethod::Oracle => "oracle",
            DeriveMethod::Both => "both",
        }
    }
}

/// 1-based echo of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEcho {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// 1-based echo of the size->=3 twin classes with their block layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma3Echo {
    pub classes: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub offsets: Vec<usize>,
}

/// One analysis result. Fields are filled according to the command that
/// produced the document; absent fields are omitted from the JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twin_partition: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma3: Option<Gamma3Echo>,
    /// Old -> new label pairs of the block relabeling, present only
    /// when it is not the identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relabeling: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// Basis matrices row by row, entries as exact rational strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    /// Present exactly when both routes ran: do their spans agree?
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    /// One report per emitted basis matrix, plus the zero-space check
    /// for graph inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_reports: Option<Vec<PropertyReport>>,
}

/// Rank analysis of a structure matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub n: usize,
    pub rank: usize,
    pub non_singular: bool,
    /// True when full rank lets us conclude the zero derivation space
    /// without solving anything.
    pub zero_derivations_shortcut: bool,
}

fn matrix_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Rational::to_string).collect())
        .collect()
}

fn graph_echo(g: &Graph) -> GraphEcho {
    GraphEcho { n: g.n(), edges: g.edges_1based() }
}

fn gamma3_echo(g: &Graph) -> Gamma3Echo {
    let g3 = g.twin_partition().gamma3();
    Gamma3Echo {
        classes: g3.classes_1based(),
        sizes: g3.sizes().to_vec(),
        offsets: g3.offsets().to_vec(),
    }
}

/// Document for the twin-partition command: partition fields only.
pub fn twins_document(g: &Graph) -> ResultDocument {
    ResultDocument {
        graph: Some(graph_echo(g)),
        twin_partition: Some(g.twin_partition().classes_1based()),
        gamma3: Some(gamma3_echo(g)),
        ..ResultDocument::default()
    }
}

/// Document for a derive run on a graph. With [`DeriveMethod::Both`]
/// the emitted basis is the oracle's (its RREF normalization is
/// canonical) and `agreement` records whether the two spans coincide.
/// Property reports cover every emitted basis matrix followed by the
/// zero-space check.
pub fn derive_document(g: &Graph, method: DeriveMethod) -> Result<ResultDocument> {
    let c = StructureMatrix::<Rational>::from_graph(g)?;
    let mut relabeling = None;

    let (basis_mats, agreement) = match method {
        DeriveMethod::Oracle => (oracle_derivations(&c).into_mats(), None),
        DeriveMethod::ClosedForm => {
            let closed = closed_form_derivations::<Rational>(g)?;
            if !closed.perm().is_identity() {
                relabeling = Some(closed.perm().map_1based());
            }
            (closed.into_mats(), None)
        }
        DeriveMethod::Both => {
            let closed = closed_form_derivations::<Rational>(g)?;
            if !closed.perm().is_identity() {
                relabeling = Some(closed.perm().map_1based());
            }
            let oracle = oracle_derivations(&c);
            let agree = spans_equal(closed.mats(), oracle.mats())?;
            (oracle.into_mats(), Some(agree))
        }
    };

    let mut reports = Vec::with_capacity(basis_mats.len() + 1);
    for d in &basis_mats {
        let report = check_leibniz(&c, d)?
            .merge(check_neighborhood_conditions(g, d)?)
            .merge(check_diagonal_conditions(g, d)?);
        reports.push(report);
    }
    reports.push(check_zero_when_gamma3_empty(
        g,
        &crate::derivation::DerivationBasis::new(g.n(), basis_mats.clone()),
    ));

    Ok(ResultDocument {
        graph: Some(graph_echo(g)),
        twin_partition: Some(g.twin_partition().classes_1based()),
        gamma3: Some(gamma3_echo(g)),
        relabeling,
        adjacency_rank: Some(c.rank()),
        dimension: Some(basis_mats.len()),
        basis: Some(basis_mats.iter().map(matrix_strings).collect()),
        method: Some(method.label().into()),
        agreement,
        property_reports: Some(reports),
    })
}

/// Document for a derive run on a raw structure matrix: oracle only,
/// no graph-dependent fields.
pub fn derive_document_raw(c: &StructureMatrix<Rational>) -> Result<ResultDocument> {
    let basis = oracle_derivations(c);
    let mut reports = Vec::with_capacity(basis.dimension());
    for d in basis.mats() {
        reports.push(check_leibniz(c, d)?);
    }
    Ok(ResultDocument {
        adjacency_rank: Some(c.rank()),
        dimension: Some(basis.dimension()),
        basis: Some(basis.mats().iter().map(matrix_strings).collect()),
        method: Some("oracle".into()),
        property_reports: Some(reports),
        ..ResultDocument::default()
    })
}

/// Rank report for any structure matrix; full rank means the
/// derivation space is zero without solving the system.
pub fn rank_report(c: &StructureMatrix<Rational>) -> RankReport {
    let rank = c.rank();
    let non_singular = rank == c.n();
    RankReport { n: c.n(), rank, non_singular, zero_derivations_shortcut: non_singular }
}

fn push_matrix_lines(out: &mut String, m: &[Vec<String>]) {
    for row in m {
        out.push_str(&format!("    [{}]\n", row.join(", ")));
    }
}

/// Plain-text table rendering of a result document.
pub fn render_table(doc: &ResultDocument) -> String {
    let mut out = String::new();
    if let Some(g) = &doc.graph {
        out.push_str(&format!("vertices:        {}\n", g.n));
        let edges: Vec<String> = g.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
        out.push_str(&format!("edges:           {}\n", edges.join(" ")));
    }
    if let Some(classes) = &doc.twin_partition {
        let rendered: Vec<String> = classes.iter().map(|c| format!("{c:?}")).collect();
        out.push_str(&format!("twin classes:    {}\n", rendered.join(" ")));
    }
    if let Some(g3) = &doc.gamma3 {
        let rendered: Vec<String> = g3.classes.iter().map(|c| format!("{c:?}")).collect();
        let body = if rendered.is_empty() { "none".into() } else { rendered.join(" ") };
        out.push_str(&format!("classes >= 3:    {body}\n"));
    }
    if let Some(map) = &doc.relabeling {
        let rendered: Vec<String> = map.iter().map(|[o, n]| format!("{o}->{n}")).collect();
        out.push_str(&format!("relabeling:      {}\n", rendered.join(" ")));
    }
    if let Some(rank) = doc.adjacency_rank {
        out.push_str(&format!("structure rank:  {rank}\n"));
    }
    if let Some(method) = &doc.method {
        out.push_str(&format!("method:          {method}\n"));
    }
    if let Some(dim) = doc.dimension {
        out.push_str(&format!("dimension:       {dim}\n"));
    }
    if let Some(agreement) = doc.agreement {
        out.push_str(&format!("routes agree:    {agreement}\n"));
    }
    if let Some(basis) = &doc.basis {
        for (idx, mat) in basis.iter().enumerate() {
            out.push_str(&format!("basis matrix {}:\n", idx + 1));
            push_matrix_lines(&mut out, mat);
        }
    }
    if let Some(reports) = &doc.property_reports {
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
        out.push_str(&format!("checks:          {} run, {} failed\n", total, failed));
        for report in reports {
            for failure in report.failures() {
                out.push_str(&format!("  FAILED {}: {:?}\n", failure.check, failure.witness));
            }
        }
    }
    out
}

/// Plain-text rendering of a rank report.
pub fn render_rank_table(report: &RankReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("dimension:       {}\n", report.n));
    out.push_str(&format!("structure rank:  {}\n", report.rank));
    out.push_str(&format!("non-singular:    {}\n", report.non_singular));
    if report.zero_derivations_shortcut {
        out.push_str("full rank, so the derivation space is zero without solving\n");
    }
    out
}
