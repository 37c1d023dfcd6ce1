//! Report types and runners behind the `inertia` binary. Every report has a
//! text rendering and a JSON form that deserializes back into the same type.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use inertia::group::{canonical_key, parse_group_spec};
use inertia::kgpd::{self, JsonTerm, KGpdElement};
use inertia::linalg::{self, BasisLabel, KStVector, LinalgError, OperatorMatrix};
use inertia::qfield::{
    parse_polynomial, spectrum_decompose, RationalFunctionQ, SpectrumDecomposition, SpectrumFamily,
};
use inertia::torus::{torus_motive, MotiveExpr, MotiveJson, PermAction};
use inertia::Limits;

pub trait Report: Serialize {
    fn text(&self) -> String;

    /// Whether the computation succeeded; only checks can report failure.
    fn ok(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpdAction {
    Inertia,
    InertiaR(usize),
    Iterated(usize),
    Projections,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpdResult {
    /// Set for projections: the eigenvalue `k` of `π_k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<usize>,
    pub text: String,
    pub terms: Vec<JsonTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpdReport {
    pub group: String,
    pub order: usize,
    pub center_order: usize,
    pub operation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    pub results: Vec<GpdResult>,
}

impl Report for GpdReport {
    fn text(&self) -> String {
        if self.operation == "projections" {
            self.results
                .iter()
                .map(|r| {
                    format!(
                        "pi_{k} (eigenvalue {k}): {}",
                        r.text,
                        k = r.eigenvalue.unwrap_or(0)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n")
        } else {
            self.results
                .iter()
                .map(|r| r.text.clone())
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

fn gpd_result(eigenvalue: Option<usize>, x: &KGpdElement) -> GpdResult {
    GpdResult {
        eigenvalue,
        text: x.to_string(),
        terms: x.to_json_terms(),
    }
}

pub fn run_gpd(spec: &str, action: GpdAction, limits: Limits) -> Result<GpdReport> {
    let g =
        parse_group_spec(spec, limits.order_cap).with_context(|| format!("group spec {spec:?}"))?;
    let key = canonical_key(&g);
    let x = KGpdElement::class_of(key.clone());
    let (operation, parameter, results) = match action {
        GpdAction::Inertia => ("inertia", None, vec![gpd_result(None, &kgpd::inertia(&x))]),
        GpdAction::InertiaR(r) => (
            "inertia_r",
            Some(r),
            vec![gpd_result(None, &kgpd::inertia_r(&x, r))],
        ),
        GpdAction::Iterated(k) => (
            "iterated",
            Some(k),
            vec![gpd_result(None, &kgpd::iterated_inertia(&x, k))],
        ),
        GpdAction::Projections => (
            "projections",
            None,
            kgpd::eigen_components(&x)
                .iter()
                .map(|(k, p)| gpd_result(Some(*k), p))
                .collect(),
        ),
    };
    Ok(GpdReport {
        group: key.label().to_string(),
        order: key.order(),
        center_order: key.center_order(),
        operation: operation.into(),
        parameter,
        results,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TorusReport(pub MotiveJson);

impl Report for TorusReport {
    fn text(&self) -> String {
        let m = MotiveExpr::from_json(&self.0).expect("report built from a valid motive");
        let mut lines = vec![
            format!("lambda: {}", m.lambda),
            format!("Q_lambda: {}", m.base_coefficient),
            format!("motive: {m}"),
        ];
        for t in &m.cover_terms {
            lines.push(format!(
                "  cover X̄/{} (order {}): {}",
                t.stabilizer_label(),
                t.stabilizer.len(),
                t.coefficient
            ));
        }
        lines.join("\n")
    }
}

pub fn run_torus(r: usize, gens: &str, limits: Limits) -> Result<TorusReport> {
    if r > limits.flag_cap {
        bail!(
            "rank {r} exceeds the flag enumeration cap of {}",
            limits.flag_cap
        );
    }
    let action = PermAction::parse(r, gens).with_context(|| format!("generators {gens:?}"))?;
    let m = torus_motive(&action, limits.flag_cap)?;
    Ok(TorusReport(m.to_json()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub polynomial: String,
    pub family: SpectrumFamily,
    pub member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<SpectrumDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<String>,
}

impl Report for SpectrumReport {
    fn text(&self) -> String {
        match (&self.decomposition, &self.factored) {
            (Some(d), Some(f)) => format!("{d}\n{} = {f}", self.polynomial),
            _ => format!("not in spectrum ({} family)", self.family),
        }
    }
}

pub fn run_spectrum(poly: &str, family: SpectrumFamily) -> Result<SpectrumReport> {
    let p = parse_polynomial(poly).with_context(|| format!("polynomial {poly:?}"))?;
    let d = spectrum_decompose(&p, family)?;
    Ok(SpectrumReport {
        polynomial: p.to_string(),
        family,
        member: d.is_some(),
        factored: d.as_ref().map(SpectrumDecomposition::factored),
        decomposition: d,
    })
}

/// Readable form of an eigenvalue: factored when it is in the spectrum
/// family, as printed otherwise.
fn eigenvalue_text(v: &RationalFunctionQ) -> String {
    v.as_polynomial()
        .and_then(|p| spectrum_decompose(p, SpectrumFamily::Full).ok().flatten())
        .map(|d| d.factored())
        .unwrap_or_else(|| v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    pub value: String,
}

fn entries(m: &OperatorMatrix, v: &KStVector) -> Vec<Entry> {
    m.basis()
        .iter()
        .filter_map(|b| {
            let x = v.get(b.as_str());
            (!x.is_zero()).then(|| Entry {
                label: b.to_string(),
                value: x.to_string(),
            })
        })
        .collect()
}

fn entries_text(es: &[Entry]) -> String {
    let mut out = String::new();
    for (i, e) in es.iter().enumerate() {
        // A leading minus belongs to the whole value when the numerator is a
        // single term.
        let (negative, v) = match e.value.strip_prefix('-') {
            Some(rest) if !rest.split('/').next().unwrap_or(rest).contains(' ') => (true, rest),
            _ => (false, e.value.as_str()),
        };
        let term = match v {
            "1" => format!("[{}]", e.label),
            v if v.contains([' ', '/']) => format!("({v})[{}]", e.label),
            v => format!("{v}[{}]", e.label),
        };
        out.push_str(match (i, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenRow {
    pub eigenvalue: String,
    pub expanded: String,
    pub multiplicity: usize,
    pub classes: Vec<String>,
    /// Eigenvector through the first class, with denominators cleared; absent
    /// when the matrix is only partially known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvector: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenReport {
    pub fixture: String,
    pub dimension: usize,
    pub distinct_eigenvalues: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub rows: Vec<EigenRow>,
}

impl Report for EigenReport {
    fn text(&self) -> String {
        let mut lines = vec![format!(
            "{}: {} basis classes, {} distinct eigenvalues",
            self.fixture, self.dimension, self.distinct_eigenvalues
        )];
        if let Some(n) = &self.note {
            lines.push(format!("note: {n}"));
        }
        let width = self
            .rows
            .iter()
            .map(|r| r.eigenvalue.chars().count())
            .max()
            .unwrap_or(0);
        for r in &self.rows {
            let mut line = format!("{:<width$}  {}", r.eigenvalue, r.classes.join(", "));
            if let Some(v) = &r.eigenvector {
                line.push_str(&format!("  eigenvector: {}", entries_text(v)));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

pub fn run_fixture_eigen(name: &str) -> Result<EigenReport> {
    let m = linalg::fixture(name)?;
    let eig = m.eigenvalues()?;
    let full = match m.eigen_decompose() {
        Ok(_) => true,
        Err(LinalgError::PartialFixture(_)) => false,
        Err(e) => return Err(e.into()),
    };
    let mut rows = Vec::new();
    for (value, multiplicity) in &eig {
        let classes: Vec<&BasisLabel> = m
            .basis()
            .iter()
            .filter(|b| {
                m.entry(b.as_str(), b.as_str())
                    .map(|d| d == value)
                    .unwrap_or(false)
            })
            .collect();
        let eigenvector = if full {
            let comps = m.eigen_components(&KStVector::basis_vector(classes[0].as_str()))?;
            comps
                .into_iter()
                .find(|(l, _)| l == value)
                .map(|(_, v)| entries(&m, &v.clear_denominators()))
        } else {
            None
        };
        rows.push(EigenRow {
            eigenvalue: eigenvalue_text(value),
            expanded: value.to_string(),
            multiplicity: *multiplicity,
            classes: classes.iter().map(|b| b.to_string()).collect(),
            eigenvector,
        });
    }
    Ok(EigenReport {
        fixture: name.to_string(),
        dimension: m.dim(),
        distinct_eigenvalues: eig.len(),
        note: m.note().map(str::to_string),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub eigenvalue: String,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectReport {
    pub fixture: String,
    pub vector: Vec<Entry>,
    pub components: Vec<Component>,
}

impl Report for ProjectReport {
    fn text(&self) -> String {
        let mut lines = vec![format!(
            "{}: projections of {}",
            self.fixture,
            entries_text(&self.vector)
        )];
        for c in &self.components {
            lines.push(format!(
                "Pi[{}] = {}",
                c.eigenvalue,
                entries_text(&c.entries)
            ));
        }
        lines.join("\n")
    }
}

/// `vector` is a basis label or `label=value; …`.
pub fn run_fixture_project(name: &str, vector: &str) -> Result<ProjectReport> {
    let m = linalg::fixture(name)?;
    let v = KStVector::parse(vector)?;
    for (label, _) in v.entries() {
        m.index(label.as_str())?;
    }
    let comps = m.eigen_components(&v)?;
    Ok(ProjectReport {
        fixture: name.to_string(),
        vector: entries(&m, &v),
        components: comps
            .iter()
            .map(|(l, c)| Component {
                eigenvalue: eigenvalue_text(l),
                entries: entries(&m, c),
            })
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub fixture: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report for CheckReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .checks
            .iter()
            .map(|c| {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                match &c.detail {
                    Some(d) => format!("{mark} {}: {d}", c.name),
                    None => format!("{mark} {}", c.name),
                }
            })
            .collect();
        lines.push(format!(
            "{}: {}",
            self.fixture,
            if self.passed {
                "all checks passed"
            } else {
                "checks failed"
            }
        ));
        lines.join("\n")
    }

    fn ok(&self) -> bool {
        self.passed
    }
}

fn check(name: &str, result: std::result::Result<(), String>) -> Check {
    Check {
        name: name.into(),
        passed: result.is_ok(),
        detail: result.err(),
    }
}

fn check_fixture(m: &OperatorMatrix, name: &str) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(check(
        "triangular under the filtration order",
        match m.filtration_order() {
            None => Err("no filtration stored".into()),
            Some(order) => match m.is_triangular(&order) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("not triangular under {}", order.join(", "))),
                Err(e) => Err(e.to_string()),
            },
        },
    ));
    let diagonal = m.diagonal();
    out.push(check(
        "diagonal entries in the full spectrum family",
        diagonal.iter().try_for_each(|d| {
            let p = d
                .as_polynomial()
                .ok_or_else(|| format!("{d} is not a polynomial"))?;
            match spectrum_decompose(p, SpectrumFamily::Full) {
                Ok(Some(_)) => Ok(()),
                _ => Err(format!("{d} is not of the form n*q^u*prod(q^r - 1)")),
            }
        }),
    ));
    if name != "bgl3" {
        out.push(check(
            "diagonal entries semisimple after removing q^u",
            diagonal.iter().try_for_each(|d| {
                let p = d
                    .as_polynomial()
                    .ok_or_else(|| format!("{d} is not a polynomial"))?;
                let u = p.q_valuation().unwrap_or(0);
                match spectrum_decompose(&p.shift_down(u), SpectrumFamily::Semisimple) {
                    Ok(Some(_)) => Ok(()),
                    _ => Err(format!("{d} fails the semisimple form")),
                }
            }),
        ));
    }
    if m.is_partial() {
        out.push(check(
            "projectors refused for a partially known matrix",
            match m.eigen_decompose() {
                Err(LinalgError::PartialFixture(_)) => Ok(()),
                other => Err(format!("unexpected result {other:?}")),
            },
        ));
    } else {
        out.push(check(
            "eigenprojectors form a complete orthogonal family",
            m.eigen_decompose().map(|_| ()).map_err(|e| e.to_string()),
        ));
        out.push(check(
            "eigencomponents of every basis class sum back and are eigenvectors",
            m.basis().iter().try_for_each(|b| {
                let v = KStVector::basis_vector(b.as_str());
                let comps = m.eigen_components(&v).map_err(|e| e.to_string())?;
                let total = comps
                    .iter()
                    .fold(KStVector::zero(), |acc, (_, c)| acc.add(c));
                if total != v {
                    return Err(format!("components of {b} do not sum to it"));
                }
                for (l, c) in &comps {
                    if m.apply(c).map_err(|e| e.to_string())? != c.scale(l) {
                        return Err(format!("component of {b} at {l} is not an eigenvector"));
                    }
                }
                Ok(())
            }),
        ));
    }
    out
}

pub fn run_fixture_check(name: &str) -> Result<CheckReport> {
    let m = linalg::fixture(name)?;
    let checks = check_fixture(&m, name);
    Ok(CheckReport {
        fixture: name.to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Render a report in the requested format.
pub fn render<R: Report>(report: &R, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(report).expect("reports serialize")
    } else {
        report.text()
    }
}
