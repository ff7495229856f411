//! JSON interchange formats.
//!
//! Every payload is a plain serde struct mirroring one engine type;
//! rationals travel as strings `"p/q"` (or `"p"` for integers) so that no
//! precision is lost and no float ever appears. Conversions validate on
//! the way in — indices in range, rationals well formed, weights
//! consistent — so a value that parses is a value the engine accepts.
//!
//! Schemas:
//!
//! * [`AlgebraJson`] — `{name, dim, weights, flavor, brackets: [{i, j, terms: [{k, c}]}]}`
//! * [`DeformationJson`] — `{n, components: [{weight, terms: [{i, j, k, c}]}]}`
//! * [`ModuliPointJson`] — `{n, x: ["p/q" × 5]}`
//! * [`TwoFormJson`] — `{n, terms: [{i, j, c}]}`
//! * [`OneFormJson`] — `{n, terms: [{i, c}]}`
//! * [`CochainJson`] — `{n, degree, coefficients, terms: [{args, target?, c}]}`
//! * [`CohomologyReportJson`] — per-weight dimension table

use serde::{Deserialize, Serialize};

use crate::cohomology::{Cochain, Coefficients, CohomologyReport};
use crate::deformation::{Deformation, ModuliPoint};
use crate::exactla::{format_rational, parse_rational, Rational};
use crate::liealg::{Flavor, LieAlgebra};
use crate::{Error, Result};

/// One target term `c · e_k` of a bracket row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTermJson {
    pub k: u16,
    pub c: String,
}

/// One bracket row `[e_i, e_j] = Σ terms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: u16,
    pub j: u16,
    pub terms: Vec<BracketTermJson>,
}

/// A structure-constant Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub weights: Vec<i64>,
    pub flavor: String,
    pub brackets: Vec<BracketJson>,
}

impl AlgebraJson {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .brackets()
            .iter()
            .map(|(&(i, j), terms)| BracketJson {
                i,
                j,
                terms: terms
                    .iter()
                    .map(|(&k, c)| BracketTermJson { k, c: format_rational(c) })
                    .collect(),
            })
            .collect();
        AlgebraJson {
            name: g.name().to_string(),
            dim: g.n(),
            weights: g.weights().to_vec(),
            flavor: g.flavor().to_string(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.weights.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "dim is {} but {} weights are given",
                self.dim,
                self.weights.len()
            )));
        }
        let flavor: Flavor = self.flavor.parse()?;
        let mut brackets = Vec::new();
        for row in &self.brackets {
            let mut terms = Vec::new();
            for t in &row.terms {
                terms.push((t.k, parse_rational(&t.c)?));
            }
            brackets.push(((row.i, row.j), terms));
        }
        LieAlgebra::new(&self.name, self.weights.clone(), flavor, brackets)
    }
}

/// One structure-constant correction `c · e_k` added to `[e_i, e_j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationTermJson {
    pub i: u16,
    pub j: u16,
    pub k: u16,
    pub c: String,
}

/// The weight-`l` homogeneous piece of a deformation cochain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationComponentJson {
    pub weight: i64,
    pub terms: Vec<DeformationTermJson>,
}

/// A positive-weight deformation of `V(n)`, split into homogeneous
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationJson {
    pub n: usize,
    pub components: Vec<DeformationComponentJson>,
}

impl DeformationJson {
    pub fn from_deformation(d: &Deformation) -> Self {
        let components = d
            .components()
            .iter()
            .map(|(&weight, c)| DeformationComponentJson {
                weight,
                terms: c
                    .entries()
                    .iter()
                    .map(|((args, target), v)| DeformationTermJson {
                        i: args[0],
                        j: args[1],
                        k: target.expect("deformation cochains are adjoint"),
                        c: format_rational(v),
                    })
                    .collect(),
            })
            .collect();
        DeformationJson { n: d.n(), components }
    }

    /// Rebuild the deformation, re-deriving the weight split against
    /// `V(n)` and checking it matches the declared component weights.
    pub fn to_deformation(&self) -> Result<Deformation> {
        let g0 = crate::catalog::v(self.n)?;
        let mut total = Cochain::zero(self.n, 2, Coefficients::Adjoint);
        for comp in &self.components {
            for t in &comp.terms {
                let v = parse_rational(&t.c)?;
                let declared = g0.weight(t.k) - g0.weight(t.i) - g0.weight(t.j);
                if declared != comp.weight {
                    return Err(Error::InvalidInput(format!(
                        "term e{} ⊗ e^{}∧e^{} has weight {declared}, listed under weight {}",
                        t.k, t.i, t.j, comp.weight
                    )));
                }
                total.add_term(&[t.i, t.j], Some(t.k), v)?;
            }
        }
        Deformation::from_cochain(&g0, &total)
    }
}

/// A point of the five-coordinate moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliPointJson {
    pub n: usize,
    pub x: [String; 5],
}

impl ModuliPointJson {
    pub fn from_point(p: &ModuliPoint) -> Self {
        let x = p.x().clone().map(|c| format_rational(&c));
        ModuliPointJson { n: p.n(), x }
    }

    pub fn to_point(&self) -> Result<ModuliPoint> {
        let mut x: [Rational; 5] = Default::default();
        for (slot, s) in x.iter_mut().zip(&self.x) {
            *slot = parse_rational(s)?;
        }
        ModuliPoint::new(self.n, x)
    }
}

/// One term `c · e^i ∧ e^j` of a 2-form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFormTermJson {
    pub i: u16,
    pub j: u16,
    pub c: String,
}

/// A 2-form with trivial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFormJson {
    pub n: usize,
    pub terms: Vec<TwoFormTermJson>,
}

impl TwoFormJson {
    pub fn from_form(c: &Cochain) -> Result<Self> {
        if c.coefficients() != Coefficients::Trivial || c.degree() != 2 {
            return Err(Error::InvalidInput(
                "expected a 2-form with trivial coefficients".into(),
            ));
        }
        let terms = c
            .entries()
            .iter()
            .map(|((args, _), v)| TwoFormTermJson {
                i: args[0],
                j: args[1],
                c: format_rational(v),
            })
            .collect();
        Ok(TwoFormJson { n: c.n(), terms })
    }

    pub fn to_form(&self) -> Result<Cochain> {
        let mut c = Cochain::zero(self.n, 2, Coefficients::Trivial);
        for t in &self.terms {
            c.add_term(&[t.i, t.j], None, parse_rational(&t.c)?)?;
        }
        Ok(c)
    }
}

/// One term `c · e^i` of a 1-form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneFormTermJson {
    pub i: u16,
    pub c: String,
}

/// A 1-form with trivial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneFormJson {
    pub n: usize,
    pub terms: Vec<OneFormTermJson>,
}

impl OneFormJson {
    pub fn from_form(c: &Cochain) -> Result<Self> {
        if c.coefficients() != Coefficients::Trivial || c.degree() != 1 {
            return Err(Error::InvalidInput(
                "expected a 1-form with trivial coefficients".into(),
            ));
        }
        let terms = c
            .entries()
            .iter()
            .map(|((args, _), v)| OneFormTermJson { i: args[0], c: format_rational(v) })
            .collect();
        Ok(OneFormJson { n: c.n(), terms })
    }

    pub fn to_form(&self) -> Result<Cochain> {
        let mut c = Cochain::zero(self.n, 1, Coefficients::Trivial);
        for t in &self.terms {
            c.add_term(&[t.i], None, parse_rational(&t.c)?)?;
        }
        Ok(c)
    }
}

/// One monomial term of a general cochain; `target` is present exactly
/// for adjoint coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainTermJson {
    pub args: Vec<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<u16>,
    pub c: String,
}

/// A cochain of any degree, with trivial or adjoint coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub n: usize,
    pub degree: usize,
    pub coefficients: String,
    pub terms: Vec<CochainTermJson>,
}

fn coefficients_name(c: Coefficients) -> &'static str {
    match c {
        Coefficients::Trivial => "trivial",
        Coefficients::Adjoint => "adjoint",
    }
}

fn parse_coefficients(s: &str) -> Result<Coefficients> {
    match s {
        "trivial" => Ok(Coefficients::Trivial),
        "adjoint" => Ok(Coefficients::Adjoint),
        other => Err(Error::Parse(format!(
            "unknown coefficients {other:?}; expected trivial or adjoint"
        ))),
    }
}

impl CochainJson {
    pub fn from_cochain(c: &Cochain) -> Self {
        let terms = c
            .entries()
            .iter()
            .map(|((args, target), v)| CochainTermJson {
                args: args.clone(),
                target: *target,
                c: format_rational(v),
            })
            .collect();
        CochainJson {
            n: c.n(),
            degree: c.degree(),
            coefficients: coefficients_name(c.coefficients()).to_string(),
            terms,
        }
    }

    pub fn to_cochain(&self) -> Result<Cochain> {
        let coefficients = parse_coefficients(&self.coefficients)?;
        let mut c = Cochain::zero(self.n, self.degree, coefficients);
        for t in &self.terms {
            match (coefficients, t.target) {
                (Coefficients::Trivial, Some(k)) => {
                    return Err(Error::InvalidInput(format!(
                        "trivial cochain carries a target e{k}"
                    )))
                }
                (Coefficients::Adjoint, None) => {
                    return Err(Error::InvalidInput(
                        "adjoint cochain term is missing its target".into(),
                    ))
                }
                _ => {}
            }
            c.add_term(&t.args, t.target, parse_rational(&t.c)?)?;
        }
        Ok(c)
    }
}

/// One weight row of a cohomology table. `weight` is absent on the
/// aggregate row reported for non-graded algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRowJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub representatives: Vec<CochainJson>,
}

/// A full per-weight cohomology table for one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReportJson {
    pub algebra: String,
    pub degree: usize,
    pub coefficients: String,
    pub rows: Vec<WeightRowJson>,
    pub total_h: usize,
}

impl CohomologyReportJson {
    /// `with_reps` controls whether representative cocycles are embedded;
    /// dimension rows are always present.
    pub fn from_report(algebra: &str, report: &CohomologyReport, with_reps: bool) -> Self {
        let rows = report
            .weights
            .iter()
            .map(|w| WeightRowJson {
                weight: w.weight,
                dim_cochains: w.dim_cochains,
                dim_cocycles: w.dim_cocycles,
                dim_coboundaries: w.dim_coboundaries,
                dim_h: w.dim_h,
                representatives: if with_reps {
                    w.representatives.iter().map(CochainJson::from_cochain).collect()
                } else {
                    Vec::new()
                },
            })
            .collect();
        CohomologyReportJson {
            algebra: algebra.to_string(),
            degree: report.degree,
            coefficients: coefficients_name(report.coefficients).to_string(),
            rows,
            total_h: report.total_h(),
        }
    }
}
