//! Analysis orchestration and the deterministic JSON report.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::HomologyTable;
use crate::error::Result;
use crate::extension::{build_extension, boundedness_report, CriterionOutcome, Extension, ExtensionSpec};
use crate::field::Field;
use crate::homology::{gldim_bound_checks, jz_dimension_report};
use crate::module::{Nilpotency, Side};
use crate::presentation::{extract_presentation, verify_round_trip, PresentationInput};
use crate::resolution::PdOutcome;
use crate::splitness::{splitness_report, ComplementOutcome};
use crate::verdict::Verdict;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Command {
    Check,
    Homology,
    Gldim,
    Split,
    Present,
    All,
}

impl Command {
    pub fn parse(name: &str) -> Option<Command> {
        Some(match name {
            "check" => Command::Check,
            "homology" => Command::Homology,
            "gldim" => Command::Gldim,
            "split" => Command::Split,
            "present" => Command::Present,
            "all" => Command::All,
            _ => return None,
        })
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub spec_digest: String,
    pub field: Field,
    pub fixture: Option<String>,
    pub dimensions: Dimensions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundedness: Option<BoundednessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitness: Option<SplitnessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gldim: Option<GldimSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationSection>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Dimensions {
    pub dim_base: usize,
    pub dim_ext: usize,
    pub dim_quotient: usize,
    pub length_index: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct BoundednessSection {
    pub tensor_nilpotent: Verdict,
    pub nilpotency_index: Option<usize>,
    pub nilpotency_note: String,
    pub criterion: String,
    pub finite_pd_env: Verdict,
    pub pd_env: Option<usize>,
    pub left_projective: bool,
    pub right_projective: bool,
    pub left_criterion_holds: bool,
    pub right_criterion_holds: bool,
    pub left_bounded: Verdict,
    pub right_bounded: Verdict,
}

#[derive(Serialize, Clone, Debug)]
pub struct ComplementEntry {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_basis: Option<Vec<String>>,
    pub detail: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct SplitnessSection {
    pub left: ComplementEntry,
    pub right: ComplementEntry,
    pub verdict: Verdict,
}

#[derive(Serialize, Clone, Debug)]
pub struct HomologySection {
    pub max_degree: usize,
    pub base: HomologyTable,
    pub ext: HomologyTable,
    pub relative: HomologyTable,
    pub relative_vanishing_from: Option<usize>,
    pub injection_ok: Option<bool>,
    pub equality_ok: Option<bool>,
    pub bounded_side: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct GldimSection {
    pub gldim_base: Option<usize>,
    pub gldim_ext: Option<usize>,
    pub pd_env: Option<usize>,
    pub nilpotency_index: Option<usize>,
    pub base_bound_holds: Option<bool>,
    pub ext_bound_holds: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Serialize, Clone, Debug)]
pub struct PresentationSection {
    pub generators: Vec<String>,
    pub new_arrows: Vec<String>,
    pub relations: Vec<String>,
    pub rebuilt_dim: usize,
    pub round_trip_ok: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Exit status: 0 all certified, 1 some refutation, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        let mut verdicts: Vec<Verdict> = Vec::new();
        if let Some(b) = &self.boundedness {
            verdicts.extend([b.tensor_nilpotent, b.finite_pd_env, b.left_bounded, b.right_bounded]);
        }
        if let Some(s) = &self.splitness {
            verdicts.push(s.verdict);
        }
        if let Some(g) = &self.gldim {
            verdicts.push(g.verdict);
        }
        if let Some(h) = &self.homology {
            if h.injection_ok == Some(false) || h.equality_ok == Some(false) {
                verdicts.push(Verdict::Refuted);
            }
            if h.relative_vanishing_from.is_none() {
                verdicts.push(Verdict::Inconclusive);
            }
        }
        if let Some(p) = &self.presentation {
            verdicts.push(if p.round_trip_ok { Verdict::Certified } else { Verdict::Refuted });
        }
        if verdicts.contains(&Verdict::Refuted) {
            1
        } else if verdicts.contains(&Verdict::Inconclusive) {
            2
        } else {
            0
        }
    }

    /// Short human-readable summary, one line per verdict.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let d = &self.dimensions;
        out.push_str(&format!(
            "field: {}   dim B = {}, dim A = {}, dim A/B = {}, length index = {}\n",
            self.field, d.dim_base, d.dim_ext, d.dim_quotient, d.length_index
        ));
        if let Some(b) = &self.boundedness {
            out.push_str(&format!(
                "tensor_nilpotent: {:?}{}\n",
                b.tensor_nilpotent,
                match b.nilpotency_index {
                    Some(n) => format!(" (index {n})"),
                    None => format!(" ({})", b.nilpotency_note),
                }
            ));
            out.push_str(&format!("criterion: {}\n", b.criterion));
            out.push_str(&format!(
                "finite_pd_over_enveloping: {:?}{}\n",
                b.finite_pd_env,
                b.pd_env.map(|r| format!(" (pd {r})")).unwrap_or_default()
            ));
            out.push_str(&format!(
                "projective: left {} / right {}\n",
                b.left_projective, b.right_projective
            ));
            out.push_str(&format!("left_bounded: {:?}\n", b.left_bounded));
            out.push_str(&format!("right_bounded: {:?}\n", b.right_bounded));
        }
        if let Some(s) = &self.splitness {
            out.push_str(&format!(
                "split: {:?} (left: {}, right: {})\n",
                s.verdict, s.left.kind, s.right.kind
            ));
        }
        if let Some(h) = &self.homology {
            out.push_str(&format!("H(B,B) dims: {:?}\n", h.base.dims));
            out.push_str(&format!("H(A,A) dims: {:?}\n", h.ext.dims));
            out.push_str(&format!("H(A|B,A) dims: {:?}\n", h.relative.dims));
            if let Some(n0) = h.relative_vanishing_from {
                out.push_str(&format!("relative vanishing from degree {n0}\n"));
            }
            if let Some(ok) = h.injection_ok {
                out.push_str(&format!("dim H(B,B) <= dim H(A,A) in the window: {ok}\n"));
            }
            if let Some(ok) = h.equality_ok {
                out.push_str(&format!("dim H(B,B) == dim H(A,A) beyond the window: {ok}\n"));
            }
        }
        if let Some(g) = &self.gldim {
            out.push_str(&format!(
                "gldim: B = {}, A = {}, pd_env = {}, nilpotency index = {}\n",
                opt(g.gldim_base),
                opt(g.gldim_ext),
                opt(g.pd_env),
                opt(g.nilpotency_index)
            ));
            out.push_str(&format!(
                "gldim bounds: base {} / ext {} -> {:?}\n",
                opt_b(g.base_bound_holds),
                opt_b(g.ext_bound_holds),
                g.verdict
            ));
        }
        if let Some(p) = &self.presentation {
            out.push_str(&format!(
                "presentation: {} new arrows, {} relations, round trip {}\n",
                p.new_arrows.len(),
                p.relations.len(),
                if p.round_trip_ok { "ok" } else { "failed" }
            ));
        }
        out
    }
}

fn opt(v: Option<usize>) -> String {
    v.map(|n| n.to_string()).unwrap_or_else(|| "?".into())
}

fn opt_b(v: Option<bool>) -> String {
    v.map(|n| n.to_string()).unwrap_or_else(|| "?".into())
}

/// Run a command against a parsed spec and assemble the report.
pub fn run(command: Command, spec: ExtensionSpec, spec_text: &str, fixture: Option<String>) -> Result<Report> {
    let ext = build_extension(spec)?;
    let mut report = Report {
        tool: "quext".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        spec_digest: format!("{:x}", Sha256::digest(spec_text.as_bytes())),
        field: ext.field(),
        fixture,
        dimensions: Dimensions {
            dim_base: ext.dim_base(),
            dim_ext: ext.dim_ext(),
            dim_quotient: ext.dim_ext() - ext.dim_base(),
            length_index: ext.length_index(),
        },
        boundedness: None,
        splitness: None,
        homology: None,
        gldim: None,
        presentation: None,
    };
    let wants = |c: Command| command == c || command == Command::All;
    let mut bounded_data: Option<(PdOutcome, Option<usize>, Option<Side>)> = None;
    if wants(Command::Check) || wants(Command::Homology) || wants(Command::Gldim) {
        let b = boundedness_report(&ext)?;
        let bounded_side = if b.left.bounded == Verdict::Certified {
            Some(Side::Left)
        } else if b.right.bounded == Verdict::Certified {
            Some(Side::Right)
        } else {
            None
        };
        bounded_data = Some((b.pd_env, b.nilpotency.index, bounded_side));
        if wants(Command::Check) {
            report.boundedness = Some(boundedness_section(&ext, &b));
        }
    }
    if wants(Command::Check) || wants(Command::Split) {
        let s = splitness_report(&ext)?;
        report.splitness = Some(SplitnessSection {
            left: complement_entry(&s.left),
            right: complement_entry(&s.right),
            verdict: s.verdict,
        });
    }
    if wants(Command::Homology) {
        let (pd_env, _, side) = bounded_data.expect("boundedness ran");
        let _ = pd_env;
        let max_deg = ext.spec.limits.max_degree;
        let jz = jz_dimension_report(&ext, max_deg, side)?;
        report.homology = Some(HomologySection {
            max_degree: max_deg,
            base: jz.base_table.clone(),
            ext: jz.ext_table.clone(),
            relative: jz.relative_table.clone(),
            relative_vanishing_from: jz.n0,
            injection_ok: jz.injection_ok,
            equality_ok: jz.equality_ok,
            bounded_side: side.map(|s| s.name().to_string()),
        });
    }
    if wants(Command::Gldim) {
        let (pd_env, index, _) = bounded_data.expect("boundedness ran");
        let g = gldim_bound_checks(&ext, pd_env, index)?;
        report.gldim = Some(GldimSection {
            gldim_base: g.gldim_base,
            gldim_ext: g.gldim_ext,
            pd_env: g.pd_env,
            nilpotency_index: g.nilpotency_index,
            base_bound_holds: g.base_bound_holds,
            ext_bound_holds: g.ext_bound_holds,
            verdict: g.verdict,
        });
    }
    if wants(Command::Present) {
        report.presentation = Some(presentation_section(&ext)?);
    }
    Ok(report)
}

fn boundedness_section(ext: &Extension, b: &crate::extension::BoundednessReport) -> BoundednessSection {
    let criterion = match &b.nilpotency.criterion {
        CriterionOutcome::Holds { cycles_checked } => {
            format!("holds ({cycles_checked} cycles, all with interrupters)")
        }
        CriterionOutcome::Fails { witness } => {
            format!("fails (cycle {} has no interrupter)", witness.display(ext.extended_quiver()))
        }
        CriterionOutcome::Inconclusive { cycles_checked, bound } => {
            format!("inconclusive ({cycles_checked} cycles up to bound {bound})")
        }
    };
    let nilpotency_note = match &b.nilpotency.direct {
        Nilpotency::Nilpotent(n) => format!("vanishes at power {n}"),
        Nilpotency::NotUpTo { bound, .. } => format!("nonzero powers up to bound {bound}"),
    };
    BoundednessSection {
        tensor_nilpotent: b.nilpotency.verdict,
        nilpotency_index: b.nilpotency.index,
        nilpotency_note,
        criterion,
        finite_pd_env: b.pd_env_verdict,
        pd_env: b.pd_env.finite(),
        left_projective: b.left.projective,
        right_projective: b.right.projective,
        left_criterion_holds: b.left.criterion_holds,
        right_criterion_holds: b.right.criterion_holds,
        left_bounded: b.left.bounded,
        right_bounded: b.right.bounded,
    }
}

fn complement_entry(o: &ComplementOutcome) -> ComplementEntry {
    match o {
        ComplementOutcome::NoComplement { rank, augmented_rank } => ComplementEntry {
            kind: "no_complement".into(),
            complement_basis: None,
            detail: format!("linear system infeasible (rank {rank} < augmented rank {augmented_rank})"),
        },
        ComplementOutcome::ModuleComplement { candidates_checked } => ComplementEntry {
            kind: "module_complement".into(),
            complement_basis: None,
            detail: format!("module complements exist; {candidates_checked} slice candidates are not ideals"),
        },
        ComplementOutcome::IdealComplement { labels, .. } => ComplementEntry {
            kind: "ideal_complement".into(),
            complement_basis: Some(labels.clone()),
            detail: "two-sided ideal complement verified".into(),
        },
    }
}

fn presentation_section(ext: &Extension) -> Result<PresentationSection> {
    let f = ext.field();
    // default generating set: the classes of the new arrows
    let gen_vecs: Vec<_> = ext
        .spec
        .new_arrow_range()
        .map(|a| {
            // the class of the arrow itself
            let qf = ext.extended_quiver();
            let p = crate::quiver::Path::of_arrow(qf, a);
            ext.eval_path(&p)
        })
        .collect();
    let emb = ext.embedding();
    let input = PresentationInput {
        algebra: ext.algebra(),
        base: &ext.base,
        i_gens: &ext.spec.i_gens,
        embedding: &emb,
        generators: &gen_vecs,
        limits: ext.spec.limits,
    };
    let extracted = extract_presentation(&input)?;
    let rebuilt = verify_round_trip(&input, &extracted)?;
    let qf2 = extracted.spec.extended_quiver();
    Ok(PresentationSection {
        generators: ext
            .spec
            .new_arrow_range()
            .map(|a| ext.extended_quiver().arrows()[a].name.clone())
            .collect(),
        new_arrows: extracted
            .spec
            .new_arrows
            .iter()
            .map(|(n, s, t)| {
                format!(
                    "{} : {} -> {}",
                    n,
                    extracted.spec.quiver.vertices()[*s],
                    extracted.spec.quiver.vertices()[*t]
                )
            })
            .collect(),
        relations: extracted
            .spec
            .j_gens
            .iter()
            .map(|g| g.display(&qf2, &f))
            .collect(),
        rebuilt_dim: rebuilt.dim_ext(),
        round_trip_ok: true,
    })
}
