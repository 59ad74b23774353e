//! The line-oriented extension description format.
//!
//! ```text
//! # comment
//! field Q                      (or: field F 10007)
//! vertex 1
//! arrow alpha : 5 -> 1
//! newarrow a : 2 -> 1
//! rel I beta*alpha
//! rel J a*b*c*d - alpha*beta
//! limit max_path_length 16
//! ```
//!
//! In a relation, `x*y` means "first y, then x", terms are joined with
//! `+`/`-`, an optional coefficient (integer or `p/q`) precedes a path,
//! and a bare vertex name is its trivial path. Vertex and arrow names
//! share one namespace, so relation text parses unambiguously; a token
//! that is a declared name is always read as a path atom.

use crate::error::{Error, Result};
use crate::extension::{ExtensionSpec, Limits};
use crate::field::{Field, Scalar};
use crate::quiver::{Path, PathLinComb, Quiver};

pub fn parse_spec(text: &str) -> Result<ExtensionSpec> {
    parse_spec_with(text, None)
}

/// Parse with the session field forced, regardless of any `field` line;
/// relation coefficients are read in the chosen field.
pub fn parse_spec_with(text: &str, force_field: Option<Field>) -> Result<ExtensionSpec> {
    let mut field: Option<Field> = force_field;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut new_arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut rels: Vec<(char, usize, Vec<String>)> = Vec::new();
    let mut limits = Limits::default();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let err = |msg: &str| Error::Spec { line, msg: msg.to_string() };
        match toks[0] {
            "field" => {
                if force_field.is_none() {
                    let spec = toks[1..].join("");
                    field = Some(Field::parse(&spec).map_err(|e| Error::Spec {
                        line,
                        msg: e.to_string(),
                    })?);
                }
            }
            "vertex" => {
                if toks.len() != 2 {
                    return Err(err("expected: vertex <name>"));
                }
                vertices.push(toks[1].to_string());
            }
            "arrow" | "newarrow" => {
                if toks.len() != 6 || toks[2] != ":" || toks[4] != "->" {
                    return Err(err("expected: arrow <name> : <src> -> <tgt>"));
                }
                let entry = (toks[1].to_string(), toks[3].to_string(), toks[5].to_string(), line);
                if toks[0] == "arrow" {
                    arrows.push(entry);
                } else {
                    new_arrows.push(entry);
                }
            }
            "rel" => {
                if toks.len() < 3 || (toks[1] != "I" && toks[1] != "J") {
                    return Err(err("expected: rel I|J <linear combination>"));
                }
                let kind = toks[1].chars().next().unwrap();
                rels.push((kind, line, toks[2..].iter().map(|s| s.to_string()).collect()));
            }
            "limit" => {
                if toks.len() != 3 {
                    return Err(err("expected: limit <name> <n>"));
                }
                let n: usize = toks[2]
                    .parse()
                    .map_err(|_| err("limit value must be a nonnegative integer"))?;
                match toks[1] {
                    "max_path_length" => limits.max_path_length = n,
                    "max_tensor_power" => limits.max_tensor_power = n,
                    "max_degree" => limits.max_degree = n,
                    other => {
                        return Err(Error::Spec {
                            line,
                            msg: format!("unknown limit `{other}`"),
                        })
                    }
                }
            }
            other => {
                return Err(Error::Spec {
                    line,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let field = field.unwrap_or(Field::Rational);
    let mut quiver = Quiver::new(vertices.clone());
    let vertex_of = |name: &str, line: usize| -> Result<usize> {
        quiver_vertex(&vertices, name).ok_or(Error::UnknownName { line, name: name.to_string() })
    };
    for (name, src, tgt, line) in &arrows {
        let (s, t) = (vertex_of(src, *line)?, vertex_of(tgt, *line)?);
        quiver.add_arrow(name, s, t);
    }
    quiver.validate().map_err(|e| Error::Spec { line: 0, msg: e.to_string() })?;
    let mut extended = quiver.clone();
    let mut new_arrow_list = Vec::new();
    for (name, src, tgt, line) in &new_arrows {
        let (s, t) = (vertex_of(src, *line)?, vertex_of(tgt, *line)?);
        extended.add_arrow(name, s, t);
        new_arrow_list.push((name.clone(), s, t));
    }
    extended
        .validate()
        .map_err(|e| Error::Spec { line: 0, msg: e.to_string() })?;

    let old_count = quiver.arrows().len();
    let mut i_gens = Vec::new();
    let mut j_gens = Vec::new();
    for (kind, line, toks) in rels {
        let comb = parse_lincomb(&field, &extended, &toks, line)?;
        if kind == 'I' {
            for (p, _) in &comb.terms {
                if p.arrows_in_order().iter().any(|a| *a >= old_count) {
                    return Err(Error::Spec {
                        line,
                        msg: "I relations may not use new arrows".to_string(),
                    });
                }
            }
            i_gens.push(comb);
        } else {
            j_gens.push(comb);
        }
    }
    Ok(ExtensionSpec { field, quiver, i_gens, new_arrows: new_arrow_list, j_gens, limits })
}

fn quiver_vertex(vertices: &[String], name: &str) -> Option<usize> {
    vertices.iter().position(|v| v == name)
}

fn parse_lincomb(
    field: &Field,
    quiver: &Quiver,
    toks: &[String],
    line: usize,
) -> Result<PathLinComb> {
    let mut terms: Vec<(Path, Scalar)> = Vec::new();
    let mut i = 0usize;
    let mut first = true;
    while i < toks.len() {
        // sign
        let mut negative = false;
        let t = &toks[i];
        if t == "+" || t == "-" {
            negative = t == "-";
            i += 1;
        } else if !first && !t.starts_with('-') {
            return Err(Error::Spec {
                line,
                msg: format!("expected + or - before `{t}`"),
            });
        }
        first = false;
        if i >= toks.len() {
            return Err(Error::Spec { line, msg: "dangling sign".to_string() });
        }
        // optional coefficient; declared names win over numerals
        let mut tok = toks[i].as_str();
        if let Some(rest) = tok.strip_prefix('-') {
            negative = !negative;
            tok = rest;
        }
        let mut coeff = field.one();
        if !is_name(quiver, tok) && !tok.contains('*') {
            coeff = parse_scalar(field, tok)
                .ok_or(Error::UnknownName { line, name: tok.to_string() })?;
            i += 1;
            if i >= toks.len() {
                return Err(Error::Spec { line, msg: "coefficient without path".to_string() });
            }
            tok = toks[i].as_str();
        }
        let path = parse_path(quiver, tok, line)?;
        if negative {
            coeff = field.neg(&coeff);
        }
        terms.push((path, coeff));
        i += 1;
    }
    if terms.is_empty() {
        return Err(Error::Spec { line, msg: "empty relation".to_string() });
    }
    PathLinComb::new(field, terms).map_err(|_| Error::InhomogeneousRelation { line })
}

fn is_name(q: &Quiver, tok: &str) -> bool {
    q.vertex_index(tok).is_some() || q.arrow_index(tok).is_some()
}

fn parse_scalar(field: &Field, tok: &str) -> Option<Scalar> {
    if let Some((num, den)) = tok.split_once('/') {
        let n: i64 = num.parse().ok()?;
        let d: i64 = den.parse().ok()?;
        field.from_ratio(n, d).ok()
    } else {
        let n: i64 = tok.parse().ok()?;
        Some(field.from_i64(n))
    }
}

/// `b*a` is the word with `a` traversed first; a bare vertex name is its
/// trivial path.
fn parse_path(q: &Quiver, tok: &str, line: usize) -> Result<Path> {
    if !tok.contains('*') {
        if let Some(v) = q.vertex_index(tok) {
            return Ok(Path::trivial(v));
        }
    }
    let mut arrows: Vec<usize> = Vec::with_capacity(4);
    for name in tok.split('*').rev() {
        let a = q
            .arrow_index(name)
            .ok_or(Error::UnknownName { line, name: name.to_string() })?;
        arrows.push(a);
    }
    Path::from_traversal(q, &arrows).ok_or(Error::Spec {
        line,
        msg: format!("`{tok}` is not a composable path"),
    })
}

/// Canonical text form; `parse_spec(serialize_spec(s))` reproduces `s`.
pub fn serialize_spec(spec: &ExtensionSpec) -> String {
    let mut out = String::new();
    match spec.field {
        Field::Rational => out.push_str("field Q\n"),
        Field::Prime(p) => out.push_str(&format!("field F {p}\n")),
    }
    for v in spec.quiver.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    let extended = spec.extended_quiver();
    for a in spec.quiver.arrows() {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            a.name,
            spec.quiver.vertices()[a.src],
            spec.quiver.vertices()[a.tgt]
        ));
    }
    for (name, src, tgt) in &spec.new_arrows {
        out.push_str(&format!(
            "newarrow {} : {} -> {}\n",
            name,
            spec.quiver.vertices()[*src],
            spec.quiver.vertices()[*tgt]
        ));
    }
    for g in &spec.i_gens {
        out.push_str(&format!("rel I {}\n", g.display(&extended, &spec.field)));
    }
    for g in &spec.j_gens {
        out.push_str(&format!("rel J {}\n", g.display(&extended, &spec.field)));
    }
    out.push_str(&format!("limit max_path_length {}\n", spec.limits.max_path_length));
    out.push_str(&format!("limit max_tensor_power {}\n", spec.limits.max_tensor_power));
    out.push_str(&format!("limit max_degree {}\n", spec.limits.max_degree));
    out
}
