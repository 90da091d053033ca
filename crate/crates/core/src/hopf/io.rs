//! Model files: an `[algebra]` section, a `[hopf]` section, and any number
//! of named `[coaction <name>]` sections. Third parties can load a model
//! from this format without the builder code.
//!
//! ```text
//! [algebra]
//! generators: a b c d
//! complete-to: 6
//! rule: b*a = q*a*b
//! [hopf]
//! delta: a = a (x) a + b (x) c
//! counit: a = 1
//! antipode: a = d
//! [coaction torus]
//! target: torus 1
//! image: a = a (x) t~
//! ```

use super::coaction::Coaction;
use super::presentation::{GenStructure, HopfPresentation};
use super::tensor::TensorElement;
use super::HopfError;
use crate::ncalg::{parse_algebra_section, split_sections, NCPoly, Presentation, RawSection};
use crate::qfield::Scalar;
use std::rc::Rc;

/// Resolves a `target:` line of a coaction section into a Hopf presentation
/// (for example `torus 1`). Kept abstract so this module does not depend on
/// the concrete model builders.
pub type TargetResolver<'a> = dyn Fn(&str) -> Result<Rc<HopfPresentation>, HopfError> + 'a;

pub struct ModelFile {
    pub hopf: Rc<HopfPresentation>,
    /// (section name, target spec, coaction)
    pub coactions: Vec<(String, String, Coaction)>,
}

/// Split a tensor-sum text like `a (x) a + b (x) c` into signed leg pairs,
/// honoring parenthesis depth.
fn split_tensor_sum(value: &str) -> Result<Vec<(bool, String, String)>, String> {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    let bytes = value.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i..].starts_with(b"(x)") {
            cur.push_str("(x)");
            i += 3;
            continue;
        }
        let c = bytes[i] as char;
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            '+' | '-' if depth == 0 && !cur.trim().is_empty() => {
                terms.push((negative, cur.trim().to_string()));
                negative = c == '-';
                cur = String::new();
            }
            _ => cur.push(c),
        }
        i += 1;
    }
    if !cur.trim().is_empty() {
        terms.push((negative, cur.trim().to_string()));
    }
    let mut out = Vec::new();
    for (neg, term) in terms {
        let (l, r) = term
            .split_once("(x)")
            .ok_or_else(|| format!("tensor term '{}' lacks (x)", term))?;
        if r.contains("(x)") {
            return Err(format!("tensor term '{}' has more than two legs", term));
        }
        out.push((neg, l.trim().to_string(), r.trim().to_string()));
    }
    Ok(out)
}

fn parse_tensor(
    left: &Presentation,
    right: &Presentation,
    value: &str,
    line: usize,
) -> Result<Vec<(NCPoly, NCPoly)>, HopfError> {
    let pairs = split_tensor_sum(value).map_err(|message| HopfError::Io { line, message })?;
    let mut out = Vec::new();
    for (neg, l, r) in pairs {
        let lp = left.parse_poly(&l).map_err(|e| HopfError::Io {
            line,
            message: e.to_string(),
        })?;
        let rp = right.parse_poly(&r).map_err(|e| HopfError::Io {
            line,
            message: e.to_string(),
        })?;
        out.push((if neg { lp.neg() } else { lp }, rp));
    }
    Ok(out)
}

fn parse_hopf_section(
    algebra: Presentation,
    section: &RawSection,
    check_cap: usize,
) -> Result<HopfPresentation, HopfError> {
    let n = algebra.n_gens();
    let mut delta: Vec<Option<Vec<(NCPoly, NCPoly)>>> = vec![None; n];
    let mut counit: Vec<Option<Scalar>> = vec![None; n];
    let mut antipode: Vec<Option<NCPoly>> = vec![None; n];
    let mut antipode_inv: Vec<Option<NCPoly>> = vec![None; n];
    let mut grouplikes: Vec<NCPoly> = Vec::new();
    let gen_of = |name: &str, line: usize| -> Result<usize, HopfError> {
        algebra
            .generator_index(name)
            .map(|i| i as usize)
            .ok_or_else(|| HopfError::Io {
                line,
                message: format!("unknown generator '{}'", name),
            })
    };
    for (line, key, value) in &section.lines {
        match key.as_str() {
            "delta" | "counit" | "antipode" | "antipode-inverse" => {
                let (name, rhs) = value.split_once('=').ok_or_else(|| HopfError::Io {
                    line: *line,
                    message: "expected 'gen = ...'".into(),
                })?;
                let i = gen_of(name.trim(), *line)?;
                match key.as_str() {
                    "delta" => delta[i] = Some(parse_tensor(&algebra, &algebra, rhs.trim(), *line)?),
                    "counit" => {
                        counit[i] =
                            Some(crate::qfield::parse_scalar(rhs.trim()).map_err(|e| {
                                HopfError::Io {
                                    line: *line,
                                    message: e.to_string(),
                                }
                            })?)
                    }
                    "antipode" => {
                        antipode[i] = Some(algebra.parse_poly(rhs.trim()).map_err(|e| {
                            HopfError::Io {
                                line: *line,
                                message: e.to_string(),
                            }
                        })?)
                    }
                    _ => {
                        antipode_inv[i] = Some(algebra.parse_poly(rhs.trim()).map_err(|e| {
                            HopfError::Io {
                                line: *line,
                                message: e.to_string(),
                            }
                        })?)
                    }
                }
            }
            "grouplike" => grouplikes.push(algebra.parse_poly(value).map_err(|e| HopfError::Io {
                line: *line,
                message: e.to_string(),
            })?),
            other => {
                return Err(HopfError::Io {
                    line: *line,
                    message: format!("unknown key '{}' in [hopf]", other),
                })
            }
        }
    }
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        gens.push(GenStructure {
            delta: delta[i].clone().ok_or_else(|| HopfError::Io {
                line: 0,
                message: format!("missing delta for generator {}", algebra.gen_names()[i]),
            })?,
            counit: counit[i].clone().ok_or_else(|| HopfError::Io {
                line: 0,
                message: format!("missing counit for generator {}", algebra.gen_names()[i]),
            })?,
            antipode: antipode[i].clone().ok_or_else(|| HopfError::Io {
                line: 0,
                message: format!("missing antipode for generator {}", algebra.gen_names()[i]),
            })?,
        });
    }
    let inv = if antipode_inv.iter().all(|x| x.is_none()) {
        None
    } else {
        Some(
            antipode_inv
                .into_iter()
                .enumerate()
                .map(|(i, x)| {
                    x.ok_or_else(|| HopfError::Io {
                        line: 0,
                        message: format!(
                            "antipode-inverse table incomplete at {}",
                            algebra.gen_names()[i]
                        ),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    HopfPresentation::new(algebra, gens, inv, grouplikes, check_cap)
}

/// Parse a complete model file. Coaction targets are resolved through the
/// supplied resolver.
pub fn parse_model_file(
    text: &str,
    resolve: &TargetResolver,
) -> Result<ModelFile, HopfError> {
    let sections = split_sections(text).map_err(HopfError::Presentation)?;
    let algebra_sec = sections
        .iter()
        .find(|s| s.header == "algebra")
        .ok_or_else(|| HopfError::Io {
            line: 0,
            message: "missing [algebra] section".into(),
        })?;
    let algebra = parse_algebra_section(algebra_sec).map_err(HopfError::Presentation)?;
    let check_cap = algebra.system.certified_cap();
    let hopf_sec = sections
        .iter()
        .find(|s| s.header == "hopf")
        .ok_or_else(|| HopfError::Io {
            line: 0,
            message: "missing [hopf] section".into(),
        })?;
    let hopf = Rc::new(parse_hopf_section(algebra, hopf_sec, check_cap)?);
    let mut coactions = Vec::new();
    for sec in sections.iter().filter(|s| s.header.starts_with("coaction")) {
        let name = sec.header.trim_start_matches("coaction").trim().to_string();
        let target_spec = sec
            .lines
            .iter()
            .find(|(_, k, _)| k == "target")
            .map(|(_, _, v)| v.clone())
            .ok_or_else(|| HopfError::Io {
                line: 0,
                message: format!("[coaction {}] missing target", name),
            })?;
        let target = resolve(&target_spec)?;
        let mut images: Vec<Option<TensorElement>> = vec![None; hopf.algebra.n_gens()];
        for (line, key, value) in &sec.lines {
            if key == "target" {
                continue;
            }
            if key != "image" {
                return Err(HopfError::Io {
                    line: *line,
                    message: format!("unknown key '{}' in coaction section", key),
                });
            }
            let (gname, rhs) = value.split_once('=').ok_or_else(|| HopfError::Io {
                line: *line,
                message: "expected 'gen = ...'".into(),
            })?;
            let gi = hopf
                .algebra
                .generator_index(gname.trim())
                .ok_or_else(|| HopfError::Io {
                    line: *line,
                    message: format!("unknown generator '{}'", gname.trim()),
                })? as usize;
            let pairs = parse_tensor(&hopf.algebra, &target.algebra, rhs.trim(), *line)?;
            let mut t = TensorElement::zero();
            for (l, r) in &pairs {
                let ln = hopf
                    .system()
                    .normal_form(l, hopf.cap())
                    .map_err(HopfError::Rewrite)?;
                let rn = target
                    .system()
                    .normal_form(r, target.cap())
                    .map_err(HopfError::Rewrite)?;
                t.add_pair(&ln, &rn, &Scalar::one());
            }
            images[gi] = Some(t);
        }
        let images = images
            .into_iter()
            .map(|x| x.unwrap_or_else(TensorElement::zero))
            .collect();
        let check_cap = hopf.cap().min(3);
        let co = Coaction::new(Rc::clone(&hopf), target, images, check_cap)?;
        coactions.push((name, target_spec, co));
    }
    Ok(ModelFile { hopf, coactions })
}

/// Canonical rendering of a model plus named coactions.
pub fn render_model_file(
    hopf: &HopfPresentation,
    coactions: &[(String, String, &Coaction)],
) -> String {
    let mut out = hopf.algebra.render_algebra_section();
    out.push_str(&hopf.render_hopf_section());
    for (name, target_spec, co) in coactions {
        out.push_str(&format!("[coaction {}]\n", name));
        out.push_str(&format!("target: {}\n", target_spec));
        for (i, gname) in hopf.algebra.gen_names().iter().enumerate() {
            out.push_str(&format!(
                "image: {} = {}\n",
                gname,
                co.images()[i].render(hopf.algebra.gen_names(), co.target.algebra.gen_names())
            ));
        }
    }
    out
}
