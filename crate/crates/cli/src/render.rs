use std::io::{self, Write};

use prym_core::Error;
use serde::Serialize;

use crate::report::*;
use crate::Format;

type Out<'a> = &'a mut dyn Write;

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(format!("writing output: {e}"))
}

fn json<T: Serialize>(value: &T, out: Out) -> Result<(), Error> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io_error)?;
    writeln!(out).map_err(io_error)
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>, out: Out) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io_error)?;
    for r in rows {
        w.write_record(&r).map_err(io_error)?;
    }
    w.flush().map_err(io_error)
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn reps_text(reps: &[RepInfo]) -> String {
    join(&reps.iter().map(|r| r.index).collect::<Vec<_>>(), ";")
}

pub fn table(r: &TableReport, format: Format, out: Out) -> Result<(), Error> {
    match format {
        Format::Json => json(r, out),
        Format::Csv => {
            let mut header = vec!["character".to_string(), "degree".to_string()];
            header.extend(r.classes.iter().map(|c| c.representative.clone()));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows = r
                .characters
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut row = vec![i.to_string(), c.degree.to_string()];
                    row.extend(c.values.iter().cloned());
                    row
                })
                .collect();
            csv_rows(&header, rows, out)
        }
        Format::Text => text_table(r, out).map_err(io_error),
    }
}

fn text_table(r: &TableReport, out: Out) -> io::Result<()> {
    writeln!(out, "{} of order {}", r.group.spec, r.group.order)?;
    writeln!(out, "\nclasses")?;
    for (i, c) in r.classes.iter().enumerate() {
        writeln!(
            out,
            "  {i:>3}  {:<30} size {:<6} order {}",
            c.representative, c.size, c.element_order
        )?;
    }
    writeln!(out, "\ncharacters")?;
    for (i, c) in r.characters.iter().enumerate() {
        writeln!(out, "  X{i:<3} [{}]", join(&c.values, ", "))?;
    }
    writeln!(out, "\nrational irreducible representations")?;
    for w in &r.rational {
        writeln!(
            out,
            "  {:>3}  degree {:<4} field degree {:<3} orbit {:?}  traces [{}]",
            w.index,
            w.degree,
            w.field_degree,
            w.orbit,
            join(&w.trace_values, ", ")
        )?;
    }
    Ok(())
}

pub fn scan(r: &ScanReport, format: Format, out: Out) -> Result<(), Error> {
    match format {
        Format::Json => json(r, out),
        Format::Csv => {
            let rows = r
                .triples
                .iter()
                .map(|t| {
                    vec![
                        t.subgroup.order.to_string(),
                        t.subgroup.index.to_string(),
                        reps_text(&t.reps),
                        join(&t.reps.iter().map(|x| x.degree).collect::<Vec<_>>(), ";"),
                        t.reps[0].field_degree.to_string(),
                        t.hecke.d.to_string(),
                        t.hecke.b.to_string(),
                        t.hecke.b1.to_string(),
                        t.hecke.q.to_string(),
                        t.hecke.deg_k.to_string(),
                        t.hecke.c.to_string(),
                        t.identities_pass.to_string(),
                    ]
                })
                .collect();
            csv_rows(
                &[
                    "subgroup_order",
                    "subgroup_index",
                    "reps",
                    "degrees",
                    "field_degree",
                    "d",
                    "b",
                    "b1",
                    "q",
                    "deg_k",
                    "c",
                    "identities_pass",
                ],
                rows,
                out,
            )
        }
        Format::Text => text_scan(r, out).map_err(io_error),
    }
}

fn text_scan(r: &ScanReport, out: Out) -> io::Result<()> {
    writeln!(
        out,
        "{} of order {}: {} passing triples",
        r.group.spec,
        r.group.order,
        r.triples.len()
    )?;
    if !r.complete {
        writeln!(
            out,
            "subgroup enumeration stopped at its work cap; the list is partial"
        )?;
    }
    writeln!(
        out,
        "  |H|  index  reps      n   [L:Q]  d    b      b1     q    degK  identities"
    )?;
    for t in &r.triples {
        writeln!(
            out,
            "  {:<4} {:<6} {:<9} {:<3} {:<6} {:<4} {:<6} {:<6} {:<4} {:<5} {}",
            t.subgroup.order,
            t.subgroup.index,
            reps_text(&t.reps),
            t.reps[0].degree,
            t.reps[0].field_degree,
            t.hecke.d,
            t.hecke.b,
            t.hecke.b1,
            t.hecke.q,
            t.hecke.deg_k,
            if t.identities_pass { "ok" } else { "FAILED" }
        )?;
    }
    Ok(())
}

fn signature_text(s: &SignatureRow) -> String {
    let parts: Vec<String> = s
        .entries
        .iter()
        .map(|e| format!("({},{})", e.class, e.m))
        .collect();
    format!("[0; {}]", parts.join(", "))
}

pub fn triple(r: &TripleReport, format: Format, out: Out) -> Result<(), Error> {
    match format {
        Format::Json => json(r, out),
        Format::Csv => match &r.signatures {
            Some(sigs) => {
                let rows = sigs
                    .iter()
                    .map(|s| {
                        vec![
                            signature_text(s),
                            s.branch_points.to_string(),
                            s.genus_x.to_string(),
                            s.dim_p.to_string(),
                            s.fixed_points.to_string(),
                            s.realizable.clone(),
                            s.crosscheck.to_string(),
                            s.certified.to_string(),
                        ]
                    })
                    .collect();
                csv_rows(
                    &[
                        "signature",
                        "branch_points",
                        "genus_x",
                        "dim_p",
                        "fixed_points",
                        "realizable",
                        "crosscheck",
                        "certified",
                    ],
                    rows,
                    out,
                )
            }
            None => {
                let rows = r
                    .admissible
                    .iter()
                    .map(|a| {
                        vec![
                            a.label.clone(),
                            a.class_order.to_string(),
                            a.class_size.to_string(),
                            a.a.to_string(),
                            a.mixed_cosets.to_string(),
                            join(&a.fixed_dims, ";"),
                            a.generates.to_string(),
                        ]
                    })
                    .collect();
                csv_rows(
                    &[
                        "label",
                        "class_order",
                        "class_size",
                        "A",
                        "mixed_cosets",
                        "fixed_dims",
                        "generates",
                    ],
                    rows,
                    out,
                )
            }
        },
        Format::Text => text_triple(r, out).map_err(io_error),
    }
}

fn text_triple(r: &TripleReport, out: Out) -> io::Result<()> {
    writeln!(
        out,
        "{} of order {}, subgroup of order {} and index {} generated by {}",
        r.group.spec,
        r.group.order,
        r.subgroup.order,
        r.subgroup.index,
        join(&r.subgroup.generators, ", ")
    )?;
    let reps: Vec<String> = r
        .reps
        .iter()
        .map(|w| {
            format!(
                "#{} (degree {}, field degree {})",
                w.index, w.degree, w.field_degree
            )
        })
        .collect();
    writeln!(out, "representations: {}", reps.join(", "))?;
    if !r.hypothesis.pass {
        writeln!(out, "hypothesis FAILS")?;
        for f in &r.hypothesis.failures {
            writeln!(out, "  {f:?}")?;
        }
    } else {
        writeln!(out, "hypothesis holds")?;
    }
    if let Some(h) = &r.hecke {
        writeln!(
            out,
            "double cosets {}, b = {}, b1 = {}, q = {}, deg K = {}, c = {}",
            h.d, h.b, h.b1, h.q, h.deg_k, h.c
        )?;
        let failed: Vec<&str> = r
            .identities
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        if failed.is_empty() {
            writeln!(out, "all {} matrix identities hold", r.identities.len())?;
        } else {
            writeln!(out, "identities FAILED: {}", failed.join(", "))?;
        }
    }
    if !r.admissible.is_empty() {
        writeln!(
            out,
            "\n  class  order  size   A     double cosets  fixed dims  generates"
        )?;
        for a in &r.admissible {
            writeln!(
                out,
                "  {:<6} {:<6} {:<6} {:<5} {:<14} {:<11} {}{}",
                a.label,
                a.class_order,
                a.class_size,
                a.a,
                a.mixed_cosets,
                join(&a.fixed_dims, ","),
                a.generates,
                if a.a == 0 { "  admissible" } else { "" }
            )?;
        }
    }
    if let Some(sigs) = &r.signatures {
        writeln!(out, "\n{} signatures", sigs.len())?;
        for s in sigs {
            writeln!(
                out,
                "  {:<40} g(X) = {:<4} dim P = {:<4} realizable {:<8} {}",
                signature_text(s),
                s.genus_x,
                s.dim_p,
                s.realizable,
                if s.certified {
                    "certified"
                } else {
                    "not certified"
                }
            )?;
            if let Some(w) = &s.witness {
                writeln!(out, "      witness {}", w.join(" "))?;
            }
        }
    }
    if let Some(note) = &r.note {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

pub fn verify(r: &VerifyReport, format: Format, out: Out) -> Result<(), Error> {
    match format {
        Format::Json => json(r, out),
        Format::Csv => {
            let rows = r
                .cases
                .iter()
                .flat_map(|c| {
                    c.checks.iter().map(move |k| {
                        vec![
                            c.case.clone(),
                            k.name.clone(),
                            k.pass.to_string(),
                            k.divergence.to_string(),
                            k.detail.clone(),
                        ]
                    })
                })
                .collect();
            csv_rows(
                &["case", "check", "pass", "divergence", "detail"],
                rows,
                out,
            )
        }
        Format::Text => text_verify(r, out).map_err(io_error),
    }
}

fn text_verify(r: &VerifyReport, out: Out) -> io::Result<()> {
    for c in &r.cases {
        writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.case)?;
        for k in &c.checks {
            if k.divergence {
                writeln!(out, "  DIVERGES {}: {}", k.name, k.detail)?;
            } else if !k.pass {
                writeln!(out, "  FAIL {}: {}", k.name, k.detail)?;
            }
        }
    }
    Ok(())
}
