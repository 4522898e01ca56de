//! Plain-text rendering of a [`Report`].

use std::fmt::Write;

use crate::report::*;

fn generators(out: &mut String, gens: &[Generator]) {
    let _ = writeln!(out, "minimal generators of F⊥ ({}):", gens.len());
    for g in gens {
        let _ = writeln!(out, "  [{}] {}", g.degree, g.polynomial);
    }
}

fn annihilator(out: &mut String, field: &str, a: &AnnihilatorResults) {
    let plural = if a.nvars == 1 { "" } else { "s" };
    let _ = writeln!(out, "F = {} over {field} ({} variable{plural}, degree {})", a.form, a.nvars, a.degree);
    let h: Vec<String> = a.hilbert_function.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "Hilbert function: {}", h.join(" "));
    let _ = writeln!(out, "length: {}", a.length);
    generators(out, &a.generators);
}

fn decomposition(out: &mut String, d: &Decomposition) {
    for (p, c) in d.points.iter().zip(&d.coefficients) {
        let _ = writeln!(out, "  {c} at ({p})");
    }
}

/// Human-readable summary; errors render as a single `error:` line plus an
/// optional hint.
pub fn render(report: &Report) -> String {
    let mut out = String::new();
    if let Some(e) = &report.error {
        let _ = writeln!(out, "error [{}]: {}", e.kind, e.message);
        if let Some(h) = &e.hint {
            let _ = writeln!(out, "hint: {h}");
        }
        return out;
    }
    let field = report.field.as_str();
    match report.results.as_ref().expect("results or error") {
        Results::Annihilator(a) => annihilator(&mut out, field, a),
        Results::RankBound(r) => {
            annihilator(&mut out, field, &r.annihilator);
            let _ = writeln!(out, "max generator degree: {}", r.max_generator_degree);
            let _ = writeln!(out, "cactus rank >= {} (so >= {})", r.bound_exact, r.bound_ceiling);
            for n in &r.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        Results::Monomial(m) => {
            let _ = writeln!(out, "F = {}", m.form);
            let _ = writeln!(out, "cactus rank = smoothable rank = {}", m.cactus_rank);
            if let Some(r) = m.waring_rank {
                let _ = writeln!(out, "Waring rank = {r}");
            }
            if let Some(ideal) = &m.apolar_ideal {
                let _ = writeln!(out, "apolar ideal: ({})", ideal.join(", "));
            }
            for n in &m.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        Results::Certify(c) => {
            let _ = writeln!(out, "F = {} over {field}", c.form);
            let _ = writeln!(out, "rank = cactus rank = smoothable rank = {}", c.rank);
            let _ = writeln!(
                out,
                "lower bound: length {} / degree {} = {}",
                c.lower_bound.length, c.lower_bound.max_generator_degree, c.lower_bound.bound_exact
            );
            let _ = writeln!(out, "decomposition on {} points (root of unity {}):", c.decomposition.points.len(), c.root_of_unity);
            decomposition(&mut out, &c.decomposition);
        }
        Results::Verify(v) => {
            let _ = writeln!(out, "F = {} over {field}", v.form);
            let _ = writeln!(out, "apolar: {}", v.apolar);
            for g in v.ideal.iter().flatten() {
                let verdict = if g.annihilates { "annihilates F" } else { "does not annihilate F" };
                let _ = writeln!(out, "  {}: {verdict}", g.polynomial);
            }
            if let Some(d) = &v.decomposition {
                let _ = writeln!(out, "decomposition:");
                decomposition(&mut out, d);
            } else if let Some(p) = &v.points {
                let _ = writeln!(out, "F is not a combination of powers at the {} points", p.len());
            }
        }
    }
    out
}
