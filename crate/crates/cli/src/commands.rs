use apolar_core::{
    ci_degree, generator_degree_bound, hilbert_function, is_in_annihilator, minimal_generators,
    monomial_apolar_ci, monomial_form, monomial_rank, monomial_rank_certificate, parse_form,
    poly::max_variable_index, verify_apolar_ideal, waring_fit, Error, FieldSpec, Form, GradedIdeal,
    HilbertData, Ring, WaringDecomposition, WaringFit,
};

use crate::args::{Command, GlobalArgs};
use crate::error::CliError;
use crate::points::read_points;
use crate::report::*;

type Outcome = Result<Results, CliError>;

/// Runs one subcommand. Failures are folded into the report's `error`.
pub fn run(command: &Command, global: &GlobalArgs) -> Report {
    let mut report = Report {
        command: command.name().to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        field: global.field.clone(),
        input: Input::default(),
        results: None,
        error: None,
    };
    match execute(command, global, &mut report) {
        Ok(results) => report.results = Some(results),
        Err(e) => report.error = Some(ErrorReport::from_error(&e)),
    }
    report
}

fn execute(command: &Command, global: &GlobalArgs, report: &mut Report) -> Outcome {
    let input = &mut report.input;
    match command {
        Command::Annihilator { form } | Command::RankBound { form } => {
            input.form = Some(form.clone());
            let field: FieldSpec = global.field.parse()?;
            report.field = field.to_string();
            let nvars = resolve_nvars(global.nvars, [(form.as_str(), Ring::Primal)])?;
            input.nvars = Some(nvars);
            let f = parse_form(form, nvars, field, Ring::Primal)?;
            if matches!(command, Command::Annihilator { .. }) {
                let hilbert = hilbert_function(&f)?;
                let gens = minimal_generators(&f)?;
                Ok(Results::Annihilator(annihilator_results(&f, &hilbert, &gens)))
            } else {
                rank_bound(&f)
            }
        }
        Command::Monomial { exponents } => {
            input.exponents = Some(exponents.clone());
            let field: FieldSpec = global.field.parse()?;
            report.field = field.to_string();
            monomial(exponents, field)
        }
        Command::Certify { n, d } => {
            input.n = Some(*n);
            input.d = Some(*d);
            let field: FieldSpec = global.field.parse()?;
            report.field = field.to_string();
            certify(*n, *d, field)
        }
        Command::Verify { form, ideal, points } => {
            input.form = Some(form.clone());
            let generators: Option<Vec<&str>> = ideal.as_deref().map(split_ideal);
            input.ideal = generators.as_ref().map(|g| g.iter().map(|s| s.to_string()).collect());
            input.points_file = points.clone();
            let field: FieldSpec = global.field.parse()?;
            report.field = field.to_string();
            let texts = std::iter::once((form.as_str(), Ring::Primal))
                .chain(generators.iter().flatten().map(|g| (*g, Ring::Dual)));
            let nvars = resolve_nvars(global.nvars, texts)?;
            input.nvars = Some(nvars);
            let f = parse_form(form, nvars, field, Ring::Primal)?;
            match (generators, points) {
                (Some(gens), _) => verify_ideal(&f, &gens),
                (None, Some(path)) => verify_points(&f, path),
                (None, None) => unreachable!("clap requires --ideal or --points"),
            }
        }
    }
}

fn split_ideal(text: &str) -> Vec<&str> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn resolve_nvars<'a>(
    given: Option<usize>,
    texts: impl IntoIterator<Item = (&'a str, Ring)>,
) -> Result<usize, Error> {
    if let Some(n) = given {
        return Ok(n);
    }
    let mut nvars = 1;
    for (text, ring) in texts {
        if let Some(i) = max_variable_index(text, ring)? {
            nvars = nvars.max(i + 1);
        }
    }
    Ok(nvars)
}

fn annihilator_results(f: &Form, hilbert: &HilbertData, gens: &GradedIdeal) -> AnnihilatorResults {
    AnnihilatorResults {
        form: f.to_string(),
        nvars: f.nvars(),
        degree: hilbert.form_degree,
        hilbert_function: hilbert.values.clone(),
        length: hilbert.length,
        generator_degrees: gens.degrees(),
        generators: gens
            .generators()
            .iter()
            .map(|g| Generator { degree: g.degree().unwrap_or(0), polynomial: g.to_string() })
            .collect(),
    }
}

fn rank_bound(f: &Form) -> Outcome {
    let r = generator_degree_bound(f)?;
    Ok(Results::RankBound(RankBoundResults {
        annihilator: annihilator_results(f, &r.hilbert, &r.generators),
        max_generator_degree: r.max_generator_degree,
        bound_exact: r.bound_exact.to_string(),
        bound_ceiling: r.bound_ceiling,
        notes: r.notes,
    }))
}

fn monomial(exponents: &[u32], field: FieldSpec) -> Outcome {
    let data = monomial_rank(exponents)?;
    let form = monomial_form(exponents, field)?;
    let mut notes = Vec::new();
    if data.exponents != exponents {
        notes.push("zero exponents dropped and the rest sorted increasingly".to_string());
    }
    let (apolar_ideal, degree) = match monomial_apolar_ci(exponents, field) {
        Ok(ci) => {
            let degree = ci_degree(&ci)?.degree;
            (Some(ci.generators().iter().map(ToString::to_string).collect()), Some(degree))
        }
        Err(Error::TooFewVariables) => {
            notes.push("one variable remains: F is a pure power of rank 1".to_string());
            (None, None)
        }
        Err(e) => return Err(e.into()),
    };
    if data.waring_rank.is_none() {
        notes.push("Waring rank is only given when all exponents are equal".to_string());
    }
    Ok(Results::Monomial(MonomialResults {
        exponents: data.exponents,
        form: form.to_string(),
        cactus_rank: data.cactus_rank,
        smoothable_rank: data.smoothable_rank,
        waring_rank: data.waring_rank,
        apolar_ideal,
        ci_degree: degree,
        notes,
    }))
}

fn decomposition(dec: &WaringDecomposition) -> Decomposition {
    Decomposition {
        points: dec.points.iter().map(ToString::to_string).collect(),
        coefficients: dec.coefficients.iter().map(ToString::to_string).collect(),
    }
}

fn certify(n: usize, d: u32, field: FieldSpec) -> Outcome {
    let cert = monomial_rank_certificate(n, d, field)?;
    if cert.decomposition.expand() != cert.form {
        return Err(Error::CertificateFailed("re-expansion differs from the form".to_string()).into());
    }
    let lb = &cert.lower_bound;
    Ok(Results::Certify(CertifyResults {
        form: cert.form.to_string(),
        rank: cert.rank,
        cactus_rank: cert.rank,
        smoothable_rank: cert.rank,
        root_of_unity: field.primitive_root_of_unity(d as u64 + 1)?.to_string(),
        lower_bound: LowerBound {
            hilbert_function: lb.hilbert.values.clone(),
            length: lb.length,
            max_generator_degree: lb.max_generator_degree,
            bound_exact: lb.bound_exact.to_string(),
            bound_ceiling: lb.bound_ceiling,
        },
        decomposition: decomposition(&cert.decomposition),
        verified: true,
    }))
}

fn verify_ideal(f: &Form, texts: &[&str]) -> Outcome {
    let gens = texts
        .iter()
        .map(|t| parse_form(t, f.nvars(), f.field(), Ring::Dual))
        .collect::<Result<Vec<_>, _>>()?;
    let checks = gens
        .iter()
        .map(|g| Ok(GeneratorCheck { polynomial: g.to_string(), annihilates: is_in_annihilator(g, f)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    let ideal = GradedIdeal::new(f.nvars(), f.field(), gens)?;
    Ok(Results::Verify(VerifyResults {
        form: f.to_string(),
        apolar: verify_apolar_ideal(&ideal, f)?,
        ideal: Some(checks),
        decomposition: None,
        points: None,
    }))
}

fn verify_points(f: &Form, path: &str) -> Outcome {
    let pts = read_points(path, f.field())?;
    let fit = waring_fit(f, &pts)?;
    let (apolar, dec) = match &fit {
        WaringFit::Decomposition(d) => (true, Some(decomposition(d))),
        WaringFit::Infeasible => (false, None),
    };
    Ok(Results::Verify(VerifyResults {
        form: f.to_string(),
        apolar,
        ideal: None,
        decomposition: dec,
        points: Some(pts.iter().map(ToString::to_string).collect()),
    }))
}
