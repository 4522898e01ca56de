//! Points files: one projective point per line, coordinates separated by
//! `:`, each an exact scalar (`3`, `-1/2`). `#` starts a comment.

use apolar_core::{parse_form, Error, FieldSpec, Monomial, ProjectivePoint, Ring, Scalar};

use crate::error::CliError;

pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, Error> {
    let f = parse_form(text, 0, field, Ring::Primal)?;
    Ok(f.coefficient(&Monomial::one(0)))
}

pub fn parse_points(text: &str, field: FieldSpec, path: &str) -> Result<Vec<ProjectivePoint>, CliError> {
    let mut points = Vec::new();
    let mut width = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |source| CliError::PointsFile { path: path.to_string(), line: i + 1, source };
        let coords = line
            .split(':')
            .map(|c| parse_scalar(c, field))
            .collect::<Result<Vec<_>, _>>()
            .map_err(at)?;
        let expected = *width.get_or_insert(coords.len());
        if coords.len() != expected {
            return Err(at(Error::Parse {
                position: 0,
                message: format!("expected {expected} coordinates, found {}", coords.len()),
            }));
        }
        points.push(ProjectivePoint::new(coords).map_err(at)?);
    }
    Ok(points)
}

pub fn read_points(path: &str, field: FieldSpec) -> Result<Vec<ProjectivePoint>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::ReadInput { path: path.to_string(), message: e.to_string() })?;
    parse_points(&text, field, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    const QQ: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn parses_comments_and_fractions() {
        let pts = parse_points("# two points\n1:1\n\n  2 : -2/3  # scaled\n", QQ, "p").unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].to_string(), "1:1");
        assert_eq!(pts[1].to_string(), "1:-1/3");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_points("1:1\n1:x0\n", QQ, "p").unwrap_err();
        assert!(matches!(err, CliError::PointsFile { line: 2, .. }));
        assert_eq!(err.exit_code(), 2);
        let err = parse_points("1:1\n1:2:3\n", QQ, "p").unwrap_err();
        assert!(matches!(err, CliError::PointsFile { line: 2, .. }));
        let err = parse_points("0:0\n", QQ, "p").unwrap_err();
        assert_eq!(err.kind(), "ZeroPoint");
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn prime_field_scalars() {
        let f7 = FieldSpec::PrimeField(7);
        let pts = parse_points("1:-1\n", f7, "p").unwrap();
        assert_eq!(pts[0].to_string(), "1:6");
        assert_eq!(parse_scalar("1/7", f7), Err(Error::DivisionByZero));
    }
}
