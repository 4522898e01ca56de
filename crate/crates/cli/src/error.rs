use apolar_core::field::smallest_prime_with_root_of_unity;
use apolar_core::Error;

/// Everything a subcommand can fail with.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {message}")]
    ReadInput { path: String, message: String },
    #[error("{path}, line {line}: {source}")]
    PointsFile { path: String, line: usize, source: Error },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CERTIFICATE: i32 = 4;

impl CliError {
    fn core(&self) -> Option<&Error> {
        match self {
            CliError::Core(e) | CliError::PointsFile { source: e, .. } => Some(e),
            CliError::ReadInput { .. } => None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.core() {
            None => EXIT_PARSE,
            Some(Error::Parse { .. } | Error::VariableOutOfRange { .. } | Error::DivisionByZero) => EXIT_PARSE,
            Some(Error::CertificateFailed(_)) => EXIT_CERTIFICATE,
            Some(_) => EXIT_DOMAIN,
        }
    }

    /// Stable machine-readable name of the failure.
    pub fn kind(&self) -> &'static str {
        let Some(e) = self.core() else { return "ReadInput" };
        match e {
            Error::Parse { .. } => "Parse",
            Error::NotPrime(_) => "NotPrime",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::ArityMismatch(..) => "ArityMismatch",
            Error::RingMismatch => "RingMismatch",
            Error::VariableOutOfRange { .. } => "VariableOutOfRange",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::NonHomogeneous => "NonHomogeneous",
            Error::ZeroForm => "ZeroForm",
            Error::ZeroPoint => "ZeroPoint",
            Error::NoRootOfUnity { .. } => "NoRootOfUnity",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyIdeal => "EmptyIdeal",
            Error::TooFewVariables => "TooFewVariables",
            Error::NotMonomialPowers => "NotMonomialPowers",
            Error::AllZeroExponents => "AllZeroExponents",
            Error::DuplicatePoints => "DuplicatePoints",
            Error::CertificateFailed(_) => "CertificateFailed",
            Error::Overflow(_) => "Overflow",
        }
    }

    pub fn hint(&self) -> Option<String> {
        match self.core()? {
            Error::NoRootOfUnity { order, .. } => {
                smallest_prime_with_root_of_unity(*order).map(|p| format!("try Fp:{p}"))
            }
            Error::NonHomogeneous => Some("all terms must have the same degree".to_string()),
            _ => None,
        }
    }
}
