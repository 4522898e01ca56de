//! JSON report schema. Field scalars are always exact strings; counts,
//! degrees and integer ranks are JSON numbers.

use serde::Serialize;

use crate::error::{CliError, EXIT_OK};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub field: String,
    pub input: Input,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Results>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points_file: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Results {
    Annihilator(AnnihilatorResults),
    RankBound(RankBoundResults),
    Monomial(MonomialResults),
    Certify(CertifyResults),
    Verify(VerifyResults),
}

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    pub degree: u32,
    pub polynomial: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnnihilatorResults {
    pub form: String,
    pub nvars: usize,
    pub degree: u32,
    pub hilbert_function: Vec<usize>,
    pub length: usize,
    pub generator_degrees: Vec<u32>,
    pub generators: Vec<Generator>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankBoundResults {
    #[serde(flatten)]
    pub annihilator: AnnihilatorResults,
    pub max_generator_degree: u32,
    pub bound_exact: String,
    pub bound_ceiling: u64,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonomialResults {
    pub exponents: Vec<u32>,
    pub form: String,
    pub cactus_rank: u64,
    pub smoothable_rank: u64,
    pub waring_rank: Option<u64>,
    pub apolar_ideal: Option<Vec<String>>,
    pub ci_degree: Option<u64>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBound {
    pub hilbert_function: Vec<usize>,
    pub length: usize,
    pub max_generator_degree: u32,
    pub bound_exact: String,
    pub bound_ceiling: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub points: Vec<String>,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyResults {
    pub form: String,
    pub rank: u64,
    pub cactus_rank: u64,
    pub smoothable_rank: u64,
    pub root_of_unity: String,
    pub lower_bound: LowerBound,
    pub decomposition: Decomposition,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCheck {
    pub polynomial: String,
    pub annihilates: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyResults {
    pub form: String,
    pub apolar: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<GeneratorCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<String>,
}

impl ErrorReport {
    pub fn from_error(e: &CliError) -> Self {
        ErrorReport { kind: e.kind().to_string(), message: e.to_string(), exit_code: e.exit_code(), hint: e.hint() }
    }
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(EXIT_OK, |e| e.exit_code)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
