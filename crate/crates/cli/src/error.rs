use serde_json::{json, Value};
use tropigusa::igusa::IgusaError;
use tropigusa::metgraph::MetGraphError;
use tropigusa::redtype::RedTypeError;
use tropigusa::torsion::TorsionError;
use tropigusa::tropfun::TropFunError;
use tropigusa::valfield::{FieldError, ParseError};

/// Input errors exit with status 2, domain errors with status 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{message}")]
    Input { code: &'static str, message: String },
    #[error("{message}")]
    Domain { code: &'static str, message: String },
}

impl CliError {
    pub fn input(code: &'static str, message: impl Into<String>) -> Self {
        CliError::Input {
            code,
            message: message.into(),
        }
    }

    fn domain(code: &'static str, message: impl ToString) -> Self {
        CliError::Domain {
            code,
            message: message.to_string(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Input { code, .. } | CliError::Domain { code, .. } => code,
        }
    }

    pub fn exit_status(&self) -> u8 {
        match self {
            CliError::Input { .. } => 2,
            CliError::Domain { .. } => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.code(), "message": self.to_string() })
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::input("input.scalar", e.to_string())
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::NotPrime(_) => CliError::input("input.not_prime", e.to_string()),
        }
    }
}

impl From<IgusaError> for CliError {
    fn from(e: IgusaError) -> Self {
        let code = match e {
            IgusaError::ZeroLeadingCoefficient => "igusa.zero_leading_coefficient",
            IgusaError::DegenerateCurve => "igusa.degenerate_curve",
            IgusaError::NotARoot => "igusa.not_a_root",
            IgusaError::RootNotSimple => "igusa.root_not_simple",
        };
        CliError::domain(code, e)
    }
}

impl From<RedTypeError> for CliError {
    fn from(e: RedTypeError) -> Self {
        let code = match e {
            RedTypeError::NoCaseMatches => "redtype.no_case_matches",
            RedTypeError::Ambiguous(_) => "redtype.ambiguous",
            RedTypeError::NonPositiveThickness { .. } => "redtype.non_positive_thickness",
            RedTypeError::InfiniteThickness(_) => "redtype.infinite_thickness",
            RedTypeError::InfiniteDiscriminant => "redtype.infinite_discriminant",
            RedTypeError::WrongArity(..) => "redtype.wrong_arity",
        };
        CliError::domain(code, e)
    }
}

impl From<MetGraphError> for CliError {
    fn from(e: MetGraphError) -> Self {
        let code = match e {
            MetGraphError::EmptyGraph => "metgraph.empty_graph",
            MetGraphError::BadEndpoint { .. } => "metgraph.bad_endpoint",
            MetGraphError::NonPositiveLength(_) => "metgraph.non_positive_length",
            MetGraphError::Disconnected => "metgraph.disconnected",
            MetGraphError::NonCommensurableLengths { .. } => "metgraph.non_commensurable_lengths",
            MetGraphError::UnknownVertex(_) => "metgraph.unknown_vertex",
            MetGraphError::NonZeroDegree(_) => "metgraph.non_zero_degree",
            MetGraphError::SizeMismatch { .. } => "metgraph.size_mismatch",
            MetGraphError::NonPositiveUnit => "metgraph.non_positive_unit",
        };
        CliError::domain(code, e)
    }
}

impl From<TropFunError> for CliError {
    fn from(e: TropFunError) -> Self {
        let code = match e {
            TropFunError::Graph(inner) => return inner.into(),
            TropFunError::NotPrincipal => "tropfun.not_principal",
            TropFunError::NotUniform => "tropfun.not_uniform",
            TropFunError::GraphMismatch => "tropfun.graph_mismatch",
            TropFunError::NonIntegerSlope(_) => "tropfun.non_integer_slope",
            TropFunError::WrongHeightCount { .. } => "tropfun.wrong_height_count",
            TropFunError::UnknownEdge(_) => "tropfun.unknown_edge",
        };
        CliError::domain(code, e)
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        let code = match e {
            TorsionError::Trop(inner) => return inner.into(),
            TorsionError::NonZeroDegree(_) => "torsion.non_zero_degree",
            TorsionError::CycleTooShort(_) => "torsion.cycle_too_short",
            TorsionError::WrongLength { .. } => "torsion.wrong_length",
            TorsionError::NotPrincipal(_) => "torsion.not_principal",
            TorsionError::E1NotMultipleOf3(_) => "torsion.e1_not_multiple_of_3",
            TorsionError::IndexOutOfRange { .. } => "torsion.index_out_of_range",
            TorsionError::InvalidConfig { .. } => "torsion.invalid_config",
        };
        CliError::domain(code, e)
    }
}
