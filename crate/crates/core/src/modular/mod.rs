//! Replays of the degree-3 and degree-5 modular-equation proofs as canonical
//! form computations in `Q(m)[s]`, plus the series bridge that checks the
//! imported parametrizations against the theta-function expansions.

mod bridge;
mod degree3;
mod degree5;

pub use bridge::{
    check_atom_series, check_param_series, check_param_series_with_branch, eval_at_series,
    ParamCheck, ParamReport, RhoBranch,
};
pub use degree3::{prove_degree3, ParamTable3, DEGREE3_EQUATIONS};
pub use degree5::{printed_polynomials, prove_degree5, ParamTable5, DEGREE5_EQUATIONS};

use thiserror::Error;

use crate::field::{FieldError, Poly, QuadExt, RatFunc};
use crate::series::SeriesError;
use crate::theta::BuilderError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("unknown degree-{degree} proof goal {id:?}")]
    UnknownEquation { degree: u32, id: String },
    #[error("parametrization atom {0} failed its power check")]
    AtomCheck(String),
    #[error("unsupported degree {0}")]
    UnsupportedDegree(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Builder(#[from] BuilderError),
}

/// Outcome of one proof goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofReport {
    pub equation: String,
    pub lhs_canonical: QuadExt,
    pub rhs_canonical: QuadExt,
    pub sides_equal: bool,
    /// Whether the computed common value matches the intermediate printed in
    /// the proof. `None` when nothing was printed for this goal.
    pub paper_form_match: Option<bool>,
    /// The value compared against the printed form (the common value, or its
    /// quotient by the printed prefactor).
    pub computed_form: Option<QuadExt>,
    pub printed_form: Option<QuadExt>,
    pub notes: Vec<String>,
}

impl ProofReport {
    fn new(equation: &str, lhs: QuadExt, rhs: QuadExt) -> Result<Self, ProofError> {
        let sides_equal = lhs.checked_equal(&rhs)?;
        Ok(ProofReport {
            equation: equation.to_string(),
            lhs_canonical: lhs,
            rhs_canonical: rhs,
            sides_equal,
            paper_form_match: None,
            computed_form: None,
            printed_form: None,
            notes: Vec::new(),
        })
    }

    fn compare_printed(&mut self, computed: QuadExt, printed: QuadExt) -> Result<(), ProofError> {
        let matched = computed.checked_equal(&printed)?;
        if !matched {
            self.notes.push(format!(
                "computed {computed} differs from printed {printed}"
            ));
        }
        self.paper_form_match = Some(matched);
        self.computed_form = Some(computed);
        self.printed_form = Some(printed);
        Ok(())
    }
}

/// Accepts `4-6+`, `4-6-` and the typographic minus `4-6−`.
pub(crate) fn normalize_goal(id: &str) -> String {
    let id = id.trim();
    let id = id.strip_prefix("EQ").unwrap_or(id);
    id.replace('−', "-")
}

/// A named element together with the rational function its `2^k`-th power
/// must equal.
pub(crate) struct Radical {
    pub name: &'static str,
    pub value: QuadExt,
    pub power: i32,
    pub target: RatFunc,
}

impl Radical {
    pub fn holds(&self) -> Result<bool, ProofError> {
        let lifted = self.value.pow(self.power)?;
        let target = QuadExt::rational(self.target.clone(), self.value.modulus());
        Ok(lifted.checked_equal(&target)?)
    }
}

pub(crate) fn check_radicals(rads: &[Radical]) -> Result<(), ProofError> {
    for r in rads {
        if !r.holds()? {
            return Err(ProofError::AtomCheck(r.name.to_string()));
        }
    }
    Ok(())
}

pub(crate) fn poly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub(crate) fn rat(num: Poly, den: Poly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `m - c`.
pub(crate) fn m_minus(c: i64) -> Poly {
    poly(&[-c, 1])
}
