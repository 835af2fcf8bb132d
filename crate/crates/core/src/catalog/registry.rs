use std::sync::OnceLock;

use super::expr::Expr;
use super::parse::parse;
use super::CatalogError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn suffix(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Whether a record is written with `Pi` atoms or with `psi` and powers of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    Pi,
    Psi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRecord {
    /// `EQ<label>` with a `+`/`-` suffix for sign variants.
    pub id: String,
    /// Equation label in the source, e.g. `11-9`.
    pub source: &'static str,
    pub sign_variant: Option<Sign>,
    pub form: Form,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl IdentityRecord {
    /// Builds a record from DSL text for both sides.
    pub fn from_text(
        source: &'static str,
        sign_variant: Option<Sign>,
        form: Form,
        lhs: &str,
        rhs: &str,
    ) -> Result<Self, CatalogError> {
        let mut id = format!("EQ{source}");
        if let Some(s) = sign_variant {
            id.push(s.suffix());
        }
        Ok(IdentityRecord {
            id,
            source,
            sign_variant,
            form,
            lhs: parse(lhs)?,
            rhs: parse(rhs)?,
        })
    }
}

struct Entry {
    label: &'static str,
    form: Form,
    lhs: &'static str,
    rhs: &'static str,
}

/// `{s}` is the upper sign and `{t}` the lower one.
const SIGNED: &[&str] = &["11-9", "11-10", "21-6", "21-7"];

const ENTRIES: &[Entry] = &[
    Entry {
        label: "1-1",
        form: Form::Pi,
        lhs: "Pi(q)^2/(Pi(q^2)*Pi(q^4)) - Pi(q^2)^2/Pi(q^4)^2",
        rhs: "4",
    },
    Entry {
        label: "1-6",
        form: Form::Pi,
        lhs: "Pi(q^3)^2 + 3*Pi(q)*Pi(q^9)",
        rhs: "sqrt(Pi(q)*Pi(q^9))*(Pi(q) + 3*Pi(q^9))",
    },
    Entry {
        label: "11-2",
        form: Form::Pi,
        lhs: "Pi(q^2)*Pi(q^3)^2/(Pi(q^6)*Pi(q)^2)",
        rhs: "(Pi(q^2) - Pi(q^6))/(Pi(q^2) + 3*Pi(q^6))",
    },
    Entry {
        label: "11-5",
        form: Form::Pi,
        lhs: "Pi(q^2)*Pi(q^3)^4",
        rhs: "Pi(q^6)*(Pi(q^2) - Pi(q^6))^3*(Pi(q^2) + 3*Pi(q^6))",
    },
    Entry {
        label: "11-6",
        form: Form::Pi,
        lhs: "Pi(q^6)*Pi(q)^4",
        rhs: "Pi(q^2)*(Pi(q^2) - Pi(q^6))*(Pi(q^2) + 3*Pi(q^6))^3",
    },
    Entry {
        label: "11-4",
        form: Form::Pi,
        lhs: "sqrt(Pi(q^2)*Pi(q^6))*(Pi(q)^2 - 3*Pi(q^3)^2)",
        rhs: "sqrt(Pi(q)*Pi(q^3))*(Pi(q^2)^2 + 3*Pi(q^6)^2)",
    },
    Entry {
        label: "11-7",
        form: Form::Pi,
        lhs: "Pi(q^2)^2*(Pi(q)^4 + 18*Pi(q)^2*Pi(q^3)^2 - 27*Pi(q^3)^4)",
        rhs: "Pi(q)*Pi(q^3)*(Pi(q)^4 + 16*Pi(q^2)^4)",
    },
    Entry {
        label: "11-8",
        form: Form::Pi,
        lhs: "Pi(q^6)^2*(Pi(q)^4 - 6*Pi(q)^2*Pi(q^3)^2 - 3*Pi(q^3)^4)",
        rhs: "Pi(q)*Pi(q^3)*(Pi(q^3)^4 + 16*Pi(q^6)^4)",
    },
    Entry {
        label: "11-9",
        form: Form::Pi,
        lhs: "Pi(q)*Pi(q^3)*(Pi(q)^2 {s} 4*Pi(q^2)^2)^2",
        rhs: "Pi(q^2)^2*(Pi(q) {t} Pi(q^3))*(Pi(q) {s} 3*Pi(q^3))^3",
    },
    Entry {
        label: "11-10",
        form: Form::Pi,
        lhs: "Pi(q)*Pi(q^3)*(Pi(q^3)^2 {s} 4*Pi(q^6)^2)^2",
        rhs: "Pi(q^6)^2*(Pi(q) {t} Pi(q^3))^3*(Pi(q) {s} 3*Pi(q^3))",
    },
    Entry {
        label: "21-1",
        form: Form::Psi,
        lhs: "psi(q^2)^2*psi(q^3)^4/(psi(q^6)^2*psi(q)^4)",
        rhs: "(psi(q^2)^2 - q*psi(q^6)^2)/(psi(q^2)^2 + 3*q*psi(q^6)^2)",
    },
    Entry {
        label: "21-2",
        form: Form::Psi,
        lhs: "psi(q^6)^2/psi(q^2)^2*psi(q)^8/psi(q^2)^8",
        rhs: "(1 - q*psi(q^6)^2/psi(q^2)^2)*(1 + 3*q*psi(q^6)^2/psi(q^2)^2)^3",
    },
    Entry {
        label: "21-3",
        form: Form::Psi,
        lhs: "psi(q^2)*psi(q^6)*(psi(q)^4 - 3*q*psi(q^3)^4)",
        rhs: "psi(q)*psi(q^3)*(psi(q^2)^4 + 3*q^2*psi(q^6)^4)",
    },
    Entry {
        label: "21-4",
        form: Form::Psi,
        lhs: "psi(q^3)^2/psi(q)^2*(1 + 16*q*psi(q^2)^8/psi(q)^8)",
        rhs: "psi(q^2)^4/psi(q)^4*(1 + 18*q*psi(q^3)^4/psi(q)^4 - 27*q^2*psi(q^3)^8/psi(q)^8)",
    },
    Entry {
        label: "21-5",
        form: Form::Psi,
        lhs: "psi(q)^2/psi(q^3)^2*(1 + 16*q^3*psi(q^6)^8/psi(q^3)^8)",
        rhs: "psi(q^6)^4/psi(q^3)^4*(psi(q)^8/psi(q^3)^8 - 6*q*psi(q)^4/psi(q^3)^4 - 3*q^2)",
    },
    // Right-hand prefactor is psi^4(q^2)/psi^4(q); as printed the denominator
    // is psi^2(q), which does not hold (see `PRINTED_21_6_RHS`).
    Entry {
        label: "21-6",
        form: Form::Psi,
        lhs: "psi(q^3)^2/psi(q)^2*(1 {s} 4*q^{1/2}*psi(q^2)^4/psi(q)^4)^2",
        rhs: "psi(q^2)^4/psi(q)^4*(1 {t} q^{1/2}*psi(q^3)^2/psi(q)^2)*(1 {s} 3*q^{1/2}*psi(q^3)^2/psi(q)^2)^3",
    },
    Entry {
        label: "21-7",
        form: Form::Psi,
        lhs: "psi(q)^2/psi(q^3)^2*(1 {s} 4*q^{3/2}*psi(q^6)^4/psi(q^3)^4)^2",
        rhs: "psi(q^6)^4/psi(q^3)^4*(psi(q)^2/psi(q^3)^2 {t} q^{1/2})^3*(psi(q)^2/psi(q^3)^2 {s} 3*q^{1/2})",
    },
    Entry {
        label: "1-7",
        form: Form::Pi,
        lhs: "Pi(q^2)*Pi(q^5)^4*(16*Pi(q^10)^4 - Pi(q^5)^4)",
        rhs: "Pi(q^10)^3*(5*Pi(q^10) - Pi(q^2))*(Pi(q^2) - Pi(q^10))^5",
    },
    Entry {
        label: "1-2",
        form: Form::Pi,
        lhs: "Pi(q^10)*Pi(q)^4*(16*Pi(q^2)^4 - Pi(q)^4)",
        rhs: "Pi(q^2)^3*(5*Pi(q^10) - Pi(q^2))^5*(Pi(q^2) - Pi(q^10))",
    },
    Entry {
        label: "1-3",
        form: Form::Pi,
        lhs: "Pi(q)*Pi(q^5)*(16*Pi(q^2)^4 - Pi(q)^4)^2",
        rhs: "Pi(q^2)^4*(5*Pi(q^5) - Pi(q))^5*(Pi(q^5) - Pi(q))",
    },
    Entry {
        label: "1-4",
        form: Form::Pi,
        lhs: "Pi(q)*Pi(q^5)*(16*Pi(q^10)^4 - Pi(q^5)^4)^2",
        rhs: "Pi(q^10)^4*(5*Pi(q^5) - Pi(q))*(Pi(q^5) - Pi(q))^5",
    },
    Entry {
        label: "1-5",
        form: Form::Pi,
        lhs: "(Pi(q)*Pi(q^10) - Pi(q^2)*Pi(q^5))^2",
        rhs: "Pi(q^2)*Pi(q^10)*(Pi(q^5) - Pi(q))*(5*Pi(q^5) - Pi(q))",
    },
    Entry {
        label: "3-1",
        form: Form::Psi,
        lhs: "psi(q^2)^2/psi(q^10)^2*psi(q^5)^8/psi(q^10)^8*(16*q^5 - psi(q^5)^8/psi(q^10)^8)",
        rhs: "(5*q^2 - psi(q^2)^2/psi(q^10)^2)*(psi(q^2)^2/psi(q^10)^2 - q^2)^5",
    },
    Entry {
        label: "3-2",
        form: Form::Psi,
        lhs: "psi(q^10)^2/psi(q^2)^2*psi(q)^8/psi(q^2)^8*(16*q - psi(q)^8/psi(q^2)^8)",
        rhs: "(5*q^2*psi(q^10)^2/psi(q^2)^2 - 1)^5*(1 - q^2*psi(q^10)^2/psi(q^2)^2)",
    },
    Entry {
        label: "3-3",
        form: Form::Psi,
        lhs: "psi(q^5)^2/psi(q)^2*(16*q*psi(q^2)^8/psi(q)^8 - 1)^2",
        rhs: "psi(q^2)^8/psi(q)^8*(5*q*psi(q^5)^2/psi(q)^2 - 1)^5*(q*psi(q^5)^2/psi(q)^2 - 1)",
    },
    Entry {
        label: "3-4",
        form: Form::Psi,
        lhs: "psi(q)^2/psi(q^5)^2*(16*q^5*psi(q^10)^8/psi(q^5)^8 - 1)^2",
        rhs: "psi(q^10)^8/psi(q^5)^8*(5*q - psi(q)^2/psi(q^5)^2)*(q - psi(q)^2/psi(q^5)^2)^5",
    },
    Entry {
        label: "3-5",
        form: Form::Psi,
        lhs: "(q*psi(q)^2/psi(q^5)^2 - psi(q^2)^2/psi(q^10)^2)^2",
        rhs: "psi(q^2)^2/psi(q^10)^2*(q - psi(q)^2/psi(q^5)^2)*(5*q - psi(q)^2/psi(q^5)^2)",
    },
];

/// The right-hand side of the `21-6` sign pair exactly as printed, kept
/// so the misprint stays checkable.
pub const PRINTED_21_6_RHS: &str =
    "psi(q^2)^4/psi(q)^2*(1 {t} q^{1/2}*psi(q^3)^2/psi(q)^2)*(1 {s} 3*q^{1/2}*psi(q^3)^2/psi(q)^2)^3";

/// Fills the `{s}`/`{t}` placeholders for one sign variant.
pub fn instantiate(template: &str, sign: Sign) -> String {
    let (s, t) = match sign {
        Sign::Plus => ("+", "-"),
        Sign::Minus => ("-", "+"),
    };
    template.replace("{s}", s).replace("{t}", t)
}

fn build() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    for e in ENTRIES {
        let record = |sign: Option<Sign>| {
            let (lhs, rhs) = match sign {
                Some(s) => (instantiate(e.lhs, s), instantiate(e.rhs, s)),
                None => (e.lhs.to_string(), e.rhs.to_string()),
            };
            IdentityRecord::from_text(e.label, sign, e.form, &lhs, &rhs)
                .unwrap_or_else(|err| panic!("registry entry {}: {err}", e.label))
        };
        if SIGNED.contains(&e.label) {
            out.push(record(Some(Sign::Plus)));
            out.push(record(Some(Sign::Minus)));
        } else {
            out.push(record(None));
        }
    }
    out
}

/// All registered identities, in source order.
pub fn identities() -> &'static [IdentityRecord] {
    static REGISTRY: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

/// `EQ1-1`, `1-1`, `EQ11-9-` and `EQ11-9−` all resolve.
pub fn normalize_id(id: &str) -> String {
    let id = id.trim().replace('−', "-");
    if id.starts_with("EQ") {
        id
    } else {
        format!("EQ{id}")
    }
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord, CatalogError> {
    let key = normalize_id(id);
    identities()
        .iter()
        .find(|r| r.id == key)
        .ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))
}

/// One line per record: id, source label and form.
pub fn list_identities() -> Vec<(&'static str, &'static str, Form)> {
    identities()
        .iter()
        .map(|r| (r.id.as_str(), r.source, r.form))
        .collect()
}

/// Tree-level valuations of both sides of a record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityAudit {
    pub id: String,
    pub lhs: super::expr::ValuationBound,
    pub rhs: super::expr::ValuationBound,
}

impl HomogeneityAudit {
    pub fn consistent(&self) -> bool {
        self.lhs.compatible(self.rhs)
    }
}

pub fn audit_homogeneity(record: &IdentityRecord) -> HomogeneityAudit {
    HomogeneityAudit {
        id: record.id.clone(),
        lhs: record.lhs.valuation_bound(),
        rhs: record.rhs.valuation_bound(),
    }
}
