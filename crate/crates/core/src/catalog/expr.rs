use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::series::Coef;

/// Expression tree over the theta atoms, with `q = t^4` understood.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// `Pi_{q^k}`
    Pi(u32),
    /// `psi(q^k)`
    Psi(u32),
    /// `phi(q^k)`
    Phi(u32),
    /// `q^r`, with `4r` an integer.
    QPow(Coef),
    Const(Coef),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
}

/// Exponent bound derived from the tree alone. Sums of terms with equal
/// valuation may cancel, so they only give a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationBound {
    Exact(i64),
    AtLeast(i64),
    Unknown,
}

impl ValuationBound {
    /// Whether two bounds can describe the same series.
    pub fn compatible(self, other: ValuationBound) -> bool {
        use ValuationBound::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a == b,
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) => b <= a,
            _ => true,
        }
    }
}

impl Expr {
    pub fn pi(k: u32) -> Expr {
        Expr::Pi(k)
    }

    pub fn psi(k: u32) -> Expr {
        Expr::Psi(k)
    }

    pub fn phi(k: u32) -> Expr {
        Expr::Phi(k)
    }

    pub fn int(c: i64) -> Expr {
        Expr::Const(Coef::from_integer(c.into()))
    }

    pub fn q_pow(r: Coef) -> Expr {
        Expr::QPow(r)
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, e: i64) -> Expr {
        Expr::Pow(Box::new(a), e)
    }

    pub fn sqrt(a: Expr) -> Expr {
        Expr::Sqrt(Box::new(a))
    }

    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                vec![a, b]
            }
            Expr::Pow(a, _) | Expr::Sqrt(a) => vec![a],
            _ => Vec::new(),
        }
    }

    pub(crate) fn kind_name(&self) -> &'static str {
        match self {
            Expr::Pi(_) => "Pi",
            Expr::Psi(_) => "psi",
            Expr::Phi(_) => "phi",
            Expr::QPow(_) => "q^",
            Expr::Const(_) => "const",
            Expr::Add(..) => "+",
            Expr::Sub(..) => "-",
            Expr::Mul(..) => "*",
            Expr::Div(..) => "/",
            Expr::Pow(..) => "^",
            Expr::Sqrt(_) => "sqrt",
        }
    }

    /// Largest nome power `k` among the theta atoms, 0 if there are none.
    pub fn max_nome(&self) -> u32 {
        match self {
            Expr::Pi(k) | Expr::Psi(k) | Expr::Phi(k) => *k,
            _ => self.children().iter().map(|c| c.max_nome()).max().unwrap_or(0),
        }
    }

    /// Number of `Pi` atoms, counted left to right.
    pub fn pi_sites(&self) -> usize {
        match self {
            Expr::Pi(_) => 1,
            _ => self.children().iter().map(|c| c.pi_sites()).sum(),
        }
    }

    /// Copy of the tree with the `index`-th `Pi` atom replaced by `Pi(k)`.
    pub fn with_pi_at(&self, index: usize, k: u32) -> Expr {
        let mut seen = 0;
        self.replace_pi(index, k, &mut seen)
    }

    fn replace_pi(&self, index: usize, k: u32, seen: &mut usize) -> Expr {
        let mut go = |e: &Expr| Box::new(e.replace_pi(index, k, seen));
        match self {
            Expr::Pi(j) => {
                let hit = *seen == index;
                *seen += 1;
                Expr::Pi(if hit { k } else { *j })
            }
            Expr::Add(a, b) => {
                let a = go(a);
                Expr::Add(a, go(b))
            }
            Expr::Sub(a, b) => {
                let a = go(a);
                Expr::Sub(a, go(b))
            }
            Expr::Mul(a, b) => {
                let a = go(a);
                Expr::Mul(a, go(b))
            }
            Expr::Div(a, b) => {
                let a = go(a);
                Expr::Div(a, go(b))
            }
            Expr::Pow(a, e) => Expr::Pow(go(a), *e),
            Expr::Sqrt(a) => Expr::Sqrt(go(a)),
            leaf => leaf.clone(),
        }
    }

    /// Valuation in `t` read off the tree, without expanding anything.
    pub fn valuation_bound(&self) -> ValuationBound {
        use ValuationBound::*;
        match self {
            Expr::Pi(k) => Exact(*k as i64),
            Expr::Psi(_) | Expr::Phi(_) => Exact(0),
            Expr::QPow(r) => Exact((r * Coef::from_integer(4.into())).to_integer().try_into().unwrap_or(0)),
            Expr::Const(c) if c.is_zero() => Unknown,
            Expr::Const(_) => Exact(0),
            Expr::Add(a, b) | Expr::Sub(a, b) => match (a.valuation_bound(), b.valuation_bound()) {
                (Exact(x), Exact(y)) if x != y => Exact(x.min(y)),
                (Exact(x) | AtLeast(x), Exact(y) | AtLeast(y)) => AtLeast(x.min(y)),
                _ => Unknown,
            },
            Expr::Mul(a, b) => match (a.valuation_bound(), b.valuation_bound()) {
                (Exact(x), Exact(y)) => Exact(x + y),
                (Exact(x) | AtLeast(x), Exact(y) | AtLeast(y)) => AtLeast(x + y),
                _ => Unknown,
            },
            Expr::Div(a, b) => match (a.valuation_bound(), b.valuation_bound()) {
                (Exact(x), Exact(y)) => Exact(x - y),
                (AtLeast(x), Exact(y)) => AtLeast(x - y),
                _ => Unknown,
            },
            Expr::Pow(a, e) => match a.valuation_bound() {
                Exact(x) => Exact(x * e),
                AtLeast(x) if *e > 0 => AtLeast(x * e),
                _ => Unknown,
            },
            Expr::Sqrt(a) => match a.valuation_bound() {
                Exact(x) => Exact(x.div_euclid(2)),
                AtLeast(x) => AtLeast(x.div_euclid(2)),
                Unknown => Unknown,
            },
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Pow(..) => 3,
            Expr::Const(c) if c.is_negative() => 1,
            _ => 4,
        }
    }
}

fn write_qarg(f: &mut fmt::Formatter<'_>, name: &str, k: u32) -> fmt::Result {
    if k == 1 {
        write!(f, "{name}(q)")
    } else {
        write!(f, "{name}(q^{k})")
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Coef) -> fmt::Result {
    if c.denom() == &BigInt::one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn wrapped(e: &Expr, parens: bool) -> String {
    if parens {
        format!("({e})")
    } else {
        e.to_string()
    }
}

/// Prints in the DSL accepted by [`super::parse`]; parsing the output gives
/// back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Pi(k) => write_qarg(f, "Pi", *k),
            Expr::Psi(k) => write_qarg(f, "psi", *k),
            Expr::Phi(k) => write_qarg(f, "phi", *k),
            Expr::QPow(r) if r.is_one() => write!(f, "q"),
            Expr::QPow(r) if r.is_integer() => write!(f, "q^{}", r.numer()),
            Expr::QPow(r) => write!(f, "q^{{{}/{}}}", r.numer(), r.denom()),
            Expr::Const(c) => write_rational(f, c),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let p = self.precedence();
                let op = self.kind_name();
                let left = wrapped(a, a.precedence() < p);
                let mut right = wrapped(b, b.precedence() <= p);
                // keep `x / 3` from fusing into the literal `x/3`-style rational
                if matches!(self, Expr::Div(..)) && right.starts_with(|c: char| c.is_ascii_digit()) {
                    right = format!("({right})");
                }
                if p == 1 {
                    write!(f, "{left} {op} {right}")
                } else {
                    write!(f, "{left}{op}{right}")
                }
            }
            Expr::Pow(a, e) => {
                let atomic = a.precedence() == 4 && !matches!(**a, Expr::QPow(_) | Expr::Const(_));
                write!(f, "{}^{}", wrapped(a, !atomic), e)
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}
