use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

/// The two integer parameters a relation template may refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    S,
    P,
}

impl Param {
    pub fn from_name(name: &str) -> Option<Param> {
        match name {
            "s" => Some(Param::S),
            "p" => Some(Param::P),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Param::S => "s",
            Param::P => "p",
        }
    }
}

/// Integer arithmetic used in exponents and summation bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExpoExpr {
    Int(u64),
    Param(Param),
    /// A summation index bound by an enclosing `sum`.
    Index(String),
    Add(Box<ExpoExpr>, Box<ExpoExpr>),
    Sub(Box<ExpoExpr>, Box<ExpoExpr>),
    Mul(Box<ExpoExpr>, Box<ExpoExpr>),
    Pow(Box<ExpoExpr>, Box<ExpoExpr>),
}

/// Polynomial expressions of the relation language.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    /// An identifier in polynomial position. Resolved at instantiation: a
    /// declared variable, else a bound index or parameter used as a constant.
    Var(String),
    Int(u64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, ExpoExpr),
    Sum {
        index: String,
        lower: ExpoExpr,
        upper: ExpoExpr,
        body: Box<Expr>,
    },
}

fn expo_prec(e: &ExpoExpr) -> u8 {
    match e {
        ExpoExpr::Add(..) | ExpoExpr::Sub(..) => 1,
        ExpoExpr::Mul(..) => 2,
        ExpoExpr::Pow(..) => 3,
        _ => 4,
    }
}

fn write_expo(f: &mut fmt::Formatter<'_>, e: &ExpoExpr, min: u8) -> fmt::Result {
    let paren = expo_prec(e) < min;
    if paren {
        f.write_str("(")?;
    }
    match e {
        ExpoExpr::Int(n) => write!(f, "{n}")?,
        ExpoExpr::Param(p) => f.write_str(p.name())?,
        ExpoExpr::Index(i) => f.write_str(i)?,
        ExpoExpr::Add(a, b) => {
            write_expo(f, a, 1)?;
            f.write_str("+")?;
            write_expo(f, b, 2)?;
        }
        ExpoExpr::Sub(a, b) => {
            write_expo(f, a, 1)?;
            f.write_str("-")?;
            write_expo(f, b, 2)?;
        }
        ExpoExpr::Mul(a, b) => {
            write_expo(f, a, 2)?;
            f.write_str("*")?;
            write_expo(f, b, 3)?;
        }
        // right associative
        ExpoExpr::Pow(a, b) => {
            write_expo(f, a, 4)?;
            f.write_str("^")?;
            write_expo(f, b, 3)?;
        }
    }
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for ExpoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expo(f, self, 1)
    }
}

fn expr_prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    let paren = expr_prec(e) < min;
    if paren {
        f.write_str("(")?;
    }
    match e {
        Expr::Var(v) => f.write_str(v)?,
        Expr::Int(n) => write!(f, "{n}")?,
        Expr::Add(a, b) => {
            write_expr(f, a, 1)?;
            f.write_str(" + ")?;
            write_expr(f, b, 2)?;
        }
        Expr::Sub(a, b) => {
            write_expr(f, a, 1)?;
            f.write_str(" - ")?;
            write_expr(f, b, 2)?;
        }
        Expr::Mul(a, b) => {
            write_expr(f, a, 2)?;
            f.write_str("*")?;
            write_expr(f, b, 3)?;
        }
        Expr::Pow(base, e) => {
            write_expr(f, base, 4)?;
            f.write_str("^")?;
            write_expo(f, e, 4)?;
        }
        Expr::Sum {
            index,
            lower,
            upper,
            body,
        } => {
            write!(f, "sum({index}={lower}..{upper}, ")?;
            write_expr(f, body, 1)?;
            f.write_str(")")?;
        }
    }
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

/// Canonical printing: `+`/`-` spaced, `*` and `^` tight, parentheses only
/// where precedence or associativity requires them.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 1)
    }
}
