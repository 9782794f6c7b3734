use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Pow,
    Eq,
    Ne,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Pow => "**",
            BinaryOp::Eq => "==",
            BinaryOp::Ne => "!=",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinaryOp::Eq | BinaryOp::Ne => PREC_CMP,
            BinaryOp::Add | BinaryOp::Sub => PREC_SUM,
            BinaryOp::Mul => PREC_PRODUCT,
            BinaryOp::Pow => PREC_POWER,
        }
    }
}

const PREC_CMP: u8 = 0;
const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_POWER: u8 = 4;
const PREC_ATOM: u8 = 5;

/// An expression with the 1-based column it starts at. Equality ignores
/// the column.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub column: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(String),
    Str(String),
    Name(String),
    /// `PolyRing.lex`
    Qualified(String, String),
    Neg(Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    MethodCall(Box<Expr>, String, Vec<Expr>),
    List(Vec<Expr>),
    Index(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Statement {
    Assign { name: String, expr: Expr },
    ListAssign { names: Vec<String>, expr: Expr },
    Expr(Expr),
}

impl Expr {
    pub fn new(kind: ExprKind, column: usize) -> Expr {
        Expr { kind, column }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Neg(_) => PREC_UNARY,
            ExprKind::Binary(op, ..) => op.precedence(),
            _ => PREC_ATOM,
        }
    }
}

struct Parens<'a>(&'a Expr, bool);

impl fmt::Display for Parens<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn comma_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// Source text for the tree, parenthesized only where precedence requires.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(text) => f.write_str(text),
            ExprKind::Str(text) => write!(f, "\"{text}\""),
            ExprKind::Name(name) => f.write_str(name),
            ExprKind::Qualified(a, b) => write!(f, "{a}.{b}"),
            ExprKind::Neg(e) => write!(f, "-{}", Parens(e, e.precedence() < PREC_UNARY)),
            ExprKind::Binary(op, l, r) => {
                let prec = op.precedence();
                let (left_parens, right_parens) = match op {
                    BinaryOp::Pow => (l.precedence() <= PREC_POWER, r.precedence() < PREC_POWER),
                    BinaryOp::Eq | BinaryOp::Ne => (l.precedence() <= prec, r.precedence() <= prec),
                    _ => (
                        l.precedence() < prec,
                        r.precedence() <= prec || r.precedence() == PREC_UNARY,
                    ),
                };
                write!(f, "{}{}{}", Parens(l, left_parens), op.symbol(), Parens(r, right_parens))
            }
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                comma_list(f, args)?;
                f.write_str(")")
            }
            ExprKind::MethodCall(recv, name, args) => {
                write!(f, "{}.{name}(", Parens(recv, recv.precedence() < PREC_ATOM))?;
                comma_list(f, args)?;
                f.write_str(")")
            }
            ExprKind::List(items) => {
                f.write_str("[")?;
                comma_list(f, items)?;
                f.write_str("]")
            }
            ExprKind::Index(recv, index) => {
                write!(f, "{}[{index}]", Parens(recv, recv.precedence() < PREC_ATOM))
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Assign { name, expr } => write!(f, "{name}={expr}"),
            Statement::ListAssign { names, expr } => write!(f, "[{}]={expr}", names.join(",")),
            Statement::Expr(e) => write!(f, "{e}"),
        }
    }
}
