use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

/// Built-in single-argument functions. The `*q` variants read the
/// deformation parameter `q` from the parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Exp,
    Ln,
    Sqrt,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    SinhQ,
    CoshQ,
    TanhQ,
    CothQ,
    SechQ,
    CschQ,
}

impl Func {
    pub const ALL: [Func; 15] = [
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Sin,
        Func::Cos,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Coth,
        Func::SinhQ,
        Func::CoshQ,
        Func::TanhQ,
        Func::CothQ,
        Func::SechQ,
        Func::CschQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Coth => "coth",
            Func::SinhQ => "sinhq",
            Func::CoshQ => "coshq",
            Func::TanhQ => "tanhq",
            Func::CothQ => "cothq",
            Func::SechQ => "sechq",
            Func::CschQ => "cschq",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn is_deformed(self) -> bool {
        matches!(
            self,
            Func::SinhQ | Func::CoshQ | Func::TanhQ | Func::CothQ | Func::SechQ | Func::CschQ
        )
    }
}

/// Expression tree over the independent variable `x` and named parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Var,
    Param(String),
    Neg(Box<Expr>),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Call {
        func: Func,
        arg: Box<Expr>,
    },
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    pub fn call(func: Func, arg: Expr) -> Expr {
        Expr::Call {
            func,
            arg: Box::new(arg),
        }
    }

    pub fn param(name: &str) -> Expr {
        Expr::Param(name.to_owned())
    }

    /// Names of every parameter the expression reads, including the
    /// implicit `q` of deformed function calls.
    pub fn parameters(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_parameters(&mut out);
        out
    }

    fn collect_parameters(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Number(_) | Expr::Var => {}
            Expr::Param(p) => {
                out.insert(p.clone());
            }
            Expr::Neg(e) => e.collect_parameters(out),
            Expr::Binary { lhs, rhs, .. } => {
                lhs.collect_parameters(out);
                rhs.collect_parameters(out);
            }
            Expr::Call { func, arg } => {
                if func.is_deformed() {
                    out.insert("q".to_owned());
                }
                arg.collect_parameters(out);
            }
        }
    }
}

/// Fully parenthesized rendering; re-parsing it yields the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(v) => write!(f, "{v}"),
            Expr::Var => f.write_str("x"),
            Expr::Param(p) => f.write_str(p),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary { op, lhs, rhs } => write!(f, "({lhs} {} {rhs})", op.symbol()),
            Expr::Call { func, arg } => write!(f, "{}({arg})", func.name()),
        }
    }
}
