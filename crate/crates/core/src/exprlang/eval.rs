use super::ast::{BinOp, Expr, Func};
use super::jet::Jet2;
use super::{ExprError, ParamTable};
use crate::qmath;
use crate::scalar::Real;

fn domain<T: Real>(func: &'static str, v: T) -> ExprError {
    ExprError::Domain {
        func,
        value: v.to_f64_lossy(),
    }
}

/// Evaluates `expr` at `x`, returning the value with its first and second
/// `x`-derivatives.
pub fn eval_jet<T: Real>(expr: &Expr, x: T, params: &ParamTable<T>) -> Result<Jet2<T>, ExprError> {
    let j = eval(expr, Jet2::variable(x), params)?;
    if !j.is_finite() {
        return Err(ExprError::NonFinite {
            x: x.to_f64_lossy(),
        });
    }
    Ok(j)
}

/// Plain value, no derivatives.
pub fn eval_value<T: Real>(expr: &Expr, x: T, params: &ParamTable<T>) -> Result<T, ExprError> {
    eval_jet(expr, x, params).map(|j| j.value)
}

fn lookup<T: Real>(name: &str, params: &ParamTable<T>) -> Result<T, ExprError> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| ExprError::UnboundParameter(name.to_owned()))
}

fn eval<T: Real>(expr: &Expr, x: Jet2<T>, params: &ParamTable<T>) -> Result<Jet2<T>, ExprError> {
    Ok(match expr {
        Expr::Number(v) => Jet2::constant(T::c(*v)),
        Expr::Var => x,
        Expr::Param(name) => Jet2::constant(lookup(name, params)?),
        Expr::Neg(e) => -eval(e, x, params)?,
        Expr::Binary { op, lhs, rhs } => {
            let a = eval(lhs, x, params)?;
            let b = eval(rhs, x, params)?;
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => {
                    if b.value == T::zero() {
                        return Err(ExprError::DivisionByZero);
                    }
                    a / b
                }
                BinOp::Pow => pow(a, b)?,
            }
        }
        Expr::Call { func, arg } => apply(*func, eval(arg, x, params)?, params)?,
    })
}

fn pow<T: Real>(base: Jet2<T>, exponent: Jet2<T>) -> Result<Jet2<T>, ExprError> {
    let p = exponent.value;
    if exponent.is_constant() && p.fract() == T::zero() && p.abs() <= T::c(i32::MAX as f64) {
        let n = p.to_i32().unwrap_or(0);
        if n < 0 && base.value == T::zero() {
            return Err(ExprError::DivisionByZero);
        }
        return Ok(base.powi(n));
    }
    if base.value <= T::zero() {
        return Err(domain("^", base.value));
    }
    if exponent.is_constant() {
        Ok(base.powf(p))
    } else {
        Ok((exponent * base.ln()).exp())
    }
}

fn apply<T: Real>(func: Func, u: Jet2<T>, params: &ParamTable<T>) -> Result<Jet2<T>, ExprError> {
    let v = u.value;
    Ok(match func {
        Func::Exp => u.exp(),
        Func::Ln => {
            if v <= T::zero() {
                return Err(domain("ln", v));
            }
            u.ln()
        }
        Func::Sqrt => {
            if v <= T::zero() {
                return Err(domain("sqrt", v));
            }
            u.sqrt()
        }
        Func::Sin => u.sin(),
        Func::Cos => u.cos(),
        Func::Sinh => u.sinh(),
        Func::Cosh => u.cosh(),
        Func::Tanh => u.tanh(),
        Func::Coth => {
            let s = v.sinh();
            if s == T::zero() {
                return Err(ExprError::DivisionByZero);
            }
            let c = v.cosh();
            let two = T::c(2.0);
            u.chain(c / s, -(s * s).recip(), two * c / (s * s * s))
        }
        _ => {
            let q = lookup("q", params)?;
            let s = qmath::sinh_q(v, q)?;
            let c = qmath::cosh_q(v, q)?;
            let two = T::c(2.0);
            match func {
                Func::SinhQ => u.chain(s, c, s),
                Func::CoshQ => u.chain(c, s, c),
                Func::TanhQ => {
                    let t = qmath::tanh_q(v, q)?;
                    u.chain(t, q / (c * c), -two * q * s / (c * c * c))
                }
                Func::CothQ => {
                    let k = qmath::coth_q(v, q)?;
                    u.chain(k, -q / (s * s), two * q * c / (s * s * s))
                }
                Func::SechQ => {
                    let r = qmath::sech_q(v, q)?;
                    u.chain(r, -s / (c * c), (two * s * s - c * c) / (c * c * c))
                }
                Func::CschQ => {
                    let r = qmath::csch_q(v, q)?;
                    u.chain(r, -c / (s * s), (two * c * c - s * s) / (s * s * s))
                }
                _ => unreachable!("undeformed functions handled above"),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;
    use approx::assert_relative_eq;

    fn table(pairs: &[(&str, f64)]) -> ParamTable<f64> {
        pairs.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect()
    }

    #[test]
    fn x_squared() {
        let e = parse("x^2").unwrap();
        assert_eq!(
            eval_jet(&e, 3.0, &ParamTable::new()).unwrap(),
            Jet2::new(9.0, 6.0, 2.0)
        );
    }

    #[test]
    fn vanishing_mass_jet() {
        // m = a^2/(x^2+q): m' = -2 a^2 x/(x^2+q)^2, m'' = a^2 (6x^2 - 2q)/(x^2+q)^3
        let e = parse("alpha^2/(x^2+q)").unwrap();
        let j = eval_jet(&e, 1.0, &table(&[("alpha", 1.0), ("q", 1.0)])).unwrap();
        assert_relative_eq!(j.value, 0.5, max_relative = 1e-15);
        assert_relative_eq!(j.d1, -0.5, max_relative = 1e-15);
        assert_relative_eq!(j.d2, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn domain_errors() {
        let p = ParamTable::new();
        assert!(matches!(
            eval_jet(&parse("ln(x)").unwrap(), -1.0, &p),
            Err(ExprError::Domain { func: "ln", .. })
        ));
        assert!(matches!(
            eval_jet(&parse("sqrt(x)").unwrap(), -1.0, &p),
            Err(ExprError::Domain { .. })
        ));
        assert_eq!(
            eval_jet(&parse("1/x").unwrap(), 0.0, &p),
            Err(ExprError::DivisionByZero)
        );
        assert!(matches!(
            eval_jet(&parse("x^0.5").unwrap(), -2.0, &p),
            Err(ExprError::Domain { func: "^", .. })
        ));
        assert_eq!(
            eval_jet(&parse("a*x").unwrap(), 1.0, &p),
            Err(ExprError::UnboundParameter("a".into()))
        );
        assert_eq!(
            eval_jet(&parse("sinhq(x)").unwrap(), 1.0, &p),
            Err(ExprError::UnboundParameter("q".into()))
        );
        assert!(matches!(
            eval_jet(&parse("exp(x)").unwrap(), 1000.0, &p),
            Err(ExprError::NonFinite { .. })
        ));
    }

    #[test]
    fn integer_power_of_negative_base() {
        let j = eval_jet(&parse("x^3").unwrap(), -2.0, &ParamTable::new()).unwrap();
        assert_eq!(j, Jet2::new(-8.0, 12.0, -12.0));
    }

    #[test]
    fn variable_exponent() {
        // d/dx x^x = x^x (ln x + 1)
        let j = eval_jet(&parse("x^x").unwrap(), 2.0, &ParamTable::new()).unwrap();
        assert_relative_eq!(j.d1, 4.0 * (2.0f64.ln() + 1.0), max_relative = 1e-14);
    }

    #[test]
    fn deformed_functions_reduce_at_q_one() {
        let p = table(&[("q", 1.0)]);
        for (a, b) in [
            ("sinhq(x)", "sinh(x)"),
            ("coshq(x)", "cosh(x)"),
            ("tanhq(x)", "tanh(x)"),
            ("cothq(x)", "coth(x)"),
            ("sechq(x)", "1/cosh(x)"),
            ("cschq(x)", "1/sinh(x)"),
        ] {
            let ja = eval_jet(&parse(a).unwrap(), 0.7, &p).unwrap();
            let jb = eval_jet(&parse(b).unwrap(), 0.7, &p).unwrap();
            assert_relative_eq!(ja.value, jb.value, max_relative = 1e-14);
            assert_relative_eq!(ja.d1, jb.d1, max_relative = 1e-13);
            assert_relative_eq!(ja.d2, jb.d2, max_relative = 1e-13);
        }
    }

    #[test]
    fn deformed_pole_surfaces() {
        let p = table(&[("q", 1.0)]);
        assert!(matches!(
            eval_jet(&parse("cschq(x)").unwrap(), 0.0, &p),
            Err(ExprError::QMath(_))
        ));
    }
}
