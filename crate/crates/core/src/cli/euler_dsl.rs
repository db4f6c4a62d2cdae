//! Term language for Euler polynomials:
//! `point`, `Pn(k)`, `sum(a, b, ...)`, `prod(a, b)`, `blowup(X, Y, r)` and `term*N` for `N` disjoint copies.

use super::parser::{perr, Cursor};
use crate::error::{Error, Result};
use crate::hodge::{euler_blowup, euler_of_pn, euler_point, euler_product, euler_sum, EulerPolynomial};

/// Evaluate an Euler-polynomial program.
pub fn parse_euler_program(src: &str) -> Result<EulerPolynomial> {
    let mut cur = Cursor::new(src)?;
    let e = expr(&mut cur)?;
    cur.finish()?;
    Ok(e)
}

fn expr(cur: &mut Cursor) -> Result<EulerPolynomial> {
    let mut e = atom(cur)?;
    while cur.star() {
        let n = cur.uint()?;
        let n = i64::try_from(n).map_err(|_| Error::Validation("multiplier too large".into()))?;
        e = e.scale(n);
    }
    Ok(e)
}

fn args(cur: &mut Cursor) -> Result<Vec<EulerPolynomial>> {
    cur.lparen()?;
    let mut out = vec![expr(cur)?];
    while cur.comma() {
        out.push(expr(cur)?);
    }
    cur.rparen()?;
    Ok(out)
}

fn arity(name: &str, got: usize, want: usize, line: usize, col: usize) -> Result<()> {
    if got != want {
        return Err(perr(line, col, format!("{name} takes {want} arguments, got {got}")));
    }
    Ok(())
}

fn atom(cur: &mut Cursor) -> Result<EulerPolynomial> {
    let (name, line, col) = cur.ident()?;
    match name.as_str() {
        "point" => Ok(euler_point()),
        "Pn" => {
            cur.lparen()?;
            let k = cur.uint()?;
            cur.rparen()?;
            let k = u32::try_from(k).map_err(|_| perr(line, col, "dimension too large"))?;
            Ok(euler_of_pn(k))
        }
        "sum" => Ok(euler_sum(&args(cur)?)),
        "prod" => {
            let a = args(cur)?;
            arity("prod", a.len(), 2, line, col)?;
            Ok(euler_product(&a[0], &a[1]))
        }
        "blowup" => {
            cur.lparen()?;
            let x = expr(cur)?;
            let mut got = 1;
            if cur.comma() {
                let y = expr(cur)?;
                got += 1;
                if cur.comma() {
                    if cur.minus() {
                        return Err(Error::Validation("blowup codimension r must be positive".into()));
                    }
                    let (l, c) = cur.position();
                    let r = cur.uint()?;
                    if r == 0 {
                        return Err(Error::Validation("blowup codimension r must be positive".into()));
                    }
                    let r = u32::try_from(r).map_err(|_| perr(l, c, "r too large"))?;
                    cur.rparen()?;
                    return euler_blowup(&x, &y, r);
                }
            }
            Err(perr(line, col, format!("blowup takes 3 arguments, got {got}")))
        }
        other => Err(perr(line, col, format!("unknown constructor '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::euler_of_pn;

    #[test]
    fn constructors() {
        assert_eq!(parse_euler_program("Pn(4)").unwrap(), euler_of_pn(4));
        assert_eq!(parse_euler_program("prod(Pn(1), Pn(1))").unwrap().to_string(), "1 + 2*x*xb + x^2*xb^2");
        let b = parse_euler_program("blowup(Pn(4), sum(point*100), 3)").unwrap();
        for k in 1..=3 {
            assert_eq!(b.coeff(k, k), 101);
        }
        assert_eq!(b.coeff(0, 0), 1);
        assert_eq!(b.coeff(4, 4), 1);
        assert_eq!(parse_euler_program("sum(point, Pn(2), point)*2").unwrap().coeff(0, 0), 6);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_euler_program("prod(Pn(1))"), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(parse_euler_program("blowup(Pn(4), point)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_euler_program("blowup(Pn(4), point, -1)"), Err(Error::Validation(_))));
        assert!(matches!(parse_euler_program("blowup(Pn(4), point, 0)"), Err(Error::Validation(_))));
        assert!(matches!(parse_euler_program("Pn(2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_euler_program("torus"), Err(Error::Parse { .. })));
        assert!(matches!(parse_euler_program("point point"), Err(Error::Parse { .. })));
    }
}
