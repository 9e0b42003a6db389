//! Reference matrices, graphs and printed polynomials shipped with the crate.
//!
//! The JSON files under `fixtures/` are embedded at compile time so the
//! library, the command line and the tests all read the same bytes.

use crate::algebra::{json, rat, ExactMatrix, Poly, Rational};
use crate::error::{Error, Result};

pub const FAN_JSON: &str = include_str!("../fixtures/fan.json");
pub const PENCIL_FAMILY_A1_JSON: &str = include_str!("../fixtures/pencil_family_a1.json");
pub const PENCIL_FAMILY_A6_JSON: &str = include_str!("../fixtures/pencil_family_a6.json");
pub const NEG_K4_JSON: &str = include_str!("../fixtures/neg_k4.json");
pub const NEG_K4_GRAPH_JSON: &str = include_str!("../fixtures/neg_k4_graph.json");
pub const K4_ORIENTED_GRAPH_JSON: &str = include_str!("../fixtures/k4_oriented_graph.json");
pub const BASIC_JSON: &str = include_str!("../fixtures/basic.json");
pub const FAN_PRINTED_JSON: &str = include_str!("../fixtures/fan_printed_poly.json");
pub const SPECIAL_JSON: [&str; 5] = [
    include_str!("../fixtures/special_d2.json"),
    include_str!("../fixtures/special_d3.json"),
    include_str!("../fixtures/special_d4.json"),
    include_str!("../fixtures/special_d5.json"),
    include_str!("../fixtures/special_d6.json"),
];

/// The 3x5 matrix with Möbius invariant 4.
pub fn fan_matrix() -> ExactMatrix {
    json::parse_matrix(FAN_JSON).expect("embedded fixture")
}

/// `((1,1,1,1),(0,2,3,a))`.
pub fn pencil_family_matrix(a: Rational) -> ExactMatrix {
    let mut m = ExactMatrix::from_i64_rows(&[&[1, 1, 1, 1], &[0, 2, 3, 0]]);
    m.set(1, 3, a);
    m
}

/// Incidence matrix of the all-negative complete graph on four nodes.
pub fn neg_k4_matrix() -> ExactMatrix {
    json::parse_matrix(NEG_K4_JSON).expect("embedded fixture")
}

pub fn basic_matrix() -> ExactMatrix {
    json::parse_matrix(BASIC_JSON).expect("embedded fixture")
}

/// `(I_d | -1)`, the corank-one matrix with kernel `(1, ..., 1)`.
pub fn special_matrix(d: usize) -> ExactMatrix {
    if (2..=6).contains(&d) {
        return json::parse_matrix(SPECIAL_JSON[d - 2]).expect("embedded fixture");
    }
    let mut m = ExactMatrix::zeros(d, d + 1);
    for i in 0..d {
        m.set(i, i, rat(1));
        m.set(i, d, rat(-1));
    }
    m
}

/// Rank-3 representation of the graphic matroid of `K4` (oriented incidence
/// matrix with its last row removed).
pub fn k4_graphic_matrix() -> ExactMatrix {
    ExactMatrix::from_i64_rows(&[&[1, 1, 1, 0, 0, 0], &[-1, 0, 0, 1, 1, 0], &[0, -1, 0, -1, 0, 1]])
}

/// Vandermonde matrix with nodes `1..=n`; every `d` columns are independent.
pub fn uniform_matrix(d: usize, n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(d, n);
    for j in 0..n {
        let mut v = rat(1);
        for i in 0..d {
            m.set(i, j, v.clone());
            v *= rat(j as i64 + 1);
        }
    }
    m
}

/// The printed degree-8 polynomial for [`fan_matrix`], in `b1, b2, b3`.
pub fn fan_printed_poly() -> Poly {
    json::parse_poly(FAN_PRINTED_JSON).expect("embedded fixture")
}

/// The same polynomial built from its printed factored form.
pub fn fan_printed_expression() -> Poly {
    let b = |i| Poly::var(3, i);
    let env = [
        ("b1", b(0)),
        ("b2", b(1)),
        ("b3", b(2)),
        ("s1", &b(0) - &b(1)),
        ("s2", &b(0) - &b(2)),
        ("s3", &(&b(0) - &b(1)) - &b(2)),
    ];
    parse_expr(
        "288*b2^2*b3^2*(b1^2*b2^2 + b1^2*b3^2 + b2^2*s1^2 + b2^2*s2^2 + b2^2*s3^2 + b3^2*s1^2 + b3^2*s2^2 + b3^2*s3^2) \
         + 1773*b2^4*b3^4 + 720*b2^2*b3^2*(s1^2*s2^2 + b1^2*s3^2) \
         + 192*(b1^2*b2^4*s1^2 + b2^4*s2^2*s3^2 + b1^2*b3^4*s2^2 + b3^4*s1^2*s3^2) \
         + 1216*(b1^2*b2^2*b3^2*s1^2 + b1^2*b2^2*b3^2*s2^2 + b2^2*b3^2*s1^2*s3^2 + b2^2*s2^2*s3^2*b3^2) \
         + 256*b1^2*s1^2*s2^2*s3^2 \
         + 320*(b1^2*b2^2*s1^2*s2^2 + b1^2*b2^2*s1^2*s3^2 + b1^2*b2^2*s2^2*s3^2 + b1^2*b3^2*s1^2*s2^2 \
         + b1^2*b3^2*s1^2*s3^2 + b1^2*b3^2*s2^2*s3^2 + b2^2*s1^2*s2^2*s3^2 + b3^2*s1^2*s2^2*s3^2)",
        &env,
    )
    .expect("well-formed expression")
}

/// The four real zeros of [`fan_printed_poly`] in the projective plane.
pub fn fan_real_points() -> Vec<[i64; 3]> {
    vec![[0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1]]
}

/// Printed coefficient polynomials of the 2x4 family, evaluated at `a`.
pub fn pencil_family_printed_poly(a: &Rational) -> Poly {
    let env = [("a", Poly::constant(2, a.clone())), ("b1", Poly::var(2, 0)), ("b2", Poly::var(2, 1))];
    parse_expr(
        "(2268*a^4 - 9720*a^3 + 11664*a^2)*b1^4 \
         - (3000*a^4 - 12528*a^3 + 12960*a^2 + 5184*a)*b1^3*b2 \
         + (1744*a^4 - 7980*a^3 + 10584*a^2 - 2160*a + 5184)*b1^2*b2^2 \
         - (500*a^4 - 2612*a^3 + 4680*a^2 - 3888*a + 4320)*b1*b2^3 \
         + (63*a^4 - 400*a^3 + 999*a^2 - 1350*a + 1188)*b2^4",
        &env,
    )
    .expect("well-formed expression")
}

/// `36 b1^2 - 24 b1 b2 + 5 b2^2`, whose square is the `a = 6` member.
pub fn pencil_family_a6_square_root() -> Poly {
    let env = [("b1", Poly::var(2, 0)), ("b2", Poly::var(2, 1))];
    parse_expr("36*b1^2 - 24*b1*b2 + 5*b2^2", &env).expect("well-formed expression")
}

/// The printed sum of ten squares for `(I_3 | -1)`.
pub fn ten_squares() -> Poly {
    let env = [("b1", Poly::var(3, 0)), ("b2", Poly::var(3, 1)), ("b3", Poly::var(3, 2))];
    parse_expr(
        "7/4*b1^4*(b2-b3)^2 + 56/27*(b1-b2)^2*b1^2*b2^2 \
         + 1/108*(5*b1*b2 - 9*b1*b3 - 14*b2^2 + 18*b2*b3)^2*b1^2 \
         + 1/27*(5*b1*b2 - 3*b1*b3 - 8*b2^2 + 6*b2*b3)^2*b1^2 \
         + 1/9*(b1*b2 + b1*b3 - 2*b2*b3)^2*(b1 - 2*b2)^2 \
         + 7/108*(5*b1*b2 + 3*b1*b3 - 2*b2^2 - 6*b2*b3)^2*b1^2 \
         + 1/216*(13*b1*b2 - 21*b1*b3 - 7*b2^2 - 12*b2*b3 + 27*b3^2)^2*b1^2 \
         + 1/36*(5*b1^2*b2 - 7*b1^2*b3 - 7*b1*b2^2 + 4*b1*b2*b3 + 9*b1*b3^2 + 14*b2^2*b3 - 18*b2*b3^2)^2 \
         + 1/216*(5*b1*b2 - 21*b1*b3 + b2^2 - 12*b2*b3 + 27*b3^2)^2*b1^2 \
         + 1/36*(5*b1^2*b2 - b1^2*b3 - 4*b1*b2^2 - 8*b1*b2*b3 + 8*b2^2*b3)^2",
        &env,
    )
    .expect("well-formed expression")
}

/// The printed 16-term expansion for `d = 4` in `e1, ..., e4`.
pub fn sixteen_term_e_poly() -> Poly {
    let env: Vec<(&str, Poly)> =
        ["e1", "e2", "e3", "e4"].iter().enumerate().map(|(i, n)| (*n, Poly::var(4, i))).collect();
    parse_expr(
        "432*e1^4*e4^2 - 432*e1^3*e2*e3*e4 + 128*e1^3*e3^3 + 108*e1^2*e2^3*e4 - 36*e1^2*e2^2*e3^2 \
         - 2160*e1^2*e2*e4^2 + 1800*e1*e2^2*e3*e4 + 120*e1^2*e3^2*e4 - 540*e1*e2*e3^3 - 405*e2^4*e4 \
         + 135*e2^3*e3^2 + 2400*e1*e3*e4^2 + 1800*e2^2*e4^2 - 2700*e2*e3^2*e4 + 675*e3^4 - 2000*e4^3",
        &env,
    )
    .expect("well-formed expression")
}

/// Parses `+ - * ^ ( )` expressions with rational literals (`7/4`) over the
/// named polynomials in `env`. Only used for transcribing printed formulas.
pub fn parse_expr(text: &str, env: &[(&str, Poly)]) -> Result<Poly> {
    let arity = env.first().map_or(0, |(_, p)| p.arity());
    let tokens = tokenize(text)?;
    let mut parser = ExprParser { tokens, pos: 0, env, arity };
    let p = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", parser.pos)));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u64),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().map_err(|_| Error::Parse(s.clone()))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    env: &'a [(&'a str, Poly)],
    arity: usize,
}

impl ExprParser<'_> {
    fn peek_op(&self, op: char) -> bool {
        self.tokens.get(self.pos) == Some(&Token::Op(op))
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = self.product()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = &acc + &self.product()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek_op('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg_poly());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    return Ok(base.pow(*e as u32));
                }
                _ => return Err(Error::Parse("exponent must be a natural number".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n.into());
                if self.peek_op('/') {
                    self.pos += 1;
                    match self.tokens.get(self.pos) {
                        Some(Token::Num(d)) if *d != 0 => {
                            q /= Rational::from_integer((*d).into());
                            self.pos += 1;
                        }
                        _ => return Err(Error::Parse("expected denominator".into())),
                    }
                }
                Ok(Poly::constant(self.arity, q))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                self.env
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, p)| p.clone())
                    .ok_or_else(|| Error::Parse(format!("unknown name {name}")))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.peek_op(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn expression_parser() {
        let env = [("x", Poly::var(1, 0))];
        let p = parse_expr("7/4*(x - 1)^2 - -x", &env).unwrap();
        assert_eq!(p.eval(&[rat(3)]), rat(7) + rat(3));
        assert_eq!(parse_expr("1/2", &env).unwrap().constant_value(), Some(ratio(1, 2)));
        assert!(parse_expr("x +", &env).is_err());
        assert!(parse_expr("y", &env).is_err());
    }

    #[test]
    fn stored_printed_polynomial_matches_transcription() {
        assert_eq!(fan_printed_poly(), fan_printed_expression());
    }

    #[test]
    fn printed_square_at_a6() {
        let p = pencil_family_printed_poly(&rat(6));
        assert_eq!(p, pencil_family_a6_square_root().pow(2).scale(&rat(972)));
    }

    #[test]
    fn sixteen_terms() {
        assert_eq!(sixteen_term_e_poly().len(), 16);
    }

    #[test]
    fn matrices_match_closed_forms() {
        assert_eq!(pencil_family_matrix(rat(1)), json::parse_matrix(PENCIL_FAMILY_A1_JSON).unwrap());
        assert_eq!(pencil_family_matrix(rat(6)), json::parse_matrix(PENCIL_FAMILY_A6_JSON).unwrap());
        for d in 2..=6 {
            let mut m = ExactMatrix::zeros(d, d + 1);
            for i in 0..d {
                m.set(i, i, rat(1));
                m.set(i, d, rat(-1));
            }
            assert_eq!(special_matrix(d), m);
        }
    }
}
