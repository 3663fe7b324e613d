//! A small expression language over cycle indices.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom postfix*
//! postfix := "'" | "^point" | "^inv"
//! atom    := NAME | NAME '(' expr ')' | '(' expr ')' | RATIONAL
//! ```
//!
//! `NAME '(' expr ')'` is plethystic composition, mirroring how species
//! substitutions are written. Names resolve against the species catalog
//! (`X`, `E`, `Eplus`, `Omega`, `BCe`, `BCtau`, `CBCe`, `CBCtau`, `CBP`,
//! `BP`, `NBP`); unknown names are rejected at evaluation, not parse.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cycle_index::CycleIndex;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::species::{SpeciesCatalog, SpeciesName};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpeciesExpr {
    Name(String),
    Constant(BigRational),
    Sum(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Difference(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Product(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Compose(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Derivative(Box<SpeciesExpr>),
    Point(Box<SpeciesExpr>),
    Inverse(Box<SpeciesExpr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Name(String),
    Rational(BigRational),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Prime,
    PointSuffix,
    InvSuffix,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push((start, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((start, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((start, Token::Star));
                i += 1;
            }
            '(' => {
                tokens.push((start, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((start, Token::RParen));
                i += 1;
            }
            '\'' => {
                tokens.push((start, Token::Prime));
                i += 1;
            }
            '^' => {
                i += 1;
                let word_start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word: String = chars[word_start..i].iter().collect();
                match word.as_str() {
                    "point" => tokens.push((start, Token::PointSuffix)),
                    "inv" => tokens.push((start, Token::InvSuffix)),
                    _ => {
                        return Err(Error::Parse {
                            position: start,
                            message: format!("expected ^point or ^inv, found `^{word}`"),
                        })
                    }
                }
            }
            _ if c.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Name(chars[start..i].iter().collect())));
            }
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: String = chars[start..i].iter().collect();
                let numer: BigInt = numer.parse().expect("digits");
                let mut denom = BigInt::one();
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let denom_start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if denom_start == i {
                        return Err(Error::Parse {
                            position: i.min(chars.len()),
                            message: "expected digits after `/`".into(),
                        });
                    }
                    let denom_str: String = chars[denom_start..i].iter().collect();
                    denom = denom_str.parse().expect("digits");
                    if denom == BigInt::from(0) {
                        return Err(Error::Parse {
                            position: denom_start,
                            message: "zero denominator".into(),
                        });
                    }
                }
                tokens.push((start, Token::Rational(BigRational::new(numer, denom))));
            }
            _ => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(Lexer { tokens, end: chars.len() })
}

struct Parser {
    lexer: Lexer,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.lexer.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.lexer
            .tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.lexer.end)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.lexer.tokens.get(self.pos).map(|(_, t)| t.clone());
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.peek() {
            Some(Token::RParen) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::Parse {
                position: self.position(),
                message: "expected `)`".into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<SpeciesExpr> {
        let mut left = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let right = self.term()?;
                    left = SpeciesExpr::Sum(Box::new(left), Box::new(right));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let right = self.term()?;
                    left = SpeciesExpr::Difference(Box::new(left), Box::new(right));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<SpeciesExpr> {
        let mut left = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let right = self.factor()?;
            left = SpeciesExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<SpeciesExpr> {
        let mut base = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::Prime) => {
                    self.pos += 1;
                    base = SpeciesExpr::Derivative(Box::new(base));
                }
                Some(Token::PointSuffix) => {
                    self.pos += 1;
                    base = SpeciesExpr::Point(Box::new(base));
                }
                Some(Token::InvSuffix) => {
                    self.pos += 1;
                    base = SpeciesExpr::Inverse(Box::new(base));
                }
                _ => return Ok(base),
            }
        }
    }

    fn atom(&mut self) -> Result<SpeciesExpr> {
        let position = self.position();
        match self.advance() {
            Some(Token::Name(name)) => {
                if let Some(Token::LParen) = self.peek() {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect_rparen()?;
                    Ok(SpeciesExpr::Compose(
                        Box::new(SpeciesExpr::Name(name)),
                        Box::new(inner),
                    ))
                } else {
                    Ok(SpeciesExpr::Name(name))
                }
            }
            Some(Token::Rational(value)) => Ok(SpeciesExpr::Constant(value)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                position,
                message: "expected a name, a rational, or `(`".into(),
            }),
        }
    }
}

/// Parses an expression, reporting syntax errors with their character
/// position. Unknown names are deferred to evaluation.
pub fn parse(text: &str) -> Result<SpeciesExpr> {
    let lexer = lex(text)?;
    let mut parser = Parser { lexer, pos: 0 };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(Error::Parse {
            position: parser.position(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(expr)
}

/// Evaluates against a fresh catalog.
pub fn evaluate(expr: &SpeciesExpr, truncation: u32) -> Result<CycleIndex> {
    evaluate_with(&SpeciesCatalog::new(), expr, truncation)
}

/// Evaluates to a cycle index exact through `truncation`. Derivatives bump
/// the truncation of their operand by one, so every node is computed to
/// exactly the degree the result needs.
pub fn evaluate_with(
    catalog: &SpeciesCatalog,
    expr: &SpeciesExpr,
    truncation: u32,
) -> Result<CycleIndex> {
    match expr {
        SpeciesExpr::Name(name) => {
            let name: SpeciesName = name.parse()?;
            catalog.cycle_index(name, truncation)
        }
        SpeciesExpr::Constant(value) => Ok(CycleIndex::monomial(
            Partition::empty(),
            value.clone(),
            truncation,
        )),
        SpeciesExpr::Sum(a, b) => Ok(evaluate_with(catalog, a, truncation)?
            .add(&evaluate_with(catalog, b, truncation)?)),
        SpeciesExpr::Difference(a, b) => Ok(evaluate_with(catalog, a, truncation)?
            .sub(&evaluate_with(catalog, b, truncation)?)),
        SpeciesExpr::Product(a, b) => Ok(evaluate_with(catalog, a, truncation)?
            .mul(&evaluate_with(catalog, b, truncation)?, truncation)),
        SpeciesExpr::Compose(f, g) => evaluate_with(catalog, f, truncation)?
            .plethysm(&evaluate_with(catalog, g, truncation)?, truncation),
        SpeciesExpr::Derivative(e) => {
            Ok(evaluate_with(catalog, e, truncation + 1)?.derivative_p1())
        }
        SpeciesExpr::Point(e) => Ok(evaluate_with(catalog, e, truncation)?.pointed()),
        SpeciesExpr::Inverse(e) => {
            evaluate_with(catalog, e, truncation)?.compositional_inverse(truncation)
        }
    }
}

/// Renders a cycle index in the human-readable power-sum form, e.g.
/// `1/2*p[1]^2 + 1/2*p[2]`. The output can be read back with
/// [`parse_power_sum_text`].
pub fn format(series: &CycleIndex) -> String {
    series.to_string()
}

/// Parses the rendering produced by [`format()`] back into a series at the
/// given truncation.
pub fn parse_power_sum_text(text: &str, truncation: u32) -> Result<CycleIndex> {
    let text = text.trim();
    if text == "0" {
        return Ok(CycleIndex::zero(truncation));
    }
    let mut out = CycleIndex::zero(truncation);
    let mut rest = text;
    let mut negative = false;
    if let Some(tail) = rest.strip_prefix('-') {
        negative = true;
        rest = tail.trim_start();
    }
    loop {
        let split = rest
            .find(" + ")
            .map(|i| (i, false))
            .into_iter()
            .chain(rest.find(" - ").map(|i| (i, true)))
            .min_by_key(|(i, _)| *i);
        let (term_text, next_negative, tail) = match split {
            Some((i, minus)) => (&rest[..i], minus, &rest[i + 3..]),
            None => (rest, false, ""),
        };
        let (partition, mut coeff) = parse_power_sum_term(term_text.trim())?;
        if negative {
            coeff = -coeff;
        }
        out = out.add(&CycleIndex::monomial(partition, coeff, truncation));
        if tail.is_empty() {
            return Ok(out);
        }
        negative = next_negative;
        rest = tail;
    }
}

fn parse_power_sum_term(term: &str) -> Result<(Partition, BigRational)> {
    let bad = |message: &str| Error::Parse { position: 0, message: format!("{message} in `{term}`") };
    let mut coeff = BigRational::one();
    let mut parts: Vec<u32> = Vec::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if let Some(rest) = factor.strip_prefix("p[") {
            let (index, exponent) = match rest.split_once("]^") {
                Some((index, exponent)) => (
                    index.parse::<u32>().map_err(|_| bad("bad part index"))?,
                    exponent.parse::<u32>().map_err(|_| bad("bad exponent"))?,
                ),
                None => (
                    rest.strip_suffix(']')
                        .ok_or_else(|| bad("missing `]`"))?
                        .parse::<u32>()
                        .map_err(|_| bad("bad part index"))?,
                    1,
                ),
            };
            if index == 0 {
                return Err(bad("part index must be positive"));
            }
            parts.extend(std::iter::repeat_n(index, exponent as usize));
        } else {
            let value = match factor.split_once('/') {
                Some((numer, denom)) => BigRational::new(
                    numer.parse().map_err(|_| bad("bad numerator"))?,
                    denom.parse().map_err(|_| bad("bad denominator"))?,
                ),
                None => BigRational::from(
                    factor.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                ),
            };
            coeff *= value;
        }
    }
    Ok((Partition::from_unsorted(parts), coeff))
}

impl fmt::Display for SpeciesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl SpeciesExpr {
    // precedence levels: 0 sum/difference, 1 product, 2 postfix chain
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            SpeciesExpr::Name(name) => write!(f, "{name}"),
            SpeciesExpr::Constant(value) => {
                if value.denom().is_one() {
                    write!(f, "{}", value.numer())
                } else {
                    write!(f, "{}/{}", value.numer(), value.denom())
                }
            }
            SpeciesExpr::Sum(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            SpeciesExpr::Difference(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            SpeciesExpr::Product(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, "*")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            SpeciesExpr::Compose(name, inner) => {
                name.fmt_prec(f, 2)?;
                write!(f, "(")?;
                inner.fmt_prec(f, 0)?;
                write!(f, ")")
            }
            SpeciesExpr::Derivative(e) => {
                e.fmt_prec(f, 2)?;
                write!(f, "'")
            }
            SpeciesExpr::Point(e) => {
                e.fmt_prec(f, 2)?;
                write!(f, "^point")
            }
            SpeciesExpr::Inverse(e) => {
                e.fmt_prec(f, 2)?;
                write!(f, "^inv")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{e_species, omega};
    use proptest::prelude::*;

    fn name(s: &str) -> SpeciesExpr {
        SpeciesExpr::Name(s.to_string())
    }

    #[test]
    fn parse_composition() {
        let expr = parse("Omega(Eplus)").unwrap();
        assert_eq!(
            expr,
            SpeciesExpr::Compose(Box::new(name("Omega")), Box::new(name("Eplus")))
        );
    }

    #[test]
    fn parse_block_expression() {
        let expr = parse("X*CBP' - X").unwrap();
        assert_eq!(
            expr,
            SpeciesExpr::Difference(
                Box::new(SpeciesExpr::Product(
                    Box::new(name("X")),
                    Box::new(SpeciesExpr::Derivative(Box::new(name("CBP")))),
                )),
                Box::new(name("X")),
            )
        );
    }

    #[test]
    fn parse_reports_positions() {
        match parse("E(") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("X + ") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("X ? Y") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse("X Y").is_err());
        assert!(parse("^foo").is_err());
    }

    #[test]
    fn parse_quotient_idiom() {
        let expr = parse("(CBCe + CBCtau) * 1/2").unwrap();
        assert_eq!(
            expr,
            SpeciesExpr::Product(
                Box::new(SpeciesExpr::Sum(
                    Box::new(name("CBCe")),
                    Box::new(name("CBCtau")),
                )),
                Box::new(SpeciesExpr::Constant(BigRational::new(
                    BigInt::from(1),
                    BigInt::from(2),
                ))),
            )
        );
    }

    #[test]
    fn postfixes_chain() {
        let expr = parse("X'^inv^point").unwrap();
        assert_eq!(
            expr,
            SpeciesExpr::Point(Box::new(SpeciesExpr::Inverse(Box::new(
                SpeciesExpr::Derivative(Box::new(name("X")))
            ))))
        );
    }

    #[test]
    fn evaluate_inverse_pair_gives_singletons() {
        let p1 = CycleIndex::p1(5);
        assert_eq!(evaluate(&parse("Omega(Eplus)").unwrap(), 5).unwrap(), p1);
        assert_eq!(evaluate(&parse("Eplus(Omega)").unwrap(), 5).unwrap(), p1);
        assert_eq!(evaluate(&parse("X").unwrap(), 3).unwrap(), CycleIndex::p1(3));
    }

    #[test]
    fn evaluate_bipartite_composition() {
        let series = evaluate(&parse("E(CBP)").unwrap(), 4).unwrap();
        let counts = series.ogf(4).integer_coefficients().unwrap();
        let expected: Vec<BigInt> = [1, 1, 2, 3, 7].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn evaluate_bumps_truncation_for_derivatives() {
        // the set species is its own derivative, exactly to the requested degree
        let derived = evaluate(&parse("E'").unwrap(), 3).unwrap();
        assert_eq!(derived, e_species(3));
        let pointed = evaluate(&parse("X^point").unwrap(), 3).unwrap();
        assert_eq!(pointed, CycleIndex::p1(3));
    }

    #[test]
    fn evaluate_inverse_postfix() {
        assert_eq!(
            evaluate(&parse("Eplus^inv").unwrap(), 5).unwrap(),
            omega(5)
        );
    }

    #[test]
    fn evaluate_rejects_unknown_names_and_bad_compositions() {
        assert_eq!(
            evaluate(&parse("Bogus").unwrap(), 3),
            Err(Error::UnknownName("Bogus".into()))
        );
        assert_eq!(
            evaluate(&parse("E(E)").unwrap(), 3),
            Err(Error::ConstantTermInComposition)
        );
        assert_eq!(
            evaluate(&parse("BP^inv").unwrap(), 3),
            Err(Error::InverseNotApplicable)
        );
    }

    #[test]
    fn evaluate_is_referentially_transparent() {
        let expr = parse("(CBCe + CBCtau) * 1/2").unwrap();
        let first = evaluate(&expr, 5).unwrap();
        let second = evaluate(&expr, 5).unwrap();
        assert_eq!(first, second);
        // and matches the catalog quotient
        assert_eq!(first, crate::species::cbp(5).unwrap());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format(&CycleIndex::p1(3)), "p[1]");
        assert_eq!(format(&CycleIndex::zero(2)), "0");
        let e2 = e_species(2).homogeneous(2);
        assert_eq!(format(&e2), "1/2*p[1]^2 + 1/2*p[2]");
    }

    #[test]
    fn format_round_trips_through_the_text_parser() {
        let negated = e_species(5).scale(&BigRational::new(BigInt::from(-1), BigInt::from(1)));
        for series in [
            omega(6),
            e_species(5),
            negated,
            crate::species::bc_tau(6),
            CycleIndex::zero(4),
            CycleIndex::one(0),
        ] {
            let text = format(&series);
            let back = parse_power_sum_text(&text, series.truncation()).unwrap();
            assert_eq!(back, series, "round trip failed for `{text}`");
        }
    }

    #[test]
    fn render_examples_match_grammar() {
        let expr = parse("X*CBP' - X").unwrap();
        assert_eq!(expr.to_string(), "X*CBP' - X");
        let expr = parse("(CBCe + CBCtau) * 1/2").unwrap();
        assert_eq!(expr.to_string(), "(CBCe + CBCtau)*1/2");
        let expr = parse("Omega(Eplus)").unwrap();
        assert_eq!(expr.to_string(), "Omega(Eplus)");
    }

    fn arbitrary_expr() -> impl Strategy<Value = SpeciesExpr> {
        let leaf = prop_oneof![
            prop_oneof![
                Just("X"),
                Just("E"),
                Just("Eplus"),
                Just("Omega"),
                Just("CBP")
            ]
            .prop_map(name),
            (1u32..20, 1u32..20).prop_map(|(n, d)| SpeciesExpr::Constant(
                BigRational::new(BigInt::from(n), BigInt::from(d))
            )),
        ];
        leaf.prop_recursive(4, 24, 8, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| SpeciesExpr::Sum(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| SpeciesExpr::Difference(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| SpeciesExpr::Product(Box::new(a), Box::new(b))),
                (prop_oneof![Just("E"), Just("Omega"), Just("CBP")], inner.clone()).prop_map(
                    |(n, b)| SpeciesExpr::Compose(Box::new(name(n)), Box::new(b))
                ),
                inner.clone().prop_map(|e| SpeciesExpr::Derivative(Box::new(e))),
                inner.clone().prop_map(|e| SpeciesExpr::Point(Box::new(e))),
                inner.prop_map(|e| SpeciesExpr::Inverse(Box::new(e))),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn parse_inverts_rendering(expr in arbitrary_expr()) {
            let text = expr.to_string();
            let parsed = parse(&text).unwrap();
            prop_assert_eq!(parsed, expr);
        }
    }
}
