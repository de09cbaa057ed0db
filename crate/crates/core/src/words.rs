//! A small expression language over the monoid.
//!
//! ```text
//! expr    := term ('*' term)*
//! term    := atom | atom '^-1'
//! atom    := 'P' index | 'Q' index | 'I' | permlit | elemlit | idemlit | '(' expr ')'
//! permlit := 's[' ints ']'
//! idemlit := 'e[' ints ']'
//! elemlit := 'ipf{n=' int '; s=[' ints ']; x=[' ints ']; y=[' ints ']}'
//! ```
//!
//! Whitespace is ignored everywhere and `*` is left-associative. Products
//! are written in application order: `A*B` applies `A` first.
//!
//! `Pi` is the total map shifting coordinate `i` up by one and `Qi` is its
//! inverse, so `Pi*Qi` is the identity and `Qi*Pi` is the identity of the
//! filter `↑(𝟏 + eᵢ)`. `s[...]` denotes the unit permuting coordinates,
//! `e[...]` the identity map of a principal filter, `I` the identity.

use crate::element::{IpfElement, Point};
use crate::error::{ensure_dim, IpfError, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Element(IpfElement),
    GenP(usize),
    GenQ(usize),
    Identity,
    Perm(Permutation),
    Idem(Point),
    Product(Box<Expr>, Box<Expr>),
    Inverse(Box<Expr>),
}

const MAX_DEPTH: usize = 128;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(IpfError::Syntax {
        offset,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected<T>(&mut self, wanted: &str) -> Result<T> {
        match self.peek() {
            None => syntax(self.pos, format!("unexpected end of input, expected {wanted}")),
            Some(c) if c.is_ascii_graphic() => syntax(
                self.pos,
                format!("unexpected '{}', expected {wanted}", c as char),
            ),
            Some(c) => syntax(self.pos, format!("unexpected byte 0x{c:02x}, expected {wanted}")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&format!("'{}'", c as char))
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<()> {
        for &c in word.as_bytes() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn digits(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.src.get(self.pos).copied().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .map_or_else(|| syntax(start, "integer literal too large"), Ok)?;
            self.pos += 1;
        }
        if self.pos == start {
            return self.unexpected("a digit");
        }
        Ok(value)
    }

    fn int(&mut self) -> Result<i64> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        let magnitude = self.digits()?;
        let value = i64::try_from(magnitude).or_else(|_| syntax(start, "integer literal too large"))?;
        Ok(if negative { -value } else { value })
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        self.expect(b'[')?;
        let mut out = vec![self.int()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.int()?);
        }
        self.expect(b']')?;
        Ok(out)
    }

    fn index(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.digits()?;
        usize::try_from(v).or_else(|_| syntax(start, "index too large"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let right = self.term()?;
            left = Expr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.expect(b'-')?;
            self.expect(b'1')?;
            return Ok(Expr::Inverse(Box::new(atom)));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                Ok(Expr::GenP(self.index()?))
            }
            Some(b'Q') => {
                self.pos += 1;
                Ok(Expr::GenQ(self.index()?))
            }
            Some(b'I') => {
                self.pos += 1;
                Ok(Expr::Identity)
            }
            Some(b's') => {
                self.pos += 1;
                let list = self.int_list()?;
                Permutation::from_one_line(&list)
                    .map(Expr::Perm)
                    .or_else(|e| syntax(start, e.to_string()))
            }
            Some(b'e') => {
                self.pos += 1;
                let list = self.int_list()?;
                Point::new(list)
                    .map(Expr::Idem)
                    .or_else(|e| syntax(start, e.to_string()))
            }
            Some(b'i') => self.element_literal(start).map(Expr::Element),
            Some(b'(') => {
                self.pos += 1;
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return syntax(start, "expression nested too deeply");
                }
                let inner = self.expr()?;
                self.expect(b')')?;
                self.depth -= 1;
                Ok(inner)
            }
            _ => self.unexpected("a generator, literal or '('"),
        }
    }

    fn element_literal(&mut self, start: usize) -> Result<IpfElement> {
        self.expect_word("ipf{n=")?;
        let n_at = self.pos;
        let n = self.int()?;
        self.expect_word(";s=")?;
        let s = self.int_list()?;
        self.expect_word(";x=")?;
        let x = self.int_list()?;
        self.expect_word(";y=")?;
        let y = self.int_list()?;
        self.expect(b'}')?;
        let n = usize::try_from(n).or_else(|_| syntax(n_at, "dimension must be non-negative"))?;
        let sigma = Permutation::from_one_line(&s).or_else(|e| syntax(start, e.to_string()))?;
        IpfElement::new(n, sigma, x, y).or_else(|e| syntax(start, e.to_string()))
    }
}

/// Parses an expression; errors carry the byte offset of the problem.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected("'*' or end of input");
    }
    Ok(e)
}

/// `Pi = (id, 𝟏, 𝟏 + eᵢ)` for the 1-based index `i`.
pub fn generator_p(n: usize, i: usize) -> Result<IpfElement> {
    if i == 0 || i > n {
        return Err(IpfError::IndexOutOfRange { index: i, n });
    }
    Ok(IpfElement::from_raw(
        Permutation::identity(n),
        Point::ones(n),
        Point::ones_plus_unit(n, i - 1),
    ))
}

/// Evaluates an expression in dimension `n`.
pub fn evaluate(e: &Expr, n: usize) -> Result<IpfElement> {
    match e {
        Expr::Element(a) => {
            ensure_dim(n, a.dim())?;
            Ok(a.clone())
        }
        Expr::GenP(i) => generator_p(n, *i),
        Expr::GenQ(i) => Ok(generator_p(n, *i)?.inverse()),
        Expr::Identity => Ok(IpfElement::identity(n)),
        Expr::Perm(p) => {
            ensure_dim(n, p.len())?;
            Ok(IpfElement::unit(p.clone()))
        }
        Expr::Idem(x) => {
            ensure_dim(n, x.dim())?;
            Ok(IpfElement::idempotent_on(x.clone()))
        }
        Expr::Product(l, r) => evaluate(l, n)?.compose(&evaluate(r, n)?),
        Expr::Inverse(inner) => Ok(evaluate(inner, n)?.inverse()),
    }
}

/// Dimension fixed by the first literal in the expression, if any.
pub fn literal_dim(e: &Expr) -> Option<usize> {
    match e {
        Expr::Element(a) => Some(a.dim()),
        Expr::Perm(p) => Some(p.len()),
        Expr::Idem(x) => Some(x.dim()),
        Expr::GenP(_) | Expr::GenQ(_) | Expr::Identity => None,
        Expr::Product(l, r) => literal_dim(l).or_else(|| literal_dim(r)),
        Expr::Inverse(inner) => literal_dim(inner),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, n: usize) -> Result<IpfElement> {
    evaluate(&parse(text)?, n)
}

/// Canonical `ipf{...}` text of an element.
pub fn format_element(a: &IpfElement) -> String {
    a.to_string()
}

/// Evaluates a word over `{p, q}` in the submonoid generated by `alpha`
/// and its inverse, with `p ↦ alpha`, `q ↦ alpha⁻¹`. The empty word is the
/// identity of `↑alpha.x`, which is the unit of that submonoid.
///
/// Requires `↑y ⊊ ↑x`, so that the submonoid is bicyclic.
pub fn bicyclic_word(alpha: &IpfElement, word: &str) -> Result<IpfElement> {
    if !alpha.x().le(alpha.y()) || alpha.x() == alpha.y() {
        return Err(IpfError::NotProperEmbedding);
    }
    let inv = alpha.inverse();
    let mut acc = IpfElement::idempotent_on(alpha.x().clone());
    for (offset, c) in word.char_indices() {
        acc = match c {
            'p' => acc.compose(alpha)?,
            'q' => acc.compose(&inv)?,
            _ => return syntax(offset, format!("unexpected '{c}' in a word over {{p,q}}")),
        };
    }
    Ok(acc)
}

/// The word over `{p, q}` matching the bicyclic pair `(i, j)` of
/// `(i,j)*(k,l) = (i + max(j,k) − j, l + max(j,k) − k)`.
///
/// In that product `(0,1)*(1,0)` is the identity, while here `p·q` is the
/// identity, so `(0,1)` corresponds to `p` and `(1,0)` to `q`, and the
/// pair `(i, j)` to `qⁱpʲ`.
pub fn pair_word(i: usize, j: usize) -> String {
    let mut w = "q".repeat(i);
    w.push_str(&"p".repeat(j));
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::bicyclic_mul;

    fn el(s: &[i64], x: &[i64], y: &[i64]) -> IpfElement {
        IpfElement::from_parts(s, x, y).unwrap()
    }

    #[test]
    fn parse_structure() {
        assert_eq!(
            parse("P1*Q1").unwrap(),
            Expr::Product(Box::new(Expr::GenP(1)), Box::new(Expr::GenQ(1)))
        );
        assert_eq!(
            parse("ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}^-1").unwrap(),
            Expr::Inverse(Box::new(Expr::Element(el(&[2, 1], &[2, 1], &[1, 3]))))
        );
        assert_eq!(
            parse(" ( P1 * Q2 ) * s[2,1] ^ - 1 ").unwrap(),
            Expr::Product(
                Box::new(Expr::Product(Box::new(Expr::GenP(1)), Box::new(Expr::GenQ(2)))),
                Box::new(Expr::Inverse(Box::new(Expr::Perm(
                    Permutation::from_one_line(&[2, 1]).unwrap()
                ))))
            )
        );
    }

    #[test]
    fn products_are_left_associative() {
        assert_eq!(
            parse("P1*P2*I").unwrap(),
            Expr::Product(
                Box::new(Expr::Product(Box::new(Expr::GenP(1)), Box::new(Expr::GenP(2)))),
                Box::new(Expr::Identity)
            )
        );
    }

    fn err_offset(text: &str) -> usize {
        match parse(text) {
            Err(IpfError::Syntax { offset, .. }) => offset,
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_offsets() {
        assert_eq!(err_offset("P1**Q1"), 3);
        assert_eq!(err_offset(""), 0);
        assert_eq!(err_offset("P"), 1);
        assert_eq!(err_offset("P1 Q1"), 3);
        assert_eq!(err_offset("(P1"), 3);
        assert_eq!(err_offset("s[1,1]"), 0);
        assert_eq!(err_offset("P1^-2"), 4);
        assert_eq!(err_offset("e[0,1]"), 0);
        assert_eq!(err_offset("P99999999999999999999999"), 1);
        assert_eq!(err_offset(&"(".repeat(500)), MAX_DEPTH);
    }

    #[test]
    fn generator_relations() {
        assert_eq!(eval_str("P1*Q1", 2).unwrap(), IpfElement::identity(2));
        assert_eq!(eval_str("Q1*P1", 2).unwrap(), el(&[1, 2], &[2, 1], &[2, 1]));
        assert_eq!(eval_str("s[2,1]*s[2,1]", 2).unwrap(), IpfElement::identity(2));
        assert_eq!(eval_str("I", 3).unwrap(), IpfElement::identity(3));
        assert_eq!(eval_str("e[2,3]", 2).unwrap(), el(&[1, 2], &[2, 3], &[2, 3]));
    }

    #[test]
    fn evaluation_errors() {
        assert_eq!(
            eval_str("P3", 2),
            Err(IpfError::IndexOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(
            eval_str("Q0", 2),
            Err(IpfError::IndexOutOfRange { index: 0, n: 2 })
        );
        assert!(matches!(
            eval_str("s[2,1]", 3),
            Err(IpfError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn format_round_trip() {
        let a = el(&[2, 1], &[2, 1], &[1, 3]);
        assert_eq!(format_element(&a), "ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}");
        assert_eq!(eval_str(&format_element(&a), 2).unwrap(), a);
        assert_eq!(
            format_element(&IpfElement::identity(2)),
            "ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}"
        );
    }

    #[test]
    fn bicyclic_examples() {
        let alpha = eval_str("P1", 2).unwrap();
        assert_eq!(bicyclic_word(&alpha, "pq").unwrap(), IpfElement::identity(2));
        let qp = bicyclic_word(&alpha, "qp").unwrap();
        assert_eq!(qp, el(&[1, 2], &[2, 1], &[2, 1]));
        assert_ne!(qp, IpfElement::identity(2));
        assert_eq!(bicyclic_word(&alpha, "").unwrap(), IpfElement::identity(2));
        assert_eq!(
            bicyclic_word(&el(&[1, 2], &[2, 2], &[2, 2]), "p"),
            Err(IpfError::NotProperEmbedding)
        );
        assert_eq!(
            bicyclic_word(&el(&[1, 2], &[1, 3], &[2, 2]), "p"),
            Err(IpfError::NotProperEmbedding)
        );
        assert!(matches!(
            bicyclic_word(&alpha, "pxq"),
            Err(IpfError::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn pair_words_follow_bicyclic_product() {
        let gamma = el(&[1], &[1], &[2]);
        for (i, j, k, l) in [(0, 1, 1, 0), (1, 0, 0, 1), (2, 1, 3, 0), (0, 2, 1, 4)] {
            let (a, b) = bicyclic_mul((i, j), (k, l)).unwrap();
            let lhs = bicyclic_word(&gamma, &pair_word(i as usize, j as usize))
                .unwrap()
                .compose(&bicyclic_word(&gamma, &pair_word(k as usize, l as usize)).unwrap())
                .unwrap();
            let rhs = bicyclic_word(&gamma, &pair_word(a as usize, b as usize)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn literal_dimension() {
        assert_eq!(literal_dim(&parse("P1*s[2,1,3]").unwrap()), Some(3));
        assert_eq!(literal_dim(&parse("P1*Q2").unwrap()), None);
    }
}
