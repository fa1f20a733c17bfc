use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::regular::alphabet::{Alphabet, Letter};
use crate::regular::nfa::{EpsilonNfa, Nfa};

/// Regular expression tree. Literals are letters of an alphabet that is
/// supplied alongside the tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptySet,
    EmptyWord,
    Literal(Letter),
    Concat(Vec<RegexAst>),
    Union(Vec<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn literal(letter: Letter) -> Self {
        RegexAst::Literal(letter)
    }

    /// Concatenation; flattens nested products and collapses zero or one
    /// factor.
    pub fn concat(parts: Vec<RegexAst>) -> Self {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match p {
                RegexAst::Concat(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => RegexAst::EmptyWord,
            1 => flat.pop().unwrap(),
            _ => RegexAst::Concat(flat),
        }
    }

    pub fn union(parts: Vec<RegexAst>) -> Self {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match p {
                RegexAst::Union(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => RegexAst::EmptySet,
            1 => flat.pop().unwrap(),
            _ => RegexAst::Union(flat),
        }
    }

    pub fn star(inner: RegexAst) -> Self {
        RegexAst::Star(Box::new(inner))
    }

    /// The word `letters` as a product of literals.
    pub fn word(letters: &[Letter]) -> Self {
        Self::concat(letters.iter().map(|&l| RegexAst::Literal(l)).collect())
    }

    pub fn node_count(&self) -> usize {
        match self {
            RegexAst::EmptySet | RegexAst::EmptyWord | RegexAst::Literal(_) => 1,
            RegexAst::Concat(v) | RegexAst::Union(v) => {
                1 + v.iter().map(RegexAst::node_count).sum::<usize>()
            }
            RegexAst::Star(r) => 1 + r.node_count(),
        }
    }

    /// True if the tree uses neither union nor the empty-set constant.
    pub fn is_product_star_only(&self) -> bool {
        match self {
            RegexAst::EmptySet | RegexAst::Union(_) => false,
            RegexAst::EmptyWord | RegexAst::Literal(_) => true,
            RegexAst::Concat(v) => v.iter().all(RegexAst::is_product_star_only),
            RegexAst::Star(r) => r.is_product_star_only(),
        }
    }

    fn check_letters(&self, alphabet: &Alphabet) -> Result<()> {
        match self {
            RegexAst::Literal(l) if !alphabet.contains_letter(*l) => {
                Err(Error::ForeignLetter(format!("#{l}")))
            }
            RegexAst::Concat(v) | RegexAst::Union(v) => {
                v.iter().try_for_each(|r| r.check_letters(alphabet))
            }
            RegexAst::Star(r) => r.check_letters(alphabet),
            _ => Ok(()),
        }
    }

    /// Thompson construction followed by removal of empty transitions.
    pub fn to_nfa(&self, alphabet: &Alphabet) -> Result<Nfa> {
        self.check_letters(alphabet)?;
        let mut b = EpsilonNfa::new(alphabet.len());
        let (start, end) = thompson(self, &mut b);
        b.set_initial(start);
        b.set_accepting(end);
        Ok(b.build(alphabet.clone()))
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut p = Parser {
            text,
            pos: 0,
            alphabet,
        };
        p.skip_ws();
        if p.at_end() {
            return Err(ParseError::new(1, 1, "empty regular expression").into());
        }
        let r = p.union()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected input").into());
        }
        Ok(r)
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        self.write(alphabet, 0, &mut out);
        out
    }

    // precedence: 0 union, 1 concat, 2 star operand
    fn write(&self, alphabet: &Alphabet, prec: u8, out: &mut String) {
        match self {
            RegexAst::EmptySet => out.push('∅'),
            RegexAst::EmptyWord => out.push_str("()"),
            RegexAst::Literal(l) => out.push_str(alphabet.name(*l)),
            RegexAst::Concat(v) => {
                if prec > 1 {
                    out.push('(');
                }
                for r in v {
                    r.write(alphabet, 1, out);
                }
                if prec > 1 {
                    out.push(')');
                }
            }
            RegexAst::Union(v) => {
                if prec > 0 {
                    out.push('(');
                }
                for (i, r) in v.iter().enumerate() {
                    if i > 0 {
                        out.push('|');
                    }
                    r.write(alphabet, 0, out);
                }
                if prec > 0 {
                    out.push(')');
                }
            }
            RegexAst::Star(r) => {
                r.write(alphabet, 2, out);
                let _ = write!(out, "*");
            }
        }
    }
}

fn thompson(r: &RegexAst, b: &mut EpsilonNfa) -> (usize, usize) {
    let start = b.add_state();
    let end = b.add_state();
    match r {
        RegexAst::EmptySet => {}
        RegexAst::EmptyWord => b.add_empty(start, end),
        RegexAst::Literal(l) => b.add_edge(start, *l, end),
        RegexAst::Concat(v) => {
            let mut prev = start;
            for part in v {
                let (s, e) = thompson(part, b);
                b.add_empty(prev, s);
                prev = e;
            }
            b.add_empty(prev, end);
        }
        RegexAst::Union(v) => {
            for part in v {
                let (s, e) = thompson(part, b);
                b.add_empty(start, s);
                b.add_empty(e, end);
            }
        }
        RegexAst::Star(inner) => {
            let (s, e) = thompson(inner, b);
            b.add_empty(start, s);
            b.add_empty(e, s);
            b.add_empty(e, end);
            b.add_empty(start, end);
        }
    }
    (start, end)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn error(&self, msg: &str) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::new(1, self.column(), format!("{msg} `{c}`")),
            None => ParseError::new(1, self.column(), format!("{msg}: end of input")),
        }
    }

    fn union(&mut self) -> Result<RegexAst, ParseError> {
        let mut parts = vec![self.concat()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('|') {
                self.pos += 1;
                parts.push(self.concat()?);
            } else {
                break;
            }
        }
        Ok(RegexAst::union(parts))
    }

    fn concat(&mut self) -> Result<RegexAst, ParseError> {
        let mut parts = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some('|') | Some(')') => break,
                _ => parts.push(self.postfix()?),
            }
        }
        if parts.is_empty() {
            return Err(self.error("expected an expression before"));
        }
        Ok(RegexAst::concat(parts))
    }

    fn postfix(&mut self) -> Result<RegexAst, ParseError> {
        let mut atom = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                atom = RegexAst::star(atom);
            } else {
                break;
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<RegexAst, ParseError> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(self.error("expected an atom"));
        };
        match c {
            '(' => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(RegexAst::EmptyWord);
                }
                let inner = self.union()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)` but found"));
                }
                self.pos += 1;
                Ok(inner)
            }
            '∅' => {
                self.pos += c.len_utf8();
                Ok(RegexAst::EmptySet)
            }
            '@' | 'λ' => {
                self.pos += c.len_utf8();
                Ok(RegexAst::EmptyWord)
            }
            '*' => Err(self.error("`*` without operand:")),
            _ => {
                let rest = self.rest();
                let hit = self
                    .alphabet
                    .symbols()
                    .iter()
                    .enumerate()
                    .find(|(_, s)| rest.starts_with(s.as_str()));
                match hit {
                    Some((i, s)) => {
                        self.pos += s.len();
                        Ok(RegexAst::Literal(i as Letter))
                    }
                    None => Err(self.error("unknown symbol")),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = ab();
        for src in ["(aa)*", "a|b*", "(a|b)*a", "()", "∅", "a(b|())*"] {
            let r = RegexAst::parse(src, &a).unwrap();
            let again = RegexAst::parse(&r.display(&a), &a).unwrap();
            assert_eq!(r, again, "{src}");
        }
    }

    #[test]
    fn parse_errors_carry_columns() {
        let a = ab();
        let e = RegexAst::parse("a(b", &a).unwrap_err();
        assert!(
            matches!(e, Error::Parse(ParseError { column: 4, .. })),
            "{e}"
        );
        let e = RegexAst::parse("ac", &a).unwrap_err();
        assert!(
            matches!(e, Error::Parse(ParseError { column: 2, .. })),
            "{e}"
        );
        assert!(RegexAst::parse("a||b", &a).is_err());
        assert!(RegexAst::parse("*a", &a).is_err());
    }

    #[test]
    fn structure_normalised() {
        let a = ab();
        let r = RegexAst::parse("(aa)*", &a).unwrap();
        assert_eq!(
            r,
            RegexAst::star(RegexAst::Concat(vec![
                RegexAst::Literal(0),
                RegexAst::Literal(0)
            ]))
        );
        assert!(r.is_product_star_only());
        assert!(!RegexAst::parse("a|b", &a).unwrap().is_product_star_only());
    }

    #[test]
    fn empty_word_nfa() {
        let a = ab();
        let n = RegexAst::EmptyWord.to_nfa(&a).unwrap();
        assert!(n.accepts(&[]));
        assert!(!n.accepts(&[0]));
    }
}
