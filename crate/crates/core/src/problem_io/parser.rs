use crate::kernel::{Literal, Signature, SymbolKind, Term, Var};

use super::{InputClause, ProblemError, ProblemSpec, Role};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    Number(String),
    Dollar(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Pipe,
    Eq,
    Neq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lower(s) | Tok::Upper(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Dollar(s) => format!("`${s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Neq => "`!=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ProblemError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            '~' => Some(Tok::Tilde),
            '|' => Some(Tok::Pipe),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, line, column: col });
            i += 1;
            col += 1;
            continue;
        }
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '!' {
            if chars.get(i + 1) == Some(&'=') {
                out.push(Token { tok: Tok::Neq, line, column: col });
                i += 2;
                col += 2;
                continue;
            }
            return Err(ProblemError::parse(line, col, "`!=`", "`!`"));
        }
        let word_char = |ch: char| ch.is_ascii_alphanumeric() || ch == '_';
        if word_char(c) || c == '$' {
            let start = i;
            i += 1;
            while i < chars.len() && word_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = if let Some(rest) = word.strip_prefix('$') {
                Tok::Dollar(rest.to_string())
            } else if c.is_ascii_digit() {
                Tok::Number(word)
            } else if c.is_ascii_uppercase() || c == '_' {
                Tok::Upper(word)
            } else {
                Tok::Lower(word)
            };
            out.push(Token {
                tok,
                line: start_line,
                column: start_col,
            });
            continue;
        }
        return Err(ProblemError::parse(line, col, "a token", &format!("`{c}`")));
    }
    out.push(Token { tok: Tok::Eof, line, column: col });
    Ok(out)
}

/// Parsed term before the predicate/function distinction is settled.
enum Raw {
    Var(String),
    App(String, Vec<Raw>, usize, usize),
}

pub(super) struct Parser<'s> {
    tokens: Vec<Token>,
    pos: usize,
    sig: &'s mut Signature,
    vars: Vec<String>,
}

impl<'s> Parser<'s> {
    pub(super) fn new(text: &str, sig: &'s mut Signature) -> Result<Self, ProblemError> {
        Ok(Parser {
            tokens: lex(text)?,
            pos: 0,
            sig,
            vars: Vec::new(),
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ProblemError> {
        let t = self.peek();
        Err(ProblemError::parse(t.line, t.column, expected, &t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ProblemError> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            self.error(&tok.describe())
        }
    }

    fn name(&mut self) -> Result<String, ProblemError> {
        match &self.peek().tok {
            Tok::Lower(s) | Tok::Number(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => self.error("a name"),
        }
    }

    pub(super) fn problem(mut self, name: &str) -> Result<ProblemSpec, ProblemError> {
        let mut clauses = Vec::new();
        let mut theories = Vec::new();
        loop {
            match &self.peek().tok {
                Tok::Eof => break,
                Tok::Lower(kw) if kw == "cnf" => clauses.push(self.cnf()?),
                Tok::Lower(kw) if kw == "theory" => {
                    self.next();
                    self.expect(Tok::LParen)?;
                    loop {
                        theories.push(self.name()?);
                        if self.peek().tok == Tok::Comma {
                            self.next();
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::RParen)?;
                    self.expect(Tok::Dot)?;
                }
                _ => return self.error("`cnf` or `theory`"),
            }
        }
        if clauses.is_empty() {
            return Err(ProblemError::Empty);
        }
        Ok(ProblemSpec {
            name: name.to_string(),
            signature: self.sig.clone(),
            clauses,
            theories,
        })
    }

    pub(super) fn clauses(mut self) -> Result<Vec<InputClause>, ProblemError> {
        let mut out = Vec::new();
        while self.peek().tok != Tok::Eof {
            out.push(self.cnf()?);
        }
        Ok(out)
    }

    fn cnf(&mut self) -> Result<InputClause, ProblemError> {
        match &self.peek().tok {
            Tok::Lower(kw) if kw == "cnf" => {
                self.next();
            }
            _ => return self.error("`cnf`"),
        }
        self.expect(Tok::LParen)?;
        let name = self.name()?;
        self.expect(Tok::Comma)?;
        let role = match &self.peek().tok {
            Tok::Lower(r) => match r.as_str() {
                "axiom" => Role::Axiom,
                "theory_axiom" => Role::TheoryAxiom,
                "negated_conjecture" => Role::NegatedConjecture,
                _ => return self.error("`axiom`, `theory_axiom` or `negated_conjecture`"),
            },
            _ => return self.error("a role"),
        };
        self.next();
        self.expect(Tok::Comma)?;
        self.vars.clear();
        let literals = if self.peek().tok == Tok::LParen {
            self.next();
            let lits = self.disjunction()?;
            self.expect(Tok::RParen)?;
            lits
        } else {
            self.disjunction()?
        };
        self.expect(Tok::RParen)?;
        self.expect(Tok::Dot)?;
        Ok(InputClause { name, role, literals })
    }

    fn disjunction(&mut self) -> Result<Vec<Literal>, ProblemError> {
        let mut lits = vec![self.literal()?];
        while self.peek().tok == Tok::Pipe {
            self.next();
            lits.push(self.literal()?);
        }
        Ok(lits)
    }

    fn literal(&mut self) -> Result<Literal, ProblemError> {
        let mut positive = true;
        if self.peek().tok == Tok::Tilde {
            self.next();
            positive = false;
        }
        let (line, column) = (self.peek().line, self.peek().column);
        let lhs = self.raw_term()?;
        let eq_polarity = match self.peek().tok {
            Tok::Eq => Some(true),
            Tok::Neq => Some(false),
            _ => None,
        };
        if let Some(eq_positive) = eq_polarity {
            self.next();
            let rhs = self.raw_term()?;
            let eq = self
                .sig
                .intern(crate::kernel::EQUALITY, 2, SymbolKind::Predicate)
                .map_err(|e| ProblemError::arity(line, column, e))?;
            let args = vec![self.term(lhs)?, self.term(rhs)?];
            return Ok(Literal::new(positive == eq_positive, eq, args));
        }
        match lhs {
            Raw::Var(_) => Err(ProblemError::parse(line, column, "an atom", "a variable")),
            Raw::App(name, args, l, c) => {
                let pred = self
                    .sig
                    .intern(&name, args.len(), SymbolKind::Predicate)
                    .map_err(|e| ProblemError::arity(l, c, e))?;
                let args = args
                    .into_iter()
                    .map(|a| self.term(a))
                    .collect::<Result<_, _>>()?;
                Ok(Literal::new(positive, pred, args))
            }
        }
    }

    fn raw_term(&mut self) -> Result<Raw, ProblemError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Upper(v) => {
                self.next();
                Ok(Raw::Var(v))
            }
            Tok::Lower(f) => {
                self.next();
                let mut args = Vec::new();
                if self.peek().tok == Tok::LParen {
                    self.next();
                    args.push(self.raw_term()?);
                    while self.peek().tok == Tok::Comma {
                        self.next();
                        args.push(self.raw_term()?);
                    }
                    self.expect(Tok::RParen)?;
                }
                Ok(Raw::App(f, args, t.line, t.column))
            }
            Tok::Dollar(ref d) if d == "false" => Err(ProblemError::parse(
                t.line,
                t.column,
                "a literal (`$false` is reserved for output)",
                "`$false`",
            )),
            _ => self.error("a term"),
        }
    }

    fn term(&mut self, raw: Raw) -> Result<Term, ProblemError> {
        match raw {
            Raw::Var(name) => {
                let idx = match self.vars.iter().position(|v| *v == name) {
                    Some(i) => i,
                    None => {
                        self.vars.push(name);
                        self.vars.len() - 1
                    }
                };
                Ok(Term::Var(Var(idx as u32)))
            }
            Raw::App(name, args, l, c) => {
                let sym = self
                    .sig
                    .intern(&name, args.len(), SymbolKind::Function)
                    .map_err(|e| ProblemError::arity(l, c, e))?;
                let args = args
                    .into_iter()
                    .map(|a| self.term(a))
                    .collect::<Result<_, _>>()?;
                Ok(Term::App(sym, args))
            }
        }
    }
}
