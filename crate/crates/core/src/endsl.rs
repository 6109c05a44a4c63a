//! A small expression language for sequences and lists.
//!
//! ```text
//! seq  := "zeros" | "ones" | "periodic(" bits ")" | "natrow(" nat ")"
//!       | "prepend(" bits "," seq ")" | "compl(" seq ")" | "diagc(" enum ")"
//! enum := "figure5" | "const(" seq ")" | "interleave(" enum "," enum ")"
//!       | "spliteven(" enum ")" | "splitodd(" enum ")"
//!       | "insert(" enum "," nat "," seq ")"
//! bits := [01]+        nat := [0-9]+
//! ```
//!
//! Whitespace is insignificant. There are no bindings and no recursion, so
//! every well-typed program denotes a total sequence or list.
//!
//! Parsing runs in two passes: a recursive-descent pass builds an untyped
//! call tree, then elaboration checks names, arities and sorts against the
//! signature table. Errors from either pass carry a source position.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bitseq::{BitSeq, BitString};
use crate::diagonal::{self, Enumeration};

/// The grammar, for diagnostics.
pub const GRAMMAR: &str = "\
seq  := zeros | ones | periodic(BITS) | natrow(NAT) | prepend(BITS, seq)
      | compl(seq) | diagc(enum)
enum := figure5 | const(seq) | interleave(enum, enum) | spliteven(enum)
      | splitodd(enum) | insert(enum, NAT, seq)
BITS := one or more of 0 1      NAT := decimal digits";

/// Deepest nesting accepted before parsing gives up.
pub const MAX_NESTING: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    /// 1-based.
    pub line: u32,
    /// 1-based, in characters.
    pub column: u32,
    /// Byte offset into the source.
    pub offset: usize,
    /// Length in bytes.
    pub len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    Syntax,
    Arity,
    TypeMismatch,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Arity => "arity error",
            ErrorKind::TypeMismatch => "type mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}:{}: {kind}: {message}{}", span.line, span.column, expected_suffix(expected))]
pub struct ParseError {
    pub kind: ErrorKind,
    pub message: String,
    pub span: Span,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn line(&self) -> u32 {
        self.span.line
    }

    pub fn column(&self) -> u32 {
        self.span.column
    }
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(", "))
    }
}

/// A sequence-valued node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqExpr {
    pub kind: SeqKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqKind {
    Zeros,
    Ones,
    Periodic(BitString),
    NatRow(BigUint),
    Prepend(BitString, Box<SeqExpr>),
    Compl(Box<SeqExpr>),
    Diagc(Box<EnumExpr>),
}

/// A list-valued node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumExpr {
    pub kind: EnumKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumKind {
    Figure5,
    Const(Box<SeqExpr>),
    Interleave(Box<EnumExpr>, Box<EnumExpr>),
    SplitEven(Box<EnumExpr>),
    SplitOdd(Box<EnumExpr>),
    Insert(Box<EnumExpr>, BigUint, Box<SeqExpr>),
}

/// A parsed program: either a sequence or a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Seq(SeqExpr),
    Enum(EnumExpr),
}

impl Ast {
    pub fn span(&self) -> Span {
        match self {
            Ast::Seq(s) => s.span,
            Ast::Enum(e) => e.span,
        }
    }

    pub fn as_seq(&self) -> Option<&SeqExpr> {
        match self {
            Ast::Seq(s) => Some(s),
            Ast::Enum(_) => None,
        }
    }

    pub fn as_enum(&self) -> Option<&EnumExpr> {
        match self {
            Ast::Enum(e) => Some(e),
            Ast::Seq(_) => None,
        }
    }

    pub fn eval(&self) -> Value {
        match self {
            Ast::Seq(s) => Value::Seq(eval_seq(s)),
            Ast::Enum(e) => Value::Enum(eval_enum(e)),
        }
    }
}

/// The denotation of a program.
#[derive(Debug, Clone)]
pub enum Value {
    Seq(BitSeq),
    Enum(Enumeration),
}

// ---------------------------------------------------------------------------
// Lexing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Digits(String),
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Digits(s) => format!("literal `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1u32, 1u32);
    let mut chars = text.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        let start = Span {
            line,
            column,
            offset,
            len: 0,
        };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            out.push(Token {
                tok,
                span: Span { len: 1, ..start },
            });
            continue;
        }
        if c.is_ascii_alphanumeric() {
            let is_ident = c.is_ascii_alphabetic();
            let mut end = offset;
            while let Some(&(i, d)) = chars.peek() {
                let accepted = if is_ident {
                    d.is_ascii_alphanumeric()
                } else {
                    d.is_ascii_digit()
                };
                if !accepted {
                    break;
                }
                end = i + d.len_utf8();
                column += 1;
                chars.next();
            }
            let word = text[offset..end].to_string();
            let tok = if is_ident {
                Tok::Ident(word)
            } else {
                Tok::Digits(word)
            };
            out.push(Token {
                tok,
                span: Span {
                    len: end - offset,
                    ..start
                },
            });
            continue;
        }
        return Err(ParseError {
            kind: ErrorKind::Syntax,
            message: format!("unexpected character {c:?}"),
            span: Span {
                len: c.len_utf8(),
                ..start
            },
            expected: vec!["a name".into(), "a literal".into(), "`(`".into(), "`)`".into(), "`,`".into()],
        });
    }
    let end = Span {
        line,
        column,
        offset: text.len(),
        len: 0,
    };
    out.push(Token { tok: Tok::Eof, span: end });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Untyped call tree

#[derive(Debug)]
enum Term {
    Call {
        name: String,
        name_span: Span,
        args: Vec<Term>,
        span: Span,
    },
    Literal {
        digits: String,
        span: Span,
    },
}

impl Term {
    fn span(&self) -> Span {
        match self {
            Term::Call { span, .. } | Term::Literal { span, .. } => *span,
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn cover(from: Span, to: Span) -> Span {
    Span {
        len: to.offset + to.len - from.offset,
        ..from
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            kind: ErrorKind::Syntax,
            message: format!("unexpected {}", t.tok.describe()),
            span: t.span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn term(&mut self, depth: usize) -> Result<Term, ParseError> {
        if depth > MAX_NESTING {
            let t = self.peek();
            return Err(ParseError {
                kind: ErrorKind::Syntax,
                message: format!("expression nested deeper than {MAX_NESTING} levels"),
                span: t.span,
                expected: vec![],
            });
        }
        let t = self.bump();
        match t.tok {
            Tok::Digits(digits) => Ok(Term::Literal { digits, span: t.span }),
            Tok::Ident(name) => {
                if self.peek().tok != Tok::LParen {
                    return Ok(Term::Call {
                        name,
                        name_span: t.span,
                        args: vec![],
                        span: t.span,
                    });
                }
                self.bump();
                let mut args = vec![self.term(depth + 1)?];
                loop {
                    match self.peek().tok {
                        Tok::Comma => {
                            self.bump();
                            args.push(self.term(depth + 1)?);
                        }
                        Tok::RParen => {
                            let close = self.bump();
                            return Ok(Term::Call {
                                name,
                                name_span: t.span,
                                args,
                                span: cover(t.span, close.span),
                            });
                        }
                        _ => return Err(self.unexpected(&["`,`", "`)`"])),
                    }
                }
            }
            _ => {
                self.pos -= usize::from(t.tok != Tok::Eof);
                Err(self.unexpected(&["a name", "a literal"]))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Elaboration

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sort {
    Seq,
    Enum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Param {
    Seq,
    Enum,
    Bits,
    Nat,
}

impl Param {
    fn describe(self) -> &'static str {
        match self {
            Param::Seq => "a sequence",
            Param::Enum => "an enumeration",
            Param::Bits => "a bit string",
            Param::Nat => "a natural number",
        }
    }
}

struct Signature {
    name: &'static str,
    sort: Sort,
    params: &'static [Param],
}

const SIGNATURES: &[Signature] = &[
    Signature { name: "zeros", sort: Sort::Seq, params: &[] },
    Signature { name: "ones", sort: Sort::Seq, params: &[] },
    Signature { name: "periodic", sort: Sort::Seq, params: &[Param::Bits] },
    Signature { name: "natrow", sort: Sort::Seq, params: &[Param::Nat] },
    Signature { name: "prepend", sort: Sort::Seq, params: &[Param::Bits, Param::Seq] },
    Signature { name: "compl", sort: Sort::Seq, params: &[Param::Seq] },
    Signature { name: "diagc", sort: Sort::Seq, params: &[Param::Enum] },
    Signature { name: "figure5", sort: Sort::Enum, params: &[] },
    Signature { name: "const", sort: Sort::Enum, params: &[Param::Seq] },
    Signature { name: "interleave", sort: Sort::Enum, params: &[Param::Enum, Param::Enum] },
    Signature { name: "spliteven", sort: Sort::Enum, params: &[Param::Enum] },
    Signature { name: "splitodd", sort: Sort::Enum, params: &[Param::Enum] },
    Signature { name: "insert", sort: Sort::Enum, params: &[Param::Enum, Param::Nat, Param::Seq] },
];

fn names_of(sort: Option<Sort>) -> Vec<String> {
    SIGNATURES
        .iter()
        .filter(|s| sort.is_none_or(|want| s.sort == want))
        .map(|s| format!("`{}`", s.name))
        .collect()
}

fn sort_param(sort: Sort) -> Param {
    match sort {
        Sort::Seq => Param::Seq,
        Sort::Enum => Param::Enum,
    }
}

enum Arg {
    Seq(SeqExpr),
    Enum(EnumExpr),
    Bits(BitString),
    Nat(BigUint),
}

fn elaborate(term: Term, want: Param) -> Result<Arg, ParseError> {
    match term {
        Term::Literal { digits, span } => match want {
            Param::Nat => Ok(Arg::Nat(digits.parse().expect("lexer only yields digits"))),
            Param::Bits => digits.parse().map(Arg::Bits).map_err(|c| ParseError {
                kind: ErrorKind::TypeMismatch,
                message: format!("literal `{digits}` is not a bit string (contains {c:?})"),
                span,
                expected: vec![want.describe().into()],
            }),
            Param::Seq | Param::Enum => Err(ParseError {
                kind: ErrorKind::TypeMismatch,
                message: format!("literal `{digits}` where {} is required", want.describe()),
                span,
                expected: vec![want.describe().into()],
            }),
        },
        Term::Call {
            name,
            name_span,
            args,
            span,
        } => {
            let Some(sig) = SIGNATURES.iter().find(|s| s.name == name) else {
                let sort = match want {
                    Param::Seq => Some(Sort::Seq),
                    Param::Enum => Some(Sort::Enum),
                    Param::Bits | Param::Nat => None,
                };
                return Err(ParseError {
                    kind: ErrorKind::Syntax,
                    message: format!("unknown name `{name}`"),
                    span: name_span,
                    expected: names_of(sort),
                });
            };
            if sort_param(sig.sort) != want {
                return Err(ParseError {
                    kind: ErrorKind::TypeMismatch,
                    message: format!(
                        "`{name}` is {} but {} is required",
                        sort_param(sig.sort).describe(),
                        want.describe()
                    ),
                    span,
                    expected: vec![want.describe().into()],
                });
            }
            if args.len() != sig.params.len() {
                return Err(ParseError {
                    kind: ErrorKind::Arity,
                    message: format!(
                        "`{name}` takes {} argument{} but {} given",
                        sig.params.len(),
                        if sig.params.len() == 1 { "" } else { "s" },
                        args.len()
                    ),
                    span,
                    expected: vec![format!("{} argument(s)", sig.params.len())],
                });
            }
            let mut elaborated = Vec::with_capacity(args.len());
            for (arg, &p) in args.into_iter().zip(sig.params) {
                elaborated.push(elaborate(arg, p)?);
            }
            Ok(build(sig.name, elaborated, span))
        }
    }
}

fn build(name: &str, args: Vec<Arg>, span: Span) -> Arg {
    let mut it = args.into_iter();
    let seq = |it: &mut std::vec::IntoIter<Arg>| match it.next() {
        Some(Arg::Seq(s)) => Box::new(s),
        _ => unreachable!("checked against signature"),
    };
    macro_rules! take {
        ($variant:ident) => {
            match it.next() {
                Some(Arg::$variant(v)) => v,
                _ => unreachable!("checked against signature"),
            }
        };
    }
    let s = |kind| Arg::Seq(SeqExpr { kind, span });
    let e = |kind| Arg::Enum(EnumExpr { kind, span });
    match name {
        "zeros" => s(SeqKind::Zeros),
        "ones" => s(SeqKind::Ones),
        "periodic" => s(SeqKind::Periodic(take!(Bits))),
        "natrow" => s(SeqKind::NatRow(take!(Nat))),
        "prepend" => {
            let head = take!(Bits);
            s(SeqKind::Prepend(head, seq(&mut it)))
        }
        "compl" => s(SeqKind::Compl(seq(&mut it))),
        "diagc" => s(SeqKind::Diagc(Box::new(take!(Enum)))),
        "figure5" => e(EnumKind::Figure5),
        "const" => e(EnumKind::Const(seq(&mut it))),
        "interleave" => {
            let a = Box::new(take!(Enum));
            e(EnumKind::Interleave(a, Box::new(take!(Enum))))
        }
        "spliteven" => e(EnumKind::SplitEven(Box::new(take!(Enum)))),
        "splitodd" => e(EnumKind::SplitOdd(Box::new(take!(Enum)))),
        "insert" => {
            let source = Box::new(take!(Enum));
            let at = take!(Nat);
            e(EnumKind::Insert(source, at, seq(&mut it)))
        }
        _ => unreachable!("unknown names rejected before building"),
    }
}

/// Parses a sequence or list program.
pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let term = parser.term(0)?;
    if parser.peek().tok != Tok::Eof {
        return Err(parser.unexpected(&["end of input"]));
    }
    let sort = match &term {
        Term::Call { name, .. } => SIGNATURES.iter().find(|s| s.name == name).map(|s| s.sort),
        Term::Literal { span, digits } => {
            return Err(ParseError {
                kind: ErrorKind::TypeMismatch,
                message: format!("literal `{digits}` is not a program"),
                span: *span,
                expected: vec!["a sequence".into(), "an enumeration".into()],
            })
        }
    };
    let want = sort_param(sort.unwrap_or(Sort::Seq));
    let span = term.span();
    match elaborate(term, want).map_err(|e| {
        if sort.is_none() {
            ParseError {
                expected: names_of(None),
                ..e
            }
        } else {
            e
        }
    })? {
        Arg::Seq(s) => Ok(Ast::Seq(s)),
        Arg::Enum(e) => Ok(Ast::Enum(e)),
        Arg::Bits(_) | Arg::Nat(_) => unreachable!("top level {span:?} is a call"),
    }
}

/// Parses a program that must denote a sequence.
pub fn parse_seq(text: &str) -> Result<SeqExpr, ParseError> {
    match parse(text)? {
        Ast::Seq(s) => Ok(s),
        Ast::Enum(e) => Err(ParseError {
            kind: ErrorKind::TypeMismatch,
            message: "an enumeration where a sequence is required".into(),
            span: e.span,
            expected: vec!["a sequence".into()],
        }),
    }
}

/// Parses a program that must denote a list.
pub fn parse_enum(text: &str) -> Result<EnumExpr, ParseError> {
    match parse(text)? {
        Ast::Enum(e) => Ok(e),
        Ast::Seq(s) => Err(ParseError {
            kind: ErrorKind::TypeMismatch,
            message: "a sequence where an enumeration is required".into(),
            span: s.span,
            expected: vec!["an enumeration".into()],
        }),
    }
}

// ---------------------------------------------------------------------------
// Evaluation

pub fn eval_seq(a: &SeqExpr) -> BitSeq {
    match &a.kind {
        SeqKind::Zeros => BitSeq::zeros(),
        SeqKind::Ones => BitSeq::ones(),
        SeqKind::Periodic(p) => BitSeq::periodic(p.clone()).expect("grammar forbids empty bit strings"),
        SeqKind::NatRow(r) => BitSeq::nat_row(r.clone()),
        SeqKind::Prepend(head, tail) => BitSeq::prepend(head.clone(), eval_seq(tail)),
        SeqKind::Compl(s) => eval_seq(s).complement(),
        SeqKind::Diagc(e) => diagonal::antidiagonal(&eval_enum(e)),
    }
}

pub fn eval_enum(a: &EnumExpr) -> Enumeration {
    match &a.kind {
        EnumKind::Figure5 => Enumeration::figure5(),
        EnumKind::Const(s) => Enumeration::constant(eval_seq(s)),
        EnumKind::Interleave(x, y) => diagonal::interleave(&eval_enum(x), &eval_enum(y)),
        EnumKind::SplitEven(e) => diagonal::split(&eval_enum(e)).0,
        EnumKind::SplitOdd(e) => diagonal::split(&eval_enum(e)).1,
        EnumKind::Insert(e, at, s) => diagonal::insert(&eval_enum(e), at.clone(), &eval_seq(s)),
    }
}

// ---------------------------------------------------------------------------
// Printing

impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SeqKind::Zeros => f.write_str("zeros"),
            SeqKind::Ones => f.write_str("ones"),
            SeqKind::Periodic(p) => write!(f, "periodic({p})"),
            SeqKind::NatRow(r) => write!(f, "natrow({r})"),
            SeqKind::Prepend(h, t) => write!(f, "prepend({h}, {t})"),
            SeqKind::Compl(s) => write!(f, "compl({s})"),
            SeqKind::Diagc(e) => write!(f, "diagc({e})"),
        }
    }
}

impl fmt::Display for EnumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            EnumKind::Figure5 => f.write_str("figure5"),
            EnumKind::Const(s) => write!(f, "const({s})"),
            EnumKind::Interleave(a, b) => write!(f, "interleave({a}, {b})"),
            EnumKind::SplitEven(e) => write!(f, "spliteven({e})"),
            EnumKind::SplitOdd(e) => write!(f, "splitodd({e})"),
            EnumKind::Insert(e, at, s) => write!(f, "insert({e}, {at}, {s})"),
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Seq(s) => s.fmt(f),
            Ast::Enum(e) => e.fmt(f),
        }
    }
}
