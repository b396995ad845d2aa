//! Line-oriented text input.
//!
//! ```text
//! # comment
//! poset C3            | lattice NAME | monoid NAME | topology NAME
//! elements 0 a 1      # poset, lattice, monoid
//! cover 0 a           # a <= b (closed transitively); `leq` is a synonym
//! zero 0              # monoid; omitted means a zero is adjoined
//! unit 1              # monoid
//! mul x y 0           # x·y = 0; one direction suffices
//! points p q          # topology
//! open p              # topology; bare `open` is the empty set
//! builtin chain 3     # a built-in generator, on its own
//! ```
//!
//! Products with the zero or the unit are inferred. Every other product
//! must be given; partial tables are errors.

use std::fmt;

use bousfield_core::builtin::{self, BuiltinError};
use bousfield_core::order::OrderError;
use bousfield_core::{CMonoid0, ElemSet, Lattice, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Poset,
    Lattice,
    Monoid,
    Topology,
    Builtin,
}

impl InputKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InputKind::Poset => "poset",
            InputKind::Lattice => "lattice",
            InputKind::Monoid => "monoid",
            InputKind::Topology => "topology",
            InputKind::Builtin => "builtin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    pub points: Vec<String>,
    pub opens: Vec<ElemSet>,
    pub lattice: Lattice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Poset(Poset),
    Lattice(Lattice),
    Monoid(CMonoid0),
    Topology(Topology),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSpec {
    pub kind: InputKind,
    pub name: String,
    pub body: Structure,
    /// Generator name and parameters, for `builtin` inputs.
    pub generator: Option<(String, Vec<u64>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {} error: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Semantic => "semantic" })]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("input is a monoid, not a lattice")]
    NotALatticeInput,
    #[error(transparent)]
    Order(#[from] OrderError),
}

impl InputSpec {
    /// The lattice carried by this input; posets are checked for meets and
    /// joins.
    pub fn lattice(&self) -> Result<Lattice, StructureError> {
        match &self.body {
            Structure::Poset(p) => Ok(Lattice::from_poset(p.clone())?),
            Structure::Lattice(l) => Ok(l.clone()),
            Structure::Topology(t) => Ok(t.lattice.clone()),
            Structure::Monoid(_) => Err(StructureError::NotALatticeInput),
        }
    }

    /// The grading monoid: the input monoid, or the meet-monoid of a
    /// lattice input.
    pub fn monoid(&self) -> Result<CMonoid0, StructureError> {
        match &self.body {
            Structure::Monoid(m) => Ok(m.clone()),
            _ => Ok(CMonoid0::from_lattice_meet(&self.lattice()?)),
        }
    }
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices().chain(std::iter::once((code.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    column: code[..s].chars().count() + 1,
                    text: &code[s..i],
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        kind,
        message: message.into(),
    }
}

struct Directive<'a> {
    line: usize,
    column: usize,
    keyword: &'a str,
    args: Vec<Token<'a>>,
}

impl Directive<'_> {
    fn syntax(&self, message: impl Into<String>) -> ParseError {
        err(self.line, self.column, ParseErrorKind::Syntax, message)
    }

    fn semantic(&self, message: impl Into<String>) -> ParseError {
        err(self.line, self.column, ParseErrorKind::Semantic, message)
    }

    fn arg_semantic(&self, i: usize, message: impl Into<String>) -> ParseError {
        err(self.line, self.args[i].column, ParseErrorKind::Semantic, message)
    }

    fn arity(&self, n: usize) -> Result<(), ParseError> {
        if self.args.len() == n {
            Ok(())
        } else {
            Err(self.syntax(format!(
                "`{}` takes {n} argument(s), found {}",
                self.keyword,
                self.args.len()
            )))
        }
    }
}

pub fn parse_input(text: &str) -> Result<InputSpec, ParseError> {
    let mut directives = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut tokens = tokenize(line).into_iter();
        if let Some(first) = tokens.next() {
            directives.push(Directive {
                line: i + 1,
                column: first.column,
                keyword: first.text,
                args: tokens.collect(),
            });
        }
    }
    let Some((header, rest)) = directives.split_first() else {
        return Err(err(1, 1, ParseErrorKind::Syntax, "empty input"));
    };
    let kind = match header.keyword {
        "poset" => InputKind::Poset,
        "lattice" => InputKind::Lattice,
        "monoid" => InputKind::Monoid,
        "topology" => InputKind::Topology,
        "builtin" => InputKind::Builtin,
        other => {
            return Err(header.syntax(format!(
                "expected `poset`, `lattice`, `monoid`, `topology` or `builtin`, found `{other}`"
            )))
        }
    };
    if kind == InputKind::Builtin {
        if let Some(extra) = rest.first() {
            return Err(extra.syntax("`builtin` input takes a single line"));
        }
        return parse_builtin(header);
    }
    header.arity(1)?;
    let name = header.args[0].text.to_string();
    let body = match kind {
        InputKind::Poset | InputKind::Lattice => parse_order(kind, header, rest)?,
        InputKind::Monoid => Structure::Monoid(parse_monoid(header, rest)?),
        InputKind::Topology => parse_topology(header, rest)?,
        InputKind::Builtin => unreachable!(),
    };
    Ok(InputSpec {
        kind,
        name,
        body,
        generator: None,
    })
}

fn parse_builtin(d: &Directive<'_>) -> Result<InputSpec, ParseError> {
    let Some(name) = d.args.first() else {
        return Err(d.syntax("`builtin` needs a generator name"));
    };
    let mut params = Vec::new();
    for (i, t) in d.args.iter().enumerate().skip(1) {
        params.push(t.text.parse::<u64>().map_err(|_| {
            err(
                d.line,
                d.args[i].column,
                ParseErrorKind::Syntax,
                format!("expected an integer, found `{}`", t.text),
            )
        })?);
    }
    builtin_generators(name.text, &params).map_err(|e| d.semantic(e.to_string()))
}

/// A built-in structure as an [`InputSpec`] of kind `builtin`.
pub fn builtin_generators(name: &str, params: &[u64]) -> Result<InputSpec, BuiltinError> {
    let body = match builtin::builtin_monoid(name, params) {
        Ok(m) => Structure::Monoid(m),
        Err(BuiltinError::UnknownGenerator(_)) => Structure::Lattice(builtin::builtin_lattice(name, params)?),
        Err(e) => return Err(e),
    };
    let mut label = name.to_string();
    for p in params {
        label.push('-');
        label.push_str(&p.to_string());
    }
    Ok(InputSpec {
        kind: InputKind::Builtin,
        name: label,
        body,
        generator: Some((name.to_string(), params.to_vec())),
    })
}

/// Parses a `--builtin` argument such as `chain:3`, `chain 3` or `paper-s5`.
pub fn builtin_from_arg(arg: &str) -> Result<InputSpec, BuiltinError> {
    let mut parts = arg.split([':', ' ', ',']).filter(|s| !s.is_empty());
    let name = parts.next().unwrap_or("");
    let params = parts
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| BuiltinError::BadParams(name.to_string(), format!("`{p}` is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    builtin_generators(name, &params)
}

fn expect_elements<'a>(
    rest: &'a [Directive<'a>],
    header: &Directive<'_>,
) -> Result<(Vec<String>, &'a [Directive<'a>]), ParseError> {
    match rest.split_first() {
        Some((d, tail)) if d.keyword == "elements" => {
            let names: Vec<String> = d.args.iter().map(|t| t.text.to_string()).collect();
            for (i, n) in names.iter().enumerate() {
                if names[..i].contains(n) {
                    return Err(d.arg_semantic(i, format!("element `{n}` declared twice")));
                }
            }
            if names.is_empty() {
                return Err(d.semantic("no elements declared"));
            }
            Ok((names, tail))
        }
        Some((d, _)) => Err(d.syntax(format!("expected `elements`, found `{}`", d.keyword))),
        None => Err(err(
            header.line + 1,
            1,
            ParseErrorKind::Syntax,
            "missing `elements` line",
        )),
    }
}

fn lookup(names: &[String], d: &Directive<'_>, i: usize) -> Result<usize, ParseError> {
    let t = d.args[i].text;
    names
        .iter()
        .position(|n| n == t)
        .ok_or_else(|| d.arg_semantic(i, format!("unknown element `{t}`")))
}

fn parse_order(kind: InputKind, header: &Directive<'_>, rest: &[Directive<'_>]) -> Result<Structure, ParseError> {
    let (names, rest) = expect_elements(rest, header)?;
    let mut relations = Vec::new();
    for d in rest {
        match d.keyword {
            "cover" | "leq" => {
                d.arity(2)?;
                lookup(&names, d, 0)?;
                lookup(&names, d, 1)?;
                relations.push((d.args[0].text.to_string(), d.args[1].text.to_string()));
            }
            other => return Err(d.syntax(format!("unexpected `{other}` in a {}", kind.as_str()))),
        }
    }
    let poset = Poset::build(&names, &relations).map_err(|e| header.semantic(e.to_string()))?;
    Ok(match kind {
        InputKind::Lattice => {
            Structure::Lattice(Lattice::from_poset(poset).map_err(|e| header.semantic(e.to_string()))?)
        }
        _ => Structure::Poset(poset),
    })
}

fn parse_monoid(header: &Directive<'_>, rest: &[Directive<'_>]) -> Result<CMonoid0, ParseError> {
    let (names, rest) = expect_elements(rest, header)?;
    let n = names.len();
    let mut zero = None;
    let mut unit = None;
    let mut products: Vec<Option<usize>> = vec![None; n * n];
    let mut muls = Vec::new();
    for d in rest {
        match d.keyword {
            "zero" | "unit" => {
                d.arity(1)?;
                let slot = if d.keyword == "zero" { &mut zero } else { &mut unit };
                if slot.is_some() {
                    return Err(d.semantic(format!("`{}` given twice", d.keyword)));
                }
                *slot = Some(lookup(&names, d, 0)?);
            }
            "mul" => {
                d.arity(3)?;
                muls.push(d);
            }
            other => return Err(d.syntax(format!("unexpected `{other}` in a monoid"))),
        }
    }
    let Some(unit) = unit else {
        return Err(header.semantic("monoid has no `unit`"));
    };
    for d in &muls {
        let (a, b, c) = (lookup(&names, d, 0)?, lookup(&names, d, 1)?, lookup(&names, d, 2)?);
        for (x, y) in [(a, b), (b, a)] {
            match products[x * n + y] {
                Some(prev) if prev != c => {
                    return Err(d.semantic(format!(
                        "product `{}`·`{}` given as both `{}` and `{}`",
                        names[x], names[y], names[prev], names[c]
                    )))
                }
                _ => products[x * n + y] = Some(c),
            }
        }
    }
    for a in 0..n {
        for (x, y) in [(unit, a), (a, unit)] {
            if let Some(prev) = products[x * n + y].filter(|&p| p != a) {
                return Err(header.semantic(format!(
                    "`{}` is the unit but `{}`·`{}` = `{}`",
                    names[unit], names[x], names[y], names[prev]
                )));
            }
            products[x * n + y] = Some(a);
        }
        if let Some(z) = zero {
            for (x, y) in [(z, a), (a, z)] {
                if let Some(prev) = products[x * n + y].filter(|&p| p != z) {
                    return Err(header.semantic(format!(
                        "`{}` is the zero but `{}`·`{}` = `{}`",
                        names[z], names[x], names[y], names[prev]
                    )));
                }
                products[x * n + y] = Some(z);
            }
        }
    }
    if let Some(i) = products.iter().position(Option::is_none) {
        return Err(header.semantic(format!("product `{}`·`{}` undeclared", names[i / n], names[i % n])));
    }
    let table: Vec<usize> = products.into_iter().map(|p| p.expect("checked total")).collect();
    let result = match zero {
        Some(z) => CMonoid0::new(&names, table, unit, z),
        None => CMonoid0::with_adjoined_zero(&names, |a, b| table[a * n + b], unit),
    };
    result.map_err(|e| header.semantic(e.to_string()))
}

fn parse_topology(header: &Directive<'_>, rest: &[Directive<'_>]) -> Result<Structure, ParseError> {
    let points: Vec<String> = match rest.first() {
        Some(d) if d.keyword == "points" => d.args.iter().map(|t| t.text.to_string()).collect(),
        Some(d) => return Err(d.syntax(format!("expected `points`, found `{}`", d.keyword))),
        None => return Err(err(header.line + 1, 1, ParseErrorKind::Syntax, "missing `points` line")),
    };
    let mut opens = Vec::new();
    for d in &rest[1..] {
        if d.keyword != "open" {
            return Err(d.syntax(format!("unexpected `{}` in a topology", d.keyword)));
        }
        let mut s = ElemSet::EMPTY;
        for i in 0..d.args.len() {
            let p = points
                .iter()
                .position(|x| x == d.args[i].text)
                .ok_or_else(|| d.arg_semantic(i, format!("unknown point `{}`", d.args[i].text)))?;
            s.insert(p);
        }
        if opens.contains(&s) {
            return Err(d.semantic("open set listed twice"));
        }
        opens.push(s);
    }
    let lattice = builtin::topology_from_masks(&points, &opens).map_err(|e| header.semantic(e.to_string()))?;
    Ok(Structure::Topology(Topology { points, opens, lattice }))
}

/// Canonical text form; [`parse_input`] reads it back to an equal value.
pub fn print_input(spec: &InputSpec) -> String {
    let mut out = String::new();
    if let Some((name, params)) = &spec.generator {
        out.push_str("builtin ");
        out.push_str(name);
        for p in params {
            out.push_str(&format!(" {p}"));
        }
        out.push('\n');
        return out;
    }
    out.push_str(&format!("{} {}\n", spec.kind.as_str(), spec.name));
    match &spec.body {
        Structure::Poset(p) => print_order(&mut out, p),
        Structure::Lattice(l) => print_order(&mut out, l.poset()),
        Structure::Monoid(m) => print_monoid(&mut out, m),
        Structure::Topology(t) => {
            out.push_str(&format!("points {}\n", t.points.join(" ")));
            for s in &t.opens {
                out.push_str("open");
                for p in s.iter() {
                    out.push(' ');
                    out.push_str(&t.points[p]);
                }
                out.push('\n');
            }
        }
    }
    out
}

fn print_order(out: &mut String, p: &Poset) {
    out.push_str(&format!("elements {}\n", p.names().join(" ")));
    for (a, b) in p.covers() {
        out.push_str(&format!("cover {} {}\n", p.name(a), p.name(b)));
    }
}

fn print_monoid(out: &mut String, m: &CMonoid0) {
    let shown: Vec<usize> = (0..m.len())
        .filter(|&x| !(m.has_adjoined_zero() && x == m.zero()))
        .collect();
    let names: Vec<&str> = shown.iter().map(|&x| m.name(x)).collect();
    out.push_str(&format!("elements {}\n", names.join(" ")));
    if !m.has_adjoined_zero() {
        out.push_str(&format!("zero {}\n", m.name(m.zero())));
    }
    out.push_str(&format!("unit {}\n", m.name(m.unit())));
    for (i, &a) in shown.iter().enumerate() {
        for &b in &shown[i..] {
            if [a, b].iter().any(|&x| x == m.zero() || x == m.unit()) {
                continue;
            }
            out.push_str(&format!("mul {} {} {}\n", m.name(a), m.name(b), m.name(m.mul(a, b))));
        }
    }
}

impl fmt::Display for InputSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_input(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_poset() {
        let spec = parse_input("poset C3\nelements 0 a 1\ncover 0 a\ncover a 1\n").unwrap();
        assert_eq!(spec.kind, InputKind::Poset);
        let l = spec.lattice().unwrap();
        assert!(l.is_isomorphic(&builtin::chain(3)).unwrap());
    }

    #[test]
    fn s5_monoid() {
        let spec =
            parse_input("monoid M4\nelements 0 1 x y\nzero 0\nunit 1\nmul x x 0\nmul x y 0\nmul y y y\n").unwrap();
        assert_eq!(spec.body, Structure::Monoid(builtin::paper_s5()));
    }

    #[test]
    fn partial_table_is_semantic_error() {
        let e = parse_input("monoid bad\nelements 0 1 x\nzero 0\nunit 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Semantic);
        assert!(e.message.contains("`x`·`x` undeclared"), "{e}");
    }

    #[test]
    fn adjoined_zero() {
        let spec = parse_input("monoid S4\nelements 1 m\nunit 1\nmul m m m\n").unwrap();
        assert_eq!(spec.body, Structure::Monoid(builtin::paper_s4()));
        let printed = print_input(&spec);
        assert!(!printed.contains("zero"));
        assert_eq!(parse_input(&printed).unwrap(), spec);
    }

    #[test]
    fn error_positions() {
        let e = parse_input("poset P\nelements a b\ncover a  zz\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (3, 10, ParseErrorKind::Semantic));
        let e = parse_input("# hi\n  frobnicate x\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 3, ParseErrorKind::Syntax));
        let e = parse_input("").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn lattice_kind_checks_bounds() {
        let e = parse_input("lattice A\nelements x y\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Semantic);
        assert!(parse_input("poset A\nelements x y\n").is_ok());
    }

    #[test]
    fn topology_input() {
        let spec = parse_input("topology S\npoints p q\nopen\nopen p\nopen p q\n").unwrap();
        assert!(spec.lattice().unwrap().is_isomorphic(&builtin::chain(3)).unwrap());
        let e = parse_input("topology S\npoints p q\nopen\nopen p\nopen q\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Semantic);
    }

    #[test]
    fn conflicting_products() {
        let e = parse_input("monoid M\nelements 0 1 x\nzero 0\nunit 1\nmul x x 0\nmul x x x\n").unwrap_err();
        assert_eq!((e.line, e.kind), (6, ParseErrorKind::Semantic));
    }

    #[test]
    fn builtins() {
        let spec = parse_input("builtin chain 3\n").unwrap();
        assert_eq!(spec.body, Structure::Lattice(builtin::chain(3)));
        assert_eq!(
            builtin_generators("divisors", &[12]).unwrap().lattice().unwrap().len(),
            6
        );
        assert_eq!(
            builtin_generators("paper-s5", &[]).unwrap().body,
            Structure::Monoid(builtin::paper_s5())
        );
        assert!(matches!(
            builtin_generators("zzz", &[]),
            Err(BuiltinError::UnknownGenerator(_))
        ));
        assert!(matches!(
            builtin_generators("chain", &[0]),
            Err(BuiltinError::BadParams(..))
        ));
        assert_eq!(
            builtin_from_arg("chain:3").unwrap(),
            builtin_generators("chain", &[3]).unwrap()
        );
        assert_eq!(parse_input(&print_input(&spec)).unwrap(), spec);
    }
}
