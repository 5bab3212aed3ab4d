//! Bracket identities for `n <= 5` as data: each line states `[U, V]` or
//! `{U, V}` for `U` of grade `k` and `V` of grade `l` in terms of `^`, the
//! Hodge star and `Com`. Lines are parsed, evaluated on random inputs and,
//! when they fail, refitted against a small family of candidate terms.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::grade_support::Bracket;
use crate::algebra::{Field, Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::hodge::{com_bracket, hodge_star};
use crate::random::random_homogeneous;

/// The shipped table.
pub const BRACKET_TABLE: &str = include_str!("../../data/bracket_identities.txt");

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    U,
    V,
    Zero,
    Star(Box<Node>),
    Wedge(Box<Node>, Box<Node>),
    Com(Box<Node>, Box<Node>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub node: Node,
    /// Multiplied by the sign of `det(eta)`.
    pub rho: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub terms: Vec<Term>,
    pub source: String,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BracketLine {
    pub n: usize,
    pub bracket: Bracket,
    pub k: usize,
    pub l: usize,
    pub rhs: Expr,
}

impl fmt::Display for BracketLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} = {}", self.n, self.bracket, self.k, self.l, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    U,
    V,
    R,
    Com,
    Star,
    Wedge,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            'U' => out.push(Tok::U),
            'V' => out.push(Tok::V),
            'r' => out.push(Tok::R),
            '*' => out.push(Tok::Star),
            '^' => out.push(Tok::Wedge),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            ',' => out.push(Tok::Comma),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            'C' if s[i..].starts_with("Com") => {
                out.push(Tok::Com);
                i += 2;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '.') {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                let v = text
                    .parse()
                    .map_err(|_| CliffordError::Parse(format!("bad number `{text}`")))?;
                out.push(Tok::Num(v));
            }
            other => return Err(CliffordError::Parse(format!("unexpected `{other}` in `{s}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| CliffordError::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let got = self.next()?;
        if got != want {
            return Err(CliffordError::Parse(format!("expected {want:?}, found {got:?}")));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut sign = 1.0;
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = -1.0;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let mut t = self.term()?;
            t.coef *= sign;
            terms.push(t);
            match self.peek() {
                Some(Tok::Plus) => sign = 1.0,
                Some(Tok::Minus) => sign = -1.0,
                None => break,
                Some(other) => {
                    return Err(CliffordError::Parse(format!("unexpected {other:?}")));
                }
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let mut coef = 1.0;
        if let Some(Tok::Num(c)) = self.peek() {
            coef = *c;
            self.pos += 1;
            // a bare number is only allowed as the literal zero
            if matches!(self.peek(), None | Some(Tok::Plus) | Some(Tok::Minus)) {
                if coef != 0.0 {
                    return Err(CliffordError::Parse(format!("bare constant {coef}")));
                }
                return Ok(Term {
                    coef: 1.0,
                    node: Node::Zero,
                    rho: false,
                });
            }
        }
        let node = self.wedge()?;
        let rho = if self.peek() == Some(&Tok::R) {
            self.pos += 1;
            true
        } else {
            false
        };
        Ok(Term { coef, node, rho })
    }

    fn wedge(&mut self) -> Result<Node> {
        let mut x = self.unary()?;
        while self.peek() == Some(&Tok::Wedge) {
            self.pos += 1;
            x = Node::Wedge(Box::new(x), Box::new(self.unary()?));
        }
        Ok(x)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            return Ok(Node::Star(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Node> {
        match self.next()? {
            Tok::U => Ok(Node::U),
            Tok::V => Ok(Node::V),
            Tok::Num(z) if z == 0.0 => Ok(Node::Zero),
            Tok::LParen => {
                let x = self.wedge()?;
                self.expect(Tok::RParen)?;
                Ok(x)
            }
            Tok::Com => {
                self.expect(Tok::LParen)?;
                let a = self.wedge()?;
                self.expect(Tok::Comma)?;
                let b = self.wedge()?;
                self.expect(Tok::RParen)?;
                Ok(Node::Com(Box::new(a), Box::new(b)))
            }
            other => Err(CliffordError::Parse(format!("unexpected {other:?}"))),
        }
    }
}

/// Parses a right-hand side such as `2*(U^*V)r - Com(U,V)`.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let terms = p.expr()?;
    Ok(Expr {
        terms,
        source: s.trim().to_string(),
    })
}

/// Parses `n [] k l = expr`.
pub fn parse_line(line: &str) -> Result<BracketLine> {
    let (lhs, rhs) = line
        .split_once('=')
        .ok_or_else(|| CliffordError::Parse(format!("missing `=` in `{line}`")))?;
    let parts: Vec<&str> = lhs.split_whitespace().collect();
    let [n, br, k, l] = parts.as_slice() else {
        return Err(CliffordError::Parse(format!("bad left side `{lhs}`")));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliffordError::Parse(format!("bad integer `{s}`")))
    };
    let bracket = match *br {
        "[]" => Bracket::Commutator,
        "{}" => Bracket::Anticommutator,
        other => return Err(CliffordError::Parse(format!("bad bracket `{other}`"))),
    };
    Ok(BracketLine {
        n: num(n)?,
        bracket,
        k: num(k)?,
        l: num(l)?,
        rhs: parse_expr(rhs)?,
    })
}

/// Parses a whole table, skipping blank lines and `#` comments.
pub fn parse_table(text: &str) -> Result<Vec<BracketLine>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_line)
        .collect()
}

/// The shipped table, parsed.
pub fn bracket_table() -> Vec<BracketLine> {
    parse_table(BRACKET_TABLE).expect("shipped table parses")
}

fn eval_node(node: &Node, u: &Multivector, v: &Multivector) -> Result<Multivector> {
    Ok(match node {
        Node::U => u.clone(),
        Node::V => v.clone(),
        Node::Zero => Multivector::zero(u.signature()),
        Node::Star(x) => hodge_star(&eval_node(x, u, v)?),
        Node::Wedge(a, b) => eval_node(a, u, v)?.exterior_product(&eval_node(b, u, v)?)?,
        Node::Com(a, b) => com_bracket(&eval_node(a, u, v)?, &eval_node(b, u, v)?)?,
    })
}

/// Value of the expression for given `U`, `V`.
pub fn evaluate(expr: &Expr, u: &Multivector, v: &Multivector) -> Result<Multivector> {
    let rho = f64::from(u.signature().det_sign());
    let mut out = Multivector::zero(u.signature());
    for t in &expr.terms {
        let c = if t.rho { t.coef * rho } else { t.coef };
        out += eval_node(&t.node, u, v)?.scale(c);
    }
    Ok(out)
}

/// Outcome of checking one line on every signature with its `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineVerification {
    pub line: String,
    pub n: usize,
    pub bracket: Bracket,
    pub k: usize,
    pub l: usize,
    pub verified: bool,
    /// Largest coefficient deviation seen; infinite if evaluation failed.
    pub max_residual: f64,
    /// Signatures on which the line fails.
    pub failing_signatures: Vec<String>,
    pub error: Option<String>,
    /// A verified replacement right-hand side for failing lines.
    pub fitted: Option<String>,
}

/// Checks `line` on `trials` random homogeneous pairs for every signature
/// with `p + q = n`.
pub fn verify_line(
    line: &BracketLine,
    trials: usize,
    eps: f64,
    rng: &mut impl Rng,
) -> LineVerification {
    let sigs = Signature::all_with_n(line.n, Field::Complex).expect("n in range");
    verify_line_on(line, &sigs, trials, eps, rng)
}

/// As [`verify_line`], restricted to `sigs`, which must all have `n`
/// equal to the line's.
pub fn verify_line_on(
    line: &BracketLine,
    sigs: &[Signature],
    trials: usize,
    eps: f64,
    rng: &mut impl Rng,
) -> LineVerification {
    let mut max_residual: f64 = 0.0;
    let mut failing = Vec::new();
    let mut error = None;
    for &sig in sigs {
        debug_assert_eq!(sig.n(), line.n);
        let mut worst: f64 = 0.0;
        for _ in 0..trials {
            let u = random_homogeneous(sig, line.k, rng);
            let v = random_homogeneous(sig, line.l, rng);
            let lhs = line.bracket.apply(&u, &v).expect("same signature");
            match evaluate(&line.rhs, &u, &v) {
                Ok(rhs) => worst = worst.max(lhs.max_abs_diff(&rhs)),
                Err(e) => {
                    error.get_or_insert_with(|| e.to_string());
                    worst = f64::INFINITY;
                    break;
                }
            }
        }
        if worst > eps {
            failing.push(sig.to_string());
        }
        max_residual = max_residual.max(worst);
    }
    LineVerification {
        line: line.to_string(),
        n: line.n,
        bracket: line.bracket,
        k: line.k,
        l: line.l,
        verified: failing.is_empty(),
        max_residual,
        failing_signatures: failing,
        error,
        fitted: None,
    }
}

/// Candidate terms for refitting.
pub const FIT_CANDIDATES: [&str; 10] = [
    "U^V",
    "*(U^*V)",
    "*(*U^V)",
    "*U^*V",
    "*(*U^*V)",
    "Com(U,V)",
    "Com(*U,*V)",
    "*Com(U,*V)",
    "*Com(*U,V)",
    "*Com(*U,*V)",
];

fn complex_lstsq(cols: &[Vec<Complex64>], rhs: &[Complex64]) -> Option<(Vec<Complex64>, f64)> {
    let m = cols.len();
    // normal equations, m <= 2
    let mut a = nalgebra::DMatrix::<Complex64>::zeros(m, m);
    let mut b = nalgebra::DVector::<Complex64>::zeros(m);
    for i in 0..m {
        for j in 0..m {
            a[(i, j)] = cols[i].iter().zip(&cols[j]).map(|(x, y)| x.conj() * y).sum();
        }
        b[i] = cols[i].iter().zip(rhs).map(|(x, y)| x.conj() * y).sum();
    }
    let x = a.lu().solve(&b)?;
    let x: Vec<Complex64> = x.iter().copied().collect();
    let residual = rhs
        .iter()
        .enumerate()
        .map(|(r, y)| {
            let fit: Complex64 = (0..m).map(|i| x[i] * cols[i][r]).sum();
            (fit - y).norm()
        })
        .fold(0.0, f64::max);
    Some((x, residual))
}

fn format_coef(c: f64) -> String {
    if c == 1.0 {
        String::new()
    } else if c == -1.0 {
        "-".into()
    } else if c.fract() == 0.0 {
        format!("{}", c as i64)
    } else {
        format!("{c}")
    }
}

/// Finds a right-hand side of at most two candidate terms that reproduces
/// the bracket on every signature with the line's `n`. Coefficients must be
/// the same real number on all signatures, or that number times the sign of
/// `det(eta)`.
pub fn fit_line(line: &BracketLine, trials: usize, eps: f64, rng: &mut impl Rng) -> Option<String> {
    let sigs = Signature::all_with_n(line.n, Field::Complex).expect("n in range");
    let cands: Vec<Expr> = FIT_CANDIDATES
        .iter()
        .map(|c| parse_expr(c).expect("candidate parses"))
        .collect();
    // columns[s][c] = stacked candidate values, rhs[s] = stacked bracket values
    let mut columns: Vec<Vec<Option<Vec<Complex64>>>> = Vec::new();
    let mut rhs: Vec<Vec<Complex64>> = Vec::new();
    for sig in &sigs {
        let samples: Vec<(Multivector, Multivector)> = (0..trials.max(2))
            .map(|_| {
                (
                    random_homogeneous(*sig, line.k, rng),
                    random_homogeneous(*sig, line.l, rng),
                )
            })
            .collect();
        rhs.push(
            samples
                .iter()
                .flat_map(|(u, v)| line.bracket.apply(u, v).expect("same").into_coeffs())
                .collect(),
        );
        columns.push(
            cands
                .iter()
                .map(|c| {
                    let mut col = Vec::new();
                    for (u, v) in &samples {
                        col.extend(evaluate(c, u, v).ok()?.into_coeffs());
                    }
                    Some(col)
                })
                .collect(),
        );
    }

    let mut subsets: Vec<Vec<usize>> = (0..cands.len()).map(|i| vec![i]).collect();
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            subsets.push(vec![i, j]);
        }
    }
    // a vanishing bracket is fitted by the literal zero
    if rhs.iter().flatten().all(|x| x.norm() <= eps) {
        return Some("0".into());
    }
    'subset: for subset in subsets {
        let mut coefs: Vec<Vec<f64>> = Vec::new();
        for (s, _) in sigs.iter().enumerate() {
            let cols: Option<Vec<Vec<Complex64>>> =
                subset.iter().map(|&i| columns[s][i].clone()).collect();
            let Some(cols) = cols else { continue 'subset };
            if cols.iter().any(|c| c.iter().all(|x| x.norm() <= eps)) {
                continue 'subset;
            }
            let Some((x, res)) = complex_lstsq(&cols, &rhs[s]) else { continue 'subset };
            if res > eps || x.iter().any(|c| c.im.abs() > eps) {
                continue 'subset;
            }
            coefs.push(x.iter().map(|c| c.re).collect());
        }
        let mut parts = Vec::new();
        for (j, &cand) in subset.iter().enumerate() {
            let base = coefs[0][j] * f64::from(sigs[0].det_sign());
            let plain = coefs.iter().all(|c| (c[j] - coefs[0][j]).abs() <= 1e-6);
            let signed = sigs
                .iter()
                .zip(&coefs)
                .all(|(s, c)| (c[j] - base * f64::from(s.det_sign())).abs() <= 1e-6);
            let (c, rho) = if plain {
                (coefs[0][j], false)
            } else if signed {
                (base, true)
            } else {
                continue 'subset;
            };
            let c = (c * 2.0).round() / 2.0;
            let text = format!(
                "{}{}{}",
                format_coef(c),
                FIT_CANDIDATES[cand],
                if rho { "r" } else { "" }
            );
            parts.push(text);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        // confirm on fresh samples
        let candidate = BracketLine {
            rhs: parse_expr(&out).ok()?,
            ..line.clone()
        };
        if verify_line(&candidate, trials, eps, rng).verified {
            return Some(out);
        }
    }
    None
}

/// Verifies every line, fitting a replacement for each failing one.
pub fn verify_table(
    lines: &[BracketLine],
    trials: usize,
    eps: f64,
    rng: &mut impl Rng,
) -> Vec<LineVerification> {
    lines
        .iter()
        .map(|line| {
            let mut v = verify_line(line, trials, eps, rng);
            if !v.verified {
                v.fitted = fit_line(line, trials.min(10), eps, rng);
            }
            v
        })
        .collect()
}
