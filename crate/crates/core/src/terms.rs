//! Linear-non-linear terms: split contexts, use-count checking, and
//! substitution for a linear or a non-linear variable.

use crate::error::{Error, Result};
use crate::lnl::Tag;
use crate::report::LawReport;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpDecl {
    pub name: String,
    pub arity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub ops: Vec<OpDecl>,
}

impl Signature {
    pub fn new(ops: &[(&str, usize)]) -> Result<Self> {
        let s = Signature {
            ops: ops
                .iter()
                .map(|(n, a)| OpDecl {
                    name: n.to_string(),
                    arity: *a,
                })
                .collect(),
        };
        s.validate()?;
        Ok(s)
    }

    /// `g/2`, `k/1`, `c/0`.
    pub fn small() -> Self {
        Signature::new(&[("g", 2), ("k", 1), ("c", 0)]).expect("distinct names")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Signature = serde_json::from_str(text).map_err(|e| Error::Parse(format!("signature: {e}")))?;
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for op in &self.ops {
            if !seen.insert(&op.name) {
                return Err(Error::Structural(format!("operation '{}' declared twice", op.name)));
            }
        }
        Ok(())
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.ops.iter().find(|o| o.name == name).map(|o| o.arity)
    }
}

/// Variables with tags; shown as `linear ; non-linear`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub entries: Vec<(String, Tag)>,
}

impl Context {
    pub fn new(entries: Vec<(String, Tag)>) -> Result<Self> {
        let c = Context { entries };
        let mut seen = std::collections::BTreeSet::new();
        for (n, _) in &c.entries {
            if !seen.insert(n) {
                return Err(Error::Structural(format!("variable '{n}' declared twice")));
            }
        }
        Ok(c)
    }

    /// Parses `x^L,w^L;y^N`. Entries left of `;` are linear, right of it
    /// non-linear; an explicit suffix must agree with its side.
    pub fn parse(text: &str) -> Result<Self> {
        let (lin, non) = text.split_once(';').unwrap_or((text, ""));
        let mut entries = vec![];
        let mut offset = 0;
        for (part, tag) in [(lin, Tag::Lin), (non, Tag::NonLin)] {
            for raw in part.split(',') {
                let item = raw.trim();
                let at = offset;
                offset += raw.len() + 1;
                if item.is_empty() || item == "—" || item == "-" {
                    continue;
                }
                let (name, suffix) = match item.split_once('^') {
                    Some((n, s)) => (n.trim(), Some(s.trim())),
                    None => (item, None),
                };
                let given = match suffix {
                    None => tag,
                    Some("L") => Tag::Lin,
                    Some("N") => Tag::NonLin,
                    Some(s) => return Err(Error::Parse(format!("context, offset {at}: unknown tag '^{s}'"))),
                };
                if given != tag {
                    return Err(Error::Parse(format!(
                        "context, offset {at}: '{item}' is on the {} side",
                        if tag == Tag::Lin { "linear" } else { "non-linear" }
                    )));
                }
                if !is_ident(name) {
                    return Err(Error::Parse(format!("context, offset {at}: bad variable name '{name}'")));
                }
                entries.push((name.to_string(), tag));
            }
        }
        Context::new(entries)
    }

    pub fn tag_of(&self, name: &str) -> Option<Tag> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, t)| *t)
    }

    pub fn with_tag(&self, tag: Tag) -> impl Iterator<Item = &(String, Tag)> {
        self.entries.iter().filter(move |(_, t)| *t == tag)
    }

    fn names(&self) -> impl Iterator<Item = &String> {
        self.entries.iter().map(|(n, _)| n)
    }

    /// Entries as a sorted multiset, for comparisons up to reordering.
    pub fn multiset(&self) -> Vec<(String, Tag)> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |tag: Tag| {
            self.with_tag(tag)
                .map(|(n, t)| format!("{n}^{}", t.suffix()))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", side(Tag::Lin), side(Tag::NonLin))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl Term {
    /// Parses an s-expression: `x` is a variable, `(g x (k u))` and `(c)` are applications.
    pub fn parse(text: &str) -> Result<Term> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let t = parse_term(&tokens, &mut pos)?;
        if let Some((at, tok)) = tokens.get(pos) {
            return Err(Error::Parse(format!("term, offset {at}: unexpected '{tok}' after the term")));
        }
        Ok(t)
    }

    pub fn uses(&self, var: &str) -> usize {
        match self {
            Term::Var(v) => usize::from(v == var),
            Term::App(_, args) => args.iter().map(|a| a.uses(var)).sum(),
        }
    }

    pub fn replace(&self, var: &str, by: &Term) -> Term {
        match self {
            Term::Var(v) if v == var => by.clone(),
            Term::Var(_) => self.clone(),
            Term::App(op, args) => Term::App(op.clone(), args.iter().map(|a| a.replace(var, by)).collect()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(op, args) => {
                write!(f, "({op}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, String)>> {
    let mut out = vec![];
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' || c == ')' {
            out.push((i, c.to_string()));
            chars.next();
        } else if is_ident(&c.to_string()) {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() || c == '(' || c == ')' {
                    break;
                }
                s.push(c);
                chars.next();
            }
            if !is_ident(&s) {
                return Err(Error::Parse(format!("term, offset {i}: bad identifier '{s}'")));
            }
            out.push((i, s));
        } else {
            return Err(Error::Parse(format!("term, offset {i}: unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn parse_term(tokens: &[(usize, String)], pos: &mut usize) -> Result<Term> {
    let Some((at, tok)) = tokens.get(*pos) else {
        return Err(Error::Parse("term: unexpected end of input".into()));
    };
    *pos += 1;
    match tok.as_str() {
        ")" => Err(Error::Parse(format!("term, offset {at}: unexpected ')'"))),
        "(" => {
            let op = match tokens.get(*pos) {
                Some((_, name)) if name != "(" && name != ")" => name.clone(),
                Some((at, _)) => return Err(Error::Parse(format!("term, offset {at}: expected an operation name"))),
                None => return Err(Error::Parse("term: unexpected end of input".into())),
            };
            *pos += 1;
            let mut args = vec![];
            loop {
                match tokens.get(*pos) {
                    Some((_, t)) if t == ")" => {
                        *pos += 1;
                        return Ok(Term::App(op, args));
                    }
                    Some(_) => args.push(parse_term(tokens, pos)?),
                    None => return Err(Error::Parse(format!("term, offset {at}: unclosed '('"))),
                }
            }
        }
        name => Ok(Term::Var(name.to_string())),
    }
}

fn walk<'a>(t: &'a Term, path: &mut Vec<usize>, out: &mut Vec<(String, &'a Term)>) {
    let here = if path.is_empty() {
        "root".to_string()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    };
    out.push((here, t));
    if let Term::App(_, args) = t {
        for (i, a) in args.iter().enumerate() {
            path.push(i);
            walk(a, path, out);
            path.pop();
        }
    }
}

/// Arity errors, undeclared variables and linear use counts other than one.
/// Positions are argument paths from the root, e.g. `1.0`.
pub fn check_term(ctx: &Context, t: &Term, sig: &Signature) -> LawReport {
    let mut r = LawReport::new();
    let mut nodes = vec![];
    walk(t, &mut vec![], &mut nodes);
    for (pos, node) in &nodes {
        match node {
            Term::App(op, args) => {
                let ok = sig.arity(op) == Some(args.len());
                r.check("arity", ok, || match sig.arity(op) {
                    Some(a) => format!("at {pos}: '{op}' takes {a} arguments, given {}", args.len()),
                    None => format!("at {pos}: unknown operation '{op}'"),
                });
            }
            Term::Var(v) => {
                r.check("declared", ctx.tag_of(v).is_some(), || format!("at {pos}: '{v}' is not in the context"));
            }
        }
    }
    for (v, tag) in &ctx.entries {
        if *tag == Tag::Lin {
            let n = t.uses(v);
            r.check("linear-use", n == 1, || {
                let at: Vec<&str> = nodes
                    .iter()
                    .filter(|(_, node)| matches!(node, Term::Var(x) if x == v))
                    .map(|(p, _)| p.as_str())
                    .collect();
                format!("linear '{v}' used {n} times (at [{}])", at.join(", "))
            });
        }
    }
    r
}

fn precheck(ctx_t: &Context, t: &Term, var: &str, want: Tag, s: &Term, ctx_s: &Context, sig: &Signature) -> Result<()> {
    match ctx_t.tag_of(var) {
        Some(tag) if tag == want => {}
        Some(_) => {
            return Err(Error::precondition(
                "substitution/variable-tag",
                format!("'{var}' is not {}", if want == Tag::Lin { "linear" } else { "non-linear" }),
            ))
        }
        None => return Err(Error::precondition("substitution/variable-tag", format!("'{var}' is not declared"))),
    }
    if let Some(n) = ctx_s.names().find(|n| ctx_t.tag_of(n).is_some()) {
        return Err(Error::precondition("substitution/name-clash", format!("'{n}' occurs in both contexts")));
    }
    for (which, c, term) in [("term", ctx_t, t), ("substituted term", ctx_s, s)] {
        let r = check_term(c, term, sig);
        if !r.passed() {
            return Err(Error::from_report(which, &r));
        }
    }
    Ok(())
}

/// `t[s/w]` for linear `w`; context `x,u ; v,y` where `x` are the other
/// linear variables of `t`, `u; v` the context of `s` and `y` the non-linear
/// variables of `t`.
pub fn subst_linear(
    t: &Term,
    ctx_t: &Context,
    w: &str,
    s: &Term,
    ctx_s: &Context,
    sig: &Signature,
) -> Result<(Term, Context)> {
    precheck(ctx_t, t, w, Tag::Lin, s, ctx_s, sig)?;
    let entries = ctx_t
        .with_tag(Tag::Lin)
        .filter(|(n, _)| n != w)
        .chain(ctx_s.with_tag(Tag::Lin))
        .chain(ctx_s.with_tag(Tag::NonLin))
        .chain(ctx_t.with_tag(Tag::NonLin))
        .cloned()
        .collect();
    Ok((t.replace(w, s), Context::new(entries)?))
}

/// `t[s/z]` for non-linear `z`; context `x ; y,u,v` with every variable of
/// `s` made non-linear.
pub fn subst_nonlinear(
    t: &Term,
    ctx_t: &Context,
    z: &str,
    s: &Term,
    ctx_s: &Context,
    sig: &Signature,
) -> Result<(Term, Context)> {
    precheck(ctx_t, t, z, Tag::NonLin, s, ctx_s, sig)?;
    let entries = ctx_t
        .with_tag(Tag::Lin)
        .cloned()
        .chain(ctx_t.with_tag(Tag::NonLin).filter(|(n, _)| n != z).cloned())
        .chain(ctx_s.entries.iter().map(|(n, _)| (n.clone(), Tag::NonLin)))
        .collect();
    Ok((t.replace(z, s), Context::new(entries)?))
}

/// Dispatches on the tag of `var` in `ctx_t`.
pub fn subst(
    t: &Term,
    ctx_t: &Context,
    var: &str,
    s: &Term,
    ctx_s: &Context,
    sig: &Signature,
) -> Result<(Term, Context)> {
    match ctx_t.tag_of(var) {
        Some(Tag::NonLin) => subst_nonlinear(t, ctx_t, var, s, ctx_s, sig),
        _ => subst_linear(t, ctx_t, var, s, ctx_s, sig),
    }
}

struct Gen {
    rng: ChaCha8Rng,
    fresh: usize,
}

impl Gen {
    fn name(&mut self) -> String {
        self.fresh += 1;
        format!("v{}", self.fresh)
    }

    fn context(&mut self, min_lin: usize, min_non: usize) -> Context {
        let nl = self.rng.gen_range(min_lin..=min_lin.max(2));
        let nn = self.rng.gen_range(min_non..=min_non.max(2));
        let mut entries = vec![];
        for _ in 0..nl {
            let n = self.name();
            entries.push((n, Tag::Lin));
        }
        for _ in 0..nn {
            let n = self.name();
            entries.push((n, Tag::NonLin));
        }
        Context { entries }
    }

    /// A term over `g/2, k/1, c/0` with exactly `slots` variable leaves.
    fn shape(&mut self, slots: usize, depth: usize) -> Term {
        let hole = || Term::Var(String::new());
        let c = || Term::App("c".into(), vec![]);
        match slots {
            0 if depth == 0 || self.rng.gen_bool(0.5) => c(),
            0 => Term::App("k".into(), vec![self.shape(0, depth - 1)]),
            1 if depth == 0 || self.rng.gen_bool(0.4) => hole(),
            _ if depth > 0 && self.rng.gen_bool(0.25) => Term::App("k".into(), vec![self.shape(slots, depth - 1)]),
            _ => {
                let d = depth.saturating_sub(1);
                let a = self.rng.gen_range(0..=slots);
                Term::App("g".into(), vec![self.shape(a, d), self.shape(slots - a, d)])
            }
        }
    }

    fn fill(t: &Term, vars: &mut std::vec::IntoIter<String>) -> Term {
        match t {
            Term::Var(_) => Term::Var(vars.next().expect("one variable per hole")),
            Term::App(op, args) => Term::App(op.clone(), args.iter().map(|a| Self::fill(a, vars)).collect()),
        }
    }

    /// A valid term in `ctx`: each linear variable once, non-linear ones 0..=2 extra uses.
    fn term(&mut self, ctx: &Context) -> Term {
        let mut leaves: Vec<String> = ctx.with_tag(Tag::Lin).map(|(n, _)| n.clone()).collect();
        let non: Vec<String> = ctx.with_tag(Tag::NonLin).map(|(n, _)| n.clone()).collect();
        if !non.is_empty() {
            for _ in 0..self.rng.gen_range(0..=2) {
                leaves.push(non.choose(&mut self.rng).expect("non-empty").clone());
            }
        }
        leaves.shuffle(&mut self.rng);
        let shape = self.shape(leaves.len(), 3);
        Self::fill(&shape, &mut leaves.into_iter())
    }
}

/// Independent restatement of the tag rule for a substituted variable.
fn expected_tag(own: Tag, slot: Tag) -> Tag {
    match (own, slot) {
        (Tag::Lin, Tag::Lin) => Tag::Lin,
        (Tag::Lin, Tag::NonLin) | (Tag::NonLin, Tag::Lin) | (Tag::NonLin, Tag::NonLin) => Tag::NonLin,
    }
}

/// Random single-variable substitutions over `g/2, k/1, c/0`: outputs are
/// well formed, tags follow the "linear just when both are" rule, and
/// `t[s/w][r/v] = t[s[r/v]/w]` up to context reordering.
pub fn tag_arithmetic_check(trials: usize, seed: u64) -> LawReport {
    let sig = Signature::small();
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        fresh: 0,
    };
    let mut r = LawReport::new();
    for trial in 0..trials {
        let slot = if g.rng.gen_bool(0.5) { Tag::Lin } else { Tag::NonLin };
        let ctx_t = if slot == Tag::Lin { g.context(1, 0) } else { g.context(0, 1) };
        let t = g.term(&ctx_t);
        let candidates: Vec<&String> = ctx_t.with_tag(slot).map(|(n, _)| n).collect();
        let w = (*candidates.choose(&mut g.rng).expect("context has a variable of this tag")).clone();
        let ctx_s = g.context(0, 0);
        let s = g.term(&ctx_s);
        let label = || format!("trial {trial}: {t} in {ctx_t}, [{s}/{w}] with {ctx_s}");

        let out = subst(&t, &ctx_t, &w, &s, &ctx_s, &sig);
        let Ok((u, ctx_u)) = out else {
            r.fail("substitution/accepted", format!("{}: {}", label(), out.unwrap_err()));
            continue;
        };
        r.check("linearity", check_term(&ctx_u, &u, &sig).passed(), || format!("{} gave {u} in {ctx_u}", label()));
        for (v, own) in &ctx_s.entries {
            let got = ctx_u.tag_of(v);
            r.check("tag-arithmetic", got == Some(expected_tag(*own, slot)), || {
                format!("{}: '{v}' tagged {got:?}", label())
            });
        }
        for (v, own) in ctx_t.entries.iter().filter(|(n, _)| *n != w) {
            r.check("tag-arithmetic", ctx_u.tag_of(v) == Some(*own), || format!("{}: '{v}' retagged", label()));
        }
        r.check("context-size", ctx_u.entries.len() == ctx_t.entries.len() - 1 + ctx_s.entries.len(), label);
        if t.uses(&w) == 0 {
            r.check("weakening", u == t, label);
        }

        // associativity against a third term substituted for a variable of s
        if ctx_s.entries.is_empty() {
            continue;
        }
        let (v, _) = ctx_s.entries[g.rng.gen_range(0..ctx_s.entries.len())].clone();
        let ctx_r = g.context(0, 0);
        let rt = g.term(&ctx_r);
        let lhs = subst(&u, &ctx_u, &v, &rt, &ctx_r, &sig);
        let rhs = subst(&s, &ctx_s, &v, &rt, &ctx_r, &sig).and_then(|(s2, c2)| subst(&t, &ctx_t, &w, &s2, &c2, &sig));
        let same = match (&lhs, &rhs) {
            (Ok((a, ca)), Ok((b, cb))) => a == b && ca.multiset() == cb.multiset(),
            _ => false,
        };
        r.check("associativity", same, || {
            format!("{}; then [{rt}/{v}] with {ctx_r}: {lhs:?} vs {rhs:?}", label())
        });
    }
    r
}

/// Per-variable use counts, for reports.
pub fn use_counts(ctx: &Context, t: &Term) -> BTreeMap<String, usize> {
    ctx.names().map(|n| (n.clone(), t.uses(n))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(s: &str) -> Context {
        Context::parse(s).unwrap()
    }
    fn term(s: &str) -> Term {
        Term::parse(s).unwrap()
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(term("(g x (k u))").to_string(), "(g x (k u))");
        assert_eq!(term("(c)"), Term::App("c".into(), vec![]));
        assert_eq!(ctx("x^L,w^L;y^N").to_string(), "x^L,w^L;y^N");
        assert_eq!(ctx(";y^N").entries, vec![("y".to_string(), Tag::NonLin)]);
        assert_eq!(ctx("—;z^N").entries.len(), 1);
        assert!(Context::parse("x^N;").is_err());
        assert!(Context::parse("x^L,x^L;").is_err());
        let e = Term::parse("(g x").unwrap_err().to_string();
        assert!(e.contains("offset 0"), "{e}");
        assert!(Term::parse("(g x))").is_err());
    }

    #[test]
    fn checking() {
        let sig = Signature::small();
        assert!(check_term(&ctx("x^L;"), &term("x"), &sig).passed());
        let r = check_term(&ctx("x^L;"), &term("(g x x)"), &sig);
        assert_eq!(r.failed_laws(), vec!["linear-use"]);
        assert!(r.findings[0].witness.contains("1, 0") || r.findings[0].witness.contains("0, 1"));
        assert!(check_term(&ctx(";y^N"), &term("(g y y)"), &sig).passed());
        assert!(check_term(&ctx(";y^N"), &term("(c)"), &sig).passed());
        assert_eq!(check_term(&ctx(";x^N"), &term("(k x x)"), &sig).failed_laws(), vec!["arity"]);
        assert_eq!(check_term(&ctx(";"), &term("q"), &sig).failed_laws(), vec!["declared"]);
        assert_eq!(check_term(&ctx("x^L;"), &term("(c)"), &sig).failed_laws(), vec!["linear-use"]);
    }

    #[test]
    fn linear_rule() {
        let sig = Signature::small();
        let (u, c) = subst_linear(&term("(g x w)"), &ctx("x^L,w^L;y^N"), "w", &term("(k u)"), &ctx("u^L;v^N"), &sig).unwrap();
        assert_eq!(u.to_string(), "(g x (k u))");
        assert_eq!(c.to_string(), "x^L,u^L;v^N,y^N");
        let (u, _) = subst_linear(&term("w"), &ctx("w^L;"), "w", &term("x"), &ctx("x^L;"), &sig).unwrap();
        assert_eq!(u, term("x"));
        assert!(subst_linear(&term("(g y w)"), &ctx("w^L;y^N"), "y", &term("x"), &ctx("x^L;"), &sig).is_err());
        assert!(subst_linear(&term("w"), &ctx("w^L;y^N"), "w", &term("y"), &ctx("y^L;"), &sig).is_err());
    }

    #[test]
    fn nonlinear_rule() {
        let sig = Signature::small();
        let (u, c) = subst_nonlinear(&term("(g z z)"), &ctx(";z^N"), "z", &term("(k u)"), &ctx("u^L;"), &sig).unwrap();
        assert_eq!(u.to_string(), "(g (k u) (k u))");
        assert_eq!(c.to_string(), ";u^N");
        let (u, c) = subst_nonlinear(&term("x"), &ctx("x^L;z^N"), "z", &term("(k u)"), &ctx("u^L;"), &sig).unwrap();
        assert_eq!(u, term("x"));
        assert_eq!(c.to_string(), "x^L;u^N");
        let (u, c) = subst_nonlinear(&term("(g z z)"), &ctx(";z^N"), "z", &term("x"), &ctx("x^L;"), &sig).unwrap();
        assert_eq!((u.to_string(), c.to_string()), ("(g x x)".into(), ";x^N".into()));
        assert!(check_term(&c, &u, &sig).passed());
    }

    #[test]
    fn seeded_trials() {
        let r = tag_arithmetic_check(300, 7);
        assert!(r.passed(), "{r}");
        assert!(r.tallies["associativity"].checked > 100);
        let again = tag_arithmetic_check(300, 7);
        assert_eq!(r.to_string(), again.to_string());
    }
}
