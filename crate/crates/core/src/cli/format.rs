//! The line-oriented structure-constants file format.
//!
//! ```text
//! # comments run to the end of the line
//! field: F(3)
//! space H: 1 g
//! tensor H.mul mul: H H -> H
//!   (1, 1*1, 1)
//!   (g, 1*g, 1)
//! grade R: 1=0 x=1
//! role hopf_algebra H: mul=H.mul unit=H.unit comul=H.comul counit=H.counit
//! ```
//!
//! A tensor header names the tensor, its role and its shape as
//! whitespace-separated space names, with `1` for the unit object. Each
//! entry `(row, col, value)` gives composite basis labels joined by `*` (or
//! `⊗`) and a scalar in the field's textual form. Role declarations bind an
//! object name to a kind and to its tensors, other objects and gradings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linspace::{BasedSpace, LinearMap, TensorSpace};
use crate::scalar::{FieldSpec, Scalar};

/// The role a tensor plays inside an object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorRole {
    Mul,
    Unit,
    Comul,
    Counit,
    Antipode,
    Action,
    Coaction,
    Nu,
    Cocycle,
    Section,
    SectionInv,
}

const TENSOR_ROLES: [(TensorRole, &str); 11] = [
    (TensorRole::Mul, "mul"),
    (TensorRole::Unit, "unit"),
    (TensorRole::Comul, "comul"),
    (TensorRole::Counit, "counit"),
    (TensorRole::Antipode, "antipode"),
    (TensorRole::Action, "action"),
    (TensorRole::Coaction, "coaction"),
    (TensorRole::Nu, "nu"),
    (TensorRole::Cocycle, "cocycle"),
    (TensorRole::Section, "section"),
    (TensorRole::SectionInv, "section_inv"),
];

impl TensorRole {
    pub fn as_str(self) -> &'static str {
        TENSOR_ROLES
            .iter()
            .find(|(r, _)| *r == self)
            .expect("every role is listed")
            .1
    }

    pub fn parse(s: &str) -> Option<Self> {
        TENSOR_ROLES.iter().find(|(_, n)| *n == s).map(|(r, _)| *r)
    }
}

/// The kind of object a role declaration builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    HopfAlgebra,
    YdModule,
    Measuring,
    Cocycle,
    ComoduleAlgebra,
    CleftExtension,
    GradedYdHopf,
    Bosonization,
}

/// How a role argument is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArgKind {
    /// A tensor whose role equals the key.
    Tensor,
    /// A previously declared object of one of the listed kinds.
    Object(&'static [ObjectKind]),
    Grade,
    Flag,
}

use ObjectKind as K;

const HOPF_LIKE: &[ObjectKind] = &[K::HopfAlgebra, K::Bosonization];

/// `(key, kind, required)` for each object kind.
fn schema(kind: ObjectKind) -> &'static [(&'static str, ArgKind, bool)] {
    use ArgKind::*;
    match kind {
        K::HopfAlgebra => &[
            ("mul", Tensor, true),
            ("unit", Tensor, true),
            ("comul", Tensor, true),
            ("counit", Tensor, true),
            ("antipode", Tensor, false),
            ("over", Object(HOPF_LIKE), false),
            ("action", Tensor, false),
            ("coaction", Tensor, false),
        ],
        K::YdModule => &[
            ("over", Object(HOPF_LIKE), true),
            ("action", Tensor, true),
            ("coaction", Tensor, true),
        ],
        K::Measuring => &[
            ("hopf", Object(HOPF_LIKE), true),
            ("trivial", Flag, false),
            ("mul", Tensor, false),
            ("unit", Tensor, false),
            ("nu", Tensor, false),
            ("action", Tensor, false),
        ],
        K::Cocycle => &[
            ("measuring", Object(&[K::Measuring]), true),
            ("cocycle", Tensor, true),
        ],
        K::ComoduleAlgebra => &[
            ("hopf", Object(HOPF_LIKE), true),
            ("mul", Tensor, true),
            ("unit", Tensor, true),
            ("coaction", Tensor, true),
            ("action", Tensor, false),
        ],
        K::CleftExtension => &[
            ("hopf", Object(HOPF_LIKE), true),
            ("mul", Tensor, true),
            ("unit", Tensor, true),
            ("coaction", Tensor, true),
            ("section", Tensor, true),
            ("section_inv", Tensor, false),
            ("action", Tensor, false),
        ],
        K::GradedYdHopf => &[
            ("hopf", Object(&[K::HopfAlgebra]), true),
            ("grade", Grade, true),
            ("cosemisimple", Flag, false),
        ],
        K::Bosonization => &[("graded", Object(&[K::GradedYdHopf]), true)],
    }
}

const OBJECT_KINDS: [(ObjectKind, &str); 8] = [
    (K::HopfAlgebra, "hopf_algebra"),
    (K::YdModule, "yd_module"),
    (K::Measuring, "measuring"),
    (K::Cocycle, "cocycle"),
    (K::ComoduleAlgebra, "comodule_algebra"),
    (K::CleftExtension, "cleft_extension"),
    (K::GradedYdHopf, "graded_yd_hopf"),
    (K::Bosonization, "bosonization"),
];

impl ObjectKind {
    pub fn as_str(self) -> &'static str {
        OBJECT_KINDS
            .iter()
            .find(|(k, _)| *k == self)
            .expect("every kind is listed")
            .1
    }

    pub fn parse(s: &str) -> Option<Self> {
        OBJECT_KINDS.iter().find(|(_, n)| *n == s).map(|(k, _)| *k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorDecl {
    pub name: String,
    pub role: TensorRole,
    pub map: LinearMap,
}

/// A degree for each listed composite basis label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeDecl {
    pub name: String,
    pub degrees: Vec<(String, usize)>,
}

/// `role KIND NAME: key=value flag ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleDecl {
    pub kind: ObjectKind,
    pub name: String,
    /// Keys with their values; flags have `None`.
    pub args: Vec<(String, Option<String>)>,
}

impl RoleDecl {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.args
            .iter()
            .find(|(k, _)| k == key)
            .and_then(|(_, v)| v.as_deref())
    }

    pub fn has_flag(&self, key: &str) -> bool {
        self.args.iter().any(|(k, v)| k == key && v.is_none())
    }
}

/// A validated structure-constants file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionFile {
    pub field: FieldSpec,
    pub spaces: Vec<BasedSpace>,
    pub tensors: Vec<TensorDecl>,
    pub grades: Vec<GradeDecl>,
    pub roles: Vec<RoleDecl>,
}

fn check_name(what: &str, name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name == "1"
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ':' | '=' | ',' | '(' | ')' | '*' | '⊗'));
    if bad {
        return Err(Error::Validation(format!("invalid {what} name `{name}`")));
    }
    Ok(())
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Column (1-based, in characters) of `part` within `line`, which must be a
/// subslice of it.
fn column_of(line: &str, part: &str) -> usize {
    let offset = (part.as_ptr() as usize)
        .saturating_sub(line.as_ptr() as usize)
        .min(line.len());
    line[..offset].chars().count() + 1
}

/// Drops a `#` comment that starts the line or follows whitespace.
fn strip_comment(line: &str) -> &str {
    let mut prev_space = true;
    for (i, c) in line.char_indices() {
        if c == '#' && prev_space {
            return &line[..i];
        }
        prev_space = c.is_whitespace();
    }
    line
}

/// Splits `s` at commas outside square brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

struct PendingTensor {
    name: String,
    role: TensorRole,
    source: TensorSpace,
    target: TensorSpace,
    entries: Vec<(usize, usize, Scalar)>,
    line: usize,
}

impl DefinitionFile {
    pub fn new(field: FieldSpec) -> Self {
        DefinitionFile {
            field,
            spaces: Vec::new(),
            tensors: Vec::new(),
            grades: Vec::new(),
            roles: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, None)
    }

    /// Parses `text`, reading every scalar in `field_override` when given.
    pub fn parse_with(text: &str, field_override: Option<FieldSpec>) -> Result<Self> {
        let mut file: Option<DefinitionFile> = None;
        let mut pending: Option<PendingTensor> = None;
        for (n, raw) in text.lines().enumerate() {
            let ln = n + 1;
            let line = strip_comment(raw);
            let body = line.trim();
            if body.is_empty() {
                continue;
            }
            if body.starts_with('(') {
                let p = pending.as_mut().ok_or_else(|| {
                    parse_err(ln, column_of(raw, body), "entry outside a tensor block")
                })?;
                let field = file.as_ref().expect("tensor implies field").field;
                p.entries
                    .push(parse_entry(raw, body, ln, field, &p.source, &p.target)?);
                continue;
            }
            if let Some(p) = pending.take() {
                file.as_mut()
                    .expect("tensor implies field")
                    .finish_tensor(p)?;
            }
            let (head, rest) = body.split_once(':').ok_or_else(|| {
                parse_err(ln, column_of(raw, body), "expected `keyword ...: ...`")
            })?;
            let mut words = head.split_whitespace();
            let keyword = words.next().unwrap_or("");
            let names: Vec<&str> = words.collect();
            let f = match (&mut file, keyword) {
                (None, "field") => {
                    if !names.is_empty() {
                        return Err(parse_err(
                            ln,
                            column_of(raw, names[0]),
                            "unexpected name after `field`",
                        ));
                    }
                    let declared: FieldSpec =
                        rest.trim()
                            .parse()
                            .map_err(|e: crate::scalar::ScalarError| {
                                parse_err(ln, column_of(raw, rest.trim()), e.to_string())
                            })?;
                    file = Some(DefinitionFile::new(field_override.unwrap_or(declared)));
                    continue;
                }
                (None, _) => return Err(parse_err(ln, 1, "the first line must be `field: ...`")),
                (Some(_), "field") => return Err(parse_err(ln, 1, "repeated `field` header")),
                (Some(f), _) => f,
            };
            let want = |k: usize| -> Result<()> {
                if names.len() != k {
                    return Err(parse_err(
                        ln,
                        column_of(raw, head),
                        format!("`{keyword}` takes {k} name(s), found {}", names.len()),
                    ));
                }
                Ok(())
            };
            match keyword {
                "space" => {
                    want(1)?;
                    check_name("space", names[0])
                        .map_err(|e| parse_err(ln, column_of(raw, names[0]), e.to_string()))?;
                    let labels: Vec<&str> = rest.split_whitespace().collect();
                    let space = BasedSpace::new(names[0], labels, f.field)
                        .map_err(|e| parse_err(ln, column_of(raw, rest), e.to_string()))?;
                    if f.space(names[0]).is_some() {
                        return Err(parse_err(
                            ln,
                            column_of(raw, names[0]),
                            format!("space {} declared twice", names[0]),
                        ));
                    }
                    f.spaces.push(space);
                }
                "tensor" => {
                    want(2)?;
                    let role = TensorRole::parse(names[1]).ok_or_else(|| {
                        parse_err(
                            ln,
                            column_of(raw, names[1]),
                            format!("unknown tensor role `{}`", names[1]),
                        )
                    })?;
                    let (src, tgt) = rest.split_once("->").ok_or_else(|| {
                        parse_err(ln, column_of(raw, rest), "expected `SOURCE -> TARGET`")
                    })?;
                    let source = f
                        .shape(src)
                        .map_err(|e| parse_err(ln, column_of(raw, src), e.to_string()))?;
                    let target = f
                        .shape(tgt)
                        .map_err(|e| parse_err(ln, column_of(raw, tgt), e.to_string()))?;
                    check_name("tensor", names[0])
                        .map_err(|e| parse_err(ln, column_of(raw, names[0]), e.to_string()))?;
                    pending = Some(PendingTensor {
                        name: names[0].to_string(),
                        role,
                        source,
                        target,
                        entries: Vec::new(),
                        line: ln,
                    });
                }
                "grade" => {
                    want(1)?;
                    let mut degrees = Vec::new();
                    for item in rest.split_whitespace() {
                        let (label, k) = item
                            .split_once('=')
                            .and_then(|(l, k)| Some((l, k.parse::<usize>().ok()?)))
                            .ok_or_else(|| {
                                parse_err(ln, column_of(raw, item), "expected `label=degree`")
                            })?;
                        degrees.push((label.to_string(), k));
                    }
                    f.push_grade(GradeDecl {
                        name: names[0].to_string(),
                        degrees,
                    })
                    .map_err(|e| parse_err(ln, column_of(raw, names[0]), e.to_string()))?;
                }
                "role" => {
                    want(2)?;
                    let kind = ObjectKind::parse(names[0]).ok_or_else(|| {
                        parse_err(
                            ln,
                            column_of(raw, names[0]),
                            format!("unknown role kind `{}`", names[0]),
                        )
                    })?;
                    let args = rest
                        .split_whitespace()
                        .map(|a| match a.split_once('=') {
                            Some((k, v)) => (k.to_string(), Some(v.to_string())),
                            None => (a.to_string(), None),
                        })
                        .collect();
                    f.push_role(RoleDecl {
                        kind,
                        name: names[1].to_string(),
                        args,
                    })
                    .map_err(|e| parse_err(ln, column_of(raw, names[1]), e.to_string()))?;
                }
                other => {
                    return Err(parse_err(
                        ln,
                        column_of(raw, head),
                        format!("unknown keyword `{other}`"),
                    ))
                }
            }
        }
        let mut file = file.ok_or_else(|| parse_err(1, 1, "missing `field: ...` header"))?;
        if let Some(p) = pending.take() {
            file.finish_tensor(p)?;
        }
        Ok(file)
    }

    fn finish_tensor(&mut self, p: PendingTensor) -> Result<()> {
        let map = LinearMap::from_entries(p.source, p.target, p.entries)
            .map_err(|e| parse_err(p.line, 1, format!("tensor {}: {e}", p.name)))?;
        self.push_tensor(&p.name, p.role, map)
            .map_err(|e| parse_err(p.line, 1, e.to_string()))
    }

    pub fn space(&self, name: &str) -> Option<&BasedSpace> {
        self.spaces.iter().find(|s| s.name() == name)
    }

    pub fn tensor(&self, name: &str) -> Option<&TensorDecl> {
        self.tensors.iter().find(|t| t.name == name)
    }

    pub fn grade(&self, name: &str) -> Option<&GradeDecl> {
        self.grades.iter().find(|g| g.name == name)
    }

    pub fn role(&self, name: &str) -> Option<&RoleDecl> {
        self.roles.iter().find(|r| r.name == name)
    }

    fn shape(&self, text: &str) -> Result<TensorSpace> {
        let mut factors = Vec::new();
        for name in text.split_whitespace() {
            if name == "1" {
                continue;
            }
            let s = self
                .space(name)
                .ok_or_else(|| Error::Validation(format!("unknown space `{name}`")))?;
            factors.push(s.clone());
        }
        TensorSpace::new(self.field, factors)
    }

    /// Adds `space`, or does nothing if an equal space is already present.
    pub fn push_space(&mut self, space: &BasedSpace) -> Result<()> {
        match self.space(space.name()) {
            Some(s) if s == space => Ok(()),
            Some(_) => Err(Error::Validation(format!(
                "two different spaces are named {}",
                space.name()
            ))),
            None => {
                if space.field() != self.field {
                    return Err(Error::Validation(format!(
                        "space {} is over {}, not {}",
                        space.name(),
                        space.field(),
                        self.field
                    )));
                }
                check_name("space", space.name())?;
                self.spaces.push(space.clone());
                Ok(())
            }
        }
    }

    /// Adds a tensor and the spaces it mentions.
    pub fn push_tensor(&mut self, name: &str, role: TensorRole, map: LinearMap) -> Result<()> {
        check_name("tensor", name)?;
        if self.tensor(name).is_some() {
            return Err(Error::Validation(format!("tensor {name} declared twice")));
        }
        for s in map.source().factors().iter().chain(map.target().factors()) {
            self.push_space(s)?;
        }
        self.tensors.push(TensorDecl {
            name: name.to_string(),
            role,
            map,
        });
        Ok(())
    }

    pub fn push_grade(&mut self, grade: GradeDecl) -> Result<()> {
        check_name("grade", &grade.name)?;
        if self.grade(&grade.name).is_some() {
            return Err(Error::Validation(format!(
                "grade {} declared twice",
                grade.name
            )));
        }
        self.grades.push(grade);
        Ok(())
    }

    /// Adds a role after checking its keys, required arguments and references.
    pub fn push_role(&mut self, role: RoleDecl) -> Result<()> {
        check_name("object", &role.name)?;
        if self.role(&role.name).is_some() {
            return Err(Error::Validation(format!(
                "object {} declared twice",
                role.name
            )));
        }
        let schema = schema(role.kind);
        let kind = role.kind.as_str();
        for (key, value) in &role.args {
            let &(_, arg, _) = schema.iter().find(|(k, _, _)| k == key).ok_or_else(|| {
                Error::Validation(format!("{kind} {}: unknown key `{key}`", role.name))
            })?;
            match (arg, value) {
                (ArgKind::Flag, None) => {}
                (ArgKind::Flag, Some(_)) => {
                    return Err(Error::Validation(format!(
                        "{kind} {}: `{key}` is a flag",
                        role.name
                    )))
                }
                (_, None) => {
                    return Err(Error::Validation(format!(
                        "{kind} {}: `{key}` needs a value",
                        role.name
                    )))
                }
                (ArgKind::Tensor, Some(v)) => {
                    let t = self.tensor(v).ok_or_else(|| {
                        Error::Validation(format!("{kind} {}: unknown tensor `{v}`", role.name))
                    })?;
                    if t.role.as_str() != key {
                        return Err(Error::Validation(format!(
                            "{kind} {}: tensor {v} has role {}, expected {key}",
                            role.name,
                            t.role.as_str()
                        )));
                    }
                }
                (ArgKind::Object(kinds), Some(v)) => {
                    let r = self.role(v).ok_or_else(|| {
                        Error::Validation(format!("{kind} {}: unknown object `{v}`", role.name))
                    })?;
                    if !kinds.contains(&r.kind) {
                        return Err(Error::Validation(format!(
                            "{kind} {}: `{v}` is a {}, expected {}",
                            role.name,
                            r.kind.as_str(),
                            kinds
                                .iter()
                                .map(|k| k.as_str())
                                .collect::<Vec<_>>()
                                .join(" or ")
                        )));
                    }
                }
                (ArgKind::Grade, Some(v)) => {
                    if self.grade(v).is_none() {
                        return Err(Error::Validation(format!(
                            "{kind} {}: unknown grade `{v}`",
                            role.name
                        )));
                    }
                }
            }
        }
        for (key, _, required) in schema {
            let present = role.args.iter().filter(|(k, _)| k == key).count();
            if present > 1 {
                return Err(Error::Validation(format!(
                    "{kind} {}: repeated key `{key}`",
                    role.name
                )));
            }
            if *required && present == 0 {
                return Err(Error::Validation(format!(
                    "{kind} {}: missing `{key}`",
                    role.name
                )));
            }
        }
        match role.kind {
            K::HopfAlgebra
                if role.get("over").is_some()
                    != (role.get("action").is_some() && role.get("coaction").is_some()) =>
            {
                return Err(Error::Validation(format!(
                    "hopf_algebra {}: `over` goes together with `action` and `coaction`",
                    role.name
                )))
            }
            K::Measuring
                if role.has_flag("trivial") == role.get("mul").is_some()
                    || role.get("mul").is_some() != role.get("unit").is_some()
                    || role.get("mul").is_some() != role.get("nu").is_some() =>
            {
                return Err(Error::Validation(format!(
                    "measuring {}: give either `trivial` or all of mul, unit, nu",
                    role.name
                )))
            }
            _ => {}
        }
        self.roles.push(role);
        Ok(())
    }

    /// Appends all declarations of `other`; equal spaces are shared.
    pub fn merge(&mut self, other: DefinitionFile) -> Result<()> {
        if other.field != self.field {
            return Err(Error::Validation(format!(
                "files over {} and {} cannot be combined",
                self.field, other.field
            )));
        }
        for s in &other.spaces {
            self.push_space(s)?;
        }
        for t in other.tensors {
            self.push_tensor(&t.name, t.role, t.map)?;
        }
        for g in other.grades {
            self.push_grade(g)?;
        }
        for r in other.roles {
            self.push_role(r)?;
        }
        Ok(())
    }

    /// Canonical text: header, spaces, tensors with entries ordered by
    /// column then row, gradings, roles.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field: {}", self.field);
        for s in &self.spaces {
            let _ = writeln!(out, "space {}: {}", s.name(), s.labels().join(" "));
        }
        for t in &self.tensors {
            let _ = writeln!(
                out,
                "tensor {} {}: {} -> {}",
                t.name,
                t.role.as_str(),
                shape_text(t.map.source()),
                shape_text(t.map.target())
            );
            for j in 0..t.map.source().dim() {
                for (i, v) in t.map.column(j) {
                    let _ = writeln!(
                        out,
                        "  ({}, {}, {v})",
                        label_text(t.map.target(), *i),
                        label_text(t.map.source(), j)
                    );
                }
            }
        }
        for g in &self.grades {
            let items: Vec<String> = g.degrees.iter().map(|(l, k)| format!("{l}={k}")).collect();
            let _ = writeln!(out, "grade {}: {}", g.name, items.join(" "));
        }
        for r in &self.roles {
            let items: Vec<String> = r
                .args
                .iter()
                .map(|(k, v)| match v {
                    Some(v) => format!("{k}={v}"),
                    None => k.clone(),
                })
                .collect();
            let _ = writeln!(
                out,
                "role {} {}: {}",
                r.kind.as_str(),
                r.name,
                items.join(" ")
            );
        }
        out
    }
}

fn shape_text(s: &TensorSpace) -> String {
    if s.is_unit() {
        return "1".into();
    }
    s.factors()
        .iter()
        .map(|f| f.name().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn label_text(s: &TensorSpace, i: usize) -> String {
    s.label(i).replace(crate::linspace::TENSOR_SEP, "*")
}

fn parse_entry(
    raw: &str,
    body: &str,
    ln: usize,
    field: FieldSpec,
    source: &TensorSpace,
    target: &TensorSpace,
) -> Result<(usize, usize, Scalar)> {
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| parse_err(ln, column_of(raw, body), "expected `(row, col, value)`"))?;
    let parts = split_top_level(inner);
    if parts.len() != 3 {
        return Err(parse_err(
            ln,
            column_of(raw, body),
            "expected `(row, col, value)`",
        ));
    }
    let at = |p: &str| column_of(raw, p.trim());
    let row = target
        .index_of_label(parts[0].trim())
        .map_err(|e| parse_err(ln, at(parts[0]), e.to_string()))?;
    let col = source
        .index_of_label(parts[1].trim())
        .map_err(|e| parse_err(ln, at(parts[1]), e.to_string()))?;
    let value = field
        .parse_scalar(parts[2])
        .map_err(|e| parse_err(ln, at(parts[2]), e.to_string()))?;
    Ok((row, col, value))
}
