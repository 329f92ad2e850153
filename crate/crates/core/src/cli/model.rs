//! Library objects built from the role declarations of a [`DefinitionFile`],
//! and the reverse direction for result files.

use std::sync::Arc;

use super::format::{DefinitionFile, GradeDecl, ObjectKind, RoleDecl, TensorRole};
use crate::braidmod::{Ambient, ComoduleAlgebra, Measuring, Module, YdModule};
use crate::cleft::CleftExtension;
use crate::error::{Error, Result};
use crate::hopfcore::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use crate::lifting::{bosonize, Bosonization, GradedYdHopf};
use crate::linspace::{BasedSpace, LinearMap, TensorSpace, TENSOR_SEP};
use crate::scalar::FieldSpec;

/// A built object. Cocycles are kept unverified so that checkers can
/// report on corrupt input.
#[derive(Debug, Clone)]
pub enum Object {
    Hopf(Arc<HopfAlgebra>),
    Yd(YdModule),
    Measuring(Arc<Measuring>),
    Cocycle { measuring: String, sigma: LinearMap },
    ComoduleAlgebra(ComoduleAlgebra),
    Cleft(CleftExtension),
    Graded(GradedYdHopf),
    Bosonization(Bosonization),
}

#[derive(Debug, Clone)]
pub struct Model {
    pub field: FieldSpec,
    pub objects: Vec<(String, Object)>,
}

impl Model {
    /// Builds every declared object in declaration order.
    pub fn build(file: &DefinitionFile) -> Result<Self> {
        let mut model = Model {
            field: file.field,
            objects: Vec::new(),
        };
        for role in &file.roles {
            let obj = model
                .build_one(file, role)
                .map_err(|e| in_context(e, &format!("{} {}", role.kind.as_str(), role.name)))?;
            model.objects.push((role.name.clone(), obj));
        }
        Ok(model)
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// A Hopf algebra or the Hopf algebra of a bosonization.
    pub fn hopf(&self, name: &str) -> Result<Arc<HopfAlgebra>> {
        match self.get(name) {
            Some(Object::Hopf(h)) => Ok(h.clone()),
            Some(Object::Bosonization(b)) => Ok(b.hopf.clone()),
            _ => Err(Error::Validation(format!("`{name}` is not a Hopf algebra"))),
        }
    }

    pub fn measuring(&self, name: &str) -> Result<Arc<Measuring>> {
        match self.get(name) {
            Some(Object::Measuring(m)) => Ok(m.clone()),
            _ => Err(Error::Validation(format!("`{name}` is not a measuring"))),
        }
    }

    /// Name of the object whose Hopf algebra is `h`.
    pub fn name_of_hopf(&self, h: &Arc<HopfAlgebra>) -> Option<&str> {
        self.objects.iter().find_map(|(n, o)| match o {
            Object::Hopf(x) if Arc::ptr_eq(x, h) => Some(n.as_str()),
            Object::Bosonization(b) if Arc::ptr_eq(&b.hopf, h) => Some(n.as_str()),
            _ => None,
        })
    }

    /// The bosonization whose Hopf algebra is `h`.
    pub fn bosonization_of(&self, h: &Arc<HopfAlgebra>) -> Option<(&str, &Bosonization)> {
        self.objects.iter().find_map(|(n, o)| match o {
            Object::Bosonization(b) if Arc::ptr_eq(&b.hopf, h) => Some((n.as_str(), b)),
            _ => None,
        })
    }

    /// The graded object whose `R` is `h`.
    pub fn graded_over(&self, h: &Arc<HopfAlgebra>) -> Option<(&str, &GradedYdHopf)> {
        self.objects.iter().find_map(|(n, o)| match o {
            Object::Graded(g) if Arc::ptr_eq(&g.r, h) => Some((n.as_str(), g)),
            _ => None,
        })
    }

    fn build_one(&self, file: &DefinitionFile, role: &RoleDecl) -> Result<Object> {
        let tensor = |key: &str| -> Option<LinearMap> {
            role.get(key)
                .map(|t| file.tensor(t).expect("validated on parse").map.clone())
        };
        let need = |key: &str| tensor(key).expect("required keys validated on parse");
        let ambient = |key: &str| -> Result<Ambient> {
            match role.get(key) {
                Some(h) => Ambient::over(self.hopf(h)?),
                None => Ok(Ambient::trivial(self.field)),
            }
        };
        let module = |amb: Ambient, space: &TensorSpace| -> Result<Module> {
            match tensor("action") {
                Some(a) => Module::new(amb, space.clone(), a),
                None if amb.is_trivial() => Ok(Module::classical(space)),
                None => Ok(Module::trivial(amb, space.clone())),
            }
        };
        Ok(match role.kind {
            ObjectKind::HopfAlgebra => {
                let alg = Algebra::new(need("mul"), need("unit"))?;
                let coalg = Coalgebra::new(need("comul"), need("counit"))?;
                let amb = ambient("over")?;
                let yd = match tensor("coaction") {
                    Some(c) => YdModule::new(module(amb, &alg.space)?, c)?,
                    None => YdModule::classical(&alg.space),
                };
                let bialg = Bialgebra::new(role.name.clone(), alg, coalg, yd)?;
                Object::Hopf(Arc::new(HopfAlgebra::new(bialg, tensor("antipode"))?))
            }
            ObjectKind::YdModule => {
                let action = need("action");
                let space = action.target().clone();
                Object::Yd(YdModule::new(
                    module(ambient("over")?, &space)?,
                    need("coaction"),
                )?)
            }
            ObjectKind::Measuring => {
                let hopf = self.hopf(role.get("hopf").expect("required"))?;
                if role.has_flag("trivial") {
                    Object::Measuring(Arc::new(Measuring::unit(hopf)))
                } else {
                    let alg = Algebra::new(need("mul"), need("unit"))?;
                    let m = module(hopf.ambient().clone(), &alg.space)?;
                    Object::Measuring(Arc::new(Measuring::new(hopf, alg, m, need("nu"))?))
                }
            }
            ObjectKind::Cocycle => Object::Cocycle {
                measuring: role.get("measuring").expect("required").to_string(),
                sigma: need("cocycle"),
            },
            ObjectKind::ComoduleAlgebra | ObjectKind::CleftExtension => {
                let hopf = self.hopf(role.get("hopf").expect("required"))?;
                let alg = Algebra::new(need("mul"), need("unit"))?;
                let m = module(hopf.ambient().clone(), &alg.space)?;
                let ca = ComoduleAlgebra::new(hopf, alg, m, need("coaction"))?;
                if role.kind == ObjectKind::ComoduleAlgebra {
                    Object::ComoduleAlgebra(ca)
                } else {
                    Object::Cleft(CleftExtension::new(
                        ca,
                        need("section"),
                        tensor("section_inv"),
                    )?)
                }
            }
            ObjectKind::GradedYdHopf => {
                let r = self.hopf(role.get("hopf").expect("required"))?;
                let grade = file
                    .grade(role.get("grade").expect("required"))
                    .expect("validated on parse");
                let degrees = resolve_grade(grade, r.space())?;
                Object::Graded(GradedYdHopf::new(
                    r,
                    degrees,
                    role.has_flag("cosemisimple"),
                )?)
            }
            ObjectKind::Bosonization => match self.get(role.get("graded").expect("required")) {
                Some(Object::Graded(g)) => Object::Bosonization(bosonize(g)?),
                _ => unreachable!("validated on parse"),
            },
        })
    }
}

fn in_context(e: Error, what: &str) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{what}: {m}")),
        Error::AxiomFailure { relation, witness } => Error::AxiomFailure {
            relation: format!("{what}: {relation}"),
            witness,
        },
        other => other,
    }
}

/// Degrees of every basis element of `space`, which must all be listed.
pub fn resolve_grade(grade: &GradeDecl, space: &TensorSpace) -> Result<Vec<usize>> {
    let mut out = vec![None; space.dim()];
    for (label, k) in &grade.degrees {
        let i = space.index_of_label(label)?;
        if out[i].replace(*k).is_some() {
            return Err(Error::Validation(format!(
                "grade {} lists {label} twice",
                grade.name
            )));
        }
    }
    out.iter()
        .enumerate()
        .map(|(i, d)| {
            d.ok_or_else(|| {
                Error::Validation(format!("grade {} misses {}", grade.name, space.label(i)))
            })
        })
        .collect()
}

/// Builds result files from library objects.
pub struct Writer {
    pub file: DefinitionFile,
}

fn arg(k: &str, v: impl Into<String>) -> (String, Option<String>) {
    (k.to_string(), Some(v.into()))
}

impl Writer {
    pub fn new(field: FieldSpec) -> Self {
        Writer {
            file: DefinitionFile::new(field),
        }
    }

    fn tensor(
        &mut self,
        object: &str,
        role: TensorRole,
        map: &LinearMap,
    ) -> Result<(String, Option<String>)> {
        let name = format!("{object}.{}", role.as_str());
        self.file.push_tensor(&name, role, map.clone())?;
        Ok(arg(role.as_str(), name))
    }

    fn has(&self, name: &str) -> bool {
        self.file.role(name).is_some()
    }

    /// Writes `h` as `name` unless that object is already present. The
    /// ambient Hopf algebra must already be written as `over`.
    pub fn hopf(&mut self, name: &str, h: &HopfAlgebra, over: Option<&str>) -> Result<()> {
        if self.has(name) {
            return Ok(());
        }
        let mut args = vec![
            self.tensor(name, TensorRole::Mul, &h.alg.mul)?,
            self.tensor(name, TensorRole::Unit, &h.alg.unit)?,
            self.tensor(name, TensorRole::Comul, &h.coalg.comul)?,
            self.tensor(name, TensorRole::Counit, &h.coalg.counit)?,
            self.tensor(name, TensorRole::Antipode, &h.antipode)?,
        ];
        if !h.is_classical() {
            let over = over.ok_or_else(|| {
                Error::Validation(format!("{name} needs the name of its ambient"))
            })?;
            args.push(arg("over", over));
            args.push(self.tensor(name, TensorRole::Action, &h.module().action)?);
            args.push(self.tensor(name, TensorRole::Coaction, &h.yd.coaction)?);
        }
        self.role(ObjectKind::HopfAlgebra, name, args)
    }

    fn role(
        &mut self,
        kind: ObjectKind,
        name: &str,
        args: Vec<(String, Option<String>)>,
    ) -> Result<()> {
        self.file.push_role(RoleDecl {
            kind,
            name: name.to_string(),
            args,
        })
    }

    pub fn grade(&mut self, name: &str, space: &TensorSpace, degrees: &[usize]) -> Result<()> {
        let degrees = degrees
            .iter()
            .enumerate()
            .map(|(i, &k)| (space.label(i).replace(TENSOR_SEP, "*"), k))
            .collect();
        self.file.push_grade(GradeDecl {
            name: name.to_string(),
            degrees,
        })
    }

    /// Writes `H`, `R`, the graded object and the bosonization, each under
    /// the given name.
    pub fn bosonization(
        &mut self,
        names: [&str; 4],
        b: &Bosonization,
        cosemisimple: bool,
    ) -> Result<()> {
        let [h, r, g, bos] = names;
        self.hopf(h, &b.h, None)?;
        self.hopf(r, &b.r, Some(h))?;
        if !self.has(g) {
            let grading: Vec<usize> = (0..b.r.space().dim())
                .map(|i| b.grading[i * b.h.space().dim()])
                .collect();
            let grade = format!("{g}.grade");
            self.grade(&grade, b.r.space(), &grading)?;
            let mut args = vec![arg("hopf", r), arg("grade", grade)];
            if cosemisimple {
                args.push(("cosemisimple".into(), None));
            }
            self.role(ObjectKind::GradedYdHopf, g, args)?;
        }
        if !self.has(bos) {
            self.role(ObjectKind::Bosonization, bos, vec![arg("graded", g)])?;
        }
        Ok(())
    }

    /// A measuring over the already written Hopf algebra `hopf`.
    pub fn measuring(&mut self, name: &str, m: &Measuring, hopf: &str) -> Result<()> {
        if self.has(name) {
            return Ok(());
        }
        let unit = Measuring::unit(m.hopf.clone());
        if m.alg.space.is_unit() && m.alg == unit.alg && m.nu == unit.nu {
            return self.role(
                ObjectKind::Measuring,
                name,
                vec![arg("hopf", hopf), ("trivial".into(), None)],
            );
        }
        let mut args = vec![
            arg("hopf", hopf),
            self.tensor(name, TensorRole::Mul, &m.alg.mul)?,
            self.tensor(name, TensorRole::Unit, &m.alg.unit)?,
            self.tensor(name, TensorRole::Nu, &m.nu)?,
        ];
        if !m.module.ambient.is_trivial() {
            args.push(self.tensor(name, TensorRole::Action, &m.module.action)?);
        }
        self.role(ObjectKind::Measuring, name, args)
    }

    pub fn cocycle(&mut self, name: &str, sigma: &LinearMap, measuring: &str) -> Result<()> {
        let t = self.tensor(name, TensorRole::Cocycle, sigma)?;
        self.role(
            ObjectKind::Cocycle,
            name,
            vec![arg("measuring", measuring), t],
        )
    }

    pub fn cleft(&mut self, name: &str, e: &CleftExtension, hopf: &str) -> Result<()> {
        let ca = &e.comod_alg;
        let mut args = vec![
            arg("hopf", hopf),
            self.tensor(name, TensorRole::Mul, &ca.alg.mul)?,
            self.tensor(name, TensorRole::Unit, &ca.alg.unit)?,
            self.tensor(name, TensorRole::Coaction, &ca.coaction)?,
            self.tensor(name, TensorRole::Section, &e.section)?,
            self.tensor(name, TensorRole::SectionInv, &e.section_inv)?,
        ];
        if !ca.module.ambient.is_trivial() {
            args.push(self.tensor(name, TensorRole::Action, &ca.module.action)?);
        }
        self.role(ObjectKind::CleftExtension, name, args)
    }
}

/// Replaces the factor `old` by `new` (same dimension) in source and target.
pub fn rename_factor(map: &LinearMap, old: &BasedSpace, new: &BasedSpace) -> Result<LinearMap> {
    let swap = |s: &TensorSpace| -> Result<TensorSpace> {
        let factors = s
            .factors()
            .iter()
            .map(|f| if f == old { new.clone() } else { f.clone() })
            .collect();
        TensorSpace::new(s.field(), factors)
    };
    map.reinterpret(swap(map.source())?, swap(map.target())?)
}

/// Renames the single factor of `m`'s algebra space to `name`, returning
/// the old and new factor. A measuring on `𝟙` is returned unchanged.
pub fn rename_measuring(
    m: &Measuring,
    name: &str,
) -> Result<(Measuring, Option<(BasedSpace, BasedSpace)>)> {
    let [old] = m.alg.space.factors() else {
        return Ok((m.clone(), None));
    };
    let new = old.renamed(name);
    let r = |x: &LinearMap| rename_factor(x, old, &new);
    let alg = Algebra::new(r(&m.alg.mul)?, r(&m.alg.unit)?)?;
    let module = Module::new(
        m.module.ambient.clone(),
        alg.space.clone(),
        r(&m.module.action)?,
    )?;
    let out = Measuring::new(m.hopf.clone(), alg, module, r(&m.nu)?)?;
    Ok((out, Some((old.clone(), new))))
}
