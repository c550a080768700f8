//! Finite categories given by explicit tables.
//!
//! Identities are implicit: one per object, written `id_<object>` wherever a
//! morphism name is expected. The composition table lists only pairs of
//! non-identity morphisms.

use crate::category::{Category, Functor, NatTransform};
use crate::error::{Error, Result};
use crate::report::LawReport;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

/// On-disk form of a finite category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCatData {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default)]
    pub composition: Vec<CompositionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// `first;then = equals`: apply `first`, then `then`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionEntry {
    pub first: String,
    pub then: String,
    pub equals: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FinMor {
    Id(usize),
    Gen(usize),
}

#[derive(Debug)]
struct Inner {
    objects: Vec<String>,
    gens: Vec<(String, usize, usize)>,
    comp: HashMap<(usize, usize), FinMor>,
    homs: HashMap<(usize, usize), Vec<FinMor>>,
    obj_index: HashMap<String, usize>,
    gen_index: HashMap<String, usize>,
}

/// A validated finite category. Cheap to clone.
#[derive(Clone, Debug)]
pub struct FinCat(Arc<Inner>);

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.to_data() == other.to_data()
    }
}

fn id_name(obj: &str) -> String {
    format!("id_{obj}")
}

/// Name resolution shared by validation and construction.
struct Names<'a> {
    objs: HashMap<&'a str, usize>,
    gens: HashMap<&'a str, usize>,
    data: &'a FinCatData,
}

impl<'a> Names<'a> {
    fn resolve(&self, name: &str) -> Option<FinMor> {
        if let Some(&g) = self.gens.get(name) {
            return Some(FinMor::Gen(g));
        }
        name.strip_prefix("id_")
            .and_then(|o| self.objs.get(o))
            .map(|&o| FinMor::Id(o))
    }

    fn ends(&self, m: FinMor) -> (usize, usize) {
        match m {
            FinMor::Id(o) => (o, o),
            FinMor::Gen(g) => {
                let d = &self.data.morphisms[g];
                (self.objs[d.src.as_str()], self.objs[d.tgt.as_str()])
            }
        }
    }

    fn show(&self, m: FinMor) -> String {
        match m {
            FinMor::Id(o) => id_name(&self.data.objects[o]),
            FinMor::Gen(g) => self.data.morphisms[g].name.clone(),
        }
    }
}

/// Checks a category table. Dangling names, duplicate declarations and
/// non-composable entries are structural errors; missing composites,
/// wrong-boundary composites and associativity failures are law findings.
pub fn validate_category(data: &FinCatData) -> LawReport {
    let mut report = LawReport::new();
    let mut objs = HashMap::new();
    for (i, o) in data.objects.iter().enumerate() {
        if objs.insert(o.as_str(), i).is_some() {
            report.structural(format!("duplicate object '{o}'"));
        }
    }
    let mut gens = HashMap::new();
    for (i, m) in data.morphisms.iter().enumerate() {
        if gens.insert(m.name.as_str(), i).is_some() {
            report.structural(format!("duplicate morphism '{}'", m.name));
        }
        if m.name.strip_prefix("id_").is_some_and(|o| objs.contains_key(o)) {
            report.structural(format!("morphism '{}' shadows an implicit identity", m.name));
        }
        for end in [&m.src, &m.tgt] {
            if !objs.contains_key(end.as_str()) {
                report.structural(format!("morphism '{}' references unknown object '{end}'", m.name));
            }
        }
    }
    if !report.structural.is_empty() {
        return report;
    }
    let names = Names {
        objs,
        gens,
        data,
    };

    let mut table: HashMap<(usize, usize), FinMor> = HashMap::new();
    for e in &data.composition {
        let resolved = [&e.first, &e.then, &e.equals].map(|n| (n, names.resolve(n)));
        if let Some((n, _)) = resolved.iter().find(|(_, r)| r.is_none()) {
            report.structural(format!("composition entry references unknown morphism '{n}'"));
            continue;
        }
        let [f, g, h] = resolved.map(|(_, r)| r.unwrap());
        let (FinMor::Gen(fi), FinMor::Gen(gi)) = (f, g) else {
            report.structural(format!(
                "composition entry {};{} involves an identity (identity composites are implicit)",
                e.first, e.then
            ));
            continue;
        };
        let (fs, ft) = names.ends(f);
        let (gs, gt) = names.ends(g);
        if ft != gs {
            report.structural(format!(
                "composition entry {};{} is not a composable pair",
                e.first, e.then
            ));
            continue;
        }
        if table.insert((fi, gi), h).is_some() {
            report.structural(format!("duplicate composition entry {};{}", e.first, e.then));
            continue;
        }
        let (hs, ht) = names.ends(h);
        report.check("composition/boundary", hs == fs && ht == gt, || {
            format!("{};{} = {} has the wrong boundary", e.first, e.then, e.equals)
        });
    }
    if !report.structural.is_empty() {
        return report;
    }

    let n = data.morphisms.len();
    for f in 0..n {
        for g in 0..n {
            let (_, ft) = names.ends(FinMor::Gen(f));
            let (gs, _) = names.ends(FinMor::Gen(g));
            if ft == gs {
                report.check("composition/total", table.contains_key(&(f, g)), || {
                    format!(
                        "no entry for composable pair {};{}",
                        data.morphisms[f].name, data.morphisms[g].name
                    )
                });
            }
        }
    }
    if !report.passed() {
        return report;
    }

    let comp = |a: FinMor, b: FinMor| -> FinMor {
        match (a, b) {
            (FinMor::Id(_), x) | (x, FinMor::Id(_)) => x,
            (FinMor::Gen(i), FinMor::Gen(j)) => table[&(i, j)],
        }
    };
    for f in 0..n {
        for g in 0..n {
            if names.ends(FinMor::Gen(f)).1 != names.ends(FinMor::Gen(g)).0 {
                continue;
            }
            for h in 0..n {
                if names.ends(FinMor::Gen(g)).1 != names.ends(FinMor::Gen(h)).0 {
                    continue;
                }
                let (f, g, h) = (FinMor::Gen(f), FinMor::Gen(g), FinMor::Gen(h));
                let lhs = comp(comp(f, g), h);
                let rhs = comp(f, comp(g, h));
                report.check("associativity", lhs == rhs, || {
                    format!(
                        "({0};{1});{2} = {3} but {0};({1};{2}) = {4}",
                        names.show(f),
                        names.show(g),
                        names.show(h),
                        names.show(lhs),
                        names.show(rhs)
                    )
                });
            }
        }
    }
    report
}

impl FinCat {
    pub fn from_data(data: FinCatData) -> Result<FinCat> {
        let report = validate_category(&data);
        if !report.passed() {
            return Err(Error::from_report("category", &report));
        }
        let obj_index: HashMap<String, usize> = data
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        let gen_index: HashMap<String, usize> = data
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.clone(), i))
            .collect();
        let gens: Vec<(String, usize, usize)> = data
            .morphisms
            .iter()
            .map(|m| (m.name.clone(), obj_index[&m.src], obj_index[&m.tgt]))
            .collect();
        let resolve = |n: &str| -> FinMor {
            gen_index
                .get(n)
                .map(|&g| FinMor::Gen(g))
                .unwrap_or_else(|| FinMor::Id(obj_index[&n["id_".len()..]]))
        };
        let comp = data
            .composition
            .iter()
            .map(|e| {
                let (FinMor::Gen(f), FinMor::Gen(g)) = (resolve(&e.first), resolve(&e.then)) else {
                    unreachable!("validated")
                };
                ((f, g), resolve(&e.equals))
            })
            .collect();
        let mut homs: HashMap<(usize, usize), Vec<FinMor>> = HashMap::new();
        for o in 0..data.objects.len() {
            homs.entry((o, o)).or_default().push(FinMor::Id(o));
        }
        for (i, (_, s, t)) in gens.iter().enumerate() {
            homs.entry((*s, *t)).or_default().push(FinMor::Gen(i));
        }
        Ok(FinCat(Arc::new(Inner {
            objects: data.objects,
            gens,
            comp,
            homs,
            obj_index,
            gen_index,
        })))
    }

    pub fn from_json(text: &str) -> Result<FinCat> {
        let data: FinCatData = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        FinCat::from_data(data)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<FinCat> {
        FinCat::from_data(load_json(path.as_ref())?)
    }

    pub fn to_data(&self) -> FinCatData {
        let i = &self.0;
        let mut composition: Vec<CompositionEntry> = i
            .comp
            .iter()
            .map(|(&(f, g), &h)| CompositionEntry {
                first: i.gens[f].0.clone(),
                then: i.gens[g].0.clone(),
                equals: self.mor_name(h),
            })
            .collect();
        composition.sort_by(|a, b| (&a.first, &a.then).cmp(&(&b.first, &b.then)));
        FinCatData {
            objects: i.objects.clone(),
            morphisms: i
                .gens
                .iter()
                .map(|(n, s, t)| MorphismDecl {
                    name: n.clone(),
                    src: i.objects[*s].clone(),
                    tgt: i.objects[*t].clone(),
                })
                .collect(),
            composition,
        }
    }

    pub fn object_count(&self) -> usize {
        self.0.objects.len()
    }

    pub fn objects(&self) -> Vec<usize> {
        (0..self.0.objects.len()).collect()
    }

    /// Every morphism, identities first.
    pub fn morphisms(&self) -> Vec<FinMor> {
        (0..self.0.objects.len())
            .map(FinMor::Id)
            .chain((0..self.0.gens.len()).map(FinMor::Gen))
            .collect()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.0.objects[o]
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.0.obj_index.get(name).copied()
    }

    pub fn mor_name(&self, m: FinMor) -> String {
        match m {
            FinMor::Id(o) => id_name(&self.0.objects[o]),
            FinMor::Gen(g) => self.0.gens[g].0.clone(),
        }
    }

    pub fn morphism(&self, name: &str) -> Option<FinMor> {
        if let Some(&g) = self.0.gen_index.get(name) {
            return Some(FinMor::Gen(g));
        }
        name.strip_prefix("id_").and_then(|o| self.object(o)).map(FinMor::Id)
    }

    /// At most one morphism between any two objects.
    pub fn is_thin(&self) -> bool {
        self.0.homs.values().all(|h| h.len() <= 1)
    }

    /// The one-object, one-morphism category.
    pub fn one() -> FinCat {
        FinCat::from_data(FinCatData {
            objects: vec!["•".into()],
            ..Default::default()
        })
        .expect("valid")
    }

    /// `0 -u-> 1`.
    pub fn arrow() -> FinCat {
        FinCat::from_data(FinCatData {
            objects: vec!["0".into(), "1".into()],
            morphisms: vec![decl("u", "0", "1")],
            composition: vec![],
        })
        .expect("valid")
    }

    /// Two parallel arrows `p, q: 0 -> 1`.
    pub fn parallel_pair() -> FinCat {
        FinCat::from_data(FinCatData {
            objects: vec!["0".into(), "1".into()],
            morphisms: vec![decl("p", "0", "1"), decl("q", "0", "1")],
            composition: vec![],
        })
        .expect("valid")
    }

    pub fn discrete(names: &[&str]) -> FinCat {
        FinCat::from_data(FinCatData {
            objects: names.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        })
        .expect("valid")
    }

    /// The poset on `names` with `leq(i, j)` meaning `names[i] <= names[j]`.
    /// The relation must be a partial order; morphisms are named `x<=y`.
    pub fn poset(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FinCat {
        FinCat::from_data(poset_data(names, leq)).expect("relation must be a partial order")
    }

    /// `0 <= 1 <= ... <= n-1`.
    pub fn chain(n: usize) -> FinCat {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        FinCat::poset(&refs, |i, j| i <= j)
    }

    /// A one-object category from a finite monoid; element 0 must be the unit.
    pub fn monoid(elements: &[&str], mult: impl Fn(usize, usize) -> usize) -> FinCat {
        let gens: Vec<usize> = (1..elements.len()).collect();
        let name = |k: usize| {
            if k == 0 {
                "id_•".to_string()
            } else {
                elements[k].to_string()
            }
        };
        let mut composition = vec![];
        for &a in &gens {
            for &b in &gens {
                // `a` then `b` is the product b·a
                composition.push(CompositionEntry {
                    first: elements[a].into(),
                    then: elements[b].into(),
                    equals: name(mult(b, a)),
                });
            }
        }
        FinCat::from_data(FinCatData {
            objects: vec!["•".into()],
            morphisms: gens.iter().map(|&g| decl(elements[g], "•", "•")).collect(),
            composition,
        })
        .expect("monoid table must be associative with unit 0")
    }
}

pub(crate) fn decl(name: &str, src: &str, tgt: &str) -> MorphismDecl {
    MorphismDecl {
        name: name.into(),
        src: src.into(),
        tgt: tgt.into(),
    }
}

pub fn poset_data(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FinCatData {
    let n = names.len();
    let mname = |i: usize, j: usize| {
        if i == j {
            id_name(names[i])
        } else {
            format!("{}<={}", names[i], names[j])
        }
    };
    let mut morphisms = vec![];
    let mut composition = vec![];
    for i in 0..n {
        for j in 0..n {
            if i != j && leq(i, j) {
                morphisms.push(decl(&mname(i, j), names[i], names[j]));
                for k in 0..n {
                    if k != j && leq(j, k) {
                        composition.push(CompositionEntry {
                            first: mname(i, j),
                            then: mname(j, k),
                            equals: mname(i, k),
                        });
                    }
                }
            }
        }
    }
    FinCatData {
        objects: names.iter().map(|s| s.to_string()).collect(),
        morphisms,
        composition,
    }
}

impl Category for FinCat {
    type Obj = usize;
    type Mor = FinMor;

    fn contains(&self, o: &usize) -> bool {
        *o < self.0.objects.len()
    }

    fn dom(&self, m: &FinMor) -> usize {
        match *m {
            FinMor::Id(o) => o,
            FinMor::Gen(g) => self.0.gens[g].1,
        }
    }

    fn cod(&self, m: &FinMor) -> usize {
        match *m {
            FinMor::Id(o) => o,
            FinMor::Gen(g) => self.0.gens[g].2,
        }
    }

    fn identity(&self, o: &usize) -> FinMor {
        FinMor::Id(*o)
    }

    fn compose(&self, first: &FinMor, then: &FinMor) -> Option<FinMor> {
        if self.cod(first) != self.dom(then) {
            return None;
        }
        Some(match (*first, *then) {
            (FinMor::Id(_), x) | (x, FinMor::Id(_)) => x,
            (FinMor::Gen(f), FinMor::Gen(g)) => self.0.comp[&(f, g)],
        })
    }

    fn hom(&self, a: &usize, b: &usize) -> Vec<FinMor> {
        self.0.homs.get(&(*a, *b)).cloned().unwrap_or_default()
    }

    fn weight(&self, _o: &usize) -> usize {
        1
    }

    fn objects_up_to(&self, w: usize) -> Vec<usize> {
        if w == 0 {
            vec![]
        } else {
            self.objects()
        }
    }

    fn obj_json(&self, o: &usize) -> Value {
        Value::String(self.0.objects[*o].clone())
    }

    fn mor_json(&self, m: &FinMor) -> Value {
        Value::String(self.mor_name(*m))
    }
}

/// A functor between finite categories as explicit maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunctor {
    pub objects: Vec<usize>,
    /// Image of each generator, indexed like the source's morphism list.
    pub generators: Vec<FinMor>,
}

impl FinFunctor {
    pub fn to_functor(&self, source: &FinCat, target: &FinCat) -> Functor<FinCat, FinCat> {
        let (o1, o2) = (self.objects.clone(), self.objects.clone());
        let g = self.generators.clone();
        let t = target.clone();
        Functor::new(
            source.clone(),
            target.clone(),
            move |x| o1[*x],
            move |m| match *m {
                FinMor::Id(o) => t.identity(&o2[o]),
                FinMor::Gen(i) => g[i],
            },
        )
    }

    pub fn from_functor(f: &Functor<FinCat, FinCat>) -> FinFunctor {
        FinFunctor {
            objects: f.source.objects().iter().map(|o| f.obj(o)).collect(),
            generators: (0..f.source.0.gens.len()).map(|g| f.mor(&FinMor::Gen(g))).collect(),
        }
    }
}

/// Every functor `a -> b`, by backtracking over object maps and generator images.
pub fn all_functors(a: &FinCat, b: &FinCat) -> Vec<FinFunctor> {
    let na = a.object_count();
    let nb = b.object_count();
    let gens = &a.0.gens;
    let mut out = vec![];
    let mut objects = vec![0usize; na];
    if na > 0 && nb == 0 {
        return out;
    }
    loop {
        // generator images, checked against the composition table as they are fixed
        let mut images: Vec<FinMor> = Vec::with_capacity(gens.len());
        extend_generators(a, b, &objects, &mut images, &mut out);
        let mut k = 0;
        while k < na {
            objects[k] += 1;
            if objects[k] < nb {
                break;
            }
            objects[k] = 0;
            k += 1;
        }
        if k == na {
            break;
        }
    }
    out
}

fn extend_generators(
    a: &FinCat,
    b: &FinCat,
    objects: &[usize],
    images: &mut Vec<FinMor>,
    out: &mut Vec<FinFunctor>,
) {
    let i = images.len();
    let gens = &a.0.gens;
    if i == gens.len() {
        out.push(FinFunctor {
            objects: objects.to_vec(),
            generators: images.clone(),
        });
        return;
    }
    let (_, s, t) = gens[i];
    let image_of = |m: FinMor, images: &[FinMor]| match m {
        FinMor::Id(o) => FinMor::Id(objects[o]),
        FinMor::Gen(g) => images[g],
    };
    for cand in b.hom(&objects[s], &objects[t]) {
        images.push(cand);
        let ok = a.0.comp.iter().all(|(&(f, g), &h)| {
            let fixed = |m: FinMor| match m {
                FinMor::Id(_) => true,
                FinMor::Gen(x) => x <= i,
            };
            if f > i || g > i || !fixed(h) {
                return true;
            }
            b.compose(&images[f], &images[g]) == Some(image_of(h, images))
        });
        if ok {
            extend_generators(a, b, objects, images, out);
        }
        images.pop();
    }
}

/// Every natural transformation between two functors of finite categories,
/// as component lists indexed by source object.
pub fn all_nat_transforms(f: &Functor<FinCat, FinCat>, g: &Functor<FinCat, FinCat>) -> Vec<Vec<FinMor>> {
    let a = &f.source;
    let b = &f.target;
    let choices: Vec<Vec<FinMor>> = a.objects().iter().map(|x| b.hom(&f.obj(x), &g.obj(x))).collect();
    crate::util::product(&choices)
        .into_iter()
        .filter(|comps| {
            a.morphisms().iter().all(|m| {
                let (x, y) = (a.dom(m), a.cod(m));
                b.compose(&f.mor(m), &comps[y]) == b.compose(&comps[x], &g.mor(m))
            })
        })
        .collect()
}

pub fn nat_from_components(
    f: &Functor<FinCat, FinCat>,
    g: &Functor<FinCat, FinCat>,
    comps: Vec<FinMor>,
) -> NatTransform<FinCat, FinCat> {
    NatTransform::new(f.clone(), g.clone(), move |x| comps[*x])
}

/// A category reference in a file: a path (relative to the referring file) or
/// an inline table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CatRef {
    Path(String),
    Inline(FinCatData),
}

impl CatRef {
    pub fn resolve(&self, base_dir: &Path) -> Result<FinCat> {
        match self {
            CatRef::Path(p) => FinCat::load(base_dir.join(p)),
            CatRef::Inline(d) => FinCat::from_data(d.clone()),
        }
    }
}

/// On-disk form of a functor between finite categories.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctorData {
    pub source: CatRef,
    pub target: CatRef,
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

/// On-disk form of a natural transformation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NatTransformData {
    pub source: FunctorData,
    pub target: FunctorData,
    pub components: BTreeMap<String, String>,
}

impl FunctorData {
    /// Resolves names. Unknown names and unmapped generators are structural
    /// errors; functor laws are not checked here.
    pub fn resolve(&self, base_dir: &Path) -> Result<Functor<FinCat, FinCat>> {
        let a = self.source.resolve(base_dir)?;
        let b = self.target.resolve(base_dir)?;
        let mut objects = vec![];
        for o in 0..a.object_count() {
            let name = a.object_name(o);
            let img = self
                .objects
                .get(name)
                .ok_or_else(|| Error::Structural(format!("object '{name}' is not mapped")))?;
            objects.push(
                b.object(img)
                    .ok_or_else(|| Error::Structural(format!("object '{name}' is mapped outside the target ('{img}')")))?,
            );
        }
        let mut generators = vec![];
        for (name, _, _) in &a.0.gens {
            let img = self
                .morphisms
                .get(name)
                .ok_or_else(|| Error::Structural(format!("morphism '{name}' is not mapped")))?;
            generators.push(b.morphism(img).ok_or_else(|| {
                Error::Structural(format!("morphism '{name}' is mapped outside the target ('{img}')"))
            })?);
        }
        for k in self.objects.keys() {
            if a.object(k).is_none() {
                return Err(Error::Structural(format!("map mentions unknown source object '{k}'")));
            }
        }
        Ok(FinFunctor { objects, generators }.to_functor(&a, &b))
    }

    pub fn load(path: &Path) -> Result<Functor<FinCat, FinCat>> {
        let data: FunctorData = load_json(path)?;
        data.resolve(path.parent().unwrap_or(Path::new(".")))
    }

    /// Serializes a functor between finite categories with inline tables.
    pub fn from_functor(f: &Functor<FinCat, FinCat>) -> FunctorData {
        let (a, b) = (&f.source, &f.target);
        FunctorData {
            source: CatRef::Inline(a.to_data()),
            target: CatRef::Inline(b.to_data()),
            objects: a
                .objects()
                .iter()
                .map(|o| (a.object_name(*o).to_string(), b.object_name(f.obj(o)).to_string()))
                .collect(),
            morphisms: (0..a.0.gens.len())
                .map(|g| (a.mor_name(FinMor::Gen(g)), b.mor_name(f.mor(&FinMor::Gen(g)))))
                .collect(),
        }
    }
}

pub(crate) fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_functor, validate_nat_transform, Sweep};

    fn entry(f: &str, g: &str, h: &str) -> CompositionEntry {
        CompositionEntry {
            first: f.into(),
            then: g.into(),
            equals: h.into(),
        }
    }

    #[test]
    fn arrow_is_valid() {
        assert!(validate_category(&FinCat::arrow().to_data()).passed());
    }

    #[test]
    fn self_composite_of_arrow_is_structural() {
        let mut d = FinCat::arrow().to_data();
        d.composition.push(entry("u", "u", "u"));
        let r = validate_category(&d);
        assert_eq!(r.structural.len(), 1);
        assert!(r.structural[0].contains("not a composable pair"));
    }

    #[test]
    fn dangling_reference_is_structural() {
        let mut d = FinCat::arrow().to_data();
        d.morphisms.push(decl("v", "1", "7"));
        let r = validate_category(&d);
        assert!(r.structural[0].contains("unknown object '7'"));
        assert!(r.findings.is_empty());
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut d = FinCat::chain(3).to_data();
        d.composition.clear();
        let r = validate_category(&d);
        assert!(r.structural.is_empty());
        assert_eq!(r.failed_laws(), vec!["composition/total"]);
    }

    /// Indiscrete category on three objects times Z/2: morphism (i, j, s).
    fn cyclic_z2() -> FinCatData {
        let objs = ["0", "1", "2"];
        let name = |i: usize, j: usize, s: usize| {
            if i == j && s == 0 {
                format!("id_{i}")
            } else {
                format!("m{i}{j}{s}")
            }
        };
        let mut d = FinCatData {
            objects: objs.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        };
        for i in 0..3 {
            for j in 0..3 {
                for s in 0..2 {
                    if !(i == j && s == 0) {
                        d.morphisms.push(decl(&name(i, j, s), objs[i], objs[j]));
                    }
                }
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for s in 0..2 {
                        for t in 0..2 {
                            if (i == j && s == 0) || (j == k && t == 0) {
                                continue;
                            }
                            d.composition.push(entry(&name(i, j, s), &name(j, k, t), &name(i, k, (s + t) % 2)));
                        }
                    }
                }
            }
        }
        d
    }

    /// Independent triple sweep over the raw table.
    fn brute_force_assoc_failures(d: &FinCatData) -> Vec<(String, String, String)> {
        let src: HashMap<&str, &str> = d.morphisms.iter().map(|m| (m.name.as_str(), m.src.as_str())).collect();
        let tgt: HashMap<&str, &str> = d.morphisms.iter().map(|m| (m.name.as_str(), m.tgt.as_str())).collect();
        let table: HashMap<(&str, &str), &str> = d
            .composition
            .iter()
            .map(|e| ((e.first.as_str(), e.then.as_str()), e.equals.as_str()))
            .collect();
        let c = |a: &str, b: &str| -> String {
            if a.starts_with("id_") {
                b.to_string()
            } else if b.starts_with("id_") {
                a.to_string()
            } else {
                table[&(a, b)].to_string()
            }
        };
        let mut out = vec![];
        for f in &d.morphisms {
            for g in &d.morphisms {
                for h in &d.morphisms {
                    if tgt[f.name.as_str()] != src[g.name.as_str()] || tgt[g.name.as_str()] != src[h.name.as_str()] {
                        continue;
                    }
                    if c(&c(&f.name, &g.name), &h.name) != c(&f.name, &c(&g.name, &h.name)) {
                        out.push((f.name.clone(), g.name.clone(), h.name.clone()));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn broken_associativity_matches_brute_force() {
        let mut d = cyclic_z2();
        assert!(validate_category(&d).passed());
        let e = d
            .composition
            .iter_mut()
            .find(|e| e.first == "m010" && e.then == "m120")
            .unwrap();
        e.equals = "m021".into();
        let expected = brute_force_assoc_failures(&d);
        assert!(!expected.is_empty());
        let r = validate_category(&d);
        assert!(r.structural.is_empty());
        assert_eq!(r.tallies["associativity"].violated, expected.len());
        assert_eq!(r.failed_laws(), vec!["associativity"]);
        for (f, g, h) in expected.iter().take(crate::report::WITNESS_LIMIT) {
            let w = format!("({f};{g});{h}");
            assert!(r.findings.iter().any(|x| x.witness.starts_with(&w)), "{w}");
        }
    }

    #[test]
    fn identity_and_constant_functors_validate() {
        let arrow = FinCat::arrow();
        assert!(validate_functor(&Functor::identity(&arrow), Sweep::new(1)).passed());
        let one = FinCat::one();
        let k = Functor::new(arrow.clone(), one.clone(), |_| 0, |_| FinMor::Id(0));
        assert!(validate_functor(&k, Sweep::new(1)).passed());
    }

    #[test]
    fn collapsing_u_to_identity_is_a_boundary_violation() {
        let arrow = FinCat::arrow();
        let bad = FinFunctor {
            objects: vec![0, 1],
            generators: vec![FinMor::Id(0)],
        }
        .to_functor(&arrow, &arrow);
        let r = validate_functor(&bad, Sweep::new(1));
        // u;id_1 then has no image either
        assert_eq!(r.failed_laws(), vec!["functor/boundary", "functor/composition"]);
    }

    #[test]
    fn object_outside_target_is_structural() {
        let arrow = FinCat::arrow();
        let one = FinCat::one();
        let f = Functor::new(arrow, one, |x| *x, |_| FinMor::Id(0));
        let r = validate_functor(&f, Sweep::new(1));
        assert!(!r.structural.is_empty());
    }

    #[test]
    fn functor_counts() {
        let (one, arrow) = (FinCat::one(), FinCat::arrow());
        assert_eq!(all_functors(&arrow, &arrow).len(), 3);
        assert_eq!(all_functors(&arrow, &one).len(), 1);
        assert_eq!(all_functors(&FinCat::parallel_pair(), &arrow).len(), 3);
        // monotone self-maps of a 3-chain
        assert_eq!(all_functors(&FinCat::chain(3), &FinCat::chain(3)).len(), 10);
        for f in all_functors(&FinCat::chain(3), &FinCat::parallel_pair()) {
            assert!(validate_functor(&f.to_functor(&FinCat::chain(3), &FinCat::parallel_pair()), Sweep::new(1)).passed());
        }
    }

    #[test]
    fn naturality_in_poset_is_automatic() {
        let c = FinCat::chain(3);
        let id = Functor::identity(&c);
        let top = Functor::into_thin(c.clone(), c.clone(), |_| 2);
        let t = NatTransform::new(id, top, |x| FinCat::chain(3).hom(x, &2)[0]);
        assert!(validate_nat_transform(&t, Sweep::new(1)).passed());
    }

    #[test]
    fn broken_square_into_parallel_pair() {
        let (arrow, pp) = (FinCat::arrow(), FinCat::parallel_pair());
        let p = pp.morphism("p").unwrap();
        let q = pp.morphism("q").unwrap();
        // F sends u to p, G sends u to q; both identity on objects.
        let f = FinFunctor { objects: vec![0, 1], generators: vec![p] }.to_functor(&arrow, &pp);
        let g = FinFunctor { objects: vec![0, 1], generators: vec![q] }.to_functor(&arrow, &pp);
        // brute force over all identity-boundary component choices
        let mut failing = None;
        for c0 in pp.hom(&0, &0) {
            for c1 in pp.hom(&1, &1) {
                let comps = vec![c0, c1];
                let square = pp.compose(&p, &comps[1]) == pp.compose(&comps[0], &q);
                if !square {
                    failing = Some(comps);
                }
            }
        }
        let comps = failing.expect("a failing family exists");
        let t = nat_from_components(&f, &g, comps);
        let r = validate_nat_transform(&t, Sweep::new(1));
        assert_eq!(r.tallies["naturality"].violated, 1);
        assert!(r.findings[0].witness.contains("u"));
        assert!(all_nat_transforms(&f, &g).is_empty());
    }

    #[test]
    fn vertical_composite_of_valid_transforms_is_valid() {
        let c = FinCat::chain(3);
        let fs: Vec<_> = all_functors(&c, &c).into_iter().map(|f| f.to_functor(&c, &c)).collect();
        for f in &fs {
            for g in &fs {
                for h in &fs {
                    for s in all_nat_transforms(f, g) {
                        for t in all_nat_transforms(g, h) {
                            let v = nat_from_components(f, g, s.clone()).then(&nat_from_components(g, h, t));
                            assert!(validate_nat_transform(&v, Sweep::new(1)).passed());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monoid_category() {
        let z2 = FinCat::monoid(&["e", "g"], |a, b| (a + b) % 2);
        let g = z2.morphism("g").unwrap();
        assert_eq!(z2.compose(&g, &g), Some(FinMor::Id(0)));
        assert!(!z2.is_thin());
    }

    #[test]
    fn json_round_trip() {
        let c = FinCat::chain(3);
        let text = serde_json::to_string(&c.to_data()).unwrap();
        let back = FinCat::from_json(&text).unwrap();
        assert_eq!(back, c);
    }
}
