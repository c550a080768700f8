//! The uniform category interface, functors, natural transformations and
//! their bounded validators.
//!
//! Every category in this crate (finite tables, free constructions over a
//! base, colax colimits) implements [`Category`]. Hom-sets are always finite;
//! object collections may be infinite, so law sweeps quantify over
//! [`Category::objects_up_to`] for a caller-chosen weight bound.

use crate::report::LawReport;
use serde_json::Value;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

/// Bound for sweeps over possibly infinite categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sweep {
    /// Maximum object weight (flattened sequence length for free constructions).
    pub max_weight: usize,
    /// Maximum number of morphisms taken from a single hom-set.
    pub hom_cap: Option<usize>,
}

impl Sweep {
    pub fn new(max_weight: usize) -> Self {
        Sweep {
            max_weight,
            hom_cap: None,
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Sweep {
            hom_cap: Some(cap),
            ..self
        }
    }
}

pub trait Category: Clone + Send + Sync + 'static {
    type Obj: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static;
    type Mor: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static;

    fn contains(&self, o: &Self::Obj) -> bool;
    fn dom(&self, m: &Self::Mor) -> Self::Obj;
    fn cod(&self, m: &Self::Mor) -> Self::Obj;
    fn identity(&self, o: &Self::Obj) -> Self::Mor;
    /// Diagrammatic composite: apply `first`, then `then`. `None` if not composable.
    fn compose(&self, first: &Self::Mor, then: &Self::Mor) -> Option<Self::Mor>;
    /// Every morphism `a -> b`, duplicate-free, in a deterministic order.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;
    fn weight(&self, o: &Self::Obj) -> usize;
    /// All objects of weight at most `w`, deterministic order.
    fn objects_up_to(&self, w: usize) -> Vec<Self::Obj>;

    fn obj_json(&self, o: &Self::Obj) -> Value {
        Value::String(format!("{o:?}"))
    }
    fn mor_json(&self, m: &Self::Mor) -> Value {
        Value::String(format!("{m:?}"))
    }

    fn show_obj(&self, o: &Self::Obj) -> String {
        self.obj_json(o).to_string()
    }
    fn show_mor(&self, m: &Self::Mor) -> String {
        self.mor_json(m).to_string()
    }

    /// Composite that is known to exist.
    fn then(&self, first: &Self::Mor, then: &Self::Mor) -> Self::Mor {
        self.compose(first, then).unwrap_or_else(|| {
            panic!(
                "composite of {} and {} is undefined",
                self.show_mor(first),
                self.show_mor(then)
            )
        })
    }

    fn is_identity(&self, m: &Self::Mor) -> bool {
        let d = self.dom(m);
        d == self.cod(m) && *m == self.identity(&d)
    }
}

/// Objects of the sweep together with every morphism between them (capped).
pub struct SweepDomain<C: Category> {
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
    pub truncated: bool,
}

impl<C: Category> SweepDomain<C> {
    pub fn of(cat: &C, sweep: Sweep) -> Self {
        Self::over(cat, cat.objects_up_to(sweep.max_weight), sweep.hom_cap)
    }

    pub fn over(cat: &C, objects: Vec<C::Obj>, cap: Option<usize>) -> Self {
        let mut morphisms = Vec::new();
        let mut truncated = false;
        for a in &objects {
            for b in &objects {
                let mut hom = cat.hom(a, b);
                if let Some(cap) = cap {
                    if hom.len() > cap {
                        hom.truncate(cap);
                        truncated = true;
                    }
                }
                morphisms.extend(hom);
            }
        }
        SweepDomain {
            objects,
            morphisms,
            truncated,
        }
    }

    /// Composable pairs `(f, g)` with `f` then `g`, both in the sweep.
    pub fn composable_pairs<'a>(
        &'a self,
        cat: &'a C,
    ) -> impl Iterator<Item = (&'a C::Mor, &'a C::Mor)> + 'a {
        let mut by_dom: HashMap<C::Obj, Vec<&'a C::Mor>> = HashMap::new();
        for g in &self.morphisms {
            by_dom.entry(cat.dom(g)).or_default().push(g);
        }
        self.morphisms.iter().flat_map(move |f| {
            let next = by_dom.get(&cat.cod(f)).cloned().unwrap_or_default();
            next.into_iter().map(move |g| (f, g))
        })
    }
}

type ObjFn<A, B> = Arc<dyn Fn(&<A as Category>::Obj) -> <B as Category>::Obj + Send + Sync>;
type MorFn<A, B> = Arc<dyn Fn(&<A as Category>::Mor) -> <B as Category>::Mor + Send + Sync>;

/// A functor given by its object and morphism maps.
pub struct Functor<A: Category, B: Category> {
    pub source: A,
    pub target: B,
    obj: ObjFn<A, B>,
    mor: MorFn<A, B>,
}

impl<A: Category, B: Category> Clone for Functor<A, B> {
    fn clone(&self) -> Self {
        Functor {
            source: self.source.clone(),
            target: self.target.clone(),
            obj: self.obj.clone(),
            mor: self.mor.clone(),
        }
    }
}

impl<A: Category, B: Category> Functor<A, B> {
    pub fn new(
        source: A,
        target: B,
        obj: impl Fn(&A::Obj) -> B::Obj + Send + Sync + 'static,
        mor: impl Fn(&A::Mor) -> B::Mor + Send + Sync + 'static,
    ) -> Self {
        Functor {
            source,
            target,
            obj: Arc::new(obj),
            mor: Arc::new(mor),
        }
    }

    pub fn obj(&self, a: &A::Obj) -> B::Obj {
        (self.obj)(a)
    }

    pub fn mor(&self, m: &A::Mor) -> B::Mor {
        (self.mor)(m)
    }

    /// `self` followed by `g`.
    pub fn then<C: Category>(&self, g: &Functor<B, C>) -> Functor<A, C> {
        let (f1, f2) = (self.clone(), self.clone());
        let (g1, g2) = (g.clone(), g.clone());
        Functor::new(
            self.source.clone(),
            g.target.clone(),
            move |a| g1.obj(&f1.obj(a)),
            move |m| g2.mor(&f2.mor(m)),
        )
    }

    /// Functor into a thin target determined by its object map: each
    /// morphism goes to the unique morphism between the image objects.
    pub fn into_thin(
        source: A,
        target: B,
        obj: impl Fn(&A::Obj) -> B::Obj + Send + Sync + 'static,
    ) -> Self {
        let obj = Arc::new(obj);
        let (src, tgt, o2) = (source.clone(), target.clone(), obj.clone());
        Functor {
            source,
            target,
            obj: obj.clone() as ObjFn<A, B>,
            mor: Arc::new(move |m| {
                let (a, b) = (o2(&src.dom(m)), o2(&src.cod(m)));
                tgt.hom(&a, &b).into_iter().next().unwrap_or_else(|| {
                    panic!(
                        "thin target has no morphism {} -> {}",
                        tgt.show_obj(&a),
                        tgt.show_obj(&b)
                    )
                })
            }),
        }
    }
}

impl<A: Category> Functor<A, A> {
    pub fn identity(cat: &A) -> Self {
        Functor::new(cat.clone(), cat.clone(), |a| a.clone(), |m| m.clone())
    }
}

type CompFn<A, B> = Arc<dyn Fn(&<A as Category>::Obj) -> <B as Category>::Mor + Send + Sync>;

/// A natural transformation `source => target` between parallel functors.
pub struct NatTransform<A: Category, B: Category> {
    pub source: Functor<A, B>,
    pub target: Functor<A, B>,
    component: CompFn<A, B>,
}

impl<A: Category, B: Category> Clone for NatTransform<A, B> {
    fn clone(&self) -> Self {
        NatTransform {
            source: self.source.clone(),
            target: self.target.clone(),
            component: self.component.clone(),
        }
    }
}

impl<A: Category, B: Category> NatTransform<A, B> {
    pub fn new(
        source: Functor<A, B>,
        target: Functor<A, B>,
        component: impl Fn(&A::Obj) -> B::Mor + Send + Sync + 'static,
    ) -> Self {
        NatTransform {
            source,
            target,
            component: Arc::new(component),
        }
    }

    pub fn at(&self, a: &A::Obj) -> B::Mor {
        (self.component)(a)
    }

    pub fn identity(f: &Functor<A, B>) -> Self {
        let g = f.clone();
        NatTransform::new(f.clone(), f.clone(), move |a| g.target.identity(&g.obj(a)))
    }

    /// Vertical composite `self` then `next`.
    pub fn then(&self, next: &NatTransform<A, B>) -> Self {
        let (s, n) = (self.clone(), next.clone());
        NatTransform::new(self.source.clone(), next.target.clone(), move |a| {
            s.source.target.then(&s.at(a), &n.at(a))
        })
    }

    /// Whiskering `self · pre`: components `self_{pre(x)}`.
    pub fn after<Z: Category>(&self, pre: &Functor<Z, A>) -> NatTransform<Z, B> {
        let (s, p) = (self.clone(), pre.clone());
        NatTransform::new(pre.then(&self.source), pre.then(&self.target), move |z| {
            s.at(&p.obj(z))
        })
    }

    /// Whiskering `post · self`: components `post(self_x)`.
    pub fn before<C: Category>(&self, post: &Functor<B, C>) -> NatTransform<A, C> {
        let (s, p) = (self.clone(), post.clone());
        NatTransform::new(self.source.then(post), self.target.then(post), move |a| {
            p.mor(&s.at(a))
        })
    }
}

fn check_preserves<A: Category, B: Category>(
    f: &Functor<A, B>,
    dom: &SweepDomain<A>,
    report: &mut LawReport,
) {
    let (a, b) = (&f.source, &f.target);
    for x in &dom.objects {
        if !b.contains(&f.obj(x)) {
            report.structural(format!("object {} is sent outside the target", a.show_obj(x)));
        }
    }
    if !report.structural.is_empty() {
        return;
    }
    for x in &dom.objects {
        let fx = f.obj(x);
        report.check("functor/identity", f.mor(&a.identity(x)) == b.identity(&fx), || {
            format!("F(id {}) != id F({})", a.show_obj(x), a.show_obj(x))
        });
    }
    for m in &dom.morphisms {
        let fm = f.mor(m);
        let ok = b.dom(&fm) == f.obj(&a.dom(m)) && b.cod(&fm) == f.obj(&a.cod(m));
        report.check("functor/boundary", ok, || {
            format!(
                "F({}) = {} has boundary {} -> {}, expected {} -> {}",
                a.show_mor(m),
                b.show_mor(&fm),
                b.show_obj(&b.dom(&fm)),
                b.show_obj(&b.cod(&fm)),
                b.show_obj(&f.obj(&a.dom(m))),
                b.show_obj(&f.obj(&a.cod(m)))
            )
        });
    }
    for (g, h) in dom.composable_pairs(a) {
        let Some(gh) = a.compose(g, h) else {
            report.fail("functor/source-composition", format!("{};{}", a.show_mor(g), a.show_mor(h)));
            continue;
        };
        let lhs = f.mor(&gh);
        let rhs = b.compose(&f.mor(g), &f.mor(h));
        report.check("functor/composition", Some(&lhs) == rhs.as_ref(), || {
            format!("F({};{}) != F({});F({})", a.show_mor(g), a.show_mor(h), a.show_mor(g), a.show_mor(h))
        });
    }
}

/// Checks identity, boundary and composition preservation over a bounded sweep
/// of the source.
pub fn validate_functor<A: Category, B: Category>(f: &Functor<A, B>, sweep: Sweep) -> LawReport {
    let dom = SweepDomain::of(&f.source, sweep);
    validate_functor_on(f, &dom)
}

pub fn validate_functor_on<A: Category, B: Category>(
    f: &Functor<A, B>,
    dom: &SweepDomain<A>,
) -> LawReport {
    let mut report = LawReport::new();
    report.truncated = dom.truncated;
    check_preserves(f, dom, &mut report);
    report
}

/// Checks component boundaries and naturality squares over a bounded sweep.
pub fn validate_nat_transform<A: Category, B: Category>(
    t: &NatTransform<A, B>,
    sweep: Sweep,
) -> LawReport {
    let dom = SweepDomain::of(&t.source.source, sweep);
    validate_nat_transform_on(t, &dom)
}

pub fn validate_nat_transform_on<A: Category, B: Category>(
    t: &NatTransform<A, B>,
    dom: &SweepDomain<A>,
) -> LawReport {
    let (a, b) = (&t.source.source, &t.source.target);
    let mut report = LawReport::new();
    report.truncated = dom.truncated;
    for x in &dom.objects {
        let c = t.at(x);
        if b.dom(&c) != t.source.obj(x) || b.cod(&c) != t.target.obj(x) {
            report.structural(format!(
                "component at {} is {} -> {}, expected {} -> {}",
                a.show_obj(x),
                b.show_obj(&b.dom(&c)),
                b.show_obj(&b.cod(&c)),
                b.show_obj(&t.source.obj(x)),
                b.show_obj(&t.target.obj(x))
            ));
        }
    }
    if !report.structural.is_empty() {
        return report;
    }
    for m in &dom.morphisms {
        let (x, y) = (a.dom(m), a.cod(m));
        let lhs = b.compose(&t.source.mor(m), &t.at(&y));
        let rhs = b.compose(&t.at(&x), &t.target.mor(m));
        report.check("naturality", lhs.is_some() && lhs == rhs, || {
            format!("square at {} does not commute", a.show_mor(m))
        });
    }
    report
}

/// Structural equality of two functors on a sweep domain.
pub fn functors_agree<A: Category, B: Category>(
    law: &str,
    f: &Functor<A, B>,
    g: &Functor<A, B>,
    dom: &SweepDomain<A>,
    report: &mut LawReport,
) {
    let a = &f.source;
    for x in &dom.objects {
        report.check(law, f.obj(x) == g.obj(x), || {
            format!("objects differ at {}", a.show_obj(x))
        });
    }
    for m in &dom.morphisms {
        report.check(law, f.mor(m) == g.mor(m), || {
            format!(
                "differ at {}: {} vs {}",
                a.show_mor(m),
                f.target.show_mor(&f.mor(m)),
                g.target.show_mor(&g.mor(m))
            )
        });
    }
}

/// Componentwise equality of two transformations on the sweep objects.
pub fn cells_agree<A: Category, B: Category>(
    law: &str,
    s: &NatTransform<A, B>,
    t: &NatTransform<A, B>,
    objects: &[A::Obj],
    report: &mut LawReport,
) {
    for x in objects {
        report.check(law, s.at(x) == t.at(x), || {
            format!(
                "components differ at {}: {} vs {}",
                s.source.source.show_obj(x),
                s.source.target.show_mor(&s.at(x)),
                t.source.target.show_mor(&t.at(x))
            )
        });
    }
}

/// Checks that every component of `t` on `objects` is an identity.
pub fn cell_is_identity<A: Category, B: Category>(
    law: &str,
    t: &NatTransform<A, B>,
    objects: &[A::Obj],
    report: &mut LawReport,
) {
    let b = &t.source.target;
    for x in objects {
        let c = t.at(x);
        report.check(law, b.is_identity(&c), || {
            format!("component at {} is {}", t.source.source.show_obj(x), b.show_mor(&c))
        });
    }
}
