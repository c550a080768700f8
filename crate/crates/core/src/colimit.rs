//! Colax colimits of a functor `F: A -> B` in `Cat`, their universal
//! properties, and the monad `C⁺` obtained from the unit `Id -> C`.
//!
//! The carrier holds a copy of `A` and a copy of `B`. Besides the morphisms of
//! each copy there is, for every `v: b -> F(a)` in `B`, a mixed morphism
//! `b -> a`, written `v;β_a`. Nothing goes from the `A` side to the `B` side.

use crate::category::{
    functors_agree, validate_functor_on, validate_nat_transform_on, Category, Functor, NatTransform, Sweep,
    SweepDomain,
};
use crate::error::{Error, Result};
use crate::fincat::{CompositionEntry, FinCat, FinCatData, FinMor, MorphismDecl};
use crate::monad::{Monad, CARTESIAN};
use crate::report::LawReport;
use crate::seq::FreeCat;
use serde_json::{json, Value};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side<A, B> {
    A(A),
    B(B),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColimMor<AO, AM, BM> {
    InA(AM),
    InB(BM),
    /// `witness: b -> F(apex)` followed by `β_apex`.
    Mixed { witness: BM, apex: AO },
}

/// The colax colimit of `functor`.
#[derive(Clone)]
pub struct ColaxColimit<A: Category, B: Category> {
    pub functor: Functor<A, B>,
}

impl<A: Category, B: Category> fmt::Debug for ColaxColimit<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ColaxColimit")
    }
}

pub type ColimObj<A, B> = Side<<A as Category>::Obj, <B as Category>::Obj>;
pub type ColimMorOf<A, B> = ColimMor<<A as Category>::Obj, <A as Category>::Mor, <B as Category>::Mor>;

impl<A: Category, B: Category> ColaxColimit<A, B> {
    pub fn a(&self) -> &A {
        &self.functor.source
    }

    pub fn b(&self) -> &B {
        &self.functor.target
    }

    /// `ι_A`.
    pub fn inject_a(&self) -> Functor<A, Self> {
        Functor::new(self.a().clone(), self.clone(), |a| Side::A(a.clone()), |m| ColimMor::InA(m.clone()))
    }

    /// `ι_B`.
    pub fn inject_b(&self) -> Functor<B, Self> {
        Functor::new(self.b().clone(), self.clone(), |b| Side::B(b.clone()), |m| ColimMor::InB(m.clone()))
    }

    /// `β: ι_B∘F ⇒ ι_A`, component `id_{F a};β_a`.
    pub fn beta(&self) -> NatTransform<A, Self> {
        let f = self.functor.clone();
        NatTransform::new(self.functor.then(&self.inject_b()), self.inject_a(), move |a| ColimMor::Mixed {
            witness: f.target.identity(&f.obj(a)),
            apex: a.clone(),
        })
    }

    /// The isomorphism `carrier(b, a) ≅ B(b, F a)`, forward direction.
    pub fn mixed_to_witness(&self, m: &ColimMorOf<A, B>) -> Option<B::Mor> {
        match m {
            ColimMor::Mixed { witness, .. } => Some(witness.clone()),
            _ => None,
        }
    }

    /// Inverse direction of [`Self::mixed_to_witness`].
    pub fn witness_to_mixed(&self, v: &B::Mor, apex: &A::Obj) -> Option<ColimMorOf<A, B>> {
        (self.b().cod(v) == self.functor.obj(apex)).then(|| ColimMor::Mixed {
            witness: v.clone(),
            apex: apex.clone(),
        })
    }
}

impl<A: Category, B: Category> Category for ColaxColimit<A, B> {
    type Obj = ColimObj<A, B>;
    type Mor = ColimMorOf<A, B>;

    fn contains(&self, o: &Self::Obj) -> bool {
        match o {
            Side::A(a) => self.a().contains(a),
            Side::B(b) => self.b().contains(b),
        }
    }

    fn dom(&self, m: &Self::Mor) -> Self::Obj {
        match m {
            ColimMor::InA(f) => Side::A(self.a().dom(f)),
            ColimMor::InB(g) => Side::B(self.b().dom(g)),
            ColimMor::Mixed { witness, .. } => Side::B(self.b().dom(witness)),
        }
    }

    fn cod(&self, m: &Self::Mor) -> Self::Obj {
        match m {
            ColimMor::InA(f) => Side::A(self.a().cod(f)),
            ColimMor::InB(g) => Side::B(self.b().cod(g)),
            ColimMor::Mixed { apex, .. } => Side::A(apex.clone()),
        }
    }

    fn identity(&self, o: &Self::Obj) -> Self::Mor {
        match o {
            Side::A(a) => ColimMor::InA(self.a().identity(a)),
            Side::B(b) => ColimMor::InB(self.b().identity(b)),
        }
    }

    fn compose(&self, first: &Self::Mor, then: &Self::Mor) -> Option<Self::Mor> {
        use ColimMor::*;
        match (first, then) {
            (InA(f), InA(g)) => self.a().compose(f, g).map(InA),
            (InB(f), InB(g)) => self.b().compose(f, g).map(InB),
            (InB(u), Mixed { witness, apex }) => self.b().compose(u, witness).map(|w| Mixed {
                witness: w,
                apex: apex.clone(),
            }),
            (Mixed { witness, apex }, InA(m)) if self.a().dom(m) == *apex => {
                self.b().compose(witness, &self.functor.mor(m)).map(|w| Mixed {
                    witness: w,
                    apex: self.a().cod(m),
                })
            }
            _ => None,
        }
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        match (x, y) {
            (Side::A(a), Side::A(a2)) => self.a().hom(a, a2).into_iter().map(ColimMor::InA).collect(),
            (Side::B(b), Side::B(b2)) => self.b().hom(b, b2).into_iter().map(ColimMor::InB).collect(),
            (Side::B(b), Side::A(a)) => self
                .b()
                .hom(b, &self.functor.obj(a))
                .into_iter()
                .map(|v| ColimMor::Mixed {
                    witness: v,
                    apex: a.clone(),
                })
                .collect(),
            (Side::A(_), Side::B(_)) => vec![],
        }
    }

    fn weight(&self, o: &Self::Obj) -> usize {
        match o {
            Side::A(a) => self.a().weight(a),
            Side::B(b) => self.b().weight(b),
        }
    }

    fn objects_up_to(&self, w: usize) -> Vec<Self::Obj> {
        let mut out: Vec<Self::Obj> = self.a().objects_up_to(w).into_iter().map(Side::A).collect();
        out.extend(self.b().objects_up_to(w).into_iter().map(Side::B));
        out
    }

    fn obj_json(&self, o: &Self::Obj) -> Value {
        match o {
            Side::A(a) => json!({ "A": self.a().obj_json(a) }),
            Side::B(b) => json!({ "B": self.b().obj_json(b) }),
        }
    }

    fn mor_json(&self, m: &Self::Mor) -> Value {
        match m {
            ColimMor::InA(f) => json!({ "A": self.a().mor_json(f) }),
            ColimMor::InB(g) => json!({ "B": self.b().mor_json(g) }),
            ColimMor::Mixed { witness, apex } => {
                json!({ "witness": self.b().mor_json(witness), "beta": self.a().obj_json(apex) })
            }
        }
    }
}

pub fn build_colimit<A: Category, B: Category>(f: &Functor<A, B>) -> ColaxColimit<A, B> {
    ColaxColimit { functor: f.clone() }
}

impl ColaxColimit<FinCat, FinCat> {
    /// The carrier as a finite category table. Objects are named `A.x` / `B.y`;
    /// mixed morphisms `v;beta_a` with `v` named in `B`.
    pub fn to_data(&self) -> FinCatData {
        let objs = self.objects_up_to(1);
        let mut morphisms = vec![];
        let mut gens = vec![];
        for x in &objs {
            for y in &objs {
                for m in self.hom(x, y) {
                    if !self.is_identity(&m) {
                        morphisms.push(MorphismDecl {
                            name: self.mor_name(&m),
                            src: self.obj_name(x),
                            tgt: self.obj_name(y),
                        });
                        gens.push(m);
                    }
                }
            }
        }
        let mut composition = vec![];
        for f in &gens {
            for g in &gens {
                if let Some(h) = self.compose(f, g) {
                    composition.push(CompositionEntry {
                        first: self.mor_name(f),
                        then: self.mor_name(g),
                        equals: self.mor_name(&h),
                    });
                }
            }
        }
        FinCatData {
            objects: objs.iter().map(|o| self.obj_name(o)).collect(),
            morphisms,
            composition,
        }
    }

    pub fn obj_name(&self, o: &Side<usize, usize>) -> String {
        match o {
            Side::A(a) => format!("A.{}", self.a().object_name(*a)),
            Side::B(b) => format!("B.{}", self.b().object_name(*b)),
        }
    }

    pub fn mor_name(&self, m: &ColimMor<usize, FinMor, FinMor>) -> String {
        if self.is_identity(m) {
            return format!("id_{}", self.obj_name(&self.dom(m)));
        }
        match m {
            ColimMor::InA(f) => format!("A.{}", self.a().mor_name(*f)),
            ColimMor::InB(g) => format!("B.{}", self.b().mor_name(*g)),
            ColimMor::Mixed { witness, apex } => {
                format!("B.{};beta_{}", self.b().mor_name(*witness), self.a().object_name(*apex))
            }
        }
    }
}

/// A colax cocone `(f, g, φ: g∘F ⇒ f)` under `F: A -> B` into `D`.
#[derive(Clone)]
pub struct ColaxCocone<A: Category, B: Category, D: Category> {
    pub f: Functor<A, D>,
    pub g: Functor<B, D>,
    pub phi: NatTransform<A, D>,
}

impl<A: Category, B: Category, D: Category> ColaxCocone<A, B, D> {
    pub fn new(f: Functor<A, D>, g: Functor<B, D>, phi: impl Fn(&A::Obj) -> D::Mor + Send + Sync + 'static, over: &Functor<A, B>) -> Self {
        let phi = NatTransform::new(over.then(&g), f.clone(), phi);
        ColaxCocone { f, g, phi }
    }
}

/// The universal cocone `(ι_A, ι_B, β)`.
pub fn universal_cocone<A: Category, B: Category>(col: &ColaxColimit<A, B>) -> ColaxCocone<A, B, ColaxColimit<A, B>> {
    ColaxCocone {
        f: col.inject_a(),
        g: col.inject_b(),
        phi: col.beta(),
    }
}

pub fn validate_cocone<A: Category, B: Category, D: Category>(
    col: &ColaxColimit<A, B>,
    cc: &ColaxCocone<A, B, D>,
    sweep: Sweep,
) -> LawReport {
    let mut r = LawReport::new();
    let da = SweepDomain::of(col.a(), sweep);
    let db = SweepDomain::of(col.b(), sweep);
    r.absorb("f", validate_functor_on(&cc.f, &da));
    r.absorb("g", validate_functor_on(&cc.g, &db));
    let d = &cc.f.target;
    for a in &da.objects {
        let c = cc.phi.at(a);
        let ok = d.dom(&c) == cc.g.obj(&col.functor.obj(a)) && d.cod(&c) == cc.f.obj(a);
        if !ok {
            r.structural(format!("phi at {} has the wrong boundary", col.a().show_obj(a)));
        }
    }
    if r.structural.is_empty() {
        r.absorb("phi", validate_nat_transform_on(&cc.phi, &da));
    }
    r
}

/// The mediating functor without validating the cocone.
pub fn mediate_unchecked<A: Category, B: Category, D: Category>(
    col: &ColaxColimit<A, B>,
    cc: &ColaxCocone<A, B, D>,
) -> Functor<ColaxColimit<A, B>, D> {
    let (f1, g1) = (cc.f.clone(), cc.g.clone());
    let cc2 = cc.clone();
    Functor::new(
        col.clone(),
        cc.f.target.clone(),
        move |o| match o {
            Side::A(a) => f1.obj(a),
            Side::B(b) => g1.obj(b),
        },
        move |m| match m {
            ColimMor::InA(x) => cc2.f.mor(x),
            ColimMor::InB(y) => cc2.g.mor(y),
            ColimMor::Mixed { witness, apex } => cc2.f.target.then(&cc2.g.mor(witness), &cc2.phi.at(apex)),
        },
    )
}

/// The unique `r` with `r∘ι_A = f`, `r∘ι_B = g` and `r·β = φ`.
/// Rejects cocones whose `φ` is not natural or has wrong boundaries.
pub fn mediate_cocone<A: Category, B: Category, D: Category>(
    col: &ColaxColimit<A, B>,
    cc: &ColaxCocone<A, B, D>,
    sweep: Sweep,
) -> Result<Functor<ColaxColimit<A, B>, D>> {
    let report = validate_cocone(col, cc, sweep);
    if !report.passed() {
        return Err(Error::from_report("cocone", &report));
    }
    Ok(mediate_unchecked(col, cc))
}

/// The three defining equations of a mediating functor, plus functoriality.
pub fn check_mediator<A: Category, B: Category, D: Category>(
    col: &ColaxColimit<A, B>,
    cc: &ColaxCocone<A, B, D>,
    r: &Functor<ColaxColimit<A, B>, D>,
    sweep: Sweep,
) -> LawReport {
    let mut rep = LawReport::new();
    let dc = SweepDomain::of(col, sweep);
    let da = SweepDomain::of(col.a(), sweep);
    let db = SweepDomain::of(col.b(), sweep);
    rep.absorb("r", validate_functor_on(r, &dc));
    functors_agree("r.iota_A=f", &col.inject_a().then(r), &cc.f, &da, &mut rep);
    functors_agree("r.iota_B=g", &col.inject_b().then(r), &cc.g, &db, &mut rep);
    let rb = col.beta().before(r);
    for a in &da.objects {
        rep.check("r.beta=phi", rb.at(a) == cc.phi.at(a), || col.a().show_obj(a));
    }
    rep
}

/// The unique `τ: r ⇒ r'` with `τ·ι_A = ρ` and `τ·ι_B = σ`. The pair must
/// satisfy `φ_a;ρ_a = σ_{F a};φ'_a` for every `a`.
pub fn mediate_2cell<A: Category, B: Category, D: Category>(
    col: &ColaxColimit<A, B>,
    cc: &ColaxCocone<A, B, D>,
    cc2: &ColaxCocone<A, B, D>,
    rho: &NatTransform<A, D>,
    sigma: &NatTransform<B, D>,
    sweep: Sweep,
) -> Result<NatTransform<ColaxColimit<A, B>, D>> {
    let d = cc.f.target.clone();
    let mut report = LawReport::new();
    for a in col.a().objects_up_to(sweep.max_weight) {
        let lhs = d.compose(&cc.phi.at(&a), &rho.at(&a));
        let rhs = d.compose(&sigma.at(&col.functor.obj(&a)), &cc2.phi.at(&a));
        report.check("compatibility", lhs.is_some() && lhs == rhs, || {
            format!("phi;rho != sigma F;phi' at {}", col.a().show_obj(&a))
        });
    }
    if !report.passed() {
        return Err(Error::from_report("2-cell", &report));
    }
    let r = mediate_unchecked(col, cc);
    let r2 = mediate_unchecked(col, cc2);
    let (rho, sigma) = (rho.clone(), sigma.clone());
    Ok(NatTransform::new(r, r2, move |o| match o {
        Side::A(a) => rho.at(a),
        Side::B(b) => sigma.at(b),
    }))
}

/// `C⁺`: the colax colimit of the unit `X -> C(X)`, made a monad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CPlus;

pub type CPlusCat<X> = ColaxColimit<X, FreeCat<X>>;

impl CPlus {
    /// `h: C⁺X -> C X`, mediating the identity cocone `(η_C, id, id)`.
    pub fn ret<X: Category>(&self, x: &X) -> Functor<CPlusCat<X>, FreeCat<X>> {
        let col = self.on(x);
        let cx = FreeCat::cartesian(x.clone());
        let eta = cx.unit();
        let cc = ColaxCocone {
            f: eta.clone(),
            g: Functor::identity(&cx),
            phi: NatTransform::identity(&eta),
        };
        mediate_unchecked(&col, &cc)
    }

    /// `z = ι_B∘μ_C∘C(h): C(C⁺X) -> C⁺X`.
    pub fn cartesian_structure<X: Category>(&self, x: &X) -> Functor<FreeCat<CPlusCat<X>>, CPlusCat<X>> {
        let col = self.on(x);
        let h = self.ret(x);
        CARTESIAN.lift(&h).then(&CARTESIAN.mult(x)).then(&col.inject_b())
    }

    /// `α: ι_B∘h ⇒ id`, equal to `β` on the `A` side and identity on the `B` side.
    pub fn alpha<X: Category>(&self, x: &X) -> NatTransform<CPlusCat<X>, CPlusCat<X>> {
        let col = self.on(x);
        let e = self.ret(x).then(&col.inject_b());
        let beta = col.beta();
        let c2 = col.clone();
        NatTransform::new(e, Functor::identity(&col), move |o| match o {
            Side::A(a) => beta.at(a),
            Side::B(_) => c2.identity(o),
        })
    }
}

impl Monad for CPlus {
    type On<X: Category> = CPlusCat<X>;

    fn name(&self) -> String {
        "Cplus".into()
    }

    fn on<X: Category>(&self, x: &X) -> CPlusCat<X> {
        build_colimit(&FreeCat::cartesian(x.clone()).unit())
    }

    fn unit<X: Category>(&self, x: &X) -> Functor<X, CPlusCat<X>> {
        self.on(x).inject_a()
    }

    /// Mediates the cocone `(id, z, α)` under `C⁺X -> C(C⁺X)`.
    fn mult<X: Category>(&self, x: &X) -> Functor<CPlusCat<CPlusCat<X>>, CPlusCat<X>> {
        let inner = self.on(x);
        let outer = self.on(&inner);
        let cc = ColaxCocone {
            f: Functor::identity(&inner),
            g: self.cartesian_structure(x),
            phi: self.alpha(x),
        };
        let cc = ColaxCocone {
            phi: NatTransform::new(outer.functor.then(&cc.g), cc.f.clone(), {
                let a = cc.phi.clone();
                move |o| a.at(o)
            }),
            ..cc
        };
        mediate_unchecked(&outer, &cc)
    }

    fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<CPlusCat<A>, CPlusCat<B>> {
        let cf = CARTESIAN.lift(f);
        let (f1, f2, cf1, cf2) = (f.clone(), f.clone(), cf.clone(), cf);
        Functor::new(
            self.on(&f.source),
            self.on(&f.target),
            move |o| match o {
                Side::A(a) => Side::A(f1.obj(a)),
                Side::B(s) => Side::B(cf1.obj(s)),
            },
            move |m| match m {
                ColimMor::InA(x) => ColimMor::InA(f2.mor(x)),
                ColimMor::InB(y) => ColimMor::InB(cf2.mor(y)),
                ColimMor::Mixed { witness, apex } => ColimMor::Mixed {
                    witness: cf2.mor(witness),
                    apex: f2.obj(apex),
                },
            },
        )
    }

    fn lift_cell<A: Category, B: Category>(&self, t: &NatTransform<A, B>) -> NatTransform<CPlusCat<A>, CPlusCat<B>> {
        let ct = CARTESIAN.lift_cell(t);
        let t1 = t.clone();
        NatTransform::new(self.lift(&t.source), self.lift(&t.target), move |o| match o {
            Side::A(a) => ColimMor::InA(t1.at(a)),
            Side::B(s) => ColimMor::InB(ct.at(s)),
        })
    }
}
