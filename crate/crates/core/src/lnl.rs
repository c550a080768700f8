//! The linear-non-linear construction `Q`.
//!
//! Objects of `Q(A)` are sequences of base objects each tagged linear or
//! non-linear. A morphism is a reindexing `φ: [m] -> [n]` (target position to
//! source position) plus base components, subject to the linearity condition:
//! every target position reading a linear source is itself linear, and every
//! linear source position is read exactly once.
//!
//! Alongside the category this module builds the comparison maps that exhibit
//! `Q(A)` as a colax colimit of `λ: S(A) -> C(A)`:
//!
//! | map | direction | action |
//! |-----|-----------|--------|
//! | `κ` | `S A -> Q A` | tag every entry linear |
//! | `c` | `C A -> Q A` | tag every entry non-linear |
//! | `h` | `Q A -> C A` | forget tags |
//! | `β` | `c∘λ ⇒ κ` | identity reindex, identity components |
//! | `α` | `e ⇒ id`, `e = c∘h` | identity reindex, identity components |

use crate::category::{
    cell_is_identity, cells_agree, functors_agree, validate_functor_on, validate_nat_transform_on,
    Category, Functor, NatTransform, Sweep, SweepDomain,
};
use crate::report::LawReport;
use crate::seq::{flatten, FreeCat, FreeMor, SeqMor};
use crate::util;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Lin,
    NonLin,
}

impl Tag {
    /// Linear exactly when both are linear.
    pub fn and(self, other: Tag) -> Tag {
        if self == Tag::Lin && other == Tag::Lin {
            Tag::Lin
        } else {
            Tag::NonLin
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Tag::Lin => "L",
            Tag::NonLin => "N",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tagged<O> {
    pub obj: O,
    pub tag: Tag,
}

impl<O> Tagged<O> {
    pub fn new(obj: O, tag: Tag) -> Self {
        Tagged { obj, tag }
    }
    pub fn lin(obj: O) -> Self {
        Tagged::new(obj, Tag::Lin)
    }
    pub fn nonlin(obj: O) -> Self {
        Tagged::new(obj, Tag::NonLin)
    }
}

pub type LnlObj<C> = Vec<Tagged<<C as Category>::Obj>>;
pub type LnlMor<C> = SeqMor<Tagged<<C as Category>::Obj>, <C as Category>::Mor>;

/// The linearity condition on a reindexing.
pub fn admissible<O>(src: &[Tagged<O>], tgt: &[Tagged<O>], reindex: &[usize]) -> bool {
    let mut hits = vec![0usize; src.len()];
    for (j, &k) in reindex.iter().enumerate() {
        if k >= src.len() {
            return false;
        }
        if src[k].tag == Tag::Lin {
            if tgt[j].tag != Tag::Lin {
                return false;
            }
            hits[k] += 1;
        }
    }
    src.iter().zip(&hits).all(|(e, &h)| e.tag == Tag::NonLin || h == 1)
}

/// `Q(base)`.
#[derive(Clone, Debug)]
pub struct LnlCat<C: Category> {
    pub base: C,
}

impl<C: Category> LnlCat<C> {
    pub fn new(base: C) -> Self {
        LnlCat { base }
    }

    pub fn symmetric(&self) -> FreeCat<C> {
        FreeCat::symmetric(self.base.clone())
    }

    pub fn cartesian(&self) -> FreeCat<C> {
        FreeCat::cartesian(self.base.clone())
    }

    pub fn is_morphism(&self, m: &LnlMor<C>) -> bool {
        m.reindex.len() == m.tgt.len()
            && m.comps.len() == m.tgt.len()
            && admissible(&m.src, &m.tgt, &m.reindex)
            && m.comps.iter().enumerate().all(|(j, c)| {
                self.base.dom(c) == m.src[m.reindex[j]].obj && self.base.cod(c) == m.tgt[j].obj
            })
    }

    /// `a ↦ <a^Lin>`.
    pub fn unit(&self) -> Functor<C, LnlCat<C>> {
        let b = self.base.clone();
        Functor::new(
            self.base.clone(),
            self.clone(),
            |a| vec![Tagged::lin(a.clone())],
            move |m| SeqMor {
                src: vec![Tagged::lin(b.dom(m))],
                tgt: vec![Tagged::lin(b.cod(m))],
                reindex: vec![0],
                comps: vec![m.clone()],
            },
        )
    }

    pub fn lift<B: Category>(&self, f: &Functor<C, B>) -> Functor<LnlCat<C>, LnlCat<B>> {
        let (f1, f2) = (f.clone(), f.clone());
        let retag = move |f: &Functor<C, B>, s: &[Tagged<C::Obj>]| -> Vec<Tagged<B::Obj>> {
            s.iter().map(|e| Tagged::new(f.obj(&e.obj), e.tag)).collect()
        };
        Functor::new(
            self.clone(),
            LnlCat::new(f.target.clone()),
            move |a: &LnlObj<C>| retag(&f1, a),
            move |m: &LnlMor<C>| SeqMor {
                src: retag(&f2, &m.src),
                tgt: retag(&f2, &m.tgt),
                reindex: m.reindex.clone(),
                comps: m.comps.iter().map(|c| f2.mor(c)).collect(),
            },
        )
    }

    pub fn lift_cell<B: Category>(&self, t: &NatTransform<C, B>) -> NatTransform<LnlCat<C>, LnlCat<B>> {
        let s = self.lift(&t.source);
        let g = self.lift(&t.target);
        let (t1, s1, g1) = (t.clone(), s.clone(), g.clone());
        NatTransform::new(s, g, move |a: &LnlObj<C>| {
            SeqMor::pointwise(s1.obj(a), g1.obj(a), a.iter().map(|x| t1.at(&x.obj)).collect())
        })
    }

    fn tag_all(s: &[C::Obj], tag: Tag) -> LnlObj<C> {
        s.iter().map(|x| Tagged::new(x.clone(), tag)).collect()
    }

    fn tagging(&self, from: FreeCat<C>, tag: Tag) -> Functor<FreeCat<C>, LnlCat<C>> {
        Functor::new(
            from,
            self.clone(),
            move |a| Self::tag_all(a, tag),
            move |m: &FreeMor<C>| SeqMor {
                src: Self::tag_all(&m.src, tag),
                tgt: Self::tag_all(&m.tgt, tag),
                reindex: m.reindex.clone(),
                comps: m.comps.clone(),
            },
        )
    }

    /// `κ: S A -> Q A`.
    pub fn kappa(&self) -> Functor<FreeCat<C>, LnlCat<C>> {
        self.tagging(self.symmetric(), Tag::Lin)
    }

    /// `c: C A -> Q A`.
    pub fn ccol(&self) -> Functor<FreeCat<C>, LnlCat<C>> {
        self.tagging(self.cartesian(), Tag::NonLin)
    }

    /// `h: Q A -> C A`, forgetting tags.
    pub fn ret(&self) -> Functor<LnlCat<C>, FreeCat<C>> {
        let untag = |s: &[Tagged<C::Obj>]| s.iter().map(|e| e.obj.clone()).collect::<Vec<_>>();
        Functor::new(
            self.clone(),
            self.cartesian(),
            move |a| untag(a),
            move |m: &LnlMor<C>| SeqMor {
                src: untag(&m.src),
                tgt: untag(&m.tgt),
                reindex: m.reindex.clone(),
                comps: m.comps.clone(),
            },
        )
    }

    /// `λ: S A -> C A`.
    pub fn lambda(&self) -> Functor<FreeCat<C>, FreeCat<C>> {
        self.symmetric().include_in_cartesian()
    }

    /// `e = c∘h`: retag everything non-linear.
    pub fn comonad(&self) -> Functor<LnlCat<C>, LnlCat<C>> {
        self.ret().then(&self.ccol())
    }

    /// `β: c∘λ ⇒ κ`, component `<a_i^NonLin> -> <a_i^Lin>`.
    pub fn beta(&self) -> NatTransform<FreeCat<C>, LnlCat<C>> {
        let b = self.base.clone();
        NatTransform::new(self.lambda().then(&self.ccol()), self.kappa(), move |s| {
            SeqMor::pointwise(
                Self::tag_all(s, Tag::NonLin),
                Self::tag_all(s, Tag::Lin),
                s.iter().map(|x| b.identity(x)).collect(),
            )
        })
    }

    /// `α: e ⇒ id`, component `e(x) -> x` with identity reindex and components.
    pub fn alpha(&self) -> NatTransform<LnlCat<C>, LnlCat<C>> {
        let b = self.base.clone();
        NatTransform::new(self.comonad(), Functor::identity(self), move |x: &LnlObj<C>| {
            SeqMor::pointwise(
                x.iter().map(|e| Tagged::nonlin(e.obj.clone())).collect(),
                x.clone(),
                x.iter().map(|e| b.identity(&e.obj)).collect(),
            )
        })
    }

    /// Concatenation keeping tags: the strict `S`-algebra structure of `Q A`.
    pub fn concat_structure(&self) -> Functor<FreeCat<LnlCat<C>>, LnlCat<C>> {
        Functor::new(
            FreeCat::symmetric(self.clone()),
            self.clone(),
            |a: &Vec<LnlObj<C>>| a.concat(),
            |m: &SeqMor<LnlObj<C>, LnlMor<C>>| {
                let (reindex, comps) = flatten(m, |b| b);
                SeqMor {
                    src: m.src.concat(),
                    tgt: m.tgt.concat(),
                    reindex,
                    comps,
                }
            },
        )
    }

    /// `c∘μ_C∘C(h)`: the left-semi `C`-algebra structure of `Q A`, with counit `α`.
    pub fn cartesian_structure(&self) -> Functor<FreeCat<LnlCat<C>>, LnlCat<C>> {
        let cq = FreeCat::cartesian(self.clone());
        let ch = cq.lift(&self.ret());
        let mu = FreeCat::cartesian(self.cartesian()).mult();
        ch.then(&mu).then(&self.ccol())
    }

    /// `c∘h∘(concatenation)`: the first induced left-semi `S`-structure.
    pub fn induced_symmetric_structure(&self) -> Functor<FreeCat<LnlCat<C>>, LnlCat<C>> {
        self.concat_structure().then(&self.comonad())
    }

    /// `c∘μ_C∘C(h)∘λ`: the second induced left-semi `S`-structure.
    pub fn restricted_cartesian_structure(&self) -> Functor<FreeCat<LnlCat<C>>, LnlCat<C>> {
        FreeCat::symmetric(self.clone())
            .include_in_cartesian()
            .then(&self.cartesian_structure())
    }
}

impl<C: Category> LnlCat<LnlCat<C>> {
    /// Multiplication: concatenate, an entry staying linear just when both its
    /// own tag and its block's tag are linear.
    pub fn mult(&self) -> Functor<LnlCat<LnlCat<C>>, LnlCat<C>> {
        fn flat<O: Clone>(s: &[Tagged<Vec<Tagged<O>>>]) -> Vec<Tagged<O>> {
            s.iter()
                .flat_map(|blk| {
                    blk.obj
                        .iter()
                        .map(move |e| Tagged::new(e.obj.clone(), e.tag.and(blk.tag)))
                })
                .collect()
        }
        Functor::new(
            self.clone(),
            self.base.clone(),
            |a: &LnlObj<LnlCat<C>>| flat(a),
            |m: &LnlMor<LnlCat<C>>| {
                let (reindex, comps) = flatten(m, |b: &Tagged<LnlObj<C>>| &b.obj);
                SeqMor {
                    src: flat(&m.src),
                    tgt: flat(&m.tgt),
                    reindex,
                    comps,
                }
            },
        )
    }
}

impl<C: Category> Category for LnlCat<C> {
    type Obj = LnlObj<C>;
    type Mor = LnlMor<C>;

    fn contains(&self, o: &Self::Obj) -> bool {
        o.iter().all(|x| self.base.contains(&x.obj))
    }

    fn dom(&self, m: &Self::Mor) -> Self::Obj {
        m.src.clone()
    }

    fn cod(&self, m: &Self::Mor) -> Self::Obj {
        m.tgt.clone()
    }

    fn identity(&self, o: &Self::Obj) -> Self::Mor {
        SeqMor::pointwise(o.clone(), o.clone(), o.iter().map(|x| self.base.identity(&x.obj)).collect())
    }

    fn compose(&self, first: &Self::Mor, then: &Self::Mor) -> Option<Self::Mor> {
        let out = first.then_with(then, |a, b| self.base.compose(a, b))?;
        debug_assert!(admissible(&out.src, &out.tgt, &out.reindex));
        Some(out)
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor> {
        let mut out = vec![];
        for phi in util::functions(b.len(), a.len()) {
            if !admissible(a, b, &phi) {
                continue;
            }
            let choices: Vec<Vec<C::Mor>> =
                phi.iter().zip(b).map(|(&k, y)| self.base.hom(&a[k].obj, &y.obj)).collect();
            for comps in util::product(&choices) {
                out.push(SeqMor {
                    src: a.clone(),
                    tgt: b.clone(),
                    reindex: phi.clone(),
                    comps,
                });
            }
        }
        out
    }

    fn weight(&self, o: &Self::Obj) -> usize {
        o.iter().map(|x| self.base.weight(&x.obj).max(1)).sum()
    }

    fn objects_up_to(&self, w: usize) -> Vec<Self::Obj> {
        let mut items = vec![];
        for x in self.base.objects_up_to(w) {
            let wx = self.base.weight(&x).max(1);
            for tag in [Tag::Lin, Tag::NonLin] {
                items.push((Tagged::new(x.clone(), tag), wx));
            }
        }
        util::weighted_sequences(&items, w)
    }

    fn obj_json(&self, o: &Self::Obj) -> Value {
        Value::Array(
            o.iter()
                .map(|e| json!([self.base.obj_json(&e.obj), e.tag]))
                .collect(),
        )
    }

    fn mor_json(&self, m: &Self::Mor) -> Value {
        json!({
            "reindex": m.reindex,
            "components": m.comps.iter().map(|c| self.base.mor_json(c)).collect::<Vec<_>>(),
            "source_tags": m.src.iter().map(|e| e.tag).collect::<Vec<_>>(),
            "target_tags": m.tgt.iter().map(|e| e.tag).collect::<Vec<_>>(),
        })
    }
}

/// The comparison maps of `Q(base)` bundled together.
#[derive(Clone)]
pub struct QStructureMaps<C: Category> {
    pub q: LnlCat<C>,
    pub kappa: Functor<FreeCat<C>, LnlCat<C>>,
    pub ccol: Functor<FreeCat<C>, LnlCat<C>>,
    pub ret: Functor<LnlCat<C>, FreeCat<C>>,
    pub lambda: Functor<FreeCat<C>, FreeCat<C>>,
    pub comonad: Functor<LnlCat<C>, LnlCat<C>>,
    pub beta: NatTransform<FreeCat<C>, LnlCat<C>>,
    pub alpha: NatTransform<LnlCat<C>, LnlCat<C>>,
}

pub fn build_structure_maps<C: Category>(base: &C) -> QStructureMaps<C> {
    let q = LnlCat::new(base.clone());
    QStructureMaps {
        kappa: q.kappa(),
        ccol: q.ccol(),
        ret: q.ret(),
        lambda: q.lambda(),
        comonad: q.comonad(),
        beta: q.beta(),
        alpha: q.alpha(),
        q,
    }
}

/// The equations relating `κ, c, h, β, α, e`, checked on all objects of weight
/// at most `max_len` and all morphisms between them.
pub fn check_colimit_equations<C: Category>(base: &C, max_len: usize) -> LawReport {
    let m = build_structure_maps(base);
    let sweep = Sweep::new(max_len);
    let mut r = LawReport::new();
    let s_dom = SweepDomain::of(&m.q.symmetric(), sweep);
    let c_dom = SweepDomain::of(&m.q.cartesian(), sweep);
    let q_dom = SweepDomain::of(&m.q, sweep);

    for (name, f) in [("kappa", &m.kappa), ("lambda-then-c", &m.lambda.then(&m.ccol))] {
        r.absorb(&format!("functor/{name}"), validate_functor_on(f, &s_dom));
    }
    r.absorb("functor/c", validate_functor_on(&m.ccol, &c_dom));
    r.absorb("functor/h", validate_functor_on(&m.ret, &q_dom));
    r.absorb("functor/e", validate_functor_on(&m.comonad, &q_dom));

    functors_agree("h.kappa=lambda", &m.kappa.then(&m.ret), &m.lambda, &s_dom, &mut r);
    functors_agree("h.c=id", &m.ccol.then(&m.ret), &Functor::identity(&m.q.cartesian()), &c_dom, &mut r);
    cell_is_identity("h.beta=id", &m.beta.before(&m.ret), &s_dom.objects, &mut r);
    cell_is_identity("alpha.c=id", &m.alpha.after(&m.ccol), &c_dom.objects, &mut r);
    cells_agree("alpha.kappa=beta", &m.alpha.after(&m.kappa), &m.beta, &s_dom.objects, &mut r);
    cell_is_identity("h.alpha=id", &m.alpha.before(&m.ret), &q_dom.objects, &mut r);
    functors_agree("e=ee", &m.comonad, &m.comonad.then(&m.comonad), &q_dom, &mut r);
    cell_is_identity("alpha.e=id", &m.alpha.after(&m.comonad), &q_dom.objects, &mut r);
    cell_is_identity("e.alpha=id", &m.alpha.before(&m.comonad), &q_dom.objects, &mut r);
    r.absorb("naturality/alpha", validate_nat_transform_on(&m.alpha, &q_dom));
    r.absorb("naturality/beta", validate_nat_transform_on(&m.beta, &s_dom));

    // α and e are compatible with the S-algebra structure (concatenation).
    let sq = FreeCat::symmetric(m.q.clone());
    let sq_dom = SweepDomain::of(&sq, sweep);
    let conc = m.q.concat_structure();
    for blocks in &sq_dom.objects {
        let whole = conc.obj(blocks);
        let parts: Vec<_> = blocks.iter().map(|b| m.alpha.at(b)).collect();
        r.check("alpha-is-S-cell", m.alpha.at(&whole) == SeqMor::concat(&parts), || {
            sq.show_obj(blocks)
        });
        let e_parts: Vec<_> = blocks.iter().map(|b| m.comonad.obj(b)).collect();
        r.check("e-is-S-map", m.comonad.obj(&whole) == conc.obj(&e_parts), || sq.show_obj(blocks));
    }
    functors_agree(
        "induced-S-structures-equal",
        &m.q.induced_symmetric_structure(),
        &m.q.restricted_cartesian_structure(),
        &sq_dom,
        &mut r,
    );
    r.truncated |= s_dom.truncated || c_dom.truncated || q_dom.truncated || sq_dom.truncated;
    r
}
