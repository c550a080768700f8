//! Structure objects and their equivalence with `Q`-algebras.
//!
//! A structure object is a strict symmetric monoidal category `(X, ⊗, I, σ)`
//! with a strictly idempotent monoidal comonad `(f, ε)`, plus diagonals
//! `δ_x: f x -> f(x⊗x)` and deletions `t_x: f x -> I`. From these we derive
//! `w: S X -> X`, `z: C X -> X` and the evaluator `x: Q X -> X`.

use crate::category::{
    functors_agree, validate_functor_on, validate_nat_transform_on, Category, Functor, NatTransform, Sweep,
    SweepDomain,
};
use crate::error::{Error, Result};
use crate::fincat::{load_json, CatRef, FinCat, FinMor};
use crate::lnl::{LnlCat, LnlMor, LnlObj, Tag, Tagged};
use crate::monad::{Lnl, Monad, CARTESIAN, SYMMETRIC};
use crate::report::LawReport;
use crate::semialg::{check_left_semi_algebra, check_strict_algebra, check_strict_lsa_map, LeftSemiAlgebra};
use crate::seq::{FreeCat, FreeMor, SeqMor};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

type ObjBin<X> = Arc<dyn Fn(&<X as Category>::Obj, &<X as Category>::Obj) -> <X as Category>::Obj + Send + Sync>;
type MorBin<X> = Arc<dyn Fn(&<X as Category>::Mor, &<X as Category>::Mor) -> <X as Category>::Mor + Send + Sync>;
type PairComp<X> = Arc<dyn Fn(&<X as Category>::Obj, &<X as Category>::Obj) -> <X as Category>::Mor + Send + Sync>;
type Comp<X> = Arc<dyn Fn(&<X as Category>::Obj) -> <X as Category>::Mor + Send + Sync>;

/// An algebra for the linear-non-linear monad, given by its evaluator.
pub type QAlgebra<X> = LeftSemiAlgebra<Lnl, X>;

#[derive(Clone)]
pub struct StructureObject<X: Category> {
    pub carrier: X,
    pub tensor_obj: ObjBin<X>,
    pub tensor_mor: MorBin<X>,
    pub unit: X::Obj,
    /// `σ_{x,y}: x⊗y -> y⊗x`.
    pub symmetry: PairComp<X>,
    pub deflation: Functor<X, X>,
    /// `ε_x: f x -> x`.
    pub eps: Comp<X>,
    /// `δ_x: f x -> f(x⊗x)`.
    pub diagonal: Comp<X>,
    /// `t_x: f x -> I`.
    pub deletion: Comp<X>,
}

impl<X: Category> StructureObject<X> {
    fn x(&self) -> &X {
        &self.carrier
    }

    pub fn tensor(&self, a: &X::Obj, b: &X::Obj) -> X::Obj {
        (self.tensor_obj)(a, b)
    }

    pub fn tensor_objs(&self, xs: &[X::Obj]) -> X::Obj {
        match xs.split_first() {
            None => self.unit.clone(),
            Some((h, rest)) => rest.iter().fold(h.clone(), |acc, x| (self.tensor_obj)(&acc, x)),
        }
    }

    pub fn tensor_mors(&self, ms: &[X::Mor]) -> X::Mor {
        match ms.split_first() {
            None => self.x().identity(&self.unit),
            Some((h, rest)) => rest.iter().fold(h.clone(), |acc, m| (self.tensor_mor)(&acc, m)),
        }
    }

    fn chain(&self, ms: &[X::Mor]) -> Option<X::Mor> {
        let (h, rest) = ms.split_first()?;
        rest.iter().try_fold(h.clone(), |acc, m| self.x().compose(&acc, m))
    }

    fn f_obj(&self, o: &X::Obj) -> X::Obj {
        self.deflation.obj(o)
    }

    fn f_mor(&self, m: &X::Mor) -> X::Mor {
        self.deflation.mor(m)
    }

    /// `⊗objs -> ⊗_j objs[reindex[j]]`, built from adjacent symmetries.
    pub fn permute(&self, objs: &[X::Obj], reindex: &[usize]) -> Option<X::Mor> {
        let n = objs.len();
        if reindex.len() != n {
            return None;
        }
        let mut cur: Vec<usize> = (0..n).collect();
        let mut steps = vec![self.x().identity(&self.tensor_objs(objs))];
        for j in 0..n {
            let k = j + cur[j..].iter().position(|&c| c == reindex[j])?;
            for p in (j..k).rev() {
                let mut parts = Vec::with_capacity(n - 1);
                for q in 0..n {
                    if q == p {
                        parts.push((self.symmetry)(&objs[cur[p]], &objs[cur[p + 1]]));
                    } else if q != p + 1 {
                        parts.push(self.x().identity(&objs[cur[q]]));
                    }
                }
                steps.push(self.tensor_mors(&parts));
                cur.swap(p, p + 1);
            }
        }
        self.chain(&steps)
    }

    /// `f a -> f(a^{⊗k})` from diagonals and deletions. `right_nested` picks
    /// which end new copies are split off at.
    fn copies(&self, a: &X::Obj, k: usize, right_nested: bool) -> Option<X::Mor> {
        let fa = self.f_obj(a);
        match k {
            0 => Some((self.deletion)(a)),
            1 => Some(self.x().identity(&fa)),
            _ => {
                let mut m = (self.diagonal)(a);
                for r in 3..=k {
                    let mut parts = vec![self.x().identity(&fa); r - 2];
                    if right_nested {
                        parts.push((self.diagonal)(a));
                    } else {
                        parts.insert(0, (self.diagonal)(a));
                    }
                    m = self.x().compose(&m, &self.tensor_mors(&parts))?;
                }
                Some(m)
            }
        }
    }

    pub fn w_obj(&self, s: &[X::Obj]) -> X::Obj {
        self.tensor_objs(s)
    }

    pub fn w_mor(&self, m: &FreeMor<X>) -> Option<X::Mor> {
        self.chain(&[self.permute(&m.src, &m.reindex)?, self.tensor_mors(&m.comps)])
    }

    pub fn z_obj(&self, s: &[X::Obj]) -> X::Obj {
        self.f_obj(&self.tensor_objs(s))
    }

    /// `z` on a reindexing morphism: copy or delete each source entry, permute
    /// the copies into target order, then apply the components, all under `f`.
    pub fn z_mor(&self, m: &FreeMor<X>, right_nested: bool) -> Option<X::Mor> {
        let n = m.src.len();
        let mut counts = vec![0usize; n];
        for &i in &m.reindex {
            counts[i] += 1;
        }
        let dups = (0..n)
            .map(|i| self.copies(&m.src[i], counts[i], right_nested))
            .collect::<Option<Vec<_>>>()?;
        let mut offsets = vec![0; n];
        let mut grouped = vec![];
        for i in 0..n {
            offsets[i] = grouped.len();
            grouped.extend(std::iter::repeat_n(m.src[i].clone(), counts[i]));
        }
        let mut seen = vec![0; n];
        let perm: Vec<usize> = m
            .reindex
            .iter()
            .map(|&i| {
                seen[i] += 1;
                offsets[i] + seen[i] - 1
            })
            .collect();
        let p = self.f_mor(&self.permute(&grouped, &perm)?);
        let c = self.f_mor(&self.tensor_mors(&m.comps));
        self.chain(&[self.tensor_mors(&dups), p, c])
    }

    fn g_obj(&self, e: &Tagged<X::Obj>) -> X::Obj {
        match e.tag {
            Tag::Lin => e.obj.clone(),
            Tag::NonLin => self.f_obj(&e.obj),
        }
    }

    pub fn x_obj(&self, s: &LnlObj<X>) -> X::Obj {
        self.tensor_objs(&s.iter().map(|e| self.g_obj(e)).collect::<Vec<_>>())
    }

    /// The evaluator on a tagged morphism: gather the linear sources, evaluate
    /// a linear block by `w` and a non-linear block by `z`, retag with `ε`,
    /// permute into target order and apply the components.
    pub fn x_mor(&self, m: &LnlMor<X>, lin_first: bool) -> Option<X::Mor> {
        let x = self.x();
        let lsrc: Vec<usize> = (0..m.src.len()).filter(|&i| m.src[i].tag == Tag::Lin).collect();
        let nsrc: Vec<usize> = (0..m.src.len()).filter(|&i| m.src[i].tag == Tag::NonLin).collect();
        let src_lin = |j: usize| m.src[m.reindex[j]].tag == Tag::Lin;
        let jl1: Vec<usize> = (0..m.tgt.len()).filter(|&j| src_lin(j)).collect();
        let jl2: Vec<usize> = (0..m.tgt.len())
            .filter(|&j| m.tgt[j].tag == Tag::Lin && !src_lin(j))
            .collect();
        let jn: Vec<usize> = (0..m.tgt.len()).filter(|&j| m.tgt[j].tag == Tag::NonLin).collect();
        let pos = |list: &[usize], i: usize| list.iter().position(|&k| k == i);
        let a = |j: usize| m.src[m.reindex[j]].obj.clone();

        let gs: Vec<X::Obj> = m.src.iter().map(|e| self.g_obj(e)).collect();
        let order1: Vec<usize> = if lin_first {
            lsrc.iter().chain(&nsrc).copied().collect()
        } else {
            nsrc.iter().chain(&lsrc).copied().collect()
        };
        let p1 = self.permute(&gs, &order1)?;

        let lin_objs: Vec<X::Obj> = lsrc.iter().map(|&i| m.src[i].obj.clone()).collect();
        let k_reindex = jl1.iter().map(|&j| pos(&lsrc, m.reindex[j])).collect::<Option<Vec<_>>>()?;
        let k = self.permute(&lin_objs, &k_reindex)?;
        let nl_targets: Vec<usize> = jl2.iter().chain(&jn).copied().collect();
        let c_block = SeqMor {
            src: nsrc.iter().map(|&i| m.src[i].obj.clone()).collect(),
            tgt: nl_targets.iter().map(|&j| a(j)).collect(),
            reindex: nl_targets.iter().map(|&j| pos(&nsrc, m.reindex[j])).collect::<Option<Vec<_>>>()?,
            comps: nl_targets.iter().map(|&j| x.identity(&a(j))).collect(),
        };
        let zb = self.z_mor(&c_block, true)?;

        // after the middle step, blocks are [jl1 | jl2 | jn] or [jl2 | jn | jl1]
        let block_order: Vec<usize> = if lin_first {
            jl1.iter().chain(&jl2).chain(&jn).copied().collect()
        } else {
            jl2.iter().chain(&jn).chain(&jl1).copied().collect()
        };
        let middle = if lin_first {
            self.tensor_mors(&[k, zb])
        } else {
            self.tensor_mors(&[zb, k])
        };
        let retag: Vec<X::Mor> = block_order
            .iter()
            .map(|&j| {
                if jl2.contains(&j) {
                    (self.eps)(&a(j))
                } else if m.tgt[j].tag == Tag::NonLin {
                    x.identity(&self.f_obj(&a(j)))
                } else {
                    x.identity(&a(j))
                }
            })
            .collect();
        let after: Vec<X::Obj> = block_order
            .iter()
            .map(|&j| if m.tgt[j].tag == Tag::NonLin { self.f_obj(&a(j)) } else { a(j) })
            .collect();
        let p2_reindex = (0..m.tgt.len()).map(|j| pos(&block_order, j)).collect::<Option<Vec<_>>>()?;
        let p2 = self.permute(&after, &p2_reindex)?;
        let comps: Vec<X::Mor> = (0..m.tgt.len())
            .map(|j| match m.tgt[j].tag {
                Tag::Lin => m.comps[j].clone(),
                Tag::NonLin => self.f_mor(&m.comps[j]),
            })
            .collect();
        self.chain(&[p1, middle, self.tensor_mors(&retag), p2, self.tensor_mors(&comps)])
    }

    /// `w: S X -> X`.
    pub fn w(&self) -> Functor<FreeCat<X>, X> {
        let (s1, s2) = (self.clone(), self.clone());
        Functor::new(
            FreeCat::symmetric(self.carrier.clone()),
            self.carrier.clone(),
            move |o| s1.w_obj(o),
            move |m| s2.w_mor(m).expect("tensor and symmetry data are composable"),
        )
    }

    /// `z: C X -> X`.
    pub fn z(&self) -> Functor<FreeCat<X>, X> {
        let (s1, s2) = (self.clone(), self.clone());
        Functor::new(
            FreeCat::cartesian(self.carrier.clone()),
            self.carrier.clone(),
            move |o| s1.z_obj(o),
            move |m| s2.z_mor(m, true).expect("diagonal and deletion data are composable"),
        )
    }

    pub fn counit(&self) -> NatTransform<X, X> {
        let e = self.eps.clone();
        NatTransform::new(self.deflation.clone(), Functor::identity(&self.carrier), move |o| e(o))
    }

    /// `x: Q X -> X`, without checking the structure first.
    pub fn evaluator(&self) -> Functor<LnlCat<X>, X> {
        let (s1, s2) = (self.clone(), self.clone());
        Functor::new(
            LnlCat::new(self.carrier.clone()),
            self.carrier.clone(),
            move |o| s1.x_obj(o),
            move |m| s2.x_mor(m, true).expect("structure data are composable"),
        )
    }

    pub fn algebra_unchecked(&self) -> QAlgebra<X> {
        LeftSemiAlgebra::strict(Lnl, self.carrier.clone(), self.evaluator())
    }
}

fn tensor_and_symmetry<X: Category>(s: &StructureObject<X>, dx: &SweepDomain<X>, r: &mut LawReport) {
    let x = &s.carrier;
    let (objs, mors) = (&dx.objects, &dx.morphisms);
    for a in objs {
        r.check("tensor/unit", s.tensor(&s.unit, a) == *a && s.tensor(a, &s.unit) == *a, || x.show_obj(a));
        for b in objs {
            let ab = s.tensor(a, b);
            r.check("tensor/identity", (s.tensor_mor)(&x.identity(a), &x.identity(b)) == x.identity(&ab), || {
                format!("{} ⊗ {}", x.show_obj(a), x.show_obj(b))
            });
            let sg = (s.symmetry)(a, b);
            let ok = x.dom(&sg) == ab && x.cod(&sg) == s.tensor(b, a);
            if !r.check("symmetry/boundary", ok, || format!("{} {}", x.show_obj(a), x.show_obj(b))) {
                continue;
            }
            let back = x.compose(&sg, &(s.symmetry)(b, a));
            r.check("symmetry/involutive", back == Some(x.identity(&ab)), || {
                format!("{} {}", x.show_obj(a), x.show_obj(b))
            });
            for c in objs {
                r.check("tensor/assoc", s.tensor(&ab, c) == s.tensor(a, &s.tensor(b, c)), || {
                    format!("{} {} {}", x.show_obj(a), x.show_obj(b), x.show_obj(c))
                });
                let lhs = (s.symmetry)(a, &s.tensor(b, c));
                let rhs = x
                    .compose(
                        &(s.tensor_mor)(&sg, &x.identity(c)),
                        &(s.tensor_mor)(&x.identity(b), &(s.symmetry)(a, c)),
                    );
                r.check("symmetry/hexagon", Some(lhs) == rhs, || {
                    format!("{} {} {}", x.show_obj(a), x.show_obj(b), x.show_obj(c))
                });
            }
        }
    }
    for m in mors {
        r.check(
            "tensor/unit",
            (s.tensor_mor)(&x.identity(&s.unit), m) == *m && (s.tensor_mor)(m, &x.identity(&s.unit)) == *m,
            || x.show_mor(m),
        );
        for n in mors {
            let mn = (s.tensor_mor)(m, n);
            let ok = x.dom(&mn) == s.tensor(&x.dom(m), &x.dom(n)) && x.cod(&mn) == s.tensor(&x.cod(m), &x.cod(n));
            if !r.check("tensor/boundary", ok, || format!("{} ⊗ {}", x.show_mor(m), x.show_mor(n))) {
                continue;
            }
            let (a, b, a2, b2) = (x.dom(m), x.dom(n), x.cod(m), x.cod(n));
            let lhs = x.compose(&mn, &(s.symmetry)(&a2, &b2));
            let rhs = x.compose(&(s.symmetry)(&a, &b), &(s.tensor_mor)(n, m));
            r.check("symmetry/natural", lhs.is_some() && lhs == rhs, || {
                format!("{} {}", x.show_mor(m), x.show_mor(n))
            });
        }
    }
    for (m, m2) in dx.composable_pairs(x) {
        for (n, n2) in dx.composable_pairs(x) {
            let lhs = x.compose(m, m2).map(|mm| (s.tensor_mor)(&mm, &x.then(n, n2)));
            let rhs = x.compose(&(s.tensor_mor)(m, n), &(s.tensor_mor)(m2, n2));
            r.check("tensor/interchange", lhs.is_some() && lhs == rhs, || {
                format!("({};{}) ⊗ ({};{})", x.show_mor(m), x.show_mor(m2), x.show_mor(n), x.show_mor(n2))
            });
        }
    }
}

fn comonad_clauses<X: Category>(s: &StructureObject<X>, dx: &SweepDomain<X>, r: &mut LawReport) {
    let x = &s.carrier;
    let f = &s.deflation;
    r.absorb("f", validate_functor_on(f, dx));
    if !r.structural.is_empty() {
        return;
    }
    r.check("f/unit", f.obj(&s.unit) == s.unit, || {
        format!("f(I) = {}, I = {}", x.show_obj(&f.obj(&s.unit)), x.show_obj(&s.unit))
    });
    functors_agree("f=ff", f, &f.then(f), dx, r);
    for a in &dx.objects {
        let e = (s.eps)(a);
        let fa = f.obj(a);
        if !r.check("eps/boundary", x.dom(&e) == fa && x.cod(&e) == *a, || x.show_obj(a)) {
            continue;
        }
        r.check("f.eps=id", x.is_identity(&f.mor(&e)), || x.show_obj(a));
        r.check("eps.f=id", x.is_identity(&(s.eps)(&fa)), || x.show_obj(a));
        let d = (s.diagonal)(a);
        r.check(
            "diagonal/boundary",
            x.dom(&d) == fa && x.cod(&d) == f.obj(&s.tensor(a, a)),
            || x.show_obj(a),
        );
        let t = (s.deletion)(a);
        r.check("deletion/boundary", x.dom(&t) == fa && x.cod(&t) == s.unit, || x.show_obj(a));
        for b in &dx.objects {
            r.check("f/monoidal", f.obj(&s.tensor(a, b)) == s.tensor(&fa, &f.obj(b)), || {
                format!("{} {}", x.show_obj(a), x.show_obj(b))
            });
            r.check("f/symmetry", f.mor(&(s.symmetry)(a, b)) == (s.symmetry)(&fa, &f.obj(b)), || {
                format!("{} {}", x.show_obj(a), x.show_obj(b))
            });
            r.check("eps/monoidal", (s.eps)(&s.tensor(a, b)) == (s.tensor_mor)(&e, &(s.eps)(b)), || {
                format!("{} {}", x.show_obj(a), x.show_obj(b))
            });
        }
    }
    if !r.passed() {
        return;
    }
    r.check("eps/unit", x.is_identity(&(s.eps)(&s.unit)), || x.show_obj(&s.unit));
    r.absorb("eps", validate_nat_transform_on(&s.counit(), dx));
    for m in &dx.morphisms {
        for n in &dx.morphisms {
            r.check("f/monoidal", f.mor(&(s.tensor_mor)(m, n)) == (s.tensor_mor)(&f.mor(m), &f.mor(n)), || {
                format!("{} {}", x.show_mor(m), x.show_mor(n))
            });
        }
    }
}

fn fixpoint_products<X: Category>(s: &StructureObject<X>, dx: &SweepDomain<X>, r: &mut LawReport) {
    let x = &s.carrier;
    let fix: Vec<&X::Obj> = dx.objects.iter().filter(|o| s.deflation.obj(o) == **o).collect();
    for c in &fix {
        r.check("fixpoint/terminal", x.hom(c, &s.unit).len() == 1, || x.show_obj(c));
    }
    for a in &fix {
        for b in &fix {
            let ab = s.tensor(a, b);
            if !r.check("fixpoint/closed", s.deflation.obj(&ab) == ab, || {
                format!("{} ⊗ {}", x.show_obj(a), x.show_obj(b))
            }) {
                continue;
            }
            let p1 = (s.tensor_mor)(&x.identity(a), &(s.deletion)(b));
            let p2 = (s.tensor_mor)(&(s.deletion)(a), &x.identity(b));
            let to_ab = |c: &X::Obj| x.hom(c, &ab);
            for c in &fix {
                let cands = to_ab(c);
                for u in x.hom(c, a) {
                    for v in x.hom(c, b) {
                        let n = cands
                            .iter()
                            .filter(|h| x.compose(h, &p1) == Some(u.clone()) && x.compose(h, &p2) == Some(v.clone()))
                            .count();
                        r.check("fixpoint/product", n == 1, || {
                            format!(
                                "{} mediating maps from {} into {} ⊗ {}",
                                n,
                                x.show_obj(c),
                                x.show_obj(a),
                                x.show_obj(b)
                            )
                        });
                    }
                }
            }
        }
    }
}

/// Every clause of a structure object, the derived `w` and `z` laws, and
/// finite products among fixpoints of `f`.
pub fn check_structure_object<X: Category>(s: &StructureObject<X>, sweep: Sweep) -> LawReport {
    let mut r = LawReport::new();
    let x = &s.carrier;
    // pairs and triples of carrier data; weight 2 already covers finite carriers
    let dx = SweepDomain::of(x, Sweep { max_weight: sweep.max_weight.min(2), ..sweep });
    r.truncated = dx.truncated;
    if !x.contains(&s.unit) {
        r.structural("unit object is not in the carrier");
        return r;
    }
    for a in &dx.objects {
        for b in &dx.objects {
            if !x.contains(&s.tensor(a, b)) {
                r.structural(format!("{} ⊗ {} is not in the carrier", x.show_obj(a), x.show_obj(b)));
            }
        }
    }
    if !r.structural.is_empty() {
        return r;
    }
    tensor_and_symmetry(s, &dx, &mut r);
    if r.passed() {
        comonad_clauses(s, &dx, &mut r);
    }
    if !r.passed() {
        return r;
    }

    let w = LeftSemiAlgebra::strict(SYMMETRIC, x.clone(), s.w());
    r.absorb("w", check_strict_algebra(&w, sweep));
    let e = s.eps.clone();
    let z = LeftSemiAlgebra::new(CARTESIAN, x.clone(), s.z(), move |o| e(o));
    r.absorb("z", check_left_semi_algebra(&z, sweep));
    let sx = FreeCat::symmetric(x.clone());
    let cx = FreeCat::cartesian(x.clone());
    let ds = SweepDomain::of(&sx, sweep);
    let dc = SweepDomain::of(&cx, sweep);
    functors_agree("coincidence", &sx.include_in_cartesian().then(&z.z), &w.z.then(&s.deflation), &ds, &mut r);
    for m in &dc.morphisms {
        r.check("z/independent", s.z_mor(m, true) == s.z_mor(m, false), || cx.show_mor(m));
    }
    // z is a map of S-algebras from (C X, concatenation) to (X, w)
    let concat = FreeCat::symmetric(cx.clone()).mult();
    let cx_alg = LeftSemiAlgebra::strict(SYMMETRIC, cx.clone(), concat);
    r.absorb("z-is-S-map", check_strict_lsa_map(&z.z, &cx_alg, &w, sweep));
    fixpoint_products(s, &dx, &mut r);
    r
}

/// `x∘κ = w`, `x∘c = z`, `x·β = ε·w`, and `x` respects concatenation.
pub fn check_mediating<X: Category>(s: &StructureObject<X>, q: &QAlgebra<X>, sweep: Sweep) -> LawReport {
    let mut r = LawReport::new();
    let lq = LnlCat::new(s.carrier.clone());
    let ds = SweepDomain::of(&lq.symmetric(), sweep);
    let dc = SweepDomain::of(&lq.cartesian(), sweep);
    let dq = SweepDomain::of(&lq, sweep);
    r.truncated = ds.truncated || dc.truncated || dq.truncated;
    functors_agree("x.kappa=w", &lq.kappa().then(&q.z), &s.w(), &ds, &mut r);
    functors_agree("x.c=z", &lq.ccol().then(&q.z), &s.z(), &dc, &mut r);
    let beta = lq.beta();
    for o in &ds.objects {
        r.check("x.beta=eps.w", q.z.mor(&beta.at(o)) == (s.eps)(&s.w_obj(o)), || lq.symmetric().show_obj(o));
    }
    let max = sweep.max_weight;
    for a in &dq.objects {
        for b in &dq.objects {
            if lq.weight(a) + lq.weight(b) <= max {
                let ab: LnlObj<X> = a.iter().chain(b).cloned().collect();
                r.check("x/concat", q.z.obj(&ab) == s.tensor(&q.z.obj(a), &q.z.obj(b)), || {
                    format!("{} ++ {}", lq.show_obj(a), lq.show_obj(b))
                });
            }
        }
    }
    let small: Vec<&LnlMor<X>> = dq
        .morphisms
        .iter()
        .filter(|m| 2 * lq.weight(&m.src).max(lq.weight(&m.tgt)) <= max)
        .collect();
    for m in &small {
        for n in &small {
            let mn = SeqMor::concat(&[(*m).clone(), (*n).clone()]);
            r.check("x/concat", q.z.mor(&mn) == (s.tensor_mor)(&q.z.mor(m), &q.z.mor(n)), || {
                format!("{} ++ {}", lq.show_mor(m), lq.show_mor(n))
            });
        }
    }
    r
}

/// Evaluating through the linear-first and the non-linear-first gathering agree.
pub fn check_factorization_independence<X: Category>(s: &StructureObject<X>, sweep: Sweep) -> LawReport {
    let mut r = LawReport::new();
    let lq = LnlCat::new(s.carrier.clone());
    let dq = SweepDomain::of(&lq, sweep);
    r.truncated = dq.truncated;
    for m in &dq.morphisms {
        let (a, b) = (s.x_mor(m, true), s.x_mor(m, false));
        r.check("x/independent", a.is_some() && a == b, || lq.show_mor(m));
    }
    r
}

/// The `Q`-algebra of a structure object; rejects structures that fail their checks.
pub fn algebra_from_structure<X: Category>(s: &StructureObject<X>, sweep: Sweep) -> Result<QAlgebra<X>> {
    let r = check_structure_object(s, sweep);
    if !r.passed() {
        return Err(Error::from_report("structure object", &r));
    }
    Ok(s.algebra_unchecked())
}

pub fn check_q_algebra<X: Category>(q: &QAlgebra<X>, sweep: Sweep) -> LawReport {
    check_strict_algebra(q, sweep)
}

/// Reads off the structure object of a `Q`-algebra without checking it.
pub fn structure_from_algebra_unchecked<X: Category>(q: &QAlgebra<X>) -> StructureObject<X> {
    let x = q.carrier.clone();
    let ev = q.z.clone();
    let lin = |o: &X::Obj| Tagged::lin(o.clone());
    let non = |o: &X::Obj| Tagged::nonlin(o.clone());
    let (e1, e2, e3, e4, e5, e6, e7) = (ev.clone(), ev.clone(), ev.clone(), ev.clone(), ev.clone(), ev.clone(), ev.clone());
    let (x1, x2, x3, x4, x5) = (x.clone(), x.clone(), x.clone(), x.clone(), x.clone());
    let deflation = Functor::new(
        x.clone(),
        x.clone(),
        move |o| e4.obj(&vec![non(o)]),
        move |m| {
            e5.mor(&SeqMor::pointwise(vec![non(&x4.dom(m))], vec![non(&x4.cod(m))], vec![m.clone()]))
        },
    );
    StructureObject {
        carrier: x.clone(),
        tensor_obj: Arc::new(move |a, b| e1.obj(&vec![lin(a), lin(b)])),
        tensor_mor: Arc::new(move |m, n| {
            e2.mor(&SeqMor::pointwise(
                vec![lin(&x1.dom(m)), lin(&x1.dom(n))],
                vec![lin(&x1.cod(m)), lin(&x1.cod(n))],
                vec![m.clone(), n.clone()],
            ))
        }),
        unit: ev.obj(&vec![]),
        symmetry: Arc::new(move |a, b| {
            e3.mor(&SeqMor {
                src: vec![lin(a), lin(b)],
                tgt: vec![lin(b), lin(a)],
                reindex: vec![1, 0],
                comps: vec![x2.identity(b), x2.identity(a)],
            })
        }),
        deflation,
        eps: Arc::new(move |a| e6.mor(&SeqMor::pointwise(vec![non(a)], vec![lin(a)], vec![x3.identity(a)]))),
        diagonal: Arc::new({
            let x5 = x5.clone();
            move |a| {
                e7.mor(&SeqMor {
                    src: vec![non(a)],
                    tgt: vec![non(a), non(a)],
                    reindex: vec![0, 0],
                    comps: vec![x5.identity(a), x5.identity(a)],
                })
            }
        }),
        deletion: Arc::new(move |a| {
            ev.mor(&SeqMor {
                src: vec![non(a)],
                tgt: vec![],
                reindex: vec![],
                comps: vec![],
            })
        }),
    }
}

/// The structure object of a `Q`-algebra; rejects algebras that fail the laws.
pub fn structure_from_algebra<X: Category>(q: &QAlgebra<X>, sweep: Sweep) -> Result<StructureObject<X>> {
    let r = check_q_algebra(q, sweep);
    if !r.passed() {
        return Err(Error::from_report("Q-algebra", &r));
    }
    Ok(structure_from_algebra_unchecked(q))
}

/// Componentwise equality of two structure objects on the carrier sweep.
pub fn compare_structures<X: Category>(a: &StructureObject<X>, b: &StructureObject<X>, sweep: Sweep) -> LawReport {
    let mut r = LawReport::new();
    let x = &a.carrier;
    let dx = SweepDomain::of(x, sweep);
    r.truncated = dx.truncated;
    r.check("unit", a.unit == b.unit, || format!("{} vs {}", x.show_obj(&a.unit), x.show_obj(&b.unit)));
    for o in &dx.objects {
        let show = || x.show_obj(o);
        r.check("f", a.deflation.obj(o) == b.deflation.obj(o), show);
        r.check("epsilon", (a.eps)(o) == (b.eps)(o), show);
        r.check("diagonal", (a.diagonal)(o) == (b.diagonal)(o), show);
        r.check("deletion", (a.deletion)(o) == (b.deletion)(o), show);
        for p in &dx.objects {
            let show = || format!("{} {}", x.show_obj(o), x.show_obj(p));
            r.check("tensor", a.tensor(o, p) == b.tensor(o, p), show);
            r.check("symmetry", (a.symmetry)(o, p) == (b.symmetry)(o, p), show);
        }
    }
    for m in &dx.morphisms {
        r.check("f", a.deflation.mor(m) == b.deflation.mor(m), || x.show_mor(m));
        for n in &dx.morphisms {
            r.check("tensor", (a.tensor_mor)(m, n) == (b.tensor_mor)(m, n), || {
                format!("{} {}", x.show_mor(m), x.show_mor(n))
            });
        }
    }
    r
}

/// structure -> algebra -> structure is the identity on the data.
pub fn structure_roundtrip<X: Category>(s: &StructureObject<X>, sweep: Sweep) -> LawReport {
    let back = structure_from_algebra_unchecked(&s.algebra_unchecked());
    compare_structures(s, &back, sweep)
}

/// algebra -> structure -> algebra reproduces the evaluator on the sweep.
pub fn algebra_roundtrip<X: Category>(q: &QAlgebra<X>, sweep: Sweep) -> LawReport {
    let mut r = LawReport::new();
    let back = structure_from_algebra_unchecked(q).algebra_unchecked();
    let lq = LnlCat::new(q.carrier.clone());
    let dq = SweepDomain::of(&lq, sweep);
    r.truncated = dq.truncated;
    functors_agree("evaluator", &q.z, &back.z, &dq, &mut r);
    r
}

/// A map of structure objects preserves every piece of data; its naturality
/// for the evaluators is then checked on the sweep.
pub fn check_structure_map<X: Category, Y: Category>(
    p: &Functor<X, Y>,
    s: &StructureObject<X>,
    s2: &StructureObject<Y>,
    sweep: Sweep,
) -> LawReport {
    let mut r = LawReport::new();
    let x = &s.carrier;
    let dx = SweepDomain::of(x, sweep);
    r.absorb("p", validate_functor_on(p, &dx));
    if !r.structural.is_empty() {
        return r;
    }
    r.check("p/unit", p.obj(&s.unit) == s2.unit, || x.show_obj(&s.unit));
    functors_agree("p.f=f.p", &s.deflation.then(p), &p.then(&s2.deflation), &dx, &mut r);
    for a in &dx.objects {
        let pa = p.obj(a);
        r.check("p/eps", p.mor(&(s.eps)(a)) == (s2.eps)(&pa), || x.show_obj(a));
        r.check("p/diagonal", p.mor(&(s.diagonal)(a)) == (s2.diagonal)(&pa), || x.show_obj(a));
        r.check("p/deletion", p.mor(&(s.deletion)(a)) == (s2.deletion)(&pa), || x.show_obj(a));
        for b in &dx.objects {
            let pb = p.obj(b);
            r.check("p/tensor", p.obj(&s.tensor(a, b)) == s2.tensor(&pa, &pb), || x.show_obj(a));
            r.check("p/symmetry", p.mor(&(s.symmetry)(a, b)) == (s2.symmetry)(&pa, &pb), || x.show_obj(a));
        }
    }
    for m in &dx.morphisms {
        for n in &dx.morphisms {
            r.check("p/tensor", p.mor(&(s.tensor_mor)(m, n)) == (s2.tensor_mor)(&p.mor(m), &p.mor(n)), || {
                format!("{} {}", x.show_mor(m), x.show_mor(n))
            });
        }
    }
    if !r.passed() {
        return r;
    }
    let lq = LnlCat::new(x.clone());
    let dq = SweepDomain::of(&lq, sweep);
    functors_agree(
        "p.x=x.Q(p)",
        &s.evaluator().then(p),
        &Lnl.lift(p).then(&s2.evaluator()),
        &dq,
        &mut r,
    );
    r
}

/// Outcome of [`perturbation_check`].
#[derive(Clone, Debug, Default)]
pub struct Perturbations {
    pub swept_morphisms: usize,
    pub tried: usize,
    /// Perturbations that broke no equation, rendered as `morphism := value`.
    pub survivors: Vec<String>,
}

/// Changes the evaluator on one swept morphism at a time, to every other
/// carrier morphism in the sweep, and checks that functoriality, one of the
/// mediating equations or compatibility with concatenation breaks.
pub fn perturbation_check<X: Category>(s: &StructureObject<X>, sweep: Sweep) -> Perturbations {
    let x = &s.carrier;
    let lq = LnlCat::new(x.clone());
    let dq = SweepDomain::of(&lq, sweep);
    let alts = SweepDomain::of(x, sweep).morphisms;
    let ev = s.evaluator();
    let value: HashMap<&LnlMor<X>, X::Mor> = dq.morphisms.iter().map(|m| (m, ev.mor(m))).collect();
    let index: HashMap<&LnlMor<X>, usize> = dq.morphisms.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // composition relations (a, b, a;b) touching each morphism
    let mut by_dom: HashMap<LnlObj<X>, Vec<usize>> = HashMap::new();
    for (i, m) in dq.morphisms.iter().enumerate() {
        by_dom.entry(m.src.clone()).or_default().push(i);
    }
    let mut relations: Vec<[usize; 3]> = vec![];
    let mut touching: Vec<Vec<usize>> = vec![vec![]; dq.morphisms.len()];
    for (i, a) in dq.morphisms.iter().enumerate() {
        for &j in by_dom.get(&a.tgt).map(Vec::as_slice).unwrap_or(&[]) {
            let Some(c) = lq.compose(a, &dq.morphisms[j]) else { continue };
            let Some(&k) = index.get(&c) else { continue };
            let id = relations.len();
            relations.push([i, j, k]);
            for t in [i, j, k] {
                if !touching[t].contains(&id) {
                    touching[t].push(id);
                }
            }
        }
    }

    let w = s.w();
    let z = s.z();
    let mut out = Perturbations {
        swept_morphisms: dq.morphisms.len(),
        ..Default::default()
    };
    for (i, m) in dq.morphisms.iter().enumerate() {
        let orig = &value[m];
        let forced = forced_value(s, &lq, &w, &z, m);
        let splits = concat_splits(m);
        for p in alts.iter().filter(|p| *p != orig) {
            out.tried += 1;
            if x.dom(p) != x.dom(orig) || x.cod(p) != x.cod(orig) {
                continue;
            }
            if lq.is_identity(m) || forced.as_ref().is_some_and(|f| f != p) {
                continue;
            }
            let at = |t: usize| if t == i { p.clone() } else { value[&dq.morphisms[t]].clone() };
            let breaks_composition = touching[i]
                .iter()
                .any(|&rid| {
                    let [a, b, c] = relations[rid];
                    x.compose(&at(a), &at(b)) != Some(at(c))
                });
            if breaks_composition {
                continue;
            }
            let breaks_concat = splits
                .iter()
                .any(|(m1, m2)| (s.tensor_mor)(&ev.mor(m1), &ev.mor(m2)) != *p);
            if breaks_concat {
                continue;
            }
            out.survivors.push(format!("{} := {}", lq.show_mor(m), x.show_mor(p)));
        }
    }
    out
}

/// The value a mediating equation prescribes for `m`, when `m` lies in the
/// image of `κ`, of `c`, or is a component of `β`.
fn forced_value<X: Category>(
    s: &StructureObject<X>,
    lq: &LnlCat<X>,
    w: &Functor<FreeCat<X>, X>,
    z: &Functor<FreeCat<X>, X>,
    m: &LnlMor<X>,
) -> Option<X::Mor> {
    let all = |tag| m.src.iter().chain(&m.tgt).all(|e| e.tag == tag);
    let h = lq.ret().mor(m);
    if all(Tag::Lin) {
        return Some(w.mor(&h));
    }
    if all(Tag::NonLin) {
        return Some(z.mor(&h));
    }
    let is_beta = m.src.iter().all(|e| e.tag == Tag::NonLin)
        && m.tgt.iter().all(|e| e.tag == Tag::Lin)
        && m.src.len() == m.tgt.len()
        && m.reindex.iter().enumerate().all(|(j, &k)| j == k)
        && m.comps.iter().all(|c| s.carrier.is_identity(c))
        && m.src.iter().zip(&m.tgt).all(|(a, b)| a.obj == b.obj);
    is_beta.then(|| (s.eps)(&s.w_obj(&h.src)))
}

/// Nontrivial ways of writing `m` as a block sum `m1 ⊕ m2`.
fn concat_splits<E: Clone, M: Clone>(m: &SeqMor<E, M>) -> Vec<(SeqMor<E, M>, SeqMor<E, M>)> {
    let mut out = vec![];
    for k in 0..=m.src.len() {
        for l in 0..=m.tgt.len() {
            if (k == 0 && l == 0) || (k == m.src.len() && l == m.tgt.len()) {
                continue;
            }
            if !(0..m.tgt.len()).all(|j| (m.reindex[j] < k) == (j < l)) {
                continue;
            }
            let m1 = SeqMor {
                src: m.src[..k].to_vec(),
                tgt: m.tgt[..l].to_vec(),
                reindex: m.reindex[..l].to_vec(),
                comps: m.comps[..l].to_vec(),
            };
            let m2 = SeqMor {
                src: m.src[k..].to_vec(),
                tgt: m.tgt[l..].to_vec(),
                reindex: m.reindex[l..].iter().map(|i| i - k).collect(),
                comps: m.comps[l..].to_vec(),
            };
            out.push((m1, m2));
        }
    }
    out
}

/// A structure object on a thin carrier with a meet for the tensor.
pub fn thin_structure(
    carrier: &FinCat,
    tensor: impl Fn(usize, usize) -> usize + Send + Sync + 'static,
    unit: usize,
    deflation: impl Fn(usize) -> usize + Send + Sync + 'static,
) -> StructureObject<FinCat> {
    let c = carrier.clone();
    let tensor = Arc::new(tensor);
    let deflation = Arc::new(deflation);
    let unique = move |a: usize, b: usize| {
        c.hom(&a, &b)
            .first()
            .copied()
            .unwrap_or_else(|| panic!("no morphism {} -> {}", c.object_name(a), c.object_name(b)))
    };
    let u = Arc::new(unique);
    let (t1, t2, t3) = (tensor.clone(), tensor.clone(), tensor.clone());
    let (d1, d2, d3, d4) = (deflation.clone(), deflation.clone(), deflation.clone(), deflation.clone());
    let (u1, u2, u3, u4, u5) = (u.clone(), u.clone(), u.clone(), u.clone(), u.clone());
    let cc = carrier.clone();
    StructureObject {
        carrier: carrier.clone(),
        tensor_obj: Arc::new(move |a, b| t1(*a, *b)),
        tensor_mor: Arc::new(move |m, n| u1(t2(cc.dom(m), cc.dom(n)), t2(cc.cod(m), cc.cod(n)))),
        unit,
        symmetry: Arc::new(move |a, b| u2(t3(*a, *b), t3(*b, *a))),
        deflation: Functor::into_thin(carrier.clone(), carrier.clone(), move |o| d1(*o)),
        eps: Arc::new(move |a| u3(d2(*a), *a)),
        diagonal: Arc::new(move |a| u4(d3(*a), d3(tensor(*a, *a)))),
        deletion: Arc::new(move |a| u5(d4(*a), unit)),
    }
}

/// `0 <= 1 <= 2` with `min`, unit `2`, and the given deflation.
pub fn chain3_with(deflation: [usize; 3]) -> StructureObject<FinCat> {
    thin_structure(&FinCat::chain(3), |a, b| a.min(b), 2, move |o| deflation[o])
}

/// The chain `0 <= 1 <= 2` with deflation `(0, 0, 2)`.
pub fn chain3() -> StructureObject<FinCat> {
    chain3_with([0, 0, 2])
}

/// A finite meet-semilattice with top, `f = id`.
pub fn meet_semilattice(
    names: &[&str],
    leq: impl Fn(usize, usize) -> bool,
) -> Result<StructureObject<FinCat>> {
    let n = names.len();
    let table: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
    let carrier = FinCat::from_data(crate::fincat::poset_data(names, |i, j| table[i][j]))?;
    let mut meet = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&k| table[k][i] && table[k][j]).collect();
            meet[i][j] = *lower
                .iter()
                .find(|&&k| lower.iter().all(|&l| table[l][k]))
                .ok_or_else(|| Error::Structural(format!("{} and {} have no meet", names[i], names[j])))?;
        }
    }
    let top = (0..n)
        .find(|&t| (0..n).all(|k| table[k][t]))
        .ok_or_else(|| Error::Structural("no top element".into()))?;
    Ok(thin_structure(&carrier, move |a, b| meet[a][b], top, |o| o))
}

/// The four-element Boolean lattice `2 × 2`.
pub fn boolean_square() -> StructureObject<FinCat> {
    let bits = |i: usize| (i >> 1, i & 1);
    meet_semilattice(&["00", "01", "10", "11"], |i, j| {
        let ((a, b), (c, d)) = (bits(i), bits(j));
        a <= c && b <= d
    })
    .expect("lattice")
}

/// The diamond `M3`: bottom, three atoms, top.
pub fn diamond_m3() -> StructureObject<FinCat> {
    meet_semilattice(&["bot", "a", "b", "c", "top"], |i, j| i == j || i == 0 || j == 4).expect("lattice")
}

/// The free `Q`-algebra `(Q A, μ)`.
pub fn free_q_algebra<A: Category>(base: &A) -> QAlgebra<LnlCat<A>> {
    crate::semialg::free_algebra(Lnl, base)
}

/// On-disk form of a structure object over a finite carrier. Morphism tables
/// may be omitted for thin carriers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureTables {
    pub carrier: CatRef,
    pub tensor: TensorTable,
    pub unit: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<Vec<[String; 3]>>,
    pub f: MapTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deletion: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorTable {
    pub objects: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<[String; 3]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapTable {
    pub objects: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<[String; 2]>>,
}

struct Lookup<'a>(&'a FinCat);

impl Lookup<'_> {
    fn obj(&self, n: &str) -> Result<usize> {
        self.0
            .object(n)
            .ok_or_else(|| Error::Structural(format!("unknown object '{n}'")))
    }
    fn mor(&self, n: &str) -> Result<FinMor> {
        self.0
            .morphism(n)
            .ok_or_else(|| Error::Structural(format!("unknown morphism '{n}'")))
    }
}

fn total<K: Ord + Clone + std::fmt::Debug, V>(map: &BTreeMap<K, V>, keys: &[K], what: &str) -> Result<()> {
    match keys.iter().find(|k| !map.contains_key(k)) {
        Some(k) => Err(Error::Structural(format!("{what} table has no entry for {k:?}"))),
        None => Ok(()),
    }
}

impl StructureTables {
    pub fn load(path: &Path) -> Result<(StructureTables, FinCat)> {
        let t: StructureTables = load_json(path)?;
        let c = t.carrier.resolve(path.parent().unwrap_or(Path::new(".")))?;
        Ok((t, c))
    }

    /// Resolves names into a structure object. Tables must be total; missing
    /// morphism tables are filled in only when the carrier is thin.
    pub fn to_structure(&self, carrier: &FinCat) -> Result<StructureObject<FinCat>> {
        let lk = Lookup(carrier);
        let thin = carrier.is_thin();
        let objs = carrier.objects();
        let mors = carrier.morphisms();
        let pairs: Vec<(usize, usize)> = objs.iter().flat_map(|&a| objs.iter().map(move |&b| (a, b))).collect();
        let need = |present: bool, what: &str| -> Result<()> {
            if present || thin {
                Ok(())
            } else {
                Err(Error::Structural(format!("{what} table is required for a carrier that is not thin")))
            }
        };
        let unique = {
            let c = carrier.clone();
            move |a: usize, b: usize| -> Result<FinMor> {
                c.hom(&a, &b).first().copied().ok_or_else(|| {
                    Error::Structural(format!("no morphism {} -> {}", c.object_name(a), c.object_name(b)))
                })
            }
        };

        let mut tensor = BTreeMap::new();
        for [a, b, c] in &self.tensor.objects {
            tensor.insert((lk.obj(a)?, lk.obj(b)?), lk.obj(c)?);
        }
        total(&tensor, &pairs, "tensor")?;
        let unit = lk.obj(&self.unit)?;
        let mut f_obj = BTreeMap::new();
        for [a, b] in &self.f.objects {
            f_obj.insert(lk.obj(a)?, lk.obj(b)?);
        }
        total(&f_obj, &objs, "f")?;

        let mut tensor_mor = BTreeMap::new();
        need(self.tensor.morphisms.is_some(), "tensor morphism")?;
        match &self.tensor.morphisms {
            Some(rows) => {
                for [m, n, p] in rows {
                    tensor_mor.insert((lk.mor(m)?, lk.mor(n)?), lk.mor(p)?);
                }
                let mpairs: Vec<_> = mors.iter().flat_map(|&m| mors.iter().map(move |&n| (m, n))).collect();
                total(&tensor_mor, &mpairs, "tensor morphism")?;
            }
            None => {
                for &m in &mors {
                    for &n in &mors {
                        let (d, c) = (carrier.dom(&m), carrier.cod(&m));
                        let (d2, c2) = (carrier.dom(&n), carrier.cod(&n));
                        tensor_mor.insert((m, n), unique(tensor[&(d, d2)], tensor[&(c, c2)])?);
                    }
                }
            }
        }
        let mut f_mor = BTreeMap::new();
        need(self.f.morphisms.is_some(), "f morphism")?;
        match &self.f.morphisms {
            Some(rows) => {
                for [m, n] in rows {
                    f_mor.insert(lk.mor(m)?, lk.mor(n)?);
                }
                for o in &objs {
                    f_mor.entry(FinMor::Id(*o)).or_insert(FinMor::Id(f_obj[o]));
                }
                total(&f_mor, &mors, "f morphism")?;
            }
            None => {
                for &m in &mors {
                    f_mor.insert(m, unique(f_obj[&carrier.dom(&m)], f_obj[&carrier.cod(&m)])?);
                }
            }
        }
        let symmetry = match &self.symmetry {
            Some(rows) => {
                let mut t = BTreeMap::new();
                for [a, b, m] in rows {
                    t.insert((lk.obj(a)?, lk.obj(b)?), lk.mor(m)?);
                }
                total(&t, &pairs, "symmetry")?;
                t
            }
            None => {
                need(false, "symmetry")?;
                pairs
                    .iter()
                    .map(|&(a, b)| Ok(((a, b), unique(tensor[&(a, b)], tensor[&(b, a)])?)))
                    .collect::<Result<_>>()?
            }
        };
        let component = |rows: &Option<Vec<[String; 2]>>, what: &str, default: &dyn Fn(usize) -> Result<FinMor>| {
            let mut t = BTreeMap::new();
            match rows {
                Some(rows) => {
                    for [a, m] in rows {
                        t.insert(lk.obj(a)?, lk.mor(m)?);
                    }
                    total(&t, &objs, what)?;
                }
                None => {
                    need(false, what)?;
                    for &o in &objs {
                        t.insert(o, default(o)?);
                    }
                }
            }
            Ok::<_, Error>(t)
        };
        let eps = component(&self.epsilon, "epsilon", &|o| unique(f_obj[&o], o))?;
        let diagonal = component(&self.diagonal, "diagonal", &|o| unique(f_obj[&o], f_obj[&tensor[&(o, o)]]))?;
        let deletion = component(&self.deletion, "deletion", &|o| unique(f_obj[&o], unit))?;

        let fo = f_obj.clone();
        Ok(StructureObject {
            carrier: carrier.clone(),
            tensor_obj: Arc::new(move |a, b| tensor[&(*a, *b)]),
            tensor_mor: Arc::new(move |m, n| tensor_mor[&(*m, *n)]),
            unit,
            symmetry: Arc::new(move |a, b| symmetry[&(*a, *b)]),
            deflation: Functor::new(carrier.clone(), carrier.clone(), move |o| fo[o], move |m| f_mor[m]),
            eps: Arc::new(move |a| eps[a]),
            diagonal: Arc::new(move |a| diagonal[a]),
            deletion: Arc::new(move |a| deletion[a]),
        })
    }

    /// Full tables for a structure object over a finite carrier, with the carrier inline.
    pub fn from_structure(s: &StructureObject<FinCat>) -> StructureTables {
        let c = &s.carrier;
        let on = |o: usize| c.object_name(o).to_string();
        let mn = |m: FinMor| c.mor_name(m);
        let objs = c.objects();
        let mors = c.morphisms();
        let mut tensor = vec![];
        let mut symmetry = vec![];
        for &a in &objs {
            for &b in &objs {
                tensor.push([on(a), on(b), on(s.tensor(&a, &b))]);
                symmetry.push([on(a), on(b), mn((s.symmetry)(&a, &b))]);
            }
        }
        let mut tensor_mor = vec![];
        for &m in &mors {
            for &n in &mors {
                tensor_mor.push([mn(m), mn(n), mn((s.tensor_mor)(&m, &n))]);
            }
        }
        let comp = |g: &Comp<FinCat>| Some(objs.iter().map(|&o| [on(o), mn(g(&o))]).collect());
        StructureTables {
            carrier: CatRef::Inline(c.to_data()),
            tensor: TensorTable {
                objects: tensor,
                morphisms: Some(tensor_mor),
            },
            unit: on(s.unit),
            symmetry: Some(symmetry),
            f: MapTable {
                objects: objs.iter().map(|&o| [on(o), on(s.deflation.obj(&o))]).collect(),
                morphisms: Some(mors.iter().map(|&m| [mn(m), mn(s.deflation.mor(&m))]).collect()),
            },
            epsilon: comp(&s.eps),
            diagonal: comp(&s.diagonal),
            deletion: comp(&s.deletion),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: usize) -> Tagged<usize> {
        Tagged::lin(v)
    }
    fn n(v: usize) -> Tagged<usize> {
        Tagged::nonlin(v)
    }

    #[test]
    fn chain3_passes() {
        let r = check_structure_object(&chain3(), Sweep::new(2));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn chain3_bad_unit_is_located() {
        let r = check_structure_object(&chain3_with([0, 1, 1]), Sweep::new(2));
        assert!(r.failed_laws().contains(&"f/unit"), "{r}");
    }

    #[test]
    fn semilattices_pass() {
        for s in [boolean_square(), diamond_m3()] {
            let r = check_structure_object(&s, Sweep::new(2));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn chain3_evaluator_examples() {
        let s = chain3();
        assert_eq!(s.x_obj(&vec![t(1), n(1)]), 0);
        assert_eq!(s.x_obj(&vec![t(1)]), 1);
        assert_eq!(s.x_obj(&vec![n(2), n(2)]), 2);
        let m = boolean_square();
        assert_eq!(m.x_obj(&vec![n(1), t(2)]), m.tensor(&1, &2));
    }

    #[test]
    fn chain3_mediating_and_roundtrip() {
        let s = chain3();
        let q = algebra_from_structure(&s, Sweep::new(2)).unwrap();
        assert!(check_q_algebra(&q, Sweep::new(2)).passed());
        assert!(check_mediating(&s, &q, Sweep::new(2)).passed());
        assert!(check_factorization_independence(&s, Sweep::new(2)).passed());
        assert!(structure_roundtrip(&s, Sweep::new(1)).passed());
    }

    #[test]
    fn free_algebra_structure() {
        let q = free_q_algebra(&FinCat::one());
        let s = structure_from_algebra_unchecked(&q);
        let lq = LnlCat::new(FinCat::one());
        // w is concatenation, f retags everything non-linear
        assert_eq!(s.tensor(&vec![t(0)], &vec![n(0)]), vec![t(0), n(0)]);
        assert_eq!(s.deflation.obj(&vec![t(0), n(0)]), vec![n(0), n(0)]);
        let mut r = LawReport::new();
        let d = SweepDomain::of(&lq, Sweep::new(2));
        functors_agree("f=e", &s.deflation, &lq.comonad(), &d, &mut r);
        for o in &d.objects {
            r.check("eps=alpha", (s.eps)(o) == lq.alpha().at(o), || lq.show_obj(o));
        }
        assert!(r.passed(), "{r}");
        let r = algebra_roundtrip(&q, Sweep::new(2));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn terminal_carrier_is_trivial() {
        let one = FinCat::one();
        let q = LeftSemiAlgebra::strict(Lnl, one.clone(), Functor::into_thin(LnlCat::new(one.clone()), one.clone(), |_| 0));
        let s = structure_from_algebra(&q, Sweep::new(2)).unwrap();
        assert!(check_structure_object(&s, Sweep::new(2)).passed());
        assert_eq!(s.unit, 0);
    }

    #[test]
    fn perturbations_on_chain3_all_break() {
        let p = perturbation_check(&chain3(), Sweep::new(2));
        assert!(p.tried > 0);
        assert!(p.survivors.is_empty(), "{:?}", p.survivors);
    }

    #[test]
    fn deflation_is_a_structure_map() {
        let s = chain3();
        assert!(check_structure_map(&s.deflation.clone(), &s, &s, Sweep::new(2)).passed());
        assert!(check_structure_map(&Functor::identity(&s.carrier), &s, &s, Sweep::new(2)).passed());
    }

    #[test]
    fn tables_roundtrip() {
        let s = chain3();
        let t = StructureTables::from_structure(&s);
        let text = serde_json::to_string(&t).unwrap();
        let t2: StructureTables = serde_json::from_str(&text).unwrap();
        let c = t2.carrier.resolve(Path::new(".")).unwrap();
        let s2 = t2.to_structure(&c).unwrap();
        assert!(compare_structures(&s, &s2, Sweep::new(1)).passed());
    }
}
