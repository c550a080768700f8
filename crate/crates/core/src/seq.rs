//! Free symmetric strict monoidal (`S`) and free strict-finite-products (`C`)
//! categories over a base.
//!
//! Objects are finite sequences of base objects. A morphism
//! `<a_0..a_{n-1}> -> <b_0..b_{m-1}>` is a reindexing `φ: [m] -> [n]` read
//! from target positions to source positions, together with a base morphism
//! `a_{φ(j)} -> b_j` for every target position `j`. In `S` the reindexing is a
//! bijection; in `C` it is an arbitrary function. Positions are 0-based.

use crate::category::{Category, Functor, NatTransform};
use crate::util;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// Bijective reindexing: the free symmetric strict monoidal category.
    Symmetric,
    /// Arbitrary reindexing: the free category with strict finite products.
    Cartesian,
}

impl Flavor {
    pub fn letter(self) -> &'static str {
        match self {
            Flavor::Symmetric => "S",
            Flavor::Cartesian => "C",
        }
    }
}

/// A reindexing-plus-components morphism between sequences with entries `E`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqMor<E, M> {
    pub src: Vec<E>,
    pub tgt: Vec<E>,
    /// `reindex[j]` is the source position feeding target position `j`.
    pub reindex: Vec<usize>,
    pub comps: Vec<M>,
}

impl<E: Clone, M: Clone> SeqMor<E, M> {
    /// Diagrammatic composite, provided `self.tgt == next.src`.
    pub(crate) fn then_with(
        &self,
        next: &SeqMor<E, M>,
        base_then: impl Fn(&M, &M) -> Option<M>,
    ) -> Option<SeqMor<E, M>>
    where
        E: PartialEq,
    {
        if self.tgt != next.src {
            return None;
        }
        let reindex: Vec<usize> = next.reindex.iter().map(|&k| self.reindex[k]).collect();
        let comps = next
            .reindex
            .iter()
            .zip(&next.comps)
            .map(|(&k, c)| base_then(&self.comps[k], c))
            .collect::<Option<Vec<M>>>()?;
        Some(SeqMor {
            src: self.src.clone(),
            tgt: next.tgt.clone(),
            reindex,
            comps,
        })
    }

    /// Pointwise identity-reindex morphism.
    pub fn pointwise(src: Vec<E>, tgt: Vec<E>, comps: Vec<M>) -> Self {
        SeqMor {
            reindex: (0..tgt.len()).collect(),
            src,
            tgt,
            comps,
        }
    }

    /// Block sum (concatenation) of morphisms.
    pub fn concat(parts: &[SeqMor<E, M>]) -> Self {
        let mut out = SeqMor {
            src: vec![],
            tgt: vec![],
            reindex: vec![],
            comps: vec![],
        };
        for p in parts {
            let off = out.src.len();
            out.reindex.extend(p.reindex.iter().map(|k| k + off));
            out.src.extend(p.src.iter().cloned());
            out.tgt.extend(p.tgt.iter().cloned());
            out.comps.extend(p.comps.iter().cloned());
        }
        out
    }
}

/// Flattens a morphism between sequences of sequences: the outer reindex picks
/// a source block for each target block, the inner reindexes act within blocks.
pub(crate) fn flatten<E: Clone, F: Clone, M: Clone>(
    outer: &SeqMor<F, SeqMor<E, M>>,
    block: impl Fn(&F) -> &Vec<E>,
) -> (Vec<usize>, Vec<M>) {
    let mut offsets = Vec::with_capacity(outer.src.len());
    let mut acc = 0;
    for b in &outer.src {
        offsets.push(acc);
        acc += block(b).len();
    }
    let mut reindex = vec![];
    let mut comps = vec![];
    for (j, inner) in outer.comps.iter().enumerate() {
        let base = offsets[outer.reindex[j]];
        reindex.extend(inner.reindex.iter().map(|k| base + k));
        comps.extend(inner.comps.iter().cloned());
    }
    (reindex, comps)
}

/// `S(base)` or `C(base)`.
#[derive(Clone, Debug)]
pub struct FreeCat<C: Category> {
    pub base: C,
    pub flavor: Flavor,
}

pub type FreeObj<C> = Vec<<C as Category>::Obj>;
pub type FreeMor<C> = SeqMor<<C as Category>::Obj, <C as Category>::Mor>;

impl<C: Category> FreeCat<C> {
    pub fn new(base: C, flavor: Flavor) -> Self {
        FreeCat { base, flavor }
    }

    pub fn symmetric(base: C) -> Self {
        FreeCat::new(base, Flavor::Symmetric)
    }

    pub fn cartesian(base: C) -> Self {
        FreeCat::new(base, Flavor::Cartesian)
    }

    /// Candidate reindexings `[m] -> [n]` for this flavor.
    pub fn reindexings(&self, n: usize, m: usize) -> Vec<Vec<usize>> {
        match self.flavor {
            Flavor::Symmetric if n == m => util::permutations(n),
            Flavor::Symmetric => vec![],
            Flavor::Cartesian => util::functions(m, n),
        }
    }

    /// Whether `m` is a well-formed morphism of this category.
    pub fn is_morphism(&self, m: &FreeMor<C>) -> bool {
        let n = m.src.len();
        let shape = m.reindex.len() == m.tgt.len()
            && m.comps.len() == m.tgt.len()
            && m.reindex.iter().all(|&k| k < n);
        if !shape {
            return false;
        }
        if self.flavor == Flavor::Symmetric {
            let mut seen = vec![false; n];
            if m.tgt.len() != n {
                return false;
            }
            for &k in &m.reindex {
                if std::mem::replace(&mut seen[k], true) {
                    return false;
                }
            }
        }
        m.comps.iter().enumerate().all(|(j, c)| {
            self.base.dom(c) == m.src[m.reindex[j]] && self.base.cod(c) == m.tgt[j]
        })
    }

    /// The singleton functor `base -> T(base)` (unit of the monad).
    pub fn unit(&self) -> Functor<C, FreeCat<C>> {
        let b = self.base.clone();
        Functor::new(
            self.base.clone(),
            self.clone(),
            |a| vec![a.clone()],
            move |m| SeqMor {
                src: vec![b.dom(m)],
                tgt: vec![b.cod(m)],
                reindex: vec![0],
                comps: vec![m.clone()],
            },
        )
    }

    /// The same sequences and morphisms viewed in the cartesian flavor.
    pub fn include_in_cartesian(&self) -> Functor<FreeCat<C>, FreeCat<C>> {
        Functor::new(
            self.clone(),
            FreeCat::cartesian(self.base.clone()),
            |a| a.clone(),
            |m| m.clone(),
        )
    }

    /// Applies the construction to a functor: `T(f): T(A) -> T(B)`.
    pub fn lift<B: Category>(&self, f: &Functor<C, B>) -> Functor<FreeCat<C>, FreeCat<B>> {
        let (f1, f2) = (f.clone(), f.clone());
        Functor::new(
            self.clone(),
            FreeCat::new(f.target.clone(), self.flavor),
            move |a: &Vec<C::Obj>| a.iter().map(|x| f1.obj(x)).collect(),
            move |m: &FreeMor<C>| SeqMor {
                src: m.src.iter().map(|x| f2.obj(x)).collect(),
                tgt: m.tgt.iter().map(|x| f2.obj(x)).collect(),
                reindex: m.reindex.clone(),
                comps: m.comps.iter().map(|c| f2.mor(c)).collect(),
            },
        )
    }

    /// Applies the construction to a 2-cell: pointwise components.
    pub fn lift_cell<B: Category>(&self, t: &NatTransform<C, B>) -> NatTransform<FreeCat<C>, FreeCat<B>> {
        let s = self.lift(&t.source);
        let g = self.lift(&t.target);
        let (t1, s1, g1) = (t.clone(), s.clone(), g.clone());
        NatTransform::new(s, g, move |a: &Vec<C::Obj>| {
            SeqMor::pointwise(s1.obj(a), g1.obj(a), a.iter().map(|x| t1.at(x)).collect())
        })
    }

    /// Strict monoidal product: concatenation.
    pub fn tensor_obj(&self, a: &[C::Obj], b: &[C::Obj]) -> Vec<C::Obj> {
        a.iter().chain(b).cloned().collect()
    }

    /// Bijective reindex with identity components moving `src` to `src∘perm`
    /// (target position `j` reads source position `perm[j]`).
    pub fn permutation(&self, src: &[C::Obj], perm: &[usize]) -> FreeMor<C> {
        SeqMor {
            src: src.to_vec(),
            tgt: perm.iter().map(|&k| src[k].clone()).collect(),
            reindex: perm.to_vec(),
            comps: perm.iter().map(|&k| self.base.identity(&src[k])).collect(),
        }
    }
}

impl<C: Category> FreeCat<FreeCat<C>> {
    /// Multiplication: concatenation of sequences of sequences.
    pub fn mult(&self) -> Functor<FreeCat<FreeCat<C>>, FreeCat<C>> {
        Functor::new(
            self.clone(),
            self.base.clone(),
            |a: &Vec<Vec<C::Obj>>| a.concat(),
            |m: &SeqMor<Vec<C::Obj>, FreeMor<C>>| {
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
}

impl<C: Category> Category for FreeCat<C> {
    type Obj = Vec<C::Obj>;
    type Mor = SeqMor<C::Obj, C::Mor>;

    fn contains(&self, o: &Self::Obj) -> bool {
        o.iter().all(|x| self.base.contains(x))
    }

    fn dom(&self, m: &Self::Mor) -> Self::Obj {
        m.src.clone()
    }

    fn cod(&self, m: &Self::Mor) -> Self::Obj {
        m.tgt.clone()
    }

    fn identity(&self, o: &Self::Obj) -> Self::Mor {
        SeqMor::pointwise(o.clone(), o.clone(), o.iter().map(|x| self.base.identity(x)).collect())
    }

    fn compose(&self, first: &Self::Mor, then: &Self::Mor) -> Option<Self::Mor> {
        first.then_with(then, |a, b| self.base.compose(a, b))
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor> {
        let mut out = vec![];
        for phi in self.reindexings(a.len(), b.len()) {
            let choices: Vec<Vec<C::Mor>> =
                phi.iter().zip(b).map(|(&k, y)| self.base.hom(&a[k], y)).collect();
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
        o.iter().map(|x| self.base.weight(x).max(1)).sum()
    }

    fn objects_up_to(&self, w: usize) -> Vec<Self::Obj> {
        let items: Vec<(C::Obj, usize)> = self
            .base
            .objects_up_to(w)
            .into_iter()
            .map(|x| {
                let wx = self.base.weight(&x).max(1);
                (x, wx)
            })
            .collect();
        util::weighted_sequences(&items, w)
    }

    fn obj_json(&self, o: &Self::Obj) -> Value {
        Value::Array(o.iter().map(|x| self.base.obj_json(x)).collect())
    }

    fn mor_json(&self, m: &Self::Mor) -> Value {
        json!({
            "reindex": m.reindex,
            "components": m.comps.iter().map(|c| self.base.mor_json(c)).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_functor, Sweep, SweepDomain};
    use crate::fincat::FinCat;

    #[test]
    fn hom_counts_from_examples() {
        let one = FinCat::one();
        let s = FreeCat::symmetric(one.clone());
        assert_eq!(s.hom(&vec![0, 0], &vec![0, 0]).len(), 2);
        let c = FreeCat::cartesian(one);
        assert_eq!(c.hom(&vec![0], &vec![0, 0]).len(), 1);
        let arrow = FinCat::arrow();
        let sa = FreeCat::symmetric(arrow.clone());
        let homs = sa.hom(&vec![0, 1], &vec![1, 1]);
        assert_eq!(homs.len(), 2);
        let u = arrow.morphism("u").unwrap();
        for h in &homs {
            for (j, &k) in h.reindex.iter().enumerate() {
                let expected = if k == 0 { u } else { arrow.identity(&1) };
                assert_eq!(h.comps[j], expected);
            }
        }
    }

    #[test]
    fn unit_is_full_and_faithful() {
        let arrow = FinCat::arrow();
        for flavor in [Flavor::Symmetric, Flavor::Cartesian] {
            let t = FreeCat::new(arrow.clone(), flavor);
            let eta = t.unit();
            assert_eq!(eta.obj(&0), vec![0]);
            for a in arrow.objects() {
                for b in arrow.objects() {
                    let images: Vec<_> = arrow.hom(&a, &b).iter().map(|m| eta.mor(m)).collect();
                    assert_eq!(images, t.hom(&eta.obj(&a), &eta.obj(&b)));
                }
            }
            assert!(validate_functor(&eta, Sweep::new(1)).passed());
        }
        let u = arrow.morphism("u").unwrap();
        let img = FreeCat::cartesian(arrow).unit().mor(&u);
        assert_eq!(img.reindex, vec![0]);
        assert_eq!(img.comps, vec![u]);
    }

    #[test]
    fn flatten_matches_position_arithmetic() {
        // C over ONE: outer <<•>,<•>> -> <<•,•>> ... built in reverse: target has two
        // blocks, both read the single source block <•>, each via the diagonal.
        let one = FinCat::one();
        let c = FreeCat::cartesian(one.clone());
        let cc = FreeCat::cartesian(c.clone());
        let diag = c.hom(&vec![0], &vec![0, 0]).pop().unwrap();
        let outer = SeqMor {
            src: vec![vec![0]],
            tgt: vec![vec![0, 0], vec![0, 0]],
            reindex: vec![0, 0],
            comps: vec![diag.clone(), diag],
        };
        assert!(cc.hom(&outer.src, &outer.tgt).contains(&outer));
        let flat = cc.mult().mor(&outer);
        // brute-force: target position p lies in block p / 2, which reads block 0 at offset 0
        let expected: Vec<usize> = (0..4).map(|_p| 0).collect();
        assert_eq!(flat.reindex, expected);
        assert_eq!(flat.src, vec![0]);
        assert_eq!(flat.tgt, vec![0; 4]);
    }

    #[test]
    fn flatten_block_offsets() {
        let one = FinCat::one();
        let c = FreeCat::cartesian(one);
        let cc = FreeCat::cartesian(c.clone());
        let objs = cc.objects_up_to(3);
        for a in &objs {
            for b in &objs {
                for m in cc.hom(a, b) {
                    let flat = cc.mult().mor(&m);
                    // independent recomputation: enumerate (block, offset) pairs
                    let mut starts = vec![0];
                    for blk in &m.src {
                        starts.push(starts.last().unwrap() + blk.len());
                    }
                    let mut expected = vec![];
                    for (j, inner) in m.comps.iter().enumerate() {
                        for &k in &inner.reindex {
                            expected.push(starts[m.reindex[j]] + k);
                        }
                    }
                    assert_eq!(flat.reindex, expected);
                }
            }
        }
    }

    #[test]
    fn concat_of_objects() {
        let one = FinCat::discrete(&["a", "b", "c"]);
        let ss = FreeCat::symmetric(FreeCat::symmetric(one));
        assert_eq!(ss.mult().obj(&vec![vec![0], vec![1, 2]]), vec![0, 1, 2]);
        assert_eq!(ss.mult().obj(&vec![]), Vec::<usize>::new());
    }

    #[test]
    fn composition_is_associative_and_unital_over_arrow() {
        let arrow = FinCat::arrow();
        for flavor in [Flavor::Symmetric, Flavor::Cartesian] {
            let t = FreeCat::new(arrow.clone(), flavor);
            let dom = SweepDomain::of(&t, Sweep::new(3));
            for m in &dom.morphisms {
                assert!(t.is_morphism(m));
                assert_eq!(t.compose(&t.identity(&m.src), m).as_ref(), Some(m));
                assert_eq!(t.compose(m, &t.identity(&m.tgt)).as_ref(), Some(m));
            }
            for (f, g) in dom.composable_pairs(&t) {
                let fg = t.compose(f, g).unwrap();
                assert!(t.is_morphism(&fg));
                for h in dom.morphisms.iter().filter(|h| h.src == g.tgt) {
                    assert_eq!(t.compose(&fg, h), t.compose(f, &t.compose(g, h).unwrap()));
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let one = FinCat::discrete(&["a", "b"]);
        let s = FreeCat::symmetric(one);
        assert_eq!(s.obj_json(&vec![0, 1]).to_string(), r#"["a","b"]"#);
        let swap = s.permutation(&[0, 1], &[1, 0]);
        assert_eq!(
            s.mor_json(&swap).to_string(),
            r#"{"components":["id_b","id_a"],"reindex":[1,0]}"#
        );
    }
}
