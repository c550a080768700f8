//! Colax colimit of a functor, its universal cocone, and mediating cells.

use lnl_core::colimit::{build_colimit, check_mediator, mediate_2cell, mediate_cocone, ColaxCocone, Side};
use lnl_core::fincat::{FinMor, FunctorData};
use lnl_core::{Category, FinCat, Functor, NatTransform, Sweep};
use std::path::Path;

fn main() -> lnl_core::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/arrow_to_one.json");
    let f = FunctorData::load(&path)?;
    let col = build_colimit(&f);
    let objs = col.objects_up_to(1);
    for a in &objs {
        for b in &objs {
            for m in col.hom(a, b) {
                println!("{} -> {}: {}", col.obj_name(a), col.obj_name(b), col.mor_name(&m));
            }
        }
    }

    // collapse both copies of the arrow onto the arrow itself
    let arrow = FinCat::arrow();
    let id = Functor::identity(&arrow);
    let col = build_colimit(&id);
    let cc = ColaxCocone::new(id.clone(), id.clone(), |a| FinMor::Id(*a), &id);
    let r = mediate_cocone(&col, &cc, Sweep::new(1))?;
    print!("mediator: {}", check_mediator(&col, &cc, &r, Sweep::new(1)));
    for o in col.objects_up_to(1) {
        println!("  r({}) = {}", col.obj_name(&o), arrow.object_name(r.obj(&o)));
    }

    let u = arrow.morphism("u").unwrap();
    let to_top = Functor::into_thin(arrow.clone(), arrow.clone(), |_| 1);
    let cc2 = ColaxCocone::new(to_top.clone(), id.clone(), move |a| if *a == 0 { u } else { FinMor::Id(1) }, &id);
    let rho = NatTransform::new(id.clone(), to_top, move |a| if *a == 0 { u } else { FinMor::Id(1) });
    let sigma = NatTransform::identity(&id);
    let tau = mediate_2cell(&col, &cc, &cc2, &rho, &sigma, Sweep::new(1))?;
    for o in [Side::A(0), Side::B(0)] {
        println!("  tau at {} = {}", col.obj_name(&o), arrow.mor_name(tau.at(&o)));
    }
    Ok(())
}
