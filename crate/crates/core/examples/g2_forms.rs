//! Candidate G2 automorphism forms: which parameter pairs give algebra
//! automorphisms, and how the nested forms reproduce them.

use octo_moebius::g2::{agreement_check, automorphism_defect, td_criterion, AutomorphismForm, FormKind, NestedForm, NestedKind};
use octo_moebius::sample::Sampler;
use octo_moebius::verify::{draw_generic_parameters, draw_identification, draw_td_parameters, footnote_witness};

fn main() -> octo_moebius::Result<()> {
    let mut rng = Sampler::new(11);
    let draws = [
        ("criterion", draw_td_parameters(&mut rng)),
        ("generic", draw_generic_parameters(&mut rng)),
        ("footnote", footnote_witness()),
    ];
    for (label, (a, b)) in draws {
        println!("{label}: |ababa − ba³b| = {:.2e}", td_criterion(a, b).norm());
        for kind in FormKind::ALL {
            let f = AutomorphismForm::new(kind, a, b)?;
            println!("  {kind:?}: defect {:.2e}", automorphism_defect(&f, 50, 1));
        }
    }

    let (c, d, ell, e) = draw_identification(&mut rng);
    for kind in NestedKind::ALL {
        let f = NestedForm::new(kind, c, d, ell)?;
        println!("nested {kind:?}: defect {:.2e}", automorphism_defect(&f, 50, 2));
    }
    let report = agreement_check(c, d, ell, e, 50, 3)?;
    println!("nested vs. two-parameter forms: {:.2e}", report.residual);
    Ok(())
}
