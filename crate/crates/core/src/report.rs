//! One-shot reproduction of every headline number over GF(2), with each
//! disagreement recorded in `mismatches`.

use serde::{Deserialize, Serialize};

use crate::cochain::{cbracket, cup, differential, set_count};
use crate::cohomology::Complex;
use crate::deform::{
    build_type_ii, build_type_iii, phi_cochain, phi_forensics, psi_1, psi_2, specialize,
    DeformedBracket, PhiForensics,
};
use crate::error::Result;
use crate::field::Gf2;
use crate::rootsys::{weyl_orbit, Weight};
use crate::simplicity::{is_simple, Verdict, DEFAULT_TRIALS};
use crate::tables;
use crate::trivector::{OrbitTag, Trivector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDim {
    pub weight: Weight,
    pub h2: usize,
    pub b2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCounts {
    pub psi1_cup_psi2: usize,
    pub psi2_cup_psi1: usize,
    pub bracket: usize,
    pub d_phi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiStatus {
    pub t_degree: usize,
    pub failing_degrees: Vec<usize>,
    /// Set when construction or verification failed.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivectorRank {
    pub tag: OrbitTag,
    pub rank: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityVerdicts {
    pub seed: u64,
    pub sl6: Verdict,
    pub sl6_ideal_dim: Option<usize>,
    pub quotient: Verdict,
    pub type_ii_at_1: Verdict,
    pub type_iii_at_1: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperReport {
    pub dim_a: usize,
    pub center_dim: usize,
    pub dim_l: usize,
    pub dim_h2: usize,
    pub h2_weights: Vec<WeightDim>,
    pub h2_weights_form_weyl_orbit: bool,
    pub basic_cocycles_square_to_zero: bool,
    pub set_counts: SetCounts,
    pub d_phi_equals_bracket: bool,
    pub phi_forensics: PhiForensics,
    pub jacobi_type_ii: JacobiStatus,
    pub jacobi_type_iii: JacobiStatus,
    pub trivector_ranks: Vec<TrivectorRank>,
    pub simplicity: SimplicityVerdicts,
    pub mismatches: Vec<String>,
}

impl PaperReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, expected: T, got: T) {
    if expected != got {
        out.push(format!("{what}: expected {expected:?}, got {got:?}"));
    }
}

pub fn paper_report(seed: u64) -> Result<PaperReport> {
    let t = tables::load()?;
    let (a, l) = (&t.sl6, &t.quotient);
    let mut mm = Vec::new();

    let center = a.center();
    let z = a.element_from_labels(&[("H1", Gf2::ONE), ("H3", Gf2::ONE), ("H5", Gf2::ONE)])?;
    expect(&mut mm, "dim A", 35, a.dim());
    expect(&mut mm, "center of A", vec![z], center.clone());
    expect(&mut mm, "dim L", 34, l.dim());

    let cx = Complex::new(l)?;
    let h2 = cx.h2_summary()?;
    let h2_weights: Vec<WeightDim> = h2
        .nonzero
        .iter()
        .map(|d| WeightDim {
            weight: d.weight,
            h2: d.h2,
            b2: d.b2,
        })
        .collect();
    let orbit: Vec<Weight> = weyl_orbit(Weight([1, -1, 1, -1, 1, -1]))
        .into_iter()
        .collect();
    let found: Vec<Weight> = h2_weights.iter().map(|w| w.weight).collect();
    expect(&mut mm, "dim H²", 20, h2.total);
    expect(&mut mm, "H² weights", orbit.clone(), found.clone());
    for w in &h2_weights {
        expect(
            &mut mm,
            &format!("dim H²_{}", w.weight),
            (1, 0),
            (w.h2, w.b2),
        );
    }

    let mut squares_vanish = true;
    for (mu, psi) in &t.cocycles {
        if !cup(l, psi, psi)?.is_zero() {
            squares_vanish = false;
            mm.push(format!("ψ_{mu} ∪ ψ_{mu} ≠ 0"));
        }
    }

    let (p1, p2) = (psi_1(l)?, psi_2(l)?);
    let bracket = cbracket(l, &p1, &p2)?;
    let dphi = differential(l, &phi_cochain(l)?)?;
    let set_counts = SetCounts {
        psi1_cup_psi2: set_count(l, &cup(l, &p1, &p2)?),
        psi2_cup_psi1: set_count(l, &cup(l, &p2, &p1)?),
        bracket: set_count(l, &bracket),
        d_phi: set_count(l, &dphi),
    };
    expect(&mut mm, "sets in ψ₁ ∪ ψ₂", 28, set_counts.psi1_cup_psi2);
    expect(&mut mm, "sets in ψ₂ ∪ ψ₁", 28, set_counts.psi2_cup_psi1);
    expect(&mut mm, "sets in [ψ₁, ψ₂]", 48, set_counts.bracket);
    expect(&mut mm, "sets in dφ", 48, set_counts.d_phi);
    let d_phi_equals_bracket = dphi == bracket;
    expect(&mut mm, "dφ = [ψ₁, ψ₂]", true, d_phi_equals_bracket);

    let forensics = phi_forensics(l)?;
    expect(
        &mut mm,
        "sets in d of the first part of φ",
        14,
        forensics.part_counts[0],
    );
    expect(
        &mut mm,
        "sets in d of the parts of φ, total",
        80,
        forensics.total,
    );
    expect(
        &mut mm,
        "sets removed by coincidences",
        32,
        2 * forensics.total_matches,
    );

    let status = |f: &Result<DeformedBracket<Gf2>>| -> Result<JacobiStatus> {
        Ok(match f {
            Ok(f) => JacobiStatus {
                t_degree: f.t_degree(),
                failing_degrees: f.failing_degrees(l)?,
                error: None,
            },
            Err(e) => JacobiStatus {
                t_degree: 0,
                failing_degrees: vec![],
                error: Some(e.to_string()),
            },
        })
    };
    let (f2, f3) = (build_type_ii(l), build_type_iii(l));
    let (jacobi_type_ii, jacobi_type_iii) = (status(&f2)?, status(&f3)?);
    expect(
        &mut mm,
        "type II is a Lie bracket",
        None,
        jacobi_type_ii.error.clone(),
    );
    expect(
        &mut mm,
        "type III is a Lie bracket",
        None,
        jacobi_type_iii.error.clone(),
    );
    let mut trivector_ranks = Vec::new();
    for (tag, want) in OrbitTag::ALL.into_iter().zip([0, 3, 5, 6, 6]) {
        let w = Trivector::<Gf2>::canonical(tag);
        let class = w.classify()?.to_string();
        expect(&mut mm, &format!("rank of ({tag:?})"), want, w.rank());
        trivector_ranks.push(TrivectorRank {
            tag,
            rank: w.rank(),
            class,
        });
    }
    expect(
        &mut mm,
        "to_cocycle(II) = ψ₁",
        p1.clone(),
        Trivector::canonical(OrbitTag::II).to_cocycle(l)?,
    );
    expect(
        &mut mm,
        "to_cocycle(III) = ψ₁ + ψ₂",
        p1.add(&p2)?,
        Trivector::canonical(OrbitTag::III).to_cocycle(l)?,
    );

    let sa = is_simple(a, DEFAULT_TRIALS, seed)?;
    let verdict_at_1 = |f: &Result<DeformedBracket<Gf2>>| -> Result<Verdict> {
        match f {
            Ok(f) => Ok(is_simple(&specialize(l, f, Gf2::ONE)?, DEFAULT_TRIALS, seed)?.verdict),
            Err(_) => Ok(Verdict::Inconclusive),
        }
    };
    let simplicity = SimplicityVerdicts {
        seed,
        sl6: sa.verdict,
        sl6_ideal_dim: sa.witness.as_ref().map(Vec::len),
        quotient: is_simple(l, DEFAULT_TRIALS, seed)?.verdict,
        type_ii_at_1: verdict_at_1(&f2)?,
        type_iii_at_1: verdict_at_1(&f3)?,
    };
    expect(
        &mut mm,
        "A has a proper ideal",
        Verdict::ProperIdealFound,
        simplicity.sl6,
    );
    if let Some(w) = &sa.witness {
        expect(&mut mm, "the ideal found in A", &center, w);
    }
    expect(&mut mm, "L is simple", Verdict::Simple, simplicity.quotient);
    expect(
        &mut mm,
        "type II at t = 1 is simple",
        Verdict::Simple,
        simplicity.type_ii_at_1,
    );
    expect(
        &mut mm,
        "type III at t = 1 is simple",
        Verdict::Simple,
        simplicity.type_iii_at_1,
    );

    Ok(PaperReport {
        dim_a: a.dim(),
        center_dim: a.center().len(),
        dim_l: l.dim(),
        dim_h2: h2.total,
        h2_weights,
        h2_weights_form_weyl_orbit: found == orbit,
        basic_cocycles_square_to_zero: squares_vanish,
        set_counts,
        d_phi_equals_bracket,
        phi_forensics: forensics,
        jacobi_type_ii,
        jacobi_type_iii,
        trivector_ranks,
        simplicity,
        mismatches: mm,
    })
}
