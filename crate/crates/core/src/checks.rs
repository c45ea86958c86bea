//! Named checks, each a claim with a runner over a weight p.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::lgroup::{quotient, LElt, WeightTriple};
use crate::report::Report;
use crate::{algebras, arquiver, grothendieck, homspaces, ladder, lgroup};

pub struct CheckEntry {
    pub name: &'static str,
    pub claim: &'static str,
    pub p_min: usize,
    pub runner: fn(usize) -> Result<Report>,
}

pub const REGISTRY: &[CheckEntry] = &[
    CheckEntry {
        name: "identities",
        claim: "L/Zx3 is cyclic of order 6 generated by omega; omega-multiples and x-bar identities",
        p_min: 2,
        runner: identities,
    },
    CheckEntry {
        name: "fading",
        claim: "maps from persistent into fading line bundles factor through x1, x2^2 or x1, x2",
        p_min: 2,
        runner: fading,
    },
    CheckEntry {
        name: "table1",
        claim: "each omega-twist of the cover of E(O) has a persistent summand",
        p_min: 2,
        runner: table1,
    },
    CheckEntry {
        name: "k0",
        claim: "K0(coh X) is free of rank p+4 on line bundles; Coxeter matrix realizes omega; rank gap p-6",
        p_min: 2,
        runner: k0,
    },
    CheckEntry {
        name: "additivity",
        claim: "displayed exact sequences are additive in K0",
        p_min: 2,
        runner: additivity,
    },
    CheckEntry {
        name: "derived",
        claim: "A(2(p-1),3) ~ B(2,p-1) and A(2p-3,3) ~ B'(2,p-1) have equal Coxeter polynomials",
        p_min: 2,
        runner: derived,
    },
    CheckEntry {
        name: "dynkin",
        claim: "stable category is derived Dynkin (p<=5), canonical (p=6); Coxeter polynomial of coh X",
        p_min: 2,
        runner: dynkin,
    },
    CheckEntry {
        name: "fcy",
        claim: "fractional Calabi-Yau dimension (lcm(3,p)(1-2chi))/lcm(3,p)",
        p_min: 2,
        runner: fcy,
    },
    CheckEntry {
        name: "coxeter",
        claim: "Coxeter number 3 (p=2), lcm(6,p) otherwise; phi^(h/2) = -I iff p odd",
        p_min: 2,
        runner: coxeter,
    },
    CheckEntry {
        name: "ladder",
        claim: "projective hom table; upper simples are the simples in nil(p); projectives vanish stably",
        p_min: 2,
        runner: nil_structure,
    },
    CheckEntry {
        name: "tilting",
        claim: "rectangle tilting object with stable endomorphisms B(2,p-1)",
        p_min: 2,
        runner: tilting,
    },
    CheckEntry {
        name: "fd",
        claim: "fundamental domain: 6 line bundles, 2 persistent, 6 Auslander bundles",
        p_min: 3,
        runner: fd,
    },
    CheckEntry {
        name: "quiver",
        claim: "Auslander-Reiten shapes: ZD~ windows, tubes of period 6, p-6 wild components",
        p_min: 2,
        runner: quiver,
    },
];

pub fn find(name: &str) -> Option<&'static CheckEntry> {
    REGISTRY.iter().find(|e| e.name == name)
}

/// Runs a check for one p; errors become a failed line.
pub fn run(entry: &CheckEntry, p: usize) -> Report {
    if p < entry.p_min {
        let mut r = Report::new(format!("{}, p={p}", entry.name));
        r.info("skipped", format!("needs p >= {}", entry.p_min));
        return r;
    }
    match (entry.runner)(p) {
        Ok(r) => r,
        Err(e) => {
            let mut r = Report::new(format!("{}, p={p}", entry.name));
            r.check(false, "error", format!("{e}"));
            r
        }
    }
}

fn identities(p: usize) -> Result<Report> {
    lgroup::identity_suite(p as i64)
}

fn fading(p: usize) -> Result<Report> {
    homspaces::fading_generation_check(p as i64, 4)
}

fn table1(p: usize) -> Result<Report> {
    homspaces::table1_check(p as i64)
}

fn k0(p: usize) -> Result<Report> {
    grothendieck::lattice_report(p as i64)
}

fn additivity(p: usize) -> Result<Report> {
    grothendieck::sequence_additivity_suite(p as i64, 50, 1)
}

fn derived(p: usize) -> Result<Report> {
    algebras::check_derived_pairs(p)
}

fn dynkin(p: usize) -> Result<Report> {
    algebras::check_dynkin_tubular(p)
}

fn fcy(p: usize) -> Result<Report> {
    algebras::fcy_check(p)
}

fn coxeter(p: usize) -> Result<Report> {
    algebras::coxeter_number_check(p)
}

fn nil_structure(p: usize) -> Result<Report> {
    let mut r = ladder::projective_hom_report(p);
    r.extend(ladder::nil_simples_report(p));
    Ok(r)
}

fn tilting(p: usize) -> Result<Report> {
    ladder::verify_rect_tilting(p)
}

fn fd(p: usize) -> Result<Report> {
    let fd = arquiver::fd_counts(p)?;
    let mut r = Report::new(format!("fundamental domain, p={p}"));
    let show = |v: &[LElt]| v.iter().map(|x| x.expr()).collect::<Vec<String>>().join(", ");
    r.check(fd.lines.len() == 6, "6 line bundles with 0 <= slope < delta(x3)", show(&fd.lines));
    r.check(fd.persistent.len() == 2, "2 of them persistent", show(&fd.persistent));
    let bars: Vec<_> = fd.persistent.iter().map(|x| x.bar_class()).collect::<Result<_>>()?;
    let split = bars.contains(&lgroup::BarClass::UpperBar) && bars.contains(&lgroup::BarClass::LowerBar);
    r.check(split, "one persistent bundle on each bar", "");
    r.check(
        fd.auslander.len() == 6,
        "6 Auslander bundles E(L) in the slope window",
        show(&fd.auslander),
    );
    Ok(r)
}

fn quiver(p: usize) -> Result<Report> {
    let mut r = Report::new(format!("Auslander-Reiten quiver, p={p}"));
    let w = WeightTriple::two_three(p as i64)?;
    match p {
        2..=5 => {
            let q = arquiver::build_domestic(p, 0..8)?;
            let lines = quotient(LElt::omega(w))?.len();
            r.check(q.orbit_count() == p + 4, "p+4 tau-orbits", format!("{}", q.orbit_count()));
            r.check(
                q.line_orbits.len() == lines,
                "rank-one orbits = |L/Z omega|",
                format!("{} vs {lines}", q.line_orbits.len()),
            );
            r.check(
                q.mesh_failures().is_empty() && q.rank_failures().is_empty(),
                "meshes and rank additivity",
                "",
            );
            let m = arquiver::mark(&q)?;
            let d = arquiver::delete_fading(&m);
            r.check(
                d.vertices.len() + m.count(arquiver::Mark::Fading) == m.vertices.len(),
                "deletion removes the fading vertices",
                "",
            );
        }
        6 => {
            let t = arquiver::mark(&arquiver::build_tube(6, 6))?;
            r.check(
                t.mesh_failures().is_empty() && t.rank_failures().is_empty(),
                "tube meshes and rank additivity",
                "",
            );
            let survivors = arquiver::delete_fading(&t).vertices.iter().filter(|v| v.line).count();
            r.check(survivors == 2, "2 mouth vertices survive per period", format!("{survivors}"));
        }
        _ => {
            let q = arquiver::build_wild_window(p, 0..12, 6)?;
            r.check(
                q.components == p - 6,
                "p-6 components contain line bundles",
                format!("{}", q.components),
            );
            r.check(q.mesh_failures().is_empty(), "ZA-infinity meshes", "");
            let m = arquiver::mark(&q)?;
            r.check(
                m.count(arquiver::Mark::Persistent) * 3 == m.vertices.iter().filter(|v| v.line).count(),
                "a third of the boundary persists",
                "",
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        for (i, a) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|b| b.name != a.name));
        }
        assert!(find("fcy").is_some() && find("nope").is_none());
    }

    #[test]
    fn everything_passes_for_small_p() {
        for e in REGISTRY {
            for p in 2..=7 {
                let r = run(e, p);
                assert!(r.passed(), "{r}");
            }
        }
    }
}
