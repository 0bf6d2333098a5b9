//! Fixture comparisons and cross-path identities, each reported as a named
//! [`Check`] whose failures name the offending cell or identity.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{
    boundary_dims, chi_eis, chi_eis_alternating, g_value, h_by_degree, h_cusp, h_eis_by_degree,
    h_total, SymbolicCount, ZkMode,
};
use crate::euler::{chi_h, chi_h_closed, chi_h_sym};
use crate::exact::Rat;
use crate::fixtures::Fixtures;
use crate::torsion::{build_all, classes, family_chi, TraceFamily};
use crate::traces::{audit_trace_matrices, sym_trace_closed, sym_traces};
use crate::weyl::{dot_action, kostant_representatives, HighestWeight, Parabolic, WeylElement};

/// Sweep bounds for the identity checks.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub n1_identities: u64,
    pub n1_odd_vanishing: u64,
    pub n1_traces: u64,
    pub sym_n: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n1_identities: 60,
            n1_odd_vanishing: 20,
            n1_traces: 60,
            sym_n: 240,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub compared: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Failure messages kept per check.
const MAX_REPORTED: usize = 20;

fn run(name: &'static str, body: impl FnOnce() -> (usize, Vec<String>)) -> Check {
    let start = Instant::now();
    let (compared, mut failures) = body();
    failures.truncate(MAX_REPORTED);
    Check {
        name,
        compared,
        failures,
        millis: start.elapsed().as_millis(),
    }
}

fn weights(n1_max: u64) -> Vec<HighestWeight> {
    HighestWeight::all_up_to(n1_max).collect()
}

fn even_weights(n1_max: u64) -> Vec<HighestWeight> {
    HighestWeight::all_up_to(n1_max).filter(|w| w.m1 % 2 == 0).collect()
}

/// Collects messages from a parallel sweep in input order.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync) -> (usize, Vec<String>) {
    let failures: Vec<String> = items.par_iter().filter_map(&f).collect();
    (items.len(), failures)
}

fn fmt_err(e: crate::Error) -> String {
    e.to_string()
}

pub fn worked_examples() -> Check {
    run("worked examples", || {
        let sym = ZkMode::Symbolic;
        let mut failures = Vec::new();
        let chi = chi_h(HighestWeight::new(20, 19));
        if chi != Rat::from(-265) {
            failures.push(format!("chi_h(20, 19) = {chi}, expected -265"));
        }
        match h_cusp(HighestWeight::new(18, 10), &sym) {
            Ok(c) if c == SymbolicCount::constant(50) => {}
            other => failures.push(format!("h_cusp(18, 10) = {other:?}, expected 50")),
        }
        match h_total(HighestWeight::new(18, 70), &sym) {
            Ok(c) if c == SymbolicCount::constant(4389) => {}
            other => failures.push(format!("h_total(18, 70) = {other:?}, expected 4389")),
        }
        (3, failures)
    })
}

pub fn euler_sym_table(fx: &Fixtures) -> Check {
    run("Sym^2k Euler characteristics", || {
        let items: Vec<(u64, i64)> = fx.euler_sym.iter().enumerate().map(|(k, &v)| (k as u64, v)).collect();
        sweep(&items, |&(k, expected)| {
            let expected = Rat::from(expected);
            let sum = chi_h(HighestWeight::new(2 * k, 0));
            let formula = chi_h_sym(2 * k);
            (sum != expected || formula != expected).then(|| {
                format!("k = {k}: table {expected}, torsion sum {sum}, Sym formula {formula}")
            })
        })
    })
}

pub fn euler_weight_table(fx: &Fixtures) -> Check {
    run("weight Euler characteristics", || {
        let cells: Vec<(HighestWeight, i64)> = fx.euler_weight.cells().map(|(w, &v)| (w, v)).collect();
        sweep(&cells, |&(w, expected)| {
            let expected = Rat::from(expected);
            let sum = chi_h(w);
            let closed = chi_h_closed(w);
            (sum != expected || closed != expected).then(|| {
                format!("cell {w}: table {expected}, torsion sum {sum}, closed form {closed}")
            })
        })
    })
}

fn symbolic_table(
    name: &'static str,
    cells: Vec<(HighestWeight, SymbolicCount)>,
    compute: fn(HighestWeight, &ZkMode) -> crate::Result<SymbolicCount>,
) -> Check {
    run(name, || {
        sweep(&cells, |(w, expected)| match compute(*w, &ZkMode::Symbolic) {
            Ok(ref v) if v == expected => None,
            Ok(v) => Some(format!("cell {w}: table {expected}, computed {v}")),
            Err(e) => Some(format!("cell {w}: {}", fmt_err(e))),
        })
    })
}

pub fn cuspidal_table(fx: &Fixtures) -> Check {
    let cells = fx.cuspidal.cells().map(|(w, v)| (w, v.0.clone())).collect();
    symbolic_table("cuspidal dimensions", cells, h_cusp)
}

pub fn h_total_table(fx: &Fixtures) -> Check {
    let cells = fx.h_total.cells().map(|(w, v)| (w, v.0.clone())).collect();
    symbolic_table("total cohomology dimensions", cells, h_total)
}

pub fn trace_sweep(bounds: Bounds) -> Check {
    run("closed-form traces", || {
        let sym_n = bounds.sym_n as usize;
        let (n_sym, mut failures) = sweep(classes(), |class| {
            let oracle = sym_traces(class, sym_n);
            (0..=sym_n)
                .find(|&n| sym_trace_closed(class, n as u64) != oracle[n])
                .map(|n| format!("T{} Sym^{n}: closed {}, oracle {}", class.id, sym_trace_closed(class, n as u64), oracle[n]))
        });
        for m in audit_trace_matrices(bounds.n1_traces) {
            failures.push(format!(
                "T{} {}[{}][{}] at {}: closed {}, oracle {}",
                m.class_id, m.matrix, m.row, m.col, m.weight, m.closed, m.oracle
            ));
        }
        let weights = HighestWeight::all_up_to(bounds.n1_traces).count();
        (n_sym * (sym_n + 1) + classes().len() * weights, failures)
    })
}

pub fn structure(fx: &Fixtures) -> Check {
    run("torsion classes and centralizers", || {
        let mut failures = Vec::new();
        if let Err(e) = build_all() {
            failures.push(fmt_err(e));
        }
        let mut compared = classes().len();
        for case in &fx.centralizers.cases {
            for &id in &case.ids {
                compared += 1;
                let class = &classes()[id - 1];
                if class.centralizer_chi != case.chi || format!("{:?}", class.case) != case.case {
                    failures.push(format!(
                        "T{id}: case {:?} chi {}, table case {} chi {}",
                        class.case, class.centralizer_chi, case.case, case.chi
                    ));
                }
            }
        }
        for fam in &fx.centralizers.families {
            compared += 1;
            let summed: Rat = fam.ids.iter().map(|&id| classes()[id - 1].centralizer_chi.clone()).sum();
            let tag = TraceFamily::ALL.iter().copied().find(|t| t.name() == fam.family);
            let members: Vec<usize> = match tag {
                Some(t) => classes().iter().filter(|c| c.family == t).map(|c| c.id).collect(),
                None => Vec::new(),
            };
            let coded = tag.map(family_chi);
            if summed != fam.chi || coded.as_ref() != Some(&fam.chi) || members != fam.ids {
                failures.push(format!(
                    "family {}: summed {summed}, coded {coded:?}, members {members:?}, table {} over {:?}",
                    fam.family, fam.chi, fam.ids
                ));
            }
        }
        (compared, failures)
    })
}

pub fn identities(bounds: Bounds) -> Vec<Check> {
    let sym = ZkMode::Symbolic;
    let odd: Vec<HighestWeight> = weights(bounds.n1_odd_vanishing).into_iter().filter(|w| w.m1 % 2 == 1).collect();
    let all = weights(bounds.n1_identities);
    let even = even_weights(bounds.n1_identities);
    vec![
        run("odd m1 torsion sums vanish", || {
            sweep(&odd, |&w| {
                let v = chi_h(w);
                (!v.is_zero()).then(|| format!("chi_h{w} = {v}"))
            })
        }),
        run("Eisenstein alternating sum", || {
            sweep(&all, |&w| {
                let table = chi_eis(w, &sym).map_err(fmt_err);
                let alt = chi_eis_alternating(w, &sym).map_err(fmt_err);
                (table != alt).then(|| format!("{w}: tables {table:?}, degrees {alt:?}"))
            })
        }),
        run("degree Euler identity", || {
            sweep(&even, |&w| match h_by_degree(w, &sym) {
                Ok(h) => {
                    let alt = h.alternating_sum();
                    let expected = SymbolicCount::constant(chi_h(w));
                    (alt != expected).then(|| format!("{w}: alternating sum {alt}, chi_h {expected}"))
                }
                Err(e) => Some(format!("{w}: {}", fmt_err(e))),
            })
        }),
        run("G identity", || {
            let two = Rat::from(2);
            sweep(&even, |&w| {
                let eis = match h_eis_by_degree(w, &sym) {
                    Ok(e) => e,
                    Err(e) => return Some(format!("{w}: {}", fmt_err(e))),
                };
                let even_sum = (eis.get(0).clone() + eis.get(2).clone() + eis.get(4).clone()) * &two;
                let g = g_value(w, &sym).map_err(fmt_err);
                let lhs = chi_eis(w, &sym).map(|c| c + eis.total()).map_err(fmt_err);
                (g.as_ref() != Ok(&even_sum) || lhs.as_ref() != Ok(&even_sum))
                    .then(|| format!("{w}: G {g:?}, h_Eis + chi_Eis {lhs:?}, 2(h0+h2+h4) {even_sum}"))
            })
        }),
        run("nonnegativity under nonvanishing", || {
            let mode = ZkMode::AssumeNonvanishing;
            sweep(&all, |&w| {
                let degrees = match h_by_degree(w, &mode) {
                    Ok(h) => h,
                    Err(e) => return Some(format!("{w}: {}", fmt_err(e))),
                };
                let boundary = boundary_dims(w);
                let eis = h_eis_by_degree(w, &mode).ok()?;
                degrees
                    .0
                    .iter()
                    .chain(&boundary.0)
                    .chain(&eis.0)
                    .find(|c| c.resolved().is_none_or(|v| v.is_negative() || !v.is_integer()))
                    .map(|c| format!("{w}: entry {c}"))
            })
        }),
    ]
}

pub fn weyl_table(fx: &Fixtures) -> Check {
    run("Weyl group table", || {
        let mut failures = Vec::new();
        let mut compared = 0;
        for (row, w) in fx.weyl.rows.iter().zip(WeylElement::ALL) {
            compared += 1;
            let word: Vec<String> = w.word().iter().map(|s| format!("{s:?}").to_lowercase()).collect();
            if row.label != w.label() || row.word != word || row.length != w.length() {
                failures.push(format!("{}: word {:?} length {}", row.label, word, w.length()));
            }
            for weight in weights(40) {
                let p = dot_action(w, weight);
                let (m1, m2) = (weight.m1 as i64, weight.m2 as i64);
                let a = row.a[0] * m1 + row.a[1] * m2 + row.a[2];
                let b = row.b[0] * m1 + row.b[1] * m2 + row.b[2];
                compared += 1;
                if (p.a, p.b) != (a, b) {
                    failures.push(format!("{} . {weight} = {p}, table ({a}, {b})", row.label));
                }
            }
        }
        let labels = |p| -> Vec<String> { kostant_representatives(p).iter().map(|w| w.label()).collect() };
        if labels(Parabolic::P1) != fx.weyl.kostant.p1 || labels(Parabolic::P2) != fx.weyl.kostant.p2 {
            failures.push("Kostant representatives differ from the table".into());
        }
        (compared + 2, failures)
    })
}

/// Every check, in a fixed order.
pub fn run_all(fx: &Fixtures, bounds: Bounds) -> Vec<Check> {
    let mut out = vec![
        worked_examples(),
        euler_sym_table(fx),
        euler_weight_table(fx),
        cuspidal_table(fx),
        h_total_table(fx),
        trace_sweep(bounds),
        structure(fx),
    ];
    out.extend(identities(bounds));
    out.push(weyl_table(fx));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes_on_embedded_fixtures() {
        let fx = Fixtures::embedded().unwrap();
        let bounds = Bounds {
            n1_identities: 24,
            n1_odd_vanishing: 12,
            n1_traces: 24,
            sym_n: 60,
        };
        let checks = run_all(&fx, bounds);
        assert_eq!(checks.len(), 13);
        for c in &checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
        }
    }
}
