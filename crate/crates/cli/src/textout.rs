//! Human-readable rendering of the reports.

use crate::commands::Report;
use crate::reports::*;

fn fmt_set(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn fmt_list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn fmt_i64s(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render(report: &Report) -> String {
    match report {
        Report::Lattice(r) => lattice(r),
        Report::Supersolvable(r) => supersolvable(r),
        Report::Hypersolvable(r) => hypersolvable(r),
        Report::Holonomy(r) => holonomy(r),
        Report::Verify(r) => verify(r),
        Report::Deform(r) => deform(r),
    }
}

fn chain_line(out: &mut String, chain: &Option<Vec<Vec<usize>>>, exps: &Option<Vec<usize>>) {
    match chain {
        Some(c) => {
            let parts: Vec<String> = c.iter().map(|s| fmt_set(s)).collect();
            out.push_str(&format!("modular chain: {}\n", parts.join(" < ")));
        }
        None => out.push_str("modular chain: none\n"),
    }
    if let Some(e) = exps {
        out.push_str(&format!("exponents: {}\n", fmt_list(e)));
    }
}

fn lattice(r: &LatticeReport) -> String {
    let mut out = format!("dim {}, {} hyperplanes, rank {}\n", r.dim, r.n, r.rank);
    out.push_str(&format!("flats: {} total\n", r.flats.len()));
    for rank in 0..=r.rank {
        let row: Vec<String> = r
            .flats
            .iter()
            .filter(|f| f.rank == rank)
            .map(|f| fmt_set(&f.closure))
            .collect();
        out.push_str(&format!("  rank {rank}: {}\n", row.join(" ")));
    }
    out.push_str(&format!("supersolvable: {}\n", r.supersolvable));
    chain_line(&mut out, &r.modular_chain, &r.exponents);
    out
}

fn supersolvable(r: &SupersolvableReport) -> String {
    let mut out = format!(
        "dim {}, {} hyperplanes, rank {}\nsupersolvable: {}\n",
        r.dim, r.n, r.rank, r.supersolvable
    );
    chain_line(&mut out, &r.modular_chain, &r.exponents);
    out
}

fn hypersolvable(r: &HypersolvableReport) -> String {
    let mut out = format!("hypersolvable: {}\n", r.hypersolvable);
    if let (Some(series), Some(kinds)) = (&r.series, &r.extension_kinds) {
        for (i, step) in series.iter().enumerate() {
            let kind = if i == 0 { "start" } else { kinds[i - 1].as_str() };
            out.push_str(&format!("  step {}: {} ({kind})\n", i + 1, fmt_set(step)));
        }
    }
    if let Some(e) = &r.exponents {
        out.push_str(&format!("exponents: {}\n", fmt_list(e)));
    }
    if let (Some(ell), Some(s)) = (r.ell, r.s) {
        out.push_str(&format!("length = {ell}, singular extensions s = {s}\n"));
    }
    out
}

fn holonomy(r: &HolonomyReport) -> String {
    let mut out = format!("n = {}, max degree N = {}\n", r.n, r.max_degree);
    out.push_str(&format!("phi: {}\n", fmt_list(&r.phi)));
    out.push_str(&format!("ideal dims: {}\n", fmt_list(&r.ideal_dims)));
    match &r.lcs_check {
        Some(c) => out.push_str(&format!(
            "lcs formula: {}  lhs {}  rhs {}\n",
            verdict(c.pass),
            fmt_i64s(&c.lhs),
            fmt_i64s(&c.rhs)
        )),
        None => out.push_str("lcs formula: not applicable (no exponents)\n"),
    }
    match &r.decomposition_check {
        Some(c) => out.push_str(&format!(
            "decomposition: {} against exponents {} ({})\n",
            verdict(c.pass),
            fmt_list(&c.exponents),
            c.source
        )),
        None => out.push_str("decomposition: not applicable (no exponents)\n"),
    }
    match &r.kernel_report {
        Some(k) => {
            out.push_str(&format!(
                "kernel split: vertical {}, horizontal {}: {}\n",
                fmt_set(&k.vertical),
                fmt_set(&k.horizontal),
                verdict(k.pass)
            ));
            for d in &k.per_degree {
                out.push_str(&format!(
                    "  degree {}: phi {} = {} + kernel {} (free words {}, meet {}) bracket {}\n",
                    d.degree,
                    d.phi_parent,
                    d.phi_sub,
                    d.kernel_dim,
                    d.subalgebra_dim,
                    d.ideal_meet_dim,
                    verdict(d.bracket_ok)
                ));
            }
        }
        None => out.push_str("kernel split: no modular corank-1 flat\n"),
    }
    out
}

fn verify(r: &VerifyReport) -> String {
    let mut out = format!("classification: {}\n", r.classification);
    if let Some(e) = &r.exponents_chain {
        out.push_str(&format!("exponents (modular chain): {}\n", fmt_list(e)));
    }
    if let Some(e) = &r.exponents_series {
        out.push_str(&format!("exponents (composition series): {}\n", fmt_list(e)));
    }
    out.push_str(&format!("phi: {}\n", fmt_list(&r.phi)));
    if let Some(c) = &r.lcs_check {
        out.push_str(&format!(
            "lcs formula: {}  lhs {}  rhs {}\n",
            verdict(c.pass),
            fmt_i64s(&c.lhs),
            fmt_i64s(&c.rhs)
        ));
    }
    if let Some(c) = &r.decomposition_check {
        out.push_str(&format!("decomposition: {}\n", verdict(c.pass)));
    }
    out.push_str(&format!("verify: {}\n", verdict(r.pass)));
    out
}

fn deform(r: &DeformReport) -> String {
    let mut out = format!(
        "seed {}, added coordinates s = {}, deformed dim {}, {} hyperplanes\n",
        r.seed, r.s, r.dim, r.n
    );
    out.push_str(&format!("rank-2 lattice preserved: {}\n", verdict(r.rank2_preserved)));
    out.push_str(&format!(
        "deformation supersolvable: {} (rank {}, exponents {})\n",
        verdict(r.supersolvable),
        r.rank,
        fmt_list(&r.exponents)
    ));
    out.push_str(&format!("wrote {}\nwrote {}\n", r.output, r.sidecar));
    out
}
