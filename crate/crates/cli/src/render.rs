//! Human-readable rendering of the report types.

use diracpoint::{
    format_rational, AnalysisReport, CatalogRow, GenusReport, KTypesReport, SweepSummary,
};

pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(".")
    }
}

pub fn render_analysis(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        out.push_str(&format!("{k:<18}: {v}\n"));
    };
    line("space", report.space.clone());
    line("verdict", format!("{:?}", report.verdict));
    line("reason", format!("{:?}", report.reason));
    match &report.genus {
        Some(g) => {
            line(
                "A-hat",
                format!(
                    "{} (up to orientation), |A-hat| = {}, nonzero = {}",
                    format_rational(&g.value_up_to_sign),
                    format_rational(&g.abs_value()),
                    g.nonzero
                ),
            );
            line("rho_k regular", g.rho_k_regular.to_string());
        }
        None => line("A-hat", "not computed (unequal rank)".to_string()),
    }
    if let Some(kernel) = &report.kernel {
        line(
            "kernel",
            format!(
                "discrete series, Harish-Chandra parameter {}",
                kernel.harish_chandra_param
            ),
        );
        line(
            "  minimal K-type",
            format!("{} (multiplicity 1)", kernel.blattner),
        );
        line("  witness word", word_string(&kernel.witness_word));
    } else {
        line("kernel", "none (no point spectrum)".to_string());
    }
    if let Some(tag) = &report.classification {
        line("classification", format!("{tag:?}"));
    }
    line(
        "flags",
        format!(
            "hermitian = {}, dual spin = {}, dim mod 4 = {}",
            report.corollary_flags.hermitian,
            report.corollary_flags.dual_spin,
            report.corollary_flags.dim_mod_4
        ),
    );
    for note in &report.notes {
        line("note", note.clone());
    }
    out
}

pub fn render_genus(entry: &str, g: &GenusReport) -> String {
    format!(
        "entry           : {entry}\n\
         A-hat           : {} (up to orientation)\n\
         |A-hat|         : {}\n\
         nonzero         : {}\n\
         rho_k regular   : {}\n",
        format_rational(&g.value_up_to_sign),
        format_rational(&g.abs_value()),
        g.nonzero,
        g.rho_k_regular
    )
}

pub fn render_ktypes(report: &KTypesReport) -> String {
    let mut rows: Vec<[String; 4]> = vec![[
        "word".into(),
        "sign".into(),
        "dim".into(),
        "highest weight".into(),
    ]];
    for kt in &report.ktypes {
        rows.push([
            word_string(&kt.word),
            format!("{:+}", kt.sign),
            kt.dim.to_string(),
            kt.highest_weight.to_string(),
        ]);
    }
    let mut out = format!(
        "spinor K-type decomposition of {} (|Delta_p^+| = {})\n",
        report.space, report.noncompact_positive_count
    );
    out.push_str(&render_table(&rows));
    out.push_str(&format!(
        "total dim = {} (expected 2^{} = {})\n",
        report.total_dim, report.noncompact_positive_count, report.expected_total
    ));
    out
}

pub fn render_sweep(summary: &SweepSummary) -> String {
    let mut rows: Vec<[String; 7]> = vec![[
        "name".into(),
        "family".into(),
        "rank".into(),
        "dim".into(),
        "rho_k regular".into(),
        "|A-hat|".into(),
        "verdict".into(),
    ]];
    for row in &summary.rows {
        rows.push([
            row.name.clone(),
            row.family.to_string(),
            if row.equal_rank {
                row.rank_g.to_string()
            } else {
                format!("{}>{}", row.rank_g, row.rank_k)
            },
            row.dim_m.to_string(),
            row.rho_k_regular
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
            row.a_hat_abs
                .as_ref()
                .map(format_rational)
                .unwrap_or_else(|| "-".into()),
            format!("{:?} ({:?})", row.verdict, row.reason),
        ]);
    }
    let mut out = format!("classification sweep, rank <= {}\n", summary.max_rank);
    out.push_str(&render_table(&rows));
    if summary.truncated {
        out.push_str("note: results truncated by the resource guard\n");
    }
    out
}

pub fn render_catalog(rows: &[CatalogRow]) -> String {
    let mut table: Vec<[String; 7]> = vec![[
        "name".into(),
        "family".into(),
        "space".into(),
        "rank".into(),
        "dim".into(),
        "hermitian".into(),
        "dual spin".into(),
    ]];
    for r in rows {
        table.push([
            r.name.clone(),
            r.family.to_string(),
            r.description.clone(),
            if r.equal_rank {
                r.rank_g.to_string()
            } else {
                format!("{}>{}", r.rank_g, r.rank_k)
            },
            r.dim_m.to_string(),
            r.hermitian.to_string(),
            r.dual_spin.to_string(),
        ]);
    }
    render_table(&table)
}

fn render_table<const N: usize>(rows: &[[String; N]]) -> String {
    let mut widths = [0usize; N];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(widths.iter()) {
            line.push_str(&format!("{cell:<w$}  ", w = *w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
