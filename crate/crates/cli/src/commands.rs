//! One function per subcommand, each producing a [`Report`].

use schubert_hodge::grading::{grade_roots, reduce_to_ti};
use schubert_hodge::hodge_rep::{hodge_decomposition, is_calabi_yau, Rcq};
use schubert_hodge::homology_oracle::{ivhs_kernel, kostant_homology_dims};
use schubert_hodge::real_form::{identify_real_form, RealFormTable};
use schubert_hodge::schubert_vhs::{
    enumerate_wphi_i, format_factors, icc_basis, icc_dimensions, maximal_schubert_vhs, EnumOptions,
    SchubertDatum,
};
use schubert_hodge::{
    default_cap, Error, Family, GradingElement, LieType, Result, RootSystem, Weight,
};
use serde_json::{json, Value};

use crate::report::{join, rational, weight, Report};
use crate::{CommandKind, QueryArgs};

struct Setup {
    rs: RootSystem,
    g: GradingElement,
    cap: usize,
    query: Value,
    title: String,
}

fn setup(kind: CommandKind, a: &QueryArgs) -> Result<Setup> {
    let family = Family::parse(&a.family)?;
    let t = LieType::new(family, a.rank)?;
    let rs = RootSystem::new(t)?;
    let g = if a.coeffs.is_empty() {
        if a.nodes.contains(&0) {
            return Err(Error::Invalid("nodes are numbered from 1".into()));
        }
        GradingElement::from_nodes(a.rank, &a.nodes.iter().map(|i| i - 1).collect::<Vec<_>>())?
    } else {
        if a.coeffs.len() != a.rank {
            return Err(Error::Invalid(format!(
                "{} coefficients given for rank {}",
                a.coeffs.len(),
                a.rank
            )));
        }
        GradingElement::new(a.coeffs.clone())
    };
    if g.coeffs().iter().all(|&c| c == 0) {
        return Err(Error::TrivialGrading);
    }
    let name = match kind {
        CommandKind::Classify => "classify",
        CommandKind::Dim => "dim",
        CommandKind::Realform => "realform",
        CommandKind::Hodge => "hodge",
        CommandKind::Cy => "cy",
        CommandKind::Icc => "icc",
        CommandKind::HomologyCheck => "homology-check",
    };
    let query = json!({
        "command": name,
        "type": t.to_string(),
        "rank": a.rank,
        "grading": g.to_string(),
        "coeffs": g.coeffs(),
        "nodes": g.marked().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "weight": if a.weight.is_empty() { Value::Null } else { json!(a.weight) },
        "degree": a.degree,
        "max_only": a.max_only,
    });
    Ok(Setup {
        title: format!("{name} {t} {g}"),
        rs,
        g,
        cap: a.cap.unwrap_or_else(default_cap),
        query,
    })
}

pub fn run(kind: CommandKind, a: &QueryArgs) -> Result<Report> {
    let s = setup(kind, a)?;
    match kind {
        CommandKind::Classify => classify(s, a),
        CommandKind::Dim => dim(s),
        CommandKind::Realform => realform(s),
        CommandKind::Hodge => hodge(s, a),
        CommandKind::Cy => cy(s, a),
        CommandKind::Icc => icc(s, a),
        CommandKind::HomologyCheck => homology_check(s, a),
    }
}

fn roots_json(roots: &[Vec<i64>]) -> Value {
    json!(roots)
}

fn classify(s: Setup, a: &QueryArgs) -> Result<Report> {
    let red = reduce_to_ti(&s.rs, &s.g)?;
    let gr = grade_roots(&s.rs, &s.g);
    let mut rows: Vec<SchubertDatum> = if a.max_only {
        maximal_schubert_vhs(&s.rs, &s.g, &gr, s.cap)?
    } else {
        let opts = EnumOptions {
            up_to_length: a.degree,
            cap: s.cap,
            conditions: true,
        };
        enumerate_wphi_i(&s.rs, &s.g, &gr, opts)?
    };
    if let Some(l) = a.degree {
        rows.retain(|d| d.dim == l);
    }
    let mut report = Report::new(
        s.query,
        s.title,
        vec![
            "word",
            "dim",
            "max",
            "X_w",
            "condition",
            "-rho_w",
            "reduced word",
        ],
    );
    if !s.g.is_reduced() {
        let t = red
            .sub
            .lie_type()
            .map_or("a semisimple subsystem".to_string(), |t| t.to_string());
        report.diagnostics.push(format!(
            "grading {} reduces to {} on {t} (nodes {})",
            s.g,
            red.grading,
            join(&red.node_map.iter().map(|i| i + 1).collect::<Vec<_>>(), ",")
        ));
    }
    for d in &rows {
        let factors = d.hs_factorization.as_ref().map(|f| format_factors(f));
        let condition = d.condition.as_ref().map(ToString::to_string);
        let mut notes = Vec::new();
        if factors.is_none() {
            notes.push("not a product of homogeneously embedded Hermitian symmetric spaces");
        }
        let module = d.ivhs_module_weight();
        report.push(
            json!({
                "word": d.w.compact_word(),
                "explicit_word": d.w.explicit_word(),
                "delta_w": roots_json(&d.delta_w),
                "dim": d.dim,
                "rho_w": weight(&d.rho_w),
                "module_weight": weight(&module),
                "maximal": d.is_maximal,
                "hs_factorization": factors,
                "factors": d.hs_factorization.as_ref().map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>()),
                "condition": condition,
                "notes": notes,
            }),
            vec![
                d.w.compact_word(),
                d.dim.to_string(),
                if d.is_maximal { "yes".into() } else { String::new() },
                factors.unwrap_or_else(|| "-".into()),
                condition.unwrap_or_default(),
                module.to_string(),
                d.w.explicit_word(),
            ],
        );
    }
    Ok(report)
}

fn dim(s: Setup) -> Result<Report> {
    let gr = grade_roots(&s.rs, &s.g);
    let mut report = Report::new(s.query, s.title, vec!["dim D", "k", "levels"]);
    let counts = gr.level_counts();
    let positive: Vec<(i64, usize)> = counts.into_iter().filter(|&(l, _)| l > 0).collect();
    report.push(
        json!({
            "dim": gr.compact_dual_dim(),
            "k": gr.k_max(),
            "levels": positive.iter().map(|&(l, n)| json!({"level": l, "count": n})).collect::<Vec<_>>(),
        }),
        vec![
            gr.compact_dual_dim().to_string(),
            gr.k_max().to_string(),
            join(&positive.iter().map(|(l, n)| format!("g{l}:{n}")).collect::<Vec<_>>(), " "),
        ],
    );
    Ok(report)
}

fn realform(s: Setup) -> Result<Report> {
    let table = RealFormTable::load_default()?;
    let res = identify_real_form(&s.rs, &s.g, &table, s.cap)?;
    let node = res.vogan.noncompact_nodes.first().map(|i| i + 1);
    let mut report = Report::new(
        s.query,
        s.title,
        vec!["real form", "witness", "noncompact node", "reduced word"],
    );
    report.push(
        json!({
            "label": res.name.label,
            "witness": res.witness.compact_word(),
            "explicit_word": res.witness.explicit_word(),
            "noncompact_node": node,
            "images": roots_json(&res.images),
            "table_version": table.version,
        }),
        vec![
            res.name.label.clone(),
            res.witness.compact_word(),
            node.map_or("-".into(), |n| n.to_string()),
            res.witness.explicit_word(),
        ],
    );
    Ok(report)
}

fn require_weight(s: &Setup, a: &QueryArgs) -> Result<Weight> {
    if a.weight.len() != s.rs.rank() {
        return Err(Error::Invalid(format!(
            "--weight needs {} fundamental coordinates",
            s.rs.rank()
        )));
    }
    Ok(Weight::from_ints(&a.weight))
}

fn rcq_name(r: Rcq) -> &'static str {
    match r {
        Rcq::Real => "real",
        Rcq::Complex => "complex",
        Rcq::Quaternionic => "quaternionic",
    }
}

fn hodge(s: Setup, a: &QueryArgs) -> Result<Report> {
    let mu = require_weight(&s, a)?;
    let h = hodge_decomposition(&s.rs, &mu, &s.g, s.cap)?;
    let mut report = Report::new(
        s.query,
        s.title,
        vec!["weight", "class", "dim U", "m", "h", "f"],
    );
    if !h.half_integral {
        report
            .diagnostics
            .push("levels are not in ½Z; h lists the occurring levels only".into());
    }
    let f = h.filtration_dims();
    report.push(
        json!({
            "weight": weight(&mu),
            "rcq": rcq_name(h.rcq),
            "dim_u": h.dim_u,
            "dim_v": h.levels.values().sum::<u64>(),
            "m": rational(&h.m),
            "half_integral": h.half_integral,
            "levels": h.levels.iter().map(|(l, d)| json!({"level": rational(l), "dim": d})).collect::<Vec<_>>(),
            "hodge_numbers": h.hodge_numbers,
            "filtration": f,
        }),
        vec![
            mu.to_string(),
            rcq_name(h.rcq).into(),
            h.dim_u.to_string(),
            h.m.to_string(),
            format!("({})", join(&h.hodge_numbers, ",")),
            format!("({})", join(&f, ",")),
        ],
    );
    Ok(report)
}

fn cy(s: Setup, a: &QueryArgs) -> Result<Report> {
    let weights = if a.weight.is_empty() {
        s.rs.fundamental_weights()
    } else {
        vec![require_weight(&s, a)?]
    };
    let mut report = Report::new(
        s.query.clone(),
        s.title.clone(),
        vec!["weight", "CY", "reason"],
    );
    for mu in weights {
        let v = is_calabi_yau(&s.rs, &mu, &s.g)?;
        report.push(
            json!({"weight": weight(&mu), "is_cy": v.is_cy, "reason": v.reason}),
            vec![
                mu.to_string(),
                if v.is_cy { "yes" } else { "no" }.into(),
                v.reason.clone(),
            ],
        );
    }
    Ok(report)
}

fn icc(s: Setup, a: &QueryArgs) -> Result<Report> {
    let gr = grade_roots(&s.rs, &s.g);
    let dims = icc_dimensions(&s.rs, &gr, s.cap)?;
    let top = dims.len() / 2;
    let lengths: Vec<usize> = match a.degree {
        Some(l) => vec![l],
        None => (0..=top).collect(),
    };
    let mut report = Report::new(s.query, s.title, vec!["length", "degree", "dim", "basis"]);
    for l in lengths {
        let basis = if l <= top {
            icc_basis(&s.rs, &gr, l, s.cap)?.basis
        } else {
            Vec::new()
        };
        let words: Vec<String> = basis.iter().map(|w| w.compact_word()).collect();
        report.push(
            json!({"length": l, "degree": 2 * l, "dim": words.len(), "basis": words}),
            vec![
                l.to_string(),
                (2 * l).to_string(),
                words.len().to_string(),
                join(&words, " "),
            ],
        );
    }
    report.diagnostics.push("odd degrees vanish".into());
    Ok(report)
}

fn homology_check(s: Setup, a: &QueryArgs) -> Result<Report> {
    let gr = grade_roots(&s.rs, &s.g);
    let top = icc_dimensions(&s.rs, &gr, s.cap)?.len() / 2;
    let lengths: Vec<usize> = match a.degree {
        Some(l) => vec![l],
        None => (0..=top.max(4)).collect(),
    };
    let mut report = Report::new(
        s.query,
        s.title,
        vec![
            "length",
            "H_l oracle",
            "H_l predicted",
            "I_l oracle",
            "I_l predicted",
            "agree",
        ],
    );
    let mut checked = false;
    let mut skipped: Vec<String> = Vec::new();
    let cell = |x: Option<u128>| x.map_or("-".into(), |v| v.to_string());
    for l in lengths {
        let k = match kostant_homology_dims(&s.rs, &s.g, l) {
            Ok(h) => Some((h.oracle_dim, h.predicted_dim)),
            Err(Error::Guard(m)) => {
                skipped.push(format!("H_{l}: {m}"));
                None
            }
            Err(e) => return Err(e),
        };
        let i = match ivhs_kernel(&s.rs, &s.g, l) {
            Ok(k) => Some((k.dim, k.predicted_dim)),
            Err(Error::Guard(m)) => {
                skipped.push(format!("I_{l}: {m}"));
                None
            }
            Err(e) => return Err(e),
        };
        if k.is_none() && i.is_none() {
            continue;
        }
        checked = true;
        let agree = k.is_none_or(|(x, y)| x == y) && i.is_none_or(|(x, y)| x == y);
        report.consistent &= agree;
        report.push(
            json!({
                "length": l,
                "homology_oracle": k.map(|p| p.0),
                "homology_predicted": k.map(|p| p.1),
                "ivhs_oracle": i.map(|p| p.0),
                "ivhs_predicted": i.map(|p| p.1),
                "agree": agree,
            }),
            vec![
                l.to_string(),
                cell(k.map(|p| p.0)),
                cell(k.map(|p| p.1)),
                cell(i.map(|p| p.0)),
                cell(i.map(|p| p.1)),
                if agree { "yes" } else { "NO" }.into(),
            ],
        );
    }
    if !checked {
        return Err(Error::Guard(skipped.join("; ")));
    }
    report.diagnostics.extend(skipped);
    Ok(report)
}
