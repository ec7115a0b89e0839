use icosa_core::group::{ELEMENT_COUNT, ROTATION_COUNT};
use icosa_core::huckel::{
    self, c240_block_tables, c60_block_comparison, decompose, BasisChoice, TableComparison,
};
use icosa_core::linalg::max_abs_diff;
use icosa_core::sab::{b12h12_space, independent_sets_report};
use icosa_core::verify::run_all;
use icosa_core::{CMatrix, Context, IcosahedralGroup, IrrepLabel, IrrepSet, ParityIrrep, SabIrrep, SymmetryMode};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::output::{complex, document, matrix, num, nums, text, Verification};
use crate::{
    BasesArgs, Cli, CliError, Command, Format, GroupCommand, HuckelCommand, IrrepsArgs, IrrepsCommand, SabCommand,
};

type Outcome = Result<(String, bool), CliError>;

enum Body {
    Json(Value),
    Csv(String),
}

pub fn run(cli: &Cli, echo: &[String]) -> Outcome {
    let mut v = Verification::new(cli.tol);
    let payload = match &cli.command {
        Command::Group(GroupCommand::Table { parity }) => {
            let g = IcosahedralGroup::new()?;
            if cli.format == Format::Csv {
                return Ok((group_table_csv(&g, *parity)?, true));
            }
            group_table(&g, *parity, &mut v)
        }
        Command::Irreps(args) => match irreps(cli, args, &mut v)? {
            Body::Json(p) => p,
            Body::Csv(text) => return Ok((text, v.passed())),
        },
        Command::Bases(args) => {
            json_only(cli)?;
            bases(args, &mut v)?
        }
        Command::Sab(SabCommand::B12h12 { quanta, vectors, parity }) => {
            json_only(cli)?;
            let ctx = Context::new()?;
            let mode = if *parity { SymmetryMode::WithParity } else { SymmetryMode::Rotations };
            let space = b12h12_space(&ctx.group, *quanta, mode)?;
            let (report, families) = independent_sets_report(&ctx.bases, &space, 0, mode)?;
            v.exact("sets x dim = orbit size", report.is_complete());
            let gens = [ctx.group.lookup("T0")?, ctx.group.lookup("S1")?];
            let equivariance = families
                .iter()
                .map(|f| f.equivariance_deviation(&ctx.irreps, &space, &gens))
                .fold(0.0, f64::max);
            v.value("equivariance under T0, S1", equivariance);
            let mut p = json!({
                "seed": quanta.to_string(),
                "mode": if *parity { "Ih" } else { "I" },
                "orbit_size": report.orbit_size,
                "multiplicities": report.entries.iter().map(|e| json!({
                    "irrep": e.irrep.to_string(),
                    "sets": e.sets,
                    "dim": e.dim,
                    "svd_rank": e.svd_rank,
                })).collect::<Vec<_>>(),
                "total_sets": report.total_sets,
                "total_vectors": report.total_vectors,
                "total_dimension": report.total_dimension,
            });
            if *vectors {
                let labels = space.labels();
                let list: Vec<Value> = families
                    .iter()
                    .flat_map(|f| f.iter())
                    .map(|s| {
                        json!({
                            "irrep": s.irrep.to_string(),
                            "mu": s.mu,
                            "tau": s.tau,
                            "nu": s.nu,
                            "coefficients": sparse(labels, &s.coeffs),
                        })
                    })
                    .collect();
                p["vectors"] = Value::Array(list);
            }
            p
        }
        Command::Huckel(cmd) => {
            json_only(cli)?;
            huckel_payload(cmd, &mut v)?
        }
        Command::Verify => {
            json_only(cli)?;
            let report = run_all(cli.tol);
            let mut grid = Map::new();
            for c in &report.checks {
                v.push(format!("{}: {}", c.module, c.name), c.value, c.tolerance, c.passed);
                let row = grid
                    .entry(c.module)
                    .or_insert_with(|| Value::Object(Map::new()));
                row[&c.name] = json!(if c.passed { "pass" } else { "fail" });
            }
            json!({ "tolerance": num(cli.tol), "matrix": grid })
        }
    };
    let doc = document(echo, payload, &v);
    let mut out = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    out.push('\n');
    Ok((out, v.passed()))
}

fn json_only(cli: &Cli) -> Result<(), CliError> {
    if cli.format == Format::Csv {
        return Err(CliError::Usage("CSV output is only available for `group table` and `irreps characters`".into()));
    }
    Ok(())
}

fn element_count(parity: bool) -> usize {
    if parity {
        ELEMENT_COUNT
    } else {
        ROTATION_COUNT
    }
}

fn group_table(g: &IcosahedralGroup, parity: bool, v: &mut Verification) -> Value {
    let n = element_count(parity);
    let labels: Vec<&str> = (0..n).map(|x| g.label(x)).collect();
    let table: Vec<Vec<&str>> = (0..n).map(|x| (0..n).map(|y| g.label(g.multiply(x, y))).collect()).collect();
    let latin = (0..n).all(|x| {
        let mut seen = vec![false; n];
        (0..n).all(|y| {
            let z = g.multiply(x, y);
            z < n && !std::mem::replace(&mut seen[z], true)
        })
    });
    v.exact("every row is a permutation", latin);
    v.exact("identity row", (0..n).all(|y| g.multiply(g.identity(), y) == y));
    let decompositions: Vec<Value> = (0..n)
        .map(|x| {
            let d = g.canonical_decomposition(x % ROTATION_COUNT);
            json!({ "element": g.label(x), "parity": x >= ROTATION_COUNT, "exponents": [d.a, d.b, d.c, d.d] })
        })
        .collect();
    let mut classes: Vec<Value> = Vec::new();
    for c in g.conjugacy_classes() {
        classes.push(json!({
            "label": c.label,
            "size": c.members.len(),
            "members": c.members.iter().map(|&m| g.label(m)).collect::<Vec<_>>(),
        }));
        if parity {
            classes.push(json!({
                "label": format!("P{}", c.label),
                "size": c.members.len(),
                "members": c.members.iter().map(|&m| g.label(g.multiply(g.parity_op(), m))).collect::<Vec<_>>(),
            }));
        }
    }
    json!({
        "order": n,
        "labels": labels,
        "table": table,
        "decompositions": decompositions,
        "classes": classes,
    })
}

fn csv_error(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(format!("CSV output: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

fn group_table_csv(g: &IcosahedralGroup, parity: bool) -> Result<String, CliError> {
    let n = element_count(parity);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["x\\y".to_string()];
    header.extend((0..n).map(|x| g.label(x).to_string()));
    w.write_record(&header).map_err(csv_error)?;
    for x in 0..n {
        let mut row = vec![g.label(x).to_string()];
        row.extend((0..n).map(|y| g.label(g.multiply(x, y)).to_string()));
        w.write_record(&row).map_err(csv_error)?;
    }
    finish_csv(w)
}

fn normalize_element(label: &str) -> String {
    label.replace(['·', '*'], "")
}

fn irreps(cli: &Cli, args: &IrrepsArgs, v: &mut Verification) -> Result<Body, CliError> {
    let g = IcosahedralGroup::new()?;
    let r = IrrepSet::new(&g);
    if let Some(IrrepsCommand::Characters) = args.command {
        return characters(cli, &g, &r, v);
    }
    json_only(cli)?;
    let (Some(rep), Some(element)) = (args.rep, args.element.as_deref()) else {
        return Err(CliError::Usage("--rep and --element are required".into()));
    };
    let x = g.lookup(&normalize_element(element))?;
    let m: CMatrix = match rep {
        SabIrrep::Plain(l) if x < ROTATION_COUNT => r.rep_matrix(l, x).clone(),
        SabIrrep::Plain(l) => {
            return Err(CliError::Usage(format!(
                "{} is not a rotation; use a parity irrep such as {l}g",
                g.label(x)
            )))
        }
        SabIrrep::Parity(p) => r.parity_rep_matrix(p, x),
    };
    let d = m.nrows();
    v.value("unitarity", max_abs_diff(&(&m * m.adjoint()), &CMatrix::identity(d, d)));
    let order = (1..=10).find(|&k| g.power(x % ROTATION_COUNT, k) == g.identity()).unwrap_or(1);
    let mut power = CMatrix::identity(d, d);
    let rot = r.rep_matrix(rep.base(), x % ROTATION_COUNT);
    for _ in 0..order {
        power = &power * rot;
    }
    v.value(format!("D(R)^{order} = 1"), max_abs_diff(&power, &CMatrix::identity(d, d)));
    Ok(Body::Json(json!({
        "rep": rep.to_string(),
        "element": g.label(x),
        "dim": d,
        "matrix": matrix(&m),
    })))
}

fn characters(cli: &Cli, g: &IcosahedralGroup, r: &IrrepSet, v: &mut Verification) -> Result<Body, CliError> {
    let table = r.character_table(g)?;
    let classes = g.conjugacy_classes();
    let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    let mut worst = 0.0f64;
    for (a, ra) in table.iter().enumerate() {
        for (b, rb) in table.iter().enumerate() {
            let s: f64 = (0..sizes.len()).map(|k| sizes[k] as f64 * ra[k] * rb[k]).sum();
            let want = if a == b { ROTATION_COUNT as f64 } else { 0.0 };
            worst = worst.max((s - want).abs());
        }
    }
    v.value("row orthogonality", worst);
    if cli.format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["irrep".to_string()];
        header.extend(classes.iter().map(|c| c.label.clone()));
        w.write_record(&header).map_err(csv_error)?;
        let mut size_row = vec!["size".to_string()];
        size_row.extend(sizes.iter().map(usize::to_string));
        w.write_record(&size_row).map_err(csv_error)?;
        for (l, row) in IrrepLabel::ALL.iter().zip(&table) {
            let mut rec = vec![l.to_string()];
            rec.extend(row.iter().map(|&c| text(c)));
            w.write_record(&rec).map_err(csv_error)?;
        }
        return Ok(Body::Csv(finish_csv(w)?));
    }
    Ok(Body::Json(json!({
        "classes": classes.iter().map(|c| json!({ "label": c.label, "size": c.members.len() })).collect::<Vec<_>>(),
        "irreps": IrrepLabel::ALL.iter().zip(&table).map(|(l, row)| json!({
            "label": l.to_string(),
            "dim": l.dim(),
            "characters": nums(row),
        })).collect::<Vec<_>>(),
    })))
}

fn sparse(labels: &[String], coeffs: &[Complex64]) -> Value {
    let mut m = Map::new();
    for (label, z) in labels.iter().zip(coeffs) {
        if z.norm() > 1e-12 {
            m.insert(label.clone(), complex(*z));
        }
    }
    Value::Object(m)
}

fn bases(args: &BasesArgs, v: &mut Verification) -> Result<Value, CliError> {
    let ctx = Context::new()?;
    let g = &ctx.group;
    let l = args.rep;
    let rows = l.rows();
    let mut list = Vec::new();
    let mut exact = true;
    for &mu in rows {
        for &nu in rows {
            let b = ctx.bases.get(l, mu, nu);
            exact &= b.coefficients.reconstruct(g)? == b.vector;
            let (vector, n) = match args.parity {
                Some(p) => (ctx.bases.parity_basis(ParityIrrep::new(l, p), mu, nu), ELEMENT_COUNT),
                None => (b.vector.clone(), ROTATION_COUNT),
            };
            let labels: Vec<String> = (0..n).map(|x| g.label(x).to_string()).collect();
            let mut coeffs = Map::new();
            for (label, z) in labels.iter().zip(vector.coeffs()) {
                coeffs.insert(label.clone(), complex(*z));
            }
            list.push(json!({
                "mu": mu,
                "nu": nu,
                "normalization": num(b.coefficients.normalization),
                "combination": b.coefficients.combination.iter().map(|&(family, c)| json!({
                    "family": family,
                    "coefficient": complex(c),
                })).collect::<Vec<_>>(),
                "class_eigenvalue": num(b.class_eigenvalue),
                "coefficients": coeffs,
            }));
        }
    }
    v.exact("reduction coefficients rebuild every basis", exact);
    v.value("orthonormality of all 60 bases", ctx.bases.orthonormality_defect());
    let (left, right) = ctx.bases.transformation_deviation(g, &ctx.irreps);
    v.value("left transformation law", left);
    v.value("right transformation law", right);
    let rep = match args.parity {
        Some(p) => ParityIrrep::new(l, p).to_string(),
        None => l.to_string(),
    };
    Ok(json!({
        "rep": rep,
        "phi_seeds": ["E", "S11", "S5", "S10"],
        "bases": list,
    }))
}

fn block_json(c: &TableComparison) -> Value {
    json!({
        "irrep": c.irrep.to_string(),
        "dim": c.block.dim,
        "matrix": matrix(&c.block.matrix),
        "eigenvalues": nums(&c.block.eigenvalues),
        "reference_entry_deviation": num(c.entry_deviation),
        "reference_spectrum_deviation": num(c.spectrum_deviation),
        "row_deviation": num(c.block.row_deviation),
    })
}

fn huckel_payload(cmd: &HuckelCommand, v: &mut Verification) -> Result<Value, CliError> {
    let ctx = Context::new()?;
    let (model, tables, block, arrangement) = match *cmd {
        HuckelCommand::C60 { alpha, block } => {
            (huckel::build_c60(&ctx.group, alpha)?, c60_block_comparison(&ctx, alpha)?, block, None)
        }
        HuckelCommand::C240 { arrangement, alpha, block } => (
            huckel::build_c240(&ctx.group, arrangement, alpha)?,
            c240_block_tables(&ctx, arrangement, alpha)?,
            block,
            Some(arrangement),
        ),
    };
    let reference = decompose(&ctx, &model, BasisChoice::Reference)?;
    let generated = decompose(&ctx, &model, BasisChoice::Generated)?;
    let shown: Vec<&TableComparison> = tables
        .iter()
        .filter(|t| block.is_none_or(|b| b == t.irrep))
        .collect();
    for t in &shown {
        v.value(format!("{} block matches its closed form", t.irrep), t.entry_deviation);
        v.value(format!("{} block is independent of the row", t.irrep), t.block.row_deviation);
    }
    v.value("block union = dense spectrum", reference.spectrum.max_deviation);
    v.value("generated bases give the dense spectrum", generated.spectrum.max_deviation);
    v.value(
        "trace conservation",
        (reference.spectrum.trace_block - reference.spectrum.trace_dense).abs(),
    );
    let s = &reference.spectrum;
    Ok(json!({
        "molecule": if arrangement.is_some() { "C240" } else { "C60" },
        "arrangement": arrangement.map(|a| a.to_string()),
        "alpha": num(model.alpha),
        "sites": model.size(),
        "blocks": shown.iter().map(|t| block_json(t)).collect::<Vec<_>>(),
        "dense_spectrum": nums(&s.dense),
        "block_union_spectrum": nums(&s.block_union),
        "comparison": {
            "max_deviation": num(s.max_deviation),
            "worst_irrep": s.worst_irrep.map(|i| i.to_string()),
            "trace_block": num(s.trace_block),
            "trace_dense": num(s.trace_dense),
            "dimension_tally": s.dimension_tally,
        },
    }))
}
