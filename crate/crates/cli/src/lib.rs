//! Subcommands of the `coxq` binary.
//!
//! Every command returns an [`Output`] holding a text rendering, a JSON
//! value and whether the checked property held; errors carry the exit code
//! class (budget or input). Vertex, arc and slot indices on the command line
//! and in JSON files are 0-based; presentation text uses 1-based generators.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};
use thiserror::Error;

use coxeter_quotients::data;
use coxeter_quotients::groupcheck::{
    abelianization_f2, check_homomorphism, count_homomorphisms, evaluate_word, tits_matrices, todd_coxeter,
    invariant_report, FiniteGroupTarget, GroupError, MatrixEvaluator,
};
use coxeter_quotients::presentation::{
    apply_substitution, presentation_of, presentation_of_quiver, presentation_of_triangulation, CoxeterMatrix,
    Presentation, Substitution, Word,
};
use coxeter_quotients::quiver::{AnnotatedQuiver, Quiver};
use coxeter_quotients::surface::{
    associate_triangulation, is_equivalent, loop_free_flip_graph, regluing_reaches_opposite, unoriented_key,
    AssociateOptions, PolygonGluing, PolygonGluingFile, Triangulation,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn group_err(e: GroupError) -> CliError {
    match e {
        GroupError::CosetsExhausted { .. } | GroupError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        other => input(other),
    }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when a checked property was violated (exit code 1).
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub nodes: usize,
    pub cosets: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            nodes: 100_000,
            cosets: 200_000,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn load_triangulation(path: &Path) -> Result<Triangulation, CliError> {
    Triangulation::from_json(&read(path)?).map_err(input)
}

/// Quiver, triangulation or presentation read from a file.
pub enum GroupSource {
    Quiver(AnnotatedQuiver),
    Triangulation(Triangulation),
    Presentation(Presentation),
}

pub fn load_source(path: &Path) -> Result<GroupSource, CliError> {
    let text = read(path)?;
    if text.trim_start().starts_with("gens") {
        return Presentation::from_text(&text).map(GroupSource::Presentation).map_err(input);
    }
    let v: Value = serde_json::from_str(&text).map_err(input)?;
    if v.get("triangles").is_some() {
        Triangulation::from_json(&text).map(GroupSource::Triangulation).map_err(input)
    } else if v.get("generators").is_some() {
        Presentation::from_json(&text).map(GroupSource::Presentation).map_err(input)
    } else if v.get("n").is_some() {
        AnnotatedQuiver::from_json(&text).map(GroupSource::Quiver).map_err(input)
    } else {
        Err(input("expected a quiver, triangulation or presentation"))
    }
}

pub fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    match load_source(path)? {
        GroupSource::Presentation(p) => Ok(p),
        GroupSource::Quiver(q) => presentation_of(&q).map_err(input),
        GroupSource::Triangulation(t) => presentation_of_triangulation(&t).map_err(input),
    }
}

pub fn cmd_mutate(path: &Path, k: usize) -> Result<Output, CliError> {
    let q = Quiver::from_json(&read(path)?).map_err(input)?;
    if k >= q.len() {
        return Err(input(format!("vertex {k} out of range ({} vertices)", q.len())));
    }
    let m = q.mutate(k).map_err(input)?;
    let file = m.to_file();
    Ok(Output::new(pretty(&file), serde_json::to_value(&file).unwrap()))
}

pub fn cmd_quiver_of(path: &Path) -> Result<Output, CliError> {
    let t = load_triangulation(path)?;
    let file = t.quiver_of().to_file();
    Ok(Output::new(pretty(&file), serde_json::to_value(&file).unwrap()))
}

pub fn cmd_present(path: &Path) -> Result<Output, CliError> {
    let p = load_presentation(path)?;
    let mut text = p.to_text();
    for w in &p.warnings {
        text.push_str(&format!("# warning: {w}\n"));
    }
    Ok(Output::new(text, serde_json::to_value(p.to_file()).unwrap()))
}

pub fn cmd_flip(path: &Path, arc: usize) -> Result<Output, CliError> {
    let t = load_triangulation(path)?;
    let r = t.flip_tracked(arc).map_err(input)?;
    let file = r.triangulation.to_file();
    let json = json!({
        "triangulation": file,
        "arc_map": r.arc_map,
        "new_arc": r.new_arc,
        "loop_free": r.triangulation.is_loop_free(),
    });
    Ok(Output::new(pretty(&file), json))
}

pub fn cmd_flipgraph(path: &Path, b: Budgets, dot: bool) -> Result<Output, CliError> {
    let t = load_triangulation(path)?;
    if !t.is_loop_free() {
        return Err(input("the starting triangulation has loops or self-folded triangles"));
    }
    let g = loop_free_flip_graph(&t, b.nodes).map_err(|e| CliError::Budget(e.to_string()))?;
    let targets = FiniteGroupTarget::builtin();
    let mut reports = Vec::new();
    for n in &g.nodes {
        let p = presentation_of_triangulation(n).map_err(input)?;
        reports.push(invariant_report(&p, &targets, b.cosets, b.nodes).map_err(group_err)?);
    }
    let equal = reports.windows(2).all(|w| w[0] == w[1]);
    let text = if dot {
        g.to_dot()
    } else {
        let mut s = format!("nodes {}\nedges {}\n", g.node_count(), g.edges.len());
        for (i, r) in reports.iter().enumerate() {
            s.push_str(&format!(
                "node {i}: f2 rank {}, hom counts {:?}, order {}\n",
                r.f2_rank,
                r.hom_counts,
                r.order.map_or("unknown".to_string(), |o| o.to_string())
            ));
        }
        s.push_str(&format!("invariants equal: {equal}\n"));
        s
    };
    let graph: Value = serde_json::from_str(&g.to_json()).unwrap();
    let json = json!({
        "graph": graph,
        "invariants": reports,
        "invariants_equal": equal,
    });
    Ok(Output { text, json, ok: equal })
}

pub fn cmd_associate(path: &Path, remove_free: bool) -> Result<Output, CliError> {
    let t = load_triangulation(path)?;
    let opts = AssociateOptions {
        remove_boundary_free: remove_free,
    };
    let (a, rec) = associate_triangulation(&t, opts);
    let json = json!({
        "triangulation": a.to_file(),
        "signature": a.surface_signature(),
        "record": rec,
    });
    let text = format!(
        "{}\n# {} digon removals, signature {}",
        pretty(&a.to_file()),
        rec.steps.len(),
        a.surface_signature()
    );
    Ok(Output::new(text, json))
}

pub fn cmd_reglue_genus(g: usize) -> Result<Output, CliError> {
    if g == 0 {
        return Err(input("genus must be at least 1"));
    }
    let r = regluing_reaches_opposite(g);
    let reached = r.values().filter(|&&b| b).count();
    let text = format!("genus {g}: {reached} of {} gluings reach the opposite pairing", r.len());
    let rows: Vec<Value> = r.iter().map(|(k, v)| json!({"rotation_key": k, "reaches_opposite": v})).collect();
    let json = json!({"genus": g, "gluings": rows, "all_reach": reached == r.len()});
    Ok(Output {
        text,
        json,
        ok: reached == r.len(),
    })
}

fn load_gluing(path: &Path) -> Result<PolygonGluing, CliError> {
    let f: PolygonGluingFile = serde_json::from_str(&read(path)?).map_err(input)?;
    PolygonGluing::from_file(&f).map_err(input)
}

pub fn cmd_reglue_file(path: &Path) -> Result<Output, CliError> {
    let p = load_gluing(path)?;
    let next = p.admissible_regluings();
    let files: Vec<PolygonGluingFile> = next.iter().map(PolygonGluing::to_file).collect();
    let mut text = format!("{} admissible regluings\n", files.len());
    for f in &files {
        text.push_str(&serde_json::to_string(f).unwrap());
        text.push('\n');
    }
    Ok(Output::new(text, json!({ "regluings": files })))
}

fn parse_word(s: &str, n: usize) -> Result<Word, CliError> {
    let mut w = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let x: usize = tok.parse().map_err(|_| input(format!("bad letter `{tok}`")))?;
        if x == 0 || x > n {
            return Err(input(format!("letter {x} out of range 1..={n}")));
        }
        w.push(x - 1);
    }
    Ok(Word(w))
}

pub fn cmd_todd_coxeter(path: &Path, subgroup: &[String], b: Budgets) -> Result<Output, CliError> {
    let p = load_presentation(path)?;
    let words = subgroup
        .iter()
        .map(|s| parse_word(s, p.generators()))
        .collect::<Result<Vec<_>, _>>()?;
    let t = todd_coxeter(&p, &words, b.cosets).map_err(group_err)?;
    let json = json!({"index": t.index(), "table": t.table});
    Ok(Output::new(format!("index {}", t.index()), json))
}

pub fn cmd_homcount(path: &Path, targets: &[String], b: Budgets) -> Result<Output, CliError> {
    let p = load_presentation(path)?;
    let mut groups = Vec::new();
    if targets.is_empty() {
        groups = FiniteGroupTarget::builtin();
    }
    for t in targets {
        groups.push(match t.as_str() {
            "S3" => FiniteGroupTarget::symmetric(3),
            "S4" => FiniteGroupTarget::symmetric(4),
            "D8" => FiniteGroupTarget::dihedral(8),
            "trivial" => FiniteGroupTarget::trivial(),
            file => FiniteGroupTarget::from_json(&read(Path::new(file))?).map_err(group_err)?,
        });
    }
    let mut text = String::new();
    let mut counts = serde_json::Map::new();
    for g in &groups {
        let c = count_homomorphisms(&p, g, b.nodes).map_err(group_err)?;
        text.push_str(&format!("{} {c}\n", g.name()));
        counts.insert(g.name().to_string(), json!(c));
    }
    let f2 = abelianization_f2(&p);
    text.push_str(&format!("f2_rank {f2}\n"));
    Ok(Output::new(text, json!({"hom_counts": counts, "f2_rank": f2})))
}

/// The affine Weyl group of type D4~ with centre generator 2 (1-based).
pub fn affine_d4() -> CoxeterMatrix {
    CoxeterMatrix::from_edges(5, &[(1, 0), (1, 2), (1, 3), (1, 4)])
}

/// Images of the five generators of the annulus group in the affine group.
pub fn annulus_images() -> Vec<Word> {
    vec![
        Word::new([0]),
        Word::new([1]),
        Word::new([2]),
        Word::new([2, 1, 3, 1, 2]),
        Word::new([3, 1, 4, 1, 3]),
    ]
}

fn one_based(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|x| x + 1).collect()
}

pub fn cmd_example_d4(corrupt: bool) -> Result<Output, CliError> {
    let p = presentation_of_quiver(&data::punctured_annulus_quiver()).map_err(input)?;
    let m = affine_d4();
    let gens = tits_matrices(&m).map_err(group_err)?;
    let mut images = annulus_images();
    if corrupt {
        images[3] = Word::new([3]);
    }
    let report = check_homomorphism(&p, &images, &MatrixEvaluator(gens.clone()));
    let kernel = Word::new([0, 4, 2, 3, 2, 4]).pow(2);
    let kernel_image = apply_substitution(&kernel, &Substitution { images: images.clone() });
    let kernel_trivial = evaluate_word(&gens, &kernel_image).is_identity();
    let pass = report.passes() && kernel_trivial;

    let mut text = String::new();
    for r in &report.relators {
        text.push_str(&format!(
            "{} relator {} {} {}\n",
            if r.trivial { "PASS" } else { "FAIL" },
            r.index + 1,
            r.kind,
            r.note
        ));
    }
    for (i, ok) in report.involutions.iter().enumerate() {
        if !ok {
            text.push_str(&format!("FAIL image of t{} is not an involution\n", i + 1));
        }
    }
    text.push_str(&format!(
        "{} kernel element (t1 t5 t3 t4 t3 t5)^2 maps to the identity\n",
        if kernel_trivial { "PASS" } else { "FAIL" }
    ));
    text.push_str(if pass { "result: pass\n" } else { "result: fail\n" });

    let relators: Vec<Value> = report
        .relators
        .iter()
        .map(|r| {
            json!({
                "index": r.index + 1,
                "kind": r.kind,
                "note": r.note,
                "word": one_based(&p.relators()[r.index].word),
                "trivial": r.trivial,
            })
        })
        .collect();
    let json = json!({
        "presentation": p.to_file(),
        "target": {"name": "affine D4", "coxeter_matrix": m.rows()},
        "images": images.iter().map(one_based).collect::<Vec<_>>(),
        "relators": relators,
        "involutions": report.involutions,
        "kernel_element": {"word": one_based(&kernel), "trivial": kernel_trivial},
        "pass": pass,
    });
    Ok(Output { text, json, ok: pass })
}

pub fn cmd_counterexample(genus: usize, gluing: Option<&Path>) -> Result<Output, CliError> {
    if let Some(path) = gluing {
        let p = load_gluing(path)?;
        let t = p.realize();
        let opposite = PolygonGluing::opposite(p.genus()).realize();
        let flips = t.loop_free_flips();
        let eq = is_equivalent(&t, &opposite).is_some();
        let text = format!(
            "signature {}\nloop-free flips {}\nequivalent to the opposite-sides fan: {eq}",
            t.surface_signature(),
            flips.len()
        );
        let json = json!({
            "signature": t.surface_signature(),
            "loop_free_flips": flips,
            "equivalent_to_opposite": eq,
        });
        return Ok(Output {
            text,
            json,
            ok: flips.is_empty(),
        });
    }
    if genus == 0 {
        return Err(input("genus must be at least 1"));
    }
    let all = PolygonGluing::enumerate(genus);
    // Classes of realized triangulations up to (possibly reversing) equivalence.
    let mut classes: Vec<(Vec<u32>, Vec<PolygonGluing>, Triangulation)> = Vec::new();
    for g in &all {
        let t = g.realize();
        let key = unoriented_key(&t);
        match classes.iter_mut().find(|c| c.0 == key) {
            Some(c) => c.1.push(g.clone()),
            None => classes.push((key, vec![g.clone()], t)),
        }
    }
    let rigid = classes.iter().all(|c| c.2.loop_free_flips().is_empty());
    let ok = rigid && (genus < 2 || classes.len() >= 2);
    let mut text = format!(
        "genus {genus}: {} gluings up to rotation, {} inequivalent triangulations\n",
        all.len(),
        classes.len()
    );
    let mut rows = Vec::new();
    for (i, (_, gs, t)) in classes.iter().enumerate() {
        let flips = t.loop_free_flips().len();
        let opposite = gs.iter().any(PolygonGluing::is_opposite);
        text.push_str(&format!(
            "class {i}: {} gluings, first pairing {:?}, contains opposite sides: {opposite}, loop-free flips: {flips}\n",
            gs.len(),
            gs[0].pairs(),
        ));
        rows.push(json!({
            "gluings": gs.iter().map(PolygonGluing::to_file).collect::<Vec<_>>(),
            "contains_opposite": opposite,
            "loop_free_flips": flips,
        }));
    }
    text.push_str(&format!("all rigid: {rigid}\n"));
    let json = json!({
        "genus": genus,
        "gluings": all.len(),
        "classes": rows,
        "all_rigid": rigid,
    });
    Ok(Output { text, json, ok })
}
