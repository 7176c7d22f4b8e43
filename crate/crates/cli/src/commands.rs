use lisse_core::arith::{format_scalar, int, parse_scalar, MonomialOrder, Polynomial, Scalar, VarId, VarNames};
use lisse_core::diffalg::jet_ideal;
use lisse_core::groebner::{buchberger_in, jet_basis, krull_dimension, DimensionReport};
use lisse_core::models::{
    c2_image_of, graded_dims_jet_vs_pbw, gram_matrix, integrable_closure_check, lisse_verdict, minimal_central_charge,
    singular_levels, LieAlgebraData, VirasoroModule, VirasoroParams,
};
use lisse_core::vpa::{check_vpa_axioms, validate_poisson};
use lisse_core::{Error, VpaContext};

use crate::input::{render, InputError, InputFile};
use crate::report::{Report, Section, Verdict};

pub const MAX_JET_ORDER: u32 = 12;
pub const MAX_CUTOFF: u32 = 12;
pub const MAX_PBW_WEIGHT: u32 = 10;

/// Effective settings after merging flags over the `[options]` section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub order: u32,
    pub cutoff: u32,
    pub samples: usize,
    pub seed: u64,
    pub max_weight: u32,
    pub central_charge: Option<Scalar>,
    pub minimal: Option<(i64, i64)>,
    pub root: Option<String>,
    pub power: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            order: 1,
            cutoff: 6,
            samples: 100,
            seed: 0,
            max_weight: 4,
            central_charge: None,
            minimal: None,
            root: None,
            power: 2,
        }
    }
}

/// Command-line values; `None` falls back to the input file, then defaults.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub order: Option<u32>,
    pub cutoff: Option<u32>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub max_weight: Option<u32>,
    pub central_charge: Option<String>,
    pub minimal: Option<(i64, i64)>,
    pub root: Option<String>,
    pub power: Option<u32>,
}

#[derive(Debug)]
pub enum CommandError {
    Input(InputError),
    Usage(String),
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Input(e) => write!(f, "{e}"),
            CommandError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<InputError> for CommandError {
    fn from(e: InputError) -> Self {
        CommandError::Input(e)
    }
}

type CmdResult<T> = Result<T, CommandError>;

fn usage(msg: impl Into<String>) -> CommandError {
    CommandError::Usage(msg.into())
}

pub fn resolve(file: &InputFile, flags: &Overrides) -> CmdResult<Settings> {
    let opts = file.options()?;
    let mut s = Settings::default();
    fn num<T: std::str::FromStr>(v: &(usize, usize, String), what: &str) -> Result<T, InputError> {
        v.2.parse().map_err(|_| InputError { line: v.0, column: v.1, message: format!("expected {what}, found `{}`", v.2) })
    }
    if let Some(v) = opts.get("order") {
        s.order = num(v, "a jet order")?;
    }
    if let Some(v) = opts.get("cutoff") {
        s.cutoff = num(v, "a cutoff level")?;
    }
    if let Some(v) = opts.get("samples") {
        s.samples = num(v, "a sample count")?;
    }
    if let Some(v) = opts.get("seed") {
        s.seed = num(v, "a seed")?;
    }
    if let Some(v) = opts.get("max-weight") {
        s.max_weight = num(v, "a weight")?;
    }
    if let Some(v) = opts.get("power") {
        s.power = num(v, "a power")?;
    }
    if let Some(v) = opts.get("root") {
        s.root = Some(v.2.clone());
    }
    if let Some(v) = opts.get("c") {
        s.central_charge = Some(parse_scalar(&v.2).map_err(|_| InputError {
            line: v.0,
            column: v.1,
            message: format!("expected a rational central charge, found `{}`", v.2),
        })?);
    }
    if let Some(v) = opts.get("minimal") {
        let parts: Vec<&str> = v.2.split_whitespace().collect();
        let pair = match parts[..] {
            [p, q] => p.parse().ok().zip(q.parse().ok()),
            _ => None,
        };
        s.minimal = Some(pair.ok_or_else(|| InputError {
            line: v.0,
            column: v.1,
            message: format!("expected `minimal p q`, found `{}`", v.2),
        })?);
    }
    s.order = flags.order.unwrap_or(s.order);
    s.cutoff = flags.cutoff.unwrap_or(s.cutoff);
    s.samples = flags.samples.unwrap_or(s.samples);
    s.seed = flags.seed.unwrap_or(s.seed);
    s.max_weight = flags.max_weight.unwrap_or(s.max_weight);
    s.power = flags.power.unwrap_or(s.power);
    if flags.root.is_some() {
        s.root = flags.root.clone();
    }
    if let Some(c) = &flags.central_charge {
        s.central_charge = Some(parse_scalar(c).map_err(|_| usage(format!("invalid central charge `{c}`")))?);
    }
    if flags.minimal.is_some() {
        s.minimal = flags.minimal;
    }
    Ok(s)
}

fn dimension_section(dim: &DimensionReport, names: &VarNames) -> Section {
    let mut s = Section::new("dimension")
        .field("krull_dimension", dim.krull_dimension)
        .field("zero_dimensional", dim.zero_dimensional);
    if let Some(q) = dim.quotient_dimension {
        s = s.field("quotient_dimension", q as i64);
    }
    s.field(
        "independent_variables",
        dim.independent_set.iter().map(|v| names.render_var(*v)).collect::<Vec<_>>(),
    )
}

fn polys(ps: &[Polynomial], names: &VarNames) -> Vec<String> {
    ps.iter().map(|p| render(p, names)).collect()
}

pub fn cmd_jet(file: &InputFile, settings: &Settings, input: &[u8]) -> CmdResult<Report> {
    let pres = file.presentation()?;
    if settings.order > MAX_JET_ORDER {
        return Err(usage(format!("jet order {} exceeds the supported maximum {MAX_JET_ORDER}", settings.order)));
    }
    let names = pres.names().clone();
    let ideal = jet_ideal(&pres, settings.order);
    let gb = jet_basis(&ideal, &MonomialOrder::default());
    let dim = krull_dimension(&gb);

    let mut report = Report::new("jet", input);
    report.sections.push(
        Section::new("presentation")
            .field("generators", pres.num_generators())
            .field("relations", polys(pres.relations(), &names)),
    );
    report.sections.push(
        Section::new("jet ideal")
            .field("order", settings.order)
            .field("variables", ideal.variables().len())
            .field("generators", polys(ideal.generators(), &names)),
    );
    report.sections.push(
        Section::new("groebner basis")
            .field("monomial_order", "weighted-degrevlex")
            .field("basis", polys(gb.basis(), &names)),
    );
    report.sections.push(dimension_section(&dim, &names));
    report.caveats.push(format!("jet scheme truncated at order {}", settings.order));
    Ok(report)
}

pub fn cmd_lisse(file: &InputFile, settings: &Settings, input: &[u8]) -> CmdResult<Report> {
    let pres = file.presentation()?;
    if settings.order > MAX_JET_ORDER {
        return Err(usage(format!("jet order {} exceeds the supported maximum {MAX_JET_ORDER}", settings.order)));
    }
    let names = pres.names().clone();
    let vars: Vec<VarId> = (1..=pres.num_generators()).map(VarId::base).collect();
    let gb = buchberger_in(vars, pres.relations(), &MonomialOrder::default());
    let orders: Vec<u32> = (0..=settings.order).collect();
    let verdict = lisse_verdict(&gb, &orders).map_err(|e| usage(e.to_string()))?;

    let mut report = Report::new("lisse", input);
    report.sections.push(
        Section::new("base ideal")
            .field("generators", pres.num_generators())
            .field("basis", polys(gb.basis(), &names)),
    );
    report.sections.push(dimension_section(&krull_dimension(&gb), &names));
    let mut diag = Section::new("jet diagnostics").field("max_order", settings.order);
    for d in &verdict.jet_diagnostics {
        diag = diag.field(&format!("order_{}_dimension", d.order), d.krull_dimension);
        if let Some(r) = d.reduced_krull_dimension {
            diag = diag.field(&format!("order_{}_reduced_dimension", d.order), r);
        }
    }
    report.sections.push(diag);
    let summary = if verdict.lisse {
        "lisse: the associated variety is a point, and every jet scheme of a zero-dimensional variety is zero-dimensional"
    } else {
        "not lisse: the associated variety has positive dimension"
    };
    report.verdict = Some(Verdict { passed: verdict.lisse, summary: summary.into() });
    report.caveats.push(verdict.caveat.to_string());
    report.caveats.push(format!("jet diagnostics computed up to order {}", settings.order));
    Ok(report)
}

pub fn cmd_vpa_check(file: &InputFile, settings: &Settings, input: &[u8]) -> CmdResult<Report> {
    let (table, names) = if file.has_brackets() {
        file.brackets()?
    } else if file.has_lie_algebra() {
        let data = file.lie_algebra()?;
        let names = VarNames::new(data.names().to_vec()).unwrap_or_default();
        (lisse_core::models::kirillov_kostant(&data).map_err(|e| usage(e.to_string()))?, names)
    } else if file.has_presentation() {
        let pres = file.presentation()?;
        (lisse_core::PoissonStructure::trivial(pres.num_generators()), pres.names().clone())
    } else {
        return Err(usage("vpa-check needs a [brackets], [lie_algebra] or [presentation] section"));
    };
    let mut report = Report::new("vpa-check", input);
    let entries: Vec<String> = table
        .entries()
        .map(|(a, b, p)| {
            let v = |g: u32| names.name_of(g).map_or(format!("x{g}"), str::to_string);
            format!("{{{}, {}}} = {}", v(a), v(b), render(p, &names))
        })
        .collect();
    let mut structure = Section::new("bracket table")
        .field("generators", table.num_generators())
        .field("entries", entries);
    let (valid, jacobi_ok) = match validate_poisson(table.clone()) {
        Ok(v) => (v, true),
        Err(Error::JacobiViolation { triple, residual }) => {
            structure = structure
                .field("jacobi_violation", format!("({}, {}, {})", triple.0, triple.1, triple.2))
                .field("jacobi_residual", render(&residual, &names));
            (table.assume_valid(), false)
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    report.sections.push(structure.field("jacobi", jacobi_ok));

    let ctx = VpaContext::free(valid).map_err(|e| usage(e.to_string()))?;
    let axioms = check_vpa_axioms(&ctx, settings.samples, settings.seed, settings.max_weight);
    let mut sec = Section::new("axioms")
        .field("samples", axioms.samples)
        .field("seed", axioms.seed.to_string())
        .field("max_weight", axioms.max_weight)
        .field("max_mode", 3u32)
        .field("checks", axioms.checks)
        .field("failures", axioms.failure_count);
    for f in &axioms.failures {
        let mut parts = vec![format!("a = {}", render(&f.a, &names)), format!("b = {}", render(&f.b, &names))];
        if let Some(c) = &f.c {
            parts.push(format!("c = {}", render(c, &names)));
        }
        parts.push(format!("m = {}, n = {}", f.m, f.n));
        sec = sec.field(&format!("{}_counterexample", f.axiom.name().replace('-', "_")), parts);
    }
    report.sections.push(sec);
    let passed = jacobi_ok && axioms.passed();
    let summary = if passed {
        format!("all {} checks hold exactly", axioms.checks)
    } else if !jacobi_ok {
        format!("Jacobi identity fails; {} of {} axiom checks fail", axioms.failure_count, axioms.checks)
    } else {
        format!("{} of {} axiom checks fail", axioms.failure_count, axioms.checks)
    };
    report.verdict = Some(Verdict { passed, summary });
    report.caveats.push(format!(
        "randomized check: {} samples, seed {}, weight <= {}, modes <= 3",
        settings.samples, settings.seed, settings.max_weight
    ));
    Ok(report)
}

fn render_state(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "|0>".into();
    }
    parts.iter().map(|p| format!("L(-{p})")).collect::<Vec<_>>().join("") + "|0>"
}

fn render_vector(v: &[Scalar], basis: &[Vec<u32>]) -> String {
    let zero = int(0);
    v.iter()
        .zip(basis)
        .filter(|(c, _)| **c != zero)
        .map(|(c, b)| format!("{}*{}", format_scalar(c), render_state(b)))
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

pub fn cmd_virasoro(settings: &Settings, input: &[u8]) -> CmdResult<Report> {
    if settings.cutoff > MAX_CUTOFF {
        return Err(usage(format!("cutoff {} exceeds the supported maximum {MAX_CUTOFF}", settings.cutoff)));
    }
    let params = match (&settings.minimal, &settings.central_charge) {
        (Some((p, q)), _) => VirasoroParams::minimal(*p, *q).map_err(|e| usage(e.to_string()))?,
        (None, Some(c)) => VirasoroParams::new(c.clone()),
        (None, None) => return Err(usage("virasoro needs `--c <rational>` or `--minimal <p> <q>`")),
    };
    let module = VirasoroModule::vacuum(params.clone(), settings.cutoff);
    let mut report = Report::new("virasoro", input);

    let mut p = Section::new("parameters").field("central_charge", format_scalar(&params.central_charge));
    if let Some((a, b)) = params.minimal_pair {
        let c = minimal_central_charge(a, b).map_err(|e| usage(e.to_string()))?;
        p = p.field("minimal_pair", format!("{a} {b}")).field("minimal_central_charge", format_scalar(&c));
    }
    report.sections.push(p.field("module", "vacuum").field("cutoff", settings.cutoff));

    let mut gram = Section::new("gram determinants");
    for level in 0..=settings.cutoff {
        let g = gram_matrix(&module, level).map_err(|e| usage(e.to_string()))?;
        gram = gram.field(&format!("level_{level}"), format!("dim {}, det {}", g.rows(), format_scalar(&g.determinant())));
    }
    report.sections.push(gram);

    let levels = singular_levels(&module);
    let mut sing = Section::new("singular levels")
        .field("levels", levels.iter().map(|l| l.level.to_string()).collect::<Vec<_>>());
    for l in &levels {
        sing = sing.field(
            &format!("level_{}_kernel", l.level),
            l.kernel.iter().map(|v| render_vector(v, &l.basis)).collect::<Vec<_>>(),
        );
    }
    report.sections.push(sing);

    let image = c2_image_of(&levels);
    let x_names = VarNames::from_strs(&["x"]).expect("valid name");
    let mut img = Section::new("c2 image").field("ideal", polys(image.basis(), &x_names));
    let exponent = image.basis().first().filter(|g| g.num_terms() == 1).and_then(Polynomial::degree);
    if let Some(e) = exponent {
        img = img.field("exponent", e);
        report.caveats.push(format!("the exponent {e} of the C2 algebra C[x]/<x^{e}> is computed, not asserted by theory"));
    }
    report.sections.push(img);

    let verdict = lisse_verdict(&image, &[]).map_err(|e| usage(e.to_string()))?;
    report.sections.push(Section::new("dimension").field("krull_dimension", verdict.krull_dimension));
    let summary = if verdict.lisse {
        format!("C2-cofinite and lisse (degenerate vectors found up to level {})", settings.cutoff)
    } else {
        format!("not C2-cofinite at cutoff {}", settings.cutoff)
    };
    report.verdict = Some(Verdict { passed: verdict.lisse, summary });
    report.caveats.push(format!(
        "maximal submodule approximated by Gram kernels up to level {}",
        settings.cutoff
    ));
    Ok(report)
}

pub fn cmd_affine(file: &InputFile, settings: &Settings, input: &[u8]) -> CmdResult<Report> {
    let data: LieAlgebraData = file.lie_algebra()?;
    let root_name = settings.root.clone().unwrap_or_else(|| data.names()[0].clone());
    let root = data.index_of(&root_name).map_err(|e| usage(e.to_string()))?;
    if settings.max_weight > MAX_PBW_WEIGHT {
        return Err(usage(format!("weight {} exceeds the supported maximum {MAX_PBW_WEIGHT}", settings.max_weight)));
    }
    let names = VarNames::new(data.names().to_vec()).unwrap_or_default();
    let check = integrable_closure_check(&data, root, settings.power.max(1)).map_err(|e| usage(e.to_string()))?;
    let dims = graded_dims_jet_vs_pbw(&data, settings.max_weight);

    let mut report = Report::new("affine", input);
    let mut lie = Section::new("lie algebra")
        .field("dimension", data.dimension())
        .field("basis", data.names().to_vec());
    if let Some(k) = &data.level {
        lie = lie.field("level", format_scalar(k));
    }
    report.sections.push(lie);
    report.sections.push(
        Section::new("closure")
            .field("root_vector", root_name.clone())
            .field("power", check.power)
            .field("radical", render(&check.radical, &names))
            .field("closure_basis", polys(check.closure.basis(), &names))
            .field("contains_all_generators", check.contains_all_generators),
    );
    let mut graded = Section::new("graded dimensions").field("max_weight", settings.max_weight);
    for row in &dims.rows {
        graded = graded.field(&format!("weight_{}", row.weight), format!("jet {}, pbw {}", row.jet_count, row.pbw_count));
    }
    report.sections.push(graded.field("all_equal", dims.all_equal()));

    let origin = check.variety_is_origin();
    let passed = origin && dims.all_equal();
    let summary = if origin {
        format!("the Poisson closure of rad<{root_name}^{}> is the augmentation ideal: associated variety = {{0}}", check.power)
    } else {
        format!("the Poisson closure of rad<{root_name}^{}> is proper in the augmentation ideal", check.power)
    };
    report.verdict = Some(Verdict { passed, summary });
    if data.level.is_some() {
        report.caveats.push("the level does not enter the jet-ring computations".into());
    }
    report.caveats.push(format!("graded dimensions compared up to weight {}", settings.max_weight));
    Ok(report)
}
