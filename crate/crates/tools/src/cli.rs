//! Command-line front end. [`run`] does the work and returns the output,
//! so it can be driven without spawning a process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use bousfield_core::bousfield::{verify_main_theorem, BousfieldError, MainTheoremReport};
use bousfield_core::enumerate::{enumerate_lattices, enumerate_monoids, EnumError, DEFAULT_MONOID_CAP};
use bousfield_core::heyting::{check_heyting_morphism, HeytingError};
use bousfield_core::ideal::{
    enumerate_localizing_ideals, idempotent_analysis, is_prime, is_radical, match_bousfield, nilradical,
    radical_correspondence, spectrum, spectrum_correspondence, IdealError, IdealSet,
};
use bousfield_core::order::OrderError;
use bousfield_core::{oracle, BousfieldLattice, CMonoid0, HeytingAlgebra, Lattice};

use crate::dot::{bousfield_dot, ideals_dot, poset_dot, set_label};
use crate::input::{builtin_from_arg, parse_input, print_input, InputKind, InputSpec, Structure, StructureError};
use crate::paper_check::{all_passed, run_paper_check, Verdicts};
use crate::report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERDICT_FAILURE: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bousfield",
    version,
    about = "Heyting algebras, Booleanization and Bousfield lattices of monoid-graded categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit a Graphviz diagram.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Print nothing; the exit status carries the result.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file in the text grammar.
    pub file: Option<PathBuf>,
    /// A built-in structure instead of a file, e.g. `chain:3` or `paper-s5`.
    #[arg(long, conflicts_with = "file")]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Diagram {
    Hasse,
    Bousfield,
    Ideals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    None,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate an input.
    Validate(InputArgs),
    /// Implication, negation and regular elements of a finite Heyting algebra.
    Heyting(InputArgs),
    /// The Boolean algebra of regular elements and the unit map onto it.
    Booleanize(InputArgs),
    /// Bousfield classes of the graded category; for distributive lattice
    /// inputs, also checks the Booleanization isomorphism.
    Bousfield(InputArgs),
    /// Localizing ideals with radical, prime and Bousfield flags.
    Ideals(InputArgs),
    /// Prime ideals, before and after killing nilpotents.
    Spectrum(InputArgs),
    /// Draw a diagram (implies --dot).
    Render {
        #[command(flatten)]
        input: InputArgs,
        /// What to draw; defaults to the Hasse diagram for orders and the
        /// Bousfield lattice for monoids.
        #[arg(long, value_enum)]
        what: Option<Diagram>,
    },
    /// Reproduce the worked examples and the main theorem.
    PaperCheck,
    /// Count small lattices and monoids up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "none")]
        check: CheckMode,
        /// Write every enumerated structure to this directory in the text grammar.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse {
        path: String,
        source: crate::input::ParseError,
    },
    #[error(transparent)]
    Builtin(#[from] bousfield_core::builtin::BuiltinError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Heyting(#[from] HeytingError),
    #[error(transparent)]
    Bousfield(#[from] BousfieldError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("{0}")]
    Usage(String),
}

/// What a command produced: a report, or a diagram when `--dot` is set.
struct Produced {
    report: Report,
    dot: Option<String>,
    ok: bool,
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(p) => {
            let stdout = if cli.quiet {
                String::new()
            } else if cli.dot || matches!(cli.command, Command::Render { .. }) {
                p.dot.unwrap_or_default()
            } else if cli.json {
                p.report.to_json()
            } else {
                p.report.to_text()
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: if p.ok { EXIT_OK } else { EXIT_VERDICT_FAILURE },
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT_ERROR,
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Produced, CliError> {
    let wants_dot = cli.dot || matches!(cli.command, Command::Render { .. });
    if wants_dot && matches!(cli.command, Command::PaperCheck | Command::Enumerate { .. }) {
        return Err(CliError::Usage("--dot is not available for this command".to_string()));
    }
    match &cli.command {
        Command::Validate(a) => validate(&load(a)?),
        Command::Heyting(a) => heyting(&load(a)?),
        Command::Booleanize(a) => booleanize(&load(a)?),
        Command::Bousfield(a) => bousfield(&load(a)?),
        Command::Ideals(a) => ideals(&load(a)?),
        Command::Spectrum(a) => spectrum_cmd(&load(a)?),
        Command::Render { input, what } => render(&load(input)?, *what),
        Command::PaperCheck => {
            let report = run_paper_check();
            let ok = all_passed(&report);
            Ok(Produced { report, dot: None, ok })
        }
        Command::Enumerate { max_size, check, dump } => enumerate(*max_size, *check, dump.as_deref()),
    }
}

pub fn load(args: &InputArgs) -> Result<InputSpec, CliError> {
    match (&args.file, &args.builtin) {
        (_, Some(b)) => Ok(builtin_from_arg(b)?),
        (Some(path), None) => {
            let display = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: display.clone(),
                source,
            })?;
            parse_input(&text).map_err(|source| CliError::Parse { path: display, source })
        }
        (None, None) => Err(CliError::Usage("expected an input file or --builtin".to_string())),
    }
}

fn header(command: &str, spec: &InputSpec) -> Report {
    let mut r = Report::for_command(command);
    r.push("input", spec.name.clone());
    r.push("kind", spec.kind.as_str());
    r
}

fn rows(n: usize, f: impl Fn(usize, usize) -> String) -> Vec<Vec<String>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

fn name_set(l: &Lattice, s: bousfield_core::ElemSet) -> Vec<String> {
    s.iter().map(|x| l.name(x).to_string()).collect()
}

fn validate(spec: &InputSpec) -> Result<Produced, CliError> {
    let mut r = header("validate", spec);
    let mut dot = None;
    match &spec.body {
        Structure::Monoid(m) => {
            describe_monoid(r.section("monoid"), m);
        }
        _ => {
            let poset = match &spec.body {
                Structure::Poset(p) => p.clone(),
                Structure::Lattice(l) => l.poset().clone(),
                Structure::Topology(t) => t.lattice.poset().clone(),
                Structure::Monoid(_) => unreachable!(),
            };
            dot = Some(poset_dot(&spec.name, &poset));
            let s = r.section("order");
            s.push("size", poset.len());
            s.push("elements", poset.names().to_vec());
            let covers: Vec<String> = poset
                .covers()
                .iter()
                .map(|&(a, b)| format!("{} < {}", poset.name(a), poset.name(b)))
                .collect();
            s.push("covers", covers);
            match Lattice::from_poset(poset) {
                Ok(l) => {
                    s.push("lattice", true);
                    s.push("bottom", l.name(l.bottom()));
                    s.push("top", l.name(l.top()));
                    s.push("distributive", l.is_distributive());
                    if let Some([a, b, c]) = l.distributivity_witness() {
                        s.push(
                            "distributivity_witness",
                            vec![l.name(a).to_string(), l.name(b).to_string(), l.name(c).to_string()],
                        );
                    }
                }
                Err(e) => {
                    s.push("lattice", false);
                    s.push("lattice_failure", e.to_string());
                }
            }
        }
    }
    Ok(Produced {
        report: r,
        dot,
        ok: true,
    })
}

fn describe_monoid(s: &mut Report, m: &CMonoid0) {
    s.push("size", m.len());
    s.push("elements", m.names().to_vec());
    s.push("zero", m.name(m.zero()));
    s.push("unit", m.name(m.unit()));
    s.push("adjoined_zero", m.has_adjoined_zero());
    s.push("table", rows(m.len(), |a, b| m.name(m.mul(a, b)).to_string()));
    s.push("nilpotents", set_label(m, m.nilpotents()));
    s.push("idempotents", set_label(m, m.idempotents()));
}

fn heyting(spec: &InputSpec) -> Result<Produced, CliError> {
    let h = HeytingAlgebra::new(spec.lattice()?)?;
    let l = h.lattice();
    let mut r = header("heyting", spec);
    let n = h.len();
    r.push("elements", l.names().to_vec());
    r.push("implication", rows(n, |a, b| l.name(h.implies(a, b)).to_string()));
    let mut neg = Report::new();
    for x in 0..n {
        neg.push(l.name(x), l.name(h.negation(x)));
    }
    r.push("negation", neg);
    let (reg, comp) = h.regular_and_complemented();
    r.push("regular", name_set(l, reg));
    r.push("complemented", name_set(l, comp));
    r.push("boolean", h.is_boolean());
    let mut v = Verdicts::new();
    let o = oracle::check_heyting(&h);
    v.check("oracle_agreement", o.ok(), || format!("{:?}", o.mismatches));
    let ok = v.failed() == 0;
    r.push("verdicts", v.into_report());
    Ok(Produced {
        dot: Some(poset_dot(&spec.name, l.poset())),
        report: r,
        ok,
    })
}

fn booleanize(spec: &InputSpec) -> Result<Produced, CliError> {
    let h = HeytingAlgebra::new(spec.lattice()?)?;
    let b = h.booleanize();
    let l = h.lattice();
    let bl = b.algebra.lattice();
    let mut r = header("booleanize", spec);
    r.push("size", h.len());
    r.push(
        "regular",
        b.carrier.iter().map(|&i| l.name(i).to_string()).collect::<Vec<_>>(),
    );
    let mut unit = Report::new();
    for x in 0..h.len() {
        unit.push(l.name(x), bl.name(b.unit[x]));
    }
    r.push("unit", unit);
    r.push("join", rows(bl.len(), |a, c| bl.name(bl.join(a, c)).to_string()));
    let mut v = Verdicts::new();
    v.check(
        "is_boolean",
        b.algebra.is_boolean() && b.algebra.is_boolean_by_complements(),
        || "a regular element has no complement".to_string(),
    );
    let morphism = check_heyting_morphism(&b.unit, &h, &b.algebra);
    v.check("unit_is_heyting_morphism", morphism.is_ok(), || {
        format!("{:?}", morphism)
    });
    let ok = v.failed() == 0;
    r.push("verdicts", v.into_report());
    Ok(Produced {
        dot: Some(poset_dot(&format!("{}-booleanized", spec.name), bl.poset())),
        report: r,
        ok,
    })
}

fn bousfield(spec: &InputSpec) -> Result<Produced, CliError> {
    let m = spec.monoid()?;
    let bl = BousfieldLattice::enumerate(&m);
    let mut r = header("bousfield", spec);
    r.push("monoid", m.names().to_vec());
    r.push("classes", bl.len());
    let classes: Vec<Report> = (0..bl.len())
        .map(|i| {
            let mut c = Report::new();
            c.push("name", bl.class_name(i));
            c.push("annihilates", set_label(&m, bl.members(i)));
            c.push("representative", set_label(&m, bl.representative(i)));
            c
        })
        .collect();
    r.push("class_list", classes);
    let t = bl.order_tables();
    let name = |i: usize| bl.class_name(i);
    let n = bl.len();
    r.push("join", rows(n, |a, b| name(t.join[a * n + b])));
    r.push("meet", rows(n, |a, b| name(t.meet[a * n + b])));
    r.push("tensor", rows(n, |a, b| name(t.tensor[a * n + b])));
    let distributive = bl.to_lattice().is_distributive();
    r.push("frame", distributive);
    r.push("boolean", distributive && bl.all_regular());
    let mut v = Verdicts::new();
    if let (InputKind::Poset | InputKind::Lattice | InputKind::Topology | InputKind::Builtin, Ok(l)) =
        (spec.kind, spec.lattice())
    {
        if l.is_distributive() {
            let mt = verify_main_theorem(&l)?;
            describe_main_theorem(r.section("main_theorem"), &l, &mt);
            v.check("main_theorem", mt.holds(), || "see main_theorem fields".to_string());
        }
    }
    let ok = v.failed() == 0;
    r.push("verdicts", v.into_report());
    Ok(Produced {
        dot: Some(bousfield_dot(&spec.name, &bl)),
        report: r,
        ok,
    })
}

fn describe_main_theorem(s: &mut Report, l: &Lattice, mt: &MainTheoremReport) {
    let bl = &mt.phi.bousfield;
    let mut phi = Report::new();
    for x in 0..l.len() {
        phi.push(l.name(x), bl.class_name(mt.phi.map[x]));
    }
    s.push("phi", phi);
    s.push(
        "regular",
        mt.booleanization
            .carrier
            .iter()
            .map(|&i| l.name(i).to_string())
            .collect::<Vec<_>>(),
    );
    s.push("bousfield_is_boolean", mt.bousfield_is_boolean);
    s.push("phi_surjective", mt.phi.surjective);
    s.push("phi_frame_morphism", mt.phi.holds());
    s.push("phi_prime_well_defined", mt.well_defined);
    s.push("phi_prime_bijective", mt.bijective);
    s.push("phi_prime_heyting_morphism", mt.heyting_morphism);
    if let Some(rec) = mt.recovers_input {
        s.push("recovers_boolean_input", rec);
    }
}

fn ideals(spec: &InputSpec) -> Result<Produced, CliError> {
    let m = spec.monoid()?;
    let bl = BousfieldLattice::enumerate(&m);
    let all = enumerate_localizing_ideals(&m)?;
    let mut r = header("ideals", spec);
    r.push("monoid", m.names().to_vec());
    r.push("count", all.len());
    let list: Vec<Report> = all
        .iter()
        .map(|&i| {
            let mut e = Report::new();
            e.push("members", set_label(&m, i.members));
            e.push("radical", is_radical(&m, i));
            e.push("prime", is_prime(&m, i));
            e.push(
                "bousfield_class",
                match_bousfield(i, &bl)
                    .map(|c| bl.class_name(c))
                    .unwrap_or_else(|| "none".to_string()),
            );
            e
        })
        .collect();
    r.push("ideals", list);
    r.push("nilradical", set_label(&m, nilradical(&m).members));
    let idem = idempotent_analysis(&m)?;
    let s = r.section("idempotents");
    s.push(
        "supports",
        idem.idempotent_supports
            .iter()
            .map(|&x| set_label(&m, x))
            .collect::<Vec<_>>(),
    );
    let gens: Vec<Report> = idem
        .generators
        .iter()
        .map(|g| {
            let mut e = Report::new();
            e.push("element", m.name(g.element));
            e.push("ideal", set_label(&m, g.ideal.members));
            e.push("orthogonal", set_label(&m, g.orthogonal));
            e.push(
                "complement",
                g.complement
                    .map(|c| set_label(&m, c))
                    .unwrap_or_else(|| "none".to_string()),
            );
            e
        })
        .collect();
    s.push("generators", gens);
    s.push(
        "acyclization_without_complement",
        idem.acyclization_without_complement(),
    );
    Ok(Produced {
        dot: Some(ideals_dot(&spec.name, &m, &all)),
        report: r,
        ok: true,
    })
}

fn spectrum_cmd(spec: &InputSpec) -> Result<Produced, CliError> {
    let m = spec.monoid()?;
    let points = spectrum(&m)?;
    let (q, _) = m.quotient_by_nil();
    let q_points = spectrum(&q)?;
    let corr = spectrum_correspondence(&m)?;
    let radicals = radical_correspondence(&m)?;
    let labels = |mm: &CMonoid0, xs: &[IdealSet]| xs.iter().map(|i| set_label(mm, i.members)).collect::<Vec<_>>();
    let mut r = header("spectrum", spec);
    r.push("monoid", m.names().to_vec());
    r.push("points", labels(&m, &points));
    let s = r.section("quotient");
    s.push("monoid", q.names().to_vec());
    s.push("points", labels(&q, &q_points));
    s.push(
        "correspondence",
        corr.pairs
            .iter()
            .map(|(a, b)| format!("{} -> {}", set_label(&m, a.members), set_label(&q, b.members)))
            .collect::<Vec<_>>(),
    );
    s.push("spectrum_bijective", corr.bijective);
    s.push("radicals_bijective", radicals.bijective);
    Ok(Produced {
        dot: Some(ideals_dot(&spec.name, &m, &points)),
        report: r,
        ok: true,
    })
}

fn render(spec: &InputSpec, what: Option<Diagram>) -> Result<Produced, CliError> {
    let is_monoid = matches!(spec.body, Structure::Monoid(_));
    let what = what.unwrap_or(if is_monoid { Diagram::Bousfield } else { Diagram::Hasse });
    let dot = match what {
        Diagram::Hasse => match &spec.body {
            Structure::Poset(p) => poset_dot(&spec.name, p),
            Structure::Monoid(_) => return Err(CliError::Usage("a monoid has no Hasse diagram".to_string())),
            _ => poset_dot(&spec.name, spec.lattice()?.poset()),
        },
        Diagram::Bousfield => bousfield_dot(&spec.name, &BousfieldLattice::enumerate(&spec.monoid()?)),
        Diagram::Ideals => {
            let m = spec.monoid()?;
            ideals_dot(&spec.name, &m, &enumerate_localizing_ideals(&m)?)
        }
    };
    Ok(Produced {
        report: Report::for_command("render"),
        dot: Some(dot),
        ok: true,
    })
}

fn enumerate(max_size: usize, check: CheckMode, dump: Option<&Path>) -> Result<Produced, CliError> {
    if max_size == 0 {
        return Err(CliError::Usage("--max-size must be at least 1".to_string()));
    }
    let mut lattices = Vec::new();
    for n in 1..=max_size {
        lattices.push(enumerate_lattices(n)?);
    }
    let monoid_max = max_size.min(DEFAULT_MONOID_CAP);
    let mut monoids = Vec::new();
    for n in 1..=monoid_max {
        monoids.push(enumerate_monoids(n)?);
    }
    let mut r = Report::for_command("enumerate");
    r.push("max_size", max_size);
    let s = r.section("lattices");
    s.push("counts", lattices.iter().map(Vec::len).collect::<Vec<_>>());
    s.push(
        "distributive_counts",
        lattices
            .iter()
            .map(|ls| ls.iter().filter(|l| l.is_distributive()).count())
            .collect::<Vec<_>>(),
    );
    let s = r.section("monoids");
    s.push("max_size", monoid_max);
    s.push("counts", monoids.iter().map(Vec::len).collect::<Vec<_>>());

    let mut v = Verdicts::new();
    if check == CheckMode::All {
        let mut mismatches = Vec::new();
        let mut theorem_failures = Vec::new();
        for l in lattices.iter().flatten() {
            let m = CMonoid0::from_lattice_meet(l);
            let o = oracle::check_monoid(&m).map_err(|e| CliError::Usage(e.to_string()))?;
            mismatches.extend(o.mismatches);
            if l.is_distributive() {
                let h = HeytingAlgebra::new(l.clone())?;
                mismatches.extend(oracle::check_heyting(&h).mismatches);
                if !verify_main_theorem(l)?.holds() {
                    theorem_failures.push(l.names().join(" "));
                }
            }
        }
        for m in monoids.iter().flatten() {
            let o = oracle::check_monoid(m).map_err(|e| CliError::Usage(e.to_string()))?;
            mismatches.extend(o.mismatches);
        }
        v.check("oracles", mismatches.is_empty(), || format!("{mismatches:?}"));
        v.check("main_theorem", theorem_failures.is_empty(), || {
            theorem_failures.join("; ")
        });
    }
    if let Some(dir) = dump {
        let io = |source| CliError::Io {
            path: dir.display().to_string(),
            source,
        };
        std::fs::create_dir_all(dir).map_err(io)?;
        let mut files = 0usize;
        for (n, ls) in lattices.iter().enumerate() {
            for (i, l) in ls.iter().enumerate() {
                let spec = InputSpec {
                    kind: InputKind::Lattice,
                    name: format!("lattice-{}-{i}", n + 1),
                    body: Structure::Lattice(l.clone()),
                    generator: None,
                };
                std::fs::write(dir.join(format!("{}.txt", spec.name)), print_input(&spec)).map_err(io)?;
                files += 1;
            }
        }
        for (n, ms) in monoids.iter().enumerate() {
            for (i, m) in ms.iter().enumerate() {
                let spec = InputSpec {
                    kind: InputKind::Monoid,
                    name: format!("monoid-{}-{i}", n + 1),
                    body: Structure::Monoid(m.clone()),
                    generator: None,
                };
                std::fs::write(dir.join(format!("{}.txt", spec.name)), print_input(&spec)).map_err(io)?;
                files += 1;
            }
        }
        r.push("dumped_files", files);
    }
    let ok = v.failed() == 0;
    r.push("verdicts", v.into_report());
    Ok(Produced {
        report: r,
        dot: None,
        ok,
    })
}
