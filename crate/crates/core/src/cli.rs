//! The `qtense` command line.
//!
//! Algebra arguments are `.alg` paths or bundled names (`fig1`, `L5`,
//! `L2xL3`, `MO2`, `B3`, ...). Every command prints one report per check
//! and exits 0 when all are certified, 1 on a violation, 2 when a check is
//! inapplicable or only partially covered, 3 on a usage or input error.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{
    check_rdp, classify, derive_order, library, AlgebraMap, EffectOps, FinitePoset, LatticeWitness, QEffect,
    QEffectAlgebra, ValidationReport, DEFAULT_POWER_CAP,
};
use crate::error::{Error, Result};
use crate::io::{parse_algebra, parse_workspace, write_algebra, FileKind, WorkspaceDocument};
use crate::report::{VerificationReport, Verdict};
use crate::representation::{default_states, verify_representation_pair, verify_tense_representation};
use crate::states::{
    check_order_reflecting, check_semi_state, check_state, enumerate_extreme_q_states_with_cap, SemiLevel, StateSet,
    Tri, DEFAULT_STATE_CAP,
};
use crate::tense::{
    canonical_connection, canonical_tense, check_galois_q_connection, check_tense_operators, CertifyOptions, Frame,
    GaloisPair, QConnectionReport, Scope,
};
use crate::terms::verify_threshold;

/// Exit code for usage and input errors.
pub const USAGE_EXIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qtense", version, about = "Exact checks for finite q-effect algebras, q-states and q-tense operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args, Clone, Default)]
pub struct GlobalOpts {
    /// Size cap for carriers, direct powers and vertex enumeration.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Grid exponent k for the threshold-term check (dyadic r = i/2^k).
    #[arg(long, global = true)]
    pub grid: Option<u32>,
    /// Write the reports as JSON to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Seed for sampled certification.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Extra files to load into the workspace (algebras referenced by maps or states).
    #[arg(long = "load", short = 'l', global = true)]
    pub load: Vec<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Level {
    QSemi,
    Jp,
    Strong,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check (E1)-(E4) and (Q1)-(Q5).
    Validate {
        /// An `.alg` file or a bundled name (`L5`, `fig1`, `L2xL3`, ...).
        algebra: String,
    },
    /// Print the covering relation of the induced order.
    Order {
        /// An `.alg` file or a bundled name (`L5`, `fig1`, `L2xL3`, ...).
        algebra: String,
    },
    /// Lattice, MV, linearity and Riesz decomposition.
    Classify {
        /// An `.alg` file or a bundled name (`L5`, `fig1`, `L2xL3`, ...).
        algebra: String,
    },
    /// Enumerate or check q-states.
    States {
        /// An `.alg` file or a bundled name (`L5`, `fig1`, `L2xL3`, ...).
        algebra: String,
        /// List the extreme q-states.
        #[arg(long)]
        extreme: bool,
        /// A `.states` file whose rows are checked as q-states.
        #[arg(long)]
        check: Option<PathBuf>,
        /// Whether the extreme q-states form an order-reflecting family.
        #[arg(long)]
        order_reflecting: bool,
    },
    /// Check the rows of a `.states` file as q-semi-states.
    SemistateCheck {
        /// An `.alg` file or a bundled name (`L5`, `fig1`, `L2xL3`, ...).
        algebra: String,
        #[arg(long)]
        states: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Jp)]
        level: Level,
    },
    /// Check `f` and `g` of a `.map` file as a Galois q-connection.
    GaloisCheck {
        /// A `.map` file with `f` and `g`.
        #[arg(long)]
        maps: PathBuf,
    },
    /// Check `G` and `H` of a `.map` file as q-tense operators.
    TenseCheck {
        /// A `.map` file with `G` and `H`.
        #[arg(long)]
        maps: PathBuf,
    },
    /// Build G*, H*, P*, F* on M^S from a chain and a frame.
    Canonical {
        /// A Łukasiewicz chain `Ln` or dyadic chain `Dk`, by name or `.alg` file.
        #[arg(long)]
        chain: String,
        /// A `.frame` file.
        #[arg(long)]
        frame: PathBuf,
        /// Certify the four operators as a tense structure, not only (P*, G*).
        #[arg(long)]
        check_tense: bool,
    },
    /// Synthesize a frame from states and check the representation squares.
    Represent {
        /// The algebra, when no `.map` file names it.
        #[arg(long)]
        algebra: Option<String>,
        /// A `.map` file with `G` and `H`.
        #[arg(long, conflicts_with = "maps")]
        tense: Option<PathBuf>,
        /// A `.map` file with a Galois pair `f`, `g`.
        #[arg(long)]
        maps: Option<PathBuf>,
        /// A `.states` file replacing the default state set.
        #[arg(long)]
        states: Option<PathBuf>,
    },
    /// List the bundled algebras, optionally writing them as `.alg` files.
    Examples {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

/// Reports produced by one command.
#[derive(Debug)]
pub struct Outcome {
    pub reports: Vec<VerificationReport>,
}

impl Outcome {
    pub fn verdict(&self) -> Verdict {
        self.reports
            .iter()
            .fold(Verdict::Certified, |acc, r| acc.combine(r.verdict.clone()))
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict().exit_code()
    }

    pub fn to_text(&self) -> String {
        self.reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.reports.iter().map(|r| r.to_json()).collect())
    }
}

/// Whether an error stems from the input rather than from the mathematics.
pub fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::File { .. }
            | Error::Multiple(_)
            | Error::Io(_)
            | Error::UnknownAlgebra(_)
            | Error::UnknownElement(_)
            | Error::MalformedRational(_)
            | Error::DuplicateElement(_)
    )
}

/// Runs `cli`. Input errors are returned; failed preconditions become an
/// inapplicable report.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let start = Instant::now();
    let reports = match run_command(&cli.command, &cli.global) {
        Ok(r) => r,
        Err(e) if is_input_error(&e) => return Err(e),
        Err(e) => {
            let mut r = VerificationReport::new(command_name(&cli.command));
            r.verdict = Verdict::Inapplicable(e.to_string());
            vec![r]
        }
    };
    let elapsed = start.elapsed();
    let outcome = Outcome {
        reports: reports.into_iter().map(|r| r.with_elapsed(elapsed)).collect(),
    };
    if let Some(path) = &cli.global.json {
        let text = serde_json::to_string_pretty(&outcome.to_json()).expect("reports serialize");
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(outcome)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Order { .. } => "order",
        Command::Classify { .. } => "classify",
        Command::States { .. } => "states",
        Command::SemistateCheck { .. } => "semistate-check",
        Command::GaloisCheck { .. } => "galois-check",
        Command::TenseCheck { .. } => "tense-check",
        Command::Canonical { .. } => "canonical",
        Command::Represent { .. } => "represent",
        Command::Examples { .. } => "examples",
    }
}

/// Loads every file argument plus `--load` into one workspace.
struct Session {
    ws: WorkspaceDocument,
}

fn file_stem(p: &Path) -> String {
    p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string()
}

fn is_file_arg(s: &str) -> bool {
    FileKind::of(Path::new(s)).is_some()
}

impl Session {
    fn open(global: &GlobalOpts, args: &[&Path]) -> Result<Session> {
        let mut files: Vec<PathBuf> = global.load.clone();
        files.extend(args.iter().map(|p| p.to_path_buf()));
        files.sort();
        files.dedup();
        Ok(Session {
            ws: parse_workspace(&files)?,
        })
    }

    /// An algebra argument: a loaded `.alg` file or a bundled name.
    fn algebra(&mut self, arg: &str) -> Result<(String, QEffectAlgebra, ValidationReport)> {
        let name = if is_file_arg(arg) { file_stem(Path::new(arg)) } else { arg.to_string() };
        self.ws.resolve_algebra(&name)?;
        let e = &self.ws.algebras[&name];
        Ok((name, e.algebra.clone(), e.q_report.clone()))
    }

    fn frame(&self, path: &Path) -> Result<Frame> {
        Ok(self.ws.frames[&file_stem(path)].clone())
    }

    fn states(&self, path: &Path, algebra: &str) -> Result<StateSet> {
        let entry = &self.ws.states[&file_stem(path)];
        if entry.algebra != algebra {
            return Err(Error::Precondition(format!(
                "{} holds states of `{}`, not `{algebra}`",
                path.display(),
                entry.algebra
            )));
        }
        Ok(entry.set.clone())
    }

    /// The named maps of a `.map` file with its source and target algebras.
    fn maps(&mut self, path: &Path, labels: &[&str]) -> Result<(QEffectAlgebra, QEffectAlgebra, Vec<AlgebraMap>)> {
        let entry = self.ws.maps[&file_stem(path)].clone();
        let source = self.ws.algebra(&entry.doc.source)?.algebra.clone();
        let target = self.ws.algebra(&entry.doc.target)?.algebra.clone();
        let maps = labels
            .iter()
            .map(|l| entry.map(l).cloned().map_err(|_| Error::parse(1, format!("{}: missing map `{l}:`", path.display()))))
            .collect::<Result<Vec<_>>>()?;
        Ok((source, target, maps))
    }
}

fn algebra_paths(arg: &str) -> Vec<&Path> {
    if is_file_arg(arg) {
        vec![Path::new(arg)]
    } else {
        Vec::new()
    }
}

fn violations(report: &ValidationReport) -> Verdict {
    Verdict::from_witnesses(report.violations.iter().map(|v| v.to_string()).collect())
}

fn galois_certificates(report: &mut VerificationReport, prefix: &str, q: &QConnectionReport) {
    let g = &q.galois;
    let sampled = |v: &Verdict| {
        if g.sampled && v.is_certified() {
            Verdict::Partial("sampled elements only".into())
        } else {
            v.clone()
        }
    };
    report.certify(format!("{prefix}f(a) <= b iff a <= g(b)"), sampled(&g.adjunction));
    report.certify(format!("{prefix}monotone, id <= gf, fg <= id"), sampled(&g.unit_counit));
    report.certify(format!("{prefix}g = max, f = min"), sampled(&g.extremal));
    report.certify(format!("{prefix}(GQ1) f commutes with q, d"), sampled(&q.gq1));
    report.certify(format!("{prefix}(GQ2) g commutes with q, d"), sampled(&q.gq2));
    if !g.agree() {
        report.certify(format!("{prefix}connection conditions agree"), Verdict::Violated(vec!["conditions disagree".into()]));
    }
}

fn map_line<A: FinitePoset + ?Sized>(label: &str, alg: &A, m: &AlgebraMap) -> String {
    let body: Vec<String> = (0..m.len()).map(|x| format!("{}->{}", alg.element_name(x), alg.element_name(m.apply(x)))).collect();
    format!("{label}: {}", body.join(", "))
}

/// Executes one command against the files it names.
pub fn run_command(command: &Command, global: &GlobalOpts) -> Result<Vec<VerificationReport>> {
    match command {
        Command::Validate { algebra } => validate(global, algebra),
        Command::Order { algebra } => {
            let mut s = Session::open(global, &algebra_paths(algebra))?;
            let (name, alg, _) = s.algebra(algebra)?;
            let order = derive_order(alg.base());
            let mut r = VerificationReport::new(format!("order of {name}"));
            r.certify("partial order", Verdict::from_witnesses(if order.is_partial_order() { vec![] } else { vec!["not antisymmetric or not transitive".into()] }));
            let covers: Vec<String> = order.covers().iter().map(|&(x, y)| format!("{} < {}", alg.name(x), alg.name(y))).collect();
            r.line(format!("covers: {}", covers.join(", ")));
            r.data = json!({ "covers": covers, "total": order.is_total() });
            Ok(vec![r])
        }
        Command::Classify { algebra } => {
            let mut s = Session::open(global, &algebra_paths(algebra))?;
            let (name, alg, _) = s.algebra(algebra)?;
            let c = classify(&alg);
            let rdp = check_rdp(alg.base());
            let mut r = VerificationReport::new(format!("classify {name}"));
            r.line(format!("size: {}", alg.size()));
            r.line(format!("is_lattice: {}", c.is_lattice));
            match &c.lattice_witness {
                Some(LatticeWitness::NoJoin(x, y)) => r.line(format!("  ({x}, {y}) has no join")),
                Some(LatticeWitness::NoMeet(x, y)) => r.line(format!("  ({x}, {y}) has no meet")),
                None => {}
            }
            r.line(format!("is_mv: {}", c.is_mv));
            r.line(format!("is_linear: {}", c.is_linear));
            r.line(format!("rdp: {}", rdp.is_none()));
            if let Some(w) = &rdp {
                r.line(format!("  {} <= {} + {} does not decompose", w.x, w.y1, w.y2));
            }
            r.data = json!({ "classification": c, "rdp": rdp.is_none(), "rdp_witness": rdp });
            Ok(vec![r])
        }
        Command::States { algebra, extreme, check, order_reflecting } => {
            let mut paths = algebra_paths(algebra);
            paths.extend(check.as_deref());
            let mut s = Session::open(global, &paths)?;
            let (name, alg, _) = s.algebra(algebra)?;
            let cap = global.cap.unwrap_or(DEFAULT_STATE_CAP);
            let mut reports = Vec::new();
            let want_extreme = *extreme || (check.is_none() && !order_reflecting);
            let ext = if want_extreme || *order_reflecting { Some(enumerate_extreme_q_states_with_cap(&alg, cap)?) } else { None };
            if want_extreme {
                let set = ext.as_ref().expect("enumerated");
                let mut r = VerificationReport::new(format!("extreme q-states of {name}"));
                r.certify(format!("{} extreme q-states", set.len()), Verdict::Certified);
                r.line(set.to_table(&alg).trim_end().to_string());
                r.data = json!({ "states": set });
                reports.push(r);
            }
            if let Some(path) = check {
                let set = s.states(path, &name)?;
                let mut r = VerificationReport::new(format!("q-state check of {}", path.display()));
                for (i, st) in set.iter().enumerate() {
                    let rep = check_state(&alg, &st.values);
                    r.certify(format!("s{i} is a q-state"), if rep.is_q_state { Verdict::Certified } else { Verdict::Violated(rep.violations) });
                }
                reports.push(r);
            }
            if *order_reflecting {
                let set = ext.as_ref().expect("enumerated");
                let mut r = VerificationReport::new(format!("order reflection on {name}"));
                let v = match check_order_reflecting(&alg, &set.members) {
                    None => Verdict::Certified,
                    Some((x, y)) => Verdict::Violated(vec![format!(
                        "every extreme q-state has s({}) <= s({}) but {} is not below {}",
                        alg.name(x), alg.name(y), alg.name(x), alg.name(y)
                    )]),
                };
                r.certify("extreme q-states reflect the order", v);
                reports.push(r);
            }
            Ok(reports)
        }
        Command::SemistateCheck { algebra, states, level } => {
            let mut paths = algebra_paths(algebra);
            paths.push(states);
            let mut s = Session::open(global, &paths)?;
            let (name, alg, _) = s.algebra(algebra)?;
            let set = s.states(states, &name)?;
            let lvl = match level {
                Level::QSemi => SemiLevel::QSemi,
                Level::Jp => SemiLevel::JauchPiron,
                Level::Strong => SemiLevel::Strong,
            };
            let mut r = VerificationReport::new(format!("q-semi-state check of {}", states.display()));
            for (i, st) in set.iter().enumerate() {
                let rep = check_semi_state(&alg, &st.values, lvl);
                let ok = rep.q_semi
                    && match lvl {
                        SemiLevel::QSemi => true,
                        SemiLevel::JauchPiron => rep.jauch_piron == Tri::Yes,
                        SemiLevel::Strong => rep.strong == Tri::Yes,
                    };
                let label = format!("s{i} at level {level:?}");
                r.certify(label, if ok { Verdict::Certified } else { Verdict::Violated(rep.violations) });
            }
            Ok(vec![r])
        }
        Command::GaloisCheck { maps } => {
            let mut s = Session::open(global, &[maps])?;
            let (e1, e2, m) = s.maps(maps, &["f", "g"])?;
            let mut pair = GaloisPair::new(m[0].clone(), m[1].clone());
            let q = check_galois_q_connection(&e1, &e2, &mut pair, &Scope::Exhaustive);
            let mut r = VerificationReport::new(format!("Galois q-connection {}", maps.display()));
            galois_certificates(&mut r, "", &q);
            r.data = json!({ "report": q });
            Ok(vec![r])
        }
        Command::TenseCheck { maps } => {
            let mut s = Session::open(global, &[maps])?;
            let (alg, target, m) = s.maps(maps, &["G", "H"])?;
            if alg != target {
                return Err(Error::Precondition("tense operators act on a single algebra".into()));
            }
            let t = check_tense_operators(&alg, m[0].clone(), m[1].clone(), &Scope::Exhaustive);
            let mut r = VerificationReport::new(format!("q-tense operators {}", maps.display()));
            for c in &t.report.axioms {
                r.certify(c.name.clone(), c.verdict.clone());
            }
            galois_certificates(&mut r, "(P, G): ", &t.report.pg);
            galois_certificates(&mut r, "(F, H): ", &t.report.fh);
            r.line(map_line("P", &alg, &t.p));
            r.line(map_line("F", &alg, &t.f));
            r.data = json!({ "report": t.report, "P": t.p, "F": t.f });
            Ok(vec![r])
        }
        Command::Canonical { chain, frame, check_tense } => {
            let mut paths = algebra_paths(chain);
            paths.push(frame);
            let mut s = Session::open(global, &paths)?;
            let (name, m, _) = s.algebra(chain)?;
            let fr = s.frame(frame)?;
            let opts = CertifyOptions {
                seed: global.seed,
                power_cap: global.cap.map_or(DEFAULT_POWER_CAP, |c| c as u128),
                ..CertifyOptions::default()
            };
            let mut r = VerificationReport::new(format!("canonical operators on {name}^{}", fr.s_len()));
            if *check_tense {
                let t = canonical_tense(&m, &fr, &opts)?;
                for c in &t.tense.axioms {
                    let v = if t.tense.sampled && c.verdict.is_certified() { Verdict::Partial("sampled vectors only".into()) } else { c.verdict.clone() };
                    r.certify(c.name.clone(), v);
                }
                galois_certificates(&mut r, "(P*, G*): ", &t.tense.pg);
                galois_certificates(&mut r, "(F*, H*): ", &t.tense.fh);
                r.certify("P* = '∘H*∘ and F* = '∘G*∘", t.duality.clone());
                for (label, v) in [
                    ("R reflexive: G*, H* <= id <= P*, F*", &t.corollary.reflexive),
                    ("R symmetric: G* = H*, P* = F*", &t.corollary.symmetric),
                    ("R transitive: G* <= G*G*, F*F* <= F*", &t.corollary.transitive),
                ] {
                    if let Some(v) = v {
                        r.certify(label, v.clone());
                    }
                }
                r.data = json!({ "frame": fr, "report": t });
            } else {
                let c = canonical_connection(&m, &fr, &opts)?;
                galois_certificates(&mut r, "(P*, G*): ", &c.report);
                r.data = json!({ "frame": fr, "report": c.report });
            }
            for l in fr.matrix_lines() {
                r.line(l);
            }
            Ok(vec![r])
        }
        Command::Represent { algebra, tense, maps, states } => {
            let mut paths: Vec<&Path> = algebra.as_deref().map(algebra_paths).unwrap_or_default();
            paths.extend(tense.as_deref());
            paths.extend(maps.as_deref());
            paths.extend(states.as_deref());
            let mut s = Session::open(global, &paths)?;
            if let Some(t) = tense {
                let (alg, _, m) = s.maps(t, &["G", "H"])?;
                let name = s.ws.maps[&file_stem(t)].doc.source.clone();
                if let Some(a) = algebra {
                    let (given, _, _) = s.algebra(a)?;
                    if given != name {
                        return Err(Error::Precondition(format!("{} acts on `{name}`, not `{given}`", t.display())));
                    }
                }
                let set = states.as_deref().map(|p| s.states(p, &name)).transpose()?;
                let out = verify_tense_representation(&alg, &m[0], &m[1], set.as_ref())?;
                Ok(vec![out.report])
            } else if let Some(p) = maps {
                let (e1, e2, m) = s.maps(p, &["f", "g"])?;
                let pair = GaloisPair::new(m[0].clone(), m[1].clone());
                let (s1, s2) = (default_states(&e1)?, default_states(&e2)?);
                Ok(vec![verify_representation_pair(&e1, &e2, &pair, &s1, &s2).report])
            } else {
                Err(Error::parse(0, "represent needs --tense or --maps"))
            }
        }
        Command::Examples { write } => {
            let mut r = VerificationReport::new("bundled examples");
            r.line(format!("{:<8} {:>5}  {:<7} {:<5} {:<6} rdp", "name", "size", "lattice", "mv", "linear"));
            let mut rows = Vec::new();
            for (name, alg) in library::bundled_examples() {
                let c = classify(&alg);
                let rdp = check_rdp(alg.base()).is_none();
                r.line(format!("{name:<8} {:>5}  {:<7} {:<5} {:<6} {rdp}", alg.size(), c.is_lattice, c.is_mv, c.is_linear));
                rows.push(json!({ "name": name, "size": alg.size(), "classification": c, "rdp": rdp }));
                if let Some(dir) = write {
                    std::fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
                    let path = dir.join(format!("{name}.alg"));
                    std::fs::write(&path, write_algebra(&alg)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                }
            }
            r.data = json!(rows);
            Ok(vec![r])
        }
    }
}

fn validate(global: &GlobalOpts, arg: &str) -> Result<Vec<VerificationReport>> {
    let (name, doc_or_alg) = if is_file_arg(arg) {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        let doc = parse_algebra(&text).map_err(|e| Error::File { path: arg.to_string(), source: Box::new(e) })?;
        (file_stem(Path::new(arg)), Ok(doc))
    } else {
        let alg = library::bundled(arg).ok_or_else(|| Error::UnknownAlgebra(arg.to_string()))?;
        (arg.to_string(), Err(alg))
    };
    let mut r = VerificationReport::new(format!("validate {name}"));
    let loaded = match doc_or_alg {
        Ok(doc) => {
            let effect = match global.cap {
                Some(cap) => doc.raw.validate_with_cap(cap)?,
                None => doc.effect_report()?,
            };
            r.certify("(E1)-(E4)", violations(&effect));
            if !effect.passed() {
                r.certify("(Q1)-(Q5)", Verdict::Inapplicable("effect axioms fail".into()));
                return Ok(vec![r]);
            }
            doc.load()?
        }
        Err(alg) => {
            r.certify("(E1)-(E4)", Verdict::Certified);
            let rep = alg.validate();
            (alg, rep)
        }
    };
    let (alg, q_report) = loaded;
    r.certify("(Q1)-(Q5)", violations(&q_report));
    r.line(format!("{:<8} {:<8} {:<8}", "x", "q(x)", "d(x)"));
    for x in 0..alg.size() {
        r.line(format!("{:<8} {:<8} {:<8}", alg.name(x), alg.name(alg.q(x)), alg.name(alg.d(x))));
    }
    if let Some(k) = global.grid {
        let t = verify_threshold(k)?;
        let mut w: Vec<String> = t.failures.iter().map(|(rr, x)| format!("t_{rr}({x})")).collect();
        w.extend(t.proposition_failures.iter().map(|x| format!("x = {x}")));
        r.certify(format!("t_r(x) = 1 iff r <= x on the 2^-{k} grid ({} pairs)", t.pairs_checked), Verdict::from_witnesses(w));
    }
    r.data = json!({ "violations": q_report.violations, "q": alg.qmap(), "d": alg.dmap(), "supplement": (0..alg.size()).map(|x| alg.supplement(x)).collect::<Vec<_>>() });
    Ok(vec![r])
}
