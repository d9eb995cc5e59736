//! The `codense` binary: every engine operation behind a subcommand, with
//! deterministic text or JSON reports.
//!
//! Exit codes: 0 when every claim passes (evidence counts as a pass with a
//! stamped restriction), 1 when a mathematical counterexample was found,
//! 2 on parse or resource errors.

use clap::{Parser, Subcommand, ValueEnum};
use codense_core::bkshadow::{self, builtins, FiniteRing};
use codense_core::budget::Budget;
use codense_core::error::EngineError;
use codense_core::fincat::concrete::{finset_object, finset_window, finvect_window};
use codense_core::fincat::io::CategoryFile;
use codense_core::fincat::{builders, ConcreteCategory, FinFunctor, ObjId};
use codense_core::kan;
use codense_core::monadkit::{self, SetMonad};
use codense_core::report::Report;
use codense_core::set::LSet;
use codense_core::simplex;
use codense_core::suite;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "codense",
    version,
    about = "Finite category theory verification engine"
)]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every category axiom of a category file
    ValidateCategory { file: PathBuf },

    /// Enumerate the codensity value of a full subcategory selection
    Codensity {
        /// ambient: a category file with underlying sets, or `finset:N` / `finvect:P.N`
        #[arg(long)]
        ambient: String,
        /// comma-separated object ids spanning the selection
        #[arg(long)]
        subcat: String,
        /// the object to evaluate at
        #[arg(long)]
        object: String,
    },

    /// Count coaugmentation-compatible transformations into the codensity functor
    Terminality {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        subcat: String,
        /// window `a..b` of finite-set sizes
        #[arg(long, default_value = "0..3")]
        window: String,
    },

    /// Retract closure of a selection and value invariance across it
    RetractClosure {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        subcat: String,
        #[arg(long, default_value = "0..3")]
        window: String,
    },

    /// Search a reflector onto a full subcategory and verify it
    Localize {
        /// category file or `builtin:<name>`
        category: String,
        #[arg(long)]
        subcat: String,
    },

    /// Initial-functor criterion for a full subcategory inclusion
    InitialCheck {
        category: String,
        /// objects spanning the included subcategory
        #[arg(long)]
        subcat: String,
    },

    /// Exhaustive monad law check over a size window
    MonadCheck {
        #[arg(long)]
        monad: String,
        #[arg(long, default_value = "0..4")]
        window: String,
    },

    /// Enumerate algebra structures on one set size
    Algebras {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        size: usize,
    },

    /// Image/algebra/split/retract chain over a window
    Isar {
        #[arg(long)]
        monad: String,
        #[arg(long, default_value = "0..4")]
        window: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },

    /// Completion subsets and their invariants over a window
    Fakir {
        #[arg(long)]
        monad: String,
        #[arg(long, default_value = "0..3")]
        window: String,
    },

    /// Compare the completion with codensity over the truncated algebra spectrum
    FakirVsCodensity {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        object_size: usize,
        /// comma-separated spectrum size bounds
        #[arg(long, default_value = "1,2,3,4")]
        ladder: String,
    },

    /// Realize max-preserving ordinal maps through an algebra and verify functoriality
    Walking {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        carrier: usize,
        #[arg(long, default_value_t = 4)]
        maxcard: usize,
    },

    /// Nerve of a category, optionally written as a simplicial set file
    Nerve {
        category: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// write the simplicial set itself to this path
        #[arg(long)]
        sset: Option<PathBuf>,
    },

    /// Free basis of the chain nerve of the augmented ordinal category
    BasisCheck {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long = "B", default_value_t = 4)]
        bound: usize,
    },

    /// Horn generators of the chain nerve
    HornGenerators {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long = "B", default_value_t = 4)]
        bound: usize,
    },

    /// Stage filtration and horn annotation of the chain-nerve presentation
    Filtration {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long = "B", default_value_t = 4)]
        bound: usize,
    },

    /// Horn lifting of a nerve (or a simplicial set file) over the point
    LiftingCheck {
        /// category (`builtin:...` or file) or `sset:<path>` for a
        /// simplicial set file
        category: String,
        #[arg(long, default_value = "kan")]
        class: String,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },

    /// Algebra spectrum of the affine-span monad of a ring
    BkShadow {
        #[arg(long, default_value = "Z/2")]
        ring: String,
        #[arg(long, default_value = "0..4")]
        window: String,
    },

    /// Run a verification suite: `paper` or `quick`
    Suite { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::from_env();
    match run(&cli, &budget) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, budget: &Budget) -> Result<Report, EngineError> {
    match &cli.command {
        Command::ValidateCategory { file } => {
            let text = std::fs::read_to_string(file)?;
            let cat = CategoryFile::from_json(&text)?.to_category()?;
            Ok(cat.validate())
        }
        Command::Codensity {
            ambient,
            subcat,
            object,
        } => {
            let ambient = load_ambient(ambient)?;
            let d = parse_objects(subcat);
            let v = kan::codensity_value(&ambient, &d, &ObjId::new(object.clone()), budget)?;
            let mut report = Report::new("codensity")
                .param("ambient", &ambient.base().name)
                .param("selection", subcat)
                .param("object", object);
            report.set_param("value-size", v.families.len());
            report.push(codense_core::report::Claim::pass(
                "naturality families enumerated exhaustively",
                format!("{} assignment slots", v.pairs.len()),
                format!("{} families", v.families.len()),
            ));
            Ok(report)
        }
        Command::Terminality {
            ambient,
            subcat,
            window,
        } => {
            let ambient = load_ambient(ambient)?;
            let d = parse_objects(subcat);
            let window: Vec<ObjId> = parse_range(window)?.map(finset_object).collect();
            let (t, _) = kan::codensity_functor(&ambient, &d, &window, budget)?;
            let idf = kan::WindowedEndofunctor::identity(&ambient, &window);
            let self_count = kan::terminality_count(&ambient, &t, &t, budget)?;
            let id_count = kan::terminality_count(&ambient, &idf, &t, budget)?;
            let mut report = Report::new("terminality")
                .param("ambient", &ambient.base().name)
                .param("selection", subcat);
            report.push(codense_core::report::Claim::of_bool(
                "unique endomorphism under coaugmentation",
                format!("{} window objects", window.len()),
                self_count == 1,
                format!("{self_count} transformations"),
            ));
            report.push(codense_core::report::Claim::of_bool(
                "unique transformation from the identity functor",
                format!("{} window objects", window.len()),
                id_count == 1,
                format!("{id_count} transformations"),
            ));
            Ok(report)
        }
        Command::RetractClosure {
            ambient,
            subcat,
            window,
        } => {
            let ambient = load_ambient(ambient)?;
            let d = parse_objects(subcat);
            let window: Vec<ObjId> = parse_range(window)?.map(finset_object).collect();
            kan::closure_invariance_check(&ambient, &d, &window, budget)
        }
        Command::Localize { category, subcat } => {
            let c = load_category(category)?;
            let d = parse_objects(subcat);
            match kan::reflector_and_localization(&c, &d)? {
                None => {
                    let mut report = Report::new("localize").param("category", &c.name);
                    report.push(codense_core::report::Claim::fail(
                        "a reflector exists",
                        format!("{} objects", c.objects().len()),
                        "no initial object in some under-comma category",
                    ));
                    Ok(report)
                }
                Some(loc) => kan::localization_check(&c, &d, &loc),
            }
        }
        Command::InitialCheck { category, subcat } => {
            let c = load_category(category)?;
            let d = parse_objects(subcat);
            let sub = Arc::new(builders::full_subcategory(&c, &d, "selection"));
            let f = FinFunctor::full_inclusion(&sub, &c)?;
            let (report, _) = kan::is_initial_functor(&f);
            Ok(report)
        }
        Command::MonadCheck { monad, window } => {
            let m = load_monad(monad)?;
            let window: Vec<LSet> = parse_range(window)?.map(LSet::skeletal).collect();
            monadkit::monad_law_check(m.as_ref(), &window, budget)
        }
        Command::Algebras { monad, size } => {
            let m = load_monad(monad)?;
            let x = LSet::skeletal(*size);
            let found = monadkit::algebra_search(m.as_ref(), &x, budget)?;
            let mut verified = 0usize;
            for a in &found {
                if monadkit::verify_algebra(m.as_ref(), &x, a, budget)? {
                    verified += 1;
                }
            }
            let mut report = Report::new("algebras")
                .param("monad", m.name())
                .param("size", size);
            report.push(codense_core::report::Claim::of_bool(
                "every enumerated structure satisfies both axioms",
                format!("size {size}"),
                verified == found.len(),
                format!("{} structures", found.len()),
            ));
            Ok(report)
        }
        Command::Isar {
            monad,
            window,
            depth,
        } => {
            let m = load_monad(monad)?;
            let window: Vec<LSet> = parse_range(window)?.map(LSet::skeletal).collect();
            let (report, _) = monadkit::isar_chain_check(m.as_ref(), &window, *depth, budget)?;
            Ok(report)
        }
        Command::Fakir { monad, window } => {
            let m = load_monad(monad)?;
            let window: Vec<LSet> = parse_range(window)?.map(LSet::skeletal).collect();
            monadkit::fakir_check(m.as_ref(), &window, budget)
        }
        Command::FakirVsCodensity {
            monad,
            object_size,
            ladder,
        } => {
            let m = load_monad(monad)?;
            let ladder: Vec<usize> = ladder
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| EngineError::Parse(format!("bad ladder entry `{s}`")))
                })
                .collect::<Result<_, _>>()?;
            monadkit::fakir::fakir_vs_codensity(
                m.as_ref(),
                &LSet::skeletal(*object_size),
                &ladder,
                budget,
            )
        }
        Command::Walking {
            monad,
            carrier,
            maxcard,
        } => {
            let m = load_monad(monad)?;
            let x = LSet::skeletal(*carrier);
            let algebras = monadkit::algebra_search(m.as_ref(), &x, budget)?;
            let Some(a) = algebras.first() else {
                return Err(EngineError::structural(format!(
                    "no algebra structure on size {carrier} for {}",
                    m.name()
                )));
            };
            monadkit::walking_action_check(m.as_ref(), &x, a, *maxcard, budget)
        }
        Command::Nerve {
            category,
            dim,
            sset,
        } => {
            let c = load_category(category)?;
            let n = simplex::nerve(&c, *dim)?;
            let mut report = Report::new("nerve")
                .param("category", &c.name)
                .param("dim", dim);
            for (k, level) in n.levels.iter().enumerate() {
                report.set_param(format!("level-{k}"), level.len());
            }
            report.push(codense_core::report::Claim::pass(
                "simplicial identities verified",
                format!("dimensions ≤ {dim}"),
                String::new(),
            ));
            if let Some(path) = sset {
                std::fs::write(path, n.to_json())?;
            }
            Ok(report)
        }
        Command::BasisCheck { k, bound } => simplex::verify_basis_ndelta_plus(*k, *bound, budget),
        Command::HornGenerators { k, bound } => {
            simplex::verify_horn_generators_ndelta_plus(*k, *bound, budget)
        }
        Command::Filtration { k, bound } => {
            let (pres, horn) = simplex::ndelta_presentation(*k, *bound, budget)?;
            let mut report = simplex::free_map_filtration(&pres, *k)?;
            let annotation = simplex::verify_horn_annotation(&pres, &horn, *k)?;
            for c in annotation.claims {
                report.push(c);
            }
            if let Some(class) = annotation.params.get("index-class") {
                report.set_param("index-class", class);
            }
            Ok(report)
        }
        Command::LiftingCheck {
            category,
            class,
            maxdim,
        } => {
            let n = if let Some(path) = category.strip_prefix("sset:") {
                let text = std::fs::read_to_string(path)?;
                let s = simplex::TruncatedSSet::from_json(&text)?;
                s.check_identities()?;
                s
            } else {
                let c = load_category(category)?;
                simplex::nerve(&c, *maxdim)?
            };
            let p = simplex::SimplicialMap::to_point(&n);
            simplex::horn_lifting_check(&p, simplex::HornClass::parse(class)?, *maxdim)
        }
        Command::BkShadow { ring, window } => {
            let ring = load_ring(ring)?;
            let window: Vec<LSet> = parse_range(window)?.map(LSet::skeletal).collect();
            bkshadow::kr_shadow(&ring, &window, budget)
        }
        Command::Suite { name } => match name.as_str() {
            "paper" => suite::paper_suite(budget),
            "quick" => suite::quick_suite(budget),
            other => Err(EngineError::Parse(format!(
                "unknown suite `{other}` (paper|quick)"
            ))),
        },
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, EngineError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| EngineError::Parse(format!("expected a window `a..b`, got `{s}`")))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| EngineError::Parse(format!("bad window start `{a}`")))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| EngineError::Parse(format!("bad window end `{b}`")))?;
    Ok(a..=b)
}

fn parse_objects(s: &str) -> Vec<ObjId> {
    s.split(',')
        .map(|x| ObjId::new(x.trim().to_string()))
        .filter(|o| !o.0.is_empty())
        .collect()
}

fn load_monad(spec: &str) -> Result<Box<dyn SetMonad>, EngineError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtins::builtin_monad(name);
    }
    if let Some(sizes) = spec.strip_prefix("codensity:") {
        let d: Vec<usize> = sizes
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| EngineError::Parse(format!("bad size `{s}`")))
            })
            .collect::<Result<_, _>>()?;
        return Ok(Box::new(kan::codensity_set_monad(d)));
    }
    builtins::builtin_monad(spec)
}

fn load_category(spec: &str) -> Result<codense_core::fincat::Cat, EngineError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let cat = match name {
            "terminal" => builders::terminal(),
            "arrow" => builders::arrow(),
            _ => {
                if let Some(n) = name.strip_prefix("chain:") {
                    builders::poset_chain("chain", n.parse().map_err(|_| bad_builtin(name))?)
                } else if let Some(n) = name.strip_prefix("cyclic:") {
                    builders::cyclic_group(n.parse().map_err(|_| bad_builtin(name))?)
                } else if let Some(n) = name.strip_prefix("delta-plus:") {
                    builders::delta_plus_window(n.parse().map_err(|_| bad_builtin(name))?)
                } else if let Some(n) = name.strip_prefix("delta:") {
                    builders::delta_window(n.parse().map_err(|_| bad_builtin(name))?)
                } else {
                    return Err(bad_builtin(name));
                }
            }
        };
        return Ok(Arc::new(cat));
    }
    let text = std::fs::read_to_string(spec)?;
    Ok(Arc::new(CategoryFile::from_json(&text)?.to_category()?))
}

fn load_ring(spec: &str) -> Result<FiniteRing, EngineError> {
    if std::path::Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec)?;
        return FiniteRing::from_json(&text);
    }
    FiniteRing::parse(spec)
}

fn bad_builtin(name: &str) -> EngineError {
    EngineError::Parse(format!(
        "unknown builtin category `{name}` (terminal, arrow, chain:N, cyclic:N, delta:N, delta-plus:N)"
    ))
}

fn load_ambient(spec: &str) -> Result<ConcreteCategory, EngineError> {
    if let Some(n) = spec.strip_prefix("finset:") {
        let n: usize = n
            .parse()
            .map_err(|_| EngineError::Parse(format!("bad size bound in `{spec}`")))?;
        return Ok(finset_window(n));
    }
    if let Some(rest) = spec.strip_prefix("finvect:") {
        let (p, d) = rest
            .split_once('.')
            .ok_or_else(|| EngineError::Parse(format!("expected `finvect:P.N`, got `{spec}`")))?;
        let p: usize = p
            .parse()
            .map_err(|_| EngineError::Parse(format!("bad field order in `{spec}`")))?;
        let d: usize = d
            .parse()
            .map_err(|_| EngineError::Parse(format!("bad dimension in `{spec}`")))?;
        return Ok(finvect_window(p, d));
    }
    let text = std::fs::read_to_string(spec)?;
    CategoryFile::from_json(&text)?.to_concrete()
}
