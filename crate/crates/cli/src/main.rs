//! `gammasg`: command-line front end for finite Γ-semigroup computations.
//!
//! Exit codes: 0 success / property holds, 1 property fails, 2 usage or
//! input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gammasg::census::{self, CensusBounds, CensusMode, CensusOptions};
use gammasg::maps::{self, lemma_certificate, lemma_witness_pairs, theorem_certificate};
use gammasg::{
    gsg, parse_gsg, example_semigroup, example_names, report, serialize_gsg, DisplayNames,
    GammaGroupoid, GammaSemigroup, GreenRelation, GreenStructure, Relation, Side,
};

#[derive(Parser)]
#[command(name = "gammasg", version, about = "Finite Γ-semigroups: validation, Green's relations, Green's Lemma/Theorem certificates, census")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelArg {
    R,
    L,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelatedArg {
    R,
    L,
    H,
    #[value(name = "RoL", alias = "rol")]
    RoL,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check mixed associativity; lists every violation.
    Validate { file: PathBuf },
    /// Print the R, L and H partitions.
    Green {
        file: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        rel: Option<RelArg>,
    },
    /// Decide one Green relation between two elements.
    Related {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, ignore_case = true)]
        rel: RelatedArg,
    },
    /// Render the egg-box diagram, one stanza per block.
    Eggbox { file: PathBuf },
    /// Principal one-sided ideal of an element.
    Ideals {
        file: PathBuf,
        #[arg(long)]
        elem: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Check that R is a left congruence and L a right congruence.
    Congruence { file: PathBuf },
    /// List the witnesses translating a to b.
    Witnesses {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Green's Lemma certificate for an R-related pair.
    Lemma {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// One certificate per witness pair instead of the first.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Green's Theorem certificate for an R∘L-related pair.
    Theorem {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
    },
    /// Enumerate Γ-semigroups of order n with k operations.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Count up to isomorphism instead of labeled tables.
        #[arg(long)]
        iso: bool,
        /// Write one .gsg per table plus manifest.txt into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the canonical form of a table family.
    Canonical { file: PathBuf },
    /// Decide isomorphism of two table families.
    Iso { first: PathBuf, second: PathBuf },
    /// Print the order-3 example Γ-semigroup.
    Example,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn fails(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type Outcome = Result<(String, u8), Failure>;

fn load(path: &Path) -> Result<gsg::GsgDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_gsg(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_semigroup(path: &Path) -> Result<(GammaSemigroup, DisplayNames), Failure> {
    let doc = load(path)?;
    match doc.groupoid.into_semigroup() {
        Ok(g) => Ok((g, doc.names)),
        Err(v) => Err(fails(format!(
            "{}: not a Γ-semigroup ({} associativity violations; run `validate`)",
            path.display(),
            v.len()
        ))),
    }
}

fn element(names: &DisplayNames, g: &GammaGroupoid, token: &str) -> Result<usize, Failure> {
    names
        .resolve_element(token, g.n())
        .ok_or_else(|| usage(format!("unknown element `{token}`")))
}

fn map_failure(e: maps::MapError) -> Failure {
    match e {
        maps::MapError::Index(_) | maps::MapError::InvalidWitness { .. } => usage(e.to_string()),
        _ => fails(e.to_string()),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let doc = load(&file)?;
            let rep = doc.groupoid.check_associativity();
            let code = if rep.holds() { 0 } else { 1 };
            Ok((report::validation(&doc.groupoid, &doc.names, &rep), code))
        }
        Command::Green { file, rel } => {
            let (g, names) = load_semigroup(&file)?;
            let gs = GreenStructure::new(&g);
            let rels = match rel {
                Some(RelArg::R) => vec![Relation::R],
                Some(RelArg::L) => vec![Relation::L],
                Some(RelArg::H) => vec![Relation::H],
                None => vec![Relation::R, Relation::L, Relation::H],
            };
            let out = rels
                .into_iter()
                .map(|r| report::partition(&names, r, gs.partition(r)))
                .collect();
            Ok((out, 0))
        }
        Command::Related { file, a, b, rel } => {
            let (g, names) = load_semigroup(&file)?;
            let (x, y) = (element(&names, &g, &a)?, element(&names, &g, &b)?);
            let rel = match rel {
                RelatedArg::R => GreenRelation::R,
                RelatedArg::L => GreenRelation::L,
                RelatedArg::H => GreenRelation::H,
                RelatedArg::RoL => GreenRelation::RoL,
            };
            let res = GreenStructure::new(&g)
                .related(x, y, rel)
                .map_err(|e| usage(e.to_string()))?;
            let mut out = format!("{} {} {} {}\n", rel, names.element(x), names.element(y), res.holds());
            if let Some(m) = res.intermediary() {
                out.push_str(&format!("via {}\n", names.element(m)));
            }
            Ok((out, if res.holds() { 0 } else { 1 }))
        }
        Command::Eggbox { file } => {
            let (g, names) = load_semigroup(&file)?;
            Ok((report::eggbox(&names, &GreenStructure::new(&g).eggbox()), 0))
        }
        Command::Ideals { file, elem, side } => {
            let (g, names) = load_semigroup(&file)?;
            let a = element(&names, &g, &elem)?;
            let side = Side::from(side);
            let ideal = gammasg::green::principal_ideal(&g, a, side).map_err(|e| usage(e.to_string()))?;
            Ok((report::ideal(&names, a, side, &ideal), 0))
        }
        Command::Congruence { file } => {
            let (g, names) = load_semigroup(&file)?;
            let (r, l) = GreenStructure::new(&g).congruence_check();
            let code = if r.holds() && l.holds() { 0 } else { 1 };
            Ok((report::congruence(&names, &r) + &report::congruence(&names, &l), code))
        }
        Command::Witnesses { file, a, b, side } => {
            let (g, names) = load_semigroup(&file)?;
            let (x, y) = (element(&names, &g, &a)?, element(&names, &g, &b)?);
            let ws = maps::find_witnesses(&g, x, y, side.into()).map_err(|e| usage(e.to_string()))?;
            let out: String = ws
                .iter()
                .map(|w| format!("witness {} {}\n", names.op(w.op), names.ext(w.elem)))
                .collect();
            Ok((out, if ws.is_empty() { 1 } else { 0 }))
        }
        Command::Lemma {
            file,
            a,
            b,
            all_witnesses,
        } => {
            let (g, names) = load_semigroup(&file)?;
            let (x, y) = (element(&names, &g, &a)?, element(&names, &g, &b)?);
            let gs = GreenStructure::new(&g);
            if !all_witnesses {
                let cert = lemma_certificate(&gs, x, y, None).map_err(map_failure)?;
                return Ok((report::lemma(&names, &cert), 0));
            }
            if !gs.r(x, y) {
                return Err(map_failure(maps::MapError::NotRRelated { a: x, b: y }));
            }
            let pairs = lemma_witness_pairs(&g, x, y).map_err(|e| usage(e.to_string()))?;
            let mut certs = Vec::with_capacity(pairs.len());
            for pair in pairs {
                certs.push(report::lemma(
                    &names,
                    &lemma_certificate(&gs, x, y, Some(pair)).map_err(map_failure)?,
                ));
            }
            Ok((certs.join("\n"), 0))
        }
        Command::Theorem { file, a, c } => {
            let (g, names) = load_semigroup(&file)?;
            let (x, y) = (element(&names, &g, &a)?, element(&names, &g, &c)?);
            let cert = theorem_certificate(&GreenStructure::new(&g), x, y).map_err(map_failure)?;
            Ok((report::theorem(&names, &cert), 0))
        }
        Command::Enumerate {
            n,
            k,
            iso,
            emit,
            threads,
        } => {
            if threads == Some(0) {
                return Err(usage("--threads must be at least 1"));
            }
            let mode = if iso { CensusMode::UpToIso } else { CensusMode::Labeled };
            let opts = CensusOptions {
                bounds: CensusBounds::from_env(),
                threads,
                emit: emit.is_some(),
            };
            let result = census::enumerate_with(n, k, mode, &opts).map_err(|e| usage(e.to_string()))?;
            if let Some(dir) = emit {
                fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                for (name, text) in report::census_files(&result) {
                    fs::write(dir.join(&name), text).map_err(|e| usage(format!("{name}: {e}")))?;
                }
                fs::write(dir.join("manifest.txt"), report::census_manifest(&result))
                    .map_err(|e| usage(format!("manifest.txt: {e}")))?;
            }
            Ok((report::census_summary(&result), 0))
        }
        Command::Canonical { file } => {
            let doc = load(&file)?;
            let key = census::canonical_form(&doc.groupoid);
            let rep = census::canonical_representative(&doc.groupoid);
            let text = serialize_gsg(&rep, &DisplayNames::default()).map_err(|e| usage(e.to_string()))?;
            Ok((format!("key {}\n{}", key.to_hex(), text), 0))
        }
        Command::Iso { first, second } => {
            let (g, h) = (load(&first)?.groupoid, load(&second)?.groupoid);
            match census::isomorphic(&g, &h) {
                Some(w) => {
                    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    Ok((format!("isomorphic true\nphi {}\npsi {}\n", join(&w.phi), join(&w.psi)), 0))
                }
                None => Ok(("isomorphic false\n".to_string(), 1)),
            }
        }
        Command::Example => {
            let (e, o) = example_names();
            let text = serialize_gsg(example_semigroup().groupoid(), &DisplayNames::new(e, o))
                .map_err(|e| usage(e.to_string()))?;
            Ok((text, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
