use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxeter_core::cartan::{cartan_matrix, resolve_automorphism, AutoSpec, DynkinType, Family};
use coxeter_core::corpus::{corpus_cases, export_corpus, find_cases, verify_all};
use coxeter_core::coxeter::{analyze_gluing_in, analyze_in, moduli_weights};
use coxeter_core::report::{AnalysisDoc, CaseError, GluingDoc, ReportDocument, VerificationDoc, WeightsDoc};
use coxeter_core::roots::{generate_roots, CoweightVector};
use coxeter_core::weyl::from_word;
use coxeter_core::{Error, ExtAffineElement};

#[derive(Parser)]
#[command(name = "coxeter", version, about = "Twisted Coxeter elements and the bundle data they determine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct TypeArgs {
    /// Family letter A..G
    #[arg(long = "type")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a twisted Coxeter element.
    Analyze {
        #[command(flatten)]
        ty: TypeArgs,
        /// id, gamma, gamma^l or tau
        #[arg(long, default_value = "id")]
        auto: AutoSpec,
        /// Affine nodes, one per sigma-orbit, in product order (default: smallest node of each orbit)
        #[arg(long, value_delimiter = ',')]
        reps: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the engine against the printed reference cases.
    Verify {
        /// Case id, or a prefix such as "E_" or "D_4"
        #[arg(long = "case")]
        case: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Weights of the weighted projective moduli space.
    Weights {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "id")]
        auto: AutoSpec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Semistability verdict for a gluing element (t_mu, w).
    Gluing {
        #[command(flatten)]
        ty: TypeArgs,
        /// Translation in fundamental-coweight coordinates
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        translation: Vec<i64>,
        /// Finite part as a word in simple reflections (1-based), applied right to left
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the reference cases as JSON.
    Corpus,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::Structural(_) => Failure::Compute(e.to_string()),
        }
    }
}

/// Writes to stdout; a closed pipe (`coxeter ... | head`) is not an error.
fn write_out(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn emit(doc: &ReportDocument, format: Format) {
    match format {
        Format::Json => write_out(&format!("{}\n", doc.to_json())),
        Format::Text => write_out(&doc.to_text()),
    }
}

fn dynkin(t: &TypeArgs) -> Result<DynkinType, Failure> {
    Ok(DynkinType::new(t.family, t.rank)?)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Analyze { ty, auto, reps, format } => {
            let c = cartan_matrix(dynkin(&ty)?);
            let rs = generate_roots(&c);
            let sigma = resolve_automorphism(&c, auto)?;
            let a = analyze_in(&rs, &sigma, reps.as_deref())?;
            emit(&ReportDocument::Analysis(AnalysisDoc::new(&a, Some(auto))), format);
            Ok(true)
        }
        Command::Weights { ty, auto, format } => {
            let t = dynkin(&ty)?;
            let c = cartan_matrix(t);
            let sigma = resolve_automorphism(&c, auto)?;
            let weights = moduli_weights(&c, &sigma)?;
            let doc = WeightsDoc {
                ty: t.to_string(),
                rank: t.rank(),
                automorphism: auto.to_string(),
                dimension: weights.len() - 1,
                weights,
            };
            emit(&ReportDocument::Weights(doc), format);
            Ok(true)
        }
        Command::Gluing { ty, translation, word, format } => {
            let t = dynkin(&ty)?;
            let c = cartan_matrix(t);
            let rs = generate_roots(&c);
            if translation.len() != t.rank() {
                return Err(Failure::Usage(format!("translation needs {} coordinates", t.rank())));
            }
            if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > t.rank()) {
                return Err(Failure::Usage(format!("reflection index {bad} out of range 1..={}", t.rank())));
            }
            let w = from_word(&rs, &word.iter().map(|i| i - 1).collect::<Vec<_>>());
            let x = ExtAffineElement::new(CoweightVector::from_ints(&translation), w)?;
            let report = analyze_gluing_in(&rs, &x)?;
            emit(&ReportDocument::Gluing(GluingDoc::new(t, &report)), format);
            Ok(true)
        }
        Command::Verify { case, format } => {
            let all = corpus_cases();
            let selected: Vec<_> = match &case {
                Some(f) => {
                    let hits = find_cases(&all, f);
                    if hits.is_empty() {
                        return Err(Failure::Usage(format!("no reference case matches {f:?}")));
                    }
                    hits.into_iter().cloned().collect()
                }
                None => all,
            };
            let mut doc = VerificationDoc { results: Vec::new(), errors: Vec::new(), passed: 0, failed: 0 };
            for (c, r) in selected.iter().zip(verify_all(&selected)) {
                match r {
                    Ok(r) => {
                        if r.pass {
                            doc.passed += 1;
                        } else {
                            doc.failed += 1;
                        }
                        doc.results.push(r);
                    }
                    Err(e) => doc.errors.push(CaseError { case_id: c.id.clone(), error: e.to_string() }),
                }
            }
            let ok = doc.all_pass();
            match format {
                Format::Json => write_out(&format!("{}\n", ReportDocument::Verification(doc).to_json())),
                Format::Text => write_out(&verification_text(&doc)),
            }
            Ok(ok)
        }
        Command::Corpus => {
            let v = export_corpus(&corpus_cases());
            write_out(&format!("{}\n", serde_json::to_string_pretty(&v).expect("corpus serializes")));
            Ok(true)
        }
    }
}

fn verification_text(doc: &VerificationDoc) -> String {
    use coxeter_core::corpus::FieldStatus;
    use std::fmt::Write;
    let mut s = String::new();
    for r in &doc.results {
        let _ = writeln!(s, "{} {}", if r.pass { "PASS" } else { "FAIL" }, r.case_id);
        for f in &r.fields {
            if let FieldStatus::Mismatch { expected, computed } = &f.status {
                let _ = writeln!(s, "    {}: expected {expected}, computed {computed}", f.field);
            }
        }
        for n in &r.notes {
            let _ = writeln!(s, "    note: {n}");
        }
    }
    for e in &doc.errors {
        let _ = writeln!(s, "ERROR {}: {}", e.case_id, e.error);
    }
    let _ = writeln!(s, "{} passed, {} failed, {} errors", doc.passed, doc.failed, doc.errors.len());
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
